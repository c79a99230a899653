//! Hurwitz determinants and the sign machinery built on them: standard and
//! Frobenius sign-change counting, right-half-plane root counting, and the
//! Hurwitz stability test.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{eps_zero, Scalar, Sign};

/// The table Δ1 .. Δn of leading principal minors of the Hurwitz matrix of a
/// monic polynomial, with the conventions Δ₋₂ = Δ₋₁ = Δ₀ = 1 exposed through
/// [`HurwitzTable::delta`].
#[derive(Debug, Clone, PartialEq)]
pub struct HurwitzTable<T> {
    deltas: Vec<T>,
    // Hadamard bounds of the leading minors; give "zero" a matrix-aware
    // meaning on the float backend.
    scales: Vec<f64>,
}

impl<T: Scalar> HurwitzTable<T> {
    pub fn len(&self) -> usize {
        self.deltas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.deltas.is_empty()
    }

    /// Δj for `j` in `-2 ..= n`; the conventional values below Δ1 are all 1.
    pub fn delta(&self, j: i64) -> T {
        match j {
            -2..=0 => T::one(),
            _ => self.deltas[(j - 1) as usize].clone(),
        }
    }

    pub fn deltas(&self) -> &[T] {
        &self.deltas
    }

    /// Signs of Δ1 .. Δn under the backend policy: exact signs on the exact
    /// backend; on the float backend an entry counts as zero when it is
    /// negligible against the Hadamard bound of its own minor, and that by
    /// itself is not an error (degeneracy is raised by the operations that
    /// need strict signs).
    pub fn signs(&self) -> Vec<Sign> {
        if T::EXACT {
            return self.deltas.iter().map(Scalar::sign).collect();
        }
        self.deltas
            .iter()
            .zip(self.scales.iter().copied())
            .map(|(d, scale)| {
                if d.approx().abs() <= eps_zero() * scale {
                    Sign::Zero
                } else {
                    d.sign()
                }
            })
            .collect()
    }

    /// Requires every Δj nonzero, returning their signs or the index of the
    /// first vanishing determinant.
    pub fn strict_signs(&self) -> Result<Vec<Sign>> {
        let signs = self.signs();
        match signs.iter().position(|s| s.is_zero()) {
            Some(i) => Err(Error::DegenerateHurwitz(i + 1)),
            None => Ok(signs),
        }
    }

    pub fn to_value(&self) -> Value {
        json!({ "deltas": self.deltas.iter().map(|d| d.literal()).collect::<Vec<_>>() })
    }
}

/// Builds the n×n Hurwitz matrix of a monic degree-n polynomial: row `i`,
/// column `k` (0-indexed) holds `a_{2k - i + 1}` with `a_0 = 1` and
/// `a_m = 0` outside `0 ..= n`.
fn hurwitz_matrix<T: Scalar>(p: &Poly<T>) -> Vec<Vec<T>> {
    let n = p.degree();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    let idx = 2 * (k as i64) - (i as i64) + 1;
                    if idx < 0 {
                        T::zero()
                    } else {
                        p.a(idx as usize)
                    }
                })
                .collect()
        })
        .collect()
}

/// Determinant by Gaussian elimination with row pivoting; handles zero pivots
/// and serves as the fallback when the shared-pivot pass cannot continue.
fn det_pivoting<T: Scalar>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    let mut det = T::one();
    let mut negate = false;
    for col in 0..n {
        // pick the pivot: largest magnitude on the float backend, first
        // nonzero on the exact backend
        let pivot_row = if T::EXACT {
            (col..n).find(|&r| !m[r][col].is_zero())
        } else {
            (col..n)
                .filter(|&r| !m[r][col].is_zero())
                .max_by(|&a, &b| {
                    m[a][col]
                        .approx()
                        .abs()
                        .partial_cmp(&m[b][col].approx().abs())
                        .unwrap()
                })
        };
        let Some(pr) = pivot_row else {
            return T::zero();
        };
        if pr != col {
            m.swap(pr, col);
            negate = !negate;
        }
        let pivot = m[col][col].clone();
        det = det * pivot.clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / pivot.clone();
            for c in col..n {
                let sub = factor.clone() * m[col][c].clone();
                m[r][c] = m[r][c].clone() - sub;
            }
        }
    }
    if negate {
        -det
    } else {
        det
    }
}

fn hadamard_bound<T: Scalar>(m: &[Vec<T>], size: usize) -> f64 {
    let mut bound = 1.0f64;
    for row in m.iter().take(size) {
        let norm: f64 = row
            .iter()
            .take(size)
            .map(|x| {
                let v = x.approx();
                v * v
            })
            .sum::<f64>()
            .sqrt();
        bound *= norm.max(1.0);
    }
    bound.max(1.0)
}

/// Computes all n Hurwitz determinants of `p` in one fraction-free
/// elimination pass: after step k of the Bareiss scheme the (k, k) entry is
/// exactly the k+1-st leading principal minor, so all minors come out of a
/// single O(n³) sweep with shared pivots. A vanishing pivot stops the shared
/// pass; the remaining minors are then computed individually with row
/// pivoting (zero minors are legal values here — operations that need strict
/// signs decide what to do about them).
pub fn hurwitz_determinants<T: Scalar>(p: &Poly<T>) -> Result<HurwitzTable<T>> {
    let p = p.require_monic()?;
    let n = p.degree();
    if n == 0 {
        return Err(Error::InvalidInput(
            "Hurwitz determinants need degree ≥ 1".into(),
        ));
    }
    let original = hurwitz_matrix(&p);
    let scales: Vec<f64> = (1..=n).map(|j| hadamard_bound(&original, j)).collect();

    let mut m = original.clone();
    let mut deltas: Vec<T> = Vec::with_capacity(n);
    let mut prev_pivot = T::one();
    for k in 0..n {
        let pivot = m[k][k].clone();
        deltas.push(pivot.clone());
        if k + 1 == n {
            break;
        }
        let pivot_unusable = if T::EXACT {
            pivot.is_zero()
        } else {
            pivot.approx().abs() <= eps_zero() * scales[k]
        };
        if pivot_unusable {
            // shared pivots are gone; finish the remaining minors one by one
            for j in k + 1..n {
                let sub: Vec<Vec<T>> = original[..=j]
                    .iter()
                    .map(|row| row[..=j].to_vec())
                    .collect();
                deltas.push(det_pivoting(sub));
            }
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num =
                    pivot.clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num / prev_pivot.clone();
            }
        }
        prev_pivot = pivot;
    }
    Ok(HurwitzTable { deltas, scales })
}

/// Zero handling for a sign sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroPolicy {
    /// Zeros are errors.
    Standard,
    /// Interior zero runs receive signs by the Frobenius rule; boundary zeros
    /// are errors.
    Frobenius,
}

/// A finite sequence of scalars together with its zero policy.
#[derive(Debug, Clone, PartialEq)]
pub struct SignSequence<T> {
    pub entries: Vec<T>,
    pub zero_policy: ZeroPolicy,
}

impl<T: Scalar> SignSequence<T> {
    pub fn standard(entries: Vec<T>) -> Self {
        SignSequence {
            entries,
            zero_policy: ZeroPolicy::Standard,
        }
    }

    pub fn frobenius(entries: Vec<T>) -> Self {
        SignSequence {
            entries,
            zero_policy: ZeroPolicy::Frobenius,
        }
    }
}

/// Number of sign changes in a sequence with all entries nonzero.
pub fn sign_changes<T: Scalar>(s: &SignSequence<T>) -> Result<usize> {
    debug_assert_eq!(s.zero_policy, ZeroPolicy::Standard);
    let signs = s
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| match e.sign() {
            Sign::Zero => Err(Error::ZeroEntry(i)),
            sign => Ok(sign),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(count_changes(&signs))
}

/// Number of sign changes under the Frobenius rule: an interior run
/// `c_{i+1} = ... = c_{i+j} = 0` flanked by nonzero `c_i`, `c_{i+j+1}` gets
/// the signs `sgn c_{i+ν} = (-1)^{ν(ν-1)/2} sgn c_i`, after which standard
/// counting applies. The first and last entries must be nonzero.
pub fn frobenius_sign_changes<T: Scalar>(s: &SignSequence<T>) -> Result<usize> {
    let raw: Vec<Sign> = s.entries.iter().map(Scalar::sign).collect();
    frobenius_count(&raw)
}

/// Frobenius counting over pre-extracted signs (used by the classifiers,
/// whose zero decisions already went through the table policy).
pub fn frobenius_count(raw: &[Sign]) -> Result<usize> {
    if raw.is_empty() {
        return Ok(0);
    }
    if raw.first().unwrap().is_zero() || raw.last().unwrap().is_zero() {
        return Err(Error::BoundaryZero);
    }
    let mut assigned = raw.to_vec();
    let mut i = 0;
    while i < assigned.len() {
        if !assigned[i].is_zero() {
            i += 1;
            continue;
        }
        // zero run starting at i; the anchor is the entry before it
        let anchor = assigned[i - 1];
        let mut nu = 1usize;
        while i < assigned.len() && assigned[i].is_zero() {
            // (-1)^{ν(ν-1)/2}
            let flip = (nu * (nu - 1) / 2) % 2 == 1;
            assigned[i] = if flip { anchor.flip() } else { anchor };
            nu += 1;
            i += 1;
        }
    }
    Ok(count_changes(&assigned))
}

fn count_changes(signs: &[Sign]) -> usize {
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of roots of `p` in the open right half-plane, by sign changes over
/// the Hurwitz determinant table. Requires every Δj nonzero. Both displayed
/// forms — the ratio sequence `v(1, Δ1, Δ2/Δ1, ..., Δn/Δn-1)` and the split
/// `v(1, Δ1, Δ3, ...) + v(1, Δ2, Δ4, ...)` — are computed and must agree.
pub fn rhp_root_count<T: Scalar>(p: &Poly<T>) -> Result<usize> {
    let table = hurwitz_determinants(p)?;
    rhp_root_count_from_table(&table)
}

pub fn rhp_root_count_from_table<T: Scalar>(table: &HurwitzTable<T>) -> Result<usize> {
    let signs = table.strict_signs()?;
    // ratio form: sign(Δj / Δj-1) = sign Δj · sign Δj-1
    let mut ratio = Vec::with_capacity(signs.len() + 1);
    ratio.push(Sign::Pos);
    ratio.push(signs[0]);
    for j in 1..signs.len() {
        ratio.push(signs[j].mul(signs[j - 1]));
    }
    let m_ratio = count_changes(&ratio);

    // split form
    let odd: Vec<Sign> = std::iter::once(Sign::Pos)
        .chain(signs.iter().copied().step_by(2))
        .collect();
    let even: Vec<Sign> = std::iter::once(Sign::Pos)
        .chain(signs.iter().copied().skip(1).step_by(2))
        .collect();
    let m_split = count_changes(&odd) + count_changes(&even);

    if m_ratio != m_split {
        return Err(Error::Inconsistency(format!(
            "right-half-plane counts disagree: ratio form {m_ratio}, split form {m_split}"
        )));
    }
    Ok(m_ratio)
}

/// Hurwitz stability: all zeros in the open left half-plane, equivalently all
/// Hurwitz determinants positive. Zero or negative minors simply yield false.
pub fn is_hurwitz_stable<T: Scalar>(p: &Poly<T>) -> Result<bool> {
    let table = hurwitz_determinants(p)?;
    Ok(table.signs().iter().all(|s| s.is_pos()))
}
