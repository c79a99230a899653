//! Inverse spectral solvers: reconstruct the unique Schwarz matrix from a
//! polynomial or a spectrum, with theorem-specific precondition checks and
//! sign-pattern postconditions.

use serde_json::{json, Value};

use crate::classify::{bebiano_case, Classification};
use crate::error::{Error, Result};
use crate::hurwitz::hurwitz_determinants;
use crate::poly::{from_roots, Poly};
use crate::scalar::{Scalar, Sign};
use crate::schwarz::{charpoly, classify_by_sign_pattern, cumulative_products, SchwarzMatrix, SnView};
use crate::spectrum::Spectrum;
use crate::wall::wall_from_determinants;

/// Result of an inverse solve: the reconstructed matrix, its sign-pattern
/// classification, and the named precondition checks that were run.
#[derive(Debug, Clone, PartialEq)]
pub struct InverseReport<T> {
    pub matrix: SchwarzMatrix<T>,
    pub verdict: Classification,
    pub checked: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &str, detail: String) -> Self {
        Check {
            name: name.into(),
            passed: true,
            detail,
        }
    }
}

impl<T: Scalar> InverseReport<T> {
    fn build(matrix: SchwarzMatrix<T>, checked: Vec<Check>) -> Self {
        let verdict = classify_by_sign_pattern(&matrix);
        InverseReport {
            matrix,
            verdict,
            checked,
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "matrix": self.matrix.to_value(),
            "verdict": self.verdict.to_value(),
            "checked": self
                .checked
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect::<Vec<_>>(),
        })
    }
}

/// The unique Schwarz matrix whose characteristic polynomial is `p`;
/// requires every Hurwitz determinant of `p` nonzero.
pub fn schwarz_from_polynomial<T: Scalar>(p: &Poly<T>) -> Result<InverseReport<T>> {
    let p = p.require_monic()?;
    let b = wall_from_determinants(&p)?;
    let matrix = SchwarzMatrix::new(b.b().to_vec())?;
    debug_assert_eq!(charpoly(&matrix), p);
    let checked = vec![Check::pass(
        "hurwitz determinants nonzero",
        format!("all {} determinants nonzero", p.degree()),
    )];
    Ok(InverseReport::build(matrix, checked))
}

/// The unique Schwarz matrix with all entries positive and the given stable
/// spectrum (every root in the open left half-plane).
pub fn stable_from_spectrum<T: Scalar>(s: &Spectrum<T>) -> Result<InverseReport<T>> {
    for root in s.roots() {
        if root.re.sign() != Sign::Neg {
            return Err(Error::SpectrumNotStable(
                crate::spectrum::display_complex(root),
            ));
        }
    }
    let p = from_roots(s)?;
    // stable polynomials satisfy the determinant inequalities automatically
    let report = schwarz_from_polynomial(&p)?;
    if let Some(i) = report.matrix.b().iter().position(|x| x.sign() != Sign::Pos) {
        return Err(Error::Inconsistency(format!(
            "stable reconstruction produced a nonpositive b{i}"
        )));
    }
    let mut checked = vec![
        Check::pass("spectrum stable", "all roots have negative real part".into()),
        Check::pass("entries positive", "all b_k > 0".into()),
    ];
    checked.extend(report.checked.clone());
    Ok(InverseReport {
        checked,
        ..report
    })
}

/// Checks the strictly alternating pattern `λ1 > -λ2 > λ3 > ... > 0` on a
/// list sorted by decreasing absolute value.
fn holtz_pattern<T: Scalar>(sorted: &[T]) -> Result<()> {
    for (idx, x) in sorted.iter().enumerate() {
        let expected = if idx % 2 == 0 { Sign::Pos } else { Sign::Neg };
        if x.sign() != expected {
            return Err(Error::PatternMismatch(format!(
                "λ{} = {} should be {}",
                idx + 1,
                x.literal(),
                if expected == Sign::Pos { "positive" } else { "negative" }
            )));
        }
    }
    for (idx, w) in sorted.windows(2).enumerate() {
        if w[0].abs() <= w[1].abs() {
            return Err(Error::PatternMismatch(format!(
                "|λ{}| must exceed |λ{}|",
                idx + 1,
                idx + 2
            )));
        }
    }
    if let Some(last) = sorted.last() {
        if last.is_zero() {
            return Err(Error::PatternMismatch("λn must be nonzero".into()));
        }
    }
    Ok(())
}

/// The unique Schwarz matrix with all entries negative and the given real
/// simple spectrum satisfying `λ1 > -λ2 > λ3 > ... > (-1)^{n-1} λn > 0`.
/// The input is treated as a set; the solver sorts internally.
pub fn holtz_from_spectrum<T: Scalar>(s: &Spectrum<T>) -> Result<InverseReport<T>> {
    let (reals, pairs) = s.conjugate_partition()?;
    if !pairs.is_empty() {
        return Err(Error::PatternMismatch(
            "spectrum must be real and simple".into(),
        ));
    }
    let mut sorted = reals;
    sorted.sort_by(|a, b| b.abs().partial_cmp(&a.abs()).unwrap());
    holtz_pattern(&sorted)?;
    let p = from_roots(s)?;
    let report = schwarz_from_polynomial(&p)?;
    if let Some(i) = report.matrix.b().iter().position(|x| x.sign() != Sign::Neg) {
        return Err(Error::Inconsistency(format!(
            "reconstruction produced a nonnegative b{i}"
        )));
    }
    let mut checked = vec![
        Check::pass(
            "alternating pattern",
            "λ1 > -λ2 > λ3 > ... > 0 after sorting".into(),
        ),
        Check::pass("entries negative", "all b_k < 0".into()),
    ];
    checked.extend(report.checked.clone());
    Ok(InverseReport {
        checked,
        ..report
    })
}

/// The unique Schwarz matrix whose spectrum is `s`, for any spectrum whose
/// polynomial has nonvanishing Hurwitz determinants. The number of negative
/// cumulative products of the result equals the number of roots in the open
/// right half-plane.
pub fn general_from_spectrum<T: Scalar>(s: &Spectrum<T>) -> Result<InverseReport<T>> {
    let p = from_roots(s)?;
    let report = schwarz_from_polynomial(&p)?;
    let rhp = s
        .roots()
        .iter()
        .filter(|r| r.re.sign() == Sign::Pos)
        .count();
    let neg = cumulative_products(&report.matrix).negative_count();
    if rhp != neg {
        return Err(Error::Inconsistency(format!(
            "negative cumulative products ({neg}) differ from right-half-plane roots ({rhp})"
        )));
    }
    let mut checked = vec![Check::pass(
        "cumulative product count",
        format!("{neg} negative products = {rhp} right-half-plane roots"),
    )];
    checked.extend(report.checked.clone());
    Ok(InverseReport {
        checked,
        ..report
    })
}

/// Which sign-pattern family `sn_from_spectrum` should target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SnFlavor {
    Generalized,
    Almost,
}

/// Reconstructs the one-sign-change matrix of a generalized (or almost
/// generalized) Hurwitz type-I spectrum of order κ whose Hurwitz
/// determinants are negative exactly at the displayed positions
/// (`Δ_{n-2κ+2+4i}` for the generalized flavor, `Δ_{n-2κ+1+4i}` for the
/// almost flavor) and positive elsewhere. The sign-change position is
/// `k = n - 2κ` (generalized) or `k = n - 2κ - 1` (almost); the boundary
/// values `k = n` and `k = -1` reduce to the all-positive and all-negative
/// solvers.
pub fn sn_from_spectrum<T: Scalar>(s: &Spectrum<T>, flavor: SnFlavor) -> Result<InverseReport<T>> {
    let p = from_roots(s)?;
    let n = p.degree();
    let classification = match flavor {
        SnFlavor::Generalized => crate::classify::generalized_hurwitz(&p)?,
        SnFlavor::Almost => crate::classify::almost_generalized_hurwitz(&p)?,
    };
    let view = match flavor {
        SnFlavor::Generalized => classification.generalized_view(),
        SnFlavor::Almost => match classification.kind {
            crate::classify::Kind::AlmostGeneralizedHurwitz => {
                Some((classification.hw_type, classification.order.unwrap_or(0)))
            }
            _ => None,
        },
    };
    let Some((ty, kappa)) = view else {
        return Err(Error::NotGeneralizedHurwitz(format!(
            "spectrum polynomial is {classification}"
        )));
    };
    if ty != crate::classify::HwType::I {
        return Err(Error::NotGeneralizedHurwitz(
            "the one-sign-change form with a > 0 needs a type-I polynomial".into(),
        ));
    }

    // verify the displayed determinant sign pattern
    let table = hurwitz_determinants(&p)?;
    let signs = table.strict_signs()?;
    let offset = match flavor {
        SnFlavor::Generalized => 2i64,
        SnFlavor::Almost => 1i64,
    };
    let start = n as i64 - 2 * kappa as i64 + offset;
    let negative_set: Vec<usize> = (0..)
        .map(|i| start + 4 * i)
        .take_while(|&j| j <= n as i64)
        .filter(|&j| j >= 1)
        .map(|j| j as usize)
        .collect();
    if kappa > 0 {
        let expected_count = (kappa - 1) / 2 + 1;
        if negative_set.len() != expected_count {
            return Err(Error::Inconsistency(format!(
                "expected {expected_count} negative determinants, derived {}",
                negative_set.len()
            )));
        }
    }
    for j in 1..=n {
        let expected_neg = kappa > 0 && negative_set.contains(&j);
        let actual = signs[j - 1];
        if expected_neg && actual != Sign::Neg {
            return Err(Error::SignPatternPreconditionFailed {
                index: j,
                expected: "negative",
                actual: if actual == Sign::Pos { "positive" } else { "zero" },
            });
        }
        if !expected_neg && actual != Sign::Pos {
            return Err(Error::SignPatternPreconditionFailed {
                index: j,
                expected: "positive",
                actual: if actual == Sign::Neg { "negative" } else { "zero" },
            });
        }
    }

    let k = match flavor {
        SnFlavor::Generalized => n as i64 - 2 * kappa as i64,
        SnFlavor::Almost => n as i64 - 2 * kappa as i64 - 1,
    };
    // boundary routing: k = n means no negative entries at all (the stable
    // case), k = -1 means no positive entries at all (the alternating case)
    if k >= n as i64 {
        return stable_from_spectrum(s);
    }
    if k < 0 {
        return holtz_from_spectrum(s);
    }

    let report = schwarz_from_polynomial(&p)?;
    let view = SnView::from_matrix(&report.matrix)?;
    if view.a.sign() != Sign::Pos {
        return Err(Error::InvalidPattern("reconstructed a is not positive".into()));
    }
    if view.k != k as usize {
        return Err(Error::Inconsistency(format!(
            "sign change at k = {}, theorem predicts {k}",
            view.k
        )));
    }
    let mut checked = vec![
        Check::pass(
            "determinant sign pattern",
            format!("negative exactly at Δ{negative_set:?}"),
        ),
        Check::pass("sign change position", format!("k = {k}, order κ = {kappa}")),
    ];
    checked.extend(report.checked.clone());
    Ok(InverseReport {
        checked,
        ..report
    })
}

/// Inverse problem for the matrix with `b = (-a, c1, -c2, ..., -c_{n-1})`,
/// `a, c_j > 0`: the spectrum must match one of the four admissible root
/// distributions and have positive sum (the sum becomes `a`; a zero sum
/// means the problem has no solution).
pub fn bebiano_from_spectrum<T: Scalar>(s: &Spectrum<T>) -> Result<InverseReport<T>> {
    let n = s.len();
    let case = bebiano_case(s, n).ok_or(Error::CaseMismatch)?;
    let sum = s.trace();
    if sum.sign() != Sign::Pos {
        return Err(Error::SumNotPositive(sum.literal()));
    }
    let p = from_roots(s)?;
    let report = schwarz_from_polynomial(&p)?;
    let b = report.matrix.b();
    let pattern_ok = b[0].sign() == Sign::Neg
        && b.len() >= 2
        && b[1].sign() == Sign::Pos
        && b[2..].iter().all(|x| x.sign() == Sign::Neg);
    if !pattern_ok {
        return Err(Error::Inconsistency(
            "reconstruction violates the (-, +, -, ..., -) pattern".into(),
        ));
    }
    let mut checked = vec![
        Check::pass("root distribution", format!("case {case}")),
        Check::pass("positive sum", format!("Σλ = {} > 0", sum.literal())),
        Check::pass("sign pattern", "b = (-a, +c1, -c2, ..., -c_{n-1})".into()),
    ];
    checked.extend(report.checked.clone());
    Ok(InverseReport {
        checked,
        ..report
    })
}

/// The `(a, c)` parameters of a Bebiano-form matrix (top-left `+a`, then
/// `-c1, +c2, ..., +c_{n-1}` below the diagonal), read off its `b` vector.
pub fn bebiano_parameters<T: Scalar>(matrix: &SchwarzMatrix<T>) -> Result<(T, Vec<T>)> {
    let b = matrix.b();
    if b.len() < 2 || b[0].sign() != Sign::Neg || b[1].sign() != Sign::Pos {
        return Err(Error::InvalidPattern(
            "matrix is not in the (-a, +c1, -c2, ...) form".into(),
        ));
    }
    let a = -b[0].clone();
    let mut c = vec![b[1].clone()];
    for (i, x) in b[2..].iter().enumerate() {
        if x.sign() != Sign::Neg {
            return Err(Error::InvalidPattern(format!(
                "entry b{} must be negative",
                i + 2
            )));
        }
        c.push(-x.clone());
    }
    Ok((a, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn b_of<T: Scalar>(r: &InverseReport<T>) -> Vec<T> {
        r.matrix.b().to_vec()
    }

    fn rats(vals: &[i64]) -> Vec<Rat> {
        vals.iter().map(|&v| Rat::from_int(v)).collect()
    }

    #[test]
    fn from_polynomial_worked_examples() {
        let r = schwarz_from_polynomial(&Poly::<Rat>::from_ints(&[1, 6, 11, 6])).unwrap();
        assert_eq!(b_of(&r), rats(&[6, 10, 1]));

        let r = schwarz_from_polynomial(&Poly::<Rat>::from_ints(&[1, -2, -5, 6])).unwrap();
        assert_eq!(b_of(&r), rats(&[-2, -2, -3]));

        assert!(matches!(
            schwarz_from_polynomial(&Poly::<Rat>::from_ints(&[1, 0, 1])),
            Err(Error::DegenerateHurwitz(1))
        ));
    }

    #[test]
    fn stable_solver() {
        let r = stable_from_spectrum(&Spectrum::<Rat>::from_reals(&[-1, -2, -3])).unwrap();
        assert_eq!(b_of(&r), rats(&[6, 10, 1]));

        let r = stable_from_spectrum(&Spectrum::<Rat>::from_pairs_ints(&[(-1, 1)])).unwrap();
        assert_eq!(b_of(&r), rats(&[2, 2]));

        assert!(matches!(
            stable_from_spectrum(&Spectrum::<Rat>::from_reals(&[1, -2])),
            Err(Error::SpectrumNotStable(_))
        ));
    }

    #[test]
    fn holtz_solver() {
        let r = holtz_from_spectrum(&Spectrum::<Rat>::from_reals(&[3, -2, 1])).unwrap();
        assert_eq!(b_of(&r), rats(&[-2, -2, -3]));

        let r = holtz_from_spectrum(&Spectrum::<Rat>::from_reals(&[2, -1])).unwrap();
        assert_eq!(b_of(&r), rats(&[-1, -2]));

        // unordered input gives the same matrix
        let r = holtz_from_spectrum(&Spectrum::<Rat>::from_reals(&[1, -2, 3])).unwrap();
        assert_eq!(b_of(&r), rats(&[-2, -2, -3]));

        assert!(matches!(
            holtz_from_spectrum(&Spectrum::<Rat>::from_reals(&[1, 2])),
            Err(Error::PatternMismatch(_))
        ));
    }

    #[test]
    fn general_solver() {
        let r = general_from_spectrum(&Spectrum::<Rat>::from_reals(&[1, -2, 3])).unwrap();
        assert_eq!(cumulative_products(&r.matrix).negative_count(), 2);

        let r = general_from_spectrum(&Spectrum::<Rat>::from_reals(&[-1, -2, -3])).unwrap();
        assert_eq!(cumulative_products(&r.matrix).negative_count(), 0);

        assert!(matches!(
            general_from_spectrum(&Spectrum::<Rat>::from_pairs_ints(&[(0, 1)])),
            Err(Error::DegenerateHurwitz(1))
        ));
    }

    #[test]
    fn sn_solver_boundaries() {
        // κ = 0 is the stable case
        let r = sn_from_spectrum(
            &Spectrum::<Rat>::from_reals(&[-1, -2, -3]),
            SnFlavor::Generalized,
        )
        .unwrap();
        assert_eq!(b_of(&r), rats(&[6, 10, 1]));

        // κ = 2 at n = 3 pushes k to -1: the alternating case
        let r = sn_from_spectrum(
            &Spectrum::<Rat>::from_reals(&[3, -2, 1]),
            SnFlavor::Generalized,
        )
        .unwrap();
        assert_eq!(b_of(&r), rats(&[-2, -2, -3]));
    }

    #[test]
    fn sn_solver_interior() {
        // roots of z^3 + 2z^2 - z - 6 (b = (2, 2, -3)): order-1 type I
        let j = SchwarzMatrix::<Rat>::from_ints(&[2, 2, -3]).unwrap();
        let p = charpoly(&j);
        let e = crate::oracle::roots(&p).unwrap();
        let s: Spectrum<f64> = e.spectrum();
        let r = sn_from_spectrum(&s, SnFlavor::Generalized).unwrap();
        let got: Vec<f64> = r.matrix.b().to_vec();
        for (g, w) in got.iter().zip([2.0, 2.0, -3.0]) {
            assert!((g - w).abs() < 1e-6, "{g} vs {w}");
        }
        let view = SnView::from_matrix(&r.matrix).unwrap();
        assert_eq!(view.k, 1);
    }

    #[test]
    fn bebiano_solver() {
        // {-1, 2, 3}: case 4, sum 4
        let r = bebiano_from_spectrum(&Spectrum::<Rat>::from_reals(&[-1, 2, 3])).unwrap();
        let (a, c) = bebiano_parameters(&r.matrix).unwrap();
        assert_eq!(a, Rat::from_int(4));
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|x| x.sign() == Sign::Pos));

        // zero sum has no solution
        assert!(matches!(
            bebiano_from_spectrum(&Spectrum::<Rat>::from_reals(&[-2, -1, 3])),
            Err(Error::SumNotPositive(_)) | Err(Error::CaseMismatch)
        ));
    }

    #[test]
    fn solvers_are_deterministic() {
        let s = Spectrum::<Rat>::from_reals(&[3, -2, 1]);
        let a = holtz_from_spectrum(&s).unwrap().to_value().to_string();
        let b = holtz_from_spectrum(&s).unwrap().to_value().to_string();
        assert_eq!(a, b);
    }
}
