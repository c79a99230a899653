//! The continued-fraction expansion of `q(z)/p(z)`:
//!
//! ```text
//! q(z)          b0
//! ---- = -----------------------
//! p(z)   z + b0 + b1
//!                 ----------
//!                 z + b2
//!                     ------
//!                     ⋱ + b_{n-1}
//!                         --------
//!                            z
//! ```
//!
//! The partial denominators `b0 .. b_{n-1}` are exactly the entries of the
//! Schwarz matrix with characteristic polynomial `p`. They are computed by
//! two independent routes — determinant ratios and a Euclid-style recursion —
//! and the expansion can be collapsed back for verification.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hurwitz::hurwitz_determinants;
use crate::poly::{assoc_q, Poly};
use crate::scalar::Scalar;

/// The nonzero partial denominators `b0 .. b_{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct WallCoefficients<T> {
    b: Vec<T>,
}

impl<T: Scalar> WallCoefficients<T> {
    /// Wraps a coefficient vector, rejecting zero entries.
    pub fn new(b: Vec<T>) -> Result<Self> {
        if b.is_empty() {
            return Err(Error::InvalidInput("empty coefficient vector".into()));
        }
        if let Some(i) = b.iter().position(|x| x.is_zero()) {
            return Err(Error::InvalidInput(format!("b{i} must be nonzero")));
        }
        Ok(WallCoefficients { b })
    }

    pub fn from_ints(b: &[i64]) -> Result<Self> {
        Self::new(b.iter().map(|&v| T::from_int(v)).collect())
    }

    pub fn b(&self) -> &[T] {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }

    pub fn to_value(&self) -> Value {
        json!({ "b": self.b.iter().map(|x| x.literal()).collect::<Vec<_>>() })
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let arr = v
            .get("b")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("expected a \"b\" array".into()))?;
        let b = arr
            .iter()
            .map(|x| {
                let s = x
                    .as_str()
                    .ok_or_else(|| Error::Parse("entries must be string literals".into()))?;
                T::parse_literal(s)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(b)
    }
}

/// Trace of the Euclid-style recursion: the monic polynomials
/// `f0 = p, f1 = q/b0, ...` (each of degree `n - k`, even or odd for k ≥ 1)
/// together with the coefficients they produce. The terminal constant of the
/// recursion is `b_{n-1}` itself.
#[derive(Debug, Clone, PartialEq)]
pub struct SturmTrace<T> {
    pub polys: Vec<Poly<T>>,
    pub b: WallCoefficients<T>,
}

/// Computes `b` from the determinant formulas
/// `b0 = Δ1`, `bk = Δ_{k-2} Δ_{k+1} / (Δ_{k-1} Δ_k)`.
pub fn wall_from_determinants<T: Scalar>(p: &Poly<T>) -> Result<WallCoefficients<T>> {
    let p = p.require_monic()?;
    let table = hurwitz_determinants(&p)?;
    table.strict_signs()?;
    let n = p.degree();
    let mut b = Vec::with_capacity(n);
    b.push(table.delta(1));
    for k in 1..n {
        let k = k as i64;
        let num = table.delta(k - 2) * table.delta(k + 1);
        let den = table.delta(k - 1) * table.delta(k);
        b.push(num / den);
    }
    WallCoefficients::new(b)
}

/// Computes the same coefficients by running the recursion
///
/// ```text
/// b1 f2 = f0 - (z + b0) f1,    bk f_{k+1} = f_{k-1} - z f_k  (k ≥ 2),
/// ```
///
/// with `f0 = p` and `f1 = q / b0`. A degree drop of more than one at step
/// `k` means Δ_k = 0 and aborts with `DegreeCollapse(k)`.
pub fn wall_from_euclid<T: Scalar>(p: &Poly<T>) -> Result<SturmTrace<T>> {
    let p = p.require_monic()?;
    let n = p.degree();
    if n == 0 {
        return Err(Error::InvalidInput("degree must be ≥ 1".into()));
    }
    let q = assoc_q(&p)?;
    // f1 must be monic of degree n-1, so b0 is q's coefficient at z^{n-1}
    let b0 = q.coeff_of(n - 1);
    if b0.is_zero() || q.degree() != n - 1 {
        return Err(Error::DegreeCollapse(1));
    }
    let f1 = q.scale(&(T::one() / b0.clone()));

    let mut polys = vec![p.clone(), f1];
    let mut b = vec![b0.clone()];
    for k in 1..n {
        let remainder = if k == 1 {
            // f0 - (z + b0) f1
            let zf1 = polys[1].shift_up(1);
            let b0f1 = polys[1].scale(&b0);
            &(&polys[0] - &zf1) - &b0f1
        } else {
            &polys[k - 1] - &polys[k].shift_up(1)
        };
        let expect = n - k - 1;
        if remainder.is_zero() || remainder.degree() != expect {
            return Err(Error::DegreeCollapse(k + 1));
        }
        let bk = remainder.lead().clone();
        b.push(bk.clone());
        if expect > 0 {
            polys.push(remainder.scale(&(T::one() / bk)));
        }
        // at the last step the remainder is the constant b_{n-1} itself
    }
    polys.truncate(n);
    Ok(SturmTrace {
        polys,
        b: WallCoefficients::new(b)?,
    })
}

/// Collapses the finite continued fraction bottom-up into a rational
/// function `(num, den)` with `den` monic of degree n. `den` is the
/// characteristic polynomial of the Schwarz matrix built from `b`, and
/// `num` is the associated polynomial `q` of `den`.
pub fn cf_evaluate<T: Scalar>(b: &WallCoefficients<T>) -> (Poly<T>, Poly<T>) {
    let n = b.len();
    let b = b.b();
    let z = Poly::new(vec![T::one(), T::zero()]);
    if n == 1 {
        // q/p = b0 / (z + b0)
        let den = Poly::new(vec![T::one(), b[0].clone()]);
        return (Poly::constant(b[0].clone()), den);
    }
    // tail_{n-1} = z; tail_k = z + b_{k+1} / tail_{k+1}, kept as (num, den)
    let mut tail_num = z.clone();
    let mut tail_den = Poly::one();
    for k in (1..n - 1).rev() {
        let new_num = &(&z * &tail_num) + &tail_den.scale(&b[k + 1]);
        tail_den = tail_num;
        tail_num = new_num;
    }
    // q/p = b0 tail_1 / ((z + b0) tail_1 + b1 · tail_den)
    let z_plus_b0 = Poly::new(vec![T::one(), b[0].clone()]);
    let den = &(&z_plus_b0 * &tail_num) + &tail_den.scale(&b[1]);
    let num = tail_num.scale(&b[0]);
    debug_assert!(den.is_monic() && den.degree() == n);
    (num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn p(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_ints(coeffs)
    }

    fn wall_i(coeffs: &[i64]) -> Vec<i64> {
        use num::ToPrimitive;
        wall_from_determinants(&p(coeffs))
            .unwrap()
            .b()
            .iter()
            .map(|x| {
                assert!(x.is_integer());
                x.to_integer().to_i64().unwrap()
            })
            .collect::<Vec<i64>>()
    }

    #[test]
    fn determinant_route_worked_examples() {
        assert_eq!(wall_i(&[1, 6, 11, 6]), vec![6, 10, 1]);
        assert_eq!(wall_i(&[1, -2, -5, 6]), vec![-2, -2, -3]);
        assert_eq!(wall_i(&[1, 5]), vec![5]);
        assert!(matches!(
            wall_from_determinants(&p(&[1, 0, 1])),
            Err(Error::DegenerateHurwitz(1))
        ));
    }

    #[test]
    fn euclid_route_worked_examples() {
        let trace = wall_from_euclid(&p(&[1, 6, 11, 6])).unwrap();
        assert_eq!(trace.b, WallCoefficients::from_ints(&[6, 10, 1]).unwrap());
        assert_eq!(trace.polys[1], p(&[1, 0, 1])); // f1 = z^2 + 1
        assert_eq!(trace.polys[2], p(&[1, 0])); // f2 = z

        let trace = wall_from_euclid(&p(&[1, 2, 2])).unwrap();
        assert_eq!(trace.b, WallCoefficients::from_ints(&[2, 2]).unwrap());
        assert_eq!(trace.polys[1], p(&[1, 0])); // f1 = z

        assert!(matches!(
            wall_from_euclid(&p(&[1, 0, 1])),
            Err(Error::DegreeCollapse(1))
        ));
    }

    #[test]
    fn routes_agree() {
        for coeffs in [
            &[1, 6, 11, 6][..],
            &[1, -2, -5, 6],
            &[1, 2, 2],
            &[1, 5],
            &[1, 3, -7, 2, 9],
        ] {
            let q = p(coeffs);
            if let Ok(det_route) = wall_from_determinants(&q) {
                let euclid = wall_from_euclid(&q).unwrap();
                assert_eq!(det_route, euclid.b, "mismatch for {q}");
            }
        }
    }

    #[test]
    fn trace_polys_have_single_parity() {
        let trace = wall_from_euclid(&p(&[1, 3, -7, 2, 9])).unwrap();
        for f in &trace.polys[1..] {
            assert!(f.has_single_parity(), "{f} is neither even nor odd");
        }
    }

    #[test]
    fn cf_evaluate_worked_examples() {
        let (num, den) = cf_evaluate(&WallCoefficients::from_ints(&[6, 10, 1]).unwrap());
        assert_eq!(num, p(&[6, 0, 6]));
        assert_eq!(den, p(&[1, 6, 11, 6]));

        let (num, den) = cf_evaluate(&WallCoefficients::from_ints(&[5]).unwrap());
        assert_eq!(num, p(&[5]));
        assert_eq!(den, p(&[1, 5]));

        let (_, den) = cf_evaluate(&WallCoefficients::from_ints(&[-2, -2, -3]).unwrap());
        assert_eq!(den, p(&[1, -2, -5, 6]));
    }

    #[test]
    fn round_trip_through_the_expansion() {
        for coeffs in [&[1, 6, 11, 6][..], &[1, -2, -5, 6], &[1, 2, 2]] {
            let q = p(coeffs);
            let b = wall_from_determinants(&q).unwrap();
            let (num, den) = cf_evaluate(&b);
            assert_eq!(den, q);
            assert_eq!(num, assoc_q(&q).unwrap());
        }
    }
}
