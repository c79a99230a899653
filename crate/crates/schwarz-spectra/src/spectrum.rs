//! Spectra: multisets of complex numbers closed under conjugation.

use num::complex::Complex;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{eps_im, Scalar, Sign, EPS_CONJ};

/// A multiset of complex numbers. Most solvers additionally require closure
/// under complex conjugation, which [`Spectrum::conjugate_partition`] checks.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    roots: Vec<Complex<T>>,
}

impl<T: Scalar> Spectrum<T> {
    pub fn new(roots: Vec<Complex<T>>) -> Self {
        Spectrum { roots }
    }

    pub fn from_reals(values: &[i64]) -> Self {
        Spectrum {
            roots: values
                .iter()
                .map(|&v| Complex::new(T::from_int(v), T::zero()))
                .collect(),
        }
    }

    pub fn from_real_scalars(values: Vec<T>) -> Self {
        Spectrum {
            roots: values
                .into_iter()
                .map(|v| Complex::new(v, T::zero()))
                .collect(),
        }
    }

    /// Conjugate pairs given as (re, im) integer parts; each entry expands to
    /// the pair `re ± im i`.
    pub fn from_pairs_ints(pairs: &[(i64, i64)]) -> Self {
        let mut roots = Vec::new();
        for &(re, im) in pairs {
            roots.push(Complex::new(T::from_int(re), T::from_int(im)));
            roots.push(Complex::new(T::from_int(re), T::from_int(-im)));
        }
        Spectrum { roots }
    }

    /// Raw list of (re, im) integer parts, no pairing applied.
    pub fn from_parts_ints(parts: &[(i64, i64)]) -> Self {
        Spectrum {
            roots: parts
                .iter()
                .map(|&(re, im)| Complex::new(T::from_int(re), T::from_int(im)))
                .collect(),
        }
    }

    pub fn roots(&self) -> &[Complex<T>] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Sum of the spectrum; for conjugation-closed spectra this is real, so
    /// only real parts are accumulated.
    pub fn trace(&self) -> T {
        self.roots
            .iter()
            .fold(T::zero(), |acc, r| acc + r.re.clone())
    }

    /// Whether a single root counts as real under the backend's policy.
    pub fn root_is_real(root: &Complex<T>) -> bool {
        if T::EXACT {
            root.im.is_zero()
        } else {
            let norm = norm_approx(root);
            root.im.approx().abs() <= eps_im() * (1.0 + norm)
        }
    }

    /// Splits the spectrum into real roots and conjugate pairs, each pair
    /// kept as one representative `(re, im)` with `im > 0`. Fails with
    /// `ConjugationViolation` when a nonreal root has no partner.
    pub fn conjugate_partition(&self) -> Result<(Vec<T>, Vec<(T, T)>)> {
        let mut reals = Vec::new();
        let mut pairs = Vec::new();
        let mut pending: Vec<Complex<T>> = Vec::new();
        for r in &self.roots {
            if Self::root_is_real(r) {
                reals.push(r.re.clone());
                continue;
            }
            match pending.iter().position(|c| Self::conjugates(r, c)) {
                Some(i) => {
                    let c = pending.swap_remove(i);
                    // average the pair so float noise cancels
                    let two = T::from_int(2);
                    let re = (r.re.clone() + c.re.clone()) / two.clone();
                    let im = ((r.im.clone() - c.im.clone()) / two).abs();
                    pairs.push((re, im));
                }
                None => pending.push(r.clone()),
            }
        }
        if let Some(orphan) = pending.first() {
            return Err(Error::ConjugationViolation(display_complex(orphan)));
        }
        Ok((reals, pairs))
    }

    fn conjugates(a: &Complex<T>, b: &Complex<T>) -> bool {
        if T::EXACT {
            a.re == b.re && a.im == -b.im.clone()
        } else {
            let scale = 1.0 + norm_approx(a);
            (a.re.approx() - b.re.approx()).abs() <= EPS_CONJ * scale
                && (a.im.approx() + b.im.approx()).abs() <= EPS_CONJ * scale
        }
    }

    /// Converts to the float backend for the numerical oracle.
    pub fn approx(&self) -> Spectrum<f64> {
        Spectrum {
            roots: self
                .roots
                .iter()
                .map(|r| Complex::new(r.re.approx(), r.im.approx()))
                .collect(),
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "roots": self
                .roots
                .iter()
                .map(|r| json!({ "re": r.re.literal(), "im": r.im.literal() }))
                .collect::<Vec<_>>()
        })
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let arr = v
            .get("roots")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("spectrum JSON needs a \"roots\" array".into()))?;
        let roots = arr
            .iter()
            .map(|r| {
                let field = |name: &str| -> Result<T> {
                    let s = r
                        .get(name)
                        .and_then(Value::as_str)
                        .ok_or_else(|| Error::Parse(format!("root needs a \"{name}\" literal")))?;
                    T::parse_literal(s)
                };
                Ok(Complex::new(field("re")?, field("im")?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Spectrum { roots })
    }
}

fn norm_approx<T: Scalar>(z: &Complex<T>) -> f64 {
    let re = z.re.approx();
    let im = z.im.approx();
    (re * re + im * im).sqrt()
}

pub(crate) fn display_complex<T: Scalar>(z: &Complex<T>) -> String {
    if z.im.is_zero() {
        z.re.literal()
    } else if z.im.sign() == Sign::Neg {
        format!("{}{}i", z.re.literal(), z.im.literal())
    } else {
        format!("{}+{}i", z.re.literal(), z.im.literal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    #[test]
    fn partition_pairs_conjugates() {
        let s = Spectrum::<Rat>::from_pairs_ints(&[(-1, 1)]);
        let (reals, pairs) = s.conjugate_partition().unwrap();
        assert!(reals.is_empty());
        assert_eq!(pairs, vec![(Rat::from_int(-1), Rat::from_int(1))]);
    }

    #[test]
    fn partition_rejects_orphans() {
        let s = Spectrum::<Rat>::from_parts_ints(&[(1, 1)]);
        assert!(matches!(
            s.conjugate_partition(),
            Err(Error::ConjugationViolation(_))
        ));
    }

    #[test]
    fn float_partition_tolerates_noise() {
        let s = Spectrum::<f64>::new(vec![
            Complex::new(1.0, 2.0000000001),
            Complex::new(1.0000000001, -2.0),
            Complex::new(-3.0, 1e-12),
        ]);
        let (reals, pairs) = s.conjugate_partition().unwrap();
        assert_eq!(reals, vec![-3.0]);
        assert_eq!(pairs.len(), 1);
        assert!((pairs[0].0 - 1.0).abs() < 1e-9 && (pairs[0].1 - 2.0).abs() < 1e-9);
    }

    #[test]
    fn trace_sums_real_parts() {
        let s = Spectrum::<Rat>::from_parts_ints(&[(1, 2), (1, -2), (-3, 0)]);
        assert_eq!(s.trace(), Rat::from_int(-1));
    }

    #[test]
    fn json_round_trip() {
        let s = Spectrum::<Rat>::from_parts_ints(&[(1, 2), (1, -2)]);
        let v = s.to_value();
        assert_eq!(Spectrum::<Rat>::from_value(&v).unwrap(), s);
    }
}
