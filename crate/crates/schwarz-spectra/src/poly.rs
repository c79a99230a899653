//! Dense real polynomials and the structural transforms used throughout the
//! library: even/odd decomposition, the associated polynomial `q`, reflection
//! `p(-z)`, the Hurwitz dual and the sign-flip transform.
//!
//! Coefficients are stored highest degree first, matching the `a_1 .. a_n`
//! indexing of a monic `p(z) = z^n + a_1 z^{n-1} + ... + a_n`. The zero
//! polynomial is the empty coefficient list; constructors trim leading zeros.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Sign};
use crate::spectrum::Spectrum;

/// Dense polynomial over a [`Scalar`] backend, coefficients highest first.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    /// Builds a polynomial from coefficients (highest first), trimming
    /// leading zeros. An all-zero list yields the zero polynomial.
    pub fn new(coeffs: Vec<T>) -> Self {
        let first_nonzero = coeffs.iter().position(|c| !c.is_zero());
        match first_nonzero {
            Some(i) => Poly {
                coeffs: coeffs[i..].to_vec(),
            },
            None => Poly { coeffs: Vec::new() },
        }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![T::one()],
        }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// Convenience constructor from integer coefficients, highest first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficients, highest first. Empty for the zero polynomial.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Leading coefficient. Panics on the zero polynomial.
    pub fn lead(&self) -> &T {
        &self.coeffs[0]
    }

    /// Coefficient of `z^power` (zero when absent).
    pub fn coeff_of(&self, power: usize) -> T {
        let n = self.degree();
        if self.is_zero() || power > n {
            T::zero()
        } else {
            self.coeffs[n - power].clone()
        }
    }

    /// The coefficient `a_j` in `p = a_0 z^n + a_1 z^{n-1} + ...` (with
    /// `a_j = 0` for `j > n`).
    pub fn a(&self, j: usize) -> T {
        if j < self.coeffs.len() {
            self.coeffs[j].clone()
        } else {
            T::zero()
        }
    }

    pub fn constant_term(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.lead().is_one()
    }

    /// Monic normalization. Returns the normalized polynomial together with
    /// the scale factor that was divided out.
    pub fn monic(&self) -> Result<(Poly<T>, T)> {
        if self.is_zero() {
            return Err(Error::InvalidInput(
                "cannot normalize the zero polynomial".into(),
            ));
        }
        let lead = self.lead().clone();
        if lead.is_one() {
            return Ok((self.clone(), lead));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.clone() / lead.clone())
            .collect();
        Ok((Poly { coeffs }, lead))
    }

    /// Ensures the polynomial is usable where degree-n structure is cited:
    /// nonzero and monic (normalizing silently if needed).
    pub(crate) fn require_monic(&self) -> Result<Poly<T>> {
        if self.is_zero() {
            return Err(Error::InvalidInput(
                "operation needs a nonzero polynomial".into(),
            ));
        }
        Ok(self.monic()?.0)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in &self.coeffs {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn eval_complex(&self, z: &Complex<T>) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for c in &self.coeffs {
            acc = acc * z.clone() + Complex::new(c.clone(), T::zero());
        }
        acc
    }

    pub fn derivative(&self) -> Poly<T> {
        let n = self.degree();
        if self.is_zero() || n == 0 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .take(n)
            .enumerate()
            .map(|(i, c)| c.clone() * T::from_int((n - i) as i64))
            .collect();
        Poly::new(coeffs)
    }

    /// Multiplies by `z^k`.
    pub fn shift_up(&self, k: usize) -> Poly<T> {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat_with(T::zero).take(k));
        Poly { coeffs }
    }

    pub fn scale(&self, s: &T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Substitutes `z^2` for the variable: `p(u) -> p(z^2)`.
    pub fn compose_square(&self) -> Poly<T> {
        if self.is_zero() {
            return Poly::zero();
        }
        let d = self.degree();
        let mut coeffs = vec![T::zero(); 2 * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        Poly { coeffs }
    }

    /// Substitutes `-z^2` for the variable: `p(u) -> p(-z^2)`.
    pub fn compose_neg_square(&self) -> Poly<T> {
        if self.is_zero() {
            return Poly::zero();
        }
        let d = self.degree();
        let mut coeffs = vec![T::zero(); 2 * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            // term c * (-z^2)^(d-i)
            let v = if (d - i) % 2 == 0 {
                c.clone()
            } else {
                -c.clone()
            };
            coeffs[2 * i] = v;
        }
        Poly { coeffs }
    }

    /// Converts to the float backend for the numerical oracle.
    pub fn approx(&self) -> Poly<f64> {
        Poly::new(self.coeffs.iter().map(|c| c.approx()).collect())
    }

    /// True when only even-degree or only odd-degree coefficients are present.
    pub fn has_single_parity(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let parity = self.degree() % 2;
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || (self.degree() - i) % 2 == parity)
    }

    pub fn to_value(&self) -> Value {
        json!({ "coeffs": self.coeffs.iter().map(|c| c.literal()).collect::<Vec<_>>() })
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let arr = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("polynomial JSON needs a \"coeffs\" array".into()))?;
        let coeffs = arr
            .iter()
            .map(|c| {
                let s = c
                    .as_str()
                    .ok_or_else(|| Error::Parse("coefficients must be string literals".into()))?;
                T::parse_literal(s)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![T::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[n - self.coeffs.len() + i] = c.clone();
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            let idx = n - rhs.coeffs.len() + i;
            coeffs[idx] = coeffs[idx].clone() + c.clone();
        }
        Poly::new(coeffs)
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - i;
            let (sign, mag) = if c.sign() == Sign::Neg {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let coeff_is_one = mag.is_one();
            match power {
                0 => write!(f, "{mag}")?,
                1 => {
                    if coeff_is_one {
                        write!(f, "z")?
                    } else {
                        write!(f, "{mag}z")?
                    }
                }
                _ => {
                    if coeff_is_one {
                        write!(f, "z^{power}")?
                    } else {
                        write!(f, "{mag}z^{power}")?
                    }
                }
            }
        }
        Ok(())
    }
}

/// Even and odd parts of `p`: `p(z) = p0(z^2) + z p1(z^2)`.
///
/// The parts are stored trimmed; the original degree `n` is kept so the
/// formal lengths (`deg p0 = ⌊n/2⌋`, `deg p1 = ⌊(n-1)/2⌋` as coefficient
/// lists) stay available even when leading entries vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct EvenOddPair<T> {
    pub p0: Poly<T>,
    pub p1: Poly<T>,
    n: usize,
}

impl<T: Scalar> EvenOddPair<T> {
    pub fn degree(&self) -> usize {
        self.n
    }

    /// Formal degree of `p0` as a coefficient list.
    pub fn formal_deg_p0(&self) -> usize {
        self.n / 2
    }

    /// Formal degree of `p1` as a coefficient list (`None` for constants).
    pub fn formal_deg_p1(&self) -> Option<usize> {
        if self.n == 0 {
            None
        } else {
            Some((self.n - 1) / 2)
        }
    }

    /// Rebuilds `p0(z^2) + z p1(z^2)`.
    pub fn reassemble(&self) -> Poly<T> {
        &self.p0.compose_square() + &self.p1.compose_square().shift_up(1)
    }
}

/// Splits `p` into its even and odd parts.
pub fn even_odd_parts<T: Scalar>(p: &Poly<T>) -> EvenOddPair<T> {
    let n = p.degree();
    // p0 collects a_n, a_{n-2}, ...; p1 collects a_{n-1}, a_{n-3}, ...
    let mut c0 = Vec::new();
    let mut c1 = Vec::new();
    for j in 0..=n {
        if (n - j) % 2 == 0 {
            c0.push(p.a(j));
        } else {
            c1.push(p.a(j));
        }
    }
    EvenOddPair {
        p0: Poly::new(c0),
        p1: Poly::new(c1),
        n,
    }
}

/// The associated polynomial `q`: `p0(z^2)` for odd degree, `z p1(z^2)` for
/// even degree.
pub fn assoc_q<T: Scalar>(p: &Poly<T>) -> Result<Poly<T>> {
    let p = p.require_monic()?;
    let parts = even_odd_parts(&p);
    if p.degree() % 2 == 1 {
        Ok(parts.p0.compose_square())
    } else {
        Ok(parts.p1.compose_square().shift_up(1))
    }
}

/// Monic normalization of `p(-z)`, i.e. `(-1)^n p(-z)`.
pub fn reflect<T: Scalar>(p: &Poly<T>) -> Poly<T> {
    if p.is_zero() {
        return Poly::zero();
    }
    // the coefficient of z^(n-i) picks up (-1)^(n-i), then (-1)^n overall,
    // which nets out to (-1)^i
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c.clone() })
        .collect();
    Poly::new(coeffs)
}

/// The dual `q(z) = p0(-z^2) - z p1(-z^2)`, monic-normalized.
///
/// The second component records the normalization sign: the raw leading
/// coefficient is ±1 for monic input.
pub fn hurwitz_dual<T: Scalar>(p: &Poly<T>) -> Result<(Poly<T>, i8)> {
    let p = p.require_monic()?;
    let parts = even_odd_parts(&p);
    let raw = &parts.p0.compose_neg_square() - &parts.p1.compose_neg_square().shift_up(1);
    if raw.is_zero() {
        return Err(Error::InvalidInput("dual of the zero polynomial".into()));
    }
    let (monic, scale) = raw.monic()?;
    let sign = match scale.sign() {
        Sign::Neg => -1,
        _ => 1,
    };
    Ok((monic, sign))
}

/// The transform `(-1)^{⌊(n+1)/2⌋} [p0(-z^2) + (-1)^n z p1(-z^2)]`,
/// exactly as displayed — no extra normalization. For monic `p` of degree
/// `n` this is again monic: it is the characteristic polynomial of the
/// sign-flipped companion matrix (see `schwarz::sign_flip_dual`).
pub fn sign_flip_transform<T: Scalar>(p: &Poly<T>, n: usize) -> Result<Poly<T>> {
    let p = p.require_monic()?;
    if p.degree() != n {
        return Err(Error::InvalidInput(format!(
            "degree mismatch: polynomial has degree {}, expected {n}",
            p.degree()
        )));
    }
    let parts = even_odd_parts(&p);
    let even = parts.p0.compose_neg_square();
    let odd = parts.p1.compose_neg_square().shift_up(1);
    let inner = if n % 2 == 0 { &even + &odd } else { &even - &odd };
    let result = if (n + 1) / 2 % 2 == 0 {
        inner
    } else {
        -&inner
    };
    debug_assert!(result.is_monic());
    Ok(result)
}

/// Builds the monic polynomial with the given spectrum. The spectrum must be
/// closed under complex conjugation (exactly on the exact backend, within
/// tolerance on the float backend).
pub fn from_roots<T: Scalar>(s: &Spectrum<T>) -> Result<Poly<T>> {
    if s.roots().is_empty() {
        return Err(Error::InvalidInput("empty spectrum".into()));
    }
    let (reals, pairs) = s.conjugate_partition()?;
    let mut p = Poly::one();
    for r in &reals {
        p = &p * &Poly::new(vec![T::one(), -r.clone()]);
    }
    for (re, im) in &pairs {
        // (z - (re+im i))(z - (re-im i)) = z^2 - 2 re z + (re^2 + im^2)
        let two = T::from_int(2);
        p = &p
            * &Poly::new(vec![
                T::one(),
                -(two * re.clone()),
                re.clone() * re.clone() + im.clone() * im.clone(),
            ]);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use crate::spectrum::Spectrum;

    fn p(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_ints(coeffs)
    }

    #[test]
    fn even_odd_parts_worked_cubic() {
        // z^3 + 6z^2 + 11z + 6 -> p0 = 6u + 6, p1 = u + 11
        let parts = even_odd_parts(&p(&[1, 6, 11, 6]));
        assert_eq!(parts.p0, p(&[6, 6]));
        assert_eq!(parts.p1, p(&[1, 11]));
        assert_eq!(parts.reassemble(), p(&[1, 6, 11, 6]));
        assert_eq!(parts.formal_deg_p0(), 1);
        assert_eq!(parts.formal_deg_p1(), Some(1));
    }

    #[test]
    fn even_odd_parts_odd_monomial() {
        // z -> p0 = 0, p1 = 1
        let parts = even_odd_parts(&p(&[1, 0]));
        assert!(parts.p0.is_zero());
        assert_eq!(parts.p1, p(&[1]));
        assert_eq!(parts.reassemble(), p(&[1, 0]));
    }

    #[test]
    fn even_odd_parts_quadratic() {
        // z^2 + 2z + 2 -> p0 = u + 2, p1 = 2
        let parts = even_odd_parts(&p(&[1, 2, 2]));
        assert_eq!(parts.p0, p(&[1, 2]));
        assert_eq!(parts.p1, p(&[2]));
        assert_eq!(parts.reassemble(), p(&[1, 2, 2]));
    }

    #[test]
    fn assoc_q_examples() {
        assert_eq!(assoc_q(&p(&[1, 6, 11, 6])).unwrap(), p(&[6, 0, 6]));
        assert_eq!(assoc_q(&p(&[1, 2, 2])).unwrap(), p(&[2, 0]));
        assert_eq!(assoc_q(&p(&[1, 5])).unwrap(), p(&[5]));
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(reflect(&p(&[1, -1, 0, 1])), p(&[1, 1, 0, -1]));
        assert_eq!(reflect(&p(&[1, 0, 1])), p(&[1, 0, 1]));
        assert_eq!(reflect(&p(&[1, 5])), p(&[1, -5]));
        // involution
        let q = p(&[1, -7, 3, 2]);
        assert_eq!(reflect(&reflect(&q)), q);
    }

    #[test]
    fn hurwitz_dual_examples() {
        // z (p0 = 0, p1 = 1) -> raw -z -> monic z with sign -1
        let (d, sign) = hurwitz_dual(&p(&[1, 0])).unwrap();
        assert_eq!(d, p(&[1, 0]));
        assert_eq!(sign, -1);

        // self-interlacing cubic: dual must be z^3 + 2z^2 + 5z + 6
        let (d, sign) = hurwitz_dual(&p(&[1, -2, -5, 6])).unwrap();
        assert_eq!(d, p(&[1, 2, 5, 6]));
        assert_eq!(sign, 1);
    }

    #[test]
    fn hurwitz_dual_is_an_involution() {
        for coeffs in [&[1, -2, -5, 6][..], &[1, 6, 11, 6], &[1, 2, 2], &[1, 3]] {
            let q = p(coeffs);
            let (d, _) = hurwitz_dual(&q).unwrap();
            let (dd, _) = hurwitz_dual(&d).unwrap();
            assert_eq!(dd, q);
        }
    }

    #[test]
    fn sign_flip_transform_examples() {
        // n = 1: z + 5 -> z - 5
        assert_eq!(sign_flip_transform(&p(&[1, 5]), 1).unwrap(), p(&[1, -5]));
        // n = 2: z^2 + 2z + 2 -> z^2 - 2z - 2
        assert_eq!(
            sign_flip_transform(&p(&[1, 2, 2]), 2).unwrap(),
            p(&[1, -2, -2])
        );
        // n = 3 worked cubic
        assert_eq!(
            sign_flip_transform(&p(&[1, -2, -5, 6]), 3).unwrap(),
            p(&[1, 2, 5, 6])
        );
    }

    #[test]
    fn from_roots_examples() {
        let s = Spectrum::<Rat>::from_reals(&[-1, -2, -3]);
        assert_eq!(from_roots(&s).unwrap(), p(&[1, 6, 11, 6]));

        let s = Spectrum::<Rat>::from_pairs_ints(&[(0, 1)]);
        assert_eq!(from_roots(&s).unwrap(), p(&[1, 0, 1]));

        let s = Spectrum::<Rat>::from_parts_ints(&[(1, 1)]);
        assert!(matches!(
            from_roots(&s),
            Err(Error::ConjugationViolation(_))
        ));
    }

    #[test]
    fn display_renders_signs() {
        assert_eq!(p(&[1, -2, -5, 6]).to_string(), "z^3 - 2z^2 - 5z + 6");
        assert_eq!(p(&[1, 0]).to_string(), "z");
        assert_eq!(Poly::<Rat>::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let q = p(&[1, -2, -5, 6]);
        let v = q.to_value();
        assert_eq!(Poly::<Rat>::from_value(&v).unwrap(), q);
    }
}
