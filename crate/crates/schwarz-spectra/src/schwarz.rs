//! The Schwarz matrix
//!
//! ```text
//!     ┌ -b0   1    0  ...  0      0 ┐
//!     │ -b1   0    1  ...  0      0 │
//!     │  0   -b2   0  ...  0      0 │
//!     │  ⋮     ⋮    ⋮   ⋱   ⋮      ⋮ │
//!     │  0    0    0  ...  0      1 │
//!     └  0    0    0  ... -b_{n-1} 0 ┘
//! ```
//!
//! with all `b_k` nonzero, plus the direct spectral results that read root
//! locations straight off the sign pattern of `b`.

use serde_json::{json, Value};

use crate::classify::{finalize_almost_pattern, finalize_generalized, Classification, HwType};
use crate::error::{Error, Result};
use crate::poly::{sign_flip_transform, Poly};
use crate::scalar::{Scalar, Sign};

/// The vector `b0 .. b_{n-1}` of nonzero entries defining the matrix above.
#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzMatrix<T> {
    b: Vec<T>,
}

impl<T: Scalar> SchwarzMatrix<T> {
    pub fn new(b: Vec<T>) -> Result<Self> {
        if b.is_empty() {
            return Err(Error::InvalidInput("matrix needs at least one entry".into()));
        }
        if let Some(i) = b.iter().position(|x| x.is_zero()) {
            return Err(Error::InvalidInput(format!(
                "Schwarz matrix entries must be nonzero, b{i} is zero"
            )));
        }
        Ok(SchwarzMatrix { b })
    }

    pub fn from_ints(b: &[i64]) -> Result<Self> {
        Self::new(b.iter().map(|&v| T::from_int(v)).collect())
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn b(&self) -> &[T] {
        &self.b
    }

    /// The dense n×n matrix in float form, for the eigenvalue oracle.
    pub fn dense_approx(&self) -> Vec<Vec<f64>> {
        let n = self.n();
        let mut m = vec![vec![0.0; n]; n];
        m[0][0] = -self.b[0].approx();
        for i in 0..n.saturating_sub(1) {
            m[i][i + 1] = 1.0;
        }
        for i in 1..n {
            m[i][i - 1] = -self.b[i].approx();
        }
        m
    }

    pub fn to_value(&self) -> Value {
        json!({ "b": self.b.iter().map(|x| x.literal()).collect::<Vec<_>>() })
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let arr = v
            .get("b")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("Schwarz matrix JSON needs a \"b\" array".into()))?;
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

/// Characteristic polynomials of all trailing principal blocks, smallest
/// first: `F[k]` is the charpoly of the trailing k×k block, so `F[n]` is the
/// charpoly of the whole matrix. The off-diagonal pair `(-b_i, 1)`
/// contributes `+b_i` times the previous-previous term.
fn trailing_recurrence<T: Scalar>(b: &[T]) -> Vec<Poly<T>> {
    let n = b.len();
    let z = Poly::new(vec![T::one(), T::zero()]);
    let mut f: Vec<Poly<T>> = Vec::with_capacity(n + 1);
    f.push(Poly::one());
    if n == 1 {
        f.push(Poly::new(vec![T::one(), b[0].clone()]));
        return f;
    }
    f.push(z.clone());
    for k in 2..n {
        let next = &(&z * &f[k - 1]) + &f[k - 2].scale(&b[n - k + 1]);
        f.push(next);
    }
    let corner = Poly::new(vec![T::one(), b[0].clone()]); // z + b0
    let top = &(&corner * &f[n - 1]) + &f[n - 2].scale(&b[1]);
    f.push(top);
    f
}

/// The characteristic polynomial `det(zE - J)`, monic of degree n.
pub fn charpoly<T: Scalar>(j: &SchwarzMatrix<T>) -> Poly<T> {
    trailing_recurrence(&j.b).pop().unwrap()
}

/// The polynomials `f0 .. f_{n-1}` where `f_k` is the characteristic
/// polynomial of the principal submatrix obtained by deleting the first k
/// rows and columns. Matches `wall::wall_from_euclid(charpoly(J)).polys`.
pub fn trailing_charpolys<T: Scalar>(j: &SchwarzMatrix<T>) -> Vec<Poly<T>> {
    let mut f = trailing_recurrence(&j.b);
    f.remove(0); // drop the size-0 block
    f.reverse();
    f
}

/// Charpoly of the same matrix with its top-left entry replaced by zero, so
/// only `b1 .. b_{n-1}` enter: used by the even/odd-part identity.
pub fn zero_corner_charpoly<T: Scalar>(j: &SchwarzMatrix<T>) -> Poly<T> {
    let n = j.n();
    let f = trailing_recurrence(&j.b);
    if n == 1 {
        return Poly::new(vec![T::one(), T::zero()]); // z
    }
    let z = Poly::new(vec![T::one(), T::zero()]);
    &(&z * &f[n - 1]) + &f[n - 2].scale(&j.b[1])
}

/// The cumulative products `b0, b0·b1, ..., b0···b_{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CumulativeProducts<T> {
    prods: Vec<T>,
}

impl<T: Scalar> CumulativeProducts<T> {
    pub fn prods(&self) -> &[T] {
        &self.prods
    }

    pub fn negative_count(&self) -> usize {
        self.prods.iter().filter(|p| p.sign() == Sign::Neg).count()
    }
}

pub fn cumulative_products<T: Scalar>(j: &SchwarzMatrix<T>) -> CumulativeProducts<T> {
    let mut prods = Vec::with_capacity(j.n());
    let mut acc = T::one();
    for bk in &j.b {
        acc = acc * bk.clone();
        prods.push(acc.clone());
    }
    CumulativeProducts { prods }
}

/// Number of eigenvalues of `J` in the open right half-plane, read off the
/// number of negative cumulative products.
pub fn rhp_count_by_signs<T: Scalar>(j: &SchwarzMatrix<T>) -> usize {
    cumulative_products(j).negative_count()
}

/// The matrix obtained by flipping the sign of every displayed entry
/// (`-b_k` becomes `+b_k`, including the corner).
#[derive(Debug, Clone, PartialEq)]
pub struct SignFlippedMatrix<T> {
    b: Vec<T>,
}

impl<T: Scalar> SignFlippedMatrix<T> {
    pub fn b(&self) -> &[T] {
        &self.b
    }

    /// Charpoly by the same trailing recurrence with the pair `(+b_i, 1)`,
    /// which contributes `-b_i` times the previous-previous term.
    pub fn charpoly(&self) -> Poly<T> {
        let b = &self.b;
        let n = b.len();
        let z = Poly::new(vec![T::one(), T::zero()]);
        if n == 1 {
            return Poly::new(vec![T::one(), -b[0].clone()]);
        }
        let mut f: Vec<Poly<T>> = vec![Poly::one(), z.clone()];
        for k in 2..n {
            let next = &(&z * &f[k - 1]) - &f[k - 2].scale(&b[n - k + 1]);
            f.push(next);
        }
        let corner = Poly::new(vec![T::one(), -b[0].clone()]); // z - b0
        &(&corner * &f[n - 1]) - &f[n - 2].scale(&b[1])
    }
}

/// Flips the sign pattern of `J` and returns the flipped matrix together
/// with its characteristic polynomial, which equals the displayed transform
/// `(-1)^{⌊(n+1)/2⌋}[p0(-z^2) + (-1)^n z p1(-z^2)]` of `charpoly(J)`.
pub fn sign_flip_dual<T: Scalar>(j: &SchwarzMatrix<T>) -> Result<(SignFlippedMatrix<T>, Poly<T>)> {
    let m = SignFlippedMatrix { b: j.b.clone() };
    let q = sign_flip_transform(&charpoly(j), j.n())?;
    debug_assert_eq!(m.charpoly(), q);
    Ok((m, q))
}

fn signs_of<T: Scalar>(b: &[T]) -> Vec<Sign> {
    b.iter().map(Scalar::sign).collect()
}

/// κ for the generalized Hurwitz sign pattern, if the pattern applies:
/// the pairwise-product conditions hold and κ counts negative prefix
/// products of the displayed lengths.
fn generalized_pattern(s: &[Sign], n: usize) -> Option<usize> {
    if n % 2 == 0 {
        // b0 > 0, b1b2 > 0, b3b4 > 0, ..., b_{n-3}b_{n-2} > 0
        if !s[0].is_pos() {
            return None;
        }
        let mut i = 1;
        while i + 1 + 1 < n {
            if !s[i].mul(s[i + 1]).is_pos() {
                return None;
            }
            i += 2;
        }
        Some(count_negative_prefixes(s, (2..=n).step_by(2)))
    } else {
        // b0b1 > 0, b2b3 > 0, ..., b_{n-3}b_{n-2} > 0
        let mut i = 0;
        while i + 1 + 1 < n {
            if !s[i].mul(s[i + 1]).is_pos() {
                return None;
            }
            i += 2;
        }
        Some(count_negative_prefixes(s, (1..=n).step_by(2)))
    }
}

/// κ for the almost generalized Hurwitz sign pattern, if it applies.
fn almost_pattern(s: &[Sign], n: usize) -> Option<usize> {
    if n % 2 == 0 {
        // b0b1 > 0, b2b3 > 0, ..., b_{n-2}b_{n-1} > 0
        let mut i = 0;
        while i + 1 < n {
            if !s[i].mul(s[i + 1]).is_pos() {
                return None;
            }
            i += 2;
        }
        Some(count_negative_prefixes(s, (1..n).step_by(2)))
    } else {
        // b0 > 0, b1b2 > 0, ..., b_{n-2}b_{n-1} > 0
        if !s[0].is_pos() {
            return None;
        }
        let mut i = 1;
        while i + 1 < n {
            if !s[i].mul(s[i + 1]).is_pos() {
                return None;
            }
            i += 2;
        }
        if n == 1 {
            return Some(0);
        }
        Some(count_negative_prefixes(s, (2..n).step_by(2)))
    }
}

fn count_negative_prefixes(s: &[Sign], lengths: impl Iterator<Item = usize>) -> usize {
    lengths
        .filter(|&len| {
            s[..len]
                .iter()
                .fold(Sign::Pos, |acc, x| acc.mul(*x))
                .is_neg()
        })
        .count()
}

/// Raw pattern verdicts used by the classifier and exposed for cross-checks:
/// `(type, generalized κ, almost κ)`, where the κ values are `None` when the
/// corresponding pairwise-product conditions fail. The type is II exactly
/// when `b0 < 0` and `b0·b1 < 0`, in which case the matrix `-J` (same `b`
/// with `b0` negated) is the one inspected.
pub fn sign_pattern_raw<T: Scalar>(j: &SchwarzMatrix<T>) -> (HwType, Option<usize>, Option<usize>) {
    let n = j.n();
    let mut s = signs_of(&j.b);
    let mut ty = HwType::I;
    if n >= 2 && s[0].is_neg() && s[0].mul(s[1]).is_neg() {
        s[0] = Sign::Pos;
        ty = HwType::II;
    }
    let gh = generalized_pattern(&s, n);
    let agh = almost_pattern(&s, n);
    (ty, gh, agh)
}

/// Classifies the characteristic polynomial of `J` purely from the sign
/// pattern of `b`. Generalized patterns are tried first; when the
/// generalized and the almost pattern both apply the verdict is Hurwitz
/// stability. Matrices with `b0 < 0` and `b0·b1 < 0` are classified through
/// `-J` and reported as type II.
pub fn classify_by_sign_pattern<T: Scalar>(j: &SchwarzMatrix<T>) -> Classification {
    let n = j.n();
    let (ty, gh, agh) = sign_pattern_raw(j);
    let mut out = match (gh, agh) {
        (Some(kg), Some(ka)) => {
            // both patterns force every entry positive, hence κ = 0
            debug_assert!(kg == 0 && ka == 0);
            finalize_generalized(ty, kg.min(ka), n, false)
        }
        (Some(kappa), None) => finalize_generalized(ty, kappa, n, false),
        (None, Some(kappa)) => finalize_almost_pattern(ty, kappa, n),
        (None, None) => Classification::not_classified(vec![
            "sign pattern matches neither the generalized nor the almost generalized conditions"
                .into(),
        ]),
    };
    if ty == HwType::II {
        out.notes
            .push("classified through -J: b0 < 0 and b0·b1 < 0".into());
    }
    out
}

/// A view of the matrix as the one-sign-change form: top-left entry `-a`,
/// subdiagonal `-c_1 .. -c_k` then `+c_{k+1} .. +c_{n-1}`, all `c_j > 0`.
/// Equivalently `b = (a, c_1, .., c_k, -c_{k+1}, .., -c_{n-1})`.
#[derive(Debug, Clone, PartialEq)]
pub struct SnView<T> {
    pub a: T,
    pub c: Vec<T>,
    pub k: usize,
}

impl<T: Scalar> SnView<T> {
    pub fn new(a: T, c: Vec<T>, k: usize) -> Result<Self> {
        let view = SnView { a, c, k };
        view.validate()?;
        Ok(view)
    }

    pub fn n(&self) -> usize {
        self.c.len() + 1
    }

    pub fn validate(&self) -> Result<()> {
        if self.a.is_zero() {
            return Err(Error::InvalidPattern("a must be nonzero".into()));
        }
        if let Some(i) = self.c.iter().position(|x| x.sign() != Sign::Pos) {
            return Err(Error::InvalidPattern(format!("c{} must be positive", i + 1)));
        }
        if self.k > self.n() - 1 {
            return Err(Error::InvalidPattern(format!(
                "k = {} exceeds n-1 = {}",
                self.k,
                self.n() - 1
            )));
        }
        Ok(())
    }

    pub fn to_matrix(&self) -> Result<SchwarzMatrix<T>> {
        self.validate()?;
        let mut b = vec![self.a.clone()];
        for (idx, cj) in self.c.iter().enumerate() {
            if idx + 1 <= self.k {
                b.push(cj.clone());
            } else {
                b.push(-cj.clone());
            }
        }
        SchwarzMatrix::new(b)
    }

    /// Reads the view off a matrix whose `b1 .. b_{n-1}` have at most one
    /// sign change, from positive to negative.
    pub fn from_matrix(j: &SchwarzMatrix<T>) -> Result<Self> {
        let b = j.b();
        let tail = &b[1..];
        let k = tail.iter().take_while(|x| x.sign() == Sign::Pos).count();
        if tail[k..].iter().any(|x| x.sign() != Sign::Neg) {
            return Err(Error::InvalidPattern(
                "entries b1 .. b_{n-1} must be positives followed by negatives".into(),
            ));
        }
        let c = tail.iter().map(Scalar::abs).collect();
        SnView::new(b[0].clone(), c, k)
    }

    pub fn to_value(&self) -> Value {
        json!({
            "a": self.a.literal(),
            "c": self.c.iter().map(|x| x.literal()).collect::<Vec<_>>(),
            "k": self.k,
        })
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let a = v
            .get("a")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("S_n view needs an \"a\" literal".into()))?;
        let c = v
            .get("c")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("S_n view needs a \"c\" array".into()))?
            .iter()
            .map(|x| {
                let s = x
                    .as_str()
                    .ok_or_else(|| Error::Parse("entries must be string literals".into()))?;
                T::parse_literal(s)
            })
            .collect::<Result<Vec<_>>>()?;
        let k = v
            .get("k")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("S_n view needs an integer \"k\"".into()))?;
        SnView::new(T::parse_literal(a)?, c, k as usize)
    }
}

/// Direct spectral verdict for the one-sign-change form: with `n = 2l` or
/// `2l + 1` and `m = ⌊k/2⌋` (generalized case) the characteristic polynomial
/// is generalized Hurwitz of order `l - m` when `k ≡ n (mod 2)`, and almost
/// generalized Hurwitz of order `l - m` otherwise; type I when `a > 0`,
/// type II when `a < 0`.
pub fn sn_direct<T: Scalar>(view: &SnView<T>) -> Result<Classification> {
    view.validate()?;
    let n = view.n();
    let k = view.k;
    let l = n / 2;
    let ty = if view.a.sign() == Sign::Pos {
        HwType::I
    } else {
        HwType::II
    };
    let generalized_case = k % 2 == n % 2;
    let m = if generalized_case {
        k / 2
    } else if n % 2 == 1 {
        k / 2
    } else {
        (k + 1) / 2
    };
    let kappa = l - m;
    let mut out = if generalized_case {
        finalize_generalized(ty, kappa, n, false)
    } else {
        finalize_almost_pattern(ty, kappa, n)
    };
    out.notes.push(format!(
        "one-sign-change form: n = {n}, k = {k}, order l - m = {kappa}"
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::Kind;
    use crate::scalar::Rat;
    use crate::wall::{cf_evaluate, wall_from_euclid, WallCoefficients};

    fn jm(b: &[i64]) -> SchwarzMatrix<Rat> {
        SchwarzMatrix::from_ints(b).unwrap()
    }

    fn p(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_ints(coeffs)
    }

    #[test]
    fn charpoly_worked_examples() {
        assert_eq!(charpoly(&jm(&[-2, -2, -3])), p(&[1, -2, -5, 6]));
        assert_eq!(charpoly(&jm(&[5])), p(&[1, 5]));
        assert_eq!(charpoly(&jm(&[2, 2])), p(&[1, 2, 2]));
        assert_eq!(charpoly(&jm(&[6, 10, 1])), p(&[1, 6, 11, 6]));
        assert_eq!(charpoly(&jm(&[-1, 1, -1])), p(&[1, -1, 0, 1]));
    }

    #[test]
    fn charpoly_matches_continued_fraction() {
        for b in [&[6, 10, 1][..], &[-2, -2, -3], &[2, 2], &[5], &[1, -3, 2, 7]] {
            let j = jm(b);
            let coeffs = WallCoefficients::from_ints(b).unwrap();
            assert_eq!(charpoly(&j), cf_evaluate(&coeffs).1);
        }
    }

    #[test]
    fn trailing_charpolys_worked_examples() {
        let f = trailing_charpolys(&jm(&[6, 10, 1]));
        assert_eq!(f[1], p(&[1, 0, 1])); // z^2 + 1
        assert_eq!(f[2], p(&[1, 0])); // z

        let f = trailing_charpolys(&jm(&[5]));
        assert_eq!(f, vec![p(&[1, 5])]);

        let f = trailing_charpolys(&jm(&[-2, -2, -3]));
        assert_eq!(f[1], p(&[1, 0, -3])); // z^2 - 3
        assert_eq!(f[2], p(&[1, 0])); // z
    }

    #[test]
    fn trailing_charpolys_match_euclid_trace() {
        for b in [&[6, 10, 1][..], &[-2, -2, -3], &[1, -3, 2, 7]] {
            let j = jm(b);
            let trace = wall_from_euclid(&charpoly(&j)).unwrap();
            assert_eq!(trailing_charpolys(&j), trace.polys);
        }
    }

    #[test]
    fn cumulative_products_worked_examples() {
        let c = cumulative_products(&jm(&[-2, -2, -3]));
        assert_eq!(
            c.prods(),
            &[Rat::from_int(-2), Rat::from_int(4), Rat::from_int(-12)]
        );
        assert_eq!(c.negative_count(), 2);

        let c = cumulative_products(&jm(&[6, 10, 1]));
        assert_eq!(c.negative_count(), 0);

        assert_eq!(rhp_count_by_signs(&jm(&[-5])), 1);
    }

    #[test]
    fn sign_flip_dual_examples() {
        let (m, q) = sign_flip_dual(&jm(&[-2, -2, -3])).unwrap();
        assert_eq!(q, p(&[1, 2, 5, 6]));
        assert_eq!(m.charpoly(), q);

        let (_, q) = sign_flip_dual(&jm(&[5])).unwrap();
        assert_eq!(q, p(&[1, -5]));

        let (_, q) = sign_flip_dual(&jm(&[2, 2])).unwrap();
        assert_eq!(q, p(&[1, -2, -2]));
    }

    #[test]
    fn even_part_is_zero_corner_charpoly_for_even_degree() {
        for b in [&[1, 2, 3, 4][..], &[-1, 5, -2, 7], &[2, 2]] {
            let j = jm(b);
            let parts = crate::poly::even_odd_parts(&charpoly(&j));
            assert_eq!(parts.p0.compose_square(), zero_corner_charpoly(&j));
        }
    }

    #[test]
    fn classify_stable_matrix() {
        let c = classify_by_sign_pattern(&jm(&[6, 10, 1]));
        assert_eq!(c.kind, Kind::HurwitzStable);
    }

    #[test]
    fn classify_self_interlacing_matrix() {
        let c = classify_by_sign_pattern(&jm(&[-2, -2, -3]));
        assert_eq!(c.kind, Kind::SelfInterlacing);
        assert_eq!(c.hw_type, HwType::I);
        assert_eq!(c.order, Some(2));
    }

    #[test]
    fn classify_flipped_matrix_as_type_two() {
        // b0 < 0 and b0·b1 < 0: classify -J, report type II
        let c = classify_by_sign_pattern(&jm(&[-1, 1, -1]));
        assert_eq!(c.kind, Kind::GeneralizedHurwitz);
        assert_eq!(c.hw_type, HwType::II);
        assert_eq!(c.order, Some(1));
    }

    #[test]
    fn sn_view_round_trip() {
        let view = SnView::<Rat>::new(Rat::from_int(2), vec![Rat::from_int(2), Rat::from_int(3)], 1)
            .unwrap();
        let j = view.to_matrix().unwrap();
        assert_eq!(j.b(), jm(&[2, 2, -3]).b());
        assert_eq!(SnView::from_matrix(&j).unwrap(), view);

        assert!(matches!(
            SnView::<Rat>::new(Rat::from_int(1), vec![Rat::from_int(1)], 5),
            Err(Error::InvalidPattern(_))
        ));
    }

    #[test]
    fn sn_direct_examples() {
        // n = 3, k = 1, a > 0: generalized of order 1, type I
        let view =
            SnView::<Rat>::new(Rat::from_int(2), vec![Rat::from_int(2), Rat::from_int(3)], 1)
                .unwrap();
        let c = sn_direct(&view).unwrap();
        assert_eq!(c.kind, Kind::GeneralizedHurwitz);
        assert_eq!(c.hw_type, HwType::I);
        assert_eq!(c.order, Some(1));

        // n = 3, k = 0, a > 0: almost generalized of order 1 = ⌊n/2⌋,
        // which is the self-interlacing (type II) root layout
        let view =
            SnView::<Rat>::new(Rat::from_int(1), vec![Rat::from_int(1), Rat::from_int(1)], 0)
                .unwrap();
        let c = sn_direct(&view).unwrap();
        assert_eq!(c.kind, Kind::SelfInterlacing);
        assert_eq!(c.hw_type, HwType::II);

        // k = n-1, a > 0 reduces to the all-positive stable case
        let view =
            SnView::<Rat>::new(Rat::from_int(1), vec![Rat::from_int(1), Rat::from_int(1)], 2)
                .unwrap();
        assert_eq!(sn_direct(&view).unwrap().kind, Kind::HurwitzStable);
    }
}
