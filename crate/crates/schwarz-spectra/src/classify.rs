//! Polynomial-level classification: (almost) generalized Hurwitz detection
//! with order κ, self-interlacing detection, root-distribution verification,
//! and the duality between Hurwitz stable and self-interlacing polynomials.
//!
//! A generalized Hurwitz polynomial of type I and order κ has exactly κ
//! zeros in the closed right half-plane, all simple nonnegative reals
//! `0 ≤ μ1 < ... < μκ`, with an odd number of zeros in each interval
//! `(-μ_{i+1}, -μ_i)`, an even number in `(-μ1, 0)`, the remaining real
//! zeros left of `-μκ` (odd count for even degree, even count for odd
//! degree), and all nonreal zeros in the open left half-plane. Type II is
//! the reflection `p(-z)`. Order 0 of type I is Hurwitz stability; maximal
//! order with `p(0) ≠ 0` is self-interlacing.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hurwitz::{frobenius_count, hurwitz_determinants, HurwitzTable};
use crate::poly::{hurwitz_dual, reflect, Poly};
use crate::scalar::{Scalar, Sign};
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    HurwitzStable,
    GeneralizedHurwitz,
    AlmostGeneralizedHurwitz,
    SelfInterlacing,
    NotClassified,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::HurwitzStable => "HurwitzStable",
            Kind::GeneralizedHurwitz => "GeneralizedHurwitz",
            Kind::AlmostGeneralizedHurwitz => "AlmostGeneralizedHurwitz",
            Kind::SelfInterlacing => "SelfInterlacing",
            Kind::NotClassified => "NotClassified",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HwType {
    I,
    II,
    NotApplicable,
}

impl HwType {
    pub fn as_str(&self) -> &'static str {
        match self {
            HwType::I => "I",
            HwType::II => "II",
            HwType::NotApplicable => "n/a",
        }
    }

    fn swap(self) -> HwType {
        match self {
            HwType::I => HwType::II,
            HwType::II => HwType::I,
            HwType::NotApplicable => HwType::NotApplicable,
        }
    }
}

/// Tagged classification verdict. `order` is absent for `HurwitzStable` and
/// `NotClassified`; for self-interlacing verdicts it carries the generalized
/// order `⌊(n+1)/2⌋`.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub kind: Kind,
    pub hw_type: HwType,
    pub order: Option<usize>,
    pub notes: Vec<String>,
}

impl Classification {
    pub fn hurwitz_stable() -> Self {
        Classification {
            kind: Kind::HurwitzStable,
            hw_type: HwType::NotApplicable,
            order: None,
            notes: Vec::new(),
        }
    }

    pub fn not_classified(notes: Vec<String>) -> Self {
        Classification {
            kind: Kind::NotClassified,
            hw_type: HwType::NotApplicable,
            order: None,
            notes,
        }
    }

    /// The verdict seen through the generalized Hurwitz lens:
    /// `(type, order)` when the polynomial is generalized Hurwitz (counting
    /// stability as type I of order 0 and self-interlacing as maximal order).
    pub fn generalized_view(&self) -> Option<(HwType, usize)> {
        match self.kind {
            Kind::HurwitzStable => Some((HwType::I, 0)),
            Kind::GeneralizedHurwitz | Kind::SelfInterlacing => {
                Some((self.hw_type, self.order.unwrap_or(0)))
            }
            _ => None,
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "kind": self.kind.as_str(),
            "type": match self.hw_type {
                HwType::NotApplicable => Value::Null,
                t => Value::String(t.as_str().to_string()),
            },
            "order": self.order,
            "notes": self.notes,
        })
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            Kind::HurwitzStable => write!(f, "Hurwitz stable"),
            Kind::GeneralizedHurwitz => write!(
                f,
                "generalized Hurwitz, type {}, order {}",
                self.hw_type.as_str(),
                self.order.unwrap_or(0)
            ),
            Kind::AlmostGeneralizedHurwitz => write!(
                f,
                "almost generalized Hurwitz, type {}, order {}",
                self.hw_type.as_str(),
                self.order.unwrap_or(0)
            ),
            Kind::SelfInterlacing => write!(f, "self-interlacing, type {}", self.hw_type.as_str()),
            Kind::NotClassified => write!(f, "not classified"),
        }
    }
}

/// Final verdict for a generalized Hurwitz finding of type `ty` and order
/// `kappa`: order 0 of type I is Hurwitz stability, maximal order with
/// nonvanishing constant term is self-interlacing.
pub fn finalize_generalized(ty: HwType, kappa: usize, n: usize, vanishes_at_zero: bool) -> Classification {
    let d = (n + 1) / 2;
    if kappa == 0 && ty == HwType::I {
        return Classification::hurwitz_stable();
    }
    if kappa == d && !vanishes_at_zero {
        return Classification {
            kind: Kind::SelfInterlacing,
            hw_type: ty,
            order: Some(d),
            notes: Vec::new(),
        };
    }
    let mut notes = Vec::new();
    if kappa == 0 {
        notes.push("order 0 of type II: all zeros in the open right half-plane".into());
    }
    Classification {
        kind: Kind::GeneralizedHurwitz,
        hw_type: ty,
        order: Some(kappa),
        notes,
    }
}

/// Final verdict for an almost generalized Hurwitz finding coming from a
/// matrix sign pattern. Order 0 of type I is Hurwitz stability; the maximal
/// order `⌊n/2⌋` is self-interlacing of the opposite type (the zero layout
/// forced by `z·p(z)` being generalized Hurwitz of maximal order).
pub fn finalize_almost_pattern(ty: HwType, kappa: usize, n: usize) -> Classification {
    if kappa == 0 && ty == HwType::I {
        let mut c = Classification::hurwitz_stable();
        c.notes
            .push("almost generalized Hurwitz pattern of order 0".into());
        return c;
    }
    if kappa == n / 2 {
        return Classification {
            kind: Kind::SelfInterlacing,
            hw_type: ty.swap(),
            order: Some((n + 1) / 2),
            notes: vec![format!(
                "almost generalized Hurwitz pattern of type {}, order {kappa}",
                ty.as_str()
            )],
        };
    }
    Classification {
        kind: Kind::AlmostGeneralizedHurwitz,
        hw_type: ty,
        order: Some(kappa),
        notes: Vec::new(),
    }
}

enum Attempt {
    Applies { kappa: usize, vanishes: bool },
    ChainFails,
    Degenerate(String),
}

/// Type-I generalized Hurwitz test on one polynomial:
/// Δ_{n-1} > 0, Δ_{n-3} > 0, ...; then
/// κ = V^F(Δ_n, Δ_{n-2}, ..., 1) when p(0) ≠ 0,
/// κ = V^F(Δ_{n-2}, Δ_{n-4}, ..., 1) + 1 when p(0) = 0.
fn try_generalized_type_i<T: Scalar>(p: &Poly<T>, table: &HurwitzTable<T>) -> Attempt {
    let n = p.degree();
    let signs = table.signs();
    let at = |j: usize| signs[j - 1];

    let mut j = n as i64 - 1;
    while j >= 1 {
        match at(j as usize) {
            Sign::Pos => {}
            Sign::Zero => {
                return Attempt::Degenerate(format!(
                    "Δ{j} vanishes inside the strict-inequality chain"
                ))
            }
            Sign::Neg => return Attempt::ChainFails,
        }
        j -= 2;
    }

    let vanishes = at(n).is_zero(); // Δn = an·Δn-1 with Δn-1 > 0 checked above
    let start = if vanishes { n as i64 - 2 } else { n as i64 };
    let mut seq: Vec<Sign> = Vec::new();
    let mut j = start;
    while j >= 1 {
        seq.push(at(j as usize));
        j -= 2;
    }
    seq.push(Sign::Pos); // the terminal 1
    match frobenius_count(&seq) {
        Ok(changes) => Attempt::Applies {
            kappa: changes + usize::from(vanishes),
            vanishes,
        },
        Err(_) => Attempt::Degenerate(format!(
            "Δ{start} vanishes at the boundary of the sign-change sequence"
        )),
    }
}

/// Classifies `p` as generalized Hurwitz: type I directly, type II through
/// `p(-z)`. Order 0 of type I reports Hurwitz stability; maximal order with
/// `p(0) ≠ 0` reports self-interlacing. Failure of both directions yields
/// `NotClassified` (with a degeneracy note when a needed determinant is 0).
pub fn generalized_hurwitz<T: Scalar>(p: &Poly<T>) -> Result<Classification> {
    let p = p.require_monic()?;
    let n = p.degree();
    if n == 0 {
        return Err(Error::InvalidInput("classification needs degree ≥ 1".into()));
    }
    let table = hurwitz_determinants(&p)?;
    match try_generalized_type_i(&p, &table) {
        Attempt::Applies { kappa, vanishes } => {
            Ok(finalize_generalized(HwType::I, kappa, n, vanishes))
        }
        Attempt::Degenerate(note) => Ok(Classification::not_classified(vec![note])),
        Attempt::ChainFails => {
            let r = reflect(&p);
            let table_r = hurwitz_determinants(&r)?;
            match try_generalized_type_i(&r, &table_r) {
                Attempt::Applies { kappa, vanishes } => {
                    Ok(finalize_generalized(HwType::II, kappa, n, vanishes))
                }
                Attempt::Degenerate(note) => Ok(Classification::not_classified(vec![format!(
                    "reflected polynomial: {note}"
                )])),
                Attempt::ChainFails => Ok(Classification::not_classified(vec![
                    "neither p nor p(-z) satisfies the generalized Hurwitz inequalities".into(),
                ])),
            }
        }
    }
}

/// Type-I almost generalized Hurwitz test:
/// Δ_n > 0, Δ_{n-2} > 0, ...; κ = V^F(Δ_{n-1}, Δ_{n-3}, ..., 1).
fn try_almost_type_i<T: Scalar>(p: &Poly<T>, table: &HurwitzTable<T>) -> Attempt {
    let n = p.degree();
    let signs = table.signs();
    let at = |j: usize| signs[j - 1];

    let mut j = n as i64;
    while j >= 1 {
        match at(j as usize) {
            Sign::Pos => {}
            Sign::Zero => {
                return Attempt::Degenerate(format!(
                    "Δ{j} vanishes inside the strict-inequality chain"
                ))
            }
            Sign::Neg => return Attempt::ChainFails,
        }
        j -= 2;
    }

    let mut seq: Vec<Sign> = Vec::new();
    let mut j = n as i64 - 1;
    while j >= 1 {
        seq.push(at(j as usize));
        j -= 2;
    }
    seq.push(Sign::Pos);
    match frobenius_count(&seq) {
        Ok(changes) => Attempt::Applies {
            kappa: changes,
            vanishes: false,
        },
        Err(_) => Attempt::Degenerate(format!(
            "Δ{} vanishes at the boundary of the sign-change sequence",
            n - 1
        )),
    }
}

/// Classifies `p` as almost generalized Hurwitz (the property that `z·p(z)`
/// is generalized Hurwitz of order κ+1): type I directly, type II through
/// `p(-z)`. The verdict keeps the almost-generalized kind; order 0 of type I
/// coincides with Hurwitz stability and is noted as such.
pub fn almost_generalized_hurwitz<T: Scalar>(p: &Poly<T>) -> Result<Classification> {
    let p = p.require_monic()?;
    let n = p.degree();
    if n == 0 {
        return Err(Error::InvalidInput("classification needs degree ≥ 1".into()));
    }
    if p.constant_term().is_zero() {
        return Err(Error::VanishesAtZero);
    }
    let table = hurwitz_determinants(&p)?;
    let make = |ty: HwType, kappa: usize| {
        let mut notes = Vec::new();
        if kappa == 0 && ty == HwType::I {
            notes.push("order 0 of type I coincides with Hurwitz stability".into());
        }
        Classification {
            kind: Kind::AlmostGeneralizedHurwitz,
            hw_type: ty,
            order: Some(kappa),
            notes,
        }
    };
    match try_almost_type_i(&p, &table) {
        Attempt::Applies { kappa, .. } => Ok(make(HwType::I, kappa)),
        Attempt::Degenerate(note) => Ok(Classification::not_classified(vec![note])),
        Attempt::ChainFails => {
            let r = reflect(&p);
            let table_r = hurwitz_determinants(&r)?;
            match try_almost_type_i(&r, &table_r) {
                Attempt::Applies { kappa, .. } => Ok(make(HwType::II, kappa)),
                Attempt::Degenerate(note) => Ok(Classification::not_classified(vec![format!(
                    "reflected polynomial: {note}"
                )])),
                Attempt::ChainFails => Ok(Classification::not_classified(vec![
                    "neither p nor p(-z) satisfies the almost generalized Hurwitz inequalities"
                        .into(),
                ])),
            }
        }
    }
}

/// A spectrum resolved into its real zeros (with multiplicity), its nonreal
/// conjugate pairs, and the sorted ladder `μ1 < ... < μκ` of closed
/// right-half-plane candidates.
#[derive(Debug, Clone)]
pub struct RootPattern<T> {
    pub roots: Spectrum<T>,
    pub mu: Vec<T>,
    reals: Vec<T>,
    pairs: Vec<(T, T)>,
}

impl<T: Scalar> RootPattern<T> {
    pub fn extract(s: &Spectrum<T>) -> Result<Self> {
        let (reals, pairs) = s.conjugate_partition()?;
        let mut mu: Vec<T> = reals
            .iter()
            .filter(|r| r.sign() != Sign::Neg)
            .cloned()
            .collect();
        mu.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(RootPattern {
            roots: s.clone(),
            mu,
            reals,
            pairs,
        })
    }
}

/// Outcome of the root-distribution check.
#[derive(Debug, Clone, PartialEq)]
pub enum RootVerdict {
    /// Certifies a generalized Hurwitz type-I layout of this order.
    GeneralizedTypeI { order: usize },
    /// Names the first failing clause.
    NotGeneralized { clause: String },
}

fn boundary_ambiguous<T: Scalar>(x: &T, boundary: &T) -> bool {
    if T::EXACT {
        return false;
    }
    let dx = (x.approx() - boundary.approx()).abs();
    dx > 0.0 && dx <= 1e-9 * (1.0 + x.approx().abs())
}

/// Checks every clause of the type-I definition against an explicit root
/// multiset and certifies the order, or names the failing clause. On the
/// float backend a root sitting within tolerance of an interval boundary is
/// an error rather than a guess.
pub fn verify_root_distribution<T: Scalar>(r: &RootPattern<T>, n: usize) -> Result<RootVerdict> {
    let fail = |clause: &str| {
        Ok(RootVerdict::NotGeneralized {
            clause: clause.to_string(),
        })
    };
    if r.reals.len() + 2 * r.pairs.len() != n {
        return Err(Error::InvalidInput(format!(
            "spectrum has {} zeros, expected {n}",
            r.reals.len() + 2 * r.pairs.len()
        )));
    }

    // nonreal zeros must lie in the open left half-plane
    for (re, im) in &r.pairs {
        if re.sign() != Sign::Neg {
            return fail("a nonreal zero lies outside the open left half-plane");
        }
        if !T::EXACT && re.approx().abs() <= 1e-9 * (1.0 + im.approx().abs()) {
            return Err(Error::ToleranceAmbiguity(format!(
                "{}+{}i",
                re.literal(),
                im.literal()
            )));
        }
    }

    // the closed right-half-plane zeros are the μ ladder: simple by clause
    let mu = &r.mu;
    let kappa = mu.len();
    for w in mu.windows(2) {
        if w[0] == w[1] {
            return fail("a closed right-half-plane zero is not simple");
        }
        if !T::EXACT && boundary_ambiguous(&w[1], &w[0]) {
            return Err(Error::ToleranceAmbiguity(w[1].literal()));
        }
    }
    if kappa == 0 {
        // order 0: everything already verified to be in the open left half-plane
        return Ok(RootVerdict::GeneralizedTypeI { order: 0 });
    }

    let negatives: Vec<T> = r
        .reals
        .iter()
        .filter(|x| x.sign() == Sign::Neg)
        .cloned()
        .collect();

    // p(-μi) ≠ 0 for i ≥ 2, and for i = 1 when μ1 > 0
    for (i, m) in mu.iter().enumerate() {
        if i == 0 && m.sign() == Sign::Zero {
            continue;
        }
        let neg_m = -m.clone();
        if negatives.iter().any(|x| *x == neg_m) {
            return fail("p vanishes at the negative of a right-half-plane zero");
        }
        for x in &negatives {
            if boundary_ambiguous(x, &neg_m) {
                return Err(Error::ToleranceAmbiguity(x.literal()));
            }
        }
    }

    // odd number of zeros in each (-μ_{i+1}, -μ_i)
    for i in 0..kappa - 1 {
        let lo = -mu[i + 1].clone();
        let hi = -mu[i].clone();
        let count = negatives.iter().filter(|x| **x > lo && **x < hi).count();
        if count % 2 == 0 {
            return fail("an interval between consecutive -μ values has an even number of zeros");
        }
    }

    // even number of zeros in (-μ1, 0)
    let lo = -mu[0].clone();
    let inner = negatives.iter().filter(|x| **x > lo).count();
    if inner % 2 == 1 {
        return fail("the interval (-μ1, 0) has an odd number of zeros");
    }

    // remaining real zeros lie in (-∞, -μκ): odd count for n = 2l,
    // even count for n = 2l + 1
    let far_lo = -mu[kappa - 1].clone();
    let far = negatives.iter().filter(|x| **x < far_lo).count();
    if n % 2 == 0 {
        if far % 2 == 0 {
            return fail("the count of zeros left of -μκ must be odd for even degree");
        }
    } else if far % 2 == 1 {
        return fail("the count of zeros left of -μκ must be even for odd degree");
    }

    Ok(RootVerdict::GeneralizedTypeI { order: kappa })
}

/// Classifies a spectrum by its root distribution alone: type I directly,
/// type II through the negated spectrum.
pub fn root_classify<T: Scalar>(s: &Spectrum<T>, n: usize) -> Result<Option<(HwType, usize)>> {
    let pattern = RootPattern::extract(s)?;
    if let RootVerdict::GeneralizedTypeI { order } = verify_root_distribution(&pattern, n)? {
        return Ok(Some((HwType::I, order)));
    }
    let negated = Spectrum::new(s.roots().iter().map(|z| -z.clone()).collect());
    let pattern = RootPattern::extract(&negated)?;
    if let RootVerdict::GeneralizedTypeI { order } = verify_root_distribution(&pattern, n)? {
        return Ok(Some((HwType::II, order)));
    }
    Ok(None)
}

/// Self-interlacing detection: all zeros real, simple and nonzero, with
/// strictly increasing absolute values and alternating signs. Type I starts
/// positive (`0 < λ1 < -λ2 < λ3 < ...`), type II starts negative.
pub fn self_interlacing<T: Scalar>(s: &Spectrum<T>) -> Option<HwType> {
    let (reals, pairs) = s.conjugate_partition().ok()?;
    if !pairs.is_empty() || reals.is_empty() {
        return None;
    }
    if reals.iter().any(|x| x.sign() == Sign::Zero) {
        return None;
    }
    let mut sorted = reals;
    sorted.sort_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap());
    for w in sorted.windows(2) {
        if w[0].abs() >= w[1].abs() {
            return None;
        }
        if w[0].sign() == w[1].sign() {
            return None;
        }
    }
    match sorted[0].sign() {
        Sign::Pos => Some(HwType::I),
        Sign::Neg => Some(HwType::II),
        Sign::Zero => None,
    }
}

/// Computes the generalized orders of `p` and of its dual
/// `q(z) = p0(-z^2) - z p1(-z^2)` and checks the complementarity
/// `order(q) = ⌊(n+1)/2⌋ - order(p)` with matching types.
pub fn duality_order_check<T: Scalar>(p: &Poly<T>) -> Result<(usize, usize)> {
    let p = p.require_monic()?;
    if p.constant_term().is_zero() {
        return Err(Error::VanishesAtZero);
    }
    let n = p.degree();
    let class_p = generalized_hurwitz(&p)?;
    let (ty_p, kappa_p) = class_p
        .generalized_view()
        .ok_or_else(|| Error::NotGeneralizedHurwitz(format!("{p}")))?;
    let (dual, _) = hurwitz_dual(&p)?;
    let class_q = generalized_hurwitz(&dual)?;
    let (ty_q, kappa_q) = class_q
        .generalized_view()
        .ok_or_else(|| Error::NotGeneralizedHurwitz(format!("dual {dual}")))?;
    let d = (n + 1) / 2;
    if kappa_q != d - kappa_p || ty_p != ty_q {
        return Err(Error::Inconsistency(format!(
            "duality violated: order {kappa_p} type {} vs dual order {kappa_q} type {}",
            ty_p.as_str(),
            ty_q.as_str()
        )));
    }
    Ok((kappa_p, kappa_q))
}

/// The four admissible eigenvalue distributions of the one-sign-change
/// matrix with `b = (-a, +c1, -c2, ..., -c_{n-1})`, `a, c_j > 0`:
///
/// 1. a strict ladder `0 < -λ1 < λ2 < -λ3 < ...` of n-2 reals plus one
///    conjugate pair with positive real part;
/// 2. the two smallest zeros both positive: `0 < λ1 ≤ λ2 < -λ3 < λ4 < ...`;
/// 3. three consecutive positives in the middle of the ladder
///    (`λ_{2k} ≤ λ_{2k+1} ≤ λ_{2k+2}` for some admissible k);
/// 4. the defect at the top of the ladder, with
///    `(-1)^n λ_{n-2} < λ_{n-1}` required when n is odd.
pub fn bebiano_case<T: Scalar>(s: &Spectrum<T>, n: usize) -> Option<u8> {
    if s.len() != n || n < 2 {
        return None;
    }
    let (reals, pairs) = s.conjugate_partition().ok()?;
    if pairs.len() == 1 {
        let (re, _) = &pairs[0];
        if re.sign() != Sign::Pos {
            return None;
        }
        return if ladder_type_ii(&reals) { Some(1) } else { None };
    }
    if !pairs.is_empty() {
        return None;
    }

    // all-real analysis: sort by absolute value, signs must follow (-1)^j
    // except for exactly one positive entry at an odd index (the defect)
    let mut sorted = reals;
    sorted.sort_by(|a, b| {
        a.abs()
            .partial_cmp(&b.abs())
            .unwrap()
            .then(a.partial_cmp(b).unwrap())
    });
    if sorted.iter().any(|x| x.sign() == Sign::Zero) {
        return None;
    }
    let mut defect = None;
    for (idx, x) in sorted.iter().enumerate() {
        let j = idx + 1;
        let expected = if j % 2 == 0 { Sign::Pos } else { Sign::Neg };
        if x.sign() == expected {
            continue;
        }
        if expected == Sign::Pos {
            return None; // a negative where the ladder needs a positive
        }
        if defect.replace(j).is_some() {
            return None; // more than one defect
        }
    }
    let j_star = defect?;
    let last_odd = if n % 2 == 1 { n } else { n - 1 };
    let case = if j_star == 1 {
        2
    } else if j_star == last_odd {
        4
    } else {
        3
    };

    // non-strict |·| comparisons are allowed only inside the defect block
    let lax: &[usize] = match case {
        2 => &[1],
        3 => &[j_star - 1, j_star],
        4 if n % 2 == 0 => &[n - 2, n - 1],
        _ => &[n - 1],
    };
    for (idx, w) in sorted.windows(2).enumerate() {
        let j = idx + 1; // comparing positions j and j+1
        let lo = w[0].abs();
        let hi = w[1].abs();
        if lax.contains(&j) {
            if lo > hi {
                return None;
            }
        } else if lo >= hi {
            return None;
        }
    }
    if case == 3 {
        let k = (j_star - 1) / 2;
        if k < 1 || k > (n.saturating_sub(3)) / 2 {
            return None;
        }
    }
    Some(case)
}

/// Strict type-II ladder: `0 < -λ1 < λ2 < -λ3 < ...` (empty lists pass).
fn ladder_type_ii<T: Scalar>(reals: &[T]) -> bool {
    let mut sorted = reals.to_vec();
    sorted.sort_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap());
    for (idx, x) in sorted.iter().enumerate() {
        let expected = if (idx + 1) % 2 == 0 { Sign::Pos } else { Sign::Neg };
        if x.sign() != expected {
            return false;
        }
    }
    sorted.windows(2).all(|w| w[0].abs() < w[1].abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn p(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_ints(coeffs)
    }

    #[test]
    fn classify_worked_cubics() {
        let c = generalized_hurwitz(&p(&[1, 6, 11, 6])).unwrap();
        assert_eq!(c.kind, Kind::HurwitzStable);

        let c = generalized_hurwitz(&p(&[1, -2, -5, 6])).unwrap();
        assert_eq!(c.kind, Kind::SelfInterlacing);
        assert_eq!(c.hw_type, HwType::I);
        assert_eq!(c.order, Some(2));

        let c = generalized_hurwitz(&p(&[1, -1, 0, 1])).unwrap();
        assert_eq!(c.kind, Kind::GeneralizedHurwitz);
        assert_eq!(c.hw_type, HwType::II);
        assert_eq!(c.order, Some(1));
    }

    #[test]
    fn classify_vanishing_constant_term() {
        // z(z+1)(z+2) = z^3 + 3z^2 + 2z: stable factor plus the zero at 0
        let c = generalized_hurwitz(&p(&[1, 3, 2, 0])).unwrap();
        assert_eq!(c.kind, Kind::GeneralizedHurwitz);
        assert_eq!(c.hw_type, HwType::I);
        assert_eq!(c.order, Some(1));
    }

    #[test]
    fn almost_worked_examples() {
        let c = almost_generalized_hurwitz(&p(&[1, 6, 11, 6])).unwrap();
        assert_eq!(c.kind, Kind::AlmostGeneralizedHurwitz);
        assert_eq!(c.hw_type, HwType::I);
        assert_eq!(c.order, Some(0));

        // roots -1, 2
        let c = almost_generalized_hurwitz(&p(&[1, -1, -2])).unwrap();
        assert_eq!(c.kind, Kind::AlmostGeneralizedHurwitz);
        assert_eq!(c.hw_type, HwType::I);
        assert_eq!(c.order, Some(1));

        let c = almost_generalized_hurwitz(&p(&[1, 0, 1])).unwrap();
        assert_eq!(c.kind, Kind::NotClassified);
        assert!(!c.notes.is_empty());

        assert!(matches!(
            almost_generalized_hurwitz(&p(&[1, 1, 0])),
            Err(Error::VanishesAtZero)
        ));
    }

    #[test]
    fn almost_cross_check_via_shift() {
        // z·p(z) must be generalized Hurwitz of order κ+1 with the same type
        for coeffs in [&[1, 6, 11, 6][..], &[1, -1, -2], &[1, 2, 2]] {
            let q = p(coeffs);
            let c = almost_generalized_hurwitz(&q).unwrap();
            if c.kind != Kind::AlmostGeneralizedHurwitz {
                continue;
            }
            let shifted = q.shift_up(1);
            let g = generalized_hurwitz(&shifted).unwrap();
            let (ty, kappa) = g.generalized_view().unwrap();
            assert_eq!(kappa, c.order.unwrap() + 1, "for {q}");
            if c.order.unwrap() + 1 < (shifted.degree() + 2) / 2 {
                assert_eq!(ty, c.hw_type);
            }
        }
    }

    #[test]
    fn root_distribution_worked_examples() {
        let s = Spectrum::<Rat>::from_reals(&[1, -2, 3]);
        let r = RootPattern::extract(&s).unwrap();
        assert_eq!(
            verify_root_distribution(&r, 3).unwrap(),
            RootVerdict::GeneralizedTypeI { order: 2 }
        );

        let s = Spectrum::<Rat>::from_reals(&[-1, -2, -3]);
        let r = RootPattern::extract(&s).unwrap();
        assert_eq!(
            verify_root_distribution(&r, 3).unwrap(),
            RootVerdict::GeneralizedTypeI { order: 0 }
        );

        // roots {2, -1±2i}: certifies order 1
        let mut roots = Spectrum::<Rat>::from_pairs_ints(&[(-1, 2)]).roots().to_vec();
        roots.push(num::complex::Complex::new(Rat::from_int(2), Rat::from_int(0)));
        let s = Spectrum::new(roots);
        let r = RootPattern::extract(&s).unwrap();
        assert_eq!(
            verify_root_distribution(&r, 3).unwrap(),
            RootVerdict::GeneralizedTypeI { order: 1 }
        );

        // {-1, -2, 3, 4} is not generalized: no zeros between -4 and -3
        let s = Spectrum::<Rat>::from_reals(&[-1, -2, 3, 4]);
        let r = RootPattern::extract(&s).unwrap();
        assert!(matches!(
            verify_root_distribution(&r, 4).unwrap(),
            RootVerdict::NotGeneralized { .. }
        ));
    }

    #[test]
    fn self_interlacing_examples() {
        assert_eq!(
            self_interlacing(&Spectrum::<Rat>::from_reals(&[1, -2, 3])),
            Some(HwType::I)
        );
        assert_eq!(
            self_interlacing(&Spectrum::<Rat>::from_reals(&[-1, 2])),
            Some(HwType::II)
        );
        assert_eq!(self_interlacing(&Spectrum::<Rat>::from_reals(&[1, 2])), None);
        assert_eq!(
            self_interlacing(&Spectrum::<Rat>::from_reals(&[1, -1])),
            None
        );
    }

    #[test]
    fn duality_worked_examples() {
        assert_eq!(duality_order_check(&p(&[1, -2, -5, 6])).unwrap(), (2, 0));
        assert_eq!(duality_order_check(&p(&[1, 6, 11, 6])).unwrap(), (0, 2));
        assert_eq!(duality_order_check(&p(&[1, 7])).unwrap(), (0, 1));
    }

    #[test]
    fn bebiano_cases() {
        // case 2: 0 < 1 ≤ 2 < 3
        let s = Spectrum::<Rat>::from_reals(&[1, 2, -3]);
        assert_eq!(bebiano_case(&s, 3), Some(2));

        // case 4: 0 < 1 < 2 ≤ 3 with the n-odd strictness 1 < 2
        let s = Spectrum::<Rat>::from_reals(&[-1, 2, 3]);
        assert_eq!(bebiano_case(&s, 3), Some(4));

        // case 1: one pair with positive real part plus a negative real
        let mut roots = Spectrum::<Rat>::from_pairs_ints(&[(1, 1)]).roots().to_vec();
        roots.push(num::complex::Complex::new(Rat::from_int(-1), Rat::from_int(0)));
        assert_eq!(bebiano_case(&Spectrum::new(roots), 3), Some(1));

        // case 3 needs n ≥ 5: sorted by |·| the signs run -,+,+,+,-
        // with the lone defect at position 3
        let s = Spectrum::<Rat>::from_reals(&[-1, 2, 3, 4, -5]);
        assert_eq!(bebiano_case(&s, 5), Some(3));

        // a perfect ladder is self-interlacing, not one of the four cases
        let s = Spectrum::<Rat>::from_reals(&[-1, 2, -3]);
        assert_eq!(bebiano_case(&s, 3), None);

        // pair with nonpositive real part fails case 1
        let mut roots = Spectrum::<Rat>::from_pairs_ints(&[(-1, 1)]).roots().to_vec();
        roots.push(num::complex::Complex::new(Rat::from_int(-1), Rat::from_int(0)));
        assert_eq!(bebiano_case(&Spectrum::new(roots), 3), None);
    }
}
