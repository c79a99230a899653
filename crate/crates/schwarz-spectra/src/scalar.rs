//! Coefficient backends.
//!
//! All symbolic computation runs over a [`Scalar`] type. The default backend
//! is [`Rat`] (arbitrary-precision rationals): Hurwitz minors are
//! determinantally unstable in floating point, and exact arithmetic makes the
//! theorem-level tests bit-exact. A parallel `f64` backend exists for the
//! numerical oracle and for user-supplied irrational spectra; sign decisions
//! on that backend go through tolerance policies instead of exact tests.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num::{BigInt, BigRational, Num, ToPrimitive};

use crate::error::{Error, Result};

/// Exact rational scalar: reduced fraction with positive denominator.
pub type Rat = BigRational;

/// Sign of a scalar, with `Zero` meaning "zero under the backend's policy".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn is_pos(self) -> bool {
        self == Sign::Pos
    }
    pub fn is_neg(self) -> bool {
        self == Sign::Neg
    }
    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    /// Sign of a product.
    pub fn mul(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (Sign::Pos, Sign::Pos) | (Sign::Neg, Sign::Neg) => Sign::Pos,
            _ => Sign::Neg,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
        }
    }
}

/// A field the library can compute over.
///
/// `Num` supplies zero/one and the ring operations; the rest is what the
/// classification machinery needs: exact signs, a lossy `f64` view for
/// tolerance scaling and the oracle, and the literal syntax used in JSON.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + PartialEq + PartialOrd + fmt::Debug + fmt::Display + 'static
{
    /// True for backends where `==` and sign tests are exact.
    const EXACT: bool;

    /// Short backend name used in reports.
    const NAME: &'static str;

    fn from_int(v: i64) -> Self;

    /// Lossy view used for tolerance scaling and oracle hand-off.
    fn approx(&self) -> f64;

    /// Exact sign of the value (no tolerance applied).
    fn sign(&self) -> Sign;

    /// Parse a literal in this backend's grammar.
    fn parse_literal(s: &str) -> Result<Self>;

    /// Render the value as a literal that `parse_literal` round-trips.
    fn literal(&self) -> String;

    fn abs(&self) -> Self {
        if self.sign() == Sign::Neg {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

/// Checks the rational literal grammar: optional '-', digits, optional '/' digits.
fn valid_rational_literal(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    if body.is_empty() {
        return false;
    }
    let mut parts = body.splitn(2, '/');
    let num = parts.next().unwrap_or("");
    let all_digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(num) {
        return false;
    }
    match parts.next() {
        None => true,
        Some(den) => all_digits(den),
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;
    const NAME: &'static str = "exact";

    fn from_int(v: i64) -> Self {
        Rat::from_integer(BigInt::from(v))
    }

    fn approx(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn sign(&self) -> Sign {
        match self.cmp(&Rat::from_integer(BigInt::from(0))) {
            Ordering::Less => Sign::Neg,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Pos,
        }
    }

    fn parse_literal(s: &str) -> Result<Self> {
        let s = s.trim();
        if !valid_rational_literal(s) {
            return Err(Error::Parse(format!(
                "`{s}` is not a rational literal (expected e.g. \"-3\" or \"22/7\"); \
                 decimal literals need the float backend"
            )));
        }
        Rat::from_str(s).map_err(|e| Error::Parse(format!("bad rational `{s}`: {e}")))
    }

    fn literal(&self) -> String {
        self.to_string()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;
    const NAME: &'static str = "float";

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn approx(&self) -> f64 {
        *self
    }

    fn sign(&self) -> Sign {
        if *self == 0.0 {
            Sign::Zero
        } else if *self < 0.0 {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }

    fn parse_literal(s: &str) -> Result<Self> {
        let s = s.trim();
        // The float backend also accepts the rational grammar so that exact
        // fixtures can be replayed on it.
        if valid_rational_literal(s) {
            if let Some((num, den)) = s.split_once('/') {
                let n: f64 = num
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad literal `{s}`: {e}")))?;
                let d: f64 = den
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad literal `{s}`: {e}")))?;
                if d == 0.0 {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                return Ok(n / d);
            }
        }
        let v: f64 = s
            .parse()
            .map_err(|e| Error::Parse(format!("bad numeric literal `{s}`: {e}")))?;
        if !v.is_finite() {
            return Err(Error::Parse(format!("non-finite literal `{s}`")));
        }
        Ok(v)
    }

    fn literal(&self) -> String {
        format!("{self}")
    }
}

/// Default tolerance for conjugate pairing on the float backend.
pub const EPS_CONJ: f64 = 1e-9;

// Float-backend tolerances, overridable by the CLI. Zero bits mark "use the
// default" so the statics can be const-initialized.
static EPS_ZERO_BITS: std::sync::atomic::AtomicU64 = std::sync::atomic::AtomicU64::new(0);
static EPS_IM_BITS: std::sync::atomic::AtomicU64 = std::sync::atomic::AtomicU64::new(0);

const EPS_ZERO_DEFAULT: f64 = 1e-9;
const EPS_IM_DEFAULT: f64 = 1e-8;

fn load_eps(cell: &std::sync::atomic::AtomicU64, default: f64) -> f64 {
    let bits = cell.load(std::sync::atomic::Ordering::Relaxed);
    if bits == 0 {
        default
    } else {
        f64::from_bits(bits)
    }
}

fn store_eps(cell: &std::sync::atomic::AtomicU64, value: Option<f64>) -> Result<()> {
    match value {
        None => {
            cell.store(0, std::sync::atomic::Ordering::Relaxed);
            Ok(())
        }
        Some(v) if v > 0.0 && v.is_finite() => {
            cell.store(v.to_bits(), std::sync::atomic::Ordering::Relaxed);
            Ok(())
        }
        Some(v) => Err(Error::Parse(format!("tolerances must be positive, got {v}"))),
    }
}

/// Relative threshold below which a float-backend Hurwitz determinant counts
/// as zero (and raises `DegenerateHurwitz` rather than guessing a sign).
pub fn eps_zero() -> f64 {
    load_eps(&EPS_ZERO_BITS, EPS_ZERO_DEFAULT)
}

/// Relative threshold for treating a float root as real.
pub fn eps_im() -> f64 {
    load_eps(&EPS_IM_BITS, EPS_IM_DEFAULT)
}

/// Overrides ε_zero (`None` restores the default). Values must be positive.
pub fn set_eps_zero(value: Option<f64>) -> Result<()> {
    store_eps(&EPS_ZERO_BITS, value)
}

/// Overrides ε_im (`None` restores the default). Values must be positive.
pub fn set_eps_im(value: Option<f64>) -> Result<()> {
    store_eps(&EPS_IM_BITS, value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_literals_round_trip() {
        for s in ["0", "-3", "22/7", "-5/9", "360"] {
            let v = Rat::parse_literal(s).unwrap();
            assert_eq!(v.literal(), s);
        }
    }

    #[test]
    fn exact_backend_rejects_decimal_literals() {
        for s in ["1.5", "1e3", "nan", "2/", "/3", "--4", "+4"] {
            assert!(Rat::parse_literal(s).is_err(), "accepted `{s}`");
        }
    }

    #[test]
    fn float_backend_accepts_both_grammars() {
        assert_eq!(f64::parse_literal("1.5").unwrap(), 1.5);
        assert_eq!(f64::parse_literal("3/4").unwrap(), 0.75);
        assert!(f64::parse_literal("inf").is_err());
    }

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Neg.mul(Sign::Neg), Sign::Pos);
        assert_eq!(Sign::Neg.mul(Sign::Pos), Sign::Neg);
        assert!(Sign::Zero.mul(Sign::Pos).is_zero());
        assert_eq!(Rat::from_int(-7).sign(), Sign::Neg);
        assert_eq!(0.0f64.sign(), Sign::Zero);
    }
}
