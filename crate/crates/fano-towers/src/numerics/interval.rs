//! Closed real intervals with arbitrary-precision endpoints and outward
//! directed rounding.
//!
//! Every operation rounds the lower endpoint toward −∞ and the upper endpoint
//! toward +∞ at the requested working precision, so the exact real result is
//! always contained in the output interval. Because each endpoint is produced
//! by a single correct rounding of a monotone function of the input
//! endpoints, enclosures computed at a higher precision nest inside those
//! computed at a lower one — the property that makes adaptive refinement in
//! [`decide_ge`](super::decide_ge) sound.

use rug::float::Round;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use super::EvalError;

/// A closed interval `[lo, hi]` whose endpoints are directed-rounded
/// arbitrary-precision floats.
#[derive(Clone, Debug)]
pub struct RealInterval {
    lo: Float,
    hi: Float,
}

/// Certified enclosure of `value^(1/k)`.
///
/// The result is a point interval whenever `value` is a perfect `k`-th power
/// representable at `prec` bits, because the underlying correctly-rounded
/// root returns the exact answer from both rounding directions.
pub fn nth_root_interval(value: &Integer, k: u32, prec: u32) -> Result<RealInterval, EvalError> {
    RealInterval::from_integer(value, prec).root(k, prec)
}

impl RealInterval {
    fn make(lo: Float, hi: Float) -> Result<Self, EvalError> {
        if lo.is_nan() || hi.is_nan() {
            return Err(EvalError::Indeterminate(
                "enclosure endpoint is not a number".into(),
            ));
        }
        debug_assert!(lo <= hi, "interval endpoints out of order: {lo} > {hi}");
        Ok(Self { lo, hi })
    }

    /// Enclosure of an exact integer (a point interval whenever `value` fits
    /// in `prec` bits).
    pub fn from_integer(value: &Integer, prec: u32) -> Self {
        let lo = Float::with_val_round(prec, value, Round::Down).0;
        let hi = Float::with_val_round(prec, value, Round::Up).0;
        Self { lo, hi }
    }

    /// Enclosure of an exact rational.
    pub fn from_rational(value: &Rational, prec: u32) -> Self {
        let lo = Float::with_val_round(prec, value, Round::Down).0;
        let hi = Float::with_val_round(prec, value, Round::Up).0;
        Self { lo, hi }
    }

    /// Enclosure of Euler's number e.
    pub fn euler(prec: u32) -> Self {
        let mut lo = Float::with_val(prec, 1);
        lo.exp_round(Round::Down);
        let mut hi = Float::with_val(prec, 1);
        hi.exp_round(Round::Up);
        Self { lo, hi }
    }

    fn point(value: i32, prec: u32) -> Self {
        let f = Float::with_val(prec, value);
        Self { lo: f.clone(), hi: f }
    }

    /// Lower endpoint.
    pub fn lo(&self) -> &Float {
        &self.lo
    }

    /// Upper endpoint.
    pub fn hi(&self) -> &Float {
        &self.hi
    }

    /// True when both endpoints are the same float (the enclosed value is
    /// known exactly at this precision).
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// True when `0 ∈ [lo, hi]`.
    pub fn contains_zero(&self) -> bool {
        self.lo <= 0 && self.hi >= 0
    }

    /// True when `inner ⊆ self`.
    pub fn contains(&self, inner: &Self) -> bool {
        self.lo <= inner.lo && inner.hi <= self.hi
    }

    /// True when the exact rational `value` lies in the interval.
    pub fn contains_rational(&self, value: &Rational) -> bool {
        self.lo <= *value && *value <= self.hi
    }

    /// Upper bound on the interval width `hi − lo`.
    pub fn width(&self) -> Float {
        Float::with_val_round(self.hi.prec(), &self.hi - &self.lo, Round::Up).0
    }

    /// `Some(true)` when every point of `self` is ≥ every point of `rhs`,
    /// `Some(false)` when every point of `self` is < every point of `rhs`,
    /// and `None` while the enclosures still overlap.
    pub fn definitely_ge(&self, rhs: &Self) -> Option<bool> {
        if self.lo >= rhs.hi {
            Some(true)
        } else if self.hi < rhs.lo {
            Some(false)
        } else {
            None
        }
    }

    /// Endpoints as `f64` with outward rounding (±∞ on overflow).
    pub fn to_f64_bounds(&self) -> (f64, f64) {
        (
            self.lo.to_f64_round(Round::Down),
            self.hi.to_f64_round(Round::Up),
        )
    }

    /// Decimal renderings of the endpoints, rounded outward to `digits`
    /// significant digits, so the printed pair still brackets the true value.
    pub fn to_decimal_strings(&self, digits: usize) -> (String, String) {
        (
            self.lo.to_string_radix_round(10, Some(digits), Round::Down),
            self.hi.to_string_radix_round(10, Some(digits), Round::Up),
        )
    }

    pub fn add(&self, rhs: &Self, prec: u32) -> Result<Self, EvalError> {
        let lo = Float::with_val_round(prec, &self.lo + &rhs.lo, Round::Down).0;
        let hi = Float::with_val_round(prec, &self.hi + &rhs.hi, Round::Up).0;
        Self::make(lo, hi)
    }

    pub fn sub(&self, rhs: &Self, prec: u32) -> Result<Self, EvalError> {
        let lo = Float::with_val_round(prec, &self.lo - &rhs.hi, Round::Down).0;
        let hi = Float::with_val_round(prec, &self.hi - &rhs.lo, Round::Up).0;
        Self::make(lo, hi)
    }

    pub fn neg(&self, prec: u32) -> Result<Self, EvalError> {
        let lo = Float::with_val_round(prec, -&self.hi, Round::Down).0;
        let hi = Float::with_val_round(prec, -&self.lo, Round::Up).0;
        Self::make(lo, hi)
    }

    /// Enclosure of `|x|` over the interval.
    pub fn abs(&self, prec: u32) -> Result<Self, EvalError> {
        if self.lo >= 0 {
            Ok(self.clone())
        } else if self.hi <= 0 {
            self.neg(prec)
        } else {
            let hi_abs = Float::with_val_round(prec, -&self.lo, Round::Up).0;
            let hi = if hi_abs > self.hi {
                hi_abs
            } else {
                Float::with_val_round(prec, &self.hi, Round::Up).0
            };
            Self::make(Float::with_val(prec, 0), hi)
        }
    }

    pub fn mul(&self, rhs: &Self, prec: u32) -> Result<Self, EvalError> {
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for a in [&self.lo, &self.hi] {
            for b in [&rhs.lo, &rhs.hi] {
                let down = Float::with_val_round(prec, a * b, Round::Down).0;
                let up = Float::with_val_round(prec, a * b, Round::Up).0;
                if down.is_nan() || up.is_nan() {
                    return Err(EvalError::Indeterminate(
                        "indeterminate product of enclosure endpoints".into(),
                    ));
                }
                lo = Some(match lo {
                    Some(cur) if cur <= down => cur,
                    _ => down,
                });
                hi = Some(match hi {
                    Some(cur) if cur >= up => cur,
                    _ => up,
                });
            }
        }
        Self::make(lo.expect("nonempty candidates"), hi.expect("nonempty candidates"))
    }

    pub fn div(&self, rhs: &Self, prec: u32) -> Result<Self, EvalError> {
        if rhs.lo.is_zero() && rhs.hi.is_zero() {
            return Err(EvalError::Domain("division by zero".into()));
        }
        if rhs.contains_zero() {
            return Err(EvalError::Indeterminate(
                "denominator interval straddles zero".into(),
            ));
        }
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for a in [&self.lo, &self.hi] {
            for b in [&rhs.lo, &rhs.hi] {
                let down = Float::with_val_round(prec, a / b, Round::Down).0;
                let up = Float::with_val_round(prec, a / b, Round::Up).0;
                if down.is_nan() || up.is_nan() {
                    return Err(EvalError::Indeterminate(
                        "indeterminate quotient of enclosure endpoints".into(),
                    ));
                }
                lo = Some(match lo {
                    Some(cur) if cur <= down => cur,
                    _ => down,
                });
                hi = Some(match hi {
                    Some(cur) if cur >= up => cur,
                    _ => up,
                });
            }
        }
        Self::make(lo.expect("nonempty candidates"), hi.expect("nonempty candidates"))
    }

    /// Natural logarithm. The argument must be certifiably positive: an
    /// interval whose lower endpoint merely touches zero is reported as
    /// [`EvalError::Indeterminate`] so the caller can refine, while an
    /// interval entirely ≤ 0 is a definite [`EvalError::Domain`] error.
    pub fn ln(&self, prec: u32) -> Result<Self, EvalError> {
        if self.hi <= 0 {
            return Err(EvalError::Domain("logarithm of a nonpositive value".into()));
        }
        if self.lo <= 0 {
            return Err(EvalError::Indeterminate(
                "logarithm argument interval touches zero".into(),
            ));
        }
        let lo = Float::with_val_round(prec, self.lo.ln_ref(), Round::Down).0;
        let hi = Float::with_val_round(prec, self.hi.ln_ref(), Round::Up).0;
        Self::make(lo, hi)
    }

    pub fn exp(&self, prec: u32) -> Result<Self, EvalError> {
        let lo = Float::with_val_round(prec, self.lo.exp_ref(), Round::Down).0;
        let hi = Float::with_val_round(prec, self.hi.exp_ref(), Round::Up).0;
        Self::make(lo, hi)
    }

    /// `k`-th root, `k ≥ 1`. Odd roots are defined on all of ℝ; even roots
    /// require a certifiably nonnegative argument.
    pub fn root(&self, k: u32, prec: u32) -> Result<Self, EvalError> {
        if k == 0 {
            return Err(EvalError::Domain("root index must be positive".into()));
        }
        if k.is_multiple_of(2) {
            if self.hi < 0 {
                return Err(EvalError::Domain("even root of a negative value".into()));
            }
            if self.lo < 0 {
                return Err(EvalError::Indeterminate(
                    "even-root argument interval reaches below zero".into(),
                ));
            }
        }
        let lo = Float::with_val_round(prec, self.lo.root_ref(k), Round::Down).0;
        let hi = Float::with_val_round(prec, self.hi.root_ref(k), Round::Up).0;
        Self::make(lo, hi)
    }

    /// Integer power with the convention `x^0 = [1, 1]` (including `0^0`).
    pub fn pow_int(&self, k: &Integer, prec: u32) -> Result<Self, EvalError> {
        if k.is_zero() {
            return Ok(Self::point(1, prec));
        }
        if *k < 0 {
            let mag = Integer::from(-k);
            let powed = self.pow_int(&mag, prec)?;
            return Self::point(1, prec).div(&powed, prec);
        }
        let pow_down = |x: &Float| Float::with_val_round(prec, x.pow(k), Round::Down).0;
        let pow_up = |x: &Float| Float::with_val_round(prec, x.pow(k), Round::Up).0;
        let (lo, hi) = if k.is_odd() || self.lo >= 0 {
            // odd powers are increasing on ℝ; even powers are increasing on x ≥ 0
            (pow_down(&self.lo), pow_up(&self.hi))
        } else if self.hi <= 0 {
            // even power on x ≤ 0 is decreasing
            (pow_down(&self.hi), pow_up(&self.lo))
        } else {
            // even power over an interval straddling zero: minimum is 0
            let a = pow_up(&self.lo);
            let b = pow_up(&self.hi);
            (Float::with_val(prec, 0), if a >= b { a } else { b })
        };
        Self::make(lo, hi)
    }

    /// Power with an exact rational exponent `p/q`, computed as the `q`-th
    /// root followed by the `p`-th integer power. Fractional exponents
    /// require a certifiably nonnegative base.
    pub fn pow_rational(&self, exponent: &Rational, prec: u32) -> Result<Self, EvalError> {
        let (p, q) = (exponent.numer(), exponent.denom());
        if *q == 1 {
            return self.pow_int(p, prec);
        }
        if self.hi < 0 {
            return Err(EvalError::Domain(
                "fractional power of a negative value".into(),
            ));
        }
        if self.lo < 0 {
            return Err(EvalError::Indeterminate(
                "fractional-power base interval reaches below zero".into(),
            ));
        }
        let k = q.to_u32().ok_or_else(|| {
            EvalError::Domain(format!("root index {q} exceeds the supported range"))
        })?;
        self.root(k, prec)?.pow_int(p, prec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64, prec: u32) -> RealInterval {
        RealInterval::from_integer(&Integer::from(v), prec)
    }

    #[test]
    fn integer_conversion_is_exact_at_sufficient_precision() {
        let iv = int(12345, 64);
        assert!(iv.is_point());
        assert_eq!(iv.lo().to_f64(), 12345.0);
    }

    #[test]
    // the decimal literals are deliberate brackets of the true value
    #[allow(clippy::excessive_precision)]
    fn euler_encloses_known_digits() {
        let e = RealInterval::euler(128);
        // e = 2.718281828459045235...
        assert!(*e.lo() > 2.7182818284590448f64);
        assert!(*e.hi() < 2.7182818284590458f64);
    }

    #[test]
    // the decimal literals are deliberate brackets of the true value
    #[allow(clippy::excessive_precision)]
    fn ln_of_three_brackets_reference_value() {
        let iv = int(3, 128).ln(128).unwrap();
        // ln 3 = 1.0986122886681096913952...
        assert!(*iv.lo() > 1.0986122886681095f64);
        assert!(*iv.hi() < 1.0986122886681100f64);
        assert!(iv.lo() < iv.hi());
    }

    #[test]
    fn ln_domain_and_indeterminate_cases() {
        assert!(matches!(int(-2, 64).ln(64), Err(EvalError::Domain(_))));
        assert!(matches!(int(0, 64).ln(64), Err(EvalError::Domain(_))));
        let straddle =
            RealInterval::make(Float::with_val(64, -1), Float::with_val(64, 1)).unwrap();
        assert!(matches!(straddle.ln(64), Err(EvalError::Indeterminate(_))));
    }

    #[test]
    fn division_by_interval_containing_zero_is_flagged() {
        let zero = int(0, 64);
        assert!(matches!(int(1, 64).div(&zero, 64), Err(EvalError::Domain(_))));
        let straddle = RealInterval::make(Float::with_val(64, -1), Float::with_val(64, 2)).unwrap();
        assert!(matches!(
            int(1, 64).div(&straddle, 64),
            Err(EvalError::Indeterminate(_))
        ));
    }

    #[test]
    fn perfect_roots_are_point_intervals() {
        let cube = nth_root_interval(&Integer::from(64), 3, 128).unwrap();
        assert!(cube.is_point());
        assert_eq!(cube.lo().to_f64(), 4.0);

        let eighth = nth_root_interval(&Integer::from(8), 2, 128).unwrap();
        // √8 = 2.828427124746190...
        assert!(*eighth.lo() > 2.828427124746189f64);
        assert!(*eighth.hi() < 2.828427124746191f64);
    }

    #[test]
    // the decimal literals are deliberate brackets of the true value
    #[allow(clippy::excessive_precision)]
    fn cube_root_of_54_brackets_reference_value() {
        let iv = nth_root_interval(&Integer::from(54), 3, 128).unwrap();
        // 54^(1/3) = 3.77976314968461949...
        assert!(*iv.lo() > 3.7797631496846190f64);
        assert!(*iv.hi() < 3.7797631496846200f64);
    }

    #[test]
    fn even_root_domain_checks() {
        assert!(matches!(
            int(-4, 64).root(2, 64),
            Err(EvalError::Domain(_))
        ));
        let straddle = RealInterval::make(Float::with_val(64, -1), Float::with_val(64, 4)).unwrap();
        assert!(matches!(straddle.root(2, 64), Err(EvalError::Indeterminate(_))));
        // odd roots of negatives are fine
        let neg = int(-27, 64).root(3, 64).unwrap();
        assert_eq!(neg.lo().to_f64(), -3.0);
        assert!(neg.is_point());
    }

    #[test]
    fn integer_powers_cover_all_sign_cases() {
        let k2 = Integer::from(2);
        let k3 = Integer::from(3);
        let m = RealInterval::make(Float::with_val(64, -3), Float::with_val(64, 2)).unwrap();
        let sq = m.pow_int(&k2, 64).unwrap();
        assert_eq!(sq.lo().to_f64(), 0.0);
        assert_eq!(sq.hi().to_f64(), 9.0);
        let cu = m.pow_int(&k3, 64).unwrap();
        assert_eq!(cu.lo().to_f64(), -27.0);
        assert_eq!(cu.hi().to_f64(), 8.0);
        let negdom = RealInterval::make(Float::with_val(64, -3), Float::with_val(64, -2)).unwrap();
        let sq2 = negdom.pow_int(&k2, 64).unwrap();
        assert_eq!((sq2.lo().to_f64(), sq2.hi().to_f64()), (4.0, 9.0));
        // x^0 = 1 even for an interval containing zero
        let z = m.pow_int(&Integer::from(0), 64).unwrap();
        assert!(z.is_point() && z.lo().to_f64() == 1.0);
        // negative exponent needs a zero-free base
        assert!(matches!(
            m.pow_int(&Integer::from(-1), 64),
            Err(EvalError::Indeterminate(_))
        ));
        let inv = int(4, 64).pow_int(&Integer::from(-1), 64).unwrap();
        assert_eq!(inv.lo().to_f64(), 0.25);
    }

    #[test]
    fn rational_powers_recover_perfect_results() {
        let iv = int(8, 128)
            .pow_rational(&Rational::from((1, 3)), 128)
            .unwrap();
        assert!(iv.is_point());
        assert_eq!(iv.lo().to_f64(), 2.0);
        let iv = int(4, 128)
            .pow_rational(&Rational::from((3, 2)), 128)
            .unwrap();
        assert!(iv.is_point());
        assert_eq!(iv.lo().to_f64(), 8.0);
    }

    #[test]
    fn higher_precision_nests_inside_lower() {
        let coarse = int(3, 64).ln(64).unwrap();
        let fine = int(3, 256).ln(256).unwrap();
        assert!(coarse.contains(&fine));
        let coarse = nth_root_interval(&Integer::from(54), 3, 64).unwrap();
        let fine = nth_root_interval(&Integer::from(54), 3, 512).unwrap();
        assert!(coarse.contains(&fine));
        assert!(fine.width() <= coarse.width());
    }

    #[test]
    fn outward_decimal_strings_bracket_the_value() {
        let iv = int(3, 128).ln(128).unwrap();
        let (lo, hi) = iv.to_decimal_strings(8);
        assert_eq!(lo, "1.0986122");
        assert_eq!(hi, "1.0986123");
    }
}
