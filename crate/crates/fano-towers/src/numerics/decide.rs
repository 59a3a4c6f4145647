//! Rigorous comparison and floor extraction for bound expressions.
//!
//! Every decision here is certified: a comparison returns [`Verdict::True`]
//! or [`Verdict::False`] only when an exact computation or an interval
//! enclosure *proves* the answer, and reports [`Verdict::Undecided`] with the
//! precision it reached otherwise. Nothing is ever decided by rounding.
//!
//! The workhorse is adaptive refinement: evaluate both sides at a starting
//! precision, and if the enclosures overlap, double the precision and retry
//! until the comparison separates or the precision cap is reached. An exact
//! fast path short-circuits the loop whenever both sides have exact rational
//! values — that path also settles equality, which no finite-precision
//! interval ever can.

use rug::ops::DivRounding;
use rug::{Integer, Rational};

use super::{Assignment, BoundExpr, EvalError};

/// Starting precision (bits) for adaptive comparisons.
pub const START_PRECISION: u32 = 128;

/// Default precision cap (bits) for adaptive comparisons: 2^20. Reaching the
/// cap is reported, never papered over.
pub const DEFAULT_PRECISION_CAP: u32 = 1 << 20;

/// Outcome of a rigorous comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The inequality is proved.
    True,
    /// The negation is proved.
    False,
    /// Neither direction could be certified at the given precision.
    Undecided {
        /// Highest working precision (bits) that was actually evaluated.
        precision_reached: u32,
    },
}

impl Verdict {
    pub fn is_true(self) -> bool {
        self == Verdict::True
    }
}

/// Decides `lhs ≥ rhs` for an exact integer left-hand side. This is the shape
/// of every degree-versus-bound check in the crate: the degree is an exact
/// integer, the bound a closed-form expression.
pub fn decide_ge(
    lhs: &Integer,
    rhs: &BoundExpr,
    assignment: &Assignment,
    precision_cap: u32,
) -> Result<Verdict, EvalError> {
    decide_ge_expr(
        &BoundExpr::Int(lhs.clone()),
        rhs,
        assignment,
        precision_cap,
    )
}

/// Decides `lhs ≥ rhs` for arbitrary expressions.
pub fn decide_ge_expr(
    lhs: &BoundExpr,
    rhs: &BoundExpr,
    assignment: &Assignment,
    precision_cap: u32,
) -> Result<Verdict, EvalError> {
    Ok(decide_ge_detailed(lhs, rhs, assignment, precision_cap)?.verdict)
}

/// Decides `lhs ≤ rhs` for arbitrary expressions.
pub fn decide_le_expr(
    lhs: &BoundExpr,
    rhs: &BoundExpr,
    assignment: &Assignment,
    precision_cap: u32,
) -> Result<Verdict, EvalError> {
    decide_ge_expr(rhs, lhs, assignment, precision_cap)
}

/// A comparison verdict together with the precision that settled it (0 when
/// the exact fast path applied).
#[derive(Clone, Copy, Debug)]
pub struct DetailedVerdict {
    pub verdict: Verdict,
    /// Bits of working precision in use when the verdict was reached; 0 for
    /// decisions made entirely in exact rational arithmetic.
    pub precision_used: u32,
}

/// `lhs ≥ rhs` with the settling precision reported, for callers that record
/// certificates.
pub fn decide_ge_detailed(
    lhs: &BoundExpr,
    rhs: &BoundExpr,
    assignment: &Assignment,
    precision_cap: u32,
) -> Result<DetailedVerdict, EvalError> {
    // Exact fast path: also the only path that can certify equality.
    if let (Some(l), Some(r)) = (lhs.exact_eval(assignment)?, rhs.exact_eval(assignment)?) {
        let verdict = if l >= r { Verdict::True } else { Verdict::False };
        return Ok(DetailedVerdict {
            verdict,
            precision_used: 0,
        });
    }

    let mut prec = START_PRECISION.min(precision_cap.max(2));
    loop {
        let separated = match (
            lhs.interval_eval(assignment, prec),
            rhs.interval_eval(assignment, prec),
        ) {
            (Ok(l), Ok(r)) => l.definitely_ge(&r),
            // A transient indeterminate (e.g. division by an interval that
            // still straddles zero) can disappear at higher precision.
            (Err(EvalError::Indeterminate(_)), _) | (_, Err(EvalError::Indeterminate(_))) => None,
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        match separated {
            Some(true) => {
                return Ok(DetailedVerdict {
                    verdict: Verdict::True,
                    precision_used: prec,
                })
            }
            Some(false) => {
                return Ok(DetailedVerdict {
                    verdict: Verdict::False,
                    precision_used: prec,
                })
            }
            None => {
                if prec >= precision_cap {
                    return Ok(DetailedVerdict {
                        verdict: Verdict::Undecided {
                            precision_reached: prec,
                        },
                        precision_used: prec,
                    });
                }
                prec = prec.saturating_mul(2).min(precision_cap);
            }
        }
    }
}

/// The exact floor of an expression's value.
///
/// Exact rational values floor directly. Otherwise the floor is certified by
/// refining an interval enclosure until both endpoints share the same floor;
/// if the cap is reached first (the value sits too close to an integer to
/// separate), the error is [`EvalError::PrecisionCap`] rather than a guess.
pub fn floor_expr(
    expr: &BoundExpr,
    assignment: &Assignment,
    precision_cap: u32,
) -> Result<Integer, EvalError> {
    if let Some(v) = expr.exact_eval(assignment)? {
        let (num, den) = v.into_numer_denom();
        return Ok(num.div_floor(den));
    }

    let mut prec = START_PRECISION.min(precision_cap.max(2));
    loop {
        match expr.interval_eval(assignment, prec) {
            Ok(iv) => {
                let lo_floor = iv
                    .lo()
                    .clone()
                    .floor()
                    .to_integer()
                    .ok_or_else(|| EvalError::Indeterminate("floor of a non-finite bound".into()))?;
                let hi_floor = iv
                    .hi()
                    .clone()
                    .floor()
                    .to_integer()
                    .ok_or_else(|| EvalError::Indeterminate("floor of a non-finite bound".into()))?;
                if lo_floor == hi_floor {
                    return Ok(lo_floor);
                }
            }
            Err(EvalError::Indeterminate(_)) => {}
            Err(e) => return Err(e),
        }
        if prec >= precision_cap {
            return Err(EvalError::PrecisionCap { bits: prec });
        }
        prec = prec.saturating_mul(2).min(precision_cap);
    }
}

/// Convenience: floor of `x / ln y` for integer `x`, `y`, the shape used by
/// all the tower constructions.
pub fn floor_div_ln(
    x: impl Into<Integer>,
    y: impl Into<Integer>,
    precision_cap: u32,
) -> Result<Integer, EvalError> {
    let expr = BoundExpr::int(x.into()) / BoundExpr::int(y.into()).ln();
    floor_expr(&expr, &Assignment::new(), precision_cap)
}

/// Convenience wrapper deciding `lhs ≥ rhs` for rational-valued sides without
/// an assignment, used by exact lemma checks that still want a [`Verdict`].
pub fn compare_rationals_ge(lhs: &Rational, rhs: &Rational) -> Verdict {
    if lhs >= rhs {
        Verdict::True
    } else {
        Verdict::False
    }
}
