//! Exact and certified numeric foundations.
//!
//! Everything above this module computes with three layers:
//!
//! * exact arithmetic — arbitrary-precision integers and rationals,
//!   re-exported from [`rug`] as [`ExactInt`] and [`ExactRat`];
//! * [`RealInterval`] — closed intervals with outward directed rounding, so
//!   every enclosure is a mathematical guarantee, not a best effort;
//! * [`BoundExpr`] with [`decide_ge`]/[`floor_expr`] — a small expression
//!   language for closed-form degree bounds, evaluated exactly when the value
//!   is rational and otherwise by adaptive-precision interval refinement that
//!   escalates until the comparison is certified or a configurable precision
//!   cap is reached.
//!
//! A comparison answered `True` or `False` here is rigorous: it was settled
//! either in exact rational arithmetic or by disjoint intervals. The only
//! non-answer is an explicit [`Verdict::Undecided`].

mod decide;
mod expr;
mod interval;

pub use decide::{
    compare_rationals_ge, decide_ge, decide_ge_detailed, decide_ge_expr, decide_le_expr,
    floor_div_ln, floor_expr, DetailedVerdict, Verdict, DEFAULT_PRECISION_CAP, START_PRECISION,
};
pub use expr::{Assignment, BoundExpr};
pub use interval::{nth_root_interval, RealInterval};

pub use rug::Integer as ExactInt;
pub use rug::Rational as ExactRat;

use std::fmt;

/// Errors that arise while evaluating a [`BoundExpr`] or refining an
/// enclosure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    /// The value is definitely outside an operation's domain: logarithm of a
    /// nonpositive number, division by exact zero, an even root of a negative
    /// number, or a power whose exponent is not exactly rational.
    Domain(String),
    /// The current enclosure is too coarse for the operation to proceed (for
    /// example a denominator interval that straddles zero). Retrying at a
    /// higher working precision may succeed, so adaptive drivers treat this
    /// as a request for refinement rather than a hard failure.
    Indeterminate(String),
    /// A variable was referenced but not bound in the [`Assignment`].
    UnboundVar(String),
    /// The precision cap was reached before the result could be certified.
    PrecisionCap {
        /// Working precision, in bits, at which refinement gave up.
        bits: u32,
    },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Domain(what) => write!(f, "domain error: {what}"),
            EvalError::Indeterminate(what) => {
                write!(f, "indeterminate at current precision: {what}")
            }
            EvalError::UnboundVar(name) => write!(f, "unbound variable `{name}`"),
            EvalError::PrecisionCap { bits } => {
                write!(f, "precision cap reached at {bits} bits")
            }
        }
    }
}

impl std::error::Error for EvalError {}
