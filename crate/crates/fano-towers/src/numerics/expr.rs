//! A small closed-form expression language for degree bounds.
//!
//! [`BoundExpr`] covers exactly the shapes that occur in the bounds handled
//! by this crate: integer and rational literals, Euler's number, variables,
//! field operations, `ln`, `exp`, powers with exactly rational exponents, and
//! integer roots. Expressions evaluate two ways:
//!
//! * [`BoundExpr::exact_eval`] returns the exact rational value when the
//!   expression has one (no `e`/`ln`/`exp` and every root resolves to a
//!   perfect power), or `None` when the value is irrational;
//! * [`BoundExpr::interval_eval`] returns a certified [`RealInterval`]
//!   enclosure at a requested working precision.
//!
//! Arithmetic operators are overloaded on the tree, so bounds read the way
//! they are written on paper:
//!
//! ```
//! use fano_towers::numerics::BoundExpr;
//! let n = BoundExpr::var("n");
//! // 3n² / (10 ln n)
//! let bound = (BoundExpr::int(3) * n.clone().powi(2)) / (BoundExpr::int(10) * n.ln());
//! ```

use std::collections::BTreeMap;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::ops::Pow as _;
use rug::{Integer, Rational};

use super::{EvalError, RealInterval};

/// Expression tree for closed-form bounds.
#[derive(Clone, Debug, PartialEq)]
pub enum BoundExpr {
    /// Exact integer literal.
    Int(Integer),
    /// Exact rational literal.
    Rat(Rational),
    /// Euler's number e.
    E,
    /// Named variable, bound by an [`Assignment`].
    Var(String),
    Add(Box<BoundExpr>, Box<BoundExpr>),
    Sub(Box<BoundExpr>, Box<BoundExpr>),
    Mul(Box<BoundExpr>, Box<BoundExpr>),
    Div(Box<BoundExpr>, Box<BoundExpr>),
    Neg(Box<BoundExpr>),
    /// Natural logarithm.
    Ln(Box<BoundExpr>),
    /// Exponential with base e.
    Exp(Box<BoundExpr>),
    /// Power whose exponent must itself evaluate to an exact rational.
    Pow(Box<BoundExpr>, Box<BoundExpr>),
    /// `k`-th root, `k ≥ 1`.
    Root(Box<BoundExpr>, u32),
}

impl BoundExpr {
    pub fn int(value: impl Into<Integer>) -> Self {
        BoundExpr::Int(value.into())
    }

    /// Rational literal `num/den`. Panics if `den` is zero.
    pub fn rat(num: impl Into<Integer>, den: impl Into<Integer>) -> Self {
        BoundExpr::Rat(Rational::from((num.into(), den.into())))
    }

    pub fn rational(value: Rational) -> Self {
        BoundExpr::Rat(value)
    }

    pub fn var(name: &str) -> Self {
        BoundExpr::Var(name.to_owned())
    }

    pub fn ln(self) -> Self {
        BoundExpr::Ln(Box::new(self))
    }

    pub fn exp(self) -> Self {
        BoundExpr::Exp(Box::new(self))
    }

    pub fn pow(self, exponent: BoundExpr) -> Self {
        BoundExpr::Pow(Box::new(self), Box::new(exponent))
    }

    /// Integer power, the overwhelmingly common case.
    pub fn powi(self, k: impl Into<Integer>) -> Self {
        self.pow(BoundExpr::int(k.into()))
    }

    pub fn root(self, k: u32) -> Self {
        BoundExpr::Root(Box::new(self), k)
    }

    /// Exact rational value of the expression, or `Ok(None)` when the value
    /// is irrational (any use of `e`, `ln`, `exp`, or a root/power that does
    /// not resolve to a perfect power). Definite domain violations are
    /// reported even along the `None` paths where they are detectable.
    pub fn exact_eval(&self, assignment: &Assignment) -> Result<Option<Rational>, EvalError> {
        match self {
            BoundExpr::Int(v) => Ok(Some(Rational::from(v))),
            BoundExpr::Rat(v) => Ok(Some(v.clone())),
            BoundExpr::E => Ok(None),
            BoundExpr::Var(name) => match assignment.get(name) {
                Some(v) => Ok(Some(v.clone())),
                None => Err(EvalError::UnboundVar(name.clone())),
            },
            BoundExpr::Add(a, b) => match (a.exact_eval(assignment)?, b.exact_eval(assignment)?) {
                (Some(x), Some(y)) => Ok(Some(x + y)),
                _ => Ok(None),
            },
            BoundExpr::Sub(a, b) => match (a.exact_eval(assignment)?, b.exact_eval(assignment)?) {
                (Some(x), Some(y)) => Ok(Some(x - y)),
                _ => Ok(None),
            },
            BoundExpr::Mul(a, b) => match (a.exact_eval(assignment)?, b.exact_eval(assignment)?) {
                (Some(x), Some(y)) => Ok(Some(x * y)),
                _ => Ok(None),
            },
            BoundExpr::Div(a, b) => match (a.exact_eval(assignment)?, b.exact_eval(assignment)?) {
                (_, Some(y)) if y == 0 => Err(EvalError::Domain("division by zero".into())),
                (Some(x), Some(y)) => Ok(Some(x / y)),
                _ => Ok(None),
            },
            BoundExpr::Neg(a) => Ok(a.exact_eval(assignment)?.map(|x| -x)),
            BoundExpr::Ln(a) => match a.exact_eval(assignment)? {
                Some(v) if v <= 0 => {
                    Err(EvalError::Domain("logarithm of a nonpositive value".into()))
                }
                _ => Ok(None),
            },
            BoundExpr::Exp(a) => {
                a.exact_eval(assignment)?;
                Ok(None)
            }
            BoundExpr::Pow(base, exponent) => {
                let e = exponent.exact_eval(assignment)?.ok_or_else(|| {
                    EvalError::Domain("power exponent does not evaluate to an exact rational".into())
                })?;
                match base.exact_eval(assignment)? {
                    Some(b) => rational_pow(&b, &e),
                    None => Ok(None),
                }
            }
            BoundExpr::Root(base, k) => {
                if *k == 0 {
                    return Err(EvalError::Domain("root index must be positive".into()));
                }
                match base.exact_eval(assignment)? {
                    Some(b) => rational_root(&b, *k),
                    None => Ok(None),
                }
            }
        }
    }

    /// Certified enclosure of the expression's value at `prec` bits.
    pub fn interval_eval(
        &self,
        assignment: &Assignment,
        prec: u32,
    ) -> Result<RealInterval, EvalError> {
        match self {
            BoundExpr::Int(v) => Ok(RealInterval::from_integer(v, prec)),
            BoundExpr::Rat(v) => Ok(RealInterval::from_rational(v, prec)),
            BoundExpr::E => Ok(RealInterval::euler(prec)),
            BoundExpr::Var(name) => match assignment.get(name) {
                Some(v) => Ok(RealInterval::from_rational(v, prec)),
                None => Err(EvalError::UnboundVar(name.clone())),
            },
            BoundExpr::Add(a, b) => a
                .interval_eval(assignment, prec)?
                .add(&b.interval_eval(assignment, prec)?, prec),
            BoundExpr::Sub(a, b) => a
                .interval_eval(assignment, prec)?
                .sub(&b.interval_eval(assignment, prec)?, prec),
            BoundExpr::Mul(a, b) => a
                .interval_eval(assignment, prec)?
                .mul(&b.interval_eval(assignment, prec)?, prec),
            BoundExpr::Div(a, b) => a
                .interval_eval(assignment, prec)?
                .div(&b.interval_eval(assignment, prec)?, prec),
            BoundExpr::Neg(a) => a.interval_eval(assignment, prec)?.neg(prec),
            BoundExpr::Ln(a) => a.interval_eval(assignment, prec)?.ln(prec),
            BoundExpr::Exp(a) => a.interval_eval(assignment, prec)?.exp(prec),
            BoundExpr::Pow(base, exponent) => {
                let e = exponent.exact_eval(assignment)?.ok_or_else(|| {
                    EvalError::Domain("power exponent does not evaluate to an exact rational".into())
                })?;
                base.interval_eval(assignment, prec)?.pow_rational(&e, prec)
            }
            BoundExpr::Root(base, k) => {
                if *k == 0 {
                    return Err(EvalError::Domain("root index must be positive".into()));
                }
                base.interval_eval(assignment, prec)?.root(*k, prec)
            }
        }
    }
}

impl Add for BoundExpr {
    type Output = BoundExpr;
    fn add(self, rhs: BoundExpr) -> BoundExpr {
        BoundExpr::Add(Box::new(self), Box::new(rhs))
    }
}

impl Sub for BoundExpr {
    type Output = BoundExpr;
    fn sub(self, rhs: BoundExpr) -> BoundExpr {
        BoundExpr::Sub(Box::new(self), Box::new(rhs))
    }
}

impl Mul for BoundExpr {
    type Output = BoundExpr;
    fn mul(self, rhs: BoundExpr) -> BoundExpr {
        BoundExpr::Mul(Box::new(self), Box::new(rhs))
    }
}

impl Div for BoundExpr {
    type Output = BoundExpr;
    fn div(self, rhs: BoundExpr) -> BoundExpr {
        BoundExpr::Div(Box::new(self), Box::new(rhs))
    }
}

impl Neg for BoundExpr {
    type Output = BoundExpr;
    fn neg(self) -> BoundExpr {
        BoundExpr::Neg(Box::new(self))
    }
}

/// Variable bindings for expression evaluation. Values are exact rationals;
/// integer bindings are the common case and convert implicitly.
#[derive(Clone, Debug, Default)]
pub struct Assignment {
    vars: BTreeMap<String, Rational>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builder-style binding: `Assignment::new().set("n", 8)`.
    pub fn set(mut self, name: &str, value: impl Into<Rational>) -> Self {
        self.vars.insert(name.to_owned(), value.into());
        self
    }

    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.vars.get(name)
    }
}

/// `base^exponent` in exact arithmetic where possible: `Ok(Some(_))` for an
/// exact rational result, `Ok(None)` when the value is irrational.
fn rational_pow(base: &Rational, exponent: &Rational) -> Result<Option<Rational>, EvalError> {
    if *exponent == 0 {
        // x^0 = 1, including the 0^0 = 1 convention used by the degree sums
        return Ok(Some(Rational::from(1)));
    }
    let (p, q) = (exponent.numer(), exponent.denom());
    let root = if *q == 1 {
        Some(base.clone())
    } else {
        let k = q.to_u32().ok_or_else(|| {
            EvalError::Domain(format!("root index {q} exceeds the supported range"))
        })?;
        rational_root(base, k)?
    };
    let Some(root) = root else {
        return Ok(None);
    };
    let mag = p.clone().abs().to_u32().ok_or_else(|| {
        EvalError::Domain(format!("exponent magnitude {p} exceeds the supported range"))
    })?;
    let num = Integer::from(root.numer().pow(mag));
    let den = Integer::from(root.denom().pow(mag));
    let mut powed = Rational::from((num, den));
    if *p < 0 {
        if powed == 0 {
            return Err(EvalError::Domain("zero raised to a negative power".into()));
        }
        powed.recip_mut();
    }
    Ok(Some(powed))
}

/// Exact `k`-th root of a rational: `Ok(Some(_))` when the operand is a
/// perfect `k`-th power, `Ok(None)` otherwise.
fn rational_root(value: &Rational, k: u32) -> Result<Option<Rational>, EvalError> {
    if *value < 0 {
        if k.is_multiple_of(2) {
            return Err(EvalError::Domain("even root of a negative value".into()));
        }
        return Ok(rational_root(&(-value.clone()), k)?.map(|r| -r));
    }
    let num = integer_root_exact(value.numer(), k);
    let den = integer_root_exact(value.denom(), k);
    match (num, den) {
        (Some(n), Some(d)) => Ok(Some(Rational::from((n, d)))),
        _ => Ok(None),
    }
}

/// Exact `k`-th root of a nonnegative integer, if it is a perfect power.
fn integer_root_exact(value: &Integer, k: u32) -> Option<Integer> {
    let root = value.clone().root(k);
    if Integer::from((&root).pow(k)) == *value {
        Some(root)
    } else {
        None
    }
}
