//! Tower descriptions and their exact invariants.
//!
//! A *tower* starts from a projective space `P^{s₀}` and repeatedly
//! projectivizes a split bundle: at each level the new variety is
//! `P(O^r ⊕ O(cH))` over the previous one, where `H` is the ample generator
//! of the previous variety's Picard-rank-one "vertical" class and `0 ≤ c`
//! twists the single nontrivial summand. Every such tower is a smooth
//! projective variety, and when each twist satisfies `c ≤ ι − 1` (with `ι`
//! the index one floor down) the result is Fano.
//!
//! [`TowerSpec`] is the plain description (base dimension plus a list of
//! levels); the interesting functionality is exact evaluation:
//!
//! * [`TowerSpec::validate`] — per-level Fano conditions with reasons;
//! * [`TowerSpec::invariants`] — dimension, Picard rank, index, anticanonical
//!   degree, and the degree of the index-one generator, all exact;
//! * [`TowerSpec::profile`] — the same data at every stage of the tower;
//! * the ready-made families [`TowerSpec::projective_space`],
//!   [`TowerSpec::batyrev`], [`TowerSpec::high_degree`],
//!   [`TowerSpec::high_index`], and [`TowerSpec::high_picard`].
//!
//! # The degree recursion
//!
//! Write a stage as `Y` with dimension `s`, index `ι`, and generator degree
//! `D = H^s`. Adding a level `(r, c)` produces `X = P(O^r ⊕ O(cH))` of
//! dimension `n = s + r`. With `ξ` the relative hyperplane class, the Chow
//! relation `ξ^{r+1} = cH·ξ^r` and `−K_X = (r+1)ξ + (ι − c)H` give
//!
//! ```text
//! (−K_X)^n = D · Σ_{i=r}^{n} C(n,i) (r+1)^i (ι−c)^{n−i} c^{i−r}
//! ```
//!
//! with the convention `0^0 = 1` (the `i = r` term survives when `c = 0`).
//! Only the top power `H^s` integrates to something nonzero, which is what
//! collapses the expansion to a single sum. The new index is
//! `gcd(r+1, ι−c)` when `r ≥ 1`; a rank-one bundle (`r = 0`) re-describes
//! the same variety, so every invariant is left untouched.

use std::fmt;

use rug::ops::Pow as _;
use rug::Integer;
use serde::{Deserialize, Serialize};

use crate::numerics::{
    floor_expr, nth_root_interval, Assignment, BoundExpr, EvalError, RealInterval,
    DEFAULT_PRECISION_CAP,
};

/// Hard ceiling on the total dimension accepted for exact evaluation. Degrees
/// grow like `n^{Θ(n)}`; beyond this the numbers are no longer useful and the
/// binomial sums get slow.
pub const MAX_DIMENSION: u64 = 20_000;

/// One projectivization level: `P(O^r ⊕ O(cH))` over the stage below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Level {
    /// Number of trivial summands; the fiber dimension added by this level.
    pub r: u32,
    /// Twist of the single nontrivial summand, measured against the ample
    /// generator of the stage below.
    pub c: u32,
}

/// A tower description: the base `P^{base_dim}` plus the levels from the
/// bottom up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerSpec {
    /// Dimension `s₀ ≥ 1` of the projective-space base.
    pub base_dim: u32,
    /// Bundle levels, innermost first.
    pub levels: Vec<Level>,
}

/// Errors from tower validation, evaluation, and the built-in constructions.
#[derive(Clone, Debug, PartialEq)]
pub enum TowerError {
    /// The description violates a structural requirement (base dimension,
    /// Fano twist condition, size guard).
    InvalidSpec(String),
    /// An exact divisibility that the mathematics guarantees failed; this
    /// indicates a bug and is never silently absorbed.
    IntegralityViolation(String),
    /// A built-in family is not defined at the requested parameters.
    InvalidConstruction(String),
    /// A numeric subroutine could not certify its result.
    Numeric(EvalError),
}

impl fmt::Display for TowerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerError::InvalidSpec(msg) => write!(f, "invalid tower description: {msg}"),
            TowerError::IntegralityViolation(msg) => {
                write!(f, "integrality violation: {msg}")
            }
            TowerError::InvalidConstruction(msg) => {
                write!(f, "construction not defined: {msg}")
            }
            TowerError::Numeric(e) => write!(f, "numeric evaluation failed: {e}"),
        }
    }
}

impl std::error::Error for TowerError {}

impl From<EvalError> for TowerError {
    fn from(e: EvalError) -> Self {
        TowerError::Numeric(e)
    }
}

/// Whether a built-in family should fail or adapt when its preferred
/// parameters leave the Fano range at small dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildMode {
    /// Use the textbook parameters and report an error when they are not
    /// admissible.
    Strict,
    /// Cap the fiber dimension so the twist stays nonnegative; the affected
    /// dimensions are recorded by the callers that care.
    Clamp,
}

/// Fano condition at a single level.
#[derive(Clone, Debug, Serialize)]
pub struct LevelCheck {
    /// Zero-based position in [`TowerSpec::levels`].
    pub level: usize,
    /// Index of the stage directly below this level.
    pub iota_below: u64,
    /// Whether `c ≤ iota_below − 1` holds.
    pub satisfied: bool,
    /// Human-readable explanation when the condition fails.
    pub reason: Option<String>,
}

/// Outcome of [`TowerSpec::validate`].
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    /// True when the base and every level are admissible.
    pub valid: bool,
    /// Tower-wide problems (base dimension, size guard).
    pub problems: Vec<String>,
    /// Per-level Fano conditions, in level order.
    pub levels: Vec<LevelCheck>,
}

/// Exact invariants of one stage of a tower.
#[derive(Clone, Debug, PartialEq)]
pub struct Stage {
    /// 0 for the base, `j ≥ 1` after the `j`-th level.
    pub stage: usize,
    /// Dimension of this stage.
    pub dim: u32,
    /// Picard rank: 1 plus the number of levels with `r ≥ 1` so far.
    pub picard: u32,
    /// Fano index: the largest ι with `−K = ι·H` for an integral class `H`.
    pub index: u64,
    /// Degree `H^dim` of the index-one generator.
    pub gen_degree: Integer,
    /// Anticanonical degree `(−K)^dim = gen_degree · index^dim`.
    pub degree: Integer,
}

/// Exact invariants of the full tower, plus on-demand enclosures of the
/// normalized degree.
#[derive(Clone, Debug, PartialEq)]
pub struct FanoInvariants {
    pub dim: u32,
    pub picard: u32,
    pub index: u64,
    /// Anticanonical degree `(−K)^dim`, exact.
    pub degree: Integer,
    /// Degree of the index-one generator, exact.
    pub gen_degree: Integer,
}

impl FanoInvariants {
    /// Normalized degree `δ = degree^{1/dim}` as a certified enclosure at
    /// `prec` bits.
    pub fn delta(&self, prec: u32) -> Result<RealInterval, EvalError> {
        nth_root_interval(&self.degree, self.dim, prec)
    }
}

impl fmt::Display for TowerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P^{}", self.base_dim)?;
        for lv in &self.levels {
            write!(f, " / (r={}, c={})", lv.r, lv.c)?;
        }
        Ok(())
    }
}

impl TowerSpec {
    pub fn new(base_dim: u32, levels: Vec<Level>) -> Self {
        TowerSpec { base_dim, levels }
    }

    /// Total dimension: base dimension plus all fiber dimensions.
    pub fn dim(&self) -> u64 {
        self.base_dim as u64 + self.levels.iter().map(|lv| lv.r as u64).sum::<u64>()
    }

    /// Checks the base and the per-level Fano conditions, reporting every
    /// violation rather than stopping at the first.
    pub fn validate(&self) -> ValidationReport {
        let mut problems = Vec::new();
        if self.base_dim < 1 {
            problems.push("base dimension must be at least 1".to_owned());
        }
        let total = self.dim();
        if total > MAX_DIMENSION {
            problems.push(format!(
                "total dimension {total} exceeds the supported maximum {MAX_DIMENSION}"
            ));
        }

        let mut iota: u64 = self.base_dim as u64 + 1;
        let mut levels = Vec::with_capacity(self.levels.len());
        for (idx, lv) in self.levels.iter().enumerate() {
            let satisfied = (lv.c as u64) < iota;
            let reason = if satisfied {
                None
            } else {
                Some(format!(
                    "twist c = {} must be at most iota − 1 = {} for the Fano condition",
                    lv.c,
                    iota - 1
                ))
            };
            levels.push(LevelCheck {
                level: idx,
                iota_below: iota,
                satisfied,
                reason,
            });
            iota = next_index(iota, lv);
        }

        ValidationReport {
            valid: problems.is_empty() && levels.iter().all(|l| l.satisfied),
            problems,
            levels,
        }
    }

    /// Exact invariants of every stage, base first. Errors if the tower is
    /// not a valid Fano description.
    pub fn profile(&self) -> Result<Vec<Stage>, TowerError> {
        let report = self.validate();
        if !report.valid {
            let reason = report
                .problems
                .first()
                .cloned()
                .or_else(|| {
                    report
                        .levels
                        .iter()
                        .find_map(|l| l.reason.as_ref().map(|r| format!("level {}: {r}", l.level)))
                })
                .unwrap_or_else(|| "tower description is not admissible".to_owned());
            return Err(TowerError::InvalidSpec(reason));
        }

        let s0 = self.base_dim;
        let mut stages = Vec::with_capacity(self.levels.len() + 1);
        let mut dim = s0;
        let mut picard: u32 = 1;
        let mut iota: u64 = s0 as u64 + 1;
        let mut gen_degree = Integer::from(1);
        let mut degree = Integer::from(iota).pow(s0);
        stages.push(Stage {
            stage: 0,
            dim,
            picard,
            index: iota,
            gen_degree: gen_degree.clone(),
            degree: degree.clone(),
        });

        for (idx, lv) in self.levels.iter().enumerate() {
            let n = dim + lv.r;
            degree = &gen_degree * level_degree_sum(n, lv.r, iota, lv.c as u64);
            let new_iota = next_index(iota, lv);
            let pow = Integer::from(new_iota).pow(n);
            let (quot, rem) = degree.clone().div_rem(pow);
            if rem != 0 {
                return Err(TowerError::IntegralityViolation(format!(
                    "degree {degree} of stage {} is not divisible by index^dim = {new_iota}^{n}",
                    idx + 1
                )));
            }
            gen_degree = quot;
            dim = n;
            iota = new_iota;
            if lv.r >= 1 {
                picard += 1;
            }
            stages.push(Stage {
                stage: idx + 1,
                dim,
                picard,
                index: iota,
                gen_degree: gen_degree.clone(),
                degree: degree.clone(),
            });
        }
        Ok(stages)
    }

    /// Exact invariants of the top of the tower.
    pub fn invariants(&self) -> Result<FanoInvariants, TowerError> {
        let stages = self.profile()?;
        let top = stages.last().expect("profile always contains the base");
        Ok(FanoInvariants {
            dim: top.dim,
            picard: top.picard,
            index: top.index,
            degree: top.degree.clone(),
            gen_degree: top.gen_degree.clone(),
        })
    }

    /// Exact anticanonical degree `(−K)^dim`.
    pub fn degree(&self) -> Result<Integer, TowerError> {
        Ok(self.invariants()?.degree)
    }

    /// The empty tower: projective space `P^n` itself, degree `(n+1)^n`.
    pub fn projective_space(n: u32) -> Result<Self, TowerError> {
        if n < 1 {
            return Err(TowerError::InvalidConstruction(
                "projective space requires dimension at least 1".to_owned(),
            ));
        }
        Ok(TowerSpec::new(n, Vec::new()))
    }

    /// The classical one-level family `P(O ⊕ O(n−1))` over `P^{n−1}`,
    /// defined for `n ≥ 2`. Its degree satisfies the closed form
    /// `((2n−1)^n − 1)/(n − 1)`, which grows like `(2n)^n` — already within
    /// a constant-base factor of the conjectural maximum.
    pub fn batyrev(n: u32) -> Result<Self, TowerError> {
        if n < 2 {
            return Err(TowerError::InvalidConstruction(
                "the one-level maximal-twist family requires dimension at least 2".to_owned(),
            ));
        }
        Ok(TowerSpec::new(n - 1, vec![Level { r: 1, c: n - 1 }]))
    }

    /// The one-level family tuned for maximal degree growth:
    /// `P(O^r ⊕ O(s))` over `P^s` with `r = ⌊n/ln n⌋` and `s = n − r`,
    /// defined for `n ≥ 3`. The resulting variety has index 1, Picard rank
    /// 2, and normalized degree at least `3n²/(10 ln n)`.
    pub fn high_degree(n: u32) -> Result<Self, TowerError> {
        if n < 3 {
            return Err(TowerError::InvalidConstruction(
                "the high-degree family requires dimension at least 3".to_owned(),
            ));
        }
        let r = floor_ratio_log(n, 0)?;
        assert!(r >= 1 && r < n, "fiber dimension must satisfy 1 <= r < n");
        let s = n - r;
        let spec = TowerSpec::new(s, vec![Level { r, c: s }]);
        // index gcd(r+1, (s+1) − s) = 1 and Picard rank 2 are automatic here
        Ok(spec)
    }

    /// The one-level family re-tuned for high index: `P(O^r ⊕ O(n−2r))`
    /// over `P^{n−r}` with `r = ⌊n/ln n⌋`, defined for `n ≥ 4`. The index
    /// is exactly `r + 1`. For small `n` the twist `n − 2r` can dip below
    /// zero; [`BuildMode::Strict`] reports that, [`BuildMode::Clamp`] caps
    /// `r` at `⌊n/2⌋`. See [`TowerSpec::high_index_with_info`] to learn
    /// whether the cap was applied.
    pub fn high_index(n: u32, mode: BuildMode) -> Result<Self, TowerError> {
        Ok(Self::high_index_with_info(n, mode)?.0)
    }

    /// As [`TowerSpec::high_index`], also reporting whether the clamp bound.
    pub fn high_index_with_info(n: u32, mode: BuildMode) -> Result<(Self, bool), TowerError> {
        if n < 4 {
            return Err(TowerError::InvalidConstruction(
                "the high-index family requires dimension at least 4".to_owned(),
            ));
        }
        let preferred = floor_ratio_log(n, 0)?;
        let (r, clamped) = match mode {
            BuildMode::Strict => (preferred, false),
            BuildMode::Clamp => {
                let cap = n / 2;
                if preferred > cap {
                    (cap, true)
                } else {
                    (preferred, false)
                }
            }
        };
        if n < 2 * r {
            return Err(TowerError::InvalidConstruction(format!(
                "twist n − 2r = {} − {} is negative at n = {n}; \
                 the clamped mode caps r at ⌊n/2⌋",
                n,
                2 * r
            )));
        }
        let spec = TowerSpec::new(n - r, vec![Level { r, c: n - 2 * r }]);
        Ok((spec, clamped))
    }

    /// The multi-level family with prescribed Picard rank `k ≥ 2`: the
    /// `k = 2` case is [`TowerSpec::high_index`], and each further level
    /// adds a fiber of dimension `r = ⌊n/(2^{k−2} ln n)⌋` with the largest
    /// Fano-admissible even-index twist `c = ι − r − 1`. The result has
    /// dimension `n`, Picard rank `k`, and (when no clamping occurred)
    /// index `⌊n/(2^{k−2} ln n)⌋ + 1`.
    pub fn high_picard(n: u32, k: u32, mode: BuildMode) -> Result<Self, TowerError> {
        Ok(Self::high_picard_with_info(n, k, mode)?.0)
    }

    /// As [`TowerSpec::high_picard`], also reporting whether any clamp bound.
    pub fn high_picard_with_info(
        n: u32,
        k: u32,
        mode: BuildMode,
    ) -> Result<(Self, bool), TowerError> {
        if k < 2 {
            return Err(TowerError::InvalidConstruction(
                "the high-Picard family requires rank at least 2".to_owned(),
            ));
        }
        if k == 2 {
            return Self::high_index_with_info(n, mode);
        }
        // the recursion bottoms out in the high-index family, which needs
        // dimension at least 4 — refuse early, before the ratio ⌊n/ln n⌋
        // (undefined below n = 2) is ever formed
        if n < 4 {
            return Err(TowerError::InvalidConstruction(
                "the high-Picard family requires dimension at least 4".to_owned(),
            ));
        }
        let r = floor_ratio_log(n, k - 2)?;
        if r < 1 {
            return Err(TowerError::InvalidConstruction(format!(
                "fiber dimension ⌊n/(2^{} ln n)⌋ vanishes at n = {n}, rank {k}",
                k - 2
            )));
        }
        let s = n - r;
        let (base, clamped) = Self::high_picard_with_info(s, k - 1, mode)?;
        let iota_below = base.index_only()?;
        if iota_below < (r as u64) + 1 {
            return Err(TowerError::InvalidConstruction(format!(
                "twist ι − r − 1 = {iota_below} − {} − 1 is negative at n = {n}, rank {k}",
                r
            )));
        }
        let c = (iota_below - r as u64 - 1) as u32;
        let mut levels = base.levels;
        levels.push(Level { r, c });
        let spec = TowerSpec::new(base.base_dim, levels);

        debug_assert_eq!(spec.dim(), n as u64);
        debug_assert!(spec.validate().valid);
        debug_assert_eq!(
            spec.levels.iter().filter(|lv| lv.r >= 1).count() as u32 + 1,
            k
        );
        if !clamped {
            let expected = floor_ratio_log(n, k - 2)? as u64 + 1;
            let actual = spec.index_only()?;
            assert_eq!(
                actual, expected,
                "index postcondition failed at n = {n}, k = {k}"
            );
        }
        Ok((spec, clamped))
    }

    /// The tower's index by the cheap walk, without degree computation.
    /// Errors if the tower is not admissible.
    pub fn index_only(&self) -> Result<u64, TowerError> {
        let report = self.validate();
        if !report.valid {
            return Err(TowerError::InvalidSpec(
                "index is only defined for admissible towers".to_owned(),
            ));
        }
        let mut iota = self.base_dim as u64 + 1;
        for lv in &self.levels {
            iota = next_index(iota, lv);
        }
        Ok(iota)
    }
}

/// Index one level up: `gcd(r+1, ι−c)` for `r ≥ 1`; unchanged for `r = 0`
/// (a rank-one bundle re-describes the same variety).
pub(crate) fn next_index(iota: u64, lv: &Level) -> u64 {
    if lv.r == 0 {
        iota
    } else {
        gcd_u64(lv.r as u64 + 1, iota.saturating_sub(lv.c as u64).max(1))
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `⌊n / (2^{pow2} ln n)⌋` for `n ≥ 2`, the fiber-dimension formula shared
/// by the built-in families (`pow2 = 0` gives `⌊n/ln n⌋`).
fn floor_ratio_log(n: u32, pow2: u32) -> Result<u32, TowerError> {
    debug_assert!(n >= 2, "the ratio n/ln n needs n >= 2");
    let denom_factor = Integer::from(2).pow(pow2);
    let expr = BoundExpr::int(n)
        / (BoundExpr::int(denom_factor) * BoundExpr::int(n).ln());
    let f = floor_expr(&expr, &Assignment::new(), DEFAULT_PRECISION_CAP)?;
    f.to_u32().ok_or_else(|| {
        TowerError::InvalidConstruction(format!("fiber dimension {f} is out of range"))
    })
}

/// `Σ_{i=r}^{n} C(n,i) (r+1)^i (ι−c)^{n−i} c^{i−r}` with `0^0 = 1`: the
/// anticanonical degree of the new stage divided by the generator degree of
/// the stage below.
fn level_degree_sum(n: u32, r: u32, iota: u64, c: u64) -> Integer {
    debug_assert!(c < iota, "level sums require the Fano twist condition");
    let a = Integer::from(r as u64 + 1);
    let b = Integer::from(iota - c);
    let c_int = Integer::from(c);

    let mut binom = Integer::from(Integer::binomial_u(n, r));
    let mut a_pow = a.clone().pow(r);
    let mut b_pow = b.clone().pow(n - r);
    let mut c_pow = Integer::from(1);

    let mut total = Integer::new();
    for i in r..=n {
        let mut term = Integer::from(&binom * &a_pow);
        term *= &b_pow;
        term *= &c_pow;
        total += term;
        if i < n {
            binom *= n - i;
            binom.div_exact_u_mut(i + 1);
            a_pow *= &a;
            b_pow.div_exact_mut(&b);
            c_pow *= &c_int;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degree_of(spec: &TowerSpec) -> Integer {
        spec.degree().unwrap()
    }

    #[test]
    fn projective_space_degrees() {
        for n in 1u32..=12 {
            let spec = TowerSpec::projective_space(n).unwrap();
            let inv = spec.invariants().unwrap();
            assert_eq!(inv.degree, Integer::from(n as u64 + 1).pow(n));
            assert_eq!(inv.index, n as u64 + 1);
            assert_eq!(inv.picard, 1);
            assert_eq!(inv.gen_degree, 1);
        }
    }

    #[test]
    fn batyrev_degrees_match_closed_form() {
        let expected = [(2u32, 8u64), (3, 62), (4, 800), (5, 14762)];
        for (n, d) in expected {
            let spec = TowerSpec::batyrev(n).unwrap();
            assert_eq!(degree_of(&spec), Integer::from(d));
        }
        for n in 2u32..=40 {
            let spec = TowerSpec::batyrev(n).unwrap();
            let closed = (Integer::from(2 * n as u64 - 1).pow(n) - 1u32)
                / Integer::from(n as u64 - 1);
            assert_eq!(degree_of(&spec), closed, "closed form at n = {n}");
        }
    }

    #[test]
    fn high_degree_family_golden_values() {
        let spec = TowerSpec::high_degree(3).unwrap();
        assert_eq!(spec, TowerSpec::new(1, vec![Level { r: 2, c: 1 }]));
        let inv = spec.invariants().unwrap();
        assert_eq!(inv.degree, 54);
        assert_eq!(inv.index, 1);
        assert_eq!(inv.picard, 2);

        let spec = TowerSpec::high_degree(4).unwrap();
        assert_eq!(spec, TowerSpec::new(2, vec![Level { r: 2, c: 2 }]));
        assert_eq!(degree_of(&spec), 594);
    }

    #[test]
    fn high_index_family_golden_values() {
        // n = 4: P^2 × P^2 in disguise, degree 486, index 3
        let (spec, clamped) = TowerSpec::high_index_with_info(4, BuildMode::Strict).unwrap();
        assert!(!clamped);
        assert_eq!(spec, TowerSpec::new(2, vec![Level { r: 2, c: 0 }]));
        let inv = spec.invariants().unwrap();
        assert_eq!(inv.degree, 486);
        assert_eq!(inv.index, 3);
        assert_eq!(inv.picard, 2);

        // n = 5 is the lone strict failure: ⌊5/ln 5⌋ = 3 but 5 − 6 < 0
        assert!(matches!(
            TowerSpec::high_index(5, BuildMode::Strict),
            Err(TowerError::InvalidConstruction(_))
        ));
        let (spec, clamped) = TowerSpec::high_index_with_info(5, BuildMode::Clamp).unwrap();
        assert!(clamped);
        assert_eq!(spec, TowerSpec::new(3, vec![Level { r: 2, c: 1 }]));
        assert_eq!(degree_of(&spec), 6318);

        let spec = TowerSpec::high_index(8, BuildMode::Strict).unwrap();
        assert_eq!(spec, TowerSpec::new(5, vec![Level { r: 3, c: 2 }]));
        let inv = spec.invariants().unwrap();
        assert_eq!(inv.degree, 52_690_944);
        assert_eq!(inv.index, 4);
    }

    #[test]
    fn high_picard_family_golden_values() {
        let spec = TowerSpec::high_picard(8, 3, BuildMode::Strict).unwrap();
        assert_eq!(
            spec,
            TowerSpec::new(4, vec![Level { r: 3, c: 1 }, Level { r: 1, c: 2 }])
        );
        let inv = spec.invariants().unwrap();
        assert_eq!(inv.degree, 83_128_320);
        assert_eq!(inv.index, 2);
        assert_eq!(inv.picard, 3);
        assert_eq!(inv.gen_degree, 324_720);

        let spec = TowerSpec::high_picard(5, 3, BuildMode::Strict).unwrap();
        assert_eq!(
            spec,
            TowerSpec::new(2, vec![Level { r: 2, c: 0 }, Level { r: 1, c: 1 }])
        );
        let inv = spec.invariants().unwrap();
        assert_eq!(inv.degree, 5952);
        assert_eq!(inv.index, 2);
        assert_eq!(inv.gen_degree, 186);

        let spec = TowerSpec::high_picard(16, 4, BuildMode::Strict).unwrap();
        assert_eq!(
            spec,
            TowerSpec::new(
                8,
                vec![
                    Level { r: 5, c: 3 },
                    Level { r: 2, c: 3 },
                    Level { r: 1, c: 1 }
                ]
            )
        );
        let inv = spec.invariants().unwrap();
        assert_eq!(
            inv.degree.to_string(),
            "141369071684668991078400",
            "rank-4 tower at n = 16"
        );
        assert_eq!(inv.index, 2);
        assert_eq!(inv.picard, 4);
    }

    #[test]
    fn high_picard_rejects_parameters_outside_the_family() {
        // the rank-3 construction at n = 4 bottoms out in a base below its
        // minimum dimension, in both modes
        for mode in [BuildMode::Strict, BuildMode::Clamp] {
            assert!(matches!(
                TowerSpec::high_picard(4, 3, mode),
                Err(TowerError::InvalidConstruction(_))
            ));
        }
        // rank 4 needs n ≥ 9: at n = 8 the fiber dimension vanishes
        assert!(matches!(
            TowerSpec::high_picard(8, 4, BuildMode::Strict),
            Err(TowerError::InvalidConstruction(_))
        ));
        assert!(TowerSpec::high_picard(9, 4, BuildMode::Strict).is_ok());
        // dimensions below the base family's minimum are refused (never a
        // panic), at every rank and in both modes
        for n in 0..4u32 {
            for k in 2..=5u32 {
                for mode in [BuildMode::Strict, BuildMode::Clamp] {
                    assert!(matches!(
                        TowerSpec::high_picard(n, k, mode),
                        Err(TowerError::InvalidConstruction(_))
                    ));
                }
            }
        }
    }

    #[test]
    fn rank_one_levels_change_nothing() {
        let base = TowerSpec::projective_space(3).unwrap();
        let before = base.invariants().unwrap();
        let mut spec = base;
        spec.levels.push(Level { r: 0, c: 2 });
        let after = spec.invariants().unwrap();
        assert_eq!(before.degree, after.degree);
        assert_eq!(before.index, after.index);
        assert_eq!(before.picard, after.picard);
        assert_eq!(before.gen_degree, after.gen_degree);
        assert_eq!(before.dim, after.dim);
    }

    #[test]
    fn validation_reports_the_failing_level() {
        // iota over P^2 is 3, so c = 3 is one too many
        let spec = TowerSpec::new(2, vec![Level { r: 1, c: 3 }]);
        let report = spec.validate();
        assert!(!report.valid);
        assert_eq!(report.levels.len(), 1);
        assert_eq!(report.levels[0].iota_below, 3);
        assert!(!report.levels[0].satisfied);
        assert!(report.levels[0].reason.is_some());
        assert!(matches!(
            spec.invariants(),
            Err(TowerError::InvalidSpec(_))
        ));

        // a second level is still checked against the right iota
        let spec = TowerSpec::new(2, vec![Level { r: 1, c: 1 }, Level { r: 2, c: 2 }]);
        let report = spec.validate();
        // after (r=1, c=1): iota = gcd(2, 3−1) = 2, so c = 2 fails
        assert!(!report.valid);
        assert!(report.levels[0].satisfied);
        assert!(!report.levels[1].satisfied);
        assert_eq!(report.levels[1].iota_below, 2);
    }

    #[test]
    fn oversized_towers_are_rejected_up_front() {
        let spec = TowerSpec::new(30_000, vec![]);
        let report = spec.validate();
        assert!(!report.valid);
        assert!(report.problems[0].contains("exceeds"));
    }

    #[test]
    fn profile_tracks_every_stage() {
        let spec = TowerSpec::high_picard(8, 3, BuildMode::Strict).unwrap();
        let stages = spec.profile().unwrap();
        assert_eq!(stages.len(), 3);
        assert_eq!(
            (stages[0].dim, stages[0].index, stages[0].picard),
            (4, 5, 1)
        );
        assert_eq!(stages[0].degree, Integer::from(625));
        assert_eq!(
            (stages[1].dim, stages[1].index, stages[1].picard),
            (7, 4, 2)
        );
        assert_eq!(
            (stages[2].dim, stages[2].index, stages[2].picard),
            (8, 2, 3)
        );
        assert_eq!(stages[2].degree, Integer::from(83_128_320));
    }

    #[test]
    fn delta_of_p3_is_exactly_four() {
        let inv = TowerSpec::projective_space(3)
            .unwrap()
            .invariants()
            .unwrap();
        let delta = inv.delta(256).unwrap();
        assert!(delta.is_point());
        assert!(delta.contains_rational(&rug::Rational::from(4)));
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = TowerSpec::high_picard(8, 3, BuildMode::Strict).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(
            json,
            r#"{"base_dim":4,"levels":[{"r":3,"c":1},{"r":1,"c":2}]}"#
        );
        let back: TowerSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
        // unknown fields are rejected rather than ignored
        let bad = r#"{"base_dim":4,"levels":[],"extra":1}"#;
        assert!(serde_json::from_str::<TowerSpec>(bad).is_err());
    }
}
