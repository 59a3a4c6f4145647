//! Certified degree bounds for the built-in families.
//!
//! Each check here pairs an **exact** anticanonical degree with a
//! closed-form bound evaluated by outward-rounded interval arithmetic, and
//! returns a [`Verdict`] that is only ever `True`/`False` when the
//! comparison is proved. Three layers are exposed:
//!
//! * the headline checks [`check_high_degree`], [`check_high_index`], and
//!   [`check_high_picard`] — "the degree of this family really does grow at
//!   the advertised rate", one dimension at a time;
//! * [`check_chain`] — the full inequality chain behind the multi-level
//!   bound, replayed level by level with the actual constructed values, so
//!   a reader can see *why* the bound holds (or exactly which analytic step
//!   only kicks in for larger `n`);
//! * [`threshold`] — the smallest dimension from which a purely analytic
//!   argument takes over for the one-level families, certified by interval
//!   refinement;
//! * [`known_upper_bounds`] — classical upper bounds for normalized Fano
//!   degrees, evaluated exactly where feasible, for side-by-side tables.
//!
//! Degree-versus-bound comparisons are performed as
//! `degree ≥ (bound)^n` with the power folded into the bound expression:
//! equivalent by monotonicity, and much cheaper than extracting an `n`-th
//! root of an integer with thousands of digits.

use std::fmt;

use rug::ops::Pow as _;
use rug::{Integer, Rational};

use crate::numerics::{
    decide_ge_detailed, decide_ge_expr, floor_expr, Assignment, BoundExpr, EvalError,
    RealInterval, Verdict,
};
use crate::tower::{BuildMode, TowerSpec, TowerError};

/// Errors from the bound-checking layer.
#[derive(Clone, Debug, PartialEq)]
pub enum BoundsError {
    /// Parameters outside a check's domain.
    InvalidParameter(String),
    /// Construction or invariant evaluation failed.
    Tower(TowerError),
    /// Interval evaluation failed (domain error or precision cap).
    Eval(EvalError),
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            BoundsError::Tower(e) => write!(f, "{e}"),
            BoundsError::Eval(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for BoundsError {}

impl From<TowerError> for BoundsError {
    fn from(e: TowerError) -> Self {
        BoundsError::Tower(e)
    }
}

impl From<EvalError> for BoundsError {
    fn from(e: EvalError) -> Self {
        BoundsError::Eval(e)
    }
}

/// One certified degree-versus-bound comparison, with everything needed to
/// reproduce it.
#[derive(Clone, Debug)]
pub struct CheckResult {
    /// Dimension checked.
    pub n: u32,
    /// Picard-rank parameter, for the multi-level family.
    pub k: Option<u32>,
    /// Construction mode, where one applies.
    pub mode: Option<BuildMode>,
    /// Whether clamping changed the preferred fiber dimension.
    pub clamped: bool,
    /// The tower that was actually evaluated.
    pub spec: TowerSpec,
    /// Exact anticanonical degree of that tower.
    pub degree: Integer,
    /// The bound the degree was compared against (already raised to the
    /// `n`-th power).
    pub bound: BoundExpr,
    /// Human-readable rendering of the bound.
    pub bound_text: String,
    /// Certified outcome.
    pub verdict: Verdict,
    /// Working precision (bits) at which the verdict was reached; 0 when the
    /// comparison was settled exactly.
    pub precision_used: u32,
    /// Anything noteworthy: clamp events, invariant mismatches.
    pub notes: Vec<String>,
}

/// `c(k) = 4^{−(k²−k+2)}`, the constant in the multi-level degree bound.
pub fn c_const(k: u32) -> Result<Rational, BoundsError> {
    if k < 2 {
        return Err(BoundsError::InvalidParameter(
            "the bound constant c(k) is defined for k ≥ 2".to_owned(),
        ));
    }
    Ok(chain_constant(k))
}

/// The same formula without the domain restriction; the per-level chain
/// extends it to a rank-one source, where `4^{−2}` still works.
fn chain_constant(k: u32) -> Rational {
    let exponent = k * k - k + 2;
    Rational::from((Integer::from(1), Integer::from(4).pow(exponent)))
}

/// Certifies `degree ≥ (3n²/(10 ln n))^n` for the high-degree family,
/// `n ≥ 3`.
pub fn check_high_degree(n: u32, precision_cap: u32) -> Result<CheckResult, BoundsError> {
    if n < 3 {
        return Err(BoundsError::InvalidParameter(
            "the high-degree family starts at dimension 3".to_owned(),
        ));
    }
    let spec = TowerSpec::high_degree(n)?;
    let degree = spec.degree()?;
    let bound = ((BoundExpr::int(3) * BoundExpr::int(n).powi(2))
        / (BoundExpr::int(10) * BoundExpr::int(n).ln()))
    .powi(n);
    let d = decide_ge_detailed(
        &BoundExpr::Int(degree.clone()),
        &bound,
        &Assignment::new(),
        precision_cap,
    )?;
    Ok(CheckResult {
        n,
        k: None,
        mode: None,
        clamped: false,
        spec,
        degree,
        bound,
        bound_text: format!("(3n^2/(10 ln n))^n at n = {n}"),
        verdict: d.verdict,
        precision_used: d.precision_used,
        notes: Vec::new(),
    })
}

/// Certifies `degree ≥ (n²/(7 ln n))^n` for the high-index family with the
/// clamped construction, `n ≥ 4`; records whether the clamp bound.
pub fn check_high_index(n: u32, precision_cap: u32) -> Result<CheckResult, BoundsError> {
    if n < 4 {
        return Err(BoundsError::InvalidParameter(
            "the high-index family starts at dimension 4".to_owned(),
        ));
    }
    let (spec, clamped) = TowerSpec::high_index_with_info(n, BuildMode::Clamp)?;
    let degree = spec.degree()?;
    let bound = (BoundExpr::int(n).powi(2) / (BoundExpr::int(7) * BoundExpr::int(n).ln()))
        .powi(n);
    let d = decide_ge_detailed(
        &BoundExpr::Int(degree.clone()),
        &bound,
        &Assignment::new(),
        precision_cap,
    )?;
    let mut notes = Vec::new();
    if clamped {
        notes.push(format!(
            "fiber dimension clamped to ⌊n/2⌋ = {} at n = {n}",
            n / 2
        ));
    }
    Ok(CheckResult {
        n,
        k: None,
        mode: Some(BuildMode::Clamp),
        clamped,
        spec,
        degree,
        bound,
        bound_text: format!("(n^2/(7 ln n))^n at n = {n}"),
        verdict: d.verdict,
        precision_used: d.precision_used,
        notes,
    })
}

/// Certifies the multi-level family at `(n, k)`: the invariant triple
/// `dim = n`, `ρ = k`, `ι = ⌊n/(2^{k−2} ln n)⌋ + 1`, and the degree bound
/// `degree ≥ (c(k)·n^k/(ln n)^{k−1})^n`. Strict construction; a failed
/// construction is a hard error so sweeps can record it.
pub fn check_high_picard(n: u32, k: u32, precision_cap: u32) -> Result<CheckResult, BoundsError> {
    let spec = TowerSpec::high_picard(n, k, BuildMode::Strict)?;
    let inv = spec.invariants()?;
    let mut notes = Vec::new();
    let mut invariants_ok = true;

    if inv.dim != n {
        invariants_ok = false;
        notes.push(format!("dimension is {}, expected {n}", inv.dim));
    }
    if inv.picard != k {
        invariants_ok = false;
        notes.push(format!("Picard rank is {}, expected {k}", inv.picard));
    }
    let expected_index = expected_picard_index(n, k, precision_cap)?;
    if inv.index != expected_index {
        invariants_ok = false;
        notes.push(format!(
            "index is {}, expected ⌊n/(2^{} ln n)⌋ + 1 = {expected_index}",
            inv.index,
            k - 2
        ));
    }

    let c_k = c_const(k)?;
    let bound = ((BoundExpr::rational(c_k) * BoundExpr::int(n).powi(k))
        / BoundExpr::int(n).ln().powi(k - 1))
    .powi(n);
    let d = decide_ge_detailed(
        &BoundExpr::Int(inv.degree.clone()),
        &bound,
        &Assignment::new(),
        precision_cap,
    )?;
    let verdict = if invariants_ok { d.verdict } else { Verdict::False };
    Ok(CheckResult {
        n,
        k: Some(k),
        mode: Some(BuildMode::Strict),
        clamped: false,
        spec,
        degree: inv.degree,
        bound,
        bound_text: format!("(c(k)·n^k/(ln n)^(k−1))^n at n = {n}, k = {k}"),
        verdict,
        precision_used: d.precision_used,
        notes,
    })
}

/// `⌊n/(2^{k−2} ln n)⌋ + 1`, the index the multi-level family is built to
/// achieve.
pub fn expected_picard_index(n: u32, k: u32, precision_cap: u32) -> Result<u64, BoundsError> {
    if k < 2 || n < 2 {
        return Err(BoundsError::InvalidParameter(
            "the index formula needs k ≥ 2 and n ≥ 2".to_owned(),
        ));
    }
    let expr = BoundExpr::int(n)
        / (BoundExpr::int(Integer::from(2).pow(k - 2)) * BoundExpr::int(n).ln());
    let f = floor_expr(&expr, &Assignment::new(), precision_cap)?;
    f.to_u64()
        .map(|v| v + 1)
        .ok_or_else(|| BoundsError::InvalidParameter("index out of range".to_owned()))
}

/// Which case of the analytic argument applied at a level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseBranch {
    /// `n/ln n ≥ 7·2^{κ−2}`: the index is large enough for the ratio bound.
    Large,
    /// `n/ln n < 7·2^{κ−2}`: the index itself is bounded by 8.
    Small,
    /// The split could not be certified at the precision cap (the rows of
    /// both branches are then evaluated and reported).
    Undecided,
}

/// One inequality of the per-level chain.
#[derive(Clone, Debug)]
pub struct ChainRow {
    /// Stable identifier, e.g. `"all_cases_lemma"`.
    pub name: &'static str,
    /// The inequality with the actual numbers substituted.
    pub statement: String,
    /// Whether the comparison was settled in exact arithmetic (as opposed to
    /// certified intervals).
    pub exact: bool,
    pub verdict: Verdict,
}

/// The chain evaluated at one level of the tower: the step that builds the
/// stage of Picard rank `picard_target` on top of the stage below it.
#[derive(Clone, Debug)]
pub struct ChainLevel {
    /// Picard rank `j` of the stage this level produces (2 ≤ j ≤ k).
    pub picard_target: u32,
    /// Dimension of the produced stage.
    pub dim: u32,
    /// Fiber dimension of the level.
    pub r: u32,
    /// Dimension of the stage below.
    pub s: u32,
    /// Index of the stage below.
    pub iota_y: u64,
    /// Twist `c = ι_Y − r − 1` of the level.
    pub twist: u32,
    /// Which case of the split `n/ln n ≷ 7·2^{κ−2}` applied (κ = j − 1).
    pub branch: CaseBranch,
    pub rows: Vec<ChainRow>,
}

impl ChainLevel {
    /// Looks up a row by its stable name.
    pub fn row(&self, name: &str) -> Option<&ChainRow> {
        self.rows.iter().find(|r| r.name == name)
    }
}

/// The full certificate chain for a multi-level tower: one [`ChainLevel`]
/// per step, bottom up.
#[derive(Clone, Debug)]
pub struct ChainReport {
    pub n: u32,
    pub k: u32,
    pub tower: TowerSpec,
    pub levels: Vec<ChainLevel>,
}

impl ChainReport {
    /// True when every row of every level certified `True`. Small
    /// dimensions legitimately fail some analytic rows (the chain is an
    /// asymptotic argument); the headline degree bounds remain certified
    /// separately by the `check_*` functions.
    pub fn all_rows_hold(&self) -> bool {
        self.levels
            .iter()
            .all(|lv| lv.rows.iter().all(|r| r.verdict == Verdict::True))
    }
}

/// Replays the analytic inequality chain for the strict multi-level tower
/// at `(n, k)`, level by level, substituting the exact constructed values.
///
/// Every inequality whose content is rational is settled by exact integer
/// or rational comparison; the logarithmic ones are certified by intervals.
/// The rows report honestly: at small dimensions some intermediate analytic
/// steps are genuinely false even though the final degree bound holds.
pub fn check_chain(n: u32, k: u32, precision_cap: u32) -> Result<ChainReport, BoundsError> {
    let spec = TowerSpec::high_picard(n, k, BuildMode::Strict)?;
    let stages = spec.profile()?;
    let mut levels = Vec::with_capacity(spec.levels.len());

    for (idx, lv) in spec.levels.iter().enumerate() {
        let below = &stages[idx];
        let here = &stages[idx + 1];
        let j = here.picard; // target rank of this step
        let kappa = j - 1; // rank of the stage below
        let n_j = here.dim;
        let s = below.dim;
        let iota_y = below.index;
        let c = lv.c;
        debug_assert_eq!(c as u64, iota_y - lv.r as u64 - 1);

        let asn = Assignment::new();
        let nj_expr = BoundExpr::int(n_j);
        let s_expr = BoundExpr::int(s);
        let ln_n = nj_expr.clone().ln();
        let ln_s = s_expr.clone().ln();
        // 2^{κ−2} as an exact rational (κ = 1 gives 1/2)
        let two_pow_km2 = if kappa >= 2 {
            Rational::from(Integer::from(2).pow(kappa - 2))
        } else {
            Rational::from((1, 2))
        };
        let two_pow_k = Rational::from(Integer::from(2).pow(kappa));

        let mut rows = Vec::new();

        rows.push(ChainRow {
            name: "r_positive",
            statement: format!("r = {} ≥ 1", lv.r),
            exact: true,
            verdict: truth(lv.r >= 1),
        });
        rows.push(ChainRow {
            name: "r_within_quarter",
            statement: format!("4r = {} ≤ n = {n_j}", 4 * lv.r),
            exact: true,
            verdict: truth(4 * lv.r <= n_j),
        });

        // s/ln s ≥ 3n/(4 ln n)
        let lhs = s_expr.clone() / ln_s.clone();
        let rhs = (BoundExpr::int(3) * nj_expr.clone()) / (BoundExpr::int(4) * ln_n.clone());
        rows.push(ChainRow {
            name: "subdimension_ratio",
            statement: format!("s/ln s ≥ 3n/(4 ln n) with s = {s}, n = {n_j}"),
            exact: false,
            verdict: decide_ge_expr(&lhs, &rhs, &asn, precision_cap)?,
        });
        // s/ln s ≥ 2^{κ−2}
        rows.push(ChainRow {
            name: "subdimension_hypothesis",
            statement: format!("s/ln s ≥ {two_pow_km2} with s = {s}"),
            exact: false,
            verdict: decide_ge_expr(
                &(s_expr.clone() / ln_s.clone()),
                &BoundExpr::rational(two_pow_km2.clone()),
                &asn,
                precision_cap,
            )?,
        });

        // ι_Y ≥ s/(2^{κ−2} ln n) and ι_Y ≥ 3n/(2^κ ln n)
        let iota_expr = BoundExpr::int(Integer::from(iota_y));
        rows.push(ChainRow {
            name: "index_lower_bound",
            statement: format!(
                "ι_Y = {iota_y} ≥ s/({two_pow_km2}·ln n) with s = {s}, n = {n_j}"
            ),
            exact: false,
            verdict: decide_ge_expr(
                &iota_expr,
                &(s_expr.clone()
                    / (BoundExpr::rational(two_pow_km2.clone()) * ln_n.clone())),
                &asn,
                precision_cap,
            )?,
        });
        rows.push(ChainRow {
            name: "index_lower_bound_dim",
            statement: format!("ι_Y = {iota_y} ≥ 3n/({two_pow_k}·ln n) with n = {n_j}"),
            exact: false,
            verdict: decide_ge_expr(
                &iota_expr,
                &((BoundExpr::int(3) * nj_expr.clone())
                    / (BoundExpr::rational(two_pow_k.clone()) * ln_n.clone())),
                &asn,
                precision_cap,
            )?,
        });

        // case split: n/ln n ≷ 7·2^{κ−2}
        let split_value = Rational::from((
            Integer::from(7) * two_pow_km2.numer(),
            two_pow_km2.denom().clone(),
        ));
        let branch = match decide_ge_expr(
            &(nj_expr.clone() / ln_n.clone()),
            &BoundExpr::rational(split_value.clone()),
            &asn,
            precision_cap,
        )? {
            Verdict::True => CaseBranch::Large,
            Verdict::False => CaseBranch::Small,
            Verdict::Undecided { .. } => CaseBranch::Undecided,
        };

        if branch != CaseBranch::Small {
            // (r+1)/ι_Y ≤ 2/3 + 2^κ ln n/(3n), and ≤ 6/7 outright
            let ratio = Rational::from((Integer::from(lv.r as u64 + 1), Integer::from(iota_y)));
            let mid = BoundExpr::rat(2, 3)
                + (BoundExpr::rational(two_pow_k.clone()) * ln_n.clone())
                    / (BoundExpr::int(3) * nj_expr.clone());
            rows.push(ChainRow {
                name: "ratio_vs_split",
                statement: format!(
                    "(r+1)/ι_Y = {ratio} ≤ 2/3 + {two_pow_k}·ln n/(3n) with n = {n_j}"
                ),
                exact: false,
                verdict: decide_ge_expr(&mid, &BoundExpr::rational(ratio.clone()), &asn, precision_cap)?,
            });
            rows.push(ChainRow {
                name: "ratio_le_six_sevenths",
                statement: format!("(r+1)/ι_Y = {ratio} ≤ 6/7"),
                exact: true,
                verdict: truth(ratio <= Rational::from((6, 7))),
            });
        }
        if branch != CaseBranch::Large {
            rows.push(ChainRow {
                name: "index_at_most_eight",
                statement: format!("ι_Y = {iota_y} ≤ 8"),
                exact: true,
                verdict: truth(iota_y <= 8),
            });
        }

        // In all cases: (1 + c^s)/ι_Y^s ≥ 8^{−n}, settled exactly.
        let lemma_lhs = (Integer::from(1) + Integer::from(c).pow(s)) * Integer::from(8).pow(n_j);
        let lemma_rhs = Integer::from(iota_y).pow(s);
        rows.push(ChainRow {
            name: "all_cases_lemma",
            statement: format!(
                "(1 + c^s)·8^n ≥ ι_Y^s with c = {c}, s = {s}, ι_Y = {iota_y}, n = {n_j}"
            ),
            exact: true,
            verdict: truth(lemma_lhs >= lemma_rhs),
        });

        // the level's conclusion: degree ≥ (n^κ⁺¹/(ln n)^κ · c(κ)·3^κ/(e·2^{κ+2}·4^κ))^n
        let constant = BoundExpr::rational(chain_constant(kappa.max(1)))
            * BoundExpr::int(Integer::from(3).pow(kappa))
            / (BoundExpr::E
                * BoundExpr::int(Integer::from(2).pow(kappa + 2))
                * BoundExpr::int(Integer::from(4).pow(kappa)));
        let bound = (nj_expr.clone().powi(kappa + 1) / ln_n.clone().powi(kappa) * constant)
            .powi(n_j);
        rows.push(ChainRow {
            name: "delta_lower_bound",
            statement: format!(
                "degree ≥ (n^{}/(ln n)^{}·c({kappa})·3^{kappa}/(e·2^{}·4^{kappa}))^n \
                 with n = {n_j}",
                kappa + 1,
                kappa,
                kappa + 2
            ),
            exact: false,
            verdict: decide_ge_expr(
                &BoundExpr::Int(here.degree.clone()),
                &bound,
                &asn,
                precision_cap,
            )?,
        });

        levels.push(ChainLevel {
            picard_target: j,
            dim: n_j,
            r: lv.r,
            s,
            iota_y,
            twist: c,
            branch,
            rows,
        });
    }

    Ok(ChainReport {
        n,
        k,
        tower: spec,
        levels,
    })
}

fn truth(holds: bool) -> Verdict {
    if holds {
        Verdict::True
    } else {
        Verdict::False
    }
}

/// The analytic thresholds: from which dimension on the closed-form
/// argument alone certifies the corresponding family's bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThresholdKind {
    /// `ln n ≥ 10/(10 − 3e)` for the high-degree family.
    HighDegree,
    /// `ln n ≥ 14/(7 − e)` for the high-index family.
    HighIndex,
}

/// Smallest integer `n` satisfying the analytic condition, certified: the
/// candidate is located by a certified floor and then both `n` and `n − 1`
/// are checked against the defining inequality.
pub fn threshold(kind: ThresholdKind, precision_cap: u32) -> Result<Integer, BoundsError> {
    let rhs = match kind {
        ThresholdKind::HighDegree => {
            BoundExpr::int(10) / (BoundExpr::int(10) - BoundExpr::int(3) * BoundExpr::E)
        }
        ThresholdKind::HighIndex => {
            BoundExpr::int(14) / (BoundExpr::int(7) - BoundExpr::E)
        }
    };
    let asn = Assignment::new();
    // smallest n with ln n ≥ rhs is ⌊e^rhs⌋ + 1 unless e^rhs is an integer;
    // the explicit re-checks below certify the candidate either way.
    let floor = floor_expr(&BoundExpr::Exp(Box::new(rhs.clone())), &asn, precision_cap)?;
    let candidate = floor + 1u32;
    let n_expr = BoundExpr::Int(candidate.clone());
    let at_candidate = decide_ge_expr(&n_expr.ln(), &rhs, &asn, precision_cap)?;
    let below = Integer::from(&candidate - 1u32);
    let at_predecessor = decide_ge_expr(
        &BoundExpr::Int(below.clone()).ln(),
        &rhs,
        &asn,
        precision_cap,
    )?;
    match (at_candidate, at_predecessor) {
        (Verdict::True, Verdict::False) => Ok(candidate),
        (Verdict::Undecided { precision_reached }, _)
        | (_, Verdict::Undecided { precision_reached }) => Err(BoundsError::Eval(
            EvalError::PrecisionCap {
                bits: precision_reached,
            },
        )),
        _ => Err(BoundsError::InvalidParameter(format!(
            "threshold bracketing failed around {candidate}; \
             the floor certificate and the comparisons disagree"
        ))),
    }
}

/// Which optional upper bounds to include in [`known_upper_bounds`].
#[derive(Clone, Copy, Debug, Default)]
pub struct BoundFlags {
    /// Include the Picard-rank-one bound `δ ≤ max(nι, n+1)`.
    pub picard_one: bool,
    /// Include the semistable-tangent-bundle bound `δ ≤ 2n`.
    pub semistable: bool,
    /// Include the Kähler–Einstein bound
    /// `δ ≤ (2n−1)·(2^{n+1}(n!)²/(2n)!)^{1/n}`.
    pub kahler_einstein: bool,
}

/// A bound's value: exact where feasible, enclosed otherwise.
#[derive(Clone, Debug)]
pub enum BoundValue {
    Exact(Integer),
    /// Certified enclosure of the value itself.
    Enclosure(RealInterval),
    /// Certified enclosure of log₁₀ of the value, for numbers whose decimal
    /// expansion would be astronomically long.
    Log10(RealInterval),
}

/// One named upper bound on the normalized degree δ.
#[derive(Clone, Debug)]
pub struct NamedBound {
    pub name: &'static str,
    pub description: String,
    pub value: BoundValue,
}

/// Dimension up to which the doubly-exponential general bound is expanded
/// exactly; past this it has on the order of `(n+1)·2^n` digits.
pub const EXACT_GENERAL_BOUND_MAX_DIM: u32 = 20;

/// Classical upper bounds on δ for `n`-dimensional Fano varieties, for
/// context tables next to what the tower families achieve.
pub fn known_upper_bounds(
    n: u32,
    iota: u64,
    flags: BoundFlags,
    prec: u32,
) -> Result<Vec<NamedBound>, BoundsError> {
    if n < 1 {
        return Err(BoundsError::InvalidParameter(
            "bounds are stated for n ≥ 1".to_owned(),
        ));
    }
    let asn = Assignment::new();
    let mut out = Vec::new();

    // the unconditional bound 3(2^n − 1)(n+1)^{(n+1)(2^n − 1)}
    let two_n_minus_one = Integer::from(2).pow(n) - 1u32;
    if n <= EXACT_GENERAL_BOUND_MAX_DIM {
        let exponent = (Integer::from(n) + 1u32) * &two_n_minus_one;
        let exponent_u32 = exponent
            .to_u32()
            .expect("exponent fits u32 for n within the exact range");
        let value = Integer::from(3) * &two_n_minus_one
            * Integer::from(n as u64 + 1).pow(exponent_u32);
        out.push(NamedBound {
            name: "general",
            description: format!("3(2^n−1)(n+1)^((n+1)(2^n−1)) at n = {n}, exact"),
            value: BoundValue::Exact(value),
        });
    } else {
        // log10 = log10(3) + log10(2^n−1) + (n+1)(2^n−1)·log10(n+1)
        let log10 = |x: BoundExpr| x.ln() / BoundExpr::int(10).ln();
        let expr = log10(BoundExpr::int(3))
            + log10(BoundExpr::Int(two_n_minus_one.clone()))
            + BoundExpr::Int((Integer::from(n) + 1u32) * &two_n_minus_one)
                * log10(BoundExpr::int(n as u64 + 1));
        out.push(NamedBound {
            name: "general",
            description: format!(
                "3(2^n−1)(n+1)^((n+1)(2^n−1)) at n = {n}, as log10 of the value"
            ),
            value: BoundValue::Log10(expr.interval_eval(&asn, prec)?),
        });
    }

    if flags.picard_one {
        let value = Integer::from((n as u64 * iota).max(n as u64 + 1));
        out.push(NamedBound {
            name: "picard_one",
            description: format!("max(nι, n+1) at n = {n}, ι = {iota}"),
            value: BoundValue::Exact(value),
        });
    }
    if flags.semistable {
        out.push(NamedBound {
            name: "semistable",
            description: format!("2n at n = {n}"),
            value: BoundValue::Exact(Integer::from(2 * n as u64)),
        });
    }
    if flags.kahler_einstein {
        out.push(NamedBound {
            name: "kahler_einstein",
            description: format!("(2n−1)·(2^(n+1)·(n!)²/(2n)!)^(1/n) at n = {n}"),
            value: BoundValue::Enclosure(kahler_einstein_bound(n, prec)?),
        });
    }
    Ok(out)
}

/// `(2n−1)·(2^{n+1}(n!)²/(2n)!)^{1/n}` as a certified enclosure; the
/// factorials stay exact integers inside the expression.
pub fn kahler_einstein_bound(n: u32, prec: u32) -> Result<RealInterval, BoundsError> {
    let n_fact = Integer::from(Integer::factorial(n));
    let two_n_fact = Integer::from(Integer::factorial(2 * n));
    let inner = BoundExpr::Int(Integer::from(2).pow(n + 1) * n_fact.clone().pow(2))
        / BoundExpr::Int(two_n_fact);
    let expr = BoundExpr::int(2 * n as u64 - 1) * inner.root(n);
    Ok(expr.interval_eval(&Assignment::new(), prec)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::DEFAULT_PRECISION_CAP;

    const CAP: u32 = DEFAULT_PRECISION_CAP;

    #[test]
    fn bound_constant_values_and_ratio() {
        assert_eq!(
            c_const(2).unwrap(),
            Rational::from((1, 256)),
            "k = 2 gives 4^−4"
        );
        assert_eq!(
            c_const(3).unwrap(),
            Rational::from((Integer::from(1), Integer::from(4).pow(8)))
        );
        for k in 2..=6 {
            let ratio = c_const(k + 1).unwrap() / c_const(k).unwrap();
            let expected = Rational::from((Integer::from(1), Integer::from(4).pow(2 * k)));
            assert_eq!(ratio, expected, "c(k+1)/c(k) = 4^−2k at k = {k}");
        }
        assert!(c_const(1).is_err());
    }

    #[test]
    fn high_degree_check_small_dimensions() {
        for n in [3u32, 4, 10, 226] {
            let res = check_high_degree(n, CAP).unwrap();
            assert_eq!(res.verdict, Verdict::True, "n = {n}");
        }
    }

    #[test]
    fn high_index_check_records_the_clamp() {
        let res = check_high_index(4, CAP).unwrap();
        assert_eq!(res.verdict, Verdict::True);
        assert!(!res.clamped);

        let res = check_high_index(5, CAP).unwrap();
        assert_eq!(res.verdict, Verdict::True);
        assert!(res.clamped);
        assert_eq!(res.degree, 6318);
        assert!(!res.notes.is_empty());

        let res = check_high_index(8, CAP).unwrap();
        assert_eq!(res.verdict, Verdict::True);
        assert!(!res.clamped);
    }

    #[test]
    fn high_picard_check_verifies_the_invariant_triple() {
        let res = check_high_picard(8, 3, CAP).unwrap();
        assert_eq!(res.verdict, Verdict::True);
        assert!(res.notes.is_empty());

        // k = 2 delegates to the one-level high-index family
        let res = check_high_picard(4, 2, CAP).unwrap();
        assert_eq!(res.verdict, Verdict::True);

        // construction failure surfaces as an error, never a silent skip
        assert!(matches!(
            check_high_picard(4, 3, CAP),
            Err(BoundsError::Tower(TowerError::InvalidConstruction(_)))
        ));
    }

    #[test]
    fn chain_report_at_8_3_matches_the_worked_example() {
        let report = check_chain(8, 3, CAP).unwrap();
        assert_eq!(report.levels.len(), 2);

        let top = &report.levels[1];
        assert_eq!(top.picard_target, 3);
        assert_eq!((top.r, top.s, top.iota_y, top.twist), (1, 7, 4, 2));
        // 8/ln 8 ≈ 3.85 < 7·2⁰ = 7: the small-index branch
        assert_eq!(top.branch, CaseBranch::Small);
        assert_eq!(top.row("index_at_most_eight").unwrap().verdict, Verdict::True);
        let lemma = top.row("all_cases_lemma").unwrap();
        assert!(lemma.exact);
        assert_eq!(lemma.verdict, Verdict::True);
        assert_eq!(
            top.row("delta_lower_bound").unwrap().verdict,
            Verdict::True
        );
    }

    #[test]
    fn chain_report_large_branch_at_200_2() {
        let report = check_chain(200, 2, CAP).unwrap();
        assert_eq!(report.levels.len(), 1);
        let lv = &report.levels[0];
        assert_eq!((lv.r, lv.s, lv.iota_y), (37, 163, 164));
        assert_eq!(lv.branch, CaseBranch::Large);
        assert_eq!(lv.row("ratio_le_six_sevenths").unwrap().verdict, Verdict::True);
        assert_eq!(lv.row("ratio_vs_split").unwrap().verdict, Verdict::True);
        assert_eq!(lv.row("all_cases_lemma").unwrap().verdict, Verdict::True);
        assert!(lv.row("index_at_most_eight").is_none());
    }

    #[test]
    fn thresholds_reproduce_the_analytic_switchover_points() {
        assert_eq!(
            threshold(ThresholdKind::HighDegree, CAP).unwrap(),
            Integer::from(226)
        );
        assert_eq!(
            threshold(ThresholdKind::HighIndex, CAP).unwrap(),
            Integer::from(27)
        );
        // determinism at higher precision
        assert_eq!(
            threshold(ThresholdKind::HighDegree, CAP * 4).unwrap(),
            Integer::from(226)
        );
        // a starved cap is reported, not guessed around
        assert!(matches!(
            threshold(ThresholdKind::HighDegree, 8),
            Err(BoundsError::Eval(EvalError::PrecisionCap { .. }))
        ));
    }

    #[test]
    fn upper_bound_table_golden_values() {
        let flags = BoundFlags {
            picard_one: true,
            semistable: true,
            kahler_einstein: true,
        };
        let table = known_upper_bounds(1, 1, flags, 128).unwrap();
        let by_name = |name: &str| {
            table
                .iter()
                .find(|b| b.name == name)
                .unwrap_or_else(|| panic!("missing bound {name}"))
        };
        match &by_name("general").value {
            BoundValue::Exact(v) => assert_eq!(*v, 12, "3·1·2² at n = 1"),
            other => panic!("expected exact value, got {other:?}"),
        }
        match &by_name("kahler_einstein").value {
            BoundValue::Enclosure(iv) => {
                assert!(iv.contains_rational(&Rational::from(2)), "KE bound at n=1 is 2");
            }
            other => panic!("expected enclosure, got {other:?}"),
        }

        let table = known_upper_bounds(3, 4, flags, 128).unwrap();
        let by_name = |name: &str| table.iter().find(|b| b.name == name).unwrap();
        match &by_name("picard_one").value {
            BoundValue::Exact(v) => assert_eq!(*v, 12, "max(3·4, 4)"),
            other => panic!("expected exact value, got {other:?}"),
        }
        match &by_name("semistable").value {
            BoundValue::Exact(v) => assert_eq!(*v, 6),
            other => panic!("expected exact value, got {other:?}"),
        }
        match &by_name("general").value {
            BoundValue::Exact(v) => {
                assert_eq!(v.to_string(), "1513209474796486656", "3·7·4^28")
            }
            other => panic!("expected exact value, got {other:?}"),
        }

        // past the exact range the general bound comes back on a log scale
        let table = known_upper_bounds(30, 1, BoundFlags::default(), 128).unwrap();
        match &table[0].value {
            BoundValue::Log10(iv) => {
                // (n+1)(2^n−1)·log10(n+1) ≈ 4.96e10 at n = 30
                assert!(*iv.lo() > 4.9e10f64);
                assert!(*iv.hi() < 5.0e10f64);
            }
            other => panic!("expected log-scale value, got {other:?}"),
        }
    }

    #[test]
    fn kmm_small_values() {
        let t2 = known_upper_bounds(2, 1, BoundFlags::default(), 128).unwrap();
        match &t2[0].value {
            BoundValue::Exact(v) => assert_eq!(v.to_string(), "177147", "3·3·3^9 at n = 2"),
            other => panic!("expected exact, got {other:?}"),
        }
    }
}
