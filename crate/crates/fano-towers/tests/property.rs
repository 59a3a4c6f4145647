//! Property-based tests: structural invariants that must hold on *random*
//! inputs, not just the curated families — oracle agreement, reduction
//! confluence, bookkeeping identities, and soundness of the certified
//! numerics.

use fano_towers::chow::{cross_check, ChowPoly, ChowPresentation, ReduceStrategy};
use fano_towers::numerics::{
    decide_ge_detailed, floor_expr, nth_root_interval, Assignment, BoundExpr, Verdict,
    DEFAULT_PRECISION_CAP,
};
use fano_towers::{ExactInt, ExactRat, Level, TowerSpec};

use proptest::prelude::*;
use rug::ops::{DivRounding, Pow};

/// A random admissible tower of total dimension at most 9: each twist is
/// drawn from exactly the range the Fano condition allows at its level.
fn arb_spec() -> impl Strategy<Value = TowerSpec> {
    (
        1u32..=3,
        proptest::collection::vec((0u32..=3, 0u64..1_000_000), 0..=3),
    )
        .prop_map(|(base_dim, seeds)| {
            let mut levels: Vec<Level> = Vec::new();
            for (r_seed, c_seed) in seeds {
                let partial = TowerSpec::new(base_dim, levels.clone());
                if partial.dim() >= 9 {
                    break;
                }
                let r = r_seed.min(9 - partial.dim() as u32);
                let iota = partial.index_only().expect("partial towers are admissible");
                let c = (c_seed % iota) as u32;
                levels.push(Level { r, c });
            }
            TowerSpec::new(base_dim, levels)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The Chow-ring computation and the closed recursion agree on
    /// arbitrary admissible towers.
    #[test]
    fn oracle_agrees_on_random_towers(spec in arb_spec()) {
        prop_assert!(spec.validate().valid);
        prop_assert!(cross_check(&spec).is_ok());
    }

    /// Normal forms do not depend on the order rewrite rules fire.
    #[test]
    fn reduction_is_confluent(spec in arb_spec()) {
        let pres = ChowPresentation::new(&spec).unwrap();
        let gens = pres.generators().len();
        // an unreduced power of −K touches every rewrite rule
        let mut raw = ChowPoly::monomial(vec![0; gens], 1);
        for _ in 0..spec.dim() {
            raw = raw.mul_raw(pres.anticanonical());
        }
        let hi = pres.reduce_with(&raw, ReduceStrategy::HighestFirst);
        let lo = pres.reduce_with(&raw, ReduceStrategy::LowestFirst);
        prop_assert_eq!(
            hi.terms().collect::<Vec<_>>(),
            lo.terms().collect::<Vec<_>>()
        );
    }
}

proptest! {
    /// Picard rank is one plus the number of levels with positive fiber
    /// dimension, and the anticanonical degree is `gen_degree · ι^dim`.
    #[test]
    fn bookkeeping_identities(spec in arb_spec()) {
        let inv = spec.invariants().unwrap();
        let expected_rank = 1 + spec.levels.iter().filter(|lv| lv.r >= 1).count() as u32;
        prop_assert_eq!(inv.picard, expected_rank);
        prop_assert_eq!(
            inv.degree,
            inv.gen_degree * ExactInt::from(inv.index).pow(inv.dim)
        );
    }

    /// Inserting a rank-zero level (an admissible one) anywhere in a tower
    /// changes no invariant: P(O¹ ⊕ O(c)) contributes nothing.
    #[test]
    fn rank_zero_levels_are_invisible(
        spec in arb_spec(),
        pos_seed in 0usize..4,
        c_seed in 0u64..1_000_000,
    ) {
        let pos = pos_seed.min(spec.levels.len());
        let prefix = TowerSpec::new(spec.base_dim, spec.levels[..pos].to_vec());
        let iota = prefix.index_only().unwrap();
        let c = (c_seed % iota) as u32;

        let mut padded_levels = spec.levels.clone();
        padded_levels.insert(pos, Level { r: 0, c });
        let padded = TowerSpec::new(spec.base_dim, padded_levels);

        let a = spec.invariants().unwrap();
        let b = padded.invariants().unwrap();
        prop_assert_eq!(a.dim, b.dim);
        prop_assert_eq!(a.picard, b.picard);
        prop_assert_eq!(a.index, b.index);
        prop_assert_eq!(a.degree, b.degree);
        prop_assert_eq!(a.gen_degree, b.gen_degree);
    }

    /// On rational inputs the decision procedure never touches intervals
    /// and always matches the exact comparison.
    #[test]
    fn decisions_on_rationals_are_exact(
        p in -1000i64..1000, q in 1i64..100,
        r in -1000i64..1000, s in 1i64..100,
    ) {
        let a = ExactRat::from((p, q));
        let b = ExactRat::from((r, s));
        let d = decide_ge_detailed(
            &BoundExpr::rational(a.clone()),
            &BoundExpr::rational(b.clone()),
            &Assignment::new(),
            DEFAULT_PRECISION_CAP,
        )
        .unwrap();
        prop_assert_eq!(d.precision_used, 0, "settled without intervals");
        let expected = if a >= b { Verdict::True } else { Verdict::False };
        prop_assert_eq!(d.verdict, expected);
    }

    /// Raising precision only tightens an enclosure; the tighter interval
    /// is always contained in the looser one.
    #[test]
    fn enclosures_tighten_monotonically(p in 1u32..500, q in 1u32..500) {
        let expr = (BoundExpr::int(p) / BoundExpr::int(q) + BoundExpr::int(1)).ln()
            + BoundExpr::int(p).root(3);
        let asn = Assignment::new();
        let loose = expr.interval_eval(&asn, 64).unwrap();
        let tight = expr.interval_eval(&asn, 256).unwrap();
        prop_assert!(loose.contains(&tight));
    }

    /// Certified floors of rationals match exact floor division.
    #[test]
    fn floors_match_exact_division(p in -100_000i64..100_000, q in 1i64..1000) {
        let f = floor_expr(
            &BoundExpr::rational(ExactRat::from((p, q))),
            &Assignment::new(),
            DEFAULT_PRECISION_CAP,
        )
        .unwrap();
        let expected = ExactInt::from(p).div_floor(ExactInt::from(q));
        prop_assert_eq!(f, expected);
    }

    /// Roots of perfect powers come back as point intervals at the root.
    #[test]
    fn perfect_power_roots_are_points(a in 1u32..50, k in 1u32..6) {
        let value = ExactInt::from(a).pow(k);
        let iv = nth_root_interval(&value, k, 128).unwrap();
        prop_assert!(iv.is_point());
        prop_assert!(iv.contains_rational(&ExactRat::from(a)));
    }
}
