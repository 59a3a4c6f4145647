//! The numeric substrate: outward-rounded interval arithmetic, symbolic
//! bound expressions, and comparisons that escalate precision until they
//! are *certified* — or honestly report that they could not be.
//!
//! Nothing in the crate ever trusts a floating-point comparison: a
//! verdict of `True` or `False` is always backed either by exact rational
//! arithmetic or by disjoint intervals at some finite precision.
//!
//! Run with `cargo run --example adaptive_precision`.

use fano_towers::numerics::{
    decide_ge_detailed, floor_expr, nth_root_interval, Assignment, BoundExpr, EvalError,
    RealInterval, Verdict, DEFAULT_PRECISION_CAP,
};
use fano_towers::{ExactInt, ExactRat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Interval evaluation always rounds outward, so the true value is
    // *contained* at every precision — raising precision only tightens.
    let expr = (BoundExpr::int(3) * BoundExpr::var("n").powi(2))
        / (BoundExpr::int(10) * BoundExpr::var("n").ln());
    let asn = Assignment::new().set("n", 3);
    println!("enclosures of 3n²/(10 ln n) at n = 3:");
    let mut previous: Option<RealInterval> = None;
    for prec in [32u32, 64, 128, 256] {
        let iv = expr.interval_eval(&asn, prec)?;
        let (lo, hi) = iv.to_decimal_strings(25);
        println!("  {prec:>3} bits: [{lo}, {hi}]");
        if let Some(outer) = &previous {
            assert!(outer.contains(&iv), "tightening is monotone");
        }
        previous = Some(iv);
    }

    // Expressions with rational value are recognized and evaluated
    // exactly; irrational ones report `None` and fall back to intervals.
    let exact = BoundExpr::int(8).root(3).exact_eval(&Assignment::new())?;
    assert_eq!(exact, Some(ExactRat::from(2)));
    let irrational = BoundExpr::int(2).root(2).exact_eval(&Assignment::new())?;
    assert_eq!(irrational, None);
    println!();
    println!("8^(1/3) is exactly {}", exact.unwrap());
    println!("2^(1/2) has no rational value — intervals take over");

    // `decide_ge_detailed` reports the precision at which a comparison
    // separated; 0 means it never needed intervals at all.
    println!();
    let nine_fourths = BoundExpr::rational(ExactRat::from((9, 4)));
    let d = decide_ge_detailed(
        &nine_fourths,
        &BoundExpr::rational(ExactRat::from((3, 2))).powi(2),
        &Assignment::new(),
        DEFAULT_PRECISION_CAP,
    )?;
    assert_eq!((d.verdict, d.precision_used), (Verdict::True, 0));
    println!("9/4 ≥ (3/2)²: settled exactly (precision 0 = no intervals)");

    let d = decide_ge_detailed(
        &BoundExpr::int(54),
        &expr.clone().powi(3), // (3n²/(10 ln n))³ at n = 3
        &asn,
        DEFAULT_PRECISION_CAP,
    )?;
    assert_eq!(d.verdict, Verdict::True);
    println!(
        "54 ≥ (3n²/(10 ln n))³ at n = 3: certified with {} bits",
        d.precision_used
    );

    // Verdicts are three-valued on purpose. `ln(e) ≥ 1` is *true* but not
    // decidable by finite-precision intervals (the two sides are equal and
    // one is transcendental-by-construction), so the decision loop runs to
    // its cap and says so instead of guessing.
    println!();
    let tight = decide_ge_detailed(
        &BoundExpr::E.ln(),
        &BoundExpr::int(1),
        &Assignment::new(),
        1024,
    )?;
    match tight.verdict {
        Verdict::Undecided { precision_reached } => {
            println!("ln(e) ≥ 1: undecided at the {precision_reached}-bit cap (the sides touch)");
        }
        other => panic!("expected an honest Undecided, got {other:?}"),
    }

    // Floors of irrational quantities are certified too: `floor_expr`
    // refines until the enclosure pins a single integer. With a cap too
    // small to do that, it returns a hard error rather than a guess —
    // the same honest exit the command-line tool maps to its own code.
    println!();
    let f = floor_expr(
        &(BoundExpr::int(226) / BoundExpr::int(226).ln()),
        &Assignment::new(),
        DEFAULT_PRECISION_CAP,
    )?;
    assert_eq!(f, 41);
    println!("⌊226/ln 226⌋ = {f}, certified");

    match floor_expr(&BoundExpr::E.exp(), &Assignment::new(), 4) {
        Err(EvalError::PrecisionCap { bits }) => {
            println!("⌊e^e⌋ at a 4-bit cap: refuses with a precision-cap error ({bits} bits)");
        }
        other => panic!("expected a precision-cap refusal, got {other:?}"),
    }

    // The same machinery powers δ: nth_root_interval encloses deg^{1/n}
    // with outward rounding, and perfect powers collapse to points.
    println!();
    let delta = nth_root_interval(&ExactInt::from(64), 3, 128)?;
    assert!(delta.is_point());
    println!("64^(1/3) is the point interval {:?}", delta.to_f64_bounds());
    let delta = nth_root_interval(&ExactInt::from(54), 3, 256)?;
    let (lo, hi) = delta.to_decimal_strings(40);
    println!("54^(1/3) in [{lo},");
    println!("            {hi}]");

    Ok(())
}
