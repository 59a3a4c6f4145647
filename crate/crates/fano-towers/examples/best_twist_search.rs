//! Exhaustive exact searches over the twist grid: is the prescribed fiber
//! dimension `r = ⌊n/ln n⌋` actually close to optimal, and does the
//! maximal twist ever lose?
//!
//! Everything in this example is an exact big-integer comparison — the
//! search never rounds, so "optimal" means optimal.
//!
//! Run with `cargo run --example best_twist_search`.

use fano_towers::numerics::{Verdict, DEFAULT_PRECISION_CAP};
use fano_towers::report::{ratio_csv, RATIO_CSV_HEADER};
use fano_towers::search::{best_r, best_ra, ratio_table};
use fano_towers::TowerSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // `best_r(n)` maximizes the degree of P(O^r ⊕ O((n−r)H)) over P^{n−r}
    // across every fiber dimension 0 ≤ r ≤ n−1. At tiny n plain projective
    // space (r = 0) still wins:
    let (r2, d2) = best_r(2)?;
    let (r3, d3) = best_r(3)?;
    println!("n = 2: r* = {r2}, degree {d2}");
    println!("n = 3: r* = {r3}, degree {d3}");

    // From moderate n on, the optimum hugs the prescribed ⌊n/ln n⌋ choice.
    println!();
    println!("the optimum versus the prescribed fiber dimension:");
    for n in [10u32, 20, 50, 100] {
        let (r_star, d_star) = best_r(n)?;
        let prescribed = TowerSpec::high_degree(n)?;
        let d_prescribed = prescribed.degree()?;
        // the prescription can never beat the exhaustive optimum…
        assert!(d_star >= d_prescribed);
        // …and the two agree to within a handful of digits of degree
        let loss = d_star.to_string().len() - d_prescribed.to_string().len();
        println!(
            "  n = {n:>3}: r* = {r_star:>2}, prescribed r = {}, digits lost by prescription: {loss}",
            prescribed.levels[0].r
        );
    }

    // The two-parameter search frees the twist as well: 0 ≤ a ≤ n − r.
    // Observation (exact, per dimension): the maximal twist a = n − r is
    // always among the optima.
    println!();
    println!("two-parameter grid (rank and twist both free):");
    for n in [6u32, 9, 12, 15] {
        let (r_star, a_star, d_star) = best_ra(n)?;
        let (_, d_one) = best_r(n)?;
        assert!(d_star >= d_one, "a superset search cannot do worse");
        println!("  n = {n:>2}: (r*, a*) = ({r_star}, {a_star}), degree {d_star}");
        if r_star > 0 {
            assert_eq!(a_star, n - r_star, "maximal twist wins at n = {n}");
        }
    }

    // `ratio_table` packages the search for growth-rate study: δ = deg^{1/n},
    // the ratio δ·ln n/n², and a certificate that the ratio exceeds 3/10.
    println!();
    let rows = ratio_table(&[10, 25, 50], 128, DEFAULT_PRECISION_CAP)?;
    for row in &rows {
        let (lo, hi) = row.ratio.to_decimal_strings(8);
        assert_eq!(row.ratio_certified, Verdict::True);
        println!(
            "  n = {:>2}: r* = {:>2}, ratio δ·ln n/n² in [{lo}, {hi}] — certified ≥ 3/10",
            row.n, row.r_star
        );
    }

    // The same rows emit as CSV with a fixed column set, ready for a
    // spreadsheet or a plotting script.
    println!();
    println!("as CSV ({RATIO_CSV_HEADER}):");
    print!("{}", ratio_csv(&rows));

    Ok(())
}
