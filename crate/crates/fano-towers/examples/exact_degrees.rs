//! Exact anticanonical degrees: closed-form cross-checks, full invariant
//! readouts, and degrees far beyond floating-point range.
//!
//! Run with `cargo run --example exact_degrees`.

use fano_towers::{BuildMode, ExactInt, TowerSpec};
use rug::ops::Pow;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Projective space first: deg P^n = (n+1)^n, the textbook warm-up.
    for n in [1u32, 2, 3, 4] {
        let deg = TowerSpec::projective_space(n)?.degree()?;
        println!("deg P^{n} = {deg}");
        assert_eq!(deg, ExactInt::from(n + 1).pow(n));
    }

    // The classical one-level family has the closed form
    // ((2n−1)^n − 1)/(n − 1); every degree the recursion produces must
    // match it exactly.
    println!();
    for n in [2u32, 3, 4, 5, 20] {
        let deg = TowerSpec::batyrev(n)?.degree()?;
        let closed = (ExactInt::from(2 * n - 1).pow(n) - 1u32) / ExactInt::from(n - 1);
        assert_eq!(deg, closed, "closed form at n = {n}");
        println!("classical family, n = {n:>2}: degree = {deg}");
    }

    // A full invariant readout. `invariants` returns everything exact:
    // dimension, Picard rank, index, the anticanonical degree, and the
    // degree of the index-one generator H with −K = index·H.
    println!();
    let spec = TowerSpec::high_picard(8, 3, BuildMode::Strict)?;
    let inv = spec.invariants()?;
    println!("{spec}:");
    println!("  dimension   {}", inv.dim);
    println!("  Picard rank {}", inv.picard);
    println!("  index       {}", inv.index);
    println!("  degree      {}", inv.degree);
    println!("  gen. degree {}", inv.gen_degree);
    // −K = index · H forces degree = gen_degree · index^dim on the nose.
    assert_eq!(
        inv.degree,
        inv.gen_degree.clone() * ExactInt::from(inv.index).pow(inv.dim)
    );

    // δ = degree^{1/n} normalizes growth across dimensions. Roots are
    // irrational in general, so δ comes back as a certified enclosure —
    // here a very tight one, printed with its binary working precision.
    let delta = inv.delta(128)?;
    let (lo, hi) = delta.to_decimal_strings(25);
    println!("  delta in [{lo}, {hi}]");

    // Exactness does not stop at machine range. The one-level optimum at
    // n = 300 has a degree with more than seven hundred digits; the
    // recursion computes it exactly in well under a second.
    println!();
    let big = TowerSpec::high_degree(300)?.degree()?;
    let digits = big.to_string().len();
    println!("high-degree family at n = 300: {digits} decimal digits");
    println!("  leading digits: {}…", &big.to_string()[..40]);

    // Every stage of a tower is available, not just the top: `profile`
    // reports the invariants of each intermediate variety.
    println!();
    let spec = TowerSpec::high_picard(16, 4, BuildMode::Strict)?;
    println!("stages of {spec}:");
    for st in spec.profile()? {
        println!(
            "  stage {}: dim {:>2}, rank {}, index {:>2}, degree {}",
            st.stage, st.dim, st.picard, st.index, st.degree
        );
    }

    Ok(())
}
