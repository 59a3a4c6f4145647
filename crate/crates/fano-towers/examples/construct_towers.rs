//! Building tower descriptions: the named families, hand-rolled towers,
//! and what validation reports when a description is not Fano.
//!
//! Run with `cargo run --example construct_towers`.

use fano_towers::{BuildMode, Level, TowerSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The empty tower is projective space itself.
    let p4 = TowerSpec::projective_space(4)?;
    println!("{p4}  (dimension {})", p4.dim());

    // The classical one-level family: P(O ⊕ O((n−1)H)) over P^{n−1}.
    // One level, maximal twist, Picard rank two.
    let classical = TowerSpec::batyrev(5)?;
    println!("{classical}  (dimension {})", classical.dim());

    // The high-degree family picks the fiber dimension r = ⌊n/ln n⌋ and
    // again uses the maximal admissible twist.
    let hd = TowerSpec::high_degree(10)?;
    println!("{hd}  (dimension {})", hd.dim());

    // The high-index variant wants r = ⌊n/ln n⌋ too, but its twist
    // c = n − 2r only exists when n ≥ 2r. At n = 5 that fails; Strict mode
    // refuses, Clamp mode shrinks r to ⌊n/2⌋ and records that it did.
    match TowerSpec::high_index(5, BuildMode::Strict) {
        Err(e) => println!("strict high-index at n = 5 refuses: {e}"),
        Ok(_) => unreachable!("n = 5 is the one dimension the strict mode rejects"),
    }
    let (clamped, was_clamped) = TowerSpec::high_index_with_info(5, BuildMode::Clamp)?;
    println!("{clamped}  (clamped: {was_clamped})");

    // The multi-level family stacks k − 1 projectivizations to reach
    // Picard rank k while keeping the index above ⌊n/(2^{k−2} ln n)⌋.
    let multi = TowerSpec::high_picard(8, 3, BuildMode::Strict)?;
    println!("{multi}  (dimension {})", multi.dim());

    // Descriptions serialize to a small JSON exchange format — the same
    // one the command-line tool reads via --spec.
    println!("as JSON: {}", serde_json::to_string(&multi)?);

    // Towers can also be written out by hand. Validation walks the levels
    // carrying the index of each stage and explains any violation of the
    // Fano twist condition c ≤ ι − 1 instead of failing opaquely.
    let bad = TowerSpec::new(2, vec![Level { r: 2, c: 0 }, Level { r: 1, c: 4 }]);
    let report = bad.validate();
    println!("hand-rolled {bad} is admissible: {}", report.valid);
    for check in &report.levels {
        if let Some(reason) = &check.reason {
            println!("  level {}: {reason}", check.level);
        }
    }

    Ok(())
}
