//! Minus (Hirzebruch-Jung) continued fractions: expansion, evaluation,
//! continuants, rank sequences, and the reversal/inverse-denominator duality.
//!
//! Run with `cargo run --example continued_fractions`.

use crepant::cfrac::{continuant, hj_evaluate, hj_expand, rank_sequence};
use crepant::Int;

fn main() -> crepant::Result<()> {
    println!("expansions n/d = [c1, ..., cl] with ci >= 2:");
    for (n, d) in [(4i64, 1i64), (9, 7), (9, 2), (19, 7), (25, 9)] {
        let e = hj_expand(Int::from(n), Int::from(d))?;
        let terms: Vec<String> = e.terms().iter().map(|c| c.to_string()).collect();
        println!("  {}/{} = [{}]", n, d, terms.join(", "));
    }

    // Round trip: evaluating the expansion recovers the fraction.
    let e = hj_expand(Int::from(19), Int::from(7))?;
    println!("\n[{}] evaluates to {}", join(e.terms()), hj_evaluate(e.terms())?);

    // The continuant K(c1..cl) is the numerator; the rank sequence interpolates
    // from K() = 1 up to the full continuant, one prefix at a time.
    let ranks = rank_sequence(e.terms());
    println!(
        "continuant = {}, rank sequence = {:?}",
        continuant(e.terms()),
        ranks.values().iter().map(|x| x.to_string()).collect::<Vec<_>>()
    );

    // Duality: reversing the expansion of r/a gives the expansion of r/a'
    // where a * a' = 1 (mod r).
    let forward = hj_expand(Int::from(9), Int::from(2))?;
    let mut reversed = forward.terms().to_vec();
    reversed.reverse();
    let dual = hj_evaluate(&reversed)?;
    println!(
        "\n9/2 = [{}]; reversed [{}] = {} and 2 * 5 = 10 = 1 (mod 9)",
        join(forward.terms()),
        join(&reversed),
        dual
    );
    Ok(())
}

fn join(terms: &[Int]) -> String {
    terms.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}
