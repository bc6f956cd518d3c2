//! Weighted projective planes P(w1, w2, w3): section counts, Euler
//! characteristics, the singular locus, and the rank table of the vertex
//! decomposition when every singular point is class T.
//!
//! Run with `cargo run --example weighted_plane`.

use crepant::wpp::{
    chi_divisorial, hilbert, kks_rank_report, singular_locus, WeightedPlane,
};
use crepant::Int;

fn main() -> crepant::Result<()> {
    let p = WeightedPlane::new(Int::from(1), Int::from(1), Int::from(4))?;
    println!("{p}: weight sum {}", p.weight_sum());

    let h: Vec<String> = (0..=10)
        .map(|n| hilbert(&p, &Int::from(n)).to_string())
        .collect();
    println!("h^0(O(n)) for n = 0..10: {}", h.join(" "));
    println!(
        "chi(O) = {}, chi(K) = {}",
        chi_divisorial(&p, &Int::from(0)),
        chi_divisorial(&p, &p.canonical_degree())
    );

    // Singular points sit at coordinate vertices whose weight exceeds 1.
    for (vertex, q) in singular_locus(&p) {
        println!("vertex {vertex}: {q}");
    }

    // When all singular points are class T the structure sheaf decomposes
    // against a fixed bundle; the report lists one block size per vertex and
    // the total matches h^0 bookkeeping.
    let report = kks_rank_report(&p)?;
    for v in &report.vertices {
        match (&v.singularity, &v.class_t) {
            (Some(q), Some(t)) => println!(
                "vertex {} (weight {}): {} = {}, {} rank-{} bundle(s) x{}, rank F = {}",
                v.vertex, v.weight, q, t, v.block_count, v.block_rank, v.multiplicity, v.rank_f
            ),
            _ => println!("vertex {} (weight {}): smooth point", v.vertex, v.weight),
        }
    }

    // A plane built from a Markov triple squared: P(1, 4, 25) from (1, 2, 5).
    // All vertices are Wahl (class T with s = 1) and the block ranks recover
    // the Markov numbers themselves.
    let p = WeightedPlane::new(Int::from(1), Int::from(4), Int::from(25))?;
    let report = kks_rank_report(&p)?;
    println!(
        "\n{p}: block ranks {:?}",
        report.ranks().iter().map(|x| x.to_string()).collect::<Vec<_>>()
    );

    // A plane with a non class T point: the rank table does not exist.
    let p = WeightedPlane::new(Int::from(1), Int::from(1), Int::from(5))?;
    match kks_rank_report(&p) {
        Err(e) => println!("{p}: {e}"),
        Ok(_) => println!("{p}: unexpected rank table"),
    }
    Ok(())
}
