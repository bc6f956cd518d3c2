//! The finite-dimensional algebra attached to a cyclic quotient 1/r(1, a):
//! monomial relations from the dual expansion, the word basis, and the
//! dimension theorem dim = r.
//!
//! Run with `cargo run --example finite_dimensional_algebra`.

use crepant::kkalg::{
    hilbert_series, hj_dual_terms, kk_basis, kk_basis_bruteforce, kk_dimension,
    kk_dimension_for_singularity, kk_relations,
};
use crepant::Int;

fn main() -> crepant::Result<()> {
    let (r, a) = (Int::from(9), Int::from(2));

    // The relations are read off the expansion of r/(r - a), not r/a.
    let dual = hj_dual_terms(&r, &a)?;
    let dual_str: Vec<String> = dual.iter().map(|c| c.to_string()).collect();
    println!("1/9(1, 2): r/(r - a) = 9/7 = [{}]", dual_str.join(", "));

    let p = kk_relations(&dual)?;
    println!(
        "{} generators; forbidden words: {}",
        p.generator_count(),
        p.forbidden()
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );

    // Basis via the factor-avoidance automaton.
    let basis = kk_basis(&p);
    println!("dimension = {} (expected r = {})", basis.dimension(), r);
    println!(
        "basis: {}",
        basis
            .words()
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    let h: Vec<String> = basis.hilbert().iter().map(|x| x.to_string()).collect();
    println!("hilbert series by word length: {}", h.join(" "));

    // Independent check: brute-force enumeration agrees with the automaton.
    let brute = kk_basis_bruteforce(&p);
    assert_eq!(basis.words(), brute.words());
    assert_eq!(kk_dimension(&p), *brute.dimension());
    assert_eq!(hilbert_series(&p), brute.hilbert());
    println!("brute-force enumeration agrees");

    // The dimension theorem across a range of singularities.
    println!("\ndim for all 1/r(1, a) with r <= 12:");
    for r in 2i64..=12 {
        let mut dims = Vec::new();
        for a in 1..r {
            if num::integer::gcd(r, a) == 1 {
                dims.push(kk_dimension_for_singularity(&Int::from(r), &Int::from(a))?.to_string());
            }
        }
        println!("  r = {:2}: {}", r, dims.join(" "));
    }
    Ok(())
}
