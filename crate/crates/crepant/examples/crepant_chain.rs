//! The chain of curves over a class T smoothing: the symbolic intersection
//! form, flops, the canonical class, and the dimension bookkeeping that ties
//! the whole picture together.
//!
//! Run with `cargo run --example crepant_chain`.

use crepant::singularity::ClassTData;
use crepant::smoothing::{
    build_chain, chain_chi, dimension_conservation, flop, orthogonality_closure, DivisorClass,
};
use crepant::Int;

fn main() -> crepant::Result<()> {
    // 1/(r^2 s)(1, ars - 1) with (r, a, s) = (2, 1, 2): two Wahl points joined
    // by a chain of s + 1 = 3 curves. The self-intersections of the end curves
    // stay as free parameters u and v.
    let t = ClassTData::new(Int::from(2), Int::from(1), Int::from(2))?;
    let chain = build_chain(&t);
    println!("{t} -> {}", t.quotient());
    for (k, q) in chain.points().iter().enumerate() {
        println!("  point {}: {}", k + 1, q);
    }
    println!("intersection form on C0..C{}:", chain.curve_count() - 1);
    for i in 0..chain.curve_count() {
        let row: Vec<String> = (0..chain.curve_count())
            .map(|j| format!("{:>6}", chain.form_entry(i, j).to_string()))
            .collect();
        println!("  [{}]", row.join(","));
    }

    // K = -(C0 + ... + Cs); the interior curves are K-trivial (the partial
    // resolution is crepant over the chain of points), while the end curves
    // pair with K through the free parameters.
    let k = chain.canonical_class();
    println!("\nK = {k}");
    for i in 1..chain.curve_count() - 1 {
        let c = DivisorClass::curve(i, chain.curve_count());
        assert!(chain.k_dot(&c).is_zero());
        println!("K . C{i} = 0");
    }
    let c0 = DivisorClass::curve(0, chain.curve_count());
    println!("K . C0 = {}", chain.k_dot(&c0));

    // Flopping an interior curve is an involution on divisor classes that
    // preserves the pairing; only the flopped coefficient moves.
    let d = DivisorClass::new(vec![Int::from(2), Int::from(0), Int::from(-1)]);
    let once = flop(&chain, 1, &d)?;
    let twice = flop(&chain, 1, &once)?;
    println!("\nflop at C1: {d} -> {once} -> {twice}");
    assert_eq!(d.coefficients(), twice.coefficients());
    let e = DivisorClass::prefix_sum(2, chain.curve_count());
    assert_eq!(
        chain.pairing(&d, &e),
        chain.pairing(&flop(&chain, 1, &d)?, &flop(&chain, 1, &e)?)
    );
    println!("flop preserves the intersection pairing");

    // Composing flops at every interior curve closes up: starting from the
    // adjacent pairs, the full set of ordered pairs becomes reachable.
    for s in [2usize, 3, 5, 8] {
        let c = orthogonality_closure(s)?;
        println!(
            "s = {s}: {} adjacent pairs close up to {} of {} ordered pairs",
            c.initial_pairs, c.closure_pairs, c.total_pairs
        );
    }

    // chi of the chain is 1 independent of length: vertices - edges.
    println!(
        "\nchain chi for (j, j') = (0, 5): {}",
        chain_chi(&Int::from(0), &Int::from(5))?
    );

    // Dimension conservation: the algebra dimension, the versal rank, and the
    // block count of the matrix algebra all equal r^2 s.
    let report = dimension_conservation(&t)?;
    println!(
        "dim for {}: algebra {}, versal {}, matrix {}, blocks {}",
        report.class_t,
        report.kk_dimension,
        report.versal_rank,
        report.matrix_dimension,
        report.block_sum
    );
    Ok(())
}
