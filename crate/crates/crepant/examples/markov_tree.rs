//! The Markov equation a^2 + b^2 + c^2 = 3abc: mutations, the tree of
//! solutions, descent to (1, 1, 1), and the 3-block generalization.
//!
//! Run with `cargo run --example markov_tree`.

use crepant::markov::{
    block_mutate, enumerate_tree, markov_descent, mutate, solutions_scan, BlockStructure,
    Direction, MarkovTriple,
};
use crepant::Int;

fn main() -> crepant::Result<()> {
    // Mutating any position x -> 3yz - x gives another solution.
    let t = MarkovTriple::new(Int::from(1), Int::from(2), Int::from(5))?;
    for position in 1..=3 {
        println!("{t} mutated at {position}: {}", mutate(&t, position)?);
    }

    // The tree below a height bound, found by breadth-first mutation from
    // (1, 1, 1), matches a plain scan over all triples.
    let tree = enumerate_tree(&Int::from(500));
    println!("\ntriples with entries <= 500:");
    for t in &tree {
        println!("  {t}");
    }
    assert_eq!(tree, solutions_scan(500));

    // Descent: mutating the largest entry strictly decreases it, so every
    // solution walks back to (1, 1, 1).
    let big = tree.last().unwrap();
    let path = markov_descent(big)?;
    let steps: Vec<String> = path.iter().map(|t| t.to_string()).collect();
    println!("\ndescent from {big}: {}", steps.join(" -> "));

    // 3-block version: alpha a^2 + beta b^2 + gamma c^2 = lambda abc with
    // lambda^2 = K^2 alpha beta gamma. Blocks (1, 1, 2) with K^2 = 8 is the
    // quadric surface; a right mutation leaves the solution set.
    let b = BlockStructure::new(Int::from(1), Int::from(1), Int::from(2), Int::from(8))?;
    println!("\n{b}");
    let start = (Int::from(1), Int::from(1), Int::from(1));
    let right = block_mutate(&start, &b, Direction::Right)?;
    println!(
        "right mutation of (1, 1, 1): ranks ({}, {}, {}) under {}",
        right.ranks.0, right.ranks.1, right.ranks.2, right.structure
    );

    // For blocks (1, 1, 9) the mutation rule demands a non-integral rank, so
    // the step is rejected rather than silently rounded.
    let b = BlockStructure::new(Int::from(1), Int::from(1), Int::from(9), Int::from(1))?;
    let start = (Int::from(3), Int::from(3), Int::from(1));
    match block_mutate(&start, &b, Direction::Left) {
        Err(e) => println!("\nblocks (1, 1, 9): {e}"),
        Ok(m) => println!("\nunexpected success: {:?}", m.ranks),
    }
    Ok(())
}
