//! Numerical K-theory of the projective plane: Chern characters, the Euler
//! pairing, and mutations of the standard exceptional triple.
//!
//! Run with `cargo run --example plane_mutations`.

use crepant::ktheory::{
    collection_checks, cyclic_twist, dualize, euler_pairing, mutate_collection, ChernP2,
    Direction, NumericalCollection,
};
use crepant::Int;

fn main() -> crepant::Result<()> {
    // chi(O(n), O(m)) counts monomials of degree m - n in three variables.
    let o = ChernP2::trivial();
    let o1 = ChernP2::line_bundle(&Int::from(1));
    println!("chi(O, O(1)) = {}", euler_pairing(&o, &o1));
    println!("chi(O(1), O) = {}", euler_pairing(&o1, &o));

    // The standard triple (O(-2), O(-1), O) and its checks: each member is
    // exceptional, the Gram matrix vanishes below the diagonal, and the ranks
    // solve the Markov equation.
    let c = NumericalCollection::initial_triple();
    let report = collection_checks(&c);
    println!("\n{c}");
    println!(
        "exceptional: {:?}, lower gram zero: {}, markov ranks: {:?}",
        report.exceptional,
        report.lower_gram_vanishes(),
        report.markov_ranks
    );
    println!(
        "upper gram entries: {}",
        report
            .gram_upper
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );

    // A right mutation at the first pair produces the twisted cotangent
    // bundle Omega^1(1) in the middle slot; everything still passes.
    let c2 = mutate_collection(&c, 1, Direction::Right)?;
    println!("\nright mutation at pair 1: {c2}");
    assert!(collection_checks(&c2).all_pass());

    // Left then right (or right then left) at the same pair is the identity.
    let back = mutate_collection(&c2, 1, Direction::Left)?;
    assert_eq!(back.members(), c.members());
    println!("left mutation undoes it");

    // The cyclic twist shifts the last member down by the canonical degree;
    // dualizing reverses the collection.
    println!("\ntwist: {}", cyclic_twist(&c)?);
    println!("dual:  {}", dualize(&c));

    // A longer random-looking word, tracking ranks along the way. The
    // absolute ranks of every collection in the orbit solve a^2 + b^2 + c^2
    // = 3abc.
    let word = [
        (1, Direction::Right),
        (2, Direction::Right),
        (1, Direction::Left),
        (2, Direction::Left),
    ];
    let mut current = cyclic_twist(&c)?;
    for (position, direction) in word {
        current = mutate_collection(&current, position, direction)?;
        let report = collection_checks(&current);
        assert!(report.all_pass());
        println!(
            "after {:?} at {}: ranks {:?}",
            direction,
            position,
            current.ranks().iter().map(|x| x.to_string()).collect::<Vec<_>>()
        );
    }
    Ok(())
}
