//! Markov triples and generalized 3-block Markov equations.
//!
//! Positive solutions of `a^2 + b^2 + c^2 = 3abc` form a single trivalent
//! tree under the mutations `x -> 3yz - x`; they are the rank triples of
//! full exceptional collections of bundles on the projective plane. Del
//! Pezzo surfaces with 3-block collections generalize this to
//! `alpha a^2 + beta b^2 + gamma c^2 = lambda abc` with
//! `lambda = sqrt(K^2 alpha beta gamma)`, where mutations divide `lambda` by
//! a block size and swap two blocks.
//!
//! Everything is stored canonically sorted; [`solutions_scan`] is a fully
//! independent brute-force oracle for the tree enumeration.

use crate::{Error, Int, Result};
use num::{One, Zero};
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

/// A canonical (ascending) positive solution of `a^2 + b^2 + c^2 = 3abc`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkovTriple {
    entries: [Int; 3],
}

impl MarkovTriple {
    /// Sorts and validates; rejects non-solutions.
    pub fn new(a: Int, b: Int, c: Int) -> Result<Self> {
        if a <= Int::zero() || b <= Int::zero() || c <= Int::zero() {
            return Err(Error::InvalidInput(format!(
                "triple entries must be positive, got ({a}, {b}, {c})"
            )));
        }
        let mut entries = [a, b, c];
        entries.sort();
        let t = MarkovTriple { entries };
        if !t.satisfies_equation() {
            return Err(Error::InvalidInput(format!(
                "{t} does not satisfy a^2 + b^2 + c^2 = 3abc"
            )));
        }
        Ok(t)
    }

    pub fn one() -> Self {
        MarkovTriple {
            entries: [Int::one(), Int::one(), Int::one()],
        }
    }

    pub fn entries(&self) -> &[Int; 3] {
        &self.entries
    }

    pub fn max_entry(&self) -> &Int {
        &self.entries[2]
    }

    fn satisfies_equation(&self) -> bool {
        let [a, b, c] = &self.entries;
        a * a + b * b + c * c == Int::from(3) * a * b * c
    }
}

impl fmt::Display for MarkovTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.entries[0], self.entries[1], self.entries[2]
        )
    }
}

/// Mutates the entry at `position` (1-based within the canonical order):
/// `x -> 3yz - x` where `y, z` are the other two entries. The result is a
/// solution again; re-mutating the moved entry restores the original.
pub fn mutate(t: &MarkovTriple, position: usize) -> Result<MarkovTriple> {
    if !(1..=3).contains(&position) {
        return Err(Error::InvalidInput(format!(
            "mutation position must be 1, 2, or 3, got {position}"
        )));
    }
    let [a, b, c] = t.entries();
    let (x, y, z) = match position {
        1 => (a, b, c),
        2 => (b, a, c),
        _ => (c, a, b),
    };
    let new = Int::from(3) * y * z - x;
    MarkovTriple::new(new, y.clone(), z.clone())
}

/// All canonical triples with `max entry <= max_entry`, by breadth-first
/// mutation from `(1, 1, 1)` with deduplication. Complete because a descent
/// path from any solution stays below its starting maximum.
pub fn enumerate_tree(max_entry: &Int) -> Vec<MarkovTriple> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    let root = MarkovTriple::one();
    if root.max_entry() <= max_entry {
        seen.insert(root.clone());
        queue.push_back(root);
    }
    while let Some(t) = queue.pop_front() {
        for position in 1..=3 {
            let next = mutate(&t, position).expect("mutation of a solution is a solution");
            if next.max_entry() <= max_entry && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// Independent oracle: plain triple-loop scan of all `a <= b <= c <= limit`
/// testing the Markov equation directly in machine integers.
pub fn solutions_scan(limit: u64) -> Vec<MarkovTriple> {
    let mut out = Vec::new();
    for a in 1..=limit {
        for b in a..=limit {
            for c in b..=limit {
                if a * a + b * b + c * c == 3 * a * b * c {
                    out.push(
                        MarkovTriple::new(Int::from(a), Int::from(b), Int::from(c))
                            .expect("scan hit satisfies the equation"),
                    );
                }
            }
        }
    }
    out.sort();
    out
}

/// The descent path from `t` to `(1, 1, 1)`, always mutating the maximal
/// entry. Fails with `InvariantViolation` if a step does not strictly
/// decrease the maximum (which would falsify tree connectivity here).
pub fn markov_descent(t: &MarkovTriple) -> Result<Vec<MarkovTriple>> {
    let mut path = vec![t.clone()];
    let mut cur = t.clone();
    while cur != MarkovTriple::one() {
        let next = mutate(&cur, 3)?;
        if next.max_entry() >= cur.max_entry() {
            return Err(Error::InvariantViolation(format!(
                "descent stalled at {cur}: mutating the maximum gave {next}"
            )));
        }
        path.push(next.clone());
        cur = next;
    }
    Ok(path)
}

/// Block sizes `(alpha, beta, gamma)`, anticanonical degree `K^2`, and the
/// induced `lambda = sqrt(K^2 alpha beta gamma)` of a 3-block equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    block_sizes: (Int, Int, Int),
    k_squared: Int,
    lambda: Int,
}

impl BlockStructure {
    /// Rejects the structure when `K^2 alpha beta gamma` is not a perfect
    /// square (no integral `lambda`).
    pub fn new(alpha: Int, beta: Int, gamma: Int, k_squared: Int) -> Result<Self> {
        for (name, v) in [
            ("alpha", &alpha),
            ("beta", &beta),
            ("gamma", &gamma),
            ("K^2", &k_squared),
        ] {
            if *v <= Int::zero() {
                return Err(Error::InvalidInput(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        let product = &k_squared * &alpha * &beta * &gamma;
        let lambda = product.sqrt();
        if &lambda * &lambda != product {
            return Err(Error::InvalidInput(format!(
                "K^2*alpha*beta*gamma = {product} is not a perfect square"
            )));
        }
        Ok(BlockStructure {
            block_sizes: (alpha, beta, gamma),
            k_squared,
            lambda,
        })
    }

    pub fn block_sizes(&self) -> (&Int, &Int, &Int) {
        let (a, b, g) = &self.block_sizes;
        (a, b, g)
    }

    pub fn k_squared(&self) -> &Int {
        &self.k_squared
    }

    pub fn lambda(&self) -> &Int {
        &self.lambda
    }

    /// Does `(a, b, c)` solve `alpha a^2 + beta b^2 + gamma c^2 = lambda abc`?
    pub fn satisfied_by(&self, ranks: &(Int, Int, Int)) -> bool {
        let (alpha, beta, gamma) = &self.block_sizes;
        let (a, b, c) = ranks;
        alpha * a * a + beta * b * b + gamma * c * c == &self.lambda * a * b * c
    }
}

impl fmt::Display for BlockStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "blocks ({}, {}, {}), K^2 = {}, lambda = {}",
            self.block_sizes.0, self.block_sizes.1, self.block_sizes.2, self.k_squared, self.lambda
        )
    }
}

/// Which adjacent pair a 3-block mutation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `c' = (lambda/gamma) ab - c`; blocks beta and gamma swap.
    Left,
    /// `a' = (lambda/alpha) bc - a`; blocks alpha and beta swap.
    Right,
}

/// Result of a 3-block mutation: the new rank tuple in collection order and
/// the permuted block structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMutation {
    pub ranks: (Int, Int, Int),
    pub structure: BlockStructure,
}

/// Mutates `ranks` under the 3-block equation. The mutation coefficient
/// `lambda/gamma` (left) or `lambda/alpha` (right) must be an integer;
/// non-solutions are rejected up front.
pub fn block_mutate(
    ranks: &(Int, Int, Int),
    b: &BlockStructure,
    direction: Direction,
) -> Result<BlockMutation> {
    if !b.satisfied_by(ranks) {
        return Err(Error::InvalidInput(format!(
            "ranks ({}, {}, {}) do not satisfy the 3-block equation for {b}",
            ranks.0, ranks.1, ranks.2
        )));
    }
    let (alpha, beta, gamma) = &b.block_sizes;
    let (ra, rb, rc) = ranks;
    match direction {
        Direction::Left => {
            if !(b.lambda() % gamma).is_zero() {
                return Err(Error::NonIntegralMutation(format!(
                    "lambda/gamma = {}/{} is not an integer",
                    b.lambda(),
                    gamma
                )));
            }
            let coeff = b.lambda() / gamma;
            let new_c = coeff * ra * rb - rc;
            let structure = BlockStructure::new(
                alpha.clone(),
                gamma.clone(),
                beta.clone(),
                b.k_squared.clone(),
            )?;
            let out = BlockMutation {
                ranks: (ra.clone(), new_c, rb.clone()),
                structure,
            };
            debug_assert!(out.structure.satisfied_by(&out.ranks));
            Ok(out)
        }
        Direction::Right => {
            if !(b.lambda() % alpha).is_zero() {
                return Err(Error::NonIntegralMutation(format!(
                    "lambda/alpha = {}/{} is not an integer",
                    b.lambda(),
                    alpha
                )));
            }
            let coeff = b.lambda() / alpha;
            let new_a = coeff * rb * rc - ra;
            let structure = BlockStructure::new(
                beta.clone(),
                alpha.clone(),
                gamma.clone(),
                b.k_squared.clone(),
            )?;
            let out = BlockMutation {
                ranks: (rb.clone(), new_a, rc.clone()),
                structure,
            };
            debug_assert!(out.structure.satisfied_by(&out.ranks));
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(a: i64, b: i64, c: i64) -> MarkovTriple {
        MarkovTriple::new(Int::from(a), Int::from(b), Int::from(c)).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(MarkovTriple::new(Int::one(), Int::from(2), Int::from(5)).is_ok());
        assert!(matches!(
            MarkovTriple::new(Int::one(), Int::from(2), Int::from(4)),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            MarkovTriple::new(Int::zero(), Int::one(), Int::one()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn mutate_known_values() {
        assert_eq!(mutate(&triple(1, 2, 5), 3).unwrap(), triple(1, 1, 2));
        assert_eq!(mutate(&triple(1, 2, 5), 1).unwrap(), triple(2, 5, 29));
        for p in 1..=3 {
            assert_eq!(mutate(&triple(1, 1, 1), p).unwrap(), triple(1, 1, 2));
        }
        assert!(matches!(
            mutate(&triple(1, 1, 1), 0),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn mutation_is_involutive() {
        for t in enumerate_tree(&Int::from(1000)) {
            for p in 1..=3 {
                let [a, b, c] = t.entries().clone();
                let (moved, kept) = match p {
                    1 => (a.clone(), (b.clone(), c.clone())),
                    2 => (b.clone(), (a.clone(), c.clone())),
                    _ => (c.clone(), (a.clone(), b.clone())),
                };
                let m = mutate(&t, p).unwrap();
                // the freshly produced entry
                let new_entry = Int::from(3) * &kept.0 * &kept.1 - &moved;
                let back_pos = m
                    .entries()
                    .iter()
                    .position(|e| *e == new_entry)
                    .expect("mutated entry present")
                    + 1;
                assert_eq!(mutate(&m, back_pos).unwrap(), t);
            }
        }
    }

    #[test]
    fn tree_known_prefixes() {
        let t5 = enumerate_tree(&Int::from(5));
        assert_eq!(t5, vec![triple(1, 1, 1), triple(1, 1, 2), triple(1, 2, 5)]);
        let t30 = enumerate_tree(&Int::from(30));
        assert!(t30.contains(&triple(1, 5, 13)));
        assert!(t30.contains(&triple(2, 5, 29)));
        assert_eq!(t30.len(), 5);
        assert_eq!(enumerate_tree(&Int::one()), vec![triple(1, 1, 1)]);
    }

    #[test]
    fn tree_matches_bruteforce_scan() {
        let scanned = solutions_scan(120);
        let tree = enumerate_tree(&Int::from(120));
        assert_eq!(tree, scanned);
        let numbers: BTreeSet<&Int> = tree.iter().flat_map(|t| t.entries().iter()).collect();
        let expect: BTreeSet<Int> = [1i64, 2, 5, 13, 29, 34, 89]
            .into_iter()
            .map(Int::from)
            .collect();
        assert_eq!(numbers, expect.iter().collect::<BTreeSet<_>>());
    }

    #[test]
    fn descent_known_values() {
        assert_eq!(
            markov_descent(&triple(2, 5, 29)).unwrap(),
            vec![
                triple(2, 5, 29),
                triple(1, 2, 5),
                triple(1, 1, 2),
                triple(1, 1, 1)
            ]
        );
        assert_eq!(markov_descent(&triple(1, 1, 1)).unwrap(), vec![triple(1, 1, 1)]);
        assert_eq!(
            markov_descent(&triple(1, 5, 13)).unwrap(),
            vec![
                triple(1, 5, 13),
                triple(1, 2, 5),
                triple(1, 1, 2),
                triple(1, 1, 1)
            ]
        );
    }

    #[test]
    fn descent_terminates_for_enumerated_triples() {
        for t in enumerate_tree(&Int::from(100_000)) {
            let path = markov_descent(&t).unwrap();
            assert_eq!(*path.last().unwrap(), triple(1, 1, 1));
        }
    }

    #[test]
    fn block_structure_validation() {
        assert!(BlockStructure::new(Int::one(), Int::one(), Int::from(2), Int::from(8)).is_ok());
        // 3*1*1*2 = 6 is not a square
        assert!(matches!(
            BlockStructure::new(Int::one(), Int::one(), Int::from(2), Int::from(3)),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn block_mutate_specializes_to_markov_on_p2() {
        let b = BlockStructure::new(Int::one(), Int::one(), Int::one(), Int::from(9)).unwrap();
        assert_eq!(*b.lambda(), Int::from(3));
        for t in enumerate_tree(&Int::from(1000)) {
            let [x, y, z] = t.entries().clone();
            let ranks = (x, y, z);
            let right = block_mutate(&ranks, &b, Direction::Right).unwrap();
            let expected = mutate(&t, 1).unwrap();
            let mut got = [right.ranks.0, right.ranks.1, right.ranks.2];
            got.sort();
            assert_eq!(&got, expected.entries());
            let left = block_mutate(&ranks, &b, Direction::Left).unwrap();
            let expected = mutate(&t, 3).unwrap();
            let mut got = [left.ranks.0, left.ranks.1, left.ranks.2];
            got.sort();
            assert_eq!(&got, expected.entries());
        }
    }

    #[test]
    fn block_mutate_quadric_example() {
        let b = BlockStructure::new(Int::one(), Int::one(), Int::from(2), Int::from(8)).unwrap();
        assert_eq!(*b.lambda(), Int::from(4));
        let ranks = (Int::one(), Int::one(), Int::one());
        let right = block_mutate(&ranks, &b, Direction::Right).unwrap();
        assert_eq!(right.ranks, (Int::one(), Int::from(3), Int::one()));
        assert!(right.structure.satisfied_by(&right.ranks));
        let left = block_mutate(&ranks, &b, Direction::Left).unwrap();
        assert_eq!(left.ranks, (Int::one(), Int::one(), Int::one()));
        assert_eq!(
            left.structure.block_sizes(),
            (&Int::one(), &Int::from(2), &Int::one())
        );
    }

    #[test]
    fn block_mutate_preserves_equation_and_detects_nonintegral() {
        // blocks (1, 1, 9) with K^2 = 1: lambda = 3, ranks (3, 3, 1) solve
        // 9 + 9 + 9 = 27 = 3*3*3*1, but lambda/gamma = 1/3
        let b = BlockStructure::new(Int::one(), Int::one(), Int::from(9), Int::one()).unwrap();
        let ranks = (Int::from(3), Int::from(3), Int::one());
        assert!(b.satisfied_by(&ranks));
        assert!(matches!(
            block_mutate(&ranks, &b, Direction::Left),
            Err(Error::NonIntegralMutation(_))
        ));
        let right = block_mutate(&ranks, &b, Direction::Right).unwrap();
        assert!(right.structure.satisfied_by(&right.ranks));
        // non-solution rejected
        let bad = (Int::from(2), Int::from(3), Int::one());
        assert!(matches!(
            block_mutate(&bad, &b, Direction::Right),
            Err(Error::InvalidInput(_))
        ));
    }
}
