//! Numerical Grothendieck group of the projective plane.
//!
//! A class is recorded by Chern data `(rank, degree, ch2)` with `ch2` a
//! half-integer. The Euler pairing is Riemann-Roch on the plane; left and
//! right mutations act at the class level by `chi`-weighted combinations.
//! Collections carry numerical exceptionality / semi-orthogonality checks,
//! a Markov-equation check on rank triples, and the helix operations
//! (cyclic twist by the canonical class, dualization).
//!
//! Mutation here is purely numerical: sheaf-level validity is only
//! guaranteed along orbits of the initial triple `(O(-2), O(-1), O)`, and
//! a vanishing `chi` is a necessary, not sufficient, shadow of RHom = 0.

use crate::{rat_str, Error, Int, Rat, Result};
use num::{One, Signed, Zero};
use std::fmt;

/// Chern character `(rank, degree, ch2)` of a class on the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernP2 {
    rank: Int,
    degree: Int,
    ch2: Rat,
}

impl ChernP2 {
    /// `ch2` must be a half-integer.
    pub fn new(rank: Int, degree: Int, ch2: Rat) -> Result<Self> {
        if !(&ch2 * Rat::from_integer(Int::from(2))).is_integer() {
            return Err(Error::InvalidInput(format!(
                "ch2 = {} is not a half-integer",
                rat_str(&ch2)
            )));
        }
        Ok(ChernP2 { rank, degree, ch2 })
    }

    /// The class of `O(n)`: `(1, n, n^2/2)`.
    pub fn line_bundle(n: &Int) -> ChernP2 {
        ChernP2 {
            rank: Int::one(),
            degree: n.clone(),
            ch2: Rat::new(n * n, Int::from(2)),
        }
    }

    pub fn trivial() -> ChernP2 {
        ChernP2::line_bundle(&Int::zero())
    }

    pub fn rank(&self) -> &Int {
        &self.rank
    }

    pub fn degree(&self) -> &Int {
        &self.degree
    }

    pub fn ch2(&self) -> &Rat {
        &self.ch2
    }

    /// Chern-character product (class of a tensor product).
    pub fn mul(&self, other: &ChernP2) -> ChernP2 {
        ChernP2 {
            rank: &self.rank * &other.rank,
            degree: &self.rank * &other.degree + &other.rank * &self.degree,
            ch2: Rat::from_integer(self.rank.clone()) * &other.ch2
                + Rat::from_integer(other.rank.clone()) * &self.ch2
                + Rat::from_integer(&self.degree * &other.degree),
        }
    }

    /// The dual class `(r, -d, ch2)`.
    pub fn dual(&self) -> ChernP2 {
        ChernP2 {
            rank: self.rank.clone(),
            degree: -&self.degree,
            ch2: self.ch2.clone(),
        }
    }

    /// `c * b - a`, the combination appearing in mutations.
    fn combination(c: &Int, b: &ChernP2, a: &ChernP2) -> ChernP2 {
        let cr = Rat::from_integer(c.clone());
        ChernP2 {
            rank: c * &b.rank - &a.rank,
            degree: c * &b.degree - &a.degree,
            ch2: cr * &b.ch2 - &a.ch2,
        }
    }
}

impl fmt::Display for ChernP2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, ", self.rank, self.degree)?;
        if self.ch2.is_integer() {
            write!(f, "{})", self.ch2.numer())
        } else {
            write!(f, "{}/{})", self.ch2.numer(), self.ch2.denom())
        }
    }
}

/// Riemann-Roch pairing
/// `chi(x,y) = r_x r_y + (3/2)(r_x d_y - r_y d_x) + (r_x s_y + r_y s_x - d_x d_y)`.
///
/// Integral whenever both classes are classes of genuine sheaves.
pub fn euler_pairing(x: &ChernP2, y: &ChernP2) -> Rat {
    let rx = Rat::from_integer(x.rank.clone());
    let ry = Rat::from_integer(y.rank.clone());
    let dx = Rat::from_integer(x.degree.clone());
    let dy = Rat::from_integer(y.degree.clone());
    let three_half = Rat::new(Int::from(3), Int::from(2));
    &rx * &ry + three_half * (&rx * &dy - &ry * &dx) + (&rx * &y.ch2 + &ry * &x.ch2 - &dx * &dy)
}

/// Which of the two mutations of an adjacent pair to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Of a pair `(B, C)`: the new class is `chi(B,C) ch(B) - ch(C)` and the
    /// pair becomes `(C', B)`.
    Left,
    /// Of a pair `(A, B)`: the new class is `chi(A,B) ch(B) - ch(A)` and the
    /// pair becomes `(B, A')`.
    Right,
}

/// The mutated class of the ordered pair `(x, y)`. The pairing value must be
/// an integer for the combination to stay in the lattice; a fractional
/// `chi(x,y)` is rejected rather than rounded.
pub fn mutate_pair(x: &ChernP2, y: &ChernP2, direction: Direction) -> Result<ChernP2> {
    let chi = euler_pairing(x, y);
    if !chi.is_integer() {
        return Err(Error::NonIntegralMutation(format!(
            "chi({x}, {y}) = {} is not an integer",
            rat_str(&chi)
        )));
    }
    let c = chi.to_integer();
    Ok(match direction {
        Direction::Left => ChernP2::combination(&c, x, y),
        Direction::Right => ChernP2::combination(&c, y, x),
    })
}

/// Ordered list of classes; numerical soundness is judged by
/// [`collection_checks`], not enforced at construction (so that failing
/// inputs can be diagnosed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalCollection {
    members: Vec<ChernP2>,
}

impl NumericalCollection {
    pub fn new(members: Vec<ChernP2>) -> Self {
        NumericalCollection { members }
    }

    /// The seed triple `(O(-2), O(-1), O)`.
    pub fn initial_triple() -> Self {
        NumericalCollection {
            members: vec![
                ChernP2::line_bundle(&Int::from(-2)),
                ChernP2::line_bundle(&Int::from(-1)),
                ChernP2::line_bundle(&Int::zero()),
            ],
        }
    }

    pub fn members(&self) -> &[ChernP2] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn ranks(&self) -> Vec<Int> {
        self.members.iter().map(|m| m.rank.clone()).collect()
    }
}

impl fmt::Display for NumericalCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, m) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "]")
    }
}

/// Outcome of the numerical checks on a collection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollectionReport {
    /// `chi(e_i, e_i) = 1`, per member.
    pub exceptional: Vec<bool>,
    /// Nonzero lower-triangle pairings `(i, j, chi(e_i, e_j))`, `i > j`, 1-based.
    pub lower_gram_failures: Vec<(usize, usize, Rat)>,
    /// Strict upper-triangle pairings `chi(e_i, e_j)`, `i < j`, in row-major order.
    pub gram_upper: Vec<Rat>,
    pub ranks: Vec<Int>,
    /// For length-3 collections: do `(|a|, |b|, |c|)` solve `a^2+b^2+c^2 = 3abc`?
    pub markov_ranks: Option<bool>,
}

impl CollectionReport {
    pub fn exceptionality_holds(&self) -> bool {
        self.exceptional.iter().all(|b| *b)
    }

    pub fn lower_gram_vanishes(&self) -> bool {
        self.lower_gram_failures.is_empty()
    }

    pub fn all_pass(&self) -> bool {
        self.exceptionality_holds() && self.lower_gram_vanishes() && self.markov_ranks.unwrap_or(true)
    }
}

/// Numerical exceptionality, lower-triangular vanishing, and (for triples)
/// the Markov rank equation on absolute ranks.
pub fn collection_checks(c: &NumericalCollection) -> CollectionReport {
    let members = c.members();
    let exceptional = members
        .iter()
        .map(|e| euler_pairing(e, e) == Rat::one())
        .collect();
    let mut lower_gram_failures = Vec::new();
    let mut gram_upper = Vec::new();
    for (i, ei) in members.iter().enumerate() {
        for (j, ej) in members.iter().enumerate().skip(i + 1) {
            gram_upper.push(euler_pairing(ei, ej));
            let lower = euler_pairing(ej, ei);
            if !lower.is_zero() {
                lower_gram_failures.push((j + 1, i + 1, lower));
            }
        }
    }
    let ranks = c.ranks();
    let markov_ranks = (members.len() == 3).then(|| {
        let (a, b, cc) = (ranks[0].abs(), ranks[1].abs(), ranks[2].abs());
        &a * &a + &b * &b + &cc * &cc == Int::from(3) * &a * &b * &cc
    });
    CollectionReport {
        exceptional,
        lower_gram_failures,
        gram_upper,
        ranks,
        markov_ranks,
    }
}

/// Replaces the adjacent pair at `position` (1-based: members `position` and
/// `position + 1`) by its mutation: left sends `(x, y)` to `(y', x)`, right
/// sends it to `(y, x')`.
pub fn mutate_collection(
    c: &NumericalCollection,
    position: usize,
    direction: Direction,
) -> Result<NumericalCollection> {
    if position == 0 || position >= c.len() {
        return Err(Error::InvalidInput(format!(
            "pair position must be in 1..={}, got {position}",
            c.len().saturating_sub(1)
        )));
    }
    let x = &c.members[position - 1];
    let y = &c.members[position];
    let new = mutate_pair(x, y, direction)?;
    let mut members = c.members.clone();
    match direction {
        Direction::Left => {
            members[position - 1] = new;
            members[position] = x.clone();
        }
        Direction::Right => {
            members[position - 1] = y.clone();
            members[position] = new;
        }
    }
    Ok(NumericalCollection { members })
}

/// `(A, B, C) -> (C(-3), A, B)`: tensors the last member by the canonical
/// class and moves it to the front. Length-3 collections only.
pub fn cyclic_twist(c: &NumericalCollection) -> Result<NumericalCollection> {
    if c.len() != 3 {
        return Err(Error::InvalidInput(format!(
            "cyclic twist needs a length-3 collection, got length {}",
            c.len()
        )));
    }
    let canonical = ChernP2::line_bundle(&Int::from(-3));
    let members = vec![
        c.members[2].mul(&canonical),
        c.members[0].clone(),
        c.members[1].clone(),
    ];
    Ok(NumericalCollection { members })
}

/// Duals in reverse order: `(..., X, Y) -> (Y*, X*, ...)`.
pub fn dualize(c: &NumericalCollection) -> NumericalCollection {
    NumericalCollection {
        members: c.members.iter().rev().map(ChernP2::dual).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(n: i64) -> ChernP2 {
        ChernP2::line_bundle(&Int::from(n))
    }

    fn class(r: i64, d: i64, ch2_num: i64, ch2_den: i64) -> ChernP2 {
        ChernP2::new(Int::from(r), Int::from(d), Rat::new(Int::from(ch2_num), Int::from(ch2_den)))
            .unwrap()
    }

    fn rat(n: i64) -> Rat {
        Rat::from_integer(Int::from(n))
    }

    /// #{(i,j,k) in Z^3_{>=0} : i + j + k = d}, by direct enumeration.
    fn monomial_count(d: i64) -> i64 {
        if d < 0 {
            return 0;
        }
        let mut n = 0;
        for i in 0..=d {
            for j in 0..=(d - i) {
                let _k = d - i - j;
                n += 1;
            }
        }
        n
    }

    #[test]
    fn half_integer_enforced() {
        assert!(ChernP2::new(Int::one(), Int::zero(), Rat::new(Int::one(), Int::from(3))).is_err());
        assert!(ChernP2::new(Int::one(), Int::zero(), Rat::new(Int::from(7), Int::from(2))).is_ok());
    }

    #[test]
    fn pairing_known_values() {
        assert_eq!(euler_pairing(&line(0), &line(0)), rat(1));
        assert_eq!(euler_pairing(&line(-1), &line(0)), rat(3));
        let omega1 = class(2, -1, -1, 2);
        assert_eq!(euler_pairing(&omega1, &omega1), rat(1));
        // a non-sheaf class with fractional pairing
        let ghost = class(1, 0, 1, 2);
        assert_eq!(euler_pairing(&ghost, &line(0)), Rat::new(Int::from(3), Int::from(2)));
    }

    #[test]
    fn pairing_matches_monomial_count() {
        for n in -20..=20i64 {
            for m in n..=20 {
                let chi = euler_pairing(&line(n), &line(m));
                assert!(chi.is_integer());
                assert_eq!(chi.to_integer(), Int::from(monomial_count(m - n)), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn ch_multiplication_ring_laws() {
        let sample = [
            line(0),
            line(3),
            line(-2),
            class(2, -1, -1, 2),
            class(2, -3, 3, 2),
            class(3, 5, 7, 2),
        ];
        for x in &sample {
            assert_eq!(x.mul(&ChernP2::trivial()), *x);
            for y in &sample {
                assert_eq!(x.mul(y), y.mul(x));
                for z in &sample {
                    assert_eq!(x.mul(y).mul(z), x.mul(&y.mul(z)));
                }
            }
        }
        for n in -6..=6i64 {
            for m in -6..=6 {
                assert_eq!(line(n).mul(&line(m)), line(n + m));
            }
        }
    }

    #[test]
    fn mutation_known_values() {
        // right mutation of O(-2) through O(-1) gives the twisted cotangent class
        let got = mutate_pair(&line(-2), &line(-1), Direction::Right).unwrap();
        assert_eq!(got, class(2, -1, -1, 2));
        // left mutation of O through O(-1) gives the cotangent class
        let got = mutate_pair(&line(-1), &line(0), Direction::Left).unwrap();
        assert_eq!(got, class(2, -3, 3, 2));
    }

    #[test]
    fn mutation_rejects_fractional_chi() {
        let ghost = class(1, 0, 1, 2);
        assert!(matches!(
            mutate_pair(&ghost, &line(0), Direction::Left),
            Err(Error::NonIntegralMutation(_))
        ));
    }

    #[test]
    fn left_then_right_restores_pair() {
        let c = NumericalCollection::initial_triple();
        for position in 1..=2 {
            let mutated = mutate_collection(&c, position, Direction::Left).unwrap();
            let back = mutate_collection(&mutated, position, Direction::Right).unwrap();
            assert_eq!(back, c);
            let mutated = mutate_collection(&c, position, Direction::Right).unwrap();
            let back = mutate_collection(&mutated, position, Direction::Left).unwrap();
            assert_eq!(back, c);
        }
        assert!(mutate_collection(&c, 0, Direction::Left).is_err());
        assert!(mutate_collection(&c, 3, Direction::Left).is_err());
    }

    #[test]
    fn initial_triple_checks() {
        let report = collection_checks(&NumericalCollection::initial_triple());
        assert!(report.all_pass());
        assert_eq!(report.gram_upper, vec![rat(3), rat(6), rat(3)]);
        assert_eq!(report.ranks, vec![Int::one(), Int::one(), Int::one()]);
        assert_eq!(report.markov_ranks, Some(true));
    }

    #[test]
    fn duplicate_member_fails_lower_gram() {
        let c = NumericalCollection::new(vec![line(0), line(0)]);
        let report = collection_checks(&c);
        assert!(report.exceptionality_holds());
        assert!(!report.lower_gram_vanishes());
        assert_eq!(report.lower_gram_failures, vec![(2, 1, rat(1))]);
        assert_eq!(report.markov_ranks, None);
    }

    #[test]
    fn mutated_triple_has_markov_ranks() {
        let c = NumericalCollection::initial_triple();
        let m = mutate_collection(&c, 1, Direction::Right).unwrap();
        let report = collection_checks(&m);
        assert!(report.all_pass());
        assert_eq!(report.ranks, vec![Int::one(), Int::from(2), Int::one()]);
    }

    #[test]
    fn twist_and_dual_known_values() {
        let c = NumericalCollection::initial_triple();
        let twisted = cyclic_twist(&c).unwrap();
        assert_eq!(twisted.members(), &[line(-3), line(-2), line(-1)]);
        assert!(collection_checks(&twisted).all_pass());

        let dual = dualize(&c);
        assert_eq!(dual.members(), &[line(0), line(1), line(2)]);
        assert!(collection_checks(&dual).all_pass());
        assert_eq!(dualize(&dual), c);

        assert!(cyclic_twist(&NumericalCollection::new(vec![line(0)])).is_err());
    }

    #[test]
    fn fixed_mutation_word_stays_exceptional_and_tracks_ranks() {
        use crate::markov::{mutate as markov_mutate, MarkovTriple};
        let mut c = NumericalCollection::initial_triple();
        let word = [
            (1, Direction::Right),
            (2, Direction::Left),
            (1, Direction::Left),
            (2, Direction::Right),
            (2, Direction::Right),
            (1, Direction::Right),
            (2, Direction::Left),
            (1, Direction::Left),
        ];
        for &(position, direction) in &word {
            let before = c.ranks();
            let before_triple = MarkovTriple::new(
                before[0].abs(),
                before[1].abs(),
                before[2].abs(),
            )
            .unwrap();
            c = mutate_collection(&c, position, direction).unwrap();
            let report = collection_checks(&c);
            assert!(report.all_pass(), "word step failed: {c}");
            // the rank that was consumed tracks the Markov mutation of its slot:
            // left replaces the pair's second member, right the first
            let consumed_slot = match direction {
                Direction::Left => position,
                Direction::Right => position - 1,
            };
            let removed = before[consumed_slot].abs();
            let markov_pos = before_triple
                .entries()
                .iter()
                .position(|e| *e == removed)
                .unwrap()
                + 1;
            let expected = markov_mutate(&before_triple, markov_pos).unwrap();
            let after = c.ranks();
            let after_triple =
                MarkovTriple::new(after[0].abs(), after[1].abs(), after[2].abs()).unwrap();
            assert_eq!(after_triple, expected);
        }
    }
}
