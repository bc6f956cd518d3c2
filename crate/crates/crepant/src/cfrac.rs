//! Hirzebruch-Jung continued fractions and continuants.
//!
//! A rational `r/q` with `0 < q < r` has a unique expansion
//!
//! ```text
//! r/q = d_1 - 1/(d_2 - 1/(... - 1/d_m)),    all d_i >= 2,
//! ```
//!
//! written `[d_1, ..., d_m]`. The terms are the negated self-intersections
//! of the exceptional chain resolving the quotient singularity `1/r(1, q)`.
//! The numerators of the leading truncations form the rank sequence
//! `r_0 = 1, r_1 = d_1, r_{i+1} = d_{i+1} r_i - r_{i-1}`; each `r_i` is the
//! continuant (tridiagonal determinant) of the first `i` terms.

use crate::{Error, Int, Rat, Result};
use num::{Integer, One, Signed, Zero};

/// An expansion `numerator/denominator = [d_1, ..., d_m]` with all terms >= 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HJExpansion {
    numerator: Int,
    denominator: Int,
    terms: Vec<Int>,
}

impl HJExpansion {
    pub fn numerator(&self) -> &Int {
        &self.numerator
    }

    pub fn denominator(&self) -> &Int {
        &self.denominator
    }

    pub fn terms(&self) -> &[Int] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The expanded rational, exactly.
    pub fn value(&self) -> Rat {
        Rat::new(self.numerator.clone(), self.denominator.clone())
    }
}

/// The leading-continuant sequence `r_0 = 1, ..., r_m` of an expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankSequence {
    values: Vec<Int>,
}

impl RankSequence {
    pub fn values(&self) -> &[Int] {
        &self.values
    }

    /// `r_m`, the numerator of the source expansion.
    pub fn last(&self) -> &Int {
        self.values.last().expect("rank sequence is never empty")
    }
}

/// Expands `numerator/denominator` as a Hirzebruch-Jung continued fraction.
///
/// Uses the ceiling-division recurrence `d = ceil(num/den)`, then recurses on
/// `den / (d*den - num)`; for `0 < den < num` every term comes out >= 2.
pub fn hj_expand(numerator: Int, denominator: Int) -> Result<HJExpansion> {
    if numerator < Int::from(2) {
        return Err(Error::InvalidInput(format!(
            "numerator must be >= 2, got {numerator}"
        )));
    }
    if denominator <= Int::zero() || denominator >= numerator {
        return Err(Error::InvalidInput(format!(
            "denominator must satisfy 0 < {denominator} < {numerator}"
        )));
    }
    if !numerator.gcd(&denominator).is_one() {
        return Err(Error::InvalidInput(format!(
            "{numerator}/{denominator} is not in lowest terms"
        )));
    }
    let mut terms = Vec::new();
    let mut num = numerator.clone();
    let mut den = denominator.clone();
    while !den.is_zero() {
        let d = num.div_ceil(&den);
        let next = &d * &den - &num;
        terms.push(d);
        num = den;
        den = next;
    }
    Ok(HJExpansion {
        numerator,
        denominator,
        terms,
    })
}

/// Evaluates `d_1 - 1/(d_2 - 1/(... - 1/d_m))` exactly.
///
/// Terms >= 1 are accepted so the function can serve as an independent
/// oracle; an intermediate zero denominator is reported as
/// `DegenerateExpansion`.
pub fn hj_evaluate(terms: &[Int]) -> Result<Rat> {
    if terms.is_empty() {
        return Err(Error::InvalidInput(
            "cannot evaluate an empty term list".into(),
        ));
    }
    if let Some(bad) = terms.iter().find(|d| !d.is_positive()) {
        return Err(Error::InvalidInput(format!("term {bad} is < 1")));
    }
    let mut acc = Rat::from(terms[terms.len() - 1].clone());
    for d in terms[..terms.len() - 1].iter().rev() {
        if acc.is_zero() {
            return Err(Error::DegenerateExpansion(format!(
                "zero denominator while evaluating {terms:?}"
            )));
        }
        acc = Rat::from(d.clone()) - acc.recip();
    }
    Ok(acc)
}

/// Determinant of the tridiagonal matrix with `terms` on the diagonal and
/// ones off it: `K() = 1`, `K(d_1) = d_1`, `K_i = d_i K_{i-1} - K_{i-2}`.
///
/// Satisfies `hj_evaluate(d_1..d_m) = continuant(d_1..d_m) / continuant(d_2..d_m)`.
pub fn continuant(terms: &[Int]) -> Int {
    let mut prev = Int::zero(); // K of the empty list's predecessor
    let mut cur = Int::one(); // K() = 1
    for d in terms {
        let next = d * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The sequence `r_i = continuant(d_1..d_i)` for `i = 0..=m`.
///
/// Strictly increasing when all terms are >= 2; `r_m` is the numerator of
/// the expansion.
pub fn rank_sequence(terms: &[Int]) -> RankSequence {
    let mut values = Vec::with_capacity(terms.len() + 1);
    values.push(Int::one());
    let mut prev = Int::zero();
    for d in terms {
        let cur = values.last().expect("nonempty").clone();
        let next = d * &cur - &prev;
        prev = cur;
        values.push(next);
    }
    RankSequence { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mod_inverse;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn expand_known_values() {
        assert_eq!(
            hj_expand(Int::from(4), Int::from(1)).unwrap().terms(),
            ints(&[4])
        );
        assert_eq!(
            hj_expand(Int::from(9), Int::from(7)).unwrap().terms(),
            ints(&[2, 2, 2, 3])
        );
        assert_eq!(
            hj_expand(Int::from(9), Int::from(2)).unwrap().terms(),
            ints(&[5, 2])
        );
        assert_eq!(
            hj_expand(Int::from(4), Int::from(3)).unwrap().terms(),
            ints(&[2, 2, 2])
        );
    }

    #[test]
    fn expand_rejects_bad_input() {
        assert!(matches!(
            hj_expand(Int::from(6), Int::from(4)),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            hj_expand(Int::from(4), Int::from(4)),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            hj_expand(Int::from(4), Int::from(0)),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            hj_expand(Int::from(1), Int::from(1)),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn evaluate_known_values() {
        assert_eq!(
            hj_evaluate(&ints(&[4])).unwrap(),
            Rat::new(Int::from(4), Int::from(1))
        );
        assert_eq!(
            hj_evaluate(&ints(&[5, 2])).unwrap(),
            Rat::new(Int::from(9), Int::from(2))
        );
        assert_eq!(
            hj_evaluate(&ints(&[2, 2, 2])).unwrap(),
            Rat::new(Int::from(4), Int::from(3))
        );
    }

    #[test]
    fn evaluate_degenerate_and_invalid() {
        // tail [1, 1] evaluates to 0, so the next step divides by zero
        assert!(matches!(
            hj_evaluate(&ints(&[2, 1, 1])),
            Err(Error::DegenerateExpansion(_))
        ));
        assert!(matches!(
            hj_evaluate(&ints(&[2, 0])),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(hj_evaluate(&[]), Err(Error::InvalidInput(_))));
        // terms >= 1 without a zero denominator are fine (oracle use)
        assert_eq!(
            hj_evaluate(&ints(&[1, 2])).unwrap(),
            Rat::new(Int::from(1), Int::from(2))
        );
    }

    #[test]
    fn continuant_known_values() {
        assert_eq!(continuant(&[]), Int::one());
        assert_eq!(continuant(&ints(&[4])), Int::from(4));
        assert_eq!(continuant(&ints(&[5, 2])), Int::from(9));
        assert_eq!(continuant(&ints(&[2])), Int::from(2));
        assert_eq!(continuant(&ints(&[2, 2, 2])), Int::from(4));
    }

    #[test]
    fn rank_sequence_known_values() {
        assert_eq!(rank_sequence(&ints(&[5, 2])).values(), ints(&[1, 5, 9]));
        assert_eq!(rank_sequence(&ints(&[4])).values(), ints(&[1, 4]));
        assert_eq!(
            rank_sequence(&ints(&[2, 2, 2])).values(),
            ints(&[1, 2, 3, 4])
        );
    }

    #[test]
    fn round_trip_up_to_1000() {
        for r in 2i64..=1000 {
            for q in 1..r {
                if Int::from(r).gcd(&Int::from(q)).is_one() {
                    let e = hj_expand(Int::from(r), Int::from(q)).unwrap();
                    assert!(e.terms().iter().all(|d| *d >= Int::from(2)));
                    assert_eq!(
                        hj_evaluate(e.terms()).unwrap(),
                        Rat::new(Int::from(r), Int::from(q)),
                        "round trip failed at {r}/{q}"
                    );
                }
            }
        }
    }

    #[test]
    fn continuant_quotient_identity() {
        for r in 2i64..=200 {
            for q in 1..r {
                if Int::from(r).gcd(&Int::from(q)).is_one() {
                    let e = hj_expand(Int::from(r), Int::from(q)).unwrap();
                    let num = continuant(e.terms());
                    let den = continuant(&e.terms()[1..]);
                    assert_eq!(Rat::new(num, den), e.value());
                }
            }
        }
    }

    #[test]
    fn rank_sequence_matches_continuants_and_increases() {
        for r in 2i64..=200 {
            for q in 1..r {
                if Int::from(r).gcd(&Int::from(q)).is_one() {
                    let e = hj_expand(Int::from(r), Int::from(q)).unwrap();
                    let ranks = rank_sequence(e.terms());
                    for (i, v) in ranks.values().iter().enumerate() {
                        assert_eq!(*v, continuant(&e.terms()[..i]));
                    }
                    assert!(ranks.values().windows(2).all(|w| w[0] < w[1]));
                    assert_eq!(ranks.last(), e.numerator());
                }
            }
        }
    }

    /// `r/a = [d_1..d_m]` implies `r/a' = [d_m..d_1]` where `a a' = 1 (mod r)`.
    #[test]
    fn inverse_denominator_reverses_terms() {
        for r in 2i64..=200 {
            for a in 1..r {
                let (rb, ab) = (Int::from(r), Int::from(a));
                if rb.gcd(&ab).is_one() {
                    let e = hj_expand(rb.clone(), ab).unwrap();
                    let a_inv = mod_inverse(&Int::from(a), &rb).unwrap();
                    let dual = hj_expand(rb, a_inv).unwrap();
                    let mut reversed = e.terms().to_vec();
                    reversed.reverse();
                    assert_eq!(dual.terms(), reversed, "duality failed at r={r}, a={a}");
                }
            }
        }
    }
}
