//! Weighted projective planes with pairwise coprime weights.
//!
//! Provides the graded Hilbert function of the coordinate ring (lattice-point
//! count, memoized per plane), Euler characteristics of the divisorial
//! sheaves `O(n)`, the cyclic-quotient singular locus at the coordinate
//! vertices, and the rank bookkeeping for planes whose weights factor as
//! `s_i a_i^2` through class-T vertex singularities.
//!
//! `chi_divisorial` uses `h^1(O(n)) = 0` on weighted projective spaces (a
//! standard vanishing, assumed not re-proved) together with Serre duality
//! against `omega = O(-w_1 - w_2 - w_3)`, so `chi(n) = h^0(n) + h^0(-sum - n)`.

use crate::singularity::{class_t_decompose, ClassTData, CyclicQuotient};
use crate::{Error, Int, Result};
use num::integer::Integer as IntegerOps;
use num::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

/// `P(w_1, w_2, w_3)` with positive, pairwise coprime weights.
pub struct WeightedPlane {
    weights: [Int; 3],
    hilbert_cache: Mutex<HashMap<Int, Int>>,
}

impl WeightedPlane {
    pub fn new(w1: Int, w2: Int, w3: Int) -> Result<Self> {
        let weights = [w1, w2, w3];
        for w in &weights {
            if *w <= Int::zero() {
                return Err(Error::InvalidInput(format!(
                    "weights must be positive, got {w}"
                )));
            }
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let g = weights[i].gcd(&weights[j]);
            if !g.is_one() {
                return Err(Error::InvalidInput(format!(
                    "weights {} and {} share the factor {g}; pairwise coprime weights required",
                    weights[i], weights[j]
                )));
            }
        }
        Ok(WeightedPlane {
            weights,
            hilbert_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn weights(&self) -> &[Int; 3] {
        &self.weights
    }

    pub fn weight_sum(&self) -> Int {
        self.weights.iter().sum()
    }

    /// Degree of the canonical class, `-(w_1 + w_2 + w_3)`.
    pub fn canonical_degree(&self) -> Int {
        -self.weight_sum()
    }
}

impl Clone for WeightedPlane {
    fn clone(&self) -> Self {
        WeightedPlane {
            weights: self.weights.clone(),
            hilbert_cache: Mutex::new(HashMap::new()),
        }
    }
}

impl PartialEq for WeightedPlane {
    fn eq(&self, other: &Self) -> bool {
        self.weights == other.weights
    }
}

impl Eq for WeightedPlane {}

impl fmt::Debug for WeightedPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightedPlane")
            .field("weights", &self.weights)
            .finish()
    }
}

impl fmt::Display for WeightedPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "P({},{},{})",
            self.weights[0], self.weights[1], self.weights[2]
        )
    }
}

/// `h^0(O(n)) = #{(i,j,k) >= 0 : i w_1 + j w_2 + k w_3 = n}`, by direct
/// lattice-point counting; negative degrees give 0. Memoized per plane.
pub fn hilbert(p: &WeightedPlane, n: &Int) -> Int {
    if n.is_negative() {
        return Int::zero();
    }
    if let Some(hit) = p.hilbert_cache.lock().unwrap().get(n) {
        return hit.clone();
    }
    let [w1, w2, w3] = p.weights();
    let mut count = Int::zero();
    let mut iw = Int::zero();
    while &iw <= n {
        let rem = n - &iw;
        let mut jw = Int::zero();
        while jw <= rem {
            if ((&rem - &jw) % w3).is_zero() {
                count += 1;
            }
            jw += w2;
        }
        iw += w1;
    }
    p.hilbert_cache
        .lock()
        .unwrap()
        .insert(n.clone(), count.clone());
    count
}

/// Independent oracle for [`hilbert`]: coefficients `0..=max_degree` of the
/// generating function `1 / ((1-t^{w_1})(1-t^{w_2})(1-t^{w_3}))`, computed
/// by the stride-`w` prefix recurrence — no lattice enumeration involved.
pub fn hilbert_series_oracle(p: &WeightedPlane, max_degree: usize) -> Vec<Int> {
    let mut coeffs = vec![Int::zero(); max_degree + 1];
    coeffs[0] = Int::one();
    for w in p.weights() {
        let w = w
            .to_usize()
            .expect("series oracle is for desk-scale weights");
        for k in w..=max_degree {
            let add = coeffs[k - w].clone();
            coeffs[k] += add;
        }
    }
    coeffs
}

/// `chi(O(n)) = h^0(n) + h^0(-w_1-w_2-w_3 - n)`; Serre-symmetric and equal
/// to 1 at `n = 0`.
pub fn chi_divisorial(p: &WeightedPlane, n: &Int) -> Int {
    hilbert(p, n) + hilbert(p, &(p.canonical_degree() - n))
}

/// The cyclic-quotient types at the coordinate vertices: each weight
/// `w_i > 1` contributes `(i, normalize(1/w_i(w_j, w_k)))`, 1-based.
pub fn singular_locus(p: &WeightedPlane) -> Vec<(usize, CyclicQuotient)> {
    let mut out = Vec::new();
    for i in 0..3 {
        if p.weights[i].is_one() {
            continue;
        }
        let j = (i + 1) % 3;
        let k = (i + 2) % 3;
        let q = CyclicQuotient::new(
            p.weights[i].clone(),
            p.weights[j].clone(),
            p.weights[k].clone(),
        )
        .and_then(|q| crate::singularity::normalize(&q))
        .expect("pairwise coprime weights give isolated vertex quotients");
        out.push((i + 1, q));
    }
    out
}

/// Per-vertex rank data for a plane of class-T type: the weight factors as
/// `s a^2` with `(a, ·, s)` the class-T data of the vertex singularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KksVertex {
    /// 1-based coordinate vertex index.
    pub vertex: usize,
    pub weight: Int,
    /// `None` at smooth vertices (weight 1).
    pub singularity: Option<CyclicQuotient>,
    /// The matched class-T data at the vertex, if singular.
    pub class_t: Option<ClassTData>,
    /// `a`: rank of each bundle in the deformed block (1 at smooth vertices).
    pub block_rank: Int,
    /// `s`: number of bundles in the block (1 at smooth vertices).
    pub block_count: Int,
    /// `a`: the direct-sum power with which each bundle appears.
    pub multiplicity: Int,
    /// `s a^2` = the weight: `s` bundles of rank `a`, multiplicity `a` each.
    pub rank_f: Int,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KksRankReport {
    pub vertices: Vec<KksVertex>,
}

impl KksRankReport {
    pub fn ranks(&self) -> Vec<Int> {
        self.vertices.iter().map(|v| v.rank_f.clone()).collect()
    }
}

/// Factors each weight as `s_i a_i^2` through the class-T structure of the
/// corresponding vertex singularity (smooth vertices get `s = a = 1`), and
/// checks rank conservation `s a^2 = s * a * a` per vertex. A singular
/// vertex admitting no class-T structure fails with `NotClassT`.
pub fn kks_rank_report(p: &WeightedPlane) -> Result<KksRankReport> {
    let locus: HashMap<usize, CyclicQuotient> = singular_locus(p).into_iter().collect();
    let mut vertices = Vec::new();
    for i in 1..=3 {
        let weight = p.weights[i - 1].clone();
        let vertex = match locus.get(&i) {
            None => KksVertex {
                vertex: i,
                weight: weight.clone(),
                singularity: None,
                class_t: None,
                block_rank: Int::one(),
                block_count: Int::one(),
                multiplicity: Int::one(),
                rank_f: weight,
            },
            Some(q) => {
                let matches = class_t_decompose(q)?;
                let m = matches.into_iter().next().ok_or_else(|| {
                    Error::NotClassT(format!(
                        "vertex {i} of {p} has type {q}, which is not of class T"
                    ))
                })?;
                let t = m.class_t;
                let (a, s) = (t.r().clone(), t.s().clone());
                let rank_f = &s * &a * &a;
                // rank conservation: s bundles of rank a, multiplicity a each
                let block_total: Int = &s * &a * &a;
                if rank_f != weight || block_total != weight {
                    return Err(Error::InvariantViolation(format!(
                        "vertex {i} of {p}: weight {weight} != s a^2 = {rank_f}"
                    )));
                }
                KksVertex {
                    vertex: i,
                    weight,
                    singularity: Some(q.clone()),
                    class_t: Some(t),
                    block_rank: a.clone(),
                    block_count: s,
                    multiplicity: a,
                    rank_f,
                }
            }
        };
        vertices.push(vertex);
    }
    Ok(KksRankReport { vertices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::markov::enumerate_tree;

    fn plane(w1: i64, w2: i64, w3: i64) -> WeightedPlane {
        WeightedPlane::new(Int::from(w1), Int::from(w2), Int::from(w3)).unwrap()
    }

    #[test]
    fn construction_requires_pairwise_coprime_positive_weights() {
        assert!(WeightedPlane::new(Int::from(2), Int::from(4), Int::from(5)).is_err());
        assert!(WeightedPlane::new(Int::from(0), Int::one(), Int::one()).is_err());
        assert!(WeightedPlane::new(Int::from(6), Int::from(10), Int::from(15)).is_err());
        let p = plane(1, 4, 25);
        assert_eq!(p.canonical_degree(), Int::from(-30));
    }

    #[test]
    fn hilbert_known_values() {
        let p = plane(1, 1, 4);
        assert_eq!(hilbert(&p, &Int::from(4)), Int::from(6));
        assert_eq!(hilbert(&p, &Int::one()), Int::from(2));
        assert_eq!(hilbert(&p, &Int::zero()), Int::one());
        assert_eq!(hilbert(&p, &Int::from(-1)), Int::zero());
        // i + 2j + 3k = 6 has 7 solutions
        assert_eq!(hilbert(&plane(1, 2, 3), &Int::from(6)), Int::from(7));
    }

    #[test]
    fn hilbert_matches_series_oracle() {
        for p in [
            plane(1, 1, 1),
            plane(1, 1, 4),
            plane(1, 2, 3),
            plane(1, 4, 25),
            plane(2, 3, 5),
            plane(3, 4, 7),
        ] {
            let series = hilbert_series_oracle(&p, 80);
            for (n, expect) in series.iter().enumerate() {
                assert_eq!(hilbert(&p, &Int::from(n)), *expect, "{p} at degree {n}");
            }
        }
    }

    #[test]
    fn chi_known_values() {
        let p = plane(1, 1, 4);
        assert_eq!(chi_divisorial(&p, &Int::from(-1)), Int::zero());
        assert_eq!(chi_divisorial(&p, &Int::from(-6)), Int::one());
        assert_eq!(chi_divisorial(&p, &Int::zero()), Int::one());
    }

    #[test]
    fn chi_on_p2_is_riemann_roch_polynomial() {
        let p = plane(1, 1, 1);
        for n in -20..=20i64 {
            let expect = (n + 1) * (n + 2) / 2;
            assert_eq!(chi_divisorial(&p, &Int::from(n)), Int::from(expect), "n={n}");
        }
    }

    #[test]
    fn chi_serre_symmetry() {
        for p in [plane(1, 1, 4), plane(2, 3, 5), plane(1, 4, 25)] {
            let sum = p.weight_sum();
            let bound = Int::from(3) * &sum;
            let mut n = -bound.clone();
            while n <= bound {
                let lhs = chi_divisorial(&p, &n);
                let rhs = chi_divisorial(&p, &(-&sum - &n));
                assert_eq!(lhs, rhs, "{p} at n={n}");
                n += 1;
            }
        }
    }

    #[test]
    fn singular_locus_known_values() {
        let locus = singular_locus(&plane(1, 1, 4));
        assert_eq!(locus.len(), 1);
        assert_eq!(locus[0].0, 3);
        assert_eq!(locus[0].1.to_string(), "1/4(1,1)");

        let locus = singular_locus(&plane(1, 4, 25));
        assert_eq!(locus.len(), 2);
        assert_eq!(locus[0].0, 2);
        assert_eq!(locus[0].1.to_string(), "1/4(1,1)");
        assert_eq!(locus[1].0, 3);
        assert_eq!(locus[1].1.to_string(), "1/25(1,4)");

        assert!(singular_locus(&plane(1, 1, 1)).is_empty());
    }

    #[test]
    fn kks_rank_report_known_values() {
        let report = kks_rank_report(&plane(1, 4, 25)).unwrap();
        assert_eq!(
            report.ranks(),
            vec![Int::one(), Int::from(4), Int::from(25)]
        );
        let v2 = &report.vertices[1];
        assert_eq!(v2.block_rank, Int::from(2));
        assert_eq!(v2.block_count, Int::one());
        assert_eq!(v2.multiplicity, Int::from(2));
        let v3 = &report.vertices[2];
        assert_eq!(v3.block_rank, Int::from(5));
        assert_eq!(v3.block_count, Int::one());
        assert_eq!(v3.multiplicity, Int::from(5));

        // one rank-2 bundle appearing twice: weight 4 = 1 * 2 * 2
        let report = kks_rank_report(&plane(1, 1, 4)).unwrap();
        assert_eq!(report.vertices[2].block_rank, Int::from(2));
        assert_eq!(report.vertices[2].multiplicity, Int::from(2));
        assert_eq!(report.ranks(), vec![Int::one(), Int::one(), Int::from(4)]);

        assert!(matches!(
            kks_rank_report(&plane(1, 1, 5)),
            Err(Error::NotClassT(_))
        ));
    }

    #[test]
    fn markov_square_planes_are_class_t_with_single_blocks() {
        for t in enumerate_tree(&Int::from(100)) {
            let [a, b, c] = t.entries().clone();
            let p = WeightedPlane::new(&a * &a, &b * &b, &c * &c).unwrap();
            let report = kks_rank_report(&p).unwrap();
            for (v, expect_a) in report.vertices.iter().zip([&a, &b, &c]) {
                assert_eq!(v.block_rank, *expect_a, "{p} vertex {}", v.vertex);
                assert_eq!(v.block_count, Int::one());
                assert_eq!(v.multiplicity, *expect_a);
            }
        }
    }
}
