//! Universal-extension bookkeeping on the minimal resolution chain.
//!
//! For `1/r(1, a)` with `r/a = [d_1, ..., d_m]`, the minimal resolution has
//! an exceptional chain `E_1, ..., E_m` with `E_j^2 = -d_j`. Iterated
//! universal extensions of line bundles `L_i` build sheaves `G_i` of rank
//! `r_i` (the leading continuants); this module replays that construction
//! purely numerically: the degree matrix `a_{ij} = deg_{E_j}(L_i)`, the rank
//! and Ext-dimension ladder, restriction splitting types, and the
//! fundamental-cycle descent identity `sum_i n_i a_{ij} = 0` which makes the
//! restriction of the glued bundle to the fundamental cycle trivial.
//!
//! The splitting type on `E_{i+1}` uses the rank-consistent multiplicity
//! `r_{i-1}` on degree `d_{i+1} - 2` (the source display's exponent `r_i`
//! would overshoot `rank G_i = r_i`; its own first-cohomology count uses
//! `r_{i-1}`).

use crate::cfrac::{rank_sequence, RankSequence};
use crate::singularity::{ClassTData, CyclicQuotient};
use crate::{Error, Int, Result};
use num::{One, Zero};

/// The `(m+1) x m` degree matrix, rows indexed `0..=m`, columns `1..=m`:
///
/// ```text
/// a_{ij} = 0          for j < i
/// a_{ii} = -1         for i >= 1
/// a_{i,i+1} = d_{i+1} - 1
/// a_{ij} = d_j - 2    for j > i + 1
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegMatrix {
    rows: Vec<Vec<Int>>,
}

impl DegMatrix {
    /// Entry `a_{ij}` with `0 <= i <= m`, `1 <= j <= m`.
    pub fn entry(&self, i: usize, j: usize) -> &Int {
        &self.rows[i][j - 1]
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    /// Chain length `m`.
    pub fn m(&self) -> usize {
        self.rows.len() - 1
    }
}

/// Builds the degree matrix of a chain with `E_j^2 = -d_j`.
pub fn deg_matrix(d: &[Int]) -> DegMatrix {
    let m = d.len();
    let rows = (0..=m)
        .map(|i| {
            (1..=m)
                .map(|j| {
                    if j < i {
                        Int::zero()
                    } else if j == i {
                        -Int::one()
                    } else if j == i + 1 {
                        &d[j - 1] - Int::one()
                    } else {
                        &d[j - 1] - Int::from(2)
                    }
                })
                .collect()
        })
        .collect();
    DegMatrix { rows }
}

/// Rank sequence `r_0..r_m`, Ext-dimension ladder `e_0..e_{m-1}`, and
/// multiplicities `n_0..n_m` of the universal-extension tower.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionLadder {
    ranks: RankSequence,
    ext_dims: Vec<Int>,
    multiplicities: Vec<Int>,
}

impl ExtensionLadder {
    pub fn ranks(&self) -> &RankSequence {
        &self.ranks
    }

    /// `e_i = dim Ext^1(G_i, L_{i+1}) = r_{i+1} - r_i`.
    pub fn ext_dims(&self) -> &[Int] {
        &self.ext_dims
    }

    /// `n_0 = 1, n_i = r_i - r_{i-1}`; the multiplicity of `L_i` in the
    /// associated graded of the tower. Sums to `r_m`.
    pub fn multiplicities(&self) -> &[Int] {
        &self.multiplicities
    }

    /// Total rank `r_m`.
    pub fn total_rank(&self) -> &Int {
        self.ranks.last()
    }
}

/// Computes the ladder for a chain with `E_j^2 = -d_j` (all `d_j >= 2`).
pub fn extension_ladder(d: &[Int]) -> ExtensionLadder {
    let ranks = rank_sequence(d);
    let v = ranks.values();
    let ext_dims = v.windows(2).map(|w| &w[1] - &w[0]).collect();
    let mut multiplicities = Vec::with_capacity(v.len());
    multiplicities.push(Int::one());
    for w in v.windows(2) {
        multiplicities.push(&w[1] - &w[0]);
    }
    ExtensionLadder {
        ranks,
        ext_dims,
        multiplicities,
    }
}

/// Splitting type of `G_i` restricted to `E_j`, as `(degree, multiplicity)`
/// pairs merged by degree, ascending. For `j <= i` the restriction is
/// trivial, `{(0, r_i)}`; for `j > i` it is the multiset
/// `{(a_{kj}, n_k) : 0 <= k <= i}`.
pub fn splitting_type(d: &[Int], i: usize, j: usize) -> Result<Vec<(Int, Int)>> {
    let m = d.len();
    if i > m || j < 1 || j > m {
        return Err(Error::InvalidInput(format!(
            "splitting_type indices out of range: i = {i}, j = {j}, m = {m}"
        )));
    }
    let ladder = extension_ladder(d);
    if j <= i {
        return Ok(vec![(Int::zero(), ladder.ranks().values()[i].clone())]);
    }
    let matrix = deg_matrix(d);
    let mut acc: Vec<(Int, Int)> = Vec::new();
    for k in 0..=i {
        let deg = matrix.entry(k, j).clone();
        let mult = ladder.multiplicities()[k].clone();
        match acc.iter_mut().find(|(dg, _)| *dg == deg) {
            Some((_, m)) => *m += mult,
            None => acc.push((deg, mult)),
        }
    }
    acc.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(acc)
}

/// Column sums of the descent identity and the total rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentReport {
    /// `sum_i n_i a_{ij}` per column `j = 1..=m`; all zero.
    pub column_sums: Vec<Int>,
    /// `sum_i n_i = r_m`.
    pub total_rank: Int,
}

/// Verifies `sum_i n_i a_{ij} = 0` for every column by direct summation over
/// the matrix entries (not the telescoped closed form), plus
/// `sum_i n_i = r_m`. This is the numerical content of "the restriction of
/// the glued bundle to the fundamental cycle is trivial".
pub fn verify_descent(d: &[Int]) -> Result<DescentReport> {
    let matrix = deg_matrix(d);
    let ladder = extension_ladder(d);
    let n = ladder.multiplicities();
    let m = d.len();
    let mut column_sums = Vec::with_capacity(m);
    for j in 1..=m {
        let mut sum = Int::zero();
        for (i, mult) in n.iter().enumerate() {
            sum += mult * matrix.entry(i, j);
        }
        column_sums.push(sum);
    }
    if let Some(j) = column_sums.iter().position(|s| !s.is_zero()) {
        return Err(Error::InvariantViolation(format!(
            "descent column {} sums to {} instead of 0 for d = {:?}",
            j + 1,
            column_sums[j],
            d
        )));
    }
    let total_rank: Int = n.iter().sum();
    if total_rank != *ladder.total_rank() {
        return Err(Error::InvariantViolation(format!(
            "multiplicities sum to {total_rank}, expected rank {}",
            ladder.total_rank()
        )));
    }
    Ok(DescentReport {
        column_sums,
        total_rank,
    })
}

/// Types whose singularity has a well-defined group order.
pub trait HasGroupOrder {
    fn group_order(&self) -> Int;
}

impl HasGroupOrder for CyclicQuotient {
    fn group_order(&self) -> Int {
        self.order().clone()
    }
}

impl HasGroupOrder for ClassTData {
    fn group_order(&self) -> Int {
        self.order()
    }
}

/// Rank of the versal-deformation sheaf: the group order (`r` for
/// `1/r(1, a)`, `r^2 s` for class T data).
pub fn versal_rank<T: HasGroupOrder>(x: &T) -> Int {
    x.group_order()
}
