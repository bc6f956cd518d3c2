//! Crepant partial resolutions of class-T degenerations as exact data.
//!
//! A class-T singularity `1/(r^2 s)(1, ars-1)` admits a crepant partial
//! resolution carrying `s` quotient points of type `1/r^2(1, ar-1)` strung
//! along a chain of curves `C_0, ..., C_s` with `C_{i-1} . C_i = 1/r^2` and
//! interior self-intersections `-2/r^2`. The boundary self-intersections
//! `C_0^2` and `C_s^2` are not determined by the local picture, so they are
//! carried as formal symbols `u` and `v` and every identity is checked over
//! linear expressions in them.
//!
//! Flops of the interior curves act as integral linear involutions on
//! divisor classes; their combinatorial shadow on the point labels closes
//! the initial semi-orthogonality set to all ordered pairs. Dimension
//! conservation cross-checks the monomial-algebra dimension `r^2 s` against
//! the matrix-algebra dimension `dim Mat(k,r)^{x s}`.

use crate::kkalg::{hj_dual_terms, kk_dimension_for_singularity};
use crate::ncdef::versal_rank;
use crate::singularity::{normalize, ClassTData, CyclicQuotient};
use crate::{Error, Int, Rat, Result};
use num::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// A linear expression `c + p u + q v` with rational coefficients, where
/// `u = C_0^2` and `v = C_s^2` are formal symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinUV {
    constant: Rat,
    u_coeff: Rat,
    v_coeff: Rat,
}

impl LinUV {
    pub fn zero() -> Self {
        LinUV {
            constant: Rat::zero(),
            u_coeff: Rat::zero(),
            v_coeff: Rat::zero(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        LinUV {
            constant: c,
            u_coeff: Rat::zero(),
            v_coeff: Rat::zero(),
        }
    }

    pub fn u() -> Self {
        LinUV {
            constant: Rat::zero(),
            u_coeff: Rat::one(),
            v_coeff: Rat::zero(),
        }
    }

    pub fn v() -> Self {
        LinUV {
            constant: Rat::zero(),
            u_coeff: Rat::zero(),
            v_coeff: Rat::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.u_coeff.is_zero() && self.v_coeff.is_zero()
    }

    pub fn add(&self, other: &LinUV) -> LinUV {
        LinUV {
            constant: &self.constant + &other.constant,
            u_coeff: &self.u_coeff + &other.u_coeff,
            v_coeff: &self.v_coeff + &other.v_coeff,
        }
    }

    pub fn neg(&self) -> LinUV {
        LinUV {
            constant: -&self.constant,
            u_coeff: -&self.u_coeff,
            v_coeff: -&self.v_coeff,
        }
    }

    pub fn scale_int(&self, k: &Int) -> LinUV {
        let k = Rat::from_integer(k.clone());
        LinUV {
            constant: &self.constant * &k,
            u_coeff: &self.u_coeff * &k,
            v_coeff: &self.v_coeff * &k,
        }
    }
}

impl fmt::Display for LinUV {
    /// `u + v - 1/2`, `-2/9`, `u`, `0`, ... — terms ordered u, v, constant.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn rat_term(x: &Rat) -> String {
            if x.is_integer() {
                x.numer().to_string()
            } else {
                format!("{}/{}", x.numer(), x.denom())
            }
        }
        let mut parts: Vec<(bool, String)> = Vec::new(); // (negative, magnitude text)
        for (coeff, sym) in [(&self.u_coeff, "u"), (&self.v_coeff, "v")] {
            if coeff.is_zero() {
                continue;
            }
            let mag = coeff.abs();
            let text = if mag.is_one() {
                sym.to_string()
            } else {
                format!("{}*{}", rat_term(&mag), sym)
            };
            parts.push((coeff.is_negative(), text));
        }
        if !self.constant.is_zero() {
            parts.push((self.constant.is_negative(), rat_term(&self.constant.abs())));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        for (k, (negative, text)) in parts.iter().enumerate() {
            if k == 0 {
                if *negative {
                    write!(f, "-")?;
                }
            } else if *negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{text}")?;
        }
        Ok(())
    }
}

/// Integer combination of the chain curves `C_0, ..., C_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    coefficients: Vec<Int>,
}

impl DivisorClass {
    pub fn new(coefficients: Vec<Int>) -> Self {
        DivisorClass { coefficients }
    }

    pub fn zero(curve_count: usize) -> Self {
        DivisorClass {
            coefficients: vec![Int::zero(); curve_count],
        }
    }

    /// The basis curve `C_index`.
    pub fn curve(index: usize, curve_count: usize) -> Self {
        let mut d = DivisorClass::zero(curve_count);
        d.coefficients[index] = Int::one();
        d
    }

    /// `C_0 + ... + C_{end - 1}` (`end` curves).
    pub fn prefix_sum(end: usize, curve_count: usize) -> Self {
        let mut d = DivisorClass::zero(curve_count);
        for c in d.coefficients.iter_mut().take(end) {
            *c = Int::one();
        }
        d
    }

    pub fn coefficients(&self) -> &[Int] {
        &self.coefficients
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        assert_eq!(self.coefficients.len(), other.coefficients.len());
        DivisorClass {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "C{i}")?;
            } else {
                write!(f, "{mag}*C{i}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The chain `C_0, ..., C_s` through the `s` quotient points of the crepant
/// partial resolution, with its partially symbolic intersection form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrepantChain {
    class_t: ClassTData,
    points: Vec<CyclicQuotient>,
    form: Vec<Vec<LinUV>>,
}

/// Instantiates the chain for `(r, a, s)`: `s` points of type
/// `1/r^2(1, ar-1)`, `C_{i-1} . C_i = 1/r^2`, interior `C_i^2 = -2/r^2`,
/// `C_0^2 = u`, `C_s^2 = v`, all other pairs orthogonal.
pub fn build_chain(t: &ClassTData) -> CrepantChain {
    let s = t.s().to_usize().expect("chain construction is desk-scale in s");
    let r2 = t.r() * t.r();
    let point = CyclicQuotient::new(r2.clone(), Int::one(), t.a() * t.r() - 1)
        .and_then(|q| normalize(&q))
        .expect("class-T data gives a valid isolated quotient");
    let points = vec![point; s];
    let adjacent = LinUV::constant(Rat::new(Int::one(), r2.clone()));
    let interior = LinUV::constant(Rat::new(Int::from(-2), r2));
    let n = s + 1;
    let mut form = vec![vec![LinUV::zero(); n]; n];
    for i in 0..n {
        form[i][i] = if i == 0 {
            LinUV::u()
        } else if i == s {
            LinUV::v()
        } else {
            interior.clone()
        };
        if i + 1 < n {
            form[i][i + 1] = adjacent.clone();
            form[i + 1][i] = adjacent.clone();
        }
    }
    CrepantChain {
        class_t: t.clone(),
        points,
        form,
    }
}

impl CrepantChain {
    pub fn class_t(&self) -> &ClassTData {
        &self.class_t
    }

    pub fn points(&self) -> &[CyclicQuotient] {
        &self.points
    }

    /// Number of curves, `s + 1`.
    pub fn curve_count(&self) -> usize {
        self.points.len() + 1
    }

    /// `C_i . C_j`, 0-based.
    pub fn form_entry(&self, i: usize, j: usize) -> &LinUV {
        &self.form[i][j]
    }

    /// Intersection number of two divisor classes.
    pub fn pairing(&self, d: &DivisorClass, e: &DivisorClass) -> LinUV {
        let mut acc = LinUV::zero();
        for (i, di) in d.coefficients().iter().enumerate() {
            if di.is_zero() {
                continue;
            }
            for (j, ej) in e.coefficients().iter().enumerate() {
                if ej.is_zero() {
                    continue;
                }
                acc = acc.add(&self.form[i][j].scale_int(&(di * ej)));
            }
        }
        acc
    }

    /// The canonical class: `K = -(C_0 + ... + C_s)`, i.e. the stored
    /// relation `K + C_0 + ... + C_s = 0`.
    pub fn canonical_class(&self) -> DivisorClass {
        DivisorClass::new(vec![Int::from(-1); self.curve_count()])
    }

    /// `K . d`; zero on interior curves (crepancy).
    pub fn k_dot(&self, d: &DivisorClass) -> LinUV {
        self.pairing(&self.canonical_class(), d)
    }
}

/// The flop of the `i`-th interior curve, `1 <= i <= s-1`, acting on divisor
/// classes: `C_{i-1} -> C_{i-1} + C_i`, `C_i -> -C_i`,
/// `C_{i+1} -> C_i + C_{i+1}`, all other curves fixed. An involutive
/// isometry of the chain form that interchanges `C_0 + ... + C_{i-1}` with
/// `C_0 + ... + C_i`.
pub fn flop(chain: &CrepantChain, i: usize, d: &DivisorClass) -> Result<DivisorClass> {
    let s = chain.curve_count() - 1;
    if i == 0 || i >= s {
        return Err(Error::InvalidInput(format!(
            "flop index must satisfy 1 <= i <= {}, got {i}",
            s.saturating_sub(1)
        )));
    }
    if d.coefficients().len() != chain.curve_count() {
        return Err(Error::InvalidInput(format!(
            "divisor class has {} coefficients, chain has {} curves",
            d.coefficients().len(),
            chain.curve_count()
        )));
    }
    let c = d.coefficients();
    let mut out = c.to_vec();
    out[i] = &c[i - 1] - &c[i] + &c[i + 1];
    Ok(DivisorClass::new(out))
}

/// Closure of the initial semi-orthogonality set under flop transpositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub s: usize,
    /// `{(i, j) : 1 <= i < j <= s}` — the pairs vanishing before any flop.
    pub initial_pairs: usize,
    /// Size of the closure under label transpositions `k <-> k+1`.
    pub closure_pairs: usize,
    /// `s(s-1)`, all ordered pairs of distinct points.
    pub total_pairs: usize,
}

/// Starts from the vanishing set `V = {(i, j) : 1 <= i < j <= s}` on point
/// labels and closes it under every flop's transposition `k <-> k+1`
/// (applied to both coordinates) until stable. The closure must reach all
/// ordered pairs with `i != j`; anything less is an `InvariantViolation`.
pub fn orthogonality_closure(s: usize) -> Result<ClosureReport> {
    if s < 1 {
        return Err(Error::InvalidInput(format!("need s >= 1, got {s}")));
    }
    let mut set: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 1..=s {
        for j in (i + 1)..=s {
            set.insert((i, j));
        }
    }
    let initial_pairs = set.len();
    let transpose = |x: usize, k: usize| -> usize {
        if x == k {
            k + 1
        } else if x == k + 1 {
            k
        } else {
            x
        }
    };
    loop {
        let mut added = Vec::new();
        for &(i, j) in &set {
            for k in 1..s {
                let image = (transpose(i, k), transpose(j, k));
                if !set.contains(&image) {
                    added.push(image);
                }
            }
        }
        if added.is_empty() {
            break;
        }
        set.extend(added);
    }
    let total_pairs = s * (s - 1);
    if set.len() != total_pairs {
        return Err(Error::InvariantViolation(format!(
            "orthogonality closure for s = {s} reached {} of {} ordered pairs",
            set.len(),
            total_pairs
        )));
    }
    Ok(ClosureReport {
        s,
        initial_pairs,
        closure_pairs: set.len(),
        total_pairs,
    })
}

/// Euler characteristic of the structure sheaf of a reduced chain of
/// rational curves `C_{j_from}, ..., C_{j_to}`: vertices minus edges of the
/// dual path, which is 1 for every nonempty range.
pub fn chain_chi(j_from: &Int, j_to: &Int) -> Result<Int> {
    if j_to < j_from {
        return Err(Error::InvalidInput(format!(
            "empty curve range {j_from}..{j_to}"
        )));
    }
    let vertices = j_to - j_from + 1;
    let edges = &vertices - 1;
    Ok(vertices - edges)
}

/// Cross-module dimension bookkeeping for the degeneration at `(r, a, s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub class_t: ClassTData,
    /// The smoothed singularity `1/(r^2 s)(1, ars - 1)`.
    pub quotient: CyclicQuotient,
    /// Expansion terms of `n/(n - w)` feeding the monomial algebra.
    pub expansion_terms: Vec<Int>,
    /// Dimension of the monomial algebra, by word enumeration.
    pub kk_dimension: Int,
    /// Rank of the versal matrix factorization, `= group order`.
    pub versal_rank: Int,
    /// `dim Mat(k, r)^{x s} = s r^2`.
    pub matrix_dimension: Int,
    /// `sum_{i=1}^{s} r * r`, the block-by-block count.
    pub block_sum: Int,
}

/// Checks `dim R = r^2 s = dim Mat(k,r)^{x s}` for the class-T singularity
/// `1/(r^2 s)(1, ars-1)`: the monomial-algebra dimension (via the dual
/// expansion), the versal rank, and the matrix-block sum must all agree.
pub fn dimension_conservation(t: &ClassTData) -> Result<DimensionReport> {
    let quotient = normalize(&CyclicQuotient::new(t.order(), Int::one(), t.weight())?)?;
    let n = t.order();
    let w = t.weight();
    let expansion_terms = hj_dual_terms(&n, &w)?;
    let kk_dimension = kk_dimension_for_singularity(&n, &w)?;
    let versal = versal_rank(t);
    let matrix_dimension = t.s() * t.r() * t.r();
    let mut block_sum = Int::zero();
    let mut i = Int::zero();
    while &i < t.s() {
        block_sum += t.r() * t.r();
        i += 1;
    }
    if kk_dimension != matrix_dimension || versal != matrix_dimension || block_sum != matrix_dimension
    {
        return Err(Error::InvariantViolation(format!(
            "dimension conservation fails for {t}: kk = {kk_dimension}, versal = {versal}, \
             matrix = {matrix_dimension}, blocks = {block_sum}"
        )));
    }
    Ok(DimensionReport {
        class_t: t.clone(),
        quotient,
        expansion_terms,
        kk_dimension,
        versal_rank: versal,
        matrix_dimension,
        block_sum,
    })
}
