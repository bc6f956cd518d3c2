//! Cyclic quotient singularities `1/n(w1, w2)` and the class T condition.
//!
//! A class T singularity is a cyclic quotient of type `1/(r^2 s)(1, ars-1)`
//! with `r >= 2`, `0 < a < r`, `gcd(r, a) = 1`, `s >= 1`. These are exactly
//! the quotient singularities admitting a Q-Gorenstein smoothing; the
//! smoothing is induced from the `s`-parameter deformation
//! `xy = z^{rs} + sum_i t_i z^{ir}` of the index-one cover `xy = z^{rs}`
//! inside `1/r(1, -1, a)`, with Milnor number `s - 1`.
//!
//! Because `1/n(1, w)` and `1/n(1, w^{-1} mod n)` present the same
//! singularity (coordinate swap), [`class_t_decompose`] searches both
//! orientations and records which one matched.

use crate::{mod_inverse, Error, Int, Result};
use num::{Integer, One, Zero};
use std::fmt;

/// A cyclic quotient `1/n(w1, w2)`, weights taken mod `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicQuotient {
    order: Int,
    weights: (Int, Int),
}

impl CyclicQuotient {
    /// Builds `1/order(w1, w2)`. Weights are reduced mod `order`; coprimality
    /// is checked by [`normalize`], not here, so non-isolated types can be
    /// constructed and rejected with a typed error downstream.
    pub fn new(order: Int, w1: Int, w2: Int) -> Result<Self> {
        if order < Int::from(2) {
            return Err(Error::InvalidInput(format!(
                "group order must be >= 2, got {order}"
            )));
        }
        let weights = (w1.mod_floor(&order), w2.mod_floor(&order));
        Ok(CyclicQuotient { order, weights })
    }

    pub fn order(&self) -> &Int {
        &self.order
    }

    pub fn weights(&self) -> (&Int, &Int) {
        (&self.weights.0, &self.weights.1)
    }

    pub fn is_normalized(&self) -> bool {
        self.weights.0.is_one()
    }
}

impl fmt::Display for CyclicQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "1/{}({},{})",
            self.order, self.weights.0, self.weights.1
        )
    }
}

/// Rescales the first weight to 1: `1/n(w1, w2) -> 1/n(1, w2 w1^{-1} mod n)`.
///
/// Both weights must be coprime to `n` (isolated singularity); idempotent.
pub fn normalize(q: &CyclicQuotient) -> Result<CyclicQuotient> {
    let n = &q.order;
    for w in [&q.weights.0, &q.weights.1] {
        if !w.gcd(n).is_one() {
            return Err(Error::NotIsolated(format!(
                "{q}: weight {w} shares a factor with the order {n}"
            )));
        }
    }
    let w1_inv = mod_inverse(&q.weights.0, n).expect("coprimality checked above");
    let w2 = (&q.weights.1 * &w1_inv).mod_floor(n);
    CyclicQuotient::new(n.clone(), Int::one(), w2)
}

/// A class T presentation `(r, a, s)` of the singularity `1/(r^2 s)(1, ars-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTData {
    r: Int,
    a: Int,
    s: Int,
}

impl ClassTData {
    pub fn new(r: Int, a: Int, s: Int) -> Result<Self> {
        if r < Int::from(2) {
            return Err(Error::InvalidInput(format!("r must be >= 2, got {r}")));
        }
        if a <= Int::zero() || a >= r {
            return Err(Error::InvalidInput(format!(
                "a must satisfy 0 < {a} < {r}"
            )));
        }
        if !r.gcd(&a).is_one() {
            return Err(Error::InvalidInput(format!(
                "r = {r} and a = {a} must be coprime"
            )));
        }
        if s < Int::one() {
            return Err(Error::InvalidInput(format!("s must be >= 1, got {s}")));
        }
        Ok(ClassTData { r, a, s })
    }

    pub fn r(&self) -> &Int {
        &self.r
    }

    pub fn a(&self) -> &Int {
        &self.a
    }

    pub fn s(&self) -> &Int {
        &self.s
    }

    /// Group order `r^2 s`.
    pub fn order(&self) -> Int {
        &self.r * &self.r * &self.s
    }

    /// Second weight `ars - 1` of the presented singularity.
    pub fn weight(&self) -> Int {
        &self.a * &self.r * &self.s - Int::one()
    }

    /// The presented singularity `1/(r^2 s)(1, ars - 1)`.
    pub fn quotient(&self) -> CyclicQuotient {
        CyclicQuotient::new(self.order(), Int::one(), self.weight())
            .expect("order r^2 s >= 4")
    }
}

impl fmt::Display for ClassTData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, a={}, s={})", self.r, self.a, self.s)
    }
}

/// Which presentation of `1/n(1, w)` a decomposition matched: the weight `w`
/// itself, the coordinate-swapped weight `w^{-1} mod n`, or both (when `w`
/// is self-inverse).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Direct,
    Swapped,
    Both,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Orientation::Direct => "direct",
            Orientation::Swapped => "swapped",
            Orientation::Both => "both",
        };
        f.write_str(s)
    }
}

/// One class T presentation of a given singularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTMatch {
    pub class_t: ClassTData,
    pub orientation: Orientation,
}

/// All class T presentations of `q`: every `(r, a, s)` with `r^2 s = n`,
/// `0 < a < r` coprime, and `ars - 1` equal to the normalized weight or to
/// its inverse mod `n` (coordinate swap). Empty iff `q` is not class T.
///
/// Results are sorted by `(r, a)`; an `(r, a, s)` matching both orientations
/// appears once, tagged [`Orientation::Both`].
pub fn class_t_decompose(q: &CyclicQuotient) -> Result<Vec<ClassTMatch>> {
    let q = normalize(q)?;
    let n = q.order.clone();
    let w = q.weights.1.clone();
    let w_inv = mod_inverse(&w, &n).expect("normalize guarantees gcd(w, n) = 1");
    let mut matches = Vec::new();
    let mut r = Int::from(2);
    while &r * &r <= n {
        let r_sq = &r * &r;
        if (&n % &r_sq).is_zero() {
            let s = &n / &r_sq;
            let mut a = Int::one();
            while a < r {
                if r.gcd(&a).is_one() {
                    // ars - 1 < n always, so compare without reduction
                    let weight = &a * &r * &s - Int::one();
                    let direct = weight == w;
                    let swapped = weight == w_inv;
                    if direct || swapped {
                        let orientation = match (direct, swapped) {
                            (true, true) => Orientation::Both,
                            (true, false) => Orientation::Direct,
                            (false, true) => Orientation::Swapped,
                            (false, false) => unreachable!(),
                        };
                        matches.push(ClassTMatch {
                            class_t: ClassTData::new(r.clone(), a.clone(), s.clone())?,
                            orientation,
                        });
                    }
                }
                a += 1;
            }
        }
        r += 1;
    }
    Ok(matches)
}

/// The index-one cover equation `xy = z^{rs}` in the ambient `1/r(1, -1, a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverEquation {
    /// Ambient quotient order `r`.
    pub ambient_order: Int,
    /// Ambient weights `(1, -1 mod r, a)` on `(x, y, z)`.
    pub ambient_weights: [Int; 3],
    /// Exponent `rs` on the right-hand side.
    pub z_exponent: Int,
}

impl fmt::Display for CoverEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "xy = z^{} in 1/{}({},{},{})",
            self.z_exponent,
            self.ambient_order,
            self.ambient_weights[0],
            self.ambient_weights[1],
            self.ambient_weights[2]
        )
    }
}

/// One parameter term `t_i z^{ir}` of the versal equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VersalTerm {
    pub parameter_index: usize,
    pub z_exponent: Int,
}

/// The versal Q-Gorenstein deformation `xy = z^{rs} + sum_{i<s} t_i z^{ir}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VersalEquation {
    pub z_exponent: Int,
    pub terms: Vec<VersalTerm>,
}

impl fmt::Display for VersalEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xy = z^{}", self.z_exponent)?;
        for t in &self.terms {
            if t.z_exponent.is_zero() {
                write!(f, " + t{}", t.parameter_index)?;
            } else {
                write!(f, " + t{}*z^{}", t.parameter_index, t.z_exponent)?;
            }
        }
        Ok(())
    }
}

/// Cover equation, versal equation, and Milnor number of a class T smoothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationEquations {
    pub cover: CoverEquation,
    pub versal: VersalEquation,
    pub milnor_number: Int,
}

/// The Q-Gorenstein deformation data of `(r, a, s)`: cover `xy = z^{rs}` in
/// `1/r(1, -1, a)`, versal equation with parameters `t_0..t_{s-1}`, and
/// Milnor number `s - 1`.
pub fn qg_deformation_data(t: &ClassTData) -> DeformationEquations {
    let r = t.r().clone();
    let minus_one = (Int::zero() - Int::one()).mod_floor(&r);
    let rs = t.r() * t.s();
    let s_usize = t
        .s()
        .to_string()
        .parse::<usize>()
        .expect("parameter counts are desk-scale");
    let terms = (0..s_usize)
        .map(|i| VersalTerm {
            parameter_index: i,
            z_exponent: Int::from(i) * t.r(),
        })
        .collect();
    DeformationEquations {
        cover: CoverEquation {
            ambient_order: r,
            ambient_weights: [Int::one(), minus_one, t.a().clone()],
            z_exponent: rs.clone(),
        },
        versal: VersalEquation {
            z_exponent: rs,
            terms,
        },
        milnor_number: t.s() - Int::one(),
    }
}
