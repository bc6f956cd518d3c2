//! Exact arithmetic for the combinatorics of cyclic quotient surface
//! singularities and their Q-Gorenstein smoothings.
//!
//! Everything here is integer or rational arithmetic with arbitrary
//! precision; there is no floating point anywhere in the crate. The modules
//! cover:
//!
//! - [`cfrac`]: Hirzebruch-Jung (minus) continued fractions, continuant
//!   determinants, and the rank sequences they generate.
//! - [`singularity`]: cyclic quotient types `1/n(w1,w2)`, normalization,
//!   the class T predicate/decomposition, and Q-Gorenstein deformation
//!   equation data.
//! - [`kkalg`]: Kalck-Karmazyn monomial algebras with an automaton-based
//!   word-counting fast path and a brute-force enumeration oracle.
//! - [`ncdef`]: the universal-extension bookkeeping on the minimal
//!   resolution chain (degree matrix, rank/Ext ladders, splitting types,
//!   fundamental-cycle descent).
//! - [`markov`]: Markov triples, mutations, tree enumeration, and
//!   generalized 3-block Markov equations.
//! - [`ktheory`]: the numerical Grothendieck group of the projective plane
//!   with Euler pairing, mutations, cyclic twist, and duality.
//! - [`wpp`]: weighted projective plane Hilbert functions, divisorial Euler
//!   characteristics, singular loci, and rank bookkeeping for smoothable
//!   planes.
//! - [`smoothing`]: the crepant chain with its partially symbolic
//!   intersection form, flop involutions, orthogonality closure, and
//!   dimension conservation.
//! - [`suites`]: the cross-module verification sweeps behind `verify`.
//! - [`cli`]: the command-line surface.

pub mod cfrac;
pub mod cli;
pub mod kkalg;
pub mod ktheory;
pub mod markov;
pub mod ncdef;
pub mod singularity;
pub mod smoothing;
pub mod suites;
pub mod wpp;

use num::BigInt;
use num::BigRational;

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;

/// Arbitrary-precision rational used throughout the crate.
pub type Rat = BigRational;

/// Crate-wide error type. Every failure mode is one of these six variants;
/// the CLI maps `InvariantViolation` to exit code 1 and everything else to
/// exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed or out-of-domain input.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A continued-fraction evaluation hit a zero denominator.
    #[error("degenerate expansion: {0}")]
    DegenerateExpansion(String),
    /// A quotient-singularity weight is not coprime to the order.
    #[error("not an isolated quotient singularity: {0}")]
    NotIsolated(String),
    /// A singular point admits no class T presentation.
    #[error("not a class T singularity: {0}")]
    NotClassT(String),
    /// A block mutation coefficient is not an integer.
    #[error("non-integral mutation: {0}")]
    NonIntegralMutation(String),
    /// An identity the library is supposed to certify failed.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Formats a rational as `p/q` (always with an explicit denominator), the
/// lossless form used in all reports and JSON output.
pub fn rat_str(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses an `Int` from a decimal string (CLI plumbing).
pub fn parse_int(s: &str) -> Result<Int> {
    s.parse::<Int>()
        .map_err(|_| Error::InvalidInput(format!("expected an integer, got {s:?}")))
}

/// Inverse of `a` modulo `n` in `0..n`, or `None` when gcd(a, n) != 1.
pub(crate) fn mod_inverse(a: &Int, n: &Int) -> Option<Int> {
    use num::Integer;
    use num::One;
    let e = a.extended_gcd(n);
    if !e.gcd.is_one() {
        return None;
    }
    let inv = e.x.mod_floor(n);
    Some(inv)
}
