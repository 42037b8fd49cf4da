//! Exact kernel for line arrangements in the projective plane.
//!
//! Everything here is `no_std` (with `alloc`): arithmetic over the rationals
//! and cyclotomic fields, projective incidence, singular loci and weak
//! combinatorics, supersolvability via modular points, the
//! extension-to-supersolvability search, cone resolutions, the arrangement
//! families used in the literature, and exact fat-point ideal dimensions.
//!
//! IO, file formats, parallel drivers and the command-line interface live in
//! the companion `supersolve` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arrangement;
mod error;
pub mod field;
pub mod generators;
pub mod invariants;
pub mod linalg;
pub mod projective;
pub mod resolution;
pub mod solver;
pub mod supersolvable;
pub mod unexpected;

pub use arrangement::{Arrangement, SingularLocus, WeakCombinatorics};
pub use error::{Error, Result};
pub use field::{
    cyclotomic_polynomial, CyclotomicField, CyclotomicNumber, FieldKind, Rational, Scalar,
};
pub use invariants::{
    b6k_rs_closed_form, cone_exponents, poincare, split_exponents, ExponentTriple,
    PoincarePolynomial,
};
pub use projective::{incident, join, meet, Matrix3, ProjLine, ProjPoint};
pub use resolution::{cone_extension, recipe_apex, validate_chain, ChainReport, ResolutionChain};
pub use solver::{
    cone_cost, extss_exact, extss_upper_bound, generic_bound, CandidateSet, ConeCost, ExtSsMode,
    ExtSsResult, DEFAULT_CANDIDATE_BUDGET,
};
pub use supersolvable::{is_modular, is_supersolvable, verify_witness, ModularWitness};
