pub mod error;
pub mod fixtures;
pub mod geom;
pub mod lct;
pub mod monomial;
pub mod parallel;
pub mod rational;
pub mod sequence;
pub mod verify;

pub use error::{Error, Result};
pub use lct::{LctPolytope, Provenance, ResolutionData};
pub use monomial::{MonomialIdeal, NewtonPolyhedron};
pub use rational::{RatVec, Rational};
pub use sequence::{LimitReport, PolytopeSequence};

/// The guide's chapters, compiled as doc-tests so their snippets stay in
/// sync with the code.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/polyhedra.md")]
    pub struct Polyhedra;
    #[doc = include_str!("../../../book/src/monomial-ideals.md")]
    pub struct MonomialIdeals;
    #[doc = include_str!("../../../book/src/lct-polytopes.md")]
    pub struct LctPolytopes;
    #[doc = include_str!("../../../book/src/resolutions.md")]
    pub struct Resolutions;
    #[doc = include_str!("../../../book/src/sequences.md")]
    pub struct Sequences;
    #[doc = include_str!("../../../book/src/verification.md")]
    pub struct Verification;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
    #[doc = include_str!("../../../README.md")]
    pub struct Readme;
}
