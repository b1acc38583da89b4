//! Exact computer algebra for presented graded quotient rings: Groebner
//! bases, Koszul homology, Hilbert series, multiplicities, socles, and the
//! derived classification and annihilation checks, with a CLI and a
//! randomized search harness on top.

pub mod aci;
pub mod cli;
pub mod coeff;
pub mod error;
pub mod extend;
pub mod gb;
pub mod harness;
pub mod koszul;
pub mod linalg;
pub mod monideal;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod presentation;
pub mod report;
pub mod ring;

pub use coeff::Coeff;
pub use error::{Error, Result};
pub use gb::{GroebnerBasis, Length, ModElement, ModuleGroebnerBasis, PolyMatrix};
pub use monomial::{Monomial, WeightedGrading};
pub use poly::{DegreeCheck, PolyRing, Polynomial};
pub use ring::{HilbertData, ParameterSequence, RingPresentation};
