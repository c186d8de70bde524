//! Noncommutative Gröbner bases, associated monomial algebras, truncated
//! cobar cohomology and K₂ certificates for graded and augmented algebras.
//!
//! ```
//! use k2ws::{groebner, Presentation, PrimeField};
//!
//! let p = Presentation::from_strs(PrimeField::default(), &["x", "y"], &["x*y - x^2", "y*x", "y^3"], Some(6))?;
//! let cert = groebner::essential_groebner_test(&p)?;
//! assert!(matches!(cert.verdict, groebner::EssentialVerdict::No { degree: 3, .. }));
//! # Ok::<(), k2ws::Error>(())
//! ```

pub mod cobar;
pub mod error;
pub mod facecomplex;
pub mod field;
pub mod freealg;
pub mod grassoc;
pub mod groebner;
pub mod linalg;
pub mod parse;
pub mod report;

pub use cobar::{Cobar, ExtTable, GradedAlgebra, Grading, K2Verdict};
pub use error::{Error, Result};
pub use facecomplex::{SimplicialComplex, VertexOrdering};
pub use field::{Field, PrimeField, Rationals};
pub use freealg::{Polynomial, VariableSet, Word};
pub use grassoc::MonomialAlgebra;
pub use groebner::{GroebnerBasis, Presentation};
