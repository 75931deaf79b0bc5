//! Exact-arithmetic toolkit for the symplectic flag varieties `Sp_2n/P_d`
//! sitting inside the Grassmannian `G_{d,2n}`: Plücker coordinates, type C
//! Bruhat combinatorics, Schubert/Richardson membership, standard monomial
//! bases, linear defining equations, and a finite-field brute-force verifier
//! that checks every claim against exhaustive enumeration.

pub mod indices;
pub mod matrix;
pub mod oracle;
pub mod pluecker;
pub mod scalar;
pub mod schubert;
pub mod smt;
pub mod symplectic;

pub use indices::{IndexTuple, SpBarIndex, SpIndex};
pub use matrix::{Mat, SubspacePoint};
pub use oracle::Verdict;
pub use pluecker::{LinearForm, PlueckerVector};
pub use scalar::{Field, Scalar};
pub use schubert::{Filtration, RichardsonSpec};
pub use symplectic::{GroupElement, SymplecticContext};
