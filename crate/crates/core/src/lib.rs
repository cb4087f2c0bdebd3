//! Exact spectral computations for the Nazarov-Sklyanin Lax operator.
//!
//! Everything here works over exact rationals or over polynomials in the
//! parameters (e1, e2); there are no floating-point numbers anywhere.
//! The library builds the Lax operator restricted to graded Fock
//! components, computes Jack polynomials as transfer-operator
//! eigenvectors, constructs the Jack-generated cyclic spaces with their
//! eigenfunctions, and verifies spectra, superposition weights,
//! Titchmarsh-Weyl functions, principal specializations, and integrality
//! of the symbolic eigenfunction coefficients.

pub mod eigenanalysis;
pub mod error;
pub mod exactalg;
pub mod fock;
pub mod jack;
pub mod lax;
pub mod partitions;
pub mod spectral;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
