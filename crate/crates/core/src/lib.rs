//! Deformation-theoretic invariants of isolated singularities.
//!
//! Milnor and Tjurina numbers via local standard bases, weight gradings of
//! the Tjurina algebra, the module of derivations tangent to a hypersurface,
//! and the first-order tangent space of the modular stratum computed as the
//! common kernel of the induced action on `T¹`.

pub mod error;
pub mod family;
pub mod groebner;
pub mod linalg;
pub mod modular;
pub mod oracle;
pub mod poly;
pub mod singularity;

pub use error::{Error, Result};
pub use groebner::{Dimension, StandardBasis, Staircase, VectorPoly};
pub use poly::{parse_poly, Coefficient, Monomial, MonomialOrder, Polynomial};
