//! Exact computation with ℤ₂-graded algebras and superspecies: radicals and
//! smash products, the quiver Q_S and superquiver Q(S) of a species, two
//! independent routes to its graded representation type, and a brute-force
//! representation oracle over small fields.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod quiver;
pub mod report;
pub mod species;
pub mod superquiver;

pub use algebra::{GradedAlgebra, GradedIdeal};
pub use error::{Error, Result};
pub use exact::{Field, Matrix, Scalar, Subspace};
pub use quiver::{Diagram, Id, Quiver, RepType};
pub use report::ValidationReport;
pub use species::{Bimodule, Label, Superspecies};
pub use superquiver::{Color, Style, Superquiver};
