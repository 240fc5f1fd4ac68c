pub mod error;
pub mod field;
pub mod group;
pub mod algebra;
pub mod cohomology;
pub mod constructors;
pub mod smith;
pub mod meataxe;
pub mod analysis;
pub mod recovery;
pub mod io;
pub mod sweep;

pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use group::{FiniteGroup, Subgroup};
