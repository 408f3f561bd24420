//! Exact computations in uniserial hereditary categories: finite tubes, big
//! tubes over locally discrete linear orders, and representations of linear
//! orders. Objects are intervals on a cover of the base order, and every
//! combinatorial answer can be cross-checked against explicit matrix
//! representations in [`oracle`].

pub mod cli;
pub mod error;
pub mod field;
pub mod linalg;
pub mod oracle;
pub mod perp;
pub mod proalgebra;
pub mod site;
pub mod sweep;
pub mod tube;

pub use error::{Error, Result};
pub use site::{Base, CoverPoint, Kind, Site, Vertex};
pub use tube::{IntervalObject, Label};
