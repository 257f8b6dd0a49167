//! Knots and links as mirror-curves on rectangular grids.

pub mod algebra;
pub mod catalog;
pub mod codes;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod grid;
pub mod invariants;
pub mod isometry;
pub mod mosaic;
pub mod moves;
pub mod poly;
pub mod render;
pub mod trace;

pub use codes::{parse_matrix, serialize_matrix, FourCode, SixCode, StateCode};
pub use diagram::Diagram;
pub use error::{Error, Result};
pub use grid::{EdgeLabel, GridCode};
pub use poly::{LaurentPoly, LaurentPoly2};
pub use trace::{trace, TracedDiagram};
