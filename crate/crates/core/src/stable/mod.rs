//! The stable representation ring of `SL₂(𝔽_p)` over a field of
//! characteristic `p`.

mod element;
mod presentation;
mod tables;

pub use element::{cg_summands, Basis, StableElement};
pub use presentation::{psi_from_presentation, psi_to_presentation, PresentationPoly};
pub use tables::{height_position_tables, table_position, HeightTable, TablePosition};
