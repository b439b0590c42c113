//! Tension-continuous mappings between graphs over abelian groups of the
//! form `Z^a x Z_{n1} x ... x Z_{nk}`.

pub mod error;
pub mod graph;
pub mod ring;
pub mod tension;
pub mod verify;
pub mod cayley;
pub mod search;
pub mod generate;
pub mod analysis;
pub mod constructions;
pub mod io;
pub mod cli;

pub use error::{Error, Result};
pub use graph::Graph;
pub use ring::{RingElement, RingSpec};
pub use verify::{EdgeImage, EdgeMapping};
