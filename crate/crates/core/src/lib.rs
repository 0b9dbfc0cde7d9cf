pub mod deck;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod group_spec;
pub mod iso;
pub mod nash_williams;
pub mod perm;
pub mod search;
pub mod structure;

pub use error::{Error, ErrorClass, Result};
pub use graph::{Edge, EdgeSet, Graph};
pub use iso::CanonicalCode;
pub use perm::{PermGroup, Permutation};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs-and-groups.md")]
    mod graphs_and_groups {}
    #[doc = include_str!("../../../book/src/decks.md")]
    mod decks {}
    #[doc = include_str!("../../../book/src/overlap-identity.md")]
    mod overlap_identity {}
    #[doc = include_str!("../../../book/src/structure.md")]
    mod structure {}
    #[doc = include_str!("../../../book/src/end-vertices.md")]
    mod end_vertices {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
