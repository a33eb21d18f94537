pub mod build;
pub mod corn;
pub mod flagmap;
pub mod io;
pub mod ops;
mod perm;
pub mod split;
pub mod symmetry;
pub mod symtype;
pub mod verify;

pub use flagmap::{
    Cell, CellKind, DartId, EdgeId, FaceId, FlagMap, Genus, Skeleton, Topology, ValidationError,
    VertexId, WedgeId,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/flags.md")]
    mod flags {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/symmetry.md")]
    mod symmetry {}
    #[doc = include_str!("../../../book/src/cornerations.md")]
    mod cornerations {}
    #[doc = include_str!("../../../book/src/symtype.md")]
    mod symtype {}
    #[doc = include_str!("../../../book/src/split-graphs.md")]
    mod split_graphs {}
    #[doc = include_str!("../../../book/src/formats.md")]
    mod formats {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
