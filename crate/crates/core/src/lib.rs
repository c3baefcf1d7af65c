//! Exact combinatorics of exceptional sequences, cluster fans, cluster
//! morphisms and picture groups for Dynkin quivers.

pub mod algebra;
pub mod error;
pub mod fan;
pub mod linalg;
pub mod morphism;
pub mod oracle;
pub mod picture;
pub mod quiver;
pub mod render;
pub mod rootset;
pub mod torsion;
pub mod wide;

pub use algebra::{Algebra, ClusterObject};
pub use error::{Error, Result};
pub use quiver::{parse_quiver, Root, ValuedQuiver};
pub use rootset::RootSet;
pub use fan::{Cluster, Facet, Fan};
pub use wide::WideSubcategory;
pub use morphism::{ClusterMorphism, SignedSequence};
pub use picture::{ChainComplex, HomologyResult, Presentation};
pub use render::RenderSpec;
pub use torsion::{TorsionClass, TorsionHasse};
