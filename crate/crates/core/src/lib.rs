//! Combinatorial tests for isomorphism of Grassmannian Schubert varieties
//! and semi-isomorphism of Richardson skew shapes.
//!
//! * [`partition`]: partitions, rectangle decompositions, subdiagram counts.
//! * [`singular`]: the partitions indexing singular-locus components.
//! * [`skew`]: translation-normalized skew diagrams.
//! * [`poset`]: cell posets, isomorphism search, canonical classes.
//! * [`decide`]: the Schubert decision procedure and the Richardson test.
//! * [`verify`]: exhaustive sweeps over small instances.
//! * [`render`]: text pictures.
//!
//! Schubert varieties `X_λ`, `X_μ` are isomorphic iff `μ ∈ {λ, λᵀ}`; the
//! invariants in [`decide`] explain a negative answer by a finite trace.

pub mod decide;
pub mod error;
pub mod partition;
pub mod poset;
pub mod render;
pub mod singular;
pub mod skew;
pub mod verify;

pub use decide::{
    richardson_isomorphic_sufficient, schubert_distinguishing_invariants, schubert_isomorphic,
    RichardsonVerdict, SchubertReport, Witness,
};
pub use error::{Error, Result};
pub use partition::{parse_partition, BoxFrame, Partition};
pub use poset::{build_poset, CellPoset, InvariantSignature, Limits};
pub use skew::{parse_skew, SkewShape};
