//! Disk diagrams over 2-complexes of group presentations, with detectors
//! for spurs, shells and cutcells, bounded enumeration and area oracles.

pub mod area;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod gallery;
pub mod group;
pub mod presentation;
pub mod props;
pub mod word;

pub use diagram::{DiskDiagram, FeatureKind, FeatureWitness};
pub use error::{Error, Result};
pub use group::{FreeProductModel, GroupElement};
pub use presentation::Presentation;
pub use word::{CyclicWord, Letter, Word};
