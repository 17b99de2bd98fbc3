//! Distance-based graph entropies computed exactly, plus the extremal
//! searches and verifiers built on them.
//!
//! * [`entropy`]: entropy of positive sequences, majorization and optimal fills.
//! * [`graph`]: graphs, distance profiles, Wiener-/eccentricity-/degree-entropy.
//! * [`families`]: paths, stars, brooms, `G(n,k,j)` and the extremal trees,
//!   with closed-form transmission profiles.
//! * [`enumerate`]: exhaustive free trees and connected graphs.
//! * [`search`]: extremal searches and conjecture/lemma verifiers.
//! * [`io`]: the edge-list file format.
#![forbid(unsafe_code)]

pub mod entropy;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod search;

pub use entropy::{EntropyBits, WeightSequence};
pub use error::{Error, Result};
pub use families::{ClassProfile, GnkjSpec};
pub use graph::{DistanceProfile, Graph};
