//! Computation in the mapping class groups of an orbifold disk with marked
//! points, punctures and cone points.
//!
//! The crate covers finite presentations of the pure and full groups, a
//! combing normal form deciding the word problem, the point-pushing and
//! forgetful maps of the Birman exact sequence, arithmetic in free products
//! of finite cyclic groups, normalization of G-paths, and an independent
//! braid-group oracle that cross-checks all of it.

pub mod combing;
pub mod error;
pub mod gamma;
pub mod gpath;
pub mod oracle;
pub mod params;
pub mod perm;
pub mod presentation;
pub mod random;
pub mod verify;
pub mod word;

pub use combing::{Engine, NormalForm};
pub use error::{Error, Result};
pub use gamma::GammaElement;
pub use gpath::{ContinuousForm, GPath, SegmentToken};
pub use params::{GroupParams, Point};
pub use perm::{perm_image, Permutation};
pub use presentation::{
    expand_abbrev, full_presentation, pure_presentation, ExportFormat, Presentation,
};
pub use word::{free_reduce, parse_word, Gen, Letter, Word};
