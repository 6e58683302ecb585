//! Construction and exact verification of cross Z-complementary pairs.
//!
//! Sequences are stored as exponents over Z_q and every correlation is
//! evaluated exactly in Z[ω], so zone widths never depend on a float
//! tolerance.

pub mod barker;
pub mod correlation;
pub mod cyclotomic;
pub mod error;
pub mod gbf;
pub mod golay;
pub mod insertion;
pub mod numfmt;
pub mod seq;
pub mod training;
pub mod verify;

pub use correlation::{auto_corr, cross_corr, profile, CorrelationProfile};
pub use cyclotomic::CyclotomicValue;
pub use error::{Error, Result};
pub use gbf::BooleanFunction;
pub use golay::GcpRecipe;
pub use insertion::{InsertionSpec, OddFamily};
pub use seq::{Sequence, SequencePair};
pub use training::TrainingMatrix;
pub use verify::{verify, Classification, CzcpReport};
