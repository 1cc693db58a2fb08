//! Edge-map evaluation: Pratt's figure of merit, the distance transform it
//! relies on, synthetic ground truth and multi-detector comparison.

mod compare;
mod distance;
mod pfom;
mod synth;

pub use compare::{
    compare_detectors, ComparisonRow, ComparisonTable, Detector, DetectorConfig, PUBLISHED_SCORES,
};
pub use distance::{distance_transform, squared_distance_transform};
pub use pfom::{pfom, PfomResult, DEFAULT_M};
pub use synth::{generate_synthetic, EdgeProfile, Orientation, SyntheticSpec};
