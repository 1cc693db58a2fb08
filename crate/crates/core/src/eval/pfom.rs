use serde::Serialize;

use super::distance::squared_distance_transform;
use crate::error::{Error, Result};
use crate::raster::EdgeMap;

/// The customary scaling constant of the figure of merit.
pub const DEFAULT_M: f64 = 1.0 / 9.0;

/// Pratt's figure of merit with the counts it was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PfomResult {
    #[serde(rename = "pfom")]
    pub score: f64,
    /// Ground-truth edge pixels.
    pub n_actual: usize,
    /// Detected edge pixels.
    pub n_detected: usize,
    pub m: f64,
}

/// `R = 1 / max(N_I, N_A) * sum_k 1 / (1 + m d(k)^2)`, where the sum runs over
/// detected pixels and `d(k)` is the distance to the nearest true edge.
///
/// An empty detection or an empty ground truth scores 0; both empty is an
/// error.
pub fn pfom(detected: &EdgeMap, actual: &EdgeMap, m: f64) -> Result<PfomResult> {
    if (detected.width(), detected.height()) != (actual.width(), actual.height()) {
        return Err(Error::DimensionMismatch(
            detected.width(),
            detected.height(),
            actual.width(),
            actual.height(),
        ));
    }
    if !(m >= 0.0 && m.is_finite()) {
        return Err(Error::InvalidParams(format!(
            "scaling constant must be non-negative, got {m}"
        )));
    }
    let n_actual = actual.count();
    let n_detected = detected.count();
    let result = |score| PfomResult {
        score,
        n_actual,
        n_detected,
        m,
    };
    match (n_actual, n_detected) {
        (0, 0) => return Err(Error::BothEmpty),
        (0, _) | (_, 0) => return Ok(result(0.0)),
        _ => {}
    }
    let dist2 = squared_distance_transform(actual)?;
    let sum: f64 = detected
        .bits()
        .iter()
        .zip(&dist2)
        .filter(|(&b, _)| b)
        .map(|(_, &d2)| 1.0 / (1.0 + m * d2 as f64))
        .sum();
    Ok(result(sum / n_actual.max(n_detected) as f64))
}
