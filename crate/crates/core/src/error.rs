use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the detectors, the image codecs and the evaluation harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("file not found: {0}")]
    FileNotFound(PathBuf),

    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),

    #[error("corrupt image data: {0}")]
    CorruptData(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("pixel ({x}, {y}) is outside a {width}x{height} image")]
    OutOfBounds {
        x: usize,
        y: usize,
        width: usize,
        height: usize,
    },

    #[error("threshold {0} is outside [0, 1]")]
    InvalidThreshold(f64),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid raster: {0}")]
    InvalidRaster(String),

    #[error("ground truth has no edge pixels")]
    EmptyTruth,

    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),

    #[error("both edge maps are empty")]
    BothEmpty,

    #[error("invalid synthetic spec: {0}")]
    InvalidSpec(String),

    #[error("report serialization failed: {0}")]
    Report(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_fraction(t: f64) -> Result<()> {
    if (0.0..=1.0).contains(&t) {
        Ok(())
    } else {
        Err(Error::InvalidThreshold(t))
    }
}
