//! Color edge detection with vector order statistics.
//!
//! The detector ranks the RGB vectors of every 3x3 window by aggregate
//! Euclidean distance, takes the vector range between the extremes of that
//! ranking, filters the resulting plane with two fixed 3x3 collection masks,
//! thins the response with non-maximum suppression and thresholds it.
//! Sobel, Prewitt, Roberts, Laplacian and Canny run on a grayscale copy as
//! baselines, and the [`eval`] module scores any detector with Pratt's
//! figure of merit against synthetic ground truth.

pub mod baselines;
pub mod error;
pub mod eval;
mod filter;
mod parallel;
pub mod raster;
pub mod vos;

pub use error::{Error, Result};
pub use parallel::with_workers;
pub use raster::{
    extract_window, load_edge_map, load_image, save_image, to_grayscale, BorderPolicy, ColorImage,
    EdgeMap, GrayImage, PixelVector, RasterRef, ScalarPlane, Window3x3,
};

/// Code blocks from the guide in `book/`, compiled as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/data-model.md")]
    mod data_model {}
    #[doc = include_str!("../../../book/src/vector-order.md")]
    mod vector_order {}
    #[doc = include_str!("../../../book/src/masks-and-nms.md")]
    mod masks_and_nms {}
    #[doc = include_str!("../../../book/src/baselines.md")]
    mod baselines {}
    #[doc = include_str!("../../../book/src/evaluation.md")]
    mod evaluation {}
    #[doc = include_str!("../../../book/src/parallelism.md")]
    mod parallelism {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
