//! The vector-order-statistics color edge detector.
//!
//! Pipeline: vector range of every 3x3 window ([`vr_field`]), gradient under
//! the collection masks ([`apply_masks`]), non-maximum suppression along the
//! quantized gradient ([`non_max_suppress`]) and a threshold relative to the
//! strongest surviving response ([`threshold`]).

mod mask;
mod nms;
mod order;

pub use crate::raster::Window3x3;
pub use mask::{apply_mask_pair, apply_masks, GradientField, Mask3x3};
pub use nms::{
    non_max_suppress, non_max_suppress_with_border, quantize_direction, threshold, Direction4,
};
pub use order::{
    aggregate_order, distance_set, pixel_distance, vector_range, vr_field, DistanceSet,
};

use crate::error::{check_fraction, Result};
use crate::raster::{BorderPolicy, ColorImage, EdgeMap, ScalarPlane};

/// Parameters of [`detect_edges`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VosParams {
    /// Fraction of the largest suppressed magnitude a pixel must exceed.
    pub threshold: f64,
    pub border: BorderPolicy,
    /// Require a strict local maximum in non-maximum suppression.
    pub strict_nms: bool,
    /// Subtract the mean coefficient from both masks before filtering.
    pub zero_mean_masks: bool,
}

impl Default for VosParams {
    fn default() -> Self {
        Self {
            threshold: 0.2,
            border: BorderPolicy::Replicate,
            strict_nms: true,
            zero_mean_masks: false,
        }
    }
}

impl VosParams {
    pub fn validate(&self) -> Result<()> {
        check_fraction(self.threshold)
    }

    fn masks(&self) -> (Mask3x3, Mask3x3) {
        if self.zero_mean_masks {
            (Mask3x3::FX.zero_mean(), Mask3x3::FY.zero_mean())
        } else {
            (Mask3x3::FX, Mask3x3::FY)
        }
    }
}

/// Suppressed gradient magnitude before thresholding.
pub fn edge_strength(img: &ColorImage, params: &VosParams) -> Result<ScalarPlane> {
    params.validate()?;
    let vr = vr_field(img, params.border);
    let (fx, fy) = params.masks();
    let gradient = apply_mask_pair(&vr, &fx, &fy, params.border);
    Ok(non_max_suppress_with_border(
        &gradient,
        params.strict_nms,
        params.border,
    ))
}

/// Runs the full detector and returns the binary edge map.
pub fn detect_edges(img: &ColorImage, params: &VosParams) -> Result<EdgeMap> {
    threshold(&edge_strength(img, params)?, params.threshold)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raster::PixelVector;

    fn color_step(w: usize, h: usize) -> ColorImage {
        ColorImage::from_fn(w, h, |x, _| {
            if x < w / 2 {
                PixelVector::new(255, 0, 0)
            } else {
                PixelVector::new(0, 0, 255)
            }
        })
    }

    #[test]
    fn flat_image_has_no_edges() {
        let img = ColorImage::filled(16, 12, PixelVector::new(12, 200, 77));
        for border in [BorderPolicy::Replicate, BorderPolicy::Reflect] {
            let p = VosParams {
                border,
                threshold: 0.0,
                ..Default::default()
            };
            assert!(detect_edges(&img, &p).unwrap().is_empty());
        }
    }

    #[test]
    fn step_is_marked_on_the_boundary() {
        let img = color_step(64, 64);
        let edges = detect_edges(&img, &VosParams::default()).unwrap();
        for y in 0..64 {
            let cols: Vec<usize> = (0..64).filter(|&x| edges.get(x, y)).collect();
            assert!(!cols.is_empty(), "row {y} has no edge");
            assert!(
                cols.iter().all(|&x| (31..=33).contains(&x)),
                "row {y}: {cols:?}"
            );
        }
    }

    #[test]
    fn rejects_bad_threshold() {
        let img = color_step(4, 4);
        let p = VosParams {
            threshold: 1.2,
            ..Default::default()
        };
        assert!(detect_edges(&img, &p).is_err());
    }

    #[test]
    fn zero_mean_masks_still_quiet_on_flat_regions() {
        let img = ColorImage::filled(8, 8, PixelVector::new(1, 2, 3));
        let p = VosParams {
            zero_mean_masks: true,
            ..Default::default()
        };
        assert!(detect_edges(&img, &p).unwrap().is_empty());
        assert!(!detect_edges(&color_step(16, 16), &p).unwrap().is_empty());
    }

    #[test]
    fn field_is_rotation_equivariant() {
        let img = ColorImage::from_fn(9, 7, |x, y| {
            PixelVector::new(
                (x * 37 % 256) as u8,
                (y * 91 % 256) as u8,
                ((x * y) * 13 % 256) as u8,
            )
        });
        let rotated = vr_field(&img.rotate90(), BorderPolicy::Replicate);
        let field = vr_field(&img, BorderPolicy::Replicate);
        let h = img.height();
        for y in 0..img.height() {
            for x in 0..img.width() {
                // (x, y) lands on (h - 1 - y, x) after a clockwise turn.
                assert_eq!(rotated.get(h - 1 - y, x), field.get(x, y));
            }
        }
    }
}
