//! The two collection-scheme masks and the gradient they produce.

use std::f64::consts::PI;

use crate::filter::{correlate, Kernel};
use crate::raster::{BorderPolicy, ScalarPlane};

/// A 3x3 coefficient mask, `coefficients[row][col]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mask3x3 {
    pub coefficients: [[f64; 3]; 3],
}

impl Mask3x3 {
    /// Horizontal collection mask.
    pub const FX: Mask3x3 = Mask3x3 {
        coefficients: [[3.0, 4.0, 4.0], [3.0, 4.0, 5.0], [4.0, 4.0, 4.0]],
    };

    /// Vertical collection mask.
    pub const FY: Mask3x3 = Mask3x3 {
        coefficients: [[3.0, 4.0, 4.0], [4.0, 4.0, 3.0], [4.0, 4.0, 4.0]],
    };

    pub fn sum(&self) -> f64 {
        self.coefficients.iter().flatten().sum()
    }

    /// The mask with its mean coefficient subtracted (zero DC gain).
    pub fn zero_mean(&self) -> Self {
        let mean = self.sum() / 9.0;
        Self {
            coefficients: self.coefficients.map(|row| row.map(|c| c - mean)),
        }
    }

    /// Row-major coefficients rotated half a turn, which turns a correlation
    /// into a convolution.
    fn flipped(&self) -> [f64; 9] {
        let mut out = [0.0; 9];
        for (i, c) in self.coefficients.iter().flatten().rev().enumerate() {
            out[i] = *c;
        }
        out
    }
}

/// Gradient magnitude and direction planes.
///
/// Directions are `atan2(gy, gx)` in `(-pi, pi]` with `x` to the right and
/// `y` down.
#[derive(Debug, Clone, PartialEq)]
pub struct GradientField {
    pub magnitude: ScalarPlane,
    pub direction: ScalarPlane,
}

impl GradientField {
    pub(crate) fn from_components(width: usize, height: usize, g: &[[f64; 2]]) -> Self {
        let magnitude = g.iter().map(|&[gx, gy]| gx.hypot(gy)).collect();
        let direction = g
            .iter()
            .map(|&[gx, gy]| {
                let a = gy.atan2(gx);
                if a <= -PI {
                    PI
                } else {
                    a
                }
            })
            .collect();
        Self {
            magnitude: ScalarPlane::from_raw(width, height, magnitude),
            direction: ScalarPlane::from_raw(width, height, direction),
        }
    }

    pub fn width(&self) -> usize {
        self.magnitude.width()
    }

    pub fn height(&self) -> usize {
        self.magnitude.height()
    }
}

/// Convolves `plane` with `fx` and `fy`.
///
/// Mask cell `(r, c)` weighs plane pixel `(x + 1 - c, y + 1 - r)`, so a unit
/// impulse reproduces each mask unchanged around it.
pub fn apply_mask_pair(
    plane: &ScalarPlane,
    fx: &Mask3x3,
    fy: &Mask3x3,
    border: BorderPolicy,
) -> GradientField {
    let (kx, ky) = (fx.flipped(), fy.flipped());
    let g = correlate(
        plane,
        [Kernel::centered3(&kx), Kernel::centered3(&ky)],
        border,
    );
    GradientField::from_components(plane.width(), plane.height(), &g)
}

/// Gradient of `plane` under the built-in [`Mask3x3::FX`] / [`Mask3x3::FY`].
pub fn apply_masks(plane: &ScalarPlane, border: BorderPolicy) -> GradientField {
    apply_mask_pair(plane, &Mask3x3::FX, &Mask3x3::FY, border)
}
