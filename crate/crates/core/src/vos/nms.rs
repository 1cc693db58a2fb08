//! Four-direction non-maximum suppression and relative thresholding.

use std::f64::consts::PI;

use super::mask::GradientField;
use crate::error::{check_fraction, Result};
use crate::parallel::map_pixels;
use crate::raster::{BorderPolicy, EdgeMap, ScalarPlane};

/// Gradient direction quantized to the four axes through the 8-neighborhood.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction4 {
    /// 0 degrees
    Horizontal,
    /// 45 degrees
    Diagonal45,
    /// 90 degrees
    Vertical,
    /// 135 degrees
    Diagonal135,
}

impl Direction4 {
    /// Offsets `(dx, dy)` of the two neighbors along the gradient, with `y`
    /// pointing down: a 45 degree gradient runs from the north-west to the
    /// south-east neighbor.
    pub fn neighbor_offsets(self) -> [(isize, isize); 2] {
        match self {
            Direction4::Horizontal => [(-1, 0), (1, 0)],
            Direction4::Vertical => [(0, -1), (0, 1)],
            Direction4::Diagonal45 => [(-1, -1), (1, 1)],
            Direction4::Diagonal135 => [(1, -1), (-1, 1)],
        }
    }
}

/// Bins `theta mod pi` into 45 degree sectors centered on the four axes.
pub fn quantize_direction(theta: f64) -> Direction4 {
    let deg = theta.rem_euclid(PI).to_degrees();
    if !(22.5..157.5).contains(&deg) {
        Direction4::Horizontal
    } else if deg < 67.5 {
        Direction4::Diagonal45
    } else if deg < 112.5 {
        Direction4::Vertical
    } else {
        Direction4::Diagonal135
    }
}

/// Keeps a magnitude only where it is a local maximum along its gradient.
///
/// With `strict` a pixel must exceed both neighbors; otherwise it must be at
/// least as large as both and larger than one. Neighbors outside the image
/// are replicated from the border.
pub fn non_max_suppress(g: &GradientField, strict: bool) -> ScalarPlane {
    non_max_suppress_with_border(g, strict, BorderPolicy::Replicate)
}

/// [`non_max_suppress`] with neighbors outside the image synthesized by
/// `border`. A neighbor that resolves back onto the pixel itself is skipped.
pub fn non_max_suppress_with_border(
    g: &GradientField,
    strict: bool,
    border: BorderPolicy,
) -> ScalarPlane {
    let (w, h) = (g.width(), g.height());
    let mag = &g.magnitude;
    let values = map_pixels(w, h, |x, y| {
        let m = mag.get(x, y);
        if m == 0.0 {
            return 0.0;
        }
        let dir = quantize_direction(g.direction.get(x, y));
        let mut any_neighbor = false;
        let mut exceeds_one = false;
        for (dx, dy) in dir.neighbor_offsets() {
            let n = match (
                border.resolve(x as isize + dx, w),
                border.resolve(y as isize + dy, h),
            ) {
                (Some(nx), Some(ny)) if (nx, ny) == (x, y) => continue,
                (Some(nx), Some(ny)) => mag.get(nx, ny),
                _ => 0.0,
            };
            any_neighbor = true;
            if m < n || (strict && m == n) {
                return 0.0;
            }
            exceeds_one |= m > n;
        }
        if strict || exceeds_one || !any_neighbor {
            m
        } else {
            0.0
        }
    });
    ScalarPlane::from_raw(w, h, values)
}

/// Marks pixels strictly above `t * max(plane)`. A plane whose maximum is not
/// positive yields no edges.
pub fn threshold(plane: &ScalarPlane, t: f64) -> Result<EdgeMap> {
    check_fraction(t)?;
    let max = plane.max();
    let cut = t * max;
    let bits = plane
        .values()
        .iter()
        .map(|&v| max > 0.0 && v > cut)
        .collect();
    EdgeMap::new(plane.width(), plane.height(), bits)
}
