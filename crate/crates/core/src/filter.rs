//! Small-kernel correlation over real planes.

use crate::parallel::map_pixels;
use crate::raster::{BorderPolicy, ScalarPlane};

/// Row-major kernel whose cell `(ax, ay)` sits on the output pixel.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Kernel<'a> {
    pub width: usize,
    pub height: usize,
    pub anchor_x: usize,
    pub anchor_y: usize,
    pub coeffs: &'a [f64],
}

impl<'a> Kernel<'a> {
    pub fn centered3(coeffs: &'a [f64; 9]) -> Self {
        Self {
            width: 3,
            height: 3,
            anchor_x: 1,
            anchor_y: 1,
            coeffs,
        }
    }
}

#[inline]
fn sample(plane: &ScalarPlane, x: isize, y: isize, border: BorderPolicy) -> f64 {
    match (
        border.resolve(x, plane.width()),
        border.resolve(y, plane.height()),
    ) {
        (Some(x), Some(y)) => plane.get(x, y),
        _ => 0.0,
    }
}

/// `out(x, y) = sum k[r][c] * plane(y + r - ay, x + c - ax)` for each kernel
/// in `kernels`, evaluated in one pass. Taps are accumulated row-major.
///
/// Kernels whose coefficients sum to zero are applied to differences from the
/// anchor sample, so a flat patch yields exactly `0.0` instead of rounding
/// residue.
pub(crate) fn correlate<const N: usize>(
    plane: &ScalarPlane,
    kernels: [Kernel<'_>; N],
    border: BorderPolicy,
) -> Vec<[f64; N]> {
    let (w, h) = (plane.width(), plane.height());
    let values = plane.values();
    let zero_sum = kernels.map(|k| k.coeffs.iter().sum::<f64>() == 0.0);
    map_pixels(w, h, |x, y| {
        let mut acc = [0.0; N];
        for ((k, out), &zero_sum) in kernels.iter().zip(acc.iter_mut()).zip(&zero_sum) {
            let reference = if zero_sum { values[y * w + x] } else { 0.0 };
            let inside = x >= k.anchor_x
                && y >= k.anchor_y
                && x + k.width - k.anchor_x <= w
                && y + k.height - k.anchor_y <= h;
            let mut s = 0.0;
            for r in 0..k.height {
                for c in 0..k.width {
                    let coef = k.coeffs[r * k.width + c];
                    let v = if inside {
                        values[(y + r - k.anchor_y) * w + x + c - k.anchor_x]
                    } else {
                        sample(
                            plane,
                            (x + c) as isize - k.anchor_x as isize,
                            (y + r) as isize - k.anchor_y as isize,
                            border,
                        )
                    };
                    s += coef * (v - reference);
                }
            }
            *out = s;
        }
        acc
    })
}

/// Separable correlation with a symmetric 1-D kernel along both axes.
pub(crate) fn separable(plane: &ScalarPlane, taps: &[f64], border: BorderPolicy) -> ScalarPlane {
    let radius = taps.len() / 2;
    let horizontal = Kernel {
        width: taps.len(),
        height: 1,
        anchor_x: radius,
        anchor_y: 0,
        coeffs: taps,
    };
    let vertical = Kernel {
        width: 1,
        height: taps.len(),
        anchor_x: 0,
        anchor_y: radius,
        coeffs: taps,
    };
    let (w, h) = (plane.width(), plane.height());
    let pass = |p: &ScalarPlane, k: Kernel<'_>| {
        let v = correlate(p, [k], border).into_iter().map(|[v]| v).collect();
        ScalarPlane::from_raw(w, h, v)
    };
    pass(&pass(plane, horizontal), vertical)
}
