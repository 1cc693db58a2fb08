//! Reduced (aggregate-distance) ordering of the RGB vectors in a window.

use crate::parallel::map_pixels;
use crate::raster::Window3x3;
use crate::raster::{window::window_unchecked, BorderPolicy, ColorImage, PixelVector, ScalarPlane};

/// Euclidean distance between two pixels in RGB space.
#[inline]
pub fn pixel_distance(a: PixelVector, b: PixelVector) -> f64 {
    let dr = i32::from(a.r) - i32::from(b.r);
    let dg = i32::from(a.g) - i32::from(b.g);
    let db = i32::from(a.b) - i32::from(b.b);
    f64::from(dr * dr + dg * dg + db * db).sqrt()
}

/// Aggregate distance of each window cell to every cell of the window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceSet {
    pub scores: [f64; 9],
}

/// `scores[i] = sum_j pixel_distance(cells[i], cells[j])`.
///
/// Each pairwise distance is computed once and credited to both cells; the
/// terms of every sum still arrive in ascending `j`.
pub fn distance_set(w: &Window3x3) -> DistanceSet {
    let mut scores = [0.0; 9];
    for i in 0..9 {
        for j in i + 1..9 {
            let d = pixel_distance(w.cells[i], w.cells[j]);
            scores[i] += d;
            scores[j] += d;
        }
    }
    DistanceSet { scores }
}

/// Cell indices sorted by ascending aggregate distance, ties by index.
///
/// The first entry is the most central vector of the window (the vector
/// median), the last the most outlying one.
pub fn aggregate_order(w: &Window3x3) -> [usize; 9] {
    let DistanceSet { scores } = distance_set(w);
    let mut order = [0, 1, 2, 3, 4, 5, 6, 7, 8];
    order.sort_by(|&i, &j| scores[i].total_cmp(&scores[j]).then(i.cmp(&j)));
    order
}

/// Distance between the lowest- and highest-ranked vectors of the window.
pub fn vector_range(w: &Window3x3) -> f64 {
    let DistanceSet { scores } = distance_set(w);
    let (mut lo, mut hi) = (0, 0);
    for i in 1..9 {
        if scores[i] < scores[lo] {
            lo = i;
        }
        if scores[i] >= scores[hi] {
            hi = i;
        }
    }
    pixel_distance(w.cells[hi], w.cells[lo])
}

/// Vector range of the window around every pixel.
pub fn vr_field(img: &ColorImage, border: BorderPolicy) -> ScalarPlane {
    let values = map_pixels(img.width(), img.height(), |x, y| {
        vector_range(&window_unchecked(img, x, y, border))
    });
    ScalarPlane::from_raw(img.width(), img.height(), values)
}
