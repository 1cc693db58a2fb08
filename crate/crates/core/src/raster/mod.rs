//! Raster data model: color images as fields of RGB vectors, real-valued
//! planes, grayscale images and binary edge maps.
//!
//! Every raster is stored row-major, index `y * width + x`.

mod io;
pub(crate) mod window;

pub use io::{load_edge_map, load_image, save_image, RasterRef};
pub use window::{extract_window, Window3x3};

use crate::error::{Error, Result};

/// One pixel of a color image, the vector `(R, G, B)` with 8 bits per channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PixelVector {
    pub r: u8,
    pub g: u8,
    pub b: u8,
}

impl PixelVector {
    pub const BLACK: PixelVector = PixelVector::new(0, 0, 0);
    pub const WHITE: PixelVector = PixelVector::new(255, 255, 255);

    pub const fn new(r: u8, g: u8, b: u8) -> Self {
        Self { r, g, b }
    }

    pub const fn channels(self) -> [u8; 3] {
        [self.r, self.g, self.b]
    }

    /// Integer BT.601 luma scaled by 1000, exact for every pixel.
    pub const fn luma_millis(self) -> u32 {
        299 * self.r as u32 + 587 * self.g as u32 + 114 * self.b as u32
    }
}

impl From<[u8; 3]> for PixelVector {
    fn from([r, g, b]: [u8; 3]) -> Self {
        Self { r, g, b }
    }
}

/// How samples outside the image are synthesized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BorderPolicy {
    /// Clamp to the nearest in-image pixel.
    #[default]
    Replicate,
    /// Mirror about the outermost pixel without repeating it (`-1 -> 1`).
    Reflect,
    /// Treat everything outside the image as zero.
    ZeroPad,
}

impl BorderPolicy {
    /// Maps a possibly out-of-range coordinate on an axis of length `len` to
    /// an in-range one, or `None` when the sample is zero.
    pub fn resolve(self, i: isize, len: usize) -> Option<usize> {
        debug_assert!(len > 0);
        let n = len as isize;
        if (0..n).contains(&i) {
            return Some(i as usize);
        }
        match self {
            BorderPolicy::Replicate => Some(i.clamp(0, n - 1) as usize),
            BorderPolicy::ZeroPad => None,
            BorderPolicy::Reflect => {
                if n == 1 {
                    return Some(0);
                }
                let period = 2 * (n - 1);
                let m = i.rem_euclid(period);
                Some(if m < n { m } else { period - m } as usize)
            }
        }
    }
}

fn check_dims(width: usize, height: usize, len: usize) -> Result<()> {
    if width == 0 || height == 0 {
        return Err(Error::InvalidRaster(format!(
            "dimensions must be positive, got {width}x{height}"
        )));
    }
    if width.checked_mul(height) != Some(len) {
        return Err(Error::InvalidRaster(format!(
            "{len} samples do not fill a {width}x{height} raster"
        )));
    }
    Ok(())
}

/// Color image: maps each pixel position to a [`PixelVector`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorImage {
    width: usize,
    height: usize,
    pixels: Vec<PixelVector>,
}

impl ColorImage {
    pub fn new(width: usize, height: usize, pixels: Vec<PixelVector>) -> Result<Self> {
        check_dims(width, height, pixels.len())?;
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn filled(width: usize, height: usize, pixel: PixelVector) -> Self {
        Self::new(width, height, vec![pixel; width * height]).expect("non-empty image")
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> PixelVector) -> Self {
        let pixels = (0..height)
            .flat_map(|y| (0..width).map(move |x| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Self::new(width, height, pixels).expect("non-empty image")
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[PixelVector] {
        &self.pixels
    }

    pub fn get(&self, x: usize, y: usize) -> PixelVector {
        self.pixels[y * self.width + x]
    }

    /// Rotates the image a quarter turn clockwise.
    pub fn rotate90(&self) -> Self {
        let (w, h) = (self.width, self.height);
        Self::from_fn(h, w, |x, y| self.get(y, h - 1 - x))
    }
}

/// Real-valued raster used for intermediate fields (vector range, gradient
/// magnitude, distances).
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarPlane {
    width: usize,
    height: usize,
    values: Vec<f64>,
}

impl ScalarPlane {
    pub fn new(width: usize, height: usize, values: Vec<f64>) -> Result<Self> {
        check_dims(width, height, values.len())?;
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidRaster(format!("non-finite sample {v}")));
        }
        Ok(Self {
            width,
            height,
            values,
        })
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn zeros(width: usize, height: usize) -> Self {
        Self::new(width, height, vec![0.0; width * height]).expect("non-empty plane")
    }

    /// # Panics
    /// If either dimension is zero or `f` yields a non-finite value.
    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let values = (0..height)
            .flat_map(|y| (0..width).map(move |x| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Self::new(width, height, values).expect("valid plane")
    }

    pub(crate) fn from_raw(width: usize, height: usize, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), width * height);
        debug_assert!(values.iter().all(|v| v.is_finite()));
        Self {
            width,
            height,
            values,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.values[y * self.width + x]
    }

    /// Largest sample, or `0.0` for a plane with only non-positive samples.
    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }
}

/// Grayscale image with real intensities in `[0, 255]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    values: Vec<f64>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, values: Vec<f64>) -> Result<Self> {
        check_dims(width, height, values.len())?;
        if let Some(v) = values.iter().find(|v| !(0.0..=255.0).contains(*v)) {
            return Err(Error::InvalidRaster(format!(
                "gray value {v} outside [0, 255]"
            )));
        }
        Ok(Self {
            width,
            height,
            values,
        })
    }

    /// # Panics
    /// If either dimension is zero or `f` yields a value outside `[0, 255]`.
    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let values = (0..height)
            .flat_map(|y| (0..width).map(move |x| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Self::new(width, height, values).expect("valid gray image")
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.values[y * self.width + x]
    }

    pub(crate) fn as_plane(&self) -> ScalarPlane {
        ScalarPlane::from_raw(self.width, self.height, self.values.clone())
    }
}

/// Converts to gray with BT.601 luma weights `0.299 R + 0.587 G + 0.114 B`.
///
/// The weighted sum is formed in integers and divided once, so two colors
/// with equal luma always produce bit-identical gray values.
pub fn to_grayscale(img: &ColorImage) -> GrayImage {
    let values = img
        .pixels()
        .iter()
        .map(|p| f64::from(p.luma_millis()) / 1000.0)
        .collect();
    GrayImage {
        width: img.width(),
        height: img.height(),
        values,
    }
}

/// Binary raster, `true` marks an edge pixel.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeMap {
    width: usize,
    height: usize,
    bits: Vec<bool>,
}

impl EdgeMap {
    pub fn new(width: usize, height: usize, bits: Vec<bool>) -> Result<Self> {
        check_dims(width, height, bits.len())?;
        Ok(Self {
            width,
            height,
            bits,
        })
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn empty(width: usize, height: usize) -> Self {
        Self::new(width, height, vec![false; width * height]).expect("non-empty map")
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let bits = (0..height)
            .flat_map(|y| (0..width).map(move |x| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Self::new(width, height, bits).expect("non-empty map")
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.width + x]
    }

    pub fn set(&mut self, x: usize, y: usize, edge: bool) {
        self.bits[y * self.width + x] = edge;
    }

    /// Number of edge pixels.
    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.contains(&true)
    }

    /// Edge pixel coordinates in row-major order.
    pub fn edge_pixels(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let w = self.width;
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(i, _)| (i % w, i / w))
    }

    /// Rotates the map a quarter turn clockwise.
    pub fn rotate90(&self) -> Self {
        let (w, h) = (self.width, self.height);
        Self::from_fn(h, w, |x, y| self.get(y, h - 1 - x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grayscale_reference_values() {
        let img = ColorImage::new(
            3,
            1,
            vec![
                PixelVector::WHITE,
                PixelVector::BLACK,
                PixelVector::new(255, 0, 0),
            ],
        )
        .unwrap();
        let g = to_grayscale(&img);
        assert_eq!(g.values()[0], 255.0);
        assert_eq!(g.values()[1], 0.0);
        assert!((g.values()[2] - 0.299 * 255.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert!(ColorImage::new(0, 1, vec![]).is_err());
        assert!(ColorImage::new(2, 2, vec![PixelVector::BLACK; 3]).is_err());
        assert!(ScalarPlane::new(1, 1, vec![f64::NAN]).is_err());
        assert!(GrayImage::new(1, 1, vec![256.0]).is_err());
        assert!(EdgeMap::new(2, 1, vec![true]).is_err());
    }

    #[test]
    fn border_resolution() {
        use BorderPolicy::*;
        assert_eq!(Replicate.resolve(-1, 5), Some(0));
        assert_eq!(Replicate.resolve(5, 5), Some(4));
        assert_eq!(Reflect.resolve(-1, 5), Some(1));
        assert_eq!(Reflect.resolve(-3, 5), Some(3));
        assert_eq!(Reflect.resolve(5, 5), Some(3));
        assert_eq!(Reflect.resolve(-1, 1), Some(0));
        assert_eq!(ZeroPad.resolve(-1, 5), None);
        assert_eq!(ZeroPad.resolve(2, 5), Some(2));
    }

    #[test]
    fn rotation_moves_top_left_to_top_right() {
        let img = ColorImage::from_fn(3, 2, |x, y| PixelVector::new(x as u8, y as u8, 0));
        let r = img.rotate90();
        assert_eq!((r.width(), r.height()), (2, 3));
        assert_eq!(r.get(1, 0), img.get(0, 0));
        assert_eq!(r.get(0, 0), img.get(0, 1));
        assert_eq!(img.rotate90().rotate90().rotate90().rotate90(), img);
    }

    #[test]
    fn edge_map_counting() {
        let mut m = EdgeMap::empty(4, 3);
        assert!(m.is_empty());
        m.set(1, 2, true);
        m.set(3, 0, true);
        assert_eq!(m.count(), 2);
        assert_eq!(m.edge_pixels().collect::<Vec<_>>(), vec![(3, 0), (1, 2)]);
    }
}
