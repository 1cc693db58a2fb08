//! Traditional single-channel detectors, run on the BT.601 grayscale copy of
//! a color image.

use std::fmt;
use std::str::FromStr;

use crate::error::{check_fraction, Error, Result};
use crate::filter::{correlate, separable, Kernel};
use crate::raster::{to_grayscale, BorderPolicy, ColorImage, EdgeMap, GrayImage, ScalarPlane};
use crate::vos::{non_max_suppress, threshold, GradientField};

const BORDER: BorderPolicy = BorderPolicy::Replicate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaselineKind {
    Sobel,
    Prewitt,
    Roberts,
    Laplacian,
    Canny,
}

impl BaselineKind {
    pub const ALL: [BaselineKind; 5] = [
        BaselineKind::Sobel,
        BaselineKind::Prewitt,
        BaselineKind::Roberts,
        BaselineKind::Laplacian,
        BaselineKind::Canny,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BaselineKind::Sobel => "sobel",
            BaselineKind::Prewitt => "prewitt",
            BaselineKind::Roberts => "roberts",
            BaselineKind::Laplacian => "laplacian",
            BaselineKind::Canny => "canny",
        }
    }
}

impl fmt::Display for BaselineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BaselineKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BaselineKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParams(format!("unknown baseline detector {s:?}")))
    }
}

/// First-derivative operator pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GradientOperator {
    Sobel,
    Prewitt,
    Roberts,
}

impl GradientOperator {
    fn kernels(self) -> [Kernel<'static>; 2] {
        const SOBEL_X: [f64; 9] = [-1.0, 0.0, 1.0, -2.0, 0.0, 2.0, -1.0, 0.0, 1.0];
        const SOBEL_Y: [f64; 9] = [-1.0, -2.0, -1.0, 0.0, 0.0, 0.0, 1.0, 2.0, 1.0];
        const PREWITT_X: [f64; 9] = [-1.0, 0.0, 1.0, -1.0, 0.0, 1.0, -1.0, 0.0, 1.0];
        const PREWITT_Y: [f64; 9] = [-1.0, -1.0, -1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0];
        const ROBERTS_X: [f64; 4] = [1.0, 0.0, 0.0, -1.0];
        const ROBERTS_Y: [f64; 4] = [0.0, 1.0, -1.0, 0.0];
        let roberts = |coeffs: &'static [f64]| Kernel {
            width: 2,
            height: 2,
            anchor_x: 0,
            anchor_y: 0,
            coeffs,
        };
        match self {
            GradientOperator::Sobel => [Kernel::centered3(&SOBEL_X), Kernel::centered3(&SOBEL_Y)],
            GradientOperator::Prewitt => {
                [Kernel::centered3(&PREWITT_X), Kernel::centered3(&PREWITT_Y)]
            }
            GradientOperator::Roberts => [roberts(&ROBERTS_X), roberts(&ROBERTS_Y)],
        }
    }
}

impl TryFrom<BaselineKind> for GradientOperator {
    type Error = Error;

    fn try_from(kind: BaselineKind) -> Result<Self> {
        match kind {
            BaselineKind::Sobel => Ok(GradientOperator::Sobel),
            BaselineKind::Prewitt => Ok(GradientOperator::Prewitt),
            BaselineKind::Roberts => Ok(GradientOperator::Roberts),
            other => Err(Error::InvalidParams(format!(
                "{other} is not a first-derivative operator"
            ))),
        }
    }
}

/// Parameters of [`canny_baseline`]. Both ratios are fractions of the largest
/// gradient magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CannyParams {
    pub gaussian_sigma: f64,
    pub low_ratio: f64,
    pub high_ratio: f64,
}

impl Default for CannyParams {
    fn default() -> Self {
        Self {
            gaussian_sigma: 1.0,
            low_ratio: 0.10,
            high_ratio: 0.25,
        }
    }
}

impl CannyParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.gaussian_sigma > 0.0 && self.gaussian_sigma.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "gaussian sigma must be positive, got {}",
                self.gaussian_sigma
            )));
        }
        if !(0.0 < self.low_ratio && self.low_ratio < self.high_ratio && self.high_ratio < 1.0) {
            return Err(Error::InvalidThreshold(
                if (0.0..1.0).contains(&self.low_ratio) {
                    self.high_ratio
                } else {
                    self.low_ratio
                },
            ));
        }
        Ok(())
    }
}

/// Gradient of a gray image under a derivative operator pair.
pub fn gradient(img: &GrayImage, op: GradientOperator) -> GradientField {
    gradient_of(&img.as_plane(), op)
}

fn gradient_of(plane: &ScalarPlane, op: GradientOperator) -> GradientField {
    let g = correlate(plane, op.kernels(), BORDER);
    GradientField::from_components(plane.width(), plane.height(), &g)
}

/// Thresholded gradient magnitude: edge where `|G| > t * max |G|`.
pub fn gradient_baseline(img: &GrayImage, op: GradientOperator, t: f64) -> Result<EdgeMap> {
    check_fraction(t)?;
    threshold(&gradient(img, op).magnitude, t)
}

/// Absolute response of the 4-neighbor Laplacian.
pub fn laplacian_response(img: &GrayImage) -> ScalarPlane {
    const LAPLACIAN: [f64; 9] = [0.0, 1.0, 0.0, 1.0, -4.0, 1.0, 0.0, 1.0, 0.0];
    let plane = img.as_plane();
    let values = correlate(&plane, [Kernel::centered3(&LAPLACIAN)], BORDER)
        .into_iter()
        .map(|[v]| v)
        .collect();
    ScalarPlane::from_raw(img.width(), img.height(), values)
}

/// Edge where `|L| > t * max |L|`; no zero-crossing search.
pub fn laplacian_baseline(img: &GrayImage, t: f64) -> Result<EdgeMap> {
    check_fraction(t)?;
    let response = laplacian_response(img);
    let abs = ScalarPlane::from_raw(
        img.width(),
        img.height(),
        response.values().iter().map(|v| v.abs()).collect(),
    );
    threshold(&abs, t)
}

/// Normalized Gaussian taps truncated at `ceil(3 sigma)`.
pub fn gaussian_taps(sigma: f64) -> Vec<f64> {
    let radius = (3.0 * sigma).ceil() as isize;
    let raw: Vec<f64> = (-radius..=radius)
        .map(|i| (-((i * i) as f64) / (2.0 * sigma * sigma)).exp())
        .collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|v| v / total).collect()
}

/// Intermediate planes of the Canny detector, exposed for inspection.
#[derive(Debug, Clone)]
pub struct CannyStages {
    pub gradient: GradientField,
    pub suppressed: ScalarPlane,
    pub strong: EdgeMap,
    pub edges: EdgeMap,
}

pub fn canny_stages(img: &GrayImage, p: &CannyParams) -> Result<CannyStages> {
    p.validate()?;
    let (w, h) = (img.width(), img.height());
    let smoothed = separable(&img.as_plane(), &gaussian_taps(p.gaussian_sigma), BORDER);
    let gradient = gradient_of(&smoothed, GradientOperator::Sobel);
    let suppressed = non_max_suppress(&gradient, false);

    let max = gradient.magnitude.max();
    let (high, low) = (p.high_ratio * max, p.low_ratio * max);
    let strong_bits: Vec<bool> = suppressed
        .values()
        .iter()
        .map(|&v| max > 0.0 && v > high)
        .collect();
    let weak = |i: usize| max > 0.0 && suppressed.values()[i] > low;

    let mut kept = strong_bits.clone();
    let mut stack: Vec<usize> = (0..w * h).filter(|&i| strong_bits[i]).collect();
    while let Some(i) = stack.pop() {
        let (x, y) = ((i % w) as isize, (i / w) as isize);
        for dy in -1..=1 {
            for dx in -1..=1 {
                let (nx, ny) = (x + dx, y + dy);
                if nx < 0 || ny < 0 || nx >= w as isize || ny >= h as isize {
                    continue;
                }
                let j = ny as usize * w + nx as usize;
                if !kept[j] && weak(j) {
                    kept[j] = true;
                    stack.push(j);
                }
            }
        }
    }

    Ok(CannyStages {
        gradient,
        suppressed,
        strong: EdgeMap::new(w, h, strong_bits)?,
        edges: EdgeMap::new(w, h, kept)?,
    })
}

/// Gaussian smoothing, Sobel gradient, relaxed non-maximum suppression,
/// double threshold and 8-connected hysteresis.
pub fn canny_baseline(img: &GrayImage, p: &CannyParams) -> Result<EdgeMap> {
    Ok(canny_stages(img, p)?.edges)
}

/// Runs a baseline on the grayscale conversion of `img`. `t` is ignored by
/// Canny, `canny` by the others.
pub fn run_baseline(
    img: &ColorImage,
    kind: BaselineKind,
    t: f64,
    canny: &CannyParams,
) -> Result<EdgeMap> {
    let gray = to_grayscale(img);
    match kind {
        BaselineKind::Laplacian => laplacian_baseline(&gray, t),
        BaselineKind::Canny => canny_baseline(&gray, canny),
        other => gradient_baseline(&gray, other.try_into()?, t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raster::PixelVector;
    use proptest::prelude::*;

    const OPS: [GradientOperator; 3] = [
        GradientOperator::Sobel,
        GradientOperator::Prewitt,
        GradientOperator::Roberts,
    ];

    fn gray(w: usize, h: usize, f: impl Fn(usize, usize) -> f64) -> GrayImage {
        GrayImage::from_fn(w, h, f)
    }

    #[test]
    fn constant_images_are_silent() {
        let img = gray(7, 5, |_, _| 93.0);
        for op in OPS {
            assert!(gradient_baseline(&img, op, 0.0).unwrap().is_empty());
        }
        assert!(laplacian_baseline(&img, 0.0).unwrap().is_empty());
        assert!(canny_baseline(&img, &CannyParams::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn sobel_step_confined_to_boundary_columns() {
        // 6x6, 0 in columns 0..3, 100 in 3..6. Hand convolution: |Gx| = 400
        // in columns 2 and 3, zero elsewhere; Gy = 0 everywhere.
        let img = gray(6, 6, |x, _| if x < 3 { 0.0 } else { 100.0 });
        let g = gradient(&img, GradientOperator::Sobel);
        for y in 0..6 {
            for x in 0..6 {
                let expect = if x == 2 || x == 3 { 400.0 } else { 0.0 };
                assert_eq!(g.magnitude.get(x, y), expect, "({x},{y})");
            }
        }
        let edges = gradient_baseline(&img, GradientOperator::Sobel, 0.2).unwrap();
        assert!(edges.edge_pixels().all(|(x, _)| x == 2 || x == 3));
        assert_eq!(edges.count(), 12);
    }

    #[test]
    fn sobel_transpose_symmetry() {
        let vertical = gray(6, 6, |x, _| if x < 3 { 10.0 } else { 200.0 });
        let horizontal = gray(6, 6, |_, y| if y < 3 { 10.0 } else { 200.0 });
        let gv = correlate(
            &vertical.as_plane(),
            GradientOperator::Sobel.kernels(),
            BORDER,
        );
        let gh = correlate(
            &horizontal.as_plane(),
            GradientOperator::Sobel.kernels(),
            BORDER,
        );
        for y in 0..6 {
            for x in 0..6 {
                assert_eq!(gh[x * 6 + y][1], gv[y * 6 + x][0]);
            }
        }
    }

    #[test]
    fn laplacian_impulse_and_ramp() {
        let impulse = gray(5, 5, |x, y| if (x, y) == (2, 2) { 1.0 } else { 0.0 });
        let r = laplacian_response(&impulse);
        assert_eq!(r.get(2, 2), -4.0);
        for (x, y) in [(1, 2), (3, 2), (2, 1), (2, 3)] {
            assert_eq!(r.get(x, y), 1.0);
        }
        assert_eq!(r.get(1, 1), 0.0);

        let ramp = laplacian_response(&gray(8, 6, |x, _| x as f64));
        for y in 1..5 {
            for x in 1..7 {
                assert_eq!(ramp.get(x, y), 0.0);
            }
        }
    }

    #[test]
    fn gaussian_taps_are_normalized() {
        let taps = gaussian_taps(1.0);
        assert_eq!(taps.len(), 7);
        assert!((taps.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert_eq!(gaussian_taps(0.5).len(), 5);
    }

    #[test]
    fn canny_thin_line_on_step() {
        let img = gray(64, 64, |x, _| if x < 32 { 40.0 } else { 210.0 });
        let edges = canny_baseline(&img, &CannyParams::default()).unwrap();
        for y in 0..64 {
            let cols: Vec<usize> = (0..64).filter(|&x| edges.get(x, y)).collect();
            assert_eq!(cols.len(), 1, "row {y}: {cols:?}");
            assert!((31..=33).contains(&cols[0]));
        }
    }

    #[test]
    fn canny_drops_isolated_weak_pixel() {
        // A faint dot far from a strong step: its response lies between the
        // low and high thresholds and it has no strong neighbor.
        let img = gray(40, 20, |x, y| {
            if x >= 30 {
                250.0
            } else if (x, y) == (8, 10) {
                240.0
            } else {
                0.0
            }
        });
        let p = CannyParams::default();
        let stages = canny_stages(&img, &p).unwrap();
        let max = stages.gradient.magnitude.max();
        let dot = (6..11)
            .flat_map(|x| (8..13).map(move |y| (x, y)))
            .map(|(x, y)| stages.suppressed.get(x, y))
            .fold(0.0, f64::max);
        assert!(
            dot > p.low_ratio * max && dot <= p.high_ratio * max,
            "dot {dot} max {max}"
        );
        assert!(stages.edges.edge_pixels().all(|(x, _)| x > 20));
    }

    #[test]
    fn canny_param_validation() {
        let bad = [
            CannyParams {
                gaussian_sigma: 0.0,
                ..Default::default()
            },
            CannyParams {
                low_ratio: 0.3,
                high_ratio: 0.2,
                ..Default::default()
            },
            CannyParams {
                high_ratio: 1.0,
                ..Default::default()
            },
        ];
        for p in bad {
            assert!(p.validate().is_err(), "{p:?}");
        }
    }

    #[test]
    fn baseline_names_round_trip() {
        for k in BaselineKind::ALL {
            assert_eq!(k.name().parse::<BaselineKind>().unwrap(), k);
        }
        assert!("vos".parse::<BaselineKind>().is_err());
    }

    fn random_gray(seed: u64, w: usize, h: usize) -> GrayImage {
        gray(w, h, |x, y| {
            let v = seed
                .wrapping_add((y * w + x) as u64)
                .wrapping_mul(0x9E37_79B9_7F4A_7C15);
            ((v >> 40) % 256) as f64
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn gradient_magnitude_rotates_with_image(seed in any::<u64>()) {
            let (w, h) = (9, 7);
            let img = random_gray(seed, w, h);
            let rot = gray(h, w, |x, y| img.get(y, h - 1 - x));
            for op in [GradientOperator::Sobel, GradientOperator::Prewitt] {
                let a = gradient(&img, op).magnitude;
                let b = gradient(&rot, op).magnitude;
                for y in 1..h - 1 {
                    for x in 1..w - 1 {
                        prop_assert_eq!(b.get(h - 1 - y, x), a.get(x, y));
                    }
                }
            }
            // Roberts is anchored at the top-left cell, so a quarter turn
            // shifts its response by one column.
            let a = gradient(&img, GradientOperator::Roberts).magnitude;
            let b = gradient(&rot, GradientOperator::Roberts).magnitude;
            for y in 0..h - 1 {
                for x in 0..w - 1 {
                    prop_assert_eq!(b.get(h - 2 - y, x), a.get(x, y));
                }
            }
        }

        #[test]
        fn hysteresis_invariants(seed in any::<u64>()) {
            let img = random_gray(seed, 16, 16);
            let s = canny_stages(&img, &CannyParams::default()).unwrap();
            for (x, y) in s.edges.edge_pixels() {
                prop_assert!(s.suppressed.get(x, y) > 0.0);
            }
            for (x, y) in s.strong.edge_pixels() {
                prop_assert!(s.edges.get(x, y));
            }
            // Every kept pixel reaches a strong pixel through kept pixels.
            let mut reach = s.strong.clone();
            let mut changed = true;
            while changed {
                changed = false;
                for (x, y) in s.edges.edge_pixels() {
                    if reach.get(x, y) { continue; }
                    let near = (-1isize..=1).any(|dy| (-1isize..=1).any(|dx| {
                        let (nx, ny) = (x as isize + dx, y as isize + dy);
                        nx >= 0 && ny >= 0 && nx < 16 && ny < 16 && reach.get(nx as usize, ny as usize)
                    }));
                    if near { reach.set(x, y, true); changed = true; }
                }
            }
            prop_assert_eq!(reach, s.edges);
        }
    }

    #[test]
    fn run_baseline_uses_grayscale() {
        let img = ColorImage::from_fn(10, 10, |x, _| {
            if x < 5 {
                PixelVector::BLACK
            } else {
                PixelVector::WHITE
            }
        });
        for kind in BaselineKind::ALL {
            let e = run_baseline(&img, kind, 0.2, &CannyParams::default()).unwrap();
            assert!(!e.is_empty(), "{kind}");
        }
    }
}
