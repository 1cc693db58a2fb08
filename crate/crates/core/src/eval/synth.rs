//! Synthetic edge images with exact ground truth.
//!
//! The profile runs across the image along one axis. With `n` pixels on that
//! axis the midline is `n / 2`, the first pixel of the second half, and a
//! transition band of width `t` starts at `n / 2 - t / 2`.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::raster::{ColorImage, EdgeMap, PixelVector};

/// Cross-section shape of the transition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeProfile {
    /// Abrupt change from `color_a` to `color_b` at the midline.
    Step,
    /// Linear blend from `color_a` to `color_b` across the band.
    Ramp,
    /// Blend up to `color_b` at the midline and back down to `color_a`.
    Roof,
    /// A `color_b` stripe the width of the band on a `color_a` field.
    Ridge,
}

impl EdgeProfile {
    pub const ALL: [EdgeProfile; 4] = [
        EdgeProfile::Step,
        EdgeProfile::Ramp,
        EdgeProfile::Roof,
        EdgeProfile::Ridge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EdgeProfile::Step => "step",
            EdgeProfile::Ramp => "ramp",
            EdgeProfile::Roof => "roof",
            EdgeProfile::Ridge => "ridge",
        }
    }
}

impl fmt::Display for EdgeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EdgeProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EdgeProfile::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidSpec(format!("unknown profile {s:?}")))
    }
}

/// Direction of the edge line. A vertical edge separates left from right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Orientation {
    #[default]
    Vertical,
    Horizontal,
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "vertical" | "v" => Ok(Orientation::Vertical),
            "horizontal" | "h" => Ok(Orientation::Horizontal),
            _ => Err(Error::InvalidSpec(format!("unknown orientation {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SyntheticSpec {
    pub profile: EdgeProfile,
    pub orientation: Orientation,
    pub width: usize,
    pub height: usize,
    pub color_a: PixelVector,
    pub color_b: PixelVector,
    /// Band width in pixels for ramp, roof and ridge.
    pub transition_width: usize,
    /// Standard deviation of the per-channel Gaussian noise.
    pub noise_sigma: f64,
    pub seed: u64,
}

impl Default for SyntheticSpec {
    fn default() -> Self {
        Self {
            profile: EdgeProfile::Step,
            orientation: Orientation::Vertical,
            width: 64,
            height: 64,
            color_a: PixelVector::new(255, 0, 0),
            color_b: PixelVector::new(0, 0, 255),
            transition_width: 1,
            noise_sigma: 0.0,
            seed: 0,
        }
    }
}

impl SyntheticSpec {
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidSpec(msg));
        if self.width == 0 || self.height == 0 {
            return invalid(format!("empty image {}x{}", self.width, self.height));
        }
        if self.transition_width == 0 {
            return invalid("transition width must be at least 1".into());
        }
        if self.transition_width >= self.width.min(self.height) {
            return invalid(format!(
                "transition width {} must be below min(width, height) = {}",
                self.transition_width,
                self.width.min(self.height)
            ));
        }
        if !(self.noise_sigma >= 0.0 && self.noise_sigma.is_finite()) {
            return invalid(format!(
                "noise sigma {} must be non-negative",
                self.noise_sigma
            ));
        }
        if self.profile == EdgeProfile::Ridge
            && self.band_start() + self.transition_width >= self.axis_len()
        {
            return invalid(format!(
                "a {}-pixel ridge leaves no field pixels after it in {} pixels",
                self.transition_width,
                self.axis_len()
            ));
        }
        Ok(())
    }

    fn axis_len(&self) -> usize {
        match self.orientation {
            Orientation::Vertical => self.width,
            Orientation::Horizontal => self.height,
        }
    }

    fn midline(&self) -> usize {
        self.axis_len() / 2
    }

    fn band_start(&self) -> usize {
        self.midline() - self.transition_width / 2
    }

    /// Fraction of the way from `color_a` to `color_b` at axis position `p`.
    fn blend(&self, p: usize) -> f64 {
        let (mid, start, tw) = (self.midline(), self.band_start(), self.transition_width);
        let in_band = p >= start && p < start + tw;
        match self.profile {
            EdgeProfile::Step => f64::from(u8::from(p >= mid)),
            EdgeProfile::Ramp if p < start => 0.0,
            EdgeProfile::Ramp if p >= start + tw => 1.0,
            EdgeProfile::Ramp => (p - start + 1) as f64 / (tw + 1) as f64,
            EdgeProfile::Roof if in_band => 1.0 - p.abs_diff(mid) as f64 / (tw / 2 + 1) as f64,
            EdgeProfile::Roof => 0.0,
            EdgeProfile::Ridge => f64::from(u8::from(in_band)),
        }
    }

    fn is_truth(&self, p: usize) -> bool {
        match self.profile {
            EdgeProfile::Ridge => {
                p == self.band_start() || p == self.band_start() + self.transition_width
            }
            _ => p == self.midline(),
        }
    }
}

/// Renders the image described by `spec` together with its ground truth.
///
/// Noise is drawn from a ChaCha8 stream seeded with `spec.seed`, three draws
/// per pixel in row-major order, so output is reproducible across platforms.
pub fn generate_synthetic(spec: &SyntheticSpec) -> Result<(ColorImage, EdgeMap)> {
    spec.validate()?;
    let axis = |x: usize, y: usize| match spec.orientation {
        Orientation::Vertical => x,
        Orientation::Horizontal => y,
    };
    let a = spec.color_a.channels().map(f64::from);
    let b = spec.color_b.channels().map(f64::from);

    let mut noise = if spec.noise_sigma > 0.0 {
        let normal =
            Normal::new(0.0, spec.noise_sigma).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        Some((normal, ChaCha8Rng::seed_from_u64(spec.seed)))
    } else {
        None
    };

    let mut pixels = Vec::with_capacity(spec.width * spec.height);
    for y in 0..spec.height {
        for x in 0..spec.width {
            let f = spec.blend(axis(x, y));
            let mut ch = [0u8; 3];
            for c in 0..3 {
                let mut v = a[c] + f * (b[c] - a[c]);
                if let Some((normal, rng)) = noise.as_mut() {
                    v += normal.sample(rng);
                }
                ch[c] = v.round().clamp(0.0, 255.0) as u8;
            }
            pixels.push(PixelVector::from(ch));
        }
    }
    let image = ColorImage::new(spec.width, spec.height, pixels)?;
    let truth = EdgeMap::from_fn(spec.width, spec.height, |x, y| spec.is_truth(axis(x, y)));
    Ok((image, truth))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn spec(profile: EdgeProfile) -> SyntheticSpec {
        SyntheticSpec {
            profile,
            width: 8,
            height: 8,
            color_a: PixelVector::BLACK,
            color_b: PixelVector::WHITE,
            ..Default::default()
        }
    }

    fn truth_lines(m: &EdgeMap) -> BTreeSet<usize> {
        m.edge_pixels().map(|(x, _)| x).collect()
    }

    #[test]
    fn step_read_off() {
        let (img, truth) = generate_synthetic(&spec(EdgeProfile::Step)).unwrap();
        for y in 0..8 {
            for x in 0..8 {
                let expect = if x < 4 {
                    PixelVector::BLACK
                } else {
                    PixelVector::WHITE
                };
                assert_eq!(img.get(x, y), expect);
                assert_eq!(truth.get(x, y), x == 4);
            }
        }
    }

    #[test]
    fn unit_ramp_is_a_step_but_one_column() {
        let (step, _) = generate_synthetic(&spec(EdgeProfile::Step)).unwrap();
        let (ramp, truth) = generate_synthetic(&spec(EdgeProfile::Ramp)).unwrap();
        let differing: BTreeSet<usize> = (0..8)
            .flat_map(|y| (0..8).map(move |x| (x, y)))
            .filter(|&(x, y)| step.get(x, y) != ramp.get(x, y))
            .map(|(x, _)| x)
            .collect();
        assert_eq!(differing, BTreeSet::from([4]));
        assert_eq!(ramp.get(4, 0), PixelVector::new(128, 128, 128));
        assert_eq!(truth_lines(&truth), BTreeSet::from([4]));
    }

    #[test]
    fn roof_peaks_at_midline() {
        let s = SyntheticSpec {
            transition_width: 5,
            width: 16,
            ..spec(EdgeProfile::Roof)
        };
        let (img, truth) = generate_synthetic(&s).unwrap();
        let row: Vec<u8> = (0..16).map(|x| img.get(x, 0).r).collect();
        assert_eq!(
            row,
            vec![0, 0, 0, 0, 0, 0, 85, 170, 255, 170, 85, 0, 0, 0, 0, 0]
        );
        assert_eq!(truth_lines(&truth), BTreeSet::from([8]));
    }

    #[test]
    fn ridge_has_two_lines() {
        let s = SyntheticSpec {
            transition_width: 3,
            width: 16,
            ..spec(EdgeProfile::Ridge)
        };
        let (img, truth) = generate_synthetic(&s).unwrap();
        let row: Vec<u8> = (0..16).map(|x| img.get(x, 3).g).collect();
        assert_eq!(
            row,
            vec![0, 0, 0, 0, 0, 0, 0, 255, 255, 255, 0, 0, 0, 0, 0, 0]
        );
        assert_eq!(truth_lines(&truth), BTreeSet::from([7, 10]));
    }

    #[test]
    fn truth_lines_are_single_pixel_wide() {
        for profile in EdgeProfile::ALL {
            for orientation in [Orientation::Vertical, Orientation::Horizontal] {
                let s = SyntheticSpec {
                    profile,
                    orientation,
                    width: 20,
                    height: 14,
                    transition_width: 3,
                    ..Default::default()
                };
                let (_, truth) = generate_synthetic(&s).unwrap();
                let lines = if profile == EdgeProfile::Ridge { 2 } else { 1 };
                let across = if orientation == Orientation::Vertical {
                    14
                } else {
                    20
                };
                assert_eq!(truth.count(), lines * across, "{profile} {orientation:?}");
            }
        }
    }

    #[test]
    fn horizontal_step_puts_color_a_on_top() {
        let s = SyntheticSpec {
            orientation: Orientation::Horizontal,
            ..spec(EdgeProfile::Step)
        };
        let (img, truth) = generate_synthetic(&s).unwrap();
        assert_eq!(img.get(0, 3), PixelVector::BLACK);
        assert_eq!(img.get(0, 4), PixelVector::WHITE);
        assert!(truth.get(5, 4) && !truth.get(4, 5));
    }

    #[test]
    fn noise_is_seeded() {
        let s = SyntheticSpec {
            noise_sigma: 10.0,
            seed: 7,
            ..spec(EdgeProfile::Ramp)
        };
        let first = generate_synthetic(&s).unwrap();
        assert_eq!(first, generate_synthetic(&s).unwrap());
        let other = generate_synthetic(&SyntheticSpec { seed: 8, ..s }).unwrap();
        assert_ne!(first.0, other.0);
        let clean = generate_synthetic(&SyntheticSpec {
            noise_sigma: 0.0,
            ..s
        })
        .unwrap();
        assert_ne!(first.0, clean.0);
        assert_eq!(first.1, clean.1);
    }

    #[test]
    fn invalid_specs() {
        let base = spec(EdgeProfile::Ramp);
        for bad in [
            SyntheticSpec {
                transition_width: 0,
                ..base
            },
            SyntheticSpec {
                transition_width: 8,
                ..base
            },
            SyntheticSpec {
                noise_sigma: -1.0,
                ..base
            },
            SyntheticSpec { width: 0, ..base },
            SyntheticSpec {
                profile: EdgeProfile::Ridge,
                width: 4,
                height: 4,
                transition_width: 3,
                ..base
            },
        ] {
            assert!(
                matches!(generate_synthetic(&bad), Err(Error::InvalidSpec(_))),
                "{bad:?}"
            );
        }
    }
}
