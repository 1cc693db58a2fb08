use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vos_edge::baselines::{BaselineKind, CannyParams};
use vos_edge::eval::{EdgeProfile, Orientation, DEFAULT_M};
use vos_edge::vos::VosParams;
use vos_edge::BorderPolicy;

#[derive(Debug, Parser)]
#[command(
    name = "vos-edge",
    version,
    about = "Color edge detection with vector order statistics"
)]
#[command(args_override_self = true)]
pub struct Cli {
    /// File of `key = value` lines supplying defaults for any long flag.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Worker threads for the raster stages: a positive count or `auto`.
    #[arg(long, global = true, default_value = "auto", value_parser = parse_workers)]
    pub workers: Workers,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Detect edges in one image and write the edge map.
    Detect(DetectArgs),
    /// Score every detector against a ground-truth edge map.
    Compare(CompareArgs),
    /// Generate a synthetic image and its ground-truth edge map.
    Synth(SynthArgs),
    /// Score a detected edge map against a ground-truth edge map.
    Eval(EvalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Workers {
    Auto,
    Count(usize),
}

impl Workers {
    /// Thread count in the form the pool builder expects (0 = automatic).
    pub fn threads(self) -> usize {
        match self {
            Workers::Auto => 0,
            Workers::Count(n) => n,
        }
    }
}

fn parse_workers(s: &str) -> Result<Workers, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(Workers::Auto);
    }
    match s.parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("expected a positive integer or `auto`, got {s:?}")),
        Ok(n) => Ok(Workers::Count(n)),
    }
}

fn parse_fraction(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} is outside [0, 1]"))
    }
}

fn parse_color(s: &str) -> Result<[u8; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let channels: Result<Vec<u8>, _> = parts.iter().map(|p| p.parse::<u8>()).collect();
    match channels {
        Ok(c) if c.len() == 3 => Ok([c[0], c[1], c[2]]),
        _ => Err(format!(
            "expected `r,g,b` with channels in 0..=255, got {s:?}"
        )),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Vos,
    Sobel,
    Prewitt,
    Roberts,
    Laplacian,
    Canny,
}

impl Algo {
    pub fn baseline(self) -> Option<BaselineKind> {
        match self {
            Algo::Vos => None,
            Algo::Sobel => Some(BaselineKind::Sobel),
            Algo::Prewitt => Some(BaselineKind::Prewitt),
            Algo::Roberts => Some(BaselineKind::Roberts),
            Algo::Laplacian => Some(BaselineKind::Laplacian),
            Algo::Canny => Some(BaselineKind::Canny),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Border {
    Replicate,
    Reflect,
    Zero,
}

impl From<Border> for BorderPolicy {
    fn from(b: Border) -> Self {
        match b {
            Border::Replicate => BorderPolicy::Replicate,
            Border::Reflect => BorderPolicy::Reflect,
            Border::Zero => BorderPolicy::ZeroPad,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Profile {
    Step,
    Ramp,
    Roof,
    Ridge,
}

impl From<Profile> for EdgeProfile {
    fn from(p: Profile) -> Self {
        match p {
            Profile::Step => EdgeProfile::Step,
            Profile::Ramp => EdgeProfile::Ramp,
            Profile::Roof => EdgeProfile::Roof,
            Profile::Ridge => EdgeProfile::Ridge,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Axis {
    Vertical,
    Horizontal,
}

impl From<Axis> for Orientation {
    fn from(a: Axis) -> Self {
        match a {
            Axis::Vertical => Orientation::Vertical,
            Axis::Horizontal => Orientation::Horizontal,
        }
    }
}

/// Parameters shared by every detector.
#[derive(Debug, Args)]
pub struct DetectorOpts {
    /// Relative threshold: a pixel is an edge when its strength exceeds t * max.
    #[arg(long, default_value_t = 0.2, value_parser = parse_fraction)]
    pub threshold: f64,

    /// How samples outside the image are synthesized.
    #[arg(long, value_enum, default_value_t = Border::Replicate)]
    pub border: Border,

    /// Require strictly greater than both neighbors during suppression.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set, value_name = "BOOL")]
    pub strict_nms: bool,

    /// Subtract the mean from each gradient mask before applying it.
    #[arg(long)]
    pub zero_mean_masks: bool,

    /// Gaussian smoothing for Canny.
    #[arg(long, default_value_t = 1.0)]
    pub sigma: f64,

    /// Canny low hysteresis ratio.
    #[arg(long, default_value_t = 0.10, value_parser = parse_fraction)]
    pub low: f64,

    /// Canny high hysteresis ratio.
    #[arg(long, default_value_t = 0.25, value_parser = parse_fraction)]
    pub high: f64,
}

impl DetectorOpts {
    pub fn vos_params(&self) -> VosParams {
        VosParams {
            threshold: self.threshold,
            border: self.border.into(),
            strict_nms: self.strict_nms,
            zero_mean_masks: self.zero_mean_masks,
        }
    }

    pub fn canny_params(&self) -> CannyParams {
        CannyParams {
            gaussian_sigma: self.sigma,
            low_ratio: self.low,
            high_ratio: self.high,
        }
    }
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    /// Input PNG or binary PPM/PGM image.
    pub input: PathBuf,

    /// Where to write the edge map (.png, .ppm or .pgm).
    #[arg(short, long)]
    pub output: PathBuf,

    #[arg(long, value_enum, default_value_t = Algo::Vos)]
    pub algo: Algo,

    #[command(flatten)]
    pub detector: DetectorOpts,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Input image.
    pub input: PathBuf,

    /// Ground-truth edge map.
    #[arg(long)]
    pub truth: PathBuf,

    /// Where to write the score table; `.json` selects JSON, anything else CSV.
    #[arg(short, long)]
    pub output: PathBuf,

    /// Add a row that submits the ground truth itself as a detection.
    #[arg(long)]
    pub include_oracle: bool,

    /// Print the ranked listing as JSON instead of text.
    #[arg(long)]
    pub json: bool,

    /// Distance penalty constant.
    #[arg(long, default_value_t = DEFAULT_M)]
    pub m: f64,

    #[command(flatten)]
    pub detector: DetectorOpts,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long, value_enum, default_value_t = Profile::Step)]
    pub profile: Profile,

    #[arg(long, value_enum, default_value_t = Axis::Vertical)]
    pub orientation: Axis,

    /// Side length of a square image; overridden per axis by --width/--height.
    #[arg(long, default_value_t = 64)]
    pub size: usize,

    #[arg(long)]
    pub width: Option<usize>,

    #[arg(long)]
    pub height: Option<usize>,

    /// Band width in pixels for ramp, roof and ridge profiles.
    #[arg(long, default_value_t = 1)]
    pub transition: usize,

    /// Standard deviation of per-channel Gaussian noise.
    #[arg(long, default_value_t = 0.0)]
    pub noise: f64,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// First color as `r,g,b`.
    #[arg(long, default_value = "255,0,0", value_parser = parse_color)]
    pub color_a: [u8; 3],

    /// Second color as `r,g,b`.
    #[arg(long, default_value = "0,0,255", value_parser = parse_color)]
    pub color_b: [u8; 3],

    /// Where to write the image.
    #[arg(short, long)]
    pub output: PathBuf,

    /// Where to write the ground-truth edge map.
    #[arg(long)]
    pub truth: PathBuf,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Detected edge map.
    pub detected: PathBuf,

    /// Ground-truth edge map.
    pub truth: PathBuf,

    /// Distance penalty constant.
    #[arg(long, default_value_t = DEFAULT_M)]
    pub m: f64,

    /// Print the result as JSON.
    #[arg(long)]
    pub json: bool,
}
