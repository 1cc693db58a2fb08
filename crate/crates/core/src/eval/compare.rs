//! Side-by-side scoring of several detectors against one ground truth.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::pfom::{pfom, PfomResult};
use crate::baselines::{run_baseline, BaselineKind, CannyParams};
use crate::error::{Error, Result};
use crate::raster::{ColorImage, EdgeMap};
use crate::vos::{detect_edges, VosParams};

/// Previously reported figure-of-merit values for the six detectors on a real
/// photograph. The image and its annotation are not available, so these are
/// kept for context and never compared with local runs.
pub const PUBLISHED_SCORES: [(&str, f64); 6] = [
    ("sobel", 0.4209),
    ("prewitt", 0.4195),
    ("roberts", 0.4181),
    ("laplacian", 0.7048),
    ("canny", 0.8472),
    ("vos", 0.8480),
];

#[derive(Debug, Clone, PartialEq)]
pub enum Detector {
    Vos(VosParams),
    Baseline {
        kind: BaselineKind,
        threshold: f64,
        canny: CannyParams,
    },
    /// A fixed answer, independent of the input image.
    Fixed(EdgeMap),
}

impl Detector {
    pub fn detect(&self, img: &ColorImage) -> Result<EdgeMap> {
        match self {
            Detector::Vos(p) => detect_edges(img, p),
            Detector::Baseline {
                kind,
                threshold,
                canny,
            } => run_baseline(img, *kind, *threshold, canny),
            Detector::Fixed(map) => Ok(map.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetectorConfig {
    pub name: String,
    pub detector: Detector,
}

impl DetectorConfig {
    pub fn new(name: impl Into<String>, detector: Detector) -> Self {
        Self {
            name: name.into(),
            detector,
        }
    }

    /// The five baselines followed by the vector-order-statistics detector.
    pub fn standard_suite(vos: VosParams, threshold: f64, canny: CannyParams) -> Vec<Self> {
        BaselineKind::ALL
            .into_iter()
            .map(|kind| {
                Self::new(
                    kind.name(),
                    Detector::Baseline {
                        kind,
                        threshold,
                        canny,
                    },
                )
            })
            .chain(std::iter::once(Self::new("vos", Detector::Vos(vos))))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub name: String,
    #[serde(flatten)]
    pub result: PfomResult,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonTable {
    pub rows: Vec<ComparisonRow>,
}

#[derive(Serialize)]
struct CsvRecord<'a> {
    name: &'a str,
    pfom: f64,
    n_actual: usize,
    n_detected: usize,
}

impl ComparisonTable {
    /// Rows by descending score; equal scores keep configuration order.
    pub fn ranked(&self) -> Vec<&ComparisonRow> {
        let mut rows: Vec<&ComparisonRow> = self.rows.iter().collect();
        rows.sort_by(|a, b| b.result.score.total_cmp(&a.result.score));
        rows
    }

    /// `name,pfom,n_actual,n_detected`, one line per row.
    pub fn write_csv(&self, out: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for row in &self.rows {
            w.serialize(CsvRecord {
                name: &row.name,
                pfom: row.result.score,
                n_actual: row.result.n_actual,
                n_detected: row.result.n_detected,
            })
            .map_err(|e| Error::Report(e.to_string()))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Report(e.to_string()))
    }
}

/// Runs every configured detector on `img` and scores it against `truth`.
///
/// Detectors may run concurrently; rows come back in configuration order.
pub fn compare_detectors(
    img: &ColorImage,
    truth: &EdgeMap,
    configs: &[DetectorConfig],
    m: f64,
) -> Result<ComparisonTable> {
    let rows = configs
        .par_iter()
        .map(|cfg| {
            let detected = cfg.detector.detect(img)?;
            Ok(ComparisonRow {
                name: cfg.name.clone(),
                result: pfom(&detected, truth, m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ComparisonTable { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::{generate_synthetic, SyntheticSpec, DEFAULT_M};

    #[test]
    fn oracle_row_scores_one_and_ranks_first() {
        let (img, truth) = generate_synthetic(&SyntheticSpec::default()).unwrap();
        let mut configs =
            DetectorConfig::standard_suite(VosParams::default(), 0.2, CannyParams::default());
        configs.push(DetectorConfig::new(
            "oracle",
            Detector::Fixed(truth.clone()),
        ));
        let table = compare_detectors(&img, &truth, &configs, DEFAULT_M).unwrap();
        assert_eq!(table.rows.len(), 7);
        let names: Vec<&str> = table.rows.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "sobel",
                "prewitt",
                "roberts",
                "laplacian",
                "canny",
                "vos",
                "oracle"
            ]
        );
        assert_eq!(table.rows[6].result.score, 1.0);
        assert_eq!(table.ranked()[0].result.score, 1.0);
        for row in &table.rows {
            assert!(
                row.result.score > 0.0 && row.result.score <= 1.0,
                "{}",
                row.name
            );
        }
    }

    #[test]
    fn csv_layout() {
        let truth = EdgeMap::from_fn(3, 3, |x, _| x == 1);
        let img = ColorImage::filled(3, 3, crate::raster::PixelVector::BLACK);
        let configs = [DetectorConfig::new("a,b", Detector::Fixed(truth.clone()))];
        let table = compare_detectors(&img, &truth, &configs, DEFAULT_M).unwrap();
        let mut buf = Vec::new();
        table.write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "name,pfom,n_actual,n_detected\n\"a,b\",1.0,3,3\n"
        );
        let json: serde_json::Value = serde_json::from_str(&table.to_json().unwrap()).unwrap();
        assert_eq!(json["rows"][0]["pfom"], 1.0);
        assert_eq!(json["rows"][0]["n_detected"], 3);
    }

    #[test]
    fn errors_propagate() {
        let truth = EdgeMap::from_fn(4, 4, |x, _| x == 1);
        let img = ColorImage::filled(3, 3, crate::raster::PixelVector::BLACK);
        let configs = [DetectorConfig::new(
            "vos",
            Detector::Vos(VosParams::default()),
        )];
        assert!(matches!(
            compare_detectors(&img, &truth, &configs, DEFAULT_M),
            Err(Error::DimensionMismatch(..))
        ));
    }
}
