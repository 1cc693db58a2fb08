//! Exact Euclidean distance transform of a binary map.
//!
//! Two separable passes: a vertical scan giving the distance to the nearest
//! edge pixel in the same column, then a lower envelope of parabolas along
//! each row. All arithmetic is integral, so squared distances are exact.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::raster::{EdgeMap, ScalarPlane};

/// Parabola intersection abscissa kept as an exact fraction.
#[derive(Debug, Clone, Copy)]
enum Breakpoint {
    NegInf,
    At { num: i64, den: i64 },
    PosInf,
}

impl Breakpoint {
    /// Compares `self` against `other`; denominators are always positive.
    fn cmp(self, other: Breakpoint) -> Ordering {
        use Breakpoint::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (At { num: a, den: b }, At { num: c, den: d }) => {
                (i128::from(a) * i128::from(d)).cmp(&(i128::from(c) * i128::from(b)))
            }
        }
    }

    fn below(self, x: i64) -> bool {
        self.cmp(Breakpoint::At { num: x, den: 1 }) == Ordering::Less
    }
}

/// Squared distance from every pixel to the nearest `true` pixel, row-major.
pub fn squared_distance_transform(truth: &EdgeMap) -> Result<Vec<u64>> {
    if truth.is_empty() {
        return Err(Error::EmptyTruth);
    }
    let (w, h) = (truth.width(), truth.height());

    // Column pass: vertical distance to the nearest edge in the column.
    let mut column: Vec<Option<u64>> = vec![None; w * h];
    for x in 0..w {
        let mut last: Option<usize> = None;
        for y in 0..h {
            if truth.get(x, y) {
                last = Some(y);
            }
            column[y * w + x] = last.map(|l| (y - l) as u64);
        }
        let mut next: Option<usize> = None;
        for y in (0..h).rev() {
            if truth.get(x, y) {
                next = Some(y);
            }
            if let Some(n) = next {
                let d = (n - y) as u64;
                let slot = &mut column[y * w + x];
                *slot = Some(slot.map_or(d, |c| c.min(d)));
            }
        }
    }

    // Row pass: lower envelope of (x - q)^2 + f(q) over finite sites q.
    let mut out = vec![0u64; w * h];
    let mut sites: Vec<i64> = Vec::with_capacity(w);
    let mut bounds: Vec<Breakpoint> = Vec::with_capacity(w + 1);
    for y in 0..h {
        let f = |q: i64| -> i64 {
            let g = column[y * w + q as usize].expect("finite site") as i64;
            g * g
        };
        sites.clear();
        bounds.clear();
        bounds.push(Breakpoint::NegInf);
        for q in 0..w as i64 {
            if column[y * w + q as usize].is_none() {
                continue;
            }
            let s = loop {
                let Some(&v) = sites.last() else {
                    break Breakpoint::NegInf;
                };
                let s = Breakpoint::At {
                    num: (f(q) + q * q) - (f(v) + v * v),
                    den: 2 * (q - v),
                };
                if s.cmp(*bounds.last().expect("bound per site")) != Ordering::Greater {
                    sites.pop();
                    bounds.pop();
                } else {
                    break s;
                }
            };
            if sites.is_empty() {
                bounds.clear();
                bounds.push(Breakpoint::NegInf);
            } else {
                bounds.push(s);
            }
            sites.push(q);
        }
        bounds.push(Breakpoint::PosInf);

        let mut k = 0;
        for x in 0..w as i64 {
            while bounds[k + 1].below(x) {
                k += 1;
            }
            let v = sites[k];
            out[y * w + x as usize] = ((x - v) * (x - v) + f(v)) as u64;
        }
    }
    Ok(out)
}

/// Euclidean distance from every pixel to the nearest `true` pixel.
pub fn distance_transform(truth: &EdgeMap) -> Result<ScalarPlane> {
    let sq = squared_distance_transform(truth)?;
    let values = sq.into_iter().map(|d| (d as f64).sqrt()).collect();
    Ok(ScalarPlane::from_raw(truth.width(), truth.height(), values))
}
