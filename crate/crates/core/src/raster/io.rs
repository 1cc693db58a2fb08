use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Seek, SeekFrom, Write};
use std::path::Path;

use image::codecs::png::PngEncoder;
use image::codecs::pnm::{PnmEncoder, PnmSubtype, SampleEncoding};
use image::{ColorType, ExtendedColorType, ImageEncoder, ImageError, ImageFormat, ImageReader};

use super::{ColorImage, EdgeMap, GrayImage, PixelVector};
use crate::error::{Error, Result};

/// A borrowed raster that [`save_image`] knows how to encode.
#[derive(Debug, Clone, Copy)]
pub enum RasterRef<'a> {
    Color(&'a ColorImage),
    Gray(&'a GrayImage),
    Edges(&'a EdgeMap),
}

impl<'a> From<&'a ColorImage> for RasterRef<'a> {
    fn from(img: &'a ColorImage) -> Self {
        RasterRef::Color(img)
    }
}

impl<'a> From<&'a GrayImage> for RasterRef<'a> {
    fn from(img: &'a GrayImage) -> Self {
        RasterRef::Gray(img)
    }
}

impl<'a> From<&'a EdgeMap> for RasterRef<'a> {
    fn from(map: &'a EdgeMap) -> Self {
        RasterRef::Edges(map)
    }
}

fn map_image_error(e: ImageError) -> Error {
    match e {
        ImageError::IoError(io) if io.kind() == std::io::ErrorKind::UnexpectedEof => {
            Error::CorruptData(io.to_string())
        }
        ImageError::IoError(io) => Error::Io(io),
        ImageError::Unsupported(u) => Error::UnsupportedFormat(u.to_string()),
        other => Error::CorruptData(other.to_string()),
    }
}

/// Decodes an 8-bit PNG or a binary PPM (P6) / PGM (P5) file.
///
/// Alpha is discarded and gray sources are expanded to equal channels.
/// 16-bit and floating point sources are rejected.
pub fn load_image(path: impl AsRef<Path>) -> Result<ColorImage> {
    let path = path.as_ref();
    let mut file = File::open(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::FileNotFound(path.to_path_buf()),
        _ => Error::Io(e),
    })?;

    let mut magic = [0u8; 2];
    let n = file.read(&mut magic)?;
    if n == 2 && magic[0] == b'P' && !matches!(magic[1], b'5' | b'6') {
        return Err(Error::UnsupportedFormat(format!(
            "netpbm variant P{} (only binary P5/P6 are read)",
            magic[1] as char
        )));
    }
    file.seek(SeekFrom::Start(0))?;

    let reader = ImageReader::new(BufReader::new(file)).with_guessed_format()?;
    match reader.format() {
        Some(ImageFormat::Png) | Some(ImageFormat::Pnm) => {}
        Some(other) => {
            return Err(Error::UnsupportedFormat(format!("{other:?}")));
        }
        None => {
            return Err(Error::UnsupportedFormat(
                "unrecognized image signature".into(),
            ))
        }
    }
    let decoded = reader.decode().map_err(map_image_error)?;
    match decoded.color() {
        ColorType::L8 | ColorType::La8 | ColorType::Rgb8 | ColorType::Rgba8 => {}
        other => {
            return Err(Error::UnsupportedFormat(format!(
                "{other:?} samples (only 8-bit channels are supported)"
            )))
        }
    }
    let rgb = decoded.to_rgb8();
    let (w, h) = (rgb.width() as usize, rgb.height() as usize);
    let pixels = rgb.pixels().map(|p| PixelVector::from(p.0)).collect();
    ColorImage::new(w, h, pixels).map_err(|e| Error::CorruptData(e.to_string()))
}

/// Loads an edge map; pixels with luma of at least 128 are edges.
pub fn load_edge_map(path: impl AsRef<Path>) -> Result<EdgeMap> {
    let img = load_image(path)?;
    let bits = img
        .pixels()
        .iter()
        .map(|p| p.luma_millis() >= 128_000)
        .collect();
    EdgeMap::new(img.width(), img.height(), bits)
}

enum Container {
    Png,
    Ppm,
    Pgm,
}

/// Encodes a raster chosen by the file extension: `.png`, `.ppm` (P6) or
/// `.pgm` (P5).
///
/// Gray values are rounded to the nearest integer. Edge maps are written as
/// 255 for edges and 0 elsewhere.
pub fn save_image<'a>(img: impl Into<RasterRef<'a>>, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    let container = match ext.as_deref() {
        Some("png") => Container::Png,
        Some("ppm") => Container::Ppm,
        Some("pgm") => Container::Pgm,
        _ => {
            return Err(Error::UnsupportedFormat(format!(
                "cannot infer output format from {}",
                path.display()
            )))
        }
    };

    let (w, h, samples, color) = match img.into() {
        RasterRef::Color(c) => (
            c.width(),
            c.height(),
            c.pixels()
                .iter()
                .flat_map(|p| p.channels())
                .collect::<Vec<_>>(),
            ExtendedColorType::Rgb8,
        ),
        RasterRef::Gray(g) => (
            g.width(),
            g.height(),
            g.values().iter().map(|v| v.round() as u8).collect(),
            ExtendedColorType::L8,
        ),
        RasterRef::Edges(m) => (
            m.width(),
            m.height(),
            m.bits().iter().map(|&b| if b { 255 } else { 0 }).collect(),
            ExtendedColorType::L8,
        ),
    };

    let (samples, color) = match (&container, color) {
        (Container::Pgm, ExtendedColorType::Rgb8) => {
            return Err(Error::UnsupportedFormat(
                "a color image cannot be written as PGM".into(),
            ))
        }
        (Container::Ppm, ExtendedColorType::L8) => (
            samples.iter().flat_map(|&v| [v, v, v]).collect(),
            ExtendedColorType::Rgb8,
        ),
        _ => (samples, color),
    };

    let mut out = BufWriter::new(File::create(path)?);
    let (w, h) = (w as u32, h as u32);
    match container {
        Container::Png => PngEncoder::new(&mut out).write_image(&samples, w, h, color),
        Container::Ppm => PnmEncoder::new(&mut out)
            .with_subtype(PnmSubtype::Pixmap(SampleEncoding::Binary))
            .write_image(&samples, w, h, color),
        Container::Pgm => PnmEncoder::new(&mut out)
            .with_subtype(PnmSubtype::Graymap(SampleEncoding::Binary))
            .write_image(&samples, w, h, color),
    }
    .map_err(map_image_error)?;
    out.flush()?;
    Ok(())
}
