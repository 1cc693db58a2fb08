use super::{BorderPolicy, ColorImage, PixelVector};
use crate::error::{Error, Result};

/// The 3x3 neighborhood of a pixel, row-major, center at index 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window3x3 {
    pub cells: [PixelVector; 9],
}

impl Window3x3 {
    pub const CENTER: usize = 4;

    pub fn new(cells: [PixelVector; 9]) -> Self {
        Self { cells }
    }

    pub fn center(&self) -> PixelVector {
        self.cells[Self::CENTER]
    }
}

/// Collects the 3x3 window centered at `(x, y)`, filling positions outside
/// the image according to `policy`.
pub fn extract_window(
    img: &ColorImage,
    x: usize,
    y: usize,
    policy: BorderPolicy,
) -> Result<Window3x3> {
    if x >= img.width() || y >= img.height() {
        return Err(Error::OutOfBounds {
            x,
            y,
            width: img.width(),
            height: img.height(),
        });
    }
    Ok(window_unchecked(img, x, y, policy))
}

pub(crate) fn window_unchecked(
    img: &ColorImage,
    x: usize,
    y: usize,
    policy: BorderPolicy,
) -> Window3x3 {
    let (w, h) = (img.width(), img.height());
    let mut cells = [PixelVector::BLACK; 9];
    if x > 0 && y > 0 && x + 1 < w && y + 1 < h {
        let px = img.pixels();
        for (dy, row) in cells.chunks_exact_mut(3).enumerate() {
            let start = (y + dy - 1) * w + x - 1;
            row.copy_from_slice(&px[start..start + 3]);
        }
        return Window3x3 { cells };
    }
    for (i, cell) in cells.iter_mut().enumerate() {
        let sx = policy.resolve(x as isize + (i % 3) as isize - 1, w);
        let sy = policy.resolve(y as isize + (i / 3) as isize - 1, h);
        *cell = match (sx, sy) {
            (Some(sx), Some(sy)) => img.get(sx, sy),
            _ => PixelVector::BLACK,
        };
    }
    Window3x3 { cells }
}
