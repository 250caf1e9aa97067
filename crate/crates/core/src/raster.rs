//! Digital straight lines: the abscissa `n` is drawn at ordinate
//! `floor(alpha * n + gamma)`.
//!
//! Renderings put the largest ordinate on the top row and the smallest
//! abscissa in the left column.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::Rat;
use crate::dilated::eval_affine;
use crate::error::{Error, Result};

/// Largest number of grid cells any renderer will allocate.
pub const MAX_CELLS: u128 = 1 << 26;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pixel {
    pub n: i64,
    #[serde(with = "crate::json::bigint")]
    pub y: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitalLine {
    alpha: Rat,
    gamma: Rat,
    pixels: Vec<Pixel>,
}

impl DigitalLine {
    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn gamma(&self) -> &Rat {
        &self.gamma
    }

    /// One pixel per abscissa, in increasing order.
    pub fn pixels(&self) -> &[Pixel] {
        &self.pixels
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Pgm,
    Svg,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "pgm" => Ok(Format::Pgm),
            "svg" => Ok(Format::Svg),
            other => Err(format!("unknown format {other:?}; expected ascii, pgm or svg")),
        }
    }
}

pub fn rasterize(alpha: &Rat, gamma: &Rat, n_min: i64, n_max: i64) -> Result<DigitalLine> {
    if n_min > n_max {
        return Err(Error::EmptyRange(format!("[{n_min}, {n_max}]")));
    }
    let width = (n_max as i128 - n_min as i128 + 1) as u128;
    if width > MAX_CELLS {
        return Err(Error::ImageTooLarge { width, height: 1 });
    }
    let pixels = (n_min..=n_max)
        .map(|n| Pixel { n, y: eval_affine(alpha, gamma, &Rat::from_int(n)) })
        .collect();
    Ok(DigitalLine { alpha: alpha.clone(), gamma: gamma.clone(), pixels })
}

/// Grid geometry shared by the renderers.
struct Grid {
    n_min: i64,
    y_max: BigInt,
    width: usize,
    height: usize,
}

impl Grid {
    fn of(line: &DigitalLine) -> Result<Grid> {
        let first = line.pixels.first().ok_or(Error::EmptyLine)?;
        let y_min = line.pixels.iter().map(|p| &p.y).min().expect("non-empty");
        let y_max = line.pixels.iter().map(|p| &p.y).max().expect("non-empty");
        let width = line.pixels.len() as u128;
        let height = (y_max - y_min + 1u32).to_u128().unwrap_or(u128::MAX);
        if width.saturating_mul(height) > MAX_CELLS {
            return Err(Error::ImageTooLarge { width, height });
        }
        Ok(Grid { n_min: first.n, y_max: y_max.clone(), width: width as usize, height: height as usize })
    }

    /// `(column, row)` of a pixel, row 0 at the top.
    fn cell(&self, p: &Pixel) -> (usize, usize) {
        let col = (p.n - self.n_min) as usize;
        let row = (&self.y_max - &p.y).to_usize().expect("row within grid");
        (col, row)
    }

    fn mask(&self, line: &DigitalLine) -> Vec<bool> {
        let mut cells = vec![false; self.width * self.height];
        for p in &line.pixels {
            let (col, row) = self.cell(p);
            cells[row * self.width + col] = true;
        }
        cells
    }
}

pub fn render(line: &DigitalLine, format: Format) -> Result<Vec<u8>> {
    let grid = Grid::of(line)?;
    let cells = grid.mask(line);
    let out = match format {
        Format::Ascii => {
            let mut out = Vec::with_capacity((grid.width + 1) * grid.height);
            for row in cells.chunks(grid.width) {
                out.extend(row.iter().map(|&set| if set { b'#' } else { b'.' }));
                out.push(b'\n');
            }
            out
        }
        Format::Pgm => {
            let mut out = format!("P5 {} {} 255\n", grid.width, grid.height).into_bytes();
            out.extend(cells.iter().map(|&set| if set { 0u8 } else { 255u8 }));
            out
        }
        Format::Svg => render_svg(line, &grid).into_bytes(),
    };
    Ok(out)
}

fn render_svg(line: &DigitalLine, grid: &Grid) -> String {
    let (w, h) = (grid.width, grid.height);
    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 {w} {h}\" width=\"{}\" height=\"{}\">",
        w * 16,
        h * 16
    );
    let _ = writeln!(
        svg,
        "<!-- y = floor(({}) n + ({})), n from {} (left); top row is y = {} -->",
        line.alpha, line.gamma, grid.n_min, grid.y_max
    );
    let _ = writeln!(svg, "<rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"white\"/>");
    for p in &line.pixels {
        let (col, row) = grid.cell(p);
        let _ = writeln!(svg, "<rect x=\"{col}\" y=\"{row}\" width=\"1\" height=\"1\" fill=\"black\"/>");
    }
    svg.push_str("</svg>\n");
    svg
}

/// Reads an ascii rendering back into the set pixels, given the abscissa of
/// the left column and the ordinate of the top row.
pub fn parse_ascii(text: &str, n_min: i64, y_top: &BigInt) -> Result<Vec<Pixel>> {
    if text.is_empty() {
        return Err(Error::ParseGrid("empty grid".into()));
    }
    let body = text
        .strip_suffix('\n')
        .ok_or_else(|| Error::ParseGrid("missing trailing newline".into()))?;
    let mut width = None;
    let mut pixels = Vec::new();
    for (row, line) in body.split('\n').enumerate() {
        match width {
            None => width = Some(line.len()),
            Some(w) if w != line.len() => {
                return Err(Error::ParseGrid(format!("row {row} has {} cells, expected {w}", line.len())))
            }
            Some(_) => {}
        }
        if line.is_empty() {
            return Err(Error::ParseGrid(format!("row {row} is empty")));
        }
        for (col, c) in line.bytes().enumerate() {
            match c {
                b'#' => {
                    let n = i64::try_from(col)
                        .ok()
                        .and_then(|c| n_min.checked_add(c))
                        .ok_or_else(|| Error::ParseGrid("abscissa overflow".into()))?;
                    pixels.push(Pixel { n, y: y_top - BigInt::from(row) });
                }
                b'.' => {}
                other => {
                    return Err(Error::ParseGrid(format!("unexpected byte {other:#04x} at row {row}")))
                }
            }
        }
    }
    pixels.sort();
    Ok(pixels)
}
