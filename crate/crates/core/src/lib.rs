//! Exact evaluation of dilated floor functions `x -> floor(alpha * x)`, their
//! compositions and upper level sets, a complete decision procedure for when
//! two of them commute, and rasterization of digital straight lines.
//!
//! All arithmetic is over exact rationals ([`Rat`]); there is no floating
//! point anywhere in the library.

pub mod arith;
pub mod cli;
pub mod commute;
pub mod dilated;
pub mod error;
pub mod json;
pub mod levelset;
pub mod raster;
pub mod selftest;
pub mod sweep;

#[cfg(test)]
mod testutil;

pub use arith::Rat;
pub use commute::{classify, find_witness, Family, Verdict, Witness};
pub use dilated::{CompositionChain, DilatedFloor};
pub use error::{Error, Result};
pub use levelset::{upper_level_set, HalfLine};
pub use raster::{rasterize, render, DigitalLine, Format, Pixel};
