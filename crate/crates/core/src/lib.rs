//! Homological algebra over graded complete intersections on prime fields.
//!
//! The crate works in the graded model: a ring is `F_p[x_1..x_n]/(f_1..f_c)` with
//! homogeneous relations forming a regular sequence, the irrelevant ideal plays
//! the role of the maximal ideal, and every module is finitely presented and
//! graded. Minimal resolutions, depth and Serre conditions computed in this
//! setting agree with those of the localization at the irrelevant ideal.
#![no_std]

extern crate alloc;

pub mod constructions;
pub mod error;
pub mod groebner;
pub mod homres;
pub mod modules;
pub mod pairings;
pub mod rings;
pub mod polyalg;
pub mod theorems;

pub use error::{Error, Result};
