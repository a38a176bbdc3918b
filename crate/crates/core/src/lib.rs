//! Rankings of axis-aligned unit squares and their vertical visibility graphs.
//!
//! A set of closed unit squares is stacked in the order given by a ranking.
//! A lower square sees a higher one when some point of their intersection is
//! covered by no square ranked strictly between them. Everything here is
//! computed with exact rational arithmetic:
//!
//! - [`geometry`]: rationals, points, closed rectangles, coverage and
//!   segment-crossing predicates.
//! - [`visibility`]: instances, rankings and visibility graphs.
//! - [`ranking`]: lexicographic, random and exhaustively optimal rankings.
//! - [`verify`]: independent oracles, planarity and edge-bound checks.
//! - [`factory`]: extremal and random instance generators.
//! - [`format`]: the line-oriented text formats.

pub mod error;
pub mod factory;
pub mod format;
pub mod geometry;
pub mod ranking;
pub mod rng;
pub mod verify;
pub mod visibility;

pub use error::{Error, ParseError, Result};
pub use geometry::{Point, Rational, Rect};
pub use visibility::{Instance, Ranking, VisibilityGraph};
