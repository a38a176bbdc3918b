//! Exact planar primitives: rational scalars, points, closed axis-aligned
//! rectangles, rectangle coverage and segment crossing predicates.

mod coverage;
mod rational;
mod rect;
mod segment;

pub use coverage::uncovered_witness;
pub(crate) use coverage::{first_uncovered_cell, Cell, GridBox};
pub use rational::{parse_rational, rat, Rational};
pub use rect::{intersect, rect_of_square, spanned_rect, Point, Rect, UnitSquare};
pub use segment::{classify_segments, segments_properly_cross, DegenerateCrossing, SegmentRelation};
