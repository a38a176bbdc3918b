use std::cmp::Ordering;

use num_traits::Zero;
use thiserror::Error;

use super::{Point, Rational};

/// The two segments cannot be classified as crossing or not: they are
/// collinear and share more than a single point, or one has zero length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("degenerate segment configuration")]
pub struct DegenerateCrossing;

/// How two non-degenerate segments meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentRelation {
    Disjoint,
    /// They meet only at an endpoint common to both.
    SharedEndpoint,
    /// An endpoint of one lies in the relative interior of the other.
    Touching,
    /// A single common point, interior to both.
    ProperCrossing,
}

fn orientation(a: &Point, b: &Point, c: &Point) -> Ordering {
    let cross: Rational = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    cross.cmp(&Rational::zero())
}

// `p` is assumed collinear with `a`-`b`.
fn within_box(a: &Point, b: &Point, p: &Point) -> bool {
    let (x_lo, x_hi) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (y_lo, y_hi) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    x_lo <= &p.x && p.x <= *x_hi && y_lo <= &p.y && p.y <= *y_hi
}

pub fn classify_segments(
    a: &Point,
    b: &Point,
    c: &Point,
    d: &Point,
) -> Result<SegmentRelation, DegenerateCrossing> {
    if a == b || c == d {
        return Err(DegenerateCrossing);
    }
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);

    if o1 == Ordering::Equal && o2 == Ordering::Equal {
        // Collinear. Overlap is the intersection of the two 1-d intervals.
        let shared: Vec<&Point> = [c, d]
            .into_iter()
            .filter(|p| within_box(a, b, p))
            .chain([a, b].into_iter().filter(|p| within_box(c, d, p)))
            .collect();
        return match shared.as_slice() {
            [] => Ok(SegmentRelation::Disjoint),
            [p, rest @ ..] if rest.iter().all(|q| q == p) => Ok(SegmentRelation::SharedEndpoint),
            _ => Err(DegenerateCrossing),
        };
    }

    let straddle_ab = o1 != o2 && o1 != Ordering::Equal && o2 != Ordering::Equal;
    let straddle_cd = o3 != o4 && o3 != Ordering::Equal && o4 != Ordering::Equal;
    if straddle_ab && straddle_cd {
        return Ok(SegmentRelation::ProperCrossing);
    }

    let shares_endpoint = a == c || a == d || b == c || b == d;
    if shares_endpoint {
        // Non-collinear segments through a common endpoint meet only there.
        return Ok(SegmentRelation::SharedEndpoint);
    }
    let touches = (o1 == Ordering::Equal && within_box(a, b, c))
        || (o2 == Ordering::Equal && within_box(a, b, d))
        || (o3 == Ordering::Equal && within_box(c, d, a))
        || (o4 == Ordering::Equal && within_box(c, d, b));
    if touches {
        Ok(SegmentRelation::Touching)
    } else {
        Ok(SegmentRelation::Disjoint)
    }
}

/// `true` iff segments `ab` and `cd` meet in exactly one point that is
/// interior to both. Shared endpoints and T-junctions are not crossings.
pub fn segments_properly_cross(
    a: &Point,
    b: &Point,
    c: &Point,
    d: &Point,
) -> Result<bool, DegenerateCrossing> {
    classify_segments(a, b, c, d).map(|rel| rel == SegmentRelation::ProperCrossing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    fn p(x: i64, y: i64) -> Point {
        Point::new(rat(x, 1), rat(y, 1))
    }

    #[test]
    fn x_crossing() {
        assert_eq!(segments_properly_cross(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)), Ok(true));
    }

    #[test]
    fn shared_endpoint_is_not_a_crossing() {
        assert_eq!(segments_properly_cross(&p(0, 0), &p(1, 0), &p(1, 0), &p(2, 1)), Ok(false));
        assert_eq!(
            classify_segments(&p(0, 0), &p(1, 0), &p(1, 0), &p(2, 1)),
            Ok(SegmentRelation::SharedEndpoint)
        );
        // Collinear, end to end.
        assert_eq!(
            classify_segments(&p(0, 0), &p(1, 0), &p(1, 0), &p(3, 0)),
            Ok(SegmentRelation::SharedEndpoint)
        );
    }

    #[test]
    fn collinear_overlap_is_degenerate() {
        assert_eq!(
            segments_properly_cross(&p(0, 0), &p(2, 0), &p(1, 0), &p(3, 0)),
            Err(DegenerateCrossing)
        );
        assert_eq!(
            segments_properly_cross(&p(0, 0), &p(4, 4), &p(1, 1), &p(2, 2)),
            Err(DegenerateCrossing)
        );
    }

    #[test]
    fn zero_length_is_degenerate() {
        assert_eq!(
            segments_properly_cross(&p(1, 1), &p(1, 1), &p(0, 0), &p(3, 0)),
            Err(DegenerateCrossing)
        );
    }

    #[test]
    fn touching_and_disjoint() {
        assert_eq!(
            classify_segments(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 5)),
            Ok(SegmentRelation::Touching)
        );
        assert_eq!(
            classify_segments(&p(0, 0), &p(2, 0), &p(3, 0), &p(5, 0)),
            Ok(SegmentRelation::Disjoint)
        );
        assert_eq!(
            classify_segments(&p(0, 0), &p(2, 0), &p(0, 1), &p(2, 3)),
            Ok(SegmentRelation::Disjoint)
        );
        // Lines cross, segments do not.
        assert_eq!(
            classify_segments(&p(0, 0), &p(1, 1), &p(3, 0), &p(2, 1)),
            Ok(SegmentRelation::Disjoint)
        );
    }
}
