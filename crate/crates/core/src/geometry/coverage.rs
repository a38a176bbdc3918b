//! Exact decision procedure for "is this closed rectangle covered by the
//! union of these closed rectangles?".
//!
//! The blocker boundaries cut the region into a grid. Coverage by closed
//! rectangles is constant on every open cell, every open edge piece and
//! every grid vertex, so it is enough to test one representative of each:
//! the breakpoints themselves and the gaps between consecutive breakpoints.
//! Only the order of coordinates matters, which is why the core works on
//! any `Ord` type and never needs to compute a midpoint until a witness is
//! reported.

use super::rational::midpoint;
use super::{Point, Rational, Rect};

/// Closed box with generic ordered coordinates; inverted bounds mean empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct GridBox<T> {
    pub x_lo: T,
    pub x_hi: T,
    pub y_lo: T,
    pub y_hi: T,
}

impl<T: Ord + Clone> GridBox<T> {
    pub fn is_empty(&self) -> bool {
        self.x_lo > self.x_hi || self.y_lo > self.y_hi
    }

    pub fn intersect(&self, other: &GridBox<T>) -> GridBox<T> {
        GridBox {
            x_lo: self.x_lo.clone().max(other.x_lo.clone()),
            x_hi: self.x_hi.clone().min(other.x_hi.clone()),
            y_lo: self.y_lo.clone().max(other.y_lo.clone()),
            y_hi: self.y_hi.clone().min(other.y_hi.clone()),
        }
    }

    fn contains_box(&self, other: &GridBox<T>) -> bool {
        self.x_lo <= other.x_lo
            && other.x_hi <= self.x_hi
            && self.y_lo <= other.y_lo
            && other.y_hi <= self.y_hi
    }
}

/// One candidate coordinate: a breakpoint, or any value strictly between two
/// consecutive breakpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Cell<T> {
    At(T),
    Between(T, T),
}

impl Cell<&Rational> {
    pub fn value(&self) -> Rational {
        match self {
            Cell::At(v) => (*v).clone(),
            Cell::Between(a, b) => midpoint(a, b),
        }
    }
}

struct Axis<T> {
    breaks: Vec<T>,
}

impl<T: Ord + Clone> Axis<T> {
    fn new(mut breaks: Vec<T>) -> Self {
        breaks.sort();
        breaks.dedup();
        Self { breaks }
    }

    fn cell_count(&self) -> usize {
        2 * self.breaks.len() - 1
    }

    // Breakpoint `v` sits at cell index 2·rank(v).
    fn index_of(&self, v: &T) -> usize {
        2 * self.breaks.binary_search(v).expect("breakpoint registered")
    }

    fn cell(&self, idx: usize) -> Cell<T> {
        if idx.is_multiple_of(2) {
            Cell::At(self.breaks[idx / 2].clone())
        } else {
            Cell::Between(self.breaks[idx / 2].clone(), self.breaks[idx / 2 + 1].clone())
        }
    }
}

/// Finds the first cell of `region` (ascending x, then ascending y) not
/// covered by any blocker, or `None` if the blockers cover all of it.
pub(crate) fn first_uncovered_cell<T: Ord + Clone>(
    region: &GridBox<T>,
    blockers: impl IntoIterator<Item = GridBox<T>>,
) -> Option<(Cell<T>, Cell<T>)> {
    if region.is_empty() {
        return None;
    }
    let mut clipped = Vec::new();
    for b in blockers {
        let c = region.intersect(&b);
        if c.is_empty() {
            continue;
        }
        if c.contains_box(region) {
            return None;
        }
        clipped.push(c);
    }

    let xs = Axis::new(
        [region.x_lo.clone(), region.x_hi.clone()]
            .into_iter()
            .chain(clipped.iter().flat_map(|b| [b.x_lo.clone(), b.x_hi.clone()]))
            .collect(),
    );
    let ys = Axis::new(
        [region.y_lo.clone(), region.y_hi.clone()]
            .into_iter()
            .chain(clipped.iter().flat_map(|b| [b.y_lo.clone(), b.y_hi.clone()]))
            .collect(),
    );
    let spans: Vec<[usize; 4]> = clipped
        .iter()
        .map(|b| {
            [
                xs.index_of(&b.x_lo),
                xs.index_of(&b.x_hi),
                ys.index_of(&b.y_lo),
                ys.index_of(&b.y_hi),
            ]
        })
        .collect();

    let ny = ys.cell_count();
    let mut depth = vec![0i32; ny + 1];
    for cx in 0..xs.cell_count() {
        depth.iter_mut().for_each(|d| *d = 0);
        for &[x_lo, x_hi, y_lo, y_hi] in &spans {
            if x_lo <= cx && cx <= x_hi {
                depth[y_lo] += 1;
                depth[y_hi + 1] -= 1;
            }
        }
        let mut running = 0;
        for (cy, delta) in depth.iter().take(ny).enumerate() {
            running += delta;
            if running == 0 {
                return Some((xs.cell(cx), ys.cell(cy)));
            }
        }
    }
    None
}

fn as_grid_box(r: &Rect) -> Option<GridBox<&Rational>> {
    match r {
        Rect::Empty => None,
        Rect::Bounds { x_lo, x_hi, y_lo, y_hi } => Some(GridBox { x_lo, x_hi, y_lo, y_hi }),
    }
}

/// Returns a point of `r` lying in none of the `blockers`, or `None` if the
/// blockers cover `r` completely (or `r` is empty).
///
/// The returned point is the first uncovered candidate in ascending-x,
/// then ascending-y order, so results are reproducible.
pub fn uncovered_witness(r: &Rect, blockers: &[Rect]) -> Option<Point> {
    let region = as_grid_box(r)?;
    let (cx, cy) = first_uncovered_cell(&region, blockers.iter().filter_map(as_grid_box))?;
    Some(Point::new(cx.value(), cy.value()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    fn r(x_lo: i64, x_hi: i64, y_lo: i64, y_hi: i64) -> Rect {
        Rect::new(rat(x_lo, 1), rat(x_hi, 1), rat(y_lo, 1), rat(y_hi, 1))
    }

    #[test]
    fn nothing_blocks() {
        assert_eq!(
            uncovered_witness(&r(0, 1, 0, 1), &[]),
            Some(Point::new(rat(0, 1), rat(0, 1)))
        );
    }

    #[test]
    fn exact_tiling_covers() {
        assert_eq!(uncovered_witness(&r(0, 2, 0, 2), &[r(0, 1, 0, 2), r(1, 2, 0, 2)]), None);
    }

    #[test]
    fn l_shape_leaves_top_right() {
        let blockers = [r(0, 1, 0, 1), r(1, 2, 0, 1), r(0, 1, 1, 2)];
        let w = uncovered_witness(&r(0, 2, 0, 2), &blockers).unwrap();
        assert_eq!(w, Point::new(rat(3, 2), rat(3, 2)));
    }

    #[test]
    fn empty_region() {
        assert_eq!(uncovered_witness(&Rect::Empty, &[]), None);
    }

    #[test]
    fn degenerate_region_and_blockers() {
        // Segment {1}×[-1,1] with its middle covered by a point blocker.
        let seg = r(1, 1, -1, 1);
        let w = uncovered_witness(&seg, &[r(0, 2, -1, 0)]).unwrap();
        assert_eq!(w, Point::new(rat(1, 1), rat(1, 2)));
        assert_eq!(uncovered_witness(&seg, &[r(0, 2, -1, 0), r(1, 1, 0, 1)]), None);
        // Two closed halves meeting on a line cover the line too.
        assert_eq!(uncovered_witness(&r(0, 0, 0, 0), &[r(0, 5, 0, 5)]), None);
    }

    #[test]
    fn gap_of_zero_width_is_not_uncovered() {
        // Blockers [0,1] and [1,2] share the line x = 1; no gap remains.
        assert_eq!(uncovered_witness(&r(0, 2, 0, 1), &[r(-1, 1, -1, 2), r(1, 3, -1, 2)]), None);
        // With a real gap (1,2) the witness lies inside it.
        let w = uncovered_witness(&r(0, 3, 0, 1), &[r(-1, 1, -1, 2), r(2, 3, -1, 2)]).unwrap();
        assert_eq!(w, Point::new(rat(3, 2), rat(0, 1)));
    }

    #[test]
    fn works_on_integer_ranks() {
        let region = GridBox { x_lo: 0u32, x_hi: 4, y_lo: 0, y_hi: 4 };
        let blockers = [GridBox { x_lo: 0, x_hi: 4, y_lo: 0, y_hi: 2 }, GridBox { x_lo: 0, x_hi: 1, y_lo: 2, y_hi: 4 }];
        assert_eq!(
            first_uncovered_cell(&region, blockers),
            Some((Cell::Between(1, 4), Cell::Between(2, 4)))
        );
    }
}
