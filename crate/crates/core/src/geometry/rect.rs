use std::fmt;

use num_traits::One;

use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> Point {
        Point::new(&self.x + dx, &self.y + dy)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A closed axis-aligned rectangle `[x_lo, x_hi] × [y_lo, y_hi]`.
///
/// Zero-width and zero-height rectangles (segments and points) are valid,
/// non-empty values. Build through [`Rect::new`], which returns
/// [`Rect::Empty`] for inverted bounds.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Rect {
    Empty,
    Bounds {
        x_lo: Rational,
        x_hi: Rational,
        y_lo: Rational,
        y_hi: Rational,
    },
}

impl Rect {
    pub fn new(x_lo: Rational, x_hi: Rational, y_lo: Rational, y_hi: Rational) -> Rect {
        if x_lo > x_hi || y_lo > y_hi {
            Rect::Empty
        } else {
            Rect::Bounds { x_lo, x_hi, y_lo, y_hi }
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Rect::Empty)
    }

    pub fn contains(&self, p: &Point) -> bool {
        match self {
            Rect::Empty => false,
            Rect::Bounds { x_lo, x_hi, y_lo, y_hi } => {
                *x_lo <= p.x && p.x <= *x_hi && *y_lo <= p.y && p.y <= *y_hi
            }
        }
    }

    /// `true` iff every point of `other` lies in `self`. The empty rectangle
    /// is contained in everything.
    pub fn contains_rect(&self, other: &Rect) -> bool {
        match (self, other) {
            (_, Rect::Empty) => true,
            (Rect::Empty, _) => false,
            (
                Rect::Bounds { x_lo, x_hi, y_lo, y_hi },
                Rect::Bounds { x_lo: a, x_hi: b, y_lo: c, y_hi: d },
            ) => x_lo <= a && b <= x_hi && y_lo <= c && d <= y_hi,
        }
    }

    /// Lower-left corner, if non-empty.
    pub fn min_corner(&self) -> Option<Point> {
        match self {
            Rect::Empty => None,
            Rect::Bounds { x_lo, y_lo, .. } => Some(Point::new(x_lo.clone(), y_lo.clone())),
        }
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rect::Empty => f.write_str("empty"),
            Rect::Bounds { x_lo, x_hi, y_lo, y_hi } => {
                write!(f, "[{x_lo}, {x_hi}]x[{y_lo}, {y_hi}]")
            }
        }
    }
}

/// The closed unit square `S(c)`: all points within L∞ distance 1 of `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitSquare {
    pub center: Point,
}

impl UnitSquare {
    pub fn new(center: Point) -> Self {
        Self { center }
    }

    pub fn body(&self) -> Rect {
        rect_of_square(&self.center)
    }
}

pub fn rect_of_square(c: &Point) -> Rect {
    let one = Rational::one();
    Rect::new(&c.x - &one, &c.x + &one, &c.y - &one, &c.y + &one)
}

pub fn intersect(a: &Rect, b: &Rect) -> Rect {
    match (a, b) {
        (Rect::Empty, _) | (_, Rect::Empty) => Rect::Empty,
        (
            Rect::Bounds { x_lo, x_hi, y_lo, y_hi },
            Rect::Bounds { x_lo: bx_lo, x_hi: bx_hi, y_lo: by_lo, y_hi: by_hi },
        ) => Rect::new(
            x_lo.max(bx_lo).clone(),
            x_hi.min(bx_hi).clone(),
            y_lo.max(by_lo).clone(),
            y_hi.min(by_hi).clone(),
        ),
    }
}

/// The smallest closed axis-aligned rectangle containing both points.
pub fn spanned_rect(a: &Point, b: &Point) -> Rect {
    Rect::new(
        a.x.clone().min(b.x.clone()),
        a.x.clone().max(b.x.clone()),
        a.y.clone().min(b.y.clone()),
        a.y.clone().max(b.y.clone()),
    )
}
