#![allow(dead_code)]

use proptest::prelude::*;
use unitsquares::geometry::{rat, Point, Rational, Rect};
use unitsquares::Instance;

/// Value on the grid of pitch `1/pitch` in `[lo, hi]` (units of the grid).
pub fn grid(pitch: i64, lo: i64, hi: i64) -> impl Strategy<Value = Rational> {
    (lo..=hi).prop_map(move |k| rat(k, pitch))
}

pub fn grid_rect(pitch: i64, lo: i64, hi: i64) -> impl Strategy<Value = Rect> {
    (lo..=hi, lo..=hi, lo..=hi, lo..=hi).prop_map(move |(a, b, c, d)| {
        Rect::new(rat(a.min(b), pitch), rat(a.max(b), pitch), rat(c.min(d), pitch), rat(c.max(d), pitch))
    })
}

pub fn grid_point(pitch: i64, lo: i64, hi: i64) -> impl Strategy<Value = Point> {
    (grid(pitch, lo, hi), grid(pitch, lo, hi)).prop_map(|(x, y)| Point::new(x, y))
}

/// Instances with centers on a coarse grid so squares overlap a lot.
pub fn small_instance(max_n: usize) -> impl Strategy<Value = Instance> {
    prop::collection::vec(grid_point(4, 0, 12), 0..=max_n).prop_map(Instance::new)
}

pub fn distinct_instance(max_n: usize) -> impl Strategy<Value = Instance> {
    prop::collection::btree_set(grid_point(4, 0, 12), 0..=max_n)
        .prop_map(|set| Instance::new(set.into_iter().collect()))
}

pub fn pt(x: i64, y: i64) -> Point {
    Point::new(rat(x, 1), rat(y, 1))
}
