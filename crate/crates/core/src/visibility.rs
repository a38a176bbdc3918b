//! Instances, rankings and the visibility graph of a ranking.
//!
//! Square `i` sees square `k` (ranked above it) when some point of
//! `body(i) ∩ body(k)` is covered by none of the squares ranked strictly
//! between them. [`Arrangement`] answers such questions for one instance
//! after replacing every coordinate by its rank among all coordinates of
//! the same axis. Coverage only depends on coordinate order, so the answers
//! are those of the rational procedure, but the inner loops compare small
//! integers.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{first_uncovered_cell, rect_of_square, Cell, GridBox, Point, Rational, Rect, UnitSquare};

/// An ordered list of unit-square centers. Square `i` is the one centered at
/// `centers()[i]`; duplicates are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Instance {
    centers: Vec<Point>,
}

impl Instance {
    pub fn new(centers: Vec<Point>) -> Self {
        Self { centers }
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    pub fn centers(&self) -> &[Point] {
        &self.centers
    }

    pub fn center(&self, i: usize) -> &Point {
        &self.centers[i]
    }

    pub fn square(&self, i: usize) -> UnitSquare {
        UnitSquare::new(self.centers[i].clone())
    }

    pub fn body(&self, i: usize) -> Rect {
        rect_of_square(&self.centers[i])
    }

    pub fn has_duplicate_centers(&self) -> bool {
        let distinct: BTreeSet<&Point> = self.centers.iter().collect();
        distinct.len() != self.centers.len()
    }

    /// The sub-instance made of the squares `keep`, in that order.
    pub fn select(&self, keep: &[usize]) -> Instance {
        Instance::new(keep.iter().map(|&i| self.centers[i].clone()).collect())
    }
}

/// A stacking order: `order()[0]` is the lowest square.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ranking {
    order: Vec<usize>,
}

impl Ranking {
    /// Fails unless `order` is a permutation of `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &i in &order {
            if i >= n {
                return Err(Error::InvalidRanking(format!("index {i} out of range for n = {n}")));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidRanking(format!("index {i} appears twice")));
            }
        }
        Ok(Self { order })
    }

    pub fn identity(n: usize) -> Self {
        Self { order: (0..n).collect() }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `positions()[i]` is the rank of square `i`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (rank, &i) in self.order.iter().enumerate() {
            pos[i] = rank;
        }
        pos
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.order.len() == n {
            Ok(())
        } else {
            Err(Error::InvalidRanking(format!(
                "ranking has {} entries but the instance has {n} squares",
                self.order.len()
            )))
        }
    }
}

/// Undirected simple graph on `0..n`, edges stored as `(i, k)` with `i < k`
/// in ascending lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VisibilityGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl VisibilityGraph {
    /// Canonicalizes the given pairs. Fails on self-loops or endpoints `>= n`.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges = BTreeSet::new();
        for (a, b) in pairs {
            if a == b || a >= n || b >= n {
                return Err(Error::InvalidRanking(format!("bad edge ({a}, {b}) for n = {n}")));
            }
            edges.insert((a.min(b), a.max(b)));
        }
        Ok(Self { n, edges: edges.into_iter().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }
}

/// Whether the Observation-1 shortcut runs before the coverage test: a pair
/// whose spanned rectangle contains the center of an intermediate square is
/// never an edge, because that square contains the whole intersection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Prefilter {
    #[default]
    Enabled,
    Disabled,
}

/// Rank-compressed view of an instance.
#[derive(Debug, Clone)]
pub struct Arrangement {
    xs: Vec<Rational>,
    ys: Vec<Rational>,
    boxes: Vec<GridBox<u32>>,
    center_ranks: Vec<(u32, u32)>,
}

fn ranks_of(values: &[Rational]) -> (Vec<Rational>, Vec<u32>) {
    let mut sorted = values.to_vec();
    sorted.sort();
    sorted.dedup();
    let ranks = values
        .iter()
        .map(|v| sorted.binary_search(v).expect("present") as u32)
        .collect();
    (sorted, ranks)
}

impl Arrangement {
    pub fn new(inst: &Instance) -> Self {
        let bodies: Vec<Rect> = (0..inst.len()).map(|i| inst.body(i)).collect();
        let mut x_bounds = Vec::with_capacity(2 * bodies.len());
        let mut y_bounds = Vec::with_capacity(2 * bodies.len());
        for body in &bodies {
            if let Rect::Bounds { x_lo, x_hi, y_lo, y_hi } = body {
                x_bounds.extend([x_lo.clone(), x_hi.clone()]);
                y_bounds.extend([y_lo.clone(), y_hi.clone()]);
            }
        }
        let (xs, x_ranks) = ranks_of(&x_bounds);
        let (ys, y_ranks) = ranks_of(&y_bounds);
        let boxes = (0..bodies.len())
            .map(|i| GridBox {
                x_lo: x_ranks[2 * i],
                x_hi: x_ranks[2 * i + 1],
                y_lo: y_ranks[2 * i],
                y_hi: y_ranks[2 * i + 1],
            })
            .collect();

        let cx: Vec<Rational> = inst.centers().iter().map(|c| c.x.clone()).collect();
        let cy: Vec<Rational> = inst.centers().iter().map(|c| c.y.clone()).collect();
        let center_ranks = ranks_of(&cx).1.into_iter().zip(ranks_of(&cy).1).collect();
        Self { xs, ys, boxes, center_ranks }
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn bodies_meet(&self, i: usize, k: usize) -> bool {
        !self.boxes[i].intersect(&self.boxes[k]).is_empty()
    }

    fn value(axis: &[Rational], cell: Cell<u32>) -> Rational {
        match cell {
            Cell::At(a) => axis[a as usize].clone(),
            Cell::Between(a, b) => Cell::Between(&axis[a as usize], &axis[b as usize]).value(),
        }
    }

    /// A point of `body(i) ∩ body(k)` outside every square in `blockers`,
    /// chosen exactly as [`crate::geometry::uncovered_witness`] would.
    pub fn witness(&self, i: usize, k: usize, blockers: &[usize]) -> Option<Point> {
        let region = self.boxes[i].intersect(&self.boxes[k]);
        let (cx, cy) = first_uncovered_cell(&region, blockers.iter().map(|&j| self.boxes[j]))?;
        Some(Point::new(Self::value(&self.xs, cx), Self::value(&self.ys, cy)))
    }

    pub fn sees(&self, i: usize, k: usize, blockers: &[usize]) -> bool {
        let region = self.boxes[i].intersect(&self.boxes[k]);
        first_uncovered_cell(&region, blockers.iter().map(|&j| self.boxes[j])).is_some()
    }

    /// `true` iff the center of some square in `between` lies in the
    /// rectangle spanned by the centers of `i` and `k`.
    pub fn obs1_blocked(&self, i: usize, k: usize, between: &[usize]) -> bool {
        let (xi, yi) = self.center_ranks[i];
        let (xk, yk) = self.center_ranks[k];
        let (x_lo, x_hi) = (xi.min(xk), xi.max(xk));
        let (y_lo, y_hi) = (yi.min(yk), yi.max(yk));
        between.iter().any(|&j| {
            let (x, y) = self.center_ranks[j];
            x_lo <= x && x <= x_hi && y_lo <= y && y <= y_hi
        })
    }

    fn pair_is_edge(&self, order: &[usize], s: usize, t: usize, prefilter: Prefilter) -> bool {
        let (i, k) = (order[s], order[t]);
        if !self.bodies_meet(i, k) {
            return false;
        }
        let between = &order[s + 1..t];
        if prefilter == Prefilter::Enabled && self.obs1_blocked(i, k, between) {
            return false;
        }
        self.sees(i, k, between)
    }

    /// The visibility graph of `rk`; the pair loop runs in parallel.
    pub fn graph(&self, rk: &Ranking, prefilter: Prefilter) -> Result<VisibilityGraph> {
        rk.check_len(self.len())?;
        let order = rk.order();
        let n = order.len();
        let pairs: Vec<(usize, usize)> = (0..n)
            .into_par_iter()
            .flat_map_iter(|s| {
                (s + 1..n)
                    .filter(move |&t| self.pair_is_edge(order, s, t, prefilter))
                    .map(move |t| (order[s], order[t]))
            })
            .collect();
        VisibilityGraph::new(n, pairs)
    }

    /// Pairs that see each other even with every other square in between.
    pub fn forced_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges: Vec<(usize, usize)> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                (i + 1..n).filter_map(move |k| {
                    if !self.bodies_meet(i, k) {
                        return None;
                    }
                    let others: Vec<usize> = (0..n).filter(|&j| j != i && j != k).collect();
                    if self.obs1_blocked(i, k, &others) || !self.sees(i, k, &others) {
                        return None;
                    }
                    Some((i, k))
                })
            })
            .collect();
        edges.sort_unstable();
        edges
    }
}

fn check_positions(n: usize, s: usize, t: usize) -> Result<()> {
    if s < t && t < n {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { s, t, n })
    }
}

/// Does the square at rank `s` see the square at rank `t`?
pub fn pair_sees(inst: &Instance, rk: &Ranking, s: usize, t: usize) -> Result<bool> {
    pair_witness(inst, rk, s, t).map(|w| w.is_some())
}

/// Like [`pair_sees`], returning the witness point when the pair sees.
pub fn pair_witness(inst: &Instance, rk: &Ranking, s: usize, t: usize) -> Result<Option<Point>> {
    rk.check_len(inst.len())?;
    check_positions(inst.len(), s, t)?;
    let order = rk.order();
    Ok(Arrangement::new(inst).witness(order[s], order[t], &order[s + 1..t]))
}

pub fn obs1_blocked(inst: &Instance, rk: &Ranking, s: usize, t: usize) -> Result<bool> {
    rk.check_len(inst.len())?;
    check_positions(inst.len(), s, t)?;
    let order = rk.order();
    Ok(Arrangement::new(inst).obs1_blocked(order[s], order[t], &order[s + 1..t]))
}

pub fn visibility_graph(inst: &Instance, rk: &Ranking) -> Result<VisibilityGraph> {
    visibility_graph_with(inst, rk, Prefilter::Enabled)
}

pub fn visibility_graph_with(inst: &Instance, rk: &Ranking, prefilter: Prefilter) -> Result<VisibilityGraph> {
    Arrangement::new(inst).graph(rk, prefilter)
}

/// Pairs that are edges under every ranking: some point of their common
/// intersection lies in no other square at all. This is sufficient for
/// being an edge of every visibility graph, not necessary.
pub fn forced_edges(inst: &Instance) -> Vec<(usize, usize)> {
    Arrangement::new(inst).forced_edges()
}
