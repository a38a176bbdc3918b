//! Independent oracles and checkers.
//!
//! Reports render as line-oriented text with a fixed field order: a
//! `check <name>` line, the measured fields, `verdict pass|fail`, then any
//! certificate lines.

use std::fmt;

use rayon::prelude::*;

use crate::error::Result;
use crate::geometry::{classify_segments, intersect, Point, Rational, Rect, SegmentRelation};
use crate::ranking::{optimal_ranking, random_ranking, MAX_EXHAUSTIVE};
use crate::visibility::{Arrangement, Instance, Prefilter, Ranking, VisibilityGraph};

/// Largest `n` for which [`check_lower_bound`] enumerates every ranking.
pub const EXHAUSTIVE_LIMIT: usize = 8;

/// Coverage oracle by recursive splitting, sharing nothing with
/// [`crate::geometry::uncovered_witness`] except the `Rect` type.
///
/// A region is covered if one blocker contains it; it is free if no blocker
/// touches it. Otherwise it is cut along the lowest blocker boundary line
/// strictly inside it (x before y) into two closed halves sharing the cut,
/// and the halves are searched in order. When every blocker bound lies on
/// the region's border the center of the region is free.
pub fn uncovered_witness_subdivision(r: &Rect, blockers: &[Rect]) -> Option<Point> {
    let Rect::Bounds { x_lo, x_hi, y_lo, y_hi } = r else {
        return None;
    };
    if blockers.iter().any(|b| b.contains_rect(r)) {
        return None;
    }
    let clipped: Vec<Rect> = blockers.iter().map(|b| intersect(b, r)).filter(|c| !c.is_empty()).collect();
    if clipped.is_empty() {
        return r.min_corner();
    }

    let inner_cut = |lo: &Rational, hi: &Rational, pick: fn(&Rect) -> [&Rational; 2]| {
        clipped.iter().flat_map(pick).filter(|v| lo < *v && *v < hi).min().cloned()
    };
    if let Some(cut) = inner_cut(x_lo, x_hi, x_bounds) {
        let left = Rect::new(x_lo.clone(), cut.clone(), y_lo.clone(), y_hi.clone());
        let right = Rect::new(cut, x_hi.clone(), y_lo.clone(), y_hi.clone());
        return uncovered_witness_subdivision(&left, &clipped)
            .or_else(|| uncovered_witness_subdivision(&right, &clipped));
    }
    if let Some(cut) = inner_cut(y_lo, y_hi, y_bounds) {
        let lower = Rect::new(x_lo.clone(), x_hi.clone(), y_lo.clone(), cut.clone());
        let upper = Rect::new(x_lo.clone(), x_hi.clone(), cut, y_hi.clone());
        return uncovered_witness_subdivision(&lower, &clipped)
            .or_else(|| uncovered_witness_subdivision(&upper, &clipped));
    }
    let two = Rational::from_integer(2.into());
    Some(Point::new((x_lo + x_hi) / &two, (y_lo + y_hi) / &two))
}

fn x_bounds(b: &Rect) -> [&Rational; 2] {
    match b {
        Rect::Bounds { x_lo, x_hi, .. } => [x_lo, x_hi],
        Rect::Empty => unreachable!("empty clips were dropped"),
    }
}

fn y_bounds(b: &Rect) -> [&Rational; 2] {
    match b {
        Rect::Bounds { y_lo, y_hi, .. } => [y_lo, y_hi],
        Rect::Empty => unreachable!("empty clips were dropped"),
    }
}

pub type Edge = (usize, usize);

/// Result of checking a straight-line drawing for crossings.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CrossingReport {
    /// Edge pairs crossing at a point interior to both.
    pub crossings: Vec<(Edge, Edge)>,
    /// Edge pairs that overlap collinearly or touch without a shared
    /// endpoint (a vertex in the interior of the other edge). A zero-length
    /// edge is listed paired with itself.
    pub degenerate: Vec<(Edge, Edge)>,
}

impl CrossingReport {
    pub fn is_plane(&self) -> bool {
        self.crossings.is_empty() && self.degenerate.is_empty()
    }
}

/// Draws every square as its center and every edge as a segment, and checks
/// all edge pairs for crossings.
pub fn is_plane_embedding(inst: &Instance, g: &VisibilityGraph) -> CrossingReport {
    let edges = g.edges();
    let mut report = CrossingReport::default();
    for (idx, &(a, b)) in edges.iter().enumerate() {
        let (pa, pb) = (inst.center(a), inst.center(b));
        if pa == pb {
            report.degenerate.push(((a, b), (a, b)));
            continue;
        }
        for &(c, d) in &edges[idx + 1..] {
            let (pc, pd) = (inst.center(c), inst.center(d));
            if pc == pd {
                continue;
            }
            let shares = a == c || a == d || b == c || b == d;
            match classify_segments(pa, pb, pc, pd) {
                Err(_) => report.degenerate.push(((a, b), (c, d))),
                Ok(SegmentRelation::ProperCrossing) if !shares => report.crossings.push(((a, b), (c, d))),
                Ok(SegmentRelation::Touching) if !shares => report.degenerate.push(((a, b), (c, d))),
                Ok(_) => {}
            }
        }
    }
    report
}

/// Most edges a lexicographic-ranking visibility graph can have on `n`
/// squares: `3n − 7` for `n ≥ 4`, a complete graph below that.
pub fn max_edges_bound(n: usize) -> usize {
    match n {
        0 | 1 => 0,
        2 => 1,
        3 => 3,
        _ => 3 * n - 7,
    }
}

/// Euler's bound for simple planar graphs, `3n − 6` when `n ≥ 3`.
pub fn planar_edges_bound(n: usize) -> usize {
    if n >= 3 {
        3 * n - 6
    } else {
        max_edges_bound(n)
    }
}

/// Minimum edge count over all `n!` rankings.
pub fn exhaustive_min_edges(inst: &Instance, cap: usize) -> Result<usize> {
    optimal_ranking(inst, cap).map(|(_, count)| count)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

fn fmt_edges(edges: &[Edge]) -> String {
    edges.iter().map(|(a, b)| format!(" {a}-{b}")).collect()
}

fn fmt_order(rk: &Ranking) -> String {
    rk.order().iter().map(|i| format!(" {i}")).collect()
}

/// A ranking that violates a lower-bound claim, with its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub ranking: Ranking,
    pub edges: Vec<Edge>,
    /// Seed that produced the ranking, for sampled checks.
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerBoundMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundReport {
    pub mode: LowerBoundMode,
    pub n: usize,
    /// Fewest edges seen: over all rankings, or over the samples.
    pub min_edges: Option<usize>,
    pub target: usize,
    pub forced: usize,
    /// Forced edges needed in sampled mode (`2n − 4`).
    pub forced_required: Option<usize>,
    pub verdict: Verdict,
    pub certificate: Option<Certificate>,
}

/// Checks that every ranking of `inst` has at least `target` edges.
///
/// Up to `exhaustive_limit` squares (never more than [`MAX_EXHAUSTIVE`])
/// all rankings are enumerated. Above that the claim is only
/// evidence-checked: at least `2n − 4` forced edges, and each of `samples`
/// rankings `random_ranking(n, seed + k)` must reach `target`.
pub fn check_lower_bound(
    inst: &Instance,
    target: usize,
    samples: usize,
    seed: u64,
    exhaustive_limit: usize,
) -> LowerBoundReport {
    let n = inst.len();
    let arr = Arrangement::new(inst);
    let forced = arr.forced_edges().len();

    if n <= exhaustive_limit.min(MAX_EXHAUSTIVE) {
        let (best, min_edges) = optimal_ranking(inst, n).expect("n within limits");
        let ok = min_edges >= target;
        let certificate = (!ok).then(|| Certificate {
            edges: arr.graph(&best, Prefilter::Enabled).expect("valid ranking").edges().to_vec(),
            ranking: best,
            seed: None,
        });
        return LowerBoundReport {
            mode: LowerBoundMode::Exhaustive,
            n,
            min_edges: Some(min_edges),
            target,
            forced,
            forced_required: None,
            verdict: Verdict::from_bool(ok),
            certificate,
        };
    }

    let forced_required = (2 * n).saturating_sub(4);
    let graphs: Vec<(u64, Ranking, VisibilityGraph)> = (0..samples as u64)
        .into_par_iter()
        .map(|k| {
            let sample_seed = seed.wrapping_add(k);
            let rk = random_ranking(n, sample_seed);
            let g = arr.graph(&rk, Prefilter::Enabled).expect("valid ranking");
            (sample_seed, rk, g)
        })
        .collect();
    let min_edges = graphs.iter().map(|(_, _, g)| g.edge_count()).min();
    let certificate = graphs
        .into_iter()
        .find(|(_, _, g)| g.edge_count() < target)
        .map(|(s, rk, g)| Certificate { ranking: rk, edges: g.edges().to_vec(), seed: Some(s) });
    let ok = forced >= forced_required && certificate.is_none();
    LowerBoundReport {
        mode: LowerBoundMode::Sampled { samples, seed },
        n,
        min_edges,
        target,
        forced,
        forced_required: Some(forced_required),
        verdict: Verdict::from_bool(ok),
        certificate,
    }
}

impl fmt::Display for LowerBoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check lowerbound")?;
        match self.mode {
            LowerBoundMode::Exhaustive => writeln!(f, "mode exhaustive")?,
            LowerBoundMode::Sampled { .. } => writeln!(f, "mode sampled")?,
        }
        writeln!(f, "n {}", self.n)?;
        match self.min_edges {
            Some(m) => writeln!(f, "min_edges {m}")?,
            None => writeln!(f, "min_edges none")?,
        }
        writeln!(f, "bound {}", self.target)?;
        writeln!(f, "forced {}", self.forced)?;
        if let Some(required) = self.forced_required {
            writeln!(f, "forced_required {required}")?;
        }
        if let LowerBoundMode::Sampled { samples, seed } = self.mode {
            writeln!(f, "samples {samples}")?;
            writeln!(f, "seed {seed}")?;
        }
        writeln!(f, "verdict {}", self.verdict)?;
        if let Some(cert) = &self.certificate {
            writeln!(f, "certificate ranking{}", fmt_order(&cert.ranking))?;
            if let Some(seed) = cert.seed {
                writeln!(f, "certificate seed {seed}")?;
            }
            writeln!(f, "certificate edge_count {}", cert.edges.len())?;
            writeln!(f, "certificate edges{}", fmt_edges(&cert.edges))?;
        }
        Ok(())
    }
}

/// Planarity of the straight-line drawing of one ranking's graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarityReport {
    pub ranking_name: String,
    pub n: usize,
    pub edges: usize,
    pub crossings: CrossingReport,
    pub verdict: Verdict,
}

pub fn check_planarity(inst: &Instance, g: &VisibilityGraph, ranking_name: &str) -> PlanarityReport {
    let crossings = is_plane_embedding(inst, g);
    PlanarityReport {
        ranking_name: ranking_name.to_string(),
        n: inst.len(),
        edges: g.edge_count(),
        verdict: Verdict::from_bool(crossings.is_plane()),
        crossings,
    }
}

impl fmt::Display for PlanarityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check planarity")?;
        writeln!(f, "ranking {}", self.ranking_name)?;
        writeln!(f, "n {}", self.n)?;
        writeln!(f, "edges {}", self.edges)?;
        writeln!(f, "crossings {}", self.crossings.crossings.len())?;
        writeln!(f, "degenerate {}", self.crossings.degenerate.len())?;
        writeln!(f, "verdict {}", self.verdict)?;
        for (e1, e2) in &self.crossings.crossings {
            writeln!(f, "certificate crossing{}{}", fmt_edges(&[*e1]), fmt_edges(&[*e2]))?;
        }
        for (e1, e2) in &self.crossings.degenerate {
            writeln!(f, "certificate degenerate{}{}", fmt_edges(&[*e1]), fmt_edges(&[*e2]))?;
        }
        Ok(())
    }
}

/// Edge count of one ranking's graph against `3n − 7` and `3n − 6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub ranking_name: String,
    pub n: usize,
    pub edges: usize,
    pub bound: usize,
    pub planar_bound: usize,
    pub verdict: Verdict,
}

pub fn check_edge_bound(g: &VisibilityGraph, ranking_name: &str) -> BoundReport {
    let n = g.n();
    let bound = max_edges_bound(n);
    let planar_bound = planar_edges_bound(n);
    let edges = g.edge_count();
    BoundReport {
        ranking_name: ranking_name.to_string(),
        n,
        edges,
        bound,
        planar_bound,
        verdict: Verdict::from_bool(edges <= bound && edges <= planar_bound),
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check bound")?;
        writeln!(f, "ranking {}", self.ranking_name)?;
        writeln!(f, "n {}", self.n)?;
        writeln!(f, "edges {}", self.edges)?;
        writeln!(f, "bound {}", self.bound)?;
        writeln!(f, "planar_bound {}", self.planar_bound)?;
        writeln!(f, "verdict {}", self.verdict)
    }
}
