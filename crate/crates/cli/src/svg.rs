//! Static SVG views of a ranked instance.
//!
//! The picture is the view from below the stack: the lowest-ranked square
//! is the one closest to the viewer, so squares are painted from the top of
//! the ranking down and the lowest one ends up on top. World coordinates map
//! to SVG units at a fixed 64 per unit, with y pointing up.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use unitsquares::geometry::{rat, Rational};
use unitsquares::{Error, Instance, Ranking, Result, VisibilityGraph};

pub const UNITS_PER_WORLD: i64 = 64;

const PALETTE: [&str; 8] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
];

/// Exact decimal rendering of `world * 64`, rounded half away from zero to
/// four places, trailing zeros trimmed.
fn num(world: &Rational) -> String {
    let scaled = (world * rat(UNITS_PER_WORLD * 10_000, 1)).round().to_integer();
    let (whole, frac) = scaled.abs().div_rem(&BigInt::from(10_000));
    let sign = if scaled.is_negative() { "-" } else { "" };
    if frac == BigInt::from(0) {
        format!("{sign}{whole}")
    } else {
        let digits = format!("{frac:0>4}");
        format!("{sign}{whole}.{}", digits.trim_end_matches('0'))
    }
}

fn bounding_box(inst: &Instance) -> (Rational, Rational, Rational, Rational) {
    let one = Rational::one();
    if inst.is_empty() {
        return (-&one, one.clone(), -&one, one);
    }
    let xs = inst.centers().iter().map(|c| &c.x);
    let ys = inst.centers().iter().map(|c| &c.y);
    (
        xs.clone().min().unwrap() - &one,
        xs.max().unwrap() + &one,
        ys.clone().min().unwrap() - &one,
        ys.max().unwrap() + &one,
    )
}

/// Renders `inst` stacked by `rk`, optionally overlaying `graph` as straight
/// segments between centers.
pub fn render_svg(inst: &Instance, rk: &Ranking, graph: Option<&VisibilityGraph>) -> Result<String> {
    if rk.len() != inst.len() {
        return Err(Error::InvalidRanking(format!(
            "ranking has {} entries but the instance has {} squares",
            rk.len(),
            inst.len()
        )));
    }
    if let Some(g) = graph {
        if g.n() != inst.len() {
            return Err(Error::InvalidRanking(format!(
                "graph is on {} vertices but the instance has {} squares",
                g.n(),
                inst.len()
            )));
        }
    }

    let (x_lo, x_hi, y_lo, y_hi) = bounding_box(inst);
    let margin_x = (&x_hi - &x_lo) * rat(1, 10);
    let margin_y = (&y_hi - &y_lo) * rat(1, 10);
    let left = &x_lo - &margin_x;
    let top = &y_hi + &margin_y;
    let width = &x_hi - &x_lo + &margin_x * rat(2, 1);
    let height = &y_hi - &y_lo + &margin_y * rat(2, 1);
    let (w, h) = (num(&width), num(&height));

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"{} {} {w} {h}\">",
        num(&left),
        num(&-&top)
    )
    .unwrap();
    writeln!(out, "<rect x=\"{}\" y=\"{}\" width=\"{w}\" height=\"{h}\" fill=\"#ffffff\"/>", num(&left), num(&-&top))
        .unwrap();

    let one = Rational::one();
    let side = num(&rat(2, 1));
    out.push_str("<g id=\"squares\" stroke=\"#333333\" stroke-width=\"1.5\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"central\">\n");
    for (rank, &i) in rk.order().iter().enumerate().rev() {
        let c = inst.center(i);
        let color = PALETTE[rank % PALETTE.len()];
        writeln!(
            out,
            "<rect x=\"{}\" y=\"{}\" width=\"{side}\" height=\"{side}\" fill=\"{color}\" fill-opacity=\"0.35\"/>",
            num(&(&c.x - &one)),
            num(&-(&c.y + &one))
        )
        .unwrap();
        writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" stroke=\"none\" fill=\"#000000\">{rank}</text>",
            num(&c.x),
            num(&-&c.y)
        )
        .unwrap();
    }
    out.push_str("</g>\n");

    if let Some(g) = graph {
        out.push_str("<g id=\"graph\" stroke=\"#c0392b\" stroke-width=\"2\" fill=\"#c0392b\">\n");
        for &(a, b) in g.edges() {
            let (p, q) = (inst.center(a), inst.center(b));
            writeln!(
                out,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                num(&p.x),
                num(&-&p.y),
                num(&q.x),
                num(&-&q.y)
            )
            .unwrap();
        }
        for c in inst.centers() {
            writeln!(out, "<circle cx=\"{}\" cy=\"{}\" r=\"3\" stroke=\"none\"/>", num(&c.x), num(&-&c.y)).unwrap();
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}
