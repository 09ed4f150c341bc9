//! Schematic pictures of a census, as text or SVG.
//!
//! These show what is in each region and how many, not where the curves
//! actually run: strands are stylised arcs and twisting components are
//! drawn as chords across the handle annotated with their twist numbers.

use std::fmt::Write;

use crate::census::{Decomposition, TwistSign};
use crate::scalar::Scalar;

/// Above this many parallel strands a single strand with a `×N` label is
/// drawn instead.
pub const STRAND_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementKind {
    Above,
    Below,
    LeftLoops,
    RightLoops,
    FrontGenus,
    BackGenus,
    CCopies,
    Twisting,
}

impl ElementKind {
    pub fn class(self) -> &'static str {
        match self {
            ElementKind::Above => "above",
            ElementKind::Below => "below",
            ElementKind::LeftLoops => "left-loops",
            ElementKind::RightLoops => "right-loops",
            ElementKind::FrontGenus => "front-genus",
            ElementKind::BackGenus => "back-genus",
            ElementKind::CCopies => "c-copies",
            ElementKind::Twisting => "twisting",
        }
    }
}

/// One labelled group of parallel arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element<S> {
    pub kind: ElementKind,
    /// 1-based puncture region, `None` for the handle region.
    pub region: Option<usize>,
    pub label: String,
    pub multiplicity: S,
}

impl<S: Scalar> Element<S> {
    /// Strands actually drawn, and whether the `×N` fallback applies.
    pub fn strands(&self) -> (usize, bool) {
        match self.multiplicity.to_usize() {
            Some(k) if k <= STRAND_CAP => (k, false),
            _ => (1, true),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Schematic<S> {
    pub width: u32,
    pub height: u32,
    pub elements: Vec<Element<S>>,
}

const BOX_W: u32 = 180;
const BOX_H: u32 = 220;
const MARGIN: u32 = 20;
const TOP: u32 = 40;

/// Collects one element per nonzero census field.
pub fn schematic<S: Scalar>(d: &Decomposition<S>) -> Schematic<S> {
    let mut elements = Vec::new();
    let mut push = |kind, region: Option<usize>, mult: &S| {
        if mult.is_zero() {
            return;
        }
        let place = region.map_or_else(|| "G".to_string(), |i| format!("U{i}"));
        elements.push(Element {
            kind,
            region,
            label: format!("{place} {}", kind.class()),
            multiplicity: mult.clone(),
        });
    };
    for i in 0..d.n {
        push(ElementKind::Above, Some(i + 1), &d.above[i]);
        push(ElementKind::Below, Some(i + 1), &d.below[i]);
        let loops = &d.loops[i];
        let kind = if loops.is_negative() {
            ElementKind::LeftLoops
        } else {
            ElementKind::RightLoops
        };
        push(kind, Some(i + 1), &loops.abs());
    }
    push(ElementKind::FrontGenus, None, &d.front_genus);
    push(ElementKind::BackGenus, None, &d.back_genus);
    push(ElementKind::CCopies, None, &d.c_copies);
    push(ElementKind::Twisting, None, &d.twisting_count);

    let boxes = d.n as u32 + 1;
    Schematic {
        width: 2 * MARGIN + boxes * BOX_W + (boxes - 1) * MARGIN,
        height: TOP + BOX_H + 3 * 12 + 2 * MARGIN,
        elements,
    }
}

/// `2×2 + 1×1`: how many components carry which twist number.
fn twist_terms<S: Scalar>(d: &Decomposition<S>) -> String {
    let split = &d.twist_split;
    let rest = d.twisting_count.clone() - split.m.clone();
    let mut terms = Vec::new();
    if split.m.is_positive() {
        terms.push(format!("{}\u{d7}{}", split.m, split.t.clone() + S::one()));
    }
    if rest.is_positive() {
        terms.push(format!("{rest}\u{d7}{}", split.t));
    }
    terms.join(" + ")
}

pub fn render_ascii<S: Scalar>(d: &Decomposition<S>) -> String {
    let mut out = String::new();
    for i in 0..d.n {
        let _ = write!(out, "U{}  a:{}  b:{}", i + 1, d.above[i], d.below[i]);
        let loops = &d.loops[i];
        if loops.is_negative() {
            let _ = write!(out, "  L:{}", loops.abs());
        } else if loops.is_positive() {
            let _ = write!(out, "  R:{loops}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "G   front: {}  back: {}", d.front_genus, d.back_genus);
    if d.c_copies.is_positive() {
        let _ = writeln!(out, "    c-copies: {}", d.c_copies);
    }
    if d.twisting_count.is_positive() {
        let noun = if d.twisting_count.is_one() { "component" } else { "components" };
        let _ = writeln!(
            out,
            "    twist: {} {noun}, sign {}, {}",
            d.twisting_count,
            d.twist_sign,
            twist_terms(d)
        );
    }
    out
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn box_origin(slot: u32) -> (f64, f64) {
    ((MARGIN + slot * (BOX_W + MARGIN)) as f64, TOP as f64)
}

/// Path data for the `k`-th strand of an element.
fn strand_path(kind: ElementKind, origin: (f64, f64), k: usize) -> String {
    let (x0, y0) = origin;
    let (w, h) = (BOX_W as f64, BOX_H as f64);
    let (cx, cy) = (x0 + w / 2.0, y0 + h / 2.0);
    let step = 6.0;
    let k = k as f64;
    match kind {
        ElementKind::Above => {
            let y = cy - 30.0 - k * step;
            format!("M {x0:.1} {y:.1} Q {cx:.1} {:.1} {:.1} {y:.1}", y - 20.0, x0 + w)
        }
        ElementKind::Below => {
            let y = cy + 30.0 + k * step;
            format!("M {x0:.1} {y:.1} Q {cx:.1} {:.1} {:.1} {y:.1}", y + 20.0, x0 + w)
        }
        ElementKind::RightLoops => {
            // both ends on the left side of the strip
            let r = 12.0 + k * 4.0;
            format!(
                "M {x0:.1} {:.1} C {:.1} {:.1} {:.1} {:.1} {x0:.1} {:.1}",
                cy - r,
                cx + r,
                cy - r,
                cx + r,
                cy + r,
                cy + r
            )
        }
        ElementKind::LeftLoops => {
            let r = 12.0 + k * 4.0;
            let x1 = x0 + w;
            format!(
                "M {x1:.1} {:.1} C {:.1} {:.1} {:.1} {:.1} {x1:.1} {:.1}",
                cy - r,
                cx - r,
                cy - r,
                cx - r,
                cy + r,
                cy + r
            )
        }
        ElementKind::BackGenus => {
            // ends on beta_1, the left side of the handle box
            let r = 10.0 + k * 4.0;
            let y = y0 + 40.0;
            format!("M {x0:.1} {:.1} C {:.1} {:.1} {:.1} {:.1} {x0:.1} {:.1}", y - r, x0 + 2.0 * r, y - r, x0 + 2.0 * r, y + r, y + r)
        }
        ElementKind::FrontGenus => {
            let r = 10.0 + k * 4.0;
            let y = y0 + 40.0;
            let x1 = x0 + w;
            format!("M {x1:.1} {:.1} C {:.1} {:.1} {:.1} {:.1} {x1:.1} {:.1}", y - r, x1 - 2.0 * r, y - r, x1 - 2.0 * r, y + r, y + r)
        }
        ElementKind::CCopies => {
            let rx = 20.0 + k * step;
            let ry = 34.0 + k * step;
            format!(
                "M {:.1} {cy:.1} A {rx:.1} {ry:.1} 0 1 0 {:.1} {cy:.1} A {rx:.1} {ry:.1} 0 1 0 {:.1} {cy:.1} Z",
                cx - rx,
                cx + rx,
                cx - rx
            )
        }
        ElementKind::Twisting => {
            let y = cy + 20.0 + k * step;
            format!(
                "M {x0:.1} {y:.1} C {:.1} {:.1} {:.1} {:.1} {:.1} {y:.1}",
                cx - 20.0,
                y + 40.0,
                cx + 20.0,
                y - 40.0,
                x0 + w
            )
        }
    }
}

/// Twist number carried by twisting strand `k`: the first `m` carry `t + 1`.
fn strand_twist<S: Scalar>(d: &Decomposition<S>, k: usize) -> S {
    let split = &d.twist_split;
    let base = if S::from_usize(k).is_some_and(|k| k < split.m) {
        split.t.clone() + S::one()
    } else {
        split.t.clone()
    };
    d.twist_sign.apply(base)
}

pub fn render_svg<S: Scalar>(d: &Decomposition<S>) -> String {
    let sch = schematic(d);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = sch.width,
        h = sch.height
    );
    let _ = writeln!(
        out,
        r#"<style>.frame{{fill:none;stroke:#888}} .strand{{fill:none;stroke:#1f4e9c;stroke-width:1.2}} .twisting{{stroke:#b03a2e}} text{{font-family:monospace;font-size:11px}}</style>"#
    );

    // handle region first, then the strips
    let (gx, gy) = box_origin(0);
    let _ = writeln!(
        out,
        r#"<rect class="frame region" data-region="G" x="{gx:.1}" y="{gy:.1}" width="{BOX_W}" height="{BOX_H}"/>"#
    );
    let cx = gx + BOX_W as f64 / 2.0;
    let _ = writeln!(
        out,
        r#"<line class="frame curve-c" x1="{cx:.1}" y1="{gy:.1}" x2="{cx:.1}" y2="{:.1}" stroke-dasharray="4 3"/>"#,
        gy + BOX_H as f64
    );
    let _ = writeln!(out, r#"<text x="{gx:.1}" y="{:.1}">G</text>"#, gy - 6.0);
    for i in 0..d.n {
        let (x, y) = box_origin(i as u32 + 1);
        let _ = writeln!(
            out,
            r#"<rect class="frame region" data-region="U{r}" x="{x:.1}" y="{y:.1}" width="{BOX_W}" height="{BOX_H}"/>"#,
            r = i + 1
        );
        let _ = writeln!(
            out,
            r#"<circle class="puncture" cx="{:.1}" cy="{:.1}" r="3"/>"#,
            x + BOX_W as f64 / 2.0,
            y + BOX_H as f64 / 2.0
        );
        let _ = writeln!(out, r#"<text x="{x:.1}" y="{:.1}">U{}</text>"#, y - 6.0, i + 1);
    }

    let mut label_rows = std::collections::HashMap::<u32, u32>::new();
    for el in &sch.elements {
        let slot = el.region.map_or(0, |r| r as u32);
        let origin = box_origin(slot);
        let (count, overflow) = el.strands();
        let _ = writeln!(
            out,
            r#"<g class="element {}" data-label="{}" data-multiplicity="{}">"#,
            el.kind.class(),
            escape(&el.label),
            el.multiplicity
        );
        for k in 0..count {
            let path = strand_path(el.kind, origin, k);
            if el.kind == ElementKind::Twisting {
                let twist = if overflow { d.signed_twist() } else { strand_twist(d, k) };
                let _ = writeln!(out, r#"<path class="strand {}" data-twist="{twist}" d="{path}"/>"#, el.kind.class());
            } else {
                let _ = writeln!(out, r#"<path class="strand {}" d="{path}"/>"#, el.kind.class());
            }
        }
        let row = label_rows.entry(slot).or_insert(0);
        let ty = origin.1 + BOX_H as f64 + 14.0 + *row as f64 * 12.0;
        *row += 1;
        let mut text = format!("{} {}", el.kind.class(), el.multiplicity);
        if el.kind == ElementKind::Twisting {
            let sign = match d.twist_sign {
                TwistSign::Negative => "\u{2212}",
                TwistSign::Zero => "0",
                TwistSign::Positive => "+",
            };
            let _ = write!(text, " (t={}, m={}, sign {sign})", d.twist_split.t, d.twist_split.m);
        }
        let _ = writeln!(out, r#"<text class="label" x="{:.1}" y="{ty:.1}">{}</text>"#, origin.0 + 4.0, escape(&text));
        if overflow {
            let _ = writeln!(
                out,
                r#"<text class="overflow" x="{:.1}" y="{:.1}">{}</text>"#,
                origin.0 + BOX_W as f64 - 40.0,
                origin.1 + 14.0,
                escape(&format!("\u{d7}{}", el.multiplicity))
            );
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, "</svg>");
    out
}
