//! Static SVG and TikZ drawings of cup and circle diagrams.
//!
//! Vertices sit on a horizontal line inside a dotted frame. Cups hang below
//! the line, rays run to the bottom edge and half-cups bend off to the right
//! edge. For a circle diagram the top half is the mirror image of the first
//! diagram. Dots are drawn as open circles.

use std::fmt::Write;

use exotic_springer::diagram::{Connection, CupDiagram};
use exotic_springer::homology::EnrichedCupDiagram;

/// Horizontal spacing between vertices, in drawing units.
const UNIT: f64 = 1.0;

#[derive(Clone, Debug, PartialEq)]
enum Shape {
    /// Semicircle between `x0 < x1`, bulging in direction `dir` (+1 down, -1 up).
    Arc { x0: f64, x1: f64, dir: f64 },
    Segment { x0: f64, y0: f64, x1: f64, y1: f64 },
    /// Quadratic Bézier.
    Curve { p0: (f64, f64), c: (f64, f64), p1: (f64, f64) },
    Vertex { x: f64 },
    Dot { x: f64, y: f64 },
}

/// Everything to draw, in a coordinate system with the vertex line at `y = 0`
/// and `y` growing downwards.
#[derive(Debug)]
pub struct Figure {
    shapes: Vec<Shape>,
    width: f64,
    top: f64,
    bottom: f64,
}

fn x_of(i: usize) -> f64 {
    i as f64 * UNIT
}

/// Depth needed below the line by each half-cup, keyed by vertex.
fn half_cup_depths(d: &CupDiagram) -> Vec<(usize, f64)> {
    let m = d.m();
    let mut out = Vec::new();
    let mut floor = 0.0f64;
    for i in (1..=m).rev() {
        match d.connection(i) {
            Connection::CupWith(j) if j > i => floor = floor.max((j - i) as f64 * UNIT / 2.0),
            Connection::HalfCup => {
                floor += UNIT / 2.0;
                out.push((i, floor));
            }
            _ => {}
        }
    }
    out.reverse();
    out
}

fn depth(d: &CupDiagram) -> f64 {
    let cups = d.cups().iter().map(|&(i, j)| (j - i) as f64 * UNIT / 2.0).fold(0.0, f64::max);
    let halves = half_cup_depths(d).iter().map(|&(_, h)| h).fold(0.0, f64::max);
    cups.max(halves) + UNIT / 2.0
}

/// Adds one half of a drawing; `dir` is +1 below the line, -1 above it.
fn draw_half(shapes: &mut Vec<Shape>, d: &CupDiagram, dots: Option<&EnrichedCupDiagram>, dir: f64, edge: f64, right: f64) {
    let dotted = |v: usize| dots.is_some_and(|e| e.is_dotted(v));
    for (i, j) in d.cups() {
        let (x0, x1) = (x_of(i), x_of(j));
        shapes.push(Shape::Arc { x0, x1, dir });
        if dotted(i) {
            shapes.push(Shape::Dot { x: (x0 + x1) / 2.0, y: dir * (x1 - x0) / 2.0 });
        }
    }
    for r in d.rays() {
        let x = x_of(r);
        shapes.push(Shape::Segment { x0: x, y0: 0.0, x1: x, y1: dir * edge });
        if dotted(r) {
            shapes.push(Shape::Dot { x, y: dir * edge / 2.0 });
        }
    }
    for (h, depth) in half_cup_depths(d) {
        let x = x_of(h);
        let y = dir * depth;
        shapes.push(Shape::Curve { p0: (x, 0.0), c: (x, y), p1: (right, y) });
        if dotted(h) {
            shapes.push(Shape::Dot { x: 0.75 * x + 0.25 * right, y: 0.75 * y });
        }
    }
}

impl Figure {
    /// A single cup diagram, optionally enriched with dots.
    pub fn cup(d: &CupDiagram, dots: Option<&EnrichedCupDiagram>) -> Figure {
        let m = d.m();
        let right = x_of(m) + UNIT;
        let bottom = depth(d);
        let mut shapes = Vec::new();
        draw_half(&mut shapes, d, dots, 1.0, bottom, right);
        shapes.extend((1..=m).map(|i| Shape::Vertex { x: x_of(i) }));
        Figure { shapes, width: right, top: -UNIT / 2.0, bottom }
    }

    /// The circle diagram with `top` mirrored above `bottom`.
    pub fn circle(top: &CupDiagram, bottom: &CupDiagram) -> Figure {
        let m = top.m().max(bottom.m());
        let right = x_of(m) + UNIT;
        let (up, down) = (depth(top), depth(bottom));
        let mut shapes = Vec::new();
        draw_half(&mut shapes, top, None, -1.0, up, right);
        draw_half(&mut shapes, bottom, None, 1.0, down, right);
        shapes.extend((1..=m).map(|i| Shape::Vertex { x: x_of(i) }));
        Figure { shapes, width: right, top: -up, bottom: down }
    }

    pub fn to_svg(&self) -> String {
        let s = 40.0;
        let pad = 10.0;
        let w = self.width * s + 2.0 * pad;
        let h = (self.bottom - self.top) * s + 2.0 * pad;
        let px = |x: f64| x * s + pad;
        let py = |y: f64| (y - self.top) * s + pad;
        let mut out = String::new();
        writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#).unwrap();
        writeln!(
            out,
            r#"  <rect x="{pad}" y="{pad}" width="{}" height="{}" fill="none" stroke="black" stroke-dasharray="2,3"/>"#,
            w - 2.0 * pad,
            h - 2.0 * pad
        )
        .unwrap();
        writeln!(out, r#"  <g fill="none" stroke="black" stroke-width="1.5">"#).unwrap();
        for shape in &self.shapes {
            match *shape {
                Shape::Arc { x0, x1, dir } => {
                    let r = (x1 - x0) / 2.0 * s;
                    let sweep = if dir > 0.0 { 0 } else { 1 };
                    writeln!(out, r#"    <path d="M {} {} A {r} {r} 0 0 {sweep} {} {}"/>"#, px(x0), py(0.0), px(x1), py(0.0))
                        .unwrap();
                }
                Shape::Segment { x0, y0, x1, y1 } => {
                    writeln!(out, r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(x0), py(y0), px(x1), py(y1)).unwrap();
                }
                Shape::Curve { p0, c, p1 } => {
                    writeln!(
                        out,
                        r#"    <path d="M {} {} Q {} {} {} {}"/>"#,
                        px(p0.0),
                        py(p0.1),
                        px(c.0),
                        py(c.1),
                        px(p1.0),
                        py(p1.1)
                    )
                    .unwrap();
                }
                _ => {}
            }
        }
        writeln!(out, "  </g>").unwrap();
        for shape in &self.shapes {
            match *shape {
                Shape::Vertex { x } => {
                    writeln!(out, r#"  <circle cx="{}" cy="{}" r="3" fill="black"/>"#, px(x), py(0.0)).unwrap();
                }
                Shape::Dot { x, y } => {
                    writeln!(out, r#"  <circle cx="{}" cy="{}" r="4" fill="white" stroke="black" stroke-width="1.5"/>"#, px(x), py(y))
                        .unwrap();
                }
                _ => {}
            }
        }
        out.push_str("</svg>\n");
        out
    }

    pub fn to_tikz(&self) -> String {
        // TikZ has y pointing up
        let p = |x: f64, y: f64| format!("({x:.3},{:.3})", -y + 0.0);
        let mut out = String::from("\\begin{tikzpicture}[thick]\n");
        writeln!(out, "  \\draw[dotted] {} rectangle {};", p(0.0, self.top), p(self.width, self.bottom)).unwrap();
        for shape in &self.shapes {
            match *shape {
                Shape::Arc { x0, x1, dir } => {
                    let r = (x1 - x0) / 2.0;
                    let (from, to) = if dir > 0.0 { (180, 360) } else { (180, 0) };
                    writeln!(out, "  \\draw {} arc ({from}:{to}:{r:.3});", p(x0, 0.0)).unwrap();
                }
                Shape::Segment { x0, y0, x1, y1 } => {
                    writeln!(out, "  \\draw {} -- {};", p(x0, y0), p(x1, y1)).unwrap();
                }
                Shape::Curve { p0, c, p1 } => {
                    writeln!(out, "  \\draw {} .. controls {} .. {};", p(p0.0, p0.1), p(c.0, c.1), p(p1.0, p1.1)).unwrap();
                }
                _ => {}
            }
        }
        for shape in &self.shapes {
            match *shape {
                Shape::Vertex { x } => writeln!(out, "  \\fill {} circle (2pt);", p(x, 0.0)).unwrap(),
                Shape::Dot { x, y } => writeln!(out, "  \\draw[fill=white] {} circle (2.5pt);", p(x, y)).unwrap(),
                _ => {}
            }
        }
        out.push_str("\\end{tikzpicture}\n");
        out
    }
}
