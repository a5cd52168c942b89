//! SVG diagrams of walls in the (beta, alpha) half-plane.
//!
//! Geometry stays exact until `render`, which writes four decimals.

use std::fmt::Write as _;

use crate::chern::TruncatedClass;
use crate::error::{Error, Result};
use crate::rational::{fmt_q, q, qi, to_f64, Q};
use crate::surd::QuadraticSurd;
use crate::walls::{accumulation_points, straight_wall, WallDescriptor};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 40.0;

#[derive(Debug, Clone)]
pub struct PlotSpec {
    pub class: TruncatedClass,
    pub beta_range: (Q, Q),
    pub alpha_max: Q,
    pub walls: Vec<WallDescriptor>,
    pub accumulation: Vec<QuadraticSurd>,
    pub straight_wall: Option<Q>,
    pub guides: Vec<Q>,
}

impl PlotSpec {
    /// Nothing drawn yet.
    pub fn bare(class: TruncatedClass) -> Self {
        Self {
            class,
            beta_range: (qi(-2), qi(1)),
            alpha_max: qi(1),
            walls: Vec::new(),
            accumulation: Vec::new(),
            straight_wall: None,
            guides: Vec::new(),
        }
    }

    /// Straight wall and accumulation points of `class`, when they exist.
    pub fn for_class(class: TruncatedClass) -> Self {
        let mut s = Self::bare(class.clone());
        s.straight_wall = straight_wall(&class);
        if class.reduced_discriminant() > qi(0) {
            if let Ok((a, b)) = accumulation_points(&class) {
                s.accumulation = vec![a, b];
            }
        }
        if let Some(b) = &s.straight_wall {
            s.guides.push(b.clone());
        }
        s.fit_range();
        s
    }

    /// The first wall of `(3,0,-1)` with guides at 0, -5/6 and -1.
    pub fn first_wall_figure() -> Self {
        let mut s = Self::for_class(TruncatedClass::from_ints(3, 0, -1, 1));
        s.walls.push(WallDescriptor::semicircle(q(-5, 6), q(1, 36)));
        s.guides = vec![qi(0), q(-5, 6), qi(-1)];
        s.beta_range = (q(-5, 4), q(1, 4));
        s.alpha_max = q(1, 2);
        s
    }

    pub fn with_wall(mut self, w: WallDescriptor) -> Self {
        self.walls.push(w);
        self.fit_range();
        self
    }

    pub fn with_guide(mut self, beta: Q) -> Self {
        self.guides.push(beta);
        self.fit_range();
        self
    }

    fn fit_range(&mut self) {
        let mut xs: Vec<Q> = Vec::new();
        let mut top = qi(0);
        for w in &self.walls {
            match w {
                WallDescriptor::Semicircle { center, radius_sq } => {
                    let r = crate::rational::sqrt_upper(radius_sq);
                    xs.push(center - &r);
                    xs.push(center + &r);
                    top = top.max(r);
                }
                WallDescriptor::Vertical { beta } => xs.push(beta.clone()),
                _ => {}
            }
        }
        for a in &self.accumulation {
            xs.push(a.floor_dyadic(4));
            xs.push(a.ceil_dyadic(4));
        }
        xs.extend(self.straight_wall.iter().cloned());
        xs.extend(self.guides.iter().cloned());
        let (Some(lo), Some(hi)) = (xs.iter().min(), xs.iter().max()) else {
            return;
        };
        let pad = ((hi - lo) / qi(4)).max(q(1, 4));
        self.beta_range = (lo - &pad, hi + &pad);
        self.alpha_max = (top * q(3, 2)).max((hi - lo + &pad * qi(2)) / qi(2));
    }

    fn is_empty(&self) -> bool {
        self.walls.is_empty()
            && self.accumulation.is_empty()
            && self.straight_wall.is_none()
            && self.guides.is_empty()
    }
}

struct Frame {
    beta0: f64,
    sx: f64,
    sy: f64,
}

impl Frame {
    fn x(&self, beta: f64) -> f64 {
        MARGIN + (beta - self.beta0) * self.sx
    }

    fn y(&self, alpha: f64) -> f64 {
        HEIGHT - MARGIN - alpha * self.sy
    }
}

/// Render to an SVG document. Arcs carry their exact data as attributes.
pub fn render(spec: &PlotSpec) -> Result<String> {
    if spec.is_empty() {
        return Err(Error::EmptyPlot);
    }
    let (b0, b1) = (to_f64(&spec.beta_range.0), to_f64(&spec.beta_range.1));
    let amax = to_f64(&spec.alpha_max);
    let f = Frame {
        beta0: b0,
        sx: (WIDTH - 2.0 * MARGIN) / (b1 - b0),
        sy: (HEIGHT - 2.0 * MARGIN) / amax,
    };
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{HEIGHT:.0}" viewBox="0 0 {WIDTH:.0} {HEIGHT:.0}" data-class="{}">"#,
        spec.class
    );
    let _ = writeln!(w, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        w,
        r#"<line class="axis" x1="{:.4}" y1="{:.4}" x2="{:.4}" y2="{:.4}" stroke="black"/>"#,
        f.x(b0),
        f.y(0.0),
        f.x(b1),
        f.y(0.0)
    );
    let _ = writeln!(
        w,
        r#"<text x="{:.4}" y="{:.4}" font-size="12">beta</text>"#,
        f.x(b1) + 4.0,
        f.y(0.0) + 4.0
    );

    for g in &spec.guides {
        let x = f.x(to_f64(g));
        let _ = writeln!(
            w,
            r#"<line class="guide" data-beta="{}" x1="{x:.4}" y1="{:.4}" x2="{x:.4}" y2="{:.4}" stroke="gray" stroke-dasharray="4 4"/>"#,
            fmt_q(g),
            f.y(0.0),
            f.y(amax)
        );
        let _ = writeln!(
            w,
            r#"<text class="guide-label" x="{:.4}" y="{:.4}" font-size="11">beta = {}</text>"#,
            x + 3.0,
            f.y(amax) + 12.0,
            fmt_q(g)
        );
    }

    if let Some(b) = &spec.straight_wall {
        let x = f.x(to_f64(b));
        let _ = writeln!(
            w,
            r#"<line class="straight-wall" data-beta="{}" x1="{x:.4}" y1="{:.4}" x2="{x:.4}" y2="{:.4}" stroke="black" stroke-width="2"/>"#,
            fmt_q(b),
            f.y(0.0),
            f.y(amax)
        );
    }

    for wall in &spec.walls {
        match wall {
            WallDescriptor::Semicircle { center, radius_sq } => {
                let (c, r) = (to_f64(center), to_f64(radius_sq).sqrt());
                let _ = writeln!(
                    w,
                    r#"<path class="wall" data-center="{}" data-radius-sq="{}" data-radius="{r:.4}" d="M {:.4} {:.4} A {:.4} {:.4} 0 0 1 {:.4} {:.4}" fill="none" stroke="crimson" stroke-width="2"/>"#,
                    fmt_q(center),
                    fmt_q(radius_sq),
                    f.x(c - r),
                    f.y(0.0),
                    r * f.sx,
                    r * f.sy,
                    f.x(c + r),
                    f.y(0.0)
                );
            }
            WallDescriptor::Vertical { beta } => {
                let x = f.x(to_f64(beta));
                let _ = writeln!(
                    w,
                    r#"<line class="wall vertical" data-beta="{}" x1="{x:.4}" y1="{:.4}" x2="{x:.4}" y2="{:.4}" stroke="crimson" stroke-width="2"/>"#,
                    fmt_q(beta),
                    f.y(0.0),
                    f.y(amax)
                );
            }
            WallDescriptor::Coincident | WallDescriptor::Empty => {}
        }
    }

    for a in &spec.accumulation {
        let x = f.x(a.to_f64());
        let _ = writeln!(
            w,
            r#"<circle class="accumulation" data-beta="{a}" data-approx="{:.4}" cx="{x:.4}" cy="{:.4}" r="4" fill="steelblue"/>"#,
            a.to_f64(),
            f.y(0.0)
        );
        let _ = writeln!(
            w,
            r#"<text class="accumulation-label" x="{:.4}" y="{:.4}" font-size="11">{a}</text>"#,
            x - 12.0,
            f.y(0.0) + 18.0
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
