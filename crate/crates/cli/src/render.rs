//! SVG figures in the affine chart `z0 = 1`, where the conic is the parabola
//! `y = x^2` with `x = z1`, `y = z2`.
//!
//! All geometry, clipping included, is exact; numbers are rounded to twelve
//! significant digits only when written out.

use std::fmt::Write as _;

use hexagram::hexagram::{crosshairs, pascal_line, PascalArray};
use hexagram::projective::join;
use hexagram::scalar::{int, parse_scalar, ratio};
use hexagram::{Label, Line, Point, Scalar, SextupleParams};
use num_traits::{ToPrimitive, Zero};

use crate::{CliError, CliResult};

/// Drawing width in pixels; the height follows from the viewport's aspect.
const WIDTH: i64 = 800;
const CONIC_STEPS: i64 = 400;
const POINT_RADIUS: &str = "5";
const CROSSHAIR_RADIUS: &str = "3";

#[derive(Clone, Debug, PartialEq)]
pub struct Viewport {
    pub xmin: Scalar,
    pub xmax: Scalar,
    pub ymin: Scalar,
    pub ymax: Scalar,
}

impl Default for Viewport {
    fn default() -> Self {
        Viewport { xmin: int(-10), xmax: int(10), ymin: int(-5), ymax: int(30) }
    }
}

impl Viewport {
    /// Parses `"xmin,xmax,ymin,ymax"`.
    pub fn parse(text: &str) -> CliResult<Self> {
        let v: Vec<Scalar> = text
            .split(',')
            .map(|p| parse_scalar(p).map_err(|_| CliError::Parse(format!("bad viewport value {p:?}"))))
            .collect::<CliResult<_>>()?;
        let [xmin, xmax, ymin, ymax]: [Scalar; 4] = v
            .try_into()
            .map_err(|_| CliError::Parse("viewport needs xmin,xmax,ymin,ymax".into()))?;
        if xmin >= xmax || ymin >= ymax {
            return Err(CliError::Parse("viewport bounds must be increasing".into()));
        }
        Ok(Viewport { xmin, xmax, ymin, ymax })
    }

    fn contains(&self, (x, y): &(Scalar, Scalar)) -> bool {
        (&self.xmin..=&self.xmax).contains(&x) && (&self.ymin..=&self.ymax).contains(&y)
    }

    fn scale(&self) -> Scalar {
        int(WIDTH) / (&self.xmax - &self.xmin)
    }

    fn height(&self) -> Scalar {
        (&self.ymax - &self.ymin) * self.scale()
    }

    fn to_pixels(&self, (x, y): &(Scalar, Scalar)) -> (Scalar, Scalar) {
        let k = self.scale();
        ((x - &self.xmin) * &k, (&self.ymax - y) * &k)
    }

    /// The visible segment of `l0 + l1 x + l2 y = 0`, if any.
    fn clip(&self, line: &Line) -> Option<((Scalar, Scalar), (Scalar, Scalar))> {
        let [l0, l1, l2] = line.coords();
        let mut hits: Vec<(Scalar, Scalar)> = Vec::new();
        if !l2.is_zero() {
            for x in [&self.xmin, &self.xmax] {
                let y = -(&l0 + &l1 * x) / &l2;
                hits.push((x.clone(), y));
            }
        }
        if !l1.is_zero() {
            for y in [&self.ymin, &self.ymax] {
                let x = -(&l0 + &l2 * y) / &l1;
                hits.push((x, y.clone()));
            }
        }
        hits.retain(|p| self.contains(p));
        hits.sort();
        hits.dedup();
        match (hits.first(), hits.last()) {
            (Some(a), Some(b)) if a != b => Some((a.clone(), b.clone())),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct RenderOptions {
    pub viewport: Viewport,
    /// Pascal lines to draw.
    pub arrays: Vec<PascalArray>,
    /// Chords to draw, as pairs of points.
    pub chords: Vec<(Label, Label)>,
    /// Mark the crosshair points of every drawn Pascal (affine ones, each
    /// once).
    pub crosshairs: bool,
}

/// Rounds to twelve significant digits for output.
pub fn fmt_num(x: &Scalar) -> String {
    let f = x.to_f64().unwrap_or(f64::NAN);
    let rounded: f64 = format!("{f:.11e}").parse().unwrap_or(f);
    if rounded == 0.0 {
        "0".to_string()
    } else {
        rounded.to_string()
    }
}

fn affine(p: &Point) -> Option<(Scalar, Scalar)> {
    let [z0, z1, z2] = p.coords();
    if z0.is_zero() {
        return None;
    }
    Some((&z1 / &z0, &z2 / &z0))
}

/// Runs of consecutive samples of `y = x^2` inside the viewport.
fn conic_runs(vp: &Viewport) -> Vec<Vec<(Scalar, Scalar)>> {
    let step = (&vp.xmax - &vp.xmin) * ratio(1, CONIC_STEPS);
    let mut runs = Vec::new();
    let mut current = Vec::new();
    for i in 0..=CONIC_STEPS {
        let x = &vp.xmin + &step * int(i);
        let p = (x.clone(), &x * &x);
        if vp.contains(&p) {
            current.push(p);
        } else if !current.is_empty() {
            runs.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        runs.push(current);
    }
    runs.retain(|r| r.len() > 1);
    runs
}

struct Svg<'a> {
    vp: &'a Viewport,
    body: String,
}

impl Svg<'_> {
    fn segment(&mut self, class: &str, extra: &str, (a, b): &((Scalar, Scalar), (Scalar, Scalar))) {
        let (x1, y1) = self.vp.to_pixels(a);
        let (x2, y2) = self.vp.to_pixels(b);
        writeln!(
            self.body,
            r#"<line class="{class}"{extra} x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            fmt_num(&x1),
            fmt_num(&y1),
            fmt_num(&x2),
            fmt_num(&y2)
        )
        .unwrap();
    }

    fn circle(&mut self, class: &str, extra: &str, r: &str, p: &(Scalar, Scalar)) {
        let (cx, cy) = self.vp.to_pixels(p);
        writeln!(
            self.body,
            r#"<circle class="{class}"{extra} cx="{}" cy="{}" r="{r}"/>"#,
            fmt_num(&cx),
            fmt_num(&cy)
        )
        .unwrap();
    }
}

pub fn render_svg(params: &SextupleParams, opts: &RenderOptions) -> CliResult<String> {
    let vp = &opts.viewport;
    let mut svg = Svg { vp, body: String::new() };
    let mut visible = 0usize;

    for run in conic_runs(vp) {
        let pts: Vec<String> = run
            .iter()
            .map(|p| {
                let (x, y) = vp.to_pixels(p);
                format!("{},{}", fmt_num(&x), fmt_num(&y))
            })
            .collect();
        writeln!(svg.body, r#"<polyline class="conic" points="{}"/>"#, pts.join(" ")).unwrap();
        visible += 1;
    }

    for &(u, v) in &opts.chords {
        let chord = join(&params.point(u), &params.point(v))?;
        if let Some(seg) = vp.clip(&chord) {
            let extra = format!(r#" data-chord="{}{}""#, u.as_char(), v.as_char());
            svg.segment("chord", &extra, &seg);
            visible += 1;
        }
    }

    let mut marks = Vec::new();
    for arr in &opts.arrays {
        let pl = pascal_line(params, arr)?;
        if let Some(seg) = vp.clip(&pl.line) {
            svg.segment("pascal", &format!(r#" data-array="{arr}""#), &seg);
            visible += 1;
        }
        if opts.crosshairs {
            for p in crosshairs(params, arr.top(), arr.bottom())?.iter().filter_map(affine) {
                if !marks.contains(&p) {
                    marks.push(p);
                }
            }
        }
    }
    for p in &marks {
        svg.circle("crosshair", "", CROSSHAIR_RADIUS, p);
        visible += usize::from(vp.contains(p));
    }

    // Points are always written; any outside the viewport are clipped away.
    for label in Label::ALL {
        let t = params.get(label);
        let p = (t.clone(), t * t);
        let extra = format!(r#" data-label="{}""#, label.as_char());
        svg.circle("point", &extra, POINT_RADIUS, &p);
        let (x, y) = vp.to_pixels(&p);
        writeln!(
            svg.body,
            r#"<text class="label" x="{}" y="{}">{}</text>"#,
            fmt_num(&(x + int(7))),
            fmt_num(&(y - int(7))),
            label.as_char()
        )
        .unwrap();
        visible += usize::from(vp.contains(&p));
    }

    if visible == 0 {
        return Err(CliError::ViewportExcludesAll);
    }

    let (w, h) = (int(WIDTH), vp.height());
    let (w, h) = (fmt_num(&w), fmt_num(&h));
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(
        out,
        "<style>\n\
         .conic {{ fill: none; stroke: #333; stroke-width: 1.5 }}\n\
         .chord {{ stroke: #2a9d3a; stroke-width: 1 }}\n\
         .pascal {{ stroke: #c0392b; stroke-width: 1.2 }}\n\
         .crosshair {{ fill: #1f5fbf }}\n\
         .point {{ fill: #000 }}\n\
         .label {{ font: 14px sans-serif }}\n\
         </style>"
    )
    .unwrap();
    writeln!(
        out,
        r#"<defs><clipPath id="viewport"><rect x="0" y="0" width="{w}" height="{h}"/></clipPath></defs>"#
    )
    .unwrap();
    writeln!(out, r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"#).unwrap();
    writeln!(out, r#"<g clip-path="url(#viewport)">"#).unwrap();
    out.push_str(&svg.body);
    writeln!(out, "</g>\n</svg>").unwrap();
    Ok(out)
}
