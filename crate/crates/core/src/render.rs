//! Batch SVG rendering: one panel per member on a shared coordinate frame.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::converter::Collection;
use crate::geometry::Point;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    /// Side length of each square panel, in SVG user units.
    pub panel_size: u32,
    pub margin: u32,
    pub columns: usize,
    /// `(fill, stroke)` pairs; member `i` uses entry `i % palette.len()`.
    pub palette: Vec<(String, String)>,
}

impl Default for RenderSpec {
    fn default() -> Self {
        let palette = [
            ("#9ecae1", "#08519c"),
            ("#fdae6b", "#a63603"),
            ("#a1d99b", "#006d2c"),
            ("#bcbddc", "#54278f"),
            ("#fc9272", "#a50f15"),
            ("#d9d9d9", "#252525"),
        ];
        Self {
            panel_size: 160,
            margin: 16,
            columns: 4,
            palette: palette
                .iter()
                .map(|&(f, s)| (f.to_owned(), s.to_owned()))
                .collect(),
        }
    }
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    offset_x: f64,
    offset_y: f64,
}

impl Frame {
    fn new(omega: &Collection, spec: &RenderSpec) -> Self {
        let vs = omega.vertex_set();
        let min = |f: fn(&Point) -> &Rational| vs.iter().map(f).min().cloned().expect("nonempty");
        let max = |f: fn(&Point) -> &Rational| vs.iter().map(f).max().cloned().expect("nonempty");
        let (min_x, max_x) = (to_f64(&min(|p| &p.x)), to_f64(&max(|p| &p.x)));
        let (min_y, max_y) = (to_f64(&min(|p| &p.y)), to_f64(&max(|p| &p.y)));
        let span = (max_x - min_x).max(max_y - min_y);
        let span = if span > 0.0 { span } else { 2.0 };
        let inner = f64::from(spec.panel_size.saturating_sub(2 * spec.margin).max(1));
        let scale = inner / span;
        // Center the shared bounding box inside each panel.
        let offset_x = f64::from(spec.margin) + (inner - (max_x - min_x) * scale) / 2.0;
        let offset_y = f64::from(spec.margin) + (inner - (max_y - min_y) * scale) / 2.0;
        Self {
            min_x,
            max_y,
            scale,
            offset_x,
            offset_y,
        }
    }

    fn map(&self, p: &Point) -> (f64, f64) {
        (
            self.offset_x + (to_f64(&p.x) - self.min_x) * self.scale,
            self.offset_y + (self.max_y - to_f64(&p.y)) * self.scale,
        )
    }
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

pub fn render_svg(omega: &Collection, spec: &RenderSpec) -> String {
    let columns = spec.columns.max(1);
    let rows = omega.len().div_ceil(columns);
    let cols_used = omega.len().min(columns);
    let size = spec.panel_size;
    let width = size as usize * cols_used;
    let height = size as usize * rows;
    let frame = Frame::new(omega, spec);
    let origin = frame.map(&Point::int(0, 0));

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#
    );

    for (i, p) in omega.members().iter().enumerate() {
        let (col, row) = (i % columns, i / columns);
        let (fill, stroke) = spec
            .palette
            .get(i % spec.palette.len().max(1))
            .cloned()
            .unwrap_or_else(|| ("#cccccc".into(), "#000000".into()));
        let _ = writeln!(
            svg,
            r#"<g id="member-{i}" transform="translate({},{})">"#,
            col as u32 * size,
            row as u32 * size
        );
        let _ = writeln!(
            svg,
            r##"<rect x="0.5" y="0.5" width="{}" height="{}" fill="none" stroke="#bbbbbb"/>"##,
            size.saturating_sub(1),
            size.saturating_sub(1)
        );
        let _ = writeln!(
            svg,
            r##"<line x1="0" y1="{y}" x2="{size}" y2="{y}" stroke="#dddddd"/><line x1="{x}" y1="0" x2="{x}" y2="{size}" stroke="#dddddd"/>"##,
            x = num(origin.0),
            y = num(origin.1)
        );
        let mapped: Vec<(f64, f64)> = p.vertices().iter().map(|v| frame.map(v)).collect();
        match mapped.as_slice() {
            [(x, y)] => {
                let _ = writeln!(
                    svg,
                    r#"<circle cx="{}" cy="{}" r="3" fill="{stroke}"/>"#,
                    num(*x),
                    num(*y)
                );
            }
            [(x1, y1), (x2, y2)] => {
                let _ = writeln!(
                    svg,
                    r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="2"/>"#,
                    num(*x1),
                    num(*y1),
                    num(*x2),
                    num(*y2)
                );
            }
            _ => {
                let mut d = String::new();
                for (k, (x, y)) in mapped.iter().enumerate() {
                    let _ = write!(
                        d,
                        "{}{},{} ",
                        if k == 0 { "M" } else { "L" },
                        num(*x),
                        num(*y)
                    );
                }
                d.push('Z');
                let _ = writeln!(
                    svg,
                    r#"<path d="{d}" fill="{fill}" stroke="{stroke}" stroke-width="1.5"/>"#
                );
            }
        }
        svg.push_str("</g>\n");
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Polytope;

    #[test]
    fn single_point_is_one_disk() {
        let om = Collection::new([Polytope::from_ints(&[(3, -1)]).unwrap()]).unwrap();
        let svg = render_svg(&om, &RenderSpec::default());
        assert_eq!(svg.matches("<g id=").count(), 1);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(!svg.contains("<path"));
    }

    #[test]
    fn shapes_by_dimension() {
        let om = Collection::new([
            Polytope::from_ints(&[(0, 0)]).unwrap(),
            Polytope::from_ints(&[(0, 0), (1, 0)]).unwrap(),
            Polytope::from_ints(&[(0, 0), (1, 0), (0, 1)]).unwrap(),
        ])
        .unwrap();
        let svg = render_svg(
            &om,
            &RenderSpec {
                columns: 2,
                ..Default::default()
            },
        );
        assert_eq!(svg.matches("<circle").count(), 1);
        assert_eq!(svg.matches("<path").count(), 1);
        assert!(svg.contains(r#"width="320" height="320""#));
    }
}
