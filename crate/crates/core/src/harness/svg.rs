//! Trajectory plots as standalone SVG documents.

use std::fmt::Write;

use super::run::Sample;
use crate::config_space::Surface;

const SIZE: f64 = 640.0;
const MARGIN: f64 = 40.0;

/// Blue at `t = 0` through to red at `t = 1`.
fn time_colour(t: f64) -> String {
    format!("hsl({:.0},80%,45%)", 240.0 * (1.0 - t.clamp(0.0, 1.0)))
}

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        let w = SIZE - 2.0 * MARGIN;
        let x = MARGIN + (p[0] - self.x0) / (self.x1 - self.x0) * w;
        let y = SIZE - MARGIN - (p[1] - self.y0) / (self.y1 - self.y0) * w;
        (x, y)
    }
}

fn frame(surface: Surface, samples: &[Sample]) -> Frame {
    let coords = samples.iter().flat_map(|s| s.points.iter());
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut xlo, mut xhi) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in coords {
        xlo = xlo.min(p[0]);
        xhi = xhi.max(p[0]);
        lo = lo.min(p[1]);
        hi = hi.max(p[1]);
    }
    if !lo.is_finite() {
        (xlo, xhi, lo, hi) = (0.0, 1.0, 0.0, 1.0);
    }
    match surface {
        // one full turn across, heights padded to a square
        Surface::Annulus => {
            let pad = ((hi - lo) * 0.05).max(0.5);
            Frame {
                x0: 0.0,
                x1: 1.0,
                y0: lo - pad,
                y1: hi + pad,
            }
        }
        Surface::Disc => {
            let span = (xhi - xlo).max(hi - lo).max(1e-9) * 1.1;
            let (cx, cy) = ((xlo + xhi) / 2.0, (lo + hi) / 2.0);
            Frame {
                x0: cx - span / 2.0,
                x1: cx + span / 2.0,
                y0: cy - span / 2.0,
                y1: cy + span / 2.0,
            }
        }
    }
}

/// Draws every track as a polyline coloured by time, with hollow start and
/// filled end markers. On the annulus the angle runs horizontally over one
/// turn; steps that cross the seam are not drawn.
pub fn render_svg(surface: Surface, samples: &[Sample]) -> String {
    let f = frame(surface, samples);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    match surface {
        Surface::Annulus => {
            let (l, top) = f.map([0.0, f.y1]);
            let (r, bottom) = f.map([1.0, f.y0]);
            let _ = writeln!(
                out,
                r##"<rect x="{l:.2}" y="{top:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#888"/>"##,
                r - l,
                bottom - top
            );
            for x in [l, r] {
                let _ = writeln!(
                    out,
                    r##"<line x1="{x:.2}" y1="{top:.2}" x2="{x:.2}" y2="{bottom:.2}" stroke="#c33" stroke-dasharray="6 4"/>"##
                );
            }
            let _ = writeln!(
                out,
                r##"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="middle" fill="#c33">θ = 0 ≡ 1 (edges identified)</text>"##,
                SIZE / 2.0,
                top - 10.0
            );
        }
        Surface::Disc => {
            let (ox, oy) = f.map([0.0, 0.0]);
            let _ = writeln!(out, r##"<circle cx="{ox:.2}" cy="{oy:.2}" r="2" fill="#888"/>"##);
        }
    }
    let tracks = samples.first().map_or(0, |s| s.points.len());
    for k in 0..tracks {
        for w in samples.windows(2) {
            let (a, b) = (w[0].points[k], w[1].points[k]);
            if surface == Surface::Annulus && (a[0] - b[0]).abs() > 0.5 {
                continue;
            }
            let (x1, y1) = f.map(a);
            let (x2, y2) = f.map(b);
            let _ = writeln!(
                out,
                r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{}" stroke-width="2"/>"#,
                time_colour(0.5 * (w[0].t + w[1].t))
            );
        }
        if let (Some(first), Some(last)) = (samples.first(), samples.last()) {
            let (x, y) = f.map(first.points[k]);
            let _ = writeln!(
                out,
                r#"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="white" stroke="{}" stroke-width="2"/>"#,
                time_colour(0.0)
            );
            let (x, y) = f.map(last.points[k]);
            let _ = writeln!(
                out,
                r#"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="{}"/>"#,
                time_colour(1.0)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn samples() -> Vec<Sample> {
        vec![
            Sample {
                t: 0.0,
                points: vec![[0.9, 0.0], [0.2, 1.0]],
            },
            Sample {
                t: 0.5,
                points: vec![[0.95, 0.5], [0.3, 1.0]],
            },
            Sample {
                t: 1.0,
                points: vec![[0.05, 1.0], [0.4, 1.0]],
            },
        ]
    }

    #[test]
    fn annulus_plot_skips_the_seam() {
        let svg = render_svg(Surface::Annulus, &samples());
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        // two tracks × two steps, minus the one crossing θ = 0
        assert_eq!(svg.matches("stroke-width=\"2\"/>").count() - 2, 3);
        assert!(svg.contains("edges identified"));
    }

    #[test]
    fn disc_plot_is_deterministic() {
        let a = render_svg(Surface::Disc, &samples());
        assert_eq!(a, render_svg(Surface::Disc, &samples()));
        assert!(a.contains("hsl(240,80%,45%)"));
        assert!(a.contains("hsl(0,80%,45%)"));
    }
}
