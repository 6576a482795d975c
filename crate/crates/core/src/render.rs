//! Schematic chord-diagram drawings as static SVG 1.1 documents.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::invariant::lambda_from_counts;
use crate::pattern::count_named;
use crate::word::GaussWord;

const SIZE: f64 = 320.0;
const RADIUS: f64 = 110.0;
const CENTER: (f64, f64) = (160.0, 150.0);

fn point(i: usize, len: usize, r: f64) -> (f64, f64) {
    // position 0 at the top, increasing clockwise
    let theta = -PI / 2.0 + 2.0 * PI * i as f64 / len as f64;
    (CENTER.0 + r * theta.cos(), CENTER.1 + r * theta.sin())
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// The circle, one tick per word position, one straight chord per label and
/// a caption with the five sub-chord counts.
pub fn render_svg(w: &GaussWord) -> String {
    let len = w.len();
    let c = count_named(w);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{}" viewBox="0 0 {SIZE} {}">"#,
        SIZE + 40.0,
        SIZE + 40.0
    );
    let _ = writeln!(s, "<title>{}</title>", escape(&format!("chord diagram of \"{w}\"")));
    let _ = writeln!(
        s,
        r#"<circle cx="{:.2}" cy="{:.2}" r="{RADIUS:.2}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        CENTER.0, CENTER.1
    );
    for chord in w.chord_diagram().chords() {
        let (p, q) = chord.ends;
        let (a, b) = (point(p, len, RADIUS), point(q, len, RADIUS));
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="steelblue" stroke-width="1.5"/>"#,
            a.0, a.1, b.0, b.1
        );
    }
    for (i, label) in w.letters().iter().enumerate() {
        let (a, b) = (point(i, len, RADIUS - 5.0), point(i, len, RADIUS + 5.0));
        let t = point(i, len, RADIUS + 16.0);
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="1.5"/>"#,
            a.0, a.1, b.0, b.1
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="middle" dominant-baseline="middle">{label}</text>"#,
            t.0, t.1
        );
    }
    let lambda = lambda_from_counts(&c).map_or_else(|_| "n/a".to_string(), |l| l.to_string());
    let captions = [
        format!("n = {}   cross {}   triple {}   h {}", w.crossing_count(), c.cross, c.triple, c.h),
        format!("III {}   HH {}   lambda {}", c.iii, c.hh, lambda),
    ];
    for (k, line) in captions.iter().enumerate() {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
            SIZE / 2.0,
            SIZE - 10.0 + 18.0 * k as f64,
            escape(line)
        );
    }
    s.push_str("</svg>\n");
    s
}
