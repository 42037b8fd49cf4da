//! SVG and TikZ drawings of arrangements with a real chart.
//!
//! This is the only module that uses floating point. Scalars are embedded
//! into the complex numbers by ζ_n ↦ exp(2πik/n) for a chosen `k` coprime
//! to `n`, and a chart must turn every line into a real one.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::ToPrimitive;
use supersolve_core::solver::Augmentation;
use supersolve_core::{Arrangement, ProjLine, ProjPoint, Scalar, DEFAULT_CANDIDATE_BUDGET};

const REAL_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Chart {
    /// Affine chart z = 1.
    #[default]
    Identity,
    /// Replaces y by i·y first; makes the Böröczky construction real.
    ImagY,
}

#[derive(Clone, Copy, Debug)]
pub struct RenderOptions {
    pub chart: Chart,
    /// ζ_n ↦ exp(2πi·embedding/n).
    pub embedding: u32,
    pub show_span_lines: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            chart: Chart::Identity,
            embedding: 1,
            show_span_lines: false,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RenderError {
    #[error(
        "line {0} has no real equation in the {1:?} chart; try --chart imag-y or another embedding"
    )]
    NotReal(usize, Chart),
    #[error("embedding exponent {k} is not coprime to conductor {n}")]
    Embedding { k: u32, n: u32 },
    #[error("nothing to frame: no affine singular points")]
    Empty,
}

fn complex(s: &Scalar, k: u32) -> Complex64 {
    match s {
        Scalar::Rational(q) => Complex64::new(q.to_f64().expect("finite"), 0.0),
        Scalar::Cyclotomic(c) => {
            let n = f64::from(c.conductor());
            c.coeffs()
                .iter()
                .enumerate()
                .map(|(j, q)| {
                    Complex64::from_polar(1.0, 2.0 * PI * f64::from(k) * j as f64 / n)
                        * q.to_f64().expect("finite")
                })
                .sum()
        }
    }
}

/// Real coordinates `[x, y, z]` in the chart, after scaling by the largest entry.
fn real_triple(c: &[Scalar; 3], opts: &RenderOptions, dual: bool) -> Option<[f64; 3]> {
    let mut v = [0, 1, 2].map(|i| complex(&c[i], opts.embedding));
    if opts.chart == Chart::ImagY {
        // points: y = iY, so Y = −i y; lines: b y = (i b) Y
        v[1] *= if dual {
            Complex64::i()
        } else {
            -Complex64::i()
        };
    }
    let big = *v.iter().max_by(|a, b| a.norm().total_cmp(&b.norm()))?;
    let v = v.map(|x| x / big);
    v.iter()
        .all(|x| x.im.abs() < REAL_TOLERANCE)
        .then(|| v.map(|x| x.re))
}

struct Frame {
    lo: [f64; 2],
    hi: [f64; 2],
}

impl Frame {
    fn around(points: &[[f64; 2]]) -> Option<Self> {
        let first = points.first()?;
        let (mut lo, mut hi) = (*first, *first);
        for p in points {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        let pad = 0.15 * (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1.0);
        Some(Self {
            lo: [lo[0] - pad, lo[1] - pad],
            hi: [hi[0] + pad, hi[1] + pad],
        })
    }

    fn size(&self) -> f64 {
        (self.hi[0] - self.lo[0]).max(self.hi[1] - self.lo[1])
    }

    /// Segment of `ax + by + c = 0` inside the frame.
    fn clip(&self, [a, b, c]: [f64; 3]) -> Option<([f64; 2], [f64; 2])> {
        let mut hits: Vec<[f64; 2]> = Vec::new();
        let eps = 1e-12 * self.size();
        for x in [self.lo[0], self.hi[0]] {
            if b.abs() > 1e-15 {
                let y = -(a * x + c) / b;
                if y >= self.lo[1] - eps && y <= self.hi[1] + eps {
                    hits.push([x, y]);
                }
            }
        }
        for y in [self.lo[1], self.hi[1]] {
            if a.abs() > 1e-15 {
                let x = -(b * y + c) / a;
                if x >= self.lo[0] - eps && x <= self.hi[0] + eps {
                    hits.push([x, y]);
                }
            }
        }
        let p = *hits.first()?;
        let q = hits
            .iter()
            .copied()
            .max_by(|u, v| dist(&p, u).total_cmp(&dist(&p, v)))?;
        (dist(&p, &q) > eps).then_some((p, q))
    }
}

fn dist(p: &[f64; 2], q: &[f64; 2]) -> f64 {
    (p[0] - q[0]).hypot(p[1] - q[1])
}

/// Everything needed to draw, already in real affine coordinates.
pub struct Scene {
    frame: Frame,
    lines: Vec<[f64; 3]>,
    spans: Vec<[f64; 3]>,
    points: Vec<[f64; 2]>,
}

fn affine(p: &ProjPoint, opts: &RenderOptions) -> Option<[f64; 2]> {
    let [x, y, z] = real_triple(p.coords(), opts, false)?;
    (z.abs() > 1e-9).then(|| [x / z, y / z])
}

pub fn scene(a: &Arrangement, opts: &RenderOptions) -> Result<Scene, RenderError> {
    let n = a.field().conductor();
    if n > 1 && opts.embedding.gcd(&n) != 1 {
        return Err(RenderError::Embedding {
            k: opts.embedding,
            n,
        });
    }
    let real_line = |(i, l): (usize, &ProjLine)| {
        real_triple(l.coords(), opts, true).ok_or(RenderError::NotReal(i, opts.chart))
    };
    let lines = a
        .lines()
        .iter()
        .enumerate()
        .map(real_line)
        .collect::<Result<Vec<_>, _>>()?;
    let points: Vec<[f64; 2]> = a
        .singular_locus()
        .points()
        .filter_map(|p| affine(p, opts))
        .collect();
    let spans = if opts.show_span_lines {
        match Augmentation::new(a, DEFAULT_CANDIDATE_BUDGET) {
            Ok(aug) => aug
                .lines()
                .iter()
                .filter(|l| !l.in_arrangement && l.singular.len() >= 3)
                .filter_map(|l| real_triple(l.line.coords(), opts, true))
                .collect(),
            Err(_) => Vec::new(),
        }
    } else {
        Vec::new()
    };
    let frame = Frame::around(&points).ok_or(RenderError::Empty)?;
    Ok(Scene {
        frame,
        lines,
        spans,
        points,
    })
}

pub fn svg(a: &Arrangement, opts: &RenderOptions) -> Result<String, RenderError> {
    let s = scene(a, opts)?;
    let f = &s.frame;
    let (w, h) = (f.hi[0] - f.lo[0], f.hi[1] - f.lo[1]);
    let stroke = s.frame.size() / 300.0;
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="600" height="{:.0}" viewBox="{} {} {} {}">"#,
        600.0 * h / w,
        f.lo[0],
        -f.hi[1],
        w,
        h
    )
    .unwrap();
    // flip y so that the picture has the usual orientation
    writeln!(
        out,
        r#"<g transform="scale(1,-1)" fill="none" stroke-linecap="round">"#
    )
    .unwrap();
    for (p, q) in s.lines.iter().filter_map(|l| f.clip(*l)) {
        writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="{stroke}"/>"#,
            p[0], p[1], q[0], q[1]
        )
        .unwrap();
    }
    for (p, q) in s.spans.iter().filter_map(|l| f.clip(*l)) {
        writeln!(
            out,
            r#"<line class="span" x1="{}" y1="{}" x2="{}" y2="{}" stroke="red" stroke-width="{stroke}" stroke-dasharray="{} {}"/>"#,
            p[0],
            p[1],
            q[0],
            q[1],
            4.0 * stroke,
            4.0 * stroke
        )
        .unwrap();
    }
    for p in &s.points {
        writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="{}" fill="royalblue" stroke="black" stroke-width="{}"/>"#,
            p[0],
            p[1],
            3.0 * stroke,
            stroke / 2.0
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

pub fn tikz(a: &Arrangement, opts: &RenderOptions) -> Result<String, RenderError> {
    let s = scene(a, opts)?;
    let f = &s.frame;
    let unit = 10.0 / s.frame.size();
    let mut out = format!("\\begin{{tikzpicture}}[x={unit:.4}cm,y={unit:.4}cm]\n");
    writeln!(
        out,
        "\\clip ({},{}) rectangle ({},{});",
        f.lo[0], f.lo[1], f.hi[0], f.hi[1]
    )
    .unwrap();
    for (p, q) in s.lines.iter().filter_map(|l| f.clip(*l)) {
        writeln!(
            out,
            "\\draw[thick] ({:.6},{:.6}) -- ({:.6},{:.6});",
            p[0], p[1], q[0], q[1]
        )
        .unwrap();
    }
    for (p, q) in s.spans.iter().filter_map(|l| f.clip(*l)) {
        writeln!(
            out,
            "\\draw[thick,dashed,red] ({:.6},{:.6}) -- ({:.6},{:.6});",
            p[0], p[1], q[0], q[1]
        )
        .unwrap();
    }
    for p in &s.points {
        writeln!(out, "\\fill[blue] ({:.6},{:.6}) circle (2pt);", p[0], p[1]).unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use supersolve_core::generators::{boroczky, fermat, pappus_p};

    #[test]
    fn pappus_shows_the_dashed_line() {
        let opts = RenderOptions {
            show_span_lines: true,
            ..Default::default()
        };
        let svg = svg(&pappus_p(), &opts).unwrap();
        // the dashed line x + 5y = z, plus y = z and y = −4z through the two original point triples
        assert_eq!(svg.matches("<line ").count(), 9);
        assert_eq!(svg.matches("class=\"span\"").count(), 3);
        assert_eq!(svg.matches("<circle").count(), 15);
    }

    #[test]
    fn boroczky_needs_the_imaginary_chart() {
        let b = boroczky(9).unwrap();
        assert!(matches!(
            svg(&b, &RenderOptions::default()),
            Err(RenderError::NotReal(..))
        ));
        let opts = RenderOptions {
            chart: Chart::ImagY,
            ..Default::default()
        };
        let pic = svg(&b, &opts).unwrap();
        assert_eq!(pic.matches("<line ").count(), 9);
        assert!(tikz(&b, &opts).unwrap().contains("\\draw"));
    }

    #[test]
    fn complex_fermat_is_rejected() {
        let f = fermat(3).unwrap();
        for chart in [Chart::Identity, Chart::ImagY] {
            let opts = RenderOptions {
                chart,
                ..Default::default()
            };
            assert!(svg(&f, &opts).is_err());
        }
        let bad = RenderOptions {
            embedding: 3,
            ..Default::default()
        };
        assert!(matches!(svg(&f, &bad), Err(RenderError::Embedding { .. })));
    }
}
