//! SVG and TikZ pictures of the walls `D(M)` for rank at most three.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::fan::Fan;

/// Fewest points allowed along one wall arc.
pub const MIN_SAMPLES: usize = 16;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RenderSpec {
    /// Stereographic pole for rank three, normalised before use.
    pub pole: [f64; 3],
    /// Points per wall arc.
    pub samples: usize,
    /// Label chambers with their torsion classes (cluster objects for valued quivers).
    pub chamber_labels: bool,
    /// Width and height of the SVG canvas.
    pub size: f64,
}

impl Default for RenderSpec {
    fn default() -> Self {
        let c = -1.0 / 3f64.sqrt();
        RenderSpec {
            pole: [c, c, c],
            samples: 32,
            chamber_labels: false,
            size: 480.0,
        }
    }
}

/// The wall `D(M_label)` as a union of facets, each sampled on the unit sphere.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Wall {
    pub label: usize,
    pub arcs: Vec<Vec<Vec<f64>>>,
}

/// Planar drawing before fitting to a canvas.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Picture {
    pub walls: Vec<(String, Vec<Vec<[f64; 2]>>, [f64; 2])>,
    pub chambers: Vec<(String, [f64; 2])>,
    /// Rank one pictures mark the wall as a single point.
    pub point_walls: bool,
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn unit(v: &[f64]) -> Vec<f64> {
    let r = norm(v);
    v.iter().map(|x| x / r).collect()
}

fn as_f64(v: &[i64]) -> Vec<f64> {
    v.iter().map(|&x| x as f64).collect()
}

fn dot3(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cross(a: &[f64], b: &[f64]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Total angle subtended by the arcs of a rank-three wall.
pub fn arc_angle(w: &Wall) -> f64 {
    w.arcs
        .iter()
        .map(|a| dot3(&a[0], &a[a.len() - 1]).clamp(-1.0, 1.0).acos())
        .sum()
}

struct Stereo {
    pole: [f64; 3],
    e1: [f64; 3],
    e2: [f64; 3],
}

impl Stereo {
    fn new(pole: [f64; 3]) -> Result<Self> {
        let r = norm(&pole);
        if !(r.is_finite() && r > 1e-12) {
            return Err(Error::InvalidInput("pole must be a nonzero vector".into()));
        }
        let p = [pole[0] / r, pole[1] / r, pole[2] / r];
        let axis = (0..3)
            .min_by(|&i, &j| p[i].abs().total_cmp(&p[j].abs()))
            .expect("three coordinates");
        let mut a = [0.0; 3];
        a[axis] = 1.0;
        let d = dot3(&a, &p);
        let e1 = unit(&[a[0] - d * p[0], a[1] - d * p[1], a[2] - d * p[2]]);
        let e1 = [e1[0], e1[1], e1[2]];
        let e2 = cross(&p, &e1);
        Ok(Stereo { pole: p, e1, e2 })
    }

    fn project(&self, x: &[f64]) -> [f64; 2] {
        let s = 1.0 - dot3(x, &self.pole);
        [dot3(x, &self.e1) / s, dot3(x, &self.e2) / s]
    }
}

impl Algebra {
    /// Walls of the fan grouped by brick, ordered by root index.
    pub fn walls(&self, fan: &Fan, samples: usize) -> Result<Vec<Wall>> {
        let n = self.n();
        if n > 3 {
            return Err(Error::Unsupported(format!("cannot draw rank {n} (at most 3)")));
        }
        if samples < MIN_SAMPLES {
            return Err(Error::InvalidInput(format!("need at least {MIN_SAMPLES} samples per arc")));
        }
        let mut walls: Vec<Wall> = Vec::new();
        for f in &fan.facets {
            let gs: Vec<Vec<f64>> = f.shared.iter().map(|&x| as_f64(&self.g_vector(x))).collect();
            let arc = match n {
                1 => vec![vec![0.0]],
                2 => vec![vec![0.0, 0.0], unit(&gs[0])],
                _ => (0..samples)
                    .map(|k| {
                        let t = k as f64 / (samples - 1) as f64;
                        let p: Vec<f64> = gs[0].iter().zip(&gs[1]).map(|(u, v)| (1.0 - t) * u + t * v).collect();
                        unit(&p)
                    })
                    .collect(),
            };
            match walls.iter_mut().find(|w| w.label == f.label) {
                Some(w) => w.arcs.push(arc),
                None => walls.push(Wall {
                    label: f.label,
                    arcs: vec![arc],
                }),
            }
        }
        walls.sort_by_key(|w| w.label);
        Ok(walls)
    }

    fn chamber_label(&self, fan: &Fan, c: usize) -> Result<String> {
        if self.quiver().is_simply_laced() {
            let g = fan.chamber_point(self, c);
            let mut t = Vec::new();
            for a in 0..self.num_roots() {
                let qs = self.quotient_dims(self.root(a))?;
                if qs
                    .iter()
                    .filter(|q| q.iter().any(|&x| x != 0))
                    .all(|q| crate::linalg::dot(&g, q) > 0)
                {
                    t.push(self.root_name(a));
                }
            }
            Ok(if t.is_empty() { "0".into() } else { t.join(",") })
        } else {
            Ok(fan.clusters[c].iter().map(|&x| self.name(x)).collect::<Vec<_>>().join(","))
        }
    }

    pub fn picture(&self, spec: &RenderSpec) -> Result<Picture> {
        let fan = self.build_fan()?;
        let walls = self.walls(&fan, spec.samples)?;
        let n = self.n();
        let place: Box<dyn Fn(&[f64]) -> [f64; 2]> = match n {
            1 => Box::new(|x: &[f64]| [x[0], 0.0]),
            2 => Box::new(|x: &[f64]| [x[0], x[1]]),
            _ => {
                let st = Stereo::new(spec.pole)?;
                for f in &fan.facets {
                    let u = as_f64(&self.g_vector(f.shared[0]));
                    let v = as_f64(&self.g_vector(f.shared[1]));
                    let c = cross(&u, &v);
                    let on_plane = dot3(&c, &st.pole).abs() <= 1e-9 * norm(&c);
                    let between = dot3(&cross(&u, &st.pole), &c) >= 0.0 && dot3(&cross(&st.pole, &v), &c) >= 0.0;
                    if on_plane && between {
                        return Err(Error::InvalidInput(format!(
                            "pole lies on the wall of {}",
                            self.root_name(f.label)
                        )));
                    }
                }
                Box::new(move |x: &[f64]| st.project(x))
            }
        };
        let mut out = Vec::with_capacity(walls.len());
        for w in &walls {
            let arcs: Vec<Vec<[f64; 2]>> = w.arcs.iter().map(|a| a.iter().map(|p| place(p)).collect()).collect();
            let anchor = match n {
                1 => [0.0, 0.15],
                2 => {
                    let tip = arcs[0][1];
                    [tip[0] * 1.12, tip[1] * 1.12]
                }
                _ => arcs
                    .iter()
                    .map(|a| a[a.len() / 2])
                    .min_by(|p, q| norm(p).total_cmp(&norm(q)))
                    .expect("wall has an arc"),
            };
            out.push((self.root_name(w.label), arcs, anchor));
        }
        let mut chambers = Vec::new();
        if spec.chamber_labels {
            for c in 0..fan.clusters.len() {
                let p = unit(&as_f64(&fan.chamber_point(self, c)));
                let pos = match n {
                    1 => [p[0] * 0.5, 0.0],
                    2 => [p[0] * 0.6, p[1] * 0.6],
                    _ => place(&p),
                };
                chambers.push((self.chamber_label(&fan, c)?, pos));
            }
        }
        Ok(Picture {
            walls: out,
            chambers,
            point_walls: n == 1,
        })
    }

    pub fn draw_svg(&self, spec: &RenderSpec) -> Result<String> {
        Ok(self.picture(spec)?.to_svg(spec.size))
    }

    pub fn draw_tikz(&self, spec: &RenderSpec) -> Result<String> {
        Ok(self.picture(spec)?.to_tikz())
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

impl Picture {
    fn bounds(&self) -> ([f64; 2], [f64; 2]) {
        let mut lo = [-1.0f64, -1.0];
        let mut hi = [1.0f64, 1.0];
        let pts = self
            .walls
            .iter()
            .flat_map(|(_, arcs, a)| arcs.iter().flatten().chain(std::iter::once(a)))
            .chain(self.chambers.iter().map(|(_, p)| p));
        for p in pts {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        (lo, hi)
    }

    pub fn to_svg(&self, size: f64) -> String {
        let (lo, hi) = self.bounds();
        let margin = 0.08 * size;
        let scale = (size - 2.0 * margin) / (hi[0] - lo[0]).max(hi[1] - lo[1]);
        let cx = (lo[0] + hi[0]) / 2.0;
        let cy = (lo[1] + hi[1]) / 2.0;
        let map = |p: &[f64; 2]| (size / 2.0 + (p[0] - cx) * scale, size / 2.0 - (p[1] - cy) * scale);
        let mut s = String::new();
        let _ = writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{size:.3}\" height=\"{size:.3}\" viewBox=\"0 0 {size:.3} {size:.3}\">"
        );
        s.push_str("<style>.wall{fill:none;stroke:#1f3b73;stroke-width:1.6}.label{font:13px sans-serif;fill:#1f3b73}.chamber{font:11px sans-serif;fill:#7a3b1f}</style>\n");
        let _ = writeln!(s, "<rect width=\"{size:.3}\" height=\"{size:.3}\" fill=\"white\"/>");
        if self.point_walls {
            let (x0, y) = map(&[-1.0, 0.0]);
            let (x1, _) = map(&[1.0, 0.0]);
            let _ = writeln!(s, "<line x1=\"{x0:.3}\" y1=\"{y:.3}\" x2=\"{x1:.3}\" y2=\"{y:.3}\" stroke=\"#999\"/>");
        }
        for (name, arcs, anchor) in &self.walls {
            let _ = writeln!(s, "<g class=\"wall-group\" data-brick=\"{}\">", escape(name));
            if self.point_walls {
                let (x, y) = map(&arcs[0][0]);
                let _ = writeln!(s, "<circle class=\"wall\" cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4.000\"/>");
            } else {
                let mut d = String::new();
                for arc in arcs {
                    for (k, p) in arc.iter().enumerate() {
                        let (x, y) = map(p);
                        let _ = write!(d, "{}{x:.3} {y:.3} ", if k == 0 { "M" } else { "L" });
                    }
                }
                let _ = writeln!(s, "<path class=\"wall\" d=\"{}\"/>", d.trim_end());
            }
            let (x, y) = map(anchor);
            let _ = writeln!(
                s,
                "<text class=\"label\" x=\"{x:.3}\" y=\"{y:.3}\" text-anchor=\"middle\">D({})</text>",
                escape(name)
            );
            s.push_str("</g>\n");
        }
        for (label, p) in &self.chambers {
            let (x, y) = map(p);
            let _ = writeln!(
                s,
                "<text class=\"chamber\" x=\"{x:.3}\" y=\"{y:.3}\" text-anchor=\"middle\">{{{}}}</text>",
                escape(label)
            );
        }
        s.push_str("</svg>\n");
        s
    }

    pub fn to_tikz(&self) -> String {
        let (lo, hi) = self.bounds();
        let scale = 8.0 / (hi[0] - lo[0]).max(hi[1] - lo[1]);
        let c = |p: &[f64; 2]| format!("({:.3},{:.3})", p[0] * scale, p[1] * scale);
        let mut s = String::from("\\begin{tikzpicture}\n");
        if self.point_walls {
            let _ = writeln!(s, "\\draw[gray] {} -- {};", c(&[-1.0, 0.0]), c(&[1.0, 0.0]));
        }
        for (name, arcs, anchor) in &self.walls {
            if self.point_walls {
                let _ = writeln!(s, "\\fill {} circle (2pt);", c(&arcs[0][0]));
            } else {
                for arc in arcs {
                    let pts: Vec<String> = arc.iter().map(&c).collect();
                    let _ = writeln!(s, "\\draw[thick] {};", pts.join(" -- "));
                }
            }
            let _ = writeln!(s, "\\node at {} {{$D({})$}};", c(anchor), name);
        }
        for (label, p) in &self.chambers {
            let _ = writeln!(s, "\\node[draw,ellipse,font=\\small] at {} {{${}$}};", c(p), label);
        }
        s.push_str("\\end{tikzpicture}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn a3_wall_shapes() {
        let a = Algebra::from_spec("A3: 1<2<3").unwrap();
        let fan = a.build_fan().unwrap();
        let walls = a.walls(&fan, 32).unwrap();
        assert_eq!(walls.len(), 6);
        let angle = |v: &[i64]| arc_angle(walls.iter().find(|w| w.label == a.root_id(v).unwrap()).unwrap());
        assert!((angle(&[1, 0, 0]) - 2.0 * PI).abs() < 1e-9);
        assert!((angle(&[1, 1, 0]) - PI).abs() < 1e-9);
        assert!(angle(&[1, 1, 1]) < PI);
    }

    #[test]
    fn b2_rays() {
        let a = Algebra::from_spec("B2: 1<(1,2)2").unwrap();
        let fan = a.build_fan().unwrap();
        let walls = a.walls(&fan, 16).unwrap();
        assert_eq!(walls.len(), 4);
        let alpha = a.root_id(&[1, 0]).unwrap();
        let normal: Vec<f64> = as_f64(&a.wall_normal(alpha));
        for v in [[1, 1], [2, 1]] {
            let w = walls.iter().find(|w| w.label == a.root_id(&v).unwrap()).unwrap();
            assert_eq!(w.arcs.len(), 1);
            assert!(dot3(&w.arcs[0][1], &normal) < 0.0, "{v:?}");
        }
    }

    #[test]
    fn limits() {
        let a = Algebra::from_spec("A3: 1<2<3").unwrap();
        let fan = a.build_fan().unwrap();
        assert!(a.walls(&fan, 8).is_err());
        let bad = RenderSpec {
            pole: [0.0, 0.0, 1.0],
            ..RenderSpec::default()
        };
        assert_eq!(a.draw_svg(&bad).unwrap_err().kind(), "invalid_input");
        let a4 = Algebra::from_spec("A4: 1<2<3<4").unwrap();
        assert_eq!(a4.draw_svg(&RenderSpec::default()).unwrap_err().kind(), "unsupported");
    }

    #[test]
    fn deterministic_svg() {
        let a = Algebra::from_spec("A2: 1>2").unwrap();
        let spec = RenderSpec {
            chamber_labels: true,
            ..RenderSpec::default()
        };
        let s = a.draw_svg(&spec).unwrap();
        assert_eq!(s, a.draw_svg(&spec).unwrap());
        assert_eq!(s.matches("class=\"wall\"").count(), 3);
        assert!(s.contains("{S1,P1}"));
        let one = Algebra::from_spec("A1:").unwrap().draw_svg(&spec).unwrap();
        assert_eq!(one.matches("<circle").count(), 1);
        assert!(a.draw_tikz(&spec).unwrap().starts_with("\\begin{tikzpicture}"));
    }
}
