//! Analytic arcs in the plane and their normalization at a point.

use std::f64::consts::{PI, TAU};
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TaylorPoly;

/// Samples used for regularity checks and winding computations.
pub const WINDING_SAMPLES: usize = 4096;

/// Parametrized curve types.
#[derive(Clone, Debug, PartialEq)]
pub enum Curve {
    /// `s -> (s, g(s))` with `g` a polynomial.
    Graph(TaylorPoly<f64>),
    /// `s -> (x(s), y(s))` with polynomial components.
    Polynomial { x: TaylorPoly<f64>, y: TaylorPoly<f64> },
    /// Trigonometric components `[c0, a1, b1, a2, b2, ...]` in
    /// `c0 + sum a_k cos(k w s) + b_k sin(k w s)`, `w = 2 pi / period`.
    Fourier { x: Vec<f64>, y: Vec<f64>, omega: f64 },
}

/// A validated arc.
#[derive(Clone, Debug, PartialEq)]
pub struct ArcSpec {
    pub curve: Curve,
    pub closed: bool,
    pub period: Option<f64>,
    /// Parameter interval used by atlas construction for open arcs.
    pub domain: (f64, f64),
    /// Truncation degree for local expansions.
    pub degree_cap: usize,
}

/// Rigid motion `Phi_{a, theta}` restricted to the `z0` plane:
/// `z0 -> e^{i n theta} z0 + a`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Frame {
    pub a: Complex64,
    pub theta: f64,
}

impl Frame {
    pub fn identity() -> Self {
        Self { a: Complex64::new(0.0, 0.0), theta: 0.0 }
    }

    /// Image of an original-plane point in the normalized plane.
    pub fn forward(&self, n: usize, z: Complex64) -> Complex64 {
        Complex64::from_polar(1.0, n as f64 * self.theta) * z + self.a
    }

    /// Inverse of [`Frame::forward`].
    pub fn backward(&self, n: usize, w: Complex64) -> Complex64 {
        Complex64::from_polar(1.0, -(n as f64) * self.theta) * (w - self.a)
    }
}

/// Output of [`normalize_at`].
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedArc {
    pub n: usize,
    /// Local potential: the arc is `t -> t + i f0'(t)` in the normalized plane.
    pub f0: TaylorPoly<f64>,
    pub frame: Frame,
    pub s0: f64,
    pub speed: f64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Number {
    Num(f64),
    Text(String),
}

impl Number {
    fn value(&self) -> Result<f64> {
        match self {
            Number::Num(x) => Ok(*x),
            Number::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArc(format!("not a number: {s:?}"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ArcDoc {
    kind: String,
    #[serde(default, alias = "coeffs")]
    g_coeffs: Option<Vec<Number>>,
    #[serde(default)]
    x_coeffs: Option<Vec<Number>>,
    #[serde(default)]
    y_coeffs: Option<Vec<Number>>,
    #[serde(default)]
    closed: bool,
    #[serde(default)]
    period: Option<Number>,
    #[serde(default)]
    domain: Option<[Number; 2]>,
    degree_cap: usize,
}

fn numbers(v: &Option<Vec<Number>>, field: &str) -> Result<Vec<f64>> {
    let v = v.as_ref().ok_or_else(|| Error::InvalidArc(format!("missing field {field}")))?;
    let out = v.iter().map(Number::value).collect::<Result<Vec<_>>>()?;
    if out.is_empty() || out.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidArc(format!("{field} must be a non-empty list of finite numbers")));
    }
    Ok(out)
}

/// Parses and validates an arc description.
///
/// ```json
/// {"kind": "graph", "g_coeffs": ["0", "0", "0.5"], "degree_cap": 24}
/// {"kind": "parametric", "x_coeffs": [0, 1], "y_coeffs": [0, 0, 1], "degree_cap": 24}
/// {"kind": "parametric", "closed": true, "period": 6.283185307179586,
///  "x_coeffs": [0, 1, 0], "y_coeffs": [0, 0, 1], "degree_cap": 24}
/// ```
///
/// Closed arcs use trigonometric coefficients; open arcs use Taylor
/// coefficients at `s = 0`. Numbers may be JSON numbers or decimal strings.
pub fn load_arc(json: &str) -> Result<ArcSpec> {
    let doc: ArcDoc = serde_json::from_str(json).map_err(|e| Error::InvalidArc(e.to_string()))?;
    let cap = doc.degree_cap;
    let period = doc.period.as_ref().map(Number::value).transpose()?;
    let domain = match &doc.domain {
        Some([a, b]) => (a.value()?, b.value()?),
        None => (0.0, 0.0),
    };
    let curve = match (doc.kind.as_str(), doc.closed) {
        ("graph", false) => Curve::Graph(poly(&numbers(&doc.g_coeffs, "g_coeffs")?, cap)),
        ("graph", true) => return Err(Error::InvalidArc("a graph arc cannot be closed".into())),
        ("parametric", false) => Curve::Polynomial {
            x: poly(&numbers(&doc.x_coeffs, "x_coeffs")?, cap),
            y: poly(&numbers(&doc.y_coeffs, "y_coeffs")?, cap),
        },
        ("parametric", true) => {
            let p = period.ok_or_else(|| Error::InvalidArc("closed arc needs a period".into()))?;
            if !(p.is_finite() && p > 0.0) {
                return Err(Error::InvalidArc(format!("bad period {p}")));
            }
            Curve::Fourier {
                x: numbers(&doc.x_coeffs, "x_coeffs")?,
                y: numbers(&doc.y_coeffs, "y_coeffs")?,
                omega: TAU / p,
            }
        }
        (other, _) => return Err(Error::InvalidArc(format!("unknown kind {other:?}"))),
    };
    ArcSpec::new(curve, doc.closed, period, domain, cap)
}

/// [`load_arc`] on a file.
pub fn load_arc_file(path: &Path) -> Result<ArcSpec> {
    load_arc(&std::fs::read_to_string(path)?)
}

fn poly(c: &[f64], cap: usize) -> TaylorPoly<f64> {
    // Keep every supplied coefficient so re-centring stays exact.
    TaylorPoly::from_f64_coeffs(c, cap.max(c.len().saturating_sub(1)))
}

impl ArcSpec {
    pub fn new(curve: Curve, closed: bool, period: Option<f64>, domain: (f64, f64), degree_cap: usize) -> Result<Self> {
        if degree_cap < 3 {
            return Err(Error::InvalidArc(format!("degree_cap must be at least 3, got {degree_cap}")));
        }
        if closed != matches!(curve, Curve::Fourier { .. }) {
            return Err(Error::InvalidArc("closed arcs need trigonometric components".into()));
        }
        if !(domain.0.is_finite() && domain.1.is_finite() && domain.0 <= domain.1) {
            return Err(Error::InvalidArc(format!("bad domain {domain:?}")));
        }
        let arc = Self { curve, closed, period, domain, degree_cap };
        arc.check_regular()?;
        Ok(arc)
    }

    /// `x^2 + y^2 = 1`, counter-clockwise, `period = 2 pi`.
    pub fn unit_circle(degree_cap: usize) -> Self {
        Self::circle(1.0, 1, degree_cap)
    }

    /// Circle of radius `r` traversed `times` times per period `2 pi`.
    pub fn circle(r: f64, times: usize, degree_cap: usize) -> Self {
        let mut x = vec![0.0; 2 * times + 1];
        let mut y = vec![0.0; 2 * times + 1];
        x[2 * times - 1] = r;
        y[2 * times] = r;
        Self::new(Curve::Fourier { x, y, omega: 1.0 }, true, Some(TAU), (0.0, 0.0), degree_cap)
            .expect("circle is regular")
    }

    /// Graph of a polynomial over `domain`.
    pub fn graph(coeffs: &[f64], domain: (f64, f64), degree_cap: usize) -> Result<Self> {
        Self::new(Curve::Graph(poly(coeffs, degree_cap)), false, None, domain, degree_cap)
    }

    fn check_regular(&self) -> Result<()> {
        let (a, b) = self.sample_interval();
        let m = if self.closed { WINDING_SAMPLES } else { 257 };
        let mut scale = 0.0_f64;
        let mut speeds = Vec::with_capacity(m);
        for i in 0..m {
            let s = if m == 1 || a == b { a } else { a + (b - a) * i as f64 / (m - 1) as f64 };
            let v = self.velocity(s);
            let p = self.point(s);
            if !(v.re.is_finite() && v.im.is_finite() && p.re.is_finite() && p.im.is_finite()) {
                return Err(Error::InvalidArc(format!("non-finite curve value at s = {s}")));
            }
            scale = scale.max(v.norm());
            speeds.push((s, v.norm()));
        }
        for (s, sp) in speeds {
            if sp <= 1e-10 * scale.max(1.0) {
                return Err(Error::SingularParametrization(s));
            }
        }
        Ok(())
    }

    fn sample_interval(&self) -> (f64, f64) {
        match (self.closed, self.period) {
            (true, Some(p)) => (0.0, p),
            _ => self.domain,
        }
    }

    pub fn point(&self, s: f64) -> Complex64 {
        let (x, y) = self.component_derivs(s, 0);
        Complex64::new(x, y)
    }

    pub fn velocity(&self, s: f64) -> Complex64 {
        let (x, y) = self.component_derivs(s, 1);
        Complex64::new(x, y)
    }

    fn component_derivs(&self, s: f64, order: usize) -> (f64, f64) {
        match &self.curve {
            Curve::Graph(g) => {
                let x = match order {
                    0 => s,
                    1 => 1.0,
                    _ => 0.0,
                };
                (x, nth_derivative(g, s, order))
            }
            Curve::Polynomial { x, y } => (nth_derivative(x, s, order), nth_derivative(y, s, order)),
            Curve::Fourier { x, y, omega } => {
                (fourier_derivative(x, *omega, s, order), fourier_derivative(y, *omega, s, order))
            }
        }
    }

    /// Exact Taylor coefficients of `(x, y)` at `s0`, in powers of `s - s0`.
    pub fn jet(&self, s0: f64, cap: usize) -> (TaylorPoly<f64>, TaylorPoly<f64>) {
        match &self.curve {
            Curve::Graph(g) => {
                let x = TaylorPoly::from_f64_coeffs(&[s0, 1.0], cap);
                (x, g.shift(s0).with_cap(cap))
            }
            Curve::Polynomial { x, y } => (x.shift(s0).with_cap(cap), y.shift(s0).with_cap(cap)),
            Curve::Fourier { x, y, omega } => {
                let mut fact = 1.0;
                let mut cx = Vec::with_capacity(cap + 1);
                let mut cy = Vec::with_capacity(cap + 1);
                for m in 0..=cap {
                    if m > 0 {
                        fact *= m as f64;
                    }
                    cx.push(fourier_derivative(x, *omega, s0, m) / fact);
                    cy.push(fourier_derivative(y, *omega, s0, m) / fact);
                }
                (TaylorPoly::from_coeffs(cx, cap), TaylorPoly::from_coeffs(cy, cap))
            }
        }
    }

    /// Tangent angles at sorted parameters, unwrapped continuously from the
    /// first one by sampling in between.
    pub fn unwrapped_tangent_angles(&self, params: &[f64]) -> Result<Vec<f64>> {
        let Some(&first) = params.first() else {
            return Ok(Vec::new());
        };
        let step = match (self.closed, self.period) {
            (true, Some(p)) => p / WINDING_SAMPLES as f64,
            _ => ((self.domain.1 - self.domain.0) / WINDING_SAMPLES as f64).max(1e-3),
        };
        let mut out = Vec::with_capacity(params.len());
        let mut s = first;
        let v0 = self.velocity(s);
        let mut angle = v0.im.atan2(v0.re);
        let mut prev_raw = angle;
        out.push(angle);
        for &target in &params[1..] {
            if target < s {
                return Err(Error::InvalidArgument("parameters must be sorted".into()));
            }
            let pieces = ((target - s) / step).ceil().max(1.0) as usize;
            let start = s;
            for i in 1..=pieces {
                let si = start + (target - start) * i as f64 / pieces as f64;
                let v = self.velocity(si);
                let raw = v.im.atan2(v.re);
                let mut d = raw - prev_raw;
                d -= TAU * (d / TAU).round();
                if d.abs() > PI / 2.0 {
                    return Err(Error::Resolution(format!("tangent turns by {d:.3} near s = {si}")));
                }
                angle += d;
                prev_raw = raw;
            }
            s = target;
            out.push(angle);
        }
        Ok(out)
    }
}

fn nth_derivative(p: &TaylorPoly<f64>, s: f64, order: usize) -> f64 {
    let mut q = p.clone();
    for _ in 0..order {
        q = q.derivative();
    }
    q.eval(s)
}

fn fourier_derivative(c: &[f64], omega: f64, s: f64, m: usize) -> f64 {
    let mut acc = if m == 0 { c[0] } else { 0.0 };
    let shift = m as f64 * PI / 2.0;
    for k in 1..=(c.len() - 1).div_ceil(2) {
        let a = c.get(2 * k - 1).copied().unwrap_or(0.0);
        let b = c.get(2 * k).copied().unwrap_or(0.0);
        let w = k as f64 * omega;
        let ph = w * s + shift;
        acc += w.powi(m as i32) * (a * ph.cos() + b * ph.sin());
    }
    acc
}

/// Rigid motion and local potential of `arc` at `s0`.
///
/// The motion sends `z(s0)` to the origin and the tangent there to the
/// positive real axis, with `theta` in `[0, 2 pi / n)`. The returned `f0` has
/// the arc's degree cap and satisfies `f0(0) = f0'(0) = f0''(0) = 0`.
pub fn normalize_at(arc: &ArcSpec, s0: f64, n: usize) -> Result<NormalizedArc> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    let cap = arc.degree_cap;
    let (x, y) = arc.jet(s0, cap);
    let p0 = Complex64::new(x.coeff(0), y.coeff(0));
    let v = Complex64::new(x.coeff(1), y.coeff(1));
    let speed = v.norm();
    if !(speed > 0.0) || !speed.is_finite() {
        return Err(Error::SingularParametrization(s0));
    }
    let alpha = -v.im.atan2(v.re);
    let theta = alpha.rem_euclid(TAU) / n as f64;
    let rot = Complex64::from_polar(1.0, n as f64 * theta);
    let a = -rot * p0;

    let dx = x.add_constant(-p0.re);
    let dy = y.add_constant(-p0.im);
    let u = &dx.scale(rot.re) - &dy.scale(rot.im);
    let mut w = &dx.scale(rot.im) + &dy.scale(rot.re);
    let drift = w.coeff(1).abs();
    if drift > 1e-10 * speed.max(1.0) {
        return Err(Error::Normalization(format!("rotated tangent has normal part {drift:e}")));
    }
    w.coeffs_mut()[0] = 0.0;
    w.coeffs_mut()[1] = 0.0;
    let mut u = u;
    u.coeffs_mut()[0] = 0.0;
    let h = u.revert()?;
    let slope = w.compose(&h)?;
    let f0 = slope.antiderivative().with_cap(cap);
    Ok(NormalizedArc { n, f0, frame: Frame { a, theta }, s0, speed })
}

/// Total turning of the tangent over one period, in full turns.
///
/// Counter-clockwise simple loops give `+1`. Values other than `+-1` mean
/// the curve is not embedded; a warning is logged and the number returned.
pub fn rotation_number(arc: &ArcSpec) -> Result<i64> {
    let period = match (arc.closed, arc.period) {
        (true, Some(p)) => p,
        _ => return Err(Error::NotApplicable("rotation number needs a closed arc".into())),
    };
    let angles = arc.unwrapped_tangent_angles(&[0.0, period])?;
    let turns = (angles[1] - angles[0]) / TAU;
    let r = turns.round();
    if (turns - r).abs() > 1e-6 {
        return Err(Error::Resolution(format!("tangent turning {turns} is not an integer")));
    }
    let r = r as i64;
    if !is_embedding_compatible(r) {
        log::warn!("rotation number {r}: the closed arc is not embedded");
    }
    Ok(r)
}

/// Whether a rotation number is possible for an embedded closed curve.
pub fn is_embedding_compatible(rotation: i64) -> bool {
    rotation.abs() == 1
}

/// Whether the branch index returns to itself after one loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Gate {
    Ok,
    /// The branch is shifted by `shift` (mod `n`).
    Obstruction { shift: usize },
}

/// Branch holonomy around a closed arc: one tangent turn shifts the branch
/// by 2, so the extension closes up iff `2 * rotation = 0 (mod n)`.
pub fn existence_gate(arc: &ArcSpec, n: usize) -> Result<Gate> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    let rot = rotation_number(arc)?;
    let shift = (2 * rot).rem_euclid(n as i64) as usize;
    Ok(if shift == 0 { Gate::Ok } else { Gate::Obstruction { shift } })
}
