//! Geometric realizations, metric measurements, and the numerical side of
//! the contact-structure checks.
//!
//! Tolerances are module constants; numerical derivatives use central
//! differences at step `1e-6` throughout.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::complex::SimplicialComplex;

/// Unit-norm tolerance for points claimed to lie on the 3-sphere.
pub const SPHERE_NORM_TOL: f64 = 1e-12;
/// Tolerance for the sphere membership precondition of the contact form.
pub const ON_SPHERE_TOL: f64 = 1e-9;
/// Central-difference step.
pub const DIFF_STEP: f64 = 1e-6;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum GeometryError {
    #[error("vertex {0} has no coordinates")]
    MissingCoordinates(String),
    #[error("point is not on the unit 3-sphere (|p| = {0})")]
    NotOnSphere(f64),
    #[error("coordinates for {label} have dimension {found}, expected {expected}")]
    WrongDimension {
        label: String,
        expected: usize,
        found: usize,
    },
    #[error("model {0} cannot be exported")]
    UnsupportedModel(String),
}

/// The model spaces a realization can live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ModelSpace {
    /// Euclidean k-space; coordinates have length k.
    Euclidean(usize),
    /// Unit sphere in 4-space, chordal metric.
    Sphere3,
    /// Unit disk times circle; coordinates are (x, y, theta) with the
    /// product of the Euclidean disk metric and circle arc length.
    SolidTorus,
    /// Unit cube with opposite faces identified; distance is the minimum
    /// over lattice translates.
    FlatTorus3,
}

impl ModelSpace {
    pub fn coord_len(&self) -> usize {
        match self {
            ModelSpace::Euclidean(k) => *k,
            ModelSpace::Sphere3 => 4,
            ModelSpace::SolidTorus => 3,
            ModelSpace::FlatTorus3 => 3,
        }
    }
}

/// A map from vertex labels to coordinates in a model space.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    pub model: ModelSpace,
    coords: BTreeMap<String, Vec<f64>>,
}

impl Realization {
    pub fn new(
        model: ModelSpace,
        coords: BTreeMap<String, Vec<f64>>,
    ) -> Result<Self, GeometryError> {
        let expected = model.coord_len();
        for (label, p) in &coords {
            if p.len() != expected {
                return Err(GeometryError::WrongDimension {
                    label: label.clone(),
                    expected,
                    found: p.len(),
                });
            }
            if model == ModelSpace::Sphere3 {
                let norm = p.iter().map(|c| c * c).sum::<f64>().sqrt();
                if (norm - 1.0).abs() > SPHERE_NORM_TOL {
                    return Err(GeometryError::NotOnSphere(norm));
                }
            }
        }
        Ok(Realization { model, coords })
    }

    pub fn coords(&self, label: &str) -> Result<&[f64], GeometryError> {
        self.coords
            .get(label)
            .map(|v| v.as_slice())
            .ok_or_else(|| GeometryError::MissingCoordinates(label.to_string()))
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Vec<f64>)> {
        self.coords.iter()
    }

    /// Distance between two realized vertices under the model metric.
    pub fn distance(&self, a: &str, b: &str) -> Result<f64, GeometryError> {
        let p = self.coords(a)?;
        let q = self.coords(b)?;
        Ok(self.point_distance(p, q))
    }

    pub fn point_distance(&self, p: &[f64], q: &[f64]) -> f64 {
        match self.model {
            ModelSpace::Euclidean(_) | ModelSpace::Sphere3 => euclidean(p, q),
            ModelSpace::SolidTorus => {
                let disk = ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt();
                let mut dt = (p[2] - q[2]).abs() % (2.0 * std::f64::consts::PI);
                if dt > std::f64::consts::PI {
                    dt = 2.0 * std::f64::consts::PI - dt;
                }
                (disk * disk + dt * dt).sqrt()
            }
            ModelSpace::FlatTorus3 => {
                let mut best = f64::INFINITY;
                for dx in -1..=1 {
                    for dy in -1..=1 {
                        for dz in -1..=1 {
                            let shifted = [q[0] + dx as f64, q[1] + dy as f64, q[2] + dz as f64];
                            best = best.min(euclidean(p, &shifted));
                        }
                    }
                }
                best
            }
        }
    }
}

fn euclidean(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q.iter())
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

/// Sorted multiset of all edge lengths of the realized complex.
pub fn edge_lengths(x: &SimplicialComplex, r: &Realization) -> Result<Vec<f64>, GeometryError> {
    let mut out = Vec::new();
    for e in x.faces_of_dim(1) {
        out.push(r.distance(x.label(e[0]), x.label(e[1]))?);
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(out)
}

/// Diameter of a rectilinear simplex: the maximum pairwise vertex distance,
/// which for a simplex equals its longest edge.
pub fn simplex_diameter(labels: &[&str], r: &Realization) -> Result<f64, GeometryError> {
    let mut best: f64 = 0.0;
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            best = best.max(r.distance(labels[i], labels[j])?);
        }
    }
    Ok(best)
}

/// Maximum facet diameter and a witness facet.
pub fn max_facet_diameter(
    x: &SimplicialComplex,
    r: &Realization,
) -> Result<(f64, Vec<String>), GeometryError> {
    let mut best = 0.0f64;
    let mut witness = Vec::new();
    for f in x.facets() {
        let labels: Vec<&str> = f.iter().map(|&v| x.label(v)).collect();
        let d = simplex_diameter(&labels, r)?;
        if d > best {
            best = d;
            witness = labels.iter().map(|s| s.to_string()).collect();
        }
    }
    Ok((best, witness))
}

/// Coefficients of the 1-form `x2 dx1 - x1 dx2 + y2 dy1 - y1 dy2` at a
/// point of the unit 3-sphere, in coordinate order (x1, y1, x2, y2).
pub fn contact_form_beta(p: [f64; 4]) -> Result<[f64; 4], GeometryError> {
    let norm = p.iter().map(|c| c * c).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > ON_SPHERE_TOL {
        return Err(GeometryError::NotOnSphere(norm));
    }
    Ok(beta_coefficients(p))
}

/// The same coefficients without the sphere membership check.
pub fn beta_coefficients(p: [f64; 4]) -> [f64; 4] {
    [p[2], p[3], -p[0], -p[1]]
}

/// Pairing of the form at `p` with a tangent vector `v`.
pub fn beta_pairing(p: [f64; 4], v: [f64; 4]) -> f64 {
    let c = beta_coefficients(p);
    c.iter().zip(v.iter()).map(|(a, b)| a * b).sum()
}

/// Maximum |beta(c(t))(c'(t))| over a uniform sample grid on [0, 1], with
/// the derivative supplied analytically.
pub fn legendrian_deviation_analytic(
    pos: impl Fn(f64) -> [f64; 4],
    vel: impl Fn(f64) -> [f64; 4],
    samples: usize,
) -> f64 {
    let mut worst = 0.0f64;
    for k in 0..samples {
        let t = k as f64 / (samples.max(2) - 1) as f64;
        worst = worst.max(beta_pairing(pos(t), vel(t)).abs());
    }
    worst
}

/// Maximum |beta(c(t))(c'(t))| with c' from central differences.
pub fn legendrian_deviation(pos: impl Fn(f64) -> [f64; 4], samples: usize) -> f64 {
    let vel = |t: f64| {
        let a = pos(t - DIFF_STEP);
        let b = pos(t + DIFF_STEP);
        [
            (b[0] - a[0]) / (2.0 * DIFF_STEP),
            (b[1] - a[1]) / (2.0 * DIFF_STEP),
            (b[2] - a[2]) / (2.0 * DIFF_STEP),
            (b[3] - a[3]) / (2.0 * DIFF_STEP),
        ]
    };
    let mut worst = 0.0f64;
    for k in 0..samples {
        // Keep the stencil inside [0, 1].
        let t = DIFF_STEP + (1.0 - 2.0 * DIFF_STEP) * k as f64 / (samples.max(2) - 1) as f64;
        worst = worst.max(beta_pairing(pos(t), vel(t)).abs());
    }
    worst
}

/// The explicit Legendrian edge arc between the first two vertex axes:
/// `c(t) = (2t^2 - 2t + 1)^{-1/2} (t, 1-t, 0, 0)`.
pub fn example_edge_arc(t: f64) -> [f64; 4] {
    let n = (2.0 * t * t - 2.0 * t + 1.0).powf(-0.5);
    [n * t, n * (1.0 - t), 0.0, 0.0]
}

/// Its derivative `c'(t) = (2t^2 - 2t + 1)^{-3/2} (1-t, -t, 0, 0)`.
pub fn example_edge_arc_velocity(t: f64) -> [f64; 4] {
    let n = (2.0 * t * t - 2.0 * t + 1.0).powf(-1.5);
    [n * (1.0 - t), n * (-t), 0.0, 0.0]
}

/// Radially normalized chord arc from p to q on the sphere.
pub fn great_arc(p: [f64; 4], q: [f64; 4]) -> impl Fn(f64) -> [f64; 4] {
    move |t: f64| {
        let raw = [
            (1.0 - t) * p[0] + t * q[0],
            (1.0 - t) * p[1] + t * q[1],
            (1.0 - t) * p[2] + t * q[2],
            (1.0 - t) * p[3] + t * q[3],
        ];
        let n = raw.iter().map(|c| c * c).sum::<f64>().sqrt();
        [raw[0] / n, raw[1] / n, raw[2] / n, raw[3] / n]
    }
}

/// Minimum |beta(p)(dp/dt1)| over an interior barycentric grid of the
/// radially normalized 2-face spanned by three sphere points.
///
/// A strictly positive margin certifies that the face's tangent plane never
/// coincides with the contact plane along the sampled direction.
pub fn face_tangency_margin(verts: [[f64; 4]; 3], grid: usize) -> f64 {
    let point = |t1: f64, t2: f64| -> [f64; 4] {
        let t3 = 1.0 - t1 - t2;
        let raw = [
            t1 * verts[0][0] + t2 * verts[1][0] + t3 * verts[2][0],
            t1 * verts[0][1] + t2 * verts[1][1] + t3 * verts[2][1],
            t1 * verts[0][2] + t2 * verts[1][2] + t3 * verts[2][2],
            t1 * verts[0][3] + t2 * verts[1][3] + t3 * verts[2][3],
        ];
        let n = raw.iter().map(|c| c * c).sum::<f64>().sqrt();
        [raw[0] / n, raw[1] / n, raw[2] / n, raw[3] / n]
    };
    let n = grid.max(3);
    let mut min_abs = f64::INFINITY;
    for i in 1..n {
        for j in 1..n {
            if i + j >= n {
                continue; // stay strictly interior
            }
            let t1 = i as f64 / n as f64;
            let t2 = j as f64 / n as f64;
            let p = point(t1, t2);
            let a = point(t1 - DIFF_STEP, t2);
            let b = point(t1 + DIFF_STEP, t2);
            let dp = [
                (b[0] - a[0]) / (2.0 * DIFF_STEP),
                (b[1] - a[1]) / (2.0 * DIFF_STEP),
                (b[2] - a[2]) / (2.0 * DIFF_STEP),
                (b[3] - a[3]) / (2.0 * DIFF_STEP),
            ];
            min_abs = min_abs.min(beta_pairing(p, dp).abs());
        }
    }
    min_abs
}

/// Declared endpoint data for a twist profile.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BoundaryCondition {
    pub at_r: f64,
    pub expect_h1: f64,
    pub expect_h2: f64,
    pub tol: f64,
}

#[derive(Debug, Clone)]
enum ProfileKind {
    /// `h1 = -cos(pi r / R)`, `h2 = r^2 sin(pi r / R)` on [0, R]; then
    /// `h1 = 1` with `h2` running monotonically down to `-r^2` near 1.
    CosineTwist,
    /// A polar sweep from (-1, 0) to (1, 1) with everywhere-negative
    /// determinant.
    StandardTwist,
    Constant(f64, f64),
}

/// A radial twist profile `(h1(r), h2(r))` on [0, 1] with declared
/// boundary data.
#[derive(Debug, Clone)]
pub struct LutzProfile {
    pub name: String,
    pub twist_radius: f64,
    kind: ProfileKind,
    pub boundary_conditions: Vec<BoundaryCondition>,
}

fn hermite(a: f64, b: f64, ya: f64, yb: f64, ma: f64, mb: f64, r: f64) -> f64 {
    let h = b - a;
    let t = (r - a) / h;
    let t2 = t * t;
    let t3 = t2 * t;
    (2.0 * t3 - 3.0 * t2 + 1.0) * ya
        + (t3 - 2.0 * t2 + t) * h * ma
        + (-2.0 * t3 + 3.0 * t2) * yb
        + (t3 - t2) * h * mb
}

impl LutzProfile {
    /// The closed-form cosine/sine profile with twist radius R: overtwisted
    /// through the tube of radius R, standard (with reversed meridional
    /// sign) near 1.
    pub fn cosine_twist(twist_radius: f64) -> Self {
        assert!(twist_radius > 0.0 && twist_radius < 1.0);
        LutzProfile {
            name: format!("cosine-twist(R={})", twist_radius),
            twist_radius,
            kind: ProfileKind::CosineTwist,
            boundary_conditions: vec![
                BoundaryCondition {
                    at_r: 0.0,
                    expect_h1: -1.0,
                    expect_h2: 0.0,
                    tol: 1e-9,
                },
                BoundaryCondition {
                    at_r: 1.0,
                    expect_h1: 1.0,
                    expect_h2: -1.0,
                    tol: 1e-9,
                },
            ],
        }
    }

    /// A full-tube twist running from (-1, 0) at the core to (1, r^2) at the
    /// boundary.
    pub fn standard_twist() -> Self {
        LutzProfile {
            name: "standard-twist".to_string(),
            twist_radius: 1.0,
            kind: ProfileKind::StandardTwist,
            boundary_conditions: vec![
                BoundaryCondition {
                    at_r: 0.0,
                    expect_h1: -1.0,
                    expect_h2: 0.0,
                    tol: 1e-9,
                },
                BoundaryCondition {
                    at_r: 1.0,
                    expect_h1: 1.0,
                    expect_h2: 1.0,
                    tol: 1e-9,
                },
            ],
        }
    }

    /// Constant profile; its determinant vanishes identically.
    pub fn constant(h1: f64, h2: f64) -> Self {
        LutzProfile {
            name: format!("constant({}, {})", h1, h2),
            twist_radius: 1.0,
            kind: ProfileKind::Constant(h1, h2),
            boundary_conditions: Vec::new(),
        }
    }

    pub fn h1(&self, r: f64) -> f64 {
        match &self.kind {
            ProfileKind::CosineTwist => {
                let rr = self.twist_radius;
                if r <= rr {
                    -(std::f64::consts::PI * r / rr).cos()
                } else {
                    1.0
                }
            }
            ProfileKind::StandardTwist => {
                let omega = std::f64::consts::PI * (1.0 - 0.75 * r);
                let rho = 1.0 + (2f64.sqrt() - 1.0) * r;
                rho * omega.cos()
            }
            ProfileKind::Constant(h1, _) => *h1,
        }
    }

    pub fn h2(&self, r: f64) -> f64 {
        match &self.kind {
            ProfileKind::CosineTwist => {
                let rr = self.twist_radius;
                let rstar = (rr + 1.0) / 2.0;
                if r <= rr {
                    r * r * (std::f64::consts::PI * r / rr).sin()
                } else if r <= rstar {
                    // C1 join: slope -pi*R at R, then the -r^2 branch.
                    hermite(
                        rr,
                        rstar,
                        0.0,
                        -rstar * rstar,
                        -std::f64::consts::PI * rr,
                        -2.0 * rstar,
                        r,
                    )
                } else {
                    -r * r
                }
            }
            ProfileKind::StandardTwist => {
                let omega = std::f64::consts::PI * (1.0 - 0.75 * r);
                let rho = 1.0 + (2f64.sqrt() - 1.0) * r;
                rho * omega.sin()
            }
            ProfileKind::Constant(_, h2) => *h2,
        }
    }
}

/// Report of the twist-profile check.
#[derive(Debug, Clone, Serialize)]
pub struct ProfileReport {
    pub profile: String,
    /// Minimum |h1 h2' - h2 h1'| over the sample grid on (r_min, 1].
    pub min_abs_determinant: f64,
    pub argmin_r: f64,
    pub boundary_ok: bool,
    pub boundary_failures: Vec<String>,
    pub pass: bool,
}

/// Evaluate the never-parallel determinant on a grid over (r_min, 1] and
/// check the profile's declared boundary data.
pub fn lutz_profile_check(p: &LutzProfile, samples: usize, r_min: f64) -> ProfileReport {
    let n = samples.max(8);
    let mut min_abs = f64::INFINITY;
    let mut argmin = r_min;
    for k in 0..=n {
        let r = r_min + (1.0 - r_min) * k as f64 / n as f64;
        let d = profile_determinant(p, r);
        if d.abs() < min_abs {
            min_abs = d.abs();
            argmin = r;
        }
    }
    let mut failures = Vec::new();
    for bc in &p.boundary_conditions {
        let h1 = p.h1(bc.at_r);
        let h2 = p.h2(bc.at_r);
        if (h1 - bc.expect_h1).abs() > bc.tol || (h2 - bc.expect_h2).abs() > bc.tol {
            failures.push(format!(
                "at r={}: got ({:.6}, {:.6}), expected ({}, {})",
                bc.at_r, h1, h2, bc.expect_h1, bc.expect_h2
            ));
        }
    }
    let boundary_ok = failures.is_empty();
    ProfileReport {
        profile: p.name.clone(),
        min_abs_determinant: min_abs,
        argmin_r: argmin,
        boundary_ok,
        boundary_failures: failures,
        pass: boundary_ok && min_abs > 0.0,
    }
}

fn profile_determinant(p: &LutzProfile, r: f64) -> f64 {
    let h = DIFF_STEP;
    let d1 = (p.h1(r + h) - p.h1(r - h)) / (2.0 * h);
    let d2 = (p.h2(r + h) - p.h2(r - h)) / (2.0 * h);
    p.h1(r) * d2 - p.h2(r) * d1
}

/// Contact-condition check with a third, angle-dependent component:
/// minimum of |(h1 h2' - h2 h1') - h1 * dh3/dphi| over an (r, phi) grid.
pub fn lutz_profile_check_with_h3(
    p: &LutzProfile,
    h3: impl Fn(f64, f64) -> f64,
    r_samples: usize,
    phi_samples: usize,
    r_min: f64,
) -> f64 {
    let rn = r_samples.max(8);
    let pn = phi_samples.max(8);
    let mut min_abs = f64::INFINITY;
    for i in 0..=rn {
        let r = r_min + (1.0 - r_min) * i as f64 / rn as f64;
        let base = profile_determinant(p, r);
        for j in 0..pn {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / pn as f64;
            let dphi = (h3(r, phi + DIFF_STEP) - h3(r, phi - DIFF_STEP)) / (2.0 * DIFF_STEP);
            min_abs = min_abs.min((base - p.h1(r) * dphi).abs());
        }
    }
    min_abs
}

/// Piecewise-linear model of a triangulated solid torus in (x, y, theta)
/// coordinates: the meridional walls are fans of flat triangles from a core
/// point to the chords of the boundary loops.
#[derive(Debug, Clone)]
pub struct SolidTorusModel {
    /// Wall i separates cell i-1 from cell i; theta values are stored
    /// unwrapped (monotone within each wall).
    walls: Vec<Vec<[[f64; 3]; 3]>>,
    sectors: usize,
}

/// The wall model of the step-1 stacked solid torus: boundary vertices at
/// angles (4 pi k / n, 2 pi k / n) and wall loops through three consecutive
/// boundary vertices.
pub fn t1_wall_model() -> SolidTorusModel {
    let n = 7usize;
    let vertex = |k: usize| -> [f64; 3] {
        let phi = 4.0 * std::f64::consts::PI * k as f64 / n as f64;
        let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
        [phi.cos(), phi.sin(), theta]
    };
    let mut walls = Vec::new();
    for i in 0..n {
        // Loop through u_i, u_{i+1}, u_{i+2} with theta unwrapped.
        let mut u = [vertex(i), vertex(i + 1), vertex(i + 2)];
        u[1][2] = 2.0 * std::f64::consts::PI * (i + 1) as f64 / n as f64;
        u[2][2] = 2.0 * std::f64::consts::PI * (i + 2) as f64 / n as f64;
        u[0][2] = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
        let cone = [0.0, 0.0, u[1][2]];
        let triangles = vec![[cone, u[0], u[1]], [cone, u[1], u[2]], [cone, u[2], u[0]]];
        walls.push(triangles);
    }
    SolidTorusModel { walls, sectors: n }
}

impl SolidTorusModel {
    /// Cross-section segments of wall `w` at slice angle `theta` (radians,
    /// already lifted into the wall's theta range).
    fn wall_cross_section(&self, w: usize, theta: f64) -> Vec<[[f64; 2]; 2]> {
        let mut segs = Vec::new();
        for tri in &self.walls[w] {
            let mut pts: Vec<[f64; 2]> = Vec::new();
            for (a, b) in [(0, 1), (1, 2), (2, 0)] {
                let (pa, pb) = (tri[a], tri[b]);
                let (ta, tb) = (pa[2] - theta, pb[2] - theta);
                if ta.abs() < 1e-12 {
                    push_unique(&mut pts, [pa[0], pa[1]]);
                }
                if ta * tb < 0.0 {
                    let s = ta / (ta - tb);
                    push_unique(
                        &mut pts,
                        [pa[0] + s * (pb[0] - pa[0]), pa[1] + s * (pb[1] - pa[1])],
                    );
                }
            }
            if pts.len() == 2 {
                segs.push([pts[0], pts[1]]);
            }
        }
        segs
    }

    /// Both walls' cross sections for the cell containing slice parameter t.
    fn slice_segments(&self, t: f64) -> Vec<[[f64; 2]; 2]> {
        let n = self.sectors;
        let theta = 2.0 * std::f64::consts::PI * t.rem_euclid(1.0);
        let k = ((t.rem_euclid(1.0)) * n as f64).floor() as usize % n;
        // Cell between cone angles 2 pi k / n and 2 pi (k+1) / n is bounded
        // by walls k-1 and k.
        let mut segs = Vec::new();
        for w in [(k + n - 1) % n, k] {
            // Lift theta into the wall's range [2 pi w / n, 2 pi (w+2) / n].
            let lo = 2.0 * std::f64::consts::PI * w as f64 / n as f64;
            let mut th = theta;
            while th < lo - 1e-12 {
                th += 2.0 * std::f64::consts::PI;
            }
            segs.extend(self.wall_cross_section(w, th));
        }
        segs
    }
}

fn push_unique(pts: &mut Vec<[f64; 2]>, p: [f64; 2]) {
    if !pts
        .iter()
        .any(|q| (q[0] - p[0]).abs() < 1e-10 && (q[1] - p[1]).abs() < 1e-10)
    {
        pts.push(p);
    }
}

fn segments_intersect(p1: [f64; 2], p2: [f64; 2], q1: [f64; 2], q2: [f64; 2]) -> bool {
    let cross = |o: [f64; 2], a: [f64; 2], b: [f64; 2]| -> f64 {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    let on = |o: [f64; 2], a: [f64; 2], b: [f64; 2], d: f64| -> bool {
        d.abs() < 1e-14
            && b[0].min(a[0]) - 1e-14 <= o[0]
            && o[0] <= b[0].max(a[0]) + 1e-14
            && b[1].min(a[1]) - 1e-14 <= o[1]
            && o[1] <= b[1].max(a[1]) + 1e-14
    };
    on(p1, q1, q2, d1) || on(p2, q1, q2, d2) || on(q1, p1, p2, d3) || on(q2, p1, p2, d4)
}

/// Number of circle samples used by the containment test.
pub const MERIDIAN_CIRCLE_SAMPLES: usize = 128;

/// Largest radius r (up to `tol`, certified from below) such that the flat
/// meridional disk of radius r at slice parameter `t` stays inside its
/// cell: containment is tested by sampling the disk boundary circle against
/// the cell's bounding wall surfaces.
///
/// A slice hitting a wall cone degenerates; a one-sided value a small step
/// inside the cell is returned instead.
pub fn meridian_fit(model: &SolidTorusModel, t: f64, tol: f64) -> f64 {
    let n = model.sectors as f64;
    let frac = (t.rem_euclid(1.0) * n).fract();
    if !(1e-9..=1.0 - 1e-9).contains(&frac) {
        // Degenerate slice through a wall cone: report the one-sided value.
        return meridian_fit(model, t.rem_euclid(1.0) + 1e-6 / n, tol);
    }
    let segs = model.slice_segments(t);
    let contained = |r: f64| -> bool {
        for m in 0..MERIDIAN_CIRCLE_SAMPLES {
            let ang = 2.0 * std::f64::consts::PI * m as f64 / MERIDIAN_CIRCLE_SAMPLES as f64;
            let q = [r * ang.cos(), r * ang.sin()];
            for s in &segs {
                if segments_intersect([0.0, 0.0], q, s[0], s[1]) {
                    return false;
                }
            }
        }
        true
    };
    if contained(1.0) {
        return 1.0;
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if contained(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Maximum of `meridian_fit` over a uniform grid of slice parameters.
pub fn delta_hat(model: &SolidTorusModel, grid: usize, tol: f64) -> f64 {
    let mut best = 0.0f64;
    for g in 0..grid {
        let t = (g as f64 + 0.5) / grid as f64;
        best = best.max(meridian_fit(model, t, tol));
    }
    best
}

/// Where a nested overtwisted disk family lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DiskCenter {
    /// The vertical core line of the periodic cube.
    CubeCoreLine,
    /// The core circle of a solid torus.
    TorusCore,
}

/// One member of a nested family of disks.
#[derive(Debug, Clone, Serialize)]
pub struct DiskSpec {
    pub center: DiskCenter,
    pub r_lo: f64,
    pub r_hi: f64,
    pub twist_index: u32,
}

impl DiskSpec {
    pub fn new(center: DiskCenter, r_lo: f64, r_hi: f64, twist_index: u32) -> Self {
        assert!(0.0 < r_lo && r_lo < r_hi);
        DiskSpec {
            center,
            r_lo,
            r_hi,
            twist_index,
        }
    }
}

/// Per-complex comparison of facet diameters against a disk family's
/// smallest diameter.
#[derive(Debug, Clone, Serialize)]
pub struct ContainmentReport {
    pub max_facet_diameter: f64,
    pub witness_facet: Vec<String>,
    /// Smallest disk diameter, `2 * r_lo`.
    pub disk_diameter: f64,
    /// `disk_diameter - max_facet_diameter`; positive passes.
    pub margin: f64,
    pub pass: bool,
}

/// PASS when every facet diameter is strictly below the smallest disk
/// diameter `2 * r_lo`; the report always states the exact margin.
pub fn disk_containment_report(
    x: &SimplicialComplex,
    r: &Realization,
    d: &DiskSpec,
) -> Result<ContainmentReport, GeometryError> {
    let (max_diam, witness) = max_facet_diameter(x, r)?;
    let disk_diameter = 2.0 * d.r_lo;
    Ok(ContainmentReport {
        max_facet_diameter: max_diam,
        witness_facet: witness,
        disk_diameter,
        margin: disk_diameter - max_diam,
        pass: max_diam < disk_diameter,
    })
}

/// OFF text export of the 2-skeleton.
///
/// Euclidean 3-space exports plain OFF; 4-space and the 3-sphere export
/// `4OFF` with a comment; the solid torus is embedded in 3-space; the flat
/// torus exports fundamental-domain representatives with a note.
pub fn off_export(x: &SimplicialComplex, r: &Realization) -> Result<String, GeometryError> {
    let mut header_note = String::new();
    let mut dim = 3;
    let mut coords: Vec<(String, Vec<f64>)> = Vec::new();
    for l in x.labels() {
        let p = r.coords(l)?;
        let q: Vec<f64> = match r.model {
            ModelSpace::Euclidean(3) => p.to_vec(),
            ModelSpace::Euclidean(k) => {
                dim = k;
                p.to_vec()
            }
            ModelSpace::Sphere3 => {
                dim = 4;
                header_note = "# vertices lie on the unit 3-sphere in 4-space\n".to_string();
                p.to_vec()
            }
            ModelSpace::SolidTorus => {
                header_note =
                    "# solid torus (x, y, theta) embedded with core circle radius 2\n".to_string();
                let (xd, yd, th) = (p[0], p[1], p[2]);
                vec![(2.0 + xd) * th.cos(), (2.0 + xd) * th.sin(), yd]
            }
            ModelSpace::FlatTorus3 => {
                header_note =
                    "# periodic mesh: coordinates are fundamental-domain representatives of the flat torus\n"
                        .to_string();
                p.to_vec()
            }
        };
        coords.push((l.clone(), q));
    }
    let triangles = x.faces_of_dim(2);
    let edges = x.faces_of_dim(1);
    let mut out = String::new();
    if dim == 4 {
        out.push_str("4OFF\n");
    } else {
        out.push_str("OFF\n");
    }
    out.push_str(&header_note);
    out.push_str(&format!(
        "{} {} {}\n",
        coords.len(),
        triangles.len(),
        edges.len()
    ));
    for (_, q) in &coords {
        let parts: Vec<String> = q.iter().map(|c| format!("{:.12}", c)).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    for t in &triangles {
        out.push_str(&format!("3 {} {} {}\n", t[0], t[1], t[2]));
    }
    Ok(out)
}
