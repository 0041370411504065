//! Metric families on planar charts.
//!
//! Two chart types are supported: a conformal disk (metric `e^{2λ}(dx²+dy²)`
//! on the unit disk) and a warped annulus (`dr² + f(r)²dθ²` on `r ∈ [−R, R]`
//! with a periodic angle). Each family implements [`Geometry`]; concrete
//! models are registered by name in [`presets`] and selected at runtime.
//!
//! Conventions used throughout the crate:
//!
//! * Chart coordinates are written `(c1, c2)`: `(x, y)` on the disk,
//!   `(r, θ)` on the annulus.
//! * `frame` returns a positively oriented orthonormal frame `(e1, e2)`;
//!   a unit tangent vector is parametrised by its fiber angle,
//!   `v(θ) = cos θ · e1 + sin θ · e2`.
//! * `connection` returns the coefficients of the connection 1-form `ω` of
//!   that frame, so that parallel transport of `v(θ)` along a curve with
//!   velocity `u` obeys `θ' = −ω(u)`, and `dω = −K dA`.

mod conformal;
pub mod presets;
mod warped;

pub use conformal::{ConformalDisk, ConformalProfile};
pub use warped::{WarpProfile, WarpedAnnulus};

use std::sync::Arc;

use crate::{Error, Result};

/// Chart domain of a model, with the core (`M`) extent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChartKind {
    /// Closed disk of the given chart radius.
    Disk { radius: f64 },
    /// Periodic strip `r ∈ [−r_half, r_half]`, `θ ∈ [0, 2π)`.
    Annulus { r_half: f64 },
}

/// Conformal data at a point of a conformal chart: `(λ, λ_x, λ_y)`.
#[derive(Debug, Clone, Copy)]
pub struct ConformalData {
    pub lambda: f64,
    pub dx: f64,
    pub dy: f64,
}

/// A metric family on a planar chart.
///
/// All evaluations are pure functions of the immutable model; callers are
/// responsible for staying inside the extended chart (checked entry points
/// live on [`SurfaceModel`]).
pub trait Geometry: Send + Sync {
    fn chart(&self) -> ChartKind;

    /// Extension margin ε: the extended chart is the core enlarged by ε.
    fn extension_margin(&self) -> f64;

    /// Metric components `g_{ij}` in chart coordinates.
    fn metric(&self, p: [f64; 2]) -> [[f64; 2]; 2];

    /// Christoffel symbols `Γ^i_{jk}`, indexed `[i][j][k]`.
    fn christoffel(&self, p: [f64; 2]) -> [[[f64; 2]; 2]; 2];

    /// Gauss curvature.
    fn gauss_curvature(&self, p: [f64; 2]) -> f64;

    /// Orthonormal frame `(e1, e2)` as rows of coordinate components.
    fn frame(&self, p: [f64; 2]) -> [[f64; 2]; 2];

    /// Connection 1-form coefficients `(ω_1, ω_2)` of the frame.
    fn connection(&self, p: [f64; 2]) -> [f64; 2];

    /// Conformal factor and its gradient, for conformal charts only.
    fn conformal(&self, p: [f64; 2]) -> Option<ConformalData>;
}

/// An immutable surface model: a geometry plus its preset name.
///
/// Cloning is cheap (the geometry is shared).
#[derive(Clone)]
pub struct SurfaceModel {
    name: String,
    geom: Arc<dyn Geometry>,
}

impl std::fmt::Debug for SurfaceModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SurfaceModel")
            .field("name", &self.name)
            .field("chart", &self.geom.chart())
            .finish()
    }
}

impl SurfaceModel {
    pub fn new(name: impl Into<String>, geom: Arc<dyn Geometry>) -> Self {
        Self { name: name.into(), geom }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn chart(&self) -> ChartKind {
        self.geom.chart()
    }

    pub fn extension_margin(&self) -> f64 {
        self.geom.extension_margin()
    }

    pub fn geometry(&self) -> &dyn Geometry {
        self.geom.as_ref()
    }

    /// Signed distance-like defect to the core boundary in chart units:
    /// positive inside `M`, zero on `∂M`, negative outside.
    pub fn boundary_defect(&self, p: [f64; 2]) -> f64 {
        match self.geom.chart() {
            ChartKind::Disk { radius } => radius - (p[0] * p[0] + p[1] * p[1]).sqrt(),
            ChartKind::Annulus { r_half } => r_half - p[0].abs(),
        }
    }

    pub fn in_core(&self, p: [f64; 2]) -> bool {
        self.boundary_defect(p) >= 0.0
    }

    pub fn in_extended(&self, p: [f64; 2]) -> bool {
        self.boundary_defect(p) >= -self.geom.extension_margin()
    }

    fn check_extended(&self, p: [f64; 2]) -> Result<()> {
        if self.in_extended(p) {
            Ok(())
        } else {
            Err(Error::OutsideChart(p[0], p[1]))
        }
    }

    /// Metric components at a point of the extended chart.
    pub fn metric_at(&self, p: [f64; 2]) -> Result<[[f64; 2]; 2]> {
        self.check_extended(p)?;
        Ok(self.geom.metric(p))
    }

    /// Christoffel symbols `Γ^i_{jk}` at a point of the extended chart.
    pub fn christoffel_at(&self, p: [f64; 2]) -> Result<[[[f64; 2]; 2]; 2]> {
        self.check_extended(p)?;
        Ok(self.geom.christoffel(p))
    }

    /// Gauss curvature at a point of the extended chart.
    pub fn gauss_curvature(&self, p: [f64; 2]) -> Result<f64> {
        self.check_extended(p)?;
        Ok(self.geom.gauss_curvature(p))
    }

    /// Number of boundary components of `∂M`.
    pub fn boundary_components(&self) -> usize {
        match self.geom.chart() {
            ChartKind::Disk { .. } => 1,
            ChartKind::Annulus { .. } => 2,
        }
    }

    /// Boundary point for component `comp` at chart parameter `s ∈ [0, 2π)`,
    /// together with the g-unit tangent and g-unit outward normal.
    pub fn boundary_point(&self, comp: usize, s: f64) -> BoundaryPoint {
        match self.geom.chart() {
            ChartKind::Disk { radius } => {
                let p = [radius * s.cos(), radius * s.sin()];
                let lam = self.geom.conformal(p).map(|c| c.lambda).unwrap_or(0.0);
                let scale = (-lam).exp();
                BoundaryPoint {
                    pos: p,
                    tangent: [-s.sin() * scale, s.cos() * scale],
                    outward: [s.cos() * scale, s.sin() * scale],
                    // |dγ/ds|_g = e^λ · radius
                    speed: radius / scale,
                }
            }
            ChartKind::Annulus { r_half } => {
                let r = if comp == 0 { r_half } else { -r_half };
                let p = [r, s.rem_euclid(std::f64::consts::TAU)];
                let f = self.geom.metric(p)[1][1].sqrt();
                let sign = if comp == 0 { 1.0 } else { -1.0 };
                BoundaryPoint {
                    pos: p,
                    tangent: [0.0, 1.0 / f],
                    outward: [sign, 0.0],
                    speed: f,
                }
            }
        }
    }

    /// Second fundamental form of `∂M` with respect to the inward normal at
    /// `n_samples` equispaced (in chart parameter) points per component.
    ///
    /// Returns the sampled values and whether all of them are positive; a
    /// non-convex model is reported, not rejected.
    pub fn boundary_convexity(&self, n_samples: usize) -> Result<(Vec<f64>, bool)> {
        if n_samples < 8 {
            return Err(Error::Precondition(format!(
                "boundary_convexity needs n_samples >= 8, got {n_samples}"
            )));
        }
        let mut values = Vec::new();
        for comp in 0..self.boundary_components() {
            for i in 0..n_samples {
                let s = std::f64::consts::TAU * i as f64 / n_samples as f64;
                values.push(self.second_fundamental_form(comp, s));
            }
        }
        let convex = values.iter().all(|&v| v > 0.0);
        Ok((values, convex))
    }

    /// `II(T, T) = g(∇_T T, ν_in)` for the g-unit boundary tangent `T`.
    pub fn second_fundamental_form(&self, comp: usize, s: f64) -> f64 {
        // Differentiate the unit tangent along the boundary numerically and
        // add the Christoffel correction; exact closed forms exist for both
        // charts but the generic path keeps one code route for any profile.
        let h = 1e-5;
        let bp = self.boundary_point(comp, s);
        let bp_p = self.boundary_point(comp, s + h);
        let bp_m = self.boundary_point(comp, s - h);
        let gamma = self.geom.christoffel(bp.pos);
        // dT/dt = dT/ds · ds/dt with ds/dt = 1/|γ'(s)|_g.
        let inv_speed = 1.0 / bp.speed;
        let mut cov = [0.0; 2];
        for i in 0..2 {
            let dt_ds = (bp_p.tangent[i] - bp_m.tangent[i]) / (2.0 * h);
            let mut corr = 0.0;
            for j in 0..2 {
                for k in 0..2 {
                    corr += gamma[i][j][k] * bp.tangent[j] * bp.tangent[k];
                }
            }
            cov[i] = dt_ds * inv_speed + corr;
        }
        let g = self.geom.metric(bp.pos);
        let mut ii = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                ii += g[i][j] * cov[i] * (-bp.outward[j]);
            }
        }
        ii
    }

    /// Riemannian volume of the core `M` by quadrature on a fine chart grid.
    pub fn core_area(&self, n: usize) -> f64 {
        match self.geom.chart() {
            ChartKind::Disk { radius } => {
                let (nr, na) = (n, 2 * n);
                let (hr, ha) = (radius / nr as f64, std::f64::consts::TAU / na as f64);
                let mut total = 0.0;
                for i in 0..nr {
                    let r = (i as f64 + 0.5) * hr;
                    for j in 0..na {
                        let a = (j as f64 + 0.5) * ha;
                        let p = [r * a.cos(), r * a.sin()];
                        let g = self.geom.metric(p);
                        total += (g[0][0] * g[1][1] - g[0][1] * g[1][0]).sqrt() * r * hr * ha;
                    }
                }
                total
            }
            ChartKind::Annulus { r_half } => {
                let (nr, na) = (n, 2 * n);
                let (hr, ha) = (2.0 * r_half / nr as f64, std::f64::consts::TAU / na as f64);
                let mut total = 0.0;
                for i in 0..nr {
                    let r = -r_half + (i as f64 + 0.5) * hr;
                    for j in 0..na {
                        let a = (j as f64 + 0.5) * ha;
                        let g = self.geom.metric([r, a]);
                        total += (g[0][0] * g[1][1] - g[0][1] * g[1][0]).sqrt() * hr * ha;
                    }
                }
                total
            }
        }
    }
}

/// A boundary point with its g-unit tangent/outward-normal frame.
#[derive(Debug, Clone, Copy)]
pub struct BoundaryPoint {
    pub pos: [f64; 2],
    pub tangent: [f64; 2],
    pub outward: [f64; 2],
    /// `|dγ/ds|_g`: arc-length element per unit chart parameter.
    pub speed: f64,
}
