//! Adjacency spectra, walk counts, and the walk-ratio limit.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::tol::Tolerances;

const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off})")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("eigen residual {residual:e} exceeds {limit:e}")]
    Residual { residual: f64, limit: f64 },
    #[error("walk count of length {length} overflows 128 bits")]
    WalkOverflow { length: usize },
    #[error("walk length budget must be at least 1")]
    ZeroLength,
    #[error("walk-ratio limit requires a connected non-bipartite graph")]
    LimitNotApplicable,
}

/// Eigenvalues of the adjacency matrix, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    residual_bound: f64,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Largest `‖A·x − λ·x‖` over the computed eigenpairs.
    pub fn residual_bound(&self) -> f64 {
        self.residual_bound
    }

    /// The spectral radius `μ₁`.
    pub fn radius(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// `μ₂`, or `0` for the single-vertex graph.
    pub fn second(&self) -> f64 {
        self.eigenvalues.get(1).copied().unwrap_or(0.0)
    }

    pub fn smallest(&self) -> f64 {
        *self.eigenvalues.last().expect("spectrum is never empty")
    }

    /// Power sum `Σ μᵢᵏ`.
    pub fn moment(&self, k: i32) -> f64 {
        self.eigenvalues.iter().map(|x| x.powi(k)).sum()
    }

    /// Distinct eigenvalues with multiplicities; consecutive values within
    /// `tol` of the first member of a group are merged.
    pub fn grouped(&self, tol: f64) -> Vec<(f64, usize)> {
        let mut groups: Vec<(f64, usize)> = Vec::new();
        for &x in &self.eigenvalues {
            match groups.last_mut() {
                Some((head, count)) if (*head - x).abs() <= tol => *count += 1,
                _ => groups.push((x, 1)),
            }
        }
        groups
    }
}

pub fn spectrum(g: &Graph) -> Result<Spectrum, SpectralError> {
    spectrum_with(g, &Tolerances::default())
}

/// Cyclic Jacobi diagonalization of the adjacency matrix.
pub fn spectrum_with(g: &Graph, tol: &Tolerances) -> Result<Spectrum, SpectralError> {
    let n = g.n();
    let mut a = g.adjacency_matrix();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let threshold = tol.off_diagonal * n as f64;
    let off_norm = |a: &[f64]| {
        let mut s = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                s += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(SpectralError::NoConvergence { sweeps, off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    // residuals against the original 0/1 matrix, eigenvector i is column i of v
    let mut residual_bound = 0.0f64;
    for i in 0..n {
        let lambda = a[i * n + i];
        let mut sq = 0.0;
        for u in 0..n {
            let ax: f64 = g.neighbors(u).map(|w| v[w * n + i]).sum();
            let r = ax - lambda * v[u * n + i];
            sq += r * r;
        }
        residual_bound = residual_bound.max(sq.sqrt());
    }
    let limit = tol.eigen_residual * n as f64;
    if residual_bound > limit {
        return Err(SpectralError::Residual { residual: residual_bound, limit });
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum { eigenvalues, residual_bound })
}

pub fn spectral_radius(g: &Graph) -> Result<f64, SpectralError> {
    spectrum(g).map(|s| s.radius())
}

/// Returns `(2m/n, sqrt(Σ d(u)² / n))`, both lower bounds on `μ`.
pub fn rayleigh_lower_bounds(g: &Graph) -> (f64, f64) {
    let n = g.n() as f64;
    let sum_sq: f64 = g.degrees().map(|d| (d * d) as f64).sum();
    (2.0 * g.m() as f64 / n, (sum_sq / n).sqrt())
}

/// Exact walk counts `w_l(G)` and `w_l(u)` for `1 ≤ l ≤ L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkProfile {
    totals: Vec<u128>,
    per_vertex: Vec<Vec<u128>>,
}

impl WalkProfile {
    pub fn max_length(&self) -> usize {
        self.totals.len()
    }

    /// `w_l(G)`; `l` is 1-based.
    pub fn total(&self, l: usize) -> u128 {
        self.totals[l - 1]
    }

    /// `w_l(u)`: walks on `l` vertices starting at `u`.
    pub fn at(&self, l: usize, u: usize) -> u128 {
        self.per_vertex[l - 1][u]
    }

    pub fn totals(&self) -> &[u128] {
        &self.totals
    }

    /// Builds a profile from per-vertex counts, recomputing totals.
    pub fn from_per_vertex(per_vertex: Vec<Vec<u128>>) -> Self {
        let totals = per_vertex.iter().map(|row| row.iter().sum()).collect();
        WalkProfile { totals, per_vertex }
    }
}

/// Neighbor-sum updates from the all-ones vector: `w_{l+1}(u) = Σ_{v∼u} w_l(v)`.
pub fn walk_counts(g: &Graph, max_length: usize) -> Result<WalkProfile, SpectralError> {
    if max_length == 0 {
        return Err(SpectralError::ZeroLength);
    }
    let n = g.n();
    let mut per_vertex = Vec::with_capacity(max_length);
    per_vertex.push(vec![1u128; n]);
    let mut totals = vec![n as u128];
    for l in 2..=max_length {
        let prev = &per_vertex[l - 2];
        let mut next = vec![0u128; n];
        let mut total = 0u128;
        for (u, slot) in next.iter_mut().enumerate() {
            let mut acc = 0u128;
            for v in g.neighbors(u) {
                acc = acc.checked_add(prev[v]).ok_or(SpectralError::WalkOverflow { length: l })?;
            }
            *slot = acc;
            total = total.checked_add(acc).ok_or(SpectralError::WalkOverflow { length: l })?;
        }
        per_vertex.push(next);
        totals.push(total);
    }
    Ok(WalkProfile { totals, per_vertex })
}

/// Outcome of [`walk_ratio_limit_check`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioConvergence {
    pub offset: usize,
    pub target: f64,
    /// Least `l` meeting the tolerance, or the `l` with the smallest error
    /// when the budget ran out.
    pub length: usize,
    pub error: f64,
    pub converged: bool,
}

/// Ratio of two big integers as `f64`, shifting both so the conversion
/// never overflows.
fn big_ratio(a: &BigUint, b: &BigUint) -> f64 {
    let shift = a.bits().max(b.bits()).saturating_sub(128);
    let (a, b) = (a >> shift, b >> shift);
    a.to_f64().unwrap_or(f64::INFINITY) / b.to_f64().unwrap_or(f64::INFINITY)
}

/// Finds the least `l` with `|w_{l+q} / w_{l−1} − μ^{q+1}| ≤ tol·max(1, μ^{q+1})`.
///
/// Walk totals are exact big integers; only the final division is in
/// floating point.
pub fn walk_ratio_limit_check(
    g: &Graph,
    offset: usize,
    tol: f64,
    max_length: usize,
) -> Result<RatioConvergence, SpectralError> {
    if !g.is_connected() || g.is_bipartite() {
        return Err(SpectralError::LimitNotApplicable);
    }
    let mu = spectral_radius(g)?;
    let target = mu.powi(offset as i32 + 1);
    let scale = target.max(1.0);

    let n = g.n();
    let mut walk: Vec<BigUint> = vec![BigUint::from(1u8); n];
    // totals[i] = w_{i+1}(G)
    let mut totals: Vec<BigUint> = vec![BigUint::from(n)];
    let mut extend = |totals: &mut Vec<BigUint>, upto: usize| {
        while totals.len() < upto {
            let next: Vec<BigUint> =
                (0..n).map(|u| g.neighbors(u).fold(BigUint::zero(), |acc, v| acc + &walk[v])).collect();
            totals.push(next.iter().sum());
            walk = next;
        }
    };

    let mut best = RatioConvergence { offset, target, length: 2, error: f64::INFINITY, converged: false };
    for l in 2..=max_length.max(2) {
        extend(&mut totals, l + offset);
        let ratio = big_ratio(&totals[l + offset - 1], &totals[l - 2]);
        let error = (ratio - target).abs();
        if error < best.error {
            best.error = error;
            best.length = l;
        }
        if error <= tol * scale {
            return Ok(RatioConvergence { offset, target, length: l, error, converged: true });
        }
    }
    Ok(best)
}
