//! Coupled spectrum solver.
//!
//! The angular chain depends on `M + E`, so the orbital number `l'` — and
//! with it the centrifugal strength and the whole radial residual — is
//! implicit in the energy. The solver treats the composition
//!
//! ```text
//! E -> chain(M + E) -> l' -> omega -> Pekeris -> radial residual(E)
//! ```
//!
//! as one scalar function, scans it on a uniform grid over the bound-state
//! window `(-M, M)`, brackets sign changes, and bisects each bracket. Grid
//! points where the chain or the substitutions are non-evaluable (complex
//! exponents, quantization poles) are skipped, not treated as faults.
//!
//! Scan points are independent; they are evaluated on a small scoped
//! thread pool capped by the `DIRAC_AIM_THREADS` environment variable and
//! merged back in grid order, so results are deterministic regardless of
//! thread count.

use crate::angular::{solve_chain, AngularChain, AxisSpec, ChainReading};
use crate::error::{Error, Result};
use crate::pekeris::{centrifugal_omega, pekeris_coeffs, PekerisCoeffs};
use crate::radial::{energy_residual, substituted_params, RadialConfig, RadialShape};

/// Environment variable capping solver concurrency.
pub const THREADS_ENV: &str = "DIRAC_AIM_THREADS";

/// Angular input: either the full Scarf chain or a direct orbital number
/// (the "doublet table" mode with non-central potentials switched off).
#[derive(Debug, Clone)]
pub enum AngularSpec {
    Chain(Vec<AxisSpec>),
    EllOverride(f64),
}

/// One full problem: radial physics, equilibrium distance, angular input,
/// and the chain-reading flag.
#[derive(Debug, Clone)]
pub struct ProblemConfig {
    pub radial: RadialConfig,
    pub r_e: f64,
    pub angular: AngularSpec,
    pub reading: ChainReading,
}

/// Energy-scan parameters.
#[derive(Debug, Clone, Copy)]
pub struct ScanSettings {
    pub e_min: f64,
    pub e_max: f64,
    pub steps: usize,
    /// Bisection convergence: |E interval| <= this (fm^-1).
    pub bisect_tol: f64,
    /// Keep states failing the admissibility filter (flagged) instead of
    /// dropping them.
    pub diagnostic: bool,
}

impl ScanSettings {
    /// Default grid: 20,000 points on `(-M + 1e-6, M - 1e-6)`.
    pub fn default_for_mass(m: f64) -> Self {
        ScanSettings {
            e_min: -m + 1e-6,
            e_max: m - 1e-6,
            steps: 20_000,
            bisect_tol: 1e-10,
            diagnostic: false,
        }
    }
}

/// One solved level.
#[derive(Debug, Clone)]
pub struct BoundState {
    pub e: f64,
    pub n: u32,
    /// Angular quantum numbers, empty in override mode.
    pub n_i: Vec<u32>,
    pub ell_prime: f64,
    pub residual: f64,
    pub shape: Option<RadialShape>,
    pub chain: Option<AngularChain>,
    pub admissible: bool,
}

/// A problem with its Pekeris coefficients precomputed (they depend only
/// on `q`, `alpha`, `r_e`, never on the energy).
pub struct Solver {
    cfg: ProblemConfig,
    coeffs: PekerisCoeffs,
}

impl Solver {
    pub fn new(cfg: ProblemConfig) -> Result<Self> {
        cfg.radial.validate()?;
        if let AngularSpec::EllOverride(l) = cfg.angular {
            if !(l >= 0.0) {
                return Err(Error::InvalidParameter {
                    name: "ell_override",
                    value: l,
                    reason: "orbital number must be >= 0",
                });
            }
        }
        let coeffs = pekeris_coeffs(cfg.radial.q, cfg.radial.alpha, cfg.r_e)?;
        Ok(Solver { cfg, coeffs })
    }

    pub fn config(&self) -> &ProblemConfig {
        &self.cfg
    }

    pub fn coeffs(&self) -> &PekerisCoeffs {
        &self.coeffs
    }

    /// Orbital number at energy `e` (chain evaluated at `M + E`, or the
    /// override), plus the solved chain when one exists.
    pub fn ell_prime_at(&self, e: f64) -> Result<(f64, Option<AngularChain>)> {
        match &self.cfg.angular {
            AngularSpec::EllOverride(l) => Ok((*l, None)),
            AngularSpec::Chain(axes) => {
                let chain = solve_chain(
                    axes,
                    self.cfg.radial.m + e,
                    self.cfg.radial.dimension,
                    self.cfg.reading,
                )?;
                Ok((chain.ell_prime, Some(chain)))
            }
        }
    }

    /// The coupled signed residual at energy `e`.
    pub fn residual_at(&self, e: f64) -> Result<f64> {
        let (ell_prime, _) = self.ell_prime_at(e)?;
        let omega = centrifugal_omega(ell_prime, self.cfg.radial.dimension, self.cfg.r_e)?.omega;
        energy_residual(&self.cfg.radial, e, omega, &self.coeffs)
    }

    /// Scan, bracket, and bisect. Empty output is a valid result (no sign
    /// change anywhere), not an error.
    pub fn solve_bound_states(&self, scan: &ScanSettings) -> Result<Vec<BoundState>> {
        let m = self.cfg.radial.m;
        if !(scan.e_min < scan.e_max) || scan.e_min <= -m || scan.e_max >= m {
            return Err(Error::InvalidParameter {
                name: "scan",
                value: scan.e_min,
                reason: "scan window must satisfy -M < e_min < e_max < M",
            });
        }
        if scan.steps < 2 {
            return Err(Error::EmptyGrid);
        }

        let grid: Vec<f64> = (0..scan.steps)
            .map(|i| {
                scan.e_min + (scan.e_max - scan.e_min) * i as f64 / (scan.steps - 1) as f64
            })
            .collect();
        let values = self.eval_grid(&grid);

        let mut states = Vec::new();
        for i in 0..grid.len() - 1 {
            let (Some(f0), Some(f1)) = (values[i], values[i + 1]) else {
                continue;
            };
            if f0 == 0.0 {
                states.push(self.make_state(grid[i], f0));
                continue;
            }
            if f0.signum() == f1.signum() {
                continue;
            }
            let root = self.bisect(grid[i], grid[i + 1], f0, scan.bisect_tol)?;
            let res = self.residual_at(root).unwrap_or(f64::NAN);
            states.push(self.make_state(root, res));
        }

        // Merge duplicates from adjacent brackets touching the same root.
        states.dedup_by(|a, b| (a.e - b.e).abs() <= 10.0 * scan.bisect_tol);
        if !scan.diagnostic {
            states.retain(|s| s.admissible);
        }
        Ok(states)
    }

    /// Evaluate the residual over the grid, concurrently, in deterministic
    /// grid order. Non-evaluable points come back as `None`.
    fn eval_grid(&self, grid: &[f64]) -> Vec<Option<f64>> {
        let threads = thread_budget().min(grid.len().max(1));
        if threads <= 1 {
            return grid.iter().map(|&e| self.residual_at(e).ok()).collect();
        }
        let chunk = grid.len().div_ceil(threads);
        let mut values = vec![None; grid.len()];
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for (idx, es) in grid.chunks(chunk).enumerate() {
                handles.push((
                    idx,
                    scope.spawn(move || {
                        es.iter()
                            .map(|&e| self.residual_at(e).ok())
                            .collect::<Vec<_>>()
                    }),
                ));
            }
            for (idx, handle) in handles {
                let part = handle.join().expect("scan worker panicked");
                values[idx * chunk..idx * chunk + part.len()].copy_from_slice(&part);
            }
        });
        values
    }

    fn bisect(&self, mut lo: f64, mut hi: f64, mut flo: f64, tol: f64) -> Result<f64> {
        for _ in 0..200 {
            if hi - lo <= tol {
                break;
            }
            let mid = 0.5 * (lo + hi);
            let Ok(fmid) = self.residual_at(mid) else {
                // Residual became non-evaluable inside the bracket; fall
                // back to the evaluable half's midpoint refinement.
                hi = mid;
                continue;
            };
            if fmid == 0.0 {
                return Ok(mid);
            }
            if fmid.signum() == flo.signum() {
                lo = mid;
                flo = fmid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    fn make_state(&self, e: f64, residual: f64) -> BoundState {
        let m = self.cfg.radial.m;
        let (ell_prime, chain, chain_ok) = match self.ell_prime_at(e) {
            Ok((l, c)) => (l, c, true),
            Err(_) => (f64::NAN, None, false),
        };
        let shape = if chain_ok {
            centrifugal_omega(ell_prime.max(0.0), self.cfg.radial.dimension, self.cfg.r_e)
                .ok()
                .and_then(|w| substituted_params(&self.cfg.radial, e, w.omega, &self.coeffs).ok())
        } else {
            None
        };
        let admissible = chain_ok
            && e.abs() < m
            && m + e - self.cfg.radial.c_s > 0.0
            && shape.map_or(false, |s| {
                s.delta > 0.0 && s.gamma > 0.0 && s.eps_n + 0.25 >= 0.0
            });
        let n_i = match &self.cfg.angular {
            AngularSpec::Chain(axes) => axes.iter().map(|a| a.n).collect(),
            AngularSpec::EllOverride(_) => Vec::new(),
        };
        BoundState {
            e,
            n: self.cfg.radial.n,
            n_i,
            ell_prime,
            residual,
            shape,
            chain,
            admissible,
        }
    }
}

/// Convenience one-shot residual evaluation.
pub fn residual_at(cfg: &ProblemConfig, e: f64) -> Result<f64> {
    Solver::new(cfg.clone())?.residual_at(e)
}

/// Convenience one-shot solve.
pub fn solve_bound_states(cfg: &ProblemConfig, scan: &ScanSettings) -> Result<Vec<BoundState>> {
    Solver::new(cfg.clone())?.solve_bound_states(scan)
}

fn thread_budget() -> usize {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Relativistic quantum number `K` of a spin doublet:
/// `K = -l - 1` for `j = l + 1/2`, `K = l` for `j = l - 1/2`.
/// `j` is passed doubled to stay integral.
pub fn kappa_of(ell: u32, j_times_2: u32) -> Result<i32> {
    let l = ell as i64;
    let j2 = j_times_2 as i64;
    if j2 == 2 * l + 1 {
        Ok((-l - 1) as i32)
    } else if j2 == 2 * l - 1 && l >= 1 {
        Ok(l as i32)
    } else {
        Err(Error::InvalidParameter {
            name: "j",
            value: j_times_2 as f64 / 2.0,
            reason: "j must equal l + 1/2 or l - 1/2 (and be positive)",
        })
    }
}

/// A spin-doublet member.
#[derive(Debug, Clone, Copy)]
pub struct DoubletSpec {
    pub ell: u32,
    pub j_times_2: u32,
    pub kappa: i32,
}

impl DoubletSpec {
    pub fn new(ell: u32, j_times_2: u32) -> Result<Self> {
        Ok(DoubletSpec {
            ell,
            j_times_2,
            kappa: kappa_of(ell, j_times_2)?,
        })
    }
}

/// Energies of both doublet members `(j = l + 1/2, j = l - 1/2)` for a
/// configuration with the non-central potentials off. Both `K`
/// assignments satisfy `K(K+1) = l(l+1)`, so each member is solved from
/// its own `K` independently; equality of the two results is the
/// degeneracy statement. Returns the lowest state of each solve.
pub fn doublet_energies(ell: u32, n: u32, base: &ProblemConfig) -> Result<(f64, f64)> {
    let mut energies = [f64::NAN; 2];
    for (slot, j2) in [(0usize, 2 * ell + 1), (1usize, 2 * ell - 1)] {
        let kappa = kappa_of(ell, j2)?;
        // l'(l' + 1) = K(K + 1), nonnegative root.
        let kk1 = (kappa as f64) * (kappa as f64 + 1.0);
        let ell_eff = (-1.0 + (1.0 + 4.0 * kk1).sqrt()) / 2.0;
        let mut cfg = base.clone();
        cfg.radial.n = n;
        cfg.angular = AngularSpec::EllOverride(ell_eff);
        let solver = Solver::new(cfg)?;
        let states = solver.solve_bound_states(&ScanSettings::default_for_mass(base.radial.m))?;
        let lowest = states.first().ok_or(Error::NoBoundState)?;
        energies[slot] = lowest.e;
    }
    Ok((energies[0], energies[1]))
}
