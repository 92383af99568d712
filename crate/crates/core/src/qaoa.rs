//! Objective evaluation, finite-difference gradients, and Adam-based
//! parameter optimization with multistart and short warm-start refinement.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::simulator::{expectation, run_circuit, CircuitSpec};
use crate::util::derive_seed;
use crate::{Error, Result};

/// Per-layer (gamma, beta) angles for a depth-p circuit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamSet {
    pub gammas: Vec<f64>,
    pub betas: Vec<f64>,
}

impl ParamSet {
    pub fn new(gammas: Vec<f64>, betas: Vec<f64>) -> Result<Self> {
        if gammas.len() != betas.len() {
            return Err(Error::InvalidParams(format!(
                "gamma/beta length mismatch: {} vs {}",
                gammas.len(),
                betas.len()
            )));
        }
        if gammas.iter().chain(&betas).any(|v| !v.is_finite()) {
            return Err(Error::InvalidParams("non-finite angle".into()));
        }
        Ok(ParamSet { gammas, betas })
    }

    pub fn zeros(depth: usize) -> Self {
        ParamSet {
            gammas: vec![0.0; depth],
            betas: vec![0.0; depth],
        }
    }

    pub fn depth(&self) -> usize {
        self.gammas.len()
    }

    /// Flatten as [gamma_1..gamma_p, beta_1..beta_p].
    pub fn to_flat(&self) -> Vec<f64> {
        let mut v = self.gammas.clone();
        v.extend_from_slice(&self.betas);
        v
    }

    pub fn from_flat(flat: &[f64]) -> Self {
        let p = flat.len() / 2;
        ParamSet {
            gammas: flat[..p].to_vec(),
            betas: flat[p..].to_vec(),
        }
    }
}

/// Optimizer settings. Step count and tolerance follow the donor training
/// protocol; the Adam step size is a fixed artifact choice.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptConfig {
    pub max_steps: usize,
    pub tol: f64,
    pub step_size: f64,
    pub seed: u64,
}

impl Default for OptConfig {
    fn default() -> Self {
        OptConfig {
            max_steps: 200,
            tol: 1e-6,
            step_size: 0.05,
            seed: 0,
        }
    }
}

/// One optimization run: objective after every step plus the final state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptTrace {
    pub objective_per_step: Vec<f64>,
    pub final_params: ParamSet,
    pub final_objective: f64,
    pub steps_taken: usize,
    pub converged: bool,
}

/// Finite-difference step for gradients; central differences are used
/// because the projector-generated MIS partial mixers do not admit a clean
/// parameter-shift rule.
pub const GRADIENT_STEP: f64 = 1e-3;

const ADAM_BETA1: f64 = 0.9;
const ADAM_BETA2: f64 = 0.999;
const ADAM_EPS: f64 = 1e-8;

/// Exact statevector expectation of the problem objective under the circuit.
pub fn objective(spec: &CircuitSpec, params: &ParamSet) -> Result<f64> {
    let state = run_circuit(spec, &params.gammas, &params.betas)?;
    Ok(expectation(&state, spec))
}

/// Central finite-difference gradient, ordered [d/dgamma.., d/dbeta..].
pub fn gradient(spec: &CircuitSpec, params: &ParamSet, h: f64) -> Result<Vec<f64>> {
    if h <= 0.0 {
        return Err(Error::InvalidParams("gradient step h must be > 0".into()));
    }
    let flat = params.to_flat();
    let mut grad = Vec::with_capacity(flat.len());
    for i in 0..flat.len() {
        let mut plus = flat.clone();
        let mut minus = flat.clone();
        plus[i] += h;
        minus[i] -= h;
        let fp = objective(spec, &ParamSet::from_flat(&plus))?;
        let fm = objective(spec, &ParamSet::from_flat(&minus))?;
        grad.push((fp - fm) / (2.0 * h));
    }
    Ok(grad)
}

/// Adam ascent on the objective. Stops when the absolute objective change
/// between consecutive steps drops below `tol` (if enabled) or at
/// `max_steps`. The trace records the objective before any step and after
/// every step, so its length is `steps_taken + 1`.
pub fn optimize(spec: &CircuitSpec, init: &ParamSet, cfg: &OptConfig) -> Result<OptTrace> {
    optimize_inner(spec, init, cfg, true)
}

fn optimize_inner(
    spec: &CircuitSpec,
    init: &ParamSet,
    cfg: &OptConfig,
    use_tol: bool,
) -> Result<OptTrace> {
    if cfg.max_steps == 0 {
        return Err(Error::InvalidParams("max_steps must be >= 1".into()));
    }
    if init.depth() != spec.depth {
        return Err(Error::InvalidParams(format!(
            "param depth {} does not match circuit depth {}",
            init.depth(),
            spec.depth
        )));
    }
    let mut theta = init.to_flat();
    let mut m = vec![0.0f64; theta.len()];
    let mut v = vec![0.0f64; theta.len()];
    let mut trace = Vec::with_capacity(cfg.max_steps + 1);
    let mut current = objective(spec, init)?;
    trace.push(current);
    let mut steps_taken = 0;
    let mut converged = false;

    for step in 1..=cfg.max_steps {
        let grad = gradient(spec, &ParamSet::from_flat(&theta), GRADIENT_STEP)?;
        let t = step as f64;
        for i in 0..theta.len() {
            m[i] = ADAM_BETA1 * m[i] + (1.0 - ADAM_BETA1) * grad[i];
            v[i] = ADAM_BETA2 * v[i] + (1.0 - ADAM_BETA2) * grad[i] * grad[i];
            let m_hat = m[i] / (1.0 - ADAM_BETA1.powf(t));
            let v_hat = v[i] / (1.0 - ADAM_BETA2.powf(t));
            theta[i] += cfg.step_size * m_hat / (v_hat.sqrt() + ADAM_EPS);
        }
        let next = objective(spec, &ParamSet::from_flat(&theta))?;
        if !next.is_finite() {
            let partial = OptTrace {
                objective_per_step: trace.clone(),
                final_params: ParamSet::from_flat(&theta),
                final_objective: current,
                steps_taken,
                converged: false,
            };
            return Err(Error::Numerical {
                message: format!("objective became non-finite at step {step}"),
                trace: Some(Box::new(partial)),
            });
        }
        trace.push(next);
        steps_taken = step;
        let delta = (next - current).abs();
        current = next;
        if use_tol && delta < cfg.tol {
            converged = true;
            break;
        }
    }

    Ok(OptTrace {
        final_params: ParamSet::from_flat(&theta),
        final_objective: current,
        steps_taken,
        converged,
        objective_per_step: trace,
    })
}

/// Initial angles: gamma ~ U(-pi, pi), beta ~ U(-pi/2, pi/2) per layer.
pub fn random_params(depth: usize, seed: u64) -> ParamSet {
    use std::f64::consts::{FRAC_PI_2, PI};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gammas = (0..depth).map(|_| rng.gen_range(-PI..PI)).collect();
    let betas = (0..depth)
        .map(|_| rng.gen_range(-FRAC_PI_2..FRAC_PI_2))
        .collect();
    ParamSet { gammas, betas }
}

/// Independent optimize runs from `n_starts` random initializations, with
/// per-start seeds derived from the base seed so start sets nest.
pub fn multistart(spec: &CircuitSpec, n_starts: usize, cfg: &OptConfig) -> Result<Vec<OptTrace>> {
    if n_starts == 0 {
        return Err(Error::InvalidParams("n_starts must be >= 1".into()));
    }
    (0..n_starts)
        .map(|start| {
            let init = random_params(spec.depth, derive_seed(cfg.seed, "start", start as u64));
            optimize(spec, &init, cfg)
        })
        .collect()
}

/// Short refinement from a given initialization: exactly `steps` Adam steps
/// with the convergence test disabled.
pub fn warm_start(spec: &CircuitSpec, init: &ParamSet, steps: usize) -> Result<OptTrace> {
    if steps == 0 {
        return Err(Error::InvalidParams("warm start needs steps >= 1".into()));
    }
    let cfg = OptConfig {
        max_steps: steps,
        ..OptConfig::default()
    };
    optimize_inner(spec, init, &cfg, false)
}
