//! Dense statevector simulation of MaxCut and constrained-MIS QAOA circuits.
//!
//! Basis convention: for index `b`, bit i (little-endian) is the measured
//! value of qubit/vertex i. The MIS mixer is the ordered product of
//! per-vertex partial mixers (ascending vertex index); each partial mixer is
//! an X rotation on its vertex controlled on all neighbors being |0>, which
//! keeps the independent-set subspace invariant when starting from |0...0>.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graphs::Graph;
use crate::{Error, Problem, Result};

/// Dense simulation capacity; states store 2^n amplitudes.
pub const MAX_QUBITS: usize = 26;

/// A QAOA circuit for one problem instance: precomputed diagonal cost
/// eigenvalues, measurement objectives, and neighbor masks.
#[derive(Debug, Clone)]
pub struct CircuitSpec {
    pub problem: Problem,
    pub n_qubits: usize,
    pub depth: usize,
    /// e^{-i gamma * cost_diag[b]} is the phase separator action on basis b.
    /// MaxCut: sum over edges of (z_i z_j - 1)/2 = -cut(b).
    /// MIS: sum over vertices of z_i = n - 2*popcount(b).
    cost_diag: Vec<f64>,
    /// Measured objective per basis state: cut count or independent-set size.
    objective_diag: Vec<f64>,
    neighbor_masks: Vec<u64>,
}

impl CircuitSpec {
    pub fn new(problem: Problem, graph: &Graph, depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(Error::InvalidParams("circuit depth must be >= 1".into()));
        }
        if graph.n > MAX_QUBITS {
            return Err(Error::Capacity(format!(
                "dense simulation supports n <= {MAX_QUBITS}, got {}",
                graph.n
            )));
        }
        let n = graph.n;
        let dim = 1usize << n;
        let mut cost_diag = vec![0.0f64; dim];
        let mut objective_diag = vec![0.0f64; dim];
        match problem {
            Problem::MaxCut => {
                for b in 0..dim as u64 {
                    let cut = graph.cut_count(b) as f64;
                    cost_diag[b as usize] = -cut;
                    objective_diag[b as usize] = cut;
                }
            }
            Problem::Mis => {
                for b in 0..dim as u64 {
                    let ones = b.count_ones() as f64;
                    cost_diag[b as usize] = n as f64 - 2.0 * ones;
                    objective_diag[b as usize] = ones;
                }
            }
        }
        Ok(CircuitSpec {
            problem,
            n_qubits: n,
            depth,
            cost_diag,
            objective_diag,
            neighbor_masks: graph.neighbor_masks(),
        })
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    pub fn objective_of(&self, basis: u64) -> f64 {
        self.objective_diag[basis as usize]
    }
}

/// 2^n complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    pub n_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, basis: u64) -> Complex64 {
        self.amps[basis as usize]
    }

    pub fn probability(&self, basis: u64) -> f64 {
        self.amps[basis as usize].norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Initial state: |+>^n for MaxCut, |0...0> for MIS.
pub fn prepare_initial(spec: &CircuitSpec) -> StateVector {
    let dim = spec.dim();
    let amps = match spec.problem {
        Problem::MaxCut => {
            let a = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
            vec![a; dim]
        }
        Problem::Mis => {
            let mut v = vec![Complex64::new(0.0, 0.0); dim];
            v[0] = Complex64::new(1.0, 0.0);
            v
        }
    };
    StateVector {
        n_qubits: spec.n_qubits,
        amps,
    }
}

/// Phase separator: multiply each basis amplitude by e^{-i gamma c(b)} where
/// c(b) is the diagonal cost eigenvalue. Norm preserving.
pub fn apply_phase_separator(state: &mut StateVector, spec: &CircuitSpec, gamma: f64) {
    for (amp, &c) in state.amps.iter_mut().zip(&spec.cost_diag) {
        *amp *= Complex64::from_polar(1.0, -gamma * c);
    }
}

/// Mixer layer. MaxCut: e^{-i beta X} on every qubit. MIS: per-vertex
/// partial mixers in ascending vertex order, each an X rotation controlled
/// on all neighbors being |0>.
pub fn apply_mixer(state: &mut StateVector, spec: &CircuitSpec, beta: f64) {
    match spec.problem {
        Problem::MaxCut => {
            for q in 0..spec.n_qubits {
                rotate_x_all(state, q, beta);
            }
        }
        Problem::Mis => {
            for v in 0..spec.n_qubits {
                rotate_x_controlled(state, v, spec.neighbor_masks[v], beta);
            }
        }
    }
}

/// e^{-i beta X} on qubit q: pairs (b, b | 1<<q) mix with cos/-i sin.
fn rotate_x_all(state: &mut StateVector, q: usize, beta: f64) {
    let (c, s) = (beta.cos(), beta.sin());
    let mis = Complex64::new(0.0, -s);
    let bit = 1usize << q;
    let dim = state.amps.len();
    let mut base = 0usize;
    while base < dim {
        for lo in base..base + bit {
            let hi = lo | bit;
            let a0 = state.amps[lo];
            let a1 = state.amps[hi];
            state.amps[lo] = c * a0 + mis * a1;
            state.amps[hi] = mis * a0 + c * a1;
        }
        base += bit << 1;
    }
}

/// Partial mixer for vertex v: rotate the (b, b | 1<<v) pair only when every
/// neighbor bit of v in b is zero.
fn rotate_x_controlled(state: &mut StateVector, v: usize, neighbors: u64, beta: f64) {
    let (c, s) = (beta.cos(), beta.sin());
    let mis = Complex64::new(0.0, -s);
    let bit = 1usize << v;
    let dim = state.amps.len();
    let mut base = 0usize;
    while base < dim {
        for lo in base..base + bit {
            if lo as u64 & neighbors != 0 {
                continue;
            }
            let hi = lo | bit;
            let a0 = state.amps[lo];
            let a1 = state.amps[hi];
            state.amps[lo] = c * a0 + mis * a1;
            state.amps[hi] = mis * a0 + c * a1;
        }
        base += bit << 1;
    }
}

/// Run the full circuit: initial state, then (separator, mixer) x depth.
pub fn run_circuit(spec: &CircuitSpec, gammas: &[f64], betas: &[f64]) -> Result<StateVector> {
    if gammas.len() != spec.depth || betas.len() != spec.depth {
        return Err(Error::InvalidParams(format!(
            "expected {} gammas and betas, got {} and {}",
            spec.depth,
            gammas.len(),
            betas.len()
        )));
    }
    let mut state = prepare_initial(spec);
    for layer in 0..spec.depth {
        apply_phase_separator(&mut state, spec, gammas[layer]);
        apply_mixer(&mut state, spec, betas[layer]);
    }
    Ok(state)
}

/// Exact expectation of the measured objective:
/// sum over b of |amp(b)|^2 * objective(b).
pub fn expectation(state: &StateVector, spec: &CircuitSpec) -> f64 {
    state
        .amps
        .iter()
        .zip(&spec.objective_diag)
        .map(|(a, &obj)| a.norm_sqr() * obj)
        .sum()
}

/// Measurement outcomes: shot counts per basis index.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementDistribution {
    pub counts: BTreeMap<u64, u64>,
    pub shots: u64,
}

impl MeasurementDistribution {
    /// Mean objective over the sampled bitstrings.
    pub fn mean_objective(&self, spec: &CircuitSpec) -> f64 {
        let total: f64 = self
            .counts
            .iter()
            .map(|(&b, &c)| spec.objective_of(b) * c as f64)
            .sum();
        total / self.shots as f64
    }

    /// Fraction of shots landing on any of the given configurations.
    pub fn hit_fraction(&self, configs: &[u64]) -> f64 {
        let hits: u64 = configs
            .iter()
            .filter_map(|b| self.counts.get(b))
            .sum();
        hits as f64 / self.shots as f64
    }
}

/// Draw `shots` i.i.d. samples from |amp|^2. Deterministic given the seed.
pub fn sample(state: &StateVector, shots: u64, seed: u64) -> MeasurementDistribution {
    assert!(shots >= 1, "need at least one shot");
    let mut cumulative = Vec::with_capacity(state.amps.len());
    let mut acc = 0.0f64;
    for a in &state.amps {
        acc += a.norm_sqr();
        cumulative.push(acc);
    }
    let total = acc;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for _ in 0..shots {
        let u = rng.gen::<f64>() * total;
        let idx = cumulative.partition_point(|&c| c <= u).min(cumulative.len() - 1);
        *counts.entry(idx as u64).or_insert(0) += 1;
    }
    MeasurementDistribution { counts, shots }
}

/// Text dump of amplitudes as "index re im" lines, for oracle diffing.
pub fn dump_amplitudes(state: &StateVector) -> String {
    let mut out = String::new();
    for (idx, a) in state.amps.iter().enumerate() {
        writeln!(out, "{idx} {re:.17e} {im:.17e}", re = a.re, im = a.im).unwrap();
    }
    out
}
