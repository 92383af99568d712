//! Exact solvers for MaxCut and MIS by exhaustive enumeration.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::{Error, Problem, Result};

/// Enumeration capacity: 2^26 basis states is the practical ceiling.
pub const MAX_EXACT_NODES: usize = 26;

/// Exact optimum plus every optimal configuration.
///
/// Configurations are basis indices: bit i of the index is the value
/// assigned to vertex i. Both polarity twins of a MaxCut optimum are kept;
/// downstream "probability of optimal" sums over all stored optima.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverResult {
    pub problem: Problem,
    pub optimum: f64,
    pub optimal_configs: Vec<u64>,
}

impl SolverResult {
    pub fn is_optimal_config(&self, bits: u64) -> bool {
        self.optimal_configs.binary_search(&bits).is_ok()
    }
}

fn check_capacity(g: &Graph) -> Result<()> {
    if g.n > MAX_EXACT_NODES {
        return Err(Error::Capacity(format!(
            "exact enumeration supports n <= {MAX_EXACT_NODES}, got n = {}",
            g.n
        )));
    }
    Ok(())
}

/// Maximum independent set by enumeration: optimum is the largest
/// independent-set size; all maximum independent sets are returned.
pub fn solve_mis_exact(g: &Graph) -> Result<SolverResult> {
    check_capacity(g)?;
    let masks = g.neighbor_masks();
    let mut best = 0u32;
    let mut configs = Vec::new();
    for bits in 0u64..(1u64 << g.n) {
        if !independent(&masks, bits) {
            continue;
        }
        let size = bits.count_ones();
        if size > best {
            best = size;
            configs.clear();
            configs.push(bits);
        } else if size == best {
            configs.push(bits);
        }
    }
    Ok(SolverResult {
        problem: Problem::Mis,
        optimum: f64::from(best),
        optimal_configs: configs,
    })
}

fn independent(masks: &[u64], bits: u64) -> bool {
    let mut m = bits;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        if masks[v] & bits != 0 {
            return false;
        }
        m &= m - 1;
    }
    true
}

/// MaxCut by enumeration: optimum is the maximum cut edge count; all
/// maximizing bitstrings are returned (polarity twins included).
pub fn solve_maxcut_exact(g: &Graph) -> Result<SolverResult> {
    check_capacity(g)?;
    let mut best = 0usize;
    let mut configs = Vec::new();
    for bits in 0u64..(1u64 << g.n) {
        let cut = g.cut_count(bits);
        if cut > best {
            best = cut;
            configs.clear();
            configs.push(bits);
        } else if cut == best {
            configs.push(bits);
        }
    }
    Ok(SolverResult {
        problem: Problem::MaxCut,
        optimum: best as f64,
        optimal_configs: configs,
    })
}
