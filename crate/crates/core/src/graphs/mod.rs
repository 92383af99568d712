//! Undirected unweighted graphs: the four random families used for donor and
//! acceptor datasets, node-level features, and exact MaxCut/MIS solvers.

mod features;
mod generate;
mod solvers;

pub use features::{compute_node_features, NodeFeatureMatrix};
pub use generate::generate_graph;
pub use solvers::{solve_maxcut_exact, solve_mis_exact, SolverResult};

use std::collections::BTreeSet;
use std::io::{BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Random graph family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Erdős–Rényi G(n, p).
    Er,
    /// Random d-regular.
    Rr,
    /// Watts–Strogatz small world.
    Ws,
    /// Barabási–Albert preferential attachment.
    Ba,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Family::Er => "er",
            Family::Rr => "rr",
            Family::Ws => "ws",
            Family::Ba => "ba",
        };
        write!(f, "{s}")
    }
}

/// Family-specific generation parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyParams {
    /// Edge probability p in (0, 1].
    Er { p: f64 },
    /// Target degree d (requires n*d even and d < n).
    Rr { d: usize },
    /// Ring neighbor count k and rewiring probability. Each node connects to
    /// floor(k/2) neighbors on each side, so odd k yields effective degree k-1.
    Ws { k: usize, p_rewire: f64 },
    /// Attachment count m for each newly added node (1 <= m < n).
    Ba { m: usize },
}

impl FamilyParams {
    pub fn family(&self) -> Family {
        match self {
            FamilyParams::Er { .. } => Family::Er,
            FamilyParams::Rr { .. } => Family::Rr,
            FamilyParams::Ws { .. } => Family::Ws,
            FamilyParams::Ba { .. } => Family::Ba,
        }
    }
}

/// Undirected, unweighted, simple graph with generation provenance.
///
/// Edges are stored as sorted `(u, v)` pairs with `u < v`; every edge has
/// implicit weight 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Graph {
    pub id: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub family: Family,
    pub gen_params: FamilyParams,
    pub seed: u64,
}

impl Graph {
    /// Build a graph, normalizing edge order and checking invariants:
    /// no self-loops, no duplicates, all endpoints `< n`.
    pub fn new(
        id: impl Into<String>,
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        family: Family,
        gen_params: FamilyParams,
        seed: u64,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("graph needs at least one node".into()));
        }
        if gen_params.family() != family {
            return Err(Error::InvalidParams(format!(
                "gen_params {gen_params:?} do not match family {family}"
            )));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Validation(format!("self-loop at node {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::Validation(format!(
                    "edge ({a},{b}) out of range for n={n}"
                )));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::Validation(format!("duplicate edge {e:?}")));
            }
        }
        Ok(Graph {
            id: id.into(),
            n,
            edges: set.into_iter().collect(),
            family,
            gen_params,
            seed,
        })
    }

    /// Convenience constructor for tests and ad-hoc graphs; family metadata
    /// is filled with an ER placeholder.
    pub fn from_edges(id: impl Into<String>, n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Graph::new(
            id,
            n,
            edges.iter().copied(),
            Family::Er,
            FamilyParams::Er { p: 1.0 },
            0,
        )
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Adjacency lists, sorted neighbors.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Per-node neighbor bitmasks. Requires `n <= 64`.
    pub fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask representation needs n <= 64");
        let mut masks = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        masks
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).is_ok()
    }

    /// Number of edges cut by the bipartition encoded in `bits`
    /// (bit i = side of vertex i).
    pub fn cut_count(&self, bits: u64) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| (bits >> u) & 1 != (bits >> v) & 1)
            .count()
    }

    /// True when the vertex set encoded in `bits` is an independent set.
    pub fn is_independent(&self, bits: u64) -> bool {
        self.edges
            .iter()
            .all(|&&(u, v)| (bits >> u) & 1 == 0 || (bits >> v) & 1 == 0)
    }

    /// Relabel nodes: node `v` becomes `perm[v]`. Used by invariance tests.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParams("permutation length mismatch".into()));
        }
        Graph::new(
            self.id.clone(),
            self.n,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
            self.family,
            self.gen_params,
            self.seed,
        )
    }
}

/// Write a graph bank: one JSON record per line, order-stable.
pub fn write_graph_bank(path: &Path, graphs: &[Graph]) -> Result<()> {
    let mut w = std::io::BufWriter::new(std::fs::File::create(path)?);
    for g in graphs {
        serde_json::to_writer(&mut w, g)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

/// Read a graph bank written by [`write_graph_bank`].
pub fn read_graph_bank(path: &Path) -> Result<Vec<Graph>> {
    let r = std::io::BufReader::new(std::fs::File::open(path)?);
    let mut graphs = Vec::new();
    for line in r.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        graphs.push(serde_json::from_str(&line)?);
    }
    Ok(graphs)
}
