//! Seeded generators for the four random graph families.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Family, FamilyParams, Graph};
use crate::{Error, Result};

/// Generate a graph from one of the four families.
///
/// Deterministic for fixed `(params, n, seed)`. If a draw comes out edgeless
/// (possible for ER and WS), the attempt is rejected and regenerated with
/// `seed + 1`, since a MaxCut optimum of zero would make approximation
/// ratios undefined.
pub fn generate_graph(params: FamilyParams, n: usize, seed: u64) -> Result<Graph> {
    validate(params, n)?;
    let mut attempt_seed = seed;
    loop {
        let edges = match params {
            FamilyParams::Er { p } => erdos_renyi(n, p, attempt_seed),
            FamilyParams::Rr { d } => random_regular(n, d, attempt_seed),
            FamilyParams::Ws { k, p_rewire } => watts_strogatz(n, k, p_rewire, attempt_seed),
            FamilyParams::Ba { m } => barabasi_albert(n, m, attempt_seed),
        };
        if !edges.is_empty() {
            let family = params.family();
            let id = format!("{family}-n{n}-s{attempt_seed}");
            return Graph::new(id, n, edges, family, params, attempt_seed);
        }
        attempt_seed = attempt_seed.wrapping_add(1);
    }
}

fn validate(params: FamilyParams, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParams("need n >= 2".into()));
    }
    match params {
        FamilyParams::Er { p } => {
            if !(p > 0.0 && p <= 1.0) {
                return Err(Error::InvalidParams(format!("ER p={p} outside (0, 1]")));
            }
        }
        FamilyParams::Rr { d } => {
            if d == 0 || d >= n {
                return Err(Error::InvalidParams(format!(
                    "RR degree d={d} needs 1 <= d < n={n}"
                )));
            }
            if n * d % 2 != 0 {
                return Err(Error::InvalidParams(format!(
                    "RR requires n*d even, got n={n} d={d}"
                )));
            }
        }
        FamilyParams::Ws { k, .. } => {
            if k < 2 || k >= n {
                return Err(Error::InvalidParams(format!(
                    "WS neighbor count k={k} needs 2 <= k < n={n}"
                )));
            }
        }
        FamilyParams::Ba { m } => {
            if m == 0 || m >= n {
                return Err(Error::InvalidParams(format!(
                    "BA attachment m={m} needs 1 <= m < n={n}"
                )));
            }
        }
    }
    Ok(())
}

fn erdos_renyi(n: usize, p: f64, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Random d-regular graph via stub pairing with restarts. Each pass shuffles
/// the unmatched stubs and pairs them off, keeping pairs that form new simple
/// edges; a pass with no progress restarts the whole attempt unless some
/// valid pair still exists. Converges even for dense cases such as d = n-1.
fn random_regular(n: usize, d: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
        let mut edge_set: BTreeSet<(usize, usize)> = BTreeSet::new();
        while !stubs.is_empty() {
            stubs.shuffle(&mut rng);
            let mut leftover = Vec::new();
            let mut progressed = false;
            for pair in stubs.chunks(2) {
                let (u, v) = (pair[0], pair[1]);
                let e = (u.min(v), u.max(v));
                if u != v && !edge_set.contains(&e) {
                    edge_set.insert(e);
                    progressed = true;
                } else {
                    leftover.push(u);
                    leftover.push(v);
                }
            }
            if !progressed && !pairable(&leftover, &edge_set) {
                continue 'attempt;
            }
            stubs = leftover;
        }
        return edge_set.into_iter().collect();
    }
}

/// True when some pair of remaining stubs can still form a new simple edge.
fn pairable(stubs: &[usize], edges: &BTreeSet<(usize, usize)>) -> bool {
    for (i, &u) in stubs.iter().enumerate() {
        for &v in &stubs[i + 1..] {
            if u != v && !edges.contains(&(u.min(v), u.max(v))) {
                return true;
            }
        }
    }
    stubs.is_empty()
}

/// Watts–Strogatz: ring lattice with floor(k/2) neighbors on each side, then
/// each lattice edge is rewired with probability `p_rewire` to a uniformly
/// random non-adjacent endpoint (skipped when the source node is saturated).
fn watts_strogatz(n: usize, k: usize, p_rewire: f64, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = k / 2;
    let mut edge_set: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 1..=half {
        for u in 0..n {
            let v = (u + j) % n;
            if u != v {
                edge_set.insert((u.min(v), u.max(v)));
            }
        }
    }
    let mut degrees = vec![0usize; n];
    for &(u, v) in &edge_set {
        degrees[u] += 1;
        degrees[v] += 1;
    }
    for j in 1..=half {
        for u in 0..n {
            let v = (u + j) % n;
            let e = (u.min(v), u.max(v));
            if !edge_set.contains(&e) {
                continue; // already rewired away by an earlier pass
            }
            if rng.gen::<f64>() < p_rewire {
                if degrees[u] >= n - 1 {
                    continue;
                }
                let w = loop {
                    let cand = rng.gen_range(0..n);
                    let ce = (u.min(cand), u.max(cand));
                    if cand != u && !edge_set.contains(&ce) {
                        break cand;
                    }
                };
                edge_set.remove(&e);
                degrees[v] -= 1;
                edge_set.insert((u.min(w), u.max(w)));
                degrees[w] += 1;
            }
        }
    }
    edge_set.into_iter().collect()
}

/// Barabási–Albert: m isolated seed nodes, then each new node attaches to m
/// distinct existing nodes sampled proportionally to degree + 1 (the +1
/// smoothing makes the zero-degree seed core reachable).
fn barabasi_albert(n: usize, m: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degrees = vec![0usize; n];
    let mut edges = Vec::with_capacity(m * (n - m));
    for new in m..n {
        let mut chosen: BTreeSet<usize> = BTreeSet::new();
        while chosen.len() < m {
            let total: usize = degrees[..new].iter().map(|d| d + 1).sum();
            let mut draw = rng.gen_range(0..total);
            let mut target = 0;
            for (v, d) in degrees[..new].iter().enumerate() {
                let w = d + 1;
                if draw < w {
                    target = v;
                    break;
                }
                draw -= w;
            }
            chosen.insert(target);
        }
        for &t in &chosen {
            edges.push((t, new));
            degrees[t] += 1;
            degrees[new] += 1;
        }
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rr_example_is_regular() {
        // (RR, d=3, n=8, seed=7) -> 12 edges, all degrees 3
        let g = generate_graph(FamilyParams::Rr { d: 3 }, 8, 7).unwrap();
        assert_eq!(g.num_edges(), 12);
        assert!(g.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn rr_regular_across_seeds_and_dense_case() {
        for seed in 0..20 {
            let g = generate_graph(FamilyParams::Rr { d: 5 }, 10, seed).unwrap();
            assert!(g.degrees().iter().all(|&d| d == 5), "seed {seed}");
        }
        // d = n-1 forces the complete graph; pairing must still terminate.
        let g = generate_graph(FamilyParams::Rr { d: 7 }, 8, 3).unwrap();
        assert_eq!(g.num_edges(), 28);
    }

    #[test]
    fn er_p1_is_complete() {
        let g = generate_graph(FamilyParams::Er { p: 1.0 }, 5, 0).unwrap();
        assert_eq!(g.num_edges(), 10);
    }

    #[test]
    fn ba_example_edge_count_and_connectivity() {
        // |E| = m(n-m); node m attaches to the whole seed core, so the
        // result is connected.
        let g = generate_graph(FamilyParams::Ba { m: 2 }, 8, 3).unwrap();
        assert_eq!(g.num_edges(), 12);
        assert!(is_connected(&g));
        for seed in 0..10 {
            let g = generate_graph(FamilyParams::Ba { m: 3 }, 10, seed).unwrap();
            assert_eq!(g.num_edges(), 3 * 7);
            assert!(is_connected(&g));
        }
    }

    #[test]
    fn ws_keeps_node_count_times_half_k_edges_without_rewiring() {
        let g = generate_graph(
            FamilyParams::Ws {
                k: 3,
                p_rewire: 0.0,
            },
            9,
            1,
        )
        .unwrap();
        // k=3 -> one neighbor per side -> a ring of 9 edges.
        assert_eq!(g.num_edges(), 9);
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn ws_rewiring_preserves_edge_count() {
        for seed in 0..10 {
            let g = generate_graph(
                FamilyParams::Ws {
                    k: 4,
                    p_rewire: 0.5,
                },
                10,
                seed,
            )
            .unwrap();
            assert_eq!(g.num_edges(), 20);
        }
    }

    #[test]
    fn infeasible_params_rejected() {
        assert!(generate_graph(FamilyParams::Rr { d: 3 }, 9, 0).is_err()); // n*d odd
        assert!(generate_graph(FamilyParams::Rr { d: 8 }, 8, 0).is_err()); // d >= n
        assert!(generate_graph(FamilyParams::Ba { m: 8 }, 8, 0).is_err());
        assert!(generate_graph(FamilyParams::Ws { k: 1, p_rewire: 0.1 }, 8, 0).is_err());
        assert!(generate_graph(FamilyParams::Er { p: 0.0 }, 8, 0).is_err());
    }

    #[test]
    fn generation_is_deterministic() {
        let a = generate_graph(FamilyParams::Er { p: 0.4 }, 10, 99).unwrap();
        let b = generate_graph(FamilyParams::Er { p: 0.4 }, 10, 99).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn edgeless_draw_retries_with_next_seed() {
        // Tiny p makes the first draws edgeless with high probability; the
        // generator must still return a graph with at least one edge.
        let g = generate_graph(FamilyParams::Er { p: 1e-9 }, 4, 0).unwrap();
        assert!(g.num_edges() >= 1);
    }

    fn is_connected(g: &Graph) -> bool {
        let adj = g.adjacency();
        let mut seen = vec![false; g.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}
