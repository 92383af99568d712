//! Node-level structural features used as GNN inputs.

use std::collections::VecDeque;

use super::Graph;

/// Six features per node, row order = node order:
/// `[degree, clustering coefficient, k-core number, betweenness (normalized),
/// PageRank, triangle count]`.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeFeatureMatrix {
    pub rows: Vec<[f64; 6]>,
}

pub const NODE_FEATURE_DIM: usize = 6;

const PAGERANK_DAMPING: f64 = 0.85;
const PAGERANK_TOL: f64 = 1e-10;

/// Compute the feature matrix. Permutation-equivariant: relabeling the
/// graph's nodes permutes the rows.
pub fn compute_node_features(g: &Graph) -> NodeFeatureMatrix {
    let adj = g.adjacency();
    let deg = g.degrees();
    let tri = triangle_counts(g);
    let core = core_numbers(g);
    let btw = betweenness_normalized(g, &adj);
    let pr = pagerank(g, &adj, PAGERANK_DAMPING, PAGERANK_TOL);

    let rows = (0..g.n)
        .map(|v| {
            let d = deg[v] as f64;
            let clustering = if deg[v] >= 2 {
                2.0 * tri[v] as f64 / (d * (d - 1.0))
            } else {
                0.0
            };
            [d, clustering, core[v] as f64, btw[v], pr[v], tri[v] as f64]
        })
        .collect();
    NodeFeatureMatrix { rows }
}

fn triangle_counts(g: &Graph) -> Vec<usize> {
    let masks = g.neighbor_masks();
    (0..g.n)
        .map(|v| {
            let mut count = 0u32;
            let mut m = masks[v];
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                count += (masks[u] & masks[v]).count_ones();
                m &= m - 1;
            }
            (count / 2) as usize
        })
        .collect()
}

/// Core numbers by iterative peeling of minimum-degree nodes.
fn core_numbers(g: &Graph) -> Vec<usize> {
    let adj = g.adjacency();
    let mut deg = g.degrees();
    let mut core = vec![0usize; g.n];
    let mut removed = vec![false; g.n];
    let mut k = 0usize;
    for _ in 0..g.n {
        let v = (0..g.n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| deg[v])
            .expect("at least one node remains");
        k = k.max(deg[v]);
        core[v] = k;
        removed[v] = true;
        for &u in &adj[v] {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    core
}

/// Brandes betweenness for unweighted graphs, normalized by
/// 2 / ((n-1)(n-2)) so values land in [0, 1].
fn betweenness_normalized(g: &Graph, adj: &[Vec<usize>]) -> Vec<f64> {
    let n = g.n;
    let mut bc = vec![0.0f64; n];
    if n <= 2 {
        return bc;
    }
    for s in 0..n {
        let mut stack = Vec::with_capacity(n);
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut sigma = vec![0.0f64; n];
        let mut dist = vec![-1i64; n];
        sigma[s] = 1.0;
        dist[s] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &w in &adj[v] {
                if dist[w] < 0 {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        let mut delta = vec![0.0f64; n];
        while let Some(w) = stack.pop() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                bc[w] += delta[w];
            }
        }
    }
    // The accumulation above visits each unordered pair twice, so the total
    // scale is 1 / ((n-1)(n-2)), i.e. 2/((n-1)(n-2)) on single-counted pairs.
    let scale = 1.0 / (((n - 1) * (n - 2)) as f64);
    bc.iter().map(|&b| b * scale).collect()
}

/// Power-iteration PageRank with uniform teleport and uniform redistribution
/// of dangling (isolated-node) mass.
fn pagerank(g: &Graph, adj: &[Vec<usize>], damping: f64, tol: f64) -> Vec<f64> {
    let n = g.n;
    let nf = n as f64;
    let deg = g.degrees();
    let mut x = vec![1.0 / nf; n];
    for _ in 0..10_000 {
        let dangling: f64 = (0..n).filter(|&v| deg[v] == 0).map(|v| x[v]).sum();
        let mut next = vec![(1.0 - damping) / nf + damping * dangling / nf; n];
        for v in 0..n {
            if deg[v] > 0 {
                let share = damping * x[v] / deg[v] as f64;
                for &u in &adj[v] {
                    next[u] += share;
                }
            }
        }
        let err: f64 = next.iter().zip(&x).map(|(a, b)| (a - b).abs()).sum();
        x = next;
        if err < tol {
            break;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;
    use approx::assert_abs_diff_eq;

    #[test]
    fn k3_rows_match_symmetry() {
        let k3 = Graph::from_edges("k3", 3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let f = compute_node_features(&k3);
        for row in &f.rows {
            assert_abs_diff_eq!(row[0], 2.0);
            assert_abs_diff_eq!(row[1], 1.0);
            assert_abs_diff_eq!(row[2], 2.0);
            assert_abs_diff_eq!(row[3], 0.0);
            assert_abs_diff_eq!(row[4], 1.0 / 3.0, epsilon = 1e-9);
            assert_abs_diff_eq!(row[5], 1.0);
        }
    }

    #[test]
    fn p3_center_betweenness_is_one() {
        let p3 = Graph::from_edges("p3", 3, &[(0, 1), (1, 2)]).unwrap();
        let f = compute_node_features(&p3);
        assert_abs_diff_eq!(f.rows[1][0], 2.0);
        assert_abs_diff_eq!(f.rows[1][1], 0.0);
        assert_abs_diff_eq!(f.rows[1][3], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(f.rows[0][3], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn pagerank_sums_to_one() {
        for seed in 0..5 {
            let g = crate::graphs::generate_graph(
                crate::graphs::FamilyParams::Er { p: 0.3 },
                10,
                seed,
            )
            .unwrap();
            let f = compute_node_features(&g);
            let total: f64 = f.rows.iter().map(|r| r[4]).sum();
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn star_center_pagerank_matches_dense_power_iteration() {
        // Star on 5 nodes: center 0 joined to 1..4.
        let star = Graph::from_edges("s5", 5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let f = compute_node_features(&star);

        // Independent oracle: dense Google-matrix power iteration to 1e-10.
        let n = 5usize;
        let d = 0.85;
        let deg = star.degrees();
        let mut m = vec![vec![0.0f64; n]; n]; // column-stochastic transition
        for &(u, v) in &star.edges {
            m[v][u] = 1.0 / deg[u] as f64;
            m[u][v] = 1.0 / deg[v] as f64;
        }
        let mut x = vec![1.0 / n as f64; n];
        loop {
            let mut next = vec![(1.0 - d) / n as f64; n];
            for (r, row) in m.iter().enumerate() {
                for (c, &mv) in row.iter().enumerate() {
                    next[r] += d * mv * x[c];
                }
            }
            let err: f64 = next.iter().zip(&x).map(|(a, b)| (a - b).abs()).sum();
            x = next;
            if err < 1e-10 {
                break;
            }
        }
        assert_abs_diff_eq!(f.rows[0][4], x[0], epsilon = 1e-8);
        assert!(f.rows[0][4] > f.rows[1][4]);
    }

    #[test]
    fn core_numbers_peel_correctly() {
        // Triangle with a pendant: triangle nodes are 2-core, pendant is 1.
        let g = Graph::from_edges("t", 4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let f = compute_node_features(&g);
        assert_eq!(f.rows[0][2], 2.0);
        assert_eq!(f.rows[1][2], 2.0);
        assert_eq!(f.rows[2][2], 2.0);
        assert_eq!(f.rows[3][2], 1.0);
    }

    #[test]
    fn permutation_equivariance() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for seed in 0..8 {
            let g = crate::graphs::generate_graph(
                crate::graphs::FamilyParams::Er { p: 0.4 },
                9,
                seed,
            )
            .unwrap();
            let mut perm: Vec<usize> = (0..g.n).collect();
            perm.shuffle(&mut rng);
            let gp = g.permuted(&perm).unwrap();
            let f = compute_node_features(&g);
            let fp = compute_node_features(&gp);
            for v in 0..g.n {
                for c in 0..6 {
                    assert_abs_diff_eq!(f.rows[v][c], fp.rows[perm[v]][c], epsilon = 1e-9);
                }
            }
        }
    }
}
