//! Isomorphism-free generation of small connected graphs.
//!
//! Canonical codes come from an individualization–refinement search: color
//! refinement to an equitable ordered partition, then branching on every
//! vertex of the first non-singleton cell. The code of a graph is the
//! smallest upper-triangle bit string over all leaves of that search tree.
//!
//! Every connected graph has a vertex whose removal leaves it connected, so
//! the connected graphs of order `n` are exactly the canonical forms of
//! "order `n - 1` representative plus one vertex joined to a nonempty subset".
//! The same holds within trees (add a leaf) and within bipartite graphs (join
//! the new vertex to a subset of one color class).

use std::collections::HashSet;

use crate::graph::{bipartition, bits, Graph};

/// Largest order whose upper triangle fits in a `u64` code.
pub const MAX_CANON_ORDER: usize = 11;

type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().map(|&v| 1u64 << v).sum()).collect();
        let mut next: Partition = Vec::with_capacity(g.order());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (g.neighbor_mask(v) & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn code_of_labeling(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

fn search(g: &Graph, cells: Partition, best: &mut u64) {
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            *best = (*best).min(code_of_labeling(g, &order));
        }
        Some(k) => {
            for &v in &cells[k] {
                let mut branch = Vec::with_capacity(cells.len() + 1);
                branch.extend_from_slice(&cells[..k]);
                branch.push(vec![v]);
                branch.push(cells[k].iter().copied().filter(|&u| u != v).collect());
                branch.extend_from_slice(&cells[k + 1..]);
                search(g, refine(g, branch), best);
            }
        }
    }
}

/// Isomorphism-invariant code; two graphs of the same order are isomorphic
/// iff their codes agree.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(g.order() <= MAX_CANON_ORDER, "canonical codes need order <= {MAX_CANON_ORDER}");
    let mut best = u64::MAX;
    search(g, refine(g, vec![(0..g.order()).collect()]), &mut best);
    best
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if code >> (pairs - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("codes are only built from connected graphs")
}

/// The representative of `g`'s isomorphism class used by the generators.
pub fn canonical_form(g: &Graph) -> Graph {
    graph_from_code(g.order(), canonical_code(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

fn extend(n: usize, parents: &[Graph], subsets: impl Fn(&Graph) -> Vec<u64>) -> Vec<Graph> {
    let mut seen = HashSet::new();
    for p in parents {
        for mask in subsets(p) {
            let mut rows = p.rows().to_vec();
            for v in bits(mask) {
                rows[v] |= 1 << (n - 1);
            }
            rows.push(mask);
            let child = Graph::from_adjacency_rows(rows).expect("joining a vertex keeps connectivity");
            seen.insert(canonical_code(&child));
        }
    }
    let mut codes: Vec<u64> = seen.into_iter().collect();
    codes.sort_unstable();
    codes.into_iter().map(|c| graph_from_code(n, c)).collect()
}

fn single_vertex() -> Vec<Graph> {
    vec![Graph::from_edges(1, &[]).unwrap()]
}

/// All connected graphs of order `n` up to isomorphism, sorted by code.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_CANON_ORDER).contains(&n));
    let mut level = single_vertex();
    for k in 2..=n {
        level = extend(k, &level, |p| (1..1u64 << p.order()).collect());
    }
    level
}

/// All trees of order `n` up to isomorphism.
pub fn trees(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_CANON_ORDER).contains(&n));
    let mut level = single_vertex();
    for k in 2..=n {
        level = extend(k, &level, |p| (0..p.order()).map(|v| 1u64 << v).collect());
    }
    level
}

/// All connected bipartite graphs of order `n` up to isomorphism.
pub fn connected_bipartite_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_CANON_ORDER).contains(&n));
    let mut level = single_vertex();
    for k in 2..=n {
        level = extend(k, &level, |p| {
            let parts = bipartition(p).expect("parents are bipartite");
            let mut out = Vec::new();
            for part in parts {
                let vs: Vec<usize> = part;
                for sub in 1..1u64 << vs.len() {
                    out.push(bits(sub).map(|i| 1u64 << vs[i]).sum());
                }
            }
            out
        });
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_graph, GraphKind};

    #[test]
    fn class_counts() {
        let connected: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
        let tree_counts: Vec<usize> = (1..=10).map(|n| trees(n).len()).collect();
        assert_eq!(tree_counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        let bip: Vec<usize> = (1..=8).map(|n| connected_bipartite_graphs(n).len()).collect();
        assert_eq!(bip, vec![1, 1, 1, 3, 5, 17, 44, 182]);
    }

    #[test]
    fn codes_are_relabeling_invariant() {
        let g = generate_graph(GraphKind::Grid, &[2, 4], None).unwrap();
        let perm = [3, 7, 0, 5, 1, 6, 2, 4];
        let h = g.relabel(&perm);
        assert_ne!(g, h);
        assert!(is_isomorphic(&g, &h));
        assert_eq!(canonical_form(&g), canonical_form(&h));
        let c8 = generate_graph(GraphKind::Cycle, &[8], None).unwrap();
        assert!(!is_isomorphic(&g, &c8));
    }

    #[test]
    fn canonical_form_is_isomorphic_to_input() {
        for g in connected_graphs(5) {
            let relabeled = g.relabel(&[4, 2, 0, 1, 3]);
            assert_eq!(canonical_form(&relabeled), g);
        }
    }
}
