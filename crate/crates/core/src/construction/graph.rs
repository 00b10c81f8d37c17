use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A finite simple graph on vertices `1..=vertex_count`.
///
/// Edges are unordered and stored with set semantics, so listing `{1,2}` twice
/// (or as `{2,1}`) yields a single edge. Loops are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u},{v}}} references a vertex outside 1..={vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self {
            vertex_count,
            edges: set,
        })
    }

    pub fn edgeless(vertex_count: usize) -> Result<Self> {
        Self::new(vertex_count, &[])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_connected(&self) -> bool {
        connected_components(self).len() == 1
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }
}

/// Maximal connected subgraphs, as sorted vertex lists (1-based), ordered by
/// their smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let adj = g.adjacency();
    let mut seen = vec![false; g.vertex_count + 1];
    let mut components = Vec::new();
    for start in 1..=g.vertex_count {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// Every labelled simple graph on `vertex_count` vertices, in order of the
/// bitmask over the lexicographically ordered vertex pairs.
pub fn all_graphs(vertex_count: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=vertex_count)
        .flat_map(|u| ((u + 1)..=vertex_count).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 20, "too many vertices to enumerate all graphs");
    (0u32..(1 << pairs.len()))
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect();
            Graph::new(vertex_count, &edges).expect("enumerated pairs are valid")
        })
        .collect()
}
