//! The neighbourhood corona `G1 ⋆ G2`.
//!
//! Vertex layout: base vertex `v_i` of `G1` has id `i`; vertex `u_j` of the
//! `i`-th copy of `G2` has id `n1 + i*n2 + j`. Base vertex `v_a` is joined to
//! every vertex of copy `b` exactly when `(v_a, v_b)` is an edge of `G1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Role of a corona vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "lowercase")]
pub enum Role {
    /// Base vertex `v_i`.
    Base { base: usize },
    /// Vertex `u_j` in the copy of `G2` attached to `v_i`.
    Copy { copy: usize, vertex: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoronaIndex {
    pub n1: usize,
    pub n2: usize,
}

impl CoronaIndex {
    pub fn new(n1: usize, n2: usize) -> Self {
        CoronaIndex { n1, n2 }
    }

    pub fn total(&self) -> usize {
        self.n1 + self.n1 * self.n2
    }

    pub fn base(&self, i: usize) -> usize {
        debug_assert!(i < self.n1);
        i
    }

    pub fn copy(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n1 && j < self.n2);
        self.n1 + i * self.n2 + j
    }

    pub fn is_base(&self, id: usize) -> bool {
        id < self.n1
    }

    pub fn role_of(&self, id: usize) -> Result<Role> {
        if id >= self.total() {
            return Err(Error::VertexOutOfRange {
                vertex: id,
                n: self.total(),
            });
        }
        Ok(if id < self.n1 {
            Role::Base { base: id }
        } else {
            let off = id - self.n1;
            Role::Copy {
                copy: off / self.n2,
                vertex: off % self.n2,
            }
        })
    }

    /// Ids of the `i`-th copy, in `u_0..u_{n2-1}` order.
    pub fn copy_ids(&self, i: usize) -> std::ops::Range<usize> {
        let start = self.n1 + i * self.n2;
        start..start + self.n2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoronaGraph {
    pub graph: Graph,
    pub index: CoronaIndex,
    pub g1: Graph,
    pub g2: Graph,
}

pub fn neighbourhood_corona(g1: &Graph, g2: &Graph) -> Result<CoronaGraph> {
    if g1.order() == 0 || g2.order() == 0 {
        return Err(Error::InvalidArgument(
            "corona factors must be non-empty".into(),
        ));
    }
    let index = CoronaIndex::new(g1.order(), g2.order());
    let mut edges = Vec::with_capacity(g1.size() * (2 * index.n2 + 1) + index.n1 * g2.size());
    edges.extend_from_slice(g1.edges());
    for i in 0..index.n1 {
        edges.extend(
            g2.edges()
                .iter()
                .map(|&(a, b)| (index.copy(i, a), index.copy(i, b))),
        );
    }
    for &(a, b) in g1.edges() {
        edges.extend(index.copy_ids(b).map(|u| (a, u)));
        edges.extend(index.copy_ids(a).map(|u| (b, u)));
    }
    let graph = Graph::new(index.total(), edges)?;
    Ok(CoronaGraph {
        graph,
        index,
        g1: g1.clone(),
        g2: g2.clone(),
    })
}

/// `G ⋆ K1`.
pub fn splitting_graph(g: &Graph) -> Result<CoronaGraph> {
    neighbourhood_corona(g, &Graph::new(1, [])?)
}

/// Degree of a corona vertex predicted from the factors:
/// `(n2 + 1) d1(v_i)` for base vertices, `d2(u_j) + d1(v_i)` for copy vertices.
pub fn predicted_degree(g1: &Graph, g2: &Graph, role: Role) -> usize {
    match role {
        Role::Base { base } => (g2.order() + 1) * g1.neighbors(base).len(),
        Role::Copy { copy, vertex } => g2.neighbors(vertex).len() + g1.neighbors(copy).len(),
    }
}

/// Predicted `(vertex count, edge count)`: `n1 + n1 n2` and `m1 (2 n2 + 1) + n1 m2`.
pub fn predicted_counts(g1: &Graph, g2: &Graph) -> (usize, usize) {
    let (n1, n2) = (g1.order(), g2.order());
    (n1 + n1 * n2, g1.size() * (2 * n2 + 1) + n1 * g2.size())
}

impl CoronaGraph {
    /// Lists every discrepancy between the constructed graph and the count
    /// and degree formulas. Empty on success.
    pub fn formula_mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        let (n, m) = predicted_counts(&self.g1, &self.g2);
        if self.graph.order() != n {
            out.push(format!("vertex count {} != {n}", self.graph.order()));
        }
        if self.graph.size() != m {
            out.push(format!("edge count {} != {m}", self.graph.size()));
        }
        for id in 0..self.graph.order() {
            let role = self.index.role_of(id).expect("id in range");
            let expected = predicted_degree(&self.g1, &self.g2, role);
            let got = self.graph.neighbors(id).len();
            if got != expected {
                out.push(format!(
                    "degree of {id} ({role:?}) is {got}, expected {expected}"
                ));
            }
        }
        out
    }
}
