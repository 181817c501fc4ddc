//! Simple undirected graphs, permutations of their vertex sets and labelings.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Edges are kept in canonical order: each pair has the smaller endpoint
/// first and the list is sorted lexicographically. Edge indices used by
/// [`EdgeLabeling`] refer to positions in that list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    words: usize,
    matrix: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge sequence. Duplicate pairs (in either
    /// orientation) collapse into one edge.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let words = n.div_ceil(64).max(1);
        let mut matrix = vec![0u64; n * words];
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &set {
            adjacency[u].push(v);
            adjacency[v].push(u);
            matrix[u * words + v / 64] |= 1 << (v % 64);
            matrix[v * words + u / 64] |= 1 << (u % 64);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adjacency,
            edges: set.into_iter().collect(),
            words,
            matrix,
        })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbour list of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.matrix[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Position of `(u, v)` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_regular(&self) -> bool {
        let mut degrees = self.adjacency.iter().map(Vec::len);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The graph with edge set `{(p(u), p(v))}`.
    pub fn apply_permutation(&self, p: &Permutation) -> Result<Graph> {
        self.check_len(p)?;
        Graph::new(
            self.n,
            self.edges.iter().map(|&(u, v)| (p.apply(u), p.apply(v))),
        )
    }

    /// True iff `p` preserves adjacency. Since `p` is a bijection and the edge
    /// count is finite, this also preserves non-adjacency.
    pub fn is_automorphism(&self, p: &Permutation) -> Result<bool> {
        self.check_len(p)?;
        Ok(self.preserves_edges(p.images()))
    }

    /// Adjacency test on raw images; `images` must be a bijection of length n.
    pub(crate) fn preserves_edges(&self, images: &[u32]) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| self.has_edge(images[u] as usize, images[v] as usize))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    fn check_len(&self, p: &Permutation) -> Result<()> {
        if p.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: p.len(),
            });
        }
        Ok(())
    }
}

/// A bijection on `0..n`, stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    image: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &w in &images {
            if w >= n || seen[w] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[w] = true;
        }
        Ok(Permutation {
            image: images.into_iter().map(|w| w as u32).collect(),
        })
    }

    /// Transposition of `a` and `b` on `0..n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        if a >= n || b >= n {
            return Err(Error::VertexOutOfRange {
                vertex: a.max(b),
                n,
            });
        }
        images.swap(a, b);
        Permutation::from_images(images)
    }

    pub(crate) fn from_raw(image: Vec<u32>) -> Self {
        debug_assert!(
            Permutation::from_images(image.iter().map(|&w| w as usize).collect()).is_ok()
        );
        Permutation { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &w)| i == w as usize)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Permutation {
            image: other
                .image
                .iter()
                .map(|&w| self.image[w as usize])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0u32; self.len()];
        for (i, &w) in self.image.iter().enumerate() {
            image[w as usize] = i as u32;
        }
        Permutation { image }
    }

    /// Points moved by the permutation, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.apply(i) != i).collect()
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.apply(start);
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.apply(v);
            }
            out.push(cycle);
        }
        out
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(image: Vec<u32>) -> Result<Self> {
        Permutation::from_images(image.into_iter().map(|w| w as usize).collect())
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.image
    }
}

/// Cycle notation, e.g. `(0 2)(1 3)`; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self)
    }
}

fn check_labels(labels: &[u32]) -> Result<()> {
    if let Some(pos) = labels.iter().position(|&l| l == 0) {
        return Err(Error::InvalidLabel(format!("label at position {pos} is 0")));
    }
    Ok(())
}

fn distinct_count(labels: &[u32]) -> usize {
    labels.iter().collect::<BTreeSet<_>>().len()
}

fn contiguous(labels: &[u32]) -> bool {
    let max = labels.iter().copied().max().unwrap_or(0) as usize;
    distinct_count(labels) == max
}

/// Vertex labeling with positive integer labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct VertexLabeling {
    labels: Vec<u32>,
}

impl VertexLabeling {
    pub fn new(labels: Vec<u32>) -> Result<Self> {
        check_labels(&labels)?;
        Ok(VertexLabeling { labels })
    }

    pub fn uniform(n: usize) -> Self {
        VertexLabeling { labels: vec![1; n] }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.labels[v]
    }

    /// Number of distinct labels used.
    pub fn label_count(&self) -> usize {
        distinct_count(&self.labels)
    }

    /// True iff the labels used are exactly `1..=label_count`.
    pub fn is_contiguous(&self) -> bool {
        contiguous(&self.labels)
    }
}

impl TryFrom<Vec<u32>> for VertexLabeling {
    type Error = Error;

    fn try_from(labels: Vec<u32>) -> Result<Self> {
        VertexLabeling::new(labels)
    }
}

impl From<VertexLabeling> for Vec<u32> {
    fn from(l: VertexLabeling) -> Self {
        l.labels
    }
}

/// Edge labeling aligned with the canonical edge list of its graph.
/// Serializes as a list of `[u, v, label]` triples.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeLabeling {
    edges: Vec<(usize, usize)>,
    labels: Vec<u32>,
}

impl Serialize for EdgeLabeling {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|((u, v), l)| (u, v, l)))
    }
}

impl EdgeLabeling {
    /// `labels[i]` is the label of `g.edges()[i]`.
    pub fn new(g: &Graph, labels: Vec<u32>) -> Result<Self> {
        if labels.len() != g.size() {
            return Err(Error::LengthMismatch {
                expected: g.size(),
                found: labels.len(),
            });
        }
        check_labels(&labels)?;
        Ok(EdgeLabeling {
            edges: g.edges().to_vec(),
            labels,
        })
    }

    /// Builds a labeling from `(edge, label)` pairs; every edge of `g` must
    /// appear exactly once, in either orientation.
    pub fn from_pairs(
        g: &Graph,
        pairs: impl IntoIterator<Item = ((usize, usize), u32)>,
    ) -> Result<Self> {
        let mut labels = vec![0u32; g.size()];
        for ((u, v), label) in pairs {
            let idx = g.edge_index(u, v).ok_or_else(|| {
                Error::InvalidArgument(format!("({u}, {v}) is not an edge of the graph"))
            })?;
            if labels[idx] != 0 {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) labeled twice"
                )));
            }
            if label == 0 {
                return Err(Error::InvalidLabel(format!("edge ({u}, {v}) has label 0")));
            }
            labels[idx] = label;
        }
        if let Some(idx) = labels.iter().position(|&l| l == 0) {
            let (u, v) = g.edges()[idx];
            return Err(Error::InvalidArgument(format!(
                "edge ({u}, {v}) has no label"
            )));
        }
        EdgeLabeling::new(g, labels)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Label of edge `{u, v}`, in either orientation.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.edges
            .binary_search(&(u.min(v), u.max(v)))
            .ok()
            .map(|i| self.labels[i])
    }

    pub fn label_count(&self) -> usize {
        distinct_count(&self.labels)
    }

    pub fn is_contiguous(&self) -> bool {
        contiguous(&self.labels)
    }

    /// True iff the domain is exactly the edge set of `g`.
    pub fn matches(&self, g: &Graph) -> bool {
        self.edges == g.edges()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.edges.iter().copied().zip(self.labels.iter().copied())
    }
}
