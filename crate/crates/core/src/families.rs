//! Named graph families with fixed vertex numbering.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn at_least(name: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidArgument(format!(
            "{name} requires n >= {min}, got {n}"
        )));
    }
    Ok(())
}

/// Path on `0..n` with edges `(i, i+1)`.
pub fn path(n: usize) -> Result<Graph> {
    at_least("path", n, 1)?;
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", n, 3)?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete", n, 1)?;
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Star `K_{1,n}`: vertex 0 is the centre, leaves are `1..=n`.
pub fn star(n: usize) -> Result<Graph> {
    at_least("star", n, 1)?;
    Graph::new(n + 1, (1..=n).map(|i| (0, i)))
}

/// Friendship graph `F_n`: `n` triangles sharing vertex 0. Triangle `i`
/// (1-based) has base vertices `2i-1` and `2i`.
pub fn friendship(n: usize) -> Result<Graph> {
    at_least("friendship", n, 2)?;
    let edges = (1..=n).flat_map(|i| [(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)]);
    Graph::new(2 * n + 1, edges)
}

/// Looks a family up by name (`path`, `cycle`, `complete`, `star`, `friendship`).
pub fn by_name(name: &str, n: usize) -> Result<Graph> {
    match name {
        "path" => path(n),
        "cycle" => cycle(n),
        "complete" => complete(n),
        "star" => star(n),
        "friendship" => friendship(n),
        _ => Err(Error::InvalidArgument(format!("unknown family {name:?}"))),
    }
}

/// Erdős–Rényi `G(n, 1/2)`: each pair `u < v`, visited in lexicographic
/// order, is included when the next `bool` drawn from a ChaCha8 stream
/// seeded with `seed` is true.
pub fn random_graph(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_with(n, &mut rng)
}

fn random_graph_with(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated pairs are in range")
}

/// Connected `G(n, 1/2)` by rejection sampling from a single seeded stream.
pub fn random_connected_graph(n: usize, seed: u64) -> Result<Graph> {
    at_least("random connected graph", n, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let g = random_graph_with(n, &mut rng);
        if g.is_connected() {
            return Ok(g);
        }
    }
}

/// `count` connected pairs with orders drawn uniformly from `n1` and `n2`.
/// Sizes and per-graph seeds come from one ChaCha8 stream seeded with `seed`.
pub fn random_connected_pairs(
    seed: u64,
    count: usize,
    n1: std::ops::RangeInclusive<usize>,
    n2: std::ops::RangeInclusive<usize>,
) -> Result<Vec<(Graph, Graph)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = rng.gen_range(n1.clone());
            let b = rng.gen_range(n2.clone());
            let g1 = random_connected_graph(a, rng.gen())?;
            let g2 = random_connected_graph(b, rng.gen())?;
            Ok((g1, g2))
        })
        .collect()
}
