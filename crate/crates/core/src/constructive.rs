//! Explicit distinguishing labelings of neighbourhood coronas, together with
//! the counting machinery that bounds their label counts.

use serde::Serialize;

use crate::automorphisms::enumerate_automorphisms;
use crate::config::SearchLimits;
use crate::corona::{neighbourhood_corona, splitting_graph, CoronaGraph, CoronaIndex};
use crate::distinguishing::{
    friendship_splitting_formula, is_distinguishing_edge, is_distinguishing_vertex,
};
use crate::error::{Error, Result};
use crate::families::friendship;
use crate::graph::{EdgeLabeling, Graph, VertexLabeling};

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of copy classes whose largest new label is `d2 + m`:
/// `1` for `m = 0`, `d2` for `m = 1`, and
/// `d2 + Σ_{i=1}^{m-1} C(m-1, i) C(d2, i+1)` otherwise.
pub fn y_sequence(d2: u64, m: u64) -> u64 {
    match m {
        0 => 1,
        1 => d2,
        _ => {
            d2 + (1..m)
                .map(|i| binomial(m - 1, i) * binomial(d2, i + 1))
                .sum::<u64>()
        }
    }
}

/// Least `k` with `y_0 + … + y_k >= d1`.
pub fn compute_m(d1: u64, d2: u64) -> u64 {
    let mut total = 0;
    let mut k = 0;
    loop {
        total += y_sequence(d2, k);
        if total >= d1 {
            return k;
        }
        k += 1;
    }
}

/// Upper bound `max{d1, d2 + M}` on the labels used by [`corona_vertex_labeling`].
pub fn corona_vertex_bound(d1: u64, d2: u64) -> u64 {
    d1.max(d2 + compute_m(d1, d2))
}

/// Swaps a set of original labels `{1..d2}` for new labels `> d2`, matching
/// them in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ReplacementPattern {
    pub replaced: Vec<u32>,
    pub new_labels: Vec<u32>,
}

impl ReplacementPattern {
    pub fn identity() -> Self {
        ReplacementPattern {
            replaced: Vec::new(),
            new_labels: Vec::new(),
        }
    }

    pub fn apply(&self, label: u32) -> u32 {
        match self.replaced.binary_search(&label) {
            Ok(pos) => self.new_labels[pos],
            Err(_) => label,
        }
    }

    /// Largest new label, or `None` for the identity pattern.
    pub fn max_new_label(&self) -> Option<u32> {
        self.new_labels.last().copied()
    }
}

/// Lexicographic `t`-subsets of `items`.
fn combinations(items: &[u32], t: usize) -> Vec<Vec<u32>> {
    fn rec(items: &[u32], t: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < t - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, t, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, t, 0, &mut Vec::new(), &mut out);
    out
}

/// Patterns whose largest new label is `d2 + m` (`m >= 1`), in generation
/// order: by subset size, then new-label subset, then replaced subset.
pub fn patterns_with_max(d2: u32, m: u32) -> Vec<ReplacementPattern> {
    if m == 0 {
        return vec![ReplacementPattern::identity()];
    }
    let originals: Vec<u32> = (1..=d2).collect();
    let lower_new: Vec<u32> = (d2 + 1..d2 + m).collect();
    let mut out = Vec::new();
    for t in 1..=(m.min(d2) as usize) {
        for mut new_labels in combinations(&lower_new, t - 1) {
            new_labels.push(d2 + m);
            for replaced in combinations(&originals, t) {
                out.push(ReplacementPattern {
                    replaced,
                    new_labels: new_labels.clone(),
                });
            }
        }
    }
    out
}

/// The first `count` patterns: the identity, then singles with `d2+1`,
/// singles with `d2+2`, pairs with `{d2+1, d2+2}`, singles with `d2+3`, …
pub fn replacement_patterns(d2: u32, count: usize) -> Vec<ReplacementPattern> {
    let mut out = Vec::with_capacity(count);
    let mut m = 0;
    while out.len() < count {
        out.extend(patterns_with_max(d2, m).into_iter().take(count - out.len()));
        m += 1;
    }
    out
}

/// Labels of `(K1^{v_{2i}}, v_{2i-1}, v_{2i}, K1^{v_{2i-1}})` in one blade of
/// `F_n ⋆ K1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BladeTuple {
    pub x: u32,
    pub y: u32,
    pub z: u32,
    pub w: u32,
}

impl BladeTuple {
    pub fn new(x: u32, y: u32, z: u32, w: u32) -> Self {
        BladeTuple { x, y, z, w }
    }

    /// Not fixed by the in-blade reflection.
    pub fn is_valid(&self) -> bool {
        self.x != self.w || self.y != self.z
    }

    pub fn reversed(&self) -> Self {
        BladeTuple::new(self.w, self.z, self.y, self.x)
    }

    pub fn is_canonical(&self) -> bool {
        *self <= self.reversed()
    }
}

/// All valid canonical tuples over `{1..s}`, lexicographically.
pub fn all_blade_tuples(s: u32) -> Vec<BladeTuple> {
    let mut out = Vec::new();
    for x in 1..=s {
        for y in 1..=s {
            for z in 1..=s {
                for w in 1..=s {
                    let t = BladeTuple::new(x, y, z, w);
                    if t.is_valid() && t.is_canonical() {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

pub fn enumerate_blade_tuples(s: u32, count: usize) -> Result<Vec<BladeTuple>> {
    let all = all_blade_tuples(s);
    if all.len() < count {
        return Err(Error::InsufficientLabels {
            needed: count,
            available: all.len(),
            labels: s as usize,
        });
    }
    Ok(all.into_iter().take(count).collect())
}

/// Distinguishing labeling of `F_n ⋆ K1` with the least possible number of
/// labels: `v_0` and its copy get 1, blade `i` gets the `i`-th canonical
/// tuple.
pub fn friendship_splitting_labeling(n: usize) -> Result<VertexLabeling> {
    let corona = splitting_graph(&friendship(n)?)?;
    let s = friendship_splitting_formula(n as u64) as u32;
    let tuples = enumerate_blade_tuples(s, n)?;
    let idx = corona.index;
    let mut labels = vec![0u32; idx.total()];
    labels[0] = 1;
    labels[idx.copy(0, 0)] = 1;
    for (i, t) in (1..=n).zip(tuples) {
        let (a, b) = (2 * i - 1, 2 * i);
        labels[idx.copy(b, 0)] = t.x;
        labels[a] = t.y;
        labels[b] = t.z;
        labels[idx.copy(a, 0)] = t.w;
    }
    VertexLabeling::new(labels)
}

fn require_connected(g: &Graph, name: &str, min_order: usize) -> Result<()> {
    if g.order() < min_order {
        return Err(Error::HypothesisViolation(format!(
            "{name} must have at least {min_order} vertices"
        )));
    }
    if !g.is_connected() {
        return Err(Error::HypothesisViolation(format!(
            "{name} must be connected"
        )));
    }
    Ok(())
}

fn require_vertex_distinguishing(
    g: &Graph,
    base: &VertexLabeling,
    name: &str,
    limits: &SearchLimits,
) -> Result<()> {
    let group = enumerate_automorphisms(g, limits)?;
    if !is_distinguishing_vertex(g, &group, base)? {
        return Err(Error::NotDistinguishing(format!("{name} vertex labeling")));
    }
    Ok(())
}

fn require_edge_distinguishing(
    g: &Graph,
    base: &EdgeLabeling,
    name: &str,
    limits: &SearchLimits,
) -> Result<()> {
    let group = enumerate_automorphisms(g, limits)?;
    if !is_distinguishing_edge(g, &group, base)? {
        return Err(Error::NotDistinguishing(format!("{name} edge labeling")));
    }
    Ok(())
}

/// Labeling of `G ⋆ K1`: base vertices keep `base`, the copy over `v_i`
/// repeats the label of `v_i`.
pub fn splitting_vertex_labeling(
    g: &Graph,
    base: &VertexLabeling,
    limits: &SearchLimits,
) -> Result<VertexLabeling> {
    require_connected(g, "G", 2)?;
    require_vertex_distinguishing(g, base, "base", limits)?;
    let mut labels = base.labels().to_vec();
    labels.extend_from_slice(base.labels());
    VertexLabeling::new(labels)
}

/// Edge labels of `G1 ⋆ G2`: `G1` edges keep `base1`, each copy's internal
/// edges repeat `base2`, and the join edges from `v_a` to copy `b` take the
/// label of the base edge `(v_a, v_b)`.
fn join_edge_labeling(
    corona: &CoronaGraph,
    base1: &EdgeLabeling,
    base2: &EdgeLabeling,
) -> Result<EdgeLabeling> {
    let idx: CoronaIndex = corona.index;
    let mut pairs = Vec::with_capacity(corona.graph.size());
    pairs.extend(base1.iter());
    for i in 0..idx.n1 {
        pairs.extend(
            base2
                .iter()
                .map(|((a, b), l)| ((idx.copy(i, a), idx.copy(i, b)), l)),
        );
    }
    for ((a, b), l) in base1.iter() {
        pairs.extend(idx.copy_ids(b).map(|u| ((a, u), l)));
        pairs.extend(idx.copy_ids(a).map(|u| ((b, u), l)));
    }
    EdgeLabeling::from_pairs(&corona.graph, pairs)
}

/// Labeling of `G ⋆ K1`: base edges keep `base`; the edge from the copy
/// over `v_i` to a neighbour `x` of `v_i` takes the label of `(v_i, x)`.
pub fn splitting_edge_labeling(
    g: &Graph,
    base: &EdgeLabeling,
    limits: &SearchLimits,
) -> Result<EdgeLabeling> {
    require_connected(g, "G", 3)?;
    if !base.matches(g) {
        return Err(Error::InvalidArgument(
            "base labeling does not cover the edge set".into(),
        ));
    }
    require_edge_distinguishing(g, base, "base", limits)?;
    let corona = splitting_graph(g)?;
    join_edge_labeling(&corona, base, &EdgeLabeling::new(&corona.g2, Vec::new())?)
}

/// Labeling of `G1 ⋆ G2` built from distinguishing labelings of the factors.
///
/// Base vertices keep `base1`. Base vertices are grouped into classes by
/// their `base1` label (ascending); the copies over class `c` carry `base2`
/// rewritten by the `c`-th replacement pattern, so the first class keeps
/// `base2` verbatim. Uses at most `max{|base1|, |base2| + M}` labels.
pub fn corona_vertex_labeling(
    g1: &Graph,
    g2: &Graph,
    base1: &VertexLabeling,
    base2: &VertexLabeling,
    limits: &SearchLimits,
) -> Result<VertexLabeling> {
    require_connected(g1, "G1", 2)?;
    require_connected(g2, "G2", 1)?;
    if base1.len() != g1.order() || base2.len() != g2.order() {
        return Err(Error::LengthMismatch {
            expected: g1.order() + g2.order(),
            found: base1.len() + base2.len(),
        });
    }
    if !base2.is_contiguous() {
        return Err(Error::InvalidLabel(
            "G2 labeling must use exactly the labels 1..=k".into(),
        ));
    }
    require_vertex_distinguishing(g1, base1, "G1", limits)?;
    require_vertex_distinguishing(g2, base2, "G2", limits)?;

    let mut classes: Vec<u32> = base1.labels().to_vec();
    classes.sort_unstable();
    classes.dedup();
    let patterns = replacement_patterns(base2.label_count() as u32, classes.len());

    let idx = CoronaIndex::new(g1.order(), g2.order());
    let mut labels = base1.labels().to_vec();
    labels.reserve(idx.total() - idx.n1);
    for i in 0..idx.n1 {
        let class = classes
            .binary_search(&base1.get(i))
            .expect("every base label is a class");
        let pattern = &patterns[class];
        labels.extend(base2.labels().iter().map(|&l| pattern.apply(l)));
    }
    VertexLabeling::new(labels)
}

/// Labeling of `G1 ⋆ G2` from distinguishing edge labelings of the factors;
/// uses at most `max{|base1|, |base2|}` labels.
pub fn corona_edge_labeling(
    g1: &Graph,
    g2: &Graph,
    base1: &EdgeLabeling,
    base2: &EdgeLabeling,
    limits: &SearchLimits,
) -> Result<EdgeLabeling> {
    require_connected(g1, "G1", 2)?;
    require_connected(g2, "G2", 1)?;
    if !base1.matches(g1) || !base2.matches(g2) {
        return Err(Error::InvalidArgument(
            "base labeling does not cover the edge set".into(),
        ));
    }
    require_edge_distinguishing(g1, base1, "G1", limits)?;
    require_edge_distinguishing(g2, base2, "G2", limits)?;
    let corona = neighbourhood_corona(g1, g2)?;
    join_edge_labeling(&corona, base1, base2)
}
