//! Exact enumeration of `Aut(G)` and the structure checks for automorphisms
//! of a neighbourhood corona.
//!
//! The search is an individualization-refinement backtrack. Both sides start
//! from the coarsest equitable colouring. The left side individualizes the
//! lowest-id vertex of the largest non-singleton cell; the right side tries
//! every vertex of the matching cell. Colour refinement is isomorphism
//! invariant, so any automorphism consistent with the choices so far keeps
//! the two refinement traces equal. Branches whose traces differ cannot
//! contain an automorphism and are cut. Every discrete leaf is checked
//! against the edge set, so the enumeration is exact: each automorphism is
//! reached by exactly one leaf.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::config::SearchLimits;
use crate::corona::{CoronaGraph, Role};
use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation};

/// The full automorphism group, elements sorted lexicographically by image
/// sequence. The identity is always the first element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    n: usize,
    elements: Vec<Permutation>,
}

impl AutomorphismGroup {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn non_identity(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter().filter(|p| !p.is_identity())
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Checks identity, inverses and closure on all pairs. Quadratic in the
    /// group order; intended for small groups.
    pub fn check_group_axioms(&self) -> std::result::Result<(), String> {
        if !self.contains(&Permutation::identity(self.n)) {
            return Err("identity missing".into());
        }
        for p in &self.elements {
            if !self.contains(&p.inverse()) {
                return Err(format!("inverse of {p} missing"));
            }
            for q in &self.elements {
                let pq = p.compose(q).map_err(|e| e.to_string())?;
                if !self.contains(&pq) {
                    return Err(format!("{p} ∘ {q} missing"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone)]
struct Coloring {
    colors: Vec<u32>,
    count: usize,
}

impl Coloring {
    fn is_discrete(&self) -> bool {
        self.count == self.colors.len()
    }

    fn individualize(&self, v: usize) -> Coloring {
        let c = self.colors[v];
        let colors = self
            .colors
            .iter()
            .enumerate()
            .map(|(w, &cw)| {
                if cw > c || (cw == c && w != v) {
                    cw + 1
                } else {
                    cw
                }
            })
            .collect();
        Coloring {
            colors,
            count: self.count + 1,
        }
    }

    /// Colour of the largest non-singleton cell, lowest colour on ties.
    fn target_cell(&self) -> Option<u32> {
        let mut sizes = vec![0usize; self.count];
        for &c in &self.colors {
            sizes[c as usize] += 1;
        }
        let mut best: Option<(usize, u32)> = None;
        for (c, &s) in sizes.iter().enumerate() {
            if s > 1 && best.is_none_or(|(bs, _)| s > bs) {
                best = Some((s, c as u32));
            }
        }
        best.map(|(_, c)| c)
    }
}

/// Refines `coloring` to the coarsest equitable colouring below it, by
/// repeatedly splitting on (colour, sorted neighbour colours). Returns a
/// trace of the signature multisets seen at each round.
fn refine(g: &Graph, coloring: &mut Coloring) -> Vec<u64> {
    let n = g.order();
    let mut trace = Vec::new();
    let mut sigs: Vec<(u32, Vec<u32>, usize)> = Vec::with_capacity(n);
    loop {
        sigs.clear();
        for v in 0..n {
            let mut around: Vec<u32> = g.neighbors(v).iter().map(|&w| coloring.colors[w]).collect();
            around.sort_unstable();
            sigs.push((coloring.colors[v], around, v));
        }
        sigs.sort_unstable();
        let mut hasher = DefaultHasher::new();
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                next += 1;
            }
            (sigs[i].0, &sigs[i].1, next).hash(&mut hasher);
        }
        trace.push(hasher.finish());
        let count = if n == 0 { 0 } else { next as usize + 1 };
        let stable = count == coloring.count;
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                rank += 1;
            }
            coloring.colors[sigs[i].2] = rank;
        }
        coloring.count = count;
        if stable {
            return trace;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    cap: usize,
    found: AtomicUsize,
}

impl Search<'_> {
    fn leaf(&self, left: &Coloring, right: &Coloring, out: &mut Vec<Permutation>) -> Result<()> {
        let n = self.g.order();
        let mut by_color = vec![0u32; n];
        for (w, &c) in right.colors.iter().enumerate() {
            by_color[c as usize] = w as u32;
        }
        let image: Vec<u32> = left.colors.iter().map(|&c| by_color[c as usize]).collect();
        if self.g.preserves_edges(&image) {
            if self.found.fetch_add(1, Ordering::Relaxed) >= self.cap {
                return Err(Error::GroupCapExceeded { cap: self.cap });
            }
            out.push(Permutation::from_raw(image));
        }
        Ok(())
    }

    /// Left child and the right-side candidates for the branching cell.
    fn branch(&self, left: &Coloring, right: &Coloring) -> (Coloring, Vec<u64>, Vec<usize>) {
        let target = left
            .target_cell()
            .expect("non-discrete colouring has a target cell");
        let v = left
            .colors
            .iter()
            .position(|&c| c == target)
            .expect("target cell is non-empty");
        let mut child = left.individualize(v);
        let trace = refine(self.g, &mut child);
        let candidates = right
            .colors
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == target)
            .map(|(w, _)| w)
            .collect();
        (child, trace, candidates)
    }

    fn try_candidate(
        &self,
        left_child: &Coloring,
        trace: &[u64],
        right: &Coloring,
        w: usize,
        out: &mut Vec<Permutation>,
    ) -> Result<()> {
        let mut right_child = right.individualize(w);
        let right_trace = refine(self.g, &mut right_child);
        if right_trace == trace && right_child.count == left_child.count {
            self.descend(left_child, &right_child, out)?;
        }
        Ok(())
    }

    fn descend(&self, left: &Coloring, right: &Coloring, out: &mut Vec<Permutation>) -> Result<()> {
        if left.is_discrete() {
            return self.leaf(left, right, out);
        }
        let (child, trace, candidates) = self.branch(left, right);
        for w in candidates {
            self.try_candidate(&child, &trace, right, w, out)?;
        }
        Ok(())
    }
}

/// Enumerates every automorphism of `g`, refusing graphs above the vertex
/// cap and groups above the group cap. With `limits.workers > 1` the first
/// branching level is fanned out over a thread pool; the result order is
/// the same either way.
pub fn enumerate_automorphisms(g: &Graph, limits: &SearchLimits) -> Result<AutomorphismGroup> {
    let n = g.order();
    if n > limits.vertex_cap {
        return Err(Error::VertexCapExceeded {
            n,
            cap: limits.vertex_cap,
        });
    }
    let search = Search {
        g,
        cap: limits.group_cap,
        found: AtomicUsize::new(0),
    };
    let mut root = Coloring {
        colors: vec![0; n],
        count: usize::from(n > 0),
    };
    refine(g, &mut root);
    let mut elements = Vec::new();
    if root.is_discrete() {
        search.leaf(&root, &root, &mut elements)?;
    } else if limits.workers <= 1 {
        search.descend(&root, &root, &mut elements)?;
    } else {
        let (child, trace, candidates) = search.branch(&root, &root);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(limits.workers)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        let parts: Vec<Result<Vec<Permutation>>> = pool.install(|| {
            candidates
                .par_iter()
                .map(|&w| {
                    let mut out = Vec::new();
                    search.try_candidate(&child, &trace, &root, w, &mut out)?;
                    Ok(out)
                })
                .collect()
        });
        for part in parts {
            elements.extend(part?);
        }
    }
    elements.sort_unstable();
    Ok(AutomorphismGroup { n, elements })
}

/// Permutation of canonical edge indices induced by the vertex
/// automorphism `p`.
pub fn induced_edge_permutation(g: &Graph, p: &Permutation) -> Result<Permutation> {
    if !g.is_automorphism(p)? {
        return Err(Error::NotAnAutomorphism);
    }
    Ok(Permutation::from_raw(edge_images(g, p)))
}

pub(crate) fn edge_images(g: &Graph, p: &Permutation) -> Vec<u32> {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            g.edge_index(p.apply(u), p.apply(v))
                .expect("automorphism maps edges to edges") as u32
        })
        .collect()
}

/// Fails unless `g1`, `g2` are connected and `n1 > 1`.
pub fn check_structure_hypotheses(corona: &CoronaGraph) -> Result<()> {
    if corona.index.n1 <= 1 {
        return Err(Error::HypothesisViolation(
            "G1 must have more than one vertex".into(),
        ));
    }
    if !corona.g1.is_connected() {
        return Err(Error::HypothesisViolation("G1 must be connected".into()));
    }
    if !corona.g2.is_connected() {
        return Err(Error::HypothesisViolation("G2 must be connected".into()));
    }
    Ok(())
}

fn check_corona_automorphism(corona: &CoronaGraph, f: &Permutation) -> Result<()> {
    if !corona.graph.is_automorphism(f)? {
        return Err(Error::NotAnAutomorphism);
    }
    Ok(())
}

/// The action of `f` on the base copy of `G1`. Fails if some base vertex is
/// sent into a copy of `G2`, or if the induced map is not an automorphism
/// of `G1`.
pub fn restriction_to_base(corona: &CoronaGraph, f: &Permutation) -> Result<Permutation> {
    check_corona_automorphism(corona, f)?;
    let idx = corona.index;
    let mut images = Vec::with_capacity(idx.n1);
    for i in 0..idx.n1 {
        let w = f.apply(i);
        if !idx.is_base(w) {
            return Err(Error::DecompositionFailure(format!(
                "base vertex {i} is mapped to copy vertex {w}"
            )));
        }
        images.push(w);
    }
    let g = Permutation::from_images(images)?;
    if !corona.g1.is_automorphism(&g)? {
        return Err(Error::DecompositionFailure(format!(
            "restriction {g} is not an automorphism of G1"
        )));
    }
    Ok(g)
}

/// An automorphism of `G1 ⋆ G2` split into its base action, the copy it
/// sends each copy of `G2` to, and the automorphism of `G2` realised on
/// each copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoronaDecomposition {
    /// Restriction to the base vertices; an automorphism of `G1`.
    pub base: Permutation,
    /// `h_i`: copy `i` is carried onto copy `copy_map[i]` by `u_j ↦ u_{h_i(j)}`.
    pub copy_actions: Vec<Permutation>,
    /// Where each copy goes; an automorphism of `G1`.
    pub copy_map: Permutation,
}

impl CoronaDecomposition {
    /// True iff every copy follows its base vertex. This fails exactly when
    /// `f` exchanges copies sitting over vertices with identical
    /// neighbourhoods in `G1` differently from the base.
    pub fn copies_follow_base(&self) -> bool {
        self.base == self.copy_map
    }

    /// Rebuilds the corona permutation.
    pub fn reassemble(&self, corona: &CoronaGraph) -> Permutation {
        let idx = corona.index;
        let mut images = vec![0u32; idx.total()];
        for i in 0..idx.n1 {
            images[i] = self.base.apply(i) as u32;
            let k = self.copy_map.apply(i);
            for j in 0..idx.n2 {
                images[idx.copy(i, j)] = idx.copy(k, self.copy_actions[i].apply(j)) as u32;
            }
        }
        Permutation::from_raw(images)
    }
}

/// Splits a corona automorphism into base action, copy map and per-copy
/// actions, verifying that each copy lands on a single copy, that every
/// `h_i` is an automorphism of `G2` and that the copy map is an
/// automorphism of `G1`.
pub fn decompose_corona_automorphism(
    corona: &CoronaGraph,
    f: &Permutation,
) -> Result<CoronaDecomposition> {
    check_structure_hypotheses(corona)?;
    let base = restriction_to_base(corona, f)?;
    let idx = corona.index;
    let mut copy_map = Vec::with_capacity(idx.n1);
    let mut copy_actions = Vec::with_capacity(idx.n1);
    for i in 0..idx.n1 {
        let mut target = None;
        let mut action = Vec::with_capacity(idx.n2);
        for j in 0..idx.n2 {
            let w = f.apply(idx.copy(i, j));
            match idx.role_of(w)? {
                Role::Base { base } => {
                    return Err(Error::DecompositionFailure(format!(
                        "copy vertex ({i}, {j}) is mapped to base vertex {base}"
                    )))
                }
                Role::Copy { copy, vertex } => {
                    if *target.get_or_insert(copy) != copy {
                        return Err(Error::DecompositionFailure(format!(
                            "copy {i} is split between copies {} and {copy}",
                            target.unwrap_or(copy)
                        )));
                    }
                    action.push(vertex);
                }
            }
        }
        let h = Permutation::from_images(action)?;
        if !corona.g2.is_automorphism(&h)? {
            return Err(Error::DecompositionFailure(format!(
                "action {h} on copy {i} is not an automorphism of G2"
            )));
        }
        copy_map.push(target.expect("copies are non-empty"));
        copy_actions.push(h);
    }
    let copy_map = Permutation::from_images(copy_map)?;
    if !corona.g1.is_automorphism(&copy_map)? {
        return Err(Error::DecompositionFailure(format!(
            "copy map {copy_map} is not an automorphism of G1"
        )));
    }
    Ok(CoronaDecomposition {
        base,
        copy_actions,
        copy_map,
    })
}

/// A base vertex `v_i` sent to the copy vertex `u_j` of copy `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BaseToCopy {
    pub base: usize,
    pub copy: usize,
    pub vertex: usize,
    /// Whether `d_G1(v_k) > d_G1(v_i)` holds, as any such event must satisfy.
    pub degree_increases: bool,
}

/// All base vertices that `f` moves into copies of `G2`.
pub fn base_to_copy_events(corona: &CoronaGraph, f: &Permutation) -> Vec<BaseToCopy> {
    let idx = corona.index;
    (0..idx.n1)
        .filter_map(|i| match idx.role_of(f.apply(i)) {
            Ok(Role::Copy { copy, vertex }) => Some(BaseToCopy {
                base: i,
                copy,
                vertex,
                degree_increases: corona.g1.neighbors(copy).len() > corona.g1.neighbors(i).len(),
            }),
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::{neighbourhood_corona, splitting_graph};
    use crate::families::{complete, cycle, friendship, path, random_graph, star};

    fn aut(g: &Graph) -> AutomorphismGroup {
        enumerate_automorphisms(g, &SearchLimits::default()).unwrap()
    }

    /// Every permutation of `0..n`, for cross-checking small graphs.
    fn brute_force(g: &Graph) -> Vec<Permutation> {
        fn rec(
            prefix: &mut Vec<usize>,
            used: &mut Vec<bool>,
            g: &Graph,
            out: &mut Vec<Permutation>,
        ) {
            let n = g.order();
            if prefix.len() == n {
                let p = Permutation::from_images(prefix.clone()).unwrap();
                if g.is_automorphism(&p).unwrap() {
                    out.push(p);
                }
                return;
            }
            for w in 0..n {
                if !used[w] {
                    used[w] = true;
                    prefix.push(w);
                    rec(prefix, used, g, out);
                    prefix.pop();
                    used[w] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; g.order()], g, &mut out);
        out
    }

    #[test]
    fn small_orders() {
        assert_eq!(aut(&path(3).unwrap()).order(), 2);
        assert_eq!(aut(&cycle(4).unwrap()).order(), 8);
        assert_eq!(aut(&complete(5).unwrap()).order(), 120);
        assert_eq!(aut(&star(4).unwrap()).order(), 24);
        assert_eq!(aut(&path(1).unwrap()).order(), 1);
        assert_eq!(aut(&Graph::new(0, []).unwrap()).order(), 1);
        // F_n has order 2^n n!
        assert_eq!(aut(&friendship(3).unwrap()).order(), 48);
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        for seed in 0..40 {
            let n = 2 + (seed as usize % 6);
            let g = random_graph(n, seed);
            let group = aut(&g);
            assert_eq!(group.elements(), brute_force(&g).as_slice(), "seed {seed}");
        }
    }

    #[test]
    fn disconnected_graphs_are_enumerated() {
        let g = Graph::new(5, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(aut(&g).order(), 8);
    }

    #[test]
    fn parallel_enumeration_is_identical() {
        let g = splitting_graph(&friendship(3).unwrap()).unwrap().graph;
        let serial = aut(&g);
        let parallel =
            enumerate_automorphisms(&g, &SearchLimits::default().with_workers(4)).unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn caps_are_enforced() {
        let g = complete(6).unwrap();
        let limits = SearchLimits {
            group_cap: 100,
            ..SearchLimits::default()
        };
        assert_eq!(
            enumerate_automorphisms(&g, &limits),
            Err(Error::GroupCapExceeded { cap: 100 })
        );
        assert!(matches!(
            enumerate_automorphisms(&path(25).unwrap(), &SearchLimits::default()),
            Err(Error::VertexCapExceeded { n: 25, cap: 24 })
        ));
    }

    #[test]
    fn friendship_splitting_contains_blade_maps() {
        let c = splitting_graph(&friendship(2).unwrap()).unwrap();
        let group = aut(&c.graph);
        // Order recorded from the first enumeration; equals |Aut(F_2)|.
        assert_eq!(group.order(), 8);
        let idx = c.index;
        let k1 = |v: usize| idx.copy(v, 0);
        let swap_all = |pairs: &[(usize, usize)]| {
            let mut images: Vec<usize> = (0..idx.total()).collect();
            for &(a, b) in pairs {
                images.swap(a, b);
            }
            Permutation::from_images(images).unwrap()
        };
        // f_i: swap v_{2i-1}, v_{2i} and their copies
        for i in 1..=2 {
            let (a, b) = (2 * i - 1, 2 * i);
            assert!(group.contains(&swap_all(&[(a, b), (k1(a), k1(b))])));
        }
        // f_12 and g_12
        let f12 = swap_all(&[(2, 4), (1, 3), (k1(2), k1(4)), (k1(1), k1(3))]);
        let g12 = swap_all(&[(2, 3), (1, 4), (k1(2), k1(3)), (k1(1), k1(4))]);
        assert!(group.contains(&f12) && group.contains(&g12));
    }

    #[test]
    fn group_axioms() {
        for g in [cycle(5).unwrap(), star(3).unwrap(), friendship(2).unwrap()] {
            aut(&g).check_group_axioms().unwrap();
        }
    }

    #[test]
    fn induced_edges() {
        let p3 = path(3).unwrap();
        let refl = Permutation::transposition(3, 0, 2).unwrap();
        assert_eq!(
            induced_edge_permutation(&p3, &refl).unwrap().images(),
            &[1, 0]
        );
        let k2 = path(2).unwrap();
        let swap = Permutation::transposition(2, 0, 1).unwrap();
        assert!(induced_edge_permutation(&k2, &swap).unwrap().is_identity());
        let c4 = cycle(4).unwrap();
        let rot = Permutation::from_images(vec![1, 2, 3, 0]).unwrap();
        let e = induced_edge_permutation(&c4, &rot).unwrap();
        assert_eq!(e.cycles().len(), 1);
        assert_eq!(e.cycles()[0].len(), 4);
        let bad = Permutation::from_images(vec![1, 0, 2]).unwrap();
        assert_eq!(
            induced_edge_permutation(&p3, &bad),
            Err(Error::NotAnAutomorphism)
        );
    }

    #[test]
    fn restriction_examples() {
        let c = neighbourhood_corona(&path(3).unwrap(), &path(2).unwrap()).unwrap();
        let id = Permutation::identity(c.index.total());
        assert!(restriction_to_base(&c, &id).unwrap().is_identity());
        let base_group = aut(&c.g1);
        for f in aut(&c.graph).elements() {
            assert!(base_group.contains(&restriction_to_base(&c, f).unwrap()));
        }
        let c = neighbourhood_corona(&cycle(4).unwrap(), &complete(2).unwrap()).unwrap();
        let base_group = aut(&c.g1);
        for f in aut(&c.graph).elements() {
            assert!(base_group.contains(&restriction_to_base(&c, f).unwrap()));
        }
    }

    #[test]
    fn decomposition_examples() {
        let c = neighbourhood_corona(&path(4).unwrap(), &path(3).unwrap()).unwrap();
        let id = Permutation::identity(c.index.total());
        let d = decompose_corona_automorphism(&c, &id).unwrap();
        assert!(d.base.is_identity() && d.copy_map.is_identity());
        assert!(d.copy_actions.iter().all(Permutation::is_identity));
        let group = aut(&c.graph);
        assert!(group.order() > 1);
        for f in group.elements() {
            let d = decompose_corona_automorphism(&c, f).unwrap();
            assert_eq!(&d.reassemble(&c), f);
            assert!(d.copies_follow_base());
        }
    }

    #[test]
    fn blade_swap_decomposes() {
        let c = splitting_graph(&friendship(2).unwrap()).unwrap();
        let mut images: Vec<usize> = (0..10).collect();
        images.swap(1, 2);
        images.swap(c.index.copy(1, 0), c.index.copy(2, 0));
        let f = Permutation::from_images(images).unwrap();
        let d = decompose_corona_automorphism(&c, &f).unwrap();
        assert_eq!(d.base.apply(1), 2);
        assert_eq!(d.copy_map.apply(1), 2);
        assert_eq!(d.copy_map.apply(2), 1);
    }

    #[test]
    fn twin_copies_may_move_independently() {
        // Leaves 0 and 2 of P3 share the neighbourhood {1}, so their copies
        // can be exchanged while the base stays fixed.
        let c = splitting_graph(&path(3).unwrap()).unwrap();
        let (a, b) = (c.index.copy(0, 0), c.index.copy(2, 0));
        let f = Permutation::transposition(6, a, b).unwrap();
        let d = decompose_corona_automorphism(&c, &f).unwrap();
        assert!(d.base.is_identity());
        assert!(!d.copies_follow_base());
        assert_eq!(d.copy_map.images(), &[2, 1, 0]);
    }

    #[test]
    fn hypothesis_violations() {
        let disconnected = Graph::new(3, [(0, 1)]).unwrap();
        let c = neighbourhood_corona(&disconnected, &path(2).unwrap()).unwrap();
        let id = Permutation::identity(c.index.total());
        assert!(matches!(
            decompose_corona_automorphism(&c, &id),
            Err(Error::HypothesisViolation(_))
        ));
        let c = neighbourhood_corona(&complete(1).unwrap(), &path(2).unwrap()).unwrap();
        assert!(matches!(
            decompose_corona_automorphism(&c, &Permutation::identity(3)),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn disconnected_base_can_send_base_into_copy() {
        // K1 ⋆ K1 is two isolated vertices; swapping them maps the base
        // vertex into the copy.
        let c = neighbourhood_corona(&complete(1).unwrap(), &complete(1).unwrap()).unwrap();
        let swap = Permutation::transposition(2, 0, 1).unwrap();
        assert!(matches!(
            restriction_to_base(&c, &swap),
            Err(Error::DecompositionFailure(_))
        ));
        assert_eq!(base_to_copy_events(&c, &swap).len(), 1);
    }
}
