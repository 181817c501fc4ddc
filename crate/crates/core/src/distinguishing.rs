//! Exact distinguishing number `D(G)` and distinguishing index `D'(G)`.
//!
//! Both reduce to one search: given a permutation group acting on points
//! (vertices, or edges through the induced action), find the least `k` for
//! which some labeling of the points with `k` labels is fixed by no
//! non-identity element. Labelings are enumerated depth-first over points
//! `0, 1, ...` with labels in canonical first-use order, so each partition
//! of the points into label classes is visited once. Alongside the partial
//! labeling we keep the elements not yet broken by it:
//!
//! * once no element survives, any completion is distinguishing and the
//!   remaining points get label 1 (early accept);
//! * once a surviving element has its whole support labeled, no completion
//!   can break it and the branch is abandoned.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::automorphisms::{edge_images, enumerate_automorphisms, AutomorphismGroup};
use crate::config::SearchLimits;
use crate::error::{Error, Result};
use crate::graph::{EdgeLabeling, Graph, VertexLabeling};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistinguishingReport<L> {
    /// `D(G)` or `D'(G)`.
    pub value: usize,
    /// Lexicographically least distinguishing labeling with `value` labels.
    pub witness: L,
    /// Search nodes visited over all `k`.
    pub labelings_tested: u64,
    pub group_order: usize,
    pub random_prepass_hits: usize,
}

pub fn is_distinguishing_vertex(
    g: &Graph,
    group: &AutomorphismGroup,
    labeling: &VertexLabeling,
) -> Result<bool> {
    if labeling.len() != g.order() || group.degree() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            found: labeling.len(),
        });
    }
    let labels = labeling.labels();
    Ok(group.non_identity().all(|p| {
        p.images()
            .iter()
            .enumerate()
            .any(|(x, &y)| labels[x] != labels[y as usize])
    }))
}

/// True iff every non-identity automorphism moves some edge label. An
/// automorphism fixing every edge preserves all edge labelings, so graphs
/// with one (such as `K2`) have no distinguishing edge labeling.
pub fn is_distinguishing_edge(
    g: &Graph,
    group: &AutomorphismGroup,
    labeling: &EdgeLabeling,
) -> Result<bool> {
    if !labeling.matches(g) {
        return Err(Error::InvalidArgument(
            "edge labeling domain differs from the edge set".into(),
        ));
    }
    if group.degree() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            found: group.degree(),
        });
    }
    let labels = labeling.labels();
    Ok(group.non_identity().all(|p| {
        edge_images(g, p)
            .iter()
            .enumerate()
            .any(|(e, &f)| labels[e] != labels[f as usize])
    }))
}

/// A permutation group on `0..points`, identity removed.
struct PointAction {
    points: usize,
    forward: Vec<Vec<u32>>,
    backward: Vec<Vec<u32>>,
    /// One past the largest moved point.
    complete_at: Vec<usize>,
}

impl PointAction {
    fn new(points: usize, perms: Vec<Vec<u32>>) -> Self {
        let backward = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0u32; p.len()];
                for (i, &w) in p.iter().enumerate() {
                    inv[w as usize] = i as u32;
                }
                inv
            })
            .collect();
        let complete_at = perms
            .iter()
            .map(|p| {
                p.iter()
                    .enumerate()
                    .filter(|&(i, &w)| i != w as usize)
                    .map(|(i, _)| i + 1)
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        PointAction {
            points,
            forward: perms,
            backward,
            complete_at,
        }
    }

    fn breaks_all(&self, labels: &[u32]) -> bool {
        self.forward.iter().all(|p| {
            p.iter()
                .enumerate()
                .any(|(x, &y)| labels[x] != labels[y as usize])
        })
    }
}

struct LabelSearch<'a> {
    action: &'a PointAction,
    k: u32,
    cap: u64,
    nodes: u64,
    labels: Vec<u32>,
}

impl LabelSearch<'_> {
    fn dfs(&mut self, depth: usize, used: u32, survivors: &[u32]) -> Result<bool> {
        if survivors.is_empty() {
            self.labels[depth..].fill(1);
            return Ok(true);
        }
        if depth == self.action.points {
            return Ok(false);
        }
        let mut next = Vec::with_capacity(survivors.len());
        for label in 1..=(used + 1).min(self.k) {
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(Error::LabelingCapExceeded {
                    k: self.k as usize,
                    cap: self.cap,
                });
            }
            self.labels[depth] = label;
            next.clear();
            let mut dead = false;
            for &s in survivors {
                let s_idx = s as usize;
                let image = self.action.forward[s_idx][depth] as usize;
                let preimage = self.action.backward[s_idx][depth] as usize;
                let consistent = (image > depth || self.labels[image] == label)
                    && (preimage > depth || self.labels[preimage] == label);
                if consistent {
                    if self.action.complete_at[s_idx] == depth + 1 {
                        dead = true;
                        break;
                    }
                    next.push(s);
                }
            }
            if dead {
                continue;
            }
            let survivors_next = std::mem::take(&mut next);
            let found = self.dfs(depth + 1, used.max(label), &survivors_next)?;
            next = survivors_next;
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn random_prepass(action: &PointAction, k: u32, trials: usize, rng: &mut ChaCha8Rng) -> bool {
    let mut labels = vec![1u32; action.points];
    (0..trials).any(|_| {
        labels.iter_mut().for_each(|l| *l = rng.gen_range(1..=k));
        action.breaks_all(&labels)
    })
}

struct Minimum {
    value: usize,
    labels: Vec<u32>,
    nodes: u64,
    prepass_hits: usize,
}

fn minimum_distinguishing(action: &PointAction, limits: &SearchLimits) -> Result<Minimum> {
    if action.forward.is_empty() {
        return Ok(Minimum {
            value: 1,
            labels: vec![1; action.points],
            nodes: 0,
            prepass_hits: 0,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
    let all: Vec<u32> = (0..action.forward.len() as u32).collect();
    let mut nodes = 0;
    let mut prepass_hits = 0;
    for k in 1..=action.points.max(1) {
        if limits.random_prepass > 0
            && random_prepass(action, k as u32, limits.random_prepass, &mut rng)
        {
            prepass_hits += 1;
        }
        let mut search = LabelSearch {
            action,
            k: k as u32,
            cap: limits.labeling_cap,
            nodes: 0,
            labels: vec![0; action.points],
        };
        let found = search.dfs(0, 0, &all)?;
        nodes += search.nodes;
        if found {
            return Ok(Minimum {
                value: k,
                labels: search.labels,
                nodes,
                prepass_hits,
            });
        }
    }
    unreachable!("all-distinct labels break every non-identity element")
}

/// `D(G)` for a precomputed `Aut(G)`.
pub fn distinguishing_number_with(
    g: &Graph,
    group: &AutomorphismGroup,
    limits: &SearchLimits,
) -> Result<DistinguishingReport<VertexLabeling>> {
    let perms = group.non_identity().map(|p| p.images().to_vec()).collect();
    let action = PointAction::new(g.order(), perms);
    let min = minimum_distinguishing(&action, limits)?;
    Ok(DistinguishingReport {
        value: min.value,
        witness: VertexLabeling::new(min.labels)?,
        labelings_tested: min.nodes,
        group_order: group.order(),
        random_prepass_hits: min.prepass_hits,
    })
}

pub fn distinguishing_number(
    g: &Graph,
    limits: &SearchLimits,
) -> Result<DistinguishingReport<VertexLabeling>> {
    let group = enumerate_automorphisms(g, limits)?;
    distinguishing_number_with(g, &group, limits)
}

/// `D'(G)` for a precomputed `Aut(G)`.
pub fn distinguishing_index_with(
    g: &Graph,
    group: &AutomorphismGroup,
    limits: &SearchLimits,
) -> Result<DistinguishingReport<EdgeLabeling>> {
    if g.size() == 0 {
        return Err(Error::InvalidArgument(
            "distinguishing index needs at least one edge".into(),
        ));
    }
    let mut perms = Vec::with_capacity(group.order());
    for p in group.non_identity() {
        let images = edge_images(g, p);
        if images.iter().enumerate().all(|(e, &f)| e == f as usize) {
            return Err(Error::EdgeDegenerate);
        }
        perms.push(images);
    }
    let action = PointAction::new(g.size(), perms);
    let min = minimum_distinguishing(&action, limits)?;
    Ok(DistinguishingReport {
        value: min.value,
        witness: EdgeLabeling::new(g, min.labels)?,
        labelings_tested: min.nodes,
        group_order: group.order(),
        random_prepass_hits: min.prepass_hits,
    })
}

pub fn distinguishing_index(
    g: &Graph,
    limits: &SearchLimits,
) -> Result<DistinguishingReport<EdgeLabeling>> {
    let group = enumerate_automorphisms(g, limits)?;
    distinguishing_index_with(g, &group, limits)
}

/// `⌈(1 + √(8n+1)) / 2⌉`, the distinguishing number of `F_n`.
pub fn friendship_formula(n: u64) -> u64 {
    // least t with t(t-1) >= 2n equals the ceiling above
    let mut t = ((1.0 + ((8 * n + 1) as f64).sqrt()) / 2.0).ceil() as u64;
    while t > 1 && (t - 1) * (t - 2) >= 2 * n {
        t -= 1;
    }
    while t * (t - 1) < 2 * n {
        t += 1;
    }
    t
}

/// `⌈√((1 + √(8n+1)) / 2)⌉`, the distinguishing number of `F_n ⋆ K1`.
pub fn friendship_splitting_formula(n: u64) -> u64 {
    // least s with (s^4 - s^2)/2 >= n
    let mut s = (((1.0 + ((8 * n + 1) as f64).sqrt()) / 2.0).sqrt()).ceil() as u64;
    while s > 1 && blade_capacity(s - 1) >= n {
        s -= 1;
    }
    while blade_capacity(s) < n {
        s += 1;
    }
    s
}

/// `(s^4 - s^2) / 2`: blades distinguishable with `s` labels.
pub fn blade_capacity(s: u64) -> u64 {
    (s.pow(4) - s.pow(2)) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::splitting_graph;
    use crate::families::{complete, cycle, friendship, path, random_connected_graph, star};
    use crate::graph::Permutation;

    fn limits() -> SearchLimits {
        SearchLimits::default()
    }

    fn aut(g: &Graph) -> AutomorphismGroup {
        enumerate_automorphisms(g, &limits()).unwrap()
    }

    /// Every labeling with labels in 1..=k, checked directly.
    fn exists_by_brute_force(points: usize, k: u32, breaks: impl Fn(&[u32]) -> bool) -> bool {
        let mut labels = vec![1u32; points];
        loop {
            if breaks(&labels) {
                return true;
            }
            let mut i = 0;
            while i < points && labels[i] == k {
                labels[i] = 1;
                i += 1;
            }
            if i == points {
                return false;
            }
            labels[i] += 1;
        }
    }

    fn brute_force_number(g: &Graph) -> usize {
        let group = aut(g);
        (1..=g.order() as u32)
            .find(|&k| {
                exists_by_brute_force(g.order(), k, |l| {
                    is_distinguishing_vertex(g, &group, &VertexLabeling::new(l.to_vec()).unwrap())
                        .unwrap()
                })
            })
            .unwrap() as usize
    }

    fn brute_force_index(g: &Graph) -> usize {
        let group = aut(g);
        (1..=g.size() as u32)
            .find(|&k| {
                exists_by_brute_force(g.size(), k, |l| {
                    is_distinguishing_edge(g, &group, &EdgeLabeling::new(g, l.to_vec()).unwrap())
                        .unwrap()
                })
            })
            .unwrap() as usize
    }

    #[test]
    fn vertex_check_examples() {
        let k2 = complete(2).unwrap();
        let group = aut(&k2);
        let check = |l: Vec<u32>| {
            is_distinguishing_vertex(&k2, &group, &VertexLabeling::new(l).unwrap()).unwrap()
        };
        assert!(!check(vec![1, 1]));
        assert!(check(vec![1, 2]));
        let s3 = star(3).unwrap();
        let l = VertexLabeling::new(vec![1, 1, 2, 3]).unwrap();
        assert!(is_distinguishing_vertex(&s3, &aut(&s3), &l).unwrap());
        assert!(is_distinguishing_vertex(&s3, &aut(&s3), &VertexLabeling::uniform(3)).is_err());
    }

    #[test]
    fn edge_check_examples() {
        let p3 = path(3).unwrap();
        let group = aut(&p3);
        let check = |l: Vec<u32>| {
            is_distinguishing_edge(&p3, &group, &EdgeLabeling::new(&p3, l).unwrap()).unwrap()
        };
        assert!(!check(vec![1, 1]));
        assert!(check(vec![1, 2]));
        let k2 = complete(2).unwrap();
        for l in [1, 2] {
            let labeling = EdgeLabeling::new(&k2, vec![l]).unwrap();
            assert!(!is_distinguishing_edge(&k2, &aut(&k2), &labeling).unwrap());
        }
        let other = EdgeLabeling::new(&k2, vec![1]).unwrap();
        assert!(is_distinguishing_edge(&p3, &group, &other).is_err());
    }

    #[test]
    fn complete_graphs_need_all_labels() {
        for n in 1..=6 {
            let r = distinguishing_number(&complete(n).unwrap(), &limits()).unwrap();
            assert_eq!(r.value, n);
            assert_eq!(
                r.witness.labels(),
                (1..=n as u32).collect::<Vec<_>>().as_slice()
            );
        }
    }

    #[test]
    fn friendship_number_matches_formula() {
        for n in 2..=6 {
            let r = distinguishing_number(&friendship(n).unwrap(), &limits()).unwrap();
            assert_eq!(r.value as u64, friendship_formula(n as u64), "F_{n}");
        }
        assert_eq!(friendship_formula(2), 3);
        assert_eq!(friendship_formula(6), 4);
    }

    #[test]
    fn friendship_splitting_matches_formula() {
        for n in 2..=4 {
            let c = splitting_graph(&friendship(n).unwrap()).unwrap();
            let r = distinguishing_number(&c.graph, &limits()).unwrap();
            assert_eq!(r.value as u64, friendship_splitting_formula(n as u64));
            assert_eq!(r.value, 2);
        }
    }

    #[test]
    fn index_examples() {
        for n in 2..=5 {
            let r = distinguishing_index(&star(n).unwrap(), &limits()).unwrap();
            assert_eq!(r.value, n);
        }
        for n in 2..=4 {
            let c = splitting_graph(&star(n).unwrap()).unwrap();
            assert_eq!(distinguishing_index(&c.graph, &limits()).unwrap().value, n);
        }
        let p4 = distinguishing_index(&path(4).unwrap(), &limits()).unwrap();
        assert_eq!(p4.value, 2);
        assert_eq!(p4.value, brute_force_index(&path(4).unwrap()));
        assert_eq!(
            distinguishing_index(&complete(2).unwrap(), &limits()),
            Err(Error::EdgeDegenerate)
        );
        assert!(distinguishing_index(&complete(1).unwrap(), &limits()).is_err());
    }

    #[test]
    fn oracle_matches_brute_force() {
        let mut graphs = vec![
            cycle(5).unwrap(),
            cycle(6).unwrap(),
            star(4).unwrap(),
            path(5).unwrap(),
            friendship(2).unwrap(),
        ];
        graphs.extend((0..12).map(|s| random_connected_graph(3 + s as usize % 4, s).unwrap()));
        for g in &graphs {
            let r = distinguishing_number(g, &limits()).unwrap();
            assert_eq!(r.value, brute_force_number(g), "{:?}", g.edges());
            assert_eq!(r.witness.label_count(), r.value);
            assert!(is_distinguishing_vertex(g, &aut(g), &r.witness).unwrap());
            if g.order() > 2 {
                let e = distinguishing_index(g, &limits()).unwrap();
                assert_eq!(e.value, brute_force_index(g), "{:?}", g.edges());
                assert!(is_distinguishing_edge(g, &aut(g), &e.witness).unwrap());
            }
        }
    }

    #[test]
    fn witness_is_lexicographically_least() {
        // P3: [1,1,2] is the least 2-labeling fixed only by the identity
        let r = distinguishing_number(&path(3).unwrap(), &limits()).unwrap();
        assert_eq!(r.witness.labels(), &[1, 1, 2]);
        let r = distinguishing_number(&cycle(4).unwrap(), &limits()).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.witness.labels(), &[1, 1, 2, 3]);
    }

    #[test]
    fn asymmetric_graph_needs_one_label() {
        // smallest asymmetric tree-like graph: path 0-1-2-3-4 with 5 on 1 and 6 on 5
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 6), (2, 6)]).unwrap();
        let group = aut(&g);
        let r = distinguishing_number_with(&g, &group, &limits()).unwrap();
        assert_eq!(r.value == 1, group.is_trivial());
    }

    #[test]
    fn monotone_witness() {
        let g = friendship(3).unwrap();
        let group = aut(&g);
        let r = distinguishing_number_with(&g, &group, &limits()).unwrap();
        let fresh = r.value as u32 + 1;
        for v in 0..g.order() {
            let mut labels = r.witness.labels().to_vec();
            labels[v] = fresh;
            let l = VertexLabeling::new(labels).unwrap();
            assert!(is_distinguishing_vertex(&g, &group, &l).unwrap());
        }
    }

    #[test]
    fn labeling_cap() {
        let tight = SearchLimits {
            labeling_cap: 3,
            ..limits()
        };
        assert!(matches!(
            distinguishing_number(&complete(5).unwrap(), &tight),
            Err(Error::LabelingCapExceeded { .. })
        ));
    }

    #[test]
    fn random_prepass_does_not_change_answer() {
        let g = friendship(4).unwrap();
        let plain = distinguishing_number(&g, &limits()).unwrap();
        let with = distinguishing_number(
            &g,
            &SearchLimits {
                random_prepass: 50,
                seed: 7,
                ..limits()
            },
        )
        .unwrap();
        assert_eq!(plain.value, with.value);
        assert_eq!(plain.witness, with.witness);
    }

    #[test]
    fn closed_forms() {
        for n in 1..5000u64 {
            let t = friendship_formula(n);
            assert!(t * (t - 1) >= 2 * n && (t - 1) * (t - 2) < 2 * n);
            let exact = ((1.0 + ((8 * n + 1) as f64).sqrt()) / 2.0).ceil() as u64;
            assert_eq!(t, exact, "n = {n}");
            let s = friendship_splitting_formula(n);
            let min = (1..).find(|&s| blade_capacity(s) >= n).unwrap();
            assert_eq!(s, min, "n = {n}");
        }
        assert_eq!(blade_capacity(2), 6);
        assert_eq!(friendship_splitting_formula(6), 2);
        assert_eq!(friendship_splitting_formula(7), 3);
    }

    #[test]
    fn transposition_only_group() {
        // K2 plus an isolated vertex: only the swap is non-trivial
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let group = aut(&g);
        assert_eq!(group.order(), 2);
        assert!(group.contains(&Permutation::transposition(3, 0, 1).unwrap()));
        assert_eq!(
            distinguishing_number_with(&g, &group, &limits())
                .unwrap()
                .value,
            2
        );
    }
}
