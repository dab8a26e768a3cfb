//! Checkers for the graph-theoretic properties of the Paley family.
//!
//! Every negative answer comes with a [`Witness`] that can be replayed against
//! the graph to reproduce the failure.

mod adjacency;
mod srg;
mod symmetry;

pub use adjacency::{n_ec_check, n_ec_check_with, pmnk_check, pmnk_check_with, SearchOptions, Verdict};
pub use srg::{srg_check, SrgParams};
pub use symmetry::{affine_transitivity, self_complementary_by_multiplier, AffineMap, TransitivityReport};

use std::collections::VecDeque;

use serde::Serialize;

use crate::bitset::Bitset;
use crate::field::FieldElement;
use crate::graph::Graph;

/// What a [`Witness`] demonstrates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessKind {
    /// `vertices = [u, v]` have different degrees.
    NonRegularPair,
    /// `vertices = [a, b, c, d]`: pairs `{a,b}` and `{c,d}` are both edges or
    /// both non-edges but have different numbers of common neighbours.
    SrgViolation,
    /// The graph has no adjacent pair or no non-adjacent pair, so `λ` or `μ`
    /// is undefined.
    DegenerateSrg,
    /// `vertices = [u, v]` lie in different components.
    DisconnectedPair,
    /// No vertex outside `s` is joined to exactly `t` within `s`.
    EcFailure { s: Vec<usize>, t: Vec<usize> },
    /// Fewer than `k` vertices are joined to all of `a` and none of `b`.
    PmnkFailure { a: Vec<usize>, b: Vec<usize>, found: usize, required: usize },
    /// `x ↦ a·x + b` maps the pair `vertices = [u, v]` across the edge/non-edge divide.
    NonAutomorphism { a: u32, b: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(flatten)]
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
}

impl Witness {
    fn new(kind: WitnessKind, vertices: Vec<usize>) -> Self {
        Witness { kind, vertices }
    }

    /// Re-checks the witness against `g`; `true` when the failure reproduces.
    pub fn replay(&self, g: &Graph) -> bool {
        let v = &self.vertices;
        match &self.kind {
            WitnessKind::NonRegularPair => g.degree(v[0]) != g.degree(v[1]),
            WitnessKind::SrgViolation => {
                let common = |x: usize, y: usize| g.neighbors(x).intersection_count(g.neighbors(y));
                g.adjacent(v[0], v[1]) == g.adjacent(v[2], v[3])
                    && common(v[0], v[1]) != common(v[2], v[3])
            }
            WitnessKind::DegenerateSrg => {
                let m = g.edge_count();
                let n = g.order();
                m == 0 || 2 * m == n * n.saturating_sub(1)
            }
            WitnessKind::DisconnectedPair => {
                let comps = components(g);
                let find = |x| comps.iter().position(|c| c.contains(&x));
                find(v[0]) != find(v[1])
            }
            WitnessKind::EcFailure { s, t } => (0..g.order())
                .filter(|x| !s.contains(x))
                .all(|x| s.iter().any(|&y| g.adjacent(x, y) != t.contains(&y))),
            WitnessKind::PmnkFailure { a, b, required, .. } => {
                (0..g.order())
                    .filter(|x| !a.contains(x) && !b.contains(x))
                    .filter(|&x| a.iter().all(|&y| g.adjacent(x, y)) && b.iter().all(|&y| !g.adjacent(x, y)))
                    .count()
                    < *required
            }
            WitnessKind::NonAutomorphism { a, b } => {
                let Some(c) = g.cayley() else { return false };
                let map = AffineMap {
                    a: FieldElement::from_index(*a),
                    b: FieldElement::from_index(*b),
                };
                let (x, y) = (v[0], v[1]);
                let fx = map.apply(&c.field, FieldElement::from_index(x as u32)).index() as usize;
                let fy = map.apply(&c.field, FieldElement::from_index(y as u32)).index() as usize;
                g.adjacent(x, y) != g.adjacent(fx, fy)
            }
        }
    }
}

/// The common degree, or a pair of vertices with different degrees.
pub fn is_regular(g: &Graph) -> Result<usize, Witness> {
    if g.order() == 0 {
        return Ok(0);
    }
    let k = g.degree(0);
    match (1..g.order()).find(|&u| g.degree(u) != k) {
        None => Ok(k),
        Some(u) => Err(Witness::new(WitnessKind::NonRegularPair, vec![0, u])),
    }
}

pub fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|u| g.degree(u) == n - 1)
}

/// Connected components by BFS; each sorted, ordered by least vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = Bitset::new(n);
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        seen.insert(start);
        queue.push_back(start);
        let mut comp = Vec::new();
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for v in g.neighbors(u).iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// `Ok` when connected, otherwise a pair from the first two components.
pub fn is_connected(g: &Graph) -> Result<(), Witness> {
    let comps = components(g);
    if comps.len() <= 1 {
        Ok(())
    } else {
        Err(Witness::new(
            WitnessKind::DisconnectedPair,
            vec![comps[0][0], comps[1][0]],
        ))
    }
}

/// Connected and 2-regular.
pub fn iso_to_cycle(g: &Graph) -> bool {
    g.order() >= 3 && is_regular(g) == Ok(2) && is_connected(g).is_ok()
}

pub fn iso_to_complete(g: &Graph) -> bool {
    is_complete(g)
}
