use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::{Witness, WitnessKind};
use crate::field::{Field, FieldElement, PowerTable, ResidueSet};
use crate::graph::Graph;

/// The vertex map `x ↦ a·x + b` with `a ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineMap {
    pub a: FieldElement,
    pub b: FieldElement,
}

impl AffineMap {
    pub fn apply(&self, field: &Field, x: FieldElement) -> FieldElement {
        field.add(field.mul(self.a, x), self.b)
    }

    /// Images of every vertex, indexed by vertex.
    fn images(&self, field: &Field, table: &PowerTable) -> Vec<u32> {
        field
            .elements()
            .map(|x| field.add(table.mul(self.a, x), self.b).index())
            .collect()
    }
}

/// Result of [`affine_transitivity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TransitivityReport {
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    /// Affine maps verified to be automorphisms.
    pub maps_checked: usize,
    pub vertex_orbit: usize,
    /// Orbit size of one ordered edge; compare with `2|E|`.
    pub arc_orbit: usize,
}

/// First pair `(u, v)`, `u < v`, on which the vertex map fails to preserve
/// adjacency (or, with `want_complement`, fails to invert it).
fn first_mismatch(g: &Graph, image: &[u32], want_complement: bool) -> Option<(usize, usize)> {
    let n = g.order();
    for u in 0..n {
        let iu = image[u] as usize;
        for v in u + 1..n {
            let mapped = g.adjacent(iu, image[v] as usize);
            if mapped != (g.adjacent(u, v) != want_complement) {
                return Some((u, v));
            }
        }
    }
    None
}

/// The least-index `r ∉ connection` for which `x ↦ r·x` is an isomorphism from
/// `g` onto its complement, checked pair by pair.
pub fn self_complementary_by_multiplier(
    g: &Graph,
    field: &Field,
    connection: &ResidueSet,
) -> Option<FieldElement> {
    let table = field.power_table();
    let nonzero: Vec<FieldElement> = field.nonzero_elements().collect();
    field.nonzero_elements().filter(|&r| !connection.contains(r)).find(|&r| {
        // For a Cayley graph, {0, v} ↦ {0, rv}; this screens candidates in O(q).
        let flips_star = nonzero
            .iter()
            .all(|&v| connection.contains(v) != connection.contains(table.mul(r, v)));
        if !flips_star {
            return false;
        }
        let image = AffineMap { a: r, b: FieldElement::ZERO }.images(field, &table);
        first_mismatch(g, &image, true).is_none()
    })
}

/// Verifies that every `x ↦ a·x + b` with `a ∈ connection` is an automorphism,
/// then measures the orbits of vertex `0` and of one ordered edge under the
/// group those maps generate.
///
/// Connection sets that are not closed under multiplication (such as the P*
/// set) fail the automorphism step and return a
/// [`WitnessKind::NonAutomorphism`] witness.
pub fn affine_transitivity(
    g: &Graph,
    field: &Field,
    connection: &ResidueSet,
) -> Result<TransitivityReport, Witness> {
    let q = field.q() as usize;
    assert_eq!(g.order(), q, "graph and field orders differ");
    let table = field.power_table();
    let mut maps_checked = 0;
    for a in connection.iter() {
        for b in field.elements() {
            let map = AffineMap { a, b };
            let image = map.images(field, &table);
            if let Some((u, v)) = first_mismatch_edges(g, &image) {
                return Err(Witness::new(
                    WitnessKind::NonAutomorphism {
                        a: a.index(),
                        b: b.index(),
                    },
                    vec![u, v],
                ));
            }
            maps_checked += 1;
        }
    }

    // {x ↦ a x + b : a ∈ S, b ∈ {0} ∪ basis} generates the same group as all
    // the verified maps: (a, e) ∘ (a, 0)^{-1} is translation by e.
    let mut shifts = vec![FieldElement::ZERO];
    shifts.extend((0..field.n()).map(|i| FieldElement::from_index(field.p().pow(i))));
    let generators: Vec<Vec<u32>> = connection
        .iter()
        .flat_map(|a| shifts.iter().map(move |&b| AffineMap { a, b }))
        .map(|m| m.images(field, &table))
        .collect();

    let vertex_orbit = orbit(0usize, &generators, |x, img| img[x] as usize).len();
    let (arc_orbit, edge_transitive) = match g.neighbors(0).iter().next() {
        None => (0, true),
        Some(v) => {
            let size = orbit((0usize, v), &generators, |(x, y), img| {
                (img[x] as usize, img[y] as usize)
            })
            .len();
            (size, size == 2 * g.edge_count())
        }
    };
    Ok(TransitivityReport {
        vertex_transitive: vertex_orbit == q,
        edge_transitive,
        maps_checked,
        vertex_orbit,
        arc_orbit,
    })
}

/// Like [`first_mismatch`] but only over edges: an injective map on a finite
/// graph that sends edges to edges is an automorphism.
fn first_mismatch_edges(g: &Graph, image: &[u32]) -> Option<(usize, usize)> {
    g.edges()
        .find(|&(u, v)| !g.adjacent(image[u] as usize, image[v] as usize))
}

fn orbit<T: Copy + Eq + std::hash::Hash>(
    start: T,
    generators: &[Vec<u32>],
    act: impl Fn(T, &[u32]) -> T,
) -> HashSet<T> {
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for img in generators {
            let y = act(x, img);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen
}
