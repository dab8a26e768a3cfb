//! Immutable undirected graphs with bitset adjacency, and the Cayley-graph
//! families built over finite fields.

mod export;
mod family;

pub use export::{export, parse_edge_list, Format};
pub use family::{build_cayley, build_family, Family, FamilySpec};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, ResidueSet};

/// The field and connection set a Cayley graph was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyData {
    pub field: Field,
    pub connection: ResidueSet,
}

/// Simple undirected graph on vertices `0..order`.
///
/// Rows are symmetric and the diagonal is empty. For Cayley graphs, vertex `i`
/// is the field element with index `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    rows: Vec<Bitset>,
    label: String,
    cayley: Option<CayleyData>,
}

impl Graph {
    pub(crate) fn from_rows(rows: Vec<Bitset>, label: String, cayley: Option<CayleyData>) -> Self {
        let g = Graph {
            order: rows.len(),
            rows,
            label,
            cayley,
        };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let mut rows = vec![Bitset::new(order); order];
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::Precondition(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{order}"
                )));
            }
            if u == v {
                return Err(Error::Precondition(format!("loop at vertex {u}")));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph::from_rows(rows, label.into(), None))
    }

    pub fn empty(order: usize) -> Self {
        Graph::from_rows(vec![Bitset::new(order); order], format!("E{order}"), None)
    }

    pub fn complete(order: usize) -> Self {
        let rows = (0..order)
            .map(|u| Bitset::from_indices(order, (0..order).filter(|&v| v != u)))
            .collect();
        Graph::from_rows(rows, format!("K{order}"), None)
    }

    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3, "cycles need at least 3 vertices");
        let edges = (0..order).map(|u| (u, (u + 1) % order));
        Graph::from_edges(order, edges, format!("C{order}")).unwrap()
    }

    pub fn path(order: usize) -> Self {
        let edges = (1..order).map(|u| (u - 1, u));
        Graph::from_edges(order, edges, format!("P{order}")).unwrap()
    }

    fn is_well_formed(&self) -> bool {
        (0..self.order).all(|u| {
            self.rows[u].len() == self.order
                && !self.rows[u].contains(u)
                && self.rows[u].iter().all(|v| self.rows[v].contains(u))
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn cayley(&self) -> Option<&CayleyData> {
        self.cayley.as_ref()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> &Bitset {
        &self.rows[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(Bitset::count).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Same vertex set, adjacency flipped off the diagonal. The complement of a
    /// Cayley graph is the Cayley graph of the complementary connection set.
    pub fn complement(&self) -> Graph {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(u, row)| {
                let mut c = row.complement();
                c.remove(u);
                c
            })
            .collect();
        let cayley = self.cayley.as_ref().map(|c| CayleyData {
            field: c.field.clone(),
            connection: c.connection.complement(&c.field),
        });
        Graph::from_rows(rows, format!("complement({})", self.label), cayley)
    }

    /// Element string for Cayley graphs, the plain index otherwise.
    pub fn vertex_name(&self, u: usize) -> String {
        match &self.cayley {
            Some(c) => c.field.format(FieldElement::from_index(u as u32)),
            None => u.to_string(),
        }
    }

    /// Same adjacency, ignoring labels and provenance.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.order == other.order && self.rows == other.rows
    }
}

/// Free-function form of [`Graph::complement`].
pub fn complement(g: &Graph) -> Graph {
    g.complement()
}
