//! Hypergraph data model and the per-edge colouring and weighting types.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::scalar::ExactField;

/// A finite hypergraph on vertices `0..n_vertices`.
///
/// Edges form a list, so repeated hyperedges are allowed and counted
/// separately in degrees. Each edge is a non-empty set of distinct vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n_vertices: usize,
    edges: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n_vertices: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut incidence = vec![Vec::new(); n_vertices];
        for (e, edge) in edges.iter().enumerate() {
            if edge.is_empty() {
                return Err(Error::EmptyEdge { edge: e });
            }
            for (pos, &v) in edge.iter().enumerate() {
                if v >= n_vertices {
                    return Err(Error::VertexOutOfRange { vertex: v, n_vertices });
                }
                if edge[..pos].contains(&v) {
                    return Err(Error::DuplicateVertex { edge: e, vertex: v });
                }
                incidence[v].push(e);
            }
        }
        Ok(Hypergraph {
            n_vertices,
            edges,
            incidence,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &[usize] {
        &self.edges[e]
    }

    /// Ids of the edges containing `v`, ascending.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.incidence
            .get(v)
            .map(Vec::len)
            .ok_or(Error::VertexOutOfRange {
                vertex: v,
                n_vertices: self.n_vertices,
            })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    /// Minimum degree; an error when there are no vertices.
    pub fn min_degree(&self) -> Result<usize> {
        self.incidence
            .iter()
            .map(Vec::len)
            .min()
            .ok_or_else(|| Error::precondition("minimum degree of a hypergraph with no vertices"))
    }

    /// Maximum degree, 0 when there are no vertices.
    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Largest edge size. Zero only for a hypergraph without edges.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_linear(&self) -> bool {
        self.linearity_witness().is_none()
    }

    /// First pair of edges (in scan order) sharing two or more vertices,
    /// with the size of their intersection.
    pub fn linearity_witness(&self) -> Option<(usize, usize, usize)> {
        let mut first_owner: HashMap<(usize, usize), usize> = HashMap::new();
        for (e, edge) in self.edges.iter().enumerate() {
            for (i, &a) in edge.iter().enumerate() {
                for &b in &edge[i + 1..] {
                    let key = (a.min(b), a.max(b));
                    match first_owner.get(&key) {
                        Some(&other) => {
                            let shared = self.edges[other]
                                .iter()
                                .filter(|v| edge.contains(v))
                                .count();
                            return Some((other, e, shared));
                        }
                        None => {
                            first_owner.insert(key, e);
                        }
                    }
                }
            }
        }
        None
    }

    /// Same vertex set, keeping only the listed edges (in the given order).
    pub fn restrict_edges(&self, keep: &[usize]) -> Hypergraph {
        let edges = keep.iter().map(|&e| self.edges[e].clone()).collect();
        Hypergraph::new(self.n_vertices, edges).expect("sub-hypergraph of a valid hypergraph")
    }
}

/// An edge colouring with colours `1..=palette`, aligned with
/// [`Hypergraph::edges`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Colouring {
    colours: Vec<usize>,
    palette: usize,
}

impl Colouring {
    pub fn new(colours: Vec<usize>, palette: usize) -> Result<Self> {
        if let Some(&bad) = colours.iter().find(|&&c| c == 0 || c > palette) {
            return Err(Error::OutOfRange {
                what: "colour",
                value: bad.to_string(),
                range: format!("[1, {palette}]"),
            });
        }
        Ok(Colouring { colours, palette })
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour(&self, e: usize) -> usize {
        self.colours[e]
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Largest colour actually used, 0 for an empty colouring.
    pub fn max_used(&self) -> usize {
        self.colours.iter().copied().max().unwrap_or(0)
    }

    pub fn into_colours(self) -> Vec<usize> {
        self.colours
    }
}

/// One weight in `[0, 1]` per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weights<T> {
    weights: Vec<T>,
}

impl<T: ExactField> Weights<T> {
    pub fn new(weights: Vec<T>) -> Result<Self> {
        if let Some(bad) = weights.iter().find(|w| !w.in_unit_interval()) {
            return Err(Error::OutOfRange {
                what: "weight",
                value: bad.to_string(),
                range: "[0, 1]".into(),
            });
        }
        Ok(Weights { weights })
    }

    pub fn constant(value: T, len: usize) -> Result<Self> {
        Self::new(vec![value; len])
    }

    pub fn as_slice(&self) -> &[T] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// True when every entry is exactly 0 or 1.
    pub fn is_integral(&self) -> bool {
        self.weights.iter().all(ExactField::is_boolean)
    }

    /// `sum_{e ∋ v} w(e)` for every vertex.
    pub fn vertex_sums(&self, h: &Hypergraph) -> Vec<T> {
        (0..h.n_vertices())
            .map(|v| {
                h.incident(v)
                    .iter()
                    .fold(T::zero(), |acc, &e| acc + self.weights[e].clone())
            })
            .collect()
    }

    pub fn into_vec(self) -> Vec<T> {
        self.weights
    }
}

impl<T> std::ops::Index<usize> for Weights<T> {
    type Output = T;

    fn index(&self, e: usize) -> &T {
        &self.weights[e]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    fn triangle() -> Hypergraph {
        h(3, &[&[0, 1], &[1, 2], &[0, 2]])
    }

    #[test]
    fn triangle_quantities() {
        let t = triangle();
        assert_eq!(t.degree(0).unwrap(), 2);
        assert_eq!(t.min_degree().unwrap(), 2);
        assert_eq!(t.rank(), 2);
        assert!(t.is_linear());
    }

    #[test]
    fn empty_edge_list_has_zero_degrees() {
        let g = h(4, &[]);
        assert!((0..4).all(|v| g.degree(v).unwrap() == 0));
        assert_eq!(g.min_degree().unwrap(), 0);
        assert_eq!(g.rank(), 0);
    }

    #[test]
    fn multi_edges_count_separately() {
        let g = h(2, &[&[0, 1], &[0, 1], &[0, 1]]);
        assert_eq!(g.degree(1).unwrap(), 3);
        assert!(!g.is_linear());
        assert_eq!(g.linearity_witness(), Some((0, 1, 2)));
    }

    #[test]
    fn repeated_singletons_are_linear() {
        assert!(h(1, &[&[0], &[0]]).is_linear());
    }

    #[test]
    fn linearity_examples() {
        assert!(!h(4, &[&[0, 1, 2], &[0, 1, 3]]).is_linear());
        assert!(h(6, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0]]).is_linear());
    }

    #[test]
    fn degree_out_of_range() {
        assert!(matches!(
            triangle().degree(3),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn min_degree_without_vertices_is_error() {
        assert!(h(0, &[]).min_degree().is_err());
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(
            Hypergraph::new(2, vec![vec![]]),
            Err(Error::EmptyEdge { edge: 0 })
        ));
        assert!(matches!(
            Hypergraph::new(2, vec![vec![0, 0]]),
            Err(Error::DuplicateVertex { edge: 0, vertex: 0 })
        ));
        assert!(Hypergraph::new(2, vec![vec![0, 2]]).is_err());
    }

    #[test]
    fn colouring_range() {
        assert!(Colouring::new(vec![1, 3], 3).is_ok());
        assert!(Colouring::new(vec![0], 3).is_err());
        assert!(Colouring::new(vec![4], 3).is_err());
    }

    #[test]
    fn weights_range_and_sums() {
        assert!(Weights::new(vec![Rational::from_nat(2)]).is_err());
        let w = Weights::new(vec![Rational::half(), Rational::from_nat(1), Rational::ratio(1, 4)])
            .unwrap();
        let sums = w.vertex_sums(&triangle());
        assert_eq!(sums[0], Rational::ratio(3, 4));
        assert_eq!(sums[1], Rational::ratio(3, 2));
        assert!(!w.is_integral());
    }
}
