use crate::error::{Error, Result};
use crate::hypergraph::{Colouring, Hypergraph};

/// A colour used more than `floor(d(v) / k)` times at a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Violation {
    pub vertex: usize,
    pub colour: usize,
    pub count: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    /// Sorted by vertex, then colour.
    pub violations: Vec<Violation>,
}

/// Checks the 1/k-majority condition at every vertex and colour.
pub fn verify(h: &Hypergraph, k: usize, c: &Colouring) -> Result<VerifyReport> {
    if k == 0 {
        return Err(Error::precondition("k must be positive"));
    }
    if c.len() != h.n_edges() {
        return Err(Error::LengthMismatch {
            what: "colours",
            expected: h.n_edges(),
            found: c.len(),
        });
    }
    let palette = c.palette().max(c.max_used());
    let mut counts = vec![0usize; palette + 1];
    let mut violations = Vec::new();
    for v in 0..h.n_vertices() {
        let incident = h.incident(v);
        let bound = incident.len() / k;
        counts.iter_mut().for_each(|n| *n = 0);
        for &e in incident {
            counts[c.colour(e)] += 1;
        }
        for (colour, &count) in counts.iter().enumerate().skip(1) {
            if count > bound {
                violations.push(Violation {
                    vertex: v,
                    colour,
                    count,
                    bound,
                });
            }
        }
    }
    Ok(VerifyReport {
        valid: violations.is_empty(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loops(d: usize) -> Hypergraph {
        Hypergraph::new(1, vec![vec![0]; d]).unwrap()
    }

    #[test]
    fn balanced_counts_are_valid() {
        let c = Colouring::new(vec![1, 1, 2, 3], 3).unwrap();
        assert!(verify(&loops(4), 2, &c).unwrap().valid);
    }

    #[test]
    fn overfull_colour_is_reported() {
        let c = Colouring::new(vec![1, 1, 1, 2, 3], 3).unwrap();
        let report = verify(&loops(5), 2, &c).unwrap();
        assert!(!report.valid);
        assert_eq!(
            report.violations,
            vec![Violation {
                vertex: 0,
                colour: 1,
                count: 3,
                bound: 2
            }]
        );
    }

    #[test]
    fn degree_k_needs_proper_colouring() {
        let tri = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert!(verify(&tri, 2, &Colouring::new(vec![1, 2, 3], 3).unwrap()).unwrap().valid);
        assert!(!verify(&tri, 2, &Colouring::new(vec![1, 1, 3], 3).unwrap()).unwrap().valid);
    }

    #[test]
    fn isolated_vertices_are_fine() {
        let h = Hypergraph::new(3, vec![vec![0]]).unwrap();
        let report = verify(&h, 2, &Colouring::new(vec![1], 3).unwrap()).unwrap();
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].vertex, 0);
    }

    #[test]
    fn length_mismatch() {
        let c = Colouring::new(vec![1], 3).unwrap();
        assert!(verify(&loops(2), 2, &c).is_err());
    }
}
