//! Discrepancy rounding of fractional edge weights.
//!
//! Given `z: E -> [0, 1]` on a hypergraph of rank `r`, [`round_weights`]
//! returns `x: E -> {0, 1}` with
//!
//! ```text
//! sum_{e ∋ v} z(e) - r  <  sum_{e ∋ v} x(e)  <  sum_{e ∋ v} z(e) + r
//! ```
//!
//! at every vertex. Vertices meeting at least `r + 1` fractional edges are
//! *constrained*: their weighted sums are held fixed while the fractional
//! weights walk along a kernel direction of the constrained incidence matrix
//! until some edge hits 0 or 1. Once no vertex is constrained, every vertex
//! has at most `r` fractional edges, each off by less than 1 after
//! thresholding, so the bound is strict.

use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Weights};
use crate::scalar::ExactField;

/// One pass of the kernel walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundingStep<T> {
    /// Number of constrained vertices (rows of the system).
    pub constrained: usize,
    /// Fractional edges before the step.
    pub fractional: usize,
    pub step: T,
    /// Edges that became integral during this step, ascending.
    pub fixed: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundingTrace<T> {
    pub iterations: Vec<RoundingStep<T>>,
}

impl<T> Default for RoundingTrace<T> {
    fn default() -> Self {
        RoundingTrace {
            iterations: Vec::new(),
        }
    }
}

impl<T: fmt::Display> fmt::Display for RoundingTrace<T> {
    /// `iter <i> fixed <edge-ids> step <p/q>` per line, ids 1-based and
    /// comma-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, it) in self.iterations.iter().enumerate() {
            let ids: Vec<String> = it.fixed.iter().map(|e| (e + 1).to_string()).collect();
            writeln!(f, "iter {} fixed {} step {}", i + 1, ids.join(","), it.step)?;
        }
        Ok(())
    }
}

/// Constraint matrix of one iteration: rows are constrained vertices,
/// columns are the fractional edges meeting them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct System<T> {
    pub rows: Vec<usize>,
    pub columns: Vec<usize>,
    pub matrix: Vec<Vec<T>>,
}

/// Working state of the kernel walk.
#[derive(Debug, Clone)]
pub struct RoundingState<'a, T> {
    h: &'a Hypergraph,
    rank: usize,
    values: Vec<T>,
    fractional: Vec<bool>,
    frac_degree: Vec<usize>,
}

impl<'a, T: ExactField> RoundingState<'a, T> {
    pub fn new(h: &'a Hypergraph, z: &Weights<T>) -> Result<Self> {
        if z.len() != h.n_edges() {
            return Err(Error::LengthMismatch {
                what: "weights",
                expected: h.n_edges(),
                found: z.len(),
            });
        }
        let values = z.as_slice().to_vec();
        let fractional: Vec<bool> = values.iter().map(|w| !w.is_boolean()).collect();
        let frac_degree = (0..h.n_vertices())
            .map(|v| h.incident(v).iter().filter(|&&e| fractional[e]).count())
            .collect();
        Ok(RoundingState {
            h,
            rank: h.rank(),
            values,
            fractional,
            frac_degree,
        })
    }

    /// Current weight of every edge (integral entries are final).
    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn is_fractional(&self, e: usize) -> bool {
        self.fractional[e]
    }

    pub fn fractional_edges(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&e| self.fractional[e]).collect()
    }

    pub fn frac_degree(&self, v: usize) -> usize {
        self.frac_degree[v]
    }

    /// Vertices with at least `r + 1` fractional edges, ascending.
    pub fn constrained(&self) -> Vec<usize> {
        (0..self.h.n_vertices())
            .filter(|&v| self.frac_degree[v] > self.rank)
            .collect()
    }

    /// Incidence matrix restricted to `rows` and the fractional edges
    /// touching them.
    ///
    /// Each row has at least `r + 1` ones and each column at most `r`, so
    /// there are strictly more columns than rows.
    pub fn build_system(&self, rows: &[usize]) -> System<T> {
        self.build_system_truncated(rows, usize::MAX)
    }

    fn build_system_truncated(&self, rows: &[usize], width: usize) -> System<T> {
        assert!(!rows.is_empty(), "build_system needs a constrained vertex");
        let mut touched = vec![false; self.values.len()];
        for &v in rows {
            for &e in self.h.incident(v) {
                touched[e] |= self.fractional[e];
            }
        }
        let mut columns: Vec<usize> = (0..touched.len()).filter(|&e| touched[e]).collect();
        assert!(
            columns.len() > rows.len(),
            "constrained system has {} columns for {} rows",
            columns.len(),
            rows.len()
        );
        columns.truncate(width);
        let matrix = rows
            .iter()
            .map(|&v| {
                columns
                    .iter()
                    .map(|&e| {
                        if self.h.edge(e).contains(&v) {
                            T::one()
                        } else {
                            T::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        System {
            rows: rows.to_vec(),
            columns,
            matrix,
        }
    }

    /// Runs one iteration of the walk, or returns `None` when no vertex is
    /// constrained.
    pub fn step(&mut self) -> Option<RoundingStep<T>> {
        let rows = self.constrained();
        if rows.is_empty() {
            return None;
        }
        // The kernel walk only looks at the first rows + 1 columns.
        let mut system = self.build_system_truncated(&rows, rows.len() + 1);
        let direction = incidence_kernel::<T>(&system)
            .unwrap_or_else(|| kernel_direction(&system.matrix, system.columns.len()))
            .expect("more columns than rows implies a nontrivial kernel");
        system.columns.truncate(direction.len());
        let current: Vec<T> = system
            .columns
            .iter()
            .map(|&e| self.values[e].clone())
            .collect();
        let (step, hits) = step_to_boundary(&current, &direction);

        let fractional = self.fractional.iter().filter(|f| **f).count();
        for (j, &e) in system.columns.iter().enumerate() {
            if !direction[j].is_zero() {
                self.values[e] = current[j].clone() + step.clone() * direction[j].clone();
            }
        }
        let fixed: Vec<usize> = hits.iter().map(|&j| system.columns[j]).collect();
        for &e in &fixed {
            debug_assert!(self.values[e].is_boolean());
            self.fractional[e] = false;
            for &v in self.h.edge(e) {
                self.frac_degree[v] -= 1;
            }
        }
        Some(RoundingStep {
            constrained: rows.len(),
            fractional,
            step,
            fixed,
        })
    }

    /// Thresholds the remaining fractional edges at 1/2 (ties go to 1).
    pub fn finalize(self) -> Weights<T> {
        assert!(
            self.frac_degree.iter().all(|&d| d <= self.rank),
            "finalize called with a constrained vertex left"
        );
        let half = T::half();
        let values = self
            .values
            .into_iter()
            .zip(&self.fractional)
            .map(|(w, &frac)| {
                if !frac {
                    w
                } else if w >= half {
                    T::one()
                } else {
                    T::zero()
                }
            })
            .collect();
        Weights::new(values).expect("0/1 weights")
    }
}

/// Rounds `z` to a 0/1 weighting whose vertex sums differ from those of `z`
/// by strictly less than the rank. Entries already 0 or 1 are kept.
pub fn round_weights<T: ExactField>(
    h: &Hypergraph,
    z: &Weights<T>,
) -> Result<(Weights<T>, RoundingTrace<T>)> {
    let mut state = RoundingState::new(h, z)?;
    let mut trace = RoundingTrace::default();
    while let Some(step) = state.step() {
        trace.iterations.push(step);
    }
    Ok((state.finalize(), trace))
}

/// A nonzero vector in the kernel of `a` (`cols` columns), by exact
/// elimination in column order.
///
/// The first free column gets 1, other free columns 0, and the result is
/// negated if needed so its first nonzero entry is positive. Only the first
/// `rows + 1` columns can hold the first free column, so elimination stops
/// there. Returns `None` when the kernel is trivial.
pub fn kernel_direction<T: ExactField>(a: &[Vec<T>], cols: usize) -> Option<Vec<T>> {
    let width = cols.min(a.len() + 1);
    let mut m: Vec<Vec<T>> = a.iter().map(|row| row[..width].to_vec()).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();

    for col in 0..width {
        let next = pivots.len();
        let Some(p) = (next..m.len()).find(|&r| !m[r][col].is_zero()) else {
            return Some(direction_from(&m, &pivots, col, cols));
        };
        m.swap(next, p);
        let inv = T::one() / m[next][col].clone();
        for x in &mut m[next][col..] {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = m[next].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for c in col..width {
                row[c] = row[c].clone() - factor.clone() * pivot_row[c].clone();
            }
        }
        pivots.push((next, col));
    }
    None
}

/// [`kernel_direction`] for a 0/1 system, by integer Gauss-Jordan
/// elimination in `i128` with rows kept primitive (entries divided by their
/// gcd). The outer `None` means overflow and the caller should fall back to
/// field arithmetic.
fn incidence_kernel<T: ExactField>(system: &System<T>) -> Option<Option<Vec<T>>> {
    let rows = system.matrix.len();
    let cols = system.columns.len();
    let width = cols.min(rows + 1);
    let mut m: Vec<Vec<i128>> = system
        .matrix
        .iter()
        .map(|row| row[..width].iter().map(|x| i128::from(x.is_one())).collect())
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();

    for col in 0..width {
        let next = pivots.len();
        let Some(p) = (next..rows).find(|&r| m[r][col] != 0) else {
            let mut d = vec![T::zero(); cols];
            d[col] = T::one();
            for &(row, pc) in &pivots {
                d[pc] = -(T::from_int(m[row][col]) / T::from_int(m[row][pc]));
            }
            normalize_sign(&mut d);
            return Some(Some(d));
        };
        m.swap(next, p);
        let pivot = m[next][col];
        let pivot_row = m[next].clone();
        for (r, row) in m.iter_mut().enumerate() {
            let factor = row[col];
            if r == next || factor == 0 {
                continue;
            }
            let mut g = 0i128;
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = pivot.checked_mul(*x)?.checked_sub(factor.checked_mul(y)?)?;
                g = gcd(g, *x);
            }
            if g > 1 {
                row.iter_mut().for_each(|x| *x /= g);
            }
        }
        pivots.push((next, col));
    }
    Some(None)
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn normalize_sign<T: ExactField>(d: &mut [T]) {
    if d.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in d.iter_mut() {
            *x = -x.clone();
        }
    }
}

fn direction_from<T: ExactField>(
    reduced: &[Vec<T>],
    pivots: &[(usize, usize)],
    free: usize,
    cols: usize,
) -> Vec<T> {
    let mut d = vec![T::zero(); cols];
    d[free] = T::one();
    for &(row, col) in pivots {
        d[col] = -reduced[row][free].clone();
    }
    normalize_sign(&mut d);
    d
}

/// Largest `t > 0` keeping `h + t d` inside `[0, 1]`, with the indices that
/// land on 0 or 1. `h` must be strictly inside `(0, 1)` and `d` nonzero.
pub fn step_to_boundary<T: ExactField>(h: &[T], d: &[T]) -> (T, Vec<usize>) {
    assert_eq!(h.len(), d.len());
    let step = h
        .iter()
        .zip(d)
        .filter(|(_, di)| !di.is_zero())
        .map(|(hi, di)| {
            if di.is_positive() {
                (T::one() - hi.clone()) / di.clone()
            } else {
                hi.clone() / -di.clone()
            }
        })
        .min()
        .expect("direction must be nonzero");
    let hits = h
        .iter()
        .zip(d)
        .enumerate()
        .filter(|(_, (_, di))| !di.is_zero())
        .filter(|(_, (hi, di))| {
            let moved = (*hi).clone() + step.clone() * (*di).clone();
            moved.is_boolean()
        })
        .map(|(j, _)| j)
        .collect();
    (step, hits)
}
