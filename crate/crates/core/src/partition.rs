//! `k + 1` colouring by repeated rounding.
//!
//! Round `i` puts the constant weight `alpha_i` on every still-uncoloured
//! edge, rounds it, and gives colour `i` to the edges rounded up. After `k`
//! rounds the leftover edges get colour `k + 1`. With
//!
//! ```text
//! alpha_i = (δ/k - r) / (δ - (i - 1)(δ/k - 2r))
//! ```
//!
//! and `δ >= 2 r k^2`, a vertex of degree `B δ` keeps at most
//! `B (δ - i (δ/k - 2r))` uncoloured edges after round `i` and receives at
//! most `B δ / k` edges of each colour. Both bounds are checked exactly after
//! every round.

use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{Colouring, Hypergraph, Weights};
use crate::rounder::round_weights;
use crate::scalar::ExactField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaSchedule<T> {
    pub alphas: Vec<T>,
}

fn check_params(delta: usize, k: usize, r: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::precondition(format!("k must be at least 2, got {k}")));
    }
    if r < 1 {
        return Err(Error::precondition("hypergraph has no edges (rank 0)"));
    }
    let required = 2 * r * k * k;
    if delta < required {
        return Err(Error::precondition(format!(
            "minimum degree {delta} is below 2*r*k^2 = {required} (r = {r}, k = {k})"
        )));
    }
    Ok(())
}

/// `alpha_i` for round `i` in `1..=k`.
pub fn alpha<T: ExactField>(i: usize, delta: usize, k: usize, r: usize) -> Result<T> {
    check_params(delta, k, r)?;
    if !(1..=k).contains(&i) {
        return Err(Error::precondition(format!("round {i} outside 1..={k}")));
    }
    let delta_t = T::from_nat(delta);
    let r_t = T::from_nat(r);
    let share = delta_t.clone() / T::from_nat(k);
    let numerator = share.clone() - r_t.clone();
    let denominator =
        delta_t - T::from_nat(i - 1) * (share - T::from_nat(2) * r_t);
    Ok(numerator / denominator)
}

pub fn alpha_schedule<T: ExactField>(delta: usize, k: usize, r: usize) -> Result<AlphaSchedule<T>> {
    let alphas = (1..=k)
        .map(|i| alpha(i, delta, k, r))
        .collect::<Result<_>>()?;
    Ok(AlphaSchedule { alphas })
}

/// One extracted colour class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionRound<T> {
    pub round: usize,
    pub alpha: T,
    pub class_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionOutcome<T> {
    pub colouring: Colouring,
    pub rounds: Vec<PartitionRound<T>>,
    pub delta: usize,
    pub rank: usize,
}

impl<T: fmt::Display> fmt::Display for PartitionOutcome<T> {
    /// `round <i> alpha <p/q> class_size <m>` per round.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rounds {
            writeln!(
                f,
                "round {} alpha {} class_size {}",
                r.round, r.alpha, r.class_size
            )?;
        }
        Ok(())
    }
}

/// Colour classes extracted so far and the uncoloured remainder.
#[derive(Debug, Clone)]
pub struct PartitionState<'a, T> {
    h: &'a Hypergraph,
    k: usize,
    r: usize,
    delta: usize,
    degrees: Vec<usize>,
    schedule: AlphaSchedule<T>,
    remaining: Vec<bool>,
    classes: Vec<Vec<usize>>,
}

impl<'a, T: ExactField> PartitionState<'a, T> {
    /// Checks `min_degree >= 2 r k^2` and sets up round 1.
    pub fn new(h: &'a Hypergraph, k: usize) -> Result<Self> {
        let delta = h.min_degree()?;
        let r = h.rank();
        let schedule = alpha_schedule(delta, k, r)?;
        Ok(PartitionState {
            h,
            k,
            r,
            delta,
            degrees: h.degrees(),
            schedule,
            remaining: vec![true; h.n_edges()],
            classes: Vec::with_capacity(k + 1),
        })
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn schedule(&self) -> &AlphaSchedule<T> {
        &self.schedule
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn remaining_edges(&self) -> Vec<usize> {
        (0..self.remaining.len()).filter(|&e| self.remaining[e]).collect()
    }

    /// Number of uncoloured edges at each vertex.
    pub fn remaining_degrees(&self) -> Vec<usize> {
        self.degrees_of(|e| self.remaining[e])
    }

    fn degrees_of(&self, member: impl Fn(usize) -> bool) -> Vec<usize> {
        (0..self.h.n_vertices())
            .map(|v| self.h.incident(v).iter().filter(|&&e| member(e)).count())
            .collect()
    }

    /// Rounds the constant weight `alpha_i` on the uncoloured edges and
    /// returns the edges rounded up, without committing them.
    fn round_class(&self, i: usize) -> Result<Vec<usize>> {
        let alpha = self.schedule.alphas[i - 1].clone();
        let z: Vec<T> = self
            .remaining
            .iter()
            .map(|&rem| if rem { alpha.clone() } else { T::zero() })
            .collect();
        let (x, _) = round_weights(self.h, &Weights::new(z)?)?;
        Ok((0..x.len()).filter(|&e| x[e].is_one()).collect())
    }

    /// Extracts the next colour class and checks the per-round bounds.
    pub fn extract_class(&mut self) -> Result<PartitionRound<T>> {
        let i = self.classes.len() + 1;
        if i > self.k {
            return Err(Error::precondition("all k classes already extracted"));
        }
        let class = self.round_class(i)?;
        for &e in &class {
            debug_assert!(self.remaining[e]);
            self.remaining[e] = false;
        }
        let size = class.len();
        self.classes.push(class);
        self.check_class_bounds(i)?;
        Ok(PartitionRound {
            round: i,
            alpha: self.schedule.alphas[i - 1].clone(),
            class_size: size,
        })
    }

    /// For every vertex with `d(v) = B δ`: class `i` degree at most `B δ / k`
    /// and uncoloured degree at most `B (δ - i (δ/k - 2r))`.
    pub fn check_class_bounds(&self, i: usize) -> Result<()> {
        let class = &self.classes[i - 1];
        let mut in_class = vec![false; self.h.n_edges()];
        for &e in class {
            in_class[e] = true;
        }
        let class_deg = self.degrees_of(|e| in_class[e]);
        let rem_deg = self.remaining_degrees();

        let delta = T::from_nat(self.delta);
        let k = T::from_nat(self.k);
        let shrink = delta.clone() / k.clone() - T::from_nat(2 * self.r);
        let rem_factor = delta.clone() - T::from_nat(i) * shrink;
        for v in 0..self.h.n_vertices() {
            let b = T::from_nat(self.degrees[v]) / delta.clone();
            let class_bound = b.clone() * delta.clone() / k.clone();
            if T::from_nat(class_deg[v]) > class_bound {
                return Err(Error::InvariantBreach {
                    round: i,
                    vertex: v,
                    what: "class degree",
                    observed: class_deg[v].to_string(),
                    bound: class_bound.to_string(),
                });
            }
            let rem_bound = b * rem_factor.clone();
            if T::from_nat(rem_deg[v]) > rem_bound {
                return Err(Error::InvariantBreach {
                    round: i,
                    vertex: v,
                    what: "uncoloured degree",
                    observed: rem_deg[v].to_string(),
                    bound: rem_bound.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Assigns colour `k + 1` to the remainder after checking it is within
    /// `2 r k d(v) / δ` and `d(v) / k` at every vertex.
    pub fn finish(self) -> Result<Colouring> {
        if self.classes.len() != self.k {
            return Err(Error::precondition(format!(
                "finish after {} of {} rounds",
                self.classes.len(),
                self.k
            )));
        }
        let rem_deg = self.remaining_degrees();
        let delta = T::from_nat(self.delta);
        let k = T::from_nat(self.k);
        for (v, &rem) in rem_deg.iter().enumerate() {
            let d = T::from_nat(self.degrees[v]);
            let residual_bound = T::from_nat(2 * self.r * self.k) * d.clone() / delta.clone();
            let share = d / k.clone();
            for bound in [residual_bound, share] {
                if T::from_nat(rem) > bound {
                    return Err(Error::InvariantBreach {
                        round: self.k + 1,
                        vertex: v,
                        what: "residual degree",
                        observed: rem.to_string(),
                        bound: bound.to_string(),
                    });
                }
            }
        }
        let mut colours = vec![self.k + 1; self.h.n_edges()];
        for (i, class) in self.classes.iter().enumerate() {
            for &e in class {
                colours[e] = i + 1;
            }
        }
        Colouring::new(colours, self.k + 1)
    }
}

/// Colours `h` with `k + 1` colours so that every colour appears at most
/// `floor(d(v) / k)` times at each vertex. Requires `min_degree >= 2 r k^2`.
pub fn colour_partition<T: ExactField>(h: &Hypergraph, k: usize) -> Result<PartitionOutcome<T>> {
    let mut state = PartitionState::<T>::new(h, k)?;
    let (delta, rank) = (state.delta(), state.rank());
    let rounds = (0..k)
        .map(|_| state.extract_class())
        .collect::<Result<Vec<_>>>()?;
    let colouring = state.finish()?;
    Ok(PartitionOutcome {
        colouring,
        rounds,
        delta,
        rank,
    })
}
