//! Random `k + 1` colourings: the local-lemma degree threshold and a seeded
//! resampling colourer.
//!
//! With `a = 1 / (3 k^2 (k + 1))`, a hypergraph of rank `r` and minimum
//! degree `δ` has a 1/k-majority `(k + 1)`-colouring whenever
//!
//! ```text
//! 4 (k + 1) e^{-a δ} <= 1    and    8 (k + 1) (r - 1) δ e^{-a δ} <= 1.
//! ```
//!
//! [`threshold`] returns the least `δ*` such that both hold for every
//! `δ >= δ*`. [`resample_colour`] starts from a uniform random colouring and
//! redraws the edges around the lowest-numbered violated vertex until none
//! is left or the round budget runs out.

use std::collections::BTreeSet;

use astro_float::{BigFloat, Consts, RoundingMode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{Colouring, Hypergraph};

/// Working precision of the inequality checks, in bits.
pub const PRECISION: usize = 128;

/// A left-hand side within this relative distance below 1 counts as failing.
pub const MARGIN: f64 = 1.0 / (1u64 << 30) as f64;

pub const DEFAULT_SEED: u64 = 0x5EED;

const RM: RoundingMode = RoundingMode::ToEven;

fn check_kr(k: u64, r: u64) -> Result<()> {
    if k < 2 || r < 2 {
        return Err(Error::precondition(format!(
            "threshold needs k >= 2 and r >= 2, got k = {k}, r = {r}"
        )));
    }
    Ok(())
}

/// Both left-hand sides at `delta`, at [`PRECISION`] bits.
#[derive(Debug, Clone)]
pub struct InequalityValues {
    pub first: BigFloat,
    pub second: BigFloat,
}

impl InequalityValues {
    pub fn first_f64(&self) -> f64 {
        to_f64(&self.first)
    }

    pub fn second_f64(&self) -> f64 {
        to_f64(&self.second)
    }

    /// True when both sides are at most `1 - MARGIN`.
    pub fn hold(&self) -> bool {
        let limit = BigFloat::from_f64(1.0 - MARGIN, PRECISION);
        self.first <= limit && self.second <= limit
    }
}

fn to_f64(x: &BigFloat) -> f64 {
    x.to_string().parse().unwrap_or(f64::NAN)
}

fn big(n: u64) -> BigFloat {
    BigFloat::from_u64(n, PRECISION)
}

pub fn inequality_values(k: u64, r: u64, delta: u64) -> InequalityValues {
    let p = PRECISION;
    let mut cc = Consts::new().expect("astro-float constants");
    let rate = big(delta).div(&big(3 * k * k * (k + 1)), p, RM);
    let decay = rate.neg().exp(p, RM, &mut cc);
    let first = big(4 * (k + 1)).mul(&decay, p, RM);
    let second = big(8 * (k + 1) * (r - 1))
        .mul(&big(delta), p, RM)
        .mul(&decay, p, RM);
    InequalityValues { first, second }
}

/// Whether both threshold inequalities hold at `delta` with the safety
/// margin.
pub fn inequalities_hold(k: u64, r: u64, delta: u64) -> bool {
    k >= 2 && r >= 2 && delta >= 1 && inequality_values(k, r, delta).hold()
}

/// `3 k^2 (k + 1)`: the maximiser of `δ e^{-a δ}`. Both left-hand sides
/// decrease from here on.
pub fn stationary_point(k: u64) -> u64 {
    3 * k * k * (k + 1)
}

/// Least `δ*` such that [`inequalities_hold`] for all `δ >= δ*`.
pub fn threshold(k: u64, r: u64) -> Result<u64> {
    check_kr(k, r)?;
    // Below the stationary point the second side is at least
    // 8 (k + 1) (r - 1) δ e^{-1} at δ = 1/a, far above 1, and the first side
    // exceeds 4 (k + 1) / e > 1, so nothing there passes. Above it the
    // predicate is monotone.
    let lo_start = stationary_point(k).max(1);
    let mut lo = lo_start;
    let mut hi = lo_start.max(2);
    while !inequalities_hold(k, r, hi) {
        lo = hi;
        hi *= 2;
    }
    if inequalities_hold(k, r, lo) {
        return Ok(lo);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if inequalities_hold(k, r, mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Each edge gets a colour uniform on `1..=k+1`, from a ChaCha8 stream seeded
/// with `seed`.
pub fn random_colouring(h: &Hypergraph, k: usize, seed: u64) -> Result<Colouring> {
    if k < 2 {
        return Err(Error::precondition(format!("k must be at least 2, got {k}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    draw(h, k, &mut rng)
}

fn draw(h: &Hypergraph, k: usize, rng: &mut ChaCha8Rng) -> Result<Colouring> {
    let colours = (0..h.n_edges()).map(|_| rng.gen_range(1..=k + 1)).collect();
    Colouring::new(colours, k + 1)
}

/// Vertices where some colour appears more than `d(v) / k` times, ascending.
pub fn bad_vertices(h: &Hypergraph, c: &Colouring, k: usize) -> Result<Vec<usize>> {
    if c.palette() != k + 1 {
        return Err(Error::precondition(format!(
            "colouring has palette {}, expected k + 1 = {}",
            c.palette(),
            k + 1
        )));
    }
    if c.len() != h.n_edges() {
        return Err(Error::LengthMismatch {
            what: "colours",
            expected: h.n_edges(),
            found: c.len(),
        });
    }
    let counts = ColourCounts::new(h, c, k);
    Ok((0..h.n_vertices()).filter(|&v| counts.is_bad(h, v)).collect())
}

struct ColourCounts {
    k: usize,
    palette: usize,
    counts: Vec<usize>,
}

impl ColourCounts {
    fn new(h: &Hypergraph, c: &Colouring, k: usize) -> Self {
        let palette = c.palette();
        let mut counts = vec![0; h.n_vertices() * palette];
        for (e, edge) in h.edges().iter().enumerate() {
            for &v in edge {
                counts[v * palette + c.colour(e) - 1] += 1;
            }
        }
        ColourCounts { k, palette, counts }
    }

    fn is_bad(&self, h: &Hypergraph, v: usize) -> bool {
        let d = h.incident(v).len();
        self.counts[v * self.palette..(v + 1) * self.palette]
            .iter()
            .any(|&n| n * self.k > d)
    }

    fn shift(&mut self, edge: &[usize], colour: usize, add: bool) {
        for &v in edge {
            let slot = &mut self.counts[v * self.palette + colour - 1];
            if add {
                *slot += 1;
            } else {
                *slot -= 1;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ResampleOutcome {
    Success(Colouring),
    /// The budget ran out; carries the last colouring tried.
    Exhausted(Colouring),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResampleRun {
    pub seed: u64,
    pub max_rounds: usize,
    pub rounds_used: usize,
    pub outcome: ResampleOutcome,
}

impl ResampleRun {
    pub fn succeeded(&self) -> bool {
        matches!(self.outcome, ResampleOutcome::Success(_))
    }

    pub fn colouring(&self) -> &Colouring {
        match &self.outcome {
            ResampleOutcome::Success(c) | ResampleOutcome::Exhausted(c) => c,
        }
    }
}

/// `10_000 * |E|` rounds.
pub fn default_max_rounds(h: &Hypergraph) -> usize {
    10_000 * h.n_edges()
}

/// Random colouring followed by up to `max_rounds` redraws of all edges at
/// the lowest-numbered bad vertex.
pub fn resample_colour(h: &Hypergraph, k: usize, seed: u64, max_rounds: usize) -> Result<ResampleRun> {
    if k < 2 {
        return Err(Error::precondition(format!("k must be at least 2, got {k}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colouring = draw(h, k, &mut rng)?.into_colours();
    let mut counts = ColourCounts::new(h, &Colouring::new(colouring.clone(), k + 1)?, k);
    let mut bad: BTreeSet<usize> = (0..h.n_vertices()).filter(|&v| counts.is_bad(h, v)).collect();

    let mut rounds = 0;
    let mut touched = Vec::new();
    while let Some(&u) = bad.first() {
        if rounds == max_rounds {
            return Ok(ResampleRun {
                seed,
                max_rounds,
                rounds_used: rounds,
                outcome: ResampleOutcome::Exhausted(Colouring::new(colouring, k + 1)?),
            });
        }
        rounds += 1;
        touched.clear();
        for &e in h.incident(u) {
            let edge = h.edge(e);
            counts.shift(edge, colouring[e], false);
            colouring[e] = rng.gen_range(1..=k + 1);
            counts.shift(edge, colouring[e], true);
            touched.extend_from_slice(edge);
        }
        for &v in &touched {
            if counts.is_bad(h, v) {
                bad.insert(v);
            } else {
                bad.remove(&v);
            }
        }
    }
    Ok(ResampleRun {
        seed,
        max_rounds,
        rounds_used: rounds,
        outcome: ResampleOutcome::Success(Colouring::new(colouring, k + 1)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_delta_fails() {
        assert!(!inequalities_hold(2, 2, 1));
        let v = inequality_values(2, 2, 1);
        assert!(v.first_f64() > 11.0);
    }

    #[test]
    fn large_delta_passes() {
        assert!(inequalities_hold(2, 2, 10_000));
        assert!(inequalities_hold(4, 8, 1_000_000));
    }

    #[test]
    fn invalid_parameters() {
        assert!(threshold(1, 2).is_err());
        assert!(threshold(2, 1).is_err());
        assert!(!inequalities_hold(2, 2, 0));
    }

    #[test]
    fn threshold_is_upward_closed_boundary() {
        let t = threshold(2, 2).unwrap();
        assert!(t > stationary_point(2));
        assert!(!inequalities_hold(2, 2, t - 1));
        assert!((t..t + 100).all(|d| inequalities_hold(2, 2, d)));
    }

    #[test]
    fn threshold_exceeds_first_inequality_bound() {
        for k in 2..5u64 {
            let bound = (3 * k * k * (k + 1)) as f64 * (4.0 * (k + 1) as f64).ln();
            assert!(threshold(k, 2).unwrap() as f64 >= bound);
        }
    }

    #[test]
    fn random_colouring_is_seeded() {
        let h = Hypergraph::new(2, vec![vec![0, 1]; 50]).unwrap();
        let a = random_colouring(&h, 2, 7).unwrap();
        assert_eq!(a, random_colouring(&h, 2, 7).unwrap());
        assert_ne!(a, random_colouring(&h, 2, 8).unwrap());
        assert!(a.colours().iter().all(|&c| (1..=3).contains(&c)));
        assert!(random_colouring(&h, 1, 7).is_err());
    }

    #[test]
    fn bad_vertex_arithmetic() {
        // one vertex of degree 5
        let h = Hypergraph::new(1, vec![vec![0]; 5]).unwrap();
        let c = Colouring::new(vec![1, 1, 1, 2, 3], 3).unwrap();
        assert_eq!(bad_vertices(&h, &c, 2).unwrap(), vec![0]);
        let c = Colouring::new(vec![1, 1, 2, 2, 3], 3).unwrap();
        assert!(bad_vertices(&h, &c, 2).unwrap().is_empty());
        let wrong = Colouring::new(vec![1, 1, 2, 2, 3], 4).unwrap();
        assert!(bad_vertices(&h, &wrong, 2).is_err());
    }

    #[test]
    fn resample_exhausts_on_no_instance() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let run = resample_colour(&h, 2, 3, 100).unwrap();
        assert!(!run.succeeded());
        assert_eq!(run.rounds_used, 100);
    }

    #[test]
    fn resample_zero_rounds_when_already_valid() {
        let h = Hypergraph::new(3, vec![]).unwrap();
        let run = resample_colour(&h, 2, 3, 0).unwrap();
        assert!(run.succeeded());
        assert_eq!(run.rounds_used, 0);
    }

    #[test]
    fn resample_is_deterministic() {
        let edges: Vec<Vec<usize>> = (0..60).map(|i| vec![i % 4, (i + 1) % 4]).collect();
        let h = Hypergraph::new(4, edges).unwrap();
        let a = resample_colour(&h, 2, 11, 1000).unwrap();
        let b = resample_colour(&h, 2, 11, 1000).unwrap();
        assert_eq!(a, b);
        assert!(a.succeeded());
        assert!(bad_vertices(&h, a.colouring(), 2).unwrap().is_empty());
    }
}
