use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    /// Random `r`-subsets, repeats allowed.
    Uniform,
    /// Random `r`-subsets pairwise sharing at most one vertex.
    Linear,
    /// Simple graph (linear with `r = 2`).
    Graph,
    /// `r`-uniform and exactly `min_degree`-regular, repeats allowed.
    Regular,
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(Model::Uniform),
            "linear" => Ok(Model::Linear),
            "graph" => Ok(Model::Graph),
            "regular" => Ok(Model::Regular),
            other => Err(Error::precondition(format!("unknown model `{other}`"))),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Uniform => "uniform",
            Model::Linear => "linear",
            Model::Graph => "graph",
            Model::Regular => "regular",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub model: Model,
    pub n: usize,
    pub r: usize,
    pub min_degree: usize,
    pub seed: u64,
}

pub fn generate(spec: &GenSpec) -> Result<Hypergraph> {
    match spec.model {
        Model::Uniform => gen_uniform(spec),
        Model::Linear => gen_linear(spec),
        Model::Graph => gen_graph(spec),
        Model::Regular => gen_regular(spec),
    }
}

fn check_sizes(spec: &GenSpec) -> Result<()> {
    if spec.min_degree == 0 {
        return Ok(());
    }
    if spec.r == 0 || spec.r > spec.n {
        return Err(Error::precondition(format!(
            "edge size r = {} must be in [1, n = {}]",
            spec.r, spec.n
        )));
    }
    Ok(())
}

/// Adds uniformly random `r`-subsets until every vertex has degree at least
/// `min_degree`.
pub fn gen_uniform(spec: &GenSpec) -> Result<Hypergraph> {
    check_sizes(spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut degree = vec![0usize; spec.n];
    let mut short = if spec.min_degree > 0 { spec.n } else { 0 };
    let mut edges = Vec::new();
    while short > 0 {
        let edge = index::sample(&mut rng, spec.n, spec.r).into_vec();
        for &v in &edge {
            degree[v] += 1;
            if degree[v] == spec.min_degree {
                short -= 1;
            }
        }
        edges.push(edge);
    }
    Hypergraph::new(spec.n, edges)
}

/// Simple random graph with minimum degree `min_degree`; `spec.r` is
/// ignored.
pub fn gen_graph(spec: &GenSpec) -> Result<Hypergraph> {
    gen_linear(&GenSpec { r: 2, ..*spec })
}

const LINEAR_RESTARTS: usize = 20;

/// Grows a linear hypergraph by random `r`-subsets through a vertex still
/// below `min_degree`, rejecting any subset that would share two vertices
/// with an accepted edge.
pub fn gen_linear(spec: &GenSpec) -> Result<Hypergraph> {
    check_sizes(spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..LINEAR_RESTARTS {
        if let Some(edges) = linear_attempt(spec, &mut rng) {
            return Hypergraph::new(spec.n, edges);
        }
    }
    Err(Error::GeneratorExhausted(format!(
        "no linear {}-uniform hypergraph on {} vertices with minimum degree {} after {LINEAR_RESTARTS} restarts",
        spec.r, spec.n, spec.min_degree
    )))
}

fn linear_attempt(spec: &GenSpec, rng: &mut ChaCha8Rng) -> Option<Vec<Vec<usize>>> {
    let (n, r, target) = (spec.n, spec.r, spec.min_degree);
    let mut degree = vec![0usize; n];
    let mut used: HashSet<(usize, usize)> = HashSet::new();
    let mut edges = Vec::new();
    let max_failures = 200 * n.max(1);
    let mut failures = 0;
    loop {
        let short: Vec<usize> = (0..n).filter(|&v| degree[v] < target).collect();
        let Some(&u) = short.choose(rng) else {
            return Some(edges);
        };
        // Prefer partners that are also short so degrees stay even.
        let pool: Vec<usize> = if short.len() > r && rng.gen_bool(0.8) {
            short.iter().copied().filter(|&v| v != u).collect()
        } else {
            (0..n).filter(|&v| v != u).collect()
        };
        if pool.len() + 1 < r {
            return None;
        }
        let mut edge: Vec<usize> = index::sample(rng, pool.len(), r - 1)
            .into_iter()
            .map(|i| pool[i])
            .collect();
        edge.push(u);
        edge.sort_unstable();
        let pairs = pairs_of(&edge);
        if pairs.iter().any(|p| used.contains(p)) {
            failures += 1;
            if failures > max_failures {
                return None;
            }
            continue;
        }
        used.extend(pairs);
        for &v in &edge {
            degree[v] += 1;
        }
        edges.push(edge);
    }
}

fn pairs_of(edge: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &a) in edge.iter().enumerate() {
        for &b in &edge[i + 1..] {
            out.push((a.min(b), a.max(b)));
        }
    }
    out
}

/// `min_degree`-regular `r`-uniform hypergraph from a shuffled stub list,
/// with swaps to remove repeated vertices inside an edge.
pub fn gen_regular(spec: &GenSpec) -> Result<Hypergraph> {
    check_sizes(spec)?;
    let (n, r, d) = (spec.n, spec.r, spec.min_degree);
    if (n * d) % r != 0 {
        return Err(Error::precondition(format!(
            "n * d = {} is not divisible by r = {r}",
            n * d
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    stubs.shuffle(&mut rng);
    let m = stubs.len() / r.max(1);
    let has_repeat = |stubs: &[usize], e: usize| {
        let s = &stubs[e * r..(e + 1) * r];
        (0..r).any(|i| s[..i].contains(&s[i]))
    };
    let budget = 1000 * stubs.len().max(1);
    let mut swaps = 0;
    for e in 0..m {
        while has_repeat(&stubs, e) {
            swaps += 1;
            if swaps > budget {
                return Err(Error::GeneratorExhausted(format!(
                    "could not place {d}-regular {r}-uniform edges on {n} vertices"
                )));
            }
            let i = e * r + rng.gen_range(0..r);
            let j = rng.gen_range(0..stubs.len());
            let f = j / r;
            stubs.swap(i, j);
            if f != e && has_repeat(&stubs, f) {
                stubs.swap(i, j);
            }
        }
    }
    let edges = stubs.chunks(r.max(1)).map(<[usize]>::to_vec).collect();
    Hypergraph::new(n, edges)
}
