#![allow(dead_code)]

use hypermajority::{Hypergraph, Rational, Weighting};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Random hypergraph with `n` vertices, `m` edges of sizes in `1..=r`; the
/// first edge has size exactly `r`.
pub fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, m: usize, r: usize) -> Hypergraph {
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let size = if i == 0 { r } else { rng.gen_range(1..=r) };
        edges.push(rand::seq::index::sample(rng, n, size).into_vec());
    }
    Hypergraph::new(n, edges).unwrap()
}

/// Mix of exact 0, exact 1 and proper fractions with small denominators.
pub fn random_weights(rng: &mut ChaCha8Rng, m: usize) -> Weighting {
    let w = (0..m)
        .map(|_| match rng.gen_range(0..10) {
            0 => Rational::zero(),
            1 => Rational::one(),
            _ => {
                let den = rng.gen_range(2..=16i64);
                q(rng.gen_range(1..den), den)
            }
        })
        .collect();
    Weighting::new(w).unwrap()
}

/// Vertex sums of a 0/1 vector, computed straight from the edge list.
fn sums_of(h: &Hypergraph, x: &[Rational]) -> Vec<Rational> {
    let mut sums = vec![Rational::zero(); h.n_vertices()];
    for (e, edge) in h.edges().iter().enumerate() {
        for &v in edge {
            sums[v] += &x[e];
        }
    }
    sums
}

/// Strict two-sided discrepancy bound `|sum x - sum z| < rank` at every vertex.
pub fn within_rank(h: &Hypergraph, z: &[Rational], x: &[Rational]) -> bool {
    let r = Rational::from_integer((h.rank() as i64).into());
    let sz = sums_of(h, z);
    let sx = sums_of(h, x);
    sz.iter()
        .zip(&sx)
        .all(|(a, b)| &(a - &r) < b && b < &(a + &r))
}

/// Every 0/1 vector meeting the discrepancy bound, by enumeration.
pub fn feasible_roundings(h: &Hypergraph, z: &[Rational]) -> Vec<Vec<Rational>> {
    let m = h.n_edges();
    assert!(m <= 16);
    (0u32..1 << m)
        .map(|mask| {
            (0..m)
                .map(|e| {
                    if mask >> e & 1 == 1 {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect::<Vec<_>>()
        })
        .filter(|x| within_rank(h, z, x))
        .collect()
}

pub fn complete_graph(n: usize) -> Hypergraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push(vec![a, b]);
        }
    }
    Hypergraph::new(n, edges).unwrap()
}

/// Prints one result line per acceptance criterion and fails the test on a
/// miss.
pub fn report(id: &str, ok: bool, detail: impl AsRef<str>) {
    println!("{id} {} {}", if ok { "PASS" } else { "FAIL" }, detail.as_ref());
    assert!(ok, "{id} failed: {}", detail.as_ref());
}
