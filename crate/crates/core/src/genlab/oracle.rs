use crate::error::{Error, Result};
use crate::hypergraph::{Colouring, Hypergraph};

/// Largest `palette^|E|` the exhaustive search accepts.
pub const SEARCH_LIMIT: u128 = 100_000_000;

/// Lexicographically first valid colouring over `1..=palette`, or `None`.
///
/// Depth-first in edge order, smallest colour first, abandoning a prefix as
/// soon as a vertex exceeds `floor(d(v) / k)` for some colour.
pub fn brute_force(h: &Hypergraph, k: usize, palette: usize) -> Result<Option<Colouring>> {
    if palette == 0 || k == 0 {
        return Err(Error::precondition("palette and k must be positive"));
    }
    let size = (palette as u128).checked_pow(h.n_edges() as u32);
    if size.is_none_or(|s| s > SEARCH_LIMIT) {
        return Err(Error::TooLarge(format!(
            "{palette}^{} assignments exceeds {SEARCH_LIMIT}",
            h.n_edges()
        )));
    }
    let bounds: Vec<usize> = h.degrees().iter().map(|d| d / k).collect();
    let mut counts = vec![0usize; h.n_vertices() * palette];
    let mut colours = vec![0usize; h.n_edges()];
    if search(h, palette, &bounds, &mut counts, &mut colours, 0) {
        Ok(Some(Colouring::new(colours, palette)?))
    } else {
        Ok(None)
    }
}

fn search(
    h: &Hypergraph,
    palette: usize,
    bounds: &[usize],
    counts: &mut [usize],
    colours: &mut [usize],
    e: usize,
) -> bool {
    if e == colours.len() {
        return true;
    }
    let edge = h.edge(e);
    for c in 1..=palette {
        if edge.iter().any(|&v| counts[v * palette + c - 1] >= bounds[v]) {
            continue;
        }
        for &v in edge {
            counts[v * palette + c - 1] += 1;
        }
        colours[e] = c;
        if search(h, palette, bounds, counts, colours, e + 1) {
            return true;
        }
        for &v in edge {
            counts[v * palette + c - 1] -= 1;
        }
    }
    false
}
