//! `k r + 1` colouring of linear hypergraphs.
//!
//! Every vertex of degree `d = m + t k` (`m = d mod k`) is split into `m`
//! sub-vertices of degree `k + 1` and `t - m` of degree `k`. The split
//! hypergraph has maximum degree `k + 1`, so its line graph has maximum
//! degree at most `k r` and greedy colouring needs at most `k r + 1`
//! colours. A proper colouring repeats no colour at a sub-vertex, hence at
//! most `t = floor(d / k)` times at the original vertex.

use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{Colouring, Hypergraph};

/// `(m, t)` with `d = m + t k` and `0 <= m < k`. Requires `d >= k^2 - k` so
/// that `t >= m`.
pub fn split_degrees(d: usize, k: usize) -> Result<(usize, usize)> {
    if k < 2 {
        return Err(Error::precondition(format!("k must be at least 2, got {k}")));
    }
    if d < k * k - k {
        return Err(Error::precondition(format!(
            "degree {d} is below k^2 - k = {} (k = {k})",
            k * k - k
        )));
    }
    let (t, m) = (d / k, d % k);
    debug_assert!(t >= m);
    Ok((m, t))
}

/// How one original vertex was split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSplit {
    /// Sub-vertices of degree `k + 1`.
    pub m: usize,
    /// Total sub-vertices.
    pub t: usize,
    /// Id of the first sub-vertex in the split hypergraph; the others follow
    /// consecutively.
    pub first: usize,
    /// Incident edge ids handled by each sub-vertex.
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMap {
    pub vertices: Vec<VertexSplit>,
}

impl SplitMap {
    /// Original vertex of every sub-vertex.
    pub fn origin(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .enumerate()
            .flat_map(|(u, s)| std::iter::repeat_n(u, s.t))
            .collect()
    }
}

impl fmt::Display for SplitMap {
    /// `u t m: <edges of sub-vertex 1>; <edges of sub-vertex 2>; ...`, all
    /// ids 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (u, s) in self.vertices.iter().enumerate() {
            let blocks: Vec<String> = s
                .blocks
                .iter()
                .map(|b| {
                    b.iter()
                        .map(|e| (e + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            writeln!(f, "{} {} {}: {}", u + 1, s.t, s.m, blocks.join("; "))?;
        }
        Ok(())
    }
}

fn check_linear(h: &Hypergraph) -> Result<()> {
    match h.linearity_witness() {
        Some((first, second, shared)) => Err(Error::NotLinear {
            first,
            second,
            shared,
        }),
        None => Ok(()),
    }
}

/// Splits every vertex of a linear hypergraph so that all degrees become
/// `k` or `k + 1`. Incident edges are handed out in ascending id order, the
/// first `m` blocks taking `k + 1` edges each.
pub fn split_hypergraph(h: &Hypergraph, k: usize) -> Result<(Hypergraph, SplitMap)> {
    check_linear(h)?;
    let mut vertices = Vec::with_capacity(h.n_vertices());
    let mut next = 0;
    let mut sub_of_edge: Vec<Vec<(usize, usize)>> = vec![Vec::new(); h.n_edges()];
    for u in 0..h.n_vertices() {
        let incident = h.incident(u);
        let (m, t) = split_degrees(incident.len(), k).map_err(|_| {
            Error::precondition(format!(
                "vertex {} has degree {}, below k^2 - k = {} (k = {k})",
                u + 1,
                incident.len(),
                k * k - k
            ))
        })?;
        let mut blocks = Vec::with_capacity(t);
        let mut rest = incident;
        for j in 0..t {
            let size = if j < m { k + 1 } else { k };
            let (block, tail) = rest.split_at(size);
            for &e in block {
                sub_of_edge[e].push((u, next + j));
            }
            blocks.push(block.to_vec());
            rest = tail;
        }
        debug_assert!(rest.is_empty());
        vertices.push(VertexSplit {
            m,
            t,
            first: next,
            blocks,
        });
        next += t;
    }
    let edges = h
        .edges()
        .iter()
        .zip(&sub_of_edge)
        .map(|(edge, subs)| {
            edge.iter()
                .map(|u| subs.iter().find(|(orig, _)| orig == u).expect("assigned").1)
                .collect()
        })
        .collect();
    let hstar = Hypergraph::new(next, edges)?;
    Ok((hstar, SplitMap { vertices }))
}

/// Simple graph on the edges of a hypergraph, adjacent when they intersect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraph {
    adjacency: Vec<Vec<usize>>,
}

impl LineGraph {
    pub fn from_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        LineGraph { adjacency }
    }

    pub fn n_nodes(&self) -> usize {
        self.adjacency.len()
    }

    /// Sorted neighbours of `node`.
    pub fn neighbours(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn n_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }
}

pub fn line_graph(h: &Hypergraph) -> LineGraph {
    let mut adjacency = vec![Vec::new(); h.n_edges()];
    for v in 0..h.n_vertices() {
        let incident = h.incident(v);
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
        list.dedup();
    }
    let l = LineGraph { adjacency };
    let bound = h.rank() * h.max_degree().saturating_sub(1);
    assert!(
        l.max_degree() <= bound,
        "line graph degree {} exceeds r (Δ - 1) = {bound}",
        l.max_degree()
    );
    l
}

/// First-fit colouring in the given order; colours are 1-based and each
/// node's colour is at most its degree plus one.
pub fn greedy_colour(l: &LineGraph, order: &[usize]) -> Vec<usize> {
    let mut colour = vec![0usize; l.n_nodes()];
    let mut seen = Vec::new();
    for &node in order {
        seen.clear();
        seen.resize(l.degree(node) + 2, false);
        for &nb in l.neighbours(node) {
            if colour[nb] < seen.len() {
                seen[colour[nb]] = true;
            }
        }
        colour[node] = (1..seen.len()).find(|&c| !seen[c]).expect("degree + 1 colours suffice");
    }
    colour
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOutcome {
    /// Palette `k r + 1`, independent of how many colours greedy used.
    pub colouring: Colouring,
    pub split: SplitMap,
    pub split_max_degree: usize,
    pub line_max_degree: usize,
    pub colours_used: usize,
}

/// Colours a linear hypergraph with minimum degree at least `k^2 - k` using
/// `k r + 1` colours so every colour appears at most `floor(d(v)/k)` times
/// at each vertex.
pub fn colour_linear(h: &Hypergraph, k: usize) -> Result<LinearOutcome> {
    if k < 2 {
        return Err(Error::precondition(format!("k must be at least 2, got {k}")));
    }
    let (hstar, split) = split_hypergraph(h, k)?;
    let l = line_graph(&hstar);
    let order: Vec<usize> = (0..l.n_nodes()).collect();
    let colours = greedy_colour(&l, &order);
    let colours_used = colours.iter().copied().max().unwrap_or(0);
    let palette = k * h.rank() + 1;
    assert!(colours_used <= palette, "greedy used {colours_used} > {palette} colours");
    Ok(LinearOutcome {
        colouring: Colouring::new(colours, palette)?,
        split,
        split_max_degree: hstar.max_degree(),
        line_max_degree: l.max_degree(),
        colours_used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genlab::verify;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    fn fano() -> Hypergraph {
        h(
            7,
            &[
                &[0, 1, 2],
                &[0, 3, 4],
                &[0, 5, 6],
                &[1, 3, 5],
                &[1, 4, 6],
                &[2, 3, 6],
                &[2, 4, 5],
            ],
        )
    }

    #[test]
    fn split_degree_examples() {
        assert_eq!(split_degrees(7, 3).unwrap(), (1, 2));
        for k in 2..8 {
            assert_eq!(split_degrees(k * k - k, k).unwrap(), (0, k - 1));
        }
        assert_eq!(split_degrees(8, 2).unwrap(), (0, 4));
        assert!(split_degrees(5, 3).is_err());
        assert!(split_degrees(5, 1).is_err());
    }

    #[test]
    fn fano_splits_to_itself() {
        let f = fano();
        let (hstar, map) = split_hypergraph(&f, 2).unwrap();
        assert!(map.vertices.iter().all(|s| (s.m, s.t) == (1, 1)));
        assert_eq!(hstar, f);
    }

    #[test]
    fn split_of_high_degree_star_like_graph() {
        // Vertex 0 has degree 5 (k = 2 -> m = 1, t = 2).
        let g = h(6, &[&[0, 1], &[0, 2], &[0, 3], &[0, 4], &[0, 5]]);
        let err = split_hypergraph(&g, 2).unwrap_err();
        assert!(err.to_string().contains("vertex 2"));

        let mut edges: Vec<Vec<usize>> = (1..6).map(|v| vec![0, v]).collect();
        // Give the leaves degree 2 with a cycle on them.
        for v in 1..6 {
            edges.push(vec![v, if v == 5 { 1 } else { v + 1 }]);
        }
        let g = Hypergraph::new(6, edges).unwrap();
        let (hstar, map) = split_hypergraph(&g, 2).unwrap();
        let s0 = &map.vertices[0];
        assert_eq!((s0.m, s0.t), (1, 2));
        assert_eq!(s0.blocks, vec![vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(hstar.n_vertices(), map.vertices.iter().map(|s| s.t).sum::<usize>());
        assert!(hstar.max_degree() <= 3);
        assert!(hstar.is_linear());
        assert_eq!(map.to_string().lines().next(), Some("1 2 1: 1 2 3; 4 5"));
        assert_eq!(map.origin()[..2], [0, 0]);
    }

    #[test]
    fn non_linear_input_names_edges() {
        let g = h(3, &[&[0, 1, 2], &[0, 1], &[1, 2], &[0, 2]]);
        match split_hypergraph(&g, 2) {
            Err(Error::NotLinear { first: 0, second: 1, shared: 2 }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn line_graph_examples() {
        let tri = line_graph(&h(3, &[&[0, 1], &[1, 2], &[0, 2]]));
        assert_eq!(tri.n_edges(), 3);
        assert_eq!(tri.max_degree(), 2);

        let single = line_graph(&h(3, &[&[0, 1, 2]]));
        assert_eq!((single.n_nodes(), single.n_edges()), (1, 0));

        let star = line_graph(&h(4, &[&[0, 1], &[0, 2], &[0, 3]]));
        assert!((0..3).all(|n| star.degree(n) == 2));
    }

    #[test]
    fn greedy_examples() {
        let tri = LineGraph::from_adjacency(vec![vec![1, 2], vec![0, 2], vec![0, 1]]);
        assert_eq!(greedy_colour(&tri, &[0, 1, 2]), vec![1, 2, 3]);

        let empty = LineGraph::from_adjacency(vec![vec![], vec![], vec![]]);
        assert_eq!(greedy_colour(&empty, &[0, 1, 2]), vec![1, 1, 1]);

        // path a - b - c visited a, c, b
        let path = LineGraph::from_adjacency(vec![vec![1], vec![0, 2], vec![1]]);
        assert_eq!(greedy_colour(&path, &[0, 2, 1]), vec![1, 2, 1]);
    }

    #[test]
    fn cycle_graph_colouring() {
        let n = 7;
        let edges: Vec<Vec<usize>> = (0..n).map(|v| vec![v, (v + 1) % n]).collect();
        let g = Hypergraph::new(n, edges).unwrap();
        let out = colour_linear(&g, 2).unwrap();
        assert_eq!(out.colouring.palette(), 5);
        assert!(verify(&g, 2, &out.colouring).unwrap().valid);
        // all degrees 2 < 2k, so the colouring is proper
        for v in 0..n {
            let cs: Vec<usize> = g.incident(v).iter().map(|&e| out.colouring.colour(e)).collect();
            assert_ne!(cs[0], cs[1]);
        }
    }

    #[test]
    fn fano_colouring() {
        let f = fano();
        let out = colour_linear(&f, 2).unwrap();
        assert!(verify(&f, 2, &out.colouring).unwrap().valid);
        assert!(out.line_max_degree <= 6);
        assert_eq!(out.colouring.palette(), 7);
    }
}
