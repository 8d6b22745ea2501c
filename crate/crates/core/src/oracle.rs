//! Brute-force ground truth computed from explicit adjacency and BFS.
//!
//! Nothing here uses Hamming distance as a stand-in for graph distance;
//! labels are consulted only to find edges and, in the isometry check, to
//! compare against the BFS result.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{CubeSubgraph, Membership};
use crate::invariants::{IndexReport, Method};
use crate::label::format_bits;

/// Marks vertices not reached by a BFS.
pub const UNREACHABLE: u32 = u32::MAX;

/// An edge by dense vertex indices; `u` is the endpoint whose coordinate
/// `direction` is 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    /// Zero-based coordinate in which the endpoints differ.
    pub direction: u32,
}

/// Vertices split by which endpoint of an edge they are strictly closer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EdgeSideCount {
    /// Strictly closer to `u`.
    pub n_uv: u64,
    /// Strictly closer to `v`.
    pub n_vu: u64,
    pub ties: u64,
}

/// Compressed adjacency lists over the vertices of a [`CubeSubgraph`].
#[derive(Debug, Clone)]
pub struct AdjacencyView {
    n: u32,
    labels: Vec<u64>,
    offsets: Vec<usize>,
    targets: Vec<u32>,
    edges: Vec<Edge>,
}

impl AdjacencyView {
    pub fn dim(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, index: usize) -> u64 {
        self.labels[index]
    }

    pub fn index_of(&self, label: u64) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn neighbors(&self, index: usize) -> &[u32] {
        &self.targets[self.offsets[index]..self.offsets[index + 1]]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The edge joining two labels, if both are vertices at Hamming distance one.
    pub fn edge_between(&self, a: u64, b: u64) -> Option<Edge> {
        let diff = a ^ b;
        if diff.count_ones() != 1 {
            return None;
        }
        let (lo, hi) = if a & diff == 0 { (a, b) } else { (b, a) };
        Some(Edge {
            u: self.index_of(lo)?,
            v: self.index_of(hi)?,
            direction: diff.trailing_zeros(),
        })
    }
}

/// Neighbor lists from membership queries on every one-bit flip.
pub fn build_adjacency(g: &CubeSubgraph) -> AdjacencyView {
    let n = g.dim();
    let labels = g.bits().to_vec();
    let member = Membership::new(g);
    let mut offsets = Vec::with_capacity(labels.len() + 1);
    let mut targets = Vec::new();
    let mut edges = Vec::new();
    offsets.push(0);
    for (ui, &u) in labels.iter().enumerate() {
        for i in 0..n {
            let w = u ^ (1 << i);
            if !member.contains(w) {
                continue;
            }
            let wi = g.index_of(w).expect("member labels are indexed");
            targets.push(wi as u32);
            if u & (1 << i) == 0 {
                edges.push(Edge {
                    u: ui,
                    v: wi,
                    direction: i,
                });
            }
        }
        offsets.push(targets.len());
    }
    AdjacencyView {
        n,
        labels,
        offsets,
        targets,
        edges,
    }
}

/// Unweighted shortest-path distances from `source`; [`UNREACHABLE`] elsewhere.
pub fn bfs_distances(a: &AdjacencyView, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; a.vertex_count()];
    let mut queue = VecDeque::new();
    bfs_into(a, source, &mut dist, &mut queue);
    dist
}

fn bfs_into(a: &AdjacencyView, source: usize, dist: &mut [u32], queue: &mut VecDeque<u32>) {
    dist.fill(UNREACHABLE);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source as u32);
    while let Some(x) = queue.pop_front() {
        let d = dist[x as usize] + 1;
        for &y in a.neighbors(x as usize) {
            if dist[y as usize] == UNREACHABLE {
                dist[y as usize] = d;
                queue.push_back(y);
            }
        }
    }
}

/// Side counts of one edge from the BFS trees of its two endpoints.
pub fn edge_side_counts(a: &AdjacencyView, edge: Edge) -> EdgeSideCount {
    let du = bfs_distances(a, edge.u);
    let dv = bfs_distances(a, edge.v);
    let mut out = EdgeSideCount::default();
    for (x, y) in du.iter().zip(&dv) {
        match x.cmp(y) {
            std::cmp::Ordering::Less => out.n_uv += 1,
            std::cmp::Ordering::Greater => out.n_vu += 1,
            std::cmp::Ordering::Equal => out.ties += 1,
        }
    }
    out
}

/// A vertex pair whose BFS distance differs from the Hamming distance of its labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceMismatch {
    pub u: usize,
    pub v: usize,
    pub graph_distance: u32,
    pub hamming: u32,
}

/// Everything the oracle derives from one BFS per vertex.
#[derive(Debug, Clone)]
pub struct AllPairs {
    pub vertex_count: u64,
    pub edge_count: u64,
    /// Sum of BFS distances over unordered pairs.
    pub wiener: u128,
    /// Indexed like [`AdjacencyView::edges`].
    pub side_counts: Vec<EdgeSideCount>,
    /// Smallest-index pair where graph and Hamming distance disagree.
    pub mismatch: Option<DistanceMismatch>,
}

impl AllPairs {
    /// `Σ_{uv ∈ E} |n_uv − n_vu|`
    pub fn mostar(&self) -> u128 {
        self.side_counts
            .iter()
            .map(|s| s.n_uv.abs_diff(s.n_vu) as u128)
            .sum()
    }

    pub fn is_isometric(&self) -> bool {
        self.mismatch.is_none()
    }

    pub fn report(&self) -> Result<IndexReport> {
        IndexReport::new(
            self.vertex_count,
            self.edge_count,
            self.wiener,
            self.mostar(),
            Method::Oracle,
        )
    }
}

struct Partial {
    distance_sum: u128,
    closer_u: Vec<u64>,
    closer_v: Vec<u64>,
    mismatch: Option<DistanceMismatch>,
    disconnected: bool,
}

impl Partial {
    fn new(edges: usize) -> Self {
        Partial {
            distance_sum: 0,
            closer_u: vec![0; edges],
            closer_v: vec![0; edges],
            mismatch: None,
            disconnected: false,
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.distance_sum += other.distance_sum;
        for (a, b) in self.closer_u.iter_mut().zip(other.closer_u) {
            *a += b;
        }
        for (a, b) in self.closer_v.iter_mut().zip(other.closer_v) {
            *a += b;
        }
        self.mismatch = match (self.mismatch, other.mismatch) {
            (Some(x), Some(y)) => Some(if (x.u, x.v) <= (y.u, y.v) { x } else { y }),
            (x, y) => x.or(y),
        };
        self.disconnected |= other.disconnected;
        self
    }
}

/// Runs BFS from every vertex. For each source `w` the distances feed the
/// Wiener sum, the isometry check, and, for every edge `uv`, whether `w` is
/// closer to `u` or to `v`. Sources are processed in parallel; all
/// reductions are exact integer sums.
pub fn all_pairs(a: &AdjacencyView) -> Result<AllPairs> {
    let vcount = a.vertex_count();
    let ecount = a.edges.len();
    let total = (0..vcount)
        .into_par_iter()
        .fold(
            || {
                (
                    Partial::new(ecount),
                    vec![UNREACHABLE; vcount],
                    VecDeque::new(),
                )
            },
            |(mut acc, mut dist, mut queue), w| {
                bfs_into(a, w, &mut dist, &mut queue);
                let lw = a.labels[w];
                for (t, &d) in dist.iter().enumerate() {
                    if d == UNREACHABLE {
                        acc.disconnected = true;
                        continue;
                    }
                    acc.distance_sum += d as u128;
                    if acc.mismatch.is_none() && t > w {
                        let h = (lw ^ a.labels[t]).count_ones();
                        if h != d {
                            acc.mismatch = Some(DistanceMismatch {
                                u: w,
                                v: t,
                                graph_distance: d,
                                hamming: h,
                            });
                        }
                    }
                }
                for (k, e) in a.edges.iter().enumerate() {
                    let (du, dv) = (dist[e.u], dist[e.v]);
                    if du < dv {
                        acc.closer_u[k] += 1;
                    } else if dv < du {
                        acc.closer_v[k] += 1;
                    }
                }
                (acc, dist, queue)
            },
        )
        .map(|(acc, _, _)| acc)
        .reduce(|| Partial::new(ecount), Partial::merge);

    if total.disconnected {
        return Err(Error::Disconnected);
    }
    let side_counts = total
        .closer_u
        .iter()
        .zip(&total.closer_v)
        .map(|(&n_uv, &n_vu)| EdgeSideCount {
            n_uv,
            n_vu,
            ties: vcount as u64 - n_uv - n_vu,
        })
        .collect();
    Ok(AllPairs {
        vertex_count: vcount as u64,
        edge_count: ecount as u64,
        wiener: total.distance_sum / 2,
        side_counts,
        mismatch: total.mismatch,
    })
}

/// `W(G)` as the sum of BFS distances over unordered pairs.
pub fn wiener_bruteforce(a: &AdjacencyView) -> Result<u128> {
    Ok(all_pairs(a)?.wiener)
}

/// `Mo(G)` from per-edge side counts.
pub fn mostar_bruteforce(a: &AdjacencyView) -> Result<u128> {
    Ok(all_pairs(a)?.mostar())
}

/// True iff every BFS distance equals the Hamming distance of the labels.
pub fn is_isometric(a: &AdjacencyView) -> Result<bool> {
    Ok(all_pairs(a)?.is_isometric())
}

/// Oracle [`IndexReport`] for a graph.
pub fn oracle_report(g: &CubeSubgraph) -> Result<IndexReport> {
    all_pairs(&build_adjacency(g))?.report()
}

impl DistanceMismatch {
    pub fn describe(&self, a: &AdjacencyView) -> String {
        format!(
            "d({}, {}) = {} but the labels differ in {} coordinates",
            format_bits(a.label(self.u), a.dim()),
            format_bits(a.label(self.v), a.dim()),
            self.graph_distance,
            self.hamming
        )
    }
}
