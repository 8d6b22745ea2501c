//! Per-direction semicube profiles and the closed-form Wiener and Mostar indices.
//!
//! For a graph with labels in `B^n` and a direction `i`, the semicube
//! `W(i,χ)` is the set of vertices whose coordinate `i` equals `χ`, and `E_i`
//! is the set of edges whose endpoints differ exactly in coordinate `i`.
//!
//! * On any isometric labeling, `W = Σ |W(i,0)|·|W(i,1)|`.
//! * On a downward-closed labeling, `|W(i,0)| ≥ |W(i,1)| = |E_i|` for every
//!   `i`, and `Mo = Σ |W(i,1)|·(|W(i,0)| − |W(i,1)|)`. Together these give
//!   `2W − Mo = |V|·|E|`, `W − Mo = Σ |W(i,1)|²`, and the edge-only forms
//!   `W = |V||E| − Σ |E_i|²`, `Mo = |V||E| − 2 Σ |E_i|²`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CubeSubgraph, Membership};

/// Semicube and edge counts for every direction of a labeled graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectionProfile {
    pub n: u32,
    /// `|E_i|`, counted from actual edges.
    pub e: Vec<u64>,
    /// `|W(i,0)|`
    pub w0: Vec<u64>,
    /// `|W(i,1)|`
    pub w1: Vec<u64>,
}

impl DirectionProfile {
    pub fn edge_count(&self) -> u64 {
        self.e.iter().sum()
    }

    /// Directions where `w0 + w1` differs from `vertex_count`.
    pub fn complementarity_violations(&self, vertex_count: u64) -> Vec<u32> {
        (0..self.n)
            .filter(|&i| self.w0[i as usize] + self.w1[i as usize] != vertex_count)
            .collect()
    }

    /// Directions where the 1-side semicube is larger than the 0-side.
    pub fn imbalance_violations(&self) -> Vec<u32> {
        (0..self.n)
            .filter(|&i| self.w0[i as usize] < self.w1[i as usize])
            .collect()
    }

    /// Directions where `|E_i| != |W(i,1)|`.
    pub fn edge_semicube_violations(&self) -> Vec<u32> {
        (0..self.n)
            .filter(|&i| self.e[i as usize] != self.w1[i as usize])
            .collect()
    }

    /// `Σ |W(i,1)|²`
    pub fn sum_w1_squared(&self) -> Result<u128> {
        sum_of_squares(&self.w1)
    }

    /// `Σ |E_i|²`
    pub fn sum_e_squared(&self) -> Result<u128> {
        sum_of_squares(&self.e)
    }
}

fn sum_of_squares(xs: &[u64]) -> Result<u128> {
    xs.iter().try_fold(0u128, |acc, &x| {
        acc.checked_add(x as u128 * x as u128)
            .ok_or(Error::Overflow("sum of squares"))
    })
}

/// Counts `w1`, `w0` and `e` for each direction in one pass over the vertices.
pub fn direction_profile(g: &CubeSubgraph) -> DirectionProfile {
    let n = g.dim();
    let member = Membership::new(g);
    let mut w1 = vec![0u64; n as usize];
    let mut e = vec![0u64; n as usize];
    for &u in g.bits() {
        let mut ones = u;
        while ones != 0 {
            let i = ones.trailing_zeros() as usize;
            ones &= ones - 1;
            w1[i] += 1;
            if member.contains(u ^ (1 << i)) {
                e[i] += 1;
            }
        }
    }
    let v = g.vertex_count() as u64;
    let w0 = w1.iter().map(|&c| v - c).collect();
    DirectionProfile { n, e, w0, w1 }
}

/// `W = Σ_i |W(i,0)|·|W(i,1)|`. Only meaningful for isometric labelings.
pub fn wiener_semicube(p: &DirectionProfile) -> Result<u128> {
    p.w0.iter().zip(&p.w1).try_fold(0u128, |acc, (&a, &b)| {
        acc.checked_add(a as u128 * b as u128)
            .ok_or(Error::Overflow("wiener_semicube"))
    })
}

/// `Mo = Σ_i |W(i,1)|·(|W(i,0)| − |W(i,1)|)`.
///
/// Refuses profiles with `|W(i,0)| < |W(i,1)|` in some direction: those cannot
/// come from a downward-closed labeling and the formula does not apply.
pub fn mostar_semicube(p: &DirectionProfile) -> Result<u128> {
    if let Some(&i) = p.imbalance_violations().first() {
        return Err(Error::NotDaisyEmbedding(format!(
            "semicube imbalance |W(i,0)| = {} < |W(i,1)| = {} in direction {}",
            p.w0[i as usize],
            p.w1[i as usize],
            i + 1
        )));
    }
    p.w0.iter().zip(&p.w1).try_fold(0u128, |acc, (&a, &b)| {
        acc.checked_add(b as u128 * (a - b) as u128)
            .ok_or(Error::Overflow("mostar_semicube"))
    })
}

/// Which computation produced an [`IndexReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Semicube sums.
    Semicube,
    /// All-pairs BFS.
    Oracle,
    /// Edge-direction counts only.
    Corollary,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Semicube => "semicube",
            Method::Oracle => "oracle",
            Method::Corollary => "corollary",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Wiener and Mostar indices of one graph by one method, with the residual
/// `2W − Mo − |V|·|E|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ReportDoc", try_from = "ReportDoc")]
pub struct IndexReport {
    pub vertex_count: u64,
    pub edge_count: u64,
    pub wiener: u128,
    pub mostar: u128,
    pub method: Method,
    pub residual: i128,
}

impl IndexReport {
    pub fn new(
        vertex_count: u64,
        edge_count: u64,
        wiener: u128,
        mostar: u128,
        method: Method,
    ) -> Result<Self> {
        let residual = relation_residual(vertex_count, edge_count, wiener, mostar)?;
        Ok(Self {
            vertex_count,
            edge_count,
            wiener,
            mostar,
            method,
            residual,
        })
    }

    /// Same indices and counts, ignoring the method tag.
    pub fn agrees_with(&self, other: &IndexReport) -> bool {
        (self.vertex_count, self.edge_count, self.wiener, self.mostar)
            == (
                other.vertex_count,
                other.edge_count,
                other.wiener,
                other.mostar,
            )
    }
}

fn relation_residual(v: u64, e: u64, wiener: u128, mostar: u128) -> Result<i128> {
    let overflow = Error::Overflow("relation residual");
    let two_w = i128::try_from(wiener)
        .ok()
        .and_then(|w| w.checked_mul(2))
        .ok_or(overflow.clone())?;
    let mo = i128::try_from(mostar).map_err(|_| overflow.clone())?;
    let ve = v as i128 * e as i128;
    two_w
        .checked_sub(mo)
        .and_then(|x| x.checked_sub(ve))
        .ok_or(overflow)
}

/// Indices from the semicube sums for `W` and `Mo`.
pub fn indices_semicube(p: &DirectionProfile, vertex_count: u64) -> Result<IndexReport> {
    let wiener = wiener_semicube(p)?;
    let mostar = mostar_semicube(p)?;
    IndexReport::new(
        vertex_count,
        p.edge_count(),
        wiener,
        mostar,
        Method::Semicube,
    )
}

/// `W = |V||E| − Σ|E_i|²` and `Mo = |V||E| − 2Σ|E_i|²`.
///
/// Requires `|E_i| = |W(i,1)|` in every direction, which holds for every
/// downward-closed labeling.
pub fn indices_from_profile(p: &DirectionProfile, vertex_count: u64) -> Result<IndexReport> {
    if let Some(&i) = p.edge_semicube_violations().first() {
        return Err(Error::NotDaisyEmbedding(format!(
            "|E_i| = {} differs from |W(i,1)| = {} in direction {}",
            p.e[i as usize],
            p.w1[i as usize],
            i + 1
        )));
    }
    let e = p.edge_count();
    let ve = vertex_count as u128 * e as u128;
    let squares = p.sum_e_squared()?;
    let wiener = ve
        .checked_sub(squares)
        .ok_or(Error::Overflow("corollary wiener"))?;
    let mostar = squares
        .checked_mul(2)
        .and_then(|s| ve.checked_sub(s))
        .ok_or_else(|| Error::NotDaisyEmbedding("2·Σ|E_i|² exceeds |V|·|E|".to_string()))?;
    IndexReport::new(vertex_count, e, wiener, mostar, Method::Corollary)
}

/// `2W − Mo = |V|·|E|`.
pub fn verify_relation(r: &IndexReport) -> bool {
    r.residual == 0
}

/// `W − Mo = Σ |W(i,1)|²`.
pub fn verify_difference_identity(r: &IndexReport, p: &DirectionProfile) -> bool {
    match p.sum_w1_squared() {
        Ok(s) => r.wiener.checked_sub(r.mostar) == Some(s),
        Err(_) => false,
    }
}

#[derive(Serialize, Deserialize)]
struct ReportDoc {
    #[serde(rename = "V")]
    vertices: u64,
    #[serde(rename = "E")]
    edges: u64,
    #[serde(rename = "W")]
    wiener: u128,
    #[serde(rename = "Mo")]
    mostar: u128,
    method: Method,
    residual: i128,
    relation_holds: bool,
}

impl From<IndexReport> for ReportDoc {
    fn from(r: IndexReport) -> Self {
        ReportDoc {
            vertices: r.vertex_count,
            edges: r.edge_count,
            wiener: r.wiener,
            mostar: r.mostar,
            method: r.method,
            residual: r.residual,
            relation_holds: verify_relation(&r),
        }
    }
}

impl TryFrom<ReportDoc> for IndexReport {
    type Error = Error;

    fn try_from(d: ReportDoc) -> Result<Self> {
        let r = IndexReport::new(d.vertices, d.edges, d.wiener, d.mostar, d.method)?;
        if r.residual != d.residual || verify_relation(&r) != d.relation_holds {
            return Err(Error::Json(
                "residual/relation_holds inconsistent with V, E, W, Mo".into(),
            ));
        }
        Ok(r)
    }
}
