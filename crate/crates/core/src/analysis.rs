//! Index computation by a chosen method, and the full property check behind
//! `daisycube verify`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::CubeSubgraph;
use crate::invariants::{
    direction_profile, indices_from_profile, indices_semicube, mostar_semicube,
    verify_difference_identity, verify_relation, wiener_semicube, DirectionProfile, IndexReport,
    Method,
};
use crate::oracle::{all_pairs, build_adjacency, AllPairs};

fn closure_error(g: &CubeSubgraph) -> Option<Error> {
    let (u, i) = g.closure_witness()?;
    Some(Error::NotDaisyEmbedding(format!(
        "labeling is not downward-closed: clearing coordinate {} of {u} leaves the vertex set",
        i + 1
    )))
}

/// Semicube sums for both indices.
///
/// Only downward-closed labelings are accepted; these are always isometric,
/// so the O(|V|²) isometry check runs only to explain a rejection.
pub fn semicube_indices(g: &CubeSubgraph) -> Result<IndexReport> {
    if let Some(err) = closure_error(g) {
        let a = build_adjacency(g);
        let ap = all_pairs(&a)?;
        if let Some(m) = ap.mismatch {
            return Err(Error::NotIsometric(m.describe(&a)));
        }
        return Err(err);
    }
    indices_semicube(&direction_profile(g), g.vertex_count() as u64)
}

/// Edge-direction counts only; needs a downward-closed labeling.
pub fn corollary_indices(g: &CubeSubgraph) -> Result<IndexReport> {
    if let Some(err) = closure_error(g) {
        return Err(err);
    }
    indices_from_profile(&direction_profile(g), g.vertex_count() as u64)
}

/// All-pairs BFS; needs a connected graph.
pub fn oracle_indices(g: &CubeSubgraph) -> Result<IndexReport> {
    all_pairs(&build_adjacency(g))?.report()
}

pub fn indices_by(g: &CubeSubgraph, method: Method) -> Result<IndexReport> {
    match method {
        Method::Semicube => semicube_indices(g),
        Method::Oracle => oracle_indices(g),
        Method::Corollary => corollary_indices(g),
    }
}

/// Runs every method and fails unless all of them agree.
pub fn indices_all(g: &CubeSubgraph) -> Result<Vec<IndexReport>> {
    let reports = [Method::Semicube, Method::Oracle, Method::Corollary]
        .into_iter()
        .map(|m| indices_by(g, m))
        .collect::<Result<Vec<_>>>()?;
    if let Some(bad) = reports.iter().find(|r| !r.agrees_with(&reports[0])) {
        return Err(Error::MethodDisagreement(format!(
            "{} gives W={}, Mo={} but {} gives W={}, Mo={}",
            reports[0].method,
            reports[0].wiener,
            reports[0].mostar,
            bad.method,
            bad.wiener,
            bad.mostar
        )));
    }
    Ok(reports)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A prerequisite failed, so the check could not run.
    Skip,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

/// Result of checking every structural property and index identity of a graph.
#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub passed: bool,
    /// First failed check, plus the oracle residual when it is known.
    pub reason: Option<String>,
    #[serde(rename = "V")]
    pub vertex_count: u64,
    #[serde(rename = "E")]
    pub edge_count: u64,
    pub checks: Vec<Check>,
    pub reports: Vec<IndexReport>,
    pub profile: DirectionProfile,
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(
        &mut self,
        name: &'static str,
        ok: bool,
        pass: impl Into<String>,
        fail: impl Into<String>,
    ) -> bool {
        let (status, detail) = if ok {
            (Status::Pass, pass.into())
        } else {
            (Status::Fail, fail.into())
        };
        self.0.push(Check {
            name,
            status,
            detail,
        });
        ok
    }

    fn skip(&mut self, name: &'static str, why: &str) {
        self.0.push(Check {
            name,
            status: Status::Skip,
            detail: why.to_string(),
        });
    }
}

fn dirs(v: &[u32]) -> String {
    v.iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Checks connectivity, isometry, downward closure, the per-direction
/// semicube properties, per-edge side counts, agreement of all three index
/// methods with the oracle, and both index identities.
pub fn verify(g: &CubeSubgraph) -> Result<Verification> {
    let vcount = g.vertex_count() as u64;
    let profile = direction_profile(g);
    let ecount = profile.edge_count();
    let adjacency = build_adjacency(g);
    let mut checks = Checks(Vec::new());
    let mut reports = Vec::new();

    let oracle: Option<AllPairs> = match all_pairs(&adjacency) {
        Ok(ap) => {
            checks.push("connected", true, "", "");
            Some(ap)
        }
        Err(Error::Disconnected) => {
            checks.push("connected", false, "", "graph is disconnected");
            None
        }
        Err(e) => return Err(e),
    };

    match &oracle {
        Some(ap) => {
            let detail = ap
                .mismatch
                .map(|m| m.describe(&adjacency))
                .unwrap_or_default();
            checks.push(
                "isometric",
                ap.is_isometric(),
                "",
                format!("not isometric: {detail}"),
            );
        }
        None => checks.skip("isometric", "graph is disconnected"),
    }

    let witness = g.closure_witness();
    checks.push(
        "downward-closed",
        witness.is_none(),
        "",
        witness
            .map(|(u, i)| {
                format!(
                    "not downward-closed: clearing coordinate {} of {u} leaves the vertex set",
                    i + 1
                )
            })
            .unwrap_or_default(),
    );

    let comp = profile.complementarity_violations(vcount);
    checks.push(
        "semicube-complementarity",
        comp.is_empty(),
        "",
        format!("|W(i,0)| + |W(i,1)| != |V| in directions {}", dirs(&comp)),
    );
    let imbalance = profile.imbalance_violations();
    let balanced = checks.push(
        "semicube-balance",
        imbalance.is_empty(),
        "",
        format!("|W(i,0)| < |W(i,1)| in directions {}", dirs(&imbalance)),
    );
    let edge_viol = profile.edge_semicube_violations();
    let edges_match = checks.push(
        "edges-equal-upper-semicube",
        edge_viol.is_empty(),
        "",
        format!("|E_i| != |W(i,1)| in directions {}", dirs(&edge_viol)),
    );

    match &oracle {
        Some(ap) => {
            let mismatched = adjacency
                .edges()
                .iter()
                .zip(&ap.side_counts)
                .find(|(e, s)| {
                    let i = e.direction as usize;
                    (s.n_uv, s.n_vu) != (profile.w0[i], profile.w1[i])
                })
                .map(|(e, s)| {
                    format!(
                        "edge in direction {} has sides {}/{} but semicubes {}/{}",
                        e.direction + 1,
                        s.n_uv,
                        s.n_vu,
                        profile.w0[e.direction as usize],
                        profile.w1[e.direction as usize]
                    )
                });
            checks.push(
                "edge-sides-equal-semicubes",
                mismatched.is_none(),
                "",
                mismatched.unwrap_or_default(),
            );
            let ties: u64 = ap.side_counts.iter().map(|s| s.ties).sum();
            checks.push(
                "no-equidistant-vertices",
                ties == 0,
                "",
                format!("{ties} equidistant vertex/edge pairs"),
            );
        }
        None => {
            checks.skip("edge-sides-equal-semicubes", "graph is disconnected");
            checks.skip("no-equidistant-vertices", "graph is disconnected");
        }
    }

    let oracle_report = match &oracle {
        Some(ap) => Some(ap.report()?),
        None => None,
    };
    if let Some(r) = oracle_report {
        reports.push(r);
    }

    match (&oracle, oracle_report) {
        (Some(ap), Some(or)) if ap.is_isometric() => {
            let w = wiener_semicube(&profile)?;
            checks.push(
                "wiener-semicube-matches-oracle",
                w == or.wiener,
                format!("W = {w}"),
                format!("semicube W = {w}, oracle W = {}", or.wiener),
            );
        }
        _ => checks.skip(
            "wiener-semicube-matches-oracle",
            "labeling is not an isometric embedding",
        ),
    }

    match oracle_report {
        Some(or) if balanced => {
            let mo = mostar_semicube(&profile)?;
            checks.push(
                "mostar-semicube-matches-oracle",
                mo == or.mostar,
                format!("Mo = {mo}"),
                format!("semicube Mo = {mo}, oracle Mo = {}", or.mostar),
            );
            if oracle.as_ref().is_some_and(AllPairs::is_isometric) {
                reports.push(indices_semicube(&profile, vcount)?);
            }
        }
        Some(_) => checks.skip("mostar-semicube-matches-oracle", "semicube balance fails"),
        None => checks.skip("mostar-semicube-matches-oracle", "graph is disconnected"),
    }

    match oracle_report {
        Some(or) if edges_match => match indices_from_profile(&profile, vcount) {
            Ok(cr) => {
                checks.push(
                    "corollary-matches-oracle",
                    cr.agrees_with(&or),
                    "",
                    format!(
                        "corollary W={}, Mo={}; oracle W={}, Mo={}",
                        cr.wiener, cr.mostar, or.wiener, or.mostar
                    ),
                );
                reports.push(cr);
            }
            Err(e) => {
                checks.push("corollary-matches-oracle", false, "", e.to_string());
            }
        },
        Some(_) => checks.skip("corollary-matches-oracle", "|E_i| != |W(i,1)|"),
        None => checks.skip("corollary-matches-oracle", "graph is disconnected"),
    }

    match oracle_report {
        Some(or) => {
            checks.push(
                "relation",
                verify_relation(&or),
                "2W - Mo = |V||E|",
                format!("relation residual {}", or.residual),
            );
            let s = profile.sum_w1_squared()?;
            checks.push(
                "difference-identity",
                verify_difference_identity(&or, &profile),
                "W - Mo = sum |W(i,1)|^2",
                format!(
                    "W - Mo = {} but sum |W(i,1)|^2 = {s}",
                    or.wiener as i128 - or.mostar as i128
                ),
            );
        }
        None => {
            checks.skip("relation", "graph is disconnected");
            checks.skip("difference-identity", "graph is disconnected");
        }
    }

    let checks = checks.0;
    let first_failure = checks.iter().find(|c| c.status == Status::Fail);
    let passed = first_failure.is_none();
    let reason = first_failure.map(|c| match oracle_report {
        Some(or) if c.name != "relation" => {
            format!("{}; relation residual {}", c.detail, or.residual)
        }
        _ => c.detail.clone(),
    });
    Ok(Verification {
        passed,
        reason,
        vertex_count: vcount,
        edge_count: ecount,
        checks,
        reports,
        profile,
    })
}
