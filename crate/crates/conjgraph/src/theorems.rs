//! A registry of checkable statements relating the invariants: bounds with
//! exact rational sides, equality characterizations with certificates, and
//! corpus sweeps that verify every registered statement exhaustively.
//!
//! Each statement is evaluated on a single graph into a [`TheoremReport`]
//! carrying the hypothesis verdict, both sides as exact rationals, whether
//! the statement holds, whether it holds with equality, and named counters
//! from the underlying double-counting arguments. Statements whose equality
//! case is characterized by a family attach a [`FamilyCertificate`] when the
//! bound is tight.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::corpus::CorpusEntry;
use crate::families::{certify_gr, is_one_r_tree, FamilyCertificate, FamilyError};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{
    self, connected_domination_number, edge_domination_number, independence_number,
    k_domination_number, k_independence_number, local_k_independence_number, matching_number,
    total_domination_number, InvariantId, Witness,
};
use crate::Rational;

/// Cap on the spanning (1,r)-tree search in [`has_spanning_one_r_tree`].
pub const MAX_SPANNING_TREE_VERTICES: usize = 20;

/// Identifier of a registered statement. Parameterized statements carry
/// their integer parameters; [`registry`] lists the standard instantiations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// Members of `G_r` satisfy alpha = (r/2) * gamma_t exactly.
    Obs21,
    /// r-regular graphs (r >= 2) satisfy alpha <= (r/2) * gamma_t, with
    /// equality exactly on `G_r`.
    Thm22,
    /// Connected cubic graphs satisfy alpha <= (3/2) * gamma_t.
    Conj21Cubic,
    /// K_{1,r}-free graphs satisfy alpha_k <= gamma_j for j = r(k+1) - 1.
    Thm24 { r: usize, k: usize },
    /// Connected claw-free graphs satisfy alpha <= gamma_2.
    Cor25,
    /// Connected graphs with alpha_{k,L} <= r - 1 satisfy
    /// alpha_k <= gamma_{r+k-1}.
    Thm26 { r: usize, k: usize },
    /// Connected cubic graphs satisfy gamma_e >= (3/5) * mu.
    Conj31Cubic,
    /// Isolate-free graphs satisfy gamma_e >= delta * n / (2(Delta + delta - 1)).
    Thm32,
    /// Isolate-free graphs satisfy gamma_e >= (delta / (Delta + delta - 1)) * mu.
    Cor33,
    /// r-regular graphs (r >= 1) satisfy gamma_e >= (r / (2r - 1)) * mu.
    Cor34,
    /// Connected cubic graphs satisfy gamma_e >= (3/5) * mu.
    Cor35Cubic,
    /// Connected r-regular graphs (r >= 2) satisfy gamma_c >= (n - 2)/(r - 1).
    Thm43,
    /// Trees with maximum degree at most r have at most ((r-2)n + 2)/(r-1)
    /// leaves, with equality exactly on (1,r)-trees.
    Lem44 { r: usize },
    /// Connected graphs with maximum degree at most r satisfy
    /// gamma_c >= (n - 2)/(r - 1), with equality exactly when a spanning
    /// (1,r)-tree exists.
    Thm45 { r: usize },
    /// Connected r-regular graphs (r >= 2) satisfy gamma_c >= (2 mu - 2)/(r - 1).
    Cor46,
    /// Connected cubic graphs satisfy gamma_c >= mu - 1 and gamma_c >= alpha - 1.
    Cor47AbCubic,
}

/// Direction of a registered statement's comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        })
    }
}

impl TheoremId {
    /// Checks the parameter ranges of parameterized statements.
    pub fn validate(&self) -> Result<(), TheoremError> {
        let fail = |reason: String| {
            Err(TheoremError::InvalidParameters {
                theorem: self.to_string(),
                reason,
            })
        };
        match *self {
            TheoremId::Thm24 { r, .. } if r < 3 => fail(format!("requires r >= 3, got r={r}")),
            TheoremId::Thm26 { r, k } if r < k + 2 => {
                fail(format!("requires r >= k+2, got r={r}, k={k}"))
            }
            TheoremId::Lem44 { r } | TheoremId::Thm45 { r } if r < 3 => {
                fail(format!("requires r >= 3, got r={r}"))
            }
            _ => Ok(()),
        }
    }

    /// The comparison direction between the report's lhs and rhs.
    pub fn relation(&self) -> Relation {
        match self {
            TheoremId::Obs21 => Relation::Eq,
            TheoremId::Thm22
            | TheoremId::Conj21Cubic
            | TheoremId::Thm24 { .. }
            | TheoremId::Cor25
            | TheoremId::Thm26 { .. }
            | TheoremId::Lem44 { .. } => Relation::Le,
            TheoremId::Conj31Cubic
            | TheoremId::Thm32
            | TheoremId::Cor33
            | TheoremId::Cor34
            | TheoremId::Cor35Cubic
            | TheoremId::Thm43
            | TheoremId::Thm45 { .. }
            | TheoremId::Cor46
            | TheoremId::Cor47AbCubic => Relation::Ge,
        }
    }

    /// The statement in display form, hypothesis included.
    pub fn statement(&self) -> String {
        match *self {
            TheoremId::Obs21 => {
                "if G is in G_r for some r >= 2, then alpha(G) = (r/2)*gamma_t(G)".into()
            }
            TheoremId::Thm22 => {
                "if G is r-regular with r >= 2, then alpha(G) <= (r/2)*gamma_t(G), \
                 with equality iff G is in G_r"
                    .into()
            }
            TheoremId::Conj21Cubic => {
                "if G is connected and cubic, then alpha(G) <= (3/2)*gamma_t(G)".into()
            }
            TheoremId::Thm24 { r, k } => format!(
                "if G is K_{{1,{r}}}-free, then alpha_{k}(G) <= gamma_{j}(G)",
                j = r * (k + 1) - 1
            ),
            TheoremId::Cor25 => {
                "if G is connected and claw-free, then alpha(G) <= gamma_2(G)".into()
            }
            TheoremId::Thm26 { r, k } => format!(
                "if G is connected with alpha_{{{k},L}}(G) <= {bound}, \
                 then alpha_{k}(G) <= gamma_{j}(G)",
                bound = r - 1,
                j = r + k - 1
            ),
            TheoremId::Conj31Cubic => {
                "if G is connected and cubic, then gamma_e(G) >= (3/5)*mu(G)".into()
            }
            TheoremId::Thm32 => "if G has minimum degree delta >= 1, then \
                 gamma_e(G) >= delta*n/(2*(Delta + delta - 1))"
                .into(),
            TheoremId::Cor33 => "if G has minimum degree delta >= 1, then \
                 gamma_e(G) >= (delta/(Delta + delta - 1))*mu(G)"
                .into(),
            TheoremId::Cor34 => {
                "if G is r-regular with r >= 1, then gamma_e(G) >= (r/(2r - 1))*mu(G)".into()
            }
            TheoremId::Cor35Cubic => {
                "if G is connected and cubic, then gamma_e(G) >= (3/5)*mu(G)".into()
            }
            TheoremId::Thm43 => "if G is connected and r-regular with r >= 2, then \
                 gamma_c(G) >= (n - 2)/(r - 1)"
                .into(),
            TheoremId::Lem44 { r } => format!(
                "if T is a tree with Delta(T) <= {r}, then \
                 leaves(T) <= (({rm2})*n + 2)/{rm1}, with equality iff T is a (1,{r})-tree",
                rm2 = r - 2,
                rm1 = r - 1
            ),
            TheoremId::Thm45 { r } => format!(
                "if G is connected with Delta(G) <= {r}, then gamma_c(G) >= (n - 2)/{rm1}, \
                 with equality iff G has a spanning (1,{r})-tree",
                rm1 = r - 1
            ),
            TheoremId::Cor46 => "if G is connected and r-regular with r >= 2, then \
                 gamma_c(G) >= (2*mu(G) - 2)/(r - 1)"
                .into(),
            TheoremId::Cor47AbCubic => "if G is connected and cubic, then gamma_c(G) >= mu(G) - 1 \
                 and gamma_c(G) >= alpha(G) - 1"
                .into(),
        }
    }

    /// For conjecture-labelled statements, the registered statement that
    /// settles them.
    pub fn confirmed_by(&self) -> Option<TheoremId> {
        match self {
            TheoremId::Conj21Cubic => Some(TheoremId::Thm22),
            TheoremId::Conj31Cubic => Some(TheoremId::Cor35Cubic),
            _ => None,
        }
    }

    /// Whether the statement entered the registry as a conjecture. Every
    /// registered conjecture is settled, so corpus verification treats all
    /// statements with zero tolerance.
    pub fn is_conjecture(&self) -> bool {
        matches!(self, TheoremId::Conj21Cubic | TheoremId::Conj31Cubic)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TheoremId::Obs21 => write!(f, "OBS_2_1"),
            TheoremId::Thm22 => write!(f, "THM_2_2"),
            TheoremId::Conj21Cubic => write!(f, "CONJ_2_1_cubic"),
            TheoremId::Thm24 { r, k } => write!(f, "THM_2_4({r},{k})"),
            TheoremId::Cor25 => write!(f, "COR_2_5"),
            TheoremId::Thm26 { r, k } => write!(f, "THM_2_6({r},{k})"),
            TheoremId::Conj31Cubic => write!(f, "CONJ_3_1_cubic"),
            TheoremId::Thm32 => write!(f, "THM_3_2"),
            TheoremId::Cor33 => write!(f, "COR_3_3"),
            TheoremId::Cor34 => write!(f, "COR_3_4"),
            TheoremId::Cor35Cubic => write!(f, "COR_3_5_cubic"),
            TheoremId::Thm43 => write!(f, "THM_4_3"),
            TheoremId::Lem44 { r } => write!(f, "LEM_4_4({r})"),
            TheoremId::Thm45 { r } => write!(f, "THM_4_5({r})"),
            TheoremId::Cor46 => write!(f, "COR_4_6"),
            TheoremId::Cor47AbCubic => write!(f, "COR_4_7ab_cubic"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseTheoremError {
    #[error("unknown theorem id")]
    UnknownName,
    #[error("malformed parameter list")]
    BadParameters,
    #[error("{0}")]
    OutOfRange(String),
}

impl FromStr for TheoremId {
    type Err = ParseTheoremError;

    fn from_str(s: &str) -> Result<TheoremId, ParseTheoremError> {
        let (name, params) = match s.find('(') {
            Some(open) => {
                let close = s
                    .strip_suffix(')')
                    .ok_or(ParseTheoremError::BadParameters)?;
                let params: Vec<usize> = close[open + 1..]
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse()
                            .map_err(|_| ParseTheoremError::BadParameters)
                    })
                    .collect::<Result<_, _>>()?;
                (&s[..open], params)
            }
            None => (s, Vec::new()),
        };
        let id = match (name, params.as_slice()) {
            ("OBS_2_1", []) => TheoremId::Obs21,
            ("THM_2_2", []) => TheoremId::Thm22,
            ("CONJ_2_1_cubic", []) => TheoremId::Conj21Cubic,
            ("THM_2_4", &[r, k]) => TheoremId::Thm24 { r, k },
            ("COR_2_5", []) => TheoremId::Cor25,
            ("THM_2_6", &[r, k]) => TheoremId::Thm26 { r, k },
            ("CONJ_3_1_cubic", []) => TheoremId::Conj31Cubic,
            ("THM_3_2", []) => TheoremId::Thm32,
            ("COR_3_3", []) => TheoremId::Cor33,
            ("COR_3_4", []) => TheoremId::Cor34,
            ("COR_3_5_cubic", []) => TheoremId::Cor35Cubic,
            ("THM_4_3", []) => TheoremId::Thm43,
            ("LEM_4_4", &[r]) => TheoremId::Lem44 { r },
            ("THM_4_5", &[r]) => TheoremId::Thm45 { r },
            ("COR_4_6", []) => TheoremId::Cor46,
            ("COR_4_7ab_cubic", []) => TheoremId::Cor47AbCubic,
            (
                "OBS_2_1" | "THM_2_2" | "CONJ_2_1_cubic" | "COR_2_5" | "CONJ_3_1_cubic" | "THM_3_2"
                | "COR_3_3" | "COR_3_4" | "COR_3_5_cubic" | "THM_4_3" | "COR_4_6"
                | "COR_4_7ab_cubic" | "THM_2_4" | "THM_2_6" | "LEM_4_4" | "THM_4_5",
                _,
            ) => return Err(ParseTheoremError::BadParameters),
            _ => return Err(ParseTheoremError::UnknownName),
        };
        id.validate()
            .map_err(|e| ParseTheoremError::OutOfRange(e.to_string()))?;
        Ok(id)
    }
}

/// Every registered statement in section order, with parameterized
/// statements at their standard instantiations.
pub fn registry() -> Vec<TheoremId> {
    vec![
        TheoremId::Obs21,
        TheoremId::Thm22,
        TheoremId::Conj21Cubic,
        TheoremId::Thm24 { r: 3, k: 0 },
        TheoremId::Thm24 { r: 3, k: 1 },
        TheoremId::Cor25,
        TheoremId::Thm26 { r: 3, k: 0 },
        TheoremId::Conj31Cubic,
        TheoremId::Thm32,
        TheoremId::Cor33,
        TheoremId::Cor34,
        TheoremId::Cor35Cubic,
        TheoremId::Thm43,
        TheoremId::Lem44 { r: 3 },
        TheoremId::Thm45 { r: 3 },
        TheoremId::Cor46,
        TheoremId::Cor47AbCubic,
    ]
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TheoremError {
    #[error("{theorem}: {reason}")]
    InvalidParameters { theorem: String, reason: String },
    #[error("graph has {n} vertices, above the {what} cap of {cap}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("{theorem} fails on corpus graph {graph6}; the statement is settled, so this is an implementation bug")]
    Violation { theorem: String, graph6: String },
}

impl From<FamilyError> for TheoremError {
    fn from(e: FamilyError) -> TheoremError {
        match e {
            FamilyError::TooLarge { n, cap } => TheoremError::CapExceeded {
                what: "family certification",
                n,
                cap,
            },
            other => TheoremError::InvalidParameters {
                theorem: "family certification".into(),
                reason: other.to_string(),
            },
        }
    }
}

/// Outcome of evaluating one statement on one graph.
///
/// `holds` is vacuously true when the hypothesis fails, and `tight` requires
/// the hypothesis. Both sides are reported whenever they are computable,
/// hypothesis or not; a side stays `None` when the invariant it needs is
/// undefined on the graph. Diagnostics are the named counters of the
/// statement's double-counting argument, such as the cut size `|[A,Q]|`
/// between the complement `A` of a minimum total dominating set `Q` and `Q`
/// itself, or the degree counts `n_i` of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub hypothesis_met: bool,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    pub holds: bool,
    pub tight: bool,
    pub certificate: Option<FamilyCertificate>,
    pub diagnostics: BTreeMap<String, i64>,
}

impl TheoremReport {
    /// One tab-separated record: graph key, theorem id, lhs, rhs, holds,
    /// tight. Undefined sides print as `-`.
    pub fn record_line(&self, graph_key: &str) -> String {
        let side = |s: &Option<Rational>| match s {
            Some(v) => v.to_string(),
            None => "-".to_string(),
        };
        format!(
            "{graph_key}\t{}\t{}\t{}\t{}\t{}",
            self.theorem,
            side(&self.lhs),
            side(&self.rhs),
            self.holds,
            self.tight
        )
    }
}

fn ratio(v: usize) -> Rational {
    Rational::from_integer(v as i64)
}

fn vertex_witness(g: &Graph, id: InvariantId) -> Option<VertexSet> {
    match invariants::compute(g, id) {
        Ok(record) => match record.witness {
            Witness::VertexSet(s) => Some(s),
            Witness::LocalSet { set, .. } => Some(set),
            Witness::Matching(_) => None,
        },
        Err(_) => None,
    }
}

/// Evaluates `theorem` on `g`.
///
/// Errors are reserved for out-of-range parameters and for graphs so large
/// that a required certification search is refused; an unmet hypothesis is
/// not an error but a vacuously holding report.
pub fn check(theorem: TheoremId, g: &Graph) -> Result<TheoremReport, TheoremError> {
    theorem.validate()?;
    let n = g.n();
    let mut diagnostics = BTreeMap::new();
    let mut certificate = None;

    let (hypothesis_met, lhs, rhs) = match theorem {
        TheoremId::Obs21 => {
            if n > crate::families::MAX_CERTIFY_VERTICES {
                return Err(TheoremError::CapExceeded {
                    what: "family certification",
                    n,
                    cap: crate::families::MAX_CERTIFY_VERTICES,
                });
            }
            let regularity = g.regularity();
            let member = match regularity {
                Some(r) if r >= 2 => certify_gr(g, r)?,
                _ => None,
            };
            let hyp = member.is_some();
            if let Some(FamilyCertificate::GrPartition { a, b, .. }) = &member {
                diagnostics.insert("|A|".into(), a.len() as i64);
                diagnostics.insert("|B|".into(), b.len() as i64);
            }
            certificate = member;
            let lhs = Some(ratio(independence_number(g)));
            let rhs = regularity.and_then(|r| {
                total_domination_number(g)
                    .ok()
                    .map(|gt| Rational::new(r as i64, 2) * ratio(gt))
            });
            (hyp, lhs, rhs)
        }
        TheoremId::Thm22 => {
            let regularity = g.regularity();
            let hyp = matches!(regularity, Some(r) if r >= 2);
            let lhs = Some(ratio(independence_number(g)));
            let rhs = regularity.and_then(|r| {
                total_domination_number(g)
                    .ok()
                    .map(|gt| Rational::new(r as i64, 2) * ratio(gt))
            });
            if hyp {
                if let Some(q) = vertex_witness(g, InvariantId::GammaTotal) {
                    let a = g.vertices().difference(q);
                    let (induced_q, _) = g.induced_subgraph(q).expect("witness is in range");
                    diagnostics.insert("|Q|".into(), q.len() as i64);
                    diagnostics.insert("|A|".into(), a.len() as i64);
                    diagnostics.insert(
                        "|[A,Q]|".into(),
                        g.edges_between(a, q).expect("witness is in range") as i64,
                    );
                    diagnostics.insert("|E(G[Q])|".into(), induced_q.edge_count() as i64);
                }
                if lhs == rhs {
                    let r = regularity.expect("hypothesis checked regularity");
                    certificate = Some(
                        certify_gr(g, r)?.expect("equality in THM_2_2 forces a G_r partition"),
                    );
                }
            }
            (hyp, lhs, rhs)
        }
        TheoremId::Conj21Cubic => {
            let hyp = g.is_connected() && g.regularity() == Some(3);
            let lhs = Some(ratio(independence_number(g)));
            let rhs = total_domination_number(g)
                .ok()
                .map(|gt| Rational::new(3, 2) * ratio(gt));
            (hyp, lhs, rhs)
        }
        TheoremId::Thm24 { r, k } => {
            let j = r * (k + 1) - 1;
            let hyp = g.is_k1r_free(r);
            diagnostics.insert("j".into(), j as i64);
            cut_diagnostics(g, k, j, &mut diagnostics);
            let lhs = Some(ratio(k_independence_number(g, k)));
            let rhs = Some(ratio(k_domination_number(g, j)));
            (hyp, lhs, rhs)
        }
        TheoremId::Cor25 => {
            let hyp = g.is_connected() && g.is_claw_free();
            let lhs = Some(ratio(independence_number(g)));
            let rhs = Some(ratio(k_domination_number(g, 2)));
            (hyp, lhs, rhs)
        }
        TheoremId::Thm26 { r, k } => {
            let j = r + k - 1;
            let local = local_k_independence_number(g, k);
            let hyp = g.is_connected() && local < r;
            diagnostics.insert("j".into(), j as i64);
            diagnostics.insert("alpha_kL".into(), local as i64);
            cut_diagnostics(g, k, j, &mut diagnostics);
            let lhs = Some(ratio(k_independence_number(g, k)));
            let rhs = Some(ratio(k_domination_number(g, j)));
            (hyp, lhs, rhs)
        }
        TheoremId::Conj31Cubic | TheoremId::Cor35Cubic => {
            let hyp = g.is_connected() && g.regularity() == Some(3);
            let lhs = Some(ratio(edge_domination_number(g)));
            let rhs = Some(Rational::new(3, 5) * ratio(matching_number(g)));
            (hyp, lhs, rhs)
        }
        TheoremId::Thm32 => {
            let delta = g.min_degree();
            let hyp = n >= 1 && delta >= 1;
            diagnostics.insert("n".into(), n as i64);
            let ge = edge_domination_number(g);
            let lhs = Some(ratio(ge));
            let rhs = if hyp {
                let big = g.max_degree();
                diagnostics.insert("delta".into(), delta as i64);
                diagnostics.insert("Delta".into(), big as i64);
                diagnostics.insert("|A|".into(), 2 * ge as i64);
                diagnostics.insert("|B|".into(), n as i64 - 2 * ge as i64);
                Some(Rational::new(
                    (delta * n) as i64,
                    2 * (big + delta - 1) as i64,
                ))
            } else {
                None
            };
            (hyp, lhs, rhs)
        }
        TheoremId::Cor33 => {
            let delta = g.min_degree();
            let hyp = n >= 1 && delta >= 1;
            let lhs = Some(ratio(edge_domination_number(g)));
            let rhs = if hyp {
                let big = g.max_degree();
                Some(
                    Rational::new(delta as i64, (big + delta - 1) as i64)
                        * ratio(matching_number(g)),
                )
            } else {
                None
            };
            (hyp, lhs, rhs)
        }
        TheoremId::Cor34 => {
            let regularity = g.regularity();
            let hyp = matches!(regularity, Some(r) if r >= 1);
            let lhs = Some(ratio(edge_domination_number(g)));
            let rhs = regularity
                .filter(|&r| r >= 1)
                .map(|r| Rational::new(r as i64, 2 * r as i64 - 1) * ratio(matching_number(g)));
            (hyp, lhs, rhs)
        }
        TheoremId::Thm43 => {
            let regularity = g.regularity();
            let hyp = g.is_connected() && matches!(regularity, Some(r) if r >= 2);
            let lhs = connected_domination_number(g).ok().map(ratio);
            let rhs = regularity
                .filter(|&r| r >= 2)
                .map(|r| Rational::new(n as i64 - 2, r as i64 - 1));
            if hyp {
                if let Some(d) = vertex_witness(g, InvariantId::GammaConnected) {
                    let a = g.vertices().difference(d);
                    let (induced_d, _) = g.induced_subgraph(d).expect("witness is in range");
                    diagnostics.insert("|D|".into(), d.len() as i64);
                    diagnostics.insert(
                        "|[A,D]|".into(),
                        g.edges_between(a, d).expect("witness is in range") as i64,
                    );
                    diagnostics.insert("|E(G[D])|".into(), induced_d.edge_count() as i64);
                }
            }
            (hyp, lhs, rhs)
        }
        TheoremId::Lem44 { r } => {
            let hyp = g.is_tree() && g.max_degree() <= r;
            let leaves = (0..n).filter(|&v| g.degree(v) == 1).count();
            for i in 1..=r {
                let count = (0..n).filter(|&v| g.degree(v) == i).count();
                diagnostics.insert(format!("n_{i}"), count as i64);
            }
            let lhs = Some(ratio(leaves));
            let rhs = Some(Rational::new((r as i64 - 2) * n as i64 + 2, r as i64 - 1));
            if hyp && lhs == rhs {
                debug_assert!(is_one_r_tree(g, r));
                certificate = Some(FamilyCertificate::OneRTree { r });
            }
            (hyp, lhs, rhs)
        }
        TheoremId::Thm45 { r } => {
            let hyp = g.is_connected() && g.max_degree() <= r;
            let lhs = connected_domination_number(g).ok().map(ratio);
            let rhs = Some(Rational::new(n as i64 - 2, r as i64 - 1));
            if hyp && lhs == rhs {
                certificate = Some(
                    has_spanning_one_r_tree(g, r)?
                        .expect("equality in THM_4_5 forces a spanning (1,r)-tree"),
                );
            }
            (hyp, lhs, rhs)
        }
        TheoremId::Cor46 => {
            let regularity = g.regularity();
            let hyp = g.is_connected() && matches!(regularity, Some(r) if r >= 2);
            let mu = matching_number(g);
            diagnostics.insert("mu".into(), mu as i64);
            let lhs = connected_domination_number(g).ok().map(ratio);
            let rhs = regularity
                .filter(|&r| r >= 2)
                .map(|r| Rational::new(2 * mu as i64 - 2, r as i64 - 1));
            (hyp, lhs, rhs)
        }
        TheoremId::Cor47AbCubic => {
            let hyp = g.is_connected() && g.regularity() == Some(3);
            let mu = matching_number(g);
            let alpha = independence_number(g);
            diagnostics.insert("mu".into(), mu as i64);
            diagnostics.insert("alpha".into(), alpha as i64);
            let lhs = connected_domination_number(g).ok().map(ratio);
            let rhs = Some(std::cmp::max(ratio(mu), ratio(alpha)) - ratio(1));
            (hyp, lhs, rhs)
        }
    };

    let sides = || {
        (
            lhs.expect("sides are defined whenever the hypothesis holds"),
            rhs.expect("sides are defined whenever the hypothesis holds"),
        )
    };
    let holds = if !hypothesis_met {
        true
    } else {
        let (l, r) = sides();
        match theorem.relation() {
            Relation::Le => l <= r,
            Relation::Ge => l >= r,
            Relation::Eq => l == r,
        }
    };
    let tight = hypothesis_met && {
        let (l, r) = sides();
        l == r
    };
    if !tight {
        certificate = match theorem {
            TheoremId::Obs21 => certificate,
            _ => None,
        };
    }
    Ok(TheoremReport {
        theorem,
        hypothesis_met,
        lhs,
        rhs,
        holds,
        tight,
        certificate,
        diagnostics,
    })
}

/// Shared diagnostics of the k-independence versus j-domination bounds: with
/// `I` a maximum k-independent set and `D` a minimum j-dominating set, the
/// double count runs over the cut between `A = I - D` and `B = D - I`.
fn cut_diagnostics(g: &Graph, k: usize, j: usize, diagnostics: &mut BTreeMap<String, i64>) {
    let (Some(i_set), Some(d_set)) = (
        vertex_witness(g, InvariantId::AlphaK(k)),
        vertex_witness(g, InvariantId::GammaK(j)),
    ) else {
        return;
    };
    let a = i_set.difference(d_set);
    let b = d_set.difference(i_set);
    diagnostics.insert("|A|".into(), a.len() as i64);
    diagnostics.insert("|B|".into(), b.len() as i64);
    diagnostics.insert(
        "|[A,B]|".into(),
        g.edges_between(a, b).expect("witnesses are in range") as i64,
    );
}

/// Searches for a spanning tree of `g` in which every vertex has degree 1
/// or `r`. Returns `Ok(None)` when no such tree exists.
///
/// Degree counting forces the internal vertex count to `(n - 2)/(r - 1)`,
/// so the search enumerates connected dominating candidate sets of exactly
/// that size, then spanning trees of the candidate's induced subgraph, and
/// finally assigns each leaf to one internal neighbor so that every internal
/// vertex reaches degree exactly `r`. Graphs on fewer than three vertices
/// are refused: a spanning tree without internal vertices (the bare edge)
/// cannot witness the connected domination equality, because a minimum
/// connected dominating set is never empty.
pub fn has_spanning_one_r_tree(
    g: &Graph,
    r: usize,
) -> Result<Option<FamilyCertificate>, TheoremError> {
    if r < 3 {
        return Err(TheoremError::InvalidParameters {
            theorem: "spanning (1,r)-tree search".into(),
            reason: format!("requires r >= 3, got r={r}"),
        });
    }
    let n = g.n();
    if n > MAX_SPANNING_TREE_VERTICES {
        return Err(TheoremError::CapExceeded {
            what: "spanning tree search",
            n,
            cap: MAX_SPANNING_TREE_VERTICES,
        });
    }
    if n < 3 || !g.is_connected() || !(n - 2).is_multiple_of(r - 1) {
        return Ok(None);
    }
    let internal_count = (n - 2) / (r - 1);
    let mut internal = Vec::with_capacity(internal_count);
    Ok(
        search_internal_sets(g, r, internal_count, 0, &mut internal).map(|edges| {
            let certificate = FamilyCertificate::SpanningOneRTree { r, edges };
            debug_assert!(certificate.validate(g));
            certificate
        }),
    )
}

/// Enumerates candidate internal sets in ascending lexicographic order and
/// returns the first complete spanning (1,r)-tree found.
fn search_internal_sets(
    g: &Graph,
    r: usize,
    want: usize,
    next: usize,
    internal: &mut Vec<usize>,
) -> Option<Vec<(usize, usize)>> {
    if internal.len() == want {
        return expand_internal_set(g, r, internal);
    }
    if g.n() - next < want - internal.len() {
        return None;
    }
    for v in next..g.n() {
        internal.push(v);
        if let Some(edges) = search_internal_sets(g, r, want, v + 1, internal) {
            internal.pop();
            return Some(edges);
        }
        internal.pop();
    }
    None
}

/// Tries to realize a spanning (1,r)-tree with exactly `internal` as its
/// internal vertices: a spanning tree of the induced subgraph on `internal`
/// fixes the internal degrees, and the remaining degree budget must absorb
/// every outside vertex as a leaf.
fn expand_internal_set(g: &Graph, r: usize, internal: &[usize]) -> Option<Vec<(usize, usize)>> {
    let internal_mask: u64 = internal.iter().fold(0, |m, &v| m | 1 << v);
    let internal_set = VertexSet::new(internal_mask);
    let leaves: Vec<usize> = (0..g.n()).filter(|&v| !internal_set.contains(v)).collect();
    for &v in &leaves {
        if g.neighbors(v).intersection(internal_set).is_empty() {
            return None;
        }
    }
    let (induced, labels) = g
        .induced_subgraph(internal_set)
        .expect("internal set is in range");
    if !induced.is_connected() {
        return None;
    }
    let inner_edges = induced.edges();
    let want_edges = internal.len().saturating_sub(1);
    let mut chosen = Vec::with_capacity(want_edges);
    spanning_trees_of(
        &induced,
        &inner_edges,
        want_edges,
        0,
        &mut chosen,
        &mut |tree_edges| {
            let mut capacity: Vec<usize> = vec![r; internal.len()];
            for &(u, v) in tree_edges {
                capacity[u] -= 1;
                capacity[v] -= 1;
            }
            assign_leaves(g, &leaves, internal, &capacity).map(|assignment| {
                let mut edges: Vec<(usize, usize)> = tree_edges
                    .iter()
                    .map(|&(u, v)| {
                        let (a, b) = (labels[u], labels[v]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                for (leaf_index, internal_index) in assignment.into_iter().enumerate() {
                    let (a, b) = (leaves[leaf_index], internal[internal_index]);
                    edges.push((a.min(b), a.max(b)));
                }
                edges.sort_unstable();
                edges
            })
        },
    )
}

/// Visits every `want`-edge acyclic spanning subset of `edges` in
/// lexicographic order, stopping at the first visit that returns a result.
fn spanning_trees_of(
    induced: &Graph,
    edges: &[(usize, usize)],
    want: usize,
    from: usize,
    chosen: &mut Vec<(usize, usize)>,
    visit: &mut impl FnMut(&[(usize, usize)]) -> Option<Vec<(usize, usize)>>,
) -> Option<Vec<(usize, usize)>> {
    if chosen.len() == want {
        let tree = Graph::from_edges(induced.n(), chosen).expect("edges are in range");
        if tree.is_connected() {
            return visit(chosen);
        }
        return None;
    }
    if edges.len() - from < want - chosen.len() {
        return None;
    }
    for i in from..edges.len() {
        chosen.push(edges[i]);
        if let Some(result) = spanning_trees_of(induced, edges, want, i + 1, chosen, visit) {
            chosen.pop();
            return Some(result);
        }
        chosen.pop();
    }
    None
}

/// Matches every leaf to one adjacent internal vertex without exceeding the
/// per-vertex capacities, by augmenting paths over capacity slots. Returns
/// the internal index chosen for each leaf.
fn assign_leaves(
    g: &Graph,
    leaves: &[usize],
    internal: &[usize],
    capacity: &[usize],
) -> Option<Vec<usize>> {
    let mut load = vec![0usize; internal.len()];
    let mut assignment = vec![usize::MAX; leaves.len()];
    let mut slot_of: Vec<Vec<usize>> = vec![Vec::new(); internal.len()];
    for (leaf_index, &leaf) in leaves.iter().enumerate() {
        let mut visited = vec![false; internal.len()];
        if !place_leaf(
            g,
            leaves,
            internal,
            capacity,
            leaf_index,
            leaf,
            &mut load,
            &mut assignment,
            &mut slot_of,
            &mut visited,
        ) {
            return None;
        }
    }
    Some(assignment)
}

#[allow(clippy::too_many_arguments)]
fn place_leaf(
    g: &Graph,
    leaves: &[usize],
    internal: &[usize],
    capacity: &[usize],
    leaf_index: usize,
    leaf: usize,
    load: &mut [usize],
    assignment: &mut [usize],
    slot_of: &mut [Vec<usize>],
    visited: &mut [bool],
) -> bool {
    for (internal_index, &v) in internal.iter().enumerate() {
        if visited[internal_index] || !g.has_edge(leaf, v) {
            continue;
        }
        visited[internal_index] = true;
        if load[internal_index] < capacity[internal_index] {
            load[internal_index] += 1;
            assignment[leaf_index] = internal_index;
            slot_of[internal_index].push(leaf_index);
            return true;
        }
        let occupants = slot_of[internal_index].clone();
        for occupant in occupants {
            if place_leaf(
                g,
                leaves,
                internal,
                capacity,
                occupant,
                leaves[occupant],
                load,
                assignment,
                slot_of,
                visited,
            ) {
                slot_of[internal_index].retain(|&l| l != occupant);
                assignment[leaf_index] = internal_index;
                slot_of[internal_index].push(leaf_index);
                return true;
            }
        }
    }
    false
}

/// Summary of a corpus sweep for one statement: counters plus the sorted
/// touch set of graphs attaining equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSummary {
    pub theorem: TheoremId,
    pub graphs: usize,
    pub hypothesis_met: usize,
    pub holds: usize,
    pub tight: Vec<String>,
}

/// Checks `theorem` on every corpus entry in parallel. Any graph where the
/// statement fails aborts the sweep with the lexicographically smallest
/// counterexample; every registered statement is settled, so a violation
/// always signals an implementation bug.
pub fn verify_corpus(
    theorem: TheoremId,
    entries: &[CorpusEntry],
) -> Result<CorpusSummary, TheoremError> {
    let mut reports: Vec<(&str, TheoremReport)> = entries
        .par_iter()
        .map(|entry| check(theorem, &entry.graph).map(|report| (entry.graph6.as_str(), report)))
        .collect::<Result<_, _>>()?;
    reports.sort_by_key(|(a, _)| *a);
    let mut summary = CorpusSummary {
        theorem,
        graphs: reports.len(),
        hypothesis_met: 0,
        holds: 0,
        tight: Vec::new(),
    };
    for (graph6, report) in reports {
        if !report.holds {
            return Err(TheoremError::Violation {
                theorem: theorem.to_string(),
                graph6: graph6.to_string(),
            });
        }
        summary.hypothesis_met += usize::from(report.hypothesis_met);
        summary.holds += 1;
        if report.tight {
            summary.tight.push(graph6.to_string());
        }
    }
    Ok(summary)
}

/// Renders one record line per corpus entry, sorted by graph key.
pub fn report_lines(
    theorem: TheoremId,
    entries: &[CorpusEntry],
) -> Result<Vec<String>, TheoremError> {
    let mut lines: Vec<String> = entries
        .par_iter()
        .map(|entry| check(theorem, &entry.graph).map(|report| report.record_line(&entry.graph6)))
        .collect::<Result<_, _>>()?;
    lines.sort_unstable();
    Ok(lines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{parse_corpus, EMBEDDED_SELFTEST_CORPUS};
    use crate::families::{
        build_1r_tree, build_claw_free_chain, build_gr_example, overlay_regular_on_leaves,
    };
    use crate::graph6::parse_graph6;

    #[test]
    fn ids_display_and_parse() {
        for id in registry() {
            let rendered = id.to_string();
            assert_eq!(rendered.parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!(
            "THM_9_9".parse::<TheoremId>(),
            Err(ParseTheoremError::UnknownName)
        );
        assert_eq!(
            "THM_2_4(3)".parse::<TheoremId>(),
            Err(ParseTheoremError::BadParameters)
        );
        assert_eq!(
            "THM_2_2(3)".parse::<TheoremId>(),
            Err(ParseTheoremError::BadParameters)
        );
        assert!(matches!(
            "THM_2_4(2,0)".parse::<TheoremId>(),
            Err(ParseTheoremError::OutOfRange(_))
        ));
        assert!(matches!(
            "THM_2_6(2,1)".parse::<TheoremId>(),
            Err(ParseTheoremError::OutOfRange(_))
        ));
        assert!(matches!(
            "LEM_4_4(2)".parse::<TheoremId>(),
            Err(ParseTheoremError::OutOfRange(_))
        ));
    }

    #[test]
    fn confirmed_conjectures_point_at_their_generalizations() {
        assert_eq!(
            TheoremId::Conj21Cubic.confirmed_by(),
            Some(TheoremId::Thm22)
        );
        assert_eq!(
            TheoremId::Conj31Cubic.confirmed_by(),
            Some(TheoremId::Cor35Cubic)
        );
        assert!(TheoremId::Conj21Cubic.is_conjecture());
        assert!(!TheoremId::Thm22.is_conjecture());
        assert_eq!(TheoremId::Thm22.confirmed_by(), None);
    }

    #[test]
    fn thm22_is_tight_exactly_on_the_built_family() {
        let member = build_gr_example(3).unwrap();
        let report = check(TheoremId::Thm22, &member).unwrap();
        assert!(report.hypothesis_met && report.holds && report.tight);
        assert_eq!(report.lhs, Some(ratio(6)));
        assert_eq!(report.rhs, Some(ratio(6)));
        let cert = report.certificate.expect("tightness attaches a partition");
        assert!(cert.validate(&member));

        let petersen = parse_graph6("IheA@GUAo").unwrap();
        let report = check(TheoremId::Thm22, &petersen).unwrap();
        assert!(report.hypothesis_met && report.holds && !report.tight);
        assert_eq!(report.lhs, Some(ratio(4)));
        assert_eq!(report.rhs, Some(ratio(6)));
        assert_eq!(report.certificate, None);
    }

    #[test]
    fn thm22_diagnostics_satisfy_the_double_count() {
        for g in [
            build_gr_example(3).unwrap(),
            parse_graph6("IheA@GUAo").unwrap(),
        ] {
            let report = check(TheoremId::Thm22, &g).unwrap();
            let d = &report.diagnostics;
            let cut = d["|[A,Q]|"];
            assert_eq!(cut, 3 * d["|Q|"] - 2 * d["|E(G[Q])|"]);
            assert!(cut >= d["|A|"]);
            assert!(cut <= (3 - 1) * d["|Q|"]);
        }
    }

    #[test]
    fn thm32_on_k4_matches_the_formula() {
        let report = check(TheoremId::Thm32, &Graph::complete(4).unwrap()).unwrap();
        assert!(report.hypothesis_met && report.holds && !report.tight);
        assert_eq!(report.lhs, Some(ratio(2)));
        assert_eq!(report.rhs, Some(Rational::new(6, 5)));
    }

    #[test]
    fn thm45_on_k4_attaches_the_star() {
        let report = check(TheoremId::Thm45 { r: 3 }, &Graph::complete(4).unwrap()).unwrap();
        assert!(report.hypothesis_met && report.holds && report.tight);
        assert_eq!(report.lhs, Some(ratio(1)));
        assert_eq!(report.rhs, Some(ratio(1)));
        assert_eq!(
            report.certificate,
            Some(FamilyCertificate::SpanningOneRTree {
                r: 3,
                edges: vec![(0, 1), (0, 2), (0, 3)]
            })
        );
    }

    #[test]
    fn cor25_is_tight_on_the_chain_family() {
        let chain = build_claw_free_chain(3).unwrap();
        let report = check(TheoremId::Cor25, &chain).unwrap();
        assert!(report.hypothesis_met && report.holds && report.tight);
        assert_eq!(report.lhs, Some(ratio(4)));
        assert_eq!(report.rhs, Some(ratio(4)));
    }

    #[test]
    fn unmet_hypotheses_hold_vacuously_with_sides_reported() {
        let c5 = Graph::cycle(5).unwrap();
        let report = check(TheoremId::Conj21Cubic, &c5).unwrap();
        assert!(!report.hypothesis_met && report.holds && !report.tight);
        assert_eq!(report.lhs, Some(ratio(2)));
        assert_eq!(report.rhs, Some(Rational::new(9, 2)));

        let two_parts = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let report = check(TheoremId::Thm43, &two_parts).unwrap();
        assert!(!report.hypothesis_met && report.holds);
        assert_eq!(report.lhs, None);
        assert_eq!(report.rhs, None);
    }

    #[test]
    fn petersen_attains_the_connected_domination_bound() {
        let petersen = parse_graph6("IheA@GUAo").unwrap();
        let report = check(TheoremId::Thm43, &petersen).unwrap();
        assert!(report.hypothesis_met && report.holds && report.tight);
        assert_eq!(report.lhs, Some(ratio(4)));
        let d = &report.diagnostics;
        assert_eq!(d["|[A,D]|"], 3 * d["|D|"] - 2 * d["|E(G[D])|"]);

        let report = check(TheoremId::Thm45 { r: 3 }, &petersen).unwrap();
        assert!(report.tight);
        let cert = report
            .certificate
            .expect("tightness attaches a spanning tree");
        assert!(cert.validate(&petersen));
    }

    #[test]
    fn cor47_is_tight_on_the_overlay_cubic() {
        let spider = build_1r_tree(3, &[1]).unwrap();
        let cubic = overlay_regular_on_leaves(&spider, &Graph::cycle(4).unwrap()).unwrap();
        let report = check(TheoremId::Cor47AbCubic, &cubic).unwrap();
        assert!(report.hypothesis_met && report.holds && report.tight);
        assert_eq!(report.lhs, Some(ratio(2)));
        assert_eq!(report.rhs, Some(ratio(2)));
        assert_eq!(report.diagnostics["mu"], 3);
    }

    #[test]
    fn lem44_attaches_tree_certificates_exactly_at_equality() {
        let star = Graph::star(3).unwrap();
        let report = check(TheoremId::Lem44 { r: 3 }, &star).unwrap();
        assert!(report.tight);
        assert_eq!(
            report.certificate,
            Some(FamilyCertificate::OneRTree { r: 3 })
        );
        assert_eq!(report.diagnostics["n_1"], 3);
        assert_eq!(report.diagnostics["n_3"], 1);

        let path = Graph::path(4).unwrap();
        let report = check(TheoremId::Lem44 { r: 3 }, &path).unwrap();
        assert!(report.hypothesis_met && report.holds && !report.tight);
        assert_eq!(report.lhs, Some(ratio(2)));
        assert_eq!(report.rhs, Some(Rational::new(6, 2)));
        assert_eq!(report.certificate, None);
    }

    #[test]
    fn spanning_tree_search_matches_the_frozen_examples() {
        let search = |g: &Graph| has_spanning_one_r_tree(g, 3).unwrap();
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            search(&k4),
            Some(FamilyCertificate::SpanningOneRTree {
                r: 3,
                edges: vec![(0, 1), (0, 2), (0, 3)]
            })
        );
        assert_eq!(search(&Graph::cycle(6).unwrap()), None);
        assert_eq!(search(&Graph::path(2).unwrap()), None);

        let spider = build_1r_tree(3, &[1]).unwrap();
        let cubic = overlay_regular_on_leaves(&spider, &Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(
            search(&cubic),
            Some(FamilyCertificate::SpanningOneRTree {
                r: 3,
                edges: vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]
            })
        );
    }

    #[test]
    fn spanning_tree_search_enforces_its_cap() {
        let p21 = Graph::path(21).unwrap();
        assert_eq!(
            has_spanning_one_r_tree(&p21, 3).unwrap_err(),
            TheoremError::CapExceeded {
                what: "spanning tree search",
                n: 21,
                cap: 20
            }
        );
        assert!(has_spanning_one_r_tree(&p21, 2).is_err());
    }

    #[test]
    fn obs21_recognizes_members_and_carries_partition_sizes() {
        let member = build_gr_example(4).unwrap();
        let report = check(TheoremId::Obs21, &member).unwrap();
        assert!(report.hypothesis_met && report.holds && report.tight);
        assert_eq!(report.lhs, Some(ratio(8)));
        assert_eq!(report.rhs, Some(ratio(8)));
        assert_eq!(report.diagnostics["|B|"], 4);
        assert!(report.certificate.is_some());

        let petersen = parse_graph6("IheA@GUAo").unwrap();
        let report = check(TheoremId::Obs21, &petersen).unwrap();
        assert!(!report.hypothesis_met && report.holds && !report.tight);
    }

    #[test]
    fn record_lines_render_missing_sides_as_dashes() {
        let two_parts = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let report = check(TheoremId::Thm43, &two_parts).unwrap();
        assert_eq!(report.record_line("D?_"), "D?_\tTHM_4_3\t-\t-\ttrue\tfalse");

        let report = check(TheoremId::Thm32, &Graph::complete(4).unwrap()).unwrap();
        assert_eq!(report.record_line("C~"), "C~\tTHM_3_2\t2\t6/5\ttrue\tfalse");
    }

    #[test]
    fn corpus_sweep_of_trees_touches_exactly_the_one_r_trees() {
        let corpus = parse_corpus(EMBEDDED_SELFTEST_CORPUS).unwrap();
        let trees: Vec<CorpusEntry> = corpus
            .entries
            .into_iter()
            .filter(|e| e.graph.is_tree())
            .collect();
        assert!(trees.len() > 20);
        let summary = verify_corpus(TheoremId::Lem44 { r: 3 }, &trees).unwrap();
        assert_eq!(summary.graphs, trees.len());
        assert_eq!(summary.holds, trees.len());
        let expected: Vec<String> = {
            let mut keys: Vec<String> = trees
                .iter()
                .filter(|e| is_one_r_tree(&e.graph, 3))
                .map(|e| e.graph6.clone())
                .collect();
            keys.sort();
            keys
        };
        assert_eq!(summary.tight, expected);
        assert!(!summary.tight.is_empty());
    }

    #[test]
    fn thm26_agrees_with_cor25_on_connected_claw_free_graphs() {
        for ell in 1..=3 {
            let chain = build_claw_free_chain(ell).unwrap();
            let special = check(TheoremId::Thm26 { r: 3, k: 0 }, &chain).unwrap();
            let corollary = check(TheoremId::Cor25, &chain).unwrap();
            assert_eq!(special.hypothesis_met, corollary.hypothesis_met);
            assert_eq!(special.lhs, corollary.lhs);
            assert_eq!(special.rhs, corollary.rhs);
            assert_eq!(special.tight, corollary.tight);
        }
    }
}
