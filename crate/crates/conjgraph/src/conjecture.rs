//! Automated conjecture generation over graph corpora.
//!
//! Every conjecture has the normalized form `lhs <= slope * rhs + intercept`
//! under a hypothesis drawn from a fixed catalog, with the engine's target
//! invariant on exactly one side. A lower bound on the target is therefore
//! stored with the target on the right: "gamma_edge >= (3/5) mu" becomes
//! `mu <= (5/3) gamma_edge`.
//!
//! [`generate`] scans a corpus for the strongest true inequalities over a
//! slope and intercept grid, attributes each one to the hypothesis with the
//! largest support (ties to the most specific), and ranks by touch count.
//! [`minimize_hypothesis`] relaxes a single conjecture along the hypothesis
//! implication order, and [`significance_filter`] keeps only conjectures that
//! improve the known bound on the target for at least one corpus graph.
//!
//! Graphs on which an invariant is undefined, such as `gamma_total` with an
//! isolated vertex, are excluded from the support of conjectures mentioning
//! that invariant rather than treated as counterexamples.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::corpus::CorpusEntry;
use crate::graph::{Graph, StructuralPredicates};
use crate::invariants::{invariant_value, InvariantId};
use crate::Rational;

/// How many equality witnesses a conjecture carries.
const TIGHT_EXAMPLE_CAP: usize = 3;

/// A structural precondition from the engine's fixed catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Hypothesis {
    /// No precondition.
    None,
    Connected,
    /// Connected and triangle-free.
    TriangleFree,
    /// Connected and bipartite.
    Bipartite,
    /// Connected and claw-free.
    ClawFree,
    /// Connected and r-regular.
    Regular(usize),
    Tree,
}

impl Hypothesis {
    pub fn matches(&self, g: &Graph) -> bool {
        self.matches_predicates(&g.structural_predicates())
    }

    fn matches_predicates(&self, p: &StructuralPredicates) -> bool {
        match self {
            Hypothesis::None => true,
            Hypothesis::Connected => p.connected,
            Hypothesis::TriangleFree => p.connected && p.triangle_free,
            Hypothesis::Bipartite => p.connected && p.bipartite,
            Hypothesis::ClawFree => p.connected && p.claw_free,
            Hypothesis::Regular(r) => p.connected && p.regular == Some(*r),
            Hypothesis::Tree => p.tree,
        }
    }

    /// Catalog hypotheses implied by `self`, weakest first, ending with
    /// `self`. Used to relax a conjecture without changing its truth.
    pub fn weaker_chain(&self) -> Vec<Hypothesis> {
        match self {
            Hypothesis::None => vec![Hypothesis::None],
            Hypothesis::Connected => vec![Hypothesis::None, Hypothesis::Connected],
            Hypothesis::TriangleFree => {
                vec![
                    Hypothesis::None,
                    Hypothesis::Connected,
                    Hypothesis::TriangleFree,
                ]
            }
            Hypothesis::Bipartite => vec![
                Hypothesis::None,
                Hypothesis::Connected,
                Hypothesis::TriangleFree,
                Hypothesis::Bipartite,
            ],
            Hypothesis::ClawFree => {
                vec![
                    Hypothesis::None,
                    Hypothesis::Connected,
                    Hypothesis::ClawFree,
                ]
            }
            Hypothesis::Regular(2) => vec![
                Hypothesis::None,
                Hypothesis::Connected,
                Hypothesis::ClawFree,
                Hypothesis::Regular(2),
            ],
            Hypothesis::Regular(r) => {
                vec![
                    Hypothesis::None,
                    Hypothesis::Connected,
                    Hypothesis::Regular(*r),
                ]
            }
            Hypothesis::Tree => vec![
                Hypothesis::None,
                Hypothesis::Connected,
                Hypothesis::TriangleFree,
                Hypothesis::Bipartite,
                Hypothesis::Tree,
            ],
        }
    }

    /// Totally ordered specificity used to break support ties. Higher means
    /// more specific; the exact order between incomparable hypotheses is a
    /// fixed convention, not an implication claim.
    fn strength(&self) -> (u8, usize) {
        match self {
            Hypothesis::None => (0, 0),
            Hypothesis::Connected => (1, 0),
            Hypothesis::TriangleFree => (2, 0),
            Hypothesis::Bipartite => (3, 0),
            Hypothesis::ClawFree => (4, 0),
            Hypothesis::Regular(r) => (5, *r),
            Hypothesis::Tree => (6, 0),
        }
    }
}

impl std::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Hypothesis::None => write!(f, "none"),
            Hypothesis::Connected => write!(f, "connected"),
            Hypothesis::TriangleFree => write!(f, "triangle-free"),
            Hypothesis::Bipartite => write!(f, "bipartite"),
            Hypothesis::ClawFree => write!(f, "claw-free"),
            Hypothesis::Regular(3) => write!(f, "cubic"),
            Hypothesis::Regular(r) => write!(f, "{r}-regular"),
            Hypothesis::Tree => write!(f, "tree"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown hypothesis `{0}`")]
pub struct ParseHypothesisError(String);

impl std::str::FromStr for Hypothesis {
    type Err = ParseHypothesisError;

    fn from_str(s: &str) -> Result<Hypothesis, ParseHypothesisError> {
        match s {
            "none" => Ok(Hypothesis::None),
            "connected" => Ok(Hypothesis::Connected),
            "triangle-free" => Ok(Hypothesis::TriangleFree),
            "bipartite" => Ok(Hypothesis::Bipartite),
            "claw-free" => Ok(Hypothesis::ClawFree),
            "cubic" => Ok(Hypothesis::Regular(3)),
            "tree" => Ok(Hypothesis::Tree),
            _ => match s
                .strip_suffix("-regular")
                .and_then(|r| r.parse::<usize>().ok())
            {
                Some(r) => Ok(Hypothesis::Regular(r)),
                None => Err(ParseHypothesisError(s.to_string())),
            },
        }
    }
}

/// Search space for [`generate`].
#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Candidate slopes, all positive.
    pub slopes: Vec<Rational>,
    /// Candidate integer intercepts.
    pub intercepts: Vec<i64>,
    /// Invariants paired against the target.
    pub invariants: Vec<InvariantId>,
    pub hypotheses: Vec<Hypothesis>,
    /// Conjectures kept after ranking.
    pub max_output: usize,
}

impl Default for EngineConfig {
    /// Slopes a/b with 1 <= a <= 8, 1 <= b <= 4, gcd(a, b) = 1; intercepts
    /// -2..=2; the eight invariants from the corpus cache format; every
    /// catalog hypothesis.
    fn default() -> EngineConfig {
        let mut slopes = Vec::new();
        for a in 1..=8i64 {
            for b in 1..=4i64 {
                if gcd(a, b) == 1 {
                    slopes.push(Rational::new(a, b));
                }
            }
        }
        EngineConfig {
            slopes,
            intercepts: (-2..=2).collect(),
            invariants: vec![
                InvariantId::Alpha,
                InvariantId::Mu,
                InvariantId::Gamma,
                InvariantId::GammaTotal,
                InvariantId::GammaK(2),
                InvariantId::GammaConnected,
                InvariantId::GammaIndependent,
                InvariantId::GammaEdge,
            ],
            hypotheses: vec![
                Hypothesis::None,
                Hypothesis::Connected,
                Hypothesis::TriangleFree,
                Hypothesis::Bipartite,
                Hypothesis::ClawFree,
                Hypothesis::Regular(2),
                Hypothesis::Regular(3),
                Hypothesis::Regular(4),
                Hypothesis::Tree,
            ],
            max_output: 50,
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("the corpus is empty")]
    EmptyCorpus,
    #[error("target invariant `{0}` is not in the configured catalog")]
    TargetNotInCatalog(InvariantId),
    #[error("the {0} grid is empty")]
    EmptyGrid(&'static str),
    #[error("slope {0} is not positive")]
    NonPositiveSlope(Rational),
}

/// A normalized inequality `lhs <= slope * rhs + intercept` proposed under a
/// hypothesis, with its evidence counts on the generating corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjecture {
    pub hypothesis: Hypothesis,
    /// The invariant the engine was asked to bound; always `lhs` or `rhs`.
    pub target: InvariantId,
    pub lhs: InvariantId,
    pub slope: Rational,
    pub rhs: InvariantId,
    pub intercept: Rational,
    /// Corpus graphs attaining equality.
    pub touch: usize,
    /// Corpus graphs satisfying the hypothesis with both sides defined.
    pub support: usize,
    /// Up to three graph6 keys of equality graphs, byte-ordered.
    pub tight_examples: Vec<String>,
}

impl Conjecture {
    pub fn holds_at(&self, lhs_value: i64, rhs_value: i64) -> bool {
        Rational::from_integer(lhs_value)
            <= self.slope * Rational::from_integer(rhs_value) + self.intercept
    }

    pub fn is_tight_at(&self, lhs_value: i64, rhs_value: i64) -> bool {
        Rational::from_integer(lhs_value)
            == self.slope * Rational::from_integer(rhs_value) + self.intercept
    }

    /// The full engine output row: statement, evidence counts, equality
    /// witnesses, tab-separated.
    pub fn output_line(&self) -> String {
        let tight = if self.tight_examples.is_empty() {
            "-".to_string()
        } else {
            self.tight_examples.join(",")
        };
        format!(
            "{self}\ttouch={}\tsupport={}\ttight={tight}",
            self.touch, self.support
        )
    }

    /// Ranking tie-breaker: scale-invariant forms first, since a pure slope
    /// generalizes beyond the corpus's size range while an intercept bakes
    /// one in, then simpler coefficients.
    fn form_complexity(&self) -> (u8, i64) {
        let form = if self.intercept == Rational::from_integer(0) {
            0
        } else {
            1
        };
        (
            form,
            self.slope.numer() + self.slope.denom() + self.intercept.numer().abs(),
        )
    }
}

impl std::fmt::Display for Conjecture {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {} <= ", self.hypothesis, self.lhs)?;
        if self.slope != Rational::from_integer(1) {
            if self.slope.is_integer() {
                write!(f, "{}*", self.slope)?;
            } else {
                write!(f, "({})*", self.slope)?;
            }
        }
        write!(f, "{}", self.rhs)?;
        let c = self.intercept;
        if c > Rational::from_integer(0) {
            write!(f, " + {c}")?;
        } else if c < Rational::from_integer(0) {
            write!(f, " - {}", -c)?;
        }
        Ok(())
    }
}

/// Per-graph values of the configured invariants, `None` where undefined.
fn value_table(corpus: &[CorpusEntry], invariants: &[InvariantId]) -> Vec<Vec<Option<i64>>> {
    corpus
        .par_iter()
        .map(|entry| {
            invariants
                .iter()
                .map(|&id| invariant_value(&entry.graph, id).ok().map(|v| v as i64))
                .collect()
        })
        .collect()
}

fn predicate_table(corpus: &[CorpusEntry]) -> Vec<StructuralPredicates> {
    corpus
        .par_iter()
        .map(|entry| entry.graph.structural_predicates())
        .collect()
}

/// Propose true inequalities bounding `target` against every other catalog
/// invariant over the slope and intercept grid.
///
/// Conjectures are stated for the whole corpus: the hypothesis is the most
/// specific catalog entry satisfied by every corpus graph. Narrower
/// hypotheses are never proposed, because the corpus holds no evidence about
/// the rest of their class.
///
/// For each pair and slope, the smallest true intercept is the maximum of
/// `lhs - slope * rhs` over the support; the slope is kept only when that
/// maximum lands exactly on a grid intercept, so every emitted conjecture
/// touches at least one graph. Candidates are proportional (zero intercept)
/// or translational (unit slope); mixed forms overfit small corpora and are
/// pruned, as is any candidate whose slope and intercept are both at least
/// another's within the same pair. The result is ranked by touch descending,
/// then slope form and coefficient complexity, then display string, and
/// truncated to `config.max_output`.
pub fn generate(
    corpus: &[CorpusEntry],
    target: InvariantId,
    config: &EngineConfig,
) -> Result<Vec<Conjecture>, EngineError> {
    if corpus.is_empty() {
        return Err(EngineError::EmptyCorpus);
    }
    let target_index = config
        .invariants
        .iter()
        .position(|&id| id == target)
        .ok_or(EngineError::TargetNotInCatalog(target))?;
    if config.slopes.is_empty() {
        return Err(EngineError::EmptyGrid("slope"));
    }
    if config.intercepts.is_empty() {
        return Err(EngineError::EmptyGrid("intercept"));
    }
    if let Some(&bad) = config
        .slopes
        .iter()
        .find(|s| **s <= Rational::from_integer(0))
    {
        return Err(EngineError::NonPositiveSlope(bad));
    }

    let mut slopes = config.slopes.clone();
    slopes.sort();
    slopes.dedup();

    let values = value_table(corpus, &config.invariants);
    let predicates = predicate_table(corpus);
    let hypothesis = config
        .hypotheses
        .iter()
        .copied()
        .chain([Hypothesis::None])
        .filter(|h| predicates.iter().all(|p| h.matches_predicates(p)))
        .max_by_key(Hypothesis::strength)
        .expect("the trivial hypothesis covers every corpus");

    let mut candidates = Vec::new();
    for other_index in 0..config.invariants.len() {
        if other_index == target_index {
            continue;
        }
        for (lhs_index, rhs_index) in [(target_index, other_index), (other_index, target_index)] {
            let lhs = config.invariants[lhs_index];
            let rhs = config.invariants[rhs_index];
            let support: Vec<usize> = (0..corpus.len())
                .filter(|&gi| values[gi][lhs_index].is_some() && values[gi][rhs_index].is_some())
                .collect();
            if support.is_empty() {
                continue;
            }
            // Ascending slope order makes the retained entry per intercept the
            // pointwise strongest: lower slopes reach each intercept first,
            // and the unreached (slope, intercept) pairs are exactly the
            // dominated ones.
            let mut by_intercept: BTreeMap<i64, Conjecture> = BTreeMap::new();
            for &slope in &slopes {
                let deficit = |gi: usize| {
                    Rational::from_integer(values[gi][lhs_index].unwrap())
                        - slope * Rational::from_integer(values[gi][rhs_index].unwrap())
                };
                let c_min = support.iter().map(|&gi| deficit(gi)).max().unwrap();
                if !c_min.is_integer() {
                    continue;
                }
                let c = c_min.to_integer();
                if c != 0 && slope != Rational::from_integer(1) {
                    continue;
                }
                if !config.intercepts.contains(&c) {
                    continue;
                }
                by_intercept.entry(c).or_insert_with(|| {
                    let mut tight: Vec<String> = support
                        .iter()
                        .filter(|&&gi| deficit(gi) == c_min)
                        .map(|&gi| corpus[gi].graph6.clone())
                        .collect();
                    let touch = tight.len();
                    tight.sort();
                    tight.truncate(TIGHT_EXAMPLE_CAP);
                    Conjecture {
                        hypothesis,
                        target,
                        lhs,
                        slope,
                        rhs,
                        intercept: c_min,
                        touch,
                        support: support.len(),
                        tight_examples: tight,
                    }
                });
            }
            candidates.extend(by_intercept.into_values());
        }
    }

    candidates.sort_by(|x, y| {
        y.touch
            .cmp(&x.touch)
            .then_with(|| x.form_complexity().cmp(&y.form_complexity()))
            .then_with(|| x.to_string().cmp(&y.to_string()))
    });
    candidates.truncate(config.max_output);
    Ok(candidates)
}

/// Relax a conjecture to the weakest catalog hypothesis implied by its own
/// under which the inequality stays true on the corpus. The result keeps the
/// inequality and refreshes support, touch, and equality witnesses; support
/// ties between a hypothesis and a weaker one go to the weaker. A conjecture
/// false even under its own hypothesis is returned unchanged.
pub fn minimize_hypothesis(conjecture: &Conjecture, corpus: &[CorpusEntry]) -> Conjecture {
    let table = value_table(corpus, &[conjecture.lhs, conjecture.rhs]);
    let predicates = predicate_table(corpus);
    let mut best: Option<(usize, Conjecture)> = None;
    for hypothesis in conjecture.hypothesis.weaker_chain() {
        let support: Vec<usize> = (0..corpus.len())
            .filter(|&gi| {
                hypothesis.matches_predicates(&predicates[gi])
                    && table[gi][0].is_some()
                    && table[gi][1].is_some()
            })
            .collect();
        if support.is_empty()
            || !support
                .iter()
                .all(|&gi| conjecture.holds_at(table[gi][0].unwrap(), table[gi][1].unwrap()))
        {
            continue;
        }
        if best
            .as_ref()
            .is_some_and(|(count, _)| *count >= support.len())
        {
            continue;
        }
        let mut tight: Vec<String> = support
            .iter()
            .filter(|&&gi| conjecture.is_tight_at(table[gi][0].unwrap(), table[gi][1].unwrap()))
            .map(|&gi| corpus[gi].graph6.clone())
            .collect();
        let touch = tight.len();
        tight.sort();
        tight.truncate(TIGHT_EXAMPLE_CAP);
        best = Some((
            support.len(),
            Conjecture {
                hypothesis,
                touch,
                support: support.len(),
                tight_examples: tight,
                ..conjecture.clone()
            },
        ));
    }
    match best {
        Some((_, minimized)) => minimized,
        None => conjecture.clone(),
    }
}

/// Keep, in order, the conjectures that strictly improve the bound on their
/// target for at least one corpus graph compared with everything kept before
/// them. An upper bound (target on the left) must beat the smallest prior
/// upper bound on some graph; a lower bound (target on the right) must beat
/// the largest prior lower bound. Graphs where a prior conjecture does not
/// apply leave its bound vacuous there.
pub fn significance_filter(conjectures: &[Conjecture], corpus: &[CorpusEntry]) -> Vec<Conjecture> {
    let ids: Vec<InvariantId> = {
        let mut ids: Vec<InvariantId> = conjectures.iter().flat_map(|c| [c.lhs, c.rhs]).collect();
        ids.sort();
        ids.dedup();
        ids
    };
    let table = value_table(corpus, &ids);
    let value = |gi: usize, id: InvariantId| {
        let idx = ids.binary_search(&id).expect("id collected above");
        table[gi][idx]
    };
    let predicates = predicate_table(corpus);

    let mut best_upper: BTreeMap<(InvariantId, usize), Rational> = BTreeMap::new();
    let mut best_lower: BTreeMap<(InvariantId, usize), Rational> = BTreeMap::new();
    let mut kept = Vec::new();
    for conjecture in conjectures {
        debug_assert!(
            conjecture.target == conjecture.lhs || conjecture.target == conjecture.rhs,
            "conjecture does not mention its own target"
        );
        let upper = conjecture.target == conjecture.lhs;
        let mut bounds = Vec::new();
        for (gi, preds) in predicates.iter().enumerate() {
            if !conjecture.hypothesis.matches_predicates(preds) {
                continue;
            }
            let (Some(l), Some(r)) = (value(gi, conjecture.lhs), value(gi, conjecture.rhs)) else {
                continue;
            };
            let bound = if upper {
                conjecture.slope * Rational::from_integer(r) + conjecture.intercept
            } else {
                (Rational::from_integer(l) - conjecture.intercept) / conjecture.slope
            };
            bounds.push((gi, bound));
        }
        let improves = bounds.iter().any(|&(gi, bound)| {
            let key = (conjecture.target, gi);
            if upper {
                best_upper.get(&key).is_none_or(|b| bound < *b)
            } else {
                best_lower.get(&key).is_none_or(|b| bound > *b)
            }
        });
        if !improves {
            continue;
        }
        for (gi, bound) in bounds {
            let key = (conjecture.target, gi);
            if upper {
                let entry = best_upper.entry(key).or_insert(bound);
                *entry = (*entry).min(bound);
            } else {
                let entry = best_lower.entry(key).or_insert(bound);
                *entry = (*entry).max(bound);
            }
        }
        kept.push(conjecture.clone());
    }
    kept
}
