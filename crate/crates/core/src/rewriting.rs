//! Column rewriting systems.
//!
//! Both systems rewrite an adjacent pair of columns `c₁ c₂` into `(c₁ ← c₂)`
//! whenever the pair is not standard (`c₂ ⋠ c₁`). In [`Variant::ACol`] the
//! empty column `ε` is a generator and every rule keeps two columns, with the
//! rule `c ε ⇒ ε c` among them. In [`Variant::AColBullet`] there is no `ε`
//! and a rule may produce zero, one or two columns.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::highest_weight;
use crate::insertion::{insert_pair, is_standard_pair};
use crate::text::{format_column, format_decorated};
use crate::words::{admissible_columns, Column, DecoratedWord, Rank};
use crate::{Error, Result};

/// Environment variable overriding the default step limit.
pub const STEP_LIMIT_ENV: &str = "PLACTICC_STEP_LIMIT";

/// Largest rank accepted by [`enumerate_branchings`] unless a larger cap is
/// passed explicitly.
pub const DEFAULT_RANK_CAP: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// Admissible columns with `ε`.
    ACol,
    /// Nonempty admissible columns only.
    AColBullet,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::ACol => "acol",
            Variant::AColBullet => "acol-bullet",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s {
            "acol" => Ok(Variant::ACol),
            "acol-bullet" => Ok(Variant::AColBullet),
            _ => Err(Error::InvalidInput(format!(
                "unknown variant {s:?}, expected acol or acol-bullet"
            ))),
        }
    }
}

/// Which redex a strategy reduces first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrategyKind {
    Leftmost,
    Rightmost,
}

/// A single rewriting step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    /// Index of the left column of the rewritten pair.
    pub position: usize,
    pub before: (Column, Column),
    /// Two columns in `ACol`; zero to two in `ACol•`.
    pub after: Vec<Column>,
}

impl RewriteStep {
    /// Whether the step is `c ε ⇒ ε c`.
    pub fn is_epsilon_step(&self) -> bool {
        !self.before.0.is_epsilon() && self.before.1.is_epsilon()
    }
}

/// A full reduction sequence to normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strategy {
    pub kind: StrategyKind,
    pub variant: Variant,
    /// The source followed by the word after each step.
    pub words: Vec<DecoratedWord>,
    pub steps: Vec<RewriteStep>,
}

impl Strategy {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn source(&self) -> &DecoratedWord {
        &self.words[0]
    }

    pub fn target(&self) -> &DecoratedWord {
        self.words.last().unwrap()
    }

    pub fn positions(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.position).collect()
    }

    /// `#_ε(s)`: number of steps `c ε ⇒ ε c`.
    pub fn epsilon_count(&self) -> usize {
        self.steps.iter().filter(|s| s.is_epsilon_step()).count()
    }

    /// Length of the projected sequence, where `ε`-steps become identities.
    pub fn projected_len(&self) -> usize {
        self.len() - self.epsilon_count()
    }

    /// `#_ε(s) ≤ t²(3t+1)/4` with `t` the number of columns of the source.
    pub fn check_epsilon_bound(&self) -> bool {
        4 * self.epsilon_count() <= epsilon_bound_times_four(self.source().len())
    }
}

/// `t²(3t+1)`, four times the bound on `ε`-steps.
pub fn epsilon_bound_times_four(t: usize) -> usize {
    t * t * (3 * t + 1)
}

/// Default step limit for a source with `t` columns: `t²(3t+3)`.
pub fn default_step_limit(t: usize) -> usize {
    (t * t * (3 * t + 3)).max(16)
}

fn step_limit(t: usize) -> usize {
    std::env::var(STEP_LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or_else(|| default_step_limit(t))
}

/// Drops every `ε`.
pub fn project(w: &DecoratedWord) -> DecoratedWord {
    w.project()
}

fn check_word(w: &DecoratedWord, variant: Variant, rank: Rank) -> Result<()> {
    for c in w.columns() {
        if !c.is_admissible(rank) {
            return Err(Error::InvalidInput(format!(
                "column {} is not admissible at rank {rank}",
                format_column(c)
            )));
        }
        if variant == Variant::AColBullet && c.is_epsilon() {
            return Err(Error::InvalidInput("ε is not a generator of acol-bullet".into()));
        }
    }
    Ok(())
}

/// Positions `i` such that columns `i, i+1` form a redex.
pub fn redexes(w: &DecoratedWord, rank: Rank) -> Vec<usize> {
    let cols = w.columns();
    (0..cols.len().saturating_sub(1))
        .filter(|&i| !is_standard_pair(&cols[i], &cols[i + 1], rank))
        .collect()
}

pub fn is_normal(w: &DecoratedWord, rank: Rank) -> bool {
    let cols = w.columns();
    (1..cols.len()).all(|i| is_standard_pair(&cols[i - 1], &cols[i], rank))
}

/// Rewrites the pair at `position`; `None` if it is standard.
pub fn rewrite_at(
    w: &DecoratedWord,
    position: usize,
    variant: Variant,
    rank: Rank,
) -> Result<Option<(DecoratedWord, RewriteStep)>> {
    let cols = w.columns();
    if position + 1 >= cols.len() {
        return Err(Error::InvalidInput(format!(
            "no pair at position {position} in a word of {} columns",
            cols.len()
        )));
    }
    let (c1, c2) = (&cols[position], &cols[position + 1]);
    if is_standard_pair(c1, c2, rank) {
        return Ok(None);
    }
    let (d1, d2) = insert_pair(c1, c2, rank)?;
    let after: Vec<Column> = match variant {
        Variant::ACol => vec![d1, d2],
        Variant::AColBullet => [d1, d2].into_iter().filter(|c| !c.is_epsilon()).collect(),
    };
    let mut next = cols[..position].to_vec();
    next.extend(after.iter().cloned());
    next.extend_from_slice(&cols[position + 2..]);
    let step = RewriteStep {
        position,
        before: (c1.clone(), c2.clone()),
        after,
    };
    Ok(Some((DecoratedWord::from_columns(next), step)))
}

/// Reduces `w` to normal form, always rewriting the leftmost (or rightmost)
/// redex.
///
/// On a three-column word the pair just rewritten is always standard, so the
/// positions alternate between the two pairs until the word is normal.
pub fn run_strategy(w: &DecoratedWord, kind: StrategyKind, variant: Variant, rank: Rank) -> Result<Strategy> {
    check_word(w, variant, rank)?;
    let limit = step_limit(w.len());
    let mut words = vec![w.clone()];
    let mut steps = Vec::new();
    loop {
        let cur = words.last().unwrap();
        let red = redexes(cur, rank);
        let pos = match kind {
            StrategyKind::Leftmost => red.first(),
            StrategyKind::Rightmost => red.last(),
        };
        let Some(&pos) = pos else { break };
        if steps.len() >= limit {
            return Err(Error::StepLimit {
                limit,
                word: format_decorated(w),
            });
        }
        let (next, step) = rewrite_at(cur, pos, variant, rank)?
            .ok_or_else(|| Error::Internal("redex turned out to be standard".into()))?;
        words.push(next);
        steps.push(step);
    }
    Ok(Strategy {
        kind,
        variant,
        words,
        steps,
    })
}

/// Lengths of the leftmost and rightmost reductions of a branching source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConfShape {
    pub a_len: usize,
    pub b_len: usize,
}

impl ConfShape {
    /// Componentwise `≤ (4, 3)`.
    pub fn within_bound(self) -> bool {
        self.a_len <= 4 && self.b_len <= 3
    }
}

impl fmt::Display for ConfShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a_len, self.b_len)
    }
}

/// Whether `w = t u v` with both `t u` and `u v` redexes.
pub fn is_branching_source(w: &DecoratedWord, rank: Rank) -> bool {
    let c = w.columns();
    c.len() == 3 && !is_standard_pair(&c[0], &c[1], rank) && !is_standard_pair(&c[1], &c[2], rank)
}

fn check_branching(w: &DecoratedWord, rank: Rank) -> Result<()> {
    if !is_branching_source(w, rank) {
        return Err(Error::InvalidInput(format!(
            "{} is not a critical branching source",
            format_decorated(w)
        )));
    }
    Ok(())
}

/// Both reductions of a branching source.
pub fn confluence_pair(w: &DecoratedWord, variant: Variant, rank: Rank) -> Result<(Strategy, Strategy)> {
    check_word(w, variant, rank)?;
    check_branching(w, rank)?;
    Ok((
        run_strategy(w, StrategyKind::Leftmost, variant, rank)?,
        run_strategy(w, StrategyKind::Rightmost, variant, rank)?,
    ))
}

/// `conf(w) = (|a(w)|, |b(w)|)`.
pub fn conf(w: &DecoratedWord, variant: Variant, rank: Rank) -> Result<ConfShape> {
    let (a, b) = confluence_pair(w, variant, rank)?;
    Ok(ConfShape {
        a_len: a.len(),
        b_len: b.len(),
    })
}

/// Generators of the variant at `rank`, sorted by serialized form.
pub fn generators(rank: Rank, variant: Variant) -> Vec<Column> {
    let mut gens = admissible_columns(rank, variant == Variant::ACol);
    gens.sort_by_key(format_column);
    gens
}

fn check_cap(rank: Rank, cap: usize) -> Result<()> {
    if rank.get() > cap {
        return Err(Error::CapExceeded { n: rank.get(), cap });
    }
    Ok(())
}

/// Every critical branching source `t u v`, sorted by serialized form.
pub fn enumerate_branchings(rank: Rank, variant: Variant, cap: usize) -> Result<Vec<DecoratedWord>> {
    check_cap(rank, cap)?;
    let gens = generators(rank, variant);
    let mut out: Vec<(String, DecoratedWord)> = gens
        .par_iter()
        .flat_map_iter(|u| {
            let lefts: Vec<&Column> = gens.iter().filter(|t| !is_standard_pair(t, u, rank)).collect();
            let rights: Vec<&Column> = gens.iter().filter(|v| !is_standard_pair(u, v, rank)).collect();
            let mut local = Vec::with_capacity(lefts.len() * rights.len());
            for t in &lefts {
                for v in &rights {
                    let w = DecoratedWord::from_columns(vec![(*t).clone(), u.clone(), (*v).clone()]);
                    local.push((format_decorated(&w), w));
                }
            }
            local
        })
        .collect();
    out.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, w)| w).collect())
}

/// Outcome of checking one branching source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingCheck {
    pub source: DecoratedWord,
    pub shape: ConfShape,
    pub leftmost_target: DecoratedWord,
    pub rightmost_target: DecoratedWord,
    pub highest_weight_shape: ConfShape,
}

impl BranchingCheck {
    pub fn confluent(&self) -> bool {
        self.leftmost_target == self.rightmost_target
    }

    /// Human-readable descriptions of every failed property.
    pub fn violations(&self) -> Vec<String> {
        let w = format_decorated(&self.source);
        let mut out = Vec::new();
        if !self.confluent() {
            out.push(format!(
                "{w}: leftmost reaches {} but rightmost reaches {}",
                format_decorated(&self.leftmost_target),
                format_decorated(&self.rightmost_target)
            ));
        }
        if !self.shape.within_bound() {
            out.push(format!("{w}: shape {} exceeds (4,3)", self.shape));
        }
        if self.shape != self.highest_weight_shape {
            out.push(format!(
                "{w}: shape {} differs from {} at the highest weight word",
                self.shape, self.highest_weight_shape
            ));
        }
        out
    }
}

pub fn check_branching_source(w: &DecoratedWord, variant: Variant, rank: Rank) -> Result<BranchingCheck> {
    let (a, b) = confluence_pair(w, variant, rank)?;
    let hw = highest_weight(w, rank);
    let hw_shape = conf(&hw, variant, rank)?;
    Ok(BranchingCheck {
        source: w.clone(),
        shape: ConfShape {
            a_len: a.len(),
            b_len: b.len(),
        },
        leftmost_target: a.target().clone(),
        rightmost_target: b.target().clone(),
        highest_weight_shape: hw_shape,
    })
}

/// Aggregate result of checking every branching source at one rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoherenceReport {
    pub max_shape: [usize; 2],
    pub n: usize,
    pub shape_histogram: BTreeMap<String, usize>,
    pub total: usize,
    pub variant: String,
    pub violations: Vec<String>,
}

impl CoherenceReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Checks confluence, the `(4,3)` shape bound and invariance of the shape
/// under raising operators for every branching source. `jobs = 0` uses the
/// default thread pool; the report does not depend on `jobs`.
pub fn verify_coherence(rank: Rank, variant: Variant, jobs: usize, cap: usize) -> Result<CoherenceReport> {
    let run = || -> Result<CoherenceReport> {
        let sources = enumerate_branchings(rank, variant, cap)?;
        let checks: Vec<BranchingCheck> = sources
            .par_iter()
            .map(|w| check_branching_source(w, variant, rank))
            .collect::<Result<_>>()?;
        Ok(summarize(rank, variant, &checks))
    };
    if jobs == 0 {
        return run();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
        .install(run)
}

/// Folds per-source checks into a report; `checks` must be in enumeration
/// order.
pub fn summarize(rank: Rank, variant: Variant, checks: &[BranchingCheck]) -> CoherenceReport {
    let mut histogram = BTreeMap::new();
    let mut max_shape = [0, 0];
    let mut violations = Vec::new();
    for c in checks {
        *histogram.entry(c.shape.to_string()).or_insert(0) += 1;
        max_shape[0] = max_shape[0].max(c.shape.a_len);
        max_shape[1] = max_shape[1].max(c.shape.b_len);
        violations.extend(c.violations());
    }
    CoherenceReport {
        max_shape,
        n: rank.get(),
        shape_histogram: histogram,
        total: checks.len(),
        variant: variant.name().to_string(),
        violations,
    }
}
