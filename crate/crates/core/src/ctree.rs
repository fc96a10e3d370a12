//! Labelled C-trees.
//!
//! The truncated tree of rank `k` has strands `1..=k`. Strand `i` starts at
//! its root `i` (depth 0) and then alternates outer vertices `i·m` (depth
//! `2m-1`) and inner vertices `i·m⁻` (depth `2m`). The level of a vertex is
//! `i + m` (`i` for the root), and strand `i` stops at level `k`.
//!
//! A labelling `s` assigns a nonnegative integer to every vertex. The
//! valuation `q(v)` is the signed sum of labels along the strand up to `v`,
//! inner labels counting negatively. Every vertex contributes a block column
//! to the reading of its level.

use std::fmt;

use serde_json::{Map, Value};

use crate::crystal::is_highest_weight;
use crate::words::{block, BlockSpec, Column, DecoratedWord, Letter, Rank};
use crate::{Error, Result};

/// A vertex of the C-tree, addressed by strand and depth along the strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub strand: usize,
    pub depth: usize,
}

/// Position of a vertex on its strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Root,
    /// Outer vertex `i·m`.
    Outer(usize),
    /// Inner vertex `i·m⁻`.
    Inner(usize),
}

impl Vertex {
    pub fn root(strand: usize) -> Vertex {
        Vertex { strand, depth: 0 }
    }

    /// `i·m`, `m ≥ 1`.
    pub fn outer(strand: usize, m: usize) -> Vertex {
        assert!(m >= 1);
        Vertex {
            strand,
            depth: 2 * m - 1,
        }
    }

    /// `i·m⁻`, `m ≥ 1`.
    pub fn inner(strand: usize, m: usize) -> Vertex {
        assert!(m >= 1);
        Vertex { strand, depth: 2 * m }
    }

    /// `i·m` with `m = 0` meaning the root.
    pub(crate) fn outer_or_root(strand: usize, m: usize) -> Vertex {
        if m == 0 {
            Vertex::root(strand)
        } else {
            Vertex::outer(strand, m)
        }
    }

    /// `i·m⁻` with `m = 0` meaning the root.
    pub(crate) fn inner_or_root(strand: usize, m: usize) -> Vertex {
        if m == 0 {
            Vertex::root(strand)
        } else {
            Vertex::inner(strand, m)
        }
    }

    pub fn kind(self) -> VertexKind {
        match self.depth {
            0 => VertexKind::Root,
            d if d % 2 == 1 => VertexKind::Outer(d.div_ceil(2)),
            d => VertexKind::Inner(d / 2),
        }
    }

    pub fn level(self) -> usize {
        self.strand + self.depth.div_ceil(2)
    }

    /// Serialized key: `i.0`, `i.m+` or `i.m-`.
    pub fn key(self) -> String {
        match self.kind() {
            VertexKind::Root => format!("{}.0", self.strand),
            VertexKind::Outer(m) => format!("{}.{m}+", self.strand),
            VertexKind::Inner(m) => format!("{}.{m}-", self.strand),
        }
    }

    pub fn from_key(key: &str) -> Option<Vertex> {
        let (strand, rest) = key.split_once('.')?;
        if !strand.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let strand: usize = strand.parse().ok()?;
        if strand == 0 {
            return None;
        }
        if rest == "0" {
            return Some(Vertex::root(strand));
        }
        let (m, sign) = rest.split_at(rest.len().checked_sub(1)?);
        if !m.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let m: usize = m.parse().ok()?;
        if m == 0 {
            return None;
        }
        match sign {
            "+" => Some(Vertex::outer(strand, m)),
            "-" => Some(Vertex::inner(strand, m)),
            _ => None,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// A failed validity condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeViolation {
    /// `q(v)` outside `0..=n`.
    Labeling { vertex: Vertex, valuation: i64 },
    /// The reading of a level is not a column.
    Column {
        level: usize,
        vertex: Vertex,
        valuation: i64,
        bound_vertex: Vertex,
        bound: i64,
    },
    /// The reading of a level is a column but not admissible.
    Admissibility {
        level: usize,
        vertex: Vertex,
        sum: i64,
        bound: i64,
    },
}

impl fmt::Display for TreeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeViolation::Labeling { vertex, valuation } => {
                write!(f, "valuation {valuation} at {vertex} is outside 0..=n")
            }
            TreeViolation::Column {
                level,
                vertex,
                valuation,
                bound_vertex,
                bound,
            } => write!(
                f,
                "level {level} is not a column: q({vertex}) = {valuation} > q({bound_vertex}) = {bound}"
            ),
            TreeViolation::Admissibility {
                level,
                vertex,
                sum,
                bound,
            } => write!(
                f,
                "level {level} is not admissible: labels up to {vertex} sum to {sum} > {bound}"
            ),
        }
    }
}

/// A labelled truncated C-tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CTree {
    n: Rank,
    rank: usize,
    /// `labels[i-1][d]` is the label of strand `i` at depth `d`.
    labels: Vec<Vec<usize>>,
}

impl CTree {
    /// The all-zero tree of the given rank.
    pub fn zero(rank: usize, n: Rank) -> CTree {
        let labels = (1..=rank).map(|i| vec![0; 2 * (rank - i) + 1]).collect();
        CTree { n, rank, labels }
    }

    /// The standard tree `T(a₁, …, a_k)` for `a₁ ≥ … ≥ a_k`; its level `l`
    /// reads `𝔠(a_{k-l+1})`.
    pub fn standard(a: &[usize], n: Rank) -> Result<CTree> {
        if a.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(
                "standard tree needs a nonincreasing sequence".into(),
            ));
        }
        if a.first().is_some_and(|&a1| a1 > n.get()) {
            return Err(Error::Domain(format!("standard tree entries must be at most {n}")));
        }
        let k = a.len();
        let mut t = CTree::zero(k, n);
        for i in 1..=k {
            for j in 0..=k - i {
                let next = if j == 0 { 0 } else { a[k - j] };
                t.labels[i - 1][if j == 0 { 0 } else { 2 * j - 1 }] = a[k - j - 1] - next;
            }
        }
        Ok(t)
    }

    pub fn n(&self) -> Rank {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.strand >= 1 && v.strand <= self.rank && v.level() <= self.rank
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if !self.contains(v) {
            return Err(Error::Domain(format!(
                "vertex {v} is not in the tree of rank {}",
                self.rank
            )));
        }
        Ok(())
    }

    pub fn label(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.labels[v.strand - 1][v.depth])
    }

    pub fn set_label(&mut self, v: Vertex, s: usize) -> Result<()> {
        self.check_vertex(v)?;
        self.labels[v.strand - 1][v.depth] = s;
        Ok(())
    }

    fn s(&self, v: Vertex) -> usize {
        self.labels[v.strand - 1][v.depth]
    }

    /// All vertices, strand by strand.
    pub fn vertices(&self) -> Vec<Vertex> {
        (1..=self.rank)
            .flat_map(|i| (0..=2 * (self.rank - i)).map(move |depth| Vertex { strand: i, depth }))
            .collect()
    }

    /// `q(v)`.
    pub fn valuation(&self, v: Vertex) -> Result<i64> {
        self.check_vertex(v)?;
        Ok(self.q(v))
    }

    fn q(&self, v: Vertex) -> i64 {
        self.labels[v.strand - 1][..=v.depth]
            .iter()
            .enumerate()
            .map(|(d, &s)| if d > 0 && d % 2 == 0 { -(s as i64) } else { s as i64 })
            .sum()
    }

    /// `q_i = q(i·(k-i)⁻)` for `i = 1..=k`.
    pub fn strand_valuations(&self) -> Vec<i64> {
        (1..=self.rank)
            .map(|i| self.q(Vertex::inner_or_root(i, self.rank - i)))
            .collect()
    }

    /// Vertices of level `t` in reading order: outer vertices from strand `t`
    /// down to strand 1, then inner vertices from strand 1 up.
    pub fn level_vertices(t: usize) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = (0..t).map(|l| Vertex::outer_or_root(t - l, l)).collect();
        out.extend((1..t).map(|l| Vertex::inner(l, t - l)));
        out
    }

    fn check_labeling(&self) -> Vec<TreeViolation> {
        let n = self.n.get() as i64;
        self.vertices()
            .into_iter()
            .filter_map(|v| {
                let q = self.q(v);
                (!(0..=n).contains(&q)).then_some(TreeViolation::Labeling {
                    vertex: v,
                    valuation: q,
                })
            })
            .collect()
    }

    /// Block column contributed by `v`; the labelling must be an `n`-labelling.
    fn rho(&self, v: Vertex) -> Column {
        let s = self.s(v);
        let spec = match v.kind() {
            VertexKind::Root => BlockSpec::unbarred_prefix(s),
            VertexKind::Outer(_) => {
                let prev = Vertex {
                    depth: v.depth - 1,
                    ..v
                };
                BlockSpec::unbarred(self.q(prev) as usize, s)
            }
            VertexKind::Inner(_) => {
                let prev = Vertex {
                    depth: v.depth - 1,
                    ..v
                };
                BlockSpec::barred(self.q(prev) as usize, s)
            }
        };
        block(spec, self.n).expect("n-labelling keeps blocks in range")
    }

    fn require_labeling(&self) -> Result<()> {
        if let Some(v) = self.check_labeling().first() {
            return Err(Error::InvalidInput(format!("not an n-labelling: {v}")));
        }
        Ok(())
    }

    /// Letters of the level-`t` reading, which need not form a column on an
    /// invalid tree.
    pub fn level_letters(&self, t: usize) -> Result<Vec<Letter>> {
        if t == 0 || t > self.rank {
            return Err(Error::Domain(format!("level {t} outside 1..={}", self.rank)));
        }
        self.require_labeling()?;
        Ok(self.level_letters_unchecked(t))
    }

    fn level_letters_unchecked(&self, t: usize) -> Vec<Letter> {
        CTree::level_vertices(t)
            .into_iter()
            .flat_map(|v| self.rho(v).into_letters())
            .collect()
    }

    /// The reading `ω(T) = ω₁ ω₂ … ω_k`, one column per level, `ε` for an
    /// empty level. Fails unless every level reads an admissible column.
    pub fn reading(&self) -> Result<DecoratedWord> {
        self.require_labeling()?;
        let mut columns = Vec::with_capacity(self.rank);
        for t in 1..=self.rank {
            let col = Column::new(self.level_letters_unchecked(t))
                .map_err(|_| Error::InvalidInput(format!("level {t} does not read a column")))?;
            columns.push(col);
        }
        DecoratedWord::new(columns, self.n)
    }

    /// Every failed validity condition; empty iff the tree is valid.
    pub fn validate(&self) -> Vec<TreeViolation> {
        let labeling = self.check_labeling();
        if !labeling.is_empty() {
            return labeling;
        }
        let mut out = Vec::new();
        for t in 1..=self.rank {
            self.column_conditions(t, &mut out);
            self.admissibility_conditions(t, &mut out);
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `q(i·j) ≤ q((i-1)·j⁻)` and `q(i·j) ≤ q((i-1)·(j+1)⁻)` for the outer
    /// vertices `i·j` of level `t` with `i ≥ 2`.
    fn column_conditions(&self, t: usize, out: &mut Vec<TreeViolation>) {
        for i in 2..=t {
            let j = t - i;
            let v = Vertex::outer_or_root(i, j);
            let qv = self.q(v);
            for bound_vertex in [Vertex::inner_or_root(i - 1, j), Vertex::inner(i - 1, j + 1)] {
                let bound = self.q(bound_vertex);
                if qv > bound {
                    out.push(TreeViolation::Column {
                        level: t,
                        vertex: v,
                        valuation: qv,
                        bound_vertex,
                        bound,
                    });
                }
            }
        }
    }

    /// `Σ_{i=0}^{l} (s((t-i)·i) + s((t-i)·i⁻)) ≤ q((t-l)·l)` for `l < t`.
    fn admissibility_conditions(&self, t: usize, out: &mut Vec<TreeViolation>) {
        let mut sum = 0i64;
        for l in 0..t {
            let outer = Vertex::outer_or_root(t - l, l);
            sum += self.s(outer) as i64;
            if l > 0 {
                sum += self.s(Vertex::inner(t - l, l)) as i64;
            }
            let bound = self.q(outer);
            if sum > bound {
                out.push(TreeViolation::Admissibility {
                    level: t,
                    vertex: outer,
                    sum,
                    bound,
                });
            }
        }
    }

    fn require_valid(&self) -> Result<()> {
        if let Some(v) = self.validate().first() {
            return Err(Error::InvalidInput(format!("invalid tree: {v}")));
        }
        Ok(())
    }

    /// `𝔠(q_k) 𝔠(q_{k-1}) … 𝔠(q₁)`, computed from strand valuations alone.
    pub fn tree_normal_form(&self) -> Result<DecoratedWord> {
        self.require_valid()?;
        let columns = self
            .strand_valuations()
            .into_iter()
            .rev()
            .map(|q| block(BlockSpec::unbarred_prefix(q as usize), self.n))
            .collect::<Result<Vec<_>>>()?;
        Ok(DecoratedWord::from_columns(columns))
    }

    /// The tree restricted to levels `≤ k`.
    pub fn truncate(&self, k: usize) -> Result<CTree> {
        if k > self.rank {
            return Err(Error::Domain(format!("cannot truncate rank {} to {k}", self.rank)));
        }
        let mut t = CTree::zero(k, self.n);
        for v in t.vertices() {
            t.labels[v.strand - 1][v.depth] = self.s(v);
        }
        Ok(t)
    }

    /// Copy of `self` at rank `k ≥ self.rank`, new levels labelled 0.
    pub fn extend(&self, k: usize) -> Result<CTree> {
        if k < self.rank {
            return Err(Error::Domain(format!("cannot extend rank {} to {k}", self.rank)));
        }
        let mut t = CTree::zero(k, self.n);
        for v in self.vertices() {
            t.labels[v.strand - 1][v.depth] = self.s(v);
        }
        Ok(t)
    }

    /// Whether levels `≤ k` form the standard tree of their strand valuations.
    pub fn has_standard_truncation(&self, k: usize) -> bool {
        let Ok(trunc) = self.truncate(k) else {
            return false;
        };
        let q: Vec<usize> = trunc
            .strand_valuations()
            .into_iter()
            .map(|q| q.max(0) as usize)
            .collect();
        CTree::standard(&q, self.n).is_ok_and(|s| s == trunc)
    }

    /// Replaces levels `≤ k` of a valid tree of rank `k + 1` by the standard
    /// tree with the same strand valuations. The top level reads the same
    /// and all strand valuations are preserved.
    pub fn standardize_truncation(&self) -> Result<CTree> {
        self.require_valid()?;
        if self.rank < 2 {
            return Err(Error::InvalidInput("standardizing needs rank at least 2".into()));
        }
        let k = self.rank - 1;
        let q: Vec<usize> = self
            .truncate(k)?
            .strand_valuations()
            .into_iter()
            .map(|q| q as usize)
            .collect();
        let std = CTree::standard(&q, self.n)?;
        let mut out = self.clone();
        for v in std.vertices() {
            out.labels[v.strand - 1][v.depth] = std.s(v);
        }
        Ok(out)
    }

    /// For a valid tree of rank `k + 1` whose levels `≤ k` are standard,
    /// moves the top two levels to the tree reading `[ω_k ω_{k+1}]`, keeping
    /// levels below `k` and all strand valuations.
    pub fn fold_last_levels(&self) -> Result<CTree> {
        self.require_valid()?;
        if self.rank < 2 {
            return Err(Error::InvalidInput("folding needs rank at least 2".into()));
        }
        let k = self.rank - 1;
        if !self.has_standard_truncation(k) {
            return Err(Error::InvalidInput(format!("levels up to {k} are not standard")));
        }
        let q = self.strand_valuations();
        let mut out = self.clone();
        for i in 1..=k {
            let upper = Vertex::outer_or_root(i + 1, k - i);
            out.labels[i - 1][Vertex::outer_or_root(i, k - i).depth] = self.s(upper);
            let top = Vertex::outer(i, k + 1 - i);
            out.labels[i - 1][top.depth] = usize::try_from(q[i - 1] - self.q(upper))
                .map_err(|_| Error::Internal("negative label while folding".into()))?;
            out.labels[i - 1][Vertex::inner(i, k + 1 - i).depth] = 0;
        }
        Ok(out)
    }

    /// Labels as a flat JSON object with `n` and `rank` entries; zero labels
    /// are omitted.
    pub fn to_json(&self) -> String {
        let mut map = Map::new();
        map.insert("n".into(), Value::from(self.n.get()));
        map.insert("rank".into(), Value::from(self.rank));
        for v in self.vertices() {
            let s = self.s(v);
            if s > 0 {
                map.insert(v.key(), Value::from(s));
            }
        }
        serde_json::to_string(&Value::Object(map)).expect("tree serializes")
    }

    pub fn from_json(src: &str) -> Result<CTree> {
        let value: Value = serde_json::from_str(src).map_err(|e| Error::Parse {
            position: byte_offset(src, e.line(), e.column()),
            message: e.to_string(),
        })?;
        let Value::Object(map) = value else {
            return Err(Error::InvalidInput("tree must be a JSON object".into()));
        };
        let get_usize = |key: &str| -> Result<usize> {
            map.get(key)
                .and_then(Value::as_u64)
                .map(|v| v as usize)
                .ok_or_else(|| Error::InvalidInput(format!("missing or invalid {key:?}")))
        };
        let n = Rank::new(get_usize("n")?)?;
        let rank = get_usize("rank")?;
        if rank == 0 {
            return Err(Error::Domain("tree rank must be at least 1".into()));
        }
        let mut t = CTree::zero(rank, n);
        for (key, value) in &map {
            if key == "n" || key == "rank" {
                continue;
            }
            let v = Vertex::from_key(key).ok_or_else(|| Error::InvalidInput(format!("bad vertex key {key:?}")))?;
            let s = value
                .as_u64()
                .ok_or_else(|| Error::InvalidInput(format!("label of {key} must be a nonnegative integer")))?;
            t.set_label(v, s as usize)?;
        }
        Ok(t)
    }
}

fn byte_offset(src: &str, line: usize, column: usize) -> usize {
    let start: usize = src
        .split_inclusive('\n')
        .take(line.saturating_sub(1))
        .map(str::len)
        .sum();
    (start + column.saturating_sub(1)).min(src.len())
}

/// The tree whose reading is the highest-weight word `u`.
///
/// Columns are consumed left to right and letters top to bottom; each
/// letter increments the label of the unique level vertex that extends the
/// reading consistently and keeps the tree valid.
pub fn encode(u: &DecoratedWord, n: Rank) -> Result<CTree> {
    let u = DecoratedWord::new(u.columns().to_vec(), n)?;
    if !is_highest_weight(&u, n) {
        return Err(Error::InvalidInput(format!(
            "{} is not of highest weight",
            crate::text::format_decorated(&u)
        )));
    }
    let mut tree = CTree::zero(0, n);
    for (idx, col) in u.columns().iter().enumerate() {
        let t = idx + 1;
        tree = tree.extend(t)?;
        let candidates = CTree::level_vertices(t);
        for len in 1..=col.len() {
            let prefix = &col.letters()[..len];
            let mut found = None;
            for &v in &candidates {
                let mut next = tree.clone();
                next.labels[v.strand - 1][v.depth] += 1;
                if next.check_labeling().is_empty() && next.level_letters_unchecked(t) == prefix && next.is_valid() {
                    if found.is_some() {
                        return Err(Error::Internal(format!(
                            "two vertices extend level {t} by {}",
                            prefix[len - 1]
                        )));
                    }
                    found = Some(next);
                }
            }
            tree =
                found.ok_or_else(|| Error::Internal(format!("no vertex extends level {t} by {}", prefix[len - 1])))?;
        }
    }
    if tree.reading()? != u {
        return Err(Error::Internal("encoded tree does not read back the word".into()));
    }
    Ok(tree)
}

/// Every valid tree of the given rank, in increasing label order.
pub fn enumerate_trees(rank: usize, n: Rank) -> Vec<CTree> {
    let mut trees = vec![CTree::zero(0, n)];
    for t in 1..=rank {
        let mut next = Vec::new();
        for base in &trees {
            let base = base.extend(t).expect("extending rank");
            extend_level(&base, t, &CTree::level_vertices(t), 0, &mut next);
        }
        trees = next;
    }
    trees.sort();
    trees
}

fn extend_level(tree: &CTree, t: usize, vertices: &[Vertex], idx: usize, out: &mut Vec<CTree>) {
    if idx == vertices.len() {
        let mut found = Vec::new();
        tree.column_conditions(t, &mut found);
        tree.admissibility_conditions(t, &mut found);
        if found.is_empty() {
            out.push(tree.clone());
        }
        return;
    }
    let v = vertices[idx];
    let prev = (v.depth > 0).then(|| {
        tree.q(Vertex {
            depth: v.depth - 1,
            ..v
        })
    });
    let max = match (v.kind(), prev) {
        (VertexKind::Inner(_), Some(q)) => q.max(0) as usize,
        (_, Some(q)) => (tree.n.get() as i64 - q).max(0) as usize,
        (_, None) => tree.n.get(),
    };
    for s in 0..=max {
        let mut next = tree.clone();
        next.labels[v.strand - 1][v.depth] = s;
        extend_level(&next, t, vertices, idx + 1, out);
    }
}
