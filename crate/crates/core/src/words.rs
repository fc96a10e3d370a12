//! Letters, columns and admissibility over the alphabet `C_n`.
//!
//! Letters are stored as signed integers: `i` is the unbarred letter and `-i`
//! its barred partner `ī`. The alphabet order is
//! `1 < 2 < … < n < n̄ < … < 2̄ < 1̄`.

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// A letter of `C_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i16);

impl Letter {
    pub fn unbarred(index: u16) -> Letter {
        assert!(index >= 1, "letter index must be positive");
        Letter(index as i16)
    }

    pub fn barred(index: u16) -> Letter {
        assert!(index >= 1, "letter index must be positive");
        Letter(-(index as i16))
    }

    /// Builds a letter from its signed encoding, `-i` meaning `ī`.
    pub fn from_signed(value: i16) -> Option<Letter> {
        (value != 0).then_some(Letter(value))
    }

    pub fn signed(self) -> i16 {
        self.0
    }

    pub fn index(self) -> u16 {
        self.0.unsigned_abs()
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// `x ↦ x̄` and `x̄ ↦ x`.
    pub fn bar(self) -> Letter {
        Letter(-self.0)
    }

    fn key(self) -> (bool, i16) {
        (self.0 < 0, self.0)
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The rank `n` of the alphabet `C_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank(u16);

impl Rank {
    pub fn new(n: usize) -> Result<Rank> {
        if n == 0 || n > i16::MAX as usize {
            return Err(Error::Domain(format!("rank must be in 1..=32767, got {n}")));
        }
        Ok(Rank(n as u16))
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    pub fn contains(self, letter: Letter) -> bool {
        letter.index() as usize <= self.get()
    }

    /// All letters of `C_n` in increasing order.
    pub fn alphabet(self) -> Vec<Letter> {
        let n = self.0;
        (1..=n)
            .map(Letter::unbarred)
            .chain((1..=n).rev().map(Letter::barred))
            .collect()
    }

    pub(crate) fn check_letter(self, letter: Letter) -> Result<()> {
        if self.contains(letter) {
            Ok(())
        } else {
            Err(Error::Domain(format!("letter {letter} exceeds rank {}", self.0)))
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A strictly increasing sequence of letters. The empty column is `ε`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Column(Vec<Letter>);

impl Column {
    /// Fails unless `letters` is strictly increasing.
    pub fn new(letters: Vec<Letter>) -> Result<Column> {
        if let Some(w) = letters.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!(
                "not a column: {} is not below {}",
                w[0], w[1]
            )));
        }
        Ok(Column(letters))
    }

    pub(crate) fn from_sorted(letters: Vec<Letter>) -> Column {
        debug_assert!(letters.windows(2).all(|w| w[0] < w[1]));
        Column(letters)
    }

    pub fn epsilon() -> Column {
        Column(Vec::new())
    }

    /// Convenience constructor from signed values; panics on a non-column.
    pub fn from_signed(values: &[i16]) -> Column {
        let letters = values
            .iter()
            .map(|&v| Letter::from_signed(v).expect("zero is not a letter"))
            .collect();
        Column::new(letters).expect("values do not form a column")
    }

    pub fn is_epsilon(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.0.binary_search(&letter).is_ok()
    }

    /// Position of `letter` in the column, if present.
    pub fn position(&self, letter: Letter) -> Option<usize> {
        self.0.binary_search(&letter).ok()
    }

    /// `N_z`: the number of letters `x ≤ z` or `x ≥ z̄`.
    pub fn n_z(&self, z: usize, rank: Rank) -> Result<usize> {
        if z == 0 || z > rank.get() {
            return Err(Error::Domain(format!("z = {z} outside 1..={}", rank.get())));
        }
        Ok(n_z_unchecked(&self.0, z))
    }

    /// Admissibility in the decorated setting, where `ε` counts as admissible.
    pub fn is_admissible(&self, rank: Rank) -> bool {
        self.0.iter().all(|&x| rank.contains(x)) && (1..=rank.get()).all(|z| n_z_unchecked(&self.0, z) <= z)
    }

    /// Admissibility among nonempty columns only.
    pub fn is_admissible_strict(&self, rank: Rank) -> bool {
        !self.is_epsilon() && self.is_admissible(rank)
    }
}

impl From<Column> for Vec<Letter> {
    fn from(c: Column) -> Self {
        c.0
    }
}

pub(crate) fn n_z_unchecked(letters: &[Letter], z: usize) -> usize {
    letters.iter().filter(|x| (x.index() as usize) <= z).count()
}

/// Admissibility of a raw letter sequence. Fails if the sequence is not a
/// column; `strict` rejects the empty column.
pub fn is_admissible(letters: &[Letter], rank: Rank, strict: bool) -> Result<bool> {
    let col = Column::new(letters.to_vec())?;
    Ok(if strict {
        col.is_admissible_strict(rank)
    } else {
        col.is_admissible(rank)
    })
}

/// A word over `C_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct PlainWord(pub Vec<Letter>);

impl PlainWord {
    pub fn from_signed(values: &[i16]) -> PlainWord {
        PlainWord(
            values
                .iter()
                .map(|&v| Letter::from_signed(v).expect("zero is not a letter"))
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A word whose letters are admissible columns, `ε` included.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct DecoratedWord(Vec<Column>);

impl DecoratedWord {
    /// Fails if some column is not admissible at `rank`.
    pub fn new(columns: Vec<Column>, rank: Rank) -> Result<DecoratedWord> {
        if let Some(c) = columns.iter().find(|c| !c.is_admissible(rank)) {
            return Err(Error::InvalidInput(format!(
                "column {} is not admissible at rank {rank}",
                crate::text::format_column(c)
            )));
        }
        Ok(DecoratedWord(columns))
    }

    pub(crate) fn from_columns(columns: Vec<Column>) -> DecoratedWord {
        DecoratedWord(columns)
    }

    /// Test helper: columns from signed values; panics on bad input.
    pub fn from_signed(columns: &[&[i16]]) -> DecoratedWord {
        DecoratedWord(columns.iter().map(|c| Column::from_signed(c)).collect())
    }

    pub fn columns(&self) -> &[Column] {
        &self.0
    }

    pub fn into_columns(self) -> Vec<Column> {
        self.0
    }

    /// Number of columns, `ε` included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The reading `r(w)`: concatenation of all columns.
    pub fn reading(&self) -> PlainWord {
        PlainWord(self.0.iter().flat_map(|c| c.letters().iter().copied()).collect())
    }

    /// Number of `ε` columns.
    pub fn epsilon_count(&self) -> usize {
        self.0.iter().filter(|c| c.is_epsilon()).count()
    }

    /// Drops every `ε`.
    pub fn project(&self) -> DecoratedWord {
        DecoratedWord(self.0.iter().filter(|c| !c.is_epsilon()).cloned().collect())
    }
}

/// Parameters of the block column `𝔠(a; b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockSpec {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl BlockSpec {
    /// `𝔠(p) = 1 2 … p`.
    pub fn unbarred_prefix(p: usize) -> BlockSpec {
        BlockSpec { a: 0, b: p, c: 0 }
    }

    /// `𝔠(a, b) = (a+1) … (a+b)`.
    pub fn unbarred(a: usize, b: usize) -> BlockSpec {
        BlockSpec { a, b, c: 0 }
    }

    /// `𝔠(ā, c) = ā (a-1)‾ … (a-c+1)‾`.
    pub fn barred(a: usize, c: usize) -> BlockSpec {
        BlockSpec { a, b: 0, c }
    }
}

/// Builds `𝔠(a; b, c) = (a+1) … (a+b) (a+b)‾ … (a+b-c+1)‾`.
pub fn block(spec: BlockSpec, rank: Rank) -> Result<Column> {
    let BlockSpec { a, b, c } = spec;
    let top = a + b;
    if c > top || top > rank.get() {
        return Err(Error::Domain(format!(
            "block 𝔠({a}; {b}, {c}) needs c ≤ a+b ≤ {}",
            rank.get()
        )));
    }
    let letters = (a + 1..=top)
        .map(|i| Letter::unbarred(i as u16))
        .chain((top - c + 1..=top).rev().map(|i| Letter::barred(i as u16)))
        .collect();
    Ok(Column::from_sorted(letters))
}

/// Whether `col` is a block of one polarity: `(a+1) … (a+b)` or
/// `ā (a-1)‾ … (a-c+1)‾`.
pub fn is_block(col: &Column) -> bool {
    let letters = col.letters();
    let Some(first) = letters.first() else {
        return true;
    };
    let barred = first.is_barred();
    letters.windows(2).all(|w| {
        w[1].is_barred() == barred
            && if barred {
                w[0].index() == w[1].index() + 1
            } else {
                w[1].index() == w[0].index() + 1
            }
    })
}

/// Admissibility of a product of block columns, checking `N_z ≤ z` only at
/// the largest letter of every unbarred block and at the index of the
/// smallest letter of every barred block.
pub fn block_admissible(blocks: &[Column], rank: Rank) -> Result<bool> {
    let mut seen_barred = false;
    let mut letters = Vec::new();
    let mut probes = Vec::new();
    for blk in blocks {
        if blk.is_epsilon() {
            continue;
        }
        if !is_block(blk) {
            return Err(Error::InvalidInput(format!(
                "{} is not a block column",
                crate::text::format_column(blk)
            )));
        }
        let barred = blk.letters()[0].is_barred();
        if !barred && seen_barred {
            return Err(Error::InvalidInput("an unbarred block follows a barred one".into()));
        }
        seen_barred |= barred;
        let probe = if barred {
            blk.letters()[0].index()
        } else {
            blk.letters()[blk.len() - 1].index()
        };
        probes.push(probe as usize);
        letters.extend_from_slice(blk.letters());
    }
    for &x in &letters {
        rank.check_letter(x)?;
    }
    let word = Column::new(letters)?;
    Ok(probes.into_iter().all(|z| n_z_unchecked(word.letters(), z) <= z))
}

/// Every way of writing a nonempty column over `C_n` as a product of
/// blocks, admissible or not.
pub fn block_products(rank: Rank) -> Vec<Vec<Column>> {
    let alphabet = rank.alphabet();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << alphabet.len()) {
        let letters: Vec<Letter> = alphabet
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &x)| x)
            .collect();
        let mut runs: Vec<Vec<Letter>> = Vec::new();
        for &x in &letters {
            match runs.last_mut() {
                Some(run) if is_block(&Column::from_sorted(vec![*run.last().unwrap(), x])) => run.push(x),
                _ => runs.push(vec![x]),
            }
        }
        let mut products: Vec<Vec<Column>> = vec![Vec::new()];
        for run in &runs {
            let cuts = run.len() - 1;
            let mut next = Vec::new();
            for prefix in &products {
                for split in 0u32..(1 << cuts) {
                    let mut p = prefix.clone();
                    let mut start = 0;
                    for i in 0..cuts {
                        if split & (1 << i) != 0 {
                            p.push(Column::from_sorted(run[start..=i].to_vec()));
                            start = i + 1;
                        }
                    }
                    p.push(Column::from_sorted(run[start..].to_vec()));
                    next.push(p);
                }
            }
            products = next;
        }
        out.extend(products);
    }
    out
}

/// The order `c ⪯ d` on admissible columns, extended by `c ⪯ ε` for every
/// `c`.
///
/// A pair of adjacent columns `c₁ c₂` in a word is standard exactly when
/// `c₂ ⪯ c₁`.
pub fn precedes(c: &Column, d: &Column, rank: Rank) -> Result<bool> {
    for col in [c, d] {
        if !col.is_admissible(rank) {
            return Err(Error::InvalidInput(format!(
                "column {} is not admissible at rank {rank}",
                crate::text::format_column(col)
            )));
        }
    }
    Ok(precedes_unchecked(c, d, rank))
}

pub(crate) fn precedes_unchecked(c: &Column, d: &Column, rank: Rank) -> bool {
    if d.is_epsilon() {
        return true;
    }
    if c.is_epsilon() || c.len() < d.len() {
        return false;
    }
    let (x, y) = (c.letters(), d.letters());
    if x.iter().zip(y).any(|(a, b)| a > b) {
        return false;
    }
    !has_configuration(c, d, rank)
}

/// Searches for an `(a, b)`-configuration across the pair `c d`.
fn has_configuration(c: &Column, d: &Column, rank: Rank) -> bool {
    let n = rank.get() as u16;
    for a in 1..=n {
        // positions are 1-based as in the defining inequalities
        let Some(p) = c.position(Letter::unbarred(a)).map(|p| p + 1) else {
            continue;
        };
        let Some(s) = d.position(Letter::barred(a)).map(|s| s + 1) else {
            continue;
        };
        for b in a..=n {
            let need = (b - a) as usize;
            let ub = Letter::unbarred(b);
            let bb = Letter::barred(b);
            // y_q = b, y_r = b̄ inside d
            if let (Some(q), Some(r)) = (d.position(ub), d.position(bb)) {
                let (q, r) = (q + 1, r + 1);
                if p <= q && q < r && r <= s && (s - r) + (q - p) >= need {
                    return true;
                }
            }
            // x_q = b, x_r = b̄ inside c
            if let (Some(q), Some(r)) = (c.position(ub), c.position(bb)) {
                let (q, r) = (q + 1, r + 1);
                if p <= q && q < r && r <= s && (s - r) + (q - p) >= need {
                    return true;
                }
            }
        }
    }
    false
}

/// Every admissible column at `rank`, `ε` first when `with_epsilon`, in
/// increasing lexicographic order of letters.
pub fn admissible_columns(rank: Rank, with_epsilon: bool) -> Vec<Column> {
    let alphabet = rank.alphabet();
    let mut out = Vec::new();
    let total = 1u64 << alphabet.len();
    for mask in 0..total {
        let letters: Vec<Letter> = alphabet
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &x)| x)
            .collect();
        let col = Column::from_sorted(letters);
        if col.is_epsilon() && !with_epsilon {
            continue;
        }
        if col.is_admissible(rank) {
            out.push(col);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn col(v: &[i16]) -> Column {
        Column::from_signed(v)
    }

    #[test]
    fn letter_order() {
        let r = rank(3);
        let alphabet = r.alphabet();
        let signed: Vec<i16> = alphabet.iter().map(|x| x.signed()).collect();
        assert_eq!(signed, vec![1, 2, 3, -3, -2, -1]);
        assert!(alphabet.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn column_rejects_non_increasing() {
        assert!(Column::new(vec![Letter::barred(1), Letter::unbarred(1)]).is_err());
        assert!(Column::new(vec![Letter::unbarred(2), Letter::unbarred(2)]).is_err());
        assert!(is_admissible(&[Letter::barred(2), Letter::unbarred(2)], rank(2), false).is_err());
    }

    #[test]
    fn n_z_examples() {
        assert_eq!(col(&[2, 3, -3]).n_z(3, rank(3)).unwrap(), 3);
        assert_eq!(Column::epsilon().n_z(2, rank(3)).unwrap(), 0);
        assert_eq!(col(&[1, -3]).n_z(1, rank(3)).unwrap(), 1);
        assert!(col(&[1]).n_z(0, rank(3)).is_err());
        assert!(col(&[1]).n_z(4, rank(3)).is_err());
    }

    #[test]
    fn admissibility_examples() {
        assert!(col(&[1, -3]).is_admissible(rank(3)));
        assert!(col(&[1]).is_admissible_strict(rank(5)));
        assert!(!col(&[1, -1]).is_admissible(rank(1)));
        assert!(Column::epsilon().is_admissible(rank(2)));
        assert!(!Column::epsilon().is_admissible_strict(rank(2)));
    }

    #[test]
    fn admissible_column_counts() {
        // dimensions of the fundamental symplectic representations, summed
        let counts: Vec<usize> = (1..=4).map(|n| admissible_columns(rank(n), false).len()).collect();
        assert_eq!(counts, vec![2, 9, 34, 125]);
        assert_eq!(admissible_columns(rank(1), false), vec![col(&[1]), col(&[-1])]);
    }

    #[test]
    fn block_examples() {
        let r4 = rank(4);
        assert_eq!(block(BlockSpec::unbarred(3, 1), r4).unwrap(), col(&[4]));
        assert_eq!(block(BlockSpec::barred(4, 2), r4).unwrap(), col(&[-4, -3]));
        assert_eq!(block(BlockSpec { a: 0, b: 0, c: 0 }, r4).unwrap(), Column::epsilon());
        assert_eq!(block(BlockSpec { a: 1, b: 2, c: 2 }, r4).unwrap(), col(&[2, 3, -3, -2]));
        assert!(block(BlockSpec { a: 3, b: 2, c: 0 }, r4).is_err());
        assert!(block(BlockSpec { a: 0, b: 1, c: 2 }, r4).is_err());
    }

    #[test]
    fn block_concatenation_law() {
        let r = rank(6);
        for a in 0..=6 {
            for b in 0..=6 - a {
                for c in 0..=6 - a - b {
                    let mut left = block(BlockSpec::unbarred(a, b), r).unwrap().into_letters();
                    left.extend(block(BlockSpec::unbarred(a + b, c), r).unwrap().into_letters());
                    assert_eq!(left, block(BlockSpec::unbarred(a, b + c), r).unwrap().into_letters());
                }
            }
        }
    }

    #[test]
    fn block_admissible_examples() {
        let r4 = rank(4);
        let blocks = [
            block(BlockSpec::unbarred_prefix(2), r4).unwrap(),
            block(BlockSpec::unbarred(3, 1), r4).unwrap(),
            block(BlockSpec::barred(4, 2), r4).unwrap(),
        ];
        assert!(!block_admissible(&blocks, r4).unwrap());
        for p in 0..=4 {
            assert!(block_admissible(&[block(BlockSpec::unbarred_prefix(p), r4).unwrap()], r4).unwrap());
        }
        let r3 = rank(3);
        let blocks = [
            block(BlockSpec::unbarred_prefix(2), r3).unwrap(),
            block(BlockSpec::barred(3, 1), r3).unwrap(),
        ];
        assert!(block_admissible(&blocks, r3).unwrap());
        assert!(col(&[1, 2, -3]).is_admissible(r3));
    }

    #[test]
    fn block_admissible_rejects_bad_decompositions() {
        let r = rank(3);
        assert!(block_admissible(&[col(&[1, 3])], r).is_err());
        assert!(block_admissible(&[col(&[-2]), col(&[1])], r).is_err());
        assert!(block_admissible(&[col(&[2]), col(&[1])], r).is_err());
    }

    #[test]
    fn block_criterion_matches_full_scan() {
        for n in 1..=4 {
            let rank = rank(n);
            let products = block_products(rank);
            assert!(!products.is_empty());
            for blocks in products {
                let letters: Vec<Letter> = blocks.iter().flat_map(|b| b.letters().iter().copied()).collect();
                let full = Column::new(letters).unwrap().is_admissible(rank);
                assert_eq!(block_admissible(&blocks, rank).unwrap(), full, "{blocks:?}");
            }
        }
    }

    #[test]
    fn precedes_examples() {
        let r3 = rank(3);
        assert!(!precedes(&col(&[2, 3, -3]), &col(&[2, 3, -2]), r3).unwrap());
        assert!(precedes(&col(&[1]), &col(&[1]), r3).unwrap());
        assert!(precedes(&col(&[1, 2]), &col(&[1]), r3).unwrap());
        assert!(!precedes(&col(&[1]), &col(&[1, 2]), r3).unwrap());
        // the other tableau of the same example is fine
        assert!(precedes(&col(&[1, -3]), &col(&[2]), r3).unwrap());
        assert!(precedes(&col(&[1, 2]), &col(&[1, -3]), r3).unwrap());
    }

    #[test]
    fn precedes_with_epsilon() {
        let r = rank(2);
        assert!(precedes(&col(&[1]), &Column::epsilon(), r).unwrap());
        assert!(precedes(&Column::epsilon(), &Column::epsilon(), r).unwrap());
        assert!(!precedes(&Column::epsilon(), &col(&[1]), r).unwrap());
        assert!(precedes(&col(&[1, -1]), &col(&[1]), r).is_err());
    }

    #[test]
    fn n_z_is_monotone_in_z() {
        let r = rank(4);
        for c in admissible_columns(r, true) {
            let values: Vec<usize> = (1..=4).map(|z| c.n_z(z, r).unwrap()).collect();
            assert!(values.windows(2).all(|w| w[0] <= w[1]), "{c:?}");
        }
    }
}
