//! Plactic relations, column insertion and symplectic tableaux.
//!
//! Relations are applied left to right as written below (`1 < x ≤ n`):
//!
//! | name | rewrite | condition |
//! |------|---------|-----------|
//! | R1a  | `y z x → y x z` | `x ≤ y < z`, `z ≠ x̄` |
//! | R1b  | `x z y → z x y` | `x < y ≤ z`, `z ≠ x̄` |
//! | R2a  | `y (x-1)‾ (x-1) → y x x̄` | `x ≤ y ≤ x̄` |
//! | R2b  | `x x̄ y → (x-1)‾ (x-1) y` | `x ≤ y ≤ x̄` |
//!
//! R3 contracts an almost admissible column by deleting a pair `z z̄`.
//!
//! A [`Tableau`] stores its columns in reading order: shortest column first,
//! so that the concatenation of the stored columns is the reading word.

use std::fmt;

use crate::crystal::highest_weight;
use crate::words::{precedes_unchecked, Column, DecoratedWord, Letter, PlainWord, Rank};
use crate::{Error, Result};

/// One of the two-sided plactic relations, in the orientation used here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    R1a,
    R1b,
    R2a,
    R2b,
    R3,
}

/// All length-three rewrites matching `a b c`.
fn window_rewrites(a: Letter, b: Letter, c: Letter, rank: Rank) -> Vec<(Relation, [Letter; 3])> {
    let mut out = Vec::new();
    // R1a with (y, z, x) = (a, b, c)
    if c <= a && a < b && b != c.bar() {
        out.push((Relation::R1a, [a, c, b]));
    }
    // R1b with (x, z, y) = (a, b, c)
    if a < c && c <= b && b != a.bar() {
        out.push((Relation::R1b, [b, a, c]));
    }
    // R2a with (y, (x-1)‾, x-1) = (a, b, c)
    if !c.is_barred() && b == c.bar() && (c.index() as usize) < rank.get() {
        let x = Letter::unbarred(c.index() + 1);
        if x <= a && a <= x.bar() {
            out.push((Relation::R2a, [a, x, x.bar()]));
        }
    }
    // R2b with (x, x̄, y) = (a, b, c)
    if !a.is_barred() && b == a.bar() && a.index() > 1 && a <= c && c <= b {
        let prev = Letter::unbarred(a.index() - 1);
        out.push((Relation::R2b, [prev.bar(), prev, c]));
    }
    out
}

fn is_almost_admissible(letters: &[Letter], rank: Rank) -> bool {
    let Ok(col) = Column::new(letters.to_vec()) else {
        return false;
    };
    if col.is_admissible(rank) || letters.len() < 2 {
        return false;
    }
    let left = Column::from_sorted(letters[1..].to_vec());
    let right = Column::from_sorted(letters[..letters.len() - 1].to_vec());
    left.is_admissible(rank) && right.is_admissible(rank)
}

/// Deletes the pair `z z̄` from an almost admissible column, `z` the lowest
/// unbarred letter with `z, z̄` present and `N_z = z + 1`.
fn contract(letters: &[Letter]) -> Option<Vec<Letter>> {
    let z = letters
        .iter()
        .filter(|x| !x.is_barred())
        .map(|x| x.index())
        .find(|&z| {
            letters.contains(&Letter::barred(z)) && crate::words::n_z_unchecked(letters, z as usize) == z as usize + 1
        })?;
    Some(letters.iter().copied().filter(|x| x.index() != z).collect())
}

/// Applies the relation whose left-hand side starts at `at`: a length-three
/// pattern of R1/R2, or else R3 on the shortest almost admissible column
/// factor starting there.
pub fn apply_relation(w: &PlainWord, at: usize, rank: Rank) -> Result<Option<(Relation, PlainWord)>> {
    let letters = w.letters();
    if at >= letters.len() {
        return Err(Error::InvalidInput(format!(
            "position {at} outside a word of length {}",
            letters.len()
        )));
    }
    for &x in letters {
        rank.check_letter(x)?;
    }
    if at + 3 <= letters.len() {
        let matches = window_rewrites(letters[at], letters[at + 1], letters[at + 2], rank);
        if let Some((rel, rhs)) = matches.into_iter().next() {
            let mut out = letters.to_vec();
            out[at..at + 3].copy_from_slice(&rhs);
            return Ok(Some((rel, PlainWord(out))));
        }
    }
    for end in at + 2..=letters.len() {
        let factor = &letters[at..end];
        if factor.windows(2).any(|p| p[0] >= p[1]) {
            break;
        }
        if is_almost_admissible(factor, rank) {
            let shorter = contract(factor)
                .ok_or_else(|| Error::Internal("almost admissible column without a contractible pair".into()))?;
            let mut out = letters[..at].to_vec();
            out.extend(shorter);
            out.extend_from_slice(&letters[end..]);
            return Ok(Some((Relation::R3, PlainWord(out))));
        }
    }
    Ok(None)
}

/// Result of inserting a letter into a column.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Bump {
    /// `c x` is itself an admissible column.
    Append(Column),
    /// `c x ≡ y c'`.
    Bumped(Letter, Column),
    /// `c x` contracts to a shorter column.
    Contracted(Column),
}

fn insert_letter(c: &Column, x: Letter, rank: Rank) -> Result<Bump> {
    let p = c.len();
    let mut cx = c.letters().to_vec();
    cx.push(x);
    let hw = highest_weight(&PlainWord(cx.clone()), rank);
    let last = *hw.letters().last().unwrap();
    let internal = |what: &str| {
        Error::Internal(format!(
            "{what} while inserting {x} into {}",
            crate::text::format_column(c)
        ))
    };
    if !last.is_barred() && last.index() as usize == p + 1 {
        let col = Column::new(cx).map_err(|_| internal("appended word is not a column"))?;
        return Ok(Bump::Append(col));
    }
    if !last.is_barred() && last.index() == 1 {
        let mut word = cx;
        for at in (0..word.len().saturating_sub(2)).rev() {
            let mut matches = window_rewrites(word[at], word[at + 1], word[at + 2], rank);
            if matches.len() != 1 {
                return Err(internal(&format!("{} relations match at position {at}", matches.len())));
            }
            let (_, rhs) = matches.pop().unwrap();
            word[at..at + 3].copy_from_slice(&rhs);
        }
        let y = word[0];
        let rest = Column::new(word[1..].to_vec()).map_err(|_| internal("bumped remainder is not a column"))?;
        return Ok(Bump::Bumped(y, rest));
    }
    if last.is_barred() && last.index() as usize == p {
        if !is_almost_admissible(&cx, rank) {
            return Err(internal("contracting case on a word that is not almost admissible"));
        }
        let shorter = contract(&cx).ok_or_else(|| internal("no contractible pair"))?;
        let col = Column::from_sorted(shorter);
        if !col.is_admissible(rank) {
            return Err(internal("contraction is not admissible"));
        }
        return Ok(Bump::Contracted(col));
    }
    Err(internal("unexpected highest weight shape"))
}

/// Inserts a letter into an admissible column. The result is a pair of
/// columns in reading order, padded with `ε` in front when only one column
/// results.
pub fn insert_letter_column(c: &Column, x: Letter, rank: Rank) -> Result<(Column, Column)> {
    rank.check_letter(x)?;
    if !c.is_admissible(rank) {
        return Err(not_admissible(c, rank));
    }
    if c.is_epsilon() {
        return Ok((Column::epsilon(), Column::from_sorted(vec![x])));
    }
    Ok(match insert_letter(c, x, rank)? {
        Bump::Append(col) | Bump::Contracted(col) => (Column::epsilon(), col),
        Bump::Bumped(y, col) => (Column::from_sorted(vec![y]), col),
    })
}

fn not_admissible(c: &Column, rank: Rank) -> Error {
    Error::InvalidInput(format!(
        "column {} is not admissible at rank {rank}",
        crate::text::format_column(c)
    ))
}

/// Whether the adjacent pair `left right` is already in normal form, that
/// is `right ⪯ left`.
pub fn is_standard_pair(left: &Column, right: &Column, rank: Rank) -> bool {
    precedes_unchecked(right, left, rank)
}

/// Column insertion `(c₁ ← c₂)` on admissible columns, `ε` allowed, as a pair
/// in reading order with `ε` padding in front.
pub fn insert_pair(c1: &Column, c2: &Column, rank: Rank) -> Result<(Column, Column)> {
    for c in [c1, c2] {
        if !c.is_admissible(rank) {
            return Err(not_admissible(c, rank));
        }
    }
    if c1.is_epsilon() || c2.is_epsilon() {
        let nonempty = if c1.is_epsilon() { c2 } else { c1 };
        return Ok((Column::epsilon(), nonempty.clone()));
    }
    if is_standard_pair(c1, c2, rank) {
        return Ok((c1.clone(), c2.clone()));
    }
    let mut cols = vec![c1.clone()];
    for &x in c2.letters() {
        insert_into(&mut cols, x, rank)?;
    }
    match cols.len() {
        0 => Ok((Column::epsilon(), Column::epsilon())),
        1 => Ok((Column::epsilon(), cols.pop().unwrap())),
        2 => {
            let second = cols.pop().unwrap();
            Ok((cols.pop().unwrap(), second))
        }
        k => Err(Error::Internal(format!("pair insertion produced {k} columns"))),
    }
}

fn insert_into(cols: &mut Vec<Column>, x: Letter, rank: Rank) -> Result<()> {
    let Some(last) = cols.pop() else {
        cols.push(Column::from_sorted(vec![x]));
        return Ok(());
    };
    match insert_letter(&last, x, rank)? {
        Bump::Append(col) => cols.push(col),
        Bump::Bumped(y, col) => {
            insert_into(cols, y, rank)?;
            cols.push(col);
        }
        Bump::Contracted(col) => {
            for &z in col.letters() {
                insert_into(cols, z, rank)?;
            }
        }
    }
    Ok(())
}

/// A symplectic tableau, columns stored in reading order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rank: Rank,
    columns: Vec<Column>,
}

impl Tableau {
    pub fn empty(rank: Rank) -> Tableau {
        Tableau {
            rank,
            columns: Vec::new(),
        }
    }

    /// Checks that every column is nonempty and admissible and that each
    /// adjacent pair is standard.
    pub fn new(columns: Vec<Column>, rank: Rank) -> Result<Tableau> {
        if let Some(c) = columns.iter().find(|c| !c.is_admissible_strict(rank)) {
            return Err(not_admissible(c, rank));
        }
        if let Some(i) = (1..columns.len()).find(|&i| !is_standard_pair(&columns[i - 1], &columns[i], rank)) {
            return Err(Error::InvalidInput(format!(
                "columns {} and {} do not form a tableau",
                crate::text::format_column(&columns[i - 1]),
                crate::text::format_column(&columns[i])
            )));
        }
        Ok(Tableau { rank, columns })
    }

    /// The tableau of a single letter.
    pub fn from_letter(x: Letter, rank: Rank) -> Result<Tableau> {
        rank.check_letter(x)?;
        Ok(Tableau {
            rank,
            columns: vec![Column::from_sorted(vec![x])],
        })
    }

    /// The tableau of a word over `C_n`.
    pub fn of_word(letters: &[Letter], rank: Rank) -> Result<Tableau> {
        let mut t = Tableau::empty(rank);
        for &x in letters {
            t = t.insert(x)?;
        }
        Ok(t)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<Column> {
        self.columns
    }

    /// Number of columns.
    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// The reading word: concatenation of the stored columns.
    pub fn reading(&self) -> PlainWord {
        PlainWord(self.columns.iter().flat_map(|c| c.letters().iter().copied()).collect())
    }

    /// `T ← x`.
    pub fn insert(&self, x: Letter) -> Result<Tableau> {
        self.rank.check_letter(x)?;
        let mut columns = self.columns.clone();
        insert_into(&mut columns, x, self.rank)?;
        Ok(Tableau {
            rank: self.rank,
            columns,
        })
    }

    /// `(T₁ ← T₂)`: inserts the reading of `other` letter by letter.
    pub fn product(&self, other: &Tableau) -> Result<Tableau> {
        check_same_rank(self.rank, other.rank)?;
        let mut columns = self.columns.clone();
        for x in other.reading().0 {
            insert_into(&mut columns, x, self.rank)?;
        }
        Ok(Tableau {
            rank: self.rank,
            columns,
        })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_columns(&self.columns))
    }
}

fn check_same_rank(a: Rank, b: Rank) -> Result<()> {
    if a != b {
        return Err(Error::InvalidInput(format!("rank mismatch: {a} and {b}")));
    }
    Ok(())
}

/// An element of the decorated plactic monoid: a tableau together with a
/// number of leading `ε`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedElement {
    pub tableau: Tableau,
    pub eps_count: usize,
}

impl DecoratedElement {
    pub fn new(tableau: Tableau, eps_count: usize) -> DecoratedElement {
        DecoratedElement { tableau, eps_count }
    }

    pub fn rank(&self) -> Rank {
        self.tableau.rank()
    }

    /// The normal word `ε^k c₁ … c_m`.
    pub fn to_word(&self) -> DecoratedWord {
        let mut columns = vec![Column::epsilon(); self.eps_count];
        columns.extend(self.tableau.columns().iter().cloned());
        DecoratedWord::from_columns(columns)
    }

    /// Number of columns of the normal word, `ε` included.
    pub fn len(&self) -> usize {
        self.eps_count + self.tableau.width()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Normal form of a word of admissible columns: the tableau of its reading,
/// preceded by as many `ε` as needed to keep the number of columns.
pub fn normal_form(w: &DecoratedWord, rank: Rank) -> Result<DecoratedElement> {
    if let Some(c) = w.columns().iter().find(|c| !c.is_admissible(rank)) {
        return Err(not_admissible(c, rank));
    }
    let tableau = Tableau::of_word(w.reading().letters(), rank)?;
    let eps_count = w
        .len()
        .checked_sub(tableau.width())
        .ok_or_else(|| Error::Internal("normal form has more columns than the word".into()))?;
    Ok(DecoratedElement { tableau, eps_count })
}

/// Product in the decorated plactic monoid.
pub fn decorated_product(a: &DecoratedElement, b: &DecoratedElement) -> Result<DecoratedElement> {
    check_same_rank(a.rank(), b.rank())?;
    let tableau = a.tableau.product(&b.tableau)?;
    let merged = a.tableau.width() + b.tableau.width() - tableau.width();
    Ok(DecoratedElement {
        tableau,
        eps_count: a.eps_count + b.eps_count + merged,
    })
}
