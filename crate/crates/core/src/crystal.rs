//! Kashiwara operators on words over `C_n` and on words of columns.
//!
//! The crystal graph of `C_n` is the chain
//! `1 →₁ 2 →₂ … →ₙ₋₁ n →ₙ n̄ →ₙ₋₁ (n-1)‾ → … →₁ 1̄`.
//! Operators act on words through the bracket rule: letters with an outgoing
//! `i`-arrow carry an f-mark, letters with an incoming one carry an e-mark,
//! and every e-mark cancels the nearest uncancelled f-mark to its left.

use std::collections::{BTreeSet, VecDeque};

use crate::words::{Column, DecoratedWord, Letter, PlainWord, Rank};
use crate::{Error, Result};

/// Raising (`E`) or lowering (`F`) operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrystalOp {
    E,
    F,
}

/// Content vector: `coords[i-1]` is the number of `i` minus the number of `ī`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<i64>);

/// Reduced `i`-signature of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    /// Uncancelled e-marks.
    pub p: usize,
    /// Uncancelled f-marks.
    pub q: usize,
    /// Letter index where `e_i` acts (rightmost uncancelled e-mark).
    pub e_position: Option<usize>,
    /// Letter index where `f_i` acts (leftmost uncancelled f-mark).
    pub f_position: Option<usize>,
}

/// Successor of `x` in the crystal chain, ignoring arrow labels.
pub fn successor(x: Letter, rank: Rank) -> Option<Letter> {
    let n = rank.get() as u16;
    let i = x.index();
    match (x.is_barred(), i) {
        (false, i) if i == n => Some(Letter::barred(n)),
        (false, i) => Some(Letter::unbarred(i + 1)),
        (true, 1) => None,
        (true, i) => Some(Letter::barred(i - 1)),
    }
}

fn check_index(i: usize, rank: Rank) -> Result<()> {
    if i == 0 || i > rank.get() {
        return Err(Error::Domain(format!("operator index {i} outside 1..={}", rank.get())));
    }
    Ok(())
}

/// `f_i` on a single letter.
pub fn f_letter(x: Letter, i: usize, rank: Rank) -> Option<Letter> {
    let n = rank.get();
    let idx = x.index() as usize;
    if i < n {
        match (x.is_barred(), idx) {
            (false, k) if k == i => Some(Letter::unbarred(i as u16 + 1)),
            (true, k) if k == i + 1 => Some(Letter::barred(i as u16)),
            _ => None,
        }
    } else if !x.is_barred() && idx == n {
        Some(Letter::barred(n as u16))
    } else {
        None
    }
}

/// `e_i` on a single letter.
pub fn e_letter(x: Letter, i: usize, rank: Rank) -> Option<Letter> {
    let n = rank.get();
    let idx = x.index() as usize;
    if i < n {
        match (x.is_barred(), idx) {
            (false, k) if k == i + 1 => Some(Letter::unbarred(i as u16)),
            (true, k) if k == i => Some(Letter::barred(i as u16 + 1)),
            _ => None,
        }
    } else if x.is_barred() && idx == n {
        Some(Letter::unbarred(n as u16))
    } else {
        None
    }
}

fn letter_op(op: CrystalOp, x: Letter, i: usize, rank: Rank) -> Option<Letter> {
    match op {
        CrystalOp::E => e_letter(x, i, rank),
        CrystalOp::F => f_letter(x, i, rank),
    }
}

/// Words the operators act on, through their sequence of letters.
pub trait CrystalWord: Clone + Ord {
    /// The letters the operators see, left to right.
    fn reading_letters(&self) -> Vec<Letter>;

    /// Replaces the letter at reading position `pos`.
    fn with_letter(&self, pos: usize, x: Letter) -> Self;
}

impl CrystalWord for PlainWord {
    fn reading_letters(&self) -> Vec<Letter> {
        self.0.clone()
    }

    fn with_letter(&self, pos: usize, x: Letter) -> Self {
        let mut letters = self.0.clone();
        letters[pos] = x;
        PlainWord(letters)
    }
}

impl CrystalWord for DecoratedWord {
    fn reading_letters(&self) -> Vec<Letter> {
        self.reading().0
    }

    fn with_letter(&self, mut pos: usize, x: Letter) -> Self {
        let mut columns = self.columns().to_vec();
        for col in columns.iter_mut() {
            if pos < col.len() {
                let mut letters = col.letters().to_vec();
                letters[pos] = x;
                *col = Column::new(letters).expect("crystal operators preserve columns");
                break;
            }
            pos -= col.len();
        }
        DecoratedWord::from_columns(columns)
    }
}

/// Reduced `i`-signature of a letter sequence.
pub fn signature_of(letters: &[Letter], i: usize, rank: Rank) -> Result<Signature> {
    check_index(i, rank)?;
    let mut open_f: Vec<usize> = Vec::new();
    let mut open_e: Vec<usize> = Vec::new();
    for (pos, &x) in letters.iter().enumerate() {
        if e_letter(x, i, rank).is_some() && open_f.pop().is_none() {
            open_e.push(pos);
        }
        if f_letter(x, i, rank).is_some() {
            open_f.push(pos);
        }
    }
    Ok(Signature {
        p: open_e.len(),
        q: open_f.len(),
        e_position: open_e.last().copied(),
        f_position: open_f.first().copied(),
    })
}

pub fn signature<W: CrystalWord>(w: &W, i: usize, rank: Rank) -> Result<Signature> {
    signature_of(&w.reading_letters(), i, rank)
}

/// `e_i.w` or `f_i.w`; `None` when undefined.
pub fn apply<W: CrystalWord>(w: &W, op: CrystalOp, i: usize, rank: Rank) -> Result<Option<W>> {
    let letters = w.reading_letters();
    let sig = signature_of(&letters, i, rank)?;
    let pos = match op {
        CrystalOp::E => sig.e_position,
        CrystalOp::F => sig.f_position,
    };
    Ok(pos.map(|pos| {
        let x = letter_op(op, letters[pos], i, rank).expect("marked letter admits the operator");
        w.with_letter(pos, x)
    }))
}

/// `(φ_i(w), ε_i(w))`.
pub fn phi_eps<W: CrystalWord>(w: &W, i: usize, rank: Rank) -> Result<(usize, usize)> {
    let sig = signature(w, i, rank)?;
    Ok((sig.q, sig.p))
}

/// The highest-weight word `w⁰` together with the indices of the raising
/// operators applied, in order. The smallest applicable index is always
/// used first.
pub fn highest_weight_path<W: CrystalWord>(w: &W, rank: Rank) -> (W, Vec<usize>) {
    let mut cur = w.clone();
    let mut path = Vec::new();
    'outer: loop {
        for i in 1..=rank.get() {
            if let Some(next) = apply(&cur, CrystalOp::E, i, rank).expect("index in range") {
                cur = next;
                path.push(i);
                continue 'outer;
            }
        }
        return (cur, path);
    }
}

pub fn highest_weight<W: CrystalWord>(w: &W, rank: Rank) -> W {
    highest_weight_path(w, rank).0
}

pub fn is_highest_weight<W: CrystalWord>(w: &W, rank: Rank) -> bool {
    let letters = w.reading_letters();
    (1..=rank.get()).all(|i| signature_of(&letters, i, rank).unwrap().p == 0)
}

pub fn weight<W: CrystalWord>(w: &W, rank: Rank) -> Weight {
    let mut coords = vec![0i64; rank.get()];
    for x in w.reading_letters() {
        let slot = &mut coords[x.index() as usize - 1];
        *slot += if x.is_barred() { -1 } else { 1 };
    }
    Weight(coords)
}

/// Vertices of the connected component of `w`, sorted. Fails once more than
/// `cap` vertices have been reached.
pub fn component<W: CrystalWord>(w: &W, rank: Rank, cap: usize) -> Result<Vec<W>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(v) = queue.pop_front() {
        for i in 1..=rank.get() {
            for op in [CrystalOp::E, CrystalOp::F] {
                if let Some(u) = apply(&v, op, i, rank)? {
                    if seen.insert(u.clone()) {
                        if seen.len() > cap {
                            return Err(Error::CapExceeded { n: rank.get(), cap });
                        }
                        queue.push_back(u);
                    }
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Reference implementation of the operators by the recursive tensor-product
/// rule on `u·x`, with `φ_i` and `ε_i` counted by iterating the operators.
///
/// Exponential in the word length; meant for cross-checking [`apply`].
pub fn apply_by_tensor_rule(letters: &[Letter], op: CrystalOp, i: usize, rank: Rank) -> Result<Option<Vec<Letter>>> {
    check_index(i, rank)?;
    Ok(tensor_apply(letters, op, i, rank))
}

fn tensor_apply(w: &[Letter], op: CrystalOp, i: usize, rank: Rank) -> Option<Vec<Letter>> {
    let (&x, u) = w.split_last()?;
    if u.is_empty() {
        return letter_op(op, x, i, rank).map(|y| vec![y]);
    }
    let phi_u = tensor_count(u, CrystalOp::F, i, rank);
    let eps_x = usize::from(e_letter(x, i, rank).is_some());
    let act_left = match op {
        CrystalOp::E => phi_u >= eps_x,
        CrystalOp::F => phi_u > eps_x,
    };
    if act_left {
        let mut out = tensor_apply(u, op, i, rank)?;
        out.push(x);
        Some(out)
    } else {
        let y = letter_op(op, x, i, rank)?;
        let mut out = u.to_vec();
        out.push(y);
        Some(out)
    }
}

fn tensor_count(w: &[Letter], op: CrystalOp, i: usize, rank: Rank) -> usize {
    let mut cur = w.to_vec();
    let mut count = 0;
    while let Some(next) = tensor_apply(&cur, op, i, rank) {
        cur = next;
        count += 1;
    }
    count
}
