#![allow(dead_code)]

use placticc::crystal::{self, CrystalOp};
use placticc::words::admissible_columns;
use placticc::{Column, DecoratedWord, Letter, Rank};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rank(n: usize) -> Rank {
    Rank::new(n).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn dw(cols: &[&[i16]]) -> DecoratedWord {
    DecoratedWord::from_signed(cols)
}

pub fn prefix(p: usize) -> Column {
    Column::new((1..=p).map(|i| Letter::unbarred(i as u16)).collect()).unwrap()
}

/// Random word of `len` admissible columns, `ε` allowed.
pub fn random_word(rng: &mut ChaCha8Rng, n: Rank, len: usize, with_epsilon: bool) -> DecoratedWord {
    let gens = admissible_columns(n, with_epsilon);
    let cols = (0..len).map(|_| gens[rng.gen_range(0..gens.len())].clone()).collect();
    DecoratedWord::new(cols, n).unwrap()
}

/// Applies `f_i` for each index of `path`, last index first: undoes a
/// sequence of raising operators.
pub fn lower_along(w: &DecoratedWord, path: &[usize], n: Rank) -> Option<DecoratedWord> {
    let mut cur = w.clone();
    for &i in path.iter().rev() {
        cur = crystal::apply(&cur, CrystalOp::F, i, n).unwrap()?;
    }
    Some(cur)
}
