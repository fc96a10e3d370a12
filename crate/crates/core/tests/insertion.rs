mod common;

use common::{dw, lower_along, prefix, random_word, rank, rng};
use placticc::crystal::{self, highest_weight_path, CrystalOp};
use placticc::insertion::{
    apply_relation, decorated_product, insert_letter_column, insert_pair, is_standard_pair, normal_form,
};
use placticc::words::admissible_columns;
use placticc::{Column, DecoratedWord, PlainWord, Tableau};
use proptest::prelude::*;

/// Letter insertion predicted from the crystal structure alone: the normal
/// form of the highest-weight word is read off its shape, then lowered back.
fn crystal_insertion(c: &Column, x: placticc::Letter, n: placticc::Rank) -> DecoratedWord {
    let mut letters = c.letters().to_vec();
    letters.push(x);
    let (hw, path) = highest_weight_path(&PlainWord(letters), n);
    let p = c.len();
    let last = *hw.letters().last().unwrap();
    let nf = if !last.is_barred() && last.index() as usize == p + 1 {
        DecoratedWord::from_columns_checked(vec![Column::epsilon(), prefix(p + 1)])
    } else if !last.is_barred() && last.index() == 1 {
        DecoratedWord::from_columns_checked(vec![prefix(1), prefix(p)])
    } else {
        assert!(last.is_barred() && last.index() as usize == p, "{hw:?}");
        DecoratedWord::from_columns_checked(vec![Column::epsilon(), prefix(p - 1)])
    };
    lower_along(&nf, &path, n).expect("lowering the normal form is defined")
}

trait Checked {
    fn from_columns_checked(cols: Vec<Column>) -> DecoratedWord;
}

impl Checked for DecoratedWord {
    fn from_columns_checked(cols: Vec<Column>) -> DecoratedWord {
        DecoratedWord::new(cols, rank(4)).unwrap()
    }
}

#[test]
fn letter_insertion_matches_crystal_prediction() {
    for n in 1..=4 {
        let n = rank(n);
        for c in admissible_columns(n, false) {
            for x in n.alphabet() {
                let (d1, d2) = insert_letter_column(&c, x, n).unwrap();
                let got = DecoratedWord::new(vec![d1, d2], n).unwrap();
                assert_eq!(got, crystal_insertion(&c, x, n), "{c:?} <- {x}");
            }
        }
    }
}

#[test]
fn pair_insertion_outputs_are_standard_and_congruent() {
    for n in 1..=3 {
        let n = rank(n);
        let gens = admissible_columns(n, true);
        for t in &gens {
            for u in &gens {
                let (d1, d2) = insert_pair(t, u, n).unwrap();
                assert!(is_standard_pair(&d1, &d2, n), "{t:?} {u:?}");
                let lhs = Tableau::of_word(&[t.letters(), u.letters()].concat(), n).unwrap();
                let rhs = Tableau::of_word(&[d1.letters(), d2.letters()].concat(), n).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn first_output_column_shrinks_on_redexes() {
    for n in 1..=4 {
        let n = rank(n);
        let gens = admissible_columns(n, false);
        for t in &gens {
            for u in &gens {
                if is_standard_pair(t, u, n) {
                    continue;
                }
                let (d1, d2) = insert_pair(t, u, n).unwrap();
                assert!(d1.len() < t.len(), "{t:?} {u:?} -> {d1:?} {d2:?}");
                assert!(d1.len() + d2.len() <= t.len() + u.len());
            }
        }
    }
}

#[test]
fn relations_preserve_tableaux() {
    let n = rank(3);
    let mut r = rng(7);
    let alphabet = n.alphabet();
    for _ in 0..3000 {
        let len = rand::Rng::gen_range(&mut r, 1..=6);
        let w = PlainWord(
            (0..len)
                .map(|_| alphabet[rand::Rng::gen_range(&mut r, 0..alphabet.len())])
                .collect(),
        );
        let before = Tableau::of_word(w.letters(), n).unwrap();
        for at in 0..w.len() {
            if let Some((_, out)) = apply_relation(&w, at, n).unwrap() {
                assert_eq!(Tableau::of_word(out.letters(), n).unwrap(), before, "{w:?} at {at}");
            }
        }
    }
}

#[test]
fn tableaux_are_valid() {
    let n = rank(3);
    let mut r = rng(11);
    for _ in 0..2000 {
        let w = random_word(&mut r, n, 4, true);
        let t = normal_form(&w, n).unwrap().tableau;
        assert_eq!(Tableau::new(t.columns().to_vec(), n).unwrap(), t);
    }
}

#[test]
fn highest_weight_normal_forms_are_prefix_products() {
    let n = rank(3);
    let mut r = rng(5);
    for _ in 0..500 {
        let w = crystal::highest_weight(&random_word(&mut r, n, 3, true), n);
        let nf = normal_form(&w, n).unwrap().to_word();
        let lens: Vec<usize> = nf.columns().iter().map(Column::len).collect();
        assert!(lens.windows(2).all(|p| p[0] <= p[1]), "{nf:?}");
        for c in nf.columns() {
            assert_eq!(c, &prefix(c.len()));
        }
    }
}

#[test]
fn product_examples() {
    let n = rank(3);
    let t = Tableau::new(vec![Column::from_signed(&[2, 3])], n).unwrap();
    let p = t
        .product(&Tableau::from_letter(placticc::Letter::unbarred(2), n).unwrap())
        .unwrap();
    assert_eq!(p.columns(), &[Column::from_signed(&[2]), Column::from_signed(&[2, 3])]);
    let a = normal_form(&dw(&[&[1, 2]]), n).unwrap();
    let b = normal_form(&dw(&[&[1]]), n).unwrap();
    assert_eq!(
        decorated_product(&a, &b).unwrap(),
        normal_form(&dw(&[&[1, 2], &[1]]), n).unwrap()
    );
}

fn word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = DecoratedWord> {
    let gens = admissible_columns(rank(n), true);
    proptest::collection::vec(0..gens.len(), 0..=max_len)
        .prop_map(move |idx| DecoratedWord::new(idx.into_iter().map(|i| gens[i].clone()).collect(), rank(n)).unwrap())
}

proptest! {
    #[test]
    fn normal_form_is_a_homomorphism(u in word_strategy(3, 4), v in word_strategy(3, 4)) {
        let n = rank(3);
        let mut cols = u.columns().to_vec();
        cols.extend(v.columns().iter().cloned());
        let uv = DecoratedWord::new(cols, n).unwrap();
        let lhs = normal_form(&uv, n).unwrap();
        let rhs = decorated_product(&normal_form(&u, n).unwrap(), &normal_form(&v, n).unwrap()).unwrap();
        prop_assert_eq!(lhs.len(), uv.len());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_commutes_with_crystal(w in word_strategy(2, 5), i in 1usize..=2, raise in any::<bool>()) {
        let n = rank(2);
        let op = if raise { CrystalOp::E } else { CrystalOp::F };
        if let Some(moved) = crystal::apply(&w, op, i, n).unwrap() {
            let nf = normal_form(&w, n).unwrap().to_word();
            let expected = crystal::apply(&nf, op, i, n).unwrap();
            prop_assert_eq!(Some(normal_form(&moved, n).unwrap().to_word()), expected);
        }
    }
}
