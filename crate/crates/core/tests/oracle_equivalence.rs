mod support;

use support::corpus;
use support::oracle::{bareiss_rank, monomials};

use num::BigInt;
use symcut::cutcalc::compute_cut_plus;
use symcut::dsl::{parse_scenario, BLOWUP_CP2, FLAG_U3};
use symcut::graded::realize;

#[test]
fn oracle_sanity() {
    let r = |rows: &[&[i64]]| -> usize {
        bareiss_rank(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect::<Vec<_>>(),
        )
    };
    assert_eq!(r(&[&[1, 2], &[2, 4]]), 1);
    assert_eq!(r(&[&[0, 1, 2], &[3, 4, 5], &[6, 7, 9]]), 3);
    assert_eq!(r(&[&[2, 4, 6], &[1, 2, 3], &[0, 0, 1]]), 2);
    assert_eq!(monomials(&[2, 2, 2], 4).len(), 6);
    assert_eq!(monomials(&[2, 4], 8).len(), 3);
}

#[test]
fn presented_algebras_match_oracle() {
    for e in corpus::all() {
        let a = realize(&e.presentation).unwrap();
        assert_eq!(a.dims(), e.oracle.dims(), "{}", e.name);
    }
}

#[test]
fn cut_rings_match_oracle() {
    for (text, oracle) in [
        (FLAG_U3, corpus::flag_cut_oracle()),
        (BLOWUP_CP2, corpus::blowup_cut_oracle()),
    ] {
        let r = compute_cut_plus(&parse_scenario(text).unwrap()).unwrap();
        assert_eq!(r.c.algebra.dims(), oracle.c);
        assert_eq!(r.delta_ideal.dims(), oracle.delta);
        assert_eq!(r.c_plus.algebra.dims(), oracle.c_plus);
        assert_eq!(Some(r.reduction.unwrap().c0.algebra.dims()), oracle.c0);
    }
}

#[test]
fn oracle_reproduces_documented_dimensions() {
    let f = corpus::flag_cut_oracle();
    assert_eq!(f.c, vec![1, 0, 3, 0, 4, 0, 2]);
    assert_eq!(f.c_plus, vec![1, 0, 3, 0, 3, 0, 1]);
    assert_eq!(f.c0, Some(vec![1, 0, 2, 0, 1, 0, 0]));
    let b = corpus::blowup_cut_oracle();
    assert_eq!(b.c_plus, vec![1, 0, 2, 0, 1]);
    assert_eq!(b.c0, Some(vec![1, 0, 1, 0, 0]));
}
