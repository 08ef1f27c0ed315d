//! Whole-tree properties of the transition layer against the polynomial
//! oracle.

use schubitope::perm::Permutation;
use schubitope::schubert::{all_schubert_polys, tableau_witness, transition_expand};
use schubitope::sweep::{compositions, symmetric_group};
use schubitope::tableau::enumerate_column_strict;
use schubitope::MultiPoly;

/// Iterating the transition identity to the leaves reproduces the whole
/// polynomial: `S_w = sum over leaves of x^delwt * S_leaf`.
#[test]
fn full_expansion_identity_s5() {
    let polys = all_schubert_polys(5).unwrap();
    for w in symmetric_group(5) {
        let code = w.code();
        let mut total = MultiPoly::zero(5);
        for (delwt, leaf) in transition_expand(&code).unwrap() {
            let term = polys[&leaf.to_permutation()].mul_monomial(&delwt);
            total = total.add(&term);
        }
        assert_eq!(total, polys[&w], "expansion identity fails at w = {w}");
    }
}

/// The witness extracted from the integral vertex is one of the two
/// column-strict fillings of that content.
#[test]
fn witness_is_an_enumerated_filling() {
    let w = Permutation::from_window(vec![3, 1, 5, 2, 4]).unwrap();
    let code = w.code();
    let alpha = [2, 1, 1];
    let witness = tableau_witness(&code, &alpha).unwrap().expect("nonzero");
    let padded = [2, 1, 1, 0, 0];
    let fillings = enumerate_column_strict(&w.rothe(), &padded).unwrap();
    assert_eq!(fillings.len(), 2);
    assert!(
        fillings.contains(&witness),
        "witness is not one of the enumerated column-strict fillings"
    );
}

/// Witness extraction across a sweep always yields perfect column-strict
/// fillings of the right content and shape.
#[test]
fn witnesses_verify_across_s5() {
    let mut produced = 0usize;
    for w in symmetric_group(5) {
        let code = w.code();
        if code.is_empty() {
            continue;
        }
        for alpha in compositions(code.weight(), code.len()) {
            match tableau_witness(&code, &alpha).unwrap() {
                Some(t) => {
                    produced += 1;
                    assert!(t.is_perfect() && t.is_column_strict());
                    assert_eq!(t.shape(), &code.to_permutation().rothe());
                    let n = t.shape().grid_size();
                    let padded: Vec<usize> =
                        (0..n).map(|i| alpha.get(i).copied().unwrap_or(0)).collect();
                    assert_eq!(t.content(n), padded);
                }
                None => continue,
            }
        }
    }
    assert!(produced > 300);
}
