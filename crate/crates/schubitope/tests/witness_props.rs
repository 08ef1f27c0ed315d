//! The counting-witness layer: enumerated transition paths and row-count
//! matrices must be exactly the pairs the verifier accepts, and their number
//! must reproduce the coefficient.

use schubitope::perm::{Code, Permutation};
use schubitope::schubert::{
    all_schubert_polys, count_coefficient_transition, transition_tree, verify_witness,
    EdgeLabel, TransitionNode, TransitionStep, WitnessPair,
};
use schubitope::sweep::{compositions, symmetric_group};
use schubitope::tableau::{enumerate_flagged_ssyt, row_count_matrix};

/// All root-to-leaf paths in normalized form: consecutive deletions in the
/// same row merge into one maximal run.
fn normalized_paths(root: &TransitionNode) -> Vec<(Vec<TransitionStep>, Code)> {
    let mut out = Vec::new();
    let mut steps = Vec::new();
    walk(root, &mut steps, &mut out);
    out
}

fn walk(
    node: &TransitionNode,
    steps: &mut Vec<TransitionStep>,
    out: &mut Vec<(Vec<TransitionStep>, Code)>,
) {
    if node.is_leaf() {
        out.push((steps.clone(), node.code.clone()));
        return;
    }
    for (label, child) in &node.children {
        match label {
            EdgeLabel::Deletion(r) => {
                let merged = matches!(steps.last(), Some(TransitionStep::Delete { row, .. }) if row == r);
                if merged {
                    if let Some(TransitionStep::Delete { count, .. }) = steps.last_mut() {
                        *count += 1;
                    }
                } else {
                    steps.push(TransitionStep::Delete { row: *r, count: 1 });
                }
                walk(child, steps, out);
                if let Some(TransitionStep::Delete { count, .. }) = steps.last_mut() {
                    *count -= 1;
                    if *count == 0 {
                        steps.pop();
                    }
                } else {
                    unreachable!("deletion frame lost");
                }
            }
            EdgeLabel::March(i) => {
                steps.push(TransitionStep::March(*i));
                walk(child, steps, out);
                steps.pop();
            }
        }
    }
}

#[test]
fn enumerated_pairs_are_verified_and_counted_s4() {
    let polys = all_schubert_polys(4).unwrap();
    for w in symmetric_group(4) {
        let code = w.code();
        let tree = transition_tree(&code).unwrap();
        let paths = normalized_paths(&tree);
        let l = code.len();
        // Path-length bound from the tree structure.
        for (steps, _) in &paths {
            assert!(steps.len() <= l * l, "path too long at w = {w}");
        }
        let alphas = if l == 0 {
            vec![vec![]]
        } else {
            compositions(code.weight(), l)
        };
        for alpha in alphas {
            let mut accepted = 0i64;
            for (steps, leaf) in &paths {
                let (shape, flag) = leaf.shape_and_flag().unwrap();
                let delwt = schubitope::schubert::deletion_weight(steps, l);
                if delwt.iter().zip(alpha.iter()).any(|(d, a)| d > a) {
                    continue;
                }
                let content: Vec<usize> =
                    alpha.iter().zip(delwt.iter()).map(|(a, d)| a - d).collect();
                for t in enumerate_flagged_ssyt(&shape, &flag, Some(&content)).unwrap() {
                    let pair = WitnessPair {
                        steps: steps.clone(),
                        matrix: row_count_matrix(&t, l.max(shape.len())),
                    };
                    assert!(
                        verify_witness(&pair, &code, &alpha),
                        "verifier rejects an enumerated pair at w = {w}, alpha = {alpha:?}"
                    );
                    accepted += 1;
                }
            }
            let counted = count_coefficient_transition(&code, &alpha).unwrap();
            assert_eq!(accepted, counted, "w = {w}, alpha = {alpha:?}");
            assert_eq!(counted, polys[&w].coefficient(&alpha));
        }
    }
}

#[test]
fn path_length_bound_s5() {
    for w in symmetric_group(5) {
        let code = w.code();
        let l = code.len();
        for (steps, _) in normalized_paths(&transition_tree(&code).unwrap()) {
            assert!(steps.len() <= l * l);
        }
    }
}

#[test]
fn verifier_rejects_tampered_pairs() {
    // Valid witness from the worked example.
    let code = Code::new(vec![4, 2, 5, 3]);
    let alpha = [4, 2, 5, 3];
    let matrix = vec![
        vec![4, 0, 0, 0],
        vec![0, 2, 1, 0],
        vec![0, 0, 2, 0],
        vec![0, 0, 0, 2],
    ];
    let good = WitnessPair {
        steps: vec![
            TransitionStep::Delete { row: 4, count: 1 },
            TransitionStep::Delete { row: 3, count: 2 },
        ],
        matrix: matrix.clone(),
    };
    assert!(verify_witness(&good, &code, &alpha));

    // Wrong deletion row.
    let bad = WitnessPair {
        steps: vec![
            TransitionStep::Delete { row: 3, count: 1 },
            TransitionStep::Delete { row: 3, count: 2 },
        ],
        matrix: matrix.clone(),
    };
    assert!(!verify_witness(&bad, &code, &alpha));

    // Non-maximal runs are rejected even when the moves exist.
    let split = WitnessPair {
        steps: vec![
            TransitionStep::Delete { row: 4, count: 1 },
            TransitionStep::Delete { row: 3, count: 1 },
            TransitionStep::Delete { row: 3, count: 1 },
        ],
        matrix: matrix.clone(),
    };
    assert!(!verify_witness(&split, &code, &alpha));

    // Overrunning the non-dominant boxes of the row.
    let overrun = WitnessPair {
        steps: vec![TransitionStep::Delete { row: 4, count: 5 }],
        matrix: matrix.clone(),
    };
    assert!(!verify_witness(&overrun, &code, &alpha));

    // A march at a non-pivot row.
    let non_pivot = WitnessPair {
        steps: vec![TransitionStep::March(3)],
        matrix: matrix.clone(),
    };
    assert!(!verify_witness(&non_pivot, &code, &alpha));

    // Deletion weight mismatch with alpha.
    assert!(!verify_witness(&good, &code, &[4, 2, 4, 4]));

    // Matrix with the wrong row sums.
    let mut bad_matrix = matrix;
    bad_matrix[0][0] = 3;
    let bad = WitnessPair {
        steps: good.steps.clone(),
        matrix: bad_matrix,
    };
    assert!(!verify_witness(&bad, &code, &alpha));
}

#[test]
fn overlong_strings_are_rejected() {
    let code = Code::new(vec![1, 2]);
    let steps = vec![TransitionStep::March(1); 5]; // 5 > L^2 = 4
    let pair = WitnessPair {
        steps,
        matrix: vec![vec![0; 2]; 2],
    };
    assert!(!verify_witness(&pair, &code, &[1, 2]));
}

#[test]
fn empty_string_on_vexillary_root() {
    // A vexillary permutation is its own leaf: the empty string plus a
    // tableau matrix is a complete witness.
    let code = Code::new(vec![0, 1, 2]);
    let (shape, flag) = code.shape_and_flag().unwrap();
    for alpha in compositions(3, 3) {
        let mut accepted = 0i64;
        for t in enumerate_flagged_ssyt(&shape, &flag, Some(&alpha)).unwrap() {
            let pair = WitnessPair {
                steps: vec![],
                matrix: row_count_matrix(&t, 3),
            };
            assert!(verify_witness(&pair, &code, &alpha));
            accepted += 1;
        }
        assert_eq!(
            accepted,
            count_coefficient_transition(&code, &alpha).unwrap()
        );
    }
    let w = code.to_permutation();
    assert_eq!(w, Permutation::from_window(vec![1, 3, 5, 2, 4]).unwrap());
}
