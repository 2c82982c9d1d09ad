#![allow(clippy::needless_range_loop)]

mod common;

use common::descartes_inertia;
use plumbsig::exact::{forest_inertia, inertia, Inertia, RatMatrix};
use proptest::prelude::*;

fn symmetric(n: usize, entries: &[i64]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            m[i][j] = entries[k];
            m[j][i] = entries[k];
            k += 1;
        }
    }
    m
}

fn sym_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(prop_oneof![3 => -4i64..=4, 1 => Just(0i64)], n * (n + 1) / 2)
            .prop_map(move |e| symmetric(n, &e))
    })
}

fn as_triple(i: Inertia) -> (usize, usize, usize) {
    (i.n_plus, i.n_zero, i.n_minus)
}

/// Random forest as a parent array: vertex `i > 0` hangs off a smaller index
/// or starts a new component.
fn forest() -> impl Strategy<Value = (Vec<i64>, Vec<(usize, usize)>)> {
    (1usize..=12).prop_flat_map(|n| {
        (prop::collection::vec(-3i64..=3, n), prop::collection::vec(any::<prop::sample::Index>(), n)).prop_map(
            move |(w, idx)| {
                let edges = (1..n)
                    .filter_map(|i| {
                        let k = idx[i].index(i + 1);
                        (k < i).then_some((k, i))
                    })
                    .collect();
                (w, edges)
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn congruence_matches_descartes(m in sym_matrix()) {
        let i = inertia(&RatMatrix::from_int_rows(&m)).unwrap();
        prop_assert_eq!(as_triple(i), descartes_inertia(&m));
    }

    #[test]
    fn inertia_is_a_congruence_invariant(m in sym_matrix(), ops in prop::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>(), -2i64..=2), 0..6)) {
        // P is a product of elementary unimodular matrices I + t E_ij.
        let n = m.len();
        let mut p: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (a, b, t) in ops {
            let (i, j) = (a.index(n), b.index(n));
            if i != j {
                for row in p.iter_mut() {
                    row[j] += t * row[i];
                }
            }
        }
        let a = RatMatrix::from_int_rows(&m);
        let pm = RatMatrix::from_int_rows(&p);
        let congruent = pm.transpose().mul(&a).unwrap().mul(&pm).unwrap();
        prop_assert_eq!(inertia(&congruent).unwrap(), inertia(&a).unwrap());
    }

    #[test]
    fn forest_elimination_matches_dense((w, edges) in forest()) {
        let n = w.len();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = w[i];
        }
        for &(a, b) in &edges {
            m[a][b] = 1;
            m[b][a] = 1;
        }
        let dense = inertia(&RatMatrix::from_int_rows(&m)).unwrap();
        prop_assert_eq!(forest_inertia(&w, &edges), dense);
        if n <= 6 {
            prop_assert_eq!(as_triple(dense), descartes_inertia(&m));
        }
    }
}

#[test]
fn descartes_oracle_sanity() {
    assert_eq!(descartes_inertia(&[vec![0, 2], vec![2, 0]]), (1, 0, 1));
    assert_eq!(descartes_inertia(&[vec![1, 1], vec![1, 1]]), (1, 1, 0));
    assert_eq!(descartes_inertia(&[vec![-3]]), (0, 0, 1));
    assert_eq!(descartes_inertia(&[vec![0, 0], vec![0, 0]]), (0, 2, 0));
}

#[test]
fn hyperbolic_block_without_diagonal() {
    let m = RatMatrix::from_int_rows(&[vec![0, 2], vec![2, 0]]);
    assert_eq!(as_triple(inertia(&m).unwrap()), (1, 0, 1));
    let asym = RatMatrix::from_int_rows(&[vec![0, 1], vec![2, 0]]);
    assert_eq!(inertia(&asym), Err(plumbsig::Error::NotSymmetric));
}
