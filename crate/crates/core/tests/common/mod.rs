#![allow(dead_code)]

use linbialg::scalar::rational::{int, rat};
use linbialg::scalar::{Neutro, Rational};
use linbialg::{Bimatrix, Matrix};
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        3 => (-4i64..=4).prop_map(int),
        1 => ((-6i64..=6), (1i64..=4)).prop_map(|(a, b)| rat(a, b)),
    ]
}

pub fn rational_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec(small_rational(), rows * cols)
        .prop_map(move |v| Matrix::from_vec(rows, cols, v).unwrap())
}

pub fn square_rational(max: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max).prop_flat_map(|n| rational_matrix(n, n))
}

pub fn square_bimatrix(max: usize) -> impl Strategy<Value = Bimatrix<Rational>> {
    (square_rational(max), square_rational(max)).prop_map(|(a, b)| Bimatrix::new(a, b))
}

pub fn gf_matrix(p: u64, rows: usize, cols: usize) -> impl Strategy<Value = Matrix<u64>> {
    proptest::collection::vec(0..p, rows * cols).prop_map(move |v| Matrix::from_vec(rows, cols, v).unwrap())
}

pub fn neutro() -> impl Strategy<Value = Neutro> {
    (small_rational(), small_rational()).prop_map(|(a, b)| Neutro::new(a, b))
}

pub fn neutro_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Neutro>> {
    proptest::collection::vec(neutro(), rows * cols).prop_map(move |v| Matrix::from_vec(rows, cols, v).unwrap())
}

pub fn square_neutro(max: usize) -> impl Strategy<Value = Matrix<Neutro>> {
    (1..=max).prop_flat_map(|n| neutro_matrix(n, n))
}

/// Column-stochastic `n × n` matrix with some zero entries.
pub fn stochastic(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec(0i64..=4, n * n).prop_map(move |w| {
        let mut m = Matrix::from_fn(n, n, |i, j| int(w[i * n + j]));
        for j in 0..n {
            let mut total: i64 = (0..n).map(|i| w[i * n + j]).sum();
            if total == 0 {
                m[(j, j)] = int(1);
                total = 1;
            }
            for i in 0..n {
                m[(i, j)] = &m[(i, j)] / int(total);
            }
        }
        m
    })
}

/// Probability vector of length `n`.
pub fn distribution(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(0i64..=5, n).prop_map(|w| {
        let total: i64 = w.iter().sum();
        if total == 0 {
            let mut v = vec![int(0); w.len()];
            v[0] = int(1);
            return v;
        }
        w.iter().map(|&x| rat(x, total)).collect()
    })
}
