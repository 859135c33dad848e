//! Matrices over Q(I) and fuzzy-neutrosophic max-min composition.
//!
//! Determinants, characteristic polynomials and eigenvalues go through the
//! split `a + bI ↦ (a, a + b)`: a neutrosophic matrix is a pair of rational
//! matrices, and everything is computed on each half and recombined.

use std::collections::BTreeMap;

use crate::bimatrix::Determinant;
use crate::error::{shape, Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{FuzzyValue, Neutro, Neutrosophic, Polynomial, Rational, Rationals, RootFinding};

/// Images of `m` under `I ↦ 0` and `I ↦ 1`.
pub fn split_matrix(m: &Matrix<Neutro>) -> (Matrix<Rational>, Matrix<Rational>) {
    (m.map(|x| x.split().0), m.map(|x| x.split().1))
}

pub fn unsplit_matrix(a0: &Matrix<Rational>, a1: &Matrix<Rational>) -> Result<Matrix<Neutro>> {
    if a0.shape() != a1.shape() {
        return Err(shape("unsplit", format!("{:?} vs {:?}", a0.shape(), a1.shape())));
    }
    let (r, c) = a0.shape();
    Ok(Matrix::from_fn(r, c, |i, j| Neutro::unsplit(a0[(i, j)].clone(), a1[(i, j)].clone())))
}

fn unsplit_poly(p0: &Polynomial<Rational>, p1: &Polynomial<Rational>) -> Polynomial<Neutro> {
    let f = Rationals;
    let n = p0.coeffs().len().max(p1.coeffs().len());
    let coeffs = (0..n).map(|k| Neutro::unsplit(p0.coeff(&f, k), p1.coeff(&f, k))).collect();
    Polynomial::new(&Neutrosophic, coeffs)
}

impl Determinant for Neutrosophic {
    fn det(&self, m: &Matrix<Neutro>) -> Result<Neutro> {
        let (a0, a1) = split_matrix(m);
        Ok(Neutro::unsplit(a0.det(&Rationals)?, a1.det(&Rationals)?))
    }

    fn char_poly(&self, m: &Matrix<Neutro>) -> Result<Polynomial<Neutro>> {
        let (a0, a1) = split_matrix(m);
        Ok(unsplit_poly(&a0.char_poly(&Rationals)?, &a1.char_poly(&Rationals)?))
    }
}

pub fn neutro_matmul(a: &Matrix<Neutro>, b: &Matrix<Neutro>) -> Result<Matrix<Neutro>> {
    a.mul(&Neutrosophic, b)
}

pub fn neutro_det(a: &Matrix<Neutro>) -> Result<Neutro> {
    Neutrosophic.det(a)
}

/// `det(A - x·Id)`, leading coefficient `(-1)^n`.
pub fn neutro_char_poly(a: &Matrix<Neutro>) -> Result<Polynomial<Neutro>> {
    let n = a.require_square()?;
    let monic = Neutrosophic.char_poly(a)?;
    Ok(if n % 2 == 1 { monic.neg(&Neutrosophic) } else { monic })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NeutroEigenvalue {
    pub value: Neutro,
    /// Pairs split roots the way a factorization over Q(I) would: equal roots
    /// together, the rest in sorted order.
    pub classical: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeutroSpectrum {
    /// Every recombination `r⁰ + (r¹ - r⁰)I`, ordered by `(r⁰, r¹)`.
    pub values: Vec<NeutroEigenvalue>,
    /// Split indices (0 for `I ↦ 0`, 1 for `I ↦ 1`) whose characteristic
    /// polynomial has no rational root.
    pub rootless_splits: Vec<usize>,
}

impl NeutroSpectrum {
    pub fn classical(&self) -> impl Iterator<Item = &Neutro> {
        self.values.iter().filter(|e| e.classical).map(|e| &e.value)
    }

    /// The values, or `NoRationalRoots` naming the first rootless split.
    pub fn nonempty(&self) -> Result<&[NeutroEigenvalue]> {
        match self.rootless_splits.first() {
            Some(&s) => Err(Error::NoRationalRoots(s)),
            None => Ok(&self.values),
        }
    }
}

fn rational_roots(a: &Matrix<Rational>) -> Result<Vec<(Rational, usize)>> {
    let f = Rationals;
    Ok(f.roots(&a.char_poly(&f)?).0)
}

pub fn neutro_eigenvalues(a: &Matrix<Neutro>) -> Result<NeutroSpectrum> {
    a.require_square()?;
    let (a0, a1) = split_matrix(a);
    let r0 = rational_roots(&a0)?;
    let r1 = rational_roots(&a1)?;
    let rootless_splits: Vec<usize> = [&r0, &r1]
        .iter()
        .enumerate()
        .filter(|(_, r)| r.is_empty())
        .map(|(i, _)| i)
        .collect();

    // Classical pairing on the multisets of roots.
    let mut left: BTreeMap<Rational, usize> = r0.iter().cloned().collect();
    let mut right: BTreeMap<Rational, usize> = r1.iter().cloned().collect();
    let mut classical = Vec::new();
    for (v, m) in left.iter_mut() {
        if let Some(m1) = right.get_mut(v) {
            let k = (*m).min(*m1);
            *m -= k;
            *m1 -= k;
            if k > 0 {
                classical.push((v.clone(), v.clone()));
            }
        }
    }
    let expand = |m: &BTreeMap<Rational, usize>| -> Vec<Rational> {
        m.iter().flat_map(|(v, &k)| std::iter::repeat_n(v.clone(), k)).collect()
    };
    classical.extend(expand(&left).into_iter().zip(expand(&right)));

    let mut values = Vec::new();
    for (u, _) in &r0 {
        for (v, _) in &r1 {
            let is_classical = classical.iter().any(|(x, y)| x == u && y == v);
            values.push(NeutroEigenvalue {
                value: Neutro::unsplit(u.clone(), v.clone()),
                classical: is_classical,
            });
        }
    }
    Ok(NeutroSpectrum {
        values,
        rootless_splits,
    })
}

/// Max-min composition `r_ij = max_k min(p_ik, q_kj)`.
pub fn fuzzy_compose(p: &Matrix<FuzzyValue>, q: &Matrix<FuzzyValue>) -> Result<Matrix<FuzzyValue>> {
    if p.cols() != q.rows() {
        return Err(shape("fuzzy compose", format!("{:?} ∘ {:?}", p.shape(), q.shape())));
    }
    let mut out = Vec::with_capacity(p.rows() * q.cols());
    for i in 0..p.rows() {
        for j in 0..q.cols() {
            let mut acc = FuzzyValue::ZERO;
            for k in 0..p.cols() {
                acc = acc.fuzzy_max(p[(i, k)].fuzzy_min(q[(k, j)])?)?;
            }
            out.push(acc);
        }
    }
    Matrix::from_vec(p.rows(), q.cols(), out)
}
