//! Dense row-major matrices over a [`Ring`], with exact elimination over a
//! [`Field`].

use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{shape, Error, Result};
use crate::scalar::{Field, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Clone + PartialEq> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(shape(
                "matrix construction",
                format!("{} entries for a {rows}x{cols} matrix", data.len()),
            ));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(shape("matrix construction", "ragged rows"));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<T>]) -> Result<Self> {
        if cols.iter().any(|c| c.len() != rows) {
            return Err(shape("matrix construction", "column length mismatch"));
        }
        Ok(Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone()))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn zeros<R: Ring<Elem = T>>(ring: &R, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| ring.zero())
    }

    pub fn identity<R: Ring<Elem = T>>(ring: &R, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn diagonal<R: Ring<Elem = T>>(ring: &R, diag: &[T]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| if i == j { diag[i].clone() } else { ring.zero() })
    }

    pub fn is_zero<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.data.iter().all(|x| ring.is_zero(x))
    }

    fn same_shape(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(shape(
                op,
                format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols),
            ));
        }
        Ok(())
    }

    pub fn add<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Result<Self> {
        self.same_shape(other, "matrix addition")?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| ring.add(a, b)).collect(),
        })
    }

    pub fn sub<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Result<Self> {
        self.same_shape(other, "matrix subtraction")?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| ring.sub(a, b)).collect(),
        })
    }

    pub fn scale<R: Ring<Elem = T>>(&self, ring: &R, c: &T) -> Self {
        self.map(|x| ring.mul(c, x))
    }

    pub fn mul<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(shape(
                "matrix product",
                format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols),
            ));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(ring.zero(), |acc, k| {
                ring.add(&acc, &ring.mul(&self[(i, k)], &other[(k, j)]))
            })
        }))
    }

    pub fn mul_vec<R: Ring<Elem = T>>(&self, ring: &R, v: &[T]) -> Result<Vec<T>> {
        if self.cols != v.len() {
            return Err(shape(
                "matrix-vector product",
                format!("{}x{} times length {}", self.rows, self.cols, v.len()),
            ));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)))
            })
            .collect())
    }

    /// `v^T M` for a row vector `v`.
    pub fn vec_mul<R: Ring<Elem = T>>(&self, ring: &R, v: &[T]) -> Result<Vec<T>> {
        self.transpose().mul_vec(ring, v)
    }

    pub fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    pub fn pow<R: Ring<Elem = T>>(&self, ring: &R, e: usize) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::identity(ring, n);
        for _ in 0..e {
            acc = acc.mul(ring, self)?;
        }
        Ok(acc)
    }

    /// `A - c·Id`
    pub fn shift<R: Ring<Elem = T>>(&self, ring: &R, c: &T) -> Result<Self> {
        let n = self.require_square()?;
        let mut out = self.clone();
        for i in 0..n {
            out[(i, i)] = ring.sub(&out[(i, i)], c);
        }
        Ok(out)
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_poly<R: Ring<Elem = T>>(&self, ring: &R, p: &Polynomial<T>) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::zeros(ring, n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(ring, self)?;
            for i in 0..n {
                acc[(i, i)] = ring.add(&acc[(i, i)], c);
            }
        }
        Ok(acc)
    }

    pub fn block_diagonal<R: Ring<Elem = T>>(ring: &R, blocks: &[Self]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(ring, n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

/// Reduced row echelon form together with the pivot columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Echelon<T> {
    pub reduced: Matrix<T>,
    pub pivots: Vec<usize>,
}

impl<T: Clone + PartialEq> Matrix<T> {
    /// Determinant by Bareiss fraction-free elimination.
    pub fn det<F: Field<Elem = T>>(&self, field: &F) -> Result<T> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(field.one());
        }
        let mut m = self.clone();
        let mut prev = field.one();
        let mut negate = false;
        for k in 0..n - 1 {
            if field.is_zero(&m[(k, k)]) {
                let Some(p) = (k + 1..n).find(|&i| !field.is_zero(&m[(i, k)])) else {
                    return Ok(field.zero());
                };
                m.swap_rows(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = field.sub(
                        &field.mul(&m[(i, j)], &m[(k, k)]),
                        &field.mul(&m[(i, k)], &m[(k, j)]),
                    );
                    m[(i, j)] = field.div(&num, &prev);
                }
                m[(i, k)] = field.zero();
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        Ok(if negate { field.neg(&d) } else { d })
    }

    pub fn echelon<F: Field<Elem = T>>(&self, field: &F) -> Echelon<T> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !field.is_zero(&m[(i, c)])) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = field.inverse(&m[(r, c)]).expect("nonzero pivot");
            for j in 0..m.cols {
                m[(r, j)] = field.mul(&m[(r, j)], &inv);
            }
            for i in 0..m.rows {
                if i == r || field.is_zero(&m[(i, c)]) {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in 0..m.cols {
                    let v = field.sub(&m[(i, j)], &field.mul(&f, &m[(r, j)]));
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank<F: Field<Elem = T>>(&self, field: &F) -> usize {
        self.echelon(field).pivots.len()
    }

    /// Basis of `{x : A x = 0}`: one vector per free column, with that free
    /// variable set to one and the other free variables zero, in column order.
    /// Each vector is passed through [`Field::normalize`].
    pub fn nullspace<F: Field<Elem = T>>(&self, field: &F) -> Vec<Vec<T>> {
        let Echelon { reduced, pivots } = self.echelon(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![field.zero(); self.cols];
                v[f] = field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = field.neg(&reduced[(r, f)]);
                }
                field.normalize(&mut v);
                v
            })
            .collect()
    }

    pub fn inverse<F: Field<Elem = T>>(&self, field: &F) -> Result<Option<Self>> {
        let n = self.require_square()?;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                field.one()
            } else {
                field.zero()
            }
        });
        let e = aug.echelon(field);
        if e.pivots.len() < n || e.pivots[n - 1] >= n {
            return Ok(None);
        }
        Ok(Some(Self::from_fn(n, n, |i, j| e.reduced[(i, n + j)].clone())))
    }

    /// Unique solution of `A x = b` for square invertible `A`.
    pub fn solve<F: Field<Elem = T>>(&self, field: &F, b: &[T]) -> Result<Vec<T>> {
        let n = self.require_square()?;
        if b.len() != n {
            return Err(shape("linear solve", format!("{n}x{n} system with rhs of length {}", b.len())));
        }
        match self.inverse(field)? {
            Some(inv) => inv.mul_vec(field, b),
            None => Err(Error::SingularSystem {
                rank: self.rank(field),
                size: n,
            }),
        }
    }

    /// Monic `det(x·Id - A)` by similarity reduction to upper Hessenberg form.
    pub fn char_poly<F: Field<Elem = T>>(&self, field: &F) -> Result<Polynomial<T>> {
        let n = self.require_square()?;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !field.is_zero(&h[(i, m - 1)])) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let inv = field.inverse(&h[(m, m - 1)]).expect("nonzero pivot");
            for j in m + 1..n {
                let u = field.mul(&h[(j, m - 1)], &inv);
                if field.is_zero(&u) {
                    continue;
                }
                for c in 0..n {
                    let v = field.sub(&h[(j, c)], &field.mul(&u, &h[(m, c)]));
                    h[(j, c)] = v;
                }
                for r in 0..n {
                    let v = field.add(&h[(r, m)], &field.mul(&u, &h[(r, j)]));
                    h[(r, m)] = v;
                }
            }
        }
        // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod_{j=m-i+1..m} h_{j,j-1}) p_{m-i-1}
        let mut ps: Vec<Polynomial<T>> = vec![Polynomial::constant(field, field.one())];
        for m in 1..=n {
            let hm = |i: usize, j: usize| h[(i - 1, j - 1)].clone();
            let mut p = Polynomial::linear_root(field, &hm(m, m)).mul(field, &ps[m - 1]);
            let mut t = field.one();
            for i in 1..m {
                t = field.mul(&t, &hm(m - i + 1, m - i));
                let coef = field.mul(&hm(m - i, m), &t);
                p = p.sub(field, &ps[m - i - 1].scale(field, &coef));
            }
            ps.push(p);
        }
        Ok(ps.pop().expect("p_n"))
    }

    /// Monic minimal polynomial: first linear dependence among `Id, A, A², …`.
    pub fn min_poly<F: Field<Elem = T>>(&self, field: &F) -> Result<Polynomial<T>> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Polynomial::constant(field, field.one()));
        }
        let mut powers: Vec<Vec<T>> = vec![Self::identity(field, n).data];
        let mut cur = Self::identity(field, n);
        for d in 1..=n {
            cur = cur.mul(field, self)?;
            // Solve sum_{k<d} c_k A^k = -A^d; columns are flattened powers.
            let cols: Vec<Vec<T>> = powers.clone();
            let sys = Matrix::from_fn(n * n, d + 1, |i, j| {
                if j < d {
                    cols[j][i].clone()
                } else {
                    cur.data[i].clone()
                }
            });
            let e = sys.echelon(field);
            if e.pivots.last() != Some(&d) {
                // Last column is dependent on the earlier ones.
                let mut coeffs = vec![field.zero(); d + 1];
                for (r, &p) in e.pivots.iter().enumerate() {
                    coeffs[p] = field.neg(&e.reduced[(r, d)]);
                }
                coeffs[d] = field.one();
                return Ok(Polynomial::new(field, coeffs));
            }
            powers.push(cur.data.clone());
        }
        unreachable!("Cayley-Hamilton bounds the minimal polynomial degree by n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::int;
    use crate::scalar::{PrimeField, Rational, Rationals};

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn det_small() {
        let f = Rationals;
        assert_eq!(q(&[&[1, 2], &[3, 4]]).det(&f).unwrap(), int(-2));
        assert_eq!(q(&[&[0, 1], &[1, 0]]).det(&f).unwrap(), int(-1));
        assert_eq!(q(&[&[1, 2], &[2, 4]]).det(&f).unwrap(), int(0));
        assert_eq!(Matrix::<Rational>::identity(&f, 4).det(&f).unwrap(), int(1));
        assert!(matches!(q(&[&[1, 2]]).det(&f), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn charpoly_known_values() {
        let f = Rationals;
        let a2 = q(&[&[3, 1, -1], &[2, 2, -1], &[2, 2, 0]]);
        let p = a2.char_poly(&f).unwrap();
        assert_eq!(p.coeffs(), &[int(-4), int(8), int(-5), int(1)]);
    }

    #[test]
    fn minpoly_of_scalar_matrix() {
        let f = Rationals;
        let a = Matrix::diagonal(&f, &[int(2), int(2)]);
        assert_eq!(a.min_poly(&f).unwrap().coeffs(), &[int(-2), int(1)]);
    }

    #[test]
    fn nullspace_gf2() {
        let f = PrimeField::new(2).unwrap();
        let h = Matrix::from_rows(vec![vec![1u64, 1, 1, 1]]).unwrap();
        let ns = h.nullspace(&f);
        assert_eq!(ns.len(), 3);
        for v in ns {
            assert_eq!(h.mul_vec(&f, &v).unwrap(), vec![0]);
        }
    }

    #[test]
    fn inverse_and_solve() {
        let f = Rationals;
        let a = q(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse(&f).unwrap().unwrap();
        assert_eq!(a.mul(&f, &inv).unwrap(), Matrix::identity(&f, 2));
        assert_eq!(a.solve(&f, &[int(3), int(2)]).unwrap(), vec![int(1), int(1)]);
        let s = q(&[&[1, 1], &[1, 1]]);
        assert_eq!(s.inverse(&f).unwrap(), None);
        assert_eq!(
            s.solve(&f, &[int(1), int(1)]),
            Err(Error::SingularSystem { rank: 1, size: 2 })
        );
    }
}
