//! Bimatrices `A = A₁ ∪ A₂`: ordered pairs of matrices over one scalar
//! structure, acted on componentwise.

pub mod bialgebra;
pub mod eigen;
pub mod jordan;

use serde::{Deserialize, Serialize};

use crate::error::{shape, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, Polynomial, PrimeField, Rationals, Ring};

pub use bialgebra::{identical_bidimension, same_bidimension, validate_linear_bialgebra, BialgebraClass, SpaceFamily};
pub use eigen::{bidiagonalize, eigen_bivalues, BivalueClass, ComponentEigen, EigenBipair, EigenBivalues, Eigenspace};
pub use jordan::{jordan_biform, rank_sequence, Convention, JordanBiform, JordanBlock};

/// Determinant and characteristic polynomial of square matrices. Implemented
/// for the fields by elimination and for the neutrosophic ring by splitting.
pub trait Determinant: Ring {
    fn det(&self, m: &Matrix<Self::Elem>) -> Result<Self::Elem>;

    /// Monic `det(x·Id - m)`.
    fn char_poly(&self, m: &Matrix<Self::Elem>) -> Result<Polynomial<Self::Elem>>;
}

impl Determinant for Rationals {
    fn det(&self, m: &Matrix<Self::Elem>) -> Result<Self::Elem> {
        m.det(self)
    }
    fn char_poly(&self, m: &Matrix<Self::Elem>) -> Result<Polynomial<Self::Elem>> {
        m.char_poly(self)
    }
}

impl Determinant for PrimeField {
    fn det(&self, m: &Matrix<Self::Elem>) -> Result<Self::Elem> {
        m.det(self)
    }
    fn char_poly(&self, m: &Matrix<Self::Elem>) -> Result<Polynomial<Self::Elem>> {
        m.char_poly(self)
    }
}

/// Shape class of a bimatrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BimatrixShape {
    /// Both components square of the same size.
    Square,
    /// Both square, different sizes.
    MixedSquare,
    /// Both components share one non-square shape.
    Rectangular,
    /// Anything else.
    MixedRectangular,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bimatrix<T> {
    pub first: Matrix<T>,
    pub second: Matrix<T>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bivector<T> {
    pub first: Vec<T>,
    pub second: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipolynomial<T> {
    pub first: Polynomial<T>,
    pub second: Polynomial<T>,
}

impl<T: Clone + PartialEq> Bivector<T> {
    pub fn new(first: Vec<T>, second: Vec<T>) -> Self {
        Self { first, second }
    }

    pub fn zeros<R: Ring<Elem = T>>(ring: &R, n1: usize, n2: usize) -> Self {
        Self::new(vec![ring.zero(); n1], vec![ring.zero(); n2])
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.first.len(), self.second.len())
    }

    pub fn component(&self, i: usize) -> &[T] {
        if i == 0 {
            &self.first
        } else {
            &self.second
        }
    }

    pub fn is_zero<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.first.iter().chain(&self.second).all(|x| ring.is_zero(x))
    }

    fn check_shape(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(shape(op, format!("{:?} vs {:?}", self.shape(), other.shape())));
        }
        Ok(())
    }

    pub fn add<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Result<Self> {
        self.check_shape(other, "bivector addition")?;
        let f = |a: &[T], b: &[T]| a.iter().zip(b).map(|(x, y)| ring.add(x, y)).collect();
        Ok(Self::new(f(&self.first, &other.first), f(&self.second, &other.second)))
    }

    pub fn sub<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Result<Self> {
        self.check_shape(other, "bivector subtraction")?;
        let f = |a: &[T], b: &[T]| a.iter().zip(b).map(|(x, y)| ring.sub(x, y)).collect();
        Ok(Self::new(f(&self.first, &other.first), f(&self.second, &other.second)))
    }

    /// Scales each component by its own scalar.
    pub fn scale<R: Ring<Elem = T>>(&self, ring: &R, c: (&T, &T)) -> Self {
        Self::new(
            self.first.iter().map(|x| ring.mul(x, c.0)).collect(),
            self.second.iter().map(|x| ring.mul(x, c.1)).collect(),
        )
    }
}

impl<T: Clone + PartialEq> Bipolynomial<T> {
    pub fn new(first: Polynomial<T>, second: Polynomial<T>) -> Self {
        Self { first, second }
    }

    pub fn degrees(&self) -> (Option<usize>, Option<usize>) {
        (self.first.degree(), self.second.degree())
    }

    pub fn render<R: Ring<Elem = T>>(&self, ring: &R) -> String {
        format!("{} ∪ {}", self.first.render(ring, "x"), self.second.render(ring, "x"))
    }
}

impl<T: Clone + PartialEq> Bimatrix<T> {
    pub fn new(first: Matrix<T>, second: Matrix<T>) -> Self {
        Self { first, second }
    }

    pub fn identity<R: Ring<Elem = T>>(ring: &R, n1: usize, n2: usize) -> Self {
        Self::new(Matrix::identity(ring, n1), Matrix::identity(ring, n2))
    }

    pub fn zeros<R: Ring<Elem = T>>(ring: &R, s1: (usize, usize), s2: (usize, usize)) -> Self {
        Self::new(Matrix::zeros(ring, s1.0, s1.1), Matrix::zeros(ring, s2.0, s2.1))
    }

    /// Zero bimatrix representing a bitransformation from a space of
    /// bidimension `(m, n)` into one of bidimension `(m1, n1)`: the block pair
    /// `(m1 × m) ∪ (n1 × n)`.
    pub fn for_bitransformation<R: Ring<Elem = T>>(
        ring: &R,
        domain: (usize, usize),
        codomain: (usize, usize),
    ) -> Self {
        Self::zeros(ring, (codomain.0, domain.0), (codomain.1, domain.1))
    }

    /// Number of independent entries: `m·m₁ + n·n₁` for a bitransformation.
    pub fn free_entries(&self) -> usize {
        self.first.rows() * self.first.cols() + self.second.rows() * self.second.cols()
    }

    pub fn shapes(&self) -> ((usize, usize), (usize, usize)) {
        (self.first.shape(), self.second.shape())
    }

    pub fn component(&self, i: usize) -> &Matrix<T> {
        if i == 0 {
            &self.first
        } else {
            &self.second
        }
    }

    pub fn classify(&self) -> BimatrixShape {
        let (a, b) = self.shapes();
        match (self.first.is_square(), self.second.is_square()) {
            (true, true) if a == b => BimatrixShape::Square,
            (true, true) => BimatrixShape::MixedSquare,
            _ if a == b => BimatrixShape::Rectangular,
            _ => BimatrixShape::MixedRectangular,
        }
    }

    pub fn is_zero<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.first.is_zero(ring) && self.second.is_zero(ring)
    }

    /// Applies the same fallible matrix operation to both components.
    pub fn try_map<U>(&self, mut f: impl FnMut(usize, &Matrix<T>) -> Result<Matrix<U>>) -> Result<Bimatrix<U>> {
        Ok(Bimatrix {
            first: f(0, &self.first)?,
            second: f(1, &self.second)?,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.first.transpose(), self.second.transpose())
    }

    pub fn add<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Result<Self> {
        Ok(Self::new(
            self.first.add(ring, &other.first)?,
            self.second.add(ring, &other.second)?,
        ))
    }

    pub fn sub<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Result<Self> {
        Ok(Self::new(
            self.first.sub(ring, &other.first)?,
            self.second.sub(ring, &other.second)?,
        ))
    }

    pub fn mul<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Result<Self> {
        Ok(Self::new(
            self.first.mul(ring, &other.first)?,
            self.second.mul(ring, &other.second)?,
        ))
    }

    pub fn scale<R: Ring<Elem = T>>(&self, ring: &R, c: &T) -> Self {
        Self::new(self.first.scale(ring, c), self.second.scale(ring, c))
    }

    /// `(A₁v₁, A₂v₂)`
    pub fn apply<R: Ring<Elem = T>>(&self, ring: &R, v: &Bivector<T>) -> Result<Bivector<T>> {
        Ok(Bivector::new(
            self.first.mul_vec(ring, &v.first)?,
            self.second.mul_vec(ring, &v.second)?,
        ))
    }

    pub fn pow<R: Ring<Elem = T>>(&self, ring: &R, e: usize) -> Result<Self> {
        Ok(Self::new(self.first.pow(ring, e)?, self.second.pow(ring, e)?))
    }

    /// `(A₁ - c₁·Id) ∪ (A₂ - c₂·Id)`
    pub fn shift<R: Ring<Elem = T>>(&self, ring: &R, c: (&T, &T)) -> Result<Self> {
        Ok(Self::new(self.first.shift(ring, c.0)?, self.second.shift(ring, c.1)?))
    }

    /// `p₁(A₁) ∪ p₂(A₂)`
    pub fn eval_bipoly<R: Ring<Elem = T>>(&self, ring: &R, p: &Bipolynomial<T>) -> Result<Self> {
        Ok(Self::new(
            self.first.eval_poly(ring, &p.first)?,
            self.second.eval_poly(ring, &p.second)?,
        ))
    }

    pub fn determinant<R: Determinant<Elem = T>>(&self, ring: &R) -> Result<(T, T)> {
        Ok((ring.det(&self.first)?, ring.det(&self.second)?))
    }

    /// `det(x·Id - A₁) ∪ det(x·Id - A₂)`, monic in each component.
    pub fn char_bipolynomial<R: Determinant<Elem = T>>(&self, ring: &R) -> Result<Bipolynomial<T>> {
        Ok(Bipolynomial::new(
            ring.char_poly(&self.first)?,
            ring.char_poly(&self.second)?,
        ))
    }

    pub fn minimal_bipolynomial<F: Field<Elem = T>>(&self, field: &F) -> Result<Bipolynomial<T>> {
        Ok(Bipolynomial::new(
            self.first.min_poly(field)?,
            self.second.min_poly(field)?,
        ))
    }

    pub fn ranks<F: Field<Elem = T>>(&self, field: &F) -> (usize, usize) {
        (self.first.rank(field), self.second.rank(field))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::int;
    use crate::scalar::Rational;

    pub(crate) fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    fn sample_bimatrix() -> Bimatrix<Rational> {
        Bimatrix::new(
            q(&[&[0, 1, 0], &[2, -2, 2], &[2, -3, 2]]),
            q(&[&[3, 1, -1], &[2, 2, -1], &[2, 2, 0]]),
        )
    }

    #[test]
    fn identity_is_neutral() {
        let f = Rationals;
        let a = sample_bimatrix();
        let id = Bimatrix::identity(&f, 3, 3);
        assert_eq!(id.mul(&f, &a).unwrap(), a);
        let b = Bimatrix::new(q(&[&[1, 2], &[3, 4]]), q(&[&[1]]));
        assert_eq!(b.scale(&f, &int(2)), Bimatrix::new(q(&[&[2, 4], &[6, 8]]), q(&[&[2]])));
    }

    #[test]
    fn apply_matches_known_transformation() {
        let f = Rationals;
        let m1 = q(&[&[1, 1, 0], &[1, 0, -1], &[1, 1, 1]]);
        let a = Bimatrix::new(m1, Matrix::identity(&f, 1));
        let v = Bivector::new(vec![int(5), int(7), int(11)], vec![int(1)]);
        let out = a.apply(&f, &v).unwrap();
        assert_eq!(out.first, vec![int(12), int(-6), int(23)]);
        let zero = Bimatrix::zeros(&f, (2, 3), (1, 1));
        assert!(zero.apply(&f, &v).unwrap().is_zero(&f));

        let a15 = Bimatrix::new(
            q(&[&[5, -6, -6], &[-1, 4, 2], &[3, -6, -4]]),
            q(&[&[-1, 0, 0], &[2, 1, 0], &[0, 1, 4]]),
        );
        let v = Bivector::new(vec![int(2), int(1), int(0)], vec![int(0), int(0), int(1)]);
        let out = a15.apply(&f, &v).unwrap();
        assert_eq!(out.first, vec![int(4), int(2), int(0)]);
        assert_eq!(out.second, vec![int(0), int(0), int(4)]);
    }

    #[test]
    fn shape_mismatch_reported() {
        let f = Rationals;
        let a = Bimatrix::new(q(&[&[1, 2]]), q(&[&[1]]));
        assert!(matches!(a.mul(&f, &a), Err(crate::Error::ShapeMismatch { .. })));
        let v = Bivector::new(vec![int(1)], vec![int(1)]);
        assert!(a.apply(&f, &v).is_err());
    }

    #[test]
    fn classification_flags() {
        let f = Rationals;
        assert_eq!(Bimatrix::identity(&f, 3, 3).classify(), BimatrixShape::Square);
        assert_eq!(Bimatrix::identity(&f, 3, 4).classify(), BimatrixShape::MixedSquare);
        assert_eq!(Bimatrix::zeros(&f, (2, 3), (2, 3)).classify(), BimatrixShape::Rectangular);
        assert_eq!(Bimatrix::zeros(&f, (2, 3), (2, 2)).classify(), BimatrixShape::MixedRectangular);
    }

    #[test]
    fn dimension_law() {
        let f = Rationals;
        let t = Bimatrix::<Rational>::for_bitransformation(&f, (3, 5), (2, 4));
        assert_eq!(t.shapes(), ((2, 3), (4, 5)));
        assert_eq!(t.free_entries(), 3 * 2 + 5 * 4);
    }

    #[test]
    fn determinants_and_char_bipolynomial() {
        let f = Rationals;
        assert_eq!(Bimatrix::identity(&f, 2, 3).determinant(&f).unwrap(), (int(1), int(1)));
        let a = sample_bimatrix();
        let shifted = a.shift(&f, (&int(0), &int(2))).unwrap();
        assert_eq!(shifted.determinant(&f).unwrap(), (int(0), int(0)));
        let cp = a.char_bipolynomial(&f).unwrap();
        assert_eq!(cp.render(&f), "x^3 ∪ x^3 - 5x^2 + 8x - 4");
        assert!(a.eval_bipoly(&f, &cp).unwrap().is_zero(&f));

        let b = Bimatrix::new(q(&[&[0, -1], &[1, 0]]), q(&[&[1, -1], &[2, 2]]));
        assert_eq!(b.char_bipolynomial(&f).unwrap().render(&f), "x^2 + 1 ∪ x^2 - 3x + 4");
    }

    #[test]
    fn minimal_bipolynomials() {
        let f = Rationals;
        let id = Bimatrix::<Rational>::identity(&f, 2, 3);
        assert_eq!(id.minimal_bipolynomial(&f).unwrap().render(&f), "x - 1 ∪ x - 1");
        let d = Bimatrix::new(q(&[&[2, 0], &[0, 2]]), q(&[&[3, 0], &[0, 3]]));
        assert_eq!(d.minimal_bipolynomial(&f).unwrap().render(&f), "x - 2 ∪ x - 3");
        let a = Bimatrix::new(
            q(&[&[2, 0, 0], &[1, 2, 0], &[0, 0, -1]]),
            q(&[&[2, 0, 0, 0], &[1, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 1, 2]]),
        );
        let m = a.minimal_bipolynomial(&f).unwrap();
        // (x-2)^2 (x+1) = x^3 - 3x^2 + 4, and (x-2)^2
        assert_eq!(m.render(&f), "x^3 - 3x^2 + 4 ∪ x^2 - 4x + 4");
        // (x-2)(x+1) alone does not annihilate the first component
        let partial = Polynomial::new(&f, vec![int(-2), int(-1), int(1)]);
        assert!(!a.first.eval_poly(&f, &partial).unwrap().is_zero(&f));
    }
}
