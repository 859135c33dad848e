//! Characteristic bivalues and bivectors, and bidiagonalization.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Polynomial, RootFinding};

use super::Bimatrix;

/// One eigenvalue of one component with a basis of its eigenspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenspace<T> {
    pub value: T,
    /// Algebraic multiplicity.
    pub multiplicity: usize,
    pub vectors: Vec<Vec<T>>,
}

/// Eigen data of one component. `rootless` is the monic factor of the
/// characteristic polynomial with no roots in the base field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentEigen<T> {
    pub char_poly: Polynomial<T>,
    pub spaces: Vec<Eigenspace<T>>,
    pub rootless: Polynomial<T>,
}

impl<T: Clone + PartialEq> ComponentEigen<T> {
    pub fn has_roots(&self) -> bool {
        !self.spaces.is_empty()
    }

    pub fn splits(&self) -> bool {
        self.rootless.degree().unwrap_or(0) == 0
    }

    /// Eigenvalues repeated by multiplicity, ascending.
    pub fn values(&self) -> Vec<T> {
        self.spaces
            .iter()
            .flat_map(|s| std::iter::repeat_n(s.value.clone(), s.multiplicity))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BivalueClass {
    /// Both components have eigenvalues in the base field.
    Full,
    /// Exactly one component has eigenvalues; `rootless` is the other (0 or 1).
    Semi { rootless: usize },
    /// Neither component has eigenvalues.
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenBipair<T> {
    pub bivalue: (T, T),
    pub bivectors: (Vec<Vec<T>>, Vec<Vec<T>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenBivalues<T> {
    pub first: ComponentEigen<T>,
    pub second: ComponentEigen<T>,
    pub class: BivalueClass,
}

impl<T: Clone + PartialEq> EigenBivalues<T> {
    pub fn component(&self, i: usize) -> &ComponentEigen<T> {
        if i == 0 {
            &self.first
        } else {
            &self.second
        }
    }

    /// Every pairing of a first-component eigenvalue with a second-component
    /// one. Empty unless the class is [`BivalueClass::Full`].
    pub fn bipairs(&self) -> Vec<EigenBipair<T>> {
        let mut out = Vec::new();
        for a in &self.first.spaces {
            for b in &self.second.spaces {
                out.push(EigenBipair {
                    bivalue: (a.value.clone(), b.value.clone()),
                    bivectors: (a.vectors.clone(), b.vectors.clone()),
                });
            }
        }
        out
    }
}

pub fn component_eigen<F: RootFinding>(field: &F, a: &Matrix<F::Elem>) -> Result<ComponentEigen<F::Elem>> {
    let char_poly = a.char_poly(field)?;
    let (roots, rootless) = field.roots(&char_poly);
    let spaces = roots
        .into_iter()
        .map(|(value, multiplicity)| {
            let vectors = a.shift(field, &value)?.nullspace(field);
            Ok(Eigenspace {
                value,
                multiplicity,
                vectors,
            })
        })
        .collect::<Result<_>>()?;
    Ok(ComponentEigen {
        char_poly,
        spaces,
        rootless,
    })
}

/// Eigenvalues found in the base field for each component, their eigenspaces,
/// and whether both, one or neither component has any.
pub fn eigen_bivalues<F: RootFinding>(field: &F, a: &Bimatrix<F::Elem>) -> Result<EigenBivalues<F::Elem>> {
    let first = component_eigen(field, &a.first)?;
    let second = component_eigen(field, &a.second)?;
    let class = match (first.has_roots(), second.has_roots()) {
        (true, true) => BivalueClass::Full,
        (false, true) => BivalueClass::Semi { rootless: 0 },
        (true, false) => BivalueClass::Semi { rootless: 1 },
        (false, false) => BivalueClass::None,
    };
    Ok(EigenBivalues { first, second, class })
}

/// `P` whose columns are eigenvectors (eigenvalues ascending) and diagonal `D`
/// with `A·P = P·D`.
pub fn diagonalize<F: RootFinding>(
    field: &F,
    a: &Matrix<F::Elem>,
    component: usize,
) -> Result<(Matrix<F::Elem>, Matrix<F::Elem>)> {
    let n = a.require_square()?;
    let eig = component_eigen(field, a)?;
    if !eig.splits() {
        return Err(Error::CharPolyDoesNotSplit {
            component: component + 1,
            factor: eig.rootless.render(field, "x"),
        });
    }
    let mut cols = Vec::with_capacity(n);
    let mut diag = Vec::with_capacity(n);
    for s in &eig.spaces {
        if s.vectors.len() < s.multiplicity {
            return Err(Error::NotBidiagonalizable {
                component: component + 1,
                eigenvalue: field.render(&s.value),
                found: s.vectors.len(),
                multiplicity: s.multiplicity,
            });
        }
        for v in &s.vectors {
            cols.push(v.clone());
            diag.push(s.value.clone());
        }
    }
    Ok((Matrix::from_columns(n, &cols)?, Matrix::diagonal(field, &diag)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bidiagonalization<T> {
    pub p: Bimatrix<T>,
    pub d: Bimatrix<T>,
}

pub fn bidiagonalize<F: RootFinding>(field: &F, a: &Bimatrix<F::Elem>) -> Result<Bidiagonalization<F::Elem>> {
    let (p1, d1) = diagonalize(field, &a.first, 0)?;
    let (p2, d2) = diagonalize(field, &a.second, 1)?;
    Ok(Bidiagonalization {
        p: Bimatrix::new(p1, p2),
        d: Bimatrix::new(d1, d2),
    })
}
