//! Jordan biforms from rank sequences.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, RootFinding};

use super::eigen::component_eigen;
use super::Bimatrix;

/// Where the 1s of each Jordan block sit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Convention {
    #[default]
    SubDiagonal,
    SuperDiagonal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanBlock<T> {
    pub value: T,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanBiform<T> {
    pub form: Bimatrix<T>,
    pub first: Vec<JordanBlock<T>>,
    pub second: Vec<JordanBlock<T>>,
}

/// Block list rendering such as `J(3)_3, J(2)_2 ∪ J(4)_4`.
pub struct BlockReport<'a, T, F> {
    field: &'a F,
    form: &'a JordanBiform<T>,
}

impl<T: Clone + PartialEq> JordanBiform<T> {
    pub fn report<'a, F: Field<Elem = T>>(&'a self, field: &'a F) -> BlockReport<'a, T, F> {
        BlockReport { field, form: self }
    }
}

impl<T: Clone + PartialEq, F: Field<Elem = T>> fmt::Display for BlockReport<'_, T, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |blocks: &[JordanBlock<T>]| {
            blocks
                .iter()
                .map(|b| format!("J({})_{}", self.field.render(&b.value), b.size))
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(f, "{} ∪ {}", side(&self.form.first), side(&self.form.second))
    }
}

/// `[n, rank(N), rank(N²), …]` for `N = A - λ·Id`, stopping once it stabilizes.
pub fn rank_sequence<F: Field>(field: &F, a: &Matrix<F::Elem>, value: &F::Elem) -> Result<Vec<usize>> {
    let n = a.require_square()?;
    let shifted = a.shift(field, value)?;
    let mut seq = vec![n];
    let mut power = Matrix::identity(field, n);
    loop {
        power = power.mul(field, &shifted)?;
        let r = power.rank(field);
        let stable = r == *seq.last().expect("nonempty");
        seq.push(r);
        if stable {
            return Ok(seq);
        }
    }
}

/// Block sizes at `value`, largest first. The number of blocks of size at
/// least `k` is `r_{k-1} - r_k`.
fn block_sizes(seq: &[usize]) -> Vec<usize> {
    let at_least: Vec<usize> = seq.windows(2).map(|w| w[0] - w[1]).collect();
    let mut sizes = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exact = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        sizes.extend(std::iter::repeat_n(k, exact));
    }
    sizes
}

pub fn jordan_component<F: RootFinding>(
    field: &F,
    a: &Matrix<F::Elem>,
    component: usize,
    convention: Convention,
) -> Result<(Matrix<F::Elem>, Vec<JordanBlock<F::Elem>>)> {
    let n = a.require_square()?;
    let eig = component_eigen(field, a)?;
    if !eig.splits() {
        return Err(Error::CharPolyDoesNotSplit {
            component: component + 1,
            factor: eig.rootless.render(field, "x"),
        });
    }
    let mut blocks = Vec::new();
    // Descending eigenvalue order, then descending block size.
    for s in eig.spaces.iter().rev() {
        let seq = rank_sequence(field, a, &s.value)?;
        for size in block_sizes(&seq) {
            blocks.push(JordanBlock {
                value: s.value.clone(),
                size,
            });
        }
    }
    let mut j = Matrix::zeros(field, n, n);
    let mut at = 0;
    for b in &blocks {
        for k in 0..b.size {
            j[(at + k, at + k)] = b.value.clone();
            if k > 0 {
                match convention {
                    Convention::SubDiagonal => j[(at + k, at + k - 1)] = field.one(),
                    Convention::SuperDiagonal => j[(at + k - 1, at + k)] = field.one(),
                }
            }
        }
        at += b.size;
    }
    Ok((j, blocks))
}

pub fn jordan_biform<F: RootFinding>(
    field: &F,
    a: &Bimatrix<F::Elem>,
    convention: Convention,
) -> Result<JordanBiform<F::Elem>> {
    let (j1, b1) = jordan_component(field, &a.first, 0, convention)?;
    let (j2, b2) = jordan_component(field, &a.second, 1, convention)?;
    Ok(JordanBiform {
        form: Bimatrix::new(j1, j2),
        first: b1,
        second: b2,
    })
}
