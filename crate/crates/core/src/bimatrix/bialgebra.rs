//! Classifying a pair of concrete spaces as a linear bialgebra, a semi linear
//! bialgebra, or only a bivector space, plus bidimension predicates.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A concrete vector space family over the base field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceFamily {
    /// `F^n` with the coordinatewise product.
    RowSpace(usize),
    /// `m × n` matrices; product-closed only when square.
    Matrices(usize, usize),
    /// Polynomials of degree at most `d`.
    BoundedPolys(usize),
    /// The full polynomial ring `F[x]`.
    Polynomials,
}

impl SpaceFamily {
    pub fn is_product_closed(&self) -> bool {
        match *self {
            Self::RowSpace(_) | Self::Polynomials => true,
            Self::Matrices(m, n) => m == n,
            Self::BoundedPolys(d) => d == 0,
        }
    }

    /// `None` for the infinite-dimensional polynomial ring.
    pub fn dimension(&self) -> Option<usize> {
        match *self {
            Self::RowSpace(n) => Some(n),
            Self::Matrices(m, n) => Some(m * n),
            Self::BoundedPolys(d) => Some(d + 1),
            Self::Polynomials => None,
        }
    }
}

/// Accepts `row:N`, `matrices:MxN`, `poly:D` and `poly`.
impl FromStr for SpaceFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::UnknownFamily(s.to_string());
        let t = s.trim();
        if t == "poly" {
            return Ok(Self::Polynomials);
        }
        let (kind, arg) = t.split_once(':').ok_or_else(bad)?;
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
        match kind.trim() {
            "row" => Ok(Self::RowSpace(num(arg)?)),
            "poly" => Ok(Self::BoundedPolys(num(arg)?)),
            "matrices" => {
                let (m, n) = arg.split_once('x').ok_or_else(bad)?;
                Ok(Self::Matrices(num(m)?, num(n)?))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for SpaceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::RowSpace(n) => write!(f, "row:{n}"),
            Self::Matrices(m, n) => write!(f, "matrices:{m}x{n}"),
            Self::BoundedPolys(d) => write!(f, "poly:{d}"),
            Self::Polynomials => write!(f, "poly"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BialgebraClass {
    LinearBialgebra,
    SemiLinearBialgebra,
    BivectorSpace,
}

impl fmt::Display for BialgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::LinearBialgebra => "linear bialgebra",
            Self::SemiLinearBialgebra => "semi linear bialgebra",
            Self::BivectorSpace => "bivector space",
        })
    }
}

pub fn validate_linear_bialgebra(first: SpaceFamily, second: SpaceFamily) -> BialgebraClass {
    match (first.is_product_closed(), second.is_product_closed()) {
        (true, true) => BialgebraClass::LinearBialgebra,
        (false, false) => BialgebraClass::BivectorSpace,
        _ => BialgebraClass::SemiLinearBialgebra,
    }
}

/// Bidimensions `(m, n)` and `(m', n')` are identical when equal as ordered
/// pairs.
pub fn identical_bidimension(a: (usize, usize), b: (usize, usize)) -> bool {
    a == b
}

/// Same total dimension `m + n`, whatever the split.
pub fn same_bidimension(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 + a.1 == b.0 + b.1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> SpaceFamily {
        s.parse().unwrap()
    }

    #[test]
    fn classification() {
        assert_eq!(
            validate_linear_bialgebra(fam("row:2"), fam("matrices:3x2")),
            BialgebraClass::SemiLinearBialgebra
        );
        assert_eq!(
            validate_linear_bialgebra(fam("matrices:4x4"), fam("poly")),
            BialgebraClass::LinearBialgebra
        );
        assert_eq!(
            validate_linear_bialgebra(fam("matrices:2x5"), fam("poly:5")),
            BialgebraClass::BivectorSpace
        );
        assert_eq!(
            validate_linear_bialgebra(fam("poly:0"), fam("row:1")),
            BialgebraClass::LinearBialgebra
        );
    }

    #[test]
    fn parsing() {
        for s in ["row:3", "matrices:2x3", "poly:4", "poly"] {
            assert_eq!(fam(s).to_string(), s);
        }
        assert_eq!(fam("matrices:2x3").dimension(), Some(6));
        assert_eq!(fam("poly").dimension(), None);
        assert!(matches!("tensor:3".parse::<SpaceFamily>(), Err(Error::UnknownFamily(_))));
        assert!(matches!("row:x".parse::<SpaceFamily>(), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn bidimensions() {
        // 2x2 matrices ∪ Q^3 against Q^2 ∪ polynomials of degree <= 4
        let v = (fam("matrices:2x2").dimension().unwrap(), 3);
        let u = (2, fam("poly:4").dimension().unwrap());
        assert!(same_bidimension(v, u));
        assert!(!identical_bidimension(v, u));
        assert!(identical_bidimension((4, 3), (4, 3)));
        assert!(!identical_bidimension((4, 3), (3, 4)));
    }
}
