//! Dense univariate polynomials over a ring.

use super::{Field, Ring};
use crate::error::{Error, Result};

/// Coefficient `i` multiplies `x^i`. The highest stored coefficient is
/// nonzero; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + PartialEq> Polynomial<T> {
    pub fn new<R: Ring<Elem = T>>(ring: &R, mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant<R: Ring<Elem = T>>(ring: &R, c: T) -> Self {
        Self::new(ring, vec![c])
    }

    /// `c * x^k`
    pub fn monomial<R: Ring<Elem = T>>(ring: &R, c: T, k: usize) -> Self {
        let mut coeffs = vec![ring.zero(); k];
        coeffs.push(c);
        Self::new(ring, coeffs)
    }

    /// `x - r`
    pub fn linear_root<R: Ring<Elem = T>>(ring: &R, r: &T) -> Self {
        Self::new(ring, vec![ring.neg(r), ring.one()])
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one<R: Ring<Elem = T>>(ring: &R, n: usize) -> Self {
        let mut coeffs = vec![ring.zero(); n + 1];
        coeffs[0] = ring.neg(&ring.one());
        coeffs[n] = ring.add(&coeffs[n], &ring.one());
        Self::new(ring, coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff<R: Ring<Elem = T>>(&self, ring: &R, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(|| ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn add<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| ring.add(&self.coeff(ring, i), &other.coeff(ring, i)))
            .collect();
        Self::new(ring, coeffs)
    }

    pub fn neg<R: Ring<Elem = T>>(&self, ring: &R) -> Self {
        Self::new(ring, self.coeffs.iter().map(|c| ring.neg(c)).collect())
    }

    pub fn sub<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Self {
        self.add(ring, &other.neg(ring))
    }

    pub fn scale<R: Ring<Elem = T>>(&self, ring: &R, c: &T) -> Self {
        Self::new(ring, self.coeffs.iter().map(|a| ring.mul(a, c)).collect())
    }

    pub fn mul<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = ring.add(&coeffs[i + j], &ring.mul(a, b));
            }
        }
        Self::new(ring, coeffs)
    }

    pub fn pow<R: Ring<Elem = T>>(&self, ring: &R, e: usize) -> Self {
        let mut acc = Self::constant(ring, ring.one());
        for _ in 0..e {
            acc = acc.mul(ring, self);
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval<R: Ring<Elem = T>>(&self, ring: &R, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
    }

    /// Quotient and remainder with `deg(rem) < deg(divisor)`.
    pub fn div_rem<F: Field<Elem = T>>(&self, field: &F, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZeroPolynomial);
        };
        let lead_inv = field
            .inverse(divisor.leading().expect("nonzero"))
            .expect("field leading coefficient is a unit");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![field.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = field.mul(&rem[k + dd], &lead_inv);
            if field.is_zero(&c) {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = field.sub(&rem[k + j], &field.mul(&c, d));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(field, quot), Self::new(field, rem)))
    }

    /// Whether `self` divides `f`.
    pub fn divides<F: Field<Elem = T>>(&self, field: &F, f: &Self) -> Result<bool> {
        Ok(f.div_rem(field, self)?.1.is_zero())
    }

    pub fn monic<F: Field<Elem = T>>(&self, field: &F) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = field.inverse(l).expect("nonzero leading coefficient");
                self.scale(field, &inv)
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd<F: Field<Elem = T>>(&self, field: &F, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(field, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// Human-readable rendering in the variable `var`, highest degree first.
    pub fn render<R: Ring<Elem = T>>(&self, ring: &R, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if ring.is_zero(c) {
                continue;
            }
            let mut s = ring.render(c);
            let compound = s.trim_start_matches('-').contains(['+', '-']);
            if compound && s.starts_with('-') {
                s = format!("-({})", ring.render(&ring.neg(c)));
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let wrapped = compound && !s.starts_with('-');
            let term = if k == 0 {
                if wrapped {
                    format!("({s})")
                } else {
                    s
                }
            } else if s == "1" {
                mono
            } else if s == "-1" {
                format!("-{mono}")
            } else if wrapped {
                format!("({s}){mono}")
            } else {
                format!("{s}{mono}")
            };
            terms.push(term);
        }
        let mut out = String::new();
        for (i, t) in terms.into_iter().enumerate() {
            if i == 0 {
                out.push_str(&t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        out
    }
}
