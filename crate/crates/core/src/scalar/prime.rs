//! The prime field Z_p.

use std::cmp::Ordering;

use super::{Field, Polynomial, Ring, RootFinding};
use crate::error::{parse_err, Error, Result};

/// Context for arithmetic modulo a prime. Elements are residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// All residues, in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.p
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce(n)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inverse(&self, a: &u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let n: i64 = s
            .trim()
            .parse()
            .map_err(|_| parse_err(s, &format!("element of GF({})", self.p)))?;
        Ok(self.reduce(n))
    }
}

impl Field for PrimeField {
    fn order(&self, a: &u64, b: &u64) -> Ordering {
        a.cmp(b)
    }
}

impl RootFinding for PrimeField {
    /// Exhaustive scan of the `p` residues, deflating each root found.
    fn roots(&self, f: &Polynomial<u64>) -> (Vec<(u64, usize)>, Polynomial<u64>) {
        let mut rest = f.clone();
        let mut found = Vec::new();
        if rest.is_zero() {
            return (found, rest);
        }
        for r in self.elements() {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            let lin = Polynomial::new(self, vec![self.neg(&r), 1]);
            let mut m = 0;
            while rest.degree().unwrap_or(0) > 0 {
                let (q, rem) = rest.div_rem(self, &lin).expect("nonzero divisor");
                if !rem.is_zero() {
                    break;
                }
                rest = q;
                m += 1;
            }
            if m > 0 {
                found.push((r, m));
            }
        }
        (found, rest.monic(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(PrimeField::new(12), Err(Error::NotPrime(12)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert!(PrimeField::new(11).is_ok());
    }

    #[test]
    fn fermat_and_inverse() {
        let f = PrimeField::new(13).unwrap();
        for a in 1..13 {
            assert_eq!(f.pow(&a, 12), 1);
            assert_eq!(f.mul(&a, &f.inverse(&a).unwrap()), 1);
        }
        assert_eq!(f.inverse(&0), None);
    }

    #[test]
    fn parse_reduces() {
        let f = PrimeField::new(11).unwrap();
        assert_eq!(f.parse("44").unwrap(), 0);
        assert_eq!(f.parse("-1").unwrap(), 10);
    }

    #[test]
    fn scan_roots() {
        let f = PrimeField::new(5).unwrap();
        // (x - 1)^2 (x + 1) (x^2 + 2): x^2 + 2 has no roots mod 5
        let lin1 = Polynomial::new(&f, vec![4, 1]);
        let lin2 = Polynomial::new(&f, vec![1, 1]);
        let q = Polynomial::new(&f, vec![2, 0, 1]);
        let p = lin1.mul(&f, &lin1).mul(&f, &lin2).mul(&f, &q);
        let (roots, rest) = f.roots(&p);
        assert_eq!(roots, vec![(1, 2), (4, 1)]);
        assert_eq!(rest, q);
    }
}
