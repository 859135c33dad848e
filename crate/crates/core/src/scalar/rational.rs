//! Arbitrary-precision rationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, Polynomial, Ring, RootFinding};
use crate::error::{parse_err, Error, Result};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rational_arith(a: &Rational, b: &Rational, op: ArithOp) -> Result<Rational> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => {
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            a / b
        }
    })
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || parse_err(s, "rational");
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

pub fn render_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Ring for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_i64(&self, n: i64) -> Rational {
        int(n)
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn inverse(&self, a: &Rational) -> Option<Rational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &Rational) -> String {
        render_rational(a)
    }
    fn parse(&self, s: &str) -> Result<Rational> {
        parse_rational(s)
    }
}

impl Field for Rationals {
    fn div(&self, a: &Rational, b: &Rational) -> Rational {
        a / b
    }

    fn order(&self, a: &Rational, b: &Rational) -> Ordering {
        a.cmp(b)
    }

    /// Primitive integer vector whose first nonzero entry is positive.
    fn normalize(&self, v: &mut [Rational]) {
        let Some(lead) = v.iter().find(|x| !x.is_zero()) else {
            return;
        };
        let negative = lead.is_negative();
        let den_lcm = v
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = v
            .iter()
            .map(|x| x.numer() * (&den_lcm / x.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (slot, n) in v.iter_mut().zip(ints) {
            let mut q = n / &g;
            if negative {
                q = -q;
            }
            *slot = Rational::from_integer(q);
        }
    }
}

/// All positive divisors of `n` (n != 0), by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1;
    }
    if rest > BigInt::one() {
        primes.push((rest, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out
}

/// Integer coefficients with the same roots (denominators cleared, content removed).
fn primitive_integer_coeffs(f: &Polynomial<Rational>) -> Vec<BigInt> {
    let l = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

impl RootFinding for Rationals {
    /// Rational-root search: candidates `±d/e` with `d | a_0`, `e | a_n` of the
    /// cleared-denominator polynomial, deflating after each root found.
    fn roots(&self, f: &Polynomial<Rational>) -> (Vec<(Rational, usize)>, Polynomial<Rational>) {
        let field = Rationals;
        let mut rest = f.clone();
        let mut found: Vec<(Rational, usize)> = Vec::new();
        if rest.is_zero() {
            return (found, rest);
        }
        let deflate = |rest: &mut Polynomial<Rational>, r: Rational| -> usize {
            let lin = Polynomial::new(&field, vec![-r.clone(), Rational::one()]);
            let mut m = 0;
            loop {
                if rest.degree().unwrap_or(0) == 0 {
                    break;
                }
                let (q, rem) = rest.div_rem(&field, &lin).expect("nonzero divisor");
                if !rem.is_zero() {
                    break;
                }
                *rest = q;
                m += 1;
            }
            m
        };
        let zm = deflate(&mut rest, Rational::zero());
        if zm > 0 {
            found.push((Rational::zero(), zm));
        }
        while rest.degree().unwrap_or(0) > 0 {
            let ints = primitive_integer_coeffs(&rest);
            let a0 = ints[0].clone();
            let an = ints[ints.len() - 1].clone();
            let mut hit = None;
            'search: for e in divisors(&an) {
                for d in divisors(&a0) {
                    for cand in [Rational::new(d.clone(), e.clone()), Rational::new(-d.clone(), e.clone())] {
                        if rest.eval(&field, &cand).is_zero() {
                            hit = Some(cand);
                            break 'search;
                        }
                    }
                }
            }
            match hit {
                Some(r) => {
                    let m = deflate(&mut rest, r.clone());
                    found.push((r, m));
                }
                None => break,
            }
        }
        found.sort_by(|a, b| a.0.cmp(&b.0));
        (found, rest.monic(&field))
    }
}
