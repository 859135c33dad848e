//! Neutrosophic numbers `a + bI` with the idempotent indeterminate `I·I = I`.
//!
//! The map `a + bI ↦ (a, a + b)` is a ring isomorphism Q(I) ≅ Q × Q, so
//! inversion, determinants and root finding all reduce to two rational
//! problems ("splits").

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{parse_rational, render_rational};
use super::{Rational, Ring};
use crate::error::{parse_err, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Neutro {
    pub real: Rational,
    pub indet: Rational,
}

impl Neutro {
    pub fn new(real: Rational, indet: Rational) -> Self {
        Self { real, indet }
    }

    pub fn real(a: Rational) -> Self {
        Self::new(a, Rational::zero())
    }

    /// The indeterminate `I`.
    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.real.is_zero() && self.indet.is_zero()
    }

    /// `(a, a + b)`: the images under `I ↦ 0` and `I ↦ 1`.
    pub fn split(&self) -> (Rational, Rational) {
        (self.real.clone(), &self.real + &self.indet)
    }

    pub fn unsplit(u: Rational, v: Rational) -> Self {
        let indet = &v - &u;
        Self::new(u, indet)
    }

    pub fn is_unit(&self) -> bool {
        let (u, v) = self.split();
        !u.is_zero() && !v.is_zero()
    }

    pub fn inverse(&self) -> Result<Self> {
        let (u, v) = self.split();
        if u.is_zero() || v.is_zero() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        Ok(Self::unsplit(u.recip(), v.recip()))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(parse_err(s, "neutrosophic number"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in t.char_indices() {
            if i > 0 && (ch == '+' || ch == '-') {
                terms.push(&t[start..i]);
                start = i;
            }
        }
        terms.push(&t[start..]);
        let mut out = Neutro::default();
        for term in terms {
            if let Some(coef) = term.strip_suffix('I') {
                let c = match coef {
                    "" | "+" => Rational::one(),
                    "-" => -Rational::one(),
                    _ => parse_rational(coef.trim_end_matches('*'))
                        .map_err(|_| parse_err(s, "neutrosophic number"))?,
                };
                out.indet += c;
            } else {
                out.real += parse_rational(term).map_err(|_| parse_err(s, "neutrosophic number"))?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Neutro {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = &self.indet;
        let indet = if b.is_one() {
            "I".to_string()
        } else if *b == -Rational::one() {
            "-I".to_string()
        } else {
            format!("{}I", render_rational(b))
        };
        match (self.real.is_zero(), b.is_zero()) {
            (_, true) => write!(f, "{}", render_rational(&self.real)),
            (true, false) => write!(f, "{indet}"),
            (false, false) => {
                if indet.starts_with('-') {
                    write!(f, "{}{}", render_rational(&self.real), indet)
                } else {
                    write!(f, "{}+{}", render_rational(&self.real), indet)
                }
            }
        }
    }
}

impl Add for &Neutro {
    type Output = Neutro;
    fn add(self, o: &Neutro) -> Neutro {
        Neutro::new(&self.real + &o.real, &self.indet + &o.indet)
    }
}

impl Sub for &Neutro {
    type Output = Neutro;
    fn sub(self, o: &Neutro) -> Neutro {
        Neutro::new(&self.real - &o.real, &self.indet - &o.indet)
    }
}

impl Neg for &Neutro {
    type Output = Neutro;
    fn neg(self) -> Neutro {
        Neutro::new(-&self.real, -&self.indet)
    }
}

/// `(a + bI)(c + dI) = ac + (ad + bc + bd)I`
impl Mul for &Neutro {
    type Output = Neutro;
    fn mul(self, o: &Neutro) -> Neutro {
        let real = &self.real * &o.real;
        let indet = &self.real * &o.indet + &self.indet * &o.real + &self.indet * &o.indet;
        Neutro::new(real, indet)
    }
}

pub fn neutro_mul(x: &Neutro, y: &Neutro) -> Neutro {
    x * y
}

/// The neutrosophic ring Q(I).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Neutrosophic;

impl Ring for Neutrosophic {
    type Elem = Neutro;

    fn zero(&self) -> Neutro {
        Neutro::default()
    }
    fn one(&self) -> Neutro {
        Neutro::real(Rational::one())
    }
    fn from_i64(&self, n: i64) -> Neutro {
        Neutro::real(Rational::from_integer(n.into()))
    }
    fn add(&self, a: &Neutro, b: &Neutro) -> Neutro {
        a + b
    }
    fn neg(&self, a: &Neutro) -> Neutro {
        -a
    }
    fn sub(&self, a: &Neutro, b: &Neutro) -> Neutro {
        a - b
    }
    fn mul(&self, a: &Neutro, b: &Neutro) -> Neutro {
        a * b
    }
    fn inverse(&self, a: &Neutro) -> Option<Neutro> {
        a.inverse().ok()
    }
    fn is_zero(&self, a: &Neutro) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &Neutro) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<Neutro> {
        Neutro::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::{int, rat};

    fn n(a: i64, b: i64) -> Neutro {
        Neutro::new(int(a), int(b))
    }

    #[test]
    fn i_is_idempotent() {
        assert_eq!(neutro_mul(&Neutro::i(), &Neutro::i()), Neutro::i());
    }

    #[test]
    fn scalar_action() {
        let x = Neutro::new(rat(3, 2), int(-4));
        assert_eq!(neutro_mul(&n(2, 0), &x), Neutro::new(int(3), int(-8)));
    }

    #[test]
    fn square_of_one_plus_two_i() {
        assert_eq!(neutro_mul(&n(1, 2), &n(1, 2)), n(1, 8));
    }

    #[test]
    fn split_and_unsplit() {
        assert_eq!(n(1, 2).split(), (int(1), int(3)));
        assert_eq!(n(0, 0).split(), (int(0), int(0)));
        assert_eq!(Neutro::unsplit(int(1), int(3)), n(1, 2));
    }

    #[test]
    fn units_and_inverses() {
        assert!(n(1, 0).is_unit());
        assert_eq!(n(1, 0).inverse().unwrap(), n(1, 0));
        assert!(!Neutro::i().is_unit());
        assert!(matches!(Neutro::i().inverse(), Err(Error::NotAUnit(_))));
        let inv = n(1, 2).inverse().unwrap();
        assert_eq!(inv, Neutro::new(int(1), rat(-2, 3)));
        assert_eq!(&n(1, 2) * &inv, n(1, 0));
    }

    #[test]
    fn literals_round_trip() {
        for (lit, want) in [
            ("2I+1", n(1, 2)),
            ("1+2I", n(1, 2)),
            ("3", n(3, 0)),
            ("I", n(0, 1)),
            ("-I", n(0, -1)),
            ("-6I+2", n(2, -6)),
            ("4 - 4I", n(4, -4)),
        ] {
            let v = Neutro::parse(lit).unwrap();
            assert_eq!(v, want, "{lit}");
            assert_eq!(Neutro::parse(&v.to_string()).unwrap(), v);
        }
        assert_eq!(Neutro::new(int(1), rat(-2, 3)).to_string(), "1-2/3I");
        assert!(Neutro::parse("2J").is_err());
    }

    #[test]
    fn repeated_indeterminates_add() {
        assert_eq!(&Neutro::parse("2I").unwrap() + &Neutro::parse("3I").unwrap(), n(0, 5));
    }
}
