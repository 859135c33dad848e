//! Fuzzy-neutrosophic values: reals in `[0, 1]` and graded indeterminates `nI`
//! with `n ∈ (0, 1]`, stored as exact six-decimal fixed point.

use std::fmt;

use crate::error::{parse_err, Error, Result};

/// Fixed-point denominator: values are integers in millionths.
pub const SCALE: u32 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FuzzyValue {
    /// A membership grade in `[0, 1]`, in millionths.
    Real(u32),
    /// `nI` with grade `n ∈ (0, 1]`, in millionths. `Indet(SCALE)` is `I`.
    Indet(u32),
}

impl FuzzyValue {
    pub const ZERO: FuzzyValue = FuzzyValue::Real(0);
    pub const ONE: FuzzyValue = FuzzyValue::Real(SCALE);
    pub const I: FuzzyValue = FuzzyValue::Indet(SCALE);

    pub fn real_micro(m: u32) -> Result<Self> {
        if m > SCALE {
            return Err(parse_err(&fixed(m), "fuzzy value in [0,1]"));
        }
        Ok(Self::Real(m))
    }

    pub fn indet_micro(m: u32) -> Result<Self> {
        if m == 0 || m > SCALE {
            return Err(parse_err(&format!("{}I", fixed(m)), "indeterminate grade in (0,1]"));
        }
        Ok(Self::Indet(m))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || parse_err(s, "fuzzy value");
        if let Some(grade) = t.strip_suffix('I') {
            if grade.is_empty() {
                return Ok(Self::I);
            }
            return Self::indet_micro(parse_fixed(grade).ok_or_else(bad)?).map_err(|_| bad());
        }
        Self::real_micro(parse_fixed(t).ok_or_else(bad)?).map_err(|_| bad())
    }

    fn check_integral(self) -> Result<Self> {
        match self {
            Self::Indet(g) if g != SCALE => {
                Err(Error::GradedIndeterminateUnsupported(self.to_string()))
            }
            v => Ok(v),
        }
    }

    /// `min` on `[0,1] ∪ {I}`: `min(0, I) = 0`, otherwise `I` absorbs.
    pub fn fuzzy_min(self, other: Self) -> Result<Self> {
        use FuzzyValue::*;
        Ok(match (self.check_integral()?, other.check_integral()?) {
            (Real(a), Real(b)) => Real(a.min(b)),
            (Real(0), Indet(_)) | (Indet(_), Real(0)) => Real(0),
            _ => Self::I,
        })
    }

    /// `max` on `[0,1] ∪ {I}`: `max(1, I) = 1`, otherwise `I` absorbs.
    pub fn fuzzy_max(self, other: Self) -> Result<Self> {
        use FuzzyValue::*;
        Ok(match (self.check_integral()?, other.check_integral()?) {
            (Real(a), Real(b)) => Real(a.max(b)),
            (Real(SCALE), Indet(_)) | (Indet(_), Real(SCALE)) => Self::ONE,
            _ => Self::I,
        })
    }
}

fn parse_fixed(t: &str) -> Option<u32> {
    let (int_part, frac) = match t.split_once('.') {
        Some((i, f)) => (i, f),
        None => (t, ""),
    };
    if frac.len() > 6 || (int_part.is_empty() && frac.is_empty()) {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let i: u64 = if int_part.is_empty() { 0 } else { int_part.parse().ok()? };
    let mut f: u64 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
    for _ in frac.len()..6 {
        f *= 10;
    }
    let v = i.checked_mul(SCALE as u64)?.checked_add(f)?;
    u32::try_from(v).ok()
}

fn fixed(m: u32) -> String {
    let i = m / SCALE;
    let f = m % SCALE;
    if f == 0 {
        return i.to_string();
    }
    let frac = format!("{f:06}");
    format!("{i}.{}", frac.trim_end_matches('0'))
}

impl fmt::Display for FuzzyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Real(m) => write!(f, "{}", fixed(m)),
            Self::Indet(SCALE) => write!(f, "I"),
            Self::Indet(g) => write!(f, "{}I", fixed(g)),
        }
    }
}
