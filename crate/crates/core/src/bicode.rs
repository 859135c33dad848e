//! Linear bicodes over a prime field: construction, encoding, syndromes,
//! enumeration, duals and the pseudo-projection decoder.

use std::fmt;

use crate::bimatrix::{Bimatrix, Bipolynomial, Bivector};
use crate::bispace::{pseudo_best_approximation, PseudoApprox, PseudoInnerProduct};
use crate::error::{parse_err, shape, Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Polynomial, PrimeField, Ring};

/// Default limit on the number of words `enumerate` will produce per component.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 20;

/// One `[n, k]` component of a bicode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    pub n: usize,
    pub k: usize,
    /// `k × n`, full row rank.
    pub generator: Matrix<u64>,
    /// `(n - k) × n`, full row rank.
    pub parity: Matrix<u64>,
    pub generator_poly: Option<Polynomial<u64>>,
    pub check_poly: Option<Polynomial<u64>>,
}

fn empty_rows(n: usize) -> Matrix<u64> {
    Matrix::from_vec(0, n, Vec::new()).expect("0 x n")
}

/// Row-reduced, rows sorted: the canonical form of a basis matrix.
fn canonical_rows(field: &PrimeField, rows: Vec<Vec<u64>>, n: usize) -> Matrix<u64> {
    if rows.is_empty() {
        return empty_rows(n);
    }
    let m = Matrix::from_rows(rows).expect("equal lengths");
    let e = m.echelon(field);
    let mut out: Vec<Vec<u64>> = e.reduced.row_vecs().into_iter().take(e.pivots.len()).collect();
    out.sort();
    Matrix::from_rows(out).expect("equal lengths")
}

/// Whether the last `r` columns of `m` (`r = rows`) form the identity.
fn identity_on_right(m: &Matrix<u64>) -> bool {
    let (r, n) = m.shape();
    r <= n && (0..r).all(|i| (0..r).all(|j| m[(i, n - r + j)] == u64::from(i == j)))
}

/// Whether the first `r` columns form the identity.
fn identity_on_left(m: &Matrix<u64>) -> bool {
    let (r, n) = m.shape();
    r <= n && (0..r).all(|i| (0..r).all(|j| m[(i, j)] == u64::from(i == j)))
}

impl LinearCode {
    pub fn from_parity(field: &PrimeField, h: &Matrix<u64>, component: usize) -> Result<Self> {
        let (r, n) = h.shape();
        let rank = h.rank(field);
        if rank != r {
            return Err(Error::RankDeficientParity {
                component: component + 1,
                rank,
                expected: r,
            });
        }
        let k = n - r;
        let generator = if identity_on_right(h) {
            // H = (A | I) gives G = (I | -Aᵀ).
            Matrix::from_fn(k, n, |i, j| {
                if j < k {
                    u64::from(i == j)
                } else {
                    field.neg(&h[(j - k, i)])
                }
            })
        } else {
            canonical_rows(field, h.nullspace(field), n)
        };
        Ok(Self {
            n,
            k,
            generator,
            parity: h.clone(),
            generator_poly: None,
            check_poly: None,
        })
    }

    pub fn from_generator(field: &PrimeField, g: &Matrix<u64>, component: usize) -> Result<Self> {
        let (k, n) = g.shape();
        let rank = g.rank(field);
        if rank != k {
            return Err(Error::RankDeficientGenerator {
                component: component + 1,
                rank,
                expected: k,
            });
        }
        let r = n - k;
        let parity = if identity_on_left(g) {
            // G = (I | P) gives H = (-Pᵀ | I).
            Matrix::from_fn(r, n, |i, j| {
                if j < k {
                    field.neg(&g[(j, k + i)])
                } else {
                    u64::from(j - k == i)
                }
            })
        } else {
            canonical_rows(field, g.nullspace(field), n)
        };
        Ok(Self {
            n,
            k,
            generator: g.clone(),
            parity,
            generator_poly: None,
            check_poly: None,
        })
    }

    /// Cyclic code of length `n` generated by `g | xⁿ - 1`. Generator rows are
    /// `g, xg, …, x^{k-1}g`; parity rows are shifts of the reversed check
    /// polynomial `h = (xⁿ - 1) / g`.
    pub fn cyclic(field: &PrimeField, g: &Polynomial<u64>, n: usize) -> Result<Self> {
        let not_dividing = || Error::GeneratorDoesNotDivide {
            generator: g.render(field, "x"),
            n,
        };
        let deg = g.degree().filter(|&d| d <= n).ok_or_else(not_dividing)?;
        let (h, rem) = Polynomial::x_pow_minus_one(field, n).div_rem(field, g)?;
        if !rem.is_zero() {
            return Err(not_dividing());
        }
        let k = n - deg;
        let generator = Matrix::from_fn(k, n, |i, j| if j >= i { g.coeff(field, j - i) } else { 0 });
        let r = n - k;
        let parity = Matrix::from_fn(r, n, |i, j| {
            // Row i holds h_k … h_0 starting at column r - 1 - i.
            let start = r - 1 - i;
            if j >= start && j - start <= k {
                h.coeff(field, k - (j - start))
            } else {
                0
            }
        });
        Ok(Self {
            n,
            k,
            generator,
            parity,
            generator_poly: Some(g.clone()),
            check_poly: Some(h),
        })
    }

    pub fn dual(&self) -> Self {
        Self {
            n: self.n,
            k: self.n - self.k,
            generator: self.parity.clone(),
            parity: self.generator.clone(),
            generator_poly: None,
            check_poly: None,
        }
    }

    pub fn encode(&self, field: &PrimeField, msg: &[u64]) -> Result<Vec<u64>> {
        if msg.len() != self.k {
            return Err(shape("encode", format!("message of length {} for k = {}", msg.len(), self.k)));
        }
        if self.k == 0 {
            return Ok(vec![0; self.n]);
        }
        self.generator.vec_mul(field, msg)
    }

    pub fn syndrome(&self, field: &PrimeField, y: &[u64]) -> Result<Vec<u64>> {
        if y.len() != self.n {
            return Err(shape("syndrome", format!("word of length {} for n = {}", y.len(), self.n)));
        }
        if self.parity.rows() == 0 {
            return Ok(Vec::new());
        }
        self.parity.mul_vec(field, y)
    }

    pub fn is_codeword(&self, field: &PrimeField, y: &[u64]) -> Result<bool> {
        Ok(self.syndrome(field, y)?.iter().all(|&s| s == 0))
    }

    /// All `q^k` codewords, sorted lexicographically.
    pub fn enumerate(&self, field: &PrimeField, cap: u64) -> Result<Vec<Vec<u64>>> {
        let q = field.modulus();
        let count = u32::try_from(self.k)
            .ok()
            .and_then(|k| q.checked_pow(k))
            .filter(|&c| c <= cap)
            .ok_or_else(|| Error::EnumerationTooLarge {
                count: format!("{q}^{}", self.k),
                cap,
            })?;
        let mut words = Vec::with_capacity(count as usize);
        let mut msg = vec![0u64; self.k];
        for _ in 0..count {
            words.push(self.encode(field, &msg)?);
            for d in msg.iter_mut().rev() {
                *d += 1;
                if *d < q {
                    break;
                }
                *d = 0;
            }
        }
        words.sort();
        Ok(words)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bicode {
    pub field: PrimeField,
    pub first: LinearCode,
    pub second: LinearCode,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syndrome {
    pub value: Bivector<u64>,
    pub is_codeword: bool,
}

/// Componentwise Hamming distances and their sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bidistance {
    pub first: usize,
    pub second: usize,
    pub total: usize,
}

pub fn hamming_bidistance<T: Clone + PartialEq>(x: &Bivector<T>, y: &Bivector<T>) -> Result<Bidistance> {
    if x.shape() != y.shape() {
        return Err(shape("hamming bidistance", format!("{:?} vs {:?}", x.shape(), y.shape())));
    }
    let d = |a: &[T], b: &[T]| a.iter().zip(b).filter(|(u, v)| u != v).count();
    let (first, second) = (d(&x.first, &y.first), d(&x.second, &y.second));
    Ok(Bidistance {
        first,
        second,
        total: first + second,
    })
}

impl Bicode {
    pub fn from_parity(field: PrimeField, h: &Bimatrix<u64>) -> Result<Self> {
        Ok(Self {
            field,
            first: LinearCode::from_parity(&field, &h.first, 0)?,
            second: LinearCode::from_parity(&field, &h.second, 1)?,
        })
    }

    pub fn from_generator(field: PrimeField, g: &Bimatrix<u64>) -> Result<Self> {
        Ok(Self {
            field,
            first: LinearCode::from_generator(&field, &g.first, 0)?,
            second: LinearCode::from_generator(&field, &g.second, 1)?,
        })
    }

    pub fn cyclic(field: PrimeField, g: &Bipolynomial<u64>, n: (usize, usize)) -> Result<Self> {
        Ok(Self {
            field,
            first: LinearCode::cyclic(&field, &g.first, n.0)?,
            second: LinearCode::cyclic(&field, &g.second, n.1)?,
        })
    }

    pub fn component(&self, i: usize) -> &LinearCode {
        if i == 0 {
            &self.first
        } else {
            &self.second
        }
    }

    /// `((n₁, k₁), (n₂, k₂))`
    pub fn params(&self) -> ((usize, usize), (usize, usize)) {
        ((self.first.n, self.first.k), (self.second.n, self.second.k))
    }

    pub fn generator(&self) -> Bimatrix<u64> {
        Bimatrix::new(self.first.generator.clone(), self.second.generator.clone())
    }

    pub fn parity(&self) -> Bimatrix<u64> {
        Bimatrix::new(self.first.parity.clone(), self.second.parity.clone())
    }

    pub fn check_bipolynomial(&self) -> Option<Bipolynomial<u64>> {
        Some(Bipolynomial::new(self.first.check_poly.clone()?, self.second.check_poly.clone()?))
    }

    pub fn dual(&self) -> Self {
        Self {
            field: self.field,
            first: self.first.dual(),
            second: self.second.dual(),
        }
    }

    pub fn encode(&self, msg: &Bivector<u64>) -> Result<Bivector<u64>> {
        Ok(Bivector::new(
            self.first.encode(&self.field, &msg.first)?,
            self.second.encode(&self.field, &msg.second)?,
        ))
    }

    pub fn syndrome(&self, y: &Bivector<u64>) -> Result<Syndrome> {
        let value = Bivector::new(
            self.first.syndrome(&self.field, &y.first)?,
            self.second.syndrome(&self.field, &y.second)?,
        );
        let is_codeword = value.is_zero(&self.field);
        Ok(Syndrome { value, is_codeword })
    }

    pub fn enumerate(&self, cap: u64) -> Result<(Vec<Vec<u64>>, Vec<Vec<u64>>)> {
        Ok((
            self.first.enumerate(&self.field, cap)?,
            self.second.enumerate(&self.field, cap)?,
        ))
    }

    /// Whether `GᵢHᵢᵀ = 0` in both components.
    pub fn is_consistent(&self) -> bool {
        [&self.first, &self.second].iter().all(|c| {
            c.k == 0
                || c.parity.rows() == 0
                || c.generator
                    .mul(&self.field, &c.parity.transpose())
                    .is_ok_and(|m| m.is_zero(&self.field))
        })
    }

    pub fn decode(&self, beta: &Bivector<u64>, policy: &DecodePolicy) -> Result<DecodeReport> {
        let (r1, t1) = decode_component(self, 0, &beta.first, &policy.first, policy.best_of_best)?;
        let (r2, t2) = decode_component(self, 1, &beta.second, &policy.second, policy.best_of_best)?;
        let case = match (t1.is_none(), t2.is_none()) {
            (true, true) => DecodeCase::AlreadyCodeword,
            (true, false) => DecodeCase::SecondCorrected,
            (false, true) => DecodeCase::FirstCorrected,
            (false, false) => DecodeCase::BothCorrected,
        };
        let result = Bivector::new(r1, r2);
        let distance = hamming_bidistance(beta, &result)?;
        Ok(DecodeReport {
            case,
            bases_tried: (t1.unwrap_or(0), t2.unwrap_or(0)),
            result,
            distance,
        })
    }
}

/// Which bases the decoder tries, in order, for one component.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum BasisPolicy {
    /// Basis 0 is the rows of G. Basis j replaces row `(j-1) mod k` of the
    /// previous basis by its sum with the next row (cyclically). At most `4k`
    /// bases.
    #[default]
    Walk,
    /// Caller-supplied bases, each a list of `k` codewords.
    Explicit(Vec<Vec<Vec<u64>>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DecodePolicy {
    pub first: BasisPolicy,
    pub second: BasisPolicy,
    /// Try every basis and keep the candidate closest to the received word,
    /// ties going to the lexicographically smallest.
    pub best_of_best: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecodeCase {
    AlreadyCodeword,
    /// First component was a codeword, second was projected.
    SecondCorrected,
    FirstCorrected,
    BothCorrected,
}

impl fmt::Display for DecodeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::AlreadyCodeword => "already-codeword",
            Self::SecondCorrected => "second-corrected",
            Self::FirstCorrected => "first-corrected",
            Self::BothCorrected => "both-corrected",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeReport {
    pub case: DecodeCase,
    pub bases_tried: (usize, usize),
    pub result: Bivector<u64>,
    pub distance: Bidistance,
}

fn walk_bases(code: &LinearCode) -> Vec<Vec<Vec<u64>>> {
    let mut basis = code.generator.row_vecs();
    let mut out = vec![basis.clone()];
    let k = code.k;
    if k < 2 {
        return out;
    }
    for j in 1..4 * k {
        let r = (j - 1) % k;
        let next = basis[(r + 1) % k].clone();
        basis[r] = basis[r].iter().zip(&next).map(|(a, b)| a + b).collect();
        out.push(basis.clone());
    }
    out
}

fn reduce_rows(field: &PrimeField, rows: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(|x| x % field.modulus()).collect())
        .collect()
}

fn validate_basis(field: &PrimeField, code: &LinearCode, basis: &[Vec<u64>], component: usize) -> Result<()> {
    let invalid = |reason: String| Error::InvalidBasis {
        component: component + 1,
        reason,
    };
    if basis.len() != code.k {
        return Err(invalid(format!("{} vectors for dimension {}", basis.len(), code.k)));
    }
    for v in basis {
        if !code.is_codeword(field, v)? {
            return Err(invalid(format!("{} is not a codeword", render_word(v))));
        }
    }
    if code.k > 0 && Matrix::from_rows(basis.to_vec())?.rank(field) != code.k {
        return Err(invalid("vectors are linearly dependent".into()));
    }
    Ok(())
}

/// Returns the decoded component and the number of bases tried (`None` when
/// the received component was already a codeword).
fn decode_component(
    code: &Bicode,
    component: usize,
    beta: &[u64],
    policy: &BasisPolicy,
    best_of_best: bool,
) -> Result<(Vec<u64>, Option<usize>)> {
    let field = &code.field;
    let lc = code.component(component);
    if lc.is_codeword(field, beta)? {
        return Ok((beta.to_vec(), None));
    }
    let bases = match policy {
        BasisPolicy::Walk => reduce_rows_all(field, walk_bases(lc)),
        BasisPolicy::Explicit(bs) => {
            let bs = reduce_rows_all(field, bs.clone());
            for b in &bs {
                validate_basis(field, lc, b, component)?;
            }
            bs
        }
    };
    let ip = PseudoInnerProduct::dot(*field);
    let mut best: Option<(usize, Vec<u64>)> = None;
    let mut tried = 0;
    for basis in &bases {
        tried += 1;
        let PseudoApprox::Found(v) = pseudo_best_approximation(&ip, basis, beta)? else {
            continue;
        };
        if !lc.is_codeword(field, &v)? {
            continue;
        }
        if !best_of_best {
            return Ok((v, Some(tried)));
        }
        let d = v.iter().zip(beta).filter(|(a, b)| a != b).count();
        if best.as_ref().is_none_or(|(bd, bv)| (d, &v) < (*bd, bv)) {
            best = Some((d, v));
        }
    }
    match best {
        Some((_, v)) => Ok((v, Some(tried))),
        None => Err(Error::DecoderExhausted {
            component: component + 1,
            tried,
        }),
    }
}

fn reduce_rows_all(field: &PrimeField, bases: Vec<Vec<Vec<u64>>>) -> Vec<Vec<Vec<u64>>> {
    bases.into_iter().map(|b| reduce_rows(field, b)).collect()
}

/// Symbols of a word: digits run together for `p ≤ 10`, comma separated
/// otherwise.
pub fn render_word(w: &[u64]) -> String {
    if w.iter().all(|&x| x < 10) {
        w.iter().map(|x| x.to_string()).collect()
    } else {
        w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn parse_word(field: &PrimeField, s: &str) -> Result<Vec<u64>> {
    let t = s.trim();
    let symbols: Vec<&str> = if t.contains(',') {
        t.split(',').map(str::trim).collect()
    } else {
        t.split_terminator("").skip(1).collect()
    };
    symbols
        .into_iter()
        .map(|d| {
            let x: u64 = d.parse().map_err(|_| parse_err(s, "word"))?;
            if x >= field.modulus() {
                return Err(parse_err(s, &format!("word over GF({})", field.modulus())));
            }
            Ok(x)
        })
        .collect()
}

/// `first|second`, e.g. `111111|11111111`.
pub fn parse_biword(field: &PrimeField, s: &str) -> Result<Bivector<u64>> {
    let (a, b) = s.split_once('|').ok_or_else(|| parse_err(s, "biword `first|second`"))?;
    Ok(Bivector::new(parse_word(field, a)?, parse_word(field, b)?))
}

pub fn render_biword(w: &Bivector<u64>) -> String {
    format!("{}|{}", render_word(&w.first), render_word(&w.second))
}
