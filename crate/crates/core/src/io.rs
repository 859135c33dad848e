//! JSON documents for matrices, bimatrices, bivectors, codes and models.
//!
//! Scalars are always written as literals (`"3/4"`, `"2+I"`, `"0.4I"`), with
//! the scalar kind declared once per document.

use std::fmt;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::bicode::{render_biword, Bicode, DecodeReport, LinearCode};
use crate::bimatrix::{Bimatrix, Bipolynomial, Bivector};
use crate::bispace::BivectorSet;
use crate::error::{parse_err, Error, Result};
use crate::matrix::Matrix;
use crate::models::ChainMode;
use crate::scalar::{FuzzyValue, Neutro, Neutrosophic, Polynomial, PrimeField, Rational, Rationals, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    Rational,
    Gf(u64),
    Neutrosophic,
    Fuzzy,
}

impl FromStr for ScalarKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "rational" => Ok(Self::Rational),
            "neutrosophic" => Ok(Self::Neutrosophic),
            "fuzzy" => Ok(Self::Fuzzy),
            t => t
                .strip_prefix("gf:")
                .and_then(|p| p.parse().ok())
                .map(Self::Gf)
                .ok_or_else(|| parse_err(s, "scalar kind")),
        }
    }
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational => f.write_str("rational"),
            Self::Gf(p) => write!(f, "gf:{p}"),
            Self::Neutrosophic => f.write_str("neutrosophic"),
            Self::Fuzzy => f.write_str("fuzzy"),
        }
    }
}

/// Reading and writing scalar literals of one kind.
pub trait ScalarCodec {
    type Elem: Clone + PartialEq;
    fn kind(&self) -> ScalarKind;
    fn parse_literal(&self, s: &str) -> Result<Self::Elem>;
    fn render_literal(&self, e: &Self::Elem) -> String;
}

macro_rules! ring_codec {
    ($t:ty, $kind:expr) => {
        impl ScalarCodec for $t {
            type Elem = <$t as Ring>::Elem;
            fn kind(&self) -> ScalarKind {
                #[allow(clippy::redundant_closure_call)]
                ($kind)(self)
            }
            fn parse_literal(&self, s: &str) -> Result<Self::Elem> {
                Ring::parse(self, s)
            }
            fn render_literal(&self, e: &Self::Elem) -> String {
                Ring::render(self, e)
            }
        }
    };
}

ring_codec!(Rationals, |_: &Rationals| ScalarKind::Rational);
ring_codec!(Neutrosophic, |_: &Neutrosophic| ScalarKind::Neutrosophic);
ring_codec!(PrimeField, |f: &PrimeField| ScalarKind::Gf(f.modulus()));

/// Literal codec for fuzzy-neutrosophic values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Fuzzy;

impl ScalarCodec for Fuzzy {
    type Elem = FuzzyValue;
    fn kind(&self) -> ScalarKind {
        ScalarKind::Fuzzy
    }
    fn parse_literal(&self, s: &str) -> Result<FuzzyValue> {
        FuzzyValue::parse(s)
    }
    fn render_literal(&self, e: &FuzzyValue) -> String {
        e.to_string()
    }
}

fn check_kind(declared: &str, codec: &impl ScalarCodec) -> Result<()> {
    let declared_kind: ScalarKind = declared.parse()?;
    if declared_kind != codec.kind() {
        return Err(Error::ScalarKindMismatch {
            expected: codec.kind().to_string(),
            found: declared.to_string(),
        });
    }
    Ok(())
}

/// `{rows, cols, entries}` with entries row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<String>,
}

impl MatrixDoc {
    pub fn encode<C: ScalarCodec>(codec: &C, m: &Matrix<C::Elem>) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|e| codec.render_literal(e)).collect(),
        }
    }

    pub fn decode<C: ScalarCodec>(&self, codec: &C) -> Result<Matrix<C::Elem>> {
        let entries = self
            .entries
            .iter()
            .map(|s| codec.parse_literal(s))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_vec(self.rows, self.cols, entries)
    }
}

/// A single matrix with its scalar kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub scalar_kind: String,
    #[serde(flatten)]
    pub matrix: MatrixDoc,
}

impl MatrixFile {
    pub fn encode<C: ScalarCodec>(codec: &C, m: &Matrix<C::Elem>) -> Self {
        Self {
            scalar_kind: codec.kind().to_string(),
            matrix: MatrixDoc::encode(codec, m),
        }
    }

    pub fn decode<C: ScalarCodec>(&self, codec: &C) -> Result<Matrix<C::Elem>> {
        check_kind(&self.scalar_kind, codec)?;
        self.matrix.decode(codec)
    }

    pub fn kind(&self) -> Result<ScalarKind> {
        self.scalar_kind.parse()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimatrixDoc {
    pub scalar_kind: String,
    pub first: MatrixDoc,
    pub second: MatrixDoc,
}

impl BimatrixDoc {
    pub fn encode<C: ScalarCodec>(codec: &C, m: &Bimatrix<C::Elem>) -> Self {
        Self {
            scalar_kind: codec.kind().to_string(),
            first: MatrixDoc::encode(codec, &m.first),
            second: MatrixDoc::encode(codec, &m.second),
        }
    }

    pub fn decode<C: ScalarCodec>(&self, codec: &C) -> Result<Bimatrix<C::Elem>> {
        check_kind(&self.scalar_kind, codec)?;
        Ok(Bimatrix::new(self.first.decode(codec)?, self.second.decode(codec)?))
    }

    pub fn kind(&self) -> Result<ScalarKind> {
        self.scalar_kind.parse()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivectorDoc {
    pub scalar_kind: String,
    pub first: Vec<String>,
    pub second: Vec<String>,
}

impl BivectorDoc {
    pub fn encode<C: ScalarCodec>(codec: &C, v: &Bivector<C::Elem>) -> Self {
        let lits = |xs: &[C::Elem]| xs.iter().map(|x| codec.render_literal(x)).collect();
        Self {
            scalar_kind: codec.kind().to_string(),
            first: lits(&v.first),
            second: lits(&v.second),
        }
    }

    pub fn decode<C: ScalarCodec>(&self, codec: &C) -> Result<Bivector<C::Elem>> {
        check_kind(&self.scalar_kind, codec)?;
        let parse = |xs: &[String]| xs.iter().map(|s| codec.parse_literal(s)).collect::<Result<Vec<_>>>();
        Ok(Bivector {
            first: parse(&self.first)?,
            second: parse(&self.second)?,
        })
    }
}

/// Per-component vector lists, as in [`BivectorSet`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivectorSetDoc {
    pub scalar_kind: String,
    pub first: Vec<Vec<String>>,
    pub second: Vec<Vec<String>>,
}

impl BivectorSetDoc {
    pub fn encode<C: ScalarCodec>(codec: &C, s: &BivectorSet<C::Elem>) -> Self {
        let lits = |vs: &[Vec<C::Elem>]| {
            vs.iter()
                .map(|v| v.iter().map(|x| codec.render_literal(x)).collect())
                .collect()
        };
        Self {
            scalar_kind: codec.kind().to_string(),
            first: lits(&s.first),
            second: lits(&s.second),
        }
    }

    pub fn decode<C: ScalarCodec>(&self, codec: &C) -> Result<BivectorSet<C::Elem>> {
        check_kind(&self.scalar_kind, codec)?;
        let parse = |vs: &[Vec<String>]| {
            vs.iter()
                .map(|v| v.iter().map(|s| codec.parse_literal(s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()
        };
        Ok(BivectorSet {
            first: parse(&self.first)?,
            second: parse(&self.second)?,
        })
    }
}

/// Generator bipolynomial with coefficients in increasing degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorPolyDoc {
    pub g1: Vec<u64>,
    pub g2: Vec<u64>,
    pub n1: usize,
    pub n2: usize,
}

/// A bicode given by a generator bipolynomial, by both bimatrices, or by
/// either bimatrix alone, in that order of preference.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDoc {
    pub q: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_poly: Option<GeneratorPolyDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<BimatrixDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<BimatrixDoc>,
}

fn from_parts(field: &PrimeField, g: &Matrix<u64>, h: &Matrix<u64>, component: usize) -> Result<LinearCode> {
    let mut code = LinearCode::from_generator(field, g, component)?;
    let from_h = LinearCode::from_parity(field, h, component)?;
    if from_h.k != code.k || from_h.n != code.n {
        return Err(Error::InvariantViolation(format!(
            "component {}: generator and parity matrices describe different codes",
            component + 1
        )));
    }
    if code.k > 0 && h.rows() > 0 && !g.mul(field, &h.transpose())?.is_zero(field) {
        return Err(Error::InvariantViolation(format!("component {}: G·Hᵀ ≠ 0", component + 1)));
    }
    code.parity = h.clone();
    Ok(code)
}

impl CodeDoc {
    pub fn build(&self) -> Result<Bicode> {
        let field = PrimeField::new(self.q)?;
        if let Some(gp) = &self.generator_poly {
            let g = Bipolynomial::new(
                Polynomial::new(&field, gp.g1.iter().map(|&c| c % self.q).collect()),
                Polynomial::new(&field, gp.g2.iter().map(|&c| c % self.q).collect()),
            );
            return Bicode::cyclic(field, &g, (gp.n1, gp.n2));
        }
        match (&self.generator, &self.parity) {
            (Some(g), Some(h)) => {
                let (g, h) = (g.decode(&field)?, h.decode(&field)?);
                Ok(Bicode {
                    field,
                    first: from_parts(&field, &g.first, &h.first, 0)?,
                    second: from_parts(&field, &g.second, &h.second, 1)?,
                })
            }
            (None, Some(h)) => Bicode::from_parity(field, &h.decode(&field)?),
            (Some(g), None) => Bicode::from_generator(field, &g.decode(&field)?),
            (None, None) => Err(parse_err("code document", "code with a parity, generator or generator_poly field")),
        }
    }

    pub fn encode(code: &Bicode) -> Self {
        let f = &code.field;
        let generator_poly = match (&code.first.generator_poly, &code.second.generator_poly) {
            (Some(a), Some(b)) => Some(GeneratorPolyDoc {
                g1: a.coeffs().to_vec(),
                g2: b.coeffs().to_vec(),
                n1: code.first.n,
                n2: code.second.n,
            }),
            _ => None,
        };
        Self {
            q: f.modulus(),
            generator_poly,
            generator: Some(BimatrixDoc::encode(f, &code.generator())),
            parity: Some(BimatrixDoc::encode(f, &code.parity())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeReportDoc {
    pub case: String,
    pub bases_tried: [usize; 2],
    pub result: String,
    pub distance: [usize; 3],
}

impl From<&DecodeReport> for DecodeReportDoc {
    fn from(r: &DecodeReport) -> Self {
        Self {
            case: r.case.to_string(),
            bases_tried: [r.bases_tried.0, r.bases_tried.1],
            result: render_biword(&r.result),
            distance: [r.distance.first, r.distance.second, r.distance.total],
        }
    }
}

/// Model files, tagged by `kind`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ModelDoc {
    Markov {
        p: BimatrixDoc,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        x0: Option<BivectorDoc>,
        #[serde(default)]
        mode: ChainMode,
    },
    LeontiefClosed {
        #[serde(alias = "a")]
        c: MatrixFile,
    },
    LeontiefOpen {
        c: MatrixFile,
        d: Vec<String>,
    },
    NeutroLeontief {
        c: BimatrixDoc,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        d: Option<BivectorDoc>,
    },
}

/// Parses a JSON document, reporting syntax and shape errors with their
/// position.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Document {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

pub fn parse_rational_list(xs: &[String]) -> Result<Vec<Rational>> {
    xs.iter().map(|s| Rationals.parse(s)).collect()
}

pub fn parse_neutro_list(xs: &[String]) -> Result<Vec<Neutro>> {
    xs.iter().map(|s| Neutrosophic.parse(s)).collect()
}
