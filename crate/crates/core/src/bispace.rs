//! Inner biproducts, Gram-Schmidt biorthogonalization, projections and
//! complements, plus the pseudo inner product over a prime field.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::bimatrix::{Bivector, SpaceFamily};
use crate::error::{parse_err, shape, Error, Result};
use crate::matrix::Matrix;
use crate::scalar::rational::parse_rational;
use crate::scalar::{Field, PrimeField, Rational, Rationals, Ring};

/// A symmetric bilinear form on coordinate vectors over some field.
pub trait Form {
    type F: Field;

    fn field(&self) -> Self::F;

    fn eval(
        &self,
        u: &[<Self::F as Ring>::Elem],
        v: &[<Self::F as Ring>::Elem],
    ) -> Result<<Self::F as Ring>::Elem>;
}

/// Inner products over the rationals. Polynomials are coefficient vectors
/// (entry `i` multiplies `x^i`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum InnerProduct {
    Dot,
    /// `Σ wᵢ uᵢ vᵢ` with every weight positive.
    Weighted(Vec<Rational>),
    /// `∫ₐᵇ u(x) v(x) dx`, via `⟨xⁱ, xʲ⟩ = (b^{i+j+1} - a^{i+j+1}) / (i+j+1)`.
    L2 { a: Rational, b: Rational },
}

impl InnerProduct {
    pub fn weighted(w: Vec<Rational>) -> Result<Self> {
        if let Some(bad) = w.iter().find(|x| !x.is_positive()) {
            return Err(Error::InvalidInnerProduct(format!("weight {bad} is not positive")));
        }
        Ok(Self::Weighted(w))
    }

    pub fn l2(a: Rational, b: Rational) -> Result<Self> {
        if a >= b {
            return Err(Error::InvalidInnerProduct(format!("empty interval [{a}, {b}]")));
        }
        Ok(Self::L2 { a, b })
    }

    fn moment(a: &Rational, b: &Rational, k: usize) -> Rational {
        let e = (k + 1) as i32;
        (b.pow(e) - a.pow(e)) / Rational::from_integer((k + 1).into())
    }
}

fn check_len(op: &'static str, u: usize, v: usize) -> Result<()> {
    if u != v {
        return Err(shape(op, format!("vectors of length {u} and {v}")));
    }
    Ok(())
}

impl Form for InnerProduct {
    type F = Rationals;

    fn field(&self) -> Rationals {
        Rationals
    }

    fn eval(&self, u: &[Rational], v: &[Rational]) -> Result<Rational> {
        check_len("inner product", u.len(), v.len())?;
        Ok(match self {
            Self::Dot => u.iter().zip(v).map(|(x, y)| x * y).sum(),
            Self::Weighted(w) => {
                check_len("weighted inner product", w.len(), u.len())?;
                w.iter().zip(u).zip(v).map(|((w, x), y)| w * x * y).sum()
            }
            Self::L2 { a, b } => {
                let mut acc = Rational::zero();
                for (i, x) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    for (j, y) in v.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                        acc += x * y * Self::moment(a, b, i + j);
                    }
                }
                acc
            }
        })
    }
}

fn parse_list<T>(s: &str, item: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    s.split(',').map(|t| item(t.trim())).collect()
}

/// Literals `dot`, `wdot:w1,w2,…` and `l2:a,b`.
impl FromStr for InnerProduct {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "dot" {
            return Ok(Self::Dot);
        }
        match t.split_once(':') {
            Some(("wdot", w)) => Self::weighted(parse_list(w, parse_rational)?),
            Some(("l2", ab)) => match parse_list(ab, parse_rational)?.as_slice() {
                [a, b] => Self::l2(a.clone(), b.clone()),
                _ => Err(parse_err(s, "inner product")),
            },
            _ => Err(parse_err(s, "inner product")),
        }
    }
}

impl fmt::Display for InnerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self {
            Self::Dot => write!(f, "dot"),
            Self::Weighted(w) => write!(f, "wdot:{}", join(w)),
            Self::L2 { a, b } => write!(f, "l2:{a},{b}"),
        }
    }
}

/// `Σ wᵢ uᵢ vᵢ` over GF(p). Weights default to all ones. No positivity:
/// `⟨α, α⟩ = 0` can happen for `α ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PseudoInnerProduct {
    pub field: PrimeField,
    pub weights: Option<Vec<u64>>,
}

impl PseudoInnerProduct {
    pub fn dot(field: PrimeField) -> Self {
        Self { field, weights: None }
    }

    pub fn weighted(field: PrimeField, weights: Vec<u64>) -> Self {
        let weights = weights.into_iter().map(|w| w % field.modulus()).collect();
        Self {
            field,
            weights: Some(weights),
        }
    }

    /// `gfdot` or `gfdot:w1,w2,…` over the given field.
    pub fn parse(field: PrimeField, s: &str) -> Result<Self> {
        match s.trim() {
            "gfdot" | "dot" => Ok(Self::dot(field)),
            t => match t.split_once(':') {
                Some(("gfdot", w)) => Ok(Self::weighted(field, parse_list(w, |x| field.parse(x))?)),
                _ => Err(parse_err(s, "pseudo inner product")),
            },
        }
    }
}

impl Form for PseudoInnerProduct {
    type F = PrimeField;

    fn field(&self) -> PrimeField {
        self.field
    }

    fn eval(&self, u: &[u64], v: &[u64]) -> Result<u64> {
        check_len("pseudo inner product", u.len(), v.len())?;
        let f = &self.field;
        let terms: Vec<u64> = match &self.weights {
            None => u.iter().zip(v).map(|(x, y)| f.mul(x, y)).collect(),
            Some(w) => {
                check_len("pseudo inner product weights", w.len(), u.len())?;
                w.iter().zip(u).zip(v).map(|((w, x), y)| f.mul(w, &f.mul(x, y))).collect()
            }
        };
        Ok(terms.iter().fold(0, |acc, t| f.add(&acc, t)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InnerBiproduct<P> {
    pub first: P,
    pub second: P,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orthogonality {
    Biorthogonal,
    SemiBiorthogonal,
    Neither,
}

type Elem<P> = <<P as Form>::F as Ring>::Elem;

impl<P: Form> InnerBiproduct<P> {
    pub fn new(first: P, second: P) -> Self {
        Self { first, second }
    }

    pub fn component(&self, i: usize) -> &P {
        if i == 0 {
            &self.first
        } else {
            &self.second
        }
    }

    pub fn eval(&self, u: &Bivector<Elem<P>>, v: &Bivector<Elem<P>>) -> Result<(Elem<P>, Elem<P>)> {
        Ok((self.first.eval(&u.first, &v.first)?, self.second.eval(&u.second, &v.second)?))
    }

    pub fn classify(&self, u: &Bivector<Elem<P>>, v: &Bivector<Elem<P>>) -> Result<Orthogonality> {
        let (a, b) = self.eval(u, v)?;
        let (z1, z2) = (self.first.field().is_zero(&a), self.second.field().is_zero(&b));
        Ok(match (z1, z2) {
            (true, true) => Orthogonality::Biorthogonal,
            (false, false) => Orthogonality::Neither,
            _ => Orthogonality::SemiBiorthogonal,
        })
    }
}

impl InnerBiproduct<InnerProduct> {
    /// `(‖v₁‖², ‖v₂‖²)`
    pub fn binorm_squared(&self, v: &Bivector<Rational>) -> Result<(Rational, Rational)> {
        self.eval(v, v)
    }
}

/// Per-component vector lists; the two lists may differ in length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivectorSet<T> {
    pub first: Vec<Vec<T>>,
    pub second: Vec<Vec<T>>,
}

impl<T: Clone> BivectorSet<T> {
    pub fn from_bivectors(vs: &[Bivector<T>]) -> Self {
        Self {
            first: vs.iter().map(|v| v.first.clone()).collect(),
            second: vs.iter().map(|v| v.second.clone()).collect(),
        }
    }

    pub fn component(&self, i: usize) -> &[Vec<T>] {
        if i == 0 {
            &self.first
        } else {
            &self.second
        }
    }
}

fn axpy(c: &Rational, x: &[Rational], y: &mut [Rational]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += c * xi;
    }
}

fn gram_schmidt_component(ip: &InnerProduct, vs: &[Vec<Rational>], component: usize) -> Result<Vec<Vec<Rational>>> {
    let mut out: Vec<Vec<Rational>> = Vec::with_capacity(vs.len());
    let mut norms: Vec<Rational> = Vec::with_capacity(vs.len());
    for (index, beta) in vs.iter().enumerate() {
        let mut alpha = beta.clone();
        for (prev, n) in out.iter().zip(&norms) {
            let c = ip.eval(beta, prev)? / n;
            axpy(&-c, prev, &mut alpha);
        }
        if alpha.iter().all(Zero::is_zero) {
            return Err(Error::LinearlyDependentInput { index, component });
        }
        let n = ip.eval(&alpha, &alpha)?;
        if n.is_zero() {
            return Err(Error::ZeroNormEncountered { index, component });
        }
        out.push(alpha);
        norms.push(n);
    }
    Ok(out)
}

/// Unnormalized Gram-Schmidt, componentwise: each output is the input minus
/// its projections onto the earlier outputs. With `primitive` each output is
/// rescaled to a primitive integer vector with positive leading entry.
pub fn gram_schmidt_biorthogonalize(
    ip: &InnerBiproduct<InnerProduct>,
    vs: &[Bivector<Rational>],
    primitive: bool,
) -> Result<Vec<Bivector<Rational>>> {
    let set = BivectorSet::from_bivectors(vs);
    let mut a = gram_schmidt_component(&ip.first, &set.first, 0)?;
    let mut b = gram_schmidt_component(&ip.second, &set.second, 1)?;
    if primitive {
        for v in a.iter_mut().chain(b.iter_mut()) {
            Rationals.normalize(v);
        }
    }
    Ok(a.into_iter().zip(b).map(|(x, y)| Bivector::new(x, y)).collect())
}

fn projection_component(ip: &InnerProduct, basis: &[Vec<Rational>], beta: &[Rational], component: usize) -> Result<Vec<Rational>> {
    let mut norms = Vec::with_capacity(basis.len());
    for (i, w) in basis.iter().enumerate() {
        let n = ip.eval(w, w)?;
        if n.is_zero() {
            return Err(Error::BasisNotBiorthogonal(format!(
                "element {i} of component {} has zero norm",
                component + 1
            )));
        }
        for (j, u) in basis.iter().enumerate().skip(i + 1) {
            if !ip.eval(w, u)?.is_zero() {
                return Err(Error::BasisNotBiorthogonal(format!(
                    "elements {i} and {j} of component {} are not orthogonal",
                    component + 1
                )));
            }
        }
        norms.push(n);
    }
    let mut alpha = vec![Rational::zero(); beta.len()];
    for (w, n) in basis.iter().zip(&norms) {
        check_len("projection", w.len(), beta.len())?;
        let c = ip.eval(beta, w)? / n;
        axpy(&c, w, &mut alpha);
    }
    Ok(alpha)
}

/// Orthogonal projection of `beta` onto the span of a biorthogonal basis:
/// `α = Σ (β|w) / ‖w‖² · w` per component.
pub fn best_biapproximation(
    ip: &InnerBiproduct<InnerProduct>,
    basis: &BivectorSet<Rational>,
    beta: &Bivector<Rational>,
) -> Result<Bivector<Rational>> {
    Ok(Bivector::new(
        projection_component(&ip.first, &basis.first, &beta.first, 0)?,
        projection_component(&ip.second, &basis.second, &beta.second, 1)?,
    ))
}

fn complement_component(
    ip: &InnerProduct,
    s: &[Vec<Rational>],
    family: SpaceFamily,
) -> Result<Vec<Vec<Rational>>> {
    let n = match family {
        SpaceFamily::RowSpace(n) => n,
        SpaceFamily::BoundedPolys(d) => d + 1,
        other => return Err(Error::UnsupportedComponentFamily(other.to_string())),
    };
    let unit = |i: usize| {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        e
    };
    let mut data = Vec::with_capacity(s.len() * n);
    for v in s {
        check_len("complement", v.len(), n)?;
        for i in 0..n {
            data.push(ip.eval(&unit(i), v)?);
        }
    }
    Ok(Matrix::from_vec(s.len(), n, data)?.nullspace(&Rationals))
}

/// Basis of `{v : ⟨v, s⟩ = 0 for all s ∈ S}` in each component. Only row
/// spaces and bounded-degree polynomial spaces are supported.
pub fn biorthogonal_bicomplement(
    ip: &InnerBiproduct<InnerProduct>,
    s: &BivectorSet<Rational>,
    ambient: (SpaceFamily, SpaceFamily),
) -> Result<BivectorSet<Rational>> {
    Ok(BivectorSet {
        first: complement_component(&ip.first, &s.first, ambient.0)?,
        second: complement_component(&ip.second, &s.second, ambient.1)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PseudoApprox {
    Found(Vec<u64>),
    /// The sum vanished; the caller should try another basis.
    Zero,
}

/// `Σ ⟨β, cᵢ⟩ cᵢ` over GF(p), literally.
pub fn pseudo_best_approximation(ip: &PseudoInnerProduct, basis: &[Vec<u64>], beta: &[u64]) -> Result<PseudoApprox> {
    let f = &ip.field;
    let mut acc = vec![0; beta.len()];
    for c in basis {
        check_len("pseudo approximation", c.len(), beta.len())?;
        let k = ip.eval(beta, c)?;
        for (a, x) in acc.iter_mut().zip(c) {
            *a = f.add(a, &f.mul(&k, x));
        }
    }
    Ok(if acc.iter().all(|&x| x == 0) {
        PseudoApprox::Zero
    } else {
        PseudoApprox::Found(acc)
    })
}
