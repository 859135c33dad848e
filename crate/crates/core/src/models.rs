//! Markov bichains and Leontief input-output models.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bimatrix::{Bimatrix, Bivector};
use crate::error::{shape, Error, Result};
use crate::matrix::Matrix;
use crate::neutro::{split_matrix, unsplit_matrix};
use crate::scalar::{Neutro, Neutrosophic, Rational, Rationals};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainMode {
    /// Nonnegative entries, every column sums to one.
    #[default]
    Strict,
    /// Entries and column sums in `[-1, 1]`; states are not required to be
    /// probability vectors.
    Relaxed,
}

fn violation(msg: String) -> Error {
    Error::InvariantViolation(msg)
}

fn column_sums(m: &Matrix<Rational>) -> Vec<Rational> {
    (0..m.cols()).map(|j| m.col(j).iter().sum()).collect()
}

fn check_transition(p: &Matrix<Rational>, mode: ChainMode, component: usize) -> Result<()> {
    p.require_square()?;
    let one = Rational::one();
    match mode {
        ChainMode::Strict => {
            if let Some(x) = p.entries().iter().find(|x| x.is_negative()) {
                return Err(violation(format!("component {component}: negative transition entry {x}")));
            }
            if let Some((j, s)) = column_sums(p).into_iter().enumerate().find(|(_, s)| *s != one) {
                return Err(violation(format!("component {component}: column {} sums to {s}", j + 1)));
            }
        }
        ChainMode::Relaxed => {
            let in_range = |x: &Rational| x.abs() <= one;
            if let Some(x) = p.entries().iter().find(|x| !in_range(x)) {
                return Err(violation(format!("component {component}: entry {x} outside [-1, 1]")));
            }
            if let Some((j, s)) = column_sums(p).into_iter().enumerate().find(|(_, s)| !in_range(s)) {
                return Err(violation(format!("component {component}: column {} sums to {s}", j + 1)));
            }
        }
    }
    Ok(())
}

fn check_probability(x: &[Rational], component: usize) -> Result<()> {
    if x.iter().any(|v| v.is_negative()) || x.iter().sum::<Rational>() != Rational::one() {
        return Err(violation(format!("component {component}: state is not a probability vector")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionBimatrix {
    p: Bimatrix<Rational>,
    mode: ChainMode,
}

impl TransitionBimatrix {
    pub fn new(p: Bimatrix<Rational>, mode: ChainMode) -> Result<Self> {
        check_transition(&p.first, mode, 1)?;
        check_transition(&p.second, mode, 2)?;
        Ok(Self { p, mode })
    }

    pub fn matrix(&self) -> &Bimatrix<Rational> {
        &self.p
    }

    pub fn mode(&self) -> ChainMode {
        self.mode
    }

    /// `x ↦ P₁x₁ ∪ P₂x₂`. In strict mode both the input and the output must
    /// be probability bivectors.
    pub fn step(&self, x: &Bivector<Rational>) -> Result<Bivector<Rational>> {
        let f = Rationals;
        if self.mode == ChainMode::Strict {
            check_probability(&x.first, 1)?;
            check_probability(&x.second, 2)?;
        }
        let y = Bivector::new(self.p.first.mul_vec(&f, &x.first)?, self.p.second.mul_vec(&f, &x.second)?);
        if self.mode == ChainMode::Strict {
            check_probability(&y.first, 1)?;
            check_probability(&y.second, 2)?;
        }
        Ok(y)
    }

    /// Lazily evolving states `x⁽¹⁾, x⁽²⁾, …`; stops at the first error.
    pub fn states(&self, x: Bivector<Rational>) -> States<'_> {
        States {
            chain: self,
            current: Some(x),
        }
    }

    /// `x⁽ⁿ⁾`. `budget` caps the number of steps taken; exceeding it is an
    /// error rather than a partial result.
    pub fn iterate(&self, x: &Bivector<Rational>, n: usize, budget: Option<usize>) -> Result<Bivector<Rational>> {
        if let Some(b) = budget.filter(|&b| n > b) {
            return Err(violation(format!("{n} steps requested, budget is {b}")));
        }
        let mut cur = x.clone();
        for _ in 0..n {
            cur = self.step(&cur)?;
        }
        Ok(cur)
    }

    /// Stationary distributions per component, one per closed communicating
    /// class, ordered by the smallest state in the class. Every stationary
    /// distribution is a convex combination of these.
    pub fn stationary(&self) -> Result<(Vec<Vec<Rational>>, Vec<Vec<Rational>>)> {
        if self.mode != ChainMode::Strict {
            return Err(violation("stationary bivectors need a strict transition bimatrix".into()));
        }
        Ok((stationary_component(&self.p.first)?, stationary_component(&self.p.second)?))
    }
}

pub struct States<'a> {
    chain: &'a TransitionBimatrix,
    current: Option<Bivector<Rational>>,
}

impl Iterator for States<'_> {
    type Item = Result<Bivector<Rational>>;

    fn next(&mut self) -> Option<Self::Item> {
        let cur = self.current.take()?;
        let next = self.chain.step(&cur);
        if let Ok(y) = &next {
            self.current = Some(y.clone());
        }
        Some(next)
    }
}

/// Reachability closure for the column-stochastic convention: `j → i` when
/// `p[i][j] > 0`.
fn reachability(p: &Matrix<Rational>) -> Vec<Vec<bool>> {
    let n = p.rows();
    let mut r: Vec<Vec<bool>> = (0..n).map(|j| (0..n).map(|i| i == j || p[(i, j)].is_positive()).collect()).collect();
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                let via = r[k].clone();
                for (dst, &src) in r[i].iter_mut().zip(&via) {
                    *dst |= src;
                }
            }
        }
    }
    r
}

fn stationary_component(p: &Matrix<Rational>) -> Result<Vec<Vec<Rational>>> {
    let f = Rationals;
    let n = p.require_square()?;
    let reach = reachability(p);
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let class: Vec<usize> = (0..n).filter(|&t| reach[s][t] && reach[t][s]).collect();
        for &t in &class {
            seen[t] = true;
        }
        let closed = (0..n).all(|t| !reach[s][t] || class.contains(&t));
        if !closed {
            continue;
        }
        let sub = Matrix::from_fn(class.len(), class.len(), |a, b| p[(class[a], class[b])].clone());
        let kernel = sub.shift(&f, &Rational::one())?.nullspace(&f);
        let [v] = kernel.as_slice() else {
            return Err(violation(format!("closed class has a {}-dimensional fixed space", kernel.len())));
        };
        let total: Rational = v.iter().sum();
        let mut x = vec![Rational::zero(); n];
        for (a, &t) in class.iter().enumerate() {
            x[t] = &v[a] / &total;
        }
        out.push(x);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedSolution {
    /// Basis of the solutions of `(I - A)p = 0`.
    pub prices: Vec<Vec<Rational>>,
    /// Smallest `m ≤ n²` with `A^m` entrywise positive, if any.
    pub positive_power: Option<usize>,
    pub warning: Option<String>,
}

/// Closed exchange model `Ap = p` for a column-stochastic `A`.
pub fn leontief_closed(a: &Matrix<Rational>) -> Result<ClosedSolution> {
    let f = Rationals;
    let n = a.require_square()?;
    check_transition(a, ChainMode::Strict, 1)
        .map_err(|_| violation("exchange matrix must be nonnegative with unit column sums".into()))?;
    let prices = Matrix::identity(&f, n).sub(&f, a)?.nullspace(&f);
    let mut power = a.clone();
    let mut positive_power = None;
    for m in 1..=n * n {
        if power.entries().iter().all(|x| x.is_positive()) {
            positive_power = Some(m);
            break;
        }
        power = power.mul(&f, a)?;
    }
    let warning = match positive_power {
        Some(_) => {
            let positive = prices.len() == 1 && prices[0].iter().all(|x| x.is_positive());
            if !positive {
                return Err(violation("positive power but price ray is not unique and positive".into()));
            }
            None
        }
        None => Some(format!("A^m never positive, solution space dimension {}", prices.len())),
    };
    Ok(ClosedSolution {
        prices,
        positive_power,
        warning,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenSolution {
    pub production: Vec<Rational>,
    pub inverse: Matrix<Rational>,
    /// `(I - C)⁻¹ ≥ 0` entrywise.
    pub productive: bool,
    /// `C ≥ 0` and every row sum is below one.
    pub row_sums_below_one: bool,
    /// `C ≥ 0` and every column sum is below one.
    pub col_sums_below_one: bool,
}

/// Open production model `(I - C)x = d`.
pub fn leontief_open(c: &Matrix<Rational>, d: &[Rational]) -> Result<OpenSolution> {
    let f = Rationals;
    let n = c.require_square()?;
    if d.len() != n {
        return Err(shape("leontief open", format!("demand of length {} for {n} sectors", d.len())));
    }
    let m = Matrix::identity(&f, n).sub(&f, c)?;
    let inverse = m.inverse(&f)?.ok_or_else(|| Error::SingularSystem { rank: m.rank(&f), size: n })?;
    let production = inverse.mul_vec(&f, d)?;
    let nonneg = c.entries().iter().all(|x| !x.is_negative());
    let one = Rational::one();
    Ok(OpenSolution {
        production,
        productive: inverse.entries().iter().all(|x| !x.is_negative()),
        row_sums_below_one: nonneg && (0..n).all(|i| c.row(i).iter().sum::<Rational>() < one),
        col_sums_below_one: nonneg && column_sums(c).iter().all(|s| *s < one),
        inverse,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Productivity {
    Productive,
    NonProductive,
    Indeterminate,
}

impl fmt::Display for Productivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Productive => "productive",
            Self::NonProductive => "non-productive",
            Self::Indeterminate => "indeterminate",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodClass {
    pub class: Productivity,
    /// `(I - c)⁻¹` over Q(I) when both splits are invertible.
    pub inverse: Option<Matrix<Neutro>>,
    /// The split (0 or 1) whose `I - c` is singular, if exactly one is.
    pub singular_split: Option<usize>,
    /// `(I - c)⁻¹ d` when a demand was given and the inverse exists.
    pub production: Option<Vec<Neutro>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimodelClass {
    pub first: PeriodClass,
    pub second: PeriodClass,
}

impl BimodelClass {
    /// `X` when both periods agree, `quasi-X/Y` otherwise.
    pub fn label(&self) -> String {
        let (a, b) = (self.first.class, self.second.class);
        if a == b {
            a.to_string()
        } else {
            format!("quasi-{a}/{b}")
        }
    }
}

fn classify_period(c: &Matrix<Neutro>, d: Option<&[Neutro]>, component: usize) -> Result<PeriodClass> {
    let f = Rationals;
    let n = c.require_square()?;
    let m = Matrix::identity(&Neutrosophic, n).sub(&Neutrosophic, c)?;
    let (m0, m1) = split_matrix(&m);
    let (i0, i1) = (m0.inverse(&f)?, m1.inverse(&f)?);
    let (i0, i1) = match (i0, i1) {
        (None, None) => return Err(Error::BothSplitsSingular { component }),
        (None, Some(_)) | (Some(_), None) => {
            return Ok(PeriodClass {
                class: Productivity::Indeterminate,
                inverse: None,
                singular_split: Some(if m0.rank(&f) < n { 0 } else { 1 }),
                production: None,
            })
        }
        (Some(a), Some(b)) => (a, b),
    };
    let inverse = unsplit_matrix(&i0, &i1)?;
    let nonneg = |m: &Matrix<Rational>| m.entries().iter().all(|x| !x.is_negative());
    let class = if nonneg(&i0) && nonneg(&i1) {
        Productivity::Productive
    } else if inverse.entries().iter().any(|x| !x.indet.is_zero()) {
        Productivity::Indeterminate
    } else {
        Productivity::NonProductive
    };
    let production = match d {
        Some(d) if d.len() != n => {
            return Err(shape("leontief classify", format!("demand of length {} for {n} sectors", d.len())))
        }
        Some(d) => Some(inverse.mul_vec(&Neutrosophic, d)?),
        None => None,
    };
    Ok(PeriodClass {
        class,
        inverse: Some(inverse),
        singular_split: None,
        production,
    })
}

/// Classifies each period of a neutrosophic consumption bimatrix. Within a
/// period, productive takes precedence over indeterminate, which takes
/// precedence over non-productive.
pub fn neutro_leontief_classify(c: &Bimatrix<Neutro>, demand: Option<&Bivector<Neutro>>) -> Result<BimodelClass> {
    Ok(BimodelClass {
        first: classify_period(&c.first, demand.map(|d| d.first.as_slice()), 1)?,
        second: classify_period(&c.second, demand.map(|d| d.second.as_slice()), 2)?,
    })
}
