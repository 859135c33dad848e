//! One handler per subcommand: decode the input documents, call the library,
//! encode the result as a document plus a text rendering.

use std::fmt;

use linbialg::bicode::{
    parse_biword, parse_word, render_biword, render_word, BasisPolicy, Bicode, DecodePolicy, DEFAULT_ENUM_CAP,
};
use linbialg::bimatrix::{
    bidiagonalize, eigen_bivalues, jordan_biform, BivalueClass, ComponentEigen, Convention, Determinant,
};
use linbialg::bispace::{
    best_biapproximation, biorthogonal_bicomplement, gram_schmidt_biorthogonalize, BivectorSet, InnerBiproduct,
    InnerProduct, PseudoInnerProduct,
};
use linbialg::io::{
    from_json, parse_rational_list, BimatrixDoc, BivectorDoc, BivectorSetDoc, CodeDoc,
    DecodeReportDoc, Fuzzy, MatrixFile, ModelDoc, ScalarCodec, ScalarKind,
};
use linbialg::models::{
    leontief_closed, leontief_open, neutro_leontief_classify, PeriodClass, TransitionBimatrix,
};
use linbialg::neutro::{fuzzy_compose, neutro_char_poly, neutro_det, neutro_eigenvalues, neutro_matmul};
use linbialg::scalar::{Neutrosophic, PrimeField, Rational, Rationals, Ring, RootFinding};
use linbialg::{Bimatrix, Bivector, Error};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{BicodeCmd, BimatrixCmd, BispaceCmd, Command, FuzzyCmd, LeontiefCmd, MarkovCmd, NeutroCmd};
use crate::render;

pub const ENUM_CAP_VAR: &str = "BIALG_MAX_ENUM";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    /// An input document that failed to parse.
    Input { file: String, source: Error },
    Library(Error),
}

impl CliError {
    /// 2 for usage and parse errors, 1 for everything the library rejects.
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) | Self::Input { .. } => 2,
            Self::Library(
                Error::Parse { .. } | Error::Document { .. } | Error::ScalarKindMismatch { .. } | Error::UnknownFamily(_),
            ) => 2,
            Self::Library(_) => 1,
        }
    }
}

/// `NotSquare { rows: 2, cols: 3 }` → `NotSquare`.
fn variant_name(e: &Error) -> String {
    format!("{e:?}").chars().take_while(|c| c.is_alphanumeric()).collect()
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(m) => write!(f, "error[Usage]: {m}"),
            Self::Input { file, source } => write!(f, "error[{}]: {file}: {source}", variant_name(source)),
            Self::Library(e) => write!(f, "error[{}]: {e}", variant_name(e)),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::Library(e)
    }
}

type R<T> = Result<T, CliError>;

/// Where input documents come from.
pub trait Source {
    fn read(&self, name: &str) -> R<String>;
}

pub struct Files;

impl Source for Files {
    fn read(&self, name: &str) -> R<String> {
        std::fs::read_to_string(name).map_err(|e| CliError::Usage(format!("cannot read {name}: {e}")))
    }
}

fn load<T: DeserializeOwned>(src: &dyn Source, name: &str) -> R<T> {
    from_json(&src.read(name)?).map_err(|source| CliError::Input {
        file: name.to_string(),
        source,
    })
}

pub struct Output {
    pub doc: Value,
    pub text: String,
    /// Print `doc` (an array) one element per line.
    pub stream: bool,
}

impl Output {
    fn new(doc: Value, text: impl Into<String>) -> Self {
        Self {
            doc,
            text: text.into(),
            stream: false,
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("documents serialize")
}

/// A ring whose elements also have literals.
pub trait Scalars: Ring + ScalarCodec<Elem = <Self as Ring>::Elem> {}
impl<T: Ring + ScalarCodec<Elem = <T as Ring>::Elem>> Scalars for T {}

fn wrong_kind(op: &str, kind: ScalarKind) -> CliError {
    CliError::Library(Error::ScalarKindMismatch {
        expected: format!("a scalar kind supported by {op}"),
        found: kind.to_string(),
    })
}

/// Runs `$body` with `$f` bound to the field named by `$kind`.
macro_rules! over_fields {
    ($kind:expr, $op:expr, |$f:ident| $body:expr) => {
        match $kind {
            ScalarKind::Rational => {
                let $f = &Rationals;
                $body
            }
            ScalarKind::Gf(p) => {
                let $f = &PrimeField::new(p)?;
                $body
            }
            k => Err(wrong_kind($op, k)),
        }
    };
}

/// As `over_fields`, plus the neutrosophic ring.
macro_rules! over_rings {
    ($kind:expr, $op:expr, |$f:ident| $body:expr) => {
        match $kind {
            ScalarKind::Neutrosophic => {
                let $f = &Neutrosophic;
                $body
            }
            k => over_fields!(k, $op, |$f| $body),
        }
    };
}

pub fn run(cmd: &Command, src: &dyn Source) -> R<Output> {
    match cmd {
        Command::Bimatrix(c) => bimatrix(c, src),
        Command::Bispace(c) => bispace(c, src),
        Command::Bicode(c) => bicode(c, src),
        Command::Markov(c) => markov(c, src),
        Command::Leontief(c) => leontief(c, src),
        Command::Neutro(c) => neutro(c, src),
        Command::Fuzzy(c) => fuzzy(c, src),
        Command::Examples(_) => Err(CliError::Usage("examples cannot run other examples".into())),
    }
}

// bimatrix

fn bimatrix(cmd: &BimatrixCmd, src: &dyn Source) -> R<Output> {
    match cmd {
        BimatrixCmd::Mul { a, b } | BimatrixCmd::Add { a, b } => {
            let (x, y): (BimatrixDoc, BimatrixDoc) = (load(src, a)?, load(src, b)?);
            let mul = matches!(cmd, BimatrixCmd::Mul { .. });
            over_rings!(x.kind()?, "bimatrix arithmetic", |f| binary(f, &x, &y, mul))
        }
        BimatrixCmd::Det { a } => {
            let d: BimatrixDoc = load(src, a)?;
            over_rings!(d.kind()?, "determinant", |f| det(f, &d))
        }
        BimatrixCmd::Charpoly { a } => {
            let d: BimatrixDoc = load(src, a)?;
            over_rings!(d.kind()?, "charpoly", |f| charpoly(f, &d))
        }
        BimatrixCmd::Eigen { a } => {
            let d: BimatrixDoc = load(src, a)?;
            over_fields!(d.kind()?, "eigen", |f| eigen(f, &d))
        }
        BimatrixCmd::Diag { a } => {
            let d: BimatrixDoc = load(src, a)?;
            over_fields!(d.kind()?, "diag", |f| diag(f, &d))
        }
        BimatrixCmd::Jordan { a, super_diagonal } => {
            let d: BimatrixDoc = load(src, a)?;
            let conv = if *super_diagonal {
                Convention::SuperDiagonal
            } else {
                Convention::SubDiagonal
            };
            over_fields!(d.kind()?, "jordan", |f| jordan(f, &d, conv))
        }
        BimatrixCmd::Minpoly { a } => {
            let d: BimatrixDoc = load(src, a)?;
            over_fields!(d.kind()?, "minpoly", |f| minpoly(f, &d))
        }
    }
}

fn bimatrix_output<C: ScalarCodec>(c: &C, m: &Bimatrix<C::Elem>) -> Output {
    Output::new(to_value(&BimatrixDoc::encode(c, m)), render::bimatrix(c, m))
}

fn binary<F: Scalars>(f: &F, x: &BimatrixDoc, y: &BimatrixDoc, mul: bool) -> R<Output> {
    let (a, b) = (x.decode(f)?, y.decode(f)?);
    let c = if mul { a.mul(f, &b)? } else { a.add(f, &b)? };
    Ok(bimatrix_output(f, &c))
}

fn det<F: Scalars + Determinant>(f: &F, d: &BimatrixDoc) -> R<Output> {
    let (x, y) = d.decode(f)?.determinant(f)?;
    let (x, y) = (f.render_literal(&x), f.render_literal(&y));
    let text = format!("det = {x} ∪ {y}");
    Ok(Output::new(json!({"scalar_kind": f.kind().to_string(), "first": x, "second": y}), text))
}

fn poly_pair_doc<F: Scalars>(f: &F, p: &linbialg::Bipolynomial<<F as Ring>::Elem>) -> Value {
    json!({
        "scalar_kind": f.kind().to_string(),
        "first": p.first.render(f, "x"),
        "second": p.second.render(f, "x"),
        "coefficients": {
            "first": render::literals(f, p.first.coeffs()),
            "second": render::literals(f, p.second.coeffs()),
        },
    })
}

fn charpoly<F: Scalars + Determinant>(f: &F, d: &BimatrixDoc) -> R<Output> {
    let p = d.decode(f)?.char_bipolynomial(f)?;
    Ok(Output::new(poly_pair_doc(f, &p), p.render(f)))
}

fn minpoly<F: Scalars + RootFinding>(f: &F, d: &BimatrixDoc) -> R<Output> {
    let p = d.decode(f)?.minimal_bipolynomial(f)?;
    Ok(Output::new(poly_pair_doc(f, &p), p.render(f)))
}

fn eigen_component<F: Scalars + RootFinding>(f: &F, c: &ComponentEigen<<F as Ring>::Elem>) -> Value {
    let spaces: Vec<Value> = c
        .spaces
        .iter()
        .map(|s| {
            let vectors: Vec<Vec<String>> = s.vectors.iter().map(|v| render::literals(f, v)).collect();
            json!({"value": f.render_literal(&s.value), "multiplicity": s.multiplicity, "vectors": vectors})
        })
        .collect();
    json!({
        "char_poly": c.char_poly.render(f, "x"),
        "values": render::literals(f, &c.values()),
        "spaces": spaces,
        "rootless": c.rootless.render(f, "x"),
    })
}

fn eigen<F: Scalars + RootFinding>(f: &F, d: &BimatrixDoc) -> R<Output> {
    let m = d.decode(f)?;
    let e = eigen_bivalues(f, &m)?;
    let (class, rootless) = match e.class {
        BivalueClass::Full => ("full", None),
        BivalueClass::Semi { rootless } => ("semi", Some(rootless + 1)),
        BivalueClass::None => ("none", None),
    };
    let mut text = vec![format!(
        "characteristic bipolynomial: {} ∪ {}",
        e.first.char_poly.render(f, "x"),
        e.second.char_poly.render(f, "x")
    )];
    let values = |c: &ComponentEigen<<F as Ring>::Elem>| render::vector(f, &c.values());
    text.push(match e.class {
        BivalueClass::Full => format!("characteristic bivalues: {} ∪ {}", values(&e.first), values(&e.second)),
        BivalueClass::Semi { rootless } => format!(
            "semi characteristic bivalues: component {} has none in the base field, component {} has {}",
            rootless + 1,
            2 - rootless,
            values(e.component(1 - rootless))
        ),
        BivalueClass::None => "no characteristic bivalues".into(),
    });
    for (i, c) in [&e.first, &e.second].into_iter().enumerate() {
        for s in &c.spaces {
            text.push(format!(
                "component {}: {} (multiplicity {}) eigenvectors {}",
                i + 1,
                f.render_literal(&s.value),
                s.multiplicity,
                render::list(f, &s.vectors)
            ));
        }
    }
    let doc = json!({
        "scalar_kind": f.kind().to_string(),
        "class": class,
        "rootless_component": rootless,
        "first": eigen_component(f, &e.first),
        "second": eigen_component(f, &e.second),
    });
    Ok(Output::new(doc, text.join("\n")))
}

fn diag<F: Scalars + RootFinding>(f: &F, d: &BimatrixDoc) -> R<Output> {
    let m = d.decode(f)?;
    let bd = bidiagonalize(f, &m)?;
    let holds = m.mul(f, &bd.p)? == bd.p.mul(f, &bd.d)?;
    let text = format!(
        "D =\n{}\nP =\n{}\nAP = PD: {holds}",
        render::bimatrix(f, &bd.d),
        render::bimatrix(f, &bd.p)
    );
    let doc = json!({
        "d": BimatrixDoc::encode(f, &bd.d),
        "p": BimatrixDoc::encode(f, &bd.p),
        "ap_equals_pd": holds,
    });
    Ok(Output::new(doc, text))
}

fn jordan<F: Scalars + RootFinding>(f: &F, d: &BimatrixDoc, conv: Convention) -> R<Output> {
    let m = d.decode(f)?;
    let j = jordan_biform(f, &m, conv)?;
    let blocks = j.report(f).to_string();
    let fixed = j.form == m;
    let text = format!("blocks: {blocks}\n{}\nalready in Jordan biform: {fixed}", render::bimatrix(f, &j.form));
    let doc = json!({
        "convention": match conv {
            Convention::SubDiagonal => "sub-diagonal",
            Convention::SuperDiagonal => "super-diagonal",
        },
        "blocks": blocks,
        "form": BimatrixDoc::encode(f, &j.form),
        "fixed_point": fixed,
    });
    Ok(Output::new(doc, text))
}

// bispace

fn inner_biproduct(ip1: &str, ip2: &str) -> R<InnerBiproduct<InnerProduct>> {
    Ok(InnerBiproduct::new(ip1.parse()?, ip2.parse()?))
}

fn pair_up(s: &BivectorSet<Rational>) -> R<Vec<Bivector<Rational>>> {
    if s.first.len() != s.second.len() {
        return Err(Error::ShapeMismatch {
            op: "bivector set",
            detail: format!("{} first and {} second components", s.first.len(), s.second.len()),
        }
        .into());
    }
    Ok(s.first.iter().zip(&s.second).map(|(a, b)| Bivector::new(a.clone(), b.clone())).collect())
}

/// Coefficient vectors under an `L2` product read as polynomials.
fn component_text(ip: &InnerProduct, v: &[Rational]) -> String {
    match ip {
        InnerProduct::L2 { .. } => render::as_poly(v),
        _ => render::vector(&Rationals, v),
    }
}

fn set_text(ip: &InnerBiproduct<InnerProduct>, s: &BivectorSet<Rational>) -> String {
    let side = |i: usize| {
        let parts: Vec<String> = s.component(i).iter().map(|v| component_text(ip.component(i), v)).collect();
        format!("{{{}}}", parts.join(", "))
    };
    if s.first.len() == s.second.len() {
        let lines: Vec<String> = s
            .first
            .iter()
            .zip(&s.second)
            .map(|(a, b)| format!("{} ∪ {}", component_text(&ip.first, a), component_text(&ip.second, b)))
            .collect();
        if !lines.is_empty() {
            return lines.join("\n");
        }
    }
    format!("{} ∪ {}", side(0), side(1))
}

fn bispace(cmd: &BispaceCmd, src: &dyn Source) -> R<Output> {
    let q = &Rationals;
    match cmd {
        BispaceCmd::GramSchmidt { ip1, ip2, primitive, set } => {
            let ip = inner_biproduct(ip1, ip2)?;
            let s = load::<BivectorSetDoc>(src, set)?.decode(q)?;
            let out = gram_schmidt_biorthogonalize(&ip, &pair_up(&s)?, *primitive)?;
            let out = BivectorSet::from_bivectors(&out);
            Ok(Output::new(to_value(&BivectorSetDoc::encode(q, &out)), set_text(&ip, &out)))
        }
        BispaceCmd::Project { ip1, ip2, basis, beta } => {
            let ip = inner_biproduct(ip1, ip2)?;
            let basis = load::<BivectorSetDoc>(src, basis)?.decode(q)?;
            let beta = load::<BivectorDoc>(src, beta)?.decode(q)?;
            let alpha = best_biapproximation(&ip, &basis, &beta)?;
            let text = format!(
                "{} ∪ {}",
                component_text(&ip.first, &alpha.first),
                component_text(&ip.second, &alpha.second)
            );
            Ok(Output::new(to_value(&BivectorDoc::encode(q, &alpha)), text))
        }
        BispaceCmd::Complement { ip1, ip2, ambient1, ambient2, set } => {
            let ip = inner_biproduct(ip1, ip2)?;
            let s = load::<BivectorSetDoc>(src, set)?.decode(q)?;
            let family = |given: &Option<String>, vs: &[Vec<Rational>], i: usize| -> R<_> {
                match (given, vs.first()) {
                    (Some(g), _) => Ok(g.parse()?),
                    (None, Some(v)) => Ok(linbialg::bimatrix::SpaceFamily::RowSpace(v.len())),
                    (None, None) => Err(CliError::Usage(format!("component {} is empty; pass --ambient{}", i, i))),
                }
            };
            let ambient = (family(ambient1, &s.first, 1)?, family(ambient2, &s.second, 2)?);
            let out = biorthogonal_bicomplement(&ip, &s, ambient)?;
            let text = format!("complement: {}", set_text(&ip, &out).replace('\n', "; "));
            Ok(Output::new(to_value(&BivectorSetDoc::encode(q, &out)), text))
        }
        BispaceCmd::PseudoIp { ip1, ip2, u, v } => {
            let du: BivectorDoc = load(src, u)?;
            let ScalarKind::Gf(p) = du.scalar_kind.parse()? else {
                return Err(wrong_kind("pseudo-ip", du.scalar_kind.parse()?));
            };
            let field = PrimeField::new(p)?;
            let ip = InnerBiproduct::new(PseudoInnerProduct::parse(field, ip1)?, PseudoInnerProduct::parse(field, ip2)?);
            let a = du.decode(&field)?;
            let b = match v {
                Some(v) => load::<BivectorDoc>(src, v)?.decode(&field)?,
                None => a.clone(),
            };
            let (x, y) = ip.eval(&a, &b)?;
            let isotropic = |i: usize| a == b && [x, y][i] == 0 && a.component(i).iter().any(|&c| c != 0);
            let text = format!("<u, v> = {x} ∪ {y} (mod {p})");
            let doc = json!({
                "scalar_kind": format!("gf:{p}"),
                "value": [x.to_string(), y.to_string()],
                "zero_on_nonzero": [isotropic(0), isotropic(1)],
            });
            Ok(Output::new(doc, text))
        }
    }
}

// bicode

fn load_code(src: &dyn Source, name: &str) -> R<Bicode> {
    Ok(load::<CodeDoc>(src, name)?.build()?)
}

fn code_output(c: &Bicode) -> Output {
    let ((n1, k1), (n2, k2)) = c.params();
    let check = c.check_bipolynomial().map(|h| h.render(&c.field));
    let mut text = format!(
        "C({n1}, {k1}) ∪ C({n2}, {k2}) over GF({})\nG =\n{}\nH =\n{}",
        c.field.modulus(),
        render::bimatrix(&c.field, &c.generator()),
        render::bimatrix(&c.field, &c.parity())
    );
    if let Some(h) = &check {
        text.push_str(&format!("\ncheck bipolynomial: {h}"));
    }
    let doc = json!({
        "params": [[n1, k1], [n2, k2]],
        "consistent": c.is_consistent(),
        "check_bipolynomial": check,
        "code": CodeDoc::encode(c),
    });
    Output::new(doc, text)
}

pub fn enum_cap() -> R<u64> {
    match std::env::var(ENUM_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{ENUM_CAP_VAR}={v} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn basis_policy(field: &PrimeField, bases: &[String]) -> R<BasisPolicy> {
    if bases.is_empty() {
        return Ok(BasisPolicy::Walk);
    }
    let parsed = bases
        .iter()
        .map(|b| b.split(';').map(|w| parse_word(field, w)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BasisPolicy::Explicit(parsed))
}

fn bicode(cmd: &BicodeCmd, src: &dyn Source) -> R<Output> {
    match cmd {
        BicodeCmd::Build { code } => Ok(code_output(&load_code(src, code)?)),
        BicodeCmd::Dual { code } => Ok(code_output(&load_code(src, code)?.dual())),
        BicodeCmd::Encode { code, message } => {
            let c = load_code(src, code)?;
            let msg = parse_biword(&c.field, message)?;
            let w = c.encode(&msg)?;
            let (m, w) = (render_biword(&msg), render_biword(&w));
            Ok(Output::new(json!({"message": m, "codeword": w}), format!("{m} -> {w}")))
        }
        BicodeCmd::Syndrome { code, word } => {
            let c = load_code(src, code)?;
            let y = parse_biword(&c.field, word)?;
            let s = c.syndrome(&y)?;
            let (y, v) = (render_biword(&y), render_biword(&s.value));
            let text = format!(
                "syndrome of {y}: {v} ({})",
                if s.is_codeword { "bicode word" } else { "not a bicode word" }
            );
            Ok(Output::new(json!({"word": y, "syndrome": v, "is_codeword": s.is_codeword}), text))
        }
        BicodeCmd::Enumerate { code } => {
            let c = load_code(src, code)?;
            let (a, b) = c.enumerate(enum_cap()?)?;
            let words = |ws: &[Vec<u64>]| ws.iter().map(|w| render_word(w)).collect::<Vec<_>>();
            let (a, b) = (words(&a), words(&b));
            let text = format!(
                "{} ∪ {} bicode words\nC1: {}\nC2: {}",
                a.len(),
                b.len(),
                a.join(" "),
                b.join(" ")
            );
            Ok(Output::new(json!({"counts": [a.len(), b.len()], "first": a, "second": b}), text))
        }
        BicodeCmd::Decode { code, word, basis1, basis2, best } => {
            let c = load_code(src, code)?;
            let beta = parse_biword(&c.field, word)?;
            let policy = DecodePolicy {
                first: basis_policy(&c.field, basis1)?,
                second: basis_policy(&c.field, basis2)?,
                best_of_best: *best,
            };
            let r = c.decode(&beta, &policy)?;
            let doc = DecodeReportDoc::from(&r);
            let text = format!(
                "received: {}\ncase: {}\nbases tried: {} ∪ {}\nresult: {}\ndistance: {} ∪ {} (total {})",
                render_biword(&beta),
                doc.case,
                doc.bases_tried[0],
                doc.bases_tried[1],
                doc.result,
                doc.distance[0],
                doc.distance[1],
                doc.distance[2]
            );
            Ok(Output::new(to_value(&doc), text))
        }
    }
}

// markov

fn load_chain(src: &dyn Source, name: &str) -> R<(TransitionBimatrix, Option<Bivector<Rational>>)> {
    match load::<ModelDoc>(src, name)? {
        ModelDoc::Markov { p, x0, mode } => {
            let t = TransitionBimatrix::new(p.decode(&Rationals)?, mode)?;
            let x = x0.map(|x| x.decode(&Rationals)).transpose()?;
            Ok((t, x))
        }
        _ => Err(CliError::Usage(format!("{name}: expected a model of kind markov"))),
    }
}

fn state_text(k: usize, x: &Bivector<Rational>) -> String {
    format!("x({k}) = {} ∪ {}", render::vector(&Rationals, &x.first), render::vector(&Rationals, &x.second))
}

fn markov(cmd: &MarkovCmd, src: &dyn Source) -> R<Output> {
    let q = &Rationals;
    let need_x0 = |name: &str, x: Option<Bivector<Rational>>| {
        x.ok_or_else(|| CliError::Usage(format!("{name}: the model has no x0")))
    };
    match cmd {
        MarkovCmd::Step { model } => {
            let (t, x) = load_chain(src, model)?;
            let y = t.step(&need_x0(model, x)?)?;
            Ok(Output::new(to_value(&BivectorDoc::encode(q, &y)), state_text(1, &y)))
        }
        MarkovCmd::Iterate { model, steps, budget } => {
            let (t, x) = load_chain(src, model)?;
            let x = need_x0(model, x)?;
            if budget.is_some_and(|b| *steps > b) {
                // Reports the budget error without taking any step.
                t.iterate(&x, *steps, *budget)?;
            }
            let states = t.states(x).take(*steps).collect::<Result<Vec<_>, _>>()?;
            let docs: Vec<Value> = states.iter().map(|s| to_value(&BivectorDoc::encode(q, s))).collect();
            let text: Vec<String> = states.iter().enumerate().map(|(k, s)| state_text(k + 1, s)).collect();
            Ok(Output {
                doc: Value::Array(docs),
                text: text.join("\n"),
                stream: true,
            })
        }
        MarkovCmd::Steady { model } => {
            let (t, _) = load_chain(src, model)?;
            let (a, b) = t.stationary()?;
            let lits = |vs: &[Vec<Rational>]| vs.iter().map(|v| render::literals(q, v)).collect::<Vec<_>>();
            let text = format!("stationary: {} ∪ {}", render::list(q, &a), render::list(q, &b));
            Ok(Output::new(json!({"first": lits(&a), "second": lits(&b)}), text))
        }
    }
}

// leontief

fn period_doc(p: &PeriodClass) -> Value {
    let n = &Neutrosophic;
    json!({
        "class": p.class.to_string(),
        "singular_split": p.singular_split,
        "inverse": p.inverse.as_ref().map(|m| MatrixFile::encode(n, m)),
        "production": p.production.as_ref().map(|v| render::literals(n, v)),
    })
}

fn leontief(cmd: &LeontiefCmd, src: &dyn Source) -> R<Output> {
    let q = &Rationals;
    let (name, doc) = match cmd {
        LeontiefCmd::Closed { model } | LeontiefCmd::Open { model } | LeontiefCmd::Classify { model } => {
            (model, load::<ModelDoc>(src, model)?)
        }
    };
    match (cmd, doc) {
        (LeontiefCmd::Closed { .. }, ModelDoc::LeontiefClosed { c }) => {
            let s = leontief_closed(&c.decode(q)?)?;
            let prices: Vec<Vec<String>> = s.prices.iter().map(|v| render::literals(q, v)).collect();
            let mut text = format!("prices: {}", render::list(q, &s.prices));
            match (&s.positive_power, &s.warning) {
                (Some(m), _) => text.push_str(&format!("\nA^{m} is positive")),
                (None, Some(w)) => text.push_str(&format!("\nwarning: {w}")),
                (None, None) => {}
            }
            let doc = json!({"prices": prices, "positive_power": s.positive_power, "warning": s.warning});
            Ok(Output::new(doc, text))
        }
        (LeontiefCmd::Open { .. }, ModelDoc::LeontiefOpen { c, d }) => {
            let s = leontief_open(&c.decode(q)?, &parse_rational_list(&d)?)?;
            let text = format!(
                "production: {}\nproductive: {}\nrow sums below one: {}\ncolumn sums below one: {}\n(I - C)^-1 =\n{}",
                render::vector(q, &s.production),
                s.productive,
                s.row_sums_below_one,
                s.col_sums_below_one,
                render::matrix(q, &s.inverse)
            );
            let doc = json!({
                "production": render::literals(q, &s.production),
                "inverse": MatrixFile::encode(q, &s.inverse),
                "productive": s.productive,
                "row_sums_below_one": s.row_sums_below_one,
                "col_sums_below_one": s.col_sums_below_one,
            });
            Ok(Output::new(doc, text))
        }
        (LeontiefCmd::Classify { .. }, ModelDoc::NeutroLeontief { c, d }) => {
            let n = &Neutrosophic;
            let d = d.map(|d| d.decode(n)).transpose()?;
            let r = neutro_leontief_classify(&c.decode(n)?, d.as_ref())?;
            let label = r.label();
            let text = format!("{label}\nperiod 1: {}\nperiod 2: {}", r.first.class, r.second.class);
            let doc = json!({"label": label, "first": period_doc(&r.first), "second": period_doc(&r.second)});
            Ok(Output::new(doc, text))
        }
        _ => Err(CliError::Usage(format!("{name}: model kind does not fit this subcommand"))),
    }
}

// neutro and fuzzy

fn neutro(cmd: &NeutroCmd, src: &dyn Source) -> R<Output> {
    let n = &Neutrosophic;
    match cmd {
        NeutroCmd::Mul { a, b } => {
            let x = load::<MatrixFile>(src, a)?.decode(n)?;
            let y = load::<MatrixFile>(src, b)?.decode(n)?;
            let p = neutro_matmul(&x, &y)?;
            Ok(Output::new(to_value(&MatrixFile::encode(n, &p)), render::matrix(n, &p)))
        }
        NeutroCmd::Charpoly { a } => {
            let m = load::<MatrixFile>(src, a)?.decode(n)?;
            let p = neutro_char_poly(&m)?;
            let det = n.render_literal(&neutro_det(&m)?);
            let text = format!("{}\ndet = {det}", p.render(n, "x"));
            let doc = json!({
                "polynomial": p.render(n, "x"),
                "coefficients": render::literals(n, p.coeffs()),
                "determinant": det,
            });
            Ok(Output::new(doc, text))
        }
        NeutroCmd::Eigen { a } => {
            let m = load::<MatrixFile>(src, a)?.decode(n)?;
            let s = neutro_eigenvalues(&m)?;
            let all: Vec<String> = s.values.iter().map(|e| n.render_literal(&e.value)).collect();
            let classical: Vec<String> = s.classical().map(|v| n.render_literal(v)).collect();
            let text = if all.is_empty() {
                let splits: Vec<String> = s.rootless_splits.iter().map(|k| k.to_string()).collect();
                format!(
                    "no neutrosophic characteristic value in Q(I): split {} has no rational roots",
                    splits.join(" and ")
                )
            } else {
                format!("values: {{{}}}\nclassical: {{{}}}", all.join(", "), classical.join(", "))
            };
            let doc = json!({"values": all, "classical": classical, "rootless_splits": s.rootless_splits});
            Ok(Output::new(doc, text))
        }
    }
}

fn fuzzy(cmd: &FuzzyCmd, src: &dyn Source) -> R<Output> {
    match cmd {
        FuzzyCmd::Compose { p, q } => {
            let x = load::<MatrixFile>(src, p)?.decode(&Fuzzy)?;
            let y = load::<MatrixFile>(src, q)?.decode(&Fuzzy)?;
            let r = fuzzy_compose(&x, &y)?;
            Ok(Output::new(to_value(&MatrixFile::encode(&Fuzzy, &r)), render::matrix(&Fuzzy, &r)))
        }
    }
}
