//! The ten acceptance criteria, one PASS/FAIL line each.

#![allow(clippy::type_complexity)]

use std::collections::BTreeSet;
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use linbialg::bicode::{parse_biword, render_biword, BasisPolicy, Bicode, DecodePolicy, DEFAULT_ENUM_CAP};
use linbialg::bimatrix::{bidiagonalize, eigen_bivalues, jordan_biform, BivalueClass, Convention};
use linbialg::bispace::{gram_schmidt_biorthogonalize, InnerBiproduct, InnerProduct, PseudoInnerProduct};
use linbialg::io::{Fuzzy, ScalarCodec};
use linbialg::neutro::{fuzzy_compose, neutro_char_poly, neutro_det, neutro_eigenvalues};
use linbialg::scalar::rational::{int, rat};
use linbialg::scalar::{Neutro, Neutrosophic, Polynomial, PrimeField, Rational, Rationals, Ring};
use linbialg::{Bimatrix, Bipolynomial, Bivector, Matrix};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
}

fn bits(words: &[&str]) -> Matrix<u64> {
    Matrix::from_rows(
        words
            .iter()
            .map(|w| w.bytes().map(|b| u64::from(b - b'0')).collect())
            .collect(),
    )
    .unwrap()
}

fn nq(rows: &[&[&str]]) -> Matrix<Neutro> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| Neutrosophic.parse(s).unwrap()).collect()).collect())
        .unwrap()
}

fn lits<C: ScalarCodec>(c: &C, v: &[C::Elem]) -> Vec<String> {
    v.iter().map(|x| c.render_literal(x)).collect()
}

fn gram_schmidt_golden() -> Check {
    let ip = InnerBiproduct::new(InnerProduct::Dot, InnerProduct::l2(int(0), int(1)).unwrap());
    let input: Vec<Bivector<Rational>> = [[3, 0, 4], [-1, 0, 7], [2, 9, 11]]
        .iter()
        .zip(q(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).row_vecs())
        .map(|(a, b)| Bivector::new(a.iter().map(|&x| int(x)).collect(), b))
        .collect();
    let mut best = Duration::MAX;
    let mut out = Vec::new();
    for _ in 0..20 {
        let t = Instant::now();
        out = gram_schmidt_biorthogonalize(&ip, &input, false).map_err(|e| e.to_string())?;
        best = best.min(t.elapsed());
    }
    let want: Vec<Bivector<Rational>> = vec![
        Bivector::new(vec![int(3), int(0), int(4)], vec![int(1), int(0), int(0)]),
        Bivector::new(vec![int(-4), int(0), int(3)], vec![rat(-1, 2), int(1), int(0)]),
        Bivector::new(vec![int(0), int(9), int(0)], vec![rat(1, 6), int(-1), int(1)]),
    ];
    ensure(out == want, || format!("got {out:?}"))?;
    ensure(best < Duration::from_millis(1), || format!("took {best:?}"))?;
    Ok(format!("(3,0,4)∪1, (-4,0,3)∪(x-1/2), (0,9,0)∪(x^2-x+1/6) in {best:?}"))
}

fn charpoly_goldens() -> Check {
    let f = Rationals;
    let cases: [(&str, Bimatrix<Rational>, &str, &str, [Vec<i64>; 2], &str); 4] = [
        (
            "3.2.12",
            Bimatrix::new(q(&[&[0, 1, 0], &[2, -2, 2], &[2, -3, 2]]), q(&[&[3, 1, -1], &[2, 2, -1], &[2, 2, 0]])),
            "x^3",
            "x^3 - 5x^2 + 8x - 4",
            [vec![0, 0, 0], vec![1, 2, 2]],
            "full",
        ),
        (
            "3.2.13",
            Bimatrix::new(q(&[&[0, -1], &[1, 0]]), q(&[&[1, -1], &[2, 2]])),
            "x^2 + 1",
            "x^2 - 3x + 4",
            [vec![], vec![]],
            "none",
        ),
        (
            "3.2.14",
            Bimatrix::new(q(&[&[0, -1], &[1, 0]]), q(&[&[3, 1, -1], &[2, 2, -1], &[2, 2, 0]])),
            "x^2 + 1",
            "x^3 - 5x^2 + 8x - 4",
            [vec![], vec![1, 2, 2]],
            "semi:1",
        ),
        (
            "3.2.15",
            Bimatrix::new(
                q(&[&[5, -6, -6], &[-1, 4, 2], &[3, -6, -4]]),
                q(&[&[-1, 0, 0], &[2, 1, 0], &[0, 1, 4]]),
            ),
            "x^3 - 5x^2 + 8x - 4",
            "x^3 - 4x^2 - x + 4",
            [vec![1, 2, 2], vec![-1, 1, 4]],
            "full",
        ),
    ];
    for (id, a, p1, p2, values, class) in cases {
        let p = a.char_bipolynomial(&f).map_err(|e| e.to_string())?;
        let got = (p.first.render(&f, "x"), p.second.render(&f, "x"));
        ensure(got == (p1.into(), p2.into()), || format!("{id}: bipolynomial {got:?}"))?;
        let e = eigen_bivalues(&f, &a).map_err(|e| e.to_string())?;
        for (c, want) in [&e.first, &e.second].into_iter().zip(&values) {
            let want: Vec<Rational> = want.iter().map(|&x| int(x)).collect();
            ensure(c.values() == want, || format!("{id}: values {:?}", c.values()))?;
        }
        let got_class = match e.class {
            BivalueClass::Full => "full".to_string(),
            BivalueClass::None => "none".to_string(),
            BivalueClass::Semi { rootless } => format!("semi:{}", rootless + 1),
        };
        ensure(got_class == class, || format!("{id}: class {got_class}"))?;
    }
    Ok("3.2.12, 3.2.13 (none), 3.2.14 (semi), 3.2.15".into())
}

fn bidiagonal_golden() -> Check {
    let f = Rationals;
    let a = Bimatrix::new(
        q(&[&[5, -6, -6], &[-1, 4, 2], &[3, -6, -4]]),
        q(&[&[-1, 0, 0], &[2, 1, 0], &[0, 1, 4]]),
    );
    let bd = bidiagonalize(&f, &a).map_err(|e| e.to_string())?;
    let d = Bimatrix::new(
        Matrix::diagonal(&f, &[int(1), int(2), int(2)]),
        Matrix::diagonal(&f, &[int(-1), int(1), int(4)]),
    );
    ensure(bd.d == d, || format!("D = {:?}", bd.d))?;
    let ap = a.mul(&f, &bd.p).map_err(|e| e.to_string())?;
    let pd = bd.p.mul(&f, &bd.d).map_err(|e| e.to_string())?;
    ensure(ap == pd, || "AP != PD".into())?;
    Ok("D = diag(1,2,2) ∪ diag(-1,1,4), AP = PD".into())
}

fn jordan_goldens() -> Check {
    let f = Rationals;
    let a = Bimatrix::new(
        q(&[&[2, 0, 0], &[1, 2, 0], &[0, 0, -1]]),
        q(&[&[2, 0, 0, 0], &[1, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 1, 2]]),
    );
    let j = jordan_biform(&f, &a, Convention::SubDiagonal).map_err(|e| e.to_string())?;
    ensure(j.form == a, || "3.6.1 is not a fixed point".into())?;

    let j1 = q(&[
        &[3, 0, 0, 0, 0, 0, 0, 0],
        &[1, 3, 0, 0, 0, 0, 0, 0],
        &[0, 1, 3, 0, 0, 0, 0, 0],
        &[0, 0, 0, 2, 0, 0, 0, 0],
        &[0, 0, 0, 1, 2, 0, 0, 0],
        &[0, 0, 0, 0, 0, -1, 0, 0],
        &[0, 0, 0, 0, 0, 1, -1, 0],
        &[0, 0, 0, 0, 0, 0, 1, -1],
    ]);
    let j2 = q(&[
        &[4, 0, 0, 0, 0, 0],
        &[1, 4, 0, 0, 0, 0],
        &[0, 1, 4, 0, 0, 0],
        &[0, 0, 1, 4, 0, 0],
        &[0, 0, 0, 0, 3, 0],
        &[0, 0, 0, 0, 1, 3],
    ]);
    // Hide the form behind a similarity first.
    let unit_lower = |n: usize| Matrix::from_fn(n, n, |i, k| int(i64::from(i >= k)));
    let (p1, p2) = (unit_lower(8), unit_lower(6));
    let hidden = Bimatrix::new(
        p1.mul(&f, &j1).unwrap().mul(&f, &p1.inverse(&f).unwrap().unwrap()).unwrap(),
        p2.mul(&f, &j2).unwrap().mul(&f, &p2.inverse(&f).unwrap().unwrap()).unwrap(),
    );
    let got = jordan_biform(&f, &hidden, Convention::SubDiagonal).map_err(|e| e.to_string())?;
    let report = got.report(&f).to_string();
    ensure(report == "J(3)_3, J(2)_2, J(-1)_3 ∪ J(4)_4, J(3)_2", || format!("report {report}"))?;

    let m = a.minimal_bipolynomial(&f).map_err(|e| e.to_string())?;
    let lin = |r: i64| Polynomial::linear_root(&f, &int(r));
    let computed = lin(2).pow(&f, 2).mul(&f, &lin(-1));
    let quoted = lin(2).mul(&f, &lin(-1));
    ensure(m.first == computed, || format!("minimal first component {}", m.first.render(&f, "x")))?;
    ensure(m.first != quoted, || "(x-2)(x+1) was accepted as minimal".into())?;
    ensure(!a.first.eval_poly(&f, &quoted).unwrap().is_zero(&f), || "(x-2)(x+1) annihilates".into())?;
    Ok(format!("fixed point, {report}, minimal first component (x-2)^2(x+1) not (x-2)(x+1)"))
}

fn gh_zero(c: &Bicode) -> bool {
    let (g, h) = (c.generator(), c.parity());
    let pairs = [(&g.first, &h.first), (&g.second, &h.second)];
    pairs
        .iter()
        .all(|(g, h)| g.rows() == 0 || h.rows() == 0 || g.mul(&c.field, &h.transpose()).unwrap().is_zero(&c.field))
}

fn word_set(ws: &[Vec<u64>]) -> BTreeSet<String> {
    ws.iter().map(|w| w.iter().map(|b| b.to_string()).collect()).collect()
}

fn bicode_goldens() -> Check {
    let f2 = PrimeField::new(2).unwrap();
    let h = Bimatrix::new(bits(&["011100", "101010", "110001"]), bits(&["1110100", "0111010", "1101001"]));
    let c = Bicode::from_parity(f2, &h).map_err(|e| e.to_string())?;
    let (a, b) = c.enumerate(DEFAULT_ENUM_CAP).map_err(|e| e.to_string())?;
    let want_a = ["000000", "011011", "110110", "001110", "100011", "111000", "010101", "101101"];
    let want_b = [
        "0000000", "1000101", "0100111", "0010110", "0001011", "1100010", "1010011", "1001110", "0110001", "0101100",
        "0011101", "1110100", "1101001", "1011000", "0111010", "1111111",
    ];
    let set = |ws: &[&str]| ws.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
    ensure(a.len() == 8 && word_set(&a) == set(&want_a), || format!("first list {a:?}"))?;
    ensure(b.len() == 16 && word_set(&b) == set(&want_b), || format!("second list {b:?}"))?;

    let g = Bipolynomial::new(Polynomial::new(&f2, vec![1, 0, 0, 1]), Polynomial::new(&f2, vec![1, 0, 1, 1]));
    let cyc = Bicode::cyclic(f2, &g, (6, 7)).map_err(|e| e.to_string())?;
    let check = cyc.check_bipolynomial().map(|h| h.render(&f2));
    ensure(check.as_deref() == Some("x^3 + 1 ∪ x^4 + x^3 + x^2 + 1"), || format!("check {check:?}"))?;
    let gen = Bimatrix::new(
        bits(&["100100", "010010", "001001"]),
        bits(&["1011000", "0101100", "0010110", "0001011"]),
    );
    ensure(cyc.generator() == gen, || "cyclic generator bimatrix".into())?;

    let rep = Bicode::from_parity(
        f2,
        &Bimatrix::new(bits(&["11000", "10100", "10010", "10001"]), bits(&["1100", "1010", "1001"])),
    )
    .map_err(|e| e.to_string())?;
    let codes = [c.clone(), c.dual(), cyc.clone(), cyc.dual(), rep.clone(), rep.dual()];
    ensure(codes.iter().all(gh_zero), || "G·Hᵀ ≠ 0 on some code".into())?;
    Ok("8 ∪ 16 words from H, cyclic check (x^3+1) ∪ (x^4+x^3+x^2+1), G·Hᵀ = 0 on 6 codes".into())
}

fn decoder_golden() -> Check {
    let f2 = PrimeField::new(2).unwrap();
    let h = Bimatrix::new(
        bits(&["011100", "101010", "110001"]),
        bits(&["11011000", "00110100", "10100010", "11110001"]),
    );
    let c = Bicode::from_parity(f2, &h).map_err(|e| e.to_string())?;
    let beta = parse_biword(&f2, "111111|11111111").map_err(|e| e.to_string())?;
    let basis = |ws: &[&str]| bits(ws).row_vecs();
    let policy = DecodePolicy {
        first: BasisPolicy::Explicit(vec![basis(&["001110", "111000", "010101"])]),
        second: BasisPolicy::Explicit(vec![basis(&["01001001", "11000010", "11100101", "11111000"])]),
        best_of_best: false,
    };
    let r = c.decode(&beta, &policy).map_err(|e| e.to_string())?;
    let word = render_biword(&r.result);
    ensure(word == "100011|10010110", || format!("decoded {word}"))?;
    let s = c.syndrome(&r.result).map_err(|e| e.to_string())?;
    ensure(s.is_codeword && s.value.is_zero(&f2), || "nonzero syndrome".into())?;
    ensure((r.distance.first, r.distance.second) == (3, 4), || format!("distance {:?}", r.distance))?;
    Ok(format!("{word}, zero syndrome, bidistance (3,4)"))
}

fn pseudo_inner_golden() -> Check {
    let f = PrimeField::new(11).unwrap();
    let ip = InnerBiproduct::new(
        PseudoInnerProduct::parse(f, "gfdot:2,4").map_err(|e| e.to_string())?,
        PseudoInnerProduct::parse(f, "gfdot").map_err(|e| e.to_string())?,
    );
    let a = Bivector::new(vec![2, 3], vec![2, 2, 3, 4]);
    ensure(!a.is_zero(&f), || "α is zero".into())?;
    let v = ip.eval(&a, &a).map_err(|e| e.to_string())?;
    ensure(v == (0, 0), || format!("<α,α> = {v:?}"))?;
    Ok("<α,α> = (0,0) over Z11 with α ≠ 0".into())
}

fn neutro_goldens() -> Check {
    let n = Neutrosophic;
    let a = nq(&[&["3", "I", "-1"], &["2", "2I", "-1"], &["2", "2", "0"]]);
    let p = neutro_char_poly(&a).map_err(|e| e.to_string())?;
    let want = ["2+2I", "-4-4I", "3+2I", "-1"].map(|s| n.parse(s).unwrap());
    ensure(p.coeffs() == want, || format!("charpoly {}", p.render(&n, "x")))?;

    let b = nq(&[&["2", "I"], &["-2", "1"]]);
    let s = neutro_eigenvalues(&b).map_err(|e| e.to_string())?;
    ensure(s.values.is_empty() && s.nonempty().is_err(), || "4.1.28 has values".into())?;

    let c = nq(&[&["1+2I", "0"], &["-1", "2"]]);
    let s = neutro_eigenvalues(&c).map_err(|e| e.to_string())?;
    let classical: BTreeSet<String> = s.classical().map(|v| n.render_literal(v)).collect();
    let want: BTreeSet<String> = ["2", "1+2I"].map(String::from).into();
    ensure(classical == want, || format!("classical {classical:?}"))?;
    for e in &s.values {
        let shifted = c.sub(&n, &Matrix::identity(&n, 2).scale(&n, &e.value)).unwrap();
        let d = neutro_det(&shifted).map_err(|e| e.to_string())?;
        ensure(n.is_zero(&d), || format!("det(A - ({})I) = {}", n.render_literal(&e.value), n.render_literal(&d)))?;
    }

    let parse = |rows: &[&[&str]]| {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| Fuzzy.parse_literal(s).unwrap()).collect()).collect())
            .unwrap()
    };
    let r = fuzzy_compose(
        &parse(&[&["0.3", "I", "1"], &["0", "0.9", "0.2"], &["0.7", "0", "0.4"]]),
        &parse(&[&["0.1"], &["I"], &["0"]]),
    )
    .map_err(|e| e.to_string())?;
    let got = lits(&Fuzzy, r.entries());
    ensure(got == ["I", "I", "0.1"], || format!("composition {got:?}"))?;
    Ok(format!(
        "{}, no value in Q(I), classical {{2, 1+2I}} of {} roots, (I, I, 0.1)",
        p.render(&n, "x"),
        s.values.len()
    ))
}

const SUITES: [(&str, &str); 5] = [
    ("prop_bimatrix", include_str!("../../core/tests/prop_bimatrix.rs")),
    ("prop_bispace", include_str!("../../core/tests/prop_bispace.rs")),
    ("prop_bicode", include_str!("../../core/tests/prop_bicode.rs")),
    ("prop_models", include_str!("../../core/tests/prop_models.rs")),
    ("prop_neutro", include_str!("../../core/tests/prop_neutro.rs")),
];

const PROPERTIES: [&str; 10] = [
    "bimatrix_ops_act_componentwise",
    "cayley_hamilton_and_minimal_divides_characteristic",
    "eigenpairs_have_zero_residual",
    "split_is_a_ring_isomorphism",
    "gram_schmidt_is_biorthogonal_with_prefix_spans",
    "projection_residual_is_orthogonal_and_idempotent",
    "enumeration_equals_kernel_and_row_space",
    "dual_is_an_involution",
    "strict_chain_keeps_probability_bivectors",
    "open_model_reconstructs_demand",
];

fn cargo(args: &[&str]) -> std::io::Result<std::process::Output> {
    let mut cmd = Command::new(env!("CARGO"));
    cmd.args(args).current_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/../.."));
    cmd.output()
}

fn property_suites() -> Check {
    for (name, src) in SUITES {
        for cases in src.split("with_cases(").skip(1) {
            let n: usize = cases.split(')').next().unwrap_or("").parse().unwrap_or(0);
            ensure(n >= 200, || format!("{name} runs {n} cases"))?;
        }
        ensure(src.contains("with_cases("), || format!("{name} has no case count"))?;
    }
    for p in PROPERTIES {
        ensure(SUITES.iter().any(|(_, s)| s.contains(&format!("fn {p}("))), || format!("missing {p}"))?;
    }
    let mut args = vec!["test", "--workspace", "--color", "never"];
    for (name, _) in SUITES {
        args.extend(["--test", name]);
    }
    let build = cargo(&[&args[..], &["--no-run"]].concat()).map_err(|e| e.to_string())?;
    ensure(build.status.success(), || String::from_utf8_lossy(&build.stderr).into_owned())?;
    let t = Instant::now();
    let run = cargo(&args).map_err(|e| e.to_string())?;
    let took = t.elapsed();
    let out = String::from_utf8_lossy(&run.stdout);
    ensure(run.status.success(), || format!("suites failed:\n{out}"))?;
    let ok = out.lines().filter(|l| l.starts_with("test result: ok.")).count();
    ensure(ok == SUITES.len(), || format!("{ok} suites reported ok"))?;
    for p in PROPERTIES {
        ensure(out.contains(&format!("test {p} ... ok")), || format!("{p} did not pass"))?;
    }
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))?;
    let passed: usize = out
        .lines()
        .filter_map(|l| l.strip_prefix("test result: ok. "))
        .filter_map(|l| l.split(' ').next()?.parse::<usize>().ok())
        .sum();
    Ok(format!("{passed} properties in {} suites, all ≥ 200 cases, {took:.1?}", SUITES.len()))
}

fn cli_determinism() -> Check {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_bialg"))
            .args(["examples", "run", "--all"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success(), || {
        format!("exit {:?}: {}", a.status.code(), String::from_utf8_lossy(&a.stderr))
    })?;
    ensure(b.status.success() && a.stdout == b.stdout, || "second run differs".into())?;
    let last = String::from_utf8_lossy(&a.stdout).lines().last().unwrap_or("").to_string();
    Ok(format!("exit 0, {} identical bytes, {last}", a.stdout.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("Gram-Schmidt golden", gram_schmidt_golden),
        ("characteristic bipolynomial goldens", charpoly_goldens),
        ("bidiagonalization golden", bidiagonal_golden),
        ("Jordan goldens", jordan_goldens),
        ("bicode goldens", bicode_goldens),
        ("decoder golden", decoder_golden),
        ("pseudo inner product golden", pseudo_inner_golden),
        ("neutrosophic goldens", neutro_goldens),
        ("property suites", property_suites),
        ("CLI determinism", cli_determinism),
    ];
    // Straight to the stdout handle so the lines show without --nocapture.
    let mut out = std::io::stdout();
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let line = match check() {
            Ok(detail) => format!("criterion {:>2} PASS {name}: {detail}\n", i + 1),
            Err(why) => {
                failed.push(i + 1);
                format!("criterion {:>2} FAIL {name}: {why}\n", i + 1)
            }
        };
        out.write_all(line.as_bytes()).unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
