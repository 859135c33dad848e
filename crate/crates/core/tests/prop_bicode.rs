mod common;

use common::*;
use linbialg::bicode::{Bicode, DecodePolicy, LinearCode, DEFAULT_ENUM_CAP};
use linbialg::scalar::{Polynomial, PrimeField, Ring};
use linbialg::{Bimatrix, Bipolynomial, Bivector, Error, Matrix};
use proptest::prelude::*;

/// Full-rank `r × n` parity matrix: `L·(A | I)` with columns permuted.
fn parity(p: u64, n: usize, r: usize) -> impl Strategy<Value = Matrix<u64>> {
    let k = n - r;
    (
        gf_matrix(p, r, k),
        proptest::collection::vec(0..p, r * r),
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
    )
        .prop_map(move |(a, low, perm)| {
            let f = PrimeField::new(p).unwrap();
            let std = Matrix::from_fn(r, n, |i, j| if j < k { a[(i, j)] } else { u64::from(j - k == i) });
            let l = Matrix::from_fn(r, r, |i, j| match i.cmp(&j) {
                std::cmp::Ordering::Equal => 1,
                std::cmp::Ordering::Greater => low[i * r + j],
                std::cmp::Ordering::Less => 0,
            });
            let mixed = l.mul(&f, &std).unwrap();
            Matrix::from_fn(r, n, |i, j| mixed[(i, perm[j])])
        })
}

fn code_params() -> impl Strategy<Value = (u64, usize, usize)> {
    prop_oneof![Just(2u64), Just(3u64)].prop_flat_map(|p| {
        let max_n: usize = if p == 2 { 8 } else { 5 };
        (Just(p), 2usize..=max_n).prop_flat_map(|(p, n)| (Just(p), Just(n), 1..n))
    })
}

fn bicode() -> impl Strategy<Value = Bicode> {
    code_params().prop_flat_map(|(p, n1, r1)| {
        let n2 = if p == 2 { n1.min(7) } else { n1.min(4) }.max(2);
        (parity(p, n1, r1), (1..n2).prop_flat_map(move |r2| parity(p, n2, r2))).prop_map(move |(h1, h2)| {
            Bicode::from_parity(PrimeField::new(p).unwrap(), &Bimatrix::new(h1, h2)).unwrap()
        })
    })
}

/// Every word of length `n` with `H·x = 0`, by brute force.
fn kernel_words(code: &LinearCode, field: &PrimeField) -> Vec<Vec<u64>> {
    let q = field.modulus();
    let n = code.n;
    let mut out = Vec::new();
    let mut x = vec![0u64; n];
    for _ in 0..q.pow(n as u32) {
        if code.is_codeword(field, &x).unwrap() {
            out.push(x.clone());
        }
        for d in x.iter_mut().rev() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn enumeration_equals_kernel_and_row_space(c in bicode()) {
        prop_assert!(c.is_consistent());
        let (a, b) = c.enumerate(DEFAULT_ENUM_CAP).unwrap();
        let q = c.field.modulus();
        for (words, code) in [(&a, &c.first), (&b, &c.second)] {
            prop_assert_eq!(words.len() as u64, q.pow(code.k as u32));
            prop_assert_eq!(words, &kernel_words(code, &c.field));
            prop_assert_eq!(code.generator.rank(&c.field), code.k);
            prop_assert_eq!(code.parity.rank(&c.field), code.n - code.k);
            for g in code.generator.row_vecs() {
                prop_assert!(words.binary_search(&g).is_ok());
            }
        }
    }

    #[test]
    fn dual_is_an_involution(c in bicode()) {
        let d = c.dual();
        prop_assert!(d.is_consistent());
        let dd = d.dual();
        prop_assert_eq!(dd.generator(), c.generator());
        prop_assert_eq!(dd.parity(), c.parity());
        let f = c.field;
        let (ca, _) = c.enumerate(DEFAULT_ENUM_CAP).unwrap();
        let (da, _) = d.enumerate(DEFAULT_ENUM_CAP).unwrap();
        for u in &da {
            for v in &ca {
                let ip = u.iter().zip(v).fold(0, |acc, (x, y)| f.add(&acc, &f.mul(x, y)));
                prop_assert_eq!(ip, 0);
            }
        }
    }

    #[test]
    fn encoding_and_syndromes(c in bicode(), seed in proptest::collection::vec(0u64..3, 16)) {
        let q = c.field.modulus();
        let msg = Bivector::new(
            seed[..c.first.k].iter().map(|x| x % q).collect(),
            seed[8..8 + c.second.k].iter().map(|x| x % q).collect(),
        );
        let w = c.encode(&msg).unwrap();
        prop_assert!(c.syndrome(&w).unwrap().is_codeword);
        let mut y = w.clone();
        y.first[0] = (y.first[0] + 1) % q;
        let s = c.syndrome(&y).unwrap();
        prop_assert_eq!(s.value.first, c.first.parity.col(0));
    }

    #[test]
    fn decoder_returns_codewords(c in bicode(), noise in proptest::collection::vec(0u64..3, 16), best in any::<bool>()) {
        let q = c.field.modulus();
        let y = Bivector::new(
            noise[..c.first.n].iter().map(|x| x % q).collect(),
            noise[8..8 + c.second.n].iter().map(|x| x % q).collect(),
        );
        let policy = DecodePolicy { best_of_best: best, ..DecodePolicy::default() };
        match c.decode(&y, &policy) {
            Ok(r) => {
                prop_assert!(c.syndrome(&r.result).unwrap().is_codeword);
                prop_assert_eq!(c.decode(&y, &policy).unwrap(), r.clone());
                let s = c.syndrome(&y).unwrap();
                if s.is_codeword {
                    prop_assert_eq!(r.result, y);
                }
            }
            Err(Error::DecoderExhausted { tried, component }) => {
                prop_assert!(tried >= 1 && tried <= 4 * c.component(component - 1).k.max(1));
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn cyclic_codes_are_shift_closed(
        n1 in 2usize..=8,
        n2 in 2usize..=8,
        s1 in proptest::collection::vec(0u64..2, 1..=8),
        s2 in proptest::collection::vec(0u64..2, 1..=8),
    ) {
        let f = PrimeField::new(2).unwrap();
        let divisor = |n: usize, seed: &[u64]| {
            let xn = Polynomial::x_pow_minus_one(&f, n);
            let p = Polynomial::new(&f, seed.to_vec());
            if p.is_zero() { xn } else { p.gcd(&f, &xn) }
        };
        let g = Bipolynomial::new(divisor(n1, &s1), divisor(n2, &s2));
        let c = Bicode::cyclic(f, &g, (n1, n2)).unwrap();
        prop_assert!(c.is_consistent());
        let h = c.check_bipolynomial().unwrap();
        prop_assert_eq!(g.first.mul(&f, &h.first), Polynomial::x_pow_minus_one(&f, n1));
        let (a, b) = c.enumerate(DEFAULT_ENUM_CAP).unwrap();
        for words in [&a, &b] {
            for w in words {
                let mut s = w.clone();
                s.rotate_right(1);
                prop_assert!(words.binary_search(&s).is_ok());
            }
        }
    }
}
