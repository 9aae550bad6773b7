// SPDX-License-Identifier: Apache-2.0

mod common;

use common::*;
use proptest::prelude::*;
use ramforge::galois::{embed, Embedding};
use ramforge::polyring::{factor, irreducibles, is_irreducible, roots, squarefree_decompose};
use ramforge::{Field, FieldElement, Polynomial};

fn mobius(n: usize) -> i64 {
    let mut n = n;
    let mut mu = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            mu = -mu;
        }
        d += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

#[test]
fn fermat_exhaustive() {
    for &(p, m) in &[(2, 1), (2, 4), (3, 2), (5, 2), (7, 3), (2, 9), (23, 1)] {
        let f = Field::create(p, m).unwrap();
        let q = f.order();
        for a in f.elements().filter(|&a| a != 0) {
            assert_eq!(f.pow(a, q - 1), 1, "F_{p}^{m} element {a}");
        }
    }
}

#[test]
fn creation_is_deterministic() {
    for &(p, m) in &[(2, 5), (3, 3), (5, 2)] {
        let a = Field::create(p, m).unwrap();
        let b = Field::create(p, m).unwrap();
        assert_eq!(a.modulus(), b.modulus());
    }
}

#[test]
fn irreducible_counts() {
    for q in [2u64, 3, 4] {
        let f = if q == 4 { Field::create(2, 2) } else { Field::prime(q) }.unwrap();
        for d in 1..=4usize {
            let total: i64 = (1..=d)
                .filter(|k| d % k == 0)
                .map(|k| mobius(d / k) * (q as i64).pow(k as u32))
                .sum();
            assert_eq!(irreducibles(&f, d).len() as i64, total / d as i64, "q={q} d={d}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn frobenius_round_trip(f in fields(SMALL_FIELDS), a in any::<u64>()) {
        let a = a % f.order();
        prop_assert_eq!(f.pth_root(f.frobenius(a)), a);
    }

    #[test]
    fn embedding_is_a_homomorphism(idx in 0usize..3, a in any::<u64>(), b in any::<u64>()) {
        let (src, dst) = [((2, 2), (2, 4)), ((3, 1), (3, 2)), ((2, 3), (2, 6))][idx];
        let src = field(src);
        let dst = field(dst);
        let e = Embedding::new(&src, &dst).unwrap();
        let (a, b) = (a % src.order(), b % src.order());
        prop_assert_eq!(e.apply(src.add(a, b)), dst.add(e.apply(a), e.apply(b)));
        prop_assert_eq!(e.apply(src.mul(a, b)), dst.mul(e.apply(a), e.apply(b)));
        let x = FieldElement::new(&src, a);
        prop_assert_eq!(embed(&src, &src, &x).unwrap(), x);
    }

    #[test]
    fn factor_round_trip(f in fields(SMALL_FIELDS), raw in raw_coeffs(12)) {
        let p = nonzero_poly(&f, &raw);
        let fac = factor(&p).unwrap();
        prop_assert_eq!(fac.expand(), p);
        let keys: Vec<_> = fac.factors.iter().map(|(g, _)| g.clone()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        prop_assert_eq!(&keys, &sorted);
        for (g, _) in &fac.factors {
            prop_assert!(g.is_monic() && is_irreducible(g));
        }
    }

    #[test]
    fn squarefree_part_matches_decomposition(f in fields(SMALL_FIELDS), raw in raw_coeffs(10)) {
        let p = nonzero_poly(&f, &raw);
        prop_assume!(p.degree().unwrap_or(0) > 0);
        let parts = squarefree_decompose(&p).unwrap();
        let rebuilt = parts
            .iter()
            .fold(Polynomial::constant(&f, p.lc()), |acc, (g, i)| &acc * &g.pow(*i as u64));
        prop_assert_eq!(rebuilt, p.clone());
        let radical = parts.iter().fold(Polynomial::one(&f), |acc, (g, _)| &acc * g);
        let expected = factor(&p).unwrap().factors.iter().fold(Polynomial::one(&f), |acc, (g, _)| &acc * g);
        prop_assert_eq!(radical, expected);
    }

    #[test]
    fn irreducible_factors_have_no_small_roots(idx in 0usize..4, raw in raw_coeffs(8)) {
        let base = field([(2, 1), (3, 1), (2, 2), (3, 2)][idx]);
        let p = nonzero_poly(&base, &raw);
        for (g, _) in factor(&p).unwrap().factors {
            let d = g.degree().unwrap();
            if d > 4 {
                continue;
            }
            for k in 1..d {
                let ext = Field::create(base.p(), base.m() * k).unwrap();
                let lifted = Embedding::new(&base, &ext).unwrap().apply_poly(&g);
                prop_assert!(roots(&lifted).is_empty());
            }
        }
    }
}
