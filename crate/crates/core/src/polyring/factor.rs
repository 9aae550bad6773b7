// SPDX-License-Identifier: Apache-2.0

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::galois::{canonical_irreducible, prime_factors, Field, FieldElement};

use super::Polynomial;

const EDF_SEED: u64 = 0x5eed;

/// `unit * prod factor^multiplicity`, factors monic irreducible and sorted
/// by degree then encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    pub factors: Vec<(Polynomial, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> Polynomial {
        let field = self.unit.field();
        self.factors.iter().fold(
            Polynomial::constant(field, self.unit.value()),
            |acc, (f, e)| &acc * &f.pow(*e as u64),
        )
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn len(&self) -> usize {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Square-free decomposition of `f`: pairwise coprime square-free monic
/// `g_i` with `f = lc(f) * prod g_i^i`, sorted by polynomial order.
pub fn squarefree_decompose(f: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    squarefree_rec(&f.monic(), 1, &mut out);
    out.sort();
    Ok(out)
}

fn squarefree_rec(f: &Polynomial, scale: usize, out: &mut Vec<(Polynomial, usize)>) {
    if f.is_constant() {
        return;
    }
    let p = f.field().p() as usize;
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y);
        if !fac.is_one() {
            out.push((fac, i * scale));
        }
        w = y;
        c = c.exact_div(&w);
        i += 1;
    }
    if !c.is_one() {
        let root = c.pth_root().expect("remaining cofactor lies in F[T^p]");
        squarefree_rec(&root, scale * p, out);
    }
}

/// `T^q mod f`.
fn frobenius_x(f: &Polynomial) -> Polynomial {
    Polynomial::x(f.field()).pow_mod(f.field().order(), f)
}

/// Splits a square-free monic `f` into products of irreducibles of equal degree.
pub fn distinct_degree(f: &Polynomial) -> Vec<(Polynomial, usize)> {
    let field = f.field();
    let q = field.order();
    let x = Polynomial::x(field);
    let mut rest = f.monic();
    let mut out = Vec::new();
    let mut h = x.rem(&rest).expect("nonzero");
    let mut i = 1;
    while rest.deg() >= 2 * i as i64 {
        h = h.pow_mod(q, &rest);
        let g = (&h - &x).gcd(&rest);
        if !g.is_one() {
            rest = rest.exact_div(&g);
            h = h.rem(&rest).expect("nonzero");
            out.push((g, i));
        }
        i += 1;
    }
    if !rest.is_constant() {
        let d = rest.degree().unwrap();
        out.push((rest, d));
    }
    out
}

fn splitting_image(h: &Polynomial, f: &Polynomial, d: usize) -> Polynomial {
    let field = f.field();
    let q = field.order();
    if field.p() == 2 {
        // absolute trace F_{q^d} -> F_2
        let terms = field.m() * d;
        let mut g = h.rem(f).expect("nonzero");
        let mut acc = g.clone();
        for _ in 1..terms {
            g = g.mul_mod(&g, f);
            acc = &acc + &g;
        }
        acc
    } else {
        // h^((q^d-1)/2) = (h^(1+q+...+q^(d-1)))^((q-1)/2)
        let mut conj = h.rem(f).expect("nonzero");
        let mut norm = conj.clone();
        for _ in 1..d {
            conj = conj.pow_mod(q, f);
            norm = norm.mul_mod(&conj, f);
        }
        &norm.pow_mod((q - 1) / 2, f) - &Polynomial::one(field)
    }
}

/// Splits a monic square-free `f` whose irreducible factors all have degree `d`.
/// Splitting candidates come from a fixed-seed stream, so the output is reproducible.
pub fn equal_degree(f: &Polynomial, d: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
    edf_rec(&f.monic(), d, &mut rng, &mut out);
    out.sort();
    out
}

fn edf_rec(f: &Polynomial, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Polynomial>) {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return;
    }
    if n == d {
        out.push(f.clone());
        return;
    }
    let field = f.field();
    loop {
        let coeffs = (0..n).map(|_| rng.gen_range(0..field.order())).collect();
        let h = Polynomial::from_coeffs(field, coeffs);
        if h.is_constant() {
            continue;
        }
        let mut g = h.gcd(f);
        if g.is_one() {
            g = splitting_image(&h, f, d).gcd(f);
        }
        if !g.is_one() && g.degree() != f.degree() {
            let other = f.exact_div(&g);
            edf_rec(&g, d, rng, out);
            edf_rec(&other, d, rng, out);
            return;
        }
    }
}

/// Complete factorization into monic irreducibles.
pub fn factor(f: &Polynomial) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = FieldElement::new(f.field(), f.lc());
    let mut factors = Vec::new();
    for (g, mult) in squarefree_decompose(f)? {
        for (part, d) in distinct_degree(&g) {
            for irr in equal_degree(&part, d) {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort();
    Ok(Factorization { unit, factors })
}

/// Rabin's test.
pub fn is_irreducible(f: &Polynomial) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = f.monic();
    let field = f.field();
    let q = field.order();
    let x = Polynomial::x(field);
    let needed: Vec<usize> = prime_factors(n as u64)
        .into_iter()
        .map(|r| n / r as usize)
        .collect();
    let mut h = x.clone();
    for i in 1..=n {
        h = h.pow_mod(q, &f);
        if needed.contains(&i) && !(&h - &x).gcd(&f).is_one() {
            return false;
        }
    }
    h == x.rem(&f).expect("nonzero")
}

/// The canonical (encoding-minimal) monic irreducible of degree `d`.
pub fn irreducible_poly(field: &Field, d: usize) -> Result<Polynomial> {
    if d == 0 {
        return Err(Error::InvalidDegree);
    }
    Ok(canonical_irreducible(field, d))
}

/// All monic irreducibles of degree `d`, in encoding order.
pub fn irreducibles(field: &Field, d: usize) -> Vec<Polynomial> {
    let q = field.order();
    let mut low = vec![0u64; d];
    let mut out = Vec::new();
    loop {
        let mut coeffs = low.clone();
        coeffs.push(1);
        let f = Polynomial::from_coeffs(field, coeffs);
        if is_irreducible(&f) {
            out.push(f);
        }
        let mut i = 0;
        loop {
            if i == d {
                return out;
            }
            low[i] += 1;
            if low[i] < q {
                break;
            }
            low[i] = 0;
            i += 1;
        }
    }
}

/// Distinct roots of `f` in its coefficient field, ascending by encoding.
pub fn roots(f: &Polynomial) -> Vec<u64> {
    if f.is_constant() {
        return Vec::new();
    }
    let f = f.monic();
    let x = Polynomial::x(f.field());
    let split = (&frobenius_x(&f) - &x).gcd(&f);
    let mut out: Vec<u64> = equal_degree(&split, 1)
        .into_iter()
        .map(|lin| f.field().neg(lin.coeff(0)))
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(field: &Field, c: &[i64]) -> Polynomial {
        Polynomial::from_ints(field, c)
    }

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn squarefree_examples() {
        let f = f2();
        assert_eq!(
            squarefree_decompose(&p(&f, &[0, 0, 1])).unwrap(),
            vec![(p(&f, &[0, 1]), 2)]
        );
        assert_eq!(
            squarefree_decompose(&p(&f, &[0, 0, 0, 0, 1, 0, 1])).unwrap(),
            vec![(p(&f, &[0, 1]), 4), (p(&f, &[1, 1]), 2)]
        );
        assert_eq!(
            squarefree_decompose(&p(&f, &[1, 0, 0, 0, 1])).unwrap(),
            vec![(p(&f, &[1, 1]), 4)]
        );
        assert_eq!(
            squarefree_decompose(&Polynomial::zero(&f)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn factor_examples() {
        let f = f2();
        let fac = factor(&p(&f, &[0, 0, 1, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(p(&f, &[0, 1]), 2), (p(&f, &[1, 1]), 2)]);

        let f5 = Field::prime(5).unwrap();
        let fac = factor(&p(&f5, &[1, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(p(&f5, &[2, 1]), 1), (p(&f5, &[3, 1]), 1)]);

        let fac = factor(&p(&f, &[1, 1, 1])).unwrap();
        assert_eq!(fac.factors, vec![(p(&f, &[1, 1, 1]), 1)]);
    }

    #[test]
    fn factor_keeps_unit() {
        let f7 = Field::prime(7).unwrap();
        let g = p(&f7, &[6, 0, 3, 3]);
        let fac = factor(&g).unwrap();
        assert_eq!(fac.unit.value(), 3);
        assert_eq!(fac.expand(), g);
    }

    #[test]
    fn canonical_irreducibles() {
        let f = f2();
        assert_eq!(irreducible_poly(&f, 1).unwrap(), p(&f, &[0, 1]));
        assert_eq!(irreducible_poly(&f, 4).unwrap(), p(&f, &[1, 1, 0, 0, 1]));
        let f3 = Field::prime(3).unwrap();
        assert_eq!(irreducible_poly(&f3, 2).unwrap(), p(&f3, &[1, 0, 1]));
        assert_eq!(irreducible_poly(&f, 0), Err(Error::InvalidDegree));
    }

    #[test]
    fn roots_in_extension() {
        let f4 = Field::create(2, 2).unwrap();
        // T^2+T+1 splits over F_4 with roots z, z+1.
        let g = Polynomial::from_coeffs(&f4, vec![1, 1, 1]);
        assert_eq!(roots(&g), vec![2, 3]);
        assert!(roots(&Polynomial::from_ints(&f2(), &[1, 1, 1])).is_empty());
    }

    #[test]
    fn high_multiplicity_in_odd_characteristic() {
        let f3 = Field::prime(3).unwrap();
        let a = p(&f3, &[1, 1]);
        let b = p(&f3, &[1, 0, 1]);
        let g = &a.pow(9) * &b.pow(4);
        let fac = factor(&g).unwrap();
        assert_eq!(fac.factors, vec![(a, 9), (b, 4)]);
    }

    #[test]
    fn translates_by_constants_split() {
        // roots of g(T+c) differ by constants, so low-degree splitters fail
        let f4 = Field::create(2, 2).unwrap();
        let g = irreducibles(&f4, 6).into_iter().next().unwrap();
        let mut want: Vec<Polynomial> = (0..4).map(|c| g.compose(&Polynomial::linear(&f4, c))).collect();
        want.sort();
        let prod = want.iter().fold(Polynomial::one(&f4), |acc, h| &acc * h);
        assert_eq!(equal_degree(&prod, 6), want);
    }
}
