// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::{is_irreducible, Polynomial};

/// Fields up to this order get log/antilog/Zech tables at construction.
const TABLE_LIMIT: u64 = 1 << 12;

/// Default upper bound on `p^m`: anything whose element encodings fit in a `u64`.
pub const DEFAULT_MAX_ORDER: u64 = u64::MAX;

const NO_LOG: u32 = u32::MAX;

/// A finite field `F_{p^m}` with its canonical defining polynomial.
///
/// Elements are handled as raw `u64` encodings `sum c_i p^i` of their
/// coordinate vectors in the basis `1, z, ..., z^{m-1}`; the field value
/// interprets them. Two fields with equal `(p, m)` are identical.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

struct Inner {
    p: u64,
    m: usize,
    order: u64,
    /// Monic modulus coefficients, lowest first; empty for prime fields.
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field> {
        Field::create(p, 1)
    }

    pub fn create(p: u64, m: usize) -> Result<Field> {
        Field::create_bounded(p, m, DEFAULT_MAX_ORDER)
    }

    pub fn create_bounded(p: u64, m: usize, max_order: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidDegree);
        }
        let order = u32::try_from(m)
            .ok()
            .and_then(|e| p.checked_pow(e))
            .filter(|&o| o <= max_order)
            .ok_or(Error::FieldTooLarge { p, m })?;
        if m == 1 {
            return Ok(Field(Arc::new(Inner {
                p,
                m,
                order,
                modulus: Vec::new(),
                tables: None,
            })));
        }
        let base = Field::prime(p)?;
        let modulus = canonical_irreducible(&base, m).coeffs().to_vec();
        let mut inner = Inner {
            p,
            m,
            order,
            modulus,
            tables: None,
        };
        if order <= TABLE_LIMIT {
            inner.tables = Some(Tables::build(&inner));
        }
        Ok(Field(Arc::new(inner)))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn m(&self) -> usize {
        self.0.m
    }

    /// Number of elements `q = p^m`.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.m == 1
    }

    /// The defining polynomial as a polynomial over `F_p`, or `None` for a prime field.
    pub fn modulus(&self) -> Option<Polynomial> {
        if self.is_prime_field() {
            return None;
        }
        let base = Field::prime(self.p()).expect("characteristic is prime");
        Some(Polynomial::from_coeffs(&base, self.0.modulus.clone()))
    }

    pub fn prime_subfield(&self) -> Field {
        if self.is_prime_field() {
            self.clone()
        } else {
            Field::prime(self.p()).expect("characteristic is prime")
        }
    }

    pub fn same(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.m == other.0.m)
    }

    /// The image of an integer under `Z -> F_p -> F`.
    pub fn from_int(&self, n: i64) -> u64 {
        let p = self.p() as i128;
        (n as i128).rem_euclid(p) as u64
    }

    /// The root `z` of the modulus. A prime field has no modulus and reports 1.
    pub fn generator(&self) -> u64 {
        if self.is_prime_field() {
            1
        } else {
            self.p()
        }
    }

    pub fn coords(&self, a: u64) -> Vec<u64> {
        let p = self.p();
        let mut out = Vec::with_capacity(self.m());
        let mut rest = a;
        for _ in 0..self.m() {
            out.push(rest % p);
            rest /= p;
        }
        out
    }

    pub fn from_coords(&self, coords: &[u64]) -> u64 {
        let p = self.p();
        coords
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * p + c % p)
    }

    pub fn is_valid(&self, a: u64) -> bool {
        a < self.order() || (self.order() == u64::MAX && a == u64::MAX)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let inner = &*self.0;
        if inner.m == 1 {
            let (s, overflow) = a.overflowing_add(b);
            return if overflow || s >= inner.p {
                s.wrapping_sub(inner.p)
            } else {
                s
            };
        }
        if inner.p == 2 {
            return a ^ b;
        }
        if let Some(t) = &inner.tables {
            if a == 0 {
                return b;
            }
            if b == 0 {
                return a;
            }
            let n = t.zech.len() as u64;
            let la = t.log[a as usize] as u64;
            let lb = t.log[b as usize] as u64;
            let k = (lb + n - la) % n;
            let z = t.zech[k as usize];
            if z == NO_LOG {
                return 0;
            }
            return t.exp[(la + z as u64) as usize] as u64;
        }
        let p = inner.p;
        let mut ca = self.coords(a);
        for (x, y) in ca.iter_mut().zip(self.coords(b)) {
            *x = (*x + y) % p;
        }
        self.from_coords(&ca)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let inner = &*self.0;
        if a == 0 || inner.p == 2 {
            return a;
        }
        if inner.m == 1 {
            return inner.p - a;
        }
        let p = inner.p;
        let c: Vec<u64> = self.coords(a).into_iter().map(|x| (p - x) % p).collect();
        self.from_coords(&c)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.0;
        if inner.m == 1 {
            return ((a as u128 * b as u128) % inner.p as u128) as u64;
        }
        if let Some(t) = &inner.tables {
            let s = t.log[a as usize] as usize + t.log[b as usize] as usize;
            return t.exp[s] as u64;
        }
        if inner.p == 2 {
            return self.mul_binary(a, b);
        }
        mul_generic(inner, a, b)
    }

    fn mul_binary(&self, a: u64, b: u64) -> u64 {
        let m = self.0.m;
        let mut prod: u128 = 0;
        for i in 0..64 {
            if (b >> i) & 1 == 1 {
                prod ^= (a as u128) << i;
            }
        }
        let modulus: u128 = self
            .0
            .modulus
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, &c)| acc | ((c as u128) << i));
        for i in (m..128).rev() {
            if (prod >> i) & 1 == 1 {
                prod ^= modulus << (i - m);
            }
        }
        prod as u64
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.0.tables {
            let n = t.zech.len() as u128;
            let k = (t.log[a as usize] as u128 * (e as u128 % n)) % n;
            return t.exp[k as usize] as u64;
        }
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if let Some(t) = &self.0.tables {
            let n = t.zech.len();
            let l = t.log[a as usize] as usize;
            return Some(t.exp[(n - l) % n] as u64);
        }
        if self.is_prime_field() {
            return Some(inv_mod(a, self.p()));
        }
        Some(self.pow(a, self.order() - 2))
    }

    pub fn div(&self, a: u64, b: u64) -> Option<u64> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(a, self.p())
    }

    /// The unique `c` with `c^p = a`.
    pub fn pth_root(&self, a: u64) -> u64 {
        if self.is_prime_field() {
            return a;
        }
        self.pow(a, self.order() / self.p())
    }

    /// Iterates over every element in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.order()
    }

    /// Text form: decimal residue for prime fields, a polynomial in `z` otherwise.
    pub fn format(&self, a: u64) -> String {
        if self.is_prime_field() {
            return a.to_string();
        }
        let coords = self.coords(a);
        let mut terms = Vec::new();
        for (k, &c) in coords.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            terms.push(match (c, k) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.m.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.0.p, self.0.m)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}^{}", self.0.p, self.0.m)
        }
    }
}

impl Tables {
    fn build(inner: &Inner) -> Tables {
        let q = inner.order;
        let n = (q - 1) as usize;
        let g = primitive_element(inner);
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![NO_LOG; q as usize];
        let mut cur = 1u64;
        for i in 0..2 * n {
            exp[i] = cur as u32;
            if i < n {
                log[cur as usize] = i as u32;
            }
            cur = mul_generic(inner, cur, g);
        }
        let mut zech = vec![NO_LOG; n];
        for (k, z) in zech.iter_mut().enumerate() {
            let v = add_generic(inner, 1, exp[k] as u64);
            if v != 0 {
                *z = log[v as usize];
            }
        }
        Tables { exp, log, zech }
    }
}

fn coords_of(inner: &Inner, a: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(inner.m);
    let mut rest = a;
    for _ in 0..inner.m {
        out.push(rest % inner.p);
        rest /= inner.p;
    }
    out
}

fn encode(inner: &Inner, coords: &[u64]) -> u64 {
    coords.iter().rev().fold(0u64, |acc, &c| acc * inner.p + c)
}

fn add_generic(inner: &Inner, a: u64, b: u64) -> u64 {
    let p = inner.p;
    let c: Vec<u64> = coords_of(inner, a)
        .into_iter()
        .zip(coords_of(inner, b))
        .map(|(x, y)| (x + y) % p)
        .collect();
    encode(inner, &c)
}

fn mul_generic(inner: &Inner, a: u64, b: u64) -> u64 {
    let p = inner.p as u128;
    let m = inner.m;
    let ca = coords_of(inner, a);
    let cb = coords_of(inner, b);
    let mut prod = vec![0u128; 2 * m - 1];
    for (i, &x) in ca.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in cb.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u128 * y as u128) % p;
        }
    }
    for i in (m..2 * m - 1).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        for j in 0..m {
            let sub = c * inner.modulus[j] as u128 % p;
            prod[i - m + j] = (prod[i - m + j] + p - sub) % p;
        }
        prod[i] = 0;
    }
    let coords: Vec<u64> = prod[..m].iter().map(|&c| c as u64).collect();
    encode(inner, &coords)
}

fn pow_generic(inner: &Inner, a: u64, mut e: u64) -> u64 {
    let mut base = a;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_generic(inner, acc, base);
        }
        base = mul_generic(inner, base, base);
        e >>= 1;
    }
    acc
}

fn primitive_element(inner: &Inner) -> u64 {
    let n = inner.order - 1;
    let primes = prime_factors(n);
    (1..inner.order)
        .find(|&g| primes.iter().all(|&r| pow_generic(inner, g, n / r) != 1))
        .expect("multiplicative group of a finite field is cyclic")
}

/// Distinct prime divisors by trial division.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    s0.rem_euclid(p as i128) as u64
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    a %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, n);
        }
        a = mul_mod(a, a, n);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The monic irreducible of degree `d` over `field` that is minimal in
/// encoding order (`sum enc(c_i) q^i`).
pub(crate) fn canonical_irreducible(field: &Field, d: usize) -> Polynomial {
    let q = field.order();
    let mut low = vec![0u64; d];
    loop {
        let mut coeffs = low.clone();
        coeffs.push(1);
        let f = Polynomial::from_coeffs(field, coeffs);
        if is_irreducible(&f) {
            return f;
        }
        // mixed-radix increment, lowest coefficient first
        let mut i = 0;
        loop {
            assert!(i < d, "an irreducible polynomial of every degree exists");
            low[i] += 1;
            if low[i] < q {
                break;
            }
            low[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn miller_rabin_small_and_large() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(18446744073709551557));
        assert!(!is_prime(3215031751));
    }

    #[test]
    fn create_rejects_bad_input() {
        assert_eq!(Field::create(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::create(2, 0).unwrap_err(), Error::InvalidDegree);
        assert!(matches!(
            Field::create(2, 64),
            Err(Error::FieldTooLarge { .. })
        ));
        assert!(matches!(
            Field::create_bounded(3, 4, 80),
            Err(Error::FieldTooLarge { .. })
        ));
    }

    #[test]
    fn canonical_moduli() {
        let f4 = Field::create(2, 2).unwrap();
        assert_eq!(f4.0.modulus, vec![1, 1, 1]);
        let f16 = Field::create(2, 4).unwrap();
        assert_eq!(f16.0.modulus, vec![1, 1, 0, 0, 1]);
        let f9 = Field::create(3, 2).unwrap();
        assert_eq!(f9.0.modulus, vec![1, 0, 1]);
        assert!(Field::create(5, 1).unwrap().modulus().is_none());
    }

    #[test]
    fn table_and_generic_paths_agree() {
        // F_{3^4} is tabled; compare against the coordinate arithmetic.
        let f = Field::create(3, 4).unwrap();
        let inner = &*f.0;
        for a in (0..81).step_by(7) {
            for b in 0..81 {
                assert_eq!(f.mul(a, b), mul_generic(inner, a, b));
                assert_eq!(f.add(a, b), add_generic(inner, a, b));
            }
        }
    }

    #[test]
    fn binary_untabled_field() {
        let f = Field::create(2, 20).unwrap();
        let a = 0x5_1234;
        let inv = f.inv(a).unwrap();
        assert_eq!(f.mul(a, inv), 1);
        assert_eq!(f.mul_binary(a, 0x3_0001), mul_generic(&f.0, a, 0x3_0001));
        assert_eq!(f.pth_root(f.frobenius(a)), a);
    }

    #[test]
    fn format_elements() {
        let f4 = Field::create(2, 2).unwrap();
        assert_eq!(f4.format(3), "z+1");
        assert_eq!(f4.format(0), "0");
        let f9 = Field::create(3, 2).unwrap();
        assert_eq!(f9.format(2 * 3 + 1), "2*z+1");
        assert_eq!(Field::prime(7).unwrap().format(5), "5");
    }
}
