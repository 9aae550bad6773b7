// SPDX-License-Identifier: Apache-2.0

use super::{prime_factors, Field, FieldElement};
use crate::error::{Error, Result};
use crate::polyring::{roots, Polynomial};

/// The canonical ring homomorphism `F_{p^a} -> F_{p^b}` for `a | b`.
///
/// The generator of the source maps to the root of the source modulus in the
/// destination that is smallest in encoding order among the roots compatible
/// with the canonical embeddings of the source's maximal subfields. For a
/// source of prime degree over `F_p` that is simply the smallest root.
#[derive(Clone, Debug)]
pub struct Embedding {
    src: Field,
    dst: Field,
    /// Images of `1, z, ..., z^{a-1}`.
    powers: Vec<u64>,
}

impl Embedding {
    pub fn new(src: &Field, dst: &Field) -> Result<Embedding> {
        if src.p() != dst.p() || dst.m() % src.m() != 0 {
            return Err(Error::IncompatibleEmbedding {
                src_p: src.p(),
                src_m: src.m(),
                dst_p: dst.p(),
                dst_m: dst.m(),
            });
        }
        let image = generator_image(src, dst)?;
        let mut powers = Vec::with_capacity(src.m());
        let mut cur = 1u64;
        for _ in 0..src.m() {
            powers.push(cur);
            cur = dst.mul(cur, image);
        }
        Ok(Embedding {
            src: src.clone(),
            dst: dst.clone(),
            powers,
        })
    }

    pub fn source(&self) -> &Field {
        &self.src
    }

    pub fn target(&self) -> &Field {
        &self.dst
    }

    /// Image of the source generator `z`.
    pub fn generator_image(&self) -> u64 {
        self.powers.get(1).copied().unwrap_or(1)
    }

    /// Applies the embedding to a raw source encoding.
    pub fn apply(&self, a: u64) -> u64 {
        self.src
            .coords(a)
            .iter()
            .zip(&self.powers)
            .fold(0, |acc, (&c, &pw)| self.dst.add(acc, self.dst.mul(c, pw)))
    }

    pub fn apply_poly(&self, f: &Polynomial) -> Polynomial {
        Polynomial::from_coeffs(
            &self.dst,
            f.coeffs().iter().map(|&c| self.apply(c)).collect(),
        )
    }
}

fn generator_image(src: &Field, dst: &Field) -> Result<u64> {
    if src.is_prime_field() || src.same(dst) {
        return Ok(src.generator());
    }
    let modulus = src.modulus().expect("extension field has a modulus");
    // F_p coefficients have the same encodings in every field of characteristic p.
    let lifted = Polynomial::from_coeffs(dst, modulus.coeffs().to_vec());
    let mut candidates = roots(&lifted);
    candidates.sort_unstable();

    // Maximal proper subfields F_{p^c}, c = a / r for primes r | a.
    let mut checks = Vec::new();
    for r in prime_factors(src.m() as u64) {
        let c = src.m() / r as usize;
        if c <= 1 {
            continue;
        }
        let sub = Field::create(src.p(), c)?;
        let into_src = Embedding::new(&sub, src)?.generator_image();
        let into_dst = Embedding::new(&sub, dst)?.generator_image();
        checks.push((src.coords(into_src), into_dst));
    }

    candidates
        .into_iter()
        .find(|&rho| {
            checks.iter().all(|(coords, expected)| {
                let mut acc = 0u64;
                for &c in coords.iter().rev() {
                    acc = dst.add(dst.mul(acc, rho), c);
                }
                acc == *expected
            })
        })
        .ok_or_else(|| Error::Internal("no compatible root for the canonical embedding".into()))
}

/// Embeds `a` from `src` into `dst` along the canonical embedding.
pub fn embed(src: &Field, dst: &Field, a: &FieldElement) -> Result<FieldElement> {
    if !a.field().same(src) {
        return Err(Error::FieldMismatch);
    }
    let e = Embedding::new(src, dst)?;
    Ok(FieldElement::new(dst, e.apply(a.value())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64, m: usize) -> Field {
        Field::create(p, m).unwrap()
    }

    #[test]
    fn prime_subfield_is_identity() {
        let f2 = field(2, 1);
        let f4 = field(2, 2);
        let one = FieldElement::one(&f2);
        assert_eq!(embed(&f2, &f4, &one).unwrap(), FieldElement::one(&f4));
        let f3 = field(3, 1);
        let f9 = field(3, 2);
        let two = FieldElement::new(&f3, 2);
        assert_eq!(embed(&f3, &f9, &two).unwrap().value(), 2);
    }

    #[test]
    fn f4_into_f16_uses_smallest_root() {
        // z^5 = z^2 + z and z^10 = z^2 + z + 1 are the roots of T^2+T+1 in F_16.
        let f4 = field(2, 2);
        let f16 = field(2, 4);
        let z = FieldElement::new(&f4, 2);
        assert_eq!(embed(&f4, &f16, &z).unwrap().value(), 0b0110);
    }

    #[test]
    fn self_embedding_is_identity() {
        let f = field(3, 2);
        for a in 0..9 {
            let e = FieldElement::new(&f, a);
            assert_eq!(embed(&f, &f, &e).unwrap(), e);
        }
    }

    #[test]
    fn incompatible_degrees_rejected() {
        assert!(matches!(
            Embedding::new(&field(2, 2), &field(2, 3)),
            Err(Error::IncompatibleEmbedding { .. })
        ));
        assert!(matches!(
            Embedding::new(&field(2, 1), &field(3, 2)),
            Err(Error::IncompatibleEmbedding { .. })
        ));
    }

    #[test]
    fn embeddings_are_homomorphisms() {
        for (p, a, b) in [(2, 2, 4), (2, 3, 6), (3, 2, 4), (2, 4, 8), (5, 1, 2)] {
            let src = field(p, a);
            let dst = field(p, b);
            let e = Embedding::new(&src, &dst).unwrap();
            for x in 0..src.order().min(40) {
                for y in 0..src.order().min(40) {
                    assert_eq!(e.apply(src.add(x, y)), dst.add(e.apply(x), e.apply(y)));
                    assert_eq!(e.apply(src.mul(x, y)), dst.mul(e.apply(x), e.apply(y)));
                }
            }
        }
    }

    #[test]
    fn towers_commute() {
        for (p, a, b, c) in [(2, 2, 4, 8), (2, 1, 3, 6), (3, 2, 4, 8), (2, 2, 6, 12), (2, 3, 6, 12)] {
            let fa = field(p, a);
            let fb = field(p, b);
            let fc = field(p, c);
            let ab = Embedding::new(&fa, &fb).unwrap();
            let bc = Embedding::new(&fb, &fc).unwrap();
            let ac = Embedding::new(&fa, &fc).unwrap();
            for x in 0..fa.order() {
                assert_eq!(bc.apply(ab.apply(x)), ac.apply(x), "F_{p}^{a}->{b}->{c} at {x}");
            }
        }
    }
}
