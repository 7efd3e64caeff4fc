//! The reduction map from Q(ζ_e) into a finite field of characteristic p.
//!
//! p-power roots of unity collapse to 1, an m-th root of unity (m the
//! p'-part of e) goes to a fixed element of exact order m in GF(p^k),
//! k = ord_m(p). The map is a ring homomorphism on all p-integral values
//! (denominators prime to p), which covers algebraic integers and block
//! idempotent coefficients alike.

use super::gf::{Gf, GfElt};
use super::CycNum;
use crate::arith;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::sync::Arc;

pub struct FpEmbedding {
    p: u64,
    e: u64,
    m: u64,
    field: Arc<Gf>,
    /// Image of ζ_e^i for i in 0..e.
    zeta_images: Vec<GfElt>,
    generator: GfElt,
}

impl FpEmbedding {
    /// Embedding for values of conductor dividing `e`, reducing modulo `p`.
    pub fn new(p: u64, e: u64) -> Result<FpEmbedding> {
        if !arith::is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::invalid("conductor must be positive"));
        }
        let m = arith::p_prime_part(e as u128, p) as u64;
        let k = if m == 1 { 1 } else { arith::mult_order(p % m, m) as usize };
        let field = Arc::new(Gf::new(p, k)?);
        let generator = field.canonical_generator();
        let w = field.pow(&generator, (field.size() - 1) / m);
        if field.elt_order(&w) != m {
            return Err(Error::invariant("primitive root image has wrong order"));
        }
        // ζ_e = ζ_m^s · ζ_f^t for s f + t m = 1 (f the p-part), and the
        // p-power factor collapses, so ζ_e^i maps to w^(s i mod m)
        let f = (e / m) as i64;
        let (s, _) = bezout(f, m as i64);
        let s = s.rem_euclid(m as i64) as u64;
        let mut zeta_images = Vec::with_capacity(e as usize);
        for i in 0..e {
            let exp = (i as u128 * s as u128 % m as u128) as u64;
            zeta_images.push(field.pow(&w, exp));
        }
        Ok(FpEmbedding {
            p,
            e,
            m,
            field,
            zeta_images,
            generator,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn conductor(&self) -> u64 {
        self.e
    }

    pub fn p_prime_part(&self) -> u64 {
        self.m
    }

    pub fn field(&self) -> &Arc<Gf> {
        &self.field
    }

    /// Reduces a p-integral cyclotomic value; denominators divisible by p
    /// are a domain error, as is a conductor not dividing e.
    pub fn reduce(&self, value: &CycNum) -> Result<GfElt> {
        if self.e % value.conductor() != 0 {
            return Err(Error::domain(format!(
                "value of conductor {} does not embed in Q(zeta_{})",
                value.conductor(),
                self.e
            )));
        }
        let v = value.promoted(self.e);
        let mut acc = self.field.zero();
        for (i, c) in v.coeffs().iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let scalar = self.rational_mod_p(c.numer(), c.denom())?;
            let term = self.field.scale(&self.zeta_images[i], scalar);
            acc = self.field.add(&acc, &term);
        }
        Ok(acc)
    }

    fn rational_mod_p(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        let p = BigInt::from(self.p);
        let dm = den.mod_floor(&p);
        if dm.is_zero() {
            return Err(Error::domain(
                "value is not p-integral: denominator divisible by p",
            ));
        }
        let nm = num.mod_floor(&p);
        let n = big_to_u64(&nm);
        let d = big_to_u64(&dm);
        Ok((n as u128 * arith::inv_mod(d, self.p) as u128 % self.p as u128) as u64)
    }

    /// Reproducibility record: field, modulus, generator, root image.
    pub fn describe(&self) -> String {
        format!(
            "GF({}^{}) modulus_low_coeffs={:?} generator={:?} zeta_{}_image=generator^{}",
            self.p,
            self.field.k(),
            self.field.modulus_coeffs(),
            self.generator.coeffs(),
            self.m,
            (self.field.size() - 1) / self.m
        )
    }
}

fn big_to_u64(n: &BigInt) -> u64 {
    debug_assert!(!n.is_negative());
    let (_, digits) = n.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

/// (x, y) with a x + b y = gcd(a, b).
fn bezout(a: i64, b: i64) -> (i64, i64) {
    if b == 0 {
        (1, 0)
    } else {
        let (x, y) = bezout(b, a % b);
        (y, x - (a / b) * y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn integer_reduction() {
        let emb = FpEmbedding::new(3, 3).unwrap();
        assert!(emb
            .field()
            .is_zero(&emb.reduce(&CycNum::from_int(3)).unwrap()));
        assert_eq!(
            emb.reduce(&CycNum::from_int(4)).unwrap(),
            emb.field().one()
        );
    }

    #[test]
    fn p_power_roots_collapse() {
        let emb = FpEmbedding::new(5, 5).unwrap();
        let z5 = CycNum::root_of_unity(5, 1);
        assert_eq!(emb.reduce(&z5).unwrap(), emb.field().one());
    }

    #[test]
    fn seventh_root_mod_two_lands_in_gf8() {
        let emb = FpEmbedding::new(2, 7).unwrap();
        assert_eq!(emb.field().k(), 3); // ord_7(2) = 3
        let img = emb.reduce(&CycNum::root_of_unity(7, 1)).unwrap();
        assert_eq!(emb.field().elt_order(&img), 7);
    }

    #[test]
    fn ring_homomorphism_on_random_integral_pairs() {
        let emb = FpEmbedding::new(2, 12).unwrap();
        // pseudo-random small integral combinations of roots of unity
        let mut vals = Vec::new();
        for a in -2i64..3 {
            for k in 0..4 {
                let v = CycNum::root_of_unity(12, k)
                    .scale(&BigRational::from(num_bigint::BigInt::from(a)));
                vals.push(v);
            }
        }
        for x in &vals {
            for y in &vals {
                let lhs = emb.reduce(&x.mul(y)).unwrap();
                let rhs = emb.field().mul(&emb.reduce(x).unwrap(), &emb.reduce(y).unwrap());
                assert_eq!(lhs, rhs);
                let lhs = emb.reduce(&x.add(y)).unwrap();
                let rhs = emb.field().add(&emb.reduce(x).unwrap(), &emb.reduce(y).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn non_p_integral_rejected() {
        let emb = FpEmbedding::new(3, 3).unwrap();
        let third = CycNum::from_rational(BigRational::new(
            num_bigint::BigInt::from(1),
            num_bigint::BigInt::from(3),
        ));
        assert!(emb.reduce(&third).is_err());
        // 1/2 is 3-integral
        let half = CycNum::from_rational(BigRational::new(
            num_bigint::BigInt::from(1),
            num_bigint::BigInt::from(2),
        ));
        assert_eq!(emb.reduce(&half).unwrap(), emb.field().from_u64(2));
    }
}
