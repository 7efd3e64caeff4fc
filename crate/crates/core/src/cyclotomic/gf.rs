//! Arithmetic in GF(p^k) as polynomials over GF(p) modulo a canonical
//! irreducible polynomial.
//!
//! The modulus is the least monic irreducible of degree k, ordering
//! coefficient vectors (c_0, …, c_{k-1}) as base-p integers with c_0 the
//! least significant digit. This makes every field, and hence every
//! downstream block idempotent, reproducible across runs.

use crate::arith;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Signed;

/// An element of GF(p^k): coefficients of 1, x, …, x^(k-1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GfElt(Vec<u64>);

impl GfElt {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }
}

/// The field GF(p^k) with its canonical modulus.
#[derive(Debug)]
pub struct Gf {
    p: u64,
    k: usize,
    /// Non-leading coefficients of the monic modulus x^k + Σ modulus[i] x^i.
    modulus: Vec<u64>,
}

impl Gf {
    pub fn new(p: u64, k: usize) -> Result<Gf> {
        if !arith::is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::invalid("extension degree must be positive"));
        }
        let modulus = least_irreducible(p, k);
        Ok(Gf { p, k, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Field size p^k.
    pub fn size(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    pub fn modulus_coeffs(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> GfElt {
        GfElt(vec![0; self.k])
    }

    pub fn one(&self) -> GfElt {
        let mut c = vec![0; self.k];
        c[0] = 1;
        GfElt(c)
    }

    pub fn is_zero(&self, a: &GfElt) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    pub fn from_u64(&self, n: u64) -> GfElt {
        let mut c = vec![0; self.k];
        c[0] = n % self.p;
        GfElt(c)
    }

    pub fn from_bigint(&self, n: &BigInt) -> GfElt {
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.is_negative() {
            r += &p;
        }
        let digits = r.to_u64_digits().1;
        self.from_u64(digits.first().copied().unwrap_or(0))
    }

    /// Element with the given index in 0..p^k, base-p digits as coefficients.
    pub fn from_index(&self, mut idx: u64) -> GfElt {
        let mut c = vec![0; self.k];
        for slot in c.iter_mut() {
            *slot = idx % self.p;
            idx /= self.p;
        }
        GfElt(c)
    }

    pub fn add(&self, a: &GfElt, b: &GfElt) -> GfElt {
        GfElt(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| (x + y) % self.p)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GfElt) -> GfElt {
        GfElt(a.0.iter().map(|&x| (self.p - x) % self.p).collect())
    }

    pub fn sub(&self, a: &GfElt, b: &GfElt) -> GfElt {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &GfElt, s: u64) -> GfElt {
        let s = s % self.p;
        GfElt(
            a.0.iter()
                .map(|&x| ((x as u128 * s as u128) % self.p as u128) as u64)
                .collect(),
        )
    }

    pub fn mul(&self, a: &GfElt, b: &GfElt) -> GfElt {
        let p = self.p as u128;
        let mut raw = vec![0u128; 2 * self.k - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                raw[i + j] = (raw[i + j] + x as u128 * y as u128) % p;
            }
        }
        // reduce by x^k = -modulus
        for top in (self.k..raw.len()).rev() {
            let c = raw[top];
            if c == 0 {
                continue;
            }
            raw[top] = 0;
            for (i, &m) in self.modulus.iter().enumerate() {
                if m != 0 {
                    let sub = c * m as u128 % p;
                    raw[top - self.k + i] = (raw[top - self.k + i] + p - sub) % p;
                }
            }
        }
        GfElt(raw[..self.k].iter().map(|&c| c as u64).collect())
    }

    pub fn pow(&self, a: &GfElt, mut e: u64) -> GfElt {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &GfElt) -> Result<GfElt> {
        if self.is_zero(a) {
            return Err(Error::domain("inverse of zero in GF(p^k)"));
        }
        Ok(self.pow(a, self.size() - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn elt_order(&self, a: &GfElt) -> u64 {
        let q1 = self.size() - 1;
        let mut ord = q1;
        for r in arith::prime_divisors(q1 as u128) {
            while ord % r == 0 && self.pow(a, ord / r) == self.one() {
                ord /= r;
            }
        }
        ord
    }

    /// The canonical generator: least element (in index order) whose
    /// multiplicative order is p^k - 1.
    pub fn canonical_generator(&self) -> GfElt {
        let q = self.size();
        for idx in 1..q {
            let a = self.from_index(idx);
            if self.elt_order(&a) == q - 1 {
                return a;
            }
        }
        unreachable!("GF(p^k) has a primitive element")
    }
}

/// Least monic irreducible polynomial of degree k over GF(p); returns the
/// non-leading coefficients.
fn least_irreducible(p: u64, k: usize) -> Vec<u64> {
    let total = (p as u128).pow(k as u32);
    let mut idx: u128 = 0;
    loop {
        assert!(idx < total, "an irreducible polynomial of each degree exists");
        let mut c = vec![0u64; k];
        let mut rest = idx;
        for slot in c.iter_mut() {
            *slot = (rest % p as u128) as u64;
            rest /= p as u128;
        }
        if poly_is_irreducible(p, &c) {
            return c;
        }
        idx += 1;
    }
}

/// Rabin test: x^(p^k) = x mod f, and x^(p^(k/r)) - x coprime to f for each
/// prime r | k.
fn poly_is_irreducible(p: u64, low_coeffs: &[u64]) -> bool {
    let k = low_coeffs.len();
    if k == 1 {
        return true;
    }
    // x^(p^i) mod f by repeated Frobenius
    let xp = |times: usize| -> Vec<u64> {
        let mut t = poly_x(k);
        for _ in 0..times {
            t = poly_pow_mod(p, &t, p, low_coeffs);
        }
        t
    };
    let x = poly_x(k);
    if poly_sub(p, &xp(k), &x).iter().any(|&c| c != 0) {
        return false;
    }
    for r in arith::prime_divisors(k as u128) {
        let diff = poly_sub(p, &xp(k / r as usize), &x);
        if poly_gcd_is_one(p, &diff, low_coeffs) {
            continue;
        }
        return false;
    }
    true
}

fn poly_x(k: usize) -> Vec<u64> {
    // the residue of x for a modulus of degree k >= 2
    let mut v = vec![0; k];
    v[1] = 1;
    v
}

fn poly_mul_mod(p: u64, a: &[u64], b: &[u64], low: &[u64]) -> Vec<u64> {
    let k = low.len();
    let pp = p as u128;
    let mut raw = vec![0u128; 2 * k.max(1) - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            raw[i + j] = (raw[i + j] + x as u128 * y as u128) % pp;
        }
    }
    for top in (k..raw.len()).rev() {
        let c = raw[top];
        if c == 0 {
            continue;
        }
        raw[top] = 0;
        for (i, &m) in low.iter().enumerate() {
            if m != 0 {
                let sub = c * m as u128 % pp;
                raw[top - k + i] = (raw[top - k + i] + pp - sub) % pp;
            }
        }
    }
    raw[..k].iter().map(|&c| c as u64).collect()
}

fn poly_pow_mod(p: u64, a: &[u64], mut e: u64, low: &[u64]) -> Vec<u64> {
    let k = low.len();
    let mut acc = vec![0u64; k];
    acc[0] = 1;
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(p, &acc, &base, low);
        }
        base = poly_mul_mod(p, &base, &base, low);
        e >>= 1;
    }
    acc
}

fn poly_sub(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter()
        .zip(b.iter())
        .map(|(&x, &y)| (x + p - y) % p)
        .collect()
}

/// gcd(g, f) = 1 where g is given by its residue mod f and f is monic with
/// low coefficients `low`.
fn poly_gcd_is_one(p: u64, g_mod_f: &[u64], low: &[u64]) -> bool {
    // full f = x^k + low
    let mut f: Vec<u64> = low.to_vec();
    f.push(1);
    let mut g: Vec<u64> = g_mod_f.to_vec();
    trim(&mut g);
    trim(&mut f);
    while !g.is_empty() {
        let r = poly_rem(p, &f, &g);
        f = g;
        g = r;
    }
    f.len() == 1
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(p: u64, num: &[u64], den: &[u64]) -> Vec<u64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead_inv = arith::inv_mod(den[dd], p);
    while rem.len() > dd {
        let c = (rem[rem.len() - 1] as u128 * lead_inv as u128 % p as u128) as u64;
        let shift = rem.len() - 1 - dd;
        if c != 0 {
            for (i, &dc) in den.iter().enumerate() {
                let sub = (c as u128 * dc as u128 % p as u128) as u64;
                rem[shift + i] = (rem[shift + i] + p - sub) % p;
            }
        }
        rem.pop();
        trim(&mut rem);
        if rem.len() <= dd {
            break;
        }
    }
    trim(&mut rem);
    rem
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf8_arithmetic() {
        let f = Gf::new(2, 3).unwrap();
        assert_eq!(f.size(), 8);
        let g = f.canonical_generator();
        assert_eq!(f.elt_order(&g), 7);
        let inv = f.inv(&g).unwrap();
        assert_eq!(f.mul(&g, &inv), f.one());
    }

    #[test]
    fn prime_field() {
        let f = Gf::new(7, 1).unwrap();
        let three = f.from_u64(3);
        let five = f.from_u64(5);
        assert_eq!(f.mul(&three, &five), f.from_u64(1));
        assert_eq!(f.add(&three, &five), f.from_u64(1));
        assert_eq!(f.inv(&three).unwrap(), five);
    }

    #[test]
    fn gf9_has_canonical_modulus() {
        let f = Gf::new(3, 2).unwrap();
        // x^2 + 1 is the least irreducible over GF(3): x^2, x^2+x, x^2+2x,
        // and x^2+2 = (x+1)(x+2) all factor; index order hits (1,0) first.
        assert_eq!(f.modulus_coeffs(), &[1, 0]);
        let g = f.canonical_generator();
        assert_eq!(f.elt_order(&g), 8);
    }

    #[test]
    fn from_bigint_wraps_negatives() {
        let f = Gf::new(5, 1).unwrap();
        assert_eq!(f.from_bigint(&BigInt::from(-3)), f.from_u64(2));
        assert_eq!(f.from_bigint(&BigInt::from(12)), f.from_u64(2));
    }

    #[test]
    fn distributes_over_random_elements() {
        let f = Gf::new(3, 3).unwrap();
        for i in 0..27 {
            for j in 0..27 {
                let (a, b) = (f.from_index(i), f.from_index(j));
                let lhs = f.mul(&f.add(&a, &b), &f.add(&a, &b));
                let rhs = f.add(
                    &f.add(&f.mul(&a, &a), &f.scale(&f.mul(&a, &b), 2)),
                    &f.mul(&b, &b),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }
}
