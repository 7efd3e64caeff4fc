//! Exact arithmetic in cyclotomic fields Q(ζ_e).
//!
//! Values are stored on the power basis 1, ζ, …, ζ^(φ(e)-1) modulo the e-th
//! cyclotomic polynomial, with exact rational coefficients. The
//! representation at a fixed conductor is canonical, so equality is
//! coefficient equality after promotion to a common conductor.

mod embedding;
mod gf;

pub use embedding::FpEmbedding;
pub use gf::{Gf, GfElt};

use crate::arith;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// An element of Q(ζ_e) in canonical power-basis form.
#[derive(Clone)]
pub struct CycNum {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycNum {
    /// Value equality: representations are compared after promotion to a
    /// common conductor.
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = self.common(other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for CycNum {}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the e-th cyclotomic polynomial, ascending, monic.
pub fn cyclotomic_polynomial(e: u64) -> Arc<Vec<BigInt>> {
    if let Some(hit) = cyclotomic_cache().lock().unwrap().get(&e) {
        return hit.clone();
    }
    let poly = if e == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // (x^e - 1) / prod of lower cyclotomic polynomials
        let mut num = vec![BigInt::zero(); e as usize + 1];
        num[0] = BigInt::from(-1);
        num[e as usize] = BigInt::one();
        for d in arith::divisors(e) {
            if d < e {
                num = poly_div_exact(&num, &cyclotomic_polynomial(d));
            }
        }
        num
    };
    let arc = Arc::new(poly);
    cyclotomic_cache()
        .lock()
        .unwrap()
        .entry(e)
        .or_insert_with(|| arc.clone())
        .clone()
}

/// Exact division of integer polynomials; `den` must be monic and divide.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for shift in (0..=nd - dd).rev() {
        let c = rem[shift + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[shift] = c.clone();
        for (i, dc) in den.iter().enumerate() {
            rem[shift + i] -= &c * dc;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

/// Reduces a raw coefficient vector (powers of ζ_e) modulo Φ_e and trims to
/// length φ(e).
fn reduce_mod_cyclotomic(mut v: Vec<BigRational>, e: u64) -> Vec<BigRational> {
    let phi = arith::euler_phi(e) as usize;
    let modpoly = cyclotomic_polynomial(e);
    while v.len() > phi {
        let c = v.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        let shift = v.len() - phi;
        for (i, mc) in modpoly.iter().take(phi).enumerate() {
            let term = &c * BigRational::from(mc.clone());
            v[shift + i] -= term;
        }
    }
    v.resize(phi, BigRational::zero());
    v
}

impl CycNum {
    pub fn zero(conductor: u64) -> CycNum {
        CycNum {
            conductor,
            coeffs: vec![BigRational::zero(); arith::euler_phi(conductor) as usize],
        }
    }

    pub fn one(conductor: u64) -> CycNum {
        CycNum::from_rational(BigRational::one()).promoted(conductor)
    }

    pub fn from_rational(q: BigRational) -> CycNum {
        CycNum {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(n: i64) -> CycNum {
        CycNum::from_rational(BigRational::from(BigInt::from(n)))
    }

    /// Σ c·ζ_e^exp over the given (exp, c) terms, reduced to canonical form.
    pub fn from_power_coeffs(e: u64, terms: &[(u64, BigRational)]) -> CycNum {
        let mut raw = vec![BigRational::zero(); e as usize];
        for (exp, c) in terms {
            raw[(exp % e) as usize] += c;
        }
        CycNum {
            conductor: e,
            coeffs: reduce_mod_cyclotomic(raw, e),
        }
    }

    /// ζ_e^k, reduced to canonical form.
    pub fn root_of_unity(e: u64, k: i64) -> CycNum {
        let kk = k.rem_euclid(e as i64) as usize;
        let mut raw = vec![BigRational::zero(); kk + 1];
        raw[kk] = BigRational::one();
        CycNum {
            conductor: e,
            coeffs: reduce_mod_cyclotomic(raw, e),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Re-expresses the value in Q(ζ_new) for `conductor | new`.
    pub fn promoted(&self, new: u64) -> CycNum {
        assert_eq!(
            new % self.conductor,
            0,
            "promotion target must be a multiple of the conductor"
        );
        if new == self.conductor {
            return self.clone();
        }
        let ratio = (new / self.conductor) as usize;
        let mut raw = vec![BigRational::zero(); (self.coeffs.len() - 1) * ratio + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[i * ratio] = c.clone();
            }
        }
        CycNum {
            conductor: new,
            coeffs: reduce_mod_cyclotomic(raw, new),
        }
    }

    fn common(&self, other: &CycNum) -> (CycNum, CycNum) {
        let e = num_integer::lcm(self.conductor, other.conductor);
        (self.promoted(e), other.promoted(e))
    }

    pub fn add(&self, other: &CycNum) -> CycNum {
        let (mut a, b) = self.common(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &CycNum) -> CycNum {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycNum) -> CycNum {
        let (a, b) = self.common(other);
        let mut raw = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        CycNum {
            conductor: a.conductor,
            coeffs: reduce_mod_cyclotomic(raw, a.conductor),
        }
    }

    pub fn scale(&self, q: &BigRational) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// The Galois automorphism ζ ↦ ζ^j, for gcd(j, e) = 1.
    pub fn galois(&self, j: u64) -> Result<CycNum> {
        let e = self.conductor;
        if num_integer::gcd(j % e, e) != 1 {
            return Err(Error::precondition(format!(
                "galois exponent {j} is not coprime to conductor {e}"
            )));
        }
        let mut raw = vec![BigRational::zero(); e as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let target = (i as u64 * j % e) as usize;
                raw[target] += c;
            }
        }
        Ok(CycNum {
            conductor: e,
            coeffs: reduce_mod_cyclotomic(raw, e),
        })
    }

    /// Complex conjugation ζ ↦ ζ^(-1).
    pub fn conj(&self) -> CycNum {
        if self.conductor <= 2 {
            return self.clone();
        }
        self.galois(self.conductor - 1).expect("e-1 coprime to e")
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        let q = self.as_rational()?;
        if q.denom().is_one() {
            Some(q.numer().clone())
        } else {
            None
        }
    }

    /// True when the value lies in Z[ζ_e] (all power-basis coefficients are
    /// integers; Z[ζ_e] is the full ring of integers of Q(ζ_e)).
    pub fn is_algebraic_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Total order at a common conductor (coefficient-lexicographic);
    /// used only to fix deterministic row orderings.
    pub fn cmp_canonical(&self, other: &CycNum) -> Ordering {
        let (a, b) = self.common(other);
        for (x, y) in a.coeffs.iter().zip(b.coeffs.iter()) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl std::fmt::Debug for CycNum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for CycNum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "z{}^{}", self.conductor, i)?;
            } else {
                write!(f, "{c}*z{}^{}", self.conductor, i)?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum::add(self, rhs)
    }
}

impl std::ops::Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum::sub(self, rhs)
    }
}

impl std::ops::Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        CycNum::mul(self, rhs)
    }
}

impl std::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::neg(self)
    }
}

/// True when every value is fixed by each Galois automorphism that fixes
/// m-th roots (m the p'-part of the conductor) and moves p-power roots.
pub fn is_p_rational(values: &[CycNum], p: u64) -> Result<bool> {
    let e = values
        .iter()
        .fold(1u64, |acc, v| num_integer::lcm(acc, v.conductor()));
    let m = arith::p_prime_part(e as u128, p) as u64;
    if m == e {
        return Ok(true);
    }
    for j in 2..e {
        if num_integer::gcd(j, e) != 1 || j % m != 1 % m {
            continue;
        }
        for v in values {
            let v = v.promoted(e);
            if v.galois(j)? != v {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// JSON encoding `{"e": e, "coeffs": [["num","den"], …]}` with
/// decimal-string integers.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct CycNumJson {
    pub e: u64,
    pub coeffs: Vec<(String, String)>,
}

impl CycNumJson {
    pub fn from_value(v: &CycNum) -> CycNumJson {
        CycNumJson {
            e: v.conductor(),
            coeffs: v
                .coeffs()
                .iter()
                .map(|c| (c.numer().to_string(), c.denom().to_string()))
                .collect(),
        }
    }

    pub fn into_value(self) -> Result<CycNum> {
        if self.e == 0 {
            return Err(Error::invalid("conductor must be positive"));
        }
        let phi = arith::euler_phi(self.e) as usize;
        if self.coeffs.len() != phi {
            return Err(Error::invalid(format!(
                "expected {phi} coefficients for conductor {}, got {}",
                self.e,
                self.coeffs.len()
            )));
        }
        let mut coeffs = Vec::with_capacity(phi);
        for (num, den) in self.coeffs {
            let n: BigInt = num
                .parse()
                .map_err(|_| Error::invalid("bad numerator"))?;
            let d: BigInt = den
                .parse()
                .map_err(|_| Error::invalid("bad denominator"))?;
            if d.is_zero() {
                return Err(Error::invalid("zero denominator"));
            }
            coeffs.push(BigRational::new(n, d));
        }
        Ok(CycNum {
            conductor: self.e,
            coeffs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(e: u64, k: i64) -> CycNum {
        CycNum::root_of_unity(e, k)
    }

    #[test]
    fn primitive_root_sum_is_minus_one() {
        // ζ_3 + ζ_3^2 = -1
        let s = &zeta(3, 1) + &zeta(3, 2);
        assert_eq!(s, CycNum::from_int(-1).promoted(3));
    }

    #[test]
    fn galois_composes() {
        let a = zeta(5, 1);
        let twice = a.galois(2).unwrap().galois(2).unwrap();
        assert_eq!(twice, a.galois(4).unwrap());
    }

    #[test]
    fn gaussian_product() {
        // (1 + i)(1 - i) = 2
        let one = CycNum::one(4);
        let i = zeta(4, 1);
        let prod = &(&one + &i) * &(&one - &i);
        assert_eq!(prod, CycNum::from_int(2).promoted(4));
    }

    #[test]
    fn cross_conductor_equality() {
        // ζ_6^2 = ζ_3
        assert_eq!(zeta(6, 2), zeta(3, 1).promoted(6));
        assert_eq!(zeta(6, 2), zeta(3, 1));
    }

    #[test]
    fn conjugation_fixes_rationals() {
        let q = CycNum::from_rational(BigRational::new(BigInt::from(3), BigInt::from(7)));
        assert_eq!(q.conj(), q);
        let v = &zeta(5, 1) + &zeta(5, 4);
        assert_eq!(v.conj(), v);
    }

    #[test]
    fn cyclotomic_polys() {
        // Φ_12 = x^4 - x^2 + 1
        let p12 = cyclotomic_polynomial(12);
        let expect: Vec<BigInt> = [1i64, 0, -1, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(*p12, expect);
    }

    #[test]
    fn p_rational_checks() {
        // rational-valued rows are always p-rational
        let row = vec![CycNum::from_int(2), CycNum::from_int(-1).promoted(3)];
        assert!(is_p_rational(&row, 3).unwrap());
        // a primitive cube root is not 3-rational
        assert!(!is_p_rational(&[zeta(3, 1)], 3).unwrap());
        // the trivial row is p-rational for every p
        assert!(is_p_rational(&[CycNum::one(1)], 5).unwrap());
        // but a cube root is 2-rational (2 does not divide 3)
        assert!(is_p_rational(&[zeta(3, 1)], 2).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let v = &zeta(12, 5) + &CycNum::from_rational(BigRational::new(BigInt::from(1), BigInt::from(2)));
        let j = CycNumJson::from_value(&v);
        assert_eq!(j.into_value().unwrap(), v);
    }
}
