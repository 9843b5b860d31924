//! Exact arithmetic in the cyclotomic fields `Q(zeta_N)`.
//!
//! Elements are polynomials in `zeta_N` with rational coefficients, reduced
//! modulo the N-th cyclotomic polynomial, so every value has a unique normal
//! form and equality is coefficient-wise. Mixed conductors are unified by
//! embedding into `Q(zeta_lcm)`.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::{Error, Result};

/// Coefficients of the N-th cyclotomic polynomial, low degree first, monic.
///
/// Computed by the recursive division `Phi_N = (x^N - 1) / prod_{d|N, d<N} Phi_d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    static MEMO: Lazy<Mutex<HashMap<u32, Vec<BigInt>>>> = Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(p) = MEMO.lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^n - 1
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        for d in 1..n {
            if n % d == 0 {
                num = poly_div_exact(&num, &cyclotomic_polynomial(d));
            }
        }
        num
    };
    MEMO.lock().unwrap().insert(n, result.clone());
    result
}

/// Exact division of integer polynomials (panics on nonzero remainder).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for j in 0..=dd {
            let t = &den[j] * &c;
            rem[i - dd + j] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// Shared per-conductor data: the cyclotomic polynomial and a table of the
/// reduced powers `zeta^k mod Phi_N`, enough for products and roots of unity.
#[derive(Debug)]
pub struct CycField {
    conductor: u32,
    degree: usize,
    /// zeta^k reduced, for k = 0 .. max(N, 2*degree) - 1.
    powers: Vec<Vec<BigRational>>,
}

impl CycField {
    fn new(n: u32) -> CycField {
        let phi = cyclotomic_polynomial(n);
        let degree = phi.len() - 1;
        let phi_q: Vec<BigRational> =
            phi.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let count = (n as usize).max(2 * degree).max(1);
        let mut powers: Vec<Vec<BigRational>> = Vec::with_capacity(count);
        let mut cur = vec![BigRational::zero(); degree];
        if degree > 0 {
            cur[0] = BigRational::one();
        }
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by zeta: shift up, reduce the overflow via Phi.
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigRational::zero();
            if !top.is_zero() {
                for i in 0..degree {
                    cur[i] -= &top * &phi_q[i];
                }
            }
        }
        CycField { conductor: n, degree, powers }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// Cached field registry: one `CycField` per conductor.
pub fn field(n: u32) -> Arc<CycField> {
    assert!(n >= 1, "conductor must be positive");
    static FIELDS: Lazy<Mutex<HashMap<u32, Arc<CycField>>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    let mut map = FIELDS.lock().unwrap();
    map.entry(n).or_insert_with(|| Arc::new(CycField::new(n))).clone()
}

/// An element of `Q(zeta_N)` in reduced normal form.
#[derive(Clone)]
pub struct CycScalar {
    field: Arc<CycField>,
    coeffs: Vec<BigRational>,
}

impl CycScalar {
    pub fn zero(n: u32) -> CycScalar {
        let f = field(n);
        let d = f.degree;
        CycScalar { field: f, coeffs: vec![BigRational::zero(); d] }
    }

    pub fn one(n: u32) -> CycScalar {
        CycScalar::from_rational(n, BigRational::one())
    }

    pub fn from_rational(n: u32, r: BigRational) -> CycScalar {
        let f = field(n);
        let d = f.degree;
        let mut coeffs = vec![BigRational::zero(); d];
        coeffs[0] = r;
        CycScalar { field: f, coeffs }
    }

    pub fn from_int(n: u32, v: i64) -> CycScalar {
        CycScalar::from_rational(n, BigRational::from_integer(BigInt::from(v)))
    }

    /// `zeta_N^k` as an element of `Q(zeta_N)`.
    pub fn root_of_unity(n: u32, k: i64) -> CycScalar {
        let f = field(n);
        let k = k.rem_euclid(n as i64) as usize;
        let coeffs = f.powers[k].clone();
        CycScalar { field: f, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Returns the rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Embeds into `Q(zeta_m)`; requires `conductor | m`.
    pub fn embed(&self, m: u32) -> CycScalar {
        let n = self.field.conductor;
        assert!(m % n == 0, "embedding requires {} | {}", n, m);
        if m == n {
            return self.clone();
        }
        let g = field(m);
        let step = (m / n) as usize;
        let mut coeffs = vec![BigRational::zero(); g.degree];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, p) in g.powers[k * step].iter().enumerate() {
                if !p.is_zero() {
                    coeffs[i] += c * p;
                }
            }
        }
        CycScalar { field: g, coeffs }
    }

    fn unify(a: &CycScalar, b: &CycScalar) -> (CycScalar, CycScalar) {
        let (n, m) = (a.field.conductor, b.field.conductor);
        if n == m {
            (a.clone(), b.clone())
        } else {
            let l = n.lcm(&m);
            (a.embed(l), b.embed(l))
        }
    }

    pub fn scale(&self, r: &BigRational) -> CycScalar {
        let coeffs = self.coeffs.iter().map(|c| c * r).collect();
        CycScalar { field: self.field.clone(), coeffs }
    }

    pub fn inv(&self) -> Result<CycScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.field.conductor));
        }
        if let Some(r) = self.as_rational() {
            return Ok(CycScalar::from_rational(self.field.conductor, r.recip()));
        }
        // Extended Euclid in Q[x] against Phi_N.
        let phi: Vec<BigRational> = cyclotomic_polynomial(self.field.conductor)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let a = trim(self.coeffs.clone());
        // Invariants: r0 = s0 * a (mod Phi), r1 = s1 * a (mod Phi).
        let mut r0 = phi;
        let mut r1 = a;
        let mut s0: Vec<BigRational> = vec![];
        let mut s1 = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            s0 = s1;
            r1 = r;
            s1 = s;
        }
        // r0 = gcd, a unit since Phi_N is irreducible and a != 0.
        assert_eq!(r0.len(), 1, "cyclotomic polynomial must be coprime to a nonzero element");
        let lead = r0[0].recip();
        let mut coeffs = vec![BigRational::zero(); self.field.degree];
        for (k, c) in s0.iter().enumerate() {
            let v = c * &lead;
            if v.is_zero() {
                continue;
            }
            for (i, p) in self.field.powers[k].iter().enumerate() {
                if !p.is_zero() {
                    coeffs[i] += &v * p;
                }
            }
        }
        Ok(CycScalar { field: self.field.clone(), coeffs })
    }

    pub fn pow(&self, e: i64) -> Result<CycScalar> {
        let n = self.field.conductor;
        if e == 0 {
            return Ok(CycScalar::one(n));
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = CycScalar::one(n);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Canonical string form "c0 + c1*z + ..." with rationals "p/q".
    pub fn to_poly_string(&self) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = rational_string(c);
            parts.push(match k {
                0 => cs,
                1 => format!("{}*z", cs),
                _ => format!("{}*z^{}", cs, k),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Parses the output of [`to_poly_string`](Self::to_poly_string).
    pub fn from_poly_string(n: u32, s: &str) -> Result<CycScalar> {
        let f = field(n);
        let mut coeffs = vec![BigRational::zero(); f.degree];
        let s = s.trim();
        if s != "0" {
            for part in s.split(" + ") {
                let (cs, k) = match part.split_once("*z") {
                    None => (part, 0usize),
                    Some((c, rest)) => {
                        let k = if rest.is_empty() {
                            1
                        } else {
                            rest.strip_prefix('^')
                                .ok_or_else(|| Error::invalid(format!("bad term: {part}")))?
                                .parse::<usize>()
                                .map_err(|_| Error::invalid(format!("bad exponent: {part}")))?
                        };
                        (c, k)
                    }
                };
                if k >= f.degree {
                    return Err(Error::invalid(format!("exponent {} out of range", k)));
                }
                coeffs[k] = parse_rational(cs)?;
            }
        }
        Ok(CycScalar { field: f, coeffs })
    }
}

fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::invalid(format!("bad rational: {s}"));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((p, q)) => Ok(BigRational::new(
            p.parse::<BigInt>().map_err(|_| bad())?,
            q.parse::<BigInt>().map_err(|_| bad())?,
        )),
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].recip();
    if rem.len() <= dd {
        return (vec![], trim(rem));
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = &rem[i] * &lead;
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for j in 0..=dd {
            let t = &den[j] * &c;
            rem[i - dd + j] -= t;
        }
    }
    (trim(quot), trim(rem))
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.field, &other.field) || self.field.conductor == other.field.conductor
        {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = CycScalar::unify(self, other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; z = zeta_{})", self.to_poly_string(), self.field.conductor)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly_string())
    }
}

impl std::ops::Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        let (mut a, b) = CycScalar::unify(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }
}

impl std::ops::Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        let (mut a, b) = CycScalar::unify(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }
}

impl std::ops::Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        CycScalar { field: self.field.clone(), coeffs }
    }
}

impl std::ops::Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        let (a, b) = CycScalar::unify(self, rhs);
        let f = a.field.clone();
        let d = f.degree;
        let mut conv = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        let mut coeffs: Vec<BigRational> = conv[..d].to_vec();
        for (k, c) in conv[d..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, p) in f.powers[d + k].iter().enumerate() {
                if !p.is_zero() {
                    coeffs[i] += c * p;
                }
            }
        }
        CycScalar { field: f, coeffs }
    }
}

/// Exact k-th root of a rational, when one exists.
pub fn rational_nth_root(r: &BigRational, k: u32) -> Option<BigRational> {
    if r.is_zero() {
        return Some(BigRational::zero());
    }
    let negative = r.is_negative();
    if negative && k % 2 == 0 {
        return None;
    }
    let num = r.numer().abs().to_biguint().unwrap();
    let den = r.denom().abs().to_biguint().unwrap();
    let rn = num.nth_root(k);
    let rd = den.nth_root(k);
    if num != rn.pow(k) || den != rd.pow(k) {
        return None;
    }
    let mut root = BigRational::new(BigInt::from(rn), BigInt::from(rd));
    if negative {
        root = -root;
    }
    Some(root)
}

/// Serialized form: conductor plus canonical polynomial string.
#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    conductor: u32,
    value: String,
}

impl Serialize for CycScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarRepr { conductor: self.conductor(), value: self.to_poly_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(d)?;
        CycScalar::from_poly_string(repr.conductor, &repr.value)
            .map_err(|e| serde::de::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_i64(coeffs: &[i64]) -> Vec<BigInt> {
        coeffs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn cyclotomic_small_cases() {
        assert_eq!(cyclotomic_polynomial(1), poly_i64(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), poly_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(8), poly_i64(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn cyclotomic_product_formula() {
        // x^n - 1 = prod_{d | n} Phi_d for a few n.
        for n in [6u32, 12, 24, 30] {
            let mut prod = vec![BigInt::one()];
            for d in 1..=n {
                if n % d == 0 {
                    let phi = cyclotomic_polynomial(d);
                    let phi_q: Vec<BigRational> =
                        phi.iter().map(|c| BigRational::from_integer(c.clone())).collect();
                    let prod_q: Vec<BigRational> =
                        prod.iter().map(|c| BigRational::from_integer(c.clone())).collect();
                    prod = poly_mul(&prod_q, &phi_q)
                        .iter()
                        .map(|c| c.numer().clone())
                        .collect();
                }
            }
            let mut expect = vec![BigInt::zero(); n as usize + 1];
            expect[0] = BigInt::from(-1);
            expect[n as usize] = BigInt::one();
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = CycScalar::root_of_unity(4, 1);
        assert_eq!(&i * &i, CycScalar::from_int(4, -1));
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let s = &CycScalar::root_of_unity(8, 1) + &CycScalar::root_of_unity(8, 7);
        assert_eq!(&s * &s, CycScalar::from_int(8, 2));
    }

    #[test]
    fn invert_two() {
        let two = CycScalar::from_int(24, 2);
        let half = two.inv().unwrap();
        assert_eq!(half.as_rational().unwrap(), BigRational::new(BigInt::one(), BigInt::from(2)));
        assert!(CycScalar::zero(24).inv().is_err());
    }

    #[test]
    fn primitive_root_orders() {
        for n in 2..=24u32 {
            let z = CycScalar::root_of_unity(n, 1);
            let mut p = z.clone();
            for k in 1..n {
                assert!(!p.is_one(), "zeta_{}^{} = 1", n, k);
                p = &p * &z;
            }
            assert!(p.is_one(), "zeta_{}^{} != 1", n, n);
        }
    }

    #[test]
    fn inverse_roots_of_unity() {
        for n in 2..=24u32 {
            for k in 1..n {
                let a = CycScalar::root_of_unity(n, k as i64);
                let b = CycScalar::root_of_unity(n, (n - k) as i64);
                assert!((&a * &b).is_one());
            }
        }
    }

    #[test]
    fn embedding_roundtrip_z3_into_z12() {
        let w3 = CycScalar::root_of_unity(3, 1);
        let w12 = CycScalar::root_of_unity(12, 4);
        assert_eq!(w3, w12);
        assert_eq!(&w3 + &w12, w3.scale(&BigRational::from_integer(BigInt::from(2))));
        let sum = &w3 + &CycScalar::root_of_unity(3, 2);
        assert_eq!(sum, CycScalar::from_int(12, -1));
        // products computed in either field agree
        assert_eq!(&w3 * &w3, &w12 * &w12);
    }

    #[test]
    fn nonzero_inverses_in_q_zeta24() {
        let one = CycScalar::one(24);
        for k in 0..24 {
            let a = &CycScalar::root_of_unity(24, k) + &CycScalar::from_int(24, 3);
            assert_eq!(&a * &a.inv().unwrap(), one);
        }
    }

    #[test]
    fn poly_string_roundtrip() {
        let a = &CycScalar::root_of_unity(24, 7).scale(&BigRational::new(
            BigInt::from(-3),
            BigInt::from(8),
        )) + &CycScalar::from_int(24, 5);
        let s = a.to_poly_string();
        let b = CycScalar::from_poly_string(24, &s).unwrap();
        assert_eq!(a, b);
        assert_eq!(CycScalar::zero(24).to_poly_string(), "0");
        assert_eq!(CycScalar::from_poly_string(24, "0").unwrap(), CycScalar::zero(24));
    }

    #[test]
    fn rational_roots() {
        let r = BigRational::new(BigInt::from(27), BigInt::from(8));
        assert_eq!(
            rational_nth_root(&r, 3).unwrap(),
            BigRational::new(BigInt::from(3), BigInt::from(2))
        );
        let nr = BigRational::new(BigInt::from(2), BigInt::one());
        assert!(rational_nth_root(&nr, 3).is_none());
        let neg = BigRational::from_integer(BigInt::from(-8));
        assert_eq!(rational_nth_root(&neg, 3).unwrap(), BigRational::from_integer(BigInt::from(-2)));
    }
}
