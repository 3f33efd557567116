//! The cyclotomic field Q(zeta_e), elements stored as rational coefficient
//! vectors of length phi(e) modulo the e-th cyclotomic polynomial.
//!
//! Cyclotomic polynomials are produced by the divisor recursion
//! Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d and cached per e.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Shared reduction data for a fixed e.
struct CycloTable {
    e: u32,
    phi: usize,
    /// Coefficients of Phi_e (monic, integer), ascending, length phi + 1.
    modulus: Vec<BigInt>,
    /// x^k mod Phi_e for k = phi .. 2*phi - 2, as rational rows of length phi.
    high_powers: Vec<Vec<BigRational>>,
}

fn table(e: u32) -> Arc<CycloTable> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(e)
        .or_insert_with(|| Arc::new(CycloTable::new(e)))
        .clone()
}

/// Exact division of integer polynomials (ascending coefficients).
fn int_poly_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        let q = &c / &lead;
        assert!((&q * &lead) == c, "inexact cyclotomic division");
        quot[k - dd] = q.clone();
        for j in 0..=dd {
            let t = &q * &den[j];
            rem[k - dd + j] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "nonzero remainder");
    while quot.len() > 1 && quot.last().unwrap().is_zero() {
        quot.pop();
    }
    quot
}

fn cyclotomic_poly(e: u32) -> Vec<BigInt> {
    // x^e - 1 divided by all proper-divisor cyclotomic polynomials.
    let mut num = vec![BigInt::zero(); e as usize + 1];
    num[0] = BigInt::from(-1);
    num[e as usize] = BigInt::one();
    let mut out = num;
    for d in 1..e {
        if e % d == 0 {
            out = int_poly_div(&out, &cyclotomic_poly(d));
        }
    }
    out
}

impl CycloTable {
    fn new(e: u32) -> Self {
        assert!(e >= 1, "e must be positive");
        let modulus = cyclotomic_poly(e);
        let phi = modulus.len() - 1;
        // x^phi mod Phi = -(lower part); higher powers by repeated shift.
        let mut high_powers: Vec<Vec<BigRational>> = Vec::new();
        let base: Vec<BigRational> = (0..phi)
            .map(|j| BigRational::from_integer(-modulus[j].clone()))
            .collect();
        high_powers.push(base);
        for _ in 1..phi.max(1) {
            let prev = high_powers.last().unwrap().clone();
            // multiply by x: shift up, then reduce the overflow via x^phi row.
            let mut next = vec![BigRational::zero(); phi];
            for j in 0..phi - 1 {
                next[j + 1] = prev[j].clone();
            }
            let carry = prev[phi - 1].clone();
            if !carry.is_zero() {
                for j in 0..phi {
                    next[j] += &carry * &high_powers[0][j];
                }
            }
            high_powers.push(next);
        }
        CycloTable {
            e,
            phi,
            modulus,
            high_powers,
        }
    }
}

/// An element of Q(zeta_e).
#[derive(Clone, PartialEq, Eq)]
pub struct CycloNum {
    e: u32,
    coeffs: Vec<BigRational>,
}

impl CycloNum {
    pub fn zero(e: u32) -> Self {
        let t = table(e);
        CycloNum {
            e,
            coeffs: vec![BigRational::zero(); t.phi],
        }
    }

    pub fn one(e: u32) -> Self {
        let mut z = Self::zero(e);
        z.coeffs[0] = BigRational::one();
        z
    }

    pub fn from_int(e: u32, n: i64) -> Self {
        let mut z = Self::zero(e);
        z.coeffs[0] = BigRational::from_integer(BigInt::from(n));
        z
    }

    pub fn from_rational(e: u32, r: BigRational) -> Self {
        let mut z = Self::zero(e);
        z.coeffs[0] = r;
        z
    }

    pub fn from_coeffs(e: u32, coeffs: Vec<BigRational>) -> Self {
        let t = table(e);
        assert_eq!(coeffs.len(), t.phi, "coefficient vector must have length phi(e)");
        CycloNum { e, coeffs }
    }

    /// zeta_e, the fixed primitive e-th root of unity.
    pub fn zeta(e: u32) -> Self {
        Self::zeta_pow(e, 1)
    }

    /// zeta_e^i for i taken modulo e.
    pub fn zeta_pow(e: u32, i: i64) -> Self {
        let t = table(e);
        let k = i.rem_euclid(e as i64) as usize;
        // reduce x^k mod Phi_e
        let mut z = Self::zero(e);
        if k < t.phi {
            z.coeffs[k] = BigRational::one();
        } else {
            // k <= e - 1 <= phi + (e - 1 - phi); walk down with the table.
            let mut cur = vec![BigRational::zero(); t.phi];
            cur.clone_from_slice(&t.high_powers[0]);
            for _ in t.phi..k {
                cur = shift_reduce(&t, &cur);
            }
            z.coeffs = cur;
        }
        z
    }

    pub fn e(&self) -> u32 {
        self.e
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

    fn check_e(&self, other: &Self) {
        assert_eq!(self.e, other.e, "mixed cyclotomic fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_e(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycloNum { e: self.e, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_e(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycloNum { e: self.e, coeffs }
    }

    pub fn neg(&self) -> Self {
        CycloNum {
            e: self.e,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_e(other);
        let t = table(self.e);
        let phi = t.phi;
        let mut prod = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let mut out = vec![BigRational::zero(); phi];
        for (k, c) in prod.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < phi {
                out[k] += c;
            } else {
                let row = &t.high_powers[k - phi];
                for j in 0..phi {
                    out[j] += c * &row[j];
                }
            }
        }
        CycloNum {
            e: self.e,
            coeffs: out,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let t = table(self.e);
        // Extended Euclid in Q[x] for (self, Phi_e).
        let modulus: Vec<BigRational> = t
            .modulus
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut r0 = modulus;
        let mut r1 = self.coeffs.clone();
        trim(&mut r1);
        let mut s0: Vec<BigRational> = vec![];
        let mut s1 = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = rat_poly_divmod(&r0, &r1);
            let s2 = rat_poly_sub(&s0, &rat_poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        // r0 = gcd, a nonzero constant since Phi_e is irreducible.
        assert_eq!(r0.len(), 1, "cyclotomic polynomial must be irreducible");
        let c = r0[0].clone();
        let mut coeffs = vec![BigRational::zero(); t.phi];
        for (j, s) in s0.iter().enumerate() {
            coeffs[j] = s / &c;
        }
        Ok(CycloNum {
            e: self.e,
            coeffs,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn mul_rational(&self, r: &BigRational) -> Self {
        CycloNum {
            e: self.e,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }
}

fn shift_reduce(t: &CycloTable, cur: &[BigRational]) -> Vec<BigRational> {
    let phi = t.phi;
    let mut next = vec![BigRational::zero(); phi];
    for j in 0..phi - 1 {
        next[j + 1] = cur[j].clone();
    }
    let carry = cur[phi - 1].clone();
    if !carry.is_zero() {
        for j in 0..phi {
            next[j] += &carry * &t.high_powers[0][j];
        }
    }
    next
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn rat_poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() <= db {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let q = &rem[k] / &lead;
        quot[k - db] = q.clone();
        for j in 0..=db {
            let t = &q * &b[j];
            rem[k - db + j] -= t;
        }
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn rat_poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn rat_poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

impl fmt::Display for CycloNum {
    /// Canonical reduced form: integer-coefficient polynomial in `z` over a
    /// single denominator, e.g. `(z^2-z+1)/2`, plain `z+1`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let nums: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut body = String::new();
        let mut first = true;
        for (k, c) in nums.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    body.push('-');
                }
                first = false;
            } else {
                body.push(if neg { '-' } else { '+' });
            }
            let show = !mag.is_one() || k == 0;
            if show {
                body.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => body.push('z'),
                _ => body.push_str(&format!("z^{k}")),
            }
        }
        if den.is_one() {
            write!(f, "{body}")
        } else {
            let terms = nums.iter().filter(|c| !c.is_zero()).count();
            if terms > 1 {
                write!(f, "({body})/{den}")
            } else {
                write!(f, "{body}/{den}")
            }
        }
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum(e={}, {})", self.e, self)
    }
}
