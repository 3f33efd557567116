//! Integer-coefficient Laurent polynomials in the grading variable `v`.
//!
//! `LaurentPoly` stores a sparse map exponent -> coefficient. The map never
//! holds a zero coefficient; the zero polynomial is the empty map. All
//! arithmetic is exact over `Z[v, v^-1]`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// c * v^k, dropped if c = 0.
    pub fn monomial(exp: i64, coeff: i64) -> Self {
        Self::monomial_big(exp, BigInt::from(coeff))
    }

    pub fn monomial_big(exp: i64, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// v^k.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in pairs {
            p.add_term(e, &BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending-exponent iterator over nonzero terms.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e, &(-c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.iter() {
            out.add_term(e, &(-c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in other.iter() {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    pub fn mul_scalar(&self, k: i64) -> Self {
        let mut out = Self::zero();
        let k = BigInt::from(k);
        for (e, c) in self.iter() {
            out.add_term(e, &(c * &k));
        }
        out
    }

    /// The bar-involution v -> v^-1: negates every exponent.
    pub fn bar(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.iter() {
            out.add_term(-e, c);
        }
        out
    }

    pub fn is_bar_symmetric(&self) -> bool {
        self.iter().all(|(e, c)| self.coeff(-e) == *c)
    }

    /// True when every exponent is >= 1 (membership in vZ[v]).
    pub fn in_v_zv(&self) -> bool {
        self.min_exp().map_or(true, |m| m >= 1)
    }

    /// Bar-symmetrization of the non-positive part:
    /// a_0 + sum_{k>0} a_{-k} (v^k + v^-k).
    pub fn nonpos_symmetrization(&self) -> Self {
        let mut p = Self::monomial_big(0, self.coeff(0));
        for (e, c) in self.iter() {
            if e < 0 {
                p.add_term(e, c);
                p.add_term(-e, c);
            }
        }
        p
    }

    /// Exact division; errors if `other` does not divide `self`.
    pub fn exact_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Shift both to ordinary polynomials and divide by the leading term.
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let (dexp, dcoeff) = {
            let e = other.max_exp().unwrap();
            (e, other.coeff(e))
        };
        while !rem.is_zero() {
            let e = rem.max_exp().unwrap();
            let c = rem.coeff(e);
            let (q, r) = num_integer::div_rem(c.clone(), dcoeff.clone());
            if !r.is_zero() {
                return Err(Error::DivisionError(format!(
                    "leading coefficient {c} not divisible by {dcoeff}"
                )));
            }
            let t = Self::monomial_big(e - dexp, q);
            rem = rem.sub(&t.mul(other));
            quot = quot.add(&t);
            if rem.max_exp().map_or(false, |m| m >= e) {
                return Err(Error::DivisionError("division does not terminate".into()));
            }
        }
        Ok(quot)
    }

    /// Evaluation at v = 1.
    pub fn eval_one(&self) -> BigInt {
        self.iter().fold(BigInt::zero(), |acc, (_, c)| acc + c)
    }

    /// Descending-exponent pair list, coefficients narrowed to i64.
    pub fn to_pairs(&self) -> Vec<(i64, i64)> {
        self.terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let c = i64::try_from(c).expect("coefficient exceeds i64");
                (*e, c)
            })
            .collect()
    }
}

/// [k] = (v^k - v^-k)/(v - v^-1) in balanced form; [-k] = -[k].
pub fn quantum_integer(k: i64) -> LaurentPoly {
    if k == 0 {
        return LaurentPoly::zero();
    }
    if k < 0 {
        return quantum_integer(-k).neg();
    }
    let mut p = LaurentPoly::zero();
    let mut e = k - 1;
    while e >= -(k - 1) {
        p.add_term(e, &BigInt::one());
        e -= 2;
    }
    p
}

/// [k]! = [1][2]...[k], with [0]! = 1.
pub fn quantum_factorial(k: u32) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for j in 1..=k as i64 {
        p = p.mul(&quantum_integer(j));
    }
    p
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "v")?,
                _ => write!(f, "v^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs)
    }

    /// Independent convolution oracle on raw pair lists.
    fn mul_oracle(a: &[(i64, i64)], b: &[(i64, i64)]) -> LaurentPoly {
        let mut acc: std::collections::HashMap<i64, i64> = Default::default();
        for &(e1, c1) in a {
            for &(e2, c2) in b {
                *acc.entry(e1 + e2).or_insert(0) += c1 * c2;
            }
        }
        let mut out = LaurentPoly::zero();
        for (e, c) in acc {
            out.add_term(e, &BigInt::from(c));
        }
        out
    }

    #[test]
    fn test_unit_pair() {
        assert_eq!(
            LaurentPoly::v_pow(1).mul(&LaurentPoly::v_pow(-1)),
            LaurentPoly::one()
        );
    }

    #[test]
    fn test_add_const() {
        let got = p(&[(1, 1), (0, 1)]).add(&p(&[(0, -1)]));
        assert_eq!(got, LaurentPoly::v_pow(1));
    }

    #[test]
    fn test_mul_against_oracle() {
        let a = [(2, 1), (0, 1), (-2, 1)];
        let b = [(1, 1), (-1, -1)];
        let got = p(&a).mul(&p(&b));
        assert_eq!(got, p(&[(3, 1), (-3, -1)]));
        assert_eq!(got, mul_oracle(&a, &b));
    }

    #[test]
    fn test_bar() {
        assert_eq!(LaurentPoly::v_pow(1).bar(), LaurentPoly::v_pow(-1));
        let sym = p(&[(2, 1), (0, 1), (-2, 1)]);
        assert_eq!(sym.bar(), sym);
        assert_eq!(p(&[(3, 2), (-1, -1)]).bar(), p(&[(-3, 2), (1, -1)]));
    }

    #[test]
    fn test_quantum_integers() {
        assert_eq!(quantum_integer(1), LaurentPoly::one());
        // Division oracle, inverted: [3](v - v^-1) = v^3 - v^-3.
        let three = quantum_integer(3);
        assert_eq!(three, p(&[(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(
            three.mul(&p(&[(1, 1), (-1, -1)])),
            p(&[(3, 1), (-3, -1)])
        );
        assert_eq!(quantum_factorial(2), p(&[(1, 1), (-1, 1)]));
        for k in 0..8 {
            assert!(quantum_integer(k).is_bar_symmetric());
            assert_eq!(quantum_integer(-k), quantum_integer(k).neg());
        }
    }

    #[test]
    fn test_exact_div() {
        let num = p(&[(3, 1), (-3, -1)]);
        let den = p(&[(1, 1), (-1, -1)]);
        assert_eq!(num.exact_div(&den).unwrap(), quantum_integer(3));
        assert!(p(&[(0, 1)]).exact_div(&den).is_err());
        assert!(num.exact_div(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn test_nonpos_symmetrization() {
        let a = p(&[(1, 5), (0, 2), (-1, 3), (-2, -1)]);
        let s = a.nonpos_symmetrization();
        assert_eq!(s, p(&[(2, -1), (1, 3), (0, 2), (-1, 3), (-2, -1)]));
        assert!(s.is_bar_symmetric());
        assert!(a.sub(&s).in_v_zv());
    }

    #[test]
    fn test_display() {
        assert_eq!(p(&[(2, 1), (0, 1), (-2, 1)]).to_string(), "v^2+1+v^-2");
        assert_eq!(p(&[(3, 2), (-1, -1)]).to_string(), "2v^3-v^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::one().to_string(), "1");
        assert_eq!(LaurentPoly::v_pow(1).to_string(), "v");
    }

    proptest::proptest! {
        #[test]
        fn prop_bar_involutive(pairs in proptest::collection::vec((-6i64..6, -9i64..9), 0..6)) {
            let a = p(&pairs);
            proptest::prop_assert_eq!(a.bar().bar(), a);
        }

        #[test]
        fn prop_mul_matches_oracle(
            a in proptest::collection::vec((-5i64..5, -9i64..9), 0..5),
            b in proptest::collection::vec((-5i64..5, -9i64..9), 0..5),
        ) {
            proptest::prop_assert_eq!(p(&a).mul(&p(&b)), mul_oracle(&a, &b));
        }
    }
}
