//! The level-1 deformed Fock space on the Schur basis: finite formal sums of
//! symbols s_lambda with Laurent-polynomial coefficients, and the Chevalley
//! action
//!
//!   e_i s_lambda = sum over removable i-nodes x of v^{-N_a(x)} s_{lambda - x},
//!   f_i s_lambda = sum over addable  i-nodes x of v^{ N_b(x)} s_{lambda + x},
//!
//! where N_a (resp. N_b) counts addable minus removable i-nodes strictly
//! above (resp. below) x.

use std::collections::BTreeMap;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exactmath::laurent::{quantum_factorial, LaurentPoly};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FockVector {
    coeffs: BTreeMap<Partition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector {
            coeffs: BTreeMap::new(),
        }
    }

    /// The vacuum vector s_{empty partition}.
    pub fn vacuum() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        let mut v = Self::zero();
        v.coeffs.insert(lambda, LaurentPoly::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> LaurentPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda).or_default();
        *entry = entry.add(p);
        if entry.is_zero() {
            let key = self
                .coeffs
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.coeffs.remove(&k);
            }
        }
    }

    /// self += p * other.
    pub fn add_scaled(&mut self, other: &FockVector, p: &LaurentPoly) {
        for (lam, c) in other.iter() {
            self.add_term(lam.clone(), &p.mul(c));
        }
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (lam, c) in other.iter() {
            out.add_term(lam.clone(), &c.neg());
        }
        out
    }
}

/// f_i on a single Schur symbol.
fn f_on_schur(i: u8, lambda: &Partition, e: u32) -> Vec<(Partition, i64)> {
    let (addable, removable) = lambda.addable_removable(i, e);
    addable
        .iter()
        .map(|x| {
            let below_add = addable.iter().filter(|n| n.row > x.row).count() as i64;
            let below_rem = removable.iter().filter(|n| n.row > x.row).count() as i64;
            (lambda.with_node_added(x), below_add - below_rem)
        })
        .collect()
}

/// e_i on a single Schur symbol.
fn e_on_schur(i: u8, lambda: &Partition, e: u32) -> Vec<(Partition, i64)> {
    let (addable, removable) = lambda.addable_removable(i, e);
    removable
        .iter()
        .map(|x| {
            let above_add = addable.iter().filter(|n| n.row < x.row).count() as i64;
            let above_rem = removable.iter().filter(|n| n.row < x.row).count() as i64;
            (lambda.with_node_removed(x), -(above_add - above_rem))
        })
        .collect()
}

pub fn f_apply(i: u8, x: &FockVector, e: u32) -> FockVector {
    let mut out = FockVector::zero();
    for (lam, c) in x.iter() {
        for (mu, exp) in f_on_schur(i, lam, e) {
            out.add_term(mu, &c.mul(&LaurentPoly::v_pow(exp)));
        }
    }
    out
}

pub fn e_apply(i: u8, x: &FockVector, e: u32) -> FockVector {
    let mut out = FockVector::zero();
    for (lam, c) in x.iter() {
        for (mu, exp) in e_on_schur(i, lam, e) {
            out.add_term(mu, &c.mul(&LaurentPoly::v_pow(exp)));
        }
    }
    out
}

/// The divided power f_i^(k): apply f_i k times, then divide every
/// coefficient exactly by [k]!. Inexact division signals a bug upstream.
pub fn f_divided(i: u8, k: u32, x: &FockVector, e: u32) -> Result<FockVector> {
    assert!(k >= 1);
    let mut cur = x.clone();
    for _ in 0..k {
        cur = f_apply(i, &cur, e);
    }
    if k == 1 {
        return Ok(cur);
    }
    let fact = quantum_factorial(k);
    let mut out = FockVector::zero();
    for (lam, c) in cur.iter() {
        let q = c.exact_div(&fact).map_err(|_| {
            Error::DivisionError(format!(
                "coefficient {c} of {lam} not divisible by [{k}]!"
            ))
        })?;
        out.add_term(lam.clone(), &q);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn term(parts: &[u32], pairs: &[(i64, i64)]) -> FockVector {
        let mut v = FockVector::zero();
        v.add_term(p(parts), &LaurentPoly::from_pairs(pairs));
        v
    }

    #[test]
    fn test_f_on_vacuum() {
        assert_eq!(f_apply(0, &FockVector::vacuum(), 4), FockVector::schur(p(&[1])));
        assert!(f_apply(1, &FockVector::vacuum(), 4).is_zero());
    }

    #[test]
    fn test_f_monomials_match_canonical_table() {
        let e = 4;
        // f_3 f_2 f_1 f_0 vacuum = v s_(4) + s_(3,1)
        let mut x = FockVector::vacuum();
        for i in [0u8, 1, 2, 3] {
            x = f_apply(i, &x, e);
        }
        let mut want = term(&[4], &[(1, 1)]);
        want.add_term(p(&[3, 1]), &LaurentPoly::one());
        assert_eq!(x, want);

        // f_1 f_2 f_3 f_0 vacuum = v s_(2,1,1) + s_(1,1,1,1)
        let mut x = FockVector::vacuum();
        for i in [0u8, 3, 2, 1] {
            x = f_apply(i, &x, e);
        }
        let mut want = term(&[2, 1, 1], &[(1, 1)]);
        want.add_term(p(&[1, 1, 1, 1]), &LaurentPoly::one());
        assert_eq!(x, want);
    }

    #[test]
    fn test_e_apply() {
        let e = 4;
        assert_eq!(e_apply(0, &FockVector::schur(p(&[1])), e), FockVector::vacuum());
        assert!(e_apply(1, &FockVector::schur(p(&[1])), e).is_zero());
        // e_3 (v s_(4) + s_(3,1)) = (v + v^-1) s_(3)
        let mut x = term(&[4], &[(1, 1)]);
        x.add_term(p(&[3, 1]), &LaurentPoly::one());
        assert_eq!(e_apply(3, &x, e), term(&[3], &[(1, 1), (-1, 1)]));
    }

    #[test]
    fn test_commutator_identity() {
        // (e_i f_i - f_i e_i) s_lambda = [#addable_i - #removable_i] s_lambda
        // and e_i f_j = f_j e_i for i != j.
        use crate::exactmath::laurent::quantum_integer;
        for e in [3u32, 4, 5] {
            for m in 0..=6usize {
                for lam in partitions_of(m).unwrap() {
                    let s = FockVector::schur(lam.clone());
                    for i in 0..e as u8 {
                        for j in 0..e as u8 {
                            let a = e_apply(i, &f_apply(j, &s, e), e);
                            let b = f_apply(j, &e_apply(i, &s, e), e);
                            let diff = a.sub(&b);
                            if i != j {
                                assert!(diff.is_zero(), "[e_{i}, f_{j}] != 0 on {lam}");
                            } else {
                                let (add, rem) = lam.addable_removable(i, e);
                                let w = add.len() as i64 - rem.len() as i64;
                                let mut want = FockVector::zero();
                                want.add_term(lam.clone(), &quantum_integer(w));
                                assert_eq!(diff, want, "commutator wrong on {lam}, i={i}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn test_f_divided() {
        let e = 4;
        // vacuum has a single addable 0-node, so f_0^2 annihilates it.
        assert!(f_divided(0, 2, &FockVector::vacuum(), e).unwrap().is_zero());
        assert_eq!(
            f_divided(0, 1, &FockVector::vacuum(), e).unwrap(),
            FockVector::schur(p(&[1]))
        );
        // [k]! f^(k) = f^k on a vector with genuinely divisible coefficients.
        let e3 = 3u32;
        let base = FockVector::schur(p(&[2]));
        let div = f_divided(2, 2, &base, e3).unwrap();
        let mut twice = base.clone();
        for _ in 0..2 {
            twice = f_apply(2, &twice, e3);
        }
        let fact = quantum_factorial(2);
        let mut scaled = FockVector::zero();
        for (lam, c) in div.iter() {
            scaled.add_term(lam.clone(), &c.mul(&fact));
        }
        assert_eq!(scaled, twice);
        assert!(!div.is_zero());
    }
}
