//! The LLT algorithm: canonical basis vectors b+_mu for e-restricted mu,
//! characterized by bar-invariance together with
//! b+_mu in s_mu + sum over lambda above mu of v Z[v] s_lambda.
//!
//! For each mu the first approximation A(mu) applies the ladder monomial of
//! divided powers to the vacuum; Gaussian elimination against already-known
//! canonical vectors then strips the bar-symmetrization of every offending
//! non-positive part until all off-diagonal coefficients land in vZ[v].

use std::collections::{BTreeMap, HashMap};

use crate::combinatorics::{ladder_monomial, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::exactmath::laurent::LaurentPoly;
use crate::fock::vector::{f_divided, FockVector};

/// Memoized canonical-basis computer for a fixed e. Vectors are computed
/// lazily and recursively, so deep ranks only pay for the partitions their
/// correction chains actually touch.
pub struct CanonicalBasis {
    e: u32,
    memo: HashMap<Partition, FockVector>,
}

impl CanonicalBasis {
    pub fn new(e: u32) -> Self {
        assert!(e >= 2, "e must be at least 2");
        CanonicalBasis {
            e,
            memo: HashMap::new(),
        }
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// The first approximation A(mu): the ladder monomial applied to the
    /// vacuum. Unitriangular with coefficient 1 at s_mu.
    pub fn first_approximation(&self, mu: &Partition) -> Result<FockVector> {
        let instructions = ladder_monomial(mu, self.e)?;
        let mut x = FockVector::vacuum();
        for (i, k) in instructions {
            x = f_divided(i, k, &x, self.e)?;
        }
        if !x.coeff(mu).is_one() {
            return Err(Error::AlgorithmInvariant(format!(
                "ladder monomial of {mu} has coefficient {} at s_{mu}",
                x.coeff(mu)
            )));
        }
        for lam in x.support() {
            if !lam.dominates(mu) {
                return Err(Error::AlgorithmInvariant(format!(
                    "ladder monomial of {mu} is supported on {lam}, which does not dominate it"
                )));
            }
        }
        Ok(x)
    }

    /// b+_mu for an e-restricted mu.
    pub fn canonical(&mut self, mu: &Partition) -> Result<FockVector> {
        if let Some(v) = self.memo.get(mu) {
            return Ok(v.clone());
        }
        let mut cur = self.first_approximation(mu)?;
        // Strip corrections, most dominant offender first. Each subtraction
        // of p(v) b+_nu clears the s_nu coefficient into vZ[v]; positions can
        // re-offend while lower ones are still dirty, but only finitely often.
        let cap = 100_000usize;
        let mut rounds = 0usize;
        loop {
            let offender = cur
                .iter()
                .rev() // most dominant first
                .find(|(nu, c)| {
                    *nu != mu && nu.is_e_restricted(self.e) && !c.in_v_zv()
                })
                .map(|(nu, c)| (nu.clone(), c.clone()));
            let Some((nu, alpha)) = offender else {
                break;
            };
            rounds += 1;
            if rounds > cap {
                return Err(Error::NonTermination(format!(
                    "correction loop for {mu} exceeded {cap} rounds"
                )));
            }
            let p = alpha.nonpos_symmetrization();
            debug_assert!(p.is_bar_symmetric());
            let b_nu = self.canonical(&nu)?;
            cur.add_scaled(&b_nu, &p.neg());
        }
        // Final positivity: every off-diagonal coefficient, restricted or
        // not, lies in vZ[v].
        for (lam, c) in cur.iter() {
            if lam == mu {
                if !c.is_one() {
                    return Err(Error::AlgorithmInvariant(format!(
                        "diagonal coefficient of b+_{mu} is {c}"
                    )));
                }
            } else if !c.in_v_zv() {
                return Err(Error::AlgorithmInvariant(format!(
                    "coefficient {c} of s_{lam} in b+_{mu} escapes vZ[v]"
                )));
            }
        }
        self.memo.insert(mu.clone(), cur.clone());
        Ok(cur)
    }

    /// Expansion of a vector in the canonical basis by unitriangular peeling.
    /// The least support element of any vector in the restricted span is the
    /// index of its lowest canonical constituent, so peeling from the bottom
    /// reads off one expansion coefficient at a time. Errors if the vector
    /// lies outside the span of restricted canonical vectors.
    pub fn expand(&mut self, x: &FockVector) -> Result<Vec<(Partition, LaurentPoly)>> {
        let mut residual = x.clone();
        let mut out = Vec::new();
        while !residual.is_zero() {
            let (nu, c) = residual
                .iter()
                .next()
                .map(|(n, c)| (n.clone(), c.clone()))
                .expect("nonzero vector has a bottom term");
            if !nu.is_e_restricted(self.e) {
                return Err(Error::AlgorithmInvariant(format!(
                    "vector has bottom support {nu} outside the restricted span"
                )));
            }
            let b = self.canonical(&nu)?;
            residual.add_scaled(&b, &c.neg());
            out.push((nu, c));
        }
        Ok(out)
    }
}

/// Canonical basis vectors for every e-restricted mu of n, keyed by mu.
pub fn llt_canonical(n: usize, e: u32) -> Result<BTreeMap<Partition, FockVector>> {
    let mut basis = CanonicalBasis::new(e);
    let mut out = BTreeMap::new();
    for mu in partitions_of(n)? {
        if mu.is_e_restricted(e) {
            out.insert(mu.clone(), basis.canonical(&mu)?);
        }
    }
    Ok(out)
}
