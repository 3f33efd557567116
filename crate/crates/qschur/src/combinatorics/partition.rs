//! Partitions and the partition-level combinatorics: dominance, conjugation,
//! e-restriction, the e-decomposition mu = mu0 + e*mu1, the hat/tilde
//! transform, addable/removable nodes, and ladder monomials.

use std::fmt;

use crate::error::{Error, Result};

/// Default desk-scale bound on |lambda| for whole-rank enumerations.
pub const DEFAULT_BOUND: usize = 12;

/// A partition: strictly positive, weakly decreasing parts. The derived
/// lexicographic `Ord` refines dominance for partitions of equal size, with
/// the more dominant partition larger.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

/// A composition: parts in given order, zeros allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }
}

/// A node (a, b) of a Young diagram with its residue -a + b mod e.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub residue: u8,
}

pub fn residue_of(row: usize, col: usize, e: u32) -> u8 {
    (col as i64 - row as i64).rem_euclid(e as i64) as u8
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {parts:?}"
        );
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn conjugate(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let parts = (1..=cols)
            .map(|j| self.0.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// lambda_i - lambda_{i+1} <= e - 1 for all i, reading past the end as 0.
    pub fn is_e_restricted(&self, e: u32) -> bool {
        (0..self.len()).all(|i| self.part(i) - self.part(i + 1) <= e - 1)
    }

    pub fn dominance(&self, other: &Partition) -> Result<Dominance> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(format!(
                "|{self}| = {} vs |{other}| = {}",
                self.size(),
                other.size()
            )));
        }
        let rows = self.len().max(other.len());
        let (mut sa, mut sb) = (0u64, 0u64);
        let (mut geq, mut leq) = (true, true);
        for i in 0..rows {
            sa += self.part(i) as u64;
            sb += other.part(i) as u64;
            if sa < sb {
                geq = false;
            }
            if sa > sb {
                leq = false;
            }
        }
        Ok(match (geq, leq) {
            (true, true) => Dominance::Equal,
            (true, false) => Dominance::Greater,
            (false, true) => Dominance::Less,
            (false, false) => Dominance::Incomparable,
        })
    }

    pub fn dominates(&self, other: &Partition) -> bool {
        matches!(
            self.dominance(other),
            Ok(Dominance::Greater | Dominance::Equal)
        )
    }

    /// Addable and removable nodes of residue i, each top to bottom.
    pub fn addable_removable(&self, i: u8, e: u32) -> (Vec<Node>, Vec<Node>) {
        let addable = self
            .addable_nodes(e)
            .into_iter()
            .filter(|n| n.residue == i)
            .collect();
        let removable = self
            .removable_nodes(e)
            .into_iter()
            .filter(|n| n.residue == i)
            .collect();
        (addable, removable)
    }

    pub fn addable_nodes(&self, e: u32) -> Vec<Node> {
        let mut out = Vec::new();
        for a in 1..=self.len() + 1 {
            let here = self.part(a - 1);
            let above = if a == 1 { u32::MAX } else { self.part(a - 2) };
            if above > here {
                let b = here as usize + 1;
                out.push(Node {
                    row: a,
                    col: b,
                    residue: residue_of(a, b, e),
                });
            }
        }
        out
    }

    pub fn removable_nodes(&self, e: u32) -> Vec<Node> {
        let mut out = Vec::new();
        for a in 1..=self.len() {
            let here = self.part(a - 1);
            if here > self.part(a) {
                let b = here as usize;
                out.push(Node {
                    row: a,
                    col: b,
                    residue: residue_of(a, b, e),
                });
            }
        }
        out
    }

    pub fn with_node_added(&self, node: &Node) -> Partition {
        let mut parts = self.0.clone();
        if node.row > parts.len() {
            parts.push(0);
        }
        parts[node.row - 1] += 1;
        Partition::new(parts)
    }

    pub fn with_node_removed(&self, node: &Node) -> Partition {
        let mut parts = self.0.clone();
        parts[node.row - 1] -= 1;
        Partition::new(parts)
    }

    /// GAP-style label with exponents, e.g. `2,1^2`.
    pub fn gap_label(&self) -> String {
        if self.is_empty() {
            return "-".to_string();
        }
        let mut pieces = Vec::new();
        let mut i = 0;
        while i < self.len() {
            let p = self.0[i];
            let mut j = i;
            while j < self.len() && self.0[j] == p {
                j += 1;
            }
            let mult = j - i;
            if mult == 1 {
                pieces.push(format!("{p}"));
            } else {
                pieces.push(format!("{p}^{mult}"));
            }
            i = j;
        }
        pieces.join(",")
    }

    /// Parses `3,1`, `2,1^2` or `-` (empty).
    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let (base, mult) = match tok.split_once('^') {
                Some((b, m)) => (b.trim(), m.trim()),
                None => (tok, "1"),
            };
            let p: u32 = base
                .parse()
                .map_err(|_| Error::PreconditionViolation(format!("bad part {tok:?}")))?;
            let m: usize = mult
                .parse()
                .map_err(|_| Error::PreconditionViolation(format!("bad multiplicity {tok:?}")))?;
            if p == 0 {
                return Err(Error::PreconditionViolation("zero part".into()));
            }
            parts.extend(std::iter::repeat(p).take(m));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::PreconditionViolation(format!(
                "parts not weakly decreasing: {s:?}"
            )));
        }
        Ok(Partition(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All partitions of n, most dominant first (lexicographically descending,
/// which refines dominance). Deterministic across runs.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    if n > DEFAULT_BOUND {
        return Err(Error::BoundExceeded {
            what: "partitions_of",
            limit: DEFAULT_BOUND,
            got: n,
        });
    }
    Ok(partitions_of_unbounded(n))
}

pub fn partitions_of_unbounded(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p as u32);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// The unique decomposition mu = mu0 + e*mu1 with mu0 e-restricted (of
/// length d, zeros allowed) and mu1 a partition padded to length d.
pub fn e_decompose(mu: &Partition, e: u32, d: usize) -> (Composition, Vec<u32>) {
    assert!(d >= mu.len(), "padding must cover the partition");
    let mut mu0 = vec![0u32; d];
    // Bottom-up from successive differences mod e.
    for i in (0..d).rev() {
        let below = if i + 1 < d { mu0[i + 1] } else { 0 };
        let diff = mu.part(i) - mu.part(i + 1);
        mu0[i] = below + diff % e;
    }
    let mut mu1 = vec![0u32; d];
    for i in 0..d {
        let rem = mu.part(i) - mu0[i];
        assert!(rem % e == 0, "decomposition must be exact");
        mu1[i] = rem / e;
    }
    debug_assert!(mu1.windows(2).all(|w| w[0] >= w[1]), "mu1 must be a partition");
    (Composition(mu0), mu1)
}

/// The hat/tilde transform at padding d:
/// mu_hat = 2(e-1)rho_d + reverse(mu0) + e*mu1, lambda_tilde = lambda +
/// (e-1)(d-1,...,d-1), and similarly mu_tilde. rho_d = (d-1,...,1,0).
pub fn hat_tilde(
    lambda: &Partition,
    mu: &Partition,
    e: u32,
    d: usize,
) -> Result<(Partition, Partition, Partition)> {
    if d < lambda.len() || d < mu.len() {
        return Err(Error::PreconditionViolation(format!(
            "padding d = {d} is shorter than {lambda} or {mu}"
        )));
    }
    if e < 2 {
        return Err(Error::PreconditionViolation("e must be at least 2".into()));
    }
    let (mu0, mu1) = e_decompose(mu, e, d);
    let mut hat = vec![0u32; d];
    for i in 0..d {
        let rho = (d - 1 - i) as u32;
        hat[i] = 2 * (e - 1) * rho + mu0.0[d - 1 - i] + e * mu1[i];
    }
    let mu_hat = Partition::new(hat);
    let pad = (e - 1) * (d as u32 - 1);
    let tilde = |p: &Partition| Partition::new((0..d).map(|i| p.part(i) + pad).collect());
    let lambda_tilde = tilde(lambda);
    let mu_tilde = tilde(mu);
    let expected = mu.size() + d * (d - 1) * (e as usize - 1);
    if mu_hat.size() != expected {
        return Err(Error::AlgorithmInvariant(format!(
            "|mu_hat| = {} but expected {expected}",
            mu_hat.size()
        )));
    }
    if !mu_hat.conjugate().is_e_restricted(e) {
        return Err(Error::AlgorithmInvariant(format!(
            "conjugate of mu_hat = {mu_hat} is not {e}-restricted"
        )));
    }
    Ok((mu_hat, lambda_tilde, mu_tilde))
}

/// The ladder monomial of an e-restricted partition: divided-power
/// instructions (residue, multiplicity), one per ladder meeting mu, in
/// increasing ladder order. Ladders follow the rule that (a, b) and
/// (a+1, b-(e-1)) lie on the same ladder, indexed by b + (e-1)(a-1).
pub fn ladder_monomial(mu: &Partition, e: u32) -> Result<Vec<(u8, u32)>> {
    if !mu.is_e_restricted(e) {
        return Err(Error::NotRestricted(mu.to_string()));
    }
    let mut ladders: std::collections::BTreeMap<usize, (u8, u32)> = Default::default();
    for (a0, &len) in mu.parts().iter().enumerate() {
        let a = a0 + 1;
        for b in 1..=len as usize {
            let ell = b + (e as usize - 1) * (a - 1);
            let res = residue_of(a, b, e);
            let entry = ladders.entry(ell).or_insert((res, 0));
            assert_eq!(entry.0, res, "nodes of one ladder share a residue");
            entry.1 += 1;
        }
    }
    Ok(ladders.into_values().collect())
}
