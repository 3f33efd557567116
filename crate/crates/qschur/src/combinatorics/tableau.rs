//! Standard tableaux: enumeration, residue sequences, the degree statistic,
//! and coset representatives d(t) with canonical reduced words.

use std::fmt;

use crate::combinatorics::partition::{residue_of, Partition};
use crate::combinatorics::perm::Perm;
use crate::error::{Error, Result};

/// A residue sequence in (Z/eZ)^n.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResidueSeq(pub Vec<u8>);

impl fmt::Display for ResidueSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &r in &self.0 {
            if r < 10 {
                write!(f, "{r}")?;
            } else {
                write!(f, "({r})")?;
            }
        }
        Ok(())
    }
}

/// A standard Young tableau: rows and columns strictly increasing, entries a
/// bijection onto 1..n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Self {
        debug_assert_eq!(rows.len(), shape.len());
        StandardTableau { shape, rows }
    }

    /// The canonical tableau t^lambda: 1..lambda_1 in row one, and so on.
    pub fn canonical(shape: &Partition) -> Self {
        let mut rows = Vec::new();
        let mut next = 1u32;
        for &len in shape.parts() {
            rows.push((next..next + len).collect());
            next += len;
        }
        StandardTableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Row-reading word: entries left to right, top row first.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn reading_word_string(&self) -> String {
        self.reading_word()
            .iter()
            .map(|k| if *k < 10 { k.to_string() } else { format!("({k})") })
            .collect()
    }

    /// (row, col) of entry k, 1-based.
    pub fn position_of(&self, k: u32) -> (usize, usize) {
        for (a, row) in self.rows.iter().enumerate() {
            if let Some(b) = row.iter().position(|&x| x == k) {
                return (a + 1, b + 1);
            }
        }
        panic!("entry {k} missing from tableau");
    }

    pub fn residue_sequence(&self, e: u32) -> ResidueSeq {
        let mut vals = Vec::with_capacity(self.n());
        for k in 1..=self.n() as u32 {
            let (a, b) = self.position_of(k);
            vals.push(residue_of(a, b, e));
        }
        ResidueSeq(vals)
    }

    /// Shape of the first k entries.
    fn shape_at(&self, k: u32) -> Partition {
        let mut parts = vec![0u32; self.shape.len()];
        for (a, row) in self.rows.iter().enumerate() {
            parts[a] = row.iter().filter(|&&x| x <= k).count() as u32;
        }
        Partition::new(parts)
    }

    /// deg(v_t) = sum over k of (addable minus removable res(x_k)-nodes of
    /// the k-th partial shape strictly below the node of k).
    pub fn degree(&self, e: u32) -> i64 {
        let mut deg = 0i64;
        for k in 1..=self.n() as u32 {
            let (a, b) = self.position_of(k);
            let res = residue_of(a, b, e);
            let shape = self.shape_at(k);
            let (add, rem) = shape.addable_removable(res, e);
            let below_add = add.iter().filter(|n| n.row > a).count() as i64;
            let below_rem = rem.iter().filter(|n| n.row > a).count() as i64;
            deg += below_add - below_rem;
        }
        deg
    }

    /// The coset representative d(t): maps the entry of t^lambda at each
    /// node to the entry of t there.
    pub fn d_perm(&self) -> Perm {
        let n = self.n();
        let canonical = StandardTableau::canonical(&self.shape);
        let mut one_line = vec![0u8; n];
        for (a, row) in canonical.rows.iter().enumerate() {
            for (b, &k) in row.iter().enumerate() {
                one_line[k as usize - 1] = self.rows[a][b] as u8;
            }
        }
        Perm(one_line)
    }
}

/// A reduced word for d(t): the lexicographically smallest reduced
/// expression, via smallest-descent extraction.
pub fn coset_word(t: &StandardTableau) -> Vec<usize> {
    t.d_perm().reduced_word()
}

/// All standard tableaux of the given shape, ordered by reading word
/// lexicographically; the canonical tableau comes first.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    // Build by removing the largest entry from a removable corner.
    fn rec(parts: &mut Vec<u32>, k: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if k == 0 {
            out.push(rows.clone());
            return;
        }
        for a in 0..parts.len() {
            let len = parts[a];
            if len == 0 {
                continue;
            }
            let below = if a + 1 < parts.len() { parts[a + 1] } else { 0 };
            if len > below {
                parts[a] -= 1;
                rows[a][len as usize - 1] = k;
                rec(parts, k - 1, rows, out);
                rows[a][len as usize - 1] = 0;
                parts[a] += 1;
            }
        }
    }
    let n = shape.size() as u32;
    let mut parts: Vec<u32> = shape.parts().to_vec();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut fillings = Vec::new();
    rec(&mut parts, n, &mut rows, &mut fillings);
    let mut tableaux: Vec<StandardTableau> = fillings
        .into_iter()
        .map(|rows| StandardTableau::new(shape.clone(), rows))
        .collect();
    tableaux.sort_by_key(|t| t.reading_word());
    debug_assert!(
        tableaux.is_empty() || tableaux[0] == StandardTableau::canonical(shape),
        "canonical tableau must sort first"
    );
    tableaux
}

/// Bounded wrapper used by enumerating callers.
pub fn standard_tableaux_bounded(shape: &Partition, bound: usize) -> Result<Vec<StandardTableau>> {
    if shape.size() > bound {
        return Err(Error::BoundExceeded {
            what: "standard_tableaux",
            limit: bound,
            got: shape.size(),
        });
    }
    Ok(standard_tableaux(shape))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::partitions_of;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn by_word(shape: &Partition, word: &str) -> StandardTableau {
        standard_tableaux(shape)
            .into_iter()
            .find(|t| t.reading_word_string() == word)
            .unwrap_or_else(|| panic!("no tableau {word} of shape {shape}"))
    }

    #[test]
    fn test_enumeration() {
        let t22: Vec<String> = standard_tableaux(&p(&[2, 2]))
            .iter()
            .map(|t| t.reading_word_string())
            .collect();
        assert_eq!(t22, vec!["1234", "1324"]);
        assert_eq!(standard_tableaux(&p(&[5])).len(), 1);
        let t31: Vec<String> = standard_tableaux(&p(&[3, 1]))
            .iter()
            .map(|t| t.reading_word_string())
            .collect();
        assert_eq!(t31, vec!["1234", "1243", "1342"]);
    }

    #[test]
    fn test_murphy_dimension_count() {
        // sum over shapes of (#std)^2 = n!
        for (n, fact) in [(1usize, 1usize), (2, 2), (3, 6), (4, 24), (5, 120)] {
            let total: usize = partitions_of(n)
                .unwrap()
                .iter()
                .map(|lam| standard_tableaux(lam).len().pow(2))
                .sum();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn test_residue_sequences() {
        let e = 4;
        assert_eq!(
            by_word(&p(&[1, 1, 1, 1]), "1234").residue_sequence(e).0,
            vec![0, 3, 2, 1]
        );
        assert_eq!(
            by_word(&p(&[4]), "1234").residue_sequence(e).0,
            vec![0, 1, 2, 3]
        );
        assert_eq!(
            by_word(&p(&[3, 1]), "1342").residue_sequence(e).0,
            vec![0, 3, 1, 2]
        );
    }

    #[test]
    fn test_residue_starts_at_zero() {
        for n in 1..=6 {
            for shape in partitions_of(n).unwrap() {
                for t in standard_tableaux(&shape) {
                    for e in 2..=5 {
                        assert_eq!(t.residue_sequence(e).0[0], 0);
                    }
                }
            }
        }
    }

    #[test]
    fn test_degrees() {
        let e = 4;
        assert_eq!(by_word(&p(&[4]), "1234").degree(e), 1);
        assert_eq!(by_word(&p(&[3, 1]), "1234").degree(e), 0);
        assert_eq!(by_word(&p(&[3, 1]), "1243").degree(e), 1);
        assert_eq!(by_word(&p(&[3, 1]), "1342").degree(e), 1);
        assert_eq!(by_word(&p(&[2, 1, 1]), "1234").degree(e), 0);
        assert_eq!(by_word(&p(&[2, 1, 1]), "1324").degree(e), 0);
        assert_eq!(by_word(&p(&[2, 1, 1]), "1423").degree(e), 1);
        assert_eq!(by_word(&p(&[1, 1, 1, 1]), "1234").degree(e), 0);
        // Both tableaux of (2,2) are linked by a degree-zero intertwiner, so
        // their degrees agree.
        assert_eq!(by_word(&p(&[2, 2]), "1234").degree(e), 0);
        assert_eq!(by_word(&p(&[2, 2]), "1324").degree(e), 0);
    }

    /// Independent brute-force node scan for the degree statistic.
    fn degree_oracle(t: &StandardTableau, e: u32) -> i64 {
        let mut total = 0i64;
        for k in 1..=t.n() as u32 {
            let (a, b) = t.position_of(k);
            let res = residue_of(a, b, e);
            // partial shape as a raw grid
            let mut grid = vec![vec![false; t.n()]; t.n() + 2];
            for (r, row) in t.rows().iter().enumerate() {
                for (c, &x) in row.iter().enumerate() {
                    if x <= k {
                        grid[r][c] = true;
                    }
                }
            }
            let filled =
                |r: usize, c: usize| -> bool { r >= 1 && c >= 1 && c <= t.n() && grid[r - 1][c - 1] };
            for r in (a + 1)..=(t.n() + 1) {
                for c in 1..=t.n() {
                    if residue_of(r, c, e) != res {
                        continue;
                    }
                    let addable = !filled(r, c)
                        && (r == 1 || filled(r - 1, c))
                        && (c == 1 || filled(r, c - 1));
                    let removable = filled(r, c) && !filled(r, c + 1) && !filled(r + 1, c);
                    if addable {
                        total += 1;
                    }
                    if removable {
                        total -= 1;
                    }
                }
            }
        }
        total
    }

    #[test]
    fn test_degree_against_oracle() {
        for n in 1..=6 {
            for shape in partitions_of(n).unwrap() {
                for t in standard_tableaux(&shape) {
                    for e in [3u32, 4, 5] {
                        assert_eq!(
                            t.degree(e),
                            degree_oracle(&t, e),
                            "degree mismatch for {} at e={e}",
                            t.reading_word_string()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn test_coset_words() {
        assert!(coset_word(&StandardTableau::canonical(&p(&[3, 1]))).is_empty());
        assert_eq!(coset_word(&by_word(&p(&[3, 1]), "1243")), vec![3]);
        assert_eq!(coset_word(&by_word(&p(&[3, 1]), "1342")), vec![3, 2]);
        let d = by_word(&p(&[3, 1]), "1342").d_perm();
        assert_eq!(d.0, vec![1, 3, 4, 2]);
    }
}
