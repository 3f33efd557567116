//! Permutations of {1..n} with the right-action product convention:
//! (uv)(k) = v(u(k)), so T_u T_v corresponds to the word of u followed by
//! the word of v.

/// One-line notation: `word[k-1] = w(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u8).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k - 1] as usize
    }

    /// The adjacent transposition s_k (1-based, k < n).
    pub fn transposition(n: usize, k: usize) -> Self {
        let mut w = Self::identity(n);
        w.0.swap(k - 1, k);
        w
    }

    /// (self * other)(k) = other(self(k)).
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&v| other.0[v as usize - 1]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Coxeter length = inversion count of the one-line word.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Canonical reduced word: repeatedly strip the smallest left descent.
    /// This yields the lexicographically smallest reduced expression,
    /// read left to right as s_{i1} s_{i2} ... .
    pub fn reduced_word(&self) -> Vec<usize> {
        self.reduced_word_by(|w| (1..w.n()).find(|&i| w.0[i - 1] > w.0[i]))
    }

    /// Alternative reduced word: strip the largest left descent instead.
    pub fn reduced_word_alt(&self) -> Vec<usize> {
        self.reduced_word_by(|w| (1..w.n()).rev().find(|&i| w.0[i - 1] > w.0[i]))
    }

    fn reduced_word_by(&self, pick: impl Fn(&Perm) -> Option<usize>) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = pick(&w) {
            word.push(i);
            // strip on the left: w = s_i * w', so w' = s_i * w
            w.0.swap(i - 1, i);
        }
        debug_assert!(w.is_identity());
        word
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_word(n: usize, word: &[usize]) -> Perm {
        word.iter().fold(Perm::identity(n), |acc, &i| {
            acc.compose(&Perm::transposition(n, i))
        })
    }

    #[test]
    fn test_compose_convention() {
        // s_3 s_2 applied to 2 gives 3: first s_3 fixes 2, then s_2 sends 2 to 3.
        let w = Perm::transposition(4, 3).compose(&Perm::transposition(4, 2));
        assert_eq!(w.0, vec![1, 3, 4, 2]);
        assert_eq!(w.length(), 2);
    }

    #[test]
    fn test_reduced_words_roundtrip() {
        // all of S_4
        fn perms(n: usize) -> Vec<Perm> {
            let mut out = vec![Perm(vec![])];
            for k in 1..=n {
                let mut next = Vec::new();
                for p in out {
                    for pos in 0..=p.0.len() {
                        let mut v = p.0.clone();
                        v.insert(pos, k as u8);
                        next.push(Perm(v));
                    }
                }
                out = next;
            }
            out
        }
        for w in perms(4) {
            for word in [w.reduced_word(), w.reduced_word_alt()] {
                assert_eq!(word.len(), w.length(), "word for {:?} not reduced", w.0);
                assert_eq!(from_word(4, &word), w);
            }
        }
    }

    #[test]
    fn test_inverse() {
        let w = Perm(vec![1, 3, 4, 2]);
        assert!(w.compose(&w.inverse()).is_identity());
        assert_eq!(w.inverse().0, vec![1, 4, 2, 3]);
    }
}
