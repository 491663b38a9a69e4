use std::fmt;

use super::composition::{sequence_descents, Composition};
use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation (values `1..=n`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{one_line:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    /// Parse the compact form `"254689137"` (single digits only) or a comma list.
    pub fn parse(s: &str) -> Result<Self> {
        let vals: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let vals = vals.ok_or_else(|| Error::InvalidPermutation(s.to_string()))?;
        Permutation::new(vals)
    }

    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        let mut w = Self::identity(n);
        w.one_line.swap(i - 1, i);
        Ok(w)
    }

    /// Longest element `n ⋯ 2 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `w(j)` for 1-based `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.one_line[j - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (j, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = j + 1;
        }
        Permutation { one_line: inv }
    }

    /// `(self ∘ other)(j) = self(other(j))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { one_line: other.one_line.iter().map(|&j| self.apply(j)).collect() }
    }

    /// `s_i · w`: swap the values `i` and `i+1`.
    pub fn left_simple(&self, i: usize) -> Permutation {
        let one_line = self
            .one_line
            .iter()
            .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
            .collect();
        Permutation { one_line }
    }

    /// `w · s_i`: swap positions `i` and `i+1`.
    pub fn right_simple(&self, i: usize) -> Permutation {
        let mut w = self.clone();
        w.one_line.swap(i - 1, i);
        w
    }

    /// Right descents `{ j : w(j) > w(j+1) }`.
    pub fn descents(&self) -> Vec<usize> {
        sequence_descents(&self.one_line)
    }

    pub fn des(&self) -> usize {
        self.descents().len()
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    /// Inverse descents: `i` such that `i+1` appears left of `i`.
    pub fn inverse_descents(&self) -> Vec<usize> {
        self.inverse().descents()
    }

    pub fn inv(&self) -> usize {
        let w = &self.one_line;
        let mut c = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    c += 1;
                }
            }
        }
        c
    }

    /// `true` if `i` comes before `i+1` in one-line notation, i.e. `ℓ(s_i w) > ℓ(w)`.
    pub fn left_ascent(&self, i: usize) -> bool {
        let pos = |v: usize| self.one_line.iter().position(|&x| x == v).expect("value present");
        pos(i) < pos(i + 1)
    }

    /// Canonical reduced word `[i_1, …, i_ℓ]` with `w = s_{i_1} ⋯ s_{i_ℓ}`.
    ///
    /// Built by peeling the leftmost right descent: `word(w) = word(w s_j) ++ [j]`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(&j) = w.descents().first() {
            rev.push(j);
            w = w.right_simple(j);
        }
        rev.reverse();
        rev
    }

    /// Every reduced word of `self` (exponential; meant for small `n`).
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        let d = self.descents();
        if d.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for j in d {
            for mut word in self.right_simple(j).all_reduced_words() {
                word.push(j);
                out.push(word);
            }
        }
        out.sort();
        out
    }

    pub fn from_word(word: &[usize], n: usize) -> Result<Permutation> {
        let mut w = Permutation::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange { index: i, max: n - 1 });
            }
            w = w.right_simple(i);
        }
        Ok(w)
    }

    /// `w_0(α)`: the minimal-length permutation with descent set `Des(α)`.
    ///
    /// Ribbon filling: row `r` (counted from the bottom) occupies columns
    /// `c_r ..= c_r + α_r − 1` with `c_{r+1} = c_r + α_r − 1`; columns are
    /// filled left to right, each from its top cell down, and the rows are
    /// then read bottom to top.
    pub fn w0(alpha: &Composition) -> Permutation {
        let parts = alpha.parts();
        let mut start = Vec::with_capacity(parts.len());
        let mut c = 0usize;
        for &p in parts {
            start.push(c);
            c += p - 1;
        }
        let ncols = c + 1;
        let mut cells: Vec<Vec<usize>> = parts.iter().map(|&p| vec![0; p]).collect();
        let mut next = 1;
        for col in 0..ncols {
            for r in (0..parts.len()).rev() {
                if col >= start[r] && col < start[r] + parts[r] {
                    cells[r][col - start[r]] = next;
                    next += 1;
                }
            }
        }
        Permutation { one_line: cells.concat() }
    }

    /// Compact display; values above 9 are comma separated.
    pub fn to_compact(&self) -> String {
        if self.n() <= 9 {
            self.one_line.iter().map(|v| v.to_string()).collect()
        } else {
            let s: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
            s.join(",")
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact())
    }
}

/// All of `S_n` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    use itertools::Itertools;
    (1..=n)
        .permutations(n)
        .map(|one_line| Permutation { one_line })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w0_examples() {
        let a = Composition::new(vec![2, 3, 1]).unwrap();
        assert_eq!(Permutation::w0(&a).to_compact(), "132465");
        assert_eq!(Permutation::w0(&Composition::new(vec![5]).unwrap()), Permutation::identity(5));
        let ones = Composition::new(vec![1; 4]).unwrap();
        assert_eq!(Permutation::w0(&ones), Permutation::longest(4));
    }

    #[test]
    fn w0_is_unique_minimum_of_descent_class() {
        for n in 1..=6 {
            let perms = all_permutations(n);
            for a in super::super::all_compositions(n) {
                let class: Vec<&Permutation> =
                    perms.iter().filter(|w| w.descents() == a.descents()).collect();
                let m = class.iter().map(|w| w.inv()).min().unwrap();
                let minima: Vec<&&Permutation> = class.iter().filter(|w| w.inv() == m).collect();
                assert_eq!(minima.len(), 1);
                assert_eq!(**minima[0], Permutation::w0(&a), "alpha {a}");
            }
        }
    }

    #[test]
    fn reduced_words_have_length_inv() {
        for n in 1..=6 {
            for w in all_permutations(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.inv());
                assert_eq!(Permutation::from_word(&word, n).unwrap(), w);
                assert_eq!(w.inverse().descents(), w.inverse_descents());
            }
        }
        let w = Permutation::parse("3412").unwrap();
        let words = w.all_reduced_words();
        assert_eq!(words.len(), 2);
        for word in words {
            assert_eq!(Permutation::from_word(&word, 4).unwrap(), w);
        }
    }

    #[test]
    fn left_and_right_multiplication() {
        let w = Permutation::parse("2413").unwrap();
        let s1 = Permutation::simple(1, 4).unwrap();
        assert_eq!(w.left_simple(1), s1.compose(&w));
        assert_eq!(w.right_simple(1), w.compose(&s1));
        for i in 1..4 {
            assert_eq!(w.left_ascent(i), w.left_simple(i).inv() > w.inv());
        }
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::simple(3, 3).is_err());
    }
}
