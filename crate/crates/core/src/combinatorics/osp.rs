use std::fmt;

use super::composition::{all_compositions, Composition};
use super::permutation::{all_permutations, Permutation};
use crate::error::{Error, Result};

/// An ordered set partition of `[n]`, blocks sorted ascending internally.
///
/// Equivalent to the pair `(w, α)` where `w` lists the blocks left to right and
/// `α` is the shape; then `Des(w) ⊆ Des(α)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; n + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidSetPartition("empty block".into()));
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::InvalidSetPartition(format!("{blocks:?}")));
                }
                seen[v] = true;
            }
        }
        Ok(OrderedSetPartition { blocks })
    }

    /// Parse bar notation such as `"24|57|136|8"`; entries are single digits
    /// unless a block contains commas.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut blocks = Vec::new();
        for b in s.split('|') {
            let b = b.trim();
            let vals: Option<Vec<usize>> = if b.contains(',') {
                b.split(',').map(|t| t.trim().parse().ok()).collect()
            } else {
                b.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
            };
            blocks.push(vals.ok_or_else(|| Error::InvalidSetPartition(s.to_string()))?);
        }
        Self::new(blocks)
    }

    pub fn from_pair(w: &Permutation, alpha: &Composition) -> Result<Self> {
        if w.n() != alpha.n() {
            return Err(Error::LengthMismatch { expected: alpha.n(), got: w.n() });
        }
        let des = alpha.descents();
        if w.descents().iter().any(|d| des.binary_search(d).is_err()) {
            return Err(Error::InvalidSetPartition(format!("Des({w}) not inside Des{alpha}")));
        }
        let mut blocks = Vec::with_capacity(alpha.len());
        let mut at = 0;
        for &p in alpha.parts() {
            blocks.push(w.one_line()[at..at + p].to_vec());
            at += p;
        }
        Ok(OrderedSetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn shape(&self) -> Composition {
        Composition::new(self.blocks.iter().map(|b| b.len()).collect()).expect("nonempty blocks")
    }

    pub fn word(&self) -> Permutation {
        Permutation::new(self.blocks.concat()).expect("blocks partition [n]")
    }

    /// Index of the block containing `v`.
    pub fn block_of(&self, v: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&v).is_ok())
            .expect("value present")
    }

    /// `maj(σ) = maj(w) + Σ_{max B_i < min B_{i+1}} (α_1 + ⋯ + α_i − i)`.
    pub fn maj(&self) -> usize {
        let mut total = self.word().maj();
        let mut prefix = 0;
        for i in 0..self.blocks.len() - 1 {
            prefix += self.blocks[i].len();
            if self.blocks[i].last() < self.blocks[i + 1].first() {
                total += prefix - (i + 1);
            }
        }
        total
    }

    /// `maj′(σ) = Σ_i (i−1)(α_i−1) + Σ_{min B_i > max B_{i+1}} i`.
    pub fn maj_prime(&self) -> usize {
        let mut total = 0;
        for (i, b) in self.blocks.iter().enumerate() {
            total += i * (b.len() - 1);
        }
        for i in 0..self.blocks.len() - 1 {
            if self.blocks[i].first() > self.blocks[i + 1].last() {
                total += i + 1;
            }
        }
        total
    }

    /// `ℓ(σ) = inv(w)`.
    pub fn length(&self) -> usize {
        self.word().inv()
    }

    /// Bar notation; blocks use commas when `n > 9`.
    pub fn to_bar_string(&self) -> String {
        let sep = if self.n() > 9 { "," } else { "" };
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep))
            .collect();
        parts.join("|")
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_bar_string())
    }
}

/// `OP_α`, ordered by the one-line word.
pub fn osp_of_shape(alpha: &Composition) -> Vec<OrderedSetPartition> {
    let des = alpha.descents();
    all_permutations(alpha.n())
        .into_iter()
        .filter(|w| w.descents().iter().all(|d| des.binary_search(d).is_ok()))
        .map(|w| OrderedSetPartition::from_pair(&w, alpha).expect("compatible"))
        .collect()
}

/// `OP_{n,k}`, ordered by shape (lex) and then by word (lex).
pub fn osp_all(n: usize, k: usize) -> Vec<OrderedSetPartition> {
    all_compositions(n)
        .into_iter()
        .filter(|a| a.len() == k)
        .flat_map(|a| osp_of_shape(&a))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maj_example() {
        let s = OrderedSetPartition::parse("(24|57|136|8)").unwrap();
        assert_eq!(s.maj(), 9);
        assert_eq!(s.word().to_compact(), "24571368");
        assert_eq!(OrderedSetPartition::parse("12345").unwrap().maj(), 0);
    }

    #[test]
    fn maj_prime_example() {
        assert_eq!(OrderedSetPartition::parse("34|12").unwrap().maj_prime(), 2);
        assert_eq!(OrderedSetPartition::parse("1|2|3|4").unwrap().maj_prime(), 0);
    }

    #[test]
    fn length_is_inversions_of_word() {
        let s = OrderedSetPartition::parse("25|6|134").unwrap();
        assert_eq!(s.word().to_compact(), "256134");
        // brute-force inversion count of 256134
        let w = [2, 5, 6, 1, 3, 4];
        let mut c = 0;
        for a in 0..6 {
            for b in a + 1..6 {
                if w[a] > w[b] {
                    c += 1;
                }
            }
        }
        assert_eq!(s.length(), c);
        assert_eq!(s.shape().parts(), &[2, 1, 3]);
    }

    #[test]
    fn pair_encoding_round_trip() {
        for s in osp_all(5, 3) {
            assert_eq!(OrderedSetPartition::from_pair(&s.word(), &s.shape()).unwrap(), s);
        }
        let w = Permutation::parse("2134").unwrap();
        assert!(OrderedSetPartition::from_pair(&w, &Composition::new(vec![2, 2]).unwrap()).is_err());
    }

    #[test]
    fn rejects_malformed() {
        assert!(OrderedSetPartition::new(vec![vec![1], vec![]]).is_err());
        assert!(OrderedSetPartition::new(vec![vec![1, 3]]).is_err());
    }
}
