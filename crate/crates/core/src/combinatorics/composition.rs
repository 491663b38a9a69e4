use std::fmt;

use crate::error::{Error, Result};

/// A composition of `n`: a sequence of positive parts summing to `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidComposition(format!("zero part in {parts:?}")));
        }
        Ok(Composition { parts })
    }

    /// The composition of `n` whose descent set is `des` (any order, duplicates ignored).
    pub fn from_descents(n: usize, des: &[usize]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidComposition("n must be positive".into()));
        }
        let mut d: Vec<usize> = des.to_vec();
        d.sort_unstable();
        d.dedup();
        if let Some(&bad) = d.iter().find(|&&x| x == 0 || x >= n) {
            return Err(Error::IndexOutOfRange { index: bad, max: n - 1 });
        }
        let mut parts = Vec::with_capacity(d.len() + 1);
        let mut prev = 0;
        for &x in d.iter().chain(std::iter::once(&n)) {
            parts.push(x - prev);
            prev = x;
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, `ℓ(α)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Partial sums `α_1, α_1+α_2, …` short of `n`.
    pub fn descents(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.parts.len().saturating_sub(1));
        for &p in &self.parts[..self.parts.len() - 1] {
            acc += p;
            out.push(acc);
        }
        out
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    pub fn complement(&self) -> Composition {
        let n = self.n();
        let des = self.descents();
        let comp: Vec<usize> = (1..n).filter(|j| des.binary_search(j).is_err()).collect();
        Composition::from_descents(n, &comp).expect("complement is valid")
    }

    /// `self ⪯ other` iff `Des(self) ⊆ Des(other)` (other refines self).
    pub fn is_coarsening_of(&self, other: &Composition) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let od = other.descents();
        self.descents().iter().all(|d| od.binary_search(d).is_ok())
    }

    /// `α ∪ 𝐢`: the composition whose descent set is `Des(α) ∪ Des(𝐢)`.
    pub fn union(&self, i: &[usize]) -> Result<Composition> {
        let n = self.n();
        if i.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: i.len() });
        }
        let mut des = self.descents();
        des.extend(sequence_descents(i));
        Composition::from_descents(n, &des)
    }

    /// Every composition lying between `self` and `upper` in the refinement order.
    pub fn interval(&self, upper: &Composition) -> Vec<Composition> {
        if !self.is_coarsening_of(upper) {
            return Vec::new();
        }
        let low = self.descents();
        let extra: Vec<usize> = upper
            .descents()
            .into_iter()
            .filter(|d| low.binary_search(d).is_err())
            .collect();
        let n = self.n();
        let mut out = Vec::with_capacity(1 << extra.len());
        for mask in 0u32..(1 << extra.len()) {
            let mut d = low.clone();
            d.extend(
                extra
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &x)| x),
            );
            out.push(Composition::from_descents(n, &d).expect("valid descents"));
        }
        out.sort();
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Descent positions `j` (1-based) of an integer word, `w_j > w_{j+1}`.
pub fn sequence_descents<T: PartialOrd>(w: &[T]) -> Vec<usize> {
    (1..w.len()).filter(|&j| w[j - 1] > w[j]).collect()
}

/// All compositions of `n` in lexicographic order of their parts.
pub fn all_compositions(n: usize) -> Vec<Composition> {
    fn rec(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rem == 0 {
            out.push(Composition { parts: cur.clone() });
            return;
        }
        for p in 1..=rem {
            cur.push(p);
            rec(rem - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn stats_of_2312() {
        let a = c(&[2, 3, 1, 2]);
        assert_eq!(a.descents(), vec![2, 5, 6]);
        assert_eq!(a.maj(), 13);
        assert_eq!(a.complement(), c(&[1, 2, 1, 3, 1]));
    }

    #[test]
    fn one_part_and_all_ones() {
        let a = c(&[5]);
        assert!(a.descents().is_empty());
        assert_eq!(a.complement(), c(&[1, 1, 1, 1, 1]));
        let b = c(&[1, 1, 1]);
        assert_eq!(b.descents(), vec![1, 2]);
        assert_eq!(b.maj(), 3);
        assert_eq!(b.complement(), c(&[3]));
    }

    #[test]
    fn union_examples() {
        let a = c(&[3, 2, 3]);
        assert_eq!(a.union(&[4, 5, 0, 0, 1, 0, 2, 2]).unwrap(), c(&[2, 1, 2, 3]));
        assert_eq!(c(&[2, 2]).union(&[1, 0, 0, 0]).unwrap(), c(&[1, 1, 2]));
        assert_eq!(c(&[4]).union(&[0, 1, 1, 3]).unwrap(), c(&[4]));
        assert!(c(&[4]).union(&[0, 1]).is_err());
    }

    #[test]
    fn descent_bijection_and_involution() {
        for n in 1..=8 {
            let all = all_compositions(n);
            assert_eq!(all.len(), 1 << (n - 1));
            for a in &all {
                assert_eq!(&Composition::from_descents(n, &a.descents()).unwrap(), a);
                assert_eq!(a.descents().len(), a.len() - 1);
                assert_eq!(&a.complement().complement(), a);
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Composition::new(vec![]).is_err());
        assert!(Composition::new(vec![2, 0]).is_err());
        assert!(Composition::from_descents(3, &[3]).is_err());
    }

    #[test]
    fn interval_sizes() {
        let lo = c(&[4]);
        let hi = c(&[1, 1, 2]);
        let iv = lo.interval(&hi);
        assert_eq!(iv.len(), 4);
        assert!(iv.iter().all(|g| lo.is_coarsening_of(g) && g.is_coarsening_of(&hi)));
        assert!(hi.interval(&lo).is_empty());
    }
}
