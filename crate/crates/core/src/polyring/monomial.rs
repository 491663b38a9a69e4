use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector `x_1^{a_1} ⋯ x_n^{a_n}`, ordered by neglex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn new(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn from_usize(exps: &[usize]) -> Self {
        Monomial(exps.iter().map(|&e| e as u16).collect())
    }

    /// The variable `x_i`, `1 ≤ i ≤ n`.
    pub fn var(i: usize, n: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i - 1] = 1;
        m
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    /// Exponent of `x_i` (1-based).
    pub fn exp(&self, i: usize) -> u16 {
        self.0[i - 1]
    }

    pub fn set_exp(&mut self, i: usize, e: u16) {
        self.0[i - 1] = e;
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exchange the exponents of `x_i` and `x_{i+1}`.
    pub fn swap(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.0.swap(i - 1, i);
        m
    }

    /// Image under `x_j ↦ x_{w(j)}` where `w` is given in one-line notation.
    pub fn permute(&self, w: &[usize]) -> Monomial {
        let mut m = Self::one(self.n());
        for (j, &e) in self.0.iter().enumerate() {
            m.0[w[j] - 1] = e;
        }
        m
    }

    /// Neglex comparison, failing on mismatched variable counts.
    pub fn try_cmp(&self, other: &Monomial) -> Result<Ordering> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch { expected: self.n(), got: other.n() });
        }
        Ok(self.cmp(other))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.0.as_slice())
    }
}

impl Ord for Monomial {
    /// Lex with `x_n > ⋯ > x_1`: the highest differing index decides.
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (j, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", j + 1)),
                _ => parts.push(format!("x{}^{}", j + 1, e)),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neglex_basics() {
        let x1 = Monomial::var(1, 2);
        let x2 = Monomial::var(2, 2);
        assert!(x1 < x2);
        assert!(Monomial::new(&[5, 0]) < x2);
        assert!(Monomial::one(2) < x1);
        assert!(Monomial::new(&[0, 1]).try_cmp(&Monomial::new(&[1])).is_err());
    }

    #[test]
    fn display_ascii() {
        assert_eq!(Monomial::new(&[2, 0, 0, 0, 1]).to_string(), "x1^2*x5");
        assert_eq!(Monomial::one(3).to_string(), "1");
    }

    #[test]
    fn permute_sends_xj_to_xwj() {
        let m = Monomial::new(&[1, 2, 0]);
        assert_eq!(m.permute(&[3, 1, 2]), Monomial::new(&[2, 0, 1]));
    }
}
