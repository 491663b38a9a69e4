use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Integer polynomial in two commuting variables `q` and `t`.
///
/// Keys are `(q-exponent, t-exponent)`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct QTPoly {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl QTPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(qe: u32, te: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(qe, te, c.into());
        p
    }

    pub fn q_pow(e: u32) -> Self {
        Self::monomial(e, 0, 1)
    }

    pub fn t_pow(e: u32) -> Self {
        Self::monomial(0, e, 1)
    }

    /// Polynomial in `q` from its coefficient list, constant term first.
    pub fn from_q_coeffs(cs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (e, &c) in cs.iter().enumerate() {
            p.add_term(e as u32, 0, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, qe: u32, te: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((qe, te)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(qe, te));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, qe: u32, te: u32) -> BigInt {
        self.coeffs.get(&(qe, te)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.coeffs.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = Self::zero();
        for (a, b, v) in self.terms() {
            p.add_term(a, b, v * c);
        }
        p
    }

    /// Multiply by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        QTPoly { coeffs: self.coeffs.iter().map(|(&(x, y), c)| ((x + a, y + b), c.clone())).collect() }
    }

    /// Exchange the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        QTPoly { coeffs: self.coeffs.iter().map(|(&(x, y), c)| ((y, x), c.clone())).collect() }
    }

    pub fn at_q_one(&self) -> Self {
        let mut p = Self::zero();
        for (_, b, c) in self.terms() {
            p.add_term(0, b, c.clone());
        }
        p
    }

    pub fn at_t_one(&self) -> Self {
        let mut p = Self::zero();
        for (a, _, c) in self.terms() {
            p.add_term(a, 0, c.clone());
        }
        p
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn max_q_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|k| k.0).max()
    }

    /// Coefficients of `q^0, q^1, …` at `t`-degree zero.
    pub fn q_coeffs(&self) -> Vec<BigInt> {
        let d = match self.max_q_degree() {
            Some(d) => d,
            None => return Vec::new(),
        };
        (0..=d).map(|e| self.coeff(e, 0)).collect()
    }

    /// `rev_q(f) = q^{deg_q f} f(1/q)`, taken separately in each `t`-degree.
    pub fn rev_q(&self) -> Self {
        let mut top: BTreeMap<u32, u32> = BTreeMap::new();
        for &(a, b) in self.coeffs.keys() {
            let e = top.entry(b).or_insert(0);
            *e = (*e).max(a);
        }
        let mut p = Self::zero();
        for (a, b, c) in self.terms() {
            p.add_term(top[&b] - a, b, c.clone());
        }
        p
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// JSON form: list of `{q, t, c}` with `c` a decimal string.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .map(|(a, b, c)| serde_json::json!({"q": a, "t": b, "c": c.to_string()}))
                .collect(),
        )
    }
}

impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut keys: Vec<&(u32, u32)> = self.coeffs.keys().collect();
        keys.sort_by_key(|&&(a, b)| (a + b, b, a));
        for key in keys {
            let c = &self.coeffs[key];
            let (a, b) = *key;
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut var = String::new();
            for (name, e) in [("q", a), ("t", b)] {
                match e {
                    0 => {}
                    1 => var.push_str(name),
                    _ => var.push_str(&format!("{name}^{e}")),
                }
            }
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}{var}")?;
            }
        }
        Ok(())
    }
}

impl Add for &QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        let mut p = self.clone();
        for (a, b, c) in rhs.terms() {
            p.add_term(a, b, c.clone());
        }
        p
    }
}

impl Sub for &QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: &QTPoly) -> QTPoly {
        let mut p = self.clone();
        for (a, b, c) in rhs.terms() {
            p.add_term(a, b, -c);
        }
        p
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        let mut p = QTPoly::zero();
        for (a, b, c) in self.terms() {
            for (x, y, d) in rhs.terms() {
                p.add_term(a + x, b + y, c * d);
            }
        }
        p
    }
}

impl std::iter::Sum for QTPoly {
    fn sum<I: Iterator<Item = QTPoly>>(iter: I) -> QTPoly {
        iter.fold(QTPoly::zero(), |acc, x| &acc + &x)
    }
}

/// `[n]_q = 1 + q + ⋯ + q^{n−1}`.
pub fn q_int(n: usize) -> QTPoly {
    let mut p = QTPoly::zero();
    for e in 0..n {
        p.add_term(e as u32, 0, BigInt::one());
    }
    p
}

pub fn q_factorial(n: usize) -> QTPoly {
    (1..=n).fold(QTPoly::one(), |acc, i| &acc * &q_int(i))
}

/// Gaussian binomial `[a; b]_q`, zero when `b < 0`, `b > a` or `a < 0`.
pub fn q_binomial(a: i64, b: i64) -> QTPoly {
    if a < 0 || b < 0 || b > a {
        return QTPoly::zero();
    }
    let (a, b) = (a as usize, b as usize);
    // row-by-row q-Pascal: [m; j] = [m−1; j−1] + q^j [m−1; j]
    let mut row = vec![QTPoly::one()];
    for m in 1..=a {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let left = if j >= 1 { row[j - 1].clone() } else { QTPoly::zero() };
            let right = if j < m { row[j].shift(j as u32, 0) } else { QTPoly::zero() };
            next.push(&left + &right);
        }
        row = next;
    }
    row[b].clone()
}

/// `[n; α]_q = [n]!_q / ([α_1]!_q ⋯ [α_ℓ]!_q)`, built as a product of binomials.
pub fn q_multinomial(parts: &[usize]) -> QTPoly {
    let mut acc = QTPoly::one();
    let mut total = 0;
    for &p in parts {
        total += p;
        acc = &acc * &q_binomial(total as i64, p as i64);
    }
    acc
}

/// `Stir_q(n,k)` from `Stir_q(n,k) = Stir_q(n−1,k−1) + [k]_q Stir_q(n−1,k)`.
pub fn q_stirling(n: usize, k: usize) -> QTPoly {
    let mut prev: Vec<QTPoly> = (0..=k).map(|j| if j == 0 { QTPoly::one() } else { QTPoly::zero() }).collect();
    for _ in 1..=n {
        let mut cur = vec![QTPoly::zero(); k + 1];
        for j in 1..=k {
            cur[j] = &prev[j - 1] + &(&q_int(j) * &prev[j]);
        }
        prev = cur;
    }
    prev[k].clone()
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn binomial(a: i64, b: i64) -> u64 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    let mut r: u64 = 1;
    for j in 0..b as u64 {
        r = r * (a as u64 - j) / (j + 1);
    }
    r
}

/// Stirling numbers of the second kind.
pub fn stirling2(n: usize, k: usize) -> u64 {
    let mut prev: Vec<u64> = (0..=k).map(|j| u64::from(j == 0)).collect();
    for _ in 1..=n {
        let mut cur = vec![0; k + 1];
        for j in 1..=k {
            cur[j] = prev[j - 1] + j as u64 * prev[j];
        }
        prev = cur;
    }
    prev[k]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(cs: &[i64]) -> QTPoly {
        QTPoly::from_q_coeffs(cs)
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(q_stirling(4, 2), q(&[3, 3, 1]));
        assert_eq!(q_stirling(0, 0), QTPoly::one());
        assert!(q_stirling(0, 1).is_zero());
        assert!(q_stirling(3, 0).is_zero());
        assert!(q_stirling(2, 3).is_zero());
        assert_eq!(stirling2(5, 3), 25);
    }

    #[test]
    fn hilbert_42_display() {
        let h = (&q_factorial(2) * &q_stirling(4, 2)).rev_q();
        assert_eq!(h, q(&[1, 4, 6, 3]));
        assert_eq!(h.to_string(), "1 + 4q + 6q^2 + 3q^3");
    }

    #[test]
    fn binomials() {
        assert_eq!(q_binomial(4, 2), q(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(2, 3).is_zero());
        assert!(q_binomial(2, -1).is_zero());
        assert_eq!(q_binomial(0, 0), QTPoly::one());
        assert_eq!(q_multinomial(&[2, 2]), q(&[1, 1, 2, 1, 1]));
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(2, 3), 0);
        for a in 0..8 {
            for b in 0..=a {
                assert_eq!(q_binomial(a, b).total(), BigInt::from(binomial(a, b)));
            }
        }
    }

    #[test]
    fn q_stirling_specializes() {
        for n in 0..8 {
            for k in 0..=n {
                assert_eq!(q_stirling(n, k).total(), BigInt::from(stirling2(n, k)));
            }
        }
    }

    #[test]
    fn rev_q_involution() {
        let f = q(&[2, 0, 5, 1]);
        assert_eq!(f.rev_q(), q(&[1, 5, 0, 2]));
        assert_eq!(f.rev_q().rev_q(), f);
        let g = &QTPoly::monomial(1, 2, 3) + &QTPoly::monomial(0, 2, 1);
        assert_eq!(g.rev_q(), &QTPoly::monomial(0, 2, 3) + &QTPoly::monomial(1, 2, 1));
    }

    #[test]
    fn display_mixed() {
        let p = &(&QTPoly::t_pow(1) + &QTPoly::monomial(2, 1, -3)) + &QTPoly::one();
        assert_eq!(p.to_string(), "1 + t - 3q^2t");
        assert_eq!(QTPoly::zero().to_string(), "0");
    }
}
