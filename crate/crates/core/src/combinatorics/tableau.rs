use crate::error::{Error, Result};

use super::permutation::Permutation;

/// A standard Young tableau in English notation (row 0 on top).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = || Error::InvalidParameters(format!("not a standard tableau: {rows:?}"));
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() || (r > 0 && row.len() > rows[r - 1].len()) {
                return Err(bad());
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n || seen[v] {
                    return Err(bad());
                }
                seen[v] = true;
                if c > 0 && row[c - 1] >= v {
                    return Err(bad());
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(bad());
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    fn row_of(&self) -> Vec<usize> {
        let mut at = vec![0; self.n() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                at[v] = r;
            }
        }
        at
    }

    /// `{ i : i+1 lies in a row strictly below i }`.
    pub fn descents(&self) -> Vec<usize> {
        let at = self.row_of();
        (1..self.n()).filter(|&i| at[i + 1] > at[i]).collect()
    }

    pub fn des(&self) -> usize {
        self.descents().len()
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }
}

/// Partitions of `n`, largest first in lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All standard tableaux of shape `shape`, sorted.
pub fn standard_tableaux(shape: &[usize]) -> Vec<StandardTableau> {
    fn rec(shape: &mut Vec<usize>, n: usize, fill: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
        if n == 0 {
            out.push(StandardTableau { rows: fill.clone() });
            return;
        }
        for r in 0..shape.len() {
            let is_corner = shape[r] > 0 && (r + 1 == shape.len() || shape[r + 1] < shape[r]);
            if !is_corner {
                continue;
            }
            shape[r] -= 1;
            fill[r][shape[r]] = n;
            rec(shape, n - 1, fill, out);
            shape[r] += 1;
        }
    }
    let n: usize = shape.iter().sum();
    let mut fill: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    rec(&mut shape.to_vec(), n, &mut fill, &mut out);
    out.sort();
    out
}

/// Row-insertion Schensted correspondence `w ↦ (P, Q)`.
pub fn schensted(w: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in w.one_line().iter().enumerate() {
        let mut bump = x;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![bump]);
                q.push(vec![step + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > bump) {
                Some(c) => {
                    std::mem::swap(&mut p[r][c], &mut bump);
                    r += 1;
                }
                None => {
                    p[r].push(bump);
                    q[r].push(step + 1);
                    break;
                }
            }
        }
    }
    (StandardTableau { rows: p }, StandardTableau { rows: q })
}

#[cfg(test)]
mod tests {
    use super::super::all_permutations;
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn insertion_example() {
        let w = Permutation::parse("25714683").unwrap();
        let (p, q) = schensted(&w);
        assert_eq!(p.rows(), &[vec![1, 3, 6, 8], vec![2, 4, 7], vec![5]]);
        assert_eq!(q.rows(), &[vec![1, 2, 3, 7], vec![4, 5, 6], vec![8]]);
    }

    #[test]
    fn identity_gives_single_row() {
        let (p, q) = schensted(&Permutation::identity(5));
        assert_eq!(p.rows(), &[vec![1, 2, 3, 4, 5]]);
        assert_eq!(p, q);
    }

    #[test]
    fn bijection_and_descents_n5() {
        for n in 1..=5 {
            let mut pairs = HashSet::new();
            for w in all_permutations(n) {
                let (p, q) = schensted(&w);
                assert_eq!(p.shape(), q.shape());
                assert!(StandardTableau::new(p.rows().to_vec()).is_ok());
                assert_eq!(w.descents(), q.descents());
                assert_eq!(w.inverse_descents(), p.descents());
                assert_eq!(schensted(&w.inverse()), (q.clone(), p.clone()));
                assert!(pairs.insert((p, q)));
            }
            let total: usize = partitions(n)
                .iter()
                .map(|l| standard_tableaux(l).len().pow(2))
                .sum();
            assert_eq!(pairs.len(), total);
        }
    }

    #[test]
    fn syt_counts() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(standard_tableaux(&[2, 1]).len(), 2);
        assert_eq!(standard_tableaux(&[3, 2, 1]).len(), 16);
        let col = &standard_tableaux(&[1, 1, 1])[0];
        assert_eq!(col.descents(), vec![1, 2]);
    }
}
