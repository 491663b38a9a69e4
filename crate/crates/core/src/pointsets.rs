//! The point sets `Z_{n,k}`, the bijection `φ : OP_{n,k} → Z_{n,k}` and the
//! polynomials witnessing `J_{n,k} ⊆ T(Z_{n,k})`.

use crate::combinatorics::OrderedSetPartition;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyring::{complete_h, elementary_e, Polynomial};

/// `Z_{n,k}` for a fixed list of `n+k−1` distinct scalars.
///
/// Points are stored both as values and as 1-based indices into `alphas`.
#[derive(Clone, Debug)]
pub struct PointSet<F: Field> {
    pub field: F,
    pub n: usize,
    pub k: usize,
    pub alphas: Vec<F::Elem>,
    pub index_points: Vec<Vec<usize>>,
}

impl<F: Field> PointSet<F> {
    pub fn points(&self) -> Vec<Vec<F::Elem>> {
        self.index_points.iter().map(|p| self.values(p)).collect()
    }

    pub fn values(&self, idx: &[usize]) -> Vec<F::Elem> {
        idx.iter().map(|&i| self.alphas[i - 1].clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.index_points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index_points.is_empty()
    }

    /// Alpha index of each coordinate, or an error if some coordinate is not an alpha.
    pub fn indices_of(&self, point: &[F::Elem]) -> Result<Vec<usize>> {
        point
            .iter()
            .map(|z| {
                self.alphas
                    .iter()
                    .position(|a| a == z)
                    .map(|p| p + 1)
                    .ok_or_else(|| Error::NotInPointSet(format!("coordinate {} is not an alpha", self.field.format(z))))
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pts: Vec<serde_json::Value> = self
            .points()
            .iter()
            .map(|p| serde_json::json!(p.iter().map(|z| self.field.format(z)).collect::<Vec<_>>()))
            .collect();
        serde_json::json!({"n": self.n, "k": self.k, "points": pts})
    }
}

/// The default scalars `1, 2, …, n+k−1` in the given field.
pub fn default_alphas<F: Field>(field: &F, n: usize, k: usize) -> Result<Vec<F::Elem>> {
    let m = n + k - 1;
    let p = field.characteristic();
    if p != 0 && (p as usize) < m + 1 {
        return Err(Error::InvalidParameters(format!(
            "need p > n+k-1 = {m} for distinct alphas 1..{m}, got p = {p}"
        )));
    }
    Ok((1..=m as i64).map(|v| field.from_i64(v)).collect())
}

/// Enumerate `Z_{n,k}` directly from its defining conditions.
pub fn build_pointset<F: Field>(field: &F, n: usize, k: usize, alphas: Vec<F::Elem>) -> Result<PointSet<F>> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    if alphas.len() != n + k - 1 {
        return Err(Error::LengthMismatch { expected: n + k - 1, got: alphas.len() });
    }
    for i in 0..alphas.len() {
        if alphas[i + 1..].contains(&alphas[i]) {
            return Err(Error::InvalidParameters("alphas must be distinct".into()));
        }
    }
    fn rec(n: usize, k: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cur.len() + 1;
        if i > n {
            if (1..=k).all(|a| used[a]) {
                out.push(cur.clone());
            }
            return;
        }
        // remaining slots must still be able to cover the missing α_1..α_k
        let missing = (1..=k).filter(|&a| !used[a]).count();
        if missing > n - cur.len() {
            return;
        }
        for a in 1..=k + i - 1 {
            if !used[a] {
                used[a] = true;
                cur.push(a);
                rec(n, k, used, cur, out);
                cur.pop();
                used[a] = false;
            }
        }
    }
    let mut index_points = Vec::new();
    rec(n, k, &mut vec![false; n + k], &mut Vec::new(), &mut index_points);
    Ok(PointSet { field: field.clone(), n, k, alphas, index_points })
}

/// `φ(σ)` as 1-based alpha indices.
pub fn phi_indices(sigma: &OrderedSetPartition) -> Vec<usize> {
    let n = sigma.n();
    let k = sigma.num_blocks();
    let blocks = sigma.blocks();
    let mins: Vec<usize> = blocks.iter().map(|b| b[0]).collect();
    let mut z = vec![0usize; n + 1];
    for (i, &m) in mins.iter().enumerate() {
        z[m] = i + 1;
    }
    let mut pool: Vec<usize> = (k + 1..=n + k - 1).collect();
    for s in 1..=n {
        if z[s] != 0 {
            continue;
        }
        let home = sigma.block_of(s);
        let ell = (0..=home).filter(|&b| mins[b] < s).count();
        z[s] = pool.remove(ell - 1);
    }
    z[1..].to_vec()
}

pub fn phi<F: Field>(sigma: &OrderedSetPartition, ps: &PointSet<F>) -> Result<Vec<F::Elem>> {
    if sigma.n() != ps.n || sigma.num_blocks() != ps.k {
        return Err(Error::InvalidParameters(format!("{sigma} is not in OP_{{{},{}}}", ps.n, ps.k)));
    }
    Ok(ps.values(&phi_indices(sigma)))
}

/// Inverse of `φ`: coordinates equal to `α_i`, `i ≤ k`, mark `min(B_i)`; each
/// remaining coordinate's rank among the unused later alphas is `ℓ_j`, and it
/// joins the `ℓ_j`-th block (left to right) whose minimum is smaller.
pub fn phi_inverse_indices(z: &[usize], n: usize, k: usize) -> Result<OrderedSetPartition> {
    let bad = |why: &str| Error::NotInPointSet(format!("{z:?}: {why}"));
    if z.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: z.len() });
    }
    let mut mins = vec![0usize; k];
    for (j, &a) in z.iter().enumerate() {
        if a == 0 || a > n + k - 1 || a > k + j {
            return Err(bad("coordinate out of its allowed range"));
        }
        if a <= k {
            if mins[a - 1] != 0 {
                return Err(bad("repeated coordinate"));
            }
            mins[a - 1] = j + 1;
        }
    }
    if mins.iter().any(|&m| m == 0) {
        return Err(bad("some of alpha_1..alpha_k missing"));
    }
    let mut blocks: Vec<Vec<usize>> = mins.iter().map(|&m| vec![m]).collect();
    let mut pool: Vec<usize> = (k + 1..=n + k - 1).collect();
    for s in 1..=n {
        let a = z[s - 1];
        if a <= k {
            continue;
        }
        let rank = pool.iter().position(|&x| x == a).ok_or_else(|| bad("repeated coordinate"))? + 1;
        pool.remove(rank - 1);
        let eligible: Vec<usize> = (0..k).filter(|&b| mins[b] < s).collect();
        let b = *eligible.get(rank - 1).ok_or_else(|| bad("no block for this rank"))?;
        blocks[b].push(s);
    }
    OrderedSetPartition::new(blocks)
}

pub fn phi_inverse<F: Field>(point: &[F::Elem], ps: &PointSet<F>) -> Result<OrderedSetPartition> {
    let idx = ps.indices_of(point)?;
    let sigma = phi_inverse_indices(&idx, ps.n, ps.k)?;
    if phi_indices(&sigma) != idx {
        return Err(Error::NotInPointSet(format!("{idx:?} is not an image of phi")));
    }
    Ok(sigma)
}

/// `e_j` of a list of scalars, `j = 0..=len`.
pub fn scalar_elementary<F: Field>(field: &F, xs: &[F::Elem]) -> Vec<F::Elem> {
    let mut e = vec![field.one()];
    for x in xs {
        e.push(field.zero());
        for j in (1..e.len()).rev() {
            let t = field.mul(&e[j - 1], x);
            e[j] = field.add(&e[j], &t);
        }
    }
    e
}

/// `h_j` of a list of scalars, `j = 0..=d`.
pub fn scalar_complete<F: Field>(field: &F, xs: &[F::Elem], d: usize) -> Vec<F::Elem> {
    let mut h = vec![field.zero(); d + 1];
    h[0] = field.one();
    for x in xs {
        for j in 1..=d {
            let t = field.mul(&h[j - 1], x);
            h[j] = field.add(&h[j], &t);
        }
    }
    h
}

fn sign<F: Field>(field: &F, j: usize, v: &F::Elem) -> F::Elem {
    if j % 2 == 0 {
        v.clone()
    } else {
        field.neg(v)
    }
}

/// `Σ_j (−1)^j h_{k−j}(x_1..x_i) e_j(α_1..α_{k+i−1})`.
pub fn vanishing_witness_h<F: Field>(ps: &PointSet<F>, i: usize) -> Result<Polynomial<F>> {
    let (n, k, f) = (ps.n, ps.k, &ps.field);
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let e = scalar_elementary(f, &ps.alphas[..k + i - 1]);
    let mut acc = Polynomial::zero(f, n);
    for j in 0..=k {
        if let Some(ej) = e.get(j) {
            acc = acc.add(&complete_h(f, k - j, i, n).scale(&sign(f, j, ej)));
        }
    }
    Ok(acc)
}

fn witness_e_with<F: Field>(ps: &PointSet<F>, r: usize, alphas: &[F::Elem]) -> Result<Polynomial<F>> {
    let (n, k, f) = (ps.n, ps.k, &ps.field);
    if r <= n - k || r > n {
        return Err(Error::IndexOutOfRange { index: r, max: n });
    }
    let h = scalar_complete(f, alphas, r);
    let mut acc = Polynomial::zero(f, n);
    for (j, hj) in h.iter().enumerate() {
        acc = acc.add(&elementary_e(f, r - j, n).scale(&sign(f, j, hj)));
    }
    Ok(acc)
}

/// `Σ_j (−1)^j e_{r−j}(x_1..x_n) h_j(α_1..α_k)`, the coefficient of `t^r` in
/// `∏(1 + x_i t) / ∏_{i ≤ k}(1 + α_i t)`.
pub fn vanishing_witness_e<F: Field>(ps: &PointSet<F>, r: usize) -> Result<Polynomial<F>> {
    witness_e_with(ps, r, &ps.alphas[..ps.k])
}

/// The same alternating sum with `h_j` taken over all `n+k−1` alphas; kept
/// only to show that this variant does not vanish on `Z_{n,k}` in general.
pub fn vanishing_witness_e_all_alphas<F: Field>(ps: &PointSet<F>, r: usize) -> Result<Polynomial<F>> {
    witness_e_with(ps, r, &ps.alphas)
}

/// A failed vanishing check.
#[derive(Debug, Clone)]
pub struct WitnessFailure {
    pub witness: String,
    pub point: Vec<String>,
    pub value: String,
}

impl WitnessFailure {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({"witness": self.witness, "point": self.point, "value": self.value})
    }
}

/// Evaluate every witness at every point; returns the failures.
pub fn check_witnesses<F: Field>(ps: &PointSet<F>) -> Vec<WitnessFailure> {
    let mut ws: Vec<(String, Polynomial<F>)> = Vec::new();
    for i in 1..=ps.n {
        ws.push((format!("h[{i}]"), vanishing_witness_h(ps, i).expect("in range")));
    }
    for r in ps.n - ps.k + 1..=ps.n {
        ws.push((format!("e[{r}]"), vanishing_witness_e(ps, r).expect("in range")));
    }
    let mut out = Vec::new();
    for p in ps.points() {
        for (name, w) in &ws {
            let v = w.eval(&p).expect("length n");
            if !ps.field.is_zero(&v) {
                out.push(WitnessFailure {
                    witness: name.clone(),
                    point: p.iter().map(|z| ps.field.format(z)).collect(),
                    value: ps.field.format(&v),
                });
            }
        }
    }
    out
}
