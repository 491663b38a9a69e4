use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyring::{complete_h, elementary_e, Monomial, Polynomial};

/// A polynomial ideal given by generators.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    pub n: usize,
    pub field: F,
    pub generators: Vec<Polynomial<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(field: &F, n: usize, generators: Vec<Polynomial<F>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidParameters("ideal needs at least one generator".into()));
        }
        for g in &generators {
            if g.is_zero() {
                return Err(Error::InvalidParameters("zero generator".into()));
            }
            if g.n() != n {
                return Err(Error::LengthMismatch { expected: n, got: g.n() });
            }
        }
        Ok(Ideal { n, field: field.clone(), generators })
    }

    /// `J_{n,k} = ⟨h_k(x_1), …, h_k(x_1..x_n), e_n, e_{n−1}, …, e_{n−k+1}⟩`.
    pub fn j_nk(field: &F, n: usize, k: usize) -> Result<Self> {
        check_nk(n, k)?;
        let mut gens: Vec<Polynomial<F>> = (1..=n).map(|i| complete_h(field, k, i, n)).collect();
        for d in (n + 1 - k..=n).rev() {
            gens.push(elementary_e(field, d, n));
        }
        Self::new(field, n, gens)
    }

    /// The classical coinvariant ideal `I_n = ⟨e_1, …, e_n⟩`.
    pub fn coinvariant(field: &F, n: usize) -> Result<Self> {
        Self::new(field, n, (1..=n).map(|d| elementary_e(field, d, n)).collect())
    }

    /// `I_{n,k} = ⟨x_1^k, …, x_n^k, e_n, …, e_{n−k+1}⟩`.
    pub fn i_nk(field: &F, n: usize, k: usize) -> Result<Self> {
        check_nk(n, k)?;
        let mut gens: Vec<Polynomial<F>> = (1..=n)
            .map(|i| {
                let mut m = Monomial::one(n);
                m.set_exp(i, k as u16);
                Polynomial::monomial(field, m)
            })
            .collect();
        for d in (n + 1 - k..=n).rev() {
            gens.push(elementary_e(field, d, n));
        }
        Self::new(field, n, gens)
    }
}

pub(crate) fn check_nk(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// A Gröbner basis under neglex: monic elements sorted by leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    pub n: usize,
    pub field: F,
    pub elements: Vec<Polynomial<F>>,
    pub minimal: bool,
    pub reduced: bool,
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.elements == other.elements
    }
}

impl<F: Field> GroebnerBasis<F> {
    /// Wrap a list that is already known to be a reduced basis (monic, sorted).
    pub(crate) fn from_reduced(field: &F, n: usize, mut elements: Vec<Polynomial<F>>) -> Self {
        elements.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
        GroebnerBasis { n, field: field.clone(), elements, minimal: true, reduced: true }
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().expect("nonzero").clone()).collect()
    }

    /// Remainder of `f` on division by the basis, always dividing by the
    /// element with the neglex-smallest leading monomial among divisors.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        if f.n() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: f.n() });
        }
        Ok(reduce_full(f, &self.elements))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `m` is standard iff no leading monomial divides it.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.elements.iter().any(|g| g.leading_monomial().expect("nonzero").divides(m))
    }

    /// Direct check that every S-polynomial reduces to zero.
    pub fn check_s_pairs(&self) -> bool {
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let s = s_polynomial(&self.elements[i], &self.elements[j]);
                if !reduce_full(&s, &self.elements).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.elements.iter().map(|g| g.to_json()).collect())
    }
}

/// Index of the divisor with the neglex-smallest leading monomial; `basis` is
/// sorted ascending by leading monomial, so this is the first hit.
fn first_divisor<F: Field>(basis: &[Polynomial<F>], m: &Monomial) -> Option<usize> {
    basis.iter().position(|g| g.leading_monomial().expect("nonzero").divides(m))
}

/// Full reduction; `basis` must be monic and sorted by leading monomial.
pub(crate) fn reduce_full<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    let field = f.field().clone();
    let mut p = f.clone();
    let mut rem_desc: Vec<(Monomial, F::Elem)> = Vec::new();
    while let Some((m, c)) = p.leading_term().cloned() {
        match first_divisor(basis, &m) {
            Some(idx) => {
                let g = &basis[idx];
                let q = g.leading_monomial().expect("nonzero").quotient_of(&m);
                p = p.sub_mul_term(&q, &c, g);
            }
            None => {
                p.pop_leading();
                rem_desc.push((m, c));
            }
        }
    }
    rem_desc.reverse();
    Polynomial::from_sorted_unchecked(&field, f.n(), rem_desc)
}

/// Reduce only until the leading monomial is irreducible.
fn reduce_top<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>], active: &[usize]) -> Polynomial<F> {
    let mut p = f.clone();
    while let Some((m, c)) = p.leading_term().cloned() {
        let div = active
            .iter()
            .filter(|&&i| basis[i].leading_monomial().expect("nonzero").divides(&m))
            .min_by(|&&a, &&b| basis[a].leading_monomial().cmp(&basis[b].leading_monomial()));
        match div {
            Some(&i) => {
                let g = &basis[i];
                let q = g.leading_monomial().expect("nonzero").quotient_of(&m);
                p = p.sub_mul_term(&q, &c, g);
            }
            None => break,
        }
    }
    p
}

pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let field = f.field();
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mf.lcm(mg);
    let a = f.mul_term(&mf.quotient_of(&l), &field.inv(cf).expect("nonzero"));
    let b = g.mul_term(&mg.quotient_of(&l), &field.inv(cg).expect("nonzero"));
    a.sub(&b)
}

type PairKey = (usize, Monomial, usize, usize);

struct State<F: Field> {
    basis: Vec<Polynomial<F>>,
    active: Vec<usize>,
    pairs: BTreeSet<PairKey>,
}

impl<F: Field> State<F> {
    fn lm(&self, i: usize) -> &Monomial {
        self.basis[i].leading_monomial().expect("nonzero")
    }

    fn key(&self, i: usize, j: usize) -> PairKey {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let l = self.lm(a).lcm(self.lm(b));
        (l.degree(), l, a, b)
    }

    /// Gebauer–Möller update for a new basis element `h`.
    fn update(&mut self, h: usize) {
        let lh = self.lm(h).clone();
        let mut c: Vec<usize> = self.active.clone();
        let mut d: Vec<usize> = Vec::new();
        while let Some(g1) = (!c.is_empty()).then(|| c.remove(0)) {
            let l1 = lh.lcm(self.lm(g1));
            let coprime = lh.is_coprime(self.lm(g1));
            let dominated = |g2: &usize| lh.lcm(self.lm(*g2)).divides(&l1);
            if coprime || (!c.iter().any(dominated) && !d.iter().any(dominated)) {
                d.push(g1);
            }
        }
        let e: Vec<usize> = d.into_iter().filter(|&g| !lh.is_coprime(self.lm(g))).collect();
        let old: Vec<PairKey> = self.pairs.iter().cloned().collect();
        for key in old {
            let (_, ref l, a, b) = key;
            if lh.divides(l) && &lh.lcm(self.lm(a)) != l && &lh.lcm(self.lm(b)) != l {
                self.pairs.remove(&key);
            }
        }
        for g in e {
            let k = self.key(g, h);
            self.pairs.insert(k);
        }
        let basis = &self.basis;
        self.active.retain(|&g| !lh.divides(basis[g].leading_monomial().expect("nonzero")));
        self.active.push(h);
    }

    fn add(&mut self, p: Polynomial<F>) {
        let h = self.basis.len();
        self.basis.push(p.monic());
        self.update(h);
    }
}

/// Reduced Gröbner basis of `ideal` under neglex.
///
/// Pairs are processed by the normal strategy (smallest lcm degree, then the
/// neglex-smallest lcm, then indices), pruned with the Gebauer–Möller criteria.
pub fn buchberger<F: Field>(ideal: &Ideal<F>) -> GroebnerBasis<F> {
    let mut st = State { basis: Vec::new(), active: Vec::new(), pairs: BTreeSet::new() };
    for g in &ideal.generators {
        let r = reduce_top(g, &st.basis, &st.active);
        if !r.is_zero() {
            st.add(r);
        }
    }
    while let Some(key) = st.pairs.iter().next().cloned() {
        st.pairs.remove(&key);
        let (_, _, a, b) = key;
        let s = s_polynomial(&st.basis[a], &st.basis[b]);
        let r = reduce_top(&s, &st.basis, &st.active);
        if !r.is_zero() {
            st.add(r);
        }
    }
    interreduce(&ideal.field, ideal.n, st.active.iter().map(|&i| st.basis[i].clone()).collect())
}

/// Turn a Gröbner basis into the reduced one.
pub fn interreduce<F: Field>(field: &F, n: usize, elems: Vec<Polynomial<F>>) -> GroebnerBasis<F> {
    let mut elems: Vec<Polynomial<F>> = elems.into_iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    elems.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    // minimal: drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for g in elems {
        let lm = g.leading_monomial().expect("nonzero").clone();
        if minimal.iter().any(|h| h.leading_monomial().expect("nonzero").divides(&lm)) {
            continue;
        }
        minimal.push(g);
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let (lm, lc) = minimal[i].leading_term().cloned().expect("nonzero");
        let mut tail = minimal[i].clone();
        tail.pop_leading();
        let others: Vec<Polynomial<F>> =
            minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let tail = reduce_full(&tail, &others);
        reduced.push(Polynomial::term(field, lm, lc).add(&tail));
    }
    GroebnerBasis::from_reduced(field, n, reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn maximal_ideal() {
        let q = Rationals;
        let n = 4;
        let gens: Vec<_> = (1..=n).map(|i| Polynomial::var(&q, i, n)).collect();
        let gb = buchberger(&Ideal::new(&q, n, gens).unwrap());
        assert_eq!(gb.elements.len(), 4);
        assert!(gb.elements.iter().all(|g| g.len() == 1));
        let j = buchberger(&Ideal::j_nk(&q, n, 1).unwrap());
        assert_eq!(j, gb);
    }

    #[test]
    fn j42_basis_is_groebner() {
        let q = Rationals;
        let gb = buchberger(&Ideal::j_nk(&q, 4, 2).unwrap());
        assert!(gb.check_s_pairs());
        let e4 = elementary_e(&q, 4, 4);
        assert!(gb.normal_form(&e4).unwrap().is_zero());
    }

    #[test]
    fn reduced_basis_field_independent_shape() {
        let q = Rationals;
        let p = PrimeField::new(7).unwrap();
        let a = buchberger(&Ideal::j_nk(&q, 4, 3).unwrap());
        let b = buchberger(&Ideal::j_nk(&p, 4, 3).unwrap());
        let a_mod: Vec<_> = a.elements.iter().map(|g| g.to_field(&p).unwrap()).collect();
        assert_eq!(a_mod, b.elements);
    }

    #[test]
    fn rejects_bad_ideals() {
        let q = Rationals;
        assert!(Ideal::<Rationals>::new(&q, 2, vec![]).is_err());
        assert!(Ideal::new(&q, 2, vec![Polynomial::zero(&q, 2)]).is_err());
        assert!(Ideal::j_nk(&q, 3, 4).is_err());
    }
}
