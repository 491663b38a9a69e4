//! Quasisymmetric, noncommutative symmetric and Schur expansions with `(q,t)`
//! coefficients, and the closed characteristic formulas for `S_{n,k}`.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::marker::PhantomData;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use crate::combinatorics::{
    all_compositions, all_permutations, osp_all, partitions, q_binomial, q_factorial, q_stirling,
    standard_tableaux, Composition, Permutation, QTPoly,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{ank_index_set, QuotientRing};
use crate::heckemod::{projective_summands, summand_dimension, FiniteHeckeModule};

/// A basis family indexing homogeneous expansions.
pub trait Basis: Clone + Debug + PartialEq + Eq + Send + Sync {
    type Key: Ord + Clone + Debug + Send + Sync;
    const NAME: &'static str;
    fn key_json(k: &Self::Key) -> serde_json::Value;
}

/// Fundamental quasisymmetric functions `F_α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fundamental;
/// Ribbon noncommutative symmetric functions `𝐬_α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ribbon;
/// Schur functions `s_λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Schur;

impl Basis for Fundamental {
    type Key = Composition;
    const NAME: &'static str = "F";
    fn key_json(k: &Composition) -> serde_json::Value {
        json!(k.parts())
    }
}

impl Basis for Ribbon {
    type Key = Composition;
    const NAME: &'static str = "ribbon";
    fn key_json(k: &Composition) -> serde_json::Value {
        json!(k.parts())
    }
}

impl Basis for Schur {
    type Key = Vec<usize>;
    const NAME: &'static str = "s";
    fn key_json(k: &Vec<usize>) -> serde_json::Value {
        json!(k)
    }
}

/// Homogeneous degree-`n` element `Σ c_K(q,t) b_K` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion<B: Basis> {
    pub n: usize,
    coeffs: BTreeMap<B::Key, QTPoly>,
    _basis: PhantomData<B>,
}

pub type GradedQSym = Expansion<Fundamental>;
pub type GradedNSym = Expansion<Ribbon>;
pub type GradedSym = Expansion<Schur>;

impl<B: Basis> Expansion<B> {
    pub fn zero(n: usize) -> Self {
        Expansion { n, coeffs: BTreeMap::new(), _basis: PhantomData }
    }

    pub fn add_term(&mut self, key: B::Key, c: &QTPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(key.clone()).or_insert_with(QTPoly::zero);
        *slot = &*slot + c;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn coeff(&self, key: &B::Key) -> QTPoly {
        self.coeffs.get(key).cloned().unwrap_or_else(QTPoly::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<B::Key, QTPoly> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Apply `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&QTPoly) -> QTPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (k, c) in &self.coeffs {
            out.add_term(k.clone(), &f(c));
        }
        out
    }

    pub fn at_q_one(&self) -> Self {
        self.map_coeffs(QTPoly::at_q_one)
    }

    /// Sum of all coefficients, a polynomial in `q` and `t`.
    pub fn coefficient_sum(&self) -> QTPoly {
        self.coeffs.values().cloned().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "basis": B::NAME,
            "n": self.n,
            "terms": self.coeffs.iter().map(|(k, c)| json!({"index": B::key_json(k), "coeff": c.to_json()})).collect::<Vec<_>>(),
        })
    }

    fn sum_par(n: usize, parts: Vec<Self>) -> Self {
        parts.into_iter().fold(Self::zero(n), |a, b| a.add(&b))
    }
}

/// Compact label such as `F[2,1,1]`.
pub fn format_key(prefix: &str, parts: &[usize]) -> String {
    let body: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("{prefix}[{}]", body.join(","))
}

impl<B: Basis<Key = Composition>> Expansion<B> {
    pub fn pretty(&self, prefix: &str) -> String {
        pretty_terms(self.coeffs.iter().map(|(k, c)| (format_key(prefix, k.parts()), c)))
    }
}

impl GradedSym {
    pub fn pretty(&self) -> String {
        pretty_terms(self.coeffs.iter().map(|(k, c)| (format_key("s", k), c)))
    }
}

fn pretty_terms<'a>(it: impl Iterator<Item = (String, &'a QTPoly)>) -> String {
    let parts: Vec<String> = it.map(|(k, c)| format!("({c})*{k}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn fundamental_of(n: usize, set: &[usize]) -> Composition {
    Composition::from_descents(n, set).expect("descent set inside [n-1]")
}

fn des_eq(w: &Permutation, d: &[usize]) -> bool {
    w.descents() == d
}

/// `Ch(P_α) = Σ_{Des(w) = Des(α)} F_{iDes(w)}`, the ribbon Schur function `s_α`.
pub fn ribbon_to_fundamental(alpha: &Composition) -> GradedQSym {
    let n = alpha.n();
    let d = alpha.descents();
    let mut out = GradedQSym::zero(n);
    for w in all_permutations(n) {
        if des_eq(&w, &d) {
            out.add_term(fundamental_of(n, &w.inverse_descents()), &QTPoly::one());
        }
    }
    out
}

/// `s_λ = Σ_{P ∈ SYT(λ)} F_{Des(P)}`.
pub fn schur_to_fundamental(lambda: &[usize]) -> GradedQSym {
    let n = lambda.iter().sum();
    let mut out = GradedQSym::zero(n);
    for p in standard_tableaux(lambda) {
        out.add_term(fundamental_of(n, &p.descents()), &QTPoly::one());
    }
    out
}

/// Commutative image: `𝐬_α ↦ s_α` expanded in fundamentals.
pub fn ribbon_image(x: &GradedNSym) -> GradedQSym {
    let mut out = GradedQSym::zero(x.n);
    for (a, c) in x.coeffs() {
        for (f, m) in ribbon_to_fundamental(a).coeffs() {
            out.add_term(f.clone(), &(c * m));
        }
    }
    out
}

pub fn schur_image(x: &GradedSym) -> GradedQSym {
    let mut out = GradedQSym::zero(x.n);
    for (l, c) in x.coeffs() {
        for (f, m) in schur_to_fundamental(l).coeffs() {
            out.add_term(f.clone(), &(c * m));
        }
    }
    out
}

/// `𝐬_α = Σ_{β ⪯ α} (−1)^{ℓ(α)−ℓ(β)} 𝐡_β`, as a map from `β` to its integer coefficient.
pub fn ribbon_to_complete(alpha: &Composition) -> BTreeMap<Composition, i64> {
    let la = alpha.len() as i64;
    Composition::new(vec![alpha.n()])
        .expect("n ≥ 1")
        .interval(alpha)
        .into_iter()
        .map(|b| {
            let sign = if (la - b.len() as i64) % 2 == 0 { 1 } else { -1 };
            (b, sign)
        })
        .collect()
}

/// `𝐡_α = Σ_{β ⪯ α} 𝐬_β`.
pub fn complete_to_ribbon(alpha: &Composition) -> BTreeMap<Composition, i64> {
    Composition::new(vec![alpha.n()])
        .expect("n ≥ 1")
        .interval(alpha)
        .into_iter()
        .map(|b| (b, 1))
        .collect()
}

/// `[a; b]_t`.
fn t_binomial(a: i64, b: i64) -> QTPoly {
    q_binomial(a, b).swap_qt()
}

/// Largest `n` accepted by the `Ch_t` summations.
pub const MAX_CHT_N: usize = 7;
/// Largest `n` accepted by the `Ch_{q,t}` summations.
pub const MAX_CHQT_N: usize = 6;

fn guard(n: usize, k: usize, max: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!("need 1 ≤ k ≤ n, got n={n}, k={k}")));
    }
    if n > max {
        return Err(Error::SizeGuard(format!("n={n} exceeds the limit {max} for this summation")));
    }
    Ok(())
}

/// Four expressions of `Ch_t(S_{n,k})`; each `*_qsym` is expanded in fundamentals.
#[derive(Clone, Debug)]
pub struct ChtForms {
    /// `Σ_{(w,α) ∈ OP_{n,k}} t^{maj(w,α)} F_{iDes(w)}`.
    pub a: GradedQSym,
    /// `Σ_w t^{maj(w)} [n−des(w)−1; k−des(w)−1]_t F_{iDes(w)}`.
    pub b: GradedQSym,
    /// `Σ_α t^{maj(α)} [n−ℓ(α); k−ℓ(α)]_t 𝐬_α`, the noncommutative `ch_t`.
    pub c_ribbon: GradedNSym,
    pub c_qsym: GradedQSym,
    /// `Σ_{Q ∈ SYT(n)} t^{maj(Q)} [n−des(Q)−1; k−des(Q)−1]_t s_{shape(Q)}`.
    pub d_schur: GradedSym,
    pub d_qsym: GradedQSym,
}

impl ChtForms {
    pub fn all_equal(&self) -> bool {
        self.a == self.b && self.a == self.c_qsym && self.a == self.d_qsym
    }
}

pub fn cht_form_a(n: usize, k: usize) -> Result<GradedQSym> {
    Ok(chqt_form_a(n, k)?.at_q_one())
}

fn chqt_form_a(n: usize, k: usize) -> Result<GradedQSym> {
    guard(n, k, MAX_CHT_N)?;
    let parts: Vec<GradedQSym> = osp_all(n, k)
        .par_chunks(256)
        .map(|chunk| {
            let mut e = GradedQSym::zero(n);
            for s in chunk {
                let w = s.word();
                let c = QTPoly::monomial(w.inv() as u32, s.maj() as u32, 1);
                e.add_term(fundamental_of(n, &w.inverse_descents()), &c);
            }
            e
        })
        .collect();
    Ok(GradedQSym::sum_par(n, parts))
}

fn chqt_form_b(n: usize, k: usize) -> Result<GradedQSym> {
    guard(n, k, MAX_CHT_N)?;
    let mut e = GradedQSym::zero(n);
    for w in all_permutations(n) {
        let d = w.des() as i64;
        let c = t_binomial(n as i64 - d - 1, k as i64 - d - 1).shift(w.inv() as u32, w.maj() as u32);
        e.add_term(fundamental_of(n, &w.inverse_descents()), &c);
    }
    Ok(e)
}

/// `ch_t(S_{n,k}) = Σ_α t^{maj(α)} [n−ℓ(α); k−ℓ(α)]_t 𝐬_α`.
pub fn cht_ribbon(n: usize, k: usize) -> Result<GradedNSym> {
    guard(n, k, MAX_CHT_N)?;
    let mut e = GradedNSym::zero(n);
    for a in all_compositions(n) {
        let l = a.len() as i64;
        let c = t_binomial(n as i64 - l, k as i64 - l).shift(0, a.maj() as u32);
        e.add_term(a, &c);
    }
    Ok(e)
}

/// Schur expansion `Σ_Q t^{maj(Q)} [n−des(Q)−1; k−des(Q)−1]_t s_{shape(Q)}`.
pub fn cht_schur(n: usize, k: usize) -> Result<GradedSym> {
    guard(n, k, MAX_CHT_N)?;
    let mut e = GradedSym::zero(n);
    for lambda in partitions(n) {
        for q in standard_tableaux(&lambda) {
            let d = q.des() as i64;
            let c = t_binomial(n as i64 - d - 1, k as i64 - d - 1).shift(0, q.maj() as u32);
            e.add_term(lambda.clone(), &c);
        }
    }
    Ok(e)
}

pub fn cht_formulas(n: usize, k: usize) -> Result<ChtForms> {
    let a = cht_form_a(n, k)?;
    let b = chqt_form_b(n, k)?.at_q_one();
    let c_ribbon = cht_ribbon(n, k)?;
    let c_qsym = ribbon_image(&c_ribbon);
    let d_schur = cht_schur(n, k)?;
    let d_qsym = schur_image(&d_schur);
    Ok(ChtForms { a, b, c_ribbon, c_qsym, d_schur, d_qsym })
}

/// `ch_t(N_{α,𝐢}) = t^{maj(α)+|𝐢|} Σ_{α ⪯ β ⪯ α∪𝐢} 𝐬_β`.
pub fn cht_n_module(alpha: &Composition, i: &[usize]) -> Result<GradedNSym> {
    let upper = alpha.union(i)?;
    let deg = alpha.maj() + i.iter().sum::<usize>();
    let mut e = GradedNSym::zero(alpha.n());
    for b in alpha.interval(&upper) {
        e.add_term(b, &QTPoly::t_pow(deg as u32));
    }
    Ok(e)
}

/// `Σ_{(α,𝐢) ∈ A_{n,k}} ch_t(N_{α,𝐢})`.
pub fn cht_n_sum(n: usize, k: usize) -> Result<GradedNSym> {
    guard(n, k, MAX_CHT_N)?;
    let mut e = GradedNSym::zero(n);
    for (a, i) in ank_index_set(n, k)? {
        e = e.add(&cht_n_module(&a, &i)?);
    }
    Ok(e)
}

/// `Ch_{q,t}(N_{α,𝐢})` for the cyclic generator `π̄_{w_0(α)}(x_{α,𝐢})`:
/// `t^{maj(α)+|𝐢|} Σ_w q^{inv(w) − inv(w_0(α))} F_{iDes(w)}`.
pub fn chqt_n_module(alpha: &Composition, i: &[usize]) -> Result<GradedQSym> {
    let n = alpha.n();
    let upper = alpha.union(i)?;
    let (lo, hi) = (alpha.descents(), upper.descents());
    let base = Permutation::w0(alpha).inv();
    let deg = alpha.maj() + i.iter().sum::<usize>();
    let mut e = GradedQSym::zero(n);
    for w in all_permutations(n) {
        let d = w.descents();
        if lo.iter().all(|x| d.contains(x)) && d.iter().all(|x| hi.contains(x)) {
            let c = QTPoly::monomial((w.inv() - base) as u32, deg as u32, 1);
            e.add_term(fundamental_of(n, &w.inverse_descents()), &c);
        }
    }
    Ok(e)
}

/// `i′(α, β)`: `i′_j` counts elements of `Des(α) \ Des(β)` that are `≥` the `j`-th
/// smallest element of `Des(α^c)`, padded with zeros to length `n`.
pub fn reindex_sequence(alpha: &Composition, beta: &Composition) -> Vec<usize> {
    let n = alpha.n();
    let (da, db) = (alpha.descents(), beta.descents());
    let extra: Vec<usize> = da.iter().copied().filter(|d| !db.contains(d)).collect();
    let mut out: Vec<usize> = alpha
        .complement()
        .descents()
        .iter()
        .map(|&c| extra.iter().filter(|&&d| d >= c).count())
        .collect();
    out.resize(n, 0);
    out
}

/// `(γ, 𝐢)` with `Des(γ) = Des(β) \ [n−k]` and `i_j = |{r ∈ Des(β) ∩ [n−k] : r ≥ j}| + i′_j`.
pub fn reindexed_n_label(beta: &Composition, i_prime: &[usize], k: usize) -> Result<(Composition, Vec<usize>)> {
    let n = beta.n();
    let db = beta.descents();
    let low: Vec<usize> = db.iter().copied().filter(|&r| r <= n - k).collect();
    let high: Vec<usize> = db.iter().copied().filter(|&r| r > n - k).collect();
    let gamma = Composition::from_descents(n, &high)?;
    let i = (1..=n).map(|j| low.iter().filter(|&&r| r >= j).count() + i_prime[j - 1]).collect();
    Ok((gamma, i))
}

/// Expressions of `Ch_{q,t}(S_{n,k})`.
#[derive(Clone, Debug)]
pub struct ChqtForms {
    /// `Σ_{(w,α)} q^{inv(w)} t^{maj(w,α)} F_{iDes(w)}`.
    pub a: GradedQSym,
    /// `Σ_w q^{inv(w)} t^{maj(w)} [n−des(w)−1; k−des(w)−1]_t F_{iDes(w)}`.
    pub b: GradedQSym,
    /// `Σ_{A_{n,k}} Ch_{q,t}(N_{α,𝐢})`, carrying the `−inv(w_0(α))` shift.
    pub n_sum: GradedQSym,
    /// Summands `P_β` matched between `OP_{n,k}` and `S_{n,k}` through `α ↦ 𝐢′`:
    /// `Σ_β Σ_{α ⪰ β, ℓ(α)=k} t^{maj(β)+|𝐢′|} Σ_{Des(w)=Des(β)} q^{inv(w)} F_{iDes(w)}`.
    pub reindexed: GradedQSym,
    /// Every matched pair satisfied `maj(β)+|𝐢′| = maj(w,α)`, the `𝐢′` were distinct,
    /// and each `(γ,𝐢)` was a valid index with `γ ⪯ β ⪯ γ∪𝐢`.
    pub reindexing_consistent: bool,
}

impl ChqtForms {
    pub fn consistent(&self, cht_a: &GradedQSym) -> bool {
        self.a == self.b
            && self.a.at_q_one() == *cht_a
            && self.n_sum.at_q_one() == *cht_a
            && self.reindexed == self.a
            && self.reindexing_consistent
    }
}

pub fn chqt_formulas(n: usize, k: usize) -> Result<ChqtForms> {
    guard(n, k, MAX_CHQT_N)?;
    let a = chqt_form_a(n, k)?;
    let b = chqt_form_b(n, k)?;
    let mut n_sum = GradedQSym::zero(n);
    for (al, i) in ank_index_set(n, k)? {
        n_sum = n_sum.add(&chqt_n_module(&al, &i)?);
    }
    let ank: std::collections::BTreeSet<(Composition, Vec<usize>)> = ank_index_set(n, k)?.into_iter().collect();
    let mut reindexed = GradedQSym::zero(n);
    let mut ok = true;
    let perms = all_permutations(n);
    for beta in all_compositions(n) {
        let db = beta.descents();
        let class: Vec<&Permutation> = perms.iter().filter(|w| des_eq(w, &db)).collect();
        let mut seen = std::collections::BTreeSet::new();
        for alpha in all_compositions(n).into_iter().filter(|a| a.len() == k && beta.is_coarsening_of(a)) {
            let ip = reindex_sequence(&alpha, &beta);
            let shift = beta.maj() + ip.iter().sum::<usize>();
            ok &= seen.insert(ip.clone());
            let (gamma, i) = reindexed_n_label(&beta, &ip, k)?;
            ok &= ank.contains(&(gamma.clone(), i.clone()));
            ok &= gamma.is_coarsening_of(&beta) && beta.is_coarsening_of(&gamma.union(&i)?);
            ok &= gamma.maj() + i.iter().sum::<usize>() == shift;
            for w in &class {
                let sigma = crate::combinatorics::OrderedSetPartition::from_pair(w, &alpha)?;
                ok &= sigma.maj() == shift;
                let c = QTPoly::monomial(w.inv() as u32, shift as u32, 1);
                reindexed.add_term(fundamental_of(n, &w.inverse_descents()), &c);
            }
        }
    }
    Ok(ChqtForms { a, b, n_sum, reindexed, reindexing_consistent: ok })
}

/// Graded `ch_t` of a module whose homogeneous pieces are projective, read off by
/// splitting each degree into summands `P_γ` via `dim Hom(−, C_γ)`.
///
/// Fails if the detected summands do not account for the dimension of a piece.
pub fn cht_of_module<F: Field>(m: &FiniteHeckeModule<F>) -> Result<GradedNSym> {
    let degrees = m
        .degrees
        .clone()
        .ok_or_else(|| Error::InvalidParameters("module carries no grading".into()))?;
    let mut by_deg: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (j, &d) in degrees.iter().enumerate() {
        by_deg.entry(d).or_default().push(j);
    }
    let pieces: Vec<(usize, Vec<usize>)> = by_deg.into_iter().collect();
    let parts: Vec<Result<GradedNSym>> = pieces
        .par_iter()
        .map(|(d, idx)| {
            let piece = restrict(m, idx)?;
            let mult = projective_summands(&piece);
            if summand_dimension(&mult) != piece.dim() as u64 {
                return Err(Error::TheoremViolation(format!("degree {d} piece is not a sum of the detected projectives")));
            }
            let mut e = GradedNSym::zero(m.n);
            for (g, c) in mult {
                e.add_term(g, &QTPoly::monomial(0, *d as u32, BigInt::from(c)));
            }
            Ok(e)
        })
        .collect();
    let mut out = GradedNSym::zero(m.n);
    for p in parts {
        out = out.add(&p?);
    }
    Ok(out)
}

fn restrict<F: Field>(m: &FiniteHeckeModule<F>, idx: &[usize]) -> Result<FiniteHeckeModule<F>> {
    let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(a, &b)| (b, a)).collect();
    let mut gens = Vec::with_capacity(m.gens.len());
    for cols in &m.gens {
        let mut new_cols = Vec::with_capacity(idx.len());
        for &j in idx {
            let mut col = Vec::with_capacity(cols[j].len());
            for (r, c) in &cols[j] {
                let r2 = pos
                    .get(r)
                    .ok_or_else(|| Error::TheoremViolation("generator does not preserve the grading".into()))?;
                col.push((*r2, c.clone()));
            }
            new_cols.push(col);
        }
        gens.push(new_cols);
    }
    Ok(FiniteHeckeModule {
        n: m.n,
        field: m.field.clone(),
        labels: idx.iter().map(|&j| m.labels[j].clone()).collect(),
        gens,
        degrees: m.degrees.as_ref().map(|d| idx.iter().map(|&j| d[j]).collect()),
        generator_index: None,
    })
}

/// Three computations of the Hilbert series of `S_{n,k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertReport {
    pub from_ring: QTPoly,
    pub closed_form: QTPoly,
    pub from_cht: QTPoly,
}

impl HilbertReport {
    pub fn ok(&self) -> bool {
        self.from_ring == self.closed_form && self.closed_form == self.from_cht
    }
}

/// `rev_q([k]!_q · Stir_q(n,k))`.
pub fn hilbert_closed_form(n: usize, k: usize) -> QTPoly {
    (&q_factorial(k) * &q_stirling(n, k)).rev_q()
}

pub fn hilbert_consistency<F: Field>(ring: &QuotientRing<F>, k: usize) -> Result<HilbertReport> {
    let n = ring.n();
    // every F_α records one composition factor, so dimensions are coefficient sums
    let from_cht = cht_form_a(n, k)?.coefficient_sum().swap_qt();
    Ok(HilbertReport { from_ring: ring.hilbert(), closed_form: hilbert_closed_form(n, k), from_cht })
}

/// The Schur expansion of `Ch_t(S_{n,k})`, the right-hand side of its
/// coincidence with `grFrob(R_{n,k}; t)`. No `S_n`-module is built here.
pub fn grfrob_coincidence_report(n: usize, k: usize) -> Result<GradedSym> {
    guard(n, k, MAX_CHQT_N)?;
    cht_schur(n, k)
}
