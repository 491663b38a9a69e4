//! Named pass/fail checks grouped into suites, shared by the command line and tests.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::characteristics::{chqt_formulas, cht_formulas, cht_n_sum, cht_of_module, hilbert_closed_form, hilbert_consistency};
use crate::combinatorics::{
    all_compositions, all_permutations, factorial, osp_all, osp_of_shape, q_factorial, q_multinomial, q_stirling,
    stirling2, Composition, OrderedSetPartition, Permutation, QTPoly,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{
    ank_index_set, classical_family, cnk_direct, demazure_family, gs_index_set, i_prime,
    quotient_rank, staircase_monomials, verify_groebner_theorem, Ideal, QuotientRing,
};
use crate::heckemod::{
    check_isomorphism, decomposition_multiplicities, label_map, module_osp, module_osp_all, module_projective,
    module_projective_pair, module_quotient, modules_n_all, projective_summands, summand_dimension, MAX_HECKE_N,
};
use crate::pointsets::{build_pointset, check_witnesses, default_alphas, phi, phi_indices, phi_inverse};
use crate::polyring::{
    complete_h, demazure_pi, demazure_pibar, demazure_word, gs_monomial, key_polynomial_with, leibniz_check,
    x_alpha_i, Monomial, Polynomial,
};

/// One named check outcome.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub check: String,
    pub params: Value,
    pub pass: bool,
    pub witness: Option<Value>,
}

impl CheckResult {
    pub fn to_json(&self) -> Value {
        let mut v = json!({"check": self.check, "params": self.params, "pass": self.pass});
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Groebner,
    Gs,
    Modules,
    Characteristics,
    Pointsets,
    Operators,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["all", "groebner", "gs", "modules", "characteristics", "pointsets", "operators"];

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "groebner" => Suite::Groebner,
            "gs" => Suite::Gs,
            "modules" => Suite::Modules,
            "characteristics" => Suite::Characteristics,
            "pointsets" => Suite::Pointsets,
            "operators" => Suite::Operators,
            _ => return Err(Error::InvalidParameters(format!("unknown suite {s}"))),
        })
    }
}

struct Ctx<'a, F: Field> {
    field: &'a F,
    n: usize,
    k: usize,
    seed: u64,
    out: Vec<CheckResult>,
}

impl<F: Field> Ctx<'_, F> {
    fn push(&mut self, check: &str, pass: bool, witness: Option<Value>) {
        let params = json!({"n": self.n, "k": self.k, "field": self.field.tag(), "seed": self.seed});
        self.out.push(CheckResult { check: check.into(), params, pass, witness });
    }
}

/// Run `suite` for `(n, k)` over `field`; results are sorted by check name.
pub fn run_suite<F: Field>(field: &F, n: usize, k: usize, suite: Suite, seed: u64) -> Result<Vec<CheckResult>> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!("need 1 ≤ k ≤ n, got n={n}, k={k}")));
    }
    let needs_ring = [Suite::Groebner, Suite::Gs, Suite::Modules, Suite::Characteristics].iter().any(|s| suite.includes(*s));
    let ring = if needs_ring { Some(QuotientRing::s_nk(field, n, k)?) } else { None };
    run_checks(field, n, k, ring.as_ref(), suite, seed)
}

/// As [`run_suite`], reusing an already computed `S_{n,k}`.
pub fn run_suite_on<F: Field>(ring: &QuotientRing<F>, k: usize, suite: Suite, seed: u64) -> Result<Vec<CheckResult>> {
    run_checks(ring.field(), ring.n(), k, Some(ring), suite, seed)
}

fn run_checks<F: Field>(
    field: &F,
    n: usize,
    k: usize,
    ring: Option<&QuotientRing<F>>,
    suite: Suite,
    seed: u64,
) -> Result<Vec<CheckResult>> {
    let mut cx = Ctx { field, n, k, seed, out: Vec::new() };
    let need = || ring.ok_or_else(|| Error::InvalidParameters("suite needs the quotient ring".into()));
    if suite.includes(Suite::Groebner) {
        groebner_checks(&mut cx, need()?)?;
    }
    if suite.includes(Suite::Gs) {
        gs_checks(&mut cx, need()?)?;
    }
    if suite.includes(Suite::Modules) {
        if n > MAX_HECKE_N {
            return Err(Error::SizeGuard(format!("module checks need n ≤ {MAX_HECKE_N}")));
        }
        module_checks(&mut cx, need()?)?;
    }
    if suite.includes(Suite::Characteristics) {
        characteristic_checks(&mut cx, need()?)?;
    }
    if suite.includes(Suite::Pointsets) {
        pointset_checks(&mut cx)?;
    }
    if suite.includes(Suite::Operators) {
        operator_checks(&mut cx)?;
    }
    let mut out = cx.out;
    out.sort_by(|a, b| a.check.cmp(&b.check));
    Ok(out)
}

fn monomial_strings(ms: &[Monomial]) -> Vec<String> {
    ms.iter().map(|m| m.to_string()).collect()
}

fn sorted(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort();
    ms
}

fn groebner_checks<F: Field>(cx: &mut Ctx<F>, ring: &QuotientRing<F>) -> Result<()> {
    let (n, k) = (cx.n, cx.k);
    let want = factorial(k) * stirling2(n, k);
    cx.push("groebner.dimension", ring.dim() as u64 == want, Some(json!({"dim": ring.dim(), "expected": want})));
    let h = ring.hilbert();
    let closed = hilbert_closed_form(n, k);
    cx.push("groebner.hilbert", h == closed, Some(json!({"hilbert": h.to_string(), "closed_form": closed.to_string()})));
    let std = sorted(ring.standard.clone());
    let nonskip = sorted(cnk_direct(n, k)?);
    let stair = sorted(staircase_monomials(n, k)?);
    let ok = std == nonskip && std == stair;
    let witness = if ok {
        json!({"count": std.len()})
    } else {
        json!({"buchberger": monomial_strings(&std), "nonskip": monomial_strings(&nonskip), "staircase": monomial_strings(&stair)})
    };
    cx.push("groebner.standard_monomials", ok, Some(witness));
    let rep = verify_groebner_theorem(ring, k);
    cx.push(
        "groebner.theorem",
        rep.pass(),
        Some(json!({
            "kappa_indices": rep.kappa_indices,
            "h_in_ideal": rep.h_in_ideal,
            "kappa_not_in_ideal": rep.kappa_not_in_ideal,
            "kappa_bad_leading": rep.kappa_bad_leading,
            "generates_initial_ideal": rep.generates_initial_ideal,
            "minimal": rep.minimal,
        })),
    );
    cx.push("groebner.s_pairs", ring.groebner.check_s_pairs() && ring.groebner.reduced, None);
    // π_i(g) ∈ J for every generator g
    let ideal = Ideal::j_nk(cx.field, n, k)?;
    let mut stable = true;
    for g in &ideal.generators {
        for i in 1..n {
            stable &= ring.groebner.contains(&demazure_pi(i, g)?)?;
        }
    }
    cx.push("groebner.hecke_stable", stable, None);
    Ok(())
}

fn gs_checks<F: Field>(cx: &mut Ctx<F>, ring: &QuotientRing<F>) -> Result<()> {
    let (n, k) = (cx.n, cx.k);
    let dim = ring.dim();
    let classical = classical_family(cx.field, n, k)?;
    let polys: Vec<Polynomial<F>> = classical.iter().map(|t| t.2.clone()).collect();
    let r = quotient_rank(ring, &polys);
    cx.push("gs.classical_basis", polys.len() == dim && r == dim, Some(json!({"size": polys.len(), "rank": r, "dim": dim})));
    let fam = demazure_family(cx.field, n, k)?;
    let polys: Vec<Polynomial<F>> = fam.iter().map(|e| e.poly.clone()).collect();
    let r = quotient_rank(ring, &polys);
    cx.push("gs.demazure_basis", polys.len() == dim && r == dim, Some(json!({"size": polys.len(), "rank": r, "dim": dim})));
    // leading term of π̄_w(x_{α,𝐢}) is gs_{w,𝐢′}, and (α,𝐢,w) ↦ (w,𝐢′) hits each GS index once
    let gs: BTreeSet<(Permutation, Vec<usize>)> = gs_index_set(n, k)?.into_iter().collect();
    let mut hit = BTreeSet::new();
    let mut bad = Vec::new();
    for e in &fam {
        let ip = i_prime(&e.w, &e.i, n, k);
        let ok_ip = ip.iter().all(|&v| v >= 0);
        let ipu: Vec<usize> = ip.iter().map(|&v| v.max(0) as usize).collect();
        let lm_ok = ok_ip && e.poly.leading_monomial() == Some(&gs_monomial(&e.w, &ipu)?);
        let des = e.w.descents();
        let high: Vec<usize> = des.iter().copied().filter(|&r| r > n - k).collect();
        let alpha_ok = e.alpha.descents() == high;
        if !(lm_ok && alpha_ok && gs.contains(&(e.w.clone(), ipu.clone())) && hit.insert((e.w.clone(), ipu))) {
            bad.push(json!({"alpha": e.alpha.parts(), "i": e.i, "w": e.w.to_compact()}));
        }
    }
    let ok = bad.is_empty() && hit.len() == gs.len();
    cx.push("gs.leading_terms", ok, (!ok).then(|| json!({"failures": bad})));
    // π̄_w(x_{α,𝐢}) = 0 when Des(w) ⊄ Des(α∪𝐢)
    let perms = all_permutations(n);
    let violations: Vec<Value> = ank_index_set(n, k)?
        .par_iter()
        .flat_map_iter(|(a, i)| {
            let upper = a.union(i).expect("valid").descents();
            let x = Polynomial::monomial(cx.field, x_alpha_i(a, i).expect("valid"));
            perms
                .iter()
                .filter(|w| !w.descents().iter().all(|d| upper.contains(d)))
                .filter(|w| !crate::polyring::demazure_pi_w(w, &x, true).expect("same n").is_zero())
                .map(|w| json!({"alpha": a.parts(), "i": i, "w": w.to_compact()}))
                .collect::<Vec<_>>()
        })
        .collect();
    cx.push("gs.descent_vanishing", violations.is_empty(), (!violations.is_empty()).then(|| json!(violations)));
    Ok(())
}

/// `P[1,3] + P[2,2] + 3*P[4]` style summary of a multiplicity map.
pub fn decomposition_string(m: &BTreeMap<Composition, u64>) -> String {
    let parts: Vec<String> = m
        .iter()
        .map(|(c, v)| {
            let p = crate::characteristics::format_key("P", c.parts());
            if *v == 1 { p } else { format!("{v}*{p}") }
        })
        .collect();
    parts.join(" + ")
}

fn mult_json(m: &BTreeMap<Composition, u64>) -> Value {
    json!(decomposition_string(m))
}

fn module_checks<F: Field>(cx: &mut Ctx<F>, ring: &QuotientRing<F>) -> Result<()> {
    let (n, k) = (cx.n, cx.k);
    let f = cx.field;
    let osp = module_osp_all(f, n, k)?;
    cx.push("modules.osp_relations", osp.check_relations(), Some(json!({"dim": osp.dim()})));
    if n >= 2 && osp.dim() > 0 {
        cx.push("modules.negative_control", !osp.corrupted(1, 0).check_relations(), None);
    }
    let top = Composition::new(vec![n])?;
    let mut failures = Vec::new();
    for a in all_compositions(n).into_iter().filter(|a| a.len() == k) {
        let m = module_osp(f, &a);
        let p = module_projective_pair(f, &top, &a)?;
        let map = label_map(&m, &p, |l| OrderedSetPartition::parse(l).expect("own label").word().to_compact())?;
        let rep = check_isomorphism(&m, &p, &map)?;
        if !(rep.ok && m.check_relations() && p.check_relations()) {
            failures.push(json!({"alpha": a.parts(), "report": rep.to_json()}));
        }
    }
    cx.push("modules.osp_shape_isomorphism", failures.is_empty(), (!failures.is_empty()).then(|| json!(failures)));
    let proj_ok = all_compositions(n).iter().all(|a| {
        module_projective(f, a).map(|m| m.check_relations() && m.dim() == crate::heckemod::descent_class_size(a)).unwrap_or(false)
    });
    cx.push("modules.projective_relations", proj_ok, None);
    let ns = modules_n_all(ring, k)?;
    let mut failures = Vec::new();
    let mut total = 0;
    for (a, i, m) in &ns {
        total += m.dim();
        let p = module_projective_pair(f, a, &a.union(i)?)?;
        let map: Vec<usize> = (0..m.dim()).collect();
        let same_labels = m.labels == p.labels;
        let rep = check_isomorphism(m, &p, &map)?;
        if !(same_labels && rep.ok && m.check_relations() && m.check_grading()) {
            failures.push(json!({"alpha": a.parts(), "i": i, "report": rep.to_json()}));
        }
    }
    cx.push("modules.n_isomorphism", failures.is_empty(), (!failures.is_empty()).then(|| json!(failures)));
    cx.push("modules.n_dimension_sum", total == ring.dim(), Some(json!({"sum": total, "dim": ring.dim()})));
    let want = decomposition_multiplicities(n, k);
    let got = projective_summands(&osp);
    let ok = got == want && summand_dimension(&got) == osp.dim() as u64;
    cx.push("modules.decomposition_osp", ok, Some(json!({"computed": mult_json(&got), "expected": mult_json(&want)})));
    let sm = module_quotient(ring)?;
    let got = projective_summands(&sm);
    let ok = sm.check_relations() && sm.check_grading() && got == want && summand_dimension(&got) == sm.dim() as u64;
    cx.push("modules.decomposition_quotient", ok, Some(json!({"computed": mult_json(&got), "expected": mult_json(&want)})));
    Ok(())
}

fn characteristic_checks<F: Field>(cx: &mut Ctx<F>, ring: &QuotientRing<F>) -> Result<()> {
    let (n, k) = (cx.n, cx.k);
    let forms = cht_formulas(n, k)?;
    cx.push("characteristics.cht_four_way", forms.all_equal(), None);
    cx.push(
        "characteristics.schur_nonnegative",
        forms.d_schur.coeffs().values().all(QTPoly::has_nonnegative_coeffs),
        Some(json!({"schur": forms.d_schur.pretty()})),
    );
    let mut deg0 = crate::characteristics::GradedQSym::zero(n);
    for (c, p) in forms.a.coeffs() {
        let mut low = QTPoly::zero();
        low.add_term(0, 0, p.coeff(0, 0));
        deg0.add_term(c.clone(), &low);
    }
    let mut want0 = crate::characteristics::GradedQSym::zero(n);
    want0.add_term(Composition::new(vec![n])?, &QTPoly::one());
    cx.push("characteristics.degree_zero", deg0 == want0, None);
    cx.push("characteristics.nsym_n_sum", cht_n_sum(n, k)? == forms.c_ribbon, None);
    let m = module_quotient(ring)?;
    let computed = cht_of_module(&m);
    let ok = matches!(&computed, Ok(c) if *c == forms.c_ribbon);
    cx.push(
        "characteristics.module_cht",
        ok,
        (!ok).then(|| json!({"computed": computed.map(|c| c.pretty("ribbon")).unwrap_or_else(|e| e.to_string())})),
    );
    if n <= crate::characteristics::MAX_CHQT_N {
        let q = chqt_formulas(n, k)?;
        cx.push("characteristics.chqt_forms", q.consistent(&forms.a), None);
    }
    let hr = hilbert_consistency(ring, k)?;
    cx.push(
        "characteristics.hilbert_consistency",
        hr.ok(),
        Some(json!({"ring": hr.from_ring.to_string(), "closed_form": hr.closed_form.to_string(), "cht": hr.from_cht.to_string()})),
    );
    // distributions of maj, maj′ and ℓ over ordered set partitions
    let mut maj = QTPoly::zero();
    let mut majp = QTPoly::zero();
    for s in osp_all(n, k) {
        maj.add_term(s.maj() as u32, 0, 1.into());
        majp.add_term(s.maj_prime() as u32, 0, 1.into());
    }
    let base = &q_factorial(k) * &q_stirling(n, k);
    let max_maj = osp_all(n, k).iter().map(|s| s.maj()).max().unwrap_or(0);
    cx.push(
        "characteristics.maj_distribution",
        maj == base.rev_q() && majp == base,
        Some(json!({"max_maj": max_maj, "k_minus_1_times_n_minus_k_plus_binom_k_2": (k - 1) * (n - k) + k * (k - 1) / 2})),
    );
    let len_ok = all_compositions(n).into_iter().filter(|a| a.len() == k).all(|a| {
        let mut l = QTPoly::zero();
        for s in osp_of_shape(&a) {
            l.add_term(s.length() as u32, 0, 1.into());
        }
        l == q_multinomial(a.parts())
    });
    cx.push("characteristics.length_distribution", len_ok, None);
    Ok(())
}

fn pointset_checks<F: Field>(cx: &mut Ctx<F>) -> Result<()> {
    let (n, k) = (cx.n, cx.k);
    let s = OrderedSetPartition::parse("78|236|14|59")?;
    cx.push("pointsets.phi_example", phi_indices(&s) == vec![3, 2, 5, 7, 4, 6, 1, 8, 12], None);
    let alphas = default_alphas(cx.field, n, k)?;
    let ps = build_pointset(cx.field, n, k, alphas)?;
    let want = factorial(k) * stirling2(n, k);
    cx.push("pointsets.cardinality", ps.len() as u64 == want, Some(json!({"points": ps.len(), "expected": want})));
    let mut images = BTreeSet::new();
    let mut ok = true;
    for s in osp_all(n, k) {
        let z = phi(&s, &ps)?;
        ok &= phi_inverse(&z, &ps)? == s;
        images.insert(ps.indices_of(&z)?);
    }
    ok &= images.len() == ps.len();
    cx.push("pointsets.phi_round_trip", ok, None);
    let fails = check_witnesses(&ps);
    cx.push(
        "pointsets.witnesses",
        fails.is_empty(),
        (!fails.is_empty()).then(|| json!(fails.iter().take(5).map(|w| w.to_json()).collect::<Vec<_>>())),
    );
    Ok(())
}

/// All monomials in `n` variables of total degree `≤ d`.
pub fn monomials_up_to(n: usize, d: usize) -> Vec<Monomial> {
    fn rec(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if cur.len() == n {
            out.push(Monomial::from_usize(cur));
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Random polynomial with up to `terms` terms of degree `≤ d`, small integer coefficients.
pub fn random_polynomial<F: Field>(field: &F, n: usize, d: usize, terms: usize, rng: &mut ChaCha8Rng) -> Polynomial<F> {
    let mut out = Vec::new();
    for _ in 0..rng.gen_range(1..=terms) {
        let mut left = rng.gen_range(0..=d);
        let mut e = vec![0usize; n];
        while left > 0 {
            e[rng.gen_range(0..n)] += 1;
            left -= 1;
        }
        out.push((Monomial::from_usize(&e), field.from_i64(rng.gen_range(-5..=5))));
    }
    Polynomial::from_terms(field, n, out)
}

/// 0-Hecke relations for `π_i` and `π̄_i` on every monomial of degree `≤ d`.
pub fn operator_relations_hold<F: Field>(field: &F, n: usize, d: usize) -> Result<bool> {
    let monos = monomials_up_to(n, d);
    let results: Vec<Result<bool>> = monos
        .par_iter()
        .map(|m| {
            let f = Polynomial::monomial(field, m.clone());
            for barred in [false, true] {
                let op = |i: usize, g: &Polynomial<F>| if barred { demazure_pibar(i, g) } else { demazure_pi(i, g) };
                for i in 1..n {
                    let once = op(i, &f)?;
                    let twice = op(i, &once)?;
                    let want = if barred { once.neg() } else { once.clone() };
                    if twice != want {
                        return Ok(false);
                    }
                    for j in i + 2..n {
                        if op(i, &op(j, &f)?)? != op(j, &op(i, &f)?)? {
                            return Ok(false);
                        }
                    }
                    if i + 1 < n {
                        let a = op(i, &op(i + 1, &op(i, &f)?)?)?;
                        let b = op(i + 1, &op(i, &op(i + 1, &f)?)?)?;
                        if a != b {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        })
        .collect();
    for r in results {
        if !r? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `π_w` agrees across all reduced words of every `w ∈ S_n`, on monomials of degree `≤ d`.
pub fn reduced_word_independent<F: Field>(field: &F, n: usize, d: usize) -> Result<bool> {
    let monos = monomials_up_to(n, d);
    for w in all_permutations(n) {
        let words = w.all_reduced_words();
        for m in &monos {
            let f = Polynomial::monomial(field, m.clone());
            for barred in [false, true] {
                let first = demazure_word(&words[0], &f, barred)?;
                for word in &words[1..] {
                    if demazure_word(word, &f, barred)? != first {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// `count` seeded instances each of the Leibniz consequence and of `π_i h_k(x_1..x_i) = h_k(x_1..x_{i+1})`.
pub fn seeded_identities<F: Field>(field: &F, n_max: usize, count: usize, seed: u64) -> Result<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut leib, mut shift) = (0, 0);
    for _ in 0..count {
        let n = rng.gen_range(2..=n_max);
        let f = random_polynomial(field, n, 3, 3, &mut rng);
        let g = random_polynomial(field, n, 3, 3, &mut rng);
        let i = rng.gen_range(1..n);
        if leibniz_check(&f, &g, i)? {
            leib += 1;
        }
        let kk = rng.gen_range(1..=4);
        let i = rng.gen_range(1..n);
        // a factor symmetric in x_i, x_{i+1} commutes with π_i
        let c = random_polynomial(field, n, 2, 2, &mut rng);
        let sym = c.add(&c.swap_vars(i));
        let lhs = demazure_pi(i, &complete_h(field, kk, i, n).mul(&sym))?;
        if lhs == complete_h(field, kk, i + 1, n).mul(&sym) {
            shift += 1;
        }
    }
    Ok((leib, shift))
}

/// `κ_γ` is the same for every order of sorting moves, for all `γ ∈ [0,d]^n` with `|γ| ≤ d`.
pub fn key_confluence<F: Field>(field: &F, n: usize, d: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    monomials_up_to(n, d).iter().all(|m| {
        let g: Vec<usize> = m.exps().iter().map(|&e| e as usize).collect();
        let first = key_polynomial_with(field, &g, |a| a[0]);
        let last = key_polynomial_with(field, &g, |a| a[a.len() - 1]);
        let random = key_polynomial_with(field, &g, |a| a[rng.gen_range(0..a.len())]);
        first == last && first == random
    })
}

fn operator_checks<F: Field>(cx: &mut Ctx<F>) -> Result<()> {
    let n = cx.n.min(5);
    let d = if n <= 5 { 6 } else { 4 };
    cx.push("operators.hecke_relations", operator_relations_hold(cx.field, n.max(2), d)?, Some(json!({"n": n.max(2), "degree": d})));
    let m = cx.n.clamp(2, 4);
    cx.push("operators.reduced_words", reduced_word_independent(cx.field, m, 3)?, Some(json!({"n": m})));
    let (l, s) = seeded_identities(cx.field, cx.n.clamp(2, 5), 500, cx.seed)?;
    cx.push("operators.leibniz", l == 500, Some(json!({"passed": l, "instances": 500})));
    cx.push("operators.shift", s == 500, Some(json!({"passed": s, "instances": 500})));
    cx.push("operators.key_confluence", key_confluence(cx.field, cx.n.clamp(2, 4), 6, cx.seed), None);
    Ok(())
}

/// Standard monomials of `S_{n,k}` over two fields coincide.
pub fn standard_monomials_agree<F: Field, G: Field>(a: &F, b: &G, n: usize, k: usize) -> Result<bool> {
    let ra = QuotientRing::s_nk(a, n, k)?;
    let rb = QuotientRing::s_nk(b, n, k)?;
    Ok(sorted(ra.standard.clone()) == sorted(rb.standard.clone()))
}
