//! Whitney forms, chain integration, the Whitney projection `P`, Poincaré
//! homotopies `h^i` and Dupont's homotopy `s`, plus the harness checking the
//! operator identities they satisfy on monomial generators.

use crate::forms::{monomial_generators, Form, FormError};
use crate::rational::{factorial, int, Rational};
use crate::simplicial::SimplicialMap;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DupontError {
    #[error(transparent)]
    Form(#[from] FormError),
    #[error("candidate is not a contraction: {0}")]
    NotAContraction(String),
}

/// Sorts a vertex sequence, returning the permutation parity, or `None` when
/// an entry repeats.
pub fn sort_with_parity(seq: &[usize]) -> Option<(bool, Vec<usize>)> {
    let mut v = seq.to_vec();
    let mut odd = false;
    for a in 0..v.len() {
        for b in 0..v.len().saturating_sub(a + 1) {
            if v[b] > v[b + 1] {
                v.swap(b, b + 1);
                odd = !odd;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((odd, v))
}

/// All strictly increasing sequences of length `len` in `{0,…,n}`.
pub fn increasing_sequences(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 && len <= n + 1 {
        go(0, n, len, &mut Vec::new(), &mut out);
    }
    out
}

fn check_range(n: usize, seq: &[usize]) -> Result<(), FormError> {
    if seq.is_empty() {
        return Err(FormError::EmptySequence);
    }
    match seq.iter().find(|&&i| i > n) {
        Some(&i) => Err(FormError::IndexOutOfRange { index: i, n }),
        None => Ok(()),
    }
}

/// Elementary form `ω_{i_0…i_k} = k! Σ_j (-1)^j t_{i_j} dt_{i_0}⋯(omit j)⋯dt_{i_k}`.
pub fn elementary_form(n: usize, seq: &[usize]) -> Result<Form, FormError> {
    check_range(n, seq)?;
    let k = seq.len() - 1;
    let mut out = Form::zero(n);
    for j in 0..=k {
        let mut term = Form::t(n, seq[j])?;
        for (p, &v) in seq.iter().enumerate() {
            if p != j {
                term = &term * &Form::dt(n, v)?;
            }
        }
        let sign = if j % 2 == 1 { -Rational::one() } else { Rational::one() };
        out.add_assign_scaled(&term, &sign);
    }
    Ok(out.scale(&Rational::from_integer(factorial(k as u64))))
}

/// Chain integral `I_{i_0…i_k}` over the face spanned by the sequence.
pub fn integrate_chain(seq: &[usize], f: &Form) -> Result<Rational, FormError> {
    let n = f.dim();
    check_range(n, seq)?;
    let Some((odd, sorted)) = sort_with_parity(seq) else {
        return Ok(Rational::zero());
    };
    let k = sorted.len() - 1;
    let top = f.component(k);
    if top.is_zero() {
        return Ok(Rational::zero());
    }
    let map = SimplicialMap::from_vertices(n, &sorted)?;
    let pulled = top.pullback(&map)?;
    let mut acc = Rational::zero();
    for (b, c) in pulled.terms() {
        if b.degree() != k {
            continue;
        }
        let total: u64 = b.exps.iter().map(|&a| a as u64).sum::<u64>() + k as u64;
        let mut num = num_bigint::BigInt::one();
        for &a in &b.exps {
            num *= factorial(a as u64);
        }
        acc += c * Rational::new(num, factorial(total));
    }
    Ok(if odd { -acc } else { acc })
}

/// Poincaré homotopy `h^i_n`.
pub fn poincare_h(i: usize, f: &Form) -> Result<Form, FormError> {
    f.poincare_h(i)
}

/// Whitney projection `P_n f = Σ ω_I · I_I(f)` over increasing `I`.
pub fn whitney_p(f: &Form) -> Result<Form, FormError> {
    let n = f.dim();
    let mut out = Form::zero(n);
    for k in f.degrees() {
        if k > n {
            continue;
        }
        for seq in increasing_sequences(n, k + 1) {
            let c = integrate_chain(&seq, f)?;
            if !c.is_zero() {
                out.add_assign_scaled(&elementary_form(n, &seq)?, &c);
            }
        }
    }
    Ok(out)
}

/// Dupont's homotopy `s_n = Σ_{k<n} (-1)^k Σ_{i_0<…<i_k} ω_{i_0…i_k} h^{i_k}⋯h^{i_0}`.
///
/// The alternating factor `(-1)^k` is what makes `ds + sd = Id - P` hold
/// with `h^i` normalized by `dh^i + h^i d = Id - ε^i` and `I` by the
/// factorial formula.
pub fn dupont_s(f: &Form) -> Result<Form, FormError> {
    fn extend(prefix: &mut Vec<usize>, g: &Form, n: usize, out: &mut Form) -> Result<(), FormError> {
        let omega = elementary_form(n, prefix)?;
        let sign = if prefix.len() % 2 == 0 { -Rational::one() } else { Rational::one() };
        out.add_assign_scaled(&(&omega * g), &sign);
        if prefix.len() == n {
            return Ok(());
        }
        let last = *prefix.last().expect("prefix is nonempty");
        for next in last + 1..=n {
            let h = g.poincare_h(next)?;
            if h.is_zero() {
                continue;
            }
            prefix.push(next);
            extend(prefix, &h, n, out)?;
            prefix.pop();
        }
        Ok(())
    }
    let n = f.dim();
    let mut out = Form::zero(n);
    if n == 0 {
        return Ok(out);
    }
    for i0 in 0..=n {
        let g = f.poincare_h(i0)?;
        if !g.is_zero() {
            extend(&mut vec![i0], &g, n, &mut out)?;
        }
    }
    Ok(out)
}

/// A simplicial contraction `(s, P)` of forms with `ds + sd = Id - P`.
pub trait Contraction: Sync {
    fn homotopy(&self, f: &Form) -> Result<Form, FormError>;
    fn projection(&self, f: &Form) -> Result<Form, FormError>;
}

/// Dupont's contraction `(s, P)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Dupont;

impl Contraction for Dupont {
    fn homotopy(&self, f: &Form) -> Result<Form, FormError> {
        dupont_s(f)
    }
    fn projection(&self, f: &Form) -> Result<Form, FormError> {
        whitney_p(f)
    }
}

/// Lambe–Stasheff modification `s̃ = s d s (Id - P)` of a contraction.
#[derive(Debug, Clone)]
pub struct Gaugeified<C> {
    inner: C,
}

impl<C: Contraction> Contraction for Gaugeified<C> {
    fn homotopy(&self, f: &Form) -> Result<Form, FormError> {
        let reduced = f - &self.inner.projection(f)?;
        let inner = self.inner.homotopy(&reduced)?;
        self.inner.homotopy(&inner.d())
    }
    fn projection(&self, f: &Form) -> Result<Form, FormError> {
        self.inner.projection(f)
    }
}

impl<C> Gaugeified<C> {
    pub fn inner(&self) -> &C {
        &self.inner
    }
}

/// Checks the contraction identity of `c` on generators with `n ≤ n_max`,
/// `|a| ≤ max_degree`, then wraps it.
pub fn gaugeify<C: Contraction>(c: C, n_max: usize, max_degree: u32) -> Result<Gaugeified<C>, DupontError> {
    for n in 1..=n_max {
        let check = check_contraction(&c, n, max_degree)?;
        if let Some(bad) = check.failures.first() {
            return Err(DupontError::NotAContraction(format!("n={n}: {} ↦ {}", bad.input, bad.residual)));
        }
    }
    Ok(Gaugeified { inner: c })
}

/// Failing input of an identity check, in canonical rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub input: String,
    pub residual: String,
}

/// Outcome of checking one operator identity on a finite set of inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<Counterexample>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `residual` on every generator; a nonzero result is a failure.
fn check_on<F>(name: String, inputs: &[Form], residual: F) -> Result<IdentityCheck, FormError>
where
    F: Fn(&Form) -> Result<Form, FormError> + Sync,
{
    let results: Vec<Result<Option<Counterexample>, FormError>> = inputs
        .par_iter()
        .map(|f| {
            let r = residual(f)?;
            Ok((!r.is_zero()).then(|| Counterexample { input: f.to_string(), residual: r.to_string() }))
        })
        .collect();
    let mut failures = Vec::new();
    for r in results {
        if let Some(c) = r? {
            failures.push(c);
        }
    }
    Ok(IdentityCheck { name, cases: inputs.len(), failures })
}

pub fn check_contraction<C: Contraction>(c: &C, n: usize, max_degree: u32) -> Result<IdentityCheck, FormError> {
    let gens = monomial_generators(n, max_degree);
    check_on(format!("ds+sd=Id-P (n={n})"), &gens, |f| {
        let lhs = &c.homotopy(f)?.d() + &c.homotopy(&f.d())?;
        Ok(&(&lhs - f) + &c.projection(f)?)
    })
}

pub fn check_poincare(n: usize, i: usize, max_degree: u32) -> Result<IdentityCheck, FormError> {
    let gens = monomial_generators(n, max_degree);
    check_on(format!("dh+hd=Id-ε (n={n}, i={i})"), &gens, |f| {
        let lhs = &f.poincare_h(i)?.d() + &f.d().poincare_h(i)?;
        let eps = Form::constant(n, f.evaluate_vertex(i)?);
        Ok(&(&lhs - f) + &eps)
    })
}

pub fn check_ps_zero(n: usize, max_degree: u32) -> Result<IdentityCheck, FormError> {
    let gens = monomial_generators(n, max_degree);
    check_on(format!("Ps=0 (n={n})"), &gens, |f| whitney_p(&dupont_s(f)?))
}

pub fn check_sp_zero(n: usize, max_degree: u32) -> Result<IdentityCheck, FormError> {
    let gens = monomial_generators(n, max_degree);
    check_on(format!("sP=0 (n={n})"), &gens, |f| dupont_s(&whitney_p(f)?))
}

pub fn check_s_squared<C: Contraction>(c: &C, n: usize, max_degree: u32) -> Result<IdentityCheck, FormError> {
    let gens = monomial_generators(n, max_degree);
    check_on(format!("s²=0 (n={n})"), &gens, |f| c.homotopy(&c.homotopy(f)?))
}

pub fn check_p_idempotent(n: usize, max_degree: u32) -> Result<IdentityCheck, FormError> {
    let gens = monomial_generators(n, max_degree);
    check_on(format!("P²=P (n={n})"), &gens, |f| {
        let p = whitney_p(f)?;
        Ok(&whitney_p(&p)? - &p)
    })
}

pub fn check_anticommutation(n: usize, i: usize, j: usize, max_degree: u32) -> Result<IdentityCheck, FormError> {
    let gens = monomial_generators(n, max_degree);
    check_on(format!("h^{i}h^{j}+h^{j}h^{i}=0 (n={n})"), &gens, |f| {
        Ok(&f.poincare_h(j)?.poincare_h(i)? + &f.poincare_h(i)?.poincare_h(j)?)
    })
}

/// `I_{i_0…i_k}(f) = ε^{i_k} h^{i_{k-1}}⋯h^{i_0}(f)`.
pub fn check_lemma_i(n: usize, seq: &[usize], max_degree: u32) -> Result<IdentityCheck, FormError> {
    let gens = monomial_generators(n, max_degree);
    let k = seq.len() - 1;
    check_on(format!("I=εh⋯h {seq:?} (n={n})"), &gens, |f| {
        let mut g = f.clone();
        for &i in &seq[..k] {
            g = g.poincare_h(i)?;
        }
        let rhs = g.evaluate_vertex(seq[k])?;
        Ok(Form::constant(n, integrate_chain(seq, f)? - rhs))
    })
}

/// Naturality of `s` and `P` along `g : [m] → [n]`.
pub fn check_naturality(g: &SimplicialMap, max_degree: u32) -> Result<IdentityCheck, FormError> {
    let gens = monomial_generators(g.target(), max_degree);
    check_on(format!("naturality along {:?}", g.values()), &gens, |f| {
        let s_res = &dupont_s(f)?.pullback(g)? - &dupont_s(&f.pullback(g)?)?;
        let p_res = &whitney_p(f)?.pullback(g)? - &whitney_p(&f.pullback(g)?)?;
        if s_res.is_zero() {
            Ok(p_res)
        } else {
            Ok(s_res)
        }
    })
}

/// `s̃ = s` for the gauge-modified contraction.
pub fn check_gaugeify_fixes<C: Contraction>(c: &C, n: usize, max_degree: u32) -> Result<IdentityCheck, FormError> {
    let modified = Gaugeified { inner: c };
    let gens = monomial_generators(n, max_degree);
    check_on(format!("s̃=s (n={n})"), &gens, |f| Ok(&modified.homotopy(f)? - &c.homotopy(f)?))
}

impl<C: Contraction> Contraction for &C {
    fn homotopy(&self, f: &Form) -> Result<Form, FormError> {
        (**self).homotopy(f)
    }
    fn projection(&self, f: &Form) -> Result<Form, FormError> {
        (**self).projection(f)
    }
}

/// Whitney duality `I_J(ω_I) = δ_{IJ}` on increasing sequences.
pub fn check_whitney_duality(n: usize) -> Result<IdentityCheck, FormError> {
    let mut seqs = Vec::new();
    for len in 1..=n + 1 {
        seqs.extend(increasing_sequences(n, len));
    }
    let mut failures = Vec::new();
    for a in &seqs {
        let omega = elementary_form(n, a)?;
        for b in &seqs {
            let expected = if a == b { int(1) } else { Rational::zero() };
            let got = integrate_chain(b, &omega)?;
            if got != expected {
                failures.push(Counterexample {
                    input: format!("I{b:?}(ω{a:?})"),
                    residual: crate::rational::render_rational(&(got - expected)),
                });
            }
        }
    }
    Ok(IdentityCheck { name: format!("Whitney duality (n={n})"), cases: seqs.len() * seqs.len(), failures })
}
