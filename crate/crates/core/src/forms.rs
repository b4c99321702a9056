//! Polynomial differential forms on the standard `n`-simplex.
//!
//! A [`Form`] is stored in reduced coordinates: the barycentric generators
//! `t_0` and `dt_0` are eliminated through `t_0 = 1 - Σ t_i` and
//! `dt_0 = -Σ dt_i`, so every term is `c · t_1^{a_1}⋯t_n^{a_n} dt_S` with
//! `S ⊆ {1,…,n}` strictly increasing.

use crate::rational::{binomial, int, Canonical, Rational};
use crate::simplicial::{MapError, SimplicialMap};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("index {index} out of range for the {n}-simplex")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("forms live on simplices of different dimension ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },
    #[error("malformed simplicial map: {0}")]
    Map(#[from] MapError),
    #[error("empty vertex sequence")]
    EmptySequence,
    #[error("homotopy integrand not divisible by u (residual {0})")]
    NonzeroRemainder(String),
    #[error("cannot parse form: {0}")]
    Parse(String),
}

/// Basis element `t^a dt_S`; the derived order is the canonical term order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Basis {
    /// Strictly increasing indices in `1..=n`.
    pub ext: Vec<usize>,
    /// Exponents of `t_1,…,t_n`.
    pub exps: Vec<u32>,
}

impl Basis {
    pub fn degree(&self) -> usize {
        self.ext.len()
    }

    pub fn poly_degree(&self) -> u32 {
        self.exps.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Form {
    n: usize,
    terms: BTreeMap<Basis, Rational>,
}

/// Sign and merged list for `dt_S ∧ dt_T`, or `None` when they share an index.
fn merge_ext(s: &[usize], t: &[usize]) -> Option<(bool, Vec<usize>)> {
    let mut out = Vec::with_capacity(s.len() + t.len());
    let (mut i, mut j) = (0, 0);
    let mut odd = false;
    while i < s.len() && j < t.len() {
        if s[i] == t[j] {
            return None;
        }
        if s[i] < t[j] {
            out.push(s[i]);
            i += 1;
        } else {
            // t[j] jumps over the remaining entries of s
            if (s.len() - i) % 2 == 1 {
                odd = !odd;
            }
            out.push(t[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&s[i..]);
    out.extend_from_slice(&t[j..]);
    Some((odd, out))
}

impl Form {
    pub fn zero(n: usize) -> Self {
        Form { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut f = Form::zero(n);
        f.add_term(Basis { ext: vec![], exps: vec![0; n] }, c);
        f
    }

    pub fn one(n: usize) -> Self {
        Form::constant(n, Rational::one())
    }

    /// The monomial `c · t^exps dt_ext` in reduced coordinates.
    pub fn monomial(n: usize, exps: &[u32], ext: &[usize], c: Rational) -> Result<Self, FormError> {
        if exps.len() != n {
            return Err(FormError::DimensionMismatch { left: n, right: exps.len() });
        }
        for &e in ext {
            if e == 0 || e > n {
                return Err(FormError::IndexOutOfRange { index: e, n });
            }
        }
        let mut sorted = ext.to_vec();
        let mut odd = false;
        for a in 0..sorted.len() {
            for b in 0..sorted.len() - 1 - a {
                if sorted[b] > sorted[b + 1] {
                    sorted.swap(b, b + 1);
                    odd = !odd;
                }
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Ok(Form::zero(n));
        }
        let mut f = Form::zero(n);
        f.add_term(Basis { ext: sorted, exps: exps.to_vec() }, if odd { -c } else { c });
        Ok(f)
    }

    /// Barycentric coordinate `t_i`, `0 ≤ i ≤ n`, reduced.
    pub fn t(n: usize, i: usize) -> Result<Self, FormError> {
        if i > n {
            return Err(FormError::IndexOutOfRange { index: i, n });
        }
        let mut f = Form::zero(n);
        if i == 0 {
            f.add_term(Basis { ext: vec![], exps: vec![0; n] }, Rational::one());
            for j in 1..=n {
                let mut exps = vec![0; n];
                exps[j - 1] = 1;
                f.add_term(Basis { ext: vec![], exps }, -Rational::one());
            }
        } else {
            let mut exps = vec![0; n];
            exps[i - 1] = 1;
            f.add_term(Basis { ext: vec![], exps }, Rational::one());
        }
        Ok(f)
    }

    /// Differential `dt_i`, `0 ≤ i ≤ n`, reduced.
    pub fn dt(n: usize, i: usize) -> Result<Self, FormError> {
        if i > n {
            return Err(FormError::IndexOutOfRange { index: i, n });
        }
        let mut f = Form::zero(n);
        if i == 0 {
            for j in 1..=n {
                f.add_term(Basis { ext: vec![j], exps: vec![0; n] }, -Rational::one());
            }
        } else {
            f.add_term(Basis { ext: vec![i], exps: vec![0; n] }, Rational::one());
        }
        Ok(f)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Basis, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, basis: &Basis) -> Rational {
        self.terms.get(basis).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, basis: Basis, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(basis) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Basis, Rational)>) -> Self {
        let mut f = Form::zero(n);
        for (b, c) in terms {
            f.add_term(b, c);
        }
        f
    }

    /// Exterior degrees present.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Basis::degree).collect()
    }

    /// Largest polynomial degree of a term (0 for the zero form).
    pub fn poly_degree(&self) -> u32 {
        self.terms.keys().map(Basis::poly_degree).max().unwrap_or(0)
    }

    /// The exterior-degree-`k` component.
    pub fn component(&self, k: usize) -> Form {
        Form {
            n: self.n,
            terms: self.terms.iter().filter(|(b, _)| b.degree() == k).map(|(b, c)| (b.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Form {
        if c.is_zero() {
            return Form::zero(self.n);
        }
        Form { n: self.n, terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect() }
    }

    pub fn add_assign_scaled(&mut self, other: &Form, c: &Rational) {
        debug_assert_eq!(self.n, other.n);
        if c.is_zero() {
            return;
        }
        for (b, x) in &other.terms {
            self.add_term(b.clone(), x * c);
        }
    }

    fn check_dim(&self, other: &Form) -> Result<(), FormError> {
        if self.n != other.n {
            return Err(FormError::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    /// Graded-commutative product.
    pub fn wedge(&self, other: &Form) -> Result<Form, FormError> {
        self.check_dim(other)?;
        Ok(self.wedge_unchecked(other))
    }

    fn wedge_unchecked(&self, other: &Form) -> Form {
        let mut out = Form::zero(self.n);
        for (b1, c1) in &self.terms {
            for (b2, c2) in &other.terms {
                if let Some((odd, ext)) = merge_ext(&b1.ext, &b2.ext) {
                    let exps = b1.exps.iter().zip(&b2.exps).map(|(x, y)| x + y).collect();
                    let c = c1 * c2;
                    out.add_term(Basis { ext, exps }, if odd { -c } else { c });
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Form {
        let mut acc = Form::one(self.n);
        for _ in 0..k {
            acc = acc.wedge_unchecked(self);
        }
        acc
    }

    /// Exterior derivative.
    pub fn d(&self) -> Form {
        let mut out = Form::zero(self.n);
        for (b, c) in &self.terms {
            for j in 1..=self.n {
                let a = b.exps[j - 1];
                if a == 0 || b.ext.contains(&j) {
                    continue;
                }
                let below = b.ext.iter().filter(|&&s| s < j).count();
                let mut exps = b.exps.clone();
                exps[j - 1] -= 1;
                let mut ext = b.ext.clone();
                ext.insert(below, j);
                let coeff = c * int(a as i64);
                out.add_term(Basis { ext, exps }, if below % 2 == 1 { -coeff } else { coeff });
            }
        }
        out
    }

    /// Substitutes `t_j ↦ t_img[j-1]`, `dt_j ↦ dt_img[j-1]` (all forms over `target`).
    pub fn substitute(&self, target: usize, t_img: &[Form], dt_img: &[Form]) -> Form {
        let mut powers: HashMap<(usize, u32), Form> = HashMap::new();
        let mut out = Form::zero(target);
        for (b, c) in &self.terms {
            let mut acc = Form::constant(target, c.clone());
            for (j, &a) in b.exps.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let p = powers.entry((j, a)).or_insert_with(|| t_img[j].pow(a));
                acc = acc.wedge_unchecked(p);
                if acc.is_zero() {
                    break;
                }
            }
            for &s in &b.ext {
                if acc.is_zero() {
                    break;
                }
                acc = acc.wedge_unchecked(&dt_img[s - 1]);
            }
            out.add_assign_scaled(&acc, &Rational::one());
        }
        out
    }

    /// Pullback along `f : [m] → [n]`, using `f^* t_i = Σ_{f(j)=i} t_j`.
    pub fn pullback(&self, f: &SimplicialMap) -> Result<Form, FormError> {
        if f.target() != self.n {
            return Err(FormError::DimensionMismatch { left: self.n, right: f.target() });
        }
        let m = f.source();
        let mut t_img = Vec::with_capacity(self.n);
        let mut dt_img = Vec::with_capacity(self.n);
        for i in 1..=self.n {
            let mut t = Form::zero(m);
            let mut dt = Form::zero(m);
            for j in 0..=m {
                if f.apply(j) == i {
                    t.add_assign_scaled(&Form::t(m, j)?, &Rational::one());
                    dt.add_assign_scaled(&Form::dt(m, j)?, &Rational::one());
                }
            }
            t_img.push(t);
            dt_img.push(dt);
        }
        Ok(self.substitute(m, &t_img, &dt_img))
    }

    /// Evaluation at vertex `e_i`; positive exterior degree is killed.
    pub fn evaluate_vertex(&self, i: usize) -> Result<Rational, FormError> {
        if i > self.n {
            return Err(FormError::IndexOutOfRange { index: i, n: self.n });
        }
        let mut acc = Rational::zero();
        for (b, c) in &self.terms {
            if !b.ext.is_empty() {
                continue;
            }
            let hits = b.exps.iter().enumerate().all(|(j, &a)| a == 0 || j + 1 == i);
            if hits {
                acc += c;
            }
        }
        Ok(acc)
    }

    /// Interior product with `E_i = Σ_j (t_j - δ_ij) ∂_j`.
    pub fn contract_euler(&self, i: usize) -> Result<Form, FormError> {
        if i > self.n {
            return Err(FormError::IndexOutOfRange { index: i, n: self.n });
        }
        let mut out = Form::zero(self.n);
        for (b, c) in &self.terms {
            for (p, &s) in b.ext.iter().enumerate() {
                let mut ext = b.ext.clone();
                ext.remove(p);
                let coeff = if p % 2 == 1 { -c.clone() } else { c.clone() };
                let mut exps = b.exps.clone();
                exps[s - 1] += 1;
                out.add_term(Basis { ext: ext.clone(), exps }, coeff.clone());
                if s == i {
                    out.add_term(Basis { ext, exps: b.exps.clone() }, -coeff);
                }
            }
        }
        Ok(out)
    }

    /// Poincaré homotopy `h^i` contracting towards vertex `e_i`.
    ///
    /// Computed as `∫_0^1 u^{-1} φ_i(u)^*(ι_i f) du` with
    /// `φ_i(u) : t ↦ u t + (1-u) e_i`.
    pub fn poincare_h(&self, i: usize) -> Result<Form, FormError> {
        let iota = self.contract_euler(i)?;
        let n = self.n;
        let mut out = Form::zero(n);
        let mut residual = Rational::zero();
        for (b, c) in &iota.terms {
            // u-power contributed by the variables that scale homogeneously
            let a_i = if i == 0 { 0 } else { b.exps[i - 1] };
            let q = b.poly_degree() - a_i + b.degree() as u32;
            let mut rest = b.exps.clone();
            if i > 0 {
                rest[i - 1] = 0;
            }
            // (u t_i + 1 - u)^{a_i} = Σ_m C(a_i,m) (-u)^m (1 - t_i)^m
            for m in 0..=a_i {
                let coeff = c * Rational::from_integer(binomial(a_i as u64, m as u64));
                let coeff = if m % 2 == 1 { -coeff } else { coeff };
                let power = q + m;
                if power == 0 {
                    residual += &coeff;
                    continue;
                }
                let coeff = coeff / int(power as i64);
                for r in 0..=m {
                    let cr = &coeff * Rational::from_integer(binomial(m as u64, r as u64));
                    let cr = if r % 2 == 1 { -cr } else { cr };
                    let mut exps = rest.clone();
                    if i > 0 {
                        exps[i - 1] += r;
                    }
                    out.add_term(Basis { ext: b.ext.clone(), exps }, cr);
                }
            }
        }
        if !residual.is_zero() {
            return Err(FormError::NonzeroRemainder(Canonical(&residual).to_string()));
        }
        Ok(out)
    }
}

impl std::ops::Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        assert_eq!(self.n, rhs.n, "adding forms on different simplices");
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &Rational::one());
        out
    }
}

impl std::ops::Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        assert_eq!(self.n, rhs.n, "subtracting forms on different simplices");
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &-Rational::one());
        out
    }
}

impl std::ops::Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.scale(&-Rational::one())
    }
}

impl std::ops::Mul for &Form {
    type Output = Form;
    /// Wedge product; panics on a dimension mismatch (use [`Form::wedge`] to recover).
    fn mul(self, rhs: &Form) -> Form {
        assert_eq!(self.n, rhs.n, "multiplying forms on different simplices");
        self.wedge_unchecked(rhs)
    }
}

fn render_basis(b: &Basis) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (j, &a) in b.exps.iter().enumerate() {
        match a {
            0 => {}
            1 => parts.push(format!("t{}", j + 1)),
            _ => parts.push(format!("t{}^{}", j + 1, a)),
        }
    }
    if !b.ext.is_empty() {
        parts.push(b.ext.iter().map(|s| format!("dt{s}")).collect::<Vec<_>>().join("^"));
    }
    parts.join("*")
}

impl fmt::Display for Form {
    /// Canonical rendering, e.g. `1/2*t1^2*dt1^dt2 - t2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (b, c)) in self.terms.iter().enumerate() {
            let negative = c < &Rational::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if idx == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let body = render_basis(b);
            if body.is_empty() {
                write!(f, "{}", Canonical(&mag))?;
            } else if mag.is_one() {
                f.write_str(&body)?;
            } else {
                write!(f, "{}*{}", Canonical(&mag), body)?;
            }
        }
        Ok(())
    }
}

/// Parses the canonical rendering (and mild variations: spacing, any term
/// order, `t0`/`dt0`, repeated or unsorted factors) into a reduced form on
/// the `n`-simplex.
pub fn parse_form(n: usize, text: &str) -> Result<Form, FormError> {
    let err = |m: &str| FormError::Parse(format!("{m} in {text:?}"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err("empty input"));
    }
    let mut chunks: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for (pos, ch) in s.chars().enumerate() {
        let after_caret = current.ends_with('^') || current.ends_with('*') || current.ends_with('/');
        if (ch == '+' || ch == '-') && !after_caret {
            if pos != 0 {
                if current.is_empty() {
                    return Err(err("dangling sign"));
                }
                chunks.push((negative, std::mem::take(&mut current)));
            } else if !current.is_empty() {
                return Err(err("unexpected sign"));
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(err("dangling sign"));
    }
    chunks.push((negative, current));

    let mut out = Form::zero(n);
    for (negative, chunk) in chunks {
        let mut acc = Form::one(n);
        for factor in chunk.split('*') {
            if factor.is_empty() {
                return Err(err("empty factor"));
            }
            if factor.starts_with("dt") {
                for word in factor.split('^') {
                    let idx: usize = word
                        .strip_prefix("dt")
                        .ok_or_else(|| err("malformed differential"))?
                        .parse()
                        .map_err(|_| err("malformed differential index"))?;
                    acc = &acc * &Form::dt(n, idx)?;
                }
            } else if let Some(rest) = factor.strip_prefix('t') {
                let (idx, exp) = match rest.split_once('^') {
                    Some((i, e)) => (i, e.parse::<u32>().map_err(|_| err("malformed exponent"))?),
                    None => (rest, 1),
                };
                let idx: usize = idx.parse().map_err(|_| err("malformed variable index"))?;
                acc = &acc * &Form::t(n, idx)?.pow(exp);
            } else {
                let c = crate::rational::parse_rational(factor).map_err(|_| err("malformed coefficient"))?;
                acc = acc.scale(&c);
            }
        }
        out.add_assign_scaled(&acc, &if negative { -Rational::one() } else { Rational::one() });
    }
    Ok(out)
}

/// One term of an unreduced barycentric expression
/// `c · t_0^{a_0}⋯t_n^{a_n} · dt_{w_1}∧⋯∧dt_{w_r}` (word in any order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarycentricTerm {
    pub coeff: Rational,
    pub t_exps: Vec<u32>,
    pub dt_word: Vec<usize>,
}

/// Reduces a formal barycentric expression to normal form.
pub fn reduce_barycentric(n: usize, terms: &[BarycentricTerm]) -> Result<Form, FormError> {
    let ts: Vec<Form> = (0..=n).map(|i| Form::t(n, i)).collect::<Result<_, _>>()?;
    let dts: Vec<Form> = (0..=n).map(|i| Form::dt(n, i)).collect::<Result<_, _>>()?;
    let mut out = Form::zero(n);
    for term in terms {
        if term.t_exps.len() != n + 1 {
            return Err(FormError::DimensionMismatch { left: n + 1, right: term.t_exps.len() });
        }
        let mut acc = Form::constant(n, term.coeff.clone());
        for (i, &a) in term.t_exps.iter().enumerate() {
            if a > 0 {
                acc = &acc * &ts[i].pow(a);
            }
        }
        for &w in &term.dt_word {
            if w > n {
                return Err(FormError::IndexOutOfRange { index: w, n });
            }
            acc = &acc * &dts[w];
        }
        out.add_assign_scaled(&acc, &Rational::one());
    }
    Ok(out)
}

/// Generator set `{t^a dt_S : |a| ≤ max_degree, S ⊆ {1..n}}` used to check
/// linear operator identities.
pub fn monomial_generators(n: usize, max_degree: u32) -> Vec<Form> {
    let mut exps_list: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for e in &exps_list {
            let used: u32 = e.iter().sum();
            for a in 0..=(max_degree - used) {
                let mut v = e.clone();
                v.push(a);
                next.push(v);
            }
        }
        exps_list = next;
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let ext: Vec<usize> = (1..=n).filter(|j| mask & (1 << (j - 1)) != 0).collect();
        for exps in &exps_list {
            out.push(Form::from_terms(n, [(Basis { ext: ext.clone(), exps: exps.clone() }, Rational::one())]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn f(n: usize, s: &str) -> Form {
        parse_form(n, s).unwrap()
    }

    #[test]
    fn barycentric_reduction_examples() {
        let t0 = BarycentricTerm { coeff: int(1), t_exps: vec![1, 0], dt_word: vec![] };
        assert_eq!(reduce_barycentric(1, &[t0]).unwrap(), f(1, "1 - t1"));
        let dt0 = BarycentricTerm { coeff: int(1), t_exps: vec![0, 0], dt_word: vec![0] };
        assert_eq!(reduce_barycentric(1, &[dt0]).unwrap(), f(1, "-dt1"));
        let omega = [
            BarycentricTerm { coeff: int(1), t_exps: vec![1, 0], dt_word: vec![1] },
            BarycentricTerm { coeff: int(-1), t_exps: vec![0, 1], dt_word: vec![0] },
        ];
        assert_eq!(reduce_barycentric(1, &omega).unwrap(), f(1, "dt1"));
        let bad = BarycentricTerm { coeff: int(1), t_exps: vec![0, 0], dt_word: vec![2] };
        assert!(reduce_barycentric(1, &[bad]).is_err());
    }

    #[test]
    fn differential_examples() {
        assert_eq!(f(2, "t1").d(), f(2, "dt1"));
        assert!(f(2, "dt1").d().is_zero());
        assert_eq!(f(2, "t1*t2").d(), f(2, "t2*dt1 + t1*dt2"));
    }

    #[test]
    fn wedge_examples() {
        assert!((&f(2, "dt1") * &f(2, "dt1")).is_zero());
        assert_eq!(&f(2, "dt1") * &f(2, "dt2"), -&(&f(2, "dt2") * &f(2, "dt1")));
        assert_eq!(&f(2, "t1*dt1") * &f(2, "t2*dt2"), f(2, "t1*t2*dt1^dt2"));
        assert!(f(1, "t1").wedge(&f(2, "t1")).is_err());
    }

    #[test]
    fn pullback_examples() {
        let d0 = SimplicialMap::face(2, 0).unwrap();
        assert_eq!(f(2, "t1").pullback(&d0).unwrap(), f(1, "1 - t1"));
        assert!(f(2, "t0").pullback(&d0).unwrap().is_zero());
        let s0 = SimplicialMap::degeneracy(1, 0).unwrap();
        assert_eq!(f(1, "t1").pullback(&s0).unwrap(), f(2, "t2"));
    }

    #[test]
    fn vertex_evaluation_examples() {
        let t0 = f(1, "t0");
        assert_eq!(t0.evaluate_vertex(0).unwrap(), int(1));
        assert_eq!(t0.evaluate_vertex(1).unwrap(), int(0));
        assert_eq!(f(2, "dt1").evaluate_vertex(1).unwrap(), int(0));
        assert!(t0.evaluate_vertex(2).is_err());
    }

    #[test]
    fn contraction_examples() {
        assert_eq!(f(1, "dt0").contract_euler(0).unwrap(), f(1, "-t1"));
        assert_eq!(f(1, "dt1").contract_euler(0).unwrap(), f(1, "t1"));
        assert_eq!(f(1, "t0*dt1 - t1*dt0").contract_euler(1).unwrap(), f(1, "-t0"));
    }

    #[test]
    fn poincare_examples() {
        assert_eq!(f(1, "dt1").poincare_h(0).unwrap(), f(1, "t1"));
        assert_eq!(f(1, "t1*dt1").poincare_h(0).unwrap(), f(1, "1/2*t1^2"));
        assert!(f(2, "t1").poincare_h(1).unwrap().is_zero());
    }

    #[test]
    fn render_examples() {
        assert_eq!(f(1, "dt1").to_string(), "dt1");
        assert_eq!(f(2, "1/2*t1^2*dt1^dt2").to_string(), "1/2*t1^2*dt1^dt2");
        assert_eq!(f(1, "t0").to_string(), "1 - t1");
        assert_eq!(Form::zero(3).to_string(), "0");
        assert_eq!(f(2, "dt2^dt1").to_string(), "-dt1^dt2");
        assert_eq!(f(1, "-3/6*t1^2").scale(&frac(2, 1)).to_string(), "-t1^2");
    }

    #[test]
    fn generator_counts() {
        assert_eq!(monomial_generators(1, 4).len(), 10);
        assert_eq!(monomial_generators(3, 4).len(), 35 * 8);
    }
}
