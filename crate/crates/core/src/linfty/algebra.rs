use crate::rational::{inv_factorial, render_rational, Rational, Sign};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("duplicate generator symbol {0:?}")]
    DuplicateSymbol(String),
    #[error("unknown generator symbol {0:?}")]
    UnknownSymbol(String),
    #[error("bracket {args:?} should have degree {expected}, but its value contains {symbol} of degree {found}")]
    DegreeMismatch { args: Vec<String>, expected: i32, symbol: String, found: i32 },
    #[error("bracket {0:?} repeats an even generator but has a nonzero value")]
    AntisymmetryViolation(Vec<String>),
    #[error("bracket {0:?} is listed twice with different values")]
    ConflictingEntry(Vec<String>),
    #[error("bracket {args:?} has arity above max_arity {max}")]
    ArityTooLarge { args: Vec<String>, max: usize },
    #[error("empty bracket argument list")]
    EmptyBracket,
    #[error("expected an element of degree {expected}, found degrees {found:?}")]
    WrongDegree { expected: i32, found: Vec<i32> },
    #[error("element is not Maurer–Cartan; curvature {0}")]
    NotMaurerCartan(String),
    #[error("permutation {perm:?} does not match {len} degrees")]
    BadPermutation { perm: Vec<usize>, len: usize },
    #[error("algebra is not nilpotent within {0} filtration steps")]
    NotNilpotent(usize),
    #[error("operation requires {0}")]
    Unsupported(String),
    #[error("simplex dimensions differ ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error(transparent)]
    Form(#[from] crate::forms::FormError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub symbol: String,
    pub degree: i32,
}

/// Element of the algebra as a sparse map from generator index to coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GVector {
    coeffs: BTreeMap<usize, Rational>,
}

impl GVector {
    pub fn zero() -> Self {
        GVector::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut v = GVector::zero();
        v.add_term(i, Rational::one());
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut v = GVector::zero();
        for (i, c) in terms {
            v.add_term(i, c);
        }
        v
    }

    pub fn add_term(&mut self, i: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(i).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn add_scaled(&mut self, other: &GVector, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (&i, x) in &other.coeffs {
            self.add_term(i, x * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> GVector {
        let mut out = GVector::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, i: usize) -> Rational {
        self.coeffs.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    /// Dense coordinates in a basis of size `dim`.
    pub fn to_dense(&self, dim: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); dim];
        for (&i, c) in &self.coeffs {
            v[i] = c.clone();
        }
        v
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        GVector::from_terms(v.iter().cloned().enumerate())
    }

    /// Canonical rendering in generator order, e.g. `e1 - 1/2*e3`.
    pub fn render(&self, alg: &Presentation) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (&i, c)) in self.coeffs.iter().enumerate() {
            let negative = c < &Rational::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&render_rational(&mag));
                out.push('*');
            }
            out.push_str(&alg.generators[i].symbol);
        }
        out
    }
}

impl std::ops::Add for &GVector {
    type Output = GVector;
    fn add(self, rhs: &GVector) -> GVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl std::ops::Sub for &GVector {
    type Output = GVector;
    fn sub(self, rhs: &GVector) -> GVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl std::ops::Neg for &GVector {
    type Output = GVector;
    fn neg(self) -> GVector {
        self.scale(&-Rational::one())
    }
}

/// Sign of a permutation acting on graded elements, following the Koszul
/// rule: the product over inversions `(a, b)` of `(-1)^{|x_a||x_b|}`.
/// `perm[p]` is the original index of the element placed at position `p`.
pub fn koszul_sign(perm: &[usize], degrees: &[i32]) -> Result<Sign, AlgebraError> {
    let bad = || AlgebraError::BadPermutation { perm: perm.to_vec(), len: degrees.len() };
    if perm.len() != degrees.len() {
        return Err(bad());
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(bad());
        }
        seen[p] = true;
    }
    let mut odd = false;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] && (degrees[perm[a]] * degrees[perm[b]]).rem_euclid(2) == 1 {
                odd = !odd;
            }
        }
    }
    Ok(Sign::from_parity(odd))
}

/// Sign of the permutation combined with its Koszul sign, i.e. the sign
/// picked up by a graded-antisymmetric operation.
pub(crate) fn antisymmetric_sign(perm: &[usize], degrees: &[i32]) -> Sign {
    let mut odd = false;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                odd = !odd;
                if (degrees[perm[a]] * degrees[perm[b]]).rem_euclid(2) == 1 {
                    odd = !odd;
                }
            }
        }
    }
    Sign::from_parity(odd)
}

/// All non-decreasing index tuples of the given length over `0..count`.
pub fn all_tuples(count: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, count: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in start..count {
            cur.push(v);
            go(v, count, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, count, len, &mut Vec::new(), &mut out);
    out
}

/// Multisets of size `len` over `0..count`, each with its multinomial
/// coefficient `len!/∏ m_i!`.
pub(crate) fn multisets_with_counts(count: usize, len: usize) -> Vec<(Vec<usize>, Rational)> {
    all_tuples(count, len)
        .into_iter()
        .map(|t| {
            let mut c = Rational::from_integer(crate::rational::factorial(len as u64));
            let mut run = 1u64;
            for w in t.windows(2) {
                if w[0] == w[1] {
                    run += 1;
                    c /= Rational::from_integer(run.into());
                } else {
                    run = 1;
                }
            }
            (t, c)
        })
        .collect()
}

/// A finite graded basis with bracket tables on sorted generator tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    name: String,
    generators: Vec<Generator>,
    brackets: BTreeMap<Vec<usize>, GVector>,
    max_arity: usize,
}

/// Failing tuple of a Jacobi check with its residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiFailure {
    pub tuple: Vec<usize>,
    pub residual: GVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub n_max: usize,
    pub tuples_checked: usize,
    pub failure: Option<JacobiFailure>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl Presentation {
    /// Builds a presentation from bracket entries given on arbitrary argument
    /// orders; values are normalized onto sorted tuples with the
    /// antisymmetry sign.
    pub fn new(
        name: impl Into<String>,
        generators: Vec<Generator>,
        entries: Vec<(Vec<usize>, GVector)>,
        max_arity: Option<usize>,
    ) -> Result<Self, AlgebraError> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.symbol.clone()) {
                return Err(AlgebraError::DuplicateSymbol(g.symbol.clone()));
            }
        }
        let observed = entries.iter().map(|(a, _)| a.len()).max().unwrap_or(0);
        let max_arity = max_arity.unwrap_or(observed.max(1));
        let mut pres = Presentation { name: name.into(), generators, brackets: BTreeMap::new(), max_arity };
        for (args, value) in entries {
            pres.insert_entry(args, value)?;
        }
        Ok(pres)
    }

    fn symbols(&self, args: &[usize]) -> Vec<String> {
        args.iter().map(|&i| self.generators[i].symbol.clone()).collect()
    }

    fn insert_entry(&mut self, args: Vec<usize>, value: GVector) -> Result<(), AlgebraError> {
        if args.is_empty() {
            return Err(AlgebraError::EmptyBracket);
        }
        if args.len() > self.max_arity {
            return Err(AlgebraError::ArityTooLarge { args: self.symbols(&args), max: self.max_arity });
        }
        let expected = self.bracket_degree(&args);
        for (i, _) in value.terms() {
            if self.generators[i].degree != expected {
                return Err(AlgebraError::DegreeMismatch {
                    args: self.symbols(&args),
                    expected,
                    symbol: self.generators[i].symbol.clone(),
                    found: self.generators[i].degree,
                });
            }
        }
        let (sign, sorted) = self.sort_args(&args);
        if self.has_repeated_even(&sorted) {
            if value.is_zero() {
                return Ok(());
            }
            return Err(AlgebraError::AntisymmetryViolation(self.symbols(&args)));
        }
        let value = value.scale(&Rational::from_integer(sign.to_i64().into()));
        if let Some(old) = self.brackets.get(&sorted) {
            if old != &value {
                return Err(AlgebraError::ConflictingEntry(self.symbols(&args)));
            }
            return Ok(());
        }
        if !value.is_zero() {
            self.brackets.insert(sorted, value);
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.generators[i].degree
    }

    pub fn index_of(&self, symbol: &str) -> Result<usize, AlgebraError> {
        self.generators
            .iter()
            .position(|g| g.symbol == symbol)
            .ok_or_else(|| AlgebraError::UnknownSymbol(symbol.to_string()))
    }

    /// Stored table entries `(sorted tuple, value)`.
    pub fn table(&self) -> impl Iterator<Item = (&Vec<usize>, &GVector)> {
        self.brackets.iter()
    }

    pub fn bracket_degree(&self, args: &[usize]) -> i32 {
        args.iter().map(|&i| self.degree(i)).sum::<i32>() + 2 - args.len() as i32
    }

    /// Generator indices of the given degree.
    pub fn basis_of_degree(&self, d: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degree(i) == d).collect()
    }

    pub fn degrees_of(&self, v: &GVector) -> BTreeSet<i32> {
        v.support().map(|i| self.degree(i)).collect()
    }

    pub fn is_dg_lie(&self) -> bool {
        self.brackets.keys().all(|k| k.len() <= 2)
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.keys().all(|k| k.len() <= 1)
    }

    fn sort_args(&self, args: &[usize]) -> (Sign, Vec<usize>) {
        let mut perm: Vec<usize> = (0..args.len()).collect();
        perm.sort_by_key(|&p| args[p]);
        let degrees: Vec<i32> = args.iter().map(|&i| self.degree(i)).collect();
        let sign = antisymmetric_sign(&perm, &degrees);
        (sign, perm.iter().map(|&p| args[p]).collect())
    }

    fn has_repeated_even(&self, sorted: &[usize]) -> bool {
        sorted.windows(2).any(|w| w[0] == w[1] && self.degree(w[0]).rem_euclid(2) == 0)
    }

    /// Bracket of basis elements in any order.
    pub fn bracket_basis(&self, args: &[usize]) -> GVector {
        if args.is_empty() || args.len() > self.max_arity {
            return GVector::zero();
        }
        let (sign, sorted) = self.sort_args(args);
        if self.has_repeated_even(&sorted) {
            return GVector::zero();
        }
        match self.brackets.get(&sorted) {
            Some(v) => v.scale(&Rational::from_integer(sign.to_i64().into())),
            None => GVector::zero(),
        }
    }

    /// Multilinear bracket of elements.
    pub fn bracket(&self, args: &[&GVector]) -> GVector {
        let mut out = GVector::zero();
        if args.is_empty() || args.len() > self.max_arity || args.iter().any(|a| a.is_zero()) {
            return out;
        }
        let supports: Vec<Vec<(usize, Rational)>> =
            args.iter().map(|a| a.terms().map(|(i, c)| (i, c.clone())).collect()).collect();
        let mut idx = vec![0usize; args.len()];
        loop {
            let tuple: Vec<usize> = idx.iter().enumerate().map(|(p, &j)| supports[p][j].0).collect();
            let value = self.bracket_basis(&tuple);
            if !value.is_zero() {
                let mut c = Rational::one();
                for (p, &j) in idx.iter().enumerate() {
                    c *= &supports[p][j].1;
                }
                out.add_scaled(&value, &c);
            }
            let mut p = args.len();
            loop {
                if p == 0 {
                    return out;
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < supports[p].len() {
                    break;
                }
                idx[p] = 0;
            }
        }
    }

    /// The unary bracket `δ`.
    pub fn delta(&self, x: &GVector) -> GVector {
        self.bracket(&[x])
    }

    /// `[α^{∧ℓ}, rest…]` for `α` of odd homogeneous degree, by summing over
    /// multisets of the support of `α`.
    pub fn bracket_with_power(&self, alpha: &GVector, ell: usize, rest: &[&GVector]) -> GVector {
        let mut out = GVector::zero();
        if ell + rest.len() == 0 || ell + rest.len() > self.max_arity {
            return out;
        }
        if ell == 0 {
            return self.bracket(rest);
        }
        let support: Vec<(usize, Rational)> = alpha.terms().map(|(i, c)| (i, c.clone())).collect();
        for (multiset, count) in multisets_with_counts(support.len(), ell) {
            let mut c = count;
            let mut args: Vec<GVector> = Vec::with_capacity(ell + rest.len());
            for &m in &multiset {
                c *= &support[m].1;
                args.push(GVector::basis(support[m].0));
            }
            let mut refs: Vec<&GVector> = args.iter().collect();
            refs.extend_from_slice(rest);
            out.add_scaled(&self.bracket(&refs), &c);
        }
        out
    }

    fn require_degree(&self, v: &GVector, d: i32) -> Result<(), AlgebraError> {
        let degs = self.degrees_of(v);
        if degs.iter().any(|&x| x != d) {
            return Err(AlgebraError::WrongDegree { expected: d, found: degs.into_iter().collect() });
        }
        Ok(())
    }

    /// Curvature `δα + Σ_{ℓ≥2} 1/ℓ! [α^{∧ℓ}]` of a degree-1 element.
    pub fn curvature(&self, alpha: &GVector) -> Result<GVector, AlgebraError> {
        self.require_degree(alpha, 1)?;
        let mut out = self.delta(alpha);
        for ell in 2..=self.max_arity {
            out.add_scaled(&self.bracket_with_power(alpha, ell, &[]), &inv_factorial(ell as u64));
        }
        Ok(out)
    }

    pub fn is_mc(&self, alpha: &GVector) -> Result<bool, AlgebraError> {
        Ok(self.curvature(alpha)?.is_zero())
    }

    /// Twisted bracket `[x_1,…,x_k]_μ = Σ_ℓ 1/ℓ! [μ^{∧ℓ}, x_1,…,x_k]`.
    pub fn twisted_bracket(&self, mu: &GVector, args: &[&GVector]) -> GVector {
        let mut out = GVector::zero();
        for ell in 0..=self.max_arity.saturating_sub(args.len()) {
            out.add_scaled(&self.bracket_with_power(mu, ell, args), &inv_factorial(ell as u64));
        }
        out
    }

    /// Residual of `δ𝓕 + Σ_{ℓ≥1} 1/ℓ! [α^{∧ℓ}, 𝓕]`.
    pub fn bianchi_residual(&self, alpha: &GVector) -> Result<GVector, AlgebraError> {
        let curv = self.curvature(alpha)?;
        Ok(self.twisted_bracket(alpha, &[&curv]))
    }

    /// The presentation with brackets twisted by a Maurer–Cartan element.
    pub fn twist(&self, mu: &GVector) -> Result<Presentation, AlgebraError> {
        let curv = self.curvature(mu)?;
        if !curv.is_zero() {
            return Err(AlgebraError::NotMaurerCartan(curv.render(self)));
        }
        let mut entries = Vec::new();
        for k in 1..=self.max_arity {
            for tuple in all_tuples(self.dim(), k) {
                if self.has_repeated_even(&tuple) {
                    continue;
                }
                let basis: Vec<GVector> = tuple.iter().map(|&i| GVector::basis(i)).collect();
                let refs: Vec<&GVector> = basis.iter().collect();
                let value = self.twisted_bracket(mu, &refs);
                if !value.is_zero() {
                    entries.push((tuple, value));
                }
            }
        }
        Presentation::new(format!("{}^mu", self.name), self.generators.clone(), entries, Some(self.max_arity))
    }

    /// `n`-Jacobi sum on a basis tuple.
    pub fn jacobiator(&self, tuple: &[usize]) -> GVector {
        let n = tuple.len();
        let degrees: Vec<i32> = tuple.iter().map(|&i| self.degree(i)).collect();
        let mut out = GVector::zero();
        for mask in 1u32..(1 << n) {
            let inner: Vec<usize> = (0..n).filter(|p| mask & (1 << p) != 0).collect();
            let outer: Vec<usize> = (0..n).filter(|p| mask & (1 << p) == 0).collect();
            let k = inner.len();
            if k > self.max_arity || outer.len() + 1 > self.max_arity {
                continue;
            }
            let perm: Vec<usize> = inner.iter().chain(&outer).copied().collect();
            let sign = antisymmetric_sign(&perm, &degrees) * Sign::from_parity(k % 2 == 1);
            let inner_args: Vec<usize> = inner.iter().map(|&p| tuple[p]).collect();
            let first = self.bracket_basis(&inner_args);
            if first.is_zero() {
                continue;
            }
            let rest: Vec<GVector> = outer.iter().map(|&p| GVector::basis(tuple[p])).collect();
            let mut refs: Vec<&GVector> = vec![&first];
            refs.extend(rest.iter());
            let value = self.bracket(&refs);
            out.add_scaled(&value, &Rational::from_integer(sign.to_i64().into()));
        }
        out
    }

    /// Checks every `n`-Jacobi rule for `n ≤ n_max` on all basis tuples.
    pub fn check_jacobi(&self, n_max: usize) -> JacobiReport {
        let mut checked = 0;
        for n in 1..=n_max {
            for tuple in all_tuples(self.dim(), n) {
                checked += 1;
                let residual = self.jacobiator(&tuple);
                if !residual.is_zero() {
                    return JacobiReport { n_max, tuples_checked: checked, failure: Some(JacobiFailure { tuple, residual }) };
                }
            }
        }
        JacobiReport { n_max, tuples_checked: checked, failure: None }
    }

    /// Default Jacobi bound `K + 2`.
    pub fn default_jacobi_bound(&self) -> usize {
        self.max_arity + 2
    }

    /// The image of a strict morphism given by a matrix `images[i]` of each generator.
    pub fn map_vector(images: &[GVector], v: &GVector) -> GVector {
        let mut out = GVector::zero();
        for (i, c) in v.terms() {
            out.add_scaled(&images[i], c);
        }
        out
    }

    /// Checks that `images` defines a strict morphism `self → target`.
    pub fn is_strict_morphism(&self, target: &Presentation, images: &[GVector]) -> bool {
        if images.len() != self.dim() {
            return false;
        }
        for (i, img) in images.iter().enumerate() {
            if target.degrees_of(img).iter().any(|&d| d != self.degree(i)) {
                return false;
            }
        }
        let mut cache: HashMap<Vec<usize>, GVector> = HashMap::new();
        for k in 1..=self.max_arity.max(target.max_arity) {
            for tuple in all_tuples(self.dim(), k) {
                let lhs = Presentation::map_vector(images, &self.bracket_basis(&tuple));
                let args: Vec<&GVector> = tuple.iter().map(|&i| &images[i]).collect();
                let rhs = cache.entry(tuple.clone()).or_insert_with(|| target.bracket(&args));
                if &lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn gens(spec: &[(&str, i32)]) -> Vec<Generator> {
        spec.iter().map(|(s, d)| Generator { symbol: s.to_string(), degree: *d }).collect()
    }

    pub(crate) fn heisenberg() -> Presentation {
        Presentation::new(
            "heisenberg",
            gens(&[("e1", 0), ("e2", 0), ("e3", 0)]),
            vec![(vec![0, 1], GVector::basis(2))],
            None,
        )
        .unwrap()
    }

    #[test]
    fn heisenberg_brackets() {
        let h = heisenberg();
        assert_eq!(h.bracket_basis(&[0, 1]), GVector::basis(2));
        assert_eq!(h.bracket_basis(&[1, 0]), -&GVector::basis(2));
        assert!(h.bracket_basis(&[0, 0]).is_zero());
        assert!(h.check_jacobi(4).passed());
    }

    #[test]
    fn koszul_examples() {
        assert_eq!(koszul_sign(&[1, 0], &[1, 1]).unwrap(), Sign::Minus);
        assert_eq!(koszul_sign(&[1, 0], &[0, 1]).unwrap(), Sign::Plus);
        assert_eq!(koszul_sign(&[0, 1, 2], &[1, 1, 1]).unwrap(), Sign::Plus);
        assert!(koszul_sign(&[0, 0], &[1, 1]).is_err());
        assert!(koszul_sign(&[0], &[1, 1]).is_err());
    }

    #[test]
    fn abelian_bracket_vanishes() {
        let a = Presentation::new("ab", gens(&[("x", 0), ("y", 0)]), vec![], None).unwrap();
        assert!(a.bracket(&[&GVector::basis(0), &GVector::basis(1)]).is_zero());
        assert!(a.check_jacobi(5).passed());
    }

    #[test]
    fn cyclic_tables_satisfy_jacobi_under_any_sign() {
        // every sign choice on [e1,e2]=e3, [e1,e3]=e2, [e2,e3]=e1 is a Lie algebra
        let g = gens(&[("e1", 0), ("e2", 0), ("e3", 0)]);
        for mask in 0..8u32 {
            let s = |b: u32| if mask & (1 << b) != 0 { -int(1) } else { int(1) };
            let entries = vec![
                (vec![0, 1], GVector::basis(2).scale(&s(0))),
                (vec![0, 2], GVector::basis(1).scale(&s(1))),
                (vec![1, 2], GVector::basis(0).scale(&s(2))),
            ];
            assert!(Presentation::new("c", g.clone(), entries, None).unwrap().check_jacobi(3).passed());
        }
    }

    #[test]
    fn flipped_ut4_fails_at_three() {
        // E12, E13, E14, E23, E24, E34
        let g = gens(&[("E12", 0), ("E13", 0), ("E14", 0), ("E23", 0), ("E24", 0), ("E34", 0)]);
        let entries = |flip: bool| {
            let c = if flip { -int(1) } else { int(1) };
            vec![
                (vec![0, 3], GVector::basis(1)),
                (vec![0, 4], GVector::basis(2).scale(&c)),
                (vec![1, 5], GVector::basis(2)),
                (vec![3, 5], GVector::basis(4)),
            ]
        };
        assert!(Presentation::new("ut4", g.clone(), entries(false), None).unwrap().check_jacobi(4).passed());
        let bad = Presentation::new("bad", g, entries(true), None).unwrap();
        let failure = bad.check_jacobi(3).failure.unwrap();
        assert_eq!(failure.tuple, vec![0, 3, 5]);
        assert_eq!(failure.residual, GVector::basis(2).scale(&int(2)));
    }

    #[test]
    fn validation_errors() {
        let g = gens(&[("x", 0), ("y", 1)]);
        let wrong = Presentation::new("w", g.clone(), vec![(vec![0, 0], GVector::basis(0))], None);
        assert!(matches!(wrong, Err(AlgebraError::AntisymmetryViolation(_))));
        let wrong = Presentation::new("w", g.clone(), vec![(vec![0, 1], GVector::basis(0))], None);
        assert!(matches!(wrong, Err(AlgebraError::DegreeMismatch { .. })));
        let dup = Presentation::new("d", gens(&[("x", 0), ("x", 1)]), vec![], None);
        assert!(matches!(dup, Err(AlgebraError::DuplicateSymbol(_))));
    }

    #[test]
    fn dg_curvature_and_twist() {
        // δe0 = e1 with an abelian bracket
        let g = gens(&[("e0", 0), ("e1", 1)]);
        let dg = Presentation::new("dg", g, vec![(vec![0], GVector::basis(1))], None).unwrap();
        assert!(dg.is_mc(&GVector::basis(1)).unwrap());
        assert!(dg.is_mc(&GVector::zero()).unwrap());
        assert!(dg.curvature(&GVector::basis(0)).is_err());
        let t = dg.twist(&GVector::zero()).unwrap();
        assert_eq!(t.brackets, dg.brackets);
        let mu = GVector::basis(1).scale(&int(3));
        let tw = dg.twist(&mu).unwrap();
        assert_eq!(tw.bracket_basis(&[0]), GVector::basis(1));
    }
}
