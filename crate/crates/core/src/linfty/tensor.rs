use super::algebra::{multisets_with_counts, AlgebraError, GVector, Presentation};
use crate::dupont;
use crate::forms::{Form, FormError};
use crate::rational::{inv_factorial, Rational};
use crate::simplicial::SimplicialMap;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Element of `𝔤 ⊗ Ω_n`, stored as one form per generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    n: usize,
    comps: BTreeMap<usize, Form>,
}

/// A homogeneous summand `x ⊗ a` with `a` of a single exterior degree.
#[derive(Debug, Clone)]
pub struct Piece {
    pub generator: usize,
    pub exterior: usize,
    pub form: Form,
}

fn check_dims(n: usize, m: usize) -> Result<(), AlgebraError> {
    if n != m {
        return Err(AlgebraError::DimensionMismatch(n, m));
    }
    Ok(())
}

fn parity_sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

impl TensorElement {
    pub fn zero(n: usize) -> Self {
        TensorElement { n, comps: BTreeMap::new() }
    }

    /// `v ⊗ 1`.
    pub fn from_vector(v: &GVector, n: usize) -> Self {
        let mut out = TensorElement::zero(n);
        for (i, c) in v.terms() {
            out.add_piece(i, &Form::constant(n, c.clone()));
        }
        out
    }

    /// `x_i ⊗ a`.
    pub fn single(generator: usize, form: Form) -> Self {
        let mut out = TensorElement::zero(form.dim());
        out.add_piece(generator, &form);
        out
    }

    /// `v ⊗ a`.
    pub fn vector_times_form(v: &GVector, form: &Form) -> Self {
        let mut out = TensorElement::zero(form.dim());
        for (i, c) in v.terms() {
            out.add_piece(i, &form.scale(c));
        }
        out
    }

    /// The element written `ω ⊗ x` for `ω` of a single exterior degree,
    /// i.e. `(-1)^{|ω||x|} x ⊗ ω`.
    pub fn form_times_vector(alg: &Presentation, omega: &Form, x: &GVector) -> Self {
        let k = omega.degrees().into_iter().next().unwrap_or(0) as i32;
        let mut out = TensorElement::zero(omega.dim());
        for (i, c) in x.terms() {
            let sign = parity_sign((k * alg.degree(i)).rem_euclid(2) == 1);
            out.add_piece(i, &omega.scale(&(c * sign)));
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn component(&self, generator: usize) -> Form {
        self.comps.get(&generator).cloned().unwrap_or_else(|| Form::zero(self.n))
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &Form)> {
        self.comps.iter().map(|(&i, f)| (i, f))
    }

    pub(crate) fn add_piece(&mut self, generator: usize, form: &Form) {
        if form.is_zero() {
            return;
        }
        let entry = self.comps.entry(generator).or_insert_with(|| Form::zero(self.n));
        entry.add_assign_scaled(form, &Rational::one());
        if entry.is_zero() {
            self.comps.remove(&generator);
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Rational) {
        assert_eq!(self.n, other.n, "tensor elements over different simplices");
        if c.is_zero() {
            return;
        }
        for (&i, f) in &other.comps {
            self.add_piece(i, &f.scale(c));
        }
    }

    pub fn scale(&self, c: &Rational) -> TensorElement {
        let mut out = TensorElement::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    /// Total degrees present, `|x| + exterior degree`.
    pub fn total_degrees(&self, alg: &Presentation) -> BTreeSet<i32> {
        let mut out = BTreeSet::new();
        for (&i, f) in &self.comps {
            for k in f.degrees() {
                out.insert(alg.degree(i) + k as i32);
            }
        }
        out
    }

    /// Splits into homogeneous pieces in canonical order.
    pub fn pieces(&self) -> Vec<Piece> {
        let mut out = Vec::new();
        for (&i, f) in &self.comps {
            for k in f.degrees() {
                out.push(Piece { generator: i, exterior: k, form: f.component(k) });
            }
        }
        out
    }

    /// Part of exterior degree `k`.
    pub fn exterior_part(&self, k: usize) -> TensorElement {
        let mut out = TensorElement::zero(self.n);
        for (&i, f) in &self.comps {
            out.add_piece(i, &f.component(k));
        }
        out
    }

    /// Applies a form operator componentwise.
    pub fn map_forms(&self, mut op: impl FnMut(&Form) -> Result<Form, FormError>) -> Result<TensorElement, FormError> {
        let mut out: Option<TensorElement> = None;
        for (&i, f) in &self.comps {
            let img = op(f)?;
            out.get_or_insert_with(|| TensorElement::zero(img.dim())).add_piece(i, &img);
        }
        Ok(out.unwrap_or_else(|| TensorElement::zero(self.n)))
    }

    /// Applies an odd form operator with the sign `(-1)^{|x|}` on `x ⊗ a`.
    pub fn map_forms_odd(
        &self,
        alg: &Presentation,
        mut op: impl FnMut(&Form) -> Result<Form, FormError>,
    ) -> Result<TensorElement, FormError> {
        let mut out = TensorElement::zero(self.n);
        for (&i, f) in &self.comps {
            let img = op(f)?;
            out.add_piece(i, &img.scale(&parity_sign(alg.degree(i).rem_euclid(2) == 1)));
        }
        Ok(out)
    }

    pub fn pullback(&self, map: &SimplicialMap) -> Result<TensorElement, FormError> {
        let mut out = TensorElement::zero(map.source());
        for (&i, f) in &self.comps {
            out.add_piece(i, &f.pullback(map)?);
        }
        Ok(out)
    }

    pub fn evaluate_vertex(&self, i: usize) -> Result<GVector, FormError> {
        let mut out = GVector::zero();
        for (&g, f) in &self.comps {
            out.add_term(g, f.evaluate_vertex(i)?);
        }
        Ok(out)
    }

    pub fn integrate(&self, seq: &[usize]) -> Result<GVector, FormError> {
        let mut out = GVector::zero();
        for (&g, f) in &self.comps {
            out.add_term(g, dupont::integrate_chain(seq, f)?);
        }
        Ok(out)
    }

    pub fn whitney_p(&self) -> Result<TensorElement, FormError> {
        self.map_forms(dupont::whitney_p)
    }

    pub fn poincare_h(&self, alg: &Presentation, i: usize) -> Result<TensorElement, FormError> {
        self.map_forms_odd(alg, |f| dupont::poincare_h(i, f))
    }

    pub fn dupont_s(&self, alg: &Presentation) -> Result<TensorElement, FormError> {
        self.map_forms_odd(alg, dupont::dupont_s)
    }

    /// `(d + δ)` on `𝔤 ⊗ Ω_n`.
    pub fn differential(&self, alg: &Presentation) -> TensorElement {
        let mut out = TensorElement::zero(self.n);
        for (&i, f) in &self.comps {
            let dx = alg.bracket_basis(&[i]);
            for (j, c) in dx.terms() {
                out.add_piece(j, &f.scale(c));
            }
            out.add_piece(i, &f.d().scale(&parity_sign(alg.degree(i).rem_euclid(2) == 1)));
        }
        out
    }

    pub fn render(&self, alg: &Presentation) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.comps
            .iter()
            .map(|(&i, f)| format!("{}: {}", alg.generators()[i].symbol, f))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn bracket_pieces(alg: &Presentation, n: usize, pieces: &[&Piece], coeff: &Rational, out: &mut TensorElement) {
    let gens: Vec<usize> = pieces.iter().map(|p| p.generator).collect();
    let value = alg.bracket_basis(&gens);
    if value.is_zero() {
        return;
    }
    let mut odd = false;
    for a in 0..pieces.len() {
        for b in a + 1..pieces.len() {
            if (pieces[a].exterior as i64 * alg.degree(pieces[b].generator) as i64).rem_euclid(2) == 1 {
                odd = !odd;
            }
        }
    }
    let mut form = Form::constant(n, coeff * parity_sign(odd));
    for p in pieces {
        form = &form * &p.form;
        if form.is_zero() {
            return;
        }
    }
    for (j, c) in value.terms() {
        out.add_piece(j, &form.scale(c));
    }
}

impl Presentation {
    /// Bracket on `𝔤 ⊗ Ω_n` with the sign `(-1)^{Σ_{i<j}|x_i||a_j|}`; the
    /// unary bracket is `d + δ`.
    pub fn tensor_bracket(&self, args: &[&TensorElement]) -> Result<TensorElement, AlgebraError> {
        let n = args.first().map(|a| a.dim()).ok_or(AlgebraError::EmptyBracket)?;
        for a in args {
            check_dims(n, a.dim())?;
        }
        if args.len() == 1 {
            return Ok(args[0].differential(self));
        }
        let mut out = TensorElement::zero(n);
        if args.len() > self.max_arity() || args.iter().any(|a| a.is_zero()) {
            return Ok(out);
        }
        let pieces: Vec<Vec<Piece>> = args.iter().map(|a| a.pieces()).collect();
        let mut idx = vec![0usize; args.len()];
        let one = Rational::one();
        loop {
            let choice: Vec<&Piece> = idx.iter().enumerate().map(|(p, &j)| &pieces[p][j]).collect();
            bracket_pieces(self, n, &choice, &one, &mut out);
            let mut p = args.len();
            loop {
                if p == 0 {
                    return Ok(out);
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < pieces[p].len() {
                    break;
                }
                idx[p] = 0;
            }
        }
    }

    /// `[α^{∧ℓ}]` for `ℓ ≥ 2` and `α` of total degree 1.
    pub fn tensor_power_bracket(&self, alpha: &TensorElement, ell: usize) -> TensorElement {
        let mut out = TensorElement::zero(alpha.dim());
        if ell > self.max_arity() || ell < 2 {
            return out;
        }
        let pieces = alpha.pieces();
        for (multiset, count) in multisets_with_counts(pieces.len(), ell) {
            let choice: Vec<&Piece> = multiset.iter().map(|&m| &pieces[m]).collect();
            bracket_pieces(self, alpha.dim(), &choice, &count, &mut out);
        }
        out
    }

    /// `Σ_{ℓ≥2} 1/ℓ! [α^{∧ℓ}]`.
    pub fn tensor_nonlinear(&self, alpha: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(alpha.dim());
        for ell in 2..=self.max_arity() {
            out.add_scaled(&self.tensor_power_bracket(alpha, ell), &inv_factorial(ell as u64));
        }
        out
    }

    /// Curvature `(d + δ)α + Σ_{ℓ≥2} 1/ℓ! [α^{∧ℓ}]` of a total-degree-1 element.
    pub fn tensor_curvature(&self, alpha: &TensorElement) -> Result<TensorElement, AlgebraError> {
        let degs = alpha.total_degrees(self);
        if degs.iter().any(|&d| d != 1) {
            return Err(AlgebraError::WrongDegree { expected: 1, found: degs.into_iter().collect() });
        }
        let mut out = alpha.differential(self);
        out.add_scaled(&self.tensor_nonlinear(alpha), &Rational::one());
        Ok(out)
    }

    pub fn tensor_is_mc(&self, alpha: &TensorElement) -> Result<bool, AlgebraError> {
        Ok(self.tensor_curvature(alpha)?.is_zero())
    }

    /// `n`-Jacobi sum on tensor arguments.
    pub fn tensor_jacobiator(&self, args: &[&TensorElement]) -> Result<TensorElement, AlgebraError> {
        let n = args.len();
        let dim = args.first().map(|a| a.dim()).ok_or(AlgebraError::EmptyBracket)?;
        let degrees: Vec<i32> = args
            .iter()
            .map(|a| {
                let d = a.total_degrees(self);
                if d.len() > 1 {
                    Err(AlgebraError::WrongDegree { expected: *d.iter().next().unwrap(), found: d.into_iter().collect() })
                } else {
                    Ok(d.into_iter().next().unwrap_or(0))
                }
            })
            .collect::<Result<_, _>>()?;
        let mut out = TensorElement::zero(dim);
        for mask in 1u32..(1 << n) {
            let inner: Vec<usize> = (0..n).filter(|p| mask & (1 << p) != 0).collect();
            let outer: Vec<usize> = (0..n).filter(|p| mask & (1 << p) == 0).collect();
            let perm: Vec<usize> = inner.iter().chain(&outer).copied().collect();
            let sign = super::algebra::antisymmetric_sign(&perm, &degrees)
                * crate::rational::Sign::from_parity(inner.len() % 2 == 1);
            let inner_args: Vec<&TensorElement> = inner.iter().map(|&p| args[p]).collect();
            let first = self.tensor_bracket(&inner_args)?;
            let mut outer_args: Vec<&TensorElement> = vec![&first];
            outer_args.extend(outer.iter().map(|&p| args[p]));
            let value = self.tensor_bracket(&outer_args)?;
            out.add_scaled(&value, &Rational::from_integer(sign.to_i64().into()));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linfty::Generator;

    fn heisenberg() -> Presentation {
        let g = ["e1", "e2", "e3"].iter().map(|s| Generator { symbol: s.to_string(), degree: 0 }).collect();
        Presentation::new("h", g, vec![(vec![0, 1], GVector::basis(2))], None).unwrap()
    }

    #[test]
    fn unary_bracket_examples() {
        let g = vec![Generator { symbol: "x".into(), degree: 0 }, Generator { symbol: "y".into(), degree: 1 }];
        let dg = Presentation::new("dg", g, vec![(vec![0], GVector::basis(1))], None).unwrap();
        let one = TensorElement::from_vector(&GVector::basis(0), 1);
        assert_eq!(dg.tensor_bracket(&[&one]).unwrap(), TensorElement::from_vector(&GVector::basis(1), 1));
        let t1 = Form::t(1, 1).unwrap();
        let x = TensorElement::single(0, t1.clone());
        let mut expect = TensorElement::single(1, t1);
        expect.add_scaled(&TensorElement::single(0, Form::dt(1, 1).unwrap()), &Rational::one());
        assert_eq!(dg.tensor_bracket(&[&x]).unwrap(), expect);
    }

    #[test]
    fn heisenberg_tensor_bracket() {
        let h = heisenberg();
        let a = TensorElement::single(0, Form::dt(1, 1).unwrap());
        let b = TensorElement::single(1, Form::t(1, 1).unwrap());
        let got = h.tensor_bracket(&[&a, &b]).unwrap();
        let expect = TensorElement::single(2, &Form::t(1, 1).unwrap() * &Form::dt(1, 1).unwrap());
        assert_eq!(got, expect);
    }

    #[test]
    fn degree_zero_lie_one_forms_are_mc() {
        let h = heisenberg();
        let t = Form::t(1, 1).unwrap();
        let dt = Form::dt(1, 1).unwrap();
        let mut alpha = TensorElement::single(0, &t * &dt);
        alpha.add_scaled(&TensorElement::single(1, dt.clone()), &Rational::one());
        assert!(h.tensor_is_mc(&alpha).unwrap());
        assert!(h.tensor_curvature(&TensorElement::single(0, t)).is_err());
    }

    #[test]
    fn tensor_jacobi_on_random_inputs() {
        let mut rng = crate::sample::rng(3);
        for name in ["dglie01", "dg_pair", "heisenberg", "linfty3"] {
            let alg = crate::io::fixtures::get(name);
            for t in 0..24 {
                let n = 1 + t % 3;
                let degs = [t as i32 % 3, (t as i32 / 3) % 2, 1];
                let xs: Vec<TensorElement> =
                    degs.iter().map(|&d| crate::sample::tensor_of_degree(&alg, n, d, 2, &mut rng)).collect();
                assert!(alg.tensor_jacobiator(&[&xs[0]]).unwrap().is_zero());
                assert!(alg.tensor_jacobiator(&[&xs[0], &xs[1]]).unwrap().is_zero(), "{name}");
                assert!(alg.tensor_jacobiator(&[&xs[0], &xs[1], &xs[2]]).unwrap().is_zero(), "{name}");
            }
        }
    }
}
