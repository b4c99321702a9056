//! The simplicial sets `MC_•(𝔤)` and `γ_•(𝔤)`: Maurer–Cartan solvers,
//! faces and degeneracies, thinness and horn fillers.

use crate::dupont::{elementary_form, increasing_sequences};
use crate::forms::FormError;
use crate::linalg::solve_canonical;
use crate::linfty::{AlgebraError, GVector, Presentation, TensorElement};
use crate::rational::Rational;
use crate::simplicial::SimplicialMap;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum McError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error("algebra {0:?} is not nilpotent within the filtration cap")]
    NotNilpotent(String),
    #[error("base point is not Maurer–Cartan; curvature {0}")]
    NotMc(String),
    #[error("iteration did not stabilize within {0} steps")]
    IterationCap(usize),
    #[error("index {index} out of range for a {n}-simplex")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("horn needs {expected} faces of dimension {dim}, got {found}")]
    HornShape { expected: usize, dim: usize, found: usize },
    #[error("horn faces {j} and {k} do not agree on their common face")]
    IncompatibleHorn { j: usize, k: usize },
    #[error("morphism is not surjective in degree {0}")]
    NotSurjective(i32),
    #[error("morphism does not preserve brackets")]
    NotMorphism,
    #[error("image of horn face {0} differs from the target face")]
    FaceMismatch(usize),
    #[error("algebra is not abelian")]
    NotAbelian,
    #[error("algebra has generators of negative degree")]
    NegativeDegrees,
}

/// Pullback along the face map `d_k`.
pub fn face(alpha: &TensorElement, k: usize) -> Result<TensorElement, McError> {
    let n = alpha.dim();
    if n == 0 || k > n {
        return Err(McError::IndexOutOfRange { index: k, n });
    }
    Ok(alpha.pullback(&SimplicialMap::face(n, k).map_err(FormError::from)?)?)
}

/// Pullback along the degeneracy map `s_k`.
pub fn degenerate(alpha: &TensorElement, k: usize) -> Result<TensorElement, McError> {
    let n = alpha.dim();
    if k > n {
        return Err(McError::IndexOutOfRange { index: k, n });
    }
    Ok(alpha.pullback(&SimplicialMap::degeneracy(n, k).map_err(FormError::from)?)?)
}

/// `I_{0…n}(α)`.
pub fn top_integral(alpha: &TensorElement) -> Result<GVector, McError> {
    let seq: Vec<usize> = (0..=alpha.dim()).collect();
    Ok(alpha.integrate(&seq)?)
}

pub fn is_thin(alpha: &TensorElement) -> Result<bool, McError> {
    Ok(top_integral(alpha)?.is_zero())
}

/// Solver bound to a nilpotent presentation.
#[derive(Debug, Clone)]
pub struct Solver<'a> {
    alg: &'a Presentation,
    index: usize,
}

impl<'a> Solver<'a> {
    pub fn new(alg: &'a Presentation) -> Result<Self, McError> {
        let index = alg.nilpotency_index().ok_or_else(|| McError::NotNilpotent(alg.name().to_string()))?;
        Ok(Solver { alg, index })
    }

    pub fn algebra(&self) -> &'a Presentation {
        self.alg
    }

    pub fn nilpotency_index(&self) -> usize {
        self.index
    }

    /// Iteration cap: nilpotency index + 2.
    pub fn cap(&self) -> usize {
        self.index + 2
    }

    fn check_base(&self, mu: &GVector) -> Result<(), McError> {
        let curv = self.alg.curvature(mu)?;
        if !curv.is_zero() {
            return Err(McError::NotMc(curv.render(self.alg)));
        }
        Ok(())
    }

    fn check_index(n: usize, i: usize) -> Result<(), McError> {
        if i > n {
            return Err(McError::IndexOutOfRange { index: i, n });
        }
        Ok(())
    }

    fn iterate(
        &self,
        alpha0: TensorElement,
        mut correction: impl FnMut(&TensorElement) -> Result<TensorElement, McError>,
    ) -> Result<TensorElement, McError> {
        let mut alpha = alpha0.clone();
        for _ in 0..=self.cap() {
            let q = self.alg.tensor_nonlinear(&alpha);
            let mut next = alpha0.clone();
            next.add_scaled(&correction(&q)?, &-Rational::one());
            if next == alpha {
                return Ok(alpha);
            }
            alpha = next;
        }
        Err(McError::IterationCap(self.cap()))
    }

    /// `R^i α = (d + δ) h^i α`.
    pub fn r_operator(&self, alpha: &TensorElement, i: usize) -> Result<TensorElement, McError> {
        Ok(alpha.poincare_h(self.alg, i)?.differential(self.alg))
    }

    /// The pair `(ε^i α, R^i α)`.
    pub fn mc_data(&self, alpha: &TensorElement, i: usize) -> Result<(GVector, TensorElement), McError> {
        Self::check_index(alpha.dim(), i)?;
        Ok((alpha.evaluate_vertex(i)?, self.r_operator(alpha, i)?))
    }

    /// The pair `(ε^i α, P R^i α)`.
    pub fn gauge_data(&self, alpha: &TensorElement, i: usize) -> Result<(GVector, TensorElement), McError> {
        let (mu, r) = self.mc_data(alpha, i)?;
        Ok((mu, r.whitney_p()?))
    }

    /// The unique `α ∈ MC_n(𝔤)` with `ε^i α = μ` and `R^i α = ν`, by
    /// iterating `α ↦ μ + ν - Σ 1/ℓ! h^i [α^{∧ℓ}]`.
    pub fn solve_mc(&self, n: usize, i: usize, mu: &GVector, nu: &TensorElement) -> Result<TensorElement, McError> {
        Self::check_index(n, i)?;
        self.check_base(mu)?;
        let mut alpha0 = TensorElement::from_vector(mu, n);
        alpha0.add_scaled(nu, &Rational::one());
        self.iterate(alpha0, |q| Ok(q.poincare_h(self.alg, i)?))
    }

    /// The unique `α ∈ γ_n(𝔤)` with `ε^i α = μ` and `P R^i α = ν`, by
    /// iterating `α ↦ μ + ν - Σ 1/ℓ! (P h^i + s)[α^{∧ℓ}]`.
    pub fn solve_gauge_fixed(&self, n: usize, i: usize, mu: &GVector, nu: &TensorElement) -> Result<TensorElement, McError> {
        Self::check_index(n, i)?;
        self.check_base(mu)?;
        let mut alpha0 = TensorElement::from_vector(mu, n);
        alpha0.add_scaled(nu, &Rational::one());
        self.iterate(alpha0, |q| {
            let mut out = q.poincare_h(self.alg, i)?.whitney_p()?;
            out.add_scaled(&q.dupont_s(self.alg)?, &Rational::one());
            Ok(out)
        })
    }

    pub fn is_mc_simplex(&self, alpha: &TensorElement) -> Result<bool, McError> {
        Ok(self.alg.tensor_is_mc(alpha)?)
    }

    /// Membership in `γ_n`: Maurer–Cartan and `s_n α = 0`.
    pub fn is_gamma_simplex(&self, alpha: &TensorElement) -> Result<bool, McError> {
        Ok(self.alg.tensor_is_mc(alpha)? && alpha.dupont_s(self.alg)?.is_zero())
    }

    /// Fills a horn in `MC_•(𝔤)`: a linear extension `ρ`, then the solution
    /// with the data `(ε^i ρ, R^i ρ)`.
    pub fn fill_horn_mc(&self, horn: &Horn) -> Result<TensorElement, McError> {
        let rho = horn.linear_extension()?;
        let (mu, nu) = self.mc_data(&rho, horn.missing)?;
        self.solve_mc(horn.n, horn.missing, &mu, &nu)
    }

    fn gamma_seed(&self, horn: &Horn, top: Option<&GVector>) -> Result<(GVector, TensorElement), McError> {
        let (n, i) = (horn.n, horn.missing);
        let mu = horn.vertex(i)?;
        let mut beta = TensorElement::zero(n);
        for k in 1..n {
            for seq in increasing_sequences(n, k) {
                if seq.contains(&i) {
                    continue;
                }
                let chain: Vec<usize> = std::iter::once(i).chain(seq.iter().copied()).collect();
                let x = horn.integrate(&chain)?;
                if !x.is_zero() {
                    beta.add_scaled(&TensorElement::form_times_vector(self.alg, &elementary_form(n, &seq)?, &x), &Rational::one());
                }
            }
        }
        if let Some(x) = top {
            let seq: Vec<usize> = (0..=n).filter(|&v| v != i).collect();
            let sign = if i % 2 == 1 { -Rational::one() } else { Rational::one() };
            beta.add_scaled(&TensorElement::form_times_vector(self.alg, &elementary_form(n, &seq)?, x), &sign);
        }
        Ok((mu, beta.differential(self.alg)))
    }

    /// The thin filler of a horn in `γ_•(𝔤)`.
    pub fn fill_horn_gamma(&self, horn: &Horn) -> Result<TensorElement, McError> {
        let (mu, nu) = self.gamma_seed(horn, None)?;
        self.solve_gauge_fixed(horn.n, horn.missing, &mu, &nu)
    }

    /// The filler in `γ_•(𝔤)` with prescribed top integral `x`.
    pub fn fill_horn_with_top(&self, horn: &Horn, x: &GVector) -> Result<TensorElement, McError> {
        let (mu, nu) = self.gamma_seed(horn, Some(x))?;
        self.solve_gauge_fixed(horn.n, horn.missing, &mu, &nu)
    }
}

/// A strict surjection `f: 𝔤 → 𝔥` given by the images of the generators.
#[derive(Debug, Clone)]
pub struct StrictMorphism<'a> {
    pub source: &'a Presentation,
    pub target: &'a Presentation,
    pub images: Vec<GVector>,
}

impl<'a> StrictMorphism<'a> {
    pub fn new(source: &'a Presentation, target: &'a Presentation, images: Vec<GVector>) -> Result<Self, McError> {
        if !source.is_strict_morphism(target, &images) {
            return Err(McError::NotMorphism);
        }
        Ok(StrictMorphism { source, target, images })
    }

    pub fn apply(&self, v: &GVector) -> GVector {
        Presentation::map_vector(&self.images, v)
    }

    pub fn apply_tensor(&self, alpha: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(alpha.dim());
        for (i, f) in alpha.components() {
            out.add_scaled(&TensorElement::vector_times_form(&self.images[i], f), &Rational::one());
        }
        out
    }

    /// Canonical preimage of `y` in degree `d`: the reduced row-echelon
    /// solution with free coordinates zero, pivots in generator order.
    pub fn lift(&self, y: &GVector, d: i32) -> Result<GVector, McError> {
        let src = self.source.basis_of_degree(d);
        let tgt = self.target.basis_of_degree(d);
        let a: Vec<Vec<Rational>> =
            tgt.iter().map(|&t| src.iter().map(|&s| self.images[s].coefficient(t)).collect()).collect();
        let b: Vec<Rational> = tgt.iter().map(|&t| y.coefficient(t)).collect();
        let x = solve_canonical(&a, src.len(), &b).ok_or(McError::NotSurjective(d))?;
        Ok(GVector::from_terms(src.iter().copied().zip(x)))
    }

    pub fn check_surjective(&self) -> Result<(), McError> {
        let degrees: std::collections::BTreeSet<i32> = self.target.generators().iter().map(|g| g.degree).collect();
        for d in degrees {
            for t in self.target.basis_of_degree(d) {
                self.lift(&GVector::basis(t), d)?;
            }
        }
        Ok(())
    }
}

/// Relative filler along a strict surjection: a filler of `horn` in
/// `γ_n(𝔤)` whose image is `target`.
pub fn fill_horn_relative(
    solver: &Solver<'_>,
    f: &StrictMorphism<'_>,
    horn: &Horn,
    target: &TensorElement,
) -> Result<TensorElement, McError> {
    f.check_surjective()?;
    for (j, x) in horn.faces() {
        if &f.apply_tensor(x) != &face(target, j)? {
            return Err(McError::FaceMismatch(j));
        }
    }
    let n = horn.n;
    let x = f.lift(&top_integral(target)?, 1 - n as i32)?;
    solver.fill_horn_with_top(horn, &x)
}

/// A horn `Λ^n_i → X_•`: the faces `x_j` for `j ≠ i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Horn {
    pub n: usize,
    pub missing: usize,
    faces: Vec<TensorElement>,
}

impl Horn {
    /// Faces are listed in increasing order of `j`, skipping `missing`.
    pub fn new(n: usize, missing: usize, faces: Vec<TensorElement>) -> Result<Self, McError> {
        if n == 0 || missing > n {
            return Err(McError::IndexOutOfRange { index: missing, n });
        }
        if faces.len() != n || faces.iter().any(|x| x.dim() != n - 1) {
            return Err(McError::HornShape { expected: n, dim: n - 1, found: faces.len() });
        }
        let horn = Horn { n, missing, faces };
        let slots: Vec<(usize, &TensorElement)> = horn.faces().collect();
        for (a, &(j, xj)) in slots.iter().enumerate() {
            for &(k, xk) in &slots[a + 1..] {
                if n >= 2 && face(xk, j)? != face(xj, k - 1)? {
                    return Err(McError::IncompatibleHorn { j, k });
                }
            }
        }
        Ok(horn)
    }

    /// The horn of all faces of `alpha` except the `missing` one.
    pub fn from_simplex(alpha: &TensorElement, missing: usize) -> Result<Self, McError> {
        let n = alpha.dim();
        let faces = (0..=n).filter(|&j| j != missing).map(|j| face(alpha, j)).collect::<Result<_, _>>()?;
        Horn::new(n, missing, faces)
    }

    pub fn faces(&self) -> impl Iterator<Item = (usize, &TensorElement)> {
        let i = self.missing;
        self.faces.iter().enumerate().map(move |(p, x)| (if p < i { p } else { p + 1 }, x))
    }

    pub fn face(&self, j: usize) -> Option<&TensorElement> {
        if j == self.missing || j > self.n {
            return None;
        }
        self.faces.get(if j < self.missing { j } else { j - 1 })
    }

    /// The value at vertex `v`, read from any face containing it.
    pub fn vertex(&self, v: usize) -> Result<GVector, McError> {
        let (j, x) = self.faces().find(|&(j, _)| j != v).ok_or(McError::IndexOutOfRange { index: v, n: self.n })?;
        Ok(x.evaluate_vertex(if v < j { v } else { v - 1 })?)
    }

    /// `I_chain(β)` for a chain missing some vertex `j ≠ i`, computed on face `j`.
    pub fn integrate(&self, chain: &[usize]) -> Result<GVector, McError> {
        let j = (0..=self.n)
            .find(|v| *v != self.missing && !chain.contains(v))
            .ok_or(McError::IndexOutOfRange { index: self.n, n: self.n })?;
        let x = self.face(j).expect("face present");
        let local: Vec<usize> = chain.iter().map(|&v| if v < j { v } else { v - 1 }).collect();
        Ok(x.integrate(&local)?)
    }

    /// An extension to `𝔤 ⊗ Ω_n` of total degree 1, by the standard filler
    /// of the simplicial vector space `𝔤 ⊗ Ω_•`.
    pub fn linear_extension(&self) -> Result<TensorElement, McError> {
        let (n, i) = (self.n, self.missing);
        let mut w = TensorElement::zero(n);
        for r in 0..i {
            let x = self.face(r).expect("face present");
            let mut diff = x.clone();
            diff.add_scaled(&face(&w, r)?, &-Rational::one());
            w.add_scaled(&degenerate(&diff, r)?, &Rational::one());
        }
        for r in (i + 1..=n).rev() {
            let x = self.face(r).expect("face present");
            let mut diff = x.clone();
            diff.add_scaled(&face(&w, r)?, &-Rational::one());
            w.add_scaled(&degenerate(&diff, r - 1)?, &Rational::one());
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::Form;
    use crate::io::fixtures;

    fn tensor(alg: &Presentation, n: usize, parts: &[(&str, &str)]) -> TensorElement {
        let mut out = TensorElement::zero(n);
        for (sym, form) in parts {
            let f = crate::forms::parse_form(n, form).unwrap();
            out.add_scaled(&TensorElement::single(alg.index_of(sym).unwrap(), f), &Rational::one());
        }
        out
    }

    #[test]
    fn abelian_solution_is_linear() {
        let alg = fixtures::get("abelian_delta");
        let s = Solver::new(&alg).unwrap();
        let nu = tensor(&alg, 1, &[("q", "t1")]).differential(&alg);
        let mu = GVector::basis(alg.index_of("m2").unwrap());
        let alpha = s.solve_mc(1, 0, &mu, &nu).unwrap();
        let mut expect = TensorElement::from_vector(&mu, 1);
        expect.add_scaled(&nu, &Rational::one());
        assert_eq!(alpha, expect);
        assert!(s.is_mc_simplex(&alpha).unwrap());
    }

    #[test]
    fn dg_pair_gauge_fixed_example() {
        let alg = fixtures::get("dg_pair");
        let s = Solver::new(&alg).unwrap();
        // ν = (d+δ)(ω_1 ⊗ e0)
        let nu = TensorElement::single(0, Form::t(1, 1).unwrap()).differential(&alg);
        let alpha = s.solve_gauge_fixed(1, 0, &GVector::zero(), &nu).unwrap();
        assert!(s.is_gamma_simplex(&alpha).unwrap());
        assert_eq!(alpha.render(&alg), "e0: dt1; e1: t1");
    }

    #[test]
    fn heisenberg_mc_on_two_simplex() {
        let alg = fixtures::get("heisenberg");
        let s = Solver::new(&alg).unwrap();
        let beta = tensor(&alg, 2, &[("e1", "t1"), ("e2", "t2")]);
        let nu = beta.differential(&alg);
        let alpha = s.solve_mc(2, 0, &GVector::zero(), &nu).unwrap();
        assert!(s.is_mc_simplex(&alpha).unwrap());
        let (mu, r) = s.mc_data(&alpha, 0).unwrap();
        assert!(mu.is_zero());
        assert_eq!(s.solve_mc(2, 0, &mu, &r).unwrap(), alpha);
    }
}

#[cfg(test)]
mod sampled {
    use super::*;
    use crate::io::fixtures;
    use crate::sample;

    #[test]
    fn round_trips_and_fillers() {
        let mut rng = sample::rng(7);
        for name in ["heisenberg", "dglie01", "abelian_delta", "dg_pair", "linfty3"] {
            let alg = fixtures::get(name);
            let s = Solver::new(&alg).unwrap();
            for n in 1..=3 {
                let mu = sample::mc_element(&s, 2, &mut rng).unwrap();
                assert!(alg.is_mc(&mu).unwrap(), "{name}");
                let i = n / 2;
                let nu = sample::mc_parameter(&s, n, i, 2, &mut rng).unwrap();
                let alpha = s.solve_mc(n, i, &mu, &nu).unwrap();
                assert!(s.is_mc_simplex(&alpha).unwrap(), "{name} n={n}");
                let (m2, r2) = s.mc_data(&alpha, i).unwrap();
                assert_eq!((&m2, &r2), (&mu, &nu), "{name} n={n} mc data");

                let nu = sample::gauge_parameter(&s, n, i, 2, &mut rng).unwrap();
                let alpha = s.solve_gauge_fixed(n, i, &mu, &nu).unwrap();
                assert!(s.is_gamma_simplex(&alpha).unwrap(), "{name} n={n} gamma");
                let (m2, r2) = s.gauge_data(&alpha, i).unwrap();
                assert_eq!((&m2, &r2), (&mu, &nu), "{name} n={n} gauge data");

                for missing in 0..=n {
                    let horn = Horn::from_simplex(&alpha, missing).unwrap();
                    let filler = s.fill_horn_gamma(&horn).unwrap();
                    assert!(s.is_gamma_simplex(&filler).unwrap());
                    assert!(is_thin(&filler).unwrap(), "{name} n={n} i={missing}");
                    assert_eq!(Horn::from_simplex(&filler, missing).unwrap(), horn, "{name} n={n} i={missing}");
                    let mc_filler = s.fill_horn_mc(&horn).unwrap();
                    assert!(s.is_mc_simplex(&mc_filler).unwrap());
                    assert_eq!(Horn::from_simplex(&mc_filler, missing).unwrap(), horn, "{name} mc n={n} i={missing}");
                }
            }
        }
    }
}

#[cfg(test)]
mod relative {
    use super::*;
    use crate::io::fixtures;
    use crate::linfty::Generator;
    use crate::sample;

    fn gens(spec: &[(&str, i32)]) -> Vec<Generator> {
        spec.iter().map(|(s, d)| Generator { symbol: s.to_string(), degree: *d }).collect()
    }

    #[test]
    fn heisenberg_to_abelianization() {
        let heis = fixtures::get("heisenberg");
        let ab = Presentation::new("ab", gens(&[("y1", 0), ("y2", 0)]), vec![], None).unwrap();
        let f = StrictMorphism::new(&heis, &ab, vec![GVector::basis(0), GVector::basis(1), GVector::zero()]).unwrap();
        let (sg, sh) = (Solver::new(&heis).unwrap(), Solver::new(&ab).unwrap());
        let mut rng = sample::rng(11);
        for n in 2..=3 {
            for missing in 0..=n {
                let alpha = sample::gamma_simplex(&sg, n, &mut rng).unwrap();
                let horn = Horn::from_simplex(&alpha, missing).unwrap();
                let image = Horn::new(n, missing, horn.faces().map(|(_, x)| f.apply_tensor(x)).collect()).unwrap();
                let target = sh.fill_horn_gamma(&image).unwrap();
                let lifted = fill_horn_relative(&sg, &f, &horn, &target).unwrap();
                assert_eq!(f.apply_tensor(&lifted), target);
                assert_eq!(Horn::from_simplex(&lifted, missing).unwrap(), horn);
                assert!(sg.is_gamma_simplex(&lifted).unwrap());
            }
        }
    }

    #[test]
    fn identity_returns_target() {
        let heis = fixtures::get("heisenberg");
        let id = StrictMorphism::new(&heis, &heis, (0..3).map(GVector::basis).collect()).unwrap();
        let s = Solver::new(&heis).unwrap();
        let mut rng = sample::rng(5);
        let target = sample::gamma_simplex(&s, 2, &mut rng).unwrap();
        let horn = Horn::from_simplex(&target, 1).unwrap();
        assert_eq!(fill_horn_relative(&s, &id, &horn, &target).unwrap(), target);
    }

    #[test]
    fn abelian_surjection_with_kernel() {
        // u, v ↦ y and w ↦ z, with δu = w, δy = z; the kernel is spanned by u - v
        let src = Presentation::new(
            "src",
            gens(&[("u", -1), ("v", -1), ("w", 0)]),
            vec![(vec![0], GVector::basis(2)), (vec![1], GVector::basis(2))],
            None,
        )
        .unwrap();
        let tgt = Presentation::new("tgt", gens(&[("y", -1), ("z", 0)]), vec![(vec![0], GVector::basis(1))], None).unwrap();
        let f = StrictMorphism::new(&src, &tgt, vec![GVector::basis(0), GVector::basis(0), GVector::basis(1)]).unwrap();
        let (sg, sh) = (Solver::new(&src).unwrap(), Solver::new(&tgt).unwrap());
        let mut rng = sample::rng(2);
        let alpha = sample::gamma_simplex(&sg, 2, &mut rng).unwrap();
        let horn = Horn::from_simplex(&alpha, 0).unwrap();
        let image = Horn::new(2, 0, horn.faces().map(|(_, x)| f.apply_tensor(x)).collect()).unwrap();
        let top = GVector::basis(0).scale(&crate::rational::int(3));
        let target = sh.fill_horn_with_top(&image, &top).unwrap();
        assert_eq!(top_integral(&target).unwrap(), top);
        let lifted = fill_horn_relative(&sg, &f, &horn, &target).unwrap();
        assert_eq!(f.apply_tensor(&lifted), target);
        let plain = sg.fill_horn_gamma(&horn).unwrap();
        let diff = &top_integral(&lifted).unwrap() - &top_integral(&plain).unwrap();
        assert_eq!(diff, GVector::basis(0).scale(&crate::rational::int(3)));
        assert!(f.apply(&(&diff - &GVector::basis(0).scale(&crate::rational::int(3)))).is_zero());
    }

    #[test]
    fn non_surjective_rejected() {
        let heis = fixtures::get("heisenberg");
        let ab = Presentation::new("ab", gens(&[("y1", 0), ("y2", 0)]), vec![], None).unwrap();
        let f = StrictMorphism::new(&heis, &ab, vec![GVector::basis(0), GVector::zero(), GVector::zero()]).unwrap();
        assert!(matches!(f.check_surjective(), Err(McError::NotSurjective(0))));
    }
}
