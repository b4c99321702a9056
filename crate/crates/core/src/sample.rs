//! Seeded sampling of rationals, vectors, forms and simplices.

use crate::forms::Form;
use crate::linfty::{GVector, Presentation, TensorElement};
use crate::mc::{McError, Solver};
use crate::rational::{frac, int, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A value from `{0, ±1, ±1/2, ±2}`.
pub fn small_rational(rng: &mut SampleRng) -> Rational {
    let choices = [int(0), int(1), int(-1), frac(1, 2), frac(-1, 2), int(2), int(-2)];
    choices.choose(rng).expect("nonempty").clone()
}

/// A nonzero value from `{±1, ±1/2, ±2}`.
pub fn nonzero_rational(rng: &mut SampleRng) -> Rational {
    let choices = [int(1), int(-1), frac(1, 2), frac(-1, 2), int(2), int(-2)];
    choices.choose(rng).expect("nonempty").clone()
}

/// A random element of degree `d`.
pub fn vector_of_degree(alg: &Presentation, d: i32, rng: &mut SampleRng) -> GVector {
    GVector::from_terms(alg.basis_of_degree(d).into_iter().map(|i| (i, small_rational(rng))))
}

/// A random form of exterior degree `k` with a few monomial terms of
/// polynomial degree at most `max_degree`.
pub fn form_of_degree(n: usize, k: usize, max_degree: u32, terms: usize, rng: &mut SampleRng) -> Form {
    let mut out = Form::zero(n);
    if k > n {
        return out;
    }
    for _ in 0..terms {
        let mut ext: Vec<usize> = (1..=n).collect();
        ext.shuffle(rng);
        ext.truncate(k);
        ext.sort_unstable();
        let mut exps = vec![0u32; n];
        let total = rng.gen_range(0..=max_degree);
        for _ in 0..total {
            if n > 0 {
                exps[rng.gen_range(0..n)] += 1;
            }
        }
        let m = Form::monomial(n, &exps, &ext, small_rational(rng)).expect("valid monomial");
        out.add_assign_scaled(&m, &Rational::from_integer(1.into()));
    }
    out
}

/// A random element of `𝔤 ⊗ Ω_n` of total degree `t`.
pub fn tensor_of_degree(alg: &Presentation, n: usize, t: i32, max_degree: u32, rng: &mut SampleRng) -> TensorElement {
    let mut out = TensorElement::zero(n);
    for (i, g) in alg.generators().iter().enumerate() {
        let k = t - g.degree;
        if k < 0 || k as usize > n || rng.gen_bool(0.4) {
            continue;
        }
        let f = form_of_degree(n, k as usize, max_degree, 2, rng);
        out.add_scaled(&TensorElement::single(i, f), &Rational::from_integer(1.into()));
    }
    out
}

/// Random data `ν = R^i γ` for the Maurer–Cartan solver.
pub fn mc_parameter(solver: &Solver<'_>, n: usize, i: usize, max_degree: u32, rng: &mut SampleRng) -> Result<TensorElement, McError> {
    let gamma = tensor_of_degree(solver.algebra(), n, 1, max_degree, rng);
    solver.r_operator(&gamma, i)
}

/// Random Whitney data `ν = P R^i γ` for the gauge-fixed solver.
pub fn gauge_parameter(solver: &Solver<'_>, n: usize, i: usize, max_degree: u32, rng: &mut SampleRng) -> Result<TensorElement, McError> {
    Ok(mc_parameter(solver, n, i, max_degree, rng)?.whitney_p()?)
}

/// A random Maurer–Cartan element reached from 0 by a few gauge motions.
pub fn mc_element(solver: &Solver<'_>, steps: usize, rng: &mut SampleRng) -> Result<GVector, McError> {
    let mut mu = GVector::zero();
    for _ in 0..steps {
        let nu = gauge_parameter(solver, 1, 0, 1, rng)?;
        let alpha = solver.solve_gauge_fixed(1, 0, &mu, &nu)?;
        mu = alpha.evaluate_vertex(1)?;
    }
    Ok(mu)
}

/// A random simplex of `γ_n(𝔤)`.
pub fn gamma_simplex(solver: &Solver<'_>, n: usize, rng: &mut SampleRng) -> Result<TensorElement, McError> {
    let mu = mc_element(solver, 1, rng)?;
    let i = rng.gen_range(0..=n);
    let nu = gauge_parameter(solver, n, i, 1, rng)?;
    solver.solve_gauge_fixed(n, i, &mu, &nu)
}

/// A random simplex of `MC_n(𝔤)`.
pub fn mc_simplex(solver: &Solver<'_>, n: usize, max_degree: u32, rng: &mut SampleRng) -> Result<TensorElement, McError> {
    let mu = mc_element(solver, 1, rng)?;
    let i = rng.gen_range(0..=n);
    let nu = mc_parameter(solver, n, i, max_degree, rng)?;
    solver.solve_mc(n, i, &mu, &nu)
}
