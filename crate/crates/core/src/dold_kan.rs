//! Comparison of `γ_•(𝔤)` with normalized cochains for abelian algebras.

use crate::dupont::{elementary_form, increasing_sequences};
use crate::forms::{monomial_generators, Basis};
use crate::linalg::{kernel, rank};
use crate::linfty::{GVector, Presentation, TensorElement};
use crate::mc::McError;
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Evidence for `γ_n(𝔤) ≅ Z^0(C^*(Δ^n) ⊗ 𝔤[1])`.
#[derive(Debug, Clone)]
pub struct DoldKanReport {
    pub n: usize,
    pub max_degree: u32,
    /// Dimension of the Maurer–Cartan, gauge-fixed elements of polynomial
    /// degree at most `max_degree`, found without assuming Whitney form.
    pub brute_dim: usize,
    /// Dimension of the closed Whitney elements.
    pub gamma_dim: usize,
    /// Dimension of the normalized cochain cocycles.
    pub cocycle_dim: usize,
    pub all_whitney: bool,
    /// Integration sends a basis of `γ_n` to a basis of the cocycles.
    pub bijective: bool,
    /// A basis of `γ_n` with its cochain image `J ↦ I_J(α)`.
    pub basis: Vec<(TensorElement, Vec<(Vec<usize>, GVector)>)>,
}

impl DoldKanReport {
    pub fn passed(&self) -> bool {
        self.all_whitney && self.bijective && self.brute_dim == self.gamma_dim && self.gamma_dim == self.cocycle_dim
    }
}

#[derive(Default)]
struct Coordinates {
    index: BTreeMap<(usize, Basis), usize>,
}

impl Coordinates {
    fn add(&mut self, t: &TensorElement) {
        for (g, f) in t.components() {
            for (b, _) in f.terms() {
                let next = self.index.len();
                self.index.entry((g, b.clone())).or_insert(next);
            }
        }
    }

    fn dense(&self, t: &TensorElement) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.index.len()];
        for (g, f) in t.components() {
            for (b, c) in f.terms() {
                v[self.index[&(g, b.clone())]] = c.clone();
            }
        }
        v
    }
}

/// Kernel of a family of linear maps on the span of `unknowns`.
fn joint_kernel(unknowns: &[TensorElement], maps: &[&dyn Fn(&TensorElement) -> Result<TensorElement, McError>]) -> Result<Vec<TensorElement>, McError> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for map in maps {
        let images: Vec<TensorElement> = unknowns.iter().map(|u| map(u)).collect::<Result<_, _>>()?;
        let mut coords = Coordinates::default();
        images.iter().for_each(|t| coords.add(t));
        let cols: Vec<Vec<Rational>> = images.iter().map(|t| coords.dense(t)).collect();
        for r in 0..coords.index.len() {
            rows.push(cols.iter().map(|c| c[r].clone()).collect());
        }
    }
    let n = unknowns.first().map(|u| u.dim()).unwrap_or(0);
    Ok(kernel(&rows, unknowns.len())
        .into_iter()
        .map(|v| {
            let mut t = TensorElement::zero(n);
            for (u, c) in unknowns.iter().zip(&v) {
                t.add_scaled(u, c);
            }
            t
        })
        .collect())
}

/// Increasing subsets of `[n]` in order of size, then lexicographically.
fn faces_of(n: usize) -> Vec<Vec<usize>> {
    (1..=n + 1).flat_map(|len| increasing_sequences(n, len)).collect()
}

/// Cocycles of `C^*(Δ^n) ⊗ 𝔤[1]` in total degree 0, with differential
/// `∂ ⊗ 1 + (-1)^k 1 ⊗ δ` on cochains of degree `k`, where
/// `(∂c)_J = Σ_p (-1)^p c_{J∖j_p}`. Coordinates are `(J, generator)` pairs.
pub fn cochain_cocycles(alg: &Presentation, n: usize) -> (Vec<(Vec<usize>, usize)>, Vec<Vec<Rational>>) {
    let mut slots = Vec::new();
    for j in faces_of(n) {
        for g in alg.basis_of_degree(2 - j.len() as i32) {
            slots.push((j.clone(), g));
        }
    }
    let pos: BTreeMap<(Vec<usize>, usize), usize> = slots.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    // one equation per (J, generator of degree 3 - |J|)
    let mut rows = Vec::new();
    for j in faces_of(n) {
        let k = j.len() as i64 - 1;
        for target in alg.basis_of_degree(3 - j.len() as i32) {
            let mut row = vec![Rational::zero(); slots.len()];
            if j.len() >= 2 {
                for p in 0..j.len() {
                    let mut sub = j.clone();
                    sub.remove(p);
                    if let Some(&col) = pos.get(&(sub, target)) {
                        row[col] += if p % 2 == 0 { Rational::one() } else { -Rational::one() };
                    }
                }
            }
            for (src, c) in alg.table().filter(|(args, _)| args.len() == 1).map(|(a, v)| (a[0], v.coefficient(target))) {
                if let Some(&col) = pos.get(&(j.clone(), src)) {
                    let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
                    row[col] += c * sign;
                }
            }
            rows.push(row);
        }
    }
    let z = kernel(&rows, slots.len());
    (slots, z)
}

pub fn dold_kan_compare(alg: &Presentation, n: usize, max_degree: u32) -> Result<DoldKanReport, McError> {
    if !alg.is_abelian() {
        return Err(McError::NotAbelian);
    }
    let mut unknowns = Vec::new();
    for (g, gen) in alg.generators().iter().enumerate() {
        let k = 1 - gen.degree;
        if k < 0 || k as usize > n {
            continue;
        }
        for m in monomial_generators(n, max_degree) {
            if m.degrees().contains(&(k as usize)) {
                unknowns.push(TensorElement::single(g, m));
            }
        }
    }
    let differential = |t: &TensorElement| Ok(t.differential(alg));
    let gauge = |t: &TensorElement| Ok(t.dupont_s(alg)?);
    let brute = joint_kernel(&unknowns, &[&differential, &gauge])?;
    let mut all_whitney = true;
    for t in &brute {
        if &t.whitney_p()? != t {
            all_whitney = false;
        }
    }

    let mut whitney_unknowns = Vec::new();
    for j in faces_of(n) {
        let omega = elementary_form(n, &j)?;
        for g in alg.basis_of_degree(2 - j.len() as i32) {
            whitney_unknowns.push(TensorElement::single(g, omega.clone()));
        }
    }
    let gamma = joint_kernel(&whitney_unknowns, &[&differential])?;

    let (slots, cocycles) = cochain_cocycles(alg, n);
    let cochain = |t: &TensorElement| -> Result<Vec<Rational>, McError> {
        let mut v = Vec::with_capacity(slots.len());
        for (j, g) in &slots {
            v.push(t.integrate(j)?.coefficient(*g));
        }
        Ok(v)
    };
    let images: Vec<Vec<Rational>> = gamma.iter().map(&cochain).collect::<Result<_, _>>()?;
    let z_rank = rank(&cocycles, slots.len());
    let mut joint = cocycles.clone();
    joint.extend(images.iter().cloned());
    let bijective = rank(&images, slots.len()) == gamma.len()
        && gamma.len() == z_rank
        && rank(&joint, slots.len()) == z_rank;

    let basis = gamma
        .iter()
        .map(|t| {
            let faces = faces_of(n)
                .into_iter()
                .map(|j| Ok((j.clone(), t.integrate(&j)?)))
                .collect::<Result<Vec<_>, McError>>()?
                .into_iter()
                .filter(|(_, v)| !v.is_zero())
                .collect();
            Ok((t.clone(), faces))
        })
        .collect::<Result<_, McError>>()?;
    Ok(DoldKanReport {
        n,
        max_degree,
        brute_dim: brute.len(),
        gamma_dim: gamma.len(),
        cocycle_dim: cocycles.len(),
        all_whitney,
        bijective,
        basis,
    })
}
