//! Rooted-tree exponential, the closed 1-simplex formula and generalized
//! Campbell–Hausdorff series.

use crate::dupont::{elementary_form, increasing_sequences};
use crate::forms::Form;
use crate::linfty::{AlgebraError, GVector, Presentation, TensorElement};
use crate::mc::{McError, Solver};
use crate::nilmatrix::{MatrixError, Representation};
use crate::rational::{factorial, inv_factorial, Rational};
use num_traits::One;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BchError {
    #[error(transparent)]
    Mc(#[from] McError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("trees need at least one vertex")]
    EmptyTree,
    #[error("input x_{label} should have degree {expected}")]
    InputDegree { label: String, expected: i32 },
    #[error("input index set {0:?} is not an increasing subset of 1..=n")]
    InputIndex(Vec<usize>),
    #[error("operation requires an algebra concentrated in nonnegative degrees")]
    NegativeDegrees,
    #[error("operation requires a dg Lie algebra")]
    NotDgLie,
    #[error("no matrix representation for {0:?}")]
    UnknownRepresentation(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// A rooted tree given by its children, kept in canonical (sorted) order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedTree {
    children: Vec<RootedTree>,
    size: usize,
}

impl Ord for RootedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size.cmp(&other.size).then_with(|| self.children.cmp(&other.children))
    }
}

impl PartialOrd for RootedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl RootedTree {
    pub fn leaf() -> Self {
        RootedTree { children: Vec::new(), size: 1 }
    }

    pub fn with_children(mut children: Vec<RootedTree>) -> Self {
        children.sort();
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        RootedTree { children, size }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    /// Order of the automorphism group.
    pub fn symmetry(&self) -> num_bigint::BigInt {
        let mut out: num_bigint::BigInt = One::one();
        let mut run = 0u64;
        for (idx, c) in self.children.iter().enumerate() {
            out *= c.symmetry();
            run = if idx > 0 && self.children[idx - 1] == *c { run + 1 } else { 1 };
            out *= num_bigint::BigInt::from(run);
        }
        out
    }

    fn hook_product(&self) -> num_bigint::BigInt {
        self.children.iter().fold(num_bigint::BigInt::from(self.size), |acc, c| acc * c.hook_product())
    }

    /// Number of orderings of the vertices in which every vertex precedes
    /// its parent, counted up to automorphisms of the tree.
    pub fn coefficient(&self) -> num_bigint::BigInt {
        factorial(self.size as u64) / (self.hook_product() * self.symmetry())
    }

    /// Bracket notation, e.g. `[x,[x],[x]]` for the cherry.
    pub fn word(&self) -> String {
        let mut s = String::from("[x");
        for c in &self.children {
            s.push(',');
            s.push_str(&c.word());
        }
        s.push(']');
        s
    }
}

/// A tree with its coefficient in `ε^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeTerm {
    pub tree: RootedTree,
    pub coefficient: num_bigint::BigInt,
}

fn multisets_of_trees(
    budget: usize,
    max: Option<&RootedTree>,
    by_size: &[Vec<RootedTree>],
) -> Vec<Vec<RootedTree>> {
    if budget == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for size in 1..=budget {
        for t in &by_size[size] {
            if max.is_some_and(|m| t > m) {
                continue;
            }
            for mut rest in multisets_of_trees(budget - size, Some(t), by_size) {
                rest.push(t.clone());
                out.push(rest);
            }
        }
    }
    out
}

fn trees_by_size(k: usize) -> Vec<Vec<RootedTree>> {
    let mut by_size: Vec<Vec<RootedTree>> = vec![vec![]];
    for size in 1..=k {
        let mut trees: Vec<RootedTree> =
            multisets_of_trees(size - 1, None, &by_size).into_iter().map(RootedTree::with_children).collect();
        trees.sort();
        trees.dedup();
        by_size.push(trees);
    }
    by_size
}

/// All rooted trees with `k` vertices in canonical order, with coefficients.
pub fn enumerate_trees(k: usize) -> Result<Vec<TreeTerm>, BchError> {
    if k == 0 {
        return Err(BchError::EmptyTree);
    }
    static CACHE: OnceLock<std::sync::Mutex<BTreeMap<usize, Vec<TreeTerm>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("tree cache").get(&k) {
        return Ok(v.clone());
    }
    let terms: Vec<TreeTerm> = trees_by_size(k)
        .pop()
        .unwrap_or_default()
        .into_iter()
        .map(|tree| TreeTerm { coefficient: tree.coefficient(), tree })
        .collect();
    cache.lock().expect("tree cache").insert(k, terms.clone());
    Ok(terms)
}

fn check_mc(alg: &Presentation, mu: &GVector) -> Result<(), BchError> {
    let curv = alg.curvature(mu)?;
    if !curv.is_zero() {
        return Err(McError::NotMc(curv.render(alg)).into());
    }
    Ok(())
}

fn check_degree(alg: &Presentation, x: &GVector, d: i32, label: &str) -> Result<(), BchError> {
    if alg.degrees_of(x).iter().any(|&e| e != d) {
        return Err(BchError::InputDegree { label: label.to_string(), expected: d });
    }
    Ok(())
}

fn evaluate_tree(alg: &Presentation, mu: &GVector, x: &GVector, tree: &RootedTree) -> GVector {
    let values: Vec<GVector> = tree.children.iter().map(|c| evaluate_tree(alg, mu, x, c)).collect();
    let mut args: Vec<&GVector> = vec![x];
    args.extend(values.iter());
    alg.twisted_bracket(mu, &args)
}

/// `ε^k_μ(x)`: the sum over rooted trees with `k` vertices.
pub fn tree_exponential(alg: &Presentation, mu: &GVector, x: &GVector, k: usize) -> Result<GVector, BchError> {
    check_mc(alg, mu)?;
    check_degree(alg, x, 0, "x")?;
    let mut out = GVector::zero();
    for term in enumerate_trees(k)? {
        out.add_scaled(&evaluate_tree(alg, mu, x, &term.tree), &Rational::from_integer(term.coefficient));
    }
    Ok(out)
}

/// `ε^k_μ(x)` for `k = 1, 2, …` until the terms vanish for good.
fn exponential_terms(alg: &Presentation, mu: &GVector, x: &GVector) -> Result<Vec<GVector>, BchError> {
    let index = alg.nilpotency_index().ok_or_else(|| McError::NotNilpotent(alg.name().to_string()))?;
    let mut out = Vec::new();
    for k in 1..=index + 1 {
        out.push(tree_exponential(alg, mu, x, k)?);
    }
    while out.last().is_some_and(GVector::is_zero) {
        out.pop();
    }
    Ok(out)
}

/// The gauge-fixed 1-simplex `μ - Σ_k t_0^k/k! ε^k_μ(x) - x dt_0`, which
/// equals `μ` at vertex 1 and `ρ_1^μ(x)` at vertex 0.
pub fn alpha1(alg: &Presentation, mu: &GVector, x: &GVector) -> Result<TensorElement, BchError> {
    let terms = exponential_terms(alg, mu, x)?;
    let t0 = Form::t(1, 0).map_err(McError::from)?;
    let mut out = TensorElement::from_vector(mu, 1);
    for (k, e) in terms.iter().enumerate() {
        let power = t0.pow(k as u32 + 1).scale(&-inv_factorial(k as u64 + 1));
        out.add_scaled(&TensorElement::vector_times_form(e, &power), &Rational::one());
    }
    let dt0 = Form::dt(1, 0).map_err(McError::from)?;
    out.add_scaled(&TensorElement::vector_times_form(x, &dt0), &-Rational::one());
    Ok(out)
}

/// `ρ_1^μ(x) = μ - Σ_k 1/k! ε^k_μ(x)`.
pub fn rho1(alg: &Presentation, mu: &GVector, x: &GVector) -> Result<GVector, BchError> {
    let mut out = mu.clone();
    for (k, e) in exponential_terms(alg, mu, x)?.iter().enumerate() {
        out.add_scaled(e, &-inv_factorial(k as u64 + 1));
    }
    Ok(out)
}

/// Inputs `x_I ∈ 𝔤^{1-|I|}` indexed by increasing subsets `I ⊆ {1,…,n}`.
pub type ChInputs = BTreeMap<Vec<usize>, GVector>;

/// `ρ_n^μ` together with the solved simplex it was read from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChResult {
    pub value: GVector,
    pub simplex: TensorElement,
}

/// The generalized Campbell–Hausdorff series: solve for the gauge-fixed
/// simplex with `ε^0 α = μ` and Whitney data `(d+δ) Σ ω_I ⊗ x_I`, then
/// integrate over `(1,…,n)`.
pub fn generalized_ch(solver: &Solver<'_>, n: usize, mu: &GVector, inputs: &ChInputs) -> Result<ChResult, BchError> {
    let alg = solver.algebra();
    let mut beta = TensorElement::zero(n);
    for (set, x) in inputs {
        let valid = !set.is_empty() && set.windows(2).all(|w| w[0] < w[1]) && set.iter().all(|&v| (1..=n).contains(&v));
        if !valid {
            return Err(BchError::InputIndex(set.clone()));
        }
        let label: String = set.iter().map(|v| v.to_string()).collect();
        check_degree(alg, x, 1 - set.len() as i32, &label)?;
        let omega = elementary_form(n, set).map_err(McError::from)?;
        beta.add_scaled(&TensorElement::form_times_vector(alg, &omega, x), &Rational::one());
    }
    let nu = beta.differential(alg);
    let simplex = solver.solve_gauge_fixed(n, 0, mu, &nu)?;
    let top: Vec<usize> = (1..=n).collect();
    let value = simplex.integrate(&top).map_err(McError::from)?;
    Ok(ChResult { value, simplex })
}

/// `ρ_2^μ(x_1, x_2, x_12)`.
pub fn rho2(solver: &Solver<'_>, mu: &GVector, x1: &GVector, x2: &GVector, x12: &GVector) -> Result<GVector, BchError> {
    let inputs = ChInputs::from([(vec![1], x1.clone()), (vec![2], x2.clone()), (vec![1, 2], x12.clone())]);
    Ok(generalized_ch(solver, 2, mu, &inputs)?.value)
}

/// `ρ_3^μ(x_1, x_2, x_3)` with all higher inputs zero.
pub fn rho3_edges(solver: &Solver<'_>, mu: &GVector, xs: [&GVector; 3]) -> Result<GVector, BchError> {
    let inputs: ChInputs = (1..=3).map(|i| (vec![i], xs[i - 1].clone())).collect();
    Ok(generalized_ch(solver, 3, mu, &inputs)?.value)
}

pub fn rho3_associativity_check(solver: &Solver<'_>, mu: &GVector, xs: [&GVector; 3]) -> Result<bool, BchError> {
    Ok(rho3_edges(solver, mu, xs)?.is_zero())
}

/// All increasing subsets of `{1,…,n}`.
pub fn input_slots(n: usize) -> Vec<Vec<usize>> {
    (1..=n)
        .flat_map(|len| increasing_sequences(n, len).into_iter().filter(|s| !s.contains(&0)))
        .collect()
}

/// Deligne gauge action `e^X ⋆ α = α - Σ_n ad(X)^n (δX + [α,X]) / (n+1)!`
/// on a dg Lie algebra.
pub fn deligne_action(alg: &Presentation, alpha: &GVector, x: &GVector) -> Result<GVector, BchError> {
    if !alg.is_dg_lie() {
        return Err(BchError::NotDgLie);
    }
    check_mc(alg, alpha)?;
    check_degree(alg, x, 0, "X")?;
    let mut term = &alg.delta(x) + &alg.bracket(&[alpha, x]);
    let mut out = alpha.clone();
    let mut n = 0u64;
    while !term.is_zero() {
        out.add_scaled(&term, &-inv_factorial(n + 1));
        term = alg.bracket(&[x, &term]);
        n += 1;
    }
    Ok(out)
}

/// The gauge-fixed 1-simplex starting at `μ` with `I_{01} = x`.
pub fn edge(solver: &Solver<'_>, mu: &GVector, x: &GVector) -> Result<TensorElement, BchError> {
    Ok(generalized_ch(solver, 1, mu, &ChInputs::from([(vec![1], x.clone())]))?.simplex)
}

/// Composition through the thin filler of the horn `(x, -, y)`: the edge
/// `y` leaves `μ`, the edge `x` continues from its endpoint, and the result
/// is the edge `(0,2)` of the filler.
pub fn compose(solver: &Solver<'_>, mu: &GVector, x: &GVector, y: &GVector) -> Result<GVector, BchError> {
    let alg = solver.algebra();
    if alg.generators().iter().any(|g| g.degree < 0) {
        return Err(BchError::NegativeDegrees);
    }
    let first = edge(solver, mu, y)?;
    let mid = first.evaluate_vertex(1).map_err(McError::from)?;
    let second = edge(solver, &mid, x)?;
    let horn = crate::mc::Horn::new(2, 1, vec![second, first])?;
    let filler = solver.fill_horn_gamma(&horn)?;
    Ok(filler.integrate(&[0, 2]).map_err(McError::from)?)
}

/// Outcome of a seeded comparison against the matrix group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub samples: usize,
    pub failures: Vec<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `e^{x_2} = e^{x_1} e^{ρ_2(x_1,x_2,0)}` in a faithful matrix
/// representation: with `g_{ij} = e^{I_{ij}}`, the flat 2-simplex gives
/// `g_{02} = g_{01} g_{12}`.
pub fn verify_monodromy(rep_name: &str, samples: usize, seed: u64) -> Result<OracleReport, BchError> {
    let alg = crate::io::fixtures::load(rep_name).map_err(|_| BchError::UnknownRepresentation(rep_name.to_string()))?;
    let rep = Representation::standard(rep_name, &alg)?;
    let solver = Solver::new(&alg)?;
    let mut rng = crate::sample::rng(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let x1 = crate::sample::vector_of_degree(&alg, 0, &mut rng);
        let x2 = crate::sample::vector_of_degree(&alg, 0, &mut rng);
        let rho = rho2(&solver, &GVector::zero(), &x1, &x2, &GVector::zero())?;
        let lhs = rep.apply(&x2).exp();
        let rhs = rep.apply(&x1).exp().mul(&rep.apply(&rho).exp());
        if lhs != rhs {
            failures.push(format!("x1 = {}, x2 = {}, rho2 = {}", x1.render(&alg), x2.render(&alg), rho.render(&alg)));
        }
    }
    Ok(OracleReport { samples, failures })
}

/// Checks `e^{compose(x,y)} = e^y e^x` on seeded samples.
pub fn verify_compose_table(rep_name: &str, samples: usize, seed: u64) -> Result<OracleReport, BchError> {
    let alg = crate::io::fixtures::load(rep_name).map_err(|_| BchError::UnknownRepresentation(rep_name.to_string()))?;
    let rep = Representation::standard(rep_name, &alg)?;
    let solver = Solver::new(&alg)?;
    let mut rng = crate::sample::rng(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let x = crate::sample::vector_of_degree(&alg, 0, &mut rng);
        let y = crate::sample::vector_of_degree(&alg, 0, &mut rng);
        let xy = compose(&solver, &GVector::zero(), &x, &y)?;
        if rep.apply(&xy).exp() != rep.apply(&y).exp().mul(&rep.apply(&x).exp()) {
            failures.push(format!("x = {}, y = {}, compose = {}", x.render(&alg), y.render(&alg), xy.render(&alg)));
        }
    }
    Ok(OracleReport { samples, failures })
}

/// `ε^0, …, ε^{k_max}` from `ε^1 = [x]_μ` and
/// `ε^{k+1} = Σ_n 1/n! Σ_{k_1+…+k_n=k} k!/(k_1!⋯k_n!) [x, ε^{k_1}, …, ε^{k_n}]_μ`.
pub fn exponential_by_recursion(alg: &Presentation, mu: &GVector, x: &GVector, k_max: usize) -> Vec<GVector> {
    fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
        if parts == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        (1..=total)
            .flat_map(|first| {
                compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }
    let mut eps = vec![GVector::zero(), alg.twisted_bracket(mu, &[x])];
    for k in 1..k_max {
        let mut next = GVector::zero();
        for parts in 1..=k {
            for comp in compositions(k, parts) {
                let mut weight = Rational::from_integer(factorial(k as u64)) * inv_factorial(parts as u64);
                for &c in &comp {
                    weight *= inv_factorial(c as u64);
                }
                let mut args = vec![x];
                args.extend(comp.iter().map(|&c| &eps[c]));
                next.add_scaled(&alg.twisted_bracket(mu, &args), &weight);
            }
        }
        eps.push(next);
    }
    eps
}


/// Orientation sign relating the computed `ρ_2` to the displayed series.
pub const RHO2_ORIENTATION: i64 = -1;

/// One basis coefficient of `ρ_2` in the free model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rho2Row {
    pub term: String,
    pub displayed: Rational,
    pub computed: Rational,
}

impl Rho2Row {
    pub fn matches(&self) -> bool {
        self.displayed == self.computed
    }
}

/// Bracket count of a free-model basis name: `[x1,dx2]` has two.
fn bracket_count(name: &str) -> usize {
    name.matches(',').count() + name.matches('d').count()
}

/// The displayed second-order expansion of `ρ_2` evaluated in `alg`.
pub fn displayed_rho2(alg: &Presentation, x1: &GVector, x2: &GVector, x12: &GVector) -> GVector {
    let half = crate::rational::frac(1, 2);
    let sum = x1 + x2;
    let b12 = alg.bracket(&[x1, x2]);
    let dsum = alg.delta(&sum);
    let dx12 = alg.delta(x12);
    let mut out = x1 - x2;
    out.add_scaled(&b12, &half);
    out.add_scaled(&dx12, &half);
    out.add_scaled(&alg.bracket(&[&sum, &b12]), &crate::rational::frac(1, 12));
    out.add_scaled(&alg.bracket(&[&dsum, x1, x2]), &crate::rational::frac(1, 6));
    out.add_scaled(&alg.bracket(&[&dsum, x12]), &crate::rational::frac(1, 6));
    out.add_scaled(&alg.bracket(&[&sum, &dx12]), &crate::rational::frac(-1, 12));
    out
}

/// Compares `RHO2_ORIENTATION · ρ_2(x_1, x_2, x_{12})` with the displayed
/// series on every basis element with at most two brackets.
pub fn compare_rho2_with_displayed(solver: &Solver<'_>) -> Result<Vec<Rho2Row>, BchError> {
    let alg = solver.algebra();
    let g = |s: &str| alg.index_of(s).map(GVector::basis);
    let (x1, x2, x12) = (g("x1")?, g("x2")?, g("x12")?);
    let computed = rho2(solver, &GVector::zero(), &x1, &x2, &x12)?.scale(&Rational::from_integer(RHO2_ORIENTATION.into()));
    let displayed = displayed_rho2(alg, &x1, &x2, &x12);
    let mut support: Vec<usize> = computed.support().chain(displayed.support()).collect();
    support.sort_unstable();
    support.dedup();
    Ok(support
        .into_iter()
        .filter(|&i| bracket_count(&alg.generators()[i].symbol) <= 2)
        .map(|i| Rho2Row {
            term: alg.generators()[i].symbol.clone(),
            displayed: displayed.coefficient(i),
            computed: computed.coefficient(i),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::fixtures;

    #[test]
    fn tree_counts_and_small_terms() {
        let counts: Vec<usize> = (1..=5).map(|k| enumerate_trees(k).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9]);
        let three = enumerate_trees(3).unwrap();
        let words: Vec<String> = three.iter().map(|t| t.tree.word()).collect();
        assert_eq!(words, vec!["[x,[x],[x]]", "[x,[x,[x]]]"]);
        assert!(three.iter().all(|t| t.coefficient == 1.into()));
        assert!(enumerate_trees(0).is_err());
    }

    #[test]
    fn abelian_rho1_and_alpha1() {
        let alg = fixtures::get("abelian_delta");
        let x = GVector::basis(alg.index_of("r").unwrap());
        let mu = GVector::basis(alg.index_of("m2").unwrap());
        let m = GVector::basis(alg.index_of("m").unwrap());
        assert_eq!(rho1(&alg, &mu, &x).unwrap(), &mu - &m);
        let a = alpha1(&alg, &mu, &x).unwrap();
        assert!(alg.tensor_is_mc(&a).unwrap());
        assert_eq!(a.evaluate_vertex(0).unwrap(), rho1(&alg, &mu, &x).unwrap());
        assert_eq!(a.evaluate_vertex(1).unwrap(), mu);
    }

    /// Brute force over recursive trees: vertex `i` picks a parent among `0..i`.
    fn increasing_labelings(k: usize) -> BTreeMap<RootedTree, u64> {
        fn shape(parents: &[usize], v: usize) -> RootedTree {
            let kids = (0..parents.len()).filter(|&c| c != 0 && parents[c] == v).map(|c| shape(parents, c)).collect();
            RootedTree::with_children(kids)
        }
        let mut counts = BTreeMap::new();
        let mut parents = vec![0usize; k];
        loop {
            *counts.entry(shape(&parents, 0)).or_insert(0) += 1;
            let mut i = k - 1;
            loop {
                if i == 0 {
                    return counts;
                }
                if parents[i] + 1 < i {
                    parents[i] += 1;
                    break;
                }
                parents[i] = 0;
                i -= 1;
            }
        }
    }

    #[test]
    fn tree_coefficients_match_brute_force() {
        for k in 1..=7 {
            let oracle = increasing_labelings(k);
            let terms = enumerate_trees(k).unwrap();
            assert_eq!(terms.len(), oracle.len());
            for t in terms {
                assert_eq!(t.coefficient, oracle[&t.tree].into(), "{}", t.tree.word());
            }
        }
    }

    #[test]
    fn tree_sum_satisfies_ode_recursion() {
        let mut rng = crate::sample::rng(11);
        for name in ["linfty_tree", "dglie01", "linfty3"] {
            let alg = fixtures::get(name);
            for _ in 0..4 {
                let x = crate::sample::vector_of_degree(&alg, 0, &mut rng);
                let eps = exponential_by_recursion(&alg, &GVector::zero(), &x, 5);
                for (k, e) in eps.iter().enumerate().skip(1) {
                    assert_eq!(&tree_exponential(&alg, &GVector::zero(), &x, k).unwrap(), e, "{name} k={k}");
                }
            }
        }
        let alg = fixtures::get("linfty_tree");
        let a = GVector::basis(0);
        let v = GVector::basis(2);
        let r = GVector::basis(3);
        assert_eq!(tree_exponential(&alg, &GVector::zero(), &a, 3).unwrap(), v);
        assert_eq!(tree_exponential(&alg, &GVector::zero(), &a, 5).unwrap(), r.scale(&Rational::from_integer(4.into())));
    }

    #[test]
    fn alpha1_is_the_gauge_fixed_solution() {
        let mut rng = crate::sample::rng(5);
        for name in ["linfty_tree", "dglie01", "free3", "dg_pair"] {
            let alg = fixtures::get(name);
            let solver = Solver::new(&alg).unwrap();
            for _ in 0..3 {
                let mu = crate::sample::mc_element(&solver, 2, &mut rng).unwrap();
                let x = crate::sample::vector_of_degree(&alg, 0, &mut rng);
                let a = alpha1(&alg, &mu, &x).unwrap();
                assert!(solver.is_gamma_simplex(&a).unwrap(), "{name}");
                let nu = TensorElement::vector_times_form(&x, &Form::t(1, 0).unwrap()).differential(&alg);
                let solved = solver.solve_gauge_fixed(1, 1, &mu, &nu.scale(&-Rational::one())).unwrap();
                assert_eq!(solved, a, "{name}");
                assert_eq!(a.integrate(&[0, 1]).unwrap(), x);
                assert_eq!(a.evaluate_vertex(0).unwrap(), rho1(&alg, &mu, &x).unwrap());
                let ch = generalized_ch(&solver, 1, &mu, &ChInputs::from([(vec![1], -&x)])).unwrap();
                assert_eq!(ch.value, rho1(&alg, &mu, &x).unwrap(), "{name}");
                if alg.is_dg_lie() {
                    assert_eq!(deligne_action(&alg, &mu, &x).unwrap(), ch.value);
                }
            }
        }
    }

    #[test]
    fn rho2_in_free_model() {
        let alg = fixtures::get("free3");
        let solver = Solver::new(&alg).unwrap();
        let g = |s: &str| GVector::basis(alg.index_of(s).unwrap());
        let r = rho2(&solver, &GVector::zero(), &g("x1"), &g("x2"), &GVector::zero()).unwrap();
        assert_eq!(r.render(&alg), "-x1 + x2 - 1/2*[x1,x2] + 1/12*[x1,[x1,x2]] + 1/12*[x2,[x1,x2]]");
        let same = rho2(&solver, &GVector::zero(), &g("x1"), &g("x1"), &GVector::zero()).unwrap();
        assert!(same.is_zero());
        let abelian = fixtures::get("abelian_delta");
        let s = Solver::new(&abelian).unwrap();
        let ga = |s: &str| GVector::basis(abelian.index_of(s).unwrap());
        let r = rho2(&s, &GVector::zero(), &ga("r"), &GVector::zero(), &GVector::zero()).unwrap();
        assert_eq!(r, -&ga("r"));
    }

    #[test]
    fn matrix_oracles() {
        for name in ["heisenberg", "ut4"] {
            let report = verify_monodromy(name, 10, 3).unwrap();
            assert!(report.passed(), "{:?}", report.failures);
            let report = verify_compose_table(name, 5, 4).unwrap();
            assert!(report.passed(), "{:?}", report.failures);
        }
        assert!(matches!(verify_monodromy("so3", 1, 0), Err(BchError::UnknownRepresentation(_))));
    }

    #[test]
    fn compose_units_and_abelian() {
        let alg = fixtures::get("dglie01");
        let solver = Solver::new(&alg).unwrap();
        let mut rng = crate::sample::rng(8);
        let mu = crate::sample::mc_element(&solver, 2, &mut rng).unwrap();
        let x = crate::sample::vector_of_degree(&alg, 0, &mut rng);
        assert_eq!(compose(&solver, &mu, &x, &GVector::zero()).unwrap(), x);
        assert_eq!(compose(&solver, &mu, &GVector::zero(), &x).unwrap(), x);
        let free = fixtures::get("free3");
        assert!(matches!(compose(&Solver::new(&free).unwrap(), &GVector::zero(), &x, &x), Err(BchError::NegativeDegrees)));
    }

    #[test]
    fn compose_is_associative_on_dg_lie() {
        let alg = fixtures::get("dglie01");
        let solver = Solver::new(&alg).unwrap();
        let mut rng = crate::sample::rng(9);
        for _ in 0..2 {
            let mu = crate::sample::mc_element(&solver, 2, &mut rng).unwrap();
            let [w, y, z]: [GVector; 3] = std::array::from_fn(|_| crate::sample::vector_of_degree(&alg, 0, &mut rng));
            let after_w = edge(&solver, &mu, &w).unwrap().evaluate_vertex(1).unwrap();
            let left = compose(&solver, &mu, &compose(&solver, &after_w, &z, &y).unwrap(), &w).unwrap();
            let right = compose(&solver, &mu, &z, &compose(&solver, &mu, &y, &w).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn deligne_action_is_a_left_action() {
        let alg = fixtures::get("dglie01");
        let solver = Solver::new(&alg).unwrap();
        let mut rng = crate::sample::rng(10);
        for _ in 0..5 {
            let mu = crate::sample::mc_element(&solver, 2, &mut rng).unwrap();
            let x = crate::sample::vector_of_degree(&alg, 0, &mut rng);
            let y = crate::sample::vector_of_degree(&alg, 0, &mut rng);
            let moved = deligne_action(&alg, &mu, &x).unwrap();
            assert!(alg.is_mc(&moved).unwrap());
            let twice = deligne_action(&alg, &deligne_action(&alg, &mu, &y).unwrap(), &x).unwrap();
            // 𝔤⁰ of this fixture has class 2, so log(e^x e^y) = x + y + [x,y]/2.
            let mut bch = &x + &y;
            bch.add_scaled(&alg.bracket(&[&x, &y]), &crate::rational::frac(1, 2));
            assert_eq!(twice, deligne_action(&alg, &mu, &bch).unwrap());
        }
        let abelian = fixtures::get("abelian_delta");
        let x = GVector::basis(abelian.index_of("r").unwrap());
        assert_eq!(deligne_action(&abelian, &GVector::zero(), &x).unwrap(), -&abelian.delta(&x));
    }

    #[test]
    fn displayed_rho2_comparison_is_frozen() {
        let alg = fixtures::get("free3");
        let solver = Solver::new(&alg).unwrap();
        let rows: Vec<(String, String, String)> = compare_rho2_with_displayed(&solver)
            .unwrap()
            .into_iter()
            .map(|r| (r.term, crate::rational::render_rational(&r.displayed), crate::rational::render_rational(&r.computed)))
            .collect();
        let expected = [
            ("x1", "1", "1"),
            ("x2", "-1", "-1"),
            ("dx12", "1/2", "1"),
            ("[x1,x2]", "1/2", "1/2"),
            ("[x1,dx12]", "-1/12", "-1/6"),
            ("[x2,dx12]", "-1/12", "-1/6"),
            ("[x12,dx1]", "1/6", "1/3"),
            ("[x12,dx2]", "1/6", "1/3"),
            ("[x1,[x1,x2]]", "1/12", "-1/12"),
            ("[x2,[x1,x2]]", "1/12", "-1/12"),
        ];
        let expected: Vec<(String, String, String)> =
            expected.iter().map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string())).collect();
        assert_eq!(rows, expected);
    }

    #[test]
    fn associativity_holds_for_dg_lie_only() {
        let mut rng = crate::sample::rng(21);
        let alg = fixtures::get("dglie01");
        let solver = Solver::new(&alg).unwrap();
        for _ in 0..3 {
            let mu = crate::sample::mc_element(&solver, 2, &mut rng).unwrap();
            let xs: Vec<GVector> = (0..3).map(|_| crate::sample::vector_of_degree(&alg, 0, &mut rng)).collect();
            assert!(rho3_associativity_check(&solver, &mu, [&xs[0], &xs[1], &xs[2]]).unwrap());
        }
        let alg = fixtures::get("linfty3");
        let solver = Solver::new(&alg).unwrap();
        let g = |s: &str| GVector::basis(alg.index_of(s).unwrap());
        let r = rho3_edges(&solver, &GVector::zero(), [&g("x"), &g("y"), &g("z")]).unwrap();
        assert!(!r.is_zero());
    }
}

