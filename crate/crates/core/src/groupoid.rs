//! Finite groupoids and truncations of their nerves.

use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupoidError {
    #[error("morphism {0} has an endpoint outside the object set")]
    Endpoint(usize),
    #[error("identity of object {0} is not an endo-identity")]
    Identity(usize),
    #[error("product of {0} and {1} is missing or has the wrong endpoints")]
    Product(usize, usize),
    #[error("product is not associative on ({0}, {1}, {2})")]
    Associativity(usize, usize, usize),
    #[error("morphism {0} has no inverse")]
    Inverse(usize),
    #[error("nerve bound must be at least 1")]
    Bound,
}

/// Objects `0..objects`; morphism `g` runs from `source[g]` to `target[g]`;
/// `product[(g, h)] = gh` is defined when `s g = t h`.
#[derive(Debug, Clone)]
pub struct FiniteGroupoid {
    objects: usize,
    source: Vec<usize>,
    target: Vec<usize>,
    identity: Vec<usize>,
    product: BTreeMap<(usize, usize), usize>,
}

impl FiniteGroupoid {
    pub fn new(
        objects: usize,
        ends: Vec<(usize, usize)>,
        identity: Vec<usize>,
        product: BTreeMap<(usize, usize), usize>,
    ) -> Result<Self, GroupoidError> {
        let (source, target): (Vec<usize>, Vec<usize>) = ends.into_iter().unzip();
        let g = FiniteGroupoid { objects, source, target, identity, product };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<(), GroupoidError> {
        let m = self.morphisms();
        for f in 0..m {
            if self.source[f] >= self.objects || self.target[f] >= self.objects {
                return Err(GroupoidError::Endpoint(f));
            }
        }
        if self.identity.len() != self.objects {
            return Err(GroupoidError::Identity(self.identity.len()));
        }
        for (o, &e) in self.identity.iter().enumerate() {
            if e >= m || self.source[e] != o || self.target[e] != o {
                return Err(GroupoidError::Identity(o));
            }
        }
        for a in 0..m {
            for b in 0..m {
                let composable = self.source[a] == self.target[b];
                match (composable, self.product.get(&(a, b))) {
                    (false, None) => {}
                    (true, Some(&ab)) if ab < m && self.source[ab] == self.source[b] && self.target[ab] == self.target[a] => {}
                    _ => return Err(GroupoidError::Product(a, b)),
                }
            }
            if self.mul(self.identity[self.target[a]], a) != a || self.mul(a, self.identity[self.source[a]]) != a {
                return Err(GroupoidError::Product(a, a));
            }
        }
        for (&(a, b), &ab) in &self.product {
            for c in (0..m).filter(|&c| self.source[b] == self.target[c]) {
                if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                    return Err(GroupoidError::Associativity(a, b, c));
                }
            }
        }
        for a in 0..m {
            self.inverse(a).ok_or(GroupoidError::Inverse(a))?;
        }
        Ok(())
    }

    /// The cyclic group of the given order, as a one-object groupoid.
    pub fn cyclic(order: usize) -> Self {
        let order = order.max(1);
        let product = (0..order).flat_map(|a| (0..order).map(move |b| ((a, b), (a + b) % order))).collect();
        FiniteGroupoid::new(1, vec![(0, 0); order], vec![0], product).expect("cyclic group")
    }

    /// Objects with identities only.
    pub fn discrete(objects: usize) -> Self {
        let product = (0..objects).map(|o| ((o, o), o)).collect();
        FiniteGroupoid::new(objects, (0..objects).map(|o| (o, o)).collect(), (0..objects).collect(), product)
            .expect("discrete groupoid")
    }

    /// Two objects, one morphism `i → j` for every pair and every element of
    /// `ℤ/2` (eight morphisms).
    pub fn two_object() -> Self {
        let encode = |s: usize, t: usize, z: usize| (s * 2 + t) * 2 + z;
        let mut ends = vec![(0, 0); 8];
        for s in 0..2 {
            for t in 0..2 {
                for z in 0..2 {
                    ends[encode(s, t, z)] = (s, t);
                }
            }
        }
        let mut product = BTreeMap::new();
        for a in 0..8 {
            for b in 0..8 {
                let ((sa, ta), (sb, tb)) = (ends[a], ends[b]);
                if sa == tb {
                    product.insert((a, b), encode(sb, ta, (a % 2 + b % 2) % 2));
                }
            }
        }
        FiniteGroupoid::new(2, ends, vec![encode(0, 0, 0), encode(1, 1, 0)], product).expect("two-object groupoid")
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn morphisms(&self) -> usize {
        self.source.len()
    }

    pub fn source(&self, g: usize) -> usize {
        self.source[g]
    }

    pub fn target(&self, g: usize) -> usize {
        self.target[g]
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identity[o]
    }

    /// `gh`; panics unless `s g = t h`.
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.product[&(g, h)]
    }

    pub fn inverse(&self, g: usize) -> Option<usize> {
        (0..self.morphisms()).find(|&h| {
            self.source[h] == self.target[g]
                && self.target[h] == self.source[g]
                && self.product.get(&(g, h)) == Some(&self.identity[self.target[g]])
        })
    }
}

/// Levels `0..=bound` of the nerve: objects, then composable chains
/// `[g_1, …, g_n]` with `s g_i = t g_{i+1}`, with face and degeneracy
/// tables by index.
#[derive(Debug, Clone)]
pub struct NerveTruncation {
    bound: usize,
    levels: Vec<Vec<Vec<usize>>>,
    faces: Vec<Vec<Vec<usize>>>,
    degeneracies: Vec<Vec<Vec<usize>>>,
}

fn vertices(g: &FiniteGroupoid, chain: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = chain.iter().map(|&f| g.target(f)).collect();
    out.push(g.source(*chain.last().expect("nonempty chain")));
    out
}

impl NerveTruncation {
    pub fn new(g: &FiniteGroupoid, bound: usize) -> Result<Self, GroupoidError> {
        if bound == 0 {
            return Err(GroupoidError::Bound);
        }
        let mut levels: Vec<Vec<Vec<usize>>> = vec![(0..g.objects()).map(|o| vec![o]).collect()];
        levels.push((0..g.morphisms()).map(|f| vec![f]).collect());
        for n in 2..=bound {
            let next = levels[n - 1]
                .iter()
                .flat_map(|chain| {
                    let last = *chain.last().expect("nonempty");
                    (0..g.morphisms()).filter(move |&h| g.source(last) == g.target(h)).map(move |h| {
                        let mut c = chain.clone();
                        c.push(h);
                        c
                    })
                })
                .collect();
            levels.push(next);
        }
        let lookup: Vec<HashMap<Vec<usize>, usize>> =
            levels.iter().map(|l| l.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect()).collect();
        let face_of = |n: usize, chain: &[usize], k: usize| -> Vec<usize> {
            if n == 1 {
                let v = vertices(g, chain);
                return vec![if k == 0 { v[1] } else { v[0] }];
            }
            let mut c = chain.to_vec();
            if k == 0 {
                c.remove(0);
            } else if k == n {
                c.pop();
            } else {
                let merged = g.mul(c[k - 1], c[k]);
                c.splice(k - 1..=k, [merged]);
            }
            c
        };
        let degeneracy_of = |n: usize, chain: &[usize], k: usize| -> Vec<usize> {
            if n == 0 {
                return vec![g.identity(chain[0])];
            }
            let mut c = chain.to_vec();
            c.insert(k, g.identity(vertices(g, chain)[k]));
            c
        };
        let mut faces = vec![vec![]];
        for n in 1..=bound {
            faces.push(levels[n].iter().map(|c| (0..=n).map(|k| lookup[n - 1][&face_of(n, c, k)]).collect()).collect());
        }
        let mut degeneracies = Vec::new();
        for n in 0..bound {
            degeneracies.push(levels[n].iter().map(|c| (0..=n).map(|k| lookup[n + 1][&degeneracy_of(n, c, k)]).collect()).collect());
        }
        Ok(NerveTruncation { bound, levels, faces, degeneracies })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn size(&self, n: usize) -> usize {
        self.levels[n].len()
    }

    /// The chain (or the object, at level 0) of a simplex.
    pub fn simplex(&self, n: usize, idx: usize) -> &[usize] {
        &self.levels[n][idx]
    }

    pub fn index_of(&self, n: usize, chain: &[usize]) -> Option<usize> {
        self.levels[n].iter().position(|c| c == chain)
    }

    pub fn face(&self, n: usize, idx: usize, k: usize) -> usize {
        self.faces[n][idx][k]
    }

    pub fn degeneracy(&self, n: usize, idx: usize, k: usize) -> usize {
        self.degeneracies[n][idx][k]
    }

    /// All simplicial identities among the stored tables.
    pub fn check_simplicial_identities(&self) -> bool {
        for n in 2..=self.bound {
            for x in 0..self.size(n) {
                for j in 1..=n {
                    for i in 0..j {
                        if self.face(n - 1, self.face(n, x, j), i) != self.face(n - 1, self.face(n, x, i), j - 1) {
                            return false;
                        }
                    }
                }
            }
        }
        for n in 0..self.bound {
            for x in 0..self.size(n) {
                for j in 0..=n {
                    let y = self.degeneracy(n, x, j);
                    for i in 0..=n + 1 {
                        let lhs = self.face(n + 1, y, i);
                        let ok = if i == j || i == j + 1 {
                            lhs == x
                        } else if n == 0 {
                            false
                        } else if i < j {
                            lhs == self.degeneracy(n - 1, self.face(n, x, i), j - 1)
                        } else {
                            lhs == self.degeneracy(n - 1, self.face(n, x, i - 1), j)
                        };
                        if !ok {
                            return false;
                        }
                    }
                    if n + 1 < self.bound {
                        for i in 0..=j {
                            if self.degeneracy(n + 1, y, i) != self.degeneracy(n + 1, self.degeneracy(n, x, i), j + 1) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// All compatible families `(y_j)_{j ∈ slots}` of `(n-1)`-simplices:
    /// `∂_j y_k = ∂_{k-1} y_j` for `j < k`.
    fn compatible_families(&self, n: usize, slots: &[usize]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.extend_family(n, slots, &mut current, &mut out);
        out
    }

    fn extend_family(&self, n: usize, slots: &[usize], current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == slots.len() {
            out.push(current.clone());
            return;
        }
        let k = slots[current.len()];
        for y in 0..self.size(n - 1) {
            let fits = n < 2
                || current.iter().zip(slots).all(|(&yj, &j)| self.face(n - 1, y, j) == self.face(n - 1, yj, k - 1));
            if fits {
                current.push(y);
                self.extend_family(n, slots, current, out);
                current.pop();
            }
        }
    }

    /// All horns `Λ^n_i → N_•G`, as face indices in increasing `j ≠ i`.
    pub fn horns(&self, n: usize, i: usize) -> Vec<Vec<usize>> {
        let slots: Vec<usize> = (0..=n).filter(|&j| j != i).collect();
        self.compatible_families(n, &slots)
    }

    fn restrict(&self, n: usize, x: usize, skip: Option<usize>) -> Vec<usize> {
        (0..=n).filter(|&j| Some(j) != skip).map(|j| self.face(n, x, j)).collect()
    }

    /// The unique filler of a horn, if there is exactly one.
    pub fn filler(&self, n: usize, i: usize, horn: &[usize]) -> Option<usize> {
        let mut hits = (0..self.size(n)).filter(|&x| self.restrict(n, x, Some(i)) == horn);
        let first = hits.next()?;
        hits.next().is_none().then_some(first)
    }

    /// `ξ^n_i : X_n → Hom(Λ^n_i, X)` is a bijection.
    pub fn xi_bijective(&self, n: usize, i: usize) -> bool {
        let horns = self.horns(n, i);
        let mut images: Vec<Vec<usize>> = (0..self.size(n)).map(|x| self.restrict(n, x, Some(i))).collect();
        images.sort();
        images.dedup();
        images.len() == self.size(n) && images.len() == horns.len()
    }

    /// `X_3 → Hom(∂Δ^3, X)` is a bijection, i.e. level 3 agrees with
    /// `cosk_2 sk_2`.
    pub fn coskeletal_at_3(&self) -> bool {
        if self.bound < 3 {
            return false;
        }
        let spheres = self.compatible_families(3, &[0, 1, 2, 3]);
        let mut images: Vec<Vec<usize>> = (0..self.size(3)).map(|x| self.restrict(3, x, None)).collect();
        images.sort();
        images.dedup();
        images.len() == self.size(3) && images.len() == spheres.len()
    }
}

/// Summary of the nerve checks for one groupoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NerveReport {
    pub sizes: Vec<usize>,
    pub simplicial_identities: bool,
    pub fillers_bijective: bool,
    pub coskeletal: bool,
}

impl NerveReport {
    pub fn passed(&self) -> bool {
        self.simplicial_identities && self.fillers_bijective && self.coskeletal
    }
}

pub fn nerve_report(g: &FiniteGroupoid) -> NerveReport {
    let nerve = NerveTruncation::new(g, 3).expect("bound 3");
    let fillers_bijective = (2..=3).all(|n| (0..=n).all(|i| nerve.xi_bijective(n, i)));
    NerveReport {
        sizes: (0..=3).map(|n| nerve.size(n)).collect(),
        simplicial_identities: nerve.check_simplicial_identities(),
        fillers_bijective,
        coskeletal: nerve.coskeletal_at_3(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_two() {
        let g = FiniteGroupoid::cyclic(2);
        let nerve = NerveTruncation::new(&g, 3).unwrap();
        assert_eq!(nerve.size(2), 4);
        let two = nerve.index_of(1, &[1]).unwrap();
        let filled = nerve.filler(2, 1, &[two, two]).unwrap();
        assert_eq!(nerve.simplex(2, filled), &[1, 1]);
        assert_eq!(nerve.simplex(1, nerve.face(2, filled, 1)), &[0]);
        assert!(nerve_report(&g).passed());
    }

    #[test]
    fn standard_fillers_in_two_object_groupoid() {
        let g = FiniteGroupoid::two_object();
        let nerve = NerveTruncation::new(&g, 2).unwrap();
        let edge = |f: usize| nerve.index_of(1, &[f]).unwrap();
        for a in 0..g.morphisms() {
            for b in 0..g.morphisms() {
                if g.source(a) == g.target(b) {
                    // horn (g, -, h) with g = b, h = a is filled by [a, b]
                    let x = nerve.filler(2, 1, &[edge(b), edge(a)]).unwrap();
                    assert_eq!(nerve.simplex(2, x), &[a, b]);
                    assert_eq!(nerve.face(2, x, 1), edge(g.mul(a, b)));
                }
                if g.target(a) == g.target(b) {
                    let inv = g.inverse(b).unwrap();
                    let x = nerve.filler(2, 0, &[edge(a), edge(b)]).unwrap();
                    assert_eq!(nerve.simplex(2, x), &[b, g.mul(inv, a)]);
                }
                if g.source(a) == g.source(b) {
                    let inv = g.inverse(a).unwrap();
                    let x = nerve.filler(2, 2, &[edge(a), edge(b)]).unwrap();
                    assert_eq!(nerve.simplex(2, x), &[g.mul(b, inv), a]);
                }
            }
        }
        let report = nerve_report(&g);
        assert_eq!(report.sizes, vec![2, 8, 32, 128]);
        assert!(report.passed());
    }

    #[test]
    fn discrete_nerve_is_constant() {
        let report = nerve_report(&FiniteGroupoid::discrete(3));
        assert_eq!(report.sizes, vec![3, 3, 3, 3]);
        assert!(report.passed());
    }

    #[test]
    fn invalid_tables_are_rejected() {
        let mut product: BTreeMap<(usize, usize), usize> = (0..2).flat_map(|a| (0..2).map(move |b| ((a, b), (a + b) % 2))).collect();
        product.insert((1, 1), 1);
        assert!(FiniteGroupoid::new(1, vec![(0, 0); 2], vec![0], product).is_err());
        assert_eq!(
            FiniteGroupoid::new(1, vec![(0, 1)], vec![0], BTreeMap::new()).unwrap_err(),
            GroupoidError::Endpoint(0)
        );
    }

    /// A simplicial set that is not a nerve: the horn map at n = 2 fails to be
    /// injective once a spurious 2-simplex is added.
    #[test]
    fn duplicated_simplex_breaks_bijectivity() {
        let mut nerve = NerveTruncation::new(&FiniteGroupoid::cyclic(2), 2).unwrap();
        nerve.levels[2].push(vec![0, 0]);
        let copy = nerve.faces[2][0].clone();
        nerve.faces[2].push(copy);
        assert!(!nerve.xi_bijective(2, 1));
    }
}
