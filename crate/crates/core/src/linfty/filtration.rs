use super::algebra::{GVector, Presentation};
use crate::linalg::Subspace;
use crate::rational::Rational;
use std::collections::HashSet;

/// Lower central filtration of a presentation.
///
/// `literal[i-1]` is `Σ [F^{i_1},…,F^{i_k}]` over compositions of `i`
/// (closed under `δ`), and `filtration[i-1] = Σ_{j≥i} F^j`, which is the
/// decreasing chain reported as `F^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationReport {
    pub literal: Vec<Subspace>,
    pub filtration: Vec<Subspace>,
    /// Least `i` with `F^i = 0`, or `None` when the cap was reached first.
    pub index: Option<usize>,
    pub cap: usize,
}

impl FiltrationReport {
    pub fn is_nilpotent(&self) -> bool {
        self.index.is_some()
    }

    /// `F^i` for `i ≥ 1` (zero past the computed range of a nilpotent algebra).
    pub fn level(&self, i: usize) -> Subspace {
        let ambient = self.filtration.first().map(Subspace::ambient).unwrap_or(0);
        self.filtration.get(i.saturating_sub(1)).cloned().unwrap_or_else(|| Subspace::zero(ambient))
    }

    pub fn dims(&self) -> Vec<usize> {
        self.filtration.iter().map(Subspace::dim).collect()
    }
}

fn compositions(i: usize, k: usize, nonzero: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        if i == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let remaining = k - cur.len();
    for &p in nonzero {
        if p > i || i - p < remaining - 1 {
            continue;
        }
        cur.push(p);
        compositions(i - p, k, nonzero, cur, out);
        cur.pop();
    }
}

impl Presentation {
    fn subspace_bracket(&self, parts: &[&Subspace]) -> Vec<Vec<Rational>> {
        let dim = self.dim();
        let bases: Vec<Vec<GVector>> =
            parts.iter().map(|s| s.basis().iter().map(|r| GVector::from_dense(r)).collect()).collect();
        let mut out = Vec::new();
        if bases.iter().any(|b| b.is_empty()) {
            return out;
        }
        let mut idx = vec![0usize; parts.len()];
        loop {
            let args: Vec<&GVector> = idx.iter().enumerate().map(|(p, &j)| &bases[p][j]).collect();
            let v = self.bracket(&args);
            if !v.is_zero() {
                out.push(v.to_dense(dim));
            }
            let mut p = parts.len();
            loop {
                if p == 0 {
                    return out;
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < bases[p].len() {
                    break;
                }
                idx[p] = 0;
            }
        }
    }

    fn delta_closure(&self, mut s: Subspace) -> Subspace {
        let dim = self.dim();
        loop {
            let images: Vec<Vec<Rational>> =
                s.basis().iter().map(|r| self.delta(&GVector::from_dense(r)).to_dense(dim)).collect();
            let next = s.sum(&Subspace::span(dim, images));
            if next.dim() == s.dim() {
                return s;
            }
            s = next;
        }
    }

    /// Lower central filtration computed up to `cap` steps.
    pub fn lower_central(&self, cap: usize) -> FiltrationReport {
        let dim = self.dim();
        let k_max = self.max_arity().max(1);
        let mut literal: Vec<Subspace> = vec![Subspace::full(dim)];
        let mut class_of: Vec<usize> = vec![0];
        let mut classes: Vec<Subspace> = vec![Subspace::full(dim)];
        // a zero run F^a..F^{K(a-1)} forces F^j = 0 for every j ≥ a
        let mut zero_from: Option<usize> = None;
        let mut stop_at = None;
        for i in 2..=cap {
            let nonzero: Vec<usize> = (1..i).filter(|&j| !literal[j - 1].is_zero()).collect();
            let mut seen: HashSet<Vec<usize>> = HashSet::new();
            let mut span = Subspace::zero(dim);
            for k in 2..=k_max {
                let mut comps = Vec::new();
                compositions(i, k, &nonzero, &mut Vec::new(), &mut comps);
                for c in comps {
                    let mut key: Vec<usize> = c.iter().map(|&j| class_of[j - 1]).collect();
                    key.sort_unstable();
                    if !seen.insert(key) {
                        continue;
                    }
                    let parts: Vec<&Subspace> = c.iter().map(|&j| &literal[j - 1]).collect();
                    span = span.sum(&Subspace::span(dim, self.subspace_bracket(&parts)));
                }
            }
            let f = self.delta_closure(span);
            let class = classes.iter().position(|s| s == &f).unwrap_or_else(|| {
                classes.push(f.clone());
                classes.len() - 1
            });
            class_of.push(class);
            if f.is_zero() {
                let start = *zero_from.get_or_insert(i);
                literal.push(f);
                if i >= k_max * (start - 1) {
                    stop_at = Some(start);
                    break;
                }
            } else {
                zero_from = None;
                literal.push(f);
            }
        }
        let mut filtration = vec![Subspace::zero(dim); literal.len()];
        let mut acc = Subspace::zero(dim);
        for j in (0..literal.len()).rev() {
            acc = acc.sum(&literal[j]);
            filtration[j] = acc.clone();
        }
        let index = stop_at.map(|start| filtration.iter().position(Subspace::is_zero).map_or(start, |p| p + 1));
        if let Some(ix) = index {
            filtration.truncate(ix - 1);
            literal.truncate(ix - 1);
        }
        FiltrationReport { literal, filtration, index, cap }
    }

    /// Nilpotency index with the default cap of 64.
    pub fn nilpotency_index(&self) -> Option<usize> {
        self.lower_central(64).index
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linfty::Generator;

    fn gens(spec: &[(&str, i32)]) -> Vec<Generator> {
        spec.iter().map(|(s, d)| Generator { symbol: s.to_string(), degree: *d }).collect()
    }

    #[test]
    fn heisenberg_index_three() {
        let h = Presentation::new(
            "h",
            gens(&[("e1", 0), ("e2", 0), ("e3", 0)]),
            vec![(vec![0, 1], GVector::basis(2))],
            None,
        )
        .unwrap();
        let r = h.lower_central(64);
        assert_eq!(r.index, Some(3));
        assert_eq!(r.dims(), vec![3, 1]);
        assert!(r.level(2).contains(&GVector::basis(2).to_dense(3)));
    }

    #[test]
    fn abelian_index_two_and_zero_algebra() {
        let a = Presentation::new("a", gens(&[("x", 0)]), vec![], None).unwrap();
        assert_eq!(a.lower_central(64).index, Some(2));
        let z = Presentation::new("z", vec![], vec![], None).unwrap();
        assert_eq!(z.lower_central(64).index, Some(1));
    }

    #[test]
    fn non_nilpotent_so3() {
        let g = gens(&[("e1", 0), ("e2", 0), ("e3", 0)]);
        let so3 = Presentation::new(
            "so3",
            g,
            vec![(vec![0, 1], GVector::basis(2)), (vec![1, 2], GVector::basis(0)), (vec![2, 0], GVector::basis(1))],
            None,
        )
        .unwrap();
        let r = so3.lower_central(10);
        assert_eq!(r.index, None);
    }

    #[test]
    fn ternary_only_bracket_tails() {
        // [x,y,z] = w with no binary bracket: literal F^2 = 0, F^3 ≠ 0
        let g = gens(&[("x", 0), ("y", 0), ("z", 0), ("w", -1)]);
        let p = Presentation::new("t", g, vec![(vec![0, 1, 2], GVector::basis(3))], None).unwrap();
        let r = p.lower_central(64);
        assert!(r.literal[1].is_zero());
        assert!(!r.literal[2].is_zero());
        assert_eq!(r.dims(), vec![4, 1, 1]);
        assert_eq!(r.index, Some(4));
    }
}
