//! Exact linear algebra over ℚ: reduced row-echelon form, subspaces,
//! kernels and canonical solutions.

use crate::rational::Rational;
use num_traits::{One, Zero};

/// Row-reduces in place; returns the pivot column of each nonzero row.
/// Zero rows are removed.
pub fn rref(rows: &mut Vec<Vec<Rational>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A subspace of `ℚ^ambient`, stored by its reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        Subspace { ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let mut rows: Vec<Vec<Rational>> = vectors.into_iter().filter(|v| v.iter().any(|x| !x.is_zero())).collect();
        let pivots = rref(&mut rows, ambient);
        Subspace { ambient, rows, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let factor = out[p].clone();
                for (x, y) in out.iter_mut().zip(row) {
                    *x -= &factor * y;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.ambient, self.rows.iter().chain(&other.rows).cloned())
    }
}

/// Basis of the kernel of the `rows × cols` matrix, one vector per free column.
pub fn kernel(matrix: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut rows = matrix.to_vec();
    let pivots = rref(&mut rows, cols);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        out.push(v);
    }
    out
}

pub fn rank(matrix: &[Vec<Rational>], cols: usize) -> usize {
    let mut rows = matrix.to_vec();
    rref(&mut rows, cols).len()
}

/// Solves `A x = b` choosing free variables zero, so the pivot columns are
/// the earliest independent columns. Returns `None` if inconsistent.
pub fn solve_canonical(a: &[Vec<Rational>], cols: usize, b: &[Rational]) -> Option<Vec<Rational>> {
    let mut aug: Vec<Vec<Rational>> =
        a.iter().zip(b).map(|(row, y)| row.iter().cloned().chain(std::iter::once(y.clone())).collect()).collect();
    let pivots = rref(&mut aug, cols + 1);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn span_and_membership() {
        let s = Subspace::span(3, [v(&[1, 1, 0]), v(&[2, 2, 0]), v(&[0, 1, 1])]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(&[1, 2, 1])));
        assert!(!s.contains(&v(&[0, 0, 1])));
        assert_eq!(s, Subspace::span(3, [v(&[0, 1, 1]), v(&[1, 0, -1])]));
    }

    #[test]
    fn kernel_and_solve() {
        let a = vec![v(&[1, 2, 3]), v(&[0, 1, 1])];
        let k = kernel(&a, 3);
        assert_eq!(k, vec![v(&[-1, -1, 1])]);
        let x = solve_canonical(&a, 3, &v(&[5, 2])).unwrap();
        assert_eq!(x, v(&[1, 2, 0]));
        assert!(solve_canonical(&[v(&[0, 0])], 2, &v(&[1])).is_none());
        assert_eq!(rank(&a, 3), 2);
    }
}
