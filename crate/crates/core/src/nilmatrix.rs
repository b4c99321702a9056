//! Exact nilpotent and unipotent matrices, used as an independent oracle
//! for group laws on degree-0 nilpotent Lie algebras.

use crate::linfty::{GVector, Presentation};
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not strictly upper triangular")]
    NotNilpotent,
    #[error("matrix is not unipotent upper triangular")]
    NotUnipotent,
    #[error("size mismatch: {0} vs {1}")]
    Size(usize, usize),
    #[error("no representation named {0:?}")]
    UnknownRepresentation(String),
    #[error("representation does not respect the bracket {0}")]
    NotHomomorphism(String),
}

/// Dense square matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    size: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zero(size: usize) -> Self {
        Matrix { size, entries: vec![Rational::zero(); size * size] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size);
        for i in 0..size {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, MatrixError> {
        let size = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != size) {
            return Err(MatrixError::Size(size, bad.len()));
        }
        Ok(Matrix { size, entries: rows.into_iter().flatten().collect() })
    }

    /// The unit matrix `E_{ij}` (zero-based indices).
    pub fn unit(size: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(size);
        m.set(i, j, Rational::one());
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.size + j] = value;
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Matrix { size: self.size, entries: self.entries.iter().map(|e| e * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn upper_with_diagonal(&self, diagonal: &Rational) -> bool {
        let zero = Rational::zero();
        (0..self.size).all(|i| (0..=i).all(|j| self.get(i, j) == if i == j { diagonal } else { &zero }))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.size, rhs.size, "matrix sizes differ");
        Matrix { size: self.size, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self + &(-rhs)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.size, rhs.size, "matrix sizes differ");
        let n = self.size;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

/// A strictly upper-triangular matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilMatrix(Matrix);

/// An upper-triangular matrix with unit diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unipotent(Matrix);

impl NilMatrix {
    pub fn new(m: Matrix) -> Result<Self, MatrixError> {
        if m.upper_with_diagonal(&Rational::zero()) {
            Ok(NilMatrix(m))
        } else {
            Err(MatrixError::NotNilpotent)
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn bracket(&self, other: &Self) -> Self {
        NilMatrix(self.0.commutator(&other.0))
    }

    /// `Σ_{k<m} X^k/k!`, exact since `X^m = 0`.
    pub fn exp(&self) -> Unipotent {
        let m = self.0.size();
        let mut out = Matrix::identity(m);
        let mut power = Matrix::identity(m);
        for k in 1..m.max(1) {
            power = (&power * &self.0).scale(&Rational::new(1.into(), (k as i64).into()));
            out = &out + &power;
        }
        Unipotent(out)
    }
}

impl Unipotent {
    pub fn new(m: Matrix) -> Result<Self, MatrixError> {
        if m.upper_with_diagonal(&Rational::one()) {
            Ok(Unipotent(m))
        } else {
            Err(MatrixError::NotUnipotent)
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn mul(&self, other: &Self) -> Self {
        Unipotent(&self.0 * &other.0)
    }

    /// `Σ_{k<m} (-1)^{k+1} N^k/k` with `N = U - 1`.
    pub fn log(&self) -> NilMatrix {
        let m = self.0.size();
        let n = &self.0 - &Matrix::identity(m);
        let mut out = Matrix::zero(m);
        let mut power = Matrix::identity(m);
        for k in 1..m.max(1) {
            power = &power * &n;
            let c = Rational::new(if k % 2 == 1 { 1.into() } else { (-1).into() }, (k as i64).into());
            out = &out + &power.scale(&c);
        }
        NilMatrix(out)
    }
}

/// `log(exp X · exp Y)`.
pub fn oracle_bch(x: &NilMatrix, y: &NilMatrix) -> NilMatrix {
    x.exp().mul(&y.exp()).log()
}

/// A linear map from a degree-0 Lie algebra to strictly upper-triangular
/// matrices that carries brackets to commutators.
#[derive(Debug, Clone)]
pub struct Representation {
    size: usize,
    images: Vec<NilMatrix>,
}

impl Representation {
    pub fn new(alg: &Presentation, images: Vec<NilMatrix>) -> Result<Self, MatrixError> {
        if images.len() != alg.dim() {
            return Err(MatrixError::Size(alg.dim(), images.len()));
        }
        let size = images.first().map_or(0, |m| m.matrix().size());
        let rep = Representation { size, images };
        for (args, value) in alg.table() {
            let lhs = match args.as_slice() {
                [a, b] => rep.images[*a].bracket(&rep.images[*b]),
                _ => return Err(MatrixError::NotHomomorphism(format!("{args:?}"))),
            };
            if lhs != rep.apply(value) {
                return Err(MatrixError::NotHomomorphism(format!("{args:?}")));
            }
        }
        Ok(rep)
    }

    /// The defining representation of `heisenberg` or `ut4`.
    pub fn standard(name: &str, alg: &Presentation) -> Result<Self, MatrixError> {
        let unit = |size, i, j| NilMatrix(Matrix::unit(size, i, j));
        let images = match name {
            "heisenberg" => ["e1", "e2", "e3"]
                .iter()
                .zip([(0, 1), (1, 2), (0, 2)])
                .map(|(s, (i, j))| alg.index_of(s).ok().map(|ix| (ix, unit(3, i, j))))
                .collect::<Option<Vec<_>>>(),
            "ut4" => ["E12", "E13", "E14", "E23", "E24", "E34"]
                .iter()
                .map(|s| {
                    let b = s.as_bytes();
                    let (i, j) = ((b[1] - b'1') as usize, (b[2] - b'1') as usize);
                    alg.index_of(s).ok().map(|ix| (ix, unit(4, i, j)))
                })
                .collect::<Option<Vec<_>>>(),
            _ => None,
        };
        let mut pairs = images.ok_or_else(|| MatrixError::UnknownRepresentation(name.to_string()))?;
        pairs.sort_by_key(|p| p.0);
        Representation::new(alg, pairs.into_iter().map(|p| p.1).collect())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn apply(&self, v: &GVector) -> NilMatrix {
        let mut out = Matrix::zero(self.size);
        for (i, c) in v.terms() {
            out = &out + &self.images[i].matrix().scale(c);
        }
        NilMatrix(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::fixtures;
    use crate::rational::{frac, int};
    use crate::sample::{rng, small_rational};

    fn random_nil(size: usize, seed: u64) -> NilMatrix {
        let mut r = rng(seed);
        let mut m = Matrix::zero(size);
        for i in 0..size {
            for j in i + 1..size {
                m.set(i, j, small_rational(&mut r));
            }
        }
        NilMatrix::new(m).unwrap()
    }

    #[test]
    fn exp_of_3x3() {
        let (a, b, c) = (int(2), frac(-1, 2), int(1));
        let x = NilMatrix::new(
            Matrix::from_rows(vec![vec![int(0), a.clone(), c.clone()], vec![int(0), int(0), b.clone()], vec![int(0); 3]]).unwrap(),
        )
        .unwrap();
        let expected = Matrix::from_rows(vec![
            vec![int(1), a.clone(), &c + &(&a * &b) * frac(1, 2)],
            vec![int(0), int(1), b],
            vec![int(0), int(0), int(1)],
        ])
        .unwrap();
        assert_eq!(x.exp().matrix(), &expected);
    }

    #[test]
    fn log_inverts_exp() {
        for seed in 0..10 {
            let x = random_nil(4, seed);
            assert_eq!(x.exp().log(), x);
        }
        assert_eq!(Unipotent::new(Matrix::zero(2)), Err(MatrixError::NotUnipotent));
        assert_eq!(NilMatrix::new(Matrix::identity(2)), Err(MatrixError::NotNilpotent));
    }

    #[test]
    fn heisenberg_bch_is_quadratic() {
        for seed in 0..10 {
            let x = random_nil(3, seed);
            let y = random_nil(3, seed + 100);
            let expected = &(x.matrix() + y.matrix()) + &x.bracket(&y).matrix().scale(&frac(1, 2));
            assert_eq!(oracle_bch(&x, &y).matrix(), &expected);
        }
    }

    #[test]
    fn standard_representations() {
        for name in ["heisenberg", "ut4"] {
            let alg = fixtures::get(name);
            assert!(Representation::standard(name, &alg).is_ok());
        }
        let flipped = crate::linfty::Presentation::new(
            "h",
            fixtures::get("heisenberg").generators().to_vec(),
            vec![(vec![0, 1], GVector::basis(2).scale(&int(-1)))],
            None,
        )
        .unwrap();
        assert!(matches!(Representation::standard("heisenberg", &flipped), Err(MatrixError::NotHomomorphism(_))));
    }
}
