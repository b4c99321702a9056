//! Monotone maps between the ordinals `[m] = {0,…,m}`.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("map value {value} out of range for target [{target}]")]
    ValueOutOfRange { value: usize, target: usize },
    #[error("map is not monotone at position {0}")]
    NotMonotone(usize),
    #[error("expected {expected} values for source [{source_dim}], got {got}")]
    WrongLength { source_dim: usize, expected: usize, got: usize },
    #[error("index {index} out of range for [{dim}]")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("cannot compose [{0}] -> .. with a map out of [{1}]")]
    NotComposable(usize, usize),
}

/// A monotone non-decreasing map `[m] → [n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialMap {
    source: usize,
    target: usize,
    values: Vec<usize>,
}

impl SimplicialMap {
    pub fn new(source: usize, target: usize, values: Vec<usize>) -> Result<Self, MapError> {
        if values.len() != source + 1 {
            return Err(MapError::WrongLength {
                source_dim: source,
                expected: source + 1,
                got: values.len(),
            });
        }
        for (p, &v) in values.iter().enumerate() {
            if v > target {
                return Err(MapError::ValueOutOfRange { value: v, target });
            }
            if p > 0 && values[p - 1] > v {
                return Err(MapError::NotMonotone(p));
            }
        }
        Ok(SimplicialMap { source, target, values })
    }

    pub fn identity(n: usize) -> Self {
        SimplicialMap { source: n, target: n, values: (0..=n).collect() }
    }

    /// Face map `d_k : [n-1] → [n]` skipping `k`.
    pub fn face(n: usize, k: usize) -> Result<Self, MapError> {
        if n == 0 || k > n {
            return Err(MapError::IndexOutOfRange { index: k, dim: n });
        }
        let values = (0..n).map(|i| if i < k { i } else { i + 1 }).collect();
        Ok(SimplicialMap { source: n - 1, target: n, values })
    }

    /// Degeneracy map `s_k : [n+1] → [n]` hitting `k` twice.
    pub fn degeneracy(n: usize, k: usize) -> Result<Self, MapError> {
        if k > n {
            return Err(MapError::IndexOutOfRange { index: k, dim: n });
        }
        let values = (0..=n + 1).map(|i| if i <= k { i } else { i - 1 }).collect();
        Ok(SimplicialMap { source: n + 1, target: n, values })
    }

    /// The injective map `[k] → [n]` listing an increasing vertex sequence.
    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<Self, MapError> {
        if vertices.is_empty() {
            return Err(MapError::WrongLength { source_dim: 0, expected: 1, got: 0 });
        }
        SimplicialMap::new(vertices.len() - 1, n, vertices.to_vec())
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    /// `self ∘ first`: apply `first` and then `self`.
    pub fn after(&self, first: &SimplicialMap) -> Result<SimplicialMap, MapError> {
        if first.target != self.source {
            return Err(MapError::NotComposable(self.source, first.target));
        }
        let values = first.values.iter().map(|&v| self.values[v]).collect();
        Ok(SimplicialMap { source: first.source, target: self.target, values })
    }

    /// Factorization as degeneracies followed by faces: returns
    /// `(degeneracy indices applied first-to-last, face indices applied first-to-last)`.
    pub fn factor(&self) -> (Vec<usize>, Vec<usize>) {
        let mut degeneracies = Vec::new();
        for p in (0..self.source).rev() {
            if self.values[p] == self.values[p + 1] {
                degeneracies.push(p);
            }
        }
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let faces: Vec<usize> = (0..=self.target).filter(|v| !image.contains(v)).collect();
        (degeneracies, faces)
    }
}
