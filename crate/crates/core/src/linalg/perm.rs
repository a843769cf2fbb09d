//! Signed permutations and sparse `{-1, 0, +1}` matrices.

use crate::exactnum::Ring;

use super::{LinalgError, Mat};

/// `output[i] = signs[i] · input[order[i]]`, indices zero-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    order: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(order: Vec<usize>, signs: Vec<i8>) -> Result<Self, LinalgError> {
        let n = order.len();
        if signs.len() != n {
            return Err(LinalgError::BadPermutation(format!(
                "{n} indices but {} signs",
                signs.len()
            )));
        }
        let mut seen = vec![false; n];
        for &o in &order {
            if o >= n || seen[o] {
                return Err(LinalgError::BadPermutation(format!("{order:?} is not a permutation")));
            }
            seen[o] = true;
        }
        if let Some(s) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(LinalgError::BadPermutation(format!("sign {s}")));
        }
        Ok(Self { order, signs })
    }

    /// Takes the one-based order lists used in the data assets.
    pub fn from_one_based(order: &[usize], signs: Option<&[i8]>) -> Result<Self, LinalgError> {
        let zero: Vec<usize> = order
            .iter()
            .map(|&o| {
                o.checked_sub(1)
                    .ok_or_else(|| LinalgError::BadPermutation("index 0 in one-based list".into()))
            })
            .collect::<Result<_, _>>()?;
        let signs = signs.map_or_else(|| vec![1; order.len()], <[i8]>::to_vec);
        Self::new(zero, signs)
    }

    pub fn identity(n: usize) -> Self {
        Self {
            order: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn apply<S: Ring>(&self, x: &[S]) -> Vec<S> {
        assert_eq!(x.len(), self.len(), "permutation size mismatch");
        self.order
            .iter()
            .zip(&self.signs)
            .map(|(&o, &s)| if s < 0 { -x[o].clone() } else { x[o].clone() })
            .collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.len() != other.len() {
            return Err(LinalgError::Shape("composing permutations of different sizes".into()));
        }
        let order = self.order.iter().map(|&o| other.order[o]).collect();
        let signs = self
            .order
            .iter()
            .zip(&self.signs)
            .map(|(&o, &s)| s * other.signs[o])
            .collect();
        Ok(Self { order, signs })
    }

    pub fn inverse(&self) -> Self {
        let n = self.len();
        let mut order = vec![0; n];
        let mut signs = vec![1; n];
        for (i, (&o, &s)) in self.order.iter().zip(&self.signs).enumerate() {
            order[o] = i;
            signs[o] = s;
        }
        Self { order, signs }
    }

    pub fn dirsum(parts: &[Self]) -> Self {
        let mut order = Vec::new();
        let mut signs = Vec::new();
        for p in parts {
            let base = order.len();
            order.extend(p.order.iter().map(|o| o + base));
            signs.extend_from_slice(&p.signs);
        }
        Self { order, signs }
    }

    pub fn to_matrix<S: Ring>(&self) -> Mat<S> {
        let mut m = Mat::zeros(self.len(), self.len());
        for (i, (&o, &s)) in self.order.iter().zip(&self.signs).enumerate() {
            m.set(i, o, S::from_i64(s.into()));
        }
        m
    }
}

pub fn signed_perm_matrix<S: Ring>(p: &SignedPermutation) -> Mat<S> {
    p.to_matrix()
}

/// Row-sparse matrix with entries in `{-1, +1}`.
///
/// `apply` skips zeros and turns `±1` entries into additions, subtractions
/// or a leading negation, so a row with `k` nonzeros costs `k - 1` additions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignMatrix {
    rows: Vec<Vec<(usize, i8)>>,
    cols: usize,
}

impl SignMatrix {
    pub fn from_mat<S: Ring>(m: &Mat<S>) -> Result<Self, LinalgError> {
        let (one, minus) = (S::one(), -S::one());
        let mut rows = Vec::with_capacity(m.rows());
        for i in 0..m.rows() {
            let mut row = Vec::new();
            for j in 0..m.cols() {
                let v = m.get(i, j);
                if v.is_zero() {
                    continue;
                }
                if *v == one {
                    row.push((j, 1));
                } else if *v == minus {
                    row.push((j, -1));
                } else {
                    return Err(LinalgError::NotSign(i, j));
                }
            }
            rows.push(row);
        }
        Ok(Self { rows, cols: m.cols() })
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, i8)] {
        &self.rows[i]
    }

    /// Number of additions one `apply` performs.
    pub fn addition_count(&self) -> usize {
        self.rows.iter().map(|r| r.len().saturating_sub(1)).sum()
    }

    pub fn apply<S: Ring>(&self, x: &[S]) -> Vec<S> {
        assert_eq!(x.len(), self.cols, "sign matrix width mismatch");
        self.rows
            .iter()
            .map(|row| {
                let mut it = row.iter();
                let Some(&(j, s)) = it.next() else {
                    return S::zero();
                };
                let first = if s < 0 { -x[j].clone() } else { x[j].clone() };
                it.fold(first, |acc, &(j, s)| {
                    if s < 0 {
                        acc - x[j].clone()
                    } else {
                        acc + x[j].clone()
                    }
                })
            })
            .collect()
    }

    pub fn to_matrix<S: Ring>(&self) -> Mat<S> {
        let mut m = Mat::zeros(self.rows(), self.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, s) in row {
                m.set(i, j, S::from_i64(s.into()));
            }
        }
        m
    }
}
