//! Dirac numbers and the schoolbook product.

use std::ops::{Add, Index, IndexMut, Neg, Sub};

use crate::exactnum::Ring;

use super::table::{MultTable, SignedBasis, DIM};

/// `d = d_0 + Σ d_n i_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiracNumber<S> {
    pub coeffs: [S; DIM],
}

impl<S: Ring> DiracNumber<S> {
    pub fn new(coeffs: [S; DIM]) -> Self {
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::new(std::array::from_fn(|_| S::zero()))
    }

    /// The unit `i_k` (`k = 0` is 1).
    pub fn basis(k: usize) -> Self {
        Self::new(std::array::from_fn(|n| if n == k { S::one() } else { S::zero() }))
    }

    pub fn unit() -> Self {
        Self::basis(0)
    }

    pub fn from_i64(values: [i64; DIM]) -> Self {
        Self::new(values.map(S::from_i64))
    }

    pub fn scale(&self, lambda: &S) -> Self {
        Self::new(std::array::from_fn(|n| lambda.clone() * self.coeffs[n].clone()))
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T) -> DiracNumber<T> {
        DiracNumber {
            coeffs: std::array::from_fn(|n| f(&self.coeffs[n])),
        }
    }
}

impl<S> Index<usize> for DiracNumber<S> {
    type Output = S;
    fn index(&self, n: usize) -> &S {
        &self.coeffs[n]
    }
}

impl<S> IndexMut<usize> for DiracNumber<S> {
    fn index_mut(&mut self, n: usize) -> &mut S {
        &mut self.coeffs[n]
    }
}

impl<S: Ring> Add for DiracNumber<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut b = rhs.coeffs.into_iter();
        Self::new(self.coeffs.map(|x| x + b.next().unwrap()))
    }
}

impl<S: Ring> Sub for DiracNumber<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut b = rhs.coeffs.into_iter();
        Self::new(self.coeffs.map(|x| x - b.next().unwrap()))
    }
}

impl<S: Ring> Neg for DiracNumber<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.map(|x| -x))
    }
}

/// `a · b` by direct expansion over the table.
///
/// Each output coordinate is one chain over ascending `n`: 16 products and
/// 15 additions, signs folded into `+`/`-` (or a negation on the first term).
pub fn mul_schoolbook<S: Ring>(a: &DiracNumber<S>, b: &DiracNumber<S>, t: &MultTable) -> DiracNumber<S> {
    let mut acc: [Option<S>; DIM] = std::array::from_fn(|_| None);
    for n in 0..DIM {
        for m in 0..DIM {
            let e = t.get(n, m);
            let term = a[n].clone() * b[m].clone();
            let slot = &mut acc[e.index()];
            *slot = Some(match slot.take() {
                None if e.sign() < 0 => -term,
                None => term,
                Some(s) if e.sign() < 0 => s - term,
                Some(s) => s + term,
            });
        }
    }
    DiracNumber::new(acc.map(|x| x.unwrap_or_else(S::zero)))
}

/// The matrix `B16` with `B16 · a = a · b`.
#[derive(Debug, Clone, PartialEq)]
pub struct BMatrix<S> {
    pub entries: [[S; DIM]; DIM],
}

impl<S: Ring> BMatrix<S> {
    pub fn apply(&self, a: &DiracNumber<S>) -> DiracNumber<S> {
        DiracNumber::new(std::array::from_fn(|k| {
            (0..DIM).fold(S::zero(), |acc, n| acc + self.entries[k][n].clone() * a[n].clone())
        }))
    }
}

/// Which `±b_m` sits at each cell of `B16`: `pattern[k][n] = (sign, m)`
/// with `t[n][m] = (sign, k)`.
pub fn b_matrix_pattern(t: &MultTable) -> [[SignedBasis; DIM]; DIM] {
    let mut out = [[SignedBasis::pos(0); DIM]; DIM];
    for n in 0..DIM {
        for m in 0..DIM {
            let e = t.get(n, m);
            out[e.index()][n] = SignedBasis::new(e.sign(), m).expect("in range");
        }
    }
    out
}

pub fn derive_b_matrix<S: Ring>(b: &DiracNumber<S>, t: &MultTable) -> BMatrix<S> {
    let pat = b_matrix_pattern(t);
    BMatrix {
        entries: std::array::from_fn(|k| {
            std::array::from_fn(|n| {
                let e = pat[k][n];
                let v = b[e.index()].clone();
                if e.sign() < 0 {
                    -v
                } else {
                    v
                }
            })
        }),
    }
}
