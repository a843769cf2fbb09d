//! Dense matrices over a ring.

use std::fmt;
use std::str::FromStr;

use crate::exactnum::Ring;

use super::LinalgError;

#[derive(Clone, PartialEq)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Ring> Mat<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self, LinalgError> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let v = rows.iter().map(|r| r.iter().map(|&x| S::from_i64(x)).collect()).collect();
        Self::from_rows(v).expect("rectangular literal")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    /// The 2×2 Hadamard matrix `[[1, 1], [1, -1]]`.
    pub fn h2() -> Self {
        Self::from_i64(&[&[1, 1], &[1, -1]])
    }

    /// `T2×3 = [[1, 0, 1], [0, 1, 1]]`.
    pub fn t23() -> Self {
        Self::from_i64(&[&[1, 0, 1], &[0, 1, 1]])
    }

    /// `T3×2 = [[1, 0], [0, 1], [1, 1]]`.
    pub fn t32() -> Self {
        Self::from_i64(&[&[1, 0], &[0, 1], &[1, 1]])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> Mat<T> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn scale(&self, lambda: &S) -> Self {
        self.map(|x| lambda.clone() * x.clone())
    }

    pub fn halve(&self) -> Self {
        self.map(S::halve)
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.zip(rhs, |a, b| a - b)
    }

    fn zip(&self, rhs: &Self, f: impl Fn(S, S) -> S) -> Result<Self, LinalgError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(LinalgError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| f(a.clone(), b.clone()))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Dense product with a vector; no zero skipping.
    pub fn mul_vec(&self, x: &[S]) -> Result<Vec<S>, LinalgError> {
        if x.len() != self.cols {
            return Err(LinalgError::Shape(format!(
                "vector of length {} for {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Copies `block` in with its top-left corner at `(r, c)`.
    pub fn put_block(&mut self, r: usize, c: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r + i, c + j, block.get(i, j).clone());
            }
        }
    }

    /// `[[a, b], [c, d]]` from four equal-shape blocks.
    pub fn block2x2(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self, LinalgError> {
        let (r, k) = (a.rows, a.cols);
        if [b, c, d].iter().any(|m| (m.rows, m.cols) != (r, k)) {
            return Err(LinalgError::Shape("2x2 block layout needs equal blocks".into()));
        }
        let mut out = Self::zeros(2 * r, 2 * k);
        out.put_block(0, 0, a);
        out.put_block(0, k, b);
        out.put_block(r, 0, c);
        out.put_block(r, k, d);
        Ok(out)
    }
}

pub fn kron<S: Ring>(a: &Mat<S>, b: &Mat<S>) -> Mat<S> {
    let mut out = Mat::zeros(a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            out.put_block(i * b.rows, j * b.cols, &b.scale(x));
        }
    }
    out
}

pub fn dirsum<S: Ring>(blocks: &[Mat<S>]) -> Result<Mat<S>, LinalgError> {
    if blocks.is_empty() {
        return Err(LinalgError::Shape("direct sum of no blocks".into()));
    }
    let rows = blocks.iter().map(Mat::rows).sum();
    let cols = blocks.iter().map(Mat::cols).sum();
    let mut out = Mat::zeros(rows, cols);
    let (mut r, mut c) = (0, 0);
    for b in blocks {
        out.put_block(r, c, b);
        r += b.rows;
        c += b.cols;
    }
    Ok(out)
}

/// Header `rows cols`, then one line per row.
impl<S: Ring + fmt::Display> fmt::Display for Mat<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for Mat<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl<S: Ring + FromStr> FromStr for Mat<S> {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| LinalgError::Parse("empty matrix text".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| LinalgError::Parse(format!("bad header {header:?}"))))
            .collect::<Result<_, _>>()?;
        let [rows, cols] = dims[..] else {
            return Err(LinalgError::Parse(format!("bad header {header:?}")));
        };
        let data = lines
            .flat_map(str::split_whitespace)
            .map(|t| t.parse::<S>().map_err(|_| LinalgError::Parse(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(rows, cols, data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::DyadicRational;

    type M = Mat<DyadicRational>;

    #[test]
    fn kron_identities() {
        assert_eq!(kron(&M::identity(2), &M::identity(4)), M::identity(8));
        assert_eq!(kron(&M::h2(), &M::identity(1)), M::h2());
    }

    #[test]
    fn kron_t23_on_stacked_vector() {
        let m = kron(&M::t23(), &M::identity(2));
        let x: Vec<DyadicRational> = [1, 2, 10, 20, 100, 200].map(DyadicRational::from_int).to_vec();
        let y = m.mul_vec(&x).unwrap();
        assert_eq!(y, [101, 202, 110, 220].map(DyadicRational::from_int).to_vec());
    }

    #[test]
    fn dirsum_examples() {
        assert_eq!(dirsum(&[M::identity(2), M::identity(3)]).unwrap(), M::identity(5));
        assert_eq!(dirsum(&[M::h2(), M::h2()]).unwrap(), kron(&M::identity(2), &M::h2()));
        assert!(dirsum::<DyadicRational>(&[]).is_err());
        let sizes = [4, 4, 4, 4, 2, 2, 2, 2, 1, 1, 1, 1, 2];
        let blocks: Vec<M> = sizes.iter().map(|&n| M::identity(n)).collect();
        let d = dirsum(&blocks).unwrap();
        assert_eq!((d.rows(), d.cols()), (30, 30));
    }

    #[test]
    fn shape_errors() {
        assert!(M::identity(2).matmul(&M::identity(3)).is_err());
        assert!(M::new(2, 2, vec![]).is_err());
        assert!(M::identity(2).add(&M::identity(3)).is_err());
    }

    #[test]
    fn text_round_trip() {
        let m = kron(&M::t32(), &M::h2()).halve();
        let text = m.to_string();
        assert!(text.starts_with("6 4\n"));
        assert_eq!(text.parse::<M>().unwrap(), m);
        assert!("2 2\n1 2 3".parse::<M>().is_err());
    }
}
