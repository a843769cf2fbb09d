//! The two block templates and their factored forms.
//!
//! ```text
//! [[A, B], [B,  A]] = (H2 ⊗ I) · ½ (A+B ⊕ A−B) · (H2 ⊗ I)
//! [[E, F], [F, -E]] = (T2×3 ⊗ I) · (E−F ⊕ −(E+F) ⊕ F) · (T3×2 ⊗ I)
//! ```
//!
//! The first halves the multiplications of a 2n×2n block product, the second
//! trades four n×n products for three.

use crate::exactnum::Ring;

use super::{dirsum, kron, LinalgError, Mat};

fn check_pair<S: Ring>(a: &Mat<S>, b: &Mat<S>) -> Result<(), LinalgError> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(LinalgError::Shape(format!(
            "template blocks must be square and equal: {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(())
}

/// `[[A, B], [B, A]]`.
pub fn template_ab<S: Ring>(a: &Mat<S>, b: &Mat<S>) -> Result<Mat<S>, LinalgError> {
    check_pair(a, b)?;
    Mat::block2x2(a, b, b, a)
}

/// The inner blocks `(A+B, A−B)` of the factored `[[A, B], [B, A]]`.
pub fn template_ab_blocks<S: Ring>(a: &Mat<S>, b: &Mat<S>) -> Result<[Mat<S>; 2], LinalgError> {
    check_pair(a, b)?;
    Ok([a.add(b)?, a.sub(b)?])
}

pub fn template_ab_factored<S: Ring>(a: &Mat<S>, b: &Mat<S>) -> Result<Mat<S>, LinalgError> {
    let n = a.rows();
    let h = kron(&Mat::h2(), &Mat::identity(n));
    let mid = dirsum(&template_ab_blocks(a, b)?)?.halve();
    h.matmul(&mid)?.matmul(&h)
}

/// `[[E, F], [F, -E]]`.
pub fn template_ef<S: Ring>(e: &Mat<S>, f: &Mat<S>) -> Result<Mat<S>, LinalgError> {
    check_pair(e, f)?;
    Mat::block2x2(e, f, f, &e.neg())
}

/// The inner blocks `(E−F, −(E+F), F)` of the factored `[[E, F], [F, -E]]`.
pub fn template_ef_blocks<S: Ring>(e: &Mat<S>, f: &Mat<S>) -> Result<[Mat<S>; 3], LinalgError> {
    check_pair(e, f)?;
    Ok([e.sub(f)?, e.add(f)?.neg(), f.clone()])
}

pub fn template_ef_factored<S: Ring>(e: &Mat<S>, f: &Mat<S>) -> Result<Mat<S>, LinalgError> {
    let n = e.rows();
    let left = kron(&Mat::t23(), &Mat::identity(n));
    let right = kron(&Mat::t32(), &Mat::identity(n));
    let mid = dirsum(&template_ef_blocks(e, f)?)?;
    left.matmul(&mid)?.matmul(&right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::DyadicRational;

    type M = Mat<DyadicRational>;

    #[test]
    fn ab_small_cases() {
        let one = M::identity(1);
        let zero = M::zeros(1, 1);
        assert_eq!(template_ab(&one, &zero).unwrap(), M::identity(2));
        assert_eq!(template_ab(&zero, &one).unwrap(), M::from_i64(&[&[0, 1], &[1, 0]]));
        assert_eq!(template_ab_factored(&zero, &one).unwrap(), M::from_i64(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn ef_small_cases() {
        let one = M::identity(1);
        let zero = M::zeros(1, 1);
        assert_eq!(template_ef(&one, &zero).unwrap(), M::from_i64(&[&[1, 0], &[0, -1]]));
        assert_eq!(template_ef(&zero, &one).unwrap(), M::from_i64(&[&[0, 1], &[1, 0]]));
        assert_eq!(template_ef_factored(&one, &zero).unwrap(), M::from_i64(&[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn size_mismatch_rejected() {
        assert!(template_ab(&M::identity(2), &M::identity(3)).is_err());
        assert!(template_ef(&M::zeros(2, 3), &M::zeros(2, 3)).is_err());
    }
}
