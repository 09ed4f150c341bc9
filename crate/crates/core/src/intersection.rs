//! Intersection numbers of a lamination with the coordinate curve system.

use crate::error::Error;
use crate::scalar::{cplus, Scalar};

/// `(alpha_1..alpha_2n; beta_1..beta_{n+1}; gamma; c)`.
///
/// Storage is 0-based: `alpha()[0]` is alpha_1. A negative `c` means the
/// lamination holds `-c` parallel copies of the curve c (and crosses c
/// nowhere); a nonnegative `c` is the crossing count with c.
///
/// Construction only checks shape. Whether the numbers come from an actual
/// lamination is decided by [`validate_intersections`](crate::validate_intersections).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionVector<S> {
    n: usize,
    alpha: Vec<S>,
    beta: Vec<S>,
    gamma: S,
    c: S,
}

impl<S: Scalar> IntersectionVector<S> {
    pub fn new(n: usize, alpha: Vec<S>, beta: Vec<S>, gamma: S, c: S) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::TooFewPunctures(n));
        }
        check_len("alpha", n, 2 * n, alpha.len())?;
        check_len("beta", n, n + 1, beta.len())?;
        Ok(Self {
            n,
            alpha,
            beta,
            gamma,
            c,
        })
    }

    /// Convenience constructor from `i64` literals.
    pub fn from_i64(n: usize, alpha: &[i64], beta: &[i64], gamma: i64, c: i64) -> Result<Self, Error> {
        let conv = |v: &[i64]| v.iter().map(|&x| crate::scalar::int(x)).collect();
        Self::new(n, conv(alpha), conv(beta), crate::scalar::int(gamma), crate::scalar::int(c))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &[S] {
        &self.alpha
    }

    pub fn beta(&self) -> &[S] {
        &self.beta
    }

    pub fn gamma(&self) -> &S {
        &self.gamma
    }

    pub fn c(&self) -> &S {
        &self.c
    }

    pub fn cplus(&self) -> S {
        cplus(&self.c)
    }

    /// alpha_{2i-1} for 1-based region index `i`.
    pub(crate) fn alpha_odd(&self, i: usize) -> &S {
        &self.alpha[2 * i - 2]
    }

    /// alpha_{2i} for 1-based region index `i`.
    pub(crate) fn alpha_even(&self, i: usize) -> &S {
        &self.alpha[2 * i - 1]
    }

    /// beta_j, 1-based.
    pub(crate) fn beta_at(&self, j: usize) -> &S {
        &self.beta[j - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.iter().all(|x| x.is_zero())
            && self.beta.iter().all(|x| x.is_zero())
            && self.gamma.is_zero()
            && self.c.is_zero()
    }
}

pub(crate) fn check_len(field: &'static str, n: usize, expected: usize, got: usize) -> Result<(), Error> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            field,
            n,
            expected,
            got,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_single_puncture() {
        let err = IntersectionVector::<i64>::from_i64(1, &[0, 0], &[0, 0], 0, 0).unwrap_err();
        assert_eq!(err, Error::TooFewPunctures(1));
    }

    #[test]
    fn rejects_wrong_lengths() {
        let err = IntersectionVector::<i64>::from_i64(2, &[0, 0, 0], &[0, 0, 0], 0, 0).unwrap_err();
        assert!(matches!(err, Error::LengthMismatch { field: "alpha", expected: 4, got: 3, .. }));
        let err = IntersectionVector::<i64>::from_i64(2, &[0; 4], &[0; 4], 0, 0).unwrap_err();
        assert!(matches!(err, Error::LengthMismatch { field: "beta", expected: 3, got: 4, .. }));
    }

    #[test]
    fn one_based_accessors() {
        let v = IntersectionVector::<i64>::from_i64(3, &[4, 1, 3, 2, 4, 1], &[3, 5, 5, 3], 3, 1).unwrap();
        assert_eq!(*v.alpha_odd(2), 3);
        assert_eq!(*v.alpha_even(2), 2);
        assert_eq!(*v.beta_at(4), 3);
        assert_eq!(v.cplus(), 1);
    }
}
