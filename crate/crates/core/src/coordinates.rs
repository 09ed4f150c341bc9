//! The coordinate function and its inverse.

use crate::census::TwistSign;
use crate::error::Error;
use crate::intersection::{check_len, IntersectionVector};
use crate::scalar::{cplus, half, two, Scalar};
use crate::validate::validate_intersections;

/// `(a_1..a_n; b_1..b_n; T; c)`.
///
/// Integer vectors outside the excluded set (the zero vector, and anything
/// with `c <= 0` and `T != 0`) are exactly the coordinates of laminations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynnikovCoordinates<S> {
    n: usize,
    a: Vec<S>,
    b: Vec<S>,
    twist: S,
    c: S,
}

impl<S: Scalar> DynnikovCoordinates<S> {
    pub fn new(n: usize, a: Vec<S>, b: Vec<S>, twist: S, c: S) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::TooFewPunctures(n));
        }
        check_len("a", n, n, a.len())?;
        check_len("b", n, n, b.len())?;
        Ok(Self { n, a, b, twist, c })
    }

    pub fn from_i64(n: usize, a: &[i64], b: &[i64], twist: i64, c: i64) -> Result<Self, Error> {
        let conv = |v: &[i64]| v.iter().map(|&x| crate::scalar::int(x)).collect();
        Self::new(n, conv(a), conv(b), crate::scalar::int(twist), crate::scalar::int(c))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &[S] {
        &self.a
    }

    pub fn b(&self) -> &[S] {
        &self.b
    }

    /// Signed total twist `T`.
    pub fn twist(&self) -> &S {
        &self.twist
    }

    pub fn c(&self) -> &S {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
            && self.b.iter().all(|x| x.is_zero())
            && self.twist.is_zero()
            && self.c.is_zero()
    }

    /// Membership in the excluded set: not the coordinates of any lamination.
    pub fn is_excluded(&self) -> bool {
        self.is_zero() || (!self.c.is_positive() && !self.twist.is_zero())
    }

    /// The sign to hand back to [`coordinates_from_intersections`] to
    /// recover these coordinates.
    pub fn twist_sign(&self) -> TwistSign {
        TwistSign::of(&self.twist)
    }

    fn check_not_excluded(&self) -> Result<(), Error> {
        if self.is_zero() {
            return Err(Error::EmptyLamination);
        }
        if !self.c.is_positive() && !self.twist.is_zero() {
            return Err(Error::TwistWithoutTwistingComponents {
                twist: self.twist.to_string(),
                c: self.c.to_string(),
            });
        }
        Ok(())
    }
}

/// Total twist magnitude `|T|` read off a vector, zero when `c <= 0`.
///
/// Callers must have validated `v`; the division is exact for valid input.
pub(crate) fn total_twist<S: Scalar>(v: &IntersectionVector<S>) -> S {
    let cp = v.cplus();
    if cp.is_zero() {
        return S::zero();
    }
    let n = v.n();
    let front = half(&(v.beta_at(n + 1).clone() - cp.clone())).expect("validated");
    let back = half(&(v.beta_at(1).clone() - cp)).expect("validated");
    v.gamma().clone() - front - back
}

pub(crate) fn check_sign<S: Scalar>(v: &IntersectionVector<S>, total: &S, sign: TwistSign) -> Result<(), Error> {
    let needs_direction = v.c().is_positive() && total.is_positive();
    let ok = match sign {
        TwistSign::Zero => !needs_direction,
        TwistSign::Negative | TwistSign::Positive => needs_direction,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InconsistentTwistSign {
            sign: sign.as_i8(),
            total: total.to_string(),
            c: v.c().to_string(),
        })
    }
}

/// Encodes a valid intersection vector.
///
/// Intersection numbers do not see the direction of twisting, so it is
/// passed separately; it must be zero exactly when there is no twist.
pub fn coordinates_from_intersections<S: Scalar>(
    v: &IntersectionVector<S>,
    sign: TwistSign,
) -> Result<DynnikovCoordinates<S>, Error> {
    let report = validate_intersections(v);
    if !report.is_valid() {
        return Err(Error::InvalidIntersections(report));
    }
    let total = total_twist(v);
    check_sign(v, &total, sign)?;

    let n = v.n();
    let cp = v.cplus();
    let a = (1..=n)
        .map(|i| half(&(v.alpha_even(i).clone() - v.alpha_odd(i).clone() - cp.clone())).expect("validated parity"))
        .collect();
    let b = (1..=n)
        .map(|i| half(&(v.beta_at(i).clone() - v.beta_at(i + 1).clone())).expect("validated parity"))
        .collect();
    let twist = sign.apply(total);
    Ok(DynnikovCoordinates {
        n,
        a,
        b,
        twist,
        c: v.c().clone(),
    })
}

/// `max_k [ 2 max(b_k, 0) + |2 a_k + c+| - 2 sum_{j>=k} b_j ]`.
pub fn kappa<S: Scalar>(d: &DynnikovCoordinates<S>) -> S {
    let cp = cplus(&d.c);
    let two: S = two();
    let mut tail = S::zero();
    let mut best: Option<S> = None;
    for k in (0..d.n).rev() {
        tail = tail + d.b[k].clone();
        let pos = if d.b[k].is_positive() { d.b[k].clone() } else { S::zero() };
        let term = two.clone() * pos + (two.clone() * d.a[k].clone() + cp.clone()).abs() - two.clone() * tail.clone();
        if best.as_ref().is_none_or(|m| term > *m) {
            best = Some(term);
        }
    }
    best.expect("n >= 2")
}

/// Decodes coordinates into the intersection numbers of the unique
/// lamination they describe.
pub fn intersections_from_coordinates<S: Scalar>(d: &DynnikovCoordinates<S>) -> Result<IntersectionVector<S>, Error> {
    d.check_not_excluded()?;
    let n = d.n;
    let cp = cplus(&d.c);
    let two: S = two();

    let sum_b = d.b.iter().fold(S::zero(), |acc, x| acc + x.clone());
    let last = [cp.clone(), cp.clone() - two.clone() * sum_b.clone(), kappa(d)]
        .into_iter()
        .max()
        .expect("nonempty");

    // beta_i = 2 sum_{j>=i} b_j + beta_{n+1}
    let mut beta = vec![S::zero(); n + 1];
    beta[n] = last.clone();
    for i in (0..n).rev() {
        beta[i] = beta[i + 1].clone() + two.clone() * d.b[i].clone();
    }

    let mut alpha = Vec::with_capacity(2 * n);
    for h in 0..n {
        let shift = two.clone() * d.a[h].clone() + cp.clone();
        let side = if d.b[h].is_negative() { &beta[h + 1] } else { &beta[h] };
        debug_assert!(!d.b[h].is_zero() || beta[h] == beta[h + 1]);
        let odd = half(&(side.clone() - shift.clone())).expect("beta and 2a + c+ share parity");
        let even = half(&(side.clone() + shift)).expect("beta and 2a + c+ share parity");
        alpha.push(odd);
        alpha.push(even);
    }

    let g_part = if d.c.is_positive() { d.twist.abs() } else { d.c.abs() };
    let gamma = g_part + sum_b + last - cp;

    IntersectionVector::new(n, alpha, beta, gamma, d.c.clone())
}
