//! Path-component census of a lamination.
//!
//! Cutting the surface along the beta arcs leaves one strip `U_i` around
//! each puncture and one region `G` holding the handle. Inside `U_i` a
//! minimal lamination is a union of above arcs, below arcs and loops around
//! the puncture; inside `G` it is a union of front and back genus arcs,
//! copies of the longitude c, and twisting arcs crossing c. A [`Decomposition`]
//! records how many of each there are.

use std::fmt;

use crate::coordinates::{check_sign, total_twist, DynnikovCoordinates};
use crate::error::Error;
use crate::intersection::IntersectionVector;
use crate::scalar::{cplus, half, Scalar};
use crate::validate::validate_intersections;

/// Direction of the twisting components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum TwistSign {
    /// Clockwise.
    Negative,
    #[default]
    Zero,
    /// Counterclockwise.
    Positive,
}

impl TwistSign {
    pub fn of<S: Scalar>(value: &S) -> Self {
        if value.is_negative() {
            TwistSign::Negative
        } else if value.is_positive() {
            TwistSign::Positive
        } else {
            TwistSign::Zero
        }
    }

    pub fn from_i64(value: i64) -> Result<Self, Error> {
        match value {
            -1 => Ok(TwistSign::Negative),
            0 => Ok(TwistSign::Zero),
            1 => Ok(TwistSign::Positive),
            other => Err(Error::BadTwistSign(other)),
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            TwistSign::Negative => -1,
            TwistSign::Zero => 0,
            TwistSign::Positive => 1,
        }
    }

    /// `sign * magnitude`.
    pub fn apply<S: Scalar>(self, magnitude: S) -> S {
        match self {
            TwistSign::Negative => -magnitude,
            TwistSign::Zero => S::zero(),
            TwistSign::Positive => magnitude,
        }
    }
}

impl fmt::Display for TwistSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwistSign::Negative => "\u{2212}",
            TwistSign::Zero => "0",
            TwistSign::Positive => "+",
        })
    }
}

/// Twisting components carry twist numbers `t` or `t + 1`; `m` of them
/// carry `t + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistSplit<S> {
    pub t: S,
    pub m: S,
}

impl<S: Scalar> TwistSplit<S> {
    pub fn zero() -> Self {
        Self {
            t: S::zero(),
            m: S::zero(),
        }
    }

    /// `m + t * count`.
    pub fn total(&self, count: &S) -> S {
        self.m.clone() + self.t.clone() * count.clone()
    }
}

/// Splits a total twist evenly over `count` components, `m` taken as the
/// least nonnegative residue of `total` mod `count`.
pub fn twist_split<S: Scalar>(total: &S, count: &S) -> Result<TwistSplit<S>, Error> {
    let bad = || Error::BadTwistSplit {
        total: total.to_string(),
        count: count.to_string(),
    };
    if total.is_negative() || count.is_negative() {
        return Err(bad());
    }
    if count.is_zero() {
        return if total.is_zero() { Ok(TwistSplit::zero()) } else { Err(bad()) };
    }
    let (t, m) = total.div_mod_floor(count);
    Ok(TwistSplit { t, m })
}

/// Census of path components. Vectors are indexed by region, `U_1` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition<S> {
    pub n: usize,
    pub above: Vec<S>,
    pub below: Vec<S>,
    /// Signed loop counts: negative for left loops, positive for right loops.
    pub loops: Vec<S>,
    pub front_genus: S,
    pub back_genus: S,
    pub c_copies: S,
    pub twisting_count: S,
    pub twist_sign: TwistSign,
    pub twist_split: TwistSplit<S>,
}

impl<S: Scalar> Decomposition<S> {
    /// A census with nothing in it, to be filled in field by field.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            above: vec![S::zero(); n],
            below: vec![S::zero(); n],
            loops: vec![S::zero(); n],
            front_genus: S::zero(),
            back_genus: S::zero(),
            c_copies: S::zero(),
            twisting_count: S::zero(),
            twist_sign: TwistSign::Zero,
            twist_split: TwistSplit::zero(),
        }
    }

    /// `|T|`.
    pub fn total_twist(&self) -> S {
        self.twist_split.total(&self.twisting_count)
    }

    /// Signed `T`.
    pub fn signed_twist(&self) -> S {
        self.twist_sign.apply(self.total_twist())
    }

    /// The signed `c` entry this census encodes to.
    pub fn c(&self) -> S {
        if self.twisting_count.is_positive() {
            self.twisting_count.clone()
        } else {
            -self.c_copies.clone()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.above.iter().chain(&self.below).chain(&self.loops).all(|x| x.is_zero())
            && self.front_genus.is_zero()
            && self.back_genus.is_zero()
            && self.c_copies.is_zero()
            && self.twisting_count.is_zero()
    }

    /// Checks the structural invariants. Consistency of the counts across
    /// the beta arcs is not checked here; see
    /// [`oracle_intersections`](crate::oracle::oracle_intersections).
    pub fn check(&self) -> Result<(), Error> {
        let bad = |msg: String| Err(Error::CensusInvariant(msg));
        if self.n < 2 {
            return Err(Error::TooFewPunctures(self.n));
        }
        for (field, v) in [("above", &self.above), ("below", &self.below), ("loops", &self.loops)] {
            crate::intersection::check_len(field, self.n, self.n, v.len())?;
        }
        for (i, (a, b)) in self.above.iter().zip(&self.below).enumerate() {
            if a.is_negative() || b.is_negative() {
                return bad(format!("U{}: negative above/below count ({a}, {b})", i + 1));
            }
        }
        for (name, v) in [
            ("front_genus", &self.front_genus),
            ("back_genus", &self.back_genus),
            ("c_copies", &self.c_copies),
            ("twisting_count", &self.twisting_count),
        ] {
            if v.is_negative() {
                return bad(format!("{name} = {v} is negative"));
            }
        }
        if self.c_copies.is_positive() && self.twisting_count.is_positive() {
            return bad("copies of c and twisting components cannot coexist".into());
        }
        let split = &self.twist_split;
        if split.t.is_negative() || split.m.is_negative() {
            return bad(format!("twist split (t={}, m={}) is negative", split.t, split.m));
        }
        if self.twisting_count.is_zero() {
            if *split != TwistSplit::zero() || self.twist_sign != TwistSign::Zero {
                return bad("twist data present without twisting components".into());
            }
        } else if split.m >= self.twisting_count {
            return bad(format!(
                "m = {} must be below the twisting count {}",
                split.m, self.twisting_count
            ));
        }
        if self.total_twist().is_zero() != (self.twist_sign == TwistSign::Zero) {
            return bad(format!(
                "twist sign {} does not match total twist {}",
                self.twist_sign,
                self.total_twist()
            ));
        }
        let min = self
            .above
            .iter()
            .zip(&self.below)
            .map(|(a, b)| a.min(b))
            .chain([&self.front_genus, &self.back_genus])
            .min()
            .expect("n >= 2");
        if min.is_positive() {
            return bad("no above/below or genus count is zero: a boundary-parallel curve is present".into());
        }
        if self.is_empty() {
            return Err(Error::EmptyLamination);
        }
        Ok(())
    }
}

/// Reads the component census off a valid intersection vector.
pub fn decompose<S: Scalar>(v: &IntersectionVector<S>, sign: TwistSign) -> Result<Decomposition<S>, Error> {
    let report = validate_intersections(v);
    if !report.is_valid() {
        return Err(Error::InvalidIntersections(report));
    }
    let total = total_twist(v);
    check_sign(v, &total, sign)?;

    let n = v.n();
    let cp = v.cplus();
    let mut d = Decomposition::empty(n);
    for i in 1..=n {
        let b = half(&(v.beta_at(i).clone() - v.beta_at(i + 1).clone())).expect("validated parity");
        d.above[i - 1] = v.alpha_odd(i).clone() - b.abs();
        d.below[i - 1] = v.alpha_even(i).clone() - b.abs();
        d.loops[i - 1] = b;
    }
    d.front_genus = half(&(v.beta_at(n + 1).clone() - cp.clone())).expect("validated");
    d.back_genus = half(&(v.beta_at(1).clone() - cp.clone())).expect("validated");
    d.c_copies = if v.c().is_negative() { -v.c().clone() } else { S::zero() };
    d.twist_split = twist_split(&total, &cp)?;
    d.twisting_count = cp;
    d.twist_sign = sign;
    Ok(d)
}

/// Coordinates of the lamination a census describes.
pub fn coordinates_from_decomposition<S: Scalar>(d: &Decomposition<S>) -> Result<DynnikovCoordinates<S>, Error> {
    d.check()?;
    let cp = cplus(&d.c());
    let mut a = Vec::with_capacity(d.n);
    for (i, (above, below)) in d.above.iter().zip(&d.below).enumerate() {
        // alpha_{2i} - alpha_{2i-1} = below - above: the loops cross both arcs
        let diff = below.clone() - above.clone() - cp.clone();
        a.push(half(&diff).ok_or(Error::CensusParity { region: i + 1 })?);
    }
    DynnikovCoordinates::new(d.n, a, d.loops.clone(), d.signed_twist(), d.c())
}
