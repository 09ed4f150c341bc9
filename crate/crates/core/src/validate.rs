//! Realizability checks for intersection vectors.
//!
//! Not every vector of nonnegative integers is the intersection data of a
//! lamination. [`validate_intersections`] runs every known necessary
//! condition and reports all that fail, not just the first. Quantities that
//! are halves of integers (loop counts, genus counts) are handled doubled so
//! that a parity failure does not hide the remaining checks.

use std::fmt;

use crate::intersection::IntersectionVector;
use crate::scalar::{two, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    Nonnegativity,
    Parity,
    GenusCount,
    RegionEquality,
    Triangle,
    TwistConsistency,
    CopyConsistency,
    BoundaryParallel,
    Empty,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::Nonnegativity => "nonnegativity",
            Condition::Parity => "parity",
            Condition::GenusCount => "genus-count",
            Condition::RegionEquality => "region-equality",
            Condition::Triangle => "triangle",
            Condition::TwistConsistency => "twist-consistency",
            Condition::CopyConsistency => "copy-consistency",
            Condition::BoundaryParallel => "boundary-parallel",
            Condition::Empty => "empty",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Violation {
    pub condition: Condition,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, condition: Condition) -> bool {
        self.violations.iter().any(|v| v.condition == condition)
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    fn push(&mut self, condition: Condition, detail: String) {
        self.violations.push(Violation { condition, detail });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}: {}", v.condition, v.detail)?;
        }
        Ok(())
    }
}

pub fn validate_intersections<S: Scalar>(v: &IntersectionVector<S>) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = v.n();
    let cp = v.cplus();
    let two: S = two();

    for (k, x) in v.alpha().iter().enumerate() {
        if x.is_negative() {
            report.push(Condition::Nonnegativity, format!("alpha_{} = {x}", k + 1));
        }
    }
    for (k, x) in v.beta().iter().enumerate() {
        if x.is_negative() {
            report.push(Condition::Nonnegativity, format!("beta_{} = {x}", k + 1));
        }
    }
    if v.gamma().is_negative() {
        report.push(Condition::Nonnegativity, format!("gamma = {}", v.gamma()));
    }

    // Doubled loop counts 2b_i = beta_i - beta_{i+1}.
    let loops2: Vec<S> = (1..=n).map(|i| v.beta_at(i).clone() - v.beta_at(i + 1).clone()).collect();

    for i in 1..=n {
        if loops2[i - 1].is_odd() {
            report.push(
                Condition::Parity,
                format!(
                    "beta_{i} - beta_{} = {} is odd",
                    i + 1,
                    loops2[i - 1]
                ),
            );
        }
        let sum = v.alpha_even(i).clone() + v.alpha_odd(i).clone();
        if (sum.clone() - cp.clone()).is_odd() {
            report.push(
                Condition::Parity,
                format!("alpha_{} + alpha_{} - c+ = {} is odd", 2 * i, 2 * i - 1, sum - cp.clone()),
            );
        }
    }

    let front2 = v.beta_at(n + 1).clone() - cp.clone();
    let back2 = v.beta_at(1).clone() - cp.clone();
    for (arc, name, doubled) in [(n + 1, "front", &front2), (1, "back", &back2)] {
        if doubled.is_negative() || doubled.is_odd() {
            report.push(
                Condition::GenusCount,
                format!("{name} genus count (beta_{arc} - c+)/2 = {doubled}/2 is not a nonnegative integer"),
            );
        }
    }

    let mut min_doubled: Option<S> = None;
    let mut track_min = |x: &S| {
        if min_doubled.as_ref().is_none_or(|m| x < m) {
            min_doubled = Some(x.clone());
        }
    };

    for i in 1..=n {
        let d = &loops2[i - 1];
        let sum = v.alpha_even(i).clone() + v.alpha_odd(i).clone();
        let (expected, which) = if d.is_negative() {
            (v.beta_at(i + 1).clone(), format!("beta_{}", i + 1))
        } else if d.is_positive() {
            (v.beta_at(i).clone(), format!("beta_{i}"))
        } else {
            (v.beta_at(i).clone(), format!("beta_{i} = beta_{}", i + 1))
        };
        if sum != expected {
            report.push(
                Condition::RegionEquality,
                format!(
                    "U{i}: alpha_{} + alpha_{} = {sum} but {which} = {expected}",
                    2 * i - 1,
                    2 * i
                ),
            );
        }

        let above2 = two.clone() * v.alpha_odd(i).clone() - d.abs();
        let below2 = two.clone() * v.alpha_even(i).clone() - d.abs();
        if above2.is_negative() {
            report.push(
                Condition::Triangle,
                format!("U{i}: above count alpha_{} - |b_{i}| = {above2}/2 < 0", 2 * i - 1),
            );
        }
        if below2.is_negative() {
            report.push(
                Condition::Triangle,
                format!("U{i}: below count alpha_{} - |b_{i}| = {below2}/2 < 0", 2 * i),
            );
        }
        track_min(&above2);
        track_min(&below2);
    }

    let gamma2 = two.clone() * v.gamma().clone();
    if v.c().is_positive() {
        let twist2 = gamma2 - front2.clone() - back2.clone();
        if twist2.is_negative() {
            report.push(
                Condition::TwistConsistency,
                format!("total twist gamma - l - l' = {twist2}/2 < 0"),
            );
        }
    } else {
        let copies2 = gamma2 - v.beta_at(n + 1).clone() - v.beta_at(1).clone();
        let declared2 = -(two.clone() * v.c().clone());
        if copies2 != declared2 {
            report.push(
                Condition::CopyConsistency,
                format!(
                    "gamma - beta_{}/2 - beta_1/2 = {copies2}/2 but c = {} declares {} copies",
                    n + 1,
                    v.c(),
                    -v.c().clone()
                ),
            );
        }
    }

    track_min(&front2);
    track_min(&back2);
    if let Some(m) = min_doubled {
        if m.is_positive() {
            report.push(
                Condition::BoundaryParallel,
                format!(
                    "every above/below count and both genus counts are positive (min doubled = {m}); a boundary-parallel curve would be present"
                ),
            );
        }
    }

    if v.is_zero() {
        report.push(Condition::Empty, "the zero vector is the empty lamination".to_string());
    }

    report
}
