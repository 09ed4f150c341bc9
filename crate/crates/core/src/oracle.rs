//! Ground truth by direct counting.
//!
//! [`oracle_intersections`] builds an intersection vector from a census by
//! counting, arc by arc, how often each kind of path component crosses it.
//! It never touches the inversion formulas, so agreement between the two
//! routes is real evidence. The generators produce censuses to feed it.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::census::{Decomposition, TwistSign, TwistSplit};
use crate::coordinates::DynnikovCoordinates;
use crate::error::Error;
use crate::intersection::IntersectionVector;
use crate::scalar::{int, two, Scalar};

/// Draws per census before giving up.
pub const MAX_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorConfig {
    pub n: usize,
    /// Upper bound on every census field (and on `|loops_i|`, `t`).
    pub max_count: u64,
    pub seed: u64,
}

fn positive_part<S: Scalar>(x: &S) -> S {
    if x.is_positive() {
        x.clone()
    } else {
        S::zero()
    }
}

/// Intersection numbers of the lamination a census describes, by counting.
///
/// Every beta arc is crossed from both sides: beta_i borders `U_{i-1}` and
/// `U_i` (with `G` standing in at either end), and a census whose two counts
/// disagree cannot be glued into a lamination.
pub fn oracle_intersections<S: Scalar>(d: &Decomposition<S>) -> Result<IntersectionVector<S>, Error> {
    d.check()?;
    let n = d.n;
    let two: S = two();
    let twisting = d.twisting_count.clone();

    let mut alpha = Vec::with_capacity(2 * n);
    for i in 0..n {
        let loops = d.loops[i].abs();
        // above arcs cross alpha_{2i-1}, below arcs alpha_{2i}, loops both
        alpha.push(d.above[i].clone() + loops.clone());
        alpha.push(d.below[i].clone() + loops);
    }

    // From U_i: above + below + two ends of each right loop (on beta_i)
    // or of each left loop (on beta_{i+1}).
    let strip = |i: usize, loops: &S| d.above[i].clone() + d.below[i].clone() + two.clone() * positive_part(loops);
    let mut beta = Vec::with_capacity(n + 1);
    for arc in 1..=n + 1 {
        let from_left = if arc == 1 {
            twisting.clone() + two.clone() * d.back_genus.clone()
        } else {
            strip(arc - 2, &-d.loops[arc - 2].clone())
        };
        let from_right = if arc == n + 1 {
            twisting.clone() + two.clone() * d.front_genus.clone()
        } else {
            strip(arc - 1, &d.loops[arc - 1])
        };
        if from_left != from_right {
            return Err(Error::BetaMismatch {
                arc,
                left: from_left.to_string(),
                right: from_right.to_string(),
            });
        }
        beta.push(from_left);
    }

    // Genus arcs and c-copies cross gamma once each; a twisting component
    // crosses it once per twist.
    let gamma = d.front_genus.clone() + d.back_genus.clone() + d.c_copies.clone() + d.total_twist();

    IntersectionVector::new(n, alpha, beta, gamma, d.c())
}

/// Deterministic stream of random valid censuses.
pub struct CensusStream<S> {
    cfg: GeneratorConfig,
    rng: ChaCha8Rng,
    _scalar: std::marker::PhantomData<S>,
}

impl<S: Scalar> CensusStream<S> {
    pub fn new(cfg: GeneratorConfig) -> Self {
        Self {
            cfg,
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            _scalar: std::marker::PhantomData,
        }
    }

    pub fn draw(&mut self) -> Result<Decomposition<S>, Error> {
        for _ in 0..MAX_ATTEMPTS {
            if let Some(d) = self.attempt() {
                return Ok(d);
            }
        }
        Err(Error::GenerationFailure { attempts: MAX_ATTEMPTS })
    }

    fn attempt(&mut self) -> Option<Decomposition<S>> {
        let n = self.cfg.n;
        let cap = i64::try_from(self.cfg.max_count).unwrap_or(i64::MAX / 4);
        let rng = &mut self.rng;

        let (copies, twisting) = match (cap > 0).then(|| rng.gen_range(0..3)) {
            Some(1) => (rng.gen_range(1..=cap), 0),
            Some(2) => (0, rng.gen_range(1..=cap)),
            _ => (0, 0),
        };
        let loops: Vec<i64> = (0..n).map(|_| rng.gen_range(-cap..=cap)).collect();
        let front = rng.gen_range(0..=cap);
        // beta_1 is fixed by beta_{n+1} and the loops, so l' is too
        let back = front + loops.iter().sum::<i64>();
        if !(0..=cap).contains(&back) {
            return None;
        }

        let mut beta = vec![0i64; n + 1];
        beta[n] = twisting + 2 * front;
        for i in (0..n).rev() {
            beta[i] = beta[i + 1] + 2 * loops[i];
        }
        let mut sums = Vec::with_capacity(n);
        let mut above = Vec::with_capacity(n);
        for i in 0..n {
            let s = beta[i] - 2 * loops[i].max(0);
            let lo = (s - cap).max(0);
            let hi = s.min(cap);
            if s < 0 || lo > hi {
                return None;
            }
            sums.push(s);
            above.push(rng.gen_range(lo..=hi));
        }

        let parallel = above
            .iter()
            .zip(&sums)
            .map(|(a, s)| (*a).min(s - a))
            .chain([front, back])
            .min()
            .unwrap_or(0)
            > 0;
        if parallel {
            let i = rng.gen_range(0..n);
            if sums[i] > cap {
                return None;
            }
            above[i] = if rng.gen_bool(0.5) { 0 } else { sums[i] };
        }

        let (sign, split) = if twisting > 0 {
            let t = rng.gen_range(0..=cap);
            let m = rng.gen_range(0..twisting);
            let sign = if m + t * twisting == 0 {
                TwistSign::Zero
            } else if rng.gen_bool(0.5) {
                TwistSign::Negative
            } else {
                TwistSign::Positive
            };
            (sign, (t, m))
        } else {
            (TwistSign::Zero, (0, 0))
        };

        let d = Decomposition {
            n,
            below: above.iter().zip(&sums).map(|(a, s)| int(s - a)).collect(),
            above: above.into_iter().map(int).collect(),
            loops: loops.into_iter().map(int).collect(),
            front_genus: int(front),
            back_genus: int(back),
            c_copies: int(copies),
            twisting_count: int(twisting),
            twist_sign: sign,
            twist_split: TwistSplit {
                t: int(split.0),
                m: int(split.1),
            },
        };
        if d.is_empty() {
            return None;
        }
        debug_assert!(d.check().is_ok());
        Some(d)
    }
}

impl<S: Scalar> Iterator for CensusStream<S> {
    type Item = Result<Decomposition<S>, Error>;

    fn next(&mut self) -> Option<Self::Item> {
        Some(self.draw())
    }
}

/// One random valid census.
pub fn random_census<S: Scalar>(cfg: GeneratorConfig) -> Result<Decomposition<S>, Error> {
    if cfg.n < 2 {
        return Err(Error::TooFewPunctures(cfg.n));
    }
    CensusStream::new(cfg).draw()
}

/// Random coordinates with entries in `[-bound, bound]`, outside the
/// excluded set. `bound` must be positive.
pub fn random_coordinates<S: Scalar, R: Rng + ?Sized>(n: usize, bound: i64, rng: &mut R) -> DynnikovCoordinates<S> {
    assert!(bound > 0, "bound must be positive");
    loop {
        let mut draw = |k| (0..k).map(|_| rng.gen_range(-bound..=bound)).collect::<Vec<_>>();
        let a = draw(n);
        let b = draw(n);
        let c = rng.gen_range(-bound..=bound);
        // T must vanish when c <= 0
        let twist = if c <= 0 { 0 } else { rng.gen_range(-bound..=bound) };
        let d = DynnikovCoordinates::from_i64(n, &a, &b, twist, c).expect("shape is right");
        if !d.is_excluded() {
            return d;
        }
    }
}

/// Every valid census with all fields at most `cap`, sorted.
pub fn enumerate_small<S: Scalar>(n: usize, cap: u64) -> impl Iterator<Item = Decomposition<S>> {
    let cap = i64::try_from(cap).expect("cap is small");
    let mut out = Vec::new();
    if n >= 2 {
        for g in g_states(cap) {
            let mut loops = vec![-cap; n];
            loop {
                for front in 0..=cap {
                    let back = front + loops.iter().sum::<i64>();
                    if (0..=cap).contains(&back) {
                        push_regions(n, cap, &loops, front, back, &g, &mut out);
                    }
                }
                if !odometer(&mut loops, -cap, cap) {
                    break;
                }
            }
        }
    }
    out.sort();
    out.into_iter()
}

struct GState {
    copies: i64,
    twisting: i64,
    sign: TwistSign,
    t: i64,
    m: i64,
}

fn g_states(cap: i64) -> Vec<GState> {
    let mut states = vec![GState {
        copies: 0,
        twisting: 0,
        sign: TwistSign::Zero,
        t: 0,
        m: 0,
    }];
    for p in 1..=cap {
        states.push(GState {
            copies: p,
            twisting: 0,
            sign: TwistSign::Zero,
            t: 0,
            m: 0,
        });
    }
    for k in 1..=cap {
        for t in 0..=cap {
            for m in 0..k {
                let signs: &[TwistSign] = if m + t * k == 0 {
                    &[TwistSign::Zero]
                } else {
                    &[TwistSign::Negative, TwistSign::Positive]
                };
                for &sign in signs {
                    states.push(GState {
                        copies: 0,
                        twisting: k,
                        sign,
                        t,
                        m,
                    });
                }
            }
        }
    }
    states
}

/// Advances `digits` as a mixed counter over `[lo, hi]`; false on wrap.
fn odometer(digits: &mut [i64], lo: i64, hi: i64) -> bool {
    for d in digits.iter_mut().rev() {
        if *d < hi {
            *d += 1;
            return true;
        }
        *d = lo;
    }
    false
}

fn push_regions<S: Scalar>(
    n: usize,
    cap: i64,
    loops: &[i64],
    front: i64,
    back: i64,
    g: &GState,
    out: &mut Vec<Decomposition<S>>,
) {
    let mut beta = vec![0i64; n + 1];
    beta[n] = g.twisting + 2 * front;
    for i in (0..n).rev() {
        beta[i] = beta[i + 1] + 2 * loops[i];
    }
    let mut ranges = Vec::with_capacity(n);
    for i in 0..n {
        let s = beta[i] - 2 * loops[i].max(0);
        let lo = (s - cap).max(0);
        let hi = s.min(cap);
        if s < 0 || lo > hi {
            return;
        }
        ranges.push((s, lo, hi));
    }
    let mut above: Vec<i64> = ranges.iter().map(|r| r.1).collect();
    loop {
        let min = above
            .iter()
            .zip(&ranges)
            .map(|(a, r)| (*a).min(r.0 - a))
            .chain([front, back])
            .min()
            .unwrap_or(0);
        let d = Decomposition {
            n,
            above: above.iter().copied().map(int).collect(),
            below: above.iter().zip(&ranges).map(|(a, r)| int(r.0 - a)).collect(),
            loops: loops.iter().copied().map(int).collect(),
            front_genus: int(front),
            back_genus: int(back),
            c_copies: int(g.copies),
            twisting_count: int(g.twisting),
            twist_sign: g.sign,
            twist_split: TwistSplit {
                t: int(g.t),
                m: int(g.m),
            },
        };
        if min == 0 && !d.is_empty() {
            out.push(d);
        }
        // per-region counter over [lo_i, hi_i]
        let mut k = n;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if above[k] < ranges[k].2 {
                above[k] += 1;
                break;
            }
            above[k] = ranges[k].1;
        }
    }
}
