//! Seeded property runs behind the `roundtrip` subcommand.
//!
//! Two suites: random coordinates pushed through decode/validate/encode,
//! and random censuses pushed through the counting oracle. The first
//! failure is shrunk greedily before it is reported.

use dynnikov::oracle::{random_coordinates, CensusStream};
use dynnikov::{
    coordinates_from_decomposition, coordinates_from_intersections, decompose, intersections_from_coordinates,
    oracle_intersections, twist_split, validate_intersections, Decomposition, DynnikovCoordinates, GeneratorConfig,
    TwistSign,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::wire::{CensusJson, CoordinatesJson};

/// Entry bound for random coordinates.
pub const COORDINATE_BOUND: i64 = 6;
/// Field bound for random censuses.
pub const CENSUS_MAX_COUNT: u64 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub n: usize,
    pub seed: u64,
    pub trials: usize,
    pub coordinates_checked: usize,
    pub censuses_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Counterexample {
    Coordinates(CoordinatesJson),
    Census(CensusJson),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub suite: &'static str,
    pub detail: String,
    pub counterexample: Box<Counterexample>,
}

/// Greedy shrinking: repeatedly move to the first candidate that still
/// fails, until none does. Returns the smallest failing value and its message.
pub fn shrink<T: Clone>(
    start: T,
    message: String,
    candidates: impl Fn(&T) -> Vec<T>,
    fails: impl Fn(&T) -> Option<String>,
) -> (T, String) {
    let (mut cur, mut msg) = (start, message);
    'outer: loop {
        for cand in candidates(&cur) {
            if let Some(m) = fails(&cand) {
                cur = cand;
                msg = m;
                continue 'outer;
            }
        }
        return (cur, msg);
    }
}

fn toward_zero(x: i64) -> Vec<i64> {
    let mut out = Vec::new();
    for y in [0, x / 2, x - x.signum()] {
        if y != x && !out.contains(&y) {
            out.push(y);
        }
    }
    out
}

/// Smaller coordinate vectors: one entry moved toward zero, staying outside
/// the excluded set.
pub fn coordinate_candidates(d: &DynnikovCoordinates) -> Vec<DynnikovCoordinates> {
    let mut flat: Vec<i64> = d.a().iter().chain(d.b()).chain([d.twist(), d.c()]).copied().collect();
    let n = d.n();
    let mut out = Vec::new();
    for k in 0..flat.len() {
        let orig = flat[k];
        for y in toward_zero(orig) {
            flat[k] = y;
            let mut twist = flat[2 * n];
            if flat[2 * n + 1] <= 0 {
                twist = 0;
            }
            let cand = DynnikovCoordinates::from_i64(n, &flat[..n], &flat[n..2 * n], twist, flat[2 * n + 1])
                .expect("shape is unchanged");
            if !cand.is_excluded() && &cand != d {
                out.push(cand);
            }
        }
        flat[k] = orig;
    }
    out
}

/// Smaller censuses: one count lowered by one, or the twist total lowered,
/// keeping the census structurally sound.
pub fn census_candidates(d: &Decomposition) -> Vec<Decomposition> {
    let mut out = Vec::new();
    let mut push = |c: Decomposition| {
        if c.check().is_ok() {
            out.push(c);
        }
    };
    for i in 0..d.n {
        for field in 0..3 {
            let mut c = d.clone();
            let slot = match field {
                0 => &mut c.above[i],
                1 => &mut c.below[i],
                _ => &mut c.loops[i],
            };
            if *slot != 0 {
                *slot -= slot.signum();
                push(c);
            }
        }
    }
    for field in 0..3 {
        let mut c = d.clone();
        let slot = match field {
            0 => &mut c.front_genus,
            1 => &mut c.back_genus,
            _ => &mut c.c_copies,
        };
        if *slot > 0 {
            *slot -= 1;
            push(c);
        }
    }
    let (k, total) = (d.twisting_count, d.total_twist());
    let mut twists = vec![(k, total - 1), (k - 1, total), (k - 1, total - 1)];
    twists.retain(|&(k, t)| k >= 0 && t >= 0);
    for (k, t) in twists {
        let mut c = d.clone();
        c.twisting_count = k;
        if t == 0 {
            c.twist_sign = TwistSign::Zero;
        }
        match twist_split(&t, &k) {
            Ok(split) => c.twist_split = split,
            Err(_) => continue,
        }
        push(c);
    }
    out
}

/// Round trip, validity, parity and doubling for one coordinate vector.
pub fn check_coordinates(d: &DynnikovCoordinates) -> Result<(), String> {
    let v = intersections_from_coordinates(d).map_err(|e| format!("decode failed: {e}"))?;
    let report = validate_intersections(&v);
    if !report.is_valid() {
        return Err(format!("decoded vector is invalid: {report}"));
    }
    let back = coordinates_from_intersections(&v, d.twist_sign()).map_err(|e| format!("encode failed: {e}"))?;
    if &back != d {
        return Err(format!("encode(decode(x)) = {:?}", CoordinatesJson::from(&back)));
    }
    let cp = v.cplus();
    if v.beta().windows(2).any(|w| (w[0] - w[1]) % 2 != 0) {
        return Err("beta differences are odd".into());
    }
    if v.alpha().chunks(2).any(|p| (p[0] + p[1] - cp) % 2 != 0) {
        return Err("alpha pair has the wrong parity".into());
    }
    let dbl = |xs: &[i64]| xs.iter().map(|x| 2 * x).collect::<Vec<_>>();
    let d2 = DynnikovCoordinates::new(d.n(), dbl(d.a()), dbl(d.b()), 2 * d.twist(), 2 * d.c()).expect("same shape");
    let v2 = intersections_from_coordinates(&d2).map_err(|e| format!("decode of doubled failed: {e}"))?;
    if v2.alpha() != dbl(v.alpha()) || v2.beta() != dbl(v.beta()) || *v2.gamma() != 2 * v.gamma() {
        return Err("doubling the coordinates does not double the intersections".into());
    }
    Ok(())
}

/// Oracle equivalence, inversion and the census identities for one census.
pub fn check_census(d: &Decomposition) -> Result<(), String> {
    let v = oracle_intersections(d).map_err(|e| format!("oracle failed: {e}"))?;
    let coords = coordinates_from_decomposition(d).map_err(|e| format!("census coordinates failed: {e}"))?;
    let decoded = intersections_from_coordinates(&coords).map_err(|e| format!("decode failed: {e}"))?;
    if decoded != v {
        return Err("oracle and decode disagree".into());
    }
    let back = decompose(&v, d.twist_sign).map_err(|e| format!("decompose failed: {e}"))?;
    if &back != d {
        return Err("decompose does not invert the oracle".into());
    }
    if *coords.c() <= 0 && *coords.twist() != 0 {
        return Err("twist without twisting components".into());
    }
    if d.c_copies > 0 && d.twisting_count > 0 {
        return Err("parallel copies coexist with twisting components".into());
    }
    let total = d.total_twist();
    if *v.gamma() != d.front_genus + d.back_genus + d.c_copies + total {
        return Err("gamma is not front + back + copies + |T|".into());
    }
    let (k, s) = (d.twisting_count, &d.twist_split);
    if k > 0 && !(0 <= s.m && s.m < k && s.t * (k - s.m) + (s.t + 1) * s.m == total) {
        return Err("twist split does not add up".into());
    }
    Ok(())
}

fn coordinate_failure(d: DynnikovCoordinates, msg: String, check: &impl Fn(&DynnikovCoordinates) -> Result<(), String>) -> Failure {
    let (d, detail) = shrink(d, msg, coordinate_candidates, |x| check(x).err());
    Failure {
        suite: "coordinates",
        detail,
        counterexample: Box::new(Counterexample::Coordinates(CoordinatesJson::from(&d))),
    }
}

fn census_failure(d: Decomposition, msg: String, check: &impl Fn(&Decomposition) -> Result<(), String>) -> Failure {
    let (d, detail) = shrink(d, msg, census_candidates, |x| check(x).err());
    Failure {
        suite: "census",
        detail,
        counterexample: Box::new(Counterexample::Census(CensusJson::from(&d))),
    }
}

/// Both suites with caller-supplied properties; the first failure is shrunk.
pub fn run_with(
    n: usize,
    seed: u64,
    trials: usize,
    coord_check: impl Fn(&DynnikovCoordinates) -> Result<(), String>,
    census_check: impl Fn(&Decomposition) -> Result<(), String>,
) -> Result<Summary, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let d = random_coordinates::<i64, _>(n, COORDINATE_BOUND, &mut rng);
        if let Err(msg) = coord_check(&d) {
            return Err(coordinate_failure(d, msg, &coord_check));
        }
    }
    let cfg = GeneratorConfig {
        n,
        max_count: CENSUS_MAX_COUNT,
        seed,
    };
    let mut stream = CensusStream::<i64>::new(cfg);
    for _ in 0..trials {
        let d = stream.draw().map_err(|e| Failure {
            suite: "census",
            detail: e.to_string(),
            counterexample: Box::new(Counterexample::Census(CensusJson::from(&Decomposition::empty(n)))),
        })?;
        if let Err(msg) = census_check(&d) {
            return Err(census_failure(d, msg, &census_check));
        }
    }
    Ok(Summary {
        n,
        seed,
        trials,
        coordinates_checked: trials,
        censuses_checked: trials,
    })
}

pub fn run(n: usize, seed: u64, trials: usize) -> Result<Summary, Failure> {
    run_with(n, seed, trials, check_coordinates, check_census)
}
