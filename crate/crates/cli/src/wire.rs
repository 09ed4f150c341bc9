//! Single-line JSON forms of the vectors and the census.
//!
//! Keys are fixed and unknown keys are rejected, so a value printed by one
//! subcommand can be fed verbatim to another.

use dynnikov::{Decomposition, DynnikovCoordinates, IntersectionVector, TwistSign, TwistSplit};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Largest magnitude accepted on input; keeps every intermediate sum in i64.
pub const MAX_MAGNITUDE: i64 = 1 << 40;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntersectionsJson {
    pub n: usize,
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    pub gamma: i64,
    pub c: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoordinatesJson {
    pub n: usize,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    #[serde(rename = "T")]
    pub twist: i64,
    pub c: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitJson {
    pub t: i64,
    pub m: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusJson {
    pub n: usize,
    pub above: Vec<i64>,
    pub below: Vec<i64>,
    pub loops: Vec<i64>,
    pub front_genus: i64,
    pub back_genus: i64,
    pub c_copies: i64,
    pub twisting_count: i64,
    pub twist_sign: i64,
    pub twist_split: SplitJson,
}

fn check_magnitudes<'a>(values: impl IntoIterator<Item = &'a i64>) -> Result<(), CliError> {
    match values.into_iter().find(|x| x.abs() > MAX_MAGNITUDE) {
        Some(x) => Err(CliError::Malformed(format!("value {x} exceeds the input bound 2^40"))),
        None => Ok(()),
    }
}

fn shape_error(e: dynnikov::Error) -> CliError {
    match e {
        dynnikov::Error::LengthMismatch { .. } => CliError::Malformed(e.to_string()),
        other => CliError::Invalid(other.to_string()),
    }
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text.trim()).map_err(|e| CliError::Malformed(format!("bad JSON: {e}")))
}

pub fn to_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

impl IntersectionsJson {
    pub fn into_vector(self) -> Result<IntersectionVector, CliError> {
        check_magnitudes(self.alpha.iter().chain(&self.beta).chain([&self.gamma, &self.c]))?;
        IntersectionVector::new(self.n, self.alpha, self.beta, self.gamma, self.c).map_err(shape_error)
    }
}

impl From<&IntersectionVector> for IntersectionsJson {
    fn from(v: &IntersectionVector) -> Self {
        Self {
            n: v.n(),
            alpha: v.alpha().to_vec(),
            beta: v.beta().to_vec(),
            gamma: *v.gamma(),
            c: *v.c(),
        }
    }
}

impl CoordinatesJson {
    pub fn into_coordinates(self) -> Result<DynnikovCoordinates, CliError> {
        check_magnitudes(self.a.iter().chain(&self.b).chain([&self.twist, &self.c]))?;
        DynnikovCoordinates::new(self.n, self.a, self.b, self.twist, self.c).map_err(shape_error)
    }
}

impl From<&DynnikovCoordinates> for CoordinatesJson {
    fn from(d: &DynnikovCoordinates) -> Self {
        Self {
            n: d.n(),
            a: d.a().to_vec(),
            b: d.b().to_vec(),
            twist: *d.twist(),
            c: *d.c(),
        }
    }
}

impl CensusJson {
    pub fn into_census(self) -> Result<Decomposition, CliError> {
        check_magnitudes(self.above.iter().chain(&self.below).chain(&self.loops).chain([
            &self.front_genus,
            &self.back_genus,
            &self.c_copies,
            &self.twisting_count,
            &self.twist_split.t,
            &self.twist_split.m,
        ]))?;
        let sign = TwistSign::from_i64(self.twist_sign).map_err(|e| CliError::Malformed(e.to_string()))?;
        let d = Decomposition {
            n: self.n,
            above: self.above,
            below: self.below,
            loops: self.loops,
            front_genus: self.front_genus,
            back_genus: self.back_genus,
            c_copies: self.c_copies,
            twisting_count: self.twisting_count,
            twist_sign: sign,
            twist_split: TwistSplit {
                t: self.twist_split.t,
                m: self.twist_split.m,
            },
        };
        d.check().map_err(shape_error)?;
        Ok(d)
    }
}

impl From<&Decomposition> for CensusJson {
    fn from(d: &Decomposition) -> Self {
        Self {
            n: d.n,
            above: d.above.clone(),
            below: d.below.clone(),
            loops: d.loops.clone(),
            front_genus: d.front_genus,
            back_genus: d.back_genus,
            c_copies: d.c_copies,
            twisting_count: d.twisting_count,
            twist_sign: d.twist_sign.as_i8() as i64,
            twist_split: SplitJson {
                t: d.twist_split.t,
                m: d.twist_split.m,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_use_capital_t() {
        let d = DynnikovCoordinates::from_i64(3, &[-2, -1, -2], &[-1, 0, 1], -1, 1).unwrap();
        assert_eq!(
            to_line(&CoordinatesJson::from(&d)),
            r#"{"n":3,"a":[-2,-1,-2],"b":[-1,0,1],"T":-1,"c":1}"#
        );
    }

    #[test]
    fn unknown_keys_rejected() {
        let r = parse::<IntersectionsJson>(r#"{"n":2,"alpha":[0,0,0,0],"beta":[0,0,0],"gamma":1,"c":-1,"x":0}"#);
        assert!(matches!(r, Err(CliError::Malformed(_))));
    }

    #[test]
    fn oversized_values_rejected() {
        let text = format!(r#"{{"n":2,"a":[{},0],"b":[0,0],"T":0,"c":1}}"#, MAX_MAGNITUDE + 1);
        let r = parse::<CoordinatesJson>(&text).unwrap().into_coordinates();
        assert!(matches!(r, Err(CliError::Malformed(_))));
    }

    #[test]
    fn length_mismatch_is_malformed() {
        let r = parse::<IntersectionsJson>(r#"{"n":2,"alpha":[0,0,0],"beta":[0,0,0],"gamma":1,"c":-1}"#)
            .unwrap()
            .into_vector();
        assert!(matches!(r, Err(CliError::Malformed(_))));
    }

    #[test]
    fn census_round_trips_through_json() {
        let text = r#"{"n":3,"above":[2,2,2],"below":[1,1,3],"loops":[0,-1,-1],"front_genus":2,"back_genus":0,"c_copies":0,"twisting_count":3,"twist_sign":-1,"twist_split":{"t":1,"m":2}}"#;
        let d = parse::<CensusJson>(text).unwrap().into_census().unwrap();
        assert_eq!(to_line(&CensusJson::from(&d)), text);
    }
}
