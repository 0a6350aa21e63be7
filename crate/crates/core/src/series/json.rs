use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::gauss::json_int;
use super::{DegreeBound, Exponents, GaussInt, Offsets, SeriesError, TruncatedSeries};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    #[serde(with = "json_int")]
    pub re: BigInt,
    #[serde(with = "json_int")]
    pub im: BigInt,
    pub a: u32,
    pub b: u32,
    pub x: u32,
    pub q: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OffsetsJson {
    pub a: i64,
    pub b: i64,
    pub x: i64,
}

/// Wire form of a series: header plus canonically sorted terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub q_floor: i64,
    pub q_cutoff: i64,
    pub var_cap: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<OffsetsJson>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub exact: bool,
    pub terms: Vec<TermJson>,
}

impl From<&TruncatedSeries> for SeriesJson {
    fn from(s: &TruncatedSeries) -> Self {
        let (terms, bound, exact) = s.raw_parts();
        let degree_bound = match bound {
            DegreeBound::Offsets(o) => Some(OffsetsJson { a: o.a, b: o.b, x: o.x }),
            _ => None,
        };
        SeriesJson {
            q_floor: s.q_floor(),
            q_cutoff: s.q_cutoff(),
            var_cap: s.var_cap(),
            degree_bound,
            exact,
            terms: terms
                .iter()
                .map(|(e, c)| TermJson { re: c.re.clone(), im: c.im.clone(), a: e.a, b: e.b, x: e.x, q: e.q })
                .collect(),
        }
    }
}

impl TryFrom<SeriesJson> for TruncatedSeries {
    type Error = SeriesError;

    fn try_from(j: SeriesJson) -> Result<Self, SeriesError> {
        let mut terms = BTreeMap::new();
        for t in j.terms {
            let e = Exponents::new(t.a, t.b, t.x, t.q);
            if e.q < j.q_floor || e.q >= j.q_cutoff || e.a.max(e.b).max(e.x) > j.var_cap {
                return Err(SeriesError::Json(format!("term {e} outside the stated window")));
            }
            let c = GaussInt { re: t.re, im: t.im };
            if c.is_zero() {
                return Err(SeriesError::Json(format!("zero coefficient stored at {e}")));
            }
            if terms.insert(e, c).is_some() {
                return Err(SeriesError::Json(format!("duplicate term {e}")));
            }
        }
        let bound = match j.degree_bound {
            Some(o) => DegreeBound::Offsets(Offsets { a: o.a, b: o.b, x: o.x }),
            None if terms.is_empty() && j.exact => DegreeBound::Vacuous,
            None => DegreeBound::Unknown,
        };
        Ok(TruncatedSeries::assemble(terms, j.q_floor, j.q_cutoff, j.var_cap, bound, j.exact))
    }
}

impl TruncatedSeries {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&SeriesJson::from(self)).expect("series json is always serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, SeriesError> {
        let j: SeriesJson = serde_json::from_str(text).map_err(|e| SeriesError::Json(e.to_string()))?;
        j.try_into()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Monomial, Truncation};
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let s = TruncatedSeries::polynomial(
            [
                Monomial::new(GaussInt::new(3, -2), 1, 0, 2, 3),
                Monomial::new(1, 0, 0, 0, 0),
                Monomial::new(GaussInt::from(BigInt::from(1u8) << 90), 0, 1, 0, 1),
            ],
            Truncation::new(6),
        );
        let text = s.to_json();
        let back = TruncatedSeries::from_json(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_json(), text);
        assert!(text.starts_with(r#"{"q_floor":0,"q_cutoff":6,"var_cap":6"#));
    }

    #[test]
    fn rejects_out_of_window_terms() {
        let text = r#"{"q_floor":0,"q_cutoff":2,"var_cap":2,"terms":[{"re":1,"im":0,"a":0,"b":0,"x":0,"q":5}]}"#;
        assert!(matches!(TruncatedSeries::from_json(text), Err(SeriesError::Json(_))));
    }
}
