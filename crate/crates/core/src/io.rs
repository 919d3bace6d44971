//! JSON and text input/output.
//!
//! Complexes are read as `{"m": <int>, "facets": [[<int>, ...], ...]}` with
//! 1-based vertices and written with faces in canonical order.

use serde::{Deserialize, Serialize};

use crate::bier::BierComplex;
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::subset::{VertexSet, MAX_GROUND};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexInput {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
}

/// Serialized form of a complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_m: Option<usize>,
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
    pub faces: Vec<Vec<usize>>,
}

impl ComplexOutput {
    pub fn of(k: &Complex) -> Self {
        ComplexOutput {
            base_m: None,
            m: k.ground_size(),
            facets: k.facets().into_iter().map(VertexSet::to_vec).collect(),
            faces: k.faces().iter().map(|f| f.to_vec()).collect(),
        }
    }

    pub fn of_bier(b: &BierComplex) -> Self {
        ComplexOutput {
            base_m: Some(b.base_m()),
            ..Self::of(b.complex())
        }
    }
}

/// Parses the JSON schema above. Base sizes are limited to what a Bier
/// sphere on 64 vertices allows.
pub fn parse_complex(text: &str) -> Result<Complex> {
    let input: ComplexInput = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    complex_from_input(&input)
}

pub fn complex_from_input(input: &ComplexInput) -> Result<Complex> {
    let m = input.m;
    if m == 0 {
        return Err(Error::Parse(
            "field `m`: ground size must be positive".into(),
        ));
    }
    if m > MAX_GROUND / 2 {
        return Err(Error::BaseTooLarge(m));
    }
    for (f, facet) in input.facets.iter().enumerate() {
        for (p, &v) in facet.iter().enumerate() {
            if v == 0 || v > m {
                return Err(Error::Parse(format!(
                    "field `facets[{f}][{p}]`: vertex {v} out of range 1..={m}"
                )));
            }
        }
    }
    Complex::from_facets(m, &input.facets)
}

pub fn to_json(k: &Complex) -> String {
    serde_json::to_string(&ComplexOutput::of(k)).expect("plain data serializes")
}

/// Parses a vertex subset written as `1,2`, `{1,2}`, `{}` or the empty
/// string.
pub fn parse_subset(text: &str) -> Result<VertexSet> {
    let inner = text.trim();
    let inner = inner
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .unwrap_or(inner)
        .trim();
    if inner.is_empty() {
        return Ok(VertexSet::EMPTY);
    }
    let mut s = VertexSet::EMPTY;
    for part in inner.split(',') {
        let part = part.trim();
        let v: usize = part
            .parse()
            .map_err(|_| Error::Parse(format!("subset `{text}`: `{part}` is not a vertex")))?;
        if v == 0 || v > MAX_GROUND {
            return Err(Error::Parse(format!(
                "subset `{text}`: vertex {v} out of range"
            )));
        }
        s = s.with(v);
    }
    Ok(s)
}

/// Renders a doubled-ground subset with barred vertices as `i'`.
pub fn barred_label(base_m: usize, s: VertexSet) -> String {
    let labels: Vec<String> = s
        .iter()
        .map(|v| {
            if v > base_m {
                format!("{}'", v - base_m)
            } else {
                v.to_string()
            }
        })
        .collect();
    format!("{{{}}}", labels.join(","))
}
