//! JSON manifests describing a frame, its structure, and soliton candidates.
//!
//! All numbers are rational strings (`"-3/2"`); JSON numbers are rejected.
//! Frame indices are 1-based. `acm.phi[j]` lists the components of `φ(e_{j+1})`.
//!
//! ```json
//! {
//!   "dimension": 3,
//!   "brackets": [{"i": 1, "j": 3, "coeffs": ["-1", "0", "0"]}],
//!   "acm": {"xi": ["0", "0", "1"], "phi": [["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "0"]]},
//!   "solitons": [{"name": "trivial", "potential": ["0", "0", "0"], "lambda": "1"}]
//! }
//! ```

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::frame::{Bracket, Matrix3, VectorField};
use crate::scalar::{parse_rational, Rational};
use crate::tensor::DIM;

type Triple = [String; DIM];

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManifest {
    #[serde(default)]
    dimension: Option<u64>,
    brackets: Vec<RawBracket>,
    #[serde(default)]
    metric: Option<[Triple; DIM]>,
    acm: RawAcm,
    #[serde(default)]
    solitons: Vec<RawSoliton>,
    #[serde(default)]
    gradient_solitons: Vec<RawGradient>,
    #[serde(default)]
    collinear_checks: Vec<RawCollinear>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBracket {
    i: usize,
    j: usize,
    coeffs: Triple,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAcm {
    xi: Triple,
    phi: [Triple; DIM],
    #[serde(default)]
    eta: Option<Triple>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSoliton {
    name: String,
    potential: Triple,
    lambda: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGradient {
    name: String,
    potential_gradient: Triple,
    lambda: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCollinear {
    name: String,
    c: String,
    lambda: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcmSpec {
    pub xi: VectorField,
    pub phi_columns: [[Rational; DIM]; DIM],
    pub eta: Option<[Rational; DIM]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedSoliton {
    pub name: String,
    pub potential: VectorField,
    pub lambda: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollinearCheck {
    pub name: String,
    pub c: Rational,
    pub lambda: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Manifest {
    pub dimension: usize,
    pub brackets: Vec<Bracket>,
    pub metric: Option<Matrix3>,
    pub acm: AcmSpec,
    pub solitons: Vec<NamedSoliton>,
    pub gradient_solitons: Vec<NamedSoliton>,
    pub collinear_checks: Vec<CollinearCheck>,
}

fn triple(t: &Triple) -> Result<[Rational; DIM]> {
    let [a, b, c] = t;
    Ok([parse_rational(a)?, parse_rational(b)?, parse_rational(c)?])
}

fn matrix(m: &[Triple; DIM]) -> Result<Matrix3> {
    let [a, b, c] = m;
    Ok([triple(a)?, triple(b)?, triple(c)?])
}

pub fn parse_manifest(document: &str) -> Result<Manifest> {
    let raw: RawManifest = serde_json::from_str(document).map_err(|e| {
        if e.is_data() {
            Error::Schema(e.to_string())
        } else {
            Error::Parse { line: e.line(), column: e.column(), message: e.to_string() }
        }
    })?;
    let dimension = raw.dimension.unwrap_or(DIM as u64);
    if dimension != DIM as u64 {
        return Err(Error::Schema(format!("dimension must be 3, got {dimension}")));
    }
    let brackets = raw
        .brackets
        .iter()
        .map(|b| Ok(Bracket::new(b.i, b.j, triple(&b.coeffs)?)))
        .collect::<Result<Vec<_>>>()?;
    let metric = raw.metric.as_ref().map(matrix).transpose()?;
    let acm = AcmSpec {
        xi: VectorField(triple(&raw.acm.xi)?),
        phi_columns: matrix(&raw.acm.phi)?,
        eta: raw.acm.eta.as_ref().map(triple).transpose()?,
    };
    let solitons = raw
        .solitons
        .iter()
        .map(|s| {
            Ok(NamedSoliton {
                name: s.name.clone(),
                potential: VectorField(triple(&s.potential)?),
                lambda: parse_rational(&s.lambda)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let gradient_solitons = raw
        .gradient_solitons
        .iter()
        .map(|s| {
            Ok(NamedSoliton {
                name: s.name.clone(),
                potential: VectorField(triple(&s.potential_gradient)?),
                lambda: parse_rational(&s.lambda)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let collinear_checks = raw
        .collinear_checks
        .iter()
        .map(|c| Ok(CollinearCheck { name: c.name.clone(), c: parse_rational(&c.c)?, lambda: parse_rational(&c.lambda)? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(Manifest {
        dimension: DIM,
        brackets,
        metric,
        acm,
        solitons,
        gradient_solitons,
        collinear_checks,
    })
}
