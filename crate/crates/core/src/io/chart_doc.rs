//! JSON documents for charts, with every real encoded as a decimal string.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{dec, parse_dec};
use crate::arc::Frame;
use crate::engine::{Chart, RadiusEstimate};
use crate::error::{Error, Result};
use crate::series::{SigmaExpansion, TaylorPoly};

pub const CHART_SCHEMA: &str = "slag-chart";
pub const CHART_VERSION: u64 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FrameDoc {
    a_re: String,
    a_im: String,
    theta: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RadiusDoc {
    #[serde(rename = "C")]
    c: String,
    #[serde(rename = "M")]
    m: String,
    rho: String,
    fit: String,
    rho_t: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChartDoc {
    schema: String,
    version: u64,
    n: usize,
    branch: usize,
    center: String,
    frame: FrameDoc,
    #[serde(rename = "K")]
    k: usize,
    #[serde(rename = "D")]
    d: usize,
    terms: Vec<Vec<String>>,
    radius: RadiusDoc,
}

fn to_doc(c: &Chart) -> ChartDoc {
    ChartDoc {
        schema: CHART_SCHEMA.into(),
        version: CHART_VERSION,
        n: c.n,
        branch: c.branch,
        center: dec(c.center),
        frame: FrameDoc { a_re: dec(c.frame.a.re), a_im: dec(c.frame.a.im), theta: dec(c.frame.theta) },
        k: c.order(),
        d: c.degree_cap(),
        terms: c.phi.terms().iter().map(|p| p.coeffs().iter().map(|&x| dec(x)).collect()).collect(),
        radius: RadiusDoc {
            c: dec(c.radius.c),
            m: dec(c.radius.m),
            rho: dec(c.radius.rho_sigma),
            fit: dec(c.radius.fit_quality),
            rho_t: dec(c.radius.rho_t),
        },
    }
}

fn from_value(v: Value) -> Result<Chart> {
    let schema = v.get("schema").and_then(Value::as_str);
    if schema != Some(CHART_SCHEMA) {
        return Err(Error::Schema(format!("expected schema {CHART_SCHEMA:?}, found {schema:?}")));
    }
    match v.get("version").and_then(Value::as_u64) {
        Some(CHART_VERSION) => {}
        Some(found) => return Err(Error::Version { found, expected: CHART_VERSION }),
        None => return Err(Error::Schema("missing version".into())),
    }
    let doc: ChartDoc = serde_json::from_value(v).map_err(|e| Error::Schema(e.to_string()))?;
    if doc.terms.len() != doc.k + 1 {
        return Err(Error::Schema(format!("K = {} but {} terms", doc.k, doc.terms.len())));
    }
    let terms = doc
        .terms
        .iter()
        .map(|row| {
            if row.len() != doc.d + 1 {
                return Err(Error::Schema(format!("D = {} but a term has {} coefficients", doc.d, row.len())));
            }
            let c = row.iter().map(|s| parse_dec(s)).collect::<Result<Vec<f64>>>()?;
            Ok(TaylorPoly::from_coeffs(c, doc.d))
        })
        .collect::<Result<Vec<_>>>()?;
    let phi = SigmaExpansion::new(doc.n, terms)?;
    let frame = Frame {
        a: Complex64::new(parse_dec(&doc.frame.a_re)?, parse_dec(&doc.frame.a_im)?),
        theta: parse_dec(&doc.frame.theta)?,
    };
    let radius = RadiusEstimate {
        c: parse_dec(&doc.radius.c)?,
        m: parse_dec(&doc.radius.m)?,
        rho_sigma: parse_dec(&doc.radius.rho)?,
        fit_quality: parse_dec(&doc.radius.fit)?,
        rho_t: parse_dec(&doc.radius.rho_t)?,
    };
    if doc.n < 2 {
        return Err(Error::Schema(format!("n = {} is below 2", doc.n)));
    }
    Chart::new(doc.branch, frame, phi, radius, parse_dec(&doc.center)?).map_err(|e| Error::Schema(e.to_string()))
}

/// Chart as a JSON value.
pub fn serialize_chart(c: &Chart) -> Value {
    serde_json::to_value(to_doc(c)).expect("chart document is plain data")
}

/// Inverse of [`serialize_chart`]; rejects other schemas and versions.
pub fn deserialize_chart(json: &str) -> Result<Chart> {
    let v: Value = serde_json::from_str(json).map_err(|e| Error::Schema(e.to_string()))?;
    from_value(v)
}

/// A JSON array of chart documents.
pub fn serialize_charts(charts: &[Chart]) -> String {
    let v = Value::Array(charts.iter().map(serialize_chart).collect());
    serde_json::to_string_pretty(&v).expect("chart documents are plain data")
}

/// Accepts a single chart document or an array of them.
pub fn deserialize_charts(json: &str) -> Result<Vec<Chart>> {
    let v: Value = serde_json::from_str(json).map_err(|e| Error::Schema(e.to_string()))?;
    match v {
        Value::Array(items) => items.into_iter().map(from_value).collect(),
        other => Ok(vec![from_value(other)?]),
    }
}
