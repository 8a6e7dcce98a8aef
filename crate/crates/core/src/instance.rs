//! Versioned JSON instance files.
//!
//! ```json
//! { "version": 1, "kind": "linear", "unknowns": 3,
//!   "equations": [ { "coeffs": [[1,1],[0,1],[0,1]], "rhs": [0,1] } ] }
//! { "version": 1, "kind": "disks",
//!   "disks": [ { "center": [[0,1],[0,1]], "radius": [1,1] } ] }
//! ```
//!
//! Every rational is a `[numerator, denominator]` pair of JSON integers of
//! any size. Output is always in lowest terms with a positive denominator.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

use crate::disks::{Disk, Point};
use crate::error::{Error, Result};
use crate::exactq::Rat;
use crate::linear::{Equation, LinearSystem};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Linear(LinearSystem),
    Disks(Vec<Disk>),
}

type RatPair = (Number, Number);

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    version: u32,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unknowns: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    equations: Option<Vec<RawEquation>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    disks: Option<Vec<RawDisk>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEquation {
    coeffs: Vec<RatPair>,
    rhs: RatPair,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDisk {
    center: (RatPair, RatPair),
    radius: RatPair,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Instance(msg.into())
}

fn big(n: &Number) -> Result<BigInt> {
    BigInt::from_str(&n.to_string()).map_err(|_| bad(format!("expected an integer, got {n}")))
}

fn number(i: &BigInt) -> Number {
    Number::from_str(&i.to_string()).expect("integer literal")
}

fn parse_rat((n, d): &RatPair) -> Result<Rat> {
    let d = big(d)?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rat::new(big(n)?, d))
}

pub fn rat_pair(q: &Rat) -> RatPair {
    (number(q.numer()), number(q.denom()))
}

/// `[num, den]` as a JSON value.
pub fn rat_json(q: &Rat) -> Value {
    serde_json::to_value(rat_pair(q)).expect("numbers serialize")
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Linear(_) => "linear",
            Self::Disks(_) => "disks",
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawInstance = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        if raw.version != FORMAT_VERSION {
            return Err(bad(format!("unsupported version {}", raw.version)));
        }
        match raw.kind.as_str() {
            "linear" => {
                if raw.disks.is_some() {
                    return Err(bad("linear instance with a `disks` field"));
                }
                let k = raw.unknowns.ok_or_else(|| bad("missing `unknowns`"))?;
                let eqs = raw
                    .equations
                    .ok_or_else(|| bad("missing `equations`"))?
                    .iter()
                    .map(|e| {
                        Ok(Equation::new(
                            e.coeffs.iter().map(parse_rat).collect::<Result<_>>()?,
                            parse_rat(&e.rhs)?,
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Self::Linear(LinearSystem::new(k, eqs)?))
            }
            "disks" => {
                if raw.equations.is_some() || raw.unknowns.is_some() {
                    return Err(bad("disks instance with linear fields"));
                }
                let disks = raw
                    .disks
                    .ok_or_else(|| bad("missing `disks`"))?
                    .iter()
                    .map(|d| {
                        let c = Point::new(parse_rat(&d.center.0)?, parse_rat(&d.center.1)?);
                        Disk::new(c, parse_rat(&d.radius)?)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Self::Disks(disks))
            }
            other => Err(bad(format!("unknown kind `{other}`"))),
        }
    }

    pub fn to_json(&self) -> String {
        let raw = match self {
            Self::Linear(s) => RawInstance {
                version: FORMAT_VERSION,
                kind: "linear".into(),
                unknowns: Some(s.unknowns()),
                equations: Some(
                    s.equations()
                        .iter()
                        .map(|e| RawEquation {
                            coeffs: e.coeffs.iter().map(rat_pair).collect(),
                            rhs: rat_pair(&e.rhs),
                        })
                        .collect(),
                ),
                disks: None,
            },
            Self::Disks(ds) => RawInstance {
                version: FORMAT_VERSION,
                kind: "disks".into(),
                unknowns: None,
                equations: None,
                disks: Some(
                    ds.iter()
                        .map(|d| RawDisk {
                            center: (rat_pair(&d.center().x), rat_pair(&d.center().y)),
                            radius: rat_pair(d.radius()),
                        })
                        .collect(),
                ),
            },
        };
        let value = serde_json::to_value(&raw).expect("instance serializes");
        let mut out = crate::report::pretty(&value);
        out.push('\n');
        out
    }
}
