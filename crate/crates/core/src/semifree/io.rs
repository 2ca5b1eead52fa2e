//! Wide-sphere file format:
//!
//! ```json
//! {"even": {"v_dims": {"0": 1, "2": 1},
//!           "window": [0, 2],
//!           "filtration": {"0": [["1/1","0/1"],["0/1","1/1"]], "2": [["1/1","1/1"]]}},
//!  "odd": {...}}
//! ```
//!
//! `N̄_d` is everything below the window and zero above it. A degree omitted
//! inside the window takes the value of the nearest specified degree above
//! it, or zero when there is none.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use super::{Parity, ParityPart, WideSphere};
use crate::error::{Error, Result};
use crate::linalg::{fmt_q, parse_q, Q};

fn bad(why: impl Into<String>) -> Error {
    Error::InvalidWideSphere(why.into())
}

fn part_to_json(part: &ParityPart) -> Value {
    let v_dims: Map<String, Value> = part.v_dims().iter().map(|(d, m)| (d.to_string(), json!(m))).collect();
    let from = part.lo() - 2;
    let to = part.hi().max(from);
    let mut filtration = Map::new();
    let mut d = from;
    while d <= to {
        let rows: Vec<Vec<String>> = part.level(d).iter().map(|r| r.iter().map(fmt_q).collect()).collect();
        filtration.insert(d.to_string(), json!(rows));
        d += 2;
    }
    json!({ "v_dims": v_dims, "window": [from, to], "filtration": filtration })
}

fn parse_entry(v: &Value) -> Result<Q> {
    let parsed = match v {
        Value::String(s) => parse_q(s),
        Value::Number(n) => n.as_i64().map(|i| Q::from_integer(i.into())),
        _ => None,
    };
    parsed.ok_or_else(|| bad(format!("matrix entry {v} is not a rational")))
}

fn parse_degree(key: &str) -> Result<i64> {
    key.trim().parse().map_err(|_| bad(format!("degree key {key:?} is not an integer")))
}

fn part_from_json(parity: Parity, v: Option<&Value>) -> Result<ParityPart> {
    let name = parity.name();
    let Some(v) = v else { return Ok(ParityPart::zero(parity)) };
    let obj = v.as_object().ok_or_else(|| bad(format!("{name} part must be an object")))?;
    let mut v_dims = BTreeMap::new();
    if let Some(dims) = obj.get("v_dims") {
        let dims = dims.as_object().ok_or_else(|| bad("v_dims must be an object"))?;
        for (k, m) in dims {
            let m = m.as_u64().ok_or_else(|| bad(format!("dimension at {k} must be a non-negative integer")))?;
            v_dims.insert(parse_degree(k)?, m as usize);
        }
    }
    let n: usize = v_dims.values().sum();
    let (lo, hi) = match obj.get("window") {
        None if n == 0 => return ParityPart::new(parity, v_dims, parity.index(), vec![], true),
        None => return Err(bad(format!("{name} part needs a window"))),
        Some(w) => {
            let pair = w.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("window must be [lo, hi]"))?;
            let lo = pair[0].as_i64().ok_or_else(|| bad("window bounds must be integers"))?;
            let hi = pair[1].as_i64().ok_or_else(|| bad("window bounds must be integers"))?;
            (lo, hi)
        }
    };
    if Parity::of(lo) != parity || Parity::of(hi) != parity {
        return Err(bad(format!("{name} window [{lo}, {hi}] has the wrong parity")));
    }
    if hi < lo - 2 {
        return Err(bad(format!("{name} window [{lo}, {hi}] is reversed")));
    }
    let mut given: BTreeMap<i64, Vec<Vec<Q>>> = BTreeMap::new();
    if let Some(f) = obj.get("filtration") {
        let f = f.as_object().ok_or_else(|| bad("filtration must be an object"))?;
        for (k, rows) in f {
            let d = parse_degree(k)?;
            if d < lo || d > hi || Parity::of(d) != parity {
                return Err(bad(format!("{name} filtration degree {d} lies outside the window")));
            }
            let rows = rows.as_array().ok_or_else(|| bad(format!("filtration at {d} must be a list of rows")))?;
            let rows = rows
                .iter()
                .map(|r| {
                    r.as_array()
                        .ok_or_else(|| bad(format!("row at {d} must be a list")))?
                        .iter()
                        .map(parse_entry)
                        .collect::<Result<Vec<Q>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            given.insert(d, rows);
        }
    }
    let levels = (0..)
        .map(|i| lo + 2 * i)
        .take_while(|&d| d <= hi)
        .map(|d| given.range(d..).next().map(|(_, r)| r.clone()).unwrap_or_default())
        .collect();
    ParityPart::new(parity, v_dims, lo, levels, true)
}

impl WideSphere {
    pub fn to_json(&self) -> Value {
        json!({ "even": part_to_json(self.part(Parity::Even)), "odd": part_to_json(self.part(Parity::Odd)) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| bad("a wide sphere is an object with even and odd parts"))?;
        if let Some(k) = obj.keys().find(|k| *k != "even" && *k != "odd") {
            return Err(bad(format!("unexpected key {k:?}")));
        }
        let even = part_from_json(Parity::Even, obj.get("even"))?;
        let odd = part_from_json(Parity::Odd, obj.get("odd"))?;
        WideSphere::from_parts(even, odd)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&v)
    }
}
