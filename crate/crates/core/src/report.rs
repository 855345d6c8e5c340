//! Flat, serializable report rows.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest integer a JSON consumer using doubles represents exactly.
pub const MAX_SAFE_INTEGER: u64 = 1 << 53;

/// Exact non-negative integer: a JSON number up to 2^53, a decimal string above.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactInt(pub BigUint);

impl From<u64> for ExactInt {
    fn from(v: u64) -> Self {
        ExactInt(BigUint::from(v))
    }
}

impl From<BigUint> for ExactInt {
    fn from(v: BigUint) -> Self {
        ExactInt(v)
    }
}

impl fmt::Display for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(v) if v <= MAX_SAFE_INTEGER => s.serialize_u64(v),
            _ => s.serialize_str(&self.0.to_str_radix(10)),
        }
    }
}

struct ExactIntVisitor;

impl Visitor<'_> for ExactIntVisitor {
    type Value = ExactInt;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a non-negative integer or a decimal string")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExactInt, E> {
        Ok(ExactInt::from(v))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExactInt, E> {
        u64::try_from(v)
            .map(ExactInt::from)
            .map_err(|_| E::custom("negative count"))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<ExactInt, E> {
        BigUint::parse_bytes(v.as_bytes(), 10)
            .map(ExactInt)
            .ok_or_else(|| E::custom(format!("not a decimal integer: {v:?}")))
    }
}

impl<'de> Deserialize<'de> for ExactInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(ExactIntVisitor)
    }
}

/// One (q, n, b) result. Counts are `None` for skipped grid points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub q: u64,
    pub n: u64,
    pub b: u32,
    pub total: Option<ExactInt>,
    pub normal: Option<ExactInt>,
    pub depth_b: Option<ExactInt>,
    pub sociable: Option<ExactInt>,
    pub lonely: Option<ExactInt>,
    pub formula_name: String,
    pub formula_value: Option<ExactInt>,
    pub mismatch: bool,
}

impl ReportRecord {
    pub const CSV_HEADER: &'static str =
        "q,n,b,total,normal,depth_b,sociable,lonely,formula_name,formula_value,mismatch";

    /// Row for a grid point that was not evaluated.
    pub fn skipped(q: u64, n: u64, b: u32, reason: &str) -> Self {
        ReportRecord {
            q,
            n,
            b,
            total: None,
            normal: None,
            depth_b: None,
            sociable: None,
            lonely: None,
            formula_name: format!("skipped:{reason}"),
            formula_value: None,
            mismatch: false,
        }
    }

    pub fn is_skipped(&self) -> bool {
        self.formula_name.starts_with("skipped:")
    }
}
