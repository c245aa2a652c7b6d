//! Stable JSON shapes for decompositions and weight censuses.
//!
//! A Grassmannian decomposition serializes as
//!
//! ```json
//! { "d": 2, "e": 2, "shift": 0,
//!   "gw": [{ "shift": 0, "count": 2 }],
//!   "k": { "count": 2 },
//!   "provenance": [{ "kind": "self_dual", "partition": [2, 0] }, …] }
//! ```
//!
//! Counts are JSON numbers when they fit in a `u64` and decimal strings
//! otherwise.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::decomp::{Provenance, SpectrumDecomposition, Subject, Summand, Theory};
use crate::error::{Error, Result};
use crate::rootdata::{BoxCensus, WeightVector};
use crate::young::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Count(pub BigUint);

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(n) => s.serialize_u64(n),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Count {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => Ok(Count(BigUint::from(n))),
            Raw::Str(s) => s.parse().map(Count).map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GwEntry {
    pub shift: i64,
    pub count: Count,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KEntry {
    pub count: Count,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProvenanceJson {
    SelfDual { partition: Vec<u32> },
    DualPair { partition: Vec<u32>, dual: Vec<u32> },
    SelfDualWeight { weight: Vec<i64>, sign: String },
    WeightOrbit { weight: Vec<i64>, dual: Vec<i64> },
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<usize>,
    /// Degree of the middle block, present for middle-block decompositions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u32>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub transposed: bool,
    pub shift: i64,
    pub gw: Vec<GwEntry>,
    pub k: KEntry,
    pub provenance: Vec<ProvenanceJson>,
}

fn partition_json(p: &Partition) -> Vec<u32> {
    p.parts().to_vec()
}

fn partition_from_json(parts: Vec<u32>) -> Result<Partition> {
    Partition::new(parts)
}

impl From<&Provenance> for ProvenanceJson {
    fn from(p: &Provenance) -> Self {
        match p {
            Provenance::SelfDual(a) => ProvenanceJson::SelfDual {
                partition: partition_json(a),
            },
            Provenance::DualPair(a, b) => ProvenanceJson::DualPair {
                partition: partition_json(a),
                dual: partition_json(b),
            },
            Provenance::SelfDualWeight {
                weight,
                antisymmetric,
            } => ProvenanceJson::SelfDualWeight {
                weight: weight.0.clone(),
                sign: if *antisymmetric {
                    "antisymmetric"
                } else {
                    "symmetric"
                }
                .to_string(),
            },
            Provenance::WeightOrbit(a, b) => ProvenanceJson::WeightOrbit {
                weight: a.0.clone(),
                dual: b.0.clone(),
            },
        }
    }
}

impl TryFrom<ProvenanceJson> for Provenance {
    type Error = Error;

    fn try_from(p: ProvenanceJson) -> Result<Self> {
        Ok(match p {
            ProvenanceJson::SelfDual { partition } => {
                Provenance::SelfDual(partition_from_json(partition)?)
            }
            ProvenanceJson::DualPair { partition, dual } => {
                Provenance::DualPair(partition_from_json(partition)?, partition_from_json(dual)?)
            }
            ProvenanceJson::SelfDualWeight { weight, sign } => Provenance::SelfDualWeight {
                weight: WeightVector(weight),
                antisymmetric: match sign.as_str() {
                    "symmetric" => false,
                    "antisymmetric" => true,
                    other => {
                        return Err(Error::MalformedExpression(format!(
                            "unknown sign {other:?}"
                        )))
                    }
                },
            },
            ProvenanceJson::WeightOrbit { weight, dual } => {
                Provenance::WeightOrbit(WeightVector(weight), WeightVector(dual))
            }
        })
    }
}

impl From<&SpectrumDecomposition> for DecompositionJson {
    fn from(s: &SpectrumDecomposition) -> Self {
        let mut out = DecompositionJson {
            d: None,
            e: None,
            block: None,
            rank: None,
            bound: None,
            transposed: false,
            shift: s.shift,
            gw: s
                .gw_shifts()
                .into_iter()
                .map(|(shift, n)| GwEntry {
                    shift,
                    count: Count(n),
                })
                .collect(),
            k: KEntry {
                count: Count(s.k_count()),
            },
            provenance: s.provenance.iter().map(ProvenanceJson::from).collect(),
        };
        match s.subject {
            Subject::Grassmannian { d, e, transposed } => {
                out.d = Some(d);
                out.e = Some(e);
                out.transposed = transposed;
            }
            Subject::MiddleBlock { d, e } => {
                out.d = Some(d);
                out.e = Some(e);
                out.block = Some((d * e / 2) as u64);
            }
            Subject::EquivariantBox { rank, bound } => {
                out.rank = Some(rank);
                out.bound = Some(bound);
            }
        }
        out
    }
}

impl TryFrom<DecompositionJson> for SpectrumDecomposition {
    type Error = Error;

    fn try_from(j: DecompositionJson) -> Result<Self> {
        let malformed =
            || Error::MalformedExpression("decomposition is missing its subject".into());
        let subject = match (j.rank, j.bound, j.d, j.e, j.block) {
            (Some(rank), Some(bound), None, None, None) => Subject::EquivariantBox { rank, bound },
            (None, None, Some(d), Some(e), Some(_)) => Subject::MiddleBlock { d, e },
            (None, None, Some(d), Some(e), None) => Subject::Grassmannian {
                d,
                e,
                transposed: j.transposed,
            },
            _ => return Err(malformed()),
        };
        let mut summands: Vec<Summand> =
            j.gw.into_iter()
                .map(|g| Summand {
                    theory: Theory::Gw { shift: g.shift },
                    multiplicity: g.count.0,
                })
                .collect();
        if j.k.count.0 != BigUint::default() {
            summands.push(Summand {
                theory: Theory::K,
                multiplicity: j.k.count.0,
            });
        }
        let provenance = j
            .provenance
            .into_iter()
            .map(Provenance::try_from)
            .collect::<Result<_>>()?;
        Ok(SpectrumDecomposition {
            subject,
            shift: j.shift,
            summands,
            provenance,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusJson {
    pub rank: usize,
    pub bound: u32,
    pub symmetric: Vec<Vec<i64>>,
    pub antisymmetric: Vec<Vec<i64>>,
    pub dual_pairs: Vec<[Vec<i64>; 2]>,
    pub decomposition: DecompositionJson,
}

impl CensusJson {
    pub fn new(census: &BoxCensus, decomposition: &SpectrumDecomposition) -> Self {
        CensusJson {
            rank: census.rank,
            bound: census.bound,
            symmetric: census.symmetric.iter().map(|w| w.0.clone()).collect(),
            antisymmetric: census.antisymmetric.iter().map(|w| w.0.clone()).collect(),
            dual_pairs: census
                .dual_pairs
                .iter()
                .map(|(a, b)| [a.0.clone(), b.0.clone()])
                .collect(),
            decomposition: decomposition.into(),
        }
    }
}

/// Pretty-printed JSON with two-space indentation, except that arrays of
/// scalars (partitions, weights) stay on one line.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("wire types always serialize");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_array() && !i.is_object()),
        _ => false,
    }
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(_) if is_flat(v) => out.push_str(&v.to_string()),
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(item, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
