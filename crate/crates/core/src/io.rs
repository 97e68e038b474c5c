//! JSON and CSV forms of vectors and tables.

use serde::{Deserialize, Serialize};

use crate::canonical::{BasisKind, BklTable};
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::laurent::LaurentPoly;
use crate::order::{WeightFunction, ZeroOneSequence};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub f: Vec<i32>,
    pub c: LaurentPoly,
}

/// A [`FockVector`] with its terms in lexicographic order of `f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorRecord {
    pub b: String,
    pub k: i32,
    pub terms: Vec<TermRecord>,
}

impl From<&FockVector> for VectorRecord {
    fn from(v: &FockVector) -> Self {
        Self {
            b: v.seq().to_string(),
            k: v.level(),
            terms: v
                .iter()
                .map(|(f, c)| TermRecord {
                    f: f.values().to_vec(),
                    c: c.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&VectorRecord> for FockVector {
    type Error = Error;

    fn try_from(r: &VectorRecord) -> Result<Self> {
        let seq: ZeroOneSequence = r.b.parse()?;
        let mut v = FockVector::zero(seq.clone(), r.k);
        for t in &r.terms {
            if t.f.len() != seq.len() {
                return Err(Error::LengthMismatch(format!("{:?} for {seq:?}", t.f)));
            }
            v.add_term(WeightFunction(t.f.clone()), &t.c)?;
        }
        Ok(v)
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    }
}

pub fn vector_to_json(v: &FockVector) -> String {
    serde_json::to_string(&VectorRecord::from(v)).expect("plain data serializes")
}

pub fn vector_from_json(s: &str) -> Result<FockVector> {
    let r: VectorRecord = serde_json::from_str(s).map_err(json_err)?;
    FockVector::try_from(&r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub g: String,
    pub f: String,
    pub polynomial: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub b: String,
    pub k: i32,
    pub kind: String,
    pub rows: Vec<TableRow>,
}

fn table_rows(t: &BklTable) -> Vec<TableRow> {
    t.entries
        .iter()
        .map(|((g, f), c)| TableRow {
            g: g.to_string(),
            f: f.to_string(),
            polynomial: c.clone(),
        })
        .collect()
}

/// CSV with columns `g,f,polynomial`, one row per nonzero entry.
pub fn table_to_csv(t: &BklTable) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in table_rows(t) {
        w.serialize(row)
            .map_err(|e| Error::Invariant(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Invariant(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn table_from_csv(seq: &ZeroOneSequence, k: i32, kind: BasisKind, s: &str) -> Result<BklTable> {
    let mut rd = csv::Reader::from_reader(s.as_bytes());
    let mut entries = std::collections::BTreeMap::new();
    for (i, row) in rd.deserialize::<TableRow>().enumerate() {
        let row = row.map_err(|e| Error::Parse {
            pos: i + 1,
            msg: e.to_string(),
        })?;
        entries.insert((row.g.parse()?, row.f.parse()?), row.polynomial);
    }
    Ok(BklTable {
        seq: seq.clone(),
        level: k,
        kind,
        entries,
    })
}

pub fn table_to_json(t: &BklTable) -> String {
    let r = TableRecord {
        b: t.seq.to_string(),
        k: t.level,
        kind: t.kind.to_string(),
        rows: table_rows(t),
    };
    serde_json::to_string_pretty(&r).expect("plain data serializes")
}
