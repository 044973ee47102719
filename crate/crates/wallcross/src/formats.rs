//! On-disk input formats.
//!
//! Every file is a JSON document with exact numeric payloads: integers, or
//! rationals as two-element [numerator, denominator] arrays. Decimal
//! literals are rejected by construction since no field deserializes into
//! a float.

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{GaussRat, Rat};
use crate::classify::ExtendedQuiverSpec;
use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};
use crate::series::{CoeffTable, WallContribution, WallDatum, Weight};
use crate::stability::CentralCharge;

/// Exact rational on disk: [numerator, denominator].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatIo(pub i64, pub i64);

impl RatIo {
    pub fn to_rat(&self) -> Result<Rat> {
        if self.1 == 0 {
            return Err(Error::input("rational with zero denominator"));
        }
        Ok(Rat::new(BigInt::from(self.0), BigInt::from(self.1)))
    }
}

/// Quiver record: vertex ids plus (source, target) edge pairs with
/// multiplicity. Unknown vertices are rejected; multiplicity is preserved.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverFile {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
}

impl QuiverFile {
    pub fn to_quiver(&self) -> Result<Quiver> {
        Quiver::new(&self.vertices, &self.edges)
    }
}

/// Charge record: rows of (vertex id, re as [num, den], im as [num, den]).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChargeFile(pub Vec<(String, RatIo, RatIo)>);

impl ChargeFile {
    /// Aligns the rows with the quiver's canonical vertex order.
    pub fn to_charge(&self, quiver: &Quiver) -> Result<CentralCharge> {
        if self.0.len() != quiver.vertex_count() {
            return Err(Error::input(format!(
                "charge file has {} rows but the quiver has {} vertices",
                self.0.len(),
                quiver.vertex_count()
            )));
        }
        let mut values = vec![None; quiver.vertex_count()];
        for (id, re, im) in &self.0 {
            let idx = quiver
                .vertex_index(id)
                .ok_or_else(|| Error::input(format!("charge row for unknown vertex `{id}`")))?;
            if values[idx].is_some() {
                return Err(Error::input(format!("duplicate charge row for vertex `{id}`")));
            }
            values[idx] = Some(GaussRat::new(re.to_rat()?, im.to_rat()?));
        }
        CentralCharge::new(values.into_iter().map(|v| v.expect("all rows placed")).collect())
    }
}

/// Extended-quiver record: symmetric base plus framing maps keyed by base
/// vertex id, and the loop count at the framing vertex.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExtendedSpecFile {
    pub base: QuiverFile,
    pub a: std::collections::BTreeMap<String, u32>,
    pub b: std::collections::BTreeMap<String, u32>,
    #[serde(default)]
    pub c: u32,
}

impl ExtendedSpecFile {
    pub fn to_spec(&self) -> Result<ExtendedQuiverSpec> {
        let base = self.base.to_quiver()?;
        let lookup = |map: &std::collections::BTreeMap<String, u32>, name: &str| -> Result<Vec<u32>> {
            for id in map.keys() {
                if base.vertex_index(id).is_none() {
                    return Err(Error::input(format!(
                        "{name} entry for unknown base vertex `{id}`"
                    )));
                }
            }
            Ok(base
                .vertices()
                .iter()
                .map(|id| map.get(id).copied().unwrap_or(0))
                .collect())
        };
        let a = lookup(&self.a, "a")?;
        let b = lookup(&self.b, "b")?;
        ExtendedQuiverSpec::new(base, a, b, self.c)
    }
}

/// Coefficient table: declared classes with exact degrees, plus rows of
/// (class weight vector, q-power, value).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableFile {
    pub classes: Vec<ClassDecl>,
    #[serde(default)]
    pub entries: Vec<TableRow>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassDecl {
    pub id: String,
    pub degree: RatIo,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableRow {
    pub weight: Weight,
    pub n: i64,
    pub value: RatIo,
}

impl TableFile {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn to_table(&self) -> Result<CoeffTable> {
        let mut table = CoeffTable::new();
        for row in &self.entries {
            if row.weight.len() != self.classes.len() {
                return Err(Error::input(format!(
                    "table row weight has {} components but {} classes are declared",
                    row.weight.len(),
                    self.classes.len()
                )));
            }
            table.set(row.weight.clone(), row.n, row.value.to_rat()?);
        }
        Ok(table)
    }

    /// Degree of a weight vector against the declared classes.
    pub fn weight_degree(&self, weight: &Weight) -> Result<Rat> {
        let mut acc = Rat::new(BigInt::from(0), BigInt::from(1));
        for (w, decl) in weight.iter().zip(&self.classes) {
            acc += decl.degree.to_rat()? * Rat::from_integer(BigInt::from(*w));
        }
        Ok(acc)
    }
}

/// Wall data: descending walls, each with its exact parameter and the
/// contributions sitting on it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WallsFile {
    pub walls: Vec<WallFileEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WallFileEntry {
    pub t: RatIo,
    pub contributions: Vec<WallRow>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WallRow {
    pub weight: Weight,
    pub omega_beta: RatIo,
    pub n: i64,
    pub value: RatIo,
}

impl WallsFile {
    pub fn to_walls(&self) -> Result<Vec<WallDatum>> {
        self.walls
            .iter()
            .map(|w| {
                let contributions = w
                    .contributions
                    .iter()
                    .map(|c| {
                        Ok(WallContribution {
                            weight: c.weight.clone(),
                            omega_beta: c.omega_beta.to_rat()?,
                            n: c.n,
                            value: c.value.to_rat()?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                WallDatum::new(w.t.to_rat()?, contributions)
            })
            .collect()
    }
}

/// Parses `2,1` or `1,0,3` into a dimension vector aligned with the
/// quiver's canonical (sorted) vertex order.
pub fn parse_dim_vector(text: &str, quiver: &Quiver) -> Result<DimVector> {
    let entries: Vec<u32> = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| Error::input(format!("invalid dimension entry `{part}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    let m = DimVector::new(entries);
    quiver.check_dim(&m)?;
    Ok(m)
}

/// Parses an exact rational: `3`, `-2/5`.
pub fn parse_rational(text: &str) -> Result<Rat> {
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let n: i64 = n
        .trim()
        .parse()
        .map_err(|_| Error::input(format!("invalid rational `{text}`")))?;
    let d: i64 = d
        .trim()
        .parse()
        .map_err(|_| Error::input(format!("invalid rational `{text}`")))?;
    if d == 0 {
        return Err(Error::input("rational with zero denominator"));
    }
    Ok(Rat::new(BigInt::from(n), BigInt::from(d)))
}
