//! Ring (de)serialisation and the built-in catalog of test rings.
//!
//! File format: UTF-8 JSON with explicit full tables, no compression and no
//! generator shorthand, so documents are bit-exact and diff-friendly:
//!
//! ```json
//! {"name": str, "order": int, "add": [[int]], "mul": [[int]], "labels": [str]?}
//! ```
//!
//! The catalog deliberately mixes unital and non-unital, nilpotent and
//! semisimple, and product rings so that every radical branch
//! (`J = R`, `J = 0`, `J` proper nonzero) is exercised.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::{FiniteRing, RingError};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// The on-disk shape of a ring.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingDocument {
    pub name: String,
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl RingDocument {
    pub fn from_ring(ring: &FiniteRing) -> Self {
        let (add, mul) = ring.tables();
        RingDocument {
            name: ring.name().to_string(),
            order: ring.order(),
            add,
            mul,
            labels: ring.labels().map(<[String]>::to_vec),
        }
    }

    /// Schema-level checks (dimensions, index ranges, label count) happen
    /// here and report as parse errors; the ring laws are then validated by
    /// the ring constructor and report with the violating triple.
    pub fn into_ring(self) -> Result<FiniteRing, CatalogError> {
        if self.order == 0 {
            return Err(CatalogError::Parse("order must be at least 1".into()));
        }
        for (label, table) in [("add", &self.add), ("mul", &self.mul)] {
            if table.len() != self.order {
                return Err(CatalogError::Parse(format!(
                    "{label} table has {} rows, expected {}",
                    table.len(),
                    self.order
                )));
            }
            for (r, row) in table.iter().enumerate() {
                if row.len() != self.order {
                    return Err(CatalogError::Parse(format!(
                        "{label} row {r} has {} entries, expected {}",
                        row.len(),
                        self.order
                    )));
                }
                for (c, &entry) in row.iter().enumerate() {
                    if entry >= self.order {
                        return Err(CatalogError::Parse(format!(
                            "{label}[{r}][{c}] = {entry} is out of range for order {}",
                            self.order
                        )));
                    }
                }
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.order {
                return Err(CatalogError::Parse(format!(
                    "{} labels for order {}",
                    labels.len(),
                    self.order
                )));
            }
        }
        let doc = self.reindexed_to_zero();
        let ring = FiniteRing::new(doc.name, &doc.add, &doc.mul)?;
        Ok(match doc.labels {
            Some(labels) => ring.with_labels(labels),
            None => ring,
        })
    }

    // The ring type requires the additive identity at element 0. Documents
    // may place it anywhere; swap it into position before validation.
    fn reindexed_to_zero(self) -> Self {
        let identity = (0..self.order)
            .find(|&z| (0..self.order).all(|i| self.add[z][i] == i && self.add[i][z] == i));
        let Some(z) = identity else { return self };
        if z == 0 {
            return self;
        }
        let swap = |i: usize| match i {
            0 => z,
            i if i == z => 0,
            i => i,
        };
        let permute = |table: &[Vec<usize>]| -> Vec<Vec<usize>> {
            (0..self.order)
                .map(|a| {
                    (0..self.order)
                        .map(|b| swap(table[swap(a)][swap(b)]))
                        .collect()
                })
                .collect()
        };
        RingDocument {
            name: self.name.clone(),
            order: self.order,
            add: permute(&self.add),
            mul: permute(&self.mul),
            labels: self
                .labels
                .as_ref()
                .map(|labels| (0..self.order).map(|i| labels[swap(i)].clone()).collect()),
        }
    }
}

/// Parses and validates a ring from JSON text.
pub fn load_ring_str(text: &str) -> Result<FiniteRing, CatalogError> {
    let doc: RingDocument =
        serde_json::from_str(text).map_err(|e| CatalogError::Parse(e.to_string()))?;
    doc.into_ring()
}

/// Reads, parses and validates a ring file.
pub fn load_ring_path(path: &Path) -> Result<FiniteRing, CatalogError> {
    let text = std::fs::read_to_string(path)?;
    load_ring_str(&text)
}

/// Serialises a ring to the document format; `load_ring_str` restores
/// identical tables, name, and labels.
pub fn save_ring(ring: &FiniteRing) -> String {
    let mut text = serde_json::to_string_pretty(&RingDocument::from_ring(ring))
        .expect("ring documents always serialise");
    text.push('\n');
    text
}

/// Upper triangular 2x2 matrices over Z_2: order 8 and unital, with a
/// noncommutative multiplication. Element index is `4a + 2b + c` for the
/// matrix with diagonal `(a, c)` and corner `b`.
pub fn upper_triangular_z2() -> FiniteRing {
    let unpack = |i: usize| (i >> 2 & 1, i >> 1 & 1, i & 1);
    let pack = |a: usize, b: usize, c: usize| (a << 2) | (b << 1) | c;
    let n = 8;
    let mut add = vec![vec![0usize; n]; n];
    let mut mul = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            let (a, b, c) = unpack(i);
            let (x, y, z) = unpack(j);
            add[i][j] = pack(a ^ x, b ^ y, c ^ z);
            mul[i][j] = pack(a & x, (a & y) ^ (b & z), c & z);
        }
    }
    let labels = (0..n)
        .map(|i| {
            let (a, b, c) = unpack(i);
            format!("[{a} {b}; 0 {c}]")
        })
        .collect();
    FiniteRing::new("T2(Z2)", &add, &mul)
        .expect("triangular matrix tables satisfy the ring laws")
        .with_labels(labels)
}

/// The built-in test catalog: at least 16 rings of order at most 32,
/// mixing unital, non-unital, nilpotent, semisimple and product rings.
/// Construction is deterministic and order-stable.
pub fn catalog() -> Vec<Arc<FiniteRing>> {
    let z2 = FiniteRing::cyclic(2);
    let z3 = FiniteRing::cyclic(3);
    let z4 = FiniteRing::cyclic(4);
    let null2 = FiniteRing::null(2);
    let rings = vec![
        FiniteRing::cyclic(1).renamed("zero"),
        z2.clone(),
        z3.clone(),
        z4.clone(),
        FiniteRing::cyclic(6),
        FiniteRing::cyclic(8),
        FiniteRing::cyclic(9),
        FiniteRing::cyclic(12),
        null2.clone(),
        FiniteRing::null(3),
        FiniteRing::null(4),
        FiniteRing::nonunital_ideal(2, 2),
        FiniteRing::nonunital_ideal(2, 4),
        FiniteRing::nonunital_ideal(3, 3),
        FiniteRing::nonunital_ideal(2, 8),
        upper_triangular_z2(),
        z2.direct_product(&null2).expect("order 4"),
        z4.direct_product(&z3).expect("order 12"),
    ];
    rings.into_iter().map(Arc::new).collect()
}
