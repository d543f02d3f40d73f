//! The relation database: per-weight reduced bases of `Z_l^d`, `P_l`,
//! `R_l` and its duality part, stored as a versioned JSON document.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::thread;

use mzv_core::coeff::{format_rational, parse_rational};
use mzv_core::symbols::{basis_order, SubspaceBasis, SubspaceLabel};
use mzv_core::{Q, Spaces};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT: &str = "mzvrel/1";

#[derive(Debug, Error)]
pub enum DbError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format {found:?}, expected {FORMAT:?}")]
    Version { found: String },
    #[error("weight {weight}: {reason}")]
    Invalid { weight: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub format: String,
    #[serde(rename = "maxWeight")]
    pub max_weight: usize,
    pub weights: Vec<WeightRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRecord {
    pub weight: usize,
    #[serde(rename = "basisOrder")]
    pub basis_order: Vec<String>,
    pub subspaces: Vec<SubspaceRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceRecord {
    pub label: String,
    pub rows: Vec<Vec<String>>,
}

/// File label of a stored subspace (`Zd:3`, `P`, `R`, `Rdual`).
pub fn label_name(label: &SubspaceLabel) -> String {
    match label {
        SubspaceLabel::Depth(d) => format!("Zd:{d}"),
        other => other.to_string(),
    }
}

fn stored_labels(l: usize) -> Vec<SubspaceLabel> {
    let mut labels: Vec<SubspaceLabel> = (1..l).map(SubspaceLabel::Depth).collect();
    labels.extend([SubspaceLabel::Product, SubspaceLabel::Relation, SubspaceLabel::RelationDual]);
    labels
}

/// Bases for weights `2..=max_weight`.
#[derive(Debug, Clone)]
pub struct RelationDb {
    max_weight: usize,
    bases: BTreeMap<usize, Vec<SubspaceBasis>>,
}

fn build_weight(l: usize) -> Vec<SubspaceBasis> {
    let mut spaces = Spaces::new();
    stored_labels(l)
        .iter()
        .map(|lab| spaces.basis(l, lab).expect("weight >= 2").clone())
        .collect()
}

impl RelationDb {
    /// Builds every weight on its own thread.
    pub fn build(max_weight: usize) -> Self {
        let weights: Vec<usize> = (2..=max_weight).collect();
        let built: Vec<(usize, Vec<SubspaceBasis>)> = thread::scope(|s| {
            let handles: Vec<_> =
                weights.iter().map(|&l| (l, s.spawn(move || build_weight(l)))).collect();
            handles.into_iter().map(|(l, h)| (l, h.join().expect("builder thread"))).collect()
        });
        RelationDb { max_weight, bases: built.into_iter().collect() }
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn bases(&self, l: usize) -> &[SubspaceBasis] {
        self.bases.get(&l).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn basis(&self, l: usize, label: &SubspaceLabel) -> Option<&SubspaceBasis> {
        self.bases(l).iter().find(|b| b.label() == label)
    }

    /// Makes the stored bases available to `spaces` so they are not rebuilt.
    pub fn install(&self, spaces: &mut Spaces) {
        for bs in self.bases.values() {
            for b in bs {
                spaces.insert_basis(b.clone());
            }
        }
    }

    pub fn to_document(&self) -> Document {
        let weights = self
            .bases
            .iter()
            .map(|(&l, bs)| WeightRecord {
                weight: l,
                basis_order: basis_order(l).iter().map(ToString::to_string).collect(),
                subspaces: bs
                    .iter()
                    .map(|b| SubspaceRecord {
                        label: label_name(b.label()),
                        rows: b
                            .rows()
                            .iter()
                            .map(|r| r.iter().map(format_rational).collect())
                            .collect(),
                    })
                    .collect(),
            })
            .collect();
        Document { format: FORMAT.to_string(), max_weight: self.max_weight, weights }
    }

    /// Validates the header, the coordinate order and every echelon basis.
    pub fn from_document(doc: &Document) -> Result<Self, DbError> {
        if doc.format != FORMAT {
            return Err(DbError::Version { found: doc.format.clone() });
        }
        let mut bases = BTreeMap::new();
        for rec in &doc.weights {
            let l = rec.weight;
            let invalid = |reason: String| DbError::Invalid { weight: l, reason };
            if l < 2 || l > doc.max_weight {
                return Err(invalid(format!("weight outside 2..={}", doc.max_weight)));
            }
            let expected: Vec<String> = basis_order(l).iter().map(ToString::to_string).collect();
            if rec.basis_order != expected {
                return Err(invalid("basisOrder differs from the canonical coordinate order".into()));
            }
            let mut bs = Vec::new();
            for sub in &rec.subspaces {
                let label: SubspaceLabel =
                    sub.label.parse().map_err(|e| invalid(format!("label {:?}: {e}", sub.label)))?;
                let rows = sub
                    .rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|x| parse_rational(x).ok_or_else(|| invalid(format!("bad rational {x:?}"))))
                            .collect::<Result<Vec<Q>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let b = SubspaceBasis::from_rows(l, label, &rows).map_err(|e| invalid(e.to_string()))?;
                bs.push(b);
            }
            if bases.insert(l, bs).is_some() {
                return Err(invalid("duplicate weight record".into()));
            }
        }
        Ok(RelationDb { max_weight: doc.max_weight, bases })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("serializable") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, DbError> {
        let doc: Document = serde_json::from_str(text)?;
        Self::from_document(&doc)
    }

    pub fn save(&self, path: &Path) -> Result<(), DbError> {
        fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, DbError> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    /// `(weight, label, dimension)` for every stored subspace.
    pub fn summary(&self) -> Vec<(usize, String, usize)> {
        self.bases
            .iter()
            .flat_map(|(&l, bs)| bs.iter().map(move |b| (l, label_name(b.label()), b.dim())))
            .collect()
    }
}
