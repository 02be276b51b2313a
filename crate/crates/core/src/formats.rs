//! On-disk document formats: UTF-8 JSON with field elements as integers in
//! `0..p-1`, matrices as row-major nested arrays with explicit `rows` and
//! `cols`, and a manifest tying an instance together. Emitted JSON
//! re-parses to structurally equal values.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{Algebra, Arrow, Quiver};
use crate::linalg::{FieldSpec, Mat};
use crate::module::{Bimodule, FdModule};
use crate::tensor_ring::{PairModule, TensorPowers};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldDoc {
    pub p: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MatDoc {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u64>>,
}

impl MatDoc {
    pub fn from_mat(m: &Mat) -> MatDoc {
        let entries = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
        MatDoc {
            rows: m.rows(),
            cols: m.cols(),
            entries,
        }
    }

    pub fn to_mat(&self, field: FieldSpec) -> Result<Mat> {
        if self.entries.len() != self.rows {
            return Err(Error::Document(format!(
                "matrix declares {} rows but has {}",
                self.rows,
                self.entries.len()
            )));
        }
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for row in &self.entries {
            if row.len() != self.cols {
                return Err(Error::Document("ragged matrix row".into()));
            }
            data.extend_from_slice(row);
        }
        Mat::new(field, self.rows, self.cols, data)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraDoc {
    pub field: FieldDoc,
    pub dim: usize,
    pub labels: Vec<String>,
    pub unit: Vec<u64>,
    pub structconst: Vec<Vec<Vec<u64>>>,
    pub idempotents: Vec<Vec<u64>>,
    pub radical: Vec<Vec<u64>>,
}

impl AlgebraDoc {
    pub fn from_algebra(a: &Algebra) -> AlgebraDoc {
        AlgebraDoc {
            field: FieldDoc {
                p: a.field().modulus(),
            },
            dim: a.dim(),
            labels: a.labels().to_vec(),
            unit: a.unit().to_vec(),
            structconst: a.table().clone(),
            idempotents: a.idempotents().to_vec(),
            radical: a.rad_basis().to_vec(),
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra> {
        let field = FieldSpec::new(self.field.p)?;
        if self.labels.len() != self.dim {
            return Err(Error::Document(
                "label count does not match the declared dimension".into(),
            ));
        }
        Algebra::new(
            field,
            self.labels.clone(),
            self.structconst.clone(),
            self.unit.clone(),
            self.idempotents.clone(),
            self.radical.clone(),
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArrowDoc {
    pub name: String,
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuiverDoc {
    pub vertices: usize,
    pub arrows: Vec<ArrowDoc>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

impl QuiverDoc {
    pub fn to_quiver(&self) -> Result<Quiver> {
        Quiver::new(
            self.vertices,
            self.arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    from: a.from,
                    to: a.to,
                })
                .collect(),
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BimoduleDoc {
    pub dim: usize,
    pub left: Vec<MatDoc>,
    pub right: Vec<MatDoc>,
}

impl BimoduleDoc {
    pub fn from_bimodule(m: &Bimodule) -> BimoduleDoc {
        BimoduleDoc {
            dim: m.dim(),
            left: m.left_action().iter().map(MatDoc::from_mat).collect(),
            right: m.right_action().iter().map(MatDoc::from_mat).collect(),
        }
    }

    /// Reattach to algebras; both actions are validated.
    pub fn to_bimodule(&self, left: &Arc<Algebra>, right: &Arc<Algebra>) -> Result<Bimodule> {
        let f = left.field();
        let la = self
            .left
            .iter()
            .map(|m| m.to_mat(f))
            .collect::<Result<Vec<_>>>()?;
        let ra = self
            .right
            .iter()
            .map(|m| m.to_mat(f))
            .collect::<Result<Vec<_>>>()?;
        Bimodule::new(left.clone(), right.clone(), self.dim, la, ra)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ModuleDoc {
    pub dim: usize,
    pub action: Vec<MatDoc>,
}

impl ModuleDoc {
    pub fn from_module(m: &FdModule) -> ModuleDoc {
        ModuleDoc {
            dim: m.dim(),
            action: m.action().iter().map(MatDoc::from_mat).collect(),
        }
    }

    pub fn to_module(&self, algebra: &Arc<Algebra>) -> Result<FdModule> {
        let f = algebra.field();
        let action = self
            .action
            .iter()
            .map(|m| m.to_mat(f))
            .collect::<Result<Vec<_>>>()?;
        FdModule::new(algebra.clone(), self.dim, action)
    }
}

/// `{"X": module, "u": matrix}`: the structure map is given on the computed
/// tensor quotient `M (x) X`, whose basis is determined by the instance.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PairDoc {
    #[serde(rename = "X")]
    pub x: ModuleDoc,
    pub u: MatDoc,
}

impl PairDoc {
    pub fn from_pair(p: &PairModule) -> PairDoc {
        PairDoc {
            x: ModuleDoc::from_module(p.x()),
            u: MatDoc::from_mat(p.u()),
        }
    }

    pub fn to_pair(&self, tp: &TensorPowers) -> Result<PairModule> {
        let x = Arc::new(self.x.to_module(tp.base())?);
        let u = self.u.to_mat(tp.base().field())?;
        PairModule::new(tp, x, u)
    }
}

/// `{"Y": module-over-the-opposite, "vbar": matrix}` for right modules.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CopairDoc {
    #[serde(rename = "Y")]
    pub y: ModuleDoc,
    pub vbar: MatDoc,
}

impl CopairDoc {
    pub fn from_copair(c: &crate::tensor_ring::CopairModule) -> CopairDoc {
        CopairDoc {
            y: ModuleDoc::from_module(c.y()),
            vbar: MatDoc::from_mat(c.vbar()),
        }
    }

    pub fn to_copair(
        &self,
        tp: &TensorPowers,
        base_op: &Arc<Algebra>,
    ) -> Result<crate::tensor_ring::CopairModule> {
        let y = Arc::new(self.y.to_module(base_op)?);
        let vbar = self.vbar.to_mat(tp.base().field())?;
        crate::tensor_ring::CopairModule::new(tp, y, vbar)
    }
}

/// Instance manifest: format version, field, and document references
/// (paths relative to the manifest location).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Manifest {
    pub version: String,
    pub field: FieldDoc,
    pub algebra: String,
    pub bimodule: String,
}

impl Manifest {
    pub fn validate(&self) -> Result<()> {
        if self.version != "1" {
            return Err(Error::Document(format!(
                "unsupported manifest version {}",
                self.version
            )));
        }
        Ok(())
    }
}

/// Hex SHA-256 of the canonical JSON encoding, truncated to 16 hex chars;
/// used to pin instances inside reports.
pub fn digest_json<T: Serialize>(value: &T) -> String {
    let bytes = serde_json::to_vec(value).expect("serializable");
    let mut h = Sha256::new();
    h.update(&bytes);
    let out = h.finalize();
    out.iter()
        .take(8)
        .map(|b| format!("{b:02x}"))
        .collect::<String>()
}

pub fn algebra_digest(a: &Algebra) -> String {
    digest_json(&AlgebraDoc::from_algebra(a))
}

pub fn bimodule_digest(m: &Bimodule) -> String {
    digest_json(&BimoduleDoc::from_bimodule(m))
}
