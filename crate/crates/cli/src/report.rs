//! Machine-readable reports. Field order is the serialization order.

use serde::{Deserialize, Serialize};

use wes_core::abelian::{FgAbGroup, Homomorphism};
use wes_core::gamma_enum::{GroupTable, OracleReport, Structure};
use wes_core::wes::{CheckKind, GammaTuple, ValidationReport, WesReport};

use crate::input::{rows_of, GroupSpec, Groups, Int, Rows};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub name: String,
    pub rank: usize,
    pub torsion: Vec<Int>,
}

impl From<&FgAbGroup> for GroupJson {
    fn from(g: &FgAbGroup) -> Self {
        let spec = GroupSpec::from(g);
        GroupJson {
            name: g.to_string(),
            rank: spec.rank,
            torsion: spec.torsion,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub kind: String,
    pub passed: bool,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationJson {
    pub passed: bool,
    pub checks: Vec<CheckJson>,
}

impl From<&ValidationReport> for ValidationJson {
    fn from(r: &ValidationReport) -> Self {
        ValidationJson {
            passed: r.passed(),
            checks: r
                .checks
                .iter()
                .map(|c| CheckJson {
                    name: c.name.to_string(),
                    kind: match c.kind {
                        CheckKind::Hypothesis => "hypothesis",
                        CheckKind::Shape => "shape",
                    }
                    .to_string(),
                    passed: c.passed,
                    reason: c.reason.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsJson {
    pub h3: GroupJson,
    pub h4: GroupJson,
    pub h5: GroupJson,
    pub h6: GroupJson,
    pub pi3: GroupJson,
    pub pi4: GroupJson,
    pub gamma5: GroupJson,
    pub coker_b6: GroupJson,
    pub ext: GroupJson,
    pub pi5_class: Rows,
    pub pi5_class_ext_coords: Vec<Int>,
    pub pi5_split: bool,
    pub pi5: GroupJson,
    pub pi5_order: Option<Int>,
}

impl From<&WesReport> for InvariantsJson {
    fn from(r: &WesReport) -> Self {
        InvariantsJson {
            h3: (&r.h3).into(),
            h4: (&r.h4).into(),
            h5: (&r.h5).into(),
            h6: (&r.h6).into(),
            pi3: (&r.h3).into(),
            pi4: (&r.h4).into(),
            gamma5: (&r.gamma5).into(),
            coker_b6: (&r.coker_b6).into(),
            ext: (&r.ext).into(),
            pi5_class: r.pi5_class.iter().map(|v| v.iter().map(Int::from).collect()).collect(),
            pi5_class_ext_coords: r.pi5_class_ext_coords.iter().map(Int::from).collect(),
            pi5_split: r.pi5_split,
            pi5: (&r.pi5).into(),
            pi5_order: r.pi5_order.as_ref().map(Int::from),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleJson {
    pub f6: Rows,
    pub f5: Rows,
    pub f4: Rows,
    pub f3: Rows,
}

impl From<&GammaTuple> for TupleJson {
    fn from(t: &GammaTuple) -> Self {
        TupleJson {
            f6: rows_of(t.f6.matrix()),
            f5: rows_of(t.f5.matrix()),
            f4: rows_of(t.f4.matrix()),
            f3: rows_of(t.f3.matrix()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureJson {
    pub abelian: bool,
    pub description: String,
    pub invariant_factors: Option<Vec<u64>>,
}

impl From<&Structure> for StructureJson {
    fn from(s: &Structure) -> Self {
        StructureJson {
            abelian: matches!(s, Structure::Abelian { .. }),
            description: s.to_string(),
            invariant_factors: match s {
                Structure::Abelian { invariant_factors } => Some(invariant_factors.clone()),
                Structure::Nonabelian { .. } => None,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageJson {
    pub order: usize,
    pub structure: StructureJson,
    pub is_full_product: bool,
    /// `(f₆, f₅)` matrices.
    pub pairs: Vec<(Rows, Rows)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleJson {
    pub tuples: usize,
    pub accepted_by_criterion: usize,
    pub accepted_by_oracle: usize,
    pub agreements: usize,
    pub disagreements: Vec<Vec<usize>>,
}

impl From<&OracleReport> for OracleJson {
    fn from(r: &OracleReport) -> Self {
        OracleJson {
            tuples: r.tuples,
            accepted_by_criterion: r.accepted_by_criterion,
            accepted_by_oracle: r.accepted_by_oracle,
            agreements: r.agreements,
            disagreements: r.disagreements.iter().map(|d| d.index.clone()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaGroupJson {
    pub order: usize,
    pub product_size: usize,
    pub structure: StructureJson,
    pub generators: Vec<TupleJson>,
    pub image_f6_f5: ImageJson,
    pub gammas: Vec<Rows>,
    pub notes: Vec<String>,
    pub elements: Vec<TupleJson>,
    pub oracle: Option<OracleJson>,
}

impl GammaGroupJson {
    pub fn new(t: &GroupTable, oracle: Option<&OracleReport>) -> Self {
        let pair = |(f6, f5): &(Homomorphism, Homomorphism)| (rows_of(f6.matrix()), rows_of(f5.matrix()));
        GammaGroupJson {
            order: t.order,
            product_size: t.product_size,
            structure: (&t.structure).into(),
            generators: t.generators.iter().map(|&i| (&t.elements[i]).into()).collect(),
            image_f6_f5: ImageJson {
                order: t.top.order,
                structure: (&t.top.structure).into(),
                is_full_product: t.top.is_full_product,
                pairs: t.top.pairs.iter().map(pair).collect(),
            },
            gammas: t.gammas.iter().map(|g| rows_of(g.matrix())).collect(),
            notes: t.notes.clone(),
            elements: t.elements.iter().map(TupleJson::from).collect(),
            oracle: oracle.map(OracleJson::from),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Template {
    pub groups: Groups,
    pub b6: Option<Rows>,
    pub pi5_class: Option<Rows>,
}

/// Shape hints for the holes in a [`Template`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateHints {
    pub b6_rows: Option<usize>,
    pub b6_cols: usize,
    pub pi5_class_vectors: usize,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyJson {
    pub h3: GroupJson,
    pub h4: GroupJson,
    pub h5: GroupJson,
    pub h6: GroupJson,
    pub template: Template,
    pub hints: TemplateHints,
}
