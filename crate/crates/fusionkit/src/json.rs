//! JSON interchange for every entity the crate produces.
//!
//! One canonical machine format: a top-level `schema` field pinned to
//! `"fusionkit/1"`, a `kind` tag, and the payload. Algebra and hypergroup
//! tensors are serialized as sparse `[i, j, k, value]` quadruples. All
//! invariants are re-validated when loading, so a corrupted file (negative
//! structure constants, broken Cayley table) fails to parse.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chars::CharacterTable;
use crate::diagram::{DiagramNode, FrobeniusDiagram};
use crate::fusion::{BasisLabel, FusionAlgebra, Hypergroup};
use crate::group::FiniteGroup;

pub const SCHEMA: &str = "fusionkit/1";

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("schema mismatch: expected {SCHEMA:?}, found {found:?}")]
    SchemaMismatch { found: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid document: {0}")]
    Invalid(String),
}

impl From<serde_json::Error> for JsonError {
    fn from(e: serde_json::Error) -> Self {
        JsonError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Document {
    pub schema: String,
    #[serde(flatten)]
    pub entity: Entity,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Entity {
    Group(GroupDoc),
    CharacterTable(TableDoc),
    Algebra(AlgebraDoc),
    Hypergroup(HypergroupDoc),
    Diagram(DiagramDoc),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupDoc {
    pub name: String,
    pub order: usize,
    pub identity: usize,
    pub labels: Vec<String>,
    pub cayley: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableDoc {
    pub group_name: String,
    pub group_order: usize,
    pub class_sizes: Vec<usize>,
    pub class_representatives: Vec<String>,
    pub degrees: Vec<usize>,
    /// Complex values as `[re, im]` pairs, row per irreducible.
    pub values: Vec<Vec<[f64; 2]>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum LabelDoc {
    Circle { index: usize },
    Bullet { index: usize },
    Abstract { name: String },
}

impl From<&BasisLabel> for LabelDoc {
    fn from(label: &BasisLabel) -> Self {
        match label {
            BasisLabel::Circle(i) => LabelDoc::Circle { index: *i },
            BasisLabel::Bullet(i) => LabelDoc::Bullet { index: *i },
            BasisLabel::Abstract(name) => LabelDoc::Abstract { name: name.clone() },
        }
    }
}

impl From<&LabelDoc> for BasisLabel {
    fn from(doc: &LabelDoc) -> Self {
        match doc {
            LabelDoc::Circle { index } => BasisLabel::Circle(*index),
            LabelDoc::Bullet { index } => BasisLabel::Bullet(*index),
            LabelDoc::Abstract { name } => BasisLabel::Abstract(name.clone()),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub labels: Vec<LabelDoc>,
    pub unit: usize,
    pub involution: Vec<usize>,
    /// Sparse structure constants as `[i, j, k, a_ijk]`; signed so that a
    /// corrupted negative entry is caught by validation, not by u64 wrap.
    pub structure: Vec<[i64; 4]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HypergroupDoc {
    pub labels: Vec<LabelDoc>,
    pub unit: usize,
    pub involution: Vec<usize>,
    pub coefficients: Vec<(usize, usize, usize, f64)>,
    pub weights: Vec<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiagramDoc {
    pub circles: Vec<NodeDoc>,
    pub bullets: Vec<NodeDoc>,
    pub edges: Vec<(usize, usize, u64)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NodeDoc {
    pub label: String,
    pub degree: usize,
}

fn wrap(entity: Entity) -> String {
    let doc = Document { schema: SCHEMA.to_string(), entity };
    serde_json::to_string_pretty(&doc).expect("serialization cannot fail") + "\n"
}

pub fn group_to_json(group: &FiniteGroup) -> String {
    wrap(Entity::Group(GroupDoc {
        name: group.name().to_string(),
        order: group.order(),
        identity: group.identity(),
        labels: group.labels().to_vec(),
        cayley: (0..group.order())
            .map(|a| (0..group.order()).map(|b| group.mul(a, b)).collect())
            .collect(),
    }))
}

pub fn table_to_json(table: &CharacterTable) -> String {
    let group = table.group();
    wrap(Entity::CharacterTable(TableDoc {
        group_name: group.name().to_string(),
        group_order: group.order(),
        class_sizes: group.classes().iter().map(|c| c.len()).collect(),
        class_representatives: group
            .classes()
            .iter()
            .map(|c| group.label(c[0]).to_string())
            .collect(),
        degrees: table.degrees(),
        values: table
            .irreducibles()
            .iter()
            .map(|ch| ch.function().values().iter().map(|z| [z.re, z.im]).collect())
            .collect(),
    }))
}

pub fn algebra_to_json(alg: &FusionAlgebra) -> String {
    let mut structure = Vec::new();
    for i in 0..alg.len() {
        for j in 0..alg.len() {
            for k in 0..alg.len() {
                let c = alg.coefficient(i, j, k);
                if c != 0 {
                    structure.push([i as i64, j as i64, k as i64, c as i64]);
                }
            }
        }
    }
    wrap(Entity::Algebra(AlgebraDoc {
        labels: alg.labels().iter().map(LabelDoc::from).collect(),
        unit: alg.unit(),
        involution: alg.involution().to_vec(),
        structure,
    }))
}

pub fn hypergroup_to_json(h: &Hypergroup) -> String {
    let mut coefficients = Vec::new();
    for i in 0..h.len() {
        for j in 0..h.len() {
            for k in 0..h.len() {
                let c = h.coefficient(i, j, k);
                if c != 0.0 {
                    coefficients.push((i, j, k, c));
                }
            }
        }
    }
    wrap(Entity::Hypergroup(HypergroupDoc {
        labels: h.labels().iter().map(LabelDoc::from).collect(),
        unit: h.unit(),
        involution: h.involution().to_vec(),
        coefficients,
        weights: h.weights().to_vec(),
    }))
}

pub fn diagram_to_json(d: &FrobeniusDiagram) -> String {
    let node = |n: &DiagramNode| NodeDoc { label: n.label.clone(), degree: n.degree };
    wrap(Entity::Diagram(DiagramDoc {
        circles: d.circles.iter().map(node).collect(),
        bullets: d.bullets.iter().map(node).collect(),
        edges: d.edges.clone(),
    }))
}

/// Parses any document, checking the schema tag first.
pub fn parse_document(text: &str) -> Result<Document, JsonError> {
    // Peek at the schema before strict payload parsing for a clear error.
    #[derive(Deserialize)]
    struct SchemaOnly {
        schema: Option<String>,
    }
    let peek: SchemaOnly = serde_json::from_str(text)?;
    match peek.schema {
        Some(s) if s == SCHEMA => {}
        Some(s) => return Err(JsonError::SchemaMismatch { found: s }),
        None => return Err(JsonError::SchemaMismatch { found: "<missing>".to_string() }),
    }
    Ok(serde_json::from_str(text)?)
}

pub fn group_from_json(text: &str) -> Result<FiniteGroup, JsonError> {
    match parse_document(text)?.entity {
        Entity::Group(doc) => {
            let group = FiniteGroup::from_parts(doc.name, doc.cayley, doc.labels)
                .map_err(|e| JsonError::Invalid(e.to_string()))?;
            if group.identity() != doc.identity {
                return Err(JsonError::Invalid(format!(
                    "declared identity {} but the table fixes {}",
                    doc.identity,
                    group.identity()
                )));
            }
            Ok(group)
        }
        _ => Err(JsonError::Invalid("expected a group document".into())),
    }
}

pub fn algebra_from_json(text: &str) -> Result<FusionAlgebra, JsonError> {
    match parse_document(text)?.entity {
        Entity::Algebra(doc) => algebra_from_doc(&doc),
        _ => Err(JsonError::Invalid("expected an algebra document".into())),
    }
}

pub fn algebra_from_doc(doc: &AlgebraDoc) -> Result<FusionAlgebra, JsonError> {
    let n = doc.labels.len();
    if doc.unit != 0 {
        return Err(JsonError::Invalid("unit must be basis index 0".into()));
    }
    let mut structure = vec![vec![vec![0u64; n]; n]; n];
    for &[i, j, k, a] in &doc.structure {
        if i < 0 || j < 0 || k < 0 {
            return Err(JsonError::Invalid("negative basis index".into()));
        }
        let (i, j, k) = (i as usize, j as usize, k as usize);
        if i >= n || j >= n || k >= n {
            return Err(JsonError::Invalid(format!("index out of range in entry [{i}, {j}, {k}]")));
        }
        if a < 0 {
            return Err(JsonError::Invalid(format!(
                "negative structure constant {a} at [{i}, {j}, {k}]"
            )));
        }
        structure[i][j][k] = a as u64;
    }
    let labels: Vec<BasisLabel> = doc.labels.iter().map(BasisLabel::from).collect();
    FusionAlgebra::new(labels, doc.involution.clone(), structure)
        .map_err(|e| JsonError::Invalid(e.to_string()))
}

pub fn diagram_from_json(text: &str) -> Result<FrobeniusDiagram, JsonError> {
    match parse_document(text)?.entity {
        Entity::Diagram(doc) => {
            let node = |n: &NodeDoc| DiagramNode { label: n.label.clone(), degree: n.degree };
            for &(c, b, m) in &doc.edges {
                if c >= doc.circles.len() || b >= doc.bullets.len() || m == 0 {
                    return Err(JsonError::Invalid(format!("bad edge ({c}, {b}, {m})")));
                }
            }
            Ok(FrobeniusDiagram {
                circles: doc.circles.iter().map(node).collect(),
                bullets: doc.bullets.iter().map(node).collect(),
                edges: doc.edges,
            })
        }
        _ => Err(JsonError::Invalid("expected a diagram document".into())),
    }
}
