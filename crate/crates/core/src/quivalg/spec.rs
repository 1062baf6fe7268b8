use serde::Deserialize;

use super::QuivalgError;
use crate::exact::{parse_rational, Rational};

/// One arrow of the quiver, with vertex names.
#[derive(Clone, Debug, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

/// One term of a relation: coeff * (path of arrow names, composition
/// order, i.e. ["a", "b"] is "first b, then a").
#[derive(Clone, Debug)]
pub struct RelationTerm {
    pub coeff: Rational,
    pub path: Vec<String>,
}

/// Quiver presentation of a finite-dimensional algebra.
#[derive(Clone, Debug)]
pub struct QuiverSpec {
    pub name: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    pub relations: Vec<Vec<RelationTerm>>,
    pub nilpotency_bound: usize,
}

#[derive(Deserialize)]
struct RelationTermJson {
    coeff: String,
    path: Vec<String>,
}

#[derive(Deserialize)]
struct QuiverSpecJson {
    #[serde(default)]
    name: Option<String>,
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<ArrowSpec>,
    #[serde(default)]
    relations: Vec<Vec<RelationTermJson>>,
    nilpotency_bound: usize,
}

impl QuiverSpec {
    /// Parse the JSON document format:
    /// `{"vertices":[...], "arrows":[{"name","src","tgt"}],
    ///   "relations":[[{"coeff":"p/q","path":["a","b"]}]],
    ///   "nilpotency_bound":N}`.
    pub fn from_json(text: &str) -> Result<Self, QuivalgError> {
        let raw: QuiverSpecJson =
            serde_json::from_str(text).map_err(|e| QuivalgError::Parse(format!("bad quiver JSON: {e}")))?;
        let mut relations = Vec::new();
        for rel in raw.relations {
            let mut terms = Vec::new();
            for t in rel {
                let coeff = parse_rational(&t.coeff).map_err(QuivalgError::Parse)?;
                terms.push(RelationTerm { coeff, path: t.path });
            }
            relations.push(terms);
        }
        Ok(QuiverSpec {
            name: raw.name.unwrap_or_else(|| "quiver".into()),
            vertices: raw.vertices,
            arrows: raw.arrows,
            relations,
            nilpotency_bound: raw.nilpotency_bound,
        })
    }
}
