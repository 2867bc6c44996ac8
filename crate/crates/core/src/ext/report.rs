//! Report records shared by the `Ext` computations.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::linalg::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Topological,
    Oracle,
    Ext1Fast,
    TwoTrivials,
    Induced,
    Cohomology,
    Resolution,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Topological => "topological",
            Method::Oracle => "oracle",
            Method::Ext1Fast => "ext1_fast",
            Method::TwoTrivials => "two_trivials",
            Method::Induced => "induced",
            Method::Cohomology => "cohomology",
            Method::Resolution => "resolution",
        }
    }
}

/// Dimensions of `Ext^n` per degree with the hypotheses that were checked.
#[derive(Clone, Debug)]
pub struct ExtReport {
    pub method: Method,
    pub field: Field,
    pub dims: BTreeMap<usize, usize>,
    pub assumptions: BTreeMap<String, Value>,
    /// Highest degree whose dimension is certified.
    pub valid_through: usize,
    /// False when a rational rank rests on modular agreement only.
    pub certified: bool,
    pub notes: Vec<String>,
}

impl ExtReport {
    pub fn new(method: Method, field: Field, dims: BTreeMap<usize, usize>, valid_through: usize) -> Self {
        ExtReport { method, field, dims, assumptions: BTreeMap::new(), valid_through, certified: true, notes: Vec::new() }
    }

    pub fn dim(&self, n: usize) -> Option<usize> {
        self.dims.get(&n).copied()
    }

    pub fn to_json(&self) -> Value {
        let dims: BTreeMap<String, usize> = self.dims.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        json!({
            "method": self.method.as_str(),
            "field": self.field.to_string(),
            "dims": dims,
            "assumptions": self.assumptions,
            "valid_through": self.valid_through,
            "certified": self.certified,
            "notes": self.notes,
        })
    }
}
