//! Matrix representations of finite monoids and groups.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{invalid, Error, Result};
use crate::linalg::{Field, Matrix};
use crate::monoid::{FiniteMonoid, GroupTable};

/// A left `KM`-module: one matrix per monoid element.
#[derive(Clone, Debug)]
pub struct MonRep {
    pub monoid: Arc<FiniteMonoid>,
    pub field: Field,
    pub dim: usize,
    pub rho: Vec<Matrix>,
}

/// A left `KG`-module: one matrix per group element.
#[derive(Clone, Debug)]
pub struct GroupRep {
    pub group: Arc<GroupTable>,
    pub field: Field,
    pub dim: usize,
    pub rho: Vec<Matrix>,
}

fn check_shapes(rho: &[Matrix], count: usize, dim: usize, field: Field) -> Result<()> {
    if rho.len() != count {
        return Err(Error::NotARepresentation(format!("expected {count} matrices, got {}", rho.len())));
    }
    if rho.iter().any(|m| m.rows != dim || m.cols != dim || m.field != field) {
        return Err(Error::NotARepresentation(format!("every matrix must be {dim}x{dim} over {field}")));
    }
    Ok(())
}

impl MonRep {
    /// Checks `ρ(1) = I` and `ρ(gm) = ρ(g)ρ(m)` for every generator `g` and
    /// every `m`, which forces multiplicativity on all pairs.
    pub fn new(monoid: Arc<FiniteMonoid>, field: Field, dim: usize, rho: Vec<Matrix>) -> Result<MonRep> {
        check_shapes(&rho, monoid.size(), dim, field)?;
        if !rho[0].is_identity() {
            return Err(Error::NotARepresentation("identity does not act as the identity matrix".into()));
        }
        let r = MonRep { monoid, field, dim, rho };
        for g in r.monoid.generators() {
            for m in 0..r.monoid.size() {
                if r.rho[r.monoid.mul(g, m)] != r.rho[g].mul(&r.rho[m]) {
                    return Err(Error::NotARepresentation(format!("ρ({g}·{m}) != ρ({g})ρ({m})")));
                }
            }
        }
        Ok(r)
    }

    pub(crate) fn new_unchecked(monoid: Arc<FiniteMonoid>, field: Field, dim: usize, rho: Vec<Matrix>) -> MonRep {
        MonRep { monoid, field, dim, rho }
    }

    pub fn trivial(monoid: Arc<FiniteMonoid>, field: Field) -> MonRep {
        let rho = vec![Matrix::identity(field, 1); monoid.size()];
        MonRep { monoid, field, dim: 1, rho }
    }

    pub fn act(&self, m: usize) -> &Matrix {
        &self.rho[m]
    }

    /// Exhaustive multiplicativity check over all pairs.
    pub fn is_representation(&self) -> bool {
        let n = self.monoid.size();
        self.rho[0].is_identity() && (0..n).all(|a| (0..n).all(|b| self.rho[self.monoid.mul(a, b)] == self.rho[a].mul(&self.rho[b])))
    }

    pub fn direct_sum(&self, other: &MonRep) -> MonRep {
        let rho = self.rho.iter().zip(&other.rho).map(|(a, b)| a.direct_sum(b)).collect();
        MonRep { monoid: self.monoid.clone(), field: self.field, dim: self.dim + other.dim, rho }
    }

    /// Pullback along a homomorphism `φ : source -> self.monoid`.
    pub fn pullback(&self, source: Arc<FiniteMonoid>, phi: &[usize]) -> Result<MonRep> {
        if !source.is_homomorphism(phi, &self.monoid) {
            return invalid("pullback map is not a monoid homomorphism");
        }
        let rho = phi.iter().map(|&x| self.rho[x].clone()).collect();
        Ok(MonRep { monoid: source, field: self.field, dim: self.dim, rho })
    }

    /// Conjugate by an invertible matrix: `ρ'(m) = P^{-1} ρ(m) P`.
    pub fn conjugate(&self, p: &Matrix) -> Result<MonRep> {
        let pinv = p.inverse().ok_or_else(|| Error::Invalid("conjugating matrix is singular".into()))?;
        let rho = self.rho.iter().map(|r| pinv.mul(r).mul(p)).collect();
        Ok(MonRep { monoid: self.monoid.clone(), field: self.field, dim: self.dim, rho })
    }

    pub fn to_json(&self) -> Value {
        let mats: BTreeMap<String, Value> = self.rho.iter().enumerate().map(|(i, m)| (i.to_string(), m.to_json())).collect();
        json!({"dim": self.dim, "field": self.field.to_string(), "matrices": mats})
    }

    /// Reads `{"dim", "field", "matrices": {"elem": [[..]]}}`; the field
    /// in the file must match `field` when both are given.
    pub fn from_json(monoid: Arc<FiniteMonoid>, v: &Value, field: Option<Field>) -> Result<MonRep> {
        let (f, dim, mats) = parse_rep_json(v, field)?;
        let mut rho = vec![None; monoid.size()];
        for (k, m) in mats {
            if k >= monoid.size() {
                return invalid(format!("matrix for element {k} out of range"));
            }
            rho[k] = Some(m);
        }
        let rho = rho
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| Error::Invalid(format!("no matrix for element {i}"))))
            .collect::<Result<Vec<_>>>()?;
        MonRep::new(monoid, f, dim, rho)
    }
}

fn parse_rep_json(v: &Value, field: Option<Field>) -> Result<(Field, usize, Vec<(usize, Matrix)>)> {
    let file_field: Option<Field> = match v.get("field") {
        Some(Value::String(s)) => Some(s.parse()?),
        _ => None,
    };
    let f = match (file_field, field) {
        (Some(a), Some(b)) if a != b => return invalid(format!("representation is over {a}, requested {b}")),
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) => Field::Rational,
    };
    let dim = v.get("dim").and_then(Value::as_u64).ok_or_else(|| Error::Invalid("missing \"dim\"".into()))? as usize;
    let mats = v.get("matrices").and_then(Value::as_object).ok_or_else(|| Error::Invalid("missing \"matrices\" object".into()))?;
    let mut out = Vec::new();
    for (k, m) in mats {
        let idx: usize = k.parse().map_err(|_| Error::Invalid(format!("bad element key {k:?}")))?;
        let mat = if dim == 0 { Matrix::zeros(f, 0, 0) } else { Matrix::from_json(f, m)? };
        out.push((idx, mat));
    }
    Ok((f, dim, out))
}

impl GroupRep {
    pub fn new(group: Arc<GroupTable>, field: Field, dim: usize, rho: Vec<Matrix>) -> Result<GroupRep> {
        check_shapes(&rho, group.size(), dim, field)?;
        if !rho[0].is_identity() {
            return Err(Error::NotARepresentation("identity does not act as the identity matrix".into()));
        }
        let r = GroupRep { group, field, dim, rho };
        for g in r.group.generators() {
            for h in 0..r.group.size() {
                if r.rho[r.group.mul(g, h)] != r.rho[g].mul(&r.rho[h]) {
                    return Err(Error::NotARepresentation(format!("ρ({g}·{h}) != ρ({g})ρ({h})")));
                }
            }
        }
        Ok(r)
    }

    pub fn trivial(group: Arc<GroupTable>, field: Field) -> GroupRep {
        let rho = vec![Matrix::identity(field, 1); group.size()];
        GroupRep { group, field, dim: 1, rho }
    }

    /// Left regular representation `KG`.
    pub fn regular(group: Arc<GroupTable>, field: Field) -> GroupRep {
        let n = group.size();
        let rho = (0..n)
            .map(|g| {
                let mut m = Matrix::zeros(field, n, n);
                for h in 0..n {
                    m.set(group.mul(g, h), h, field.one());
                }
                m
            })
            .collect();
        GroupRep { group, field, dim: n, rho }
    }

    /// Permutation module for an action given by `perms[g][point]`.
    pub fn permutation(group: Arc<GroupTable>, field: Field, perms: &[Vec<usize>]) -> Result<GroupRep> {
        let k = perms.first().map_or(0, |p| p.len());
        let rho = perms
            .iter()
            .map(|p| {
                let mut m = Matrix::zeros(field, k, k);
                for (i, &j) in p.iter().enumerate() {
                    m.set(j, i, field.one());
                }
                m
            })
            .collect();
        GroupRep::new(group, field, k, rho)
    }

    pub fn act(&self, g: usize) -> &Matrix {
        &self.rho[g]
    }

    pub fn direct_sum(&self, other: &GroupRep) -> GroupRep {
        let rho = self.rho.iter().zip(&other.rho).map(|(a, b)| a.direct_sum(b)).collect();
        GroupRep { group: self.group.clone(), field: self.field, dim: self.dim + other.dim, rho }
    }

    pub fn tensor(&self, other: &GroupRep) -> GroupRep {
        let rho = self.rho.iter().zip(&other.rho).map(|(a, b)| a.kron(b)).collect();
        GroupRep { group: self.group.clone(), field: self.field, dim: self.dim * other.dim, rho }
    }

    /// Reduces a rational representation to `F_p` (or keeps it over `Q`).
    pub fn over(&self, field: Field) -> Result<GroupRep> {
        if field == self.field {
            return Ok(self.clone());
        }
        if self.field != Field::Rational {
            return invalid("only rational representations can change field");
        }
        let rho = self
            .rho
            .iter()
            .map(|m| {
                let rows = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
                Matrix::from_rows(field, rows).map(|x| if m.rows == 0 { Matrix::zeros(field, 0, 0) } else { x })
            })
            .collect::<Result<Vec<_>>>()?;
        GroupRep::new(self.group.clone(), field, self.dim, rho)
    }

    /// Keys are embedded monoid elements when the group has an embedding,
    /// otherwise group indices.
    pub fn to_json(&self) -> Value {
        let key = |g: usize| self.group.embedding.as_ref().map_or(g, |e| e[g]).to_string();
        let mats: BTreeMap<String, Value> = self.rho.iter().enumerate().map(|(g, m)| (key(g), m.to_json())).collect();
        json!({"dim": self.dim, "field": self.field.to_string(), "matrices": mats})
    }

    pub fn from_json(group: Arc<GroupTable>, v: &Value, field: Option<Field>) -> Result<GroupRep> {
        let (f, dim, mats) = parse_rep_json(v, field)?;
        let mut rho = vec![None; group.size()];
        for (k, m) in mats {
            let g = match &group.embedding {
                Some(_) => group.index_of(k).ok_or_else(|| Error::Invalid(format!("element {k} is not in the group")))?,
                None => k,
            };
            if g >= group.size() {
                return invalid(format!("group element {g} out of range"));
            }
            rho[g] = Some(m);
        }
        let rho = rho
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| Error::Invalid(format!("no matrix for group element {i}"))))
            .collect::<Result<Vec<_>>>()?;
        GroupRep::new(group, f, dim, rho)
    }
}
