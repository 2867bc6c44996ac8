//! JSON builder descriptions of monoids.

use serde_json::Value;

use super::builders;
use super::crossed::CrossedSystem;
use super::table::FiniteMonoid;
use crate::error::{invalid, Error, Result};

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Invalid(format!("missing {key:?}")))
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?.as_u64().map(|x| x as usize).ok_or_else(|| Error::Invalid(format!("{key:?} must be a non-negative integer")))
}

/// Builds a monoid from either a table description or a builder object
/// with a `"type"` key.
pub fn monoid_from_json(v: &Value) -> Result<FiniteMonoid> {
    let ty = match v.get("type").and_then(Value::as_str) {
        Some(t) => t,
        None => return FiniteMonoid::from_json(v),
    };
    match ty {
        "table" => FiniteMonoid::from_json(v),
        "transformations" => {
            let gens: Vec<Vec<usize>> = serde_json::from_value(field(v, "generators")?.clone())?;
            Ok(builders::transformation_monoid(usize_field(v, "degree")?, &gens)?.monoid)
        }
        "full_tn" => Ok(builders::full_transformation_monoid(usize_field(v, "n")?)?.monoid),
        "symmetric" => Ok(builders::symmetric_group(usize_field(v, "n")?)?.monoid),
        "cyclic" => builders::cyclic_group(usize_field(v, "n")?),
        "matrix_monoid" => Ok(builders::matrix_monoid(usize_field(v, "n")?, usize_field(v, "q")?)?.monoid),
        "affine" => Ok(builders::affine_monoid(usize_field(v, "n")?, usize_field(v, "q")?)?.monoid),
        "opposite" => Ok(monoid_from_json(field(v, "of")?)?.opposite()),
        "product" => {
            let fs = field(v, "factors")?.as_array().ok_or_else(|| Error::Invalid("\"factors\" must be an array".into()))?;
            let mut acc = FiniteMonoid::from_table(&[vec![0]], 0, Some(vec!["1".into()]))?;
            for f in fs {
                acc = acc.direct_product(&monoid_from_json(f)?);
            }
            Ok(acc)
        }
        "named" => builders::named(field(v, "name")?.as_str().ok_or_else(|| Error::Invalid("\"name\" must be a string".into()))?),
        "crossed" | "semidirect" => Ok(crossed_system_from_json(v)?.expect("crossed description").build()?.monoid),
        other => invalid(format!("unknown monoid builder type {other:?}")),
    }
}

/// The crossed system of a `"crossed"` or `"semidirect"` description, or
/// `None` for any other description.
pub fn crossed_system_from_json(v: &Value) -> Result<Option<CrossedSystem>> {
    let ty = v.get("type").and_then(Value::as_str);
    if !matches!(ty, Some("crossed" | "semidirect")) {
        return Ok(None);
    }
    let base = monoid_from_json(field(v, "M")?)?;
    let top = monoid_from_json(field(v, "N")?)?;
    let alpha: Vec<Vec<usize>> = serde_json::from_value(field(v, "alpha")?.clone())?;
    let mut sys = CrossedSystem::semidirect(base, top, alpha);
    if ty == Some("crossed") {
        sys.cocycle = serde_json::from_value(field(v, "c")?.clone())?;
    }
    Ok(Some(sys))
}

/// Builds a monoid together with the action of each element on points,
/// when the description determines one. Tables may carry it as `"points"`.
pub fn monoid_with_points_from_json(v: &Value) -> Result<(FiniteMonoid, Option<Vec<Vec<usize>>>)> {
    let ty = v.get("type").and_then(Value::as_str).unwrap_or("table");
    let num = |k: &str| usize_field(v, k);
    let (m, pts) = match ty {
        "table" => {
            let m = FiniteMonoid::from_json(v)?;
            let pts: Option<Vec<Vec<usize>>> = match v.get("points") {
                Some(p) if !p.is_null() => Some(serde_json::from_value(p.clone())?),
                _ => None,
            };
            (m, pts)
        }
        "transformations" => {
            let gens: Vec<Vec<usize>> = serde_json::from_value(field(v, "generators")?.clone())?;
            let t = builders::transformation_monoid(num("degree")?, &gens)?;
            (t.monoid, Some(t.maps))
        }
        "full_tn" => builders::named_with_points(&format!("t{}", num("n")?))?,
        "symmetric" => builders::named_with_points(&format!("s{}", num("n")?))?,
        "matrix_monoid" => builders::named_with_points(&format!("m({},{})", num("n")?, num("q")?))?,
        "affine" => builders::named_with_points(&format!("aff({},{})", num("n")?, num("q")?))?,
        "named" => builders::named_with_points(field(v, "name")?.as_str().ok_or_else(|| Error::Invalid("\"name\" must be a string".into()))?)?,
        _ => (monoid_from_json(v)?, None),
    };
    if let Some(p) = &pts {
        let degree = p.first().map_or(0, Vec::len);
        if p.len() != m.size() || p.iter().any(|f| f.len() != degree || f.iter().any(|&x| x >= degree)) {
            return invalid("\"points\" must give one map on a common point set per element");
        }
        if ty == "table" && v.get("identity").and_then(Value::as_u64).unwrap_or(0) != 0 {
            return invalid("\"points\" needs the identity at index 0");
        }
    }
    Ok((m, pts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn builders_parse() {
        let t3 = monoid_from_json(&json!({"type": "full_tn", "n": 3})).unwrap();
        assert_eq!(t3.size(), 27);
        let op = monoid_from_json(&json!({"type": "opposite", "of": {"type": "named", "name": "T2"}})).unwrap();
        assert_eq!(op.size(), 4);
        let back = monoid_from_json(&t3.to_json()).unwrap();
        assert_eq!(back, t3);
        let sd = monoid_from_json(&json!({
            "type": "semidirect",
            "M": {"type": "cyclic", "n": 2},
            "N": {"type": "named", "name": "semilattice2"},
            "alpha": [[0, 1], [0, 0]]
        }))
        .unwrap();
        assert_eq!(sd.size(), 4);
    }
}
