//! The `monoext` command line: argument parsing, input loading and JSON
//! reports. Every report carries `tool_version` and `assumptions_checked`.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::complexes::{chain_complex, homology, omega_poset, order_complex, LeftMSet, RightMSet, DEFAULT_CAP};
use crate::error::{invalid, Error, Result};
use crate::ext::{
    crossed_product_prediction, ext1_fast, ext_from_induced, ext_oracle, ext_topological, ext_via_resolution, global_dimension_bound,
    homological_epi_check, monoid_cohomology, reduced_homology_of_ideal, simple_modules_coind, standard_resolution, tor_bar, ComplexKind,
    ExtReport, DEFAULT_COCHAIN_CAP,
};
use crate::linalg::{group_algebra_right_inverse, Field};
use crate::modules::fixtures::{cyclic_irreps, moved_points, named_irrep, perms_on_image, symmetric_irreps};
use crate::modules::{coinduce, equivariant_hom, monoid_hom, GroupRep, MonRep};
use crate::monoid::builders::{affine_monoid, matrix_monoid};
use crate::monoid::{
    crossed_system_from_json, green_structure, group_completion, ideal_data, maximal_subgroup, monoid_with_points_from_json, principal_series,
    sandwich_matrix, structural_flags, FiniteMonoid, GroupTable,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "monoext", version, about = "Ext, Tor and homology for finite monoid algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct MonoidArg {
    /// JSON file (table or builder), inline JSON, or a name such as t3, aff(1,3), m(2,2).
    #[arg(long)]
    pub monoid: String,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArg {
    /// `q` for the rationals, `p:P` for the prime field F_P.
    #[arg(long, default_value = "q")]
    pub field: String,
}

#[derive(Args, Debug, Clone)]
pub struct CapArg {
    /// Largest basis allowed for a truncated complex or cochain space.
    #[arg(long)]
    pub cap: Option<u128>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PosetKind {
    /// `Ω(S)` for the singular part `S = M \ G`, with the unit group acting.
    OmegaSingular,
    /// `Ω(R(e))` with `G_e` acting; needs `--e`.
    OmegaIdeal,
    /// `M/R`, all principal right ideals.
    OmegaUniverse,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ComplexArg {
    Order,
    Nerve,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ExtMethod {
    Topological,
    Oracle,
    Ext1,
    Induced,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MSetArg {
    Universe,
    Point,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the multiplication table of a monoid description.
    Build {
        #[command(flatten)]
        monoid: MonoidArg,
    },
    /// Green's relations, J-order and principal series.
    Green {
        #[command(flatten)]
        monoid: MonoidArg,
    },
    /// Regular, right/left p.p. and Dedekind-finite flags.
    Flags {
        #[command(flatten)]
        monoid: MonoidArg,
    },
    /// Sandwich matrices with right inverses over the group algebra.
    Sandwich {
        #[command(flatten)]
        monoid: MonoidArg,
        #[command(flatten)]
        field: FieldArg,
        /// Only this J-class.
        #[arg(long)]
        j: Option<usize>,
    },
    /// Group completion `ψ : M -> G(M)`.
    Gcompletion {
        #[command(flatten)]
        monoid: MonoidArg,
    },
    /// Posets of cyclic sub-M-sets.
    Poset {
        #[command(flatten)]
        monoid: MonoidArg,
        #[arg(long, value_enum, default_value = "omega-singular")]
        poset: PosetKind,
        #[arg(long)]
        e: Option<usize>,
    },
    /// Reduced homology of an order complex or nerve, with the group action.
    Homology {
        #[command(flatten)]
        monoid: MonoidArg,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_enum, default_value = "omega-singular")]
        poset: PosetKind,
        #[arg(long)]
        e: Option<usize>,
        #[arg(long, value_enum, default_value = "order")]
        complex: ComplexArg,
        /// Degree range `A..B`, inclusive.
        #[arg(long)]
        degrees: Option<String>,
        /// Group modules to pair against the homology: fixture names or files.
        #[arg(long = "W", value_delimiter = ',')]
        w: Vec<String>,
        #[command(flatten)]
        cap: CapArg,
    },
    /// `Ext^n_{KM}(V, Coind_e W)`, or `Ext^n(Ind_e W, V)` with `--method induced`.
    Ext {
        #[command(flatten)]
        monoid: MonoidArg,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_enum, default_value = "topological")]
        method: ExtMethod,
        /// `trivial`, `kG` (the trivial module of the units, zero on `S`), or a file.
        #[arg(long = "V", default_value = "trivial")]
        v: String,
        #[arg(long, default_value_t = 0)]
        e: usize,
        /// A fixture name (`trivial`, `sign`, `standard`, ...) or a file.
        #[arg(long = "W", default_value = "trivial")]
        w: String,
        #[arg(long, default_value = "0..2")]
        degrees: String,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Monoid cohomology `H^n(M, V)` from the bar resolution.
    Cohomology {
        #[command(flatten)]
        monoid: MonoidArg,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long = "V", default_value = "trivial")]
        v: String,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        #[command(flatten)]
        cap: CapArg,
    },
    /// `Tor_n(KX, KY)` from the two-sided bar complex.
    Tor {
        #[command(flatten)]
        monoid: MonoidArg,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_enum, default_value = "point")]
        x: MSetArg,
        #[arg(long, value_enum, default_value = "point")]
        y: MSetArg,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Homological epimorphism test for a monoid homomorphism.
    Homepi {
        #[command(flatten)]
        monoid: MonoidArg,
        #[command(flatten)]
        field: FieldArg,
        /// Target monoid; defaults to the top of a crossed product, or
        /// `M_n(F_q)` for `--phi linear`.
        #[arg(long)]
        target: Option<String>,
        /// JSON array (file or inline), `linear` for `Aff(n,q) -> M_n(F_q)`,
        /// or `projection` for a crossed product.
        #[arg(long)]
        phi: Option<String>,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Upper bound for the global dimension of a regular monoid algebra.
    GldimBound {
        #[command(flatten)]
        monoid: MonoidArg,
        #[command(flatten)]
        field: FieldArg,
    },
    /// The chain complex of `Δ(M/R)` resolving the trivial module.
    Resolution {
        #[command(flatten)]
        monoid: MonoidArg,
        #[command(flatten)]
        field: FieldArg,
        /// Also compute `Ext^n(K, V)` through the resolution.
        #[arg(long = "V")]
        v: Option<String>,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        #[arg(long)]
        no_verify: bool,
    },
    /// Simple modules as coinduced modules, one per irreducible of each `G_e`.
    Simples {
        #[command(flatten)]
        monoid: MonoidArg,
        #[command(flatten)]
        field: FieldArg,
    },
}

/// A loaded monoid with its point action, when known.
pub struct Loaded {
    pub monoid: Arc<FiniteMonoid>,
    pub points: Option<Vec<Vec<usize>>>,
    pub description: Value,
}

/// Reads a monoid argument: an existing file, inline JSON, or a name.
pub fn load_monoid(arg: &str) -> Result<Loaded> {
    let description = if Path::new(arg).is_file() {
        serde_json::from_str(&std::fs::read_to_string(arg)?)?
    } else if arg.trim_start().starts_with('{') {
        serde_json::from_str(arg)?
    } else {
        json!({"type": "named", "name": arg})
    };
    let (m, points) = monoid_with_points_from_json(&description)?;
    Ok(Loaded { monoid: Arc::new(m), points, description })
}

fn read_json(arg: &str) -> Result<Value> {
    if Path::new(arg).is_file() {
        Ok(serde_json::from_str(&std::fs::read_to_string(arg)?)?)
    } else {
        Ok(serde_json::from_str(arg)?)
    }
}

/// `A..B` (inclusive), both non-negative.
pub fn parse_degrees(s: &str) -> Result<RangeInclusive<usize>> {
    let (a, b) = s.split_once("..").ok_or_else(|| Error::Invalid(format!("degrees must look like A..B, got {s:?}")))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Invalid(format!("bad degree {t:?}")));
    let (a, b) = (parse(a)?, parse(b)?);
    if a > b {
        return invalid(format!("empty degree range {s:?}"));
    }
    Ok(a..=b)
}

fn positive_cap(cap: &CapArg, default: u128) -> Result<u128> {
    match cap.cap {
        Some(0) => invalid("--cap must be positive"),
        Some(c) => Ok(c),
        None => Ok(default),
    }
}

/// `trivial`, `kG`, or a representation file over `field`.
pub fn load_module(spec: &str, m: &Arc<FiniteMonoid>, field: Field) -> Result<MonRep> {
    match spec {
        "trivial" => Ok(MonRep::trivial(m.clone(), field)),
        "kG" | "kg" => {
            let data = ideal_data(m, m.identity());
            let w = GroupRep::trivial(Arc::new(data.group.clone()), field);
            coinduce(m.clone(), &data, &w)
        }
        path => MonRep::from_json(m.clone(), &read_json(path)?, Some(field)),
    }
}

/// The irreducibles available for `G_e`: symmetric groups acting on the
/// image of `e`, or cyclic groups.
fn group_irreps(loaded: &Loaded, e: usize, group: Arc<GroupTable>, field: Field) -> Result<Vec<(String, GroupRep)>> {
    if group.size() == 1 {
        return Ok(vec![("trivial".into(), GroupRep::trivial(group, field))]);
    }
    if let Some(perms) = symmetric_perms(loaded, e, &group) {
        return symmetric_irreps(group, field, &perms);
    }
    cyclic_irreps(group, field)
}

fn symmetric_perms(loaded: &Loaded, e: usize, group: &GroupTable) -> Option<Vec<Vec<usize>>> {
    let points = loaded.points.as_ref()?;
    let perms = moved_points(&perms_on_image(group, points, e));
    let k = perms.first().map_or(0, Vec::len);
    ((1..=k).product::<usize>() == group.size() && k <= 4).then_some(perms)
}

/// A `G_e`-module from a fixture name, a `{"fixture": name}` file, or a
/// representation file keyed by monoid elements.
pub fn load_group_module(spec: &str, loaded: &Loaded, e: usize, group: Arc<GroupTable>, field: Field) -> Result<GroupRep> {
    let by_name = |name: &str| {
        let perms = symmetric_perms(loaded, e, &group);
        named_irrep(name, group.clone(), field, perms.as_deref())
    };
    if !Path::new(spec).is_file() && !spec.trim_start().starts_with('{') {
        return by_name(spec);
    }
    let v = read_json(spec)?;
    match v.get("fixture").and_then(Value::as_str) {
        Some(name) => by_name(name),
        None => GroupRep::from_json(group.clone(), &v, Some(field)),
    }
}

fn ext_json(rep: &ExtReport) -> (Value, i32) {
    let mut v = rep.to_json();
    v["assumptions_checked"] = v["assumptions"].clone();
    if !rep.certified {
        v["dims"] = json!({});
        v["refused"] = json!("a rational rank could not be certified; rerun over a prime field or raise the cap");
        return (v, 1);
    }
    if let Some(dims) = v["dims"].as_object_mut() {
        dims.retain(|k, _| k.parse::<usize>().is_ok_and(|n| n <= rep.valid_through));
    }
    (v, 0)
}

fn e_for(kind: PosetKind, e: Option<usize>, m: &FiniteMonoid) -> Result<usize> {
    match (kind, e) {
        (PosetKind::OmegaSingular, _) => Ok(m.identity()),
        (PosetKind::OmegaIdeal, Some(e)) if e < m.size() && m.is_idempotent(e) => Ok(e),
        (PosetKind::OmegaIdeal, Some(e)) => invalid(format!("element {e} is not an idempotent")),
        (PosetKind::OmegaIdeal, None) => invalid("--poset omega-ideal needs --e"),
        (PosetKind::OmegaUniverse, _) => Ok(m.identity()),
    }
}

fn mset_for(kind: PosetKind, m: &FiniteMonoid, e: usize) -> Result<RightMSet> {
    match kind {
        PosetKind::OmegaUniverse => Ok(RightMSet::universe(m)),
        _ => RightMSet::from_right_ideal(m, &ideal_data(m, e).r_bad),
    }
}

fn cmd_poset(l: &Loaded, kind: PosetKind, e: Option<usize>) -> Result<(Value, i32)> {
    let m = &l.monoid;
    let e = e_for(kind, e, m)?;
    let x = mset_for(kind, m, e)?;
    let omega = omega_poset(&x);
    let sets: Vec<Vec<usize>> = omega.sets.iter().map(|s| s.ones().collect()).collect();
    let v = json!({
        "poset": omega.poset.to_json(),
        "generators": omega.generators,
        "sets": sets,
        "order_complex_dim": order_complex(&omega.poset).dim(),
        "assumptions_checked": {"e": e, "mset_size": x.size()},
    });
    Ok((v, 0))
}

#[allow(clippy::too_many_arguments)]
fn cmd_homology(
    l: &Loaded,
    field: Field,
    kind: PosetKind,
    e: Option<usize>,
    complex: ComplexArg,
    degrees: Option<&str>,
    ws: &[String],
    cap: u128,
) -> Result<(Value, i32)> {
    let m = &l.monoid;
    let e = e_for(kind, e, m)?;
    let x = mset_for(kind, m, e)?;
    let omega = omega_poset(&x);
    let top = match complex {
        ComplexArg::Order => order_complex(&omega.poset).dim().max(0) as usize,
        ComplexArg::Nerve => 2,
    };
    let degrees = match degrees {
        Some(d) => parse_degrees(d)?,
        None => 0..=top,
    };
    let range = *degrees.start() as i64..=*degrees.end() as i64;
    if let PosetKind::OmegaUniverse = kind {
        if let ComplexArg::Nerve = complex {
            return invalid("the universe poset is only available as an order complex");
        }
        let chains = chain_complex(&order_complex(&omega.poset), None, true)?;
        let h = homology(&chains.complex, field, range)?;
        if !h.certified {
            return Ok((json!({"refused": "uncertified rational rank", "assumptions_checked": {"poset": "omega_universe"}}), 1));
        }
        let dims: BTreeMap<String, usize> = h.dims.iter().map(|(d, v)| (d.to_string(), *v)).collect();
        return Ok((json!({"reduced_dims": dims, "field": field.to_string(), "assumptions_checked": {"poset": "omega_universe"}}), 0));
    }
    let data = ideal_data(m, e);
    let group = Arc::new(data.group.clone());
    let ck = match complex {
        ComplexArg::Order => ComplexKind::OrderComplex,
        ComplexArg::Nerve => ComplexKind::Nerve,
    };
    let h = reduced_homology_of_ideal(m, &data, group.clone(), range, field, ck, cap)?;
    let dims: BTreeMap<String, usize> = h.reps.iter().map(|(d, r)| (d.to_string(), r.dim)).collect();
    let mut pairings = BTreeMap::new();
    for w in ws {
        let wr = load_group_module(w, l, e, group.clone(), field)?;
        let mut per = BTreeMap::new();
        for (d, r) in &h.reps {
            let dim = if r.dim == 0 { 0 } else { equivariant_hom(r, &wr)?.dim };
            per.insert(d.to_string(), dim);
        }
        pairings.insert(w.clone(), per);
    }
    let flags = structural_flags(m);
    let v = json!({
        "reduced_dims": dims,
        "hom_dims": pairings,
        "field": field.to_string(),
        "complex": ck.as_str(),
        "valid_through": if h.valid_through == i64::MAX { Value::Null } else { json!(h.valid_through) },
        "assumptions_checked": {
            "e": e,
            "group_order": group.size(),
            "right_pp": flags.right_pp,
            "poset_size": omega.poset.size(),
        },
    });
    Ok((v, 0))
}

#[allow(clippy::too_many_arguments)]
fn cmd_ext(l: &Loaded, field: Field, method: ExtMethod, v: &str, e: usize, w: &str, degrees: &str, cap: &CapArg) -> Result<(Value, i32)> {
    let m = &l.monoid;
    if e >= m.size() || !m.is_idempotent(e) {
        return invalid(format!("element {e} is not an idempotent"));
    }
    let degrees = parse_degrees(degrees)?;
    let vm = load_module(v, m, field)?;
    let group = Arc::new(ideal_data(m, e).group);
    let wr = load_group_module(w, l, e, group, field)?;
    let rep = match method {
        ExtMethod::Topological => ext_topological(&vm, e, &wr, degrees, positive_cap(cap, DEFAULT_CAP)?)?,
        ExtMethod::Induced => ext_from_induced(&vm, e, &wr, degrees, positive_cap(cap, DEFAULT_CAP)?)?,
        ExtMethod::Ext1 => ext1_fast(&vm, e, &wr)?,
        ExtMethod::Oracle => {
            let target = coinduce(m.clone(), &ideal_data(m, e), &wr)?;
            let mut r = ext_oracle(&vm, &target, *degrees.end(), positive_cap(cap, DEFAULT_COCHAIN_CAP)?)?;
            r.dims.retain(|n, _| degrees.contains(n));
            r.assumptions.insert("e".into(), json!(e));
            r.assumptions.insert("target".into(), json!("Coind_e(W)"));
            r
        }
    };
    Ok(ext_json(&rep))
}

fn affine_params(desc: &Value) -> Option<(usize, usize)> {
    let num = |k: &str| desc.get(k).and_then(Value::as_u64).map(|x| x as usize);
    match desc.get("type").and_then(Value::as_str) {
        Some("affine") => Some((num("n")?, num("q")?)),
        Some("named") => {
            let name = desc.get("name")?.as_str()?.to_ascii_lowercase();
            let (a, b) = name.strip_prefix("aff(")?.strip_suffix(')')?.split_once(',')?;
            Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
        }
        _ => None,
    }
}

fn cmd_homepi(l: &Loaded, field: Field, target: Option<&str>, phi: Option<&str>, d: usize, cap: u128) -> Result<(Value, i32)> {
    let m = &l.monoid;
    let mut predicted = None;
    let (n, map, how): (FiniteMonoid, Vec<usize>, &str) = match (crossed_system_from_json(&l.description)?, phi) {
        (Some(sys), None | Some("projection")) => {
            let prod = sys.build()?;
            predicted = Some(crossed_product_prediction(&sys.base, prod.top_size, d, field, cap)?);
            (sys.top.clone(), prod.projection(), "crossed_product_projection")
        }
        (_, Some("linear")) => {
            let (nn, q) = affine_params(&l.description).ok_or_else(|| Error::Invalid("--phi linear needs an Aff(n,q) monoid".into()))?;
            let mm = matrix_monoid(nn, q)?;
            let phi = affine_monoid(nn, q)?.linear_part(&mm)?;
            if let Some(t) = target {
                if *load_monoid(t)?.monoid != mm.monoid {
                    return invalid("--target must be M_n(F_q) for --phi linear");
                }
            }
            (mm.monoid, phi, "linear_part")
        }
        (_, Some(p)) => {
            let t = target.ok_or_else(|| Error::Invalid("--phi needs --target".into()))?;
            let phi: Vec<usize> = serde_json::from_value(read_json(p)?)?;
            ((*load_monoid(t)?.monoid).clone(), phi, "given")
        }
        (None, None) => return invalid("homepi needs --phi unless the monoid is a crossed product"),
    };
    let mut verdict = homological_epi_check(m, &n, &map, d, field, cap)?;
    verdict.predicted = predicted;
    if !verdict.certified {
        return Ok((json!({"refused": "uncertified rational rank", "assumptions_checked": {"phi": how}}), 1));
    }
    let mut v = serde_json::to_value(&verdict)?;
    v["field"] = json!(field.to_string());
    v["assumptions_checked"] = json!({"phi": how, "homomorphism": true, "source_size": m.size(), "target_size": n.size()});
    Ok((v, 0))
}

fn cmd_sandwich(l: &Loaded, field: Field, only: Option<usize>) -> Result<(Value, i32)> {
    let m = &l.monoid;
    let green = green_structure(m);
    let mut out = Vec::new();
    for j in 0..green.j_classes.len() {
        if only.is_some_and(|o| o != j) || green.idempotent_of(j).is_none() {
            continue;
        }
        let s = sandwich_matrix(m, &green, j)?;
        let group = maximal_subgroup(m, s.idempotent);
        let q = group_algebra_right_inverse(&s.entries, &group, field)?;
        let mut v = serde_json::to_value(&s)?;
        v["group_order"] = json!(group.size());
        v["characteristic_good"] = json!(field.is_good_for(group.size()));
        v["right_invertible"] = json!(q.is_some());
        v["right_inverse"] = q.as_ref().map_or(Value::Null, |q| q.to_json());
        out.push(v);
    }
    if let Some(o) = only {
        if out.is_empty() {
            return invalid(format!("J-class {o} does not exist or is not regular"));
        }
    }
    Ok((json!({"field": field.to_string(), "sandwich": out, "assumptions_checked": {"regular_j_classes": out.len()}}), 0))
}

fn cmd_simples(l: &Loaded, field: Field) -> Result<(Value, i32)> {
    let m = &l.monoid;
    let green = green_structure(m);
    let mut irreps = Vec::new();
    for j in 0..green.j_classes.len() {
        if let Some(e) = green.idempotent_of(j) {
            let group = Arc::new(ideal_data(m, e).group);
            irreps.push((e, group_irreps(l, e, group, field)?));
        }
    }
    let simples = simple_modules_coind(m.clone(), field, &irreps)?;
    let mut list = Vec::new();
    for s in &simples {
        list.push(json!({
            "apex": s.apex,
            "idempotent": s.idempotent,
            "name": s.name,
            "dim": s.module.dim,
            "end_dim": monoid_hom(&s.module, &s.module)?.dim,
        }));
    }
    let v = json!({
        "field": field.to_string(),
        "simples": list,
        "assumptions_checked": {"gldim_hypotheses": true, "irreducibles_from": "fixtures"},
    });
    Ok((v, 0))
}

fn cmd_resolution(l: &Loaded, field: Field, v: Option<&str>, max_degree: usize, verify: bool) -> Result<(Value, i32)> {
    let res = standard_resolution(l.monoid.clone(), field, verify)?;
    let mut out = serde_json::to_value(&res.report)?;
    out["assumptions_checked"] = json!({"hypotheses_hold": res.report.hypotheses_hold, "verified": res.report.verified});
    if let Some(spec) = v {
        let target = load_module(spec, &l.monoid, field)?;
        let (ext, code) = ext_json(&ext_via_resolution(&res, &target, max_degree)?);
        out["ext"] = ext;
        if code != 0 {
            return Ok((out, code));
        }
    }
    if !res.report.certified {
        return Ok((json!({"refused": "uncertified rational rank", "assumptions_checked": out["assumptions_checked"]}), 1));
    }
    let code = if verify && !res.report.verified { 1 } else { 0 };
    Ok((out, code))
}

/// Runs one subcommand, returning the report and exit status.
pub fn dispatch(cmd: &Command) -> Result<(Value, i32)> {
    let field_of = |f: &FieldArg| f.field.parse::<Field>();
    let (mut v, code) = match cmd {
        Command::Build { monoid } => {
            let l = load_monoid(&monoid.monoid)?;
            let mut v = l.monoid.to_json();
            if let Some(p) = &l.points {
                v["points"] = json!(p);
            }
            v["assumptions_checked"] = json!({"associative": true, "identity_index": 0});
            (v, 0)
        }
        Command::Green { monoid } => {
            let l = load_monoid(&monoid.monoid)?;
            let g = green_structure(&l.monoid);
            let mut v = serde_json::to_value(&g)?;
            v["principal_series"] = serde_json::to_value(principal_series(&g))?;
            v["longest_j_chain"] = json!(g.longest_j_chain());
            v["assumptions_checked"] = json!({"size": l.monoid.size()});
            (v, 0)
        }
        Command::Flags { monoid } => {
            let l = load_monoid(&monoid.monoid)?;
            let mut v = serde_json::to_value(structural_flags(&l.monoid))?;
            v["is_group"] = json!(l.monoid.is_group());
            v["idempotents"] = json!(l.monoid.idempotents().len());
            v["assumptions_checked"] = json!({"size": l.monoid.size()});
            (v, 0)
        }
        Command::Sandwich { monoid, field, j } => cmd_sandwich(&load_monoid(&monoid.monoid)?, field_of(field)?, *j)?,
        Command::Gcompletion { monoid } => {
            let l = load_monoid(&monoid.monoid)?;
            let gc = group_completion(&l.monoid);
            let v = json!({
                "e": gc.e,
                "local_group": gc.local_group.to_json(),
                "kernel": gc.kernel,
                "group": gc.group.to_json(),
                "psi": gc.psi,
                "assumptions_checked": {"psi_is_homomorphism": gc.check(&l.monoid)},
            });
            (v, 0)
        }
        Command::Poset { monoid, poset, e } => cmd_poset(&load_monoid(&monoid.monoid)?, *poset, *e)?,
        Command::Homology { monoid, field, poset, e, complex, degrees, w, cap } => cmd_homology(
            &load_monoid(&monoid.monoid)?,
            field_of(field)?,
            *poset,
            *e,
            *complex,
            degrees.as_deref(),
            w,
            positive_cap(cap, DEFAULT_CAP)?,
        )?,
        Command::Ext { monoid, field, method, v, e, w, degrees, cap } => {
            cmd_ext(&load_monoid(&monoid.monoid)?, field_of(field)?, *method, v, *e, w, degrees, cap)?
        }
        Command::Cohomology { monoid, field, v, max_degree, cap } => {
            let l = load_monoid(&monoid.monoid)?;
            let vm = load_module(v, &l.monoid, field_of(field)?)?;
            ext_json(&monoid_cohomology(&vm, *max_degree, positive_cap(cap, DEFAULT_COCHAIN_CAP)?)?)
        }
        Command::Tor { monoid, field, x, y, max_degree, cap } => {
            let l = load_monoid(&monoid.monoid)?;
            let m = &l.monoid;
            let xs = match x {
                MSetArg::Universe => RightMSet::universe(m),
                MSetArg::Point => RightMSet::single_point(m),
            };
            let ys = match y {
                MSetArg::Universe => LeftMSet::universe(m),
                MSetArg::Point => LeftMSet::single_point(m),
            };
            let field = field_of(field)?;
            let t = tor_bar(m, &xs, &ys, *max_degree, field, positive_cap(cap, DEFAULT_CAP)?)?;
            if t.certified {
                let mut v = serde_json::to_value(&t)?;
                v["assumptions_checked"] = json!({"x_size": xs.size(), "y_size": ys.size()});
                (v, 0)
            } else {
                (json!({"refused": "uncertified rational rank", "assumptions_checked": {}}), 1)
            }
        }
        Command::Homepi { monoid, field, target, phi, max_degree, cap } => cmd_homepi(
            &load_monoid(&monoid.monoid)?,
            field_of(field)?,
            target.as_deref(),
            phi.as_deref(),
            *max_degree,
            positive_cap(cap, DEFAULT_CAP)?,
        )?,
        Command::GldimBound { monoid, field } => {
            let l = load_monoid(&monoid.monoid)?;
            let b = global_dimension_bound(&l.monoid, field_of(field)?)?;
            let mut v = b.to_json();
            v["assumptions_checked"] = json!({"regular": b.regular, "failures": b.failures});
            (v, if b.applicable { 0 } else { 2 })
        }
        Command::Resolution { monoid, field, v, max_degree, no_verify } => {
            cmd_resolution(&load_monoid(&monoid.monoid)?, field_of(field)?, v.as_deref(), *max_degree, !*no_verify)?
        }
        Command::Simples { monoid, field } => cmd_simples(&load_monoid(&monoid.monoid)?, field_of(field)?)?,
    };
    v["tool_version"] = json!(VERSION);
    Ok((v, code))
}

/// Error report with a machine-readable code.
pub fn error_report(err: &Error) -> Value {
    json!({
        "error": {"code": err.code(), "message": err.to_string()},
        "assumptions_checked": {},
        "tool_version": VERSION,
    })
}

/// Entry point for the binary: parses arguments, sizes the thread pool
/// from `MONOEXT_THREADS`, runs, writes the report and returns the status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(n) = std::env::var("MONOEXT_THREADS").ok().and_then(|s| s.parse::<usize>().ok()).filter(|&n| n > 0) {
        // Fails only if a pool already exists, in which case it is kept.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let (report, code) = match dispatch(&cli.command) {
        Ok(r) => r,
        Err(e) => (error_report(&e), e.exit_code()),
    };
    let text = serde_json::to_string_pretty(&report).expect("reports serialize") + "\n";
    match &cli.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, text) {
                eprintln!("cannot write {}: {e}", p.display());
                return 1;
            }
        }
        None => print!("{text}"),
    }
    code
}
