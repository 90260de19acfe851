//! Parameterized families of germs: a built-in catalog, exact specialization
//! at rational points, and scans for jumps of the invariants.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Dimension;
use crate::modular::modular_tangent_space;
use crate::poly::{parse_in_ring, Coefficient, Monomial, Polynomial};
use crate::singularity::{find_weights, icis_tjurina, milnor_number, tjurina_number, GermInput};

/// A family of germs: templates over ring variables and named parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    pub description: String,
    variables: Arc<[String]>,
    parameters: Vec<String>,
    /// One template for hypersurfaces, several for complete intersections,
    /// each over `variables ++ parameters`.
    templates: Vec<Polynomial>,
    defaults: BTreeMap<String, Coefficient>,
}

impl FamilySpec {
    pub fn new(
        name: impl Into<String>,
        description: impl Into<String>,
        variables: &[&str],
        parameters: &[&str],
        templates: &[&str],
    ) -> Result<Self> {
        if let Some(clash) = parameters.iter().find(|p| variables.contains(p)) {
            return Err(Error::InvalidFamily(format!(
                "`{clash}` is both a variable and a parameter"
            )));
        }
        if templates.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let all: Arc<[String]> = variables
            .iter()
            .chain(parameters)
            .map(|s| s.to_string())
            .collect();
        let templates = templates
            .iter()
            .map(|t| parse_in_ring(t, all.clone()))
            .collect::<Result<_>>()?;
        Ok(FamilySpec {
            name: name.into(),
            description: description.into(),
            variables: variables.iter().map(|s| s.to_string()).collect(),
            parameters: parameters.iter().map(|s| s.to_string()).collect(),
            templates,
            defaults: BTreeMap::new(),
        })
    }

    pub fn with_default(mut self, parameter: &str, value: Coefficient) -> Self {
        self.defaults.insert(parameter.to_string(), value);
        self
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn templates(&self) -> &[Polynomial] {
        &self.templates
    }

    pub fn defaults(&self) -> &BTreeMap<String, Coefficient> {
        &self.defaults
    }

    pub fn is_complete_intersection(&self) -> bool {
        self.templates.len() > 1
    }
}

/// Parse a catalog name: `tpqr(p,q,r)` / `tpqr:p,q,r`, `example6`,
/// `example7-martin`, `example8-icis`, `example9-y642`.
pub fn catalog(name: &str) -> Result<FamilySpec> {
    let unknown = || Error::UnknownFamily(name.to_string());
    let xyz = ["x", "y", "z"];
    if let Some(args) = name
        .strip_prefix("tpqr:")
        .or_else(|| name.strip_prefix("tpqr(").and_then(|s| s.strip_suffix(')')))
    {
        let exps: Vec<u32> = args
            .split(',')
            .map(|s| s.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| unknown())?;
        let [p, q, r] = exps[..] else {
            return Err(unknown());
        };
        if p < 2 || q < 2 || r < 2 {
            return Err(unknown());
        }
        return FamilySpec::new(
            format!("tpqr:{p},{q},{r}"),
            format!("T_{{{p},{q},{r}}}(lambda) = x^{p} + y^{q} + z^{r} + lambda*x*y*z"),
            &xyz,
            &["lambda"],
            &[&format!("x^{p} + y^{q} + z^{r} + lambda*x*y*z")],
        );
    }
    match name {
        "example6" => Ok(FamilySpec::new(
            "example6",
            "deformation of T_{4,3,3}; the fixed coefficient mu defaults to 1",
            &xyz,
            &["mu", "r", "s1", "s2", "t1", "t2"],
            &["x^4 + y^3 + z^3 + mu*x*y*z + r*x^3 + s1*y + s2*y^2 + t1*z + t2*z^2"],
        )?
        .with_default("mu", Coefficient::from_integer(1.into()))),
        "example7-martin" => FamilySpec::new(
            "example7-martin",
            "plane quartics x^4 - x^2*y^2 + t*y^4 + y^5 with unfolding s1..s6; lambda = 2*sqrt(t)",
            &["x", "y"],
            &["s1", "s2", "s3", "s4", "s5", "s6", "t"],
            &["x^4 - x^2*y^2 + s1*x + s2*y + s3*x*y + s4*y^2 + s5*y^3 + s6*x*y^2 + t*y^4 + y^5"],
        ),
        "example8-icis" => FamilySpec::new(
            "example8-icis",
            "complete intersection curves x^4 + y^4 + 2*z^2 = s*z - x*y = 0",
            &xyz,
            &["s"],
            &["x^4 + y^4 + 2*z^2", "s*z - x*y"],
        ),
        "example9-y642" => FamilySpec::new(
            "example9-y642",
            "modular deformation of Y_{6,4,2}",
            &xyz,
            &["r", "s", "t", "v"],
            &["x^6 + y^4 + z^2 + x*y*z + r*x^4 + s*x^5 + t*y^3 + v*z"],
        ),
        _ => Err(unknown()),
    }
}

/// Names accepted by [`catalog`] (with a sample `tpqr`).
pub const CATALOG_NAMES: [&str; 5] = [
    "tpqr:p,q,r",
    "example6",
    "example7-martin",
    "example8-icis",
    "example9-y642",
];

/// An assignment of rational values to parameters, in parameter order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterPoint(pub Vec<(String, Coefficient)>);

impl ParameterPoint {
    pub fn get(&self, name: &str) -> Option<&Coefficient> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

impl fmt::Display for ParameterPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (n, v)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}={v}")?;
        }
        Ok(())
    }
}

impl Serialize for ParameterPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (n, v) in &self.0 {
            map.serialize_entry(n, &v.to_string())?;
        }
        map.end()
    }
}

/// Resolve a point against the family: every parameter assigned (defaults
/// fill gaps), no unknown names. Result is in parameter order.
pub fn resolve_point(spec: &FamilySpec, point: &BTreeMap<String, Coefficient>) -> Result<ParameterPoint> {
    if let Some(extra) = point.keys().find(|k| !spec.parameters.contains(k)) {
        return Err(Error::InvalidFamily(format!(
            "`{extra}` is not a parameter of {}",
            spec.name
        )));
    }
    spec.parameters
        .iter()
        .map(|p| {
            point
                .get(p)
                .or_else(|| spec.defaults.get(p))
                .cloned()
                .map(|v| (p.clone(), v))
                .ok_or_else(|| Error::MissingParameter(p.clone()))
        })
        .collect::<Result<_>>()
        .map(ParameterPoint)
}

/// Specialize the family at `point` with exact substitution.
pub fn evaluate(spec: &FamilySpec, point: &BTreeMap<String, Coefficient>) -> Result<GermInput> {
    let resolved = resolve_point(spec, point)?;
    evaluate_resolved(spec, &resolved)
}

fn evaluate_resolved(spec: &FamilySpec, point: &ParameterPoint) -> Result<GermInput> {
    let n = spec.variables.len();
    let values: Vec<&Coefficient> = point.0.iter().map(|(_, v)| v).collect();
    let equations = spec
        .templates
        .iter()
        .map(|t| {
            let terms = t.terms().map(|(m, c)| {
                let e = m.exponents();
                let coeff = e[n..]
                    .iter()
                    .zip(&values)
                    .fold(c.clone(), |acc, (&k, v)| acc * v.pow(k as i32));
                (Monomial::new(e[..n].to_vec()), coeff)
            });
            Polynomial::from_terms(spec.variables.clone(), terms)
        })
        .collect();
    GermInput::new(equations)
}

/// Invariants of one fiber. Fields are absent when not applicable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub point: ParameterPoint,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equations: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub milnor: Option<Dimension>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tjurina: Option<Dimension>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modular_dimension: Option<usize>,
    pub weights_found: bool,
    pub non_isolated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub family: String,
    pub description: String,
    /// Parameters filled from family defaults.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub defaults_used: Vec<String>,
    pub rows: Vec<ScanRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modal_tjurina: Option<usize>,
    /// Indices into `rows` where `τ` differs from the modal value.
    pub jump_points: Vec<usize>,
}

impl ScanReport {
    pub fn jump_rows(&self) -> impl Iterator<Item = &ScanRow> {
        self.jump_points.iter().map(|&i| &self.rows[i])
    }
}

/// Compute invariants at each point, in request order.
///
/// Fibers that are non-isolated are flagged rather than failing; evaluation
/// errors are recorded per row.
pub fn scan(spec: &FamilySpec, points: &[BTreeMap<String, Coefficient>]) -> Result<ScanReport> {
    if points.is_empty() {
        return Err(Error::Precondition("no sample points".into()));
    }
    let rows: Vec<ScanRow> = points.par_iter().map(|p| scan_point(spec, p)).collect();
    let defaults_used = spec
        .defaults
        .keys()
        .filter(|k| points.iter().any(|p| !p.contains_key(*k)))
        .cloned()
        .collect();
    let modal = modal_tjurina(&rows);
    let jump_points = match modal {
        Some(m) => rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.tjurina.is_some_and(|t| t != Dimension::Finite(m)))
            .map(|(i, _)| i)
            .collect(),
        None => Vec::new(),
    };
    Ok(ScanReport {
        family: spec.name.clone(),
        description: spec.description.clone(),
        defaults_used,
        rows,
        modal_tjurina: modal,
        jump_points,
    })
}

/// Most frequent finite `τ`, ties broken by the smaller value.
fn modal_tjurina(rows: &[ScanRow]) -> Option<usize> {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for t in rows.iter().filter_map(|r| r.tjurina.and_then(Dimension::finite)) {
        *counts.entry(t).or_default() += 1;
    }
    counts
        .into_iter()
        .max_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)))
        .map(|(t, _)| t)
}

fn scan_point(spec: &FamilySpec, point: &BTreeMap<String, Coefficient>) -> ScanRow {
    let mut row = ScanRow {
        point: ParameterPoint(Vec::new()),
        equations: None,
        milnor: None,
        tjurina: None,
        modular_dimension: None,
        weights_found: false,
        non_isolated: false,
        error: None,
    };
    let resolved = match resolve_point(spec, point) {
        Ok(p) => p,
        Err(e) => {
            row.point = ParameterPoint(
                point.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
            );
            row.error = Some(e.to_string());
            return row;
        }
    };
    row.point = resolved.clone();
    let germ = match evaluate_resolved(spec, &resolved) {
        Ok(g) => g,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    row.equations = Some(germ.equations().iter().map(ToString::to_string).collect());
    if let Err(e) = fill_invariants(&germ, &mut row) {
        row.error = Some(e.to_string());
    }
    row
}

fn fill_invariants(germ: &GermInput, row: &mut ScanRow) -> Result<()> {
    if !germ.is_hypersurface() {
        let tau = icis_tjurina(germ)?;
        row.tjurina = Some(tau);
        row.non_isolated = tau.is_infinite();
        return Ok(());
    }
    let f = &germ.equations()[0];
    let mu = milnor_number(f)?;
    let tau = tjurina_number(f)?;
    row.milnor = Some(mu);
    row.tjurina = Some(tau);
    row.weights_found = find_weights(f).is_some();
    row.non_isolated = tau.is_infinite();
    if !row.non_isolated {
        row.modular_dimension = Some(modular_tangent_space(f)?.dimension);
    }
    Ok(())
}

/// Convenience: one-parameter points `name = v` for each value.
pub fn line(name: &str, values: &[Coefficient]) -> Vec<BTreeMap<String, Coefficient>> {
    values
        .iter()
        .map(|v| BTreeMap::from([(name.to_string(), v.clone())]))
        .collect()
}

/// Assign zero to each listed parameter in every point (keeps existing
/// assignments).
pub fn with_zeros(points: &mut [BTreeMap<String, Coefficient>], names: &[String]) {
    for p in points {
        for n in names {
            p.entry(n.clone()).or_insert_with(Coefficient::zero);
        }
    }
}
