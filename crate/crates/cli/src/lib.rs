//! Reports and command implementations behind the `modstrat` binary.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use modstrat::family::{catalog, scan, ScanReport};
use modstrat::groebner::Dimension;
use modstrat::modular::{
    embedding_check, modular_tangent_space, projective_formula, projective_t1_dimension,
};
use modstrat::oracle::{milnor_oracle, tjurina_oracle};
use modstrat::singularity::{find_weights, graded_piece, milnor_number, tjurina};
use modstrat::{parse_poly, Coefficient, Error, Monomial, Polynomial};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_USER: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;

/// A failed command: message for standard error plus exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn user(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USER,
            message: message.into(),
        }
    }

    fn from_core(e: Error, input: Option<&str>) -> Self {
        let code = if matches!(e, Error::NonIsolated) {
            EXIT_DEGENERATE
        } else {
            EXIT_USER
        };
        let pos = match &e {
            Error::Syntax { pos, .. } | Error::UnknownIdentifier { pos, .. } | Error::BadExponent { pos } => {
                Some(*pos)
            }
            _ => None,
        };
        let mut message = e.to_string();
        if let (Some(pos), Some(text)) = (pos, input) {
            let _ = write!(message, "\n  {text}\n  {}^", " ".repeat(pos));
        }
        Failure { code, message }
    }
}

/// Command output: rendered text plus exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Table,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected table or json)")),
        }
    }
}

fn split_vars(vars: &str) -> Result<Vec<String>, Failure> {
    let out: Vec<String> = vars.split(',').map(|v| v.trim().to_string()).collect();
    if out.iter().any(|v| v.is_empty() || !v.chars().all(|c| c.is_alphanumeric() || c == '_')) {
        return Err(Failure::user(format!("invalid variable list `{vars}`")));
    }
    for (i, v) in out.iter().enumerate() {
        if out[..i].contains(v) {
            return Err(Failure::user(format!("variable `{v}` listed twice")));
        }
    }
    Ok(out)
}

/// Parse `text` over `vars`, defaulting to `x,y,z`.
pub fn read_poly(text: &str, vars: Option<&str>) -> Result<Polynomial, Failure> {
    let names = split_vars(vars.unwrap_or("x,y,z"))?;
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    parse_poly(text, &refs).map_err(|e| {
        let hint = matches!(e, Error::UnknownIdentifier { .. }) && vars.is_none();
        let mut f = Failure::from_core(e, Some(text));
        if hint {
            f.message.push_str("\n  (variables default to x,y,z; pass --vars)");
        }
        f
    })
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn vector_text(v: &[Coefficient]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

// ---------------------------------------------------------------- invariants

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisMonomial {
    pub monomial: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularReport {
    pub dimension: usize,
    /// Rational vectors over `t1_basis`.
    pub kernel_basis: Vec<Vec<String>>,
    /// The same vectors written as polynomials in the basis monomials.
    pub kernel_classes: Vec<String>,
    pub untwisted_dimension: usize,
    pub convention_sensitive: bool,
    pub generator_count: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub non_isolated: bool,
    pub not_quasi_homogeneous: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub report: String,
    pub input: String,
    pub polynomial: String,
    pub variables: Vec<String>,
    pub milnor: Dimension,
    pub tjurina: Dimension,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t1_basis: Option<Vec<BasisMonomial>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modular_tangent: Option<ModularReport>,
    pub flags: Flags,
}

pub fn invariants_report(text: &str, vars: Option<&str>) -> Result<InvariantReport, Failure> {
    let f = read_poly(text, vars)?;
    let fail = |e| Failure::from_core(e, Some(text));
    let mu = milnor_number(&f).map_err(fail)?;
    let t1 = tjurina(&f).map_err(fail)?;
    let weights = find_weights(&f);
    let names = f.vars().to_vec();
    let mut report = InvariantReport {
        report: "invariants".into(),
        input: text.to_string(),
        polynomial: f.to_string(),
        variables: names.clone(),
        milnor: mu,
        tjurina: t1.tau,
        weights: weights.as_ref().map(|w| w.weights.clone()),
        weight_degree: weights.as_ref().map(|w| w.degree),
        t1_basis: None,
        modular_tangent: None,
        flags: Flags {
            non_isolated: t1.tau.is_infinite(),
            not_quasi_homogeneous: weights.is_none(),
        },
    };
    if t1.tau.is_infinite() {
        return Ok(report);
    }
    report.t1_basis = Some(
        t1.basis
            .iter()
            .enumerate()
            .map(|(i, m)| BasisMonomial {
                monomial: m.display_with(&names).to_string(),
                weight: t1.weights.as_ref().map(|w| w[i]),
            })
            .collect(),
    );
    let m = modular_tangent_space(&f).map_err(fail)?;
    report.modular_tangent = Some(ModularReport {
        dimension: m.dimension,
        kernel_classes: m
            .kernel_basis
            .iter()
            .map(|v| class_text(&f, &t1.basis, v))
            .collect(),
        kernel_basis: m.kernel_basis.iter().map(|v| vector_text(v)).collect(),
        untwisted_dimension: m.untwisted_dimension,
        convention_sensitive: m.convention_sensitive(),
        generator_count: m.generator_count,
    });
    Ok(report)
}

fn class_text(f: &Polynomial, basis: &[Monomial], v: &[Coefficient]) -> String {
    let p = Polynomial::from_terms(
        f.vars().clone(),
        basis
            .iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone())),
    );
    p.to_string()
}

pub fn render_invariants(r: &InvariantReport) -> String {
    let mut rows: Vec<(&str, String)> = vec![
        ("input", r.polynomial.clone()),
        ("variables", r.variables.join(", ")),
        ("milnor", r.milnor.to_string()),
        ("tjurina", r.tjurina.to_string()),
    ];
    match (&r.weights, r.weight_degree) {
        (Some(w), Some(d)) => rows.push(("weights", format!("{w:?}, d = {d}"))),
        _ => rows.push(("weights", "none (not quasi-homogeneous)".into())),
    }
    if let Some(basis) = &r.t1_basis {
        let items: Vec<String> = basis
            .iter()
            .map(|b| match b.weight {
                Some(w) => format!("{} [{w}]", b.monomial),
                None => b.monomial.clone(),
            })
            .collect();
        rows.push(("t1 basis", items.join(", ")));
    }
    if let Some(m) = &r.modular_tangent {
        rows.push((
            "modular dim",
            format!("{} (untwisted {})", m.dimension, m.untwisted_dimension),
        ));
        if !m.kernel_classes.is_empty() {
            rows.push(("kernel", m.kernel_classes.join("; ")));
        }
    }
    let mut flags = Vec::new();
    if r.flags.non_isolated {
        flags.push("non-isolated");
    }
    if r.flags.not_quasi_homogeneous {
        flags.push("not quasi-homogeneous");
    }
    if r.modular_tangent.as_ref().is_some_and(|m| m.convention_sensitive) {
        flags.push("convention-sensitive");
    }
    rows.push(("flags", if flags.is_empty() { "-".into() } else { flags.join(", ") }));
    table(&rows)
}

fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

pub fn cmd_invariants(text: &str, vars: Option<&str>, format: Format) -> Result<Output, Failure> {
    let r = invariants_report(text, vars)?;
    let code = if r.flags.non_isolated { EXIT_DEGENERATE } else { EXIT_OK };
    let text = match format {
        Format::Json => json(&r),
        Format::Table => render_invariants(&r),
    };
    Ok(Output { text, code })
}

// ---------------------------------------------------------------------- scan

#[derive(Clone, Debug, Serialize)]
pub struct ScanOutput {
    pub report: &'static str,
    #[serde(flatten)]
    pub scan: ScanReport,
}

pub fn parse_rational(s: &str) -> Result<Coefficient, Failure> {
    let t = s.trim();
    let bad = || Failure::user(format!("`{s}` is not an exact rational"));
    if let Some((_, d)) = t.split_once('/') {
        if d.trim().chars().all(|c| c == '0') {
            return Err(bad());
        }
    }
    Coefficient::from_str(t).map_err(|_| bad())
}

/// `name=v1,v2,...`.
pub fn parse_param(arg: &str) -> Result<(String, Vec<Coefficient>), Failure> {
    let (name, values) = arg
        .split_once('=')
        .ok_or_else(|| Failure::user(format!("expected name=v1,v2,... in `{arg}`")))?;
    let values = values
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()?;
    Ok((name.trim().to_string(), values))
}

/// `s1..s6` or `a,b,c`.
pub fn expand_names(arg: &str) -> Result<Vec<String>, Failure> {
    let mut out = Vec::new();
    for part in arg.split(',') {
        let part = part.trim();
        if let Some((lo, hi)) = part.split_once("..") {
            let split = |s: &str| {
                let digits = s.len() - s.trim_start_matches(|c: char| !c.is_ascii_digit()).len();
                let (stem, num) = s.split_at(digits);
                num.parse::<u32>().ok().map(|n| (stem.to_string(), n))
            };
            match (split(lo), split(hi)) {
                (Some((a, i)), Some((b, j))) if a == b && i <= j => {
                    out.extend((i..=j).map(|k| format!("{a}{k}")));
                }
                _ => return Err(Failure::user(format!("bad name range `{part}`"))),
            }
        } else if !part.is_empty() {
            out.push(part.to_string());
        }
    }
    Ok(out)
}

/// Cartesian grid of `params` (first varies slowest) with `zeros` filled in.
pub fn build_grid(
    params: &[(String, Vec<Coefficient>)],
    zeros: &[String],
) -> Result<Vec<BTreeMap<String, Coefficient>>, Failure> {
    let mut grid = vec![BTreeMap::new()];
    for (name, values) in params {
        if grid[0].contains_key(name) {
            return Err(Failure::user(format!("parameter `{name}` given twice")));
        }
        grid = grid
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut q = p.clone();
                    q.insert(name.clone(), v.clone());
                    q
                })
            })
            .collect();
    }
    for z in zeros {
        if params.iter().any(|(n, _)| n == z) {
            return Err(Failure::user(format!("parameter `{z}` is both scanned and zeroed")));
        }
        for p in &mut grid {
            p.insert(z.clone(), Coefficient::zero());
        }
    }
    Ok(grid)
}

pub fn scan_report(family: &str, params: &[String], zeros: &[String]) -> Result<ScanOutput, Failure> {
    let spec = catalog(family).map_err(|e| {
        Failure::user(format!(
            "{e}; known families: {}",
            modstrat::family::CATALOG_NAMES.join(", ")
        ))
    })?;
    let params = params.iter().map(|p| parse_param(p)).collect::<Result<Vec<_>, _>>()?;
    let mut zero_names = Vec::new();
    for z in zeros {
        zero_names.extend(expand_names(z)?);
    }
    let grid = build_grid(&params, &zero_names)?;
    // surface unknown or missing parameters as input errors up front
    for p in &grid {
        modstrat::family::resolve_point(&spec, p).map_err(|e| Failure::from_core(e, None))?;
    }
    let scan = scan(&spec, &grid).map_err(|e| Failure::from_core(e, None))?;
    Ok(ScanOutput { report: "scan", scan })
}

fn opt_dim(d: Option<Dimension>) -> String {
    d.map_or("-".into(), |d| d.to_string())
}

pub fn render_scan(out: &ScanOutput) -> String {
    let r = &out.scan;
    let mut s = format!("family  {}\n        {}\n", r.family, r.description);
    if !r.defaults_used.is_empty() {
        let _ = writeln!(s, "defaults used: {}", r.defaults_used.join(", "));
    }
    let headers = ["point", "mu", "tau", "modular", "weights", "note"];
    let rows: Vec<[String; 6]> = r
        .rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut note = Vec::new();
            if row.non_isolated {
                note.push("non-isolated".to_string());
            }
            if r.jump_points.contains(&i) {
                note.push("jump".to_string());
            }
            if let Some(e) = &row.error {
                note.push(e.clone());
            }
            [
                row.point.to_string(),
                opt_dim(row.milnor),
                opt_dim(row.tjurina),
                row.modular_dimension.map_or("-".into(), |d| d.to_string()),
                if row.weights_found { "yes" } else { "no" }.into(),
                note.join(", "),
            ]
        })
        .collect();
    let widths: Vec<usize> = (0..6)
        .map(|j| rows.iter().map(|r| r[j].len()).chain([headers[j].len()]).max().unwrap())
        .collect();
    let line = |cells: [&str; 6]| {
        let mut l = String::new();
        for (j, c) in cells.iter().enumerate() {
            let _ = write!(l, "{c:<w$}  ", w = widths[j]);
        }
        l.trim_end().to_string() + "\n"
    };
    s.push_str(&line(headers));
    for row in &rows {
        s.push_str(&line([&row[0], &row[1], &row[2], &row[3], &row[4], &row[5]]));
    }
    match r.modal_tjurina {
        Some(m) if r.jump_points.is_empty() => {
            let _ = writeln!(s, "tau constant = {m}; no jumps");
        }
        Some(m) => {
            let pts: Vec<String> = r.jump_rows().map(|row| format!("({})", row.point)).collect();
            let _ = writeln!(s, "modal tau = {m}; jumps at {}", pts.join(", "));
        }
        None => s.push_str("no finite tau in this scan\n"),
    }
    s
}

pub fn cmd_scan(family: &str, params: &[String], zeros: &[String], format: Format) -> Result<Output, Failure> {
    let out = scan_report(family, params, zeros)?;
    let text = match format {
        Format::Json => json(&out),
        Format::Table => render_scan(&out),
    };
    Ok(Output { text, code: EXIT_OK })
}

// ---------------------------------------------------------------- projective

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveReport {
    pub report: String,
    pub input: String,
    pub polynomial: String,
    pub variables: Vec<String>,
    pub degree: u32,
    pub dimension: usize,
    pub formula: i64,
    pub formula_expression: String,
    /// Present when the germ has at least four variables.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding_check: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_piece_dimension: Option<usize>,
}

pub fn projective_report(text: &str, vars: Option<&str>) -> Result<ProjectiveReport, Failure> {
    let f = read_poly(text, vars)?;
    let fail = |e| Failure::from_core(e, Some(text));
    let Some(m) = f.homogeneous_degree() else {
        return Err(Failure::user(format!("{}: `{text}`", Error::NotHomogeneous)));
    };
    let dimension = match projective_t1_dimension(&f) {
        Ok(d) => d,
        Err(Error::Precondition(msg)) => {
            return Err(Failure {
                code: EXIT_DEGENERATE,
                message: msg,
            })
        }
        Err(e) => return Err(fail(e)),
    };
    let n = f.nvars();
    let big_n = n - 1;
    let (embedding, piece) = if n >= 4 {
        let t1 = tjurina(&f).map_err(fail)?;
        (
            Some(embedding_check(&f, &t1).map_err(fail)?),
            Some(graded_piece(&t1, m as i64).map_err(fail)?.len()),
        )
    } else {
        (None, None)
    };
    Ok(ProjectiveReport {
        report: "projective".into(),
        input: text.to_string(),
        polynomial: f.to_string(),
        variables: f.vars().to_vec(),
        degree: m,
        dimension,
        formula: projective_formula(n, m),
        formula_expression: format!("C({}, {big_n}) - {}", m as usize + big_n, n * n),
        embedding_check: embedding,
        weight_piece_dimension: piece,
    })
}

pub fn render_projective(r: &ProjectiveReport) -> String {
    let mut rows = vec![
        ("input", r.polynomial.clone()),
        ("degree", r.degree.to_string()),
        ("dimension", r.dimension.to_string()),
        ("formula", format!("{} = {}", r.formula_expression, r.formula)),
    ];
    if let (Some(e), Some(p)) = (r.embedding_check, r.weight_piece_dimension) {
        rows.push(("embedding", format!("{e} (weight-{} piece of T1 has dimension {p})", r.degree)));
    }
    table(&rows)
}

pub fn cmd_projective(text: &str, vars: Option<&str>, format: Format) -> Result<Output, Failure> {
    let r = projective_report(text, vars)?;
    let text = match format {
        Format::Json => json(&r),
        Format::Table => render_projective(&r),
    };
    Ok(Output { text, code: EXIT_OK })
}

// ---------------------------------------------------------------- oracle-dim

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    Milnor,
    Tjurina,
}

impl FromStr for IdealKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "milnor" => Ok(IdealKind::Milnor),
            "tjurina" => Ok(IdealKind::Tjurina),
            other => Err(format!("unknown ideal `{other}` (expected milnor or tjurina)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub report: String,
    pub input: String,
    pub polynomial: String,
    pub variables: Vec<String>,
    pub ideal: IdealKind,
    pub degree_bound: u32,
    /// `dim O/(I + m^(D+1))`; equals the quotient dimension once the bound
    /// exceeds every staircase degree.
    pub dimension: usize,
}

pub fn oracle_report(text: &str, vars: Option<&str>, bound: u32, ideal: IdealKind) -> Result<OracleReport, Failure> {
    let f = read_poly(text, vars)?;
    let fail = |e| Failure::from_core(e, Some(text));
    let dimension = match ideal {
        IdealKind::Milnor => milnor_oracle(&f, bound),
        IdealKind::Tjurina => tjurina_oracle(&f, bound),
    }
    .map_err(fail)?;
    Ok(OracleReport {
        report: "oracle_dim".into(),
        input: text.to_string(),
        polynomial: f.to_string(),
        variables: f.vars().to_vec(),
        ideal,
        degree_bound: bound,
        dimension,
    })
}

pub fn cmd_oracle(text: &str, vars: Option<&str>, bound: u32, ideal: IdealKind, format: Format) -> Result<Output, Failure> {
    let r = oracle_report(text, vars, bound, ideal)?;
    let text = match format {
        Format::Json => json(&r),
        Format::Table => table(&[
            ("input", r.polynomial.clone()),
            ("ideal", format!("{:?}", r.ideal).to_lowercase()),
            ("degree bound", r.degree_bound.to_string()),
            ("dimension", r.dimension.to_string()),
        ]),
    };
    Ok(Output { text, code: EXIT_OK })
}
