//! Command-line front end: loads a system, runs one pipeline, renders the artifact.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

use crate::catalog;
use crate::coxeter::{
    coxeter_plane, coxeter_versor, factorize_versor, fold_diagram, project_onto, project_to_plane, CoxeterFactorization,
    ProjectedPoint,
};
use crate::error::{Error, Result};
use crate::induction::{classes_json, e8_from_h3, induce_4d, multivector_json, pinor_closure, spin_subgroup};
use crate::roots::{close_roots, CartanMatrix, Metric, RootSystem, Vector};
use crate::scalars::{format_float, QuadScalar, Scalar};
use crate::svg::{render_svg, SvgStyle};

/// Directory for artifacts when `--output` is absent or relative.
pub const OUTPUT_DIR_ENV: &str = "CLIFFROOTS_OUTPUT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CommandKind {
    Roots,
    Cartan,
    Pinors,
    Induce,
    #[value(name = "e8-from-h3")]
    E8FromH3,
    Coxeter,
    Fold,
    Project,
}

impl CommandKind {
    fn name(self) -> &'static str {
        match self {
            CommandKind::Roots => "roots",
            CommandKind::Cartan => "cartan",
            CommandKind::Pinors => "pinors",
            CommandKind::Induce => "induce",
            CommandKind::E8FromH3 => "e8-from-h3",
            CommandKind::Coxeter => "coxeter",
            CommandKind::Fold => "fold",
            CommandKind::Project => "project",
        }
    }

    fn default_format(self) -> Format {
        match self {
            CommandKind::Roots | CommandKind::Induce | CommandKind::Project => Format::Csv,
            _ => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

impl Format {
    fn ext(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Svg => "svg",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Standard,
    Reduced,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Standard => Metric::Standard,
            MetricArg::Reduced => Metric::ReducedTau,
        }
    }
}

/// Root systems, pinor groups and Coxeter data in exact Clifford algebra.
#[derive(Debug, Clone, Parser)]
#[command(name = "cliffroots", version)]
pub struct CommandConfig {
    #[arg(value_enum)]
    pub command: CommandKind,
    /// Catalog name (A1^3, I2(n), A3, B3, H3, A4, B4, D4, F4, H4, D6, E8, E8-cl8) or a simple-roots file.
    #[arg(long, short)]
    pub system: Option<String>,
    #[arg(long, value_enum)]
    pub metric: Option<MetricArg>,
    /// Simple-root order for the Coxeter element, 1-based, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub order: Option<Vec<usize>>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, short, value_enum)]
    pub format: Option<Format>,
    /// Also split the Coxeter versor into eigenplane factors.
    #[arg(long)]
    pub factorize: bool,
    /// Folding pairs such as `1-7,2-6,3-5,4-8`.
    #[arg(long)]
    pub pairs: Option<String>,
    /// `coxeter` or the exponent `m` of an eigenplane.
    #[arg(long, default_value = "coxeter")]
    pub plane: String,
}

/// The rendered output and where it should go (`None` means stdout).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifact {
    pub path: Option<PathBuf>,
    pub contents: String,
}

/// Simple roots read from a text file.
#[derive(Debug, Clone)]
pub enum SimpleRootsFile {
    Exact { dim: usize, field: u32, roots: Vec<Vector<QuadScalar>> },
    Float { dim: usize, roots: Vec<Vector<f64>> },
}

impl SimpleRootsFile {
    /// First line `dim=<n> field=<sqrt-d|rational|float>`, then one root per line.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "empty file".into() })?;
        let perr = |line: usize, message: String| Error::Parse { line, message };
        let mut dim = None;
        let mut field = None;
        for tok in header.split_whitespace() {
            match tok.split_once('=') {
                Some(("dim", v)) => dim = Some(v.parse::<usize>().map_err(|_| perr(hline, format!("bad dim `{v}`")))?),
                Some(("field", "float")) => field = Some(None),
                Some(("field", "rational")) => field = Some(Some(0)),
                Some(("field", v)) => {
                    let d = v
                        .strip_prefix("sqrt-")
                        .and_then(|d| d.parse::<u32>().ok())
                        .ok_or_else(|| perr(hline, format!("bad field `{v}`")))?;
                    QuadScalar::sqrt_of(d).map_err(|e| perr(hline, e.to_string()))?;
                    field = Some(Some(d));
                }
                _ => return Err(perr(hline, format!("unexpected header token `{tok}`"))),
            }
        }
        let dim = dim.ok_or_else(|| perr(hline, "missing dim=".into()))?;
        let field = field.ok_or_else(|| perr(hline, "missing field=".into()))?;
        if !(1..=crate::clifford::MAX_DIM).contains(&dim) {
            return Err(perr(hline, format!("dim {dim} outside 1..=8")));
        }
        let mut rows: Vec<(usize, Vec<&str>)> = Vec::new();
        for (n, l) in lines {
            let cells: Vec<&str> = l.split(',').map(str::trim).collect();
            if cells.len() != dim {
                return Err(perr(n, format!("expected {dim} entries, found {}", cells.len())));
            }
            rows.push((n, cells));
        }
        if rows.is_empty() {
            return Err(perr(hline, "no roots".into()));
        }
        match field {
            None => {
                let mut roots = Vec::new();
                for (n, cells) in rows {
                    let v = cells
                        .iter()
                        .map(|c| c.parse::<f64>().map_err(|_| perr(n, format!("bad number `{c}`"))))
                        .collect::<Result<Vec<_>>>()?;
                    let v = Vector(v);
                    if v.is_zero() {
                        return Err(perr(n, "zero root".into()));
                    }
                    roots.push(v);
                }
                Ok(SimpleRootsFile::Float { dim, roots })
            }
            Some(d) => {
                let mut roots = Vec::new();
                for (n, cells) in rows {
                    let v = cells
                        .iter()
                        .map(|c| {
                            let x: QuadScalar = c.parse().map_err(|e| perr(n, format!("bad scalar `{c}`: {e}")))?;
                            match x.radicand() {
                                Some(r) if r != d => Err(perr(n, format!("`{c}` is outside Q(sqrt {d})"))),
                                _ => Ok(x),
                            }
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let v = Vector(v);
                    if v.is_zero() {
                        return Err(perr(n, "zero root".into()));
                    }
                    roots.push(v);
                }
                Ok(SimpleRootsFile::Exact { dim, field: d, roots })
            }
        }
    }
}

/// A closed system ready for the pipelines.
#[derive(Debug, Clone)]
pub enum LoadedSystem {
    Exact { rs: RootSystem<QuadScalar>, order: Vec<usize> },
    Float { rs: RootSystem<f64>, order: Vec<usize> },
}

pub fn load_system(system_arg: &str, metric: Option<Metric>) -> Result<LoadedSystem> {
    if let Some(n) = catalog::parse_dihedral(system_arg) {
        if metric == Some(Metric::ReducedTau) {
            return Err(Error::NeedsGoldenField);
        }
        let simple = catalog::dihedral_simple_roots(n)?;
        let rs = close_roots(&simple, Metric::Standard)?.with_name(format!("I2({n})"));
        return Ok(LoadedSystem::Float { rs, order: vec![1, 2] });
    }
    match catalog::lookup(system_arg) {
        Ok(e) => {
            let metric = metric.unwrap_or(e.metric);
            let rs = close_roots(&e.simple_roots, metric)?.with_name(e.name).with_field(e.field);
            return Ok(LoadedSystem::Exact { rs, order: e.default_order });
        }
        Err(Error::UnknownSystem(_)) => {}
        Err(e) => return Err(e),
    }
    let path = Path::new(system_arg);
    if !path.is_file() {
        return Err(Error::UnknownSystem(system_arg.to_string()));
    }
    let name = path.file_stem().map_or_else(|| system_arg.to_string(), |s| s.to_string_lossy().into_owned());
    match SimpleRootsFile::parse(&std::fs::read_to_string(path)?)? {
        SimpleRootsFile::Exact { field, roots, .. } => {
            let order = (1..=roots.len()).collect();
            let rs = close_roots(&roots, metric.unwrap_or(Metric::Standard))?.with_name(name).with_field(field);
            Ok(LoadedSystem::Exact { rs, order })
        }
        SimpleRootsFile::Float { roots, .. } => {
            if metric == Some(Metric::ReducedTau) {
                return Err(Error::NeedsGoldenField);
            }
            let order = (1..=roots.len()).collect();
            Ok(LoadedSystem::Float { rs: close_roots(&roots, Metric::Standard)?.with_name(name), order })
        }
    }
}

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
        .collect()
}

fn vector_json<S: Scalar>(v: &Vector<S>) -> Value {
    json!(v.render())
}

fn roots_csv<S: Scalar>(roots: &[Vector<S>]) -> String {
    let dim = roots.first().map_or(0, Vector::dim);
    let mut out = String::from("index");
    for i in 1..=dim {
        let _ = write!(out, ",coord{i}");
    }
    out.push('\n');
    for (i, r) in roots.iter().enumerate() {
        let _ = writeln!(out, "{i},{}", r.render().join(","));
    }
    out
}

fn cartan_json<S: Scalar>(a: &CartanMatrix<S>) -> Value {
    json!({
        "labels": a.labels,
        "entries": a.entries.iter().map(|r| r.iter().map(Scalar::render).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn cartan_csv<S: Scalar>(a: &CartanMatrix<S>) -> String {
    let mut out = String::from("label");
    for l in &a.labels {
        let _ = write!(out, ",{l}");
    }
    out.push('\n');
    for (l, row) in a.labels.iter().zip(&a.entries) {
        let cells: Vec<String> = row.iter().map(Scalar::render).collect();
        let _ = writeln!(out, "{l},{}", cells.join(","));
    }
    out
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

fn unsupported(f: Format) -> Error {
    Error::UnsupportedFormat(f.ext().into())
}

fn name_of<S: Scalar>(rs: &RootSystem<S>) -> String {
    rs.name().unwrap_or("custom").to_string()
}

fn cmd_roots<S: Scalar>(rs: &RootSystem<S>, format: Format) -> Result<String> {
    match format {
        Format::Csv => Ok(roots_csv(rs.roots())),
        Format::Json => Ok(pretty(&json!({
            "name": name_of(rs),
            "dim": rs.dim(),
            "metric": rs.metric().name(),
            "count": rs.len(),
            "roots": rs.roots().iter().map(vector_json).collect::<Vec<_>>(),
        }))),
        f => Err(unsupported(f)),
    }
}

fn cmd_cartan<S: Scalar>(rs: &RootSystem<S>, format: Format) -> Result<String> {
    let a = rs.cartan_matrix()?;
    match format {
        Format::Json => Ok(pretty(&cartan_json(&a))),
        Format::Csv => Ok(cartan_csv(&a)),
        f => Err(unsupported(f)),
    }
}

fn cmd_pinors<S: Scalar>(rs: &RootSystem<S>, format: Format) -> Result<String> {
    if format != Format::Json {
        return Err(unsupported(format));
    }
    let pin = pinor_closure(rs)?;
    let spin = spin_subgroup(&pin);
    let classes = spin.conjugacy_classes();
    Ok(pretty(&json!({
        "name": name_of(rs),
        "pin_order": pin.len(),
        "spin_order": spin.len(),
        "spin_classes": classes_json(&spin, &classes),
        "pin": pin.to_json(),
    })))
}

fn cmd_induce<S: Scalar>(rs: &RootSystem<S>, format: Format) -> Result<String> {
    if rs.dim() != 3 {
        return Err(Error::UnsupportedDimension(rs.dim()));
    }
    let induced = induce_4d(&spin_subgroup(&pinor_closure(rs)?))?;
    match format {
        Format::Csv => Ok(roots_csv(&induced.vectors4d)),
        Format::Json => Ok(pretty(&json!({
            "name": name_of(rs),
            "spin_order": induced.source.len(),
            "count": induced.rootsystem.len(),
            "roots": induced.vectors4d.iter().map(vector_json).collect::<Vec<_>>(),
        }))),
        f => Err(unsupported(f)),
    }
}

fn cmd_e8(format: Format) -> Result<String> {
    let e = e8_from_h3()?;
    if !(e.closure_matches && e.axioms.passes() && e.cartan_matches_reference && e.e8.len() == 240) {
        return Err(Error::Pipeline("E8 construction does not reproduce the 240-root target".into()));
    }
    match format {
        Format::Csv => Ok(roots_csv(e.e8.roots())),
        Format::Json => Ok(pretty(&json!({
            "pin_group": e.pin_group,
            "spin_group": e.spin_group,
            "h4_roots": e.h4.len(),
            "e8_roots": e.e8.len(),
            "tau_left_matches": e.tau_left_matches,
            "tau_right_matches": e.tau_right_matches,
            "closure_matches": e.closure_matches,
            "axiom1": e.axioms.axiom1(),
            "axiom2": e.axioms.axiom2(),
            "cartan": cartan_json(&e.cartan),
            "cartan_matches_reference": e.cartan_matches_reference,
            "simple_roots": e.e8.simple_roots().iter().map(vector_json).collect::<Vec<_>>(),
        }))),
        f => Err(unsupported(f)),
    }
}

/// Factorisation JSON: planes with exponent pairs, angles and bivectors.
pub fn factorization_json(name: &str, f: &CoxeterFactorization) -> Value {
    json!({
        "name": name,
        "h": f.h,
        "exponents": f.exponents(),
        "planes": f.planes.iter().map(|p| json!({
            "exponents": [p.exponents.0, p.exponents.1],
            "angle_over_pi": format_float(p.theta / std::f64::consts::PI),
            "bivector": multivector_json(&p.bivector),
        })).collect::<Vec<_>>(),
        "reflection_pairs": f.reflection_pairs.len(),
        "lone_reflection": f.lone_reflection.is_some(),
        "residual": format_float(f.residual),
    })
}

fn cmd_coxeter<S: Scalar>(rs: &RootSystem<S>, order: &[usize], factorize: bool, format: Format) -> Result<String> {
    if format != Format::Json {
        return Err(unsupported(format));
    }
    let cv = coxeter_versor(rs, order)?;
    let name = name_of(rs);
    if factorize {
        let mut v = factorization_json(&name, &factorize_versor(&cv)?);
        v["order"] = json!(order);
        return Ok(pretty(&v));
    }
    Ok(pretty(&json!({
        "name": name,
        "order": order,
        "h": cv.order_h,
        "power_sign": cv.power_sign,
        "versor": multivector_json(cv.exact.mv()),
    })))
}

/// Parses `1-7,2-6` into index pairs.
pub fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(',')
        .map(|p| {
            let (a, b) = p.trim().split_once('-').ok_or(Error::Parse { line: 1, message: format!("bad pair `{p}`") })?;
            let num = |s: &str| {
                s.trim().parse::<usize>().map_err(|_| Error::Parse { line: 1, message: format!("bad index `{s}`") })
            };
            Ok((num(a)?, num(b)?))
        })
        .collect()
}

fn cmd_fold(rs: &RootSystem<f64>, name: &str, pairs: &[(usize, usize)], format: Format) -> Result<String> {
    if format != Format::Json {
        return Err(unsupported(format));
    }
    let f = fold_diagram(rs, pairs)?;
    Ok(pretty(&json!({
        "name": name,
        "pairs": pairs.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
        "coxeter_matrix": f.target_coxeter_matrix,
        "chain_orders": f.chain_orders(),
    })))
}

fn projection_csv(points: &[ProjectedPoint]) -> String {
    let mut out = String::from("root_index,x,y,radius,orbit_id\n");
    for p in points {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            p.root_index,
            format_float(p.x),
            format_float(p.y),
            format_float(p.radius),
            p.orbit_id
        );
    }
    out
}

fn cmd_project<S: Scalar>(
    rs: &RootSystem<S>,
    order: &[usize],
    plane: &str,
    format: Format,
) -> Result<String> {
    let rsf = RootSystem::from_roots(rs.dim(), rs.roots().iter().map(Vector::to_float).collect(), Metric::Standard)
        .with_simple_roots(rs.simple_roots().iter().map(Vector::to_float).collect());
    let name = name_of(rs);
    let points = if plane == "coxeter" {
        project_to_plane(&rsf, &coxeter_plane(rs, &rs.cartan_matrix()?)?)?
    } else {
        let m: u32 = plane.parse().map_err(|_| Error::Parse { line: 1, message: format!("bad plane `{plane}`") })?;
        let cv = coxeter_versor(rs, order)?;
        let f = factorize_versor(&cv)?;
        let p = f
            .planes
            .iter()
            .find(|p| p.exponents.0 == m || p.exponents.1 == m)
            .ok_or_else(|| Error::Pipeline(format!("no eigenplane with exponent {m}")))?;
        project_onto(&rsf, &p.u, &p.v, &cv.w)?
    };
    match format {
        Format::Csv => Ok(projection_csv(&points)),
        Format::Svg => {
            let style = SvgStyle { title: Some(format!("{name} projection")), ..SvgStyle::default() };
            Ok(render_svg(&points, &style))
        }
        Format::Json => Ok(pretty(&json!(points
            .iter()
            .map(|p| json!({
                "root_index": p.root_index,
                "x": format_float(p.x),
                "y": format_float(p.y),
                "radius": format_float(p.radius),
                "orbit_id": p.orbit_id,
            }))
            .collect::<Vec<_>>()))),
    }
}

fn standard_exact(rs: &RootSystem<QuadScalar>) -> Result<RootSystem<QuadScalar>> {
    let mut s = rs.to_standard_form()?;
    if let Some(n) = rs.name() {
        s = s.with_name(n);
    }
    Ok(s)
}

fn resolve_path(config: &CommandConfig, system: &str, format: Format) -> Option<PathBuf> {
    let dir = std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from);
    match (&config.output, dir) {
        (Some(p), Some(d)) if p.is_relative() => Some(d.join(p)),
        (Some(p), _) => Some(p.clone()),
        (None, Some(d)) => Some(d.join(format!("{}-{}.{}", config.command.name(), sanitize(system), format.ext()))),
        (None, None) => None,
    }
}

/// Runs one command and returns the artifact without writing it.
pub fn run(config: &CommandConfig) -> Result<Artifact> {
    let format = config.format.unwrap_or_else(|| config.command.default_format());
    let metric = config.metric.map(Metric::from);
    if config.command == CommandKind::E8FromH3 {
        return Ok(Artifact { path: resolve_path(config, "H3", format), contents: cmd_e8(format)? });
    }
    let system_arg = config
        .system
        .as_deref()
        .ok_or_else(|| Error::UnknownSystem("--system is required".into()))?;
    let loaded = load_system(system_arg, metric)?;
    let contents = match loaded {
        LoadedSystem::Exact { rs, order } => {
            let order = config.order.clone().unwrap_or(order);
            match config.command {
                CommandKind::Roots => cmd_roots(&rs, format)?,
                CommandKind::Cartan => cmd_cartan(&rs, format)?,
                CommandKind::Pinors => cmd_pinors(&rs, format)?,
                CommandKind::Induce => cmd_induce(&rs, format)?,
                CommandKind::Coxeter => cmd_coxeter(&standard_exact(&rs)?, &order, config.factorize, format)?,
                CommandKind::Fold => {
                    let pairs = parse_pairs(config.pairs.as_deref().ok_or(Error::Parse {
                        line: 1,
                        message: "--pairs is required".into(),
                    })?)?;
                    let std = standard_exact(&rs)?;
                    let rsf = std.to_float()?;
                    cmd_fold(&rsf, &name_of(&rs), &pairs, format)?
                }
                CommandKind::Project => cmd_project(&standard_exact(&rs)?, &order, &config.plane, format)?,
                CommandKind::E8FromH3 => unreachable!("handled above"),
            }
        }
        LoadedSystem::Float { rs, order } => {
            let order = config.order.clone().unwrap_or(order);
            match config.command {
                CommandKind::Roots => cmd_roots(&rs, format)?,
                CommandKind::Cartan => cmd_cartan(&rs, format)?,
                CommandKind::Pinors => cmd_pinors(&rs, format)?,
                CommandKind::Induce => cmd_induce(&rs, format)?,
                CommandKind::Coxeter => cmd_coxeter(&rs, &order, config.factorize, format)?,
                CommandKind::Fold => {
                    let pairs = parse_pairs(config.pairs.as_deref().ok_or(Error::Parse {
                        line: 1,
                        message: "--pairs is required".into(),
                    })?)?;
                    cmd_fold(&rs, &name_of(&rs), &pairs, format)?
                }
                CommandKind::Project => cmd_project(&rs, &order, &config.plane, format)?,
                CommandKind::E8FromH3 => unreachable!("handled above"),
            }
        }
    };
    Ok(Artifact { path: resolve_path(config, system_arg, format), contents })
}

/// Machine-readable error report.
pub fn error_json(e: &Error) -> String {
    let mut s = serde_json::to_string(&json!({ "error": e.kind(), "message": e.to_string() })).expect("serialisable");
    s.push('\n');
    s
}

/// Parses `args`, runs, writes the artifact; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match CommandConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = run(&config).and_then(|a| match &a.path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            std::fs::write(p, &a.contents)?;
            Ok(())
        }
        None => {
            print!("{}", a.contents);
            Ok(())
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            print!("{}", error_json(&e));
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_and_rows_parse() {
        let f = SimpleRootsFile::parse("dim=3 field=sqrt-5\n0,1,0\n1/2-1/2*t, -1/2, -1/2*t\n# comment\n0,0,1\n").unwrap();
        match f {
            SimpleRootsFile::Exact { dim, field, roots } => {
                assert_eq!((dim, field, roots.len()), (3, 5, 3));
            }
            SimpleRootsFile::Float { .. } => panic!("expected exact"),
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = SimpleRootsFile::parse("dim=2 field=rational\n1,0\n1,2,3\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 3, message: "expected 2 entries, found 3".into() });
        let e = SimpleRootsFile::parse("dim=2 field=sqrt-2\n\n0,0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = SimpleRootsFile::parse("dim=2 field=sqrt-4\n1,0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = SimpleRootsFile::parse("dim=2 field=sqrt-2\n1,t\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn float_files() {
        let f = SimpleRootsFile::parse("dim=2 field=float\n1,0\n-0.5,0.8660254037844386\n").unwrap();
        assert!(matches!(f, SimpleRootsFile::Float { dim: 2, .. }));
    }

    #[test]
    fn pairs_parse() {
        assert_eq!(parse_pairs("1-7, 2-6").unwrap(), vec![(1, 7), (2, 6)]);
        assert!(parse_pairs("1:7").is_err());
    }

    #[test]
    fn unknown_system_is_reported() {
        let cfg = CommandConfig::try_parse_from(["cliffroots", "roots", "--system", "Q7"]).unwrap();
        let e = run(&cfg).unwrap_err();
        assert_eq!(e.kind(), "unknown_system");
        assert!(error_json(&e).contains(r#""error":"unknown_system""#));
    }

    #[test]
    fn h3_roots_csv_has_thirty_rows() {
        let cfg = CommandConfig::try_parse_from(["cliffroots", "roots", "--system", "H3"]).unwrap();
        let a = run(&cfg).unwrap();
        assert_eq!(a.contents.lines().count(), 31);
        assert!(a.contents.starts_with("index,coord1,coord2,coord3\n"));
    }
}
