//! Study driver behind the `cfsm` binary: coefficient dumps, convergence
//! datasets and method comparisons.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::direct::{build_direct_1d, build_direct_2d};
use crate::domain::SmoothnessOrder;
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::metrics::{error_report_1d, error_report_2d, make_grid_1d, make_grid_2d, ErrorReport, ErrorValue, Subset};
use crate::quadrature::QuadratureRule;
use crate::samples::{get_sample, SampleCase, SampleFunction, IDS};
use crate::series1d::build_composite_1d;
use crate::series2d::{build_composite_2d, EdgeAxis, EdgeCoefficientTable};
use crate::trig::{TrigSeries1D, TrigSeries2D};

pub const DEFAULT_TERMS: [usize; 7] = [2, 3, 5, 10, 20, 30, 40];
pub const DEFAULT_GRID_1D: usize = 10001;
pub const DEFAULT_GRID_2D: usize = 101;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Composite,
    Direct,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Composite => "composite",
            Method::Direct => "direct",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodSelection {
    Composite,
    Direct,
    Both,
}

impl MethodSelection {
    pub fn methods(self) -> &'static [Method] {
        match self {
            MethodSelection::Composite => &[Method::Composite],
            MethodSelection::Direct => &[Method::Direct],
            MethodSelection::Both => &[Method::Composite, Method::Direct],
        }
    }
}

impl FromStr for MethodSelection {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "composite" => Ok(Self::Composite),
            "direct" => Ok(Self::Direct),
            "both" => Ok(Self::Both),
            other => Err(Error::Config(format!("unknown method '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleSelection {
    One(u32),
    All,
}

impl SampleSelection {
    pub fn ids(self) -> Vec<u32> {
        match self {
            SampleSelection::One(id) => vec![id],
            SampleSelection::All => IDS.to_vec(),
        }
    }
}

impl FromStr for SampleSelection {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "all" {
            return Ok(Self::All);
        }
        s.parse()
            .map(Self::One)
            .map_err(|_| Error::Config(format!("sample must be 1..8 or 'all', got '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
    Both,
}

impl OutputFormat {
    fn csv(self) -> bool {
        matches!(self, OutputFormat::Csv | OutputFormat::Both)
    }
    fn json(self) -> bool {
        matches!(self, OutputFormat::Json | OutputFormat::Both)
    }
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            "both" => Ok(Self::Both),
            other => Err(Error::Config(format!("unknown format '{other}'"))),
        }
    }
}

pub fn parse_terms(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Config(format!("bad truncation '{}'", t.trim())))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct StudyConfig {
    pub samples: SampleSelection,
    pub method: MethodSelection,
    pub r: usize,
    pub terms: Vec<usize>,
    /// Overrides both the 1D and the 2D default grid sizes.
    pub grid: Option<usize>,
    pub out: PathBuf,
    pub format: OutputFormat,
}

impl Default for StudyConfig {
    fn default() -> Self {
        Self {
            samples: SampleSelection::All,
            method: MethodSelection::Both,
            r: 3,
            terms: DEFAULT_TERMS.to_vec(),
            grid: None,
            out: PathBuf::from("out"),
            format: OutputFormat::Csv,
        }
    }
}

impl StudyConfig {
    /// Applies `key = value` lines; `#` starts a comment.
    pub fn apply_config_text(&mut self, text: &str) -> Result<()> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key=value", n + 1)))?;
            let value = value.trim();
            match key.trim() {
                "sample" => self.samples = value.parse()?,
                "method" => self.method = value.parse()?,
                "r" => {
                    self.r = value
                        .parse()
                        .map_err(|_| Error::Config(format!("bad r '{value}'")))?
                }
                "terms" => self.terms = parse_terms(value)?,
                "grid" => {
                    self.grid = Some(
                        value
                            .parse()
                            .map_err(|_| Error::Config(format!("bad grid '{value}'")))?,
                    )
                }
                "out" => self.out = PathBuf::from(value),
                "format" => self.format = value.parse()?,
                other => return Err(Error::Config(format!("line {}: unknown key '{other}'", n + 1))),
            }
        }
        Ok(())
    }

    pub fn apply_config_file(&mut self, path: &Path) -> Result<()> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        self.apply_config_text(&text)
    }

    pub fn validate(&self) -> Result<()> {
        for id in self.samples.ids() {
            get_sample(id).map_err(|e| Error::Config(e.to_string()))?;
        }
        SmoothnessOrder::new(self.r).map_err(|e| Error::Config(e.to_string()))?;
        if self.terms.is_empty() {
            return Err(Error::Config("truncation list is empty".into()));
        }
        if self.terms.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Config("truncation list must be strictly ascending".into()));
        }
        if let Some(g) = self.grid {
            if g < 3 {
                return Err(Error::Config(format!("grid must be at least 3, got {g}")));
            }
        }
        Ok(())
    }

    pub fn grid_for(&self, dims: usize) -> usize {
        self.grid
            .unwrap_or(if dims == 1 { DEFAULT_GRID_1D } else { DEFAULT_GRID_2D })
    }

    fn max_terms(&self) -> usize {
        *self.terms.last().expect("validated nonempty")
    }
}

/// Process exit code for a failed command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Config(_) | Error::UnknownSample(_) | Error::InvalidArgument(_) => 2,
        Error::Output(_) => 1,
        _ => 3,
    }
}

/// One row of a convergence dataset. `n` is empty for 1D samples.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub sample: u32,
    pub method: Method,
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: Option<usize>,
    pub index_name: String,
    pub subset: Subset,
    pub value: ErrorValue,
}

/// Builds one approximation of `case` with `m` terms per direction and
/// measures every error index up to order `2r`.
pub fn error_report(
    case: &SampleCase,
    method: Method,
    r: SmoothnessOrder,
    m: usize,
    grid: usize,
    rule: &QuadratureRule,
) -> Result<ErrorReport> {
    let max_order = r.two_r();
    match &case.function {
        SampleFunction::OneD { spec, kind } => {
            let g = make_grid_1d(&spec.domain, grid)?;
            match method {
                Method::Composite => {
                    let s = build_composite_1d(spec, *kind, r, m, rule)?;
                    error_report_1d(&s, spec, &g, max_order)
                }
                Method::Direct => {
                    let d = build_direct_1d(spec, *kind, r, m, rule)?;
                    error_report_1d(&d, spec, &g, max_order)
                }
            }
        }
        SampleFunction::TwoD { spec, kind } => {
            let g = make_grid_2d(&spec.domain, grid, grid)?;
            match method {
                Method::Composite => {
                    let s = build_composite_2d(spec, *kind, r, m, m, rule)?;
                    error_report_2d(&s, spec, &g, max_order)
                }
                Method::Direct => {
                    let d = build_direct_2d(spec, *kind, r, m, m, rule)?;
                    error_report_2d(&d, spec, &g, max_order)
                }
            }
        }
    }
}

fn report_records(case: &SampleCase, method: Method, m: usize, report: &ErrorReport) -> Result<Vec<Record>> {
    let n = (report.dims == 2).then_some(m);
    Ok(report
        .records()?
        .into_iter()
        .map(|(index_name, subset, value)| Record { sample: case.id, method, m, n, index_name, subset, value })
        .collect())
}

/// Convergence records of one case, ordered by method, truncation, index and
/// subset.
pub fn convergence_records(
    case: &SampleCase,
    methods: &[Method],
    r: SmoothnessOrder,
    terms: &[usize],
    grid: usize,
    rule: &QuadratureRule,
) -> Result<Vec<Record>> {
    let jobs: Vec<(Method, usize)> = methods
        .iter()
        .flat_map(|&meth| terms.iter().map(move |&m| (meth, m)))
        .collect();
    let chunks = jobs
        .par_iter()
        .map(|&(meth, m)| report_records(case, meth, m, &error_report(case, meth, r, m, grid, rule)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

fn output_err(path: &Path, e: impl fmt::Display) -> Error {
    Error::Output(format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| output_err(dir, e))?;
    }
    fs::write(path, contents).map_err(|e| output_err(path, e))
}

pub fn records_to_csv(records: &[Record]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for rec in records {
        w.serialize(rec).map_err(|e| Error::Output(e.to_string()))?;
    }
    w.into_inner().map_err(|e| Error::Output(e.to_string()))
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(value).map_err(|e| Error::Output(e.to_string()))?;
    out.push(b'\n');
    Ok(out)
}

/// File-name-safe form of an index name: `e^(1_2)` -> `e1_2`,
/// `|e|^5` -> `order5`, `||e||^4` -> `upto4`.
pub fn index_slug(name: &str) -> String {
    if let Some(p) = name.strip_prefix("||e||^") {
        format!("upto{p}")
    } else if let Some(p) = name.strip_prefix("|e|^") {
        format!("order{p}")
    } else {
        name.chars().filter(|c| c.is_ascii_alphanumeric() || *c == '_').collect()
    }
}

/// Two-column `M value` plot files, one per (sample, method, index, subset).
pub fn plot_files(records: &[Record]) -> BTreeMap<String, String> {
    let mut files: BTreeMap<String, String> = BTreeMap::new();
    for rec in records {
        let name = format!(
            "s{}_{}_{}_{}.dat",
            rec.sample,
            rec.method,
            index_slug(&rec.index_name),
            rec.subset.as_str()
        );
        let body = files
            .entry(name)
            .or_insert_with(|| format!("# M {} {}\n", rec.index_name, rec.subset));
        let v = rec.value.value().map_or_else(|| "NaN".to_string(), crate::metrics::format_value);
        body.push_str(&format!("{} {v}\n", rec.m));
    }
    files
}

/// Writes `convergence.csv` / `convergence.json` and `plot/*.dat`; returns the
/// records.
pub fn cmd_convergence(cfg: &StudyConfig) -> Result<Vec<Record>> {
    cfg.validate()?;
    let r = SmoothnessOrder::new(cfg.r)?;
    let rule = QuadratureRule::default();
    let mut records = Vec::new();
    for id in cfg.samples.ids() {
        let case = get_sample(id)?;
        let grid = cfg.grid_for(case.dims());
        records.extend(convergence_records(&case, cfg.method.methods(), r, &cfg.terms, grid, &rule)?);
    }
    if cfg.format.csv() {
        write_file(&cfg.out.join("convergence.csv"), &records_to_csv(&records)?)?;
    }
    if cfg.format.json() {
        write_file(&cfg.out.join("convergence.json"), &to_json(&records)?)?;
    }
    for (name, body) in plot_files(&records) {
        write_file(&cfg.out.join("plot").join(name), body.as_bytes())?;
    }
    Ok(records)
}

#[derive(Debug, Clone, Serialize)]
pub struct LabeledVector {
    pub labels: Vec<String>,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeDump {
    pub axis: EdgeAxis,
    pub table: EdgeCoefficientTable,
    pub family_cosine: Option<DenseMatrix>,
    pub family_sine: Option<DenseMatrix>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum InternalDump {
    OneD(TrigSeries1D),
    TwoD(TrigSeries2D),
}

/// Every coefficient of one composite series, with the row ordering of the
/// supplementary systems spelled out by labels.
#[derive(Debug, Clone, Serialize)]
pub struct CoefficientDump {
    pub sample: u32,
    pub description: String,
    pub kind: String,
    pub r: usize,
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: Option<usize>,
    /// `q1` in 1D, `q3` in 2D.
    pub supplementary: LabeledVector,
    /// Family coefficients solving the supplementary system.
    pub supplementary_solution: Vec<f64>,
    pub edges: Vec<EdgeDump>,
    pub internal: InternalDump,
    /// Independent series per derivative order, keyed by `(k1,k2)` or `k`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direct: Option<BTreeMap<String, InternalDump>>,
}

pub fn coefficient_dump(
    case: &SampleCase,
    r: SmoothnessOrder,
    m: usize,
    with_direct: bool,
    rule: &QuadratureRule,
) -> Result<CoefficientDump> {
    let (supplementary, supplementary_solution, edges, internal, n, direct) = match &case.function {
        SampleFunction::OneD { spec, kind } => {
            let s = build_composite_1d(spec, *kind, r, m, rule)?;
            let bd = s.boundary_data();
            let direct = if with_direct {
                let d = build_direct_1d(spec, *kind, r, m, rule)?;
                Some(
                    d.orders
                        .into_iter()
                        .enumerate()
                        .map(|(k, o)| (k.to_string(), InternalDump::OneD(o)))
                        .collect(),
                )
            } else {
                None
            };
            (
                LabeledVector { labels: bd.labels.clone(), values: bd.q1.clone() },
                s.boundary_coefficients().to_vec(),
                Vec::new(),
                InternalDump::OneD(s.internal_coefficients().clone()),
                None,
                direct,
            )
        }
        SampleFunction::TwoD { spec, kind } => {
            let s = build_composite_2d(spec, *kind, r, m, m, rule)?;
            let cd = s.corner_data();
            let edges = [EdgeAxis::X1, EdgeAxis::X2]
                .into_iter()
                .map(|axis| {
                    let e = s.edge(axis);
                    EdgeDump {
                        axis,
                        table: e.table.clone(),
                        family_cosine: e.family_coefficients(crate::trig::Trig::Cos).cloned(),
                        family_sine: e.family_coefficients(crate::trig::Trig::Sin).cloned(),
                    }
                })
                .collect();
            let direct = if with_direct {
                let d = build_direct_2d(spec, *kind, r, m, m, rule)?;
                Some(
                    d.orders
                        .into_iter()
                        .map(|(k, o)| (k.to_string(), InternalDump::TwoD(o)))
                        .collect(),
                )
            } else {
                None
            };
            (
                LabeledVector { labels: cd.labels.clone(), values: cd.q3.clone() },
                s.corner_coefficients().to_vec(),
                edges,
                InternalDump::TwoD(s.internal_coefficients().clone()),
                Some(m),
                direct,
            )
        }
    };
    Ok(CoefficientDump {
        sample: case.id,
        description: case.description.to_string(),
        kind: case.kind_name(),
        r: r.r(),
        m,
        n,
        supplementary,
        supplementary_solution,
        edges,
        internal,
        direct,
    })
}

/// Writes `approximate_s<id>.json` per sample at the largest truncation.
pub fn cmd_approximate(cfg: &StudyConfig) -> Result<Vec<CoefficientDump>> {
    cfg.validate()?;
    let r = SmoothnessOrder::new(cfg.r)?;
    let rule = QuadratureRule::default();
    let with_direct = cfg.method != MethodSelection::Composite;
    let dumps = cfg
        .samples
        .ids()
        .par_iter()
        .map(|&id| coefficient_dump(&get_sample(id)?, r, cfg.max_terms(), with_direct, &rule))
        .collect::<Result<Vec<_>>>()?;
    for d in &dumps {
        write_file(&cfg.out.join(format!("approximate_s{}.json", d.sample)), &to_json(d)?)?;
    }
    Ok(dumps)
}

/// One side-by-side row of a comparison table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareRow {
    pub sample: u32,
    #[serde(skip)]
    pub dims: usize,
    pub index_name: String,
    pub subset: Subset,
    pub composite: ErrorValue,
    pub direct: ErrorValue,
}

/// The rows shown in the printed summary: `||e||^4`, then the order-5 and
/// order-6 indexes (`e^(k)` in 1D, `|e|^p` in 2D).
pub fn headline_index(dims: usize, name: &str, r: usize) -> bool {
    let two_r = 2 * r;
    let mut names = vec![format!("||e||^{}", two_r.saturating_sub(2))];
    for p in [two_r - 1, two_r] {
        names.push(if dims == 1 { format!("e^({p})") } else { format!("|e|^{p}") });
    }
    names.iter().any(|n| n == name)
}

pub fn compare_rows(
    case: &SampleCase,
    r: SmoothnessOrder,
    m: usize,
    grid: usize,
    rule: &QuadratureRule,
) -> Result<Vec<CompareRow>> {
    let (comp, dir) = rayon::join(
        || error_report(case, Method::Composite, r, m, grid, rule),
        || error_report(case, Method::Direct, r, m, grid, rule),
    );
    let (comp, dir) = (comp?, dir?);
    let dims = comp.dims;
    let (comp, dir) = (comp.records()?, dir.records()?);
    Ok(comp
        .into_iter()
        .zip(dir)
        .map(|((index_name, subset, composite), (_, _, direct))| CompareRow {
            sample: case.id,
            dims,
            index_name,
            subset,
            composite,
            direct,
        })
        .collect())
}

/// Writes `compare.csv` / `compare.json` at the largest truncation and returns
/// the rows. Requires `method = both`.
pub fn cmd_compare(cfg: &StudyConfig) -> Result<Vec<CompareRow>> {
    cfg.validate()?;
    if cfg.method != MethodSelection::Both {
        return Err(Error::Config("compare needs method = both".into()));
    }
    let r = SmoothnessOrder::new(cfg.r)?;
    let rule = QuadratureRule::default();
    let mut rows = Vec::new();
    for id in cfg.samples.ids() {
        let case = get_sample(id)?;
        rows.extend(compare_rows(&case, r, cfg.max_terms(), cfg.grid_for(case.dims()), &rule)?);
    }
    if cfg.format.csv() {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &rows {
            w.serialize(row).map_err(|e| Error::Output(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Output(e.to_string()))?;
        write_file(&cfg.out.join("compare.csv"), &bytes)?;
    }
    if cfg.format.json() {
        write_file(&cfg.out.join("compare.json"), &to_json(&rows)?)?;
    }
    Ok(rows)
}

/// Plain-text table of the headline rows.
pub fn format_compare_table(rows: &[CompareRow], r: usize) -> String {
    let mut out = format!("{:<7}{:<12}{:<10}{:>14}{:>14}\n", "sample", "index", "subset", "composite", "direct");
    for row in rows {
        if !headline_index(row.dims, &row.index_name, r) {
            continue;
        }
        out.push_str(&format!(
            "{:<7}{:<12}{:<10}{:>14}{:>14}\n",
            row.sample,
            row.index_name,
            row.subset.as_str(),
            row.composite.to_string(),
            row.direct.to_string()
        ));
    }
    out
}
