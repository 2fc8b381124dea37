//! `(ω, θ)` grid sweeps over the boost rapidity and direction, and their
//! CSV/JSON emission.
//!
//! A sweep builds one initial state, then for every grid point boosts it by
//! `Ŝ(ω, n)` with `n = sin θ e_x + cos θ e_z` and measures the result. Rows
//! come out in row-major order (ω outer, θ inner) whatever the number of
//! worker threads.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kinematics::{BoostSpec, FourMomentum, Helicity};
use crate::measures::{EntanglementReport, BlochVector};
use crate::states::{
    boost_two_particle, chiral_project, make_scenario, ChiralLabelPair, Scenario, Slot,
    SuperpositionTerm, TwoParticleState,
};
use crate::tensor::{ComplexMatrix, Subsystem};

fn invalid(field: &str, reason: impl Into<String>) -> Error {
    Error::InvalidConfig {
        field: field.to_string(),
        reason: reason.into(),
    }
}

/// Which state a sweep starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepScenario {
    Psi1,
    Psi2,
    Psi3,
    ChiralPsi2,
    ChiralPsi3,
    Custom,
}

impl SweepScenario {
    pub const ALL: [SweepScenario; 6] = [
        Self::Psi1,
        Self::Psi2,
        Self::Psi3,
        Self::ChiralPsi2,
        Self::ChiralPsi3,
        Self::Custom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Psi1 => "psi1",
            Self::Psi2 => "psi2",
            Self::Psi3 => "psi3",
            Self::ChiralPsi2 => "chiral-psi2",
            Self::ChiralPsi3 => "chiral-psi3",
            Self::Custom => "custom",
        }
    }

    pub fn is_chiral(self) -> bool {
        matches!(self, Self::ChiralPsi2 | Self::ChiralPsi3)
    }
}

impl fmt::Display for SweepScenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepScenario {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| {
                invalid(
                    "scenario",
                    format!("unknown scenario {s:?}; expected one of psi1, psi2, psi3, chiral-psi2, chiral-psi3, custom"),
                )
            })
    }
}

/// A quantity reported per grid point. Declaration order is column order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    Eg,
    DeltaEg,
    Negativity,
    DeltaNegativity,
    Bloch,
}

impl Measure {
    pub const ALL: [Measure; 5] = [
        Self::Eg,
        Self::DeltaEg,
        Self::Negativity,
        Self::DeltaNegativity,
        Self::Bloch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Eg => "eg",
            Self::DeltaEg => "delta_eg",
            Self::Negativity => "negativity",
            Self::DeltaNegativity => "delta_negativity",
            Self::Bloch => "bloch",
        }
    }

    /// Output column names contributed by this measure.
    pub fn columns(self) -> Vec<String> {
        match self {
            Self::Bloch => Subsystem::ALL
                .iter()
                .flat_map(|s| ["x", "y", "z"].map(|c| format!("bloch_{}_{c}", s.tag())))
                .collect(),
            other => vec![other.name().to_string()],
        }
    }
}

impl FromStr for Measure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s.trim())
            .ok_or_else(|| invalid("measures", format!("unknown measure {s:?}")))
    }
}

/// Parses a comma-separated measure list into canonical order.
pub fn parse_measures(list: &str) -> Result<Vec<Measure>> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let m: Measure = item.parse()?;
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(invalid("format", format!("unknown format {other:?}; expected csv or json"))),
        }
    }
}

/// `steps` evenly spaced points from `min` to `max` inclusive; a single
/// step yields just `min`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl Grid {
    pub fn new(min: f64, max: f64, steps: usize) -> Self {
        Self { min, max, steps }
    }

    pub fn single(value: f64) -> Self {
        Self::new(value, value, 1)
    }

    /// Parses `min:max:steps`, or a bare number for a single point.
    pub fn parse(field: &str, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.trim().split(':').collect();
        let num = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| invalid(field, format!("{s:?} is not a number")))
        };
        match parts.as_slice() {
            [v] => Ok(Self::single(num(v)?)),
            [a, b, n] => {
                let steps = n
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| invalid(field, format!("{n:?} is not a step count")))?;
                Ok(Self::new(num(a)?, num(b)?, steps))
            }
            _ => Err(invalid(field, format!("{text:?} is not min:max:steps"))),
        }
    }

    pub fn validate(&self, field: &str) -> Result<()> {
        if !self.min.is_finite() || !self.max.is_finite() {
            return Err(invalid(field, "grid bounds must be finite"));
        }
        if self.steps < 1 {
            return Err(invalid(field, "steps must be at least 1"));
        }
        if self.max < self.min {
            return Err(invalid(field, format!("max {} is below min {}", self.max, self.min)));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.min];
        }
        let h = (self.max - self.min) / (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i == self.steps - 1 {
                    self.max
                } else {
                    self.min + h * i as f64
                }
            })
            .collect()
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.min, self.max, self.steps)
    }
}

/// One superposition term of a custom state, momenta along `±e_z`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CustomTerm {
    pub re: f64,
    pub im: f64,
    pub s_a: u8,
    pub omega0_a: f64,
    pub dir_a: f64,
    pub s_b: u8,
    pub omega0_b: f64,
    pub dir_b: f64,
}

fn parse_axis(text: &str) -> Result<f64> {
    match text.trim() {
        "+z" | "z" | "+1" | "1" => Ok(1.0),
        "-z" | "-1" => Ok(-1.0),
        other => Err(invalid("term", format!("direction {other:?} must be +z or -z"))),
    }
}

impl FromStr for CustomTerm {
    type Err = Error;

    /// `re,im,sA,omega0A,dirA,sB,omega0B,dirB`.
    fn from_str(text: &str) -> Result<Self> {
        let f: Vec<&str> = text.split(',').map(str::trim).collect();
        if f.len() != 8 {
            return Err(invalid(
                "term",
                format!("{text:?} needs 8 fields re,im,sA,omega0A,dirA,sB,omega0B,dirB"),
            ));
        }
        let real = |s: &str| {
            s.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| invalid("term", format!("{s:?} is not a finite number")))
        };
        let label = |s: &str| match s {
            "1" => Ok(1),
            "2" => Ok(2),
            _ => Err(invalid("term", format!("helicity label {s:?} must be 1 or 2"))),
        };
        Ok(Self {
            re: real(f[0])?,
            im: real(f[1])?,
            s_a: label(f[2])?,
            omega0_a: real(f[3])?,
            dir_a: parse_axis(f[4])?,
            s_b: label(f[5])?,
            omega0_b: real(f[6])?,
            dir_b: parse_axis(f[7])?,
        })
    }
}

impl CustomTerm {
    fn to_term(self, mass: f64) -> Result<SuperpositionTerm> {
        let slot = |s: u8, w: f64, d: f64| -> Result<Slot> {
            if !(w >= 0.0) {
                return Err(invalid("term", format!("rapidity {w} must be non-negative")));
            }
            Ok(Slot::new(
                FourMomentum::from_rapidity(mass, w, [0.0, 0.0, d])?,
                Helicity::from_label(s)?,
            ))
        };
        Ok(SuperpositionTerm::new(
            Complex64::new(self.re, self.im),
            slot(self.s_a, self.omega0_a, self.dir_a)?,
            slot(self.s_b, self.omega0_b, self.dir_b)?,
        ))
    }
}

/// Everything a sweep needs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepConfig {
    pub scenario: SweepScenario,
    pub omega0: f64,
    pub mass: f64,
    pub omega_grid: Grid,
    pub theta_grid: Grid,
    /// `(f, g)`; chiral scenarios default to `(0, 0)`.
    pub chiral_labels: Option<(u8, u8)>,
    pub output_format: OutputFormat,
    pub measures: Vec<Measure>,
    pub custom_terms: Vec<CustomTerm>,
    /// Fixed boost direction replacing the θ sweep.
    pub direction: Option<[f64; 3]>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            scenario: SweepScenario::Psi1,
            omega0: 1.0,
            mass: 1.0,
            omega_grid: Grid::new(0.0, 5.0, 100),
            theta_grid: Grid::new(0.0, std::f64::consts::FRAC_PI_2, 50),
            chiral_labels: None,
            output_format: OutputFormat::Csv,
            measures: vec![
                Measure::Eg,
                Measure::DeltaEg,
                Measure::Negativity,
                Measure::DeltaNegativity,
            ],
            custom_terms: Vec::new(),
            direction: None,
        }
    }
}

fn parse_real(field: &str, value: &str) -> Result<f64> {
    value
        .trim()
        .parse::<f64>()
        .map_err(|_| invalid(field, format!("{value:?} is not a number")))
}

impl SweepConfig {
    /// Applies one `key=value` setting. `term` appends; every other key
    /// overwrites.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        match key.trim() {
            "scenario" => self.scenario = value.parse()?,
            "omega0" => self.omega0 = parse_real("omega0", value)?,
            "mass" => self.mass = parse_real("mass", value)?,
            "omega" => self.omega_grid = Grid::parse("omega", value)?,
            "theta" => self.theta_grid = Grid::parse("theta", value)?,
            "chiral" => {
                let parts: Vec<&str> = value.split(',').map(str::trim).collect();
                let label = |s: &str| match s {
                    "0" => Ok(0u8),
                    "1" => Ok(1u8),
                    _ => Err(invalid("chiral", format!("label {s:?} must be 0 or 1"))),
                };
                match parts.as_slice() {
                    [f, g] => self.chiral_labels = Some((label(f)?, label(g)?)),
                    _ => return Err(invalid("chiral", format!("{value:?} is not f,g"))),
                }
            }
            "format" => self.output_format = value.parse()?,
            "measures" => self.measures = parse_measures(value)?,
            "term" => self.custom_terms.push(value.parse()?),
            "direction" => {
                let parts: Vec<f64> = value
                    .split(',')
                    .map(|s| parse_real("direction", s))
                    .collect::<Result<_>>()?;
                let [x, y, z] = parts[..] else {
                    return Err(invalid("direction", format!("{value:?} is not x,y,z")));
                };
                self.direction = Some([x, y, z]);
            }
            other => return Err(invalid(other, "unknown configuration key")),
        }
        Ok(())
    }

    /// Applies a line-oriented `key=value` text; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(invalid("config", format!("line {}: expected key=value", n + 1)));
            };
            self.set(k, v)?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        self.apply_text(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.omega0 >= 0.0) || !self.omega0.is_finite() {
            return Err(invalid("omega0", "must be a finite non-negative rapidity"));
        }
        if !(self.mass > 0.0) || !self.mass.is_finite() {
            return Err(invalid("mass", "must be positive"));
        }
        self.omega_grid.validate("omega")?;
        self.theta_grid.validate("theta")?;
        if self.theta_grid.min < 0.0 || self.theta_grid.max > std::f64::consts::PI {
            return Err(invalid("theta", "range must lie within [0, pi]"));
        }
        if self.measures.is_empty() {
            return Err(invalid("measures", "at least one measure is required"));
        }
        if self.chiral_labels.is_some() && !self.scenario.is_chiral() {
            return Err(invalid("chiral", format!("labels given for non-chiral scenario {}", self.scenario)));
        }
        match self.scenario {
            SweepScenario::Custom => {
                if !self.custom_terms.iter().any(|t| t.re != 0.0 || t.im != 0.0) {
                    return Err(invalid("term", "custom scenario needs at least one nonzero term"));
                }
            }
            _ if !self.custom_terms.is_empty() => {
                return Err(invalid("term", format!("terms given for scenario {}", self.scenario)));
            }
            _ => {}
        }
        if let Some(n) = self.direction {
            BoostSpec::along(1.0, n).map_err(|e| invalid("direction", e.to_string()))?;
        }
        Ok(())
    }

    /// Output columns between `omega,theta` and `nu`.
    pub fn columns(&self) -> Vec<String> {
        let mut ms = self.measures.clone();
        ms.sort();
        ms.dedup();
        ms.into_iter().flat_map(Measure::columns).collect()
    }

    /// The unboosted pure density matrix the sweep starts from.
    pub fn initial_state(&self) -> Result<ComplexMatrix> {
        let labels = || {
            let (f, g) = self.chiral_labels.unwrap_or((0, 0));
            ChiralLabelPair::from_labels(f, g)
        };
        match self.scenario {
            SweepScenario::Psi1 => make_scenario(Scenario::Psi1, self.omega0, self.mass)?.density_matrix(),
            SweepScenario::Psi2 => make_scenario(Scenario::Psi2, self.omega0, self.mass)?.density_matrix(),
            SweepScenario::Psi3 => make_scenario(Scenario::Psi3, self.omega0, self.mass)?.density_matrix(),
            SweepScenario::ChiralPsi2 => {
                chiral_project(&make_scenario(Scenario::Psi2, self.omega0, self.mass)?, labels()?)
            }
            SweepScenario::ChiralPsi3 => {
                chiral_project(&make_scenario(Scenario::Psi3, self.omega0, self.mass)?, labels()?)
            }
            SweepScenario::Custom => {
                let terms = self
                    .custom_terms
                    .iter()
                    .map(|t| t.to_term(self.mass))
                    .collect::<Result<Vec<_>>>()?;
                TwoParticleState::new(terms)?.density_matrix()
            }
        }
    }

    /// `(ω, θ, boost)` for every grid point, row-major.
    fn grid_points(&self) -> Result<Vec<(f64, f64, BoostSpec)>> {
        let omegas = self.omega_grid.points();
        let mut out = Vec::new();
        match self.direction {
            Some(n) => {
                let theta = (n[2] / (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt()).acos();
                for &w in &omegas {
                    out.push((w, theta, BoostSpec::along(w, n)?));
                }
            }
            None => {
                let thetas = self.theta_grid.points();
                for &w in &omegas {
                    for &t in &thetas {
                        out.push((w, t, BoostSpec::in_xz_plane(w, t)?));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// One grid point's results; `values` follow [`SweepConfig::columns`].
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub omega: f64,
    pub theta: f64,
    pub values: Vec<(String, f64)>,
    pub nu: f64,
}

impl SweepRow {
    pub fn get(&self, column: &str) -> Option<f64> {
        self.values.iter().find(|(c, _)| c == column).map(|&(_, v)| v)
    }
}

fn row_values(
    measures: &[Measure],
    before: &EntanglementReport,
    after: &EntanglementReport,
) -> Vec<(String, f64)> {
    let mut out = Vec::new();
    for &m in measures {
        match m {
            Measure::Eg => out.push(("eg".into(), after.global_eg)),
            Measure::DeltaEg => out.push(("delta_eg".into(), after.global_eg - before.global_eg)),
            Measure::Negativity => out.push(("negativity".into(), after.negativity_ss)),
            Measure::DeltaNegativity => out.push((
                "delta_negativity".into(),
                after.negativity_ss - before.negativity_ss,
            )),
            Measure::Bloch => {
                for s in Subsystem::ALL {
                    let a: BlochVector = after.bloch[&s];
                    for (c, v) in ["x", "y", "z"].into_iter().zip(a.components()) {
                        out.push((format!("bloch_{}_{c}", s.tag()), v));
                    }
                }
            }
        }
    }
    out
}

fn evaluate(
    rho: &ComplexMatrix,
    before: &EntanglementReport,
    measures: &[Measure],
    (omega, theta, b): (f64, f64, BoostSpec),
) -> Result<SweepRow> {
    let at = |source: Error| Error::AtGridPoint {
        omega,
        theta,
        source: Box::new(source),
    };
    let boosted = boost_two_particle(rho, &b).map_err(at)?;
    let after = EntanglementReport::of_boosted(&boosted).map_err(at)?;
    let values = row_values(measures, before, &after);
    if let Some((c, v)) = values.iter().find(|(_, v)| !v.is_finite()) {
        return Err(at(Error::InvalidParameter {
            field: "row",
            reason: format!("{c} evaluated to {v}"),
        }));
    }
    Ok(SweepRow {
        omega,
        theta,
        values,
        nu: boosted.nu,
    })
}

/// Runs the sweep on rayon's global pool.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    cfg.validate()?;
    let rho = cfg.initial_state()?;
    let before = EntanglementReport::of(&rho, None)?;
    let mut measures = cfg.measures.clone();
    measures.sort();
    measures.dedup();
    cfg.grid_points()?
        .into_par_iter()
        .map(|pt| evaluate(&rho, &before, &measures, pt))
        .collect()
}

/// Runs the sweep on a dedicated pool of `workers` threads.
pub fn run_sweep_with_workers(cfg: &SweepConfig, workers: usize) -> Result<Vec<SweepRow>> {
    if workers == 0 {
        return Err(invalid("workers", "must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| invalid("workers", e.to_string()))?;
    pool.install(|| run_sweep(cfg))
}

/// Magnitudes below this are pipeline rounding noise and emitted as `0`.
pub const EMIT_ZERO_FLOOR: f64 = 1e-12;

/// Rounds to 12 significant digits and prints the shortest form that
/// round-trips; `-0` and values below [`EMIT_ZERO_FLOOR`] print as `0`.
pub fn format_value(v: f64) -> String {
    let rounded: f64 = format!("{v:.11e}").parse().unwrap_or(v);
    if rounded.abs() < EMIT_ZERO_FLOOR {
        "0".to_string()
    } else {
        format!("{rounded}")
    }
}

fn rounded(v: f64) -> f64 {
    format_value(v).parse().unwrap_or(v)
}

pub fn emit_csv(rows: &[SweepRow], out: &mut impl Write) -> Result<()> {
    let first = rows
        .first()
        .ok_or_else(|| invalid("rows", "nothing to emit"))?;
    let mut header = vec!["omega".to_string(), "theta".to_string()];
    header.extend(first.values.iter().map(|(c, _)| c.clone()));
    header.push("nu".into());
    writeln!(out, "{}", header.join(","))?;
    for row in rows {
        let mut cells = vec![format_value(row.omega), format_value(row.theta)];
        cells.extend(row.values.iter().map(|&(_, v)| format_value(v)));
        cells.push(format_value(row.nu));
        writeln!(out, "{}", cells.join(","))?;
    }
    Ok(())
}

pub fn emit_json(rows: &[SweepRow], out: &mut impl Write) -> Result<()> {
    if rows.is_empty() {
        return Err(invalid("rows", "nothing to emit"));
    }
    let array: Vec<serde_json::Value> = rows
        .iter()
        .map(|row| {
            let mut obj = serde_json::Map::new();
            obj.insert("omega".into(), rounded(row.omega).into());
            obj.insert("theta".into(), rounded(row.theta).into());
            for (c, v) in &row.values {
                obj.insert(c.clone(), rounded(*v).into());
            }
            obj.insert("nu".into(), rounded(row.nu).into());
            serde_json::Value::Object(obj)
        })
        .collect();
    serde_json::to_writer_pretty(&mut *out, &array)?;
    writeln!(out)?;
    Ok(())
}

pub fn emit(rows: &[SweepRow], format: OutputFormat, out: &mut impl Write) -> Result<()> {
    match format {
        OutputFormat::Csv => emit_csv(rows, out),
        OutputFormat::Json => emit_json(rows, out),
    }
}

/// Rows parsed back from [`emit_csv`] output.
pub fn parse_csv(text: &str) -> Result<Vec<SweepRow>> {
    let mut lines = text.lines();
    let header: Vec<&str> = lines
        .next()
        .ok_or_else(|| invalid("csv", "missing header"))?
        .split(',')
        .collect();
    if header.len() < 3 || header[0] != "omega" || header[1] != "theta" || header.last() != Some(&"nu") {
        return Err(invalid("csv", "header must be omega,theta,...,nu"));
    }
    lines
        .map(|line| {
            let cells: Vec<f64> = line
                .split(',')
                .map(|c| parse_real("csv", c))
                .collect::<Result<_>>()?;
            if cells.len() != header.len() {
                return Err(invalid("csv", format!("row {line:?} has the wrong width")));
            }
            let n = cells.len();
            Ok(SweepRow {
                omega: cells[0],
                theta: cells[1],
                values: header[2..n - 1]
                    .iter()
                    .zip(&cells[2..n - 1])
                    .map(|(h, &v)| (h.to_string(), v))
                    .collect(),
                nu: cells[n - 1],
            })
        })
        .collect()
}
