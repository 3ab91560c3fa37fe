//! Randomized audit of the bounds over a grid of ambient algebras.
//!
//! Every `(r, e, t, trial)` cell yields one ambient level algebra. Even trials
//! use `t` dense random forms (compressed algebras), odd trials use sums of a
//! random number of generic powers of linear forms. For every `d` in `1..=e`
//! and `c` in `1..=h_d` a generic quotient is drawn and checked against both
//! bounds. Instances run in parallel; each draws from its own stream seeded by
//! `(master seed, instance index)`, and records come out in grid order.

use std::ops::RangeInclusive;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{bounds_report, check_against};
use crate::constructions::{draw_power_sum, generic_presentation, PowerSumSpec};
use crate::error::{Error, Result};
use crate::field::{PrimeField, SeededRng};
use crate::hvector::{join, HVector};
use crate::inverse_system::LevelPresentation;
use crate::poly::monomial_count;

/// Instances whose top degree has more monomials than this are skipped.
pub const DEFAULT_MAX_COLS: usize = 5000;

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub field: PrimeField,
    pub num_vars: RangeInclusive<usize>,
    pub socle_degrees: RangeInclusive<u32>,
    pub types: RangeInclusive<usize>,
    pub trials: usize,
    pub seed: u64,
    pub max_cols: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            field: PrimeField::default(),
            num_vars: 1..=4,
            socle_degrees: 1..=6,
            types: 1..=3,
            trials: 5,
            seed: 0,
            max_cols: DEFAULT_MAX_COLS,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AmbientKind {
    Dense,
    PowerSum,
}

/// One generic quotient checked against the bounds. Vectors run over `0..=d`
/// (gaps are 0 at index 0).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub r: usize,
    pub e: u32,
    pub t: usize,
    pub trial: usize,
    pub kind: AmbientKind,
    pub d: usize,
    pub c: usize,
    pub seed: u64,
    pub ambient_h: Vec<usize>,
    pub quotient_h: Vec<usize>,
    pub lower_int: Vec<usize>,
    pub upper: Vec<usize>,
    pub within: bool,
    pub lower_gap: Vec<i64>,
    pub upper_gap: Vec<i64>,
}

#[derive(Clone, Debug, Default)]
pub struct SweepOutcome {
    pub records: Vec<SweepRecord>,
    /// Human-readable reasons for skipped grid cells, in grid order.
    pub skipped: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepSummary {
    pub records: usize,
    pub violations: usize,
    pub skipped: usize,
    pub min_lower_gap: Option<i64>,
    pub mean_lower_gap: Option<f64>,
    pub min_upper_gap: Option<i64>,
    pub mean_upper_gap: Option<f64>,
}

/// One grid cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepInstance {
    /// Position in grid order; also selects the random stream.
    pub index: usize,
    pub r: usize,
    pub e: u32,
    pub t: usize,
    pub trial: usize,
    pub seed: u64,
}

/// The algebras drawn for one instance.
#[derive(Clone, Debug)]
pub struct InstanceData {
    pub kind: AmbientKind,
    pub ambient: LevelPresentation,
    /// For power-sum ambients, the linear forms that were drawn.
    pub recipe: Option<PowerSumSpec>,
    pub h: HVector,
    /// `(d, c, quotient)` in the order the records are written.
    pub quotients: Vec<(usize, usize, LevelPresentation)>,
}

/// Grid cells in order `r`, `e`, `t`, trial.
pub fn instances(cfg: &SweepConfig) -> Vec<SweepInstance> {
    let mut out = Vec::new();
    for r in cfg.num_vars.clone() {
        for e in cfg.socle_degrees.clone() {
            for t in cfg.types.clone() {
                for trial in 0..cfg.trials {
                    let index = out.len();
                    out.push(SweepInstance {
                        index,
                        r,
                        e,
                        t,
                        trial,
                        seed: SeededRng::derive_seed(cfg.seed, index as u64),
                    });
                }
            }
        }
    }
    out
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepOutcome> {
    if let Some(e_max) = cfg.socle_degrees.clone().last() {
        cfg.field.check_degree(e_max)?;
    }
    let results: Vec<Result<std::result::Result<Vec<SweepRecord>, String>>> =
        instances(cfg).par_iter().map(|inst| records_for(cfg, inst)).collect();
    let mut outcome = SweepOutcome::default();
    for res in results {
        match res? {
            Ok(rs) => outcome.records.extend(rs),
            Err(why) => outcome.skipped.push(why),
        }
    }
    Ok(outcome)
}

type Ambient = (AmbientKind, LevelPresentation, Option<PowerSumSpec>);

fn ambient(cfg: &SweepConfig, inst: &SweepInstance, rng: &mut SeededRng) -> Result<Ambient> {
    if inst.trial.is_multiple_of(2) {
        let p = generic_presentation(cfg.field, inst.r, inst.e, inst.t, rng)?;
        return Ok((AmbientKind::Dense, p, None));
    }
    let counts: Vec<usize> = (0..inst.t).map(|_| rng.gen_range(1..=inst.r + 1)).collect();
    let (recipe, p) = draw_power_sum(cfg.field, &PowerSumSpec::generic(inst.r, inst.e, &counts), rng)?;
    Ok((AmbientKind::PowerSum, p, Some(recipe)))
}

/// Draws the ambient algebra and every generic quotient of one instance.
/// `Err` inside `Ok` is the reason the instance was skipped.
pub fn build_instance(cfg: &SweepConfig, inst: &SweepInstance) -> Result<std::result::Result<InstanceData, String>> {
    let label = format!("r={} e={} t={} trial={}", inst.r, inst.e, inst.t, inst.trial);
    let top = monomial_count(inst.r, inst.e);
    if top > cfg.max_cols {
        return Ok(Err(format!("{label}: {top} columns exceed the ceiling of {}", cfg.max_cols)));
    }
    if inst.t > top {
        return Ok(Err(format!("{label}: type exceeds the {top} forms of degree {}", inst.e)));
    }
    let mut rng = SeededRng::new(inst.seed);
    let (kind, ambient, recipe) = match ambient(cfg, inst, &mut rng) {
        Ok(x) => x,
        Err(err @ (Error::DependentGenerators { .. } | Error::GenericityFailure { .. })) => {
            return Ok(Err(format!("{label}: {err}")))
        }
        Err(err) => return Err(err),
    };
    let spaces = ambient.derivative_spaces()?;
    let h = HVector::new(spaces.iter().map(|s| s.rank()).collect())?;
    let mut quotients = Vec::new();
    for d in 1..=inst.e as usize {
        for c in 1..=spaces[d].rank() {
            quotients.push((d, c, spaces[d].generic_subspace(cfg.field, c, &mut rng)?));
        }
    }
    Ok(Ok(InstanceData {
        kind,
        ambient,
        recipe,
        h,
        quotients,
    }))
}

fn records_for(cfg: &SweepConfig, inst: &SweepInstance) -> Result<std::result::Result<Vec<SweepRecord>, String>> {
    let data = match build_instance(cfg, inst)? {
        Ok(data) => data,
        Err(why) => return Ok(Err(why)),
    };
    let h = &data.h;
    let mut records = Vec::with_capacity(data.quotients.len());
    for (d, c, quotient) in &data.quotients {
        let (d, c) = (*d, *c);
        let big_h = quotient.hvector()?;
        let report = bounds_report(h, d, c)?;
        let verdict = check_against(&big_h, &report);
        let zero = std::iter::once(0);
        records.push(SweepRecord {
            r: inst.r,
            e: inst.e,
            t: inst.t,
            trial: inst.trial,
            kind: data.kind,
            d,
            c,
            seed: inst.seed,
            ambient_h: h.entries().to_vec(),
            quotient_h: big_h.entries().to_vec(),
            lower_int: report.lower_vector(),
            upper: report.upper_vector(),
            within: verdict.pass && big_h.last() == c,
            lower_gap: zero.clone().chain(verdict.lower_gaps()).collect(),
            upper_gap: zero.chain(verdict.upper_gaps()).collect(),
        });
    }
    Ok(Ok(records))
}

/// Column order of the CSV output.
pub const CSV_HEADER: [&str; 15] = [
    "r", "e", "t", "trial", "kind", "d", "c", "seed", "ambient_h", "quotient_h", "lower_int", "upper", "within",
    "lower_gap", "upper_gap",
];

impl SweepOutcome {
    /// Comma-separated records under a fixed header; vectors are dash-joined.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("writing to memory");
        for rec in &self.records {
            let kind = match rec.kind {
                AmbientKind::Dense => "dense",
                AmbientKind::PowerSum => "power-sum",
            };
            w.write_record([
                rec.r.to_string(),
                rec.e.to_string(),
                rec.t.to_string(),
                rec.trial.to_string(),
                kind.to_string(),
                rec.d.to_string(),
                rec.c.to_string(),
                rec.seed.to_string(),
                join(&rec.ambient_h, "-"),
                join(&rec.quotient_h, "-"),
                join(&rec.lower_int, "-"),
                join(&rec.upper, "-"),
                rec.within.to_string(),
                join(&rec.lower_gap, "-"),
                join(&rec.upper_gap, "-"),
            ])
            .expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flushing memory")).expect("csv output is utf-8")
    }

    pub fn violations(&self) -> impl Iterator<Item = &SweepRecord> {
        self.records.iter().filter(|r| !r.within)
    }

    /// Gap statistics over indices `1..=d` of every record.
    pub fn summary(&self) -> SweepSummary {
        let gaps = |f: fn(&SweepRecord) -> &[i64]| -> Vec<i64> {
            self.records.iter().flat_map(|r| f(r)[1..].iter().copied()).collect()
        };
        let lower = gaps(|r| &r.lower_gap);
        let upper = gaps(|r| &r.upper_gap);
        let mean = |v: &[i64]| (!v.is_empty()).then(|| v.iter().sum::<i64>() as f64 / v.len() as f64);
        SweepSummary {
            records: self.records.len(),
            violations: self.violations().count(),
            skipped: self.skipped.len(),
            min_lower_gap: lower.iter().min().copied(),
            mean_lower_gap: mean(&lower),
            min_upper_gap: upper.iter().min().copied(),
            mean_upper_gap: mean(&upper),
        }
    }
}

impl std::fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let opt_i = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
        let opt_f = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.3}"));
        write!(
            f,
            "records={} violations={} skipped={} lower_gap(min={}, mean={}) upper_gap(min={}, mean={})",
            self.records,
            self.violations,
            self.skipped,
            opt_i(self.min_lower_gap),
            opt_f(self.mean_lower_gap),
            opt_i(self.min_upper_gap),
            opt_f(self.mean_upper_gap)
        )
    }
}

/// Parses `a-b` (inclusive) or a single `a`. `b < a` gives an empty range.
pub fn parse_range<T>(s: &str) -> Result<RangeInclusive<T>>
where
    T: std::str::FromStr + Copy,
{
    let bad = || Error::InvalidParameters(format!("bad range {s:?}, expected a or a-b"));
    match s.split_once('-') {
        Some((a, b)) => {
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().parse().map_err(|_| bad())?;
            Ok(a..=b)
        }
        None => {
            let a = s.trim().parse().map_err(|_| bad())?;
            Ok(a..=a)
        }
    }
}
