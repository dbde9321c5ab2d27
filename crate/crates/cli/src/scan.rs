//! The `scan` command: sweeps a conjecture over a parameter grid looking for
//! counterexamples.

use std::collections::BTreeMap;

use franel_core::congruences as cg;
use franel_core::{Family, SequenceStore};

use crate::error::{CliError, Result};
use crate::parallel::run_tasks;
use crate::report::ScanReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjecture {
    /// `sum (-1)^(rk) (3k+2) f_k^(r) ≡ 0 (mod 2n)`.
    Conj1,
    /// Odd powers `2r+1`, modulo `4n`, `n >= 2`.
    Conj1Odd,
    /// Even powers `2r`, modulo `n(n+1)`.
    Conj1Even,
    /// Multinomial version modulo `mn`.
    Conj2,
}

impl Conjecture {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Conj1 => "conj1",
            Self::Conj1Odd => "conj1-odd",
            Self::Conj1Even => "conj1-even",
            Self::Conj2 => "conj2",
        }
    }

    /// `(nmax, rmax, mmax)` used when a bound is not given.
    pub fn default_bounds(&self) -> (u64, u64, u64) {
        match self {
            Self::Conj1 => (150, 6, 1),
            Self::Conj1Odd | Self::Conj1Even => (150, 3, 1),
            Self::Conj2 => (80, 4, 5),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub conjecture: Conjecture,
    pub nmax: u64,
    pub rmax: u64,
    /// Only used by [`Conjecture::Conj2`].
    pub mmax: u64,
    pub jobs: usize,
}

impl ScanConfig {
    pub fn new(conjecture: Conjecture) -> Self {
        let (nmax, rmax, mmax) = conjecture.default_bounds();
        Self {
            conjecture,
            nmax,
            rmax,
            mmax,
            jobs: 1,
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Point {
    m: u64,
    n: u64,
    r: u64,
}

/// The families each series draws on, and the data-section key for each
/// `(m, r)` series.
fn series(config: &ScanConfig) -> Vec<(u64, u64, Family)> {
    let c = config.conjecture;
    let rs = match c {
        Conjecture::Conj1Even => 1..=config.rmax,
        _ => 0..=config.rmax,
    };
    match c {
        Conjecture::Conj1 => rs.map(|r| (1, r, Family::PowerSum { r })).collect(),
        Conjecture::Conj1Odd => rs.map(|r| (1, r, Family::PowerSum { r: 2 * r + 1 })).collect(),
        Conjecture::Conj1Even => rs.map(|r| (1, r, Family::PowerSum { r: 2 * r })).collect(),
        Conjecture::Conj2 => (1..=config.mmax)
            .flat_map(|m| rs.clone().map(move |r| (m, r, Family::Multinomial { m, r })))
            .collect(),
    }
}

fn partial_sum(store: &SequenceStore, c: Conjecture, p: Point) -> franel_core::Integer {
    match c {
        Conjecture::Conj1 => cg::conj1_sum(store, p.n, p.r),
        Conjecture::Conj1Odd => cg::conj1_sum(store, p.n, 2 * p.r + 1),
        Conjecture::Conj1Even => cg::conj1_sum(store, p.n, 2 * p.r),
        Conjecture::Conj2 => cg::conj2_sum(store, p.m, p.n, p.r),
    }
}

fn data_key(c: Conjecture, m: u64, r: u64) -> String {
    match c {
        Conjecture::Conj1 => format!("partial_sums[r={r}]"),
        Conjecture::Conj1Odd => format!("partial_sums[r={r},power={}]", 2 * r + 1),
        Conjecture::Conj1Even => format!("partial_sums[r={r},power={}]", 2 * r),
        Conjecture::Conj2 => format!("partial_sums[m={m},r={r}]"),
    }
}

pub fn run_scan(store: &SequenceStore, config: &ScanConfig) -> Result<ScanReport> {
    let c = config.conjecture;
    if config.nmax == 0 || config.mmax == 0 {
        return Err(CliError::Usage("--nmax and --mmax must be at least 1".into()));
    }
    if c == Conjecture::Conj1Even && config.rmax == 0 {
        return Err(CliError::Usage("conj1-even needs --rmax >= 1".into()));
    }
    let nmin = if c == Conjecture::Conj1Odd { 2 } else { 1 };
    let series = series(config);

    // fill the tables before fanning out so workers only read
    run_tasks(config.jobs, &series, |(_, _, family)| {
        store.values(*family, config.nmax as usize);
        Ok(Vec::<()>::new())
    })?;

    let points: Vec<Point> = series
        .iter()
        .flat_map(|&(m, r, _)| (nmin..=config.nmax).map(move |n| Point { m, n, r }))
        .collect();
    let verdicts = run_tasks(config.jobs, &points, |p| {
        let v = match c {
            Conjecture::Conj1 => cg::conj1_check(store, p.n, p.r)?,
            Conjecture::Conj1Odd => cg::conj1_odd_strong(store, p.n, p.r)?,
            Conjecture::Conj1Even => cg::conj1_even_combined(store, p.n, p.r)?,
            Conjecture::Conj2 => cg::conj2_check(store, p.m, p.n, p.r)?,
        };
        Ok(vec![v])
    })?;

    let mut grid = BTreeMap::new();
    grid.insert("n".to_string(), format!("{nmin}..={}", config.nmax));
    let rmin = if c == Conjecture::Conj1Even { 1 } else { 0 };
    grid.insert("r".to_string(), format!("{rmin}..={}", config.rmax));
    if c == Conjecture::Conj2 {
        grid.insert("m".to_string(), format!("1..={}", config.mmax));
        let proved: Vec<String> = series
            .iter()
            .filter(|(m, r, _)| cg::conj2_is_proved(*m, *r))
            .map(|(m, r, _)| format!("({m},{r})"))
            .collect();
        grid.insert("proved_pairs".to_string(), proved.join(" "));
    }

    let mut report = ScanReport::new(c.name(), grid, verdicts);
    for &(m, r, _) in &series {
        let sums = (1..=config.nmax)
            .map(|n| partial_sum(store, c, Point { m, n, r }).to_string())
            .collect();
        report.data.insert(data_key(c, m, r), sums);
    }
    Ok(report)
}
