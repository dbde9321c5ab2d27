//! The `verify` command: fixed batteries of identity, theorem and lemma checks.

use std::collections::BTreeMap;

use franel_core::arith::primes_up_to;
use franel_core::congruences as cg;
use franel_core::identities::{self as id, Strehl};
use franel_core::{SequenceStore, Verdict};

use crate::error::{CliError, Result};
use crate::parallel::run_tasks;
use crate::report::{errata, ScanReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Theorems,
    Lemmas,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Identities => "identities",
            Self::Theorems => "theorems",
            Self::Lemmas => "lemmas",
            Self::All => "all",
        }
    }

    fn includes(&self, other: Suite) -> bool {
        *self == Suite::All || *self == other
    }
}

pub const DEFAULT_IDENTITY_NMAX: u64 = 200;
pub const DEFAULT_THEOREM_NMAX: u64 = 300;
pub const DEFAULT_PMAX: u64 = 150;
pub const FOATA_NMAX: u64 = 60;
pub const GZ_NMAX: u64 = 150;
pub const GZ_RMAX: u64 = 5;
pub const CALKIN_NMAX: u64 = 60;
pub const CALKIN_MMAX: u64 = 4;
pub const CALKIN_RMAX: u64 = 3;
pub const MNR_MMAX: u64 = 5;
pub const MNR_RMAX: u64 = 2;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub suite: Suite,
    /// Overrides both per-suite defaults when set.
    pub nmax: Option<u64>,
    pub pmax: u64,
    pub jobs: usize,
}

impl VerifyConfig {
    pub fn new(suite: Suite) -> Self {
        Self {
            suite,
            nmax: None,
            pmax: DEFAULT_PMAX,
            jobs: 1,
        }
    }
}

/// One unit of work; each expands to one or more verdicts.
#[derive(Clone, Copy, Debug)]
enum Task {
    Foata(u64),
    Mac(u64),
    Mac2(u64),
    Induc(u64, u64),
    Sum1(u64),
    Sum2(u64),
    Strehl(u64, Strehl),
    ClosedForms(u64),
    Mnr(u64, u64, u64),
    Sunmk3(u64),
    CubeSplit(u64),
    HalfSymmetry(u64),
    Alternating(u64),
    Refined(u64),
    Mod4(u64),
    P5(u64),
    JarvisVerrill(u64, u64),
    SunIntro(u64, u32),
    Gz(u64, u64),
    Calkin(u64, u64, u64),
    LemmaSun(u64),
    LemmaSunvar(u64),
    LemmaSun2(u64),
    LemmaFpmod(u64),
    Decomposition(u64),
}

impl Task {
    fn run(self, s: &SequenceStore) -> franel_core::Result<Vec<Verdict>> {
        let one = |v: Verdict| Ok(vec![v]);
        match self {
            Task::Foata(n) => one(id::verify_foata(n)),
            Task::Mac(n) => one(id::verify_mac(s, n)),
            Task::Mac2(n) => one(id::verify_mac2(s, n)),
            Task::Induc(n, k) => one(id::verify_induc(s, n, k)?),
            Task::Sum1(n) => one(id::verify_sum1(s, n)?),
            Task::Sum2(n) => one(id::verify_sum2(s, n)?),
            Task::Strehl(n, w) => one(id::verify_strehl(s, n, w)),
            Task::ClosedForms(n) => id::verify_closed_forms(s, n),
            Task::Mnr(m, n, r) => id::verify_mnr_identities(s, m, n, r),
            Task::Sunmk3(n) => one(id::verify_sunmk3(s, n)?),
            Task::CubeSplit(n) => one(id::verify_cube_split(s, n)?),
            Task::HalfSymmetry(n) => id::verify_half_symmetry(s, n),
            Task::Alternating(n) => one(cg::thm_alternating_sum(s, n)?),
            Task::Refined(n) => one(cg::thm_refined(s, n)?),
            Task::Mod4(n) => one(cg::franel_mod4(s, n)?),
            Task::P5(p) => one(cg::thm_p5(s, p)?),
            Task::JarvisVerrill(p, n) => one(cg::jarvis_verrill(s, p, n)?),
            Task::SunIntro(p, j) => one(cg::sun_intro(s, p, j)?),
            Task::Gz(n, r) => one(cg::gz_congruence(s, n, r)?),
            Task::Calkin(n, m, r) => one(cg::calkin_congruence(s, n, m, r)?),
            Task::LemmaSun(p) => one(cg::lemma_sun(s, p)?),
            Task::LemmaSunvar(p) => one(cg::lemma_sunvar(s, p)?),
            Task::LemmaSun2(p) => one(cg::lemma_sun2(s, p)?),
            Task::LemmaFpmod(p) => one(cg::lemma_fpmod(s, p)?),
            Task::Decomposition(p) => cg::verify_p5_decomposition(s, p),
        }
    }
}

fn identity_tasks(nmax: u64) -> Vec<Task> {
    let mut t = Vec::new();
    for n in 1..=nmax {
        if n <= FOATA_NMAX {
            t.push(Task::Foata(n));
        }
        t.extend([
            Task::Mac(n),
            Task::Mac2(n),
            Task::Sum1(n),
            Task::Sum2(n),
            Task::Strehl(n, Strehl::First),
            Task::Strehl(n, Strehl::Second),
            Task::ClosedForms(n),
            Task::Sunmk3(n),
            Task::CubeSplit(n),
            Task::HalfSymmetry(n),
        ]);
        t.extend((0..=n / 2).map(|k| Task::Induc(n, k)));
        for m in 1..=MNR_MMAX {
            t.extend((0..=MNR_RMAX).map(|r| Task::Mnr(m, n, r)));
        }
    }
    t
}

fn theorem_tasks(nmax: u64, primes: &[u64]) -> Vec<Task> {
    let mut t = Vec::new();
    for n in 1..=nmax {
        t.extend([Task::Alternating(n), Task::Refined(n), Task::Mod4(n)]);
        if n <= GZ_NMAX {
            t.extend((0..=GZ_RMAX).map(|r| Task::Gz(n, r)));
        }
        if n <= CALKIN_NMAX {
            for m in 1..=CALKIN_MMAX {
                t.extend((1..=CALKIN_RMAX).map(|r| Task::Calkin(n, m, r)));
            }
        }
    }
    for &p in primes {
        if p > 2 {
            t.extend((0..p).map(|n| Task::JarvisVerrill(p, n)));
        }
        if p > 3 {
            t.push(Task::P5(p));
            t.extend((0..=2).map(|j| Task::SunIntro(p, j)));
        }
    }
    t
}

fn lemma_tasks(primes: &[u64]) -> Vec<Task> {
    primes
        .iter()
        .filter(|&&p| p > 3)
        .flat_map(|&p| {
            [
                Task::LemmaSun(p),
                Task::LemmaSunvar(p),
                Task::LemmaSun2(p),
                Task::LemmaFpmod(p),
                Task::Decomposition(p),
            ]
        })
        .collect()
}

pub fn run_verify(store: &SequenceStore, config: &VerifyConfig) -> Result<ScanReport> {
    if config.nmax == Some(0) {
        return Err(CliError::Usage("--nmax must be at least 1".into()));
    }
    if config.pmax < 5 {
        return Err(CliError::Usage("--pmax must be at least 5".into()));
    }
    let suite = config.suite;
    let primes = primes_up_to(config.pmax);
    let mut grid = BTreeMap::new();
    let mut tasks = Vec::new();
    let mut notes = Vec::new();

    if suite.includes(Suite::Identities) {
        let nmax = config.nmax.unwrap_or(DEFAULT_IDENTITY_NMAX);
        grid.insert("identities.n".into(), format!("1..={nmax}"));
        grid.insert("identities.foata_n".into(), format!("1..={}", nmax.min(FOATA_NMAX)));
        grid.insert("identities.mnr".into(), format!("m in 1..={MNR_MMAX}, r in 0..={MNR_RMAX}"));
        tasks.extend(identity_tasks(nmax));
        notes.push(errata::MULTINOMIAL_FIRST_POWER.to_string());
    }
    if suite.includes(Suite::Theorems) {
        let nmax = config.nmax.unwrap_or(DEFAULT_THEOREM_NMAX);
        grid.insert("theorems.n".into(), format!("1..={nmax}"));
        grid.insert("theorems.p".into(), format!("primes <= {}", config.pmax));
        grid.insert(
            "theorems.gz".into(),
            format!("n <= {}, r in 0..={GZ_RMAX}", nmax.min(GZ_NMAX)),
        );
        grid.insert(
            "theorems.calkin".into(),
            format!("n <= {}, m in 1..={CALKIN_MMAX}, r in 1..={CALKIN_RMAX}", nmax.min(CALKIN_NMAX)),
        );
        tasks.extend(theorem_tasks(nmax, &primes));
        notes.push(errata::JARVIS_VERRILL_ODD_PRIME.to_string());
    }
    if suite.includes(Suite::Lemmas) {
        grid.insert("lemmas.p".into(), format!("primes 5..={}", config.pmax));
        tasks.extend(lemma_tasks(&primes));
        notes.push(errata::DECOMPOSITION_UPPER_LIMIT.to_string());
    }

    let verdicts = run_tasks(config.jobs, &tasks, |t| t.run(store))?;
    let mut report = ScanReport::new(suite.name(), grid, verdicts);
    report.errata_notes = notes;
    Ok(report)
}
