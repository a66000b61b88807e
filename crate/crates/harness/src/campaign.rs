//! Extended Turán stability campaigns and their JSONL reports.

use std::fmt;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{bail, ensure, Context, Result};
use hurwitz_core::sequences::generate;
use hurwitz_core::stability::is_weakly_hurwitz;
use hurwitz_core::turan::{extended_turan, transform};
use hurwitz_core::{ExactPoly, Rational, SequenceSpec, StabilityCertificate};
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// Size limits for a campaign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Tier {
    /// `k ≤ 25, n ≤ 3`, the routine gate.
    #[default]
    Desk,
    /// `k ≤ 50, n ≤ 5`, opt-in long run.
    Full,
}

impl Tier {
    pub fn limits(self) -> (usize, usize) {
        match self {
            Tier::Desk => (25, 3),
            Tier::Full => (50, 5),
        }
    }
}

impl FromStr for Tier {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "desk" => Ok(Tier::Desk),
            "full" => Ok(Tier::Full),
            _ => bail!("unknown tier {s:?} (desk|full)"),
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tier::Desk => "desk",
            Tier::Full => "full",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub family: SequenceSpec,
    pub k_max: usize,
    pub n_max: usize,
    pub reflect: bool,
    pub shift: Rational,
    pub jobs: usize,
    pub tier: Tier,
    /// Measure per-cell wall time. Off by default so reports are reproducible byte for byte.
    pub timing: bool,
    /// Test hook: `(k, n, poly)` replaces the expression of that cell.
    pub inject: Vec<(usize, usize, ExactPoly)>,
}

impl CampaignConfig {
    pub fn new(family: SequenceSpec, k_max: usize, n_max: usize) -> Self {
        CampaignConfig {
            family,
            k_max,
            n_max,
            reflect: false,
            shift: Rational::zero(),
            jobs: 1,
            tier: Tier::Desk,
            timing: false,
            inject: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        ensure!(self.jobs >= 1, "jobs must be at least 1");
        ensure!(self.n_max >= 1, "n_max must be at least 1");
        let (k_lim, n_lim) = self.tier.limits();
        ensure!(
            self.k_max <= k_lim && self.n_max <= n_lim,
            "k_max={} n_max={} exceed the {} tier (k ≤ {k_lim}, n ≤ {n_lim})",
            self.k_max,
            self.n_max,
            self.tier
        );
        self.family.validate()?;
        Ok(())
    }

    /// Whether the (family, reflection) pair is conjectured or proved stable for every cell.
    pub fn conjectured_stable(&self) -> bool {
        self.shift.is_zero()
            && matches!(
                (&self.family, self.reflect),
                (SequenceSpec::Bell, false) | (SequenceSpec::Laguerre, true) | (SequenceSpec::Bessel, false)
            )
    }
}

/// The certificate fields that go into a report line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub gcd_degree: usize,
    pub gcd_all_real: bool,
    pub p_upper: usize,
    pub chain_length: usize,
    pub v_plus: usize,
    pub v_minus: usize,
}

impl From<&StabilityCertificate> for CertificateSummary {
    fn from(c: &StabilityCertificate) -> Self {
        CertificateSummary {
            gcd_degree: c.gcd_degree,
            gcd_all_real: c.gcd_all_real,
            p_upper: c.p_upper,
            chain_length: c.chain_length,
            v_plus: c.v_plus,
            v_minus: c.v_minus,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub schema: u32,
    pub family: String,
    pub k: usize,
    pub n: usize,
    pub reflect: bool,
    pub shift: String,
    pub degree: usize,
    pub verdict: bool,
    /// A false verdict where stability is conjectured: a counterexample candidate.
    pub flagged: bool,
    pub certificate: CertificateSummary,
    pub elapsed_ms: Option<u64>,
}

impl ReportRecord {
    fn sort_key(&self) -> (&str, usize, usize) {
        (&self.family, self.k, self.n)
    }
}

fn run_cell(cfg: &CampaignConfig, seq: &[ExactPoly], k: usize, n: usize) -> Result<ReportRecord> {
    let start = Instant::now();
    let expr = match cfg.inject.iter().find(|(ik, in_, _)| *ik == k && *in_ == n) {
        Some((_, _, p)) => p.clone(),
        None => transform(&extended_turan(seq, k, n)?, cfg.reflect, &cfg.shift),
    };
    let cert = is_weakly_hurwitz(&expr).with_context(|| format!("cell k={k} n={n}"))?;
    let elapsed = cfg.timing.then(|| start.elapsed().as_millis() as u64);
    Ok(ReportRecord {
        schema: SCHEMA_VERSION,
        family: cfg.family.label().to_string(),
        k,
        n,
        reflect: cfg.reflect,
        shift: cfg.shift.to_string(),
        degree: cert.degree,
        verdict: cert.verdict,
        flagged: cfg.conjectured_stable() && !cert.verdict,
        certificate: CertificateSummary::from(&cert),
        elapsed_ms: elapsed,
    })
}

/// One record per `(k, n)` with `0 ≤ k ≤ k_max`, `1 ≤ n ≤ n_max`, sorted.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<Vec<ReportRecord>> {
    cfg.validate()?;
    let seq = generate(&cfg.family, cfg.k_max + 2 * cfg.n_max)?;
    let cells: Vec<(usize, usize)> =
        (0..=cfg.k_max).flat_map(|k| (1..=cfg.n_max).map(move |n| (k, n))).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build()?;
    let mut records = pool.install(|| {
        cells
            .par_iter()
            .map(|&(k, n)| run_cell(cfg, &seq, k, n))
            .collect::<Result<Vec<_>>>()
    })?;
    sort_records(&mut records);
    Ok(records)
}

pub fn sort_records(records: &mut [ReportRecord]) {
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

/// Writes records as JSONL sorted by `(family, k, n)`; nothing at all for an empty list.
pub fn emit_reports(records: &[ReportRecord], path: &Path) -> Result<()> {
    let mut sorted = records.to_vec();
    sort_records(&mut sorted);
    let file = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
    let mut out = BufWriter::new(file);
    for r in &sorted {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n").with_context(|| format!("writing {}", path.display()))?;
    }
    out.flush().with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn read_reports(path: &Path) -> Result<Vec<ReportRecord>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.lines()
        .map(|l| serde_json::from_str(l).with_context(|| format!("bad record in {}", path.display())))
        .collect()
}
