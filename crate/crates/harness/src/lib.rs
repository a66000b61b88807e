//! Command-line harness: verification suites, stability campaigns and JSONL reports.

pub mod campaign;
pub mod family;
pub mod suites;

pub use campaign::{emit_reports, run_campaign, CampaignConfig, ReportRecord, Tier};
pub use suites::run_suite;
