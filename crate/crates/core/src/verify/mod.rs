//! Differential check of the identity against a full eigendecomposition.

mod campaign;
mod compare;
mod oracle;

pub use campaign::{campaign, campaign_with, CampaignEntry, CampaignResult, CampaignSummary};
pub use compare::{compare, compare_detailed, Comparison, ComparisonReport, INTERLACING_RTOL};
pub use oracle::{oracle_magnitudes, oracle_magnitudes_with};
