use rayon::prelude::*;
use serde::Serialize;

use super::compare::{compare_detailed, ComparisonReport};
use crate::io::{generate, GeneratorSpec};

/// One campaign run: either a report, or the error that stopped it.
#[derive(Clone, Debug, Serialize)]
pub struct CampaignEntry {
    pub spec: GeneratorSpec,
    pub report: Option<ComparisonReport>,
    /// `kind: message` of the failure, when the run did not complete.
    pub error: Option<String>,
}

impl CampaignEntry {
    pub fn passed(&self) -> bool {
        self.report.as_ref().is_some_and(|r| r.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CampaignSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
    pub worst_error: f64,
    pub worst_error_provenance: Option<String>,
    /// Normalized minimum gap of the matrix with the worst error.
    pub gap_at_worst_error: Option<f64>,
    /// Smallest normalized minimum gap over all completed runs.
    pub min_normalized_gap: Option<f64>,
    pub max_row_sum_error: f64,
    pub max_col_sum_error: f64,
    pub all_interlacing_pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignResult {
    pub summary: CampaignSummary,
    pub entries: Vec<CampaignEntry>,
}

impl CampaignResult {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports hold finite values");
        s.push('\n');
        s
    }
}

/// Runs `compare` on every generated matrix. Runs are independent and may
/// execute concurrently; entries come back in input order.
pub fn campaign(specs: &[GeneratorSpec], tol: f64) -> CampaignResult {
    campaign_with(specs, tol, None)
}

pub fn campaign_with(specs: &[GeneratorSpec], tol: f64, cluster_tol: Option<f64>) -> CampaignResult {
    let entries: Vec<CampaignEntry> = specs
        .par_iter()
        .map(|spec| {
            let outcome = generate(spec)
                .and_then(|a| compare_detailed(&a, tol, cluster_tol, &spec.provenance()).map(|c| c.report));
            match outcome {
                Ok(report) => CampaignEntry { spec: spec.clone(), report: Some(report), error: None },
                Err(e) => CampaignEntry { spec: spec.clone(), report: None, error: Some(format!("{}: {e}", e.kind())) },
            }
        })
        .collect();
    let summary = summarize(&entries);
    CampaignResult { summary, entries }
}

fn summarize(entries: &[CampaignEntry]) -> CampaignSummary {
    let mut s = CampaignSummary {
        total: entries.len(),
        passed: 0,
        failed: 0,
        errored: 0,
        worst_error: 0.0,
        worst_error_provenance: None,
        gap_at_worst_error: None,
        min_normalized_gap: None,
        max_row_sum_error: 0.0,
        max_col_sum_error: 0.0,
        all_interlacing_pass: true,
    };
    for e in entries {
        let Some(r) = &e.report else {
            s.errored += 1;
            continue;
        };
        if r.pass {
            s.passed += 1;
        } else {
            s.failed += 1;
        }
        if s.worst_error_provenance.is_none() || r.max_abs_error > s.worst_error {
            s.worst_error = r.max_abs_error;
            s.worst_error_provenance = Some(r.provenance.clone());
            s.gap_at_worst_error = Some(r.min_normalized_gap);
        }
        s.min_normalized_gap = Some(s.min_normalized_gap.map_or(r.min_normalized_gap, |g| g.min(r.min_normalized_gap)));
        s.max_row_sum_error = s.max_row_sum_error.max(r.row_sum_error);
        s.max_col_sum_error = s.max_col_sum_error.max(r.col_sum_error);
        s.all_interlacing_pass &= r.interlacing_pass;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::GeneratorKind;

    #[test]
    fn single_diagonal() {
        let r = campaign(&[GeneratorSpec::new(GeneratorKind::Diagonal, 3, 0)], 1e-12);
        assert_eq!(r.summary.passed, 1);
        assert_eq!(r.summary.worst_error, 0.0);
    }

    #[test]
    fn invalid_spec_is_recorded_not_thrown() {
        let r = campaign(&[GeneratorSpec::new(GeneratorKind::Goe, 0, 0)], 1e-8);
        assert_eq!(r.summary.errored, 1);
        assert!(r.entries[0].error.as_deref().unwrap().starts_with("invalid-spec"));
    }

    #[test]
    fn clustered_pair_of_pairs() {
        let r = campaign(&[GeneratorSpec::clustered(vec![2, 2], 4)], 1e-6);
        assert_eq!(r.summary.passed, 1, "{:?}", r.entries[0]);
        assert_eq!(r.entries[0].report.as_ref().unwrap().degenerate_clusters, 2);
    }
}
