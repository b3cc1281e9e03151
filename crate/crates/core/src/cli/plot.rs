use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scanner::{scan_profile, ScanResult};
use crate::serde_util::fmt12;
use crate::torus_lab::DiscrepancyRow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum PlotKind {
    DensityVsEps,
    SupnormHistogram,
    #[serde(rename = "discrepancy_vs_N")]
    #[value(name = "discrepancy_vs_N")]
    DiscrepancyVsN,
    SmoothingErrorVsN,
}

impl PlotKind {
    pub fn file_name(&self) -> &'static str {
        match self {
            PlotKind::DensityVsEps => "density_vs_eps.csv",
            PlotKind::SupnormHistogram => "supnorm_histogram.csv",
            PlotKind::DiscrepancyVsN => "discrepancy_vs_N.csv",
            PlotKind::SmoothingErrorVsN => "smoothing_error_vs_n.csv",
        }
    }
}

/// Smoothing error at one `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SmoothingRow {
    pub n: usize,
    pub phi_error: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hurwitz_error: Option<f64>,
}

/// Results that can be turned into plot data.
#[derive(Debug, Clone, Copy)]
pub enum PlotSource<'a> {
    Scan { result: &'a ScanResult, epsilons: &'a [f64], bins: usize },
    Discrepancy(&'a [DiscrepancyRow]),
    Smoothing(&'a [SmoothingRow]),
}

impl PlotSource<'_> {
    fn name(&self) -> &'static str {
        match self {
            PlotSource::Scan { .. } => "scan result",
            PlotSource::Discrepancy(_) => "discrepancy table",
            PlotSource::Smoothing(_) => "smoothing table",
        }
    }
}

/// Comma-separated table with a header row.
pub fn emit_plot_data(source: PlotSource<'_>, kind: PlotKind) -> Result<String> {
    let mut out = String::new();
    match (source, kind) {
        (PlotSource::Scan { result, epsilons, .. }, PlotKind::DensityVsEps) => {
            out.push_str("epsilon,hit_count,density\n");
            for l in result.levels(epsilons) {
                writeln!(out, "{},{},{}", fmt12(l.epsilon), l.hit_count, fmt12(l.density)).unwrap();
            }
        }
        (PlotSource::Scan { result, bins, .. }, PlotKind::SupnormHistogram) => {
            let h = scan_profile(result, bins)?;
            out.push_str("bin_lo,bin_hi,count\n");
            for (i, c) in h.counts.iter().enumerate() {
                writeln!(out, "{},{},{}", fmt12(h.edges[i]), fmt12(h.edges[i + 1]), c).unwrap();
            }
        }
        (PlotSource::Discrepancy(rows), PlotKind::DiscrepancyVsN) => {
            out.push_str("prime,N,discrepancy\n");
            for r in rows {
                writeln!(out, "{},{},{}", r.prime, r.n, fmt12(r.discrepancy)).unwrap();
            }
        }
        (PlotSource::Smoothing(rows), PlotKind::SmoothingErrorVsN) => {
            out.push_str("n,phi_error,hurwitz_error\n");
            for r in rows {
                let hz = r.hurwitz_error.map(fmt12).unwrap_or_default();
                writeln!(out, "{},{},{}", r.n, fmt12(r.phi_error), hz).unwrap();
            }
        }
        (source, kind) => {
            return Err(Error::KindMismatch(format!("{kind:?} cannot be drawn from a {}", source.name())));
        }
    }
    Ok(out)
}

/// Per-shift distances `k, max_sup`.
pub fn per_k_table(result: &ScanResult) -> String {
    let mut out = String::from("k,max_sup\n");
    for (k, d) in result.per_k_max_sup.iter().enumerate() {
        writeln!(out, "{k},{}", fmt12(*d)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scanner::PhiMethod;

    fn result() -> ScanResult {
        ScanResult {
            n: 4,
            epsilon: 0.5,
            per_k_max_sup: vec![0.0, 0.3, 0.6, 0.9, 1.2],
            hit_count: 2,
            density: 0.4,
            mode: "equal".into(),
            phi_method: PhiMethod::Continued,
            override_admissibility: true,
            components: vec![],
            hits: vec![],
        }
    }

    #[test]
    fn row_counts() {
        let r = result();
        let eps = [0.2, 0.5, 0.8, 1.0];
        let src = PlotSource::Scan { result: &r, epsilons: &eps, bins: 10 };
        let d = emit_plot_data(src, PlotKind::DensityVsEps).unwrap();
        assert_eq!(d.lines().count(), 5);
        assert_eq!(d.lines().nth(2).unwrap(), "5.00000000000e-1,2,4.00000000000e-1");
        let h = emit_plot_data(src, PlotKind::SupnormHistogram).unwrap();
        assert_eq!(h.lines().count(), 11);
        assert_eq!(per_k_table(&r).lines().count(), 6);
    }

    #[test]
    fn mismatch() {
        let r = result();
        let src = PlotSource::Scan { result: &r, epsilons: &[0.1], bins: 3 };
        assert!(matches!(emit_plot_data(src, PlotKind::DiscrepancyVsN), Err(Error::KindMismatch(_))));
        assert!(matches!(
            emit_plot_data(PlotSource::Smoothing(&[]), PlotKind::DensityVsEps),
            Err(Error::KindMismatch(_))
        ));
    }
}
