//! Parameter sweeps, treatment predictions, and the stable file formats
//! behind the command-line interface.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::equilibrium::{
    classify_region, enumerate_equilibria, region_boundaries, FineRegime, ManagerRegime,
};
use crate::model::{ModelError, ModelParams};
use crate::sim::Treatment;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("invalid sweep range: {0}")]
    InvalidRange(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// An inclusive linear range with a fixed number of grid points.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RangeSpec {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl RangeSpec {
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self, SweepError> {
        let range = RangeSpec { min, max, steps };
        range.validate()?;
        Ok(range)
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        if !(self.min.is_finite() && self.max.is_finite() && self.min <= self.max) {
            return Err(SweepError::InvalidRange(format!(
                "need finite min <= max, got {}..{}",
                self.min, self.max
            )));
        }
        if self.steps < 2 {
            return Err(SweepError::InvalidRange("need at least 2 steps".into()));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        let span = self.max - self.min;
        (0..self.steps)
            .map(|k| self.min + span * k as f64 / (self.steps - 1) as f64)
            .collect()
    }
}

/// File format of sweep outputs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Grid description for the region map, as accepted on the command line or
/// from a JSON config file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub delta: f64,
    pub revenue_share: f64,
    /// Liability-share grid; must stay within [0, 1].
    pub eta_range: RangeSpec,
    /// Expected-fine (per unit of the prize) grid; must be non-negative.
    pub pf_range: RangeSpec,
    /// Optional (audit probability, prize) pair; when present each row also
    /// carries the raw fine that produces its `pf_rel`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fine_scale: Option<FineScale>,
}

/// Converts normalized expected fines back to raw fine levels.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FineScale {
    pub audit_prob: f64,
    pub prize: f64,
}

impl FineScale {
    pub fn fine_for(&self, pf_rel: f64) -> f64 {
        pf_rel * self.prize / self.audit_prob
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), SweepError> {
        if !(self.delta.is_finite() && self.delta > 1.0) {
            return Err(SweepError::InvalidRange(format!("delta must exceed 1, got {}", self.delta)));
        }
        if !(self.revenue_share > 0.0 && self.revenue_share < 1.0) {
            return Err(SweepError::InvalidRange(format!(
                "revenue_share must lie in (0, 1), got {}",
                self.revenue_share
            )));
        }
        self.eta_range.validate()?;
        self.pf_range.validate()?;
        if self.eta_range.min < 0.0 || self.eta_range.max > 1.0 {
            return Err(SweepError::InvalidRange("eta range must stay within [0, 1]".into()));
        }
        if self.pf_range.min < 0.0 {
            return Err(SweepError::InvalidRange("pf range must be non-negative".into()));
        }
        if let Some(scale) = self.fine_scale {
            if !(scale.audit_prob > 0.0 && scale.audit_prob <= 1.0 && scale.prize > 0.0) {
                return Err(SweepError::InvalidRange(
                    "fine scale needs audit_prob in (0, 1] and prize > 0".into(),
                ));
            }
        }
        Ok(())
    }
}

/// One grid point of the region map.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionMapRow {
    pub eta: f64,
    pub pf_rel: f64,
    pub fine_regime: FineRegime,
    pub manager_regime: ManagerRegime,
    pub mu_hat: f64,
    pub p_bar_low: f64,
    pub p_bar_high: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fine: Option<f64>,
}

/// One sample of the analytic boundary curves at a liability share.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryRow {
    pub eta: f64,
    /// Manager-indifference curve; absent where unbounded.
    pub manager_curve: Option<f64>,
    pub mu_half_curve: Option<f64>,
    pub mu_zero_curve: Option<f64>,
    pub mu_one_curve: Option<f64>,
    /// The knife-edge fine level (constant across the grid).
    pub knife_edge: f64,
}

/// Region map plus the boundary overlay, ready for serialization.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionMapDocument {
    pub delta: f64,
    pub revenue_share: f64,
    pub rows: Vec<RegionMapRow>,
    pub boundaries: Vec<BoundaryRow>,
}

/// Classifies every grid point and samples the boundary curves at the
/// liability grid. Rows are ordered by (eta, pf_rel).
pub fn region_map(config: &SweepConfig) -> Result<RegionMapDocument, SweepError> {
    config.validate()?;
    let etas = config.eta_range.values();
    let pfs = config.pf_range.values();

    let points: Vec<(f64, f64)> = etas
        .iter()
        .flat_map(|&eta| pfs.iter().map(move |&pf| (eta, pf)))
        .collect();
    let rows: Vec<RegionMapRow> = points
        .par_iter()
        .map(|&(eta, pf_rel)| {
            let params = ModelParams::from_pf_rel(config.delta, config.revenue_share, eta, pf_rel)?;
            let region = classify_region(&params);
            let set = enumerate_equilibria(&params)?;
            Ok(RegionMapRow {
                eta,
                pf_rel,
                fine_regime: region.fine_regime,
                manager_regime: region.manager_regime,
                mu_hat: region.mu_hat,
                p_bar_low: set.p_bar_low,
                p_bar_high: set.p_bar_high,
                fine: config.fine_scale.map(|scale| scale.fine_for(pf_rel)),
            })
        })
        .collect::<Result<_, SweepError>>()?;

    let curves = region_boundaries(config.delta, config.revenue_share)?;
    let boundaries = etas
        .iter()
        .map(|&eta| BoundaryRow {
            eta,
            manager_curve: curves.manager_curve(eta),
            mu_half_curve: curves.mu_half_curve(eta),
            mu_zero_curve: curves.mu_zero_curve(eta),
            mu_one_curve: curves.mu_one_curve(eta),
            knife_edge: curves.knife_edge(),
        })
        .collect();

    Ok(RegionMapDocument {
        delta: config.delta,
        revenue_share: config.revenue_share,
        rows,
        boundaries,
    })
}

/// Fixed header of the region CSV; a `fine` column is appended only when the
/// sweep carries a fine scale.
pub const REGIONS_CSV_HEADER: [&str; 7] = [
    "eta", "pf_rel", "fine_regime", "manager_regime", "mu_hat", "p_bar_low", "p_bar_high",
];

/// Fixed header of the boundary-curve CSV.
pub const BOUNDARIES_CSV_HEADER: [&str; 6] = [
    "eta", "manager_curve", "mu_half_curve", "mu_zero_curve", "mu_one_curve", "knife_edge",
];

fn regime_label(regime: FineRegime) -> &'static str {
    match regime {
        FineRegime::BelowTheoremScope => "below_theorem_scope",
        FineRegime::BackfireRange => "backfire_range",
        FineRegime::KnifeEdge => "knife_edge",
        FineRegime::HighFineRange => "high_fine_range",
    }
}

fn manager_label(regime: ManagerRegime) -> &'static str {
    match regime {
        ManagerRegime::ManagersCheat => "managers_cheat",
        ManagerRegime::ManagersIndifferent => "managers_indifferent",
        ManagerRegime::ManagersClean => "managers_clean",
    }
}

/// Writes the region rows as CSV with the documented header.
pub fn write_region_csv<W: std::io::Write>(
    rows: &[RegionMapRow],
    writer: &mut csv::Writer<W>,
) -> csv::Result<()> {
    let with_fine = rows.iter().any(|r| r.fine.is_some());
    let mut header: Vec<&str> = REGIONS_CSV_HEADER.to_vec();
    if with_fine {
        header.push("fine");
    }
    writer.write_record(&header)?;
    for row in rows {
        let mut record = vec![
            row.eta.to_string(),
            row.pf_rel.to_string(),
            regime_label(row.fine_regime).to_string(),
            manager_label(row.manager_regime).to_string(),
            row.mu_hat.to_string(),
            row.p_bar_low.to_string(),
            row.p_bar_high.to_string(),
        ];
        if with_fine {
            record.push(row.fine.map(|f| f.to_string()).unwrap_or_default());
        }
        writer.write_record(&record)?;
    }
    writer.flush()?;
    Ok(())
}

/// Writes the boundary overlay as CSV; unbounded curve points are left empty.
pub fn write_boundary_csv<W: std::io::Write>(
    rows: &[BoundaryRow],
    writer: &mut csv::Writer<W>,
) -> csv::Result<()> {
    writer.write_record(BOUNDARIES_CSV_HEADER)?;
    let cell = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
    for row in rows {
        writer.write_record([
            row.eta.to_string(),
            cell(row.manager_curve),
            cell(row.mu_half_curve),
            cell(row.mu_zero_curve),
            cell(row.mu_one_curve),
            row.knife_edge.to_string(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

/// Headline equilibrium prediction for one parameter set: the cheating rates
/// of the equilibrium with the lowest average cheating probability, plus the
/// spread across coexisting equilibria.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TreatmentPrediction {
    pub name: String,
    /// Mean intention probability of the two managers.
    pub manager_rate: f64,
    /// Mean intention probability of the two contestants.
    pub contestant_rate: f64,
    /// Average cheating probability of the reported equilibrium.
    pub overall_rate: f64,
    pub p_bar_low: f64,
    pub p_bar_high: f64,
    /// True when coexisting equilibria disagree on the average cheating
    /// probability (knife-edge multiplicity).
    pub multiple_p_bar: bool,
}

/// Prediction for arbitrary parameters, reported from the equilibrium that
/// attains the lowest average cheating probability.
pub fn predict_for_params(name: &str, params: &ModelParams) -> Result<TreatmentPrediction, ModelError> {
    let set = enumerate_equilibria(params)?;
    let lowest = set.lowest();
    let profile = lowest.profile;
    Ok(TreatmentPrediction {
        name: name.to_string(),
        manager_rate: 0.5 * (profile.manager1 + profile.manager2),
        contestant_rate: 0.5 * (profile.contestant1 + profile.contestant2),
        overall_rate: lowest.avg_cheat_prob,
        p_bar_low: set.p_bar_low,
        p_bar_high: set.p_bar_high,
        multiple_p_bar: set.has_multiplicity(),
    })
}

/// Prediction for one of the named treatments.
pub fn predict_treatment(treatment: Treatment) -> TreatmentPrediction {
    let preset = treatment.preset();
    predict_for_params(&treatment.to_string(), &preset.params)
        .expect("treatment presets are valid")
}

/// Fixed header of the prediction CSV.
pub const PREDICT_CSV_HEADER: [&str; 7] = [
    "treatment", "manager_rate", "contestant_rate", "overall_rate", "p_bar_low", "p_bar_high",
    "multiple_p_bar",
];

pub fn write_predictions_csv<W: std::io::Write>(
    predictions: &[TreatmentPrediction],
    writer: &mut csv::Writer<W>,
) -> csv::Result<()> {
    writer.write_record(PREDICT_CSV_HEADER)?;
    for p in predictions {
        writer.write_record([
            p.name.clone(),
            p.manager_rate.to_string(),
            p.contestant_rate.to_string(),
            p.overall_rate.to_string(),
            p.p_bar_low.to_string(),
            p.p_bar_high.to_string(),
            p.multiple_p_bar.to_string(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}
