use serde::{Deserialize, Serialize};

use super::dataset::Measurement;
use super::model::ModelSpec;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompareOptions {
    /// Lower bound on the per-point uncertainty used for weighting, in as.
    pub sigma_floor_as: f64,
}

impl Default for CompareOptions {
    fn default() -> Self {
        CompareOptions {
            sigma_floor_as: 0.5,
        }
    }
}

/// Agreement between a dataset and a model curve. Serializes to the JSON
/// report format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub n_points: usize,
    pub weighted_rms_as: f64,
    pub chi2_per_dof: f64,
    /// Fraction of points whose error interval contains the model value.
    pub coverage: f64,
    /// Points skipped because the model has no barrier at their field.
    pub excluded_bsi: usize,
    /// `measured - model` per compared point, in dataset order.
    pub residuals_as: Vec<f64>,
}

/// Sums after sorting so the result does not depend on input order.
fn ordered_sum(mut terms: Vec<f64>) -> f64 {
    terms.sort_by(f64::total_cmp);
    terms.into_iter().sum()
}

/// Compares measurements with `model`. Residuals are weighted by
/// `1/σ²` with `σ = max(err_minus, err_plus, floor)`; coverage uses the
/// asymmetric interval `[τ - err_minus, τ + err_plus]`.
pub fn compare(
    dataset: &[Measurement],
    model: &ModelSpec,
    opts: &CompareOptions,
) -> Result<ComparisonReport> {
    if !(opts.sigma_floor_as > 0.0) {
        return Err(Error::domain(format!(
            "sigma floor must be positive, got {}",
            opts.sigma_floor_as
        )));
    }
    let mut excluded_bsi = 0;
    let mut residuals = Vec::with_capacity(dataset.len());
    let mut weighted_sq = Vec::with_capacity(dataset.len());
    let mut weights = Vec::with_capacity(dataset.len());
    let mut chi_terms = Vec::with_capacity(dataset.len());
    let mut covered = 0usize;

    for m in dataset {
        let model_as = match model.tau_as(m.field) {
            Ok(v) => v,
            Err(Error::BarrierSuppressed { .. }) => {
                excluded_bsi += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let r = m.tau_as - model_as;
        let sigma = m.err_minus.max(m.err_plus).max(opts.sigma_floor_as);
        let w = 1.0 / (sigma * sigma);
        residuals.push(r);
        weighted_sq.push(w * r * r);
        weights.push(w);
        chi_terms.push((r / sigma) * (r / sigma));
        if m.tau_as - m.err_minus <= model_as && model_as <= m.tau_as + m.err_plus {
            covered += 1;
        }
    }

    let n = residuals.len();
    if n == 0 {
        return Err(Error::EmptyComparison {
            excluded: excluded_bsi,
        });
    }
    let weighted_rms_as = (ordered_sum(weighted_sq) / ordered_sum(weights)).sqrt();
    Ok(ComparisonReport {
        n_points: n,
        weighted_rms_as,
        chi2_per_dof: ordered_sum(chi_terms) / n as f64,
        coverage: covered as f64 / n as f64,
        excluded_bsi,
        residuals_as: residuals,
    })
}
