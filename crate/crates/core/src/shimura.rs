//! Character of the analytic representation and the dimension of the
//! Shimura domain,
//! `N = 1/(2|G|) sum_{g in G} (chi(g)^2 + chi(g^2))`.

use std::collections::BTreeMap;

use crate::decomposition::DecompositionReport;
use crate::equivalence::ActionLabel;
use crate::error::ShimuraError;
use crate::group::{class_sizes, ConjugacyClass, Dihedral};
use crate::rep::{rational_char_value, RationalIrrep};

/// The analytic character, as an integer combination of rational
/// characters and as values on conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyticCharacter {
    pub ctx: Dihedral,
    pub label: ActionLabel,
    /// Coefficient of each rational character; for `W_d` this is the common
    /// multiplicity of every `psi` in the Galois orbit.
    pub coefficients: BTreeMap<RationalIrrep, i64>,
    pub values: BTreeMap<ConjugacyClass, i64>,
}

impl AnalyticCharacter {
    pub fn value(&self, class: ConjugacyClass) -> i64 {
        self.values[&class]
    }
}

/// Builds the analytic character from the factor dimensions: a linear factor
/// contributes `dim E_i` copies of its character, and `B_d` contributes
/// `dim B_d / [K_d : Q]` copies of every member of the Galois orbit of `W_d`.
pub fn analytic_character(report: &DecompositionReport) -> Result<AnalyticCharacter, ShimuraError> {
    let ctx = report.ctx();
    let mut coefficients = BTreeMap::new();
    for f in &report.factors {
        let field_degree = f.rep.field_degree(ctx);
        if f.dim % field_degree != 0 {
            return Err(ShimuraError::NonIntegerMultiplicity { irrep: f.rep.to_string() });
        }
        if f.dim > 0 {
            coefficients.insert(f.rep, (f.dim / field_degree) as i64);
        }
    }
    let values = ctx
        .conjugacy_classes()
        .into_iter()
        .map(|class| {
            let g = class.representative(ctx);
            let v = coefficients
                .iter()
                .map(|(&rep, &c)| c * rational_char_value(ctx, rep, g))
                .sum();
            (class, v)
        })
        .collect();
    Ok(AnalyticCharacter { ctx, label: report.label, coefficients, values })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShimuraReport {
    pub n: u32,
    pub label: ActionLabel,
    pub dimension: u64,
    pub closed_form: Option<u64>,
}

impl ShimuraReport {
    pub fn matches(&self) -> bool {
        self.closed_form == Some(self.dimension)
    }
}

/// `sum_g (chi(g)^2 + chi(g^2))`, weighted by class sizes.
pub fn serre_sum(chi: &AnalyticCharacter) -> i128 {
    let ctx = chi.ctx;
    class_sizes(ctx)
        .into_iter()
        .map(|(class, size)| {
            let g = class.representative(ctx);
            let v = chi.value(class) as i128;
            let v2 = chi.value(ctx.conjugacy_class(ctx.mul(g, g))) as i128;
            size as i128 * (v * v + v2)
        })
        .sum()
}

pub fn shimura_dimension(chi: &AnalyticCharacter) -> Result<ShimuraReport, ShimuraError> {
    let sum = serre_sum(chi);
    let divisor = 2 * chi.ctx.order() as i128;
    if sum % divisor != 0 || sum < 0 {
        return Err(ShimuraError::DivisibilityFailure { sum, divisor });
    }
    let n = chi.ctx.n();
    Ok(ShimuraReport {
        n,
        label: chi.label,
        dimension: (sum / divisor) as u64,
        closed_form: closed_form_n(n, chi.label).ok(),
    })
}

/// `(3n - 1)/2` for type 1, `n` otherwise.
pub fn closed_form_n(n: u32, label: ActionLabel) -> Result<u64, ShimuraError> {
    if !label.is_valid_for(n) {
        return Err(ShimuraError::InvalidLabel { label: label.to_string(), n });
    }
    Ok(match label {
        ActionLabel::Type1 => (3 * n as u64 - 1) / 2,
        ActionLabel::Type2 | ActionLabel::Unique => n as u64,
    })
}
