//! Group algebra decomposition `JX ~ J_G x B_1^{n_1} x ... x B_t^{n_t}` of the
//! Jacobian, decompositions of intermediate quotients `J(X/H)`, and the
//! identification of factors as Jacobians or Pryms of intermediate coverings.
//!
//! Factor dimensions come from the fixed-space dimensions of the cyclic
//! stabilizers `<c_k>`:
//! `dim B_i = k_i (dim V_i (gamma - 1) + 1/2 sum_k (dim V_i - dim Fix_{<c_k>} V_i))`
//! with `k_i = m_i [K_i : Q]`. Quotient genera are computed twice, once from
//! the decomposition and once from the permutation action of the `c_k` on the
//! cosets of `H`; the two must agree.

use std::collections::{BTreeMap, BTreeSet};

use crate::actions::GeneratingVector;
use crate::equivalence::{classify, ActionLabel};
use crate::error::DecompositionError;
use crate::group::{Dihedral, Element, Subgroup};
use crate::rep::{dim_fix, induced_trivial_multiplicities, omega, rational_irreps, RationalIrrep};

/// The factor `B_i^{n_i}` attached to one rational irreducible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsotypicalFactor {
    pub rep: RationalIrrep,
    pub dim: u32,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub vector: GeneratingVector,
    pub label: ActionLabel,
    /// One entry per rational irreducible, trivial one first.
    pub factors: Vec<IsotypicalFactor>,
    pub genus: u32,
}

impl DecompositionReport {
    pub fn ctx(&self) -> Dihedral {
        self.vector.ctx()
    }

    pub fn dim_of(&self, rep: RationalIrrep) -> u32 {
        self.factors.iter().find(|f| f.rep == rep).map_or(0, |f| f.dim)
    }

    pub fn nonzero_factors(&self) -> impl Iterator<Item = &IsotypicalFactor> {
        self.factors.iter().filter(|f| f.dim > 0)
    }

    /// `sum dim B_i * n_i`; equals the genus for a consistent report.
    pub fn total_dimension(&self) -> u32 {
        self.factors.iter().map(|f| f.dim * f.multiplicity).sum()
    }

    /// The nonzero linear factor, i.e. the elliptic curve.
    pub fn elliptic_factor(&self) -> Option<RationalIrrep> {
        self.nonzero_factors()
            .map(|f| f.rep)
            .find(|r| matches!(r, RationalIrrep::Linear(_)))
    }
}

/// Dimensions of every isotypical factor for the action given by `v`.
pub fn factor_dimensions(v: &GeneratingVector) -> Result<DecompositionReport, DecompositionError> {
    let ctx = v.ctx();
    let stabilizers: Vec<Subgroup> = v
        .entries()
        .iter()
        .map(|&c| ctx.subgroup_from_generators(&[c]))
        .collect();
    let mut factors = Vec::new();
    for info in rational_irreps(ctx) {
        // The trivial factor is J(X/G), of dimension gamma = 0.
        let dim = if info.id == RationalIrrep::trivial() {
            0
        } else {
            let irrep = info.id.complex_representative();
            let deg = irrep.degree() as i64;
            let codim: i64 = stabilizers
                .iter()
                .map(|&h| deg - dim_fix(ctx, irrep, h) as i64)
                .sum();
            // 2 dim B = k (2 dim V (gamma - 1) + sum (dim V - dim Fix)), gamma = 0.
            let twice = info.field_degree as i64 * (codim - 2 * deg);
            if twice < 0 || twice % 2 != 0 {
                return Err(DecompositionError::FractionalDimension {
                    irrep: info.id.to_string(),
                    detail: format!("2 dim = {twice}"),
                });
            }
            (twice / 2) as u32
        };
        factors.push(IsotypicalFactor { rep: info.id, dim, multiplicity: info.multiplicity });
    }
    Ok(DecompositionReport {
        vector: *v,
        label: classify(v),
        factors,
        genus: 2 * ctx.n() - 1,
    })
}

/// `J(X/H) ~ J_G x prod B_i^{dim Fix_H V_i / m_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientDecomposition {
    pub subgroup: Subgroup,
    pub genus: u32,
    pub exponents: BTreeMap<RationalIrrep, u32>,
}

pub fn quotient_decomposition(
    report: &DecompositionReport,
    h: Subgroup,
) -> Result<QuotientDecomposition, DecompositionError> {
    // Schur indices are all 1, so the exponents are the induced multiplicities.
    let exponents = induced_trivial_multiplicities(report.ctx(), h)?;
    let genus = exponents.iter().map(|(&rep, &e)| e * report.dim_of(rep)).sum();
    Ok(QuotientDecomposition { subgroup: h, genus, exponents })
}

/// The covering `X/H -> X/G = P^1` read off from the coset action.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CosetQuotient {
    pub genus: u32,
    /// `[G : H]`.
    pub degree: u32,
    /// Number of points of `X/H` over which `X -> X/H` ramifies.
    pub branch_points: u32,
}

/// Right cosets `Hg` indexed by element.
fn coset_index(ctx: Dihedral, h: Subgroup) -> BTreeMap<Element, usize> {
    let h_elems = h.elements(ctx);
    let mut reps: BTreeMap<Element, usize> = BTreeMap::new();
    let mut index = BTreeMap::new();
    for g in ctx.elements() {
        let key = h_elems.iter().map(|&x| ctx.mul(x, g)).min().expect("H is non-empty");
        let next = reps.len();
        let id = *reps.entry(key).or_insert(next);
        index.insert(g, id);
    }
    index
}

/// Genus of `X/H` by Riemann–Hurwitz for the degree `[G:H]` map `X/H -> P^1`:
/// `2 gamma_H - 2 = -2 [G:H] + sum_i sum_O (|O| - 1)` over the orbits `O` of
/// `<c_i>` acting on the right cosets.
pub fn quotient_genus_coset(v: &GeneratingVector, h: Subgroup) -> Result<CosetQuotient, DecompositionError> {
    let ctx = v.ctx();
    let index = coset_index(ctx, h);
    let degree = h.index(ctx) as i64;
    let reps: BTreeMap<usize, Element> = index.iter().map(|(&g, &id)| (id, g)).collect();
    let mut ramification: i64 = 0;
    let mut branch_points = 0u32;
    for &c in v.entries() {
        let m = ctx.elem_order(c) as usize;
        let mut seen = vec![false; reps.len()];
        for (&id, &g) in &reps {
            if seen[id] {
                continue;
            }
            let mut size = 0usize;
            let mut x = g;
            loop {
                let cid = index[&x];
                if seen[cid] {
                    break;
                }
                seen[cid] = true;
                size += 1;
                x = ctx.mul(x, c);
            }
            ramification += size as i64 - 1;
            if size < m {
                branch_points += 1;
            }
        }
    }
    let twice = -2 * degree + ramification + 2;
    if twice < 0 || twice % 2 != 0 {
        return Err(DecompositionError::Action(crate::error::ActionError::NonIntegerGenus {
            twice_genus: twice.to_string(),
        }));
    }
    Ok(CosetQuotient { genus: (twice / 2) as u32, degree: degree as u32, branch_points })
}

/// A product of nonzero factors `prod B_i^{e_i}`.
pub type Target = Vec<(RationalIrrep, u32)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentificationKind {
    /// `prod B_i ~ J(X/H)` for every listed `H`.
    Jacobian { witnesses: Vec<Subgroup> },
    /// `prod B_i ~ P(X_H / X_K)` for every listed nested pair `H <= K`.
    Prym { witnesses: Vec<(Subgroup, Subgroup)> },
    /// Nonzero factor not isolated by any subgroup or pair.
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorIdentification {
    pub target: Target,
    pub kind: IdentificationKind,
}

impl FactorIdentification {
    pub fn target_reps(&self) -> Vec<RationalIrrep> {
        self.target.iter().map(|&(r, _)| r).collect()
    }

    pub fn jacobian_witnesses(&self) -> &[Subgroup] {
        match &self.kind {
            IdentificationKind::Jacobian { witnesses } => witnesses,
            _ => &[],
        }
    }

    pub fn prym_witnesses(&self) -> &[(Subgroup, Subgroup)] {
        match &self.kind {
            IdentificationKind::Prym { witnesses } => witnesses,
            _ => &[],
        }
    }
}

/// Exponents of the nonzero factors in `J(X/H)`, dropping zeros.
fn nonzero_pattern(
    report: &DecompositionReport,
    mults: &BTreeMap<RationalIrrep, u32>,
) -> Vec<(RationalIrrep, u32)> {
    report
        .nonzero_factors()
        .filter_map(|f| match mults.get(&f.rep).copied().unwrap_or(0) {
            0 => None,
            e => Some((f.rep, e)),
        })
        .collect()
}

fn order_key(ctx: Dihedral, h: Subgroup) -> (u32, Subgroup) {
    (h.order(ctx), h)
}

/// Identifies products of nonzero factors as Jacobians of quotients `X/H`
/// (every nonzero factor has exponent 0 or 1 in `J(X/H)`) and as Pryms of
/// coverings `X_H -> X_K` (the difference `Ind_H 1 - Ind_K 1` has exponents
/// 0 or 1 on the nonzero factors). All witnesses are listed, smallest
/// subgroup first; nonzero factors that appear in no target are reported
/// as unresolved.
pub fn identify_factors(report: &DecompositionReport) -> Result<Vec<FactorIdentification>, DecompositionError> {
    let ctx = report.ctx();
    let classes: Vec<Subgroup> = ctx.subgroup_classes().into_iter().map(|c| c.representative).collect();
    let mut induced = BTreeMap::new();
    for &h in &classes {
        induced.insert(h, induced_trivial_multiplicities(ctx, h)?);
    }

    let mut jacobians: BTreeMap<Target, Vec<Subgroup>> = BTreeMap::new();
    for &h in &classes {
        let pattern = nonzero_pattern(report, &induced[&h]);
        if !pattern.is_empty() && pattern.iter().all(|&(_, e)| e == 1) {
            jacobians.entry(pattern).or_default().push(h);
        }
    }

    let mut pryms: BTreeMap<Target, Vec<(Subgroup, Subgroup)>> = BTreeMap::new();
    for &k in &classes {
        for &h in &classes {
            if h == k || h.order(ctx) >= k.order(ctx) || !ctx.is_subconjugate(h, k) {
                continue;
            }
            let diff: BTreeMap<RationalIrrep, u32> = induced[&h]
                .iter()
                .map(|(&rep, &e)| (rep, e - induced[&k][&rep]))
                .collect();
            let pattern = nonzero_pattern(report, &diff);
            if !pattern.is_empty() && pattern.iter().all(|&(_, e)| e == 1) {
                let inner = ctx
                    .elements()
                    .map(|g| ctx.conjugate_subgroup(g, h))
                    .filter(|&hg| hg.elements(ctx).iter().all(|&x| k.contains(ctx, x)))
                    .min()
                    .expect("h is subconjugate to k");
                pryms.entry(pattern).or_default().push((inner, k));
            }
        }
    }

    let mut out = Vec::new();
    for (target, mut witnesses) in jacobians {
        witnesses.sort_by_key(|&h| order_key(ctx, h));
        out.push(FactorIdentification { target, kind: IdentificationKind::Jacobian { witnesses } });
    }
    for (target, mut witnesses) in pryms {
        witnesses.sort_by_key(|&(h, k)| (order_key(ctx, h), order_key(ctx, k)));
        out.push(FactorIdentification { target, kind: IdentificationKind::Prym { witnesses } });
    }
    let covered: BTreeSet<RationalIrrep> = out.iter().flat_map(|i| i.target_reps()).collect();
    for f in report.nonzero_factors() {
        if !covered.contains(&f.rep) {
            out.push(FactorIdentification { target: vec![(f.rep, 1)], kind: IdentificationKind::Unresolved });
        }
    }
    Ok(out)
}

/// Outcome of testing one subgroup (or pair) against one target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCheck {
    pub statement: String,
    pub holds: bool,
    pub reason: String,
}

fn describe_target(target: &[RationalIrrep]) -> String {
    if target.is_empty() {
        return "0".to_string();
    }
    target.iter().map(|r| format!("B[{r}]")).collect::<Vec<_>>().join(" x ")
}

fn compare_pattern(
    report: &DecompositionReport,
    mults: &BTreeMap<RationalIrrep, u32>,
    target: &[RationalIrrep],
    what: &str,
) -> (bool, String) {
    let mut problems = Vec::new();
    for f in report.nonzero_factors() {
        let e = mults.get(&f.rep).copied().unwrap_or(0);
        let wanted = u32::from(target.contains(&f.rep));
        if e != wanted {
            problems.push(format!("{what} on {} is {e}, needs {wanted}", f.rep));
        }
    }
    if problems.is_empty() {
        (true, format!("{what} is 1 exactly on the target factors"))
    } else {
        (false, problems.join("; "))
    }
}

/// Does `J(X/H) ~ prod_{target} B_i` hold?
pub fn check_jacobian_witness(
    report: &DecompositionReport,
    h: Subgroup,
    target: &[RationalIrrep],
) -> Result<WitnessCheck, DecompositionError> {
    let ctx = report.ctx();
    let mults = induced_trivial_multiplicities(ctx, h)?;
    let (holds, reason) = compare_pattern(report, &mults, target, &format!("dim Fix_{}", h.display(ctx)));
    Ok(WitnessCheck {
        statement: format!("J(X/{}) ~ {}", h.display(ctx), describe_target(target)),
        holds,
        reason,
    })
}

/// Does `P(X_H / X_K) ~ prod_{target} B_i` hold (with `H <= K`)?
pub fn check_prym_witness(
    report: &DecompositionReport,
    h: Subgroup,
    k: Subgroup,
    target: &[RationalIrrep],
) -> Result<WitnessCheck, DecompositionError> {
    let ctx = report.ctx();
    let statement = format!("P(X_{} / X_{}) ~ {}", h.display(ctx), k.display(ctx), describe_target(target));
    if !h.elements(ctx).iter().all(|&x| k.contains(ctx, x)) {
        return Ok(WitnessCheck { statement, holds: false, reason: "H is not contained in K".into() });
    }
    let mh = induced_trivial_multiplicities(ctx, h)?;
    let mk = induced_trivial_multiplicities(ctx, k)?;
    let diff: BTreeMap<RationalIrrep, u32> = mh.iter().map(|(&r, &e)| (r, e - mk[&r])).collect();
    let (holds, reason) = compare_pattern(report, &diff, target, "Ind_H 1 - Ind_K 1");
    Ok(WitnessCheck { statement, holds, reason })
}

/// Checks the standard identifications for the action type of the report.
///
/// Type 1: the elliptic factor is `J(X/<a^2>)`, and the complement is tested
/// against both single-reflection quotients `X/<s>` and `X/<as>`; exactly
/// one of them qualifies, depending on which linear character carries the
/// elliptic factor. Type 2 and the even case: `J(X/<a^2>)`, `J(X/<a^n, s>)`
/// for the factors with even `d`, and `P(X_<s> / X_<a^n, s>)` for odd `d`.
pub fn reference_checks(report: &DecompositionReport) -> Result<Vec<WitnessCheck>, DecompositionError> {
    let ctx = report.ctx();
    let n = ctx.n();
    let rot2 = ctx.subgroup_from_generators(&[ctx.rotation(2)]);
    let s = ctx.subgroup_from_generators(&[ctx.reflection(0)]);
    let as_ = ctx.subgroup_from_generators(&[ctx.reflection(1)]);
    let an_s = ctx.subgroup_from_generators(&[ctx.rotation(n as i64), ctx.reflection(0)]);
    let elliptic: Vec<RationalIrrep> = report.elliptic_factor().into_iter().collect();
    let ws = |keep: fn(u32) -> bool| -> Vec<RationalIrrep> {
        omega(ctx)
            .into_iter()
            .filter(|&d| keep(d) && report.dim_of(RationalIrrep::W(d)) > 0)
            .map(RationalIrrep::W)
            .collect()
    };
    let mut out = vec![check_jacobian_witness(report, rot2, &elliptic)?];
    match report.label {
        ActionLabel::Type1 => {
            let complement = ws(|_| true);
            out.push(check_jacobian_witness(report, as_, &complement)?);
            out.push(check_jacobian_witness(report, s, &complement)?);
        }
        ActionLabel::Type2 | ActionLabel::Unique => {
            out.push(check_jacobian_witness(report, an_s, &ws(|d| d % 2 == 0))?);
            out.push(check_prym_witness(report, s, an_s, &ws(|d| d % 2 == 1))?);
        }
    }
    Ok(out)
}

/// Dimension bookkeeping: the factors add up to the genus, and for every
/// subgroup class the two quotient-genus computations agree.
pub fn consistency_check(report: &DecompositionReport) -> Result<Vec<String>, DecompositionError> {
    let ctx = report.ctx();
    let mut checked = Vec::new();
    let total = report.total_dimension();
    if total != report.genus {
        return Err(DecompositionError::ConsistencyFailure(format!(
            "sum dim * mult = {total} but genus = {}",
            report.genus
        )));
    }
    checked.push(format!("sum dim * mult = {total} = genus"));
    for class in ctx.subgroup_classes() {
        let h = class.representative;
        let from_decomposition = quotient_decomposition(report, h)?.genus;
        let from_cosets = quotient_genus_coset(&report.vector, h)?.genus;
        if from_decomposition != from_cosets {
            return Err(DecompositionError::ConsistencyFailure(format!(
                "genus of X/{}: decomposition gives {from_decomposition}, coset action gives {from_cosets}",
                h.display(ctx)
            )));
        }
        checked.push(format!("g(X/{}) = {from_cosets}", h.display(ctx)));
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::parse_vector;
    use crate::arith::totient;

    fn report(n: u32, text: &str) -> DecompositionReport {
        let ctx = Dihedral::new(n).unwrap();
        factor_dimensions(&parse_vector(ctx, text).unwrap()).unwrap()
    }

    #[test]
    fn type1_dimensions() {
        for n in [3u32, 5, 9, 15] {
            let r = report(n, &format!("a^{n},a^{n},a*s,a^3*s,a^2"));
            assert_eq!(r.dim_of(RationalIrrep::Linear(2)), 1);
            for l in [0, 1, 3] {
                assert_eq!(r.dim_of(RationalIrrep::Linear(l)), 0);
            }
            for d in omega(r.ctx()) {
                let expected = if d % 2 == 1 { totient((2 * n / d) as u64) as u32 } else { 0 };
                assert_eq!(r.dim_of(RationalIrrep::W(d)), expected);
            }
            assert_eq!(r.total_dimension(), 2 * n - 1);
        }
    }

    #[test]
    fn type2_dimensions() {
        for n in [2u32, 3, 4, 7, 9, 12] {
            let r = report(n, "s,s,a*s,a^3*s,a^2");
            assert_eq!(r.dim_of(RationalIrrep::Linear(1)), 1);
            for d in omega(r.ctx()) {
                assert_eq!(r.dim_of(RationalIrrep::W(d)), totient((2 * n / d) as u64) as u32 / 2);
            }
            assert_eq!(r.total_dimension(), 2 * n - 1);
        }
        let r = report(3, "s,s,a*s,a^3*s,a^2");
        assert!(r.nonzero_factors().all(|f| f.dim == 1));
    }

    #[test]
    fn other_type1_representative_uses_chi3() {
        let r = report(5, "a^5,a^5,s,a^2*s,a^2");
        assert_eq!(r.elliptic_factor(), Some(RationalIrrep::Linear(3)));
    }

    #[test]
    fn quotient_examples() {
        let r = report(5, "a^5,a^5,a*s,a^3*s,a^2");
        let ctx = r.ctx();
        let as_ = Subgroup::Dihedral { d: 10, j: 1 };
        let q = quotient_decomposition(&r, as_).unwrap();
        assert_eq!(q.genus, 4);
        let center = Subgroup::Cyclic { d: 5 };
        let c = quotient_genus_coset(&r.vector, center).unwrap();
        assert_eq!((c.genus, c.degree, c.branch_points), (0, 10, 20));
        assert_eq!(quotient_genus_coset(&r.vector, Subgroup::trivial(ctx)).unwrap().genus, 9);
        assert_eq!(quotient_genus_coset(&r.vector, Subgroup::whole()).unwrap().genus, 0);
        assert_eq!(quotient_decomposition(&r, Subgroup::whole()).unwrap().genus, 0);

        let r = report(5, "s,s,a*s,a^3*s,a^2");
        let rot2 = Subgroup::Cyclic { d: 2 };
        assert_eq!(quotient_decomposition(&r, rot2).unwrap().genus, 1);
        assert_eq!(quotient_genus_coset(&r.vector, rot2).unwrap().genus, 1);
    }

    #[test]
    fn consistency_examples() {
        for (n, v) in [(5, "a^5,a^5,a*s,a^3*s,a^2"), (9, "s,s,a*s,a^3*s,a^2"), (6, "s,s,a*s,a^3*s,a^2")] {
            let checks = consistency_check(&report(n, v)).unwrap();
            assert!(checks.len() > 1);
        }
    }

    #[test]
    fn unresolved_only_when_nothing_isolates() {
        let r = report(7, "s,s,a*s,a^3*s,a^2");
        let ids = identify_factors(&r).unwrap();
        assert!(ids.iter().all(|i| i.kind != IdentificationKind::Unresolved));
    }
}
