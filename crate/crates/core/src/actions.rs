//! Signatures, generating vectors of type `(0; 2, 2, 2, 2, n)`, the
//! Riemann–Hurwitz genus and the dimension of an equisymmetric stratum.

use std::fmt;

use num_rational::Ratio;

use crate::error::ActionError;
use crate::group::{Dihedral, Element, Subgroup};

/// `(gamma; m_1, ..., m_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub gamma: u32,
    pub periods: Vec<u32>,
}

impl Signature {
    pub fn new(gamma: u32, periods: Vec<u32>) -> Self {
        Signature { gamma, periods }
    }

    /// `(0; 2, 2, 2, 2, n)`.
    pub fn dihedral_family(n: u32) -> Self {
        Signature { gamma: 0, periods: vec![2, 2, 2, 2, n] }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let periods: Vec<String> = self.periods.iter().map(|m| m.to_string()).collect();
        write!(f, "({}; {})", self.gamma, periods.join(", "))
    }
}

/// Genus of a surface with a `group_order`-element group acting with the given signature:
/// `g = |G|(gamma - 1) + 1 + |G|/2 * sum(1 - 1/m_i)`.
pub fn rh_genus(group_order: u64, sig: &Signature) -> Result<u64, ActionError> {
    let order = Ratio::from_integer(group_order as i128);
    let branching: Ratio<i128> = sig
        .periods
        .iter()
        .map(|&m| Ratio::from_integer(1) - Ratio::new(1, m as i128))
        .sum();
    let genus = order * Ratio::from_integer(sig.gamma as i128 - 1)
        + Ratio::from_integer(1)
        + order / Ratio::from_integer(2) * branching;
    if !genus.is_integer() || *genus.numer() < 0 {
        return Err(ActionError::NonIntegerGenus { twice_genus: (genus * 2).to_string() });
    }
    Ok(genus.to_integer() as u64)
}

/// Teichmüller dimension `3(gamma - 1) + r` of the stratum.
pub fn strata_dimension(sig: &Signature) -> i64 {
    3 * (sig.gamma as i64 - 1) + sig.periods.len() as i64
}

/// A validated generating vector `(c_1, ..., c_5)` of type `(0; 2, 2, 2, 2, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratingVector {
    ctx: Dihedral,
    entries: [Element; 5],
}

impl GeneratingVector {
    pub fn ctx(&self) -> Dihedral {
        self.ctx
    }

    pub fn entries(&self) -> &[Element; 5] {
        &self.entries
    }

    /// Builds a vector without validation. Callers must only pass tuples
    /// obtained from a valid vector by braid moves or automorphisms.
    pub(crate) fn from_entries_unchecked(ctx: Dihedral, entries: [Element; 5]) -> Self {
        GeneratingVector { ctx, entries }
    }

    pub fn signature(&self) -> Signature {
        Signature::new(0, self.entries.iter().map(|&c| self.ctx.elem_order(c)).collect())
    }

    /// Cyclically rotates the tuple so that the order-`n` entry sits last.
    /// Cyclic rotation conjugates the product, so the result is still valid.
    /// For display only; orbit computations never use it.
    pub fn display_form(&self) -> GeneratingVector {
        let n = self.ctx.n();
        let pos = (0..5)
            .rev()
            .find(|&i| self.ctx.elem_order(self.entries[i]) == n)
            .unwrap_or(4);
        let mut entries = self.entries;
        entries.rotate_left((pos + 1) % 5);
        GeneratingVector { ctx: self.ctx, entries }
    }
}

impl fmt::Display for GeneratingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Checks the three defining conditions: the period multiset is `{2,2,2,2,n}`,
/// the product `c_1 c_2 c_3 c_4 c_5` is trivial, and the entries generate the group.
pub fn validate_vector(ctx: Dihedral, entries: &[Element]) -> Result<GeneratingVector, ActionError> {
    let entries: [Element; 5] = entries
        .try_into()
        .map_err(|_| ActionError::WrongLength(entries.len()))?;
    let n = ctx.n();
    let orders: Vec<u32> = entries.iter().map(|&c| ctx.elem_order(c)).collect();
    if let Some(position) = orders.iter().position(|&m| m != 2 && m != n) {
        return Err(ActionError::WrongOrder { position: position + 1, order: orders[position] });
    }
    let mut sorted = orders.clone();
    sorted.sort_unstable();
    let mut expected = vec![2, 2, 2, 2, n];
    expected.sort_unstable();
    if sorted != expected {
        return Err(ActionError::WrongPeriods { orders });
    }
    let product = ctx.product(entries);
    if !product.is_identity() {
        return Err(ActionError::ProductNotOne { product: product.to_string() });
    }
    let generated = ctx.subgroup_from_generators(&entries);
    if generated != Subgroup::whole() {
        return Err(ActionError::NotGenerating { generated: generated.display(ctx) });
    }
    Ok(GeneratingVector { ctx, entries })
}

/// Parses `a^3,a^3,s,a^2*s,a^2` and validates it.
pub fn parse_vector(ctx: Dihedral, text: &str) -> Result<GeneratingVector, ActionError> {
    let entries = text
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|t| ctx.parse_element(t))
        .collect::<Result<Vec<_>, _>>()?;
    validate_vector(ctx, &entries)
}

/// Signature with each period marked by the conjugacy class of `<c_i>`,
/// given by its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeometricSignature {
    pub gamma: u32,
    pub periods: Vec<(u32, Subgroup)>,
}

impl GeometricSignature {
    pub fn display(&self, ctx: Dihedral) -> String {
        let marks: Vec<String> = self
            .periods
            .iter()
            .map(|(m, h)| format!("[{m}, {}]", h.display(ctx)))
            .collect();
        format!("({}; {})", self.gamma, marks.join(", "))
    }
}

pub fn geometric_signature(v: &GeneratingVector) -> GeometricSignature {
    let ctx = v.ctx;
    GeometricSignature {
        gamma: 0,
        periods: v
            .entries
            .iter()
            .map(|&c| {
                let cyclic = ctx.subgroup_from_generators(&[c]);
                (ctx.elem_order(c), ctx.subgroup_class_rep(cyclic))
            })
            .collect(),
    }
}
