//! Complex and rational irreducible representations of `D_{2n}`.
//!
//! The complex irreducibles are four linear characters `chi0..chi3` and the
//! two-dimensional `psi_j` (`1 <= j <= n - 1`) with
//! `psi_j(a) = diag(w^j, w^{-j})`, `psi_j(s) = [[0, 1], [1, 0]]`, `w = exp(pi i / n)`.
//! Every Schur index is 1. Over `Q` the `psi_j` group into Galois orbits
//! `W_d = {psi_j : gcd(j, 2n) = d}` indexed by the divisors `d | 2n` with `d < n`.
//!
//! Fixed-space dimensions are computed by eigenvalue counting and the
//! characters of the rational blocks by Ramanujan sums, so nothing here
//! touches floating point.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::arith::{ramanujan_sum, totient};
use crate::error::RepError;
use crate::group::{Dihedral, Element, Subgroup};

/// A complex irreducible representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Irrep {
    Linear(u8),
    TwoDim(u32),
}

impl Irrep {
    pub fn degree(self) -> u32 {
        match self {
            Irrep::Linear(_) => 1,
            Irrep::TwoDim(_) => 2,
        }
    }
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Irrep::Linear(i) => write!(f, "chi{i}"),
            Irrep::TwoDim(j) => write!(f, "psi_{j}"),
        }
    }
}

/// A rational irreducible representation: a linear character, or the
/// Galois-orbit sum `W_d` for `d` in `Omega(2n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RationalIrrep {
    Linear(u8),
    W(u32),
}

impl RationalIrrep {
    pub fn trivial() -> Self {
        RationalIrrep::Linear(0)
    }

    /// The complex irreducible used to stand for the whole Galois orbit.
    pub fn complex_representative(self) -> Irrep {
        match self {
            RationalIrrep::Linear(i) => Irrep::Linear(i),
            RationalIrrep::W(d) => Irrep::TwoDim(d),
        }
    }

    /// `[K : Q]` for the character field `K`.
    pub fn field_degree(self, ctx: Dihedral) -> u32 {
        match self {
            RationalIrrep::Linear(_) => 1,
            RationalIrrep::W(d) => totient((ctx.two_n() / d) as u64) as u32 / 2,
        }
    }

    /// Degree of the rational representation, `dim V * [K : Q]`.
    pub fn degree(self, ctx: Dihedral) -> u32 {
        self.complex_representative().degree() * self.field_degree(ctx)
    }

    /// `n_i = dim V / m_V`: the exponent of `B_i` in the group algebra decomposition.
    pub fn multiplicity(self) -> u32 {
        self.complex_representative().degree()
    }
}

impl fmt::Display for RationalIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalIrrep::Linear(i) => write!(f, "chi{i}"),
            RationalIrrep::W(d) => write!(f, "W_{d}"),
        }
    }
}

impl FromStr for RationalIrrep {
    type Err = RepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || RepError::UnknownIrrep(s.to_string());
        if let Some(i) = s.strip_prefix("chi") {
            let i: u8 = i.parse().map_err(|_| unknown())?;
            if i > 3 {
                return Err(unknown());
            }
            Ok(RationalIrrep::Linear(i))
        } else if let Some(d) = s.strip_prefix("W_") {
            Ok(RationalIrrep::W(d.parse().map_err(|_| unknown())?))
        } else {
            Err(unknown())
        }
    }
}

/// An exact character value of `D_{2n}`.
///
/// `TwoCos { t, modulus }` stands for `z^t + z^{-t}` with `z = exp(2 pi i / modulus)`;
/// `modulus` is `2n` when produced by [`char_value`]. Values that are rational
/// integers are always normalized to `Int`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharValue {
    Int(i64),
    TwoCos { t: u32, modulus: u32 },
}

impl CharValue {
    pub fn two_cos(t: i64, modulus: u32) -> Self {
        let m = modulus as i64;
        let mut t = t.rem_euclid(m);
        if 2 * t > m {
            t = m - t;
        }
        match t {
            0 => CharValue::Int(2),
            t if 2 * t == m => CharValue::Int(-2),
            t if 4 * t == m => CharValue::Int(0),
            t if 6 * t == m => CharValue::Int(1),
            t if 3 * t == m => CharValue::Int(-1),
            t => CharValue::TwoCos { t: t as u32, modulus },
        }
    }

    /// Numerical value. Only cross-checks use this.
    pub fn to_f64(self) -> f64 {
        match self {
            CharValue::Int(z) => z as f64,
            CharValue::TwoCos { t, modulus } => {
                2.0 * (2.0 * std::f64::consts::PI * t as f64 / modulus as f64).cos()
            }
        }
    }
}

impl fmt::Display for CharValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharValue::Int(z) => write!(f, "{z}"),
            CharValue::TwoCos { t, modulus } => write!(f, "2cos(2pi*{t}/{modulus})"),
        }
    }
}

/// All `n + 3` complex irreducibles.
pub fn irreps(ctx: Dihedral) -> Vec<Irrep> {
    (0..4)
        .map(Irrep::Linear)
        .chain((1..ctx.n()).map(Irrep::TwoDim))
        .collect()
}

/// `Omega(2n) = {d : d | 2n, d < n}`.
pub fn omega(ctx: Dihedral) -> Vec<u32> {
    (1..ctx.n()).filter(|d| ctx.two_n().is_multiple_of(*d)).collect()
}

/// Row of the rational character table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalIrrepInfo {
    pub id: RationalIrrep,
    pub degree: u32,
    pub field_degree: u32,
    pub multiplicity: u32,
}

pub fn rational_irreps(ctx: Dihedral) -> Vec<RationalIrrepInfo> {
    (0..4)
        .map(RationalIrrep::Linear)
        .chain(omega(ctx).into_iter().map(RationalIrrep::W))
        .map(|id| RationalIrrepInfo {
            id,
            degree: id.degree(ctx),
            field_degree: id.field_degree(ctx),
            multiplicity: id.multiplicity(),
        })
        .collect()
}

/// The complex irreducibles whose sum is the rational irreducible `rid`.
pub fn galois_orbit(ctx: Dihedral, rid: RationalIrrep) -> Vec<Irrep> {
    match rid {
        RationalIrrep::Linear(i) => vec![Irrep::Linear(i)],
        RationalIrrep::W(d) => (1..ctx.n())
            .filter(|j| j.gcd(&ctx.two_n()) == d)
            .map(Irrep::TwoDim)
            .collect(),
    }
}

/// The rational irreducible containing a complex one.
pub fn rational_of(ctx: Dihedral, irrep: Irrep) -> RationalIrrep {
    match irrep {
        Irrep::Linear(i) => RationalIrrep::Linear(i),
        Irrep::TwoDim(j) => RationalIrrep::W(j.gcd(&ctx.two_n())),
    }
}

fn sign(even: bool) -> i64 {
    if even {
        1
    } else {
        -1
    }
}

fn linear_value(i: u8, e: Element) -> i64 {
    let parity = sign(e.k().is_multiple_of(2));
    match (i, e.is_reflection()) {
        (0, _) => 1,
        (1, false) => 1,
        (1, true) => -1,
        (2, _) => parity,
        (3, false) => parity,
        (3, true) => -parity,
        _ => unreachable!("linear characters are chi0..chi3"),
    }
}

/// Exact character value.
pub fn char_value(ctx: Dihedral, irrep: Irrep, e: Element) -> CharValue {
    match irrep {
        Irrep::Linear(i) => CharValue::Int(linear_value(i, e)),
        Irrep::TwoDim(_) if e.is_reflection() => CharValue::Int(0),
        Irrep::TwoDim(j) => CharValue::two_cos(j as i64 * e.k() as i64, ctx.two_n()),
    }
}

/// `dim Fix_H V` for a complex irreducible `V`.
///
/// For `psi_j`, `<a^d>` acts by `diag(w^{jd}, w^{-jd})`, which has a fixed
/// vector only when it is the identity (`2n | jd`), and then fixes the whole
/// plane. Every reflection acts with eigenvalues `1, -1`, so a dihedral
/// subgroup fixes a line exactly when its rotation part acts trivially.
pub fn dim_fix(ctx: Dihedral, irrep: Irrep, h: Subgroup) -> u32 {
    match irrep {
        Irrep::Linear(i) => {
            let fixed = h.generators(ctx).into_iter().all(|g| linear_value(i, g) == 1);
            u32::from(fixed)
        }
        Irrep::TwoDim(j) => {
            let rotations_trivial = (j as u64 * h.rotation_step() as u64).is_multiple_of(ctx.two_n() as u64);
            match (h, rotations_trivial) {
                (_, false) => 0,
                (Subgroup::Cyclic { .. }, true) => 2,
                (Subgroup::Dihedral { .. }, true) => 1,
            }
        }
    }
}

/// Character of the rational irreducible `rid`: the sum of the characters of
/// its Galois orbit. For `W_d` at `a^r` this is the Ramanujan sum `c_{2n/d}(r)`.
pub fn rational_char_value(ctx: Dihedral, rid: RationalIrrep, e: Element) -> i64 {
    match rid {
        RationalIrrep::Linear(i) => linear_value(i, e),
        RationalIrrep::W(_) if e.is_reflection() => 0,
        RationalIrrep::W(d) => ramanujan_sum((ctx.two_n() / d) as u64, e.k() as i64),
    }
}

/// Multiplicity of every rational irreducible in `Ind_H^G 1`, via Frobenius
/// reciprocity: `<Ind_H^G 1, V> = dim Fix_H V` for a complex member `V`.
///
/// The fixed-space dimension is checked to be constant on each Galois orbit.
pub fn induced_trivial_multiplicities(
    ctx: Dihedral,
    h: Subgroup,
) -> Result<BTreeMap<RationalIrrep, u32>, RepError> {
    let mut out = BTreeMap::new();
    for info in rational_irreps(ctx) {
        let mult = dim_fix(ctx, info.id.complex_representative(), h);
        for member in galois_orbit(ctx, info.id) {
            if dim_fix(ctx, member, h) != mult {
                return Err(RepError::GaloisInconsistency {
                    irrep: info.id.to_string(),
                    subgroup: h.display(ctx),
                });
            }
        }
        out.insert(info.id, mult);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: u32) -> Dihedral {
        Dihedral::new(n).unwrap()
    }

    #[test]
    fn table_one_examples() {
        let g = ctx(5);
        let s = g.reflection(0);
        let as_ = g.reflection(1);
        assert_eq!(char_value(g, Irrep::Linear(2), s), CharValue::Int(1));
        assert_eq!(char_value(g, Irrep::Linear(2), as_), CharValue::Int(-1));
        for j in 1..5 {
            let expected = if j % 2 == 0 { 2 } else { -2 };
            assert_eq!(char_value(g, Irrep::TwoDim(j), g.rotation(5)), CharValue::Int(expected));
        }
        for x in g.elements() {
            assert_eq!(char_value(g, Irrep::Linear(0), x), CharValue::Int(1));
        }
    }

    #[test]
    fn two_cos_normalization() {
        assert_eq!(CharValue::two_cos(0, 10), CharValue::Int(2));
        assert_eq!(CharValue::two_cos(5, 10), CharValue::Int(-2));
        assert_eq!(CharValue::two_cos(3, 10), CharValue::two_cos(7, 10));
        assert_eq!(CharValue::two_cos(2, 6), CharValue::Int(-1));
        assert_eq!(CharValue::two_cos(1, 6), CharValue::Int(1));
        assert_eq!(CharValue::two_cos(2, 8), CharValue::Int(0));
        assert_eq!(CharValue::two_cos(1, 10), CharValue::TwoCos { t: 1, modulus: 10 });
    }

    #[test]
    fn fixed_space_examples() {
        for n in [3u32, 5, 9, 15] {
            let g = ctx(n);
            let center = Subgroup::Cyclic { d: n };
            let refl = Subgroup::Dihedral { d: 2 * n, j: 0 };
            let an_s = Subgroup::Dihedral { d: n, j: 0 };
            for d in omega(g) {
                let psi = Irrep::TwoDim(d);
                let even = d % 2 == 0;
                assert_eq!(dim_fix(g, psi, center), if even { 2 } else { 0 });
                assert_eq!(dim_fix(g, psi, refl), 1);
                assert_eq!(dim_fix(g, psi, an_s), u32::from(even));
            }
            for h in g.all_subgroups() {
                assert_eq!(dim_fix(g, Irrep::Linear(0), h), 1);
            }
        }
    }

    #[test]
    fn rational_irreps_examples() {
        let g = ctx(5);
        let ws: Vec<_> = rational_irreps(g).into_iter().filter(|r| matches!(r.id, RationalIrrep::W(_))).collect();
        assert_eq!(ws.len(), 2);
        assert!(ws.iter().all(|w| w.degree == 4 && w.field_degree == 2 && w.multiplicity == 2));
        assert_eq!(omega(ctx(9)), vec![1, 2, 3, 6]);
        assert_eq!(omega(ctx(2)), vec![1]);
        assert_eq!(RationalIrrep::W(1).degree(ctx(2)), 2);
    }

    #[test]
    fn rational_characters() {
        for n in [3u32, 5, 7, 9, 11] {
            let g = ctx(n);
            let w1 = RationalIrrep::W(1);
            let deg = crate::arith::totient(2 * n as u64) as i64;
            assert_eq!(rational_char_value(g, w1, g.rotation(n as i64)), -deg);
            assert_eq!(rational_char_value(g, w1, g.identity()), deg);
            for d in omega(g) {
                assert_eq!(rational_char_value(g, RationalIrrep::W(d), g.reflection(0)), 0);
                assert_eq!(rational_char_value(g, RationalIrrep::W(d), g.reflection(1)), 0);
            }
        }
    }

    #[test]
    fn induced_from_whole_group() {
        let g = ctx(6);
        let m = induced_trivial_multiplicities(g, Subgroup::whole()).unwrap();
        for (rid, mult) in m {
            assert_eq!(mult, u32::from(rid == RationalIrrep::trivial()));
        }
    }

    #[test]
    fn induced_from_center_reflection() {
        for n in [3u32, 5, 7, 9, 15] {
            let g = ctx(n);
            let m = induced_trivial_multiplicities(g, Subgroup::Dihedral { d: n, j: 0 }).unwrap();
            for (rid, mult) in m {
                let expected = match rid {
                    RationalIrrep::Linear(0) => 1,
                    RationalIrrep::W(d) if d % 2 == 0 => 1,
                    _ => 0,
                };
                assert_eq!(mult, expected, "{rid} for n = {n}");
            }
        }
    }

    #[test]
    fn parse_rational_ids() {
        assert_eq!("chi2".parse::<RationalIrrep>().unwrap(), RationalIrrep::Linear(2));
        assert_eq!("W_3".parse::<RationalIrrep>().unwrap(), RationalIrrep::W(3));
        assert!("chi7".parse::<RationalIrrep>().is_err());
        assert!("psi_1".parse::<RationalIrrep>().is_err());
    }
}
