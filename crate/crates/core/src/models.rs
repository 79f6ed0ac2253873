//! Affine plane models for the two kinds of strata.
//!
//! Type 1 curves are hyperelliptic,
//! `y^2 = (x^n - l^n)(x^n - l^-n)(x^n - m^n)(x^n - m^-n)`, with `l, m != 0` and
//! `l^{2n}, m^{2n} != 1`. Type 2 (and even `n`) curves are elliptic `n`-gonal,
//! `x^{2n} + y^{2n} + a x^n y^n + b x^n + b y^n + 1 = 0` with `a, b != 0`.
//!
//! Only degree, branching and genus are checked here; the emitter does not
//! verify that the curve really carries the dihedral action.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::equivalence::ActionLabel;
use crate::error::ModelError;

/// Collision tolerance on the numeric path.
pub const NUMERIC_TOLERANCE: f64 = 1e-9;

/// A model parameter: an exact rational, or a decimal evaluated in floating point.
#[derive(Clone, Debug, PartialEq)]
pub enum Param {
    Exact(BigRational),
    Decimal { value: f64, text: String },
}

impl Param {
    pub fn exact(numer: i64, denom: i64) -> Self {
        Param::Exact(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Param::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            Param::Decimal { value, .. } => *value,
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Param::Exact(q) => q.is_zero(),
            Param::Decimal { value, .. } => value.abs() < NUMERIC_TOLERANCE,
        }
    }

    fn pow(&self, e: u32) -> Param {
        match self {
            Param::Exact(q) => Param::Exact(num_traits::pow(q.clone(), e as usize)),
            Param::Decimal { value, .. } => {
                let v = value.powi(e as i32);
                Param::Decimal { value: v, text: v.to_string() }
            }
        }
    }

    fn recip(&self) -> Param {
        match self {
            Param::Exact(q) => Param::Exact(q.recip()),
            Param::Decimal { value, .. } => {
                let v = 1.0 / value;
                Param::Decimal { value: v, text: v.to_string() }
            }
        }
    }

    fn is_negative(&self) -> bool {
        match self {
            Param::Exact(q) => q.is_negative(),
            Param::Decimal { value, .. } => *value < 0.0,
        }
    }

    fn abs(&self) -> Param {
        match self {
            Param::Exact(q) => Param::Exact(q.abs()),
            Param::Decimal { value, .. } => Param::Decimal { value: value.abs(), text: value.abs().to_string() },
        }
    }

    fn is_one(&self) -> bool {
        match self {
            Param::Exact(q) => q.is_one(),
            Param::Decimal { value, .. } => (value - 1.0).abs() < NUMERIC_TOLERANCE,
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Exact(q) => write!(f, "{q}"),
            Param::Decimal { text, .. } => f.write_str(text),
        }
    }
}

impl FromStr for Param {
    type Err = ModelError;

    /// `3`, `-3/2` are exact; anything with a `.` or exponent is decimal.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || ModelError::ParseParam(s.to_string());
        if t.contains(['.', 'e', 'E']) {
            let value: f64 = t.parse().map_err(|_| bad())?;
            if !value.is_finite() {
                return Err(bad());
            }
            return Ok(Param::Decimal { value, text: t.to_string() });
        }
        let q = match t.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                BigRational::new(p, q)
            }
            None => BigRational::from_integer(t.parse().map_err(|_| bad())?),
        };
        Ok(Param::Exact(q))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ModelKind {
    Hyperelliptic { lambda: Param, mu: Param },
    EllipticNGonal { a: Param, b: Param },
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlaneModel {
    pub kind: ModelKind,
    pub label: ActionLabel,
    pub n: u32,
    pub genus: u32,
    pub equation: String,
}

/// Emits the model for a stratum. Hyperelliptic parameters also go through
/// [`hyperelliptic_branch_check`].
pub fn affine_model(label: ActionLabel, n: u32, p: Param, q: Param) -> Result<PlaneModel, ModelError> {
    if n < 2 || !label.is_valid_for(n) {
        return Err(ModelError::InvalidLabel { label: label.to_string(), n });
    }
    match label {
        ActionLabel::Type1 => {
            let report = hyperelliptic_branch_check(n, &p, &q)?;
            let factors: Vec<String> = [p.pow(n), p.pow(n).recip(), q.pow(n), q.pow(n).recip()]
                .iter()
                .map(|c| {
                    let sign = if c.is_negative() { '+' } else { '-' };
                    format!("(x^{n} {sign} {})", c.abs())
                })
                .collect();
            Ok(PlaneModel {
                kind: ModelKind::Hyperelliptic { lambda: p, mu: q },
                label,
                n,
                genus: report.genus,
                equation: format!("y^2 = {}", factors.join("*")),
            })
        }
        ActionLabel::Type2 | ActionLabel::Unique => {
            match (p.is_zero(), q.is_zero()) {
                (true, true) => {
                    return Err(ModelError::InvalidParams(
                        "a = b = 0 gives the Fermat curve, larger automorphism group".into(),
                    ))
                }
                (true, false) => return Err(ModelError::InvalidParams("a must be nonzero".into())),
                (false, true) => return Err(ModelError::InvalidParams("b must be nonzero".into())),
                _ => {}
            }
            let two_n = 2 * n;
            let equation = format!(
                "x^{two_n} + y^{two_n} {} {} {} + 1 = 0",
                term(&p, &format!("x^{n}*y^{n}")),
                term(&q, &format!("x^{n}")),
                term(&q, &format!("y^{n}")),
            );
            Ok(PlaneModel {
                kind: ModelKind::EllipticNGonal { a: p, b: q },
                label,
                n,
                genus: 2 * n - 1,
                equation,
            })
        }
    }
}

fn term(coeff: &Param, monomial: &str) -> String {
    let sign = if coeff.is_negative() { '-' } else { '+' };
    let magnitude = coeff.abs();
    if magnitude.is_one() {
        format!("{sign} {monomial}")
    } else {
        format!("{sign} {magnitude}*{monomial}")
    }
}

/// Result of a successful branch-point check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BranchReport {
    pub branch_points: u32,
    pub genus: u32,
    pub exact: bool,
}

/// Checks that the `4n` roots `w^k l, w^k / l, w^k m, w^k / m` are distinct,
/// so that the right-hand side is squarefree of degree `4n` and the curve has
/// genus `(4n - 2)/2 = 2n - 1`.
///
/// With exact parameters this reduces to `l^n, l^-n, m^n, m^-n` being pairwise
/// distinct; otherwise the roots are compared numerically.
pub fn hyperelliptic_branch_check(n: u32, lambda: &Param, mu: &Param) -> Result<BranchReport, ModelError> {
    for (name, p) in [("lambda", lambda), ("mu", mu)] {
        if p.is_zero() {
            return Err(ModelError::InvalidParams(format!("{name} must be nonzero")));
        }
        if p.pow(2 * n).is_one() {
            return Err(ModelError::InvalidParams(format!("{name}^{} = 1", 2 * n)));
        }
    }
    let genus = 2 * n - 1;
    match (lambda, mu) {
        (Param::Exact(l), Param::Exact(m)) => {
            let ln = num_traits::pow(l.clone(), n as usize);
            let mn = num_traits::pow(m.clone(), n as usize);
            let values = [
                ("lambda^n", ln.clone()),
                ("lambda^-n", ln.recip()),
                ("mu^n", mn.clone()),
                ("mu^-n", mn.recip()),
            ];
            let mut collisions = Vec::new();
            for i in 0..4 {
                for j in i + 1..4 {
                    if values[i].1 == values[j].1 {
                        collisions.push(format!("{} = {}", values[i].0, values[j].0));
                    }
                }
            }
            if !collisions.is_empty() {
                return Err(ModelError::DegenerateBranching(collisions.join(", ")));
            }
            Ok(BranchReport { branch_points: 4 * n, genus, exact: true })
        }
        _ => {
            let roots = numeric_branch_points(n, lambda.to_f64(), mu.to_f64());
            for i in 0..roots.len() {
                for j in i + 1..roots.len() {
                    if (roots[i] - roots[j]).norm() < NUMERIC_TOLERANCE {
                        return Err(ModelError::DegenerateBranching(format!(
                            "roots {i} and {j} coincide near {}",
                            roots[i]
                        )));
                    }
                }
            }
            Ok(BranchReport { branch_points: 4 * n, genus, exact: false })
        }
    }
}

/// The `4n` roots of the hyperelliptic right-hand side for real parameters.
pub fn numeric_branch_points(n: u32, lambda: f64, mu: f64) -> Vec<Complex64> {
    let w = |k: u32| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64);
    [lambda, 1.0 / lambda, mu, 1.0 / mu]
        .into_iter()
        .flat_map(|base| (0..n).map(move |k| w(k) * base))
        .collect()
}

/// Which orbit seed a branch point comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Seed {
    Lambda,
    LambdaInv,
    Mu,
    MuInv,
}

/// The branch point `w^k * seed`, kept symbolically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BranchPoint {
    pub k: u32,
    pub seed: Seed,
}

impl BranchPoint {
    /// `x -> w x`.
    pub fn rotate(self, n: u32) -> Self {
        BranchPoint { k: (self.k + 1) % n, seed: self.seed }
    }

    /// `x -> 1/x`.
    pub fn invert(self, n: u32) -> Self {
        let seed = match self.seed {
            Seed::Lambda => Seed::LambdaInv,
            Seed::LambdaInv => Seed::Lambda,
            Seed::Mu => Seed::MuInv,
            Seed::MuInv => Seed::Mu,
        };
        BranchPoint { k: (n - self.k) % n, seed }
    }
}

pub fn symbolic_branch_points(n: u32) -> Vec<BranchPoint> {
    [Seed::Lambda, Seed::LambdaInv, Seed::Mu, Seed::MuInv]
        .into_iter()
        .flat_map(|seed| (0..n).map(move |k| BranchPoint { k, seed }))
        .collect()
}
