use std::collections::BTreeSet;

use proptest::prelude::*;

use dihedral_jacobians::actions::{rh_genus, Signature};
use dihedral_jacobians::equivalence::ActionLabel;
use dihedral_jacobians::models::{
    affine_model, hyperelliptic_branch_check, numeric_branch_points, symbolic_branch_points, BranchPoint, ModelKind,
    Param, NUMERIC_TOLERANCE,
};
use dihedral_jacobians::ModelError;

fn p(s: &str) -> Param {
    s.parse().unwrap()
}

#[test]
fn published_instances() {
    let m = affine_model(ActionLabel::Type1, 3, p("2"), p("3")).unwrap();
    assert_eq!(m.equation, "y^2 = (x^3 - 8)*(x^3 - 1/8)*(x^3 - 27)*(x^3 - 1/27)");
    assert_eq!(m.genus, 5);
    assert!(matches!(m.kind, ModelKind::Hyperelliptic { .. }));

    let m = affine_model(ActionLabel::Unique, 2, p("1"), p("1")).unwrap();
    assert_eq!(m.equation, "x^4 + y^4 + x^2*y^2 + x^2 + y^2 + 1 = 0");
    assert_eq!(m.genus, 3);

    let m = affine_model(ActionLabel::Type2, 3, p("-1/2"), p("3")).unwrap();
    assert_eq!(m.equation, "x^6 + y^6 - 1/2*x^3*y^3 + 3*x^3 + 3*y^3 + 1 = 0");
}

#[test]
fn rejections() {
    assert!(matches!(
        affine_model(ActionLabel::Type2, 3, p("0"), p("0")),
        Err(ModelError::InvalidParams(msg)) if msg.contains("Fermat")
    ));
    assert!(matches!(affine_model(ActionLabel::Type2, 3, p("0"), p("1")), Err(ModelError::InvalidParams(_))));
    assert!(matches!(affine_model(ActionLabel::Type1, 4, p("2"), p("3")), Err(ModelError::InvalidLabel { .. })));
    assert!(matches!(affine_model(ActionLabel::Unique, 3, p("2"), p("3")), Err(ModelError::InvalidLabel { .. })));
    assert!(matches!(hyperelliptic_branch_check(3, &p("1"), &p("2")), Err(ModelError::InvalidParams(_))));
    assert!(matches!(hyperelliptic_branch_check(3, &p("0"), &p("2")), Err(ModelError::InvalidParams(_))));
    assert!(matches!(hyperelliptic_branch_check(3, &p("2"), &p("2")), Err(ModelError::DegenerateBranching(_))));
    assert!(matches!(hyperelliptic_branch_check(3, &p("2"), &p("1/2")), Err(ModelError::DegenerateBranching(_))));
    assert!(matches!(hyperelliptic_branch_check(3, &p("2.0"), &p("2")), Err(ModelError::DegenerateBranching(_))));
    assert!(matches!(hyperelliptic_branch_check(3, &p("2"), &p("0.5")), Err(ModelError::DegenerateBranching(_))));
    assert!("1/0".parse::<Param>().is_err());
    assert!("abc".parse::<Param>().is_err());
}

#[test]
fn opposite_parameters_are_not_degenerate() {
    // For odd n, x^n - c and x^n + c share no root, so mu = -lambda is fine.
    let r = hyperelliptic_branch_check(3, &p("2"), &p("-2")).unwrap();
    assert_eq!(r.branch_points, 12);
    let roots = numeric_branch_points(3, 2.0, -2.0);
    for (i, x) in roots.iter().enumerate() {
        for y in &roots[i + 1..] {
            assert!((x - y).norm() > NUMERIC_TOLERANCE);
        }
    }
}

#[test]
fn decimal_path() {
    let r = hyperelliptic_branch_check(5, &p("1.5"), &p("2.25")).unwrap();
    assert_eq!((r.branch_points, r.genus, r.exact), (20, 9, false));
    let r = hyperelliptic_branch_check(5, &p("3/2"), &p("9/4")).unwrap();
    assert!(r.exact);
}

#[test]
fn branch_points_closed_under_the_dihedral_action() {
    for n in (3u32..=15).step_by(2) {
        let pts: BTreeSet<BranchPoint> = symbolic_branch_points(n).into_iter().collect();
        assert_eq!(pts.len() as u32, 4 * n);
        let rotated: BTreeSet<BranchPoint> = pts.iter().map(|b| b.rotate(n)).collect();
        let inverted: BTreeSet<BranchPoint> = pts.iter().map(|b| b.invert(n)).collect();
        assert_eq!(rotated, pts);
        assert_eq!(inverted, pts);
        for b in &pts {
            assert_eq!(b.invert(n).invert(n), *b);
        }
    }
}

proptest! {
    #[test]
    fn genus_matches_riemann_hurwitz(
        k in 1u32..8,
        ln in 2i64..40, ld in 1i64..40, mn in 2i64..40, md in 1i64..40,
    ) {
        let n = 2 * k + 1;
        let lambda = Param::exact(ln, ld);
        let mu = Param::exact(mn, md);
        match affine_model(ActionLabel::Type1, n, lambda, mu) {
            Ok(m) => {
                prop_assert_eq!(m.genus as u64, rh_genus(4 * n as u64, &Signature::dihedral_family(n)).unwrap());
                prop_assert_eq!(m.equation.matches(&format!("(x^{n} ")).count(), 4);
                let roots = numeric_branch_points(n, ln as f64 / ld as f64, mn as f64 / md as f64);
                prop_assert_eq!(roots.len() as u32, 4 * n);
            }
            Err(e) => {
                let degenerate = ln * ld == 0
                    || ln.abs() == ld.abs()
                    || mn.abs() == md.abs()
                    || ln * md == mn * ld
                    || ln * mn == ld * md;
                prop_assert!(degenerate, "rejected {}/{} {}/{}: {}", ln, ld, mn, md, e);
            }
        }
    }
}
