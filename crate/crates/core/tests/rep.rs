use num_complex::Complex64;
use proptest::prelude::*;

use dihedral_jacobians::arith::{divisors, mobius, ramanujan_sum, totient};
use dihedral_jacobians::group::Dihedral;
use dihedral_jacobians::rep::{
    char_value, dim_fix, galois_orbit, induced_trivial_multiplicities, irreps, omega, rational_char_value,
    rational_irreps, rational_of, Irrep, RationalIrrep,
};

const TOL: f64 = 1e-9;

fn ctx(n: u32) -> Dihedral {
    Dihedral::new(n).unwrap()
}

/// Explicit matrices: psi_j(a) = diag(w^j, w^-j), psi_j(s) = [[0,1],[1,0]].
fn psi_matrix(g: Dihedral, j: u32, k: u32, refl: bool) -> [[Complex64; 2]; 2] {
    let w = |e: i64| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / g.two_n() as f64);
    let e = (j * k) as i64;
    let z = Complex64::new(0.0, 0.0);
    if refl {
        [[z, w(e)], [w(-e), z]]
    } else {
        [[w(e), z], [z, w(-e)]]
    }
}

#[test]
fn two_dim_characters_match_matrix_traces() {
    for n in 2..=15 {
        let g = ctx(n);
        for j in 1..n {
            for x in g.elements() {
                let m = psi_matrix(g, j, x.k(), x.is_reflection());
                let trace = m[0][0] + m[1][1];
                let v = char_value(g, Irrep::TwoDim(j), x).to_f64();
                assert!((trace.re - v).abs() < TOL && trace.im.abs() < TOL, "n = {n}, psi_{j}({x})");
            }
        }
    }
}

#[test]
fn column_orthogonality() {
    for n in 2..=20 {
        let g = ctx(n);
        for x in g.elements() {
            let sum: f64 = irreps(g).into_iter().map(|v| char_value(g, v, x).to_f64().powi(2)).sum();
            let centralizer = g.elements().filter(|&y| g.mul(x, y) == g.mul(y, x)).count() as f64;
            assert!((sum - centralizer).abs() < 1e-6, "n = {n}, {x}: {sum} vs {centralizer}");
        }
    }
}

#[test]
fn row_orthonormality() {
    for n in 2..=12 {
        let g = ctx(n);
        let vs = irreps(g);
        for &u in &vs {
            for &v in &vs {
                let ip: f64 = g
                    .elements()
                    .map(|x| char_value(g, u, x).to_f64() * char_value(g, v, x).to_f64())
                    .sum::<f64>()
                    / g.order() as f64;
                let expected = if u == v { 1.0 } else { 0.0 };
                assert!((ip - expected).abs() < 1e-6, "n = {n}, <{u}, {v}> = {ip}");
            }
        }
        let degrees: u32 = vs.iter().map(|v| v.degree().pow(2)).sum();
        assert_eq!(degrees, g.order());
    }
}

fn averaged(g: Dihedral, v: Irrep, h: dihedral_jacobians::Subgroup) -> f64 {
    let elems = h.elements(g);
    elems.iter().map(|&x| char_value(g, v, x).to_f64()).sum::<f64>() / elems.len() as f64
}

#[test]
fn dim_fix_matches_averaging_oracle() {
    for n in 2..=20 {
        let g = ctx(n);
        for h in g.all_subgroups() {
            for v in irreps(g) {
                let got = dim_fix(g, v, h);
                let oracle = averaged(g, v, h);
                assert!((oracle - got as f64).abs() < TOL, "n = {n}, {}, {v}", h.display(g));
                assert!(got <= v.degree());
            }
        }
    }
}

#[test]
fn dim_fix_constant_on_classes() {
    for n in 2..=12 {
        let g = ctx(n);
        for class in g.subgroup_classes() {
            for v in irreps(g) {
                let d = dim_fix(g, v, class.representative);
                assert!(class.members.iter().all(|&m| dim_fix(g, v, m) == d));
            }
        }
    }
}

#[test]
fn ramanujan_matches_primitive_root_sums() {
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    for m in 1u64..=100 {
        for r in 0..m {
            let brute: Complex64 = (1..=m)
                .filter(|&k| gcd(k, m) == 1)
                .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (k * r) as f64 / m as f64))
                .sum();
            let exact = ramanujan_sum(m, r as i64);
            assert!((brute.re - exact as f64).abs() < TOL && brute.im.abs() < TOL, "c_{m}({r})");
            assert_eq!(brute.re.round() as i64, exact);
        }
    }
}

#[test]
fn arithmetic_functions_by_brute_force() {
    for m in 1u64..=200 {
        let divs: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
        assert_eq!(divisors(m), divs);
        let phi = (1..=m).filter(|&k| (1..=k).filter(|d| k % d == 0 && m % d == 0).max() == Some(1)).count();
        assert_eq!(totient(m) as usize, phi, "phi({m})");
        // Mobius inversion: sum_{d | m} mu(d) = [m = 1].
        let s: i64 = divs.iter().map(|&d| mobius(d)).sum();
        assert_eq!(s, i64::from(m == 1));
    }
}

#[test]
fn rational_characters_are_galois_sums() {
    for n in 2..=20 {
        let g = ctx(n);
        for info in rational_irreps(g) {
            let orbit = galois_orbit(g, info.id);
            for x in g.elements() {
                let sum: f64 = orbit.iter().map(|&v| char_value(g, v, x).to_f64()).sum();
                let exact = rational_char_value(g, info.id, x);
                assert!((sum - exact as f64).abs() < 1e-6, "n = {n}, {} at {x}", info.id);
            }
            assert!(orbit.iter().all(|&v| rational_of(g, v) == info.id));
            assert_eq!(info.degree, orbit.iter().map(|v| v.degree()).sum::<u32>());
        }
    }
}

#[test]
fn rational_irreps_cover_complex_ones() {
    for n in 2..=30 {
        let g = ctx(n);
        let mut covered: Vec<Irrep> = rational_irreps(g).into_iter().flat_map(|i| galois_orbit(g, i.id)).collect();
        covered.sort();
        let mut all = irreps(g);
        all.sort();
        assert_eq!(covered, all, "n = {n}");
        for d in omega(g) {
            let w = RationalIrrep::W(d);
            assert_eq!(w.degree(g) as u64, totient((2 * n / d) as u64));
            assert_eq!(w.field_degree(g) * 2, w.degree(g));
        }
    }
}

#[test]
fn frobenius_sum_is_index() {
    for n in 2..=20 {
        let g = ctx(n);
        for class in g.subgroup_classes() {
            let h = class.representative;
            let mults = induced_trivial_multiplicities(g, h).unwrap();
            let total: u32 = mults.iter().map(|(r, m)| m * r.degree(g)).sum();
            assert_eq!(total, h.index(g), "n = {n}, {}", h.display(g));
            assert_eq!(mults[&RationalIrrep::trivial()], 1);
        }
    }
}

#[test]
fn induced_examples() {
    for n in [3u32, 5, 7, 9, 15] {
        let g = ctx(n);
        let an_s = g.subgroup_from_generators(&[g.rotation(n as i64), g.reflection(0)]);
        let mults = induced_trivial_multiplicities(g, an_s).unwrap();
        for (rep, m) in mults {
            let expected = match rep {
                RationalIrrep::Linear(0) => 1,
                RationalIrrep::W(d) if d % 2 == 0 => 1,
                _ => 0,
            };
            assert_eq!(m, expected, "n = {n}, {rep}");
        }
        let whole = induced_trivial_multiplicities(g, dihedral_jacobians::Subgroup::whole()).unwrap();
        assert!(whole.iter().all(|(r, &m)| m == u32::from(*r == RationalIrrep::trivial())));
    }
}

proptest! {
    #[test]
    fn ramanujan_is_even_and_periodic(m in 1u64..500, r in -1000i64..1000) {
        let c = ramanujan_sum(m, r);
        prop_assert_eq!(c, ramanujan_sum(m, -r));
        prop_assert_eq!(c, ramanujan_sum(m, r + m as i64));
        prop_assert!(c.unsigned_abs() <= totient(m));
    }
}
