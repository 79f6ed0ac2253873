use std::collections::BTreeSet;

use proptest::prelude::*;

use dihedral_jacobians::group::{Automorphism, Dihedral, Element, Subgroup};

fn ctx(n: u32) -> Dihedral {
    Dihedral::new(n).unwrap()
}

/// Elements as 2x2 integer matrices acting on Z/2n x Z/2: a^k s^e sends
/// (x, f) to (k + (-1)^e x, e + f). Composition of these affine maps is an
/// independent model of the group law.
fn as_map(g: Dihedral, x: Element) -> impl Fn((i64, u8)) -> (i64, u8) {
    let m = g.two_n() as i64;
    let k = x.k() as i64;
    let e = x.is_reflection();
    move |(y, f)| {
        let sign = if e { -1 } else { 1 };
        ((k + sign * y).rem_euclid(m), f ^ u8::from(e))
    }
}

fn mul_oracle(g: Dihedral, x: Element, y: Element) -> Element {
    let fx = as_map(g, x);
    let fy = as_map(g, y);
    let (k, e) = fx(fy((0, 0)));
    let sign_check = fx(fy((1, 0)));
    let refl = sign_check.0 != (k + 1).rem_euclid(g.two_n() as i64);
    assert_eq!(refl, e == 1);
    if refl {
        g.reflection(k)
    } else {
        g.rotation(k)
    }
}

#[test]
fn multiplication_matches_affine_model() {
    for n in 2..=9 {
        let g = ctx(n);
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(g.mul(x, y), mul_oracle(g, x, y), "n = {n}, {x} * {y}");
            }
        }
    }
}

#[test]
fn defining_relations() {
    for n in 2..=20 {
        let g = ctx(n);
        let a = g.rotation(1);
        let s = g.reflection(0);
        assert_eq!(g.elem_order(a), 2 * n);
        assert_eq!(g.elem_order(s), 2);
        assert_eq!(g.elem_order(g.mul(a, s)), 2);
        assert_eq!(g.elements().count() as u32, 4 * n);
    }
}

/// Every subset closed under multiplication, for tiny groups.
fn closed_subsets(g: Dihedral) -> BTreeSet<BTreeSet<Element>> {
    let elems: Vec<Element> = g.elements().collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << elems.len()) {
        let set: BTreeSet<Element> = (0..elems.len()).filter(|i| mask >> i & 1 == 1).map(|i| elems[i]).collect();
        if set.contains(&g.identity()) && set.iter().all(|&x| set.iter().all(|&y| set.contains(&g.mul(x, y)))) {
            out.insert(set);
        }
    }
    out
}

#[test]
fn subgroups_match_subset_oracle() {
    for n in 2..=3 {
        let g = ctx(n);
        let ours: BTreeSet<BTreeSet<Element>> = g.all_subgroups().into_iter().map(|h| h.element_set(g)).collect();
        assert_eq!(ours, closed_subsets(g), "n = {n}");
    }
}

#[test]
fn subgroups_match_pair_closure() {
    // Every subgroup of a dihedral group is generated by at most two elements.
    for n in 2..=8 {
        let g = ctx(n);
        let elems: Vec<Element> = g.elements().collect();
        let mut oracle = BTreeSet::new();
        for &x in &elems {
            for &y in &elems {
                oracle.insert(g.generated_set(&[x, y]));
            }
        }
        let ours: BTreeSet<BTreeSet<Element>> = g.all_subgroups().into_iter().map(|h| h.element_set(g)).collect();
        assert_eq!(ours, oracle, "n = {n}");
        for h in g.all_subgroups() {
            assert_eq!(g.subgroup_from_set(&h.element_set(g)), h);
        }
    }
}

#[test]
fn subgroup_classes_partition() {
    for n in 2..=12 {
        let g = ctx(n);
        let mut union = BTreeSet::new();
        for class in g.subgroup_classes() {
            let conjugates: BTreeSet<Subgroup> =
                g.elements().map(|x| g.conjugate_subgroup(x, class.representative)).collect();
            let members: BTreeSet<Subgroup> = class.members.iter().copied().collect();
            assert_eq!(conjugates, members);
            for &m in &class.members {
                assert!(union.insert(m), "n = {n}: {} in two classes", m.display(g));
                assert_eq!(g.subgroup_class_rep(m), class.representative);
            }
        }
        assert_eq!(union.len(), g.all_subgroups().len());
    }
}

#[test]
fn automorphisms_match_relation_oracle() {
    // An assignment a -> x, s -> y extends to an automorphism iff x has
    // order 2n, y has order 2, xy has order 2, and x, y generate the group.
    for n in 2..=8 {
        let g = ctx(n);
        let mut oracle = BTreeSet::new();
        for x in g.elements() {
            for y in g.elements() {
                if g.elem_order(x) == 2 * n
                    && g.elem_order(y) == 2
                    && g.elem_order(g.mul(x, y)) == 2
                    && g.generated_set(&[x, y]).len() as u32 == g.order()
                {
                    oracle.insert((x, y));
                }
            }
        }
        let ours: BTreeSet<(Element, Element)> = g
            .automorphisms()
            .into_iter()
            .map(|aut| (g.apply_aut(aut, g.rotation(1)), g.apply_aut(aut, g.reflection(0))))
            .collect();
        assert_eq!(ours, oracle, "n = {n}");
    }
}

#[test]
fn characteristic_subgroups() {
    for n in 2..=10 {
        let g = ctx(n);
        assert!(g.is_characteristic(Subgroup::Cyclic { d: n }));
        assert!(g.is_characteristic(Subgroup::Cyclic { d: 1 }));
        assert!(!g.is_characteristic(g.subgroup_from_generators(&[g.reflection(0)])));
    }
}

#[test]
fn conjugacy_classes_partition() {
    for n in 2..=15 {
        let g = ctx(n);
        let classes = g.conjugacy_classes();
        assert_eq!(classes.len() as u32, n + 3);
        let total: u32 = classes.iter().map(|c| c.size(g)).sum();
        assert_eq!(total, g.order());
        for x in g.elements() {
            let class = g.conjugacy_class(x);
            for y in g.elements() {
                assert_eq!(g.conjugacy_class(g.conjugate(y, x)), class);
            }
        }
    }
}

#[test]
fn parse_round_trip() {
    let g = ctx(5);
    for x in g.elements() {
        assert_eq!(g.parse_element(&x.to_string()).unwrap(), x);
    }
    for h in g.all_subgroups() {
        assert_eq!(g.parse_subgroup(&h.display(g)).unwrap(), h);
    }
    assert!(g.parse_element("b").is_err());
    assert!(g.parse_element("a^10").is_err());
}

fn element(n: u32) -> impl Strategy<Value = Element> {
    let g = ctx(n);
    (0..2 * n as i64, any::<bool>()).prop_map(move |(k, r)| if r { g.reflection(k) } else { g.rotation(k) })
}

fn with_elements() -> impl Strategy<Value = (u32, Element, Element, Element)> {
    (2u32..40).prop_flat_map(|n| (Just(n), element(n), element(n), element(n)))
}

proptest! {
    #[test]
    fn associative_with_inverses((n, x, y, z) in with_elements()) {
        let g = ctx(n);
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        prop_assert_eq!(g.mul(x, g.inv(x)), g.identity());
        prop_assert_eq!(g.mul(g.inv(x), x), g.identity());
        prop_assert_eq!(g.mul(g.identity(), x), x);
    }

    #[test]
    fn automorphisms_are_homomorphisms((n, x, y, _z) in with_elements(), k in 0u32..80, l in 0u32..80) {
        let g = ctx(n);
        let units: Vec<Automorphism> = g.automorphisms();
        let aut = units[(k as usize * 80 + l as usize) % units.len()];
        prop_assert_eq!(g.apply_aut(aut, g.mul(x, y)), g.mul(g.apply_aut(aut, x), g.apply_aut(aut, y)));
    }

    #[test]
    fn generators_give_generated_set((n, x, y, z) in with_elements()) {
        let g = ctx(n);
        let h = g.subgroup_from_generators(&[x, y, z]);
        prop_assert_eq!(h.element_set(g), g.generated_set(&[x, y, z]));
    }
}
