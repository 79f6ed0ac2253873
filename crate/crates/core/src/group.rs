//! Exact arithmetic in the dihedral group `D_{2n} = <a, s | a^{2n} = s^2 = (as)^2 = 1>`
//! of order `4n`.
//!
//! Elements are stored in the normal form `a^k s^e` with `0 <= k < 2n` and
//! `e ∈ {0, 1}`; multiplication uses `s a^k = a^{-k} s`. Subgroups are kept in
//! the canonical forms `<a^d>` and `<a^d, a^j s>` (with `d | 2n`, `0 <= j < d`),
//! which makes them usable as map keys.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;

use crate::error::GroupError;

/// The dihedral group of order `4n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dihedral {
    n: u32,
}

/// An element `a^k s^e` in normal form.
///
/// The derived ordering compares the rotation exponent first and the
/// reflection flag second; orbit canonicalization relies on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    k: u32,
    refl: bool,
}

impl Element {
    pub fn k(self) -> u32 {
        self.k
    }

    pub fn is_reflection(self) -> bool {
        self.refl
    }

    pub fn is_identity(self) -> bool {
        self.k == 0 && !self.refl
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.k, self.refl) {
            (0, false) => write!(f, "1"),
            (0, true) => write!(f, "s"),
            (1, false) => write!(f, "a"),
            (1, true) => write!(f, "a*s"),
            (k, false) => write!(f, "a^{k}"),
            (k, true) => write!(f, "a^{k}*s"),
        }
    }
}

impl Dihedral {
    pub fn new(n: u32) -> Result<Self, GroupError> {
        if n < 2 {
            return Err(GroupError::InvalidN(n));
        }
        Ok(Dihedral { n })
    }

    pub fn n(self) -> u32 {
        self.n
    }

    /// `2n`, the order of the rotation `a`.
    pub fn two_n(self) -> u32 {
        2 * self.n
    }

    /// `|D_{2n}| = 4n`.
    pub fn order(self) -> u32 {
        4 * self.n
    }

    fn reduce(self, k: i64) -> u32 {
        k.rem_euclid(self.two_n() as i64) as u32
    }

    pub fn identity(self) -> Element {
        Element { k: 0, refl: false }
    }

    pub fn rotation(self, k: i64) -> Element {
        Element { k: self.reduce(k), refl: false }
    }

    /// The reflection `a^k s`.
    pub fn reflection(self, k: i64) -> Element {
        Element { k: self.reduce(k), refl: true }
    }

    pub fn elements(self) -> impl Iterator<Item = Element> {
        let two_n = self.two_n();
        (0..two_n)
            .map(|k| Element { k, refl: false })
            .chain((0..two_n).map(|k| Element { k, refl: true }))
    }

    pub fn mul(self, x: Element, y: Element) -> Element {
        let yk = if x.refl { -(y.k as i64) } else { y.k as i64 };
        Element {
            k: self.reduce(x.k as i64 + yk),
            refl: x.refl ^ y.refl,
        }
    }

    pub fn inv(self, x: Element) -> Element {
        if x.refl {
            x
        } else {
            self.rotation(-(x.k as i64))
        }
    }

    pub fn pow(self, x: Element, e: u64) -> Element {
        if x.refl {
            if e.is_multiple_of(2) {
                self.identity()
            } else {
                x
            }
        } else {
            let k = (x.k as u64 * (e % self.two_n() as u64)) % self.two_n() as u64;
            self.rotation(k as i64)
        }
    }

    /// `g x g^{-1}`.
    pub fn conjugate(self, g: Element, x: Element) -> Element {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn product<I: IntoIterator<Item = Element>>(self, xs: I) -> Element {
        xs.into_iter().fold(self.identity(), |acc, x| self.mul(acc, x))
    }

    /// Order of an element: reflections have order 2, `a^k` has order `2n / gcd(k, 2n)`.
    pub fn elem_order(self, x: Element) -> u32 {
        if x.refl {
            2
        } else {
            self.two_n() / x.k.gcd(&self.two_n())
        }
    }

    /// Parses the element syntax `1`, `s`, `a`, `a^k`, `a*s`, `a^k*s`.
    pub fn parse_element(self, text: &str) -> Result<Element, GroupError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || GroupError::ParseElement(text.to_string());
        let (rot, refl) = match compact.as_str() {
            "1" => return Ok(self.identity()),
            "s" => return Ok(self.reflection(0)),
            t => match t.strip_suffix("*s").or_else(|| t.strip_suffix('s')) {
                Some(r) => (r, true),
                None => (t, false),
            },
        };
        let k: u32 = if rot == "a" {
            1
        } else if let Some(exp) = rot.strip_prefix("a^") {
            exp.parse().map_err(|_| bad())?
        } else {
            return Err(bad());
        };
        if k >= self.two_n() {
            return Err(GroupError::ExponentOutOfRange { k, two_n: self.two_n() });
        }
        Ok(Element { k, refl })
    }

    /// Canonical form of `<gens>`.
    ///
    /// The rotation part of the generated group is `<a^d>` with `d` the gcd of
    /// `2n`, every rotation exponent, and every difference of reflection
    /// exponents (since `(a^i s)(a^j s) = a^{i-j}`).
    pub fn subgroup_from_generators(self, gens: &[Element]) -> Subgroup {
        let mut d = self.two_n();
        let mut first_refl: Option<u32> = None;
        for g in gens {
            if g.refl {
                match first_refl {
                    None => first_refl = Some(g.k),
                    Some(j0) => d = d.gcd(&self.reduce(g.k as i64 - j0 as i64)),
                }
            } else {
                d = d.gcd(&g.k);
            }
        }
        match first_refl {
            None => Subgroup::Cyclic { d },
            Some(j) => Subgroup::Dihedral { d, j: j % d },
        }
    }

    /// Closure of `gens` under multiplication, by brute force.
    pub fn generated_set(self, gens: &[Element]) -> BTreeSet<Element> {
        let mut set: BTreeSet<Element> = BTreeSet::new();
        set.insert(self.identity());
        let mut frontier: Vec<Element> = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// Recovers the canonical form from an element set that is known to be a subgroup.
    pub fn subgroup_from_set(self, elements: &BTreeSet<Element>) -> Subgroup {
        let gens: Vec<Element> = elements.iter().copied().collect();
        self.subgroup_from_generators(&gens)
    }

    /// Every subgroup of the group, in canonical form.
    pub fn all_subgroups(self) -> Vec<Subgroup> {
        let two_n = self.two_n();
        let divisors: Vec<u32> = (1..=two_n).filter(|d| two_n.is_multiple_of(*d)).collect();
        let mut out: Vec<Subgroup> = divisors.iter().map(|&d| Subgroup::Cyclic { d }).collect();
        for &d in &divisors {
            out.extend((0..d).map(|j| Subgroup::Dihedral { d, j }));
        }
        out.sort();
        out
    }

    /// Image of a subgroup under conjugation by `g`.
    pub fn conjugate_subgroup(self, g: Element, h: Subgroup) -> Subgroup {
        let gens: Vec<Element> = h.generators(self).into_iter().map(|x| self.conjugate(g, x)).collect();
        self.subgroup_from_generators(&gens)
    }

    /// Subgroup conjugacy classes with their canonical (minimal) representative.
    ///
    /// Conjugacy is decided by comparing element sets under every one of the
    /// `4n` conjugators. Classes are sorted by subgroup order, then representative.
    pub fn subgroup_classes(self) -> Vec<SubgroupClass> {
        let mut seen: BTreeSet<Subgroup> = BTreeSet::new();
        let mut classes = Vec::new();
        for h in self.all_subgroups() {
            if seen.contains(&h) {
                continue;
            }
            let h_set = h.element_set(self);
            let mut members: BTreeSet<Subgroup> = BTreeSet::new();
            for g in self.elements() {
                let conj: BTreeSet<Element> = h_set.iter().map(|&x| self.conjugate(g, x)).collect();
                members.insert(self.subgroup_from_set(&conj));
            }
            seen.extend(members.iter().copied());
            classes.push(SubgroupClass {
                representative: *members.iter().next().expect("class contains h"),
                members: members.into_iter().collect(),
            });
        }
        classes.sort_by_key(|c| (c.representative.order(self), c.representative));
        classes
    }

    /// Canonical representative of the conjugacy class of `h`.
    ///
    /// Rotation subgroups are normal. Conjugating `<a^d, a^j s>` by `a^t`
    /// shifts `j` by `2t` and conjugating by `s` negates it, so only the
    /// parity of `j` survives when `d` is even, and nothing when `d` is odd.
    pub fn subgroup_class_rep(self, h: Subgroup) -> Subgroup {
        match h {
            Subgroup::Cyclic { .. } => h,
            Subgroup::Dihedral { d, j } => Subgroup::Dihedral { d, j: j % d.gcd(&2) },
        }
    }

    /// Whether some conjugate of `h` lies inside `k`.
    pub fn is_subconjugate(self, h: Subgroup, k: Subgroup) -> bool {
        self.elements().any(|g| {
            let hg = self.conjugate_subgroup(g, h);
            hg.element_set(self).iter().all(|&x| k.contains(self, x))
        })
    }

    pub fn conjugacy_class(self, x: Element) -> ConjugacyClass {
        if x.refl {
            if x.k.is_multiple_of(2) {
                ConjugacyClass::EvenReflections
            } else {
                ConjugacyClass::OddReflections
            }
        } else if x.k == 0 {
            ConjugacyClass::Identity
        } else if x.k == self.n {
            ConjugacyClass::Central
        } else {
            ConjugacyClass::Rotation(x.k.min(self.two_n() - x.k))
        }
    }

    /// All `n + 3` conjugacy classes.
    pub fn conjugacy_classes(self) -> Vec<ConjugacyClass> {
        let mut out = vec![ConjugacyClass::Identity, ConjugacyClass::Central];
        out.extend((1..self.n).map(ConjugacyClass::Rotation));
        out.push(ConjugacyClass::EvenReflections);
        out.push(ConjugacyClass::OddReflections);
        out
    }

    /// All `2n * phi(2n)` automorphisms `a -> a^k, s -> a^l s`.
    pub fn automorphisms(self) -> Vec<Automorphism> {
        let two_n = self.two_n();
        let mut out = Vec::new();
        for k in 1..two_n {
            if k.gcd(&two_n) != 1 {
                continue;
            }
            for l in 0..two_n {
                out.push(Automorphism { k, l });
            }
        }
        out
    }

    /// A generating set of the automorphism group: `a -> a^u` for each unit
    /// `u`, together with the outer swap.
    pub fn automorphism_generators(self) -> Vec<Automorphism> {
        let two_n = self.two_n();
        let mut out: Vec<Automorphism> =
            (1..two_n).filter(|k| k.gcd(&two_n) == 1).map(|k| Automorphism { k, l: 0 }).collect();
        out.push(self.outer_swap());
        out
    }

    /// The outer automorphism `a -> a, s -> as`.
    pub fn outer_swap(self) -> Automorphism {
        Automorphism { k: 1, l: 1 }
    }

    pub fn apply_aut(self, aut: Automorphism, x: Element) -> Element {
        let k = aut.k as i64 * x.k as i64 + if x.refl { aut.l as i64 } else { 0 };
        Element { k: self.reduce(k), refl: x.refl }
    }

    pub fn apply_aut_subgroup(self, aut: Automorphism, h: Subgroup) -> Subgroup {
        let gens: Vec<Element> = h.generators(self).into_iter().map(|x| self.apply_aut(aut, x)).collect();
        self.subgroup_from_generators(&gens)
    }

    /// `first` after `second`, i.e. `x -> first(second(x))`.
    pub fn compose(self, first: Automorphism, second: Automorphism) -> Automorphism {
        Automorphism {
            k: self.reduce(first.k as i64 * second.k as i64),
            l: self.reduce(first.k as i64 * second.l as i64 + first.l as i64),
        }
    }

    pub fn is_characteristic(self, h: Subgroup) -> bool {
        self.automorphisms().into_iter().all(|aut| self.apply_aut_subgroup(aut, h) == h)
    }

    /// Parses `<g1, g2, ...>` into the canonical form of the generated subgroup.
    pub fn parse_subgroup(self, text: &str) -> Result<Subgroup, GroupError> {
        let t = text.trim();
        let inner = t
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(|| GroupError::ParseSubgroup(text.to_string()))?;
        let gens = inner
            .split(',')
            .map(|g| self.parse_element(g))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.subgroup_from_generators(&gens))
    }
}

/// A subgroup in canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subgroup {
    /// `<a^d>` with `d | 2n`; `d = 2n` is the trivial subgroup.
    Cyclic { d: u32 },
    /// `<a^d, a^j s>` with `d | 2n` and `0 <= j < d`.
    Dihedral { d: u32, j: u32 },
}

impl Subgroup {
    pub fn whole() -> Self {
        Subgroup::Dihedral { d: 1, j: 0 }
    }

    pub fn trivial(ctx: Dihedral) -> Self {
        Subgroup::Cyclic { d: ctx.two_n() }
    }

    /// `d` such that `<a^d>` is the rotation part.
    pub fn rotation_step(self) -> u32 {
        match self {
            Subgroup::Cyclic { d } | Subgroup::Dihedral { d, .. } => d,
        }
    }

    pub fn order(self, ctx: Dihedral) -> u32 {
        match self {
            Subgroup::Cyclic { d } => ctx.two_n() / d,
            Subgroup::Dihedral { d, .. } => 2 * ctx.two_n() / d,
        }
    }

    pub fn index(self, ctx: Dihedral) -> u32 {
        ctx.order() / self.order(ctx)
    }

    pub fn generators(self, ctx: Dihedral) -> Vec<Element> {
        match self {
            Subgroup::Cyclic { d } => vec![ctx.rotation(d as i64)],
            Subgroup::Dihedral { d, j } => vec![ctx.rotation(d as i64), ctx.reflection(j as i64)],
        }
    }

    pub fn contains(self, _ctx: Dihedral, x: Element) -> bool {
        match self {
            Subgroup::Cyclic { d } => !x.refl && x.k.is_multiple_of(d),
            Subgroup::Dihedral { d, j } => x.k % d == if x.refl { j } else { 0 },
        }
    }

    pub fn elements(self, ctx: Dihedral) -> Vec<Element> {
        ctx.elements().filter(|&x| self.contains(ctx, x)).collect()
    }

    pub fn element_set(self, ctx: Dihedral) -> BTreeSet<Element> {
        ctx.elements().filter(|&x| self.contains(ctx, x)).collect()
    }

    pub fn display(self, ctx: Dihedral) -> String {
        let gens: Vec<String> = match self {
            Subgroup::Cyclic { .. } => self.generators(ctx).iter().map(|g| g.to_string()).collect(),
            Subgroup::Dihedral { d, .. } if d == ctx.two_n() => {
                vec![self.generators(ctx)[1].to_string()]
            }
            Subgroup::Dihedral { .. } => self.generators(ctx).iter().map(|g| g.to_string()).collect(),
        };
        format!("<{}>", gens.join(", "))
    }
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    pub members: Vec<Subgroup>,
}

impl SubgroupClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Conjugacy classes of elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConjugacyClass {
    Identity,
    /// `{a^n}`.
    Central,
    /// `{a^r, a^{-r}}` with `1 <= r <= n - 1`.
    Rotation(u32),
    /// `{a^{2l} s}`.
    EvenReflections,
    /// `{a^{2l+1} s}`.
    OddReflections,
}

impl ConjugacyClass {
    pub fn size(self, ctx: Dihedral) -> u32 {
        match self {
            ConjugacyClass::Identity | ConjugacyClass::Central => 1,
            ConjugacyClass::Rotation(_) => 2,
            ConjugacyClass::EvenReflections | ConjugacyClass::OddReflections => ctx.n(),
        }
    }

    pub fn representative(self, ctx: Dihedral) -> Element {
        match self {
            ConjugacyClass::Identity => ctx.identity(),
            ConjugacyClass::Central => ctx.rotation(ctx.n() as i64),
            ConjugacyClass::Rotation(r) => ctx.rotation(r as i64),
            ConjugacyClass::EvenReflections => ctx.reflection(0),
            ConjugacyClass::OddReflections => ctx.reflection(1),
        }
    }
}

impl fmt::Display for ConjugacyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjugacyClass::Identity => write!(f, "1"),
            ConjugacyClass::Central => write!(f, "a^n"),
            ConjugacyClass::Rotation(1) => write!(f, "a"),
            ConjugacyClass::Rotation(r) => write!(f, "a^{r}"),
            ConjugacyClass::EvenReflections => write!(f, "s"),
            ConjugacyClass::OddReflections => write!(f, "a*s"),
        }
    }
}

/// The automorphism `a -> a^k, s -> a^l s` with `gcd(k, 2n) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Automorphism {
    pub k: u32,
    pub l: u32,
}

impl Automorphism {
    pub fn identity() -> Self {
        Automorphism { k: 1, l: 0 }
    }
}

/// Counts elements by conjugacy class; handy for class-weighted sums.
pub fn class_sizes(ctx: Dihedral) -> BTreeMap<ConjugacyClass, u32> {
    let mut out = BTreeMap::new();
    for x in ctx.elements() {
        *out.entry(ctx.conjugacy_class(x)).or_insert(0) += 1;
    }
    out
}
