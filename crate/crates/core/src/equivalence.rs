//! Topological equivalence of actions: orbits of generating vectors under the
//! braid moves `Phi_{i,i+1}` (and their inverses) combined with `Aut(D_{2n})`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::actions::{validate_vector, GeneratingVector};
use crate::group::{Dihedral, Element, Subgroup};

/// Past this `n` the brute-force enumeration gets slow; the CLI warns.
pub const ENUMERATION_SOFT_LIMIT: u32 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

/// `Phi_{i,i+1}` for `i` in `1..=4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BraidMove {
    pub index: usize,
    pub direction: Direction,
}

impl BraidMove {
    pub fn forward(index: usize) -> Self {
        assert!((1..=4).contains(&index), "braid index must be in 1..=4");
        BraidMove { index, direction: Direction::Forward }
    }

    pub fn inverse(index: usize) -> Self {
        assert!((1..=4).contains(&index), "braid index must be in 1..=4");
        BraidMove { index, direction: Direction::Inverse }
    }

    pub fn all() -> impl Iterator<Item = BraidMove> {
        (1..=4).flat_map(|i| [BraidMove::forward(i), BraidMove::inverse(i)])
    }
}

fn braid_entries(ctx: Dihedral, entries: [Element; 5], mv: BraidMove) -> [Element; 5] {
    let i = mv.index - 1;
    let (x, y) = (entries[i], entries[i + 1]);
    let mut out = entries;
    match mv.direction {
        // (x, y) -> (x y x^-1, x)
        Direction::Forward => {
            out[i] = ctx.conjugate(x, y);
            out[i + 1] = x;
        }
        // (x, y) -> (y, y^-1 x y)
        Direction::Inverse => {
            out[i] = y;
            out[i + 1] = ctx.conjugate(ctx.inv(y), x);
        }
    }
    out
}

/// Braid moves preserve the product, the generated group and the periods.
pub fn apply_braid_move(v: &GeneratingVector, mv: BraidMove) -> GeneratingVector {
    GeneratingVector::from_entries_unchecked(v.ctx(), braid_entries(v.ctx(), *v.entries(), mv))
}

pub fn apply_automorphism(v: &GeneratingVector, aut: crate::group::Automorphism) -> GeneratingVector {
    let ctx = v.ctx();
    GeneratingVector::from_entries_unchecked(ctx, v.entries().map(|c| ctx.apply_aut(aut, c)))
}

/// Every generating vector of type `(0; 2, 2, 2, 2, n)`, with the order-`n`
/// entry in any position, sorted and deduplicated.
///
/// Three of the four involutions are free; the remaining one is forced by
/// the product condition and then validated.
pub fn enumerate_vectors(ctx: Dihedral) -> Vec<GeneratingVector> {
    let n = ctx.n();
    let involutions: Vec<Element> = ctx.elements().filter(|&x| ctx.elem_order(x) == 2).collect();
    let order_n: Vec<Element> = ctx.elements().filter(|&x| ctx.elem_order(x) == n).collect();
    let mut out: BTreeSet<GeneratingVector> = BTreeSet::new();
    for pos in 0..5 {
        for &r in &order_n {
            let free: Vec<usize> = (0..5).filter(|&i| i != pos).collect();
            let (last, chosen) = (free[3], &free[..3]);
            for &x in &involutions {
                for &y in &involutions {
                    for &z in &involutions {
                        let mut entries = [ctx.identity(); 5];
                        entries[pos] = r;
                        entries[chosen[0]] = x;
                        entries[chosen[1]] = y;
                        entries[chosen[2]] = z;
                        // c_1 ... c_5 = 1 determines entries[last] = prefix^-1 suffix^-1.
                        let prefix = ctx.product(entries[..last].iter().copied());
                        let suffix = ctx.product(entries[last + 1..].iter().copied());
                        entries[last] = ctx.inv(ctx.mul(suffix, prefix));
                        if let Ok(v) = validate_vector(ctx, &entries) {
                            out.insert(v);
                        }
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// The action types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ActionLabel {
    /// Odd `n`, the class of `(a^n, a^n, s, a^2 s, a^2)`.
    Type1,
    /// Odd `n`, the class of `(s, s, as, a^3 s, a^2)`.
    Type2,
    /// Even `n`: a single class.
    Unique,
}

impl ActionLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            ActionLabel::Type1 => "type1",
            ActionLabel::Type2 => "type2",
            ActionLabel::Unique => "unique",
        }
    }

    /// Labels that occur for this `n`.
    pub fn for_n(n: u32) -> Vec<ActionLabel> {
        if n % 2 == 1 {
            vec![ActionLabel::Type1, ActionLabel::Type2]
        } else {
            vec![ActionLabel::Unique]
        }
    }

    pub fn is_valid_for(self, n: u32) -> bool {
        Self::for_n(n).contains(&self)
    }

    /// The named representative of the class: `(a^n, a^n, as, a^3 s, a^2)` for
    /// type 1, `(s, s, as, a^3 s, a^2)` otherwise. Type 1 uses the `as`
    /// variant because its elliptic factor then sits on `chi2`.
    pub fn reference_vector(self, ctx: Dihedral) -> Option<GeneratingVector> {
        if !self.is_valid_for(ctx.n()) {
            return None;
        }
        let entries = match self {
            ActionLabel::Type1 => [
                ctx.rotation(ctx.n() as i64),
                ctx.rotation(ctx.n() as i64),
                ctx.reflection(1),
                ctx.reflection(3),
                ctx.rotation(2),
            ],
            ActionLabel::Type2 | ActionLabel::Unique => [
                ctx.reflection(0),
                ctx.reflection(0),
                ctx.reflection(1),
                ctx.reflection(3),
                ctx.rotation(2),
            ],
        };
        validate_vector(ctx, &entries).ok()
    }
}

impl fmt::Display for ActionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ActionLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "type1" | "sigma1" => Ok(ActionLabel::Type1),
            "type2" | "sigma2" => Ok(ActionLabel::Type2),
            "unique" => Ok(ActionLabel::Unique),
            other => Err(format!("unknown action `{other}`, expected type1, type2 or unique")),
        }
    }
}

/// One topological equivalence class of generating vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitClass {
    /// Lexicographically minimal member.
    pub representative: GeneratingVector,
    pub size: usize,
    pub label: ActionLabel,
}

fn neighbours(
    ctx: Dihedral,
    auts: &[crate::group::Automorphism],
    entries: [Element; 5],
) -> impl Iterator<Item = [Element; 5]> + '_ {
    BraidMove::all()
        .map(move |mv| braid_entries(ctx, entries, mv))
        .chain(auts.iter().map(move |&aut| entries.map(|c| ctx.apply_aut(aut, c))))
}

/// Breadth-first closure of a single vector under braid moves and automorphisms.
pub fn orbit_of(v: &GeneratingVector) -> BTreeSet<GeneratingVector> {
    let ctx = v.ctx();
    let auts = ctx.automorphism_generators();
    let mut seen: HashSet<[Element; 5]> = HashSet::new();
    let mut queue = VecDeque::from([*v.entries()]);
    seen.insert(*v.entries());
    while let Some(entries) = queue.pop_front() {
        for next in neighbours(ctx, &auts, entries) {
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter()
        .map(|e| GeneratingVector::from_entries_unchecked(ctx, e))
        .collect()
}

/// Partitions [`enumerate_vectors`] into orbits, sorted by representative.
pub fn orbit_classes(ctx: Dihedral) -> Vec<OrbitClass> {
    let vectors = enumerate_vectors(ctx);
    let auts = ctx.automorphism_generators();
    let mut component: HashMap<[Element; 5], usize> = HashMap::with_capacity(vectors.len());
    let mut classes: Vec<(GeneratingVector, usize, bool)> = Vec::new();
    let type1_ref = ActionLabel::Type1.reference_vector(ctx).map(|v| *v.entries());
    for v in &vectors {
        if component.contains_key(v.entries()) {
            continue;
        }
        let id = classes.len();
        let mut queue = VecDeque::from([*v.entries()]);
        component.insert(*v.entries(), id);
        let mut min = *v.entries();
        let mut size = 0;
        let mut has_type1 = false;
        while let Some(entries) = queue.pop_front() {
            size += 1;
            min = min.min(entries);
            has_type1 |= Some(entries) == type1_ref;
            for next in neighbours(ctx, &auts, entries) {
                if let std::collections::hash_map::Entry::Vacant(slot) = component.entry(next) {
                    slot.insert(id);
                    queue.push_back(next);
                }
            }
        }
        classes.push((GeneratingVector::from_entries_unchecked(ctx, min), size, has_type1));
    }
    let mut out: Vec<OrbitClass> = classes
        .into_iter()
        .map(|(representative, size, has_type1)| OrbitClass {
            representative,
            size,
            label: if ctx.n().is_multiple_of(2) {
                ActionLabel::Unique
            } else if has_type1 {
                ActionLabel::Type1
            } else {
                ActionLabel::Type2
            },
        })
        .collect();
    out.sort_by_key(|c| c.representative);
    out
}

/// Label of a vector by the orbit invariant: an entry in the characteristic
/// subgroup `<a^n>` is preserved by both braid moves and automorphisms, and
/// separates the two odd-`n` classes.
pub fn classify(v: &GeneratingVector) -> ActionLabel {
    let ctx = v.ctx();
    if ctx.n().is_multiple_of(2) {
        return ActionLabel::Unique;
    }
    let center = Subgroup::Cyclic { d: ctx.n() };
    let hits_center = v
        .entries()
        .iter()
        .any(|&c| !c.is_identity() && center.contains(ctx, c));
    if hits_center {
        ActionLabel::Type1
    } else {
        ActionLabel::Type2
    }
}

/// Label by explicit orbit membership of the reference vectors.
pub fn classify_by_orbit(v: &GeneratingVector) -> ActionLabel {
    let ctx = v.ctx();
    if ctx.n().is_multiple_of(2) {
        return ActionLabel::Unique;
    }
    let orbit = orbit_of(v);
    let type1 = ActionLabel::Type1.reference_vector(ctx).expect("odd n has type 1");
    if orbit.contains(&type1) {
        ActionLabel::Type1
    } else {
        ActionLabel::Type2
    }
}

/// The canonical (lexicographically minimal) representative of the class with this label.
pub fn canonical_representative(ctx: Dihedral, label: ActionLabel) -> Option<GeneratingVector> {
    let reference = label.reference_vector(ctx)?;
    orbit_of(&reference).into_iter().next()
}
