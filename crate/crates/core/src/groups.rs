//! Finite groups from multiplication tables: normal-subgroup lattices and
//! the center-based point sets.

use crate::lattice::{ElemId, Lattice, LatticeError};
use crate::Caps;
use fixedbitset::FixedBitSet;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group order {got} over cap {cap}")]
    CapacityExceeded { got: usize, cap: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Which point set to pair with the normal-subgroup lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupSpectrumKind {
    /// All proper normal subgroups.
    Normal,
    /// All subgroups of the center, except the whole group.
    Center,
    /// Finite subgroups of the center; coincides with `Center` for finite
    /// groups, kept as a separate selector for fidelity.
    FiniteCenter,
}

impl GroupSpectrumKind {
    pub fn name(self) -> &'static str {
        match self {
            GroupSpectrumKind::Normal => "normal",
            GroupSpectrumKind::Center => "center",
            GroupSpectrumKind::FiniteCenter => "finite_center",
        }
    }
}

/// A finite group as a validated multiplication table.
#[derive(Debug, Clone)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let g = table.len();
        if g == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        let mut flat = Vec::with_capacity(g * g);
        for row in &table {
            if row.len() != g {
                return Err(GroupError::NotAGroup("table is not square".into()));
            }
            for &v in row {
                if v >= g {
                    return Err(GroupError::NotAGroup(format!(
                        "entry {v} out of range 0..{g}"
                    )));
                }
                flat.push(v);
            }
        }
        let mul = |a: usize, b: usize| flat[a * g + b];
        let identity = (0..g)
            .find(|&e| (0..g).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| GroupError::NotAGroup("no identity element".into()))?;
        for a in 0..g {
            if !(0..g).any(|b| mul(a, b) == identity && mul(b, a) == identity) {
                return Err(GroupError::NotAGroup(format!("element {a} has no inverse")));
            }
        }
        for a in 0..g {
            for b in 0..g {
                for c in 0..g {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(GroupTable {
            order: g,
            table: flat,
            identity,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.mul(a, b) == self.identity)
            .expect("validated group")
    }

    pub fn center(&self) -> FixedBitSet {
        let mut z = FixedBitSet::with_capacity(self.order);
        for a in 0..self.order {
            if (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)) {
                z.insert(a);
            }
        }
        z
    }

    fn closure(&self, seed: &FixedBitSet) -> FixedBitSet {
        let mut set = seed.clone();
        set.insert(self.identity);
        loop {
            let mut next = set.clone();
            for a in set.ones() {
                for b in set.ones() {
                    next.insert(self.mul(a, b));
                }
            }
            if next == set {
                return set;
            }
            set = next;
        }
    }

    /// Every subgroup, as member bitsets, by closing cyclic subgroups under
    /// joins.
    pub fn subgroups(&self) -> Vec<FixedBitSet> {
        let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut sets: Vec<FixedBitSet> = Vec::new();
        let cyclics: Vec<FixedBitSet> = (0..self.order)
            .map(|x| {
                let mut seed = FixedBitSet::with_capacity(self.order);
                seed.insert(x);
                self.closure(&seed)
            })
            .collect();
        for c in &cyclics {
            if !seen.contains_key(c) {
                seen.insert(c.clone(), sets.len());
                sets.push(c.clone());
            }
        }
        let mut frontier: Vec<usize> = (0..sets.len()).collect();
        while let Some(i) = frontier.pop() {
            for c in &cyclics {
                if c.is_subset(&sets[i]) {
                    continue;
                }
                let mut seed = sets[i].clone();
                seed.union_with(c);
                let joined = self.closure(&seed);
                if !seen.contains_key(&joined) {
                    seen.insert(joined.clone(), sets.len());
                    frontier.push(sets.len());
                    sets.push(joined);
                }
            }
        }
        sets.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
        sets
    }

    pub fn is_normal(&self, h: &FixedBitSet) -> bool {
        (0..self.order).all(|g| {
            let gi = self.inverse(g);
            h.ones().all(|x| h.contains(self.mul(self.mul(g, x), gi)))
        })
    }
}

/// The normal-subgroup lattice of a finite group together with a selected
/// point set.
#[derive(Debug, Clone)]
pub struct GroupContext {
    pub lattice: Lattice,
    /// `members[i]` is the element set of lattice element `i`.
    pub members: Vec<FixedBitSet>,
    /// The selected X, as lattice element ids.
    pub points: Vec<ElemId>,
}

/// Builds the lattice of all normal subgroups (meet is intersection, join is
/// the product subgroup) and selects X by kind. For the center kinds, checks
/// that the radical-element computation downstream will see exactly
/// `X + {G}`; that assertion lives in the spectrum layer and is re-verified
/// by tests.
pub fn group_lattice(
    group: &GroupTable,
    kind: GroupSpectrumKind,
    caps: &Caps,
) -> Result<GroupContext, GroupError> {
    if group.order() > caps.group {
        return Err(GroupError::CapacityExceeded {
            got: group.order(),
            cap: caps.group,
        });
    }
    let normals: Vec<FixedBitSet> = group
        .subgroups()
        .into_iter()
        .filter(|h| group.is_normal(h))
        .collect();
    let labels: Vec<String> = normals.iter().map(|h| describe_subgroup(group, h)).collect();
    let mut pairs = Vec::new();
    for (i, a) in normals.iter().enumerate() {
        for (j, b) in normals.iter().enumerate() {
            if i != j && a.is_subset(b) {
                pairs.push((i, j));
            }
        }
    }
    let lattice = Lattice::from_order_pairs(labels, &pairs, caps.lattice)?;

    let top = lattice.top();
    let center = group.center();
    let points: Vec<ElemId> = match kind {
        GroupSpectrumKind::Normal => (0..normals.len()).filter(|&i| i != top).collect(),
        GroupSpectrumKind::Center | GroupSpectrumKind::FiniteCenter => (0..normals.len())
            .filter(|&i| i != top && normals[i].is_subset(&center))
            .collect(),
    };
    Ok(GroupContext {
        lattice,
        members: normals,
        points,
    })
}

fn describe_subgroup(group: &GroupTable, h: &FixedBitSet) -> String {
    if h.count_ones(..) == 1 {
        return "{e}".into();
    }
    if h.count_ones(..) == group.order() {
        return "G".into();
    }
    let mut span = FixedBitSet::with_capacity(group.order());
    span.insert(group.identity());
    let mut gens = Vec::new();
    let mut candidates: Vec<usize> = h.ones().collect();
    candidates.sort_by_key(|&x| {
        let mut seed = FixedBitSet::with_capacity(group.order());
        seed.insert(x);
        std::cmp::Reverse(group.closure(&seed).count_ones(..))
    });
    for x in candidates {
        if !span.contains(x) {
            gens.push(x);
            let mut seed = span.clone();
            seed.insert(x);
            span = group.closure(&seed);
            if span == *h {
                break;
            }
        }
    }
    format!(
        "<{}>",
        gens.iter()
            .map(|g| format!("g{g}"))
            .collect::<Vec<_>>()
            .join(",")
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn s3_normal_subgroups() {
        let g = gen::s3();
        let ctx = group_lattice(&g, GroupSpectrumKind::Normal, &Caps::default()).unwrap();
        // {e}, A_3, S_3
        assert_eq!(ctx.members.len(), 3);
        let sizes: Vec<usize> = ctx.members.iter().map(|m| m.count_ones(..)).collect();
        assert_eq!(sizes, vec![1, 3, 6]);
        assert_eq!(ctx.points.len(), 2);
    }

    #[test]
    fn s3_center_kind_selects_only_the_trivial_subgroup() {
        let g = gen::s3();
        let ctx = group_lattice(&g, GroupSpectrumKind::Center, &Caps::default()).unwrap();
        assert_eq!(ctx.points.len(), 1);
        assert_eq!(ctx.members[ctx.points[0]].count_ones(..), 1);
    }

    #[test]
    fn z4_normal_lattice_is_a_chain() {
        let g = gen::cyclic_group(4);
        let ctx = group_lattice(&g, GroupSpectrumKind::Normal, &Caps::default()).unwrap();
        assert_eq!(ctx.members.len(), 3);
        assert_eq!(ctx.points.len(), 2);
        for w in 0..ctx.members.len() - 1 {
            assert!(ctx.lattice.lt(w, w + 1));
        }
    }

    #[test]
    fn abelian_center_kind_takes_all_proper_subgroups() {
        let g = gen::cyclic_group(4);
        let normal = group_lattice(&g, GroupSpectrumKind::Normal, &Caps::default()).unwrap();
        let center = group_lattice(&g, GroupSpectrumKind::Center, &Caps::default()).unwrap();
        assert_eq!(normal.points, center.points);
    }

    #[test]
    fn q8_every_subgroup_is_normal() {
        let g = gen::q8();
        let subs = g.subgroups();
        assert_eq!(subs.len(), 6); // {e}, {±1}, three cyclic of order 4, Q8
        assert!(subs.iter().all(|h| g.is_normal(h)));
    }

    #[test]
    fn d4_has_a_two_element_center() {
        let g = gen::d4();
        assert_eq!(g.center().count_ones(..), 2);
        let ctx = group_lattice(&g, GroupSpectrumKind::Center, &Caps::default()).unwrap();
        assert_eq!(ctx.points.len(), 2); // {e} and Z(D4)
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(matches!(
            GroupTable::new(vec![vec![0, 1], vec![1, 1]]),
            Err(GroupError::NotAGroup(_))
        ));
        // left-rotation table that breaks associativity
        let t = vec![vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]];
        assert!(GroupTable::new(t).is_err());
    }
}
