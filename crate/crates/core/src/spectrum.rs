//! A lattice with a designated point set: varieties, radicals, the
//! sublattice of radical elements, and the X-top decision.
//!
//! A primal context takes `X` inside `L \ {top}`; a dual context takes `X`
//! inside `L \ {bottom}` and runs all machinery on the dualized lattice, so
//! the dual spectra never get parallel code paths.

use crate::lattice::{ElemId, Lattice, LatticeError};
use crate::topology::FiniteTopology;
use fixedbitset::FixedBitSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("point `{0}` is the {1} of the lattice and cannot belong to X")]
    ForbiddenPoint(String, &'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orientation {
    #[default]
    Primal,
    Dual,
}

impl Orientation {
    pub fn name(self) -> &'static str {
        match self {
            Orientation::Primal => "primal",
            Orientation::Dual => "dual",
        }
    }
}

/// The sublattice of radical elements, materialized as a lattice of its own
/// so every lattice operation applies to it directly. Meet is inherited;
/// the join of the sublattice is the radical of the parent join.
#[derive(Debug, Clone)]
pub struct RadicalSublattice {
    pub lattice: Lattice,
    /// `parent[i]` is the parent element id of sublattice element `i`.
    pub parent: Vec<ElemId>,
}

impl RadicalSublattice {
    /// Position of a parent element inside the sublattice, when radical.
    pub fn position(&self, parent_id: ElemId) -> Option<usize> {
        self.parent.binary_search(&parent_id).ok()
    }
}

/// Outcome of the X-top decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XTopStatus {
    pub is_x_top: bool,
    /// On failure: radical elements `x`, `y` and a point in
    /// `V(x /\ y) \ (V(x) union V(y))`.
    pub witness: Option<(ElemId, ElemId, ElemId)>,
    /// Whether `X` sits inside the strongly irreducible elements.
    pub strongly_x_top: bool,
}

/// Interval and decomposition data of a context; the pieces that need the
/// classical topology take it as an argument.
#[derive(Debug, Clone)]
pub struct IntervalData {
    pub max_x: Vec<ElemId>,
    pub min_x: Vec<ElemId>,
    pub atomic: bool,
    pub coatomic: bool,
    /// Radical elements with a complemented partner: `x ~v y = 1` and
    /// `x /\ y = radical(0)`.
    pub c_prime: Vec<ElemId>,
    /// Radicals of elements whose variety is irreducible in the classical
    /// topology.
    pub r_set: Vec<ElemId>,
    /// Whether `r_set` is contained in `X`.
    pub radical_condition: bool,
}

/// A lattice plus a designated point set, with varieties, radicals and the
/// radical sublattice cached eagerly. Immutable after construction.
#[derive(Debug, Clone)]
pub struct SpectrumContext {
    lattice: Lattice,
    orientation: Orientation,
    points: Vec<ElemId>,
    point_pos: Vec<Option<usize>>,
    varieties: Vec<FixedBitSet>,
    radicals: Vec<ElemId>,
    radical_members: FixedBitSet,
    radical_sublattice: RadicalSublattice,
}

impl SpectrumContext {
    /// Builds a context over `lattice` with points `points` (element ids of
    /// `lattice`). A dual context dualizes the lattice up front and is in
    /// every other way a primal context of the dual.
    pub fn new(
        lattice: Lattice,
        points: Vec<ElemId>,
        orientation: Orientation,
    ) -> Result<Self, SpectrumError> {
        let lattice = match orientation {
            Orientation::Primal => lattice,
            Orientation::Dual => lattice.dualize(),
        };
        let n = lattice.len();
        let mut points = points;
        points.sort_unstable();
        points.dedup();
        for &p in &points {
            if p >= n {
                return Err(LatticeError::UnknownElement { index: p, size: n }.into());
            }
            if p == lattice.top() {
                return Err(SpectrumError::ForbiddenPoint(
                    lattice.label(p).to_string(),
                    match orientation {
                        Orientation::Primal => "top",
                        Orientation::Dual => "bottom",
                    },
                ));
            }
        }
        let mut point_pos = vec![None; n];
        for (i, &p) in points.iter().enumerate() {
            point_pos[p] = Some(i);
        }

        let varieties: Vec<FixedBitSet> = (0..n)
            .map(|a| {
                let mut v = FixedBitSet::with_capacity(points.len());
                for (i, &p) in points.iter().enumerate() {
                    if lattice.leq(a, p) {
                        v.insert(i);
                    }
                }
                v
            })
            .collect();

        let mut radicals = Vec::with_capacity(n);
        for a in 0..n {
            let meet = lattice.meet_all(varieties[a].ones().map(|i| points[i]))?;
            radicals.push(meet);
        }
        let mut radical_members = FixedBitSet::with_capacity(n);
        for a in 0..n {
            if radicals[a] == a {
                radical_members.insert(a);
            }
        }

        let members: Vec<ElemId> = radical_members.ones().collect();
        let labels: Vec<String> = members
            .iter()
            .map(|&a| lattice.label(a).to_string())
            .collect();
        let mut pairs = Vec::new();
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                if i != j && lattice.leq(a, b) {
                    pairs.push((i, j));
                }
            }
        }
        let sub = Lattice::from_order_pairs(labels, &pairs, n.max(1))
            .expect("radical elements form a complete lattice");
        let radical_sublattice = RadicalSublattice {
            lattice: sub,
            parent: members,
        };

        Ok(SpectrumContext {
            lattice,
            orientation,
            points,
            point_pos,
            varieties,
            radicals,
            radical_members,
            radical_sublattice,
        })
    }

    /// The working lattice: the given one for primal contexts, its dual for
    /// dual contexts.
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Point element ids, sorted; point index `i` is `points()[i]`.
    pub fn points(&self) -> &[ElemId] {
        &self.points
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    /// Point index of an element, when it is a point.
    pub fn point_index(&self, elem: ElemId) -> Option<usize> {
        self.point_pos.get(elem).copied().flatten()
    }

    pub fn point_elem(&self, index: usize) -> ElemId {
        self.points[index]
    }

    /// `V(a)`: the points above `a`, as a bitset over point indices.
    pub fn variety(&self, a: ElemId) -> Result<&FixedBitSet, LatticeError> {
        self.varieties
            .get(a)
            .ok_or(LatticeError::UnknownElement {
                index: a,
                size: self.lattice.len(),
            })
    }

    /// The meet of a point set (the paper-side `I`); empty sets give `top`.
    pub fn meet_of_points(&self, ys: &FixedBitSet) -> ElemId {
        self.lattice
            .meet_all(ys.ones().map(|i| self.points[i]))
            .expect("point ids are in range")
    }

    /// The radical of `a`: the meet of its variety.
    pub fn radical(&self, a: ElemId) -> Result<ElemId, LatticeError> {
        self.radicals
            .get(a)
            .copied()
            .ok_or(LatticeError::UnknownElement {
                index: a,
                size: self.lattice.len(),
            })
    }

    pub fn is_radical(&self, a: ElemId) -> bool {
        self.radical_members.contains(a)
    }

    /// Element ids of the radical elements, sorted.
    pub fn radical_elements(&self) -> Vec<ElemId> {
        self.radical_members.ones().collect()
    }

    /// The materialized radical sublattice.
    pub fn radical_sublattice(&self) -> &RadicalSublattice {
        &self.radical_sublattice
    }

    /// Radical join: `a ~v b = radical(a \/ b)`.
    pub fn tilde_join(&self, a: ElemId, b: ElemId) -> ElemId {
        self.radicals[self.lattice.join(a, b)]
    }

    /// Decides the X-top property: varieties of radical elements must be
    /// closed under pairwise unions via the meet.
    pub fn x_top(&self) -> XTopStatus {
        let members = &self.radical_sublattice.parent;
        let mut witness = None;
        'outer: for &x in members {
            for &y in members {
                let m = self.lattice.meet(x, y);
                let vm = &self.varieties[m];
                for p in vm.ones() {
                    if !self.varieties[x].contains(p) && !self.varieties[y].contains(p) {
                        witness = Some((x, y, self.points[p]));
                        break 'outer;
                    }
                }
            }
        }
        let si = self.lattice.classify().strongly_irreducible;
        let strongly_x_top = self.points.iter().all(|p| si.contains(p));
        XTopStatus {
            is_x_top: witness.is_none(),
            witness,
            strongly_x_top,
        }
    }

    /// Points of `V(x)` minimal in `V(x)` under the lattice order, as point
    /// indices.
    pub fn min_over(&self, x: ElemId) -> Result<Vec<usize>, LatticeError> {
        let v = self.variety(x)?;
        Ok(v.ones()
            .filter(|&p| {
                v.ones()
                    .all(|q| q == p || !self.lattice.lt(self.points[q], self.points[p]))
            })
            .collect())
    }

    /// Maximal points of `X`, as element ids.
    pub fn max_points(&self) -> Vec<ElemId> {
        self.extremal_points(true)
    }

    /// Minimal points of `X`, as element ids.
    pub fn min_points(&self) -> Vec<ElemId> {
        self.extremal_points(false)
    }

    fn extremal_points(&self, max: bool) -> Vec<ElemId> {
        self.points
            .iter()
            .copied()
            .filter(|&p| {
                self.points.iter().all(|&q| {
                    q == p
                        || if max {
                            !self.lattice.lt(p, q)
                        } else {
                            !self.lattice.lt(q, p)
                        }
                })
            })
            .collect()
    }

    /// Interval data; irreducibility of varieties is evaluated in the given
    /// classical topology.
    pub fn interval_data(&self, tcl: &FiniteTopology) -> IntervalData {
        let max_x = self.max_points();
        let min_x = self.min_points();
        let atomic = self.points.iter().all(|&p| {
            min_x
                .iter()
                .any(|&q| self.lattice.leq(q, p))
        });
        let coatomic = self.points.iter().all(|&p| {
            max_x
                .iter()
                .any(|&q| self.lattice.leq(p, q))
        });

        let sqrt0 = self.radicals[self.lattice.bottom()];
        let top = self.lattice.top();
        let members = &self.radical_sublattice.parent;
        let c_prime: Vec<ElemId> = members
            .iter()
            .copied()
            .filter(|&x| {
                members.iter().any(|&y| {
                    self.tilde_join(x, y) == top && self.lattice.meet(x, y) == sqrt0
                })
            })
            .collect();

        let mut r_set: Vec<ElemId> = (0..self.lattice.len())
            .filter(|&x| tcl.is_irreducible(&self.varieties[x]))
            .map(|x| self.radicals[x])
            .collect();
        r_set.sort_unstable();
        r_set.dedup();
        let radical_condition = r_set.iter().all(|r| self.point_index(*r).is_some());

        IntervalData {
            max_x,
            min_x,
            atomic,
            coatomic,
            c_prime,
            r_set,
            radical_condition,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::modules::ideal_lattice;
    use crate::Caps;

    fn caps() -> Caps {
        Caps::default()
    }

    /// Ideal(Z_12) with X = {(2), (3)}: the running example.
    pub(crate) fn z12_prime_ctx() -> (SpectrumContext, Vec<u64>) {
        let (l, divs) = ideal_lattice(12, &caps()).unwrap();
        let at = |d: u64| divs.iter().position(|&x| x == d).unwrap();
        let ctx =
            SpectrumContext::new(l, vec![at(2), at(3)], Orientation::Primal).unwrap();
        (ctx, divs)
    }

    fn at(divs: &[u64], d: u64) -> usize {
        divs.iter().position(|&x| x == d).unwrap()
    }

    #[test]
    fn varieties_of_the_ideal_example() {
        let (ctx, divs) = z12_prime_ctx();
        let v6 = ctx.variety(at(&divs, 6)).unwrap();
        assert_eq!(v6.count_ones(..), 2); // both (2) and (3)
        assert_eq!(ctx.variety(ctx.lattice().bottom()).unwrap().count_ones(..), 2);
        assert_eq!(ctx.variety(ctx.lattice().top()).unwrap().count_ones(..), 0);
    }

    #[test]
    fn radicals_of_the_ideal_example() {
        let (ctx, divs) = z12_prime_ctx();
        assert_eq!(ctx.radical(at(&divs, 4)).unwrap(), at(&divs, 2));
        assert_eq!(ctx.radical(ctx.lattice().top()).unwrap(), ctx.lattice().top());
        assert_eq!(ctx.radical(ctx.lattice().bottom()).unwrap(), at(&divs, 6));
    }

    #[test]
    fn radical_elements_of_the_ideal_example() {
        let (ctx, divs) = z12_prime_ctx();
        let rads: Vec<u64> = ctx.radical_elements().iter().map(|&i| divs[i]).collect();
        assert_eq!(rads, vec![1, 2, 3, 6]); // R, (2), (3), (6)
        let sub = ctx.radical_sublattice();
        assert_eq!(sub.lattice.len(), 4);
        assert_eq!(sub.parent[sub.lattice.top()], at(&divs, 1));
        assert_eq!(sub.parent[sub.lattice.bottom()], at(&divs, 6));
    }

    #[test]
    fn empty_x_leaves_only_the_top_radical() {
        let l = gen::chain(3, &caps()).unwrap();
        let ctx = SpectrumContext::new(l, vec![], Orientation::Primal).unwrap();
        assert_eq!(ctx.radical_elements(), vec![ctx.lattice().top()]);
    }

    #[test]
    fn chain_with_middle_point() {
        let l = gen::chain(3, &caps()).unwrap();
        let ctx = SpectrumContext::new(l, vec![1], Orientation::Primal).unwrap();
        assert_eq!(ctx.radical_elements(), vec![1, 2]); // sqrt(0) = a and top
    }

    #[test]
    fn top_is_not_a_valid_point() {
        let l = gen::chain(3, &caps()).unwrap();
        assert!(matches!(
            SpectrumContext::new(l, vec![2], Orientation::Primal),
            Err(SpectrumError::ForbiddenPoint(_, "top"))
        ));
        let l2 = gen::chain(3, &caps()).unwrap();
        assert!(matches!(
            SpectrumContext::new(l2, vec![0], Orientation::Dual),
            Err(SpectrumError::ForbiddenPoint(_, "bottom"))
        ));
    }

    #[test]
    fn ideal_example_is_x_top() {
        let (ctx, _) = z12_prime_ctx();
        let status = ctx.x_top();
        assert!(status.is_x_top);
        assert!(status.strongly_x_top);
    }

    #[test]
    fn bounded_antichain_of_three_points_is_not_x_top() {
        let l = gen::antichain_bounded(3, &caps()).unwrap();
        let ctx = SpectrumContext::new(l, vec![1, 2, 3], Orientation::Primal).unwrap();
        let status = ctx.x_top();
        assert!(!status.is_x_top);
        let (x, y, p) = status.witness.expect("witness on failure");
        // replay the witness through the public operations
        let m = ctx.lattice().meet(x, y);
        let pi = ctx.point_index(p).unwrap();
        assert!(ctx.variety(m).unwrap().contains(pi));
        assert!(!ctx.variety(x).unwrap().contains(pi));
        assert!(!ctx.variety(y).unwrap().contains(pi));
    }

    #[test]
    fn small_x_is_always_x_top() {
        for k in 0..=2usize {
            let l = gen::antichain_bounded(4, &caps()).unwrap();
            let pts: Vec<usize> = (1..=k).collect();
            let ctx = SpectrumContext::new(l, pts, Orientation::Primal).unwrap();
            assert!(ctx.x_top().is_x_top, "|X| = {k}");
        }
    }

    #[test]
    fn dual_context_equals_primal_on_the_dual_lattice() {
        let (l, _) = ideal_lattice(12, &caps()).unwrap();
        let points = vec![2usize, 3];
        let dual_ctx =
            SpectrumContext::new(l.clone(), points.clone(), Orientation::Dual).unwrap();
        let primal_of_dual =
            SpectrumContext::new(l.dualize(), points, Orientation::Primal).unwrap();
        assert_eq!(dual_ctx.radical_elements(), primal_of_dual.radical_elements());
        for a in 0..l.len() {
            assert_eq!(dual_ctx.variety(a).unwrap(), primal_of_dual.variety(a).unwrap());
            assert_eq!(dual_ctx.radical(a).unwrap(), primal_of_dual.radical(a).unwrap());
        }
        assert_eq!(dual_ctx.x_top(), primal_of_dual.x_top());
    }

    #[test]
    fn min_over_examples() {
        let (ctx, divs) = z12_prime_ctx();
        let m = ctx.min_over(at(&divs, 6)).unwrap();
        assert_eq!(m.len(), 2);
        assert!(ctx.min_over(ctx.lattice().top()).unwrap().is_empty());

        let chain = gen::chain(4, &caps()).unwrap();
        let cctx = SpectrumContext::new(chain, vec![1, 2], Orientation::Primal).unwrap();
        let mins = cctx.min_over(0).unwrap();
        assert_eq!(mins.iter().map(|&i| cctx.point_elem(i)).collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn max_points_equal_max_of_radical_sublattice() {
        for (ctx, _) in [z12_prime_ctx()] {
            let sub = ctx.radical_sublattice();
            let max_c: Vec<ElemId> = sub
                .lattice
                .classify()
                .maximal
                .iter()
                .map(|&i| sub.parent[i])
                .collect();
            assert_eq!(ctx.max_points(), max_c);
        }
    }

    /// Every element radical exactly when no two elements share a variety.
    fn variety_injective(ctx: &SpectrumContext) -> bool {
        let n = ctx.lattice().len();
        (0..n).all(|x| {
            (0..n).all(|y| x == y || ctx.variety(x).unwrap() != ctx.variety(y).unwrap())
        })
    }

    #[test]
    fn all_radical_iff_varieties_injective() {
        // chain with every proper element a point: C(L) = L
        let l = gen::chain(4, &caps()).unwrap();
        let ctx = SpectrumContext::new(l, vec![0, 1, 2], Orientation::Primal).unwrap();
        assert_eq!(ctx.radical_elements().len(), ctx.lattice().len());
        assert!(variety_injective(&ctx));

        // the ideal example has non-radical elements and collides varieties
        let (ctx, _) = z12_prime_ctx();
        assert!(ctx.radical_elements().len() < ctx.lattice().len());
        assert!(!variety_injective(&ctx));

        // both directions across a family sweep
        for k in 1..=4usize {
            let l = gen::antichain_bounded(k, &caps()).unwrap();
            let points: Vec<usize> = (1..=k).collect();
            let ctx = SpectrumContext::new(l, points, Orientation::Primal).unwrap();
            assert_eq!(
                ctx.radical_elements().len() == ctx.lattice().len(),
                variety_injective(&ctx)
            );
        }
    }

    proptest::proptest! {
        #[test]
        fn radical_is_idempotent_and_variety_preserving(seed in 0u64..120) {
            let caps = Caps::default();
            let l = match seed % 5 {
                0 => gen::chain(2 + (seed / 5) as usize % 5, &caps).unwrap(),
                1 => gen::boolean(1 + (seed / 5) as u32 % 4, &caps).unwrap(),
                2 => gen::antichain_bounded(2 + (seed / 5) as usize % 4, &caps).unwrap(),
                3 => ideal_lattice(12, &caps).unwrap().0,
                _ => ideal_lattice(30, &caps).unwrap().0,
            };
            let class = l.classify();
            let points = class.maximal.clone();
            let ctx = SpectrumContext::new(l, points, Orientation::Primal).unwrap();
            for a in 0..ctx.lattice().len() {
                let r = ctx.radical(a).unwrap();
                proptest::prop_assert_eq!(ctx.radical(r).unwrap(), r);
                proptest::prop_assert_eq!(ctx.variety(a).unwrap(), ctx.variety(r).unwrap());
                proptest::prop_assert!(ctx.lattice().leq(a, r));
            }
        }
    }
}
