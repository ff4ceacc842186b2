//! Finite topologies in minimal-open-neighborhood form.
//!
//! Every finite topology is Alexandrov, so the minimal open set `U_p` of
//! each point determines the whole space: a set is open iff it contains the
//! minimal open of each of its points. All properties the checks need are
//! decided from the `U_p` directly; only regularity and normality look at
//! the closed-set family, hence their point-count cap.

use crate::spectrum::SpectrumContext;
use fixedbitset::FixedBitSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TopologyError {
    #[error("subbase member contains point {index}, out of range 0..{size}")]
    MemberOutOfRange { index: usize, size: usize },
}

/// Point-count cap for the closed-set scans behind `regular` / `normal`.
pub const SEPARATION_CAP: usize = 20;

/// How a topology was generated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Subbase `{X \ V(a)}`.
    Classical,
    /// Subbase `{V(a) /\ X \ V(b)}`.
    FinerPatch,
    Custom(String),
}

impl Provenance {
    pub fn name(&self) -> &str {
        match self {
            Provenance::Classical => "classical",
            Provenance::FinerPatch => "finer_patch",
            Provenance::Custom(desc) => desc,
        }
    }
}

/// Separation, connectedness and spectrality flags of a finite space.
/// `regular` and `normal` are `None` when the point count exceeds
/// [`SEPARATION_CAP`]; compactness of a finite space is always true and
/// reported as such.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropertyReport {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub discrete: bool,
    pub regular: Option<bool>,
    pub normal: Option<bool>,
    pub connected: bool,
    pub hyperconnected: bool,
    pub ultraconnected: bool,
    pub sober: bool,
    pub compact: bool,
    pub spectral: bool,
}

/// A finite topological space over points `0..m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTopology {
    min_open: Vec<FixedBitSet>,
    provenance: Provenance,
}

impl FiniteTopology {
    /// Generates the topology with the given subbase: the minimal open of
    /// `p` is the intersection of the subbase members containing `p`, with
    /// the empty intersection equal to the whole space. Alexandrov
    /// coherence (`q` in `U_p` implies `U_q` inside `U_p`) holds by
    /// construction.
    pub fn from_subbase(
        num_points: usize,
        subbase: &[FixedBitSet],
        provenance: Provenance,
    ) -> Result<Self, TopologyError> {
        for member in subbase {
            if let Some(i) = member.ones().find(|&i| i >= num_points) {
                return Err(TopologyError::MemberOutOfRange {
                    index: i,
                    size: num_points,
                });
            }
        }
        let min_open = (0..num_points)
            .map(|p| {
                let mut u = FixedBitSet::with_capacity(num_points);
                u.insert_range(..);
                for member in subbase {
                    if member.contains(p) {
                        u.intersect_with(member);
                    }
                }
                u
            })
            .collect();
        Ok(FiniteTopology {
            min_open,
            provenance,
        })
    }

    /// The classical Zariski topology of a context: subbase
    /// `{X \ V(a) : a in L}`.
    pub fn classical_zariski(ctx: &SpectrumContext) -> FiniteTopology {
        let m = ctx.point_count();
        let subbase: Vec<FixedBitSet> = (0..ctx.lattice().len())
            .map(|a| {
                let mut s = ctx.variety(a).expect("element in range").clone();
                s.toggle_range(..);
                s
            })
            .collect();
        Self::from_subbase(m, &subbase, Provenance::Classical).expect("varieties are point sets")
    }

    /// The finer patch topology: subbase `{V(a) /\ (X \ V(b)) : a, b in L}`.
    pub fn finer_patch(ctx: &SpectrumContext) -> FiniteTopology {
        let m = ctx.point_count();
        let n = ctx.lattice().len();
        let mut varieties: Vec<FixedBitSet> = (0..n)
            .map(|a| ctx.variety(a).expect("element in range").clone())
            .collect();
        varieties.sort();
        varieties.dedup();
        let mut subbase = Vec::with_capacity(varieties.len() * varieties.len());
        for v in &varieties {
            for w in &varieties {
                let mut s = w.clone();
                s.toggle_range(..);
                s.intersect_with(v);
                subbase.push(s);
            }
        }
        Self::from_subbase(m, &subbase, Provenance::FinerPatch).expect("varieties are point sets")
    }

    pub fn len(&self) -> usize {
        self.min_open.len()
    }

    pub fn is_empty(&self) -> bool {
        self.min_open.is_empty()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn min_open(&self, p: usize) -> &FixedBitSet {
        &self.min_open[p]
    }

    pub fn is_open(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|p| self.min_open[p].is_subset(set))
    }

    pub fn is_closed(&self, set: &FixedBitSet) -> bool {
        let mut complement = set.clone();
        complement.toggle_range(..);
        self.is_open(&complement)
    }

    /// `{q : U_q meets A}`; a Kuratowski closure operator.
    pub fn closure(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.len());
        for q in 0..self.len() {
            if !self.min_open[q].is_disjoint(set) {
                out.insert(q);
            }
        }
        out
    }

    /// Largest open subset of `A`.
    pub fn interior(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.len());
        for p in set.ones() {
            if self.min_open[p].is_subset(set) {
                out.insert(p);
            }
        }
        out
    }

    pub fn point_closure(&self, p: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.len());
        s.insert(p);
        self.closure(&s)
    }

    /// Irreducibility of a subset: non-empty, and no two relatively open
    /// pieces are disjoint. The minimal opens witness this exactly: every
    /// open meeting `A` contains `U_a` for some `a` in `A`.
    pub fn is_irreducible(&self, set: &FixedBitSet) -> bool {
        if set.count_ones(..) == 0 {
            return false;
        }
        set.ones().all(|a| {
            set.ones().all(|b| {
                let mut meet = self.min_open[a].clone();
                meet.intersect_with(&self.min_open[b]);
                meet.intersect_with(set);
                meet.count_ones(..) > 0
            })
        })
    }

    /// Maximal irreducible subsets. In a finite space every irreducible
    /// closed set is a point closure, so these are the maximal point
    /// closures; their union covers the space.
    pub fn irreducible_components(&self) -> Vec<FixedBitSet> {
        let mut closures: Vec<FixedBitSet> = (0..self.len()).map(|p| self.point_closure(p)).collect();
        closures.sort();
        closures.dedup();
        closures
            .iter()
            .filter(|c| {
                closures
                    .iter()
                    .all(|d| c == &d || !c.is_subset(d))
            })
            .cloned()
            .collect()
    }

    /// All generic points of a closed set; sober needs exactly one per
    /// irreducible closed set, and reporting ties aids debugging non-T0
    /// inputs.
    pub fn generic_points(&self, closed: &FixedBitSet) -> Vec<usize> {
        closed
            .ones()
            .filter(|&g| &self.point_closure(g) == closed)
            .collect()
    }

    /// Distinct closed sets, as unions of point closures (closed sets of an
    /// Alexandrov space are exactly those). Enumeration stops at `cap`
    /// distinct sets and returns `None` when exceeded.
    pub fn closed_sets_capped(&self, cap: usize) -> Option<Vec<FixedBitSet>> {
        let mut closures: Vec<FixedBitSet> = (0..self.len()).map(|p| self.point_closure(p)).collect();
        closures.sort();
        closures.dedup();
        let empty = FixedBitSet::with_capacity(self.len());
        let mut seen: std::collections::HashSet<FixedBitSet> = std::collections::HashSet::new();
        seen.insert(empty.clone());
        let mut family: Vec<FixedBitSet> = vec![empty];
        let mut frontier: Vec<usize> = vec![0];
        while let Some(i) = frontier.pop() {
            for c in &closures {
                let mut next = family[i].clone();
                next.union_with(c);
                if seen.insert(next.clone()) {
                    if family.len() >= cap {
                        return None;
                    }
                    family.push(next);
                    frontier.push(family.len() - 1);
                }
            }
        }
        family.sort();
        Some(family)
    }

    fn t0(&self) -> bool {
        for p in 0..self.len() {
            for q in (p + 1)..self.len() {
                if self.min_open[p] == self.min_open[q] {
                    return false;
                }
            }
        }
        true
    }

    fn t1(&self) -> bool {
        (0..self.len()).all(|p| self.point_closure(p).count_ones(..) == 1)
    }

    fn t2(&self) -> bool {
        for p in 0..self.len() {
            for q in (p + 1)..self.len() {
                if !self.min_open[p].is_disjoint(&self.min_open[q]) {
                    return false;
                }
            }
        }
        true
    }

    fn discrete(&self) -> bool {
        (0..self.len()).all(|p| self.min_open[p].count_ones(..) == 1)
    }

    /// Open hull of a set: the smallest open superset.
    fn open_hull(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.len());
        for p in set.ones() {
            out.union_with(&self.min_open[p]);
        }
        out
    }

    /// Regularity by exhaustive closed-set/point separation. Disjoint open
    /// neighborhoods exist iff the open hulls are disjoint, since any
    /// separating opens contain the hulls.
    fn regular(&self, closed_sets: &[FixedBitSet]) -> bool {
        for f in closed_sets {
            if f.count_ones(..) == 0 {
                continue;
            }
            let hull = self.open_hull(f);
            for x in 0..self.len() {
                if !f.contains(x) && !hull.is_disjoint(&self.min_open[x]) {
                    return false;
                }
            }
        }
        true
    }

    /// Normality via disjoint point closures: a violating pair of disjoint
    /// closed sets yields a violating pair of point closures inside them,
    /// so the point closures decide the property.
    fn normal(&self) -> bool {
        let closures: Vec<FixedBitSet> = (0..self.len()).map(|p| self.point_closure(p)).collect();
        for a in &closures {
            for b in &closures {
                if a.is_disjoint(b) && !self.open_hull(a).is_disjoint(&self.open_hull(b)) {
                    return false;
                }
            }
        }
        true
    }

    fn connected(&self) -> bool {
        let m = self.len();
        if m == 0 {
            return false;
        }
        // clopen sets are unions of comparability components
        let mut comp = vec![usize::MAX; m];
        let mut stack = vec![0usize];
        comp[0] = 0;
        while let Some(p) = stack.pop() {
            for q in 0..m {
                if comp[q] == usize::MAX
                    && (self.min_open[p].contains(q) || self.min_open[q].contains(p))
                {
                    comp[q] = 0;
                    stack.push(q);
                }
            }
        }
        comp.iter().all(|&c| c == 0)
    }

    fn ultraconnected(&self) -> bool {
        if self.len() == 0 {
            return false;
        }
        let closures: Vec<FixedBitSet> = (0..self.len()).map(|p| self.point_closure(p)).collect();
        closures
            .iter()
            .all(|a| closures.iter().all(|b| !a.is_disjoint(b)))
    }

    fn sober(&self) -> bool {
        // every finite irreducible closed set is a point closure
        let mut closures: Vec<FixedBitSet> = (0..self.len()).map(|p| self.point_closure(p)).collect();
        closures.sort();
        closures.dedup();
        closures
            .iter()
            .all(|c| self.generic_points(c).len() == 1)
    }

    /// The Hochster conditions, each evaluated literally on the finite
    /// space: compactness and the compact-open basis are automatic but
    /// still computed (pairwise intersections of minimal opens must be
    /// open).
    fn spectral(&self, t0: bool, sober: bool, compact: bool) -> bool {
        let basis_closed = (0..self.len()).all(|p| {
            (0..self.len()).all(|q| {
                let mut meet = self.min_open[p].clone();
                meet.intersect_with(&self.min_open[q]);
                self.is_open(&meet)
            })
        });
        t0 && sober && compact && basis_closed
    }

    pub fn property_report(&self) -> PropertyReport {
        let t0 = self.t0();
        let t1 = self.t1();
        let t2 = self.t2();
        let discrete = self.discrete();
        let (regular, normal) = if self.len() <= SEPARATION_CAP {
            let closed = self
                .closed_sets_capped(1 << self.len().min(SEPARATION_CAP))
                .expect("cap covers all closed sets at this size");
            (Some(self.regular(&closed)), Some(self.normal()))
        } else {
            (None, None)
        };
        let connected = self.connected();
        let whole = {
            let mut s = FixedBitSet::with_capacity(self.len());
            s.insert_range(..);
            s
        };
        let hyperconnected = self.is_irreducible(&whole);
        let ultraconnected = self.ultraconnected();
        let sober = self.sober();
        let compact = true; // finite space
        let spectral = self.spectral(t0, sober, compact);
        PropertyReport {
            t0,
            t1,
            t2,
            discrete,
            regular,
            normal,
            connected,
            hyperconnected,
            ultraconnected,
            sober,
            compact,
            spectral,
        }
    }
}
