//! Finite bounded lattices as explicit order matrices with meet/join tables.
//!
//! Finiteness plus bounds makes every lattice here complete: arbitrary meets
//! and joins are table folds, with the conventions `meet of {} = top` and
//! `join of {} = bottom`.

mod classify;

pub use classify::Classification;

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// Index of a lattice element, `0..n`.
pub type ElemId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("duplicate element label `{0}`")]
    DuplicateElement(String),
    #[error("unknown element index {index} (lattice has {size} elements)")]
    UnknownElement { index: usize, size: usize },
    #[error("not a poset: order cycle through `{0}` and `{1}`")]
    NotAPoset(String, String),
    #[error("not a lattice: `{a}` and `{b}` have no {kind}")]
    NotALattice {
        a: String,
        b: String,
        /// "greatest lower bound" or "least upper bound"
        kind: &'static str,
    },
    #[error("missing bounds: {0}")]
    MissingBounds(String),
    #[error("capacity exceeded: {got} elements over cap {cap}")]
    CapacityExceeded { got: usize, cap: usize },
}

/// A finite bounded lattice.
///
/// `up[a]` is the bitset `{b : a <= b}` (one row of the order matrix) and
/// `down[a]` its transpose. Meet and join are precomputed `n x n` tables.
/// Values are immutable after validation; all operations are pure reads.
#[derive(Debug, Clone)]
pub struct Lattice {
    labels: Vec<String>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    meet: Vec<u16>,
    join: Vec<u16>,
    bottom: ElemId,
    top: ElemId,
}

impl Lattice {
    /// Validates an order presentation (full order pairs or Hasse covers;
    /// both are closed reflexively and transitively) into a lattice.
    pub fn from_order_pairs(
        labels: Vec<String>,
        pairs: &[(usize, usize)],
        cap: usize,
    ) -> Result<Self, LatticeError> {
        let n = labels.len();
        if n > cap || n > u16::MAX as usize {
            return Err(LatticeError::CapacityExceeded {
                got: n,
                cap: cap.min(u16::MAX as usize),
            });
        }
        if n == 0 {
            return Err(LatticeError::MissingBounds("no elements".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(LatticeError::DuplicateElement(l.clone()));
            }
        }

        let mut up: Vec<FixedBitSet> = (0..n)
            .map(|a| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert(a);
                row
            })
            .collect();
        for &(a, b) in pairs {
            for ix in [a, b] {
                if ix >= n {
                    return Err(LatticeError::UnknownElement { index: ix, size: n });
                }
            }
            up[a].insert(b);
        }

        // Warshall closure on bitset rows: if a <= k then a inherits k's upset.
        for k in 0..n {
            let row_k = up[k].clone();
            for a in 0..n {
                if a != k && up[a].contains(k) {
                    up[a].union_with(&row_k);
                }
            }
        }

        for a in 0..n {
            for b in (a + 1)..n {
                if up[a].contains(b) && up[b].contains(a) {
                    return Err(LatticeError::NotAPoset(
                        labels[a].clone(),
                        labels[b].clone(),
                    ));
                }
            }
        }

        let mut down: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n); n];
        for a in 0..n {
            for b in up[a].ones() {
                down[b].insert(a);
            }
        }

        let bottom = (0..n).find(|&x| up[x].count_ones(..) == n);
        let top = (0..n).find(|&x| down[x].count_ones(..) == n);
        let (bottom, top) = match (bottom, top) {
            (Some(b), Some(t)) => (b, t),
            (None, _) => return Err(LatticeError::MissingBounds("no minimum element".into())),
            (_, None) => return Err(LatticeError::MissingBounds("no maximum element".into())),
        };

        // rank[x] = |down[x]|; the glb of a bounded set, when it exists, is
        // its unique member of maximal rank.
        let drank: Vec<usize> = (0..n).map(|x| down[x].count_ones(..)).collect();
        let urank: Vec<usize> = (0..n).map(|x| up[x].count_ones(..)).collect();

        let mut meet = vec![0u16; n * n];
        let mut join = vec![0u16; n * n];
        let mut common = FixedBitSet::with_capacity(n);
        for a in 0..n {
            for b in a..n {
                common.clone_from(&down[a]);
                common.intersect_with(&down[b]);
                let g = common
                    .ones()
                    .max_by_key(|&x| drank[x])
                    .expect("bottom is a common lower bound");
                if !common.is_subset(&down[g]) {
                    return Err(LatticeError::NotALattice {
                        a: labels[a].clone(),
                        b: labels[b].clone(),
                        kind: "greatest lower bound",
                    });
                }
                meet[a * n + b] = g as u16;
                meet[b * n + a] = g as u16;

                common.clone_from(&up[a]);
                common.intersect_with(&up[b]);
                let l = common
                    .ones()
                    .max_by_key(|&x| urank[x])
                    .expect("top is a common upper bound");
                if !common.is_subset(&up[l]) {
                    return Err(LatticeError::NotALattice {
                        a: labels[a].clone(),
                        b: labels[b].clone(),
                        kind: "least upper bound",
                    });
                }
                join[a * n + b] = l as u16;
                join[b * n + a] = l as u16;
            }
        }

        Ok(Lattice {
            labels,
            up,
            down,
            meet,
            join,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: ElemId) -> &str {
        &self.labels[x]
    }

    pub fn bottom(&self) -> ElemId {
        self.bottom
    }

    pub fn top(&self) -> ElemId {
        self.top
    }

    pub fn leq(&self, a: ElemId, b: ElemId) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: ElemId, b: ElemId) -> bool {
        a != b && self.leq(a, b)
    }

    /// `{b : a <= b}`.
    pub fn upset(&self, a: ElemId) -> &FixedBitSet {
        &self.up[a]
    }

    /// `{b : b <= a}`.
    pub fn downset(&self, a: ElemId) -> &FixedBitSet {
        &self.down[a]
    }

    pub fn meet(&self, a: ElemId, b: ElemId) -> ElemId {
        self.meet[a * self.len() + b] as ElemId
    }

    pub fn join(&self, a: ElemId, b: ElemId) -> ElemId {
        self.join[a * self.len() + b] as ElemId
    }

    fn check_elem(&self, x: ElemId) -> Result<(), LatticeError> {
        if x < self.len() {
            Ok(())
        } else {
            Err(LatticeError::UnknownElement {
                index: x,
                size: self.len(),
            })
        }
    }

    /// Meet of an arbitrary element set; the empty meet is `top`.
    pub fn meet_all<I: IntoIterator<Item = ElemId>>(&self, set: I) -> Result<ElemId, LatticeError> {
        let mut acc = self.top;
        for x in set {
            self.check_elem(x)?;
            acc = self.meet(acc, x);
        }
        Ok(acc)
    }

    /// Join of an arbitrary element set; the empty join is `bottom`.
    pub fn join_all<I: IntoIterator<Item = ElemId>>(&self, set: I) -> Result<ElemId, LatticeError> {
        let mut acc = self.bottom;
        for x in set {
            self.check_elem(x)?;
            acc = self.join(acc, x);
        }
        Ok(acc)
    }

    /// The dual lattice: order transposed, meet and join swapped, bounds
    /// swapped. An involution.
    pub fn dualize(&self) -> Lattice {
        Lattice {
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Maximal elements of a subset under the lattice order.
    pub fn maximal_in(&self, set: &FixedBitSet) -> Vec<ElemId> {
        set.ones()
            .filter(|&x| set.ones().all(|y| y == x || !self.lt(x, y)))
            .collect()
    }

    /// Minimal elements of a subset under the lattice order.
    pub fn minimal_in(&self, set: &FixedBitSet) -> Vec<ElemId> {
        set.ones()
            .filter(|&x| set.ones().all(|y| y == x || !self.lt(y, x)))
            .collect()
    }

    /// Tests whether every subset `S` with `meet S <= p` contains some
    /// `s <= p`. Decided by the single worst case `S* = {s : s not<= p}`:
    /// any witness subset sits inside `S*`, and enlarging a subset only
    /// lowers its meet, so `S*` fails iff some subset fails.
    pub fn completely_strongly_irreducible(&self, p: ElemId) -> Result<bool, LatticeError> {
        self.check_elem(p)?;
        let mut acc = self.top;
        for s in 0..self.len() {
            if !self.leq(s, p) {
                acc = self.meet(acc, s);
            }
        }
        Ok(!self.leq(acc, p))
    }

    /// The complete A-property: for every `q` in `A`, the meet of the rest
    /// of `A` is not below `q`.
    pub fn complete_a_property<S: AsRef<[ElemId]>>(&self, set: S) -> Result<bool, LatticeError> {
        let set = set.as_ref();
        for &q in set {
            self.check_elem(q)?;
            let rest = self.meet_all(set.iter().copied().filter(|&p| p != q))?;
            if self.leq(rest, q) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The complete max property: the complete `Max(L)`-property, where
    /// `Max(L)` is the set of maximal elements of `L \ {top}`.
    pub fn complete_max_property(&self) -> bool {
        let max = self.classify().maximal;
        self.complete_a_property(&max).expect("ids in range")
    }

    /// Hasse covers `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(ElemId, ElemId)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in self.up[a].ones() {
                if b == a {
                    continue;
                }
                let immediate = self.up[a]
                    .ones()
                    .all(|c| c == a || c == b || !self.lt(c, b));
                if immediate {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests;
