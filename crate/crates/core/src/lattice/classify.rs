//! Element classification: irreducibility, hollowness, extremal elements,
//! and the lattice-level flags derived from them.

use super::{ElemId, Lattice};
use fixedbitset::FixedBitSet;

/// Element classes of a finite bounded lattice. All element lists are sorted
/// by id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// `x != 1` with `a /\ b <= x  =>  a <= x or b <= x`.
    pub strongly_irreducible: Vec<ElemId>,
    /// `x != 0` with `x <= a \/ b  =>  x <= a or x <= b`.
    pub strongly_hollow: Vec<ElemId>,
    /// `x != 1` with `a /\ b = x  =>  a = x or b = x`.
    pub irreducible: Vec<ElemId>,
    /// `x != 0` with `a \/ b = x  =>  a = x or b = x`.
    pub hollow: Vec<ElemId>,
    /// Maximal elements of `L \ {1}`.
    pub maximal: Vec<ElemId>,
    /// Minimal elements of `L \ {0}`.
    pub minimal: Vec<ElemId>,
    /// Covers of bottom. Coincides with `minimal` in a finite bounded lattice.
    pub atoms: Vec<ElemId>,
    /// Elements covered by top. Coincides with `maximal`.
    pub coatoms: Vec<ElemId>,
    /// `1` is hollow: no two proper elements join to `1`.
    pub is_hollow_lattice: bool,
    /// `0` is uniform: no two nonzero elements meet to `0`.
    pub is_uniform_lattice: bool,
    /// Every nonzero element sits above an atom.
    pub is_atomic: bool,
    /// Every proper element sits below a coatom.
    pub is_coatomic: bool,
}

impl Lattice {
    pub fn classify(&self) -> Classification {
        let n = self.len();
        let top = self.top();
        let bottom = self.bottom();

        let strongly_irreducible: Vec<ElemId> =
            (0..n).filter(|&x| self.is_si(x)).collect();
        let strongly_hollow: Vec<ElemId> = (0..n).filter(|&x| self.is_sh(x)).collect();
        let irreducible: Vec<ElemId> = (0..n)
            .filter(|&x| x != top && self.is_meet_irreducible(x))
            .collect();
        let hollow: Vec<ElemId> = (0..n)
            .filter(|&x| x != bottom && self.is_join_irreducible(x))
            .collect();

        // Maximal in L\{1} means the upset is exactly {x, 1}; that is the
        // same as being covered by 1, so maximal = coatoms (dually minimal
        // = atoms).
        let maximal: Vec<ElemId> = (0..n)
            .filter(|&x| x != top && self.upset(x).ones().all(|y| y == x || y == top))
            .collect();
        let minimal: Vec<ElemId> = (0..n)
            .filter(|&x| x != bottom && self.downset(x).ones().all(|y| y == x || y == bottom))
            .collect();
        let atoms = minimal.clone();
        let coatoms = maximal.clone();

        let proper: Vec<ElemId> = (0..n).filter(|&x| x != top).collect();
        let nonzero: Vec<ElemId> = (0..n).filter(|&x| x != bottom).collect();
        let is_hollow_lattice = proper
            .iter()
            .all(|&x| proper.iter().all(|&y| self.join(x, y) != top));
        let is_uniform_lattice = nonzero
            .iter()
            .all(|&x| nonzero.iter().all(|&y| self.meet(x, y) != bottom));

        let mut atom_set = FixedBitSet::with_capacity(n);
        for &a in &atoms {
            atom_set.insert(a);
        }
        let mut coatom_set = FixedBitSet::with_capacity(n);
        for &c in &coatoms {
            coatom_set.insert(c);
        }
        let is_atomic = nonzero
            .iter()
            .all(|&x| self.downset(x).ones().any(|a| atom_set.contains(a)));
        let is_coatomic = proper
            .iter()
            .all(|&x| self.upset(x).ones().any(|c| coatom_set.contains(c)));

        Classification {
            strongly_irreducible,
            strongly_hollow,
            irreducible,
            hollow,
            maximal,
            minimal,
            atoms,
            coatoms,
            is_hollow_lattice,
            is_uniform_lattice,
            is_atomic,
            is_coatomic,
        }
    }

    /// Strong irreducibility: `{s : s not<= x}` is closed under pairwise meet.
    pub fn is_si(&self, x: ElemId) -> bool {
        if x == self.top() {
            return false;
        }
        let outside: Vec<ElemId> = (0..self.len()).filter(|&s| !self.leq(s, x)).collect();
        outside
            .iter()
            .all(|&a| outside.iter().all(|&b| !self.leq(self.meet(a, b), x)))
    }

    /// Strong hollowness: `{s : x not<= s}` is closed under pairwise join.
    pub fn is_sh(&self, x: ElemId) -> bool {
        if x == self.bottom() {
            return false;
        }
        let outside: Vec<ElemId> = (0..self.len()).filter(|&s| !self.leq(x, s)).collect();
        outside
            .iter()
            .all(|&a| outside.iter().all(|&b| !self.leq(x, self.join(a, b))))
    }

    fn is_meet_irreducible(&self, x: ElemId) -> bool {
        for a in 0..self.len() {
            for b in 0..self.len() {
                if self.meet(a, b) == x && a != x && b != x {
                    return false;
                }
            }
        }
        true
    }

    fn is_join_irreducible(&self, x: ElemId) -> bool {
        for a in 0..self.len() {
            for b in 0..self.len() {
                if self.join(a, b) == x && a != x && b != x {
                    return false;
                }
            }
        }
        true
    }
}
