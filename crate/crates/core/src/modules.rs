//! Finite `Z_n`-modules given by invariant factors, their submodule lattices,
//! and the prime / coprime / second / first spectra, all by exact brute
//! force over the (finitely many) ideals and submodules.

use crate::lattice::{Lattice, LatticeError};
use crate::spectrum::Orientation;
use crate::Caps;
use fixedbitset::FixedBitSet;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("invariant factor {0} invalid: factors must be >= 2, divide the modulus, and divide each other in order")]
    BadInvariantFactor(u64),
    #[error("module has {got} elements, over cap {cap}")]
    CapacityExceeded { got: usize, cap: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Which submodule spectrum to carve out of the submodule lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumKind {
    /// `K != M` and `IN <= K` forces `N <= K` or `IM <= K`.
    Prime,
    /// `K != M` and every ideal has `IM + K = M` or `IM <= K`.
    Coprime,
    /// `K != 0` and every ideal has `IK = K` or `IK = 0`.
    Second,
    /// `K != 0` and `IN = 0` with `N <= K` forces `N = 0` or `IK = 0`.
    First,
}

impl SpectrumKind {
    /// Prime and coprime spectra avoid the top of the submodule lattice;
    /// second and first avoid the bottom and live on the dual side.
    pub fn orientation(self) -> Orientation {
        match self {
            SpectrumKind::Prime | SpectrumKind::Coprime => Orientation::Primal,
            SpectrumKind::Second | SpectrumKind::First => Orientation::Dual,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SpectrumKind::Prime => "spec_p",
            SpectrumKind::Coprime => "spec_c",
            SpectrumKind::Second => "spec_s",
            SpectrumKind::First => "spec_f",
        }
    }
}

/// A finite module over `Z_n`: the direct sum of `Z_{d_i}` for the invariant
/// factors `d_1 | d_2 | ... | d_k`, each dividing `n`. Elements are indexed
/// in mixed radix; addition is a precomputed table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModule {
    modulus: u64,
    factors: Vec<u64>,
    size: usize,
    add: Vec<u16>,
}

impl FiniteModule {
    pub fn new(modulus: u64, factors: Vec<u64>, caps: &Caps) -> Result<Self, ModuleError> {
        if modulus < 2 {
            return Err(ModuleError::BadModulus(modulus));
        }
        let mut size: usize = 1;
        for (i, &d) in factors.iter().enumerate() {
            if d < 2 || modulus % d != 0 || (i > 0 && d % factors[i - 1] != 0) {
                return Err(ModuleError::BadInvariantFactor(d));
            }
            size = size.saturating_mul(d as usize);
        }
        if size > caps.module || size > u16::MAX as usize {
            return Err(ModuleError::CapacityExceeded {
                got: size,
                cap: caps.module.min(u16::MAX as usize),
            });
        }
        let mut module = FiniteModule {
            modulus,
            factors,
            size,
            add: Vec::new(),
        };
        let mut add = vec![0u16; size * size];
        for a in 0..size {
            for b in a..size {
                let s = module.add_slow(a, b) as u16;
                add[a * size + b] = s;
                add[b * size + a] = s;
            }
        }
        module.add = add;
        Ok(module)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    /// Number of elements of the module.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn decode(&self, mut index: usize) -> Vec<u64> {
        self.factors
            .iter()
            .map(|&d| {
                let c = index as u64 % d;
                index /= d as usize;
                c
            })
            .collect()
    }

    fn encode(&self, tuple: &[u64]) -> usize {
        let mut index = 0usize;
        for (i, &d) in self.factors.iter().enumerate().rev() {
            index = index * d as usize + tuple[i] as usize;
        }
        index
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    fn add_slow(&self, a: usize, b: usize) -> usize {
        let (ta, tb) = (self.decode(a), self.decode(b));
        let sum: Vec<u64> = self
            .factors
            .iter()
            .zip(ta.iter().zip(tb.iter()))
            .map(|(&d, (&x, &y))| (x + y) % d)
            .collect();
        self.encode(&sum)
    }

    /// Componentwise action of the scalar `e`.
    pub fn scale(&self, e: u64, x: usize) -> usize {
        let t = self.decode(x);
        let scaled: Vec<u64> = self
            .factors
            .iter()
            .zip(t.iter())
            .map(|(&d, &c)| (e % d) * c % d)
            .collect();
        self.encode(&scaled)
    }

    /// The cyclic submodule generated by one element.
    fn cyclic(&self, x: usize) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.size);
        let mut cur = 0usize;
        loop {
            set.insert(cur);
            cur = self.add(cur, x);
            if cur == 0 {
                break;
            }
        }
        set
    }

    fn sum_sets(&self, a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.size);
        for x in a.ones() {
            for y in b.ones() {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// `(e) * N` as an element set.
    pub fn ideal_times(&self, e: u64, sub: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.size);
        for x in sub.ones() {
            out.insert(self.scale(e, x));
        }
        out
    }

    /// Every submodule, enumerated by closing the cyclic submodules under
    /// sums (for `Z_n`-modules every subgroup is a submodule). Deduplicated
    /// by the canonical bitset of members, sorted for determinism.
    pub fn submodules(&self, caps: &Caps) -> Result<SubmoduleLattice, ModuleError> {
        let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut sets: Vec<FixedBitSet> = Vec::new();
        let mut cyclics: Vec<FixedBitSet> = (0..self.size).map(|x| self.cyclic(x)).collect();
        cyclics.sort();
        cyclics.dedup();
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
                let joined = self.sum_sets(&sets[i], c);
                if !seen.contains_key(&joined) {
                    if sets.len() >= caps.lattice {
                        return Err(ModuleError::CapacityExceeded {
                            got: sets.len() + 1,
                            cap: caps.lattice,
                        });
                    }
                    seen.insert(joined.clone(), sets.len());
                    frontier.push(sets.len());
                    sets.push(joined);
                }
            }
        }

        // Deterministic ordering: by cardinality, then by member list.
        sets.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
        let labels: Vec<String> = sets.iter().map(|s| self.describe(s)).collect();
        let mut pairs = Vec::new();
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                if i != j && a.is_subset(b) {
                    pairs.push((i, j));
                }
            }
        }
        let lattice = Lattice::from_order_pairs(labels, &pairs, caps.lattice)?;
        Ok(SubmoduleLattice {
            module: self.clone(),
            lattice,
            members: sets,
        })
    }

    /// Greedy generator description of a submodule.
    fn describe(&self, sub: &FixedBitSet) -> String {
        if sub.count_ones(..) == 1 {
            return "0".into();
        }
        if sub.count_ones(..) == self.size {
            return "M".into();
        }
        let mut span = FixedBitSet::with_capacity(self.size);
        span.insert(0);
        let mut gens: Vec<usize> = Vec::new();
        // Prefer high-order generators so cyclic submodules get one label.
        let mut candidates: Vec<usize> = sub.ones().collect();
        candidates.sort_by_key(|&x| {
            (
                std::cmp::Reverse(self.cyclic(x).count_ones(..)),
                self.decode(x),
            )
        });
        for x in candidates {
            if !span.contains(x) {
                gens.push(x);
                span = self.sum_sets(&span, &self.cyclic(x));
                if span == *sub {
                    break;
                }
            }
        }
        let parts: Vec<String> = gens.iter().map(|&g| self.describe_elem(g)).collect();
        format!("<{}>", parts.join(","))
    }

    fn describe_elem(&self, x: usize) -> String {
        let t = self.decode(x);
        if t.len() == 1 {
            t[0].to_string()
        } else {
            format!(
                "({})",
                t.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        }
    }

    /// Divisors of the modulus, ascending: one generator per ideal of `Z_n`.
    pub fn ideal_generators(&self) -> Vec<u64> {
        divisors(self.modulus)
    }
}

/// The complete lattice of submodules, ordered by inclusion (meet is
/// intersection, join is the submodule sum), with the member sets retained
/// for the spectra brute force.
#[derive(Debug, Clone)]
pub struct SubmoduleLattice {
    pub module: FiniteModule,
    pub lattice: Lattice,
    /// `members[i]` is the element set of lattice element `i`.
    pub members: Vec<FixedBitSet>,
}

impl SubmoduleLattice {
    fn index_of(&self, set: &FixedBitSet) -> usize {
        self.members
            .iter()
            .position(|m| m == set)
            .expect("closed under the operations that produced it")
    }

    /// Lattice element holding `(e) * (member i)`.
    pub fn ideal_times(&self, e: u64, i: usize) -> usize {
        self.index_of(&self.module.ideal_times(e, &self.members[i]))
    }

    /// The spectrum of the given kind, as sorted lattice element ids.
    pub fn spectrum(&self, kind: SpectrumKind) -> Vec<usize> {
        let bottom = self.lattice.bottom();
        let top = self.lattice.top();
        let ideals = self.module.ideal_generators();
        let n = self.members.len();
        (0..n)
            .filter(|&k| match kind {
                SpectrumKind::Prime => {
                    k != top
                        && ideals.iter().all(|&e| {
                            (0..n).all(|nn| {
                                let i_n = self.ideal_times(e, nn);
                                let i_m = self.ideal_times(e, top);
                                !self.lattice.leq(i_n, k)
                                    || self.lattice.leq(nn, k)
                                    || self.lattice.leq(i_m, k)
                            })
                        })
                }
                SpectrumKind::Coprime => {
                    k != top
                        && ideals.iter().all(|&e| {
                            let i_m = self.ideal_times(e, top);
                            self.lattice.join(i_m, k) == top || self.lattice.leq(i_m, k)
                        })
                }
                SpectrumKind::Second => {
                    k != bottom
                        && ideals.iter().all(|&e| {
                            let i_k = self.ideal_times(e, k);
                            i_k == k || i_k == bottom
                        })
                }
                SpectrumKind::First => {
                    k != bottom
                        && ideals.iter().all(|&e| {
                            let i_k = self.ideal_times(e, k);
                            (0..n)
                                .filter(|&nn| self.lattice.leq(nn, k))
                                .all(|nn| {
                                    self.ideal_times(e, nn) != bottom
                                        || nn == bottom
                                        || i_k == bottom
                                })
                        })
                }
            })
            .collect()
    }
}

/// The lattice of ideals of `Z_n`: one element per divisor `d | n`, ordered
/// by inclusion (`dZ_n <= eZ_n` iff `e | d`); meet is intersection, join is
/// the ideal sum. Returns the lattice together with the divisor of each
/// element.
pub fn ideal_lattice(n: u64, caps: &Caps) -> Result<(Lattice, Vec<u64>), ModuleError> {
    if !(2..=1_000_000).contains(&n) {
        return Err(ModuleError::BadModulus(n));
    }
    let divs = divisors(n);
    if divs.len() > caps.lattice {
        return Err(ModuleError::CapacityExceeded {
            got: divs.len(),
            cap: caps.lattice,
        });
    }
    let labels: Vec<String> = divs.iter().map(|d| format!("({d})")).collect();
    let mut pairs = Vec::new();
    for (i, &d) in divs.iter().enumerate() {
        for (j, &e) in divs.iter().enumerate() {
            if i != j && d % e == 0 {
                // dZ_n is contained in eZ_n
                pairs.push((i, j));
            }
        }
    }
    let lattice = Lattice::from_order_pairs(labels, &pairs, caps.lattice)?;
    Ok((lattice, divs))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn module(n: u64, factors: &[u64]) -> SubmoduleLattice {
        FiniteModule::new(n, factors.to_vec(), &caps())
            .unwrap()
            .submodules(&caps())
            .unwrap()
    }

    #[test]
    fn z12_has_six_submodules_isomorphic_to_divisor_lattice() {
        let subs = module(12, &[12]);
        assert_eq!(subs.members.len(), 6);
        let sizes: Vec<usize> = subs.members.iter().map(|m| m.count_ones(..)).collect();
        assert_eq!(sizes, vec![1, 2, 3, 4, 6, 12]);
        // same shape as the ideal lattice of Z_12
        let (ideals, _) = ideal_lattice(12, &caps()).unwrap();
        assert_eq!(ideals.len(), subs.lattice.len());
        let covers_a = subs.lattice.covers().len();
        let covers_b = ideals.covers().len();
        assert_eq!(covers_a, covers_b);
    }

    #[test]
    fn klein_module_has_five_submodules() {
        let subs = module(2, &[2, 2]);
        assert_eq!(subs.members.len(), 5);
    }

    #[test]
    fn simple_module_is_a_two_chain() {
        let subs = module(5, &[5]);
        assert_eq!(subs.members.len(), 2);
        assert!(subs.lattice.lt(subs.lattice.bottom(), subs.lattice.top()));
    }

    #[test]
    fn ideal_lattice_sizes() {
        assert_eq!(ideal_lattice(12, &caps()).unwrap().0.len(), 6);
        assert_eq!(ideal_lattice(7, &caps()).unwrap().0.len(), 2);
        assert_eq!(ideal_lattice(360, &caps()).unwrap().0.len(), 24);
    }

    #[test]
    fn bad_modulus_and_factors_rejected() {
        assert!(matches!(
            FiniteModule::new(0, vec![], &caps()),
            Err(ModuleError::BadModulus(0))
        ));
        assert!(matches!(
            FiniteModule::new(12, vec![5], &caps()),
            Err(ModuleError::BadInvariantFactor(5))
        ));
        assert!(matches!(
            FiniteModule::new(12, vec![4, 6], &caps()),
            Err(ModuleError::BadInvariantFactor(6))
        ));
        assert!(matches!(
            FiniteModule::new(1024, vec![1024], &caps()),
            Err(ModuleError::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn submodule_tables_agree_with_set_operations() {
        let subs = module(12, &[12]);
        let n = subs.members.len();
        for a in 0..n {
            for b in 0..n {
                let m = subs.lattice.meet(a, b);
                let mut inter = subs.members[a].clone();
                inter.intersect_with(&subs.members[b]);
                assert_eq!(subs.members[m], inter);
                let j = subs.lattice.join(a, b);
                let sum = subs.module.sum_sets(&subs.members[a], &subs.members[b]);
                assert_eq!(subs.members[j], sum);
            }
        }
    }

    #[test]
    fn spectra_of_z12() {
        let subs = module(12, &[12]);
        let by_size = |ids: &[usize]| -> Vec<usize> {
            ids.iter()
                .map(|&i| subs.members[i].count_ones(..))
                .collect()
        };
        // 2M has 6 elements, 3M has 4, 4M has 3, 6M has 2
        assert_eq!(by_size(&subs.spectrum(SpectrumKind::Prime)), vec![4, 6]);
        assert_eq!(by_size(&subs.spectrum(SpectrumKind::Coprime)), vec![4, 6]);
        assert_eq!(by_size(&subs.spectrum(SpectrumKind::Second)), vec![2, 3]);
    }

    #[test]
    fn spectra_of_prime_square_modules() {
        for p in [2u64, 3] {
            let subs = module(p * p, &[p * p]);
            let prime = subs.spectrum(SpectrumKind::Prime);
            assert_eq!(prime.len(), 1);
            assert_eq!(
                subs.members[prime[0]].count_ones(..),
                p as usize,
                "Spec^p(Z_{}) is the maximal submodule",
                p * p
            );
        }
    }

    #[test]
    fn maximal_submodules_are_prime_and_coprime() {
        for subs in [module(12, &[12]), module(2, &[2, 2]), module(9, &[9])] {
            let max = subs.lattice.classify().maximal;
            let prime = subs.spectrum(SpectrumKind::Prime);
            let coprime = subs.spectrum(SpectrumKind::Coprime);
            for m in max {
                assert!(prime.contains(&m));
                assert!(coprime.contains(&m));
            }
        }
    }

    #[test]
    fn simple_submodules_are_second_and_first() {
        for subs in [module(12, &[12]), module(2, &[2, 2]), module(9, &[9])] {
            let atoms = subs.lattice.classify().atoms;
            let second = subs.spectrum(SpectrumKind::Second);
            let first = subs.spectrum(SpectrumKind::First);
            for a in atoms {
                assert!(second.contains(&a));
                assert!(first.contains(&a));
            }
        }
    }

    #[test]
    fn divisor_list() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(7), vec![1, 7]);
    }
}
