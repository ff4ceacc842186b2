use super::*;
use crate::gen;
use crate::modules::ideal_lattice;
use crate::Caps;
use proptest::prelude::*;

fn caps() -> Caps {
    Caps::default()
}

fn chain3() -> Lattice {
    gen::chain(3, &caps()).unwrap()
}

/// Brute-force greatest lower bound straight from the order relation; the
/// oracle the meet table is checked against.
fn glb_oracle(l: &Lattice, a: ElemId, b: ElemId) -> Option<ElemId> {
    let lower: Vec<ElemId> = (0..l.len())
        .filter(|&c| l.leq(c, a) && l.leq(c, b))
        .collect();
    lower
        .iter()
        .copied()
        .find(|&g| lower.iter().all(|&c| l.leq(c, g)))
}

fn lub_oracle(l: &Lattice, a: ElemId, b: ElemId) -> Option<ElemId> {
    let upper: Vec<ElemId> = (0..l.len())
        .filter(|&c| l.leq(a, c) && l.leq(b, c))
        .collect();
    upper
        .iter()
        .copied()
        .find(|&g| upper.iter().all(|&c| l.leq(g, c)))
}

fn assert_tables_match_oracle(l: &Lattice) {
    for a in 0..l.len() {
        for b in 0..l.len() {
            assert_eq!(Some(l.meet(a, b)), glb_oracle(l, a, b));
            assert_eq!(Some(l.join(a, b)), lub_oracle(l, a, b));
        }
    }
}

#[test]
fn chain_is_a_lattice() {
    let l = chain3();
    assert_eq!(l.len(), 3);
    assert_eq!(l.bottom(), 0);
    assert_eq!(l.top(), 2);
    assert_tables_match_oracle(&l);
}

#[test]
fn pentagon_validates_with_correct_tables() {
    let l = gen::n5(&caps()).unwrap();
    assert_eq!(l.len(), 5);
    assert_tables_match_oracle(&l);
    // a,b and b,c incomparable
    let (a, b, c) = (1, 2, 3);
    assert!(!l.leq(a, b) && !l.leq(b, a));
    assert!(!l.leq(b, c) && !l.leq(c, b));
    assert_eq!(l.meet(a, b), 0);
    assert_eq!(l.join(b, c), 4);
}

#[test]
fn two_maximal_elements_without_join_is_missing_bounds() {
    let labels = vec!["0".into(), "a".into(), "b".into()];
    let err = Lattice::from_order_pairs(labels, &[(0, 1), (0, 2)], 4096).unwrap_err();
    assert!(matches!(err, LatticeError::MissingBounds(_)));
}

#[test]
fn cycle_is_rejected() {
    let labels = vec!["a".into(), "b".into(), "c".into()];
    let err = Lattice::from_order_pairs(labels, &[(0, 1), (1, 2), (2, 0)], 4096).unwrap_err();
    assert!(matches!(err, LatticeError::NotAPoset(_, _)));
}

#[test]
fn glb_failure_is_reported_with_the_offending_pair() {
    // 0 < a,b < c,d < 1: a and b have two minimal upper bounds.
    let labels: Vec<String> = ["0", "a", "b", "c", "d", "1"].map(String::from).to_vec();
    let pairs = [
        (0, 1),
        (0, 2),
        (1, 3),
        (1, 4),
        (2, 3),
        (2, 4),
        (3, 5),
        (4, 5),
    ];
    let err = Lattice::from_order_pairs(labels, &pairs, 4096).unwrap_err();
    match err {
        LatticeError::NotALattice { a, b, .. } => {
            assert_eq!((a.as_str(), b.as_str()), ("a", "b"));
        }
        other => panic!("expected NotALattice, got {other:?}"),
    }
}

#[test]
fn duplicate_labels_rejected() {
    let labels = vec!["x".into(), "x".into()];
    let err = Lattice::from_order_pairs(labels, &[(0, 1)], 4096).unwrap_err();
    assert!(matches!(err, LatticeError::DuplicateElement(_)));
}

#[test]
fn cap_is_enforced() {
    let labels = (0..5).map(|i| format!("e{i}")).collect();
    let err = Lattice::from_order_pairs(labels, &[], 4).unwrap_err();
    assert!(matches!(err, LatticeError::CapacityExceeded { got: 5, cap: 4 }));
}

#[test]
fn empty_meet_is_top_and_empty_join_is_bottom() {
    let l = chain3();
    assert_eq!(l.meet_all([]).unwrap(), l.top());
    assert_eq!(l.join_all([]).unwrap(), l.bottom());
}

#[test]
fn ideal_z12_meet_is_lcm_of_indices() {
    let (l, divisors) = ideal_lattice(12, &caps()).unwrap();
    let at = |d: u64| divisors.iter().position(|&x| x == d).unwrap();
    // intersection of (2) and (3) is (6)
    assert_eq!(l.meet(at(2), at(3)), at(6));
    assert_eq!(l.meet_all([at(2), at(3)]).unwrap(), at(6));
    assert_tables_match_oracle(&l);
}

#[test]
fn dualize_is_an_involution() {
    for l in [chain3(), gen::n5(&caps()).unwrap(), gen::boolean(3, &caps()).unwrap()] {
        let dd = l.dualize().dualize();
        assert_eq!(l.len(), dd.len());
        for a in 0..l.len() {
            for b in 0..l.len() {
                assert_eq!(l.leq(a, b), dd.leq(a, b));
                assert_eq!(l.meet(a, b), dd.meet(a, b));
                assert_eq!(l.join(a, b), dd.join(a, b));
            }
        }
        assert_eq!(l.bottom(), dd.bottom());
        assert_eq!(l.top(), dd.top());
    }
}

#[test]
fn dual_of_ideal_lattice_reverses_divisibility() {
    let (l, divisors) = ideal_lattice(12, &caps()).unwrap();
    let d = l.dualize();
    let at = |x: u64| divisors.iter().position(|&v| v == x).unwrap();
    // (2) <= (1)=R in the ideal order, so the dual order reverses it.
    assert!(l.leq(at(2), at(1)));
    assert!(d.leq(at(1), at(2)));
    assert_eq!(d.bottom(), l.top());
}

#[test]
fn classify_chain() {
    let l = chain3();
    let c = l.classify();
    assert_eq!(c.strongly_irreducible, vec![0, 1]);
    assert_eq!(c.strongly_hollow, vec![1, 2]);
    assert_eq!(c.maximal, vec![1]);
    assert_eq!(c.minimal, vec![1]);
    assert!(c.is_hollow_lattice);
    assert!(c.is_uniform_lattice);
    assert!(c.is_atomic && c.is_coatomic);
}

#[test]
fn classify_ideal_z12_si() {
    let (l, divisors) = ideal_lattice(12, &caps()).unwrap();
    let c = l.classify();
    let si: Vec<u64> = c.strongly_irreducible.iter().map(|&i| divisors[i]).collect();
    // brute force over all pairs a /\ b <= x gives (2), (3), (4)
    assert_eq!(si, vec![2, 3, 4]);
}

#[test]
fn boolean_b2_is_not_hollow() {
    let l = gen::boolean(2, &caps()).unwrap();
    let c = l.classify();
    assert!(!c.is_hollow_lattice);
    assert!(!c.is_uniform_lattice);
}

/// Exhaustive subset quantifier for the completely-strongly-irreducible
/// oracle; feasible only on tiny lattices.
fn csi_oracle(l: &Lattice, p: ElemId) -> bool {
    let n = l.len();
    for mask in 0u32..(1 << n) {
        let subset: Vec<ElemId> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let m = l.meet_all(subset.iter().copied()).unwrap();
        if l.leq(m, p) && !subset.iter().any(|&s| l.leq(s, p)) {
            return false;
        }
    }
    true
}

#[test]
fn completely_strongly_irreducible_matches_exhaustive_oracle() {
    for l in [
        chain3(),
        gen::boolean(2, &caps()).unwrap(),
        gen::n5(&caps()).unwrap(),
        gen::m3(&caps()).unwrap(),
        ideal_lattice(12, &caps()).unwrap().0,
    ] {
        for p in 0..l.len() {
            assert_eq!(
                l.completely_strongly_irreducible(p).unwrap(),
                csi_oracle(&l, p),
                "element {} of {:?}",
                l.label(p),
                l.labels()
            );
        }
    }
}

#[test]
fn csi_on_b2() {
    let l = gen::boolean(2, &caps()).unwrap();
    // elements: s00=0, s01, s10, s11=1
    assert!(l.completely_strongly_irreducible(1).unwrap());
    assert!(l.completely_strongly_irreducible(2).unwrap());
    assert!(!l.completely_strongly_irreducible(0).unwrap());
}

#[test]
fn csi_on_ideal_z12_at_6_fails() {
    let (l, divisors) = ideal_lattice(12, &caps()).unwrap();
    let at = |d: u64| divisors.iter().position(|&x| x == d).unwrap();
    assert!(!l.completely_strongly_irreducible(at(6)).unwrap());
    // witness: (2) /\ (3) = (6) <= (6) with neither below
    assert_eq!(l.meet(at(2), at(3)), at(6));
    assert!(!l.leq(at(2), at(6)) && !l.leq(at(3), at(6)));
}

#[test]
fn complete_a_property_examples() {
    let (l, divisors) = ideal_lattice(12, &caps()).unwrap();
    let at = |d: u64| divisors.iter().position(|&x| x == d).unwrap();
    assert!(l.complete_a_property([at(2), at(3)]).unwrap());
    assert!(l.complete_a_property([at(2)]).unwrap());
    // q = (2): meet of {(4)} is (4) <= (2), so the property fails
    assert!(!l.complete_a_property([at(2), at(4)]).unwrap());
    assert!(l.complete_a_property([]).unwrap());
}

#[test]
fn unknown_element_errors() {
    let l = chain3();
    assert!(matches!(
        l.meet_all([0, 7]),
        Err(LatticeError::UnknownElement { index: 7, size: 3 })
    ));
    assert!(l.completely_strongly_irreducible(9).is_err());
}

#[test]
fn covers_of_boolean_3() {
    let l = gen::boolean(3, &caps()).unwrap();
    let covers = l.covers();
    assert_eq!(covers.len(), 12); // 3 * 2^2 cover edges in B_3
    for (a, b) in covers {
        assert!(l.lt(a, b));
    }
}

proptest! {
    #[test]
    fn meet_is_the_greatest_lower_bound(seed in 0u64..200) {
        let l = pick_lattice(seed);
        let n = l.len();
        let a = (seed as usize * 7) % n;
        let b = (seed as usize * 13) % n;
        let m = l.meet(a, b);
        prop_assert!(l.leq(m, a) && l.leq(m, b));
        for c in 0..n {
            if l.leq(c, a) && l.leq(c, b) {
                prop_assert!(l.leq(c, m));
            }
        }
        let j = l.join(a, b);
        prop_assert!(l.leq(a, j) && l.leq(b, j));
        for c in 0..n {
            if l.leq(a, c) && l.leq(b, c) {
                prop_assert!(l.leq(j, c));
            }
        }
    }

    #[test]
    fn fold_order_does_not_matter(seed in 0u64..100, subset in proptest::collection::vec(0usize..16, 0..6)) {
        let l = pick_lattice(seed);
        let subset: Vec<usize> = subset.into_iter().map(|x| x % l.len()).collect();
        let forward = l.meet_all(subset.iter().copied()).unwrap();
        let mut rev = subset.clone();
        rev.reverse();
        prop_assert_eq!(forward, l.meet_all(rev.iter().copied()).unwrap());
        let fj = l.join_all(subset.iter().copied()).unwrap();
        prop_assert_eq!(fj, l.join_all(rev.into_iter()).unwrap());
    }

    #[test]
    fn duality_swaps_classifications(seed in 0u64..200) {
        let l = pick_lattice(seed);
        let c = l.classify();
        let cd = l.dualize().classify();
        prop_assert_eq!(&c.strongly_irreducible, &cd.strongly_hollow);
        prop_assert_eq!(&c.strongly_hollow, &cd.strongly_irreducible);
        prop_assert_eq!(&c.maximal, &cd.minimal);
        prop_assert_eq!(&c.minimal, &cd.maximal);
        prop_assert_eq!(c.is_hollow_lattice, cd.is_uniform_lattice);
    }

    #[test]
    fn csi_implies_si(seed in 0u64..200) {
        let l = pick_lattice(seed);
        let c = l.classify();
        for p in 0..l.len() {
            if l.completely_strongly_irreducible(p).unwrap() {
                prop_assert!(c.strongly_irreducible.contains(&p));
            }
        }
    }
}

fn pick_lattice(seed: u64) -> Lattice {
    let caps = Caps::default();
    match seed % 7 {
        0 => gen::chain(2 + (seed / 7) as usize % 6, &caps).unwrap(),
        1 => gen::boolean(1 + (seed / 7) as u32 % 4, &caps).unwrap(),
        2 => gen::antichain_bounded(2 + (seed / 7) as usize % 5, &caps).unwrap(),
        3 => gen::n5(&caps).unwrap(),
        4 => gen::m3(&caps).unwrap(),
        5 => ideal_lattice(12, &caps).unwrap().0,
        _ => ideal_lattice(30, &caps).unwrap().0,
    }
}
