use super::*;
use crate::gen;
use crate::modules::ideal_lattice;
use crate::spectrum::Orientation;
use crate::Caps;

fn caps() -> Caps {
    Caps::default()
}

fn z12_ctx() -> SpectrumContext {
    let (l, divs) = ideal_lattice(12, &caps()).unwrap();
    let at = |d: u64| divs.iter().position(|&x| x == d).unwrap();
    SpectrumContext::new(l, vec![at(2), at(3)], Orientation::Primal).unwrap()
}

fn antichain_ctx() -> SpectrumContext {
    let l = gen::antichain_bounded(3, &caps()).unwrap();
    SpectrumContext::new(l, vec![1, 2, 3], Orientation::Primal).unwrap()
}

#[test]
fn registry_has_twenty_two_checks() {
    assert_eq!(registry().len(), 22);
}

#[test]
fn unknown_check_is_an_error() {
    let ctx = z12_ctx();
    let cc = CheckContext::new(&ctx, 0);
    assert!(matches!(
        run_check("lemma_9_99", &cc),
        Err(CheckError::UnknownCheck(_))
    ));
}

#[test]
fn z12_prime_points_pass_everything_applicable() {
    let ctx = z12_ctx();
    let cc = CheckContext::new(&ctx, 0);
    let results = run_all(&cc);
    for r in &results {
        assert_ne!(
            r.status,
            CheckStatus::Fail,
            "{} failed: {:?}",
            r.check_id,
            r.witness
        );
    }
    // counts from the worked example: 4 radical elements, 4 closed sets
    let r = run_check("thm_3_48", &cc).unwrap();
    assert_eq!(r.status, CheckStatus::Pass);
}

#[test]
fn lemma_3_3_is_na_without_x_top_and_names_a_witness() {
    let ctx = antichain_ctx();
    let cc = CheckContext::new(&ctx, 0);
    let r = run_check("lemma_3_3", &cc).unwrap();
    assert_eq!(r.status, CheckStatus::NotApplicable);
    let w = r.witness.unwrap();
    assert!(w.contains("X-top fails"), "witness: {w}");
}

#[test]
fn prop_3_6_passes_on_any_generated_context() {
    for ctx in [z12_ctx(), antichain_ctx()] {
        let cc = CheckContext::new(&ctx, 0);
        let r = run_check("prop_3_6", &cc).unwrap();
        assert_eq!(r.status, CheckStatus::Pass);
    }
}

#[test]
fn prop_4_11_emits_a_verified_decomposition_on_reducible_varieties() {
    // two incomparable points make V(0) reducible
    let l = gen::boolean(2, &caps()).unwrap();
    let ctx = SpectrumContext::new(l, vec![1, 2], Orientation::Primal).unwrap();
    let cc = CheckContext::new(&ctx, 0);
    let r = run_check("prop_4_11", &cc).unwrap();
    assert_eq!(r.status, CheckStatus::Pass);
    assert!(r.detail.is_some());
}

#[test]
fn prop_4_11_is_na_when_every_variety_is_irreducible() {
    let l = gen::chain(4, &caps()).unwrap();
    let ctx = SpectrumContext::new(l, vec![1, 2], Orientation::Primal).unwrap();
    let cc = CheckContext::new(&ctx, 0);
    let r = run_check("prop_4_11", &cc).unwrap();
    assert_eq!(r.status, CheckStatus::NotApplicable);
}

#[test]
fn remark_3_10_needs_bottom_in_x() {
    let ctx = z12_ctx();
    let cc = CheckContext::new(&ctx, 0);
    let r = run_check("remark_3_10", &cc).unwrap();
    assert_eq!(r.status, CheckStatus::NotApplicable);

    // chain with bottom among the points
    let l = gen::chain(3, &caps()).unwrap();
    let ctx = SpectrumContext::new(l, vec![0, 1], Orientation::Primal).unwrap();
    let cc = CheckContext::new(&ctx, 0);
    let r = run_check("remark_3_10", &cc).unwrap();
    assert_eq!(r.status, CheckStatus::Pass);
}

#[test]
fn lemma_3_47_requires_module_provenance() {
    let ctx = z12_ctx();
    let cc = CheckContext::new(&ctx, 0);
    let r = run_check("lemma_3_47", &cc).unwrap();
    assert_eq!(r.status, CheckStatus::NotApplicable);

    let cc = CheckContext::new(&ctx, 0).with_module_prime(true);
    let r = run_check("lemma_3_47", &cc).unwrap();
    assert_eq!(r.status, CheckStatus::Pass);
}

#[test]
fn results_are_deterministic_given_the_seed() {
    let ctx = z12_ctx();
    let a = run_all(&CheckContext::new(&ctx, 42));
    let b = run_all(&CheckContext::new(&ctx, 42));
    let strip = |rs: &[CheckResult]| -> Vec<(String, CheckStatus, Option<String>, Option<String>)> {
        rs.iter()
            .map(|r| {
                (
                    r.check_id.to_string(),
                    r.status,
                    r.witness.clone(),
                    r.detail.clone(),
                )
            })
            .collect()
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn empty_x_runs_the_registry_without_failures() {
    let l = gen::chain(3, &caps()).unwrap();
    let ctx = SpectrumContext::new(l, vec![], Orientation::Primal).unwrap();
    let cc = CheckContext::new(&ctx, 0);
    for r in run_all(&cc) {
        assert_ne!(
            r.status,
            CheckStatus::Fail,
            "{} failed on empty X: {:?}",
            r.check_id,
            r.witness
        );
    }
}

#[test]
fn antichain_context_runs_without_failures() {
    // not X-top; the guarded checks go NA, the unconditional ones pass
    let ctx = antichain_ctx();
    let cc = CheckContext::new(&ctx, 0);
    for r in run_all(&cc) {
        assert_ne!(
            r.status,
            CheckStatus::Fail,
            "{} failed: {:?}",
            r.check_id,
            r.witness
        );
    }
}

#[test]
fn variety_decomposition_roundtrip() {
    let ctx = antichain_ctx();
    let tcl = FiniteTopology::classical_zariski(&ctx);
    let parts = variety_decomposition(&ctx, &tcl, ctx.lattice().bottom()).unwrap();
    assert_eq!(parts, vec![1, 2, 3]);
    assert!(variety_decomposition(&ctx, &tcl, 1).is_none());
}

#[test]
fn dual_orientation_contexts_run_clean() {
    let (l, divs) = ideal_lattice(12, &caps()).unwrap();
    let at = |d: u64| divs.iter().position(|&x| x == d).unwrap();
    // second-spectrum style points: the atoms (4) and (6) of the ideal order
    let ctx = SpectrumContext::new(l, vec![at(4), at(6)], Orientation::Dual).unwrap();
    let cc = CheckContext::new(&ctx, 0);
    for r in run_all(&cc) {
        assert_ne!(
            r.status,
            CheckStatus::Fail,
            "{} failed: {:?}",
            r.check_id,
            r.witness
        );
    }
}
