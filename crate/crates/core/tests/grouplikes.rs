use ydforge::abelian::GroupElement;
use ydforge::examples::{build_example, ExampleSpec};
use ydforge::grouplike::{enumerate_grouplikes, is_grouplike, GroupLikeContext};

fn ge(e: &[u32]) -> GroupElement {
    GroupElement::new(e.to_vec())
}

#[test]
fn all_instantiations_verify() {
    for spec in ExampleSpec::all() {
        let r = build_example(spec).algebra.verify_axioms();
        assert!(r.all_pass(), "{spec}\n{r}");
    }
}

#[test]
fn enumeration_recovers_the_basis() {
    for spec in ExampleSpec::all() {
        let b = build_example(spec);
        let set = enumerate_grouplikes(&b.algebra).unwrap();
        assert!(set.is_basis, "{spec}");
        let mut found = set.elements.clone();
        let mut expected = b.basis_change.elements();
        for e in &expected {
            assert!(is_grouplike(&b.algebra, e).unwrap(), "{spec}");
        }
        found.sort_by_key(|e| format!("{e:?}"));
        expected.sort_by_key(|e| format!("{e:?}"));
        assert_eq!(found, expected, "{spec}");
    }
}

#[test]
fn worked_cores() {
    for spec in ExampleSpec::all() {
        let b = build_example(spec);
        let ctx = GroupLikeContext::new(&b.algebra, b.basis_change.clone()).unwrap();
        let eta1 = ctx.label_index("eta1").unwrap();
        let r = ctx.compute_core(eta1).unwrap();
        assert!(r.all_checks_pass(), "{spec}: {r:#?}");
        assert_eq!(r.stabilizers.t_eta, vec![ge(&[0, 0])]);
        assert_eq!(r.stabilizers.q_eta.len(), 1);
        assert_eq!(r.stabilizers.index, 4);
        assert_eq!(r.omega_basis, ["omega1", "omega2", "omega3", "omega4"]);
        assert!(r.trivial && !r.completely_trivial, "{spec}");
        assert_eq!(r.action_witness.as_ref().unwrap().rendered, "g2.ω2 = ω3");
        assert_eq!(
            r.coaction_witness.as_ref().unwrap().rendered,
            "δ(ω2) = g1 ⊗ (1/2·ω2 + 1/2·ω3) + g3 ⊗ (1/2·ω2 - 1/2·ω3)"
        );

        let omega2 = ctx.label_index("omega2").unwrap();
        let r = ctx.compute_core(omega2).unwrap();
        assert!(r.all_checks_pass(), "{spec}: {r:#?}");
        assert_eq!(r.stabilizers.t_eta, vec![ge(&[0, 0]), ge(&[0, 1])]);
        assert_eq!(r.stabilizers.q_perp, r.stabilizers.t_eta);
        assert_eq!(r.stabilizers.index, 1);
        assert_eq!(r.omega_basis, ["omega1"]);

        let span = ctx.product_span(omega2, eta1).unwrap();
        assert!(span.consistent(), "{spec}: {span:?}");
        assert_eq!(span.m, 2);
        assert_eq!(span.omegas, ["eta2", "eta4"]);
    }
}

#[test]
fn scan_and_corollary() {
    for spec in ExampleSpec::all() {
        let b = build_example(spec);
        let ctx = GroupLikeContext::new(&b.algebra, b.basis_change.clone()).unwrap();
        let scan = ctx.conjecture_scan().unwrap();
        assert!(scan.all_cores_trivial && scan.all_checks_pass, "{spec}");
        for e in 0..ctx.len() {
            for f in 0..ctx.len() {
                assert!(ctx.product_span(e, f).unwrap().consistent(), "{spec} {e} {f}");
                assert!(ctx.corollary_equivalence(e, f).unwrap().consistent, "{spec} {e} {f}");
            }
        }
    }
}

#[test]
fn core_ignores_coset_representatives() {
    for spec in ExampleSpec::all() {
        let b = build_example(spec);
        let ctx = GroupLikeContext::new(&b.algebra, b.basis_change.clone()).unwrap();
        for e in 0..ctx.len() {
            let variants = ctx.core_algebra_variants(e).unwrap();
            assert!(variants.iter().all(|v| v == &variants[0]), "{spec} {e}");
            assert!(variants[0].verify_axioms().all_pass());
        }
    }
}
