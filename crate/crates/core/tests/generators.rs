use albert::generators::{
    check_f4_membership, check_f4_membership_in, g2_map_to_e1, DeltaA, Generator, RotO3, SpThree,
};
use albert::jordan::{inner_product, Invariants, JordanElement};
use albert::octonion::{Algebra, Octonion};
use albert::random::Sampler;

const C: Algebra = Algebra::Compact;
const S: Algebra = Algebra::Split;

fn sample_generators(rng: &mut Sampler) -> Vec<Generator> {
    vec![
        DeltaA::new(rng.unit_octonion(C)).unwrap().into(),
        RotO3::new(rng.orthogonal3()).unwrap().into(),
        SpThree::new(rng.symplectic3()).unwrap().into(),
        g2_map_to_e1(&rng.imaginary_unit()).unwrap().into(),
    ]
}

#[test]
fn every_family_preserves_all_invariants() {
    let mut rng = Sampler::new(100);
    for _ in 0..10 {
        for g in sample_generators(&mut rng) {
            for _ in 0..10 {
                let x = rng.jordan(C);
                let before = Invariants::of(&x).as_array();
                let after = Invariants::of(&g.apply(&x).unwrap()).as_array();
                for (b, a) in before.iter().zip(after.iter()) {
                    assert!((a - b).abs() < 1e-9, "{} drift {}", g.kind(), (a - b).abs());
                }
            }
        }
    }
}

#[test]
fn every_family_fixes_unit() {
    let mut rng = Sampler::new(101);
    for g in sample_generators(&mut rng) {
        let e = JordanElement::unit(C);
        assert!(g.apply(&e).unwrap().max_abs_diff(&e) <= 1e-12, "{}", g.kind());
    }
}

#[test]
fn membership_reports_within_tolerance() {
    let mut rng = Sampler::new(102);
    for (i, g) in sample_generators(&mut rng).iter().enumerate() {
        let r = check_f4_membership(g, 100, i as u64).unwrap();
        assert_eq!(r.trials, 100);
        assert!(r.jordan_deviation < 1e-9, "{} {r:?}", g.kind());
        assert!(r.cross_deviation < 1e-9, "{} {r:?}", g.kind());
    }
}

#[test]
fn split_families_preserve_inner_product() {
    let mut rng = Sampler::new(104);
    for _ in 0..50 {
        let d: Generator = DeltaA::new(rng.unit_octonion(S)).unwrap().into();
        let r: Generator = RotO3::new(rng.orthogonal3()).unwrap().into();
        for g in [d, r] {
            let report = check_f4_membership_in(&g, S, 5, rng.next_u64()).unwrap();
            assert!(report.inner_deviation < 1e-10, "{} {report:?}", g.kind());
            assert!(report.jordan_deviation < 1e-9, "{} {report:?}", g.kind());
        }
    }
}

#[test]
fn compact_only_families_reject_split_input() {
    let x = JordanElement::unit(S);
    assert!(SpThree::identity().apply(&x).is_err());
    assert!(g2_map_to_e1(&Octonion::basis(2, C)).unwrap().apply(&x).is_err());
    assert!(DeltaA::identity(C).apply(&x).is_err());
}

#[test]
fn delta_a_sandwich_is_unambiguous() {
    let mut rng = Sampler::new(105);
    for _ in 0..1000 {
        let a = rng.unit_octonion(C);
        let x = rng.octonion(C);
        assert!(((a * x) * a).max_abs_diff(&(a * (x * a))) <= 1e-12);
    }
}

#[test]
fn g2_construction_over_many_directions() {
    let mut rng = Sampler::new(106);
    let e1 = Octonion::basis(1, C);
    for _ in 0..200 {
        let u = rng.imaginary_unit();
        let g = g2_map_to_e1(&u).unwrap();
        assert!(g.map(&u).max_abs_diff(&e1) <= 1e-9);
        assert!(g.automorphism_deviation() <= 1e-10);
    }
    for k in 1..8 {
        let u = Octonion::basis(k, C);
        let g = g2_map_to_e1(&u).unwrap();
        assert!(g.map(&u).max_abs_diff(&e1) <= 1e-12, "e{k}");
    }
}

#[test]
fn split_inner_product_of_mixed_element() {
    let null = Octonion::one(S) + Octonion::basis(4, S);
    let x = JordanElement::diagonal([1.0, 0.0, 0.0], S).with_off(2, null);
    assert_eq!(inner_product(&x, &x).unwrap(), 1.0);
}
