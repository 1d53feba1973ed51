use super::*;
use crate::coeff::CoeffRing;
use crate::group::cyclic_group;
use crate::lpa::{lpa_z4, lpa_z8, LeavittPathAlgebra};
use crate::sc::fixtures::{dade6, group_ring_fixture, square_zero_fixture, trivial_fixture};
use crate::sc::ScRingSpec;

fn z2() -> CoeffRing {
    CoeffRing::zn(2).unwrap()
}

fn eps_of<R: GradedRing>(ring: &R) -> EpsilonData<R::Elem> {
    let (v, data) = is_epsilon_strong(ring, &Bounds::default()).unwrap();
    assert!(v.is_yes(), "{v}");
    data.unwrap()
}

fn check_factorizations<R: GradedRing>(ring: &R, eps: &EpsilonData<R::Elem>) {
    let grp = ring.group();
    for e in eps.entries() {
        let sum = e.factorization.iter().fold(ring.zero(), |acc, (u, v)| ring.add(&acc, &ring.mul(u, v)));
        assert_eq!(sum, e.epsilon, "g = {}", e.g);
        for (u, v) in &e.factorization {
            assert!(ring.is_homogeneous_of(u, e.g));
            assert!(ring.is_homogeneous_of(v, grp.inv(e.g)));
        }
        assert_eq!(e.zero, ring.component(e.g, &ring.resolve(&Bounds::default())).generators.is_empty());
    }
}

#[test]
fn dade6_epsilon_and_factorization() {
    let fx = dade6();
    let s = fx.ring();
    let eps = eps_of(s);
    assert_eq!(eps.epsilon(0), &s.one());
    assert_eq!(eps.epsilon(1), &fx.diag([4, 4, 4]));
    check_factorizations(s, &eps);
}

#[test]
fn dade6_report() {
    let fx = dade6();
    let r = analyze(fx.ring(), &Bounds::default()).unwrap();
    assert!(r.graded.is_yes());
    assert!(r.symmetric.is_yes());
    assert!(r.nearly_epsilon_strong.is_yes());
    assert!(r.epsilon_strong.is_yes());
    assert!(r.strongly_graded.is_no());
    assert!(r.epsilon_crossed.is_no(), "{}", r.epsilon_crossed);
    match &r.crossed_witnesses[1] {
        CrossedWitness::Absent(reason) => assert!(reason.contains("81 × 81"), "{reason}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn square_zero_is_not_symmetric() {
    let s = square_zero_fixture();
    let (v, data) = is_epsilon_strong(&s, &Bounds::default()).unwrap();
    assert!(v.is_no());
    assert!(v.reason().starts_with("g = 1"), "{v}");
    assert!(data.is_none());
    let sym = is_symmetrically_graded(&s, None, &Bounds::default()).unwrap();
    assert!(sym.is_no());
    assert!(sym.reason().contains("g = 1"));
    let r = analyze(&s, &Bounds::default()).unwrap();
    assert!(r.strongly_graded.is_no());
    assert!(r.epsilon_crossed.is_no());
}

#[test]
fn group_ring_is_strong_and_crossed() {
    let g3 = cyclic_group(3).unwrap();
    let s = group_ring_fixture(&z2(), &g3).unwrap();
    let r = analyze(&s, &Bounds::default()).unwrap();
    assert!(r.strongly_graded.is_yes());
    assert!(r.epsilon_crossed.is_yes());
    let eps = r.epsilon.unwrap();
    assert!(eps.epsilons().iter().all(|e| *e == s.one()));
}

#[test]
fn trivial_fixture_has_zero_epsilons() {
    let g = cyclic_group(3).unwrap();
    let s = trivial_fixture(&z2(), &g).unwrap();
    let eps = eps_of(&s);
    assert!(eps.get(1).zero && eps.get(2).zero);
    assert!(is_symmetrically_graded(&s, Some(&eps), &Bounds::default()).unwrap().is_yes());
    assert!(is_strongly_graded(&s, &eps, &Bounds::default()).unwrap().is_no());
}

#[test]
fn corrupted_table_is_not_graded() {
    let c = z2();
    let spec = ScRingSpec {
        coeff: c.clone(),
        group: cyclic_group(2).unwrap(),
        names: vec!["1".into(), "x".into()],
        degrees: vec![0, 1],
        orders: None,
        table: vec![
            (0, 0, vec![(0, c.one())]),
            (0, 1, vec![(1, c.one())]),
            (1, 0, vec![(1, c.one())]),
            (1, 1, vec![(1, c.one())]),
        ],
        one: vec![(0, c.one())],
    };
    let v = check_graded_spec(&spec).unwrap();
    assert!(v.is_no());
    assert!(v.reason().contains("x and x"), "{v}");
}

#[test]
fn lpa4_epsilons_and_crossed() {
    let a = lpa_z4(&z2());
    let eps = eps_of(&a);
    assert_eq!(eps.epsilon(0), &a.one());
    assert_eq!(eps.epsilon(2), &a.parse("v1 + v2 + v3").unwrap());
    assert!(eps.get(1).zero && eps.get(3).zero);
    check_factorizations(&a, &eps);
    let r = analyze(&a, &Bounds::default()).unwrap();
    assert!(r.graded.is_yes() && r.symmetric.is_yes());
    assert!(r.strongly_graded.is_no());
    match &r.crossed_witnesses[2] {
        CrossedWitness::Absent(reason) => assert!(reason.contains("16 × 16"), "{reason}"),
        other => panic!("{other:?}"),
    }
    assert!(r.epsilon_crossed.is_no());
    let proof = crossed_obstruction(&a, 2, 2).expect("obstruction");
    assert!(proof.last().unwrap().contains("vanish"), "{proof:?}");
}

fn lpa8() -> LeavittPathAlgebra {
    lpa_z8(&z2())
}

#[test]
fn lpa8_epsilons() {
    let a = lpa8();
    let eps = eps_of(&a);
    let v23 = a.parse("v2 + v3").unwrap();
    assert_eq!(eps.epsilon(2), &v23);
    assert_eq!(eps.epsilon(6), &v23);
    assert_eq!(eps.epsilon(4), &a.parse("v1 + v2 + v3").unwrap());
    for g in [1, 3, 5, 7] {
        assert!(eps.get(g).zero);
    }
    let pairs: Vec<(String, String)> =
        eps.get(2).factorization.iter().map(|(u, v)| (a.render(u), a.render(v))).collect();
    assert_eq!(pairs, vec![("f".to_string(), "f*".to_string()), ("g".to_string(), "g*".to_string())]);
    check_factorizations(&a, &eps);
}

#[test]
fn lpa8_is_crossed() {
    let a = lpa8();
    let eps = eps_of(&a);
    let (v, ws) = is_epsilon_crossed(&a, &eps, &Bounds::default());
    assert!(v.is_yes(), "{v}");
    for (g, w) in ws.iter().enumerate() {
        let CrossedWitness::Found { s, t } = w else { panic!("g = {g}: {w:?}") };
        assert_eq!(&a.mul(s, t), eps.epsilon(g));
        assert_eq!(&a.mul(t, s), eps.epsilon(7 * g % 8));
    }
    assert!(crossed_obstruction(&a, 2, 4).is_none());
}

#[test]
fn lpa8_finite_generation() {
    let a = lpa8();
    let b = Bounds { max_len: Some(9), ..Bounds::default() };
    match component_fg_witness(&a, 2, &b) {
        FgWitness::Generators { generators, status } => {
            let names: Vec<String> = generators.iter().map(|x| a.render(x)).collect();
            assert_eq!(names, vec!["f", "g"]);
            assert_eq!(status, EpsStatus::SampleVerified { max_len: 9 });
        }
        other => panic!("{other:?}"),
    }
    match component_fg_witness(&a, 1, &b) {
        FgWitness::Generators { generators, .. } => assert!(generators.is_empty()),
        other => panic!("{other:?}"),
    }
}

#[test]
fn lpa_vertex_centrality() {
    let a = lpa8();
    let b = Bounds::default();
    let v23 = a.parse("v2 + v3").unwrap();
    assert!(a.central_in_principal(&v23, &b).is_yes());
    assert!(a.central_in_ring(&v23).is_yes());
    // No degree-0 word joins v2 and v3, so v2 is central in S_0 but not in S.
    let v2 = a.parse("v2").unwrap();
    assert!(a.central_in_principal(&v2, &b).is_yes());
    assert!(a.central_in_ring(&v2).is_no());
    assert!(a.principal_central_candidates(&b).contains(&v23));

    let a4 = lpa_z4(&z2());
    let v1 = a4.parse("v1").unwrap();
    assert!(a4.central_in_principal(&v1, &b).is_no());
    assert!(a4.central_in_principal(&a4.parse("v1 + v3").unwrap(), &b).is_yes());
    assert!(a4.central_in_principal(&a4.parse("v1 + v2 + v3").unwrap(), &b).is_yes());
    assert!(!a4.principal_central_candidates(&b).contains(&v1));
}
