//! Normal forms of Leavitt path algebras: defining relations, associativity
//! and degree additivity on seeded random inputs.

use grady_core::lpa::{lpa_z4, lpa_z8, LeavittPathAlgebra, Letter, LpaElement, Monomial};
use grady_core::CoeffRing;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fixtures() -> Vec<(&'static str, LeavittPathAlgebra)> {
    let z2 = CoeffRing::zn(2).unwrap();
    let z6 = CoeffRing::zn(6).unwrap();
    vec![("z4", lpa_z4(&z2)), ("z8", lpa_z8(&z2)), ("z4/6", lpa_z4(&z6)), ("z8/6", lpa_z8(&z6))]
}

fn monomials(alg: &LeavittPathAlgebra, len: usize) -> Vec<Monomial> {
    alg.group().elements().flat_map(|g| alg.monomials_of_degree(g, len).0).collect()
}

fn random_element(alg: &LeavittPathAlgebra, pool: &[Monomial], rng: &mut ChaCha8Rng) -> LpaElement {
    let scalars = alg.coeff().elements();
    (0..rng.gen_range(1..=3)).fold(alg.zero(), |acc, _| {
        let m = alg.monomial(pool[rng.gen_range(0..pool.len())].clone());
        let c = &scalars[rng.gen_range(0..scalars.len())];
        alg.add(&acc, &alg.scale(c, &m))
    })
}

#[test]
fn defining_relations_normalize_to_zero() {
    for (name, alg) in fixtures() {
        let n = alg.vertex_count();
        for v in 0..n {
            for w in 0..n {
                let vw = alg.word(&[Letter::Vertex(v), Letter::Vertex(w)]);
                let expect = if v == w { alg.generator(Letter::Vertex(v)) } else { alg.zero() };
                assert!(alg.sub(&vw, &expect).is_zero(), "{name}: vertex relation at {v},{w}");
            }
        }
        for (e, edge) in alg.edges().iter().enumerate() {
            let f = alg.generator(Letter::Edge(e));
            let fs = alg.generator(Letter::Ghost(e));
            let s = Letter::Vertex(edge.src);
            let r = Letter::Vertex(edge.dst);
            assert!(alg.sub(&alg.word(&[s, Letter::Edge(e)]), &f).is_zero(), "{name}: s(f)f");
            assert!(alg.sub(&alg.word(&[Letter::Edge(e), r]), &f).is_zero(), "{name}: f r(f)");
            assert!(alg.sub(&alg.word(&[r, Letter::Ghost(e)]), &fs).is_zero(), "{name}: r(f)f*");
            assert!(alg.sub(&alg.word(&[Letter::Ghost(e), s]), &fs).is_zero(), "{name}: f*s(f)");
            for e2 in 0..alg.edges().len() {
                let prod = alg.word(&[Letter::Ghost(e), Letter::Edge(e2)]);
                let expect = if e == e2 { alg.generator(r) } else { alg.zero() };
                assert!(alg.sub(&prod, &expect).is_zero(), "{name}: f*f' at {e},{e2}");
            }
        }
        for v in (0..n).filter(|&v| alg.is_regular(v)) {
            let ck = alg
                .out_edges(v)
                .iter()
                .fold(alg.zero(), |acc, &f| alg.add(&acc, &alg.word(&[Letter::Edge(f), Letter::Ghost(f)])));
            assert!(alg.sub(&alg.generator(Letter::Vertex(v)), &ck).is_zero(), "{name}: CK2 at {v}");
        }
    }
}

#[test]
fn associativity_on_seeded_triples() {
    for (i, (name, alg)) in fixtures().into_iter().enumerate() {
        let pool = monomials(&alg, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + i as u64);
        for k in 0..1000 {
            let a = random_element(&alg, &pool, &mut rng);
            let b = random_element(&alg, &pool, &mut rng);
            let c = random_element(&alg, &pool, &mut rng);
            assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)), "{name}: triple {k}");
        }
    }
}

#[test]
fn degree_additivity_on_seeded_pairs() {
    for (i, (name, alg)) in fixtures().into_iter().enumerate() {
        let pool = monomials(&alg, 4);
        let grp = alg.group().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(0xdec0 + i as u64);
        for _ in 0..1000 {
            let m1 = &pool[rng.gen_range(0..pool.len())];
            let m2 = &pool[rng.gen_range(0..pool.len())];
            let d = grp.op(alg.degree_of(m1), alg.degree_of(m2));
            let p = alg.monomial_multiply(m1, m2);
            assert!(alg.is_homogeneous_of(&p, d), "{name}: {} · {}", alg.render_monomial(m1), alg.render_monomial(m2));
        }
    }
}

#[test]
fn normal_forms_are_canonical() {
    for (name, alg) in fixtures() {
        let pool = monomials(&alg, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let a = random_element(&alg, &pool, &mut rng);
            let b = random_element(&alg, &pool, &mut rng);
            let p = alg.mul(&a, &b);
            assert!(p.monomials().all(|m| alg.is_canonical(m)), "{name}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn star_is_an_anti_involution(seed in any::<u64>()) {
        let alg = lpa_z8(&CoeffRing::zn(2).unwrap());
        let pool = monomials(&alg, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&alg, &pool, &mut rng);
        let b = random_element(&alg, &pool, &mut rng);
        prop_assert_eq!(alg.star(&alg.star(&a)), a.clone());
        prop_assert_eq!(alg.star(&alg.mul(&a, &b)), alg.mul(&alg.star(&b), &alg.star(&a)));
    }

    #[test]
    fn words_parse_to_their_products(idx in prop::collection::vec(0usize..11, 0..5)) {
        let alg = lpa_z4(&CoeffRing::zn(2).unwrap());
        let letters: Vec<Letter> = idx
            .iter()
            .map(|&i| match i {
                0..=3 => Letter::Vertex(i),
                4 | 5 => Letter::Edge(i - 4),
                _ => Letter::Ghost(i % 2),
            })
            .collect();
        let w = alg.word(&letters);
        let folded = letters.iter().fold(alg.one(), |acc, &l| alg.mul(&acc, &alg.generator(l)));
        prop_assert_eq!(w, folded);
    }

    #[test]
    fn unit_laws(seed in any::<u64>()) {
        let alg = lpa_z4(&CoeffRing::zn(6).unwrap());
        let pool = monomials(&alg, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&alg, &pool, &mut rng);
        prop_assert_eq!(alg.mul(&alg.one(), &a), a.clone());
        prop_assert_eq!(alg.mul(&a, &alg.one()), a);
    }
}
