//! Ring axioms and grading invariants of the structure-constant backend on
//! random elements.

use grady_core::group::cyclic_group;
use grady_core::sc::fixtures::{dade6, group_ring_fixture};
use grady_core::sc::{ScElement, StructureConstantRing};
use grady_core::CoeffRing;
use proptest::prelude::*;

fn ring_dade6() -> StructureConstantRing {
    dade6().into_ring()
}

fn ring_group_ring() -> StructureConstantRing {
    group_ring_fixture(&CoeffRing::zn(4).unwrap(), &cyclic_group(3).unwrap()).unwrap()
}

/// Raw coordinates reduced into the ring's coordinate space.
fn elem(ring: &StructureConstantRing, raw: &[u32]) -> ScElement {
    let mut v: Vec<u32> = raw.iter().take(ring.space().len()).copied().collect();
    ring.space().reduce(&mut v);
    ScElement(v)
}

fn coords() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..12, 9)
}

macro_rules! ring_laws {
    ($name:ident, $ring:expr) => {
        mod $name {
            use super::*;

            proptest! {
                #[test]
                fn associativity(a in coords(), b in coords(), c in coords()) {
                    let s = $ring;
                    let (a, b, c) = (elem(&s, &a), elem(&s, &b), elem(&s, &c));
                    prop_assert_eq!(s.mul(&s.mul(&a, &b), &c), s.mul(&a, &s.mul(&b, &c)));
                }

                #[test]
                fn distributivity(a in coords(), b in coords(), c in coords()) {
                    let s = $ring;
                    let (a, b, c) = (elem(&s, &a), elem(&s, &b), elem(&s, &c));
                    prop_assert_eq!(s.mul(&a, &s.add(&b, &c)), s.add(&s.mul(&a, &b), &s.mul(&a, &c)));
                    prop_assert_eq!(s.mul(&s.add(&a, &b), &c), s.add(&s.mul(&a, &c), &s.mul(&b, &c)));
                }

                #[test]
                fn unit_laws(a in coords()) {
                    let s = $ring;
                    let a = elem(&s, &a);
                    prop_assert_eq!(s.mul(&s.one(), &a), a.clone());
                    prop_assert_eq!(s.mul(&a, &s.one()), a);
                }

                #[test]
                fn degree_additivity(a in coords(), b in coords(), g in 0usize..3, h in 0usize..3) {
                    let s = $ring;
                    let grp = s.group();
                    let (g, h) = (g % grp.order(), h % grp.order());
                    let x = s.homogeneous_part(&elem(&s, &a), g);
                    let y = s.homogeneous_part(&elem(&s, &b), h);
                    prop_assert!(s.is_homogeneous_of(&s.mul(&x, &y), grp.op(g, h)));
                }

                #[test]
                fn homogeneous_parts_sum_back(a in coords()) {
                    let s = $ring;
                    let a = elem(&s, &a);
                    let sum = s.group().elements().fold(s.zero(), |acc, g| s.add(&acc, &s.homogeneous_part(&a, g)));
                    prop_assert_eq!(sum, a);
                }

                #[test]
                fn additive_inverse(a in coords()) {
                    let s = $ring;
                    let a = elem(&s, &a);
                    prop_assert!(s.is_zero(&s.add(&a, &s.neg(&a))));
                }
            }
        }
    };
}

ring_laws!(dade6_laws, ring_dade6());
ring_laws!(group_ring_laws, ring_group_ring());

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Closing a closure again adds nothing, and every witness replays.
    #[test]
    fn closure_is_idempotent_and_replays(picks in prop::collection::vec((0usize..9, 1u32..6), 1..4)) {
        let s = ring_dade6();
        let gens: Vec<ScElement> = picks
            .iter()
            .map(|&(i, c)| s.scale(&s.coeff().from_int(c as i64), &s.basis(i)))
            .collect();
        let m = s.module_closure(&gens, true, true, 1 << 20).unwrap();
        prop_assert_eq!(s.replay(&m), Ok(()));
        let members: Vec<ScElement> = m.members().iter().cloned().map(ScElement).collect();
        let again = s.module_closure(&members, true, true, 1 << 20).unwrap();
        prop_assert!(again.same_members(&m));
        for x in &gens {
            prop_assert!(m.contains(x.coords()));
        }
    }

    /// Spans are closed under addition.
    #[test]
    fn span_is_additively_closed(picks in prop::collection::vec(0usize..9, 1..4), a in 0usize..64, b in 0usize..64) {
        let s = ring_dade6();
        let gens: Vec<ScElement> = picks.iter().map(|&i| s.basis(i)).collect();
        let m = s.span(&gens, 1 << 20).unwrap();
        let xs = m.members();
        let (x, y) = (&xs[a % xs.len()], &xs[b % xs.len()]);
        prop_assert!(m.contains(&s.space().add(x, y)));
    }
}
