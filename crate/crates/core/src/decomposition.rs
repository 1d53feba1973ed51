//! Peeling: split off the strongly graded corners eS for the minimal,
//! epsilon-central e, then repeat inside the remainder until it is zero or
//! trivially graded.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::grading::{corner_crossed_witness, Bounds, CrossedWitness, EpsilonData, GradedRing, Verdict};
use crate::group::GroupElem;
use crate::lattice::{epsilon_central_status, BooleanSemigroup, CentralStatus};
use crate::par;
use crate::sc::{ScElement, StructureConstantRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemainderClass {
    Zero,
    /// Every ε'_g with g ≠ e vanishes.
    TrivialGradation,
    /// Still has a nonzero ε'_g with g ≠ e; another round is needed.
    EpsilonStrong,
}

impl RemainderClass {
    pub fn label(self) -> &'static str {
        match self {
            RemainderClass::Zero => "zero",
            RemainderClass::TrivialGradation => "trivial gradation",
            RemainderClass::EpsilonStrong => "epsilon-strong",
        }
    }
}

/// A peeled corner eS, strongly graded by N(e).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand<E> {
    pub idempotent: E,
    pub subgroup: BTreeSet<GroupElem>,
    pub verified: Verdict,
}

/// One round of peeling inside the corner with unit `unit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelStep<E> {
    pub unit: E,
    /// The boolean semigroup of the corner epsilons.
    pub semigroup: Vec<E>,
    pub minimal: Vec<E>,
    pub central: Vec<CentralStatus>,
    pub peeled: Vec<Summand<E>>,
    pub remainder: E,
    pub remainder_class: RemainderClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Once<E> {
    Split(PeelStep<E>),
    /// Some minimal element is not epsilon-central.
    NotAllCentral {
        unit: E,
        semigroup: Vec<E>,
        failing: Vec<(E, CentralStatus)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<E> {
    Success,
    Halted { reason: String, element: Option<E> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport<E> {
    pub steps: Vec<PeelStep<E>>,
    /// Final remainder; meaningful when the outcome is Success.
    pub remainder: E,
    pub remainder_class: Option<RemainderClass>,
    pub outcome: Outcome<E>,
}

impl<E: Clone> DecompositionReport<E> {
    pub fn summands(&self) -> Vec<&Summand<E>> {
        self.steps.iter().flat_map(|s| s.peeled.iter()).collect()
    }

    pub fn is_success(&self) -> bool {
        matches!(self.outcome, Outcome::Success)
    }
}

/// (eS_g)(eS_h) = eS_gh for g, h ∈ N and eS_g = 0 outside N.
pub fn verify_strong_summand<R: GradedRing>(
    ring: &R,
    eps: &EpsilonData<R::Elem>,
    e: &R::Elem,
    n: &BTreeSet<GroupElem>,
    bounds: &Bounds,
) -> Result<Verdict> {
    if ring.mul(e, e) != *e {
        return Err(Error::Precondition(format!("{} is not idempotent", ring.render(e))));
    }
    if !ring.group().is_subgroup(n) {
        return Err(Error::Precondition(format!("{n:?} is not a subgroup")));
    }
    ring.strong_corner(e, n, eps, &ring.resolve(bounds))
}

fn classify_remainder<R: GradedRing>(ring: &R, eps: &EpsilonData<R::Elem>, e: &R::Elem) -> RemainderClass {
    if ring.is_zero(e) {
        return RemainderClass::Zero;
    }
    let id = ring.group().identity();
    let corner = eps.corner(ring, e);
    if ring.group().elements().filter(|&g| g != id).all(|g| corner.get(g).zero) {
        RemainderClass::TrivialGradation
    } else {
        RemainderClass::EpsilonStrong
    }
}

fn check_orthogonal<R: GradedRing>(ring: &R, unit: &R::Elem, parts: &[&R::Elem]) -> Result<()> {
    for (i, a) in parts.iter().enumerate() {
        if ring.mul(a, a) != **a {
            return Err(Error::TheoremViolation(format!("{} is not idempotent", ring.render(a))));
        }
        for b in &parts[i + 1..] {
            if !ring.is_zero(&ring.mul(a, b)) {
                return Err(Error::TheoremViolation(format!(
                    "{} and {} are not orthogonal",
                    ring.render(a),
                    ring.render(b)
                )));
            }
        }
    }
    let total = ring.sum(parts.iter().copied());
    if total != *unit {
        return Err(Error::TheoremViolation(format!(
            "the parts sum to {} instead of {}",
            ring.render(&total),
            ring.render(unit)
        )));
    }
    Ok(())
}

/// One split S = ⊕ eᵢS ⊕ e'S of the corner `unit`·S, where `eps` are the
/// corner epsilons (ε_e = unit).
pub fn decompose_once<R: GradedRing>(ring: &R, eps: &EpsilonData<R::Elem>, bounds: &Bounds) -> Result<Once<R::Elem>> {
    let unit = eps.epsilon(ring.group().identity()).clone();
    let b = BooleanSemigroup::build(ring, eps)?;
    let minimal = b.minimal().to_vec();
    let statuses: Vec<Result<CentralStatus>> =
        par::map_slice(&minimal, |r| epsilon_central_status(ring, &b, eps, r, bounds));
    let central: Vec<CentralStatus> = statuses.into_iter().collect::<Result<_>>()?;
    let failing: Vec<(R::Elem, CentralStatus)> = minimal
        .iter()
        .zip(&central)
        .filter(|(_, st)| !st.is_epsilon_central())
        .map(|(r, st)| (r.clone(), st.clone()))
        .collect();
    if !failing.is_empty() {
        return Ok(Once::NotAllCentral { unit, semigroup: b.elements().to_vec(), failing });
    }
    let mut peeled = Vec::new();
    for (e, st) in minimal.iter().zip(&central) {
        let verified = verify_strong_summand(ring, eps, e, &st.n, bounds)?;
        if verified.is_no() {
            return Err(Error::TheoremViolation(format!(
                "{} is epsilon-central but eS is not strongly N(e)-graded: {}",
                ring.render(e),
                verified.reason()
            )));
        }
        peeled.push(Summand { idempotent: e.clone(), subgroup: st.n.clone(), verified });
    }
    let remainder = ring.sub(&unit, &ring.sum(&minimal));
    let mut parts: Vec<&R::Elem> = minimal.iter().collect();
    parts.push(&remainder);
    check_orthogonal(ring, &unit, &parts)?;
    let remainder_class = classify_remainder(ring, eps, &remainder);
    Ok(Once::Split(PeelStep {
        unit,
        semigroup: b.elements().to_vec(),
        minimal,
        central,
        peeled,
        remainder,
        remainder_class,
    }))
}

/// Iterates [`decompose_once`] on successive remainders. `eps` must be the
/// verified epsilon data of an epsilon-strong ring.
pub fn peel<R: GradedRing>(
    ring: &R,
    eps: &EpsilonData<R::Elem>,
    bounds: &Bounds,
) -> Result<DecompositionReport<R::Elem>> {
    let mut steps: Vec<PeelStep<R::Elem>> = Vec::new();
    let mut unit = ring.one();
    let mut last_size = usize::MAX;
    loop {
        let corner = eps.corner(ring, &unit);
        let size = BooleanSemigroup::build(ring, &corner)?.len();
        if size >= last_size {
            return Err(Error::TheoremViolation(format!(
                "the boolean semigroup did not shrink: {last_size} then {size}"
            )));
        }
        last_size = size;
        let once = match decompose_once(ring, &corner, bounds) {
            Ok(o) => o,
            Err(e @ Error::CapExceeded { .. }) => {
                return Ok(DecompositionReport {
                    steps,
                    remainder: unit,
                    remainder_class: None,
                    outcome: Outcome::Halted { reason: e.to_string(), element: None },
                })
            }
            Err(e) => return Err(e),
        };
        match once {
            Once::NotAllCentral { failing, .. } => {
                let (r, st) = failing.into_iter().next().expect("nonempty");
                let reason = format!("minimal element {} is not epsilon-central (N = {:?})", ring.render(&r), st.n);
                return Ok(DecompositionReport {
                    steps,
                    remainder: unit,
                    remainder_class: None,
                    outcome: Outcome::Halted { reason, element: Some(r) },
                });
            }
            Once::Split(step) => {
                let class = step.remainder_class;
                let remainder = step.remainder.clone();
                steps.push(step);
                if class != RemainderClass::EpsilonStrong {
                    let report = DecompositionReport {
                        steps,
                        remainder,
                        remainder_class: Some(class),
                        outcome: Outcome::Success,
                    };
                    let mut parts: Vec<&R::Elem> = report.summands().into_iter().map(|s| &s.idempotent).collect();
                    parts.push(&report.remainder);
                    check_orthogonal(ring, &ring.one(), &parts)?;
                    return Ok(report);
                }
                unit = remainder;
            }
        }
    }
}

/// Crossed-product status of one peeled summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandCrossed<E> {
    pub idempotent: E,
    pub subgroup: BTreeSet<GroupElem>,
    /// For each g ∈ N(e): a unit of eS inside eS_g, or why none was found.
    pub witnesses: Vec<(GroupElem, CrossedWitness<E>)>,
    pub crossed: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedDecomposition<E> {
    pub summands: Vec<SummandCrossed<E>>,
    /// Set when some summand has no unit in a component, which rules out
    /// an epsilon-crossed structure on the whole ring.
    pub diagnosis: Option<String>,
}

/// Searches units of eS in each eS_g, g ∈ N(e), for every peeled summand.
pub fn crossed_decomposition<R: GradedRing>(
    ring: &R,
    eps: &EpsilonData<R::Elem>,
    report: &DecompositionReport<R::Elem>,
    bounds: &Bounds,
) -> CrossedDecomposition<R::Elem> {
    let mut summands = Vec::new();
    let mut diagnosis = None;
    for s in report.summands() {
        let witnesses: Vec<(GroupElem, CrossedWitness<R::Elem>)> =
            s.subgroup.iter().map(|&g| (g, corner_crossed_witness(ring, eps, &s.idempotent, g, bounds))).collect();
        let crossed = if let Some((g, CrossedWitness::Absent(r))) =
            witnesses.iter().find(|(_, w)| matches!(w, CrossedWitness::Absent(_)))
        {
            diagnosis.get_or_insert_with(|| {
                format!(
                    "({})S is strongly graded but has no unit in its component of degree {g} ({r}), \
                     so the ring is not epsilon-crossed",
                    ring.render(&s.idempotent)
                )
            });
            Verdict::No(format!("no unit of eS in eS_{g}: {r}"))
        } else if let Some((g, CrossedWitness::Unverified(r))) =
            witnesses.iter().find(|(_, w)| matches!(w, CrossedWitness::Unverified(_)))
        {
            Verdict::Unverified(format!("g = {g}: {r}"))
        } else {
            Verdict::Yes("every eS_g contains a unit of eS".into())
        };
        summands.push(SummandCrossed {
            idempotent: s.idempotent.clone(),
            subgroup: s.subgroup.clone(),
            witnesses,
            crossed,
        });
    }
    CrossedDecomposition { summands, diagnosis }
}

/// |e₁S| ⋯ |e_kS| · |e'S| next to |S|; the two agree when the split is a
/// direct sum of additive groups.
pub fn reconstruction_cardinality(
    ring: &StructureConstantRing,
    report: &DecompositionReport<ScElement>,
    cap: usize,
) -> Result<(u128, u128)> {
    let mut parts: Vec<&ScElement> = report.summands().into_iter().map(|s| &s.idempotent).collect();
    parts.push(&report.remainder);
    let mut product: u128 = 1;
    for e in parts {
        let gens: Vec<ScElement> = (0..ring.basis_size()).map(|i| ring.mul(e, &ring.basis(i))).collect();
        product *= ring.span(&gens, cap)?.len() as u128;
    }
    Ok((product, ring.cardinality()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffRing;
    use crate::grading::is_epsilon_strong;
    use crate::group::cyclic_group;
    use crate::lpa::{lpa_z4, lpa_z8};
    use crate::sc::fixtures::{dade6, group_ring_fixture, offdiagonal_z3_fixture, trivial_fixture};

    fn eps_of<R: GradedRing>(ring: &R) -> EpsilonData<R::Elem> {
        is_epsilon_strong(ring, &Bounds::default()).unwrap().1.unwrap()
    }

    fn z2() -> CoeffRing {
        CoeffRing::zn(2).unwrap()
    }

    #[test]
    fn dade6_peels_once() {
        let fx = dade6();
        let s = fx.ring();
        let eps = eps_of(s);
        let b = Bounds::default();
        let report = peel(s, &eps, &b).unwrap();
        assert!(report.is_success());
        assert_eq!(report.steps.len(), 1);
        let sm = report.summands();
        assert_eq!(sm.len(), 1);
        assert_eq!(sm[0].idempotent, fx.diag([4, 4, 4]));
        assert_eq!(sm[0].subgroup, BTreeSet::from([0, 1]));
        assert!(sm[0].verified.is_yes());
        assert_eq!(report.remainder, fx.diag([3, 3, 3]));
        assert_eq!(report.remainder_class, Some(RemainderClass::TrivialGradation));
        let (prod, total) = reconstruction_cardinality(s, &report, crate::sc::DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!((prod, total), (629_856, 629_856));

        let crossed = crossed_decomposition(s, &eps, &report, &b);
        assert!(crossed.summands[0].crossed.is_no());
        assert!(crossed.diagnosis.is_some());
    }

    #[test]
    fn lpa8_peels_twice() {
        let a = lpa_z8(&z2());
        let eps = eps_of(&a);
        let b = Bounds::default();
        let report = peel(&a, &eps, &b).unwrap();
        assert!(report.is_success());
        assert_eq!(report.steps.len(), 2);
        assert_eq!(report.steps[0].remainder_class, RemainderClass::EpsilonStrong);
        assert_eq!(report.steps[0].remainder, a.parse("v1 + v4").unwrap());
        let sm = report.summands();
        assert_eq!(sm[0].idempotent, a.parse("v2 + v3").unwrap());
        assert_eq!(sm[0].subgroup, BTreeSet::from([0, 2, 4, 6]));
        assert_eq!(sm[1].idempotent, a.parse("v1").unwrap());
        assert_eq!(sm[1].subgroup, BTreeSet::from([0, 4]));
        let round1: BTreeSet<_> = report.steps[1].semigroup.iter().cloned().collect();
        assert_eq!(round1, BTreeSet::from([a.parse("v1 + v4").unwrap(), a.parse("v1").unwrap(), a.zero()]));
        assert_eq!(report.remainder, a.parse("v4").unwrap());
        assert_eq!(report.remainder_class, Some(RemainderClass::TrivialGradation));

        let crossed = crossed_decomposition(&a, &eps, &report, &b);
        assert!(crossed.summands.iter().all(|s| s.crossed.is_yes()));
        assert!(crossed.diagnosis.is_none());
    }

    #[test]
    fn lpa4_peels_once_and_is_not_crossed() {
        let a = lpa_z4(&z2());
        let eps = eps_of(&a);
        let b = Bounds::default();
        let report = peel(&a, &eps, &b).unwrap();
        let sm = report.summands();
        assert_eq!(sm.len(), 1);
        assert_eq!(sm[0].idempotent, a.parse("v1 + v2 + v3").unwrap());
        assert_eq!(sm[0].subgroup, BTreeSet::from([0, 2]));
        assert_eq!(report.remainder, a.parse("v4").unwrap());
        assert_eq!(report.remainder_class, Some(RemainderClass::TrivialGradation));
        let crossed = crossed_decomposition(&a, &eps, &report, &b);
        assert!(crossed.summands[0].crossed.is_no());
    }

    #[test]
    fn trivial_and_group_ring() {
        let g = cyclic_group(2).unwrap();
        let t = trivial_fixture(&z2(), &g).unwrap();
        let report = peel(&t, &eps_of(&t), &Bounds::default()).unwrap();
        assert_eq!(report.summands()[0].idempotent, t.one());
        assert_eq!(report.summands()[0].subgroup, BTreeSet::from([0]));
        assert_eq!(report.remainder_class, Some(RemainderClass::Zero));

        let s = group_ring_fixture(&z2(), &g).unwrap();
        let eps = eps_of(&s);
        let report = peel(&s, &eps, &Bounds::default()).unwrap();
        assert_eq!(report.summands()[0].subgroup, BTreeSet::from([0, 1]));
        assert_eq!(report.remainder_class, Some(RemainderClass::Zero));
        let crossed = crossed_decomposition(&s, &eps, &report, &Bounds::default());
        assert!(crossed.summands[0].crossed.is_yes());
    }

    #[test]
    fn verify_strong_summand_rejects_bad_subgroup() {
        let fx = dade6();
        let s = fx.ring();
        let eps = eps_of(s);
        let e1 = fx.diag([4, 4, 4]);
        let v = verify_strong_summand(s, &eps, &e1, &BTreeSet::from([0]), &Bounds::default()).unwrap();
        assert!(v.is_no());
        assert!(verify_strong_summand(s, &eps, &e1, &BTreeSet::from([0, 1]), &Bounds::default()).unwrap().is_yes());
        let unit = s.one();
        assert!(verify_strong_summand(s, &eps, &unit, &BTreeSet::from([0, 1]), &Bounds::default()).unwrap().is_no());
    }

    #[test]
    fn halts_on_non_central_minimal_element() {
        let s = offdiagonal_z3_fixture();
        let eps = eps_of(&s);
        let e11 = s.basis(0);
        assert_eq!(eps.epsilon(1), &e11);
        assert_eq!(eps.epsilon(2), &s.basis(3));
        let report = peel(&s, &eps, &Bounds::default()).unwrap();
        assert!(report.steps.is_empty());
        match report.outcome {
            Outcome::Halted { element: Some(r), .. } => assert!(r == e11 || r == s.basis(3)),
            other => panic!("expected a halt, got {other:?}"),
        }
    }
}
