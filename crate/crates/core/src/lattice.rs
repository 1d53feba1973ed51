//! The boolean semigroup generated by the ε_g, the sets N(r), the additive
//! maps γ_g and the three equivalent forms of epsilon-centrality.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::grading::{Bounds, EpsilonData, GradedRing, Verdict};
use crate::group::GroupElem;
use crate::par;

/// Products of the ε_g under the order a ≤ b ⟺ a = ab. The unit (ε_e) is
/// always an element, and 0 is one whenever some product vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanSemigroup<E> {
    elements: Vec<E>,
    generators: Vec<E>,
    minimal: Vec<E>,
    unit: E,
    zero: E,
}

impl<E: Clone + Ord> BooleanSemigroup<E> {
    /// Multiplicative closure of {ε_g}. Every product is checked to be an
    /// idempotent and every pair to commute.
    pub fn build<R: GradedRing<Elem = E>>(ring: &R, eps: &EpsilonData<E>) -> Result<Self> {
        let generators = eps.epsilons();
        let unit = eps.epsilon(ring.group().identity()).clone();
        let mut seen: BTreeSet<E> = generators.iter().cloned().collect();
        let mut elements: Vec<E> = Vec::new();
        for g in &generators {
            if !elements.contains(g) {
                elements.push(g.clone());
            }
        }
        let mut frontier = elements.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for b in &generators {
                    let p = ring.mul(a, b);
                    if seen.insert(p.clone()) {
                        next.push(p.clone());
                        elements.push(p);
                    }
                }
            }
            frontier = next;
        }
        for x in &elements {
            if ring.mul(x, x) != *x {
                return Err(Error::NonIdempotentProduct(ring.render(x)));
            }
        }
        for (i, a) in elements.iter().enumerate() {
            for b in &elements[i + 1..] {
                if ring.mul(a, b) != ring.mul(b, a) {
                    return Err(Error::InternalInconsistency(format!(
                        "{} and {} do not commute",
                        ring.render(a),
                        ring.render(b)
                    )));
                }
            }
        }
        let zero = ring.zero();
        let leq = |a: &E, b: &E| ring.mul(a, b) == *a;
        let minimal = elements
            .iter()
            .filter(|a| **a != zero)
            .filter(|a| !elements.iter().any(|b| *b != zero && b != *a && leq(b, a)))
            .cloned()
            .collect();
        Ok(Self { elements, generators, minimal, unit, zero })
    }

    /// All elements, generators first in group order, then new products.
    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    /// The nonzero elements.
    pub fn nonzero(&self) -> Vec<E> {
        self.elements.iter().filter(|x| **x != self.zero).cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// ε_g indexed by group element.
    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    /// Minimal elements of the nonzero part.
    pub fn minimal(&self) -> &[E] {
        &self.minimal
    }

    pub fn unit(&self) -> &E {
        &self.unit
    }

    pub fn contains(&self, x: &E) -> bool {
        self.elements.contains(x)
    }

    pub fn is_minimal(&self, x: &E) -> bool {
        self.minimal.contains(x)
    }

    pub fn leq<R: GradedRing<Elem = E>>(&self, ring: &R, a: &E, b: &E) -> bool {
        ring.mul(a, b) == *a
    }

    /// N(r) = {g : rε_g = r}. For minimal r the set must also equal
    /// {g : ε_g r ≠ 0}.
    pub fn n_of<R: GradedRing<Elem = E>>(&self, ring: &R, r: &E) -> Result<BTreeSet<GroupElem>> {
        let n: BTreeSet<GroupElem> =
            ring.group().elements().filter(|&g| ring.mul(r, &self.generators[g]) == *r).collect();
        if self.is_minimal(r) {
            let other: BTreeSet<GroupElem> =
                ring.group().elements().filter(|&g| !ring.is_zero(&ring.mul(&self.generators[g], r))).collect();
            if other != n {
                return Err(Error::MinimalityContradiction(format!(
                    "for {}: {{g : rε_g = r}} = {n:?} but {{g : ε_g r ≠ 0}} = {other:?}",
                    ring.render(r)
                )));
            }
        }
        Ok(n)
    }
}

/// γ_g(r ε_g⁻¹) = r ε_g for every g. Requires r central in R.
pub fn is_gamma_invariant<R: GradedRing>(
    ring: &R,
    eps: &EpsilonData<R::Elem>,
    r: &R::Elem,
    bounds: &Bounds,
) -> Result<bool> {
    if let Verdict::No(reason) = ring.central_in_principal(r, bounds) {
        return Err(Error::NotCentralInR(format!("{}: {reason}", ring.render(r))));
    }
    let grp = ring.group();
    Ok(grp.elements().all(|g| {
        let lhs = eps.gamma(ring, g, &ring.mul(r, eps.epsilon(grp.inv(g))));
        lhs == ring.mul(r, eps.epsilon(g))
    }))
}

/// r ∈ Z(S), checked against algebra generators.
pub fn is_central_in_s<R: GradedRing>(ring: &R, r: &R::Elem) -> Verdict {
    ring.central_in_ring(r)
}

/// The three equivalent conditions on a minimal element, evaluated
/// separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralStatus {
    pub gamma_invariant: bool,
    pub central_in_s: Verdict,
    pub n_is_subgroup: bool,
    pub n: BTreeSet<GroupElem>,
}

impl CentralStatus {
    pub fn is_epsilon_central(&self) -> bool {
        self.gamma_invariant
    }
}

/// Evaluates γ-invariance, centrality in S and the subgroup property of
/// N(r) for minimal r; they must agree.
pub fn epsilon_central_status<R: GradedRing>(
    ring: &R,
    b: &BooleanSemigroup<R::Elem>,
    eps: &EpsilonData<R::Elem>,
    r: &R::Elem,
    bounds: &Bounds,
) -> Result<CentralStatus> {
    if !b.is_minimal(r) {
        return Err(Error::Precondition(format!("{} is not minimal", ring.render(r))));
    }
    let n = b.n_of(ring, r)?;
    let gamma_invariant = is_gamma_invariant(ring, eps, r, bounds)?;
    let central_in_s = is_central_in_s(ring, r);
    let n_is_subgroup = ring.group().is_subgroup(&n);
    let status = CentralStatus { gamma_invariant, central_in_s, n_is_subgroup, n };
    let central = status.central_in_s.decided().unwrap_or(gamma_invariant);
    if gamma_invariant != central || gamma_invariant != n_is_subgroup {
        return Err(Error::TheoremViolation(format!(
            "epsilon-centrality of {} disagrees: γ-invariant {gamma_invariant}, central in S {}, N(r) subgroup {n_is_subgroup}",
            ring.render(r),
            status.central_in_s
        )));
    }
    Ok(status)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Meet<E> {
    /// Product of ε_g over the whole group.
    pub over_group: E,
    /// Product over the support only.
    pub over_support: E,
}

/// ⋀ ε_g, over all of G and over the support.
pub fn epsilon_meet<R: GradedRing>(ring: &R, eps: &EpsilonData<R::Elem>) -> Meet<R::Elem> {
    let over_group = ring.group().elements().fold(ring.one(), |acc, g| ring.mul(&acc, eps.epsilon(g)));
    let over_support = ring.support().into_iter().fold(ring.one(), |acc, g| ring.mul(&acc, eps.epsilon(g)));
    Meet { over_group, over_support }
}

/// γ_g(ε_h ε_g⁻¹) = ε_gh ε_g for all g, h. Returns the first failing pair.
pub fn check_idempotent_transport<R: GradedRing>(
    ring: &R,
    eps: &EpsilonData<R::Elem>,
) -> Option<(GroupElem, GroupElem)> {
    let grp = ring.group();
    let pairs: Vec<(GroupElem, GroupElem)> = grp.elements().flat_map(|g| grp.elements().map(move |h| (g, h))).collect();
    par::find_map_first(pairs.len(), |i| {
        let (g, h) = pairs[i];
        let lhs = eps.gamma(ring, g, &ring.mul(eps.epsilon(h), eps.epsilon(grp.inv(g))));
        let rhs = ring.mul(eps.epsilon(grp.op(g, h)), eps.epsilon(g));
        (lhs != rhs).then_some((g, h))
    })
}

/// γ_g(r)s = sr for r in `candidates` and s among the available generators
/// of each S_g. Returns the first failure as (g, r, s) renderings.
pub fn check_central_transport<R: GradedRing>(
    ring: &R,
    eps: &EpsilonData<R::Elem>,
    candidates: &[R::Elem],
    bounds: &Bounds,
) -> Option<(GroupElem, String, String)> {
    for g in ring.group().elements() {
        let comp = ring.component(g, bounds);
        for r in candidates {
            let gr = eps.gamma(ring, g, r);
            if let Some(s) = comp.generators.iter().find(|s| ring.mul(&gr, s) != ring.mul(s, r)) {
                return Some((g, ring.render(r), ring.render(s)));
            }
        }
    }
    None
}

/// γ_g⁻¹(γ_g(rε_g⁻¹)ε_g) = rε_g⁻¹ for each g; returns the first failing g.
pub fn check_round_trip<R: GradedRing>(ring: &R, eps: &EpsilonData<R::Elem>, r: &R::Elem) -> Option<GroupElem> {
    let grp = ring.group();
    grp.elements().find(|&g| {
        let gi = grp.inv(g);
        let x = ring.mul(r, eps.epsilon(gi));
        let there = ring.mul(&eps.gamma(ring, g, &x), eps.epsilon(g));
        eps.gamma(ring, gi, &there) != x
    })
}
