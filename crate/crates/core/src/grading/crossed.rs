//! Epsilon-invertible pairs (st = ε_g, ts = ε_{g⁻¹}), the obstruction check
//! that rules them out symbolically, and finite generation of components.

use std::collections::{BTreeMap, BTreeSet};

use crate::coeff::Scalar;
use crate::group::GroupElem;
use crate::lpa::{LeavittPathAlgebra, Monomial};
use crate::par;

use super::{Bounds, EpsStatus, EpsilonData, GradedRing, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossedWitness<E> {
    Found { s: E, t: E },
    Absent(String),
    Unverified(String),
}

impl<E> CrossedWitness<E> {
    pub fn is_found(&self) -> bool {
        matches!(self, CrossedWitness::Found { .. })
    }
}

/// A finite generating set of S_g as a left R-module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FgWitness<E> {
    Generators { generators: Vec<E>, status: EpsStatus },
    Unverified(String),
}

/// Searches s ∈ eS_g, t ∈ eS_{g⁻¹} with st = eε_g and ts = eε_{g⁻¹}, where
/// e is a central idempotent (`corner`); e = 1 gives the plain search.
pub fn corner_crossed_witness<R: GradedRing>(
    ring: &R,
    eps: &EpsilonData<R::Elem>,
    corner: &R::Elem,
    g: GroupElem,
    bounds: &Bounds,
) -> CrossedWitness<R::Elem> {
    let grp = ring.group();
    let gi = grp.inv(g);
    let want_st = ring.mul(corner, eps.epsilon(g));
    let want_ts = ring.mul(corner, eps.epsilon(gi));
    if g == grp.identity() {
        return CrossedWitness::Found { s: corner.clone(), t: corner.clone() };
    }
    if ring.is_zero(&want_st) && ring.is_zero(&want_ts) {
        return CrossedWitness::Found { s: ring.zero(), t: ring.zero() };
    }
    let bounds = ring.resolve(bounds);
    let levels = ring.crossed_levels(&bounds);
    for level in 1..=levels {
        let (Some(left), Some(right)) =
            (ring.crossed_candidates(g, corner, level, &bounds), ring.crossed_candidates(gi, corner, level, &bounds))
        else {
            return CrossedWitness::Unverified(format!(
                "candidate sets at level {level} exceed the cap of {}",
                bounds.closure_cap
            ));
        };
        let pairs = left.elements.len() as u64 * right.elements.len() as u64;
        if pairs > bounds.search_cap {
            return CrossedWitness::Unverified(format!(
                "{pairs} pairs at level {level} exceed the search cap of {}",
                bounds.search_cap
            ));
        }
        let hit = par::find_map_first(left.elements.len(), |i| {
            let s = &left.elements[i];
            right
                .elements
                .iter()
                .find(|t| ring.mul(s, t) == want_st && ring.mul(t, s) == want_ts)
                .map(|t| (s.clone(), t.clone()))
        });
        if let Some((s, t)) = hit {
            return CrossedWitness::Found { s, t };
        }
        if left.complete && right.complete {
            return CrossedWitness::Absent(format!(
                "exhaustive over {} × {} pairs",
                left.elements.len(),
                right.elements.len()
            ));
        }
    }
    CrossedWitness::Unverified(format!("no pair found up to word length {levels}"))
}

/// s ∈ S_g, t ∈ S_{g⁻¹} with st = ε_g and ts = ε_{g⁻¹}.
pub fn epsilon_crossed_witness<R: GradedRing>(
    ring: &R,
    eps: &EpsilonData<R::Elem>,
    g: GroupElem,
    bounds: &Bounds,
) -> CrossedWitness<R::Elem> {
    corner_crossed_witness(ring, eps, &ring.one(), g, bounds)
}

/// Epsilon-crossed iff every g has an epsilon-invertible pair.
pub fn is_epsilon_crossed<R: GradedRing>(
    ring: &R,
    eps: &EpsilonData<R::Elem>,
    bounds: &Bounds,
) -> (Verdict, Vec<CrossedWitness<R::Elem>>) {
    let witnesses: Vec<CrossedWitness<R::Elem>> =
        ring.group().elements().map(|g| epsilon_crossed_witness(ring, eps, g, bounds)).collect();
    let verdict = if let Some((g, CrossedWitness::Absent(r))) =
        witnesses.iter().enumerate().find(|(_, w)| matches!(w, CrossedWitness::Absent(_)))
    {
        Verdict::No(format!("no epsilon-invertible pair at g = {g}: {r}"))
    } else if let Some((g, CrossedWitness::Unverified(r))) =
        witnesses.iter().enumerate().find(|(_, w)| matches!(w, CrossedWitness::Unverified(_)))
    {
        Verdict::Unverified(format!("g = {g}: {r}"))
    } else {
        Verdict::Yes("every component has an epsilon-invertible pair".into())
    };
    (verdict, witnesses)
}

/// Finite generation of S_g over R, as far as the backend can establish it.
pub fn component_fg_witness<R: GradedRing>(ring: &R, g: GroupElem, bounds: &Bounds) -> FgWitness<R::Elem> {
    ring.fg_witness(g, &ring.resolve(bounds))
}

/// One equation Σ cᵢ·x_{aᵢ}·x_{bᵢ} = target over unknown coefficients.
struct Equation {
    label: String,
    terms: Vec<(usize, usize, Scalar)>,
    target: Scalar,
}

/// Symbolic impossibility proof for an epsilon-invertible pair at g.
///
/// Writes s = Σ aᵢmᵢ and t = Σ bⱼnⱼ over the complete monomial lists of S_g
/// and S_{g⁻¹}, expands st = ε_g and ts = ε_{g⁻¹} coefficientwise, and
/// propagates: a single unit-coefficient product equal to a unit forces both
/// factors to be units; a single product equal to 0 with one unit factor
/// forces the other to vanish. Returns the derivation when an equation with
/// nonzero target loses all its terms. Sound over every coefficient ring.
/// Returns `None` when the monomial lists are incomplete or nothing is derived.
pub fn crossed_obstruction(alg: &LeavittPathAlgebra, g: GroupElem, len: usize) -> Option<Vec<String>> {
    let grp = alg.group();
    let coeff = alg.coeff();
    let gi = grp.inv(g);
    let (ms, c1) = alg.monomials_of_degree(g, len);
    let (ns, c2) = alg.monomials_of_degree(gi, len);
    if !c1 || !c2 {
        return None;
    }
    let k = ms.len();
    let name = |v: usize| {
        if v < k {
            format!("a[{}]", alg.render_monomial(&ms[v]))
        } else {
            format!("b[{}]", alg.render_monomial(&ns[v - k]))
        }
    };
    let eps_g = alg.vertex_sum(alg.component_support(g));
    let eps_gi = alg.vertex_sum(alg.component_support(gi));

    let mut equations = Vec::new();
    for (first, second, target, tag) in [(&ms, &ns, &eps_g, "st"), (&ns, &ms, &eps_gi, "ts")] {
        let mut by_monomial: BTreeMap<Monomial, Vec<(usize, usize, Scalar)>> = BTreeMap::new();
        for (i, x) in first.iter().enumerate() {
            for (j, y) in second.iter().enumerate() {
                let (vx, vy) = if tag == "st" { (i, k + j) } else { (k + i, j) };
                for (m, c) in alg.monomial_multiply(x, y).terms() {
                    by_monomial.entry(m.clone()).or_default().push((vx, vy, c.clone()));
                }
            }
        }
        let mut keys: BTreeSet<Monomial> = by_monomial.keys().cloned().collect();
        keys.extend(target.monomials().cloned());
        for m in keys {
            equations.push(Equation {
                label: format!("coefficient of {} in {tag}", alg.render_monomial(&m)),
                terms: by_monomial.remove(&m).unwrap_or_default(),
                target: target.coefficient(&m).cloned().unwrap_or_else(|| coeff.zero()),
            });
        }
    }

    let mut units: BTreeSet<usize> = BTreeSet::new();
    let mut zeros: BTreeSet<usize> = BTreeSet::new();
    let mut log = Vec::new();
    loop {
        let mut changed = false;
        for eq in &equations {
            let active: Vec<&(usize, usize, Scalar)> =
                eq.terms.iter().filter(|(x, y, _)| !zeros.contains(x) && !zeros.contains(y)).collect();
            if active.is_empty() {
                if !coeff.is_zero(&eq.target) {
                    log.push(format!("{}: every product vanishes but the target is {}", eq.label, eq.target));
                    return Some(log);
                }
                continue;
            }
            let [(x, y, c)] = active[..] else { continue };
            if !coeff.is_unit(c) {
                continue;
            }
            if coeff.is_unit(&eq.target) {
                for v in [*x, *y] {
                    if units.insert(v) {
                        log.push(format!("{}: single product equals a unit, so {} is a unit", eq.label, name(v)));
                        changed = true;
                    }
                }
            } else if coeff.is_zero(&eq.target) {
                for (u, other) in [(*x, *y), (*y, *x)] {
                    if units.contains(&u) && units.contains(&other) {
                        log.push(format!(
                            "{}: the product of the units {} and {} would vanish",
                            eq.label,
                            name(u),
                            name(other)
                        ));
                        return Some(log);
                    }
                    if units.contains(&u) && zeros.insert(other) {
                        log.push(format!(
                            "{}: single product vanishes and {} is a unit, so {} = 0",
                            eq.label,
                            name(u),
                            name(other)
                        ));
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return None;
        }
    }
}
