//! [`GradedRing`] for structure-constant rings: everything is decided by
//! enumeration and witnessed closures.

use std::collections::{BTreeMap, BTreeSet};

use crate::coeff::CoeffRing;
use crate::error::Result;
use crate::group::{FiniteGroup, GroupElem};
use crate::par;
use crate::sc::{ClosureAction, ScElement, StructureConstantRing};

use super::crossed::FgWitness;
use super::{Bounds, CandidateSet, Capability, Component, EpsStatus, EpsilonData, GradedRing, IdentitySearch, Verdict};

/// Identity of the ideal S_gS_{g⁻¹} with a factorization read off the
/// closure witnesses. `reverse` closes the basis products in the opposite
/// order, which usually yields a different factorization of the same ε_g.
pub fn sc_factorization(
    ring: &StructureConstantRing,
    g: GroupElem,
    reverse: bool,
    cap: usize,
) -> Result<IdentitySearch<ScElement>> {
    let grp = ring.group();
    let mut left: Vec<usize> = ring.component_basis(g).to_vec();
    let mut right: Vec<usize> = ring.component_basis(grp.inv(g)).to_vec();
    if reverse {
        left.reverse();
        right.reverse();
    }
    let pairs: Vec<(usize, usize)> = left.iter().flat_map(|&i| right.iter().map(move |&j| (i, j))).collect();
    let gens: Vec<ScElement> = pairs.iter().map(|&(i, j)| ring.mul(&ring.basis(i), &ring.basis(j))).collect();
    let ideal = ring.module_closure(&gens, true, true, cap)?;
    let spanning: Vec<&Vec<u32>> = ideal.spanning().iter().map(|&i| &ideal.members()[i]).collect();
    let found = par::find_map_first(ideal.len(), |id| {
        let u = &ideal.members()[id];
        spanning.iter().all(|x| ring.mul_raw(u, x) == **x && ring.mul_raw(x, u) == **x).then_some(id)
    });
    let Some(id) = found else {
        return Ok(IdentitySearch::NoIdentity(format!(
            "the ideal S_gS_g⁻¹ ({} elements) has no identity element",
            ideal.len()
        )));
    };
    let space = ring.space();
    // Fold the witness into a map v ↦ u with Σ u·v equal to the member.
    type Fact = BTreeMap<Vec<u32>, Vec<u32>>;
    let merge = |a: &Fact, b: &Fact| -> Fact {
        let mut out = a.clone();
        for (v, u) in b {
            let e = out.entry(v.clone()).or_insert_with(|| space.zero());
            *e = space.add(e, u);
        }
        out.retain(|_, u| !space.is_zero(u));
        out
    };
    let fact = ideal.fold(
        id,
        Fact::new(),
        |k| {
            let (i, j) = pairs[k];
            Fact::from([(ring.basis(j).0, ring.basis(i).0)])
        },
        merge,
        |action, f| {
            let mut out = Fact::new();
            for (v, u) in f {
                let (u2, v2) = match action {
                    ClosureAction::Scalar(c) => (space.scale(c, u), v.clone()),
                    ClosureAction::Left(r) => (ring.mul_raw(r, u), v.clone()),
                    ClosureAction::Right(r) => (u.clone(), ring.mul_raw(v, r)),
                };
                out = merge(&out, &Fact::from([(v2, u2)]));
            }
            out
        },
    );
    let factorization =
        fact.into_iter().filter(|(v, _)| !space.is_zero(v)).map(|(v, u)| (ScElement(u), ScElement(v))).collect();
    Ok(IdentitySearch::Found {
        epsilon: ScElement(ideal.members()[id].clone()),
        factorization,
        status: EpsStatus::Proved,
    })
}

fn span_equal(ring: &StructureConstantRing, a: &[ScElement], b: &[ScElement], cap: usize) -> Result<bool> {
    Ok(ring.span(a, cap)?.same_members(&ring.span(b, cap)?))
}

fn basis_products(ring: &StructureConstantRing, degrees: &[GroupElem], scale: Option<&ScElement>) -> Vec<ScElement> {
    let mut acc: Vec<ScElement> = vec![scale.cloned().unwrap_or_else(|| ring.one())];
    for &d in degrees {
        acc = acc
            .iter()
            .flat_map(|x| ring.component_basis(d).iter().map(move |&i| ring.mul(x, &ring.basis(i))))
            .collect();
    }
    acc
}

impl GradedRing for StructureConstantRing {
    type Elem = ScElement;

    fn group(&self) -> &FiniteGroup {
        StructureConstantRing::group(self)
    }

    fn coeff(&self) -> &CoeffRing {
        StructureConstantRing::coeff(self)
    }

    fn capability(&self) -> Capability {
        Capability::Enumerable
    }

    fn zero(&self) -> ScElement {
        StructureConstantRing::zero(self)
    }

    fn one(&self) -> ScElement {
        StructureConstantRing::one(self)
    }

    fn add(&self, a: &ScElement, b: &ScElement) -> ScElement {
        StructureConstantRing::add(self, a, b)
    }

    fn neg(&self, a: &ScElement) -> ScElement {
        StructureConstantRing::neg(self, a)
    }

    fn mul(&self, a: &ScElement, b: &ScElement) -> ScElement {
        StructureConstantRing::mul(self, a, b)
    }

    fn is_zero(&self, a: &ScElement) -> bool {
        StructureConstantRing::is_zero(self, a)
    }

    fn is_homogeneous_of(&self, a: &ScElement, g: GroupElem) -> bool {
        StructureConstantRing::is_homogeneous_of(self, a, g)
    }

    fn support(&self) -> BTreeSet<GroupElem> {
        self.group().elements().filter(|&g| !self.component_basis(g).is_empty()).collect()
    }

    fn component(&self, g: GroupElem, _bounds: &Bounds) -> Component<ScElement> {
        Component { generators: self.component_generators(g), complete: true }
    }

    fn algebra_generators(&self) -> Vec<ScElement> {
        (0..self.basis_size()).map(|i| self.basis(i)).collect()
    }

    fn render(&self, a: &ScElement) -> String {
        StructureConstantRing::render(self, a)
    }

    fn resolve(&self, bounds: &Bounds) -> Bounds {
        *bounds
    }

    fn identity_search(&self, g: GroupElem, bounds: &Bounds) -> Result<IdentitySearch<ScElement>> {
        sc_factorization(self, g, false, bounds.closure_cap)
    }

    fn symmetric_at(&self, g: GroupElem, bounds: &Bounds) -> Result<Option<Verdict>> {
        let gi = self.group().inv(g);
        let triple = basis_products(self, &[g, gi, g], None);
        let equal = span_equal(self, &triple, &self.component_generators(g), bounds.closure_cap)?;
        Ok(Some(Verdict::from_bool(
            equal,
            "S_gS_g⁻¹S_g = S_g (closure equality)",
            format!("S_gS_g⁻¹S_g ≠ S_g at g = {g}"),
        )))
    }

    fn strong_exhaustive(&self, bounds: &Bounds) -> Result<Option<Verdict>> {
        let grp = self.group();
        for g in grp.elements() {
            for h in grp.elements() {
                let prod = basis_products(self, &[g, h], None);
                let target = self.component_generators(grp.op(g, h));
                if !span_equal(self, &prod, &target, bounds.closure_cap)? {
                    return Ok(Some(Verdict::No(format!("S_gS_h ≠ S_gh at (g, h) = ({g}, {h})"))));
                }
            }
        }
        Ok(Some(Verdict::Yes("S_gS_h = S_gh for all pairs (exhaustive)".into())))
    }

    fn crossed_candidates(
        &self,
        g: GroupElem,
        corner: &ScElement,
        _level: usize,
        bounds: &Bounds,
    ) -> Option<CandidateSet<ScElement>> {
        let all = self.component_elements(g, bounds.closure_cap)?;
        let set: BTreeSet<ScElement> = all.iter().map(|x| self.mul(corner, x)).collect();
        Some(CandidateSet { elements: set.into_iter().collect(), complete: true })
    }

    fn crossed_levels(&self, _bounds: &Bounds) -> usize {
        1
    }

    fn central_in_principal(&self, r: &ScElement, _bounds: &Bounds) -> Verdict {
        let e = self.group().identity();
        for &i in self.component_basis(e) {
            let b = self.basis(i);
            if self.mul(r, &b) != self.mul(&b, r) {
                return Verdict::No(format!("does not commute with {}", self.names()[i]));
            }
        }
        Verdict::Yes("commutes with every basis element of R".into())
    }

    fn principal_central_candidates(&self, bounds: &Bounds) -> Vec<ScElement> {
        let e = self.group().identity();
        let Some(all) = self.component_elements(e, bounds.closure_cap) else {
            return Vec::new();
        };
        let basis: Vec<ScElement> = self.component_generators(e);
        let hits: Vec<Option<ScElement>> = par::map_slice(&all, |x| {
            let central = self.mul(x, x) == *x && basis.iter().all(|b| self.mul(x, b) == self.mul(b, x));
            central.then(|| x.clone())
        });
        hits.into_iter().flatten().collect()
    }

    fn strong_corner(
        &self,
        e: &ScElement,
        n: &BTreeSet<GroupElem>,
        _eps: &EpsilonData<ScElement>,
        bounds: &Bounds,
    ) -> Result<Verdict> {
        let grp = self.group();
        for g in grp.elements().filter(|g| !n.contains(g)) {
            if let Some(&i) = self.component_basis(g).iter().find(|&&i| !self.is_zero(&self.mul(e, &self.basis(i)))) {
                return Ok(Verdict::No(format!("e·{} ≠ 0 with g = {g} outside N", self.names()[i])));
            }
        }
        for &g in n {
            for &h in n {
                let prod = basis_products(self, &[g, h], Some(e));
                let target = basis_products(self, &[grp.op(g, h)], Some(e));
                if !span_equal(self, &prod, &target, bounds.closure_cap)? {
                    return Ok(Verdict::No(format!("(eS_g)(eS_h) ≠ eS_gh at (g, h) = ({g}, {h})")));
                }
            }
        }
        Ok(Verdict::Yes("(eS_g)(eS_h) = eS_gh for all g, h ∈ N (exhaustive); eS_g = 0 outside N".into()))
    }

    fn fg_witness(&self, g: GroupElem, _bounds: &Bounds) -> FgWitness<ScElement> {
        FgWitness::Generators { generators: self.component_generators(g), status: EpsStatus::Proved }
    }
}
