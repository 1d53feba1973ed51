//! The idempotents ε_g: identities of the ideals S_gS_{g⁻¹}, each with an
//! explicit factorization ε_g = Σ uᵢvᵢ, uᵢ ∈ S_g, vᵢ ∈ S_{g⁻¹}.

use crate::error::{Error, Result};
use crate::group::GroupElem;
use crate::par;

use super::{Bounds, GradedRing, IdentitySearch, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EpsStatus {
    /// Identity and unit properties hold on the whole component.
    Proved,
    /// Checked on all words up to the given length only.
    SampleVerified { max_len: usize },
}

impl EpsStatus {
    pub fn label(&self) -> String {
        match self {
            EpsStatus::Proved => "proved".into(),
            EpsStatus::SampleVerified { max_len } => format!("sample-verified up to length {max_len}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonEntry<E> {
    pub g: GroupElem,
    pub epsilon: E,
    pub factorization: Vec<(E, E)>,
    pub zero: bool,
    pub status: EpsStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EpsilonOutcome<E> {
    Entry(EpsilonEntry<E>),
    NoIdentity { g: GroupElem, reason: String },
    Unverified { g: GroupElem, reason: String },
}

/// ε_g for every g in the group, indexed by group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonData<E> {
    entries: Vec<EpsilonEntry<E>>,
}

impl<E: Clone> EpsilonData<E> {
    pub fn from_entries(entries: Vec<EpsilonEntry<E>>) -> Self {
        debug_assert!(entries.iter().enumerate().all(|(i, e)| e.g == i));
        Self { entries }
    }

    pub fn entries(&self) -> &[EpsilonEntry<E>] {
        &self.entries
    }

    pub fn get(&self, g: GroupElem) -> &EpsilonEntry<E> {
        &self.entries[g]
    }

    pub fn epsilon(&self, g: GroupElem) -> &E {
        &self.entries[g].epsilon
    }

    pub fn epsilons(&self) -> Vec<E> {
        self.entries.iter().map(|e| e.epsilon.clone()).collect()
    }

    /// True when every entry is proved rather than sampled.
    pub fn all_proved(&self) -> bool {
        self.entries.iter().all(|e| e.status == EpsStatus::Proved)
    }

    /// γ_g(s) = Σ uᵢ s vᵢ.
    pub fn gamma<R: GradedRing<Elem = E>>(&self, ring: &R, g: GroupElem, s: &E) -> E {
        self.entries[g]
            .factorization
            .iter()
            .fold(ring.zero(), |acc, (u, v)| ring.add(&acc, &ring.mul(&ring.mul(u, s), v)))
    }

    /// The same data seen inside the corner uS: every ε_g and every
    /// factorization pair multiplied by the central idempotent u.
    pub fn corner<R: GradedRing<Elem = E>>(&self, ring: &R, u: &E) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let epsilon = ring.mul(u, &e.epsilon);
                let factorization: Vec<(E, E)> = e
                    .factorization
                    .iter()
                    .map(|(a, b)| (ring.mul(u, a), ring.mul(u, b)))
                    .filter(|(a, b)| !ring.is_zero(a) && !ring.is_zero(b))
                    .collect();
                EpsilonEntry { g: e.g, zero: ring.is_zero(&epsilon), epsilon, factorization, status: e.status.clone() }
            })
            .collect();
        Self { entries }
    }
}

/// ε_g with its factorization, or why it could not be produced.
pub fn compute_epsilon<R: GradedRing>(ring: &R, g: GroupElem, bounds: &Bounds) -> Result<EpsilonOutcome<R::Elem>> {
    let grp = ring.group();
    if g == grp.identity() {
        let one = ring.one();
        return Ok(EpsilonOutcome::Entry(EpsilonEntry {
            g,
            epsilon: one.clone(),
            factorization: vec![(one.clone(), one)],
            zero: false,
            status: EpsStatus::Proved,
        }));
    }
    if !ring.support().contains(&g) {
        return Ok(EpsilonOutcome::Entry(EpsilonEntry {
            g,
            epsilon: ring.zero(),
            factorization: Vec::new(),
            zero: true,
            status: EpsStatus::Proved,
        }));
    }
    let (epsilon, factorization, status) = match ring.identity_search(g, bounds)? {
        IdentitySearch::Found { epsilon, factorization, status } => (epsilon, factorization, status),
        IdentitySearch::NoIdentity(reason) => return Ok(EpsilonOutcome::NoIdentity { g, reason }),
        IdentitySearch::Unverified(reason) => return Ok(EpsilonOutcome::Unverified { g, reason }),
    };
    let gi = grp.inv(g);
    for (u, v) in &factorization {
        if !ring.is_homogeneous_of(u, g) || !ring.is_homogeneous_of(v, gi) {
            return Err(Error::InternalInconsistency(format!(
                "factorization pair ({}, {}) has the wrong degrees",
                ring.render(u),
                ring.render(v)
            )));
        }
    }
    let sum = factorization.iter().fold(ring.zero(), |acc, (u, v)| ring.add(&acc, &ring.mul(u, v)));
    if sum != epsilon {
        return Err(Error::InternalInconsistency(format!(
            "factorization of ε_{g} evaluates to {} instead of {}",
            ring.render(&sum),
            ring.render(&epsilon)
        )));
    }
    let comp = ring.component(g, bounds);
    if let Some(s) = comp.generators.iter().find(|s| ring.mul(&epsilon, s) != **s) {
        return Ok(EpsilonOutcome::NoIdentity {
            g,
            reason: format!(
                "the identity {} of S_gS_g⁻¹ is not a left unit on {}",
                ring.render(&epsilon),
                ring.render(s)
            ),
        });
    }
    Ok(EpsilonOutcome::Entry(EpsilonEntry { g, epsilon, factorization, zero: false, status }))
}

/// Decides epsilon-strength: every ε_g exists, is a left unit on S_g, and
/// ε_{g⁻¹} is a right unit on S_g.
pub fn is_epsilon_strong<R: GradedRing>(ring: &R, bounds: &Bounds) -> Result<(Verdict, Option<EpsilonData<R::Elem>>)> {
    let grp = ring.group();
    let outcomes: Vec<Result<EpsilonOutcome<R::Elem>>> =
        par::map_range(grp.order(), |g| compute_epsilon(ring, g, bounds));
    let mut entries = Vec::with_capacity(grp.order());
    let mut unverified = None;
    for outcome in outcomes {
        match outcome? {
            EpsilonOutcome::Entry(e) => entries.push(e),
            EpsilonOutcome::NoIdentity { g, reason } => {
                return Ok((Verdict::No(format!("g = {g}: {reason}")), None));
            }
            EpsilonOutcome::Unverified { g, reason } => {
                unverified.get_or_insert(format!("g = {g}: {reason}"));
            }
        }
    }
    if let Some(reason) = unverified {
        return Ok((Verdict::Unverified(reason), None));
    }
    let data = EpsilonData::from_entries(entries);
    for g in grp.elements() {
        let right = data.epsilon(grp.inv(g));
        for s in ring.component(g, bounds).generators {
            if ring.mul(&s, right) != s {
                return Ok((
                    Verdict::No(format!("g = {g}: ε_{} is not a right unit on {}", grp.inv(g), ring.render(&s))),
                    None,
                ));
            }
        }
    }
    let reason = if data.all_proved() {
        "every S_gS_g⁻¹ has an identity acting as a two-sided unit on S_g".to_string()
    } else {
        let labels: Vec<String> = data
            .entries()
            .iter()
            .filter(|e| e.status != EpsStatus::Proved)
            .map(|e| format!("g = {}: {}", e.g, e.status.label()))
            .collect();
        format!("identities found; unit property {}", labels.join(", "))
    };
    Ok((Verdict::Yes(reason), Some(data)))
}
