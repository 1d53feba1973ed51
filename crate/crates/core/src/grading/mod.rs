//! Backend-neutral grading analysis.
//!
//! [`GradedRing`] is the contract both backends satisfy: ring operations,
//! homogeneous components as finite generator lists, and a handful of
//! hooks where the structure-constant backend can enumerate and the path
//! algebra backend has to reason with witnesses instead.

mod classify;
mod crossed;
mod epsilon;
mod lpa_backend;
mod sc_backend;

use std::collections::BTreeSet;
use std::fmt;
use std::hash::Hash;

use crate::coeff::CoeffRing;
use crate::error::Result;
use crate::group::{FiniteGroup, GroupElem};
use crate::sc::DEFAULT_CLOSURE_CAP;

pub use classify::{
    analyze, check_graded, check_graded_spec, is_nearly_epsilon_strong, is_strongly_graded, is_symmetrically_graded,
    GradingReport,
};
pub use crossed::{
    component_fg_witness, corner_crossed_witness, crossed_obstruction, epsilon_crossed_witness, is_epsilon_crossed,
    CrossedWitness, FgWitness,
};
pub use epsilon::{compute_epsilon, is_epsilon_strong, EpsStatus, EpsilonData, EpsilonEntry, EpsilonOutcome};
pub use lpa_backend::vertex_set_commutes;
pub use sc_backend::sc_factorization;

/// A three-state answer. Every variant carries a human-readable reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Yes(String),
    No(String),
    Unverified(String),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No(_))
    }

    pub fn is_unverified(&self) -> bool {
        matches!(self, Verdict::Unverified(_))
    }

    pub fn reason(&self) -> &str {
        match self {
            Verdict::Yes(r) | Verdict::No(r) | Verdict::Unverified(r) => r,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes(_) => "yes",
            Verdict::No(_) => "no",
            Verdict::Unverified(_) => "unverified",
        }
    }

    /// `Some(true)` for Yes, `Some(false)` for No.
    pub fn decided(&self) -> Option<bool> {
        match self {
            Verdict::Yes(_) => Some(true),
            Verdict::No(_) => Some(false),
            Verdict::Unverified(_) => None,
        }
    }

    pub fn from_bool(b: bool, yes: impl Into<String>, no: impl Into<String>) -> Self {
        if b {
            Verdict::Yes(yes.into())
        } else {
            Verdict::No(no.into())
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.label(), self.reason())
    }
}

/// Which kind of reasoning a backend supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Capability {
    /// Components are finite sets; closures can be enumerated.
    Enumerable,
    /// Components may be infinite; only witnesses and bounded samples.
    IdentityWitness,
}

/// Search limits, echoed in every report that depends on them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Word length for monomial lists; `None` means the backend default.
    pub max_len: Option<usize>,
    /// Depth of expansion searches; `None` means the backend default.
    pub max_depth: Option<usize>,
    /// Largest closure or enumeration.
    pub closure_cap: usize,
    /// Largest number of pairs tried by a crossed-product search.
    pub search_cap: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { max_len: None, max_depth: None, closure_cap: DEFAULT_CLOSURE_CAP, search_cap: 1 << 22 }
    }
}

/// Finite spanning set of a homogeneous component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component<E> {
    pub generators: Vec<E>,
    /// False when the list is a bounded sample of an infinite family.
    pub complete: bool,
}

/// Outcome of a backend's search for the identity of S_gS_{g⁻¹}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentitySearch<E> {
    Found { epsilon: E, factorization: Vec<(E, E)>, status: EpsStatus },
    NoIdentity(String),
    Unverified(String),
}

/// Candidate elements of a corner of one component, for crossed searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet<E> {
    pub elements: Vec<E>,
    /// True when `elements` is all of e·S_g.
    pub complete: bool,
}

pub trait GradedRing: Sync {
    type Elem: Clone + PartialEq + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    fn group(&self) -> &FiniteGroup;
    fn coeff(&self) -> &CoeffRing;
    fn capability(&self) -> Capability;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_homogeneous_of(&self, a: &Self::Elem, g: GroupElem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn sum<'a>(&self, xs: impl IntoIterator<Item = &'a Self::Elem>) -> Self::Elem
    where
        Self::Elem: 'a,
    {
        xs.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// Group elements g with S_g ≠ 0.
    fn support(&self) -> BTreeSet<GroupElem>;

    /// Homogeneous elements spanning S_g over the coefficient ring.
    fn component(&self, g: GroupElem, bounds: &Bounds) -> Component<Self::Elem>;

    /// Homogeneous generators of S as an algebra over the coefficient ring.
    fn algebra_generators(&self) -> Vec<Self::Elem>;

    fn render(&self, a: &Self::Elem) -> String;

    /// Bounds with backend defaults filled in.
    fn resolve(&self, bounds: &Bounds) -> Bounds;

    // ---- backend hooks ----

    /// Identity of S_gS_{g⁻¹} for g in the support, g ≠ e.
    fn identity_search(&self, g: GroupElem, bounds: &Bounds) -> Result<IdentitySearch<Self::Elem>>;

    /// Exhaustive S_gS_{g⁻¹}S_g = S_g, when the backend can decide it directly.
    fn symmetric_at(&self, g: GroupElem, bounds: &Bounds) -> Result<Option<Verdict>>;

    /// Exhaustive S_gS_h = S_{gh} over all pairs, when available.
    fn strong_exhaustive(&self, bounds: &Bounds) -> Result<Option<Verdict>>;

    /// Elements of corner·S_g at the given search level; `None` past the cap.
    fn crossed_candidates(
        &self,
        g: GroupElem,
        corner: &Self::Elem,
        level: usize,
        bounds: &Bounds,
    ) -> Option<CandidateSet<Self::Elem>>;

    /// Number of levels a crossed search may deepen through.
    fn crossed_levels(&self, bounds: &Bounds) -> usize;

    /// Membership of r in the centre of R = S_e.
    fn central_in_principal(&self, r: &Self::Elem, bounds: &Bounds) -> Verdict;

    /// Central elements of R to test partial-action identities on.
    fn principal_central_candidates(&self, bounds: &Bounds) -> Vec<Self::Elem>;

    /// (eS_g)(eS_h) = eS_{gh} for g, h ∈ N and eS_g = 0 outside N.
    fn strong_corner(
        &self,
        e: &Self::Elem,
        n: &BTreeSet<GroupElem>,
        eps: &EpsilonData<Self::Elem>,
        bounds: &Bounds,
    ) -> Result<Verdict>;

    /// Finite generating set of S_g as a left R-module.
    fn fg_witness(&self, g: GroupElem, bounds: &Bounds) -> FgWitness<Self::Elem>;

    // ---- derived ----

    /// r commutes with every algebra generator, hence with all of S.
    fn central_in_ring(&self, r: &Self::Elem) -> Verdict {
        for x in self.algebra_generators() {
            if self.mul(r, &x) != self.mul(&x, r) {
                return Verdict::No(format!("does not commute with {}", self.render(&x)));
            }
        }
        Verdict::Yes("commutes with every algebra generator".into())
    }
}

#[cfg(test)]
mod tests;
