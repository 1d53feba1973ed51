//! Classification of a grading along the chain
//! strong ⇒ epsilon-strong ⇒ nearly epsilon-strong ⇒ symmetric.

use crate::error::{Error, Result};
use crate::sc::{ScRingSpec, StructureConstantRing};

use super::crossed::{component_fg_witness, is_epsilon_crossed, CrossedWitness, FgWitness};
use super::epsilon::{is_epsilon_strong, EpsilonData};
use super::{Bounds, Capability, GradedRing, Verdict};

const TOMINAGA_NOTE: &str = "nearly epsilon-strong is decided as epsilon-strong: for the unital rings with \
finite support handled here, s-unital and unital ideals S_gS_g⁻¹ coincide (Tominaga, Theorem 1)";
const PATH_ALGEBRA_NOTE: &str = "Leavitt path algebras of finite graphs are nearly epsilon-strongly graded \
(Nystedt, Öinert and Pinedo, Theorem 4.2)";

/// Every verdict of one analysis, with the data that supports it.
#[derive(Debug, Clone)]
pub struct GradingReport<E> {
    pub graded: Verdict,
    pub symmetric: Verdict,
    pub nearly_epsilon_strong: Verdict,
    pub epsilon_strong: Verdict,
    pub strongly_graded: Verdict,
    pub epsilon_crossed: Verdict,
    pub epsilon: Option<EpsilonData<E>>,
    /// One entry per group element when the crossed search ran.
    pub crossed_witnesses: Vec<CrossedWitness<E>>,
    pub notes: Vec<String>,
    /// The bounds actually used, backend defaults filled in.
    pub bounds: Bounds,
}

fn degree_of<R: GradedRing>(ring: &R, x: &R::Elem) -> Option<usize> {
    ring.group().elements().find(|&g| ring.is_homogeneous_of(x, g))
}

/// S_gS_h ⊆ S_gh. Enumerable backends check every pair of algebra
/// generators; path algebras are graded by construction, since every
/// rewriting rule preserves the degree of a word.
pub fn check_graded<R: GradedRing>(ring: &R) -> Verdict {
    if ring.capability() == Capability::IdentityWitness {
        return Verdict::Yes("structural: every relation is homogeneous, so rewriting preserves degree".into());
    }
    let grp = ring.group();
    let gens = ring.algebra_generators();
    let degrees: Vec<Option<usize>> = gens.iter().map(|x| degree_of(ring, x)).collect();
    for (i, x) in gens.iter().enumerate() {
        let Some(g) = degrees[i] else {
            return Verdict::No(format!("generator {} is not homogeneous", ring.render(x)));
        };
        for (j, y) in gens.iter().enumerate() {
            let Some(h) = degrees[j] else { continue };
            let p = ring.mul(x, y);
            if !ring.is_homogeneous_of(&p, grp.op(g, h)) {
                return Verdict::No(format!(
                    "{} · {} = {} is not of degree {}",
                    ring.render(x),
                    ring.render(y),
                    ring.render(&p),
                    grp.op(g, h)
                ));
            }
        }
    }
    Verdict::Yes(format!("all {} generator pairs multiply homogeneously", gens.len() * gens.len()))
}

/// Grading check on raw table data, reporting a bad pair as No instead of
/// failing construction.
pub fn check_graded_spec(spec: &ScRingSpec) -> Result<Verdict> {
    match StructureConstantRing::build(spec.clone()) {
        Ok(ring) => Ok(check_graded(&ring)),
        Err(Error::HomogeneityViolation { i, j }) => Ok(Verdict::No(format!(
            "the product of basis elements {} and {} leaves the expected component",
            spec.names[i], spec.names[j]
        ))),
        Err(e) => Err(e),
    }
}

/// S_gS_g⁻¹S_g = S_g for every g. Where the backend cannot compare sets
/// directly, a verified epsilon datum implies it: s = ε_g s with ε_g ∈ S_gS_g⁻¹.
pub fn is_symmetrically_graded<R: GradedRing>(
    ring: &R,
    eps: Option<&EpsilonData<R::Elem>>,
    bounds: &Bounds,
) -> Result<Verdict> {
    let mut implied = false;
    for g in ring.support() {
        match ring.symmetric_at(g, bounds)? {
            Some(v) if !v.is_yes() => return Ok(v),
            Some(_) => {}
            None => implied = true,
        }
    }
    if !implied {
        return Ok(Verdict::Yes("S_gS_g⁻¹S_g = S_g on every component (closure equality)".into()));
    }
    Ok(match eps {
        Some(_) => Verdict::Yes("implied by the verified ε_g: s = ε_g s lies in S_gS_g⁻¹S_g".into()),
        None => Verdict::Unverified("no direct check and no verified ε_g".into()),
    })
}

/// Under epsilon-strength, strong iff every ε_g is 1. Enumerable backends
/// also compare S_gS_h with S_gh on all pairs; the two answers must agree.
pub fn is_strongly_graded<R: GradedRing>(ring: &R, eps: &EpsilonData<R::Elem>, bounds: &Bounds) -> Result<Verdict> {
    let one = ring.one();
    let shortcut = match ring.group().elements().find(|&g| *eps.epsilon(g) != one) {
        None => Verdict::Yes("ε_g = 1 for every g".into()),
        Some(g) => Verdict::No(format!("ε_{g} = {} ≠ 1", ring.render(eps.epsilon(g)))),
    };
    if let Some(exhaustive) = ring.strong_exhaustive(bounds)? {
        if exhaustive.decided() != shortcut.decided() {
            return Err(Error::InternalInconsistency(format!(
                "strong grading: ε-shortcut says {shortcut} but the exhaustive check says {exhaustive}"
            )));
        }
    }
    Ok(shortcut)
}

/// Decided through epsilon-strength; see the note attached to the verdict.
pub fn is_nearly_epsilon_strong(epsilon_strong: &Verdict) -> Verdict {
    match epsilon_strong {
        Verdict::Yes(_) => Verdict::Yes(format!("epsilon-strong; {TOMINAGA_NOTE}")),
        Verdict::No(r) => Verdict::No(format!("not epsilon-strong ({r}); {TOMINAGA_NOTE}")),
        Verdict::Unverified(r) => Verdict::Unverified(r.clone()),
    }
}

fn check_chain(report_chain: &[(&str, &Verdict, &str, &Verdict)]) -> Result<()> {
    for (a, va, b, vb) in report_chain {
        if va.is_yes() && vb.is_no() {
            return Err(Error::TheoremViolation(format!("{a} is Yes but {b} is No")));
        }
    }
    Ok(())
}

/// Both readings of finite generation of path algebra components: over the
/// coefficient ring (finitely many degree-g words) and over S_e.
fn finite_generation_notes<R: GradedRing>(ring: &R, bounds: &Bounds) -> Vec<String> {
    let mut notes = Vec::new();
    for g in ring.support() {
        let comp = ring.component(g, bounds);
        let over_coeff = if comp.complete {
            format!("finitely generated over the coefficients ({} words)", comp.generators.len())
        } else {
            format!(
                "not shown finitely generated over the coefficients (more than {} words up to length {})",
                comp.generators.len(),
                bounds.max_len.unwrap_or(0)
            )
        };
        let over_principal = match component_fg_witness(ring, g, bounds) {
            FgWitness::Generators { generators, status } => format!(
                "generated over S_e by {{{}}} ({})",
                generators.iter().map(|x| ring.render(x)).collect::<Vec<_>>().join(", "),
                status.label()
            ),
            FgWitness::Unverified(r) => format!("generation over S_e unverified: {r}"),
        };
        notes.push(format!("S_{g}: {over_coeff}; {over_principal}"));
    }
    notes
}

/// Runs every classification on one ring.
pub fn analyze<R: GradedRing>(ring: &R, bounds: &Bounds) -> Result<GradingReport<R::Elem>> {
    let bounds = ring.resolve(bounds);
    let graded = check_graded(ring);
    let (epsilon_strong, epsilon) = is_epsilon_strong(ring, &bounds)?;
    let symmetric = is_symmetrically_graded(ring, epsilon.as_ref(), &bounds)?;
    let nearly_epsilon_strong = is_nearly_epsilon_strong(&epsilon_strong);
    let strongly_graded = match &epsilon {
        Some(eps) => is_strongly_graded(ring, eps, &bounds)?,
        None => match ring.strong_exhaustive(&bounds)? {
            Some(v) => v,
            None if epsilon_strong.is_no() => Verdict::No("strong implies epsilon-strong".into()),
            None => Verdict::Unverified("epsilon data unavailable".into()),
        },
    };
    let (epsilon_crossed, crossed_witnesses) = match &epsilon {
        Some(eps) => is_epsilon_crossed(ring, eps, &bounds),
        None if epsilon_strong.is_no() => (Verdict::No("epsilon-crossed implies epsilon-strong".into()), Vec::new()),
        None => (Verdict::Unverified("epsilon data unavailable".into()), Vec::new()),
    };
    check_chain(&[
        ("strongly graded", &strongly_graded, "epsilon-strong", &epsilon_strong),
        ("epsilon-strong", &epsilon_strong, "nearly epsilon-strong", &nearly_epsilon_strong),
        ("nearly epsilon-strong", &nearly_epsilon_strong, "symmetric", &symmetric),
        ("epsilon-crossed", &epsilon_crossed, "epsilon-strong", &epsilon_strong),
    ])?;

    let mut notes = vec![TOMINAGA_NOTE.to_string()];
    if ring.capability() == Capability::IdentityWitness {
        notes.push(PATH_ALGEBRA_NOTE.to_string());
        notes.extend(finite_generation_notes(ring, &bounds));
    }
    Ok(GradingReport {
        graded,
        symmetric,
        nearly_epsilon_strong,
        epsilon_strong,
        strongly_graded,
        epsilon_crossed,
        epsilon,
        crossed_witnesses,
        notes,
        bounds,
    })
}
