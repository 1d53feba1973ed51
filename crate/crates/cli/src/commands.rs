//! The subcommands, each producing one JSON report.

use grady_core::decomposition::{
    crossed_decomposition, peel, reconstruction_cardinality, DecompositionReport, Outcome,
};
use grady_core::grading::{self, is_epsilon_strong, Bounds, CrossedWitness, EpsilonData, GradedRing};
use grady_core::lattice::{epsilon_central_status, epsilon_meet, BooleanSemigroup, CentralStatus};
use grady_core::modules::{decompose_module, GradedModule, ModuleSpec};
use grady_core::sc::{ScElement, StructureConstantRing};
use serde_json::{json, Value};

use crate::encode::{self, count, subgroup, verdict, Encode};
use crate::error::{CliError, Result};

pub const EXIT_HALTED: i32 = 5;

const UNIT_NOTE: &str = "B* lists every nonzero element, including the unit ε_e = 1_S; \
a listing that leaves out the unit differs from this one only by that element";

/// Backend-specific additions to a decomposition report.
pub trait Extras: Encode {
    fn reconstruction(&self, _report: &DecompositionReport<Self::Elem>, _cap: usize) -> Result<Value> {
        Ok(Value::Null)
    }
}

impl Extras for StructureConstantRing {
    /// |e₁S| ⋯ |e'S| against |S|.
    fn reconstruction(&self, report: &DecompositionReport<ScElement>, cap: usize) -> Result<Value> {
        if !report.is_success() {
            return Ok(Value::Null);
        }
        let (product, total) = reconstruction_cardinality(self, report, cap)?;
        Ok(json!({ "product_of_parts": count(product), "cardinality": count(total), "agrees": product == total }))
    }
}

impl Extras for grady_core::lpa::LeavittPathAlgebra {}

fn epsilon_table<R: Encode>(ring: &R, eps: &EpsilonData<R::Elem>) -> Value {
    json!(eps
        .entries()
        .iter()
        .map(|e| json!({
            "g": e.g,
            "epsilon": ring.element(&e.epsilon),
            "factorization_size": e.factorization.len(),
            "status": e.status.label(),
            "zero": e.zero,
        }))
        .collect::<Vec<_>>())
}

fn crossed_witness<R: Encode>(ring: &R, g: usize, w: &CrossedWitness<R::Elem>) -> Value {
    match w {
        CrossedWitness::Found { s, t } => {
            json!({ "g": g, "status": "found", "s": ring.element(s), "t": ring.element(t) })
        }
        CrossedWitness::Absent(r) => json!({ "g": g, "status": "absent", "reason": r }),
        CrossedWitness::Unverified(r) => json!({ "g": g, "status": "unverified", "reason": r }),
    }
}

fn central_status<R: Encode>(ring: &R, r: &R::Elem, st: &CentralStatus) -> Value {
    json!({
        "element": ring.element(r),
        "central_in_s": verdict(&st.central_in_s),
        "epsilon_central": st.is_epsilon_central(),
        "gamma_invariant": st.gamma_invariant,
        "n": subgroup(&st.n),
        "n_is_subgroup": st.n_is_subgroup,
    })
}

fn epsilon_data<R: Encode>(ring: &R, used: &Bounds) -> Result<EpsilonData<R::Elem>> {
    let (v, data) = is_epsilon_strong(ring, used)?;
    data.ok_or_else(|| CliError::NotEpsilonStrong(v.to_string()))
}

pub fn analyze<R: Encode>(ring: &R, requested: &Bounds) -> Result<Value> {
    let report = grading::analyze(ring, requested)?;
    let witnesses: Vec<Value> =
        report.crossed_witnesses.iter().enumerate().map(|(g, w)| crossed_witness(ring, g, w)).collect();
    Ok(json!({
        "command": "analyze",
        "legend": ring.legend(),
        "bounds": encode::bounds(requested, &report.bounds),
        "classification": {
            "graded": verdict(&report.graded),
            "symmetric": verdict(&report.symmetric),
            "nearly_epsilon_strong": verdict(&report.nearly_epsilon_strong),
            "epsilon_strong": verdict(&report.epsilon_strong),
            "strongly_graded": verdict(&report.strongly_graded),
            "epsilon_crossed": verdict(&report.epsilon_crossed),
        },
        "epsilon": report.epsilon.as_ref().map_or(Value::Null, |e| epsilon_table(ring, e)),
        "crossed_witnesses": witnesses,
        "notes": report.notes,
    }))
}

pub fn epsilon<R: Encode>(ring: &R, requested: &Bounds) -> Result<Value> {
    let used = ring.resolve(requested);
    let eps = epsilon_data(ring, &used)?;
    let b = BooleanSemigroup::build(ring, &eps)?;
    let zero = ring.zero();
    let elems = b.elements();
    let mut listing = Vec::new();
    let mut n_table = Vec::new();
    let mut central = Vec::new();
    for (i, x) in elems.iter().enumerate() {
        let generated_by: Vec<usize> = ring.group().elements().filter(|&g| eps.epsilon(g) == x).collect();
        listing.push(json!({
            "index": i,
            "element": ring.element(x),
            "epsilon_of": generated_by,
            "minimal": b.is_minimal(x),
            "zero": *x == zero,
        }));
        if *x == zero {
            continue;
        }
        let n = b.n_of(ring, x)?;
        n_table.push(json!({ "index": i, "n": subgroup(&n), "is_subgroup": ring.group().is_subgroup(&n) }));
        if b.is_minimal(x) {
            central.push(central_status(ring, x, &epsilon_central_status(ring, &b, &eps, x, &used)?));
        }
    }
    let mut order = Vec::new();
    for (i, a) in elems.iter().enumerate() {
        for (j, c) in elems.iter().enumerate() {
            if i != j && b.leq(ring, a, c) {
                order.push(json!([i, j]));
            }
        }
    }
    let meet = epsilon_meet(ring, &eps);
    Ok(json!({
        "command": "epsilon",
        "legend": ring.legend(),
        "bounds": encode::bounds(requested, &used),
        "epsilon": epsilon_table(ring, &eps),
        "semigroup": {
            "elements": listing,
            "size": b.len(),
            "nonzero_size": b.nonzero().len(),
            "order": order,
            "order_convention": "a pair [i, j] means element i ≤ element j, that is i = i·j",
        },
        "n_table": n_table,
        "minimal": central,
        "meet": { "over_group": ring.element(&meet.over_group), "over_support": ring.element(&meet.over_support) },
        "notes": [UNIT_NOTE],
    }))
}

/// The report and the exit code (0, or 5 when the peeling halts).
pub fn decompose<R: Extras>(ring: &R, requested: &Bounds) -> Result<(Value, i32)> {
    let used = ring.resolve(requested);
    let eps = epsilon_data(ring, &used)?;
    let report = peel(ring, &eps, &used)?;
    let summand = |s: &grady_core::decomposition::Summand<R::Elem>| json!({ "idempotent": ring.element(&s.idempotent), "subgroup": subgroup(&s.subgroup), "verified": verdict(&s.verified) });
    let steps: Vec<Value> = report
        .steps
        .iter()
        .enumerate()
        .map(|(k, st)| {
            json!({
                "round": k + 1,
                "unit": ring.element(&st.unit),
                "semigroup_size": st.semigroup.len(),
                "semigroup": st.semigroup.iter().map(|x| ring.element(x)).collect::<Vec<_>>(),
                "minimal": st.minimal.iter().zip(&st.central).map(|(r, c)| central_status(ring, r, c)).collect::<Vec<_>>(),
                "peeled": st.peeled.iter().map(summand).collect::<Vec<_>>(),
                "remainder": ring.element(&st.remainder),
                "remainder_class": st.remainder_class.label(),
            })
        })
        .collect();
    let (outcome, exit) = match &report.outcome {
        Outcome::Success => (json!({ "status": "success" }), 0),
        Outcome::Halted { reason, element } => (
            json!({
                "status": "halted",
                "reason": reason,
                "element": element.as_ref().map_or(Value::Null, |e| ring.element(e)),
            }),
            EXIT_HALTED,
        ),
    };
    let crossed = if report.is_success() {
        let c = crossed_decomposition(ring, &eps, &report, &used);
        let summands: Vec<Value> = c
            .summands
            .iter()
            .map(|s| {
                json!({
                    "idempotent": ring.element(&s.idempotent),
                    "subgroup": subgroup(&s.subgroup),
                    "crossed": verdict(&s.crossed),
                    "witnesses": s.witnesses.iter().map(|(g, w)| crossed_witness(ring, *g, w)).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({ "summands": summands, "diagnosis": c.diagnosis })
    } else {
        Value::Null
    };
    let value = json!({
        "command": "decompose",
        "legend": ring.legend(),
        "bounds": encode::bounds(requested, &used),
        "rounds": steps,
        "summands": report.summands().into_iter().map(summand).collect::<Vec<_>>(),
        "remainder": ring.element(&report.remainder),
        "remainder_class": report.remainder_class.map(|c| c.label()),
        "outcome": outcome,
        "crossed": crossed,
        "reconstruction": ring.reconstruction(&report, used.closure_cap)?,
    });
    Ok((value, exit))
}

pub fn module(ring: &StructureConstantRing, spec: ModuleSpec, requested: &Bounds) -> Result<Value> {
    let used = ring.resolve(requested);
    let cap = used.closure_cap;
    let m = GradedModule::build(ring, spec)?;
    let (ring_eps, data) = is_epsilon_strong(ring, &used)?;
    let grp = ring.group();
    let components = grp
        .elements()
        .map(|g| {
            Ok(json!({
                "g": g,
                "rank": m.component_basis(g).len(),
                "cardinality": m.component(g, cap)?.len(),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    let s_of = m.s_of(cap)?;
    let decomposition = match data {
        Some(eps) => {
            let report = peel(ring, &eps, &used)?;
            if report.is_success() {
                json!(decompose_module(&m, &report, cap)?
                    .iter()
                    .map(|s| json!({
                        "idempotent": ring.element(&s.idempotent),
                        "subgroup": s.subgroup,
                        "cardinality": count(s.part.cardinality()),
                        "components": s.part.components.iter().map(|c| c.len()).collect::<Vec<_>>(),
                        "verdict": verdict(&s.verdict),
                    }))
                    .collect::<Vec<_>>())
            } else {
                Value::Null
            }
        }
        None => Value::Null,
    };
    let basis: Vec<Value> =
        m.names().iter().enumerate().map(|(i, n)| json!({ "index": i, "name": n, "degree": m.degrees()[i] })).collect();
    Ok(json!({
        "command": "module",
        "legend": { "ring": ring.legend(), "module": { "basis": basis, "cardinality": count(m.cardinality()) } },
        "bounds": encode::bounds(requested, &used),
        "components": components,
        "ring_epsilon_strong": verdict(&ring_eps),
        "symmetric": verdict(&m.is_symmetric_module(cap)?),
        "dade": verdict(&m.dade_condition(&ring_eps, cap)?),
        "epsilon_strong_module": verdict(&m.is_epsilon_strong_module(cap)?),
        "s_of_m": {
            "cardinality": count(s_of.cardinality()),
            "components": s_of.components.iter().map(|c| c.len()).collect::<Vec<_>>(),
        },
        "decomposition": decomposition,
    }))
}
