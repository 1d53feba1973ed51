//! JSON encodings: ring and module descriptions, elements, legends.
//! Keys come out sorted because `serde_json::Map` is ordered.

use std::collections::BTreeSet;

use grady_core::grading::{Bounds, GradedRing, Verdict};
use grady_core::group::{FiniteGroup, GroupElem};
use grady_core::lpa::{LeavittPathAlgebra, LpaElement};
use grady_core::modules::ModuleSpec;
use grady_core::sc::{ScElement, Sparse, StructureConstantRing};
use grady_core::{CoeffRing, Scalar};
use serde_json::{json, Map, Value};

pub fn scalar(c: &Scalar) -> Value {
    json!(c.residues())
}

pub fn sparse(v: &Sparse) -> Value {
    Value::Object(v.iter().map(|(i, c)| (i.to_string(), scalar(c))).collect())
}

/// Counts that may exceed u64 become decimal strings.
pub fn count(n: u128) -> Value {
    match u64::try_from(n) {
        Ok(n) => json!(n),
        Err(_) => json!(n.to_string()),
    }
}

pub fn subgroup(s: &BTreeSet<GroupElem>) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

pub fn verdict(v: &Verdict) -> Value {
    json!({ "verdict": v.label(), "reason": v.reason() })
}

fn group_description(g: &FiniteGroup) -> Value {
    if g.is_cyclic_presentation() {
        json!({ "type": "cyclic", "n": g.order() })
    } else {
        json!({ "type": "table", "table": g.table() })
    }
}

fn coeff_description(c: &CoeffRing) -> Value {
    json!({ "moduli": c.moduli() })
}

pub fn group_legend(g: &FiniteGroup) -> Value {
    json!({
        "elements": g.elements().collect::<Vec<_>>(),
        "identity": g.identity(),
        "inverse": g.elements().map(|x| g.inv(x)).collect::<Vec<_>>(),
        "presentation": group_description(g),
    })
}

pub fn bounds(requested: &Bounds, used: &Bounds) -> Value {
    let side = |b: &Bounds| {
        json!({
            "closure_cap": b.closure_cap,
            "max_depth": b.max_depth,
            "max_len": b.max_len,
            "search_cap": b.search_cap,
        })
    };
    json!({ "requested": side(requested), "used": side(used) })
}

/// Per-backend encodings used by every report.
pub trait Encode: GradedRing {
    fn element(&self, x: &Self::Elem) -> Value;
    fn legend(&self) -> Value;
    /// The description file that rebuilds this ring.
    fn description(&self) -> Value;
}

impl Encode for StructureConstantRing {
    fn element(&self, x: &ScElement) -> Value {
        json!({ "terms": sparse(&self.to_sparse(x)), "text": self.render(x) })
    }

    fn legend(&self) -> Value {
        let basis: Vec<Value> = self
            .names()
            .iter()
            .enumerate()
            .map(|(i, n)| json!({ "index": i, "name": n, "degree": self.degree(i) }))
            .collect();
        json!({
            "group": group_legend(self.group()),
            "ring": {
                "kind": "structure_constants",
                "basis": basis,
                "cardinality": count(self.cardinality()),
                "coeff": coeff_description(self.coeff()),
                "summary": self.to_string(),
            },
        })
    }

    fn description(&self) -> Value {
        let mut table = Vec::new();
        for (i, row) in self.table().iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_empty() {
                    table.push(json!({ "i": i, "j": j, "value": sparse(v) }));
                }
            }
        }
        let mut m = Map::new();
        m.insert("kind".into(), json!("structure_constants"));
        m.insert("group".into(), group_description(self.group()));
        m.insert("coeff".into(), coeff_description(self.coeff()));
        m.insert("basis".into(), json!(self.names()));
        m.insert("degrees".into(), json!(self.degrees()));
        if self.has_torsion() {
            m.insert("orders".into(), json!(self.orders().iter().map(|o| o.residues().to_vec()).collect::<Vec<_>>()));
        }
        m.insert("one".into(), sparse(&self.to_sparse(&self.one())));
        m.insert("table".into(), json!(table));
        Value::Object(m)
    }
}

impl Encode for LeavittPathAlgebra {
    fn element(&self, x: &LpaElement) -> Value {
        let terms: Map<String, Value> = self.render_terms(x).iter().map(|(k, c)| (k.clone(), scalar(c))).collect();
        json!({ "terms": terms, "text": self.render(x) })
    }

    fn legend(&self) -> Value {
        json!({
            "group": group_legend(LeavittPathAlgebra::group(self)),
            "ring": {
                "kind": "leavitt",
                "coeff": coeff_description(LeavittPathAlgebra::coeff(self)),
                "edges": edges_json(self),
                "summary": self.to_string(),
                "vertices": self.vertex_names(),
            },
        })
    }

    fn description(&self) -> Value {
        json!({
            "kind": "leavitt",
            "group": group_description(LeavittPathAlgebra::group(self)),
            "coeff": coeff_description(LeavittPathAlgebra::coeff(self)),
            "vertices": self.vertex_names(),
            "edges": edges_json(self),
        })
    }
}

fn edges_json(alg: &LeavittPathAlgebra) -> Value {
    let names = alg.vertex_names();
    json!(alg
        .edges()
        .iter()
        .map(|e| json!({ "id": e.name, "src": names[e.src], "dst": names[e.dst], "weight": e.weight }))
        .collect::<Vec<_>>())
}

pub fn module_description(spec: &ModuleSpec) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!("module"));
    m.insert("basis".into(), json!(spec.names));
    m.insert("degrees".into(), json!(spec.degrees));
    if let Some(orders) = &spec.orders {
        m.insert("orders".into(), json!(orders.iter().map(|o| o.residues().to_vec()).collect::<Vec<_>>()));
    }
    let action: Vec<Value> =
        spec.action.iter().map(|(i, j, v)| json!({ "i": i, "j": j, "value": sparse(v) })).collect();
    m.insert("action".into(), json!(action));
    Value::Object(m)
}
