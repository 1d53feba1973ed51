//! Ring and module description files.

use std::path::Path;

use grady_core::group::{cyclic_group, FiniteGroup};
use grady_core::lpa::{lpa_z4, lpa_z8, Edge, LeavittPathAlgebra};
use grady_core::modules::ModuleSpec;
use grady_core::sc::fixtures::{
    dade6, group_ring_fixture, offdiagonal_z3_fixture, square_zero_fixture, trivial_fixture,
};
use grady_core::sc::{ScRingSpec, Sparse, StructureConstantRing};
use grady_core::{CoeffRing, Scalar};
use serde_json::{Map, Value};

use crate::error::{CliError, Result};

pub const FIXTURE_NAMES: [&str; 7] = ["dade6", "lpa-z4", "lpa-z8", "group-ring", "trivial", "square-zero", "matrix-z3"];

pub enum LoadedRing {
    Sc(StructureConstantRing),
    Lpa(LeavittPathAlgebra),
}

/// A JSON document with a file name for error locations.
pub struct Doc {
    file: String,
    root: Value,
}

impl Doc {
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        Self::parse(&path.display().to_string(), &text)
    }

    pub fn parse(file: &str, text: &str) -> Result<Self> {
        let root = serde_json::from_str(text).map_err(|e| CliError::Parse {
            file: file.to_string(),
            location: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        Ok(Self { file: file.to_string(), root })
    }

    fn err(&self, at: &str, message: impl Into<String>) -> CliError {
        CliError::Parse {
            file: self.file.clone(),
            location: if at.is_empty() { "/".into() } else { at.to_string() },
            message: message.into(),
        }
    }

    fn core<T>(&self, at: &str, r: grady_core::Result<T>) -> Result<T> {
        r.map_err(|e| self.err(at, e.to_string()))
    }

    fn obj<'v>(&self, v: &'v Value, at: &str) -> Result<&'v Map<String, Value>> {
        v.as_object().ok_or_else(|| self.err(at, "expected an object"))
    }

    fn field<'v>(&self, m: &'v Map<String, Value>, key: &str, at: &str) -> Result<&'v Value> {
        m.get(key).ok_or_else(|| self.err(at, format!("missing field {key:?}")))
    }

    fn arr<'v>(&self, v: &'v Value, at: &str) -> Result<&'v Vec<Value>> {
        v.as_array().ok_or_else(|| self.err(at, "expected an array"))
    }

    fn str<'v>(&self, v: &'v Value, at: &str) -> Result<&'v str> {
        v.as_str().ok_or_else(|| self.err(at, "expected a string"))
    }

    fn usize(&self, v: &Value, at: &str) -> Result<usize> {
        v.as_u64().and_then(|n| usize::try_from(n).ok()).ok_or_else(|| self.err(at, "expected a non-negative integer"))
    }

    fn kind(&self) -> Result<&str> {
        let m = self.obj(&self.root, "")?;
        self.str(self.field(m, "kind", "")?, "/kind")
    }

    fn group(&self, v: &Value, at: &str) -> Result<FiniteGroup> {
        let m = self.obj(v, at)?;
        match self.str(self.field(m, "type", at)?, &format!("{at}/type"))? {
            "cyclic" => {
                let n = self.usize(self.field(m, "n", at)?, &format!("{at}/n"))?;
                self.core(&format!("{at}/n"), cyclic_group(n))
            }
            "table" => {
                let at_t = format!("{at}/table");
                let rows = self.arr(self.field(m, "table", at)?, &at_t)?;
                let table = rows
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        let at_r = format!("{at_t}/{i}");
                        self.arr(row, &at_r)?
                            .iter()
                            .enumerate()
                            .map(|(j, x)| self.usize(x, &format!("{at_r}/{j}")))
                            .collect()
                    })
                    .collect::<Result<Vec<Vec<usize>>>>()?;
                self.core(&at_t, FiniteGroup::from_table(table))
            }
            other => Err(self.err(&format!("{at}/type"), format!("unknown group type {other:?}"))),
        }
    }

    fn coeff(&self, v: &Value, at: &str) -> Result<CoeffRing> {
        let m = self.obj(v, at)?;
        let at_m = format!("{at}/moduli");
        let moduli = self
            .arr(self.field(m, "moduli", at)?, &at_m)?
            .iter()
            .enumerate()
            .map(|(i, x)| {
                self.usize(x, &format!("{at_m}/{i}"))
                    .and_then(|n| u32::try_from(n).map_err(|_| self.err(&format!("{at_m}/{i}"), "modulus too large")))
            })
            .collect::<Result<Vec<u32>>>()?;
        self.core(&at_m, CoeffRing::new(moduli))
    }

    /// A residue tuple, or a bare integer reduced into every factor.
    fn scalar(&self, coeff: &CoeffRing, v: &Value, at: &str) -> Result<Scalar> {
        if let Some(n) = v.as_i64() {
            return Ok(coeff.from_int(n));
        }
        let residues = self
            .arr(v, at)?
            .iter()
            .enumerate()
            .map(|(i, x)| x.as_i64().ok_or_else(|| self.err(&format!("{at}/{i}"), "expected an integer")))
            .collect::<Result<Vec<i64>>>()?;
        self.core(at, coeff.scalar(&residues))
    }

    /// An index given as a number, a numeric string or a name. Numeric
    /// strings are always indices, so emitted files never depend on names.
    fn index(&self, v: &Value, names: &[String], at: &str) -> Result<usize> {
        let i = match v {
            Value::Number(_) => self.usize(v, at)?,
            Value::String(s) => match s.parse::<usize>() {
                Ok(i) => i,
                Err(_) => {
                    names.iter().position(|n| n == s).ok_or_else(|| self.err(at, format!("unknown name {s:?}")))?
                }
            },
            _ => return Err(self.err(at, "expected an index or a name")),
        };
        if i >= names.len() {
            return Err(self.err(at, format!("index {i} out of range (size {})", names.len())));
        }
        Ok(i)
    }

    fn sparse(&self, coeff: &CoeffRing, names: &[String], v: &Value, at: &str) -> Result<Sparse> {
        let m = self.obj(v, at)?;
        let mut out = Vec::new();
        for (k, c) in m {
            let at_k = format!("{at}/{k}");
            let i = self.index(&Value::String(k.clone()), names, &at_k)?;
            out.push((i, self.scalar(coeff, c, &at_k)?));
        }
        Ok(out)
    }

    fn names(&self, v: &Value, at: &str) -> Result<Vec<String>> {
        self.arr(v, at)?
            .iter()
            .enumerate()
            .map(|(i, x)| self.str(x, &format!("{at}/{i}")).map(str::to_string))
            .collect()
    }

    fn degrees(&self, v: &Value, at: &str, count: usize, group: &FiniteGroup) -> Result<Vec<usize>> {
        let ds = self.arr(v, at)?;
        if ds.len() != count {
            return Err(self.err(at, format!("expected {count} degrees, found {}", ds.len())));
        }
        ds.iter()
            .enumerate()
            .map(|(i, x)| {
                let at_i = format!("{at}/{i}");
                let d = self.usize(x, &at_i)?;
                if d >= group.order() {
                    return Err(self.err(&at_i, format!("group element {d} out of range")));
                }
                Ok(d)
            })
            .collect()
    }

    fn orders(&self, m: &Map<String, Value>, coeff: &CoeffRing, count: usize) -> Result<Option<Vec<Scalar>>> {
        let Some(v) = m.get("orders") else { return Ok(None) };
        let os = self.arr(v, "/orders")?;
        if os.len() != count {
            return Err(self.err("/orders", format!("expected {count} orders, found {}", os.len())));
        }
        os.iter()
            .enumerate()
            .map(|(i, x)| {
                let at = format!("/orders/{i}");
                let residues = self
                    .arr(x, &at)?
                    .iter()
                    .enumerate()
                    .map(|(j, r)| {
                        r.as_u64()
                            .and_then(|n| u32::try_from(n).ok())
                            .ok_or_else(|| self.err(&format!("{at}/{j}"), "expected a positive integer"))
                    })
                    .collect::<Result<Vec<u32>>>()?;
                if residues.len() != coeff.width() {
                    return Err(self.err(&at, "order has the wrong number of components"));
                }
                Ok(Scalar(residues))
            })
            .collect::<Result<Vec<Scalar>>>()
            .map(Some)
    }

    pub fn ring(&self) -> Result<LoadedRing> {
        let m = self.obj(&self.root, "")?;
        match self.kind()? {
            "structure_constants" => self.sc_ring(m).map(LoadedRing::Sc),
            "leavitt" => self.leavitt(m).map(LoadedRing::Lpa),
            "fixture" => self.fixture(m),
            "module" => Err(self.err("/kind", "this is a module file; a ring file is expected here")),
            other => Err(self.err("/kind", format!("unknown kind {other:?}"))),
        }
    }

    fn sc_ring(&self, m: &Map<String, Value>) -> Result<StructureConstantRing> {
        let group = self.group(self.field(m, "group", "")?, "/group")?;
        let coeff = self.coeff(self.field(m, "coeff", "")?, "/coeff")?;
        let names = self.names(self.field(m, "basis", "")?, "/basis")?;
        let degrees = self.degrees(self.field(m, "degrees", "")?, "/degrees", names.len(), &group)?;
        let orders = self.orders(m, &coeff, names.len())?;
        let one = self.sparse(&coeff, &names, self.field(m, "one", "")?, "/one")?;
        let mut table = Vec::new();
        for (k, entry) in self.arr(self.field(m, "table", "")?, "/table")?.iter().enumerate() {
            let at = format!("/table/{k}");
            let e = self.obj(entry, &at)?;
            let i = self.index(self.field(e, "i", &at)?, &names, &format!("{at}/i"))?;
            let j = self.index(self.field(e, "j", &at)?, &names, &format!("{at}/j"))?;
            let value = self.sparse(&coeff, &names, self.field(e, "value", &at)?, &format!("{at}/value"))?;
            table.push((i, j, value));
        }
        let spec = ScRingSpec { coeff, group, names: names.clone(), degrees, orders, table, one };
        StructureConstantRing::build(spec).map_err(|e| {
            let at = match e {
                grady_core::Error::HomogeneityViolation { .. }
                | grady_core::Error::AssociativityViolation { .. }
                | grady_core::Error::TorsionViolation { .. } => "/table",
                grady_core::Error::IdentityViolation(_) => "/one",
                _ => "/",
            };
            let message = match e {
                grady_core::Error::HomogeneityViolation { i, j } => {
                    format!("{e} ({} · {})", names[i], names[j])
                }
                grady_core::Error::AssociativityViolation { i, j, k } => {
                    format!("{e} ({}, {}, {})", names[i], names[j], names[k])
                }
                _ => e.to_string(),
            };
            self.err(at, message)
        })
    }

    fn leavitt(&self, m: &Map<String, Value>) -> Result<LeavittPathAlgebra> {
        let group = self.group(self.field(m, "group", "")?, "/group")?;
        let coeff = self.coeff(self.field(m, "coeff", "")?, "/coeff")?;
        let vertices = self.names(self.field(m, "vertices", "")?, "/vertices")?;
        let mut edges = Vec::new();
        for (k, entry) in self.arr(self.field(m, "edges", "")?, "/edges")?.iter().enumerate() {
            let at = format!("/edges/{k}");
            let e = self.obj(entry, &at)?;
            let name = self.str(self.field(e, "id", &at)?, &format!("{at}/id"))?.to_string();
            let src = self.index(self.field(e, "src", &at)?, &vertices, &format!("{at}/src"))?;
            let dst = self.index(self.field(e, "dst", &at)?, &vertices, &format!("{at}/dst"))?;
            let weight = self.usize(self.field(e, "weight", &at)?, &format!("{at}/weight"))?;
            if weight >= group.order() {
                return Err(self.err(&format!("{at}/weight"), format!("group element {weight} out of range")));
            }
            edges.push(Edge { name, src, dst, weight });
        }
        self.core("/edges", LeavittPathAlgebra::new(coeff, group, vertices, edges))
    }

    fn fixture(&self, m: &Map<String, Value>) -> Result<LoadedRing> {
        let name = self.str(self.field(m, "name", "")?, "/name")?;
        let coeff = |default: u32| -> Result<CoeffRing> {
            match m.get("coeff") {
                Some(v) => self.coeff(v, "/coeff"),
                None => self.core("/coeff", CoeffRing::zn(default)),
            }
        };
        let group = |default: usize| -> Result<FiniteGroup> {
            match m.get("group") {
                Some(v) => self.group(v, "/group"),
                None => self.core("/group", cyclic_group(default)),
            }
        };
        let fixed = |keys: &[&str]| -> Result<()> {
            match keys.iter().find(|k| m.contains_key(**k)) {
                Some(k) => Err(self.err(&format!("/{k}"), format!("fixture {name:?} takes no {k:?} parameter"))),
                None => Ok(()),
            }
        };
        Ok(match name {
            "dade6" => {
                fixed(&["group", "coeff"])?;
                LoadedRing::Sc(dade6().into_ring())
            }
            "square-zero" => {
                fixed(&["group", "coeff"])?;
                LoadedRing::Sc(square_zero_fixture())
            }
            "matrix-z3" => {
                fixed(&["group", "coeff"])?;
                LoadedRing::Sc(offdiagonal_z3_fixture())
            }
            "lpa-z4" => {
                fixed(&["group"])?;
                LoadedRing::Lpa(lpa_z4(&coeff(2)?))
            }
            "lpa-z8" => {
                fixed(&["group"])?;
                LoadedRing::Lpa(lpa_z8(&coeff(2)?))
            }
            "group-ring" => LoadedRing::Sc(self.core("/", group_ring_fixture(&coeff(2)?, &group(2)?))?),
            "trivial" => LoadedRing::Sc(self.core("/", trivial_fixture(&coeff(6)?, &group(2)?))?),
            other => {
                return Err(self
                    .err("/name", format!("unknown fixture {other:?}; expected one of {}", FIXTURE_NAMES.join(", "))))
            }
        })
    }

    /// A module over `ring`; actions name ring basis elements by index or name.
    pub fn module(&self, ring: &StructureConstantRing) -> Result<ModuleSpec> {
        let m = self.obj(&self.root, "")?;
        if self.kind()? != "module" {
            return Err(self.err("/kind", "expected a module file (kind \"module\")"));
        }
        let coeff = ring.coeff();
        let names = self.names(self.field(m, "basis", "")?, "/basis")?;
        let degrees = self.degrees(self.field(m, "degrees", "")?, "/degrees", names.len(), ring.group())?;
        let orders = self.orders(m, coeff, names.len())?;
        let mut action = Vec::new();
        for (k, entry) in self.arr(self.field(m, "action", "")?, "/action")?.iter().enumerate() {
            let at = format!("/action/{k}");
            let e = self.obj(entry, &at)?;
            let i = self.index(self.field(e, "i", &at)?, ring.names(), &format!("{at}/i"))?;
            let j = self.index(self.field(e, "j", &at)?, &names, &format!("{at}/j"))?;
            let value = self.sparse(coeff, &names, self.field(e, "value", &at)?, &format!("{at}/value"))?;
            action.push((i, j, value));
        }
        Ok(ModuleSpec { names, degrees, orders, action })
    }
}
