//! Leavitt path algebras L_R(E) of finite graphs with a standard grading.
//!
//! Elements are kept in canonical form: every regular vertex v has a
//! special edge σ(v) (least edge name among its out-edges) and no stored
//! monomial αβ* has both α and β ending in the same special edge. The rule
//! σσ* = v − Σ_{f≠σ} ff* together with f*f' = δ r(f) is terminating and
//! its normal forms are a basis.

pub mod ck2;
pub mod element;
pub mod reach;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::coeff::{CoeffRing, Scalar};
use crate::error::{Error, Result};
use crate::group::{cyclic_group, FiniteGroup, GroupElem};

pub use ck2::Ck2Unverified;
pub use element::{LpaElement, Monomial, Path};
pub use reach::PathDegreeTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub src: usize,
    pub dst: usize,
    pub weight: GroupElem,
}

/// A generator of the algebra as written in a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    Vertex(usize),
    Edge(usize),
    Ghost(usize),
}

#[derive(Debug, Clone)]
pub struct LeavittPathAlgebra {
    coeff: CoeffRing,
    group: FiniteGroup,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    out: Vec<Vec<usize>>,
    special: Vec<Option<usize>>,
    degrees: PathDegreeTable,
}

impl LeavittPathAlgebra {
    pub fn new(coeff: CoeffRing, group: FiniteGroup, vertices: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Invalid("graph has no vertices".into()));
        }
        let mut names = BTreeSet::new();
        for name in vertices.iter().chain(edges.iter().map(|e| &e.name)) {
            if name.is_empty() || name.contains(char::is_whitespace) || name.ends_with('*') {
                return Err(Error::Invalid(format!("unusable vertex or edge name {name:?}")));
            }
            if !names.insert(name.as_str()) {
                return Err(Error::Invalid(format!("duplicate vertex or edge name {name:?}")));
            }
        }
        for e in &edges {
            if e.src >= vertices.len() || e.dst >= vertices.len() {
                return Err(Error::Invalid(format!("edge {} references a missing vertex", e.name)));
            }
            if e.weight >= group.order() {
                return Err(Error::Invalid(format!("edge {} has weight outside the group", e.name)));
            }
        }
        let mut out = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            out[e.src].push(i);
        }
        let special =
            out.iter().map(|es| es.iter().copied().min_by(|&a, &b| edges[a].name.cmp(&edges[b].name))).collect();
        let degrees = PathDegreeTable::compute(&group, vertices.len(), &edges);
        Ok(Self { coeff, group, vertices, edges, out, special, degrees })
    }

    pub fn coeff(&self) -> &CoeffRing {
        &self.coeff
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// A vertex is regular when it emits at least one edge.
    pub fn is_regular(&self, v: usize) -> bool {
        !self.out[v].is_empty()
    }

    pub fn special_edge(&self, v: usize) -> Option<usize> {
        self.special[v]
    }

    pub fn path_degrees(&self) -> &PathDegreeTable {
        &self.degrees
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge_id(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    /// Weight of a path: the ordered product of its edge weights.
    pub fn path_weight(&self, p: &Path) -> GroupElem {
        p.edges.iter().fold(self.group.identity(), |acc, &e| self.group.op(acc, self.edges[e].weight))
    }

    pub fn edge_path(&self, e: usize) -> Path {
        let edge = &self.edges[e];
        Path { start: edge.src, end: edge.dst, edges: vec![e] }
    }

    /// w(α)∘w(β)⁻¹.
    pub fn degree_of(&self, m: &Monomial) -> GroupElem {
        self.group.op(self.path_weight(&m.alpha), self.group.inv(self.path_weight(&m.beta)))
    }

    /// True when αβ* is a basis word (not both ending in the same special edge).
    pub fn is_canonical(&self, m: &Monomial) -> bool {
        match (m.alpha.last(), m.beta.last()) {
            (Some(a), Some(b)) => a != b || self.special[self.edges[a].src] != Some(a),
            _ => true,
        }
    }

    // ---- elements ----

    pub fn zero(&self) -> LpaElement {
        LpaElement::zero()
    }

    /// 1 = Σ v over all vertices.
    pub fn one(&self) -> LpaElement {
        self.vertex_sum(0..self.vertex_count())
    }

    pub fn vertex_sum(&self, vs: impl IntoIterator<Item = usize>) -> LpaElement {
        let mut out = LpaElement::zero();
        for v in vs {
            self.add_term(&mut out, Monomial::vertex(v), &self.coeff.one());
        }
        out
    }

    pub fn monomial(&self, m: Monomial) -> LpaElement {
        let mut out = LpaElement::zero();
        self.add_term(&mut out, m, &self.coeff.one());
        out
    }

    pub fn generator(&self, letter: Letter) -> LpaElement {
        let m = match letter {
            Letter::Vertex(v) => Monomial::vertex(v),
            Letter::Edge(e) => Monomial { alpha: self.edge_path(e), beta: Path::empty(self.edges[e].dst) },
            Letter::Ghost(e) => Monomial { alpha: Path::empty(self.edges[e].dst), beta: self.edge_path(e) },
        };
        self.monomial(m)
    }

    /// Product of the letters of a word; the empty word is 1.
    pub fn word(&self, letters: &[Letter]) -> LpaElement {
        letters.iter().fold(self.one(), |acc, &l| self.mul(&acc, &self.generator(l)))
    }

    /// Canonical form of a formal sum of words.
    pub fn normal_form(&self, raw: &[(Scalar, Vec<Letter>)]) -> LpaElement {
        raw.iter().fold(self.zero(), |acc, (c, w)| self.add(&acc, &self.scale(c, &self.word(w))))
    }

    /// Parses whitespace-separated letters: vertex names, edge names and
    /// ghost edges written `name*`.
    pub fn letters(&self, text: &str) -> Result<Vec<Letter>> {
        text.split_whitespace()
            .map(|tok| {
                if let Some(name) = tok.strip_suffix('*') {
                    self.edge_id(name).map(Letter::Ghost)
                } else {
                    self.vertex_id(tok).map(Letter::Vertex).or_else(|| self.edge_id(tok).map(Letter::Edge))
                }
                .ok_or_else(|| Error::Invalid(format!("unknown letter {tok:?}")))
            })
            .collect()
    }

    /// Parses a `+`-separated sum of words, e.g. `"v1 + f g*"`.
    pub fn parse(&self, text: &str) -> Result<LpaElement> {
        let mut out = self.zero();
        for term in text.split('+').map(str::trim).filter(|t| !t.is_empty()) {
            out = self.add(&out, &self.word(&self.letters(term)?));
        }
        Ok(out)
    }

    /// Adds `c·m` to `acc`, rewriting a trailing special pair
    /// ασ(βσ)* into αβ* − Σ_{f≠σ} αf(βf)*.
    fn add_term(&self, acc: &mut LpaElement, m: Monomial, c: &Scalar) {
        if self.coeff.is_zero(c) {
            return;
        }
        if !self.is_canonical(&m) {
            let e = m.alpha.last().expect("non-canonical words end in edges");
            let v = self.edges[e].src;
            let mut alpha = m.alpha;
            let mut beta = m.beta;
            alpha.edges.pop();
            beta.edges.pop();
            alpha.end = v;
            beta.end = v;
            for &f in self.out[v].iter().filter(|&&f| f != e) {
                let fp = self.edge_path(f);
                let term = Monomial { alpha: alpha.concat(&fp), beta: beta.concat(&fp) };
                self.add_term(acc, term, &self.coeff.neg(c));
            }
            self.add_term(acc, Monomial { alpha, beta }, c);
            return;
        }
        match acc.terms.get_mut(&m) {
            Some(d) => {
                *d = self.coeff.add(d, c);
                if self.coeff.is_zero(d) {
                    acc.terms.remove(&m);
                }
            }
            None => {
                acc.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, a: &LpaElement, b: &LpaElement) -> LpaElement {
        let mut out = a.clone();
        for (m, c) in &b.terms {
            self.add_term(&mut out, m.clone(), c);
        }
        out
    }

    pub fn neg(&self, a: &LpaElement) -> LpaElement {
        LpaElement { terms: a.terms.iter().map(|(m, c)| (m.clone(), self.coeff.neg(c))).collect() }
    }

    pub fn sub(&self, a: &LpaElement, b: &LpaElement) -> LpaElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, c: &Scalar, a: &LpaElement) -> LpaElement {
        let mut out = LpaElement::zero();
        for (m, d) in &a.terms {
            self.add_term(&mut out, m.clone(), &self.coeff.mul(c, d));
        }
        out
    }

    pub fn mul(&self, a: &LpaElement, b: &LpaElement) -> LpaElement {
        let mut out = LpaElement::zero();
        for (m1, c1) in &a.terms {
            for (m2, c2) in &b.terms {
                if let Some(m) = m1.compose(m2) {
                    self.add_term(&mut out, m, &self.coeff.mul(c1, c2));
                }
            }
        }
        out
    }

    /// Canonical form of the product of two basis monomials.
    pub fn monomial_multiply(&self, m1: &Monomial, m2: &Monomial) -> LpaElement {
        let mut out = LpaElement::zero();
        if let Some(m) = m1.compose(m2) {
            self.add_term(&mut out, m, &self.coeff.one());
        }
        out
    }

    /// The involution fixing coefficients: (Σ c αβ*)* = Σ c βα*.
    pub fn star(&self, a: &LpaElement) -> LpaElement {
        let mut out = LpaElement::zero();
        for (m, c) in &a.terms {
            self.add_term(&mut out, m.star(), c);
        }
        out
    }

    /// Degree of a nonzero homogeneous element; `None` for zero or mixed.
    pub fn element_degree(&self, a: &LpaElement) -> Option<GroupElem> {
        let mut degs = a.terms.keys().map(|m| self.degree_of(m));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, a: &LpaElement, g: GroupElem) -> bool {
        a.terms.keys().all(|m| self.degree_of(m) == g)
    }

    /// Projection onto the degree-g component.
    pub fn homogeneous_part(&self, a: &LpaElement, g: GroupElem) -> LpaElement {
        LpaElement {
            terms: a
                .terms
                .iter()
                .filter(|(m, _)| self.degree_of(m) == g)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// When `a` is a sum of distinct vertices with unit coefficient 1,
    /// returns those vertices.
    pub fn as_vertex_set(&self, a: &LpaElement) -> Option<BTreeSet<usize>> {
        a.terms.iter().map(|(m, c)| (m.is_vertex() && *c == self.coeff.one()).then_some(m.source())).collect()
    }

    // ---- rendering ----

    fn path_text(&self, p: &Path, ghost: bool) -> Vec<String> {
        let mut names: Vec<String> = p.edges.iter().map(|&e| self.edges[e].name.clone()).collect();
        if ghost {
            names.reverse();
            names.iter_mut().for_each(|n| n.push('*'));
        }
        names
    }

    fn joiner(&self) -> &'static str {
        if self.edges.iter().all(|e| e.name.chars().count() == 1) {
            ""
        } else {
            " "
        }
    }

    /// `v1`, `f`, `fg*`, `g*f*`.
    pub fn render_monomial(&self, m: &Monomial) -> String {
        if m.is_vertex() {
            return self.vertices[m.source()].clone();
        }
        let mut parts = self.path_text(&m.alpha, false);
        parts.extend(self.path_text(&m.beta, true));
        parts.join(self.joiner())
    }

    pub fn render(&self, a: &LpaElement) -> String {
        if a.is_zero() {
            return "0".into();
        }
        a.terms
            .iter()
            .map(|(m, c)| {
                if *c == self.coeff.one() {
                    self.render_monomial(m)
                } else {
                    format!("{c}·{}", self.render_monomial(m))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Monomial keyed map of an element, rendered.
    pub fn render_terms(&self, a: &LpaElement) -> BTreeMap<String, Scalar> {
        a.terms.iter().map(|(m, c)| (self.render_monomial(m), c.clone())).collect()
    }
}

impl fmt::Display for LeavittPathAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Leavitt path algebra of a graph with {} vertices and {} edges over {}, graded by a group of order {}",
            self.vertices.len(),
            self.edges.len(),
            self.coeff,
            self.group.order()
        )
    }
}

fn edge(name: &str, src: usize, dst: usize, weight: GroupElem) -> Edge {
    Edge { name: name.into(), src, dst, weight }
}

fn vertex_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

/// v1 →f→ v2 ←g← v3 and an isolated v4, ℤ₄-graded with f and g in degree 2.
pub fn lpa_z4(coeff: &CoeffRing) -> LeavittPathAlgebra {
    LeavittPathAlgebra::new(
        coeff.clone(),
        cyclic_group(4).expect("ℤ₄"),
        vertex_names(4),
        vec![edge("f", 0, 1, 2), edge("g", 2, 1, 2)],
    )
    .expect("valid graph")
}

/// A loop h at v1 of degree 4, a 2-cycle v2 →f→ v3 →g→ v2 of degree-2
/// edges and an isolated v4, ℤ₈-graded.
pub fn lpa_z8(coeff: &CoeffRing) -> LeavittPathAlgebra {
    LeavittPathAlgebra::new(
        coeff.clone(),
        cyclic_group(8).expect("ℤ₈"),
        vertex_names(4),
        vec![edge("h", 0, 0, 4), edge("f", 1, 2, 2), edge("g", 2, 1, 2)],
    )
    .expect("valid graph")
}
