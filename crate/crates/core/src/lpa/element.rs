//! Paths, monomials αβ* and their canonical-form sums.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::coeff::Scalar;

/// A finite path, possibly empty at a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub edges: Vec<usize>,
}

impl Path {
    pub fn empty(v: usize) -> Self {
        Self { start: v, end: v, edges: Vec::new() }
    }

    /// Word length; vertices have length 0, so there is no `is_empty`.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.edges.last().copied()
    }

    /// `self` followed by `rest`; `rest` must start where `self` ends.
    pub fn concat(&self, rest: &Path) -> Path {
        debug_assert_eq!(self.end, rest.start);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&rest.edges);
        Path { start: self.start, end: rest.end, edges }
    }

    /// If `self = prefix · rest`, returns `rest`.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        if self.start != prefix.start || !self.edges.starts_with(&prefix.edges) {
            return None;
        }
        Some(Path { start: prefix.end, end: self.end, edges: self.edges[prefix.len()..].to_vec() })
    }

    fn key(&self) -> (usize, &[usize], usize) {
        (self.start, &self.edges, self.end)
    }
}

/// The word αβ*, with r(α) = r(β). The vertex v is α = β = v.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub alpha: Path,
    pub beta: Path,
}

#[allow(clippy::len_without_is_empty)]
impl Monomial {
    pub fn vertex(v: usize) -> Self {
        Self { alpha: Path::empty(v), beta: Path::empty(v) }
    }

    /// Source of the real part; the monomial is fixed by left multiplication
    /// with this vertex.
    pub fn source(&self) -> usize {
        self.alpha.start
    }

    /// Source of the ghost part; the monomial is fixed by right
    /// multiplication with this vertex.
    pub fn target(&self) -> usize {
        self.beta.start
    }

    pub fn len(&self) -> usize {
        self.alpha.len() + self.beta.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.alpha.is_empty() && self.beta.is_empty()
    }

    /// (αβ*)* = βα*.
    pub fn star(&self) -> Monomial {
        Monomial { alpha: self.beta.clone(), beta: self.alpha.clone() }
    }

    /// Word product of basis monomials before canonical rewriting:
    /// (αβ*)(γδ*) is αγ'δ* when γ = βγ', α(δβ')* when β = γβ', else 0.
    pub fn compose(&self, other: &Monomial) -> Option<Monomial> {
        if let Some(rest) = other.alpha.strip_prefix(&self.beta) {
            return Some(Monomial { alpha: self.alpha.concat(&rest), beta: other.beta.clone() });
        }
        if let Some(rest) = self.beta.strip_prefix(&other.alpha) {
            return Some(Monomial { alpha: self.alpha.clone(), beta: other.beta.concat(&rest) });
        }
        None
    }
}

impl Ord for Monomial {
    /// Shorter words first, then lexicographic; vertices come first.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len(), self.alpha.key(), self.beta.key()).cmp(&(other.len(), other.alpha.key(), other.beta.key()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite sum of canonical monomials with nonzero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LpaElement {
    pub(crate) terms: BTreeMap<Monomial, Scalar>,
}

impl LpaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(start: usize, end: usize, edges: &[usize]) -> Path {
        Path { start, end, edges: edges.to_vec() }
    }

    #[test]
    fn prefix_stripping() {
        let p = path(0, 2, &[0, 1]);
        assert_eq!(p.strip_prefix(&path(0, 1, &[0])), Some(path(1, 2, &[1])));
        assert_eq!(p.strip_prefix(&Path::empty(0)), Some(p.clone()));
        assert_eq!(p.strip_prefix(&Path::empty(1)), None);
        assert_eq!(p.strip_prefix(&path(0, 1, &[2])), None);
    }

    #[test]
    fn compose_cases() {
        // Edges: 0 = f: 0→1, 1 = g: 2→1.
        let f = Monomial { alpha: path(0, 1, &[0]), beta: Path::empty(1) };
        let g_star = Monomial { alpha: Path::empty(1), beta: path(2, 1, &[1]) };
        let f_star = f.star();
        let fg = f.compose(&g_star).unwrap();
        assert_eq!(fg, Monomial { alpha: path(0, 1, &[0]), beta: path(2, 1, &[1]) });
        // f* f = v1
        assert_eq!(f_star.compose(&f), Some(Monomial::vertex(1)));
        // g* f: g*·f needs s(g) = s(f)
        assert_eq!(g_star.star().star().compose(&f), None);
        // f f* keeps both parts.
        assert_eq!(f.compose(&f_star), Some(Monomial { alpha: path(0, 1, &[0]), beta: path(0, 1, &[0]) }));
    }

    #[test]
    fn ordering_puts_vertices_first() {
        let f = Monomial { alpha: path(0, 1, &[0]), beta: Path::empty(1) };
        assert!(Monomial::vertex(3) < f);
        assert!(Monomial::vertex(0) < Monomial::vertex(1));
    }
}
