//! Factorizations v = Σ mᵢmᵢ* with every mᵢ of a prescribed degree.
//!
//! The leaves α of any Cuntz–Krieger expansion tree rooted at v satisfy
//! Σ αα* = v. A leaf can be closed off as αβ'* whenever some path β' into
//! r(α) has weight g⁻¹∘w(α), because (αβ'*)(αβ'*)* = αα*. The search grows
//! such a tree by iterative deepening on the total word length.

use std::collections::HashMap;
use std::fmt;

use crate::group::GroupElem;

use super::{LeavittPathAlgebra, Monomial, Path};

/// No factorization was found within the bound. This does not prove that
/// none exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ck2Unverified {
    pub depth_bound: usize,
}

impl fmt::Display for Ck2Unverified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no expansion found up to word length {}", self.depth_bound)
    }
}

/// Leaf of a partial solution: the path below the current node and the
/// ghost part closing it.
type Leaves = Vec<(Vec<usize>, Path)>;

struct Search<'a> {
    alg: &'a LeavittPathAlgebra,
    g: GroupElem,
    memo: HashMap<(usize, GroupElem, usize, Option<usize>), Option<Leaves>>,
}

impl Search<'_> {
    /// Solves the subtree at vertex `r` reached by a path of weight `w`
    /// ending in `last`, with `budget` letters left.
    fn solve(&mut self, r: usize, w: GroupElem, budget: usize, last: Option<usize>) -> Option<Leaves> {
        let key = (r, w, budget, last);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let result = self.solve_uncached(r, w, budget, last);
        self.memo.insert(key, result.clone());
        result
    }

    fn solve_uncached(&mut self, r: usize, w: GroupElem, budget: usize, last: Option<usize>) -> Option<Leaves> {
        let alg = self.alg;
        let grp = alg.group();
        if w == self.g {
            return Some(vec![(Vec::new(), Path::empty(r))]);
        }
        if budget > 0 && alg.is_regular(r) {
            let mut edges: Vec<usize> = alg.out_edges(r).to_vec();
            edges.sort_by(|&a, &b| alg.edges()[a].name.cmp(&alg.edges()[b].name));
            let mut leaves = Vec::new();
            let mut ok = true;
            for e in edges {
                let edge = &alg.edges()[e];
                match self.solve(edge.dst, grp.op(w, edge.weight), budget - 1, Some(e)) {
                    Some(sub) => leaves.extend(sub.into_iter().map(|(mut p, b)| {
                        p.insert(0, e);
                        (p, b)
                    })),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return Some(leaves);
            }
        }
        // Close off with a ghost path, keeping the word canonical when possible.
        let target = grp.op(grp.inv(self.g), w);
        let special_last = last.filter(|&e| alg.special_edge(alg.edges()[e].src) == Some(e));
        let beta =
            alg.shortest_path_into(r, target, special_last).or_else(|| alg.shortest_path_into(r, target, None))?;
        (beta.len() <= budget).then(|| vec![(Vec::new(), beta)])
    }
}

impl LeavittPathAlgebra {
    /// Default bound on word length for expansion searches: 2·|E⁰|·|G|.
    pub fn default_depth_bound(&self) -> usize {
        2 * self.vertex_count() * self.group().order()
    }

    /// Monomials m₁,…,m_k of degree g with source v and Σ mᵢmᵢ* = v.
    pub fn ck2_factorization(
        &self,
        v: usize,
        g: GroupElem,
        depth_bound: usize,
    ) -> std::result::Result<Vec<Monomial>, Ck2Unverified> {
        for budget in 0..=depth_bound {
            let mut search = Search { alg: self, g, memo: HashMap::new() };
            if let Some(leaves) = search.solve(v, self.group().identity(), budget, None) {
                let ms: Vec<Monomial> = leaves
                    .into_iter()
                    .map(|(edges, beta)| {
                        let alpha = edges.iter().fold(Path::empty(v), |p, &e| p.concat(&self.edge_path(e)));
                        Monomial { alpha, beta }
                    })
                    .collect();
                if self.verify_ck2(v, g, &ms) {
                    return Ok(ms);
                }
            }
        }
        Err(Ck2Unverified { depth_bound })
    }

    /// Checks Σ mᵢmᵢ* = v, deg mᵢ = g and s(mᵢ) = v.
    pub fn verify_ck2(&self, v: usize, g: GroupElem, ms: &[Monomial]) -> bool {
        let mut sum = self.zero();
        for m in ms {
            if self.degree_of(m) != g || m.source() != v {
                return false;
            }
            let e = self.monomial(m.clone());
            sum = self.add(&sum, &self.mul(&e, &self.star(&e)));
        }
        sum == self.vertex_sum([v])
    }
}

#[cfg(test)]
mod tests {
    use super::super::{lpa_z4, lpa_z8};
    use crate::coeff::CoeffRing;

    fn z2() -> CoeffRing {
        CoeffRing::zn(2).unwrap()
    }

    fn rendered(alg: &super::LeavittPathAlgebra, v: usize, g: usize) -> Vec<String> {
        let ms = alg.ck2_factorization(v, g, alg.default_depth_bound()).unwrap();
        assert!(alg.verify_ck2(v, g, &ms));
        ms.iter().map(|m| alg.render_monomial(m)).collect()
    }

    #[test]
    fn z8_factorizations() {
        let alg = lpa_z8(&z2());
        assert_eq!(rendered(&alg, 1, 2), vec!["f"]);
        assert_eq!(rendered(&alg, 2, 2), vec!["g"]);
        assert_eq!(rendered(&alg, 0, 4), vec!["h"]);
        assert_eq!(rendered(&alg, 1, 4), vec!["fg"]);
        assert_eq!(rendered(&alg, 1, 6), vec!["g*"]);
        assert_eq!(rendered(&alg, 0, 0), vec!["v1"]);
    }

    #[test]
    fn z4_factorizations() {
        let alg = lpa_z4(&z2());
        // v2 is a sink reached by f and g of degree 2: v2 = f*f.
        assert_eq!(rendered(&alg, 1, 2), vec!["f*"]);
        assert_eq!(rendered(&alg, 0, 2), vec!["f"]);
        assert_eq!(rendered(&alg, 2, 2), vec!["g"]);
    }

    #[test]
    fn unsupported_vertex_is_unverified() {
        let alg = lpa_z8(&z2());
        let err = alg.ck2_factorization(3, 2, 6).unwrap_err();
        assert_eq!(err.depth_bound, 6);
        assert!(alg.ck2_factorization(1, 1, 10).is_err());
    }
}
