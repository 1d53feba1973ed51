//! Degree reachability: which group degrees are realised by paths between
//! two vertices, and what that says about the homogeneous components.

use std::collections::{BTreeSet, VecDeque};

use crate::group::{FiniteGroup, GroupElem};

use super::{Edge, LeavittPathAlgebra, Monomial, Path};

/// `P(v, w)`: the set of weights of paths from v to w.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDegreeTable {
    n: usize,
    order: usize,
    bits: Vec<bool>,
}

impl PathDegreeTable {
    /// Least fixpoint of e ∈ P(v,v) and w(f)∘P(r(f),w) ⊆ P(s(f),w).
    pub fn compute(group: &FiniteGroup, n: usize, edges: &[Edge]) -> Self {
        let order = group.order();
        let mut t = Self { n, order, bits: vec![false; n * n * order] };
        for v in 0..n {
            let i = t.slot(v, v, group.identity());
            t.bits[i] = true;
        }
        let mut changed = true;
        while changed {
            changed = false;
            for e in edges {
                for w in 0..n {
                    for d in 0..order {
                        if t.bits[t.slot(e.dst, w, d)] {
                            let i = t.slot(e.src, w, group.op(e.weight, d));
                            if !t.bits[i] {
                                t.bits[i] = true;
                                changed = true;
                            }
                        }
                    }
                }
            }
        }
        t
    }

    fn slot(&self, v: usize, w: usize, d: GroupElem) -> usize {
        (v * self.n + w) * self.order + d
    }

    pub fn contains(&self, v: usize, w: usize, d: GroupElem) -> bool {
        self.bits[self.slot(v, w, d)]
    }

    pub fn degrees(&self, v: usize, w: usize) -> BTreeSet<GroupElem> {
        (0..self.order).filter(|&d| self.contains(v, w, d)).collect()
    }

    /// Weights of all paths ending at w.
    pub fn incoming(&self, w: usize) -> BTreeSet<GroupElem> {
        (0..self.n).flat_map(|u| self.degrees(u, w)).collect()
    }
}

impl LeavittPathAlgebra {
    /// Vertices that are the source of some monomial of degree g.
    pub fn component_support(&self, g: GroupElem) -> BTreeSet<usize> {
        let grp = self.group();
        let t = self.path_degrees();
        let n = self.vertex_count();
        let incoming: Vec<BTreeSet<GroupElem>> = (0..n).map(|w| t.incoming(w)).collect();
        (0..n)
            .filter(|&v| {
                (0..n).any(|w| {
                    t.degrees(v, w).iter().any(|&d1| incoming[w].iter().any(|&d2| grp.op(d1, grp.inv(d2)) == g))
                })
            })
            .collect()
    }

    /// Group elements with a nonzero component.
    pub fn support(&self) -> BTreeSet<GroupElem> {
        self.group().elements().filter(|&g| !self.component_support(g).is_empty()).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.longest_path().is_some()
    }

    /// Length of the longest path, or `None` when the graph has a cycle.
    pub fn longest_path(&self) -> Option<usize> {
        let n = self.vertex_count();
        // Kahn's algorithm on out-degrees processed from sinks upward.
        let mut remaining: Vec<usize> = (0..n).map(|v| self.out_edges(v).len()).collect();
        let mut into: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in self.edges() {
            into[e.dst].push(e.src);
        }
        let mut depth = vec![0usize; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| remaining[v] == 0).collect();
        let mut seen = 0;
        while let Some(w) = queue.pop_front() {
            seen += 1;
            for &u in &into[w] {
                depth[u] = depth[u].max(depth[w] + 1);
                remaining[u] -= 1;
                if remaining[u] == 0 {
                    queue.push_back(u);
                }
            }
        }
        (seen == n).then(|| depth.into_iter().max().unwrap_or(0))
    }

    /// All paths of length at most `max_len`, shortest first.
    pub fn paths_up_to(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertex_count()).map(Path::empty).collect();
        let mut layer = out.clone();
        for _ in 0..max_len {
            let next: Vec<Path> = layer
                .iter()
                .flat_map(|p| self.out_edges(p.end).iter().map(move |&e| p.concat(&self.edge_path(e))))
                .collect();
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Canonical monomials of degree g with |α| + |β| ≤ `len_bound`. The
    /// list is complete when g has empty support, or the graph is acyclic
    /// and the bound covers two longest paths.
    pub fn monomials_of_degree(&self, g: GroupElem, len_bound: usize) -> (Vec<Monomial>, bool) {
        if self.component_support(g).is_empty() {
            return (Vec::new(), true);
        }
        let complete = self.longest_path().is_some_and(|l| len_bound >= 2 * l);
        let paths = self.paths_up_to(len_bound);
        let mut by_end: Vec<Vec<&Path>> = vec![Vec::new(); self.vertex_count()];
        for p in &paths {
            by_end[p.end].push(p);
        }
        let mut out = Vec::new();
        for ends in &by_end {
            for &a in ends {
                for &b in ends {
                    if a.len() + b.len() > len_bound {
                        continue;
                    }
                    let m = Monomial { alpha: a.clone(), beta: b.clone() };
                    if self.is_canonical(&m) && self.degree_of(&m) == g {
                        out.push(m);
                    }
                }
            }
        }
        out.sort();
        (out, complete)
    }

    /// Shortest path ending at `w` with weight `d`, avoiding `avoid_last`
    /// as final edge; ties go to the lexicographically least edge sequence.
    pub fn shortest_path_into(&self, w: usize, d: GroupElem, avoid_last: Option<usize>) -> Option<Path> {
        let grp = self.group();
        let n = self.vertex_count();
        let mut into: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, e) in self.edges().iter().enumerate() {
            into[e.dst].push(i);
        }
        for list in &mut into {
            list.sort_by(|&a, &b| self.edges()[a].name.cmp(&self.edges()[b].name));
        }
        // Backward BFS over (start vertex, weight) with the path kept explicitly.
        let mut seen = vec![false; n * grp.order()];
        let mut queue: VecDeque<Path> = VecDeque::from([Path::empty(w)]);
        seen[w * grp.order() + grp.identity()] = true;
        let mut first = true;
        while let Some(p) = queue.pop_front() {
            if self.path_weight(&p) == d && (p.is_empty() || p.edges.last().copied() != avoid_last) {
                return Some(p);
            }
            let weight = self.path_weight(&p);
            for &e in &into[p.start] {
                if first && Some(e) == avoid_last {
                    continue;
                }
                let q = self.edge_path(e).concat(&p);
                let nw = grp.op(self.edges()[e].weight, weight);
                let key = q.start * grp.order() + nw;
                if !seen[key] {
                    seen[key] = true;
                    queue.push_back(q);
                }
            }
            first = false;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::super::{lpa_z4, lpa_z8};
    use super::*;
    use crate::coeff::CoeffRing;
    use crate::group::cyclic_group;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    fn z2() -> CoeffRing {
        CoeffRing::zn(2).unwrap()
    }

    #[test]
    fn single_edge_table() {
        let alg = LeavittPathAlgebra::new(
            z2(),
            cyclic_group(4).unwrap(),
            vec!["v".into(), "w".into()],
            vec![Edge { name: "f".into(), src: 0, dst: 1, weight: 2 }],
        )
        .unwrap();
        let t = alg.path_degrees();
        assert_eq!(t.degrees(0, 1), set(&[2]));
        assert_eq!(t.degrees(0, 0), set(&[0]));
        assert!(t.degrees(1, 0).is_empty());
    }

    #[test]
    fn cycle_table() {
        let alg = lpa_z8(&z2());
        let t = alg.path_degrees();
        assert_eq!(t.degrees(1, 1), set(&[0, 4]));
        assert_eq!(t.degrees(0, 0), set(&[0, 4]));
        for w in 0..3 {
            assert!(t.degrees(3, w).is_empty());
        }
    }

    #[test]
    fn supports() {
        let z4 = lpa_z4(&z2());
        assert_eq!(z4.component_support(2), set(&[0, 1, 2]));
        assert_eq!(z4.component_support(0), set(&[0, 1, 2, 3]));
        assert!(z4.component_support(1).is_empty());
        let z8 = lpa_z8(&z2());
        assert_eq!(z8.component_support(2), set(&[1, 2]));
        assert_eq!(z8.component_support(4), set(&[0, 1, 2]));
        assert!(z8.component_support(1).is_empty());
        assert_eq!(z8.support(), set(&[0, 2, 4, 6]));
    }

    #[test]
    fn monomial_lists() {
        let z4 = lpa_z4(&z2());
        let (ms, complete) = z4.monomials_of_degree(2, 4);
        let names: BTreeSet<String> = ms.iter().map(|m| z4.render_monomial(m)).collect();
        assert_eq!(names, ["f", "g", "f*", "g*"].iter().map(|s| s.to_string()).collect());
        assert!(complete);
        let (ms0, _) = z4.monomials_of_degree(0, 4);
        let names0: BTreeSet<String> = ms0.iter().map(|m| z4.render_monomial(m)).collect();
        assert!(names0.contains("fg*") && names0.contains("gf*"));
        // f f* is not canonical (f is special at v1).
        assert!(!names0.contains("ff*"));

        let z8 = lpa_z8(&z2());
        let (ms, complete) = z8.monomials_of_degree(2, 5);
        let names: Vec<String> = ms.iter().filter(|m| m.beta.is_empty()).map(|m| z8.render_monomial(m)).collect();
        assert!(names.contains(&"f".to_string()) && names.contains(&"fgfgf".to_string()));
        assert!(!complete);
        let (ms, complete) = z8.monomials_of_degree(1, 5);
        assert!(ms.is_empty() && complete);
    }

    #[test]
    fn acyclicity() {
        assert_eq!(lpa_z4(&z2()).longest_path(), Some(1));
        assert_eq!(lpa_z8(&z2()).longest_path(), None);
    }

    #[test]
    fn shortest_incoming_paths() {
        let z8 = lpa_z8(&z2());
        let p = z8.shortest_path_into(1, 4, None).unwrap();
        assert_eq!(z8.render_monomial(&Monomial { alpha: p, beta: Path::empty(1) }), "fg");
        let z4 = lpa_z4(&z2());
        let p = z4.shortest_path_into(1, 2, None).unwrap();
        assert_eq!(p.edges, vec![z4.edge_id("f").unwrap()]);
        let p = z4.shortest_path_into(1, 2, Some(z4.edge_id("f").unwrap())).unwrap();
        assert_eq!(p.edges, vec![z4.edge_id("g").unwrap()]);
        assert!(z4.shortest_path_into(3, 2, None).is_none());
    }
}
