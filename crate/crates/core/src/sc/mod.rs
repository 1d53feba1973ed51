//! Structure-constant backend: finite unital G-graded algebras over a
//! coefficient ring, given by a homogeneous basis and a multiplication table.
//!
//! Basis elements may carry torsion: basis element `i` spans R/ann(bᵢ),
//! which is how ideal-constrained matrix entries are modelled exactly.

pub mod closure;
pub mod fixtures;

use std::fmt;

use crate::coeff::{CoeffRing, CoordSpace, Scalar};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElem};
use crate::par;

pub use closure::{ClosureAction, Witness, WitnessedModule, DEFAULT_CLOSURE_CAP};

/// A sparse vector: `(basis index, coefficient)` pairs.
pub type Sparse = Vec<(usize, Scalar)>;

/// Input for [`StructureConstantRing::build`].
#[derive(Debug, Clone)]
pub struct ScRingSpec {
    pub coeff: CoeffRing,
    pub group: FiniteGroup,
    pub names: Vec<String>,
    pub degrees: Vec<GroupElem>,
    /// Additive order of each basis element per component; `None` means free.
    pub orders: Option<Vec<Scalar>>,
    /// Nonzero products `bᵢ·bⱼ`; missing pairs multiply to zero.
    pub table: Vec<(usize, usize, Sparse)>,
    pub one: Sparse,
}

/// An element of a structure-constant ring: flat coordinates in the ring's
/// [`CoordSpace`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScElement(pub Vec<u32>);

impl ScElement {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

#[derive(Debug, Clone)]
pub struct StructureConstantRing {
    coeff: CoeffRing,
    group: FiniteGroup,
    names: Vec<String>,
    degrees: Vec<GroupElem>,
    space: CoordSpace,
    mult: Vec<Vec<Sparse>>,
    one: ScElement,
    by_degree: Vec<Vec<usize>>,
}

impl StructureConstantRing {
    /// Validates the table exhaustively: index ranges, torsion
    /// compatibility, homogeneity, the identity and associativity on every
    /// basis triple.
    pub fn build(spec: ScRingSpec) -> Result<Self> {
        let n = spec.names.len();
        let w = spec.coeff.width();
        if spec.degrees.len() != n {
            return Err(Error::Invalid(format!("{} basis names but {} degrees", n, spec.degrees.len())));
        }
        if let Some(&d) = spec.degrees.iter().find(|&&d| d >= spec.group.order()) {
            return Err(Error::Invalid(format!("degree {d} is not a group element")));
        }
        let space = match &spec.orders {
            Some(orders) if orders.len() != n => {
                return Err(Error::Invalid(format!("{} orders for {} basis elements", orders.len(), n)))
            }
            Some(orders) => CoordSpace::with_orders(&spec.coeff, orders)?,
            None => CoordSpace::free(&spec.coeff, n),
        };
        let check_sparse = |v: &Sparse, what: &str| -> Result<()> {
            for (k, c) in v {
                if *k >= n {
                    return Err(Error::Invalid(format!("{what}: basis index {k} out of range")));
                }
                if c.0.len() != w {
                    return Err(Error::Invalid(format!("{what}: coefficient {c} has the wrong width")));
                }
            }
            Ok(())
        };
        let mut mult = vec![vec![Vec::new(); n]; n];
        for (i, j, v) in &spec.table {
            if *i >= n || *j >= n {
                return Err(Error::Invalid(format!("table entry ({i}, {j}) out of range")));
            }
            check_sparse(v, &format!("table entry ({i}, {j})"))?;
            let reduced: Sparse = v
                .iter()
                .map(|(k, c)| (*k, reduce_scalar(&space, *k, c)))
                .filter(|(_, c)| c.0.iter().any(|&x| x != 0))
                .collect();
            mult[*i][*j] = merge_sparse(&spec.coeff, &space, &mult[*i][*j], &reduced);
        }
        check_sparse(&spec.one, "one")?;
        let mut one = space.zero();
        for (k, c) in &spec.one {
            space.add_coord(&mut one, *k, c);
        }

        let mut by_degree = vec![Vec::new(); spec.group.order()];
        for (i, &d) in spec.degrees.iter().enumerate() {
            by_degree[d].push(i);
        }

        let ring = Self {
            coeff: spec.coeff,
            group: spec.group,
            names: spec.names,
            degrees: spec.degrees,
            space,
            mult,
            one: ScElement(one),
            by_degree,
        };
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<()> {
        let n = self.basis_size();
        let w = self.coeff.width();
        for i in 0..n {
            for j in 0..n {
                let target = self.group.op(self.degrees[i], self.degrees[j]);
                for (k, c) in &self.mult[i][j] {
                    if self.degrees[*k] != target {
                        return Err(Error::HomogeneityViolation { i, j });
                    }
                    // c must be killed by the orders of both factors.
                    let (oi, oj, ok) = (self.space.order(i), self.space.order(j), self.space.order(*k));
                    for t in 0..w {
                        let ck = c.0[t] as u64;
                        if !(oi.0[t] as u64 * ck).is_multiple_of(ok.0[t] as u64)
                            || !(oj.0[t] as u64 * ck).is_multiple_of(ok.0[t] as u64)
                        {
                            return Err(Error::TorsionViolation { i, j, k: *k });
                        }
                    }
                }
            }
        }
        let e = self.group.identity();
        if let Some(k) = self.space.support(&self.one.0).into_iter().find(|&k| self.degrees[k] != e) {
            return Err(Error::IdentityViolation(format!("one has a component on basis {k} of nontrivial degree")));
        }
        for i in 0..n {
            let b = self.basis(i);
            if self.mul(&self.one, &b) != b {
                return Err(Error::IdentityViolation(format!("one is not a left identity on basis {i}")));
            }
            if self.mul(&b, &self.one) != b {
                return Err(Error::IdentityViolation(format!("one is not a right identity on basis {i}")));
            }
        }
        if let Some((i, j, k)) = self.first_non_associative_triple() {
            return Err(Error::AssociativityViolation { i, j, k });
        }
        Ok(())
    }

    fn first_non_associative_triple(&self) -> Option<(usize, usize, usize)> {
        let n = self.basis_size();
        par::find_map_first(n * n, |ij| {
            let (i, j) = (ij / n, ij % n);
            let bij = self.mul(&self.basis(i), &self.basis(j));
            (0..n).find_map(|k| {
                let left = self.mul(&bij, &self.basis(k));
                let right = self.mul(&self.basis(i), &self.mul(&self.basis(j), &self.basis(k)));
                (left != right).then_some((i, j, k))
            })
        })
    }

    pub fn coeff(&self) -> &CoeffRing {
        &self.coeff
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn space(&self) -> &CoordSpace {
        &self.space
    }

    pub fn basis_size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degree(&self, i: usize) -> GroupElem {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[GroupElem] {
        &self.degrees
    }

    /// Orders of the basis elements, one scalar per basis element.
    pub fn orders(&self) -> Vec<Scalar> {
        (0..self.basis_size()).map(|i| self.space.order(i)).collect()
    }

    /// True when some basis element has torsion below the coefficient moduli.
    pub fn has_torsion(&self) -> bool {
        (0..self.basis_size()).any(|i| self.space.order(i).0 != self.coeff.moduli())
    }

    /// Sparse product table, `table()[i][j] = bᵢ·bⱼ`.
    pub fn table(&self) -> &[Vec<Sparse>] {
        &self.mult
    }

    /// Basis indices of degree `g`; empty means S_g = {0}.
    pub fn component_basis(&self, g: GroupElem) -> &[usize] {
        &self.by_degree[g]
    }

    pub fn zero(&self) -> ScElement {
        ScElement(self.space.zero())
    }

    pub fn one(&self) -> ScElement {
        self.one.clone()
    }

    pub fn basis(&self, i: usize) -> ScElement {
        ScElement(self.space.basis_vector(i))
    }

    pub fn from_sparse(&self, v: &[(usize, Scalar)]) -> ScElement {
        let mut out = self.space.zero();
        for (k, c) in v {
            self.space.add_coord(&mut out, *k, c);
        }
        ScElement(out)
    }

    pub fn to_sparse(&self, x: &ScElement) -> Sparse {
        self.space.support(&x.0).into_iter().map(|k| (k, self.space.coord(&x.0, k))).collect()
    }

    pub fn is_zero(&self, x: &ScElement) -> bool {
        self.space.is_zero(&x.0)
    }

    pub fn add(&self, a: &ScElement, b: &ScElement) -> ScElement {
        ScElement(self.space.add(&a.0, &b.0))
    }

    pub fn neg(&self, a: &ScElement) -> ScElement {
        ScElement(self.space.neg(&a.0))
    }

    pub fn sub(&self, a: &ScElement, b: &ScElement) -> ScElement {
        ScElement(self.space.sub(&a.0, &b.0))
    }

    pub fn scale(&self, c: &Scalar, a: &ScElement) -> ScElement {
        ScElement(self.space.scale(c, &a.0))
    }

    /// Bilinear extension of the table.
    pub fn mul(&self, a: &ScElement, b: &ScElement) -> ScElement {
        ScElement(self.mul_raw(&a.0, &b.0))
    }

    pub(crate) fn mul_raw(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let sa = self.space.support(a);
        let sb = self.space.support(b);
        let mut out = self.space.zero();
        for &i in &sa {
            let ai = self.space.coord(a, i);
            for &j in &sb {
                let entries = &self.mult[i][j];
                if entries.is_empty() {
                    continue;
                }
                let aibj = self.coeff.mul(&ai, &self.space.coord(b, j));
                for (k, c) in entries {
                    self.space.add_coord(&mut out, *k, &self.coeff.mul(&aibj, c));
                }
            }
        }
        out
    }

    /// Projection onto S_g.
    pub fn homogeneous_part(&self, x: &ScElement, g: GroupElem) -> ScElement {
        let w = self.coeff.width();
        let mut out = self.space.zero();
        for &i in &self.by_degree[g] {
            out[i * w..(i + 1) * w].copy_from_slice(&x.0[i * w..(i + 1) * w]);
        }
        ScElement(out)
    }

    /// Degree of a nonzero homogeneous element; `None` for zero or mixed.
    pub fn degree_of(&self, x: &ScElement) -> Option<GroupElem> {
        let support = self.space.support(&x.0);
        let first = self.degrees[*support.first()?];
        support.iter().all(|&k| self.degrees[k] == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, x: &ScElement, g: GroupElem) -> bool {
        self.space.support(&x.0).iter().all(|&k| self.degrees[k] == g)
    }

    /// All elements of S_g, or `None` beyond `cap`.
    pub fn component_elements(&self, g: GroupElem, cap: usize) -> Option<Vec<ScElement>> {
        self.space.enumerate_on(&self.by_degree[g], cap).map(|v| v.into_iter().map(ScElement).collect())
    }

    /// Number of elements of S_g.
    pub fn component_cardinality(&self, g: GroupElem) -> u128 {
        self.by_degree[g].iter().map(|&i| self.space.order(i).0.iter().map(|&o| o as u128).product::<u128>()).product()
    }

    /// Number of elements of S.
    pub fn cardinality(&self) -> u128 {
        self.space.cardinality()
    }

    /// Closure actions for multiplication by R = S_e on the requested sides.
    pub fn r_actions(&self, left: bool, right: bool) -> Vec<ClosureAction> {
        let mut actions = closure::scalar_actions(self.coeff.width());
        let e = self.group.identity();
        for &i in &self.by_degree[e] {
            if left {
                actions.push(ClosureAction::Left(self.basis(i).0));
            }
            if right {
                actions.push(ClosureAction::Right(self.basis(i).0));
            }
        }
        actions
    }

    pub fn apply_action(&self, action: &ClosureAction, v: &[u32]) -> Vec<u32> {
        match action {
            ClosureAction::Scalar(c) => self.space.scale(c, v),
            ClosureAction::Left(x) => self.mul_raw(x, v),
            ClosureAction::Right(x) => self.mul_raw(v, x),
        }
    }

    /// Smallest subset containing `gens`, closed under addition and the
    /// requested one-sided multiplications by R, with witnesses.
    pub fn module_closure(
        &self,
        gens: &[ScElement],
        left_r: bool,
        right_r: bool,
        cap: usize,
    ) -> Result<WitnessedModule> {
        WitnessedModule::close(
            &self.space,
            gens.iter().map(|g| g.0.clone()).collect(),
            self.r_actions(left_r, right_r),
            |a, v| self.apply_action(a, v),
            cap,
        )
    }

    /// Additive span (over the coefficient ring) of `gens`.
    pub fn span(&self, gens: &[ScElement], cap: usize) -> Result<WitnessedModule> {
        WitnessedModule::span(&self.space, gens.iter().map(|g| g.0.clone()).collect(), cap)
    }

    /// Span of S_g.
    pub fn component_span(&self, g: GroupElem, cap: usize) -> Result<WitnessedModule> {
        let gens: Vec<ScElement> = self.by_degree[g].iter().map(|&i| self.basis(i)).collect();
        self.span(&gens, cap)
    }

    /// Replays every witness of a closure built over this ring.
    pub fn replay(&self, module: &WitnessedModule) -> std::result::Result<(), usize> {
        module.replay(&self.space, |a, v| self.apply_action(a, v))
    }

    /// Generators of the product set X·Y = {Σ xy}: pairwise basis products.
    pub fn product_generators(&self, xs: &[ScElement], ys: &[ScElement]) -> Vec<ScElement> {
        xs.iter().flat_map(|x| ys.iter().map(move |y| self.mul(x, y))).collect()
    }

    pub fn component_generators(&self, g: GroupElem) -> Vec<ScElement> {
        self.by_degree[g].iter().map(|&i| self.basis(i)).collect()
    }

    /// Human-readable sparse form, e.g. `4·E11 + 4·E22`.
    pub fn render(&self, x: &ScElement) -> String {
        let terms: Vec<String> = self
            .to_sparse(x)
            .into_iter()
            .map(|(k, c)| if c == self.coeff.one() { self.names[k].clone() } else { format!("{c}·{}", self.names[k]) })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for StructureConstantRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "structure-constant ring of rank {} over {}, graded by a group of order {}",
            self.basis_size(),
            self.coeff,
            self.group.order()
        )
    }
}

fn reduce_scalar(space: &CoordSpace, k: usize, c: &Scalar) -> Scalar {
    let o = space.order(k);
    Scalar(c.0.iter().zip(&o.0).map(|(&x, &m)| x % m).collect())
}

fn merge_sparse(coeff: &CoeffRing, space: &CoordSpace, a: &Sparse, b: &Sparse) -> Sparse {
    let mut out: Vec<(usize, Scalar)> = a.clone();
    for (k, c) in b {
        match out.iter_mut().find(|(j, _)| j == k) {
            Some((_, d)) => *d = reduce_scalar(space, *k, &coeff.add(d, c)),
            None => out.push((*k, c.clone())),
        }
    }
    out.retain(|(_, c)| c.0.iter().any(|&x| x != 0));
    out.sort_by_key(|(k, _)| *k);
    out
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::group::cyclic_group;

    #[test]
    fn trivial_grading_is_valid() {
        let z6 = CoeffRing::zn(6).unwrap();
        let s = trivial_fixture(&z6, &cyclic_group(2).unwrap()).unwrap();
        assert_eq!(s.basis_size(), 1);
        assert!(s.component_basis(1).is_empty());
        assert_eq!(s.component_basis(0), &[0]);
    }

    #[test]
    fn homogeneity_violation_is_reported() {
        let z2 = CoeffRing::zn(2).unwrap();
        let g = cyclic_group(2).unwrap();
        let one = z2.one();
        let spec = ScRingSpec {
            coeff: z2.clone(),
            group: g,
            names: vec!["e".into(), "x".into()],
            degrees: vec![0, 1],
            orders: None,
            // x·x = x has degree 1, but 1 + 1 = 0.
            table: vec![
                (0, 0, vec![(0, one.clone())]),
                (0, 1, vec![(1, one.clone())]),
                (1, 0, vec![(1, one.clone())]),
                (1, 1, vec![(1, one.clone())]),
            ],
            one: vec![(0, one)],
        };
        assert_eq!(StructureConstantRing::build(spec).unwrap_err(), Error::HomogeneityViolation { i: 1, j: 1 });
    }

    #[test]
    fn associativity_violation_is_reported() {
        let z3 = CoeffRing::zn(3).unwrap();
        let g = cyclic_group(1).unwrap();
        let c = |n| z3.from_int(n);
        // e identity, x·x = y, y·x = 0, x·y = y: (x x) x = y x = 0 ≠ x (x x) = x y = y.
        let spec = ScRingSpec {
            coeff: z3.clone(),
            group: g,
            names: vec!["e".into(), "x".into(), "y".into()],
            degrees: vec![0, 0, 0],
            orders: None,
            table: vec![
                (0, 0, vec![(0, c(1))]),
                (0, 1, vec![(1, c(1))]),
                (0, 2, vec![(2, c(1))]),
                (1, 0, vec![(1, c(1))]),
                (2, 0, vec![(2, c(1))]),
                (1, 1, vec![(2, c(1))]),
                (1, 2, vec![(2, c(1))]),
            ],
            one: vec![(0, c(1))],
        };
        assert_eq!(StructureConstantRing::build(spec).unwrap_err(), Error::AssociativityViolation { i: 1, j: 1, k: 1 });
    }

    #[test]
    fn identity_must_be_two_sided_and_degree_e() {
        let z2 = CoeffRing::zn(2).unwrap();
        let g = cyclic_group(2).unwrap();
        let one = z2.one();
        let spec = ScRingSpec {
            coeff: z2.clone(),
            group: g,
            names: vec!["e".into(), "x".into()],
            degrees: vec![0, 1],
            orders: None,
            table: vec![(0, 0, vec![(0, one.clone())]), (0, 1, vec![(1, one.clone())])],
            one: vec![(0, one)],
        };
        assert!(matches!(StructureConstantRing::build(spec).unwrap_err(), Error::IdentityViolation(_)));
    }

    #[test]
    fn torsion_violation_is_reported() {
        let z4 = CoeffRing::zn(4).unwrap();
        let g = cyclic_group(1).unwrap();
        let c = |n| z4.from_int(n);
        // x has order 2 but x·x = e has order 4: 2·x = 0 yet 2·(x·x) ≠ 0.
        let spec = ScRingSpec {
            coeff: z4.clone(),
            group: g,
            names: vec!["e".into(), "x".into()],
            degrees: vec![0, 0],
            orders: Some(vec![Scalar(vec![4]), Scalar(vec![2])]),
            table: vec![
                (0, 0, vec![(0, c(1))]),
                (0, 1, vec![(1, c(1))]),
                (1, 0, vec![(1, c(1))]),
                (1, 1, vec![(0, c(1))]),
            ],
            one: vec![(0, c(1))],
        };
        assert_eq!(StructureConstantRing::build(spec).unwrap_err(), Error::TorsionViolation { i: 1, j: 1, k: 0 });
    }

    #[test]
    fn dade6_products_and_components() {
        let fx = dade6();
        let s = fx.ring();
        assert_eq!(s.component_basis(0).len(), 5);
        assert_eq!(s.component_basis(1).len(), 4);
        let names: Vec<&str> = s.component_basis(1).iter().map(|&i| s.names()[i].as_str()).collect();
        assert_eq!(names, vec!["E13[2]", "E23[2]", "E31[2]", "E32[2]"]);
        // E13(2)·E31(2) = E11(4).
        let a = fx.matrix_unit(0, 2, 2);
        let b = fx.matrix_unit(2, 0, 2);
        assert_eq!(s.mul(&a, &b), fx.matrix_unit(0, 0, 4));
        assert_eq!(s.component_cardinality(1), 81);
        assert_eq!(s.component_cardinality(0), 7776);
        assert_eq!(s.cardinality(), 629_856);
        // 3·E13[2] is the zero matrix.
        assert!(s.is_zero(&s.scale(&s.coeff().from_int(3), &s.basis(2))));
    }

    #[test]
    fn component_basis_partitions_basis() {
        let fx = dade6();
        let s = fx.ring();
        let total: usize = s.group().elements().map(|g| s.component_basis(g).len()).sum();
        assert_eq!(total, s.basis_size());
    }

    #[test]
    fn closure_of_one_is_whole_trivially_graded_ring() {
        let z6 = CoeffRing::zn(6).unwrap();
        let s = trivial_fixture(&z6, &cyclic_group(2).unwrap()).unwrap();
        let m = s.module_closure(&[s.one()], true, true, 100).unwrap();
        assert_eq!(m.len(), 6);
        let empty = s.module_closure(&[], true, true, 100).unwrap();
        assert_eq!(empty.len(), 1);
    }

    #[test]
    fn dade6_epsilon_ideal_closure() {
        let fx = dade6();
        let s = fx.ring();
        let t: Vec<ScElement> = s.component_generators(1);
        let gens = s.product_generators(&t, &t);
        let ideal = s.module_closure(&gens, true, true, DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(ideal.len(), 243);
        assert!(s.replay(&ideal).is_ok());
        // Oracle: exhaustive identity search over the members.
        let ids: Vec<&Vec<u32>> =
            ideal.members().iter().filter(|u| ideal.members().iter().all(|x| s.mul_raw(u, x) == *x)).collect();
        assert_eq!(ids.len(), 1);
        assert_eq!(ids[0], &fx.diag([4, 4, 4]).0);
        // Closure is idempotent.
        let again = s
            .module_closure(
                &ideal.members().iter().cloned().map(ScElement).collect::<Vec<_>>(),
                true,
                true,
                DEFAULT_CLOSURE_CAP,
            )
            .unwrap();
        assert!(again.same_members(&ideal));
    }

    #[test]
    fn module_equality_examples() {
        let fx = dade6();
        let s = fx.ring();
        let t = s.component_generators(1);
        let span_t = s.component_span(1, DEFAULT_CLOSURE_CAP).unwrap();
        assert!(span_t.same_members(&span_t));
        let tt = s.product_generators(&t, &t);
        let ttt = s.product_generators(&tt, &t);
        let closure = s.module_closure(&ttt, true, true, DEFAULT_CLOSURE_CAP).unwrap();
        assert!(closure.same_members(&span_t));
        let zero = s.span(&[], 10).unwrap();
        assert!(!zero.same_members(&span_t));
    }
}
