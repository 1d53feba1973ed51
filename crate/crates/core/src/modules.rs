//! Finite graded left modules over structure-constant rings, with the
//! symmetric, Dade and epsilon-strong conditions checked as equalities of
//! finite sets.

use crate::coeff::{CoordSpace, Scalar};
use crate::decomposition::DecompositionReport;
use crate::error::{Error, Result};
use crate::grading::Verdict;
use crate::group::GroupElem;
use crate::par;
use crate::sc::fixtures::MatrixFixture;
use crate::sc::{ScElement, Sparse, StructureConstantRing, WitnessedModule};

/// Input for [`GradedModule::build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec {
    pub names: Vec<String>,
    pub degrees: Vec<GroupElem>,
    /// Additive orders per basis element; `None` means free.
    pub orders: Option<Vec<Scalar>>,
    /// Nonzero products `bᵢ·mⱼ` of ring basis i and module basis j.
    pub action: Vec<(usize, usize, Sparse)>,
}

#[derive(Debug, Clone)]
pub struct GradedModule<'a> {
    ring: &'a StructureConstantRing,
    names: Vec<String>,
    degrees: Vec<GroupElem>,
    space: CoordSpace,
    act: Vec<Vec<Vec<u32>>>,
    by_degree: Vec<Vec<usize>>,
}

/// Component member sets of a graded submodule.
#[derive(Debug, Clone)]
pub struct Submodule {
    pub components: Vec<WitnessedModule>,
}

impl Submodule {
    /// Number of elements of the direct sum of the components.
    pub fn cardinality(&self) -> u128 {
        self.components.iter().map(|c| c.len() as u128).product()
    }

    /// Component-wise equality of member sets.
    pub fn same_members(&self, other: &Submodule) -> bool {
        self.components.len() == other.components.len()
            && self.components.iter().zip(&other.components).all(|(a, b)| a.same_members(b))
    }
}

impl<'a> GradedModule<'a> {
    /// Validates ranges, torsion, the grading, the identity action and
    /// associativity on every (ring basis, ring basis, module basis) triple.
    pub fn build(ring: &'a StructureConstantRing, spec: ModuleSpec) -> Result<Self> {
        let n = spec.names.len();
        let coeff = ring.coeff();
        let grp = ring.group();
        if spec.degrees.len() != n {
            return Err(Error::Invalid(format!("{n} module basis names but {} degrees", spec.degrees.len())));
        }
        if let Some(&d) = spec.degrees.iter().find(|&&d| d >= grp.order()) {
            return Err(Error::Invalid(format!("module degree {d} is not a group element")));
        }
        let space = match &spec.orders {
            Some(o) if o.len() != n => {
                return Err(Error::Invalid(format!("{} orders for {n} module basis elements", o.len())))
            }
            Some(o) => CoordSpace::with_orders(coeff, o)?,
            None => CoordSpace::free(coeff, n),
        };
        let mut act = vec![vec![space.zero(); n]; ring.basis_size()];
        for (i, j, v) in &spec.action {
            if *i >= ring.basis_size() || *j >= n {
                return Err(Error::Invalid(format!("action entry ({i}, {j}) out of range")));
            }
            for (k, c) in v {
                if *k >= n || c.0.len() != coeff.width() {
                    return Err(Error::Invalid(format!("action entry ({i}, {j}) has a bad term at {k}")));
                }
                let (oi, oj, ok) = (ring.space().order(*i), space.order(*j), space.order(*k));
                for t in 0..coeff.width() {
                    let ck = c.0[t] as u64 % ok.0[t] as u64;
                    if !(oi.0[t] as u64 * ck).is_multiple_of(ok.0[t] as u64)
                        || !(oj.0[t] as u64 * ck).is_multiple_of(ok.0[t] as u64)
                    {
                        return Err(Error::TorsionViolation { i: *i, j: *j, k: *k });
                    }
                }
                space.add_coord(&mut act[*i][*j], *k, c);
            }
        }
        let mut by_degree = vec![Vec::new(); grp.order()];
        for (k, &d) in spec.degrees.iter().enumerate() {
            by_degree[d].push(k);
        }
        let m = Self { ring, names: spec.names, degrees: spec.degrees, space, act, by_degree };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let grp = self.ring.group();
        let n = self.dim();
        let rb = self.ring.basis_size();
        for i in 0..rb {
            for j in 0..n {
                let target = grp.op(self.ring.degree(i), self.degrees[j]);
                if self.space.support(&self.act[i][j]).iter().any(|&k| self.degrees[k] != target) {
                    return Err(Error::GradingViolation { ring: i, module: j });
                }
            }
        }
        let one = self.ring.one();
        for j in 0..n {
            let m = self.space.basis_vector(j);
            if self.act(&one, &m) != m {
                return Err(Error::IdentityActionViolation(j));
            }
        }
        let bad = par::find_map_first(rb * rb, |ik| {
            let (i, k) = (ik / rb, ik % rb);
            let prod = self.ring.mul(&self.ring.basis(i), &self.ring.basis(k));
            (0..n).find_map(|j| {
                let m = self.space.basis_vector(j);
                let left = self.act(&prod, &m);
                let right = self.act(&self.ring.basis(i), &self.act(&self.ring.basis(k), &m));
                (left != right).then_some((i, k, j))
            })
        });
        if let Some((i, j, m)) = bad {
            return Err(Error::ActionAssociativityViolation { i, j, m });
        }
        Ok(())
    }

    pub fn ring(&self) -> &StructureConstantRing {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[GroupElem] {
        &self.degrees
    }

    pub fn space(&self) -> &CoordSpace {
        &self.space
    }

    pub fn basis(&self, j: usize) -> Vec<u32> {
        self.space.basis_vector(j)
    }

    pub fn component_basis(&self, g: GroupElem) -> &[usize] {
        &self.by_degree[g]
    }

    pub fn cardinality(&self) -> u128 {
        self.space.cardinality()
    }

    /// a·m, extended bilinearly.
    pub fn act(&self, a: &ScElement, m: &[u32]) -> Vec<u32> {
        let rs = self.ring.space();
        let coeff = self.ring.coeff();
        let mut out = self.space.zero();
        for i in rs.support(&a.0) {
            let ai = rs.coord(&a.0, i);
            for j in self.space.support(m) {
                let c = coeff.mul(&ai, &self.space.coord(m, j));
                self.space.add_assign(&mut out, &self.space.scale(&c, &self.act[i][j]));
            }
        }
        out
    }

    pub fn render(&self, m: &[u32]) -> String {
        let terms: Vec<String> = self
            .space
            .support(m)
            .into_iter()
            .map(|k| {
                let c = self.space.coord(m, k);
                if c == self.ring.coeff().one() {
                    self.names[k].clone()
                } else {
                    format!("{c}·{}", self.names[k])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    fn span(&self, gens: Vec<Vec<u32>>, cap: usize) -> Result<WitnessedModule> {
        WitnessedModule::span(&self.space, gens, cap)
    }

    /// e·(basis of S_g)·(basis of S_{g⁻¹})…: all products of one basis
    /// element per listed degree, scaled by `e`.
    fn ring_products(&self, e: &ScElement, degrees: &[GroupElem]) -> Vec<ScElement> {
        let mut acc = vec![e.clone()];
        for &d in degrees {
            acc = acc
                .iter()
                .flat_map(|x| self.ring.component_basis(d).iter().map(move |&i| self.ring.mul(x, &self.ring.basis(i))))
                .collect();
        }
        acc
    }

    fn apply_all(&self, rs: &[ScElement], ms: &[Vec<u32>]) -> Vec<Vec<u32>> {
        rs.iter().flat_map(|r| ms.iter().map(move |m| self.act(r, m))).collect()
    }

    fn component_vectors(&self, g: GroupElem) -> Vec<Vec<u32>> {
        self.by_degree[g].iter().map(|&k| self.basis(k)).collect()
    }

    /// M_g as a member set.
    pub fn component(&self, g: GroupElem, cap: usize) -> Result<WitnessedModule> {
        self.span(self.component_vectors(g), cap)
    }

    /// S_gS_{g⁻¹}·X for the listed vectors X.
    fn ideal_times(&self, g: GroupElem, xs: &[Vec<u32>], cap: usize) -> Result<WitnessedModule> {
        let gi = self.ring.group().inv(g);
        let rs = self.ring_products(&self.ring.one(), &[g, gi]);
        self.span(self.apply_all(&rs, xs), cap)
    }

    /// S(M) = ⊕ S_gS_{g⁻¹}M_g, checked closed under the whole action.
    pub fn s_of(&self, cap: usize) -> Result<Submodule> {
        let comps = self
            .ring
            .group()
            .elements()
            .map(|g| self.ideal_times(g, &self.component_vectors(g), cap))
            .collect::<Result<Vec<_>>>()?;
        let sub = Submodule { components: comps };
        self.check_submodule(&sub)?;
        Ok(sub)
    }

    /// S(N) for a graded submodule N given by its member sets.
    pub fn s_of_submodule(&self, sub: &Submodule, cap: usize) -> Result<Submodule> {
        let comps = self
            .ring
            .group()
            .elements()
            .map(|g| {
                let c = &sub.components[g];
                let gens: Vec<Vec<u32>> = c.spanning().iter().map(|&i| c.members()[i].clone()).collect();
                self.ideal_times(g, &gens, cap)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Submodule { components: comps })
    }

    /// bᵢ·x ∈ N_{hg} for every ring basis element bᵢ of degree h and every
    /// member x of N_g.
    pub fn check_submodule(&self, sub: &Submodule) -> Result<()> {
        let grp = self.ring.group();
        for g in grp.elements() {
            for x in sub.components[g].members() {
                for i in 0..self.ring.basis_size() {
                    let y = self.act(&self.ring.basis(i), x);
                    let h = grp.op(self.ring.degree(i), g);
                    if !sub.components[h].contains(&y) {
                        return Err(Error::TheoremViolation(format!(
                            "S(M) is not a submodule: {} · {} = {} leaves component {h}",
                            self.ring.names()[i],
                            self.render(x),
                            self.render(&y)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// M_g = S_gS_{g⁻¹}M_g for every g.
    pub fn is_symmetric_module(&self, cap: usize) -> Result<Verdict> {
        for g in self.ring.group().elements() {
            let xs = self.component_vectors(g);
            if !self.ideal_times(g, &xs, cap)?.same_members(&self.span(xs, cap)?) {
                return Ok(Verdict::No(format!("S_gS_g⁻¹M_g ≠ M_g at g = {g}")));
            }
        }
        Ok(Verdict::Yes("M_g = S_gS_g⁻¹M_g for every g".into()))
    }

    /// (eS_g)(eM_h) = (eS_g)(eS_{g⁻¹})(eM_{gh}) for g in `gs` and all h.
    fn product_condition(&self, e: &ScElement, gs: &[GroupElem], cap: usize) -> Result<Option<(GroupElem, GroupElem)>> {
        let grp = self.ring.group();
        let pairs: Vec<(GroupElem, GroupElem)> = gs.iter().flat_map(|&g| grp.elements().map(move |h| (g, h))).collect();
        let results: Vec<Result<bool>> = par::map_slice(&pairs, |&(g, h)| {
            let lhs = self.apply_all(&self.ring_products(e, &[g]), &self.component_vectors(h));
            let rhs = self.apply_all(&self.ring_products(e, &[g, grp.inv(g)]), &self.component_vectors(grp.op(g, h)));
            Ok(self.span(lhs, cap)?.same_members(&self.span(rhs, cap)?))
        });
        for (pair, r) in pairs.into_iter().zip(results) {
            if !r? {
                return Ok(Some(pair));
            }
        }
        Ok(None)
    }

    /// S_gM_h = S_gS_{g⁻¹}M_{gh} for all g, h. `ring_epsilon_strong` is the
    /// ring's classification; a failure on an epsilon-strong ring is an error.
    pub fn dade_condition(&self, ring_epsilon_strong: &Verdict, cap: usize) -> Result<Verdict> {
        let all: Vec<GroupElem> = self.ring.group().elements().collect();
        match self.product_condition(&self.ring.one(), &all, cap)? {
            None => Ok(Verdict::Yes("S_gM_h = S_gS_g⁻¹M_gh for all g, h".into())),
            Some((g, h)) if ring_epsilon_strong.is_yes() => Err(Error::TheoremViolation(format!(
                "the ring is epsilon-strong but S_gM_h ≠ S_gS_g⁻¹M_gh at (g, h) = ({g}, {h})"
            ))),
            Some((g, h)) => Ok(Verdict::No(format!("S_gM_h ≠ S_gS_g⁻¹M_gh at (g, h) = ({g}, {h})"))),
        }
    }

    /// S_gM_h = S_gS_{g⁻¹}M_{gh} for all g, h, reported without reference
    /// to the ring's classification.
    pub fn is_epsilon_strong_module(&self, cap: usize) -> Result<Verdict> {
        let all: Vec<GroupElem> = self.ring.group().elements().collect();
        Ok(match self.product_condition(&self.ring.one(), &all, cap)? {
            None => Verdict::Yes("S_gM_h = S_gS_g⁻¹M_gh for all g, h".into()),
            Some((g, h)) => Verdict::No(format!("S_gM_h ≠ S_gS_g⁻¹M_gh at (g, h) = ({g}, {h})")),
        })
    }

    /// eM as component member sets.
    pub fn corner(&self, e: &ScElement, cap: usize) -> Result<Submodule> {
        let comps = self
            .ring
            .group()
            .elements()
            .map(|g| self.span(self.component_vectors(g).iter().map(|m| self.act(e, m)).collect(), cap))
            .collect::<Result<Vec<_>>>()?;
        Ok(Submodule { components: comps })
    }
}

/// One piece eM of a split module.
#[derive(Debug, Clone)]
pub struct ModuleSummand {
    pub idempotent: ScElement,
    /// N(e) for peeled pieces, `None` for the remainder.
    pub subgroup: Option<Vec<GroupElem>>,
    pub part: Submodule,
    pub verdict: Verdict,
}

/// M = ⊕ eᵢM ⊕ e'M along a successful peeling. Each eᵢM is checked against
/// the Dade condition over N(eᵢ), e'M against the epsilon-strong condition.
pub fn decompose_module(
    module: &GradedModule<'_>,
    report: &DecompositionReport<ScElement>,
    cap: usize,
) -> Result<Vec<ModuleSummand>> {
    if !report.is_success() {
        return Err(Error::Precondition("the peeling did not succeed".into()));
    }
    let all: Vec<GroupElem> = module.ring().group().elements().collect();
    let mut out = Vec::new();
    for s in report.summands() {
        let gs: Vec<GroupElem> = s.subgroup.iter().copied().collect();
        let verdict = match module.product_condition(&s.idempotent, &gs, cap)? {
            None => Verdict::Yes("Dade condition holds over N(e)".into()),
            Some((g, h)) => Verdict::No(format!("Dade condition fails at (g, h) = ({g}, {h})")),
        };
        out.push(ModuleSummand {
            idempotent: s.idempotent.clone(),
            subgroup: Some(gs),
            part: module.corner(&s.idempotent, cap)?,
            verdict,
        });
    }
    let verdict = match module.product_condition(&report.remainder, &all, cap)? {
        None => Verdict::Yes("epsilon-strong module condition holds".into()),
        Some((g, h)) => Verdict::No(format!("epsilon-strong module condition fails at (g, h) = ({g}, {h})")),
    };
    out.push(ModuleSummand {
        idempotent: report.remainder.clone(),
        subgroup: None,
        part: module.corner(&report.remainder, cap)?,
        verdict,
    });
    Ok(out)
}

/// S as a left module over itself.
pub fn regular_module(ring: &StructureConstantRing) -> ModuleSpec {
    let n = ring.basis_size();
    let action = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, ring.to_sparse(&ring.mul(&ring.basis(i), &ring.basis(j)))))
        .filter(|(_, _, v)| !v.is_empty())
        .collect();
    ModuleSpec { names: ring.names().to_vec(), degrees: ring.degrees().to_vec(), orders: Some(ring.orders()), action }
}

/// The module with no basis elements.
pub fn zero_module() -> ModuleSpec {
    ModuleSpec { names: Vec::new(), degrees: Vec::new(), orders: None, action: Vec::new() }
}

/// Columns of the block matrix ring: row i holds ideal entries when
/// `ideal_rows[i]`, and then sits in degree 1.
pub fn column_module(fx: &MatrixFixture, ideal_rows: [bool; 3]) -> Result<ModuleSpec> {
    let ring = fx.ring();
    let coeff = ring.coeff();
    let b = fx.ideal().principal_generator();
    let b_order = fx.ideal().generator_order();
    let full = Scalar(coeff.moduli().to_vec());
    let row_gen = |i: usize| if ideal_rows[i] { b.clone() } else { coeff.one() };
    let mut names = Vec::new();
    let mut degrees = Vec::new();
    let mut orders = Vec::new();
    for (i, &ideal) in ideal_rows.iter().enumerate() {
        names.push(if ideal { format!("m{}[{b}]", i + 1) } else { format!("m{}", i + 1) });
        degrees.push(usize::from(ideal));
        orders.push(if ideal { b_order.clone() } else { full.clone() });
    }
    let mut action = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let entry = &fx.matrix(&ring.basis(fx.basis_index(i, j)))[i][j];
            let value = coeff.mul(entry, &row_gen(j));
            let c = coeff
                .elements()
                .into_iter()
                .find(|c| coeff.mul(c, &row_gen(i)) == value)
                .ok_or_else(|| Error::Invalid(format!("row {} cannot hold {value}", i + 1)))?;
            if !coeff.is_zero(&c) {
                action.push((fx.basis_index(i, j), j, vec![(i, c)]));
            }
        }
    }
    Ok(ModuleSpec { names, degrees, orders: Some(orders), action })
}

/// Over a trivially graded ring with basis {1}: a copy of the ring in
/// degree e plus a copy in degree `g`, which S_g (= 0) cannot reach.
pub fn trivial_with_shifted_copy(ring: &StructureConstantRing, g: GroupElem) -> ModuleSpec {
    let one = ring.coeff().one();
    ModuleSpec {
        names: vec!["m".into(), "x".into()],
        degrees: vec![ring.group().identity(), g],
        orders: None,
        action: vec![(0, 0, vec![(0, one.clone())]), (0, 1, vec![(1, one)])],
    }
}
