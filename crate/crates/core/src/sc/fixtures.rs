//! Built-in structure-constant rings: the 3×3 block matrix ring over an
//! ideal, group rings, trivially graded rings and a square-zero extension
//! used as a negative example.

use crate::coeff::{CoeffRing, Ideal, Scalar};
use crate::error::{Error, Result};
use crate::group::{cyclic_group, FiniteGroup};

use super::{ScElement, ScRingSpec, StructureConstantRing};

/// Positions of the 3×3 pattern holding ideal entries (0-based).
const IDEAL_POSITIONS: [(usize, usize); 4] = [(0, 2), (1, 2), (2, 0), (2, 1)];

fn in_ideal_block(i: usize, j: usize) -> bool {
    IDEAL_POSITIONS.contains(&(i, j))
}

/// The ring of 3×3 matrices
///
/// ```text
/// A A B
/// A A B
/// B B A
/// ```
///
/// for a unital ideal B of A, graded by ℤ₂ with the A-block in degree 0 and
/// the B-block in degree 1.
#[derive(Debug, Clone)]
pub struct MatrixFixture {
    ring: StructureConstantRing,
    ideal: Ideal,
    ideal_gen: Scalar,
    ideal_one: Scalar,
    /// Basis index of each position, row-major.
    index: [[usize; 3]; 3],
}

impl MatrixFixture {
    pub fn ring(&self) -> &StructureConstantRing {
        &self.ring
    }

    pub fn into_ring(self) -> StructureConstantRing {
        self.ring
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// The identity 1_B of the ideal.
    pub fn ideal_one(&self) -> &Scalar {
        &self.ideal_one
    }

    /// Basis index holding position `(i, j)`.
    pub fn basis_index(&self, i: usize, j: usize) -> usize {
        self.index[i][j]
    }

    /// The matrix with `x` at `(i, j)` and zeros elsewhere. Panics when `x`
    /// is not an allowed entry at that position.
    pub fn matrix_unit(&self, i: usize, j: usize, x: i64) -> ScElement {
        let coeff = self.ring.coeff();
        let x = coeff.from_int(x);
        let c = self.coordinate_for(i, j, &x).expect("entry outside the ideal");
        self.ring.from_sparse(&[(self.index[i][j], c)])
    }

    /// Builds an element from integer entries.
    pub fn from_matrix(&self, m: [[i64; 3]; 3]) -> ScElement {
        let mut out = self.ring.zero();
        for (i, row) in m.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                out = self.ring.add(&out, &self.matrix_unit(i, j, x));
            }
        }
        out
    }

    pub fn diag(&self, d: [i64; 3]) -> ScElement {
        self.from_matrix([[d[0], 0, 0], [0, d[1], 0], [0, 0, d[2]]])
    }

    /// Matrix entries of an element.
    pub fn matrix(&self, x: &ScElement) -> Vec<Vec<Scalar>> {
        let coeff = self.ring.coeff();
        let space = self.ring.space();
        (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        let k = self.index[i][j];
                        let c = space.coord(&x.0, k);
                        if in_ideal_block(i, j) {
                            coeff.mul(&c, &self.ideal_gen)
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Renders as `[[a,b,c],[d,e,f],[g,h,i]]`.
    pub fn render_matrix(&self, x: &ScElement) -> String {
        let rows: Vec<String> = self
            .matrix(x)
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        format!("[{}]", rows.join(","))
    }

    fn coordinate_for(&self, i: usize, j: usize, x: &Scalar) -> Option<Scalar> {
        if !in_ideal_block(i, j) {
            return Some(x.clone());
        }
        let coeff = self.ring.coeff();
        coeff.elements().into_iter().find(|c| coeff.mul(c, &self.ideal_gen) == *x)
    }
}

/// The block matrix ring over `coeff` with ideal generated by `ideal_gens`.
pub fn triangular_matrix_fixture(coeff: &CoeffRing, ideal_gens: Vec<Scalar>) -> Result<MatrixFixture> {
    let ideal = Ideal::generated_by(coeff, ideal_gens)?;
    let ideal_one = ideal.identity()?.ok_or_else(|| Error::Precondition("the ideal has no identity element".into()))?;
    if ideal_one == coeff.one() {
        return Err(Error::Precondition("the ideal identity equals the ring identity".into()));
    }
    let b = ideal.principal_generator();
    let b_order = ideal.generator_order();

    let mut index = [[0usize; 3]; 3];
    let mut names = Vec::new();
    let mut degrees = Vec::new();
    let mut orders = Vec::new();
    for (i, row) in index.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = names.len();
            if in_ideal_block(i, j) {
                names.push(format!("E{}{}[{}]", i + 1, j + 1, b));
                degrees.push(1);
                orders.push(b_order.clone());
            } else {
                names.push(format!("E{}{}", i + 1, j + 1));
                degrees.push(0);
                orders.push(Scalar(coeff.moduli().to_vec()));
            }
        }
    }

    // Entry at (i,k) of E_ij[x]·E_jk[y] is x·y; ideal positions store the
    // coefficient c with c·b = x·y.
    let gen_at = |i: usize, j: usize| if in_ideal_block(i, j) { b.clone() } else { coeff.one() };
    let solve = |target: &Scalar| -> Result<Scalar> {
        coeff
            .elements()
            .into_iter()
            .find(|c| coeff.mul(c, &b) == *target)
            .ok_or_else(|| Error::InternalInconsistency(format!("{target} is not a multiple of {b}")))
    };
    let mut table = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let xy = coeff.mul(&gen_at(i, j), &gen_at(j, k));
                let c = if in_ideal_block(i, k) { solve(&xy)? } else { xy };
                if !coeff.is_zero(&c) {
                    table.push((index[i][j], index[j][k], vec![(index[i][k], c)]));
                }
            }
        }
    }
    let one = (0..3).map(|i| (index[i][i], coeff.one())).collect();
    let ring = StructureConstantRing::build(ScRingSpec {
        coeff: coeff.clone(),
        group: cyclic_group(2)?,
        names,
        degrees,
        orders: Some(orders),
        table,
        one,
    })?;
    Ok(MatrixFixture { ring, ideal, ideal_gen: b, ideal_one, index })
}

/// The block matrix ring with A = ℤ/6 and B = 2ℤ/6, where 1_B = 4.
pub fn dade6() -> MatrixFixture {
    let z6 = CoeffRing::zn(6).expect("ℤ/6");
    triangular_matrix_fixture(&z6, vec![z6.from_int(2)]).expect("the ℤ/6 block matrix ring is valid")
}

/// The group ring `coeff[G]` with basis element `u_g` in degree g.
pub fn group_ring_fixture(coeff: &CoeffRing, group: &FiniteGroup) -> Result<StructureConstantRing> {
    let n = group.order();
    let table = (0..n)
        .flat_map(|g| (0..n).map(move |h| (g, h)))
        .map(|(g, h)| (g, h, vec![(group.op(g, h), coeff.one())]))
        .collect();
    StructureConstantRing::build(ScRingSpec {
        coeff: coeff.clone(),
        group: group.clone(),
        names: (0..n).map(|g| format!("u{g}")).collect(),
        degrees: (0..n).collect(),
        orders: None,
        table,
        one: vec![(group.identity(), coeff.one())],
    })
}

/// The coefficient ring itself, concentrated in degree e.
pub fn trivial_fixture(coeff: &CoeffRing, group: &FiniteGroup) -> Result<StructureConstantRing> {
    StructureConstantRing::build(ScRingSpec {
        coeff: coeff.clone(),
        group: group.clone(),
        names: vec!["1".into()],
        degrees: vec![group.identity()],
        orders: None,
        table: vec![(0, 0, vec![(0, coeff.one())])],
        one: vec![(0, coeff.one())],
    })
}

/// ℤ/4 ⊕ x·ℤ/2 over ℤ₂ with x in degree 1 and x² = 0. Here S₁ ≠ 0 but
/// S₁S₁ = 0, so the grading is not symmetric.
pub fn square_zero_fixture() -> StructureConstantRing {
    let z4 = CoeffRing::zn(4).expect("ℤ/4");
    let one = z4.one();
    StructureConstantRing::build(ScRingSpec {
        coeff: z4.clone(),
        group: cyclic_group(2).expect("ℤ₂"),
        names: vec!["1".into(), "x".into()],
        degrees: vec![0, 1],
        orders: Some(vec![Scalar(vec![4]), Scalar(vec![2])]),
        table: vec![(0, 0, vec![(0, one.clone())]), (0, 1, vec![(1, one.clone())]), (1, 0, vec![(1, one.clone())])],
        one: vec![(0, one)],
    })
    .expect("square-zero extension is valid")
}

/// M₂(ℤ/2) graded by ℤ₃ with E12 in degree 1 and E21 in degree 2.
/// Epsilon-strong with ε₁ = E11 and ε₂ = E22, but N(E11) = {0, 1} is not
/// a subgroup, so the minimal idempotents are not epsilon-central.
pub fn offdiagonal_z3_fixture() -> StructureConstantRing {
    let z2 = CoeffRing::zn(2).expect("ℤ/2");
    let one = z2.one();
    let names = ["E11", "E12", "E21", "E22"];
    let unit = |i: usize, j: usize| 2 * i + j;
    let mut table = Vec::new();
    for (i, j, k) in (0..2).flat_map(|i| (0..2).flat_map(move |j| (0..2).map(move |k| (i, j, k)))) {
        table.push((unit(i, j), unit(j, k), vec![(unit(i, k), one.clone())]));
    }
    StructureConstantRing::build(ScRingSpec {
        coeff: z2.clone(),
        group: cyclic_group(3).expect("ℤ₃"),
        names: names.iter().map(|n| n.to_string()).collect(),
        degrees: vec![0, 1, 2, 0],
        orders: None,
        table,
        one: vec![(0, one.clone()), (3, one)],
    })
    .expect("graded matrix ring is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dade6_shape() {
        let fx = dade6();
        assert_eq!(fx.ideal_one(), &Scalar(vec![4]));
        let s = fx.ring();
        assert_eq!(s.basis_size(), 9);
        assert_eq!(s.one(), fx.diag([1, 1, 1]));
        assert_eq!(fx.render_matrix(&fx.diag([4, 4, 4])), "[[4,0,0],[0,4,0],[0,0,4]]");
        // Entries in B positions stay in B.
        let t = fx.from_matrix([[0, 0, 2], [0, 0, 4], [2, 2, 0]]);
        let m = fx.matrix(&s.mul(&t, &s.basis(0)));
        for (i, j) in IDEAL_POSITIONS {
            assert!(fx.ideal().contains(&m[i][j]));
        }
    }

    #[test]
    fn matrix_round_trip() {
        let fx = dade6();
        let m = [[1, 5, 4], [3, 0, 2], [0, 4, 5]];
        let x = fx.from_matrix(m);
        let back = fx.matrix(&x);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(back[i][j], Scalar(vec![m[i][j] as u32]));
            }
        }
    }

    #[test]
    fn ideal_without_identity_is_rejected() {
        let z4 = CoeffRing::zn(4).unwrap();
        assert!(matches!(triangular_matrix_fixture(&z4, vec![z4.from_int(2)]), Err(Error::Precondition(_))));
        let z6 = CoeffRing::zn(6).unwrap();
        assert!(matches!(triangular_matrix_fixture(&z6, vec![z6.from_int(1)]), Err(Error::Precondition(_))));
    }

    #[test]
    fn other_ideals_build() {
        // ℤ/10 with B = 5ℤ/10: 1_B = 5.
        let z10 = CoeffRing::zn(10).unwrap();
        let fx = triangular_matrix_fixture(&z10, vec![z10.from_int(5)]).unwrap();
        assert_eq!(fx.ideal_one(), &Scalar(vec![5]));
        assert_eq!(fx.ring().component_cardinality(1), 16);
        // ℤ/2 × ℤ/3 with B = ℤ/2 × 0.
        let r = CoeffRing::new(vec![2, 3]).unwrap();
        let fx = triangular_matrix_fixture(&r, vec![r.scalar(&[1, 0]).unwrap()]).unwrap();
        assert_eq!(fx.ring().component_cardinality(1), 16);
    }

    #[test]
    fn group_ring_is_valid() {
        let z2 = CoeffRing::zn(2).unwrap();
        let s = group_ring_fixture(&z2, &cyclic_group(2).unwrap()).unwrap();
        let u1 = s.basis(1);
        assert_eq!(s.mul(&u1, &u1), s.one());
    }

    #[test]
    fn square_zero_extension() {
        let s = square_zero_fixture();
        let x = s.basis(1);
        assert!(s.is_zero(&s.mul(&x, &x)));
        assert_eq!(s.cardinality(), 8);
    }
}
