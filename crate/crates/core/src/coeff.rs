//! Finite commutative coefficient rings ℤ/m₁ × … × ℤ/m_k.
//!
//! A scalar is a residue tuple. Vectors over the ring (ring and module
//! elements of the structure-constant backend) live in a [`CoordSpace`]:
//! coordinate `i` occupies `k` consecutive residues, each reduced modulo the
//! additive order of that coordinate.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A residue tuple, one entry per modulus.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(pub Vec<u32>);

impl Scalar {
    pub fn residues(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoeffRing {
    moduli: Vec<u32>,
}

impl CoeffRing {
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidCoeffRing("no moduli given".into()));
        }
        if let Some(m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidCoeffRing(format!("modulus {m} is below 2")));
        }
        if moduli.iter().any(|&m| m > 1 << 16) {
            return Err(Error::InvalidCoeffRing("moduli above 65536 are not supported".into()));
        }
        Ok(Self { moduli })
    }

    /// ℤ/m.
    pub fn zn(m: u32) -> Result<Self> {
        Self::new(vec![m])
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    /// Number of residue components per scalar.
    pub fn width(&self) -> usize {
        self.moduli.len()
    }

    pub fn cardinality(&self) -> u64 {
        self.moduli.iter().map(|&m| m as u64).product()
    }

    pub fn zero(&self) -> Scalar {
        Scalar(vec![0; self.width()])
    }

    pub fn one(&self) -> Scalar {
        Scalar(vec![1; self.width()])
    }

    /// The scalar congruent to `n` in every component.
    pub fn from_int(&self, n: i64) -> Scalar {
        Scalar(self.moduli.iter().map(|&m| n.rem_euclid(m as i64) as u32).collect())
    }

    /// Reduces a residue tuple; errors on a length mismatch.
    pub fn scalar(&self, residues: &[i64]) -> Result<Scalar> {
        if residues.len() != self.width() {
            return Err(Error::InvalidCoeffRing(format!(
                "scalar has {} components, ring has {}",
                residues.len(),
                self.width()
            )));
        }
        Ok(Scalar(residues.iter().zip(&self.moduli).map(|(&r, &m)| r.rem_euclid(m as i64) as u32).collect()))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        a.0.iter().all(|&r| r == 0)
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Scalar(a.0.iter().zip(&b.0).zip(&self.moduli).map(|((&x, &y), &m)| (x + y) % m).collect())
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        Scalar(a.0.iter().zip(&self.moduli).map(|(&x, &m)| (m - x) % m).collect())
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Scalar(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.moduli)
                .map(|((&x, &y), &m)| ((x as u64 * y as u64) % m as u64) as u32)
                .collect(),
        )
    }

    pub fn is_unit(&self, a: &Scalar) -> bool {
        a.0.iter().zip(&self.moduli).all(|(&x, &m)| gcd(x, m) == 1)
    }

    /// All scalars in mixed-radix order (first component varies slowest).
    pub fn elements(&self) -> Vec<Scalar> {
        let mut out = vec![Vec::new()];
        for &m in &self.moduli {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (0..m).map(move |r| {
                        let mut p = prefix.clone();
                        p.push(r);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(Scalar).collect()
    }

    /// The component idempotents (0,…,1,…,0). Together with addition they
    /// generate every scalar multiple of a vector.
    pub fn component_units(&self) -> Vec<Scalar> {
        (0..self.width())
            .map(|j| {
                let mut r = vec![0; self.width()];
                r[j] = 1;
                Scalar(r)
            })
            .collect()
    }

    /// Additive order of the ring, i.e. its characteristic as an abelian group.
    pub fn characteristic(&self) -> u64 {
        self.moduli.iter().fold(1u64, |acc, &m| lcm(acc, m as u64))
    }
}

fn gcd<T: Copy + PartialEq + Default + std::ops::Rem<Output = T>>(a: T, b: T) -> T {
    if b == T::default() {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// `ℤ/6`, or `ℤ/2 × ℤ/3` for a product.
impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.moduli.iter().map(|m| format!("ℤ/{m}")).collect();
        write!(f, "{}", parts.join(" × "))
    }
}

/// Coordinate space ⊕ᵢ R·bᵢ where each bᵢ spans a cyclic R-module
/// R/ann(bᵢ). Per component j the coordinate lives in ℤ/oᵢⱼ with oᵢⱼ | mⱼ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoordSpace {
    width: usize,
    dim: usize,
    moduli: Vec<u32>,
}

impl CoordSpace {
    /// Every coordinate a full copy of the coefficient ring.
    pub fn free(coeff: &CoeffRing, dim: usize) -> Self {
        let moduli = (0..dim).flat_map(|_| coeff.moduli().iter().copied()).collect();
        Self { width: coeff.width(), dim, moduli }
    }

    /// Coordinates with the given additive orders; each order must divide
    /// the corresponding modulus.
    pub fn with_orders(coeff: &CoeffRing, orders: &[Scalar]) -> Result<Self> {
        let mut moduli = Vec::with_capacity(orders.len() * coeff.width());
        for (i, o) in orders.iter().enumerate() {
            if o.0.len() != coeff.width() {
                return Err(Error::InvalidCoeffRing(format!("order of coordinate {i} has the wrong width")));
            }
            for (&oj, &mj) in o.0.iter().zip(coeff.moduli()) {
                if oj == 0 || mj % oj != 0 {
                    return Err(Error::InvalidCoeffRing(format!(
                        "order {oj} of coordinate {i} does not divide modulus {mj}"
                    )));
                }
                moduli.push(oj);
            }
        }
        Ok(Self { width: coeff.width(), dim: orders.len(), moduli })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Length of a flat vector.
    pub fn len(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moduli.is_empty()
    }

    /// Additive order of coordinate `i`, per component.
    pub fn order(&self, i: usize) -> Scalar {
        Scalar(self.moduli[i * self.width..(i + 1) * self.width].to_vec())
    }

    /// Number of elements of the whole space.
    pub fn cardinality(&self) -> u128 {
        self.moduli.iter().map(|&m| m as u128).product()
    }

    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.moduli.len()]
    }

    pub fn is_zero(&self, v: &[u32]) -> bool {
        v.iter().all(|&x| x == 0)
    }

    /// Reduces arbitrary residues into canonical range.
    pub fn reduce(&self, v: &mut [u32]) {
        for (x, &m) in v.iter_mut().zip(&self.moduli) {
            *x %= m;
        }
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).zip(&self.moduli).map(|((&x, &y), &m)| (x + y) % m).collect()
    }

    pub fn add_assign(&self, a: &mut [u32], b: &[u32]) {
        for ((x, &y), &m) in a.iter_mut().zip(b).zip(&self.moduli) {
            *x = (*x + y) % m;
        }
    }

    pub fn neg(&self, a: &[u32]) -> Vec<u32> {
        a.iter().zip(&self.moduli).map(|(&x, &m)| (m - x) % m).collect()
    }

    pub fn sub(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, c: &Scalar, a: &[u32]) -> Vec<u32> {
        let w = self.width;
        a.iter()
            .zip(&self.moduli)
            .enumerate()
            .map(|(i, (&x, &m))| ((c.0[i % w] as u64 * x as u64) % m as u64) as u32)
            .collect()
    }

    /// `acc += c · e_i` for the basis vector `e_i`.
    pub fn add_coord(&self, acc: &mut [u32], i: usize, c: &Scalar) {
        let w = self.width;
        for j in 0..w {
            let m = self.moduli[i * w + j] as u64;
            let x = &mut acc[i * w + j];
            *x = ((*x as u64 + c.0[j] as u64) % m) as u32;
        }
    }

    /// Coordinate `i` as a scalar of the coefficient ring (canonical lift).
    pub fn coord(&self, v: &[u32], i: usize) -> Scalar {
        Scalar(v[i * self.width..(i + 1) * self.width].to_vec())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = self.zero();
        for j in 0..self.width {
            v[i * self.width + j] = 1 % self.moduli[i * self.width + j];
        }
        v
    }

    /// Coordinates with a nonzero residue.
    pub fn support(&self, v: &[u32]) -> Vec<usize> {
        (0..self.dim).filter(|&i| v[i * self.width..(i + 1) * self.width].iter().any(|&x| x != 0)).collect()
    }

    /// All vectors supported on `coords`, in mixed-radix order, or `None`
    /// when there would be more than `cap` of them.
    pub fn enumerate_on(&self, coords: &[usize], cap: usize) -> Option<Vec<Vec<u32>>> {
        let slots: Vec<usize> = coords.iter().flat_map(|&i| (0..self.width).map(move |j| i * self.width + j)).collect();
        let total = slots.iter().try_fold(1usize, |acc, &s| acc.checked_mul(self.moduli[s] as usize))?;
        if total > cap {
            return None;
        }
        let mut out = Vec::with_capacity(total);
        let mut v = self.zero();
        loop {
            out.push(v.clone());
            // Odometer increment, last slot fastest.
            let mut k = slots.len();
            loop {
                if k == 0 {
                    return Some(out);
                }
                k -= 1;
                let s = slots[k];
                v[s] += 1;
                if v[s] < self.moduli[s] {
                    break;
                }
                v[s] = 0;
            }
        }
    }
}

/// An ideal of a coefficient ring, stored as its explicit member set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ambient: CoeffRing,
    generators: Vec<Scalar>,
    members: BTreeSet<Scalar>,
}

impl Ideal {
    /// The ideal generated by `generators`: all sums Σ aᵢ gᵢ.
    pub fn generated_by(ambient: &CoeffRing, generators: Vec<Scalar>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.0.len() != ambient.width()) {
            return Err(Error::InvalidCoeffRing(format!("generator {g} has the wrong width")));
        }
        let mut members = BTreeSet::from([ambient.zero()]);
        let ring = ambient.elements();
        for g in &generators {
            let multiples: Vec<Scalar> = ring.iter().map(|a| ambient.mul(a, g)).collect();
            let current: Vec<Scalar> = members.iter().cloned().collect();
            for x in &current {
                for y in &multiples {
                    members.insert(ambient.add(x, y));
                }
            }
        }
        Ok(Self { ambient: ambient.clone(), generators, members })
    }

    pub fn ambient(&self) -> &CoeffRing {
        &self.ambient
    }

    pub fn generators(&self) -> &[Scalar] {
        &self.generators
    }

    pub fn members(&self) -> &BTreeSet<Scalar> {
        &self.members
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        self.members.contains(x)
    }

    /// A single generator of the ideal. Every ideal of ∏ ℤ/mⱼ is the product
    /// of the principal ideals (gcd of the generators' j-th components, mⱼ).
    pub fn principal_generator(&self) -> Scalar {
        let moduli = self.ambient.moduli();
        Scalar(
            (0..moduli.len())
                .map(|j| {
                    let d = self.generators.iter().fold(moduli[j], |acc, g| gcd(acc, g.0[j]));
                    d % moduli[j]
                })
                .collect(),
        )
    }

    /// Additive order of the principal generator in each component, i.e.
    /// the coordinate orders of R·g ≅ R/ann(g).
    pub fn generator_order(&self) -> Scalar {
        let g = self.principal_generator();
        Scalar(g.0.iter().zip(self.ambient.moduli()).map(|(&x, &m)| m / gcd(m, x)).collect())
    }

    /// The identity of the ideal, found by scanning every member. An ideal
    /// identity is unique when it exists; a second one is reported as an
    /// inconsistency.
    pub fn identity(&self) -> Result<Option<Scalar>> {
        let ring = &self.ambient;
        let mut found = self.members.iter().filter(|u| self.members.iter().all(|x| ring.mul(u, x) == *x));
        let first = found.next().cloned();
        if let Some(second) = found.next() {
            return Err(Error::InternalInconsistency(format!(
                "ideal has two identities {} and {second}",
                first.unwrap()
            )));
        }
        Ok(first)
    }
}

/// Convenience wrapper matching the `ideal_identity` operation.
pub fn ideal_identity(ideal: &Ideal) -> Option<Scalar> {
    ideal.identity().expect("ideal identities are unique")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_six() {
        let r = CoeffRing::zn(6).unwrap();
        let a = r.from_int(4);
        let b = r.from_int(5);
        assert_eq!(r.add(&a, &b), r.from_int(3));
        assert_eq!(r.mul(&a, &b), r.from_int(2));
        assert_eq!(r.neg(&a), r.from_int(2));
        assert_eq!(r.from_int(-1), r.from_int(5));
        assert!(r.is_unit(&b));
        assert!(!r.is_unit(&a));
        assert_eq!(r.elements().len(), 6);
        assert_eq!(r.characteristic(), 6);
    }

    #[test]
    fn product_ring() {
        let r = CoeffRing::new(vec![2, 3]).unwrap();
        assert_eq!(r.cardinality(), 6);
        let els = r.elements();
        assert_eq!(els.len(), 6);
        assert_eq!(els[1], Scalar(vec![0, 1]));
        let units = r.component_units();
        assert_eq!(r.mul(&units[0], &units[1]), r.zero());
        assert_eq!(r.add(&units[0], &units[1]), r.one());
        assert_eq!(r.characteristic(), 6);
        assert!(CoeffRing::new(vec![1]).is_err());
        assert!(CoeffRing::new(vec![]).is_err());
    }

    // Oracle: brute force over all members for u with u·x = x.
    fn brute_identity(ring: &CoeffRing, members: &BTreeSet<Scalar>) -> Vec<Scalar> {
        members.iter().filter(|u| members.iter().all(|x| ring.mul(u, x) == *x)).cloned().collect()
    }

    #[test]
    fn ideal_identities() {
        let z6 = CoeffRing::zn(6).unwrap();
        let b = Ideal::generated_by(&z6, vec![z6.from_int(2)]).unwrap();
        let members: Vec<u32> = b.members().iter().map(|s| s.0[0]).collect();
        assert_eq!(members, vec![0, 2, 4]);
        assert_eq!(brute_identity(&z6, b.members()), vec![z6.from_int(4)]);
        assert_eq!(ideal_identity(&b), Some(z6.from_int(4)));

        let z4 = CoeffRing::zn(4).unwrap();
        let b4 = Ideal::generated_by(&z4, vec![z4.from_int(2)]).unwrap();
        assert_eq!(b4.members().len(), 2);
        assert_eq!(ideal_identity(&b4), None);

        let whole = Ideal::generated_by(&z6, vec![z6.one()]).unwrap();
        assert_eq!(ideal_identity(&whole), Some(z6.one()));
    }

    #[test]
    fn principal_generators() {
        let z6 = CoeffRing::zn(6).unwrap();
        let b = Ideal::generated_by(&z6, vec![z6.from_int(4), z6.from_int(2)]).unwrap();
        assert_eq!(b.principal_generator(), z6.from_int(2));
        assert_eq!(b.generator_order(), Scalar(vec![3]));
        let r = CoeffRing::new(vec![4, 6]).unwrap();
        let i = Ideal::generated_by(&r, vec![Scalar(vec![2, 3]), Scalar(vec![0, 2])]).unwrap();
        assert_eq!(i.principal_generator(), Scalar(vec![2, 1]));
        // Oracle: the principal ideal has the same members.
        let p = Ideal::generated_by(&r, vec![i.principal_generator()]).unwrap();
        assert_eq!(p.members(), i.members());
    }

    #[test]
    fn coord_space_with_torsion() {
        let z6 = CoeffRing::zn(6).unwrap();
        let sp = CoordSpace::with_orders(&z6, &[Scalar(vec![6]), Scalar(vec![3])]).unwrap();
        assert_eq!(sp.cardinality(), 18);
        let v = vec![5, 2];
        assert_eq!(sp.add(&v, &[1, 2]), vec![0, 1]);
        assert_eq!(sp.neg(&v), vec![1, 1]);
        assert_eq!(sp.scale(&z6.from_int(3), &v), vec![3, 0]);
        assert_eq!(sp.enumerate_on(&[1], 10).unwrap().len(), 3);
        assert_eq!(sp.enumerate_on(&[0, 1], 10), None);
        assert!(CoordSpace::with_orders(&z6, &[Scalar(vec![4])]).is_err());
    }

    #[test]
    fn product_space_vectors() {
        let r = CoeffRing::new(vec![2, 3]).unwrap();
        let sp = CoordSpace::free(&r, 2);
        let v = vec![1, 2, 0, 1];
        assert_eq!(sp.add(&v, &[1, 2, 1, 1]), vec![0, 1, 1, 2]);
        assert_eq!(sp.scale(&Scalar(vec![1, 2]), &v), vec![1, 1, 0, 2]);
        assert_eq!(sp.coord(&v, 1), Scalar(vec![0, 1]));
        assert_eq!(sp.support(&[0, 0, 1, 0]), vec![1]);
        assert_eq!(sp.enumerate_on(&[0, 1], 100).unwrap().len(), 36);
    }

    #[test]
    fn ideal_identity_is_central_idempotent() {
        for m in 2..=30u32 {
            let ring = CoeffRing::zn(m).unwrap();
            for g in 0..m {
                let ideal = Ideal::generated_by(&ring, vec![ring.from_int(g as i64)]).unwrap();
                if let Some(u) = ideal_identity(&ideal) {
                    assert_eq!(ring.mul(&u, &u), u, "m = {m}, g = {g}");
                    assert!(ideal.contains(&u));
                }
            }
        }
    }
}
