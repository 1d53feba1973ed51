//! Finite groups given by Cayley tables.
//!
//! Elements are dense indices `0..order`. Cyclic groups use the residue as
//! the index, so `cyclic_group(8)` has identity `0` and `2 ∘ 2 = 4`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Index of a group element.
pub type GroupElem = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    identity: GroupElem,
    table: Vec<Vec<GroupElem>>,
    inv: Vec<GroupElem>,
    cyclic: bool,
}

impl FiniteGroup {
    /// Validates a composition table: closure, associativity on all triples,
    /// a two-sided identity and two-sided inverses.
    pub fn from_table(table: Vec<Vec<GroupElem>>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for (g, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidGroup(format!("row {g} has length {}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= order) {
                return Err(Error::InvalidGroup(format!("entry {x} in row {g} out of range")));
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("not associative on ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let inv = (0..order)
            .map(|g| {
                (0..order)
                    .find(|&h| table[g][h] == identity && table[h][g] == identity)
                    .ok_or_else(|| Error::InvalidGroup(format!("element {g} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { order, identity, table, inv, cyclic: false })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> GroupElem {
        self.identity
    }

    pub fn op(&self, g: GroupElem, h: GroupElem) -> GroupElem {
        self.table[g][h]
    }

    pub fn inv(&self, g: GroupElem) -> GroupElem {
        self.inv[g]
    }

    pub fn table(&self) -> &[Vec<GroupElem>] {
        &self.table
    }

    /// True when the group was produced by [`cyclic_group`].
    pub fn is_cyclic_presentation(&self) -> bool {
        self.cyclic
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElem> {
        0..self.order
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_closure(&self, gens: &BTreeSet<GroupElem>) -> BTreeSet<GroupElem> {
        let mut set: BTreeSet<GroupElem> = BTreeSet::from([self.identity]);
        let mut frontier: Vec<GroupElem> = gens.iter().copied().collect();
        while let Some(x) = frontier.pop() {
            if !set.insert(x) {
                continue;
            }
            frontier.push(self.inv(x));
            let current: Vec<_> = set.iter().copied().collect();
            for y in current {
                frontier.push(self.op(x, y));
                frontier.push(self.op(y, x));
            }
        }
        set
    }

    /// `true` iff `subset` contains the identity and is closed under
    /// composition and inverses.
    pub fn is_subgroup(&self, subset: &BTreeSet<GroupElem>) -> bool {
        subset.contains(&self.identity)
            && subset.iter().all(|&g| subset.contains(&self.inv(g)))
            && subset.iter().all(|&g| subset.iter().all(|&h| subset.contains(&self.op(g, h))))
    }
}

/// The additive group ℤ/n.
pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidGroup("cyclic group of order 0".into()));
    }
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let mut group = FiniteGroup::from_table(table)?;
    group.cyclic = true;
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn cyclic_basics() {
        let trivial = cyclic_group(1).unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.identity(), 0);
        let z4 = cyclic_group(4).unwrap();
        assert_eq!(z4.op(2, 2), 0);
        let z8 = cyclic_group(8).unwrap();
        assert_eq!(z8.inv(2), 6);
        assert!(cyclic_group(0).is_err());
    }

    #[test]
    fn closures() {
        let z4 = cyclic_group(4).unwrap();
        let z8 = cyclic_group(8).unwrap();
        assert_eq!(z4.subgroup_closure(&set(&[2])), set(&[0, 2]));
        assert_eq!(z8.subgroup_closure(&set(&[2])), set(&[0, 2, 4, 6]));
        assert_eq!(z8.subgroup_closure(&set(&[])), set(&[0]));
        assert_eq!(z8.subgroup_closure(&set(&[6, 4])), set(&[0, 2, 4, 6]));
    }

    #[test]
    fn subgroup_predicate() {
        let z4 = cyclic_group(4).unwrap();
        assert!(z4.is_subgroup(&set(&[0, 2])));
        assert!(!z4.is_subgroup(&set(&[0, 1, 2])));
        assert!(!z4.is_subgroup(&set(&[2])));
        let z2 = cyclic_group(2).unwrap();
        assert!(z2.is_subgroup(&set(&[0, 1])));
    }

    #[test]
    fn non_abelian_table() {
        // S3 with elements e, r, r², s, sr, sr² encoded as permutations of {0,1,2}.
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms.iter().map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect()).collect();
        let s3 = FiniteGroup::from_table(table).unwrap();
        assert_eq!(s3.identity(), 0);
        assert_eq!(s3.subgroup_closure(&set(&[1])), set(&[0, 1, 2]));
        assert_eq!(s3.subgroup_closure(&set(&[1, 3])).len(), 6);
        assert!(s3.op(1, 3) != s3.op(3, 1));
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 2], vec![1, 0]]).is_err());
        assert!(FiniteGroup::from_table(vec![]).is_err());
    }
}
