//! Witness-tracked additive closures.
//!
//! A closure is the smallest additive subgroup containing a generator list
//! and stable under a list of additive actions (scalar multiplication,
//! left/right multiplication by ring elements, module actions). Every
//! member records how it was produced, so membership claims can be replayed
//! and factorizations read back out.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::coeff::{CoordSpace, Scalar};
use crate::error::{Error, Result};

/// Default upper bound on the number of members of a closure.
pub const DEFAULT_CLOSURE_CAP: usize = 2_000_000;

/// An additive map applied during closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureAction {
    /// Multiplication by a scalar of the coefficient ring.
    Scalar(Scalar),
    /// Left multiplication by a fixed ring element.
    Left(Vec<u32>),
    /// Right multiplication by a fixed ring element.
    Right(Vec<u32>),
}

/// How a member was obtained. Indices refer to earlier members, generators
/// or actions, so evaluating in member order replays the whole closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    Zero,
    Generator(usize),
    Sum(usize, usize),
    Act { action: usize, member: usize },
}

#[derive(Debug, Clone)]
pub struct WitnessedModule {
    generators: Vec<Vec<u32>>,
    actions: Vec<ClosureAction>,
    members: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    witness: Vec<Witness>,
    spanning: Vec<usize>,
}

impl WitnessedModule {
    /// Closes `generators` under addition and `actions`.
    pub fn close<F>(
        space: &CoordSpace,
        generators: Vec<Vec<u32>>,
        actions: Vec<ClosureAction>,
        apply: F,
        cap: usize,
    ) -> Result<Self>
    where
        F: Fn(&ClosureAction, &[u32]) -> Vec<u32>,
    {
        let zero = space.zero();
        let mut module = Self {
            generators,
            actions,
            members: Vec::new(),
            index: HashMap::new(),
            witness: Vec::new(),
            spanning: Vec::new(),
        };
        module.insert(zero, Witness::Zero, cap)?;

        let mut pending: VecDeque<(Vec<u32>, Witness)> =
            module.generators.iter().enumerate().map(|(i, g)| (g.clone(), Witness::Generator(i))).collect();

        while let Some((v, w)) = pending.pop_front() {
            if module.index.contains_key(&v) {
                continue;
            }
            // H_new = H_old + ⟨v⟩, built one coset y_k + H_old at a time.
            let base = module.members.len();
            let v_id = module.insert(v.clone(), w, cap)?;
            module.spanning.push(v_id);
            let mut yk = v_id;
            loop {
                for h in 1..base {
                    let sum = space.add(&module.members[h], &module.members[yk]);
                    module.insert(sum, Witness::Sum(h, yk), cap)?;
                }
                let next = space.add(&module.members[yk], &v);
                if module.index.contains_key(&next) {
                    break;
                }
                yk = module.insert(next, Witness::Sum(yk, v_id), cap)?;
            }
            for (a, action) in module.actions.iter().enumerate() {
                pending.push_back((apply(action, &v), Witness::Act { action: a, member: v_id }));
            }
        }
        Ok(module)
    }

    /// Additive span of `generators` over the coefficient ring.
    pub fn span(space: &CoordSpace, generators: Vec<Vec<u32>>, cap: usize) -> Result<Self> {
        let actions = scalar_actions(space.width());
        Self::close(
            space,
            generators,
            actions,
            |a, v| match a {
                ClosureAction::Scalar(c) => space.scale(c, v),
                _ => unreachable!("span only uses scalar actions"),
            },
            cap,
        )
    }

    fn insert(&mut self, v: Vec<u32>, w: Witness, cap: usize) -> Result<usize> {
        if self.members.len() >= cap {
            return Err(Error::CapExceeded { limit: cap });
        }
        let id = self.members.len();
        let prev = self.index.insert(v.clone(), id);
        debug_assert!(prev.is_none(), "closure inserted a duplicate member");
        self.members.push(v);
        self.witness.push(w);
        Ok(id)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Vec<u32>] {
        &self.members
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn actions(&self) -> &[ClosureAction] {
        &self.actions
    }

    pub fn witness(&self, id: usize) -> Witness {
        self.witness[id]
    }

    /// Members that were added as new additive generators.
    pub fn spanning(&self) -> &[usize] {
        &self.spanning
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.index.contains_key(v)
    }

    pub fn id_of(&self, v: &[u32]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn member_set(&self) -> HashSet<&[u32]> {
        self.members.iter().map(|m| m.as_slice()).collect()
    }

    /// Set equality of members.
    pub fn same_members(&self, other: &WitnessedModule) -> bool {
        self.len() == other.len() && self.members.iter().all(|m| other.contains(m))
    }

    /// Re-evaluates every witness and compares with the stored member.
    /// Returns the first member whose witness does not replay.
    pub fn replay<F>(&self, space: &CoordSpace, apply: F) -> std::result::Result<(), usize>
    where
        F: Fn(&ClosureAction, &[u32]) -> Vec<u32>,
    {
        let mut values: Vec<Vec<u32>> = Vec::with_capacity(self.len());
        for (id, w) in self.witness.iter().enumerate() {
            let v = match *w {
                Witness::Zero => vec![0; self.members[0].len()],
                Witness::Generator(i) => self.generators[i].clone(),
                Witness::Sum(a, b) => space.add(&values[a], &values[b]),
                Witness::Act { action, member } => apply(&self.actions[action], &values[member]),
            };
            if v != self.members[id] {
                return Err(id);
            }
            values.push(v);
        }
        Ok(())
    }

    /// Folds the witness DAG below `id` bottom-up. Only the members `id`
    /// depends on are visited; shared sub-witnesses are evaluated once.
    pub fn fold<T, L, S, A>(&self, id: usize, zero: T, leaf: L, sum: S, act: A) -> T
    where
        T: Clone,
        L: Fn(usize) -> T,
        S: Fn(&T, &T) -> T,
        A: Fn(&ClosureAction, &T) -> T,
    {
        let mut needed = vec![false; id + 1];
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            if needed[x] {
                continue;
            }
            needed[x] = true;
            match self.witness[x] {
                Witness::Sum(a, b) => stack.extend([a, b]),
                Witness::Act { member, .. } => stack.push(member),
                Witness::Zero | Witness::Generator(_) => {}
            }
        }
        let mut values: HashMap<usize, T> = HashMap::new();
        for x in (0..=id).filter(|&x| needed[x]) {
            let v = match self.witness[x] {
                Witness::Zero => zero.clone(),
                Witness::Generator(i) => leaf(i),
                Witness::Sum(a, b) => sum(&values[&a], &values[&b]),
                Witness::Act { action, member } => act(&self.actions[action], &values[&member]),
            };
            values.insert(x, v);
        }
        values.remove(&id).expect("root is evaluated last")
    }
}

/// Scalar actions needed for closure under the coefficient ring. For ℤ/m
/// the integer multiples already give every scalar multiple.
pub fn scalar_actions(width: usize) -> Vec<ClosureAction> {
    if width == 1 {
        return Vec::new();
    }
    (0..width)
        .map(|j| {
            let mut r = vec![0; width];
            r[j] = 1;
            ClosureAction::Scalar(Scalar(r))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffRing;

    #[test]
    fn span_in_z6() {
        let r = CoeffRing::zn(6).unwrap();
        let sp = CoordSpace::free(&r, 2);
        let m = WitnessedModule::span(&sp, vec![vec![2, 0], vec![0, 3]], 100).unwrap();
        assert_eq!(m.len(), 6);
        assert!(m.contains(&[4, 3]));
        assert!(!m.contains(&[1, 0]));
        assert!(m.replay(&sp, |_, v| v.to_vec()).is_ok());
    }

    #[test]
    fn span_in_product_ring_uses_component_units() {
        let r = CoeffRing::new(vec![2, 3]).unwrap();
        let sp = CoordSpace::free(&r, 1);
        // The single vector (1,1) spans all of ℤ/2 × ℤ/3 (it is a unit).
        let m = WitnessedModule::span(&sp, vec![vec![1, 1]], 100).unwrap();
        assert_eq!(m.len(), 6);
        let apply = |a: &ClosureAction, v: &[u32]| match a {
            ClosureAction::Scalar(c) => sp.scale(c, v),
            _ => unreachable!(),
        };
        assert!(m.replay(&sp, apply).is_ok());
    }

    #[test]
    fn empty_generators_give_zero() {
        let r = CoeffRing::zn(5).unwrap();
        let m = WitnessedModule::span(&CoordSpace::free(&r, 3), vec![], 10).unwrap();
        assert_eq!(m.len(), 1);
        assert!(m.contains(&[0, 0, 0]));
    }

    #[test]
    fn cap_is_enforced() {
        let r = CoeffRing::zn(7).unwrap();
        let sp = CoordSpace::free(&r, 2);
        let err = WitnessedModule::span(&sp, vec![vec![1, 0], vec![0, 1]], 10).unwrap_err();
        assert_eq!(err, Error::CapExceeded { limit: 10 });
    }

    #[test]
    fn fold_counts_generator_uses() {
        let r = CoeffRing::zn(5).unwrap();
        let m = WitnessedModule::span(&CoordSpace::free(&r, 1), vec![vec![1]], 10).unwrap();
        // Every member k is the k-fold sum of the generator.
        for (id, v) in m.members().iter().enumerate() {
            let count = m.fold(id, 0u32, |_| 1, |a, b| a + b, |_, x| *x);
            assert_eq!(count % 5, v[0]);
        }
    }
}
