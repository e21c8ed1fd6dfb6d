use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use super::{Elem, FiniteRing};
use crate::error::{Error, Result};
use crate::set::{subgroup_closure, subgroup_sum, ElementSet};

/// An ideal of a dense ring, stored as its member set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct Ideal {
    members: ElementSet,
}

impl Ideal {
    /// Wraps a member set without checking closure.
    pub fn from_members_unchecked(members: ElementSet) -> Self {
        Ideal { members }
    }

    /// Wraps a member set after checking it is an ideal of `r`.
    pub fn new(r: &FiniteRing, members: ElementSet) -> Result<Self> {
        Self::verify(r, &members)?;
        Ok(Ideal { members })
    }

    /// Checks that `members` contains 0 and is closed under addition and
    /// under multiplication by every ring element.
    pub fn verify(r: &FiniteRing, members: &ElementSet) -> Result<()> {
        if members.universe() != r.size() {
            return Err(Error::InvalidIdeal(format!(
                "member set lives in a carrier of size {}, ring has size {}",
                members.universe(),
                r.size()
            )));
        }
        if !members.contains(0) {
            return Err(Error::InvalidIdeal("does not contain 0".into()));
        }
        for a in members.iter() {
            for b in members.iter() {
                if !members.contains(r.add(a, b)) {
                    return Err(Error::InvalidIdeal(format!("{a} + {b} escapes")));
                }
            }
            for s in r.elements() {
                if !members.contains(r.mul(s, a)) {
                    return Err(Error::InvalidIdeal(format!("{s} * {a} escapes")));
                }
            }
        }
        Ok(())
    }

    pub fn zero(r: &FiniteRing) -> Self {
        Ideal {
            members: ElementSet::from_elements(r.size(), [0]),
        }
    }

    pub fn whole(r: &FiniteRing) -> Self {
        Ideal {
            members: ElementSet::full(r.size()),
        }
    }

    /// `<a> = {r a : r in R}`.
    pub fn principal(r: &FiniteRing, a: Elem) -> Self {
        Ideal {
            members: ElementSet::from_elements(r.size(), r.elements().map(|s| r.mul(s, a))),
        }
    }

    /// Smallest ideal containing `gens`.
    pub fn generated(r: &FiniteRing, gens: impl IntoIterator<Item = Elem>) -> Self {
        let mut scaled = ElementSet::empty(r.size());
        for g in gens {
            for s in r.elements() {
                scaled.insert(r.mul(s, g));
            }
        }
        Ideal {
            members: subgroup_closure(r.size(), scaled.iter(), &|a, b| r.add(a, b)),
        }
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.members.universe()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.members.to_vec()
    }

    pub fn sum(&self, r: &FiniteRing, other: &Ideal) -> Ideal {
        Ideal {
            members: subgroup_sum(&self.members, &other.members, &|a, b| r.add(a, b)),
        }
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        Ideal {
            members: self.members.intersection(&other.members),
        }
    }

    /// The ideal generated by all products `a b` with `a` in `self`, `b` in `other`.
    pub fn product(&self, r: &FiniteRing, other: &Ideal) -> Ideal {
        let mut products = ElementSet::empty(r.size());
        for a in self.members.iter() {
            for b in other.members.iter() {
                products.insert(r.mul(a, b));
            }
        }
        // products already absorb ring multiples, so the additive closure is the ideal
        Ideal {
            members: subgroup_closure(r.size(), products.iter(), &|a, b| r.add(a, b)),
        }
    }

    /// `I^k`, with `I^0 = R`.
    pub fn power(&self, r: &FiniteRing, k: usize) -> Ideal {
        (0..k).fold(Ideal::whole(r), |acc, _| acc.product(r, self))
    }

    /// Checks primality by the pair condition: `I` is proper and
    /// `ab in I` forces `a in I` or `b in I`.
    pub fn is_prime(&self, r: &FiniteRing) -> bool {
        if self.is_whole() {
            return false;
        }
        let outside: Vec<Elem> = self.members.complement().to_vec();
        for (i, &a) in outside.iter().enumerate() {
            for &b in &outside[i..] {
                if self.contains(r.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff some single element generates `self`.
    pub fn is_principal(&self, r: &FiniteRing) -> bool {
        self.members.iter().any(|a| Ideal::principal(r, a) == *self)
    }
}

/// All distinct principal ideals, in order of their smallest generator.
pub fn principal_ideals(r: &FiniteRing) -> Vec<Ideal> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in r.elements() {
        let p = Ideal::principal(r, a);
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out
}

/// The full ideal lattice, obtained by closing the principal ideals under
/// pairwise sums. Fails once more than `cap` ideals are found.
pub fn all_ideals(r: &FiniteRing, cap: usize) -> Result<Vec<Ideal>> {
    let principals = principal_ideals(r);
    close_under_sums(principals, cap, |a, b| a.sum(r, b), "ideal lattice")
}

/// Shared fixpoint for ideal and submodule lattices: every member of the
/// lattice is a sum of cyclic generators, so it suffices to add one
/// generator at a time to each newly found member.
pub(crate) fn close_under_sums<T, F>(cyclic: Vec<T>, cap: usize, sum: F, what: &str) -> Result<Vec<T>>
where
    T: Clone + Ord + std::hash::Hash + SubsetOf,
    F: Fn(&T, &T) -> T,
{
    let mut found: BTreeSet<T> = cyclic.iter().cloned().collect();
    if found.len() > cap {
        return Err(Error::capacity(what, found.len(), cap));
    }
    let mut queue: VecDeque<T> = cyclic.iter().cloned().collect();
    while let Some(current) = queue.pop_front() {
        for g in &cyclic {
            if g.subset_of(&current) {
                continue;
            }
            let next = sum(&current, g);
            if !found.contains(&next) {
                found.insert(next.clone());
                if found.len() > cap {
                    return Err(Error::capacity(what, found.len(), cap));
                }
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<T> = found.into_iter().collect();
    out.sort_by(|a, b| a.cmp_size(b).then_with(|| a.cmp(b)));
    Ok(out)
}

pub(crate) trait SubsetOf {
    fn subset_of(&self, other: &Self) -> bool;
    fn cmp_size(&self, other: &Self) -> std::cmp::Ordering;
}

impl SubsetOf for Ideal {
    fn subset_of(&self, other: &Self) -> bool {
        self.is_subset(other)
    }
    fn cmp_size(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_polyquot, make_zn};

    fn sets(ideals: &[Ideal]) -> Vec<Vec<Elem>> {
        ideals.iter().map(|i| i.to_vec()).collect()
    }

    #[test]
    fn principal_and_generated() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(Ideal::principal(&z6, 2).to_vec(), vec![0, 2, 4]);
        assert_eq!(Ideal::generated(&z6, [2, 3]).len(), 6);
        assert_eq!(Ideal::generated(&z6, []).to_vec(), vec![0]);
        assert_eq!(Ideal::generated(&z6, [4]), Ideal::principal(&z6, 2));
    }

    #[test]
    fn lattices_of_small_rings() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(
            sets(&all_ideals(&z6, 100).unwrap()),
            vec![vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]]
        );
        let z4 = make_zn(4).unwrap();
        assert_eq!(sets(&all_ideals(&z4, 100).unwrap()), vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
        let f4 = make_polyquot(&make_zn(2).unwrap(), &[1, 1, 1]).unwrap();
        assert_eq!(all_ideals(&f4, 100).unwrap().len(), 2);
    }

    #[test]
    fn lattice_needs_sums() {
        // Z2[x,y]/(x^2,y^2): <x> + <y> is not principal
        let z2 = make_zn(2).unwrap();
        let a = make_polyquot(&z2, &[0, 0, 1]).unwrap();
        let b = make_polyquot(&a, &[0, 0, 1]).unwrap();
        let ideals = all_ideals(&b, 1000).unwrap();
        let principal = principal_ideals(&b);
        assert!(ideals.len() > principal.len());
        for i in &ideals {
            Ideal::verify(&b, i.members()).unwrap();
        }
    }

    #[test]
    fn lattice_cap_is_an_error() {
        let z2 = make_zn(2).unwrap();
        let a = make_polyquot(&z2, &[0, 0, 1]).unwrap();
        let b = make_polyquot(&a, &[0, 0, 1]).unwrap();
        assert_eq!(all_ideals(&b, 3).unwrap_err().kind(), "capacity_exceeded");
    }

    #[test]
    fn products_and_powers() {
        let z8 = make_zn(8).unwrap();
        let m = Ideal::principal(&z8, 2);
        assert_eq!(m.power(&z8, 2).to_vec(), vec![0, 4]);
        assert!(m.power(&z8, 3).is_zero());
        assert!(Ideal::zero(&z8).product(&z8, &m).is_zero());
    }

    #[test]
    fn primality() {
        let z6 = make_zn(6).unwrap();
        assert!(Ideal::principal(&z6, 2).is_prime(&z6));
        assert!(Ideal::principal(&z6, 3).is_prime(&z6));
        assert!(!Ideal::zero(&z6).is_prime(&z6));
        assert!(!Ideal::whole(&z6).is_prime(&z6));
        let z5 = make_zn(5).unwrap();
        assert!(Ideal::zero(&z5).is_prime(&z5));
    }
}
