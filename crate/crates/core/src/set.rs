//! Element sets over a dense carrier, plus subgroup closure in a finite
//! abelian group given by an addition function.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

/// A subset of a dense carrier `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    bits: FixedBitSet,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ElementSet { bits }
    }

    pub fn from_elements(universe: usize, elements: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for e in elements {
            s.insert(e);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, e: usize) -> bool {
        !self.bits.put(e)
    }

    pub fn remove(&mut self, e: usize) {
        self.bits.set(e, false);
    }

    pub fn contains(&self, e: usize) -> bool {
        self.bits.contains(e)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Ascending iteration.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn complement(&self) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        ElementSet { bits }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Enlarges the subgroup `group` to `group + <g>` in place by adding whole
/// cosets `group + k*g` until the multiple of `g` falls back into `group`.
pub(crate) fn adjoin_generator(group: &mut ElementSet, g: usize, add: &impl Fn(usize, usize) -> usize) {
    if group.contains(g) {
        return;
    }
    let base: Vec<usize> = group.to_vec();
    let mut shift = g;
    while !group.contains(shift) {
        for &h in &base {
            group.insert(add(h, shift));
        }
        shift = add(shift, g);
    }
}

/// Subgroup of a finite abelian group generated by `gens`. The identity is
/// assumed to be element 0.
pub(crate) fn subgroup_closure(
    universe: usize,
    gens: impl IntoIterator<Item = usize>,
    add: &impl Fn(usize, usize) -> usize,
) -> ElementSet {
    let mut group = ElementSet::from_elements(universe, [0]);
    for g in gens {
        adjoin_generator(&mut group, g, add);
    }
    group
}

/// Sum `a + b` of two subgroups.
pub(crate) fn subgroup_sum(a: &ElementSet, b: &ElementSet, add: &impl Fn(usize, usize) -> usize) -> ElementSet {
    let (mut big, small) = if a.len() >= b.len() { (a.clone(), b) } else { (b.clone(), a) };
    for g in small.iter() {
        adjoin_generator(&mut big, g, add);
    }
    big
}

/// Longest strict chain (number of proper inclusions) in a family of
/// distinct sets ordered by inclusion.
pub(crate) fn longest_chain(sets: &[ElementSet]) -> usize {
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| sets[i].len());
    let mut height = vec![0usize; sets.len()];
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[..pos] {
            if sets[j].len() < sets[i].len() && sets[j].is_subset(&sets[i]) {
                height[i] = height[i].max(height[j] + 1);
            }
        }
    }
    height.into_iter().max().unwrap_or(0)
}
