//! Finite modules over dense rings.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{close_under_sums, AxiomViolation, Elem, FiniteRing, Ideal, SubsetOf, DEFAULT_MAX_RING_SIZE};
use crate::set::{longest_chain, subgroup_closure, subgroup_sum, ElementSet};

/// A finite abelian group with a unital action of a dense ring.
#[derive(Clone)]
pub struct FiniteModule {
    ring: Arc<FiniteRing>,
    name: String,
    size: usize,
    add: Vec<u16>,
    neg: Vec<u16>,
    /// `act[r * size + x] = r . x`
    act: Vec<u16>,
    labels: Vec<String>,
}

impl FiniteModule {
    /// Builds a module from element-level operations on `0..size`; 0 is the
    /// zero vector.
    pub fn from_fn(
        ring: Arc<FiniteRing>,
        name: impl Into<String>,
        size: usize,
        add: impl Fn(Elem, Elem) -> Elem,
        act: impl Fn(Elem, Elem) -> Elem,
        labels: Vec<String>,
    ) -> Result<Self> {
        let name = name.into();
        if size == 0 {
            return Err(Error::InvalidConstruction(format!("{name}: empty carrier")));
        }
        if size > crate::ring::TABLE_LIMIT {
            return Err(Error::capacity(format!("table for {name}"), size, crate::ring::TABLE_LIMIT));
        }
        let mut add_t = vec![0u16; size * size];
        for x in 0..size {
            for y in 0..size {
                add_t[x * size + y] = add(x, y) as u16;
            }
        }
        let mut neg = vec![0u16; size];
        for x in 0..size {
            let inv = add_t[x * size..(x + 1) * size]
                .iter()
                .position(|&v| v == 0)
                .ok_or_else(|| Error::InvalidConstruction(format!("{name}: {x} has no additive inverse")))?;
            neg[x] = inv as u16;
        }
        let mut act_t = vec![0u16; ring.size() * size];
        for r in ring.elements() {
            for x in 0..size {
                act_t[r * size + x] = act(r, x) as u16;
            }
        }
        Ok(FiniteModule {
            ring,
            name,
            size,
            add: add_t,
            neg,
            act: act_t,
            labels,
        })
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub(crate) fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    pub fn is_zero_module(&self) -> bool {
        self.size == 1
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.add[x * self.size + y] as Elem
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x] as Elem
    }

    /// Scalar action `r . x`.
    #[inline]
    pub fn act(&self, r: Elem, x: Elem) -> Elem {
        self.act[r * self.size + x] as Elem
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    /// Exhaustively checks the abelian-group and module axioms.
    pub fn check_axioms(&self) -> std::result::Result<(), AxiomViolation> {
        let r = &*self.ring;
        let fail = |axiom, elements: Vec<Elem>| Err(AxiomViolation { axiom, elements });
        for x in self.elements() {
            if self.add(x, 0) != x {
                return fail("additive identity", vec![x]);
            }
            if self.add(x, self.neg(x)) != 0 {
                return fail("additive inverse", vec![x]);
            }
            if self.act(r.one(), x) != x {
                return fail("unital action", vec![x]);
            }
            for y in self.elements() {
                if self.add(x, y) != self.add(y, x) {
                    return fail("additive commutativity", vec![x, y]);
                }
                for z in self.elements() {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                        return fail("additive associativity", vec![x, y, z]);
                    }
                }
                for s in r.elements() {
                    if self.act(s, self.add(x, y)) != self.add(self.act(s, x), self.act(s, y)) {
                        return fail("action distributes over vectors", vec![s, x, y]);
                    }
                }
            }
            for s in r.elements() {
                for t in r.elements() {
                    if self.act(r.add(s, t), x) != self.add(self.act(s, x), self.act(t, x)) {
                        return fail("action distributes over scalars", vec![s, t, x]);
                    }
                    if self.act(r.mul(s, t), x) != self.act(s, self.act(t, x)) {
                        return fail("action associativity", vec![s, t, x]);
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteModule")
            .field("name", &self.name)
            .field("ring", &self.ring.name())
            .field("size", &self.size)
            .finish()
    }
}

/// `R` acting on itself by multiplication.
pub fn make_self_module(r: &Arc<FiniteRing>) -> FiniteModule {
    let ring = Arc::clone(r);
    FiniteModule::from_fn(
        Arc::clone(r),
        "self",
        r.size(),
        |x, y| ring.add(x, y),
        |s, x| ring.mul(s, x),
        r.labels().to_vec(),
    )
    .expect("self module of a valid ring")
}

/// `R^k` with componentwise operations; `(c_0, .., c_{k-1})` has index
/// `sum c_i |R|^i`, so `free(R, 1)` is the self-module.
pub fn make_free(r: &Arc<FiniteRing>, k: usize) -> Result<FiniteModule> {
    make_free_capped(r, k, DEFAULT_MAX_RING_SIZE)
}

pub fn make_free_capped(r: &Arc<FiniteRing>, k: usize, cap: usize) -> Result<FiniteModule> {
    if k == 0 {
        return Err(Error::InvalidConstruction("free module of rank 0".into()));
    }
    let q = r.size();
    let size = (0..k)
        .try_fold(1usize, |acc, _| acc.checked_mul(q).filter(|&n| n <= cap))
        .ok_or_else(|| Error::capacity(format!("free({k}) over {}", r.name()), q.saturating_pow(k as u32), cap))?;
    let decode = |x: Elem| -> Vec<Elem> {
        let mut x = x;
        (0..k)
            .map(|_| {
                let c = x % q;
                x /= q;
                c
            })
            .collect()
    };
    let encode = |c: &[Elem]| -> Elem { c.iter().rev().fold(0, |acc, &v| acc * q + v) };
    let ring = Arc::clone(r);
    let labels = (0..size)
        .map(|x| {
            if k == 1 {
                r.label(x).to_string()
            } else {
                let parts: Vec<&str> = decode(x).iter().map(|&c| r.label(c)).collect();
                format!("[{}]", parts.join(","))
            }
        })
        .collect();
    FiniteModule::from_fn(
        Arc::clone(r),
        format!("free({k})"),
        size,
        |x, y| {
            let (a, b) = (decode(x), decode(y));
            let sum: Vec<Elem> = a.iter().zip(&b).map(|(&u, &v)| ring.add(u, v)).collect();
            encode(&sum)
        },
        |s, x| {
            let scaled: Vec<Elem> = decode(x).iter().map(|&c| ring.mul(s, c)).collect();
            encode(&scaled)
        },
        labels,
    )
}

/// The zero module over `R`.
pub fn make_zero_module(r: &Arc<FiniteRing>) -> FiniteModule {
    FiniteModule::from_fn(Arc::clone(r), "zero", 1, |_, _| 0, |_, _| 0, vec!["0".into()])
        .expect("zero module")
}

/// A submodule, stored as its member set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct Submodule {
    members: ElementSet,
}

impl Submodule {
    pub fn from_members_unchecked(members: ElementSet) -> Self {
        Submodule { members }
    }

    pub fn zero(m: &FiniteModule) -> Self {
        Submodule {
            members: ElementSet::from_elements(m.size(), [0]),
        }
    }

    pub fn whole(m: &FiniteModule) -> Self {
        Submodule {
            members: ElementSet::full(m.size()),
        }
    }

    /// Smallest submodule containing `gens`.
    pub fn generated(m: &FiniteModule, gens: impl IntoIterator<Item = Elem>) -> Self {
        let mut scaled = ElementSet::empty(m.size());
        for g in gens {
            for s in m.ring().elements() {
                scaled.insert(m.act(s, g));
            }
        }
        Submodule {
            members: subgroup_closure(m.size(), scaled.iter(), &|x, y| m.add(x, y)),
        }
    }

    /// `I . N`, the submodule generated by `{i x : i in I, x in N}`.
    pub fn scaled_by(m: &FiniteModule, ideal: &Ideal, n: &Submodule) -> Self {
        let mut products = ElementSet::empty(m.size());
        for i in ideal.members().iter() {
            for x in n.members.iter() {
                products.insert(m.act(i, x));
            }
        }
        Submodule {
            members: subgroup_closure(m.size(), products.iter(), &|x, y| m.add(x, y)),
        }
    }

    pub fn verify(m: &FiniteModule, members: &ElementSet) -> bool {
        members.contains(0)
            && members
                .iter()
                .all(|x| members.iter().all(|y| members.contains(m.add(x, y))))
            && members
                .iter()
                .all(|x| m.ring().elements().all(|s| members.contains(m.act(s, x))))
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
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

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.members.to_vec()
    }

    pub fn sum(&self, m: &FiniteModule, other: &Submodule) -> Submodule {
        Submodule {
            members: subgroup_sum(&self.members, &other.members, &|x, y| m.add(x, y)),
        }
    }
}

impl SubsetOf for Submodule {
    fn subset_of(&self, other: &Self) -> bool {
        self.is_subset(other)
    }
    fn cmp_size(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len())
    }
}

/// `R x = {r x : r in R}`.
pub fn cyclic_submodule(m: &FiniteModule, x: Elem) -> Submodule {
    Submodule {
        members: ElementSet::from_elements(m.size(), m.ring().elements().map(|s| m.act(s, x))),
    }
}

/// `{r : r x = 0}`.
pub fn annihilator_of(m: &FiniteModule, x: Elem) -> Ideal {
    let r = m.ring();
    Ideal::from_members_unchecked(ElementSet::from_elements(
        r.size(),
        r.elements().filter(|&s| m.act(s, x) == 0),
    ))
}

/// `Ann(M) = {r : r M = 0}`.
pub fn module_annihilator(m: &FiniteModule) -> Ideal {
    let r = m.ring();
    Ideal::from_members_unchecked(ElementSet::from_elements(
        r.size(),
        r.elements().filter(|&s| m.elements().all(|x| m.act(s, x) == 0)),
    ))
}

/// Distinct cyclic submodules, in order of their smallest generator.
pub fn cyclic_submodules(m: &FiniteModule) -> Vec<Submodule> {
    let mut seen = std::collections::HashSet::new();
    m.elements()
        .map(|x| cyclic_submodule(m, x))
        .filter(|c| seen.insert(c.clone()))
        .collect()
}

/// All submodules, by closing the cyclic submodules under sums.
pub fn all_submodules(m: &FiniteModule, cap: usize) -> Result<Vec<Submodule>> {
    close_under_sums(cyclic_submodules(m), cap, |a, b| a.sum(m, b), "submodule lattice")
}

/// `M / N` where `N` is generated by `gens`; cosets are represented by
/// their minimal-index member and numbered in that order.
pub fn quotient_module(m: &FiniteModule, gens: &[Elem]) -> Result<FiniteModule> {
    if let Some(&bad) = gens.iter().find(|&&g| g >= m.size()) {
        return Err(Error::InvalidConstruction(format!(
            "generator {bad} outside module of size {}",
            m.size()
        )));
    }
    let n = Submodule::generated(m, gens.iter().copied());
    let mut rep_of = vec![usize::MAX; m.size()];
    let mut reps = Vec::new();
    for x in m.elements() {
        if rep_of[x] != usize::MAX {
            continue;
        }
        let class = reps.len();
        reps.push(x);
        for y in n.members().iter() {
            rep_of[m.add(x, y)] = class;
        }
    }
    let gen_text: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    let labels = reps.iter().map(|&x| m.label(x).to_string()).collect();
    FiniteModule::from_fn(
        Arc::clone(m.ring()),
        format!("mquot({},[{}])", m.name(), gen_text.join(",")),
        reps.len(),
        |a, b| rep_of[m.add(reps[a], reps[b])],
        |s, a| rep_of[m.act(s, reps[a])],
        labels,
    )
}

/// Semisimplicity by the radical criterion `J(R) M = 0`. A finite ring
/// modulo its Jacobson radical is a finite product of fields, over which
/// every module is semisimple.
pub fn is_semisimple(m: &FiniteModule) -> bool {
    let j = crate::ring::jacobson_radical(m.ring());
    let kills = j.members().iter().all(|s| m.elements().all(|x| m.act(s, x) == 0));
    kills
}

/// Semisimplicity straight from the definition: the simple submodules
/// (nonzero cyclic submodules generated by each of their nonzero elements)
/// must sum to `M`.
pub fn is_semisimple_by_definition(m: &FiniteModule, cap: usize) -> Result<bool> {
    if m.size() > cap {
        return Err(Error::capacity("semisimplicity oracle", m.size(), cap));
    }
    let simple: Vec<Submodule> = cyclic_submodules(m)
        .into_iter()
        .filter(|c| !c.is_zero())
        .filter(|c| c.members().iter().filter(|&y| y != 0).all(|y| cyclic_submodule(m, y) == *c))
        .collect();
    let total = simple.iter().fold(Submodule::zero(m), |acc, s| acc.sum(m, s));
    Ok(total.len() == m.size())
}

/// ACC on cyclic submodules holds for every finite module; the certificate
/// is the longest strict chain of cyclic submodules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AcccCertificate {
    pub accc: bool,
    pub chain_height: usize,
}

pub fn is_accc(m: &FiniteModule) -> AcccCertificate {
    let sets: Vec<ElementSet> = cyclic_submodules(m).into_iter().map(|c| c.members).collect();
    AcccCertificate {
        accc: true,
        chain_height: longest_chain(&sets),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_polyquot, make_zn};

    fn zn(n: usize) -> Arc<FiniteRing> {
        Arc::new(make_zn(n).unwrap())
    }

    #[test]
    fn constructions_have_expected_sizes() {
        assert_eq!(make_self_module(&zn(4)).size(), 4);
        assert_eq!(make_free(&zn(2), 3).unwrap().size(), 8);
        let z6 = zn(6);
        let f1 = make_free(&z6, 1).unwrap();
        let s = make_self_module(&z6);
        for x in s.elements() {
            for r in z6.elements() {
                assert_eq!(f1.act(r, x), s.act(r, x));
            }
            for y in s.elements() {
                assert_eq!(f1.add(x, y), s.add(x, y));
            }
        }
        assert_eq!(make_free(&zn(64), 3).unwrap_err().kind(), "capacity_exceeded");
    }

    #[test]
    fn axioms() {
        let z4 = zn(4);
        make_self_module(&z4).check_axioms().unwrap();
        make_free(&z4, 2).unwrap().check_axioms().unwrap();
        quotient_module(&make_self_module(&z4), &[2]).unwrap().check_axioms().unwrap();
        make_zero_module(&z4).check_axioms().unwrap();
    }

    #[test]
    fn quotients() {
        let z4 = zn(4);
        let q = quotient_module(&make_self_module(&z4), &[2]).unwrap();
        assert_eq!(q.size(), 2);
        assert!(q.elements().all(|x| q.act(2, x) == 0));

        let s = make_self_module(&z4);
        let same = quotient_module(&s, &[0]).unwrap();
        assert_eq!(same.size(), 4);

        let z6 = zn(6);
        let q6 = quotient_module(&make_self_module(&z6), &[2]).unwrap();
        assert_eq!(q6.size(), 2);
        // Z6/<2> ~ Z2: odd residues act as identity, even as zero
        for r in z6.elements() {
            assert_eq!(q6.act(r, 1), r % 2);
        }
    }

    #[test]
    fn cyclic_and_annihilators() {
        let z6 = zn(6);
        let s = make_self_module(&z6);
        assert_eq!(cyclic_submodule(&s, 2).to_vec(), vec![0, 2, 4]);
        assert_eq!(annihilator_of(&s, 3).to_vec(), vec![0, 2, 4]);
        assert_eq!(cyclic_submodule(&s, 0).to_vec(), vec![0]);
    }

    #[test]
    fn semisimplicity() {
        let z4 = zn(4);
        let q = quotient_module(&make_self_module(&z4), &[2]).unwrap();
        assert!(is_semisimple(&q));
        assert!(!is_semisimple(&make_self_module(&z4)));
        let f4 = Arc::new(make_polyquot(&make_zn(2).unwrap(), &[1, 1, 1]).unwrap());
        assert!(is_semisimple(&make_free(&f4, 2).unwrap()));
        // Z6 is a product of fields, so every Z6-module is semisimple
        assert!(is_semisimple(&make_self_module(&zn(6))));
    }

    #[test]
    fn semisimplicity_criteria_agree() {
        let z2 = make_zn(2).unwrap();
        let dual = Arc::new(make_polyquot(&z2, &[0, 0, 1]).unwrap());
        let mut modules = Vec::new();
        for n in [2, 3, 4, 6, 8, 9, 12] {
            let r = zn(n);
            modules.push(make_self_module(&r));
            modules.push(make_free(&r, 2).unwrap());
            for g in 0..n {
                modules.push(quotient_module(&make_self_module(&r), &[g]).unwrap());
            }
        }
        modules.push(make_self_module(&dual));
        modules.push(quotient_module(&make_self_module(&dual), &[2]).unwrap());
        for m in &modules {
            assert_eq!(
                is_semisimple(m),
                is_semisimple_by_definition(m, 4096).unwrap(),
                "{} over {}",
                m.name(),
                m.ring().name()
            );
        }
    }

    #[test]
    fn accc_heights() {
        assert_eq!(is_accc(&make_self_module(&zn(8))).chain_height, 3);
        assert_eq!(is_accc(&make_zero_module(&zn(8))).chain_height, 0);
        assert_eq!(is_accc(&make_self_module(&zn(6))).chain_height, 2);
    }

    #[test]
    fn submodule_lattice() {
        let z2 = zn(2);
        let v = make_free(&z2, 2).unwrap();
        // subspaces of F2^2: 0, three lines, whole
        assert_eq!(all_submodules(&v, 100).unwrap().len(), 5);
        for n in all_submodules(&v, 100).unwrap() {
            assert!(Submodule::verify(&v, n.members()));
        }
    }
}
