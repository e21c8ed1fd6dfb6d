//! Associates, atoms, présimplifiability, ACCP and atomicity.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{principal_ideals, Elem, FiniteRing, Ideal};
use crate::set::{longest_chain, ElementSet};

/// Associate classes `a ~ b <=> <a> = <b>`, numbered by smallest member.
#[derive(Debug, Clone)]
pub struct AssociateClasses {
    class: Vec<u32>,
    rep: Vec<Elem>,
}

impl AssociateClasses {
    pub fn of(r: &FiniteRing) -> Self {
        let mut ids: HashMap<ElementSet, u32> = HashMap::new();
        let mut class = Vec::with_capacity(r.size());
        let mut rep = Vec::new();
        for a in r.elements() {
            let p = Ideal::principal(r, a).members().clone();
            let next = ids.len() as u32;
            let id = *ids.entry(p).or_insert(next);
            if id == next {
                rep.push(a);
            }
            class.push(id);
        }
        AssociateClasses { class, rep }
    }

    pub fn same(&self, a: Elem, b: Elem) -> bool {
        self.class[a] == self.class[b]
    }

    /// Smallest element associate to `a`.
    pub fn canonical(&self, a: Elem) -> Elem {
        self.rep[self.class[a] as usize]
    }

    pub fn count(&self) -> usize {
        self.rep.len()
    }
}

pub fn associate_classes(r: &FiniteRing) -> AssociateClasses {
    AssociateClasses::of(r)
}

pub fn associates(r: &FiniteRing, a: Elem, b: Elem) -> bool {
    Ideal::principal(r, a) == Ideal::principal(r, b)
}

/// Atom test by scanning every factorization `a = b c`.
pub fn is_atom(r: &FiniteRing, a: Elem) -> Result<bool> {
    if r.is_unit(a) {
        return Err(Error::InvalidQuery(format!("{} is a unit", r.label(a))));
    }
    let pa = Ideal::principal(r, a);
    let mut cache: HashMap<Elem, bool> = HashMap::new();
    let mut assoc = |x: Elem| *cache.entry(x).or_insert_with(|| Ideal::principal(r, x) == pa);
    for b in r.elements() {
        for c in b..r.size() {
            if r.mul(b, c) == a && !assoc(b) && !assoc(c) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All atoms, 0 included exactly when it qualifies (fields).
pub fn atoms(r: &FiniteRing) -> ElementSet {
    atoms_with(r, &AssociateClasses::of(r))
}

pub(crate) fn atoms_with(r: &FiniteRing, classes: &AssociateClasses) -> ElementSet {
    let mut broken = ElementSet::empty(r.size());
    for b in r.elements() {
        for c in b..r.size() {
            let a = r.mul(b, c);
            if !r.is_unit(a) && !classes.same(a, b) && !classes.same(a, c) {
                broken.insert(a);
            }
        }
    }
    let mut out = r.nonunits();
    for a in broken.iter() {
        out.remove(a);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresimplifiableReport {
    pub presimplifiable: bool,
    /// `(a, b)` with `a != 0`, `b` a nonunit and `a = a b`; `b` is minimal,
    /// then `a`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(Elem, Elem)>,
}

/// Direct scan for `a = a b` with `a != 0` and `b` a nonunit.
pub fn presimplifiable_pair_scan(r: &FiniteRing) -> PresimplifiableReport {
    for b in r.nonunits().iter() {
        for a in 1..r.size() {
            if r.mul(a, b) == a {
                return PresimplifiableReport {
                    presimplifiable: false,
                    witness: Some((a, b)),
                };
            }
        }
    }
    PresimplifiableReport {
        presimplifiable: true,
        witness: None,
    }
}

/// Présimplifiability, decided by the pair scan and by self-loops of the
/// divisor graph; the two must agree.
pub fn is_presimplifiable(r: &FiniteRing) -> PresimplifiableReport {
    let graph = super::DivisorGraph::of_ring(r);
    presimplifiable_checked(r, &graph)
}

pub(crate) fn presimplifiable_checked(r: &FiniteRing, graph: &super::DivisorGraph) -> PresimplifiableReport {
    let report = presimplifiable_pair_scan(r);
    assert_eq!(
        report.presimplifiable,
        graph.self_loops().is_empty(),
        "pair scan and divisor-graph self-loops disagree on {}",
        r.name()
    );
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AccpCertificate {
    pub accp: bool,
    /// Longest strict chain of principal ideals, counted in inclusions.
    pub chain_height: usize,
}

pub fn accp_height(r: &FiniteRing) -> AccpCertificate {
    let sets: Vec<ElementSet> = principal_ideals(r).into_iter().map(|i| i.members().clone()).collect();
    AccpCertificate {
        accp: true,
        chain_height: longest_chain(&sets),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtomicityReport {
    pub atomic: bool,
    /// Smallest nonzero nonunit that is no product of atoms.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Elem>,
}

pub fn is_atomic(r: &FiniteRing) -> AtomicityReport {
    atomic_with(r, &atoms(r))
}

/// Closes the nonzero atoms under multiplication by atoms and compares the
/// result with the nonzero nonunits.
pub(crate) fn atomic_with(r: &FiniteRing, atoms: &ElementSet) -> AtomicityReport {
    let atom_list: Vec<Elem> = atoms.iter().filter(|&a| a != 0).collect();
    let mut products = ElementSet::from_elements(r.size(), atom_list.iter().copied());
    let mut frontier = atom_list.clone();
    while let Some(p) = frontier.pop() {
        for &q in &atom_list {
            let pq = r.mul(p, q);
            if pq != 0 && products.insert(pq) {
                frontier.push(pq);
            }
        }
    }
    let witness = r.nonunits().iter().find(|&a| a != 0 && !products.contains(a));
    AtomicityReport {
        atomic: witness.is_none(),
        witness,
    }
}

/// Every multiset of atoms with product `a`, each atom replaced by the
/// smallest member of its associate class; sorted.
pub fn atom_factorizations(r: &FiniteRing, a: Elem) -> Result<Vec<Vec<Elem>>> {
    if a == 0 || r.is_unit(a) {
        return Err(Error::InvalidQuery(format!("{} is zero or a unit", r.label(a))));
    }
    let graph = super::DivisorGraph::of_ring(r);
    if graph.max_length(a) == Some(super::Length::Unbounded) {
        return Err(Error::UnboundedElement(a));
    }
    let classes = AssociateClasses::of(r);
    let atoms = atoms_with(r, &classes);
    let atom_list: Vec<Elem> = atoms.iter().filter(|&q| q != 0).collect();
    let mut memo: HashMap<Elem, Vec<Vec<Elem>>> = HashMap::new();
    Ok(factor_into_atoms(r, &graph, &classes, &atoms, &atom_list, a, &mut memo))
}

fn factor_into_atoms(
    r: &FiniteRing,
    graph: &super::DivisorGraph,
    classes: &AssociateClasses,
    atoms: &ElementSet,
    atom_list: &[Elem],
    x: Elem,
    memo: &mut HashMap<Elem, Vec<Vec<Elem>>>,
) -> Vec<Vec<Elem>> {
    if let Some(done) = memo.get(&x) {
        return done.clone();
    }
    let mut out = std::collections::BTreeSet::new();
    if atoms.contains(x) {
        out.insert(vec![classes.canonical(x)]);
    }
    // x = q t with q an atom and t a nonzero nonunit
    let targets: Vec<Elem> = graph.successors(x).filter(|&t| !r.is_unit(t)).collect();
    for t in targets {
        let heads: Vec<Elem> = atom_list.iter().copied().filter(|&q| r.mul(q, t) == x).collect();
        if heads.is_empty() {
            continue;
        }
        let tails = factor_into_atoms(r, graph, classes, atoms, atom_list, t, memo);
        for q in heads {
            for tail in &tails {
                let mut m = tail.clone();
                let c = classes.canonical(q);
                let pos = m.partition_point(|&e| e < c);
                m.insert(pos, c);
                out.insert(m);
            }
        }
    }
    let result: Vec<Vec<Elem>> = out.into_iter().collect();
    memo.insert(x, result.clone());
    result
}
