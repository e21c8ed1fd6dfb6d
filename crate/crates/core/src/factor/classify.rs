//! Bounded and unique factorization, and the Bouvier classification.

use serde::Serialize;

use super::atoms::{atomic_with, atoms_with, presimplifiable_checked, AssociateClasses};
use super::{DivisorGraph, Length, LengthWitness};
use crate::error::{Error, Result};
use crate::module::FiniteModule;
use crate::ring::{is_field, is_local, is_spir, local_maximal_ideal, Elem, FiniteRing};

/// Longest nonunit factorization of a nonzero nonunit `a`, with witness.
pub fn max_factorization_length(r: &FiniteRing, a: Elem) -> Result<(Length, LengthWitness)> {
    if a == 0 || a >= r.size() || r.is_unit(a) {
        return Err(Error::InvalidQuery(format!(
            "length is defined for nonzero nonunits, got {a}"
        )));
    }
    let g = DivisorGraph::of_ring(r);
    let length = g.max_length(a).expect("nonzero nonunits are terminal nodes");
    Ok((length, g.witness(a).expect("nonzero nonunits are terminal nodes")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BfrReport {
    pub bfr: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LengthWitness>,
}

pub fn is_bfr(r: &FiniteRing) -> BfrReport {
    bfr_with(r, &DivisorGraph::of_ring(r))
}

/// A failing verdict is witnessed by the présimplifiable counterexample
/// when there is one, else by the smallest unbounded element.
pub(crate) fn bfr_with(r: &FiniteRing, g: &DivisorGraph) -> BfrReport {
    if g.is_bounded() {
        return BfrReport { bfr: true, witness: None };
    }
    let pre = presimplifiable_checked(r, g);
    let element = match pre.witness {
        Some((a, _)) => a,
        None => g.first_unbounded().expect("unbounded graph has an unbounded node"),
    };
    BfrReport {
        bfr: false,
        witness: g.witness(element),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BfmReport {
    pub bfm: bool,
    /// `(x, bound)` for every nonzero `x` when bounded.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub bounds: Vec<(Elem, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LengthWitness>,
}

pub fn is_bfm(m: &FiniteModule) -> BfmReport {
    let g = DivisorGraph::of_module(m);
    if let Some(x) = g.first_unbounded() {
        return BfmReport {
            bfm: false,
            bounds: Vec::new(),
            witness: g.witness(x),
        };
    }
    let bounds = (1..m.size())
        .map(|x| (x, g.max_length(x).and_then(Length::finite).unwrap_or(0)))
        .collect();
    BfmReport {
        bfm: true,
        bounds,
        witness: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UfrWitness {
    Unbounded { witness: LengthWitness },
    NotAtomic { element: Elem },
    /// Two atom factorizations of `element` with different canonical
    /// multisets.
    TwoFactorizations {
        element: Elem,
        first: Vec<Elem>,
        second: Vec<Elem>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UfrReport {
    pub ufr: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<UfrWitness>,
}

pub fn is_ufr_direct(r: &FiniteRing) -> UfrReport {
    let g = DivisorGraph::of_ring(r);
    let classes = AssociateClasses::of(r);
    ufr_with(r, &g, &classes)
}

/// UFR decided from the definition: bounded, atomic, and one canonical atom
/// multiset per nonzero nonunit. Multisets are propagated in order of
/// increasing maximal length, keeping at most two per element.
pub(crate) fn ufr_with(r: &FiniteRing, g: &DivisorGraph, classes: &AssociateClasses) -> UfrReport {
    let bfr = bfr_with(r, g);
    if !bfr.bfr {
        return UfrReport {
            ufr: false,
            witness: bfr.witness.map(|witness| UfrWitness::Unbounded { witness }),
        };
    }
    let atoms = atoms_with(r, classes);
    let atomic = atomic_with(r, &atoms);
    if let Some(element) = atomic.witness {
        return UfrReport {
            ufr: false,
            witness: Some(UfrWitness::NotAtomic { element }),
        };
    }
    // (canonical multiset, factors realizing it)
    type Entry = (Vec<Elem>, Vec<Elem>);
    let mut found: Vec<Vec<Entry>> = vec![Vec::new(); r.size()];
    let atom_list: Vec<Elem> = atoms.iter().filter(|&a| a != 0).collect();
    for &a in &atom_list {
        found[a].push((vec![classes.canonical(a)], vec![a]));
    }
    let mut order: Vec<Elem> = r.nonunits().iter().filter(|&a| a != 0).collect();
    order.sort_by_key(|&a| (g.max_length(a).and_then(Length::finite).unwrap_or(0), a));
    for &b in &order {
        if found[b].is_empty() {
            continue;
        }
        let here = found[b].clone();
        for &q in &atom_list {
            let a = r.mul(q, b);
            if a == 0 {
                continue;
            }
            let cq = classes.canonical(q);
            for (canon, factors) in &here {
                if found[a].len() >= 2 {
                    break;
                }
                let mut c = canon.clone();
                c.insert(c.partition_point(|&e| e < cq), cq);
                if found[a].iter().any(|(x, _)| *x == c) {
                    continue;
                }
                let mut f = Vec::with_capacity(factors.len() + 1);
                f.push(q);
                f.extend_from_slice(factors);
                found[a].push((c, f));
            }
        }
    }
    let clash = (1..r.size()).find(|&a| found[a].len() >= 2);
    match clash {
        Some(element) => UfrReport {
            ufr: false,
            witness: Some(UfrWitness::TwoFactorizations {
                element,
                first: found[element][0].1.clone(),
                second: found[element][1].1.clone(),
            }),
        },
        None => UfrReport { ufr: true, witness: None },
    }
}

/// The branches of Bouvier's characterization of finite UFRs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BouvierClass {
    #[serde(rename = "field-UFD")]
    FieldUfd,
    #[serde(rename = "local-squarezero")]
    LocalSquareZero,
    #[serde(rename = "SPIR")]
    Spir,
    #[serde(rename = "none")]
    None,
}

impl BouvierClass {
    pub fn as_str(self) -> &'static str {
        match self {
            BouvierClass::FieldUfd => "field-UFD",
            BouvierClass::LocalSquareZero => "local-squarezero",
            BouvierClass::Spir => "SPIR",
            BouvierClass::None => "none",
        }
    }
}

impl std::fmt::Display for BouvierClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Every branch that holds, in the order field, local with `m^2 = 0`, SPIR.
pub fn bouvier_branches(r: &FiniteRing) -> Vec<BouvierClass> {
    let mut out = Vec::new();
    if is_field(r) {
        out.push(BouvierClass::FieldUfd);
    }
    if is_local(r) {
        let m = local_maximal_ideal(r).expect("local ring has a maximal ideal");
        if m.power(r, 2).is_zero() {
            out.push(BouvierClass::LocalSquareZero);
        }
    }
    if is_spir(r) {
        out.push(BouvierClass::Spir);
    }
    out
}

/// The first branch that holds, or `None`.
pub fn bouvier_class(r: &FiniteRing) -> BouvierClass {
    bouvier_branches(r).first().copied().unwrap_or(BouvierClass::None)
}

pub fn is_ufr_bouvier(r: &FiniteRing) -> bool {
    bouvier_class(r) != BouvierClass::None
}
