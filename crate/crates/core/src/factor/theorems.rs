//! Statement-level checkers tying the predicates to idealizations.

use std::sync::Arc;

use serde::Serialize;

use super::atoms::{accp_height, atoms_with, presimplifiable_checked, AssociateClasses};
use super::classify::{bfr_with, is_bfm, is_bfr, ufr_with, UfrWitness};
use super::zero::u_boundedness_of_zero;
use super::DivisorGraph;
use crate::error::{Error, Result};
use crate::idealization::idealize;
use crate::module::{is_accc, is_semisimple, FiniteModule, Submodule};
use crate::ring::{is_local, is_reduced, local_maximal_ideal, min_primes, Elem, FiniteRing, DEFAULT_MAX_IDEALS};

/// The four conditions that characterize when `R(+)M` is a UFR.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremUfrReport {
    /// (1) `R(+)M` is a UFR, decided from the definition.
    pub ufr: bool,
    /// (2) `R` local, `m^2 = 0` and `mM = 0`.
    pub squarezero_annihilates: bool,
    /// (3) `R` local, `m^2 = 0` and `M` semisimple.
    pub squarezero_semisimple: bool,
    /// (4) `R(+)M` présimplifiable and every nonzero nonunit an atom.
    pub presimplifiable_all_atoms: bool,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ufr_witness: Option<UfrWitness>,
    /// Smallest nonzero nonunit of `R(+)M` that is not an atom.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_atom: Option<Elem>,
}

impl TheoremUfrReport {
    pub fn values(&self) -> [bool; 4] {
        [
            self.ufr,
            self.squarezero_annihilates,
            self.squarezero_semisimple,
            self.presimplifiable_all_atoms,
        ]
    }
}

pub fn check_theorem_ufr(r: &Arc<FiniteRing>, m: &Arc<FiniteModule>) -> Result<TheoremUfrReport> {
    if m.is_zero_module() {
        return Err(Error::InvalidQuery("the module must be nonzero".into()));
    }
    let t = idealize(r, m)?;
    let graph = DivisorGraph::of_ring(&t);
    let classes = AssociateClasses::of(&t);
    let ufr = ufr_with(&t, &graph, &classes);

    let (squarezero, annihilated) = match local_maximal_ideal(r) {
        Some(max) if is_local(r) => {
            let ma = Submodule::scaled_by(m, &max, &Submodule::whole(m));
            (max.power(r, 2).is_zero(), ma.is_zero())
        }
        _ => (false, false),
    };
    let semisimple = is_semisimple(m);

    let atoms = atoms_with(&t, &classes);
    let non_atom = t.nonunits().iter().find(|&a| a != 0 && !atoms.contains(a));
    let pre = presimplifiable_checked(&t, &graph).presimplifiable;

    let values = [
        ufr.ufr,
        squarezero && annihilated,
        squarezero && semisimple,
        pre && non_atom.is_none(),
    ];
    Ok(TheoremUfrReport {
        ufr: values[0],
        squarezero_annihilates: values[1],
        squarezero_semisimple: values[2],
        presimplifiable_all_atoms: values[3],
        agree: values.iter().all(|&v| v == values[0]),
        ufr_witness: ufr.witness,
        non_atom,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Implication {
    pub premise: bool,
    pub conclusion: bool,
}

impl Implication {
    pub fn new(premise: bool, conclusion: bool) -> Self {
        Implication { premise, conclusion }
    }

    pub fn holds(&self) -> bool {
        !self.premise || self.conclusion
    }

    /// The premise is true, so the conclusion was actually tested.
    pub fn exercised(&self) -> bool {
        self.premise
    }
}

/// Bounded factorization passing between `R`, `M` and `R(+)M`:
/// (a) `R(+)M` BFR implies `R` BFR and `M` BFM;
/// (b) `R` BFR, `M` BFM and 0 U-bounded in `R` imply `R(+)M` BFR.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropBfrReport {
    pub ring_bfr: bool,
    pub module_bfm: bool,
    pub idealization_bfr: bool,
    pub zero_u_bounded: bool,
    pub zero_max_minimal_length: usize,
    pub forward: Implication,
    pub backward: Implication,
}

impl PropBfrReport {
    pub fn holds(&self) -> bool {
        self.forward.holds() && self.backward.holds()
    }
}

pub fn check_prop_bfr(r: &Arc<FiniteRing>, m: &Arc<FiniteModule>) -> Result<PropBfrReport> {
    let t = idealize(r, m)?;
    let ring_bfr = is_bfr(r).bfr;
    let module_bfm = is_bfm(m).bfm;
    let idealization_bfr = bfr_with(&t, &DivisorGraph::of_ring(&t)).bfr;
    let zero = u_boundedness_of_zero(r)?;
    Ok(PropBfrReport {
        ring_bfr,
        module_bfm,
        idealization_bfr,
        zero_u_bounded: zero.u_bounded,
        zero_max_minimal_length: zero.max_length,
        forward: Implication::new(idealization_bfr, ring_bfr && module_bfm),
        backward: Implication::new(ring_bfr && module_bfm && zero.u_bounded, idealization_bfr),
    })
}

/// For reduced `R`: the longest minimal factorization of 0 has at most
/// `|Min(R)|` factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LemmaBound {
    pub max_minimal_length: usize,
    pub minimal_primes: usize,
    pub holds: bool,
    pub equality: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    /// 0 U-bounded implies finitely many minimal primes.
    pub finiteness: Implication,
    pub minimal_primes: usize,
    pub max_minimal_length: usize,
    pub reduced: bool,
    /// Present for reduced rings only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<LemmaBound>,
}

pub fn check_lemma_ubounded(r: &FiniteRing) -> Result<LemmaReport> {
    let zero = u_boundedness_of_zero(r)?;
    let minimal_primes = min_primes(r, DEFAULT_MAX_IDEALS)?.len();
    let reduced = is_reduced(r);
    let bound = reduced.then(|| lemma_bound(zero.max_length, minimal_primes));
    Ok(LemmaReport {
        finiteness: Implication::new(zero.u_bounded, true),
        minimal_primes,
        max_minimal_length: zero.max_length,
        reduced,
        bound,
    })
}

pub fn check_lemma_bound(r: &FiniteRing) -> Result<LemmaBound> {
    if !is_reduced(r) {
        return Err(Error::InvalidQuery(format!("{} is not reduced", r.name())));
    }
    let zero = u_boundedness_of_zero(r)?;
    Ok(lemma_bound(zero.max_length, min_primes(r, DEFAULT_MAX_IDEALS)?.len()))
}

fn lemma_bound(max_minimal_length: usize, minimal_primes: usize) -> LemmaBound {
    LemmaBound {
        max_minimal_length,
        minimal_primes,
        holds: max_minimal_length <= minimal_primes,
        equality: max_minimal_length == minimal_primes,
    }
}

/// ACCP for `R(+)M` against ACCP for `R` and ACCC for `M`; all three hold
/// for finite inputs, so the equivalence is vacuous here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AccpEquivalence {
    pub idealization_accp: bool,
    pub ring_accp: bool,
    pub module_accc: bool,
    pub idealization_height: usize,
    pub ring_height: usize,
    pub module_height: usize,
    pub agree: bool,
}

pub fn check_theorem_accp(r: &Arc<FiniteRing>, m: &Arc<FiniteModule>) -> Result<AccpEquivalence> {
    let t = idealize(r, m)?;
    let ti = accp_height(&t);
    let ri = accp_height(r);
    let mi = is_accc(m);
    Ok(AccpEquivalence {
        idealization_accp: ti.accp,
        ring_accp: ri.accp,
        module_accc: mi.accc,
        idealization_height: ti.chain_height,
        ring_height: ri.chain_height,
        module_height: mi.chain_height,
        agree: ti.accp == (ri.accp && mi.accc),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{make_free, make_self_module, make_zero_module, quotient_module};
    use crate::ring::{make_polyquot, make_product, make_zn};

    fn zn(n: usize) -> Arc<FiniteRing> {
        Arc::new(make_zn(n).unwrap())
    }

    fn selfm(r: &Arc<FiniteRing>) -> Arc<FiniteModule> {
        Arc::new(make_self_module(r))
    }

    #[test]
    fn ufr_theorem_examples() {
        let z4 = zn(4);
        let q = Arc::new(quotient_module(&make_self_module(&z4), &[2]).unwrap());
        let rep = check_theorem_ufr(&z4, &q).unwrap();
        assert_eq!(rep.values(), [true; 4]);
        let rep = check_theorem_ufr(&z4, &selfm(&z4)).unwrap();
        assert_eq!(rep.values(), [false; 4]);
        assert!(rep.agree);
        let z2 = zn(2);
        assert_eq!(check_theorem_ufr(&z2, &selfm(&z2)).unwrap().values(), [true; 4]);
        let zero = Arc::new(make_zero_module(&z4));
        assert_eq!(check_theorem_ufr(&z4, &zero).unwrap_err().kind(), "invalid_query");
        let z3 = zn(3);
        let free = Arc::new(make_free(&z3, 2).unwrap());
        assert_eq!(check_theorem_ufr(&z3, &free).unwrap().values(), [true; 4]);
    }

    #[test]
    fn bfr_proposition_examples() {
        let z4 = zn(4);
        let rep = check_prop_bfr(&z4, &selfm(&z4)).unwrap();
        assert!(rep.backward.exercised() && rep.backward.conclusion);
        assert_eq!(rep.zero_max_minimal_length, 2);
        assert!(rep.holds());

        let z6 = zn(6);
        let rep = check_prop_bfr(&z6, &selfm(&z6)).unwrap();
        assert!(!rep.ring_bfr && !rep.idealization_bfr);
        assert!(rep.holds());

        let z2 = zn(2);
        let rep = check_prop_bfr(&z2, &selfm(&z2)).unwrap();
        assert!(rep.forward.exercised() && rep.backward.exercised() && rep.holds());
    }

    #[test]
    fn lemma_examples() {
        let z2 = make_zn(2).unwrap();
        let p = make_product(&z2, &make_zn(3).unwrap()).unwrap();
        let b = check_lemma_bound(&p).unwrap();
        assert_eq!((b.max_minimal_length, b.minimal_primes), (2, 2));
        let cube = make_product(&z2, &make_product(&z2, &z2).unwrap()).unwrap();
        let b = check_lemma_bound(&cube).unwrap();
        assert_eq!((b.max_minimal_length, b.minimal_primes, b.equality), (3, 3, true));
        let f4 = make_polyquot(&z2, &[1, 1, 1]).unwrap();
        let b = check_lemma_bound(&f4).unwrap();
        assert_eq!((b.max_minimal_length, b.minimal_primes), (1, 1));
        assert_eq!(check_lemma_bound(&make_zn(4).unwrap()).unwrap_err().kind(), "invalid_query");
        let rep = check_lemma_ubounded(&make_zn(8).unwrap()).unwrap();
        assert!(rep.bound.is_none() && rep.finiteness.holds());
        assert_eq!(rep.max_minimal_length, 3);
    }

    #[test]
    fn accp_is_vacuous() {
        let z8 = zn(8);
        let rep = check_theorem_accp(&z8, &selfm(&z8)).unwrap();
        assert!(rep.agree && rep.idealization_accp);
        assert_eq!(rep.ring_height, 3);
    }
}
