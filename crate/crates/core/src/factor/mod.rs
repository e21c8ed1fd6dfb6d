//! Factorization predicates on finite rings and modules.

mod atoms;
mod classify;
mod graph;
mod theorems;
mod zero;

use std::fmt;

use serde::{Serialize, Serializer};

pub(crate) use atoms::{atomic_with, atoms_with, presimplifiable_checked};
pub(crate) use classify::{bfr_with, ufr_with};
pub use atoms::{
    accp_height, associate_classes, associates, atom_factorizations, atoms, is_atom, is_atomic, is_presimplifiable,
    presimplifiable_pair_scan, AccpCertificate, AssociateClasses, AtomicityReport, PresimplifiableReport,
};
pub use classify::{
    bouvier_branches, bouvier_class, is_bfm, BfmReport, is_bfr, is_ufr_bouvier, is_ufr_direct, max_factorization_length,
    BfrReport, BouvierClass, UfrReport, UfrWitness,
};
pub use graph::{check_module_witness, check_ring_witness, DivisorGraph, GraphKind, LengthWitness};
pub use theorems::{
    check_lemma_bound, check_lemma_ubounded, check_prop_bfr, check_theorem_accp, check_theorem_ufr, AccpEquivalence,
    Implication, LemmaBound, LemmaReport, PropBfrReport, TheoremUfrReport,
};
pub use zero::{
    is_minimal_zero_factorization, minimal_factorizations_of_zero, u_boundedness_of_zero, MinimalZeroFactorizations,
    u_boundedness_of_zero_capped, ZeroBoundedness, DEFAULT_ZERO_SEARCH_STATES,
};

/// A factorization length: a natural number or unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(usize),
    Unbounded,
}

impl Length {
    pub fn finite(self) -> Option<usize> {
        match self {
            Length::Finite(k) => Some(k),
            Length::Unbounded => None,
        }
    }

    pub fn is_unbounded(self) -> bool {
        self == Length::Unbounded
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(k) => write!(f, "{k}"),
            Length::Unbounded => f.write_str("unbounded"),
        }
    }
}

impl Serialize for Length {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Length::Finite(k) => s.serialize_u64(*k as u64),
            Length::Unbounded => s.serialize_str("unbounded"),
        }
    }
}
