//! Finite commutative rings stored as dense addition and multiplication
//! tables, with their constructions and ideal-theoretic structure.

mod construct;
mod ideal;
mod structure;

pub use construct::{make_polyquot, make_polyquot_capped, make_product, make_product_capped, make_zn, quotient_ring};
pub(crate) use construct::make_zn_capped;
pub(crate) use ideal::{close_under_sums, SubsetOf};
pub use ideal::{all_ideals, principal_ideals, Ideal};
pub use structure::{
    annihilator, every_ideal_principal, is_domain, is_field, is_local, is_nilpotent, is_reduced, is_spir,
    jacobson_radical, local_maximal_ideal, maximal_ideals, maximal_ideals_from_lattice, min_primes, nilpotency_index,
    nilradical, nonunits_closed_under_addition, spectrum_check, RingStructure, SpectrumCheck, DEFAULT_MAX_IDEALS,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Element of a dense ring or module: its canonical index in the carrier.
pub type Elem = usize;

/// Default upper bound on the size of a table-backed ring.
pub const DEFAULT_MAX_RING_SIZE: usize = 4096;

/// Hard limit imposed by the `u16` table encoding.
pub const TABLE_LIMIT: usize = 1 << 16;

/// How a ring's arithmetic is realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    DenseTable,
    Structured,
}

/// The arithmetic contract shared by every ring backend.
pub trait RingArithmetic {
    type Element: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn neg(&self, a: &Self::Element) -> Self::Element;
    fn is_unit(&self, a: &Self::Element) -> bool;
    fn backend(&self) -> Backend;

    fn product<'a, I>(&self, factors: I) -> Self::Element
    where
        I: IntoIterator<Item = &'a Self::Element>,
        Self::Element: 'a,
    {
        factors.into_iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }
}

/// A finite commutative ring with identity on the carrier `0..size`.
///
/// Index 0 is always the additive zero. The unity sits at index 1 for
/// `Z_n`, polynomial quotients and quotient rings; pair constructions keep
/// the pair encoding, so their unity is wherever `(1, 0)` or `(1, 1)` lands.
#[derive(Clone)]
pub struct FiniteRing {
    name: String,
    size: usize,
    one: Elem,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    units: ElementSet,
    labels: Vec<String>,
}

/// A failed ring or module axiom with the offending elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: &'static str,
    pub elements: Vec<Elem>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.axiom, self.elements)
    }
}

impl FiniteRing {
    /// Builds a ring from element-level operations. `add` and `mul` must be
    /// total on `0..size`; negation is read off the addition table.
    pub fn from_fn(
        name: impl Into<String>,
        size: usize,
        one: Elem,
        add: impl Fn(Elem, Elem) -> Elem,
        mul: impl Fn(Elem, Elem) -> Elem,
        labels: Vec<String>,
    ) -> Result<Self> {
        let name = name.into();
        if size < 2 {
            return Err(Error::InvalidConstruction(format!(
                "{name}: a ring needs at least two elements"
            )));
        }
        if size > TABLE_LIMIT {
            return Err(Error::capacity(format!("table for {name}"), size, TABLE_LIMIT));
        }
        debug_assert_eq!(labels.len(), size);
        let mut add_t = vec![0u16; size * size];
        let mut mul_t = vec![0u16; size * size];
        for a in 0..size {
            for b in 0..size {
                add_t[a * size + b] = add(a, b) as u16;
                mul_t[a * size + b] = mul(a, b) as u16;
            }
        }
        let mut neg = vec![0u16; size];
        for a in 0..size {
            let row = &add_t[a * size..(a + 1) * size];
            let inv = row.iter().position(|&v| v == 0).ok_or_else(|| {
                Error::InvalidConstruction(format!("{name}: element {a} has no additive inverse"))
            })?;
            neg[a] = inv as u16;
        }
        let mut units = ElementSet::empty(size);
        for a in 0..size {
            if mul_t[a * size..(a + 1) * size].iter().any(|&v| v as usize == one) {
                units.insert(a);
            }
        }
        Ok(FiniteRing {
            name,
            size,
            one,
            add: add_t,
            mul: mul_t,
            neg,
            units,
            labels,
        })
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

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.size + b] as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.size + b] as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a] as Elem
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    /// `k * 1` for an integer `k`.
    pub fn from_integer(&self, k: i64) -> Elem {
        let m = (0..k.unsigned_abs()).fold(0, |acc, _| self.add(acc, self.one));
        if k < 0 {
            self.neg(m)
        } else {
            m
        }
    }

    pub fn product(&self, factors: &[Elem]) -> Elem {
        factors.iter().fold(self.one, |acc, &f| self.mul(acc, f))
    }

    /// True iff some `b` has `a*b = 1`.
    pub fn is_unit(&self, a: Elem) -> bool {
        self.units.contains(a)
    }

    pub fn units(&self) -> &ElementSet {
        &self.units
    }

    pub fn nonunits(&self) -> ElementSet {
        self.units.complement()
    }

    pub fn unit_count(&self) -> usize {
        self.units.len()
    }

    /// Multiplicative inverse of a unit.
    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        self.elements().find(|&b| self.mul(a, b) == self.one)
    }

    pub fn is_zero_divisor(&self, a: Elem) -> bool {
        self.elements().any(|b| b != 0 && self.mul(a, b) == 0)
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of the element carrying `label`, if any.
    pub fn find_label(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    /// Exhaustively checks the commutative ring axioms.
    pub fn check_axioms(&self) -> std::result::Result<(), AxiomViolation> {
        let n = self.size;
        let fail = |axiom, elements: Vec<Elem>| Err(AxiomViolation { axiom, elements });
        for a in 0..n {
            if self.add(a, 0) != a {
                return fail("additive identity", vec![a]);
            }
            if self.mul(a, self.one) != a {
                return fail("multiplicative identity", vec![a]);
            }
            if self.add(a, self.neg(a)) != 0 {
                return fail("additive inverse", vec![a]);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", vec![a, b]);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplicative commutativity", vec![a, b]);
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity", vec![a, b, c]);
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity", vec![a, b, c]);
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity", vec![a, b, c]);
                    }
                }
            }
        }
        Ok(())
    }

    /// True iff `bijection` (indexed by elements of `self`) carries this
    /// ring's tables onto `other`'s.
    pub fn is_isomorphic_under(&self, other: &FiniteRing, bijection: &[Elem]) -> bool {
        if self.size != other.size || bijection.len() != self.size {
            return false;
        }
        let image = ElementSet::from_elements(other.size, bijection.iter().copied());
        if image.len() != self.size {
            return false;
        }
        for a in 0..self.size {
            for b in 0..self.size {
                if bijection[self.add(a, b)] != other.add(bijection[a], bijection[b])
                    || bijection[self.mul(a, b)] != other.mul(bijection[a], bijection[b])
                {
                    return false;
                }
            }
        }
        bijection[self.one] == other.one
    }

    pub(crate) fn same_tables(&self, other: &FiniteRing) -> bool {
        self.size == other.size && self.one == other.one && self.add == other.add && self.mul == other.mul
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.name)
            .field("size", &self.size)
            .field("units", &self.units.len())
            .finish()
    }
}

impl RingArithmetic for FiniteRing {
    type Element = Elem;

    fn zero(&self) -> Elem {
        0
    }
    fn one(&self) -> Elem {
        self.one
    }
    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        FiniteRing::add(self, *a, *b)
    }
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        FiniteRing::mul(self, *a, *b)
    }
    fn neg(&self, a: &Elem) -> Elem {
        FiniteRing::neg(self, *a)
    }
    fn is_unit(&self, a: &Elem) -> bool {
        FiniteRing::is_unit(self, *a)
    }
    fn backend(&self) -> Backend {
        Backend::DenseTable
    }
}

/// Wraps a label in parentheses when it is a sum, for composite renderings.
pub(crate) fn atomic_label(label: &str) -> String {
    if label.contains('+') {
        format!("({label})")
    } else {
        label.to_string()
    }
}
