//! Spectrum, radicals and the locality / SPIR / field predicates.

use serde::Serialize;

use super::ideal::{all_ideals, principal_ideals};
use super::{Elem, FiniteRing, Ideal};
use crate::error::Result;
use crate::set::ElementSet;

/// Default bound on the number of ideals enumerated for a lattice.
pub const DEFAULT_MAX_IDEALS: usize = 100_000;

/// Maximal ideals, found by saturating principal ideals.
///
/// For each nonunit `a` not yet covered, `<a>` is enlarged greedily by every
/// generator that keeps it proper; the result is a maximal ideal containing
/// `a`. Every maximal ideal has an element outside all the others (prime
/// avoidance over a finite set), so every maximal ideal is reached.
pub fn maximal_ideals(r: &FiniteRing) -> Vec<Ideal> {
    let mut found: Vec<Ideal> = Vec::new();
    let mut covered = ElementSet::empty(r.size());
    let units = r.units();
    for a in r.elements() {
        if units.contains(a) || covered.contains(a) {
            continue;
        }
        let mut m = Ideal::principal(r, a);
        for b in r.elements() {
            if units.contains(b) || m.contains(b) {
                continue;
            }
            let candidate = m.sum(r, &Ideal::principal(r, b));
            if candidate.members().is_disjoint(units) {
                m = candidate;
            }
        }
        if !found.contains(&m) {
            covered.union_with(m.members());
            found.push(m);
        }
    }
    found.sort();
    found
}

/// Maximal ideals read off a full ideal lattice: proper ideals not strictly
/// contained in another proper ideal.
pub fn maximal_ideals_from_lattice(ideals: &[Ideal]) -> Vec<Ideal> {
    let proper: Vec<&Ideal> = ideals.iter().filter(|i| !i.is_whole()).collect();
    let mut out: Vec<Ideal> = proper
        .iter()
        .filter(|i| !proper.iter().any(|j| j.len() > i.len() && i.is_subset(j)))
        .map(|i| (*i).clone())
        .collect();
    out.sort();
    out
}

/// Minimal prime ideals: primes of the full lattice that contain no other prime.
pub fn min_primes(r: &FiniteRing, cap: usize) -> Result<Vec<Ideal>> {
    let ideals = all_ideals(r, cap)?;
    let primes: Vec<&Ideal> = ideals.iter().filter(|i| i.is_prime(r)).collect();
    let mut out: Vec<Ideal> = primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q.len() < p.len() && q.is_subset(p)))
        .map(|p| (*p).clone())
        .collect();
    out.sort();
    Ok(out)
}

/// Outcome of computing `Max(R)` and `Min(R)` independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumCheck {
    pub maximal: Vec<Ideal>,
    pub minimal_primes: Vec<Ideal>,
    pub agree: bool,
}

/// Computes the maximal ideals and the minimal primes separately; in a
/// finite ring (dimension zero) the two sets must coincide.
pub fn spectrum_check(r: &FiniteRing, cap: usize) -> Result<SpectrumCheck> {
    let maximal = maximal_ideals(r);
    let minimal_primes = min_primes(r, cap)?;
    let agree = maximal == minimal_primes;
    Ok(SpectrumCheck {
        maximal,
        minimal_primes,
        agree,
    })
}

/// Nilpotent elements: `a^k = 0` for some `k <= |R|`.
pub fn nilradical(r: &FiniteRing) -> Ideal {
    let members = ElementSet::from_elements(r.size(), r.elements().filter(|&a| is_nilpotent(r, a)));
    Ideal::from_members_unchecked(members)
}

pub fn is_nilpotent(r: &FiniteRing, a: Elem) -> bool {
    let mut p = a;
    for _ in 0..r.size() {
        if p == 0 {
            return true;
        }
        p = r.mul(p, a);
    }
    p == 0
}

/// Intersection of the maximal ideals.
pub fn jacobson_radical(r: &FiniteRing) -> Ideal {
    maximal_ideals(r)
        .into_iter()
        .reduce(|acc, m| acc.intersection(&m))
        .unwrap_or_else(|| Ideal::whole(r))
}

pub fn is_reduced(r: &FiniteRing) -> bool {
    nilradical(r).is_zero()
}

/// `Ann(a) = {b : b a = 0}`.
pub fn annihilator(r: &FiniteRing, a: Elem) -> Ideal {
    Ideal::from_members_unchecked(ElementSet::from_elements(
        r.size(),
        r.elements().filter(|&b| r.mul(b, a) == 0),
    ))
}

/// Locality via the nonunits: they form an ideal iff they are closed under
/// addition (products with ring elements stay nonunits automatically).
pub fn nonunits_closed_under_addition(r: &FiniteRing) -> bool {
    let nonunits = r.nonunits().to_vec();
    nonunits
        .iter()
        .enumerate()
        .all(|(i, &a)| nonunits[i..].iter().all(|&b| !r.is_unit(r.add(a, b))))
}

/// Exactly one maximal ideal. Computed from the maximal ideals and from
/// closure of the nonunits; the two must agree.
pub fn is_local(r: &FiniteRing) -> bool {
    let by_count = maximal_ideals(r).len() == 1;
    let by_nonunits = nonunits_closed_under_addition(r);
    assert_eq!(
        by_count,
        by_nonunits,
        "locality tests disagree on {}",
        r.name()
    );
    by_count
}

/// The maximal ideal of a local ring.
pub fn local_maximal_ideal(r: &FiniteRing) -> Option<Ideal> {
    if is_local(r) {
        Some(Ideal::from_members_unchecked(r.nonunits()))
    } else {
        None
    }
}

pub fn is_field(r: &FiniteRing) -> bool {
    let by_units = r.unit_count() == r.size() - 1;
    let by_domain = is_domain(r);
    assert_eq!(by_units, by_domain, "field and domain tests disagree on {}", r.name());
    by_units
}

/// No zero divisors other than 0.
pub fn is_domain(r: &FiniteRing) -> bool {
    r.elements()
        .skip(1)
        .all(|a| r.elements().skip(1).all(|b| r.mul(a, b) != 0))
}

/// Every ideal is principal. The lattice is generated by principal ideals
/// under sums, so this holds iff every sum of two principal ideals is again
/// principal.
pub fn every_ideal_principal(r: &FiniteRing) -> bool {
    let principals = principal_ideals(r);
    let set: std::collections::HashSet<&Ideal> = principals.iter().collect();
    for (i, a) in principals.iter().enumerate() {
        for b in &principals[i + 1..] {
            if a.is_subset(b) || b.is_subset(a) {
                continue;
            }
            if !set.contains(&a.sum(r, b)) {
                return false;
            }
        }
    }
    true
}

/// Smallest `k <= |R|` with `I^k = 0`.
pub fn nilpotency_index(r: &FiniteRing, ideal: &Ideal) -> Option<usize> {
    let mut power = Ideal::whole(r);
    for k in 1..=r.size() {
        power = power.product(r, ideal);
        if power.is_zero() {
            return Some(k);
        }
    }
    None
}

/// Local, principal, and with nilpotent maximal ideal.
pub fn is_spir(r: &FiniteRing) -> bool {
    match local_maximal_ideal(r) {
        Some(m) => every_ideal_principal(r) && nilpotency_index(r, &m).is_some(),
        None => false,
    }
}

/// Summary of the ideal-theoretic shape of a ring.
#[derive(Debug, Clone, Serialize)]
pub struct RingStructure {
    pub size: usize,
    pub unit_count: usize,
    pub maximal_ideal_count: usize,
    pub local: bool,
    pub field: bool,
    pub spir: bool,
    pub reduced: bool,
    /// `m^2 = 0` for the maximal ideal of a local ring.
    pub maximal_square_zero: Option<bool>,
}

impl RingStructure {
    pub fn of(r: &FiniteRing) -> Self {
        let maximal = maximal_ideals(r);
        let local = is_local(r);
        let square_zero = local_maximal_ideal(r).map(|m| m.product(r, &m).is_zero());
        RingStructure {
            size: r.size(),
            unit_count: r.unit_count(),
            maximal_ideal_count: maximal.len(),
            local,
            field: is_field(r),
            spir: is_spir(r),
            reduced: is_reduced(r),
            maximal_square_zero: square_zero,
        }
    }
}
