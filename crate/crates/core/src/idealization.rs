//! The idealization `R(+)M`: the ring on `R x M` with
//! `(r1, x1)(r2, x2) = (r1 r2, r1 x2 + r2 x1)`, and brute-force checks of
//! its basic structure (units, ideal shape, primes, ideal products).

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::module::{all_submodules, FiniteModule, Submodule};
use crate::ring::{all_ideals, atomic_label, Backend, Elem, FiniteRing, Ideal, RingArithmetic, DEFAULT_MAX_RING_SIZE};
use crate::set::ElementSet;

/// `R(+)M` together with its factors; the pair `(r, x)` has index `r|M| + x`.
#[derive(Debug, Clone)]
pub struct Idealization {
    base: Arc<FiniteRing>,
    module: Arc<FiniteModule>,
    ring: Arc<FiniteRing>,
}

impl Idealization {
    pub fn new(r: &Arc<FiniteRing>, m: &Arc<FiniteModule>) -> Result<Self> {
        Self::with_cap(r, m, DEFAULT_MAX_RING_SIZE)
    }

    pub fn with_cap(r: &Arc<FiniteRing>, m: &Arc<FiniteModule>, cap: usize) -> Result<Self> {
        let ring = idealize_capped(r, m, cap)?;
        Ok(Idealization {
            base: Arc::clone(r),
            module: Arc::clone(m),
            ring: Arc::new(ring),
        })
    }

    pub fn base(&self) -> &Arc<FiniteRing> {
        &self.base
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn pair(&self, r: Elem, x: Elem) -> Elem {
        r * self.module.size() + x
    }

    pub fn split(&self, e: Elem) -> (Elem, Elem) {
        (e / self.module.size(), e % self.module.size())
    }

    fn pair_set(&self, i: &Ideal, n: &Submodule) -> ElementSet {
        let mut s = ElementSet::empty(self.ring.size());
        for r in i.members().iter() {
            for x in n.members().iter() {
                s.insert(self.pair(r, x));
            }
        }
        s
    }

    /// `(r, x)` is a unit iff `r` is.
    pub fn verify_unit_criterion(&self) -> StructureCheck {
        for e in self.ring.elements() {
            let (r, _) = self.split(e);
            if self.ring.is_unit(e) != self.base.is_unit(r) {
                return StructureCheck::fail(format!("unit status of {} differs from that of {r}", self.ring.label(e)));
            }
        }
        StructureCheck::pass()
    }

    /// `I x N` is an ideal iff `I` is an ideal, `N` a submodule and
    /// `IM <= N`. Checked in both directions: every product-shaped ideal has
    /// admissible components, and every admissible product is an ideal.
    /// Ideals that are not products (see [`Self::non_homogeneous_ideals`])
    /// are outside the statement.
    pub fn verify_ideal_shape(&self, cap: usize) -> Result<StructureCheck> {
        let t_ideals = all_ideals(&self.ring, cap)?;
        let r_ideals = all_ideals(&self.base, cap)?;
        let submodules = all_submodules(&self.module, cap)?;
        let m_whole = Submodule::whole(&self.module);

        let mut homogeneous = 0usize;
        for j in &t_ideals {
            let (i, n) = self.decompose(j);
            if self.pair_set(&i, &n) != *j.members() {
                continue;
            }
            homogeneous += 1;
            if Ideal::verify(&self.base, i.members()).is_err() || !Submodule::verify(&self.module, n.members()) {
                return Ok(StructureCheck::fail(format!("components of {:?} are not ideal/submodule", j.to_vec())));
            }
            if !Submodule::scaled_by(&self.module, &i, &m_whole).is_subset(&n) {
                return Ok(StructureCheck::fail(format!("IM not inside N for {:?}", j.to_vec())));
            }
        }
        let found: HashSet<&ElementSet> = t_ideals.iter().map(|j| j.members()).collect();
        let mut admissible = 0usize;
        for i in &r_ideals {
            let im = Submodule::scaled_by(&self.module, i, &m_whole);
            for n in submodules.iter().filter(|n| im.is_subset(n)) {
                admissible += 1;
                if !found.contains(&self.pair_set(i, n)) {
                    return Ok(StructureCheck::fail(format!(
                        "{:?} x {:?} is not an ideal",
                        i.to_vec(),
                        n.to_vec()
                    )));
                }
            }
        }
        if admissible != homogeneous {
            return Ok(StructureCheck::fail(format!(
                "{admissible} admissible products but {homogeneous} product-shaped ideals"
            )));
        }
        Ok(StructureCheck::pass())
    }

    /// Ideals of `R(+)M` that are not of the form `I x N`, such as
    /// `<(2, 1)>` in `Z4(+)Z4`.
    pub fn non_homogeneous_ideals(&self, cap: usize) -> Result<Vec<Ideal>> {
        Ok(all_ideals(&self.ring, cap)?
            .into_iter()
            .filter(|j| !self.is_homogeneous(j))
            .collect())
    }

    pub fn is_homogeneous(&self, j: &Ideal) -> bool {
        let (i, n) = self.decompose(j);
        self.pair_set(&i, &n) == *j.members()
    }

    /// `I x N` is prime in `R(+)M` iff `I` is prime in `R` and `N = M`.
    /// The clause `N = M` is forced: `(0, x)^2 = 0` lies in every prime.
    pub fn verify_prime_criterion(&self, cap: usize) -> Result<StructureCheck> {
        for j in all_ideals(&self.ring, cap)? {
            let (i, n) = self.decompose(&j);
            let predicted = i.is_prime(&self.base) && n.len() == self.module.size();
            if j.is_prime(&self.ring) != predicted || (predicted && !self.is_homogeneous(&j)) {
                return Ok(StructureCheck::fail(format!(
                    "primality of {:?} differs from that of {:?}",
                    j.to_vec(),
                    i.to_vec()
                )));
            }
        }
        Ok(StructureCheck::pass())
    }

    /// `(I1 x N1)(I2 x N2) = I1 I2 x (I1 N2 + I2 N1)` for all pairs of
    /// product-shaped ideals.
    pub fn verify_ideal_product(&self, cap: usize) -> Result<StructureCheck> {
        let ideals: Vec<Ideal> = all_ideals(&self.ring, cap)?
            .into_iter()
            .filter(|j| self.is_homogeneous(j))
            .collect();
        let parts: Vec<(Ideal, Submodule)> = ideals.iter().map(|j| self.decompose(j)).collect();
        for (a, (i1, n1)) in ideals.iter().zip(&parts) {
            for (b, (i2, n2)) in ideals.iter().zip(&parts) {
                let direct = a.product(&self.ring, b);
                let i = i1.product(&self.base, i2);
                let n = Submodule::scaled_by(&self.module, i1, n2).sum(&self.module, &Submodule::scaled_by(&self.module, i2, n1));
                if *direct.members() != self.pair_set(&i, &n) {
                    return Ok(StructureCheck::fail(format!(
                        "product of {:?} and {:?} disagrees with the formula",
                        a.to_vec(),
                        b.to_vec()
                    )));
                }
            }
        }
        Ok(StructureCheck::pass())
    }

    /// Runs all four structure checks.
    pub fn verify_structure(&self, cap: usize) -> Result<StructureReport> {
        let extra = self.non_homogeneous_ideals(cap)?;
        Ok(StructureReport {
            unit_criterion: self.verify_unit_criterion(),
            ideal_shape: self.verify_ideal_shape(cap)?,
            prime_criterion: self.verify_prime_criterion(cap)?,
            ideal_product: self.verify_ideal_product(cap)?,
            non_homogeneous_ideals: extra.len(),
            non_homogeneous_example: extra.first().map(Ideal::to_vec),
        })
    }

    /// Projection `I = {r : (r, x) in J}` and slice `N = {x : (0, x) in J}`.
    fn decompose(&self, j: &Ideal) -> (Ideal, Submodule) {
        let mut i = ElementSet::empty(self.base.size());
        let mut n = ElementSet::empty(self.module.size());
        for e in j.members().iter() {
            let (r, x) = self.split(e);
            i.insert(r);
            if r == 0 {
                n.insert(x);
            }
        }
        (Ideal::from_members_unchecked(i), Submodule::from_members_unchecked(n))
    }
}

/// Result of one structure check, with a description of the first failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureCheck {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl StructureCheck {
    fn pass() -> Self {
        StructureCheck {
            holds: true,
            counterexample: None,
        }
    }

    fn fail(msg: String) -> Self {
        StructureCheck {
            holds: false,
            counterexample: Some(msg),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub unit_criterion: StructureCheck,
    pub ideal_shape: StructureCheck,
    pub prime_criterion: StructureCheck,
    pub ideal_product: StructureCheck,
    pub non_homogeneous_ideals: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_homogeneous_example: Option<Vec<Elem>>,
}

impl StructureReport {
    pub fn all_hold(&self) -> bool {
        self.unit_criterion.holds && self.ideal_shape.holds && self.prime_criterion.holds && self.ideal_product.holds
    }
}

/// `R(+)M` as a dense ring: size `|R||M|`, zero `(0, 0)`, unity `(1, 0)`.
pub fn idealize(r: &FiniteRing, m: &FiniteModule) -> Result<FiniteRing> {
    idealize_capped(r, m, DEFAULT_MAX_RING_SIZE)
}

pub fn idealize_capped(r: &FiniteRing, m: &FiniteModule, cap: usize) -> Result<FiniteRing> {
    if !std::ptr::eq(&**m.ring(), r) && !m.ring().same_tables(r) {
        return Err(Error::ScalarMismatch);
    }
    let k = m.size();
    let size = r
        .size()
        .checked_mul(k)
        .filter(|&n| n <= cap)
        .ok_or_else(|| Error::capacity(format!("idealize({}, {})", r.name(), m.name()), r.size().saturating_mul(k), cap))?;
    let split = |e: Elem| (e / k, e % k);
    let labels = (0..size)
        .map(|e| {
            let (a, x) = split(e);
            format!("({},{})", r.label(a), atomic_label(m.label(x)))
        })
        .collect();
    FiniteRing::from_fn(
        format!("idealize({},{})", r.name(), m.name()),
        size,
        r.one() * k,
        |e, f| {
            let ((r1, x1), (r2, x2)) = (split(e), split(f));
            r.add(r1, r2) * k + m.add(x1, x2)
        },
        |e, f| {
            let ((r1, x1), (r2, x2)) = (split(e), split(f));
            r.mul(r1, r2) * k + m.add(m.act(r1, x2), m.act(r2, x1))
        },
        labels,
    )
}

/// Self-idealization `A(+)A` of any ring backend, evaluated pairwise
/// without tables.
#[derive(Debug, Clone, Copy)]
pub struct SelfIdealization<'a, A> {
    base: &'a A,
}

impl<'a, A: RingArithmetic> SelfIdealization<'a, A> {
    pub fn new(base: &'a A) -> Self {
        SelfIdealization { base }
    }

    pub fn base(&self) -> &A {
        self.base
    }
}

impl<A: RingArithmetic> RingArithmetic for SelfIdealization<'_, A> {
    type Element = (A::Element, A::Element);

    fn zero(&self) -> Self::Element {
        (self.base.zero(), self.base.zero())
    }
    fn one(&self) -> Self::Element {
        (self.base.one(), self.base.zero())
    }
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        (self.base.add(&a.0, &b.0), self.base.add(&a.1, &b.1))
    }
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        let b0 = self.base;
        (b0.mul(&a.0, &b.0), b0.add(&b0.mul(&a.0, &b.1), &b0.mul(&b.0, &a.1)))
    }
    fn neg(&self, a: &Self::Element) -> Self::Element {
        (self.base.neg(&a.0), self.base.neg(&a.1))
    }
    fn is_unit(&self, a: &Self::Element) -> bool {
        self.base.is_unit(&a.0)
    }
    fn backend(&self) -> Backend {
        Backend::Structured
    }
}
