//! Property reports: every predicate of one ring with replayable witnesses.
//!
//! A report names its ring by canonical spec text, so `recheck` can rebuild
//! the ring and re-validate each witness by multiplication alone.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::{
    accp_height, atomic_with, atoms_with, bfr_with, bouvier_branches, check_prop_bfr, check_ring_witness,
    check_theorem_accp, check_theorem_ufr, is_atom, is_minimal_zero_factorization, presimplifiable_checked,
    u_boundedness_of_zero, ufr_with, AccpEquivalence, AssociateClasses, BouvierClass, DivisorGraph, Length,
    LengthWitness, PropBfrReport, TheoremUfrReport, UfrWitness,
};
use crate::idealization::{Idealization, StructureReport};
use crate::module::FiniteModule;
use crate::ring::{is_domain, maximal_ideals, min_primes, Elem, FiniteRing, RingStructure, DEFAULT_MAX_IDEALS};
use crate::set::ElementSet;
use crate::spec::{build_module, build_ring, parse_spec, ConstructionSpec, RingExpr};

/// Version tag of the report layout; bumped whenever a field changes.
pub const REPORT_SCHEMA: &str = "idealab.property-report/1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest ring on which the direct and Bouvier UFR verdicts are compared.
pub const BOUVIER_CHECK_LIMIT: usize = 512;

#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub spec: String,
    pub ring_size: usize,
    pub predicates: Predicates,
    pub witnesses: Vec<Witness>,
    /// Display labels of every element a witness mentions.
    pub labels: BTreeMap<Elem, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairChecks>,
    /// Failed implications; nonempty only when something is wrong.
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<ElementLength>>,
    /// Wall-clock data, kept apart so the rest is reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Predicates {
    pub unit_count: usize,
    pub reduced: bool,
    pub local: bool,
    pub spir: bool,
    pub field: bool,
    pub presimplifiable: bool,
    /// Always true for a finite ring.
    pub accp: bool,
    pub accp_height: usize,
    pub bfr: bool,
    pub atomic: bool,
    pub ufr_direct: bool,
    pub ufr_bouvier: bool,
    pub bouvier_class: BouvierClass,
    pub bouvier_branches: Vec<BouvierClass>,
    /// Longest factorization over all nonzero nonunits; absent for fields.
    pub longest_factorization: Option<Length>,
    pub u_bounded: Option<bool>,
    pub max_minimal_zero_length: Option<usize>,
    pub min_primes: Option<usize>,
    pub maximal_ideals: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "claim", rename_all = "snake_case")]
pub enum Witness {
    /// `a != 0`, `b` a nonunit and `a = a b`.
    NotPresimplifiable { a: Elem, b: Elem },
    /// A path into a cycle of the divisor graph.
    NotBfr { length: LengthWitness },
    /// A factorization realizing the longest length in the ring.
    LongestFactorization { length: usize, factors: LengthWitness },
    /// A nonzero nonunit that is no product of atoms.
    NotAtomic { element: Elem },
    /// Two atom factorizations of `element` that are not associate.
    NotUfr {
        element: Elem,
        first: Vec<Elem>,
        second: Vec<Elem>,
    },
    /// A minimal factorization of 0 of maximal length.
    MinimalZero { factors: Vec<Elem> },
}

impl Witness {
    pub fn claim(&self) -> &'static str {
        match self {
            Witness::NotPresimplifiable { .. } => "not_presimplifiable",
            Witness::NotBfr { .. } => "not_bfr",
            Witness::LongestFactorization { .. } => "longest_factorization",
            Witness::NotAtomic { .. } => "not_atomic",
            Witness::NotUfr { .. } => "not_ufr",
            Witness::MinimalZero { .. } => "minimal_zero",
        }
    }

    fn mentioned(&self) -> Vec<Elem> {
        let from_length = |w: &LengthWitness| -> Vec<Elem> {
            match w {
                LengthWitness::Factors { element, factors, .. } => {
                    std::iter::once(*element).chain(factors.iter().copied()).collect()
                }
                LengthWitness::Cycle {
                    element,
                    path,
                    path_labels,
                    cycle,
                    cycle_labels,
                } => std::iter::once(*element)
                    .chain(path.iter().chain(path_labels).chain(cycle).chain(cycle_labels).copied())
                    .collect(),
            }
        };
        match self {
            Witness::NotPresimplifiable { a, b } => vec![*a, *b],
            Witness::NotBfr { length } => from_length(length),
            Witness::LongestFactorization { factors, .. } => from_length(factors),
            Witness::NotAtomic { element } => vec![*element],
            Witness::NotUfr { element, first, second } => {
                std::iter::once(*element).chain(first.iter().chain(second).copied()).collect()
            }
            Witness::MinimalZero { factors } => factors.clone(),
        }
    }
}

/// Machine-readable form of an [`Error`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorObject {
    pub kind: &'static str,
    pub message: String,
}

impl From<&Error> for ErrorObject {
    fn from(e: &Error) -> Self {
        ErrorObject {
            kind: e.kind(),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementLength {
    pub element: Elem,
    pub label: String,
    pub length: Length,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

/// Statement-level checks for a spec of the form `idealize(R, M)`.
#[derive(Debug, Clone, Serialize)]
pub struct PairChecks {
    pub ring: String,
    pub module: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ufr_theorem: Option<TheoremUfrReport>,
    pub bfr_proposition: PropBfrReport,
    pub accp: AccpEquivalence,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureReport>,
    pub not_domain: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct AnalyzeOptions {
    pub max_ring_size: usize,
    /// Include the per-element length table.
    pub elements: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            max_ring_size: crate::ring::DEFAULT_MAX_RING_SIZE,
            elements: false,
        }
    }
}

pub fn analyze(text: &str, opts: &AnalyzeOptions) -> Result<PropertyReport> {
    analyze_spec(&parse_spec(text, opts.max_ring_size)?, opts)
}

pub fn analyze_spec(spec: &ConstructionSpec, opts: &AnalyzeOptions) -> Result<PropertyReport> {
    let cap = opts.max_ring_size;
    let r = spec.build(cap)?;
    let mut report = analyze_ring(&r, &spec.canonical(), opts)?;
    if let RingExpr::Idealize(base, module) = &spec.expr {
        let base = build_ring(base, cap)?;
        let module = build_module(module, &base, cap)?;
        let pair = check_pair(&base, &module, cap, &mut report.notes)?;
        report.violations.extend(pair_violations(&pair));
        report.pair = Some(pair);
    }
    Ok(report)
}

/// Computes the predicate vector of `r`. `spec` is recorded verbatim and
/// should rebuild `r`.
pub fn analyze_ring(r: &FiniteRing, spec: &str, opts: &AnalyzeOptions) -> Result<PropertyReport> {
    let mut notes = Vec::new();
    let mut witnesses = Vec::new();
    let structure = RingStructure::of(r);
    let graph = DivisorGraph::of_ring(r);
    let classes = AssociateClasses::of(r);

    let pre = presimplifiable_checked(r, &graph);
    if let Some((a, b)) = pre.witness {
        witnesses.push(Witness::NotPresimplifiable { a, b });
    }
    let accp = accp_height(r);
    let bfr = bfr_with(r, &graph);
    if let Some(length) = bfr.witness.clone() {
        witnesses.push(Witness::NotBfr { length });
    }
    let nonzero_nonunits: Vec<Elem> = r.nonunits().iter().filter(|&a| a != 0).collect();
    let longest = nonzero_nonunits
        .iter()
        .map(|&a| (graph.max_length(a).expect("terminal node"), a))
        .max_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    if let Some((Length::Finite(k), a)) = longest {
        let factors = graph.witness(a).expect("terminal node");
        witnesses.push(Witness::LongestFactorization { length: k, factors });
    }
    let atoms = atoms_with(r, &classes);
    let atomic = atomic_with(r, &atoms);
    if let Some(element) = atomic.witness {
        witnesses.push(Witness::NotAtomic { element });
    }
    let ufr = ufr_with(r, &graph, &classes);
    if let Some(UfrWitness::TwoFactorizations { element, first, second }) = &ufr.witness {
        witnesses.push(Witness::NotUfr {
            element: *element,
            first: first.clone(),
            second: second.clone(),
        });
    }
    let branches = bouvier_branches(r);
    let bouvier_class = branches.first().copied().unwrap_or(BouvierClass::None);

    let zero = match u_boundedness_of_zero(r) {
        Ok(z) => {
            if z.max_length > 0 {
                witnesses.push(Witness::MinimalZero { factors: z.witness.clone() });
            }
            Some(z)
        }
        Err(e @ Error::CapacityExceeded { .. }) => {
            notes.push(format!("minimal factorizations of zero skipped: {e}"));
            None
        }
        Err(e) => return Err(e),
    };
    let maximal = maximal_ideals(r);
    let minimal = match min_primes(r, DEFAULT_MAX_IDEALS) {
        Ok(p) => Some(p),
        Err(e @ Error::CapacityExceeded { .. }) => {
            notes.push(format!("minimal primes skipped: {e}"));
            None
        }
        Err(e) => return Err(e),
    };

    let predicates = Predicates {
        unit_count: structure.unit_count,
        reduced: structure.reduced,
        local: structure.local,
        spir: structure.spir,
        field: structure.field,
        presimplifiable: pre.presimplifiable,
        accp: accp.accp,
        accp_height: accp.chain_height,
        bfr: bfr.bfr,
        atomic: atomic.atomic,
        ufr_direct: ufr.ufr,
        ufr_bouvier: bouvier_class != BouvierClass::None,
        bouvier_class,
        bouvier_branches: branches,
        longest_factorization: longest.map(|(l, _)| l),
        u_bounded: zero.as_ref().map(|z| z.u_bounded),
        max_minimal_zero_length: zero.as_ref().map(|z| z.max_length),
        min_primes: minimal.as_ref().map(Vec::len),
        maximal_ideals: maximal.len(),
    };

    let mut violations = Vec::new();
    if predicates.bfr && !predicates.presimplifiable {
        violations.push("BFR but not présimplifiable".to_string());
    }
    if predicates.ufr_direct && !predicates.bfr {
        violations.push("UFR but not BFR".to_string());
    }
    if r.size() <= BOUVIER_CHECK_LIMIT && predicates.ufr_direct != predicates.ufr_bouvier {
        violations.push(format!(
            "direct UFR verdict {} disagrees with Bouvier class {}",
            predicates.ufr_direct, bouvier_class
        ));
    }
    if let Some(minimal) = &minimal {
        let key = |v: &[crate::Ideal]| {
            let mut s: Vec<Vec<Elem>> = v.iter().map(|i| i.to_vec()).collect();
            s.sort();
            s
        };
        if key(minimal) != key(&maximal) {
            violations.push("maximal ideals differ from minimal primes".to_string());
        }
    }
    if let (true, Some(z), Some(p)) = (predicates.reduced, &zero, &minimal) {
        if z.max_length > p.len() {
            violations.push(format!(
                "reduced ring with minimal zero factorization of length {} > |Min| = {}",
                z.max_length,
                p.len()
            ));
        }
    }

    let mut labels = BTreeMap::new();
    for w in &witnesses {
        for e in w.mentioned() {
            labels.entry(e).or_insert_with(|| r.label(e).to_string());
        }
    }
    let elements = opts.elements.then(|| {
        nonzero_nonunits
            .iter()
            .map(|&a| ElementLength {
                element: a,
                label: r.label(a).to_string(),
                length: graph.max_length(a).expect("terminal node"),
            })
            .collect()
    });

    Ok(PropertyReport {
        schema: REPORT_SCHEMA,
        tool_version: TOOL_VERSION,
        spec: spec.to_string(),
        ring_size: r.size(),
        predicates,
        witnesses,
        labels,
        pair: None,
        violations,
        notes,
        elements,
        timing: None,
    })
}

/// Runs the idealization checkers on `(R, M)`. Lattice-size overruns and a
/// zero module are recorded as notes rather than failures.
pub fn check_pair(
    r: &Arc<FiniteRing>,
    m: &Arc<FiniteModule>,
    cap: usize,
    notes: &mut Vec<String>,
) -> Result<PairChecks> {
    let ufr_theorem = match check_theorem_ufr(r, m) {
        Ok(t) => Some(t),
        Err(e @ Error::InvalidQuery(_)) => {
            notes.push(format!("unique factorization theorem skipped: {e}"));
            None
        }
        Err(e) => return Err(e),
    };
    let bfr_proposition = check_prop_bfr(r, m)?;
    let accp = check_theorem_accp(r, m)?;
    let t = Idealization::with_cap(r, m, cap)?;
    let structure = match t.verify_structure(DEFAULT_MAX_IDEALS) {
        Ok(s) => Some(s),
        Err(e @ Error::CapacityExceeded { .. }) => {
            notes.push(format!("idealization structure checks skipped: {e}"));
            None
        }
        Err(e) => return Err(e),
    };
    let not_domain = m.is_zero_module() || !is_domain(t.ring());
    Ok(PairChecks {
        ring: r.name().to_string(),
        module: m.name().to_string(),
        ufr_theorem,
        bfr_proposition,
        accp,
        structure,
        not_domain,
    })
}

pub fn pair_violations(p: &PairChecks) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(t) = &p.ufr_theorem {
        if !t.agree {
            out.push(format!("unique factorization conditions disagree: {:?}", t.values()));
        }
    }
    if !p.bfr_proposition.forward.holds() {
        out.push("idealization BFR without R BFR and M BFM".to_string());
    }
    if !p.bfr_proposition.backward.holds() {
        out.push("R BFR, M BFM and 0 U-bounded, yet idealization not BFR".to_string());
    }
    if !p.accp.agree {
        out.push("ACCP equivalence fails".to_string());
    }
    if let Some(s) = &p.structure {
        for (name, check) in [
            ("unit criterion", &s.unit_criterion),
            ("ideal shape", &s.ideal_shape),
            ("prime criterion", &s.prime_criterion),
            ("ideal product", &s.ideal_product),
        ] {
            if !check.holds {
                out.push(format!(
                    "{name}: {}",
                    check.counterexample.as_deref().unwrap_or("failed")
                ));
            }
        }
    }
    if !p.not_domain {
        out.push("idealization with nonzero module is a domain".to_string());
    }
    out
}

/// The parts of a report that replay needs; other fields are ignored.
#[derive(Debug, Clone, Deserialize)]
pub struct ReportView {
    pub spec: String,
    #[serde(default)]
    pub labels: BTreeMap<Elem, String>,
    #[serde(default)]
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplayCheck {
    pub claim: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplayOutcome {
    pub spec: String,
    pub checks: Vec<ReplayCheck>,
}

impl ReplayOutcome {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// Rebuilds the ring named by `view.spec` and replays every witness.
pub fn recheck(view: &ReportView, cap: usize) -> Result<ReplayOutcome> {
    let r = parse_spec(&view.spec, cap)?.build(cap)?;
    let mut checks = Vec::new();
    let bad_labels: Vec<String> = view
        .labels
        .iter()
        .filter(|&(&e, l)| e >= r.size() || r.label(e) != l)
        .map(|(e, l)| format!("{e}={l}"))
        .collect();
    checks.push(ReplayCheck {
        claim: "labels".into(),
        ok: bad_labels.is_empty(),
        detail: (!bad_labels.is_empty()).then(|| format!("mismatched labels: {}", bad_labels.join(", "))),
    });
    for w in &view.witnesses {
        let failure = replay_witness(&r, w);
        checks.push(ReplayCheck {
            claim: w.claim().to_string(),
            ok: failure.is_none(),
            detail: failure,
        });
    }
    Ok(ReplayOutcome {
        spec: view.spec.clone(),
        checks,
    })
}

/// Replays one witness; `None` on success, else what failed.
pub fn replay_witness(r: &FiniteRing, w: &Witness) -> Option<String> {
    let n = r.size();
    let nonzero_nonunit = |a: Elem| a != 0 && a < n && !r.is_unit(a);
    match w {
        Witness::NotPresimplifiable { a, b } => {
            if !(*a != 0 && *a < n && *b < n && !r.is_unit(*b)) {
                return Some("expected a nonzero element and a nonunit".into());
            }
            (r.mul(*a, *b) != *a).then(|| format!("{a} * {b} = {}, not {a}", r.mul(*a, *b)))
        }
        Witness::NotBfr { length } => match length {
            LengthWitness::Cycle { .. } if check_ring_witness(r, length) => None,
            LengthWitness::Cycle { .. } => Some("cycle does not replay".into()),
            LengthWitness::Factors { .. } => Some("a finite factorization does not show unboundedness".into()),
        },
        Witness::LongestFactorization { length, factors } => match factors {
            LengthWitness::Factors { factors: f, .. } if f.len() != *length => {
                Some(format!("{} factors listed, length {length} claimed", f.len()))
            }
            LengthWitness::Factors { .. } if check_ring_witness(r, factors) => None,
            _ => Some("factorization does not replay".into()),
        },
        Witness::NotAtomic { element } => {
            if !nonzero_nonunit(*element) {
                return Some("expected a nonzero nonunit".into());
            }
            let atoms: Vec<Elem> = (1..n).filter(|&a| is_atom(r, a).unwrap_or(false)).collect();
            let mut products = ElementSet::from_elements(n, atoms.iter().copied());
            let mut frontier = atoms.clone();
            while let Some(p) = frontier.pop() {
                for &q in &atoms {
                    let pq = r.mul(p, q);
                    if pq != 0 && products.insert(pq) {
                        frontier.push(pq);
                    }
                }
            }
            products
                .contains(*element)
                .then(|| format!("{element} is a product of atoms"))
        }
        Witness::NotUfr { element, first, second } => {
            if !nonzero_nonunit(*element) {
                return Some("expected a nonzero nonunit".into());
            }
            for f in [first, second] {
                if f.is_empty() || f.iter().any(|&a| a >= n || !is_atom(r, a).unwrap_or(false)) {
                    return Some(format!("{f:?} is not a list of atoms"));
                }
                if r.product(f) != *element {
                    return Some(format!("{f:?} does not multiply to {element}"));
                }
            }
            let classes = AssociateClasses::of(r);
            let canon = |f: &[Elem]| {
                let mut c: Vec<Elem> = f.iter().map(|&a| classes.canonical(a)).collect();
                c.sort_unstable();
                c
            };
            (canon(first) == canon(second)).then(|| "the two factorizations are associate".into())
        }
        Witness::MinimalZero { factors } => {
            (!is_minimal_zero_factorization(r, factors)).then(|| format!("{factors:?} is not a minimal factorization of 0"))
        }
    }
}

/// Replays a single report or every row of a corpus report.
pub fn recheck_json(text: &str, cap: usize) -> Result<Vec<ReplayOutcome>> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::InvalidQuery(format!("report is not valid JSON: {e}")))?;
    let mut views = Vec::new();
    if let Some(rows) = value.get("rows").and_then(|r| r.as_array()) {
        for row in rows {
            if let Some(report) = row.get("report") {
                views.push(report.clone());
            }
        }
    } else {
        views.push(value);
    }
    views
        .into_iter()
        .map(|v| {
            let view: ReportView = serde_json::from_value(v)
                .map_err(|e| Error::InvalidQuery(format!("malformed report: {e}")))?;
            recheck(&view, cap)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(spec: &str) -> PropertyReport {
        analyze(spec, &AnalyzeOptions::default()).unwrap()
    }

    #[test]
    fn z6() {
        let rep = run("Z6");
        let p = &rep.predicates;
        assert!(!p.bfr && !p.ufr_direct && !p.presimplifiable);
        assert_eq!(p.bouvier_class, BouvierClass::None);
        let cycle = rep.witnesses.iter().find_map(|w| match w {
            Witness::NotBfr {
                length: LengthWitness::Cycle { element, cycle, .. },
            } => Some((*element, cycle.clone())),
            _ => None,
        });
        assert_eq!(cycle, Some((3, vec![3])));
        assert!(rep.witnesses.contains(&Witness::NotPresimplifiable { a: 3, b: 3 }));
        assert!(rep.violations.is_empty());
        assert_eq!(p.max_minimal_zero_length, Some(2));
        assert_eq!(p.min_primes, Some(2));
    }

    #[test]
    fn z4_and_self_idealization() {
        let p = run("Z4").predicates;
        assert!(p.ufr_direct && p.spir);
        assert!(p.bouvier_branches.contains(&BouvierClass::Spir));
        let rep = run("idealize(Z2,self)");
        assert!(rep.predicates.ufr_direct);
        let pair = rep.pair.unwrap();
        assert_eq!(pair.ufr_theorem.unwrap().values(), [true; 4]);
        assert!(rep.violations.is_empty());
    }

    #[test]
    fn output_is_deterministic() {
        for spec in ["Z12", "idealize(Z4,self)", "Z2 x Z2 x Z2"] {
            let a = serde_json::to_string(&run(spec)).unwrap();
            let b = serde_json::to_string(&run(spec)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn witnesses_replay() {
        for spec in ["Z6", "Z12", "Z8", "idealize(Z4,self)", "Z2 x Z4", "Z2[t]/(t^2)[t]/(t^2)"] {
            let rep = run(spec);
            let json = serde_json::to_string(&rep).unwrap();
            let out = recheck_json(&json, 4096).unwrap();
            assert_eq!(out.len(), 1);
            assert!(out[0].ok(), "{spec}: {:?}", out[0]);
            assert!(out[0].checks.len() > 1);
        }
    }

    #[test]
    fn tampered_witnesses_fail() {
        let r = build_ring(&crate::spec::parse_ring("Z6").unwrap(), 4096).unwrap();
        assert!(replay_witness(&r, &Witness::NotPresimplifiable { a: 2, b: 3 }).is_some());
        assert!(replay_witness(&r, &Witness::MinimalZero { factors: vec![2, 3, 3] }).is_some());
        assert!(replay_witness(&r, &Witness::NotAtomic { element: 2 }).is_some());
        let view = ReportView {
            spec: "Z6".into(),
            labels: BTreeMap::from([(3, "4".to_string())]),
            witnesses: vec![],
        };
        assert!(!recheck(&view, 4096).unwrap().ok());
    }

    #[test]
    fn errors_surface() {
        let opts = AnalyzeOptions::default();
        assert_eq!(analyze("Z4 x", &opts).unwrap_err().kind(), "parse");
        assert_eq!(analyze("Z5000", &opts).unwrap_err().kind(), "capacity_exceeded");
        let rep = analyze("idealize(Z4,mquot(self,[1]))", &opts).unwrap();
        assert!(rep.pair.unwrap().ufr_theorem.is_none());
        assert!(!rep.notes.is_empty());
    }
}
