//! Independent oracles and the shared test corpus. Everything here uses
//! ring multiplication only, never the library's graph or search code.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use idealab::factor::Length;
use idealab::module::FiniteModule;
use idealab::ring::local_maximal_ideal;
use idealab::spec::{module_from_spec, ring_from_spec};
use idealab::{Elem, FiniteRing};

pub fn ring(spec: &str) -> Arc<FiniteRing> {
    ring_from_spec(spec).unwrap_or_else(|e| panic!("{spec}: {e}"))
}

pub fn module(spec: &str, r: &Arc<FiniteRing>) -> Arc<FiniteModule> {
    module_from_spec(spec, r).unwrap_or_else(|e| panic!("{spec}: {e}"))
}

pub fn nonunits(r: &FiniteRing) -> Vec<Elem> {
    r.elements().filter(|&a| !r.is_unit(a)).collect()
}

/// Maximal nonunit-factorization length of every element by layers:
/// `P_k` holds the products of `k` nonunits. The layers shrink, and once
/// `P_{k+1} = P_k` every element left is a product of arbitrarily many
/// nonunits. The loop is capped at `|R| + 1` layers, which always suffices.
pub fn brute_force_lengths(r: &FiniteRing) -> Vec<Option<Length>> {
    let n = r.size();
    let nu = nonunits(r);
    let mut layer: BTreeSet<Elem> = nu.iter().copied().collect();
    let mut deepest = vec![0usize; n];
    for &a in &layer {
        deepest[a] = 1;
    }
    for k in 2..=n + 2 {
        let next: BTreeSet<Elem> = nu.iter().flat_map(|&s| layer.iter().map(move |&p| (s, p))).map(|(s, p)| r.mul(s, p)).collect();
        assert!(next.is_subset(&layer), "layers must shrink");
        if next == layer {
            return (0..n)
                .map(|a| {
                    if a == 0 || r.is_unit(a) {
                        None
                    } else if layer.contains(&a) {
                        Some(Length::Unbounded)
                    } else {
                        Some(Length::Finite(deepest[a]))
                    }
                })
                .collect();
        }
        for &a in &next {
            deepest[a] = k;
        }
        layer = next;
    }
    panic!("layers of {} did not stabilize within the depth cap", r.name());
}

/// Every proper sub-multiset of `factors` has nonzero product and the whole
/// product is 0, checked over all `2^n` subsets.
pub fn is_minimal_by_subsets(r: &FiniteRing, factors: &[Elem]) -> bool {
    let n = factors.len();
    if n == 0 || n > 20 || factors.iter().any(|&a| r.is_unit(a)) {
        return false;
    }
    let prod = |mask: u32| {
        (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .fold(r.one(), |acc, i| r.mul(acc, factors[i]))
    };
    let full = (1u32 << n) - 1;
    prod(full) == 0 && (0..full).all(|mask| prod(mask) != 0)
}

/// Longest minimal factorization of 0, by enumerating nondecreasing
/// factor lists. Prefix products of a minimal factorization are distinct
/// nonzero nonunits, which bounds the length by their count plus one. A
/// prefix is dropped once a proper sub-multiset has its product: whatever
/// completes the prefix to 0 would complete that sub-multiset too.
pub fn brute_force_zero_length(r: &FiniteRing) -> usize {
    let nu = nonunits(r);
    let bound = nu.len();
    let mut best = 0;
    // subset products of the current prefix, the full prefix product last
    fn go(r: &FiniteRing, nu: &[Elem], from: usize, subsets: &[Elem], len: usize, bound: usize, best: &mut usize) {
        if len >= bound {
            return;
        }
        for (i, &a) in nu.iter().enumerate().skip(from) {
            let full = r.mul(*subsets.last().unwrap(), a);
            let proper_with_a = subsets[..subsets.len() - 1].iter().map(|&s| r.mul(s, a));
            let mut next: Vec<Elem> = subsets.to_vec();
            let mut dead = false;
            for p in proper_with_a {
                if p == 0 {
                    dead = true;
                    break;
                }
                next.push(p);
            }
            if dead {
                continue;
            }
            if full == 0 {
                *best = (*best).max(len + 1);
                continue;
            }
            if next.contains(&full) {
                continue;
            }
            // keep the full product last
            next.push(full);
            go(r, nu, i, &next, len + 1, bound, best);
        }
    }
    go(r, &nu, 0, &[r.one()], 0, bound, &mut best);
    best
}

/// Atoms by the definition: `a = b c` with nonunits forces `b` or `c` to be
/// an associate of `a`.
pub fn brute_force_atoms(r: &FiniteRing) -> Vec<Elem> {
    let units: Vec<Elem> = r.elements().filter(|&u| r.is_unit(u)).collect();
    let assoc = |a: Elem, b: Elem| units.iter().any(|&u| r.mul(u, b) == a);
    let nu = nonunits(r);
    nu.iter()
        .copied()
        .filter(|&a| {
            nu.iter()
                .all(|&b| nu.iter().all(|&c| r.mul(b, c) != a || assoc(a, b) || assoc(a, c)))
        })
        .collect()
}

/// `(ring spec, module spec)` pairs with `|R||M| <= 4096`.
pub fn pair_corpus() -> Vec<(String, String)> {
    let mut pairs: Vec<(String, String)> = Vec::new();
    let mut add = |r: &str, m: &str| pairs.push((r.to_string(), m.to_string()));
    for p in [2, 3, 5, 7, 11, 13] {
        add(&format!("Z{p}"), "self");
    }
    for p in [2, 3, 5] {
        add(&format!("Z{p}"), "free(2)");
    }
    for m in ["self", "mquot(self,[2])", "free(2)", "mquot(free(2),[2])"] {
        add("Z4", m);
    }
    for m in ["self", "mquot(self,[2])", "mquot(self,[4])"] {
        add("Z8", m);
    }
    for m in ["self", "mquot(self,[3])"] {
        add("Z9", m);
    }
    for m in ["self", "mquot(self,[2])", "mquot(self,[3])"] {
        add("Z6", m);
    }
    add("Z10", "self");
    add("Z12", "self");
    add("Z16", "self");
    add("Z16", "mquot(self,[2])");
    add("Z25", "mquot(self,[5])");
    add("Z27", "self");
    add("Z27", "mquot(self,[3])");
    add("Z32", "self");
    add("Z64", "mquot(self,[2])");
    for m in ["self", "mquot(self,[2])", "free(2)"] {
        add("Z2[t]/(t^2)", m);
    }
    add("Z2[t]/(t^3)", "self");
    add("Z2[t]/(t^3)", "mquot(self,[2])");
    add("Z3[t]/(t^2)", "self");
    add("Z3[t]/(t^2)", "mquot(self,[3])");
    add("Z2 x Z2", "self");
    add("Z2 x Z2", "free(2)");
    add("Z2 x Z3", "self");
    add("Z2[t]/(t^2+t+1)", "self");
    add("Z2[t]/(t^2+t+1)", "free(2)");
    add("Z4[t]/(t^2+t+1)", "self");
    add("Z4[t]/(t^2+t+1)", "mquot(self,[2])");
    let q = LOCAL_SQUARE_ZERO;
    add(q, "self");
    add(q, &residue_field_module(q));
    pairs
}

/// `(Z2[x]/(x^2))[y]/(y^2)` modulo `xy`: local, `m^2 = 0`, `m` not principal.
pub const LOCAL_SQUARE_ZERO: &str = "quot(Z2[t]/(t^2)[t]/(t^2),[8])";

/// `R/m` as an `R`-module, for a local ring `R`.
pub fn residue_field_module(spec: &str) -> String {
    let r = ring(spec);
    let m = local_maximal_ideal(&r).expect("local ring");
    let gens: Vec<String> = m.to_vec().iter().filter(|&&g| g != 0).map(|g| g.to_string()).collect();
    format!("mquot(self,[{}])", gens.join(","))
}

/// Standalone rings beyond the pairs: the cyclic rings, products of
/// fields, and a few polynomial quotients.
pub fn ring_corpus() -> Vec<String> {
    let mut out: Vec<String> = (2..=64).map(|n| format!("Z{n}")).collect();
    out.extend(reduced_corpus());
    out.extend(
        [
            "Z2[t]/(t^2)",
            "Z2[t]/(t^3)",
            "Z3[t]/(t^2)",
            "Z4[t]/(t^2)",
            "Z4[t]/(t^2+t+1)",
            "Z2[t]/(t^2)[t]/(t^2)",
            LOCAL_SQUARE_ZERO,
            "Z2 x Z4",
            "Z4 x Z4",
            "Z3 x Z9",
            "Z2 x Z2[t]/(t^2)",
            "block(1)",
            "block(2)",
        ]
        .map(String::from),
    );
    out
}

/// Products of 2 to 4 fields among Z2, Z3 and F4.
pub fn reduced_corpus() -> Vec<String> {
    let fields = ["Z2", "Z3", "Z2[t]/(t^2+t+1)"];
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..3).map(|i| vec![i]).collect();
    while let Some(choice) = stack.pop() {
        if choice.len() >= 2 {
            let parts: Vec<&str> = choice.iter().map(|&i| fields[i]).collect();
            out.push(parts.join(" x "));
        }
        if choice.len() < 4 {
            let last = *choice.last().unwrap();
            for i in last..3 {
                let mut next = choice.clone();
                next.push(i);
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

/// Every ring in the pair corpus, as its idealization spec.
pub fn idealization_specs() -> Vec<String> {
    pair_corpus()
        .into_iter()
        .map(|(r, m)| format!("idealize({r},{m})"))
        .collect()
}
