//! Minimal factorizations of zero.
//!
//! `0 = a_1 ... a_n` is minimal when no proper sub-multiset multiplies to 0,
//! which is the same as every leave-one-out product being nonzero. Building
//! a factorization one factor at a time, the future of a partial product is
//! governed by the pair `(p, U)`: `p` the product so far and `U` the union of
//! the annihilators of the leave-one-out products. A new factor `a` is
//! admissible iff `a` is not in `U`; it moves the state to
//! `(p a, {x : a x in U} + Ann(p))`. A path that revisits a state repeats a
//! prefix product and can never finish minimal, so the part of the state
//! graph that reaches a finished factorization is acyclic and a memoized
//! search is exact.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};
use crate::set::ElementSet;

/// Default bound on the number of search states.
pub const DEFAULT_ZERO_SEARCH_STATES: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroBoundedness {
    /// Always true for finite rings; kept so reports state it explicitly.
    pub u_bounded: bool,
    pub max_length: usize,
    /// A minimal factorization of the maximal length, lexicographically
    /// smallest along the search order.
    pub witness: Vec<Elem>,
    pub states: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalZeroFactorizations {
    /// Factor lists with nondecreasing indices, in lexicographic order.
    pub factorizations: Vec<Vec<Elem>>,
    /// False when the listing stopped at the requested limit.
    pub complete: bool,
    pub max_length: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    OnStack,
    /// Best number of further factors (0 = no completion) and the factor
    /// that achieves it.
    Done(u32, Elem),
}

struct Frame {
    state: usize,
    next: usize,
    best: u32,
    choice: Elem,
    pending: Option<(Elem, usize)>,
}

struct Search<'r> {
    r: &'r FiniteRing,
    nonunits: Vec<Elem>,
    keys: Vec<(Elem, ElementSet)>,
    index: HashMap<(Elem, ElementSet), usize>,
    status: Vec<Status>,
    ann: HashMap<Elem, ElementSet>,
    cap: usize,
}

impl<'r> Search<'r> {
    fn new(r: &'r FiniteRing, cap: usize) -> Self {
        Search {
            r,
            nonunits: r.nonunits().to_vec(),
            keys: Vec::new(),
            index: HashMap::new(),
            status: Vec::new(),
            ann: HashMap::new(),
            cap,
        }
    }

    fn annihilator(&mut self, p: Elem) -> ElementSet {
        let r = self.r;
        self.ann
            .entry(p)
            .or_insert_with(|| ElementSet::from_elements(r.size(), r.elements().filter(|&x| r.mul(p, x) == 0)))
            .clone()
    }

    /// `None` for a finished factorization, else the successor key.
    fn step(&mut self, state: usize, a: Elem) -> Option<Option<(Elem, ElementSet)>> {
        let (p, ref u) = self.keys[state];
        if u.contains(a) {
            return None;
        }
        let pa = self.r.mul(p, a);
        if pa == 0 {
            return Some(None);
        }
        let r = self.r;
        let mut next = ElementSet::from_elements(r.size(), r.elements().filter(|&x| u.contains(r.mul(a, x))));
        next.union_with(&self.annihilator(p));
        Some(Some((pa, next)))
    }

    fn intern(&mut self, key: (Elem, ElementSet)) -> Result<(usize, bool)> {
        if let Some(&id) = self.index.get(&key) {
            return Ok((id, false));
        }
        if self.keys.len() >= self.cap {
            return Err(Error::capacity("minimal zero factorization search states", self.keys.len() + 1, self.cap));
        }
        let id = self.keys.len();
        self.keys.push(key.clone());
        self.index.insert(key, id);
        self.status.push(Status::OnStack);
        Ok((id, true))
    }

    fn run(&mut self) -> Result<usize> {
        let root = self.intern((self.r.one(), ElementSet::empty(self.r.size())))?.0;
        let mut stack = vec![Frame {
            state: root,
            next: 0,
            best: 0,
            choice: 0,
            pending: None,
        }];
        while let Some(top) = stack.last_mut() {
            if let Some((a, child)) = top.pending.take() {
                if let Status::Done(v, _) = self.status[child] {
                    if v > 0 && v + 1 > top.best {
                        top.best = v + 1;
                        top.choice = a;
                    }
                }
            }
            let state = top.state;
            if top.next == self.nonunits.len() {
                let (best, choice) = (top.best, top.choice);
                self.status[state] = Status::Done(best, choice);
                stack.pop();
                continue;
            }
            let a = self.nonunits[top.next];
            top.next += 1;
            match self.step(state, a) {
                None => {}
                Some(None) => {
                    let top = stack.last_mut().unwrap();
                    if top.best < 1 {
                        top.best = 1;
                        top.choice = a;
                    }
                }
                Some(Some(key)) => {
                    let (child, fresh) = self.intern(key)?;
                    let top = stack.last_mut().unwrap();
                    match self.status[child] {
                        Status::OnStack if !fresh => {}
                        Status::Done(v, _) => {
                            if v > 0 && v + 1 > top.best {
                                top.best = v + 1;
                                top.choice = a;
                            }
                        }
                        Status::OnStack => {
                            top.pending = Some((a, child));
                            stack.push(Frame {
                                state: child,
                                next: 0,
                                best: 0,
                                choice: 0,
                                pending: None,
                            });
                        }
                    }
                }
            }
        }
        Ok(root)
    }

    fn value(&self, state: usize) -> u32 {
        match self.status[state] {
            Status::Done(v, _) => v,
            Status::OnStack => 0,
        }
    }

    fn witness(&mut self, root: usize) -> Vec<Elem> {
        let mut out = Vec::new();
        let mut state = root;
        while let Status::Done(v, a) = self.status[state] {
            if v == 0 {
                break;
            }
            out.push(a);
            match self.step(state, a) {
                Some(Some(key)) => state = self.index[&key],
                _ => break,
            }
        }
        out
    }
}

/// The maximal length of a minimal factorization of 0, with a witness.
pub fn u_boundedness_of_zero(r: &FiniteRing) -> Result<ZeroBoundedness> {
    u_boundedness_of_zero_capped(r, DEFAULT_ZERO_SEARCH_STATES)
}

pub fn u_boundedness_of_zero_capped(r: &FiniteRing, cap: usize) -> Result<ZeroBoundedness> {
    let mut search = Search::new(r, cap);
    let root = search.run()?;
    let max_length = search.value(root) as usize;
    let witness = search.witness(root);
    debug_assert!(is_minimal_zero_factorization(r, &witness));
    Ok(ZeroBoundedness {
        u_bounded: true,
        max_length,
        witness,
        states: search.keys.len(),
    })
}

/// Lists minimal factorizations of 0 as nondecreasing factor lists, up to
/// `limit` of them. Dead branches are cut using the exact search values.
pub fn minimal_factorizations_of_zero(r: &FiniteRing, limit: usize) -> Result<MinimalZeroFactorizations> {
    let mut search = Search::new(r, DEFAULT_ZERO_SEARCH_STATES);
    let root = search.run()?;
    let max_length = search.value(root) as usize;
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    let complete = enumerate(&mut search, root, 0, &mut prefix, &mut out, limit);
    Ok(MinimalZeroFactorizations {
        factorizations: out,
        complete,
        max_length,
    })
}

fn enumerate(
    search: &mut Search<'_>,
    state: usize,
    from: usize,
    prefix: &mut Vec<Elem>,
    out: &mut Vec<Vec<Elem>>,
    limit: usize,
) -> bool {
    for i in from..search.nonunits.len() {
        let a = search.nonunits[i];
        match search.step(state, a) {
            None => {}
            Some(None) => {
                if out.len() == limit {
                    return false;
                }
                prefix.push(a);
                out.push(prefix.clone());
                prefix.pop();
            }
            Some(Some(key)) => {
                let child = search.index[&key];
                if search.value(child) == 0 {
                    continue;
                }
                prefix.push(a);
                let done = enumerate(search, child, i, prefix, out, limit);
                prefix.pop();
                if !done {
                    return false;
                }
            }
        }
    }
    true
}

/// Nonunit factors, product 0, and every leave-one-out product nonzero.
/// A sub-multiset with product 0 makes every superset vanish as well, so
/// the leave-one-out products cover all proper sub-multisets.
pub fn is_minimal_zero_factorization(r: &FiniteRing, factors: &[Elem]) -> bool {
    if factors.is_empty() || factors.iter().any(|&a| a >= r.size() || r.is_unit(a)) {
        return false;
    }
    if r.product(factors) != 0 {
        return false;
    }
    (0..factors.len()).all(|i| {
        let rest: Vec<Elem> = factors.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &a)| a).collect();
        r.product(&rest) != 0
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_polyquot, make_product, make_zn};

    fn z(n: usize) -> FiniteRing {
        make_zn(n).unwrap()
    }

    #[test]
    fn anchors() {
        let r = u_boundedness_of_zero(&z(6)).unwrap();
        assert_eq!((r.max_length, r.witness.clone()), (2, vec![2, 3]));
        assert_eq!(u_boundedness_of_zero(&z(4)).unwrap().witness, vec![2, 2]);
        assert_eq!(u_boundedness_of_zero(&z(8)).unwrap().max_length, 3);
        assert_eq!(u_boundedness_of_zero(&z(5)).unwrap().witness, vec![0]);
        let z2 = z(2);
        let cube = make_product(&z2, &make_product(&z2, &z2).unwrap()).unwrap();
        let rep = u_boundedness_of_zero(&cube).unwrap();
        assert_eq!(rep.max_length, 3);
        assert_eq!(rep.witness, vec![3, 5, 6]);
        assert_eq!(u_boundedness_of_zero(&make_product(&z2, &z(3)).unwrap()).unwrap().max_length, 2);
    }

    #[test]
    fn listing_is_minimal_and_agrees_with_search() {
        let z2 = z(2);
        let rings = vec![
            z(12),
            z(16),
            make_product(&z2, &z(4)).unwrap(),
            make_polyquot(&make_polyquot(&z2, &[0, 0, 1]).unwrap(), &[0, 0, 1]).unwrap(),
        ];
        for r in &rings {
            let list = minimal_factorizations_of_zero(r, 100_000).unwrap();
            assert!(list.complete);
            for f in &list.factorizations {
                assert!(is_minimal_zero_factorization(r, f), "{} {f:?}", r.name());
                assert!(f.windows(2).all(|w| w[0] <= w[1]));
            }
            let longest = list.factorizations.iter().map(Vec::len).max().unwrap();
            assert_eq!(longest, list.max_length);
            assert_eq!(longest, u_boundedness_of_zero(r).unwrap().max_length);
        }
    }

    #[test]
    fn listing_limit_is_flagged() {
        let list = minimal_factorizations_of_zero(&z(12), 3).unwrap();
        assert!(!list.complete);
        assert_eq!(list.factorizations.len(), 3);
    }

    #[test]
    fn state_cap() {
        assert_eq!(u_boundedness_of_zero_capped(&z(30), 2).unwrap_err().kind(), "capacity_exceeded");
    }

    #[test]
    fn minimality_check() {
        let r = z(6);
        assert!(is_minimal_zero_factorization(&r, &[2, 3]));
        assert!(!is_minimal_zero_factorization(&r, &[2, 3, 3]));
        assert!(!is_minimal_zero_factorization(&r, &[2, 5]));
        assert!(is_minimal_zero_factorization(&r, &[0]));
        assert!(!is_minimal_zero_factorization(&r, &[0, 2]));
    }
}
