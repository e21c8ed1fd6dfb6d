//! The divisor graph: an edge `a -> t` labelled `s` whenever `a = s t` with
//! `s` a nonunit and `a != 0`. Factorizations `a = s_1 ... s_k t` are paths,
//! so unbounded lengths are exactly the reachable cycles.

use std::collections::VecDeque;

use petgraph::algo::tarjan_scc;
use petgraph::visit::{GraphBase, IntoNeighbors, IntoNodeIdentifiers, NodeIndexable};
use serde::{Deserialize, Serialize};

use super::Length;
use crate::module::FiniteModule;
use crate::ring::{Elem, FiniteRing};
use crate::set::ElementSet;

/// Adjacency in compressed rows; targets of each row are ascending and
/// carry the smallest label realizing the edge.
#[derive(Debug, Clone)]
struct Adjacency {
    offsets: Vec<u32>,
    targets: Vec<u16>,
    labels: Vec<u16>,
}

impl Adjacency {
    fn row(&self, a: Elem) -> std::ops::Range<usize> {
        self.offsets[a] as usize..self.offsets[a + 1] as usize
    }
}

impl GraphBase for Adjacency {
    type EdgeId = ();
    type NodeId = usize;
}

impl NodeIndexable for Adjacency {
    fn node_bound(&self) -> usize {
        self.offsets.len() - 1
    }
    fn to_index(&self, a: usize) -> usize {
        a
    }
    fn from_index(&self, i: usize) -> usize {
        i
    }
}

impl<'a> IntoNeighbors for &'a Adjacency {
    type Neighbors = std::iter::Map<std::slice::Iter<'a, u16>, fn(&u16) -> usize>;
    fn neighbors(self, a: usize) -> Self::Neighbors {
        let range = self.row(a);
        self.targets[range].iter().map(|&t| t as usize)
    }
}

impl IntoNodeIdentifiers for &Adjacency {
    type NodeIdentifiers = std::ops::Range<usize>;
    fn node_identifiers(self) -> Self::NodeIdentifiers {
        0..self.node_bound()
    }
}

/// What the longest-path analysis counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    /// Nonunit factorizations `a = s_1 ... s_n` of ring elements: a path of
    /// `k` edges must end at a nonunit, giving `k + 1` factors.
    Ring,
    /// Module factorizations `x = r_1 ... r_n y`: any path of `n` edges.
    Module,
}

/// Evidence for a length verdict, replayable by multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LengthWitness {
    /// `element = factors[0] * ... * factors[n-1]` (ring) or
    /// `element = factors[0] ... factors[n-1] * tail` (module).
    Factors {
        element: Elem,
        factors: Vec<Elem>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tail: Option<Elem>,
    },
    /// `path[i] = path_labels[i] * path[i+1]` leads from `element` to
    /// `cycle[0]`, and `cycle[i] = cycle_labels[i] * cycle[i+1]` closes up.
    Cycle {
        element: Elem,
        path: Vec<Elem>,
        path_labels: Vec<Elem>,
        cycle: Vec<Elem>,
        cycle_labels: Vec<Elem>,
    },
}

impl LengthWitness {
    pub fn element(&self) -> Elem {
        match self {
            LengthWitness::Factors { element, .. } | LengthWitness::Cycle { element, .. } => *element,
        }
    }
}

#[derive(Debug, Clone)]
pub struct DivisorGraph {
    kind: GraphKind,
    adj: Adjacency,
    /// Nodes a path may end at.
    terminal: ElementSet,
    nodes: ElementSet,
    length: Vec<Option<Length>>,
    cyclic_component: Vec<bool>,
    component: Vec<u32>,
    edge_count: usize,
}

impl DivisorGraph {
    /// The ring divisor graph on `R \ {0}`.
    pub fn of_ring(r: &FiniteRing) -> Self {
        let nonunits = r.nonunits().to_vec();
        let nodes = ElementSet::from_elements(r.size(), 1..r.size());
        let mut terminal = r.nonunits();
        terminal.remove(0);
        Self::build(GraphKind::Ring, r.size(), &nonunits, |s, t| r.mul(s, t), nodes, terminal)
    }

    /// The module divisor graph on `M \ {0}` with nonunit scalar labels.
    pub fn of_module(m: &FiniteModule) -> Self {
        let nonunits = m.ring().nonunits().to_vec();
        let nodes = ElementSet::from_elements(m.size(), 1..m.size());
        Self::build(GraphKind::Module, m.size(), &nonunits, |s, x| m.act(s, x), nodes.clone(), nodes)
    }

    fn build(
        kind: GraphKind,
        size: usize,
        labels_in_order: &[Elem],
        prod: impl Fn(Elem, Elem) -> Elem,
        nodes: ElementSet,
        terminal: ElementSet,
    ) -> Self {
        // stamp[a] == t marks that a -> t is already recorded
        let mut stamp = vec![usize::MAX; size];
        let mut counts = vec![0u32; size + 1];
        for t in 1..size {
            for &s in labels_in_order {
                let a = prod(s, t);
                if a != 0 && stamp[a] != t {
                    stamp[a] = t;
                    counts[a + 1] += 1;
                }
            }
        }
        for i in 0..size {
            counts[i + 1] += counts[i];
        }
        let edge_count = counts[size] as usize;
        let mut fill = counts.clone();
        let mut targets = vec![0u16; edge_count];
        let mut labels = vec![0u16; edge_count];
        stamp.fill(usize::MAX);
        for t in 1..size {
            for &s in labels_in_order {
                let a = prod(s, t);
                if a != 0 && stamp[a] != t {
                    stamp[a] = t;
                    let slot = fill[a] as usize;
                    targets[slot] = t as u16;
                    labels[slot] = s as u16;
                    fill[a] += 1;
                }
            }
        }
        let adj = Adjacency {
            offsets: counts,
            targets,
            labels,
        };
        let mut g = DivisorGraph {
            kind,
            adj,
            terminal,
            nodes,
            length: vec![None; size],
            cyclic_component: Vec::new(),
            component: vec![0; size],
            edge_count,
        };
        g.analyze();
        g
    }

    fn analyze(&mut self) {
        // components arrive sinks first, so successors are always settled
        let sccs = tarjan_scc(&self.adj);
        self.cyclic_component = vec![false; sccs.len()];
        for (c, scc) in sccs.iter().enumerate() {
            for &v in scc {
                self.component[v] = c as u32;
            }
            let cyclic = scc.len() > 1 || self.has_self_loop(scc[0]);
            self.cyclic_component[c] = cyclic;
            for &v in scc {
                if !self.nodes.contains(v) {
                    continue;
                }
                if cyclic {
                    self.length[v] = Some(Length::Unbounded);
                    continue;
                }
                let mut best = self.terminal.contains(v).then_some(Length::Finite(0));
                for t in self.successors(v) {
                    let next = match self.length[t] {
                        Some(Length::Unbounded) => Some(Length::Unbounded),
                        Some(Length::Finite(k)) => Some(Length::Finite(k + 1)),
                        None => None,
                    };
                    best = best.max(next);
                }
                self.length[v] = best;
            }
        }
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn successors(&self, a: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.adj.targets[self.adj.row(a)].iter().map(|&t| t as usize)
    }

    /// Edges out of `a` as `(target, smallest label)`.
    pub fn edges(&self, a: Elem) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        let range = self.adj.row(a);
        self.adj.targets[range.clone()]
            .iter()
            .zip(&self.adj.labels[range])
            .map(|(&t, &s)| (t as usize, s as usize))
    }

    pub fn label(&self, a: Elem, t: Elem) -> Option<Elem> {
        self.edges(a).find(|&(u, _)| u == t).map(|(_, s)| s)
    }

    pub fn has_self_loop(&self, a: Elem) -> bool {
        self.label(a, a).is_some()
    }

    /// Nodes carrying a self-loop, ascending.
    pub fn self_loops(&self) -> Vec<Elem> {
        self.nodes.iter().filter(|&a| self.has_self_loop(a)).collect()
    }

    /// Longest path (in edges) from `a` to a terminal node, `None` when no
    /// terminal is reachable (units in the ring graph, and node 0).
    pub fn longest_path(&self, a: Elem) -> Option<Length> {
        self.length[a]
    }

    /// Maximal number of factors: `1 + path` for rings, `path` for modules.
    pub fn max_length(&self, a: Elem) -> Option<Length> {
        let offset = match self.kind {
            GraphKind::Ring => 1,
            GraphKind::Module => 0,
        };
        self.length[a].map(|l| match l {
            Length::Finite(k) => Length::Finite(k + offset),
            Length::Unbounded => Length::Unbounded,
        })
    }

    /// True iff no cycle is reachable from any terminal node.
    pub fn is_bounded(&self) -> bool {
        self.terminal.iter().all(|a| self.length[a] != Some(Length::Unbounded))
    }

    /// Smallest terminal node whose length is unbounded.
    pub fn first_unbounded(&self) -> Option<Elem> {
        self.terminal.iter().find(|&a| self.length[a] == Some(Length::Unbounded))
    }

    pub fn is_cyclic_node(&self, a: Elem) -> bool {
        self.cyclic_component[self.component[a] as usize]
    }

    /// A witness for the length of `a`: the factors of a longest
    /// factorization, or a path into a cycle. Ties break toward the
    /// smallest successor.
    pub fn witness(&self, a: Elem) -> Option<LengthWitness> {
        match self.length[a]? {
            Length::Finite(_) => {
                let mut factors = Vec::new();
                let mut v = a;
                loop {
                    let here = self.length[v];
                    let next = self.edges(v).find(|&(t, _)| {
                        matches!((self.length[t], here), (Some(Length::Finite(k)), Some(Length::Finite(h))) if k + 1 == h)
                    });
                    match next {
                        Some((t, s)) => {
                            factors.push(s);
                            v = t;
                        }
                        None => break,
                    }
                }
                let tail = match self.kind {
                    GraphKind::Ring => {
                        factors.push(v);
                        None
                    }
                    GraphKind::Module => Some(v),
                };
                Some(LengthWitness::Factors {
                    element: a,
                    factors,
                    tail,
                })
            }
            Length::Unbounded => {
                let (path, path_labels) = self.path_to_cycle(a);
                let start = path.last().copied().unwrap_or(a);
                let (cycle, cycle_labels) = self.cycle_through(start);
                Some(LengthWitness::Cycle {
                    element: a,
                    path,
                    path_labels,
                    cycle,
                    cycle_labels,
                })
            }
        }
    }

    /// BFS from `a` to the nearest node of a cyclic component. The path
    /// lists `a` first and the cycle entry last; it is empty when `a` lies
    /// on a cycle itself.
    fn path_to_cycle(&self, a: Elem) -> (Vec<Elem>, Vec<Elem>) {
        if self.is_cyclic_node(a) {
            return (Vec::new(), Vec::new());
        }
        let n = self.length.len();
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::from([a]);
        parent[a] = a;
        while let Some(v) = queue.pop_front() {
            if self.is_cyclic_node(v) {
                let mut path = vec![v];
                let mut u = v;
                while u != a {
                    u = parent[u];
                    path.push(u);
                }
                path.reverse();
                let labels = path.windows(2).map(|w| self.label(w[0], w[1]).unwrap()).collect();
                return (path, labels);
            }
            for t in self.successors(v) {
                if parent[t] == usize::MAX {
                    parent[t] = v;
                    queue.push_back(t);
                }
            }
        }
        unreachable!("unbounded node without a reachable cycle")
    }

    /// Shortest cycle through `c` inside its component; `cycle[0] = c` and
    /// the final edge returns to `c`.
    fn cycle_through(&self, c: Elem) -> (Vec<Elem>, Vec<Elem>) {
        if let Some(s) = self.label(c, c) {
            return (vec![c], vec![s]);
        }
        let comp = self.component[c];
        let n = self.length.len();
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for t in self.successors(c) {
            if self.component[t] == comp && parent[t] == usize::MAX {
                parent[t] = c;
                queue.push_back(t);
            }
        }
        while let Some(v) = queue.pop_front() {
            if self.label(v, c).is_some() {
                let mut cycle = vec![v];
                let mut u = v;
                while u != c {
                    u = parent[u];
                    cycle.push(u);
                }
                cycle.reverse();
                let mut labels: Vec<Elem> = cycle.windows(2).map(|w| self.label(w[0], w[1]).unwrap()).collect();
                labels.push(self.label(v, c).unwrap());
                return (cycle, labels);
            }
            for t in self.successors(v) {
                if self.component[t] == comp && parent[t] == usize::MAX {
                    parent[t] = v;
                    queue.push_back(t);
                }
            }
        }
        unreachable!("cyclic component without a cycle through {c}")
    }
}

/// Replays a ring witness: every factor and label a nonunit, every step a
/// valid product, and the cycle closed.
pub fn check_ring_witness(r: &FiniteRing, w: &LengthWitness) -> bool {
    match w {
        LengthWitness::Factors { element, factors, tail } => {
            tail.is_none()
                && !factors.is_empty()
                && factors.iter().all(|&f| f < r.size() && !r.is_unit(f))
                && r.product(factors) == *element
        }
        LengthWitness::Cycle {
            element,
            path,
            path_labels,
            cycle,
            cycle_labels,
        } => replay_cycle(
            r.size(),
            *element,
            path,
            path_labels,
            cycle,
            cycle_labels,
            |s| !r.is_unit(s),
            |s, t| r.mul(s, t),
        ),
    }
}

/// Module counterpart of [`check_ring_witness`].
pub fn check_module_witness(m: &FiniteModule, w: &LengthWitness) -> bool {
    let r = m.ring();
    match w {
        LengthWitness::Factors { element, factors, tail } => {
            let Some(y) = *tail else { return false };
            y < m.size()
                && factors.iter().all(|&f| f < r.size() && !r.is_unit(f))
                && factors.iter().rev().fold(y, |acc, &f| m.act(f, acc)) == *element
        }
        LengthWitness::Cycle {
            element,
            path,
            path_labels,
            cycle,
            cycle_labels,
        } => replay_cycle(
            m.size(),
            *element,
            path,
            path_labels,
            cycle,
            cycle_labels,
            |s| s < r.size() && !r.is_unit(s),
            |s, t| m.act(s, t),
        ),
    }
}

#[allow(clippy::too_many_arguments)]
fn replay_cycle(
    size: usize,
    element: Elem,
    path: &[Elem],
    path_labels: &[Elem],
    cycle: &[Elem],
    cycle_labels: &[Elem],
    nonunit: impl Fn(Elem) -> bool,
    prod: impl Fn(Elem, Elem) -> Elem,
) -> bool {
    if cycle.is_empty() || cycle.len() != cycle_labels.len() {
        return false;
    }
    if path.iter().chain(cycle).any(|&v| v == 0 || v >= size) {
        return false;
    }
    let path_ok = if path.is_empty() {
        element == cycle[0]
    } else {
        path[0] == element
            && *path.last().unwrap() == cycle[0]
            && path_labels.len() + 1 == path.len()
            && path
                .windows(2)
                .zip(path_labels)
                .all(|(w, &s)| nonunit(s) && prod(s, w[1]) == w[0])
    };
    let cycle_ok = (0..cycle.len()).all(|i| {
        let s = cycle_labels[i];
        nonunit(s) && prod(s, cycle[(i + 1) % cycle.len()]) == cycle[i]
    });
    path_ok && cycle_ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{make_self_module, make_zero_module};
    use crate::ring::{make_polyquot, make_product, make_zn};
    use std::sync::Arc;

    #[test]
    fn edges_are_sound_and_units_are_sinks() {
        for n in [4, 6, 8, 12, 30] {
            let r = make_zn(n).unwrap();
            let g = DivisorGraph::of_ring(&r);
            for a in 1..n {
                for (t, s) in g.edges(a) {
                    assert_eq!(r.mul(s, t), a);
                    assert!(!r.is_unit(s));
                }
                if r.is_unit(a) {
                    assert_eq!(g.successors(a).count(), 0);
                }
            }
        }
    }

    #[test]
    fn anchor_lengths() {
        let z6 = make_zn(6).unwrap();
        let g6 = DivisorGraph::of_ring(&z6);
        assert_eq!(g6.max_length(3), Some(Length::Unbounded));
        let w = g6.witness(3).unwrap();
        assert_eq!(
            w,
            LengthWitness::Cycle {
                element: 3,
                path: vec![],
                path_labels: vec![],
                cycle: vec![3],
                cycle_labels: vec![3]
            }
        );
        assert!(check_ring_witness(&z6, &w));

        let z4 = make_zn(4).unwrap();
        assert_eq!(DivisorGraph::of_ring(&z4).max_length(2), Some(Length::Finite(1)));

        let z8 = make_zn(8).unwrap();
        let g8 = DivisorGraph::of_ring(&z8);
        assert_eq!(g8.max_length(4), Some(Length::Finite(2)));
        assert_eq!(g8.max_length(2), Some(Length::Finite(1)));
        let w = g8.witness(4).unwrap();
        assert_eq!(
            w,
            LengthWitness::Factors {
                element: 4,
                factors: vec![2, 2],
                tail: None
            }
        );
        assert!(g8.is_bounded());
        assert!(!g6.is_bounded());
        assert_eq!(g8.max_length(1), None);
    }

    #[test]
    fn cycles_longer_than_one() {
        // in Z2 x Z2 x Z3 every nonzero nonunit is reachable from an idempotent
        let r = make_product(&make_product(&make_zn(2).unwrap(), &make_zn(2).unwrap()).unwrap(), &make_zn(3).unwrap()).unwrap();
        let g = DivisorGraph::of_ring(&r);
        for a in 1..r.size() {
            if let Some(w) = g.witness(a) {
                assert!(check_ring_witness(&r, &w), "{w:?}");
            }
        }
    }

    #[test]
    fn local_rings_are_bounded() {
        let z2 = make_zn(2).unwrap();
        let dual = make_polyquot(&z2, &[0, 0, 1]).unwrap();
        let bi = make_polyquot(&dual, &[0, 0, 1]).unwrap();
        for r in [make_zn(27).unwrap(), make_zn(32).unwrap(), bi] {
            let g = DivisorGraph::of_ring(&r);
            assert!(g.is_bounded(), "{}", r.name());
            assert!(g.self_loops().is_empty());
        }
    }

    #[test]
    fn module_graphs() {
        let z6 = Arc::new(make_zn(6).unwrap());
        let g = DivisorGraph::of_module(&make_self_module(&z6));
        assert!(!g.is_bounded());
        assert!(g.has_self_loop(3));

        let z4 = Arc::new(make_zn(4).unwrap());
        let m = make_self_module(&z4);
        let g = DivisorGraph::of_module(&m);
        assert!(g.is_bounded());
        assert_eq!(g.max_length(2), Some(Length::Finite(1)));
        let w = g.witness(2).unwrap();
        assert!(check_module_witness(&m, &w));

        let zero = make_zero_module(&z4);
        assert!(DivisorGraph::of_module(&zero).is_bounded());
    }
}
