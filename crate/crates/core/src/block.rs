//! The stage-`n` block algebra over F2 and the equal-products identity in
//! its self-idealization.
//!
//! Block `i` (for `1 <= i <= n`) has variables `x[i,1] .. x[i,i+1]`. Each
//! variable squares to zero, variables from different blocks multiply to
//! zero, and the full product of a block is zero. Writing `sigma_i` for the
//! sum of the block-`i` products that omit one variable, the relations
//! `sigma_i = sigma_(i+1)` identify all of them. The basis is the constant
//! together with the squarefree single-block monomials of degree `1..i` in
//! block `i`, except one pivot per identification: the block-`i` monomial
//! omitting `x[i,1]`, for `i >= 2`, rewritten as `sigma_1` plus the rest of
//! `sigma_i`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::idealization::SelfIdealization;
use crate::ring::{Backend, FiniteRing, RingArithmetic};

pub const MAX_STAGE: usize = 6;

const WORDS: usize = 4;

/// An element as an F2 coefficient vector over the reduced basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BlockElem([u64; WORDS]);

impl BlockElem {
    pub const ZERO: BlockElem = BlockElem([0; WORDS]);

    pub fn basis(i: usize) -> Self {
        let mut e = BlockElem::ZERO;
        e.flip(i);
        e
    }

    pub fn bit(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..WORDS).flat_map(move |w| {
            let mut word = self.0[w];
            std::iter::from_fn(move || {
                (word != 0).then(|| {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    w * 64 + b
                })
            })
        })
    }

    fn xor(&self, other: &Self) -> Self {
        let mut out = *self;
        for (o, w) in out.0.iter_mut().zip(other.0) {
            *o ^= w;
        }
        out
    }

    fn leading(&self) -> Option<usize> {
        (0..WORDS)
            .rev()
            .find(|&w| self.0[w] != 0)
            .map(|w| w * 64 + 63 - self.0[w].leading_zeros() as usize)
    }

    /// Raw words, for seeded sampling in tests and examples.
    pub fn from_words(words: [u64; WORDS]) -> Self {
        BlockElem(words)
    }
}

impl fmt::Debug for BlockElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.ones()).finish()
    }
}

/// A squarefree monomial in one block; block 0 is the constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub block: u8,
    /// Bit `j - 1` stands for `x[block, j]`.
    pub mask: u8,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { block: 0, mask: 0 };

    pub fn var(i: usize, j: usize) -> Self {
        Monomial {
            block: i as u8,
            mask: 1 << (j - 1),
        }
    }

    pub fn degree(&self) -> u32 {
        self.mask.count_ones()
    }

    fn full(block: u8) -> u8 {
        ((1u16 << (block + 1)) - 1) as u8
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.block == 0 {
            return f.write_str("1");
        }
        let vars: Vec<String> = (0..8)
            .filter(|j| self.mask >> j & 1 == 1)
            .map(|j| format!("x[{},{}]", self.block, j + 1))
            .collect();
        f.write_str(&vars.join("*"))
    }
}

#[derive(Debug, Clone)]
pub struct BlockAlgebra {
    stage: usize,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// Normal forms of the pivot monomials.
    pivots: HashMap<Monomial, BlockElem>,
    table: Vec<BlockElem>,
}

impl BlockAlgebra {
    pub fn new(stage: usize) -> Result<Self> {
        if !(1..=MAX_STAGE).contains(&stage) {
            return Err(Error::capacity("block algebra stage", stage, MAX_STAGE));
        }
        let pivot = |i: u8| Monomial {
            block: i,
            mask: Monomial::full(i) & !1,
        };
        let mut basis = vec![Monomial::ONE];
        for i in 1..=stage as u8 {
            for mask in 1..Monomial::full(i) {
                let m = Monomial { block: i, mask };
                if i >= 2 && m == pivot(i) {
                    continue;
                }
                basis.push(m);
            }
        }
        let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(k, &m)| (m, k)).collect();
        let mut alg = BlockAlgebra {
            stage,
            basis,
            index,
            pivots: HashMap::new(),
            table: Vec::new(),
        };
        let sigma_one = alg.sigma_one_basis();
        for i in 2..=stage as u8 {
            // pivot_i = sigma_1 + (sigma_i - pivot_i)
            let mut nf = sigma_one;
            for m in Self::sigma_terms(i) {
                if m != pivot(i) {
                    nf = nf.xor(&BlockElem::basis(alg.index[&m]));
                }
            }
            alg.pivots.insert(pivot(i), nf);
        }
        let d = alg.basis.len();
        let mut table = Vec::with_capacity(d * d);
        for a in 0..d {
            for b in 0..d {
                table.push(alg.monomial_product(alg.basis[a], alg.basis[b]));
            }
        }
        alg.table = table;
        Ok(alg)
    }

    pub fn stage(&self) -> usize {
        self.stage
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// `1 + sum (2^(i+1) - 2) - (n - 1)`.
    pub fn expected_dimension(stage: usize) -> usize {
        1 + (1..=stage).map(|i| (1usize << (i + 1)) - 2).sum::<usize>() - (stage - 1)
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    fn sigma_terms(i: u8) -> impl Iterator<Item = Monomial> {
        let full = Monomial::full(i);
        (0..=i).map(move |j| Monomial {
            block: i,
            mask: full & !(1 << j),
        })
    }

    /// `sigma_1 = x[1,1] + x[1,2]`, which has no pivot.
    fn sigma_one_basis(&self) -> BlockElem {
        let mut e = BlockElem::ZERO;
        for m in Self::sigma_terms(1) {
            e = e.xor(&BlockElem::basis(self.index[&m]));
        }
        e
    }

    /// Normal form of any squarefree single-block monomial (zero when it
    /// is a full block product).
    pub fn monomial(&self, m: Monomial) -> BlockElem {
        if m.block != 0 && m.mask == Monomial::full(m.block) {
            return BlockElem::ZERO;
        }
        if let Some(nf) = self.pivots.get(&m) {
            return *nf;
        }
        BlockElem::basis(self.index[&m])
    }

    pub fn var(&self, i: usize, j: usize) -> BlockElem {
        self.monomial(Monomial::var(i, j))
    }

    /// `sigma_i`: the sum of the block-`i` products omitting one variable,
    /// each reduced to normal form.
    pub fn sigma(&self, i: usize) -> BlockElem {
        Self::sigma_terms(i as u8).fold(BlockElem::ZERO, |acc, m| acc.xor(&self.monomial(m)))
    }

    fn monomial_product(&self, a: Monomial, b: Monomial) -> BlockElem {
        if a.block == 0 {
            return self.monomial(b);
        }
        if b.block == 0 {
            return self.monomial(a);
        }
        if a.block != b.block || a.mask & b.mask != 0 {
            return BlockElem::ZERO;
        }
        self.monomial(Monomial {
            block: a.block,
            mask: a.mask | b.mask,
        })
    }

    fn basis_mul(&self, i: usize, j: usize) -> &BlockElem {
        &self.table[i * self.basis.len() + j]
    }

    /// Inverse of a unit by the geometric series `1 + y + y^2 + ...` with
    /// `y = u - 1` nilpotent.
    pub fn inverse(&self, u: &BlockElem) -> Option<BlockElem> {
        if !self.is_unit(u) {
            return None;
        }
        let y = self.add(u, &self.one());
        let mut term = self.one();
        let mut sum = BlockElem::ZERO;
        while !term.is_zero() {
            sum = self.add(&sum, &term);
            term = self.mul(&term, &y);
        }
        Some(sum)
    }

    /// Rank of the span of `m^k`, where `m` is spanned by the non-constant
    /// basis monomials.
    pub fn maximal_power_rank(&self, k: usize) -> usize {
        let gens: Vec<BlockElem> = (1..self.basis.len()).map(BlockElem::basis).collect();
        let mut span = Echelon::from(gens.iter().copied());
        for _ in 1..k {
            let mut next = Echelon::default();
            for v in span.rows() {
                for g in &gens {
                    next.insert(self.mul(v, g));
                }
            }
            span = next;
        }
        span.rank()
    }

    /// Least `k` with `m^k = 0`.
    pub fn nilpotency_index(&self) -> usize {
        (1..).find(|&k| self.maximal_power_rank(k) == 0).unwrap()
    }

    /// Checks `(a b) c = a (b c)` and `a b = b a` on every triple of basis
    /// monomials.
    pub fn check_basis_associativity(&self) -> bool {
        let d = self.basis.len();
        for a in 0..d {
            for b in 0..d {
                if self.basis_mul(a, b) != self.basis_mul(b, a) {
                    return false;
                }
                let ab = *self.basis_mul(a, b);
                for c in 0..d {
                    let left = self.mul(&ab, &BlockElem::basis(c));
                    let right = self.mul(&BlockElem::basis(a), self.basis_mul(b, c));
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Clears bits outside the basis.
    pub fn truncate(&self, e: BlockElem) -> BlockElem {
        let mut out = BlockElem::ZERO;
        for i in e.ones().filter(|&i| i < self.basis.len()) {
            out.flip(i);
        }
        out
    }

    pub fn render(&self, e: &BlockElem) -> String {
        if e.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = e.ones().map(|i| self.basis[i].to_string()).collect();
        terms.join(" + ")
    }

    /// The algebra as a dense table ring, when `2^dimension` fits in `cap`.
    pub fn to_dense(&self, cap: usize) -> Result<FiniteRing> {
        let d = self.basis.len();
        let size = 1usize.checked_shl(d as u32).filter(|&s| d < 63 && s <= cap);
        let size = size.ok_or_else(|| Error::capacity(format!("block({})", self.stage), 1usize << d.min(62), cap))?;
        let to_elem = |k: usize| BlockElem([k as u64, 0, 0, 0]);
        let from_elem = |e: BlockElem| e.0[0] as usize;
        let labels = (0..size).map(|k| self.render(&to_elem(k))).collect();
        FiniteRing::from_fn(
            format!("block({})", self.stage),
            size,
            1,
            |a, b| a ^ b,
            |a, b| from_elem(self.mul(&to_elem(a), &to_elem(b))),
            labels,
        )
    }
}

impl RingArithmetic for BlockAlgebra {
    type Element = BlockElem;

    fn zero(&self) -> BlockElem {
        BlockElem::ZERO
    }
    fn one(&self) -> BlockElem {
        BlockElem::basis(0)
    }
    fn add(&self, a: &BlockElem, b: &BlockElem) -> BlockElem {
        a.xor(b)
    }
    fn mul(&self, a: &BlockElem, b: &BlockElem) -> BlockElem {
        let mut out = BlockElem::ZERO;
        for i in a.ones() {
            for j in b.ones() {
                out = out.xor(self.basis_mul(i, j));
            }
        }
        out
    }
    fn neg(&self, a: &BlockElem) -> BlockElem {
        *a
    }
    fn is_unit(&self, a: &BlockElem) -> bool {
        a.bit(0)
    }
    fn backend(&self) -> Backend {
        Backend::Structured
    }
}

/// Row-reduced F2 vectors keyed by leading bit.
#[derive(Default)]
struct Echelon {
    rows: Vec<BlockElem>,
}

impl Echelon {
    fn from(vs: impl IntoIterator<Item = BlockElem>) -> Self {
        let mut e = Echelon::default();
        for v in vs {
            e.insert(v);
        }
        e
    }

    fn insert(&mut self, mut v: BlockElem) {
        while let Some(lead) = v.leading() {
            match self.rows.iter().find(|r| r.leading() == Some(lead)) {
                Some(r) => v = v.xor(r),
                None => {
                    self.rows.push(v);
                    return;
                }
            }
        }
    }

    fn rows(&self) -> &[BlockElem] {
        &self.rows
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Outcome of checking the equal-products identity at one stage.
#[derive(Debug, Clone, Serialize)]
pub struct Example25Report {
    pub stage: usize,
    pub dimension: usize,
    /// `sigma_1`, rendered.
    pub sigma: String,
    /// Each `prod_j (x[i,j], 1)` equals `(0, sigma_i)`.
    pub products_match_sigma: bool,
    /// All `sigma_i` coincide and are nonzero.
    pub sigma_identified: bool,
    pub factors_nonunits: bool,
    pub nilpotency_index: usize,
    /// `m^(stage + 2) = 0`.
    pub maximal_ideal_vanishes: bool,
    /// Factorization lengths realized on the single element `(0, sigma_1)`.
    pub lengths: Vec<usize>,
    pub passed: bool,
    pub note: String,
}

/// Verifies `(x[1,1],1)(x[1,2],1) = (x[i,1],1) ... (x[i,i+1],1)` for all
/// `i <= stage` in the self-idealization of the stage algebra.
pub fn verify_example25(stage: usize) -> Result<Example25Report> {
    if !(2..=MAX_STAGE).contains(&stage) {
        return Err(Error::InvalidQuery(format!(
            "stage must lie in 2..={MAX_STAGE}, got {stage}"
        )));
    }
    let alg = BlockAlgebra::new(stage)?;
    let pair = SelfIdealization::new(&alg);
    let sigma_one = alg.sigma(1);
    let mut products_match_sigma = true;
    let mut sigma_identified = !sigma_one.is_zero();
    let mut factors_nonunits = true;
    let mut lengths = Vec::new();
    for i in 1..=stage {
        let factors: Vec<(BlockElem, BlockElem)> = (1..=i + 1).map(|j| (alg.var(i, j), alg.one())).collect();
        factors_nonunits &= factors.iter().all(|f| !pair.is_unit(f) && !alg.is_unit(&f.0));
        let product = pair.product(&factors);
        let sigma = alg.sigma(i);
        products_match_sigma &= product == (BlockElem::ZERO, sigma);
        sigma_identified &= sigma == sigma_one;
        if product == (BlockElem::ZERO, sigma_one) {
            lengths.push(factors.len());
        }
    }
    let nilpotency_index = alg.nilpotency_index();
    let maximal_ideal_vanishes = alg.maximal_power_rank(stage + 2) == 0;
    let passed = products_match_sigma
        && sigma_identified
        && factors_nonunits
        && maximal_ideal_vanishes
        && lengths == (2..=stage + 1).collect::<Vec<_>>();
    Ok(Example25Report {
        stage,
        dimension: alg.dimension(),
        sigma: alg.render(&sigma_one),
        products_match_sigma,
        sigma_identified,
        factors_nonunits,
        nilpotency_index,
        maximal_ideal_vanishes,
        lengths,
        passed,
        note: "certifies the identifications sigma_i = sigma_(i+1) as implemented".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(BlockAlgebra::new(1).unwrap().dimension(), 3);
        assert_eq!(BlockAlgebra::new(2).unwrap().dimension(), 8);
        for n in 1..=MAX_STAGE {
            assert_eq!(BlockAlgebra::new(n).unwrap().dimension(), BlockAlgebra::expected_dimension(n));
        }
        assert_eq!(BlockAlgebra::new(6).unwrap().dimension(), 236);
        assert_eq!(BlockAlgebra::new(0).unwrap_err().kind(), "capacity_exceeded");
        assert_eq!(BlockAlgebra::new(7).unwrap_err().kind(), "capacity_exceeded");
    }

    #[test]
    fn relations() {
        let a = BlockAlgebra::new(3).unwrap();
        assert!(a.mul(&a.var(1, 1), &a.var(1, 2)).is_zero());
        assert!(a.mul(&a.var(1, 1), &a.var(2, 1)).is_zero());
        assert!(a.mul(&a.var(2, 2), &a.var(2, 2)).is_zero());
        let x = a.mul(&a.var(2, 1), &a.var(2, 2));
        assert_eq!(a.render(&x), "x[2,1]*x[2,2]");
        let u = a.add(&a.one(), &a.var(1, 1));
        assert_eq!(a.inverse(&u), Some(u));
        assert_eq!(a.sigma(2), a.sigma(1));
        assert_eq!(a.sigma(3), a.sigma(1));
    }

    #[test]
    fn associativity_on_basis() {
        for n in 1..=4 {
            assert!(BlockAlgebra::new(n).unwrap().check_basis_associativity(), "stage {n}");
        }
    }

    #[test]
    fn small_stages_as_tables() {
        let one = BlockAlgebra::new(1).unwrap().to_dense(4096).unwrap();
        assert_eq!(one.size(), 8);
        one.check_axioms().unwrap();
        let two = BlockAlgebra::new(2).unwrap().to_dense(4096).unwrap();
        assert_eq!(two.size(), 256);
        two.check_axioms().unwrap();
        assert_eq!(two.unit_count(), 128);
        assert!(BlockAlgebra::new(3).unwrap().to_dense(4096).is_err());
    }

    #[test]
    fn nilpotency() {
        for n in 1..=MAX_STAGE {
            let a = BlockAlgebra::new(n).unwrap();
            assert_eq!(a.nilpotency_index(), n + 1);
        }
    }

    #[test]
    fn stage_reports() {
        let r = verify_example25(3).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.lengths, vec![2, 3, 4]);
        assert_eq!(verify_example25(2).unwrap().lengths, vec![2, 3]);
        assert_eq!(verify_example25(1).unwrap_err().kind(), "invalid_query");
    }
}
