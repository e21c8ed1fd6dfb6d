//! Construction specs: a small expression language for rings and modules.
//!
//! ```text
//! ring   := term ("x" term)*
//! term   := atom ("[t]/(" poly ")")*
//! atom   := "Z" int | "quot(" ring "," gens ")" | "idealize(" ring "," module ")"
//!         | "block(" int ")" | "(" ring ")"
//! module := "self" | "free(" int ")" | "mquot(" module "," gens ")"
//! gens   := "[" (int ("," int)*)? "]"
//! ```
//!
//! `x` is left associative and the polynomial quotient binds tighter.
//! Printing is canonical, so `parse(print(e)) == e`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::block::BlockAlgebra;
use crate::error::{Error, Result};
use crate::idealization::idealize_capped;
use crate::module::{make_free_capped, make_self_module, quotient_module, FiniteModule};
use crate::ring::{
    make_polyquot_capped, make_product_capped, make_zn_capped, quotient_ring, FiniteRing, Ideal, DEFAULT_MAX_RING_SIZE,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    Zn(usize),
    Product(Box<RingExpr>, Box<RingExpr>),
    /// Base ring and integer coefficients from the constant term up, with no
    /// trailing zeros.
    PolyQuot(Box<RingExpr>, Vec<i64>),
    Quot(Box<RingExpr>, Vec<usize>),
    Idealize(Box<RingExpr>, Box<ModuleExpr>),
    Block(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModuleExpr {
    SelfModule,
    Free(usize),
    Quot(Box<ModuleExpr>, Vec<usize>),
}

/// A parsed ring spec with its source text and an upper bound on the size
/// of the ring it builds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionSpec {
    pub source: String,
    #[serde(serialize_with = "serialize_display")]
    pub expr: RingExpr,
    pub size_estimate: u128,
}

fn serialize_display<S: serde::Serializer, T: fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl ConstructionSpec {
    pub fn canonical(&self) -> String {
        self.expr.to_string()
    }

    pub fn build(&self, cap: usize) -> Result<Arc<FiniteRing>> {
        build_ring(&self.expr, cap)
    }
}

/// Parses a ring spec and checks its size estimate against `cap`.
pub fn parse_spec(text: &str, cap: usize) -> Result<ConstructionSpec> {
    let expr = parse_ring(text)?;
    let size_estimate = ring_estimate(&expr, cap)?;
    Ok(ConstructionSpec {
        source: text.to_string(),
        expr,
        size_estimate,
    })
}

pub fn parse_ring(text: &str) -> Result<RingExpr> {
    let mut p = Parser::new(text)?;
    let e = p.ring()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_module(text: &str) -> Result<ModuleExpr> {
    let mut p = Parser::new(text)?;
    let e = p.module()?;
    p.finish()?;
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::Parse {
                pos: 0,
                message: "empty spec".into(),
            });
        }
        Ok(Parser { src: text.as_bytes(), pos: 0 })
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    /// Consumes `token` (after whitespace) if it is next.
    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.error(format!("expected '{token}'"))
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.error("unexpected trailing input"),
        }
    }

    fn digits(&mut self) -> Option<u64> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let at = self.pos;
        match self.digits() {
            Some(v) => usize::try_from(v).or_else(|_| self.error("integer too large")),
            None => {
                self.pos = at;
                self.error("expected an integer")
            }
        }
    }

    fn ring(&mut self) -> Result<RingExpr> {
        let mut left = self.term()?;
        while self.peek() == Some(b'x') {
            self.pos += 1;
            let right = self.term()?;
            left = RingExpr::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<RingExpr> {
        let mut base = self.atom()?;
        while self.eat("[t]/(") {
            let poly = self.poly()?;
            self.expect(")")?;
            base = RingExpr::PolyQuot(Box::new(base), poly);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RingExpr> {
        if self.eat("quot(") {
            let r = self.ring()?;
            self.expect(",")?;
            let gens = self.gens()?;
            self.expect(")")?;
            return Ok(RingExpr::Quot(Box::new(r), gens));
        }
        if self.eat("idealize(") {
            let r = self.ring()?;
            self.expect(",")?;
            let m = self.module()?;
            self.expect(")")?;
            return Ok(RingExpr::Idealize(Box::new(r), Box::new(m)));
        }
        if self.eat("block(") {
            let n = self.int()?;
            self.expect(")")?;
            return Ok(RingExpr::Block(n));
        }
        if self.eat("(") {
            let r = self.ring()?;
            self.expect(")")?;
            return Ok(r);
        }
        if self.eat("Z") {
            let at = self.pos;
            return match self.digits() {
                Some(n) => usize::try_from(n).map(RingExpr::Zn).or_else(|_| self.error("modulus too large")),
                None => {
                    self.pos = at;
                    self.error("expected a modulus after 'Z'")
                }
            };
        }
        self.error("expected a ring")
    }

    fn module(&mut self) -> Result<ModuleExpr> {
        if self.eat("self") {
            return Ok(ModuleExpr::SelfModule);
        }
        if self.eat("free(") {
            let k = self.int()?;
            self.expect(")")?;
            return Ok(ModuleExpr::Free(k));
        }
        if self.eat("mquot(") {
            let m = self.module()?;
            self.expect(",")?;
            let gens = self.gens()?;
            self.expect(")")?;
            return Ok(ModuleExpr::Quot(Box::new(m), gens));
        }
        self.error("expected a module")
    }

    fn gens(&mut self) -> Result<Vec<usize>> {
        self.expect("[")?;
        let mut out = Vec::new();
        if self.eat("]") {
            return Ok(out);
        }
        loop {
            out.push(self.int()?);
            if self.eat("]") {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    /// Sum of terms `c`, `c t`, `c*t^k`, `t^k` with optional signs.
    fn poly(&mut self) -> Result<Vec<i64>> {
        let mut coeffs: Vec<i64> = Vec::new();
        let mut first = true;
        loop {
            let sign = if self.eat("-") {
                -1
            } else if self.eat("+") || first {
                1
            } else {
                break;
            };
            first = false;
            self.skip_ws();
            let coeff = match self.digits() {
                Some(c) => Some(i64::try_from(c).or_else(|_| self.error("coefficient too large"))?),
                None => None,
            };
            let star = coeff.is_some() && self.eat("*");
            let has_t = self.eat("t");
            if star && !has_t {
                return self.error("expected 't' after '*'");
            }
            if coeff.is_none() && !has_t {
                return self.error("expected a term");
            }
            let coeff = coeff.unwrap_or(1);
            let degree = if has_t {
                if self.eat("^") {
                    self.int()?
                } else {
                    1
                }
            } else {
                0
            };
            if degree > 64 {
                return self.error("degree too large");
            }
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, 0);
            }
            coeffs[degree] = coeffs[degree]
                .checked_add(sign * coeff)
                .map_or_else(|| self.error("coefficient overflow"), Ok)?;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(coeffs)
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zn(n) => write!(f, "Z{n}"),
            RingExpr::Product(a, b) => {
                write!(f, "{a} x ")?;
                match **b {
                    RingExpr::Product(..) => write!(f, "({b})"),
                    _ => write!(f, "{b}"),
                }
            }
            RingExpr::PolyQuot(base, coeffs) => {
                match **base {
                    RingExpr::Product(..) => write!(f, "({base})")?,
                    _ => write!(f, "{base}")?,
                }
                write!(f, "[t]/({})", render_poly(coeffs))
            }
            RingExpr::Quot(r, gens) => write!(f, "quot({r},{})", render_gens(gens)),
            RingExpr::Idealize(r, m) => write!(f, "idealize({r},{m})"),
            RingExpr::Block(n) => write!(f, "block({n})"),
        }
    }
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleExpr::SelfModule => f.write_str("self"),
            ModuleExpr::Free(k) => write!(f, "free({k})"),
            ModuleExpr::Quot(m, gens) => write!(f, "mquot({m},{})", render_gens(gens)),
        }
    }
}

fn render_gens(gens: &[usize]) -> String {
    let parts: Vec<String> = gens.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Highest degree first: `t^2+t+1`, `t^3-2t`, `0` for the zero polynomial.
pub fn render_poly(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.unsigned_abs();
        match (k, mag) {
            (0, _) => out.push_str(&mag.to_string()),
            (_, 1) => {}
            _ => out.push_str(&mag.to_string()),
        }
        match k {
            0 => {}
            1 => out.push('t'),
            _ => out.push_str(&format!("t^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn over_cap(what: String, est: u128, cap: usize) -> Error {
    Error::capacity(what, usize::try_from(est).unwrap_or(usize::MAX), cap)
}

/// Upper bound on the size of every intermediate ring; fails before any
/// table is built when one exceeds `cap`.
pub fn ring_estimate(e: &RingExpr, cap: usize) -> Result<u128> {
    let est = match e {
        RingExpr::Zn(n) => *n as u128,
        RingExpr::Product(a, b) => ring_estimate(a, cap)?.saturating_mul(ring_estimate(b, cap)?),
        RingExpr::PolyQuot(base, coeffs) => {
            let q = ring_estimate(base, cap)?;
            let degree = coeffs.len().saturating_sub(1) as u32;
            q.checked_pow(degree).unwrap_or(u128::MAX)
        }
        RingExpr::Quot(r, _) => ring_estimate(r, cap)?,
        RingExpr::Idealize(r, m) => {
            let q = ring_estimate(r, cap)?;
            q.saturating_mul(module_estimate(m, q, cap)?)
        }
        RingExpr::Block(n) => {
            let dim = if *n == 0 { 0 } else { BlockAlgebra::expected_dimension((*n).min(64)) as u32 };
            2u128.checked_pow(dim).unwrap_or(u128::MAX)
        }
    };
    if est > cap as u128 {
        return Err(over_cap(e.to_string(), est, cap));
    }
    Ok(est)
}

fn module_estimate(e: &ModuleExpr, ring: u128, cap: usize) -> Result<u128> {
    let est = match e {
        ModuleExpr::SelfModule => ring,
        ModuleExpr::Free(k) => ring.checked_pow((*k).min(128) as u32).unwrap_or(u128::MAX),
        ModuleExpr::Quot(m, _) => module_estimate(m, ring, cap)?,
    };
    if est > cap as u128 {
        return Err(over_cap(e.to_string(), est, cap));
    }
    Ok(est)
}

pub fn build_ring(e: &RingExpr, cap: usize) -> Result<Arc<FiniteRing>> {
    ring_estimate(e, cap)?;
    let mut ring = match e {
        RingExpr::Zn(n) => make_zn_capped(*n, cap)?,
        RingExpr::Product(a, b) => {
            let (a, b) = (build_ring(a, cap)?, build_ring(b, cap)?);
            make_product_capped(&a, &b, cap)?
        },
        RingExpr::PolyQuot(base, coeffs) => {
            let r = build_ring(base, cap)?;
            let modulus: Vec<usize> = coeffs.iter().map(|&c| r.from_integer(c)).collect();
            make_polyquot_capped(&r, &modulus, cap)?
        }
        RingExpr::Quot(base, gens) => {
            let r = build_ring(base, cap)?;
            check_gens(gens, r.size(), "ring")?;
            quotient_ring(&r, &Ideal::generated(&r, gens.iter().copied()))?
        }
        RingExpr::Idealize(base, m) => {
            let r = build_ring(base, cap)?;
            let m = build_module(m, &r, cap)?;
            idealize_capped(&r, &m, cap)?
        }
        RingExpr::Block(n) => {
            if *n == 0 {
                return Err(Error::InvalidConstruction("block(0): stages start at 1".into()));
            }
            BlockAlgebra::new(*n)?.to_dense(cap)?
        }
    };
    if !matches!(e, RingExpr::Zn(_)) {
        ring.set_name(e.to_string());
    }
    Ok(Arc::new(ring))
}

pub fn build_module(e: &ModuleExpr, r: &Arc<FiniteRing>, cap: usize) -> Result<Arc<FiniteModule>> {
    module_estimate(e, r.size() as u128, cap)?;
    let mut m = match e {
        ModuleExpr::SelfModule => make_self_module(r),
        ModuleExpr::Free(k) => make_free_capped(r, *k, cap)?,
        ModuleExpr::Quot(inner, gens) => {
            let inner = build_module(inner, r, cap)?;
            check_gens(gens, inner.size(), "module")?;
            quotient_module(&inner, gens)?
        }
    };
    m.set_name(e.to_string());
    Ok(Arc::new(m))
}

fn check_gens(gens: &[usize], size: usize, what: &str) -> Result<()> {
    match gens.iter().find(|&&g| g >= size) {
        Some(g) => Err(Error::InvalidConstruction(format!(
            "generator {g} outside {what} of size {size}"
        ))),
        None => Ok(()),
    }
}

/// Parses and builds a ring with the default size cap.
pub fn ring_from_spec(text: &str) -> Result<Arc<FiniteRing>> {
    parse_spec(text, DEFAULT_MAX_RING_SIZE)?.build(DEFAULT_MAX_RING_SIZE)
}

/// Parses and builds a module over `r` with the default size cap.
pub fn module_from_spec(text: &str, r: &Arc<FiniteRing>) -> Result<Arc<FiniteModule>> {
    build_module(&parse_module(text)?, r, DEFAULT_MAX_RING_SIZE)
}
