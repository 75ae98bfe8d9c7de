//! Sparse bihomogeneous polynomials over `S = K[x_1..x_m, y_1..y_n]`.
//!
//! Variables are ordered `x_1 > ... > x_m > y_1 > ... > y_n` and monomials are
//! compared in degree reverse lexicographic order. The single-graded rings
//! `K[x]` and `K[y]` are the special cases `n = 0` and `m = 0` of the same
//! representation, so everything downstream is written once.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use smallvec::SmallVec;

use crate::arith::{PrimeField, DEFAULT_PRIME};
use crate::error::{Error, Result};

/// Which polynomial ring a [`RingSpec`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Full,
    XOnly,
    YOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    field: PrimeField,
    m: usize,
    n: usize,
}

impl RingSpec {
    pub fn new(p: u32, m: usize, n: usize) -> Result<Self> {
        if m + n == 0 {
            return Err(Error::BadRing("need at least one variable".into()));
        }
        if m + n > 64 {
            return Err(Error::BadRing(format!("{} variables is too many", m + n)));
        }
        Ok(RingSpec {
            field: PrimeField::new(p)?,
            m,
            n,
        })
    }

    /// `S = K[x_1..x_m, y_1..y_n]` over `F_32003`.
    pub fn standard(m: usize, n: usize) -> Self {
        Self::new(DEFAULT_PRIME, m, n).expect("valid ring")
    }

    /// The subring `K[x]` with the same field.
    pub fn x_only(self) -> Self {
        RingSpec { n: 0, ..self }
    }

    /// The subring `K[y]` with the same field.
    pub fn y_only(self) -> Self {
        RingSpec { m: 0, ..self }
    }

    pub fn flavor(self) -> Flavor {
        match (self.m, self.n) {
            (_, 0) => Flavor::XOnly,
            (0, _) => Flavor::YOnly,
            _ => Flavor::Full,
        }
    }

    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn p(self) -> u32 {
        self.field.p()
    }

    pub fn m(self) -> usize {
        self.m
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn nvars(self) -> usize {
        self.m + self.n
    }

    /// Generator degree of the canonical module `ω = S(-m,-n)`.
    pub fn canonical_degree(self) -> Bidegree {
        Bidegree::new(self.m as i64, self.n as i64)
    }

    pub fn var_name(self, i: usize) -> String {
        if i < self.m {
            format!("x{}", i + 1)
        } else {
            format!("y{}", i - self.m + 1)
        }
    }

    pub fn var(self, i: usize) -> Monomial {
        Monomial::var(self.nvars(), i)
    }

    pub fn one_monomial(self) -> Monomial {
        Monomial::one(self.nvars())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub a: i64,
    pub b: i64,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        Bidegree { a, b }
    }

    pub fn total(self) -> i64 {
        self.a + self.b
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Bidegree {
    type Output = Bidegree;
    fn neg(self) -> Bidegree {
        Bidegree::new(-self.a, -self.b)
    }
}

/// Exponent vector over all `m + n` variables (x block first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    /// Bidegree with the first `m` variables counted as x-variables.
    pub fn bidegree(&self, m: usize) -> Bidegree {
        let a: i64 = self.exps[..m].iter().map(|&e| e as i64).sum();
        let b: i64 = self.exps[m..].iter().map(|&e| e as i64).sum();
        Bidegree::new(a, b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(&b, &a)| b - a).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Degree reverse lexicographic comparison.
    pub fn cmp_degrevlex(&self, other: &Monomial) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }

    /// Pure lexicographic comparison with `x_1` most significant.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }

    pub fn fmt_with(&self, ring: RingSpec) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ring.var_name(i)),
                _ => parts.push(format!("{}^{}", ring.var_name(i), e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}

/// Number of monomials of degree `d` in `v` variables.
pub fn monomial_count(v: usize, d: i64) -> u64 {
    if d < 0 {
        0
    } else if v == 0 {
        u64::from(d == 0)
    } else {
        binomial(d + v as i64 - 1, v as i64 - 1)
    }
}

/// Dimension of `S_d` for `S` described by `ring`.
pub fn dim_ring_piece(ring: RingSpec, d: Bidegree) -> u64 {
    monomial_count(ring.m(), d.a) * monomial_count(ring.n(), d.b)
}

fn exponent_vectors(v: usize, d: i64, out: &mut Vec<Vec<u16>>) {
    fn rec(v: usize, d: u16, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if v == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(v - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    if d < 0 {
        return;
    }
    if v == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return;
    }
    rec(v, d as u16, &mut Vec::new(), out);
}

/// All monomials of bidegree `d`, in lexicographic order (x block first).
pub fn monomial_basis(ring: RingSpec, d: Bidegree) -> Vec<Monomial> {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    exponent_vectors(ring.m(), d.a, &mut xs);
    exponent_vectors(ring.n(), d.b, &mut ys);
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for x in &xs {
        for y in &ys {
            let mut e: SmallVec<[u16; 8]> = SmallVec::from_slice(x);
            e.extend_from_slice(y);
            out.push(Monomial { exps: e });
        }
    }
    out
}

/// Sparse polynomial: terms sorted strictly descending in degrevlex, no zero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: RingSpec,
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero(ring: RingSpec) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: RingSpec, c: i64) -> Self {
        Self::term(ring, ring.one_monomial(), ring.field().reduce(c))
    }

    pub fn term(ring: RingSpec, mono: Monomial, coeff: u32) -> Self {
        assert_eq!(mono.nvars(), ring.nvars());
        let coeff = coeff % ring.p();
        let terms = if coeff == 0 {
            Vec::new()
        } else {
            vec![(mono, coeff)]
        };
        Polynomial { ring, terms }
    }

    pub fn var(ring: RingSpec, i: usize) -> Self {
        Self::term(ring, ring.var(i), 1)
    }

    /// Collects like terms, drops zeros and sorts.
    pub fn from_terms(ring: RingSpec, terms: impl IntoIterator<Item = (Monomial, u32)>) -> Self {
        let f = ring.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial from a different ring");
            let e = acc.entry(m).or_insert(0);
            *e = f.add(*e, c % ring.p());
        }
        let mut terms: Vec<(Monomial, u32)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|a, b| b.0.cmp_degrevlex(&a.0));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    /// Nonzero constant value, if the polynomial is a unit.
    pub fn as_unit(&self) -> Option<u32> {
        match self.terms.as_slice() {
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    pub fn is_bihomogeneous(&self) -> bool {
        let m = self.ring.m();
        match self.terms.first() {
            None => true,
            Some((first, _)) => {
                let d = first.bidegree(m);
                self.terms.iter().all(|(t, _)| t.bidegree(m) == d)
            }
        }
    }

    pub fn bidegree(&self) -> Result<Bidegree> {
        let (first, _) = self.terms.first().ok_or(Error::ZeroPoly)?;
        if !self.is_bihomogeneous() {
            return Err(Error::NotBihomogeneous);
        }
        Ok(first.bidegree(self.ring.m()))
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            Err(Error::RingMismatch)
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, 1))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, self.ring.p() - 1))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let f = self.ring.field();
        let prod = self.terms.iter().flat_map(|(ma, ca)| {
            other
                .terms
                .iter()
                .map(move |(mb, cb)| (ma.mul(mb), f.mul(*ca, *cb)))
        });
        Ok(Polynomial::from_terms(self.ring, prod))
    }

    /// `self + c * other` by merging the sorted term lists.
    pub fn add_scaled(&self, other: &Polynomial, c: u32) -> Polynomial {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let f = self.ring.field();
        let c = c % f.p();
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp_degrevlex(&b.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, v) = &other.terms[j];
                    out.push((m.clone(), f.mul(*v, c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.add(self.terms[i].1, f.mul(other.terms[j].1, c));
                    if v != 0 {
                        out.push((self.terms[i].0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring,
            terms: out,
        }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.p();
        if c == 0 {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), f.mul(*v, c))).collect(),
        }
    }

    /// Multiplication by `c * mono`; keeps the order since degrevlex is a
    /// monomial order.
    pub fn mul_term(&self, mono: &Monomial, c: u32) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.p();
        if c == 0 {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, v)| (m.mul(mono), f.mul(*v, c))).collect(),
        }
    }

    pub fn coefficient(&self, mono: &Monomial) -> u32 {
        self.terms
            .binary_search_by(|(m, _)| mono.cmp_degrevlex(m))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    /// Splits every term `c * x^α y^β` into `(y^β, c * x^α)` pieces, returning
    /// for each y-monomial the x-polynomial in the ring `K[x]`.
    pub fn split_by_y(&self) -> Vec<(Monomial, Polynomial)> {
        self.split_blocks(true)
    }

    /// Mirror of [`Polynomial::split_by_y`]: groups by x-monomial, coefficients in `K[y]`.
    pub fn split_by_x(&self) -> Vec<(Monomial, Polynomial)> {
        self.split_blocks(false)
    }

    fn split_blocks(&self, by_y: bool) -> Vec<(Monomial, Polynomial)> {
        let m = self.ring.m();
        let coeff_ring = if by_y {
            self.ring.x_only()
        } else {
            self.ring.y_only()
        };
        let mut groups: HashMap<Monomial, Vec<(Monomial, u32)>> = HashMap::new();
        for (mono, c) in &self.terms {
            let (xs, ys) = mono.exps.split_at(m);
            let (key, rest) = if by_y { (ys, xs) } else { (xs, ys) };
            groups
                .entry(Monomial::from_exponents(key))
                .or_default()
                .push((Monomial::from_exponents(rest), *c));
        }
        let mut out: Vec<(Monomial, Polynomial)> = groups
            .into_iter()
            .map(|(k, ts)| (k, Polynomial::from_terms(coeff_ring, ts)))
            .collect();
        out.sort_by(|a, b| a.0.cmp_lex(&b.0));
        out
    }

    /// Reinterprets a polynomial of `K[x]` or `K[y]` inside `target`, placing its
    /// variables in the x block (`into_x`) or the y block.
    pub fn embed(&self, target: RingSpec, into_x: bool) -> Polynomial {
        let nv = target.nvars();
        let offset = if into_x { 0 } else { target.m() };
        let terms = self.terms.iter().map(|(mono, c)| {
            let mut e = SmallVec::<[u16; 8]>::from_elem(0, nv);
            for (i, &v) in mono.exps.iter().enumerate() {
                e[offset + i] = v;
            }
            (Monomial { exps: e }, *c)
        });
        Polynomial::from_terms(target, terms)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (i, (mono, c)) in self.terms.iter().enumerate() {
            let s = field.symmetric(*c);
            let (sign, mag) = if s < 0 { ("-", -s) } else { ("+", s) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mono.is_one() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{}", mono.fmt_with(self.ring))?;
            } else {
                write!(f, "{mag}*{}", mono.fmt_with(self.ring))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: RingSpec,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse::<u64>().map_err(|_| Error::Parse {
            pos: start,
            msg: "integer too large".into(),
        })
    }

    fn factor(&mut self) -> Result<Monomial> {
        self.skip_ws();
        let start = self.pos;
        let block = match self.src.get(self.pos) {
            Some(b'x') => 0,
            Some(b'y') => 1,
            _ => return self.err("expected variable"),
        };
        self.pos += 1;
        let idx_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii").to_string();
        if idx_start == self.pos {
            return Err(Error::Parse {
                pos: idx_start,
                msg: "expected variable index".into(),
            });
        }
        let k: usize = name[1..].parse().unwrap_or(usize::MAX);
        let limit = if block == 0 { self.ring.m() } else { self.ring.n() };
        if k == 0 || k > limit {
            return Err(Error::UnknownVariable { name, pos: start });
        }
        let var = if block == 0 { k - 1 } else { self.ring.m() + k - 1 };
        let mut exp = 1u64;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            exp = self.integer()?;
            if exp == 0 || exp > u16::MAX as u64 {
                return Err(Error::Parse {
                    pos: at,
                    msg: "exponent must be a positive integer".into(),
                });
            }
        }
        let mut mono = self.ring.one_monomial();
        mono.exps[var] = exp as u16;
        Ok(mono)
    }

    fn term(&mut self) -> Result<(Monomial, u32)> {
        let f = self.ring.field();
        let mut coeff = 1u32;
        let mut mono = self.ring.one_monomial();
        let first_is_int = matches!(self.peek(), Some(c) if c.is_ascii_digit());
        if first_is_int {
            coeff = (self.integer()? % f.p() as u64) as u32;
            if self.peek() != Some(b'*') {
                return Ok((mono, coeff));
            }
            self.pos += 1;
        }
        mono = mono.mul(&self.factor()?);
        while self.peek() == Some(b'*') {
            self.pos += 1;
            mono = mono.mul(&self.factor()?);
        }
        Ok((mono, coeff))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let f = self.ring.field();
        let mut terms = Vec::new();
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            None => return self.err("empty polynomial"),
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negate { f.neg(c) } else { c }));
            match self.peek() {
                None => break,
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(_) => return self.err("expected `+`, `-` or end of input"),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }
}

/// Parses `term ((+|-) term)*` where a term is `[integer *] factor (* factor)*`
/// (or a bare integer) and a factor is `xk` or `yk` with optional `^e`.
pub fn parse_poly(text: &str, ring: RingSpec) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    p.polynomial()
}
