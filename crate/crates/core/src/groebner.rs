//! Gröbner bases of submodules of graded free modules and Schreyer syzygies.
//!
//! Module terms `μ e_k` are compared by a [`TermOrder`]. The plain order is
//! position over term (smaller position index is larger, then degrevlex). The
//! orders induced on syzygy modules are Schreyer orders: `μ e_i` is compared
//! through `μ · lead(g_i)` in the previous order, with ties broken by index.
//! Both are encoded by a per-position key, so one reduction engine serves all
//! levels of a resolution.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use crate::arith::PrimeField;
use crate::error::{Error, Result};
use crate::poly::{dim_ring_piece, Bidegree, Monomial, Polynomial, RingSpec};

/// `⊕_k S(-g_k)`, the free module with generators in bidegrees `g_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeModule {
    ring: RingSpec,
    shifts: Vec<Bidegree>,
}

impl FreeModule {
    pub fn new(ring: RingSpec, shifts: Vec<Bidegree>) -> Self {
        FreeModule { ring, shifts }
    }

    pub fn free(ring: RingSpec, rank: usize) -> Self {
        Self::new(ring, vec![Bidegree::ZERO; rank])
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[Bidegree] {
        &self.shifts
    }

    pub fn shift(&self, k: usize) -> Bidegree {
        self.shifts[k]
    }

    pub fn dim_at(&self, d: Bidegree) -> u64 {
        self.shifts.iter().map(|&g| dim_ring_piece(self.ring, d - g)).sum()
    }

    /// `Hom(F, ω)` where `ω` is the canonical module of the ring: a generator
    /// in degree `g` dualizes to one in degree `(m,n) - g`.
    pub fn dual(&self) -> FreeModule {
        let c = self.ring.canonical_degree();
        FreeModule::new(self.ring, self.shifts.iter().map(|&g| c - g).collect())
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        assert_eq!(self.ring, other.ring);
        let mut shifts = self.shifts.clone();
        shifts.extend_from_slice(&other.shifts);
        FreeModule::new(self.ring, shifts)
    }

    /// Bidegree of the term `μ e_k`.
    pub fn term_degree(&self, k: usize, mono: &Monomial) -> Bidegree {
        self.shifts[k] + mono.bidegree(self.ring.m())
    }
}

/// An element of a free module, one polynomial per generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    coords: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(coords: Vec<Polynomial>) -> Self {
        ModuleElement { coords }
    }

    pub fn zero(ambient: &FreeModule) -> Self {
        ModuleElement {
            coords: vec![Polynomial::zero(ambient.ring()); ambient.rank()],
        }
    }

    /// `f e_k`.
    pub fn basis_multiple(ambient: &FreeModule, k: usize, f: Polynomial) -> Self {
        let mut v = Self::zero(ambient);
        v.coords[k] = f;
        v
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Polynomial> {
        self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Polynomial::is_zero)
    }

    /// Checks that coordinate `k` is zero or bihomogeneous of degree `d - g_k`
    /// for one common `d`, and returns `d`.
    pub fn bidegree(&self, ambient: &FreeModule) -> Result<Bidegree> {
        if self.rank() != ambient.rank() {
            return Err(Error::RankMismatch {
                expected: ambient.rank(),
                found: self.rank(),
            });
        }
        let mut found: Option<Bidegree> = None;
        for (k, f) in self.coords.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let d = f.bidegree()? + ambient.shift(k);
            match found {
                None => found = Some(d),
                Some(e) if e != d => return Err(Error::NotBihomogeneous),
                _ => {}
            }
        }
        found.ok_or(Error::ZeroPoly)
    }

    pub fn add_scaled(&self, other: &ModuleElement, c: u32) -> ModuleElement {
        ModuleElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.add_scaled(b, c))
                .collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> ModuleElement {
        ModuleElement {
            coords: self
                .coords
                .iter()
                .map(|a| a.try_mul(f).expect("same ring"))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Term {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: u32,
}

#[derive(Clone, Debug)]
struct PosKey {
    base: usize,
    mono: Monomial,
    chain: Vec<u32>,
}

/// A monomial order on the terms of a free module.
#[derive(Clone, Debug)]
pub struct TermOrder {
    keys: Vec<PosKey>,
}

impl TermOrder {
    /// Position over term: `μ e_i > ν e_j` if `i < j`, or `i = j` and `μ > ν`.
    pub fn pot(rank: usize, nvars: usize) -> Self {
        TermOrder {
            keys: (0..rank)
                .map(|i| PosKey {
                    base: i,
                    mono: Monomial::one(nvars),
                    chain: vec![i as u32],
                })
                .collect(),
        }
    }

    /// Schreyer order on the free module whose `i`-th generator maps to an
    /// element with leading term `leads[i]` in the module ordered by `self`.
    fn induced(&self, leads: &[(usize, &Monomial)]) -> TermOrder {
        TermOrder {
            keys: leads
                .iter()
                .enumerate()
                .map(|(i, (p, mono))| {
                    let parent = &self.keys[*p];
                    let mut chain = parent.chain.clone();
                    chain.push(i as u32);
                    PosKey {
                        base: parent.base,
                        mono: parent.mono.mul(mono),
                        chain,
                    }
                })
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.keys.len()
    }

    pub fn cmp(&self, p1: usize, m1: &Monomial, p2: usize, m2: &Monomial) -> Ordering {
        let (k1, k2) = (&self.keys[p1], &self.keys[p2]);
        if k1.base != k2.base {
            return k2.base.cmp(&k1.base);
        }
        let (e1, f1) = (m1.exponents(), k1.mono.exponents());
        let (e2, f2) = (m2.exponents(), k2.mono.exponents());
        let deg = |e: &[u16], f: &[u16]| -> u32 {
            e.iter().zip(f).map(|(&a, &b)| a as u32 + b as u32).sum()
        };
        match deg(e1, f1).cmp(&deg(e2, f2)) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..e1.len()).rev() {
            let a = e1[i] as u32 + f1[i] as u32;
            let b = e2[i] as u32 + f2[i] as u32;
            if a != b {
                return b.cmp(&a);
            }
        }
        k2.chain.cmp(&k1.chain)
    }

    fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp(a.pos, &a.mono, b.pos, &b.mono)
    }
}

/// Sparse module element with terms sorted descending in some [`TermOrder`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn from_terms(terms: impl IntoIterator<Item = Term>, order: &TermOrder, field: PrimeField) -> Self {
        let mut acc: HashMap<(usize, Monomial), u32> = HashMap::new();
        for t in terms {
            let e = acc.entry((t.pos, t.mono)).or_insert(0);
            *e = field.add(*e, t.coeff);
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|((pos, mono), coeff)| Term { pos, mono, coeff })
            .collect();
        terms.sort_by(|a, b| order.cmp_terms(b, a));
        Vector { terms }
    }

    pub fn from_element(v: &ModuleElement, order: &TermOrder, field: PrimeField) -> Self {
        let terms = v.coords.iter().enumerate().flat_map(|(pos, f)| {
            f.terms().iter().map(move |(mono, coeff)| Term {
                pos,
                mono: mono.clone(),
                coeff: *coeff,
            })
        });
        Self::from_terms(terms, order, field)
    }

    pub fn to_element(&self, ambient: &FreeModule) -> ModuleElement {
        let ring = ambient.ring();
        let mut buckets: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); ambient.rank()];
        for t in &self.terms {
            buckets[t.pos].push((t.mono.clone(), t.coeff));
        }
        ModuleElement {
            coords: buckets
                .into_iter()
                .map(|ts| Polynomial::from_terms(ring, ts))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    fn single_position(&self) -> bool {
        self.terms.iter().all(|t| t.pos == self.terms[0].pos)
    }

    pub fn make_monic(&mut self, field: PrimeField) {
        if let Some(t) = self.terms.first() {
            let inv = field.inv(t.coeff);
            if inv != 1 {
                for t in &mut self.terms {
                    t.coeff = field.mul(t.coeff, inv);
                }
            }
        }
    }

    /// Replaces the terms from index `start` on by `self[start..] + c·mono·g`.
    fn add_multiple_from(
        &mut self,
        start: usize,
        g: &Vector,
        mono: &Monomial,
        c: u32,
        order: &TermOrder,
        field: PrimeField,
    ) {
        let tail = self.terms.split_off(start);
        let mut out = Vec::with_capacity(tail.len() + g.terms.len());
        let mut a = tail.into_iter().peekable();
        let mut b = g.terms.iter().map(|t| Term {
            pos: t.pos,
            mono: t.mono.mul(mono),
            coeff: field.mul(t.coeff, c),
        });
        let mut nb = b.next();
        loop {
            match (a.peek(), nb.as_ref()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().expect("peeked")),
                (None, Some(_)) => {
                    out.push(nb.take().expect("present"));
                    nb = b.next();
                }
                (Some(x), Some(y)) => match order.cmp_terms(x, y) {
                    Ordering::Greater => out.push(a.next().expect("peeked")),
                    Ordering::Less => {
                        out.push(nb.take().expect("present"));
                        nb = b.next();
                    }
                    Ordering::Equal => {
                        let mut x = a.next().expect("peeked");
                        x.coeff = field.add(x.coeff, nb.as_ref().expect("present").coeff);
                        if x.coeff != 0 {
                            out.push(x);
                        }
                        nb = b.next();
                    }
                },
            }
        }
        self.terms.extend(out);
    }
}

/// Index of basis elements by leading position, for reducer lookup.
struct Reducers {
    by_pos: Vec<Vec<usize>>,
}

impl Reducers {
    fn new(rank: usize) -> Self {
        Reducers {
            by_pos: vec![Vec::new(); rank],
        }
    }

    fn build(rank: usize, basis: &[Vector]) -> Self {
        let mut r = Self::new(rank);
        for (i, g) in basis.iter().enumerate() {
            r.push(i, g);
        }
        r
    }

    fn push(&mut self, i: usize, g: &Vector) {
        if let Some(t) = g.lead() {
            self.by_pos[t.pos].push(i);
        }
    }

    fn find(&self, basis: &[Vector], t: &Term, skip: Option<usize>) -> Option<(usize, Monomial)> {
        self.by_pos[t.pos].iter().find_map(|&i| {
            if Some(i) == skip {
                return None;
            }
            let lead = basis[i].lead().expect("nonzero basis element");
            lead.mono.quotient_of(&t.mono).map(|q| (i, q))
        })
    }
}

/// Reduces every term of `v` that is divisible by a leading term of `basis`
/// (basis elements must be monic). Returns the normal form.
fn full_reduce(
    mut v: Vector,
    basis: &[Vector],
    reducers: &Reducers,
    skip: Option<usize>,
    order: &TermOrder,
    field: PrimeField,
) -> Vector {
    let mut i = 0;
    while i < v.terms.len() {
        match reducers.find(basis, &v.terms[i], skip) {
            Some((l, q)) => {
                let c = field.neg(v.terms[i].coeff);
                v.add_multiple_from(i, &basis[l], &q, c, order, field);
            }
            None => i += 1,
        }
    }
    v
}

/// Lead-term reduction recording the quotients: on return
/// `v_in = Σ coeff·mono·basis[pos] + v_out` with `v_out` lead-irreducible.
fn top_reduce_tracked(
    mut v: Vector,
    basis: &[Vector],
    reducers: &Reducers,
    order: &TermOrder,
    field: PrimeField,
    quotients: &mut Vec<Term>,
) -> Vector {
    while let Some(t) = v.lead() {
        let Some((l, q)) = reducers.find(basis, t, None) else {
            break;
        };
        let c = t.coeff;
        quotients.push(Term {
            pos: l,
            mono: q.clone(),
            coeff: c,
        });
        v.add_multiple_from(0, &basis[l], &q, field.neg(c), order, field);
    }
    v
}

fn s_vector(
    gi: &Vector,
    gj: &Vector,
    order: &TermOrder,
    field: PrimeField,
) -> (Monomial, Monomial, Vector) {
    let (li, lj) = (gi.lead().expect("nonzero"), gj.lead().expect("nonzero"));
    let lcm = li.mono.lcm(&lj.mono);
    let mi = li.mono.quotient_of(&lcm).expect("lcm");
    let mj = lj.mono.quotient_of(&lcm).expect("lcm");
    let mut s = Vector {
        terms: gi
            .terms
            .iter()
            .map(|t| Term {
                pos: t.pos,
                mono: t.mono.mul(&mi),
                coeff: t.coeff,
            })
            .collect(),
    };
    s.add_multiple_from(0, gj, &mj, field.neg(1), order, field);
    (mi, mj, s)
}

fn lead_total_degree(ambient: &FreeModule, v: &Vector) -> i64 {
    let t = v.lead().expect("nonzero");
    ambient.term_degree(t.pos, &t.mono).total()
}

/// Buchberger's algorithm over `order`, returning the reduced monic basis
/// in frame order (see [`frame_sort`]).
pub(crate) fn groebner_vectors(
    ambient: &FreeModule,
    order: &TermOrder,
    gens: Vec<Vector>,
) -> Vec<Vector> {
    let field = ambient.ring().field();
    let mut basis: Vec<Vector> = Vec::new();
    let mut reducers = Reducers::new(ambient.rank());
    let mut pairs: BTreeSet<(i64, usize, usize)> = BTreeSet::new();

    let mut pending: Vec<Vector> = gens.into_iter().filter(|v| !v.is_zero()).collect();
    pending.sort_by_key(|v| lead_total_degree(ambient, v));

    let add = |v: Vector,
                   basis: &mut Vec<Vector>,
                   reducers: &mut Reducers,
                   pairs: &mut BTreeSet<(i64, usize, usize)>| {
        let j = basis.len();
        let lj = v.lead().expect("nonzero").clone();
        for (i, g) in basis.iter().enumerate() {
            let li = g.lead().expect("nonzero");
            if li.pos != lj.pos {
                continue;
            }
            if li.mono.is_coprime(&lj.mono) && g.single_position() && v.single_position() {
                continue;
            }
            let deg = ambient.term_degree(lj.pos, &li.mono.lcm(&lj.mono)).total();
            pairs.insert((deg, i, j));
        }
        reducers.push(j, &v);
        basis.push(v);
    };

    let mut pending = pending.into_iter().peekable();
    loop {
        // Interleave input generators and pairs by degree so that low-degree
        // information is available before high-degree reductions.
        let next_pair_deg = pairs.first().map(|p| p.0);
        let next_gen_deg = pending.peek().map(|v| lead_total_degree(ambient, v));
        let take_gen = match (next_gen_deg, next_pair_deg) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(g), Some(p)) => g <= p,
        };
        let candidate = if take_gen {
            pending.next().expect("peeked")
        } else {
            let (_, i, j) = pairs.pop_first().expect("nonempty");
            s_vector(&basis[i], &basis[j], order, field).2
        };
        let mut r = full_reduce(candidate, &basis, &reducers, None, order, field);
        if !r.is_zero() {
            r.make_monic(field);
            add(r, &mut basis, &mut reducers, &mut pairs);
        }
    }
    autoreduce(ambient, order, basis)
}

fn autoreduce(ambient: &FreeModule, order: &TermOrder, basis: Vec<Vector>) -> Vec<Vector> {
    let field = ambient.ring().field();
    let mut keep: Vec<Vector> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lg = g.lead().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let lh = h.lead().expect("nonzero");
            lh.pos == lg.pos
                && lh.mono.divides(&lg.mono)
                && (lh.mono != lg.mono || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let reducers = Reducers::build(ambient.rank(), &keep);
    let mut out: Vec<Vector> = (0..keep.len())
        .map(|i| {
            let mut v = full_reduce(keep[i].clone(), &keep, &reducers, Some(i), order, field);
            v.make_monic(field);
            v
        })
        .collect();
    frame_sort(&mut out);
    out
}

/// Groups by leading position and sorts lexicographically descending by
/// leading monomial within a group. Schreyer's frame built on bases in this
/// order has length at most the number of variables.
fn frame_sort(elems: &mut [Vector]) {
    elems.sort_by(|a, b| {
        let (la, lb) = (a.lead().expect("nonzero"), b.lead().expect("nonzero"));
        la.pos.cmp(&lb.pos).then_with(|| lb.mono.cmp_lex(&la.mono))
    });
}

/// Normal form of `v` with respect to a monic basis that is a Gröbner basis
/// for `order`.
pub(crate) fn reduce_fully(
    ambient: &FreeModule,
    order: &TermOrder,
    basis: &[Vector],
    v: Vector,
) -> Vector {
    let reducers = Reducers::build(ambient.rank(), basis);
    full_reduce(v, basis, &reducers, None, order, ambient.ring().field())
}

/// A reduced Gröbner basis of a submodule of a free module, position over term.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ambient: FreeModule,
    order: TermOrder,
    elems: Vec<Vector>,
}

impl GroebnerBasis {
    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> Vec<ModuleElement> {
        self.elems.iter().map(|v| v.to_element(&self.ambient)).collect()
    }

    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.elems
            .iter()
            .map(|v| {
                let t = v.lead().expect("nonzero");
                (t.pos, t.mono.clone())
            })
            .collect()
    }

    pub fn normal_form(&self, v: &ModuleElement) -> Result<ModuleElement> {
        if v.rank() != self.ambient.rank() {
            return Err(Error::RankMismatch {
                expected: self.ambient.rank(),
                found: v.rank(),
            });
        }
        let field = self.ambient.ring().field();
        let vec = Vector::from_element(v, &self.order, field);
        let reducers = Reducers::build(self.ambient.rank(), &self.elems);
        let r = full_reduce(vec, &self.elems, &reducers, None, &self.order, field);
        Ok(r.to_element(&self.ambient))
    }

    pub fn contains(&self, v: &ModuleElement) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }
}

/// Gröbner basis (position over term) of the submodule generated by `gens`.
pub fn buchberger(ambient: &FreeModule, gens: &[ModuleElement]) -> Result<GroebnerBasis> {
    for g in gens {
        if !g.is_zero() {
            g.bidegree(ambient)?;
        } else if g.rank() != ambient.rank() {
            return Err(Error::RankMismatch {
                expected: ambient.rank(),
                found: g.rank(),
            });
        }
    }
    let field = ambient.ring().field();
    let order = TermOrder::pot(ambient.rank(), ambient.ring().nvars());
    let vecs = gens
        .iter()
        .map(|g| Vector::from_element(g, &order, field))
        .collect();
    let elems = groebner_vectors(ambient, &order, vecs);
    Ok(GroebnerBasis {
        ambient: ambient.clone(),
        order,
        elems,
    })
}

/// Generators of the syzygy module of `G`, as elements of the free module
/// with one generator per basis element placed in that element's bidegree.
pub fn syzygies(g: &GroebnerBasis) -> (FreeModule, Vec<ModuleElement>) {
    let level = Level::from_basis(g.ambient.clone(), g.order.clone(), g.elems.clone());
    let next = level.syzygy_level();
    let elems = next.elems.iter().map(|v| v.to_element(&next.module)).collect();
    (next.module, elems)
}

/// A Gröbner basis sorted for the Schreyer frame: grouped by leading
/// position, lexicographically descending leading monomial within a group.
pub(crate) struct Level {
    pub module: FreeModule,
    pub order: TermOrder,
    pub elems: Vec<Vector>,
}

impl Level {
    pub fn from_basis(module: FreeModule, order: TermOrder, mut elems: Vec<Vector>) -> Self {
        frame_sort(&mut elems);
        Level { module, order, elems }
    }

    /// Free module on the basis elements, each generator in the bidegree of
    /// its element.
    pub fn source_module(&self) -> FreeModule {
        FreeModule::new(
            self.module.ring(),
            self.elems
                .iter()
                .map(|v| {
                    let t = v.lead().expect("nonzero");
                    self.module.term_degree(t.pos, &t.mono)
                })
                .collect(),
        )
    }

    /// Schreyer's syzygies of the basis; they form a Gröbner basis of the
    /// syzygy module for the induced order.
    pub fn syzygy_level(&self) -> Level {
        let ring = self.module.ring();
        let field = ring.field();
        let source = self.source_module();
        let leads: Vec<(usize, &Monomial)> = self
            .elems
            .iter()
            .map(|v| {
                let t = v.lead().expect("nonzero");
                (t.pos, &t.mono)
            })
            .collect();
        let induced = self.order.induced(&leads);
        let reducers = Reducers::build(self.module.rank(), &self.elems);

        let mut syz = Vec::new();
        for i in 0..self.elems.len() {
            let li = &self.elems[i].lead().expect("nonzero");
            let mut cands: Vec<(usize, Monomial)> = Vec::new();
            for j in i + 1..self.elems.len() {
                let lj = self.elems[j].lead().expect("nonzero");
                if lj.pos != li.pos {
                    continue;
                }
                let m = li.mono.quotient_of(&li.mono.lcm(&lj.mono)).expect("lcm");
                cands.push((j, m));
            }
            let minimal: Vec<&(usize, Monomial)> = cands
                .iter()
                .enumerate()
                .filter(|(a, (_, ma))| {
                    !cands.iter().enumerate().any(|(b, (_, mb))| {
                        b != *a && mb.divides(ma) && (mb != ma || b < *a)
                    })
                })
                .map(|(_, c)| c)
                .collect();
            for (j, _) in minimal {
                let (mi, mj, s) = s_vector(&self.elems[i], &self.elems[*j], &self.order, field);
                let mut quot = Vec::new();
                let rest = top_reduce_tracked(s, &self.elems, &reducers, &self.order, field, &mut quot);
                assert!(rest.is_zero(), "S-vector of a Gröbner basis did not reduce to zero");
                let mut terms = vec![
                    Term {
                        pos: i,
                        mono: mi,
                        coeff: 1,
                    },
                    Term {
                        pos: *j,
                        mono: mj,
                        coeff: field.neg(1),
                    },
                ];
                terms.extend(quot.into_iter().map(|t| Term {
                    coeff: field.neg(t.coeff),
                    ..t
                }));
                let v = Vector::from_terms(terms, &induced, field);
                debug_assert!(v.lead().map(|t| t.pos) == Some(i));
                syz.push(v);
            }
        }
        Level::from_basis(source, induced, syz)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::DenseMatrix;
    use crate::poly::{monomial_basis, parse_poly};
    use proptest::prelude::*;

    fn ring() -> RingSpec {
        RingSpec::standard(2, 2)
    }

    fn ideal(gens: &[&str]) -> (FreeModule, Vec<ModuleElement>) {
        let f = FreeModule::free(ring(), 1);
        let g = gens
            .iter()
            .map(|t| ModuleElement::new(vec![parse_poly(t, ring()).unwrap()]))
            .collect();
        (f, g)
    }

    fn elem(coords: &[&str]) -> ModuleElement {
        ModuleElement::new(coords.iter().map(|t| parse_poly(t, ring()).unwrap()).collect())
    }

    /// Dimension of the span of all monomial multiples of `gens` in degree `d`.
    fn span_dim(ambient: &FreeModule, gens: &[ModuleElement], extra: Option<&ModuleElement>, d: Bidegree) -> usize {
        let r = ambient.ring();
        let mut index: HashMap<(usize, Monomial), usize> = HashMap::new();
        for k in 0..ambient.rank() {
            for mono in monomial_basis(r, d - ambient.shift(k)) {
                let n = index.len();
                index.insert((k, mono), n);
            }
        }
        let mut cols: Vec<Vec<u32>> = Vec::new();
        let mut push = |v: &ModuleElement| {
            let mut col = vec![0u32; index.len()];
            for (k, f) in v.coords().iter().enumerate() {
                for (mono, c) in f.terms() {
                    col[index[&(k, mono.clone())]] = *c;
                }
            }
            cols.push(col);
        };
        for g in gens {
            let Ok(e) = g.bidegree(ambient) else { continue };
            for mono in monomial_basis(r, d - e) {
                push(&g.mul_poly(&Polynomial::term(r, mono, 1)));
            }
        }
        if let Some(v) = extra {
            push(v);
        }
        DenseMatrix::from_columns(r.field(), index.len(), &cols).rank()
    }

    #[test]
    fn buchberger_examples() {
        let (f, g) = ideal(&["x1", "y1"]);
        let gb = buchberger(&f, &g).unwrap();
        assert_eq!(gb.len(), 2);
        let (f, g) = ideal(&["x1*y1"]);
        assert_eq!(buchberger(&f, &g).unwrap().elements(), g);
        let (f, g) = ideal(&["x1^2", "x1*x2"]);
        let gb = buchberger(&f, &g).unwrap();
        assert_eq!(gb.len(), 2);
        for a in 0..4 {
            for b in 0..3 {
                let d = Bidegree::new(a, b);
                assert_eq!(span_dim(&f, &g, None, d), span_dim(&f, &gb.elements(), None, d));
            }
        }
        let (f, _) = ideal(&[]);
        assert!(buchberger(&f, &[elem(&["x1 + y1"])]).is_err());
    }

    #[test]
    fn normal_form_examples() {
        let (f, g) = ideal(&["x1", "y1"]);
        let gb = buchberger(&f, &g).unwrap();
        let nf = gb.normal_form(&elem(&["x1*y1 + x2*y2"])).unwrap();
        assert_eq!(nf, elem(&["x2*y2"]));
        for e in gb.elements() {
            assert!(gb.normal_form(&e).unwrap().is_zero());
        }
        let v = elem(&["x1*y2 + x2*y2"]);
        let once = gb.normal_form(&v).unwrap();
        assert_eq!(gb.normal_form(&once).unwrap(), once);
    }

    #[test]
    fn syzygy_examples() {
        let (f, g) = ideal(&["x1", "y1"]);
        let (m, s) = syzygies(&buchberger(&f, &g).unwrap());
        assert_eq!(s.len(), 1);
        assert_eq!(m.rank(), 2);
        let gb = buchberger(&f, &g).unwrap().elements();
        let total = gb[0].mul_poly(&s[0].coords()[0]).add_scaled(&gb[1].mul_poly(&s[0].coords()[1]), 1);
        assert!(total.is_zero());

        let (f, g) = ideal(&["x1*y1"]);
        assert!(syzygies(&buchberger(&f, &g).unwrap()).1.is_empty());

        let (f, g) = ideal(&["x1*y1", "x1*y2"]);
        let gb = buchberger(&f, &g).unwrap();
        let (m, s) = syzygies(&gb);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].bidegree(&m).unwrap(), Bidegree::new(1, 2));
        let e = gb.elements();
        let total = e[0].mul_poly(&s[0].coords()[0]).add_scaled(&e[1].mul_poly(&s[0].coords()[1]), 1);
        assert!(total.is_zero());
    }

    #[test]
    fn module_basis_with_shifts() {
        let f = FreeModule::new(ring(), vec![Bidegree::ZERO, Bidegree::new(1, 0)]);
        let gens = vec![elem(&["x1", "1"]), elem(&["x2", "0"]), elem(&["y1", "0"])];
        let gens: Vec<ModuleElement> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let gb = buchberger(&f, &gens).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let d = Bidegree::new(a, b);
                assert_eq!(span_dim(&f, &gens, None, d), span_dim(&f, &gb.elements(), None, d));
            }
        }
    }

    fn random_ideal() -> impl Strategy<Value = Vec<ModuleElement>> {
        let r = ring();
        let degs = prop_oneof![
            Just(Bidegree::new(1, 0)),
            Just(Bidegree::new(0, 1)),
            Just(Bidegree::new(1, 1)),
            Just(Bidegree::new(2, 0)),
            Just(Bidegree::new(0, 2)),
            Just(Bidegree::new(2, 1)),
        ];
        proptest::collection::vec(
            degs.prop_flat_map(move |d| {
                let basis = monomial_basis(r, d);
                let len = basis.len();
                (Just(basis), proptest::collection::vec(0u32..3, len))
            })
            .prop_map(move |(basis, coeffs)| {
                ModuleElement::new(vec![Polynomial::from_terms(r, basis.into_iter().zip(coeffs))])
            }),
            1..4,
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn membership_matches_linear_algebra(gens in random_ideal(), a in 0i64..4, b in 0i64..4) {
            let f = FreeModule::free(ring(), 1);
            let gens: Vec<ModuleElement> = gens.into_iter().filter(|g| !g.is_zero()).collect();
            let gb = buchberger(&f, &gens).unwrap();
            let d = Bidegree::new(a, b);
            let span = span_dim(&f, &gens, None, d);
            prop_assert_eq!(span, span_dim(&f, &gb.elements(), None, d));
            for mono in monomial_basis(ring(), d) {
                let v = ModuleElement::new(vec![Polynomial::term(ring(), mono, 1)]);
                let member = span_dim(&f, &gens, Some(&v), d) == span;
                prop_assert_eq!(gb.contains(&v).unwrap(), member);
            }
        }

        #[test]
        fn syzygies_compose_to_zero_and_gb_is_stable(gens in random_ideal()) {
            let f = FreeModule::free(ring(), 1);
            let gens: Vec<ModuleElement> = gens.into_iter().filter(|g| !g.is_zero()).collect();
            let gb = buchberger(&f, &gens).unwrap();
            let again = buchberger(&f, &gb.elements()).unwrap();
            prop_assert_eq!(again.elements(), gb.elements());
            let e = gb.elements();
            let (_, syz) = syzygies(&gb);
            for s in syz {
                let mut total = ModuleElement::zero(&f);
                for (k, c) in s.coords().iter().enumerate() {
                    total = total.add_scaled(&e[k].mul_poly(c), 1);
                }
                prop_assert!(total.is_zero());
            }
        }
    }
}
