//! Presentations, minimal free resolutions and the invariants read off them.

use std::collections::HashMap;

use crate::arith::DenseMatrix;
use crate::error::{Error, Result};
use crate::groebner::{
    groebner_vectors, reduce_fully, FreeModule, Level, ModuleElement, Term, TermOrder, Vector,
};
use crate::poly::{monomial_basis, Bidegree, Monomial, Polynomial, RingSpec};
use crate::table::{DimTable, Window};

/// A bihomogeneous map of free modules, stored by columns: column `l` is the
/// image of the `l`-th source generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    source: FreeModule,
    target: FreeModule,
    cols: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    /// Validates shapes, rings and that entry `(k,l)` is zero or of bidegree
    /// `source_l - target_k`.
    pub fn new(source: FreeModule, target: FreeModule, cols: Vec<Vec<Polynomial>>) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::RingMismatch);
        }
        if cols.len() != source.rank() {
            return Err(Error::RankMismatch {
                expected: source.rank(),
                found: cols.len(),
            });
        }
        for (l, col) in cols.iter().enumerate() {
            if col.len() != target.rank() {
                return Err(Error::RankMismatch {
                    expected: target.rank(),
                    found: col.len(),
                });
            }
            for (k, f) in col.iter().enumerate() {
                if f.ring() != target.ring() {
                    return Err(Error::RingMismatch);
                }
                if f.is_zero() {
                    continue;
                }
                let expected = source.shift(l) - target.shift(k);
                let found = f.bidegree()?;
                if found != expected {
                    return Err(Error::DegreeMismatch {
                        row: k,
                        col: l,
                        found,
                        expected,
                    });
                }
            }
        }
        Ok(PolyMatrix {
            source,
            target,
            cols,
        })
    }

    pub(crate) fn new_unchecked(source: FreeModule, target: FreeModule, cols: Vec<Vec<Polynomial>>) -> Self {
        debug_assert!(Self::new(source.clone(), target.clone(), cols.clone()).is_ok());
        PolyMatrix {
            source,
            target,
            cols,
        }
    }

    pub fn zero(source: FreeModule, target: FreeModule) -> Self {
        let ring = target.ring();
        let cols = vec![vec![Polynomial::zero(ring); target.rank()]; source.rank()];
        PolyMatrix {
            source,
            target,
            cols,
        }
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn ring(&self) -> RingSpec {
        self.target.ring()
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, k: usize, l: usize) -> &Polynomial {
        &self.cols[l][k]
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.cols
    }

    pub fn column(&self, l: usize) -> ModuleElement {
        ModuleElement::new(self.cols[l].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().flatten().all(Polynomial::is_zero)
    }

    /// Some entry that is a nonzero constant, as `(row, col, value)`.
    pub fn find_unit(&self) -> Option<(usize, usize, u32)> {
        self.cols.iter().enumerate().find_map(|(l, col)| {
            col.iter()
                .enumerate()
                .find_map(|(k, f)| f.as_unit().map(|u| (k, l, u)))
        })
    }

    /// The K-linear map `source_d → target_d` in monomial bases.
    pub fn restrict(&self, d: Bidegree) -> DenseMatrix {
        let ring = self.ring();
        let (index, rows) = degree_index(&self.target, d);
        let mut cols: Vec<Vec<u32>> = Vec::new();
        for (l, col) in self.cols.iter().enumerate() {
            for mu in monomial_basis(ring, d - self.source.shift(l)) {
                let mut v = vec![0u32; rows];
                for (k, f) in col.iter().enumerate() {
                    for (mono, c) in f.terms() {
                        v[index[&(k, mono.mul(&mu))]] = *c;
                    }
                }
                cols.push(v);
            }
        }
        DenseMatrix::from_columns(ring.field(), rows, &cols)
    }

    /// `Hom(-, ω)` applied to the map: the transpose between dual free modules.
    pub fn dual(&self) -> PolyMatrix {
        let cols = (0..self.nrows())
            .map(|k| (0..self.ncols()).map(|l| self.cols[l][k].clone()).collect())
            .collect();
        PolyMatrix {
            source: self.target.dual(),
            target: self.source.dual(),
            cols,
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PolyMatrix) -> PolyMatrix {
        assert_eq!(inner.target, self.source, "maps do not compose");
        let ring = self.ring();
        let cols = inner
            .cols
            .iter()
            .map(|icol| {
                (0..self.nrows())
                    .map(|k| {
                        let mut acc = Polynomial::zero(ring);
                        for (j, g) in icol.iter().enumerate() {
                            if !g.is_zero() && !self.cols[j][k].is_zero() {
                                acc = acc.try_add(&self.cols[j][k].try_mul(g).expect("ring")).expect("ring");
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        PolyMatrix {
            source: inner.source.clone(),
            target: self.target.clone(),
            cols,
        }
    }
}

/// Monomial basis of `F_d` as a map `(generator, monomial) → row`.
fn degree_index(f: &FreeModule, d: Bidegree) -> (HashMap<(usize, Monomial), usize>, usize) {
    let mut index = HashMap::new();
    for k in 0..f.rank() {
        for mono in monomial_basis(f.ring(), d - f.shift(k)) {
            let n = index.len();
            index.insert((k, mono), n);
        }
    }
    let n = index.len();
    (index, n)
}

/// `M = coker(F_1 → F_0)`; the target generators are the generators of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    map: PolyMatrix,
}

impl Presentation {
    /// Builds `coker` from generator bidegrees and relations given as
    /// `(relation bidegree, one polynomial per generator)`.
    pub fn new(ring: RingSpec, gens: Vec<Bidegree>, rels: Vec<(Bidegree, Vec<Polynomial>)>) -> Result<Self> {
        let target = FreeModule::new(ring, gens);
        let source = FreeModule::new(ring, rels.iter().map(|r| r.0).collect());
        let cols = rels.into_iter().map(|r| r.1).collect();
        Ok(Presentation {
            map: PolyMatrix::new(source, target, cols)?,
        })
    }

    pub fn from_matrix(map: PolyMatrix) -> Self {
        Presentation { map }
    }

    pub fn free(f: FreeModule) -> Self {
        let source = FreeModule::new(f.ring(), Vec::new());
        Presentation {
            map: PolyMatrix::zero(source, f),
        }
    }

    pub fn zero(ring: RingSpec) -> Self {
        Self::free(FreeModule::new(ring, Vec::new()))
    }

    /// `S/I` for bihomogeneous generators of `I`.
    pub fn cyclic(ring: RingSpec, ideal: &[Polynomial]) -> Result<Self> {
        let mut rels = Vec::new();
        for f in ideal {
            if f.is_zero() {
                continue;
            }
            rels.push((f.bidegree()?, vec![f.clone()]));
        }
        Self::new(ring, vec![Bidegree::ZERO], rels)
    }

    pub fn ring(&self) -> RingSpec {
        self.map.ring()
    }

    pub fn generators(&self) -> &FreeModule {
        self.map.target()
    }

    pub fn relation_module(&self) -> &FreeModule {
        self.map.source()
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.map
    }

    pub fn num_generators(&self) -> usize {
        self.map.nrows()
    }

    pub fn num_relations(&self) -> usize {
        self.map.ncols()
    }

    /// `dim_K M_d`, exactly.
    pub fn hilbert(&self, d: Bidegree) -> u64 {
        let total = self.generators().dim_at(d);
        if total == 0 || self.num_relations() == 0 {
            return total;
        }
        total - self.map.restrict(d).rank() as u64
    }

    pub fn hilbert_table(&self, window: Window) -> DimTable {
        DimTable::from_fn(window, |d| self.hilbert(d))
    }

    /// `M(e)`, with `M(e)_d = M_{d+e}`.
    pub fn twist(&self, e: Bidegree) -> Presentation {
        let shift = |f: &FreeModule| {
            FreeModule::new(f.ring(), f.shifts().iter().map(|&g| g - e).collect())
        };
        Presentation {
            map: PolyMatrix {
                source: shift(self.map.source()),
                target: shift(self.map.target()),
                cols: self.map.cols.clone(),
            },
        }
    }

    pub fn direct_sum(&self, other: &Presentation) -> Presentation {
        let ring = self.ring();
        let (r1, r2) = (self.num_generators(), other.num_generators());
        let mut cols: Vec<Vec<Polynomial>> = Vec::new();
        for c in &self.map.cols {
            let mut v = c.clone();
            v.extend(std::iter::repeat_n(Polynomial::zero(ring), r2));
            cols.push(v);
        }
        for c in &other.map.cols {
            let mut v = vec![Polynomial::zero(ring); r1];
            v.extend(c.iter().cloned());
            cols.push(v);
        }
        Presentation {
            map: PolyMatrix {
                source: self.map.source.direct_sum(&other.map.source),
                target: self.map.target.direct_sum(&other.map.target),
                cols,
            },
        }
    }

    /// An isomorphic presentation on a minimal set of generators: unit
    /// entries are eliminated together with their generator and relation,
    /// and zero relations are dropped.
    pub fn minimize(&self) -> Presentation {
        let field = self.ring().field();
        let mut gens = self.map.target.shifts().to_vec();
        let mut rel_shifts = self.map.source.shifts().to_vec();
        let mut cols = self.map.cols.clone();
        loop {
            let unit = cols.iter().enumerate().find_map(|(l, col)| {
                col.iter().enumerate().find_map(|(k, f)| f.as_unit().map(|u| (k, l, u)))
            });
            let Some((r, c, u)) = unit else { break };
            let pivot = cols.remove(c);
            rel_shifts.remove(c);
            let inv = field.inv(u);
            for col in cols.iter_mut() {
                let factor = col[r].scale(field.neg(inv));
                if !factor.is_zero() {
                    for (k, p) in pivot.iter().enumerate() {
                        if !p.is_zero() {
                            col[k] = col[k].try_add(&p.try_mul(&factor).expect("ring")).expect("ring");
                        }
                    }
                }
                col.remove(r);
            }
            gens.remove(r);
        }
        let ring = self.ring();
        let mut kept_shifts = Vec::new();
        let mut kept_cols = Vec::new();
        for (s, col) in rel_shifts.into_iter().zip(cols) {
            if col.iter().any(|f| !f.is_zero()) {
                kept_shifts.push(s);
                kept_cols.push(col);
            }
        }
        Presentation {
            map: PolyMatrix::new_unchecked(
                FreeModule::new(ring, kept_shifts),
                FreeModule::new(ring, gens),
                kept_cols,
            ),
        }
    }

    /// Whether `M = 0`, decided by the minimal number of generators.
    pub fn is_zero(&self) -> bool {
        self.minimize().num_generators() == 0
    }
}

/// A bigraded free resolution `F_0 ← F_1 ← ... ← F_ℓ`; `maps()[i]` is
/// `F_{i+1} → F_i`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    modules: Vec<FreeModule>,
    maps: Vec<PolyMatrix>,
    minimal: bool,
}

impl FreeResolution {
    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    pub fn maps(&self) -> &[PolyMatrix] {
        &self.maps
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn ring(&self) -> RingSpec {
        self.modules[0].ring()
    }

    /// Index of the last nonzero free module (0 for the zero module).
    pub fn length(&self) -> usize {
        self.modules.iter().rposition(|f| f.rank() > 0).unwrap_or(0)
    }

    /// Generator bidegrees of `F_i` (empty beyond the length).
    pub fn betti(&self, i: usize) -> &[Bidegree] {
        self.modules.get(i).map_or(&[], |f| f.shifts())
    }

    pub fn euler_characteristic_at(&self, d: Bidegree) -> i64 {
        self.modules
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let v = f.dim_at(d) as i64;
                if i % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum()
    }

    /// The numerator `K(t)` of the Hilbert series in the total grading, as
    /// `(lowest exponent, coefficients)`.
    pub fn k_polynomial(&self) -> (i64, Vec<i64>) {
        let degs: Vec<(i64, i64)> = self
            .modules
            .iter()
            .enumerate()
            .flat_map(|(i, f)| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                f.shifts().iter().map(move |g| (g.total(), sign))
            })
            .collect();
        let Some(lo) = degs.iter().map(|d| d.0).min() else {
            return (0, Vec::new());
        };
        let hi = degs.iter().map(|d| d.0).max().expect("nonempty");
        let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
        for (d, s) in degs {
            coeffs[(d - lo) as usize] += s;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        (lo, coeffs)
    }

    /// Krull dimension of the resolved module, `None` when it is zero.
    pub fn krull_dimension(&self) -> Option<i64> {
        let (_, mut k) = self.k_polynomial();
        if k.is_empty() {
            return None;
        }
        let mut order = 0;
        while k.iter().sum::<i64>() == 0 {
            // Synthetic division by (1 - t): q_i = k_0 + ... + k_i.
            let mut q = Vec::with_capacity(k.len() - 1);
            let mut acc = 0;
            for &c in &k[..k.len() - 1] {
                acc += c;
                q.push(acc);
            }
            k = q;
            order += 1;
        }
        Some(self.ring().nvars() as i64 - order)
    }
}

/// A resolution by Schreyer's construction, not necessarily minimal.
pub fn schreyer_resolution(m: &Presentation) -> FreeResolution {
    let f0 = m.generators().clone();
    let ring = f0.ring();
    let field = ring.field();
    let order = TermOrder::pot(f0.rank(), ring.nvars());
    let gens = m
        .map
        .cols
        .iter()
        .map(|c| Vector::from_element(&ModuleElement::new(c.clone()), &order, field))
        .collect();
    let gb = groebner_vectors(&f0, &order, gens);
    let mut level = Level::from_basis(f0.clone(), order, gb);
    let mut modules = vec![f0];
    let mut maps = Vec::new();
    while !level.elems.is_empty() {
        assert!(maps.len() <= ring.nvars() + 1, "Schreyer frame longer than expected");
        let source = level.source_module();
        let cols = level
            .elems
            .iter()
            .map(|v| v.to_element(&level.module).into_coords())
            .collect();
        maps.push(PolyMatrix::new_unchecked(source.clone(), level.module.clone(), cols));
        modules.push(source);
        level = level.syzygy_level();
    }
    FreeResolution {
        modules,
        maps,
        minimal: false,
    }
}

/// The minimal bigraded free resolution of `M`.
pub fn resolve(m: &Presentation) -> FreeResolution {
    minimalize(schreyer_resolution(m))
}

/// Splits off trivial complexes `0 → S e_c → S e_r → 0` at unit entries
/// until no map has a constant entry.
fn minimalize(res: FreeResolution) -> FreeResolution {
    let ring = res.ring();
    let field = ring.field();
    let mut shifts: Vec<Vec<Bidegree>> = res.modules.iter().map(|f| f.shifts().to_vec()).collect();
    let mut maps: Vec<Vec<Vec<Polynomial>>> = res.maps.into_iter().map(|m| m.cols).collect();
    for k in 0..maps.len() {
        loop {
            let unit = maps[k].iter().enumerate().find_map(|(l, col)| {
                col.iter().enumerate().find_map(|(r, f)| f.as_unit().map(|u| (r, l, u)))
            });
            let Some((r, c, u)) = unit else { break };
            let inv = field.inv(u);
            let pivot = maps[k].remove(c);
            for col in maps[k].iter_mut() {
                let factor = col[r].scale(field.neg(inv));
                if !factor.is_zero() {
                    for (i, p) in pivot.iter().enumerate() {
                        if !p.is_zero() {
                            col[i] = col[i].try_add(&p.try_mul(&factor).expect("ring")).expect("ring");
                        }
                    }
                }
                col.remove(r);
            }
            shifts[k].remove(r);
            shifts[k + 1].remove(c);
            if k > 0 {
                maps[k - 1].remove(r);
            }
            if k + 1 < maps.len() {
                for col in maps[k + 1].iter_mut() {
                    col.remove(c);
                }
            }
        }
    }
    while shifts.len() > 1 && shifts.last().is_some_and(Vec::is_empty) {
        shifts.pop();
        maps.pop();
    }
    let modules: Vec<FreeModule> = shifts.into_iter().map(|s| FreeModule::new(ring, s)).collect();
    let maps = maps
        .into_iter()
        .enumerate()
        .map(|(i, cols)| PolyMatrix::new_unchecked(modules[i + 1].clone(), modules[i].clone(), cols))
        .collect();
    FreeResolution {
        modules,
        maps,
        minimal: true,
    }
}

/// Dimension, depth and projective dimension of a nonzero module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModuleProfile {
    pub dim: i64,
    pub depth: i64,
    pub pd: usize,
    pub is_cm: bool,
    /// `H^i_{R+}(M)` has finite length for every `i ≠ dim M`.
    pub is_gen_cm: bool,
}

pub fn profile(m: &Presentation) -> Result<ModuleProfile> {
    let res = resolve(m);
    profile_from_resolution(&res)
}

pub fn profile_from_resolution(res: &FreeResolution) -> Result<ModuleProfile> {
    let dim = res.krull_dimension().ok_or(Error::ZeroModule)?;
    let nvars = res.ring().nvars() as i64;
    let pd = res.length();
    let depth = nvars - pd as i64;
    let mut is_gen_cm = true;
    for i in depth..dim {
        let ext = crate::cohomology::ext_presentation_from(res, (nvars - i) as usize);
        if resolve(&ext).krull_dimension().unwrap_or(0) > 0 {
            is_gen_cm = false;
            break;
        }
    }
    Ok(ModuleProfile {
        dim,
        depth,
        pd,
        is_cm: dim == depth,
        is_gen_cm,
    })
}

/// Generators of `ker φ` (a Gröbner basis of it, as elements of the source).
pub fn kernel_generators(phi: &PolyMatrix) -> Vec<ModuleElement> {
    let g = phi.source();
    kernel_vectors(phi).iter().map(|v| v.to_element(g)).collect()
}

fn kernel_vectors(phi: &PolyMatrix) -> Vec<Vector> {
    let (f, g) = (phi.target(), phi.source());
    let ring = f.ring();
    let field = ring.field();
    let ambient = f.direct_sum(g);
    let order = TermOrder::pot(ambient.rank(), ring.nvars());
    let offset = f.rank();
    let gens = phi
        .cols
        .iter()
        .enumerate()
        .map(|(l, col)| {
            let mut coords = col.clone();
            coords.extend((0..g.rank()).map(|j| {
                if j == l {
                    Polynomial::constant(ring, 1)
                } else {
                    Polynomial::zero(ring)
                }
            }));
            Vector::from_element(&ModuleElement::new(coords), &order, field)
        })
        .collect();
    let gb = groebner_vectors(&ambient, &order, gens);
    gb.into_iter()
        .filter(|v| v.lead().expect("nonzero").pos >= offset)
        .map(|v| Vector {
            terms: v
                .terms
                .into_iter()
                .map(|t| Term {
                    pos: t.pos - offset,
                    ..t
                })
                .collect(),
        })
        .collect()
}

/// A presentation of `ker φ`.
pub fn kernel_presentation(phi: &PolyMatrix) -> Presentation {
    let g = phi.source().clone();
    let order = TermOrder::pot(g.rank(), g.ring().nvars());
    let level = Level::from_basis(g, order, kernel_vectors(phi));
    let gens = level.source_module();
    let syz = level.syzygy_level();
    let rels = syz.source_module();
    let cols = syz.elems.iter().map(|v| v.to_element(&gens).into_coords()).collect();
    Presentation::from_matrix(PolyMatrix::new_unchecked(rels, gens, cols))
}

/// A presentation of `⟨b⟩ / ⟨a⟩` inside the free module `ambient`, on the
/// nonzero elements of `b` as generators. Every element of `a` must lie in
/// the span of `b`.
pub fn quotient_presentation(ambient: &FreeModule, b: &[ModuleElement], a: &[ModuleElement]) -> Result<Presentation> {
    let ring = ambient.ring();
    let field = ring.field();
    let b: Vec<&ModuleElement> = b.iter().filter(|v| !v.is_zero()).collect();
    let gens = FreeModule::new(
        ring,
        b.iter().map(|v| v.bidegree(ambient)).collect::<Result<Vec<_>>>()?,
    );
    let graph = ambient.direct_sum(&gens);
    let offset = ambient.rank();
    let order = TermOrder::pot(graph.rank(), ring.nvars());
    let embed = |v: &ModuleElement, tag: Option<usize>| {
        let mut coords = v.coords().to_vec();
        coords.extend((0..gens.rank()).map(|j| {
            if Some(j) == tag {
                Polynomial::constant(ring, 1)
            } else {
                Polynomial::zero(ring)
            }
        }));
        Vector::from_element(&ModuleElement::new(coords), &order, field)
    };
    let vecs = b.iter().enumerate().map(|(i, v)| embed(v, Some(i))).collect();
    let gb = groebner_vectors(&graph, &order, vecs);
    let project = |v: &Vector| -> Vec<Polynomial> {
        let e = v.to_element(&graph).into_coords();
        assert!(e[..offset].iter().all(Polynomial::is_zero), "element outside the submodule");
        e[offset..].to_vec()
    };

    let mut rel_shifts = Vec::new();
    let mut cols = Vec::new();
    for v in gb.iter().filter(|v| v.lead().expect("nonzero").pos >= offset) {
        let col = project(v);
        rel_shifts.push(ModuleElement::new(col.clone()).bidegree(&gens)?);
        cols.push(col);
    }
    for x in a {
        if x.is_zero() {
            continue;
        }
        let r = reduce_fully(&graph, &order, &gb, embed(x, None));
        let lift: Vec<Polynomial> = project(&r).iter().map(|f| f.scale(field.neg(1))).collect();
        if lift.iter().all(Polynomial::is_zero) {
            continue;
        }
        rel_shifts.push(x.bidegree(ambient)?);
        cols.push(lift);
    }
    PolyMatrix::new(FreeModule::new(ring, rel_shifts), gens, cols).map(Presentation::from_matrix)
}

/// A presentation of the homology `ker(out) / im(inc)` at a free module `y`,
/// where `inc: X → y` and `out: y → Z` (either may be absent).
pub fn homology_presentation(y: &FreeModule, inc: Option<&PolyMatrix>, out: Option<&PolyMatrix>) -> Presentation {
    let image: Vec<ModuleElement> = inc
        .map(|a| (0..a.ncols()).map(|l| a.column(l)).collect())
        .unwrap_or_default();
    let nontrivial_out = out.filter(|b| !b.is_zero());
    let p = match nontrivial_out {
        None => {
            let rels: Vec<(Bidegree, Vec<Polynomial>)> = inc
                .map(|a| {
                    (0..a.ncols())
                        .filter(|&l| a.cols[l].iter().any(|f| !f.is_zero()))
                        .map(|l| (a.source().shift(l), a.cols[l].clone()))
                        .collect()
                })
                .unwrap_or_default();
            Presentation::new(y.ring(), y.shifts().to_vec(), rels).expect("columns of a valid map")
        }
        Some(b) => {
            let ker = kernel_generators(b);
            quotient_presentation(y, &ker, &image).expect("kernel elements are bihomogeneous")
        }
    };
    p.minimize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use proptest::prelude::*;

    fn ring() -> RingSpec {
        RingSpec::standard(2, 2)
    }

    fn cyclic(gens: &[&str]) -> Presentation {
        let polys: Vec<Polynomial> = gens.iter().map(|t| parse_poly(t, ring()).unwrap()).collect();
        Presentation::cyclic(ring(), &polys).unwrap()
    }

    fn bd(a: i64, b: i64) -> Bidegree {
        Bidegree::new(a, b)
    }

    #[test]
    fn resolve_examples() {
        let s = cyclic(&[]);
        assert_eq!(resolve(&s).length(), 0);

        let h = resolve(&cyclic(&["x1*y1"]));
        assert_eq!(h.length(), 1);
        assert_eq!(h.betti(1), &[bd(1, 1)]);

        let r = resolve(&cyclic(&["x1*y1", "x1*y2"]));
        assert_eq!(r.length(), 2);
        assert_eq!(r.betti(1), &[bd(1, 1), bd(1, 1)]);
        assert_eq!(r.betti(2), &[bd(1, 2)]);
        assert!(r.maps()[0].compose(&r.maps()[1]).is_zero());
    }

    #[test]
    fn hilbert_examples() {
        let s = cyclic(&[]);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(s.hilbert(bd(a, b)), ((a + 1) * (b + 1)) as u64);
            }
        }
        assert_eq!(cyclic(&["x1*y1"]).hilbert(bd(1, 1)), 3);
        let shifted = Presentation::free(FreeModule::new(ring(), vec![bd(1, 2)]));
        assert_eq!(shifted.hilbert(bd(1, 2)), 1);
        assert_eq!(shifted.hilbert(bd(0, 2)), 0);
    }

    #[test]
    fn profile_examples() {
        let p = profile(&cyclic(&[])).unwrap();
        assert_eq!((p.dim, p.depth, p.pd, p.is_cm), (4, 4, 0, true));
        let p = profile(&cyclic(&["x1*y1"])).unwrap();
        assert_eq!((p.dim, p.depth, p.pd, p.is_cm), (3, 3, 1, true));
        let p = profile(&cyclic(&["x1*y1", "x1*y2"])).unwrap();
        assert_eq!((p.dim, p.depth, p.pd, p.is_cm), (3, 2, 2, false));
        assert_eq!(profile(&cyclic(&["1"])), Err(Error::ZeroModule));
        let planes = profile(&cyclic(&["x1*y1", "x1*y2", "x2*y1", "x2*y2"])).unwrap();
        assert_eq!((planes.dim, planes.depth), (2, 1));
        assert!(planes.is_gen_cm && !planes.is_cm);
        assert!(!profile(&cyclic(&["x1*y1", "x1*y2"])).unwrap().is_gen_cm);
    }

    #[test]
    fn kernel_and_quotient_examples() {
        let r = ring();
        let x1 = parse_poly("x1", r).unwrap();
        let y1 = parse_poly("y1", r).unwrap();
        let one = FreeModule::free(r, 1);
        let mult = PolyMatrix::new(FreeModule::new(r, vec![bd(1, 0)]), one.clone(), vec![vec![x1.clone()]]).unwrap();
        assert!(kernel_presentation(&mult).is_zero());

        let pair = PolyMatrix::new(
            FreeModule::new(r, vec![bd(1, 0), bd(0, 1)]),
            one.clone(),
            vec![vec![x1.clone()], vec![y1.clone()]],
        )
        .unwrap();
        let k = kernel_presentation(&pair);
        assert_eq!(k.num_generators(), 1);
        assert_eq!(k.generators().shifts(), &[bd(1, 1)]);
        assert_eq!(k.num_relations(), 0);

        let basis = [ModuleElement::new(vec![Polynomial::constant(r, 1)])];
        let sub = [ModuleElement::new(vec![parse_poly("x1*y1", r).unwrap()])];
        let q = quotient_presentation(&one, &basis, &sub).unwrap();
        assert_eq!(q.hilbert(bd(1, 1)), 3);
    }

    #[test]
    fn minimize_drops_redundant_generators() {
        let r = ring();
        let p = Presentation::new(
            r,
            vec![bd(0, 0), bd(1, 0)],
            vec![(bd(1, 0), vec![parse_poly("x1", r).unwrap(), Polynomial::constant(r, 1)])],
        )
        .unwrap();
        let m = p.minimize();
        assert_eq!(m.num_generators(), 1);
        for d in Window::square(3).cells() {
            assert_eq!(m.hilbert(d), p.hilbert(d));
        }
    }

    #[test]
    fn degree_mismatch_is_reported() {
        let r = ring();
        let err = Presentation::new(r, vec![bd(0, 0)], vec![(bd(1, 0), vec![parse_poly("y1", r).unwrap()])]);
        assert!(matches!(err, Err(Error::DegreeMismatch { .. })));
    }

    /// Degree of the total-degree Hilbert polynomial, fitted from exact
    /// values: the number of finite differences before the sequence is zero.
    fn fitted_dimension(p: &Presentation, start: i64) -> i64 {
        let nv = p.ring().nvars() as i64;
        let mut vals: Vec<i64> = (start..start + 2 * nv + 2)
            .map(|t| (0..=t).map(|a| p.hilbert(bd(a, t - a)) as i64).sum())
            .collect();
        let mut order = 0;
        while vals.iter().any(|&v| v != 0) {
            vals = vals.windows(2).map(|w| w[1] - w[0]).collect();
            order += 1;
        }
        order
    }

    fn random_cyclic() -> impl Strategy<Value = Presentation> {
        let r = ring();
        let degs = prop_oneof![
            Just(bd(1, 0)),
            Just(bd(0, 1)),
            Just(bd(1, 1)),
            Just(bd(2, 0)),
            Just(bd(1, 2)),
            Just(bd(2, 1)),
            Just(bd(2, 2)),
        ];
        proptest::collection::vec(
            degs.prop_flat_map(move |d| {
                let basis = monomial_basis(r, d);
                let len = basis.len();
                (Just(basis), proptest::collection::vec(0u32..3, len))
            })
            .prop_map(move |(basis, c)| Polynomial::from_terms(r, basis.into_iter().zip(c))),
            1..4,
        )
        .prop_map(move |fs| Presentation::cyclic(r, &fs).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn resolution_is_minimal_exact_and_short(p in random_cyclic()) {
            let res = resolve(&p);
            let nv = p.ring().nvars();
            prop_assert!(res.length() <= nv);
            for map in res.maps() {
                prop_assert!(map.find_unit().is_none());
            }
            for w in res.maps().windows(2) {
                prop_assert!(w[0].compose(&w[1]).is_zero());
            }
            for d in Window::new(-1, 4, -1, 4).unwrap().cells() {
                prop_assert_eq!(res.euler_characteristic_at(d), p.hilbert(d) as i64);
            }
            let raw = schreyer_resolution(&p);
            for d in Window::new(0, 3, 0, 3).unwrap().cells() {
                prop_assert_eq!(raw.euler_characteristic_at(d), p.hilbert(d) as i64);
            }
        }

        #[test]
        fn dimension_matches_hilbert_polynomial_fit(p in random_cyclic()) {
            let res = resolve(&p);
            let max_rel = p.relation_module().shifts().iter().map(|d| d.total()).max().unwrap_or(0);
            let fit = fitted_dimension(&p, max_rel + 6);
            prop_assert_eq!(fitted_dimension(&p, max_rel + 9), fit);
            prop_assert_eq!(res.krull_dimension().unwrap_or(0), fit);
            if let Ok(prof) = profile_from_resolution(&res) {
                prop_assert_eq!(prof.pd as i64 + prof.depth, p.ring().nvars() as i64);
                prop_assert!(prof.depth <= prof.dim);
            }
        }
    }
}
