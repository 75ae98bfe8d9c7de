//! Strandwise scans: tameness of `H^k_Q(M)`, limit depth and dimension of
//! the strands `N_j`, and growth of `reg N_j`.
//!
//! `H^k_Q(M)` is reached through `P`-local cohomology of `N_i = Ext^{m+n-i}(M, ω)`,
//! whose strands are finitely generated `K[x]`-modules. Strand `j` of `N`
//! corresponds to row `-j` of `H^k_Q(M)`, so "eventually" means large `j`
//! here and very negative y-degree in `H^k_Q(M)`. An eventual pattern is
//! only ever reported as constancy on the trailing half of the scanned range.

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::cohomology::ext_presentation_from;
use crate::duality::CheckReport;
use crate::error::{Error, Result};
use crate::poly::{Bidegree, Polynomial};
use crate::resolve::{profile, profile_from_resolution, resolve, Presentation};
use crate::strand::x_strand;
use crate::table::Window;

/// Whether `H^k_{P_0}(N_j) ≠ 0`, i.e. `Ext^{m-k}_{K[x]}(N_j, ω)` has a
/// minimal generator.
pub fn strand_nonvanishing(n: &Presentation, k: i64, j: i64) -> bool {
    let m = n.ring().m() as i64;
    if k < 0 || k > m {
        return false;
    }
    let res = resolve(&x_strand(n, j));
    !ext_presentation_from(&res, (m - k) as usize).is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TameVerdict {
    EventuallyZero,
    EventuallyNonzero,
    Inconclusive,
}

impl fmt::Display for TameVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TameVerdict::EventuallyZero => "eventually-zero",
            TameVerdict::EventuallyNonzero => "eventually-nonzero",
            TameVerdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TameReport {
    pub k: i64,
    pub jwindow: RangeInclusive<i64>,
    /// `(j, H^k_Q(M)_{(*,-j)} ≠ 0)` for every scanned `j`.
    pub nonzero: Vec<(i64, bool)>,
    pub verdict: TameVerdict,
    /// Depth and dimension of `N_j` if constant on the trailing half.
    pub limit_depth: Option<i64>,
    pub limit_dim: Option<i64>,
}

impl fmt::Display for TameReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "H^{}_Q(M), strands j in {}..={}: {}",
            self.k,
            self.jwindow.start(),
            self.jwindow.end(),
            self.verdict
        )?;
        let row: Vec<&str> = self.nonzero.iter().map(|&(_, nz)| if nz { "1" } else { "0" }).collect();
        writeln!(f, "  nonzero by j: {}", row.join(" "))?;
        let show = |v: Option<i64>| v.map_or("undetermined".to_string(), |x| x.to_string());
        writeln!(f, "  limit depth {}, limit dim {}", show(self.limit_depth), show(self.limit_dim))
    }
}

/// The part of a scan range that decides an eventual pattern.
fn trailing_half(jwindow: &RangeInclusive<i64>) -> RangeInclusive<i64> {
    let len = jwindow.end() - jwindow.start() + 1;
    (jwindow.start() + len / 2)..=*jwindow.end()
}

fn constant_tail<T: Copy + PartialEq>(values: &[(i64, T)], tail: &RangeInclusive<i64>) -> Option<T> {
    let mut it = values.iter().filter(|(j, _)| tail.contains(j)).map(|&(_, v)| v);
    let first = it.next()?;
    it.all(|v| v == first).then_some(first)
}

fn check_jwindow(jwindow: &RangeInclusive<i64>) -> Result<()> {
    if jwindow.start() > jwindow.end() {
        return Err(Error::BadWindow(format!("{}:{}", jwindow.start(), jwindow.end())));
    }
    Ok(())
}

/// Depth and dimension of each `N_j` over `K[x]` (`None` for `N_j = 0`).
fn strand_profiles(n: &Presentation, jwindow: &RangeInclusive<i64>) -> Vec<(i64, Option<(i64, i64)>)> {
    jwindow
        .clone()
        .into_par_iter()
        .map(|j| {
            let p = profile(&x_strand(n, j)).ok().map(|p| (p.depth, p.dim));
            (j, p)
        })
        .collect()
}

/// Scans `H^k_Q(M)` over strands `j ∈ jwindow`.
///
/// Supported indices: `k = s` and `k = t - m` for any `M`, every `k` for
/// Cohen-Macaulay `M` or `m ≤ 1`. Otherwise `UnsupportedIndex`.
pub fn tame_scan(m: &Presentation, k: i64, jwindow: RangeInclusive<i64>) -> Result<TameReport> {
    check_jwindow(&jwindow)?;
    let ring = m.ring();
    let res = resolve(m);
    let prof = profile_from_resolution(&res)?;
    let (mm, nvars) = (ring.m() as i64, ring.nvars() as i64);
    let (s, t) = (prof.dim, prof.depth);
    let n_of = |i: i64| {
        if i < 0 || i > nvars {
            Presentation::zero(ring)
        } else {
            ext_presentation_from(&res, (nvars - i) as usize)
        }
    };
    // Each entry (N, P-index): H^k_Q(M)_{-j} ≠ 0 iff some H^idx_P(N)_{(*,j)} ≠ 0.
    let sources: Vec<(Presentation, i64)> = if k == s || prof.is_cm {
        vec![(n_of(s), s - k)]
    } else if k == t - mm {
        vec![(n_of(t), mm)]
    } else if mm == 0 {
        vec![(n_of(k), 0)]
    } else if mm == 1 {
        vec![(n_of(k + 1), 1), (n_of(k), 0)]
    } else {
        return Err(Error::UnsupportedIndex(k));
    };
    let nonzero: Vec<(i64, bool)> = jwindow
        .clone()
        .into_par_iter()
        .map(|j| (j, sources.iter().any(|(n, idx)| strand_nonvanishing(n, *idx, j))))
        .collect();
    let tail = trailing_half(&jwindow);
    let verdict = match constant_tail(&nonzero, &tail) {
        Some(true) => TameVerdict::EventuallyNonzero,
        Some(false) => TameVerdict::EventuallyZero,
        None => TameVerdict::Inconclusive,
    };
    let profiles = strand_profiles(&sources[0].0, &jwindow);
    let limit = constant_tail(&profiles, &tail).flatten();
    Ok(TameReport {
        k,
        jwindow,
        nonzero,
        verdict,
        limit_depth: limit.map(|p| p.0),
        limit_dim: limit.map(|p| p.1),
    })
}

/// `N / P N`, adding `x_i e_k` to the relations for every generator.
fn mod_p(n: &Presentation) -> Presentation {
    let ring = n.ring();
    let gens = n.generators().shifts().to_vec();
    let mut rels: Vec<(Bidegree, Vec<Polynomial>)> = n
        .relation_module()
        .shifts()
        .iter()
        .cloned()
        .zip(n.matrix().columns().iter().cloned())
        .collect();
    for (k, g) in gens.iter().enumerate() {
        for i in 0..ring.m() {
            let mut col = vec![Polynomial::zero(ring); gens.len()];
            col[k] = Polynomial::var(ring, i);
            rels.push((*g + Bidegree::new(1, 0), col));
        }
    }
    Presentation::new(ring, gens, rels).expect("bihomogeneous by construction")
}

/// Stabilization of depth and dimension of the strands `N_j` over the
/// trailing half of `jwindow`. When `N` is Cohen-Macaulay and its strands
/// do not eventually vanish, the limit depth must equal
/// `dim N - dim N/PN`. A range too short to show stabilization is reported
/// in the notes, not as a failure.
pub fn limit_profile_check(n: &Presentation, jwindow: RangeInclusive<i64>) -> Result<CheckReport> {
    check_jwindow(&jwindow)?;
    let ring = n.ring();
    let window = Window::new(0, 0, *jwindow.start(), *jwindow.end())?;
    let mut report = CheckReport {
        suite: "limit".into(),
        p: ring.p(),
        window,
        comparisons: 0,
        counterexample: None,
        notes: Vec::new(),
    };
    let profiles = strand_profiles(n, &jwindow);
    let tail = trailing_half(&jwindow);
    let Some(limit) = constant_tail(&profiles, &tail) else {
        report.notes.push("inconclusive: strand depth/dim not constant on the trailing half".into());
        return Ok(report);
    };
    let Some((depth, dim)) = limit else {
        report.notes.push("strands eventually vanish; no limit depth".into());
        return Ok(report);
    };
    report.notes.push(format!("limit depth {depth}, limit dim {dim}"));
    let Ok(prof) = profile(n) else {
        return Ok(report);
    };
    if prof.is_cm {
        let quotient_dim = resolve(&mod_p(n)).krull_dimension().unwrap_or(-1);
        let expected = prof.dim - quotient_dim;
        report.comparisons += 1;
        report.notes.push(format!("dim N = {}, dim N/PN = {quotient_dim}", prof.dim));
        if depth != expected {
            report.counterexample = Some(crate::duality::Counterexample {
                cell: Bidegree::new(0, *tail.start()),
                claim: "limit depth = dim N - dim N/PN".into(),
                lhs: depth,
                rhs: expected,
            });
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegReport {
    pub jwindow: RangeInclusive<i64>,
    /// `(j, reg N_j)`, `None` where `N_j = 0`.
    pub reg: Vec<(i64, Option<i64>)>,
    /// `reg N_j ≤ c j + d` over the range; `None` when the trailing half has
    /// fewer than two nonzero strands.
    pub bound: Option<(i64, i64)>,
    /// `reg N_j - (c j + d)` for every nonzero strand.
    pub residuals: Vec<(i64, i64)>,
}

impl fmt::Display for RegReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, r) in &self.reg {
            match r {
                Some(r) => writeln!(f, "j = {j}: reg {r}")?,
                None => writeln!(f, "j = {j}: zero strand")?,
            }
        }
        match self.bound {
            Some((c, d)) => {
                writeln!(f, "reg N_j <= {c}*j + {d}")?;
                writeln!(f, "a(H^(s-k)_Q(M)_j) >= {c}*j + k - {d}")
            }
            None => writeln!(f, "degenerate fit: fewer than two nonzero strands in the trailing half"),
        }
    }
}

/// `reg N_j` for `N = Ext^{m+n-s}(M, ω)` of a Cohen-Macaulay `M`, with the
/// least integer slope dominating the trailing half and the smallest
/// intercept dominating the whole range.
pub fn reg_scan(m: &Presentation, jwindow: RangeInclusive<i64>) -> Result<RegReport> {
    check_jwindow(&jwindow)?;
    let res = resolve(m);
    let prof = profile_from_resolution(&res)?;
    if !prof.is_cm {
        return Err(Error::NotCm);
    }
    let nvars = m.ring().nvars() as i64;
    let n = ext_presentation_from(&res, (nvars - prof.dim) as usize);
    let reg: Vec<(i64, Option<i64>)> = jwindow
        .clone()
        .into_par_iter()
        .map(|j| (j, strand_regularity(&x_strand(&n, j))))
        .collect();
    let tail = trailing_half(&jwindow);
    let tail_vals: Vec<(i64, i64)> = reg
        .iter()
        .filter(|(j, _)| tail.contains(j))
        .filter_map(|&(j, r)| r.map(|r| (j, r)))
        .collect();
    let bound = (tail_vals.len() >= 2).then(|| {
        let c = tail_vals
            .windows(2)
            .map(|w| (w[1].1 - w[0].1).div_euclid(w[1].0 - w[0].0))
            .max()
            .expect("two values");
        let d = reg.iter().filter_map(|&(j, r)| r.map(|r| r - c * j)).max().expect("nonzero strand");
        (c, d)
    });
    let residuals = match bound {
        Some((c, d)) => reg.iter().filter_map(|&(j, r)| r.map(|r| (j, r - c * j - d))).collect(),
        None => Vec::new(),
    };
    Ok(RegReport {
        jwindow,
        reg,
        bound,
        residuals,
    })
}

/// Castelnuovo-Mumford regularity of a single-graded module from its
/// minimal resolution; `None` for the zero module.
pub fn strand_regularity(strand: &Presentation) -> Option<i64> {
    let res = resolve(strand);
    res.modules()
        .iter()
        .enumerate()
        .flat_map(|(i, f)| f.shifts().iter().map(move |g| g.a - i as i64))
        .max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{local_coh_tables, Theory};
    use crate::poly::{parse_poly, RingSpec};
    use proptest::prelude::*;

    fn cyclic(ring: RingSpec, gens: &[&str]) -> Presentation {
        let polys: Vec<Polynomial> = gens.iter().map(|t| parse_poly(t, ring).unwrap()).collect();
        Presentation::cyclic(ring, &polys).unwrap()
    }

    fn s22() -> RingSpec {
        RingSpec::standard(2, 2)
    }

    #[test]
    fn nonvanishing_on_free_module() {
        let s = cyclic(s22(), &[]);
        for j in 0..4 {
            assert!(strand_nonvanishing(&s, 2, j));
            assert!(!strand_nonvanishing(&s, 1, j));
            assert!(!strand_nonvanishing(&s, 0, j));
        }
        assert!(!strand_nonvanishing(&s, 2, -1));
    }

    #[test]
    fn scans_of_small_modules() {
        let s = cyclic(s22(), &[]);
        let top = tame_scan(&s, 2, -10..=10).unwrap();
        // Strands 0 and 1 of ω_S vanish, so the trailing half 0..=10 is not constant.
        assert_eq!(top.verdict, TameVerdict::Inconclusive);
        let top = tame_scan(&s, 2, 0..=10).unwrap();
        assert_eq!(top.verdict, TameVerdict::EventuallyNonzero);
        assert_eq!((top.limit_depth, top.limit_dim), (Some(2), Some(2)));
        let m = cyclic(s22(), &["x1*y1"]);
        let r = tame_scan(&m, 3, -4..=20).unwrap();
        assert_ne!(r.verdict, TameVerdict::Inconclusive);
        let non_cm = cyclic(s22(), &["x1*y1", "x1*y2"]);
        assert_eq!(tame_scan(&non_cm, 1, 0..=3).err(), Some(Error::UnsupportedIndex(1)));
        assert_ne!(tame_scan(&non_cm, 0, -4..=20).unwrap().verdict, TameVerdict::Inconclusive);
    }

    #[test]
    fn limit_profiles() {
        let s = cyclic(s22(), &[]);
        let r = limit_profile_check(&s, 0..=6).unwrap();
        assert!(r.passed() && r.comparisons == 1, "{r}");
        let hyper = cyclic(s22(), &["x1"]);
        let r = limit_profile_check(&hyper, 0..=6).unwrap();
        assert!(r.passed() && r.comparisons == 1, "{r}");
        assert!(r.notes.iter().any(|n| n.contains("limit depth 1")));
        let short = limit_profile_check(&cyclic(s22(), &["x1*y1"]), -3..=-3).unwrap();
        assert!(short.passed());
    }

    #[test]
    fn regularity_scans() {
        let s = cyclic(s22(), &[]);
        let r = reg_scan(&s, 0..=6).unwrap();
        assert_eq!(r.bound, Some((0, 2)));
        assert!(r.reg.iter().all(|&(j, v)| v == if j >= 2 { Some(2) } else { None }));
        let one = reg_scan(&s, 3..=3).unwrap();
        assert_eq!(one.bound, None);
        let m = cyclic(s22(), &["x1*y1"]);
        let r = reg_scan(&m, -2..=8).unwrap();
        assert!(r.bound.is_some());
        assert!(r.residuals.iter().all(|&(_, e)| e <= 0));
        assert_eq!(reg_scan(&cyclic(s22(), &["x1*y1", "x1*y2"]), 0..=2).err(), Some(Error::NotCm));
    }

    #[test]
    fn cm_scan_pattern_follows_limit_profile() {
        // For CM M, H^{s-k}_Q(M) is eventually zero for k < t0 or k > s0 and
        // eventually nonzero for k in {t0, s0}.
        for gens in [vec!["x1*y1"], vec!["x1*y1 + x2*y2"], vec!["y1", "y2"]] {
            let m = cyclic(s22(), &gens);
            let s = profile(&m).unwrap().dim;
            let base = tame_scan(&m, s, -6..=10).unwrap();
            let (Some(t0), Some(s0)) = (base.limit_depth, base.limit_dim) else {
                continue;
            };
            for k in 0..=2 {
                let r = tame_scan(&m, s - k, -6..=10).unwrap();
                if k < t0 || k > s0 {
                    assert_eq!(r.verdict, TameVerdict::EventuallyZero, "{gens:?} k={k}");
                }
                if k == t0 || k == s0 {
                    assert_eq!(r.verdict, TameVerdict::EventuallyNonzero, "{gens:?} k={k}");
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(8))]

        #[test]
        fn nonvanishing_agrees_with_table(a in 0u32..3, b in 0u32..3, j in -1i64..4, k in 0i64..3) {
            let r = s22();
            let f = Polynomial::from_terms(
                r,
                [(parse_poly("x1*y1", r).unwrap(), 1), (parse_poly("x2*y2", r).unwrap(), a), (parse_poly("x1*y2", r).unwrap(), b)]
                    .into_iter()
                    .map(|(p, c)| (p.leading().unwrap().0.clone(), c)),
            );
            let m = Presentation::cyclic(r, &[f, parse_poly("x2^2", r).unwrap()]).unwrap();
            let w = Window::new(-8, 8, j, j).unwrap();
            let tables = local_coh_tables(&m, Theory::P, w).unwrap();
            let in_table = !tables[k as usize].table.is_zero();
            prop_assert_eq!(strand_nonvanishing(&m, k, j), in_table);
        }
    }
}
