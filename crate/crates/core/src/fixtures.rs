//! Named test modules and seeded random bihomogeneous quotients.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::poly::{monomial_basis, parse_poly, Bidegree, Polynomial, RingSpec};
use crate::resolve::Presentation;

/// `S/I` for `I` generated by the given polynomial texts.
pub fn quotient(ring: RingSpec, gens: &[&str]) -> Result<Presentation> {
    let polys = gens.iter().map(|t| parse_poly(t, ring)).collect::<Result<Vec<_>>>()?;
    Presentation::cyclic(ring, &polys)
}

/// The residue field `K = S/(x, y)` in degree `(0,0)`.
pub fn residue_field(ring: RingSpec) -> Presentation {
    let vars: Vec<Polynomial> = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
    Presentation::cyclic(ring, &vars).expect("variables are bihomogeneous")
}

/// The standard modules over `K[x1,x2,y1,y2]`, named by their ideals.
pub fn corpus() -> Vec<(&'static str, Presentation)> {
    let ring = RingSpec::standard(2, 2);
    let q = |g: &[&str]| quotient(ring, g).expect("fixture text parses");
    let s = q(&[]);
    let s_plus_k = s.direct_sum(&residue_field(ring));
    vec![
        ("S", s),
        ("S/(x1*y1)", q(&["x1*y1"])),
        ("S/(x1*y1+x2*y2)", q(&["x1*y1 + x2*y2"])),
        ("S/(y1,y2)", q(&["y1", "y2"])),
        ("S/(x1*y1,x1*y2)", q(&["x1*y1", "x1*y2"])),
        ("S/(x1*y1,x1*y2,x2*y1,x2*y2)", q(&["x1*y1", "x1*y2", "x2*y1", "x2*y2"])),
        ("S+K", s_plus_k),
    ]
}

/// A module from [`corpus`] by name.
pub fn named(name: &str) -> Option<Presentation> {
    corpus().into_iter().find(|(n, _)| *n == name).map(|(_, p)| p)
}

/// A random bihomogeneous polynomial of bidegree `d` with dense coefficients.
pub fn random_form(ring: RingSpec, d: Bidegree, rng: &mut impl Rng) -> Polynomial {
    let p = ring.p();
    let terms: Vec<_> = monomial_basis(ring, d)
        .into_iter()
        .map(|mono| (mono, rng.gen_range(0..p)))
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// `count` cyclic quotients `S/I`, each with 1 to `max_rels` relations of
/// random nonzero bidegree at most `max_deg`, reproducible from `seed`.
pub fn random_quotients(ring: RingSpec, count: usize, max_rels: usize, max_deg: Bidegree, seed: u64) -> Vec<Presentation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let nrels = rng.gen_range(1..=max_rels);
            let rels: Vec<Polynomial> = (0..nrels)
                .map(|_| loop {
                    let d = Bidegree::new(rng.gen_range(0..=max_deg.a), rng.gen_range(0..=max_deg.b));
                    if d == Bidegree::ZERO {
                        continue;
                    }
                    let f = random_form(ring, d, &mut rng);
                    if !f.is_zero() {
                        break f;
                    }
                })
                .collect();
            Presentation::cyclic(ring, &rels).expect("forms are bihomogeneous")
        })
        .collect()
}
