//! Single-graded strands of a bigraded module.
//!
//! For fixed `j`, `N_j = ⊕_i N_(i,j)` is a graded `K[x]`-module: each
//! generator `e_k` of bidegree `(a_k, b_k)` contributes one `K[x]`-generator
//! `w e_k` of degree `a_k` for every y-monomial `w` of degree `j - b_k`, and
//! each relation contributes its y-monomial multiples, expanded along the
//! y-monomial basis. The y-strands `M_(a,*)` over `K[y]` are the mirror image.

use std::collections::HashMap;

use crate::groebner::FreeModule;
use crate::poly::{monomial_basis, Bidegree, Monomial, Polynomial, RingSpec};
use crate::resolve::{PolyMatrix, Presentation};

/// `N_j` as a presentation over `K[x]` (degrees written as `(i, 0)`).
pub fn x_strand(n: &Presentation, j: i64) -> Presentation {
    strand(n, j, true)
}

/// `M_(a,*)` as a presentation over `K[y]` (degrees written as `(0, i)`).
pub fn y_strand(m: &Presentation, a: i64) -> Presentation {
    strand(m, a, false)
}

fn strand(p: &Presentation, fixed: i64, over_x: bool) -> Presentation {
    let ring = p.ring();
    // The ring the strand lives over, and the ring of the frozen variables.
    let (base, frozen): (RingSpec, RingSpec) = if over_x {
        (ring.x_only(), ring.y_only())
    } else {
        (ring.y_only(), ring.x_only())
    };
    let frozen_deg = |d: Bidegree| if over_x { d.b } else { d.a };
    let free_deg = |d: Bidegree| {
        if over_x {
            Bidegree::new(d.a, 0)
        } else {
            Bidegree::new(0, d.b)
        }
    };
    let frozen_basis = |deg: i64| -> Vec<Monomial> {
        let d = if over_x {
            Bidegree::new(0, deg)
        } else {
            Bidegree::new(deg, 0)
        };
        monomial_basis(frozen, d)
    };

    let gens = p.generators();
    let mut index: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut shifts = Vec::new();
    for k in 0..gens.rank() {
        for w in frozen_basis(fixed - frozen_deg(gens.shift(k))) {
            index.insert((k, w), shifts.len());
            shifts.push(free_deg(gens.shift(k)));
        }
    }
    let target = FreeModule::new(base, shifts);

    let rels = p.relation_module();
    let mut rel_shifts = Vec::new();
    let mut cols = Vec::new();
    for (l, col) in p.matrix().columns().iter().enumerate() {
        let split: Vec<Vec<(Monomial, Polynomial)>> = col
            .iter()
            .map(|f| if over_x { f.split_by_y() } else { f.split_by_x() })
            .collect();
        for v in frozen_basis(fixed - frozen_deg(rels.shift(l))) {
            let mut out = vec![Polynomial::zero(base); target.rank()];
            for (k, parts) in split.iter().enumerate() {
                for (w, coeff) in parts {
                    let row = index[&(k, w.mul(&v))];
                    out[row] = out[row].try_add(coeff).expect("same ring");
                }
            }
            if out.iter().any(|f| !f.is_zero()) {
                rel_shifts.push(free_deg(rels.shift(l)));
                cols.push(out);
            }
        }
    }
    let source = FreeModule::new(base, rel_shifts);
    Presentation::from_matrix(PolyMatrix::new(source, target, cols).expect("strand of a valid presentation"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::table::Window;
    use proptest::prelude::*;

    fn ring() -> RingSpec {
        RingSpec::standard(2, 2)
    }

    fn cyclic(gens: &[&str]) -> Presentation {
        let polys: Vec<Polynomial> = gens.iter().map(|t| parse_poly(t, ring()).unwrap()).collect();
        Presentation::cyclic(ring(), &polys).unwrap()
    }

    #[test]
    fn strands_of_free_module() {
        let s = cyclic(&[]);
        let s0 = x_strand(&s, 0);
        assert_eq!((s0.num_generators(), s0.num_relations()), (1, 0));
        let s1 = x_strand(&s, 1);
        assert_eq!((s1.num_generators(), s1.num_relations()), (2, 0));
        assert_eq!(s1.ring(), ring().x_only());
        let y1 = y_strand(&s, 1);
        assert_eq!((y1.num_generators(), y1.num_relations()), (2, 0));
        assert_eq!(y_strand(&s, -1).num_generators(), 0);
        let shifted = Presentation::free(FreeModule::new(ring(), vec![Bidegree::new(0, 1), Bidegree::new(2, 0)]));
        assert_eq!(x_strand(&shifted, 3).num_generators(), 3 + 4);
    }

    #[test]
    fn strand_of_hypersurface() {
        let m = cyclic(&["x1*y1"]);
        let x1 = x_strand(&m, 1);
        assert_eq!((x1.num_generators(), x1.num_relations()), (2, 1));
        let rel = &x1.matrix().columns()[0];
        let xr = ring().x_only();
        assert_eq!(rel.iter().filter(|f| !f.is_zero()).count(), 1);
        assert!(rel.contains(&parse_poly("x1", xr).unwrap()));
        let y1 = y_strand(&m, 1);
        assert_eq!((y1.num_generators(), y1.num_relations()), (2, 1));
        for i in 0..4 {
            assert_eq!(x1.hilbert(Bidegree::new(i, 0)), m.hilbert(Bidegree::new(i, 1)));
            assert_eq!(y1.hilbert(Bidegree::new(0, i)), m.hilbert(Bidegree::new(1, i)));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn strand_dimensions_match_hilbert_table(
            a in 0usize..4, b in 0usize..4, c in 0usize..4, j in -1i64..4,
        ) {
            let r = ring();
            let basis = monomial_basis(r, Bidegree::new(1, 1));
            let f = Polynomial::from_terms(r, basis.iter().cloned().zip([1, a as u32, b as u32, c as u32]));
            let g = parse_poly("x1*y2^2 + x2*y1^2", r).unwrap();
            let m = Presentation::new(
                r,
                vec![Bidegree::ZERO, Bidegree::new(1, 0)],
                vec![
                    (Bidegree::new(1, 1), vec![f, Polynomial::zero(r)]),
                    (Bidegree::new(1, 2), vec![g, parse_poly("y1^2", r).unwrap()]),
                ],
            ).unwrap();
            let xs = x_strand(&m, j);
            let ys = y_strand(&m, j);
            for i in Window::new(-1, 4, 0, 0).unwrap().cells().map(|d| d.a) {
                prop_assert_eq!(xs.hilbert(Bidegree::new(i, 0)), m.hilbert(Bidegree::new(i, j)));
                prop_assert_eq!(ys.hilbert(Bidegree::new(0, i)), m.hilbert(Bidegree::new(j, i)));
            }
        }
    }
}
