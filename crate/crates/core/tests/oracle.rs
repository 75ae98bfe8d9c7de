//! Strand/local-duality tables against the Čech complex on random modules.

use bicoh::cohomology::{local_coh_tables, CechOracle, Theory};
use bicoh::fixtures::random_quotients;
use bicoh::poly::{Bidegree, RingSpec};
use bicoh::table::Window;
use proptest::prelude::*;

fn agree(ring: RingSpec, seed: u64, window: Window) -> Result<(), TestCaseError> {
    for m in random_quotients(ring, 1, 2, Bidegree::new(2, 1), seed) {
        for theory in [Theory::P, Theory::Q] {
            let strands = local_coh_tables(&m, theory, window).unwrap();
            let cech = CechOracle::new(&m, theory).unwrap().tables(window).unwrap();
            for (i, t) in strands.iter().enumerate() {
                for (d, v) in t.table.iter() {
                    prop_assert_eq!(v, cech[i].at(d), "H^{}_{} at {}", i, theory, d);
                }
            }
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn random_quotients_two_by_two(seed in any::<u64>()) {
        agree(RingSpec::standard(2, 2), seed, Window::square(3))?;
    }

    #[test]
    fn random_quotients_one_by_two(seed in any::<u64>()) {
        agree(RingSpec::standard(1, 2), seed, Window::square(3))?;
    }
}
