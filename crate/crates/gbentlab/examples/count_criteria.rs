//! Deciding gbentness from value histograms alone.
//!
//! The spectrum never needs to be computed: for even n a function is gbent
//! exactly when each shifted histogram has a single half-period jump of
//! +-2^(n/2); for odd n and k >= 3 the jump splits into two entries offset
//! by 2^(k-2) with a shared sign. Both criteria are cross-checked against
//! the spectral definition here.
//!
//! Run with: cargo run --example count_criteria

use gbentlab::gbf::{random_gbf, Domain, Gbf};
use gbentlab::props::{self, Certificate};
use gbentlab::rng::SplitMix64;

fn main() {
    // even n: f = 2 x1 x2, histogram at u = 0 is (3, 0, 1, 0)
    let f = Gbf::new(2, 2, Domain::Vector, vec![0, 0, 0, 2]).unwrap();
    println!("counts at u=0: {:?}", f.value_distribution(0).counts());
    let report = props::check_gbent_by_counts_even(&f).unwrap();
    println!("count criterion verdict: {}", report.verdict);
    if let Some(Certificate::RhoSigns(signs)) = &report.certificate {
        for rs in signs {
            println!("  u = {}: rho = {}, jump sign {:+}", rs.u, rs.rho, rs.sign);
        }
    }

    // criteria agree with the definition on random functions, both parities
    let mut rng = SplitMix64::new(1);
    let mut agreements = 0;
    for _ in 0..2000 {
        let f = random_gbf(4, 3, Domain::Vector, &mut rng);
        assert_eq!(
            props::check_gbent_by_counts_even(&f).unwrap().verdict,
            props::is_gbent(&f).verdict
        );
        let g = random_gbf(3, 3, Domain::Vector, &mut rng);
        assert_eq!(
            props::check_gbent_by_counts_odd(&g).unwrap().verdict,
            props::is_gbent(&g).verdict
        );
        agreements += 2;
    }
    println!("\ncriteria agree with the spectral definition on {} random functions", agreements);

    // an odd-n positive: lift a gbent function from GB_3^4 to GB_3^8
    let found = gbentlab::search::search_exhaustive(3, 2, &Domain::Vector, 1 << 17, 4, 1, |f| {
        props::is_gbent(f).verdict
    })
    .unwrap();
    let base = found.matches[0].clone();
    let lifted: Vec<u16> = base.iter().map(|&v| 2 * v).collect();
    let f = Gbf::new(3, 3, Domain::Vector, lifted).unwrap();
    let report = props::check_gbent_by_counts_odd(&f).unwrap();
    println!("\nlifted gbent function at (3, 3): count-criterion verdict {}", report.verdict);
    if let Some(Certificate::RhoSigns(signs)) = &report.certificate {
        println!("  first certificate entry: u = {}, rho = {}, sign {:+}", signs[0].u, signs[0].rho, signs[0].sign);
    }
}
