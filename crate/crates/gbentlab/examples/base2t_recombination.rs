//! Base-2^t decomposition: components over Z_{2^t} and the exact
//! recombination of their spectra.
//!
//! A function with values in Z_16 splits into two base-4 blocks; the 4
//! anchored Z_4-linear combinations are g-hyperbent whenever the function
//! is, and their level-4 spectra recombine into the level-16 spectrum with
//! an exact division. Run for every decimation exponent.
//!
//! Run with: cargo run --example base2t_recombination

use gbentlab::construct::{construct_ps_ap, PsApSpec};
use gbentlab::decomp;
use gbentlab::field::FieldCtx;
use gbentlab::{props, spectral};
use std::sync::Arc;

fn main() {
    let ctx = Arc::new(FieldCtx::new(4).unwrap());
    // antipodal ingredient: 1 - 1 + zeta^3 - zeta^3 = 0, with digits spread
    // across both base-4 blocks
    let spec = PsApSpec::new(2, 4, vec![0, 8, 3, 11]).unwrap();
    let f = construct_ps_ap(&spec, &ctx).unwrap();
    println!("f on F_16 with values in Z_16, table {:?}", f.table());

    let blocks = f.base2t_blocks(2).unwrap();
    println!("\nbase-4 blocks:");
    for (j, b) in blocks.iter().enumerate() {
        println!("  b_{} = {:?}", j + 1, b.table());
    }

    println!("\nZ_4 components c * b_1 + b_2:");
    for c in 0..4u16 {
        let g = f.component_base2t(2, &[c]).unwrap();
        let verdict = props::is_ghyperbent(&g).unwrap().verdict;
        println!("  c = {}: g-hyperbent {}", c, verdict);
    }

    // recombination identity, all decimations
    let mut exact = true;
    for i in ctx.coprime_exponents() {
        let spectra: Vec<_> = (0..4u16)
            .map(|c| spectral::ewht(&f.component_base2t(2, &[c]).unwrap(), i).unwrap())
            .collect();
        let combined = spectral::combine_base2t_spectra(&spectra, 2, 4).unwrap();
        exact &= combined == spectral::ewht(&f, i).unwrap();
    }
    println!("\nspectra recombine exactly for every decimation: {}", exact);

    // the full verifier bundles component checks and recombination
    let report = decomp::verify_base2t_theorem(&f, 2).unwrap();
    println!("verifier clauses all hold: {}", report.all_hold());
}
