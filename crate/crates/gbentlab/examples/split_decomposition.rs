//! Splitting f = g + 2h and the half-level equivalence.
//!
//! A function in GB_n^(2^k) is gbent exactly when, after peeling off its
//! least significant digit g, both h and h + 2^(k-2) g are gbent one level
//! down with spectra matching pointwise up to sign. The verifier extracts
//! the sign pattern and reassembles the original spectrum from it; the
//! general t-digit split is checked the same way.
//!
//! Run with: cargo run --example split_decomposition

use gbentlab::construct::{construct_ps_ap, sample_ps_ap_g, PsApSpec};
use gbentlab::decomp::{self, SplitMode};
use gbentlab::field::FieldCtx;
use std::sync::Arc;

fn main() {
    let ctx = Arc::new(FieldCtx::new(4).unwrap());
    let spec = PsApSpec::new(2, 4, sample_ps_ap_g(2, 4, 11)).unwrap();
    let f = construct_ps_ap(&spec, &ctx).unwrap();
    println!("partial-spread f in GB_4^16, table {:?}", f.table());

    let report = decomp::verify_split_k_km1(&f, SplitMode::Iff).unwrap();
    println!("\nsplit at t = 1 ({:?}):", report.theorem);
    for clause in &report.clauses {
        println!("  [{}] {}", if clause.verdict { "ok" } else { "FAIL" }, clause.claim);
    }
    let signs = report.sign_pattern.unwrap();
    let plus = signs.iter().filter(|&&s| s == 1).count();
    println!("sign pattern: {} points +1, {} points -1", plus, signs.len() - plus);

    // the two-digit split lands two levels down
    let report = decomp::verify_t_split(&f, 2).unwrap();
    println!("\nsplit at t = 2 ({:?}):", report.theorem);
    for clause in &report.clauses {
        println!("  [{}] {}", if clause.verdict { "ok" } else { "FAIL" }, clause.claim);
    }

    // recursive depth-s components, with the sibling sign relation
    for s in 1..=4u32 {
        let report = decomp::verify_recursive_gc(&f, s, 0).unwrap();
        println!(
            "depth s = {}: all clauses hold: {}",
            s,
            report.all_hold()
        );
    }
}
