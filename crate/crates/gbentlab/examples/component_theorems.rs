//! Component decompositions: what the digit combinations of a g-(hyper)bent
//! function look like one level down.
//!
//! For even n the anchored XOR combinations of the digits are (hyper)bent
//! exactly when the function is g-(hyper)bent; for odd n the combinations of
//! a gbent function are semibent. Both verifiers recompute every side.
//!
//! Run with: cargo run --example component_theorems

use gbentlab::construct::{construct_ps_ap, sample_ps_ap_g, PsApSpec};
use gbentlab::decomp;
use gbentlab::field::FieldCtx;
use gbentlab::gbf::{Domain, Gbf};
use gbentlab::{props, search};
use std::sync::Arc;

fn main() {
    // even n, field domain: hyperbent components
    let ctx = Arc::new(FieldCtx::new(4).unwrap());
    let spec = PsApSpec::new(2, 3, sample_ps_ap_g(2, 3, 5)).unwrap();
    let f = construct_ps_ap(&spec, &ctx).unwrap();
    let report = decomp::verify_component_theorem(&f).unwrap();
    println!("field domain, n = 4, k = 3 ({:?}):", report.theorem);
    for clause in &report.clauses {
        println!("  [{}] {}", if clause.verdict { "ok" } else { "FAIL" }, clause.claim);
    }

    // odd n: semibent components of a gbent function
    let found = search::search_exhaustive(3, 2, &Domain::Vector, 1 << 17, 4, 1, |f| {
        props::is_gbent(f).verdict
    })
    .unwrap();
    let g32 = Gbf::new(3, 2, Domain::Vector, found.matches[0].clone()).unwrap();
    let report = decomp::verify_component_theorem(&g32).unwrap();
    println!("\nvector domain, n = 3, k = 2 ({:?}):", report.theorem);
    for clause in &report.clauses {
        println!("  [{}] {}", if clause.verdict { "ok" } else { "FAIL" }, clause.claim);
    }

    // the equivalence also rules functions out: a non-gbent function must
    // have a non-bent component somewhere
    let not_gbent = Gbf::new(2, 2, Domain::Vector, vec![0, 0, 0, 1]).unwrap();
    let report = decomp::verify_component_theorem(&not_gbent).unwrap();
    println!("\nnon-gbent input, n = 2, k = 2:");
    for clause in &report.clauses {
        println!("  [{}] {}", if clause.verdict { "ok" } else { "FAIL" }, clause.claim);
    }
}
