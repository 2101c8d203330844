//! Hyperbentness: flat spectra under every coprime decimation x -> x^i.
//!
//! Bentness only constrains the plain spectrum; hyperbentness asks the same
//! of every decimated spectrum and is strictly rarer. This example runs the
//! census at n = 4 (896 bent functions, 56 hyperbent) and shows a witness
//! exponent for a bent function that fails.
//!
//! Run with: cargo run --example hyperbent_decimations

use gbentlab::field::FieldCtx;
use gbentlab::gbf::{Domain, Gbf};
use gbentlab::{props, search, spectral};
use std::sync::Arc;

fn main() {
    let ctx = Arc::new(FieldCtx::new(4).unwrap());
    let domain = Domain::Field(ctx.clone());
    println!("decimation exponents coprime to 15: {:?}", ctx.coprime_exponents());

    let bent = search::search_exhaustive(4, 1, &domain, 1 << 18, 4, usize::MAX, |f| {
        props::is_bent(f).unwrap().verdict
    })
    .unwrap();
    let hyper = search::search_exhaustive(4, 1, &domain, 1 << 18, 4, 4, |f| {
        props::is_hyperbent(f).unwrap().verdict
    })
    .unwrap();
    println!("census on F_16: {} bent, {} hyperbent", bent.count, hyper.count);

    // first bent function that is not hyperbent, with its witness
    for table in &bent.matches {
        let f = Gbf::new(4, 1, domain.clone(), table.clone()).unwrap();
        let report = props::is_hyperbent(&f).unwrap();
        if !report.verdict {
            let w = report.witness.unwrap();
            println!("\nbent but not hyperbent: {:?}", f.table());
            println!("witness: decimation i = {}, point u = {}", w.decimation.unwrap(), w.u);
            let s = spectral::ewht(&f, w.decimation.unwrap()).unwrap();
            println!("|H_{{f,i}}(u)|^2 there: {:?} (needs 16)", s.value(w.u).norm_sq().coords());
            break;
        }
    }

    // decimated spectra are computed through the inverse-exponent identity;
    // the literal double sum agrees
    let f = Gbf::new(4, 1, domain, hyper.matches[0].clone()).unwrap();
    let agree = ctx
        .coprime_exponents()
        .into_iter()
        .all(|i| spectral::ewht(&f, i).unwrap() == spectral::ewht_direct(&f, i).unwrap());
    println!("\newht identity vs literal double sum on a hyperbent instance: {}", agree);
}
