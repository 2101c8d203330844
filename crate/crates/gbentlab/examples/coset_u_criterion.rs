//! Functions constant on the cosets u F_{2^m}* and the character-sum
//! criterion that decides their g-hyperbentness.
//!
//! The multiplicative group of F_{2^(2m)} splits as F_{2^m}* x U with U
//! cyclic of order 2^m + 1; a function constant on the U-cosets is
//! g-hyperbent exactly when the character sum over U collapses to the value
//! at zero. Both directions are shown: an admissible sample passes, a
//! one-slot perturbation fails with a witness.
//!
//! Run with: cargo run --example coset_u_criterion

use gbentlab::construct::{construct_coset_u, sample_coset_u_values, CosetUSpec};
use gbentlab::field::FieldCtx;
use gbentlab::props;
use std::sync::Arc;

fn main() {
    let ctx = Arc::new(FieldCtx::new(4).unwrap());
    let split = ctx.coset_decompose().unwrap();
    println!(
        "F_16* = F_4* x U: |F_4*| = {}, |U| = {}",
        split.subfield_star.len(),
        split.unit_group.len()
    );

    let spec = sample_coset_u_values(2, 3, 7).unwrap();
    println!("\nU-values {:?}, f(0) = {}", spec.u_values, spec.f0);
    println!("character-sum criterion holds: {}", spec.criterion_holds());
    let outcome = construct_coset_u(&spec, &ctx).unwrap();
    let report = props::is_ghyperbent(&outcome.gbf).unwrap();
    println!("g-hyperbent: {}", report.verdict);

    // perturb one slot: the sum moves off zeta^f0 and the property breaks
    let mut bad_values = spec.u_values.clone();
    bad_values[2] = (bad_values[2] + 3) % 8;
    let bad = CosetUSpec::new(4, 3, spec.f0, bad_values).unwrap();
    println!("\nperturbed slot 2 by +3");
    println!("criterion holds: {}", bad.criterion_holds());
    let outcome = construct_coset_u(&bad, &ctx).unwrap();
    let report = props::is_ghyperbent(&outcome.gbf).unwrap();
    println!("g-hyperbent: {}", report.verdict);
    if let Some(w) = report.witness {
        println!("witness: |H_{{f,{}}}({})| != 2^(n/2)", w.decimation.unwrap(), w.u);
    }
}
