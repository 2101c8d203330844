//! The partial-spread family f(y' + wy) = g(y'/y) on F_{2^(2m)}.
//!
//! Samples an admissible ingredient table (vanishing character sum, g(0) =
//! 0), builds the function, and verifies the guarantees mechanically:
//! g-hyperbent over every coprime decimation, with the dual given by the
//! inverted ratio read through the trace-dual coordinates.
//!
//! Run with: cargo run --example ps_ap_family

use gbentlab::construct::{construct_ps_ap, ps_ap_expected_dual, sample_ps_ap_g, PsApSpec};
use gbentlab::field::FieldCtx;
use gbentlab::props;
use std::sync::Arc;

fn main() {
    let m = 2;
    let k = 3;
    let ctx = Arc::new(FieldCtx::new(2 * m).unwrap());

    let g_table = sample_ps_ap_g(m, k, 42);
    println!("ingredient g: F_4 -> Z_8, table {:?}", g_table);
    let spec = PsApSpec::new(m, k, g_table).unwrap();
    println!("character sum vanishes: {}", spec.character_sum().is_zero());

    let f = construct_ps_ap(&spec, &ctx).unwrap();
    println!("\nconstructed f on F_16, table {:?}", f.table());

    let report = props::is_ghyperbent(&f).unwrap();
    println!("g-hyperbent over all {} coprime decimations: {}",
        ctx.coprime_exponents().len(), report.verdict);

    let dual = props::dual(&f).unwrap();
    let expected = ps_ap_expected_dual(&spec, &ctx).unwrap();
    println!("dual matches the inverted-ratio formula pointwise: {}", dual == expected);

    // an inadmissible table is rejected with a diagnostic naming the failure
    let bad = PsApSpec::new(m, 1, vec![0, 1, 1, 1]);
    println!("\ninadmissible ingredient: {}", bad.unwrap_err());
}
