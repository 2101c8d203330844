//! Exact generalized Walsh-Hadamard spectra on both domain flavors.
//!
//! Builds a quaternary function on 2 bits, prints its spectrum as exact
//! cyclotomic integers next to a float rendering, and shows that the direct
//! and fast transform paths agree coordinate for coordinate.
//!
//! Run with: cargo run --example spectrum_basics

use gbentlab::field::FieldCtx;
use gbentlab::gbf::{Domain, Gbf};
use gbentlab::spectral;

fn main() {
    // f = 2 x1 x2: values in Z_4, the generalized cousin of the bent x1 x2
    let f = Gbf::new(2, 2, Domain::Vector, vec![0, 0, 0, 2]).unwrap();
    let spectrum = spectral::gwht_direct(&f);

    println!("f = 2 x1 x2 on V_2, values {:?}", f.table());
    println!("{:>4}  {:<14}  approx", "u", "coords");
    for (u, value) in spectrum.values().iter().enumerate() {
        let (re, im) = value.to_complex();
        println!("{:>4}  {:<14}  ({:+.3}, {:+.3})", u, format!("{:?}", value.coords()), re, im);
    }
    println!("Parseval (sum of |H(u)|^2 = 2^(2n)): {}", spectrum.parseval_ok());

    // the two permanent paths agree exactly on every input
    println!("\nfast component path == direct path: {}", spectral::paths_agree(&f));

    // same machinery on a field domain, where <u, x> = Tr(ux)
    let ctx = FieldCtx::new(3).unwrap();
    println!("\nF_8 with modulus {} and generator {}", ctx.poly_hex(), ctx.generator());
    let g = Gbf::new(3, 3, Domain::field(ctx), vec![0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
    let s = spectral::gwht_fast_components(&g);
    println!("octal staircase on F_8, |H(u)|^2 per point:");
    for (u, value) in s.values().iter().enumerate() {
        let norm = value.norm_sq();
        println!("  u = {}: norm_sq coords {:?}", u, norm.coords());
    }
}
