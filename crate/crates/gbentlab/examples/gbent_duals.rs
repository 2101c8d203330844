//! Generalized bent functions and their duals.
//!
//! Assembles a gbent function in GB_4^4 from a pair of bent functions,
//! verifies gbentness exactly, extracts the dual from the spectrum and
//! checks the involution f** = f.
//!
//! Run with: cargo run --example gbent_duals

use gbentlab::gbf::{Domain, Gbf};
use gbentlab::props;

fn main() {
    // two bent functions on 4 bits
    let p: Vec<u16> = (0..16u32).map(|x| (((x & 1) & (x >> 1)) ^ ((x >> 2) & (x >> 3)) & 1) as u16).collect();
    let q: Vec<u16> = (0..16u32).map(|x| ((((x & 1) ^ ((x >> 2) & 1)) & (x >> 1)) ^ ((x >> 2) & (x >> 3)) & 1) as u16).collect();
    let p = Gbf::new(4, 1, Domain::Vector, p).unwrap();
    let q = Gbf::new(4, 1, Domain::Vector, q).unwrap();
    println!("p bent: {}", props::is_bent(&p).unwrap().verdict);
    println!("q bent: {}", props::is_bent(&q).unwrap().verdict);

    // f = (p xor q) + 2p is gbent in GB_4^4: its components p and p xor (p
    // xor q) = q are exactly the bent pair
    let a1 = p.plus_scaled_mod(&q, 1).unwrap();
    let f = Gbf::join_low_high(&a1, &p).unwrap();
    let report = props::is_gbent(&f);
    println!("\nf = (p xor q) + 2p gbent: {}", report.verdict);

    let dual = props::dual(&f).unwrap();
    println!("dual table: {:?}", dual.table());
    println!("dual is gbent: {}", props::is_gbent(&dual).verdict);
    println!("dual of dual equals f: {}", props::dual(&dual).unwrap() == f);

    // the exceptional case: gbent with odd n at level 4 has no dual, its
    // spectrum sits in the quadrants 2^((n-1)/2) (+-1 +-i) instead
    let outcome = gbentlab::search::search_exhaustive(3, 2, &Domain::Vector, 1 << 17, 4, 1, |f| {
        props::is_gbent(f).verdict
    })
    .unwrap();
    println!("\ngbent functions in GB_3^4: {} of {} tables", outcome.count, outcome.scanned);
    let odd = Gbf::new(3, 2, Domain::Vector, outcome.matches[0].clone()).unwrap();
    match props::dual(&odd) {
        Err(e) => println!("first of them, {:?}: {}", odd.table(), e),
        Ok(_) => println!("odd n, k = 2 unexpectedly regular"),
    }
}
