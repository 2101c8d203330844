//! Throughput of the transform paths, with the agreement check that doubles
//! as a correctness gate (the `bench` subcommand exits nonzero on any
//! disagreement).
//!
//! Run with: cargo run --release --example transform_bench

use gbentlab::gbf::{random_gbf, Domain};
use gbentlab::rng::SplitMix64;
use gbentlab::spectral;
use std::time::Instant;

fn main() {
    let mut rng = SplitMix64::new(2024);

    println!("{:>3} {:>2} {:>16} {:>16}", "n", "k", "fast (ms)", "direct (ms)");
    for (n, k) in [(8u32, 2u32), (10, 3), (12, 3), (12, 4)] {
        let f = random_gbf(n, k, Domain::Vector, &mut rng);
        let start = Instant::now();
        let fast = spectral::gwht_fast_components(&f);
        let fast_ms = start.elapsed().as_secs_f64() * 1e3;
        let start = Instant::now();
        let direct = spectral::gwht_direct(&f);
        let direct_ms = start.elapsed().as_secs_f64() * 1e3;
        assert_eq!(fast, direct, "path disagreement is a bug alarm");
        println!("{:>3} {:>2} {:>16.2} {:>16.2}", n, k, fast_ms, direct_ms);
    }

    // the butterfly alone at n = 20
    let f = random_gbf(20, 1, Domain::Vector, &mut rng);
    let start = Instant::now();
    let s = spectral::wht_fast(&f).unwrap();
    println!(
        "\nBoolean butterfly at n = 20: {:.1} ms (Parseval {})",
        start.elapsed().as_secs_f64() * 1e3,
        s.parseval_ok()
    );

    // worker budgets change timing, never values
    let f = random_gbf(14, 4, Domain::Vector, &mut rng);
    let one = spectral::gwht_fast_components_threaded(&f, 1);
    for threads in [2usize, 4, 8] {
        let start = Instant::now();
        let many = spectral::gwht_fast_components_threaded(&f, threads);
        assert_eq!(one, many);
        println!(
            "components at (14, 4) with {} workers: {:.1} ms, identical output",
            threads,
            start.elapsed().as_secs_f64() * 1e3
        );
    }
}
