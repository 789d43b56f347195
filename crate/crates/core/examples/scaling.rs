//! Prints decoder timings across `n = 2^10 .. 2^20` for every family and class.

use syncode::bench::{self, Family};

fn main() {
    let ns: Vec<usize> = (10..=20).map(|e| 1usize << e).collect();
    for family in [Family::Monotone, Family::Azinv] {
        for class in family.classes() {
            let points = bench::measure(family, &ns, class, 31, 2024).unwrap();
            for p in &points {
                println!("{class} n={:>8} median_ns={:>10} ns/sym={:.3}", p.n, p.median_ns, p.ns_per_symbol);
            }
            println!("{class} slope={:.3}", bench::loglog_slope(&points).unwrap());
        }
    }
}
