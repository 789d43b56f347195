//! Prints the codebook of an azinv code: `cargo run --example codebook -- 5 5 0`.

use syncode::{oracle, AzinvParams};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse().expect("integer argument")).collect();
    let [n, m, a] = args[..] else {
        eprintln!("usage: codebook <n> <m> <a>");
        std::process::exit(2);
    };
    let params = AzinvParams::new(n as usize, m as u64, a).expect("valid parameters");
    let book = oracle::enumerate(&params.into()).expect("within guard");
    for x in book.words() {
        println!("{x}");
    }
    println!("# count={}", book.len());
}
