//! Row sums ρ(n) = Σ_k {n||k}: exact values and the truncated series.

use gbc::row_sum_series;
use gbc::triangle::{compute_table, Params};

fn main() {
    println!("exact row sums of the classical triangles, n = 0..8:");
    for (name, params) in [
        ("binomial  ", Params::binomial()),
        ("stirling 1", Params::stirling_first()),
        ("stirling 2", Params::stirling_second()),
    ] {
        let table = compute_table(&params, 8);
        let sums: Vec<String> = (0..=8)
            .map(|n| table.row_sum(n).unwrap().to_string())
            .collect();
        println!("  {name}: {}", sums.join(", "));
    }

    // For positive parameters with alpha' = 0 the sums also come out of a
    // series whose terms are exact rationals; only one constant power is
    // evaluated approximately. 40 terms already pin these values down far
    // below the printed precision.
    let params = Params::from_ints([1, 2, 1, 0, 1, 2]);
    println!("\n(1,2,1,0,1,2): series at 128 bits vs the recurrence:");
    let table = compute_table(&params, 6);
    for n in 0..=6usize {
        let series = row_sum_series(&params, n, 40, 128).unwrap();
        println!(
            "  n = {n}: {}  (exact {})",
            series.value.decimal_string(12),
            table.row_sum(n).unwrap()
        );
    }
}
