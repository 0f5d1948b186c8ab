//! Row polynomials φ_n(x) = Σ_k {n||k} x^k and their zeros.

use gbc::rowpoly::{certify_all_real, negativity_check, phi, phi_product_form};
use gbc::triangle::Params;

fn main() {
    // beta' = 0 keeps every zero real and nonpositive.
    let stirling = Params::stirling_second();
    println!("phi_n for the set-partition triangle:");
    for n in 0..=6usize {
        let p = phi(&stirling, n);
        let cert = certify_all_real(&p).unwrap();
        println!(
            "  n = {n}: {p}\n         degree {}, {} distinct real roots, all real: {}, nonpositive: {}",
            cert.degree,
            cert.distinct_real_roots,
            cert.all_real,
            negativity_check(&p).unwrap()
        );
    }

    // Nonnegative parameters alone are not enough once beta' > 0.
    let params = Params::from_ints([3, 1, 1, 0, 1, 0]);
    let p = phi(&params, 3);
    let cert = certify_all_real(&p).unwrap();
    println!("\n(3,1,1,0,1,0), n = 3: {p}");
    println!("{}", cert.to_json());

    // With beta = beta' = 0 the recurrence telescopes to a product of
    // linear factors, so reality is immediate.
    let linear = Params::from_ints([2, 0, 1, 1, 0, 3]);
    let n = 5;
    let by_product = phi_product_form(&linear, n).unwrap();
    assert_eq!(by_product, phi(&linear, n));
    println!("\n(2,0,1,1,0,3), n = {n}, as a product of linears: {by_product}");
}
