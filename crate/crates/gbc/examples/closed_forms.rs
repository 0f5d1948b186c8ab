//! Closed forms for the α′ = 0 case, cross-checked against the recurrence.

use gbc::numeric::integer;
use gbc::triangle::{entry, Params};
use gbc::{expanded_coefficient, gbc_factored, gbc_hyper};
use num_traits::Zero;

fn main() {
    // (2, 1, 1, 0, 3, 2): alpha' = 0, everything else in play.
    let params = Params::from_ints([2, 1, 1, 0, 3, 2]);

    println!("factored form vs recurrence, n = 6:");
    for k in 0..=6i64 {
        let v = gbc_factored(&params, 6, k).unwrap();
        let r = entry(&params, 6, k);
        println!(
            "  k = {k}: {} * {} = {}  (recurrence {})",
            v.first_factor, v.second_factor, v.product, r
        );
        assert_eq!(v.product, r);
    }

    println!("\nhypergeometric-style sum at the same points:");
    for k in 0..=6usize {
        let v = gbc_hyper(&params, 6, k).unwrap();
        println!("  k = {k}: {v}");
        assert_eq!(v, entry(&params, 6, k as i64));
    }

    // {4||2} split into the 18 individual monomial contributions.
    println!("\nmonomial contributions to {{4||2}}:");
    let mut total = integer(0);
    for i1 in 0..=2usize {
        for i2 in 0..=(2 - i1) {
            let i3 = 2 - i1 - i2;
            for j1 in 0..=2usize {
                let j2 = 2 - j1;
                let c = expanded_coefficient(&params, 4, 2, i1, i2, i3, j1, j2).unwrap();
                if !c.is_zero() {
                    println!(
                        "  alpha^{i1} beta^{i2} gamma^{i3} beta'^{j1} gamma'^{j2}: {c}"
                    );
                }
                total += c;
            }
        }
    }
    println!("  total: {total}");
    assert_eq!(total, entry(&params, 4, 2));
}
