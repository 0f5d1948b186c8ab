//! The four classical specializations of the six-parameter triangle.

use gbc::triangle::{compute_table, Params};

fn show(name: &str, params: &Params, max_n: usize) {
    let table = compute_table(params, max_n);
    println!("{name}");
    for n in 0..=max_n {
        let row: Vec<String> = table
            .row(n)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("  {}", row.join(" "));
    }
    let sums: Vec<String> = (0..=max_n)
        .map(|n| table.row_sum(n).unwrap().to_string())
        .collect();
    println!("  row sums: {}\n", sums.join(", "));
}

fn main() {
    show("binomial (0,0,1,0,0,1)", &Params::binomial(), 6);
    show("Stirling, first kind (1,0,0,0,0,1)", &Params::stirling_first(), 6);
    show("Stirling, second kind (0,1,0,0,0,1)", &Params::stirling_second(), 6);
    show("Eulerian (0,1,1,1,-1,1)", &Params::eulerian(), 6);

    // Nothing requires integer parameters; half-integer tuples work the same.
    show("a rational tuple (1/2,0,1,0,0,3/2)", &Params::new(
        gbc::numeric::rational(1, 2),
        gbc::numeric::integer(0),
        gbc::numeric::integer(1),
        gbc::numeric::integer(0),
        gbc::numeric::integer(0),
        gbc::numeric::rational(3, 2),
    ), 4);
}
