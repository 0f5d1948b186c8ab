//! The Q_k family: probability that more than k record draws remain.

use gbc::numeric::rational;
use gbc::poly::Poly;
use gbc::qk::{density, gosper_certificate_check, qk_form1, qk_form2, qk_form3, qk_recurrence,
    QkSpec};

fn main() {
    println!("Q_k for n = 5, by the recurrence (the three closed forms agree):");
    for k in 0..=5usize {
        let spec = QkSpec { n: 5, k };
        let q = qk_recurrence(spec);
        assert_eq!(q, qk_form1(spec));
        assert_eq!(q, qk_form2(spec));
        assert_eq!(q, qk_form3(spec));
        println!("  Q_{k} = {q}");
    }

    // Q_k is a survival function: its increments are the densities, so
    // summing densities from k recovers Q_k.
    let (n, k) = (7usize, 2usize);
    let mut sum = Poly::zero();
    for m in k..n {
        sum = &sum + &density(m, k).unwrap();
    }
    assert_eq!(sum, qk_form3(QkSpec { n, k }));
    println!("\nsum of densities m = {k}..{} equals Q_{k} for n = {n}: {sum}", n - 1);

    let x = rational(1, 3);
    println!("value at x = 1/3: {}", sum.eval(&x));

    // The density identity reduces to a telescoping sum; the certificate
    // below verifies the telescoped form term by term.
    for (k, r) in [(0, 1), (2, 3), (4, 7)] {
        assert!(gosper_certificate_check(k, r, 12).unwrap());
        println!("telescoping certificate holds at k = {k}, r = {r}");
    }
}
