//! One-parameter ceilings on the permanent, against the exact value.
//!
//! The running example is the identity matrix with its first row filled
//! with ones: its permanent is exactly 1, yet bounds built from row sums
//! cannot see that, and the order parameter controls how far off they are.
//!
//! ```bash
//! cargo run -p entrocount --example permanent_bounds
//! ```

use entrocount::{alpha_bound, bregman_bound, permanent_ryser, AlphaParameter, BinaryMatrix};

fn first_row_ones(n: usize) -> BinaryMatrix {
    let full = (1u64 << n) - 1;
    let mut rows = vec![full];
    rows.extend((1..n).map(|i| 1u64 << i));
    BinaryMatrix::new(n, rows).expect("valid rows")
}

fn main() -> entrocount::Result<()> {
    let n = 20;
    let m = first_row_ones(n);
    let per = permanent_ryser(&m)?;
    let bregman = bregman_bound(m.row_sums())?;
    println!("matrix: identity with first row all ones, n = {n}");
    println!("exact permanent: {per}");
    println!("bregman-minc:    {bregman:.6}   (that is (n!)^(1/n))");

    println!("\nceilings across orders:");
    for order in [0.5, 0.9, 1.0, 1.5, 2.0, 4.0, 8.0] {
        let report = alpha_bound(&m, AlphaParameter::new(order)?);
        let ceiling = if report.vacuous {
            "unbounded".to_string()
        } else {
            format!("{:.6}", report.ceiling)
        };
        println!(
            "  order {order:<4} rhs {:.6}  ceiling {ceiling}",
            report.rhs_entropy_space
        );
    }

    // At order 2 the ceiling is exactly n / H_n with H_n the harmonic number.
    let h_n: f64 = (1..=n).map(|j| 1.0 / j as f64).sum();
    let at_two = alpha_bound(&m, AlphaParameter::new(2.0)?);
    println!(
        "\norder 2 closed form: n/H_n = {:.6} (ceiling {:.6})",
        n as f64 / h_n,
        at_two.ceiling
    );

    // Integer ceilings: the permanent is an integer, so floors are reported.
    println!(
        "integer ceiling at order 2: {:?} (true permanent {per})",
        at_two.integer_ceiling
    );
    Ok(())
}
