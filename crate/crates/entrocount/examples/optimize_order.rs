//! Minimizing the permanent ceiling over the order parameter.
//!
//! Different matrices are tightest at different orders: the all-ones matrix
//! is already exact at order 1 (the Bregman-Minc bound is tight there),
//! while sparse, lopsided matrices profit from orders far from 1.
//!
//! ```bash
//! cargo run -p entrocount --example optimize_order
//! ```

use entrocount::{optimize_alpha_default, permanent_ryser, BinaryMatrix};

fn main() -> entrocount::Result<()> {
    let dense = BinaryMatrix::ones(5)?;
    let star = {
        let mut rows = vec![(1u64 << 12) - 1];
        rows.extend((1..12).map(|i| 1u64 << i));
        BinaryMatrix::new(12, rows)?
    };
    let banded = BinaryMatrix::from_text("110000\n111000\n011100\n001110\n000111\n000011\n")?;

    for (name, m) in [
        ("all-ones 5x5", dense),
        ("star 12x12", star),
        ("banded 6x6", banded),
    ] {
        let per = permanent_ryser(&m)?;
        let opt = optimize_alpha_default(&m)?;
        println!("{name}: permanent {per}");
        println!(
            "  best ceiling {:.6} at order {:.6} ({} evaluations)",
            opt.best_ceiling,
            opt.best_alpha,
            opt.trace.len()
        );

        // A few points of the trace, sorted by order.
        let mut probes: Vec<(f64, f64)> = opt
            .trace
            .iter()
            .copied()
            .filter(|&(a, _)| {
                [0.25, 0.5, 1.0, 2.0, 4.0, 8.0]
                    .iter()
                    .any(|g| (a - g).abs() < 1e-9)
            })
            .collect();
        probes.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("finite orders"));
        for (a, c) in probes {
            let c = if c.is_finite() {
                format!("{c:.6}")
            } else {
                "unbounded".into()
            };
            println!("    order {a:<6.3} ceiling {c}");
        }
    }
    Ok(())
}
