//! Counting perfect matchings of bipartite graphs exactly, with ceilings
//! from row sums alone.
//!
//! ```bash
//! cargo run -p entrocount --example matching_census
//! ```

use entrocount::{
    alpha_bound, bregman_bound, expand_minor, permanent_bruteforce, permanent_ryser,
    AlphaParameter, BinaryMatrix,
};

fn main() -> entrocount::Result<()> {
    // A 2n-cycle as a bipartite graph: every left vertex sees two rights.
    let n = 8;
    let mut edges = Vec::new();
    for v in 1..=n {
        edges.push((v, v));
        edges.push((v, if v == n { 1 } else { v + 1 }));
    }
    let cycle = BinaryMatrix::from_bipartite_graph(&edges, n)?;
    println!("{}-cycle biadjacency:\n{}", 2 * n, cycle.to_text());

    // Three routes to the same count.
    let ryser = permanent_ryser(&cycle)?;
    let brute = permanent_bruteforce(&cycle)?;
    let expanded = expand_minor(&cycle, 0)?;
    assert_eq!(ryser, brute);
    assert_eq!(ryser, expanded);
    println!(
        "perfect matchings: {ryser} (inclusion-exclusion, enumeration, and minor expansion agree)"
    );

    println!("bregman ceiling:   {:.4}", bregman_bound(cycle.row_sums())?);
    for order in [2.0, 4.0] {
        let report = alpha_bound(&cycle, AlphaParameter::new(order)?);
        println!(
            "order-{order} ceiling:   {:.4} (integer {})",
            report.ceiling,
            report.integer_ceiling.map_or("-".into(), |c| c.to_string())
        );
    }

    // A denser graph: complete bipartite K_{6,6} has 6! matchings, and the
    // Bregman-Minc bound is tight on it.
    let mut edges = Vec::new();
    for l in 1..=6 {
        for r in 1..=6 {
            edges.push((l, r));
        }
    }
    let complete = BinaryMatrix::from_bipartite_graph(&edges, 6)?;
    let per = permanent_ryser(&complete)?;
    println!(
        "\nK_{{6,6}}: matchings {per}, bregman {:.4} (tight)",
        bregman_bound(complete.row_sums())?
    );
    Ok(())
}
