//! Cardinality bounds for set families with constrained intersections.
//!
//! ```bash
//! cargo run -p entrocount --example set_families
//! ```

use entrocount::{
    check_cardinality_bound, check_distinct_pairwise_intersections,
    check_intersection_family_bound, fraction_vector, implicit_family_size_ceiling,
    verify_lemma_concavity, AlphaParameter, SetFamily,
};

fn main() -> entrocount::Result<()> {
    // The triangle family: 2-subsets of {1,2,3} with all pairwise
    // intersections distinct and every element in 2/3 of the sets.
    let triangle = SetFamily::from_elements(3, &[vec![1, 2], vec![1, 3], vec![2, 3]])?;
    println!(
        "triangle family: m = {}, distinct pair intersections: {}",
        triangle.m(),
        check_distinct_pairwise_intersections(&triangle)?
    );
    let fractions = fraction_vector(&triangle)?;
    println!("element fractions: {:?}", fractions.fractions());

    for order in [1.0, 1.5, 2.0, 3.0] {
        let a = AlphaParameter::new(order)?;
        let card = check_cardinality_bound(&triangle, a)?;
        println!(
            "  order {order}: ln_a(m) = {:.4} <= sum h_a(q_j) = {:.4}",
            card.lhs, card.rhs
        );
    }

    // The k-uniform intersection bound, valid for orders in [1, 3.67] when
    // every element fraction stays below 1/sqrt(2).
    let a = AlphaParameter::new(1.0)?;
    let bound = check_intersection_family_bound(&triangle, 2, a)?;
    println!(
        "intersection bound at order 1: ln C(m,2) = {:.4} <= {:.4} (lambda = {:.4})",
        bound.lhs, bound.rhs, bound.lambda
    );

    // The bound rests on concavity of h_a(l^2)/l; scan it on a fine grid.
    for order in [1.0, 2.0, 3.67] {
        let out = verify_lemma_concavity(AlphaParameter::new(order)?, 1e-3)?;
        println!(
            "concavity at order {order}: passed = {} on (0, {:.4}] (worst gap {:.2e})",
            out.passed, out.lambda_max, out.worst_violation
        );
    }

    // Exploratory: for a prescribed mean fraction, how large can a family
    // satisfying the preconditions possibly be, and at which order is the
    // implied ceiling smallest?
    println!("implicit family-size ceilings at lambda = 0.5, k = 3:");
    for order in [1.0, 1.2, 1.5, 2.0, 3.0] {
        match implicit_family_size_ceiling(3, 0.5, AlphaParameter::new(order)?)? {
            Some(m) => println!("  order {order}: m <= {m}"),
            None => println!("  order {order}: no finite ceiling"),
        }
    }
    Ok(())
}
