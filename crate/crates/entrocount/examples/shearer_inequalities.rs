//! Shearer-type inequalities as executable checks.
//!
//! ```bash
//! cargo run -p entrocount --example shearer_inequalities
//! ```

use entrocount::{
    check_conditioning_monotonicity, check_merge_bound, check_shearer, check_subadditivity,
    check_trace_corollary, AlphaParameter, ConditionalForm, CoverFamily, JointTable, SetFamily,
};

fn main() -> entrocount::Result<()> {
    let two = AlphaParameter::new(2.0)?;

    // Three bits where the third is the XOR of the first two: any two
    // coordinates determine the table, and the cover by 2-element groups
    // covers every coordinate twice.
    let mut probs = vec![0.0; 8];
    for x in 0..2usize {
        for y in 0..2usize {
            probs[4 * x + 2 * y + (x ^ y)] = 0.25;
        }
    }
    let xor = JointTable::new(vec![2, 2, 2], probs)?;
    let pairs = CoverFamily::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]])?;
    println!("xor table, cover by coordinate pairs (k = {}):", pairs.k());

    let sub = check_subadditivity(&xor, two)?;
    println!(
        "  subadditivity:  {:.4} <= {:.4}  (holds: {})",
        sub.lhs, sub.rhs, sub.holds
    );
    let sh = check_shearer(&xor, &pairs, two)?;
    println!(
        "  shearer:        {:.4} <= {:.4}  (holds: {}, slack {:.4})",
        sh.lhs,
        sh.rhs,
        sh.holds,
        sh.slack()
    );

    // Conditioning on more coordinates only lowers the entropy.
    for form in [ConditionalForm::Daroczy, ConditionalForm::Weighted] {
        let monotone = check_conditioning_monotonicity(&xor, 0, &[1, 2], two, form)?;
        println!("  conditioning monotone ({form}): {monotone}");
    }

    // Merge bound: grouping the conditioning values caps the conditional
    // entropy by block probabilities and support sizes.
    let table = JointTable::new(
        vec![3, 3],
        vec![
            0.5, 0.0, 0.0, //
            0.0, 0.125, 0.125, //
            0.0, 0.125, 0.125,
        ],
    )?;
    let merge = check_merge_bound(
        &table,
        0,
        1,
        &[vec![0], vec![1, 2]],
        AlphaParameter::new(1.0)?,
        ConditionalForm::Weighted,
    )?;
    println!(
        "merge bound (two blocks, supports of sizes 1 and 2): {:.6} <= {:.6}",
        merge.lhs, merge.rhs
    );

    // The counting corollary on set families: traces on groups control the
    // family size.
    let family = SetFamily::power_set(4)?;
    let groups = SetFamily::from_elements(4, &[vec![1, 2], vec![3, 4], vec![1, 3], vec![2, 4]])?;
    let trace = check_trace_corollary(&family, &groups, two)?;
    println!(
        "trace corollary on the 4-element power set: {:.4} <= {:.4} (holds: {})",
        trace.lhs, trace.rhs, trace.holds
    );
    Ok(())
}
