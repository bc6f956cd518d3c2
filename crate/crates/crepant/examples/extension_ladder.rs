//! Degree matrix, extension ladder, splitting types, and the descent identity
//! for the module ranks attached to a continued fraction expansion.
//!
//! Run with `cargo run --example extension_ladder`.

use crepant::cfrac::hj_expand;
use crepant::ncdef::{
    deg_matrix, extension_ladder, splitting_type, verify_descent, versal_rank,
};
use crepant::singularity::CyclicQuotient;
use crepant::Int;

fn main() -> crepant::Result<()> {
    let e = hj_expand(Int::from(9), Int::from(2))?;
    let d = e.terms();

    // Degree matrix: d_jj = c_j - 1 on the last row, subdiagonal -1,
    // first row c_1 - 2 except the final column.
    let m = deg_matrix(d);
    println!("degree matrix for [5, 2]:");
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        println!("  [{}]", cells.join(","));
    }

    // The ladder: ranks e_i (prefix continuants), ext dimensions, and the
    // multiplicities n_i that weight each rung.
    let ladder = extension_ladder(d);
    println!(
        "\nranks e_i = {:?}",
        ladder.ranks().values().iter().map(|x| x.to_string()).collect::<Vec<_>>()
    );
    println!(
        "ext dims  = {:?}",
        ladder.ext_dims().iter().map(|x| x.to_string()).collect::<Vec<_>>()
    );
    println!(
        "mults n_i = {:?}",
        ladder.multiplicities().iter().map(|x| x.to_string()).collect::<Vec<_>>()
    );
    println!("total rank sum(n_i * e_i) = {}", ladder.total_rank());

    // How the j-th bundle splits into line bundles O(deg) when restricted to
    // the i-th exceptional curve; j <= i restricts trivially.
    for (i, j) in [(0usize, 1usize), (1, 2), (2, 1)] {
        let parts = splitting_type(d, i, j)?;
        let desc: Vec<String> = parts
            .iter()
            .map(|(deg, mult)| format!("O({deg})^{mult}"))
            .collect();
        println!("splitting (i = {i}, j = {j}): {}", desc.join(" + "));
    }

    // Descent: every column of the weighted degree matrix sums to zero and the
    // multiplicities sum to r.
    let report = verify_descent(d)?;
    println!(
        "\ncolumn sums = {:?}, total rank = {}",
        report.column_sums.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        report.total_rank
    );

    // versal_rank works uniformly over anything with a group order.
    let q = CyclicQuotient::new(Int::from(9), Int::from(1), Int::from(2))?;
    println!("versal rank of {} = {}", q, versal_rank(&q));
    Ok(())
}
