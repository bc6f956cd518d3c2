//! Cyclic quotient singularities and the class T family 1/(r^2 s)(1, ars - 1):
//! normalization, recognition, and the equations of the smoothing.
//!
//! Run with `cargo run --example class_t_singularities`.

use crepant::singularity::{
    class_t_decompose, normalize, qg_deformation_data, ClassTData, CyclicQuotient,
};
use crepant::Int;

fn main() -> crepant::Result<()> {
    // Any isolated cyclic quotient normalizes to the form 1/n(1, q).
    let q = CyclicQuotient::new(Int::from(8), Int::from(5), Int::from(7))?;
    println!("{} normalizes to {}", q, normalize(&q)?);

    // Recognition: which (r, a, s) present a given quotient as class T?
    for (n, w) in [(4i64, 1i64), (8, 3), (25, 4), (36, 17), (7, 3)] {
        let q = CyclicQuotient::new(Int::from(n), Int::from(1), Int::from(w))?;
        match class_t_decompose(&q) {
            Ok(matches) if matches.is_empty() => println!("{q}: not class T"),
            Ok(matches) => {
                let desc: Vec<String> = matches
                    .iter()
                    .map(|m| format!("{} [{}]", m.class_t, m.orientation))
                    .collect();
                println!("{q}: {}", desc.join(", "));
            }
            Err(e) => println!("{q}: {e}"),
        }
    }

    // A Wahl singularity is the s = 1 case; its Milnor number is zero, so the
    // smoothing carries no vanishing 2-cycles.
    let wahl = ClassTData::new(Int::from(3), Int::from(1), Int::from(1))?;
    let data = qg_deformation_data(&wahl);
    println!(
        "\n{} = {}: Milnor number {}",
        wahl,
        wahl.quotient(),
        data.milnor_number
    );
    println!("  cover:  {}", data.cover);
    println!("  versal: {}", data.versal);

    // s > 1 keeps the same r, a but multiplies the order by s.
    let t = ClassTData::new(Int::from(3), Int::from(1), Int::from(4))?;
    let data = qg_deformation_data(&t);
    println!(
        "\n{} = {}: Milnor number {}",
        t,
        t.quotient(),
        data.milnor_number
    );
    println!("  versal: {}", data.versal);
    Ok(())
}
