//! Build the almost revlex ideal for a complete intersection degree list.
//!
//! cargo run --example construct -- 3,4,4

use arlex::construct::almost_revlex_ci;
use arlex::hilbert::{ci_hilbert, hf_of_ideal};

fn main() -> arlex::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,4,4".into());
    let degrees = arlex::cli::parse_degrees(&arg)?;
    let n = degrees.len();
    let j = almost_revlex_ci(n, &degrees)?;
    println!("J = {j}");
    println!(
        "{} minimal generators, colength {}",
        j.num_generators(),
        j.colength()?
    );
    for g in j.generators() {
        println!("  deg {:>2}  {g}", g.degree());
    }
    let top = degrees.iter().map(|&d| d as usize).sum::<usize>() - n + 1;
    let expected = ci_hilbert(&degrees, n, top)?.prefix(top)?;
    let actual = hf_of_ideal(&j, top)?.prefix(top)?;
    println!(
        "Hilbert function {actual:?}, matches the complete intersection: {}",
        actual == expected
    );
    println!(
        "almost revlex: {}, strongly stable: {}",
        j.is_almost_revlex(),
        j.is_strongly_stable()
    );
    Ok(())
}
