//! Zariski tangent space dimension at an almost revlex ideal, with the
//! cheap bounds and a cross-check against the full symbolic reduction.
//!
//! cargo run --release --example tangent -- 3,3,3

use arlex::construct::almost_revlex_ci;
use arlex::tangent::oracle::{audit, DEFAULT_STEP_CAP};
use arlex::tangent::TangentSystem;

fn main() -> arlex::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,2,2".into());
    let degrees = arlex::cli::parse_degrees(&arg)?;
    let j = almost_revlex_ci(degrees.len(), &degrees)?;
    let sys = TangentSystem::build(&j)?;
    let report = sys.report()?;
    println!("J = {j}");
    println!("{report}");
    println!(
        "columns of generators not divisible by x_n vanish: {}",
        sys.border_columns_vanish()
    );
    if j.colength()? <= 30 {
        println!(
            "full reduction gives the same row space: {}",
            audit(&j, DEFAULT_STEP_CAP)?
        );
    }
    if report.tangent_dim > report.lex_dim {
        println!("tangent space exceeds the lex component dimension: singular point");
    }
    Ok(())
}
