//! Count minimal generators three ways: by construction, by the sum of
//! derivative values at the c_s, and degree by degree.
//!
//! cargo run --example generator_counts

use arlex::construct::{almost_revlex_ci, mingen_count_ci, mingen_count_formula};
use arlex::hilbert::ci_hilbert;

fn main() -> arlex::Result<()> {
    let lists: [&[u32]; 6] = [
        &[2, 2, 2],
        &[2, 2, 2, 2],
        &[2, 2, 2, 2, 2],
        &[3, 4, 4],
        &[5, 5, 5],
        &[4, 5, 7, 8],
    ];
    println!(
        "{:<14} {:>6} {:>8} {:>10}",
        "degrees", "direct", "formula", "per-degree"
    );
    for d in lists {
        let n = d.len();
        let direct = almost_revlex_ci(n, d)?.num_generators();
        let formula = mingen_count_formula(&ci_hilbert(d, n, 0)?, 0, n)?;
        let per_degree = mingen_count_ci(d)?;
        println!(
            "{:<14} {direct:>6} {formula:>8} {per_degree:>10}",
            format!("{d:?}")
        );
    }
    Ok(())
}
