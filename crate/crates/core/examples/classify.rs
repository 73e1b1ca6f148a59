//! Run the singularity cascade over a few degree lists and print the
//! certificate that decided each one.
//!
//! cargo run --release --example classify

use arlex::tangent::classify_ci;

fn main() -> arlex::Result<()> {
    let lists: [&[u32]; 8] = [
        &[2, 2, 2],
        &[3, 3, 3],
        &[4, 4, 4],
        &[5, 5, 5],
        &[2, 2, 2, 2],
        &[2, 2, 2, 2, 2],
        &[8, 8, 8, 8],
        &[5, 5, 5, 5, 5],
    ];
    for d in lists {
        let quick = classify_ci(d, false)?;
        println!("{:<16} {quick}", format!("{d:?}"));
        if !quick.is_singular() {
            let exact = classify_ci(d, true)?;
            println!("{:<16} {exact}", "  with exact");
            println!("{:<16} {}", "", exact.to_json());
        }
    }
    Ok(())
}
