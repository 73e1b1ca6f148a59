//! The greedy builder on an arbitrary Artinian Hilbert function: success on a
//! complete intersection function, failure where the sous-escalier cannot
//! expand enough.
//!
//! cargo run --example greedy_failure

use arlex::construct::almost_revlex_for;
use arlex::hilbert::HilbertFunction;

fn main() -> arlex::Result<()> {
    for values in [
        vec![1, 3, 6, 7, 6, 3, 1],
        vec![1, 3, 4, 2, 1],
        vec![1, 13, 12, 13, 1],
        vec![1, 2, 4],
    ] {
        let h = HilbertFunction::artinian(values.clone())?;
        match almost_revlex_for(&h) {
            Ok(j) => println!("{values:?}: {j}"),
            Err(e) => println!("{values:?}: {e}"),
        }
    }
    Ok(())
}
