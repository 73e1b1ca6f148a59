//! Hilbert functions of complete intersections, their derivatives and the
//! indices c_s, for every intermediate ring of a degree list.
//!
//! cargo run --example hilbert_tables -- 4,5,7,8

use arlex::hilbert::{c_index, ci_hilbert, derivative, CIProfile};

fn main() -> arlex::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "4,5,7,8".into());
    let degrees = arlex::cli::parse_degrees(&arg)?;
    let n = degrees.len();
    let profile = CIProfile::new(&degrees)?;
    for i in 1..=n {
        let h = ci_hilbert(&degrees, i, 0)?;
        println!(
            "H^[{i}]  m = {:>3}  u_bar = {:>3}  {:?}",
            profile.m(i),
            profile.u_bar(i),
            h.values()
        );
    }
    let h = ci_hilbert(&degrees, n, 0)?;
    for s in 1..=n {
        let d = derivative(&h, s);
        println!("D^{s} H^[{n}] = {:?}", d.values());
    }
    let c: Vec<usize> = (0..=n)
        .map(|s| c_index(&h, s, 0))
        .collect::<arlex::Result<_>>()?;
    println!("c_s for s = 0..={n}: {c:?}");
    Ok(())
}
