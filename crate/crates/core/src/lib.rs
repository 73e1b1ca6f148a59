pub mod cli;
pub mod construct;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod tangent;
pub mod term;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use term::{cmp_degrevlex, enumerate_terms, Term};
