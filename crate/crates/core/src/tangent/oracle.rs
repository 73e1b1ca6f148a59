//! Untruncated reduction of `x_j f_γ` with polynomial coefficients in the
//! parameters. This is slow and only meant for small ideals: it cross-checks
//! the closed-form linearization in [`TangentSystem`].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{sous_escalier_all, TangentSystem};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{sparse_rank, SparseRow};
use crate::term::Term;

/// A monomial in the parameters: sorted column indices with repetition.
type CMono = Vec<usize>;
/// A polynomial in the parameters.
type CPoly = BTreeMap<CMono, BigInt>;

/// Reduction steps allowed per polynomial before giving up.
pub const DEFAULT_STEP_CAP: usize = 200_000;

fn add_scaled(target: &mut CPoly, src: &CPoly, col: usize, sign: i64) {
    for (mono, v) in src {
        let mut m = mono.clone();
        let pos = m.partition_point(|&c| c <= col);
        m.insert(pos, col);
        *target.entry(m).or_insert_with(BigInt::zero) += v * sign;
    }
    target.retain(|_, v| !v.is_zero());
}

/// Remainder of `x_var f_γ` on `N(J)`, exact in the parameters.
///
/// Columns follow the [`TangentSystem`] numbering. Terms of `J` are rewritten
/// greatest first through their Pommaret decomposition until none remain.
pub fn full_remainder(
    j: &MonomialIdeal,
    gamma: &Term,
    var: usize,
    step_cap: usize,
) -> Result<BTreeMap<Term, CPolyView>> {
    let sous = sous_escalier_all(j)?;
    let gens = j.generators();
    let g = gens
        .iter()
        .position(|x| x == gamma)
        .ok_or_else(|| Error::Domain(format!("{gamma} is not a minimal generator of {j}")))?;
    if var == 0 || var >= gamma.min_var()? {
        return Err(Error::Domain(format!(
            "x{var} is not greater than min({gamma})"
        )));
    }
    let d = sous.len();
    let mut rem: BTreeMap<Term, CPoly> = BTreeMap::new();
    let mut pending: BTreeMap<Term, CPoly> = BTreeMap::new();
    let push = |rem: &mut BTreeMap<Term, CPoly>,
                pending: &mut BTreeMap<Term, CPoly>,
                t: Term,
                c: &CPoly,
                col: Option<usize>,
                sign: i64| {
        let bucket = if j.contains(&t) { pending } else { rem };
        let entry = bucket.entry(t.clone()).or_default();
        match col {
            Some(col) => add_scaled(entry, c, col, sign),
            None => {
                for (m, v) in c {
                    *entry.entry(m.clone()).or_insert_with(BigInt::zero) += v * sign;
                }
                entry.retain(|_, v| !v.is_zero());
            }
        }
        if entry.is_empty() {
            bucket.remove(&t);
        }
    };

    let one: CPoly = [(Vec::new(), BigInt::one())].into_iter().collect();
    push(&mut rem, &mut pending, gamma.mul_var(var), &one, None, 1);
    for (b, beta) in sous.iter().enumerate() {
        push(
            &mut rem,
            &mut pending,
            beta.mul_var(var),
            &one,
            Some(g * d + b),
            1,
        );
    }

    let mut steps = 0;
    while let Some((tau, c)) = pending.pop_last() {
        steps += 1;
        if steps > step_cap {
            return Err(Error::Internal(format!(
                "reduction of x{var}*f({gamma}) exceeded {step_cap} steps"
            )));
        }
        let (alpha, delta) = j
            .decompose_unchecked(&tau)
            .ok_or_else(|| Error::Internal(format!("{tau} has no Pommaret decomposition")))?;
        let a = gens
            .iter()
            .position(|x| *x == alpha)
            .expect("decomposition returns a generator");
        // subtracting c * delta * f_alpha removes tau and leaves the tail
        for (b, beta) in sous.iter().enumerate() {
            push(
                &mut rem,
                &mut pending,
                beta.mul_unchecked(&delta),
                &c,
                Some(a * d + b),
                -1,
            );
        }
    }
    Ok(rem.into_iter().map(|(t, c)| (t, CPolyView(c))).collect())
}

/// Read-only view of a parameter polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CPolyView(CPoly);

impl CPolyView {
    /// Coefficient of the constant monomial.
    pub fn constant(&self) -> BigInt {
        self.0.get(&Vec::new()).cloned().unwrap_or_default()
    }

    /// Degree-one part as a sparse row over the parameter columns.
    pub fn linear_part(&self) -> SparseRow {
        self.0
            .iter()
            .filter(|(m, _)| m.len() == 1)
            .map(|(m, v)| (m[0], v.clone()))
            .collect()
    }

    /// Highest total degree in the parameters.
    pub fn degree(&self) -> usize {
        self.0.keys().map(Vec::len).max().unwrap_or(0)
    }
}

/// The linear equations obtained from full remainders, one per nonzero
/// linear part.
pub fn oracle_rows(j: &MonomialIdeal, step_cap: usize) -> Result<Vec<SparseRow>> {
    let mut rows = Vec::new();
    for gamma in j.generators() {
        for var in 1..gamma.min_var()? {
            for (t, c) in full_remainder(j, gamma, var, step_cap)? {
                if !c.constant().is_zero() {
                    return Err(Error::Internal(format!(
                        "x{var}*f({gamma}) has constant coefficient on {t}"
                    )));
                }
                let row = c.linear_part();
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    Ok(rows)
}

/// Do two row sets span the same space over the rationals?
pub fn same_row_space(a: &[SparseRow], b: &[SparseRow]) -> bool {
    let ra = sparse_rank(a);
    let rb = sparse_rank(b);
    let both: Vec<SparseRow> = a.iter().chain(b).cloned().collect();
    ra == rb && sparse_rank(&both) == ra
}

/// Compare the closed-form linearization with the full reduction.
pub fn audit(j: &MonomialIdeal, step_cap: usize) -> Result<bool> {
    let sys = TangentSystem::build(j)?;
    let rows = oracle_rows(j, step_cap)?;
    Ok(same_row_space(sys.rows(), &rows))
}
