//! Construction of almost revlex ideals.
//!
//! [`almost_revlex_ci`] lifts the almost revlex ideal of a complete
//! intersection one variable at a time. Each stage only builds the
//! generators up to the next degree `d_{i+1}`, since that truncation is all
//! the following stage reads. [`almost_revlex_for`] is the plain greedy
//! builder for an arbitrary Artinian Hilbert function.

use crate::error::{Error, Result};
use crate::hilbert::{
    c_index, ci_hilbert, derivative, validate_degrees, varrho, HilbertFunction, IntTable,
};
use crate::ideal::{expand, MonomialIdeal};
use crate::term::Term;

/// The greatest `h` terms of an increasing list, still increasing.
pub fn greatest(terms: &[Term], h: usize) -> Result<Vec<Term>> {
    if h > terms.len() {
        return Err(Error::Range(format!(
            "asked for {h} of {} terms",
            terms.len()
        )));
    }
    Ok(terms[terms.len() - h..].to_vec())
}

/// The almost revlex ideal `J^[n]` with the Hilbert function of a complete
/// intersection of the given degrees.
pub fn almost_revlex_ci(n: usize, degrees: &[u32]) -> Result<MonomialIdeal> {
    validate_degrees(degrees)?;
    if degrees.len() != n {
        return Err(Error::Validation(format!(
            "expected {n} degrees, got {}",
            degrees.len()
        )));
    }
    let mut gens = vec![Term::pure_power(1, 1, degrees[0])];
    if n == 1 {
        return MonomialIdeal::minimalize(1, gens);
    }
    let last = degrees.iter().sum::<u32>() - n as u32 + 1;
    for i in 2..=n {
        let d_i = degrees[i - 1];
        let d_next = if i < n { degrees[i] } else { last };
        let h = ci_hilbert(&degrees[..i], i, d_next as usize)?;
        let derivs: Vec<IntTable> = (0..=i).map(|s| derivative(&h, s)).collect();

        gens = gens.iter().map(|g| g.extend(i)).collect::<Result<_>>()?;
        let ideal = MonomialIdeal::minimalize(i, gens.iter().cloned())?;
        let mut slice = ideal.slices_unchecked(d_i).pop().unwrap_or_default();
        // the greatest term of degree d_i outside J' closes the gap H'(d_i) = H^[i](d_i) + 1
        let top = slice
            .pop()
            .ok_or_else(|| Error::Internal(format!("empty sous-escalier in degree {d_i}")))?;
        gens.push(top);

        for t in d_i + 1..=d_next {
            // x_{i-s}: the greatest minimal variable occurring in N(J')_{t-1}
            let k = slice
                .iter()
                .filter_map(|x| x.min_var().ok())
                .min()
                .unwrap_or(i);
            let s = i - k;
            let h_t = h.at(t as usize)? as i64;
            let count = -derivs[s + 1].at(t as usize)?;
            let expansion = expand(i, &slice);
            if count < 0 || expansion.len() as i64 - count != h_t {
                return Err(Error::Internal(format!(
                    "stage {i}, degree {t}: expansion has {} terms, expected {h_t} + {count}",
                    expansion.len()
                )));
            }
            let cut = expansion.len() - count as usize;
            gens.extend_from_slice(&expansion[cut..]);
            slice = expansion;
            slice.truncate(cut);
        }
    }
    MonomialIdeal::minimalize(n, gens)
}

/// Greedy degree-by-degree construction of the almost revlex ideal with
/// Artinian Hilbert function `h`, failing at the first degree where the
/// expansion of the sous-escalier is too small.
pub fn almost_revlex_for(h: &HilbertFunction) -> Result<MonomialIdeal> {
    if h.at(0)? != 1 {
        return Err(Error::Validation("H(0) must be 1".into()));
    }
    let end = h.socle_degree().ok_or_else(|| {
        Error::Validation("an Artinian Hilbert function (zero tail) is required".into())
    })?;
    let n = h.at(1)? as usize;
    if n == 0 {
        // H = (1, 0, ...) needs no variables; nothing to build
        return Err(Error::Validation("H(1) must be positive".into()));
    }
    let mut gens = Vec::new();
    let mut slice = vec![Term::one(n)];
    for t in 1..=end + 1 {
        let expansion = expand(n, &slice);
        let target = h.at(t)? as usize;
        if expansion.len() < target {
            return Err(Error::NoAlmostRevlex { degree: t });
        }
        let cut = target;
        gens.extend_from_slice(&expansion[cut..]);
        slice = expansion;
        slice.truncate(cut);
    }
    let j = MonomialIdeal::minimalize(n, gens)?;
    if !j.is_almost_revlex() {
        return Err(Error::Internal(format!(
            "greedy result {j} is not almost revlex"
        )));
    }
    Ok(j)
}

/// `|B_J|` of the almost revlex ideal with Hilbert function `h`, from `h` alone.
pub fn mingen_count_formula(h: &HilbertFunction, delta: usize, n: usize) -> Result<i64> {
    if delta > n {
        return Err(Error::Domain(format!(
            "Krull dimension {delta} exceeds {n} variables"
        )));
    }
    let mut total = 0i64;
    for s in delta..n {
        let c = c_index(h, s + 1, delta)?;
        total += derivative(h, s).at(c)?;
    }
    if delta > 0 {
        let below = derivative(h, delta - 1);
        total += below.at(c_index(h, delta, delta)?)? - below.at(varrho(h, delta)?)?;
    }
    Ok(total)
}

/// `|B_{J^[n]}|` summed degree by degree over the generator counts `-Δ^{s+1} H(j+1)`.
pub fn mingen_count_ci(degrees: &[u32]) -> Result<i64> {
    let n = degrees.len();
    let h = ci_hilbert(degrees, n, 0)?;
    let c: Vec<usize> = (0..=n).map(|s| c_index(&h, s, 0)).collect::<Result<_>>()?;
    let mut total = 0i64;
    for s in 0..n {
        let d = derivative(&h, s + 1);
        for j in c[s + 1] + 1..=c[s] {
            total -= d.at(j + 1)?;
        }
    }
    Ok(total)
}
