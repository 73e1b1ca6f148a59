//! Monomial ideals given by their minimal monomial basis.
//!
//! Besides membership and the stability hierarchy this module provides the
//! sous-escalier (terms outside the ideal), the first expansion of a
//! sous-escalier slice, Pommaret decompositions for stable ideals and the
//! numerical invariants used throughout the crate: Krull dimension,
//! reduction numbers, regularity, colength.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::term::{enumerate_terms, Term};

/// A monomial ideal in `K[x1, ..., xn]`.
///
/// The basis is divisibility-minimal, duplicate-free and sorted increasing in
/// degrevlex. An empty basis is the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Term>,
}

impl MonomialIdeal {
    /// Build the ideal generated by `gens`, discarding redundant generators.
    pub fn minimalize<I: IntoIterator<Item = Term>>(n: usize, gens: I) -> Result<Self> {
        let mut all: Vec<Term> = Vec::new();
        for g in gens {
            if g.nvars() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: g.nvars(),
                });
            }
            all.push(g);
        }
        // Divisors have degree <= their multiples, so a degree sort lets
        // each candidate be checked against the kept prefix only.
        all.sort_unstable();
        all.dedup();
        let mut kept: Vec<Term> = Vec::with_capacity(all.len());
        for g in all {
            if !kept.iter().any(|k| k.divides_unchecked(&g)) {
                kept.push(g);
            }
        }
        Ok(MonomialIdeal { n, gens: kept })
    }

    /// The zero ideal in `n` variables.
    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    /// The maximal ideal `(x1, ..., xn)`.
    pub fn maximal(n: usize) -> Self {
        Self::minimalize(n, (1..=n).map(|i| Term::var(n, i))).expect("consistent variable count")
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Minimal generators, increasing in degrevlex.
    pub fn generators(&self) -> &[Term] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, t: &Term) -> bool {
        debug_assert_eq!(t.nvars(), self.n);
        self.gens.iter().any(|g| g.divides_unchecked(t))
    }

    /// Add generators, re-minimalizing.
    pub fn with_generators<I: IntoIterator<Item = Term>>(&self, extra: I) -> Result<Self> {
        Self::minimalize(self.n, self.gens.iter().cloned().chain(extra))
    }

    /// Exponent `a` of the pure power `x_i^a` among the generators, if any.
    pub fn pure_power_exponent(&self, i: usize) -> Option<u32> {
        self.gens
            .iter()
            .find(|g| g.degree() == g.exponent(i) && g.exponent(i) > 0)
            .map(|g| g.exponent(i))
    }

    /// Every variable has a pure power in the ideal.
    pub fn is_artinian(&self) -> bool {
        (1..=self.n).all(|i| self.pure_power_exponent(i).is_some())
    }

    /// Largest generator degree, `None` for the zero ideal.
    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(Term::degree).max()
    }

    /// `N(J)_t` by filtering all terms of degree `t`.
    pub fn sous_escalier(&self, t: u32) -> Vec<Term> {
        enumerate_terms(self.n, t)
            .into_iter()
            .filter(|x| !self.contains(x))
            .collect()
    }

    /// `N(J)_0, ..., N(J)_{t_max}` by iterated expansion. Requires stability.
    pub fn sous_escalier_upto(&self, t_max: u32) -> Result<Vec<Vec<Term>>> {
        self.require_stable()?;
        Ok(self.slices_unchecked(t_max))
    }

    pub(crate) fn slices_unchecked(&self, t_max: u32) -> Vec<Vec<Term>> {
        let mut out = Vec::with_capacity(t_max as usize + 1);
        let mut cur = if self.contains(&Term::one(self.n)) {
            Vec::new()
        } else {
            vec![Term::one(self.n)]
        };
        out.push(cur.clone());
        for t in 1..=t_max {
            let next = expand(self.n, &cur);
            // generators of degree t are exactly the expansion terms in J
            let new_gens: HashSet<&Term> = self.gens.iter().filter(|g| g.degree() == t).collect();
            cur = next.into_iter().filter(|x| !new_gens.contains(x)).collect();
            out.push(cur.clone());
        }
        out
    }

    /// First expansion `T_{t+1} \ {x1..xn}·J_t`, increasing. Requires stability.
    pub fn first_expansion(&self, t: u32) -> Result<Vec<Term>> {
        self.require_stable()?;
        let slices = self.slices_unchecked(t);
        Ok(expand(self.n, &slices[t as usize]))
    }

    pub fn is_quasi_stable(&self) -> bool {
        let max_exp: Vec<u32> = (1..=self.n)
            .map(|i| {
                self.gens
                    .iter()
                    .map(|g| g.exponent(i))
                    .max()
                    .unwrap_or(0)
                    .max(1)
            })
            .collect();
        self.gens.iter().all(|g| {
            let Ok(m) = g.min_var() else { return true };
            (1..m).all(|j| {
                let mut exps = g.exponents().to_vec();
                exps[m - 1] -= 1;
                exps[j - 1] += max_exp[j - 1];
                self.contains(&Term::new(exps))
            })
        })
    }

    pub fn is_stable(&self) -> bool {
        self.gens.iter().all(|g| {
            let Ok(m) = g.min_var() else { return true };
            (1..m).all(|j| self.contains(&swap(g, m, j)))
        })
    }

    pub fn is_strongly_stable(&self) -> bool {
        // any x_j/x_i move is a chain of adjacent ones, and those only need
        // checking on generators
        self.gens.iter().all(|g| {
            (2..=self.n)
                .filter(|&i| g.exponent(i) > 0)
                .all(|i| self.contains(&swap(g, i, i - 1)))
        })
    }

    /// Every term of a generator's degree greater than the generator lies in the ideal.
    pub fn is_almost_revlex(&self) -> bool {
        // almost revlex ideals are strongly stable
        if !self.is_strongly_stable() {
            return false;
        }
        let Some(top) = self.max_generator_degree() else {
            return true;
        };
        let slices = self.slices_unchecked(top);
        self.gens
            .iter()
            .all(|g| slices[g.degree() as usize].last().is_none_or(|m| m < g))
    }

    /// `J_t ∩ T` is a revlex segment for every `t` up to the regularity.
    pub fn is_revlex_ideal(&self) -> bool {
        if !self.is_strongly_stable() {
            return false;
        }
        let Some(top) = self.max_generator_degree() else {
            return true;
        };
        let slices = self.slices_unchecked(top);
        (0..=top).all(|t| {
            let all = enumerate_terms(self.n, t);
            let inside: Vec<Term> = all.iter().filter(|x| self.contains(x)).cloned().collect();
            is_revlex_segment(&inside) && inside.len() + slices[t as usize].len() == all.len()
        })
    }

    /// The same generators in `m >= n` variables.
    pub fn extend_ring(&self, m: usize) -> Result<Self> {
        if m < self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: m,
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.extend(m))
            .collect::<Result<Vec<_>>>()?;
        // extension preserves degrevlex order among the generators
        Ok(MonomialIdeal { n: m, gens })
    }

    /// The ideal generated by the generators of degree `<= t`.
    pub fn truncate_below(&self, t: u32) -> Self {
        MonomialIdeal {
            n: self.n,
            gens: self
                .gens
                .iter()
                .filter(|g| g.degree() <= t)
                .cloned()
                .collect(),
        }
    }

    /// Unique `(alpha, delta)` with `tau = alpha * delta`, `alpha` a minimal
    /// generator and every variable of `delta` no greater than `min(alpha)`.
    pub fn pommaret_decompose(&self, tau: &Term) -> Result<(Term, Term)> {
        self.require_stable()?;
        if tau.nvars() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: tau.nvars(),
            });
        }
        if !self.contains(tau) {
            return Err(Error::Membership(format!("{tau} is not in {self}")));
        }
        self.decompose_unchecked(tau).ok_or_else(|| {
            Error::Internal(format!(
                "no Pommaret decomposition of {tau} in stable {self}"
            ))
        })
    }

    pub(crate) fn decompose_unchecked(&self, tau: &Term) -> Option<(Term, Term)> {
        self.gens.iter().find_map(|g| {
            if !g.divides_unchecked(tau) {
                return None;
            }
            let delta = tau.quotient(g).ok()?;
            let ok = match (delta.max_var(), g.min_var()) {
                (Err(_), _) => true,
                (Ok(dmax), Ok(gmin)) => dmax >= gmin,
                (Ok(_), Err(_)) => false,
            };
            ok.then(|| (g.clone(), delta))
        })
    }

    /// Number of trailing variables without a pure power in the ideal.
    pub fn krull_dim(&self) -> Result<usize> {
        self.require_strongly_stable()?;
        let missing: Vec<usize> = (1..=self.n)
            .filter(|&i| self.pure_power_exponent(i).is_none())
            .collect();
        let delta = missing.len();
        if missing.iter().copied().ne(self.n - delta + 1..=self.n) {
            return Err(Error::Internal(format!(
                "pure powers of {self} do not form a leading block"
            )));
        }
        Ok(delta)
    }

    /// `r_s = min{t : x_{n-s}^{t+1} ∈ J}` for `krull_dim <= s <= n-1`.
    pub fn reduction_number(&self, s: usize) -> Result<u32> {
        let delta = self.krull_dim()?;
        if s < delta {
            return Err(Error::Domain(format!(
                "r_{s} undefined: s is below the Krull dimension {delta}"
            )));
        }
        if s >= self.n {
            return Err(Error::Domain(format!(
                "r_{s} undefined in {} variables",
                self.n
            )));
        }
        let a = self
            .pure_power_exponent(self.n - s)
            .ok_or_else(|| Error::Internal(format!("missing pure power of x{}", self.n - s)))?;
        Ok(a - 1)
    }

    /// Castelnuovo-Mumford regularity, the top generator degree of a stable ideal.
    pub fn regularity(&self) -> Result<u32> {
        self.require_stable()?;
        self.max_generator_degree()
            .ok_or_else(|| Error::Domain("regularity of the zero ideal".into()))
    }

    /// `|N(J)|` for an Artinian ideal.
    pub fn colength(&self) -> Result<u64> {
        self.require_artinian()?;
        if self.is_stable() {
            let top = self.max_generator_degree().unwrap_or(0);
            return Ok(self
                .slices_unchecked(top)
                .iter()
                .map(|s| s.len() as u64)
                .sum());
        }
        let bound: u32 = (1..=self.n)
            .map(|i| self.pure_power_exponent(i).unwrap_or(1) - 1)
            .sum();
        Ok((0..=bound)
            .map(|t| self.sous_escalier(t).len() as u64)
            .sum())
    }

    /// Number of minimal generators divisible by `xn`.
    pub fn border_generator_count(&self) -> Result<usize> {
        self.require_stable()?;
        Ok(self.gens.iter().filter(|g| g.exponent(self.n) > 0).count())
    }

    pub(crate) fn require_stable(&self) -> Result<()> {
        if self.is_stable() {
            Ok(())
        } else {
            Err(Error::Stability(format!("{self} is not stable")))
        }
    }

    pub(crate) fn require_strongly_stable(&self) -> Result<()> {
        if self.is_strongly_stable() {
            Ok(())
        } else {
            Err(Error::Stability(format!("{self} is not strongly stable")))
        }
    }

    pub(crate) fn require_artinian(&self) -> Result<()> {
        if self.is_artinian() {
            Ok(())
        } else {
            Err(Error::Domain(format!("{self} is not Artinian")))
        }
    }

    /// Parse the text form `(x1^3, x1^2*x2^2)` in `n` variables.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("ideal text must be parenthesized: `{s}`")))?;
        let gens = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|p| Term::parse(p, n))
                .collect::<Result<Vec<_>>>()?
        };
        Self::minimalize(n, gens)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ideal serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn swap(g: &Term, from: usize, to: usize) -> Term {
    let mut exps = g.exponents().to_vec();
    exps[from - 1] -= 1;
    exps[to - 1] += 1;
    Term::new(exps)
}

/// First expansion of a degree slice of a stable sous-escalier.
///
/// `slice` must be increasing; the result is the disjoint union over
/// `i = 0..n` of `x_{n-i} · [tau in slice : min(tau) >= x_{n-i}]`, which comes
/// out already sorted.
pub fn expand(n: usize, slice: &[Term]) -> Vec<Term> {
    let mut out = Vec::new();
    for v in (1..=n).rev() {
        for tau in slice {
            let admissible = tau.min_var().map_or(true, |m| m <= v);
            if admissible {
                out.push(tau.mul_var(v));
            }
        }
    }
    out
}

/// Is `terms` (all of one degree) closed upward in degrevlex within its degree?
pub fn is_revlex_segment(terms: &[Term]) -> bool {
    let Some(first) = terms.first() else {
        return true;
    };
    let n = first.nvars();
    let t = first.degree();
    if terms.iter().any(|x| x.nvars() != n || x.degree() != t) {
        return false;
    }
    let mut sorted = terms.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let all = enumerate_terms(n, t);
    all[all.len() - sorted.len()..] == sorted[..]
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    vars: usize,
    generators: Vec<Term>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealJson {
            vars: self.n,
            generators: self.gens.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = IdealJson::deserialize(d)?;
        MonomialIdeal::minimalize(raw.vars, raw.generators).map_err(serde::de::Error::custom)
    }
}
