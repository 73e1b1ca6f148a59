//! Terms of `K[x1, ..., xn]` and the degree reverse lexicographic order.
//!
//! Variables are indexed `1..=n` with `x1` the greatest. A [`Term`] is its
//! exponent vector; the constant term `1` is the all-zeros vector.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A term (monomial with unit coefficient) in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term {
    exps: Vec<u32>,
}

impl Term {
    pub fn new(exps: Vec<u32>) -> Self {
        Term { exps }
    }

    /// The constant term `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Term { exps: vec![0; n] }
    }

    /// The variable `x_i` (1-based) in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        Self::pure_power(n, i, 1)
    }

    /// `x_i^e` in `n` variables.
    pub fn pure_power(n: usize, i: usize, e: u32) -> Self {
        assert!(i >= 1 && i <= n, "variable index {i} out of 1..={n}");
        let mut exps = vec![0; n];
        exps[i - 1] = e;
        Term { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i` (1-based).
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Index of the smallest variable dividing the term.
    pub fn min_var(&self) -> Result<usize> {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map(|p| p + 1)
            .ok_or_else(|| Error::Undefined("min_var of the constant term".into()))
    }

    /// Index of the greatest variable dividing the term.
    pub fn max_var(&self) -> Result<usize> {
        self.exps
            .iter()
            .position(|&e| e > 0)
            .map(|p| p + 1)
            .ok_or_else(|| Error::Undefined("max_var of the constant term".into()))
    }

    fn check_same(&self, other: &Term) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::Dimension {
                expected: self.nvars(),
                found: other.nvars(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Term) -> Result<Term> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Term) -> Term {
        Term {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Multiply by `x_i` (1-based).
    pub fn mul_var(&self, i: usize) -> Term {
        let mut exps = self.exps.clone();
        exps[i - 1] += 1;
        Term { exps }
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Term) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Term) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, failing unless `divisor` divides `self`.
    pub fn quotient(&self, divisor: &Term) -> Result<Term> {
        self.check_same(divisor)?;
        if !divisor.divides_unchecked(self) {
            return Err(Error::Arithmetic(format!(
                "{divisor} does not divide {self}"
            )));
        }
        Ok(Term {
            exps: self
                .exps
                .iter()
                .zip(&divisor.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Reinterpret the term in `m >= n` variables.
    pub fn extend(&self, m: usize) -> Result<Term> {
        if m < self.nvars() {
            return Err(Error::Dimension {
                expected: self.nvars(),
                found: m,
            });
        }
        let mut exps = self.exps.clone();
        exps.resize(m, 0);
        Ok(Term { exps })
    }

    /// Parse the text form `x1^3*x2^2` (or `1`) as a term in `n` variables.
    pub fn parse(s: &str, n: usize) -> Result<Term> {
        let s = s.trim();
        let mut exps = vec![0u32; n];
        if s == "1" {
            return Ok(Term { exps });
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let (var, pow) = match factor.split_once('^') {
                Some((v, p)) => {
                    let p = p
                        .trim()
                        .parse::<u32>()
                        .map_err(|e| Error::Parse(format!("bad exponent in `{factor}`: {e}")))?;
                    (v.trim(), p)
                }
                None => (factor, 1),
            };
            let idx = var
                .strip_prefix('x')
                .and_then(|i| i.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("bad variable `{var}`")))?;
            if idx == 0 || idx > n {
                return Err(Error::Parse(format!("variable x{idx} outside x1..x{n}")));
            }
            exps[idx - 1] += pow;
        }
        Ok(Term { exps })
    }
}

/// Degree reverse lexicographic comparison with `x1 > x2 > ... > xn`.
///
/// `a > b` iff `deg a > deg b`, or the degrees agree and the last nonzero
/// entry of `a - b` is negative.
pub fn cmp_degrevlex(a: &Term, b: &Term) -> Result<Ordering> {
    a.check_same(b)?;
    Ok(degrevlex(&a.exps, &b.exps))
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the trailing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl Ord for Term {
    /// Degrevlex. Terms over different variable counts are ordered by count
    /// first so that `Ord` stays total; use [`cmp_degrevlex`] for a checked
    /// comparison.
    fn cmp(&self, other: &Self) -> Ordering {
        self.nvars()
            .cmp(&other.nvars())
            .then_with(|| degrevlex(&self.exps, &other.exps))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Term {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.exps.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Term {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Vec::<u32>::deserialize(d).map(Term::new)
    }
}

/// All terms of degree `t` in `n` variables, increasing in degrevlex.
pub fn enumerate_terms(n: usize, t: u32) -> Vec<Term> {
    assert!(n >= 1, "need at least one variable");
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fill(&mut exps, 0, t, &mut out);
    out.sort_unstable();
    out
}

fn fill(exps: &mut [u32], pos: usize, left: u32, out: &mut Vec<Term>) {
    if pos + 1 == exps.len() {
        exps[pos] = left;
        out.push(Term::new(exps.to_vec()));
        return;
    }
    for e in 0..=left {
        exps[pos] = e;
        fill(exps, pos + 1, left - e, out);
    }
    exps[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: &[u32]) -> Term {
        Term::new(e.to_vec())
    }

    #[test]
    fn degrevlex_examples() {
        assert_eq!(
            cmp_degrevlex(&t(&[1, 3, 0]), &t(&[0, 4, 0])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            cmp_degrevlex(&t(&[2, 1, 1]), &t(&[2, 1, 1])).unwrap(),
            Ordering::Equal
        );
        assert!(cmp_degrevlex(&t(&[1]), &t(&[1, 0])).is_err());
    }

    #[test]
    fn pure_power_of_penultimate_beats_multiples_of_last() {
        for n in 2..=4 {
            for deg in 1..=7u32 {
                let top = Term::pure_power(n, n - 1, deg);
                for tau in enumerate_terms(n, deg - 1) {
                    assert!(top > tau.mul_var(n), "{top} vs x{n}*{tau}");
                }
            }
        }
    }

    #[test]
    fn min_and_max_var() {
        let a = t(&[2, 0, 2, 0]);
        assert_eq!(a.min_var().unwrap(), 3);
        assert_eq!(a.max_var().unwrap(), 1);
        let b = Term::pure_power(5, 5, 3);
        assert_eq!((b.min_var().unwrap(), b.max_var().unwrap()), (5, 5));
        assert_eq!(t(&[0, 4, 1]).min_var().unwrap(), 3);
        assert!(matches!(Term::one(3).min_var(), Err(Error::Undefined(_))));
        assert!(Term::one(3).max_var().is_err());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(t(&[1, 1, 0]).mul(&t(&[0, 1, 1])).unwrap(), t(&[1, 2, 1]));
        assert!(!t(&[2, 0]).divides(&t(&[1, 1])).unwrap());
        assert_eq!(
            t(&[2, 0, 5]).quotient(&t(&[0, 0, 1])).unwrap(),
            t(&[2, 0, 4])
        );
        assert!(matches!(
            t(&[1, 0]).quotient(&t(&[0, 1])),
            Err(Error::Arithmetic(_))
        ));
    }

    #[test]
    fn enumeration() {
        assert_eq!(
            enumerate_terms(2, 2),
            vec![t(&[0, 2]), t(&[1, 1]), t(&[2, 0])]
        );
        assert_eq!(enumerate_terms(3, 0), vec![Term::one(3)]);
        assert_eq!(enumerate_terms(3, 4).len(), 15);
    }

    #[test]
    fn text_round_trip() {
        let a = t(&[3, 2, 0]);
        assert_eq!(a.to_string(), "x1^3*x2^2");
        assert_eq!(Term::parse("x1^3*x2^2", 3).unwrap(), a);
        assert_eq!(Term::one(2).to_string(), "1");
        assert_eq!(Term::parse("1", 2).unwrap(), Term::one(2));
        assert_eq!(t(&[0, 1, 1]).to_string(), "x2*x3");
        assert!(Term::parse("x4", 3).is_err());
        assert!(Term::parse("y1", 3).is_err());
        assert_eq!(serde_json::to_string(&a).unwrap(), "[3,2,0]");
    }
}
