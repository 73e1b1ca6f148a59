//! Hilbert functions of complete intersections and monomial quotients.
//!
//! A [`HilbertFunction`] is a closed table plus an explicit eventual
//! behaviour, so queries past the table are answered exactly. Finite
//! differences are [`IntTable`]s, which may take negative values.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// Behaviour of a Hilbert function past its stored table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Eventual {
    Zero,
    Constant(u64),
    /// Not determined; queries past the table fail.
    Unspecified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    values: Vec<u64>,
    eventual: Eventual,
}

impl HilbertFunction {
    pub fn new(values: Vec<u64>, eventual: Eventual) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Validation("empty Hilbert function table".into()));
        }
        if let Eventual::Constant(c) = eventual {
            if *values.last().unwrap() != c {
                return Err(Error::Validation(format!(
                    "last value must equal the eventual constant {c}"
                )));
            }
        }
        Ok(HilbertFunction { values, eventual })
    }

    /// An Artinian Hilbert function from its finite table.
    pub fn artinian(values: Vec<u64>) -> Result<Self> {
        Self::new(values, Eventual::Zero)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn eventual(&self) -> Eventual {
        self.eventual
    }

    /// `H(t)`, or `None` past the table when the tail is unspecified.
    pub fn get(&self, t: usize) -> Option<u64> {
        match self.values.get(t) {
            Some(&v) => Some(v),
            None => match self.eventual {
                Eventual::Zero => Some(0),
                Eventual::Constant(c) => Some(c),
                Eventual::Unspecified => None,
            },
        }
    }

    /// `H(t)` for `t` in the table or under a known tail.
    pub fn at(&self, t: usize) -> Result<u64> {
        self.get(t)
            .ok_or_else(|| Error::Domain(format!("H({t}) lies past a table with unspecified tail")))
    }

    /// `H(0), ..., H(up_to)`.
    pub fn prefix(&self, up_to: usize) -> Result<Vec<u64>> {
        (0..=up_to).map(|t| self.at(t)).collect()
    }

    /// Last index with a nonzero value for Artinian functions.
    pub fn socle_degree(&self) -> Option<usize> {
        match self.eventual {
            Eventual::Zero => self.values.iter().rposition(|&v| v != 0),
            _ => None,
        }
    }

    /// `sum_t H(t)` for Artinian functions.
    pub fn total(&self) -> Option<u64> {
        (self.eventual == Eventual::Zero).then(|| self.values.iter().sum())
    }

    fn signed(&self) -> IntTable {
        let tail = match self.eventual {
            Eventual::Zero => Some(0),
            Eventual::Constant(c) => Some(c as i64),
            Eventual::Unspecified => None,
        };
        IntTable {
            values: self.values.iter().map(|&v| v as i64).collect(),
            tail,
        }
    }
}

/// An integer-valued function on `t >= 0`: a table plus an optional constant tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntTable {
    values: Vec<i64>,
    tail: Option<i64>,
}

impl IntTable {
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn tail(&self) -> Option<i64> {
        self.tail
    }

    pub fn get(&self, t: usize) -> Option<i64> {
        self.values.get(t).copied().or(self.tail)
    }

    pub fn at(&self, t: usize) -> Result<i64> {
        self.get(t).ok_or_else(|| {
            Error::Domain(format!(
                "value at {t} lies past a table with unspecified tail"
            ))
        })
    }

    fn difference(&self) -> IntTable {
        // one extra slot lets a known tail enter the differences
        let len = self.values.len() + usize::from(self.tail.is_some());
        let vals: Vec<i64> = (0..len)
            .map(|t| {
                let cur = self.get(t).unwrap();
                if t == 0 {
                    1
                } else {
                    cur - self.get(t - 1).unwrap()
                }
            })
            .collect();
        IntTable {
            values: vals,
            tail: self.tail.map(|_| 0),
        }
    }
}

/// Degree data `d1 <= ... <= dn` of a complete intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CIProfile {
    degrees: Vec<u32>,
    m: Vec<u32>,
    u_bar: Vec<u32>,
}

impl CIProfile {
    pub fn new(degrees: &[u32]) -> Result<Self> {
        validate_degrees(degrees)?;
        let mut m = Vec::with_capacity(degrees.len());
        let mut acc = 0;
        for (i, d) in degrees.iter().enumerate() {
            acc += d;
            m.push(acc - (i as u32 + 1));
        }
        let u_bar = (0..degrees.len())
            .map(|i| if i == 0 { 0 } else { (m[i] / 2).min(m[i - 1]) })
            .collect();
        Ok(CIProfile {
            degrees: degrees.to_vec(),
            m,
            u_bar,
        })
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    /// `m_i = d_1 + ... + d_i - i`, 1-based.
    pub fn m(&self, i: usize) -> u32 {
        self.m[i - 1]
    }

    /// Peak index `u_i`, 1-based.
    pub fn u_bar(&self, i: usize) -> u32 {
        self.u_bar[i - 1]
    }

    /// `D = d_1 ... d_n`.
    pub fn product(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).product()
    }
}

/// Degrees must be non-decreasing with `d1 >= 2`.
pub fn validate_degrees(degrees: &[u32]) -> Result<()> {
    if degrees.is_empty() {
        return Err(Error::Validation("at least one degree is required".into()));
    }
    if degrees[0] < 2 {
        return Err(Error::Validation("degrees must be at least 2".into()));
    }
    if degrees.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Validation("degrees must be non-decreasing".into()));
    }
    Ok(())
}

/// `H^[i]` for the first `i` degrees, tabulated on `0..=max(up_to, m_i)`.
pub fn ci_hilbert(degrees: &[u32], i: usize, up_to: usize) -> Result<HilbertFunction> {
    validate_degrees(degrees)?;
    if i == 0 || i > degrees.len() {
        return Err(Error::Range(format!(
            "i = {i} outside 1..={}",
            degrees.len()
        )));
    }
    // H^[1] = 1 on [0, d1)
    let mut h: Vec<u64> = vec![1; degrees[0] as usize];
    for &d in &degrees[1..i] {
        let d = d as usize;
        let top = h.len() - 1 + d - 1;
        let mut prefix = Vec::with_capacity(top + 1);
        let mut acc = 0u64;
        for t in 0..=top {
            acc += h.get(t).copied().unwrap_or(0);
            prefix.push(acc);
        }
        h = (0..=top)
            .map(|t| prefix[t] - if t >= d { prefix[t - d] } else { 0 })
            .collect();
    }
    if h.len() <= up_to {
        h.resize(up_to + 1, 0);
    }
    HilbertFunction::artinian(h)
}

/// Coefficients of `prod (1 - z^{d_i}) / (1 - z)^n` by convolution and prefix sums.
pub fn ci_hilbert_oracle(degrees: &[u32]) -> Result<HilbertFunction> {
    validate_degrees(degrees)?;
    let total: usize = degrees.iter().map(|&d| d as usize).sum();
    let mut poly = vec![0i64; total + 1];
    poly[0] = 1;
    let mut deg = 0usize;
    for &d in degrees {
        let d = d as usize;
        for k in (0..=deg).rev() {
            poly[k + d] -= poly[k];
        }
        deg += d;
    }
    for _ in degrees {
        for k in 1..poly.len() {
            poly[k] += poly[k - 1];
        }
    }
    let socle = total - degrees.len();
    if poly[socle + 1..].iter().any(|&c| c != 0) || poly.iter().any(|&c| c < 0) {
        return Err(Error::Internal(
            "complete intersection series is not a polynomial".into(),
        ));
    }
    HilbertFunction::artinian(poly[..=socle].iter().map(|&c| c as u64).collect())
}

/// `Δ^s H`, with the convention `Δ^s H(0) = 1` for `s >= 1`.
pub fn derivative(h: &HilbertFunction, s: usize) -> IntTable {
    let mut table = h.signed();
    for _ in 0..s {
        table = table.difference();
    }
    table
}

/// `c_s(H) = max{c : Δ^s H(j) > 0 for all 0 <= j <= c}`, for `s >= delta`.
pub fn c_index(h: &HilbertFunction, s: usize, delta: usize) -> Result<usize> {
    if s < delta {
        return Err(Error::Domain(format!(
            "c_{s} is undefined below the Krull dimension {delta}"
        )));
    }
    last_positive(&derivative(h, s))
        .ok_or_else(|| Error::Domain(format!("c_{s} is undefined for this function")))
}

fn last_positive(d: &IntTable) -> Option<usize> {
    if d.get(0)? <= 0 {
        return None;
    }
    match d.values.iter().position(|&v| v <= 0) {
        Some(p) => Some(p - 1),
        None if d.tail.is_some_and(|c| c <= 0) => Some(d.values.len() - 1),
        None => None,
    }
}

/// First index from which `Δ^{δ-1} H` is constant.
pub fn varrho(h: &HilbertFunction, delta: usize) -> Result<usize> {
    if delta == 0 {
        return Err(Error::Domain(
            "varrho needs positive Krull dimension".into(),
        ));
    }
    let d = derivative(h, delta - 1);
    let tail = d
        .tail
        .ok_or_else(|| Error::Domain("varrho needs an eventually constant derivative".into()))?;
    Ok(d.values
        .iter()
        .rposition(|&v| v != tail)
        .map_or(0, |p| p + 1))
}

/// `|Δ^s H|`: `Δ^s H(t)` while every earlier value is positive, then zero.
pub fn pardue_truncation(h: &HilbertFunction, s: usize) -> Result<HilbertFunction> {
    let d = derivative(h, s);
    match last_positive(&d) {
        Some(c) => {
            let mut vals: Vec<u64> = (0..=c).map(|t| d.get(t).unwrap() as u64).collect();
            vals.push(0);
            HilbertFunction::artinian(vals)
        }
        None if d.tail.is_some_and(|c| c > 0) => HilbertFunction::new(
            d.values.iter().map(|&v| v as u64).collect(),
            Eventual::Constant(d.tail.unwrap() as u64),
        ),
        None => Err(Error::Domain(
            "truncated derivative undefined for this function".into(),
        )),
    }
}

/// `t -> |N(J)_t|` on `0..=up_to`, with the tail inferred when possible.
///
/// Artinian ideals get a zero tail. Stable ideals with one-dimensional
/// quotient become constant from the regularity on. Otherwise the tail is
/// left unspecified.
pub fn hf_of_ideal(j: &MonomialIdeal, up_to: usize) -> Result<HilbertFunction> {
    if j.is_stable() && !j.is_zero() {
        let reg = j.max_generator_degree().unwrap() as usize;
        let missing = (1..=j.nvars())
            .filter(|&i| j.pure_power_exponent(i).is_none())
            .count();
        let top = up_to.max(reg + usize::from(missing == 0));
        let vals: Vec<u64> = j
            .slices_unchecked(top as u32)
            .iter()
            .map(|s| s.len() as u64)
            .collect();
        let eventual = match missing {
            0 => Eventual::Zero,
            1 => Eventual::Constant(vals[top]),
            _ => Eventual::Unspecified,
        };
        return HilbertFunction::new(vals, eventual);
    }
    if j.is_artinian() {
        let bound: usize = (1..=j.nvars())
            .map(|i| j.pure_power_exponent(i).unwrap() as usize - 1)
            .sum();
        let top = up_to.max(bound + 1);
        let vals = (0..=top as u32)
            .map(|t| j.sous_escalier(t).len() as u64)
            .collect();
        return HilbertFunction::artinian(vals);
    }
    let vals = (0..=up_to as u32)
        .map(|t| j.sous_escalier(t).len() as u64)
        .collect();
    HilbertFunction::new(vals, Eventual::Unspecified)
}

/// Each `H^[i]` vanishes past `m_i` and is symmetric about `m_i / 2`.
pub fn check_symmetry(degrees: &[u32]) -> Result<bool> {
    let p = CIProfile::new(degrees)?;
    for i in 1..=p.n() {
        let h = ci_hilbert(degrees, i, 0)?;
        let m = p.m(i) as usize;
        if h.socle_degree() != Some(m) {
            return Ok(false);
        }
        if (0..=m).any(|t| h.get(t) != h.get(m - t)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Each `H^[i]` strictly increases on `[0, u_i]` and decreases on `[u_i, m_i]`.
pub fn check_unimodal_ranges(degrees: &[u32]) -> Result<bool> {
    let p = CIProfile::new(degrees)?;
    for i in 1..=p.n() {
        let h = ci_hilbert(degrees, i, 0)?;
        let (u, m) = (p.u_bar(i) as usize, p.m(i) as usize);
        if (0..u).any(|t| h.get(t) >= h.get(t + 1)) || (u..m).any(|t| h.get(t) < h.get(t + 1)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// On `[0, c_s]`, once `Δ^{s+1} H^[n]` is non-positive it stays so.
pub fn check_pardue_decrease(degrees: &[u32], s: usize) -> Result<bool> {
    let h = ci_hilbert(degrees, degrees.len(), 0)?;
    let c = c_index(&h, s, 0)?;
    let d = derivative(&h, s + 1);
    for t in 0..=c {
        if d.at(t)? <= 0 && d.at(t + 1)? > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Serialize, Deserialize)]
struct EventualJson {
    kind: String,
    value: u64,
}

#[derive(Serialize, Deserialize)]
struct HilbertJson {
    values: Vec<u64>,
    eventual: Option<EventualJson>,
}

impl Serialize for HilbertFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let eventual = match self.eventual {
            Eventual::Zero => Some(EventualJson {
                kind: "zero".into(),
                value: 0,
            }),
            Eventual::Constant(c) => Some(EventualJson {
                kind: "constant".into(),
                value: c,
            }),
            Eventual::Unspecified => None,
        };
        HilbertJson {
            values: self.values.clone(),
            eventual,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HilbertFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = HilbertJson::deserialize(d)?;
        let eventual = match raw.eventual {
            None => Eventual::Unspecified,
            Some(e) if e.kind == "zero" => Eventual::Zero,
            Some(e) if e.kind == "constant" => Eventual::Constant(e.value),
            Some(e) => {
                return Err(serde::de::Error::custom(format!(
                    "unknown eventual kind `{}`",
                    e.kind
                )))
            }
        };
        HilbertFunction::new(raw.values, eventual).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(h: &HilbertFunction, upto: usize) -> Vec<u64> {
        h.prefix(upto).unwrap()
    }

    fn quintic_h() -> HilbertFunction {
        HilbertFunction::new(vec![1, 3, 6, 6, 5, 5], Eventual::Constant(5)).unwrap()
    }

    #[test]
    fn ci_tables() {
        let h = ci_hilbert(&[4, 5, 7, 8], 4, 10).unwrap();
        assert_eq!(
            vals(&h, 11),
            vec![1, 4, 10, 20, 34, 51, 70, 89, 105, 116, 120, 116]
        );
        let h3 = ci_hilbert(&[4, 5, 7, 8], 3, 0).unwrap();
        assert_eq!(vals(&h3, 7), vec![1, 3, 6, 10, 14, 17, 19, 19]);
        let h = ci_hilbert(&[3, 4, 4], 3, 9).unwrap();
        assert_eq!(vals(&h, 9), vec![1, 3, 6, 9, 10, 9, 6, 3, 1, 0]);
        assert_eq!(vals(&ci_hilbert(&[2], 1, 3).unwrap(), 3), vec![1, 1, 0, 0]);
    }

    #[test]
    fn validation() {
        assert!(matches!(
            ci_hilbert(&[4, 3], 2, 0),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            ci_hilbert(&[1, 2], 2, 0),
            Err(Error::Validation(_))
        ));
        assert!(matches!(ci_hilbert(&[2, 3], 3, 0), Err(Error::Range(_))));
        assert!(CIProfile::new(&[]).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            ci_hilbert_oracle(&[2, 2, 2]).unwrap().values(),
            &[1, 3, 3, 1]
        );
        assert_eq!(ci_hilbert_oracle(&[5]).unwrap().values(), &[1; 5]);
        assert_eq!(
            ci_hilbert_oracle(&[3, 3, 3]).unwrap().values(),
            &[1, 3, 6, 7, 6, 3, 1]
        );
    }

    #[test]
    fn derivative_table() {
        let h = ci_hilbert(&[4, 5, 7, 8], 4, 0).unwrap();
        let d = derivative(&h, 1);
        let got: Vec<i64> = (0..=14).map(|t| d.at(t).unwrap()).collect();
        // H(12) - H(11) = 105 - 116 and H(14) - H(13) = 70 - 89
        assert_eq!(
            got,
            vec![1, 3, 6, 10, 14, 17, 19, 19, 16, 11, 4, -4, -11, -16, -19]
        );
        assert_eq!(d.at(100).unwrap(), 0);
        let d0 = derivative(&h, 0);
        assert_eq!(
            d0.values().iter().map(|&v| v as u64).collect::<Vec<_>>(),
            h.values()
        );
    }

    #[test]
    fn indices() {
        let h = ci_hilbert(&[4, 5, 7, 8], 4, 0).unwrap();
        assert_eq!(c_index(&h, 0, 0).unwrap(), 20);
        assert_eq!(c_index(&h, 1, 0).unwrap(), 10);
        assert_eq!(c_index(&h, 2, 0).unwrap(), 6);
        let q = quintic_h();
        assert_eq!(c_index(&q, 1, 1).unwrap(), 2);
        assert_eq!(c_index(&q, 2, 1).unwrap(), 2);
        assert_eq!(c_index(&q, 3, 1).unwrap(), 0);
        assert!(matches!(c_index(&q, 0, 1), Err(Error::Domain(_))));
        assert_eq!(c_index(&ci_hilbert(&[6], 1, 0).unwrap(), 0, 0).unwrap(), 5);
        let p = CIProfile::new(&[4, 5, 7, 8]).unwrap();
        assert_eq!((p.u_bar(2), p.u_bar(3), p.u_bar(4), p.m(4)), (3, 6, 10, 20));
        assert_eq!((p.m(1), p.m(2), p.m(3)), (3, 7, 13));
    }

    #[test]
    fn varrho_values() {
        assert_eq!(varrho(&quintic_h(), 1).unwrap(), 4);
        let one = HilbertFunction::new(vec![1], Eventual::Constant(1)).unwrap();
        assert_eq!(varrho(&one, 1).unwrap(), 0);
        assert!(varrho(&quintic_h(), 0).is_err());
    }

    #[test]
    fn truncated_derivative() {
        let h = ci_hilbert(&[3, 4, 4], 3, 0).unwrap();
        let p = pardue_truncation(&h, 1).unwrap();
        assert_eq!(vals(&p, 5), vec![1, 2, 3, 3, 1, 0]);
        let h2 = ci_hilbert(&[3, 4], 2, 0).unwrap();
        assert_eq!(vals(&h2, 5), vec![1, 2, 3, 3, 2, 1]);
        assert_ne!(vals(&p, 5), vals(&h2, 5));
        assert_eq!(vals(&p, 3), vals(&h2, 3));
        let h0 = pardue_truncation(&h, 0).unwrap();
        assert_eq!(vals(&h0, 12), vals(&h, 12));
    }

    #[test]
    fn ideal_functions() {
        let j = MonomialIdeal::parse("(x1^3, x1^2*x2^2)", 2).unwrap();
        let h = hf_of_ideal(&j, 7).unwrap();
        assert_eq!(vals(&h, 9), vec![1, 2, 3, 3, 2, 2, 2, 2, 2, 2]);
        assert_eq!(h.eventual(), Eventual::Constant(2));
        let jp = MonomialIdeal::parse("(x1^3, x1^2*x2^2)", 2)
            .unwrap()
            .extend_ring(3)
            .unwrap();
        let h = hf_of_ideal(&jp, 6).unwrap();
        assert_eq!(vals(&h, 6), vec![1, 3, 6, 9, 11, 13, 15]);
        assert_eq!(h.eventual(), Eventual::Unspecified);
        let q = MonomialIdeal::parse("(x1^3, x1^2*x2, x1*x2^2, x2^3, x1^2*x3^2)", 3).unwrap();
        assert_eq!(hf_of_ideal(&q, 5).unwrap(), quintic_h());
    }

    #[test]
    fn theorem_checks() {
        assert!(check_symmetry(&[4, 5, 7, 8]).unwrap());
        assert!(check_symmetry(&[9]).unwrap());
        assert!(check_unimodal_ranges(&[4, 5, 7, 8]).unwrap());
        assert!(check_pardue_decrease(&[3, 4, 4], 1).unwrap());
        let h = ci_hilbert(&[4, 5, 7, 8], 4, 0).unwrap();
        assert!((0..=20).all(|t| h.get(t) == h.get(20 - t)));
    }

    #[test]
    fn json_shape() {
        let h = ci_hilbert(&[2, 2], 2, 0).unwrap();
        assert_eq!(
            serde_json::to_string(&h).unwrap(),
            r#"{"values":[1,2,1],"eventual":{"kind":"zero","value":0}}"#
        );
        let back: HilbertFunction =
            serde_json::from_str(&serde_json::to_string(&quintic_h()).unwrap()).unwrap();
        assert_eq!(back, quintic_h());
    }
}
