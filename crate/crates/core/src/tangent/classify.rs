//! Sufficient conditions for an almost revlex ideal to be a singular point.
//!
//! Every `singular` verdict carries the integer inequality that fired, as
//! `lhs` against `rhs` with the relation used. A verdict of `unknown` never
//! claims smoothness.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;
use serde_json::{json, Map, Value};

use super::tangent_dim;
use crate::construct::{almost_revlex_ci, mingen_count_formula};
use crate::error::{Error, Result};
use crate::hilbert::{c_index, ci_hilbert, validate_degrees};
use crate::ideal::MonomialIdeal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Singular,
    Unknown,
}

/// The criterion that decided a verdict and the numbers behind it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub criterion: String,
    pub witness: Map<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationVerdict {
    pub verdict: Verdict,
    pub certificate: Certificate,
}

impl ClassificationVerdict {
    pub fn is_singular(&self) -> bool {
        self.verdict == Verdict::Singular
    }

    pub fn criterion(&self) -> &str {
        &self.certificate.criterion
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdict serializes")
    }
}

impl fmt::Display for ClassificationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = &self.certificate.witness;
        let show = |k: &str| {
            w.get(k)
                .map(|v| v.to_string().trim_matches('"').to_string())
                .unwrap_or_default()
        };
        match self.verdict {
            Verdict::Singular => write!(
                f,
                "singular via {}: {} {} {}",
                self.certificate.criterion,
                show("lhs"),
                show("relation"),
                show("rhs")
            ),
            Verdict::Unknown => write!(
                f,
                "unknown ({}; n*D = {})",
                self.certificate.criterion,
                show("rhs")
            ),
        }
    }
}

fn number(b: &BigInt) -> Value {
    match i64::try_from(b) {
        Ok(v) => json!(v),
        Err(_) => json!(b.to_string()),
    }
}

fn rational(r: &BigRational) -> Value {
    if r.is_integer() {
        number(&r.to_integer())
    } else {
        json!(format!("{}/{}", r.numer(), r.denom()))
    }
}

fn singular(
    criterion: &str,
    lhs: Value,
    relation: &str,
    rhs: &BigInt,
    extra: &[(&str, Value)],
) -> ClassificationVerdict {
    let mut witness = Map::new();
    for (k, v) in extra {
        witness.insert((*k).to_string(), v.clone());
    }
    witness.insert("lhs".into(), lhs);
    witness.insert("relation".into(), json!(relation));
    witness.insert("rhs".into(), number(rhs));
    ClassificationVerdict {
        verdict: Verdict::Singular,
        certificate: Certificate {
            criterion: criterion.into(),
            witness,
        },
    }
}

fn unknown(last_tried: &str, rhs: &BigInt, extra: &[(&str, Value)]) -> ClassificationVerdict {
    let mut witness = Map::new();
    for (k, v) in extra {
        witness.insert((*k).to_string(), v.clone());
    }
    witness.insert("rhs".into(), number(rhs));
    ClassificationVerdict {
        verdict: Verdict::Unknown,
        certificate: Certificate {
            criterion: last_tried.into(),
            witness,
        },
    }
}

/// Lower bounds for the peak value `H(c_1)` of a complete intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hc1Bounds {
    /// `H(c_1) > D / Σd`.
    pub coarse: BigRational,
    /// `H(c_1) >= (D - 2 binom(n+d1-1, d1-1)) / (Σd - n + 1 - 2 d1)`, when the denominator is positive.
    pub refined: Option<BigRational>,
}

pub fn hc1_bounds(degrees: &[u32]) -> Result<Hc1Bounds> {
    validate_degrees(degrees)?;
    let n = degrees.len() as i64;
    let d: BigInt = degrees.iter().map(|&x| BigInt::from(x)).product();
    let sum: i64 = degrees.iter().map(|&x| x as i64).sum();
    let coarse = BigRational::new(d.clone(), BigInt::from(sum));
    let d1 = degrees[0] as i64;
    let den = sum - n + 1 - 2 * d1;
    let refined = (den > 0).then(|| {
        let b = binomial(BigInt::from(n + d1 - 1), BigInt::from(d1 - 1));
        BigRational::new(d - b * 2, BigInt::from(den))
    });
    Ok(Hc1Bounds { coarse, refined })
}

/// Run the numeric cascade for the almost revlex ideal of a complete
/// intersection, then fall back to the exact tangent dimension if `exact`.
pub fn classify_ci(degrees: &[u32], exact: bool) -> Result<ClassificationVerdict> {
    validate_degrees(degrees)?;
    let n = degrees.len();
    if n < 3 {
        return Err(Error::Domain(format!(
            "classification needs n >= 3, got n = {n}: Hilb_D^2 is irreducible and smooth"
        )));
    }
    let ds: Vec<BigInt> = degrees.iter().map(|&x| BigInt::from(x)).collect();
    let nn = BigInt::from(n);
    let d: BigInt = ds.iter().product();
    let nd = &nn * &d;
    let sum: BigInt = ds.iter().sum();
    let n3 = &nn * &nn * &nn;

    let bound = &nn * &sum * &sum;
    if d > bound {
        return Ok(singular(
            "numeric-criterion-(i)",
            number(&d),
            ">",
            &bound,
            &[],
        ));
    }
    let head: BigInt = ds[..n - 1].iter().product();
    let rhs = &n3 * &ds[n - 1];
    if head > rhs {
        return Ok(singular(
            "numeric-criterion-(ii)",
            number(&head),
            ">",
            &rhs,
            &[],
        ));
    }
    let head2: BigInt = ds[..n - 2].iter().product();
    if ds[n - 2] == ds[n - 1] && head2 >= n3 {
        return Ok(singular(
            "numeric-criterion-(iii)",
            number(&head2),
            ">=",
            &n3,
            &[],
        ));
    }

    let h = ci_hilbert(degrees, n, 0)?;
    let hc1 = BigInt::from(h.at(c_index(&h, 1, 0)?)?);
    let sq = &hc1 * &hc1;
    if sq >= nd {
        return Ok(singular(
            "Hc1-squared",
            number(&sq),
            ">=",
            &nd,
            &[("hc1", number(&hc1))],
        ));
    }
    let count = BigInt::from(mingen_count_formula(&h, 0, n)?);
    let prod = &count * &hc1;
    if prod > nd {
        return Ok(singular(
            "sum-times-Hc1",
            number(&prod),
            ">",
            &nd,
            &[("sum", number(&count)), ("hc1", number(&hc1))],
        ));
    }
    if let Some(r) = hc1_bounds(degrees)?.refined {
        let r2 = &r * &r;
        if r.is_positive() && r2 >= BigRational::from_integer(nd.clone()) {
            return Ok(singular(
                "refined-Hc1",
                rational(&r2),
                ">=",
                &nd,
                &[("bound", rational(&r))],
            ));
        }
    }
    if !exact {
        return Ok(unknown(
            "none",
            &nd,
            &[("hc1", number(&hc1)), ("sum", number(&count))],
        ));
    }
    let report = tangent_dim(&almost_revlex_ci(n, degrees)?)?;
    let t = BigInt::from(report.tangent_dim);
    if t > nd {
        return Ok(singular("exact-tangent", number(&t), ">", &nd, &[]));
    }
    Ok(unknown(
        "exact-tangent",
        &nd,
        &[("tangent_dim", number(&t))],
    ))
}

/// Singular if `|B_J| * (generators divisible by x_n) > n * D` for a
/// strongly stable Artinian `J`; otherwise unknown.
pub fn classify_stable(j: &MonomialIdeal) -> Result<ClassificationVerdict> {
    if !j.is_artinian() {
        return Err(Error::Domain(format!("{j} is not Artinian")));
    }
    if !j.is_strongly_stable() {
        return Err(Error::Domain(format!("{j} is not strongly stable")));
    }
    let b = BigInt::from(j.num_generators());
    let border = BigInt::from(j.border_generator_count()?);
    let nd = BigInt::from(j.nvars()) * BigInt::from(j.colength()?);
    let lower = &b * &border;
    let extra = [("generators", number(&b)), ("border", number(&border))];
    if lower > nd {
        return Ok(singular(
            "border-lower-bound",
            number(&lower),
            ">",
            &nd,
            &extra,
        ));
    }
    let mut v = unknown("border-lower-bound", &nd, &extra);
    v.certificate.witness.insert("lhs".into(), number(&lower));
    Ok(v)
}
