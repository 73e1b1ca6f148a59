//! Zariski tangent space of the punctual Hilbert scheme at an Artinian
//! stable monomial ideal `J`.
//!
//! Each minimal generator `x^γ` gets a marked polynomial
//! `f_γ = x^γ + Σ_β C_{γβ} x^β` with one parameter per term `x^β` of the
//! sous-escalier. Reducing `x_j f_γ` (for `x_j` greater than `min(x^γ)`)
//! modulo the marked family leaves a remainder on `N(J)` whose coefficients
//! cut out the marked scheme. Only their linear part matters at the origin,
//! and that part has a closed form:
//!
//! * `C_{γβ}` on `x_j x^β` whenever `x_j x^β ∉ J`;
//! * `-C_{α'β'}` on `δ' x^{β'}` whenever `δ' x^{β'} ∉ J`, where
//!   `x_j x^γ = x^{α'} δ'` is the Pommaret decomposition.
//!
//! Terms that fall back into `J` only get rewritten with another parameter
//! factor, so they contribute in degree two and higher.

mod classify;
pub mod oracle;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{sparse_rank, SparseRow};
use crate::term::Term;

pub use classify::{
    classify_ci, classify_stable, hc1_bounds, Certificate, ClassificationVerdict, Hc1Bounds,
    Verdict,
};

/// The parameter `C_{αβ}`: coefficient of `x^β` in the tail of `f_α`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Parameter {
    pub alpha: Term,
    pub beta: Term,
}

/// A linear form in the parameters, without zero entries.
pub type LinearForm = BTreeMap<Parameter, BigInt>;

/// Dimensions of the tangent computation at one ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentReport {
    #[serde(rename = "params")]
    pub param_count: usize,
    #[serde(rename = "equations")]
    pub equation_count: usize,
    pub rank: usize,
    pub tangent_dim: usize,
    #[serde(rename = "lower")]
    pub lower_bound: usize,
    #[serde(rename = "upper")]
    pub upper_bound: usize,
    pub lex_dim: usize,
}

impl TangentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// The linearized equations of the marked scheme, as an integer matrix whose
/// columns are the parameters in [`parameters`] order.
#[derive(Clone, Debug)]
pub struct TangentSystem {
    ideal: MonomialIdeal,
    sous: Vec<Term>,
    index: HashMap<Term, usize>,
    rows: Vec<SparseRow>,
}

impl TangentSystem {
    pub fn build(j: &MonomialIdeal) -> Result<Self> {
        let sous = sous_escalier_all(j)?;
        let index: HashMap<Term, usize> = sous
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        let mut sys = TangentSystem {
            ideal: j.clone(),
            sous,
            index,
            rows: Vec::new(),
        };
        for (g, gamma) in j.generators().iter().enumerate() {
            let top = gamma
                .min_var()
                .expect("a generator of an Artinian ideal is not 1");
            for var in 1..top {
                let eqs = sys.equations_for(g, var);
                sys.rows.extend(eqs.into_values().filter(|r| !r.is_empty()));
            }
        }
        Ok(sys)
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// `N(J)`, increasing.
    pub fn sous_escalier(&self) -> &[Term] {
        &self.sous
    }

    pub fn param_count(&self) -> usize {
        self.ideal.num_generators() * self.sous.len()
    }

    /// Column of `C_{αβ}` for the `a`-th generator and `b`-th sous-escalier term.
    pub fn column(&self, a: usize, b: usize) -> usize {
        a * self.sous.len() + b
    }

    pub fn parameter(&self, col: usize) -> Parameter {
        let d = self.sous.len();
        Parameter {
            alpha: self.ideal.generators()[col / d].clone(),
            beta: self.sous[col % d].clone(),
        }
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        sparse_rank(&self.rows)
    }

    /// Linear parts of the remainder of `x_var * f_g`, keyed by the sous-escalier index.
    fn equations_for(&self, g: usize, var: usize) -> BTreeMap<usize, SparseRow> {
        let gens = self.ideal.generators();
        let mut eqs: BTreeMap<usize, SparseRow> = BTreeMap::new();
        let add = |eqs: &mut BTreeMap<usize, SparseRow>, m: usize, col: usize, v: i64| {
            let row = eqs.entry(m).or_default();
            let e = row.entry(col).or_insert_with(BigInt::zero);
            *e += v;
            if e.is_zero() {
                row.remove(&col);
            }
        };
        for (b, beta) in self.sous.iter().enumerate() {
            if let Some(&m) = self.index.get(&beta.mul_var(var)) {
                add(&mut eqs, m, self.column(g, b), 1);
            }
        }
        let head = gens[g].mul_var(var);
        let (alpha, delta) = self
            .ideal
            .decompose_unchecked(&head)
            .expect("stable ideals decompose");
        let a = gens
            .iter()
            .position(|x| *x == alpha)
            .expect("decomposition returns a generator");
        for (b, beta) in self.sous.iter().enumerate() {
            if let Some(&m) = self.index.get(&beta.mul_unchecked(&delta)) {
                add(&mut eqs, m, self.column(a, b), -1);
            }
        }
        eqs
    }

    /// Columns that appear with a nonzero entry in some row.
    pub fn used_columns(&self) -> Vec<bool> {
        let mut used = vec![false; self.param_count()];
        for r in &self.rows {
            for &c in r.keys() {
                used[c] = true;
            }
        }
        used
    }

    /// Every `C_{αβ}` with `x_n x^β ∈ J` has an all-zero column.
    pub fn border_columns_vanish(&self) -> bool {
        let n = self.ideal.nvars();
        let used = self.used_columns();
        (0..self.ideal.num_generators()).all(|a| {
            self.sous
                .iter()
                .enumerate()
                .filter(|(_, beta)| self.ideal.contains(&beta.mul_var(n)))
                .all(|(b, _)| !used[self.column(a, b)])
        })
    }

    /// Sparse triplets `row col value`, one nonzero per line.
    pub fn triplets(&self) -> String {
        let mut out = String::new();
        for (i, r) in self.rows.iter().enumerate() {
            for (c, v) in r {
                writeln!(out, "{i} {c} {v}").expect("writing to a String");
            }
        }
        out
    }

    pub fn report(&self) -> Result<TangentReport> {
        let (lower, upper) = tangent_bounds(&self.ideal)?;
        let rank = self.rank();
        Ok(TangentReport {
            param_count: self.param_count(),
            equation_count: self.rows.len(),
            rank,
            tangent_dim: self.param_count() - rank,
            lower_bound: lower,
            upper_bound: upper,
            lex_dim: self.ideal.nvars() * self.sous.len(),
        })
    }
}

/// `N(J)` in increasing order, after checking that `J` is Artinian and stable.
pub(crate) fn sous_escalier_all(j: &MonomialIdeal) -> Result<Vec<Term>> {
    if !j.is_artinian() {
        return Err(Error::Domain(format!("{j} is not Artinian")));
    }
    if !j.is_stable() {
        return Err(Error::Domain(format!("{j} is not stable")));
    }
    let top = j.max_generator_degree().unwrap_or(0);
    Ok(j.sous_escalier_upto(top)?.into_iter().flatten().collect())
}

/// The parameters `C_{αβ}`, generator-major and then increasing in `β`.
pub fn parameters(j: &MonomialIdeal) -> Result<Vec<Parameter>> {
    let sous = sous_escalier_all(j)?;
    Ok(j.generators()
        .iter()
        .flat_map(|a| {
            sous.iter().map(move |b| Parameter {
                alpha: a.clone(),
                beta: b.clone(),
            })
        })
        .collect())
}

/// Linear part of the remainder of `x_j f_γ`, one linear form per monomial of
/// `N(J)` that carries a nonzero one.
pub fn linearized_reduce(
    j: &MonomialIdeal,
    gamma: &Term,
    var: usize,
) -> Result<BTreeMap<Term, LinearForm>> {
    let sys_sous = sous_escalier_all(j)?;
    let g = j
        .generators()
        .iter()
        .position(|x| x == gamma)
        .ok_or_else(|| Error::Domain(format!("{gamma} is not a minimal generator of {j}")))?;
    let top = gamma.min_var()?;
    if var == 0 || var >= top {
        return Err(Error::Domain(format!(
            "x{var} is not greater than min({gamma}) = x{top}"
        )));
    }
    let index = sys_sous
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let sys = TangentSystem {
        ideal: j.clone(),
        sous: sys_sous,
        index,
        rows: Vec::new(),
    };
    Ok(sys
        .equations_for(g, var)
        .into_iter()
        .filter(|(_, r)| !r.is_empty())
        .map(|(m, r)| {
            (
                sys.sous[m].clone(),
                r.into_iter().map(|(c, v)| (sys.parameter(c), v)).collect(),
            )
        })
        .collect())
}

/// Exact tangent dimension with bounds.
pub fn tangent_dim(j: &MonomialIdeal) -> Result<TangentReport> {
    TangentSystem::build(j)?.report()
}

/// `(|B_J| * border count, |B_J| * |N(J)|)`.
pub fn tangent_bounds(j: &MonomialIdeal) -> Result<(usize, usize)> {
    let d = sous_escalier_all(j)?.len();
    let b = j.num_generators();
    Ok((b * j.border_generator_count()?, b * d))
}

impl std::fmt::Display for TangentReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "params: {}", self.param_count)?;
        writeln!(f, "equations: {}", self.equation_count)?;
        writeln!(f, "rank: {}", self.rank)?;
        writeln!(f, "tangent_dim: {}", self.tangent_dim)?;
        writeln!(
            f,
            "bounds: {} <= {} <= {}",
            self.lower_bound, self.tangent_dim, self.upper_bound
        )?;
        write!(f, "lex_dim: {}", self.lex_dim)
    }
}
