#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use arlex::linalg::{sparse_rank, SparseRow};
use arlex::{enumerate_terms, MonomialIdeal, Term};
use num_bigint::BigInt;

/// All terms of degree at most `t` in `n` variables.
pub fn terms_upto(n: usize, t: u32) -> Vec<Term> {
    (0..=t).flat_map(|d| enumerate_terms(n, d)).collect()
}

/// Every nonempty order ideal (set of terms closed under division) of size
/// at most `max` in `n` variables, each given by its monomial ideal.
pub fn artinian_ideals(n: usize, max: usize) -> Vec<MonomialIdeal> {
    let mut seen: HashSet<BTreeSet<Term>> = HashSet::new();
    let start: BTreeSet<Term> = [Term::one(n)].into_iter().collect();
    let mut frontier = vec![start.clone()];
    seen.insert(start);
    while let Some(set) = frontier.pop() {
        if set.len() == max {
            continue;
        }
        for t in corners(n, &set) {
            let mut next = set.clone();
            next.insert(t);
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    seen.into_iter().map(|s| ideal_of(n, &s)).collect()
}

/// Terms outside `set` all of whose variable-divisors lie in `set`.
fn corners(n: usize, set: &BTreeSet<Term>) -> Vec<Term> {
    let mut out = BTreeSet::new();
    for t in set {
        for i in 1..=n {
            let c = t.mul_var(i);
            if set.contains(&c) {
                continue;
            }
            let ok = (1..=n).all(|k| {
                c.exponent(k) == 0 || set.contains(&c.quotient(&Term::var(n, k)).unwrap())
            });
            if ok {
                out.insert(c);
            }
        }
    }
    out.into_iter().collect()
}

/// The monomial ideal whose sous-escalier is the order ideal `set`.
pub fn ideal_of(n: usize, set: &BTreeSet<Term>) -> MonomialIdeal {
    let gens: Vec<Term> = corners(n, set);
    MonomialIdeal::minimalize(n, gens).unwrap()
}

/// All Artinian stable ideals with colength at most `max`.
pub fn stable_artinian(n: usize, max: usize) -> Vec<MonomialIdeal> {
    let mut v: Vec<MonomialIdeal> = artinian_ideals(n, max)
        .into_iter()
        .filter(|j| j.is_stable())
        .collect();
    v.sort_by_key(|j| j.to_string());
    v
}

/// `dim Hom_R(J, R/J)` from the pairwise syzygy conditions on the generators.
pub fn hom_dim(j: &MonomialIdeal) -> usize {
    let n = j.nvars();
    let top = j.max_generator_degree().unwrap();
    let sous: Vec<Term> = terms_upto(n, top)
        .into_iter()
        .filter(|t| !j.contains(t))
        .collect();
    let index: HashMap<&Term, usize> = sous.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let gens = j.generators();
    let d = sous.len();
    let mut rows = Vec::new();
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            let lcm = Term::new(
                gens[a]
                    .exponents()
                    .iter()
                    .zip(gens[b].exponents())
                    .map(|(x, y)| *x.max(y))
                    .collect(),
            );
            let ma = lcm.quotient(&gens[a]).unwrap();
            let mb = lcm.quotient(&gens[b]).unwrap();
            let mut eqs: HashMap<usize, SparseRow> = HashMap::new();
            for (k, beta) in sous.iter().enumerate() {
                if let Some(&m) = index.get(&ma.mul(beta).unwrap()) {
                    *eqs.entry(m)
                        .or_default()
                        .entry(a * d + k)
                        .or_insert_with(|| BigInt::from(0)) += 1;
                }
                if let Some(&m) = index.get(&mb.mul(beta).unwrap()) {
                    *eqs.entry(m)
                        .or_default()
                        .entry(b * d + k)
                        .or_insert_with(|| BigInt::from(0)) -= 1;
                }
            }
            rows.extend(eqs.into_values());
        }
    }
    gens.len() * d - sparse_rank(&rows)
}

/// The strongly stable ideal generated by the Borel closure of `seeds`,
/// plus `x_n^cap` so that it is Artinian.
pub fn borel_ideal(n: usize, seeds: &[Term], cap: u32) -> MonomialIdeal {
    let mut all: HashSet<Term> = HashSet::new();
    let mut stack: Vec<Term> = seeds.iter().filter(|s| !s.is_one()).cloned().collect();
    stack.push(Term::pure_power(n, n, cap));
    while let Some(t) = stack.pop() {
        if !all.insert(t.clone()) {
            continue;
        }
        for i in 2..=n {
            if t.exponent(i) > 0 {
                let mut e = t.exponents().to_vec();
                e[i - 1] -= 1;
                e[i - 2] += 1;
                stack.push(Term::new(e));
            }
        }
    }
    MonomialIdeal::minimalize(n, all).unwrap()
}
