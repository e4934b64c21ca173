//! Translation between quantifier-free formulas and explicit semilinear sets.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::formula::{Atom, Formula};
use super::hilbert::solve_nonneg;
use super::term::{Term, Var};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::semilinear::{FinVector, LinearSet, SemilinearSet};

/// Formula over `x0 … x{d-1}` whose natural solutions are exactly `s`.
pub fn semilinear_to_formula(s: &SemilinearSet) -> Formula {
    let d = s.dim();
    let disjuncts = s
        .components()
        .iter()
        .map(|c| {
            let lambdas: Vec<Var> = (0..c.periods().len())
                .map(|k| Var((d + k) as u32))
                .collect();
            let equations = (0..d)
                .map(|j| {
                    let mut rhs = Term::constant(c.base()[j]);
                    for (p, &l) in c.periods().iter().zip(&lambdas) {
                        rhs = rhs.add(&Term::monomial(p[j], l));
                    }
                    Formula::eq(Term::var(Var(j as u32)), rhs)
                })
                .collect();
            Formula::exists_all(lambdas, Formula::and(equations))
        })
        .collect();
    Formula::or(disjuncts)
}

/// The set `{x ∈ ℕ^d : f(x)}` for a quantifier-free `f` over `x0 … x{d-1}`.
pub fn formula_to_semilinear(f: &Formula, dim: usize, limits: &Limits) -> Result<SemilinearSet> {
    if !f.is_quantifier_free() {
        return Err(Error::InvalidFormula(
            "expected a quantifier-free formula".into(),
        ));
    }
    if let Some(v) = f.free_vars().into_iter().find(|v| v.0 as usize >= dim) {
        return Err(Error::InvalidFormula(format!(
            "variable {v} outside dimension {dim}"
        )));
    }
    let mut components = Vec::new();
    for conj in dnf(&f.nnf(), limits)? {
        components.extend(conjunct_to_linear(&conj, dim, limits)?);
    }
    SemilinearSet::new(dim, components)
}

/// Disjunctive normal form as a list of atom conjunctions.
fn dnf(f: &Formula, limits: &Limits) -> Result<Vec<Vec<Atom>>> {
    let cap = |n: usize| -> Result<()> {
        if n > limits.dnf_atoms {
            Err(Error::ResourceCap {
                what: "DNF atoms",
                cap: limits.dnf_atoms,
            })
        } else {
            Ok(())
        }
    };
    let out = match f {
        Formula::True => vec![vec![]],
        Formula::False => vec![],
        Formula::Atom(a) => vec![vec![a.clone()]],
        Formula::Or(gs) => {
            let mut out = Vec::new();
            for g in gs {
                out.extend(dnf(g, limits)?);
                cap(out.iter().map(Vec::len).sum())?;
            }
            out
        }
        Formula::And(gs) => {
            let mut acc: Vec<Vec<Atom>> = vec![vec![]];
            for g in gs {
                let part = dnf(g, limits)?;
                let mut next = Vec::with_capacity(acc.len() * part.len());
                let mut size = 0;
                for a in &acc {
                    for b in &part {
                        let mut c = a.clone();
                        c.extend(b.iter().cloned());
                        size += c.len();
                        cap(size)?;
                        next.push(c);
                    }
                }
                acc = next;
            }
            acc
        }
        Formula::Not(_) | Formula::Exists(..) | Formula::Forall(..) => {
            return Err(Error::InvalidFormula(
                "DNF expects a quantifier-free NNF".into(),
            ));
        }
    };
    Ok(out)
}

fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or(Error::ResourceCap {
        what: "machine-size coefficient",
        cap: i64::MAX as usize,
    })
}

fn conjunct_to_linear(atoms: &[Atom], dim: usize, limits: &Limits) -> Result<Vec<LinearSet>> {
    // per-variable modulus: lcm of the moduli of congruences mentioning it
    let mut moduli = vec![BigInt::one(); dim];
    for a in atoms {
        if let Atom::Dvd(m, t) | Atom::NotDvd(m, t) = a {
            for v in t.vars() {
                let j = v.0 as usize;
                moduli[j] = moduli[j].lcm(m);
            }
        }
    }
    let moduli: Vec<u64> = moduli
        .iter()
        .map(|m| m.to_u64().filter(|&m| m as usize <= limits.dnf_atoms))
        .collect::<Option<_>>()
        .ok_or(Error::ResourceCap {
            what: "residue modulus",
            cap: limits.dnf_atoms,
        })?;
    let count = moduli
        .iter()
        .try_fold(1usize, |acc, &m| acc.checked_mul(m as usize))
        .filter(|&n| n <= limits.dnf_atoms)
        .ok_or(Error::ResourceCap {
            what: "residue vectors",
            cap: limits.dnf_atoms,
        })?;

    // over ℕ an inequality with no positive coefficient and a nonpositive
    // constant always holds, and one with no negative coefficient and a
    // positive constant never does
    let zero = BigInt::ZERO;
    let mut linear: Vec<&Atom> = Vec::new();
    for a in atoms {
        match a {
            Atom::Le(t) => {
                let c = t.constant_part();
                if c <= &zero && t.coeffs().values().all(|k| k <= &zero) {
                    continue;
                }
                if c > &zero && t.coeffs().values().all(|k| k >= &zero) {
                    return Ok(Vec::new());
                }
                linear.push(a);
            }
            Atom::Eq(_) => linear.push(a),
            _ => {}
        }
    }
    // of inequalities sharing a linear part only the tightest matters
    let mut tightest: BTreeMap<&BTreeMap<Var, BigInt>, &Atom> = BTreeMap::new();
    linear.retain(|a| match a {
        Atom::Le(t) => {
            match tightest.get(t.coeffs()) {
                Some(Atom::Le(u)) if u.constant_part() >= t.constant_part() => {}
                _ => {
                    tightest.insert(t.coeffs(), a);
                }
            }
            false
        }
        _ => true,
    });
    linear.extend(tightest.into_values());
    let congruences: Vec<&Atom> = atoms
        .iter()
        .filter(|a| matches!(a, Atom::Dvd(..) | Atom::NotDvd(..)))
        .collect();
    let slack_count = linear.iter().filter(|a| matches!(a, Atom::Le(_))).count();
    let width = dim + slack_count;

    let mut out = Vec::new();
    let mut residue = vec![0u64; dim];
    for idx in 0..count {
        let mut rest = idx;
        for j in 0..dim {
            residue[j] = (rest as u64) % moduli[j];
            rest /= moduli[j] as usize;
        }
        let env = |v: Var| BigInt::from(residue[v.0 as usize]);
        if !congruences.iter().all(|a| a.eval(&env)) {
            continue;
        }
        // x = r + M∘y; each linear atom becomes a row over (y, slack)
        let mut rows = Vec::with_capacity(linear.len());
        let mut rhs = Vec::with_capacity(linear.len());
        let mut slack = dim;
        for a in &linear {
            let t = a.term();
            let mut row = vec![0i64; width];
            for (v, c) in t.coeffs() {
                let j = v.0 as usize;
                row[j] = to_i64(&(c * BigInt::from(moduli[j])))?;
            }
            if let Atom::Le(_) = a {
                row[slack] = 1;
                slack += 1;
            }
            rows.push(row);
            rhs.push(to_i64(&-t.eval(&env))?);
        }
        let (particular, homogeneous) = solve_nonneg(width, &rows, &rhs, limits)?;
        let lift = |y: &[u64], offset: bool| -> FinVector {
            (0..dim)
                .map(|j| y[j] * moduli[j] + if offset { residue[j] } else { 0 })
                .collect()
        };
        let periods: Vec<FinVector> = homogeneous
            .iter()
            .map(|h| lift(h, false))
            .filter(|p| !p.is_zero())
            .collect();
        for p in &particular {
            out.push(LinearSet::new(lift(p, true), periods.clone())?);
        }
    }
    Ok(dedup_sorted(out))
}

fn dedup_sorted(mut v: Vec<LinearSet>) -> Vec<LinearSet> {
    v.sort();
    v.dedup();
    v
}
