use super::set::{LinearSet, SemilinearSet};
use super::vector::FinVector;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::presburger::{
    cooper_eliminate, decide_sentence, formula_to_semilinear, semilinear_to_formula, solve_nonneg,
    Formula, Var,
};

fn same_dim(s: &SemilinearSet, t: &SemilinearSet) -> Result<()> {
    s.check_dim(t.dim())
}

fn to_i64(x: u64) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::ResourceCap {
        what: "machine-size coefficient",
        cap: i64::MAX as usize,
    })
}

/// `s ∩ t`, computed per pair of linear components.
pub fn sl_intersect(
    s: &SemilinearSet,
    t: &SemilinearSet,
    limits: &Limits,
) -> Result<SemilinearSet> {
    same_dim(s, t)?;
    let mut out = Vec::new();
    for a in s.components() {
        for b in t.components() {
            out.extend(intersect_linear(a, b, limits)?);
        }
    }
    Ok(SemilinearSet::new(s.dim(), out)?.simplified())
}

/// Solves `b₁ + P₁λ = b₂ + P₂μ` and maps each solution family back to `x`.
fn intersect_linear(a: &LinearSet, b: &LinearSet, limits: &Limits) -> Result<Vec<LinearSet>> {
    let d = a.dim();
    let n1 = a.periods().len();
    let n2 = b.periods().len();
    let mut rows = Vec::with_capacity(d);
    let mut rhs = Vec::with_capacity(d);
    for j in 0..d {
        let mut row = Vec::with_capacity(n1 + n2);
        for p in a.periods() {
            row.push(to_i64(p[j])?);
        }
        for p in b.periods() {
            row.push(-to_i64(p[j])?);
        }
        rows.push(row);
        rhs.push(to_i64(b.base()[j])? - to_i64(a.base()[j])?);
    }
    let (particular, homogeneous) = solve_nonneg(n1 + n2, &rows, &rhs, limits)?;
    let image = |lambda: &[u64]| -> FinVector {
        a.periods()
            .iter()
            .zip(lambda)
            .fold(FinVector::zero(d), |acc, (p, &k)| acc.add(&p.scale(k)))
    };
    let periods: Vec<FinVector> = homogeneous.iter().map(|h| image(&h[..n1])).collect();
    particular
        .iter()
        .map(|p| LinearSet::new(a.base().add(&image(&p[..n1])), periods.clone()))
        .collect()
}

/// `ℕ^d ∖ s`.
pub fn sl_complement(s: &SemilinearSet, limits: &Limits) -> Result<SemilinearSet> {
    if s.is_empty() {
        return Ok(SemilinearSet::full(s.dim()));
    }
    if s.components().iter().any(LinearSet::is_full) {
        return Ok(SemilinearSet::empty(s.dim()));
    }
    // one linear piece at a time keeps each normal form small, and folding
    // the smallest complements first keeps the running intersection small
    let mut outsides = Vec::new();
    for c in s.simplified().components() {
        let piece = SemilinearSet::linear(c.clone());
        let phi = cooper_eliminate(&semilinear_to_formula(&piece), limits)?;
        outsides.push(formula_to_semilinear(&phi.not().nnf(), s.dim(), limits)?.simplified());
    }
    outsides.sort_by_key(|o| o.components().len());
    let mut acc = SemilinearSet::full(s.dim());
    for outside in &outsides {
        acc = sl_intersect(&acc, outside, limits)?;
        if acc.is_empty() {
            break;
        }
    }
    Ok(acc)
}

/// `s ⊆ t`.
pub fn sl_inclusion(s: &SemilinearSet, t: &SemilinearSet, limits: &Limits) -> Result<bool> {
    same_dim(s, t)?;
    // cheap sufficient check first
    if s.components()
        .iter()
        .all(|c| t.components().iter().any(|e| c.syntactically_within(e)))
    {
        return Ok(true);
    }
    // a base outside t is a counterexample
    for c in s.components() {
        if !t.contains(c.base())? {
            return Ok(false);
        }
    }
    // s ⊆ t exactly when s misses the complement of t
    match sl_complement(t, limits) {
        Ok(outside) => {
            for a in s.components() {
                for b in outside.components() {
                    if !intersect_linear(a, b, limits)?.is_empty() {
                        return Ok(false);
                    }
                }
            }
            return Ok(true);
        }
        Err(e) if e.is_resource_cap() => {}
        Err(e) => return Err(e),
    }
    let d = s.dim();
    // the two existential blocks live in separate scopes, so their bound names may coincide
    let body = semilinear_to_formula(s).implies(semilinear_to_formula(t));
    let sentence = Formula::forall_all((0..d).map(|j| Var(j as u32)), body);
    decide_sentence(&sentence, limits)
}

/// `s = t` as sets.
pub fn sl_equivalent(s: &SemilinearSet, t: &SemilinearSet, limits: &Limits) -> Result<bool> {
    Ok(sl_inclusion(s, t, limits)? && sl_inclusion(t, s, limits)?)
}
