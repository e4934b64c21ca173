//! Cooper's quantifier elimination, specialised to natural-number variables.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::formula::{Atom, Formula};
use super::term::{Term, Var};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Equivalent quantifier-free formula over ℕ.
///
/// Fails only when an intermediate formula grows past `limits.dnf_atoms`
/// atom occurrences.
pub fn cooper_eliminate(f: &Formula, limits: &Limits) -> Result<Formula> {
    let out = qe(f, limits)?;
    Ok(out.nnf())
}

/// Truth value of a sentence over ℕ.
pub fn decide_sentence(f: &Formula, limits: &Limits) -> Result<bool> {
    let free = f.free_vars();
    if let Some(v) = free.iter().next() {
        return Err(Error::InvalidFormula(format!(
            "sentence has free variable {v}"
        )));
    }
    match cooper_eliminate(f, limits)? {
        Formula::True => Ok(true),
        Formula::False => Ok(false),
        other => Err(Error::InvalidFormula(format!(
            "elimination left a non-constant residue: {other}"
        ))),
    }
}

fn qe(f: &Formula, limits: &Limits) -> Result<Formula> {
    let out = match f {
        Formula::True | Formula::False => f.clone(),
        Formula::Atom(a) => a.clone().normalize(),
        Formula::Not(g) => qe(g, limits)?.not().nnf(),
        Formula::And(gs) => Formula::and(gs.iter().map(|g| qe(g, limits)).collect::<Result<_>>()?),
        Formula::Or(gs) => Formula::or(gs.iter().map(|g| qe(g, limits)).collect::<Result<_>>()?),
        Formula::Exists(x, g) => {
            let body = qe(g, limits)?.nnf();
            exists_nat(*x, &body, limits)?
        }
        Formula::Forall(x, g) => {
            let body = qe(g, limits)?.not().nnf();
            exists_nat(*x, &body, limits)?.not().nnf()
        }
    };
    check_size(&out, limits)?;
    Ok(out)
}

fn check_size(f: &Formula, limits: &Limits) -> Result<()> {
    if f.size() > limits.dnf_atoms {
        return Err(Error::ResourceCap {
            what: "formula atoms during quantifier elimination",
            cap: limits.dnf_atoms,
        });
    }
    Ok(())
}

/// `∃x ∈ ℕ. φ` for a quantifier-free formula in negation normal form.
fn exists_nat(x: Var, phi: &Formula, limits: &Limits) -> Result<Formula> {
    if let Formula::Or(parts) = phi {
        let mut out = Vec::with_capacity(parts.len());
        for p in parts {
            out.push(exists_nat(x, p, limits)?);
        }
        return Ok(Formula::or(out));
    }
    if !mentions(phi, x) {
        return Ok(phi.clone());
    }
    let guard = Formula::Atom(Atom::Le(Term::monomial(-1, x)));
    let phi = Formula::and(vec![phi.clone(), guard]);
    if let Some(r) = substitute_equation(x, &phi) {
        return Ok(r);
    }
    exists_int(x, &phi, limits)
}

fn mentions(f: &Formula, x: Var) -> bool {
    let mut hit = false;
    f.visit_atoms(&mut |a| hit |= a.mentions(x));
    hit
}

/// Uses a top-level conjunct `a·x + r = 0` to eliminate `x` by substitution.
fn substitute_equation(x: Var, phi: &Formula) -> Option<Formula> {
    let conjuncts = match phi {
        Formula::And(cs) => cs.as_slice(),
        other => std::slice::from_ref(other),
    };
    let eq = conjuncts.iter().find_map(|c| match c {
        Formula::Atom(Atom::Eq(t)) if t.mentions(x) => Some(t.clone()),
        _ => None,
    })?;
    let a = eq.coeff(x);
    let abs_a = a.abs();
    let r = eq.with_coeff(x, BigInt::zero());
    // |a|·x = -sign(a)·r
    let ax = if a.is_positive() { r.neg() } else { r.clone() };
    let rewrite = |t: &Term| -> Term {
        let c = t.coeff(x);
        t.with_coeff(x, BigInt::zero())
            .scale(&abs_a)
            .add(&ax.scale(&c))
    };
    let body = phi.map_atoms(&|atom| {
        if !atom.mentions(x) {
            return Formula::Atom(atom.clone());
        }
        match atom {
            Atom::Dvd(m, t) => Atom::Dvd(m * &abs_a, rewrite(t)).normalize(),
            Atom::NotDvd(m, t) => Atom::NotDvd(m * &abs_a, rewrite(t)).normalize(),
            other => other.map_term(rewrite).normalize(),
        }
    });
    let divides = Atom::Dvd(abs_a, r).normalize();
    Some(Formula::and(vec![divides, body]))
}

/// Scales every atom so that `x` occurs with coefficient ±1 in its
/// inequalities and equations, introducing `l | x` for the common multiple `l`.
fn unitize(x: Var, phi: &Formula) -> Formula {
    let mut l = BigInt::one();
    phi.visit_atoms(&mut |a| {
        let c = a.term().coeff(x);
        if !c.is_zero() {
            l = l.lcm(&c);
        }
    });
    if l.is_one() {
        return phi.clone();
    }
    let scaled = phi.map_atoms(&|atom| {
        let c = atom.term().coeff(x);
        if c.is_zero() {
            return Formula::Atom(atom.clone());
        }
        let k = &l / c.abs();
        let unit = if c.is_positive() {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let t = atom.term().scale(&k).with_coeff(x, unit);
        let a = match atom {
            Atom::Le(_) => Atom::Le(t),
            Atom::Eq(_) => Atom::Eq(t),
            Atom::Dvd(m, _) => Atom::Dvd(m * &k, t),
            Atom::NotDvd(m, _) => Atom::NotDvd(m * &k, t),
        };
        // inequalities keep their unit coefficient through normalization
        a.normalize()
    });
    Formula::and(vec![scaled, Atom::Dvd(l, Term::var(x)).normalize()])
}

/// Bound collected from an atom with unit coefficient on `x`.
enum Bound {
    Lower(Term),
    Upper(Term),
    Both(Term),
}

fn bound_of(x: Var, atom: &Atom) -> Option<Bound> {
    let t = atom.term();
    let c = t.coeff(x);
    if c.is_zero() {
        return None;
    }
    let rest = t.with_coeff(x, BigInt::zero());
    match atom {
        // x + s ≤ 0  ⇒ x ≤ -s;   -x + s ≤ 0 ⇒ x ≥ s
        Atom::Le(_) if c.is_positive() => Some(Bound::Upper(rest.neg())),
        Atom::Le(_) => Some(Bound::Lower(rest)),
        Atom::Eq(_) => Some(Bound::Both(if c.is_positive() { rest.neg() } else { rest })),
        _ => None,
    }
}

fn exists_int(x: Var, phi: &Formula, limits: &Limits) -> Result<Formula> {
    let phi = unitize(x, phi);
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut delta = BigInt::one();
    phi.visit_atoms(&mut |a| match a {
        Atom::Dvd(m, t) | Atom::NotDvd(m, t) if t.mentions(x) => delta = delta.lcm(m),
        _ => match bound_of(x, a) {
            Some(Bound::Lower(e)) => lower.push(e),
            Some(Bound::Upper(e)) => upper.push(e),
            Some(Bound::Both(e)) => {
                lower.push(e.clone());
                upper.push(e);
            }
            None => {}
        },
    });
    lower.sort();
    lower.dedup();
    upper.sort();
    upper.dedup();

    // pick the side with fewer test points
    let from_below = lower.len() <= upper.len();
    let (bounds, sign) = if from_below {
        (lower, 1i64)
    } else {
        (upper, -1i64)
    };
    let infinite = phi.map_atoms(&|a| match bound_of(x, a) {
        Some(Bound::Both(_)) => Formula::False,
        Some(Bound::Lower(_)) => Formula::constant(!from_below),
        Some(Bound::Upper(_)) => Formula::constant(from_below),
        None => Formula::Atom(a.clone()),
    });

    let steps: u64 = delta.clone().try_into().map_err(|_| Error::ResourceCap {
        what: "divisibility period during quantifier elimination",
        cap: limits.dnf_atoms,
    })?;
    let mut disjuncts = Vec::new();
    let mut budget = 0usize;
    for j in 0..steps {
        let shift: BigInt = BigInt::from(j) * sign;
        disjuncts.push(infinite.substitute(x, &Term::constant(shift.clone())));
        for e in &bounds {
            let d = phi.substitute(x, &e.add_constant(&shift));
            budget += d.size();
            disjuncts.push(d);
        }
        if budget > limits.dnf_atoms {
            return Err(Error::ResourceCap {
                what: "formula atoms during quantifier elimination",
                cap: limits.dnf_atoms,
            });
        }
    }
    Ok(Formula::or(disjuncts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn p(s: &str) -> Formula {
        Formula::parse(s).unwrap()
    }

    fn env1(y: i64) -> impl Fn(Var) -> BigInt {
        move |_| BigInt::from(y)
    }

    #[test]
    fn halving_gives_parity() {
        let f = p("(exists x1 (= (* 2 x1) x0))");
        let g = cooper_eliminate(&f, &lim()).unwrap();
        assert!(g.is_quantifier_free());
        for y in 0..=16 {
            assert_eq!(g.eval(&env1(y)).unwrap(), y % 2 == 0, "y={y}");
        }
    }

    #[test]
    fn no_negative_naturals() {
        let f = p("(exists x0 (= (+ x0 1) 0))");
        assert_eq!(cooper_eliminate(&f, &lim()).unwrap(), Formula::False);
    }

    #[test]
    fn successor_exists() {
        assert!(decide_sentence(&p("(forall x0 (exists x1 (= x1 (+ x0 1))))"), &lim()).unwrap());
        // predecessor does not exist for 0
        assert!(!decide_sentence(&p("(forall x0 (exists x1 (= x0 (+ x1 1))))"), &lim()).unwrap());
    }

    #[test]
    fn sentences() {
        let l = lim();
        assert!(decide_sentence(&p("(forall (x0 x1) (= (+ x0 x1) (+ x1 x0)))"), &l).unwrap());
        assert!(!decide_sentence(&p("(exists x0 (and (cong x0 1 2) (cong x0 0 2)))"), &l).unwrap());
        assert!(decide_sentence(
            &p("(forall x0 (=> (cong x0 0 2) (exists x1 (= x0 (* 2 x1)))))"),
            &l
        )
        .unwrap());
        // Frobenius: every n ≥ 12 is 4a + 5b, 11 is not
        assert!(decide_sentence(
            &p("(forall x0 (=> (>= x0 12) (exists (x1 x2) (= x0 (+ (* 4 x1) (* 5 x2))))))"),
            &l
        )
        .unwrap());
        assert!(!decide_sentence(&p("(exists (x1 x2) (= 11 (+ (* 4 x1) (* 5 x2))))"), &l).unwrap());
    }

    #[test]
    fn free_variables_rejected() {
        assert!(matches!(
            decide_sentence(&p("(<= x0 3)"), &lim()),
            Err(Error::InvalidFormula(_))
        ));
    }

    #[test]
    fn strict_bounds_between_variables() {
        // ∃z. x < z < y  ⇔  x + 2 ≤ y
        let f = p("(exists x2 (and (< x0 x2) (< x2 x1)))");
        let g = cooper_eliminate(&f, &lim()).unwrap();
        for a in 0..8i64 {
            for b in 0..8i64 {
                let env = |v: Var| BigInt::from(if v.0 == 0 { a } else { b });
                assert_eq!(g.eval(&env).unwrap(), a + 2 <= b, "{a} {b}");
            }
        }
    }

    #[test]
    fn tiny_cap_reports_resource_error() {
        let f = p("(exists (x1 x2) (and (= x0 (+ (* 3 x1) (* 7 x2))) (cong x1 1 5)))");
        let err = cooper_eliminate(&f, &Limits::uniform(2)).unwrap_err();
        assert!(err.is_resource_cap());
    }
}
