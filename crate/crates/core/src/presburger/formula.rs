use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::term::{Term, Var};
use crate::error::{Error, Result};

/// Atomic constraints. All variables range over ℕ in the public semantics.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// `t ≤ 0`
    Le(Term),
    /// `t = 0`
    Eq(Term),
    /// `m | t`, with `m ≥ 2`
    Dvd(BigInt, Term),
    /// `¬(m | t)`, with `m ≥ 2`
    NotDvd(BigInt, Term),
}

impl Atom {
    pub fn term(&self) -> &Term {
        match self {
            Atom::Le(t) | Atom::Eq(t) | Atom::Dvd(_, t) | Atom::NotDvd(_, t) => t,
        }
    }

    pub fn mentions(&self, v: Var) -> bool {
        self.term().mentions(v)
    }

    pub fn eval(&self, env: &dyn Fn(Var) -> BigInt) -> bool {
        match self {
            Atom::Le(t) => !t.eval(env).is_positive(),
            Atom::Eq(t) => t.eval(env).is_zero(),
            Atom::Dvd(m, t) => t.eval(env).is_multiple_of(m),
            Atom::NotDvd(m, t) => !t.eval(env).is_multiple_of(m),
        }
    }

    /// Canonical form of the atom, or a constant if it became trivial.
    pub fn normalize(self) -> Formula {
        match self {
            Atom::Le(t) => {
                if t.is_constant() {
                    return Formula::constant(!t.constant_part().is_positive());
                }
                let g = t.coeff_gcd();
                if g.is_one() {
                    return Formula::Atom(Atom::Le(t));
                }
                // Σ a·x + c ≤ 0  ⇔  Σ (a/g)·x + ⌈c/g⌉ ≤ 0
                let c = t.constant_part().div_ceil(&g);
                let rest = t.add_constant(&-t.constant_part()).div_exact(&g);
                Formula::Atom(Atom::Le(rest.add_constant(&c)))
            }
            Atom::Eq(t) => {
                if t.is_constant() {
                    return Formula::constant(t.constant_part().is_zero());
                }
                let g = t.coeff_gcd();
                if !t.constant_part().is_multiple_of(&g) {
                    return Formula::False;
                }
                let mut t = t.div_exact(&g);
                if t.leading_sign_negative() {
                    t = t.neg();
                }
                Formula::Atom(Atom::Eq(t))
            }
            Atom::Dvd(m, t) => normalize_dvd(m, t, true),
            Atom::NotDvd(m, t) => normalize_dvd(m, t, false),
        }
    }

    /// Negation as a formula without `Not`.
    pub fn negate(&self) -> Formula {
        match self {
            // ¬(t ≤ 0) ⇔ -t + 1 ≤ 0
            Atom::Le(t) => Atom::Le(t.neg().add_constant(&BigInt::one())).normalize(),
            Atom::Eq(t) => Formula::or(vec![
                Atom::Le(t.add_constant(&BigInt::one())).normalize(),
                Atom::Le(t.neg().add_constant(&BigInt::one())).normalize(),
            ]),
            Atom::Dvd(m, t) => Atom::NotDvd(m.clone(), t.clone()).normalize(),
            Atom::NotDvd(m, t) => Atom::Dvd(m.clone(), t.clone()).normalize(),
        }
    }

    pub(crate) fn map_term(&self, f: impl Fn(&Term) -> Term) -> Atom {
        match self {
            Atom::Le(t) => Atom::Le(f(t)),
            Atom::Eq(t) => Atom::Eq(f(t)),
            Atom::Dvd(m, t) => Atom::Dvd(m.clone(), f(t)),
            Atom::NotDvd(m, t) => Atom::NotDvd(m.clone(), f(t)),
        }
    }
}

fn normalize_dvd(m: BigInt, t: Term, positive: bool) -> Formula {
    let m = m.abs();
    if m.is_zero() {
        // 0 | t  ⇔  t = 0
        let eq = Atom::Eq(t).normalize();
        return if positive { eq } else { eq.not().nnf() };
    }
    let t = t.reduce_mod(&m);
    let g = t.coeff_gcd().gcd(t.constant_part()).gcd(&m);
    let (m, t) = if g.is_one() || g.is_zero() {
        (m, t)
    } else {
        (&m / &g, t.div_exact(&g))
    };
    if m.is_one() {
        return Formula::constant(positive);
    }
    if t.is_constant() {
        let holds = t.constant_part().is_zero();
        return Formula::constant(holds == positive);
    }
    Formula::Atom(if positive {
        Atom::Dvd(m, t)
    } else {
        Atom::NotDvd(m, t)
    })
}

/// Presburger formulas over natural-number variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    True,
    False,
    Atom(Atom),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Exists(Var, Box<Formula>),
    Forall(Var, Box<Formula>),
}

impl Formula {
    pub fn constant(b: bool) -> Formula {
        if b {
            Formula::True
        } else {
            Formula::False
        }
    }

    /// `l ≤ r`
    pub fn le(l: Term, r: Term) -> Formula {
        Atom::Le(l.sub(&r)).normalize()
    }

    /// `l < r`
    pub fn lt(l: Term, r: Term) -> Formula {
        Atom::Le(l.sub(&r).add_constant(&BigInt::one())).normalize()
    }

    /// `l ≥ r`
    pub fn ge(l: Term, r: Term) -> Formula {
        Formula::le(r, l)
    }

    /// `l = r`
    pub fn eq(l: Term, r: Term) -> Formula {
        Atom::Eq(l.sub(&r)).normalize()
    }

    /// `t ≡ c (mod m)`, `m ≥ 1`.
    pub fn congruent(t: Term, c: impl Into<BigInt>, m: impl Into<BigInt>) -> Formula {
        Atom::Dvd(m.into(), t.add_constant(&-c.into())).normalize()
    }

    pub fn and(parts: Vec<Formula>) -> Formula {
        let mut out = Vec::new();
        for p in parts {
            match p {
                Formula::True => {}
                Formula::False => return Formula::False,
                Formula::And(inner) => out.extend(inner),
                other => out.push(other),
            }
        }
        out.sort();
        out.dedup();
        match out.len() {
            0 => Formula::True,
            1 => out.pop().unwrap(),
            _ => Formula::And(out),
        }
    }

    pub fn or(parts: Vec<Formula>) -> Formula {
        let mut out = Vec::new();
        for p in parts {
            match p {
                Formula::False => {}
                Formula::True => return Formula::True,
                Formula::Or(inner) => out.extend(inner),
                other => out.push(other),
            }
        }
        out.sort();
        out.dedup();
        match out.len() {
            0 => Formula::False,
            1 => out.pop().unwrap(),
            _ => Formula::Or(out),
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Formula {
        match self {
            Formula::True => Formula::False,
            Formula::False => Formula::True,
            Formula::Not(inner) => *inner,
            other => Formula::Not(Box::new(other)),
        }
    }

    pub fn implies(self, other: Formula) -> Formula {
        Formula::or(vec![self.not(), other])
    }

    pub fn exists(v: Var, body: Formula) -> Formula {
        Formula::Exists(v, Box::new(body))
    }

    pub fn forall(v: Var, body: Formula) -> Formula {
        Formula::Forall(v, Box::new(body))
    }

    pub fn exists_all(vars: impl IntoIterator<Item = Var>, body: Formula) -> Formula {
        let vars: Vec<Var> = vars.into_iter().collect();
        vars.into_iter()
            .rev()
            .fold(body, |f, v| Formula::exists(v, f))
    }

    pub fn forall_all(vars: impl IntoIterator<Item = Var>, body: Formula) -> Formula {
        let vars: Vec<Var> = vars.into_iter().collect();
        vars.into_iter()
            .rev()
            .fold(body, |f, v| Formula::forall(v, f))
    }

    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<Var>, out: &mut BTreeSet<Var>) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Atom(a) => {
                out.extend(a.term().vars().filter(|v| !bound.contains(v)));
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(fs) | Formula::Or(fs) => {
                for f in fs {
                    f.collect_free(bound, out);
                }
            }
            Formula::Exists(v, f) | Formula::Forall(v, f) => {
                bound.push(*v);
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Every variable occurring anywhere, bound or free.
    pub fn all_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.visit_atoms(&mut |a| out.extend(a.term().vars()));
        self.visit_binders(&mut |v| {
            out.insert(v);
        });
        out
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => true,
            Formula::Not(f) => f.is_quantifier_free(),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().all(Formula::is_quantifier_free),
            Formula::Exists(..) | Formula::Forall(..) => false,
        }
    }

    pub fn visit_atoms(&self, f: &mut dyn FnMut(&Atom)) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Atom(a) => f(a),
            Formula::Not(g) | Formula::Exists(_, g) | Formula::Forall(_, g) => g.visit_atoms(f),
            Formula::And(gs) | Formula::Or(gs) => {
                for g in gs {
                    g.visit_atoms(f);
                }
            }
        }
    }

    fn visit_binders(&self, f: &mut dyn FnMut(Var)) {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => {}
            Formula::Not(g) => g.visit_binders(f),
            Formula::Exists(v, g) | Formula::Forall(v, g) => {
                f(*v);
                g.visit_binders(f);
            }
            Formula::And(gs) | Formula::Or(gs) => {
                for g in gs {
                    g.visit_binders(f);
                }
            }
        }
    }

    /// Rebuilds the formula with every atom replaced by `f(atom)`.
    pub fn map_atoms(&self, f: &dyn Fn(&Atom) -> Formula) -> Formula {
        match self {
            Formula::True => Formula::True,
            Formula::False => Formula::False,
            Formula::Atom(a) => f(a),
            Formula::Not(g) => g.map_atoms(f).not(),
            Formula::And(gs) => Formula::and(gs.iter().map(|g| g.map_atoms(f)).collect()),
            Formula::Or(gs) => Formula::or(gs.iter().map(|g| g.map_atoms(f)).collect()),
            Formula::Exists(v, g) => Formula::exists(*v, g.map_atoms(f)),
            Formula::Forall(v, g) => Formula::forall(*v, g.map_atoms(f)),
        }
    }

    /// Renames every variable, bound or free, through the injective `f`.
    pub fn rename(&self, f: &dyn Fn(Var) -> Var) -> Formula {
        match self {
            Formula::True | Formula::False => self.clone(),
            Formula::Atom(a) => Formula::Atom(a.map_term(|t| t.rename(f))),
            Formula::Not(g) => Formula::Not(Box::new(g.rename(f))),
            Formula::And(gs) => Formula::And(gs.iter().map(|g| g.rename(f)).collect()),
            Formula::Or(gs) => Formula::Or(gs.iter().map(|g| g.rename(f)).collect()),
            Formula::Exists(v, g) => Formula::exists(f(*v), g.rename(f)),
            Formula::Forall(v, g) => Formula::forall(f(*v), g.rename(f)),
        }
    }

    /// Substitutes a term for a free variable in a quantifier-free formula.
    pub fn substitute(&self, v: Var, e: &Term) -> Formula {
        self.map_atoms(&|a| {
            if a.mentions(v) {
                a.map_term(|t| t.substitute(v, e)).normalize()
            } else {
                Formula::Atom(a.clone())
            }
        })
    }

    /// Negation normal form of a quantifier-free formula: no `Not` nodes.
    pub fn nnf(&self) -> Formula {
        self.nnf_polarity(true)
    }

    fn nnf_polarity(&self, positive: bool) -> Formula {
        match self {
            Formula::True => Formula::constant(positive),
            Formula::False => Formula::constant(!positive),
            Formula::Atom(a) => {
                if positive {
                    a.clone().normalize()
                } else {
                    a.negate()
                }
            }
            Formula::Not(g) => g.nnf_polarity(!positive),
            Formula::And(gs) => {
                let parts = gs.iter().map(|g| g.nnf_polarity(positive)).collect();
                if positive {
                    Formula::and(parts)
                } else {
                    Formula::or(parts)
                }
            }
            Formula::Or(gs) => {
                let parts = gs.iter().map(|g| g.nnf_polarity(positive)).collect();
                if positive {
                    Formula::or(parts)
                } else {
                    Formula::and(parts)
                }
            }
            Formula::Exists(v, g) => {
                let body = g.nnf_polarity(positive);
                if positive {
                    Formula::exists(*v, body)
                } else {
                    Formula::forall(*v, body)
                }
            }
            Formula::Forall(v, g) => {
                let body = g.nnf_polarity(positive);
                if positive {
                    Formula::forall(*v, body)
                } else {
                    Formula::exists(*v, body)
                }
            }
        }
    }

    /// Truth of a quantifier-free formula under `env`.
    pub fn eval(&self, env: &dyn Fn(Var) -> BigInt) -> Result<bool> {
        if !self.is_quantifier_free() {
            return Err(Error::InvalidFormula(
                "eval needs a quantifier-free formula".into(),
            ));
        }
        Ok(self.eval_bounded(env, 0))
    }

    /// Truth with every quantifier ranging over `0..=bound` only.
    ///
    /// This is exact for quantifier-free formulas and for formulas whose
    /// quantified witnesses are known to stay below `bound`.
    pub fn eval_bounded(&self, env: &dyn Fn(Var) -> BigInt, bound: u32) -> bool {
        match self {
            Formula::True => true,
            Formula::False => false,
            Formula::Atom(a) => a.eval(env),
            Formula::Not(g) => !g.eval_bounded(env, bound),
            Formula::And(gs) => gs.iter().all(|g| g.eval_bounded(env, bound)),
            Formula::Or(gs) => gs.iter().any(|g| g.eval_bounded(env, bound)),
            Formula::Exists(v, g) => (0..=bound).any(|k| {
                let env2 = |w: Var| if w == *v { BigInt::from(k) } else { env(w) };
                g.eval_bounded(&env2, bound)
            }),
            Formula::Forall(v, g) => (0..=bound).all(|k| {
                let env2 = |w: Var| if w == *v { BigInt::from(k) } else { env(w) };
                g.eval_bounded(&env2, bound)
            }),
        }
    }

    /// Number of atom occurrences.
    pub fn size(&self) -> usize {
        let mut n = 0;
        self.visit_atoms(&mut |_| n += 1);
        n
    }

    /// Parses the s-expression debug syntax, see [`super::parse`].
    pub fn parse(text: &str) -> Result<Formula> {
        super::sexpr::parse_formula(text)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Le(t) => write!(f, "(<= {t} 0)"),
            Atom::Eq(t) => write!(f, "(= {t} 0)"),
            Atom::Dvd(m, t) => write!(f, "(cong {t} 0 {m})"),
            Atom::NotDvd(m, t) => write!(f, "(not (cong {t} 0 {m}))"),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::True => write!(f, "true"),
            Formula::False => write!(f, "false"),
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Not(g) => write!(f, "(not {g})"),
            Formula::And(gs) | Formula::Or(gs) => {
                write!(
                    f,
                    "({}",
                    if matches!(self, Formula::And(_)) {
                        "and"
                    } else {
                        "or"
                    }
                )?;
                for g in gs {
                    write!(f, " {g}")?;
                }
                write!(f, ")")
            }
            Formula::Exists(v, g) => write!(f, "(exists {v} {g})"),
            Formula::Forall(v, g) => write!(f, "(forall {v} {g})"),
        }
    }
}
