use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A variable, printed as `x<N>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u32);

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// Integer linear term `Σ cᵢ·xᵢ + c`.
///
/// Coefficients are stored sparsely and never zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Term {
    coeffs: BTreeMap<Var, BigInt>,
    constant: BigInt,
}

impl Term {
    pub fn zero() -> Self {
        Term::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Term {
            coeffs: BTreeMap::new(),
            constant: c.into(),
        }
    }

    pub fn var(v: Var) -> Self {
        Term::monomial(BigInt::one(), v)
    }

    pub fn monomial(c: impl Into<BigInt>, v: Var) -> Self {
        let mut t = Term::zero();
        t.add_coeff(v, &c.into());
        t
    }

    /// `Σ coeffs[i]·x_i + constant` over the variables `x0, x1, …`.
    pub fn from_dense(coeffs: &[i64], constant: i64) -> Self {
        let mut t = Term::constant(constant);
        for (i, &c) in coeffs.iter().enumerate() {
            t.add_coeff(Var(i as u32), &BigInt::from(c));
        }
        t
    }

    pub fn coeff(&self, v: Var) -> BigInt {
        self.coeffs.get(&v).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &BTreeMap<Var, BigInt> {
        &self.coeffs
    }

    pub fn constant_part(&self) -> &BigInt {
        &self.constant
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mentions(&self, v: Var) -> bool {
        self.coeffs.contains_key(&v)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.coeffs.keys().copied()
    }

    fn add_coeff(&mut self, v: Var, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(v).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&v);
        }
    }

    pub fn add(&self, other: &Term) -> Term {
        let mut t = self.clone();
        for (v, c) in &other.coeffs {
            t.add_coeff(*v, c);
        }
        t.constant += &other.constant;
        t
    }

    pub fn sub(&self, other: &Term) -> Term {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn add_constant(&self, c: &BigInt) -> Term {
        let mut t = self.clone();
        t.constant += c;
        t
    }

    pub fn neg(&self) -> Term {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, k: &BigInt) -> Term {
        if k.is_zero() {
            return Term::zero();
        }
        Term {
            coeffs: self.coeffs.iter().map(|(v, c)| (*v, c * k)).collect(),
            constant: &self.constant * k,
        }
    }

    /// Replaces `v` by `e`.
    pub fn substitute(&self, v: Var, e: &Term) -> Term {
        match self.coeffs.get(&v) {
            None => self.clone(),
            Some(c) => {
                let c = c.clone();
                let mut t = self.clone();
                t.coeffs.remove(&v);
                t.add(&e.scale(&c))
            }
        }
    }

    /// Renames every variable through `f`, which must be injective.
    pub fn rename(&self, f: &dyn Fn(Var) -> Var) -> Term {
        Term {
            coeffs: self
                .coeffs
                .iter()
                .map(|(v, c)| (f(*v), c.clone()))
                .collect(),
            constant: self.constant.clone(),
        }
    }

    /// Sets the coefficient of `v` to `c` (zero removes it).
    pub fn with_coeff(&self, v: Var, c: BigInt) -> Term {
        let mut t = self.clone();
        t.coeffs.remove(&v);
        t.add_coeff(v, &c);
        t
    }

    /// Gcd of the variable coefficients (zero for a constant term).
    pub fn coeff_gcd(&self) -> BigInt {
        self.coeffs.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn eval(&self, env: &dyn Fn(Var) -> BigInt) -> BigInt {
        let mut total = self.constant.clone();
        for (v, c) in &self.coeffs {
            total += c * env(*v);
        }
        total
    }

    /// Divides every coefficient and the constant by `k`, which must divide them all.
    pub(crate) fn div_exact(&self, k: &BigInt) -> Term {
        Term {
            coeffs: self.coeffs.iter().map(|(v, c)| (*v, c / k)).collect(),
            constant: &self.constant / k,
        }
    }

    /// Reduces coefficients and constant modulo `m` into `0..m`.
    pub(crate) fn reduce_mod(&self, m: &BigInt) -> Term {
        let mut t = Term::constant(self.constant.mod_floor(m));
        for (v, c) in &self.coeffs {
            t.add_coeff(*v, &c.mod_floor(m));
        }
        t
    }

    /// Sign of the first coefficient, used to pick a canonical orientation.
    pub(crate) fn leading_sign_negative(&self) -> bool {
        self.coeffs.values().next().is_some_and(|c| c.is_negative())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(v, c)| {
                if c.is_one() {
                    v.to_string()
                } else {
                    format!("(* {c} {v})")
                }
            })
            .collect();
        if !self.constant.is_zero() || parts.is_empty() {
            parts.push(self.constant.to_string());
        }
        if parts.len() == 1 {
            write!(f, "{}", parts[0])
        } else {
            write!(f, "(+ {})", parts.join(" "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_cancels_coefficients() {
        let x = Var(0);
        let y = Var(1);
        let t = Term::monomial(2, x)
            .add(&Term::var(y))
            .add_constant(&BigInt::from(3));
        let u = t.sub(&Term::monomial(2, x));
        assert!(!u.mentions(x));
        assert_eq!(u.coeff(y), BigInt::one());
        assert_eq!(
            t.substitute(x, &Term::constant(5)).constant_part(),
            &BigInt::from(13)
        );
        assert_eq!(t.coeff_gcd(), BigInt::one());
    }

    #[test]
    fn display_is_sexpr() {
        let t = Term::from_dense(&[2, 1], -1);
        assert_eq!(t.to_string(), "(+ (* 2 x0) x1 -1)");
        assert_eq!(Term::zero().to_string(), "0");
    }
}
