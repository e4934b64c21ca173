//! Debug text syntax for formulas.
//!
//! ```text
//! formula := true | false
//!          | (<= t t) | (< t t) | (>= t t) | (> t t) | (= t t)
//!          | (cong t c m)                     ; t ≡ c (mod m)
//!          | (not f) | (and f…) | (or f…) | (=> f f)
//!          | (exists x f) | (exists (x…) f) | (forall …)
//! term    := integer | x<N> | (+ t…) | (- t) | (- t t…) | (* k t)
//! ```

use num_bigint::BigInt;

use super::formula::Formula;
use super::term::{Term, Var};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Sexp {
    Atom(String),
    List(Vec<Sexp>),
}

fn err(msg: impl Into<String>) -> Error {
    Error::InvalidFormula(msg.into())
}

fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' | ')' => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
                out.push(c.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn read(tokens: &[String], pos: &mut usize) -> Result<Sexp> {
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| err("unexpected end of input"))?;
    *pos += 1;
    match tok.as_str() {
        "(" => {
            let mut items = Vec::new();
            loop {
                match tokens.get(*pos).map(String::as_str) {
                    None => return Err(err("unbalanced parenthesis")),
                    Some(")") => {
                        *pos += 1;
                        return Ok(Sexp::List(items));
                    }
                    Some(_) => items.push(read(tokens, pos)?),
                }
            }
        }
        ")" => Err(err("unexpected ')'")),
        other => Ok(Sexp::Atom(other.to_string())),
    }
}

fn parse_var(s: &str) -> Result<Var> {
    s.strip_prefix('x')
        .and_then(|n| n.parse::<u32>().ok())
        .map(Var)
        .ok_or_else(|| err(format!("expected a variable x<N>, got '{s}'")))
}

fn parse_int(s: &Sexp) -> Result<BigInt> {
    match s {
        Sexp::Atom(a) => a
            .parse()
            .map_err(|_| err(format!("expected an integer, got '{a}'"))),
        Sexp::List(_) => Err(err("expected an integer, got a list")),
    }
}

fn parse_term(s: &Sexp) -> Result<Term> {
    match s {
        Sexp::Atom(a) => {
            if let Ok(n) = a.parse::<BigInt>() {
                Ok(Term::constant(n))
            } else {
                Ok(Term::var(parse_var(a)?))
            }
        }
        Sexp::List(items) => {
            let (head, args) = split_head(items)?;
            match head {
                "+" => args
                    .iter()
                    .try_fold(Term::zero(), |acc, a| Ok(acc.add(&parse_term(a)?))),
                "-" => match args {
                    [] => Err(err("'-' needs an argument")),
                    [a] => Ok(parse_term(a)?.neg()),
                    [a, rest @ ..] => rest
                        .iter()
                        .try_fold(parse_term(a)?, |acc, b| Ok(acc.sub(&parse_term(b)?))),
                },
                "*" => match args {
                    [k, t] => Ok(parse_term(t)?.scale(&parse_int(k)?)),
                    _ => Err(err("'*' takes a constant and a term")),
                },
                other => Err(err(format!("unknown term operator '{other}'"))),
            }
        }
    }
}

fn split_head(items: &[Sexp]) -> Result<(&str, &[Sexp])> {
    match items.split_first() {
        Some((Sexp::Atom(h), rest)) => Ok((h.as_str(), rest)),
        _ => Err(err("expected an operator at the head of a list")),
    }
}

fn binders(s: &Sexp) -> Result<Vec<Var>> {
    match s {
        Sexp::Atom(a) => Ok(vec![parse_var(a)?]),
        Sexp::List(items) => items
            .iter()
            .map(|i| match i {
                Sexp::Atom(a) => parse_var(a),
                Sexp::List(_) => Err(err("nested binder list")),
            })
            .collect(),
    }
}

fn parse(s: &Sexp) -> Result<Formula> {
    match s {
        Sexp::Atom(a) => match a.as_str() {
            "true" => Ok(Formula::True),
            "false" => Ok(Formula::False),
            other => Err(err(format!("unexpected token '{other}'"))),
        },
        Sexp::List(items) => {
            let (head, args) = split_head(items)?;
            let pair = || -> Result<(Term, Term)> {
                match args {
                    [l, r] => Ok((parse_term(l)?, parse_term(r)?)),
                    _ => Err(err(format!("'{head}' takes two terms"))),
                }
            };
            match head {
                "<=" => pair().map(|(l, r)| Formula::le(l, r)),
                "<" => pair().map(|(l, r)| Formula::lt(l, r)),
                ">=" => pair().map(|(l, r)| Formula::ge(l, r)),
                ">" => pair().map(|(l, r)| Formula::lt(r, l)),
                "=" => pair().map(|(l, r)| Formula::eq(l, r)),
                "cong" => match args {
                    [t, c, m] => {
                        let m = parse_int(m)?;
                        if m < BigInt::from(1) {
                            return Err(err("modulus must be positive"));
                        }
                        Ok(Formula::congruent(parse_term(t)?, parse_int(c)?, m))
                    }
                    _ => Err(err("'cong' takes a term, a residue and a modulus")),
                },
                "not" => match args {
                    [f] => Ok(parse(f)?.not()),
                    _ => Err(err("'not' takes one formula")),
                },
                "and" => Ok(Formula::and(args.iter().map(parse).collect::<Result<_>>()?)),
                "or" => Ok(Formula::or(args.iter().map(parse).collect::<Result<_>>()?)),
                "=>" => match args {
                    [a, b] => Ok(parse(a)?.implies(parse(b)?)),
                    _ => Err(err("'=>' takes two formulas")),
                },
                "exists" | "forall" => match args {
                    [vs, body] => {
                        let vs = binders(vs)?;
                        let body = parse(body)?;
                        Ok(if head == "exists" {
                            Formula::exists_all(vs, body)
                        } else {
                            Formula::forall_all(vs, body)
                        })
                    }
                    _ => Err(err(format!("'{head}' takes binders and a body"))),
                },
                other => Err(err(format!("unknown operator '{other}'"))),
            }
        }
    }
}

pub(crate) fn parse_formula(text: &str) -> Result<Formula> {
    let tokens = tokenize(text);
    let mut pos = 0;
    let s = read(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(err("trailing input after formula"));
    }
    parse(&s)
}
