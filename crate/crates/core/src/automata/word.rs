use std::fmt;

use super::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

/// An ultimately periodic word `u·v^ω`.
///
/// Values are kept normalized: the period is primitive and the prefix is as
/// short as possible, so structural equality coincides with equality of the
/// denoted ω-words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpWord {
    prefix: Vec<Letter>,
    period: Vec<Letter>,
}

impl UpWord {
    pub fn new(prefix: Vec<Letter>, period: Vec<Letter>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidWord("period must be nonempty".into()));
        }
        let mut w = UpWord { prefix, period };
        w.normalize();
        Ok(w)
    }

    /// Parses the `u;v` syntax over `alphabet`.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let (u, v) = text
            .split_once(';')
            .ok_or_else(|| Error::InvalidWord(format!("expected `u;v`, got {text:?}")))?;
        if v.contains(';') {
            return Err(Error::InvalidWord(format!("more than one `;` in {text:?}")));
        }
        Self::new(alphabet.parse_word(u)?, alphabet.parse_word(v)?)
    }

    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    pub fn period(&self) -> &[Letter] {
        &self.period
    }

    /// Letter at position `i` of the infinite word.
    pub fn at(&self, i: usize) -> Letter {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.period[(i - self.prefix.len()) % self.period.len()]
        }
    }

    /// Renders back to `u;v`.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        format!(
            "{};{}",
            alphabet.render(&self.prefix),
            alphabet.render(&self.period)
        )
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        struct D<'a>(&'a UpWord, &'a Alphabet);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.render(self.1))
            }
        }
        D(self, alphabet)
    }

    fn normalize(&mut self) {
        let root = primitive_root_len(&self.period);
        self.period.truncate(root);
        while let (Some(&last_u), Some(&last_v)) = (self.prefix.last(), self.period.last()) {
            if last_u != last_v {
                break;
            }
            self.prefix.pop();
            self.period.rotate_right(1);
        }
    }
}

/// Length of the shortest `r` with `v = r^n`, via the failure function.
fn primitive_root_len(v: &[Letter]) -> usize {
    let n = v.len();
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && v[i] != v[k] {
            k = fail[k - 1];
        }
        if v[i] == v[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let p = n - fail[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}
