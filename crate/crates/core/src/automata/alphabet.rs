use std::fmt;

use crate::error::{Error, Result};

/// Index of a letter inside its [`Alphabet`].
pub type Letter = usize;

/// A finite, ordered alphabet of single-character letters.
///
/// The order of the letters fixes the coordinate order of every Parikh
/// vector over the alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        for (i, c) in letters.iter().enumerate() {
            if letters[..i].contains(c) {
                return Err(Error::InvalidAlphabet(format!("duplicate letter {c:?}")));
            }
        }
        Ok(Alphabet { letters })
    }

    /// Alphabet made of the characters of `s`, in order.
    pub fn from_str_letters(s: &str) -> Result<Self> {
        Self::new(s.chars())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn char_of(&self, letter: Letter) -> char {
        self.letters[letter]
    }

    pub fn index_of(&self, c: char) -> Result<Letter> {
        self.letters
            .iter()
            .position(|&l| l == c)
            .ok_or(Error::UnknownLetter(c))
    }

    pub fn parse_word(&self, word: &str) -> Result<Vec<Letter>> {
        word.chars().map(|c| self.index_of(c)).collect()
    }

    pub fn render(&self, word: &[Letter]) -> String {
        word.iter().map(|&l| self.letters[l]).collect()
    }

    pub fn ensure_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(format!("{self} vs {other}")))
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Letter> {
        0..self.letters.len()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_duplicates() {
        assert!(Alphabet::new([]).is_err());
        assert!(Alphabet::from_str_letters("aba").is_err());
    }

    #[test]
    fn word_round_trip() {
        let sigma = Alphabet::from_str_letters("ab").unwrap();
        let w = sigma.parse_word("abba").unwrap();
        assert_eq!(w, vec![0, 1, 1, 0]);
        assert_eq!(sigma.render(&w), "abba");
        assert!(matches!(
            sigma.parse_word("abc"),
            Err(Error::UnknownLetter('c'))
        ));
    }
}
