//! Finite alphabets, nonempty words and generating maps `A -> S`.

use std::fmt;

use thiserror::Error;

use crate::semigroup::{Element, FiniteSemigroup};

/// Index of a letter in an alphabet.
pub type Letter = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("letter {0:?} appears twice")]
    DuplicateLetter(String),
    #[error("letter {letter:?} maps to {target}, out of range for order {order}")]
    TargetOutOfRange { letter: String, target: usize, order: usize },
    #[error("images do not generate the semigroup: {missing} is not reached")]
    NotGenerating { missing: String },
    #[error("unknown letter {0:?}")]
    UnknownLetter(String),
    #[error("words must be nonempty")]
    EmptyWord,
}

/// A nonempty word over an alphabet, stored as letter indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self, AlphabetError> {
        if letters.is_empty() {
            Err(AlphabetError::EmptyWord)
        } else {
            Ok(Word(letters))
        }
    }

    pub fn letter(a: Letter) -> Self {
        Word(vec![a])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pushed(&self, a: Letter) -> Word {
        let mut v = self.0.clone();
        v.push(a);
        Word(v)
    }

    /// `self^k` for `k >= 1`.
    pub fn repeat(&self, k: usize) -> Word {
        assert!(k >= 1);
        Word(self.0.repeat(k))
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

/// Every nonempty word of length at most `max_len` over `k` letters, shortlex
/// order.
pub fn all_words(k: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * k);
        for w in &layer {
            for a in 0..k {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(Word));
        layer = next;
    }
    out
}

/// A map from a finite alphabet onto a generating set of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingMap {
    letters: Vec<String>,
    targets: Vec<Element>,
}

impl GeneratingMap {
    /// Validates letter names, target range and that the images generate `s`.
    pub fn new(
        s: &FiniteSemigroup,
        letters: Vec<String>,
        targets: Vec<Element>,
    ) -> Result<Self, AlphabetError> {
        let map = Self::unvalidated(letters, targets)?;
        for (l, &t) in map.letters.iter().zip(&map.targets) {
            if t >= s.order() {
                return Err(AlphabetError::TargetOutOfRange { letter: l.clone(), target: t, order: s.order() });
            }
        }
        let reached = s.generated_by(&map.targets);
        if reached.len() != s.order() {
            let inside = s.indicator(&reached);
            let missing = s.elements().find(|&x| !inside[x]).unwrap();
            return Err(AlphabetError::NotGenerating { missing: s.name(missing) });
        }
        Ok(map)
    }

    /// Checks only the alphabet itself, not generation.
    pub fn unvalidated(letters: Vec<String>, targets: Vec<Element>) -> Result<Self, AlphabetError> {
        if letters.is_empty() {
            return Err(AlphabetError::EmptyAlphabet);
        }
        assert_eq!(letters.len(), targets.len(), "one target per letter");
        for (i, l) in letters.iter().enumerate() {
            if letters[..i].contains(l) {
                return Err(AlphabetError::DuplicateLetter(l.clone()));
            }
        }
        Ok(Self { letters, targets })
    }

    /// Every element is its own letter, named after the element.
    pub fn identity(s: &FiniteSemigroup) -> Self {
        let letters = s.elements().map(|x| s.name(x)).collect();
        Self::unvalidated(letters, s.elements().collect()).expect("element names are distinct")
    }

    /// A generating set of least size (the lexicographically first one),
    /// each element its own letter. Exhaustive over subsets, so `None` above
    /// 20 elements.
    pub fn minimal(s: &FiniteSemigroup) -> Option<Self> {
        let n = s.order();
        if n > 20 {
            return None;
        }
        for size in 1..=n {
            let mut pick: Vec<Element> = (0..size).collect();
            loop {
                if s.generated_by(&pick).len() == n {
                    let letters = pick.iter().map(|&x| s.name(x)).collect();
                    return Some(Self::unvalidated(letters, pick).expect("element names are distinct"));
                }
                // next combination in lexicographic order
                let Some(i) = (0..size).rev().find(|&i| pick[i] < n - size + i) else {
                    break;
                };
                pick[i] += 1;
                for j in i + 1..size {
                    pick[j] = pick[j - 1] + 1;
                }
            }
        }
        unreachable!("the whole semigroup generates itself")
    }

    /// Letters `a, b, c, ...` (or `x0, x1, ...` past 26) mapped to `targets`.
    pub fn from_targets(s: &FiniteSemigroup, targets: Vec<Element>) -> Result<Self, AlphabetError> {
        let letters = default_letters(targets.len());
        Self::new(s, letters, targets)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn targets(&self) -> &[Element] {
        &self.targets
    }

    pub fn target(&self, a: Letter) -> Element {
        self.targets[a]
    }

    pub fn letter_name(&self, a: Letter) -> &str {
        &self.letters[a]
    }

    pub fn letter_index(&self, name: &str) -> Option<Letter> {
        self.letters.iter().position(|l| l == name)
    }

    /// Image of a word under the extension `A+ -> S`.
    pub fn evaluate(&self, s: &FiniteSemigroup, w: &Word) -> Element {
        self.evaluate_slice(s, w.letters())
    }

    /// Image of a possibly empty slice in `S^I`.
    pub fn evaluate_slice(&self, s: &FiniteSemigroup, w: &[Letter]) -> Element {
        w.iter().fold(s.virtual_identity(), |acc, &a| s.mul_i(acc, self.targets[a]))
    }

    fn single_char(&self) -> bool {
        self.letters.iter().all(|l| l.chars().count() == 1)
    }

    /// Parses a word: character by character when every letter is a single
    /// character, whitespace separated otherwise.
    pub fn parse_word(&self, text: &str) -> Result<Word, AlphabetError> {
        let tokens: Vec<String> = if self.single_char() && !text.contains(char::is_whitespace) {
            text.chars().map(|c| c.to_string()).collect()
        } else {
            text.split_whitespace().map(str::to_string).collect()
        };
        let letters = tokens
            .iter()
            .map(|t| self.letter_index(t).ok_or_else(|| AlphabetError::UnknownLetter(t.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Word::new(letters)
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        let sep = if self.single_char() { "" } else { " " };
        w.iter().map(|&a| self.letters[a].as_str()).collect::<Vec<_>>().join(sep)
    }

    pub fn check_word(&self, w: &Word) -> Result<(), AlphabetError> {
        match w.letters().iter().find(|&&a| a >= self.len()) {
            Some(&a) => Err(AlphabetError::UnknownLetter(format!("#{a}"))),
            None => Ok(()),
        }
    }
}

pub(crate) fn default_letters(k: usize) -> Vec<String> {
    if k <= 26 {
        (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..k).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for GeneratingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().zip(&self.targets).map(|(l, t)| format!("{l}->{t}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn empty_word_rejected() {
        assert_eq!(Word::new(vec![]).unwrap_err(), AlphabetError::EmptyWord);
    }

    #[test]
    fn generation_is_checked() {
        let z2z = catalog::z_n_zero(2);
        let err = GeneratingMap::from_targets(&z2z, vec![1]).unwrap_err();
        assert!(matches!(err, AlphabetError::NotGenerating { .. }));
        assert!(GeneratingMap::from_targets(&z2z, vec![1, 2]).is_ok());
    }

    #[test]
    fn parse_and_format() {
        let s = catalog::semilattice2();
        let phi = GeneratingMap::identity(&s);
        let w = phi.parse_word("abba").unwrap();
        assert_eq!(w.letters(), &[0, 1, 1, 0]);
        assert_eq!(phi.format_word(w.letters()), "abba");
        assert_eq!(phi.evaluate(&s, &w), 1);
        assert!(matches!(phi.parse_word("abc"), Err(AlphabetError::UnknownLetter(_))));

        let band = catalog::rectangular_band(1, 2);
        let psi = GeneratingMap::identity(&band);
        let w = psi.parse_word("r0c1 r0c0").unwrap();
        assert_eq!(w.letters(), &[1, 0]);
        assert_eq!(psi.format_word(w.letters()), "r0c1 r0c0");
    }

    #[test]
    fn word_enumeration_counts() {
        assert_eq!(all_words(2, 3).len(), 2 + 4 + 8);
        assert_eq!(all_words(1, 4).len(), 4);
    }
}
