//! Letters, brackets and words.
//!
//! A letter is a generator `1..=d`. A bracket is a nonempty multiset of
//! letters, kept as a sorted list: the bracket product is commutative and
//! nested products flatten, so the sorted list is the canonical form. A word
//! is an ordered list of brackets; the empty word `e` is the unit of
//! concatenation.
//!
//! Words are graded by *length* (number of brackets) and by *weight* (total
//! number of letters). The total order used everywhere for deterministic
//! output is: weight ascending, then length descending, then lexicographic
//! on the bracket lists.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Nonempty multiset of letters, stored sorted ascending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Bracket {
    letters: Vec<u32>,
}

impl Bracket {
    /// Builds a bracket from letters in any order; sorts them.
    pub fn new(mut letters: Vec<u32>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyBracket);
        }
        assert!(letters.iter().all(|&l| l >= 1), "letters are 1-based");
        letters.sort_unstable();
        Ok(Bracket { letters })
    }

    /// Single-letter bracket.
    pub fn letter(l: u32) -> Self {
        assert!(l >= 1, "letters are 1-based");
        Bracket { letters: vec![l] }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// Number of letters, counted with multiplicity.
    pub fn weight(&self) -> u32 {
        self.letters.len() as u32
    }

    pub fn max_letter(&self) -> u32 {
        *self.letters.last().expect("brackets are nonempty")
    }

    /// Semigroup product: multiset union of the letters.
    pub fn merge(&self, other: &Bracket) -> Bracket {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        let (mut i, mut j) = (0, 0);
        while i < self.letters.len() && j < other.letters.len() {
            if self.letters[i] <= other.letters[j] {
                letters.push(self.letters[i]);
                i += 1;
            } else {
                letters.push(other.letters[j]);
                j += 1;
            }
        }
        letters.extend_from_slice(&self.letters[i..]);
        letters.extend_from_slice(&other.letters[j..]);
        Bracket { letters }
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

/// Canonical form of a bracket over the alphabet `1..=d`: letters sorted
/// ascending, range-checked.
pub fn canonical_bracket(letters: &[u32], d: u32) -> Result<Bracket> {
    if let Some(&bad) = letters.iter().find(|&&l| l < 1 || l > d) {
        return Err(Error::LetterOutOfAlphabet { letter: bad, d });
    }
    Bracket::new(letters.to_vec())
}

/// Ordered list of brackets; possibly empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    brackets: Vec<Bracket>,
}

impl Word {
    /// The empty word `e`.
    pub fn empty() -> Self {
        Word { brackets: vec![] }
    }

    pub fn from_brackets(brackets: Vec<Bracket>) -> Self {
        Word { brackets }
    }

    pub fn single(b: Bracket) -> Self {
        Word { brackets: vec![b] }
    }

    pub fn is_empty(&self) -> bool {
        self.brackets.is_empty()
    }

    pub fn brackets(&self) -> &[Bracket] {
        &self.brackets
    }

    /// Number of brackets.
    pub fn length(&self) -> usize {
        self.brackets.len()
    }

    /// Total number of letters.
    pub fn weight(&self) -> u32 {
        self.brackets.iter().map(Bracket::weight).sum()
    }

    pub fn max_letter(&self) -> u32 {
        self.brackets.iter().map(Bracket::max_letter).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut brackets = self.brackets.clone();
        brackets.extend_from_slice(&other.brackets);
        Word { brackets }
    }

    /// Appends one bracket.
    pub fn push(&self, b: &Bracket) -> Word {
        let mut brackets = self.brackets.clone();
        brackets.push(b.clone());
        Word { brackets }
    }

    /// Splits off the last bracket: `w = u·[a]` gives `(u, a)`.
    pub fn split_last(&self) -> Option<(Word, &Bracket)> {
        let (last, init) = self.brackets.split_last()?;
        Some((Word { brackets: init.to_vec() }, last))
    }

    /// The prefix of the first `i` brackets and the matching suffix.
    pub fn split_at(&self, i: usize) -> (Word, Word) {
        let (a, b) = self.brackets.split_at(i);
        (Word { brackets: a.to_vec() }, Word { brackets: b.to_vec() })
    }

    pub fn reversed(&self) -> Word {
        let mut brackets = self.brackets.clone();
        brackets.reverse();
        Word { brackets }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(other.length().cmp(&self.length()))
            .then_with(|| self.brackets.cmp(&other.brackets))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.brackets.is_empty() {
            return write!(f, "e");
        }
        for b in &self.brackets {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Parses the word grammar without an alphabet bound:
/// `word := "e" | bracket+ ; bracket := "[" letter ("," letter)* "]"`.
pub fn parse_word_any(text: &str) -> Result<Word> {
    Parser::new(text).word()
}

/// Parses a word over the alphabet `1..=d`; letters beyond `d` are rejected.
pub fn parse_word(text: &str, d: u32) -> Result<Word> {
    let w = parse_word_any(text)?;
    if w.max_letter() > d {
        return Err(Error::LetterOutOfAlphabet {
            letter: w.max_letter(),
            d,
        });
    }
    Ok(w)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn word(mut self) -> Result<Word> {
        if self.bytes == b"e" {
            return Ok(Word::empty());
        }
        if self.bytes.is_empty() {
            return Err(Error::parse(0, "empty input; expected \"e\" or brackets"));
        }
        let mut brackets = Vec::new();
        while self.pos < self.bytes.len() {
            brackets.push(self.bracket()?);
        }
        Ok(Word::from_brackets(brackets))
    }

    fn bracket(&mut self) -> Result<Bracket> {
        self.expect(b'[')?;
        let mut letters = vec![self.letter()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            letters.push(self.letter()?);
        }
        self.expect(b']')?;
        Bracket::new(letters)
    }

    fn letter(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::parse(start, "expected a letter (decimal integer)"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let value: u32 = digits
            .parse()
            .map_err(|_| Error::parse(start, "letter too large"))?;
        if value == 0 {
            return Err(Error::parse(start, "letters start at 1"));
        }
        Ok(value)
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(
                self.pos,
                format!("expected '{}'", b as char),
            ))
        }
    }
}
