//! Polynomials: finite linear combinations of words with exact rational
//! coefficients. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{One, Signed, Zero};

use crate::scalar::{rat_string, Rat};
use crate::word::Word;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Word, Rat>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    /// A single word with coefficient 1.
    pub fn monomial(w: Word) -> Self {
        Polynomial::term(w, Rat::one())
    }

    pub fn term(w: Word, c: Rat) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(w, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `w`; zero when absent.
    pub fn coeff(&self, w: &Word) -> Rat {
        self.terms.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in canonical word order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Word, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Polynomial) {
        for (w, c) in other.iter() {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn scaled(&self, k: &Rat) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, k: &Rat) {
        if k.is_zero() {
            return;
        }
        for (w, c) in other.iter() {
            self.add_term(w.clone(), c * k);
        }
    }

    /// Concatenates `w` onto the right of every term.
    pub fn concat_word(&self, w: &Word) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(u, c)| (u.concat(w), c.clone()))
                .collect(),
        }
    }

    /// Appends one bracket to every term.
    pub fn push_bracket(&self, b: &crate::word::Bracket) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(u, c)| (u.push(b), c.clone()))
                .collect(),
        }
    }

    /// Largest letter appearing in any term (0 for constants).
    pub fn max_letter(&self) -> u32 {
        self.terms.keys().map(Word::max_letter).max().unwrap_or(0)
    }

    /// Weight of the terms when the polynomial is homogeneous.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Word::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }
}

impl FromIterator<(Word, Rat)> for Polynomial {
    fn from_iter<T: IntoIterator<Item = (Word, Rat)>>(iter: T) -> Self {
        let mut p = Polynomial::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rat::one());
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scaled(&-Rat::one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{} {w}", rat_string(&mag))?;
            }
        }
        Ok(())
    }
}
