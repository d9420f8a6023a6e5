//! Truncated dual functionals on the word algebra: finite coefficient maps
//! over all words of weight at most `W`, with the concatenation-dual
//! convolution product and its exponential and logarithm.

use std::collections::BTreeMap;


use crate::combinat::compositions;
use crate::error::{Error, Result};
use crate::hopf::{antipode, quasi_shuffle, quasi_shuffle_poly};
use crate::poly::Polynomial;
use crate::qsym::words_up_to_weight;
use crate::scalar::{Rat, Scalar, ScalarKind};
use crate::word::Word;

/// A linear functional on words, truncated by weight. Looking up a word
/// beyond the truncation is an error, not a silent zero. Exact-scalar
/// functionals never store exact zeros; float functionals keep every
/// coefficient they were given.
#[derive(Clone, Debug, PartialEq)]
pub struct DualFunctional {
    coeffs: BTreeMap<Word, Scalar>,
    max_weight: u32,
    d: u32,
    kind: ScalarKind,
}

impl DualFunctional {
    /// The zero functional.
    pub fn zero(d: u32, max_weight: u32, kind: ScalarKind) -> Self {
        DualFunctional {
            coeffs: BTreeMap::new(),
            max_weight,
            d,
            kind,
        }
    }

    /// The counit `ε`: 1 on the empty word, 0 elsewhere.
    pub fn counit_functional(d: u32, max_weight: u32, kind: ScalarKind) -> Self {
        let mut out = Self::zero(d, max_weight, kind);
        out.coeffs.insert(Word::empty(), Scalar::one(kind));
        out
    }

    pub fn alphabet(&self) -> u32 {
        self.d
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    /// Stored coefficients in canonical word order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.coeffs.iter()
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        if w.weight() > self.max_weight {
            return Err(Error::BeyondTruncation {
                word: w.to_string(),
                weight: w.weight(),
                max_weight: self.max_weight,
            });
        }
        if w.max_letter() > self.d {
            return Err(Error::LetterOutOfAlphabet {
                letter: w.max_letter(),
                d: self.d,
            });
        }
        Ok(())
    }

    /// Coefficient of `w`; zero when absent, error beyond the truncation.
    pub fn coeff(&self, w: &Word) -> Result<Scalar> {
        self.check_word(w)?;
        Ok(self
            .coeffs
            .get(w)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.kind)))
    }

    pub fn set_coeff(&mut self, w: Word, value: Scalar) -> Result<()> {
        self.check_word(&w)?;
        if value.kind() != self.kind {
            return Err(Error::ScalarKindMismatch);
        }
        if self.kind == ScalarKind::Exact && value.is_zero() {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, value);
        }
        Ok(())
    }

    /// Pairs the functional with a polynomial: `Σ c_w ⟨w, self⟩`. Rational
    /// polynomial coefficients are converted into this functional's kind.
    pub fn pair(&self, p: &Polynomial) -> Result<Scalar> {
        let mut acc = Scalar::zero(self.kind);
        for (w, c) in p.iter() {
            let value = self.coeff(w)?;
            acc = &acc + &(&Scalar::from_rat(c, self.kind) * &value);
        }
        Ok(acc)
    }

    fn check_compatible(&self, other: &DualFunctional) -> Result<()> {
        if self.max_weight != other.max_weight {
            return Err(Error::TruncationMismatch(self.max_weight, other.max_weight));
        }
        if self.d != other.d {
            return Err(Error::AlphabetMismatch(self.d, other.d));
        }
        if self.kind != other.kind {
            return Err(Error::ScalarKindMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &DualFunctional) -> Result<DualFunctional> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in other.iter() {
            let current = out
                .coeffs
                .get(w)
                .cloned()
                .unwrap_or_else(|| Scalar::zero(self.kind));
            out.set_coeff(w.clone(), &current + c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DualFunctional) -> Result<DualFunctional> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in other.iter() {
            let current = out
                .coeffs
                .get(w)
                .cloned()
                .unwrap_or_else(|| Scalar::zero(self.kind));
            out.set_coeff(w.clone(), &current - c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Scalar) -> Result<DualFunctional> {
        if k.kind() != self.kind {
            return Err(Error::ScalarKindMismatch);
        }
        let mut out = DualFunctional::zero(self.d, self.max_weight, self.kind);
        for (w, c) in self.iter() {
            out.set_coeff(w.clone(), c * k)?;
        }
        Ok(out)
    }

    /// Precomposes with the antipode: `w ↦ ⟨α(w), self⟩`. For a character
    /// this is its convolution inverse.
    pub fn compose_antipode(&self) -> Result<DualFunctional> {
        let mut out = DualFunctional::zero(self.d, self.max_weight, self.kind);
        for w in words_up_to_weight(self.d, self.max_weight) {
            let value = self.pair(&antipode(&w))?;
            out.set_coeff(w, value)?;
        }
        Ok(out)
    }

    /// Searches for a violation of the character property
    /// `⟨u ⋆ v, c⟩ = ⟨u, c⟩⟨v, c⟩` over all pairs within the truncation,
    /// comparing float values up to `rel_tol` (exact values exactly).
    /// Returns the first violating pair in canonical order.
    pub fn character_violation(&self, rel_tol: f64) -> Result<Option<(Word, Word)>> {
        let e = Word::empty();
        if !self.coeff(&e)?.is_one() {
            return Ok(Some((e.clone(), e)));
        }
        let words = words_up_to_weight(self.d, self.max_weight);
        for u in &words {
            if u.is_empty() {
                continue;
            }
            for v in &words {
                if v.is_empty() || u.weight() + v.weight() > self.max_weight || u > v {
                    continue;
                }
                let lhs = self.pair(&quasi_shuffle(u, v))?;
                let rhs = &self.coeff(u)? * &self.coeff(v)?;
                if !scalars_close(&lhs, &rhs, rel_tol) {
                    return Ok(Some((u.clone(), v.clone())));
                }
            }
        }
        Ok(None)
    }
}

fn scalars_close(a: &Scalar, b: &Scalar, rel_tol: f64) -> bool {
    match (a, b) {
        (Scalar::Float(x), Scalar::Float(y)) => {
            let scale = x.abs().max(y.abs()).max(1.0);
            (x - y).abs() <= rel_tol * scale
        }
        _ => a == b,
    }
}

/// Convolution product: `⟨w, c • c'⟩ = Σ_{uv=w} ⟨u, c⟩⟨v, c'⟩`, truncated by
/// weight. Associative, with `ε` as two-sided unit.
pub fn convolve(a: &DualFunctional, b: &DualFunctional) -> Result<DualFunctional> {
    a.check_compatible(b)?;
    let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            if u.weight() + v.weight() > a.max_weight {
                continue;
            }
            let w = u.concat(v);
            let term = cu * cv;
            match acc.entry(w) {
                std::collections::btree_map::Entry::Vacant(slot) => {
                    slot.insert(term);
                }
                std::collections::btree_map::Entry::Occupied(mut slot) => {
                    let sum = slot.get() + &term;
                    *slot.get_mut() = sum;
                }
            }
        }
    }
    let mut out = DualFunctional::zero(a.d, a.max_weight, a.kind);
    for (w, c) in acc {
        out.set_coeff(w, c)?;
    }
    Ok(out)
}

/// Convolution exponential of a functional vanishing on the empty word:
/// `ε + Σ_{j≥1} f^{•j} / j!`. The series terminates at the truncation.
pub fn exp_conv(f: &DualFunctional) -> Result<DualFunctional> {
    if !f.coeff(&Word::empty())?.is_zero() {
        return Err(Error::ExpCoefficientAtUnit);
    }
    let mut result = DualFunctional::counit_functional(f.d, f.max_weight, f.kind).add(f)?;
    let mut term = f.clone();
    for j in 2..=f.max_weight as u64 {
        term = convolve(&term, f)?.scale(&Scalar::one(f.kind).div_int(j))?;
        result = result.add(&term)?;
    }
    Ok(result)
}

/// Convolution logarithm of a functional with coefficient 1 on the empty
/// word: `Σ_{i≥1} (-1)^{i-1} (c - ε)^{•i} / i`.
pub fn log_conv(c: &DualFunctional) -> Result<DualFunctional> {
    if !c.coeff(&Word::empty())?.is_one() {
        return Err(Error::LogCoefficientAtUnit);
    }
    let u = c.sub(&DualFunctional::counit_functional(c.d, c.max_weight, c.kind))?;
    let mut result = u.clone();
    let mut power = u.clone();
    for i in 2..=c.max_weight as u64 {
        power = convolve(&power, &u)?;
        let coeff = if i % 2 == 0 {
            -&Scalar::one(c.kind).div_int(i)
        } else {
            Scalar::one(c.kind).div_int(i)
        };
        result = result.add(&power.scale(&coeff)?)?;
    }
    Ok(result)
}

/// The adjoint Eulerian idempotent applied to a word:
/// `𝖾 = log*(id) = J - ½ J*J + ⅓ J*J*J - …`, where `J` projects onto the
/// augmentation ideal and `*` is the convolution of endomorphisms. The term
/// `J^{*k}(u)` is the quasi-shuffle product over all deconcatenations of `u`
/// into `k` nonempty blocks.
pub fn eulerian_image(u: &Word) -> Polynomial {
    let mut image = Polynomial::zero();
    for parts in compositions(u.length()) {
        let k = parts.len();
        if k == 0 {
            continue; // J(e) = 0
        }
        let mut blocks = Polynomial::monomial(Word::empty());
        let mut pos = 0;
        for &p in &parts {
            let (_, rest) = u.split_at(pos);
            let (block, _) = rest.split_at(p);
            blocks = quasi_shuffle_poly(&blocks, &Polynomial::monomial(block));
            pos += p;
        }
        let coeff = if k % 2 == 0 {
            -Rat::new(1.into(), (k as i64).into())
        } else {
            Rat::new(1.into(), (k as i64).into())
        };
        image.add_scaled(&blocks, &coeff);
    }
    image
}

/// Pairs `c` against the adjoint Eulerian idempotent: `⟨𝖾(u), c⟩`.
///
/// For a character `c` this equals `⟨u, log_conv(c)⟩`; on non-characters the
/// two routes are allowed to differ.
pub fn eulerian_projection(u: &Word, c: &DualFunctional) -> Result<Scalar> {
    c.pair(&eulerian_image(u))
}
