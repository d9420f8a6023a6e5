//! The quasi-shuffle Hopf algebra on words: quasi-shuffle and shuffle
//! products, their half-shuffle splittings, the deconcatenation coproduct,
//! counit and antipode.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{One, Signed, Zero};

use crate::combinat::compositions;
use crate::error::{Error, Result};
use crate::hoffman::composition_apply;
use crate::poly::Polynomial;
use crate::scalar::{rat_string, Rat};
use crate::word::Word;

/// Recursive product engine shared by the shuffle and quasi-shuffle; the
/// quasi-shuffle additionally merges the two trailing brackets. Results are
/// memoized per call tree, with keys normalized by commutativity.
struct ProductCache {
    merge: bool,
    memo: HashMap<(Word, Word), Polynomial>,
}

impl ProductCache {
    fn new(merge: bool) -> Self {
        ProductCache {
            merge,
            memo: HashMap::new(),
        }
    }

    fn product(&mut self, u: &Word, v: &Word) -> Polynomial {
        if u.is_empty() {
            return Polynomial::monomial(v.clone());
        }
        if v.is_empty() {
            return Polynomial::monomial(u.clone());
        }
        let key = if u <= v {
            (u.clone(), v.clone())
        } else {
            (v.clone(), u.clone())
        };
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let (u_init, a) = u.split_last().expect("u nonempty");
        let (v_init, b) = v.split_last().expect("v nonempty");
        let mut out = self.product(&u_init, v).push_bracket(a);
        out.add_assign(&self.product(u, &v_init).push_bracket(b));
        if self.merge {
            out.add_assign(&self.product(&u_init, &v_init).push_bracket(&a.merge(b)));
        }
        self.memo.insert(key, out.clone());
        out
    }

    fn product_poly(&mut self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (u, cu) in p.iter() {
            for (v, cv) in q.iter() {
                out.add_scaled(&self.product(u, v), &(cu * cv));
            }
        }
        out
    }
}

/// Quasi-shuffle product of basis words: interleavings plus merged-bracket
/// terms. Commutative; every term has weight `|u| + |v|`.
pub fn quasi_shuffle(u: &Word, v: &Word) -> Polynomial {
    ProductCache::new(true).product(u, v)
}

/// Bilinear extension of [`quasi_shuffle`].
pub fn quasi_shuffle_poly(p: &Polynomial, q: &Polynomial) -> Polynomial {
    ProductCache::new(true).product_poly(p, q)
}

/// Shuffle product of basis words: interleavings only, brackets treated as
/// atomic letters. Every term has length `ℓ(u) + ℓ(v)`.
pub fn shuffle(u: &Word, v: &Word) -> Polynomial {
    ProductCache::new(false).product(u, v)
}

/// Bilinear extension of [`shuffle`].
pub fn shuffle_poly(p: &Polynomial, q: &Polynomial) -> Polynomial {
    ProductCache::new(false).product_poly(p, q)
}

/// The three summands of the quasi-shuffle: which factor contributes the
/// last bracket, or the merge of both.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum QshHalf {
    /// `u ≺̇ v`: last bracket from `u`.
    Left,
    /// `u ≻̇ v`: last bracket from `v`.
    Right,
    /// `u ⋄ v`: last brackets merged.
    Diamond,
}

/// Half-shuffle summands of the quasi-shuffle product; undefined when either
/// argument is the empty word.
pub fn half_shuffle_qsh(kind: QshHalf, u: &Word, v: &Word) -> Result<Polynomial> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::HalfShuffleOnEmpty);
    }
    let mut cache = ProductCache::new(true);
    Ok(match kind {
        QshHalf::Right => {
            let (v_init, b) = v.split_last().expect("v nonempty");
            cache.product(u, &v_init).push_bracket(b)
        }
        QshHalf::Left => {
            let (u_init, a) = u.split_last().expect("u nonempty");
            cache.product(&u_init, v).push_bracket(a)
        }
        QshHalf::Diamond => {
            let (u_init, a) = u.split_last().expect("u nonempty");
            let (v_init, b) = v.split_last().expect("v nonempty");
            cache.product(&u_init, &v_init).push_bracket(&a.merge(b))
        }
    })
}

/// The two summands of the shuffle product.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ShHalf {
    /// `u ≺ v`: last bracket from `u`.
    Left,
    /// `u ≻ v`: last bracket from `v`.
    Right,
}

/// Half-shuffle summands of the shuffle product; undefined on the empty word.
pub fn half_shuffle_sh(kind: ShHalf, u: &Word, v: &Word) -> Result<Polynomial> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::HalfShuffleOnEmpty);
    }
    let mut cache = ProductCache::new(false);
    Ok(match kind {
        ShHalf::Right => {
            let (v_init, b) = v.split_last().expect("v nonempty");
            cache.product(u, &v_init).push_bracket(b)
        }
        ShHalf::Left => {
            let (u_init, a) = u.split_last().expect("u nonempty");
            cache.product(&u_init, v).push_bracket(a)
        }
    })
}

/// Element of `T(𝔄) ⊗ T(𝔄)`: aggregated `(left, right, coefficient)`
/// triples with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorPoly {
    terms: BTreeMap<(Word, Word), Rat>,
}

impl TensorPoly {
    pub fn zero() -> Self {
        TensorPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((left, right)).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Adds `c · p ⊗ q`, expanded bilinearly.
    pub fn add_tensor(&mut self, p: &Polynomial, q: &Polynomial, c: &Rat) {
        for (u, cu) in p.iter() {
            for (v, cv) in q.iter() {
                self.add_term(u.clone(), v.clone(), cu * cv * c);
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Word, Word), &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &Word, right: &Word) -> Rat {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((u, v), c)) in self.terms.iter().enumerate() {
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
                write!(f, "{u} ⊗ {v}")?;
            } else {
                write!(f, "{} {u} ⊗ {v}", rat_string(&mag))?;
            }
        }
        Ok(())
    }
}

/// Deconcatenation coproduct: all ordered prefix/suffix splittings,
/// including the trivial ones. `δ(e) = e ⊗ e`.
pub fn coproduct(w: &Word) -> TensorPoly {
    let mut out = TensorPoly::zero();
    for i in 0..=w.length() {
        let (left, right) = w.split_at(i);
        out.add_term(left, right, Rat::one());
    }
    out
}

/// Linear extension of [`coproduct`].
pub fn coproduct_poly(p: &Polynomial) -> TensorPoly {
    let mut out = TensorPoly::zero();
    for (w, c) in p.iter() {
        for i in 0..=w.length() {
            let (left, right) = w.split_at(i);
            out.add_term(left, right, c.clone());
        }
    }
    out
}

/// Hopf antipode: signed sum over all compositions of the length, applied as
/// block merges to the reversed word.
pub fn antipode(w: &Word) -> Polynomial {
    let n = w.length();
    if n == 0 {
        return Polynomial::monomial(Word::empty());
    }
    let reversed = w.reversed();
    let sign = if n.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    };
    let mut out = Polynomial::zero();
    for parts in compositions(n) {
        let merged = composition_apply(&parts, &reversed).expect("composition sums to length");
        out.add_term(merged, sign.clone());
    }
    out
}

/// Linear extension of [`antipode`].
pub fn antipode_poly(p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (w, c) in p.iter() {
        out.add_scaled(&antipode(w), c);
    }
    out
}

/// Counit: the coefficient of the empty word.
pub fn counit(p: &Polynomial) -> Rat {
    p.coeff(&Word::empty())
}
