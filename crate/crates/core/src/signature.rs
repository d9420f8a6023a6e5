//! The iterated-sums signature of a time series: streaming computation,
//! Chen merging of adjacent windows, a parallel chunked form, and the
//! iterated-integrals signature of the piecewise-linear lifted path used to
//! cross-validate the two pictures.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::combinat::letter_multisets;
use crate::dual::{convolve, exp_conv, DualFunctional};
use crate::error::{Error, Result};
use crate::qsym::words_up_to_weight;
use crate::scalar::{Scalar, ScalarKind};
use crate::series::TimeSeries;
use crate::word::{Bracket, Word};

/// A truncated iterated-sums signature: a dual functional together with the
/// window `(n, m)` of time indices it sums over.
#[derive(Clone, Debug, PartialEq)]
pub struct Signature {
    functional: DualFunctional,
    from: usize,
    to: usize,
}

impl Signature {
    pub fn functional(&self) -> &DualFunctional {
        &self.functional
    }

    pub fn into_functional(self) -> DualFunctional {
        self.functional
    }

    pub fn window(&self) -> (usize, usize) {
        (self.from, self.to)
    }

    pub fn coeff(&self, w: &Word) -> Result<Scalar> {
        self.functional.coeff(w)
    }

    pub fn pair(&self, p: &crate::poly::Polynomial) -> Result<Scalar> {
        self.functional.pair(p)
    }
}

/// Computes `DS(x)_{n,m}` truncated at `max_weight` by the streaming
/// recursion: one pass over the increments, updating coefficients from the
/// longest words down so each word reads its prefix value from the previous
/// step. Float scalars use compensated accumulation.
pub fn iterated_sums_signature(
    x: &TimeSeries,
    from: usize,
    to: usize,
    max_weight: u32,
) -> Result<Signature> {
    if from > to {
        return Err(Error::ReversedWindow { from, to });
    }
    let kind = x.kind();
    let words = words_up_to_weight(x.dim(), max_weight);
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();

    // for each nonempty word: (index of its prefix, its last bracket)
    let mut parents: Vec<Option<(usize, Bracket)>> = Vec::with_capacity(words.len());
    for w in &words {
        parents.push(w.split_last().map(|(prefix, last)| {
            (*index.get(&prefix).expect("prefix within truncation"), last.clone())
        }));
    }
    // update longest words first so prefixes still hold step j-1 values
    let mut order: Vec<usize> = (0..words.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(words[i].length()));

    let brackets: Vec<Bracket> = (1..=max_weight as usize)
        .flat_map(|k| letter_multisets(x.dim(), k))
        .map(|letters| Bracket::new(letters).expect("nonempty multiset"))
        .collect();

    let mut state: Vec<Scalar> = words
        .iter()
        .map(|w| {
            if w.is_empty() {
                Scalar::one(kind)
            } else {
                Scalar::zero(kind)
            }
        })
        .collect();
    let mut compensation = vec![0.0f64; words.len()];

    for j in from + 1..=to.min(x.len()) {
        let powers: HashMap<&Bracket, Scalar> = brackets
            .iter()
            .map(|b| (b, x.bracket_increment(j, b)))
            .collect();
        for &i in &order {
            let Some((parent, last)) = &parents[i] else {
                continue;
            };
            let delta = &powers[last];
            match (&state[*parent], delta) {
                (Scalar::Float(prefix), Scalar::Float(step)) => {
                    let Scalar::Float(sum) = state[i] else {
                        unreachable!("uniform scalar kind");
                    };
                    // Kahan step
                    let y = prefix * step - compensation[i];
                    let t = sum + y;
                    compensation[i] = (t - sum) - y;
                    state[i] = Scalar::Float(t);
                }
                (prefix, step) => {
                    let term = prefix * step;
                    state[i] = &state[i] + &term;
                }
            }
        }
    }

    let mut functional = DualFunctional::zero(x.dim(), max_weight, kind);
    for (w, value) in words.into_iter().zip(state) {
        functional.set_coeff(w, value)?;
    }
    Ok(Signature {
        functional,
        from,
        to,
    })
}

/// Signature of a series with a single increment `v`: 1 on the empty word,
/// the coordinate monomial on each single bracket, 0 on longer words.
pub fn single_step_signature(v: &[Scalar], max_weight: u32) -> Result<Signature> {
    if v.is_empty() {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    }
    let kind = v[0].kind();
    if v.iter().any(|s| s.kind() != kind) {
        return Err(Error::ScalarKindMismatch);
    }
    let d = v.len() as u32;
    let mut functional = DualFunctional::zero(d, max_weight, kind);
    if kind == ScalarKind::Float {
        // keep the same dense layout the streaming recursion produces
        for w in words_up_to_weight(d, max_weight) {
            functional.set_coeff(w, Scalar::zero(kind))?;
        }
    }
    functional.set_coeff(Word::empty(), Scalar::one(kind))?;
    for k in 1..=max_weight as usize {
        for letters in letter_multisets(d, k) {
            let mut value = Scalar::one(kind);
            for &l in &letters {
                value = &value * &v[(l - 1) as usize];
            }
            let bracket = Bracket::new(letters).expect("nonempty multiset");
            functional.set_coeff(Word::single(bracket), value)?;
        }
    }
    Ok(Signature {
        functional,
        from: 0,
        to: 1,
    })
}

/// Chen's property: the convolution of signatures over abutting windows is
/// the signature over the union.
pub fn chen_merge(s1: &Signature, s2: &Signature) -> Result<Signature> {
    if s1.to != s2.from {
        return Err(Error::NonAbuttingWindows(s1.from, s1.to, s2.from, s2.to));
    }
    let functional = convolve(&s1.functional, &s2.functional)?;
    Ok(Signature {
        functional,
        from: s1.from,
        to: s2.to,
    })
}

/// Signature over `(from, to)` computed by splitting the window into
/// contiguous chunks, computing each chunk independently in parallel, and
/// folding the results with [`chen_merge`] left to right. Exact results are
/// identical to the direct computation for any chunk count.
pub fn parallel_signature_window(
    x: &TimeSeries,
    from: usize,
    to: usize,
    max_weight: u32,
    chunks: usize,
) -> Result<Signature> {
    if from > to {
        return Err(Error::ReversedWindow { from, to });
    }
    let span = to - from;
    let chunks = chunks.clamp(1, span.max(1));
    let bounds: Vec<usize> = (0..=chunks).map(|i| from + i * span / chunks).collect();
    let parts: Vec<Signature> = bounds
        .windows(2)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|w| iterated_sums_signature(x, w[0], w[1], max_weight))
        .collect::<Result<Vec<_>>>()?;
    let mut parts = parts.into_iter();
    let first = parts.next().expect("at least one chunk");
    parts.try_fold(first, |acc, next| chen_merge(&acc, &next))
}

/// Full-range parallel signature over `(0, N)`.
pub fn parallel_signature(x: &TimeSeries, max_weight: u32, chunks: usize) -> Result<Signature> {
    parallel_signature_window(x, 0, x.len(), max_weight, chunks)
}

/// Iterated-integrals signature of the piecewise-linear interpolation of the
/// lifted series, truncated by weight: the convolution product over time
/// steps of the exponentials of the step-increment functionals. The result
/// is a shuffle character on words of brackets.
pub fn iterated_integrals_signature_pl(
    x: &TimeSeries,
    max_weight: u32,
) -> Result<DualFunctional> {
    let kind = x.kind();
    let d = x.dim();
    let brackets: Vec<Bracket> = (1..=max_weight as usize)
        .flat_map(|k| letter_multisets(d, k))
        .map(|letters| Bracket::new(letters).expect("nonempty multiset"))
        .collect();
    let mut result = DualFunctional::counit_functional(d, max_weight, kind);
    for j in 1..=x.len() {
        let mut step = DualFunctional::zero(d, max_weight, kind);
        for b in &brackets {
            let value = x.bracket_increment(j, b);
            if kind == ScalarKind::Float || !value.is_zero() {
                step.set_coeff(Word::single(b.clone()), value)?;
            }
        }
        result = convolve(&result, &exp_conv(&step)?)?;
    }
    Ok(result)
}
