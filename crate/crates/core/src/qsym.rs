//! Monomial quasisymmetric functions of level `d`, evaluated at finitely
//! supported substitutions, together with the weight-graded dimension
//! counts of the word algebra and the matching word enumeration.

use num::bigint::{BigInt, BigUint};
use num::{One, Zero};

use crate::combinat::{compositions, letter_multisets};
use crate::hopf::quasi_shuffle;
use crate::poly::Polynomial;
use crate::scalar::{Scalar, ScalarKind};
use crate::word::{Bracket, Word};

/// Evaluates one point of the substitution on a bracket: the product of the
/// coordinates named by the letters, with multiplicity.
fn point_power(point: &[Scalar], b: &Bracket) -> Scalar {
    let mut out = Scalar::one(point[0].kind());
    for &l in b.letters() {
        out = &out * &point[(l - 1) as usize];
    }
    out
}

/// Evaluates the monomial quasisymmetric function indexed by `w` at the
/// finitely supported substitution `ys` (zero beyond the end of the list):
/// the sum over strictly increasing index tuples of bracket powers.
/// `monomial_eval(e, ys) = 1`.
///
/// Deliberately computed by direct summation over index tuples, so it can
/// serve as an independent cross-check of the signature recursion.
pub fn monomial_eval(w: &Word, ys: &[Vec<Scalar>]) -> Scalar {
    let kind = ys.first().map_or(ScalarKind::Exact, |p| p[0].kind());
    fn rec(brackets: &[Bracket], start: usize, ys: &[Vec<Scalar>], kind: ScalarKind) -> Scalar {
        let Some((first, rest)) = brackets.split_first() else {
            return Scalar::one(kind);
        };
        let mut acc = Scalar::zero(kind);
        // the remaining brackets still need rest.len() strictly larger indices
        for j in start..ys.len().saturating_sub(rest.len()) {
            let tail = rec(rest, j + 1, ys, kind);
            acc = &acc + &(&point_power(&ys[j], first) * &tail);
        }
        acc
    }
    rec(w.brackets(), 0, ys, kind)
}

/// Linear extension of [`monomial_eval`] to polynomials.
pub fn monomial_eval_poly(p: &Polynomial, ys: &[Vec<Scalar>]) -> Scalar {
    let kind = ys.first().map_or(ScalarKind::Exact, |pt| pt[0].kind());
    let mut acc = Scalar::zero(kind);
    for (w, c) in p.iter() {
        acc = &acc + &(&Scalar::from_rat(c, kind) * &monomial_eval(w, ys));
    }
    acc
}

/// Checks pointwise that the product of two monomial evaluations equals the
/// evaluation of their quasi-shuffle product. Always true; exposed as a test
/// hook for the algebra-isomorphism property.
pub fn product_as_quasi_shuffle_check(u: &Word, v: &Word, ys: &[Vec<Scalar>]) -> bool {
    let lhs = &monomial_eval(u, ys) * &monomial_eval(v, ys);
    let rhs = monomial_eval_poly(&quasi_shuffle(u, v), ys);
    lhs == rhs
}

fn binom_with_repetition(d: u32, k: usize) -> BigUint {
    // binom(d-1+k, k)
    let mut out = BigUint::one();
    for i in 1..=k {
        out = out * BigUint::from(d as usize + i - 1) / BigUint::from(i);
    }
    out
}

/// Dimension of the weight-`n` component of the word algebra over `d`
/// letters: the sum over compositions of `n` of products of
/// `binom(d-1+i_j, i_j)`, evaluated by grouping compositions on their first
/// part.
pub fn hilbert_dim(d: u32, n: usize) -> BigUint {
    let mut dims: Vec<BigUint> = Vec::with_capacity(n + 1);
    dims.push(BigUint::one());
    for m in 1..=n {
        let mut acc = BigUint::zero();
        for i in 1..=m {
            acc += binom_with_repetition(d, i) * &dims[m - i];
        }
        dims.push(acc);
    }
    dims.pop().expect("at least the n = 0 entry")
}

/// Coefficients `t^0 .. t^max_n` of the Hilbert series
/// `G(t) = (1-t)^d / (2(1-t)^d - 1)`, computed by exact power-series
/// division.
pub fn hilbert_series_coeffs(d: u32, max_n: usize) -> Vec<BigUint> {
    // numerator (1-t)^d, truncated
    let mut num = vec![BigInt::zero(); max_n + 1];
    let mut binom = BigInt::one();
    let degree = max_n.min(d as usize);
    for (k, slot) in num.iter_mut().enumerate().take(degree + 1) {
        *slot = if k.is_multiple_of(2) {
            binom.clone()
        } else {
            -binom.clone()
        };
        binom = binom * BigInt::from(d as usize - k) / BigInt::from(k + 1);
    }
    // denominator 2(1-t)^d - 1 has constant term 1
    let mut den: Vec<BigInt> = num.iter().map(|c| c * BigInt::from(2)).collect();
    den[0] -= BigInt::one();
    debug_assert!(den[0].is_one());

    let mut out = vec![BigInt::zero(); max_n + 1];
    for n in 0..=max_n {
        let mut acc = num[n].clone();
        for k in 1..=n {
            acc -= &den[k] * &out[n - k];
        }
        out[n] = acc;
    }
    out.into_iter()
        .map(|c| c.to_biguint().expect("dimensions are nonnegative"))
        .collect()
}

/// All words of weight exactly `n` over `d` letters, each once, in canonical
/// order. Words are produced as block merges of letter multisets indexed by
/// compositions, so no deduplication is needed.
pub fn enumerate_words(d: u32, n: usize) -> Vec<Word> {
    if n == 0 {
        return vec![Word::empty()];
    }
    let mut out = Vec::new();
    for parts in compositions(n) {
        let choices: Vec<Vec<Bracket>> = parts
            .iter()
            .map(|&p| {
                letter_multisets(d, p)
                    .into_iter()
                    .map(|letters| Bracket::new(letters).expect("nonempty multiset"))
                    .collect()
            })
            .collect();
        let mut current: Vec<Bracket> = Vec::with_capacity(parts.len());
        fn rec(choices: &[Vec<Bracket>], current: &mut Vec<Bracket>, out: &mut Vec<Word>) {
            if current.len() == choices.len() {
                out.push(Word::from_brackets(current.clone()));
                return;
            }
            for b in &choices[current.len()] {
                current.push(b.clone());
                rec(choices, current, out);
                current.pop();
            }
        }
        rec(&choices, &mut current, &mut out);
    }
    out.sort_unstable();
    out
}

/// All words of weight at most `w`, in canonical order (weight is the
/// primary key of the order, so per-weight blocks concatenate sorted).
pub fn words_up_to_weight(d: u32, w: u32) -> Vec<Word> {
    (0..=w as usize).flat_map(|n| enumerate_words(d, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, Rat};
    use crate::word::parse_word_any;

    fn w(text: &str) -> Word {
        parse_word_any(text).unwrap()
    }

    fn pts(values: &[&[i64]]) -> Vec<Vec<Scalar>> {
        values
            .iter()
            .map(|row| row.iter().map(|&v| Scalar::Exact(rat_int(v))).collect())
            .collect()
    }

    #[test]
    fn monomial_eval_examples() {
        assert_eq!(
            monomial_eval(&Word::empty(), &pts(&[&[1], &[2]])),
            Scalar::Exact(Rat::one())
        );
        // d=1, w=[1][1], Y=(1,2): sum over j1<j2 of Y_j1 Y_j2 = 1*2
        assert_eq!(
            monomial_eval(&w("[1][1]"), &pts(&[&[1], &[2]])),
            Scalar::Exact(rat_int(2))
        );
        // brackets take powers: [1,1] at Y=(1,2) gives 1^2 + 2^2
        assert_eq!(
            monomial_eval(&w("[1,1]"), &pts(&[&[1], &[2]])),
            Scalar::Exact(rat_int(5))
        );
        // level 2: [1,2] multiplies coordinates pointwise
        assert_eq!(
            monomial_eval(&w("[1,2]"), &pts(&[&[2, 3], &[1, 4]])),
            Scalar::Exact(rat_int(10))
        );
    }

    #[test]
    fn quasisymmetry_under_support_shift() {
        // interleaving zeros between support points changes nothing
        let word = w("[1][1,1]");
        let dense = pts(&[&[2], &[3], &[5]]);
        let spread = pts(&[&[0], &[2], &[0], &[0], &[3], &[5], &[0]]);
        assert_eq!(monomial_eval(&word, &dense), monomial_eval(&word, &spread));
    }

    #[test]
    fn product_check_examples() {
        let ys = pts(&[&[2], &[-1], &[3], &[1], &[2]]);
        assert!(product_as_quasi_shuffle_check(
            &w("[1]"),
            &w("[1,1,1][1,1,1,1,1,1,1]"),
            &ys
        ));
        assert!(product_as_quasi_shuffle_check(&Word::empty(), &w("[1]"), &ys));
        let ys2 = pts(&[&[2, 1], &[-1, 2], &[0, 3]]);
        assert!(product_as_quasi_shuffle_check(&w("[1][2]"), &w("[1,2]"), &ys2));
    }

    #[test]
    fn hilbert_dims_for_one_letter_double() {
        let want = [1u32, 1, 2, 4, 8, 16, 32, 64];
        for (n, &dim) in want.iter().enumerate() {
            assert_eq!(hilbert_dim(1, n), BigUint::from(dim));
        }
    }

    #[test]
    fn hilbert_dim_d2_n2() {
        // compositions of 2: (2) gives binom(3,2)=3, (1,1) gives 2*2=4
        assert_eq!(hilbert_dim(2, 2), BigUint::from(7u32));
    }

    #[test]
    fn series_coeffs_match_dims() {
        for d in 1..=3 {
            let coeffs = hilbert_series_coeffs(d, 8);
            for (n, c) in coeffs.iter().enumerate() {
                assert_eq!(*c, hilbert_dim(d, n), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn enumeration_matches_dims_and_order() {
        assert_eq!(enumerate_words(2, 0), vec![Word::empty()]);
        assert_eq!(enumerate_words(1, 2), vec![w("[1][1]"), w("[1,1]")]);
        for d in 1..=3u32 {
            for n in 0..=6usize {
                let words = enumerate_words(d, n);
                assert_eq!(BigUint::from(words.len()), hilbert_dim(d, n), "d={d} n={n}");
                assert!(words.windows(2).all(|p| p[0] < p[1]), "not sorted/distinct");
                assert!(words.iter().all(|word| word.weight() as usize == n));
            }
        }
    }

    #[test]
    fn evaluation_is_multiplicative_on_random_words() {
        // pointwise product equals quasi-shuffle evaluation
        let ys = pts(&[&[1, -2], &[3, 1], &[-1, 2], &[2, 2]]);
        for u in words_up_to_weight(2, 2) {
            for v in words_up_to_weight(2, 2) {
                assert!(product_as_quasi_shuffle_check(&u, &v, &ys), "u={u} v={v}");
            }
        }
    }
}
