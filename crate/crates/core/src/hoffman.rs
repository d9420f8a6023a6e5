//! Hoffman's exponential and logarithm: the Hopf algebra isomorphism between
//! the shuffle and quasi-shuffle algebras, plus its remainder splitting and
//! the adjoint action on dual functionals.

use num::bigint::BigInt;
use num::One;

use crate::combinat::compositions;
use crate::dual::DualFunctional;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::qsym::words_up_to_weight;
use crate::scalar::{Rat, ScalarKind};
use crate::word::Word;

/// Merges consecutive blocks of `w` according to the composition `parts`:
/// the j-th output bracket is the semigroup product of the j-th block.
pub fn composition_apply(parts: &[usize], w: &Word) -> Result<Word> {
    let sum: usize = parts.iter().sum();
    if sum != w.length() {
        return Err(Error::CompositionMismatch {
            sum,
            len: w.length(),
        });
    }
    let mut out = Vec::with_capacity(parts.len());
    let mut pos = 0;
    for &p in parts {
        let mut block = w.brackets()[pos].clone();
        for b in &w.brackets()[pos + 1..pos + p] {
            block = block.merge(b);
        }
        out.push(block);
        pos += p;
    }
    Ok(Word::from_brackets(out))
}

fn factorial(n: usize) -> BigInt {
    let mut out = BigInt::one();
    for k in 2..=n {
        out *= BigInt::from(k);
    }
    out
}

/// Hoffman exponential of a basis word: sum over all compositions of the
/// length, each block merge weighted by the inverse product of factorials.
pub fn hoffman_exp(w: &Word) -> Polynomial {
    hoffman_sum(w, |parts| {
        let mut denom = BigInt::one();
        for &p in parts {
            denom *= factorial(p);
        }
        Rat::new(BigInt::one(), denom)
    })
}

/// Hoffman logarithm, the inverse of [`hoffman_exp`]: block merges weighted
/// by `(-1)^(ℓ(w)-p) / (i_1 ⋯ i_p)`.
pub fn hoffman_log(w: &Word) -> Polynomial {
    let len = w.length();
    hoffman_sum(w, |parts| {
        let mut denom = BigInt::one();
        for &p in parts {
            denom *= BigInt::from(p);
        }
        let sign = if (len - parts.len()).is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        Rat::new(sign, denom)
    })
}

fn hoffman_sum(w: &Word, coeff: impl Fn(&[usize]) -> Rat) -> Polynomial {
    if w.is_empty() {
        return Polynomial::monomial(Word::empty());
    }
    let mut out = Polynomial::zero();
    for parts in compositions(w.length()) {
        let merged = composition_apply(&parts, w).expect("composition sums to length");
        out.add_term(merged, coeff(&parts));
    }
    out
}

/// Linear extension of [`hoffman_exp`].
pub fn hoffman_exp_poly(p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (w, c) in p.iter() {
        out.add_scaled(&hoffman_exp(w), c);
    }
    out
}

/// Linear extension of [`hoffman_log`].
pub fn hoffman_log_poly(p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (w, c) in p.iter() {
        out.add_scaled(&hoffman_log(w), c);
    }
    out
}

/// Remainder of the Hoffman splitting: the compositions whose last part
/// exceeds 1, so that `Φ_H(w) = Φ_H(w₁⋯w_{n-1})·w_n + R_H(w)`.
pub fn hoffman_remainder(w: &Word) -> Result<Polynomial> {
    if w.is_empty() {
        return Err(Error::HalfShuffleOnEmpty);
    }
    let mut out = Polynomial::zero();
    for parts in compositions(w.length()) {
        if *parts.last().expect("nonempty composition") <= 1 {
            continue;
        }
        let merged = composition_apply(&parts, w).expect("composition sums to length");
        let mut denom = BigInt::one();
        for &p in &parts {
            denom *= factorial(p);
        }
        out.add_term(merged, Rat::new(BigInt::one(), denom));
    }
    Ok(out)
}

/// Adjoint of the Hoffman exponential on truncated dual functionals:
/// `⟨w, Φ*_H(c)⟩ = ⟨Φ_H(w), c⟩` for every word of weight within the
/// truncation. Maps quasi-shuffle characters to shuffle characters.
/// Exact scalars only: the inverse-factorial weights are rationals.
pub fn hoffman_adjoint(c: &DualFunctional) -> Result<DualFunctional> {
    if c.kind() != ScalarKind::Exact {
        return Err(Error::ExactScalarsRequired);
    }
    let mut out = DualFunctional::zero(c.alphabet(), c.max_weight(), c.kind());
    for w in words_up_to_weight(c.alphabet(), c.max_weight()) {
        let value = c.pair(&hoffman_exp(&w))?;
        out.set_coeff(w, value)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use crate::word::parse_word_any;

    fn w(text: &str) -> Word {
        parse_word_any(text).unwrap()
    }

    #[test]
    fn composition_apply_examples() {
        let word = w("[1][2,3][4]");
        assert_eq!(composition_apply(&[1, 1, 1], &word).unwrap(), word);
        assert_eq!(composition_apply(&[3], &word).unwrap(), w("[1,2,3,4]"));
        assert_eq!(composition_apply(&[2, 1], &word).unwrap(), w("[1,2,3][4]"));
        assert_eq!(
            composition_apply(&[2], &word),
            Err(Error::CompositionMismatch { sum: 2, len: 3 })
        );
    }

    #[test]
    fn hoffman_exp_examples() {
        assert_eq!(hoffman_exp(&w("[5]")), Polynomial::monomial(w("[5]")));
        let mut want = Polynomial::monomial(w("[1][2]"));
        want.add_term(w("[1,2]"), rat(1, 2));
        assert_eq!(hoffman_exp(&w("[1][2]")), want);

        let mut want = Polynomial::monomial(w("[1][2,3][4]"));
        want.add_term(w("[1,2,3][4]"), rat(1, 2));
        want.add_term(w("[1][2,3,4]"), rat(1, 2));
        want.add_term(w("[1,2,3,4]"), rat(1, 6));
        assert_eq!(hoffman_exp(&w("[1][2,3][4]")), want);
    }

    #[test]
    fn hoffman_log_examples() {
        assert_eq!(hoffman_log(&w("[7]")), Polynomial::monomial(w("[7]")));
        let mut want = Polynomial::monomial(w("[1][2]"));
        want.add_term(w("[1,2]"), rat(-1, 2));
        assert_eq!(hoffman_log(&w("[1][2]")), want);
    }

    #[test]
    fn exp_and_log_invert_each_other() {
        for text in ["[1]", "[1][2]", "[1][2,3][4]", "[2][1][1,1][3]"] {
            let word = w(text);
            assert_eq!(
                hoffman_log_poly(&hoffman_exp(&word)),
                Polynomial::monomial(word.clone()),
                "log∘exp != id on {word}"
            );
            assert_eq!(
                hoffman_exp_poly(&hoffman_log(&word)),
                Polynomial::monomial(word.clone()),
                "exp∘log != id on {word}"
            );
        }
    }

    #[test]
    fn remainder_examples_and_splitting() {
        assert!(hoffman_remainder(&w("[3]")).unwrap().is_zero());
        assert_eq!(
            hoffman_remainder(&w("[1][2]")).unwrap(),
            Polynomial::term(w("[1,2]"), rat(1, 2))
        );
        assert_eq!(hoffman_remainder(&Word::empty()), Err(Error::HalfShuffleOnEmpty));

        // Φ_H(w) = Φ_H(init)·last + R_H(w)
        for text in ["[1][2]", "[1][2,3][4]", "[1][1][2][1,1]"] {
            let word = w(text);
            let (init, last) = word.split_last().unwrap();
            let mut split = hoffman_exp(&init).push_bracket(last);
            split.add_assign(&hoffman_remainder(&word).unwrap());
            assert_eq!(split, hoffman_exp(&word), "splitting failed on {word}");
        }
    }

    #[test]
    fn exp_preserves_weight_and_shrinks_length() {
        let word = w("[1][2][1,2][3]");
        let image = hoffman_exp(&word);
        for (term, _) in image.iter() {
            assert_eq!(term.weight(), word.weight());
            assert!(term.length() >= 1 && term.length() <= word.length());
        }
        assert_eq!(image.coeff(&word), rat_int(1));
    }

    #[test]
    fn adjoint_fixes_the_counit_and_rejects_floats() {
        use crate::dual::DualFunctional;
        use crate::scalar::ScalarKind;
        let eps = DualFunctional::counit_functional(2, 3, ScalarKind::Exact);
        assert_eq!(hoffman_adjoint(&eps).unwrap(), eps);
        let float_eps = DualFunctional::counit_functional(2, 3, ScalarKind::Float);
        assert_eq!(hoffman_adjoint(&float_eps), Err(Error::ExactScalarsRequired));
    }

    #[test]
    fn adjoint_sends_sums_signatures_to_integral_signatures() {
        use crate::scalar::Scalar;
        use crate::series::TimeSeries;
        use crate::signature::{iterated_integrals_signature_pl, iterated_sums_signature};
        let x = TimeSeries::from_rows(vec![
            vec![Scalar::Exact(rat_int(0)), Scalar::Exact(rat_int(1))],
            vec![Scalar::Exact(rat_int(2)), Scalar::Exact(rat(1, 2))],
            vec![Scalar::Exact(rat_int(-1)), Scalar::Exact(rat_int(3))],
            vec![Scalar::Exact(rat_int(1)), Scalar::Exact(rat_int(1))],
        ])
        .unwrap();
        let ds = iterated_sums_signature(&x, 0, x.len(), 3).unwrap();
        let lifted = iterated_integrals_signature_pl(&x, 3).unwrap();
        assert_eq!(hoffman_adjoint(ds.functional()).unwrap(), lifted);
    }

    #[test]
    fn adjoint_is_multiplicative_for_convolution() {
        use crate::dual::convolve;
        use crate::scalar::Scalar;
        use crate::series::TimeSeries;
        use crate::signature::iterated_sums_signature;
        let x = TimeSeries::from_rows(
            [0, 2, -1, 3, 1]
                .iter()
                .map(|&v| vec![Scalar::Exact(rat_int(v))])
                .collect(),
        )
        .unwrap();
        let left = iterated_sums_signature(&x, 0, 2, 3).unwrap().into_functional();
        let right = iterated_sums_signature(&x, 2, 4, 3).unwrap().into_functional();
        let adjoint_of_product = hoffman_adjoint(&convolve(&left, &right).unwrap()).unwrap();
        let product_of_adjoints = convolve(
            &hoffman_adjoint(&left).unwrap(),
            &hoffman_adjoint(&right).unwrap(),
        )
        .unwrap();
        assert_eq!(adjoint_of_product, product_of_adjoints);
    }

    #[test]
    fn lie_bracket_compatibility() {
        // Φ_H(u([a][b]-[b][a])) = Φ_H(u[a])[b] - Φ_H(u[b])[a]
        let u = w("[2][1,1]");
        let a = crate::word::canonical_bracket(&[1, 2], 3).unwrap();
        let b = crate::word::canonical_bracket(&[3], 3).unwrap();
        let lhs = {
            let mut p = Polynomial::monomial(u.push(&a).push(&b));
            p.add_term(u.push(&b).push(&a), rat_int(-1));
            hoffman_exp_poly(&p)
        };
        let rhs = {
            let mut p = hoffman_exp(&u.push(&a)).push_bracket(&b);
            p.add_scaled(&hoffman_exp(&u.push(&b)).push_bracket(&a), &rat_int(-1));
            p
        };
        assert_eq!(lhs, rhs);
    }
}
