//! Area operations: the antisymmetrized right half-shuffles in both the
//! shuffle and quasi-shuffle pictures, iterated area spaces, and exact
//! span-membership checking.

use std::collections::BTreeSet;

use crate::combinat::letter_multisets;
use crate::error::Result;
use crate::hopf::{half_shuffle_qsh, half_shuffle_sh, QshHalf, ShHalf};
use crate::linalg::{solve_combination, RowReducer};
use crate::poly::Polynomial;
use crate::scalar::Rat;
use crate::word::{Bracket, Word};

/// Area map on basis words: `area(u, v) = u ≻ v - v ≻ u`. Antisymmetric and
/// weight-homogeneous; undefined when either word is empty.
pub fn area(u: &Word, v: &Word) -> Result<Polynomial> {
    let forward = half_shuffle_sh(ShHalf::Right, u, v)?;
    let backward = half_shuffle_sh(ShHalf::Right, v, u)?;
    Ok(&forward - &backward)
}

/// Discrete area map: `darea(u, v) = u ≻̇ v - v ≻̇ u`.
pub fn darea(u: &Word, v: &Word) -> Result<Polynomial> {
    let forward = half_shuffle_qsh(QshHalf::Right, u, v)?;
    let backward = half_shuffle_qsh(QshHalf::Right, v, u)?;
    Ok(&forward - &backward)
}

/// Bilinear extension of [`area`].
pub fn area_poly(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    bilinear(p, q, area)
}

/// Bilinear extension of [`darea`].
pub fn darea_poly(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    bilinear(p, q, darea)
}

fn bilinear(
    p: &Polynomial,
    q: &Polynomial,
    op: impl Fn(&Word, &Word) -> Result<Polynomial>,
) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    for (u, cu) in p.iter() {
        for (v, cv) in q.iter() {
            out.add_scaled(&op(u, v)?, &(cu * cv));
        }
    }
    Ok(out)
}

/// Which area operation generates the space: the shuffle-side `area` or the
/// quasi-shuffle-side `darea`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum AreaKind {
    Continuous,
    Discrete,
}

/// Basis (extracted from the spanning set by exact elimination) of the
/// depth-`n` iterated area space, restricted to weight at most `max_weight`
/// for finiteness. Depth 1 is the span of the brackets themselves; depth
/// `n+1` is spanned by areas of lower depths pairing to `n+1`.
pub fn area_space_basis(
    kind: AreaKind,
    depth: usize,
    d: u32,
    max_weight: u32,
) -> Result<Vec<Polynomial>> {
    assert!(depth >= 1, "area spaces start at depth 1");
    let op = match kind {
        AreaKind::Continuous => area_poly,
        AreaKind::Discrete => darea_poly,
    };
    let mut levels: Vec<Vec<Polynomial>> = Vec::with_capacity(depth);
    let bracket_level: Vec<Polynomial> = (1..=max_weight as usize)
        .flat_map(|k| letter_multisets(d, k))
        .map(|letters| {
            Polynomial::monomial(Word::single(
                Bracket::new(letters).expect("nonempty multiset"),
            ))
        })
        .collect();
    levels.push(bracket_level);
    for n in 2..=depth {
        let mut candidates = Vec::new();
        for m in 1..n {
            for p in &levels[n - m - 1] {
                for q in &levels[m - 1] {
                    let result = op(p, q)?;
                    if result.is_zero() {
                        continue;
                    }
                    let weight = result
                        .homogeneous_weight()
                        .expect("areas of homogeneous inputs are homogeneous");
                    if weight <= max_weight {
                        candidates.push(result);
                    }
                }
            }
        }
        levels.push(reduce_to_basis(candidates));
    }
    Ok(levels.pop().expect("depth >= 1"))
}

/// Reduces a spanning set to a linearly independent subset, keeping the
/// earliest spanning elements.
fn reduce_to_basis(candidates: Vec<Polynomial>) -> Vec<Polynomial> {
    let support = word_support(&candidates);
    let mut reducer = RowReducer::new();
    let mut basis = Vec::new();
    for p in candidates {
        if reducer.insert(vectorize(&p, &support)) {
            basis.push(p);
        }
    }
    basis
}

/// The union of term supports, in canonical word order.
pub fn word_support(polys: &[Polynomial]) -> Vec<Word> {
    let mut words = BTreeSet::new();
    for p in polys {
        for (w, _) in p.iter() {
            words.insert(w.clone());
        }
    }
    words.into_iter().collect()
}

/// Dense coefficient row of `p` over the given word order.
pub fn vectorize(p: &Polynomial, support: &[Word]) -> Vec<Rat> {
    support.iter().map(|w| p.coeff(w)).collect()
}

/// Exact span membership: `Some(certificate)` with coefficients expressing
/// `p` in the generators, or `None` when `p` is outside the span.
pub fn span_membership(p: &Polynomial, generators: &[Polynomial]) -> Option<Vec<Rat>> {
    let mut all: Vec<Polynomial> = generators.to_vec();
    all.push(p.clone());
    let support = word_support(&all);
    let rows: Vec<Vec<Rat>> = generators.iter().map(|g| vectorize(g, &support)).collect();
    solve_combination(&rows, &vectorize(p, &support))
}
