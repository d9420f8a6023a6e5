//! Discrete time series over `𝔽^d`: a base point followed by ordered
//! points, extended constantly after the last entry. Increments are indexed
//! from 1 and vanish beyond the end.

use crate::combinat::letter_multisets;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarKind};
use crate::word::Bracket;

#[derive(Clone, Debug, PartialEq)]
pub struct TimeSeries {
    base: Vec<Scalar>,
    points: Vec<Vec<Scalar>>,
    kind: ScalarKind,
}

impl TimeSeries {
    /// Builds a series from the base point `x₀` and the points `x₁…x_N`.
    /// All points must share the base's dimension and scalar kind.
    pub fn new(base: Vec<Scalar>, points: Vec<Vec<Scalar>>) -> Result<Self> {
        let d = base.len();
        if d == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let kind = base[0].kind();
        for p in std::iter::once(&base).chain(points.iter()) {
            if p.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: p.len(),
                });
            }
            if p.iter().any(|s| s.kind() != kind) {
                return Err(Error::ScalarKindMismatch);
            }
        }
        Ok(TimeSeries { base, points, kind })
    }

    /// Builds a series from rows `x₀, x₁, …, x_N`.
    pub fn from_rows(mut rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let base = rows.remove(0);
        TimeSeries::new(base, rows)
    }

    /// Number of points after the base, i.e. the last index `N` with a
    /// possibly nonzero increment.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> u32 {
        self.base.len() as u32
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn base(&self) -> &[Scalar] {
        &self.base
    }

    pub fn points(&self) -> &[Vec<Scalar>] {
        &self.points
    }

    /// `x_n` with constant extension beyond the end.
    pub fn value(&self, n: usize) -> &[Scalar] {
        if n == 0 || self.points.is_empty() {
            &self.base
        } else {
            &self.points[n.min(self.points.len()) - 1]
        }
    }

    /// `Δx_j = x_j - x_{j-1}` for `j ≥ 1`; zero beyond the end.
    pub fn increment(&self, j: usize) -> Vec<Scalar> {
        assert!(j >= 1, "increments are indexed from 1");
        if j > self.points.len() {
            return vec![Scalar::zero(self.kind); self.base.len()];
        }
        let current = self.value(j);
        let previous = self.value(j - 1);
        current
            .iter()
            .zip(previous.iter())
            .map(|(a, b)| a - b)
            .collect()
    }

    /// The bracket monomial of the `j`-th increment: the product over the
    /// bracket's letters, with multiplicity, of the increment coordinates.
    pub fn bracket_increment(&self, j: usize, bracket: &Bracket) -> Scalar {
        assert!(
            bracket.max_letter() <= self.dim(),
            "bracket letter beyond series dimension"
        );
        if j > self.points.len() {
            return Scalar::zero(self.kind);
        }
        let delta = self.increment(j);
        let mut out = Scalar::one(self.kind);
        for &l in bracket.letters() {
            out = &out * &delta[(l - 1) as usize];
        }
        out
    }

    /// Time warping: repeats the value at time `n` once, shifting the rest.
    /// The result has one more point.
    pub fn time_warp(&self, n: usize) -> TimeSeries {
        assert!(n >= 1, "time warping repeats a time index >= 1");
        let new_len = self.points.len() + 1;
        let points = (1..=new_len)
            .map(|j| {
                if j <= n {
                    self.value(j).to_vec()
                } else {
                    self.value(j - 1).to_vec()
                }
            })
            .collect();
        TimeSeries {
            base: self.base.clone(),
            points,
            kind: self.kind,
        }
    }

    /// The series run backwards, re-based at the last point.
    pub fn reversed(&self) -> TimeSeries {
        let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(self.points.len() + 1);
        rows.push(self.value(self.points.len()).to_vec());
        for n in (0..self.points.len()).rev() {
            rows.push(self.value(n).to_vec());
        }
        TimeSeries::from_rows(rows).expect("reversal preserves shape")
    }

    /// Increment sequences of the lifted path: for every bracket of weight
    /// at most `max_weight`, in canonical order, the per-step bracket
    /// monomials `(Δx_j^{[a]})_{j=1..N}`. These are the increments of the
    /// component paths whose running sums interpolate the lift.
    pub fn lift_increments(&self, max_weight: u32) -> Vec<(Bracket, Vec<Scalar>)> {
        let mut out = Vec::new();
        for size in 1..=max_weight as usize {
            for letters in letter_multisets(self.dim(), size) {
                let bracket = Bracket::new(letters).expect("nonempty multiset");
                let seq = (1..=self.points.len())
                    .map(|j| self.bracket_increment(j, &bracket))
                    .collect();
                out.push((bracket, seq));
            }
        }
        out
    }
}
