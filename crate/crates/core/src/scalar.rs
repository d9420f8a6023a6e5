//! Coefficient arithmetic: exact rationals and binary floats.
//!
//! All algebra-level operations (products, Hoffman maps, antipode, span
//! checks) work over exact rationals. Signatures and dual functionals may
//! carry either kind, but never both at once; the kind is fixed when a
//! functional or time series is constructed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar, always stored reduced with positive denominator.
pub type Rat = BigRational;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `n` as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Formats a rational as `p` or `p/q`.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Which coefficient field a functional or series lives over.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    Exact,
    Float,
}

/// A coefficient: exact rational or binary float. The two kinds never mix
/// within one container; arithmetic across kinds is a bug and panics.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(Rat),
    Float(f64),
}

impl Scalar {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Exact(_) => ScalarKind::Exact,
            Scalar::Float(_) => ScalarKind::Float,
        }
    }

    pub fn zero(kind: ScalarKind) -> Self {
        match kind {
            ScalarKind::Exact => Scalar::Exact(Rat::zero()),
            ScalarKind::Float => Scalar::Float(0.0),
        }
    }

    pub fn one(kind: ScalarKind) -> Self {
        match kind {
            ScalarKind::Exact => Scalar::Exact(Rat::one()),
            ScalarKind::Float => Scalar::Float(1.0),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float(f) => *f == 0.0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_one(),
            Scalar::Float(f) => *f == 1.0,
        }
    }

    /// Converts an exact rational into this scalar kind.
    pub fn from_rat(r: &Rat, kind: ScalarKind) -> Self {
        match kind {
            ScalarKind::Exact => Scalar::Exact(r.clone()),
            ScalarKind::Float => Scalar::Float(rat_to_f64(r)),
        }
    }

    pub fn as_exact(&self) -> Option<&Rat> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    /// Numeric value as `f64` (lossy for large exact rationals).
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => rat_to_f64(r),
            Scalar::Float(f) => *f,
        }
    }

    /// Divides by a positive integer, staying in the same kind.
    pub fn div_int(&self, n: u64) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r / rat_int(n as i64)),
            Scalar::Float(f) => Scalar::Float(f / n as f64),
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Float(f) => Scalar::Float(f.abs()),
        }
    }
}

fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64()
        .unwrap_or_else(|| r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN))
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a $op b),
                    _ => panic!("mixed exact and float scalars"),
                }
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(f) => Scalar::Float(-f),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{}", rat_string(r)),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}
