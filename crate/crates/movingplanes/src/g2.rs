//! The geometric algebra of the Euclidean plane.
//!
//! Elements are spanned by `{1, e1, e2, e12}` with `e1^2 = e2^2 = 1`,
//! `e1 e2 = -e2 e1`, and `i = e12` squaring to `-1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default tolerance for zero tests; scaled by operand magnitude where relevant.
pub const DEFAULT_EPS: f64 = 1e-10;

/// A multivector of the plane algebra: `s + v1 e1 + v2 e2 + b e12`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct G2 {
    pub s: f64,
    pub e1: f64,
    pub e2: f64,
    pub e12: f64,
}

/// A grade-1 element `v1 e1 + v2 e2` of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vector2 {
    pub e1: f64,
    pub e2: f64,
}

/// Classification of a nonzero element with vanishing scalar part by the sign
/// of its square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroScalarClass {
    /// `A^2 > 0`
    RelativeVector,
    /// `A^2 = 0`
    Nilpotent,
    /// `A^2 < 0`
    RelativeBivector,
}

impl G2 {
    pub const ZERO: G2 = G2 { s: 0.0, e1: 0.0, e2: 0.0, e12: 0.0 };
    pub const ONE: G2 = G2 { s: 1.0, e1: 0.0, e2: 0.0, e12: 0.0 };
    pub const E1: G2 = G2 { s: 0.0, e1: 1.0, e2: 0.0, e12: 0.0 };
    pub const E2: G2 = G2 { s: 0.0, e1: 0.0, e2: 1.0, e12: 0.0 };
    /// The unit bivector `i = e1 e2`.
    pub const I: G2 = G2 { s: 0.0, e1: 0.0, e2: 0.0, e12: 1.0 };

    pub fn new(s: f64, e1: f64, e2: f64, e12: f64) -> Self {
        G2 { s, e1, e2, e12 }
    }

    pub fn scalar(x: f64) -> Self {
        G2 { s: x, ..G2::ZERO }
    }

    pub fn bivector(b: f64) -> Self {
        G2 { e12: b, ..G2::ZERO }
    }

    /// Geometric product.
    pub fn gp(self, rhs: G2) -> G2 {
        let (a0, a1, a2, a3) = (self.s, self.e1, self.e2, self.e12);
        let (b0, b1, b2, b3) = (rhs.s, rhs.e1, rhs.e2, rhs.e12);
        G2 {
            s: a0 * b0 + a1 * b1 + a2 * b2 - a3 * b3,
            e1: a0 * b1 + a1 * b0 - a2 * b3 + a3 * b2,
            e2: a0 * b2 + a2 * b0 + a1 * b3 - a3 * b1,
            e12: a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        }
    }

    /// Symmetric product `(ab + ba)/2`.
    pub fn sym(self, rhs: G2) -> G2 {
        (self.gp(rhs) + rhs.gp(self)).scale(0.5)
    }

    /// Anti-symmetric product `(ab - ba)/2`.
    pub fn antisym(self, rhs: G2) -> G2 {
        (self.gp(rhs) - rhs.gp(self)).scale(0.5)
    }

    pub fn scale(self, k: f64) -> G2 {
        G2 { s: k * self.s, e1: k * self.e1, e2: k * self.e2, e12: k * self.e12 }
    }

    /// Projection onto grade `k`.
    pub fn grade(self, k: u32) -> Result<G2> {
        match k {
            0 => Ok(G2::scalar(self.s)),
            1 => Ok(G2 { s: 0.0, e1: self.e1, e2: self.e2, e12: 0.0 }),
            2 => Ok(G2::bivector(self.e12)),
            _ => Err(Error::InvalidGrade(k)),
        }
    }

    pub fn scalar_part(self) -> f64 {
        self.s
    }

    pub fn vector_part(self) -> Vector2 {
        Vector2 { e1: self.e1, e2: self.e2 }
    }

    pub fn bivector_part(self) -> f64 {
        self.e12
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(self) -> f64 {
        self.s.abs().max(self.e1.abs()).max(self.e2.abs()).max(self.e12.abs())
    }

    /// True when the element has no scalar part (within `eps`, scale-aware).
    pub fn is_zero_scalar(self, eps: f64) -> bool {
        self.s.abs() <= eps * self.max_abs().max(1.0)
    }

    /// Classify a nonzero element with vanishing scalar part by the sign of
    /// its square. The nilpotent band is `|A^2| < eps * max(1, |A|_inf^2)`.
    pub fn classify_zero_scalar(self) -> Result<ZeroScalarClass> {
        self.classify_zero_scalar_eps(DEFAULT_EPS)
    }

    pub fn classify_zero_scalar_eps(self, eps: f64) -> Result<ZeroScalarClass> {
        if !self.is_zero_scalar(eps) {
            return Err(Error::NonzeroScalar(self.s));
        }
        let sq = self.gp(self).s;
        let scale = self.max_abs();
        if sq.abs() < eps * (scale * scale).max(1.0) {
            Ok(ZeroScalarClass::Nilpotent)
        } else if sq > 0.0 {
            Ok(ZeroScalarClass::RelativeVector)
        } else {
            Ok(ZeroScalarClass::RelativeBivector)
        }
    }

    /// Exponential of an element with vanishing scalar part, in closed form:
    /// circular for a relative bivector, hyperbolic for a relative vector, and
    /// `1 + A` in the nilpotent case.
    pub fn exp_zero_scalar(self) -> Result<G2> {
        match self.classify_zero_scalar()? {
            ZeroScalarClass::RelativeBivector => {
                let theta = (-self.gp(self).s).sqrt();
                Ok(G2::scalar(theta.cos()) + self.scale(sinc(theta)))
            }
            ZeroScalarClass::RelativeVector => {
                let phi = self.gp(self).s.sqrt();
                Ok(G2::scalar(phi.cosh()) + self.scale(sinhc(phi)))
            }
            ZeroScalarClass::Nilpotent => Ok(G2::ONE + self),
        }
    }

    /// Scalar value of `A o (B (x) C)` for elements with vanishing scalar
    /// part; equals minus the determinant of the 3x3 coefficient matrix over
    /// `(e1, e2, i)`.
    pub fn triple_sym(self, b: G2, c: G2) -> Result<f64> {
        for g in [self, b, c] {
            if !g.is_zero_scalar(DEFAULT_EPS) {
                return Err(Error::NonzeroScalar(g.s));
            }
        }
        Ok(self.sym(b.antisym(c)).s)
    }

    /// Reverse: negates the bivector part (order reversal of vector factors).
    pub fn reverse(self) -> G2 {
        G2 { e12: -self.e12, ..self }
    }

    /// Inverse where it exists: `g^{-1} = rev(g) / (g rev(g))` when the
    /// product `g rev(g)` is a nonzero scalar, else via the full 2x2 route.
    pub fn inverse(self) -> Option<G2> {
        // g * rev(g) = s^2 + e12^2 - e1^2 - e2^2 + 2(s e1 - ...)? Not scalar
        // in general; use the spinor/vector split determinant instead.
        let det = self.s * self.s + self.e12 * self.e12
            - self.e1 * self.e1
            - self.e2 * self.e2;
        if det.abs() < 1e-300 {
            return None;
        }
        // Clifford conjugate g~ = s - v - b i satisfies g g~ = det.
        let conj = G2 { s: self.s, e1: -self.e1, e2: -self.e2, e12: -self.e12 };
        Some(conj.scale(1.0 / det))
    }
}

/// `sin(x)/x` with a Taylor guard near zero.
pub(crate) fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-6 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// `sinh(x)/x` with a Taylor guard near zero.
pub(crate) fn sinhc(x: f64) -> f64 {
    if x.abs() < 1e-6 {
        1.0 + x * x / 6.0
    } else {
        x.sinh() / x
    }
}

impl Vector2 {
    pub fn new(e1: f64, e2: f64) -> Self {
        Vector2 { e1, e2 }
    }

    /// Symmetric inner product of two vectors.
    pub fn inner(self, rhs: Vector2) -> f64 {
        self.e1 * rhs.e1 + self.e2 * rhs.e2
    }

    /// Coefficient of `i` in the outer product.
    pub fn outer(self, rhs: Vector2) -> f64 {
        self.e1 * rhs.e2 - self.e2 * rhs.e1
    }

    pub fn norm(self) -> f64 {
        self.inner(self).sqrt()
    }

    pub fn scale(self, k: f64) -> Vector2 {
        Vector2 { e1: k * self.e1, e2: k * self.e2 }
    }
}

impl From<Vector2> for G2 {
    fn from(v: Vector2) -> G2 {
        G2 { s: 0.0, e1: v.e1, e2: v.e2, e12: 0.0 }
    }
}

impl Add for G2 {
    type Output = G2;
    fn add(self, rhs: G2) -> G2 {
        G2 {
            s: self.s + rhs.s,
            e1: self.e1 + rhs.e1,
            e2: self.e2 + rhs.e2,
            e12: self.e12 + rhs.e12,
        }
    }
}

impl Sub for G2 {
    type Output = G2;
    fn sub(self, rhs: G2) -> G2 {
        self + rhs.neg()
    }
}

impl Neg for G2 {
    type Output = G2;
    fn neg(self) -> G2 {
        self.scale(-1.0)
    }
}

impl Mul for G2 {
    type Output = G2;
    fn mul(self, rhs: G2) -> G2 {
        self.gp(rhs)
    }
}

impl Mul<G2> for f64 {
    type Output = G2;
    fn mul(self, rhs: G2) -> G2 {
        rhs.scale(self)
    }
}

impl Add for Vector2 {
    type Output = Vector2;
    fn add(self, rhs: Vector2) -> Vector2 {
        Vector2 { e1: self.e1 + rhs.e1, e2: self.e2 + rhs.e2 }
    }
}

impl Sub for Vector2 {
    type Output = Vector2;
    fn sub(self, rhs: Vector2) -> Vector2 {
        Vector2 { e1: self.e1 - rhs.e1, e2: self.e2 - rhs.e2 }
    }
}

impl Neg for Vector2 {
    type Output = Vector2;
    fn neg(self) -> Vector2 {
        self.scale(-1.0)
    }
}

impl fmt::Display for G2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::format::write_terms(
            f,
            &[(self.s, ""), (self.e1, "e1"), (self.e2, "e2"), (self.e12, "e12")],
        )
    }
}

impl FromStr for G2 {
    type Err = Error;

    /// Parses `a + b e1 + c e2 + d e12` with omitted zero terms; whitespace
    /// insensitive.
    fn from_str(text: &str) -> Result<G2> {
        let mut g = G2::ZERO;
        for (coeff, basis) in crate::format::parse_terms(text, &["e12", "e1", "e2"])? {
            match basis {
                "" => g.s += coeff,
                "e1" => g.e1 += coeff,
                "e2" => g.e2 += coeff,
                "e12" => g.e12 += coeff,
                _ => unreachable!(),
            }
        }
        Ok(g)
    }
}
