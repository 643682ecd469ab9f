//! The hyperbolic number plane: `w = x + u y` with `u^2 = 1`.
//!
//! A commutative ring with zero divisors on the null cone `|x| = |y|`. Off
//! the cone every number has an Euler form `+/- rho e^{u phi}` or
//! `+/- rho u e^{u phi}`, one for each branch of the unit hyperbola.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Hyperbolic {
    pub x: f64,
    pub y: f64,
}

/// Which pair of hyperbola branches a number sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `|x| > |y|`: the number is `sign * rho * e^{u phi}`.
    Timelike,
    /// `|y| > |x|`: the number is `sign * rho * u * e^{u phi}`.
    Spacelike,
}

/// Euler form of a hyperbolic number off the null cone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicPolar {
    pub sign: f64,
    pub axis: Branch,
    pub rho: f64,
    pub phi: f64,
}

impl Hyperbolic {
    pub const ZERO: Hyperbolic = Hyperbolic { x: 0.0, y: 0.0 };
    pub const ONE: Hyperbolic = Hyperbolic { x: 1.0, y: 0.0 };
    pub const U: Hyperbolic = Hyperbolic { x: 0.0, y: 1.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Hyperbolic { x, y }
    }

    /// `e^{u phi} = cosh(phi) + u sinh(phi)`.
    pub fn exp_u(phi: f64) -> Self {
        Hyperbolic { x: phi.cosh(), y: phi.sinh() }
    }

    /// Ring product: moduli multiply, hyperbolic angles add.
    pub fn hmul(self, rhs: Hyperbolic) -> Hyperbolic {
        Hyperbolic {
            x: self.x * rhs.x + self.y * rhs.y,
            y: self.x * rhs.y + self.y * rhs.x,
        }
    }

    /// Conjugate `w^- = x - u y`.
    pub fn conj(self) -> Hyperbolic {
        Hyperbolic { x: self.x, y: -self.y }
    }

    /// `|w w^-| = |x^2 - y^2| = rho^2`.
    pub fn modulus_sq(self) -> f64 {
        (self.x * self.x - self.y * self.y).abs()
    }

    /// True when the number lies on the null cone, scale-invariantly.
    pub fn is_null(self) -> bool {
        let q = self.x * self.x + self.y * self.y;
        (self.x * self.x - self.y * self.y).abs() <= 1e-12 * q
    }

    /// Euler form; fails on the null cone.
    pub fn polar(self) -> Result<HyperbolicPolar> {
        if self.is_null() {
            return Err(Error::NullCone);
        }
        let rho = self.modulus_sq().sqrt();
        if self.x.abs() > self.y.abs() {
            Ok(HyperbolicPolar {
                sign: self.x.signum(),
                axis: Branch::Timelike,
                rho,
                phi: (self.y / self.x).atanh(),
            })
        } else {
            Ok(HyperbolicPolar {
                sign: self.y.signum(),
                axis: Branch::Spacelike,
                rho,
                phi: (self.x / self.y).atanh(),
            })
        }
    }

    /// Hyperbolic distance `sqrt(|(x1-x2)^2 - (y1-y2)^2|)`.
    pub fn distance(self, rhs: Hyperbolic) -> f64 {
        (self - rhs).modulus_sq().sqrt()
    }
}

impl HyperbolicPolar {
    /// Rebuilds the hyperbolic number this polar form came from.
    pub fn reconstruct(self) -> Hyperbolic {
        let e = Hyperbolic::exp_u(self.phi);
        let base = match self.axis {
            Branch::Timelike => e,
            Branch::Spacelike => Hyperbolic::U.hmul(e),
        };
        Hyperbolic { x: self.sign * self.rho * base.x, y: self.sign * self.rho * base.y }
    }
}

impl Add for Hyperbolic {
    type Output = Hyperbolic;
    fn add(self, rhs: Hyperbolic) -> Hyperbolic {
        Hyperbolic { x: self.x + rhs.x, y: self.y + rhs.y }
    }
}

impl Sub for Hyperbolic {
    type Output = Hyperbolic;
    fn sub(self, rhs: Hyperbolic) -> Hyperbolic {
        Hyperbolic { x: self.x - rhs.x, y: self.y - rhs.y }
    }
}

impl Neg for Hyperbolic {
    type Output = Hyperbolic;
    fn neg(self) -> Hyperbolic {
        Hyperbolic { x: -self.x, y: -self.y }
    }
}

impl Mul for Hyperbolic {
    type Output = Hyperbolic;
    fn mul(self, rhs: Hyperbolic) -> Hyperbolic {
        self.hmul(rhs)
    }
}

impl fmt::Display for Hyperbolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::format::write_terms(f, &[(self.x, ""), (self.y, "u")])
    }
}

impl FromStr for Hyperbolic {
    type Err = Error;

    fn from_str(text: &str) -> Result<Hyperbolic> {
        let mut w = Hyperbolic::ZERO;
        for (coeff, basis) in crate::format::parse_terms(text, &["u"])? {
            match basis {
                "" => w.x += coeff,
                "u" => w.y += coeff,
                _ => unreachable!(),
            }
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_law() {
        let (a, b) = (0.4, 1.1);
        let prod = Hyperbolic::exp_u(a) * Hyperbolic::exp_u(b);
        let expect = Hyperbolic::exp_u(a + b);
        assert!((prod.x - expect.x).abs() < 1e-12);
        assert!((prod.y - expect.y).abs() < 1e-12);
    }

    #[test]
    fn zero_divisors() {
        let w = Hyperbolic::new(1.0, 1.0) * Hyperbolic::new(1.0, -1.0);
        assert_eq!(w, Hyperbolic::ZERO);
    }

    #[test]
    fn polar_branches() {
        let p = Hyperbolic::new(5.0, 3.0).polar().unwrap();
        assert_eq!(p.axis, Branch::Timelike);
        assert_eq!(p.sign, 1.0);
        assert!((p.rho - 4.0).abs() < 1e-12);
        assert!((p.phi - 0.6f64.atanh()).abs() < 1e-12);

        let p = Hyperbolic::ONE.polar().unwrap();
        assert_eq!((p.sign, p.axis, p.rho, p.phi), (1.0, Branch::Timelike, 1.0, 0.0));

        let p = Hyperbolic::new(1.0, -4.0).polar().unwrap();
        assert_eq!(p.axis, Branch::Spacelike);
        assert_eq!(p.sign, -1.0);
        let w = p.reconstruct();
        assert!((w.x - 1.0).abs() < 1e-12 && (w.y + 4.0).abs() < 1e-12);

        assert_eq!(Hyperbolic::new(1.0, 1.0).polar(), Err(Error::NullCone));
    }

    #[test]
    fn distance() {
        let w1 = Hyperbolic::new(5.0, 3.0);
        assert_eq!(w1.distance(w1), 0.0);
        assert!((w1.distance(Hyperbolic::ZERO) - 4.0).abs() < 1e-12);
        assert_eq!(Hyperbolic::new(1.0, 1.0).distance(Hyperbolic::ZERO), 0.0);
    }

    #[test]
    fn conj_and_modulus() {
        let w = Hyperbolic::new(2.0, 3.0);
        assert_eq!(w.conj(), Hyperbolic::new(2.0, -3.0));
        assert!((Hyperbolic::new(5.0, 3.0).modulus_sq() - 16.0).abs() < 1e-12);
    }

    #[test]
    fn text_and_json() {
        let w = Hyperbolic::new(1.5, -2.0);
        assert_eq!(w.to_string().parse::<Hyperbolic>().unwrap(), w);
        let js = serde_json::to_string(&w).unwrap();
        let back: Hyperbolic = serde_json::from_str(&js).unwrap();
        assert_eq!(back, w);
    }
}
