//! Active rotations and active Lorentz boosts of the plane algebra, relative
//! bases, and the classification of elements squaring to `-1` as oriented
//! moving frames.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::g2::{G2, Vector2};

/// A vector of the plane with unit Euclidean norm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitVector2 {
    e1: f64,
    e2: f64,
}

impl UnitVector2 {
    /// Normalizes a nonzero vector.
    pub fn new(v: Vector2) -> Option<UnitVector2> {
        let n = v.norm();
        if n == 0.0 || !n.is_finite() {
            return None;
        }
        Some(UnitVector2 { e1: v.e1 / n, e2: v.e2 / n })
    }

    pub fn from_angle(theta: f64) -> UnitVector2 {
        UnitVector2 { e1: theta.cos(), e2: theta.sin() }
    }

    pub const E1: UnitVector2 = UnitVector2 { e1: 1.0, e2: 0.0 };
    pub const E2: UnitVector2 = UnitVector2 { e1: 0.0, e2: 1.0 };

    pub fn vector(self) -> Vector2 {
        Vector2 { e1: self.e1, e2: self.e2 }
    }

    pub fn mv(self) -> G2 {
        self.vector().into()
    }
}

/// A moving plane: an element `h` with `h^2 = -1`, stored as
/// `h = orientation * i * e^{phi a}` with `phi >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrientedFrame {
    pub orientation: f64,
    pub a: UnitVector2,
    pub phi: f64,
}

impl OrientedFrame {
    /// The rest frame of the standard bivector `i`.
    pub const REST: OrientedFrame =
        OrientedFrame { orientation: 1.0, a: UnitVector2::E1, phi: 0.0 };

    pub fn new(orientation: f64, a: UnitVector2, phi: f64) -> Self {
        OrientedFrame { orientation, a, phi }
    }

    /// Positively oriented frame boosted along `a` by hyperbolic angle `phi`.
    pub fn positive(a: UnitVector2, phi: f64) -> Self {
        OrientedFrame { orientation: 1.0, a, phi }
    }

    /// The element `h = orientation * i * e^{phi a}`.
    pub fn reconstruct(self) -> G2 {
        let e = (self.phi * self.a.mv()).exp_zero_scalar().expect("vector exponent");
        self.orientation * (G2::I * e)
    }

    /// Velocity `a tanh(phi)` of the frame relative to the standard plane.
    pub fn velocity(self) -> Vector2 {
        self.a.vector().scale(self.phi.tanh())
    }
}

/// A boosted orthonormal basis `{e1', e2', j = e1' e2'}` of the plane algebra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelativeBasis {
    pub e1p: G2,
    pub e2p: G2,
    pub j: G2,
}

/// Rotation `e^{-i theta/2} x e^{i theta/2}`, counterclockwise in the plane
/// of `i`.
pub fn rotate(x: Vector2, theta: f64) -> Vector2 {
    let half = G2::scalar((theta / 2.0).cos()) - (theta / 2.0).sin() * G2::I;
    (half * G2::from(x) * half.reverse()).vector_part()
}

/// The rotor `(b a)^{1/2} = e^{-i theta/2}` whose sandwich takes `a` to `b`.
/// Fails for antipodal inputs, where the rotation axis is ambiguous.
pub fn rotor_between(a: UnitVector2, b: UnitVector2) -> Result<G2> {
    let ba = b.mv() * a.mv(); // cos(theta) + i sin(-theta)? b a = cos th - i sin th
    // b a = b.a + b^a = cos(theta) - i sin(theta) for theta the angle a -> b.
    let theta = f64::atan2(-ba.e12, ba.s);
    if (std::f64::consts::PI - theta.abs()).abs() < 1e-9 {
        return Err(Error::AmbiguousRotor);
    }
    Ok(G2::scalar((theta / 2.0).cos()) - (theta / 2.0).sin() * G2::I)
}

/// Active Lorentz boost `e^{-phi a/2} x e^{phi a/2}` along the unit vector
/// `a`; an algebra automorphism that mixes vectors and bivectors.
pub fn active_boost(x: G2, a: UnitVector2, phi: f64) -> G2 {
    let half = ((phi / 2.0) * a.mv()).exp_zero_scalar().expect("vector exponent");
    let half_inv = ((-phi / 2.0) * a.mv()).exp_zero_scalar().expect("vector exponent");
    half_inv * x * half
}

/// The relative orthonormal basis obtained by boosting the standard basis:
/// `e1' = a`, `e2' = a i e^{phi a}`, `j = i e^{phi a}`.
pub fn relative_basis(a: UnitVector2, phi: f64) -> RelativeBasis {
    let e = (phi * a.mv()).exp_zero_scalar().expect("vector exponent");
    let e1p = a.mv();
    let e2p = a.mv() * G2::I * e;
    RelativeBasis { e1p, e2p, j: e1p * e2p }
}

/// Decomposes an element with `h^2 = -1` as `orientation * i * e^{phi a}`
/// with `phi >= 0`. At `phi = 0` the direction is arbitrary and `e1` is
/// returned.
pub fn classify_unit_minus_one(h: G2) -> Result<OrientedFrame> {
    let sq = h * h;
    let off_scalar =
        sq.e1.abs().max(sq.e2.abs()).max(sq.e12.abs()).max(h.s.abs());
    if (sq.s + 1.0).abs() > 1e-9 || off_scalar > 1e-9 {
        return Err(Error::NotUnitBivector(sq.s));
    }
    let orientation = if h.e12 >= 0.0 { 1.0 } else { -1.0 };
    let sinh_phi = (h.e1 * h.e1 + h.e2 * h.e2).sqrt();
    if sinh_phi < 1e-300 {
        return Ok(OrientedFrame { orientation, a: UnitVector2::E1, phi: 0.0 });
    }
    // orientation * h = |h3| i + (i a sinh phi), so a = (h1 e2 - h2 e1)/sinh phi
    // up to the orientation sign.
    let a = UnitVector2 {
        e1: -orientation * h.e2 / sinh_phi,
        e2: orientation * h.e1 / sinh_phi,
    };
    Ok(OrientedFrame { orientation, a, phi: sinh_phi.asinh() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::assert_g2_close;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn quarter_turn() {
        let r = rotate(Vector2::new(1.0, 0.0), FRAC_PI_2);
        assert!((r.e1).abs() < 1e-15 && (r.e2 - 1.0).abs() < 1e-15);
        let r = rotate(Vector2::new(0.0, 1.0), FRAC_PI_2);
        assert!((r.e1 + 1.0).abs() < 1e-15 && (r.e2).abs() < 1e-15);
        let v = Vector2::new(0.3, -0.4);
        assert_eq!(rotate(v, 0.0), v);
    }

    #[test]
    fn rotor_between_sandwich() {
        let a = UnitVector2::E1;
        let b = UnitVector2::E2;
        let r = rotor_between(a, b).unwrap();
        assert_g2_close(r * a.mv() * r.reverse(), b.mv(), 1e-15);
        assert_g2_close(rotor_between(a, a).unwrap(), G2::ONE, 1e-15);
        assert_eq!(
            rotor_between(a, UnitVector2::from_angle(PI)),
            Err(Error::AmbiguousRotor)
        );
    }

    #[test]
    fn boost_invariant_direction() {
        let a = UnitVector2::from_angle(0.7);
        assert_g2_close(active_boost(a.mv(), a, 1.3), a.mv(), 1e-12);
    }

    #[test]
    fn boost_bivector_pickup() {
        // L(a i) = a i cosh(phi) - i sinh(phi)
        let a = UnitVector2::from_angle(-0.4);
        let phi = 0.9;
        let got = active_boost(a.mv() * G2::I, a, phi);
        let want = phi.cosh() * (a.mv() * G2::I) - phi.sinh() * G2::I;
        assert_g2_close(got, want, 1e-12);
    }

    #[test]
    fn boost_of_plane_bivector() {
        // L(i) = i e^{a phi}
        let a = UnitVector2::from_angle(1.9);
        let phi = -0.6;
        let got = active_boost(G2::I, a, phi);
        let want = G2::I * (phi * a.mv()).exp_zero_scalar().unwrap();
        assert_g2_close(got, want, 1e-12);
    }

    #[test]
    fn relative_basis_rules() {
        let rb = relative_basis(UnitVector2::E1, 0.0);
        assert_g2_close(rb.e1p, G2::E1, 1e-15);
        assert_g2_close(rb.e2p, G2::E2, 1e-15);
        assert_g2_close(rb.j, G2::I, 1e-15);

        let rb = relative_basis(UnitVector2::from_angle(0.3), 0.5f64.atanh());
        assert_g2_close(rb.e1p * rb.e1p, G2::ONE, 1e-12);
        assert_g2_close(rb.e2p * rb.e2p, G2::ONE, 1e-12);
        assert_g2_close(rb.e1p * rb.e2p, -(rb.e2p * rb.e1p), 1e-12);
        assert_g2_close(rb.e1p * rb.e2p, rb.j, 1e-12);
        assert_g2_close(rb.j * rb.j, -G2::ONE, 1e-12);
    }

    #[test]
    fn classify_rest_and_boosted() {
        let f = classify_unit_minus_one(G2::I).unwrap();
        assert_eq!((f.orientation, f.phi), (1.0, 0.0));

        let f = classify_unit_minus_one(-G2::I).unwrap();
        assert_eq!((f.orientation, f.phi), (-1.0, 0.0));

        // h = e1 + sqrt(2) i -> (+1, a = e2, phi = asinh(1))
        let h = G2::E1 + 2.0f64.sqrt() * G2::I;
        let f = classify_unit_minus_one(h).unwrap();
        assert_eq!(f.orientation, 1.0);
        assert!((f.phi - 1.0f64.asinh()).abs() < 1e-12);
        assert!((f.a.vector().e1).abs() < 1e-12 && (f.a.vector().e2 - 1.0).abs() < 1e-12);
        assert_g2_close(f.reconstruct(), h, 1e-12);

        assert!(classify_unit_minus_one(G2::E1).is_err());
    }

    #[test]
    fn frame_velocity() {
        assert_eq!(OrientedFrame::REST.velocity(), Vector2::new(0.0, 0.0));
        let f = OrientedFrame::positive(UnitVector2::E1, 0.6f64.atanh());
        let v = f.velocity();
        assert!((v.e1 - 0.6).abs() < 1e-12 && v.e2.abs() < 1e-15);
        let f = OrientedFrame::positive(UnitVector2::from_angle(2.0), 5.0);
        assert!(f.velocity().norm() < 1.0);
    }
}
