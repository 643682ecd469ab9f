//! Relativistic velocity composition among moving planes, with `c = 1`:
//! the hyperbolic-angle composition of two frames, the passive Lorentz
//! boost, and the velocity-addition law.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::g2::{G2, Vector2};
use crate::transforms::{OrientedFrame, UnitVector2};

/// A subluminal velocity vector, `|v| < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Velocity {
    v: Vector2,
}

impl Velocity {
    pub fn new(v: Vector2) -> Result<Velocity> {
        let n = v.norm();
        if n >= 1.0 || !n.is_finite() {
            return Err(Error::Superluminal(n));
        }
        Ok(Velocity { v })
    }

    pub const ZERO: Velocity = Velocity { v: Vector2 { e1: 0.0, e2: 0.0 } };

    pub fn vector(self) -> Vector2 {
        self.v
    }

    pub fn speed(self) -> f64 {
        self.v.norm()
    }

    /// Hyperbolic angle `phi = atanh(|v|)`.
    pub fn rapidity(self) -> f64 {
        self.speed().atanh()
    }

    /// The frame moving with this velocity: `a = v/|v|`, `phi = atanh(|v|)`.
    pub fn frame(self) -> OrientedFrame {
        match UnitVector2::new(self.v) {
            Some(a) => OrientedFrame::positive(a, self.rapidity()),
            None => OrientedFrame::REST,
        }
    }
}

/// Gamma factor `1/sqrt(1 - |v|^2)`.
pub fn gamma_factor(v: Velocity) -> f64 {
    1.0 / (1.0 - v.v.inner(v.v)).sqrt()
}

/// Result of composing two positively oriented frames `j`, `k`:
/// `k = j e^{omega c}` with `omega >= 0` and `c` a relative unit vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompositionResult {
    pub omega: f64,
    /// Relative unit vector `c` with zero scalar part and `c^2 = 1`.
    pub c_direction: G2,
    /// Relative velocity `v_w = c tanh(omega)`; carries vector and bivector
    /// parts of the standard plane.
    pub vw: G2,
}

/// Composition of two positively oriented frames via
/// `cosh omega = cosh phi cosh rho (1 - u_v . u_w)` and
/// `v_w = (u_w - u_v - u_v ^ u_w)/(1 - u_v . u_w)`.
pub fn compose_frames(j: OrientedFrame, k: OrientedFrame) -> CompositionResult {
    assert!(
        j.orientation > 0.0 && k.orientation > 0.0,
        "compose_frames requires positively oriented frames"
    );
    let uv = j.velocity();
    let uw = k.velocity();
    let denom = 1.0 - uv.inner(uw);
    let cosh_omega = j.phi.cosh() * k.phi.cosh() * denom;
    let diff = uw - uv;
    let vw = G2 {
        s: 0.0,
        e1: diff.e1 / denom,
        e2: diff.e2 / denom,
        e12: -uv.outer(uw) / denom,
    };
    let omega = cosh_omega.max(1.0).acosh();
    let tanh_omega = omega.tanh();
    let c_direction = if tanh_omega < 1e-14 {
        G2::E1
    } else {
        vw.scale(1.0 / tanh_omega)
    };
    CompositionResult { omega, c_direction, vw }
}

/// Passive boost parameters relating two frames with respect to the standard
/// plane: `e^{rho b} = e^{Omega d/2} e^{phi a} e^{Omega d/2}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PassiveBoost {
    pub omega: f64,
    pub d: UnitVector2,
    /// Relative velocity `u_vw = d tanh(Omega)`; an ordinary plane vector.
    pub u_vw: Vector2,
}

/// The boost direction `d = (u_w cosh rho - u_v cosh phi)/|.|` of the passive
/// boost, a genuine vector of the standard plane.
pub fn passive_direction(uv: Velocity, uw: Velocity) -> Result<UnitVector2> {
    let (phi, rho) = (uv.rapidity(), uw.rapidity());
    let num = uw.v.scale(rho.cosh()) - uv.v.scale(phi.cosh());
    if num.norm() <= 1e-12 * (phi.cosh() + rho.cosh()) {
        return Err(Error::DegenerateDirection);
    }
    Ok(UnitVector2::new(num).expect("nonzero numerator"))
}

/// Solves the passive relation for `Omega` and the relative velocity
/// `u_vw = ((u_w - u_v).d) d / (1 - (u_v.d)(u_w.d))`.
pub fn passive_boost_factor(uv: Velocity, uw: Velocity) -> Result<PassiveBoost> {
    let d = passive_direction(uv, uw)?;
    let udv = uv.v.inner(d.vector());
    let udw = uw.v.inner(d.vector());
    let t = (udw - udv) / (1.0 - udv * udw);
    let omega = t.atanh();
    Ok(PassiveBoost { omega, d, u_vw: d.vector().scale(t) })
}

/// Scalar check value `cosh Omega = (cosh rho/cosh phi) *
/// (1 - (u_v.d)(u_w.d))/(1 - (u_v.d)^2)`.
pub fn passive_cosh_omega(uv: Velocity, uw: Velocity, d: UnitVector2) -> f64 {
    let (phi, rho) = (uv.rapidity(), uw.rapidity());
    let udv = uv.v.inner(d.vector());
    let udw = uw.v.inner(d.vector());
    (rho.cosh() / phi.cosh()) * (1.0 - udv * udw) / (1.0 - udv * udv)
}

/// Relativistic addition of velocities: recovers `u_w` from `u_v` and the
/// passive relative velocity `u_vw = d tanh(Omega)`.
pub fn velocity_add(uv: Velocity, u_vw: Vector2, d: UnitVector2, omega: f64) -> Result<Velocity> {
    let denom = 1.0 + uv.v.inner(u_vw);
    let perp = uv.v - d.vector().scale(uv.v.inner(d.vector()));
    let num = uv.v + u_vw + perp.scale(1.0 / omega.cosh() - 1.0);
    Velocity::new(num.scale(1.0 / denom))
}

/// Scalar half of the passive composition:
/// `cosh rho = cosh phi cosh Omega (1 + u_v . u_vw)`.
pub fn velocity_add_cosh_rho(uv: Velocity, u_vw: Vector2, omega: f64) -> f64 {
    uv.rapidity().cosh() * omega.cosh() * (1.0 + uv.v.inner(u_vw))
}

/// Passive Lorentz boost `e^{Omega d/2} x e^{Omega d/2}` (same-side
/// exponentials); mixes scalars and vectors.
pub fn apply_passive_boost(x: G2, d: UnitVector2, omega: f64) -> G2 {
    let half = ((omega / 2.0) * d.mv()).exp_zero_scalar().expect("vector exponent");
    half * x * half
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::assert_g2_close;

    fn vel(e1: f64, e2: f64) -> Velocity {
        Velocity::new(Vector2::new(e1, e2)).unwrap()
    }

    #[test]
    fn compose_identical_frames() {
        let j = OrientedFrame::positive(UnitVector2::from_angle(0.4), 1.1);
        let r = compose_frames(j, j);
        assert!(r.omega.abs() < 1e-12);
        assert!(r.vw.max_abs() < 1e-12);
    }

    #[test]
    fn compose_collinear() {
        let a = UnitVector2::E1;
        let j = OrientedFrame::positive(a, 0.5f64.atanh());
        let k = OrientedFrame::positive(a, 0.8f64.atanh());
        let r = compose_frames(j, k);
        // (0.8 - 0.5)/(1 - 0.4) = 0.5
        assert!((r.vw.e1 - 0.5).abs() < 1e-12);
        assert!(r.vw.e2.abs() < 1e-15 && r.vw.e12.abs() < 1e-15);
        // cross-check against the exponential product
        let prod = ((-j.phi) * a.mv()).exp_zero_scalar().unwrap()
            * (k.phi * a.mv()).exp_zero_scalar().unwrap();
        assert!((r.omega.cosh() - prod.s).abs() < 1e-12);
    }

    #[test]
    fn compose_orthogonal() {
        let j = vel(0.5, 0.0).frame();
        let k = vel(0.0, 0.5).frame();
        let r = compose_frames(j, k);
        assert_g2_close(r.vw, G2::new(0.0, -0.5, 0.5, -0.25), 1e-12);
        // exp(-phi e1) exp(rho e2) = cosh omega (1 + v_w)
        let prod = ((-j.phi) * G2::E1).exp_zero_scalar().unwrap()
            * (k.phi * G2::E2).exp_zero_scalar().unwrap();
        assert_g2_close(prod, (G2::ONE + r.vw).scale(r.omega.cosh()), 1e-12);
        // c is a relative unit vector
        assert_g2_close(r.c_direction * r.c_direction, G2::ONE, 1e-10);
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma_factor(Velocity::ZERO), 1.0);
        assert!((gamma_factor(vel(0.6, 0.0)) - 1.25).abs() < 1e-12);
        assert!(Velocity::new(Vector2::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn passive_direction_cases() {
        let d = passive_direction(Velocity::ZERO, vel(0.5, 0.0)).unwrap();
        assert_eq!(d.vector(), Vector2::new(1.0, 0.0));
        assert_eq!(
            passive_direction(vel(0.5, 0.0), vel(0.5, 0.0)),
            Err(Error::DegenerateDirection)
        );
        // d is orthogonal to nothing spurious: d ^ (b sinh rho - a sinh phi) = 0
        let (uv, uw) = (vel(0.3, 0.0), vel(0.0, 0.4));
        let d = passive_direction(uv, uw).unwrap();
        let (phi, rho) = (uv.rapidity(), uw.rapidity());
        let b_sinh = Vector2::new(0.0, 1.0).scale(rho.sinh());
        let a_sinh = Vector2::new(1.0, 0.0).scale(phi.sinh());
        assert!(d.vector().outer(b_sinh - a_sinh).abs() < 1e-12);
    }

    #[test]
    fn passive_collinear_matches_addition_law() {
        let pb = passive_boost_factor(vel(0.5, 0.0), vel(0.8, 0.0)).unwrap();
        assert!((pb.u_vw.e1 - 0.5).abs() < 1e-12);
        assert!((pb.omega - 0.5f64.atanh()).abs() < 1e-12);
    }

    #[test]
    fn passive_from_rest() {
        let uw = vel(0.3, 0.4);
        let pb = passive_boost_factor(Velocity::ZERO, uw).unwrap();
        assert!((pb.u_vw.e1 - 0.3).abs() < 1e-12 && (pb.u_vw.e2 - 0.4).abs() < 1e-12);
        assert!((pb.omega - uw.rapidity()).abs() < 1e-12);
    }

    #[test]
    fn sandwich_identity() {
        // e^{rho b} = e^{Omega d/2} e^{phi a} e^{Omega d/2}
        let uv = vel(0.3, -0.1);
        let uw = vel(-0.2, 0.55);
        let pb = passive_boost_factor(uv, uw).unwrap();
        let jf = uv.frame();
        let kf = uw.frame();
        let exp_phi_a = (jf.phi * jf.a.mv()).exp_zero_scalar().unwrap();
        let exp_rho_b = (kf.phi * kf.a.mv()).exp_zero_scalar().unwrap();
        let got = apply_passive_boost(exp_phi_a, pb.d, pb.omega);
        assert_g2_close(got, exp_rho_b, 1e-11);
        // cosh Omega per the scalar formula agrees with the solved Omega
        assert!((passive_cosh_omega(uv, uw, pb.d) - pb.omega.cosh()).abs() < 1e-12);
    }

    #[test]
    fn velocity_add_inverse_pair() {
        let uv = vel(0.5, 0.0);
        let pb = passive_boost_factor(uv, vel(0.8, 0.0)).unwrap();
        let uw = velocity_add(uv, pb.u_vw, pb.d, pb.omega).unwrap();
        assert!((uw.vector().e1 - 0.8).abs() < 1e-12);

        // identity when u_vw = 0
        let d = UnitVector2::E1;
        let back = velocity_add(uv, Vector2::new(0.0, 0.0), d, 0.0).unwrap();
        assert_eq!(back.vector(), uv.vector());

        // generic round trip
        let uv = vel(0.31, 0.42);
        let uw = vel(-0.6, 0.15);
        let pb = passive_boost_factor(uv, uw).unwrap();
        let got = velocity_add(uv, pb.u_vw, pb.d, pb.omega).unwrap();
        assert!((got.vector() - uw.vector()).norm() < 1e-10);
        let cosh_rho = velocity_add_cosh_rho(uv, pb.u_vw, pb.omega);
        assert!((cosh_rho - uw.rapidity().cosh()).abs() < 1e-10);
    }

    #[test]
    fn passive_boost_of_unit_and_orthogonal() {
        let d = UnitVector2::from_angle(0.8);
        let omega = 0.7;
        let got = apply_passive_boost(G2::ONE, d, omega);
        assert_g2_close(
            got,
            G2::scalar(omega.cosh()) + omega.sinh() * d.mv(),
            1e-12,
        );
        assert_g2_close(apply_passive_boost(G2::I, d, 0.0) , G2::I, 1e-15);
        // d i anticommutes with d: exponentials cancel
        let di = d.mv() * G2::I;
        assert_g2_close(apply_passive_boost(di, d, omega), di, 1e-12);
    }
}
