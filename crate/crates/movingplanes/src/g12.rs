//! The spacetime algebra of the Minkowski plane, signature (1,2).
//!
//! Basis order is `(1, g0, g1, g2, g01, g02, g21, g012)` with `g0^2 = 1`,
//! `g1^2 = g2^2 = -1`, and all distinct generators anticommuting. The
//! pseudoscalar `s = g012` is central and squares to `-1`. The even
//! subalgebra `{1, g01, g02, g21}` is a copy of the plane algebra under
//! `e1 = g01`, `e2 = g02`, `e12 = g21`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::g2::{G2, DEFAULT_EPS};
use crate::transforms::OrientedFrame;

/// Coefficient names in basis order.
pub const BASIS_NAMES: [&str; 8] = ["1", "g0", "g1", "g2", "g01", "g02", "g21", "g012"];

/// A multivector of the (1,2) spacetime algebra; `c[k]` is the coefficient
/// of the `k`-th basis element in the order above.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct G12 {
    pub c: [f64; 8],
}

/// A grade-1 spacetime vector `t g0 + x1 g1 + x2 g2`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct MinkowskiVector {
    pub t: f64,
    pub x1: f64,
    pub x2: f64,
}

/// Causal character of a nonzero spacetime vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalClass {
    Timelike,
    Spacelike,
    Lightlike,
}

// Internal blade representation: bit 0 = g0, bit 1 = g1, bit 2 = g2, in
// ascending index order. Public index 6 is g21 = -g12, hence the sign flip
// when converting.
const METRIC: [f64; 3] = [1.0, -1.0, -1.0];

// public index -> (blade mask, sign of public basis element in canonical order)
const BLADES: [(usize, f64); 8] = [
    (0b000, 1.0),  // 1
    (0b001, 1.0),  // g0
    (0b010, 1.0),  // g1
    (0b100, 1.0),  // g2
    (0b011, 1.0),  // g01
    (0b101, 1.0),  // g02
    (0b110, -1.0), // g21 = -g12
    (0b111, 1.0),  // g012
];

fn blade_index(mask: usize) -> usize {
    BLADES.iter().position(|&(m, _)| m == mask).expect("valid mask")
}

/// Sign from reordering the concatenation of two canonical blades.
fn reorder_sign(a: usize, b: usize) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 { 1.0 } else { -1.0 }
}

impl G12 {
    pub const ZERO: G12 = G12 { c: [0.0; 8] };
    pub const ONE: G12 = G12::basis(0);
    pub const G0: G12 = G12::basis(1);
    pub const G1: G12 = G12::basis(2);
    pub const G2_: G12 = G12::basis(3);
    pub const G01: G12 = G12::basis(4);
    pub const G02: G12 = G12::basis(5);
    pub const G21: G12 = G12::basis(6);
    /// The central pseudoscalar `s = g012`.
    pub const S: G12 = G12::basis(7);

    pub const fn basis(k: usize) -> G12 {
        let mut c = [0.0; 8];
        c[k] = 1.0;
        G12 { c }
    }

    pub fn scalar(x: f64) -> G12 {
        let mut c = [0.0; 8];
        c[0] = x;
        G12 { c }
    }

    /// Geometric product.
    pub fn gp(self, rhs: G12) -> G12 {
        let mut out = [0.0; 8];
        for i in 0..8 {
            let ai = self.c[i];
            if ai == 0.0 {
                continue;
            }
            let (ma, sa) = BLADES[i];
            for j in 0..8 {
                let bj = rhs.c[j];
                if bj == 0.0 {
                    continue;
                }
                let (mb, sb) = BLADES[j];
                let mut sign = sa * sb * reorder_sign(ma, mb);
                let common = ma & mb;
                for bit in 0..3 {
                    if common & (1 << bit) != 0 {
                        sign *= METRIC[bit];
                    }
                }
                let k = blade_index(ma ^ mb);
                out[k] += sign * BLADES[k].1 * ai * bj;
            }
        }
        G12 { c: out }
    }

    pub fn scale(self, k: f64) -> G12 {
        let mut c = self.c;
        for x in &mut c {
            *x *= k;
        }
        G12 { c }
    }

    pub fn max_abs(self) -> f64 {
        self.c.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// Grade of the `k`-th basis element.
    fn basis_grade(k: usize) -> u32 {
        BLADES[k].0.count_ones()
    }

    /// Projection onto grade `k` (0..=3).
    pub fn grade(self, k: u32) -> G12 {
        let mut c = [0.0; 8];
        for i in 0..8 {
            if Self::basis_grade(i) == k {
                c[i] = self.c[i];
            }
        }
        G12 { c }
    }

    pub fn scalar_part(self) -> f64 {
        self.c[0]
    }

    pub fn vector_part(self) -> MinkowskiVector {
        MinkowskiVector { t: self.c[1], x1: self.c[2], x2: self.c[3] }
    }

    /// Symmetric product `(ab + ba)/2`.
    pub fn sym(self, rhs: G12) -> G12 {
        (self.gp(rhs) + rhs.gp(self)).scale(0.5)
    }

    /// Anti-symmetric product `(ab - ba)/2`.
    pub fn antisym(self, rhs: G12) -> G12 {
        (self.gp(rhs) - rhs.gp(self)).scale(0.5)
    }

    /// Main involution: negates grades 1 and 3. For `f = g + sh` this is
    /// `g - sh`, conjugation of the pseudoscalar.
    pub fn main_involution(self) -> G12 {
        self.grade_signs([1.0, -1.0, 1.0, -1.0])
    }

    /// Reversion: negates grades 2 and 3 (reversal of vector factors).
    pub fn reversion(self) -> G12 {
        self.grade_signs([1.0, 1.0, -1.0, -1.0])
    }

    /// Clifford conjugation: reversion composed with the main involution,
    /// negating grades 1 and 2.
    pub fn clifford_conj(self) -> G12 {
        self.grade_signs([1.0, -1.0, -1.0, 1.0])
    }

    fn grade_signs(self, signs: [f64; 4]) -> G12 {
        let mut c = self.c;
        for i in 0..8 {
            c[i] *= signs[Self::basis_grade(i) as usize];
        }
        G12 { c }
    }

    /// Exponential of an element whose square is a scalar (vectors, blades,
    /// and embedded plane vectors all qualify).
    pub fn exp_simple(self) -> G12 {
        let sq = self.gp(self);
        debug_assert!(sq.grade(0).max_abs() >= sq.max_abs() - 1e-9 * self.max_abs().max(1.0));
        let q = sq.c[0];
        if q > 1e-24 {
            let phi = q.sqrt();
            G12::scalar(phi.cosh()) + self.scale(crate::g2::sinhc(phi))
        } else if q < -1e-24 {
            let theta = (-q).sqrt();
            G12::scalar(theta.cos()) + self.scale(crate::g2::sinc(theta))
        } else {
            G12::ONE + self
        }
    }
}

/// Embeds the plane algebra into the even subalgebra: `e1 -> g01`,
/// `e2 -> g02`, `e12 -> g21`. An injective algebra homomorphism.
pub fn embed_even(g: G2) -> G12 {
    let mut c = [0.0; 8];
    c[0] = g.s;
    c[4] = g.e1;
    c[5] = g.e2;
    c[6] = g.e12;
    G12 { c }
}

/// Inverse of [`embed_even`]; fails when the odd part is not negligible.
pub fn project_even(f: G12) -> Result<G2> {
    let odd = f.c[1].abs().max(f.c[2].abs()).max(f.c[3].abs()).max(f.c[7].abs());
    if odd > DEFAULT_EPS * f.max_abs().max(1.0) {
        return Err(Error::NotEven);
    }
    Ok(G2 { s: f.c[0], e1: f.c[4], e2: f.c[5], e12: f.c[6] })
}

/// Duality map: sends a positively oriented unit bivector of the plane
/// (embedded into the even subalgebra) to the unit timelike vector `s h`.
pub fn psi(h: G2) -> Result<MinkowskiVector> {
    let sq = h * h;
    if (sq.s + 1.0).abs() > 1e-9
        || sq.max_abs() - sq.s.abs() > 1e-9
        || h.s.abs() > 1e-9
    {
        return Err(Error::NotUnitBivector(sq.s));
    }
    let r = G12::S.gp(embed_even(h));
    Ok(r.vector_part())
}

/// Duality map on an oriented frame.
pub fn psi_frame(f: OrientedFrame) -> Result<MinkowskiVector> {
    psi(f.reconstruct())
}

impl MinkowskiVector {
    pub const T: MinkowskiVector = MinkowskiVector { t: 1.0, x1: 0.0, x2: 0.0 };

    pub fn new(t: f64, x1: f64, x2: f64) -> Self {
        MinkowskiVector { t, x1, x2 }
    }

    pub fn mv(self) -> G12 {
        let mut c = [0.0; 8];
        c[1] = self.t;
        c[2] = self.x1;
        c[3] = self.x2;
        G12 { c }
    }

    /// Minkowski inner product `x . y = (xy + yx)/2`.
    pub fn inner(self, rhs: MinkowskiVector) -> f64 {
        self.t * rhs.t - self.x1 * rhs.x1 - self.x2 * rhs.x2
    }

    /// Minkowski outer product `x ^ y = (xy - yx)/2`, a spacetime bivector.
    pub fn outer(self, rhs: MinkowskiVector) -> G12 {
        self.mv().antisym(rhs.mv())
    }

    pub fn scale(self, k: f64) -> MinkowskiVector {
        MinkowskiVector { t: k * self.t, x1: k * self.x1, x2: k * self.x2 }
    }

    /// Unit timelike vector of a subluminal velocity:
    /// `gamma (g0 + v1 g1 + v2 g2)`.
    pub fn timelike_from_velocity(v: crate::g2::Vector2) -> MinkowskiVector {
        let gamma = 1.0 / (1.0 - v.inner(v)).sqrt();
        MinkowskiVector { t: gamma, x1: gamma * v.e1, x2: gamma * v.e2 }
    }

    /// Causal character by the sign of the Minkowski square; fails on the
    /// zero vector.
    pub fn causal_class(self) -> Result<CausalClass> {
        let scale = self.t * self.t + self.x1 * self.x1 + self.x2 * self.x2;
        if scale == 0.0 {
            return Err(Error::ZeroVector);
        }
        let sq = self.inner(self);
        if sq.abs() <= DEFAULT_EPS * scale {
            Ok(CausalClass::Lightlike)
        } else if sq > 0.0 {
            Ok(CausalClass::Timelike)
        } else {
            Ok(CausalClass::Spacelike)
        }
    }
}

impl Add for MinkowskiVector {
    type Output = MinkowskiVector;
    fn add(self, rhs: MinkowskiVector) -> MinkowskiVector {
        MinkowskiVector { t: self.t + rhs.t, x1: self.x1 + rhs.x1, x2: self.x2 + rhs.x2 }
    }
}

impl Sub for MinkowskiVector {
    type Output = MinkowskiVector;
    fn sub(self, rhs: MinkowskiVector) -> MinkowskiVector {
        self + rhs.scale(-1.0)
    }
}

/// Relative velocity bivector `u_v = (u ^ v)/(u . v)` of the unit timelike
/// vector `v` in the frame of `u`; fails for opposite time orientations.
pub fn relative_velocity_bivector(u: MinkowskiVector, v: MinkowskiVector) -> Result<G12> {
    let dot = u.inner(v);
    if dot <= 0.0 {
        return Err(Error::OppositeOrientation);
    }
    Ok(u.outer(v).scale(1.0 / dot))
}

/// The spacetime recomputation of the frame composition:
/// `v.w = (v.u)(w.u)(1 - u_v . u_w)` and
/// `(v.w) v_w = (v.u)(w.u)[u_w - u_v - u_v ^ u_w]`.
///
/// Returns `(v.w, v_w)` with `v_w` an even element (the relative velocity in
/// the plane algebra of `u`).
pub fn recompute_composition(
    u: MinkowskiVector,
    v: MinkowskiVector,
    w: MinkowskiVector,
) -> Result<(f64, G2)> {
    let uv = project_even(relative_velocity_bivector(u, v)?)?;
    let uw = project_even(relative_velocity_bivector(u, w)?)?;
    let vu = v.inner(u);
    let wu = w.inner(u);
    let v_dot_w = vu * wu * (1.0 - uv.sym(uw).s);
    let bracket = uw - uv - uv.antisym(uw);
    Ok((v_dot_w, bracket.scale(vu * wu / v_dot_w)))
}

/// Result of splitting two timelike vectors against the plane of
/// `D = (w - v) ^ u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DSplit {
    pub d_bivector: G12,
    pub w_par: MinkowskiVector,
    pub w_perp: MinkowskiVector,
    pub v_par: MinkowskiVector,
    pub v_perp: MinkowskiVector,
}

fn vec_dot_bivector(x: MinkowskiVector, b: G12) -> G12 {
    (x.mv().gp(b) - b.gp(x.mv())).scale(0.5)
}

fn vec_wedge_bivector(x: MinkowskiVector, b: G12) -> G12 {
    (x.mv().gp(b) + b.gp(x.mv())).scale(0.5)
}

/// Splits `v` and `w` into components parallel and perpendicular to the
/// bivector `D = (w - v) ^ u`; fails when `D` vanishes or is null.
pub fn d_split(
    u: MinkowskiVector,
    v: MinkowskiVector,
    w: MinkowskiVector,
) -> Result<DSplit> {
    let d = (w - v).outer(u);
    let d_sq = d.gp(d).c[0];
    if d_sq.abs() <= 1e-12 * d.max_abs().max(1e-12).powi(2) {
        return Err(Error::DegenerateD);
    }
    let d_inv = d.scale(1.0 / d_sq);
    let split = |x: MinkowskiVector| {
        let par = vec_dot_bivector(x, d).gp(d_inv).vector_part();
        let perp = vec_wedge_bivector(x, d).gp(d_inv).vector_part();
        (par, perp)
    };
    let (w_par, w_perp) = split(w);
    let (v_par, v_perp) = split(v);
    Ok(DSplit { d_bivector: d, w_par, w_perp, v_par, v_perp })
}

/// The even rotor `w_par^ v_par^ = (w.D)(v.D)^{-1}` of the passive boost in
/// the plane of `D`; its half-angle sandwich is the active boost taking `v`
/// to `w` as seen from `u`.
pub fn parallel_rotor(
    u: MinkowskiVector,
    v: MinkowskiVector,
    w: MinkowskiVector,
) -> Result<G12> {
    let d = (w - v).outer(u);
    let d_sq = d.gp(d).c[0];
    if d_sq.abs() <= 1e-12 * d.max_abs().max(1e-12).powi(2) {
        return Err(Error::DegenerateD);
    }
    let w_dot_d = vec_dot_bivector(w, d).vector_part();
    let v_dot_d = vec_dot_bivector(v, d).vector_part();
    let v_dot_d_sq = v_dot_d.inner(v_dot_d);
    if v_dot_d_sq.abs() <= 1e-300 {
        return Err(Error::DegenerateD);
    }
    Ok(w_dot_d.mv().gp(v_dot_d.mv()).scale(1.0 / v_dot_d_sq))
}

/// Half-angle square root of an even rotor `cosh(O) + B sinh(O)` with
/// `B^2 = 1`, as built by [`parallel_rotor`].
pub fn rotor_sqrt(r: G12) -> G12 {
    let alpha = r.c[0].max(1.0);
    let b = r.grade(2);
    let omega = alpha.acosh();
    let sh = omega.sinh();
    if sh < 1e-14 {
        return G12::ONE + b.scale(0.5);
    }
    G12::scalar((omega / 2.0).cosh()) + b.scale((omega / 2.0).sinh() / sh)
}

/// Active boost built from [`parallel_rotor`]:
/// `L_u(x) = R^{1/2} x rev(R^{1/2})`; satisfies `L_u(v) = w`.
pub fn active_boost_through(
    u: MinkowskiVector,
    v: MinkowskiVector,
    w: MinkowskiVector,
    x: MinkowskiVector,
) -> Result<MinkowskiVector> {
    let half = rotor_sqrt(parallel_rotor(u, v, w)?);
    Ok(half.gp(x.mv()).gp(half.reversion()).vector_part())
}

/// The rotor of the unique active boost taking the unit timelike vector `v`
/// to `w`, in the plane of `v ^ w`.
pub fn direct_boost_rotor(v: MinkowskiVector, w: MinkowskiVector) -> Result<G12> {
    let dot = v.inner(w);
    if dot <= 0.0 {
        return Err(Error::OppositeOrientation);
    }
    Ok(rotor_sqrt(w.mv().gp(v.mv())))
}

impl Add for G12 {
    type Output = G12;
    fn add(self, rhs: G12) -> G12 {
        let mut c = self.c;
        for i in 0..8 {
            c[i] += rhs.c[i];
        }
        G12 { c }
    }
}

impl Sub for G12 {
    type Output = G12;
    fn sub(self, rhs: G12) -> G12 {
        self + rhs.neg()
    }
}

impl Neg for G12 {
    type Output = G12;
    fn neg(self) -> G12 {
        self.scale(-1.0)
    }
}

impl Mul for G12 {
    type Output = G12;
    fn mul(self, rhs: G12) -> G12 {
        self.gp(rhs)
    }
}

impl Mul<G12> for f64 {
    type Output = G12;
    fn mul(self, rhs: G12) -> G12 {
        rhs.scale(self)
    }
}

impl fmt::Display for G12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(f64, &str)> = self
            .c
            .iter()
            .zip(BASIS_NAMES)
            .map(|(&c, n)| (c, if n == "1" { "" } else { n }))
            .collect();
        crate::format::write_terms(f, &terms)
    }
}

impl FromStr for G12 {
    type Err = Error;

    fn from_str(text: &str) -> Result<G12> {
        let names = ["g012", "g01", "g02", "g21", "g0", "g1", "g2"];
        let mut f = G12::ZERO;
        for (coeff, basis) in crate::format::parse_terms(text, &names)? {
            let idx = if basis.is_empty() {
                0
            } else {
                BASIS_NAMES.iter().position(|n| *n == basis).unwrap()
            };
            f.c[idx] += coeff;
        }
        Ok(f)
    }
}

impl Serialize for G12 {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = ser.serialize_map(Some(8))?;
        for (name, c) in BASIS_NAMES.iter().zip(self.c) {
            map.serialize_entry(name, &c)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for G12 {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<G12, D::Error> {
        use serde::de::Error as _;
        let map: std::collections::BTreeMap<String, f64> =
            std::collections::BTreeMap::deserialize(de)?;
        let mut f = G12::ZERO;
        for (k, v) in map {
            match BASIS_NAMES.iter().position(|n| *n == k) {
                Some(idx) => f.c[idx] = v,
                None => return Err(D::Error::custom(format!("unknown coefficient key `{k}`"))),
            }
        }
        Ok(f)
    }
}
