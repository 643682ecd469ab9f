//! Spectral-basis 2x2 matrix representation of the plane algebra, and its
//! complexified extension to the spacetime algebra. Serves as an independent
//! oracle for the multivector arithmetic.
//!
//! With the idempotents `u+- = (1 +- e2)/2`, every `g = x + iy + v1 e1 +
//! v2 e2` is represented by the real matrix
//! `[[x+v2, v1-y], [v1+y, x-v2]]`, a full algebra isomorphism onto 2x2 real
//! matrices.

use serde::{Deserialize, Serialize};

use crate::g12::{embed_even, project_even, G12};
use crate::g2::G2;

/// A 2x2 real matrix, row major.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat2 {
    pub m11: f64,
    pub m12: f64,
    pub m21: f64,
    pub m22: f64,
}

/// A complexified matrix `re + s im` with the central `s^2 = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Mat2Complexified {
    pub re: Mat2,
    pub im: Mat2,
}

/// The mutually annihilating idempotents `u+ = (1 + e2)/2`, `u- = (1 - e2)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Idempotent {
    UPlus,
    UMinus,
}

impl Idempotent {
    pub fn mv(self) -> G2 {
        match self {
            Idempotent::UPlus => G2::new(0.5, 0.0, 0.5, 0.0),
            Idempotent::UMinus => G2::new(0.5, 0.0, -0.5, 0.0),
        }
    }
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { m11: 1.0, m12: 0.0, m21: 0.0, m22: 1.0 };
    pub const ZERO: Mat2 = Mat2 { m11: 0.0, m12: 0.0, m21: 0.0, m22: 0.0 };

    pub fn new(m11: f64, m12: f64, m21: f64, m22: f64) -> Self {
        Mat2 { m11, m12, m21, m22 }
    }

    pub fn mul(self, r: Mat2) -> Mat2 {
        Mat2 {
            m11: self.m11 * r.m11 + self.m12 * r.m21,
            m12: self.m11 * r.m12 + self.m12 * r.m22,
            m21: self.m21 * r.m11 + self.m22 * r.m21,
            m22: self.m21 * r.m12 + self.m22 * r.m22,
        }
    }

    pub fn add(self, r: Mat2) -> Mat2 {
        Mat2 {
            m11: self.m11 + r.m11,
            m12: self.m12 + r.m12,
            m21: self.m21 + r.m21,
            m22: self.m22 + r.m22,
        }
    }

    pub fn sub(self, r: Mat2) -> Mat2 {
        self.add(r.scale(-1.0))
    }

    pub fn scale(self, k: f64) -> Mat2 {
        Mat2 { m11: k * self.m11, m12: k * self.m12, m21: k * self.m21, m22: k * self.m22 }
    }

    pub fn max_abs(self) -> f64 {
        self.m11.abs().max(self.m12.abs()).max(self.m21.abs()).max(self.m22.abs())
    }
}

impl Mat2Complexified {
    /// `(A + sB)(C + sD) = (AC - BD) + s(AD + BC)`.
    pub fn mul(self, r: Mat2Complexified) -> Mat2Complexified {
        Mat2Complexified {
            re: self.re.mul(r.re).sub(self.im.mul(r.im)),
            im: self.re.mul(r.im).add(self.im.mul(r.re)),
        }
    }

    pub fn sub(self, r: Mat2Complexified) -> Mat2Complexified {
        Mat2Complexified { re: self.re.sub(r.re), im: self.im.sub(r.im) }
    }

    pub fn max_abs(self) -> f64 {
        self.re.max_abs().max(self.im.max_abs())
    }
}

/// The matrix of `g` with respect to the spectral basis.
pub fn matrix_of(g: G2) -> Mat2 {
    Mat2 {
        m11: g.s + g.e2,
        m12: g.e1 - g.e12,
        m21: g.e1 + g.e12,
        m22: g.s - g.e2,
    }
}

/// Inverse of [`matrix_of`]; a linear bijection.
pub fn from_matrix(m: Mat2) -> G2 {
    G2 {
        s: (m.m11 + m.m22) / 2.0,
        e1: (m.m12 + m.m21) / 2.0,
        e2: (m.m11 - m.m22) / 2.0,
        e12: (m.m21 - m.m12) / 2.0,
    }
}

/// The `e1`-conjugate `e1 g e1`, an inner automorphism.
pub fn e1_conjugate(g: G2) -> G2 {
    G2::E1 * g * G2::E1
}

/// Splits a spacetime element as `f = g + s h` with `g, h` in the even
/// subalgebra, using the central pseudoscalar with `s^2 = -1`.
pub fn split_even(f: G12) -> (G2, G2) {
    let g = project_even(f.grade(0) + f.grade(2)).expect("even part is even");
    let odd = f.grade(1) + f.grade(3);
    // s h = odd  =>  h = -s odd
    let h = project_even((-G12::S).gp(odd)).expect("dual of odd part is even");
    (g, h)
}

/// Complexified matrix `[f] = [g] + s [h]` of a spacetime element.
pub fn matrix_of_f(f: G12) -> Mat2Complexified {
    let (g, h) = split_even(f);
    Mat2Complexified { re: matrix_of(g), im: matrix_of(h) }
}

/// Rebuilds a spacetime element from its complexified matrix.
pub fn from_matrix_f(m: Mat2Complexified) -> G12 {
    embed_even(from_matrix(m.re)) + G12::S.gp(embed_even(from_matrix(m.im)))
}

impl Serialize for Mat2 {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            m: [[f64; 2]; 2],
        }
        Wire { m: [[self.m11, self.m12], [self.m21, self.m22]] }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Mat2 {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Mat2, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            m: [[f64; 2]; 2],
        }
        let w = Wire::deserialize(de)?;
        Ok(Mat2::new(w.m[0][0], w.m[0][1], w.m[1][0], w.m[1][1]))
    }
}

/// Convenience: checks `matrix_of` multiplicativity on a pair, returning the
/// max-norm discrepancy.
pub fn homomorphism_gap(g1: G2, g2: G2) -> f64 {
    matrix_of(g1.gp(g2)).sub(matrix_of(g1).mul(matrix_of(g2))).max_abs()
}

/// Same for the complexified representation.
pub fn homomorphism_gap_f(f1: G12, f2: G12) -> f64 {
    matrix_of_f(f1.gp(f2)).sub(matrix_of_f(f1).mul(matrix_of_f(f2))).max_abs()
}

/// Spectral-basis identities: `u+ + u- = 1`, `u+- idempotent`,
/// `u+ u- = 0`, and `u+ e1 u+ = 0`. Returns the largest violation.
pub fn spectral_identity_gap() -> f64 {
    let up = Idempotent::UPlus.mv();
    let um = Idempotent::UMinus.mv();
    let mut gap: f64 = (up + um - G2::ONE).max_abs();
    gap = gap.max((up * up - up).max_abs());
    gap = gap.max((um * um - um).max_abs());
    gap = gap.max((up * um).max_abs());
    gap = gap.max((up * G2::E1 * up).max_abs());
    gap
}
