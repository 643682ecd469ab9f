//! Basics of the plane algebra: the generating relations, the unit bivector
//! `i` as the imaginary unit, and rotations as two-sided rotor products.

use std::f64::consts::FRAC_PI_2;

use movingplanes::g2::{G2, Vector2};
use movingplanes::transforms::{relative_basis, rotate, rotor_between, UnitVector2};

fn main() {
    println!("generating relations:");
    println!("  e1 e1   = {}", G2::E1 * G2::E1);
    println!("  e2 e2   = {}", G2::E2 * G2::E2);
    println!("  e1 e2   = {}", G2::E1 * G2::E2);
    println!("  e2 e1   = {}", G2::E2 * G2::E1);
    println!("  i i     = {}", G2::I * G2::I);
    println!("  i e1    = {}   (i acts as a quarter turn)", G2::I * G2::E1);
    println!();

    // A quarter turn in the plane of i.
    let x = Vector2::new(3.0, 1.0);
    let rx = rotate(x, FRAC_PI_2);
    println!("rotate {} by pi/2 -> {}", G2::from(x), G2::from(rx));
    println!("squares: {} -> {}", x.inner(x), rx.inner(rx));
    println!();

    // The rotor between two unit directions, recovered from their product.
    let a = UnitVector2::from_angle(0.2);
    let b = UnitVector2::from_angle(1.7);
    let r = rotor_between(a, b).unwrap();
    println!("rotor (b a)^(1/2) = {}", r);
    println!("r a r^dag         = {}", r * a.mv() * r.reverse());
    println!("b                 = {}", b.mv());
    println!();

    // A rotated-and-boosted orthonormal basis obeys the same relations.
    let rb = relative_basis(UnitVector2::from_angle(0.5), 0.75);
    println!("relative basis at phi = 0.75:");
    println!("  e1' = {}", rb.e1p);
    println!("  e2' = {}", rb.e2p);
    println!("  j   = e1' e2' = {}", rb.j);
    println!("  e1'^2 = {}, e2'^2 = {}, j^2 = {}", rb.e1p * rb.e1p, rb.e2p * rb.e2p, rb.j * rb.j);
}
