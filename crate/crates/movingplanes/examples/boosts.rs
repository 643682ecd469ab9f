//! Active Lorentz boosts in the plane algebra, and the classification of any
//! element squaring to -1 as a moving plane `i e^{phi a}`.

use movingplanes::g2::G2;
use movingplanes::transforms::{
    active_boost, classify_unit_minus_one, OrientedFrame, UnitVector2,
};

fn main() {
    let a = UnitVector2::from_angle(0.0); // boost along e1
    let phi = 0.6f64.atanh(); // speed 0.6

    println!("boost along e1 at speed 0.6 (phi = {phi:.6}):");
    println!("  L(e1)  = {}   (boost axis is invariant)", active_boost(G2::E1, a, phi));
    println!("  L(e2)  = {}", active_boost(G2::E2, a, phi));
    println!("  L(e2i) = {}", active_boost(G2::E2 * G2::I, a, phi));
    println!("  L(i)   = {}   (the moving plane)", active_boost(G2::I, a, phi));
    println!();

    // The boost is an algebra automorphism: it preserves all products.
    let g1 = G2::new(0.3, -1.0, 0.2, 0.7);
    let g2 = G2::new(-0.4, 0.5, 1.1, -0.2);
    let gap = active_boost(g1 * g2, a, phi)
        - active_boost(g1, a, phi) * active_boost(g2, a, phi);
    println!("automorphism check |L(g1 g2) - L(g1) L(g2)| = {:e}", gap.max_abs());
    println!();

    // The boosted plane still squares to -1 and decomposes back into
    // (orientation, axis, rapidity).
    let h = active_boost(G2::I, UnitVector2::from_angle(1.2), 0.9);
    println!("h     = {}", h);
    println!("h^2   = {}", h * h);
    let f = classify_unit_minus_one(h).unwrap();
    println!(
        "frame: orientation = {}, a = {}, phi = {:.6}",
        f.orientation,
        G2::from(f.a.vector()),
        f.phi
    );
    println!("velocity of the frame = {}", G2::from(f.velocity()));
    println!("reconstruction error  = {:e}", (f.reconstruct() - h).max_abs());

    // The rest plane itself.
    let rest = classify_unit_minus_one(G2::I).unwrap();
    assert_eq!(rest, OrientedFrame::REST);
    println!("\ni itself classifies as the rest frame, phi = {}", rest.phi);
}
