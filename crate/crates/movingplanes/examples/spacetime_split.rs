//! The 3-dimensional spacetime algebra: duality between moving planes and
//! unit timelike vectors, causal classification, and the split of a boost
//! into components in and out of the plane `D = (w - v) ^ u`.

use movingplanes::g12::{
    active_boost_through, d_split, direct_boost_rotor, embed_even, parallel_rotor, psi,
    psi_frame, rotor_sqrt, G12, MinkowskiVector,
};
use movingplanes::g2::{G2, Vector2};
use movingplanes::transforms::{OrientedFrame, UnitVector2};

fn main() {
    println!("spacetime basis: g0^2 = {}, g1^2 = {}, g2^2 = {}", G12::G0.gp(G12::G0), G12::G1.gp(G12::G1), G12::G2_.gp(G12::G2_));
    println!("pseudoscalar s = g012, s^2 = {}", G12::S.gp(G12::S));
    println!("s g21 = {}   (duality is multiplication by s)", G12::S.gp(G12::G21));
    println!();

    // The even subalgebra is a copy of the plane algebra; the duality map
    // psi sends each moving plane to a unit timelike vector.
    println!("embed(e1) = {}", embed_even(G2::E1));
    println!("embed(i)  = {}", embed_even(G2::I));
    println!("psi(i)    = {}", psi(G2::I).unwrap().mv());
    let frame = OrientedFrame::positive(UnitVector2::from_angle(0.4), 0.8);
    let v = psi_frame(frame).unwrap();
    println!("psi(i e^(0.8 a)) = {}", v.mv());
    println!("v.v = {}  (unit timelike)", v.inner(v));
    println!();

    for x in [
        MinkowskiVector::new(2.0, 1.0, 0.0),
        MinkowskiVector::new(1.0, 2.0, 0.0),
        MinkowskiVector::new(1.0, 1.0, 0.0),
    ] {
        println!("causal class of {} : {:?}", x.mv(), x.causal_class().unwrap());
    }
    println!();

    // Split two observers against the plane D and rebuild the boost
    // connecting them.
    let u = MinkowskiVector::T;
    let w = MinkowskiVector::timelike_from_velocity(Vector2::new(0.3, 0.5));
    println!("u = {}", u.mv());
    println!("v = {}", v.mv());
    println!("w = {}", w.mv());
    let split = d_split(u, v, w).unwrap();
    println!("D = (w - v)^u = {}", split.d_bivector);
    println!("w_par + w_perp - w = {:e}", ((split.w_par + split.w_perp).mv() - w.mv()).max_abs());
    println!("v_perp = w_perp? gap = {:e}", (split.v_perp.mv() - split.w_perp.mv()).max_abs());

    let r = parallel_rotor(u, v, w).unwrap();
    let half = rotor_sqrt(r);
    println!("parallel rotor R = {}", r);
    println!("R^(1/2)          = {}", half);
    let lv = active_boost_through(u, v, w, v).unwrap();
    println!("L_u(v) = {}  (should equal w)", lv.mv());
    println!();

    // Seen from u, the passive rotor differs from the direct v -> w boost
    // unless the configuration is coplanar.
    let direct = direct_boost_rotor(v, w).unwrap();
    println!("direct boost rotor (wv)^(1/2) = {}", direct);
    println!("active/passive gap            = {:e}", (half - direct).max_abs());
}
