//! Relativistic velocity composition, two ways: composing the moving planes
//! directly, and the passive boost with its explicit direction `d`.

use movingplanes::g2::{G2, Vector2};
use movingplanes::kinematics::{
    compose_frames, gamma_factor, passive_boost_factor, velocity_add, Velocity,
};

fn show(label: &str, uv: Velocity, uw: Velocity) {
    let r = compose_frames(uv.frame(), uw.frame());
    println!("{label}:");
    println!("  u_v = {}, u_w = {}", G2::from(uv.vector()), G2::from(uw.vector()));
    println!("  composite rapidity omega = {:.6} (speed {:.6})", r.omega, r.omega.tanh());
    println!("  composite direction c    = {}", r.c_direction);
    println!("  relative velocity v_w    = {}", r.vw);

    match passive_boost_factor(uv, uw) {
        Ok(pb) => {
            println!("  passive boost: Omega = {:.6}, d = {}", pb.omega, G2::from(pb.d.vector()));
            let back = velocity_add(uv, pb.u_vw, pb.d, pb.omega).unwrap();
            println!(
                "  velocity addition recovers u_w with error {:e}",
                (back.vector() - uw.vector()).norm()
            );
        }
        Err(e) => println!("  passive boost degenerate: {e}"),
    }
    println!();
}

fn main() {
    // collinear: 0.5 (+) 0.8 = 1.3 / 1.4 = 0.928571...
    let uv = Velocity::new(Vector2::new(0.5, 0.0)).unwrap();
    let uw = Velocity::new(Vector2::new(0.8, 0.0)).unwrap();
    show("collinear frames", uv, uw);

    // orthogonal velocities: composition picks up a bivector part
    let uw = Velocity::new(Vector2::new(0.0, 0.8)).unwrap();
    show("orthogonal frames", uv, uw);

    // identical frames compose to rest (degenerate passive direction)
    show("identical frames", uv, uv);

    let v = Velocity::new(Vector2::new(0.6, 0.0)).unwrap();
    println!("gamma(0.6) = {}", gamma_factor(v));
    println!("superluminal input rejected: {:?}", Velocity::new(Vector2::new(1.5, 0.0)));
}
