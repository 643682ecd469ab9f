//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use movingplanes::g12::{
    active_boost_through, direct_boost_rotor, parallel_rotor, psi_frame, recompute_composition,
    relative_velocity_bivector, project_even, rotor_sqrt, G12, MinkowskiVector,
};
use movingplanes::g2::{G2, Vector2};
use movingplanes::hyperbolic::Hyperbolic;
use movingplanes::kinematics::{
    apply_passive_boost, compose_frames, gamma_factor, passive_boost_factor, velocity_add,
    Velocity,
};
use movingplanes::matrix_rep::matrix_of;
use movingplanes::transforms::{
    active_boost, classify_unit_minus_one, rotate, OrientedFrame, UnitVector2,
};

fn report(criterion: &str, max_err: f64, tol: f64) {
    let status = if max_err <= tol { "pass" } else { "FAIL" };
    println!("[{status}] {criterion}: max error {max_err:e} (tolerance {tol:e})");
    assert!(max_err <= tol, "{criterion}: {max_err:e} > {tol:e}");
}

fn rand_frame(rng: &mut impl Rng) -> OrientedFrame {
    OrientedFrame::positive(
        UnitVector2::from_angle(rng.gen_range(0.0..std::f64::consts::TAU)),
        rng.gen_range(-3.0..3.0),
    )
}

fn rand_velocity(rng: &mut impl Rng) -> Velocity {
    let dir = UnitVector2::from_angle(rng.gen_range(0.0..std::f64::consts::TAU));
    Velocity::new(dir.vector().scale(rng.gen_range(0.0..0.95))).unwrap()
}

// ---------------------------------------------------------------------------
// Independent product-table oracle: basis blades as generator sequences,
// multiplied by concatenation, bubble-sorted with sign flips, and contracted
// with the metric. Shares nothing with the bitmask implementation.

fn blade_product(a: &[usize], b: &[usize], metric: &[f64]) -> (f64, Vec<usize>) {
    let mut seq: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
    let mut sign = 1.0;
    loop {
        let mut changed = false;
        let mut k = 0;
        while k + 1 < seq.len() {
            if seq[k] == seq[k + 1] {
                sign *= metric[seq[k]];
                seq.drain(k..=k + 1);
                changed = true;
            } else if seq[k] > seq[k + 1] {
                seq.swap(k, k + 1);
                sign = -sign;
                changed = true;
            } else {
                k += 1;
            }
        }
        if !changed {
            return (sign, seq);
        }
    }
}

#[test]
fn criterion_01_multiplication_tables() {
    let start = Instant::now();

    // G2 basis as generator sequences over {e1, e2} with metric (+,+).
    let g2_blades: [(&[usize], G2); 4] = [
        (&[], G2::ONE),
        (&[0], G2::E1),
        (&[1], G2::E2),
        (&[0, 1], G2::I),
    ];
    for (sa, ma) in g2_blades {
        for (sb, mb) in g2_blades {
            let (sign, seq) = blade_product(sa, sb, &[1.0, 1.0]);
            let want = g2_blades
                .iter()
                .find(|(s, _)| *s == seq.as_slice())
                .unwrap()
                .1
                .scale(sign);
            assert_eq!(ma.gp(mb), want, "{sa:?} * {sb:?}");
        }
    }

    // G12 basis over generators {g0, g1, g2} with metric (+,-,-); note the
    // basis element g21 is the reversed blade [2,1] = -[1,2].
    let g12_blades: [(&[usize], f64, usize); 8] = [
        (&[], 1.0, 0),
        (&[0], 1.0, 1),
        (&[1], 1.0, 2),
        (&[2], 1.0, 3),
        (&[0, 1], 1.0, 4),
        (&[0, 2], 1.0, 5),
        (&[1, 2], -1.0, 6), // g21
        (&[0, 1, 2], 1.0, 7),
    ];
    let metric = [1.0, -1.0, -1.0];
    for &(sa, fa, ia) in &g12_blades {
        for &(sb, fb, ib) in &g12_blades {
            let (sign, seq) = blade_product(sa, sb, &metric);
            let (_, fc, ic) =
                *g12_blades.iter().find(|(s, _, _)| *s == seq.as_slice()).unwrap();
            let want = G12::basis(ic).scale(sign * fa * fb * fc);
            let got = G12::basis(ia).gp(G12::basis(ib));
            assert_eq!(got, want, "basis {ia} * basis {ib}");
        }
    }

    let elapsed = start.elapsed().as_secs_f64();
    report("1 multiplication tables exact, runtime < 1 s", elapsed.max(0.0) / 1.0 * 0.0, 0.0);
    assert!(elapsed < 1.0, "table check took {elapsed} s");
}

#[test]
fn criterion_02_matrix_oracle_homomorphism() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut max_rel: f64 = 0.0;
    for _ in 0..100_000 {
        let g1 = G2::new(
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        );
        let g2 = G2::new(
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        );
        let lhs = matrix_of(g1.gp(g2));
        let rhs = matrix_of(g1).mul(matrix_of(g2));
        let scale = matrix_of(g1).max_abs() * matrix_of(g2).max_abs();
        max_rel = max_rel.max(lhs.sub(rhs).max_abs() / scale.max(1.0));
    }
    report("2 matrix-oracle homomorphism over 1e5 pairs", max_rel, 1e-12);
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 5.0, "homomorphism check took {elapsed} s");
}

#[test]
fn criterion_03_rotation_boost_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut sq_err: f64 = 0.0;
    let mut auto_err: f64 = 0.0;
    let mut pickup_err: f64 = 0.0;
    for _ in 0..10_000 {
        let a = UnitVector2::from_angle(rng.gen_range(0.0..std::f64::consts::TAU));
        let phi = rng.gen_range(-3.0..3.0);
        let theta = rng.gen_range(-10.0..10.0);
        let x = Vector2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));

        let rx = rotate(x, theta);
        sq_err = sq_err.max((rx.inner(rx) - x.inner(x)).abs());

        let g1 = G2::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let g2 = G2::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let gap = active_boost(g1.gp(g2), a, phi)
            - active_boost(g1, a, phi).gp(active_boost(g2, a, phi));
        auto_err = auto_err.max(gap.max_abs());

        let pickup = active_boost(a.mv() * G2::I, a, phi).e12 + phi.sinh();
        pickup_err = pickup_err.max(pickup.abs());
    }
    report("3a rotation preserves vector squares", sq_err, 1e-12);
    report("3b active boost automorphism law", auto_err, 1e-11);
    report("3c boost bivector pickup equals -sinh(phi)", pickup_err, 1e-12);
}

#[test]
fn criterion_04_dual_route_composition() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut max_err: f64 = 0.0;
    for _ in 0..10_000 {
        let j = rand_frame(&mut rng);
        let k = rand_frame(&mut rng);
        let r = compose_frames(j, k);
        let u = MinkowskiVector::T;
        let v = psi_frame(j).unwrap();
        let w = psi_frame(k).unwrap();
        let (v_dot_w, vw) = recompute_composition(u, v, w).unwrap();
        max_err = max_err
            .max((v_dot_w - r.omega.cosh()).abs())
            .max((vw - r.vw).max_abs());
    }
    report("4 plane and spacetime composition routes agree", max_err, 1e-10);
}

#[test]
fn criterion_05_passive_sandwich_and_roundtrip() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut sandwich_err: f64 = 0.0;
    let mut roundtrip_err: f64 = 0.0;
    let mut n = 0;
    while n < 10_000 {
        let uv = rand_velocity(&mut rng);
        let uw = rand_velocity(&mut rng);
        let pb = match passive_boost_factor(uv, uw) {
            Ok(pb) => pb,
            Err(_) => continue,
        };
        n += 1;
        let jf = uv.frame();
        let kf = uw.frame();
        let exp_phi_a = (jf.phi * jf.a.mv()).exp_zero_scalar().unwrap();
        let exp_rho_b = (kf.phi * kf.a.mv()).exp_zero_scalar().unwrap();
        let got = apply_passive_boost(exp_phi_a, pb.d, pb.omega);
        sandwich_err = sandwich_err.max((got - exp_rho_b).max_abs());

        let back = velocity_add(uv, pb.u_vw, pb.d, pb.omega).unwrap();
        roundtrip_err = roundtrip_err.max((back.vector() - uw.vector()).norm());
    }
    report("5a passive sandwich reconstructs e^{rho b}", sandwich_err, 1e-9);
    report("5b velocity addition inverts the passive boost", roundtrip_err, 1e-10);
}

#[test]
fn criterion_06_gamma_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut max_err: f64 = 0.0;
    for _ in 0..10_000 {
        let j = rand_frame(&mut rng);
        let u = MinkowskiVector::T;
        let v = psi_frame(j).unwrap();
        let uv = project_even(relative_velocity_bivector(u, v).unwrap()).unwrap();
        let speed_sq = uv.gp(uv).s;
        max_err = max_err.max((u.inner(v) - 1.0 / (1.0 - speed_sq).sqrt()).abs());
    }
    report("6a u.v equals gamma of the relative velocity", max_err, 1e-11);

    let spot = gamma_factor(Velocity::new(Vector2::new(0.6, 0.0)).unwrap());
    report("6b gamma(0.6) = 1.25", (spot - 1.25).abs(), 1e-12);
}

#[test]
fn criterion_07_active_passive_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut collinear_err: f64 = 0.0;
    let mut luv_err: f64 = 0.0;
    for _ in 0..10_000 {
        // collinear configuration: b = +-a
        let a = UnitVector2::from_angle(rng.gen_range(0.0..std::f64::consts::TAU));
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let b = UnitVector2::new(a.vector().scale(sign)).unwrap();
        let u = MinkowskiVector::T;
        let v = psi_frame(OrientedFrame::positive(a, rng.gen_range(-2.0..2.0))).unwrap();
        let w = psi_frame(OrientedFrame::positive(b, rng.gen_range(-2.0..2.0))).unwrap();
        if let Ok(rp) = parallel_rotor(u, v, w) {
            let gap = rotor_sqrt(rp) - direct_boost_rotor(v, w).unwrap();
            collinear_err = collinear_err.max(gap.max_abs());
        }

        // generic triple: L_u(v) = w
        let ur = psi_frame(rand_frame(&mut rng)).unwrap();
        let vr = psi_frame(rand_frame(&mut rng)).unwrap();
        let wr = psi_frame(rand_frame(&mut rng)).unwrap();
        if let Ok(got) = active_boost_through(ur, vr, wr, vr) {
            luv_err = luv_err.max((got.mv() - wr.mv()).max_abs());
        }
    }
    report("7a collinear parallel rotor equals direct boost rotor", collinear_err, 1e-10);
    report("7b L_u(v) = w on random valid triples", luv_err, 1e-9);
}

#[test]
fn criterion_08_classification_roundtrip() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut max_err: f64 = 0.0;
    for k in 0..10_000 {
        let f = if k % 100 == 0 {
            OrientedFrame::positive(
                UnitVector2::from_angle(rng.gen_range(0.0..std::f64::consts::TAU)),
                0.0,
            )
        } else {
            rand_frame(&mut rng)
        };
        let h = f.reconstruct();
        let back = classify_unit_minus_one(h).unwrap();
        max_err = max_err.max((back.reconstruct() - h).max_abs());
    }
    report("8 frame classification round trip", max_err, 1e-10);
}

#[test]
fn criterion_09_hyperbolic_plane() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut polar_err: f64 = 0.0;
    let mut mult_err: f64 = 0.0;
    for _ in 0..10_000 {
        let w = Hyperbolic::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        if !w.is_null() {
            let back = (w.polar().unwrap()).reconstruct();
            polar_err = polar_err
                .max((back.x - w.x).abs())
                .max((back.y - w.y).abs());
        }
        let w2 = Hyperbolic::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let lhs = (w * w2).modulus_sq();
        let rhs = w.modulus_sq() * w2.modulus_sq();
        mult_err = mult_err.max((lhs - rhs).abs() / rhs.max(1.0));
    }
    report("9a polar round trip off the null cone", polar_err, 1e-12);
    report("9b modulus multiplicativity", mult_err, 1e-10);

    let zero = Hyperbolic::new(1.0, 1.0) * Hyperbolic::new(1.0, -1.0);
    report("9c zero-divisor product exact", zero.x.abs().max(zero.y.abs()), 0.0);
}

#[test]
fn criterion_10_full_verify_under_30s() {
    let start = Instant::now();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_movingplanes"))
        .args(["verify", "--suite", "all", "--seed", "42", "--count", "1000"])
        .output()
        .expect("run verify");
    let elapsed = start.elapsed().as_secs_f64();
    let status = if out.status.code() == Some(0) && elapsed < 30.0 { "pass" } else { "FAIL" };
    println!("[{status}] 10 verify --suite all --seed 42 --count 1000: exit {:?}, {elapsed:.2} s", out.status.code());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(elapsed < 30.0, "verify took {elapsed} s");
}
