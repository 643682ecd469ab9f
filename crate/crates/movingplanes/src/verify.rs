//! Randomized invariant suites with deterministic seeding. The CLI `verify`
//! subcommand and the acceptance tests both run these.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::g12::{
    self, embed_even, direct_boost_rotor, parallel_rotor, project_even, psi_frame,
    recompute_composition, relative_velocity_bivector, rotor_sqrt, G12, MinkowskiVector,
};
use crate::g2::{G2, Vector2, ZeroScalarClass};
use crate::kinematics::{
    apply_passive_boost, compose_frames, gamma_factor, passive_boost_factor, velocity_add,
    Velocity,
};
use crate::matrix_rep::{
    from_matrix, homomorphism_gap, homomorphism_gap_f, matrix_of, matrix_of_f, spectral_identity_gap,
    Mat2,
};
use crate::transforms::{
    active_boost, classify_unit_minus_one, rotate, OrientedFrame, UnitVector2,
};

/// One invariant checked over `count` random samples.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub max_error: f64,
    pub tolerance: f64,
    /// Human-readable worst-case input, kept when the check fails.
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.max_error <= self.tolerance
    }
}

/// Report of a named suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

/// Tracks the worst error seen and the input that produced it.
struct Worst {
    name: &'static str,
    tolerance: f64,
    max_error: f64,
    witness: Option<String>,
}

impl Worst {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Worst { name, tolerance, max_error: 0.0, witness: None }
    }

    fn record(&mut self, err: f64, describe: impl FnOnce() -> String) {
        let err = if err.is_finite() { err } else { f64::INFINITY };
        if err > self.max_error {
            self.max_error = err;
            if err > self.tolerance {
                self.witness = Some(describe());
            }
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            max_error: self.max_error,
            tolerance: self.tolerance,
            counterexample: if self.max_error > self.tolerance { self.witness } else { None },
        }
    }
}

fn rand_g2(rng: &mut impl Rng) -> G2 {
    G2::new(
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
    )
}

fn rand_g12(rng: &mut impl Rng) -> G12 {
    let mut c = [0.0; 8];
    for x in &mut c {
        *x = rng.gen_range(-2.0..2.0);
    }
    G12 { c }
}

fn rand_zero_scalar(rng: &mut impl Rng, max_norm: f64) -> G2 {
    loop {
        let a = G2::new(
            0.0,
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = (a.e1 * a.e1 + a.e2 * a.e2 + a.e12 * a.e12).sqrt();
        if n > 1e-3 {
            return a.scale(rng.gen_range(0.1..max_norm) / n);
        }
    }
}

fn rand_unit(rng: &mut impl Rng) -> UnitVector2 {
    UnitVector2::from_angle(rng.gen_range(0.0..std::f64::consts::TAU))
}

fn rand_frame(rng: &mut impl Rng) -> OrientedFrame {
    OrientedFrame::positive(rand_unit(rng), rng.gen_range(-3.0..3.0))
}

fn rand_velocity(rng: &mut impl Rng) -> Velocity {
    let speed = rng.gen_range(0.0..0.95);
    Velocity::new(rand_unit(rng).vector().scale(speed)).expect("subluminal")
}

fn g2_diff(a: G2, b: G2) -> f64 {
    (a - b).max_abs()
}

fn g12_diff(a: G12, b: G12) -> f64 {
    (a - b).max_abs()
}

/// 30-term power-series exponential, the oracle for the closed-form branch
/// split in [`G2::exp_zero_scalar`].
pub fn exp_series_oracle(a: G2) -> G2 {
    let mut term = G2::ONE;
    let mut sum = G2::ONE;
    for k in 1..=30 {
        term = term.gp(a).scale(1.0 / k as f64);
        sum = sum + term;
    }
    sum
}

pub fn run_core(seed: u64, count: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assoc = Worst::new("gp associativity", 1e-12);
    let mut distrib = Worst::new("gp distributivity", 1e-12);
    let mut split = Worst::new("sym + antisym = gp", 1e-13);
    let mut nilp = Worst::new("nilpotent squares vanish", 1e-10);
    let mut exps = Worst::new("exp matches 30-term series", 1e-10);
    let mut triple = Worst::new("triple product = -det", 1e-12);

    for _ in 0..count {
        let (a, b, c) = (rand_g2(&mut rng), rand_g2(&mut rng), rand_g2(&mut rng));
        assoc.record(g2_diff(a.gp(b).gp(c), a.gp(b.gp(c))), || format!("{a:?} {b:?} {c:?}"));
        distrib.record(g2_diff(a.gp(b + c), a.gp(b) + a.gp(c)), || format!("{a:?} {b:?} {c:?}"));
        split.record(g2_diff(a.sym(b) + a.antisym(b), a.gp(b)), || format!("{a:?} {b:?}"));

        let theta = rng.gen_range(0.0..std::f64::consts::TAU);
        let r = rng.gen_range(0.1..1.5);
        let n = G2::new(0.0, r * theta.cos(), r * theta.sin(), r);
        debug_assert_eq!(n.classify_zero_scalar().unwrap(), ZeroScalarClass::Nilpotent);
        nilp.record(n.gp(n).max_abs(), || format!("{n:?}"));

        let z = rand_zero_scalar(&mut rng, 3.0);
        exps.record(
            g2_diff(z.exp_zero_scalar().unwrap(), exp_series_oracle(z)),
            || format!("{z:?}"),
        );

        let (za, zb, zc) = (
            rand_zero_scalar(&mut rng, 2.0),
            rand_zero_scalar(&mut rng, 2.0),
            rand_zero_scalar(&mut rng, 2.0),
        );
        let det = za.e1 * (zb.e2 * zc.e12 - zb.e12 * zc.e2)
            - za.e2 * (zb.e1 * zc.e12 - zb.e12 * zc.e1)
            + za.e12 * (zb.e1 * zc.e2 - zb.e2 * zc.e1);
        triple.record(
            (za.triple_sym(zb, zc).unwrap() + det).abs(),
            || format!("{za:?} {zb:?} {zc:?}"),
        );
    }

    // Exhaustive basis triples for the determinant identity.
    let basis = [G2::E1, G2::E2, G2::I];
    let mut exhaustive = Worst::new("triple product basis cases", 0.0);
    for a in basis {
        for b in basis {
            for c in basis {
                let det = a.e1 * (b.e2 * c.e12 - b.e12 * c.e2)
                    - a.e2 * (b.e1 * c.e12 - b.e12 * c.e1)
                    + a.e12 * (b.e1 * c.e2 - b.e2 * c.e1);
                exhaustive.record(
                    (a.triple_sym(b, c).unwrap() + det).abs(),
                    || format!("{a:?} {b:?} {c:?}"),
                );
            }
        }
    }

    SuiteReport {
        suite: "core",
        checks: vec![
            assoc.finish(),
            distrib.finish(),
            split.finish(),
            nilp.finish(),
            exps.finish(),
            triple.finish(),
            exhaustive.finish(),
        ],
    }
}

pub fn run_transforms(seed: u64, count: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut norm = Worst::new("rotation preserves vector square", 1e-12);
    let mut outer = Worst::new("rotated vector stays a vector", 1e-12);
    let mut auto = Worst::new("boost automorphism law", 1e-11);
    let mut pickup = Worst::new("boost bivector pickup = -sinh(phi)", 1e-12);
    let mut square = Worst::new("boost preserves relative square", 1e-11);
    let mut anti = Worst::new("boosted orthonormal pair anticommutes", 1e-11);
    let mut round = Worst::new("frame classification round trip", 1e-10);

    for k in 0..count {
        let theta = rng.gen_range(-10.0..10.0);
        let v = Vector2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let rv = rotate(v, theta);
        norm.record((rv.inner(rv) - v.inner(v)).abs(), || format!("{v:?} theta={theta}"));

        let half = G2::scalar((theta / 2.0).cos()) - (theta / 2.0).sin() * G2::I;
        let sand = half * G2::from(v) * half.reverse();
        outer.record(sand.e12.abs().max(sand.s.abs()), || format!("{v:?} theta={theta}"));

        let a = rand_unit(&mut rng);
        let phi = rng.gen_range(-3.0..3.0);
        let (g1, g2) = (rand_g2(&mut rng), rand_g2(&mut rng));
        auto.record(
            g2_diff(
                active_boost(g1.gp(g2), a, phi),
                active_boost(g1, a, phi).gp(active_boost(g2, a, phi)),
            ),
            || format!("{g1:?} {g2:?} a={a:?} phi={phi}"),
        );

        let got = active_boost(a.mv() * G2::I, a, phi);
        pickup.record((got.e12 + phi.sinh()).abs(), || format!("a={a:?} phi={phi}"));

        let x = Vector2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let lx = active_boost(x.into(), a, phi);
        square.record(
            g2_diff(lx.gp(lx), G2::scalar(x.inner(x))),
            || format!("{x:?} a={a:?} phi={phi}"),
        );

        let la = active_boost(a.mv(), a, phi);
        let lai = active_boost(a.mv() * G2::I, a, phi);
        anti.record(g2_diff(la * lai, -(lai * la)), || format!("a={a:?} phi={phi}"));

        // round trip, forcing the phi = 0 edge case periodically
        let f = if k % 97 == 0 {
            OrientedFrame::positive(rand_unit(&mut rng), 0.0)
        } else {
            rand_frame(&mut rng)
        };
        let back = classify_unit_minus_one(f.reconstruct()).expect("valid frame");
        round.record(g2_diff(back.reconstruct(), f.reconstruct()), || format!("{f:?}"));
    }

    SuiteReport {
        suite: "transforms",
        checks: vec![
            norm.finish(),
            outer.finish(),
            auto.finish(),
            pickup.finish(),
            square.finish(),
            anti.finish(),
            round.finish(),
        ],
    }
}

pub fn run_kinematics(seed: u64, count: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut consistency = Worst::new("cosh(omega) matches exponential product", 1e-11);
    let mut cdir = Worst::new("composition direction is a relative unit vector", 1e-10);
    let mut recip = Worst::new("frame-swap reciprocity v_w = -w_v", 1e-12);
    let mut collin = Worst::new("collinear passive equals active", 1e-10);
    let mut subl = Worst::new("velocity addition stays subluminal", 0.0);
    let mut gamma = Worst::new("gamma factor equals cosh(phi)", 1e-12);
    let mut sandwich = Worst::new("passive sandwich reconstructs e^{rho b}", 1e-9);
    let mut roundtrip = Worst::new("velocity addition inverts the passive boost", 1e-10);

    for _ in 0..count {
        let j = rand_frame(&mut rng);
        let k = rand_frame(&mut rng);
        let r = compose_frames(j, k);
        let prod = ((-j.phi) * j.a.mv()).exp_zero_scalar().unwrap()
            * (k.phi * k.a.mv()).exp_zero_scalar().unwrap();
        consistency.record((r.omega.cosh() - prod.s).abs(), || format!("{j:?} {k:?}"));
        if r.omega > 1e-6 {
            cdir.record(
                g2_diff(r.c_direction * r.c_direction, G2::ONE),
                || format!("{j:?} {k:?}"),
            );
            let class = r.c_direction.classify_zero_scalar().unwrap();
            cdir.record(
                if class == ZeroScalarClass::RelativeVector { 0.0 } else { 1.0 },
                || format!("class {class:?} for {j:?} {k:?}"),
            );
        }
        recip.record(g2_diff(r.vw, -compose_frames(k, j).vw), || format!("{j:?} {k:?}"));

        // collinear configuration: b = +-a
        let a = rand_unit(&mut rng);
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let phi = rng.gen_range(-2.0..2.0);
        let rho = rng.gen_range(-2.0..2.0);
        let jc = OrientedFrame::positive(a, phi);
        let kc = OrientedFrame::positive(
            UnitVector2::new(a.vector().scale(sign)).unwrap(),
            rho,
        );
        let uv = Velocity::new(jc.velocity()).unwrap();
        let uw = Velocity::new(kc.velocity()).unwrap();
        let active = compose_frames(jc, kc);
        match passive_boost_factor(uv, uw) {
            Ok(pb) => collin.record(
                (pb.u_vw.norm() - active.omega.tanh()).abs(),
                || format!("{jc:?} {kc:?}"),
            ),
            Err(_) => collin.record(active.omega.tanh(), || format!("{jc:?} {kc:?}")),
        }

        let uv = rand_velocity(&mut rng);
        let uw = rand_velocity(&mut rng);
        if let Ok(pb) = passive_boost_factor(uv, uw) {
            let added = velocity_add(uv, pb.u_vw, pb.d, pb.omega);
            match added {
                Ok(got) => {
                    subl.record(
                        if got.speed() < 1.0 { 0.0 } else { got.speed() },
                        || format!("{uv:?} {uw:?}"),
                    );
                    roundtrip.record(
                        (got.vector() - uw.vector()).norm(),
                        || format!("{uv:?} {uw:?}"),
                    );
                }
                Err(e) => subl.record(f64::INFINITY, || format!("{uv:?} {uw:?}: {e}")),
            }
            let exp_phi_a = {
                let f = uv.frame();
                (f.phi * f.a.mv()).exp_zero_scalar().unwrap()
            };
            let exp_rho_b = {
                let f = uw.frame();
                (f.phi * f.a.mv()).exp_zero_scalar().unwrap()
            };
            sandwich.record(
                g2_diff(apply_passive_boost(exp_phi_a, pb.d, pb.omega), exp_rho_b),
                || format!("{uv:?} {uw:?}"),
            );
        }

        let v = rand_velocity(&mut rng);
        gamma.record(
            (gamma_factor(v) - v.rapidity().cosh()).abs(),
            || format!("{v:?}"),
        );
    }

    SuiteReport {
        suite: "kinematics",
        checks: vec![
            consistency.finish(),
            cdir.finish(),
            recip.finish(),
            collin.finish(),
            subl.finish(),
            gamma.finish(),
            sandwich.finish(),
            roundtrip.finish(),
        ],
    }
}

pub fn run_spacetime(seed: u64, count: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assoc = Worst::new("spacetime product associativity", 1e-11);
    let mut central = Worst::new("pseudoscalar is central", 0.0);
    let mut homo = Worst::new("even embedding is a homomorphism", 1e-11);
    let mut natural = Worst::new("duality commutes with boosts", 1e-11);
    let mut gamma = Worst::new("u.v equals the gamma factor", 1e-11);
    let mut dual_route = Worst::new("spacetime route matches plane route", 1e-10);
    let mut equiv = Worst::new("collinear parallel rotor equals direct rotor", 1e-10);
    let mut luv = Worst::new("parallel-rotor boost takes v to w", 1e-9);
    let mut invol = Worst::new("involutions are (anti)multiplicative", 1e-11);

    for k in 0..8 {
        let b = G12::basis(k);
        central.record(g12_diff(G12::S.gp(b), b.gp(G12::S)), || format!("basis {k}"));
    }

    for n in 0..count {
        let (f1, f2, f3) = (rand_g12(&mut rng), rand_g12(&mut rng), rand_g12(&mut rng));
        assoc.record(
            g12_diff(f1.gp(f2).gp(f3), f1.gp(f2.gp(f3))),
            || format!("{f1:?} {f2:?} {f3:?}"),
        );
        invol.record(
            g12_diff(
                f1.gp(f2).main_involution(),
                f1.main_involution().gp(f2.main_involution()),
            ),
            || format!("main: {f1:?} {f2:?}"),
        );
        invol.record(
            g12_diff(f1.gp(f2).reversion(), f2.reversion().gp(f1.reversion())),
            || format!("reversion: {f1:?} {f2:?}"),
        );
        invol.record(
            g12_diff(
                f1.gp(f2).clifford_conj(),
                f2.clifford_conj().gp(f1.clifford_conj()),
            ),
            || format!("conjugation: {f1:?} {f2:?}"),
        );

        let (g1, g2) = (rand_g2(&mut rng), rand_g2(&mut rng));
        homo.record(
            g12_diff(embed_even(g1.gp(g2)), embed_even(g1).gp(embed_even(g2))),
            || format!("{g1:?} {g2:?}"),
        );

        let j = rand_frame(&mut rng);
        let boosted = active_boost(G2::I, j.a, j.phi);
        let lhs = psi_frame(OrientedFrame::REST).unwrap().mv().gp(embed_even(
            (j.phi * j.a.mv()).exp_zero_scalar().unwrap(),
        ));
        let rhs = crate::g12::psi(boosted).unwrap().mv();
        natural.record(g12_diff(lhs, rhs), || format!("{j:?}"));

        let v = psi_frame(j).unwrap();
        let u = MinkowskiVector::T;
        let uv = project_even(relative_velocity_bivector(u, v).unwrap()).unwrap();
        let speed_sq = uv.gp(uv).s;
        gamma.record(
            (u.inner(v) - 1.0 / (1.0 - speed_sq).sqrt()).abs(),
            || format!("{j:?}"),
        );

        // dual route: plane composition vs spacetime recomputation
        let kf = rand_frame(&mut rng);
        let r = compose_frames(j, kf);
        let w = psi_frame(kf).unwrap();
        let (v_dot_w, vw12) = recompute_composition(u, v, w).unwrap();
        dual_route.record((v_dot_w - r.omega.cosh()).abs(), || format!("{j:?} {kf:?}"));
        dual_route.record(g2_diff(vw12, r.vw), || format!("{j:?} {kf:?}"));

        // collinear active/passive equivalence
        let a = rand_unit(&mut rng);
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let uu = MinkowskiVector::T;
        let vv = psi_frame(OrientedFrame::positive(a, rng.gen_range(-2.0..2.0))).unwrap();
        let b = UnitVector2::new(a.vector().scale(sign)).unwrap();
        let ww = psi_frame(OrientedFrame::positive(b, rng.gen_range(-2.0..2.0))).unwrap();
        if let Ok(rp) = parallel_rotor(uu, vv, ww) {
            equiv.record(
                g12_diff(rotor_sqrt(rp), direct_boost_rotor(vv, ww).unwrap()),
                || format!("{vv:?} {ww:?}"),
            );
        }

        // generic L_u(v) = w
        let ur = psi_frame(rand_frame(&mut rng)).unwrap();
        let vr = psi_frame(rand_frame(&mut rng)).unwrap();
        let wr = psi_frame(rand_frame(&mut rng)).unwrap();
        if let Ok(got) = g12::active_boost_through(ur, vr, wr, vr) {
            luv.record(
                g12_diff(got.mv(), wr.mv()),
                || format!("sample {n}: {ur:?} {vr:?} {wr:?}"),
            );
        }
    }

    SuiteReport {
        suite: "spacetime",
        checks: vec![
            assoc.finish(),
            central.finish(),
            homo.finish(),
            natural.finish(),
            gamma.finish(),
            dual_route.finish(),
            equiv.finish(),
            luv.finish(),
        invol.finish(),
        ],
    }
}

pub fn run_matrix(seed: u64, count: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut homo = Worst::new("matrix representation is multiplicative", 1e-12);
    let mut bij = Worst::new("matrix representation is a linear bijection", 1e-14);
    let mut spectral = Worst::new("spectral basis identities", 1e-15);
    let mut homo_f = Worst::new("complexified representation is multiplicative", 1e-11);
    let mut oracle = Worst::new("plane products verified through the matrix oracle", 1e-12);
    let mut rev_map = Worst::new("reversion maps to the matrix adjugate", 1e-13);

    spectral.record(spectral_identity_gap(), || "idempotent identities".to_string());

    for _ in 0..count {
        let (g1, g2) = (rand_g2(&mut rng), rand_g2(&mut rng));
        homo.record(homomorphism_gap(g1, g2), || format!("{g1:?} {g2:?}"));
        bij.record(g2_diff(from_matrix(matrix_of(g1)), g1), || format!("{g1:?}"));
        oracle.record(
            g2_diff(from_matrix(matrix_of(g1).mul(matrix_of(g2))), g1.gp(g2)),
            || format!("{g1:?} {g2:?}"),
        );

        let (f1, f2) = (rand_g12(&mut rng), rand_g12(&mut rng));
        homo_f.record(homomorphism_gap_f(f1, f2), || format!("{f1:?} {f2:?}"));

        // reversion corresponds to the adjugate on each matrix half, with the
        // pseudoscalar half negated
        let m = matrix_of_f(f1);
        let rev = matrix_of_f(f1.reversion());
        let adj = |m: Mat2| Mat2::new(m.m22, -m.m12, -m.m21, m.m11);
        rev_map.record(
            rev.re.sub(adj(m.re)).max_abs().max(rev.im.add(adj(m.im)).max_abs()),
            || format!("{f1:?}"),
        );
    }

    SuiteReport {
        suite: "matrix",
        checks: vec![
            homo.finish(),
            bij.finish(),
            spectral.finish(),
            homo_f.finish(),
            oracle.finish(),
            rev_map.finish(),
        ],
    }
}

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 6] = ["core", "transforms", "kinematics", "spacetime", "matrix", "all"];

/// Runs the named suite (or all of them) with deterministic seeding.
pub fn run_suite(name: &str, seed: u64, count: usize) -> Option<Vec<SuiteReport>> {
    match name {
        "core" => Some(vec![run_core(seed, count)]),
        "transforms" => Some(vec![run_transforms(seed, count)]),
        "kinematics" => Some(vec![run_kinematics(seed, count)]),
        "spacetime" => Some(vec![run_spacetime(seed, count)]),
        "matrix" => Some(vec![run_matrix(seed, count)]),
        "all" => Some(vec![
            run_core(seed, count),
            run_transforms(seed, count),
            run_kinematics(seed, count),
            run_spacetime(seed, count),
            run_matrix(seed, count),
        ]),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_smoke() {
        for report in run_suite("all", 7, 200).unwrap() {
            for check in &report.checks {
                assert!(
                    check.passed(),
                    "{}/{} failed: max error {} > {} ({:?})",
                    report.suite,
                    check.name,
                    check.max_error,
                    check.tolerance,
                    check.counterexample
                );
            }
        }
    }

    #[test]
    fn unknown_suite_rejected() {
        assert!(run_suite("bogus", 1, 10).is_none());
    }
}
