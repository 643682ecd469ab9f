//! The spectral-basis 2x2 matrix representation: an isomorphism that serves
//! as an independent cross-check on every geometric product.

use movingplanes::g12::G12;
use movingplanes::g2::G2;
use movingplanes::matrix_rep::{
    from_matrix, homomorphism_gap, matrix_of, matrix_of_f, spectral_identity_gap, split_even,
    Idempotent,
};

fn print_mat(label: &str, g: G2) {
    let m = matrix_of(g);
    println!("{label:8} -> [{:5} {:5}]", m.m11, m.m12);
    println!("{:8}    [{:5} {:5}]", "", m.m21, m.m22);
}

fn main() {
    print_mat("1", G2::ONE);
    print_mat("e1", G2::E1);
    print_mat("e2", G2::E2);
    print_mat("i", G2::I);
    println!();

    // The representation turns geometric products into matrix products.
    let g1 = G2::new(1.0, 2.0, -0.5, 0.25);
    let g2 = G2::new(-0.3, 0.1, 1.5, -2.0);
    println!("[g1][g2] vs [g1 g2]: gap = {:e}", homomorphism_gap(g1, g2));
    println!("round trip: {}", from_matrix(matrix_of(g1)));
    println!();

    // The idempotents u+ = (1 + e2)/2 and u- = (1 - e2)/2 generate the
    // spectral basis; their defining identities hold exactly.
    let up = Idempotent::UPlus.mv();
    let um = Idempotent::UMinus.mv();
    println!("u+      = {up}");
    println!("u-      = {um}");
    println!("u+ u+   = {}", up * up);
    println!("u+ u-   = {}", up * um);
    println!("u+ + u- = {}", up + um);
    println!("e1 u+   = {}   (= u- e1)", G2::E1 * up);
    println!("max spectral identity error = {:e}", spectral_identity_gap());
    println!();

    // A full spacetime element f = g + s h splits into two plane elements,
    // and represents as a matrix over the hyperbolic scalars re + s im.
    let f = G12::G0 + G12::G1.scale(2.0) + G12::S.scale(0.5) + G12::G21.scale(-1.0);
    let (g, h) = split_even(f);
    println!("f = {f}");
    println!("  even part g = {g}");
    println!("  odd part  h = {h}  (f = g + s h)");
    let m = matrix_of_f(f);
    println!("[f].re = [{} {}; {} {}]", m.re.m11, m.re.m12, m.re.m21, m.re.m22);
    println!("[f].im = [{} {}; {} {}]", m.im.m11, m.im.m12, m.im.m21, m.im.m22);
}
