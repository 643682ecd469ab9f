//! Hyperbolic (split-complex) numbers `x + u y` with `u^2 = 1`: zero
//! divisors on the null cone, and the hyperbolic polar form off it.

use movingplanes::hyperbolic::Hyperbolic;

fn main() {
    let w = Hyperbolic::new(5.0, 3.0);
    let z = Hyperbolic::new(1.0, 2.0);
    println!("w = {w}");
    println!("z = {z}");
    println!("w z     = {}", w * z);
    println!("w conj  = {}", w.conj());
    println!("|w|^2   = w w~ = {}", w.modulus_sq());
    println!();

    // The null cone x = +-y consists of zero divisors.
    let p = Hyperbolic::new(1.0, 1.0);
    let q = Hyperbolic::new(1.0, -1.0);
    println!("(1 + u)(1 - u) = {}   -- zero divisors, no inverse", p * q);
    println!("is_null(1 + u) = {}", p.is_null());
    println!("polar(1 + u)   = {:?}", p.polar());
    println!();

    // Off the cone every number has a polar form rho e^{u phi} up to sign
    // and a possible factor of u.
    let polar = w.polar().unwrap();
    println!("polar(w): sign = {:?}, branch = {:?}", polar.sign, polar.axis);
    println!("          rho = {}, phi = {}", polar.rho, polar.phi);
    println!("reconstructed  = {}", polar.reconstruct());
    println!("e^(u phi)      = {}", Hyperbolic::exp_u(polar.phi));
    println!();

    // Moduli multiply, exactly like complex absolute values.
    println!("|w z|^2   = {}", (w * z).modulus_sq());
    println!("|w|^2|z|^2 = {}", w.modulus_sq() * z.modulus_sq());
    println!("hyperbolic distance w -> z = {}", w.distance(z));
}
