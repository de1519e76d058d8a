//! Equilibrium census of the Platonic solids about their centres.

use equilib::equilibria::{classify_equilibria, poincare_hopf_check};
use equilib::geom_core::mass_properties;
use equilib::geom_core::solids::platonic;

fn main() {
    println!("{:<14} {:>3} {:>3} {:>3}  S-H+U", "solid", "S", "H", "U");
    for (name, p) in platonic() {
        let c = mass_properties(&p).centroid;
        let r = classify_equilibria(&p, &c).unwrap();
        assert!(poincare_hopf_check(&r).unwrap());
        println!("{name:<14} {:>3} {:>3} {:>3}  {}", r.s, r.h, r.u, r.s as i64 - r.h as i64 + r.u as i64);
    }
}
