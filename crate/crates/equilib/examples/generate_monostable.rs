//! Build a monostable polyhedron with 5-fold symmetry and write it out.
//!
//! `cargo run --release --example generate_monostable -- 5 0.25 out.off`

use equilib::cli_io::write_off;
use equilib::construct::{generate_monostable, GeneratorParams};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().map_or(5, |a| a.parse().expect("n"));
    let eps = args.get(1).map_or(0.25, |a| a.parse().expect("eps"));
    let r = match generate_monostable(&GeneratorParams::new(n, eps)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(3);
        }
    };
    for a in &r.log {
        println!("attempt {}: k={} s={} V={} census {:?} -> {}", a.attempt, a.k, a.s, a.vertices, a.counts, a.outcome);
    }
    let p = &r.polyhedron;
    println!("V={} F={} census {:?}", p.num_vertices(), p.num_faces(), r.report.counts());
    println!("hausdorff to the unit ball {:.4}, symmetry residual {:.1e}", r.hausdorff, r.symmetry_residual);
    if let Some(path) = args.get(2) {
        write_off(p, path).unwrap();
        println!("wrote {path}");
    }
}
