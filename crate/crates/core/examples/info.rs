//! Basic invariants of the fixture algebras: dimension, projective-injective
//! vertices, global and dominant dimension.

use shiftalg::fixtures::all_algebras;
use shiftalg::homological::{domdim, gldim, is_selfinjective, projective_injective_vertices, DEFAULT_RESOLUTION_CAP};

fn main() {
    println!("{:<24} {:>4} {:>8} {:>8} {:>6}  projective-injective", "algebra", "dim", "gldim", "domdim", "selfinj");
    for (name, alg) in all_algebras() {
        let pi: Vec<&str> = projective_injective_vertices(&alg).into_iter().map(|v| alg.vertex_label(v)).collect();
        println!(
            "{:<24} {:>4} {:>8} {:>8} {:>6}  {}",
            name,
            alg.dim(),
            gldim(&alg, DEFAULT_RESOLUTION_CAP).to_string(),
            domdim(&alg, DEFAULT_RESOLUTION_CAP).to_string(),
            is_selfinjective(&alg),
            pi.join(" ")
        );
    }
}
