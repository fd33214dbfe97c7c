//! Certificates for the tilting conditions: `T_k` over the Auslander algebra of
//! linear `A_3` is `k`-tilting, and a module that is too small is rejected.

use shiftalg::fixtures::ex4;
use shiftalg::repmod::Module;
use shiftalg::tilting::{verify_cotilting, verify_tilting, ShiftContext};

fn main() -> shiftalg::Result<()> {
    let g = ex4().algebra;
    let ctx = ShiftContext::with_default_cap(&g);
    for k in 0..=2 {
        let t = ctx.shifted_module(k)?.module();
        let cert = verify_tilting(&t, k)?;
        let chain: Vec<Vec<usize>> = cert.chain.iter().map(|m| m.dims().to_vec()).collect();
        println!(
            "T_{k}: pdim {}, Ext {:?}, coresolution of Γ {:?}: {:?}",
            cert.dimension,
            cert.ext,
            chain,
            cert.verdict()
        );
        let c = ctx.coshifted_module(k)?.module();
        println!("C^{k}: cotilting {:?}", verify_cotilting(&c, k)?.verdict());
    }
    let pi = ctx.pi.clone();
    let cert = verify_tilting(&pi, 1)?;
    println!("Π alone: {:?} ({})", cert.verdict(), cert.failure.unwrap_or_default());
    let s = Module::simple(&g, 0);
    println!("a simple: {:?}", verify_tilting(&s, 1)?.verdict());
    Ok(())
}
