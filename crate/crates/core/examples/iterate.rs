//! Repeated shifting starting from the Auslander algebra of linear A3, until the
//! dominant dimension drops to zero.

use shiftalg::endo::{arrow_counts, quiver_isomorphic};
use shiftalg::fixtures::ex4;
use shiftalg::tilting::ShiftContext;

fn main() -> shiftalg::Result<()> {
    let gamma = ex4().algebra;
    let mut cur = gamma.clone();
    let mut chain = Vec::new();
    loop {
        let ctx = ShiftContext::with_default_cap(&cur);
        println!(
            "dim {:>2}  domdim {}  arrows {}",
            cur.dim(),
            ctx.domdim,
            arrow_counts(&cur).iter().flatten().sum::<usize>()
        );
        if !ctx.domdim.at_least(1) {
            break;
        }
        cur = ctx.shifted_algebra(1)?.algebra().clone();
        chain.push(cur.clone());
    }
    let b2 = ShiftContext::with_default_cap(&gamma).shifted_algebra(2)?;
    println!("B_(1,1) ≅ B_2: {}", quiver_isomorphic(&chain[1], b2.algebra())?);
    Ok(())
}
