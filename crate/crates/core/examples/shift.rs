//! Shifted modules and algebras of the Auslander–Gorenstein-type algebra built
//! from linear A3: the summands of `T_1`, a tilting certificate, and the quiver
//! of `B_1 = End(T_1)^op`.

use shiftalg::endo::present_by_quiver;
use shiftalg::fixtures::ex1;
use shiftalg::homological::gldim;
use shiftalg::tilting::{verify_tilting, ShiftContext};

fn main() -> shiftalg::Result<()> {
    let mt = ex1();
    let ctx = ShiftContext::with_default_cap(mt.gamma());
    println!("domdim Γ = {}", ctx.domdim);
    for k in 0..=ctx.max_k().unwrap_or(0) {
        let sa = ctx.shifted_algebra(k)?;
        let t = &sa.module;
        println!("\nk = {k}");
        for ((m, label), pi) in t.summands.iter().zip(&t.labels).zip(&t.pi_tags) {
            println!("  {:<3} {:?}{}", label, m.dims(), if *pi { "  (projective-injective)" } else { "" });
        }
        let cert = verify_tilting(&t.module(), k)?;
        println!("  tilting: {:?}, special for Π: {}", cert.verdict(), cert.is_special_for(&ctx.pi)?);
        println!("  dim B_{k} = {}, gldim B_{k} = {}", sa.algebra().dim(), gldim(sa.algebra(), ctx.cap));
        print!(
            "{}",
            present_by_quiver(sa.algebra()).to_text().lines().map(|l| format!("    {l}\n")).collect::<String>()
        );
    }
    Ok(())
}
