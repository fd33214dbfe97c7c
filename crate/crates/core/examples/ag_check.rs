//! The d-Auslander–Gorenstein condition and the comparison of the shifted and
//! coshifted families it controls.

use shiftalg::fixtures::{a2, ex2, ex4};
use shiftalg::homological::DEFAULT_RESOLUTION_CAP as CAP;
use shiftalg::tilting::{check_d_ag, check_d_auslander, compare_families, consistent_d, ShiftContext};

fn main() -> shiftalg::Result<()> {
    let cases = [("auslander-a3", ex4().algebra), ("a3-rad2-gamma", ex2(3).gamma().clone()), ("a2", a2())];
    for (name, g) in cases {
        let d = consistent_d(&g, CAP).expect("not selfinjective");
        let ctx = ShiftContext::with_default_cap(&g);
        let top = ctx.max_k().unwrap_or(d + 1).min(d + 1);
        let fam = compare_families(&ctx, top)?;
        println!(
            "{name:<14} d = {d}  d-AG: {:?}  d-Auslander: {:?}  domdim {}  families up to k = {top}: {:?}{}",
            check_d_ag(&g, d, CAP),
            check_d_auslander(&g, d, CAP),
            ctx.domdim,
            fam.relation,
            if fam.reversed_pairing { " (T_k ≅ C^{d+1-k})" } else { "" }
        );
    }
    Ok(())
}
