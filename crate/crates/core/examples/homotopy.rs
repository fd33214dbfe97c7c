//! The complexes `E^k` and `E_k` over `A` whose endomorphism algebras in the
//! homotopy category recover the coshifted and shifted algebras.

use shiftalg::fixtures::ex1;
use shiftalg::homotopy::{build_upper, cross_model_check, end_algebra_kb, functor_formulas};
use shiftalg::tilting::{ShiftContext, Side};

fn main() -> shiftalg::Result<()> {
    let mt = ex1();
    let ctx = ShiftContext::with_default_cap(mt.gamma());
    let up = build_upper(&mt.a, &mt.e, 1)?;
    println!("E^1 has {} summand complexes, dim End = {}", up.summands.len(), end_algebra_kb(&up)?.dim());
    for (s, label) in up.labels.iter().enumerate() {
        let v = functor_formulas(&up, &mt.e, s)?;
        println!("  {label:<6} ℓ {:?}  r {:?}  c {:?}", v.ell, v.r, v.c);
    }
    for side in [Side::Shifted, Side::Coshifted] {
        for k in 0..=2 {
            let rep = cross_model_check(&mt.a, &mt.e, &ctx, side, k)?;
            println!("{side:?} k = {k}: dims {} / {}, agrees: {}", rep.dim_homotopy, rep.dim_module, rep.passes());
        }
    }
    Ok(())
}
