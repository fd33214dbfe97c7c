//! The idempotent recollement of a shifted algebra: `D T_k` is the intermediate
//! extension of its restriction when `0 < k < domdim`, and can fail to be at
//! `k = domdim`.

use shiftalg::fixtures::{ex1, ex3};
use shiftalg::recollement::{intext_pair, verify_intext_theorem};
use shiftalg::repmod::is_isomorphic;
use shiftalg::tilting::{ShiftContext, Side};

fn main() -> shiftalg::Result<()> {
    let ctx = ShiftContext::with_default_cap(ex1().gamma());
    for side in [Side::Shifted, Side::Coshifted] {
        let rep = verify_intext_theorem(&ctx, 1, side)?;
        println!("{side:?} k = 1: c(E) ≅ D T: {}, gen: {}, cogen: {}", rep.isomorphic, rep.in_gen, rep.in_cogen);
    }

    let sq = ShiftContext::with_default_cap(&ex3());
    match verify_intext_theorem(&sq, 1, Side::Shifted) {
        Err(e) => println!("square, k = 1: {e}"),
        Ok(_) => unreachable!("domdim of the square is 1"),
    }
    let sa = sq.shifted_algebra(1)?;
    let (rec, ce, dt) = intext_pair(&sa)?;
    let ttf = rec.ttf(&dt);
    println!(
        "square: dim eBe = {}, c(E) dims {:?}, D T dims {:?}, isomorphic: {}",
        rec.corner.dim(),
        ce.dims(),
        dt.dims(),
        is_isomorphic(&ce, &dt)?
    );
    println!("square: D T has top in e: {}, socle in e: {}", ttf.x, ttf.z);
    Ok(())
}
