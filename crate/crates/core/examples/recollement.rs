//! The six functors of the recollement attached to an idempotent, on the
//! commutative square with `e` the source vertex and sink vertex.

use shiftalg::fixtures::ex3;
use shiftalg::recollement::Recollement;
use shiftalg::repmod::{hom_dim, Module};

fn main() -> shiftalg::Result<()> {
    let b = ex3();
    let rec = Recollement::new(&b, &[0, 3])?;
    println!("dim B = {}, dim eBe = {}, dim B/BeB = {}", b.dim(), rec.corner.dim(), rec.quotient_dim());
    let a = &rec.corner;
    for v in 0..a.num_vertices() {
        for (name, n) in [("S", Module::simple(a, v)), ("P", Module::projective(a, v)), ("I", Module::injective(a, v))]
        {
            let (l, r, c) = (rec.ell(&n)?, rec.r(&n)?, rec.c(&n)?);
            println!("{name}({v}): ℓ {:?}, r {:?}, c {:?}", l.dims(), r.dims(), c.dims());
        }
    }
    for v in 0..b.num_vertices() {
        let m = Module::projective(&b, v);
        let n = rec.restrict(&m)?;
        let t = rec.ttf(&m);
        println!(
            "P({v}): eM {:?}, q-part {:?}, p-part {:?}, in gen(Be) {}, in cogen(D eB) {}, Hom(ℓeM, M) = {}",
            n.dims(),
            rec.q(&m).dims(),
            rec.p(&m).dims(),
            t.x,
            t.z,
            hom_dim(&rec.ell(&n)?, &m)?
        );
    }
    if let Some(q) = rec.quotient_algebra() {
        let s = Module::simple(q, 0);
        println!("inflation of a simple of B/BeB: {:?}", rec.i(&s)?.dims());
    }
    Ok(())
}
