//! From an algebra `A` to `Γ = End_A(A ⊕ DA)^op` and back: `Γ` has dominant
//! dimension at least 2, its projective-injective summand recovers `A`, and the
//! precluster-tilting conditions on `E` match whether `Γ` is Auslander–Gorenstein.

use shiftalg::endo::{present_by_quiver, quiver_isomorphic};
use shiftalg::fixtures::{ex1, ex2};
use shiftalg::homological::domdim;
use shiftalg::tilting::{consistent_d, precluster_check};

fn main() -> shiftalg::Result<()> {
    for (name, mt) in [("linear A3", ex1()), ("A3 mod rad²", ex2(3)), ("A4 mod rad²", ex2(4))] {
        let g = mt.gamma();
        println!("{name}: dim A = {}, dim Γ = {}, domdim Γ = {}", mt.a.dim(), g.dim(), domdim(g, 20));
        print!("{}", present_by_quiver(g).to_text());
        let back = shiftalg::endo::end_algebra(&mt.e)?;
        println!("  End(E)^op ≅ Γ: {}", quiver_isomorphic(&back.algebra, g)?);
        if let Some(d) = consistent_d(g, 20).filter(|&d| d >= 1) {
            let rep = precluster_check(&mt.a, &mt.e, d, 20)?;
            println!("  {d}-precluster tilting: {:?} via {:?}, Ext {:?}", rep.verdict, rep.route, rep.ext);
        }
    }
    Ok(())
}
