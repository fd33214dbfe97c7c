use shiftalg::endo::{present_by_quiver, quiver_isomorphic};
use shiftalg::fixtures::*;
use shiftalg::homological::{domdim, gldim, Dim};
use shiftalg::quiver::QuiverPresentation;
use shiftalg::repmod::{indecomposable_iso, Module};
use shiftalg::tilting::{check_d_auslander, compare_families, verify_tilting, FamilyRelation, ShiftContext, Verdict};

fn built(p: &QuiverPresentation) -> shiftalg::algebra::Algebra {
    p.build_algebra(30).unwrap()
}

#[test]
fn first_example_shift() {
    let mt = ex1();
    let g = mt.gamma();
    assert_eq!(gldim(g, 20), Dim::Finite(3));
    let ctx = ShiftContext::with_default_cap(g);
    assert_eq!(ctx.pi_vertices.len(), 3);
    let t1 = ctx.shifted_module(1).unwrap();
    let extra = t1.non_pi();
    assert_eq!(extra.len(), 2);
    let dims: Vec<Vec<usize>> = extra.iter().map(|m| m.dims().to_vec()).collect();
    println!("T1 extra summands dims {:?}, domdim {}", dims, ctx.domdim);
    let cert = verify_tilting(&t1.module(), 1).unwrap();
    assert_eq!(cert.verdict(), Verdict::True);
    assert!(cert.is_special_for(&ctx.pi).unwrap());
    let b1 = ctx.shifted_algebra(1).unwrap();
    assert!(quiver_isomorphic(b1.algebra(), &built(&ex1_b1_displayed())).unwrap());
    assert_eq!(gldim(b1.algebra(), 20), Dim::Finite(2));
    let p = present_by_quiver(b1.algebra());
    assert_eq!(p.arrows.len(), 5);
    assert_eq!(p.relations.len(), 1);
}

#[test]
fn second_example_family() {
    for n in 3..=4 {
        let mt = ex2(n);
        let g = mt.gamma();
        assert_eq!(check_d_auslander(g, n - 1, 20), Verdict::True);
        let ctx = ShiftContext::with_default_cap(g);
        for k in 1..n {
            let bk = ctx.coshifted_algebra(k).unwrap();
            assert!(
                quiver_isomorphic(bk.algebra(), &built(&ex2_coshifted_displayed(n, k))).unwrap(),
                "n={} k={}",
                n,
                k
            );
            assert_eq!(gldim(bk.algebra(), 20), Dim::Finite((n - k).max(k)));
            let bl = ctx.shifted_algebra(n - k).unwrap();
            assert!(quiver_isomorphic(bk.algebra(), bl.algebra()).unwrap());
        }
    }
}

#[test]
fn third_example_shapes() {
    let g = ex3();
    assert_eq!(domdim(&g, 20), Dim::Finite(1));
    let ctx = ShiftContext::with_default_cap(&g);
    assert!(indecomposable_iso(&Module::projective(&g, 0), &Module::injective(&g, 3)));
    let b1 = ctx.shifted_algebra(1).unwrap();
    assert!(quiver_isomorphic(b1.algebra(), &built(&ex3_b1_displayed())).unwrap());
    let c1 = ctx.coshifted_algebra(1).unwrap();
    assert!(quiver_isomorphic(c1.algebra(), &built(&ex3_b1_upper_displayed())).unwrap());
}

#[test]
fn fourth_example_iteration() {
    let g = ex4().algebra;
    let ctx = ShiftContext::with_default_cap(&g);
    assert_eq!(ctx.domdim, Dim::Finite(2));
    let b1 = ctx.shifted_algebra(1).unwrap();
    assert!(quiver_isomorphic(b1.algebra(), &built(&ex4_b1_displayed())).unwrap());
    let ctx1 = ShiftContext::with_default_cap(b1.algebra());
    assert_eq!(ctx1.domdim, Dim::Finite(1));
    let b11 = ctx1.shifted_algebra(1).unwrap();
    assert!(quiver_isomorphic(b11.algebra(), &built(&ex4_b11_displayed())).unwrap());
    let ctx2 = ShiftContext::with_default_cap(b11.algebra());
    assert_eq!(ctx2.domdim, Dim::Finite(1));
    let b111 = ctx2.shifted_algebra(1).unwrap();
    assert!(quiver_isomorphic(b111.algebra(), &built(&ex4_b111_displayed())).unwrap());
    assert_eq!(domdim(b111.algebra(), 20), Dim::Finite(0));
    let b2 = ctx.shifted_algebra(2).unwrap();
    assert!(!quiver_isomorphic(b11.algebra(), b2.algebra()).unwrap());
    let fam = compare_families(&ctx, 2).unwrap();
    assert_eq!(fam.relation, FamilyRelation::Equal);
    assert!(fam.reversed_pairing);
}
