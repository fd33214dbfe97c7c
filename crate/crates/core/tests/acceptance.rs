//! The acceptance suite: ten criteria, each reported as one PASS/FAIL line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the report.

use std::error::Error as StdError;
use std::time::Instant;

use shiftalg::algebra::Algebra;
use shiftalg::endo::{present_by_quiver, quiver_isomorphic, vertex_matching};
use shiftalg::fixtures::*;
use shiftalg::homological::{
    domdim, ext_dim, gldim, in_cogen_k_vertices, in_gen_k_vertices, is_selfinjective, tau, tau_inv, Dim,
};
use shiftalg::homotopy::{build_model, cross_model_check, functor_formulas};
use shiftalg::linalg::Matrix;
use shiftalg::quiver::QuiverPresentation;
use shiftalg::recollement::{in_add_of, intext_pair, verify_intext_theorem, Recollement};
use shiftalg::repmod::{hom_dim, indecomposable_iso, is_isomorphic, Module};
use shiftalg::tilting::{
    check_d_auslander, compare_families, gldim_bound_report, indecomposables, subcat_member, FamilyRelation,
    ShiftContext, Side, Verdict,
};

type Check = Result<String, Box<dyn StdError>>;

const CAP: usize = 20;
const SIDES: [Side; 2] = [Side::Shifted, Side::Coshifted];

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+).into());
        }
    };
}

fn built(p: &QuiverPresentation) -> Algebra {
    p.build_algebra(30).unwrap()
}

/// The thin module with the given support: every arrow inside the support acts by 1.
fn thin_module(alg: &Algebra, support: &[usize]) -> Module {
    let f = alg.field();
    let dims: Vec<usize> = (0..alg.num_vertices()).map(|v| usize::from(support.contains(&v))).collect();
    let maps = (0..alg.num_arrows())
        .map(|a| {
            let (s, t) = (alg.arrow_source(a), alg.arrow_target(a));
            if dims[s] == 1 && dims[t] == 1 {
                Matrix::identity(f, 1)
            } else {
                Matrix::zeros(f, dims[t], dims[s])
            }
        })
        .collect();
    Module::new(alg, dims, maps).unwrap()
}

/// Valid shift degrees `0..=domdim`, truncated at `limit`.
fn valid_ks(ctx: &ShiftContext, limit: usize) -> Vec<usize> {
    match ctx.domdim {
        Dim::Finite(d) => (0..=d.min(limit)).collect(),
        Dim::Infinite => (0..=limit).collect(),
        _ => vec![0],
    }
}

/// Indecomposables drawn from projectives, injectives, simples, their
/// Auslander–Reiten translates and the shifted and coshifted summands.
fn universe(ctx: &ShiftContext) -> Vec<Module> {
    let g = &ctx.gamma;
    let mut pool: Vec<Module> = Vec::new();
    for v in 0..g.num_vertices() {
        let s = Module::simple(g, v);
        pool.extend([Module::projective(g, v), Module::injective(g, v), tau(&s), tau_inv(&s), s]);
    }
    for k in valid_ks(ctx, 2) {
        for side in SIDES {
            pool.extend(ctx.module(side, k).unwrap().summands);
        }
    }
    let mut out: Vec<Module> = Vec::new();
    for m in pool.iter().filter(|m| !m.is_zero()) {
        for x in indecomposables(m).unwrap() {
            if !out.iter().any(|y| indecomposable_iso(y, &x)) {
                out.push(x);
            }
        }
    }
    out
}

fn criterion1() -> Check {
    let mt = ex1();
    let g = mt.gamma();
    ensure!(gldim(g, CAP) == Dim::Finite(3), "gldim Γ = {}", gldim(g, CAP));
    let shown = built(&ex1_gamma_displayed());
    let perm = vertex_matching(g, &shown)?.ok_or("Γ does not match the displayed quiver")?;
    // Vertex `i` of the displayed quiver is vertex `back[i]` of Γ.
    let mut back = vec![0; perm.len()];
    for (v, &w) in perm.iter().enumerate() {
        back[w] = v;
    }
    let on = |sup: &[usize]| thin_module(g, &sup.iter().map(|&i| back[i]).collect::<Vec<_>>());
    let ctx = ShiftContext::new(g, CAP);
    let t1 = ctx.shifted_module(1)?;
    let expected_pi = [on(&[0, 1, 2]), on(&[1, 2, 3]), on(&[2, 3, 4])];
    let expected_rest = [on(&[2]), on(&[2, 3])];
    let pi: Vec<Module> = t1.summands.iter().zip(&t1.pi_tags).filter(|(_, &t)| t).map(|(m, _)| m.clone()).collect();
    let rest: Vec<Module> = t1.non_pi().into_iter().cloned().collect();
    let same =
        |a: &[Module], b: &[Module]| a.len() == b.len() && a.iter().all(|x| b.iter().any(|y| indecomposable_iso(x, y)));
    ensure!(same(&pi, &expected_pi), "Π differs from P1 ⊕ P2 ⊕ P3");
    ensure!(same(&rest, &expected_rest), "non-Π summands of T1 differ from S3 ⊕ (3→4)");
    let b1 = ctx.shifted_algebra(1)?;
    ensure!(quiver_isomorphic(b1.algebra(), &built(&ex1_b1_displayed()))?, "B1 quiver differs");
    let p = present_by_quiver(b1.algebra());
    ensure!(p.vertices.len() == 5 && p.arrows.len() == 5 && p.relations.len() == 1, "B1 presentation shape");
    ensure!(gldim(b1.algebra(), CAP) == Dim::Finite(2), "gldim B1 = {}", gldim(b1.algebra(), CAP));
    let rep = verify_intext_theorem(&ctx, 1, Side::Shifted)?;
    ensure!(rep.isomorphic, "c1(E) is not isomorphic to D T1");
    Ok(format!("dim Γ = {}, T1 = Π ⊕ 2 summands, dim B1 = {}, c1(E) ≅ D T1", g.dim(), b1.algebra().dim()))
}

fn criterion2() -> Check {
    let mut checked = 0;
    for n in 3..=5 {
        let mt = ex2(n);
        let g = mt.gamma();
        ensure!(check_d_auslander(g, n - 1, CAP) == Verdict::True, "n = {}: not {}-Auslander", n, n - 1);
        let ctx = ShiftContext::new(g, CAP);
        let fam = compare_families(&ctx, n)?;
        ensure!(fam.reversed_pairing, "n = {}: T_k and C^(n-k) are not paired", n);
        for k in 1..n {
            let bk = ctx.coshifted_algebra(k)?;
            ensure!(
                quiver_isomorphic(bk.algebra(), &built(&ex2_coshifted_displayed(n, k)))?,
                "n = {} k = {}: coshifted quiver differs",
                n,
                k
            );
            let gl = gldim(bk.algebra(), CAP);
            ensure!(gl == Dim::Finite((n - k).max(k)), "n = {} k = {}: gldim {}", n, k, gl);
            let bl = ctx.shifted_algebra(n - k)?;
            ensure!(quiver_isomorphic(bl.algebra(), bk.algebra())?, "n = {} k = {}: B_(n-k) differs", n, k);
            checked += 1;
        }
    }
    Ok(format!("{} pairs (n, k) checked, T_k ≅ C^(n-k) as modules", checked))
}

fn criterion3() -> Check {
    let g = ex3();
    ensure!(domdim(&g, CAP) == Dim::Finite(1), "domdim = {}", domdim(&g, CAP));
    let ctx = ShiftContext::new(&g, CAP);
    ensure!(verify_intext_theorem(&ctx, 1, Side::Shifted).is_err(), "the k = d check should be refused");
    let sa = ctx.shifted_algebra(1)?;
    let (rec, ce, dt) = intext_pair(&sa)?;
    ensure!(rec.corner.dim() == 1, "dim eBe = {}", rec.corner.dim());
    let v = rec.verts[0];
    let s = Module::simple(sa.algebra(), v);
    let c_simple = rec.c(&Module::simple(&rec.corner, 0))?;
    ensure!(is_isomorphic(&c_simple, &s)?, "c(simple) is not the simple at the tagged vertex");
    ensure!(in_add_of(&ce, std::slice::from_ref(&s))?, "c(E) is not in add S");
    ensure!(!in_add_of(&dt, std::slice::from_ref(&s))?, "D T1 lies in add S");
    Ok(format!("dim eBe = 1, c(E) dims {:?} in add S, D T1 dims {:?} not", ce.dims(), dt.dims()))
}

fn criterion4() -> Check {
    let g = ex4().algebra;
    let ctx = ShiftContext::new(&g, CAP);
    let b1 = ctx.shifted_algebra(1)?;
    let ctx1 = ShiftContext::new(b1.algebra(), CAP);
    let b11 = ctx1.shifted_algebra(1)?;
    let ctx2 = ShiftContext::new(b11.algebra(), CAP);
    let b111 = ctx2.shifted_algebra(1)?;
    let seq = [ctx1.domdim, ctx2.domdim, domdim(b111.algebra(), CAP)];
    ensure!(seq == [Dim::Finite(1), Dim::Finite(1), Dim::Finite(0)], "domdim sequence {:?}", seq);
    ensure!(quiver_isomorphic(b1.algebra(), &built(&ex4_b1_displayed()))?, "B1 quiver differs");
    ensure!(quiver_isomorphic(b11.algebra(), &built(&ex4_b11_displayed()))?, "B11 quiver differs");
    ensure!(quiver_isomorphic(b111.algebra(), &built(&ex4_b111_displayed()))?, "B111 quiver differs");
    let c1 = ctx.coshifted_algebra(1)?;
    ensure!(is_isomorphic(&b1.module.module(), &c1.module.module())?, "T1 ≇ C1");
    ensure!(quiver_isomorphic(b1.algebra(), c1.algebra())?, "B1 and its coshifted twin differ");
    let b2 = ctx.shifted_algebra(2)?;
    let c0 = ctx.coshifted_algebra(0)?;
    let c2 = ctx.coshifted_algebra(2)?;
    ensure!(is_isomorphic(&b2.module.module(), &Module::coregular(&g))?, "T2 ≇ DΓ");
    ensure!(is_isomorphic(&c2.module.module(), &Module::regular(&g))?, "C2 ≇ Γ");
    for (name, b) in [("B2", &b2), ("C0 side", &c0), ("C2 side", &c2)] {
        ensure!(quiver_isomorphic(b.algebra(), &g)?, "{} is not Γ", name);
    }
    ensure!(!quiver_isomorphic(b11.algebra(), b2.algebra())?, "B11 ≅ B2");
    Ok(format!(
        "domdims (1, 1, 0), dims B1 {} B11 {} B111 {}",
        b1.algebra().dim(),
        b11.algebra().dim(),
        b111.algebra().dim()
    ))
}

/// The first half holds; the second half is false for linear `A_2`, which is
/// 1-Auslander–Gorenstein, so its families coincide rather than being disjoint.
fn criterion5() -> Check {
    let g = ex4().algebra;
    let ctx = ShiftContext::new(&g, CAP);
    let fam = compare_families(&ctx, 2)?;
    ensure!(
        fam.relation == FamilyRelation::Equal && fam.reversed_pairing,
        "T_k vs C^(2-k) on the Auslander algebra: {:?}",
        fam
    );
    let a2 = a2();
    let c2 = ShiftContext::new(&a2, CAP);
    let fam2 = compare_families(&c2, 1)?;
    ensure!(
        fam2.relation == FamilyRelation::Disjoint,
        "T_k ≅ C^(2-k) holds, but linear A2 gives {:?} families (matches {:?}) instead of disjoint",
        fam2.relation,
        fam2.matches
    );
    Ok("T_k ≅ C^(2-k) and A2 families disjoint".into())
}

fn criterion6() -> Check {
    let mut count = 0;
    for (name, g) in all_algebras() {
        if gldim(&g, CAP).finite().is_none() {
            continue;
        }
        let ctx = ShiftContext::new(&g, CAP);
        for k in valid_ks(&ctx, 4) {
            for side in SIDES {
                let rep = gldim_bound_report(&ctx, side, k)?;
                ensure!(rep.holds == Verdict::True, "{} {:?} k = {}: {:?}", name, side, k, rep);
                count += 1;
            }
        }
    }
    Ok(format!("{} (algebra, side, k) bounds hold", count))
}

fn check_recollement(name: &str, rec: &Recollement, extra: &[Module]) -> Result<usize, Box<dyn StdError>> {
    let a = &rec.corner;
    let b = &rec.b;
    let mut ns: Vec<Module> = Vec::new();
    for v in 0..a.num_vertices() {
        ns.extend([Module::simple(a, v), Module::projective(a, v), Module::injective(a, v)]);
    }
    let mut ms: Vec<Module> = extra.to_vec();
    for v in 0..b.num_vertices() {
        ms.extend([Module::simple(b, v), Module::projective(b, v), Module::injective(b, v)]);
    }
    let images: Vec<(Module, Module, Module)> =
        ns.iter().map(|n| Ok((rec.ell(n)?, rec.r(n)?, rec.c(n)?))).collect::<shiftalg::error::Result<_>>()?;
    for (n, (l, r, c)) in ns.iter().zip(&images) {
        for (what, x) in [("ℓ", l), ("r", r), ("c", c)] {
            ensure!(is_isomorphic(&rec.restrict(x)?, n)?, "{}: e{}N ≇ N", name, what);
        }
        let t = rec.ttf(c);
        ensure!(t.consistent && t.x && t.z, "{}: cN not in Ker q ∩ Ker p", name);
        ensure!(rec.ttf(l).x && rec.ttf(r).z, "{}: ℓN ∉ gen or rN ∉ cogen", name);
        for m in &ms {
            let em = rec.restrict(m)?;
            ensure!(hom_dim(l, m)? == hom_dim(n, &em)?, "{}: Hom(ℓN, M) ≠ Hom(N, eM)", name);
            ensure!(hom_dim(m, r)? == hom_dim(&em, n)?, "{}: Hom(M, rN) ≠ Hom(eM, N)", name);
        }
    }
    for (i, n) in ns.iter().enumerate() {
        for (j, n2) in ns.iter().enumerate() {
            let h = hom_dim(n, n2)?;
            ensure!(hom_dim(&images[i].0, &images[j].0)? == h, "{}: ℓ not fully faithful", name);
            ensure!(hom_dim(&images[i].1, &images[j].1)? == h, "{}: r not fully faithful", name);
            ensure!(hom_dim(&images[i].2, &images[j].2)? == h, "{}: c not fully faithful", name);
        }
    }
    for m in &ms {
        let t = rec.ttf(m);
        ensure!(t.consistent, "{}: top/socle characterisation disagrees", name);
        if t.x && t.z && !t.y {
            let back = rec.c(&rec.restrict(m)?)?;
            ensure!(is_isomorphic(&back, m)?, "{}: M in Ker q ∩ Ker p but c(eM) ≇ M", name);
        }
    }
    Ok(ns.len() * ms.len())
}

fn criterion7() -> Check {
    let mut pairs = 0;
    let mut recs = 0;
    for (name, g) in all_algebras() {
        let ctx = ShiftContext::new(&g, CAP);
        if ctx.pi_vertices.is_empty() {
            continue;
        }
        let base = Recollement::new(&g, &ctx.pi_vertices)?.quotient_dim();
        for k in valid_ks(&ctx, 2) {
            for side in SIDES {
                let sa = ctx.algebra(side, k)?;
                let rec = Recollement::new(sa.algebra(), &sa.tagged())?;
                let tag = format!("{} {:?} k = {}", name, side, k);
                ensure!(
                    rec.quotient_dim() == base,
                    "{}: dim B/BeB = {} but dim Γ/ΓeΓ = {}",
                    tag,
                    rec.quotient_dim(),
                    base
                );
                let dt = shiftalg::recollement::dual_module(&sa)?;
                pairs += check_recollement(&tag, &rec, &[dt])?;
                recs += 1;
            }
        }
    }
    Ok(format!("{} recollements, {} (N, M) adjunction pairs", recs, pairs))
}

fn criterion8() -> Check {
    let mut reports = 0;
    let mut evaluations = 0;
    for (name, mt) in [("linear A3", ex1()), ("A3 mod rad²", ex2(3))] {
        let ctx = ShiftContext::new(mt.gamma(), CAP);
        let n = mt.a.num_vertices();
        let length = if name == "linear A3" { n } else { 2 };
        let mods: Vec<Module> = (0..n)
            .flat_map(|i| (i..n.min(i + length)).map(move |j| (i, j)))
            .map(|(i, j)| interval_module(&mt.a, i, j))
            .collect();
        for k in valid_ks(&ctx, 3) {
            for side in SIDES {
                let rep = cross_model_check(&mt.a, &mt.e, &ctx, side, k)?;
                ensure!(rep.passes(), "{} {:?} k = {}: {:?}", name, side, k, rep);
                reports += 1;
                if k == 0 {
                    continue;
                }
                let model = build_model(&mt.a, &mt.e, side, k)?;
                for m in &mods {
                    for s in 0..model.summands.len() {
                        let v = functor_formulas(&model, m, s)?;
                        ensure!(v.consistent(), "{} {:?} k = {} summand {}: {:?}", name, side, k, model.labels[s], v);
                        evaluations += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{} model comparisons, {} formula evaluations agree", reports, evaluations))
}

fn criterion9() -> Check {
    let mut checks = 0;
    for (name, g) in all_algebras() {
        let ctx = ShiftContext::new(&g, CAP);
        if is_selfinjective(&g) {
            for k in 0..=4 {
                let t = ctx.shifted_module(k)?.module();
                ensure!(is_isomorphic(&t, &Module::regular(&g))?, "{}: T_{} ≇ Γ", name, k);
                checks += 1;
            }
            continue;
        }
        let Some(d) = ctx.domdim.finite() else {
            return Err(format!("{}: non-selfinjective with infinite domdim", name).into());
        };
        let ts: Vec<Module> = (0..=d).map(|k| ctx.shifted_module(k).map(|m| m.module())).collect::<Result<_, _>>()?;
        for k in 0..=d {
            for l in k + 1..=d {
                ensure!(!is_isomorphic(&ts[k], &ts[l])?, "{}: T_{} ≅ T_{}", name, k, l);
                checks += 1;
            }
        }
    }
    Ok(format!("{} comparisons", checks))
}

/// The largest `k ≤ cap` with `m ∈ gen_k`, or `−1`.
fn gen_level(m: &Module, verts: &[usize], cap: usize, co: bool) -> i64 {
    let test = |k| if co { in_cogen_k_vertices(m, verts, k) } else { in_gen_k_vertices(m, verts, k) };
    (0..=cap).take_while(|&k| test(k)).last().map_or(-1, |k| k as i64)
}

fn criterion10() -> Check {
    let (mut ext_checks, mut image_checks, mut hom_checks, mut gen_checks) = (0, 0, 0, 0);
    for (name, g) in all_algebras() {
        let ctx = ShiftContext::new(&g, CAP);
        if ctx.pi_vertices.is_empty() {
            continue;
        }
        let verts = &ctx.pi_vertices;
        let uni = universe(&ctx);
        let rec = Recollement::new(&g, verts)?;
        // Comparison of Ext over Γ and over eΓe.
        let levels: Vec<(i64, i64)> =
            uni.iter().map(|x| (gen_level(x, verts, 3, false), gen_level(x, verts, 3, true))).collect();
        for (x, &(kx, _)) in uni.iter().zip(&levels) {
            for (y, &(_, ly)) in uni.iter().zip(&levels) {
                let ex = rec.restrict(x)?;
                let ey = rec.restrict(y)?;
                for j in 0..=(kx + ly).min(3) {
                    let j = j as usize;
                    ensure!(
                        ext_dim(x, y, j)? == ext_dim(&ex, &ey, j)?,
                        "{}: Ext^{} differs after restriction",
                        name,
                        j
                    );
                    ext_checks += 1;
                }
            }
        }
        // The image of gen_k(P) (and cogen^k(I)) under restriction.
        let a = &rec.corner;
        let big_e = rec.restrict(&Module::coregular(&g))?;
        let small_e = rec.restrict(&Module::regular(&g))?;
        let mut ns: Vec<Module> = Vec::new();
        for v in 0..a.num_vertices() {
            for m in
                [Module::simple(a, v), Module::projective(a, v), Module::injective(a, v), tau(&Module::simple(a, v))]
            {
                if !m.is_zero() {
                    ns.extend(indecomposables(&m)?);
                }
            }
        }
        for n in &ns {
            let (l, r) = (rec.ell(n)?, rec.r(n)?);
            for k in 1..=4 {
                let lhs = in_gen_k_vertices(&l, verts, k);
                let rhs = (1..k).map(|j| ext_dim(n, &big_e, j)).collect::<Result<Vec<_>, _>>()?.iter().all(|&e| e == 0);
                ensure!(lhs == rhs, "{}: gen_{} image membership disagrees", name, k);
                let lhs = in_cogen_k_vertices(&r, verts, k);
                let rhs =
                    (1..k).map(|j| ext_dim(&small_e, n, j)).collect::<Result<Vec<_>, _>>()?.iter().all(|&e| e == 0);
                ensure!(lhs == rhs, "{}: cogen^{} image membership disagrees", name, k);
                image_checks += 2;
            }
        }
        // Tilting subcategories of T_k.
        for k in valid_ks(&ctx, 3).into_iter().filter(|&k| k >= 1) {
            let sa = ctx.shifted_algebra(k)?;
            let t = sa.module.module();
            let members: Vec<&Module> = uni.iter().filter(|x| subcat_member(&t, x, 0, k).unwrap()).collect();
            for x in &uni {
                let lhs = members.iter().any(|m| std::ptr::eq(*m, x));
                ensure!(lhs == in_gen_k_vertices(x, verts, k - 1), "{} k = {}: T_0(T_k) ≠ gen_(k-1)(Π)", name, k);
                gen_checks += 1;
            }
            let images: Vec<Module> = members.iter().map(|x| sa.end.hom_functor(x)).collect::<Result<_, _>>()?;
            for (i, x) in members.iter().enumerate() {
                for (j, y) in members.iter().enumerate() {
                    ensure!(
                        hom_dim(x, y)? == hom_dim(&images[i], &images[j])?,
                        "{} k = {}: Hom(T_k, −) not fully faithful",
                        name,
                        k
                    );
                    hom_checks += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} Ext comparisons, {} image memberships, {} Hom comparisons, {} gen_(k-1)(Π) memberships",
        ext_checks, image_checks, hom_checks, gen_checks
    ))
}

/// Criteria whose failure is expected and explained in the decisions ledger.
const KNOWN_RED: &[usize] = &[5];

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("linear A5 mod length-3 paths: Γ, T1, B1 and c1(E)", criterion1),
        ("A_n mod rad² family, n = 3..5: Auslander, B^k quivers and gldims", criterion2),
        ("commutative square: shifting at k = d", criterion3),
        ("Auslander algebra of linear A3: iterated shifts", criterion4),
        ("shifted vs coshifted families", criterion5),
        ("gldim bounds for shifted algebras", criterion6),
        ("recollement axioms", criterion7),
        ("homotopy-category model vs module model", criterion8),
        ("selfinjective and non-selfinjective shift families", criterion9),
        ("restriction of Ext, tilting subcategories and Hom(T_k, −)", criterion10),
    ];
    let mut failed = Vec::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("criterion {:>2} PASS ({:.1}s) {}: {}", i + 1, secs, title, detail),
            Err(e) => {
                println!("criterion {:>2} FAIL ({:.1}s) {}: {}", i + 1, secs, title, e);
                failed.push(i + 1);
            }
        }
    }
    assert_eq!(failed, KNOWN_RED, "unexpected acceptance outcome");
}
