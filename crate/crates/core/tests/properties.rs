use std::sync::LazyLock;

use proptest::prelude::*;

use shiftalg::algebra::Algebra;
use shiftalg::fixtures::{dual_numbers, ex3, ex4, linear, selfinjective_nakayama};
use shiftalg::homological::{ext_dim, syzygy};
use shiftalg::homotopy::{build_model, hom_upto_homotopy};
use shiftalg::linalg::{FieldSpec, Matrix, Scalar};
use shiftalg::recollement::Recollement;
use shiftalg::repmod::{decompose, direct_sum_of, hom_dim, hom_space, is_isomorphic, Module};
use shiftalg::tilting::Side;

// Modules compare their algebras by identity, so every strategy shares one copy.
static ALGEBRAS: LazyLock<Vec<Algebra>> = LazyLock::new(|| {
    vec![linear(3, None), linear(5, Some(3)), ex3(), selfinjective_nakayama(), dual_numbers(), ex4().algebra]
});

fn algebras() -> &'static [Algebra] {
    &ALGEBRAS
}

fn field_of(p: u64) -> FieldSpec {
    if p == 0 {
        FieldSpec::Rationals
    } else {
        FieldSpec::prime(p).unwrap()
    }
}

fn matrix(f: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
    let data: Vec<Vec<Scalar>> =
        (0..rows).map(|r| (0..cols).map(|c| f.int(entries[(r * cols + c) % entries.len()])).collect()).collect();
    Matrix::from_rows(f, data, cols)
}

/// The cokernel of a map `⊕ P(src) → ⊕ P(tgt)` with the given coefficients.
fn presented(alg: &Algebra, tgt: &[usize], src: &[usize], coeffs: &[i64]) -> Module {
    let f = alg.field();
    let p0 = direct_sum_of(alg, &tgt.iter().map(|&v| Module::projective(alg, v)).collect::<Vec<_>>());
    if src.is_empty() {
        return p0;
    }
    let p1 = direct_sum_of(alg, &src.iter().map(|&v| Module::projective(alg, v)).collect::<Vec<_>>());
    let h = hom_space(&p1, &p0).unwrap();
    let c: Vec<Scalar> = (0..h.dim()).map(|i| f.int(coeffs[i % coeffs.len()])).collect();
    h.combine(&c).cokernel(&p0).0
}

fn module_strategy() -> impl Strategy<Value = (usize, Module)> {
    (
        0..algebras().len(),
        prop::collection::vec(0usize..8, 1..3),
        prop::collection::vec(0usize..8, 0..3),
        prop::collection::vec(-2i64..3, 1..12),
    )
        .prop_map(|(i, tgt, src, coeffs)| {
            let alg = &algebras()[i];
            let n = alg.num_vertices();
            let tgt: Vec<usize> = tgt.iter().map(|v| v % n).collect();
            let src: Vec<usize> = src.iter().map(|v| v % n).collect();
            (i, presented(alg, &tgt, &src, &coeffs))
        })
}

fn pair_strategy() -> impl Strategy<Value = (Module, Module)> {
    (
        module_strategy(),
        prop::collection::vec(0usize..8, 1..3),
        prop::collection::vec(0usize..8, 0..2),
        prop::collection::vec(-2i64..3, 1..8),
    )
        .prop_map(|((i, m), tgt, src, coeffs)| {
            let alg = &algebras()[i];
            let n = alg.num_vertices();
            let tgt: Vec<usize> = tgt.iter().map(|v| v % n).collect();
            let src: Vec<usize> = src.iter().map(|v| v % n).collect();
            (m, presented(alg, &tgt, &src, &coeffs))
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn rank_nullity(p in prop::sample::select(vec![0u64, 2, 7]), rows in 1usize..6, cols in 1usize..6,
                    entries in prop::collection::vec(-3i64..4, 1..36)) {
        let f = field_of(p);
        let m = matrix(f, rows, cols, &entries);
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.cols(), cols);
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(inv.mul(&m), Matrix::identity(f, cols));
        }
    }

    #[test]
    fn duality_is_an_involution((_, m) in module_strategy()) {
        prop_assert!(is_isomorphic(&m.dual().dual(), &m).unwrap());
    }

    #[test]
    fn duality_reverses_hom_and_ext((m, n) in pair_strategy()) {
        prop_assert_eq!(hom_dim(&m, &n).unwrap(), hom_dim(&n.dual(), &m.dual()).unwrap());
        prop_assert_eq!(ext_dim(&m, &n, 1).unwrap(), ext_dim(&n.dual(), &m.dual(), 1).unwrap());
    }

    #[test]
    fn dimension_shift((m, n) in pair_strategy(), i in 1usize..3) {
        prop_assert_eq!(ext_dim(&m, &n, i + 1).unwrap(), ext_dim(&syzygy(&m, 1), &n, i).unwrap());
    }

    #[test]
    fn decomposition_accounts_for_every_dimension((_, m) in module_strategy()) {
        let d = decompose(&m).unwrap();
        let mut total = vec![0; m.dims().len()];
        for (rep, mult) in d.representatives().into_iter().zip(d.multiplicities()) {
            prop_assert!(!rep.is_zero());
            for (t, x) in total.iter_mut().zip(rep.dims()) {
                *t += mult * x;
            }
        }
        prop_assert_eq!(total, m.dims().to_vec());
    }

    /// Over a path algebra without relations, `dim Hom − dim Ext¹` is the Euler form.
    #[test]
    fn euler_form_on_hereditary(dims in prop::collection::vec((0usize..3, 0usize..3, 0usize..3), 2),
                                entries in prop::collection::vec(-2i64..3, 1..20)) {
        let a = linear(3, None);
        let f = a.field();
        let build = |(x, y, z): (usize, usize, usize), shift: usize| {
            let d = [x, y, z];
            let maps = (0..a.num_arrows()).map(|k| {
                let (s, t) = (a.arrow_source(k), a.arrow_target(k));
                let e: Vec<i64> = entries.iter().cycle().skip(shift + k).take(entries.len()).cloned().collect();
                matrix(f, d[t], d[s], &e)
            }).collect();
            Module::new(&a, d.to_vec(), maps).unwrap()
        };
        let m = build(dims[0], 0);
        let n = build(dims[1], 3);
        let mut euler: i64 = (0..3).map(|v| (m.dim(v) * n.dim(v)) as i64).sum();
        for k in 0..a.num_arrows() {
            euler -= (m.dim(a.arrow_source(k)) * n.dim(a.arrow_target(k))) as i64;
        }
        let lhs = hom_dim(&m, &n).unwrap() as i64 - ext_dim(&m, &n, 1).unwrap() as i64;
        prop_assert_eq!(lhs, euler);
        prop_assert_eq!(ext_dim(&m, &n, 2).unwrap(), 0);
    }

    /// The unit `N → eℓN` is an isomorphism for every corner module.
    #[test]
    fn induction_restricts_back((i, m) in module_strategy(), pick in 0usize..8) {
        let alg = &algebras()[i];
        let v = pick % alg.num_vertices();
        let rec = Recollement::new(alg, &[v]).unwrap();
        let n = rec.restrict(&m).unwrap();
        prop_assert!(is_isomorphic(&rec.restrict(&rec.ell(&n).unwrap()).unwrap(), &n).unwrap());
        prop_assert!(is_isomorphic(&rec.restrict(&rec.r(&n).unwrap()).unwrap(), &n).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    /// Chain maps built from homotopy-class coordinates commute with the
    /// differentials and recover their coordinates.
    #[test]
    fn homotopy_classes_round_trip(side in prop::sample::select(vec![Side::Shifted, Side::Coshifted]),
                                   k in 1usize..3, coeffs in prop::collection::vec(-2i64..3, 1..10)) {
        let mt = shiftalg::fixtures::ex1();
        let model = build_model(&mt.a, &mt.e, side, k).unwrap();
        let f = mt.a.field();
        for x in &model.summands {
            for y in &model.summands {
                let h = hom_upto_homotopy(x, y).unwrap();
                let c: Vec<Scalar> = (0..h.dim()).map(|i| f.int(coeffs[i % coeffs.len()])).collect();
                let g = h.class_map(&c);
                prop_assert!(g.commutes(x, y));
                prop_assert_eq!(h.class_coords(&g), Some(c.clone()));
                prop_assert_eq!(h.is_null_homotopic(&g), Some(c.iter().all(Scalar::is_zero)));
            }
        }
    }
}
