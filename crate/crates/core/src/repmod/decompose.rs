use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{char_poly, rational_roots, Matrix, Scalar, Span};
use crate::rng::{random_scalar, rng_for};

use super::hom::hom_space_unchecked;
use super::{direct_sum, HomSpace, Module, ModuleMap};

/// Random endomorphisms tried before a split is declared inconclusive.
const SPLIT_BUDGET: usize = 64;

/// An indecomposable summand with maps realizing it as a direct summand.
#[derive(Clone, Debug)]
pub struct Piece {
    pub module: Module,
    pub incl: ModuleMap,
    pub proj: ModuleMap,
}

/// `Σ incl ∘ proj = 1` and `projᵢ ∘ inclⱼ = δᵢⱼ`; `classes` groups pieces up
/// to isomorphism, in order of first appearance.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub pieces: Vec<Piece>,
    pub classes: Vec<Vec<usize>>,
}

impl Decomposition {
    /// One indecomposable per isomorphism class.
    pub fn representatives(&self) -> Vec<&Module> {
        self.classes.iter().map(|c| &self.pieces[c[0]].module).collect()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn is_basic(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }
}

fn nilpotent(f: &ModuleMap) -> bool {
    f.blocks.iter().all(|b| b.rows() == 0 || b.pow(b.rows()).is_zero())
}

fn singular(f: &ModuleMap) -> bool {
    !f.is_iso()
}

fn minus_scalar(f: &ModuleMap, lam: &Scalar) -> ModuleMap {
    ModuleMap {
        blocks: f
            .blocks
            .iter()
            .map(|b| {
                let mut b = b.clone();
                for i in 0..b.rows() {
                    let x = b.get(i, i).sub_ref(lam);
                    b.set(i, i, x);
                }
                b
            })
            .collect(),
    }
}

/// The scalar `λ` with `f − λ` nilpotent, when `f` is of that shape.
fn scalar_part(x: &Module, f: &ModuleMap) -> Option<Scalar> {
    let field = x.field();
    let n = x.total_dim();
    let ch = field.characteristic();
    if ch == 0 || ch as usize > n {
        let tr = f.blocks.iter().fold(field.zero(), |acc, b| acc.add_ref(&b.trace()));
        return Some(tr.mul_ref(&field.int(n as i64).inv()));
    }
    let b = f.blocks.iter().find(|b| b.rows() > 0)?;
    let roots = rational_roots(&char_poly(b), field);
    (roots.len() == 1).then(|| roots[0].clone())
}

fn eigen_candidates(f: &ModuleMap) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::new();
    for b in &f.blocks {
        if b.rows() == 0 {
            continue;
        }
        for r in rational_roots(&char_poly(b), b.field()) {
            if !out.contains(&r) {
                out.push(r);
            }
        }
    }
    out
}

/// Whether the span of the given maps generates a nilpotent multiplicative closure.
fn span_is_nilpotent(x: &Module, gens: &[ModuleMap]) -> bool {
    let f = x.field();
    let len = gens.first().map_or(0, |g| g.flatten().len());
    let mut power: Vec<ModuleMap> = gens.to_vec();
    for _ in 0..=x.total_dim() {
        let mut span = Span::new(f, len);
        let mut next = Vec::new();
        for g in gens {
            for p in &power {
                let q = g.compose(p);
                if span.insert(&q.flatten()) {
                    next.push(q);
                }
            }
        }
        if next.is_empty() {
            return true;
        }
        power = next;
    }
    false
}

/// An endomorphism that is neither nilpotent nor invertible, or `None` when
/// `End(x)` is certified local.
fn find_splitter(x: &Module, end: &HomSpace) -> Result<Option<ModuleMap>> {
    if end.dim() <= 1 {
        return Ok(None);
    }
    let usable = |g: &ModuleMap| singular(g) && !nilpotent(g);
    let mut radical = Vec::new();
    let mut all_local = true;
    for f in &end.basis {
        match scalar_part(x, f) {
            Some(lam) => {
                let g = minus_scalar(f, &lam);
                if nilpotent(&g) {
                    radical.push(g);
                    continue;
                }
                if usable(&g) {
                    return Ok(Some(g));
                }
            }
            None => {}
        }
        all_local = false;
        for mu in eigen_candidates(f) {
            let g = minus_scalar(f, &mu);
            if usable(&g) {
                return Ok(Some(g));
            }
        }
    }
    if all_local && span_is_nilpotent(x, &radical) {
        return Ok(None);
    }
    let field = x.field();
    let mut tag: Vec<usize> = x.dims().to_vec();
    tag.push(end.dim());
    let mut rng = rng_for(&tag);
    let support: Vec<usize> = (0..x.dims().len()).filter(|&v| x.dim(v) > 0).collect();
    for attempt in 0..SPLIT_BUDGET {
        let coeffs: Vec<Scalar> = (0..end.dim()).map(|_| random_scalar(&mut rng, field)).collect();
        let phi = end.combine(&coeffs);
        if attempt % 2 == 0 {
            for mu in eigen_candidates(&phi) {
                let g = minus_scalar(&phi, &mu);
                if usable(&g) {
                    return Ok(Some(g));
                }
            }
        } else {
            // Endomorphisms killing a chosen vector are singular.
            let v = support[rng.gen_range(0..support.len())];
            let d = x.dim(v);
            let mut u = vec![field.zero(); d];
            for c in u.iter_mut() {
                *c = random_scalar(&mut rng, field);
            }
            let images: Vec<Vec<Scalar>> = end.basis.iter().map(|f| f.blocks[v].mul_vec(&u)).collect();
            let sys = Matrix::from_columns(field, d, &images);
            let ker = sys.kernel();
            if ker.cols() == 0 {
                continue;
            }
            let mut c = vec![field.zero(); end.dim()];
            for j in 0..ker.cols() {
                let r = random_scalar(&mut rng, field);
                for (i, ci) in c.iter_mut().enumerate() {
                    *ci = ci.add_ref(&ker.get(i, j).mul_ref(&r));
                }
            }
            let g = end.combine(&c);
            if usable(&g) {
                return Ok(Some(g));
            }
        }
    }
    Err(Error::DecompositionInconclusive(format!(
        "no splitting endomorphism found for a module with dimension vector {:?} after {} attempts",
        x.dims(),
        SPLIT_BUDGET
    )))
}

/// Fitting decomposition `x = ker g^N ⊕ im g^N`.
fn fitting_split(x: &Module, g: &ModuleMap) -> [Piece; 2] {
    let n = x.dims().iter().copied().max().unwrap_or(0);
    let p = g.pow(n.max(1));
    let kers: Vec<Matrix> = p.blocks.iter().map(Matrix::kernel).collect();
    let ims: Vec<Matrix> = p.blocks.iter().map(Matrix::column_space).collect();
    let (km, ki) = x.submodule(&kers);
    let (im, ii) = x.submodule(&ims);
    let mut kp = Vec::new();
    let mut ip = Vec::new();
    for v in 0..x.dims().len() {
        let both = kers[v].hstack(&ims[v]);
        let inv = both.inverse().expect("Fitting decomposition is direct");
        let k = kers[v].cols();
        kp.push(inv.submatrix(0, k, 0, x.dim(v)));
        ip.push(inv.submatrix(k, x.dim(v), 0, x.dim(v)));
    }
    [
        Piece { module: km, incl: ki, proj: ModuleMap { blocks: kp } },
        Piece { module: im, incl: ii, proj: ModuleMap { blocks: ip } },
    ]
}

fn split_all(x: &Module) -> Result<Vec<Piece>> {
    let mut done = Vec::new();
    let mut todo = vec![Piece { module: x.clone(), incl: x.identity(), proj: x.identity() }];
    while let Some(piece) = todo.pop() {
        if piece.module.is_zero() {
            continue;
        }
        let end = hom_space_unchecked(&piece.module, &piece.module);
        match find_splitter(&piece.module, &end)? {
            None => done.push(piece),
            Some(g) => {
                for sub in fitting_split(&piece.module, &g) {
                    todo.push(Piece {
                        incl: piece.incl.compose(&sub.incl),
                        proj: sub.proj.compose(&piece.proj),
                        module: sub.module,
                    });
                }
            }
        }
    }
    done.reverse();
    Ok(done)
}

/// Whether two indecomposables are isomorphic: some basis element of the
/// Hom space must then be invertible, since the endomorphism ring is local.
fn indecomposables_iso(y: &Module, z: &Module) -> Option<ModuleMap> {
    if y.dims() != z.dims() {
        return None;
    }
    let h = hom_space_unchecked(y, z);
    h.basis.into_iter().find(ModuleMap::is_iso)
}

fn group(pieces: &[Piece]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'outer: for (i, p) in pieces.iter().enumerate() {
        for c in classes.iter_mut() {
            if indecomposables_iso(&pieces[c[0]].module, &p.module).is_some() {
                c.push(i);
                continue 'outer;
            }
        }
        classes.push(vec![i]);
    }
    classes
}

/// Splits a module into indecomposables by Fitting's lemma.
pub fn decompose(m: &Module) -> Result<Decomposition> {
    let pieces = split_all(m)?;
    let classes = group(&pieces);
    Ok(Decomposition { pieces, classes })
}

/// Decomposition of `⊕ parts`, splitting each part separately.
pub fn decompose_sum(parts: &[Module]) -> Result<(Module, Decomposition)> {
    let alg = parts.first().map(|m| m.algebra().clone()).ok_or_else(|| Error::Precondition("empty sum".into()))?;
    let (sum, incl, proj) = direct_sum(&alg, parts);
    let mut pieces = Vec::new();
    for (k, part) in parts.iter().enumerate() {
        for p in split_all(part)? {
            pieces.push(Piece { incl: incl[k].compose(&p.incl), proj: p.proj.compose(&proj[k]), module: p.module });
        }
    }
    let classes = group(&pieces);
    Ok((sum, Decomposition { pieces, classes }))
}

/// An isomorphism `m → n` if one exists.
pub fn find_isomorphism(m: &Module, n: &Module) -> Result<Option<ModuleMap>> {
    if m.algebra() != n.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(None);
    }
    let h = hom_space_unchecked(m, n);
    if h.dim() == 0 {
        return Ok(if m.is_zero() { Some(m.zero_map_to(n)) } else { None });
    }
    let field = m.field();
    let mut tag = m.dims().to_vec();
    tag.push(h.dim());
    let mut rng = rng_for(&tag);
    for _ in 0..4 {
        let c: Vec<Scalar> = (0..h.dim()).map(|_| random_scalar(&mut rng, field)).collect();
        let g = h.combine(&c);
        if g.is_iso() {
            return Ok(Some(g));
        }
    }
    // Deterministic route: match indecomposable summands.
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    let mut used = vec![false; dn.pieces.len()];
    let mut total = m.zero_map_to(n);
    for p in &dm.pieces {
        let mut found = false;
        for (j, q) in dn.pieces.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(iso) = indecomposables_iso(&p.module, &q.module) {
                used[j] = true;
                total = total.add(&q.incl.compose(&iso).compose(&p.proj));
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    Ok(Some(total))
}

pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    Ok(find_isomorphism(m, n)?.is_some())
}

/// Whether every indecomposable summand of `x` is isomorphic to one of `reps`.
pub fn in_add(x: &Module, reps: &[&Module]) -> Result<bool> {
    if x.is_zero() {
        return Ok(true);
    }
    let d = decompose(x)?;
    Ok(d.representatives().iter().all(|y| reps.iter().any(|r| indecomposables_iso(y, r).is_some())))
}

/// Whether `add m = add n`.
pub fn add_equal(m: &Module, n: &Module) -> Result<bool> {
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    let rm = dm.representatives();
    let rn = dn.representatives();
    let covers = |a: &[&Module], b: &[&Module]| a.iter().all(|y| b.iter().any(|z| indecomposables_iso(y, z).is_some()));
    Ok(covers(&rm, &rn) && covers(&rn, &rm))
}

/// The basic module with the same additive closure, and its decomposition.
pub fn make_basic(m: &Module) -> Result<(Module, Vec<Module>)> {
    let d = decompose(m)?;
    let reps: Vec<Module> = d.representatives().into_iter().cloned().collect();
    let sum = if reps.is_empty() { Module::zero(m.algebra()) } else { direct_sum(m.algebra(), &reps).0 };
    Ok((sum, reps))
}

/// Whether two indecomposable modules are isomorphic (no decomposition needed).
pub fn indecomposable_iso(y: &Module, z: &Module) -> bool {
    indecomposables_iso(y, z).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::quiver::{linear_quiver, QuiverPresentation};

    #[test]
    fn regular_module_splits_into_projectives() {
        let p = QuiverPresentation::parse(
            "vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow b 1 2\narrow a 2 4\narrow d 1 3\narrow c 3 4\nrelation a*b - c*d\n",
        )
        .unwrap();
        let a = p.build_algebra(30).unwrap();
        let d = decompose(&Module::regular(&a)).unwrap();
        assert_eq!(d.pieces.len(), 4);
        assert_eq!(d.multiplicities(), vec![1, 1, 1, 1]);
        let mut sum = Module::regular(&a).zero_map_to(&Module::regular(&a));
        for p in &d.pieces {
            sum = sum.add(&p.incl.compose(&p.proj));
        }
        assert_eq!(sum, Module::regular(&a).identity());
    }

    #[test]
    fn multiplicity_is_detected() {
        let a = linear_quiver(FieldSpec::Rationals, 3, None).build_algebra(30).unwrap();
        let p = Module::projective(&a, 0);
        let (pp, _, _) = direct_sum(&a, &[p.clone(), p.clone()]);
        let d = decompose(&pp).unwrap();
        assert_eq!(d.multiplicities(), vec![2]);
        assert!(!is_isomorphic(&p, &pp).unwrap());
        let (b, reps) = make_basic(&pp).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(is_isomorphic(&b, &p).unwrap());
    }

    #[test]
    fn twisted_sum_of_equal_summands() {
        // Y ⊕ Y in a basis mixing the two copies: End is a full matrix ring.
        let q = FieldSpec::Rationals;
        let a = linear_quiver(q, 2, None).build_algebra(30).unwrap();
        let m = Module::new(&a, vec![2, 2], vec![Matrix::from_ints(q, &[&[1, 1], &[-2, 3]])]).unwrap();
        let d = decompose(&m).unwrap();
        assert_eq!(d.multiplicities(), vec![2]);
        assert_eq!(d.pieces[0].module.dims(), &[1, 1]);
    }
}
