//! Endomorphism algebras `End(M)^op`, the functors `Hom(M, −)` and
//! `D Hom(−, M)` into their module categories, quiver presentations of
//! path-basis algebras, and a structural isomorphism test.
//!
//! Conventions: vertex `i` of `B = End(M)^op` is the summand `M_i`; a map
//! `f: M_i → M_j` is a basis element of `B` from `j` to `i`, and the product in
//! `B` is `f ∗ g = g ∘ f`. Hence `B e_i = Hom(M, M_i)`.

use std::collections::BTreeMap;

use crate::algebra::{radical_powers, AbstractAlgebra, Algebra, Rebased, SparseVec};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Span};
use crate::quiver::{QuiverPresentation, Relation};
use crate::repmod::{hom_space, indecomposable_iso, make_basic, HomSpace, Module, ModuleMap};

/// `End(M)^op` for `M = ⊕ summands` (pairwise non-isomorphic indecomposables).
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: Algebra,
    pub summands: Vec<Module>,
    /// `homs[i][j]` is a basis of `Hom(M_i, M_j)`; the identity comes first when `i = j`.
    homs: Vec<Vec<Vec<ModuleMap>>>,
    /// Abstract basis index of `homs[i][j][0]`.
    offset: Vec<Vec<usize>>,
    /// `(i, j, k)` for each abstract basis element.
    elems: Vec<(usize, usize, usize)>,
    rebased: Rebased,
}

/// `first` followed by the members of `rest` independent of what precedes them.
fn basis_starting_with(first: ModuleMap, rest: &[ModuleMap]) -> Vec<ModuleMap> {
    let v = first.flatten();
    let Some(field) = v.first().map(Scalar::field) else {
        return vec![first];
    };
    let mut span = Span::new(field, v.len());
    let mut out = Vec::new();
    for g in std::iter::once(first).chain(rest.iter().cloned()) {
        if span.insert(&g.flatten()) {
            out.push(g);
        }
    }
    out
}

impl EndAlgebra {
    /// Builds `End(⊕ summands)^op` with the given vertex labels.
    pub fn new(summands: Vec<Module>, labels: Vec<String>) -> Result<EndAlgebra> {
        let n = summands.len();
        if n == 0 {
            return Err(Error::Precondition("endomorphism algebra of the zero module".into()));
        }
        if labels.len() != n {
            return Err(Error::DimensionMismatch("one label per summand".into()));
        }
        for i in 0..n {
            if summands[i].is_zero() {
                return Err(Error::Precondition("zero summand".into()));
            }
            for j in 0..i {
                if indecomposable_iso(&summands[i], &summands[j]) {
                    return Err(Error::Precondition(format!("summands {} and {} are isomorphic", j, i)));
                }
            }
        }
        let field = summands[0].field();
        let mut homs = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let h = hom_space(&summands[i], &summands[j])?;
                homs[i][j] = if i == j { basis_starting_with(summands[i].identity(), &h.basis) } else { h.basis };
            }
        }
        let mut offset = vec![vec![0; n]; n];
        let mut elems = Vec::new();
        let mut ends = Vec::new();
        for i in 0..n {
            for j in 0..n {
                offset[i][j] = elems.len();
                for k in 0..homs[i][j].len() {
                    elems.push((i, j, k));
                    ends.push((j, i));
                }
            }
        }
        // Ambient length of a flattened map M_i → M_j is Σ_v dim M_j(v) · dim M_i(v), even when Hom is zero.
        let flat_len = |i: usize, j: usize| -> usize {
            summands[i].dims().iter().zip(summands[j].dims()).map(|(a, b)| a * b).sum()
        };
        let spans: Vec<Vec<Span>> = homs
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, b)| {
                        Span::of(field, flat_len(i, j), &b.iter().map(ModuleMap::flatten).collect::<Vec<_>>())
                    })
                    .collect()
            })
            .collect();
        let dim = elems.len();
        let mut mult: Vec<Vec<SparseVec>> = vec![vec![Vec::new(); dim]; dim];
        for (x, &(i, j, k)) in elems.iter().enumerate() {
            for (y, &(i2, j2, k2)) in elems.iter().enumerate() {
                if i2 != j {
                    continue;
                }
                // x ∗ y = y ∘ x : M_i → M_{j2}
                let prod = homs[i2][j2][k2].compose(&homs[i][j][k]);
                let c = spans[i][j2].coords(&prod.flatten()).expect("composite of homomorphisms");
                mult[x][y] = c
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (offset[i][j2] + m, c))
                    .collect();
            }
        }
        let abs = AbstractAlgebra {
            field,
            labels,
            ends,
            idempotents: (0..n).map(|i| offset[i][i]).collect(),
            mult,
            arrow_prefix: "x".into(),
        };
        let rebased = abs.rebase()?;
        Ok(EndAlgebra { algebra: rebased.algebra.clone(), summands, homs, offset, elems, rebased })
    }

    pub fn num_vertices(&self) -> usize {
        self.summands.len()
    }

    /// Vertex whose summand is isomorphic to the indecomposable `x`.
    pub fn vertex_of(&self, x: &Module) -> Option<usize> {
        self.summands.iter().position(|m| indecomposable_iso(m, x))
    }

    /// The map `M_t → M_s` represented by an element of `e_t B e_s`.
    pub fn map_of(&self, x: &[Scalar], s: usize, t: usize) -> ModuleMap {
        let mut out = self.summands[t].zero_map_to(&self.summands[s]);
        for &p in self.algebra.basis_between(s, t) {
            if x[p].is_zero() {
                continue;
            }
            for (e, c) in self.rebased.to_abstract[p].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (i, j, k) = self.elems[e];
                debug_assert_eq!((i, j), (t, s));
                out = out.add(&self.homs[i][j][k].scale(&x[p].mul_ref(c)));
            }
        }
        out
    }

    /// The map represented by path basis element `p`.
    pub fn basis_map(&self, p: usize) -> ModuleMap {
        let (s, t) = (self.algebra.basis_source(p), self.algebra.basis_target(p));
        self.map_of(&self.algebra.unit_vec(p), s, t)
    }

    /// The element of `e_t B e_s` represented by `f: M_t → M_s`.
    pub fn elem_of(&self, f: &ModuleMap, s: usize, t: usize) -> Option<Vec<Scalar>> {
        let field = self.algebra.field();
        let basis = &self.homs[t][s];
        let len = f.flatten().len();
        let span = Span::of(field, len, &basis.iter().map(ModuleMap::flatten).collect::<Vec<_>>());
        let c = span.coords(&f.flatten())?;
        let mut v = vec![field.zero(); self.elems.len()];
        for (k, x) in c.into_iter().enumerate() {
            v[self.offset[t][s] + k] = x;
        }
        self.rebased.from_abstract(&v)
    }

    fn arrow_maps(&self) -> Vec<ModuleMap> {
        (0..self.algebra.num_arrows()).map(|a| self.basis_map(self.algebra.arrow_basis(a))).collect()
    }

    /// `Hom(M, X)` as a `B`-module: arrow maps act by pre-composition.
    pub fn hom_functor(&self, x: &Module) -> Result<Module> {
        let spaces: Vec<HomSpace> = self.summands.iter().map(|m| hom_space(m, x)).collect::<Result<_>>()?;
        let field = self.algebra.field();
        let dims: Vec<usize> = spaces.iter().map(HomSpace::dim).collect();
        let maps = self.arrow_maps();
        let mats = (0..self.algebra.num_arrows())
            .map(|a| {
                let (s, t) = (self.algebra.arrow_source(a), self.algebra.arrow_target(a));
                let cols: Vec<Vec<Scalar>> = spaces[s]
                    .basis
                    .iter()
                    .map(|g| spaces[t].coords(&g.compose(&maps[a])).expect("homomorphism"))
                    .collect();
                Matrix::from_columns(field, dims[t], &cols)
            })
            .collect();
        Module::new(&self.algebra, dims, mats)
    }

    /// `D Hom(X, M)` as a `B`-module: the dual of post-composition.
    pub fn dual_hom_functor(&self, x: &Module) -> Result<Module> {
        let spaces: Vec<HomSpace> = self.summands.iter().map(|m| hom_space(x, m)).collect::<Result<_>>()?;
        let field = self.algebra.field();
        let dims: Vec<usize> = spaces.iter().map(HomSpace::dim).collect();
        let maps = self.arrow_maps();
        let mats = (0..self.algebra.num_arrows())
            .map(|a| {
                let (s, t) = (self.algebra.arrow_source(a), self.algebra.arrow_target(a));
                // post-composition Hom(X, M_t) → Hom(X, M_s)
                let cols: Vec<Vec<Scalar>> = spaces[t]
                    .basis
                    .iter()
                    .map(|g| spaces[s].coords(&maps[a].compose(g)).expect("homomorphism"))
                    .collect();
                Matrix::from_columns(field, dims[s], &cols).transpose()
            })
            .collect();
        Module::new(&self.algebra, dims, mats)
    }
}

/// `End(M)^op` of the basic module with the same additive closure as `m`.
pub fn end_algebra(m: &Module) -> Result<EndAlgebra> {
    let (_, reps) = make_basic(m)?;
    let labels = (1..=reps.len()).map(|i| i.to_string()).collect();
    EndAlgebra::new(reps, labels)
}

/// All words of length `2..=max_len` in the arrows of `alg`, grouped by `(source, target)`.
fn long_words(alg: &Algebra, max_len: usize) -> BTreeMap<(usize, usize), Vec<Vec<usize>>> {
    let mut out: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
    let mut layer: Vec<(usize, usize, Vec<usize>)> =
        (0..alg.num_arrows()).map(|a| (alg.arrow_source(a), alg.arrow_target(a), vec![a])).collect();
    for _ in 2..=max_len {
        let mut next = Vec::new();
        for (s, m, w) in &layer {
            for a in 0..alg.num_arrows() {
                if alg.arrow_source(a) != *m {
                    continue;
                }
                let mut word = vec![a];
                word.extend(w.iter().copied());
                let t = alg.arrow_target(a);
                out.entry((*s, t)).or_default().push(word.clone());
                next.push((*s, t, word));
            }
        }
        layer = next;
    }
    out
}

/// A presentation `KQ/I` of a path-basis algebra with a minimal generating
/// set of `I`: the kernel of path evaluation modulo `rad·I + I·rad`.
pub fn present_by_quiver(alg: &Algebra) -> QuiverPresentation {
    let field = alg.field();
    let mut p = QuiverPresentation::new(field);
    p.vertices = alg.vertex_labels().to_vec();
    p.arrows = (0..alg.num_arrows())
        .map(|a| crate::algebra::ArrowInfo {
            name: alg.arrow_name(a).to_string(),
            source: alg.arrow_source(a),
            target: alg.arrow_target(a),
        })
        .collect();
    let max_len = alg.loewy_length().max(2);
    let words = long_words(alg, max_len);
    let pos: BTreeMap<&Vec<usize>, usize> =
        words.values().flat_map(|ws| ws.iter().enumerate().map(|(i, w)| (w, i))).collect();
    let mut kernels: BTreeMap<(usize, usize), Vec<Vec<Scalar>>> = BTreeMap::new();
    for (&key, ws) in &words {
        let cols: Vec<Vec<Scalar>> = ws.iter().map(|w| alg.word_elem(w)).collect();
        let eval = Matrix::from_columns(field, alg.dim(), &cols);
        kernels.insert(key, eval.kernel().columns());
    }
    // rad·I + I·rad, truncated at max_len.
    let mut lower: BTreeMap<(usize, usize), Span> =
        words.iter().map(|(&k, ws)| (k, Span::new(field, ws.len()))).collect();
    for (&(s, t), ks) in &kernels {
        for r in ks {
            for a in 0..alg.num_arrows() {
                let mut push = |key: (usize, usize), build: &dyn Fn(&[usize]) -> Vec<usize>| {
                    let Some(span) = lower.get_mut(&key) else { return };
                    let mut v = vec![field.zero(); span.ambient()];
                    for (c, w) in r.iter().zip(&words[&(s, t)]) {
                        if c.is_zero() {
                            continue;
                        }
                        let nw = build(w);
                        if let Some(&i) = pos.get(&nw) {
                            if words[&key].get(i) == Some(&nw) {
                                v[i] = v[i].add_ref(c);
                            }
                        }
                    }
                    span.insert(&v);
                };
                if alg.arrow_source(a) == t {
                    push((s, alg.arrow_target(a)), &|w: &[usize]| {
                        let mut nw = vec![a];
                        nw.extend_from_slice(w);
                        nw
                    });
                }
                if alg.arrow_target(a) == s {
                    push((alg.arrow_source(a), t), &|w: &[usize]| {
                        let mut nw = w.to_vec();
                        nw.push(a);
                        nw
                    });
                }
            }
        }
    }
    for (key, ks) in &kernels {
        let span = lower.get_mut(key).expect("every pair with words has a span");
        for r in ks {
            if span.insert(r) {
                let rel: Relation = r
                    .iter()
                    .zip(&words[key])
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, w)| (c.clone(), w.clone()))
                    .collect();
                p.relations.push(rel);
            }
        }
    }
    p
}

/// Dimensions of `e_t (rad^d / rad^{d+1}) e_s`, indexed `[s][t][d]`.
pub fn radical_layers(alg: &Algebra) -> Vec<Vec<Vec<usize>>> {
    let n = alg.num_vertices();
    let powers = radical_powers(alg);
    let depth = powers.len() + 1;
    let mut dims = vec![vec![vec![0usize; depth + 1]; n]; n];
    for s in 0..n {
        for t in 0..n {
            dims[s][t][0] = alg.basis_between(s, t).len();
        }
    }
    for (d, span) in powers.iter().enumerate() {
        for p in span.pivots() {
            dims[alg.basis_source(p)][alg.basis_target(p)][d + 1] += 1;
        }
    }
    let mut out = vec![vec![vec![0; depth]; n]; n];
    for s in 0..n {
        for t in 0..n {
            for d in 0..depth {
                out[s][t][d] = dims[s][t][d] - dims[s][t][d + 1];
            }
        }
    }
    out
}

/// Number of arrows `s → t` in the Gabriel quiver.
pub fn arrow_counts(alg: &Algebra) -> Vec<Vec<usize>> {
    radical_layers(alg).iter().map(|row| row.iter().map(|l| l.get(1).copied().unwrap_or(0)).collect()).collect()
}

/// Whether the two algebras agree up to a vertex permutation in their
/// Gabriel quivers and in the dimensions of every radical layer of every
/// `e_t A e_s` (equivalently, the relation-space dimension per source, target
/// and degree). A necessary condition for isomorphism; the fixtures compared
/// here are distinguished or identified by it.
pub fn quiver_isomorphic(p: &Algebra, q: &Algebra) -> Result<bool> {
    Ok(vertex_matching(p, q)?.is_some())
}

/// A vertex permutation `π` (vertex `v` of `p` ↦ `π[v]` of `q`) matching the
/// invariants of [`quiver_isomorphic`].
pub fn vertex_matching(p: &Algebra, q: &Algebra) -> Result<Option<Vec<usize>>> {
    let n = p.num_vertices();
    if n > 10 {
        return Err(Error::TooManyVertices(n));
    }
    if q.num_vertices() != n || p.dim() != q.dim() {
        return Ok(None);
    }
    let lp = radical_layers(p);
    let lq = radical_layers(q);
    let pad = |l: &Vec<usize>, d: usize| -> Vec<usize> {
        let mut v = l.clone();
        v.resize(d, 0);
        v
    };
    let depth = lp[0][0].len().max(lq[0][0].len());
    let lp: Vec<Vec<Vec<usize>>> = lp.iter().map(|r| r.iter().map(|l| pad(l, depth)).collect()).collect();
    let lq: Vec<Vec<Vec<usize>>> = lq.iter().map(|r| r.iter().map(|l| pad(l, depth)).collect()).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        v: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        lp: &[Vec<Vec<usize>>],
        lq: &[Vec<Vec<usize>>],
    ) -> bool {
        let n = perm.len();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] {
                continue;
            }
            let ok = (0..=v).all(|u| {
                let pu = if u == v { w } else { perm[u] };
                lp[v][u] == lq[w][pu] && lp[u][v] == lq[pu][w]
            });
            if !ok {
                continue;
            }
            perm[v] = w;
            used[w] = true;
            if go(v + 1, perm, used, lp, lq) {
                return true;
            }
            used[w] = false;
        }
        perm[v] = usize::MAX;
        false
    }
    Ok(go(0, &mut perm, &mut used, &lp, &lq).then_some(perm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::quiver::{linear_quiver, QuiverPresentation};
    use crate::repmod::{direct_sum_of, is_isomorphic};

    const SQUARE: &str = "vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow b 1 2\narrow a 2 4\narrow d 1 3\narrow c 3 4\nrelation a*b - c*d\n";

    fn square() -> Algebra {
        QuiverPresentation::parse(SQUARE).unwrap().build_algebra(30).unwrap()
    }

    #[test]
    fn regular_module_recovers_the_algebra() {
        let a = square();
        let e = end_algebra(&Module::regular(&a)).unwrap();
        assert_eq!(e.algebra.dim(), a.dim());
        assert!(e.algebra.check_associative());
        assert!(quiver_isomorphic(&a, &e.algebra).unwrap());
    }

    #[test]
    fn zero_hom_between_summands() {
        let cyc = "vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\nrelation b*a\nrelation c*b\nrelation a*c\n";
        let a = QuiverPresentation::parse(cyc).unwrap().build_algebra(30).unwrap();
        let e = end_algebra(&Module::regular(&a)).unwrap();
        assert_eq!(e.algebra.dim(), 6);
        assert!(e.algebra.check_associative());
    }

    #[test]
    fn semisimple_endomorphisms() {
        let a = linear_quiver(FieldSpec::Rationals, 2, None).build_algebra(30).unwrap();
        let m = direct_sum_of(&a, &[Module::simple(&a, 0), Module::simple(&a, 1)]);
        let e = end_algebra(&m).unwrap();
        assert_eq!(e.algebra.dim(), 2);
        assert_eq!(e.algebra.num_arrows(), 0);
    }

    #[test]
    fn hom_functor_sends_summands_to_projectives() {
        let a = square();
        let m = direct_sum_of(&a, &[Module::projective(&a, 0), Module::injective(&a, 0), Module::simple(&a, 3)]);
        let e = end_algebra(&m).unwrap();
        for (i, s) in e.summands.iter().enumerate() {
            let phi = e.hom_functor(s).unwrap();
            assert!(is_isomorphic(&phi, &Module::projective(&e.algebra, i)).unwrap());
            let psi = e.dual_hom_functor(s).unwrap();
            assert!(is_isomorphic(&psi, &Module::injective(&e.algebra, i)).unwrap());
        }
    }

    #[test]
    fn presentation_rebuilds() {
        for a in [square(), linear_quiver(FieldSpec::Rationals, 4, Some(2)).build_algebra(30).unwrap()] {
            let e = end_algebra(&Module::regular(&a)).unwrap();
            let p = present_by_quiver(&e.algebra);
            let b = p.build_algebra(30).unwrap();
            assert_eq!(b.dim(), a.dim());
            assert_eq!(b.cartan(), e.algebra.cartan());
            assert!(quiver_isomorphic(&a, &b).unwrap());
        }
        let p = present_by_quiver(&square());
        assert_eq!(p.relations.len(), 1);
    }

    #[test]
    fn distinguishes_relations() {
        let free = linear_quiver(FieldSpec::Rationals, 3, None).build_algebra(30).unwrap();
        let cut = linear_quiver(FieldSpec::Rationals, 3, Some(2)).build_algebra(30).unwrap();
        assert!(!quiver_isomorphic(&free, &cut).unwrap());
    }
}
