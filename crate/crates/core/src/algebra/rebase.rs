use std::collections::BTreeMap;

use super::{Algebra, ArrowInfo, BasisPath, SparseVec};
use crate::error::{Error, Result};
use crate::linalg::{char_poly, rational_roots, FieldSpec, Matrix, Scalar, Span};

/// An algebra given by an arbitrary basis adapted to a complete set of
/// primitive orthogonal vertex idempotents: each basis element lies in some
/// `e_t B e_s`, and each `e_v B e_v` is local with residue field `K`.
#[derive(Clone, Debug)]
pub struct AbstractAlgebra {
    pub field: FieldSpec,
    pub labels: Vec<String>,
    /// `(source, target)` of each basis element.
    pub ends: Vec<(usize, usize)>,
    /// Basis index of each vertex idempotent.
    pub idempotents: Vec<usize>,
    /// `mult[i][j] = bᵢ·bⱼ`; only composable pairs (`source(i) = target(j)`) are read.
    pub mult: Vec<Vec<SparseVec>>,
    /// Prefix for generated arrow names.
    pub arrow_prefix: String,
}

/// A path-basis algebra together with the change of basis to its abstract source.
#[derive(Clone, Debug)]
pub struct Rebased {
    pub algebra: Algebra,
    /// Abstract coordinates of each path basis element.
    pub to_abstract: Vec<Vec<Scalar>>,
    /// Per vertex pair: span of the path vectors and their path indices.
    pair_spans: BTreeMap<(usize, usize), (Span, Vec<usize>)>,
    ends: Vec<(usize, usize)>,
}

impl AbstractAlgebra {
    pub fn dim(&self) -> usize {
        self.ends.len()
    }

    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() || self.ends[i].0 != self.ends[j].1 {
                    continue;
                }
                let ab = a.mul_ref(b);
                for (k, c) in &self.mult[i][j] {
                    out[*k] = out[*k].add_ref(&ab.mul_ref(c));
                }
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    fn between(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.ends[i] == (s, t)).collect()
    }

    /// The scalar `λ` with `x - λ·e_v` nilpotent, for `x` in the local ring `e_v B e_v`.
    fn residue(&self, v: usize, x: usize) -> Result<Scalar> {
        let f = self.field;
        let local = self.between(v, v);
        let d = local.len();
        let pos: BTreeMap<usize, usize> = local.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut lm = Matrix::zeros(f, d, d);
        for (col, &j) in local.iter().enumerate() {
            for (k, c) in &self.mult[x][j] {
                lm.set(pos[k], col, c.clone());
            }
        }
        let ch = f.characteristic();
        if ch == 0 || ch as usize > d {
            return Ok(lm.trace().mul_ref(&f.int(d as i64).inv()));
        }
        let roots = rational_roots(&char_poly(&lm), f);
        if roots.len() == 1 {
            Ok(roots[0].clone())
        } else {
            Err(Error::NonBasic(format!("vertex {} does not have a split local endomorphism ring", v)))
        }
    }

    /// Re-expresses the algebra in a basis of paths in arrows spanning `rad/rad²`.
    pub fn rebase(&self) -> Result<Rebased> {
        let f = self.field;
        let n = self.labels.len();
        let dim = self.dim();
        for (v, &e) in self.idempotents.iter().enumerate() {
            if self.ends[e] != (v, v) {
                return Err(Error::NonBasic(format!("idempotent of vertex {} has wrong ends", v)));
            }
        }
        // Radical basis per vertex pair.
        let mut rad: BTreeMap<(usize, usize), Vec<Vec<Scalar>>> = BTreeMap::new();
        for i in 0..dim {
            let (s, t) = self.ends[i];
            if s != t {
                rad.entry((s, t)).or_default().push(self.unit(i));
            } else if i != self.idempotents[s] {
                let lam = self.residue(s, i)?;
                let mut x = self.unit(i);
                let e = self.idempotents[s];
                x[e] = x[e].sub_ref(&lam);
                rad.entry((s, t)).or_default().push(x);
            }
        }
        // rad² per pair.
        let mut rad2: BTreeMap<(usize, usize), Span> = BTreeMap::new();
        for (&(s1, m1), xs) in &rad {
            for (&(m2, t2), ys) in &rad {
                if m2 != m1 {
                    continue;
                }
                // y·x : s1 → t2
                let span = rad2.entry((s1, t2)).or_insert_with(|| Span::new(f, dim));
                for x in xs {
                    for y in ys {
                        span.insert(&self.mul(y, x));
                    }
                }
            }
        }
        // Arrows: complement of rad² in rad, pair by pair.
        let mut arrows: Vec<ArrowInfo> = Vec::new();
        let mut arrow_vecs: Vec<Vec<Scalar>> = Vec::new();
        for (&(s, t), xs) in &rad {
            let mut span = rad2.get(&(s, t)).cloned().unwrap_or_else(|| Span::new(f, dim));
            for x in xs {
                if span.insert(x) {
                    arrows.push(ArrowInfo {
                        name: format!("{}{}", self.arrow_prefix, arrows.len()),
                        source: s,
                        target: t,
                    });
                    arrow_vecs.push(x.clone());
                }
            }
        }
        // Path basis by increasing length.
        let mut pair_spans: BTreeMap<(usize, usize), (Span, Vec<usize>)> = BTreeMap::new();
        let mut basis: Vec<BasisPath> = Vec::new();
        let mut vecs: Vec<Vec<Scalar>> = Vec::new();
        let mut frontier: Vec<usize> = Vec::new();
        for v in 0..n {
            let e = self.unit(self.idempotents[v]);
            let entry = pair_spans.entry((v, v)).or_insert_with(|| (Span::new(f, dim), Vec::new()));
            entry.0.insert(&e);
            entry.1.push(basis.len());
            frontier.push(basis.len());
            basis.push(BasisPath { source: v, target: v, word: vec![] });
            vecs.push(e);
        }
        let mut rounds = 0;
        while !frontier.is_empty() {
            rounds += 1;
            if rounds > dim + 1 {
                return Err(Error::NonBasic("radical is not nilpotent".into()));
            }
            let mut next = Vec::new();
            for &p in &frontier {
                for (a, info) in arrows.iter().enumerate() {
                    if info.source != basis[p].target {
                        continue;
                    }
                    let w = self.mul(&arrow_vecs[a], &vecs[p]);
                    let key = (basis[p].source, info.target);
                    let entry = pair_spans.entry(key).or_insert_with(|| (Span::new(f, dim), Vec::new()));
                    if entry.0.insert(&w) {
                        entry.1.push(basis.len());
                        next.push(basis.len());
                        let mut word = vec![a];
                        word.extend(basis[p].word.iter().copied());
                        basis.push(BasisPath { source: key.0, target: key.1, word });
                        vecs.push(w);
                    }
                }
            }
            frontier = next;
        }
        if basis.len() != dim {
            return Err(Error::NonBasic(format!("paths in the arrows span {} of {} dimensions", basis.len(), dim)));
        }
        // Structure constants in the path basis.
        let nb = basis.len();
        let mut mult = vec![vec![Vec::new(); nb]; nb];
        for i in 0..nb {
            for j in 0..nb {
                if basis[i].source != basis[j].target {
                    continue;
                }
                let prod = self.mul(&vecs[i], &vecs[j]);
                let key = (basis[j].source, basis[i].target);
                let coords = match pair_spans.get(&key) {
                    Some((span, idx)) => {
                        let c = span
                            .coords(&prod)
                            .ok_or_else(|| Error::NonBasic("product escapes its vertex pair".into()))?;
                        idx.iter().zip(c).filter(|(_, c)| !c.is_zero()).map(|(&k, c)| (k, c)).collect()
                    }
                    None => {
                        if prod.iter().any(|c| !c.is_zero()) {
                            return Err(Error::NonBasic("product escapes its vertex pair".into()));
                        }
                        Vec::new()
                    }
                };
                mult[i][j] = coords;
            }
        }
        let algebra = Algebra::from_parts(f, self.labels.clone(), arrows, basis, mult)?;
        if radical_powers(&algebra).len() > algebra.dim() {
            return Err(Error::NonBasic("radical is not nilpotent".into()));
        }
        Ok(Rebased { algebra, to_abstract: vecs, pair_spans, ends: self.ends.clone() })
    }
}

impl Rebased {
    /// Path-basis coordinates of an abstract element.
    pub fn from_abstract(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let f = self.algebra.field();
        let mut out = vec![f.zero(); self.algebra.dim()];
        let mut parts: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.entry(self.ends[i]).or_insert_with(|| vec![f.zero(); v.len()])[i] = c.clone();
        }
        for (key, part) in parts {
            let (span, idx) = self.pair_spans.get(&key)?;
            let c = span.coords(&part)?;
            for (k, x) in idx.iter().zip(c) {
                out[*k] = x;
            }
        }
        Some(out)
    }
}

/// Spans of `rad¹, rad², …` (nonzero powers only) of a path-basis algebra.
/// Stops after `dim + 1` powers if the radical fails to be nilpotent.
pub fn radical_powers(alg: &Algebra) -> Vec<Span> {
    let f = alg.field();
    let n = alg.dim();
    let mut out = Vec::new();
    let mut current = Span::new(f, n);
    for i in 0..n {
        if alg.basis_len(i) > 0 {
            current.insert(&alg.unit_vec(i));
        }
    }
    while current.dim() > 0 && out.len() <= n {
        let basis = current.basis();
        out.push(current);
        let mut next = Span::new(f, n);
        for a in 0..alg.num_arrows() {
            let ab = alg.unit_vec(alg.arrow_basis(a));
            for x in &basis {
                next.insert(&alg.mul_elems(&ab, x));
            }
        }
        current = next;
    }
    out
}
