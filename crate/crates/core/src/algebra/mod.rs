//! Finite-dimensional basic algebras with a path basis.
//!
//! Every [`Algebra`] carries a quiver (vertices and arrows) and a basis whose
//! elements are paths in the arrows, so any representation given by arrow
//! matrices can evaluate every basis element. Words compose right-to-left:
//! the word `[a, b]` is the product `a·b`, i.e. `b` first, then `a`.

mod rebase;

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar};

pub use rebase::{radical_powers, AbstractAlgebra, Rebased};

/// Sparse vector over a basis: `(index, coefficient)` with nonzero coefficients.
pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowInfo {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPath {
    pub source: usize,
    pub target: usize,
    /// Arrow indices, last applied first.
    pub word: Vec<usize>,
}

#[derive(Debug)]
struct AlgebraData {
    id: u64,
    field: FieldSpec,
    labels: Vec<String>,
    arrows: Vec<ArrowInfo>,
    basis: Vec<BasisPath>,
    mult: Vec<Vec<SparseVec>>,
    vertex_basis: Vec<usize>,
    arrow_basis: Vec<usize>,
    by_ends: Vec<Vec<Vec<usize>>>,
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Shared handle to an algebra or its opposite. Cloning is cheap; the opposite
/// shares storage and `a.opposite().opposite()` is `a` again.
#[derive(Clone, Debug)]
pub struct Algebra {
    data: Arc<AlgebraData>,
    flipped: bool,
}

impl PartialEq for Algebra {
    fn eq(&self, o: &Algebra) -> bool {
        Arc::ptr_eq(&self.data, &o.data) && self.flipped == o.flipped
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Assembles an algebra from a path basis and structure constants.
    /// `mult[i][j]` is the product `bᵢ·bⱼ`.
    pub fn from_parts(
        field: FieldSpec,
        labels: Vec<String>,
        arrows: Vec<ArrowInfo>,
        basis: Vec<BasisPath>,
        mult: Vec<Vec<SparseVec>>,
    ) -> Result<Algebra> {
        let n = labels.len();
        let mut vertex_basis = vec![usize::MAX; n];
        let mut arrow_basis = vec![usize::MAX; arrows.len()];
        let mut by_ends = vec![vec![Vec::new(); n]; n];
        for (i, b) in basis.iter().enumerate() {
            if b.source >= n || b.target >= n {
                return Err(Error::InvalidPresentation(format!("basis element {} has bad endpoints", i)));
            }
            by_ends[b.source][b.target].push(i);
            match b.word.len() {
                0 => {
                    if b.source != b.target {
                        return Err(Error::InvalidPresentation("trivial path with distinct ends".into()));
                    }
                    vertex_basis[b.source] = i;
                }
                1 => arrow_basis[b.word[0]] = i,
                _ => {}
            }
        }
        if vertex_basis.contains(&usize::MAX) || arrow_basis.contains(&usize::MAX) {
            return Err(Error::InvalidPresentation("every vertex and arrow must be a basis element".into()));
        }
        let id = NEXT_ID.fetch_add(1, Ordering::Relaxed);
        let data = AlgebraData { id, field, labels, arrows, basis, mult, vertex_basis, arrow_basis, by_ends };
        Ok(Algebra { data: Arc::new(data), flipped: false })
    }

    pub fn id(&self) -> (u64, bool) {
        (self.data.id, self.flipped)
    }

    pub fn field(&self) -> FieldSpec {
        self.data.field
    }

    pub fn opposite(&self) -> Algebra {
        Algebra { data: self.data.clone(), flipped: !self.flipped }
    }

    pub fn is_opposite(&self) -> bool {
        self.flipped
    }

    pub fn num_vertices(&self) -> usize {
        self.data.labels.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.data.labels[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.data.labels
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.data.labels.iter().position(|l| l == label)
    }

    pub fn num_arrows(&self) -> usize {
        self.data.arrows.len()
    }

    pub fn arrow_name(&self, a: usize) -> &str {
        &self.data.arrows[a].name
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.data.arrows.iter().position(|x| x.name == name)
    }

    pub fn arrow_source(&self, a: usize) -> usize {
        let x = &self.data.arrows[a];
        if self.flipped {
            x.target
        } else {
            x.source
        }
    }

    pub fn arrow_target(&self, a: usize) -> usize {
        let x = &self.data.arrows[a];
        if self.flipped {
            x.source
        } else {
            x.target
        }
    }

    pub fn dim(&self) -> usize {
        self.data.basis.len()
    }

    pub fn basis_source(&self, i: usize) -> usize {
        let b = &self.data.basis[i];
        if self.flipped {
            b.target
        } else {
            b.source
        }
    }

    pub fn basis_target(&self, i: usize) -> usize {
        let b = &self.data.basis[i];
        if self.flipped {
            b.source
        } else {
            b.target
        }
    }

    /// Arrow word of basis element `i`, last-applied arrow first.
    pub fn basis_word(&self, i: usize) -> Vec<usize> {
        let w = &self.data.basis[i].word;
        if self.flipped {
            w.iter().rev().copied().collect()
        } else {
            w.clone()
        }
    }

    pub fn basis_len(&self, i: usize) -> usize {
        self.data.basis[i].word.len()
    }

    pub fn basis_label(&self, i: usize) -> String {
        let w = self.basis_word(i);
        if w.is_empty() {
            format!("e_{}", self.vertex_label(self.basis_source(i)))
        } else {
            w.iter().map(|&a| self.arrow_name(a)).collect::<Vec<_>>().join("*")
        }
    }

    /// Structure constants of `bᵢ·bⱼ`.
    pub fn mult(&self, i: usize, j: usize) -> &SparseVec {
        if self.flipped {
            &self.data.mult[j][i]
        } else {
            &self.data.mult[i][j]
        }
    }

    pub fn vertex_basis(&self, v: usize) -> usize {
        self.data.vertex_basis[v]
    }

    pub fn arrow_basis(&self, a: usize) -> usize {
        self.data.arrow_basis[a]
    }

    /// Basis indices of `e_t · A · e_s`.
    pub fn basis_between(&self, s: usize, t: usize) -> &[usize] {
        if self.flipped {
            &self.data.by_ends[t][s]
        } else {
            &self.data.by_ends[s][t]
        }
    }

    /// Basis indices of the projective `A e_v` (paths starting at `v`).
    pub fn basis_from(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis_source(i) == v).collect()
    }

    /// Basis indices of `e_v A` (paths ending at `v`).
    pub fn basis_to(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis_target(i) == v).collect()
    }

    /// Entry `[s][t]` is `dim e_t A e_s`, the multiplicity of vertex `t` in `P(s)`.
    pub fn cartan(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        (0..n).map(|s| (0..n).map(|t| self.basis_between(s, t).len()).collect()).collect()
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![self.field().zero(); self.dim()]
    }

    pub fn unit_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec();
        v[i] = self.field().one();
        v
    }

    /// Product of two dense elements.
    pub fn mul_elems(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vec();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() || self.basis_source(i) != self.basis_target(j) {
                    continue;
                }
                let ab = a.mul_ref(b);
                for (k, c) in self.mult(i, j) {
                    out[*k] = out[*k].add_ref(&ab.mul_ref(c));
                }
            }
        }
        out
    }

    /// The element represented by a word of arrows (last-applied first); zero
    /// when not composable.
    pub fn word_elem(&self, word: &[usize]) -> Vec<Scalar> {
        let Some((&last, rest)) = word.split_last() else {
            panic!("empty word has no vertex");
        };
        let mut acc = self.unit_vec(self.arrow_basis(last));
        for &a in rest.iter().rev() {
            acc = self.mul_elems(&self.unit_vec(self.arrow_basis(a)), &acc);
        }
        acc
    }

    /// Smallest `L` with `rad^L = 0`.
    pub fn loewy_length(&self) -> usize {
        if self.dim() == 0 {
            0
        } else {
            radical_powers(self).len() + 1
        }
    }

    /// Checks associativity on all composable basis triples.
    pub fn check_associative(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                if self.basis_source(i) != self.basis_target(j) {
                    continue;
                }
                let ij = sparse_to_dense(self.mult(i, j), n, self.field());
                for k in 0..n {
                    if self.basis_source(j) != self.basis_target(k) {
                        continue;
                    }
                    let left = self.mul_elems(&ij, &self.unit_vec(k));
                    let jk = sparse_to_dense(self.mult(j, k), n, self.field());
                    let right = self.mul_elems(&self.unit_vec(i), &jk);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub fn sparse_to_dense(v: &SparseVec, n: usize, f: FieldSpec) -> Vec<Scalar> {
    let mut out = vec![f.zero(); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

pub fn dense_to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}
