//! Finite-dimensional left modules as quiver representations.

mod decompose;
mod hom;

use std::sync::OnceLock;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar, Span};

pub use decompose::{
    add_equal, decompose, decompose_sum, find_isomorphism, in_add, indecomposable_iso, is_isomorphic, make_basic,
    Decomposition, Piece,
};
pub use hom::{hom_dim, hom_space, HomSpace};

/// A left module: a vector space per vertex and a matrix per arrow, mapping
/// the component at the arrow's source to the one at its target.
#[derive(Clone, Debug)]
pub struct Module {
    alg: Algebra,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
    actions: OnceLock<Vec<Matrix>>,
}

impl PartialEq for Module {
    fn eq(&self, o: &Module) -> bool {
        self.alg == o.alg && self.dims == o.dims && self.maps == o.maps
    }
}

/// A module homomorphism, stored as one block per vertex. Source and target
/// are not stored; block `v` has shape `target.dim(v) × source.dim(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub blocks: Vec<Matrix>,
}

impl Module {
    /// Builds a module, checking that the arrow matrices satisfy the relations.
    pub fn new(alg: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Module> {
        let m = Module::new_unchecked(alg, dims, maps);
        m.check()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(alg: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Module {
        Module { alg: alg.clone(), dims, maps, actions: OnceLock::new() }
    }

    fn check(&self) -> Result<()> {
        let a = &self.alg;
        if self.dims.len() != a.num_vertices() || self.maps.len() != a.num_arrows() {
            return Err(Error::DimensionMismatch("module shape does not match the quiver".into()));
        }
        for (k, m) in self.maps.iter().enumerate() {
            if m.rows() != self.dims[a.arrow_target(k)] || m.cols() != self.dims[a.arrow_source(k)] {
                return Err(Error::DimensionMismatch(format!(
                    "matrix of arrow {} has the wrong shape",
                    a.arrow_name(k)
                )));
            }
            if m.field() != a.field() {
                return Err(Error::DimensionMismatch("matrix over the wrong field".into()));
            }
        }
        // Arrow times basis element agrees with the structure constants.
        for k in 0..a.num_arrows() {
            let ab = a.arrow_basis(k);
            for j in 0..a.dim() {
                if a.basis_source(ab) != a.basis_target(j) {
                    continue;
                }
                let lhs = self.maps[k].mul(self.act(j));
                let rhs = self.combination(a.mult(ab, j), a.basis_source(j), a.arrow_target(k));
                if lhs != rhs {
                    return Err(Error::InvalidPresentation(format!(
                        "arrow matrices violate a relation at {}*{}",
                        a.arrow_name(k),
                        a.basis_label(j)
                    )));
                }
            }
        }
        Ok(())
    }

    fn combination(&self, v: &[(usize, Scalar)], s: usize, t: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dims[t], self.dims[s]);
        for (k, c) in v {
            out.axpy(c, self.act(*k));
        }
        out
    }

    pub fn zero(alg: &Algebra) -> Module {
        let f = alg.field();
        let maps = (0..alg.num_arrows()).map(|_| Matrix::zeros(f, 0, 0)).collect();
        Module::new_unchecked(alg, vec![0; alg.num_vertices()], maps)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn field(&self) -> FieldSpec {
        self.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    pub fn arrow_maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Matrix of basis element `i`, from the component at its source to the one at its target.
    pub fn act(&self, i: usize) -> &Matrix {
        &self.actions.get_or_init(|| {
            let a = &self.alg;
            (0..a.dim())
                .map(|i| {
                    let w = a.basis_word(i);
                    match w.split_last() {
                        None => Matrix::identity(a.field(), self.dims[a.basis_source(i)]),
                        Some((&last, rest)) => {
                            let mut m = self.maps[last].clone();
                            for &x in rest.iter().rev() {
                                m = self.maps[x].mul(&m);
                            }
                            m
                        }
                    }
                })
                .collect()
        })[i]
    }

    /// Action of an algebra element restricted to `e_t · − · e_s`.
    pub fn act_elem(&self, x: &[Scalar], s: usize, t: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dims[t], self.dims[s]);
        for &i in self.alg.basis_between(s, t) {
            if !x[i].is_zero() {
                out.axpy(&x[i], self.act(i));
            }
        }
        out
    }

    /// The simple module at `v`.
    pub fn simple(alg: &Algebra, v: usize) -> Module {
        let f = alg.field();
        let mut dims = vec![0; alg.num_vertices()];
        dims[v] = 1;
        let maps = (0..alg.num_arrows())
            .map(|a| Matrix::zeros(f, dims[alg.arrow_target(a)], dims[alg.arrow_source(a)]))
            .collect();
        Module::new_unchecked(alg, dims, maps)
    }

    /// The indecomposable projective `A e_v`, with basis the paths starting at `v`.
    pub fn projective(alg: &Algebra, v: usize) -> Module {
        let f = alg.field();
        let n = alg.num_vertices();
        let comp: Vec<&[usize]> = (0..n).map(|t| alg.basis_between(v, t)).collect();
        let dims: Vec<usize> = comp.iter().map(|c| c.len()).collect();
        let maps = (0..alg.num_arrows())
            .map(|a| {
                let (s, t) = (alg.arrow_source(a), alg.arrow_target(a));
                let ab = alg.arrow_basis(a);
                let mut m = Matrix::zeros(f, dims[t], dims[s]);
                for (col, &p) in comp[s].iter().enumerate() {
                    for (k, c) in alg.mult(ab, p) {
                        let row = comp[t].iter().position(|x| x == k).expect("product leaves e_t A e_v");
                        m.set(row, col, c.clone());
                    }
                }
                m
            })
            .collect();
        Module::new_unchecked(alg, dims, maps)
    }

    /// The indecomposable injective `D(e_v A)`.
    pub fn injective(alg: &Algebra, v: usize) -> Module {
        Module::projective(&alg.opposite(), v).dual()
    }

    /// `A` as a left module, as the direct sum of the `P(v)`.
    pub fn regular(alg: &Algebra) -> Module {
        direct_sum_of(alg, &(0..alg.num_vertices()).map(|v| Module::projective(alg, v)).collect::<Vec<_>>())
    }

    /// `DA` as the direct sum of the `I(v)`.
    pub fn coregular(alg: &Algebra) -> Module {
        direct_sum_of(alg, &(0..alg.num_vertices()).map(|v| Module::injective(alg, v)).collect::<Vec<_>>())
    }

    /// The vector-space dual, a module over the opposite algebra.
    pub fn dual(&self) -> Module {
        let maps = self.maps.iter().map(Matrix::transpose).collect();
        Module::new_unchecked(&self.alg.opposite(), self.dims.clone(), maps)
    }

    /// The same representation viewed over another handle to an algebra with
    /// identical quiver and basis (used after rebuilding an algebra).
    pub fn transport(&self, alg: &Algebra) -> Result<Module> {
        Module::new(alg, self.dims.clone(), self.maps.clone())
    }

    pub fn identity(&self) -> ModuleMap {
        ModuleMap { blocks: self.dims.iter().map(|&d| Matrix::identity(self.field(), d)).collect() }
    }

    pub fn zero_map_to(&self, target: &Module) -> ModuleMap {
        ModuleMap::zero(self.field(), self.dims(), target.dims())
    }

    /// Offsets of each vertex component in the flattened total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            out.push(acc);
            acc += d;
        }
        out
    }

    /// Submodule spanned by invariant subspaces, given as columns per vertex
    /// (full column rank), together with its inclusion.
    pub fn submodule(&self, bases: &[Matrix]) -> (Module, ModuleMap) {
        let f = self.field();
        let coords: Vec<Coords> = bases.iter().map(Coords::new).collect();
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let maps = (0..self.alg.num_arrows())
            .map(|a| {
                let (s, t) = (self.alg.arrow_source(a), self.alg.arrow_target(a));
                if dims[s] == 0 || dims[t] == 0 {
                    return Matrix::zeros(f, dims[t], dims[s]);
                }
                coords[t].apply(&self.maps[a].mul(&bases[s]))
            })
            .collect();
        (Module::new_unchecked(&self.alg, dims, maps), ModuleMap { blocks: bases.to_vec() })
    }

    /// Quotient by invariant subspaces given as columns per vertex, with the projection.
    pub fn quotient(&self, bases: &[Matrix]) -> (Module, ModuleMap) {
        let f = self.field();
        let n = self.dims.len();
        let mut proj = Vec::with_capacity(n);
        let mut lift = Vec::with_capacity(n);
        for v in 0..n {
            let span = Span::of(f, self.dims[v], &bases[v].columns());
            let comp = span.complement_indices();
            let mut p = Matrix::zeros(f, comp.len(), self.dims[v]);
            for j in 0..self.dims[v] {
                let mut e = vec![f.zero(); self.dims[v]];
                e[j] = f.one();
                let r = span.remainder(&e);
                for (i, &c) in comp.iter().enumerate() {
                    p.set(i, j, r[c].clone());
                }
            }
            let mut l = Matrix::zeros(f, self.dims[v], comp.len());
            for (i, &c) in comp.iter().enumerate() {
                l.set(c, i, f.one());
            }
            proj.push(p);
            lift.push(l);
        }
        let dims: Vec<usize> = proj.iter().map(Matrix::rows).collect();
        let maps = (0..self.alg.num_arrows())
            .map(|a| {
                let (s, t) = (self.alg.arrow_source(a), self.alg.arrow_target(a));
                proj[t].mul(&self.maps[a]).mul(&lift[s])
            })
            .collect();
        (Module::new_unchecked(&self.alg, dims, maps), ModuleMap { blocks: proj })
    }

    /// Smallest submodule containing the given vectors (per vertex).
    pub fn generated_by(&self, gens: &[Vec<Vec<Scalar>>]) -> Vec<Matrix> {
        let f = self.field();
        let n = self.dims.len();
        let mut spans: Vec<Span> = (0..n).map(|v| Span::new(f, self.dims[v])).collect();
        let mut queue: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for (v, gs) in gens.iter().enumerate() {
            for g in gs {
                if spans[v].insert(g) {
                    queue.push((v, g.clone()));
                }
            }
        }
        while let Some((v, x)) = queue.pop() {
            for a in 0..self.alg.num_arrows() {
                if self.alg.arrow_source(a) != v {
                    continue;
                }
                let t = self.alg.arrow_target(a);
                let y = self.maps[a].mul_vec(&x);
                if spans[t].insert(&y) {
                    queue.push((t, y));
                }
            }
        }
        spans.iter().map(|s| Matrix::from_columns(f, s.ambient(), &s.basis())).collect()
    }

    /// Per-vertex bases of the radical: the sum of the images of all arrows.
    pub fn radical_bases(&self) -> Vec<Matrix> {
        let n = self.dims.len();
        let mut gens: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); n];
        for a in 0..self.alg.num_arrows() {
            let t = self.alg.arrow_target(a);
            gens[t].extend(self.maps[a].columns());
        }
        self.generated_by(&gens)
    }

    pub fn radical(&self) -> (Module, ModuleMap) {
        self.submodule(&self.radical_bases())
    }

    pub fn top(&self) -> (Module, ModuleMap) {
        self.quotient(&self.radical_bases())
    }

    /// Per-vertex bases of the socle: vectors killed by every arrow.
    pub fn socle_bases(&self) -> Vec<Matrix> {
        let f = self.field();
        (0..self.dims.len())
            .map(|v| {
                let outgoing: Vec<&Matrix> = (0..self.alg.num_arrows())
                    .filter(|&a| self.alg.arrow_source(a) == v)
                    .map(|a| &self.maps[a])
                    .collect();
                let mut stacked = Matrix::zeros(f, 0, self.dims[v]);
                for m in outgoing {
                    stacked = stacked.vstack(m);
                }
                stacked.kernel()
            })
            .collect()
    }

    pub fn socle(&self) -> (Module, ModuleMap) {
        self.submodule(&self.socle_bases())
    }

    /// Dimension vector of the top.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_bases().iter().zip(&self.dims).map(|(r, d)| d - r.cols()).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_bases().iter().map(Matrix::cols).collect()
    }

    /// The Nakayama functor `D Hom_A(−, A)`.
    pub fn nakayama(&self) -> Module {
        let alg = &self.alg;
        let projs: Vec<Module> = (0..alg.num_vertices()).map(|v| Module::projective(alg, v)).collect();
        // Hom(M, P(v)) is the vertex-v part of a right module: an arrow α: u → v
        // of A acts as right multiplication P(v) → P(u).
        let op = alg.opposite();
        let arrow_maps: Vec<ModuleMap> =
            (0..op.num_arrows()).map(|a| right_mult(alg, op.arrow_source(a), alg.arrow_basis(a))).collect();
        hom::covariant_family(&op, self, &projs, &arrow_maps).dual()
    }

    /// The inverse Nakayama functor `Hom_A(DA, −)`.
    pub fn nakayama_inv(&self) -> Module {
        self.dual().nakayama().dual()
    }

    pub fn is_same_algebra(&self, o: &Module) -> bool {
        self.alg == o.alg
    }
}

/// Right multiplication `P(v) → P(u)`, `p ↦ p·x`, by a basis element `x ∈ e_v A e_u`.
pub fn right_mult(alg: &Algebra, v: usize, x: usize) -> ModuleMap {
    let f = alg.field();
    let u = alg.basis_source(x);
    debug_assert_eq!(alg.basis_target(x), v);
    let n = alg.num_vertices();
    let blocks = (0..n)
        .map(|t| {
            let from = alg.basis_between(v, t);
            let to = alg.basis_between(u, t);
            let mut m = Matrix::zeros(f, to.len(), from.len());
            for (col, &p) in from.iter().enumerate() {
                for (k, c) in alg.mult(p, x) {
                    let row = to.iter().position(|y| y == k).expect("product leaves e_t A e_u");
                    m.set(row, col, c.clone());
                }
            }
            m
        })
        .collect();
    ModuleMap { blocks }
}

/// Right multiplication by an arbitrary element of `e_v A e_u`.
pub fn right_mult_elem(alg: &Algebra, v: usize, u: usize, x: &[Scalar]) -> ModuleMap {
    let p = Module::projective(alg, v);
    let q = Module::projective(alg, u);
    let mut out = p.zero_map_to(&q);
    for &i in alg.basis_between(u, v) {
        if !x[i].is_zero() {
            out = out.add(&right_mult(alg, v, i).scale(&x[i]));
        }
    }
    out
}

/// Coordinates with respect to a full-column-rank basis matrix, read off on a
/// set of rows where the basis is invertible.
#[derive(Clone, Debug)]
pub struct Coords {
    pub basis: Matrix,
    rows: Vec<usize>,
    inv: Matrix,
}

impl Coords {
    pub fn new(basis: &Matrix) -> Coords {
        let r = basis.transpose().rref();
        let rows = r.pivots.clone();
        assert_eq!(rows.len(), basis.cols(), "basis columns must be independent");
        let inv = basis.select_rows(&rows).inverse().expect("pivot rows give an invertible block");
        Coords { basis: basis.clone(), rows, inv }
    }

    /// Coordinates of the columns of `x`, assumed to lie in the span.
    pub fn apply(&self, x: &Matrix) -> Matrix {
        self.inv.mul(&x.select_rows(&self.rows))
    }
}

/// Direct sum with the inclusion and projection of each summand.
pub fn direct_sum(alg: &Algebra, parts: &[Module]) -> (Module, Vec<ModuleMap>, Vec<ModuleMap>) {
    let f = alg.field();
    let n = alg.num_vertices();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
    let maps = (0..alg.num_arrows())
        .map(|a| {
            let (s, t) = (alg.arrow_source(a), alg.arrow_target(a));
            let mut m = Matrix::zeros(f, dims[t], dims[s]);
            let (mut r, mut c) = (0, 0);
            for p in parts {
                m.set_block(r, c, &p.maps[a]);
                r += p.dims[t];
                c += p.dims[s];
            }
            m
        })
        .collect();
    let mut incl = Vec::new();
    let mut proj = Vec::new();
    let mut off = vec![0; n];
    for p in parts {
        let mut ib = Vec::new();
        let mut pb = Vec::new();
        for v in 0..n {
            let mut i = Matrix::zeros(f, dims[v], p.dims[v]);
            let mut q = Matrix::zeros(f, p.dims[v], dims[v]);
            for k in 0..p.dims[v] {
                i.set(off[v] + k, k, f.one());
                q.set(k, off[v] + k, f.one());
            }
            off[v] += p.dims[v];
            ib.push(i);
            pb.push(q);
        }
        incl.push(ModuleMap { blocks: ib });
        proj.push(ModuleMap { blocks: pb });
    }
    (Module::new_unchecked(alg, dims, maps), incl, proj)
}

pub fn direct_sum_of(alg: &Algebra, parts: &[Module]) -> Module {
    direct_sum(alg, parts).0
}

impl ModuleMap {
    pub fn zero(f: FieldSpec, source: &[usize], target: &[usize]) -> ModuleMap {
        ModuleMap { blocks: source.iter().zip(target).map(|(&s, &t)| Matrix::zeros(f, t, s)).collect() }
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &ModuleMap) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, o: &ModuleMap) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &ModuleMap) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        Some(ModuleMap { blocks: self.blocks.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()? })
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.blocks.iter().map(Matrix::rank).collect()
    }

    pub fn rank(&self) -> usize {
        self.ranks().iter().sum()
    }

    /// Entries of all blocks, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.blocks.iter().flat_map(|b| b.data().iter().cloned()).collect()
    }

    /// Checks `N_a ∘ f_s = f_t ∘ M_a` for every arrow.
    pub fn is_natural(&self, source: &Module, target: &Module) -> bool {
        let alg = source.algebra();
        if self.blocks.len() != alg.num_vertices() {
            return false;
        }
        for v in 0..alg.num_vertices() {
            if self.blocks[v].rows() != target.dim(v) || self.blocks[v].cols() != source.dim(v) {
                return false;
            }
        }
        (0..alg.num_arrows()).all(|a| {
            let (s, t) = (alg.arrow_source(a), alg.arrow_target(a));
            target.arrow_map(a).mul(&self.blocks[s]) == self.blocks[t].mul(source.arrow_map(a))
        })
    }

    /// Kernel submodule of `self: source → target`, with its inclusion.
    pub fn kernel(&self, source: &Module) -> (Module, ModuleMap) {
        source.submodule(&self.blocks.iter().map(Matrix::kernel).collect::<Vec<_>>())
    }

    /// Image as a submodule of the target, with its inclusion.
    pub fn image(&self, target: &Module) -> (Module, ModuleMap) {
        target.submodule(&self.blocks.iter().map(Matrix::column_space).collect::<Vec<_>>())
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self, target: &Module) -> (Module, ModuleMap) {
        target.quotient(&self.blocks.iter().map(Matrix::column_space).collect::<Vec<_>>())
    }

    /// The same blocks viewed over the opposite algebra, as a map `D N → D M`.
    pub fn dual(&self) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().map(Matrix::transpose).collect() }
    }

    /// Per-vertex power.
    pub fn pow(&self, e: usize) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().map(|b| b.pow(e)).collect() }
    }
}

/// Block-matrix map `⊕ sources → ⊕ targets` with entry `(i, j)`: `sources[j] → targets[i]`.
pub fn block_map(f: FieldSpec, sources: &[&Module], targets: &[&Module], entries: &[Vec<ModuleMap>]) -> ModuleMap {
    let n = sources.first().or(targets.first()).map_or(0, |m| m.dims().len());
    let blocks = (0..n)
        .map(|v| {
            let rows: usize = targets.iter().map(|m| m.dim(v)).sum();
            let cols: usize = sources.iter().map(|m| m.dim(v)).sum();
            let mut out = Matrix::zeros(f, rows, cols);
            let mut r = 0;
            for (i, t) in targets.iter().enumerate() {
                let mut c = 0;
                for (j, s) in sources.iter().enumerate() {
                    out.set_block(r, c, &entries[i][j].blocks[v]);
                    c += s.dim(v);
                }
                r += t.dim(v);
            }
            out
        })
        .collect();
    ModuleMap { blocks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{linear_quiver, QuiverPresentation};

    fn a2() -> Algebra {
        linear_quiver(FieldSpec::Rationals, 2, None).build_algebra(30).unwrap()
    }

    #[test]
    fn projectives_and_injectives_of_a2() {
        let a = a2();
        assert_eq!(Module::projective(&a, 0).dims(), &[1, 1]);
        assert_eq!(Module::projective(&a, 1).dims(), &[0, 1]);
        assert_eq!(Module::injective(&a, 0).dims(), &[1, 0]);
        assert_eq!(Module::injective(&a, 1).dims(), &[1, 1]);
        assert!(Module::injective(&a, 1).algebra() == &a);
    }

    #[test]
    fn relations_are_enforced() {
        let p = QuiverPresentation::parse("vertex 1\narrow x 1 1\nrelation x*x\n").unwrap();
        let a = p.build_algebra(30).unwrap();
        let q = FieldSpec::Rationals;
        assert!(Module::new(&a, vec![2], vec![Matrix::from_ints(q, &[&[0, 1], &[0, 0]])]).is_ok());
        assert!(Module::new(&a, vec![2], vec![Matrix::from_ints(q, &[&[1, 0], &[0, 0]])]).is_err());
    }

    #[test]
    fn top_socle_radical() {
        let a = a2();
        let p = Module::projective(&a, 0);
        assert_eq!(p.top_dims(), vec![1, 0]);
        assert_eq!(p.socle_dims(), vec![0, 1]);
        assert_eq!(p.radical().0.dims(), &[0, 1]);
    }

    #[test]
    fn nakayama_sends_projectives_to_injectives() {
        let a = a2();
        for v in 0..2 {
            assert_eq!(Module::projective(&a, v).nakayama().dims(), Module::injective(&a, v).dims());
            assert_eq!(Module::injective(&a, v).nakayama_inv().dims(), Module::projective(&a, v).dims());
        }
    }
}
