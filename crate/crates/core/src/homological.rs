//! Minimal resolutions, Ext, homological dimensions, `gen_k`/`cogen^k` and the
//! Auslander–Reiten translate.

use std::fmt;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Span};
use crate::repmod::{block_map, direct_sum, direct_sum_of, right_mult_elem, Module, ModuleMap};

/// Default bound on resolution length.
pub const DEFAULT_RESOLUTION_CAP: usize = 40;

/// A homological dimension: exact, infinite, or a lower bound when a cap was hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Dim {
    Finite(usize),
    Infinite,
    AtLeast(usize),
}

impl Dim {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dim::Finite(n) => Some(n),
            _ => None,
        }
    }

    /// Whether the value is known to be at least `k`.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Dim::Finite(n) | Dim::AtLeast(n) => n >= k,
            Dim::Infinite => true,
        }
    }

    /// Whether the value is known to be at most `k`.
    pub fn at_most(self, k: usize) -> bool {
        matches!(self, Dim::Finite(n) if n <= k)
    }

    pub fn is_exact(self) -> bool {
        !matches!(self, Dim::AtLeast(_))
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(n) => write!(f, "{}", n),
            Dim::Infinite => write!(f, "inf"),
            Dim::AtLeast(n) => write!(f, ">={}", n),
        }
    }
}

/// Projective cover `⊕ P(vᵢ) → M`; the summand `P(vᵢ)` sends `e_{vᵢ}` to `gens[i]`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub verts: Vec<usize>,
    pub gens: Vec<Vec<Scalar>>,
    pub module: Module,
    pub epi: ModuleMap,
}

/// The map `P(v) → M`, `p ↦ p·x`, for `x ∈ M_v`.
pub fn map_from_projective(m: &Module, v: usize, x: &[Scalar]) -> ModuleMap {
    let alg = m.algebra();
    let f = alg.field();
    let blocks = (0..alg.num_vertices())
        .map(|t| {
            let paths = alg.basis_between(v, t);
            let cols: Vec<Vec<Scalar>> = paths.iter().map(|&p| m.act(p).mul_vec(x)).collect();
            Matrix::from_columns(f, m.dim(t), &cols)
        })
        .collect();
    ModuleMap { blocks }
}

pub fn projective_cover(m: &Module) -> ProjectiveCover {
    let alg = m.algebra();
    let f = alg.field();
    let rad = m.radical_bases();
    let mut verts = Vec::new();
    let mut gens = Vec::new();
    for v in 0..alg.num_vertices() {
        let span = Span::of(f, m.dim(v), &rad[v].columns());
        for j in span.complement_indices() {
            let mut x = vec![f.zero(); m.dim(v)];
            x[j] = f.one();
            verts.push(v);
            gens.push(x);
        }
    }
    let projs: Vec<Module> = verts.iter().map(|&v| Module::projective(alg, v)).collect();
    let module = if projs.is_empty() { Module::zero(alg) } else { direct_sum_of(alg, &projs) };
    let maps: Vec<ModuleMap> = verts.iter().zip(&gens).map(|(&v, x)| map_from_projective(m, v, x)).collect();
    let refs: Vec<&Module> = projs.iter().collect();
    let epi = if maps.is_empty() { module.zero_map_to(m) } else { block_map(f, &refs, &[m], &[maps]) };
    ProjectiveCover { verts, gens, module, epi }
}

/// Injective hull `M → ⊕ I(vᵢ)`.
pub fn injective_hull(m: &Module) -> (Vec<usize>, Module, ModuleMap) {
    let c = projective_cover(&m.dual());
    (c.verts, c.module.dual(), c.epi.dual())
}

/// A minimal projective resolution, truncated at a cap. Term `i` is
/// `⊕ P(v)` over `verts[i]`; for `i ≥ 1` the differential sends the summand
/// `P(u)` (index `j` of term `i`) to the summand `P(v)` (index `k` of term
/// `i−1`) by right multiplication with `coeffs[i][j][k] ∈ e_u A e_v`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub algebra: Algebra,
    pub verts: Vec<Vec<usize>>,
    pub coeffs: Vec<Vec<Vec<Vec<Scalar>>>>,
    /// `syzygies[i] = Ωⁱ M`, for every computed `i`.
    pub syzygies: Vec<Module>,
    /// Whether a zero syzygy was reached.
    pub complete: bool,
}

impl Resolution {
    /// Number of terms computed.
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn term(&self, i: usize) -> Module {
        let alg = &self.algebra;
        let projs: Vec<Module> = self.verts[i].iter().map(|&v| Module::projective(alg, v)).collect();
        if projs.is_empty() {
            Module::zero(alg)
        } else {
            direct_sum_of(alg, &projs)
        }
    }

    /// Differential `term(i) → term(i−1)` for `i ≥ 1`.
    pub fn differential(&self, i: usize) -> ModuleMap {
        let alg = &self.algebra;
        let f = alg.field();
        let src: Vec<Module> = self.verts[i].iter().map(|&v| Module::projective(alg, v)).collect();
        let tgt: Vec<Module> = self.verts[i - 1].iter().map(|&v| Module::projective(alg, v)).collect();
        let entries: Vec<Vec<ModuleMap>> = (0..tgt.len())
            .map(|k| {
                (0..src.len())
                    .map(|j| right_mult_elem(alg, self.verts[i][j], self.verts[i - 1][k], &self.coeffs[i][j][k]))
                    .collect()
            })
            .collect();
        let s: Vec<&Module> = src.iter().collect();
        let t: Vec<&Module> = tgt.iter().collect();
        if s.is_empty() || t.is_empty() {
            return ModuleMap::zero(f, &sum_dims(alg, &self.verts[i]), &sum_dims(alg, &self.verts[i - 1]));
        }
        block_map(f, &s, &t, &entries)
    }

    /// Projective dimension if the resolution is complete.
    pub fn pdim(&self) -> Dim {
        let nonzero = self.verts.iter().take_while(|v| !v.is_empty()).count();
        if self.complete {
            Dim::Finite(nonzero.saturating_sub(1))
        } else {
            Dim::AtLeast(self.len())
        }
    }
}

fn sum_dims(alg: &Algebra, verts: &[usize]) -> Vec<usize> {
    let mut d = vec![0; alg.num_vertices()];
    for &v in verts {
        for (t, x) in d.iter_mut().enumerate() {
            *x += alg.basis_between(v, t).len();
        }
    }
    d
}

/// Minimal projective resolution with at most `cap + 1` terms.
pub fn projective_resolution(m: &Module, cap: usize) -> Resolution {
    let alg = m.algebra().clone();
    let mut verts = Vec::new();
    let mut coeffs = vec![Vec::new()];
    let mut syzygies = vec![m.clone()];
    // Inclusion of the current syzygy into the previous term, as per-vertex bases.
    let mut incl: Option<ModuleMap> = None;
    let mut prev_verts: Vec<usize> = Vec::new();
    let mut complete = false;
    for i in 0..=cap {
        let cur = syzygies[i].clone();
        if cur.is_zero() {
            complete = true;
            break;
        }
        let cover = projective_cover(&cur);
        if i >= 1 {
            let inc = incl.as_ref().unwrap();
            let mut rows = Vec::new();
            for (&u, g) in cover.verts.iter().zip(&cover.gens) {
                let y = inc.blocks[u].mul_vec(g);
                // Split y over the summands of the previous term.
                let mut row = Vec::new();
                let mut off = 0;
                for &v in &prev_verts {
                    let paths = alg.basis_between(v, u);
                    let mut x = alg.zero_vec();
                    for (k, &p) in paths.iter().enumerate() {
                        x[p] = y[off + k].clone();
                    }
                    off += paths.len();
                    row.push(x);
                }
                rows.push(row);
            }
            coeffs.push(rows);
        }
        let (k, kinc) = cover.epi.kernel(&cover.module);
        verts.push(cover.verts.clone());
        prev_verts = cover.verts;
        syzygies.push(k);
        incl = Some(kinc);
    }
    if !complete && syzygies.last().is_some_and(Module::is_zero) {
        complete = true;
    }
    syzygies.truncate(verts.len() + 1);
    Resolution { algebra: alg, verts, coeffs, syzygies, complete }
}

/// Minimal injective coresolution, stored as the projective resolution of the
/// dual over the opposite algebra.
#[derive(Clone, Debug)]
pub struct Coresolution {
    pub op: Resolution,
}

impl Coresolution {
    pub fn verts(&self, i: usize) -> &[usize] {
        &self.op.verts[i]
    }

    pub fn len(&self) -> usize {
        self.op.len()
    }

    pub fn is_empty(&self) -> bool {
        self.op.is_empty()
    }

    pub fn complete(&self) -> bool {
        self.op.complete
    }

    /// `Ω^{−i} M`.
    pub fn cosyzygy(&self, i: usize) -> Module {
        self.op.syzygies[i].dual()
    }

    pub fn term(&self, i: usize) -> Module {
        self.op.term(i).dual()
    }

    /// Differential `term(i−1) → term(i)`.
    pub fn differential(&self, i: usize) -> ModuleMap {
        self.op.differential(i).dual()
    }

    pub fn idim(&self) -> Dim {
        self.op.pdim()
    }
}

pub fn injective_coresolution(m: &Module, cap: usize) -> Coresolution {
    Coresolution { op: projective_resolution(&m.dual(), cap) }
}

pub fn syzygy(m: &Module, k: usize) -> Module {
    projective_resolution(m, k).syzygies.get(k).cloned().unwrap_or_else(|| Module::zero(m.algebra()))
}

pub fn cosyzygy(m: &Module, k: usize) -> Module {
    let c = injective_coresolution(m, k);
    if k < c.op.syzygies.len() {
        c.cosyzygy(k)
    } else {
        Module::zero(m.algebra())
    }
}

/// Matrix of `Hom(term i, N) → Hom(term i+1, N)` in the bases `⊕ N_v`.
fn cochain_map(res: &Resolution, n: &Module, i: usize) -> Matrix {
    let f = n.field();
    let src: usize = res.verts[i].iter().map(|&v| n.dim(v)).sum();
    let Some(next) = res.verts.get(i + 1) else {
        return Matrix::zeros(f, 0, src);
    };
    let tgt: usize = next.iter().map(|&u| n.dim(u)).sum();
    let mut m = Matrix::zeros(f, tgt, src);
    let mut r = 0;
    for (j, &u) in next.iter().enumerate() {
        let mut c = 0;
        for (k, &v) in res.verts[i].iter().enumerate() {
            let blk = n.act_elem(&res.coeffs[i + 1][j][k], v, u);
            m.set_block(r, c, &blk);
            c += n.dim(v);
        }
        r += n.dim(u);
    }
    m
}

/// `dim Extⁱ(M, N)` from a resolution of `M` with at least `i + 2` terms or complete.
pub fn ext_dim_from(res: &Resolution, n: &Module, i: usize) -> Result<usize> {
    if res.algebra != *n.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    if i + 1 >= res.len() && !res.complete {
        return Err(Error::CapExceeded { what: "resolution length".into(), cap: res.len() });
    }
    if i >= res.len() {
        return Ok(0);
    }
    let c: usize = res.verts[i].iter().map(|&v| n.dim(v)).sum();
    let out = cochain_map(res, n, i).rank();
    let inc = if i == 0 { 0 } else { cochain_map(res, n, i - 1).rank() };
    Ok(c - out - inc)
}

pub fn ext_dim(m: &Module, n: &Module, i: usize) -> Result<usize> {
    let res = projective_resolution(m, i + 1);
    ext_dim_from(&res, n, i)
}

pub fn pdim(m: &Module, cap: usize) -> Dim {
    projective_resolution(m, cap).pdim()
}

pub fn idim(m: &Module, cap: usize) -> Dim {
    injective_coresolution(m, cap).idim()
}

fn max_dim(ds: impl Iterator<Item = Dim>) -> Dim {
    let mut best = Dim::Finite(0);
    for d in ds {
        best = match (best, d) {
            (Dim::Infinite, _) | (_, Dim::Infinite) => Dim::Infinite,
            (Dim::AtLeast(a), Dim::AtLeast(b))
            | (Dim::AtLeast(a), Dim::Finite(b))
            | (Dim::Finite(a), Dim::AtLeast(b)) => Dim::AtLeast(a.max(b)),
            (Dim::Finite(a), Dim::Finite(b)) => Dim::Finite(a.max(b)),
        };
    }
    best
}

/// Global dimension as the largest projective dimension of a simple module.
/// Over a selfinjective algebra every module of finite projective dimension is
/// projective, so a non-projective simple forces `∞`.
pub fn gldim(alg: &Algebra, cap: usize) -> Dim {
    if is_selfinjective(alg) && (0..alg.num_vertices()).any(|v| !is_projective(&Module::simple(alg, v))) {
        return Dim::Infinite;
    }
    max_dim((0..alg.num_vertices()).map(|v| pdim(&Module::simple(alg, v), cap)))
}

/// Injective dimension of the regular module.
pub fn regular_idim(alg: &Algebra, cap: usize) -> Dim {
    idim(&Module::regular(alg), cap)
}

pub fn is_projective(m: &Module) -> bool {
    projective_cover(m).module.total_dim() == m.total_dim()
}

pub fn is_injective(m: &Module) -> bool {
    injective_hull(m).1.total_dim() == m.total_dim()
}

/// Vertices `v` with `P(v)` injective.
pub fn projective_injective_vertices(alg: &Algebra) -> Vec<usize> {
    (0..alg.num_vertices()).filter(|&v| is_injective(&Module::projective(alg, v))).collect()
}

/// Vertices `v` with `I(v)` projective.
pub fn injective_projective_vertices(alg: &Algebra) -> Vec<usize> {
    (0..alg.num_vertices()).filter(|&v| is_projective(&Module::injective(alg, v))).collect()
}

pub fn is_selfinjective(alg: &Algebra) -> bool {
    projective_injective_vertices(alg).len() == alg.num_vertices()
}

/// Number of leading projective-injective terms in the minimal injective
/// coresolution of the regular module.
pub fn domdim(alg: &Algebra, cap: usize) -> Dim {
    let pi = injective_projective_vertices(alg);
    let res = injective_coresolution(&Module::regular(alg), cap);
    let mut k = 0;
    for i in 0..res.len() {
        if res.verts(i).iter().all(|v| pi.contains(v)) {
            k += 1;
        } else {
            return Dim::Finite(k);
        }
    }
    if res.complete() {
        Dim::Infinite
    } else {
        Dim::AtLeast(k)
    }
}

/// Whether the first `k + 1` terms of the minimal projective resolution of
/// `m` lie in `add P(v)` for `v ∈ verts`.
pub fn in_gen_k_vertices(m: &Module, verts: &[usize], k: usize) -> bool {
    let res = projective_resolution(m, k);
    res.verts.iter().take(k + 1).all(|t| t.iter().all(|v| verts.contains(v)))
}

pub fn in_cogen_k_vertices(m: &Module, verts: &[usize], k: usize) -> bool {
    in_gen_k_vertices(&m.dual(), verts, k)
}

/// `m ∈ gen_k(p)` for a projective module `p`.
pub fn in_gen_k(m: &Module, p: &Module, k: usize) -> Result<bool> {
    if !is_projective(p) {
        return Err(Error::Precondition("gen_k is only supported for projective modules".into()));
    }
    let verts = projective_cover(p).verts;
    Ok(in_gen_k_vertices(m, &verts, k))
}

/// `m ∈ cogen^k(i)` for an injective module `i`.
pub fn in_cogen_k(m: &Module, i: &Module, k: usize) -> Result<bool> {
    if !is_injective(i) {
        return Err(Error::Precondition("cogen^k is only supported for injective modules".into()));
    }
    let verts = injective_hull(i).0;
    Ok(in_cogen_k_vertices(m, &verts, k))
}

/// The transpose `Tr M`, a module over the opposite algebra.
pub fn transpose(m: &Module) -> Module {
    let alg = m.algebra();
    let op = alg.opposite();
    let res = projective_resolution(m, 1);
    if res.verts.is_empty() || res.verts.len() < 2 || res.verts[1].is_empty() {
        return Module::zero(&op);
    }
    let p0 = &res.verts[0];
    let p1 = &res.verts[1];
    // Hom(P₀, A) → Hom(P₁, A) is ⊕ P_op(v) → ⊕ P_op(u), left multiplication by the coefficients.
    let src: Vec<Module> = p0.iter().map(|&v| Module::projective(&op, v)).collect();
    let tgt: Vec<Module> = p1.iter().map(|&u| Module::projective(&op, u)).collect();
    let entries: Vec<Vec<ModuleMap>> = (0..p1.len())
        .map(|j| (0..p0.len()).map(|k| right_mult_elem(&op, p0[k], p1[j], &res.coeffs[1][j][k])).collect())
        .collect();
    let s: Vec<&Module> = src.iter().collect();
    let t: Vec<&Module> = tgt.iter().collect();
    let map = block_map(op.field(), &s, &t, &entries);
    let target = direct_sum(&op, &tgt).0;
    map.cokernel(&target).0
}

/// `τ = D Tr`.
pub fn tau(m: &Module) -> Module {
    transpose(m).dual()
}

/// `τ⁻ = Tr D`.
pub fn tau_inv(m: &Module) -> Module {
    transpose(&m.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::quiver::{linear_quiver, QuiverPresentation};
    use crate::repmod::is_isomorphic;

    fn a2() -> Algebra {
        linear_quiver(FieldSpec::Rationals, 2, None).build_algebra(30).unwrap()
    }

    #[test]
    fn ext_between_simples_of_a2() {
        let a = a2();
        let s1 = Module::simple(&a, 0);
        let s2 = Module::simple(&a, 1);
        assert_eq!(ext_dim(&s1, &s2, 1).unwrap(), 1);
        assert_eq!(ext_dim(&s2, &s1, 1).unwrap(), 0);
        assert_eq!(ext_dim(&s1, &s1, 0).unwrap(), 1);
    }

    #[test]
    fn dimensions_of_a2() {
        let a = a2();
        assert_eq!(gldim(&a, 10), Dim::Finite(1));
        assert_eq!(domdim(&a, 10), Dim::Finite(1));
        assert_eq!(projective_injective_vertices(&a), vec![0]);
    }

    #[test]
    fn cosyzygy_of_regular_a2() {
        let a = a2();
        let c = cosyzygy(&Module::regular(&a), 1);
        assert!(is_isomorphic(&c, &Module::simple(&a, 0)).unwrap());
    }

    #[test]
    fn tau_of_simple_top() {
        let a = a2();
        let t = tau(&Module::simple(&a, 0));
        assert!(is_isomorphic(&t, &Module::simple(&a, 1)).unwrap());
        let back = tau_inv(&t);
        assert!(is_isomorphic(&back, &Module::simple(&a, 0)).unwrap());
        assert!(tau(&Module::projective(&a, 0)).is_zero());
    }

    #[test]
    fn selfinjective_dual_numbers() {
        let a = QuiverPresentation::parse("vertex 1\narrow x 1 1\nrelation x*x\n").unwrap().build_algebra(30).unwrap();
        assert_eq!(domdim(&a, 10), Dim::Infinite);
        assert!(is_selfinjective(&a));
        assert_eq!(gldim(&a, 5), Dim::Infinite);
        assert_eq!(pdim(&Module::simple(&a, 0), 5), Dim::AtLeast(6));
    }

    #[test]
    fn injective_hull_of_square_projective() {
        let p = QuiverPresentation::parse(
            "vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow b 1 2\narrow a 2 4\narrow d 1 3\narrow c 3 4\nrelation a*b - c*d\n",
        )
        .unwrap();
        let a = p.build_algebra(30).unwrap();
        let (verts, hull, mono) = injective_hull(&Module::projective(&a, 1));
        assert_eq!(verts, vec![3]);
        let (coker, _) = mono.cokernel(&hull);
        assert_eq!(coker.dims(), &[1, 0, 1, 0]);
        assert!(is_isomorphic(&coker, &Module::injective(&a, 2)).unwrap());
        assert_eq!(domdim(&a, 10), Dim::Finite(1));
    }
}
