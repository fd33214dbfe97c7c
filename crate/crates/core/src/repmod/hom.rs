use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Span};

use super::{Module, ModuleMap};

/// A basis of `Hom_A(M, N)` with coordinates.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub basis: Vec<ModuleMap>,
    span: Span,
    zero: ModuleMap,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a homomorphism in the basis; `None` if it is not one.
    pub fn coords(&self, f: &ModuleMap) -> Option<Vec<Scalar>> {
        self.span.coords(&f.flatten())
    }

    pub fn combine(&self, c: &[Scalar]) -> ModuleMap {
        let mut it = self.basis.iter().zip(c).filter(|(_, x)| !x.is_zero());
        let Some((b0, c0)) = it.next() else {
            return self.zero.clone();
        };
        let mut out = b0.scale(c0);
        for (b, x) in it {
            out = out.add(&b.scale(x));
        }
        out
    }
}

/// Basis of `Hom_A(M, N)` as the solution space of the naturality squares.
pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace> {
    if m.algebra() != n.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    Ok(hom_space_unchecked(m, n))
}

pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    Ok(hom_space(m, n)?.dim())
}

pub(crate) fn hom_space_unchecked(m: &Module, n: &Module) -> HomSpace {
    let alg = m.algebra();
    let f = alg.field();
    let nv = alg.num_vertices();
    let mut off = vec![0; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + n.dim(v) * m.dim(v);
    }
    let unknowns = off[nv];
    let var = |v: usize, i: usize, j: usize| off[v] + i * m.dim(v) + j;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for a in 0..alg.num_arrows() {
        let (s, t) = (alg.arrow_source(a), alg.arrow_target(a));
        let (na, ma) = (n.arrow_map(a), m.arrow_map(a));
        for i in 0..n.dim(t) {
            for j in 0..m.dim(s) {
                let mut row = vec![f.zero(); unknowns];
                for k in 0..n.dim(s) {
                    let c = na.get(i, k);
                    if !c.is_zero() {
                        let x = var(s, k, j);
                        row[x] = row[x].add_ref(c);
                    }
                }
                for k in 0..m.dim(t) {
                    let c = ma.get(k, j);
                    if !c.is_zero() {
                        let x = var(t, i, k);
                        row[x] = row[x].sub_ref(c);
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = Matrix::from_rows(f, rows, unknowns);
    let ker = sys.kernel();
    let basis: Vec<ModuleMap> = (0..ker.cols())
        .map(|c| {
            let col = ker.column(c);
            ModuleMap {
                blocks: (0..nv)
                    .map(|v| {
                        let (r, cc) = (n.dim(v), m.dim(v));
                        Matrix::from_rows(
                            f,
                            (0..r).map(|i| col[off[v] + i * cc..off[v] + (i + 1) * cc].to_vec()).collect(),
                            cc,
                        )
                    })
                    .collect(),
            }
        })
        .collect();
    let span = Span::of(f, unknowns, &basis.iter().map(ModuleMap::flatten).collect::<Vec<_>>());
    HomSpace { basis, span, zero: m.zero_map_to(n) }
}

/// The module `v ↦ Hom(M, X_v)` over `res`, where arrow `a: s → t` of `res`
/// acts by post-composition with `maps[a]: X_s → X_t`.
pub(crate) fn covariant_family(res: &Algebra, m: &Module, targets: &[Module], maps: &[ModuleMap]) -> Module {
    let f = res.field();
    let spaces: Vec<HomSpace> = targets.iter().map(|x| hom_space_unchecked(m, x)).collect();
    let dims: Vec<usize> = spaces.iter().map(HomSpace::dim).collect();
    let arrow_mats = (0..res.num_arrows())
        .map(|a| {
            let (s, t) = (res.arrow_source(a), res.arrow_target(a));
            let cols: Vec<Vec<Scalar>> = spaces[s]
                .basis
                .iter()
                .map(|g| spaces[t].coords(&maps[a].compose(g)).expect("composite is a homomorphism"))
                .collect();
            Matrix::from_columns(f, dims[t], &cols)
        })
        .collect();
    Module::new_unchecked(res, dims, arrow_mats)
}
