//! Small algebras used throughout the tests, examples and CLI: the four worked
//! examples (with the quivers displayed for their shifted algebras) and a few
//! selfinjective and hereditary algebras.

use crate::algebra::Algebra;
use crate::endo::{end_algebra, EndAlgebra};
use crate::error::Result;
use crate::linalg::{FieldSpec, Matrix};
use crate::quiver::{linear_quiver, QuiverPresentation, DEFAULT_PATH_CAP};
use crate::repmod::{direct_sum_of, Module};

const Q: FieldSpec = FieldSpec::Rationals;

fn build(p: &QuiverPresentation) -> Algebra {
    p.build_algebra(DEFAULT_PATH_CAP).expect("fixture presentation is finite-dimensional")
}

fn parse(text: &str) -> QuiverPresentation {
    QuiverPresentation::parse(text).expect("fixture presentation parses")
}

/// A generator-cogenerator `E` over `A` with `Γ = End_A(E)^op`.
#[derive(Clone, Debug)]
pub struct MoritaTachikawa {
    pub a: Algebra,
    pub e: Module,
    pub end: EndAlgebra,
}

impl MoritaTachikawa {
    pub fn gamma(&self) -> &Algebra {
        &self.end.algebra
    }
}

/// The basic module with `add E = add(A ⊕ DA)`.
pub fn generator_cogenerator(a: &Algebra) -> Module {
    direct_sum_of(a, &[Module::regular(a), Module::coregular(a)])
}

/// The triple for `E = basic(A ⊕ DA)`.
pub fn mt_triple(a: &Algebra) -> Result<MoritaTachikawa> {
    let end = end_algebra(&generator_cogenerator(a))?;
    let e = direct_sum_of(a, &end.summands);
    Ok(MoritaTachikawa { a: a.clone(), e, end })
}

/// Linear `A_n` modulo paths of length `l`.
pub fn linear(n: usize, l: Option<usize>) -> Algebra {
    build(&linear_quiver(Q, n, l))
}

/// The interval module supported on vertices `i..=j` (0-based) of linear `A_n`.
pub fn interval_module(alg: &Algebra, i: usize, j: usize) -> Module {
    let n = alg.num_vertices();
    let dims: Vec<usize> = (0..n).map(|v| usize::from(v >= i && v <= j)).collect();
    let maps = (0..alg.num_arrows())
        .map(|a| {
            let (s, t) = (alg.arrow_source(a), alg.arrow_target(a));
            let mut m = Matrix::zeros(Q, dims[t], dims[s]);
            if dims[s] == 1 && dims[t] == 1 {
                m.set(0, 0, Q.one());
            }
            m
        })
        .collect();
    Module::new(alg, dims, maps).expect("interval modules satisfy the relations")
}

pub fn a2() -> Algebra {
    linear(2, None)
}

/// `K[x]/x²`.
pub fn dual_numbers() -> Algebra {
    build(&parse("vertex 1\narrow x 1 1\nrelation x*x\n"))
}

/// The cyclic quiver on three vertices modulo all paths of length 2.
pub fn selfinjective_nakayama() -> Algebra {
    build(&parse(
        "vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\nrelation b*a\nrelation c*b\nrelation a*c\n",
    ))
}

/// Example 1: `A` = path algebra of linear `A_3`, `E = basic(A ⊕ DA)`.
pub fn ex1() -> MoritaTachikawa {
    mt_triple(&linear(3, None)).expect("fixture triple")
}

/// Example 1's `Γ` as displayed: linear `A_5` modulo paths of length 3.
pub fn ex1_gamma_displayed() -> QuiverPresentation {
    linear_quiver(Q, 5, Some(3))
}

/// Example 1's displayed `B_1`: a commutative square `1 → 2, 4 → 5` followed by `5 → 3`.
pub fn ex1_b1_displayed() -> QuiverPresentation {
    parse(
        "vertex 1\nvertex 2\nvertex 3\nvertex 4\nvertex 5\n\
         arrow p 1 2\narrow q 2 5\narrow r 1 4\narrow s 4 5\narrow t 5 3\n\
         relation q*p - s*r\n",
    )
}

/// Example 2: `A` = linear `A_n` modulo the radical squared, `E = basic(A ⊕ DA)`.
pub fn ex2(n: usize) -> MoritaTachikawa {
    mt_triple(&linear(n, Some(2))).expect("fixture triple")
}

/// Example 2's displayed `B^k`: linear `A_{n+1}` modulo all length-2 paths
/// except the one through vertex `k + 1`.
pub fn ex2_coshifted_displayed(n: usize, k: usize) -> QuiverPresentation {
    let mut p = linear_quiver(Q, n + 1, None);
    // arrow `a_v` goes from vertex v to v+1 (1-based); the path through vertex m is a_m * a_{m-1}.
    for m in 2..=n {
        if m != k + 1 {
            p.relations.push(vec![(Q.one(), vec![m - 1, m - 2])]);
        }
    }
    p
}

const SQUARE: &str =
    "vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow b 1 2\narrow a 2 4\narrow d 1 3\narrow c 3 4\nrelation a*b - c*d\n";

/// Example 3: the commutative square `ab = cd`.
pub fn ex3_presentation() -> QuiverPresentation {
    parse(SQUARE)
}

pub fn ex3() -> Algebra {
    build(&ex3_presentation())
}

/// Example 3's displayed `B_1`: `2 → 1′ ← 3`, `1′ → 4`.
pub fn ex3_b1_displayed() -> QuiverPresentation {
    parse("vertex 2\nvertex 3\nvertex 1'\nvertex 4\narrow x 2 1'\narrow y 3 1'\narrow z 1' 4\n")
}

/// Example 3's displayed `B^1`: `1 → 4′`, `4′ → 2`, `4′ → 3`.
pub fn ex3_b1_upper_displayed() -> QuiverPresentation {
    parse("vertex 1\nvertex 4'\nvertex 2\nvertex 3\narrow x 1 4'\narrow y 4' 2\narrow z 4' 3\n")
}

/// Example 4: the Auslander algebra of linear `A_3`, as `End(⊕ indecomposables)^op`.
pub fn ex4() -> EndAlgebra {
    let a = linear(3, None);
    let mut parts = Vec::new();
    for i in 0..3 {
        for j in i..3 {
            parts.push(interval_module(&a, i, j));
        }
    }
    end_algebra(&direct_sum_of(&a, &parts)).expect("fixture endomorphism algebra")
}

const AR_QUIVER: &str = "vertex b1\nvertex b2\nvertex b3\nvertex m1\nvertex m2\nvertex t\n\
     arrow u1 b1 m1\narrow d1 m1 b2\narrow u2 b2 m2\narrow d2 m2 b3\narrow u3 m1 t\narrow d3 t m2\n";

/// Example 4's displayed `Γ`: the Auslander–Reiten quiver of linear `A_3` with mesh relations.
pub fn ex4_gamma_displayed() -> QuiverPresentation {
    parse(&format!("{}relation d1*u1\nrelation d2*u2\nrelation d3*u3 - u2*d1\n", AR_QUIVER))
}

/// Example 4's displayed `B_1`: the same quiver without the relations in the lowest row.
pub fn ex4_b1_displayed() -> QuiverPresentation {
    parse(&format!("{}relation d3*u3 - u2*d1\n", AR_QUIVER))
}

/// Example 4's displayed `B_{1,1}`: `a1 → a2 → a3 → a4`, `b1 → b2`, `b1 → a1`,
/// `b2 → a2`, with the square commuting.
pub fn ex4_b11_displayed() -> QuiverPresentation {
    parse(
        "vertex a1\nvertex a2\nvertex a3\nvertex a4\nvertex b1\nvertex b2\n\
         arrow p1 a1 a2\narrow p2 a2 a3\narrow p3 a3 a4\narrow q b1 b2\narrow r1 b1 a1\narrow r2 b2 a2\n\
         relation p1*r1 - r2*q\n",
    )
}

/// Example 4's displayed `B_{1,1,1}`: linear `A_5` with one extra vertex mapping to the second.
pub fn ex4_b111_displayed() -> QuiverPresentation {
    parse(
        "vertex c1\nvertex c2\nvertex c3\nvertex c4\nvertex c5\nvertex x\n\
         arrow p1 c1 c2\narrow p2 c2 c3\narrow p3 c3 c4\narrow p4 c4 c5\narrow r x c2\n",
    )
}

/// Named fixture algebras used by the sweeps over "all fixtures".
pub fn all_algebras() -> Vec<(&'static str, Algebra)> {
    vec![
        ("a2", a2()),
        ("dual-numbers", dual_numbers()),
        ("nakayama-selfinjective", selfinjective_nakayama()),
        ("ex1", ex1().gamma().clone()),
        ("ex2-n3", ex2(3).gamma().clone()),
        ("ex3", ex3()),
        ("ex4", ex4().algebra.clone()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::quiver_isomorphic;

    #[test]
    fn displayed_gammas_match() {
        let g = ex1();
        assert_eq!(g.gamma().dim(), 12);
        assert!(quiver_isomorphic(g.gamma(), &build(&ex1_gamma_displayed())).unwrap());
        let g4 = ex4();
        assert!(quiver_isomorphic(&g4.algebra, &build(&ex4_gamma_displayed())).unwrap());
        assert_eq!(ex3().dim(), 9);
        assert_eq!(selfinjective_nakayama().dim(), 6);
    }
}
