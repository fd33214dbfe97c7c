//! Quivers with relations and their finite-dimensional quotients.
//!
//! A relation word `a*b*c` is the composite `a∘b∘c`: `c` is applied first, so
//! it requires `target(c) = source(b)` and `target(b) = source(a)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::{Algebra, ArrowInfo, BasisPath, SparseVec};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar};

/// Default bound on path length when building an algebra.
pub const DEFAULT_PATH_CAP: usize = 30;

/// A linear combination of path words, each word written last-applied first.
pub type Relation = Vec<(Scalar, Vec<usize>)>;

#[derive(Clone, Debug, PartialEq)]
pub struct QuiverPresentation {
    pub field: FieldSpec,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowInfo>,
    pub relations: Vec<Relation>,
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

impl QuiverPresentation {
    pub fn new(field: FieldSpec) -> QuiverPresentation {
        QuiverPresentation { field, vertices: Vec::new(), arrows: Vec::new(), relations: Vec::new() }
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<usize> {
        if self.vertex_index(label).is_some() {
            return Err(Error::InvalidPresentation(format!("duplicate vertex {}", label)));
        }
        self.vertices.push(label.to_string());
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<usize> {
        if self.arrow_index(name).is_some() {
            return Err(Error::InvalidPresentation(format!("duplicate arrow {}", name)));
        }
        if !valid_arrow_name(name) {
            return Err(Error::InvalidPresentation(format!("bad arrow name {:?}", name)));
        }
        let s = self
            .vertex_index(source)
            .ok_or_else(|| Error::InvalidPresentation(format!("unknown vertex {}", source)))?;
        let t = self
            .vertex_index(target)
            .ok_or_else(|| Error::InvalidPresentation(format!("unknown vertex {}", target)))?;
        self.arrows.push(ArrowInfo { name: name.to_string(), source: s, target: t });
        Ok(self.arrows.len() - 1)
    }

    /// Adds a relation written like `a*b - c*d` or `2 a*b + 1/3 c*d`.
    pub fn add_relation_str(&mut self, text: &str) -> Result<()> {
        let rel = self.parse_relation(text, 1, 1)?;
        self.relations.push(rel);
        Ok(())
    }

    pub fn add_relation(&mut self, rel: Relation) -> Result<()> {
        self.check_relation(&rel).map_err(Error::InvalidPresentation)?;
        self.relations.push(rel);
        Ok(())
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Source and target of a word, or `None` if it is empty or not composable.
    pub fn word_ends(&self, word: &[usize]) -> Option<(usize, usize)> {
        let first = word.first()?;
        for w in word.windows(2) {
            if self.arrows[w[1]].target != self.arrows[w[0]].source {
                return None;
            }
        }
        Some((self.arrows[*word.last().unwrap()].source, self.arrows[*first].target))
    }

    fn check_relation(&self, rel: &Relation) -> std::result::Result<(), String> {
        let mut ends = None;
        for (_, w) in rel {
            if w.len() < 2 {
                return Err("relation words must have length at least 2".into());
            }
            let e = self.word_ends(w).ok_or_else(|| format!("word {} is not composable", self.word_text(w)))?;
            if ends.is_some_and(|x| x != e) {
                return Err("words of one relation must share source and target".into());
            }
            ends = Some(e);
        }
        Ok(())
    }

    fn word_text(&self, w: &[usize]) -> String {
        w.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
    }

    fn parse_relation(&self, text: &str, line: usize, col0: usize) -> Result<Relation> {
        let f = self.field;
        let mut terms: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        let mut order: Vec<Vec<usize>> = Vec::new();
        let mut sign = f.one();
        let mut coef: Option<Scalar> = None;
        let mut expect_term = true;
        for (col, tok) in tokens(text) {
            let col = col + col0;
            match tok {
                "+" | "-" => {
                    if !expect_term && coef.is_some() {
                        return Err(parse_err(line, col, "coefficient without a word"));
                    }
                    if tok == "-" {
                        sign = sign.neg_ref();
                    }
                    expect_term = true;
                }
                _ => {
                    if !expect_term && coef.is_none() {
                        return Err(parse_err(line, col, "expected '+' or '-' between terms"));
                    }
                    let mut parts: Vec<&str> = tok.split('*').collect();
                    if let Some(c) = f.parse(parts[0]) {
                        if coef.is_some() {
                            return Err(parse_err(line, col, "two coefficients in a row"));
                        }
                        let c = sign.mul_ref(&c);
                        parts.remove(0);
                        if parts.is_empty() {
                            coef = Some(c);
                            expect_term = false;
                            continue;
                        }
                        coef = Some(c);
                    }
                    let mut word = Vec::new();
                    for p in parts {
                        let a = self
                            .arrow_index(p)
                            .ok_or_else(|| parse_err(line, col, format!("unknown arrow {:?}", p)))?;
                        word.push(a);
                    }
                    if word.len() < 2 {
                        return Err(parse_err(line, col, "relation words must have length at least 2"));
                    }
                    if self.word_ends(&word).is_none() {
                        return Err(parse_err(line, col, format!("word {} is not composable", tok)));
                    }
                    let c = coef.take().unwrap_or_else(|| sign.clone());
                    let entry = terms.entry(word.clone()).or_insert_with(|| {
                        order.push(word.clone());
                        f.zero()
                    });
                    *entry = entry.add_ref(&c);
                    sign = f.one();
                    expect_term = false;
                }
            }
        }
        if expect_term || coef.is_some() {
            return Err(parse_err(line, col0 + text.len(), "relation ends without a word"));
        }
        let rel: Relation = order
            .into_iter()
            .filter_map(|w| {
                let c = terms[&w].clone();
                (!c.is_zero()).then_some((c, w))
            })
            .collect();
        if rel.is_empty() {
            return Err(parse_err(line, col0, "relation is zero"));
        }
        self.check_relation(&rel).map_err(|m| parse_err(line, col0, m))?;
        Ok(rel)
    }

    /// Parses the line-oriented quiver format.
    pub fn parse(text: &str) -> Result<QuiverPresentation> {
        let mut p = QuiverPresentation::new(FieldSpec::Rationals);
        let mut seen_other = false;
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let body = raw.split('#').next().unwrap_or("");
            let toks: Vec<(usize, &str)> = tokens(body).into_iter().map(|(c, t)| (c + 1, t)).collect();
            let Some(&(kcol, key)) = toks.first() else { continue };
            let args = &toks[1..];
            match key {
                "field" => {
                    if seen_other {
                        return Err(parse_err(line, kcol, "field must precede vertices and arrows"));
                    }
                    p.field = match args {
                        [(_, "Q")] => FieldSpec::Rationals,
                        [(_, "F"), (c, n)] => {
                            let n: u64 = n.parse().map_err(|_| parse_err(line, *c, "expected a prime"))?;
                            FieldSpec::prime(n)
                                .ok_or_else(|| parse_err(line, *c, format!("{} is not a supported prime", n)))?
                        }
                        _ => return Err(parse_err(line, kcol, "expected 'field Q' or 'field F <p>'")),
                    };
                }
                "vertex" => {
                    seen_other = true;
                    let [(c, label)] = args else {
                        return Err(parse_err(line, kcol, "expected 'vertex <label>'"));
                    };
                    p.add_vertex(label).map_err(|e| parse_err(line, *c, e.to_string()))?;
                }
                "arrow" => {
                    seen_other = true;
                    let [(c, name), (cs, s), (ct, t)] = args else {
                        return Err(parse_err(line, kcol, "expected 'arrow <name> <source> <target>'"));
                    };
                    if p.vertex_index(s).is_none() {
                        return Err(parse_err(line, *cs, format!("unknown vertex {}", s)));
                    }
                    if p.vertex_index(t).is_none() {
                        return Err(parse_err(line, *ct, format!("unknown vertex {}", t)));
                    }
                    p.add_arrow(name, s, t).map_err(|e| parse_err(line, *c, e.to_string()))?;
                }
                "relation" => {
                    seen_other = true;
                    let start = args.first().map(|x| x.0).ok_or_else(|| parse_err(line, kcol, "empty relation"))?;
                    let rel = p.parse_relation(&body[start - 1..], line, start - 1)?;
                    p.relations.push(rel);
                }
                other => return Err(parse_err(line, kcol, format!("unknown directive {:?}", other))),
            }
        }
        Ok(p)
    }

    /// Writes the presentation in the format read by [`QuiverPresentation::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "field {}", self.field).unwrap();
        for v in &self.vertices {
            writeln!(out, "vertex {}", v).unwrap();
        }
        for a in &self.arrows {
            writeln!(out, "arrow {} {} {}", a.name, self.vertices[a.source], self.vertices[a.target]).unwrap();
        }
        for r in &self.relations {
            let mut line = String::from("relation");
            for (k, (c, w)) in r.iter().enumerate() {
                let (neg, mag) = if c.is_negative() { (true, c.neg_ref()) } else { (false, c.clone()) };
                if k > 0 {
                    line.push_str(if neg { " -" } else { " +" });
                } else if neg {
                    line.push_str(" -");
                }
                if !mag.is_one() {
                    write!(line, " {}", mag).unwrap();
                }
                write!(line, " {}", self.word_text(w)).unwrap();
            }
            writeln!(out, "{}", line).unwrap();
        }
        out
    }

    pub fn with_field(&self, field: FieldSpec) -> Result<QuiverPresentation> {
        let mut p = self.clone();
        p.field = field;
        for r in &mut p.relations {
            for (c, _) in r.iter_mut() {
                let q = c
                    .to_rational()
                    .ok_or_else(|| Error::InvalidPresentation("coefficients already reduced mod p".into()))?;
                *c = field.from_rational(&q).ok_or_else(|| {
                    Error::InvalidPresentation(format!("coefficient {} is undefined in {}", c, field))
                })?;
            }
            r.retain(|(c, _)| !c.is_zero());
        }
        p.relations.retain(|r| !r.is_empty());
        Ok(p)
    }

    /// The algebra `KQ/I` with a normal-form path basis. Terminates at the
    /// first length `L` with every path of length `L` in `I + rad^{L+1}`.
    pub fn build_algebra(&self, cap: usize) -> Result<Algebra> {
        for rel in &self.relations {
            self.check_relation(rel).map_err(Error::InvalidPresentation)?;
        }
        let mut level: Vec<Vec<usize>> = Vec::new();
        let mut all: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
        for a in 0..self.arrows.len() {
            level.push(vec![a]);
        }
        all.push(level.clone());
        for len in 1..=cap + 1 {
            if let Some(basis) = self.try_length(len, &all)? {
                return self.assemble(basis, len);
            }
            let mut next = Vec::new();
            for w in &all[len] {
                for a in 0..self.arrows.len() {
                    if self.arrows[a].source == self.arrows[w[0]].target {
                        let mut x = vec![a];
                        x.extend_from_slice(w);
                        next.push(x);
                    }
                }
            }
            all.push(next);
        }
        Err(Error::CapExceeded { what: "path length".into(), cap })
    }

    fn ends_of(&self, w: &[usize]) -> (usize, usize) {
        (self.arrows[*w.last().unwrap()].source, self.arrows[w[0]].target)
    }

    /// With `all[l]` the paths of length `l` (`l ≥ 1`), tests whether all
    /// paths of length `len` vanish modulo `I + rad^{len+1}`; if so returns the
    /// reduction data per vertex pair.
    fn try_length(&self, len: usize, all: &[Vec<Vec<usize>>]) -> Result<Option<Reduction>> {
        let f = self.field;
        let n = self.vertices.len();
        // Columns per pair: longest and lexicographically latest first, so
        // survivors are short and early.
        let mut cols: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
        for l in (1..=len).rev() {
            let mut words = all[l].clone();
            words.sort();
            words.reverse();
            for w in words {
                cols.entry(self.ends_of(&w)).or_default().push(w);
            }
        }
        let mut gens: BTreeMap<(usize, usize), Vec<BTreeMap<Vec<usize>, Scalar>>> = BTreeMap::new();
        for rel in &self.relations {
            let rmin = rel.iter().map(|(_, w)| w.len()).min().unwrap();
            if rmin > len {
                continue;
            }
            let (rs, rt) = self.ends_of(&rel[0].1);
            // u ∘ r ∘ v with |u| + |v| + rmin ≤ len.
            let mut lefts: Vec<Vec<usize>> = vec![Vec::new()];
            let mut rights: Vec<Vec<usize>> = vec![Vec::new()];
            for l in 1..=len - rmin {
                lefts.extend(all[l].iter().filter(|u| self.arrows[*u.last().unwrap()].source == rt).cloned());
                rights.extend(all[l].iter().filter(|v| self.arrows[v[0]].target == rs).cloned());
            }
            for u in &lefts {
                for v in &rights {
                    if u.len() + v.len() + rmin > len {
                        continue;
                    }
                    let mut g = BTreeMap::new();
                    for (c, w) in rel {
                        let total = u.len() + w.len() + v.len();
                        if total > len {
                            continue;
                        }
                        let mut x = u.clone();
                        x.extend_from_slice(w);
                        x.extend_from_slice(v);
                        let e: &mut Scalar = g.entry(x).or_insert_with(|| f.zero());
                        *e = e.add_ref(c);
                    }
                    g.retain(|_, c: &mut Scalar| !c.is_zero());
                    if g.is_empty() {
                        continue;
                    }
                    let s = if v.is_empty() { rs } else { self.arrows[*v.last().unwrap()].source };
                    let t = if u.is_empty() { rt } else { self.arrows[u[0]].target };
                    gens.entry((s, t)).or_default().push(g);
                }
            }
        }
        let mut red = Reduction { normal: BTreeMap::new(), survivors: vec![vec![Vec::new(); n]; n] };
        for (&(s, t), words) in &cols {
            let index: BTreeMap<&Vec<usize>, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let rows: Vec<Vec<Scalar>> = gens
                .get(&(s, t))
                .map(|gs| {
                    gs.iter()
                        .map(|g| {
                            let mut row = vec![f.zero(); words.len()];
                            for (w, c) in g {
                                row[index[w]] = c.clone();
                            }
                            row
                        })
                        .collect()
                })
                .unwrap_or_default();
            let m = Matrix::from_rows(f, rows, words.len());
            let rr = m.rref();
            let mut is_pivot = vec![false; words.len()];
            for &p in &rr.pivots {
                is_pivot[p] = true;
            }
            for (r, &p) in rr.pivots.iter().enumerate() {
                let w = &words[p];
                let row = rr.reduced.row(r);
                let tail: Vec<(Vec<usize>, Scalar)> = (0..words.len())
                    .filter(|&j| j != p && !row[j].is_zero())
                    .map(|j| (words[j].clone(), row[j].neg_ref()))
                    .collect();
                if w.len() == len && !tail.is_empty() {
                    return Ok(None);
                }
                red.normal.insert(w.clone(), tail);
            }
            for (j, w) in words.iter().enumerate() {
                if !is_pivot[j] {
                    if w.len() == len {
                        return Ok(None);
                    }
                    red.survivors[s][t].push(w.clone());
                }
            }
        }
        for ws in red.survivors.iter_mut().flatten() {
            ws.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        }
        Ok(Some(red))
    }

    fn assemble(&self, red: Reduction, len: usize) -> Result<Algebra> {
        let f = self.field;
        let n = self.vertices.len();
        let mut basis: Vec<BasisPath> = (0..n).map(|v| BasisPath { source: v, target: v, word: Vec::new() }).collect();
        let mut by_len: Vec<(usize, usize, Vec<usize>)> = Vec::new();
        for s in 0..n {
            for t in 0..n {
                for w in &red.survivors[s][t] {
                    by_len.push((s, t, w.clone()));
                }
            }
        }
        by_len.sort_by(|a, b| a.2.len().cmp(&b.2.len()).then_with(|| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2))));
        for (s, t, w) in by_len {
            basis.push(BasisPath { source: s, target: t, word: w });
        }
        // Arrows must appear as survivors: relations have length ≥ 2.
        let index: BTreeMap<Vec<usize>, usize> =
            basis.iter().enumerate().filter(|(_, b)| !b.word.is_empty()).map(|(i, b)| (b.word.clone(), i)).collect();
        let normal_form = |w: Vec<usize>| -> SparseVec {
            if w.len() >= len {
                return Vec::new();
            }
            if let Some(&i) = index.get(&w) {
                return vec![(i, f.one())];
            }
            match red.normal.get(&w) {
                Some(tail) => tail.iter().map(|(x, c)| (index[x], c.clone())).collect(),
                None => Vec::new(),
            }
        };
        let nb = basis.len();
        let mut mult = vec![vec![Vec::new(); nb]; nb];
        for i in 0..nb {
            for j in 0..nb {
                if basis[i].source != basis[j].target {
                    continue;
                }
                mult[i][j] = if basis[i].word.is_empty() {
                    vec![(j, f.one())]
                } else if basis[j].word.is_empty() {
                    vec![(i, f.one())]
                } else {
                    let mut w = basis[i].word.clone();
                    w.extend_from_slice(&basis[j].word);
                    let mut v = normal_form(w);
                    v.sort_by_key(|x| x.0);
                    v
                };
            }
        }
        Algebra::from_parts(f, self.vertices.clone(), self.arrows.clone(), basis, mult)
    }
}

struct Reduction {
    /// Non-surviving paths of length below the bound, as combinations of survivors.
    normal: BTreeMap<Vec<usize>, Vec<(Vec<usize>, Scalar)>>,
    survivors: Vec<Vec<Vec<Vec<usize>>>>,
}

fn valid_arrow_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// Whitespace tokens with their 0-based byte columns; a leading `+` or `-` is
/// always its own token.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i <= bytes.len() {
        let c = bytes.get(i).copied();
        match c {
            Some(b) if !b.is_ascii_whitespace() => {
                if start.is_none() {
                    if b == b'+' || b == b'-' {
                        out.push((i, &text[i..i + 1]));
                        i += 1;
                        continue;
                    }
                    start = Some(i);
                }
            }
            _ => {
                if let Some(s) = start.take() {
                    out.push((s, &text[s..i]));
                }
            }
        }
        i += 1;
    }
    out
}

/// Linear `A_n` (`1 → 2 → ⋯ → n`, arrows `a1, …`) modulo all paths of length `l`.
pub fn linear_quiver(field: FieldSpec, n: usize, l: Option<usize>) -> QuiverPresentation {
    let mut p = QuiverPresentation::new(field);
    for v in 1..=n {
        p.add_vertex(&v.to_string()).unwrap();
    }
    for v in 1..n {
        p.add_arrow(&format!("a{}", v), &v.to_string(), &(v + 1).to_string()).unwrap();
    }
    if let Some(l) = l {
        for start in 0..n.saturating_sub(l) {
            let word: Vec<usize> = (start..start + l).rev().collect();
            p.relations.push(vec![(field.one(), word)]);
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQUARE: &str = "vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow b 1 2\narrow a 2 4\narrow d 1 3\narrow c 3 4\nrelation a*b - c*d\n";

    #[test]
    fn commutative_square_has_dimension_nine() {
        let p = QuiverPresentation::parse(SQUARE).unwrap();
        let a = p.build_algebra(DEFAULT_PATH_CAP).unwrap();
        assert_eq!(a.dim(), 9);
        assert!(a.check_associative());
        assert_eq!(a.cartan()[0][3], 1);
    }

    #[test]
    fn truncated_linear_quiver() {
        let a = linear_quiver(FieldSpec::Rationals, 5, Some(3)).build_algebra(30).unwrap();
        assert_eq!(a.dim(), 12);
        assert_eq!(a.loewy_length(), 3);
    }

    #[test]
    fn dual_numbers() {
        let p = QuiverPresentation::parse("vertex 1\narrow x 1 1\nrelation x*x\n").unwrap();
        assert_eq!(p.build_algebra(30).unwrap().dim(), 2);
    }

    #[test]
    fn free_loop_exceeds_cap() {
        let p = QuiverPresentation::parse("vertex 1\narrow x 1 1\n").unwrap();
        assert!(matches!(p.build_algebra(5), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn rejects_short_relation() {
        let e = QuiverPresentation::parse("vertex 1\narrow x 1 1\nrelation x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn rejects_non_composable_word() {
        let e = QuiverPresentation::parse("vertex 1\nvertex 2\narrow a 1 2\nrelation a*a\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }));
    }

    #[test]
    fn text_round_trip() {
        let p = QuiverPresentation::parse(SQUARE).unwrap();
        let q = QuiverPresentation::parse(&p.to_text()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn nonhomogeneous_relation() {
        // x*x = x*x*x on a loop: the completion is K[x]/x².
        let p = QuiverPresentation::parse("vertex 1\narrow x 1 1\nrelation x*x - x*x*x\n").unwrap();
        assert_eq!(p.build_algebra(30).unwrap().dim(), 2);
    }

    #[test]
    fn opposite_reverses_arrow() {
        let a = linear_quiver(FieldSpec::Rationals, 2, None).build_algebra(30).unwrap();
        let o = a.opposite();
        assert_eq!(o.arrow_source(0), 1);
        assert_eq!(o.opposite(), a);
    }
}
