use super::scalar::{FieldSpec, Scalar};

/// Incrementally built subspace of `K^n` that remembers how its echelon rows
/// arise from the inserted vectors, so coordinates can be read off.
#[derive(Clone, Debug)]
pub struct Span {
    field: FieldSpec,
    n: usize,
    /// Fully reduced echelon rows: pivot column, row, combination of inserted vectors.
    rows: Vec<(usize, Vec<Scalar>, Vec<Scalar>)>,
    inserted: usize,
}

impl Span {
    pub fn new(field: FieldSpec, n: usize) -> Span {
        Span { field, n, rows: Vec::new(), inserted: 0 }
    }

    /// Span of the given vectors (dependent ones are skipped).
    pub fn of(field: FieldSpec, n: usize, vectors: &[Vec<Scalar>]) -> Span {
        let mut s = Span::new(field, n);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Reduces `v` against the echelon rows; returns the remainder and the
    /// multiples subtracted per row.
    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        assert_eq!(v.len(), self.n, "vector length differs from ambient dimension");
        let mut w = v.to_vec();
        let mut mult = vec![self.field.zero(); self.rows.len()];
        for (k, (p, row, _)) in self.rows.iter().enumerate() {
            let c = w[*p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    w[j] = w[j].sub_mul(&c, x);
                }
            }
            mult[k] = c;
        }
        (w, mult)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).0.iter().all(Scalar::is_zero)
    }

    /// Inserts `v` if independent; returns whether it was added. Only added
    /// vectors count towards the coordinate system.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let (mut w, mult) = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = x.mul_ref(&inv);
            }
        }
        let idx = self.inserted;
        self.inserted += 1;
        for (_, _, combo) in self.rows.iter_mut() {
            combo.push(self.field.zero());
        }
        // combo(new) = (e_idx - Σ mult_k combo_k) / pivot
        let mut combo = vec![self.field.zero(); self.inserted];
        combo[idx] = self.field.one();
        for (k, (_, _, c)) in self.rows.iter().enumerate() {
            if mult[k].is_zero() {
                continue;
            }
            for (j, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    combo[j] = combo[j].sub_mul(&mult[k], x);
                }
            }
        }
        for x in combo.iter_mut() {
            if !x.is_zero() {
                *x = x.mul_ref(&inv);
            }
        }
        // Keep rows fully reduced in column p.
        for (_, row, c) in self.rows.iter_mut() {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            for (j, x) in w.iter().enumerate() {
                if !x.is_zero() {
                    row[j] = row[j].sub_mul(&f, x);
                }
            }
            for (j, x) in combo.iter().enumerate() {
                if !x.is_zero() {
                    c[j] = c[j].sub_mul(&f, x);
                }
            }
        }
        self.rows.push((p, w, combo));
        true
    }

    /// Coordinates of `v` with respect to the inserted (independent) vectors,
    /// in insertion order; `None` if `v` is outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (w, mult) = self.reduce(v);
        if !w.iter().all(Scalar::is_zero) {
            return None;
        }
        let mut out = vec![self.field.zero(); self.inserted];
        for (k, (_, _, c)) in self.rows.iter().enumerate() {
            if mult[k].is_zero() {
                continue;
            }
            for (j, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    out[j] = out[j].add_ref(&mult[k].mul_ref(x));
                }
            }
        }
        Some(out)
    }

    /// The remainder of `v` after reduction: zero iff `v` is in the span.
    pub fn remainder(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.reduce(v).0
    }

    /// Echelon basis vectors.
    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|(_, r, _)| r.clone()).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _, _)| *p).collect()
    }

    /// Standard basis vectors completing this span to the whole space.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.n];
        for (p, _, _) in &self.rows {
            is_pivot[*p] = true;
        }
        (0..self.n).filter(|&i| !is_pivot[i]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_recover_combination() {
        let q = FieldSpec::Rationals;
        let v1 = vec![q.int(1), q.int(2), q.int(0)];
        let v2 = vec![q.int(0), q.int(1), q.int(1)];
        let mut s = Span::new(q, 3);
        assert!(s.insert(&v1));
        assert!(s.insert(&v2));
        let dep: Vec<Scalar> = v1.iter().zip(&v2).map(|(a, b)| a.add_ref(&b.mul_ref(&q.int(3)))).collect();
        assert!(!s.insert(&dep));
        assert_eq!(s.coords(&dep).unwrap(), vec![q.int(1), q.int(3)]);
        assert!(s.coords(&[q.int(0), q.int(0), q.int(1)]).is_none());
        assert_eq!(s.complement_indices().len(), 1);
    }
}
