use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};

/// Characteristic polynomial `det(xI - m)`, coefficients from constant term up.
/// Hessenberg reduction, valid in every characteristic.
pub fn char_poly(m: &Matrix) -> Vec<Scalar> {
    assert!(m.is_square());
    let f = m.field();
    let n = m.rows();
    let mut h: Vec<Vec<Scalar>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    for k in 1..n.saturating_sub(1) {
        let Some(i) = (k..n).find(|&i| !h[i][k - 1].is_zero()) else { continue };
        if i != k {
            h.swap(i, k);
            for row in h.iter_mut() {
                row.swap(i, k);
            }
        }
        let t_inv = h[k][k - 1].inv();
        for i in k + 1..n {
            let u = h[i][k - 1].mul_ref(&t_inv);
            if u.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = h[k][j].clone();
                h[i][j] = h[i][j].sub_mul(&u, &v);
            }
            for row in h.iter_mut() {
                let v = row[i].clone();
                row[k] = row[k].add_ref(&u.mul_ref(&v));
            }
        }
    }
    // p[j] is the characteristic polynomial of the leading j×j block.
    let mut p: Vec<Vec<Scalar>> = vec![vec![f.one()]];
    for mm in 1..=n {
        let hm = h[mm - 1][mm - 1].clone();
        let prev = &p[mm - 1];
        let mut next = vec![f.zero(); mm + 1];
        for (d, c) in prev.iter().enumerate() {
            next[d + 1] = next[d + 1].add_ref(c);
            next[d] = next[d].sub_mul(&hm, c);
        }
        let mut prod = f.one();
        for i in (1..mm).rev() {
            prod = prod.mul_ref(&h[i][i - 1]);
            let coef = h[i - 1][mm - 1].mul_ref(&prod);
            if coef.is_zero() {
                continue;
            }
            for (d, c) in p[i - 1].iter().enumerate() {
                next[d] = next[d].sub_mul(&coef, c);
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

fn eval(poly: &[Scalar], x: &Scalar, f: FieldSpec) -> Scalar {
    let mut acc = f.zero();
    for c in poly.iter().rev() {
        acc = acc.mul_ref(x).add_ref(c);
    }
    acc
}

fn divisors(n: &BigInt, limit: u64) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > limit {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// Distinct roots of `poly` lying in the field. Over ℚ this uses the rational
/// root theorem and gives up (returns what it found) when coefficients are too
/// large to factor by trial division; over small prime fields it is exhaustive.
pub fn rational_roots(poly: &[Scalar], f: FieldSpec) -> Vec<Scalar> {
    let mut poly: Vec<Scalar> = poly.to_vec();
    while poly.last().is_some_and(Scalar::is_zero) {
        poly.pop();
    }
    if poly.len() <= 1 {
        return Vec::new();
    }
    match f {
        FieldSpec::Prime(p) => {
            if p > 200_000 {
                return Vec::new();
            }
            (0..p as i64).map(|x| f.int(x)).filter(|x| eval(&poly, x, f).is_zero()).collect()
        }
        FieldSpec::Rationals => {
            let mut roots = Vec::new();
            if poly[0].is_zero() {
                roots.push(f.zero());
                while poly.first().is_some_and(Scalar::is_zero) {
                    poly.remove(0);
                }
                if poly.len() <= 1 {
                    return roots;
                }
            }
            let mut lcm = BigInt::one();
            for c in &poly {
                let (_, d) = c.num_den().unwrap();
                lcm = lcm.lcm(&d);
            }
            let ints: Vec<BigInt> = poly
                .iter()
                .map(|c| {
                    let (n, d) = c.num_den().unwrap();
                    n * (&lcm / d)
                })
                .collect();
            let a0 = &ints[0];
            let an = ints.last().unwrap();
            if a0.is_zero() {
                return roots;
            }
            let (Some(ps), Some(qs)) = (divisors(a0, 1_000_000_000_000), divisors(an, 1_000_000_000_000)) else {
                return roots;
            };
            let mut seen = std::collections::HashSet::new();
            for &pp in &ps {
                for &qq in &qs {
                    if pp.gcd(&qq) != 1 {
                        continue;
                    }
                    for sign in [1i64, -1] {
                        let (Ok(pi), Ok(qi)) = (i64::try_from(pp), i64::try_from(qq)) else { continue };
                        let x = f.frac(sign * pi, qi).unwrap();
                        if seen.insert(x.clone()) && eval(&poly, &x, f).is_zero() {
                            roots.push(x);
                        }
                    }
                }
            }
            roots
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_of_companion() {
        let q = FieldSpec::Rationals;
        // x^2 - 3x + 2 = (x-1)(x-2)
        let m = Matrix::from_ints(q, &[&[0, -2], &[1, 3]]);
        let p = char_poly(&m);
        assert_eq!(p, vec![q.int(2), q.int(-3), q.int(1)]);
        let mut r = rational_roots(&p, q);
        r.sort_by(|a, b| a.cmp_key(b));
        assert_eq!(r, vec![q.int(1), q.int(2)]);
    }

    #[test]
    fn char_poly_matches_trace_and_det() {
        let q = FieldSpec::Rationals;
        let m = Matrix::from_ints(q, &[&[1, 2, 0], &[3, -1, 4], &[0, 5, 2]]);
        let p = char_poly(&m);
        assert_eq!(p[2], m.trace().neg_ref());
        // det = 1*(-2-20) - 2*(6-0) = -34; constant term = -det
        assert_eq!(p[0], q.int(34));
    }

    #[test]
    fn irrational_roots_are_absent() {
        let q = FieldSpec::Rationals;
        assert!(rational_roots(&[q.int(-2), q.int(0), q.int(1)], q).is_empty());
    }
}
