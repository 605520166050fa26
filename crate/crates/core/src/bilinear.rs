//! Bilinear maps `ℝⁿ × ℝⁿ → ℝⁿ` with exact coefficients.
//!
//! # Index convention
//!
//! A [`Bilinear`] stores a rank-3 array `c[k][i][j]` with
//!
//! ```text
//! f(E_i, E_j) = Σ_k c[k][i][j] E_k
//! ```
//!
//! `k` is the value index, `i` the first argument and `j` the second. Every
//! other module (group laws, frame coordinates `x^{kl}_j`, Hessians of jets)
//! uses this convention; for a frame the coefficient `x^{kl}_j` lives at
//! `c[k][l][j]`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bilinear {
    n: usize,
    coeffs: Vec<Rational>,
}

impl Bilinear {
    pub fn zero(n: usize) -> Self {
        Bilinear {
            n,
            coeffs: vec![Rational::zero(); n * n * n],
        }
    }

    /// Builds from a flat `c[k][i][j]` array laid out with `j` fastest.
    pub fn from_vec(n: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                got: coeffs.len(),
            });
        }
        Ok(Bilinear { n, coeffs })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut coeffs = Vec::with_capacity(n * n * n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    coeffs.push(f(k, i, j));
                }
            }
        }
        Bilinear { n, coeffs }
    }

    pub fn from_nested(nested: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let n = nested.len();
        let mut coeffs = Vec::with_capacity(n * n * n);
        for plane in nested {
            if plane.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: plane.len(),
                });
            }
            for row in plane {
                if row.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        got: row.len(),
                    });
                }
                coeffs.extend(row);
            }
        }
        Ok(Bilinear { n, coeffs })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Rational>>> {
        let n = self.n;
        (0..n)
            .map(|k| {
                (0..n)
                    .map(|i| (0..n).map(|j| self.get(k, i, j).clone()).collect())
                    .collect()
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn idx(&self, k: usize, i: usize, j: usize) -> usize {
        (k * self.n + i) * self.n + j
    }

    #[inline]
    pub fn get(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.coeffs[self.idx(k, i, j)]
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, v: Rational) {
        let idx = self.idx(k, i, j);
        self.coeffs[idx] = v;
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// `c[k][i][j] = c[k][j][i]` for all indices.
    pub fn is_symmetric(&self) -> bool {
        self.check_pairs(|a, b| a == b)
    }

    /// `c[k][i][j] = -c[k][j][i]` for all indices (diagonal entries vanish).
    pub fn is_skew(&self) -> bool {
        self.check_pairs(|a, b| *a == -b)
    }

    fn check_pairs(&self, pred: impl Fn(&Rational, &Rational) -> bool) -> bool {
        let n = self.n;
        (0..n).all(|k| (0..n).all(|i| (i..n).all(|j| pred(self.get(k, i, j), self.get(k, j, i)))))
    }

    /// `f^t(E_i, E_j) = f(E_j, E_i)`.
    pub fn transpose(&self) -> Bilinear {
        Bilinear::from_fn(self.n, |k, i, j| self.get(k, j, i).clone())
    }

    /// `f_s = (f + f^t) / 2`.
    pub fn sym_part(&self) -> Bilinear {
        Bilinear::from_fn(self.n, |k, i, j| (self.get(k, i, j) + self.get(k, j, i)).half())
    }

    /// `f_a = (f - f^t) / 2`.
    pub fn skew_part(&self) -> Bilinear {
        Bilinear::from_fn(self.n, |k, i, j| (self.get(k, i, j) - self.get(k, j, i)).half())
    }

    pub fn add(&self, rhs: &Bilinear) -> Bilinear {
        assert_eq!(self.n, rhs.n, "bilinear dimension mismatch");
        Bilinear {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Bilinear) -> Bilinear {
        assert_eq!(self.n, rhs.n, "bilinear dimension mismatch");
        Bilinear {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Bilinear {
        Bilinear {
            n: self.n,
            coeffs: self.coeffs.iter().map(|v| -v).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Bilinear {
        Bilinear {
            n: self.n,
            coeffs: self.coeffs.iter().map(|v| v * s).collect(),
        }
    }

    /// `a ∘ f`: `out[l][i][j] = Σ_k a[l][k] c[k][i][j]`.
    pub fn post_compose(a: &SquareMatrix, f: &Bilinear) -> Bilinear {
        let n = f.n;
        assert_eq!(a.n(), n, "dimension mismatch");
        let mut out = Bilinear::zero(n);
        for l in 0..n {
            for k in 0..n {
                let alk = a.get(l, k);
                if alk.is_zero() {
                    continue;
                }
                for ij in 0..n * n {
                    let c = &f.coeffs[k * n * n + ij];
                    if !c.is_zero() {
                        out.coeffs[l * n * n + ij] += alk * c;
                    }
                }
            }
        }
        out
    }

    /// `f(a, b)`: `out[k][i][j] = Σ_{p,q} c[k][p][q] a[p][i] b[q][j]`.
    pub fn pre_compose(f: &Bilinear, a: &SquareMatrix, b: &SquareMatrix) -> Bilinear {
        let n = f.n;
        assert_eq!(a.n(), n, "dimension mismatch");
        assert_eq!(b.n(), n, "dimension mismatch");
        // Contract the first argument, then the second.
        let mut first = Bilinear::zero(n);
        for k in 0..n {
            for p in 0..n {
                for q in 0..n {
                    let c = f.get(k, p, q);
                    if c.is_zero() {
                        continue;
                    }
                    for i in 0..n {
                        let api = a.get(p, i);
                        if !api.is_zero() {
                            let idx = first.idx(k, i, q);
                            first.coeffs[idx] += c * api;
                        }
                    }
                }
            }
        }
        let mut out = Bilinear::zero(n);
        for k in 0..n {
            for i in 0..n {
                for q in 0..n {
                    let t = first.get(k, i, q);
                    if t.is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let bqj = b.get(q, j);
                        if !bqj.is_zero() {
                            let idx = out.idx(k, i, j);
                            out.coeffs[idx] += t * bqj;
                        }
                    }
                }
            }
        }
        out
    }

    /// Evaluates `f(u, v)`.
    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.n;
        (0..n)
            .map(|k| {
                let mut acc = Rational::zero();
                for i in 0..n {
                    if u[i].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        acc += self.get(k, i, j) * &u[i] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }
}

impl fmt::Debug for Bilinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_nested()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct BilinearDoc {
    n: usize,
    coeffs: Vec<Vec<Vec<Rational>>>,
}

impl Serialize for Bilinear {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BilinearDoc {
            n: self.n,
            coeffs: self.to_nested(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Bilinear {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = BilinearDoc::deserialize(deserializer)?;
        let f = Bilinear::from_nested(doc.coeffs).map_err(serde::de::Error::custom)?;
        if f.n != doc.n {
            return Err(serde::de::Error::custom(Error::DimensionMismatch {
                expected: doc.n,
                got: f.n,
            }));
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(n: usize, k: usize, i: usize, j: usize) -> Bilinear {
        let mut f = Bilinear::zero(n);
        f.set(k, i, j, Rational::one());
        f
    }

    fn sample3() -> Bilinear {
        Bilinear::from_fn(3, |k, i, j| Rational::new((k * 9 + i * 3 + j) as i64 - 13, 1 + (i % 2) as i64))
    }

    #[test]
    fn transpose_swaps_arguments() {
        // 1-based c[1][1][2] is c[0][0][1] here
        let f = unit(2, 0, 0, 1);
        assert_eq!(f.transpose(), unit(2, 0, 1, 0));
    }

    #[test]
    fn transpose_loop_oracle() {
        let f = sample3();
        let t = f.transpose();
        for k in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(t.get(k, i, j), f.get(k, j, i));
                }
            }
        }
        assert_eq!(t.transpose(), f);
    }

    #[test]
    fn symmetric_is_its_own_transpose() {
        let s = sample3().sym_part();
        assert!(s.is_symmetric());
        assert_eq!(s.transpose(), s);
    }

    #[test]
    fn sym_part_by_hand() {
        let s = unit(2, 0, 0, 1).sym_part();
        let mut expected = Bilinear::zero(2);
        expected.set(0, 0, 1, Rational::new(1, 2));
        expected.set(0, 1, 0, Rational::new(1, 2));
        assert_eq!(s, expected);
    }

    #[test]
    fn decomposition_parts() {
        let f = sample3();
        let s = f.sym_part();
        let a = f.skew_part();
        assert!(s.is_symmetric());
        assert!(a.is_skew());
        assert_eq!(s.add(&a), f);
        assert!(a.sym_part().is_zero());
        assert!(s.skew_part().is_zero());
    }

    #[test]
    fn post_compose_identity_and_scaling() {
        let f = sample3();
        assert_eq!(Bilinear::post_compose(&SquareMatrix::identity(3), &f), f);
        let two = SquareMatrix::identity(3).scale(&Rational::from_int(2));
        assert_eq!(Bilinear::post_compose(&two, &f), f.scale(&Rational::from_int(2)));
    }

    #[test]
    fn pre_compose_identity() {
        let f = sample3();
        let i = SquareMatrix::identity(3);
        assert_eq!(Bilinear::pre_compose(&f, &i, &i), f);
    }

    #[test]
    fn pre_compose_keeps_skew_for_equal_arguments() {
        let f = sample3().skew_part();
        let a = SquareMatrix::from_ints(&[&[1, 2, 0], &[0, 1, -1], &[3, 0, 1]]);
        assert!(Bilinear::pre_compose(&f, &a, &a).is_skew());
    }

    #[test]
    fn eval_matches_coefficients() {
        let f = sample3();
        let e = |i: usize| {
            let mut v = vec![Rational::zero(); 3];
            v[i] = Rational::one();
            v
        };
        let val = f.eval(&e(2), &e(1));
        for k in 0..3 {
            assert_eq!(&val[k], f.get(k, 2, 1));
        }
    }

    #[test]
    fn json_has_explicit_n() {
        let f = unit(2, 1, 0, 1);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"coeffs":[[["0","0"],["0","0"]],[["0","1"],["0","0"]]]}"#
        );
        assert_eq!(serde_json::from_str::<Bilinear>(&s).unwrap(), f);
        let bad = r#"{"n":3,"coeffs":[[["0","0"],["0","0"]],[["0","1"],["0","0"]]]}"#;
        assert!(serde_json::from_str::<Bilinear>(bad).is_err());
    }
}
