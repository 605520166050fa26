//! Dense square matrices over [`Rational`] and invertible matrices ([`GlMatrix`]).
//!
//! Entries are row-major with the row as the value index and the column as the
//! argument index, so `a(E_i) = Σ_j a[j][i] E_j`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
        }
        m
    }

    /// Builds from row-major entries; `entries.len()` must be `n * n`.
    pub fn from_vec(n: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: entries.len(),
            });
        }
        Ok(SquareMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(SquareMatrix { n, entries })
    }

    /// Convenience constructor for integer matrices. Panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_int(v)).collect())
                .collect(),
        )
        .expect("square integer matrix")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Rational) {
        self.entries[row * self.n + col] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|r| {
            (0..self.n).all(|c| {
                let v = self.get(r, c);
                if r == c {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            })
        })
    }

    pub fn mul(&self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let mut out = SquareMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let lhs = self.get(r, k);
                if lhs.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let v = rhs.get(k, c);
                    if !v.is_zero() {
                        out.entries[r * n + c] += lhs * v;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        SquareMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> SquareMatrix {
        SquareMatrix {
            n: self.n,
            entries: self.entries.iter().map(|v| v * s).collect(),
        }
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.n, "vector dimension mismatch");
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c) * &v[c]).sum())
            .collect()
    }

    /// Determinant by Gaussian elimination with exact pivots.
    pub fn det(&self) -> Rational {
        let n = self.n;
        let mut m = self.entries.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for c in 0..n {
                    m.swap(pivot * n + c, col * n + c);
                }
                det = -det;
            }
            let p = m[col * n + col].clone();
            det = det * &p;
            let p_inv = p.recip().expect("nonzero pivot");
            for r in (col + 1)..n {
                if m[r * n + col].is_zero() {
                    continue;
                }
                let factor = &m[r * n + col] * &p_inv;
                for c in col..n {
                    let delta = &factor * &m[col * n + c];
                    m[r * n + c] -= &delta;
                }
            }
        }
        det
    }

    /// Gauss-Jordan inverse. Fails with [`Error::SingularMatrix`] when `det = 0`.
    pub fn inverse(&self) -> Result<SquareMatrix> {
        let n = self.n;
        let mut m = self.entries.clone();
        let mut inv = SquareMatrix::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[r * n + col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for c in 0..n {
                    m.swap(pivot * n + c, col * n + c);
                    inv.swap(pivot * n + c, col * n + c);
                }
            }
            let p_inv = m[col * n + col].recip().expect("nonzero pivot");
            for c in 0..n {
                m[col * n + c] = &m[col * n + c] * &p_inv;
                inv[col * n + c] = &inv[col * n + c] * &p_inv;
            }
            for r in 0..n {
                if r == col || m[r * n + col].is_zero() {
                    continue;
                }
                let factor = m[r * n + col].clone();
                for c in 0..n {
                    let dm = &factor * &m[col * n + c];
                    m[r * n + c] -= &dm;
                    let di = &factor * &inv[col * n + c];
                    inv[r * n + c] -= &di;
                }
            }
        }
        Ok(SquareMatrix { n, entries: inv })
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl Serialize for SquareMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SquareMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(deserializer)?;
        SquareMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// An element of `G¹(n) = GL(n, ℚ)`: a matrix together with its exact inverse.
///
/// Invertibility is checked once at construction; the inverse is carried along
/// so group laws never re-invert.
#[derive(Clone)]
pub struct GlMatrix {
    m: SquareMatrix,
    inv: SquareMatrix,
}

impl GlMatrix {
    pub fn new(m: SquareMatrix) -> Result<Self> {
        let inv = m.inverse()?;
        Ok(GlMatrix { m, inv })
    }

    pub fn identity(n: usize) -> Self {
        GlMatrix {
            m: SquareMatrix::identity(n),
            inv: SquareMatrix::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.m.n()
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.m
    }

    pub fn inverse_matrix(&self) -> &SquareMatrix {
        &self.inv
    }

    pub fn mul(&self, rhs: &GlMatrix) -> GlMatrix {
        GlMatrix {
            m: self.m.mul(&rhs.m),
            inv: rhs.inv.mul(&self.inv),
        }
    }

    pub fn inv(&self) -> GlMatrix {
        GlMatrix {
            m: self.inv.clone(),
            inv: self.m.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_identity()
    }
}

impl PartialEq for GlMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for GlMatrix {}

impl fmt::Debug for GlMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.m.fmt(f)
    }
}

impl Serialize for GlMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.m.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GlMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let m = SquareMatrix::deserialize(deserializer)?;
        GlMatrix::new(m).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_inverse() {
        let i = SquareMatrix::identity(3);
        assert_eq!(i.inverse().unwrap(), i);
    }

    #[test]
    fn diagonal_inverse() {
        let d = SquareMatrix::from_ints(&[&[2, 0], &[0, 3]]);
        let expected = SquareMatrix::diagonal(&[Rational::new(1, 2), Rational::new(1, 3)]);
        assert_eq!(d.inverse().unwrap(), expected);
    }

    #[test]
    fn singular_is_rejected() {
        let s = SquareMatrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.det(), Rational::zero());
        assert_eq!(s.inverse(), Err(Error::SingularMatrix));
        assert_eq!(GlMatrix::new(s).unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn det_with_row_swap() {
        // needs a pivot swap in the first column
        let m = SquareMatrix::from_ints(&[&[0, 1, 2], &[3, 0, 1], &[1, 1, 0]]);
        // cofactor expansion along the first row: 0*(0-1) - 1*(0-1) + 2*(3-0) = 7
        assert_eq!(m.det(), Rational::from_int(7));
    }

    #[test]
    fn inverse_multiplies_back() {
        let m = SquareMatrix::from_ints(&[&[2, -1, 0], &[1, 3, -2], &[0, 1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
    }

    #[test]
    fn json_row_major() {
        let m = SquareMatrix::from_rows(vec![
            vec![Rational::from_int(1), Rational::new(1, 2)],
            vec![Rational::zero(), Rational::from_int(-3)],
        ])
        .unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1","1/2"],["0","-3"]]"#);
        let back: SquareMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<SquareMatrix>(r#"[["1","2"],["3"]]"#).is_err());
    }
}
