//! Random exact elements for property suites.
//!
//! Matrix entries are integers in `[-3, 3]`, resampled until the determinant is
//! nonzero. Bilinear coefficients and point coordinates are `p/q` with
//! `p ∈ [-4, 4]` and `q ∈ {1, 2}`.

use rand::Rng;

use crate::bilinear::Bilinear;
use crate::matrix::{GlMatrix, SquareMatrix};
use crate::rational::Rational;

pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let num = rng.gen_range(-4..=4);
    let den = rng.gen_range(1..=2);
    Rational::new(num, den)
}

pub fn matrix<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SquareMatrix {
    let entries = (0..n * n)
        .map(|_| Rational::from_int(rng.gen_range(-3..=3)))
        .collect();
    SquareMatrix::from_vec(n, entries).expect("n*n entries")
}

pub fn gl<R: Rng + ?Sized>(n: usize, rng: &mut R) -> GlMatrix {
    loop {
        if let Ok(g) = GlMatrix::new(matrix(n, rng)) {
            return g;
        }
    }
}

pub fn bilinear<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Bilinear {
    Bilinear::from_fn(n, |_, _, _| small_rational(rng))
}

pub fn symmetric<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Bilinear {
    bilinear(n, rng).sym_part()
}

pub fn skew<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Bilinear {
    bilinear(n, rng).skew_part()
}

pub fn point<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Rational> {
    (0..n).map(|_| small_rational(rng)).collect()
}
