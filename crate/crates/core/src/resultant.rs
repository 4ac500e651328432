//! Resultants via the Sylvester matrix and fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::{Poly, Rational};

/// Sylvester matrix of `f` (degree `m`) and `g` (degree `n`): `n` shifted
/// rows of `f`'s coefficients followed by `m` shifted rows of `g`'s, highest
/// degree first. Empty if either polynomial is zero.
pub fn sylvester_matrix(f: &Poly, g: &Poly) -> Vec<Vec<Rational>> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Vec::new();
    };
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, copies, degree) in [(f, n, m), (g, m, n)] {
        let desc = poly.coefficients_descending();
        for shift in 0..copies {
            let mut row = vec![Rational::zero(); size];
            row[shift..shift + degree + 1].clone_from_slice(&desc);
            rows.push(row);
        }
    }
    rows
}

/// Determinant of an integer matrix by Bareiss elimination. Every division
/// is exact, so entries stay integral.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Exact resultant `Res(f, g)`, the Sylvester determinant. Zero iff the two
/// polynomials share a complex root (or one of them is zero).
pub fn resultant(f: &Poly, g: &Poly) -> Rational {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Rational::zero();
    };
    // Clear denominators: Res(lf, mg) = l^n m^m Res(f, g).
    let (f_int, f_scale) = integral(f);
    let (g_int, g_scale) = integral(g);
    let matrix = sylvester_matrix(&f_int, &g_int)
        .into_iter()
        .map(|row| row.into_iter().map(|c| c.to_integer()).collect())
        .collect();
    let det = Rational::from_integer(bareiss_determinant(matrix));
    let scale: BigInt = Pow::pow(&f_scale, n) * Pow::pow(&g_scale, m);
    det / Rational::from_integer(scale)
}

fn integral(p: &Poly) -> (Poly, BigInt) {
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    (p.scale(&Rational::from_integer(lcm.clone())), lcm)
}
