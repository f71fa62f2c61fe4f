//! Exact characteristic polynomials of adjacency matrices.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Polynomial with `i128` coefficients, `coeffs[i]` multiplying `x^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

impl IntPolynomial {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coeffs: Vec<i128>) -> IntPolynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// From coefficients listed highest degree first.
    pub fn from_descending(coeffs: &[i128]) -> IntPolynomial {
        IntPolynomial::new(coeffs.iter().rev().copied().collect())
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> i128 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn checked_mul(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Ok(IntPolynomial::new(Vec::new()));
        }
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow("polynomial product"))?;
                out[i + j] = out[i + j].checked_add(term).ok_or(Error::Overflow("polynomial product"))?;
            }
        }
        Ok(IntPolynomial::new(out))
    }

    pub fn checked_pow(&self, k: u32) -> Result<IntPolynomial> {
        let mut r = IntPolynomial::new(vec![1]);
        for _ in 0..k {
            r = r.checked_mul(self)?;
        }
        Ok(r)
    }

    /// Value at an integer point (Horner).
    pub fn eval(&self, x: i128) -> Result<i128> {
        self.coeffs.iter().rev().try_fold(0i128, |acc, &c| {
            acc.checked_mul(x).and_then(|v| v.checked_add(c)).ok_or(Error::Overflow("polynomial evaluation"))
        })
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    /// Coefficients highest degree first, as decimal strings so 128-bit values survive JSON.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().rev().map(|c| c.to_string()))
    }
}

fn checked_dot(row: &[i128], col: &[i128]) -> Result<i128> {
    row.iter().zip(col).try_fold(0i128, |acc, (&a, &b)| {
        a.checked_mul(b).and_then(|p| acc.checked_add(p)).ok_or(Error::Overflow("characteristic polynomial"))
    })
}

/// `det(xI - M)` for a square integer matrix, by Berkowitz's division-free
/// algorithm: the polynomial of each leading principal submatrix is obtained
/// from the previous one by a lower-triangular Toeplitz matrix.
pub fn char_poly_matrix(m: &[Vec<i128>]) -> Result<IntPolynomial> {
    let n = m.len();
    if n == 0 {
        return Ok(IntPolynomial::new(vec![1]));
    }
    // descending coefficients of the 1x1 leading block
    let mut poly = vec![1i128, -m[0][0]];
    for k in 1..n {
        // block of size k + 1: border row R, column C, corner a
        let row: Vec<i128> = m[k][..k].iter().map(|&x| -x).collect();
        let col: Vec<i128> = (0..k).map(|i| m[i][k]).collect();
        let mut items = vec![1i128, -m[k][k]];
        let mut power = col;
        for _ in 0..k {
            items.push(checked_dot(&row, &power)?);
            power = (0..k).map(|i| checked_dot(&m[i][..k], &power)).collect::<Result<Vec<i128>>>()?;
        }
        // Toeplitz (k+2) x (k+1) times poly
        let mut next = vec![0i128; k + 2];
        for (r, out) in next.iter_mut().enumerate() {
            for (c, &p) in poly.iter().enumerate() {
                if r >= c {
                    let t = items[r - c].checked_mul(p).ok_or(Error::Overflow("characteristic polynomial"))?;
                    *out = out.checked_add(t).ok_or(Error::Overflow("characteristic polynomial"))?;
                }
            }
        }
        poly = next;
    }
    Ok(IntPolynomial::from_descending(&poly))
}

/// Characteristic polynomial of the adjacency matrix of `g`.
pub fn char_poly(g: &Graph) -> Result<IntPolynomial> {
    let n = g.n();
    let m: Vec<Vec<i128>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v) as i128).collect()).collect();
    char_poly_matrix(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn small_examples() {
        assert_eq!(char_poly(&complete(3)).unwrap(), IntPolynomial::from_descending(&[1, 0, -3, -2]));
        assert_eq!(char_poly(&complete(2)).unwrap(), IntPolynomial::from_descending(&[1, 0, -1]));
        let empty = char_poly(&Graph::empty(6).unwrap()).unwrap();
        assert_eq!(empty, IntPolynomial::from_descending(&[1, 0, 0, 0, 0, 0, 0]));
        assert_eq!(char_poly(&Graph::empty(0).unwrap()).unwrap(), IntPolynomial::new(vec![1]));
    }

    #[test]
    fn petersen_spectrum() {
        // eigenvalues 3, 1^5, (-2)^4
        let x = IntPolynomial::new(vec![0, 1]);
        let lin = |r: i128| IntPolynomial::new(vec![-r, 1]);
        let expected = lin(3)
            .checked_mul(&lin(1).checked_pow(5).unwrap())
            .unwrap()
            .checked_mul(&lin(-2).checked_pow(4).unwrap())
            .unwrap();
        assert_eq!(char_poly(&petersen()).unwrap(), expected);
        assert_eq!(x.degree(), Some(1));
    }

    #[test]
    fn non_symmetric_matrix() {
        // [[1,2],[3,4]]: x^2 - 5x - 2
        let m = vec![vec![1, 2], vec![3, 4]];
        assert_eq!(char_poly_matrix(&m).unwrap(), IntPolynomial::from_descending(&[1, -5, -2]));
    }

    #[test]
    fn display_and_serialise() {
        let p = IntPolynomial::from_descending(&[1, 0, -3, -2]);
        assert_eq!(p.to_string(), "x^3 - 3x - 2");
        assert_eq!(IntPolynomial::from_descending(&[-2, 1, 0]).to_string(), "-2x^2 + x");
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["1","0","-3","-2"]"#);
        assert_eq!(p.eval(2).unwrap(), 0);
    }

    #[test]
    fn overflow_is_detected() {
        let big = vec![vec![i128::MAX / 2, i128::MAX / 2], vec![i128::MAX / 2, i128::MAX / 2]];
        assert!(matches!(char_poly_matrix(&big), Err(Error::Overflow(_))));
    }
}
