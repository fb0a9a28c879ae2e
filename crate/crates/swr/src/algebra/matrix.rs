//! Dense integer matrices with exact arithmetic.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Int, IntPoly, Rat, RatPoly};
use crate::error::{Error, Result};

/// Row-major matrix over the integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn ones(n: usize) -> Self {
        IntMatrix {
            rows: n,
            cols: n,
            entries: vec![Int::one(); n * n],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Int) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, entries }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Self::from_fn(r, c, |i, j| Int::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Int] {
        &self.entries
    }

    pub fn transpose(&self) -> IntMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Int {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.add(&other.scale(&Int::from(-1)))
    }

    pub fn scale(&self, s: &Int) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    /// Exact matrix product.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(l, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// a^e by repeated squaring; a^0 = I.
    pub fn pow(&self, e: usize) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let mut result = IntMatrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Monic characteristic polynomial, computed exactly with the
    /// Faddeev-LeVerrier recurrence (all intermediate values integral).
    pub fn char_poly(&self) -> Result<IntPoly> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut coeffs = vec![Int::zero(); n + 1];
        coeffs[n] = Int::one();
        let mut m = IntMatrix::identity(n);
        for k in 1..=n {
            let am = self.mul(&m)?;
            let t = am.trace();
            let k_int = Int::from(k as i64);
            debug_assert!((&t % &k_int).is_zero());
            let c = -(&t / &k_int);
            m = am;
            for i in 0..n {
                let v = m.get(i, i) + &c;
                m.set(i, i, v);
            }
            coeffs[n - k] = c;
        }
        Ok(IntPoly::new(coeffs))
    }

    /// Monic minimal polynomial, via the first linear dependence among the
    /// flattened powers I, A, A^2, ... over the rationals.
    pub fn min_poly(&self) -> Result<IntPoly> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let dim = n * n;
        // reduced basis vectors with their expansions over the power basis
        let mut basis: Vec<(Vec<Rat>, usize, Vec<Rat>)> = vec![]; // (vector, pivot, rep)
        let mut power = IntMatrix::identity(n);
        for d in 0..=n {
            let mut v: Vec<Rat> = power
                .entries
                .iter()
                .map(|e| Rat::from_integer(e.clone()))
                .collect();
            let mut rep = vec![Rat::zero(); d + 1];
            rep[d] = Rat::one();
            for (b, pivot, brep) in &basis {
                if v[*pivot].is_zero() {
                    continue;
                }
                let f = v[*pivot].clone() / &b[*pivot];
                for i in 0..dim {
                    if !b[i].is_zero() {
                        let s = &b[i] * &f;
                        v[i] -= s;
                    }
                }
                for (i, c) in brep.iter().enumerate() {
                    let s = c * &f;
                    rep[i] -= s;
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                Some(pivot) => {
                    basis.push((v, pivot, rep));
                }
                None => {
                    let p = RatPoly::new(rep);
                    return p.to_int().ok_or_else(|| {
                        Error::InvariantViolation(
                            "minimal polynomial has non-integer coefficients".into(),
                        )
                    });
                }
            }
            if d < n {
                power = power.mul(self)?;
            }
        }
        Err(Error::InvariantViolation(
            "no dependence among matrix powers up to n".into(),
        ))
    }
}

impl IntPoly {
    /// Evaluate the polynomial at a square matrix (Horner scheme).
    pub fn eval_matrix(&self, a: &IntMatrix) -> Result<IntMatrix> {
        if !a.is_square() {
            return Err(Error::NotSquare(a.rows(), a.cols()));
        }
        let n = a.rows();
        let mut acc = IntMatrix::zeros(n, n);
        for c in self.coeffs().iter().rev() {
            acc = acc.mul(a)?;
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        Ok(acc)
    }
}

impl RatPoly {
    /// Evaluate at a square integer matrix; result has rational entries,
    /// returned as (numerator matrix, common denominator).
    pub fn eval_matrix(&self, a: &IntMatrix) -> Result<(IntMatrix, Int)> {
        let mut denom = Int::one();
        for c in self.coeffs() {
            denom = num_integer::lcm(denom, c.denom().clone());
        }
        let scaled = IntPoly::new(
            self.coeffs()
                .iter()
                .map(|c| (c * BigRational::from_integer(denom.clone())).to_integer())
                .collect(),
        );
        Ok((scaled.eval_matrix(a)?, denom))
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
