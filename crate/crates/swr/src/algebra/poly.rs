//! Dense univariate polynomials with exact integer or rational coefficients.
//!
//! Coefficients are stored lowest degree first. The zero polynomial has an
//! empty coefficient vector.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Polynomial with integer coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

/// Polynomial with rational coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

fn int(v: i64) -> Int {
    Int::from(v)
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::new(vec![Int::one()])
    }

    /// The monomial x^d.
    pub fn x_power(d: usize) -> Self {
        let mut c = vec![Int::zero(); d + 1];
        c[d] = Int::one();
        IntPoly { coeffs: c }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Int {
        self.coeffs.get(d).cloned().unwrap_or_else(Int::zero)
    }

    pub fn leading(&self) -> Option<&Int> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        let d: Vec<Int> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * int(i as i64))
            .collect();
        IntPoly::new(d)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(c)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(c)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }

    pub fn scale(&self, s: &Int) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Exact division; `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.to_rat().divrem(&other.to_rat()).ok()?;
        if !r.is_zero() {
            return None;
        }
        q.to_int()
    }

    /// All rational roots with multiplicities, sorted ascending.
    ///
    /// Candidates are p/q with p dividing the trailing coefficient and q the
    /// leading one; divisor candidates are scanned up to 10^6, which covers
    /// every root within the Cauchy bound for the polynomial sizes handled
    /// here.
    pub fn rational_roots(&self) -> Result<Vec<(Rat, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut roots: Vec<(Rat, usize)> = vec![];
        // strip the x^v factor first
        let v = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0);
        let stripped = IntPoly::new(self.coeffs[v..].to_vec());
        if v > 0 {
            roots.push((Rat::zero(), v));
        }
        if stripped.degree() == Some(0) || stripped.is_zero() {
            roots.sort_by(|a, b| a.0.cmp(&b.0));
            return Ok(roots);
        }
        let a0 = stripped.coeffs[0].magnitude().clone();
        let an = stripped.leading().unwrap().magnitude().clone();
        // Cauchy bound on |root|
        let maxc = stripped
            .coeffs
            .iter()
            .map(|c| c.magnitude().clone())
            .max()
            .unwrap();
        let bound: Rat = Rat::one()
            + Rat::new(Int::from(maxc), Int::from(an.clone()));

        let cap = 1_000_000u64;
        let mut p_cands: Vec<Int> = vec![];
        let mut d = 1u64;
        let a0i = Int::from(a0);
        while Int::from(d) * Int::from(d) <= a0i && d <= cap {
            if (&a0i % d).is_zero() {
                p_cands.push(Int::from(d));
                p_cands.push(&a0i / d);
            }
            d += 1;
        }
        let mut q_cands: Vec<Int> = vec![];
        let ani = Int::from(an);
        let mut e = 1u64;
        while Int::from(e) * Int::from(e) <= ani && e <= 10_000 {
            if (&ani % e).is_zero() {
                q_cands.push(Int::from(e));
                q_cands.push(&ani / e);
            }
            e += 1;
        }
        let mut rem = stripped.to_rat();
        let mut seen: Vec<Rat> = vec![];
        for p in &p_cands {
            for q in &q_cands {
                for sign in [1i64, -1] {
                    let cand = Rat::new(p * int(sign), q.clone());
                    if cand.abs() > bound || seen.contains(&cand) {
                        continue;
                    }
                    seen.push(cand.clone());
                    if !stripped.eval_rat(&cand).is_zero() {
                        continue;
                    }
                    // multiplicity by deflation
                    let lin = RatPoly::new(vec![-cand.clone(), Rat::one()]);
                    let mut mult = 0usize;
                    loop {
                        let (quo, r) = rem.divrem(&lin)?;
                        if !r.is_zero() {
                            break;
                        }
                        rem = quo;
                        mult += 1;
                    }
                    debug_assert!(mult > 0);
                    roots.push((cand, mult));
                }
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(roots)
    }

    /// Number of real roots, via a Sturm sequence on the squarefree part.
    /// With `with_multiplicity`, repeated roots are counted with multiplicity
    /// (by recursing into gcd(f, f')).
    pub fn real_root_count(&self, with_multiplicity: bool) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        real_root_count_rat(&self.to_rat(), with_multiplicity)
    }
}

fn real_root_count_rat(f: &RatPoly, with_multiplicity: bool) -> Result<usize> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let g = f.gcd(&f.derivative())?;
    let (sf, _r) = f.divrem(&g)?;
    let d = sturm_distinct(&sf)?;
    if with_multiplicity && g.degree().unwrap_or(0) >= 1 {
        Ok(d + real_root_count_rat(&g, true)?)
    } else {
        Ok(d)
    }
}

/// Distinct real roots of a squarefree polynomial via sign variations of its
/// Sturm sequence at -inf and +inf.
fn sturm_distinct(p: &RatPoly) -> Result<usize> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let mut seq: Vec<RatPoly> = vec![p.clone(), p.derivative()];
    loop {
        let m = seq.len();
        if seq[m - 1].is_zero() {
            seq.pop();
            break;
        }
        if seq[m - 1].degree() == Some(0) {
            break;
        }
        let (_q, r) = seq[m - 2].divrem(&seq[m - 1])?;
        seq.push(r.neg().reduce_scale());
    }
    let var = |at_pos_inf: bool| -> usize {
        let mut count = 0;
        let mut prev: i8 = 0;
        for q in &seq {
            let lc = q.leading().unwrap();
            let mut s: i8 = if lc.is_positive() { 1 } else { -1 };
            if !at_pos_inf && q.degree().unwrap() % 2 == 1 {
                s = -s;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    };
    Ok(var(false) - var(true))
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RatPoly::new(vec![Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut c = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        RatPoly::new(c)
    }

    pub fn scale(&self, s: &Rat) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(int(i as i64)))
                .collect(),
        )
    }

    /// Strip the content, keeping only the sign of the leading coefficient.
    /// Used inside the Sturm sequence to control coefficient growth.
    pub fn reduce_scale(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(lc) => {
                let s = lc.abs();
                self.scale(&(Rat::one() / s))
            }
        }
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(lc) => self.scale(&(Rat::one() / lc)),
        }
    }

    /// Euclidean division: self = q * g + r with deg r < deg g.
    pub fn divrem(&self, g: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        if g.is_zero() {
            return Err(Error::ZeroPolynomialDivision);
        }
        let dg = g.degree().unwrap();
        let glc = g.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dg)];
        while r.len() > dg && !r.is_empty() {
            let dr = r.len() - 1;
            let c = r[dr].clone() / &glc;
            if !c.is_zero() {
                q[dr - dg] = c.clone();
                for (i, gc) in g.coeffs.iter().enumerate() {
                    let idx = dr - dg + i;
                    let sub = gc * &c;
                    r[idx] -= sub;
                }
            }
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        Ok((RatPoly::new(q), RatPoly::new(r)))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &RatPoly) -> Result<RatPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_q, r) = a.divrem(&b)?;
            a = b;
            b = r.reduce_scale();
        }
        Ok(a.monic())
    }

    /// Convert to an integer polynomial; `None` if any coefficient is not an
    /// integer.
    pub fn to_int(&self) -> Option<IntPoly> {
        let mut c = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            if !x.is_integer() {
                return None;
            }
            c.push(x.to_integer());
        }
        Some(IntPoly::new(c))
    }

    /// Clear denominators and divide out the integer content; leading
    /// coefficient made positive.
    pub fn primitive_int(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut lcm = Int::one();
        for c in &self.coeffs {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut content = Int::zero();
        for c in &ints {
            content = num_integer::gcd(content, c.clone());
        }
        let mut p = IntPoly::new(ints.iter().map(|c| c / &content).collect());
        if p.leading().is_some_and(|c| c.is_negative()) {
            p = p.scale(&int(-1));
        }
        p
    }
}

impl std::fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IntPoly{:?}", self.coeffs)
    }
}

impl std::fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "RatPoly[{}]", s.join(", "))
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let m = c.magnitude();
            match i {
                0 => write!(f, "{}", m)?,
                _ => {
                    if !m.is_one() {
                        write!(f, "{}*", m)?;
                    }
                    write!(f, "x")?;
                    if i > 1 {
                        write!(f, "^{}", i)?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn rp(c: &[i64]) -> RatPoly {
        p(c).to_rat()
    }

    #[test]
    fn divrem_examples() {
        // x^3 mod (x^2+x+1) -> remainder 1
        let (_q, r) = rp(&[0, 0, 0, 1]).divrem(&rp(&[1, 1, 1])).unwrap();
        assert_eq!(r, rp(&[1]));
        // x^3 mod x^2(x+1) -> remainder -x^2
        let (_q, r) = rp(&[0, 0, 0, 1]).divrem(&rp(&[0, 0, 1, 1])).unwrap();
        assert_eq!(r, rp(&[0, 0, -1]));
        // x^3 mod (x^3-3x-2) -> remainder 3x+2
        let (_q, r) = rp(&[0, 0, 0, 1]).divrem(&rp(&[-2, -3, 0, 1])).unwrap();
        assert_eq!(r, rp(&[2, 3]));
    }

    #[test]
    fn divrem_reconstructs() {
        let f = rp(&[3, -1, 4, 1, -5]);
        let g = rp(&[2, 0, 1]);
        let (q, r) = f.divrem(&g).unwrap();
        assert_eq!(q.mul(&g).sub(&f.neg().neg()).sub(&r.neg()).neg(), RatPoly::zero());
        assert_eq!(q.mul(&g).coeffs().len().max(r.coeffs().len()) <= 5, true);
        let back = {
            let qg = q.mul(&g);
            RatPoly::new(
                (0..5)
                    .map(|i| qg.coeff(i) + r.coeff(i))
                    .collect(),
            )
        };
        assert_eq!(back, f);
    }

    #[test]
    fn gcd_examples() {
        // gcd(x^2-1, x-1) = x-1
        let g = rp(&[-1, 0, 1]).gcd(&rp(&[-1, 1])).unwrap();
        assert_eq!(g, rp(&[-1, 1]));
        // gcd(m, m') for m = x^2(x+1)(x-2) = x^4 - x^3 - 2x^2 -> x
        let m = rp(&[0, 0, -2, -1, 1]);
        let g = m.gcd(&m.derivative()).unwrap();
        assert_eq!(g, rp(&[0, 1]));
        // gcd(x^6-1, 6x^5) = 1
        let g = rp(&[-1, 0, 0, 0, 0, 0, 1])
            .gcd(&rp(&[0, 0, 0, 0, 0, 6]))
            .unwrap();
        assert_eq!(g, RatPoly::one());
    }

    #[test]
    fn real_root_counts() {
        assert_eq!(p(&[1, 0, 1]).real_root_count(false).unwrap(), 0);
        // x^3-3x-2 = (x+1)^2(x-2)
        let f = p(&[-2, -3, 0, 1]);
        assert_eq!(f.real_root_count(false).unwrap(), 2);
        assert_eq!(f.real_root_count(true).unwrap(), 3);
        // x^m+1 for odd m
        for m in [3usize, 5, 7] {
            let mut c = vec![0i64; m + 1];
            c[0] = 1;
            c[m] = 1;
            assert_eq!(p(&c).real_root_count(false).unwrap(), 1);
            assert_eq!(p(&c).real_root_count(true).unwrap(), 1);
        }
    }

    #[test]
    fn rational_root_examples() {
        let roots = p(&[-2, -3, 0, 1]).rational_roots().unwrap();
        assert_eq!(
            roots,
            vec![
                (Rat::from_integer(Int::from(-1)), 2),
                (Rat::from_integer(Int::from(2)), 1)
            ]
        );
        assert!(p(&[1, 1, 1]).rational_roots().unwrap().is_empty());
        // x^5 - x - 1
        assert!(p(&[-1, -1, 0, 0, 0, 1]).rational_roots().unwrap().is_empty());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-2, -3, 0, 1]).to_string(), "x^3 - 3*x - 2");
    }
}
