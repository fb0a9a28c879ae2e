//! Per-digraph spectral data: characteristic, minimal and Hoffman
//! polynomials, diagonalizability class, walk-regularity, strong regularity.

use num_traits::{One, Signed, Zero};

use crate::algebra::{Int, IntMatrix, IntPoly, Rat, RatPoly};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Diagonalizability of the adjacency matrix, read off the minimal
/// polynomial: `Diagonalizable` iff squarefree; `DTheta(theta)` iff exactly
/// one double root theta (an integer), all other roots simple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagClass {
    Diagonalizable,
    DTheta(Int),
    Other,
}

impl DiagClass {
    pub fn as_string(&self) -> String {
        match self {
            DiagClass::Diagonalizable => "Diagonalizable".to_string(),
            DiagClass::DTheta(t) => format!("DTheta({t})"),
            DiagClass::Other => "Other".to_string(),
        }
    }
}

/// The Hoffman polynomial h with h(A) = J, stored as its monic integer
/// multiple together with the rational scale factor: h = scale * monic.
///
/// `monic` is the minimal polynomial with the Perron factor (x - k) removed;
/// scale = n / monic(k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoffmanPoly {
    pub monic: IntPoly,
    pub scale: Rat,
}

impl HoffmanPoly {
    pub fn as_rat_poly(&self) -> RatPoly {
        self.monic.to_rat().scale(&self.scale)
    }
}

/// Parameters (n, k, t, lambda, mu) of a strongly regular digraph, i.e.
/// A^2 = tI + lambda A + mu (J - I - A).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrdParameters {
    pub n: usize,
    pub k: usize,
    pub t: Int,
    pub lambda: Int,
    pub mu: Int,
}

impl SrdParameters {
    /// 0 < t < k; excludes undirected graphs (t = k) and doubly regular
    /// tournaments (t = 0).
    pub fn is_nonexceptional(&self) -> bool {
        self.t.is_positive() && self.t < Int::from(self.k as i64)
    }
}

#[derive(Clone, Debug)]
pub struct SpectralProfile {
    pub n: usize,
    pub degree: Option<usize>,
    pub strongly_connected: bool,
    pub charpoly: IntPoly,
    pub minpoly: IntPoly,
    /// Present iff the digraph is strongly connected and regular.
    pub hoffman: Option<HoffmanPoly>,
    pub diag_class: DiagClass,
    /// Exact number of distinct eigenvalues (degree of the squarefree part
    /// of the minimal polynomial).
    pub distinct_eigenvalues: usize,
}

/// Classify a monic minimal polynomial via s = gcd(m, m').
pub fn diag_class(minpoly: &IntPoly) -> Result<DiagClass> {
    if minpoly.degree().unwrap_or(0) < 1 || !minpoly.is_monic() {
        return Err(Error::Precondition(
            "diag_class needs a monic nonconstant polynomial".into(),
        ));
    }
    let m = minpoly.to_rat();
    let s = m.gcd(&m.derivative())?;
    match s.degree() {
        Some(0) => Ok(DiagClass::Diagonalizable),
        Some(1) => {
            let theta = -s.coeff(0);
            if !theta.is_integer() {
                return Ok(DiagClass::Other);
            }
            let theta = theta.to_integer();
            // require multiplicity exactly 2 in m
            let lin = RatPoly::new(vec![
                Rat::from_integer(-theta.clone()),
                Rat::one(),
            ]);
            let cube = lin.mul(&lin).mul(&lin);
            let (_q, r) = m.divrem(&cube)?;
            if r.is_zero() {
                Ok(DiagClass::Other)
            } else {
                Ok(DiagClass::DTheta(theta))
            }
        }
        _ => Ok(DiagClass::Other),
    }
}

/// Compute the full spectral profile. The Hoffman identity h(A) = J is
/// re-verified before returning; a failure there means an algebra bug.
pub fn profile(g: &Digraph) -> Result<SpectralProfile> {
    let a = g.adjacency_matrix();
    let charpoly = a.char_poly()?;
    let minpoly = a.min_poly()?;
    let dc = diag_class(&minpoly)?;
    let m = minpoly.to_rat();
    let sf_deg = {
        let s = m.gcd(&m.derivative())?;
        minpoly.degree().unwrap() - s.degree().unwrap_or(0)
    };
    let reg = g.regularity();
    let sc = g.is_strongly_connected();
    let hoffman = match (sc, reg.degree) {
        (true, Some(k)) => {
            let k_int = Int::from(k as i64);
            let lin = IntPoly::new(vec![-k_int.clone(), Int::one()]);
            let hbar = minpoly.div_exact(&lin).ok_or_else(|| {
                Error::InvariantViolation(
                    "degree k is not a root of the minimal polynomial".into(),
                )
            })?;
            let hk = hbar.eval_int(&k_int);
            if hk.is_zero() {
                return Err(Error::InvariantViolation(
                    "degree k is a multiple root of the minimal polynomial".into(),
                ));
            }
            let scale = Rat::new(Int::from(g.n() as i64), hk);
            let h = HoffmanPoly { monic: hbar, scale };
            // verify h(A) = J exactly
            let (num, denom) = h.as_rat_poly().eval_matrix(&a)?;
            if num != IntMatrix::ones(g.n()).scale(&denom) {
                return Err(Error::InvariantViolation(
                    "Hoffman polynomial does not evaluate to J".into(),
                ));
            }
            Some(h)
        }
        _ => None,
    };
    Ok(SpectralProfile {
        n: g.n(),
        degree: reg.degree,
        strongly_connected: sc,
        charpoly,
        minpoly,
        hoffman,
        diag_class: dc,
        distinct_eigenvalues: sf_deg,
    })
}

/// True iff diag(A^l) is constant for every 2 <= l <= max(lmax, n).
pub fn is_walk_regular(g: &Digraph, lmax: usize) -> Result<bool> {
    if lmax < 2 {
        return Err(Error::Precondition("walk-regularity bound must be >= 2".into()));
    }
    let a = g.adjacency_matrix();
    let bound = lmax.max(g.n());
    let mut p = a.clone();
    for _ in 2..=bound {
        p = p.mul(&a)?;
        let d0 = p.get(0, 0);
        if (1..g.n()).any(|i| p.get(i, i) != d0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decompose A^2 = tI + lambda A + mu (J - I - A) if possible.
///
/// When the non-adjacent class is empty (complete digraph) mu is not
/// determined by the identity; it is canonically set to lambda, matching the
/// Hoffman-divisibility normalization.
pub fn is_srd(g: &Digraph) -> Option<SrdParameters> {
    let reg = g.regularity();
    let k = reg.degree?;
    let n = g.n();
    let a = g.adjacency_matrix();
    let a2 = a.mul(&a).ok()?;
    let mut t: Option<Int> = None;
    let mut lambda: Option<Int> = None;
    let mut mu: Option<Int> = None;
    for u in 0..n {
        for v in 0..n {
            let val = a2.get(u, v);
            let slot = if u == v {
                &mut t
            } else if g.has_edge(u, v) {
                &mut lambda
            } else {
                &mut mu
            };
            match slot {
                Some(x) if x != val => return None,
                Some(_) => {}
                None => *slot = Some(val.clone()),
            }
        }
    }
    let t = t?;
    let lambda = lambda.unwrap_or_else(Int::zero);
    let mu = mu.unwrap_or_else(|| lambda.clone());
    Some(SrdParameters { n, k, t, lambda, mu })
}

/// (distinct, with multiplicity) real-root counts of the Hoffman polynomial.
pub fn hoffman_real_root_report(p: &SpectralProfile) -> Result<(usize, usize)> {
    let h = p
        .hoffman
        .as_ref()
        .ok_or_else(|| Error::Precondition("Hoffman polynomial absent".into()))?;
    Ok((
        h.monic.real_root_count(false)?,
        h.monic.real_root_count(true)?,
    ))
}
