//! Deciding strong l-walk-regularity.
//!
//! Two independent procedures are kept side by side: `check_direct` tests the
//! defining matrix identity A^l + (mu-lambda)A + (mu-nu)I = mu J on A^l
//! itself and works for any digraph; `check_divisibility` tests whether the
//! Hoffman polynomial divides x^l + ex + f, which is equivalent for strongly
//! connected regular digraphs and much cheaper. Positive answers are
//! cross-verified against each other wherever both apply.

use num_traits::{One, Signed, Zero};

use crate::algebra::{Int, IntMatrix, IntPoly, Rat};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::spectral::{DiagClass, SpectralProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Direct,
    HoffmanDivisibility,
}

/// Verified parameters of a strongly l-walk-regular digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwrCertificate {
    pub l: usize,
    pub lambda: Int,
    pub mu: Int,
    pub nu: Int,
    pub method: Method,
}

/// Witness that the Hoffman polynomial divides x^l + e x + f, with the walk
/// parameters derived from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityWitness {
    pub l: usize,
    pub e: Int,
    pub f: Int,
    pub mu: Int,
}

impl DivisibilityWitness {
    pub fn certificate(&self) -> SwrCertificate {
        SwrCertificate {
            l: self.l,
            lambda: &self.mu - &self.e,
            mu: self.mu.clone(),
            nu: &self.mu - &self.f,
            method: Method::HoffmanDivisibility,
        }
    }
}

/// Periodic structure of an exponent set, backed by an algebraic certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PeriodicFamily {
    /// Strongly regular: every l > 1 works.
    StronglyRegular,
    /// A^m in span{I, J}: every l congruent to 0 or 1 (mod m).
    MuEqualsLambda { m: usize },
    /// A^m in span{A, J}: every l congruent to 1 (mod m-1).
    MuEqualsNu { m: usize },
    /// Eigenvalues besides k are exactly {0, rho, -rho}: every odd l.
    ZeroPlusMinusRho,
}

impl PeriodicFamily {
    /// (modulus, residues) description of the certified l values.
    pub fn residues(&self) -> (usize, Vec<usize>) {
        match self {
            PeriodicFamily::StronglyRegular => (1, vec![0]),
            PeriodicFamily::MuEqualsLambda { m } => (*m, vec![0, 1 % *m]),
            PeriodicFamily::MuEqualsNu { m } => (*m - 1, vec![1 % (*m - 1)]),
            PeriodicFamily::ZeroPlusMinusRho => (2, vec![1]),
        }
    }

    pub fn contains(&self, l: usize) -> bool {
        let (m, rs) = self.residues();
        rs.contains(&(l % m))
    }
}

/// All certified l in (1, lmax], with the periodic description when an
/// infinite family is algebraically certified.
#[derive(Clone, Debug)]
pub struct ExponentSet {
    pub lmax: usize,
    pub certificates: Vec<SwrCertificate>,
    pub periodic: Option<PeriodicFamily>,
}

impl ExponentSet {
    pub fn values(&self) -> Vec<usize> {
        self.certificates.iter().map(|c| c.l).collect()
    }
}

/// Test the defining identity on A^l directly. Works for any digraph.
///
/// When a vertex-pair class is empty the corresponding parameter is not
/// determined by A^l; it is canonicalized as mu := lambda for the complete
/// digraph (matching the divisibility method) and lambda := mu when there
/// are no edges.
pub fn check_direct(g: &Digraph, l: usize) -> Result<Option<SwrCertificate>> {
    if l <= 1 {
        return Err(Error::Precondition("l must be greater than 1".into()));
    }
    let a = g.adjacency_matrix();
    let al = a.pow(l)?;
    classify_power(g, &al, l)
}

/// As `check_direct` but reusing an already computed power A^l.
pub fn classify_power(g: &Digraph, al: &IntMatrix, l: usize) -> Result<Option<SwrCertificate>> {
    let n = g.n();
    let mut lambda: Option<Int> = None;
    let mut mu: Option<Int> = None;
    let mut nu: Option<Int> = None;
    for u in 0..n {
        for v in 0..n {
            let val = al.get(u, v);
            let slot = if u == v {
                &mut nu
            } else if g.has_edge(u, v) {
                &mut lambda
            } else {
                &mut mu
            };
            match slot {
                Some(x) if x != val => return Ok(None),
                Some(_) => {}
                None => *slot = Some(val.clone()),
            }
        }
    }
    let nu = nu.unwrap_or_else(Int::zero);
    let (lambda, mu) = match (lambda, mu) {
        (Some(l0), Some(m0)) => (l0, m0),
        (Some(l0), None) => (l0.clone(), l0),
        (None, Some(m0)) => (m0.clone(), m0),
        (None, None) => (Int::zero(), Int::zero()),
    };
    Ok(Some(SwrCertificate { l, lambda, mu, nu, method: Method::Direct }))
}

/// Test whether the Hoffman polynomial divides x^l + e x + f for some
/// integers e, f with admissible (nonnegative integer) walk parameters.
pub fn check_divisibility(p: &SpectralProfile, l: usize) -> Result<Option<DivisibilityWitness>> {
    if l <= 1 {
        return Err(Error::Precondition("l must be greater than 1".into()));
    }
    let h = p
        .hoffman
        .as_ref()
        .ok_or_else(|| Error::Precondition("Hoffman polynomial absent".into()))?;
    let k = Int::from(p.degree.expect("regular when hoffman present") as i64);
    let n = Int::from(p.n as i64);
    // x^l mod hbar; hbar is monic with integer coefficients so the remainder
    // is integral
    let (_q, r) = IntPoly::x_power(l).to_rat().divrem(&h.monic.to_rat())?;
    if r.degree().unwrap_or(0) > 1 {
        return Ok(None);
    }
    let r = r.to_int().expect("remainder mod monic integer polynomial is integral");
    let e = -r.coeff(1);
    let f = -r.coeff(0);
    // mu = (k^l + e k + f) / n must be a nonnegative integer, and
    // lambda = mu - e, nu = mu - f must be nonnegative
    let top = k.pow(l as u32) + &e * &k + &f;
    if !(&top % &n).is_zero() {
        return Ok(None);
    }
    let mu = top / n;
    if mu.is_negative() || (&mu - &e).is_negative() || (&mu - &f).is_negative() {
        return Ok(None);
    }
    Ok(Some(DivisibilityWitness { l, e, f, mu }))
}

/// All l in (1, lmax] with a certificate, each cross-checked by both
/// methods when the digraph is strongly connected and regular.
pub fn exponent_set(g: &Digraph, lmax: usize) -> Result<ExponentSet> {
    let p = crate::spectral::profile(g)?;
    exponent_set_with_profile(g, &p, lmax)
}

pub fn exponent_set_with_profile(
    g: &Digraph,
    p: &SpectralProfile,
    lmax: usize,
) -> Result<ExponentSet> {
    if lmax < 2 {
        return Err(Error::Precondition("lmax must be >= 2".into()));
    }
    let a = g.adjacency_matrix();
    let mut power = a.clone();
    let mut certificates = vec![];
    for l in 2..=lmax {
        power = power.mul(&a)?;
        let direct = classify_power(g, &power, l)?;
        if p.hoffman.is_some() {
            let div = check_divisibility(p, l)?;
            match (&direct, &div) {
                (Some(c), Some(w)) => {
                    let wc = w.certificate();
                    if c.lambda != wc.lambda || c.mu != wc.mu || c.nu != wc.nu {
                        return Err(Error::InvariantViolation(format!(
                            "method disagreement at l={l}: direct {:?} vs divisibility {:?}",
                            c, wc
                        )));
                    }
                }
                (None, None) => {}
                _ => {
                    return Err(Error::InvariantViolation(format!(
                        "method disagreement at l={l}: direct={} divisibility={}",
                        direct.is_some(),
                        div.is_some()
                    )));
                }
            }
        }
        if let Some(c) = direct {
            certificates.push(c);
        }
    }
    let periodic = if p.hoffman.is_some() {
        detect_infinite_family_with_profile(g, p, lmax)?
    } else {
        None
    };
    Ok(ExponentSet { lmax, certificates, periodic })
}

/// Certify an infinite family of exponents, never extrapolating from a scan:
/// strong regularity, A^m in span{I,J} or span{A,J}, or the {0, +rho, -rho}
/// spectrum shape.
pub fn detect_infinite_family(g: &Digraph, lmax: usize) -> Result<Option<PeriodicFamily>> {
    let p = crate::spectral::profile(g)?;
    detect_infinite_family_with_profile(g, &p, lmax)
}

pub fn detect_infinite_family_with_profile(
    g: &Digraph,
    p: &SpectralProfile,
    lmax: usize,
) -> Result<Option<PeriodicFamily>> {
    if p.hoffman.is_none() {
        return Err(Error::Precondition(
            "infinite-family detection needs a strongly connected regular digraph".into(),
        ));
    }
    if crate::spectral::is_srd(g).is_some() {
        return Ok(Some(PeriodicFamily::StronglyRegular));
    }
    // eigenvalues besides k exactly {0, rho, -rho}: hbar = x^3 - a x, a > 0
    let hbar = &p.hoffman.as_ref().unwrap().monic;
    if hbar.degree() == Some(3)
        && hbar.coeff(0).is_zero()
        && hbar.coeff(2).is_zero()
        && hbar.coeff(1).is_negative()
    {
        return Ok(Some(PeriodicFamily::ZeroPlusMinusRho));
    }
    let a = g.adjacency_matrix();
    let mut power = a.clone();
    for m in 2..=lmax {
        power = power.mul(&a)?;
        if let Some(c) = classify_power(g, &power, m)? {
            if c.lambda == c.mu {
                return Ok(Some(PeriodicFamily::MuEqualsLambda { m }));
            }
            if c.mu == c.nu {
                return Ok(Some(PeriodicFamily::MuEqualsNu { m }));
            }
        }
    }
    Ok(None)
}

/// Outcome of the eigenvalue-side identity checks for one certificate.
#[derive(Clone, Debug, Default)]
pub struct IdentityReport {
    /// (identity name, detail) for every identity that was checked and held.
    pub checked: Vec<(String, String)>,
    /// Set when fewer than two integer eigenvalues besides k are available,
    /// so the pairwise identities are vacuous.
    pub insufficient_distinct_eigenvalues: bool,
}

/// Check every eigenvalue identity applicable to `cert`:
/// the double-root formulas for a D_theta digraph, the two-eigenvalue and
/// three-eigenvalue relations over the integer eigenvalues, and the
/// nondiagonalizable eta relation. Violations are errors: they signal either
/// a bug or a non-SWR input.
pub fn verify_parameter_identities(
    cert: &SwrCertificate,
    p: &SpectralProfile,
) -> Result<IdentityReport> {
    let mut report = IdentityReport::default();
    let l = cert.l as i64;
    let dmu_lambda = &cert.mu - &cert.lambda;
    let dmu_nu = &cert.mu - &cert.nu;

    if let DiagClass::DTheta(theta) = &p.diag_class {
        // mu - lambda = -l theta^(l-1), mu - nu = (l-1) theta^l
        let tpow_lm1 = theta.pow(cert.l as u32 - 1);
        let tpow_l = theta.pow(cert.l as u32);
        if dmu_lambda != -Int::from(l) * &tpow_lm1 {
            return Err(Error::IdentityViolation(format!(
                "mu-lambda = {} but -l*theta^(l-1) = {}",
                dmu_lambda,
                -Int::from(l) * &tpow_lm1
            )));
        }
        if dmu_nu != Int::from(l - 1) * &tpow_l {
            return Err(Error::IdentityViolation(format!(
                "mu-nu = {} but (l-1)*theta^l = {}",
                dmu_nu,
                Int::from(l - 1) * &tpow_l
            )));
        }
        report.checked.push((
            "double-root parameter formulas".into(),
            format!("theta = {theta}"),
        ));
        // ((mu-nu)/(l-1))^(l-1) = ((mu-lambda)/(-l))^l
        let lhs = Rat::new(dmu_nu.clone(), Int::from(l - 1));
        let rhs = Rat::new(dmu_lambda.clone(), Int::from(-l));
        let lhs_p = rat_pow(&lhs, cert.l as u32 - 1);
        let rhs_p = rat_pow(&rhs, cert.l as u32);
        if lhs_p != rhs_p {
            return Err(Error::IdentityViolation(format!(
                "((mu-nu)/(l-1))^(l-1) = {lhs_p} but ((mu-lambda)/(-l))^l = {rhs_p}"
            )));
        }
        report
            .checked
            .push(("double-root power identity".into(), format!("{lhs_p} = {rhs_p}")));
    }

    // integer eigenvalues different from k, from the minimal polynomial
    let k_rat = p.degree.map(|k| Rat::from_integer(Int::from(k as i64)));
    let mut thetas: Vec<Int> = vec![];
    for (root, _mult) in p.minpoly.rational_roots()? {
        if root.is_integer() && k_rat.as_ref() != Some(&root) {
            thetas.push(root.to_integer());
        }
    }

    if thetas.len() < 2 {
        report.insufficient_distinct_eigenvalues = true;
    }
    for i in 0..thetas.len() {
        for j in (i + 1)..thetas.len() {
            let (t1, t2) = (&thetas[i], &thetas[j]);
            let denom = t1 - t2;
            let p1 = t1.pow(cert.l as u32);
            let p2 = t2.pow(cert.l as u32);
            // mu - lambda = (t2^l - t1^l)/(t1 - t2)
            if Rat::new(&p2 - &p1, denom.clone()) != Rat::from_integer(dmu_lambda.clone()) {
                return Err(Error::IdentityViolation(format!(
                    "pairwise identity failed for eigenvalues {t1}, {t2}"
                )));
            }
            // mu - nu = (t2 t1^l - t1 t2^l)/(t1 - t2)
            if Rat::new(t2 * &p1 - t1 * &p2, denom.clone()) != Rat::from_integer(dmu_nu.clone()) {
                return Err(Error::IdentityViolation(format!(
                    "pairwise nu identity failed for eigenvalues {t1}, {t2}"
                )));
            }
            report.checked.push((
                "two-eigenvalue relation".into(),
                format!("theta1 = {t1}, theta2 = {t2}"),
            ));
        }
    }
    for i in 0..thetas.len() {
        for j in (i + 1)..thetas.len() {
            for m in (j + 1)..thetas.len() {
                let (t1, t2, t3) = (&thetas[i], &thetas[j], &thetas[m]);
                let s = (t2 - t3) * t1.pow(cert.l as u32)
                    + (t3 - t1) * t2.pow(cert.l as u32)
                    + (t1 - t2) * t3.pow(cert.l as u32);
                if !s.is_zero() {
                    return Err(Error::IdentityViolation(format!(
                        "three-eigenvalue relation failed for {t1}, {t2}, {t3}"
                    )));
                }
                report.checked.push((
                    "three-eigenvalue relation".into(),
                    format!("theta1 = {t1}, theta2 = {t2}, theta3 = {t3}"),
                ));
            }
        }
    }
    if let DiagClass::DTheta(theta) = &p.diag_class {
        for eta in thetas.iter().filter(|t| *t != theta) {
            // l theta^(l-1) (theta - eta) = theta^l - eta^l
            let lhs = Int::from(l) * theta.pow(cert.l as u32 - 1) * (theta - eta);
            let rhs = theta.pow(cert.l as u32) - eta.pow(cert.l as u32);
            if lhs != rhs {
                return Err(Error::IdentityViolation(format!(
                    "eta relation failed for eta = {eta}: {lhs} != {rhs}"
                )));
            }
            report
                .checked
                .push(("nondiagonalizable eta relation".into(), format!("eta = {eta}")));
        }
    }
    Ok(report)
}

fn rat_pow(r: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

/// What a diagonalizable real spectrum with four distinct eigenvalues
/// implies about the exponent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FourEigenvaluePrediction {
    /// theta2 = 0 and theta3 = -theta1: strongly l-walk-regular for every
    /// odd l.
    EveryOddEll,
    /// theta1 + theta2 + theta3 = 0: strongly 3-walk-regular, and at most
    /// one l > 1 overall.
    PossiblyOnlyThree,
    /// Sum nonzero and no symmetric pair: not 3-walk-regular, and at most
    /// one l > 1.
    AtMostOneNotThree,
}

/// Predict the exponent-set shape from four distinct rational eigenvalues
/// k > theta1 > theta2 > theta3 of a diagonalizable digraph.
pub fn predict_four_real_eigenvalues(
    k: &Rat,
    thetas: &[Rat; 3],
    diagonalizable: bool,
) -> Result<FourEigenvaluePrediction> {
    if !diagonalizable {
        return Err(Error::Precondition("prediction requires a diagonalizable digraph".into()));
    }
    let mut sorted = thetas.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != 3 || thetas.iter().any(|t| t == k) {
        return Err(Error::Precondition("need four distinct eigenvalues".into()));
    }
    let (t1, t2, t3) = (&thetas[0], &thetas[1], &thetas[2]);
    if t2.is_zero() && *t3 == -t1.clone() {
        return Ok(FourEigenvaluePrediction::EveryOddEll);
    }
    if (t1 + t2 + t3).is_zero() {
        return Ok(FourEigenvaluePrediction::PossiblyOnlyThree);
    }
    Ok(FourEigenvaluePrediction::AtMostOneNotThree)
}

/// Structure of a strongly connected mu_l = 0 strongly l-walk-regular
/// digraph, per the classification theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mu0Class {
    DirectedCycle(usize),
    CocliqueExtension { g: usize, sizes: Vec<usize> },
    ExceptionalOneChord,
    ExceptionalTwoChords,
}

/// Classify a strongly connected, non-complete digraph carrying a mu_l = 0
/// certificate. A digraph matching none of the known shapes would contradict
/// the classification theorem and is reported as such.
pub fn classify_mu0(g: &Digraph, l: usize) -> Result<Mu0Class> {
    let cert = check_direct(g, l)?
        .ok_or_else(|| Error::Precondition(format!("not strongly {l}-walk-regular")))?;
    if !cert.mu.is_zero() {
        return Err(Error::Precondition(format!("mu_{l} = {} is nonzero", cert.mu)));
    }
    if !g.is_strongly_connected() {
        return Err(Error::Precondition("digraph is not strongly connected".into()));
    }
    if g.is_complete() {
        return Err(Error::Precondition("classification excludes the complete digraph".into()));
    }
    let girth = g
        .girth()
        .ok_or_else(|| Error::InvariantViolation("strongly connected digraph has a cycle".into()))?;
    if l % girth > 1 {
        return Err(Error::TheoremViolation(format!(
            "l = {l} is not 0 or 1 mod girth {girth}"
        )));
    }
    if g.n() >= 2
        && (0..g.n()).all(|u| g.out_degree(u) == 1 && g.in_degree(u) == 1)
        && g.is_strongly_connected()
    {
        return Ok(Mu0Class::DirectedCycle(g.n()));
    }
    if let Some((gl, sizes)) = coclique_extension_structure(g) {
        return Ok(Mu0Class::CocliqueExtension { g: gl, sizes });
    }
    // exceptional shapes: n-cycle with chord 02, optionally also 13
    if g.n() <= 10 {
        for chords in [1usize, 2] {
            let spec = crate::families::FamilySpec::ExceptionalChord { l: g.n(), chords };
            if let Ok(cand) = spec.build() {
                if crate::census::canonical_form(g)? == crate::census::canonical_form(&cand)? {
                    return Ok(match chords {
                        1 => Mu0Class::ExceptionalOneChord,
                        _ => Mu0Class::ExceptionalTwoChords,
                    });
                }
            }
        }
    }
    Err(Error::TheoremViolation(format!(
        "mu_{l} = 0 digraph matches no classified shape: {:?}",
        g
    )))
}

/// Detect a coclique extension of a directed g-cycle with at least one class
/// of size > 1: classes are vertices with identical in- and
/// out-neighborhoods, the quotient must be a single directed cycle, and
/// consecutive classes must be completely joined.
fn coclique_extension_structure(g: &Digraph) -> Option<(usize, Vec<usize>)> {
    let n = g.n();
    let mut class_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = vec![];
    for u in 0..n {
        let mut found = None;
        for (ci, &r) in reps.iter().enumerate() {
            let same = (0..n).all(|v| g.has_edge(u, v) == g.has_edge(r, v))
                && (0..n).all(|v| g.has_edge(v, u) == g.has_edge(v, r));
            if same {
                found = Some(ci);
                break;
            }
        }
        match found {
            Some(ci) => class_of[u] = ci,
            None => {
                class_of[u] = reps.len();
                reps.push(u);
            }
        }
    }
    let cg = reps.len();
    if cg < 2 || cg == n {
        return None; // no class of size > 1, or trivial
    }
    // quotient successor must be a single g-cycle; blocks complete or empty
    let mut succ = vec![usize::MAX; cg];
    for (ci, &r) in reps.iter().enumerate() {
        let mut outs: Vec<usize> = vec![];
        for (cj, &s) in reps.iter().enumerate() {
            if g.has_edge(r, s) {
                outs.push(cj);
            }
        }
        if outs.len() != 1 || outs[0] == ci {
            return None;
        }
        succ[ci] = outs[0];
    }
    // intra-class edges are already excluded (succ != self); check the
    // successor map is one cycle covering all classes
    let mut seen = vec![false; cg];
    let mut cur = 0usize;
    for _ in 0..cg {
        if seen[cur] {
            return None;
        }
        seen[cur] = true;
        cur = succ[cur];
    }
    if cur != 0 {
        return None;
    }
    let mut sizes = vec![0usize; cg];
    for u in 0..n {
        sizes[class_of[u]] += 1;
    }
    // order sizes along the cycle starting at class 0
    let mut ordered = vec![];
    let mut cur = 0usize;
    for _ in 0..cg {
        ordered.push(sizes[cur]);
        cur = succ[cur];
    }
    Some((cg, ordered))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(g: usize) -> Digraph {
        Digraph::from_adjacency(g, |u, v| (u + 1) % g == v).unwrap()
    }

    fn lvl9() -> Digraph {
        Digraph::from_adjacency(9, |u, v| {
            let r = (2 * u + v) % 9;
            r == 1 || r == 2
        })
        .unwrap()
    }

    fn mate1() -> Digraph {
        let cyc = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)];
        let bid = [(0, 2), (2, 0), (1, 4), (4, 1), (3, 5), (5, 3)];
        Digraph::from_edges(6, &[&cyc[..], &bid[..]].concat()).unwrap()
    }

    fn ex63() -> Digraph {
        mate1().complement_blowup(3).unwrap()
    }

    #[test]
    fn check_direct_examples() {
        let c = check_direct(&cycle(6), 6).unwrap().unwrap();
        assert_eq!(
            (c.lambda, c.mu, c.nu),
            (Int::zero(), Int::zero(), Int::one())
        );
        let c = check_direct(&lvl9(), 3).unwrap().unwrap();
        assert_eq!((c.lambda, c.mu, c.nu), (Int::one(), Int::one(), Int::zero()));
        let c = check_direct(&ex63(), 3).unwrap().unwrap();
        assert_eq!(
            (c.lambda, c.mu, c.nu),
            (Int::from(75), Int::from(72), Int::from(74))
        );
        assert!(check_direct(&cycle(6), 5).unwrap().is_none());
        assert!(check_direct(&cycle(6), 1).is_err());
    }

    #[test]
    fn check_divisibility_examples() {
        // 3-cycle: hoffman x^2+x+1, l=3 -> e=0, f=-1, mu=0
        let p = crate::spectral::profile(&cycle(3)).unwrap();
        let w = check_divisibility(&p, 3).unwrap().unwrap();
        let c = w.certificate();
        assert_eq!((w.e, w.f, w.mu), (Int::zero(), Int::from(-1), Int::zero()));
        assert_eq!((c.lambda, c.mu, c.nu), (Int::zero(), Int::zero(), Int::one()));
        // hoffman x^2(x+1): no trinomial multiple for any l
        let p = crate::spectral::profile(&mate1()).unwrap();
        for l in 2..=50 {
            assert!(check_divisibility(&p, l).unwrap().is_none(), "l = {l}");
        }
        // hoffman x^3-3x-2, l=3 -> e=-3, f=-2, mu=72
        let p = crate::spectral::profile(&ex63()).unwrap();
        let w = check_divisibility(&p, 3).unwrap().unwrap();
        assert_eq!(
            (w.e, w.f, w.mu),
            (Int::from(-3), Int::from(-2), Int::from(72))
        );
    }

    #[test]
    fn exponent_sets() {
        let es = exponent_set(&cycle(6), 13).unwrap();
        assert_eq!(es.values(), vec![6, 7, 12, 13]);
        assert_eq!(es.periodic, Some(PeriodicFamily::MuEqualsLambda { m: 6 }));
        // coclique extension of a 3-cycle with sizes (2,1,1)
        let g = Digraph::from_edges(4, &[(0, 2), (1, 2), (2, 3), (3, 0), (3, 1)]).unwrap();
        let es = exponent_set(&g, 13).unwrap();
        assert_eq!(es.values(), vec![4, 7, 10, 13]);
        let es = exponent_set(&ex63(), 25).unwrap();
        assert_eq!(es.values(), vec![3]);
    }

    #[test]
    fn reverse_symmetry() {
        let g = lvl9();
        let a = exponent_set(&g, 10).unwrap();
        let b = exponent_set(&g.reverse(), 10).unwrap();
        assert_eq!(a.values(), b.values());
        for (x, y) in a.certificates.iter().zip(&b.certificates) {
            assert_eq!((&x.lambda, &x.mu, &x.nu), (&y.lambda, &y.mu, &y.nu));
        }
    }

    #[test]
    fn infinite_families() {
        assert_eq!(
            detect_infinite_family(&lvl9(), 10).unwrap(),
            Some(PeriodicFamily::MuEqualsLambda { m: 3 })
        );
        // line digraph of the 9-vertex unique-walk digraph: mu = nu family
        let ld = lvl9().line_digraph();
        assert_eq!(
            detect_infinite_family(&ld, 10).unwrap(),
            Some(PeriodicFamily::MuEqualsNu { m: 4 })
        );
    }

    #[test]
    fn identity_checks_ex63() {
        let g = ex63();
        let p = crate::spectral::profile(&g).unwrap();
        assert_eq!(p.diag_class, DiagClass::DTheta(Int::from(-1)));
        let cert = check_direct(&g, 3).unwrap().unwrap();
        let report = verify_parameter_identities(&cert, &p).unwrap();
        assert!(!report.insufficient_distinct_eigenvalues);
        assert!(report
            .checked
            .iter()
            .any(|(n, _)| n == "nondiagonalizable eta relation"));
    }

    #[test]
    fn identity_checks_complete_digraph() {
        let k4 = Digraph::from_adjacency(4, |u, v| u != v).unwrap();
        let p = crate::spectral::profile(&k4).unwrap();
        let cert = check_direct(&k4, 2).unwrap().unwrap();
        // A^2 = 2A + 3I: lambda = 2, nu = 3, mu canonicalized to lambda
        assert_eq!(
            (&cert.lambda, &cert.mu, &cert.nu),
            (&Int::from(2), &Int::from(2), &Int::from(3))
        );
        let report = verify_parameter_identities(&cert, &p).unwrap();
        assert!(report.insufficient_distinct_eigenvalues);
    }

    #[test]
    fn four_eigenvalue_predictions() {
        let r = |v: i64| Rat::from_integer(Int::from(v));
        assert_eq!(
            predict_four_real_eigenvalues(&r(6), &[r(3), r(0), r(-3)], true).unwrap(),
            FourEigenvaluePrediction::EveryOddEll
        );
        assert_eq!(
            predict_four_real_eigenvalues(&r(8), &[r(5), r(-1), r(-4)], true).unwrap(),
            FourEigenvaluePrediction::PossiblyOnlyThree
        );
        assert_eq!(
            predict_four_real_eigenvalues(&r(5), &[r(3), r(1), r(-2)], true).unwrap(),
            FourEigenvaluePrediction::AtMostOneNotThree
        );
        assert!(predict_four_real_eigenvalues(&r(5), &[r(3), r(1), r(-2)], false).is_err());
    }

    #[test]
    fn mu0_classification() {
        assert_eq!(
            classify_mu0(&cycle(6), 7).unwrap(),
            Mu0Class::DirectedCycle(6)
        );
        let g = Digraph::from_edges(4, &[(0, 2), (1, 2), (2, 3), (3, 0), (3, 1)]).unwrap();
        assert_eq!(
            classify_mu0(&g, 4).unwrap(),
            Mu0Class::CocliqueExtension { g: 3, sizes: vec![2, 1, 1] }
        );
        let spec = crate::families::FamilySpec::ExceptionalChord { l: 5, chords: 1 };
        assert_eq!(
            classify_mu0(&spec.build().unwrap(), 5).unwrap(),
            Mu0Class::ExceptionalOneChord
        );
    }
}
