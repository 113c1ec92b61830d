//! Exact checks on the four-point problems `(λ, μ, □, □)`: the Wronski
//! equation of `Ω(□, z)`, the conic parametrizing the solutions, the six
//! boundary points and their node labels, and the worked `Fl(6)` example.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::cylgrowth::cgd_enumerate;
use crate::partitions::{BoxFrame, Partition, PartitionError};

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConicError {
    #[error("all Plücker coordinates are zero")]
    AllZero,
    #[error("subset {0:?} is not a {1}-subset of 1..={2}")]
    BadSubset(Vec<usize>, usize, usize),
    #[error("|λ| + |μ| = {got}, but a four-point problem needs d(n−d) − 2 = {want}")]
    Codimension { got: usize, want: usize },
    #[error("μ^C ∖ λ is not two non-adjacent boxes")]
    WrongSkewType,
    #[error("boundary points do not follow the expected pattern: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn rat_str(x: &Rational) -> String {
    x.to_string()
}

/// A polynomial in one variable with coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| rat(x)).collect())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::new(vec![c])
    }

    pub fn x() -> Poly {
        Poly::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * rat(k as i64)).collect())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, o: &Poly) -> (Poly, Poly) {
        let dq = o.degree().expect("division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dq)];
        let lead = o.lead();
        while rem.len() > dq {
            let k = rem.len() - 1 - dq;
            let c = rem.last().unwrap() / &lead;
            for (t, oc) in o.coeffs.iter().enumerate() {
                rem[k + t] -= &c * oc;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rational::one() / self.lead()))
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Writes the polynomial in the variable `var`, lowest degree first.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                out.push_str(&rat_str(&mag));
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{k}")),
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("x"))
    }
}

/// Divides a family of polynomials by the positive rational that makes all
/// coefficients coprime integers.
pub fn primitive_part(polys: &[Poly]) -> Vec<Poly> {
    let all: Vec<&Rational> = polys.iter().flat_map(|p| p.coeffs.iter()).collect();
    if all.is_empty() {
        return polys.to_vec();
    }
    let den = all.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let num = all.iter().fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * &den / c.denom())));
    let factor = Rational::new(den, num);
    polys.iter().map(|p| p.scale(&factor)).collect()
}

fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&rat(-1)));
    }
    seq
}

fn sign_changes(seq: &[Poly], x: &Rational) -> usize {
    let signs: Vec<bool> = seq.iter().map(|q| q.eval(x)).filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Disjoint intervals `(lo, hi]` of width below `width`, each holding exactly
/// one real root of `p`, in increasing order. Multiple roots count once.
pub fn isolate_real_roots(p: &Poly, width: &Rational) -> Vec<(Rational, Rational)> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sq = p.div_rem(&p.gcd(&p.derivative())).0;
    let seq = sturm_sequence(&sq);
    let lead = sq.lead().abs();
    let bound =
        sq.coeffs.iter().map(|c| c.abs() / &lead).fold(Rational::zero(), |a, b| if b > a { b } else { a }) + rat(1);
    let count = |lo: &Rational, hi: &Rational| sign_changes(&seq, lo) - sign_changes(&seq, hi);
    let mut stack = vec![(-bound.clone(), bound)];
    let mut out = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let c = count(&lo, &hi);
        if c == 0 {
            continue;
        }
        if c == 1 && &hi - &lo < *width {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / rat(2);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort();
    out
}

/// Real roots as floats, each within `2^-40` of the true value.
pub fn real_roots(p: &Poly) -> Vec<f64> {
    let width = Rational::new(BigInt::one(), BigInt::one() << 40);
    isolate_real_roots(p, &width)
        .iter()
        .map(|(lo, hi)| if p.eval(hi).is_zero() { hi.clone() } else { (lo + hi) / rat(2) })
        .map(|x| x.to_f64().expect("finite root"))
        .collect()
}

/// `Σ_k c_k z^{low+k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    fn from_terms(terms: &BTreeMap<i64, Rational>) -> LaurentPoly {
        let nonzero: Vec<(i64, &Rational)> = terms.iter().filter(|(_, c)| !c.is_zero()).map(|(&e, c)| (e, c)).collect();
        let Some(&(low, _)) = nonzero.first() else {
            return LaurentPoly { low: 0, coeffs: Vec::new() };
        };
        let high = nonzero.last().unwrap().0;
        let coeffs = (low..=high).map(|e| terms.get(&e).cloned().unwrap_or_else(Rational::zero)).collect();
        LaurentPoly { low, coeffs }
    }

    pub fn lowest_exponent(&self) -> i64 {
        self.low
    }

    pub fn coefficient(&self, e: i64) -> Rational {
        usize::try_from(e - self.low).ok().and_then(|k| self.coeffs.get(k).cloned()).unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> Vec<(i64, Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.low + k as i64, c.clone()))
            .collect()
    }

    /// The polynomial `z^{−low} W(z)`, whose nonzero roots are those of `W`.
    pub fn shifted(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        let base = self.shifted().eval(z);
        let zl = if self.low >= 0 {
            num_traits::pow(z.clone(), self.low as usize)
        } else {
            Rational::one() / num_traits::pow(z.clone(), (-self.low) as usize)
        };
        base * zl
    }

    pub fn display(&self, var: &str) -> String {
        let parts: Vec<String> = self.terms().iter().map(|(e, c)| format!("({}){var}^{e}", rat_str(c))).collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// `Δ(I) = Π_{a<b} (b−a)` and `ℓ(I) = ΣI − C(d,2)` for one subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WronskiTerm {
    pub subset: Vec<usize>,
    pub delta: BigInt,
    pub ell: i64,
}

impl WronskiTerm {
    pub fn new(subset: &[usize]) -> WronskiTerm {
        let mut s = subset.to_vec();
        s.sort_unstable();
        let d = s.len() as i64;
        let delta =
            s.iter().enumerate().flat_map(|(k, &a)| s[k + 1..].iter().map(move |&b| BigInt::from(b - a))).product();
        let ell = s.iter().map(|&x| x as i64).sum::<i64>() - d * (d - 1) / 2;
        WronskiTerm { subset: s, delta, ell }
    }
}

/// `Σ_I Δ(I) p_I (−z)^{d(n−d)−ℓ(I)}`. Exponents can be negative, so the
/// result is a Laurent polynomial; its nonzero roots are the points `z`
/// where the Schubert condition `□` holds.
pub fn wronski_polynomial(
    frame: BoxFrame,
    pluecker: &BTreeMap<Vec<usize>, Rational>,
) -> Result<LaurentPoly, ConicError> {
    let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
    for (subset, p) in pluecker {
        let mut s = subset.clone();
        s.sort_unstable();
        s.dedup();
        if s.len() != frame.d || s.iter().any(|&x| x == 0 || x > frame.n) {
            return Err(ConicError::BadSubset(subset.clone(), frame.d, frame.n));
        }
        let t = WronskiTerm::new(&s);
        let e = frame.area() as i64 - t.ell;
        let sign = if e.rem_euclid(2) == 0 { rat(1) } else { rat(-1) };
        *terms.entry(e).or_insert_with(Rational::zero) += Rational::from_integer(t.delta) * p * sign;
    }
    let w = LaurentPoly::from_terms(&terms);
    if w.coeffs.is_empty() {
        return Err(ConicError::AllZero);
    }
    Ok(w)
}

/// The four-point problem `(λ, μ, □, □)` in its non-degenerate case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicReport {
    pub frame: BoxFrame,
    pub lambda: Partition,
    pub mu: Partition,
    pub s: Vec<usize>,
    pub i: usize,
    pub j: usize,
    pub kappa1: Partition,
    pub kappa2: Partition,
    /// `L, K₁, K₂, M`.
    pub subsets: [Vec<usize>; 4],
    /// `(a, b, c, d')` in `a u² − b u − c τ u + d' τ = 0`.
    pub coefficients: [i64; 4],
    /// Constants `c_X` with `p_L = c_L`, `p_{K₁} = c_{K₁} u`,
    /// `p_{K₂} = c_{K₂} τ/u`, `p_M = c_M τ`.
    pub pluecker_constants: [Rational; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FourPoint {
    /// `μ^C ⊉ λ`: no solutions.
    Empty,
    /// `μ^C ∖ λ` is a domino: the solution curve maps isomorphically to the
    /// moduli line.
    Degenerate {
        kappa: Partition,
    },
    Conic(Box<ConicReport>),
}

fn delta(s: &[usize]) -> Rational {
    Rational::from_integer(WronskiTerm::new(s).delta)
}

/// Classifies `(λ, μ, □, □)` and, in the conic case, returns the solution
/// conic with its Plücker parametrization.
pub fn four_point_solve(frame: BoxFrame, lambda: &Partition, mu: &Partition) -> Result<FourPoint, ConicError> {
    let want = frame.area() - 2;
    let got = lambda.size() + mu.size();
    if got != want || lambda.frame() != frame || mu.frame() != frame {
        return Err(ConicError::Codimension { got, want });
    }
    let top = mu.complement();
    if !top.contains(lambda) {
        return Ok(FourPoint::Empty);
    }
    let mids = lambda.intermediates(&top);
    if mids.len() == 1 {
        return Ok(FourPoint::Degenerate { kappa: mids[0].clone() });
    }
    let (kappa1, kappa2) = {
        let row = |k: &Partition| lambda.added_cell(k).expect("one box").0;
        if row(&mids[0]) > row(&mids[1]) {
            (mids[0].clone(), mids[1].clone())
        } else {
            (mids[1].clone(), mids[0].clone())
        }
    };
    let l = lambda.index_set();
    let m = top.index_set();
    let s: Vec<usize> = l.iter().copied().filter(|x| m.contains(x)).collect();
    let only_l: Vec<usize> = l.iter().copied().filter(|x| !m.contains(x)).collect();
    if only_l.len() != 2 {
        return Err(ConicError::WrongSkewType);
    }
    let (i, j) = (only_l[0], only_l[1]);
    let k1 = kappa1.index_set();
    let k2 = kappa2.index_set();
    let check = |set: &[usize], extra: [usize; 2]| {
        let mut v = s.clone();
        v.extend(extra);
        v.sort_unstable();
        v == set
    };
    if !(check(&m, [i + 1, j + 1]) && check(&k1, [i + 1, j]) && check(&k2, [i, j + 1])) {
        return Err(ConicError::Inconsistent("index sets are not of the form Sij, S(i+1)(j+1)".into()));
    }
    let g = (j - i) as i64;
    let consts = [
        Rational::one() / delta(&l),
        ratio(g - 1, g) / delta(&k1),
        ratio(g + 1, g) / delta(&k2),
        Rational::one() / delta(&m),
    ];
    Ok(FourPoint::Conic(Box::new(ConicReport {
        frame,
        lambda: lambda.clone(),
        mu: mu.clone(),
        s,
        i,
        j,
        kappa1,
        kappa2,
        subsets: [l, k1, k2, m],
        coefficients: [g - 1, g, g, g + 1],
        pluecker_constants: consts,
    })))
}

/// One of the six points of the real conic over `τ ∈ {0, 1, ∞}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryPoint {
    /// `None` is the end of the slant asymptote.
    pub u: Option<Rational>,
    /// `None` is `τ = ∞`.
    pub tau: Option<Rational>,
    /// Homogeneous `(p_L : p_{K₁} : p_{K₂} : p_M)`.
    pub pluecker: [Rational; 4],
    pub label: Partition,
}

fn exact_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    let r = Rational::new(n, d);
    (&r * &r == *x).then_some(r)
}

impl ConicReport {
    fn abcd(&self) -> [Rational; 4] {
        self.coefficients.map(rat)
    }

    /// The conic's equation at `(τ, u)`.
    pub fn conic_at(&self, tau: &Rational, u: &Rational) -> Rational {
        let [a, b, c, d] = self.abcd();
        a * u * u - b * u - c * tau * u + d * tau
    }

    /// `bc > ad'`: the real conic covers the real `τ`-line without branching.
    pub fn unbranched(&self) -> bool {
        let [a, b, c, d] = self.coefficients;
        b * c > a * d
    }

    /// Discriminant of the conic as a quadratic in `u`, a polynomial in `τ`.
    pub fn discriminant_in_u(&self) -> Poly {
        let [a, b, c, d] = self.coefficients;
        let lin = Poly::from_ints(&[-b, -c]);
        lin.mul(&lin).sub(&Poly::from_ints(&[0, 4 * a * d]))
    }

    /// `τ = u(b − au)/(d' − cu)`, `None` at the horizontal asymptote.
    pub fn tau_of_u(&self, u: &Rational) -> Option<Rational> {
        let [a, b, c, d] = self.abcd();
        let den = d - c * u;
        (!den.is_zero()).then(|| u * (b - a * u) / den)
    }

    /// Numerator of `dτ/du`: `ac u² − 2ad' u + bd'`.
    pub fn tau_derivative_numerator(&self) -> Poly {
        let [a, b, c, d] = self.coefficients;
        Poly::from_ints(&[b * d, -2 * a * d, a * c])
    }

    /// `τ` increases strictly with `u` on every branch: the numerator of
    /// `dτ/du` has positive leading coefficient and negative discriminant.
    pub fn u_monotone(&self) -> bool {
        let q = self.tau_derivative_numerator();
        let disc = q.coeff(1) * q.coeff(1) - rat(4) * q.coeff(0) * q.coeff(2);
        q.coeff(2).is_positive() && disc.is_negative()
    }

    /// Plücker coordinates at a point of the conic, keyed by subset.
    pub fn pluecker_at(&self, tau: &Rational, u: &Rational) -> BTreeMap<Vec<usize>, Rational> {
        let [cl, ck1, ck2, cm] = self.pluecker_constants.clone();
        let vals = [cl, ck1 * u, ck2 * tau / u, cm * tau];
        self.subsets.iter().cloned().zip(vals).collect()
    }

    /// Plücker values multiplied by `d' − cu`, which are polynomial in `u`;
    /// `None` takes the `u²` coefficients.
    pub fn homogeneous_pluecker(&self, u: Option<&Rational>) -> [Rational; 4] {
        let [a, b, c, d] = self.abcd();
        let [cl, ck1, ck2, cm] = self.pluecker_constants.clone();
        // as polynomials in u: D = d − cu, τu⁻¹D = b − au, τD = u(b − au)
        let polys = [
            Poly::new(vec![d.clone(), -c.clone()]).scale(&cl),
            Poly::new(vec![Rational::zero(), d.clone(), -c.clone()]).scale(&ck1),
            Poly::new(vec![b.clone(), -a.clone()]).scale(&ck2),
            Poly::new(vec![Rational::zero(), b, -a]).scale(&cm),
        ];
        match u {
            Some(u) => polys.map(|p| p.eval(u)),
            None => polys.map(|p| p.coeff(2)),
        }
    }

    fn roots_at_tau(&self, tau: &Rational) -> Vec<Rational> {
        let [a, b, c, d] = self.abcd();
        let (qa, qb, qc) = (a, -(b + c * tau), d * tau);
        let disc = &qb * &qb - rat(4) * &qa * &qc;
        let sq = exact_sqrt(&disc).expect("boundary fibers are rational");
        let mut r = vec![(-&qb - &sq) / (rat(2) * &qa), (-&qb + &sq) / (rat(2) * &qa)];
        r.sort();
        r.dedup();
        r
    }

    /// The six boundary points in increasing `u` along the real conic,
    /// starting at the slant-asymptote end, labeled by the node partition
    /// `ν` of the stable curve they map to.
    pub fn boundary_points(&self) -> Result<Vec<BoundaryPoint>, ConicError> {
        if !self.u_monotone() {
            return Err(ConicError::Inconsistent("τ is not monotone in u".into()));
        }
        let [_, _, c, d] = self.abcd();
        let mut finite: Vec<(Rational, Option<Rational>)> = Vec::new();
        for tau in [rat(0), rat(1)] {
            for u in self.roots_at_tau(&tau) {
                finite.push((u, Some(tau.clone())));
            }
        }
        finite.push((d / c, None));
        finite.sort();
        let mut pts: Vec<(Option<Rational>, Option<Rational>)> = vec![(None, None)];
        pts.extend(finite.into_iter().map(|(u, t)| (Some(u), t)));
        if pts.len() != 6 {
            return Err(ConicError::Inconsistent(format!("{} boundary points", pts.len())));
        }
        let hom: Vec<[Rational; 4]> = pts.iter().map(|(u, _)| self.homogeneous_pluecker(u.as_ref())).collect();
        let mut labels: Vec<Option<Partition>> = hom
            .iter()
            .map(|p| match (p[1].is_zero(), p[2].is_zero()) {
                (true, false) => Some(self.kappa2.clone()),
                (false, true) => Some(self.kappa1.clone()),
                _ => None,
            })
            .collect();
        let start = pts
            .iter()
            .zip(&labels)
            .position(|((_, t), l)| t.as_ref().is_some_and(Zero::is_zero) && l.as_ref() == Some(&self.kappa1))
            .ok_or_else(|| ConicError::Inconsistent("no κ₁ point over τ = 0".into()))?;
        let next = (start + 1) % 6;
        if labels[next].is_some() || pts[next].1 != Some(rat(1)) {
            return Err(ConicError::Inconsistent("κ₁ over τ = 0 is not followed by a point over τ = 1".into()));
        }
        let frame = self.frame;
        labels[next] = Some(frame.partition(&[2])?);
        for l in labels.iter_mut().filter(|l| l.is_none()) {
            *l = Some(frame.partition(&[1, 1])?);
        }
        Ok(pts
            .into_iter()
            .zip(hom)
            .zip(labels)
            .map(|(((u, tau), pluecker), label)| BoundaryPoint { u, tau, pluecker, label: label.unwrap() })
            .collect())
    }

    pub fn to_json(&self) -> Result<Value, ConicError> {
        let pts: Vec<Value> = self
            .boundary_points()?
            .iter()
            .map(|p| {
                json!({
                    "u": p.u.as_ref().map_or("inf".to_string(), rat_str),
                    "tau": p.tau.as_ref().map_or("inf".to_string(), rat_str),
                    "pluecker": p.pluecker.iter().map(rat_str).collect::<Vec<_>>(),
                    "label": p.label,
                })
            })
            .collect();
        Ok(json!({
            "lambda": self.lambda,
            "mu": self.mu,
            "S": self.s,
            "i": self.i,
            "j": self.j,
            "kappa1": self.kappa1,
            "kappa2": self.kappa2,
            "subsets": self.subsets,
            "conic": self.coefficients,
            "discriminant_in_u": self.discriminant_in_u().display("tau"),
            "unbranched": self.unbranched(),
            "boundary": pts,
        }))
    }
}

/// The node labels `(κ₁, κ₂, (1,1), κ₂, κ₁, (2))` read off the boundary
/// points of the conic.
pub fn six_point_cycle(frame: BoxFrame, lambda: &Partition, mu: &Partition) -> Result<Vec<Partition>, ConicError> {
    match four_point_solve(frame, lambda, mu)? {
        FourPoint::Conic(rep) => Ok(rep.boundary_points()?.into_iter().map(|p| p.label).collect()),
        _ => Err(ConicError::WrongSkewType),
    }
}

/// Checks every two-step segment `γ_{ij} ⊂ γ_{i(j+1)} ⊂ γ_{i(j+2)}` of every
/// diagram in `frame` with a non-domino skew shape: the conic sends the
/// point over `τ = 0` labeled `γ_{i(j+1)}` to the point over `τ = 1`, whose
/// label must be `γ_{j(j+2)}`.
pub fn consistency_with_growth(frame: BoxFrame) -> Result<bool, ConicError> {
    let r = frame.area() as i64;
    for g in cgd_enumerate(frame) {
        for i in 0..r {
            for j in i..=i + r - 2 {
                let lambda = g.get(i, j);
                let mu = g.get(i, j + 2).complement();
                let rep = match four_point_solve(frame, lambda, &mu)? {
                    FourPoint::Conic(rep) => rep,
                    _ => continue,
                };
                let pts = rep.boundary_points()?;
                let mid = g.get(i, j + 1);
                let t = pts
                    .iter()
                    .position(|p| p.tau.as_ref().is_some_and(Zero::is_zero) && &p.label == mid)
                    .ok_or_else(|| ConicError::Inconsistent(format!("no point over τ = 0 labeled {mid}")))?;
                if &pts[(t + 1) % 6].label != g.get(j, j + 2) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `a + b u + c v + e uv` with coefficients in `ℚ[τ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bilinear {
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
    pub e: Poly,
}

impl Bilinear {
    /// Quadratic in `v` left after substituting `u = −(a₁ + c₁v)/(b₁ + e₁v)`
    /// from `self` into `other` and clearing the denominator; coefficients
    /// `(v⁰, v¹, v²)`, made primitive.
    pub fn eliminate_u(&self, other: &Bilinear) -> [Poly; 3] {
        let (a1, b1, c1, e1) = (&self.a, &self.b, &self.c, &self.e);
        let (a2, b2, c2, e2) = (&other.a, &other.b, &other.c, &other.e);
        let v0 = a2.mul(b1).sub(&b2.mul(a1));
        let v1 = a2.mul(e1).add(&c2.mul(b1)).sub(&b2.mul(c1)).sub(&e2.mul(a1));
        let v2 = c2.mul(e1).sub(&e2.mul(c1));
        let p = primitive_part(&[v0, v1, v2]);
        [p[0].clone(), p[1].clone(), p[2].clone()]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Flag6Report {
    pub equations: [Bilinear; 2],
    pub eliminant: [Poly; 3],
    pub discriminant: Poly,
    pub root_intervals: Vec<(Rational, Rational)>,
    pub real_roots: Vec<f64>,
}

impl Flag6Report {
    pub fn to_json(&self) -> Value {
        json!({
            "eliminant": self.eliminant.iter().map(|p| p.display("tau")).collect::<Vec<_>>(),
            "quartic": self.discriminant.coeffs().iter().map(rat_str).collect::<Vec<_>>(),
            "real_roots": self.real_roots,
        })
    }
}

/// The `Fl(6)` example: `□₂` at 1 and `□₃` at `τ` on `ℙ¹ × ℙ¹`.
pub fn flag6_example() -> Flag6Report {
    let k = |c: i64| Poly::from_ints(&[c]);
    let e1 = Bilinear { a: k(4), b: k(-3), c: k(-5), e: k(4) };
    let e2 = Bilinear {
        a: k(16),
        b: Poly::from_ints(&[0, -6]),
        c: Poly::from_ints(&[0, -30]),
        e: Poly::from_ints(&[0, 0, 12]),
    };
    let eliminant = e1.eliminate_u(&e2);
    let [q0, q1, q2] = &eliminant;
    let discriminant = q1.mul(q1).sub(&q0.mul(q2).scale(&rat(4)));
    let width = Rational::new(BigInt::one(), BigInt::one() << 40);
    let root_intervals = isolate_real_roots(&discriminant, &width);
    let real_roots = real_roots(&discriminant);
    Flag6Report { equations: [e1, e2], eliminant, discriminant, root_intervals, real_roots }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(d: usize, n: usize) -> BoxFrame {
        BoxFrame::new(d, n).unwrap()
    }

    fn p(f: BoxFrame, parts: &[usize]) -> Partition {
        Partition::new(f, parts).unwrap()
    }

    fn conic(f: BoxFrame, l: &[usize], m: &[usize]) -> ConicReport {
        match four_point_solve(f, &p(f, l), &p(f, m)).unwrap() {
            FourPoint::Conic(r) => *r,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn wronski_examples() {
        let f = fr(2, 4);
        let one = |s: Vec<usize>| BTreeMap::from([(s, rat(1))]);
        let w = wronski_polynomial(f, &one(vec![1, 3])).unwrap();
        assert_eq!(w.terms(), vec![(1, rat(-2))]);
        let w = wronski_polynomial(f, &one(vec![1, 2])).unwrap();
        assert_eq!(w.terms(), vec![(2, rat(1))]);
        let w = wronski_polynomial(f, &one(vec![3, 4])).unwrap();
        assert_eq!(w.terms(), vec![(-2, rat(1))]);
        assert_eq!(wronski_polynomial(f, &BTreeMap::from([(vec![1, 3], rat(0))])), Err(ConicError::AllZero));
        assert!(wronski_polynomial(f, &one(vec![1, 5])).is_err());
        let mix = BTreeMap::from([(vec![1, 2], ratio(1, 3)), (vec![2, 4], rat(5))]);
        let tripled: BTreeMap<_, _> = mix.iter().map(|(k, v)| (k.clone(), v * rat(3))).collect();
        let (w1, w3) = (wronski_polynomial(f, &mix).unwrap(), wronski_polynomial(f, &tripled).unwrap());
        for (e, c) in w1.terms() {
            assert_eq!(w3.coefficient(e), c * rat(3));
        }
    }

    #[test]
    fn conic_of_grassmannian_2_4() {
        let f = fr(2, 4);
        let rep = conic(f, &[1], &[1]);
        assert_eq!(rep.subsets[0], vec![1, 3]);
        assert_eq!(rep.subsets[3], vec![2, 4]);
        assert!(rep.s.is_empty());
        assert_eq!((rep.i, rep.j), (1, 3));
        assert_eq!(rep.coefficients, [1, 2, 2, 3]);
        assert_eq!(rep.discriminant_in_u(), Poly::from_ints(&[4, -4, 4]));
        assert!(rep.unbranched());
    }

    #[test]
    fn conic_of_frame_2_6() {
        let f = fr(2, 6);
        let rep = conic(f, &[3, 1], &[2]);
        assert_eq!(rep.subsets[0], vec![2, 5]);
        assert_eq!(rep.subsets[3], vec![3, 6]);
        assert_eq!((rep.i, rep.j), (2, 5));
        assert_eq!(rep.coefficients, [2, 3, 3, 4]);
        assert_eq!(rep.kappa1, p(f, &[3, 2]));
        assert_eq!(rep.kappa2, p(f, &[4, 1]));
        let cycle = six_point_cycle(f, &p(f, &[3, 1]), &p(f, &[2])).unwrap();
        let want: Vec<Partition> =
            [&[3, 2][..], &[4, 1], &[1, 1], &[4, 1], &[3, 2], &[2]].iter().map(|x| p(f, x)).collect();
        assert_eq!(cycle, want);
    }

    #[test]
    fn degenerate_cases() {
        let f = fr(2, 4);
        let dom = four_point_solve(f, &p(f, &[2]), &f.empty()).unwrap();
        assert_eq!(dom, FourPoint::Degenerate { kappa: p(f, &[2, 1]) });
        assert_eq!(
            four_point_solve(f, &p(f, &[2, 1]), &f.empty()).unwrap_err(),
            ConicError::Codimension { got: 3, want: 2 }
        );
    }

    #[test]
    fn six_point_cycle_in_g24() {
        let f = fr(2, 4);
        let cycle = six_point_cycle(f, &f.single_box(), &f.single_box()).unwrap();
        let (a, b) = (p(f, &[1, 1]), p(f, &[2]));
        assert_eq!(cycle, vec![a.clone(), b.clone(), a.clone(), b.clone(), a, b]);
    }

    #[test]
    fn boundary_points_of_g24() {
        let f = fr(2, 4);
        let pts = conic(f, &[1], &[1]).boundary_points().unwrap();
        let us: Vec<Option<Rational>> = pts.iter().map(|x| x.u.clone()).collect();
        assert_eq!(us, vec![None, Some(rat(0)), Some(rat(1)), Some(ratio(3, 2)), Some(rat(2)), Some(rat(3))]);
        let taus: Vec<Option<Rational>> = pts.iter().map(|x| x.tau.clone()).collect();
        assert_eq!(taus, vec![None, Some(rat(0)), Some(rat(1)), None, Some(rat(0)), Some(rat(1))]);
    }

    #[test]
    fn pluecker_relation_and_wronski_roots() {
        for (d, n) in [(2, 4), (2, 5), (2, 6), (3, 6)] {
            let f = fr(d, n);
            for lambda in f.partitions() {
                for mu in f.partitions_of_size((f.area() - 2).saturating_sub(lambda.size())) {
                    if lambda.size() + mu.size() != f.area() - 2 {
                        continue;
                    }
                    let FourPoint::Conic(rep) = four_point_solve(f, &lambda, &mu).unwrap() else { continue };
                    assert!(rep.unbranched() && rep.u_monotone());
                    for u in [ratio(1, 3), ratio(5, 7), rat(4), ratio(-2, 5)] {
                        let Some(tau) = rep.tau_of_u(&u) else { continue };
                        assert!(rep.conic_at(&tau, &u).is_zero());
                        let h = rep.homogeneous_pluecker(Some(&u));
                        assert_eq!(&h[0] * &h[3], &h[1] * &h[2]);
                        if tau.is_zero() || tau.is_one() {
                            continue;
                        }
                        let w = wronski_polynomial(f, &rep.pluecker_at(&tau, &u)).unwrap();
                        assert_eq!(w.shifted().degree(), Some(2));
                        assert!(w.eval(&rat(1)).is_zero());
                        assert!(w.eval(&tau).is_zero());
                    }
                    let h = rep.homogeneous_pluecker(None);
                    assert_eq!(&h[0] * &h[3], &h[1] * &h[2]);
                    let cyc = rep.boundary_points().unwrap();
                    assert_eq!(cyc[0].label, cyc[4].label);
                    assert_eq!(cyc[1].label, cyc[3].label);
                    for tau in [rat(0), rat(1)] {
                        let mut over: Vec<Rational> =
                            cyc.iter().filter(|x| x.tau.as_ref() == Some(&tau)).map(|x| x.u.clone().unwrap()).collect();
                        over.sort();
                        let g = (rep.j - rep.i) as i64;
                        let want = if tau.is_zero() {
                            vec![rat(0), ratio(g, g - 1)]
                        } else {
                            vec![rat(1), ratio(g + 1, g - 1)]
                        };
                        assert_eq!(over, want);
                    }
                }
            }
        }
    }

    #[test]
    fn conic_cases_are_classified() {
        let f = fr(2, 5);
        let dom = |l: &[usize], m: &[usize], k: &[usize]| {
            assert_eq!(four_point_solve(f, &p(f, l), &p(f, m)).unwrap(), FourPoint::Degenerate { kappa: p(f, k) });
        };
        dom(&[3], &[1], &[3, 1]);
        dom(&[2], &[1, 1], &[2, 1]);
        dom(&[1, 1], &[1, 1], &[2, 1]);
        assert!(matches!(four_point_solve(f, &p(f, &[2]), &p(f, &[2])).unwrap(), FourPoint::Conic(_)));
        assert!(four_point_solve(f, &p(f, &[2]), &p(f, &[1])).is_err());
        assert_eq!(six_point_cycle(f, &p(f, &[2]), &p(f, &[1, 1])), Err(ConicError::WrongSkewType));
        let f6 = fr(2, 6);
        assert_eq!(four_point_solve(f6, &p(f6, &[1, 1]), &p(f6, &[4])).unwrap(), FourPoint::Empty);
    }

    #[test]
    fn growth_consistency() {
        assert!(consistency_with_growth(fr(2, 4)).unwrap());
        assert!(consistency_with_growth(fr(2, 5)).unwrap());
    }

    #[test]
    fn flag6() {
        let rep = flag6_example();
        assert_eq!(rep.eliminant[0], Poly::from_ints(&[-12, 6]));
        assert_eq!(rep.eliminant[1], Poly::from_ints(&[16, 15, -12]));
        assert_eq!(rep.eliminant[2], Poly::from_ints(&[0, -30, 15]));
        assert_eq!(rep.discriminant, Poly::from_ints(&[256, -960, 1281, -720, 144]));
        let want = [0.678121, 0.945553, 1.41011, 1.96622];
        assert_eq!(rep.real_roots.len(), 4);
        for (x, w) in rep.real_roots.iter().zip(want) {
            assert!((x - w).abs() < 1e-4, "{x} vs {w}");
        }
    }

    #[test]
    fn poly_basics() {
        let p1 = Poly::from_ints(&[-1, 0, 1]);
        let (q, r) = p1.div_rem(&Poly::from_ints(&[-1, 1]));
        assert_eq!(q, Poly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(p1.display("t"), "-1 + t^2");
        assert_eq!(real_roots(&p1.mul(&p1)), vec![-1.0, 1.0]);
        assert_eq!(
            Poly::from_ints(&[256, -960, 1281, -720, 144]).display("τ"),
            "256 - 960τ + 1281τ^2 - 720τ^3 + 144τ^4"
        );
        let pp = primitive_part(&[Poly::new(vec![ratio(1, 2), ratio(3, 4)])]);
        assert_eq!(pp[0], Poly::from_ints(&[2, 3]));
    }
}
