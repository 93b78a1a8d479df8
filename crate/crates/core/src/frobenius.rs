//! Upper bounds on `g_s(α)`, the exact value over `Z`, certified lower bounds
//! for `g_s(α, β)` when `d >= 2`, and the lower bounds on `D(α)` and `H(α)`
//! that follow from the existence of a gap.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::heights::absolute_height;
use crate::interval::{int_rat, Enclosure};
use crate::measures::{d_measure, factorial};
use crate::nf::{FieldElement, NumberField};
use crate::semigroup::{
    check_generators, cone_membership, cone_membership_coords, count_representations_upto, shell, witness_search,
    ConeMembership, GeneratorSystem, Verdict, DEFAULT_WORK_LIMIT,
};

pub fn default_eps() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(30u32))
}

#[derive(Clone, Debug)]
pub struct FrobeniusBound {
    pub s: u64,
    pub n: usize,
    pub d: usize,
    pub d_value: BigInt,
    pub bound: Enclosure,
    pub bound_ceiling: BigInt,
}

/// `(1/(2√(k+1))) (k D + (s-1)^{1/k} D^{(k+1)/(2k)})` with `k = n - d`.
pub fn bound_formula(n: usize, d: usize, d_value: &BigInt, s: u64, eps: &BigRational) -> Result<Enclosure> {
    if n <= d {
        return Err(Error::PreconditionViolated(format!("need n > d, got n = {n}, d = {d}")));
    }
    if s == 0 {
        return Err(Error::PreconditionViolated("s must be positive".into()));
    }
    let k = (n - d) as u32;
    let dv = int_rat(d_value.clone());
    let first = Enclosure::point(int_rat(k) * &dv);
    let s_root = Enclosure::from_int(s - 1).nth_root(k, eps);
    let d_pow = Enclosure::point(num_traits::pow(dv, (k + 1) as usize)).nth_root(2 * k, eps);
    let inner = &first + &(&s_root * &d_pow);
    let denom = Enclosure::from_int(k + 1).sqrt(eps).scale(&int_rat(2));
    Ok(inner.div(&denom))
}

pub fn frobenius_upper_bound(sys: &GeneratorSystem, s: u64) -> Result<FrobeniusBound> {
    frobenius_upper_bound_with_eps(sys, s, &default_eps())
}

pub fn frobenius_upper_bound_with_eps(sys: &GeneratorSystem, s: u64, eps: &BigRational) -> Result<FrobeniusBound> {
    sys.require_valid()?;
    let d_value = d_measure(sys.generators())?;
    let bound = bound_formula(sys.n(), sys.d(), &d_value, s, eps)?;
    Ok(FrobeniusBound { s, n: sys.n(), d: sys.d(), bound_ceiling: bound.ceil_hi(), d_value, bound })
}

/// The generator system of a tuple of positive integers over `Q`.
pub fn rational_system(a: &[u64]) -> Result<GeneratorSystem> {
    let q = NumberField::rationals();
    let alpha: Vec<FieldElement> = a.iter().map(|&v| q.from_int(v)).collect();
    check_generators(&alpha)
}

/// The bound specialised to `K = Q`, where `D(a) = Σ a_i^2`.
pub fn classical_bound(a: &[u64], s: u64) -> Result<FrobeniusBound> {
    let d_value: BigInt = a.iter().map(|&v| BigInt::from(v) * v).sum();
    let bound = bound_formula(a.len(), 1, &d_value, s, &default_eps())?;
    Ok(FrobeniusBound { s, n: a.len(), d: 1, bound_ceiling: bound.ceil_hi(), d_value, bound })
}

/// Number of representations of each `t in 0..=limit`, saturating at `cap`.
pub fn denumerants(a: &[u64], limit: usize, cap: u64) -> Vec<u64> {
    let mut r = vec![0u64; limit + 1];
    r[0] = 1.min(cap);
    for &ai in a {
        let ai = ai as usize;
        for t in ai..=limit {
            r[t] = (r[t] + r[t - ai]).min(cap);
        }
    }
    r
}

/// Largest positive `t` with fewer than `s` representations, or `0` when
/// every positive integer has at least `s`.
pub fn classical_frobenius(a: &[u64], s: u64) -> Result<u64> {
    classical_frobenius_limited(a, s, DEFAULT_WORK_LIMIT)
}

pub fn classical_frobenius_limited(a: &[u64], s: u64, work_limit: u64) -> Result<u64> {
    if a.len() < 2 || a.contains(&0) || s == 0 {
        return Err(Error::PreconditionViolated("need at least two positive generators and s >= 1".into()));
    }
    if a.iter().fold(0u64, |g, &v| g.gcd(&v)) != 1 {
        return Err(Error::NotCoprime);
    }
    let a_min = *a.iter().min().unwrap() as usize;
    let a_max = *a.iter().max().unwrap() as usize;
    let ceiling = classical_bound(a, s)?.bound_ceiling.to_usize().unwrap_or(usize::MAX);
    let mut c = ceiling.max(2 * a_max);
    loop {
        if (c as u128) * (a.len() as u128) > work_limit as u128 {
            return Err(Error::WorkLimitExceeded { limit: work_limit });
        }
        let r = denumerants(a, c, s);
        // r(t + a_i) >= r(t): a full window of a_min values at the top covers
        // every larger t.
        if r[c + 1 - a_min..].iter().all(|&v| v >= s) {
            return Ok((1..=c).rev().find(|&t| r[t] < s).unwrap_or(0) as u64);
        }
        c *= 2;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub t_max: u64,
    pub shell_limit: u64,
}

/// Witness that `g_s(α, β) > t_falsified`.
#[derive(Clone, Debug)]
pub struct LowerBoundCertificate {
    pub beta: FieldElement,
    pub t_falsified: u64,
    pub witness: FieldElement,
    pub witness_reps: usize,
    pub s: u64,
    pub search_limits: SearchLimits,
}

impl LowerBoundCertificate {
    /// Re-derive both facts behind the certificate from scratch.
    pub fn recheck(&self, sys: &GeneratorSystem) -> Result<bool> {
        let offset = &self.witness - &self.beta.scale(&BigInt::from(self.t_falsified));
        let interior = cone_membership(sys, &offset)? == ConeMembership::InInterior;
        let reps = count_representations_upto(sys, &self.witness, self.s as usize, DEFAULT_WORK_LIMIT)?;
        Ok(interior && (reps as u64) < self.s && reps == self.witness_reps)
    }
}

/// Scan `t = t_max, …, 1` for a lattice point `z = tβ + w` with `w` in the
/// open cone and `r(z) < s`, offsets `w` ordered by sup-norm shells.
pub fn gs_lower_search(
    sys: &GeneratorSystem,
    beta: &FieldElement,
    t_max: u64,
    shell_limit: u64,
    s: u64,
) -> Result<Option<LowerBoundCertificate>> {
    gs_lower_search_range(sys, beta, 1, t_max, shell_limit, s)
}

/// As [`gs_lower_search`], restricted to `t_min <= t <= t_max`.
///
/// Since `int(tβ + C) ⊂ int(t'β + C)` for `t' <= t`, a certificate at any
/// `t >= t_min` yields one at `t_min` with the same witness; scanning only
/// from `t_min` up is enough to test a claimed bound `g_s(α, β) <= t_min`.
pub fn gs_lower_search_range(
    sys: &GeneratorSystem,
    beta: &FieldElement,
    t_min: u64,
    t_max: u64,
    shell_limit: u64,
    s: u64,
) -> Result<Option<LowerBoundCertificate>> {
    sys.require_valid()?;
    if cone_membership(sys, beta)? != ConeMembership::InInterior {
        return Err(Error::PreconditionViolated("beta must lie in the open cone".into()));
    }
    if s == 0 {
        return Err(Error::PreconditionViolated("s must be positive".into()));
    }
    let field = sys.field();
    let shells: Vec<Vec<Vec<i64>>> = (0..=shell_limit as i64).map(|r| shell(sys.d(), r)).collect();
    for t in (t_min.max(1)..=t_max).rev() {
        let base = beta.scale(&BigInt::from(t));
        for w in shells.iter().flatten() {
            let w: Vec<BigInt> = w.iter().map(|&v| BigInt::from(v)).collect();
            if cone_membership_coords(sys.matrix(), &w) != ConeMembership::InInterior {
                continue;
            }
            let z = &base + &field.element(w)?;
            let reps = count_representations_upto(sys, &z, s as usize, DEFAULT_WORK_LIMIT)?;
            if (reps as u64) < s {
                return Ok(Some(LowerBoundCertificate {
                    beta: beta.clone(),
                    t_falsified: t,
                    witness: z,
                    witness_reps: reps,
                    s,
                    search_limits: SearchLimits { t_max, shell_limit },
                }));
            }
        }
    }
    Ok(None)
}

/// Lower bounds forced by a gap `Sg(α) ≠ C_Q(α) ∩ O_K`.
#[derive(Clone, Debug)]
pub struct CorollaryReport {
    pub witness: FieldElement,
    pub d_value: BigInt,
    /// `max{1, 2√(n-d+1)/(n-d)}`
    pub d_lower: Enclosure,
    pub d_verdict: Verdict,
    /// `H(α) = H_K(α)^{1/d}`
    pub abs_height: Enclosure,
    /// `(2|Δ_K|√(n-d+1)(n-d-1)!/(d! n!))^{1/(2d)}`
    pub h_lower: Enclosure,
    pub h_verdict: Verdict,
    /// `(|Δ_K|/(3√2))^{1/4}`, only for `d = 2, n = 3`.
    pub quadratic_lower: Option<Enclosure>,
    pub quadratic_verdict: Verdict,
}

impl CorollaryReport {
    pub fn all_hold(&self) -> bool {
        [self.d_verdict, self.h_verdict, self.quadratic_verdict]
            .iter()
            .all(|v| matches!(v, Verdict::Holds | Verdict::NotApplicable))
    }
}

fn at_least(value: &Enclosure, bound: &Enclosure) -> Verdict {
    if value.lo() >= bound.hi() {
        Verdict::Holds
    } else if value.hi() < bound.lo() {
        Verdict::Violated
    } else {
        Verdict::Undecided
    }
}

pub fn corollary_report(sys: &GeneratorSystem, coord_box: u64, eps: &BigRational) -> Result<CorollaryReport> {
    sys.require_valid()?;
    let (n, d) = (sys.n(), sys.d());
    if n <= d {
        return Err(Error::PreconditionViolated(format!("need n > d, got n = {n}, d = {d}")));
    }
    let witness = witness_search(sys, coord_box)?
        .ok_or_else(|| Error::HypothesisNotEstablished(format!("no gap found with |b| <= {coord_box}")))?;
    let k = (n - d) as u64;
    let d_value = d_measure(sys.generators())?;
    let root = Enclosure::from_int(k + 1).sqrt(eps);
    let ratio = root.scale(&BigRational::new(BigInt::from(2), BigInt::from(k)));
    let d_lower = ratio.max_rat(&BigRational::one());
    let d_verdict = at_least(&Enclosure::point(int_rat(d_value.clone())), &d_lower);

    let abs_height = absolute_height(sys.generators(), eps)?;
    let delta = int_rat(sys.field().discriminant().clone().abs_value());
    let coeff = &delta * int_rat(2) * int_rat(factorial(k as usize - 1)) / int_rat(factorial(d) * factorial(n));
    let h_lower = root.scale(&coeff).nth_root(2 * d as u32, eps);
    let h_verdict = at_least(&abs_height, &h_lower);

    let (quadratic_lower, quadratic_verdict) = if d == 2 && n == 3 {
        let three_root2 = Enclosure::from_int(18).sqrt(eps);
        let q = Enclosure::point(delta).div(&three_root2).nth_root(4, eps);
        let v = at_least(&abs_height, &q);
        (Some(q), v)
    } else {
        (None, Verdict::NotApplicable)
    };
    Ok(CorollaryReport {
        witness,
        d_value,
        d_lower,
        d_verdict,
        abs_height,
        h_lower,
        h_verdict,
        quadratic_lower,
        quadratic_verdict,
    })
}

trait AbsValue {
    fn abs_value(self) -> Self;
}

impl AbsValue for BigInt {
    fn abs_value(self) -> Self {
        if self < BigInt::zero() {
            -self
        } else {
            self
        }
    }
}
