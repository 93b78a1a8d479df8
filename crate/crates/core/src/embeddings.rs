//! Real embeddings `σ_1, ..., σ_d` realized through isolated roots of the
//! defining polynomial.
//!
//! Places are indexed from 0 in increasing order of the corresponding root.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::interval::{int_rat, Enclosure};
use crate::nf::{FieldElement, NumberField};
use crate::poly::{isolate_real_roots, IsolatedRoot, Poly};
use crate::DEFAULT_PRECISION_CAP;

/// Sorted, pairwise disjoint isolating intervals for the real roots of `f`.
///
/// Refinements are cached behind a mutex so concurrent readers share work; an
/// interval only ever shrinks.
pub struct RootSystem {
    poly: Poly,
    initial: Vec<IsolatedRoot>,
    refined: Mutex<Vec<IsolatedRoot>>,
}

impl RootSystem {
    pub fn new(poly: Poly, roots: Vec<IsolatedRoot>) -> Self {
        RootSystem { poly, refined: Mutex::new(roots.clone()), initial: roots }
    }

    pub fn len(&self) -> usize {
        self.initial.len()
    }

    pub fn is_empty(&self) -> bool {
        self.initial.is_empty()
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// The isolating intervals as first computed.
    pub fn isolating_intervals(&self) -> &[IsolatedRoot] {
        &self.initial
    }

    /// Isolating interval of root `place` with width at most `width`.
    ///
    /// Fails with `PrecisionExhausted` when that would need more than `cap`
    /// halvings of the original interval.
    pub fn root(&self, place: usize, width: &BigRational, cap: u32) -> Result<IsolatedRoot> {
        let initial = &self.initial[place];
        if !initial.is_exact() {
            let floor = initial.width() / int_rat(BigInt::from(1) << cap as usize);
            if width < &floor {
                return Err(Error::PrecisionExhausted { cap });
            }
        }
        let mut cache = self.refined.lock().expect("root cache poisoned");
        let r = &mut cache[place];
        r.refine_to(&self.poly, width);
        Ok(r.clone())
    }

    fn current(&self, place: usize) -> IsolatedRoot {
        self.refined.lock().expect("root cache poisoned")[place].clone()
    }
}

impl Clone for RootSystem {
    fn clone(&self) -> Self {
        let refined = self.refined.lock().expect("root cache poisoned").clone();
        RootSystem { poly: self.poly.clone(), initial: self.initial.clone(), refined: Mutex::new(refined) }
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem").field("intervals", &self.initial).finish()
    }
}

/// Fresh root isolation for the field's defining polynomial.
pub fn isolate_roots(field: &NumberField) -> RootSystem {
    let poly = field.poly().clone();
    let roots = isolate_real_roots(&poly);
    RootSystem::new(poly, roots)
}

/// Enclosure of `σ_place(a)` of width at most `eps`.
pub fn embed(a: &FieldElement, place: usize, eps: &BigRational) -> Result<Enclosure> {
    embed_with_cap(a, place, eps, DEFAULT_PRECISION_CAP)
}

pub fn embed_with_cap(a: &FieldElement, place: usize, eps: &BigRational, cap: u32) -> Result<Enclosure> {
    let field = a.field();
    assert!(place < field.degree(), "place index out of range");
    let p = a.power_poly();
    if p.degree().map_or(true, |d| d == 0) {
        return Ok(Enclosure::point(p.coeffs().first().cloned().unwrap_or_else(BigRational::zero)));
    }
    let roots = field.roots();
    let mut root = roots.current(place);
    loop {
        let value = p.eval_enclosure(&root.enclosure());
        let w = value.width();
        if &w <= eps {
            return Ok(value);
        }
        // Horner enclosures shrink roughly linearly with the root width.
        let halved = root.width() / int_rat(2);
        let target = std::cmp::min(halved, root.width() * eps / (w * int_rat(2)));
        root = roots.root(place, &target, cap)?;
    }
}

/// Enclosures of all `d` embeddings of `a`.
pub fn embed_all(a: &FieldElement, eps: &BigRational) -> Result<Vec<Enclosure>> {
    (0..a.field().degree()).map(|p| embed(a, p, eps)).collect()
}

/// Certified sign of `σ_place(a)`.
pub fn sign_at(a: &FieldElement, place: usize, cap: u32) -> Result<Ordering> {
    if a.is_zero() {
        return Ok(Ordering::Equal);
    }
    let field = a.field();
    let p = a.power_poly();
    let roots = field.roots();
    let mut root = roots.current(place);
    loop {
        // a ≠ 0 and σ is injective, so the value is nonzero and this terminates.
        if let Some(s) = p.eval_enclosure(&root.enclosure()).sign() {
            return Ok(s);
        }
        let target = root.width() / int_rat(2);
        root = roots.root(place, &target, cap)?;
    }
}

/// Whether `a` lies in `O_K^+`, i.e. every conjugate is `>= 0`.
pub fn certify_total_nonneg(a: &FieldElement) -> Result<bool> {
    certify_total_nonneg_with_cap(a, DEFAULT_PRECISION_CAP)
}

pub fn certify_total_nonneg_with_cap(a: &FieldElement, cap: u32) -> Result<bool> {
    if a.is_zero() {
        return Ok(true);
    }
    for place in 0..a.field().degree() {
        if sign_at(a, place, cap)? == Ordering::Less {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compare `|σ_place(a)|` with 1.
pub fn cmp_abs_one(a: &FieldElement, place: usize, cap: u32) -> Result<Ordering> {
    let one = a.field().one();
    let above = sign_at(&(a - &one), place, cap)?;
    let below = sign_at(&(a + &one), place, cap)?;
    Ok(match (above, below) {
        (Ordering::Greater, _) | (_, Ordering::Less) => Ordering::Greater,
        (Ordering::Equal, _) | (_, Ordering::Equal) => Ordering::Equal,
        _ => Ordering::Less,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::{decimal_string, rat};

    fn sqrt2() -> NumberField {
        NumberField::with_power_basis(&[-2, 0, 1]).unwrap()
    }

    #[test]
    fn isolation_of_examples() {
        let rs = isolate_roots(&sqrt2());
        assert_eq!(rs.len(), 2);
        let iv = rs.isolating_intervals();
        assert!(iv[0].lo() < &rat(-1415, 1000) && iv[0].hi() > &rat(-1414, 1000));
        assert!(iv[1].lo() < &rat(1414, 1000) && iv[1].hi() > &rat(1415, 1000));
        assert!(iv[0].hi() <= iv[1].lo());
        let q = NumberField::rationals();
        let rq = isolate_roots(&q);
        assert_eq!(rq.len(), 1);
        assert!(rq.isolating_intervals()[0].enclosure().contains(&rat(1, 1)));
    }

    #[test]
    fn embeddings_of_quadratic_elements() {
        let k = sqrt2();
        let eps = rat(1, 1_000_000_000);
        let one = embed(&k.one(), 0, &eps).unwrap();
        assert!(one.is_point() && one.contains(&rat(1, 1)));
        // place 1 is +√2, place 0 is -√2
        let a = embed(&k.element_i64(&[4, 1]).unwrap(), 1, &eps).unwrap();
        assert!(a.width() <= eps);
        assert_eq!(decimal_string(&a.midpoint(), 4), "5.4142");
        let b = embed(&k.element_i64(&[6, 2]).unwrap(), 0, &eps).unwrap();
        assert_eq!(decimal_string(&b.midpoint(), 4), "3.1716");
    }

    #[test]
    fn total_positivity() {
        let k = sqrt2();
        assert!(certify_total_nonneg(&k.zero()).unwrap());
        assert!(certify_total_nonneg(&k.element_i64(&[4, 1]).unwrap()).unwrap());
        assert!(!certify_total_nonneg(&k.element_i64(&[1, -1]).unwrap()).unwrap());
        assert!(!certify_total_nonneg(&k.element_i64(&[-1, 0]).unwrap()).unwrap());
    }

    #[test]
    fn abs_vs_one() {
        let k = sqrt2();
        assert_eq!(cmp_abs_one(&k.element_i64(&[1, 1]).unwrap(), 0, 256).unwrap(), Ordering::Less);
        assert_eq!(cmp_abs_one(&k.element_i64(&[1, 1]).unwrap(), 1, 256).unwrap(), Ordering::Greater);
        assert_eq!(cmp_abs_one(&k.element_i64(&[-1, 0]).unwrap(), 1, 256).unwrap(), Ordering::Equal);
    }

    #[test]
    fn cap_is_enforced() {
        let k = sqrt2();
        let tiny = rat(1, 1) / int_rat(BigInt::from(1) << 400usize);
        let r = embed_with_cap(&k.element_i64(&[0, 1]).unwrap(), 1, &tiny, 64);
        assert_eq!(r.unwrap_err(), Error::PrecisionExhausted { cap: 64 });
    }
}
