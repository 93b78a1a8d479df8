//! The inhomogeneous Weil height `H_K` of algebraic integers and integral
//! vectors.
//!
//! For `α ∈ O_K^n` every finite place contributes 1, and in a totally real
//! field every archimedean local degree is 1, so
//! `H_K(α) = Π_i max{1, |σ_i(α_1)|, ..., |σ_i(α_n)|}`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::embeddings::{cmp_abs_one, embed_with_cap};
use crate::error::{Error, Result};
use crate::interval::{int_rat, Enclosure};
use crate::nf::FieldElement;
use crate::DEFAULT_PRECISION_CAP;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightValue {
    pub enclosure: Enclosure,
    pub degree: usize,
    /// Width target the enclosure was computed for.
    pub eps: BigRational,
    /// Set when the height was identified as an exact integer.
    pub exact: Option<BigInt>,
}

impl HeightValue {
    fn exact(value: BigInt, degree: usize, eps: &BigRational) -> Self {
        HeightValue { enclosure: Enclosure::from_int(value.clone()), degree, eps: eps.clone(), exact: Some(value) }
    }

    /// Enclosure of the absolute height `H = H_K^{1/d}`.
    pub fn absolute(&self, eps: &BigRational) -> Enclosure {
        self.enclosure.nth_root(self.degree as u32, eps)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HeightOrdering {
    Below,
    Equal,
    Above,
    Ambiguous,
}

impl HeightOrdering {
    pub fn name(self) -> &'static str {
        match self {
            HeightOrdering::Below => "Below",
            HeightOrdering::Equal => "Equal",
            HeightOrdering::Above => "Above",
            HeightOrdering::Ambiguous => "Ambiguous",
        }
    }
}

pub fn height_elem(beta: &FieldElement, eps: &BigRational) -> Result<HeightValue> {
    height_vector(std::slice::from_ref(beta), eps)
}

pub fn height_vector(alpha: &[FieldElement], eps: &BigRational) -> Result<HeightValue> {
    height_vector_with_cap(alpha, eps, DEFAULT_PRECISION_CAP)
}

pub fn height_vector_with_cap(alpha: &[FieldElement], eps: &BigRational, cap: u32) -> Result<HeightValue> {
    let first = alpha.first().ok_or_else(|| Error::PreconditionViolated("height of an empty vector".into()))?;
    let field = first.field();
    if alpha.iter().any(|a| !a.field().same_field(field)) {
        return Err(Error::FieldMismatch);
    }
    let d = field.degree();

    if alpha.len() == 1 {
        if let Some(h) = exact_single(first, cap)? {
            return Ok(HeightValue::exact(h, d, eps));
        }
    }

    let mut place_eps = eps.clone();
    for _ in 0..64 {
        let mut product = Enclosure::from_int(1);
        let mut dominant = Vec::with_capacity(d);
        for place in 0..d {
            let values: Vec<Enclosure> = alpha
                .iter()
                .map(|a| embed_with_cap(a, place, &place_eps, cap).map(|e| e.abs()))
                .collect::<Result<_>>()?;
            let mut m = Enclosure::from_int(1);
            for v in &values {
                m = m.max(v);
            }
            dominant.push(dominant_index(&values));
            product = &product * &m;
        }
        if let Some(h) = exact_from_dominant(alpha, &dominant) {
            return Ok(HeightValue::exact(h, d, eps));
        }
        let w = product.width();
        if &w <= eps {
            return Ok(HeightValue { enclosure: product, degree: d, eps: eps.clone(), exact: None });
        }
        place_eps = std::cmp::min(&place_eps / int_rat(2), &place_eps * eps / (w * int_rat(2)));
    }
    Err(Error::PrecisionExhausted { cap })
}

/// Index `k` whose value certainly exceeds 1 and every other entry.
fn dominant_index(values: &[Enclosure]) -> Option<usize> {
    let (k, best) = values.iter().enumerate().max_by(|a, b| a.1.lo().cmp(b.1.lo()))?;
    if best.lo() <= &BigRational::one() {
        return None;
    }
    let beats_all = values.iter().enumerate().all(|(j, v)| j == k || v.hi() < best.lo());
    beats_all.then_some(k)
}

/// When one element dominates at every place, `H_K(α) = |N(α_k)|`.
fn exact_from_dominant(alpha: &[FieldElement], dominant: &[Option<usize>]) -> Option<BigInt> {
    let k = (*dominant.first()?)?;
    if dominant.iter().all(|&x| x == Some(k)) {
        Some(alpha[k].abs_norm())
    } else {
        None
    }
}

/// Exact height of a single element when it is an integer: `1` for
/// `0, ±1`, `|N(β)|` when every conjugate exceeds 1 in absolute value.
fn exact_single(beta: &FieldElement, cap: u32) -> Result<Option<BigInt>> {
    let units = beta.is_zero() || beta.is_one() || (-beta).is_one();
    if units {
        return Ok(Some(BigInt::one()));
    }
    // β ≠ ±1, so no conjugate has absolute value exactly 1.
    let d = beta.field().degree();
    let mut above = 0;
    for place in 0..d {
        if cmp_abs_one(beta, place, cap)? == Ordering::Greater {
            above += 1;
        }
    }
    Ok(if above == d {
        Some(beta.abs_norm())
    } else if above == 0 {
        Some(BigInt::one())
    } else {
        None
    })
}

/// Compare `H_K(β)` with a nonnegative rational threshold.
///
/// Exact heights are compared exactly. Otherwise the enclosure is refined
/// until it separates from the threshold; after `cap` rounds the answer is
/// `Ambiguous`.
pub fn compare_height(beta: &FieldElement, threshold: &BigRational, cap: u32) -> Result<HeightOrdering> {
    if let Some(h) = exact_single(beta, cap)? {
        return Ok(match BigRational::from_integer(h).cmp(threshold) {
            Ordering::Less => HeightOrdering::Below,
            Ordering::Equal => HeightOrdering::Equal,
            Ordering::Greater => HeightOrdering::Above,
        });
    }
    let mut eps = int_rat(1) / int_rat(1024);
    for _ in 0..cap.min(64) {
        let h = match height_vector_with_cap(std::slice::from_ref(beta), &eps, cap) {
            Ok(h) => h,
            Err(Error::PrecisionExhausted { .. }) => return Ok(HeightOrdering::Ambiguous),
            Err(e) => return Err(e),
        };
        match h.enclosure.cmp_rat(threshold) {
            Some(Ordering::Less) => return Ok(HeightOrdering::Below),
            Some(Ordering::Greater) => return Ok(HeightOrdering::Above),
            Some(Ordering::Equal) => return Ok(HeightOrdering::Equal),
            None => eps = eps / int_rat(1 << 16),
        }
    }
    Ok(HeightOrdering::Ambiguous)
}

/// `H_K(α)^{1/d}`, the absolute height, as an enclosure.
pub fn absolute_height(alpha: &[FieldElement], eps: &BigRational) -> Result<Enclosure> {
    Ok(height_vector(alpha, eps)?.absolute(eps))
}

/// Upper end of an enclosure for `H_K`, rounded up to an integer.
pub fn height_ceiling(h: &HeightValue) -> BigInt {
    let c = h.enclosure.ceil_hi();
    if c.is_negative() {
        BigInt::one()
    } else {
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::rat;
    use crate::nf::NumberField;

    fn sqrt2() -> NumberField {
        NumberField::with_power_basis(&[-2, 0, 1]).unwrap()
    }

    fn eps() -> BigRational {
        rat(1, 1_000_000_000_000)
    }

    #[test]
    fn single_element_heights() {
        let k = sqrt2();
        let h1 = height_elem(&k.one(), &eps()).unwrap();
        assert_eq!(h1.exact, Some(BigInt::one()));
        let h = height_elem(&k.element_i64(&[3, 1]).unwrap(), &eps()).unwrap();
        assert_eq!(h.exact, Some(BigInt::from(7)));
        let r2 = height_elem(&k.element_i64(&[0, 1]).unwrap(), &eps()).unwrap();
        assert!(r2.enclosure.contains(&rat(2, 1)));
        // 1 + √2 has conjugates 2.414 and -0.414: H = 1 + √2.
        let mixed = height_elem(&k.element_i64(&[1, 1]).unwrap(), &eps()).unwrap();
        assert_eq!(mixed.exact, None);
        assert!(mixed.enclosure.width() <= eps());
        assert!(mixed.enclosure.lo() > &rat(24142, 10000) && mixed.enclosure.hi() < &rat(24143, 10000));
    }

    #[test]
    fn vector_heights() {
        let k = sqrt2();
        let alpha = k.elements(&[&[1, 0], &[4, 1], &[6, 2]]).unwrap();
        let h = height_vector(&alpha, &eps()).unwrap();
        assert_eq!(h.exact, Some(BigInt::from(28)));
        assert!(h.enclosure.contains(&rat(28, 1)));
        let q = NumberField::rationals();
        assert_eq!(height_vector(&[q.from_int(5)], &eps()).unwrap().exact, Some(BigInt::from(5)));
        assert_eq!(height_vector(&[q.one()], &eps()).unwrap().enclosure, Enclosure::from_int(1));
    }

    #[test]
    fn threshold_comparisons() {
        let k = sqrt2();
        let b = k.element_i64(&[3, 1]).unwrap();
        assert_eq!(compare_height(&b, &rat(7, 1), 256).unwrap(), HeightOrdering::Equal);
        assert_eq!(compare_height(&b, &rat(69, 10), 256).unwrap(), HeightOrdering::Above);
        assert_eq!(compare_height(&k.one(), &rat(2, 1), 256).unwrap(), HeightOrdering::Below);
        assert_eq!(compare_height(&k.element_i64(&[0, 1]).unwrap(), &rat(3, 1), 256).unwrap(), HeightOrdering::Below);
        let mixed = k.element_i64(&[1, 1]).unwrap();
        assert_eq!(compare_height(&mixed, &rat(12, 5), 256).unwrap(), HeightOrdering::Above);
        assert_eq!(compare_height(&mixed, &rat(5, 2), 256).unwrap(), HeightOrdering::Below);
    }
}
