//! Closed intervals with rational endpoints.
//!
//! All arithmetic is exact on the endpoints, so every operation returns an
//! interval containing the exact image of its inputs. [`Enclosure::round_outward`]
//! trades a little width for bounded denominators.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Enclosure {
    lo: BigRational,
    hi: BigRational,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn int_rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `2^-bits` as a rational.
pub fn dyadic_eps(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits as usize)
}

impl Enclosure {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "enclosure with lo > hi");
        Enclosure { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Enclosure { lo: x.clone(), hi: x }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::point(int_rat(n))
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / int_rat(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn intersects(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Certified sign, or `None` if the interval straddles or touches zero
    /// without being the point zero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Certified comparison against a rational, `None` when undecided.
    pub fn cmp_rat(&self, x: &BigRational) -> Option<Ordering> {
        if &self.lo > x {
            Some(Ordering::Greater)
        } else if &self.hi < x {
            Some(Ordering::Less)
        } else if self.is_point() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn abs(&self) -> Enclosure {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self
        } else {
            let hi = std::cmp::max(-self.lo.clone(), self.hi.clone());
            Enclosure::new(BigRational::zero(), hi)
        }
    }

    pub fn max(&self, other: &Enclosure) -> Enclosure {
        Enclosure::new(
            std::cmp::max(self.lo.clone(), other.lo.clone()),
            std::cmp::max(self.hi.clone(), other.hi.clone()),
        )
    }

    pub fn max_rat(&self, x: &BigRational) -> Enclosure {
        self.max(&Enclosure::point(x.clone()))
    }

    pub fn scale(&self, c: &BigRational) -> Enclosure {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            Enclosure::new(a, b)
        } else {
            Enclosure::new(b, a)
        }
    }

    /// Reciprocal. Panics if the interval contains zero.
    pub fn recip(&self) -> Enclosure {
        assert!(!self.contains_zero(), "reciprocal of an interval containing zero");
        Enclosure::new(self.hi.recip(), self.lo.recip())
    }

    pub fn div(&self, other: &Enclosure) -> Enclosure {
        self * &other.recip()
    }

    pub fn powi(&self, k: u32) -> Enclosure {
        let mut acc = Enclosure::from_int(1);
        for _ in 0..k {
            acc = &acc * self;
        }
        if k % 2 == 0 && self.contains_zero() {
            acc = Enclosure::new(BigRational::zero(), acc.hi);
        }
        acc
    }

    /// Enclosure of the nonnegative real `k`-th root, each endpoint resolved to
    /// within `eps`. Requires `lo >= 0`.
    pub fn nth_root(&self, k: u32, eps: &BigRational) -> Enclosure {
        assert!(k >= 1);
        assert!(!self.lo.is_negative(), "root of a negative enclosure");
        if k == 1 {
            return self.clone();
        }
        let lo = root_bracket(&self.lo, k, eps).0;
        let hi = root_bracket(&self.hi, k, eps).1;
        Enclosure::new(lo, hi)
    }

    pub fn sqrt(&self, eps: &BigRational) -> Enclosure {
        self.nth_root(2, eps)
    }

    /// Widen the endpoints to multiples of `2^-bits`.
    pub fn round_outward(&self, bits: u32) -> Enclosure {
        let scale = BigInt::one() << bits as usize;
        let den = BigRational::from_integer(scale.clone());
        let lo = (&self.lo * &den).floor() / &den;
        let hi = (&self.hi * &den).ceil() / &den;
        Enclosure { lo, hi }
    }

    pub fn floor_lo(&self) -> BigInt {
        self.lo.floor().to_integer()
    }

    pub fn ceil_hi(&self) -> BigInt {
        self.hi.ceil().to_integer()
    }

    /// Decimal rendering of the midpoint, `digits` places after the point.
    pub fn to_decimal(&self, digits: usize) -> String {
        decimal_string(&self.midpoint(), digits)
    }
}

/// `(lo, hi)` with `lo^k <= q <= hi^k` and `hi - lo <= eps`.
pub fn root_bracket(q: &BigRational, k: u32, eps: &BigRational) -> (BigRational, BigRational) {
    assert!(!q.is_negative());
    if q.is_zero() || q.is_one() {
        return (q.clone(), q.clone());
    }
    let (rn, rd) = (q.numer().nth_root(k), q.denom().nth_root(k));
    if num_traits::pow(rn.clone(), k as usize) == *q.numer() && num_traits::pow(rd.clone(), k as usize) == *q.denom() {
        let r = BigRational::new(rn, rd);
        return (r.clone(), r);
    }
    // Fixed point at 2^-b with 2^-b <= eps: r = floor((q 2^(bk))^(1/k)) is
    // also the integer k-th root of floor(q 2^(bk)).
    let (en, ed) = (eps.numer(), eps.denom());
    let mut bits = ed.bits().saturating_sub(en.bits()) as usize;
    while (en << bits) < *ed {
        bits += 1;
    }
    let scaled = (q * BigRational::from_integer(BigInt::one() << (bits * k as usize))).floor().to_integer();
    let r = scaled.nth_root(k);
    let den = BigRational::from_integer(BigInt::one() << bits);
    (BigRational::from_integer(r.clone()) / &den, BigRational::from_integer(r + 1u32) / den)
}

pub fn decimal_string(x: &BigRational, digits: usize) -> String {
    let neg = x.is_negative();
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (x.abs() * BigRational::from_integer(scale.clone())).round().to_integer();
    let (int_part, frac) = scaled.div_rem(&scale);
    let mut s = String::new();
    if neg && !scaled.is_zero() {
        s.push('-');
    }
    s.push_str(&int_part.to_string());
    if digits > 0 {
        s.push('.');
        s.push_str(&format!("{:0>width$}", frac.to_string(), width = digits));
    }
    s
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl<'a> Add for &'a Enclosure {
    type Output = Enclosure;
    fn add(self, rhs: &'a Enclosure) -> Enclosure {
        Enclosure { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl<'a> Sub for &'a Enclosure {
    type Output = Enclosure;
    fn sub(self, rhs: &'a Enclosure) -> Enclosure {
        Enclosure { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl<'a> Mul for &'a Enclosure {
    type Output = Enclosure;
    fn mul(self, rhs: &'a Enclosure) -> Enclosure {
        let p = [&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi];
        let lo = p.iter().min().unwrap().clone();
        let hi = p.iter().max().unwrap().clone();
        Enclosure { lo, hi }
    }
}

impl Neg for &Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        Enclosure { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }
}

impl Neg for Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two_bracket() {
        let eps = dyadic_eps(40);
        let (lo, hi) = root_bracket(&int_rat(2), 2, &eps);
        assert!(&lo * &lo <= int_rat(2));
        assert!(&hi * &hi >= int_rat(2));
        assert!(&hi - &lo <= eps);
        assert_eq!(decimal_string(&lo, 6), "1.414214");
    }

    #[test]
    fn perfect_roots_are_exact() {
        let e = Enclosure::from_int(27).nth_root(3, &dyadic_eps(10));
        assert!(e.contains(&int_rat(3)));
        let (lo, hi) = root_bracket(&rat(1, 4), 2, &dyadic_eps(20));
        assert_eq!((lo, hi), (rat(1, 2), rat(1, 2)));
    }

    #[test]
    fn mul_and_abs_of_mixed_signs() {
        let a = Enclosure::new(rat(-1, 1), rat(2, 1));
        let b = Enclosure::new(rat(-3, 1), rat(1, 1));
        let p = &a * &b;
        assert_eq!(p, Enclosure::new(rat(-6, 1), rat(3, 1)));
        assert_eq!(a.abs(), Enclosure::new(rat(0, 1), rat(2, 1)));
        assert_eq!(a.sign(), None);
        assert_eq!(a.powi(2), Enclosure::new(rat(0, 1), rat(4, 1)));
    }

    #[test]
    fn outward_rounding_contains_original() {
        let e = Enclosure::new(rat(1, 3), rat(2, 3));
        let r = e.round_outward(8);
        assert!(r.lo() <= e.lo() && r.hi() >= e.hi());
        assert!(r.width() <= e.width() + dyadic_eps(7));
    }
}
