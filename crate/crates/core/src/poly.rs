//! Dense univariate polynomials over the rationals, Sturm sequences and real
//! root isolation.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::interval::{int_rat, Enclosure};

/// Coefficients are stored constant term first with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints<T: Clone + Into<BigInt>>(coeffs: &[T]) -> Self {
        Poly::new(coeffs.iter().cloned().map(|c| int_rat(c.into())).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation over an interval.
    pub fn eval_enclosure(&self, x: &Enclosure) -> Enclosure {
        if x.is_point() {
            return Enclosure::point(self.eval(x.lo()));
        }
        let mut acc = Enclosure::from_int(0);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &Enclosure::point(c.clone());
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        self.eval(x).cmp(&BigRational::zero())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * int_rat(i as i64)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        Poly::new((0..n).map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Poly::zero(),
        }
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree().map_or(true, |d| d == 0)
    }

    /// Bound `B` with every real root strictly inside `(-B, B)`.
    pub fn cauchy_bound(&self) -> BigRational {
        let lead = self.leading().expect("bound of zero polynomial").abs();
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(BigRational::zero);
        m + BigRational::one()
    }
}

/// Sturm chain `f, f', -rem(f, f'), ...` of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Poly>,
}

impl SturmSequence {
    pub fn new(f: &Poly) -> Self {
        let mut chain = vec![f.clone()];
        let mut next = f.derivative();
        while !next.is_zero() {
            let r = chain.last().unwrap().rem(&next).neg();
            chain.push(next);
            next = r;
        }
        SturmSequence { chain }
    }

    fn variations<I: Iterator<Item = Ordering>>(signs: I) -> usize {
        let mut count = 0;
        let mut prev = Ordering::Equal;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if prev != Ordering::Equal && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let s = p.leading().unwrap().cmp(&BigRational::zero());
            if positive || p.degree().unwrap() % 2 == 0 {
                s
            } else {
                s.reverse()
            }
        }))
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    pub fn count_real_roots(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

/// A real root of `f`, either an exact rational (`lo == hi`) or the unique root
/// in `(lo, hi)` with `f(lo)` and `f(hi)` nonzero and of opposite signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    lo: BigRational,
    hi: BigRational,
}

impl IsolatedRoot {
    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn enclosure(&self) -> Enclosure {
        Enclosure::new(self.lo.clone(), self.hi.clone())
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// One sign bisection step.
    pub fn bisect(&mut self, f: &Poly) {
        if self.is_exact() {
            return;
        }
        let mid = (&self.lo + &self.hi) / int_rat(2);
        let sm = f.sign_at(&mid);
        if sm == Ordering::Equal {
            self.lo = mid.clone();
            self.hi = mid;
        } else if sm == f.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Bisect until the width is at most `width`.
    pub fn refine_to(&mut self, f: &Poly, width: &BigRational) {
        while &self.width() > width {
            self.bisect(f);
        }
    }
}

/// Isolate every real root of a squarefree polynomial, sorted increasingly.
pub fn isolate_real_roots(f: &Poly) -> Vec<IsolatedRoot> {
    let sturm = SturmSequence::new(f);
    let b = f.cauchy_bound();
    let two = int_rat(2);
    let mut stack = vec![(-b.clone(), b)];
    let mut found = Vec::new();
    while let Some((a, b)) = stack.pop() {
        match sturm.count_in(&a, &b) {
            0 => {}
            1 => found.push(tighten(f, &sturm, a, b)),
            _ => {
                let m = (&a + &b) / &two;
                stack.push((a, m.clone()));
                stack.push((m, b));
            }
        }
    }
    found.sort_by(|x, y| x.lo.cmp(&y.lo));
    found
}

/// Turn a half-open `(a, b]` containing exactly one root into an
/// [`IsolatedRoot`] whose endpoints are not roots.
fn tighten(f: &Poly, sturm: &SturmSequence, mut a: BigRational, mut b: BigRational) -> IsolatedRoot {
    let two = int_rat(2);
    loop {
        if f.eval(&b).is_zero() {
            return IsolatedRoot { lo: b.clone(), hi: b };
        }
        if !f.eval(&a).is_zero() {
            return IsolatedRoot { lo: a, hi: b };
        }
        let m = (&a + &b) / &two;
        if sturm.count_in(&a, &m) == 1 {
            b = m;
        } else {
            a = m;
        }
    }
}
