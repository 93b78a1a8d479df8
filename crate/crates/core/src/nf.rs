//! Totally real number fields given by a monic defining polynomial and an
//! integral basis, with exact element arithmetic over the basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::embeddings::RootSystem;
use crate::error::{Error, Result};
use crate::interval::int_rat;
use crate::linalg::{det_int, inverse_rat, mul_rat_vec, IntMatrix, RatMatrix};
use crate::poly::{isolate_real_roots, Poly, SturmSequence};

/// A degree `d` totally real field with a fixed integral basis `ω_1 = 1, ..., ω_d`.
///
/// Cloning is cheap; all clones share the same immutable data.
#[derive(Clone)]
pub struct NumberField {
    inner: Arc<FieldData>,
}

struct FieldData {
    poly_coeffs: Vec<BigInt>,
    poly: Poly,
    degree: usize,
    /// Column `j` holds the power-basis coordinates of `ω_j`.
    basis: RatMatrix,
    basis_inv: RatMatrix,
    basis_polys: Vec<Poly>,
    /// `structure[i][j][k]`: coefficient of `ω_k` in `ω_i ω_j`.
    structure: Vec<Vec<Vec<BigInt>>>,
    basis_traces: Vec<BigInt>,
    discriminant: BigInt,
    roots: RootSystem,
}

impl NumberField {
    /// Build a field from integer polynomial coefficients (constant term first)
    /// and an integral basis, where `basis[j]` lists the power-basis
    /// coordinates of `ω_j`.
    pub fn new(poly_coeffs: Vec<BigInt>, basis: Vec<Vec<BigRational>>) -> Result<Self> {
        let mut poly_coeffs = poly_coeffs;
        while poly_coeffs.len() > 1 && poly_coeffs.last().map_or(false, |c| c.is_zero()) {
            poly_coeffs.pop();
        }
        let poly = Poly::from_ints(&poly_coeffs);
        let degree = match poly.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::InvalidField("defining polynomial must have degree >= 1".into())),
        };
        if !poly.leading().unwrap().is_one() {
            return Err(Error::NotMonic);
        }
        if !poly.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let real_roots = SturmSequence::new(&poly).count_real_roots();
        if real_roots != degree {
            return Err(Error::NotTotallyReal { real_roots, degree });
        }

        if basis.len() != degree {
            return Err(Error::DimensionMismatch { expected: degree, got: basis.len() });
        }
        if let Some(bad) = basis.iter().find(|col| col.len() != degree) {
            return Err(Error::DimensionMismatch { expected: degree, got: bad.len() });
        }
        let first_is_one = basis[0].iter().enumerate().all(|(i, c)| if i == 0 { c.is_one() } else { c.is_zero() });
        if !first_is_one {
            return Err(Error::InvalidField("first basis element must be 1".into()));
        }
        let basis_rows: RatMatrix = crate::linalg::transpose(&basis);
        let basis_inv = inverse_rat(&basis_rows).ok_or(Error::SingularBasis)?;
        let basis_polys: Vec<Poly> = basis.iter().map(|col| Poly::new(col.clone())).collect();

        let mut structure = vec![vec![Vec::new(); degree]; degree];
        for i in 0..degree {
            for j in 0..degree {
                let prod = basis_polys[i].mul(&basis_polys[j]).rem(&poly);
                let power = padded(&prod, degree);
                let coords = mul_rat_vec(&basis_inv, &power);
                if coords.iter().any(|c| !c.is_integer()) {
                    return Err(Error::BasisNotRing { i: i + 1, j: j + 1 });
                }
                structure[i][j] = coords.into_iter().map(|c| c.to_integer()).collect();
            }
        }
        let basis_traces: Vec<BigInt> =
            (0..degree).map(|i| (0..degree).fold(BigInt::zero(), |acc, k| acc + &structure[i][k][k])).collect();
        let gram: IntMatrix = (0..degree)
            .map(|i| {
                (0..degree)
                    .map(|j| structure[i][j].iter().zip(&basis_traces).fold(BigInt::zero(), |acc, (m, t)| acc + m * t))
                    .collect()
            })
            .collect();
        let discriminant = det_int(&gram);
        if discriminant.is_zero() {
            return Err(Error::InvalidField("trace form is degenerate".into()));
        }
        let roots = RootSystem::new(poly.clone(), isolate_real_roots(&poly));

        Ok(NumberField {
            inner: Arc::new(FieldData {
                poly_coeffs,
                poly,
                degree,
                basis,
                basis_inv,
                basis_polys,
                structure,
                basis_traces,
                discriminant,
                roots,
            }),
        })
    }

    /// Convenience constructor for small integer inputs with an integral
    /// basis whose power coordinates are integers.
    pub fn from_spec(poly: &[i64], basis: &[Vec<i64>]) -> Result<Self> {
        NumberField::new(
            poly.iter().map(|&c| BigInt::from(c)).collect(),
            basis.iter().map(|col| col.iter().map(|&c| int_rat(c)).collect()).collect(),
        )
    }

    /// The order `Z[θ]` spanned by the power basis.
    pub fn with_power_basis(poly: &[i64]) -> Result<Self> {
        let d = poly.len().saturating_sub(1).max(1);
        let basis: Vec<Vec<i64>> = (0..d).map(|j| (0..d).map(|i| i64::from(i == j)).collect()).collect();
        NumberField::from_spec(poly, &basis)
    }

    /// `Q` with basis `{1}`, presented by `x - 1`.
    pub fn rationals() -> Self {
        NumberField::from_spec(&[-1, 1], &[vec![1]]).expect("x - 1 defines Q")
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn poly(&self) -> &Poly {
        &self.inner.poly
    }

    pub fn poly_coeffs(&self) -> &[BigInt] {
        &self.inner.poly_coeffs
    }

    /// Column `j` is the power-basis coordinate vector of `ω_j`.
    pub fn basis(&self) -> &[Vec<BigRational>] {
        &self.inner.basis
    }

    pub fn basis_poly(&self, j: usize) -> &Poly {
        &self.inner.basis_polys[j]
    }

    /// `Δ_K = det(Tr(ω_i ω_j))` of the supplied order.
    pub fn discriminant(&self) -> &BigInt {
        &self.inner.discriminant
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &BigInt {
        &self.inner.structure[i][j][k]
    }

    pub fn roots(&self) -> &RootSystem {
        &self.inner.roots
    }

    pub fn same_field(&self, other: &NumberField) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.poly_coeffs == other.inner.poly_coeffs && self.inner.basis == other.inner.basis)
    }

    pub fn element(&self, coords: Vec<BigInt>) -> Result<FieldElement> {
        if coords.len() != self.degree() {
            return Err(Error::DimensionMismatch { expected: self.degree(), got: coords.len() });
        }
        Ok(FieldElement { field: self.clone(), coords })
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<FieldElement> {
        self.element(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn elements(&self, coords: &[&[i64]]) -> Result<Vec<FieldElement>> {
        coords.iter().map(|c| self.element_i64(c)).collect()
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), coords: vec![BigInt::zero(); self.degree()] }
    }

    pub fn one(&self) -> FieldElement {
        self.basis_element(0)
    }

    pub fn from_int(&self, n: impl Into<BigInt>) -> FieldElement {
        let mut e = self.zero();
        e.coords[0] = n.into();
        e
    }

    pub fn basis_element(&self, j: usize) -> FieldElement {
        let mut e = self.zero();
        e.coords[j] = BigInt::one();
        e
    }

    /// Convert power-basis coordinates into integral-basis coordinates.
    pub fn to_integral_coords(&self, power_coords: &[BigRational]) -> Result<FieldElement> {
        if power_coords.len() != self.degree() {
            return Err(Error::DimensionMismatch { expected: self.degree(), got: power_coords.len() });
        }
        let coords = mul_rat_vec(&self.inner.basis_inv, power_coords);
        if coords.iter().any(|c| !c.is_integer()) {
            return Err(Error::NotAnAlgebraicInteger);
        }
        self.element(coords.into_iter().map(|c| c.to_integer()).collect())
    }

    /// Integer trace-form Gram matrix `(Tr(a_i a_j))`.
    pub fn trace_gram(&self, elems: &[FieldElement]) -> Result<IntMatrix> {
        for e in elems {
            self.check(e)?;
        }
        Ok(elems.iter().map(|a| elems.iter().map(|b| (a * b).trace()).collect()).collect())
    }

    fn check(&self, e: &FieldElement) -> Result<()> {
        if self.same_field(&e.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumberField")
            .field("poly", &self.inner.poly_coeffs)
            .field("degree", &self.inner.degree)
            .field("discriminant", &self.inner.discriminant)
            .finish()
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other)
    }
}

fn padded(p: &Poly, d: usize) -> Vec<BigRational> {
    let mut v = p.coeffs().to_vec();
    v.resize(d, BigRational::zero());
    v
}

/// An algebraic integer as a coordinate vector over the integral basis.
#[derive(Clone, PartialEq)]
pub struct FieldElement {
    field: NumberField,
    coords: Vec<BigInt>,
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords.iter().enumerate().all(|(i, c)| if i == 0 { c.is_one() } else { c.is_zero() })
    }

    /// `a + b`, or `FieldMismatch`.
    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.field.check(other)?;
        Ok(self.zip_with(other, |x, y| x + y))
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.field.check(other)?;
        Ok(self.zip_with(other, |x, y| x - y))
    }

    /// `a · b` through the structure constants, or `FieldMismatch`.
    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.field.check(other)?;
        let d = self.field.degree();
        let s = &self.field.inner.structure;
        let mut out = vec![BigInt::zero(); d];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, m) in s[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] += &ab * m;
                    }
                }
            }
        }
        Ok(FieldElement { field: self.field.clone(), coords: out })
    }

    pub fn scale(&self, k: &BigInt) -> FieldElement {
        FieldElement { field: self.field.clone(), coords: self.coords.iter().map(|c| c * k).collect() }
    }

    fn zip_with(&self, other: &FieldElement, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(x, y)| f(x, y)).collect(),
        }
    }

    /// Matrix of multiplication by `self`; column `k` holds the coordinates
    /// of `self · ω_k`.
    pub fn multiplication_matrix(&self) -> IntMatrix {
        let d = self.field.degree();
        let s = &self.field.inner.structure;
        (0..d)
            .map(|l| {
                (0..d)
                    .map(|k| self.coords.iter().enumerate().fold(BigInt::zero(), |acc, (i, c)| acc + c * &s[i][k][l]))
                    .collect()
            })
            .collect()
    }

    /// `Tr_{K/Q}`, the trace of the multiplication matrix.
    pub fn trace(&self) -> BigInt {
        self.coords.iter().zip(&self.field.inner.basis_traces).fold(BigInt::zero(), |acc, (c, t)| acc + c * t)
    }

    /// `N_{K/Q}`, the determinant of the multiplication matrix.
    pub fn norm(&self) -> BigInt {
        det_int(&self.multiplication_matrix())
    }

    /// Coordinates over the power basis `1, θ, ..., θ^{d-1}`.
    pub fn power_coords(&self) -> Vec<BigRational> {
        let coords: Vec<BigRational> = self.coords.iter().map(|c| int_rat(c.clone())).collect();
        let rows = crate::linalg::transpose(&self.field.inner.basis);
        mul_rat_vec(&rows, &coords)
    }

    /// `self` as a polynomial in `θ`.
    pub fn power_poly(&self) -> Poly {
        Poly::new(self.power_coords())
    }

    pub fn abs_norm(&self) -> BigInt {
        self.norm().abs()
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement{:?}", self.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

// Operator forms panic on mismatched fields; use the `checked_*` methods when
// the operands may come from different fields.
impl<'a> Add for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &'a FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("field mismatch")
    }
}

impl<'a> Sub for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &'a FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("field mismatch")
    }
}

impl<'a> Mul for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &'a FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }
}

/// Build a field, mirroring the `field_from_spec` contract.
pub fn field_from_spec(poly_coeffs: &[BigInt], basis: &[Vec<BigRational>]) -> Result<NumberField> {
    NumberField::new(poly_coeffs.to_vec(), basis.to_vec())
}
