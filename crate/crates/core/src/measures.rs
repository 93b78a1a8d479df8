//! The minor measures `D(α)` and `M(α, β)`.
//!
//! With `A` the `d x n` coordinate matrix of `α` over the integral basis,
//! `disc(α_I) = Δ_K det(A_I)^2`, so
//!
//! * `D(α) = Σ_I det(A_I)^2 = det(A A^T)` (Cauchy-Binet), and
//! * `M(α, β) = max_I |det((A b)_I)|`,
//!
//! both nonnegative integers. Each value is computed along two independent
//! exact routes and the routes must agree.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::heights::height_vector;
use crate::interval::{int_rat, Enclosure};
use crate::linalg::{det_int, mul_int, rank_int, select_columns, transpose, IntMatrix};
use crate::nf::{FieldElement, NumberField};
use num_rational::BigRational;

/// Above this many `d`-subsets the subset-sum check of `D(α)` is skipped and
/// `det(A A^T)` stands alone.
pub const SUBSET_CHECK_LIMIT: usize = 200_000;

/// `d x n` integer matrix whose column `i` holds the coordinates of `α_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordMatrix {
    rows: IntMatrix,
}

impl CoordMatrix {
    pub fn from_rows(rows: IntMatrix) -> Self {
        CoordMatrix { rows }
    }

    pub fn rows(&self) -> &IntMatrix {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn column(&self, i: usize) -> Vec<BigInt> {
        self.rows.iter().map(|r| r[i].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        rank_int(&self.rows)
    }

    /// The matrix with `b` appended as a last column.
    pub fn augmented(&self, b: &[BigInt]) -> CoordMatrix {
        CoordMatrix {
            rows: self
                .rows
                .iter()
                .zip(b)
                .map(|(r, x)| {
                    let mut r = r.clone();
                    r.push(x.clone());
                    r
                })
                .collect(),
        }
    }

    /// `(I, det(A_I))` over all `d`-subsets `I` in lexicographic order.
    pub fn maximal_minors(&self) -> Vec<(Vec<usize>, BigInt)> {
        let d = self.nrows();
        (0..self.ncols())
            .combinations(d)
            .map(|cols| {
                let m = det_int(&select_columns(&self.rows, &cols));
                (cols, m)
            })
            .collect()
    }

    /// `det(A A^T)`.
    pub fn gram_determinant(&self) -> BigInt {
        det_int(&mul_int(&self.rows, &transpose(&self.rows)))
    }

    /// Reinterpret the columns as field elements.
    pub fn elements(&self, field: &NumberField) -> Result<Vec<FieldElement>> {
        (0..self.ncols()).map(|i| field.element(self.column(i))).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureReport {
    pub d_value: BigInt,
    /// `det(A_I)` for every `I ∈ J(n, d)`, lexicographic; empty when the
    /// subset enumeration was skipped.
    pub minors: Vec<(Vec<usize>, BigInt)>,
    pub m_value: Option<BigInt>,
}

fn common_field(alpha: &[FieldElement]) -> Result<&NumberField> {
    let f = alpha.first().ok_or_else(|| Error::PreconditionViolated("empty generator list".into()))?.field();
    if alpha.iter().any(|a| !a.field().same_field(f)) {
        return Err(Error::FieldMismatch);
    }
    Ok(f)
}

pub fn coord_matrix(alpha: &[FieldElement]) -> Result<CoordMatrix> {
    let field = common_field(alpha)?;
    let d = field.degree();
    let rows = (0..d).map(|j| alpha.iter().map(|a| a.coords()[j].clone()).collect()).collect();
    Ok(CoordMatrix { rows })
}

/// `disc(α_I)` for a `d`-tuple, as `Δ_K det(A_I)^2` checked against
/// `det(Tr(α_i α_j))`.
pub fn disc_subtuple(alpha_i: &[FieldElement]) -> Result<BigInt> {
    let field = common_field(alpha_i)?;
    let d = field.degree();
    if alpha_i.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: alpha_i.len() });
    }
    let minor = det_int(coord_matrix(alpha_i)?.rows());
    let via_minor = field.discriminant() * &minor * &minor;
    let via_trace = det_int(&field.trace_gram(alpha_i)?);
    if via_minor != via_trace {
        return Err(Error::InternalCrossCheckFailure(format!(
            "disc via minors {via_minor} != disc via trace form {via_trace}"
        )));
    }
    Ok(via_minor)
}

pub fn d_measure(alpha: &[FieldElement]) -> Result<BigInt> {
    Ok(measure_report(alpha, None)?.d_value)
}

/// `D(α)` and, when `beta` is given, `M(α, β)`.
pub fn measure_report(alpha: &[FieldElement], beta: Option<&FieldElement>) -> Result<MeasureReport> {
    let field = common_field(alpha)?;
    let d = field.degree();
    let n = alpha.len();
    if n < d {
        return Err(Error::PreconditionViolated(format!("need n >= d, got n = {n}, d = {d}")));
    }
    let a = coord_matrix(alpha)?;
    let d_value = a.gram_determinant();
    let minors = if binomial(n, d) <= SUBSET_CHECK_LIMIT as u128 {
        let minors = a.maximal_minors();
        let sum = minors.iter().fold(BigInt::zero(), |acc, (_, m)| acc + m * m);
        if sum != d_value {
            return Err(Error::InternalCrossCheckFailure(format!(
                "sum of squared minors {sum} != det(A A^T) {d_value}"
            )));
        }
        minors
    } else {
        Vec::new()
    };
    let m_value = beta.map(|b| m_measure(alpha, b)).transpose()?;
    Ok(MeasureReport { d_value, minors, m_value })
}

/// `max_I |det((A b)_I)|` over `I ∈ J(n + 1, d)`.
pub fn m_measure(alpha: &[FieldElement], beta: &FieldElement) -> Result<BigInt> {
    let field = common_field(alpha)?;
    if !beta.field().same_field(field) {
        return Err(Error::FieldMismatch);
    }
    let d = field.degree();
    if alpha.len() < d {
        return Err(Error::PreconditionViolated(format!("need n >= d, got n = {}, d = {d}", alpha.len())));
    }
    let aug = coord_matrix(alpha)?.augmented(beta.coords());
    Ok(max_abs_minor(&aug))
}

pub fn max_abs_minor(a: &CoordMatrix) -> BigInt {
    let d = a.nrows();
    (0..a.ncols())
        .combinations(d)
        .map(|cols| det_int(&select_columns(a.rows(), &cols)).abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}

/// `Σ_I |disc(α_I)| / |Δ_K|` computed from trace-form Gram determinants only.
pub fn d_measure_via_traces(alpha: &[FieldElement]) -> Result<BigRational> {
    let field = common_field(alpha)?;
    let d = field.degree();
    let mut total = BigInt::zero();
    for cols in (0..alpha.len()).combinations(d) {
        let sub: Vec<FieldElement> = cols.iter().map(|&i| alpha[i].clone()).collect();
        total += det_int(&field.trace_gram(&sub)?).abs();
    }
    Ok(BigRational::new(total, field.discriminant().abs()))
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

/// Upper enclosure of `(d!)^2 / |Δ_K| · C(n, d) · H_K(α)^2`.
pub fn d_measure_height_bound(alpha: &[FieldElement], eps: &BigRational) -> Result<Enclosure> {
    let field = common_field(alpha)?;
    let d = field.degree();
    let h = height_vector(alpha, eps)?.enclosure;
    let coeff =
        BigRational::new(factorial(d).pow(2u32) * BigInt::from(binomial(alpha.len(), d)), field.discriminant().abs());
    Ok(h.powi(2).scale(&coeff))
}

/// Enclosure of `d! / |Δ_K|^{1/2} · H_K(α) · H_K(β)`.
pub fn m_measure_height_bound(alpha: &[FieldElement], beta: &FieldElement, eps: &BigRational) -> Result<Enclosure> {
    let field = common_field(alpha)?;
    let d = field.degree();
    let ha = height_vector(alpha, eps)?.enclosure;
    let hb = height_vector(std::slice::from_ref(beta), eps)?.enclosure;
    let root_disc = Enclosure::point(int_rat(field.discriminant().abs())).sqrt(eps);
    Ok((&ha * &hb).scale(&int_rat(factorial(d))).div(&root_disc))
}
