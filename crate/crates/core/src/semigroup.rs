//! Generator systems `α ∈ (O_K^+)^n`, the rational cone they span, and exact
//! enumeration of representations `Σ α_i x_i = β` with `x ∈ Z^n_{≥0}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::embeddings::certify_total_nonneg_with_cap;
use crate::error::{Error, Result};
use crate::heights::{compare_height, height_vector, HeightOrdering};
use crate::interval::{int_rat, Enclosure};
use crate::linalg::{lattice_index, to_rat_matrix};
use crate::lp::{maximize, LpOutcome};
use crate::measures::{coord_matrix, factorial, m_measure, CoordMatrix};
use crate::nf::{FieldElement, NumberField};
use crate::DEFAULT_PRECISION_CAP;

/// Default node budget for representation searches.
pub const DEFAULT_WORK_LIMIT: u64 = 100_000_000;

/// A generator tuple with its coordinate matrix and validity certificates.
#[derive(Clone, Debug)]
pub struct GeneratorSystem {
    field: NumberField,
    alpha: Vec<FieldElement>,
    matrix: CoordMatrix,
    traces: Vec<BigInt>,
    lattice_index: Option<BigInt>,
    /// `A Z^n = Z^d`, i.e. the generators span `O_K` over `Z`.
    pub spanning: bool,
    /// Every generator is a nonzero element of `O_K^+`.
    pub totally_positive: bool,
    /// `{x >= 0 : A x = 0} = {0}`.
    pub pointed: bool,
}

impl GeneratorSystem {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn generators(&self) -> &[FieldElement] {
        &self.alpha
    }

    pub fn matrix(&self) -> &CoordMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn d(&self) -> usize {
        self.field.degree()
    }

    /// `[Z^d : A Z^n]`, `None` when the generators do not span `K`.
    pub fn lattice_index(&self) -> Option<&BigInt> {
        self.lattice_index.as_ref()
    }

    pub fn is_valid(&self) -> bool {
        self.spanning && self.totally_positive && self.pointed
    }

    pub fn require_valid(&self) -> Result<()> {
        let mut missing = Vec::new();
        if !self.spanning {
            missing.push("spanning");
        }
        if !self.totally_positive {
            missing.push("totally_positive");
        }
        if !self.pointed {
            missing.push("pointed");
        }
        if missing.is_empty() {
            Ok(())
        } else {
            Err(Error::PreconditionViolated(format!("generator certificates false: {}", missing.join(", "))))
        }
    }

    fn require(&self, spanning: bool, positive: bool, pointed: bool) -> Result<()> {
        let bad = (spanning && !self.spanning) || (positive && !self.totally_positive) || (pointed && !self.pointed);
        if bad {
            self.require_valid()
        } else {
            Ok(())
        }
    }

    fn check_target(&self, beta: &FieldElement) -> Result<()> {
        if beta.field().same_field(&self.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// `Σ α_i x_i`.
    pub fn combine(&self, x: &[u64]) -> FieldElement {
        let d = self.d();
        let mut coords = vec![BigInt::zero(); d];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let xi = BigInt::from(xi);
            for (j, c) in coords.iter_mut().enumerate() {
                *c += &self.matrix.rows()[j][i] * &xi;
            }
        }
        self.field.element(coords).expect("dimension matches")
    }
}

pub fn check_generators(alpha: &[FieldElement]) -> Result<GeneratorSystem> {
    check_generators_with_cap(alpha, DEFAULT_PRECISION_CAP)
}

pub fn check_generators_with_cap(alpha: &[FieldElement], cap: u32) -> Result<GeneratorSystem> {
    let matrix = coord_matrix(alpha)?;
    let field = alpha[0].field().clone();
    let lattice_index = lattice_index(matrix.rows());
    let spanning = lattice_index.as_ref().map_or(false, |i| i.is_one());
    let mut totally_positive = true;
    for a in alpha {
        if a.is_zero() || !certify_total_nonneg_with_cap(a, cap)? {
            totally_positive = false;
            break;
        }
    }
    let pointed = is_pointed(&matrix);
    Ok(GeneratorSystem {
        traces: alpha.iter().map(|a| a.trace()).collect(),
        field,
        alpha: alpha.to_vec(),
        matrix,
        lattice_index,
        spanning,
        totally_positive,
        pointed,
    })
}

/// Exact test of `{x >= 0 : A x = 0} = {0}`: maximize `Σ x` over
/// `A x = 0, Σ x + s = 1`.
fn is_pointed(matrix: &CoordMatrix) -> bool {
    let n = matrix.ncols();
    let mut rows = to_rat_matrix(matrix.rows());
    for r in rows.iter_mut() {
        r.push(BigRational::zero());
    }
    let mut sum_row = vec![BigRational::one(); n];
    sum_row.push(BigRational::one());
    rows.push(sum_row);
    let mut b = vec![BigRational::zero(); matrix.nrows()];
    b.push(BigRational::one());
    let mut c = vec![BigRational::one(); n];
    c.push(BigRational::zero());
    match maximize(&rows, &b, &c) {
        LpOutcome::Optimal { value, .. } => value.is_zero(),
        _ => false,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConeMembership {
    NotInCone,
    InCone,
    InInterior,
}

impl ConeMembership {
    pub fn in_cone(self) -> bool {
        self != ConeMembership::NotInCone
    }

    pub fn name(self) -> &'static str {
        match self {
            ConeMembership::NotInCone => "NotInCone",
            ConeMembership::InCone => "InCone",
            ConeMembership::InInterior => "InInterior",
        }
    }
}

/// Decide membership of `β` in `C_Q(α)` and in its interior.
///
/// Solves `max ε` over `A x = b`, `x_i - ε - s_i = 0`, `ε + t = 1` with all
/// variables nonnegative: infeasible means outside the cone, a positive
/// optimum means `b ∈ A(Q^n_{>0}) = int C`.
pub fn cone_membership(sys: &GeneratorSystem, beta: &FieldElement) -> Result<ConeMembership> {
    sys.require(true, false, true)?;
    sys.check_target(beta)?;
    Ok(cone_membership_coords(sys.matrix(), beta.coords()))
}

pub fn cone_membership_coords(matrix: &CoordMatrix, b: &[BigInt]) -> ConeMembership {
    let d = matrix.nrows();
    let n = matrix.ncols();
    // columns: x (n), ε, s (n), t
    let cols = 2 * n + 2;
    let zero = BigRational::zero;
    let one = BigRational::one;
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(d + n + 1);
    let mut rhs = Vec::with_capacity(d + n + 1);
    for j in 0..d {
        let mut r = vec![zero(); cols];
        for i in 0..n {
            r[i] = int_rat(matrix.rows()[j][i].clone());
        }
        rows.push(r);
        rhs.push(int_rat(b[j].clone()));
    }
    for i in 0..n {
        let mut r = vec![zero(); cols];
        r[i] = one();
        r[n] = -one();
        r[n + 1 + i] = -one();
        rows.push(r);
        rhs.push(zero());
    }
    let mut r = vec![zero(); cols];
    r[n] = one();
    r[cols - 1] = one();
    rows.push(r);
    rhs.push(one());
    let mut c = vec![zero(); cols];
    c[n] = one();
    match maximize(&rows, &rhs, &c) {
        LpOutcome::Infeasible => ConeMembership::NotInCone,
        LpOutcome::Optimal { value, .. } if value.is_positive() => ConeMembership::InInterior,
        LpOutcome::Optimal { .. } => ConeMembership::InCone,
        LpOutcome::Unbounded => unreachable!("ε is bounded by 1"),
    }
}

/// Backtracking search for `x >= 0` with `A x = b`.
///
/// Variables are fixed from the last one down; each node solves the LP
/// relaxation of the remaining system for an upper bound on the current
/// variable, which also prunes infeasible branches.
struct Enumerator<'a> {
    cols: Vec<Vec<BigInt>>,
    rat_cols: Vec<Vec<BigRational>>,
    /// Positive linear functional (trace) values of the columns, when all
    /// generators are totally positive.
    traces: Option<&'a [BigInt]>,
    basis_traces: Vec<BigInt>,
    nodes: u64,
    limit: u64,
    stop_after: Option<usize>,
    found: Vec<Vec<u64>>,
}

impl<'a> Enumerator<'a> {
    fn new(sys: &'a GeneratorSystem, limit: u64) -> Self {
        let n = sys.n();
        let cols: Vec<Vec<BigInt>> = (0..n).map(|i| sys.matrix().column(i)).collect();
        let rat_cols = cols.iter().map(|c| c.iter().map(|x| int_rat(x.clone())).collect()).collect();
        let d = sys.d();
        let basis_traces = (0..d).map(|j| sys.field().basis_element(j).trace()).collect();
        Enumerator {
            cols,
            rat_cols,
            traces: sys.totally_positive.then_some(&sys.traces[..]),
            basis_traces,
            nodes: 0,
            limit,
            stop_after: None,
            found: Vec::new(),
        }
    }

    fn trace_of(&self, b: &[BigInt]) -> BigInt {
        b.iter().zip(&self.basis_traces).fold(BigInt::zero(), |acc, (x, t)| acc + x * t)
    }

    fn done(&self) -> bool {
        self.stop_after.map_or(false, |s| self.found.len() >= s)
    }

    fn run(&mut self, b: &[BigInt]) -> Result<()> {
        let n = self.cols.len();
        let mut x = vec![0u64; n];
        self.search(n, b.to_vec(), &mut x)
    }

    fn search(&mut self, k: usize, b: Vec<BigInt>, x: &mut Vec<u64>) -> Result<()> {
        if self.done() {
            return Ok(());
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::WorkLimitExceeded { limit: self.limit });
        }
        if k == 0 {
            if b.iter().all(|v| v.is_zero()) {
                self.found.push(x.clone());
            }
            return Ok(());
        }
        let mut trace_bound = None;
        if let Some(tr) = self.traces {
            let tb = self.trace_of(&b);
            if tb.is_negative() {
                return Ok(());
            }
            trace_bound = Some(&tb / &tr[k - 1]);
        }
        let col = k - 1;
        if k == 1 {
            // a single column: b must be a nonnegative integer multiple
            let c = &self.cols[0];
            let mut mult: Option<BigInt> = None;
            for (ci, bi) in c.iter().zip(&b) {
                if ci.is_zero() {
                    if !bi.is_zero() {
                        return Ok(());
                    }
                    continue;
                }
                if !(bi % ci).is_zero() {
                    return Ok(());
                }
                let q = bi / ci;
                if mult.as_ref().map_or(false, |m| m != &q) {
                    return Ok(());
                }
                mult = Some(q);
            }
            let m = mult.unwrap_or_else(BigInt::zero);
            if m.is_negative() {
                return Ok(());
            }
            if !m.is_zero() && c.iter().all(|v| v.is_zero()) {
                return Ok(());
            }
            x[0] = m.to_u64().ok_or(Error::WorkLimitExceeded { limit: self.limit })?;
            self.found.push(x.clone());
            x[0] = 0;
            return Ok(());
        }
        let d = b.len();
        let rows: Vec<Vec<BigRational>> =
            (0..d).map(|j| (0..k).map(|i| self.rat_cols[i][j].clone()).collect()).collect();
        let rhs: Vec<BigRational> = b.iter().map(|v| int_rat(v.clone())).collect();
        let mut obj = vec![BigRational::zero(); k];
        obj[col] = BigRational::one();
        let mut upper = match maximize(&rows, &rhs, &obj) {
            LpOutcome::Infeasible => return Ok(()),
            LpOutcome::Optimal { value, .. } => value.floor().to_integer(),
            LpOutcome::Unbounded => {
                return Err(Error::PreconditionViolated("representation polytope is unbounded".into()))
            }
        };
        if let Some(tb) = trace_bound {
            upper = upper.min(tb);
        }
        let upper = upper.to_u64().ok_or(Error::WorkLimitExceeded { limit: self.limit })?;
        for v in (0..=upper).rev() {
            let vb = BigInt::from(v);
            let next: Vec<BigInt> = b.iter().zip(&self.cols[col]).map(|(bi, ci)| bi - ci * &vb).collect();
            x[col] = v;
            self.search(k - 1, next, x)?;
            if self.done() {
                break;
            }
        }
        x[col] = 0;
        Ok(())
    }
}

/// All representations of a target, with the Borosh-Treybig radius
/// `M(α, β)` that bounds every one of them.
#[derive(Clone, Debug)]
pub struct RepresentationSet {
    pub target: FieldElement,
    pub box_radius: BigInt,
    /// Sorted lexicographically.
    pub reps: Vec<Vec<u64>>,
    pub complete: bool,
}

impl RepresentationSet {
    /// `r(β)`, the number of representations.
    pub fn r(&self) -> usize {
        self.reps.len()
    }
}

pub fn enumerate_representations(sys: &GeneratorSystem, beta: &FieldElement) -> Result<RepresentationSet> {
    enumerate_representations_limited(sys, beta, DEFAULT_WORK_LIMIT)
}

pub fn enumerate_representations_limited(
    sys: &GeneratorSystem,
    beta: &FieldElement,
    work_limit: u64,
) -> Result<RepresentationSet> {
    sys.require(true, true, false)?;
    sys.check_target(beta)?;
    let mut e = Enumerator::new(sys, work_limit);
    e.run(beta.coords())?;
    let mut reps = e.found;
    reps.sort();
    Ok(RepresentationSet { target: beta.clone(), box_radius: m_measure(sys.generators(), beta)?, reps, complete: true })
}

/// `min(r(β), limit)` without listing every representation.
pub fn count_representations_upto(
    sys: &GeneratorSystem,
    beta: &FieldElement,
    limit: usize,
    work_limit: u64,
) -> Result<usize> {
    sys.require(true, true, false)?;
    sys.check_target(beta)?;
    let mut e = Enumerator::new(sys, work_limit);
    e.stop_after = Some(limit);
    e.run(beta.coords())?;
    Ok(e.found.len())
}

pub fn sup_norm(x: &[u64]) -> u64 {
    x.iter().copied().max().unwrap_or(0)
}

/// Enclosure of `(1/n) (H_K(β) / H_K(α))^{1/d}`.
pub fn sandwich_lower_bound(sys: &GeneratorSystem, beta: &FieldElement, eps: &BigRational) -> Result<Enclosure> {
    let ha = height_vector(sys.generators(), eps)?.enclosure;
    let hb = height_vector(std::slice::from_ref(beta), eps)?.enclosure;
    let ratio = hb.div(&ha);
    let root = ratio.nth_root(sys.d() as u32, eps);
    Ok(root.scale(&BigRational::new(BigInt::one(), BigInt::from(sys.n()))))
}

/// Record of the two-sided size bound for every representation of `β`.
#[derive(Clone, Debug)]
pub struct SandwichCertificate {
    /// `None` for `β = 0`, where only the upper bound applies.
    pub lower_bound: Option<Enclosure>,
    pub upper_bound: BigInt,
    pub checked: usize,
    /// Representations whose sup-norm is certainly below the lower bound or
    /// above `M(α, β)`.
    pub violations: Vec<Vec<u64>>,
}

impl SandwichCertificate {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn sandwich_certificate(
    sys: &GeneratorSystem,
    set: &RepresentationSet,
    eps: &BigRational,
) -> Result<SandwichCertificate> {
    let lower_bound = if set.target.is_zero() { None } else { Some(sandwich_lower_bound(sys, &set.target, eps)?) };
    let violations = set
        .reps
        .iter()
        .filter(|x| {
            let norm = BigInt::from(sup_norm(x));
            let low_bad = lower_bound.as_ref().map_or(false, |lb| lb.lo() > &int_rat(norm.clone()));
            low_bad || norm > set.box_radius
        })
        .cloned()
        .collect();
    Ok(SandwichCertificate { lower_bound, upper_bound: set.box_radius.clone(), checked: set.reps.len(), violations })
}

#[derive(Clone, Debug)]
pub struct MinRepresentation {
    pub x: Vec<u64>,
    pub norm: u64,
    pub certificate: SandwichCertificate,
}

/// A representation of minimal sup-norm, lexicographically smallest among
/// ties, with the size certificate over all representations.
pub fn min_representation(sys: &GeneratorSystem, beta: &FieldElement, eps: &BigRational) -> Result<MinRepresentation> {
    let set = enumerate_representations(sys, beta)?;
    let x = set
        .reps
        .iter()
        .min_by(|a, b| sup_norm(a).cmp(&sup_norm(b)).then_with(|| a.cmp(b)))
        .cloned()
        .ok_or(Error::NotRepresentable)?;
    let certificate = sandwich_certificate(sys, &set, eps)?;
    Ok(MinRepresentation { norm: sup_norm(&x), x, certificate })
}

/// Integer points of `[-r, r]^d` with sup-norm exactly `r`, lexicographic.
pub fn shell(d: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![-r; d];
    loop {
        if cur.iter().map(|v| v.abs()).max().unwrap_or(0) == r {
            out.push(cur.clone());
        }
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < r {
                cur[i] += 1;
                for v in cur[i + 1..].iter_mut() {
                    *v = -r;
                }
                break;
            }
        }
    }
}

/// First lattice point of the cone that is not in the semigroup, scanning
/// coordinate vectors shell by shell up to `coord_box`.
pub fn witness_search(sys: &GeneratorSystem, coord_box: u64) -> Result<Option<FieldElement>> {
    sys.require_valid()?;
    let d = sys.d();
    for r in 0..=coord_box as i64 {
        for b in shell(d, r) {
            let beta = sys.field().element_i64(&b)?;
            if !cone_membership(sys, &beta)?.in_cone() {
                continue;
            }
            if count_representations_upto(sys, &beta, 1, DEFAULT_WORK_LIMIT)? == 0 {
                return Ok(Some(beta));
            }
        }
    }
    Ok(None)
}

/// Outcome of checking one inequality against exact counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    /// The count sits inside the bound's enclosure or straddles an
    /// ambiguous boundary.
    Undecided,
    NotApplicable,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Undecided => "undecided",
            Verdict::NotApplicable => "not_applicable",
        }
    }

    fn at_most(lo_count: u64, hi_count: u64, bound: &Enclosure) -> Verdict {
        if int_rat(hi_count) <= *bound.lo() {
            Verdict::Holds
        } else if int_rat(lo_count) > *bound.hi() {
            Verdict::Violated
        } else {
            Verdict::Undecided
        }
    }

    fn at_least(lo_count: u64, hi_count: u64, bound: &Enclosure) -> Verdict {
        if int_rat(lo_count) >= *bound.hi() {
            Verdict::Holds
        } else if int_rat(hi_count) < *bound.lo() {
            Verdict::Violated
        } else {
            Verdict::Undecided
        }
    }
}

#[derive(Clone, Debug)]
pub struct CountParams {
    pub s: u64,
    pub t1: BigRational,
    pub t2: BigRational,
    pub eps: BigRational,
    pub work_limit: u64,
    pub precision_cap: u32,
}

impl CountParams {
    pub fn new(s: u64, t1: BigRational, t2: BigRational) -> Self {
        CountParams {
            s,
            t1,
            t2,
            eps: BigRational::new(BigInt::one(), BigInt::from(10).pow(30u32)),
            work_limit: DEFAULT_WORK_LIMIT,
            precision_cap: DEFAULT_PRECISION_CAP,
        }
    }
}

/// Pair of counts: ambiguous boundary cases excluded, then included.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct CountPair {
    pub exclusive: u64,
    pub inclusive: u64,
}

impl CountPair {
    fn add(&mut self, certain: bool, v: u64) {
        if certain {
            self.exclusive += v;
        }
        self.inclusive += v;
    }
}

#[derive(Clone, Debug)]
pub struct CountedTarget {
    pub beta: FieldElement,
    pub r: u64,
    pub vs_t1: HeightOrdering,
    pub vs_t2: HeightOrdering,
}

#[derive(Clone, Debug)]
pub struct CountReport {
    pub box_radius: BigInt,
    /// Every enumerated `x` satisfies `Σ x_i Tr(α_i) <= trace_cap`.
    pub trace_cap: BigInt,
    pub vectors_enumerated: u64,
    /// `|Sg_s(α, T1, T2)|`
    pub sg_s: CountPair,
    /// `|Sg_1(α, T1, T2)|`
    pub sg_1: CountPair,
    /// `Σ r(β)` over `Sg_1(α, T1, T2)`
    pub sum_r: CountPair,
    /// `Σ r(β)` over `Sg_1(α, 1, T2)`
    pub sum_r_from_one: CountPair,
    pub ambiguous: usize,
    /// `(d! H_K(α) T2 / |Δ_K|^{1/2} + 1)^n - [T1^{1/d} / (n H_K(α)^{1/d})]^n`
    pub upper_bound: Enclosure,
    /// `upper_bound / s`
    pub upper_bound_s: Enclosure,
    /// `[T2^{1/d} / (n H_K(α)^{1/d})]^n`
    pub lower_bound: Enclosure,
    pub upper_verdict: Verdict,
    pub upper_s_verdict: Verdict,
    pub lower_verdict: Verdict,
    pub targets: Vec<CountedTarget>,
}

impl CountReport {
    pub fn all_hold(&self) -> bool {
        [self.upper_verdict, self.upper_s_verdict, self.lower_verdict]
            .iter()
            .all(|v| matches!(v, Verdict::Holds | Verdict::NotApplicable))
    }

    pub fn any_violated(&self) -> bool {
        [self.upper_verdict, self.upper_s_verdict, self.lower_verdict].contains(&Verdict::Violated)
    }
}

/// `[L]^n` for an enclosure of `L >= 0`, as an integer enclosure.
fn floor_pow(l: &Enclosure, n: usize) -> Enclosure {
    let lo = l.floor_lo().max(BigInt::zero());
    let hi = l.hi().floor().to_integer().max(BigInt::zero());
    Enclosure::new(int_rat(lo.pow(n as u32)), int_rat(hi.pow(n as u32)))
}

/// Exact counts of semigroup elements of bounded height, checked against the
/// counting bounds.
///
/// Every `β` with `H_K(β) <= T2` has all of its representations in the box
/// `|x| <= d! H_K(α) T2 / |Δ_K|^{1/2}`, and being totally positive satisfies
/// `Tr(β) <= d T2`; the enumeration covers the box cut by that trace bound.
pub fn count_by_height(sys: &GeneratorSystem, params: &CountParams) -> Result<CountReport> {
    sys.require_valid()?;
    if params.t1.is_negative() || params.t1 >= params.t2 {
        return Err(Error::PreconditionViolated("need 0 <= T1 < T2".into()));
    }
    if params.s == 0 {
        return Err(Error::PreconditionViolated("s must be positive".into()));
    }
    let d = sys.d();
    let n = sys.n();
    let eps = &params.eps;
    let field = sys.field();
    let h_alpha = height_vector(sys.generators(), eps)?.enclosure;
    let root_disc = Enclosure::point(int_rat(field.discriminant().abs())).sqrt(eps);
    let radius_encl = h_alpha.scale(&(int_rat(factorial(d)) * &params.t2)).div(&root_disc);
    let box_radius = radius_encl.ceil_hi();
    let trace_cap = (int_rat(d as i64) * &params.t2).floor().to_integer();

    let radius = box_radius
        .to_u64()
        .ok_or_else(|| Error::BoxTooLarge { estimate: box_radius.to_string(), limit: params.work_limit })?;
    let traces: Vec<u64> = sys
        .traces
        .iter()
        .map(|t| t.to_u64().ok_or_else(|| Error::PreconditionViolated("trace out of range".into())))
        .collect::<Result<_>>()?;
    let cap = trace_cap.to_u64().unwrap_or(0);
    let mut estimate: u128 = 1;
    for &t in &traces {
        let per = radius.min(cap / t.max(1)) as u128 + 1;
        estimate = estimate.saturating_mul(per);
    }
    if estimate > params.work_limit as u128 {
        return Err(Error::BoxTooLarge { estimate: estimate.to_string(), limit: params.work_limit });
    }

    let mut groups: BTreeMap<Vec<BigInt>, u64> = BTreeMap::new();
    let mut x = vec![0u64; n];
    let mut visited = 0u64;
    enumerate_box(&traces, radius, cap, 0, 0, &mut x, &mut |x| {
        visited += 1;
        let b = sys.combine(x).into_coords();
        *groups.entry(b).or_insert(0) += 1;
    });

    let mut report_targets = Vec::new();
    let mut sg_s = CountPair::default();
    let mut sg_1 = CountPair::default();
    let mut sum_r = CountPair::default();
    let mut sum_r_from_one = CountPair::default();
    let mut ambiguous = 0;
    for (coords, r) in groups {
        let beta = field.element(coords)?;
        let vs_t2 = compare_height(&beta, &params.t2, params.precision_cap)?;
        if vs_t2 == HeightOrdering::Above {
            continue;
        }
        let vs_t1 = compare_height(&beta, &params.t1, params.precision_cap)?;
        let upper_certain = vs_t2 != HeightOrdering::Ambiguous;
        let lower_ok = vs_t1 != HeightOrdering::Below;
        let lower_certain = vs_t1 != HeightOrdering::Ambiguous;
        if !upper_certain || !lower_certain {
            ambiguous += 1;
        }
        if params.t2 >= BigRational::one() {
            sum_r_from_one.add(upper_certain, r);
        }
        if lower_ok {
            let certain = upper_certain && lower_certain;
            sg_1.add(certain, 1);
            sum_r.add(certain, r);
            if r >= params.s {
                sg_s.add(certain, 1);
            }
        }
        report_targets.push(CountedTarget { beta, r, vs_t1, vs_t2 });
    }

    let dth = |t: &BigRational| Enclosure::point(t.clone()).nth_root(d as u32, eps);
    let h_root = h_alpha.nth_root(d as u32, eps);
    let n_h_root = h_root.scale(&int_rat(n as i64));
    let l1 = dth(&params.t1).div(&n_h_root);
    let l2 = dth(&params.t2).div(&n_h_root);
    let one = Enclosure::from_int(1);
    let upper_bound = &(&radius_encl + &one).powi(n as u32) - &floor_pow(&l1, n);
    let upper_bound_s = upper_bound.scale(&BigRational::new(BigInt::one(), BigInt::from(params.s)));
    let lower_bound = floor_pow(&l2, n);

    let upper_verdict = Verdict::at_most(sum_r.exclusive, sum_r.inclusive, &upper_bound);
    let upper_s_verdict = Verdict::at_most(sg_s.exclusive, sg_s.inclusive, &upper_bound_s);
    let lower_verdict = if params.t2 >= BigRational::one() {
        Verdict::at_least(sum_r_from_one.exclusive, sum_r_from_one.inclusive, &lower_bound)
    } else {
        Verdict::NotApplicable
    };

    Ok(CountReport {
        box_radius,
        trace_cap,
        vectors_enumerated: visited,
        sg_s,
        sg_1,
        sum_r,
        sum_r_from_one,
        ambiguous,
        upper_bound,
        upper_bound_s,
        lower_bound,
        upper_verdict,
        upper_s_verdict,
        lower_verdict,
        targets: report_targets,
    })
}

fn enumerate_box(
    traces: &[u64],
    radius: u64,
    cap: u64,
    i: usize,
    used: u64,
    x: &mut Vec<u64>,
    visit: &mut dyn FnMut(&[u64]),
) {
    if i == x.len() {
        visit(x);
        return;
    }
    let t = traces[i].max(1);
    let top = radius.min((cap - used) / t);
    for v in 0..=top {
        x[i] = v;
        enumerate_box(traces, radius, cap, i + 1, used + v * t, x, visit);
    }
    x[i] = 0;
}

/// Monotonicity helper: `r(β + α_i) >= r(β)`.
pub fn shifted_count_dominates(sys: &GeneratorSystem, beta: &FieldElement, i: usize) -> Result<Ordering> {
    let r0 = enumerate_representations(sys, beta)?.r();
    let shifted = beta + &sys.generators()[i];
    let r1 = enumerate_representations(sys, &shifted)?.r();
    Ok(r1.cmp(&r0))
}
