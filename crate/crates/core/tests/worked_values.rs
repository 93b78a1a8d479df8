mod common;

use common::*;
use frobnf::embeddings::{certify_total_nonneg, embed, isolate_roots};
use frobnf::frobenius::{
    classical_frobenius, corollary_report, default_eps, frobenius_upper_bound, gs_lower_search, rational_system,
};
use frobnf::heights::{compare_height, height_elem, height_vector, HeightOrdering};
use frobnf::interval::rat;
use frobnf::measures::{coord_matrix, d_measure, disc_subtuple, m_measure};
use frobnf::nf::NumberField;
use frobnf::semigroup::{
    check_generators, cone_membership, count_by_height, enumerate_representations, min_representation, witness_search,
    ConeMembership, CountParams, Verdict,
};
use frobnf::{BigInt, Error};

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn field_construction() {
    assert_eq!(sqrt2().discriminant(), &BigInt::from(8));
    assert_eq!(NumberField::rationals().discriminant(), &BigInt::from(1));
    assert_eq!(golden().discriminant(), &BigInt::from(5));
    assert_eq!(cubic().discriminant(), &BigInt::from(229));
    let err = NumberField::with_power_basis(&[1, 0, 1]).unwrap_err();
    assert_eq!(err, Error::NotTotallyReal { real_roots: 0, degree: 2 });
    assert_eq!(NumberField::with_power_basis(&[-2, 0, 2]).unwrap_err(), Error::NotMonic);
    assert_eq!(NumberField::with_power_basis(&[1, -2, 1]).unwrap_err(), Error::NotSquarefree);
    let not_ring = NumberField::new(ints(&[-2, 0, 1]), vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 2)]]);
    assert_eq!(not_ring.unwrap_err().name(), "BasisNotRing");
    let singular = NumberField::new(ints(&[-2, 0, 1]), vec![vec![rat(1, 1), rat(0, 1)], vec![rat(2, 1), rat(0, 1)]]);
    assert_eq!(singular.unwrap_err(), Error::SingularBasis);
}

#[test]
fn element_arithmetic_and_traces() {
    let k = sqrt2();
    let e = |c: &[i64]| k.element_i64(c).unwrap();
    assert_eq!(e(&[0, 1]).checked_mul(&e(&[0, 1])).unwrap(), e(&[2, 0]));
    assert_eq!(e(&[4, 1]).checked_mul(&e(&[1, 0])).unwrap(), e(&[4, 1]));
    assert_eq!(e(&[4, 1]).checked_mul(&e(&[6, 2])).unwrap(), e(&[28, 14]));
    assert_eq!(e(&[1, 0]).trace(), BigInt::from(2));
    assert_eq!(e(&[0, 1]).trace(), BigInt::from(0));
    assert_eq!(e(&[4, 1]).trace(), BigInt::from(8));
    assert_eq!(e(&[1, 0]).checked_mul(&golden().one()).unwrap_err(), Error::FieldMismatch);
}

#[test]
fn integral_coordinates() {
    let k = sqrt2();
    assert_eq!(k.to_integral_coords(&[rat(3, 1), rat(1, 1)]).unwrap(), k.element_i64(&[3, 1]).unwrap());
    assert_eq!(k.to_integral_coords(&[rat(1, 2), rat(0, 1)]).unwrap_err(), Error::NotAnAlgebraicInteger);
    let g = golden();
    assert_eq!(g.to_integral_coords(&[rat(0, 1), rat(1, 1)]).unwrap().coords(), &ints(&[-1, 2])[..]);
}

#[test]
fn root_isolation() {
    let two = isolate_roots(&sqrt2());
    let iv = two.isolating_intervals();
    assert_eq!(iv.len(), 2);
    // half-open intervals (lo, hi] may share an endpoint
    assert!(iv[0].hi() <= iv[1].lo());
    assert!(iv[0].lo() < &rat(-1414, 1000) && iv[1].hi() > &rat(1414, 1000));
    let c = isolate_roots(&cubic());
    assert_eq!(c.len(), 3);
    // sign changes of x^3 - 4x + 1 between -3, -2, 0, 1, 2
    let f = |x: i64| x * x * x - 4 * x + 1;
    assert!(f(-3) < 0 && f(-2) > 0 && f(0) > 0 && f(1) < 0 && f(2) > 0);
    let roots: Vec<_> = c.isolating_intervals().to_vec();
    assert!(roots[0].hi() <= roots[1].lo() && roots[1].hi() <= roots[2].lo());
}

#[test]
fn embeddings_values() {
    let k = sqrt2();
    let eps = rat(1, 1_000_000_000);
    let one = embed(&k.one(), 0, &eps).unwrap();
    assert!(one.contains(&rat(1, 1)) && one.width() <= eps);
    let a = embed(&k.element_i64(&[4, 1]).unwrap(), 1, &eps).unwrap();
    assert!(a.lo() > &rat(54142, 10000) && a.hi() < &rat(54143, 10000));
    let b = embed(&k.element_i64(&[6, 2]).unwrap(), 0, &eps).unwrap();
    assert!(b.lo() > &rat(31715, 10000) && b.hi() < &rat(31716, 10000));
    assert!(certify_total_nonneg(&k.zero()).unwrap());
    assert!(certify_total_nonneg(&k.element_i64(&[4, 1]).unwrap()).unwrap());
    assert!(!certify_total_nonneg(&k.element_i64(&[1, -1]).unwrap()).unwrap());
}

#[test]
fn heights_values() {
    let k = sqrt2();
    let eps = rat(1, 1 << 30);
    let h = |c: &[i64]| height_elem(&k.element_i64(c).unwrap(), &eps).unwrap();
    assert!(h(&[1, 0]).enclosure.is_point() && h(&[1, 0]).enclosure.lo() == &rat(1, 1));
    assert_eq!(h(&[3, 1]).exact, Some(BigInt::from(7)));
    assert!(h(&[0, 1]).enclosure.contains(&rat(2, 1)));
    let alpha = k.elements(&[&[1, 0], &[4, 1], &[6, 2]]).unwrap();
    assert_eq!(height_vector(&alpha, &eps).unwrap().exact, Some(BigInt::from(28)));
    let q = NumberField::rationals();
    assert!(height_vector(&[q.from_int(5)], &eps).unwrap().enclosure.contains(&rat(5, 1)));
    let beta = k.element_i64(&[3, 1]).unwrap();
    assert_eq!(compare_height(&beta, &rat(7, 1), 256).unwrap(), HeightOrdering::Equal);
    assert_eq!(compare_height(&beta, &rat(69, 10), 256).unwrap(), HeightOrdering::Above);
    assert_eq!(compare_height(&k.one(), &rat(2, 1), 256).unwrap(), HeightOrdering::Below);
    assert_eq!(compare_height(&k.element_i64(&[0, 1]).unwrap(), &rat(3, 1), 256).unwrap(), HeightOrdering::Below);
}

#[test]
fn measures_values() {
    let k = sqrt2();
    let alpha = k.elements(&[&[1, 0], &[4, 1], &[6, 2]]).unwrap();
    assert_eq!(coord_matrix(&alpha).unwrap().rows(), &vec![ints(&[1, 4, 6]), ints(&[0, 1, 2])]);
    let fam = k.elements(&[&[1, 0], &[2, 1], &[4, 2]]).unwrap();
    assert_eq!(coord_matrix(&fam).unwrap().rows(), &vec![ints(&[1, 2, 4]), ints(&[0, 1, 2])]);
    let basis = vec![k.basis_element(0), k.basis_element(1)];
    assert_eq!(coord_matrix(&basis).unwrap().rows(), &vec![ints(&[1, 0]), ints(&[0, 1])]);

    assert_eq!(disc_subtuple(&basis).unwrap(), BigInt::from(8));
    assert_eq!(disc_subtuple(&k.elements(&[&[1, 0], &[4, 1]]).unwrap()).unwrap(), BigInt::from(8));
    assert_eq!(disc_subtuple(&k.elements(&[&[2, 1], &[4, 2]]).unwrap()).unwrap(), BigInt::from(0));

    assert_eq!(d_measure(&alpha).unwrap(), BigInt::from(9));
    assert_eq!(d_measure(&fam).unwrap(), BigInt::from(5));
    assert_eq!(d_measure(&k.elements(&[&[1, 0], &[2, 0]]).unwrap()).unwrap(), BigInt::from(0));

    assert_eq!(m_measure(&alpha, &k.element_i64(&[3, 1]).unwrap()).unwrap(), BigInt::from(2));
    assert_eq!(m_measure(&alpha, &k.zero()).unwrap(), BigInt::from(2));
    assert_eq!(m_measure(&basis, &k.zero()).unwrap(), BigInt::from(1));
}

#[test]
fn generator_certificates() {
    let sys = sqrt2_system();
    assert!(sys.spanning && sys.totally_positive && sys.pointed);
    let k = sqrt2();
    let bad = check_generators(&k.elements(&[&[2, 0], &[0, 2]]).unwrap()).unwrap();
    assert!(!bad.spanning);
    let q = rational(&[3, 5]);
    assert!(q.spanning && q.pointed);
}

#[test]
fn cone_decisions() {
    let sys = sqrt2_system();
    let k = sys.field().clone();
    // 3+√2 = α_3 / 2 lies on an extreme ray of the cone
    assert_eq!(cone_membership(&sys, &k.element_i64(&[3, 1]).unwrap()).unwrap(), ConeMembership::InCone);
    assert_eq!(cone_membership(&sys, &k.zero()).unwrap(), ConeMembership::InCone);
    assert_eq!(cone_membership(&sys, &k.element_i64(&[-1, 0]).unwrap()).unwrap(), ConeMembership::NotInCone);
    assert_eq!(cone_membership(&sys, &k.element_i64(&[10, 3]).unwrap()).unwrap(), ConeMembership::InInterior);
    let not_spanning = check_generators(&k.elements(&[&[2, 0], &[4, 2]]).unwrap()).unwrap();
    assert_eq!(cone_membership(&not_spanning, &k.one()).unwrap_err().name(), "PreconditionViolated");
}

#[test]
fn representation_lists() {
    let sys = sqrt2_system();
    let k = sys.field().clone();
    let e = |c: &[i64]| k.element_i64(c).unwrap();
    let r = enumerate_representations(&sys, &e(&[3, 1])).unwrap();
    assert!(r.reps.is_empty() && r.complete);
    assert_eq!(enumerate_representations(&sys, &e(&[10, 3])).unwrap().reps, vec![vec![0, 1, 1]]);
    assert_eq!(enumerate_representations(&sys, &e(&[2, 0])).unwrap().reps, vec![vec![2, 0, 0]]);
}

#[test]
fn shortest_representations() {
    let sys = sqrt2_system();
    let k = sys.field().clone();
    let eps = rat(1, 1 << 30);
    let m = min_representation(&sys, &k.element_i64(&[10, 3]).unwrap(), &eps).unwrap();
    assert_eq!((m.x.clone(), m.norm), (vec![0, 1, 1], 1));
    let lb = m.certificate.lower_bound.unwrap();
    assert!(lb.hi() <= &rat(1, 1));
    let m = min_representation(&sys, &sys.generators()[0], &eps).unwrap();
    assert_eq!((m.x, m.norm), (vec![1, 0, 0], 1));
    let q = rational(&[3, 5]);
    let m = min_representation(&q, &q.field().from_int(11), &eps).unwrap();
    assert_eq!(m.x, vec![2, 1]);
    assert!(BigInt::from(m.norm) <= m.certificate.upper_bound);
}

#[test]
fn gap_witnesses() {
    let sys = sqrt2_system();
    assert_eq!(witness_search(&sys, 4).unwrap().unwrap().coords(), &ints(&[3, 1])[..]);
    let k = sqrt2();
    let full = check_generators(&k.elements(&[&[1, 0], &[2, 1], &[3, 2]]).unwrap()).unwrap();
    assert!(witness_search(&full, 4).unwrap().is_none());
    assert_eq!(witness_search(&rational(&[2, 3]), 1).unwrap().unwrap().coords(), &ints(&[1])[..]);
}

#[test]
fn height_counts() {
    let sys = sqrt2_system();
    let c = count_by_height(&sys, &CountParams::new(1, rat(1, 1), rat(8, 1))).unwrap();
    // 0 and 1 have height 1, 2 has height 4; everything else in Sg is above 8
    let listed: Vec<_> = c.targets.iter().map(|t| t.beta.coords().to_vec()).collect();
    assert!(listed.contains(&ints(&[2, 0])) && listed.contains(&ints(&[1, 0])));
    assert_eq!(c.sg_1.inclusive, 3);
    assert!(c.all_hold());
    assert_eq!(c.ambiguous, 0);

    let q = rational(&[3, 5]);
    let c = count_by_height(&q, &CountParams::new(1, rat(1, 1), rat(20, 1))).unwrap();
    // 0 has height 1 and belongs to the semigroup, then 3, 5, 6, 8..=20
    assert_eq!(c.sg_1.exclusive, 17);
    let big = count_by_height(&q, &CountParams::new(1_000_000, rat(1, 1), rat(20, 1))).unwrap();
    assert_eq!(big.sg_s.inclusive, 0);
    assert_eq!(big.upper_s_verdict, Verdict::Holds);
}

#[test]
fn bound_values() {
    let b = frobenius_upper_bound(&sqrt2_system(), 1).unwrap();
    assert!(b.bound.lo() > &rat(318, 100) && b.bound.hi() < &rat(319, 100));
    assert_eq!(b.bound_ceiling, BigInt::from(4));
    let q = frobenius_upper_bound(&rational_system(&[3, 5]).unwrap(), 1).unwrap();
    assert_eq!(q.d_value, BigInt::from(34));
    assert!(q.bound.lo() > &rat(1202, 100) && q.bound.hi() < &rat(1203, 100));
    assert!(BigInt::from(7) <= q.bound_ceiling);
}

#[test]
fn classical_values_match_closed_forms() {
    assert_eq!(classical_frobenius(&[3, 5], 1).unwrap(), 3 * 5 - 3 - 5);
    assert_eq!(classical_frobenius(&[3, 5], 2).unwrap(), 2 * 3 * 5 - 3 - 5);
    assert_eq!(classical_frobenius(&[2, 3], 1).unwrap(), 1);
}

#[test]
fn lower_search_values() {
    let sys = sqrt2_system();
    let ceiling = frobenius_upper_bound(&sys, 1).unwrap().bound_ceiling;
    let beta = sys.field().element_i64(&[10, 3]).unwrap();
    if let Some(c) = gs_lower_search(&sys, &beta, 4, 3, 1).unwrap() {
        assert!(BigInt::from(c.t_falsified) < ceiling);
        assert!(c.recheck(&sys).unwrap());
    }
    assert!(gs_lower_search(&sys, &beta, 0, 3, 1).unwrap().is_none());
    // every gap of this system lies on the ray of 6+2√2, so no open shifted
    // cone contains one
    let alpha_2 = sys.generators()[1].clone();
    assert!(gs_lower_search(&sys, &alpha_2, 4, 4, 1).unwrap().is_none());
    assert!(gs_lower_search(&sys, &sys.field().one(), 4, 4, 1).is_err());
    // over Q the gap 7 of (3, 5) sits in int(6 + Q_{>=0})
    let q = rational_system(&[3, 5]).unwrap();
    let c = gs_lower_search(&q, &q.field().one(), 6, 1, 1).unwrap().unwrap();
    assert_eq!(c.t_falsified, 6);
    assert!(c.recheck(&q).unwrap());
}

#[test]
fn corollary_values() {
    let eps = default_eps();
    let r = corollary_report(&sqrt2_system(), 4, &eps).unwrap();
    assert_eq!(r.d_value, BigInt::from(9));
    assert!(r.d_lower.hi() < &rat(283, 100));
    assert!(r.abs_height.lo() > &rat(529, 100));
    let q = r.quadratic_lower.clone().unwrap();
    assert!(q.lo() > &rat(117, 100) && q.hi() < &rat(118, 100));
    assert!(r.all_hold());
    let many = corollary_report(&rational_system(&[2, 3, 5, 7, 11, 13]).unwrap(), 2, &eps).unwrap();
    assert_eq!(many.d_lower.lo(), &rat(1, 1));
    let r = corollary_report(&rational_system(&[2, 3]).unwrap(), 2, &eps).unwrap();
    assert_eq!(r.d_value, BigInt::from(13));
    assert!(r.all_hold());
}
