mod common;

use common::*;
use frobnf::embeddings::{certify_total_nonneg, embed};
use frobnf::frobenius::{classical_bound, classical_frobenius, denumerants, frobenius_upper_bound, gs_lower_search};
use frobnf::heights::{absolute_height, height_elem, height_vector};
use frobnf::interval::{int_rat, rat, Enclosure};
use frobnf::linalg::{det_int, rank_int};
use frobnf::measures::{
    coord_matrix, d_measure, d_measure_height_bound, d_measure_via_traces, m_measure, m_measure_height_bound,
    CoordMatrix,
};
use frobnf::nf::{FieldElement, NumberField};
use frobnf::semigroup::{
    cone_membership, enumerate_representations, sandwich_certificate, sup_norm, ConeMembership, GeneratorSystem,
};
use frobnf::{BigInt, BigRational};
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use rand::Rng;

fn field(i: usize) -> NumberField {
    fields().swap_remove(i)
}

fn elem(k: &NumberField, c: &[i64]) -> FieldElement {
    k.element_i64(&c[..k.degree()]).unwrap()
}

fn coords() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..=20, 3)
}

fn system(field_index: usize, seed: u64, extra: usize) -> GeneratorSystem {
    let mut r = rng(seed);
    random_system(&field(field_index), &mut r, extra, 5)
}

fn small_x(n: usize, seed: u64, max: u64) -> Vec<u64> {
    let mut r = rng(seed ^ 0x9e37);
    (0..n).map(|_| r.gen_range(0..=max)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trace_is_additive_and_symmetric(f in 0usize..3, a in coords(), b in coords()) {
        let k = field(f);
        let (a, b) = (elem(&k, &a), elem(&k, &b));
        prop_assert_eq!((&a + &b).trace(), a.trace() + b.trace());
        prop_assert_eq!((&a * &b).trace(), (&b * &a).trace());
    }

    #[test]
    fn multiplication_is_associative(f in 0usize..3, a in coords(), b in coords(), c in coords()) {
        let k = field(f);
        let (a, b, c) = (elem(&k, &a), elem(&k, &b), elem(&k, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn embedding_is_a_ring_map(f in 0usize..3, a in coords(), b in coords()) {
        let k = field(f);
        let (a, b) = (elem(&k, &a), elem(&k, &b));
        let eps = rat(1, 1 << 20);
        for place in 0..k.degree() {
            let prod = embed(&(&a * &b), place, &eps).unwrap();
            let ea = embed(&a, place, &eps).unwrap();
            let eb = embed(&b, place, &eps).unwrap();
            prop_assert!(prod.intersects(&(&ea * &eb)));
            let fine = embed(&a, place, &(&eps / int_rat(16))).unwrap();
            prop_assert!(fine.width() <= &eps / int_rat(16));
            prop_assert!(fine.intersects(&ea));
        }
    }

    #[test]
    fn embeddings_sum_to_the_trace(f in 0usize..3, a in coords()) {
        let k = field(f);
        let a = elem(&k, &a);
        let eps = rat(1, 1 << 24);
        let total = (0..k.degree())
            .map(|i| embed(&a, i, &eps).unwrap().midpoint())
            .fold(BigRational::zero(), |s, m| s + m);
        let gap = (total - int_rat(a.trace())).abs();
        prop_assert!(gap <= int_rat(k.degree() as i64) * &eps);
    }

    #[test]
    fn totally_positive_elements_are_closed_under_sums(f in 0usize..3, seed in any::<u64>()) {
        let k = field(f);
        let mut r = rng(seed);
        let a = random_totally_positive(&k, &mut r, 6);
        let b = random_totally_positive(&k, &mut r, 6);
        prop_assert!(certify_total_nonneg(&(&a + &b)).unwrap());
    }

    #[test]
    fn height_is_submultiplicative(f in 0usize..3, a in coords(), b in coords()) {
        let k = field(f);
        let (a, b) = (elem(&k, &a), elem(&k, &b));
        let eps = rat(1, 1 << 20);
        let hab = height_elem(&(&a * &b), &eps).unwrap().enclosure;
        let ha = height_elem(&a, &eps).unwrap().enclosure;
        let hb = height_elem(&b, &eps).unwrap().enclosure;
        prop_assert!(hab.lo() >= &int_rat(1));
        prop_assert!(hab.lo() <= &(ha.hi() * hb.hi()));
    }

    #[test]
    fn height_of_a_combination(f in 0usize..3, seed in any::<u64>(), extra in 1usize..3) {
        let sys = system(f, seed, extra);
        let x = small_x(sys.n(), seed, 6);
        let beta = sys.combine(&x);
        let eps = rat(1, 1 << 20);
        let hb = height_elem(&beta, &eps).unwrap().enclosure;
        let ha = height_vector(sys.generators(), &eps).unwrap().enclosure;
        let d = sys.d() as u32;
        let scale = num_traits::pow(BigInt::from(sys.n() as u64 * sup_norm(&x).max(1)), d as usize);
        prop_assert!(hb.lo() <= &(ha.hi() * int_rat(scale)));
    }

    #[test]
    fn tuple_height_ignores_order(f in 0usize..3, seed in any::<u64>()) {
        let sys = system(f, seed, 2);
        let eps = rat(1, 1 << 20);
        let mut rev = sys.generators().to_vec();
        rev.reverse();
        let h1 = absolute_height(sys.generators(), &eps).unwrap();
        let h2 = absolute_height(&rev, &eps).unwrap();
        prop_assert!(h1.intersects(&h2));
        let hk = height_vector(sys.generators(), &eps).unwrap().enclosure;
        let back = h1.powi(sys.d() as u32);
        prop_assert!(back.intersects(&hk));
    }

    #[test]
    fn measure_vanishes_exactly_on_rank_drop(f in 0usize..3, cs in prop::collection::vec(coords(), 3..6), b in coords()) {
        let k = field(f);
        let alpha: Vec<_> = cs.iter().map(|c| elem(&k, c)).collect();
        let a = coord_matrix(&alpha).unwrap();
        let d = k.degree();
        prop_assert_eq!(d_measure(&alpha).unwrap().is_zero(), rank_int(a.rows()) < d);
        let beta = elem(&k, &b);
        let ab = a.augmented(beta.coords());
        prop_assert_eq!(m_measure(&alpha, &beta).unwrap().is_zero(), rank_int(ab.rows()) < d);
        prop_assert_eq!(int_rat(d_measure(&alpha).unwrap()), d_measure_via_traces(&alpha).unwrap());
    }

    #[test]
    fn measure_bounds_by_height(f in 0usize..3, cs in prop::collection::vec(coords(), 3..5), b in coords()) {
        let k = field(f);
        let alpha: Vec<_> = cs.iter().map(|c| elem(&k, c)).collect();
        let eps = rat(1, 1 << 20);
        let d = d_measure(&alpha).unwrap();
        prop_assert!(int_rat(d) <= *d_measure_height_bound(&alpha, &eps).unwrap().hi());
        let beta = elem(&k, &b);
        let m = m_measure(&alpha, &beta).unwrap();
        prop_assert!(int_rat(m) <= *m_measure_height_bound(&alpha, &beta, &eps).unwrap().hi());
    }

    #[test]
    fn measure_is_invariant_under_unimodular_change(f in 0usize..3, cs in prop::collection::vec(coords(), 3..6), ops in prop::collection::vec((0usize..3, 0usize..3, -3i64..=3), 1..6)) {
        let k = field(f);
        let d = k.degree();
        let alpha: Vec<_> = cs.iter().map(|c| elem(&k, c)).collect();
        let mut rows = coord_matrix(&alpha).unwrap().rows().clone();
        for (i, j, m) in ops {
            let (i, j) = (i % d, j % d);
            if i != j {
                let src = rows[j].clone();
                for (x, y) in rows[i].iter_mut().zip(src) {
                    *x += y * m;
                }
            } else if d > 1 {
                rows.swap(i, (i + 1) % d);
            }
        }
        let changed = CoordMatrix::from_rows(rows).elements(&k).unwrap();
        prop_assert_eq!(d_measure(&changed).unwrap(), d_measure(&alpha).unwrap());
    }

    #[test]
    fn field_discriminant_is_the_trace_form(f in 0usize..3) {
        let k = field(f);
        let basis: Vec<_> = (0..k.degree()).map(|j| k.basis_element(j)).collect();
        prop_assert_eq!(&det_int(&k.trace_gram(&basis).unwrap()), k.discriminant());
        for (j, w) in basis.iter().enumerate() {
            let back = k.to_integral_coords(&w.power_coords()).unwrap();
            prop_assert_eq!(&back, &k.basis_element(j));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn representation_count_is_monotone(f in 0usize..3, seed in any::<u64>(), i in 0usize..4) {
        let sys = system(f, seed, 1 + (seed % 2) as usize);
        let beta = sys.combine(&small_x(sys.n(), seed, 3));
        let i = i % sys.n();
        let r0 = enumerate_representations(&sys, &beta).unwrap().r();
        let r1 = enumerate_representations(&sys, &(&beta + &sys.generators()[i])).unwrap().r();
        prop_assert!(r1 >= r0);
    }

    #[test]
    fn representations_fit_the_size_sandwich(f in 0usize..3, seed in any::<u64>()) {
        let sys = system(f, seed, 1 + (seed % 2) as usize);
        let beta = sys.combine(&small_x(sys.n(), seed, 4));
        let set = enumerate_representations(&sys, &beta).unwrap();
        prop_assert!(set.r() >= 1);
        let cert = sandwich_certificate(&sys, &set, &rat(1, 1 << 30)).unwrap();
        prop_assert!(cert.holds(), "violations {:?}", cert.violations);
    }

    #[test]
    fn no_representation_outside_the_box(seed in any::<u64>()) {
        let sys = system(0, seed, 1);
        let beta = sys.combine(&small_x(sys.n(), seed, 2));
        let set = enumerate_representations(&sys, &beta).unwrap();
        let radius = set.box_radius.to_u64().unwrap();
        prop_assume!((radius + 3).pow(sys.n() as u32) <= 200_000);
        prop_assert_eq!(brute_force_reps(&sys, &beta, radius + 2), set.reps);
    }

    #[test]
    fn rational_case_reduces_to_coin_counting(a in prop::collection::vec(1u64..12, 2..4), t in 1u64..60) {
        prop_assume!(coprime(&a));
        let ai: Vec<i64> = a.iter().map(|&v| v as i64).collect();
        let sys = rational(&ai);
        let beta = sys.field().from_int(t as i64);
        prop_assert_eq!(cone_membership(&sys, &beta).unwrap(), ConeMembership::InInterior);
        let r = enumerate_representations(&sys, &beta).unwrap().r() as u64;
        prop_assert_eq!(r, denumerants(&a, t as usize, u64::MAX)[t as usize]);
        prop_assert_eq!(r, brute_denumerant(&a, t));
    }

    #[test]
    fn classical_frobenius_is_monotone_in_s(a in prop::collection::vec(2u64..20, 2..4), s in 1u64..4) {
        prop_assume!(coprime(&a));
        prop_assert!(classical_frobenius(&a, s).unwrap() <= classical_frobenius(&a, s + 1).unwrap());
    }

    #[test]
    fn lower_certificates_recheck_and_respect_the_bound(f in 0usize..2, seed in any::<u64>()) {
        let sys = system(f, seed, 1);
        let ceiling = frobenius_upper_bound(&sys, 1).unwrap().bound_ceiling;
        let mut r = rng(seed);
        let beta = sys.combine(&(0..sys.n()).map(|_| r.gen_range(1..=2)).collect::<Vec<_>>());
        prop_assume!(cone_membership(&sys, &beta).unwrap() == ConeMembership::InInterior);
        let t_max = ceiling.to_u64().unwrap().min(8);
        if let Some(c) = gs_lower_search(&sys, &beta, t_max, 2, 1).unwrap() {
            prop_assert!(c.recheck(&sys).unwrap());
            prop_assert!(BigInt::from(c.t_falsified) < ceiling);
        }
    }

    #[test]
    fn rational_frobenius_within_the_upper_bound(a in prop::collection::vec(1u64..=30, 2..4), s in 1u64..4) {
        prop_assume!(coprime(&a));
        let g = classical_frobenius(&a, s).unwrap();
        let ceiling = classical_bound(&a, s).unwrap().bound_ceiling;
        prop_assert!(BigInt::from(g) <= ceiling, "g = {} exceeds ceiling {}", g, ceiling);
    }
}

#[test]
fn enclosure_root_brackets_contain_the_root() {
    let e = Enclosure::from_int(2).sqrt(&rat(1, 1 << 30));
    assert!(e.lo() * e.lo() <= int_rat(2) && e.hi() * e.hi() >= int_rat(2));
}
