#![allow(dead_code)]

use frobnf::embeddings::certify_total_nonneg;
use frobnf::interval::rat;
use frobnf::nf::{field_from_spec, FieldElement, NumberField};
use frobnf::semigroup::{check_generators, GeneratorSystem};
use frobnf::{BigInt, BigRational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn sqrt2() -> NumberField {
    NumberField::with_power_basis(&[-2, 0, 1]).unwrap()
}

/// `Q(√5)` with its maximal order basis `1, (1+√5)/2`.
pub fn golden() -> NumberField {
    field_from_spec(
        &[BigInt::from(-5), BigInt::from(0), BigInt::from(1)],
        &[vec![rat(1, 1), rat(0, 1)], vec![rat(1, 2), rat(1, 2)]],
    )
    .unwrap()
}

/// `x^3 - 4x + 1`, discriminant 229 (prime), so the power basis is maximal.
pub fn cubic() -> NumberField {
    NumberField::with_power_basis(&[1, -4, 0, 1]).unwrap()
}

pub fn fields() -> Vec<NumberField> {
    vec![sqrt2(), golden(), cubic()]
}

pub fn sqrt2_system() -> GeneratorSystem {
    let k = sqrt2();
    check_generators(&k.elements(&[&[1, 0], &[4, 1], &[6, 2]]).unwrap()).unwrap()
}

pub fn rational(a: &[i64]) -> GeneratorSystem {
    let q = NumberField::rationals();
    check_generators(&a.iter().map(|&v| q.from_int(v)).collect::<Vec<_>>()).unwrap()
}

pub fn random_element(field: &NumberField, rng: &mut impl Rng, range: i64) -> FieldElement {
    let coords: Vec<i64> = (0..field.degree()).map(|_| rng.gen_range(-range..=range)).collect();
    field.element_i64(&coords).unwrap()
}

pub fn random_tuple(field: &NumberField, rng: &mut impl Rng, n: usize, range: i64) -> Vec<FieldElement> {
    (0..n).map(|_| random_element(field, rng, range)).collect()
}

pub fn random_totally_positive(field: &NumberField, rng: &mut impl Rng, range: i64) -> FieldElement {
    loop {
        let e = random_element(field, rng, range);
        if !e.is_zero() && certify_total_nonneg(&e).unwrap() {
            return e;
        }
    }
}

/// `1, M + ω_2, …, M + ω_d` with the least `M >= 0` making every entry
/// totally positive: a spanning, totally positive tuple.
pub fn positive_basis(field: &NumberField) -> Vec<FieldElement> {
    let mut out = vec![field.one()];
    for j in 1..field.degree() {
        let w = field.basis_element(j);
        let mut m = 0i64;
        loop {
            let e = &w + &field.from_int(m);
            if certify_total_nonneg(&e).unwrap() {
                out.push(e);
                break;
            }
            m += 1;
        }
    }
    out
}

/// A valid generator system: a positive basis plus `extra` random totally
/// positive elements, shuffled.
pub fn random_system(field: &NumberField, rng: &mut impl Rng, extra: usize, range: i64) -> GeneratorSystem {
    let mut alpha = positive_basis(field);
    for _ in 0..extra {
        alpha.push(random_totally_positive(field, rng, range));
    }
    alpha.shuffle(rng);
    let sys = check_generators(&alpha).unwrap();
    assert!(sys.is_valid());
    sys
}

/// Brute force over `[0, radius]^n`, independent of the search in the library.
pub fn brute_force_reps(sys: &GeneratorSystem, beta: &FieldElement, radius: u64) -> Vec<Vec<u64>> {
    let n = sys.n();
    let mut out = Vec::new();
    let mut x = vec![0u64; n];
    loop {
        if sys.combine(&x) == *beta {
            out.push(x.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if x[i] < radius {
                x[i] += 1;
                for v in x[i + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
        }
    }
}

pub fn coprime(a: &[u64]) -> bool {
    a.iter().fold(0u64, |g, &v| num_integer::gcd(g, v)) == 1
}

/// Denumerant by direct recursion over the generators, no table.
pub fn brute_denumerant(a: &[u64], t: u64) -> u64 {
    match a.split_first() {
        None => (t == 0) as u64,
        Some((&first, rest)) => (0..=t / first).map(|k| brute_denumerant(rest, t - k * first)).sum(),
    }
}

pub fn to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap()
}
