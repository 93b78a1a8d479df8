//! The upper bound on g_s(α) next to exact values over the rationals.

use frobnf::frobenius::{classical_bound, classical_frobenius, frobenius_upper_bound};
use frobnf::nf::NumberField;
use frobnf::semigroup::check_generators;

pub fn run_example() -> frobnf::Result<()> {
    let k = NumberField::with_power_basis(&[-2, 0, 1])?;
    let sys = check_generators(&k.elements(&[&[1, 0], &[4, 1], &[6, 2]])?)?;
    for s in 1..=3 {
        let b = frobenius_upper_bound(&sys, s)?;
        println!("s = {s}: bound {} ceiling {}", b.bound.to_decimal(6), b.bound_ceiling);
    }
    for a in [[3u64, 5], [2, 3], [7, 9], [29, 30]] {
        for s in 1..=2 {
            let g = classical_frobenius(&a, s)?;
            let b = classical_bound(&a, s)?;
            let mark = if frobnf::BigInt::from(g) <= b.bound_ceiling { "" } else { "  exceeds the bound" };
            println!("a = {a:?} s = {s}: g = {g}, ceiling {}{mark}", b.bound_ceiling);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> frobnf::Result<()> {
    run_example()
}
