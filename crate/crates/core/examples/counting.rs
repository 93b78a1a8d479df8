//! Exact counts of semigroup elements by height.

use frobnf::interval::rat;
use frobnf::nf::NumberField;
use frobnf::semigroup::{check_generators, count_by_height, CountParams};

pub fn run_example() -> frobnf::Result<()> {
    let k = NumberField::with_power_basis(&[-2, 0, 1])?;
    let sys = check_generators(&k.elements(&[&[1, 0], &[4, 1], &[6, 2]])?)?;
    for (t1, t2) in [(1, 8), (2, 20)] {
        let c = count_by_height(&sys, &CountParams::new(1, rat(t1, 1), rat(t2, 1)))?;
        println!(
            "T = [{t1}, {t2}]: |Sg_1| = {}, sum r = {}, upper bound {} ({}), lower {} ({})",
            c.sg_1.exclusive,
            c.sum_r.exclusive,
            c.upper_bound.to_decimal(2),
            c.upper_verdict.name(),
            c.lower_bound.to_decimal(0),
            c.lower_verdict.name(),
        );
        for t in c.targets.iter().take(5) {
            println!("  {} r = {}", t.beta, t.r);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> frobnf::Result<()> {
    run_example()
}
