//! Certified real embeddings and total positivity.

use frobnf::embeddings::{certify_total_nonneg, embed, isolate_roots};
use frobnf::interval::rat;
use frobnf::nf::NumberField;

pub fn run_example() -> frobnf::Result<()> {
    let cubic = NumberField::with_power_basis(&[1, -4, 0, 1])?;
    for (i, root) in isolate_roots(&cubic).isolating_intervals().iter().enumerate() {
        println!("root {i} in ({}, {}]", root.lo(), root.hi());
    }
    let eps = rat(1, 1_000_000_000_000);
    let k = NumberField::with_power_basis(&[-2, 0, 1])?;
    let a = k.element_i64(&[4, 1])?;
    for place in 0..2 {
        println!("sigma_{place}(4+√2) = {}", embed(&a, place, &eps)?.to_decimal(12));
    }
    let b = k.element_i64(&[1, -1])?;
    println!("4+√2 totally positive: {}", certify_total_nonneg(&a)?);
    println!("1-√2 totally positive: {}", certify_total_nonneg(&b)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> frobnf::Result<()> {
    run_example()
}
