//! Heights of elements and tuples, and exact threshold comparison.

use frobnf::heights::{compare_height, height_elem, height_vector};
use frobnf::interval::rat;
use frobnf::nf::NumberField;

pub fn run_example() -> frobnf::Result<()> {
    let k = NumberField::with_power_basis(&[-2, 0, 1])?;
    let eps = rat(1, 1 << 40);
    let alpha = k.elements(&[&[1, 0], &[4, 1], &[6, 2]])?;
    let h = height_vector(&alpha, &eps)?;
    println!("H_K(alpha) = {} (exact {:?})", h.enclosure.to_decimal(10), h.exact);
    let beta = k.element_i64(&[3, 1])?;
    println!("H_K(3+√2) = {}", height_elem(&beta, &eps)?.enclosure.to_decimal(10));
    println!("H_K(1+√2) = {}", height_elem(&k.element_i64(&[1, 1])?, &eps)?.enclosure.to_decimal(10));
    for t in [rat(69, 10), rat(7, 1), rat(71, 10)] {
        println!("H_K(3+√2) vs {t}: {}", compare_height(&beta, &t, 256)?.name());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> frobnf::Result<()> {
    run_example()
}
