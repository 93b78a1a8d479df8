//! Build a few totally real fields and do exact arithmetic in them.

use frobnf::interval::rat;
use frobnf::nf::{field_from_spec, NumberField};

pub fn run_example() -> frobnf::Result<()> {
    let k = NumberField::with_power_basis(&[-2, 0, 1])?;
    let a = k.element_i64(&[4, 1])?;
    let b = k.element_i64(&[6, 2])?;
    let ab = a.checked_mul(&b)?;
    println!("Q(sqrt 2): Delta = {}", k.discriminant());
    println!("(4+√2)(6+2√2) = {ab}, trace {}, norm {}", ab.trace(), ab.norm());
    assert_eq!(ab.coords(), &[28.into(), 14.into()]);

    // ring of integers of Q(√5): basis 1, (1+√5)/2
    // 1, 1+√5 spans the order Z[√5] of index 2
    let order = NumberField::from_spec(&[-5, 0, 1], &[vec![1, 0], vec![1, 1]])?;
    println!("Z[sqrt 5]: Delta = {}", order.discriminant());
    let k5 =
        field_from_spec(&[(-5).into(), 0.into(), 1.into()], &[vec![rat(1, 1), rat(0, 1)], vec![rat(1, 2), rat(1, 2)]])?;
    let phi = k5.basis_element(1);
    println!("Q(sqrt 5): Delta = {}, phi^2 = {}", k5.discriminant(), phi.checked_mul(&phi)?);

    let cubic = NumberField::with_power_basis(&[1, -4, 0, 1])?;
    println!("x^3 - 4x + 1: Delta = {}", cubic.discriminant());
    Ok(())
}

#[allow(dead_code)]
fn main() -> frobnf::Result<()> {
    run_example()
}
