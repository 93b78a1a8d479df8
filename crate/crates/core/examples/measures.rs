//! The minor measures D(α) and M(α, β).

use frobnf::measures::{d_measure, m_measure, measure_report};
use frobnf::nf::NumberField;

pub fn run_example() -> frobnf::Result<()> {
    let k = NumberField::with_power_basis(&[-2, 0, 1])?;
    let alpha = k.elements(&[&[1, 0], &[4, 1], &[6, 2]])?;
    let report = measure_report(&alpha, None)?;
    for (cols, minor) in &report.minors {
        println!("det A_{cols:?} = {minor}");
    }
    println!("D = {}", report.d_value);
    println!("M(alpha, 3+√2) = {}", m_measure(&alpha, &k.element_i64(&[3, 1])?)?);

    // the family 1, t+√2, 2t+2√2 has the same D for every t
    for t in [2, 3, 10, 50] {
        let fam = k.elements(&[&[1, 0], &[t, 1], &[2 * t, 2]])?;
        println!("t = {t}: D = {}", d_measure(&fam)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> frobnf::Result<()> {
    run_example()
}
