//! Certified lower bounds for g_s(α, β) and the gap corollaries.

use frobnf::frobenius::{corollary_report, default_eps, frobenius_upper_bound, gs_lower_search, rational_system};
use frobnf::nf::NumberField;
use frobnf::semigroup::check_generators;

pub fn run_example() -> frobnf::Result<()> {
    let k = NumberField::with_power_basis(&[-2, 0, 1])?;
    let sys = check_generators(&k.elements(&[&[1, 0], &[4, 1], &[6, 2]])?)?;
    let ceiling = frobenius_upper_bound(&sys, 1)?.bound_ceiling;
    let beta = k.element_i64(&[10, 3])?;
    match gs_lower_search(&sys, &beta, 4, 3, 1)? {
        Some(c) => println!(
            "g_1(alpha, 10+3√2) > {} via {}, rechecked {}, ceiling {ceiling}",
            c.t_falsified,
            c.witness,
            c.recheck(&sys)?
        ),
        None => println!("no lower bound found, ceiling {ceiling}"),
    }
    let report = corollary_report(&sys, 4, &default_eps())?;
    println!(
        "gap {}: D = {} >= {} ({}), H = {} >= {} ({})",
        report.witness,
        report.d_value,
        report.d_lower.to_decimal(4),
        report.d_verdict.name(),
        report.abs_height.to_decimal(4),
        report.h_lower.to_decimal(4),
        report.h_verdict.name(),
    );
    let q = rational_system(&[3, 5])?;
    let c = gs_lower_search(&q, &q.field().one(), 20, 2, 1)?.expect("7 is a gap");
    println!("over Q, (3, 5): g_1 > {} via {}", c.t_falsified, c.witness);
    Ok(())
}

#[allow(dead_code)]
fn main() -> frobnf::Result<()> {
    run_example()
}
