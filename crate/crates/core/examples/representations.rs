//! Cone membership, complete representation lists and gaps.

use frobnf::interval::rat;
use frobnf::nf::NumberField;
use frobnf::semigroup::{
    check_generators, cone_membership, enumerate_representations, min_representation, witness_search,
};

pub fn run_example() -> frobnf::Result<()> {
    let k = NumberField::with_power_basis(&[-2, 0, 1])?;
    let sys = check_generators(&k.elements(&[&[1, 0], &[4, 1], &[6, 2]])?)?;
    println!("spanning {} totally positive {} pointed {}", sys.spanning, sys.totally_positive, sys.pointed);
    for coords in [[3, 1], [10, 3], [12, 2], [-1, 0]] {
        let beta = k.element_i64(&coords)?;
        let cone = cone_membership(&sys, &beta)?;
        if !cone.in_cone() {
            println!("{beta}: {}", cone.name());
            continue;
        }
        let reps = enumerate_representations(&sys, &beta)?;
        println!("{beta}: {} r = {} box {} reps {:?}", cone.name(), reps.r(), reps.box_radius, reps.reps);
    }
    let min = min_representation(&sys, &k.element_i64(&[12, 2])?, &rat(1, 1 << 30))?;
    println!("shortest representation of 12+2√2: {:?}, sandwich holds {}", min.x, min.certificate.holds());
    if let Some(w) = witness_search(&sys, 4)? {
        println!("first gap: {w}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> frobnf::Result<()> {
    run_example()
}
