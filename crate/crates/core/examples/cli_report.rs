//! Drive the command line front end on a problem file.

use frobnf::cli::{execute, Command, Options, ProblemSpec};

pub fn run_example() -> frobnf::Result<()> {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/specs/sqrt2.json");
    let spec = ProblemSpec::load(&path)?;
    for command in [Command::Validate, Command::Measures, Command::Witness] {
        let report = execute(command, &spec, &Options::default())?;
        print!("{}", report.render());
    }
    let opts = Options { beta: Some("3,1".into()), ..Default::default() };
    let report = execute(Command::Represent, &spec, &opts)?;
    print!("{}", report.render());
    let plot = execute(Command::Plotdata, &spec, &Options { coord_box: Some(2), ..Default::default() })?;
    print!("{}", plot.render());
    Ok(())
}

#[allow(dead_code)]
fn main() -> frobnf::Result<()> {
    run_example()
}
