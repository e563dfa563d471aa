//! Check a 2-cochain against the cocycle identity and build the corresponding
//! deformed algebra, doubling the dimension with a square-zero parameter.

use quivext::deform::build_deformed;
use quivext::fixtures;
use quivext::scalar::Field;

fn main() -> quivext::Result<()> {
    for fx in fixtures::all(Field::Rational) {
        let report = fx.cocycle.check_cocycle(&fx.alg);
        println!(
            "{}: cocycle {}",
            fx.name,
            if report.pass() { "PASS" } else { "FAIL" }
        );
        if !report.pass() {
            continue;
        }
        let af = build_deformed(&fx.alg, &fx.cocycle);
        af.check_associativity()?;
        af.check_frame()?;
        println!(
            "  dim {} -> {}, radical {} -> {}, generators: {}",
            fx.alg.dim(),
            af.dim(),
            fx.alg.radical().len(),
            af.radical.len(),
            af.generators
                .iter()
                .map(|&g| af.labels[g].clone())
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    Ok(())
}
