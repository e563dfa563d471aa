//! Build a bound quiver algebra from scratch: define the quiver, impose a
//! relation, and inspect the certified normal-form basis.

use quivext::algebra::QuotientAlgebra;
use quivext::grammar::parse_combo;
use quivext::quiver::Quiver;
use quivext::scalar::Field;

fn main() -> quivext::Result<()> {
    // two routes from 1 to 4; the route through 2 is killed
    let quiver = Quiver::new(
        vec!["1".into(), "2".into(), "3".into(), "4".into()],
        vec![
            ("a1".into(), "1".into(), "2".into()),
            ("a2".into(), "2".into(), "4".into()),
            ("a3".into(), "1".into(), "3".into()),
            ("a4".into(), "3".into(), "4".into()),
        ],
    )?;
    let field = Field::Rational;
    let rel = parse_combo(&quiver, field, "a1*a2")?;
    let alg = QuotientAlgebra::build(quiver, field, &[rel], 6)?;

    println!("dimension: {}", alg.dim());
    println!("radical dimension: {}", alg.radical().len());
    println!("basis:");
    for p in &alg.basis {
        println!("  {}", alg.quiver.path_name(p));
    }
    // multiply two elements written in the path grammar
    let x = alg.nf_combo(&parse_combo(&alg.quiver, field, "a1 + 2*a3")?);
    let y = alg.nf_combo(&parse_combo(&alg.quiver, field, "a2 - a4")?);
    println!("(a1 + 2*a3)(a2 - a4) = {}", alg.render(&alg.mul(&x, &y)));
    Ok(())
}
