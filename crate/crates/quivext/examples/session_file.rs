//! Drive the pipeline from a declarative TOML session: field, quiver,
//! relations, and cocycle rules, all in one document.

use quivext::deform::build_deformed;
use quivext::session::Session;

const SESSION: &str = r#"
[field]
kind = "prime"
p = 101

[quiver]
vertices = ["1", "2"]
arrows = [["a1", "1", "2"], ["a2", "2", "1"]]

[algebra]
relations = ["a1*a2*a1", "a2*a1*a2"]

[cocycle]
patterns = [["a1*a2*a1", "a1"], ["a2*a1*a2", "a2"]]

[options]
degree = 4
"#;

fn main() -> quivext::Result<()> {
    let s = Session::parse(SESSION)?;
    println!("field: {:?}", s.alg.field);
    println!("dimension: {}", s.alg.dim());
    println!(
        "cocycle: {}",
        if s.cocycle.check_cocycle(&s.alg).pass() {
            "PASS"
        } else {
            "FAIL"
        }
    );
    let af = build_deformed(&s.alg, &s.cocycle);
    af.check_associativity()?;
    println!("deformed dimension: {}", af.dim());
    println!("resolution degree bound: {}", s.degree);
    Ok(())
}
