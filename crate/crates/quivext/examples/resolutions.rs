//! Minimal projective resolutions of every simple module, over the base
//! algebra and over its deformation, with machine-checked exactness.

use quivext::deform::build_deformed;
use quivext::engine::minimal_resolution;
use quivext::fixtures;
use quivext::scalar::Field;
use quivext::structured::StructuredAlgebra;

fn print_shape(label: &str, vertices: &[String], shape: &[Vec<usize>]) {
    print!("  {label}:");
    for row in shape {
        let names: Vec<&str> = row.iter().map(|&v| vertices[v].as_str()).collect();
        print!(" [{}]", names.join(","));
    }
    println!();
}

fn main() -> quivext::Result<()> {
    let fx = fixtures::two_routes(Field::Rational);
    let base = StructuredAlgebra::from_quotient(&fx.alg);
    let af = build_deformed(&fx.alg, &fx.cocycle);
    let vertices = &fx.alg.quiver.vertices;
    println!("{} (degree 4):", fx.name);
    for v in 0..vertices.len() {
        let res = minimal_resolution(&base, v, 4);
        res.check_exactness(&base)?;
        print_shape(
            &format!("S_{} over A  ", vertices[v]),
            vertices,
            &res.shape(),
        );
        let hat = minimal_resolution(&af, v, 4);
        hat.check_exactness(&af)?;
        print_shape(
            &format!("S_{} over A_f", vertices[v]),
            vertices,
            &hat.shape(),
        );
    }
    Ok(())
}
