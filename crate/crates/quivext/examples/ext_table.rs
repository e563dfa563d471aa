//! The deformed Ext algebra as a multiplication table: enumerate the
//! canonical basis up to a degree bound and expand every composable product
//! back in that basis.

use quivext::ext::DeformedExt;
use quivext::fixtures;
use quivext::scalar::Field;

fn main() -> quivext::Result<()> {
    let fx = fixtures::two_routes(Field::Rational);
    let ext = DeformedExt::build(&fx.alg, &fx.cocycle, 3)?;
    let table = ext.ext_table(3)?;
    println!("basis ({} classes):", table.basis.len());
    for (i, e) in table.basis.iter().enumerate() {
        println!(
            "  b{i}: Ext^{}(S_{}, S_{}), component {}, slot {}",
            e.degree, fx.alg.quiver.vertices[e.src], fx.alg.quiver.vertices[e.tgt], e.comp, e.slot
        );
    }
    println!("nonzero products (h after g):");
    let mut keys: Vec<_> = table.products.keys().collect();
    keys.sort();
    for &(g, h) in keys {
        let expansion = &table.products[&(g, h)];
        if expansion.is_empty() {
            continue;
        }
        let terms: Vec<String> = expansion
            .iter()
            .map(|(k, c)| {
                if c.is_one() {
                    format!("b{k}")
                } else {
                    format!("{c}*b{k}")
                }
            })
            .collect();
        println!("  b{h} ∘ b{g} = {}", terms.join(" + "));
    }
    Ok(())
}
