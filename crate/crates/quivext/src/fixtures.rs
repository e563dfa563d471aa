//! Built-in example sessions: bound quiver algebras with a distinguished
//! 2-cocycle, used by the test suite, the runnable examples, and `selftest`.

use crate::algebra::QuotientAlgebra;
use crate::error::Result;
use crate::grammar::{parse_combo, parse_path};
use crate::hochschild::Cochain2;
use crate::quiver::Quiver;
use crate::scalar::Field;

pub struct Fixture {
    pub name: String,
    pub alg: QuotientAlgebra,
    pub cocycle: Cochain2,
}

fn build(
    name: &str,
    field: Field,
    vertices: &[&str],
    arrows: &[(&str, &str, &str)],
    relations: &[&str],
    patterns: &[(&str, &str)],
) -> Result<Fixture> {
    let quiver = Quiver::new(
        vertices.iter().map(|s| s.to_string()).collect(),
        arrows
            .iter()
            .map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string()))
            .collect(),
    )?;
    let rels: Vec<_> = relations
        .iter()
        .map(|r| parse_combo(&quiver, field, r))
        .collect::<Result<_>>()?;
    let bound = 2 * rels
        .iter()
        .flat_map(|r| r.iter().map(|(p, _)| p.len()))
        .max()
        .unwrap_or(1)
        + 2;
    let alg = QuotientAlgebra::build(quiver, field, &rels, bound)?;
    let pats: Vec<_> = patterns
        .iter()
        .map(|(w, r)| {
            Ok((
                parse_path(&alg.quiver, field, w)?,
                parse_combo(&alg.quiver, field, r)?,
            ))
        })
        .collect::<Result<_>>()?;
    let cocycle = Cochain2::materialize(&alg, &pats, &[])?;
    Ok(Fixture {
        name: name.to_string(),
        alg,
        cocycle,
    })
}

/// Four vertices, two routes 1→2→4 and 1→3→4, with the first route killed;
/// the cocycle resurrects it through the surviving one.
pub fn two_routes(field: Field) -> Fixture {
    build(
        "two-routes",
        field,
        &["1", "2", "3", "4"],
        &[
            ("a1", "1", "2"),
            ("a2", "2", "4"),
            ("a3", "1", "3"),
            ("a4", "3", "4"),
        ],
        &["a1*a2"],
        &[("a1*a2", "a3*a4")],
    )
    .unwrap()
}

/// Two vertices with arrows back and forth and zigzag words of length three
/// killed; the cocycle folds each killed word onto its middle arrow.
pub fn zigzag(field: Field) -> Fixture {
    build(
        "zigzag",
        field,
        &["1", "2"],
        &[("a1", "1", "2"), ("a2", "2", "1")],
        &["a1*a2*a1", "a2*a1*a2"],
        &[("a1*a2*a1", "a1"), ("a2*a1*a2", "a2")],
    )
    .unwrap()
}

/// One loop truncated at a^r, with the cocycle closing a^r to the idempotent;
/// the deformation is the loop truncated at a^2r.
pub fn truncated_loop(field: Field, r: usize) -> Fixture {
    assert!(r >= 3, "loop truncation needs r >= 3");
    let rel = (0..r).map(|_| "a").collect::<Vec<_>>().join("*");
    build(
        "loop",
        field,
        &["1"],
        &[("a", "1", "1")],
        &[&rel],
        &[(&rel, "e_1")],
    )
    .unwrap()
}

/// Two vertices joined by double arrows both ways, four zero relations, and a
/// cocycle supported on the word b2*a1.
pub fn double_arrows(field: Field) -> Fixture {
    build(
        "double-arrows",
        field,
        &["1", "2"],
        &[
            ("a1", "1", "2"),
            ("a2", "1", "2"),
            ("b1", "2", "1"),
            ("b2", "2", "1"),
        ],
        &["b1*a1", "b2*a1", "b2*a2", "a2*b1"],
        &[("b2*a1", "e_2")],
    )
    .unwrap()
}

/// A 3-cycle with one length-3 and one length-4 relation and a two-pattern
/// cocycle.
pub fn cycle(field: Field) -> Fixture {
    build(
        "cycle",
        field,
        &["1", "2", "3"],
        &[("a1", "1", "2"), ("a2", "2", "3"), ("a3", "3", "1")],
        &["a1*a2*a3", "a2*a3*a1*a2"],
        &[("a1*a2*a3", "e_1"), ("a2*a3*a1*a2", "a2")],
    )
    .unwrap()
}

/// Every built-in fixture over the rationals (loop instantiated at r = 3, 4, 5).
pub fn all(field: Field) -> Vec<Fixture> {
    let mut out = vec![two_routes(field), zigzag(field)];
    for r in [3, 4, 5] {
        let mut fx = truncated_loop(field, r);
        fx.name = format!("loop-{r}");
        out.push(fx);
    }
    out.push(double_arrows(field));
    out.push(cycle(field));
    out
}

pub fn by_name(field: Field, name: &str) -> Option<Fixture> {
    match name {
        "two-routes" => Some(two_routes(field)),
        "zigzag" => Some(zigzag(field)),
        "loop-3" => Some(truncated_loop(field, 3)),
        "loop-4" => Some(truncated_loop(field, 4)),
        "loop-5" => Some(truncated_loop(field, 5)),
        "double-arrows" => Some(double_arrows(field)),
        "cycle" => Some(cycle(field)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::minimal_resolution;
    use crate::structured::StructuredAlgebra;

    #[test]
    fn dimensions() {
        assert_eq!(two_routes(Field::Rational).alg.dim(), 9);
        assert_eq!(zigzag(Field::Rational).alg.dim(), 6);
        for r in [3usize, 4, 5] {
            assert_eq!(truncated_loop(Field::Rational, r).alg.dim(), r);
        }
        assert_eq!(double_arrows(Field::Rational).alg.dim(), 13);
        assert_eq!(cycle(Field::Rational).alg.dim(), 11);
    }

    #[test]
    fn all_cocycles_pass() {
        for fx in all(Field::Rational) {
            assert!(
                fx.cocycle.check_cocycle(&fx.alg).pass(),
                "fixture {}",
                fx.name
            );
        }
        for fx in all(Field::Prime(101)) {
            assert!(
                fx.cocycle.check_cocycle(&fx.alg).pass(),
                "fixture {}",
                fx.name
            );
        }
    }

    #[test]
    fn base_resolution_shapes() {
        // two-routes, simple at the sink: 0 → P_1 → P_2⊕P_3 → P_4
        let fx = two_routes(Field::Rational);
        let s = StructuredAlgebra::from_quotient(&fx.alg);
        let res = minimal_resolution(&s, 3, 4);
        assert_eq!(
            res.shape(),
            vec![vec![3], vec![1, 2], vec![0], vec![], vec![]]
        );

        // double-arrows, simple at vertex 2:
        // 0 → P_2 → P_1 → P_2⊕P_2⊕P_2 → P_1⊕P_1 → P_2
        let fx = double_arrows(Field::Rational);
        let s = StructuredAlgebra::from_quotient(&fx.alg);
        let res = minimal_resolution(&s, 1, 6);
        assert_eq!(
            res.shape(),
            vec![
                vec![1],
                vec![0, 0],
                vec![1, 1, 1],
                vec![0],
                vec![1],
                vec![],
                vec![]
            ]
        );
        res.check_exactness(&s).unwrap();

        // cycle, simple at vertex 1: 0 → P_1 → P_2 → P_1 → P_3 → P_1
        let fx = cycle(Field::Rational);
        let s = StructuredAlgebra::from_quotient(&fx.alg);
        let res = minimal_resolution(&s, 0, 6);
        assert_eq!(
            res.shape(),
            vec![vec![0], vec![2], vec![0], vec![1], vec![0], vec![], vec![]]
        );
        res.check_exactness(&s).unwrap();
    }
}
