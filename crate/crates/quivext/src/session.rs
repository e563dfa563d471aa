//! Declarative session files: a TOML description of the field, the quiver,
//! the relations, and the cocycle, compiled into a ready-to-use algebra and
//! 2-cochain. The default length bound is twice the longest relation plus
//! two, and the default resolution degree is six.

use serde::Deserialize;

use crate::algebra::QuotientAlgebra;
use crate::error::{Error, Result};
use crate::grammar::{parse_combo, parse_path};
use crate::hochschild::Cochain2;
use crate::quiver::Quiver;
use crate::scalar::Field;

pub const DEFAULT_DEGREE: usize = 6;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionFile {
    pub field: FieldSection,
    pub quiver: QuiverSection,
    pub algebra: AlgebraSection,
    #[serde(default)]
    pub cocycle: CocycleSection,
    #[serde(default)]
    pub options: OptionsSection,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSection {
    pub kind: String,
    pub p: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSection {
    pub vertices: Vec<String>,
    pub arrows: Vec<[String; 3]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSection {
    #[serde(default)]
    pub relations: Vec<String>,
    pub length_bound: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleSection {
    /// Pattern rules: `[word, replacement]`.
    #[serde(default)]
    pub patterns: Vec<[String; 2]>,
    /// Explicit entries: `[left, right, value]`.
    #[serde(default)]
    pub entries: Vec<[String; 3]>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsSection {
    pub degree: Option<usize>,
}

/// A compiled session: the base algebra, the 2-cochain, and the resolution
/// degree.
pub struct Session {
    pub alg: QuotientAlgebra,
    pub cocycle: Cochain2,
    pub degree: usize,
}

impl Session {
    pub fn parse(text: &str) -> Result<Session> {
        let file: SessionFile =
            toml::from_str(text).map_err(|e| Error::Input(format!("session file: {e}")))?;
        Session::compile(&file)
    }

    pub fn load(path: &std::path::Path) -> Result<Session> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Session::parse(&text)
    }

    pub fn compile(file: &SessionFile) -> Result<Session> {
        let field = match file.field.kind.as_str() {
            "rational" => Field::Rational,
            "prime" => {
                let p = file
                    .field
                    .p
                    .ok_or_else(|| Error::Input("field.kind = \"prime\" needs field.p".into()))?;
                let composite = p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0);
                if composite {
                    return Err(Error::Input(format!("field.p = {p} is not prime")));
                }
                Field::Prime(p)
            }
            other => {
                return Err(Error::Input(format!(
                    "unknown field.kind `{other}` (expected \"rational\" or \"prime\")"
                )))
            }
        };
        let quiver = Quiver::new(
            file.quiver.vertices.clone(),
            file.quiver
                .arrows
                .iter()
                .map(|[n, s, t]| (n.clone(), s.clone(), t.clone()))
                .collect(),
        )?;
        let relations: Vec<_> = file
            .algebra
            .relations
            .iter()
            .map(|r| parse_combo(&quiver, field, r))
            .collect::<Result<_>>()?;
        let bound = file.algebra.length_bound.unwrap_or_else(|| {
            2 * relations
                .iter()
                .flat_map(|r| r.iter().map(|(p, _)| p.len()))
                .max()
                .unwrap_or(1)
                + 2
        });
        let alg = QuotientAlgebra::build(quiver, field, &relations, bound)?;
        let patterns: Vec<_> = file
            .cocycle
            .patterns
            .iter()
            .map(|[w, r]| {
                Ok((
                    parse_path(&alg.quiver, field, w)?,
                    parse_combo(&alg.quiver, field, r)?,
                ))
            })
            .collect::<Result<_>>()?;
        let entries: Vec<_> = file
            .cocycle
            .entries
            .iter()
            .map(|[a, b, v]| {
                Ok((
                    (
                        parse_path(&alg.quiver, field, a)?,
                        parse_path(&alg.quiver, field, b)?,
                    ),
                    parse_combo(&alg.quiver, field, v)?,
                ))
            })
            .collect::<Result<_>>()?;
        let cocycle = Cochain2::materialize(&alg, &patterns, &entries)?;
        Ok(Session {
            alg,
            cocycle,
            degree: file.options.degree.unwrap_or(DEFAULT_DEGREE),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const TWO_ROUTES: &str = r#"
[field]
kind = "rational"

[quiver]
vertices = ["1", "2", "3", "4"]
arrows = [["a1", "1", "2"], ["a2", "2", "4"], ["a3", "1", "3"], ["a4", "3", "4"]]

[algebra]
relations = ["a1*a2"]

[cocycle]
patterns = [["a1*a2", "a3*a4"]]
"#;

    #[test]
    fn parse_and_compile() {
        let s = Session::parse(TWO_ROUTES).unwrap();
        assert_eq!(s.degree, DEFAULT_DEGREE);
        let fx = fixtures::two_routes(Field::Rational);
        assert_eq!(s.alg.dim(), fx.alg.dim());
        assert!(s.cocycle.check_cocycle(&s.alg).pass());
    }

    #[test]
    fn bad_inputs_are_input_errors() {
        assert!(matches!(
            Session::parse("[field]\nkind = \"septic\"\n")
                .err()
                .unwrap(),
            Error::Input(_)
        ));
        assert!(matches!(
            Session::parse(
                "[field]\nkind = \"prime\"\np = 6\n\n[quiver]\nvertices = [\"1\"]\narrows = []\n\n[algebra]\n"
            )
            .err().unwrap(),
            Error::Input(_)
        ));
        let bad_rel = TWO_ROUTES.replace("a1*a2\"]\n\n[cocycle]", "a1*zz\"]\n\n[cocycle]");
        assert!(Session::parse(&bad_rel).is_err());
    }
}
