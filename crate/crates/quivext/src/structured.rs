//! Abstract finite-dimensional algebras presented by structure constants.
//!
//! Both the bound quiver algebra and its infinitesimal deformation are fed to
//! the homological engine in this shape: a labeled basis, sparse structure
//! constants, a complete set of orthogonal idempotents (the frame), a basis of
//! the radical, and a multiplicative generating set used for cheap module
//! verification.

use crate::algebra::{elem_add, elem_scale, Elem, QuotientAlgebra};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone)]
pub struct StructuredAlgebra {
    pub field: Field,
    pub labels: Vec<String>,
    /// Structure constants: `sc[i][j]` is the product of basis elements i, j.
    pub sc: Vec<Vec<Elem>>,
    /// Coordinates of the unit element.
    pub one: Elem,
    /// Basis index of the idempotent e_v, per vertex.
    pub frame: Vec<usize>,
    /// Basis indices spanning the Jacobson radical.
    pub radical: Vec<usize>,
    /// Basis indices whose products (together with scalars) span the algebra.
    pub generators: Vec<usize>,
}

impl StructuredAlgebra {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Elem {
        &self.sc[i][j]
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = Vec::new();
        for (i, ca) in a {
            for (j, cb) in b {
                out = elem_add(&out, &elem_scale(&self.sc[*i][*j], &ca.mul(cb)));
            }
        }
        out
    }

    pub fn e(&self, vertex: usize) -> Elem {
        vec![(self.frame[vertex], self.field.one())]
    }

    pub fn from_quotient(alg: &QuotientAlgebra) -> StructuredAlgebra {
        let dim = alg.dim();
        let sc = (0..dim)
            .map(|i| (0..dim).map(|j| alg.mul_basis(i, j).clone()).collect())
            .collect();
        let mut generators = alg.frame.clone();
        for a in 0..alg.quiver.arrows.len() {
            let e = alg.arrow_elem(a);
            debug_assert!(e.len() == 1 && e[0].1.is_one());
            generators.push(e[0].0);
        }
        StructuredAlgebra {
            field: alg.field,
            labels: alg.basis.iter().map(|p| alg.quiver.path_name(p)).collect(),
            sc,
            one: alg.one(),
            frame: alg.frame.clone(),
            radical: alg.radical(),
            generators,
        }
    }

    /// Basis indices of the left ideal A·e_v, checking along the way that
    /// every basis element is sent to itself or to zero by right
    /// multiplication with each frame idempotent.
    pub fn projective_basis(&self, vertex: usize) -> Vec<usize> {
        let e = self.frame[vertex];
        let mut out = Vec::new();
        for x in 0..self.dim() {
            let xe = &self.sc[x][e];
            if xe.is_empty() {
                continue;
            }
            assert!(
                xe.len() == 1 && xe[0].0 == x && xe[0].1.is_one(),
                "basis element `{}` is not homogeneous for the frame",
                self.labels[x]
            );
            out.push(x);
        }
        out
    }

    /// For a basis element x, the vertex u with e_u·x = x, if any.
    pub fn source_vertex(&self, x: usize) -> Option<usize> {
        (0..self.frame.len()).find(|&u| {
            let ex = &self.sc[self.frame[u]][x];
            ex.len() == 1 && ex[0].0 == x && ex[0].1.is_one()
        })
    }

    /// Full associativity check on basis triples.
    pub fn check_associativity(&self) -> Result<()> {
        let dim = self.dim();
        for i in 0..dim {
            let a = vec![(i, self.field.one())];
            for j in 0..dim {
                let ij = self.sc[i][j].clone();
                for k in 0..dim {
                    let b = vec![(k, self.field.one())];
                    let left = self.mul(&ij, &b);
                    let right = self.mul(&a, &self.sc[j][k]);
                    if left != right {
                        return Err(Error::Input(format!(
                            "associativity fails at ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Frame sanity: orthogonal idempotents summing to the unit.
    pub fn check_frame(&self) -> Result<()> {
        let mut sum: Elem = Vec::new();
        for (u, &eu) in self.frame.iter().enumerate() {
            for (v, &ev) in self.frame.iter().enumerate() {
                let prod = &self.sc[eu][ev];
                let expected: Elem = if u == v {
                    vec![(eu, self.field.one())]
                } else {
                    Vec::new()
                };
                if prod != &expected {
                    return Err(Error::Input(format!(
                        "frame idempotents {u} and {v} are not orthogonal idempotents"
                    )));
                }
            }
            sum = elem_add(&sum, &vec![(eu, self.field.one())]);
        }
        if sum != self.one {
            return Err(Error::Input("frame does not sum to the unit".into()));
        }
        Ok(())
    }

    pub fn render(&self, a: &Elem) -> String {
        if a.is_empty() {
            return "0".into();
        }
        a.iter()
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[*i].clone()
                } else {
                    format!("{c}*{}", self.labels[*i])
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn one_scalar(&self) -> Scalar {
        self.field.one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_combo;
    use crate::quiver::Quiver;

    fn zigzag() -> QuotientAlgebra {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                ("a1".into(), "1".into(), "2".into()),
                ("a2".into(), "2".into(), "1".into()),
            ],
        )
        .unwrap();
        let rels = vec![
            parse_combo(&q, Field::Rational, "a1*a2*a1").unwrap(),
            parse_combo(&q, Field::Rational, "a2*a1*a2").unwrap(),
        ];
        QuotientAlgebra::build(q, Field::Rational, &rels, 8).unwrap()
    }

    #[test]
    fn quotient_roundtrip() {
        let alg = zigzag();
        let s = StructuredAlgebra::from_quotient(&alg);
        assert_eq!(s.dim(), 6);
        s.check_frame().unwrap();
        s.check_associativity().unwrap();
        assert_eq!(s.radical.len(), 4);
        // A e_1 = paths ending at vertex 1: e_1, a2, a1*a2
        let p1 = s.projective_basis(0);
        assert_eq!(p1.len(), 3);
        assert!(p1.contains(&s.frame[0]));
        for &x in &p1 {
            assert!(s.source_vertex(x).is_some());
        }
        assert_eq!(s.source_vertex(s.frame[1]), Some(1));
    }
}
