//! Finite-dimensional quotients of path algebras and exact arithmetic in them.
//!
//! The quotient is built by linear completion: all products `p * g * q` of a
//! relation generator `g` with paths on both sides, truncated at a length
//! bound, are reduced to row echelon form with longer-then-lex-larger paths
//! as leading terms. Non-pivot paths form the normal-form basis. The build
//! certifies finite dimensionality by demanding that every path of exactly
//! the bound length reduces to strictly shorter ones; normal forms of longer
//! words then follow by splitting and recursing.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::grammar::PathCombo;
use crate::linalg::Mat;
use crate::quiver::{compose_paths, Path, Quiver};
use crate::scalar::{Field, Scalar};

/// An element of the quotient, as a sorted sparse combination of basis paths.
pub type Elem = Vec<(usize, Scalar)>;

pub fn elem_add(a: &Elem, b: &Elem) -> Elem {
    let mut acc: BTreeMap<usize, Scalar> = a.iter().cloned().collect();
    for (i, c) in b {
        match acc.remove(i) {
            Some(v) => {
                let s = v.add(c);
                if !s.is_zero() {
                    acc.insert(*i, s);
                }
            }
            None => {
                acc.insert(*i, c.clone());
            }
        }
    }
    acc.into_iter().collect()
}

pub fn elem_scale(a: &Elem, s: &Scalar) -> Elem {
    if s.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, c)| (*i, c.mul(s))).collect()
}

pub fn elem_sub(a: &Elem, b: &Elem) -> Elem {
    let negb: Elem = b.iter().map(|(i, c)| (*i, c.neg())).collect();
    elem_add(a, &negb)
}

#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    pub quiver: Quiver,
    pub field: Field,
    /// Truncation bound used for the completion; certified basis paths are
    /// strictly shorter.
    pub bound: usize,
    /// Normal-form basis, in length-then-lex order.
    pub basis: Vec<Path>,
    /// Basis index of each stationary path, per vertex.
    pub frame: Vec<usize>,
    path_index: HashMap<Path, usize>,
    reduce: Vec<Elem>,
    sc: Vec<Vec<Elem>>,
}

impl QuotientAlgebra {
    /// Build `kQ / <relations>` with the given truncation bound.
    pub fn build(
        quiver: Quiver,
        field: Field,
        relations: &[PathCombo],
        bound: usize,
    ) -> Result<QuotientAlgebra> {
        for rel in relations {
            if rel.is_empty() {
                return Err(Error::Input("zero relation generator".into()));
            }
            let (s, t) = (rel[0].0.source, rel[0].0.target);
            for (p, _) in rel {
                if (p.source, p.target) != (s, t) {
                    return Err(Error::NonParallelRelation(format!(
                        "terms run {} -> {} and {} -> {}",
                        quiver.vertices[s],
                        quiver.vertices[t],
                        quiver.vertices[p.source],
                        quiver.vertices[p.target]
                    )));
                }
                if p.len() < 2 {
                    return Err(Error::Input(format!(
                        "relation term `{}` is shorter than two arrows",
                        quiver.path_name(p)
                    )));
                }
            }
        }

        let paths = quiver.enumerate_paths(bound);
        let n = paths.len();
        let path_index: HashMap<Path, usize> = paths
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();

        // Span of p * g * q inside the length-truncated path space. Columns in
        // descending path order so RREF pivots are the largest terms.
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for g in relations {
            let g_max = g.iter().map(|(p, _)| p.len()).max().unwrap();
            let (gs, gt) = (g[0].0.source, g[0].0.target);
            for p in &paths {
                if p.target != gs || p.len() + g_max > bound {
                    continue;
                }
                for q in &paths {
                    if q.source != gt || p.len() + g_max + q.len() > bound {
                        continue;
                    }
                    let mut row = vec![field.zero(); n];
                    for (w, c) in g {
                        let pw = compose_paths(p, w).unwrap();
                        let pwq = compose_paths(&pw, q).unwrap();
                        let col = n - 1 - path_index[&pwq];
                        row[col] = row[col].add(c);
                    }
                    rows.push(row);
                }
            }
        }
        let mut span = Mat::zeros(field, rows.len(), n);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    span.set(i, j, v.clone());
                }
            }
        }
        let pivots = span.rref();

        let mut basis_of_path: Vec<Option<usize>> = vec![None; n];
        let pivot_of_path: HashMap<usize, usize> = pivots
            .iter()
            .enumerate()
            .map(|(r, &c)| (n - 1 - c, r))
            .collect();
        let mut basis = Vec::new();
        for (i, p) in paths.iter().enumerate() {
            if !pivot_of_path.contains_key(&i) {
                if p.len() == bound {
                    return Err(Error::FinitenessNotCertified(bound, quiver.path_name(p)));
                }
                basis_of_path[i] = Some(basis.len());
                basis.push(p.clone());
            }
        }

        let mut reduce: Vec<Elem> = vec![Vec::new(); n];
        for (i, _) in paths.iter().enumerate() {
            if let Some(b) = basis_of_path[i] {
                reduce[i] = vec![(b, field.one())];
            } else {
                let r = pivot_of_path[&i];
                let mut e = Vec::new();
                for c in 0..n {
                    let v = span.get(r, c);
                    if c != n - 1 - i && !v.is_zero() {
                        let b =
                            basis_of_path[n - 1 - c].expect("rref row tail touches a pivot column");
                        e.push((b, v.neg()));
                    }
                }
                e.sort_by_key(|(b, _)| *b);
                reduce[i] = e;
            }
        }

        let frame = (0..quiver.vertices.len())
            .map(|v| basis_of_path[path_index[&quiver.stationary(v)]].unwrap())
            .collect();

        let mut alg = QuotientAlgebra {
            quiver,
            field,
            bound,
            basis,
            frame,
            path_index,
            reduce,
            sc: Vec::new(),
        };
        let dim = alg.basis.len();
        let mut sc = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut row = Vec::with_capacity(dim);
            for j in 0..dim {
                row.push(match compose_paths(&alg.basis[i], &alg.basis[j]) {
                    Some(p) => alg.nf_path(&p),
                    None => Vec::new(),
                });
            }
            sc.push(row);
        }
        alg.sc = sc;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Normal form of an arbitrary free path.
    pub fn nf_path(&self, p: &Path) -> Elem {
        if p.len() <= self.bound {
            return self.reduce[self.path_index[&p.clone()]].clone();
        }
        let cut = self.bound;
        let mid = self.quiver.arrows[p.arrows[cut - 1]].target;
        let u = Path {
            source: p.source,
            target: mid,
            arrows: p.arrows[..cut].to_vec(),
        };
        let v = Path {
            source: mid,
            target: p.target,
            arrows: p.arrows[cut..].to_vec(),
        };
        let mut out = Vec::new();
        for (b, c) in &self.reduce[self.path_index[&u]] {
            let bv = compose_paths(&self.basis[*b], &v).unwrap();
            out = elem_add(&out, &elem_scale(&self.nf_path(&bv), c));
        }
        out
    }

    pub fn nf_combo(&self, combo: &PathCombo) -> Elem {
        let mut out = Vec::new();
        for (p, c) in combo {
            out = elem_add(&out, &elem_scale(&self.nf_path(p), c));
        }
        out
    }

    pub fn e(&self, vertex: usize) -> Elem {
        vec![(self.frame[vertex], self.field.one())]
    }

    pub fn one(&self) -> Elem {
        self.frame.iter().map(|&b| (b, self.field.one())).collect()
    }

    pub fn arrow_elem(&self, arrow: usize) -> Elem {
        self.nf_path(&self.quiver.arrow_path(arrow))
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

    /// Basis indices of paths lying in e_i A e_j (source i, target j).
    pub fn hom_basis(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.basis[b].source == i && self.basis[b].target == j)
            .collect()
    }

    /// Basis indices spanning the arrow radical (non-stationary basis paths).
    pub fn radical(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| !self.basis[b].is_stationary())
            .collect()
    }

    pub fn render(&self, a: &Elem) -> String {
        let combo: PathCombo = a
            .iter()
            .map(|(b, c)| (self.basis[*b].clone(), c.clone()))
            .collect();
        crate::grammar::render_combo(&self.quiver, &combo)
    }
}

/// A matrix with entries in the algebra, framed by vertex lists: the (r, c)
/// entry must lie in e_{row_frame[r]} A e_{col_frame[c]}.
#[derive(Debug, Clone)]
pub struct MatrixOverA {
    pub row_frame: Vec<usize>,
    pub col_frame: Vec<usize>,
    pub entries: Vec<Elem>,
}

impl MatrixOverA {
    pub fn zeros(row_frame: Vec<usize>, col_frame: Vec<usize>) -> MatrixOverA {
        let entries = vec![Vec::new(); row_frame.len() * col_frame.len()];
        MatrixOverA {
            row_frame,
            col_frame,
            entries,
        }
    }

    pub fn identity(alg: &QuotientAlgebra, frame: Vec<usize>) -> MatrixOverA {
        let mut m = MatrixOverA::zeros(frame.clone(), frame.clone());
        for (i, &v) in frame.iter().enumerate() {
            m.set(i, i, alg.e(v));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.row_frame.len()
    }

    pub fn cols(&self) -> usize {
        self.col_frame.len()
    }

    pub fn get(&self, r: usize, c: usize) -> &Elem {
        &self.entries[r * self.cols() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, e: Elem) {
        let cols = self.cols();
        self.entries[r * cols + c] = e;
    }

    /// Check every entry sits in its frame component.
    pub fn check_frames(&self, alg: &QuotientAlgebra) -> Result<()> {
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                for (b, _) in self.get(r, c) {
                    let p = &alg.basis[*b];
                    if p.source != self.row_frame[r] || p.target != self.col_frame[c] {
                        return Err(Error::DimensionMismatch(format!(
                            "entry ({r}, {c}) leaves its frame component"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &MatrixOverA) -> MatrixOverA {
        assert_eq!(self.row_frame, other.row_frame);
        assert_eq!(self.col_frame, other.col_frame);
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(other.entries.iter()) {
            *a = elem_add(a, b);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> MatrixOverA {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = elem_scale(a, s);
        }
        out
    }

    pub fn mul(&self, alg: &QuotientAlgebra, other: &MatrixOverA) -> MatrixOverA {
        assert_eq!(
            self.col_frame, other.row_frame,
            "frame mismatch in matrix product"
        );
        let mut out = MatrixOverA::zeros(self.row_frame.clone(), other.col_frame.clone());
        for r in 0..self.rows() {
            for c in 0..other.cols() {
                let mut acc = Vec::new();
                for k in 0..self.cols() {
                    acc = elem_add(&acc, &alg.mul(self.get(r, k), other.get(k, c)));
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_combo;
    use proptest::prelude::*;

    fn build_from(
        vertices: &[&str],
        arrows: &[(&str, &str, &str)],
        rels: &[&str],
        bound: usize,
    ) -> QuotientAlgebra {
        let q = Quiver::new(
            vertices.iter().map(|s| s.to_string()).collect(),
            arrows
                .iter()
                .map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string()))
                .collect(),
        )
        .unwrap();
        let combos: Vec<_> = rels
            .iter()
            .map(|r| parse_combo(&q, Field::Rational, r).unwrap())
            .collect();
        QuotientAlgebra::build(q, Field::Rational, &combos, bound).unwrap()
    }

    fn square_commutative() -> QuotientAlgebra {
        // k[x, y] / (x^2, y^2, xy - yx), dimension 4
        build_from(
            &["1"],
            &[("x", "1", "1"), ("y", "1", "1")],
            &["x*x", "y*y", "x*y - y*x"],
            6,
        )
    }

    #[test]
    fn two_routes_one_killed() {
        let a = build_from(
            &["1", "2", "3", "4"],
            &[
                ("a1", "1", "2"),
                ("a2", "2", "4"),
                ("a3", "1", "3"),
                ("a4", "3", "4"),
            ],
            &["a1*a2"],
            6,
        );
        assert_eq!(a.dim(), 9);
        let x = a.nf_combo(&parse_combo(&a.quiver, a.field, "a1*a2").unwrap());
        assert!(x.is_empty());
        let y = a.nf_combo(&parse_combo(&a.quiver, a.field, "a3*a4").unwrap());
        assert_eq!(y.len(), 1);
    }

    #[test]
    fn truncated_polynomial_loop() {
        for r in [3usize, 4, 5] {
            let rel = vec!["a*a*a", "a*a*a*a", "a*a*a*a*a"][r - 3];
            let a = build_from(&["1"], &[("a", "1", "1")], &[rel], 2 * r + 2);
            assert_eq!(a.dim(), r);
            // powers multiply by exponent addition, truncated at r
            let gen = a.arrow_elem(0);
            let mut pow = a.one();
            for k in 1..=r {
                pow = a.mul(&pow, &gen);
                assert_eq!(pow.is_empty(), k >= r);
            }
        }
    }

    #[test]
    fn zigzag_two_vertices() {
        let a = build_from(
            &["1", "2"],
            &[("a1", "1", "2"), ("a2", "2", "1")],
            &["a1*a2*a1", "a2*a1*a2"],
            8,
        );
        assert_eq!(a.dim(), 6);
        assert_eq!(a.hom_basis(0, 0).len(), 2); // e_1, a1*a2
        assert_eq!(a.hom_basis(0, 1).len(), 1); // a1
        assert_eq!(a.radical().len(), 4);
    }

    #[test]
    fn commutative_square_oracle() {
        let a = square_commutative();
        assert_eq!(a.dim(), 4);
        let x = a.arrow_elem(0);
        let y = a.arrow_elem(1);
        assert_eq!(a.mul(&x, &y), a.mul(&y, &x));
        // (x + y)^2 = 2xy
        let s = elem_add(&x, &y);
        let sq = a.mul(&s, &s);
        assert_eq!(sq, elem_scale(&a.mul(&x, &y), &a.field.from_i64(2)));
    }

    #[test]
    fn infinite_dimension_detected() {
        let q = Quiver::new(vec!["1".into()], vec![("a".into(), "1".into(), "1".into())]).unwrap();
        let err = QuotientAlgebra::build(q, Field::Rational, &[], 3).unwrap_err();
        assert!(matches!(err, Error::FinitenessNotCertified(3, _)));
    }

    #[test]
    fn long_word_reduction() {
        // words far beyond the bound reduce consistently with repeated products
        let a = square_commutative();
        let q = a.quiver.clone();
        let long = parse_combo(&q, a.field, "x*y*x*y*x*y*x*y").unwrap();
        assert!(a.nf_combo(&long).is_empty());
        let xy = parse_combo(&q, a.field, "x*y").unwrap();
        let xy = a.nf_combo(&xy);
        assert!(a.mul(&xy, &xy).is_empty());
    }

    #[test]
    fn matrix_frames_and_product() {
        let a = build_from(
            &["1", "2"],
            &[("a1", "1", "2"), ("a2", "2", "1")],
            &["a1*a2*a1", "a2*a1*a2"],
            8,
        );
        let mut m = MatrixOverA::zeros(vec![0], vec![1]);
        m.set(0, 0, a.arrow_elem(0));
        m.check_frames(&a).unwrap();
        let mut n = MatrixOverA::zeros(vec![1], vec![0]);
        n.set(0, 0, a.arrow_elem(1));
        let prod = m.mul(&a, &n);
        prod.check_frames(&a).unwrap();
        assert_eq!(a.render(prod.get(0, 0)), "a1*a2");

        let id = MatrixOverA::identity(&a, vec![0, 1]);
        let mut w = MatrixOverA::zeros(vec![0, 1], vec![0, 1]);
        w.set(0, 1, a.arrow_elem(0));
        w.set(1, 0, a.arrow_elem(1));
        assert_eq!(w.mul(&a, &id).entries, w.entries);
        let mut bad = MatrixOverA::zeros(vec![0], vec![0]);
        bad.set(0, 0, a.arrow_elem(0));
        assert!(bad.check_frames(&a).is_err());
    }

    proptest! {
        #[test]
        fn associativity(i in 0usize..6, j in 0usize..6, k in 0usize..6) {
            let a = build_from(
                &["1", "2"],
                &[("a1", "1", "2"), ("a2", "2", "1")],
                &["a1*a2*a1", "a2*a1*a2"],
                8,
            );
            let x = vec![(i, a.field.one())];
            let y = vec![(j, a.field.from_i64(2))];
            let z = vec![(k, a.field.from_i64(-3))];
            prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
        }
    }
}
