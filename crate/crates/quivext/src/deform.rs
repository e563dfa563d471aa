//! The infinitesimal deformation A_f = A ⊕ At with multiplication
//! (a0 + a1t)(b0 + b1t) = a0b0 + (a0b1 + a1b0 + f(a0, b0))t,
//! the tuple description of its modules, and realizations back into plain
//! representations so the homological engine can run over A_f unchanged.
//!
//! A tuple module (M0, M1, T, f_M) realizes on M0 ⊕ M1 via
//! (a0 + a1t)·(m0, m1) = (a0m0, a0m1 + a1·T(m0) + f_M(a0 ⊗ m0)), and a
//! morphism (u0, u1, u2) realizes as the block matrix [[u0, 0], [u1, u2]].

use crate::algebra::{Elem, QuotientAlgebra};
use crate::engine::{ProjTerm, Representation};
use crate::error::{Error, Result};
use crate::hochschild::Cochain2;
use crate::linalg::Mat;
use crate::structured::StructuredAlgebra;

/// Basis of A_f: the A-basis first, then the same basis tensored with t.
pub fn build_deformed(alg: &QuotientAlgebra, f: &Cochain2) -> StructuredAlgebra {
    let d = alg.dim();
    let field = alg.field;
    let shift = |e: &Elem| -> Elem { e.iter().map(|(i, c)| (i + d, c.clone())).collect() };

    let mut sc = vec![vec![Vec::new(); 2 * d]; 2 * d];
    for i in 0..d {
        for j in 0..d {
            let base = alg.mul_basis(i, j);
            let mut prod = base.clone();
            prod.extend(shift(&f.table[i][j]));
            sc[i][j] = prod;
            sc[i][j + d] = shift(base);
            sc[i + d][j] = shift(base);
        }
    }

    let mut labels: Vec<String> = alg.basis.iter().map(|p| alg.quiver.path_name(p)).collect();
    labels.extend(
        alg.basis
            .iter()
            .map(|p| format!("{}*t", alg.quiver.path_name(p))),
    );

    let mut radical = alg.radical();
    radical.extend(d..2 * d);

    let mut generators = alg.frame.clone();
    for a in 0..alg.quiver.arrows.len() {
        generators.push(alg.arrow_elem(a)[0].0);
    }
    generators.extend(alg.frame.iter().map(|&e| e + d));

    StructuredAlgebra {
        field,
        labels,
        sc,
        one: alg.one(),
        frame: alg.frame.clone(),
        radical,
        generators,
    }
}

/// A module over A_f in tuple form: A-modules M0, M1, an A-monomorphism
/// T: M0 → M1, and a bilinear map f_M: A ⊗ M0 → M1 (one matrix per A-basis
/// element) compatible with the cocycle.
#[derive(Debug, Clone)]
pub struct TupleModule {
    pub m0: Representation,
    pub m1: Representation,
    pub t_map: Mat,
    pub f_m: Vec<Mat>,
}

impl TupleModule {
    /// Full verification: M0, M1 are modules, T is an A-linear monomorphism,
    /// and a·f_M(b⊗m) − f_M(ab⊗m) + f_M(a⊗bm) − f(a⊗b)·T(m) = 0 on basis
    /// pairs (a, b).
    pub fn verify(
        &self,
        base: &StructuredAlgebra,
        alg: &QuotientAlgebra,
        f: &Cochain2,
    ) -> Result<()> {
        self.m0.verify(base)?;
        self.m1.verify(base)?;
        if self.t_map.rows != self.m1.dim || self.t_map.cols != self.m0.dim {
            return Err(Error::NotAModule("T has the wrong shape".into()));
        }
        if self.t_map.rank() != self.m0.dim {
            return Err(Error::NotAModule("T is not injective".into()));
        }
        for a in 0..base.dim() {
            let lhs = self.t_map.mul(&self.m0.action[a]);
            let rhs = self.m1.action[a].mul(&self.t_map);
            if lhs != rhs {
                return Err(Error::NotAModule(format!(
                    "T does not commute with `{}`",
                    base.labels[a]
                )));
            }
        }
        if self.f_m.len() != base.dim() {
            return Err(Error::NotAModule("one f_M matrix per basis element".into()));
        }
        for a in 0..base.dim() {
            for b in 0..base.dim() {
                // a·f_M(b ⊗ −)
                let mut res = self.m1.action[a].mul(&self.f_m[b]);
                // − f_M(ab ⊗ −)
                for (k, c) in alg.mul_basis(a, b) {
                    res = res.sub(&self.f_m[*k].scale(c));
                }
                // + f_M(a ⊗ b·−)
                res = res.add(&self.f_m[a].mul(&self.m0.action[b]));
                // − f(a ⊗ b)·T
                let fab = self.m1.act(base, &f.table[a][b]);
                res = res.sub(&fab.mul(&self.t_map));
                if !res.is_zero() {
                    return Err(Error::NotAModule(format!(
                        "cocycle compatibility fails at ({}, {})",
                        base.labels[a], base.labels[b]
                    )));
                }
            }
        }
        Ok(())
    }

    /// The plain representation over A_f on M0 ⊕ M1.
    pub fn realize(&self, base: &StructuredAlgebra) -> Representation {
        let d = base.dim();
        let dim = self.m0.dim + self.m1.dim;
        let mut action = Vec::with_capacity(2 * d);
        for b in 0..d {
            let mut m = Mat::zeros(base.field, dim, dim);
            m.set_block(0, 0, &self.m0.action[b]);
            m.set_block(self.m0.dim, 0, &self.f_m[b]);
            m.set_block(self.m0.dim, self.m0.dim, &self.m1.action[b]);
            action.push(m);
        }
        for b in 0..d {
            let mut m = Mat::zeros(base.field, dim, dim);
            m.set_block(self.m0.dim, 0, &self.m1.action[b].mul(&self.t_map));
            action.push(m);
        }
        Representation { dim, action }
    }
}

/// The deformed indecomposable projective P̂_v = (P_v, P_v, Id, f_P) with
/// f_P(a ⊗ x) = f(a ⊗ x)·e_v on P_v = A·e_v.
pub fn hat_projective(
    base: &StructuredAlgebra,
    alg: &QuotientAlgebra,
    f: &Cochain2,
    v: usize,
) -> TupleModule {
    let term = ProjTerm::new(base, vec![v]);
    let xs = &term.slot_basis[0];
    let pos: std::collections::HashMap<usize, usize> =
        xs.iter().enumerate().map(|(k, &x)| (x, k)).collect();
    let dim = xs.len();
    let mut f_m = Vec::with_capacity(base.dim());
    for a in 0..base.dim() {
        let mut m = Mat::zeros(base.field, dim, dim);
        for (k, &x) in xs.iter().enumerate() {
            // f(a ⊗ x)·e_v stays inside A·e_v
            let val = alg.mul(&f.table[a][x], &alg.e(v));
            for (y, c) in &val {
                m.set(pos[y], k, c.clone());
            }
        }
        f_m.push(m);
    }
    TupleModule {
        m0: term.rep.clone(),
        m1: term.rep,
        t_map: Mat::identity(base.field, dim),
        f_m,
    }
}

/// The simple A_f-module S_v in tuple form, (0, S_v, 0, 0).
pub fn simple_tuple(base: &StructuredAlgebra, v: usize) -> TupleModule {
    let d = base.dim();
    let mut action = Vec::with_capacity(d);
    for b in 0..d {
        let mut m = Mat::zeros(base.field, 1, 1);
        if b == base.frame[v] {
            m.set(0, 0, base.field.one());
        }
        action.push(m);
    }
    TupleModule {
        m0: Representation {
            dim: 0,
            action: vec![Mat::zeros(base.field, 0, 0); d],
        },
        m1: Representation { dim: 1, action },
        t_map: Mat::zeros(base.field, 1, 0),
        f_m: vec![Mat::zeros(base.field, 1, 0); d],
    }
}

/// A morphism of tuple modules.
#[derive(Debug, Clone)]
pub struct TupleMorphism {
    pub u0: Mat,
    pub u1: Mat,
    pub u2: Mat,
}

impl TupleMorphism {
    /// Check A-linearity of u0 and u2, the square u2·T_M = T_N·u0, and the
    /// compatibility u1(a·m) = a·u1(m) − u2(f_M(a⊗m)) + f_N(a⊗u0(m)).
    pub fn verify(
        &self,
        base: &StructuredAlgebra,
        src: &TupleModule,
        tgt: &TupleModule,
    ) -> Result<()> {
        for a in 0..base.dim() {
            if self.u0.mul(&src.m0.action[a]) != tgt.m0.action[a].mul(&self.u0) {
                return Err(Error::NotAMorphism(format!(
                    "u0 is not A-linear at `{}`",
                    base.labels[a]
                )));
            }
            if self.u2.mul(&src.m1.action[a]) != tgt.m1.action[a].mul(&self.u2) {
                return Err(Error::NotAMorphism(format!(
                    "u2 is not A-linear at `{}`",
                    base.labels[a]
                )));
            }
        }
        if self.u2.mul(&src.t_map) != tgt.t_map.mul(&self.u0) {
            return Err(Error::NotAMorphism("square with T does not commute".into()));
        }
        for a in 0..base.dim() {
            let lhs = self.u1.mul(&src.m0.action[a]);
            let rhs = tgt.m1.action[a]
                .mul(&self.u1)
                .sub(&self.u2.mul(&src.f_m[a]))
                .add(&tgt.f_m[a].mul(&self.u0));
            if lhs != rhs {
                return Err(Error::NotAMorphism(format!(
                    "u1 compatibility fails at `{}`",
                    base.labels[a]
                )));
            }
        }
        Ok(())
    }

    pub fn realize(&self, src: &TupleModule, tgt: &TupleModule) -> Mat {
        let field = self.u0.field;
        let mut m = Mat::zeros(field, tgt.m0.dim + tgt.m1.dim, src.m0.dim + src.m1.dim);
        m.set_block(0, 0, &self.u0);
        m.set_block(tgt.m0.dim, 0, &self.u1);
        m.set_block(tgt.m0.dim, src.m0.dim, &self.u2);
        m
    }
}

/// Basis of Hom_{A_f}(P̂_i, P̂_j): for each path b in e_iAe_j the morphism
/// (·b, f(−⊗b)e_j, ·b), and for each path c the morphism (0, ·c, 0).
pub fn hom_hat_basis(
    base: &StructuredAlgebra,
    alg: &QuotientAlgebra,
    f: &Cochain2,
    i: usize,
    j: usize,
) -> Vec<TupleMorphism> {
    let pi = ProjTerm::new(base, vec![i]);
    let pj = ProjTerm::new(base, vec![j]);
    let xs = &pi.slot_basis[0];
    let ys = &pj.slot_basis[0];
    let pos: std::collections::HashMap<usize, usize> =
        ys.iter().enumerate().map(|(k, &y)| (y, k)).collect();

    let right_mult = |b: usize| -> Mat {
        let mut m = Mat::zeros(base.field, ys.len(), xs.len());
        for (k, &x) in xs.iter().enumerate() {
            for (y, c) in alg.mul_basis(x, b) {
                m.set(pos[y], k, c.clone());
            }
        }
        m
    };

    let mut out = Vec::new();
    for b in alg.hom_basis(i, j) {
        let mut u1 = Mat::zeros(base.field, ys.len(), xs.len());
        for (k, &x) in xs.iter().enumerate() {
            let val = alg.mul(&f.table[x][b], &alg.e(j));
            for (y, c) in &val {
                u1.set(pos[y], k, c.clone());
            }
        }
        let u = right_mult(b);
        out.push(TupleMorphism {
            u0: u.clone(),
            u1,
            u2: u,
        });
    }
    for c in alg.hom_basis(i, j) {
        out.push(TupleMorphism {
            u0: Mat::zeros(base.field, ys.len(), xs.len()),
            u1: right_mult(c),
            u2: Mat::zeros(base.field, ys.len(), xs.len()),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine;
    use crate::grammar::{parse_combo, parse_path};
    use crate::quiver::Quiver;
    use crate::scalar::Field;

    fn loop_setup(r: usize) -> (QuotientAlgebra, StructuredAlgebra, Cochain2) {
        let q = Quiver::new(vec!["1".into()], vec![("a".into(), "1".into(), "1".into())]).unwrap();
        let rel = ["a*a*a", "a*a*a*a", "a*a*a*a*a"][r - 3].to_string();
        let rels = vec![parse_combo(&q, Field::Rational, &rel).unwrap()];
        let alg = QuotientAlgebra::build(q, Field::Rational, &rels, 2 * r + 2).unwrap();
        let w = parse_path(&alg.quiver, alg.field, &rel).unwrap();
        let e = parse_combo(&alg.quiver, alg.field, "e_1").unwrap();
        let fq = Cochain2::materialize(&alg, &[(w, e)], &[]).unwrap();
        let base = StructuredAlgebra::from_quotient(&alg);
        (alg, base, fq)
    }

    #[test]
    fn deformed_loop_is_truncated_polynomial() {
        for r in [3usize, 4, 5] {
            let (alg, _, fq) = loop_setup(r);
            let af = build_deformed(&alg, &fq);
            assert_eq!(af.dim(), 2 * r);
            af.check_frame().unwrap();
            af.check_associativity().unwrap();
            // (a, 0) generates A_f with minimal polynomial of degree 2r
            let a: Elem = vec![(alg.arrow_elem(0)[0].0, af.field.one())];
            let mut pow = af.one.clone();
            for k in 1..=2 * r {
                pow = af.mul(&pow, &a);
                assert_eq!(pow.is_empty(), k >= 2 * r, "power {k} over r={r}");
            }
        }
    }

    #[test]
    fn non_cocycle_breaks_associativity() {
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            vec![
                ("a1".into(), "1".into(), "2".into()),
                ("a2".into(), "2".into(), "4".into()),
                ("a3".into(), "1".into(), "3".into()),
                ("a4".into(), "3".into(), "4".into()),
            ],
        )
        .unwrap();
        let rels = vec![parse_combo(&q, Field::Rational, "a1*a2").unwrap()];
        let alg = QuotientAlgebra::build(q, Field::Rational, &rels, 6).unwrap();
        let p = parse_path(&alg.quiver, alg.field, "a1").unwrap();
        let s = parse_path(&alg.quiver, alg.field, "a2").unwrap();
        let v = parse_combo(&alg.quiver, alg.field, "e_4").unwrap();
        let f = Cochain2::materialize(&alg, &[], &[((p, s), v)]).unwrap();
        assert!(!f.check_cocycle(&alg).pass());
        let af = build_deformed(&alg, &f);
        assert!(af.check_associativity().is_err());
    }

    #[test]
    fn hat_projective_realizes_to_engine_projective() {
        let (alg, base, fq) = loop_setup(3);
        let af = build_deformed(&alg, &fq);
        let hat = hat_projective(&base, &alg, &fq, 0);
        hat.verify(&base, &alg, &fq).unwrap();
        let realized = hat.realize(&base);
        realized.verify(&af).unwrap();
        let term = ProjTerm::new(&af, vec![0]);
        assert_eq!(realized.dim, term.dim());
        for b in 0..af.dim() {
            assert_eq!(realized.action[b], term.rep.action[b], "basis {b}");
        }
    }

    #[test]
    fn corrupt_tuple_rejected() {
        let (alg, base, fq) = loop_setup(3);
        let mut hat = hat_projective(&base, &alg, &fq, 0);
        hat.f_m[alg.frame[0]] = Mat::identity(base.field, hat.m0.dim);
        assert!(hat.verify(&base, &alg, &fq).is_err());
        let mut hat2 = hat_projective(&base, &alg, &fq, 0);
        hat2.t_map = Mat::zeros(base.field, hat2.m1.dim, hat2.m0.dim);
        assert!(hat2.verify(&base, &alg, &fq).is_err());
    }

    #[test]
    fn simple_tuple_realizes() {
        let (alg, base, fq) = loop_setup(4);
        let af = build_deformed(&alg, &fq);
        let s = simple_tuple(&base, 0);
        s.verify(&base, &alg, &fq).unwrap();
        let r = s.realize(&base);
        assert_eq!(r.dim, 1);
        r.verify(&af).unwrap();
    }

    #[test]
    fn hom_basis_between_hats() {
        let (alg, base, fq) = loop_setup(3);
        let af = build_deformed(&alg, &fq);
        let hat = hat_projective(&base, &alg, &fq, 0);
        let morphisms = hom_hat_basis(&base, &alg, &fq, 0, 0);
        assert_eq!(morphisms.len(), 2 * alg.hom_basis(0, 0).len());
        let realized_src = hat.realize(&base);
        let mut flat = Vec::new();
        for m in &morphisms {
            m.verify(&base, &hat, &hat).unwrap();
            let rm = m.realize(&hat, &hat);
            // realized morphisms commute with the full A_f action
            for b in 0..af.dim() {
                assert_eq!(
                    rm.mul(&realized_src.action[b]),
                    realized_src.action[b].mul(&rm)
                );
            }
            flat.push(
                (0..rm.rows * rm.cols)
                    .map(|k| rm.get(k / rm.cols, k % rm.cols).clone())
                    .collect::<Vec<_>>(),
            );
        }
        // linearly independent, and exactly the intertwiner dimension
        let m = Mat::from_columns(af.field, flat[0].len(), &flat);
        assert_eq!(m.rank(), morphisms.len());
        assert_eq!(
            engine::hom_dim(&af, &realized_src, &realized_src),
            morphisms.len()
        );
    }
}
