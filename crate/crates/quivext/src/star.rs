//! The structured route to a minimal projective resolution over the
//! deformation.
//!
//! A minimal resolution of a simple over the base algebra is written with
//! matrices B_i over A (differential = right multiplication). When the
//! composite of the augmentation with the first-order correction map vanishes
//! on the second syzygy — the `check_star` test — correction matrices C_i can
//! be solved degree by degree, producing twisting maps α_i with
//! α_i(x) = (−1)^{i+1}(f̃([x] ⊗ B_i)·E_{i−1} − [x]·C_i). The deformed
//! resolution then has degree-m term ⊕_{i≤m} Q̂_i, with the differential built
//! from the base differentials on both halves of each Q̂ and from signed
//! identity and α blocks feeding the plain half into the t half.

use crate::algebra::{elem_sub, Elem, MatrixOverA, QuotientAlgebra};
use crate::engine::{solve_in_corner, ProjTerm, Resolution};
use crate::error::{Error, Result};
use crate::hochschild::Cochain2;
use crate::linalg::Mat;
use crate::scalar::Scalar;
use crate::structured::StructuredAlgebra;

/// Read the slot-t component of a realized vector in `term` as an algebra
/// element.
fn slot_elem(term: &ProjTerm, v: &[Scalar], t: usize) -> Elem {
    term.slot_basis[t]
        .iter()
        .enumerate()
        .filter_map(|(k, &x)| {
            let c = &v[term.offsets[t] + k];
            if c.is_zero() {
                None
            } else {
                Some((x, c.clone()))
            }
        })
        .collect()
}

/// Add an algebra element into the slot-t coordinates of a realized vector.
fn add_slot(term: &ProjTerm, t: usize, e: &Elem, out: &mut [Scalar]) {
    for (x, c) in e {
        let k = term.slot_basis[t]
            .iter()
            .position(|&y| y == *x)
            .expect("component outside the slot's projective");
        out[term.offsets[t] + k] = out[term.offsets[t] + k].add(c);
    }
}

/// The matrix over A carrying the differential d_i of a minimal resolution:
/// entry (s, t) is the slot-t component of the image of the slot-s generator.
pub fn extract_b(res: &Resolution, i: usize) -> MatrixOverA {
    let src = &res.terms[i];
    let tgt = &res.terms[i - 1];
    let d = &res.diffs[i - 1];
    let mut out = MatrixOverA::zeros(src.slots.clone(), tgt.slots.clone());
    for (s, &g) in src.gens.iter().enumerate() {
        let col = d.column(g);
        for t in 0..tgt.slots.len() {
            out.set(s, t, slot_elem(tgt, &col, t));
        }
    }
    out
}

/// Realize x ↦ f̃([x] ⊗ B_i)·E_{i−1} as a matrix Q_i → Q_{i−1}. Only
/// k-linear, not A-linear.
fn ftilde_realized(
    alg: &QuotientAlgebra,
    f: &Cochain2,
    res: &Resolution,
    b: &MatrixOverA,
    i: usize,
) -> Mat {
    let src = &res.terms[i];
    let tgt = &res.terms[i - 1];
    let mut m = Mat::zeros(alg.field, tgt.dim(), src.dim());
    for s in 0..src.slots.len() {
        for (k, &z) in src.slot_basis[s].iter().enumerate() {
            let ze: Elem = vec![(z, alg.field.one())];
            let mut col = vec![alg.field.zero(); tgt.dim()];
            for t in 0..tgt.slots.len() {
                let val = alg.mul(&f.eval(&ze, b.get(s, t)), &alg.e(tgt.slots[t]));
                add_slot(tgt, t, &val, &mut col);
            }
            for (r, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(r, src.offsets[s] + k, v);
                }
            }
        }
    }
    m
}

/// Realize x ↦ [x]·C_i as a matrix Q_i → Q_{i−1}.
fn correction_realized(alg: &QuotientAlgebra, res: &Resolution, c: &MatrixOverA, i: usize) -> Mat {
    let src = &res.terms[i];
    let tgt = &res.terms[i - 1];
    let mut m = Mat::zeros(alg.field, tgt.dim(), src.dim());
    for s in 0..src.slots.len() {
        for (k, &z) in src.slot_basis[s].iter().enumerate() {
            let ze: Elem = vec![(z, alg.field.one())];
            let mut col = vec![alg.field.zero(); tgt.dim()];
            for t in 0..tgt.slots.len() {
                let val = alg.mul(&ze, c.get(s, t));
                add_slot(tgt, t, &val, &mut col);
            }
            for (r, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(r, src.offsets[s] + k, v);
                }
            }
        }
    }
    m
}

/// Per-slot cocycle action on a projective term: x ↦ f(a ⊗ x_t)·e_{v_t} in
/// each slot, for a fixed algebra basis element a.
fn fq_realized(alg: &QuotientAlgebra, f: &Cochain2, term: &ProjTerm, a: usize) -> Mat {
    let ae: Elem = vec![(a, alg.field.one())];
    let mut m = Mat::zeros(alg.field, term.dim(), term.dim());
    for t in 0..term.slots.len() {
        for (k, &z) in term.slot_basis[t].iter().enumerate() {
            let ze: Elem = vec![(z, alg.field.one())];
            let val = alg.mul(&f.eval(&ae, &ze), &alg.e(term.slots[t]));
            let mut col = vec![alg.field.zero(); term.dim()];
            add_slot(term, t, &val, &mut col);
            for (r, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(r, term.offsets[t] + k, v);
                }
            }
        }
    }
    m
}

/// Whether the structured construction applies to this resolution: the
/// augmentation composed with the first twisting map kills the second syzygy.
pub fn check_star(alg: &QuotientAlgebra, f: &Cochain2, res: &Resolution) -> bool {
    assert!(res.degrees() >= 2, "need the resolution out to degree 2");
    let b1 = extract_b(res, 1);
    let a1 = ftilde_realized(alg, f, res, &b1, 1);
    let comp = a1.mul(&res.diffs[1]);
    let aug = res.terms[0].gens[0];
    (0..comp.cols).all(|j| comp.get(aug, j).is_zero())
}

/// Differential matrices B_i, solved corrections C_i, and realized twisting
/// maps α_i for a base resolution (index i−1 throughout).
pub struct StarData {
    pub b: Vec<MatrixOverA>,
    pub c: Vec<MatrixOverA>,
    pub alphas: Vec<Mat>,
}

/// Solve the corrections degree by degree and build the twisting maps,
/// verifying both defining conditions along the way: equivariance up to the
/// cocycle defect, and commutation with the differentials.
pub fn build_star(
    alg: &QuotientAlgebra,
    base: &StructuredAlgebra,
    f: &Cochain2,
    res: &Resolution,
) -> Result<StarData> {
    let n = res.degrees();
    let b: Vec<MatrixOverA> = (1..=n).map(|i| extract_b(res, i)).collect();

    let mut c = vec![MatrixOverA::zeros(
        res.terms[1].slots.clone(),
        res.terms[0].slots.clone(),
    )];
    for i in 1..n {
        // C_{i+1}·B_i = f̃(B_{i+1} ⊗ B_i)·E_{i−1} − B_{i+1}·C_i, row by row,
        // each row solved inside the corner picked out by its slot's vertex.
        let bi1 = &b[i];
        let ci = &c[i - 1];
        let ft = f.tilde(alg, bi1, &b[i - 1])?;
        let src = &res.terms[i + 1];
        let mid = &res.terms[i];
        let tgt = &res.terms[i - 1];
        let mut next = MatrixOverA::zeros(src.slots.clone(), mid.slots.clone());
        for s in 0..src.slots.len() {
            let mut rhs = vec![alg.field.zero(); tgt.dim()];
            for t in 0..tgt.slots.len() {
                let mut acc = alg.mul(ft.get(s, t), &alg.e(tgt.slots[t]));
                for r in 0..mid.slots.len() {
                    acc = elem_sub(&acc, &alg.mul(bi1.get(s, r), ci.get(r, t)));
                }
                add_slot(tgt, t, &acc, &mut rhs);
            }
            let y = solve_in_corner(base, &res.diffs[i - 1], mid, src.slots[s], &rhs, i + 1)
                .map_err(|_| Error::NoSolution(i + 1))?;
            for t in 0..mid.slots.len() {
                next.set(s, t, slot_elem(mid, &y, t));
            }
        }
        c.push(next);
    }

    let neg = alg.field.one().neg();
    let mut alphas = Vec::new();
    for i in 1..=n {
        let raw = ftilde_realized(alg, f, res, &b[i - 1], i).sub(&correction_realized(
            alg,
            res,
            &c[i - 1],
            i,
        ));
        alphas.push(if i % 2 == 1 { raw } else { raw.scale(&neg) });
    }

    // α_i(a·x) − a·α_i(x) = (−1)^{i+1}(f_{Q_{i−1}}(a ⊗ d_i x) − d_i f_{Q_i}(a ⊗ x))
    for i in 1..=n {
        let d = &res.diffs[i - 1];
        for a in 0..alg.dim() {
            let lhs = alphas[i - 1]
                .mul(&res.terms[i].rep.action[a])
                .sub(&res.terms[i - 1].rep.action[a].mul(&alphas[i - 1]));
            let raw = fq_realized(alg, f, &res.terms[i - 1], a)
                .mul(d)
                .sub(&d.mul(&fq_realized(alg, f, &res.terms[i], a)));
            let rhs = if i % 2 == 1 { raw } else { raw.scale(&neg) };
            if lhs != rhs {
                return Err(Error::ConditionFailed(
                    "twist equivariance",
                    i,
                    alg.quiver.path_name(&alg.basis[a]),
                ));
            }
        }
    }
    // α_i·d_{i+1} = d_i·α_{i+1}
    for i in 1..n {
        if alphas[i - 1].mul(&res.diffs[i]) != res.diffs[i - 1].mul(&alphas[i]) {
            return Err(Error::ConditionFailed(
                "twist-differential commutation",
                i,
                String::new(),
            ));
        }
    }

    Ok(StarData { b, c, alphas })
}

/// Whether every twisting map lands inside the radical of its target term.
pub fn twists_in_radical(res: &Resolution, data: &StarData) -> bool {
    data.alphas.iter().enumerate().all(|(idx, a)| {
        res.terms[idx]
            .gens
            .iter()
            .all(|&g| (0..a.cols).all(|j| a.get(g, j).is_zero()))
    })
}

/// Assemble the deformed resolution: degree-m term ⊕_{i≤m} Q̂_i over the
/// deformed algebra, differential with δ_i on both halves of each summand,
/// (−1)^i identities from the plain half of component i into the t half of
/// component i, and (−1)^{i−1}·α_i from the plain half of component i into
/// the t half of component i−1.
///
/// The result is verified to be a complex of modules with radical images and
/// the right ranks before it is returned.
pub fn deformed_complex(
    af: &StructuredAlgebra,
    res: &Resolution,
    data: &StarData,
) -> Result<Resolution> {
    let n = res.degrees();
    let field = af.field;
    let comp_base = |i: usize| -> usize { (0..i).map(|j| res.terms[j].slots.len()).sum() };

    let mut terms = Vec::new();
    for m in 0..=n {
        let slots: Vec<usize> = (0..=m).flat_map(|i| res.terms[i].slots.clone()).collect();
        terms.push(ProjTerm::new(af, slots));
    }

    let mut diffs = Vec::new();
    for m in 1..=n {
        let src_hat = &terms[m];
        let tgt_hat = &terms[m - 1];
        let mut dmat = Mat::zeros(field, tgt_hat.dim(), src_hat.dim());
        for i in 0..=m {
            let qi = &res.terms[i];
            for s in 0..qi.slots.len() {
                let src_off = src_hat.offsets[comp_base(i) + s];
                let nb_s = qi.slot_basis[s].len();
                if i >= 1 {
                    let qp = &res.terms[i - 1];
                    let d = &res.diffs[i - 1];
                    let a = &data.alphas[i - 1];
                    for t in 0..qp.slots.len() {
                        let tgt_off = tgt_hat.offsets[comp_base(i - 1) + t];
                        let nb_t = qp.slot_basis[t].len();
                        for k in 0..nb_s {
                            for l in 0..nb_t {
                                let dv = d.get(qp.offsets[t] + l, qi.offsets[s] + k);
                                if !dv.is_zero() {
                                    dmat.set(tgt_off + l, src_off + k, dv.clone());
                                    dmat.set(tgt_off + nb_t + l, src_off + nb_s + k, dv.clone());
                                }
                                let av = a.get(qp.offsets[t] + l, qi.offsets[s] + k);
                                if !av.is_zero() {
                                    let av = if i % 2 == 0 { av.neg() } else { av.clone() };
                                    dmat.set(tgt_off + nb_t + l, src_off + k, av);
                                }
                            }
                        }
                    }
                }
                if i < m {
                    let tgt_off = tgt_hat.offsets[comp_base(i) + s];
                    let sgn = if i % 2 == 0 {
                        field.one()
                    } else {
                        field.one().neg()
                    };
                    for k in 0..nb_s {
                        dmat.set(tgt_off + nb_s + k, src_off + k, sgn.clone());
                    }
                }
            }
        }

        for &g in &af.generators {
            if dmat.mul(&src_hat.rep.action[g]) != tgt_hat.rep.action[g].mul(&dmat) {
                return Err(Error::VerificationFailed(
                    m,
                    format!("differential does not commute with `{}`", af.labels[g]),
                ));
            }
        }
        for &gr in &tgt_hat.gens {
            if (0..dmat.cols).any(|j| !dmat.get(gr, j).is_zero()) {
                return Err(Error::VerificationFailed(
                    m,
                    "image is not inside the radical".into(),
                ));
            }
        }
        diffs.push(dmat);
    }

    let out = Resolution {
        simple: res.simple,
        terms,
        diffs,
    };
    out.check_exactness(af)?;
    Ok(out)
}

/// Compare per-degree multisets of projective summands of two resolutions.
pub fn compare_shapes(a: &Resolution, b: &Resolution) -> Result<()> {
    let n = a.degrees().min(b.degrees());
    for m in 0..=n {
        let mut sa = a.terms[m].slots.clone();
        sa.sort_unstable();
        let mut sb = b.terms[m].slots.clone();
        sb.sort_unstable();
        if sa != sb {
            return Err(Error::Mismatch(m, sa, sb));
        }
    }
    Ok(())
}
