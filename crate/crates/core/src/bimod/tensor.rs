//! Horizontal composition of 1-morphisms: the balanced tensor product
//! M ∘ N = M ⊗_B N, computed as the quotient of M ⊗_k N by the span of
//! {mb ⊗ n − m ⊗ bn}. The quotient keeps its defining surjection so
//! that later (co)equalizers and maps defined on pure tensors can be
//! expressed on concrete bases.

use std::sync::Arc;

use super::{Bimodule, BimoduleMap, Label};
use crate::exact::{matrix_rref, QMatrix, Rational, Scalar};

pub struct TensorProduct {
    pub module: Arc<Bimodule>,
    /// Surjection from M ⊗_k N (pure-tensor index u * dim N + v).
    pub projection: QMatrix,
    /// Pure-tensor representative (u, v) of each quotient basis vector;
    /// the section sending basis vector k to its representative is a
    /// right inverse of the projection.
    pub reps: Vec<(usize, usize)>,
    pub factors: (Arc<Bimodule>, Arc<Bimodule>),
    /// RREF basis of the balancing relation span (for well-definedness
    /// checks of maps descending from the plain tensor product).
    relation_basis: Vec<Vec<(usize, Rational)>>,
}

impl TensorProduct {
    /// Class of the pure tensor u ⊗ v in quotient coordinates.
    pub fn class_of_pure(&self, u: usize, v: usize) -> Vec<Rational> {
        let ndim = self.factors.1.dim();
        self.projection.column(u * ndim + v)
    }

    /// Section matrix (pure-tensor coordinates of the representatives).
    pub fn section(&self) -> QMatrix {
        let ndim = self.factors.1.dim();
        let mut s = QMatrix::zeros(self.projection.cols(), self.module.dim());
        for (k, &(u, v)) in self.reps.iter().enumerate() {
            s.set(u * ndim + v, k, crate::exact::q(1));
        }
        s
    }

    /// Induce a map out of the tensor product from a matrix `g` defined
    /// on pure tensors; errors if `g` does not kill the balancing
    /// relations.
    pub fn descend(&self, target: &Arc<Bimodule>, g: &QMatrix) -> Result<BimoduleMap, String> {
        assert_eq!(g.cols(), self.projection.cols(), "descend shape mismatch");
        assert_eq!(g.rows(), target.dim(), "descend shape mismatch");
        for rel in &self.relation_basis {
            let mut acc = vec![crate::exact::q(0); target.dim()];
            for (c, val) in rel {
                for r in 0..target.dim() {
                    if !Scalar::is_zero(g.at(r, *c)) {
                        acc[r] = &acc[r] + &(g.at(r, *c) * val);
                    }
                }
            }
            if acc.iter().any(|x| !Scalar::is_zero(x)) {
                return Err("map does not respect the balancing relations".into());
            }
        }
        Ok(BimoduleMap::new(self.module.clone(), target.clone(), g.mul(&self.section())))
    }
}

/// M ∘ N for M over (A, B) and N over (B, C).
pub fn tensor_over(m: &Arc<Bimodule>, n: &Arc<Bimodule>) -> TensorProduct {
    assert!(
        m.right_algebra.same_algebra(&n.left_algebra),
        "algebra mismatch: cannot compose over different middle algebras"
    );
    let (mdim, ndim) = (m.dim(), n.dim());
    let total = mdim * ndim;
    let b = &m.right_algebra;
    let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
    for g in 0..b.dim() {
        let rm = m.right_action(g);
        let ln = n.left_action(g);
        for u in 0..mdim {
            for v in 0..ndim {
                let mut row: Vec<(usize, Rational)> = Vec::new();
                for w in 0..mdim {
                    let c = rm.at(w, u);
                    if !Scalar::is_zero(c) {
                        row.push((w * ndim + v, c.clone()));
                    }
                }
                for w in 0..ndim {
                    let c = ln.at(w, v);
                    if !Scalar::is_zero(c) {
                        row.push((u * ndim + w, -c));
                    }
                }
                row.sort_by_key(|(c, _)| *c);
                // merge duplicate indices (possible when u ⊗ v hits itself)
                let mut merged: Vec<(usize, Rational)> = Vec::new();
                for (c, val) in row {
                    match merged.last_mut() {
                        Some((lc, lv)) if *lc == c => *lv = &*lv + val,
                        _ => merged.push((c, val)),
                    }
                }
                merged.retain(|(_, v)| !Scalar::is_zero(v));
                if !merged.is_empty() {
                    rows.push(merged);
                }
            }
        }
    }
    let red = matrix_rref(rows, total);
    let pivot_cols: Vec<usize> = red.pivots.iter().map(|p| p.0).collect();
    let free_cols: Vec<usize> = (0..total).filter(|c| pivot_cols.binary_search(c).is_err()).collect();
    let qdim = free_cols.len();
    let mut projection = QMatrix::zeros(qdim, total);
    for (k, &fc) in free_cols.iter().enumerate() {
        projection.set(k, fc, crate::exact::q(1));
    }
    for (pc, row) in &red.pivots {
        for (c, v) in row {
            if let Ok(k) = free_cols.binary_search(c) {
                projection.set(k, *pc, Scalar::neg(v));
            }
        }
    }
    let reps: Vec<(usize, usize)> = free_cols.iter().map(|&fc| (fc / ndim, fc % ndim)).collect();
    let bidegree: Vec<(usize, usize)> =
        reps.iter().map(|&(u, v)| (m.bidegree(u).0, n.bidegree(v).1)).collect();

    // induced actions: act on the representative, project back
    let a = &m.left_algebra;
    let c_alg = &n.right_algebra;
    let mut left = Vec::with_capacity(a.dim());
    for g in 0..a.dim() {
        let lm = m.left_action(g);
        let mut mat = QMatrix::zeros(qdim, qdim);
        for (k, &(u, v)) in reps.iter().enumerate() {
            for r in 0..mdim {
                let cval = lm.at(r, u);
                if Scalar::is_zero(cval) {
                    continue;
                }
                for t in 0..qdim {
                    let p = projection.at(t, r * ndim + v);
                    if !Scalar::is_zero(p) {
                        mat.set(t, k, mat.at(t, k).add(&(cval * p)));
                    }
                }
            }
        }
        left.push(mat);
    }
    let mut right = Vec::with_capacity(c_alg.dim());
    for g in 0..c_alg.dim() {
        let rn = n.right_action(g);
        let mut mat = QMatrix::zeros(qdim, qdim);
        for (k, &(u, v)) in reps.iter().enumerate() {
            for r in 0..ndim {
                let cval = rn.at(r, v);
                if Scalar::is_zero(cval) {
                    continue;
                }
                for t in 0..qdim {
                    let p = projection.at(t, u * ndim + r);
                    if !Scalar::is_zero(p) {
                        mat.set(t, k, mat.at(t, k).add(&(cval * p)));
                    }
                }
            }
        }
        right.push(mat);
    }
    let label = Label::Tensor(Box::new(m.label.clone()), Box::new(n.label.clone()));
    let module = Arc::new(Bimodule::new(
        a.clone(),
        c_alg.clone(),
        left,
        right,
        bidegree,
        label,
    ));
    let relation_basis = red.pivots.into_iter().map(|(_, row)| row).collect();
    TensorProduct { module, projection, reps, factors: (m.clone(), n.clone()), relation_basis }
}

/// Unit law A ∘ M → M, class(a ⊗ m) ↦ a·m. The first factor must be the
/// regular bimodule.
pub fn left_unit_iso(t: &TensorProduct) -> BimoduleMap {
    let (a_mod, m) = (&t.factors.0, &t.factors.1);
    assert_eq!(a_mod.label, Label::Identity, "left factor must be the identity bimodule");
    let mut g = QMatrix::zeros(m.dim(), a_mod.dim() * m.dim());
    for a_idx in 0..a_mod.dim() {
        let lm = m.left_action(a_idx);
        for v in 0..m.dim() {
            for r in 0..m.dim() {
                if !Scalar::is_zero(lm.at(r, v)) {
                    g.set(r, a_idx * m.dim() + v, lm.at(r, v).clone());
                }
            }
        }
    }
    t.descend(m, &g).expect("multiplication always balances")
}

/// Unit law M ∘ A → M, class(m ⊗ a) ↦ m·a.
pub fn right_unit_iso(t: &TensorProduct) -> BimoduleMap {
    let (m, a_mod) = (&t.factors.0, &t.factors.1);
    assert_eq!(a_mod.label, Label::Identity, "right factor must be the identity bimodule");
    let mut g = QMatrix::zeros(m.dim(), m.dim() * a_mod.dim());
    for a_idx in 0..a_mod.dim() {
        let rm = m.right_action(a_idx);
        for v in 0..m.dim() {
            for r in 0..m.dim() {
                if !Scalar::is_zero(rm.at(r, v)) {
                    g.set(r, v * a_mod.dim() + a_idx, rm.at(r, v).clone());
                }
            }
        }
    }
    t.descend(m, &g).expect("multiplication always balances")
}

/// The three-fold composites with the canonical isomorphism
/// (M ∘ N) ∘ K → M ∘ (N ∘ K).
pub struct Associated {
    pub mn: TensorProduct,
    pub left: TensorProduct,
    pub nk: TensorProduct,
    pub right: TensorProduct,
    pub iso: BimoduleMap,
}

pub fn associator(m: &Arc<Bimodule>, n: &Arc<Bimodule>, k: &Arc<Bimodule>) -> Associated {
    let mn = tensor_over(m, n);
    let left = tensor_over(&mn.module, k);
    let nk = tensor_over(n, k);
    let right = tensor_over(m, &nk.module);
    let mut iso = QMatrix::zeros(right.module.dim(), left.module.dim());
    for (col, &(q_idx, w)) in left.reps.iter().enumerate() {
        let (u, v) = mn.reps[q_idx];
        // image of u ⊗ v ⊗ w in M ∘ (N ∘ K)
        let x = nk.class_of_pure(v, w);
        for (i, xi) in x.iter().enumerate() {
            if Scalar::is_zero(xi) {
                continue;
            }
            let target_col = right.class_of_pure(u, i);
            for (r, val) in target_col.iter().enumerate() {
                if !Scalar::is_zero(val) {
                    iso.set(r, col, iso.at(r, col).add(&(xi * val)));
                }
            }
        }
    }
    let iso = BimoduleMap::new(left.module.clone(), right.module.clone(), iso);
    Associated { mn, left, nk, right, iso }
}

/// Horizontal composition of 2-morphisms: f ∘ g : M ∘ N → M' ∘ N' for
/// f : M → M' and g : N → N'.
pub fn hcompose(
    f: &BimoduleMap,
    g: &BimoduleMap,
    source: &TensorProduct,
    target: &TensorProduct,
) -> BimoduleMap {
    assert_eq!(source.factors.0.dim(), f.source.dim());
    assert_eq!(source.factors.1.dim(), g.source.dim());
    assert_eq!(target.factors.0.dim(), f.target.dim());
    assert_eq!(target.factors.1.dim(), g.target.dim());
    let mut mat = QMatrix::zeros(target.module.dim(), source.module.dim());
    for (col, &(u, v)) in source.reps.iter().enumerate() {
        // (f ⊗ g)(u ⊗ v), projected
        for r1 in 0..f.target.dim() {
            let a = f.matrix.at(r1, u);
            if Scalar::is_zero(a) {
                continue;
            }
            for r2 in 0..g.target.dim() {
                let b = g.matrix.at(r2, v);
                if Scalar::is_zero(b) {
                    continue;
                }
                let coeff = a * b;
                let cls = target.class_of_pure(r1, r2);
                for (r, val) in cls.iter().enumerate() {
                    if !Scalar::is_zero(val) {
                        mat.set(r, col, mat.at(r, col).add(&(&coeff * val)));
                    }
                }
            }
        }
    }
    BimoduleMap::new(source.module.clone(), target.module.clone(), mat)
}

#[cfg(test)]
mod tests {
    use super::super::{identity_bimodule, projective_bimodule};
    use super::*;
    use crate::quivalg::stock;

    fn arc(a: crate::quivalg::FDAlgebra) -> Arc<FDAlgebra> {
        Arc::new(a)
    }
    use crate::quivalg::FDAlgebra;

    #[test]
    fn tensor_dims_dual_numbers() {
        let dn = arc(stock::dual_numbers());
        let p = projective_bimodule(&dn, 0, 0);
        let t = tensor_over(&p, &p);
        assert_eq!(t.module.dim(), 8);
        t.module.validate().unwrap();
    }

    #[test]
    fn tensor_dims_zigzag() {
        let zz = arc(stock::zigzag_a2());
        let p12 = projective_bimodule(&zz, 0, 1);
        let p21 = projective_bimodule(&zz, 1, 0);
        let t = tensor_over(&p12, &p21);
        // Ae1 ⊗ e2Ae2 ⊗ e1A = 3 * 2 * 3
        assert_eq!(t.module.dim(), 18);
        t.module.validate().unwrap();
    }

    #[test]
    fn unit_laws() {
        let zz = arc(stock::zigzag_a2());
        let id = identity_bimodule(&zz);
        let p = projective_bimodule(&zz, 0, 1);
        let t = tensor_over(&p, &id);
        assert_eq!(t.module.dim(), p.dim());
        let iso = right_unit_iso(&t);
        iso.verify_intertwines().unwrap();
        assert!(iso.is_iso());
        let t2 = tensor_over(&id, &p);
        let iso2 = left_unit_iso(&t2);
        iso2.verify_intertwines().unwrap();
        assert!(iso2.is_iso());
        // full rank surjection from the plain tensor product
        assert_eq!(t.projection.rank(), p.dim());
    }

    #[test]
    fn associator_is_iso() {
        let zz = arc(stock::zigzag_a2());
        let p11 = projective_bimodule(&zz, 0, 0);
        let p12 = projective_bimodule(&zz, 0, 1);
        let p21 = projective_bimodule(&zz, 1, 0);
        let assoc = associator(&p11, &p12, &p21);
        assert_eq!(assoc.left.module.dim(), assoc.right.module.dim());
        assoc.iso.verify_intertwines().unwrap();
        assert!(assoc.iso.is_iso());
    }

    #[test]
    fn mismatched_algebras_rejected() {
        let dn = arc(stock::dual_numbers());
        let zz = arc(stock::zigzag_a2());
        let p = projective_bimodule(&dn, 0, 0);
        let r = projective_bimodule(&zz, 0, 0);
        let res = std::panic::catch_unwind(|| tensor_over(&p, &r));
        assert!(res.is_err());
    }

    #[test]
    fn descend_rejects_unbalanced_maps() {
        let dn = arc(stock::dual_numbers());
        let id = identity_bimodule(&dn);
        let p = projective_bimodule(&dn, 0, 0);
        let t = tensor_over(&p, &id);
        // a map using only the first tensor leg index: not balanced
        let mut g = QMatrix::zeros(p.dim(), p.dim() * id.dim());
        for u in 0..p.dim() {
            g.set(u, u * id.dim(), crate::exact::q(1));
        }
        assert!(t.descend(&p, &g).is_err());
    }
}
