//! Bimodules over pairs of quiver algebras with exact action matrices:
//! the 1- and 2-morphism calculus of the 2-category C_A.
//!
//! Every bimodule carries a bidegree per basis vector (the pair of
//! vertices whose idempotents act as identity on it); all constructions
//! preserve pure bidegrees, which lets the hom-space solver restrict to
//! block-compatible unknowns.

mod adjoint;
mod decomp;
mod hom;
mod tensor;

pub use adjoint::{adjunction_data, dual_basis_pair, dual_projective_iso, AdjunctionData};
pub use decomp::{decompose, DecomposeError};
pub use hom::hom_space;
pub use tensor::{associator, hcompose, left_unit_iso, right_unit_iso, tensor_over, TensorProduct};

use std::sync::Arc;

use crate::exact::{q, QMatrix, Rational, Scalar};
use crate::quivalg::FDAlgebra;

/// Structured tag for catalog members and derived objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Label {
    /// The regular bimodule A.
    Identity,
    /// P(i, j) = A e_i ⊗ e_j A.
    Projective(usize, usize),
    Dual(Box<Label>),
    Tensor(Box<Label>, Box<Label>),
    Named(String),
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Label::Identity => write!(f, "1"),
            Label::Projective(i, j) => write!(f, "P({},{})", i + 1, j + 1),
            Label::Dual(l) => write!(f, "dual({l})"),
            Label::Tensor(a, b) => write!(f, "{a}*{b}"),
            Label::Named(s) => write!(f, "{s}"),
        }
    }
}

/// An (A, B)-bimodule with explicit exact action matrices.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub left_algebra: Arc<FDAlgebra>,
    pub right_algebra: Arc<FDAlgebra>,
    dim: usize,
    /// Matrix of the left action of each basis element of A.
    left_action: Vec<QMatrix>,
    /// Matrix of the right action of each basis element of B.
    right_action: Vec<QMatrix>,
    /// (left vertex, right vertex) of each basis vector.
    bidegree: Vec<(usize, usize)>,
    pub label: Label,
}

impl Bimodule {
    pub fn new(
        left_algebra: Arc<FDAlgebra>,
        right_algebra: Arc<FDAlgebra>,
        left_action: Vec<QMatrix>,
        right_action: Vec<QMatrix>,
        bidegree: Vec<(usize, usize)>,
        label: Label,
    ) -> Self {
        let dim = bidegree.len();
        assert_eq!(left_action.len(), left_algebra.dim());
        assert_eq!(right_action.len(), right_algebra.dim());
        for m in left_action.iter().chain(&right_action) {
            assert_eq!((m.rows(), m.cols()), (dim, dim), "action shape mismatch");
        }
        Self { left_algebra, right_algebra, dim, left_action, right_action, bidegree, label }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_action(&self, basis_elt: usize) -> &QMatrix {
        &self.left_action[basis_elt]
    }

    pub fn right_action(&self, basis_elt: usize) -> &QMatrix {
        &self.right_action[basis_elt]
    }

    pub fn bidegree(&self, basis_vec: usize) -> (usize, usize) {
        self.bidegree[basis_vec]
    }

    /// Exhaustive check of the bimodule axioms: both actions are unital
    /// homomorphisms (the right one contravariantly), they commute, and
    /// the idempotent actions realize the stored bidegrees.
    pub fn validate(&self) -> Result<(), String> {
        let a = &self.left_algebra;
        let b = &self.right_algebra;
        let n = self.dim;
        let id = QMatrix::identity(n);
        let unit_l = a.unit_vec();
        let mut acc = QMatrix::zeros(n, n);
        for (i, c) in unit_l.iter().enumerate() {
            acc = acc.add(&self.left_action[i].scale(c));
        }
        if acc != id {
            return Err("left unit does not act as identity".into());
        }
        let unit_r = b.unit_vec();
        let mut acc = QMatrix::zeros(n, n);
        for (i, c) in unit_r.iter().enumerate() {
            acc = acc.add(&self.right_action[i].scale(c));
        }
        if acc != id {
            return Err("right unit does not act as identity".into());
        }
        for u in 0..a.dim() {
            for v in 0..a.dim() {
                let lhs = self.left_action[u].mul(&self.left_action[v]);
                let mut rhs = QMatrix::zeros(n, n);
                for (w, c) in a.mult_basis(u, v) {
                    rhs = rhs.add(&self.left_action[*w].scale(c));
                }
                if lhs != rhs {
                    return Err(format!("left action not a homomorphism at ({u},{v})"));
                }
            }
        }
        for u in 0..b.dim() {
            for v in 0..b.dim() {
                // m * (uv) = (m * u) * v
                let lhs = self.right_action[v].mul(&self.right_action[u]);
                let mut rhs = QMatrix::zeros(n, n);
                for (w, c) in b.mult_basis(u, v) {
                    rhs = rhs.add(&self.right_action[*w].scale(c));
                }
                if lhs != rhs {
                    return Err(format!("right action not an anti-homomorphism at ({u},{v})"));
                }
            }
        }
        for u in 0..a.dim() {
            for v in 0..b.dim() {
                if self.left_action[u].mul(&self.right_action[v])
                    != self.right_action[v].mul(&self.left_action[u])
                {
                    return Err(format!("actions do not commute at ({u},{v})"));
                }
            }
        }
        for (m, &(lv, rv)) in self.bidegree.iter().enumerate() {
            for (vi, &e) in a.idempotents.iter().enumerate() {
                let col = self.left_action[e].column(m);
                let expect: Vec<Rational> =
                    (0..n).map(|r| if r == m && vi == lv { q(1) } else { q(0) }).collect();
                if col != expect {
                    return Err(format!("left idempotent action disagrees with bidegree at vector {m}"));
                }
            }
            for (vi, &e) in b.idempotents.iter().enumerate() {
                let col = self.right_action[e].column(m);
                let expect: Vec<Rational> =
                    (0..n).map(|r| if r == m && vi == rv { q(1) } else { q(0) }).collect();
                if col != expect {
                    return Err(format!("right idempotent action disagrees with bidegree at vector {m}"));
                }
            }
        }
        Ok(())
    }
}

/// A 2-morphism: a matrix intertwining both actions.
#[derive(Clone, Debug)]
pub struct BimoduleMap {
    pub source: Arc<Bimodule>,
    pub target: Arc<Bimodule>,
    pub matrix: QMatrix,
}

impl BimoduleMap {
    pub fn new(source: Arc<Bimodule>, target: Arc<Bimodule>, matrix: QMatrix) -> Self {
        assert_eq!(matrix.rows(), target.dim(), "map shape mismatch");
        assert_eq!(matrix.cols(), source.dim(), "map shape mismatch");
        Self { source, target, matrix }
    }

    pub fn identity(m: &Arc<Bimodule>) -> Self {
        Self::new(m.clone(), m.clone(), QMatrix::identity(m.dim()))
    }

    pub fn zero(source: &Arc<Bimodule>, target: &Arc<Bimodule>) -> Self {
        Self::new(source.clone(), target.clone(), QMatrix::zeros(target.dim(), source.dim()))
    }

    /// self after other (vertical composition).
    pub fn compose(&self, other: &BimoduleMap) -> Self {
        assert_eq!(other.target.dim(), self.source.dim(), "composition shape mismatch");
        Self::new(other.source.clone(), self.target.clone(), self.matrix.mul(&other.matrix))
    }

    pub fn add(&self, other: &BimoduleMap) -> Self {
        Self::new(self.source.clone(), self.target.clone(), self.matrix.add(&other.matrix))
    }

    pub fn sub(&self, other: &BimoduleMap) -> Self {
        Self::new(self.source.clone(), self.target.clone(), self.matrix.sub(&other.matrix))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero_matrix()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.matrix.inverse().is_some()
    }

    pub fn inverse(&self) -> Option<Self> {
        let inv = self.matrix.inverse()?;
        Some(Self::new(self.target.clone(), self.source.clone(), inv))
    }

    /// Exact post-hoc check that the matrix intertwines every basis
    /// action on both sides.
    pub fn verify_intertwines(&self) -> Result<(), String> {
        let src = &self.source;
        let tgt = &self.target;
        if !src.left_algebra.same_algebra(&tgt.left_algebra)
            || !src.right_algebra.same_algebra(&tgt.right_algebra)
        {
            return Err("algebra mismatch".into());
        }
        for u in 0..src.left_algebra.dim() {
            if self.matrix.mul(src.left_action(u)) != tgt.left_action(u).mul(&self.matrix) {
                return Err(format!("fails to intertwine left action of basis element {u}"));
            }
        }
        for u in 0..src.right_algebra.dim() {
            if self.matrix.mul(src.right_action(u)) != tgt.right_action(u).mul(&self.matrix) {
                return Err(format!("fails to intertwine right action of basis element {u}"));
            }
        }
        Ok(())
    }
}

/// The regular bimodule: A acting on itself on both sides.
pub fn identity_bimodule(a: &Arc<FDAlgebra>) -> Arc<Bimodule> {
    let dim = a.dim();
    let left: Vec<QMatrix> = (0..dim).map(|u| a.left_mult_matrix(u)).collect();
    let right: Vec<QMatrix> = (0..dim).map(|u| a.right_mult_matrix(u)).collect();
    let bidegree: Vec<(usize, usize)> = a.basis.iter().map(|b| (b.tgt, b.src)).collect();
    Arc::new(Bimodule::new(a.clone(), a.clone(), left, right, bidegree, Label::Identity))
}

/// P(i, j) = A e_i ⊗_k e_j A with a(x ⊗ y)b = ax ⊗ yb.
pub fn projective_bimodule(a: &Arc<FDAlgebra>, i: usize, j: usize) -> Arc<Bimodule> {
    let left_basis = a.left_projective(i);
    let right_basis = a.right_projective(j);
    let rp = right_basis.len();
    let dim = left_basis.len() * rp;
    let idx = |p: usize, r: usize| p * rp + r;
    let mut left = Vec::with_capacity(a.dim());
    let mut right = Vec::with_capacity(a.dim());
    for u in 0..a.dim() {
        let mut lm = QMatrix::zeros(dim, dim);
        let mut rm = QMatrix::zeros(dim, dim);
        for (pp, &p) in left_basis.iter().enumerate() {
            for (rr, &r) in right_basis.iter().enumerate() {
                // u * p expanded inside Ae_i
                for (w, c) in a.mult_basis(u, p) {
                    let wp = left_basis.iter().position(|&x| x == *w).expect("Ae_i closed under left mult");
                    lm.set(idx(wp, rr), idx(pp, rr), c.clone());
                }
                // r * u expanded inside e_jA
                for (w, c) in a.mult_basis(r, u) {
                    let wr = right_basis.iter().position(|&x| x == *w).expect("e_jA closed under right mult");
                    rm.set(idx(pp, wr), idx(pp, rr), c.clone());
                }
            }
        }
        left.push(lm);
        right.push(rm);
    }
    let mut bidegree = Vec::with_capacity(dim);
    for &p in &left_basis {
        for &r in &right_basis {
            bidegree.push((a.basis[p].tgt, a.basis[r].src));
        }
    }
    Arc::new(Bimodule::new(a.clone(), a.clone(), left, right, bidegree, Label::Projective(i, j)))
}

/// Pure-tensor basis of P(i,j): (algebra basis index in Ae_i, algebra
/// basis index in e_jA), in the order used by `projective_bimodule`.
pub fn projective_basis_pairs(a: &FDAlgebra, i: usize, j: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for &p in &a.left_projective(i) {
        for &r in &a.right_projective(j) {
            out.push((p, r));
        }
    }
    out
}

/// The zero bimodule.
pub fn zero_bimodule(a: &Arc<FDAlgebra>, b: &Arc<FDAlgebra>) -> Arc<Bimodule> {
    Arc::new(Bimodule::new(
        a.clone(),
        b.clone(),
        (0..a.dim()).map(|_| QMatrix::zeros(0, 0)).collect(),
        (0..b.dim()).map(|_| QMatrix::zeros(0, 0)).collect(),
        vec![],
        Label::Named("0".into()),
    ))
}

/// Linear dual with side-swapped, transposed actions: a (B, A)-bimodule
/// from an (A, B)-bimodule.
pub fn dual(m: &Arc<Bimodule>) -> Arc<Bimodule> {
    let left: Vec<QMatrix> = (0..m.right_algebra.dim()).map(|u| m.right_action(u).transpose()).collect();
    let right: Vec<QMatrix> = (0..m.left_algebra.dim()).map(|u| m.left_action(u).transpose()).collect();
    let bidegree: Vec<(usize, usize)> = m.bidegree.iter().map(|&(l, r)| (r, l)).collect();
    let label = match &m.label {
        Label::Dual(inner) => (**inner).clone(),
        other => Label::Dual(Box::new(other.clone())),
    };
    Arc::new(Bimodule::new(m.right_algebra.clone(), m.left_algebra.clone(), left, right, bidegree, label))
}

pub mod modules;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quivalg::stock;

    fn arc(a: crate::quivalg::FDAlgebra) -> Arc<FDAlgebra> {
        Arc::new(a)
    }

    #[test]
    fn projective_dims() {
        let dn = arc(stock::dual_numbers());
        assert_eq!(projective_bimodule(&dn, 0, 0).dim(), 4);
        let zz = arc(stock::zigzag_a2());
        assert_eq!(projective_bimodule(&zz, 0, 1).dim(), 9);
        let k = arc(stock::ground_field());
        assert_eq!(projective_bimodule(&k, 0, 0).dim(), 1);
    }

    #[test]
    fn identity_dims() {
        assert_eq!(identity_bimodule(&arc(stock::dual_numbers())).dim(), 2);
        assert_eq!(identity_bimodule(&arc(stock::zigzag_a2())).dim(), 6);
        assert_eq!(identity_bimodule(&arc(stock::ground_field())).dim(), 1);
    }

    #[test]
    fn constructed_bimodules_validate() {
        for alg in [stock::dual_numbers(), stock::zigzag_a2(), stock::ground_field()] {
            let a = arc(alg);
            identity_bimodule(&a).validate().unwrap();
            for i in 0..a.vertex_count() {
                for j in 0..a.vertex_count() {
                    let p = projective_bimodule(&a, i, j);
                    p.validate().unwrap();
                    dual(&p).validate().unwrap();
                }
            }
            dual(&identity_bimodule(&a)).validate().unwrap();
        }
    }

    #[test]
    fn dual_is_involution_on_dims_and_labels() {
        let zz = arc(stock::zigzag_a2());
        let p = projective_bimodule(&zz, 0, 1);
        let dd = dual(&dual(&p));
        assert_eq!(dd.dim(), p.dim());
        assert_eq!(dd.label, p.label);
        let z = zero_bimodule(&zz, &zz);
        assert_eq!(dual(&z).dim(), 0);
    }

    #[test]
    fn modules_validate() {
        let zz = arc(stock::zigzag_a2());
        modules::free_module(&zz).validate().unwrap();
        modules::projective_module(&zz, 0).validate().unwrap();
        assert_eq!(modules::projective_module(&zz, 0).dim(), 3);
        assert_eq!(modules::zero_module(&zz).dim(), 0);
    }
}
