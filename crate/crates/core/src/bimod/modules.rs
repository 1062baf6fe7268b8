//! Left A-modules realized as (A, k)-bimodules over the ground field.

use std::sync::Arc;

use super::{zero_bimodule, Bimodule, BimoduleMap, Label};
use crate::exact::{QMatrix, Scalar};
use crate::quivalg::{stock, FDAlgebra};

pub fn ground() -> Arc<FDAlgebra> {
    use std::sync::OnceLock;
    static GROUND: OnceLock<Arc<FDAlgebra>> = OnceLock::new();
    GROUND.get_or_init(|| Arc::new(stock::ground_field())).clone()
}

/// The free module A as an (A, k)-bimodule.
pub fn free_module(a: &Arc<FDAlgebra>) -> Arc<Bimodule> {
    let dim = a.dim();
    let left: Vec<QMatrix> = (0..dim).map(|u| a.left_mult_matrix(u)).collect();
    let right = vec![QMatrix::identity(dim)];
    let bidegree: Vec<(usize, usize)> = a.basis.iter().map(|b| (b.tgt, 0)).collect();
    Arc::new(Bimodule::new(a.clone(), ground(), left, right, bidegree, Label::Named("A".into())))
}

/// The projective left module A e_j as an (A, k)-bimodule.
pub fn projective_module(a: &Arc<FDAlgebra>, j: usize) -> Arc<Bimodule> {
    let basis = a.left_projective(j);
    let dim = basis.len();
    let mut left = Vec::with_capacity(a.dim());
    for u in 0..a.dim() {
        let mut lm = QMatrix::zeros(dim, dim);
        for (pp, &p) in basis.iter().enumerate() {
            for (w, c) in a.mult_basis(u, p) {
                let wp = basis.iter().position(|&x| x == *w).unwrap();
                lm.set(wp, pp, c.clone());
            }
        }
        left.push(lm);
    }
    let bidegree: Vec<(usize, usize)> = basis.iter().map(|&p| (a.basis[p].tgt, 0)).collect();
    Arc::new(Bimodule::new(
        a.clone(),
        ground(),
        left,
        vec![QMatrix::identity(dim)],
        bidegree,
        Label::Named(format!("Ae{}", j + 1)),
    ))
}

pub fn zero_module(a: &Arc<FDAlgebra>) -> Arc<Bimodule> {
    zero_bimodule(a, &ground())
}

/// Submodule spanned by the columns of `cols`, which must be stable
/// under both actions and consist of bidegree-pure vectors. Returns the
/// submodule with its inclusion map.
pub fn submodule(m: &Arc<Bimodule>, cols: &QMatrix) -> (Arc<Bimodule>, BimoduleMap) {
    assert_eq!(cols.rows(), m.dim());
    let sub_dim = cols.cols();
    let mut left = Vec::with_capacity(m.left_algebra.dim());
    for u in 0..m.left_algebra.dim() {
        let image = m.left_action(u).mul(cols);
        let coords = cols.solve(&image).expect("column span must be stable under the left action");
        left.push(coords);
    }
    let mut right = Vec::with_capacity(m.right_algebra.dim());
    for u in 0..m.right_algebra.dim() {
        let image = m.right_action(u).mul(cols);
        let coords = cols.solve(&image).expect("column span must be stable under the right action");
        right.push(coords);
    }
    let mut bidegree = Vec::with_capacity(sub_dim);
    for c in 0..sub_dim {
        let mut bd: Option<(usize, usize)> = None;
        for r in 0..m.dim() {
            if !Scalar::is_zero(cols.at(r, c)) {
                let d = m.bidegree(r);
                match bd {
                    None => bd = Some(d),
                    Some(prev) => assert_eq!(prev, d, "submodule basis vector mixes bidegrees"),
                }
            }
        }
        bidegree.push(bd.expect("zero column in submodule basis"));
    }
    let sub = Arc::new(Bimodule::new(
        m.left_algebra.clone(),
        m.right_algebra.clone(),
        left,
        right,
        bidegree,
        Label::Named(format!("sub({})", m.label)),
    ));
    let incl = BimoduleMap::new(sub.clone(), m.clone(), cols.clone());
    (sub, incl)
}
