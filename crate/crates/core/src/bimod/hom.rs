//! Hom-spaces of bimodules: bases of matrices intertwining both
//! actions, solved exactly. Unknowns are restricted to entries whose
//! source and target basis vectors share a bidegree; commuting with the
//! arrow actions then implies commuting with the whole algebra.

use std::sync::Arc;

use super::{Bimodule, BimoduleMap};
use crate::exact::{LinearSystem, QMatrix, Scalar};

/// Basis of the space of bimodule maps M → N.
pub fn hom_space(m: &Arc<Bimodule>, n: &Arc<Bimodule>) -> Vec<BimoduleMap> {
    assert!(
        m.left_algebra.same_algebra(&n.left_algebra) && m.right_algebra.same_algebra(&n.right_algebra),
        "hom_space requires the same algebra pair on both sides"
    );
    let (md, nd) = (m.dim(), n.dim());
    // unknown X[r, c] (r in N, c in M) only where bidegrees match
    let mut unknown: Vec<Option<usize>> = vec![None; nd * md];
    let mut count = 0usize;
    for r in 0..nd {
        for c in 0..md {
            if n.bidegree(r) == m.bidegree(c) {
                unknown[r * md + c] = Some(count);
                count += 1;
            }
        }
    }
    let mut sys = LinearSystem::new(count);
    // left arrows: L^N_g X - X L^M_g = 0
    for &g in &m.left_algebra.arrows {
        let lm = m.left_action(g);
        let ln = n.left_action(g);
        for r in 0..nd {
            for c in 0..md {
                let mut touched = false;
                for w in 0..nd {
                    if let Some(u) = unknown[w * md + c] {
                        if !Scalar::is_zero(ln.at(r, w)) {
                            sys.term(u, ln.at(r, w).clone());
                            touched = true;
                        }
                    }
                }
                for w in 0..md {
                    if let Some(u) = unknown[r * md + w] {
                        if !Scalar::is_zero(lm.at(w, c)) {
                            sys.term(u, -lm.at(w, c));
                            touched = true;
                        }
                    }
                }
                if touched {
                    sys.finish_equation();
                }
            }
        }
    }
    // right arrows: R^N_g X - X R^M_g = 0
    for &g in &m.right_algebra.arrows {
        let rm = m.right_action(g);
        let rn = n.right_action(g);
        for r in 0..nd {
            for c in 0..md {
                let mut touched = false;
                for w in 0..nd {
                    if let Some(u) = unknown[w * md + c] {
                        if !Scalar::is_zero(rn.at(r, w)) {
                            sys.term(u, rn.at(r, w).clone());
                            touched = true;
                        }
                    }
                }
                for w in 0..md {
                    if let Some(u) = unknown[r * md + w] {
                        if !Scalar::is_zero(rm.at(w, c)) {
                            sys.term(u, -rm.at(w, c));
                            touched = true;
                        }
                    }
                }
                if touched {
                    sys.finish_equation();
                }
            }
        }
    }
    let basis = sys.solution_basis();
    let maps: Vec<BimoduleMap> = basis
        .into_iter()
        .map(|sol| {
            let mut mat = QMatrix::zeros(nd, md);
            for r in 0..nd {
                for c in 0..md {
                    if let Some(u) = unknown[r * md + c] {
                        mat.set(r, c, sol[u].clone());
                    }
                }
            }
            BimoduleMap::new(m.clone(), n.clone(), mat)
        })
        .collect();
    if cfg!(debug_assertions) {
        for f in &maps {
            f.verify_intertwines().expect("solved hom basis must intertwine all basis actions");
        }
    }
    maps
}

#[cfg(test)]
mod tests {
    use super::super::{dual, identity_bimodule, projective_bimodule, zero_bimodule};
    use super::*;
    use crate::quivalg::stock;
    use std::sync::Arc;

    fn arc(a: crate::quivalg::FDAlgebra) -> Arc<crate::quivalg::FDAlgebra> {
        Arc::new(a)
    }

    #[test]
    fn end_of_projective_dual_numbers() {
        let dn = arc(stock::dual_numbers());
        let p = projective_bimodule(&dn, 0, 0);
        // End(P(1,1)) = eAe ⊗ (eAe)^op, dim 4
        assert_eq!(hom_space(&p, &p).len(), 4);
    }

    #[test]
    fn hom_to_identity_dual_numbers() {
        let dn = arc(stock::dual_numbers());
        let p = projective_bimodule(&dn, 0, 0);
        let id = identity_bimodule(&dn);
        assert_eq!(hom_space(&p, &id).len(), 2);
    }

    #[test]
    fn hom_between_disjoint_supports() {
        let zz = arc(stock::zigzag_a2());
        let p = projective_bimodule(&zz, 0, 0);
        let z = zero_bimodule(&zz, &zz);
        assert_eq!(hom_space(&p, &z).len(), 0);
        assert_eq!(hom_space(&z, &p).len(), 0);
    }

    #[test]
    fn end_of_projectives_zigzag() {
        let zz = arc(stock::zigzag_a2());
        // End(P(i,j)) = e_iAe_i ⊗ (e_jAe_j)^op, dim 4 for the zigzag
        for i in 0..2 {
            for j in 0..2 {
                let p = projective_bimodule(&zz, i, j);
                assert_eq!(hom_space(&p, &p).len(), 4, "End P({i},{j})");
            }
        }
        // Hom(P(1,1), P(2,1)) = e_1Ae_2 ⊗ e_1Ae_1: dim 1*2
        let p11 = projective_bimodule(&zz, 0, 0);
        let p21 = projective_bimodule(&zz, 1, 0);
        assert_eq!(hom_space(&p11, &p21).len(), 2);
    }

    #[test]
    fn dual_of_projective_has_projective_homs() {
        let zz = arc(stock::zigzag_a2());
        let d = dual(&projective_bimodule(&zz, 0, 1));
        let p = projective_bimodule(&zz, 1, 0);
        // dual(P(1,2)) should be isomorphic to P(2,1): hom dims agree with End
        assert_eq!(hom_space(&d, &p).len(), hom_space(&p, &p).len());
    }
}
