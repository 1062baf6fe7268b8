use std::collections::BTreeMap;

use super::{BasisPath, FDAlgebra, QuivalgError, QuiverSpec};
use crate::exact::{q, Rational, Scalar};


/// A path in the free category of the quiver: arrows in composition
/// order (index 0 applied last).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Path {
    src: usize,
    arrows: Vec<usize>,
}

struct PathSpace {
    paths: Vec<Path>,
    tgt: Vec<usize>,
    index: BTreeMap<(usize, Vec<usize>), usize>,
}

fn enumerate_paths(nv: usize, arrows: &[(usize, usize)], max_len: usize) -> PathSpace {
    let mut by_len: Vec<Vec<Path>> = vec![(0..nv).map(|v| Path { src: v, arrows: vec![] }).collect()];
    for len in 1..=max_len {
        let mut level = Vec::new();
        for p in &by_len[len - 1] {
            let p_tgt = if p.arrows.is_empty() { p.src } else { arrows[p.arrows[0]].1 };
            for (ai, (asrc, _)) in arrows.iter().enumerate() {
                if *asrc == p_tgt {
                    let mut na = Vec::with_capacity(p.arrows.len() + 1);
                    na.push(ai);
                    na.extend_from_slice(&p.arrows);
                    level.push(Path { src: p.src, arrows: na });
                }
            }
        }
        // order within a length level follows the arrow sequence, so the
        // basis lists like {e1, e2, a, b, ab, ba}
        level.sort_by(|p, q| p.arrows.cmp(&q.arrows).then(p.src.cmp(&q.src)));
        by_len.push(level);
    }
    let mut paths = Vec::new();
    for level in by_len {
        paths.extend(level);
    }
    let tgt: Vec<usize> = paths
        .iter()
        .map(|p| if p.arrows.is_empty() { p.src } else { arrows[p.arrows[0]].1 })
        .collect();
    let index = paths.iter().enumerate().map(|(i, p)| ((p.src, p.arrows.clone()), i)).collect();
    PathSpace { paths, tgt, index }
}

/// Build the quotient algebra from a quiver presentation.
///
/// The basis consists of the paths of length below the nilpotency bound
/// that are not reducible modulo the two-sided ideal spanned by
/// {p * r * q}. Fails if some path of length equal to the bound is
/// nonzero modulo the ideal.
pub fn build_algebra(spec: &QuiverSpec) -> Result<FDAlgebra, QuivalgError> {
    let nv = spec.vertices.len();
    if nv == 0 {
        return Err(QuivalgError::Parse("quiver needs at least one vertex".into()));
    }
    if spec.nilpotency_bound == 0 {
        return Err(QuivalgError::Parse("nilpotency_bound must be positive".into()));
    }
    let vertex_index = |name: &str| -> Result<usize, QuivalgError> {
        spec.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| QuivalgError::Parse(format!("unknown vertex {name:?}")))
    };
    let mut arrow_names = Vec::new();
    let mut arrows = Vec::new();
    for a in &spec.arrows {
        if arrow_names.contains(&a.name) {
            return Err(QuivalgError::Parse(format!("duplicate arrow name {:?}", a.name)));
        }
        arrow_names.push(a.name.clone());
        arrows.push((vertex_index(&a.src)?, vertex_index(&a.tgt)?));
    }
    let bound = spec.nilpotency_bound;

    // resolve relation terms into composition-ordered arrow index paths
    let mut relations: Vec<Vec<(Rational, Vec<usize>, usize)>> = Vec::new();
    for rel in &spec.relations {
        let mut terms = Vec::new();
        for t in rel {
            if t.path.len() < 2 {
                return Err(QuivalgError::Parse(format!(
                    "relation path {:?} has length {} < 2",
                    t.path,
                    t.path.len()
                )));
            }
            if t.path.len() > bound {
                return Err(QuivalgError::Parse(format!(
                    "relation path {:?} exceeds the nilpotency bound {bound}",
                    t.path
                )));
            }
            let idxs: Vec<usize> = t
                .path
                .iter()
                .map(|n| {
                    arrow_names
                        .iter()
                        .position(|an| an == n)
                        .ok_or_else(|| QuivalgError::Parse(format!("unknown arrow {n:?}")))
                })
                .collect::<Result<_, _>>()?;
            // validate composability (arrows applied right to left)
            for w in idxs.windows(2) {
                if arrows[w[0]].0 != arrows[w[1]].1 {
                    return Err(QuivalgError::Parse(format!("relation path {:?} is not composable", t.path)));
                }
            }
            let src = arrows[*idxs.last().unwrap()].0;
            terms.push((t.coeff.clone(), idxs, src));
        }
        relations.push(terms);
    }

    let space = enumerate_paths(nv, &arrows, bound);
    let npaths = space.paths.len();

    // span of the relation ideal, truncated at path length <= bound
    let mut ideal_rows: Vec<Vec<(usize, Rational)>> = Vec::new();
    for rel in &relations {
        for p in &space.paths {
            // left factor p, right factor r: p * term * r
            for r in &space.paths {
                let mut row: Vec<(usize, Rational)> = Vec::new();
                let mut any_term_fits = false;
                for (coeff, term, term_src) in rel {
                    let term_tgt = arrows[term[0]].1;
                    // composability: src(p) = tgt(term), src(term) = tgt(r)
                    if p.src != term_tgt || *term_src != space.tgt[space.index[&(r.src, r.arrows.clone())]] {
                        continue;
                    }
                    let total = p.arrows.len() + term.len() + r.arrows.len();
                    if total > bound {
                        continue;
                    }
                    any_term_fits = true;
                    let mut full = Vec::with_capacity(total);
                    full.extend_from_slice(&p.arrows);
                    full.extend_from_slice(term);
                    full.extend_from_slice(&r.arrows);
                    let idx = space.index[&(r.src, full)];
                    row.push((idx, coeff.clone()));
                }
                if any_term_fits && !row.is_empty() {
                    ideal_rows.push(row);
                }
            }
        }
    }

    let rref = {
        let mut sys_rows = Vec::new();
        for mut row in ideal_rows {
            row.sort_by_key(|(c, _)| *c);
            sys_rows.push(row);
        }
        crate::exact::matrix_rref(sys_rows, npaths)
    };
    let pivot_cols: Vec<usize> = rref.pivots.iter().map(|p| p.0).collect();

    // normal form of a unit path vector
    let reduce = |idx: usize| -> Vec<(usize, Rational)> {
        match pivot_cols.binary_search(&idx) {
            Err(_) => vec![(idx, q(1))],
            Ok(pos) => {
                let row = &rref.pivots[pos].1;
                row.iter().filter(|(c, _)| *c != idx).map(|(c, v)| (*c, Scalar::neg(v))).collect()
            }
        }
    };

    // admissibility: every path of full length must reduce to zero
    for (i, p) in space.paths.iter().enumerate() {
        if p.arrows.len() == bound {
            let nf = reduce(i);
            if !nf.is_empty() {
                let label = path_label(p, &arrow_names, &spec.vertices);
                return Err(QuivalgError::NilpotencyViolated { witness: label });
            }
        }
    }

    // basis = non-pivot columns (all have length < bound now)
    let basis_cols: Vec<usize> = (0..npaths).filter(|c| !pivot_cols.contains(c)).collect();
    let col_to_basis: BTreeMap<usize, usize> =
        basis_cols.iter().enumerate().map(|(b, c)| (*c, b)).collect();
    let basis: Vec<BasisPath> = basis_cols
        .iter()
        .map(|&c| {
            let p = &space.paths[c];
            BasisPath {
                label: path_label(p, &arrow_names, &spec.vertices),
                src: p.src,
                tgt: space.tgt[c],
                len: p.arrows.len(),
            }
        })
        .collect();

    let idempotents: Vec<usize> = (0..nv)
        .map(|v| {
            basis_cols
                .iter()
                .position(|&c| space.paths[c].arrows.is_empty() && space.paths[c].src == v)
                .expect("vertex idempotents always survive (relations have length >= 2)")
        })
        .collect();
    let arrow_basis: Vec<usize> = (0..arrows.len())
        .filter_map(|ai| basis_cols.iter().position(|&c| space.paths[c].arrows == vec![ai]))
        .collect();

    // structure constants via normal forms of concatenations
    let dim = basis.len();
    let mut mult = vec![vec![Vec::new(); dim]; dim];
    for (bu, &cu) in basis_cols.iter().enumerate() {
        for (bv, &cv) in basis_cols.iter().enumerate() {
            let pu = &space.paths[cu];
            let pv = &space.paths[cv];
            // product pu * pv: first pv, then pu
            if pu.src != space.tgt[cv] {
                continue;
            }
            let total = pu.arrows.len() + pv.arrows.len();
            if total >= bound {
                // paths of length >= bound are zero in the quotient
                continue;
            }
            let mut concat = Vec::with_capacity(total);
            concat.extend_from_slice(&pu.arrows);
            concat.extend_from_slice(&pv.arrows);
            let idx = space.index[&(pv.src, concat)];
            let nf = reduce(idx);
            mult[bu][bv] = nf.into_iter().map(|(c, v)| (col_to_basis[&c], v)).collect();
        }
    }

    Ok(FDAlgebra::new(spec.name.clone(), spec.vertices.clone(), basis, idempotents, arrow_basis, mult))
}

fn path_label(p: &Path, arrow_names: &[String], vertices: &[String]) -> String {
    if p.arrows.is_empty() {
        format!("e{}", vertices[p.src])
    } else {
        p.arrows.iter().map(|&a| arrow_names[a].clone()).collect::<Vec<_>>().join("")
    }
}

#[cfg(test)]
mod tests {
    use super::super::stock;
    use super::*;
    use crate::quivalg::{ArrowSpec, RelationTerm};

    #[test]
    fn nilpotency_violation_detected() {
        // loop with no relations and bound 2: x^2 is nonzero
        let spec = QuiverSpec {
            name: "bad".into(),
            vertices: vec!["1".into()],
            arrows: vec![ArrowSpec { name: "x".into(), src: "1".into(), tgt: "1".into() }],
            relations: vec![],
            nilpotency_bound: 2,
        };
        match build_algebra(&spec) {
            Err(QuivalgError::NilpotencyViolated { witness }) => assert_eq!(witness, "xx"),
            other => panic!("expected nilpotency violation, got {other:?}"),
        }
    }

    #[test]
    fn malformed_relation_rejected() {
        let mut spec = stock::dual_numbers_spec();
        spec.relations[0][0].path = vec!["x".into()];
        assert!(matches!(build_algebra(&spec), Err(QuivalgError::Parse(_))));
        let mut spec2 = stock::dual_numbers_spec();
        spec2.relations[0][0].path = vec!["y".into(), "x".into()];
        assert!(matches!(build_algebra(&spec2), Err(QuivalgError::Parse(_))));
    }

    #[test]
    fn inhomogeneous_relation() {
        // loop x with relation x^2 - x^3 ... wait x^3 exceeds bound 3? use x^2 = x^3, bound 3:
        // then x^3 = x^4 = 0 (truncation), so x^2 = 0 too: dim 2? Let's check:
        // ideal rows: {x^2 - x^3}, {x^3 (=x*(x^2-x^3) truncated)}, ... basis {e, x}
        let spec = QuiverSpec {
            name: "inhom".into(),
            vertices: vec!["1".into()],
            arrows: vec![ArrowSpec { name: "x".into(), src: "1".into(), tgt: "1".into() }],
            relations: vec![vec![
                RelationTerm { coeff: q(1), path: vec!["x".into(), "x".into()] },
                RelationTerm { coeff: q(-1), path: vec!["x".into(), "x".into(), "x".into()] },
            ]],
            nilpotency_bound: 3,
        };
        let a = build_algebra(&spec).unwrap();
        assert_eq!(a.dim(), 2);
    }
}
