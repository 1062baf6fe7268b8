//! The stock desk algebras used throughout the test and acceptance
//! suites: the dual numbers k[x]/(x^2), the zigzag algebra of type A2,
//! the hereditary A2 path algebra (no symmetrizing form), and the
//! ground field itself.

use super::{build_algebra, ArrowSpec, FDAlgebra, QuiverSpec, RelationTerm};
use crate::exact::q;

pub fn dual_numbers_spec() -> QuiverSpec {
    QuiverSpec {
        name: "dual_numbers".into(),
        vertices: vec!["1".into()],
        arrows: vec![ArrowSpec { name: "x".into(), src: "1".into(), tgt: "1".into() }],
        relations: vec![vec![RelationTerm { coeff: q(1), path: vec!["x".into(), "x".into()] }]],
        nilpotency_bound: 2,
    }
}

/// k[x]/(x^2): one vertex, one loop, basis {e, x}.
pub fn dual_numbers() -> FDAlgebra {
    build_algebra(&dual_numbers_spec()).expect("stock algebra")
}

pub fn zigzag_a2_spec() -> QuiverSpec {
    let len3 = |p: [&str; 3]| RelationTerm { coeff: q(1), path: p.iter().map(|s| s.to_string()).collect() };
    QuiverSpec {
        name: "zigzag_a2".into(),
        vertices: vec!["1".into(), "2".into()],
        arrows: vec![
            ArrowSpec { name: "a".into(), src: "1".into(), tgt: "2".into() },
            ArrowSpec { name: "b".into(), src: "2".into(), tgt: "1".into() },
        ],
        relations: vec![vec![len3(["a", "b", "a"])], vec![len3(["b", "a", "b"])]],
        nilpotency_bound: 3,
    }
}

/// Zigzag algebra of the A2 graph: basis {e1, e2, a, b, ab, ba}.
pub fn zigzag_a2() -> FDAlgebra {
    build_algebra(&zigzag_a2_spec()).expect("stock algebra")
}

pub fn a2_path_spec() -> QuiverSpec {
    QuiverSpec {
        name: "a2_path".into(),
        vertices: vec!["1".into(), "2".into()],
        arrows: vec![ArrowSpec { name: "a".into(), src: "1".into(), tgt: "2".into() }],
        relations: vec![],
        nilpotency_bound: 2,
    }
}

/// Path algebra of A2 (hereditary, not self-injective): basis {e1, e2, a}.
pub fn a2_path() -> FDAlgebra {
    build_algebra(&a2_path_spec()).expect("stock algebra")
}

pub fn ground_field_spec() -> QuiverSpec {
    QuiverSpec {
        name: "ground_field".into(),
        vertices: vec!["1".into()],
        arrows: vec![],
        relations: vec![],
        nilpotency_bound: 1,
    }
}

/// The ground field k as a one-vertex algebra.
pub fn ground_field() -> FDAlgebra {
    build_algebra(&ground_field_spec()).expect("stock algebra")
}
