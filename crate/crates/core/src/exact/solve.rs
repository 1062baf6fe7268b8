use super::matrix::rref;
use super::{Rational, Scalar};

/// Homogeneous linear system over named unknowns, solved exactly.
///
/// Constraint rows are accumulated sparsely; `solution_basis` returns a
/// basis of the solution space as dense coefficient vectors.
pub struct LinearSystem {
    unknowns: usize,
    rows: Vec<Vec<(usize, Rational)>>,
    current: Vec<(usize, Rational)>,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        Self { unknowns, rows: Vec::new(), current: Vec::new() }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    /// Add `coeff * x_unknown` to the equation being built.
    pub fn term(&mut self, unknown: usize, coeff: Rational) {
        assert!(unknown < self.unknowns, "unknown index out of range");
        if !Scalar::is_zero(&coeff) {
            self.current.push((unknown, coeff));
        }
    }

    /// Close the current equation (= 0) and start a new one.
    pub fn finish_equation(&mut self) {
        if self.current.is_empty() {
            return;
        }
        let mut row = std::mem::take(&mut self.current);
        row.sort_by_key(|(c, _)| *c);
        // merge duplicate unknowns
        let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(row.len());
        for (c, v) in row {
            match merged.last_mut() {
                Some((lc, lv)) if *lc == c => *lv = &*lv + v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|(_, v)| !Scalar::is_zero(v));
        if !merged.is_empty() {
            self.rows.push(merged);
        }
    }

    /// Basis of the solution space of the homogeneous system.
    pub fn solution_basis(mut self) -> Vec<Vec<Rational>> {
        self.finish_equation();
        let red = rref(self.rows, self.unknowns);
        let pivot_cols: Vec<usize> = red.pivots.iter().map(|p| p.0).collect();
        let mut basis = Vec::new();
        for fc in 0..self.unknowns {
            if pivot_cols.contains(&fc) {
                continue;
            }
            let mut v = vec![Rational::from_integer(0.into()); self.unknowns];
            v[fc] = Rational::from_integer(1.into());
            for (pc, row) in &red.pivots {
                if let Some((_, coeff)) = row.iter().find(|(c, _)| *c == fc) {
                    v[*pc] = Scalar::neg(coeff);
                }
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::super::q;
    use super::*;

    #[test]
    fn empty_system_is_full_space() {
        let sys = LinearSystem::new(3);
        assert_eq!(sys.solution_basis().len(), 3);
    }

    #[test]
    fn equality_constraint() {
        // x = y over 2 unknowns
        let mut sys = LinearSystem::new(2);
        sys.term(0, q(1));
        sys.term(1, q(-1));
        sys.finish_equation();
        let basis = sys.solution_basis();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0][0], basis[0][1]);
    }

    #[test]
    fn duplicate_terms_merge() {
        // x + x - 2x = 0 is vacuous
        let mut sys = LinearSystem::new(1);
        sys.term(0, q(1));
        sys.term(0, q(1));
        sys.term(0, q(-2));
        sys.finish_equation();
        assert_eq!(sys.solution_basis().len(), 1);
    }

    #[test]
    fn rank_nullity_on_random_sparse_systems() {
        let mut state: u64 = 7;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        for _ in 0..20 {
            let unknowns = 4 + next() % 6;
            let neqs = 1 + next() % 12;
            let mut dense = vec![vec![q(0); unknowns]; neqs];
            let mut sys = LinearSystem::new(unknowns);
            for row in dense.iter_mut() {
                for (c, cell) in row.iter_mut().enumerate() {
                    if next() % 3 == 0 {
                        let val = (next() % 7) as i64 - 3;
                        *cell = q(val);
                        sys.term(c, q(val));
                    }
                }
                sys.finish_equation();
            }
            let basis = sys.solution_basis();
            let m = crate::exact::QMatrix::from_rows(dense);
            assert_eq!(basis.len(), unknowns - m.rank());
            for b in &basis {
                assert!(m.mul_vec(b).iter().all(Scalar::is_zero));
            }
        }
    }
}
