use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num::{BigInt, Zero};

/// Integer polynomial, dense, lowest degree first, no trailing zeros.
fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(out)
}

/// Exact division of integer polynomials; panics if it does not divide.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dl = den.len() - 1;
    let lead = den.last().unwrap().clone();
    assert!(!lead.is_zero());
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dl)];
    while rem.len() > dl || (rem.len() == dl + 1 && !rem.last().unwrap().is_zero()) {
        let rl = rem.len() - 1;
        if rem[rl].is_zero() {
            rem.pop();
            continue;
        }
        let c = &rem[rl] / &lead;
        assert_eq!(&c * &lead, rem[rl], "non-exact polynomial division");
        let shift = rl - dl;
        quot[shift] = c.clone();
        for (k, dk) in den.iter().enumerate() {
            let t = &c * dk;
            rem[shift + k] -= t;
        }
        rem = trim(rem);
        if rem.len() == 1 && rem[0].is_zero() {
            break;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    trim(quot)
}

/// Cyclotomic polynomial Φ_m, by dividing x^m - 1 by all proper Φ_d.
fn cyclotomic(m: u64) -> Vec<BigInt> {
    fn go(m: u64, cache: &mut HashMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
        if let Some(p) = cache.get(&m) {
            return p.clone();
        }
        let mut num = vec![BigInt::zero(); (m + 1) as usize];
        num[0] = BigInt::from(-1);
        num[m as usize] = BigInt::from(1);
        let mut num = trim(num);
        for d in 1..m {
            if m % d == 0 {
                let phi_d = go(d, cache);
                num = poly_div_exact(&num, &phi_d);
            }
        }
        cache.insert(m, num.clone());
        num
    }
    let mut cache = HashMap::new();
    go(m, &mut cache)
}

/// Minimal polynomial Ψ_n of δ = 2cos(π/n) over ℚ, monic with integer
/// coefficients, degree φ(2n)/2. Derived from Φ_{2n} via x = y + 1/y:
/// Φ_{2n}(x) = x^m · Ψ_n(x + 1/x) with m = φ(2n)/2, using the
/// palindromic symmetry of Φ_{2n}. Results are cached per n.
pub fn minpoly_delta(n: u32) -> Result<Vec<BigInt>, String> {
    if n < 3 {
        return Err(format!("minpoly_delta requires n >= 3, got {n}"));
    }
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return Ok(p.clone());
    }
    let phi = cyclotomic(2 * n as u64);
    let deg = phi.len() - 1;
    assert!(deg % 2 == 0, "cyclotomic degree must be even for 2n > 2");
    let m = deg / 2;
    // check palindrome a_{m+k} = a_{m-k}
    for k in 0..=m {
        assert_eq!(phi[m + k], phi[m - k], "cyclotomic polynomial not palindromic");
    }
    // p_k(y) represents x^k + x^{-k}: p_0 = 2, p_1 = y, p_{k+1} = y p_k - p_{k-1}
    let mut psi = vec![BigInt::zero(); m + 1];
    psi[0] = phi[m].clone();
    let mut p_prev: Vec<BigInt> = vec![BigInt::from(2)];
    let mut p_cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::from(1)];
    for k in 1..=m {
        for (i, c) in p_cur.iter().enumerate() {
            psi[i] += &phi[m + k] * c;
        }
        if k < m {
            // y * p_cur - p_prev
            let mut next = vec![BigInt::zero(); p_cur.len() + 1];
            for (i, c) in p_cur.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            for (i, c) in p_prev.iter().enumerate() {
                next[i] -= c;
            }
            p_prev = p_cur;
            p_cur = trim(next);
        }
    }
    let psi = trim(psi);
    assert_eq!(psi.len(), m + 1, "Psi_n degree mismatch");
    assert_eq!(psi[m], BigInt::from(1), "Psi_n must be monic");
    cache.lock().unwrap().insert(n, psi.clone());
    Ok(psi)
}

/// Laurent polynomial with integer coefficients; no zero coefficients
/// stored. Only the decategorified reports use this (everything runs at
/// v = 1 internally).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentIntPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentIntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(exp: i64, coeff: i64) -> Self {
        let mut p = Self::default();
        p.add_term(exp, BigInt::from(coeff));
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Specialization v = 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }
}

impl std::fmt::Display for LaurentIntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*v")?,
                _ => write!(f, "{c}*v^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), ints(&[1, 1]));
        assert_eq!(cyclotomic(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn minpoly_examples() {
        // 2cos(pi/3) = 1
        assert_eq!(minpoly_delta(3).unwrap(), ints(&[-1, 1]));
        // 2cos(pi/4) = sqrt(2): y^2 - 2
        assert_eq!(minpoly_delta(4).unwrap(), ints(&[-2, 0, 1]));
        // 2cos(pi/6) = sqrt(3): y^2 - 3
        assert_eq!(minpoly_delta(6).unwrap(), ints(&[-3, 0, 1]));
        // golden-ratio case: y^2 - y - 1
        assert_eq!(minpoly_delta(5).unwrap(), ints(&[-1, -1, 1]));
        assert!(minpoly_delta(2).is_err());
    }

    #[test]
    fn minpoly_degree_is_half_totient() {
        fn totient(mut m: u64) -> u64 {
            let mut result = m;
            let mut p = 2;
            while p * p <= m {
                if m % p == 0 {
                    while m % p == 0 {
                        m /= p;
                    }
                    result -= result / p;
                }
                p += 1;
            }
            if m > 1 {
                result -= result / m;
            }
            result
        }
        for n in 3..=16u32 {
            let psi = minpoly_delta(n).unwrap();
            assert_eq!(psi.len() as u64 - 1, totient(2 * n as u64) / 2, "n = {n}");
        }
    }

    #[test]
    fn laurent_arith() {
        let p = LaurentIntPoly::term(1, 2).add(&LaurentIntPoly::term(-1, 2));
        let sq = p.mul(&p);
        assert_eq!(sq.eval_at_one(), BigInt::from(16));
        assert_eq!(format!("{p}"), "2*v^-1 + 2*v");
        let z = p.add(&p.mul(&LaurentIntPoly::term(0, -1)));
        assert!(z.is_zero());
    }
}
