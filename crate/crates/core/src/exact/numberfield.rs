use super::poly::minpoly_delta;
use super::{q, rational_string, Rational, Scalar};


/// Element of the real cyclotomic field ℚ(δ), δ = 2cos(π/n), stored as
/// a polynomial in δ reduced modulo Ψ_n. `field_tag = 0` marks a plain
/// rational, which embeds into every ℚ(δ); arithmetic unifies the tags
/// and refuses to mix two distinct nonzero tags.
#[derive(Clone, Debug, PartialEq)]
pub struct NumberFieldElem {
    field_tag: u32,
    coeffs: Vec<Rational>,
}

fn psi(n: u32) -> Vec<Rational> {
    minpoly_delta(n)
        .expect("field tag must be >= 3")
        .into_iter()
        .map(Rational::from_integer)
        .collect()
}

fn field_degree(n: u32) -> usize {
    psi(n).len() - 1
}

/// Reduce a polynomial in δ modulo Ψ_n (Ψ monic).
fn reduce_mod_psi(mut v: Vec<Rational>, psi: &[Rational]) -> Vec<Rational> {
    let deg = psi.len() - 1;
    while v.len() > deg {
        let top = v.pop().unwrap();
        if !Scalar::is_zero(&top) {
            let shift = v.len() - deg;
            for (k, pk) in psi.iter().take(deg).enumerate() {
                let t = &top * pk;
                v[shift + k] = &v[shift + k] - t;
            }
        }
    }
    v.resize(deg, q(0));
    v
}

impl NumberFieldElem {
    pub fn rational(x: Rational) -> Self {
        Self { field_tag: 0, coeffs: vec![x] }
    }

    pub fn from_int(x: i64) -> Self {
        Self::rational(q(x))
    }

    /// The generator δ = 2cos(π/n) of ℚ(δ).
    pub fn delta(n: u32) -> Self {
        let deg = field_degree(n);
        let mut coeffs = vec![q(0); deg];
        if deg == 1 {
            // Ψ_n = y - c, so δ is the rational c
            coeffs[0] = -psi(n)[0].clone();
        } else {
            coeffs[1] = q(1);
        }
        Self { field_tag: n, coeffs }
    }

    /// Build from explicit coefficients (length must match deg Ψ_n).
    pub fn from_coeffs(n: u32, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), field_degree(n), "coefficient length must equal deg Psi_n");
        Self { field_tag: n, coeffs }.normalized()
    }

    pub fn field_tag(&self) -> u32 {
        self.field_tag
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Rational part check: returns Some(rational value) if the element
    /// lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(Scalar::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn normalized(mut self) -> Self {
        if self.field_tag != 0 && self.coeffs.iter().skip(1).all(Scalar::is_zero) {
            self.coeffs.truncate(1);
            self.field_tag = 0;
        }
        self
    }

    fn unified(&self, other: &Self) -> u32 {
        match (self.field_tag, other.field_tag) {
            (0, t) | (t, 0) => t,
            (a, b) if a == b => a,
            (a, b) => panic!("field tag mismatch: {a} vs {b}"),
        }
    }

    fn lift(&self, n: u32) -> Vec<Rational> {
        if n == 0 {
            return self.coeffs.clone();
        }
        let deg = field_degree(n);
        let mut v = self.coeffs.clone();
        assert!(v.len() <= deg);
        v.resize(deg, q(0));
        v
    }
}

impl Scalar for NumberFieldElem {
    fn zero() -> Self {
        Self::rational(q(0))
    }

    fn one() -> Self {
        Self::rational(q(1))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.unified(other);
        let mut a = self.lift(n);
        let b = other.lift(n);
        for (x, y) in a.iter_mut().zip(&b) {
            *x = &*x + y;
        }
        Self { field_tag: n, coeffs: a }.normalized()
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.unified(other);
        if n == 0 {
            return Self::rational(&self.coeffs[0] * &other.coeffs[0]);
        }
        let a = self.lift(n);
        let b = other.lift(n);
        let mut prod = vec![q(0); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            if Scalar::is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                prod[i + j] = &prod[i + j] + ai * bj;
            }
        }
        let coeffs = reduce_mod_psi(prod, &psi(n));
        Self { field_tag: n, coeffs }.normalized()
    }

    fn neg(&self) -> Self {
        Self {
            field_tag: self.field_tag,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn inv(&self) -> Self {
        assert!(!Scalar::is_zero(self), "inverse of zero number field element");
        if self.field_tag == 0 {
            return Self::rational(self.coeffs[0].recip());
        }
        // extended Euclid in ℚ[y]: u*self + v*Psi = gcd = const
        let n = self.field_tag;
        let modulus = psi(n);
        let trim = |mut v: Vec<Rational>| {
            while v.len() > 1 && Scalar::is_zero(v.last().unwrap()) {
                v.pop();
            }
            v
        };
        let mut r0 = trim(modulus.clone());
        let mut r1 = trim(self.coeffs.clone());
        let mut s0: Vec<Rational> = vec![q(0)];
        let mut s1: Vec<Rational> = vec![q(1)];
        while !(r1.len() == 1 && Scalar::is_zero(&r1[0])) {
            // divide r0 by r1
            let mut rem = r0.clone();
            let mut quot = vec![q(0); rem.len().saturating_sub(r1.len()) + 1];
            let lead = r1.last().unwrap().clone();
            while rem.len() >= r1.len() && !(rem.len() == 1 && Scalar::is_zero(&rem[0])) {
                let rl = rem.len() - 1;
                if Scalar::is_zero(&rem[rl]) {
                    if rem.len() == 1 {
                        break;
                    }
                    rem.pop();
                    continue;
                }
                let c = &rem[rl] / &lead;
                let shift = rl + 1 - r1.len();
                quot[shift] = &quot[shift] + &c;
                for (k, dk) in r1.iter().enumerate() {
                    rem[shift + k] = &rem[shift + k] - &c * dk;
                }
                rem = trim(rem);
            }
            // s_next = s0 - quot * s1
            let mut s_next = vec![q(0); (quot.len() + s1.len()).max(s0.len() + 1) - 1];
            for (i, x) in s0.iter().enumerate() {
                s_next[i] = &s_next[i] + x;
            }
            for (i, qi) in quot.iter().enumerate() {
                if Scalar::is_zero(qi) {
                    continue;
                }
                for (j, sj) in s1.iter().enumerate() {
                    s_next[i + j] = &s_next[i + j] - qi * sj;
                }
            }
            r0 = r1;
            r1 = trim(rem);
            s0 = s1;
            s1 = trim(s_next);
        }
        assert_eq!(r0.len(), 1, "Psi_n must be irreducible, nonconstant gcd found");
        let g = r0[0].clone();
        let coeffs: Vec<Rational> = s0.iter().map(|c| c / &g).collect();
        let coeffs = reduce_mod_psi(coeffs, &psi(n));
        Self { field_tag: n, coeffs }.normalized()
    }
}

impl std::fmt::Display for NumberFieldElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if Scalar::is_zero(self) {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if Scalar::is_zero(c) {
                continue;
            }
            let cs = rational_string(c);
            parts.push(match i {
                0 => cs,
                1 => format!("{cs}*d"),
                _ => format!("{cs}*d^{i}"),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Quantum integer [k] in ℚ(δ): [0] = 0, [1] = 1, [k+1] = δ[k] − [k−1].
pub fn quantum_integer(k: u32, n: u32) -> NumberFieldElem {
    let delta = NumberFieldElem::delta(n);
    let mut prev = NumberFieldElem::zero();
    let mut cur = NumberFieldElem::one();
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = delta.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integer_examples() {
        for n in 3..=12 {
            assert_eq!(quantum_integer(1, n), NumberFieldElem::one(), "[1] at n={n}");
            assert!(Scalar::is_zero(&quantum_integer(n, n)), "[n] must vanish at n={n}");
        }
        // [3] at n=4: delta^2 - 1 = 1
        assert_eq!(quantum_integer(3, 4), NumberFieldElem::one());
    }

    #[test]
    fn quantum_integer_recurrence_identity() {
        // [k][2] = [k+1] + [k-1]
        for n in 3..=12 {
            let two = quantum_integer(2, n);
            for k in 1..n {
                let lhs = quantum_integer(k, n).mul(&two);
                let rhs = quantum_integer(k + 1, n).add(&quantum_integer(k - 1, n));
                assert_eq!(lhs, rhs, "[k][2] = [k+1]+[k-1] at k={k}, n={n}");
            }
        }
    }

    #[test]
    fn field_inverse() {
        // deterministic "random" sweep: a_i built from a small LCG
        let mut state: u64 = 0x9E3779B97F4A7C15;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 7) - 3
        };
        for n in 3..=12u32 {
            let deg = field_degree(n);
            let mut tested = 0;
            while tested < 100 {
                let coeffs: Vec<Rational> = (0..deg).map(|_| q(next())).collect();
                let x = NumberFieldElem { field_tag: n, coeffs }.normalized();
                if Scalar::is_zero(&x) {
                    continue;
                }
                tested += 1;
                let y = x.inv();
                assert_eq!(x.mul(&y), NumberFieldElem::one(), "x * x^-1 = 1 at n={n}");
            }
        }
    }

    #[test]
    fn associativity_sweep() {
        let mut state: u64 = 42;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 5) - 2
        };
        for n in 3..=12u32 {
            let deg = field_degree(n);
            for _ in 0..20 {
                let mk = |next: &mut dyn FnMut() -> i64| NumberFieldElem {
                    field_tag: n,
                    coeffs: (0..deg).map(|_| q(next())).collect(),
                }
                .normalized();
                let a = mk(&mut next);
                let b = mk(&mut next);
                let c = mk(&mut next);
                assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            }
        }
    }

    #[test]
    fn mixed_tag_arithmetic() {
        let two = NumberFieldElem::from_int(2);
        let d = NumberFieldElem::delta(4);
        let x = d.mul(&d); // = 2 as a rational
        assert_eq!(x, two);
        assert_eq!(x.field_tag(), 0, "delta^2 at n=4 collapses to the rational 2");
        assert_eq!(two.add(&d).sub(&d), two);
    }

    #[test]
    #[should_panic(expected = "field tag mismatch")]
    fn mismatched_tags_panic() {
        let a = NumberFieldElem::delta(5);
        let b = NumberFieldElem::delta(7);
        let _ = a.add(&b);
    }
}
