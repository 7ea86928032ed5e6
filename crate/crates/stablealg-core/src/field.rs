//! Exact ground fields: the rationals and prime fields.
//!
//! A [`Field`] value is a lightweight context object (the Algebraeon-style
//! "structure" pattern): `Rationals` is zero-sized, `PrimeField` carries its
//! modulus.  Every matrix, algebra and module stores a copy of its field and
//! all arithmetic goes through it, so a prime modulus chosen at runtime needs
//! no type-level plumbing.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact field with the operations the workbench needs.
///
/// `roots_of_squarefree` reports the roots in the field of a squarefree
/// polynomial together with the rootless cofactor; it is what equal-degree
/// Fitting splits reduce to.  It may miss roots only by returning them inside
/// the cofactor, never by inventing any.
pub trait Field: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` exactly on zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// 0 for the rationals, p for a prime field.
    fn characteristic(&self) -> u64;
    /// Roots in the field of a squarefree polynomial (low-to-high
    /// coefficients), plus the monic rootless remainder factor.
    fn roots_of_squarefree(&self, poly: &[Self::Elem]) -> (Vec<Self::Elem>, Vec<Self::Elem>);
    /// Human-readable field tag, e.g. `Q` or `F101`.
    fn describe(&self) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// The field of rational numbers with arbitrary-precision arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn roots_of_squarefree(&self, poly: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        rational_roots(poly)
    }
    fn describe(&self) -> String {
        String::from("Q")
    }
}

/// The prime field F_p for a fixed prime modulus.
///
/// Elements are canonical residues in `0..p`; `p` is assumed to fit
/// comfortably below 2^31 so products never overflow an `i128`/`u64` mix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Create F_p.  The modulus must be a prime in `2..2^31`.
    pub fn new(p: u64) -> Option<Self> {
        if (2..1u64 << 31).contains(&p) && is_prime(p) {
            Some(PrimeField { p })
        } else {
            None
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Extended Euclid on (a, p).
        let (mut r0, mut r1) = (*a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some((s0.rem_euclid(self.p as i128)) as u64)
    }
    fn from_i64(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.p as i128) as u64
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn roots_of_squarefree(&self, poly: &[u64]) -> (Vec<u64>, Vec<u64>) {
        // Brute force over the residues; fine for the moduli this crate is
        // used with.  Repeated synthetic division keeps the cofactor exact.
        let mut rest: Vec<u64> = poly.to_vec();
        let mut roots = Vec::new();
        let mut x = 0u64;
        while x < self.p && rest.len() > 1 {
            if eval_fp(self, &rest, x) == 0 {
                rest = synth_div_fp(self, &rest, x);
                roots.push(x);
                // A squarefree polynomial has simple roots only.
            }
            x += 1;
        }
        let rest = make_monic_fp(self, rest);
        (roots, rest)
    }
    fn describe(&self) -> String {
        let mut s = String::from("F");
        push_u64(&mut s, self.p);
        s
    }
}

fn push_u64(s: &mut String, mut n: u64) {
    let mut digits = Vec::new();
    if n == 0 {
        digits.push(b'0');
    }
    while n > 0 {
        digits.push(b'0' + (n % 10) as u8);
        n /= 10;
    }
    for d in digits.iter().rev() {
        s.push(*d as char);
    }
}

fn eval_fp(f: &PrimeField, poly: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for c in poly.iter().rev() {
        acc = f.add(&f.mul(&acc, &x), c);
    }
    acc
}

fn synth_div_fp(f: &PrimeField, poly: &[u64], root: u64) -> Vec<u64> {
    // poly / (t - root), exact when root is a root.
    let n = poly.len();
    let mut q = vec![0u64; n - 1];
    let mut carry = 0u64;
    for i in (0..n - 1).rev() {
        carry = f.add(&poly[i + 1], &f.mul(&carry, &root));
        q[i] = carry;
    }
    debug_assert_eq!(eval_fp(f, poly, root), 0);
    q
}

fn make_monic_fp(f: &PrimeField, mut poly: Vec<u64>) -> Vec<u64> {
    while poly.last().is_some_and(|c| *c == 0) {
        poly.pop();
    }
    if let Some(lead) = poly.last().copied() {
        if lead != 1 {
            let li = f.inv(&lead).unwrap();
            for c in poly.iter_mut() {
                *c = f.mul(c, &li);
            }
        }
    }
    poly
}

/// Rational roots of a squarefree polynomial over Q, by the rational root
/// theorem on the primitive integer model.  Divisor enumeration uses trial
/// division with a bound; if a coefficient resists factoring, the unexplored
/// candidates stay in the cofactor (reported rootless rather than wrong).
fn rational_roots(poly: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rest: Vec<BigRational> = poly.to_vec();
    trim_q(&mut rest);
    let mut roots: Vec<BigRational> = Vec::new();
    if rest.len() <= 1 {
        return (roots, make_monic_q(rest));
    }
    loop {
        trim_q(&mut rest);
        if rest.len() <= 1 {
            break;
        }
        if rest.len() == 2 {
            // Linear: root is -c0/c1.
            let r = -(&rest[0] / &rest[1]);
            roots.push(r);
            rest = vec![BigRational::one()];
            break;
        }
        // Zero constant term: t divides.
        if rest[0].is_zero() {
            roots.push(BigRational::zero());
            rest.remove(0);
            continue;
        }
        // Integer model: clear denominators.
        let mut denom_lcm = BigInt::one();
        for c in &rest {
            denom_lcm = num_integer::lcm(denom_lcm.clone(), c.denom().clone());
        }
        let ints: Vec<BigInt> = rest
            .iter()
            .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let a0 = ints[0].magnitude().clone();
        let an = ints.last().unwrap().magnitude().clone();
        let (p_divs, p_complete) = divisors(&BigInt::from(a0));
        let (q_divs, q_complete) = divisors(&BigInt::from(an));
        let mut found = None;
        'search: for p in &p_divs {
            for q in &q_divs {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(p * BigInt::from(sign), q.clone());
                    if eval_q(&rest, &cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some(r) => {
                rest = synth_div_q(&rest, &r);
                roots.push(r);
            }
            None => {
                // No rational root among the enumerated candidates.  When the
                // divisor lists were complete this is a proof; otherwise the
                // factor is merely treated as rootless, which downstream code
                // surfaces as a NonSplitField condition instead of an error
                // in the arithmetic.
                let _ = (p_complete, q_complete);
                break;
            }
        }
    }
    (roots, make_monic_q(rest))
}

fn trim_q(poly: &mut Vec<BigRational>) {
    while poly.last().is_some_and(|c| c.is_zero()) {
        poly.pop();
    }
}

fn make_monic_q(mut poly: Vec<BigRational>) -> Vec<BigRational> {
    trim_q(&mut poly);
    if let Some(lead) = poly.last().cloned() {
        if !lead.is_one() {
            for c in poly.iter_mut() {
                *c /= lead.clone();
            }
        }
    }
    poly
}

fn eval_q(poly: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in poly.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn synth_div_q(poly: &[BigRational], root: &BigRational) -> Vec<BigRational> {
    let n = poly.len();
    let mut q = vec![BigRational::zero(); n - 1];
    let mut carry = BigRational::zero();
    for i in (0..n - 1).rev() {
        carry = &poly[i + 1] + carry * root;
        q[i] = carry.clone();
    }
    q
}

/// Positive divisors of |n|.  The boolean reports whether the list is
/// provably complete (trial division exhausted every prime factor within the
/// bound).
fn divisors(n: &BigInt) -> (Vec<BigInt>, bool) {
    let mut m = n.abs();
    if m.is_zero() {
        return (vec![BigInt::one()], true);
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut complete = true;
    let bound = BigInt::from(1u64 << 20);
    let mut d = BigInt::from(2u8);
    while &d * &d <= m && d <= bound {
        let mut e = 0u32;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if m > BigInt::one() {
        if &m * &m > BigInt::from(1u128 << 40) && m > bound {
            // Remainder may be composite; its divisors are not enumerated.
            complete = m < bound;
        }
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for dv in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(dv * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    (divs, complete)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverses() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101 {
            let ai = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &ai), 1);
        }
        assert!(f.inv(&0).is_none());
        assert!(PrimeField::new(100).is_none());
    }

    #[test]
    fn rational_root_extraction() {
        let q = Rationals;
        // (t - 1)(t + 2)(2t - 3) = 2t^3 - t^2 - 7t + 6, roots 1, -2, 3/2.
        let poly = [
            q.from_i64(6),
            q.from_i64(-7),
            q.from_i64(-1),
            q.from_i64(2),
        ];
        let (mut roots, rest) = q.roots_of_squarefree(&poly);
        roots.sort();
        assert_eq!(
            roots,
            alloc::vec![
                q.from_i64(-2),
                q.from_i64(1),
                BigRational::new(BigInt::from(3), BigInt::from(2)),
            ]
        );
        assert_eq!(rest, alloc::vec![q.one()]);
    }

    #[test]
    fn irreducible_quadratic_stays_in_cofactor() {
        let q = Rationals;
        // t^2 + 1 has no rational roots.
        let poly = [q.one(), q.zero(), q.one()];
        let (roots, rest) = q.roots_of_squarefree(&poly);
        assert!(roots.is_empty());
        assert_eq!(rest.len(), 3);
    }

    #[test]
    fn fp_roots_brute_force() {
        let f = PrimeField::new(7).unwrap();
        // t^2 - 1 over F_7: roots 1 and 6.
        let poly = [f.from_i64(-1), 0, 1];
        let (roots, rest) = f.roots_of_squarefree(&poly);
        assert_eq!(roots, alloc::vec![1, 6]);
        assert_eq!(rest, alloc::vec![1]);
    }
}
