//! Dense univariate polynomials over an exact field, to the extent the
//! Fitting machinery needs: gcd, squarefree decomposition, minimal
//! polynomials of matrices, and root splitting.
//!
//! Coefficients are stored low-to-high and kept trimmed.  Full factorization
//! is deliberately out of scope: splits stop at squarefree factors plus root
//! extraction, and a rootless non-linear factor is simply carried along for
//! the caller to reject with a typed error if it blocks a needed split.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;
use crate::matrix::Matrix;
use crate::{Error, Result};

pub type Poly<F> = Vec<<F as Field>::Elem>;

pub fn trim<F: Field>(f: &F, p: &mut Poly<F>) {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
}

pub fn degree<E>(p: &[E]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn make_monic<F: Field>(f: &F, mut p: Poly<F>) -> Poly<F> {
    trim(f, &mut p);
    if let Some(lead) = p.last().cloned() {
        if !f.is_one(&lead) {
            let li = f.inv(&lead).expect("nonzero lead");
            for c in p.iter_mut() {
                *c = f.mul(c, &li);
            }
        }
    }
    p
}

pub fn mul<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if f.is_zero(ai) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(ai, bj));
        }
    }
    let mut out = out;
    trim(f, &mut out);
    out
}

/// Quotient and remainder by a nonzero divisor.
pub fn divrem<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> (Poly<F>, Poly<F>) {
    let mut rem = a.clone();
    trim(f, &mut rem);
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = f.inv(b.last().unwrap()).expect("nonzero lead");
    let mut quot = vec![f.zero(); rem.len().saturating_sub(db)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = f.mul(rem.last().unwrap(), &lead_inv);
        let shift = dr - db;
        quot[shift] = c.clone();
        for (j, bj) in b.iter().enumerate() {
            let t = f.sub(&rem[shift + j], &f.mul(&c, bj));
            rem[shift + j] = t;
        }
        trim(f, &mut rem);
    }
    let mut quot = quot;
    trim(f, &mut quot);
    (quot, rem)
}

/// Monic gcd.
pub fn gcd<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(f, &mut x);
    trim(f, &mut y);
    while !y.is_empty() {
        let (_, r) = divrem(f, &x, &y);
        x = y;
        y = r;
    }
    make_monic(f, x)
}

pub fn derivative<F: Field>(f: &F, p: &Poly<F>) -> Poly<F> {
    let mut out = Vec::new();
    for (i, c) in p.iter().enumerate().skip(1) {
        out.push(f.mul(c, &f.from_i64(i as i64)));
    }
    trim(f, &mut out);
    out
}

pub fn eval<F: Field>(f: &F, p: &Poly<F>, x: &F::Elem) -> F::Elem {
    let mut acc = f.zero();
    for c in p.iter().rev() {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

/// Substitute a matrix into the polynomial.
pub fn eval_matrix<F: Field>(f: &F, p: &Poly<F>, m: &Matrix<F>) -> Matrix<F> {
    let n = m.rows;
    let mut acc = Matrix::zero(f.clone(), n, n);
    for c in p.iter().rev() {
        acc = acc.mul(m).unwrap();
        for i in 0..n {
            let v = f.add(acc.at(i, i), c);
            acc.set(i, i, v);
        }
    }
    acc
}

/// Squarefree decomposition: pairwise coprime monic squarefree factors with
/// multiplicities whose weighted product is the (monic) input.
///
/// Musser's algorithm; in characteristic p the derivative-killed residue is a
/// p-th power whose root is recursed on (over a prime field the p-th root of
/// a coefficient is itself).
pub fn squarefree_decomposition<F: Field>(f: &F, p: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let p = make_monic(f, p.clone());
    let Some(d) = degree(&p) else {
        return vec![];
    };
    if d == 0 {
        return vec![];
    }
    let dp = derivative(f, &p);
    if dp.is_empty() {
        // Characteristic p and p = g(t^p).
        let q = f.characteristic() as usize;
        debug_assert!(q > 0);
        let mut g = Vec::new();
        for (i, c) in p.iter().enumerate() {
            if i % q == 0 {
                g.push(c.clone());
            } else {
                debug_assert!(f.is_zero(c));
            }
        }
        return squarefree_decomposition(f, &g)
            .into_iter()
            .map(|(fac, m)| (fac, m * q))
            .collect();
    }
    let g0 = gcd(f, &p, &dp);
    let mut out = Vec::new();
    let mut w = divrem(f, &p, &g0).0;
    let mut g = g0;
    let mut i = 1usize;
    while degree(&w).is_some_and(|d| d > 0) {
        let y = gcd(f, &w, &g);
        let fac = divrem(f, &w, &y).0;
        if degree(&fac).is_some_and(|d| d > 0) {
            out.push((make_monic(f, fac), i));
        }
        g = divrem(f, &g, &y).0;
        w = y;
        i += 1;
    }
    if degree(&g).is_some_and(|d| d > 0) {
        // Residual p-th power part.
        for (fac, m) in squarefree_decomposition(f, &g) {
            out.push((fac, m));
        }
    }
    out
}

/// Minimal polynomial of a square matrix, monic, via Krylov spans seeded at
/// each standard basis vector (the lcm of the per-seed annihilators).
pub fn minimal_polynomial<F: Field>(f: &F, m: &Matrix<F>) -> Result<Poly<F>> {
    if m.rows != m.cols {
        return Err(Error::NonSquare);
    }
    let n = m.rows;
    if n == 0 {
        return Ok(vec![f.one()]);
    }
    let mut min: Poly<F> = vec![f.one()];
    for seed in 0..n {
        // Krylov chain v, Mv, M^2 v, ... until dependence.
        let mut chain: Vec<Vec<F::Elem>> = Vec::new();
        let mut v = vec![f.zero(); n];
        v[seed] = f.one();
        loop {
            // Does v depend on the chain so far?
            let span = Matrix::from_fn(f.clone(), n, chain.len(), |i, j| chain[j][i].clone());
            let rhs = Matrix::column(f.clone(), v.clone());
            if let Some(sol) = span.rref_rank_solve(Some(&rhs))?.solution {
                // Annihilator: t^k - sum sol_j t^j.
                let k = chain.len();
                let mut ann = vec![f.zero(); k + 1];
                for j in 0..k {
                    ann[j] = f.neg(sol.at(j, 0));
                }
                ann[k] = f.one();
                let g = gcd(f, &min, &ann);
                let (q, _) = divrem(f, &ann, &g);
                min = make_monic(f, mul(f, &min, &q));
                break;
            }
            chain.push(v.clone());
            v = m.apply(&v);
        }
        if degree(&min) == Some(n) {
            break;
        }
    }
    Ok(min)
}

/// Squarefree-plus-roots presentation of the minimal polynomial of `m`:
/// pairwise coprime factors (linear where a root exists in the field) with
/// multiplicities, whose weighted product is the minimal polynomial.
pub fn minpoly_squarefree<F: Field>(f: &F, m: &Matrix<F>) -> Result<Vec<(Poly<F>, usize)>> {
    let min = minimal_polynomial(f, m)?;
    let mut out = Vec::new();
    for (fac, mult) in squarefree_decomposition(f, &min) {
        let (roots, rest) = f.roots_of_squarefree(&fac);
        for r in roots {
            out.push((vec![f.neg(&r), f.one()], mult));
        }
        if degree(&rest).is_some_and(|d| d > 0) {
            out.push((rest, mult));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn q() -> Rationals {
        Rationals
    }

    fn p(coeffs: &[i64]) -> Poly<Rationals> {
        coeffs.iter().map(|c| q().from_i64(*c)).collect()
    }

    #[test]
    fn gcd_and_divrem() {
        // (t-1)(t-2) and (t-1)(t-3) have gcd t-1.
        let a = mul(&q(), &p(&[-1, 1]), &p(&[-2, 1]));
        let b = mul(&q(), &p(&[-1, 1]), &p(&[-3, 1]));
        assert_eq!(gcd(&q(), &a, &b), p(&[-1, 1]));
        let (quot, rem) = divrem(&q(), &a, &p(&[-1, 1]));
        assert_eq!(quot, p(&[-2, 1]));
        assert!(rem.is_empty());
    }

    #[test]
    fn squarefree_of_cube_times_linear() {
        // (t-1)^3 (t+1)
        let c = mul(
            &q(),
            &mul(&q(), &p(&[-1, 1]), &p(&[-1, 1])),
            &mul(&q(), &p(&[-1, 1]), &p(&[1, 1])),
        );
        let mut sf = squarefree_decomposition(&q(), &c);
        sf.sort_by_key(|(_, m)| *m);
        assert_eq!(sf, alloc::vec![(p(&[1, 1]), 1), (p(&[-1, 1]), 3)]);
    }

    #[test]
    fn minpoly_identity_is_t_minus_one() {
        let m = Matrix::identity(q(), 2);
        let facs = minpoly_squarefree(&q(), &m).unwrap();
        assert_eq!(facs, alloc::vec![(p(&[-1, 1]), 1)]);
    }

    #[test]
    fn minpoly_nilpotent_jordan_block() {
        // J_2(0): minimal polynomial t^2.
        let mut m = Matrix::zero(q(), 2, 2);
        m.set(0, 1, q().one());
        let facs = minpoly_squarefree(&q(), &m).unwrap();
        assert_eq!(facs, alloc::vec![(p(&[0, 1]), 2)]);
    }

    // Oracle: direct evaluation.  diag(0,1) is annihilated by t(t-1) and by
    // no proper divisor, so the factors are t and t-1, each once.
    #[test]
    fn minpoly_diag_01_splits() {
        let mut m = Matrix::zero(q(), 2, 2);
        m.set(1, 1, q().one());
        let mut facs = minpoly_squarefree(&q(), &m).unwrap();
        facs.sort_by_key(|(f, _)| f.len());
        // both linear; order by constant term
        facs.sort_by(|(a, _), (b, _)| {
            alloc::format!("{a:?}").cmp(&alloc::format!("{b:?}"))
        });
        assert_eq!(facs.len(), 2);
        assert!(facs.iter().all(|(_, m)| *m == 1));
        let mut consts: Vec<_> = facs.iter().map(|(f, _)| f[0].clone()).collect();
        consts.sort();
        assert_eq!(consts, alloc::vec![q().from_i64(-1), q().from_i64(0)]);
        // product of factors^mult annihilates the matrix
        let prod = facs
            .iter()
            .fold(alloc::vec![q().one()], |acc, (f, _)| mul(&q(), &acc, f));
        assert!(eval_matrix(&q(), &prod, &m).is_zero());
    }
}
