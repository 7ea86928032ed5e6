//! Finite-dimensional associative algebras as structure constants over an
//! exact field, with a distinguished set of orthogonal idempotents.
//!
//! Everything downstream (modules, homology, invariants) works against this
//! one representation; quivers, centralizers, endomorphism rings and surgery
//! are just different builders for it.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;
use crate::matrix::Matrix;
use crate::{Error, Result};

/// Where an algebra came from; carried along for reports.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    Quiver,
    Centralizer,
    Endomorphism,
    Surgery,
    StructureConstants,
    Quotient,
    Opposite,
    Zero,
}

#[derive(Clone, Debug)]
pub struct Algebra<F: Field> {
    field: F,
    dim: usize,
    labels: Vec<String>,
    /// `table[i][j]` = coordinates of `b_i * b_j` in the basis.
    table: Vec<Vec<Vec<F::Elem>>>,
    one: Vec<F::Elem>,
    /// Orthogonal idempotents summing to the unit; primitive for every
    /// builder in this crate.
    idempotents: Vec<Vec<F::Elem>>,
    idempotent_labels: Vec<String>,
    provenance: Provenance,
    /// Indices of a generating subset of the basis (with the unit).
    generators: Vec<usize>,
    /// Certified Jacobson radical, cached at construction.
    radical_basis: Matrix<F>,
}

impl<F: Field> Algebra<F> {
    /// Build and fully validate: associativity on all basis triples, unit
    /// axioms, idempotent orthogonality and decomposition of the unit.
    /// Primitivity of the idempotents is the builder's contract, not checked
    /// here (it needs module decomposition).  The radical is computed and
    /// certified up front; a field over which it cannot be certified is
    /// reported as `RadicalUnavailable`.
    pub fn new(
        field: F,
        labels: Vec<String>,
        table: Vec<Vec<Vec<F::Elem>>>,
        one: Vec<F::Elem>,
        idempotents: Vec<Vec<F::Elem>>,
        idempotent_labels: Vec<String>,
        provenance: Provenance,
    ) -> Result<Self> {
        let mut a = Self::assemble(
            field,
            labels,
            table,
            one,
            idempotents,
            idempotent_labels,
            provenance,
        );
        a.validate()?;
        a.generators = a.compute_generators();
        a.radical_basis = a.compute_radical()?;
        Ok(a)
    }

    /// Internal builder for constructions that are correct by construction;
    /// still computes the radical and panics if it is not certifiable.
    pub fn new_unchecked(
        field: F,
        labels: Vec<String>,
        table: Vec<Vec<Vec<F::Elem>>>,
        one: Vec<F::Elem>,
        idempotents: Vec<Vec<F::Elem>>,
        idempotent_labels: Vec<String>,
        provenance: Provenance,
    ) -> Self {
        let mut a = Self::assemble(
            field,
            labels,
            table,
            one,
            idempotents,
            idempotent_labels,
            provenance,
        );
        debug_assert!(a.validate().is_ok());
        a.generators = a.compute_generators();
        a.radical_basis = a.compute_radical().expect("radical certification");
        a
    }

    fn assemble(
        field: F,
        labels: Vec<String>,
        table: Vec<Vec<Vec<F::Elem>>>,
        one: Vec<F::Elem>,
        idempotents: Vec<Vec<F::Elem>>,
        idempotent_labels: Vec<String>,
        provenance: Provenance,
    ) -> Self {
        let dim = labels.len();
        let radical_basis = Matrix::zero(field.clone(), dim, 0);
        Algebra {
            field,
            dim,
            labels,
            table,
            one,
            idempotents,
            idempotent_labels,
            provenance,
            generators: Vec::new(),
            radical_basis,
        }
    }

    /// The zero algebra.
    pub fn zero(field: F) -> Self {
        Algebra {
            field: field.clone(),
            dim: 0,
            labels: vec![],
            table: vec![],
            one: vec![],
            idempotents: vec![],
            idempotent_labels: vec![],
            provenance: Provenance::Zero,
            generators: vec![],
            radical_basis: Matrix::zero(field, 0, 0),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn one(&self) -> &[F::Elem] {
        &self.one
    }
    pub fn provenance(&self) -> Provenance {
        self.provenance
    }
    pub fn num_idempotents(&self) -> usize {
        self.idempotents.len()
    }
    pub fn idempotent(&self, i: usize) -> &[F::Elem] {
        &self.idempotents[i]
    }
    pub fn idempotent_label(&self, i: usize) -> &str {
        &self.idempotent_labels[i]
    }
    pub fn idempotent_labels(&self) -> &[String] {
        &self.idempotent_labels
    }
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
    pub fn table(&self) -> &[Vec<Vec<F::Elem>>] {
        &self.table
    }

    pub fn basis_vec(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// Product of two elements given in coordinates.
    pub fn mul_vec(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !f.is_zero(t) {
                        out[k] = f.add(&out[k], &f.mul(&c, t));
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x` on the regular module.
    pub fn left_mult_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let f = self.field.clone();
        let mut m = Matrix::zero(f.clone(), self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul_vec(x, &self.basis_vec(j));
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Matrix of right multiplication by `x`.
    pub fn right_mult_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let f = self.field.clone();
        let mut m = Matrix::zero(f.clone(), self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul_vec(&self.basis_vec(j), x);
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.table[i][j] != self.table[j][i] {
                    return false;
                }
            }
        }
        true
    }

    pub fn validate(&self) -> Result<()> {
        let f = &self.field;
        if self.dim == 0 {
            return Ok(());
        }
        if self.one.len() != self.dim
            || self.table.len() != self.dim
            || self.table.iter().any(|r| r.len() != self.dim)
            || self.idempotents.len() != self.idempotent_labels.len()
        {
            return Err(Error::BadAlgebra("inconsistent dimensions".to_string()));
        }
        // Unit acts as identity.
        for j in 0..self.dim {
            let b = self.basis_vec(j);
            if self.mul_vec(&self.one, &b) != b || self.mul_vec(&b, &self.one) != b {
                return Err(Error::BadAlgebra(format!(
                    "unit fails on basis element {}",
                    self.labels[j]
                )));
            }
        }
        // Associativity on all basis triples.
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = &self.table[i][j];
                for k in 0..self.dim {
                    let left = self.mul_vec(ij, &self.basis_vec(k));
                    let right = self.mul_vec(&self.basis_vec(i), &self.table[j][k]);
                    if left != right {
                        return Err(Error::BadAlgebra(format!(
                            "associativity fails at ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        // Idempotents: orthogonal, idempotent, summing to the unit.
        let mut sum = vec![f.zero(); self.dim];
        for (i, e) in self.idempotents.iter().enumerate() {
            for (j, e2) in self.idempotents.iter().enumerate() {
                let prod = self.mul_vec(e, e2);
                let expect = if i == j {
                    e.clone()
                } else {
                    vec![f.zero(); self.dim]
                };
                if prod != expect {
                    return Err(Error::BadAlgebra(format!(
                        "idempotents {i} and {j} not orthogonal idempotent"
                    )));
                }
            }
            for (k, c) in e.iter().enumerate() {
                sum[k] = f.add(&sum[k], c);
            }
        }
        if sum != self.one {
            return Err(Error::BadAlgebra(
                "idempotents do not sum to the unit".to_string(),
            ));
        }
        Ok(())
    }

    /// Greedy generating subset of the basis: walk the basis and keep the
    /// elements that enlarge the unital subalgebra generated so far.  With a
    /// length-sorted path basis this lands on the trivial paths and arrows.
    fn compute_generators(&self) -> Vec<usize> {
        if self.dim == 0 {
            return vec![];
        }
        let f = self.field.clone();
        let mut gens: Vec<usize> = Vec::new();
        let mut span = Matrix::column(f.clone(), self.one.clone());
        for j in 0..self.dim {
            if span.rank() == self.dim {
                break;
            }
            let bj = self.basis_vec(j);
            if span.spans(&bj) {
                continue;
            }
            gens.push(j);
            span = span
                .hstack(&Matrix::column(f.clone(), bj))
                .expect("same rows");
            // Close under multiplication.
            loop {
                let (basis, _) = span.column_space_basis();
                let mut grew = false;
                let mut cur = basis.clone();
                for a in 0..basis.cols {
                    for b in 0..basis.cols {
                        let prod = self.mul_vec(&basis.col_vec(a), &basis.col_vec(b));
                        if !cur.spans(&prod) {
                            cur = cur
                                .hstack(&Matrix::column(f.clone(), prod))
                                .expect("same rows");
                            grew = true;
                        }
                    }
                }
                span = cur;
                if !grew {
                    break;
                }
            }
        }
        gens
    }

    /// Transposed structure constants: the product reversed, same basis and
    /// idempotents.
    pub fn opposite(&self) -> Algebra<F> {
        let mut table = vec![vec![Vec::new(); self.dim]; self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                table[i][j] = self.table[j][i].clone();
            }
        }
        Algebra::new_unchecked(
            self.field.clone(),
            self.labels.clone(),
            table,
            self.one.clone(),
            self.idempotents.clone(),
            self.idempotent_labels.clone(),
            Provenance::Opposite,
        )
    }

    /// Is the column span of `basis` closed under multiplication by every
    /// basis element on both sides?
    pub fn is_two_sided_ideal(&self, basis: &Matrix<F>) -> bool {
        for j in 0..basis.cols {
            let v = basis.col_vec(j);
            for i in 0..self.dim {
                let b = self.basis_vec(i);
                if !basis.spans(&self.mul_vec(&b, &v)) || !basis.spans(&self.mul_vec(&v, &b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Left annihilator `{x : x v = 0 for all v in the span}`, returned as a
    /// subspace basis.  For the ideals produced by node surgery this is
    /// two-sided; `is_two_sided_ideal` can confirm.
    pub fn left_annihilator(&self, ideal: &Ideal<F>) -> Ideal<F> {
        let f = self.field.clone();
        if ideal.basis.cols == 0 {
            return Ideal {
                basis: Matrix::identity(f, self.dim),
            };
        }
        let mut stacked: Option<Matrix<F>> = None;
        for j in 0..ideal.basis.cols {
            let rv = self.right_mult_matrix(&ideal.basis.col_vec(j));
            stacked = Some(match stacked {
                None => rv,
                Some(s) => s.vstack(&rv).expect("same cols"),
            });
        }
        Ideal {
            basis: stacked.unwrap().kernel(),
        }
    }

    /// Certified Jacobson radical (cached at construction).
    pub fn radical(&self) -> Ideal<F> {
        Ideal {
            basis: self.radical_basis.clone(),
        }
    }

    pub fn radical_basis(&self) -> &Matrix<F> {
        &self.radical_basis
    }

    /// Compute and certify the Jacobson radical.
    ///
    /// The candidate is the kernel of the trace bilinear form of the left
    /// regular representation, which is exactly the radical in
    /// characteristic zero and over the prime fields used here whenever the
    /// verification below succeeds.  The certificate checks that the
    /// candidate is a nilpotent two-sided ideal whose quotient has a
    /// nondegenerate trace form; failing that, a Frobenius-kernel fallback
    /// covers commutative algebras in characteristic p, and anything else is
    /// reported as `RadicalUnavailable` rather than guessed.
    fn compute_radical(&self) -> Result<Matrix<F>> {
        let f = self.field.clone();
        if self.dim == 0 {
            return Ok(Matrix::zero(f, 0, 0));
        }
        let candidate = self.trace_form_kernel();
        if self.certify_radical(&candidate) {
            return Ok(candidate);
        }
        if self.field.characteristic() > 0 && self.is_commutative() {
            // x -> x^(p^m) is additive in characteristic p; over a prime
            // field it is F_p-linear, and for commutative algebras its
            // eventual kernel is the nilradical = radical.
            let p = self.field.characteristic();
            let mut pow = 1u64;
            let mut iters = 0u32;
            while (pow as usize) < self.dim {
                pow = pow.saturating_mul(p);
                iters += 1;
            }
            let mut m = Matrix::zero(f.clone(), self.dim, self.dim);
            for j in 0..self.dim {
                let mut v = self.basis_vec(j);
                for _ in 0..iters.max(1) {
                    v = self.pow_vec(&v, p);
                }
                for (i, c) in v.into_iter().enumerate() {
                    m.set(i, j, c);
                }
            }
            let candidate = m.kernel();
            if self.certify_radical(&candidate) {
                return Ok(candidate);
            }
        }
        Err(Error::RadicalUnavailable)
    }

    /// x^n by binary powering.
    fn pow_vec(&self, x: &[F::Elem], n: u64) -> Vec<F::Elem> {
        let mut acc = self.one.clone();
        let mut base = x.to_vec();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_vec(&acc, &base);
            }
            base = self.mul_vec(&base, &base);
            n >>= 1;
        }
        acc
    }

    fn trace_form_kernel(&self) -> Matrix<F> {
        let f = self.field.clone();
        // tr(L_{b_k}) for each k, then T_ij = sum_k c_ij^k tr(L_{b_k}).
        let mut traces = Vec::with_capacity(self.dim);
        for k in 0..self.dim {
            let mut t = f.zero();
            for j in 0..self.dim {
                // coefficient of b_j in b_k * b_j
                t = f.add(&t, &self.table[k][j][j]);
            }
            traces.push(t);
        }
        let gram = Matrix::from_fn(f.clone(), self.dim, self.dim, |i, j| {
            let mut t = f.zero();
            for (k, tr) in traces.iter().enumerate() {
                if !f.is_zero(&self.table[i][j][k]) && !f.is_zero(tr) {
                    t = f.add(&t, &f.mul(&self.table[i][j][k], tr));
                }
            }
            t
        });
        gram.kernel()
    }

    fn certify_radical(&self, candidate: &Matrix<F>) -> bool {
        if !self.is_two_sided_ideal(candidate) {
            return false;
        }
        // Nilpotent: powers of the span must reach zero.
        let mut power = candidate.clone();
        for _ in 0..=self.dim {
            if power.cols == 0 {
                break;
            }
            let mut next: Option<Matrix<F>> = None;
            for i in 0..power.cols {
                for j in 0..candidate.cols {
                    let prod = self.mul_vec(&power.col_vec(i), &candidate.col_vec(j));
                    let col = Matrix::column(self.field.clone(), prod);
                    next = Some(match next {
                        None => col,
                        Some(n) => n.hstack(&col).expect("rows"),
                    });
                }
            }
            power = match next {
                None => Matrix::zero(self.field.clone(), self.dim, 0),
                Some(n) => n.column_space_basis().0,
            };
        }
        if power.cols != 0 {
            return false;
        }
        // Quotient trace form nondegenerate: kernel of the form must lie
        // inside the candidate.
        let kern = self.trace_form_kernel();
        for j in 0..kern.cols {
            if !candidate.spans(&kern.col_vec(j)) {
                return false;
            }
        }
        // And the candidate inside the kernel (radical always is).
        for j in 0..candidate.cols {
            if !kern.spans(&candidate.col_vec(j)) {
                return false;
            }
        }
        true
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical_basis.cols == 0
    }

    /// Split basic test: the semisimple quotient has one dimension per
    /// idempotent exactly when no two principal projectives coincide and no
    /// matrix block appears.
    pub fn is_basic(&self) -> bool {
        self.dim - self.radical_basis.cols == self.idempotents.len()
    }

    /// Quotient by a two-sided ideal.  Returns the algebra together with the
    /// projection (new coords of old elements) and a linear section.
    /// Idempotents are the images of the old ones that survive; they stay
    /// orthogonal and sum to the unit, and stay primitive whenever the ideal
    /// is contained in the radical.
    pub fn quotient(&self, ideal: &Ideal<F>) -> Result<(Algebra<F>, Matrix<F>, Matrix<F>)> {
        let f = self.field.clone();
        if !self.is_two_sided_ideal(&ideal.basis) {
            return Err(Error::BadAlgebra("quotient by a non-ideal".to_string()));
        }
        let k = ideal.basis.cols;
        let q = self.dim - k;
        // Extend the ideal basis to a full basis by standard vectors.
        let combined = ideal
            .basis
            .hstack(&Matrix::identity(f.clone(), self.dim))
            .expect("rows");
        let (full, chosen) = combined.column_space_basis();
        debug_assert_eq!(full.cols, self.dim);
        debug_assert!(chosen[..k].iter().enumerate().all(|(i, &c)| c == i));
        let inv = full.inverse()?;
        // Quotient coordinates = rows k.. of the inverse.
        let proj = Matrix::from_fn(f.clone(), q, self.dim, |i, j| inv.at(k + i, j).clone());
        let section = Matrix::from_fn(f.clone(), self.dim, q, |i, j| full.at(i, k + j).clone());
        let mut table = vec![vec![Vec::new(); q]; q];
        for i in 0..q {
            for j in 0..q {
                let prod = self.mul_vec(&section.col_vec(i), &section.col_vec(j));
                table[i][j] = proj.apply(&prod);
            }
        }
        let one = proj.apply(&self.one);
        let mut idems = Vec::new();
        let mut idem_labels = Vec::new();
        for (i, e) in self.idempotents.iter().enumerate() {
            let img = proj.apply(e);
            if img.iter().any(|c| !f.is_zero(c)) {
                idems.push(img);
                idem_labels.push(self.idempotent_labels[i].clone());
            }
        }
        let labels = (0..q).map(|i| format!("q{i}")).collect();
        let alg = Algebra::new(
            f,
            labels,
            table,
            one,
            idems,
            idem_labels,
            Provenance::Quotient,
        )?;
        Ok((alg, proj, section))
    }

    /// Arrow multiplicity matrix of the Gabriel quiver: entry `(i, j)` is
    /// `dim e_i (rad/rad^2) e_j`, the number of arrows `i -> j` under this
    /// crate's left-to-right path convention.  The caller is responsible for
    /// the basic-ness precondition.
    pub fn arrow_counts(&self) -> Result<(Ideal<F>, Vec<Vec<usize>>)> {
        let f = self.field.clone();
        let rad = self.radical();
        let n = self.idempotents.len();
        // rad^2 as a subspace.
        let mut sq: Option<Matrix<F>> = None;
        for i in 0..rad.basis.cols {
            for j in 0..rad.basis.cols {
                let prod = self.mul_vec(&rad.basis.col_vec(i), &rad.basis.col_vec(j));
                let col = Matrix::column(f.clone(), prod);
                sq = Some(match sq {
                    None => col,
                    Some(s) => s.hstack(&col).expect("rows"),
                });
            }
        }
        let radsq = sq
            .map(|s| s.column_space_basis().0)
            .unwrap_or_else(|| Matrix::zero(f.clone(), self.dim, 0));
        let mut counts = vec![vec![0usize; n]; n];
        for (i, ei) in self.idempotents.iter().enumerate() {
            for (j, ej) in self.idempotents.iter().enumerate() {
                // e_i rad e_j modulo rad^2
                let mut span = radsq.clone();
                let before = span.rank();
                for c in 0..rad.basis.cols {
                    let v = self.mul_vec(ei, &self.mul_vec(&rad.basis.col_vec(c), ej));
                    if !span.spans(&v) {
                        span = span.hstack(&Matrix::column(f.clone(), v)).expect("rows");
                    }
                }
                counts[i][j] = span.rank() - before;
            }
        }
        Ok((rad, counts))
    }
}

/// A subspace of an algebra, by a column basis; used for radicals, trace
/// ideals and annihilators.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    pub basis: Matrix<F>,
}

impl<F: Field> Ideal<F> {
    pub fn dim(&self) -> usize {
        self.basis.cols
    }

    pub fn zero(field: F, ambient_dim: usize) -> Self {
        Ideal {
            basis: Matrix::zero(field, ambient_dim, 0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::quiver::{Quiver, Relation};

    fn kt2() -> Algebra<Rationals> {
        // k[t]/(t^2) as a one-loop quiver with relation t^2.
        let q = Quiver::new(
            vec!["1".into()],
            vec![("t".into(), "1".into(), "1".into())],
        )
        .unwrap();
        let rels = vec![Relation::monomial_in(&Rationals, vec!["t".into(), "t".into()])];
        crate::quiver::algebra_from_quiver(Rationals, &q, &rels, 64).unwrap()
    }

    #[test]
    fn opposite_involution_is_identity() {
        let a = kt2();
        let opop = a.opposite().opposite();
        assert_eq!(a.table(), opop.table());
    }

    #[test]
    fn commutative_opposite_same_constants() {
        let a = kt2();
        assert!(a.is_commutative());
        assert_eq!(a.table(), a.opposite().table());
    }

    #[test]
    fn radical_of_kt2_is_t() {
        let a = kt2();
        let rad = a.radical();
        assert_eq!(rad.dim(), 1);
        assert!(!a.is_semisimple());
    }

    #[test]
    fn left_annihilator_of_whole_kt2() {
        let a = kt2();
        let whole = Ideal {
            basis: Matrix::identity(Rationals, 2),
        };
        // ann_l(A) in k[t]/(t^2) is (t): x * 1 = 0 forces x = 0... but the
        // ideal here is the whole algebra including 1, so only 0 kills it.
        let ann = a.left_annihilator(&whole);
        assert_eq!(ann.dim(), 0);
        // ann_l((t)) = (t).
        let rad = a.radical();
        let ann_t = a.left_annihilator(&rad);
        assert_eq!(ann_t.dim(), 1);
    }

    #[test]
    fn quotient_by_radical_is_semisimple() {
        let a = kt2();
        let rad = a.radical();
        let (q, _, _) = a.quotient(&rad).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.is_semisimple());
    }

    #[test]
    fn quotient_by_zero_ideal_is_same_algebra() {
        let a = kt2();
        let z = Ideal::zero(Rationals, 2);
        let (q, _, _) = a.quotient(&z).unwrap();
        assert_eq!(q.dim(), a.dim());
    }
}
