//! Radicals, locality, gr-division and idempotent search.

use super::{GradedAlgebra, GradedIdeal};
use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Scalar, Subspace};

/// Largest number of algebra elements an exhaustive search may visit.
pub const DEFAULT_SEARCH_BUDGET: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdempotentSearch {
    Witness(Vec<Scalar>),
    None,
    Unknown,
}

/// All field elements when the field is finite and `p^n` is within `budget`.
fn exhaustive_elements(field: Field, n: usize, budget: u64) -> Option<impl Iterator<Item = Vec<Scalar>>> {
    let p = field.order()?;
    let total = p.checked_pow(n as u32)?;
    if total > budget {
        return None;
    }
    Some((0..total).map(move |mut code| {
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push(field.element((code % p) as u32));
            code /= p;
        }
        v
    }))
}

impl GradedAlgebra {
    fn check_radical_window(&self) -> Result<()> {
        match self.field {
            Field::Rational => Ok(()),
            Field::Prime(p) if p as usize > self.dim() => Ok(()),
            Field::Prime(p) => Err(Error::UnsupportedField {
                field: self.field.to_string(),
                reason: format!("trace-form radical needs p > dim = {} (p = {p})", self.dim()),
            }),
        }
    }

    /// J(A) = { x : tr(L_{xy}) = 0 for all y }.
    pub fn jacobson_radical(&self) -> Result<GradedIdeal> {
        self.check_radical_window()?;
        let n = self.dim();
        let traces: Vec<Scalar> = (0..n)
            .map(|m| {
                let mut t = self.field.zero();
                for k in 0..n {
                    for (kk, c) in self.product_of_basis(m, k) {
                        if *kk == k {
                            t = &t + c;
                        }
                    }
                }
                t
            })
            .collect();
        // form[j][i] = tr(L_{b_i b_j}); the radical is the kernel of this matrix.
        let form = Matrix::from_fn(self.field, n, n, |j, i| {
            let mut acc = self.field.zero();
            for (m, c) in self.product_of_basis(i, j) {
                acc = &acc + &(c * &traces[*m]);
            }
            acc
        });
        let basis = form.kernel_basis();
        Ok(GradedIdeal {
            field: self.field,
            ambient: n,
            basis: Subspace::span(self.field, n, &basis).basis().to_vec(),
        })
    }

    /// J(A) after checking that it is a graded subspace; the returned basis is
    /// homogeneous (even vectors first).
    pub fn graded_radical(&self) -> Result<GradedIdeal> {
        let j = self.jacobson_radical()?;
        let sub = j.subspace();
        let mut evens = Vec::new();
        let mut odds = Vec::new();
        for v in j.basis() {
            let (e, o) = self.homogeneous_parts(v);
            if !sub.contains(&e) || !sub.contains(&o) {
                return Err(Error::Internal("Jacobson radical is not a graded subspace".into()));
            }
            evens.push(e);
            odds.push(o);
        }
        let mut basis = Subspace::span(self.field, self.dim(), &evens).basis().to_vec();
        basis.extend(Subspace::span(self.field, self.dim(), &odds).basis().iter().cloned());
        Ok(GradedIdeal {
            field: self.field,
            ambient: self.dim(),
            basis,
        })
    }

    /// A is local: A/J(A) is a division algebra.
    pub fn is_local(&self) -> Result<bool> {
        let j = self.jacobson_radical()?;
        let s = self.quotient(&j);
        s.is_division_semisimple()
    }

    /// Division test for an algebra with zero radical.
    fn is_division_semisimple(&self) -> Result<bool> {
        match self.dim() {
            0 => return Ok(false),
            1 => return Ok(true),
            _ => {}
        }
        if self.dim() == 2 {
            let (alpha, beta) = self.minimal_relation()?;
            let disc = &(&alpha * &alpha) + &(&self.field.from_i64(4) * &beta);
            if disc.is_zero() {
                return Err(Error::Internal("semisimple quotient has a nilpotent element".into()));
            }
            return Ok(self.field.sqrt(&disc).is_none());
        }
        if let Some(elements) = exhaustive_elements(self.field, self.dim(), DEFAULT_SEARCH_BUDGET) {
            let n = self.dim();
            for x in elements {
                if x.iter().all(Scalar::is_zero) {
                    continue;
                }
                if self.left_mult_matrix(&x).rank() < n {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        Err(Error::Undecided(format!(
            "division test for a {}-dimensional semisimple algebra over {}",
            self.dim(),
            self.field
        )))
    }

    /// For a 2-dimensional unital algebra, the non-identity basis element `x`
    /// satisfies `x² = αx + β·1`; returns `(α, β)` and uses the basis element
    /// not proportional to the identity.
    fn minimal_relation(&self) -> Result<(Scalar, Scalar)> {
        Ok(self.two_dim_generator()?.1)
    }

    fn two_dim_generator(&self) -> Result<(Vec<Scalar>, (Scalar, Scalar))> {
        let one = self.one()?;
        let x = (0..2)
            .map(|i| self.basis_vector(i))
            .find(|b| Subspace::span(self.field, 2, &[one.clone(), b.clone()]).dim() == 2)
            .ok_or_else(|| Error::Internal("2-dimensional algebra generated by 1".into()))?;
        let x2 = self.mul_unchecked(&x, &x);
        let m = Matrix::from_columns(self.field, 2, &[x.clone(), one]);
        let sol = m
            .solve(&x2)?
            .ok_or_else(|| Error::Internal("x² outside span{x, 1}".into()))?;
        Ok((x, (sol[0].clone(), sol[1].clone())))
    }

    /// A₀ is local.
    pub fn is_gr_local(&self) -> Result<bool> {
        self.even_part().is_local()
    }

    /// Every nonzero homogeneous element is invertible.
    pub fn is_gr_division(&self) -> Result<bool> {
        if !self.graded_radical()?.is_zero() {
            return Ok(false);
        }
        let a0 = self.even_part();
        if !a0.jacobson_radical()?.is_zero() || !a0.is_local()? {
            return Ok(false);
        }
        let (d0, d1) = self.graded_dims();
        if d1 == 0 {
            return Ok(true);
        }
        if d0 != d1 {
            return Ok(false);
        }
        let u = (0..self.dim())
            .find(|&i| self.degrees[i] % 2 == 1)
            .map(|i| self.basis_vector(i))
            .expect("odd part is nonzero");
        Ok(self.left_mult_matrix(&u).rank() == self.dim())
    }

    /// Searches for an idempotent other than 0 and 1.
    ///
    /// When dim A/J ≤ 2 the candidates are the lifts of the idempotents of A/J
    /// (closed form from the minimal polynomial, lifted by e ← 3e² − 2e³).
    /// Otherwise, over F_p within `budget`, every element is tried.
    pub fn has_nontrivial_idempotent(&self, budget: u64) -> IdempotentSearch {
        if let Ok(j) = self.jacobson_radical() {
            let s = self.quotient(&j);
            match s.dim() {
                0 | 1 => return IdempotentSearch::None,
                2 => match self.lift_two_dim_idempotent(&j, &s) {
                    Ok(Some(e)) => return IdempotentSearch::Witness(e),
                    Ok(None) => return IdempotentSearch::None,
                    Err(_) => {}
                },
                _ => {}
            }
        }
        self.exhaustive_idempotent(budget)
    }

    fn exhaustive_idempotent(&self, budget: u64) -> IdempotentSearch {
        let Some(elements) = exhaustive_elements(self.field, self.dim(), budget) else {
            return IdempotentSearch::Unknown;
        };
        let Some(one) = self.identity.clone() else {
            return IdempotentSearch::Unknown;
        };
        for x in elements {
            if x.iter().all(Scalar::is_zero) || x == one {
                continue;
            }
            if self.mul_unchecked(&x, &x) == x {
                return IdempotentSearch::Witness(x);
            }
        }
        IdempotentSearch::None
    }

    /// `Ok(None)` when A/J is a field; otherwise the lift of the idempotent of
    /// A/J on which the generator acts by the first root.
    fn lift_two_dim_idempotent(&self, j: &GradedIdeal, s: &GradedAlgebra) -> Result<Option<Vec<Scalar>>> {
        let (xs, (alpha, beta)) = s.two_dim_generator()?;
        let f = self.field;
        let disc = &(&alpha * &alpha) + &(&f.from_i64(4) * &beta);
        let roots = match f {
            Field::Rational => {
                let Some(r) = f.sqrt(&disc) else {
                    return Ok(None);
                };
                let half = f.from_ratio(1, 2)?;
                (&(&alpha + &r) * &half, &(&alpha - &r) * &half)
            }
            Field::Prime(p) => {
                let found: Vec<Scalar> = (0..p)
                    .map(|k| f.element(k))
                    .filter(|t| (&(&(t * t) - &(&alpha * t)) - &beta).is_zero())
                    .collect();
                match found.len() {
                    0 => return Ok(None),
                    2 => (found[0].clone(), found[1].clone()),
                    _ => return Err(Error::Internal("repeated root in a semisimple quotient".into())),
                }
            }
        };
        let (r1, r2) = roots;
        // Lift the generator: the quotient basis is a subset of A's basis.
        let sub = j.subspace();
        let units: Vec<Vec<Scalar>> = (0..self.dim()).map(|i| self.basis_vector(i)).collect();
        let keep = sub.complement_indices(&units);
        let mut x = self.zero_vector();
        for (t, &i) in keep.iter().enumerate() {
            x[i] = xs[t].clone();
        }
        let one = self.one()?;
        let scale = (&r1 - &r2).inv().expect("distinct roots");
        let mut e: Vec<Scalar> = x
            .iter()
            .zip(&one)
            .map(|(a, u)| &(a - &(&r2 * u)) * &scale)
            .collect();
        let three = f.from_i64(3);
        let two = f.from_i64(2);
        for _ in 0..64 {
            let e2 = self.mul_unchecked(&e, &e);
            if e2 == e {
                return Ok(Some(e));
            }
            let e3 = self.mul_unchecked(&e2, &e);
            e = e2.iter().zip(&e3).map(|(a, b)| &(&three * a) - &(&two * b)).collect();
        }
        Err(Error::Internal("idempotent lifting did not converge".into()))
    }
}
