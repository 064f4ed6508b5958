//! Representations as vertex spaces plus linear maps, with homogeneous bases
//! and extra vertex operators (the ε action) that morphisms must respect.
//! Quiver and species representations both reduce to this.

use super::modp::{all_vectors, Mat, Zp};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearRep {
    pub field: Zp,
    pub dims: Vec<usize>,
    /// Degree of each basis vector, per vertex.
    pub degrees: Vec<Vec<u8>>,
    /// Per vertex, operators every morphism must commute with.
    pub operators: Vec<Vec<Mat>>,
    /// `(source, target, matrix)` with `target dim × source dim` matrices.
    pub arrows: Vec<(usize, usize, Mat)>,
}

/// A morphism: one matrix per vertex.
pub type Morphism = Vec<Mat>;

impl LinearRep {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    fn same_shape(&self, other: &LinearRep) -> bool {
        self.field == other.field
            && self.dims.len() == other.dims.len()
            && self.arrows.len() == other.arrows.len()
            && self.arrows.iter().zip(&other.arrows).all(|(a, b)| (a.0, a.1) == (b.0, b.1))
            && self.operators.iter().zip(&other.operators).all(|(a, b)| a.len() == b.len())
    }

    /// Basis of the degree-preserving, operator-commuting maps `self → other`
    /// that intertwine every arrow.
    pub fn hom(&self, other: &LinearRep) -> Result<Vec<Morphism>> {
        if !self.same_shape(other) {
            return Err(Error::dim("representations of different shapes"));
        }
        let f = self.field;
        let n = self.dims.len();
        let mut offset = vec![0usize; n + 1];
        for v in 0..n {
            offset[v + 1] = offset[v] + other.dims[v] * self.dims[v];
        }
        let unknowns = offset[n];
        let var = |v: usize, r: usize, c: usize| offset[v] + r * self.dims[v] + c;
        let mut eqs: Vec<Vec<u32>> = Vec::new();
        for v in 0..n {
            for r in 0..other.dims[v] {
                for c in 0..self.dims[v] {
                    if other.degrees[v][r] != self.degrees[v][c] {
                        let mut e = vec![0u32; unknowns];
                        e[var(v, r, c)] = 1;
                        eqs.push(e);
                    }
                }
            }
            // α O = O' α
            for (o, o2) in self.operators[v].iter().zip(&other.operators[v]) {
                for r in 0..other.dims[v] {
                    for c in 0..self.dims[v] {
                        let mut e = vec![0u32; unknowns];
                        for k in 0..self.dims[v] {
                            let x = var(v, r, k);
                            e[x] = f.add(e[x], o.get(k, c));
                        }
                        for k in 0..other.dims[v] {
                            let x = var(v, k, c);
                            e[x] = f.sub(e[x], o2.get(r, k));
                        }
                        eqs.push(e);
                    }
                }
            }
        }
        // α_t A = A' α_s
        for ((s, t, a), (_, _, a2)) in self.arrows.iter().zip(&other.arrows) {
            let (s, t) = (*s, *t);
            for r in 0..other.dims[t] {
                for c in 0..self.dims[s] {
                    let mut e = vec![0u32; unknowns];
                    for k in 0..self.dims[t] {
                        let x = var(t, r, k);
                        e[x] = f.add(e[x], a.get(k, c));
                    }
                    for k in 0..other.dims[s] {
                        let x = var(s, k, c);
                        e[x] = f.sub(e[x], a2.get(r, k));
                    }
                    eqs.push(e);
                }
            }
        }
        let kernel = if eqs.is_empty() {
            (0..unknowns)
                .map(|i| {
                    let mut v = vec![0u32; unknowns];
                    v[i] = 1;
                    v
                })
                .collect()
        } else {
            Mat::from_rows(&eqs).kernel(f)
        };
        Ok(kernel
            .into_iter()
            .map(|x| {
                (0..n)
                    .map(|v| Mat {
                        rows: other.dims[v],
                        cols: self.dims[v],
                        data: x[offset[v]..offset[v + 1]].to_vec(),
                    })
                    .collect()
            })
            .collect())
    }

    pub fn end(&self) -> Result<Vec<Morphism>> {
        self.hom(self)
    }

    fn combine(&self, basis: &[Morphism], coeffs: &[u32]) -> Morphism {
        let f = self.field;
        let mut out: Morphism = basis[0].iter().map(|m| Mat::zeros(m.rows, m.cols)).collect();
        for (b, &c) in basis.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for (o, m) in out.iter_mut().zip(b) {
                for (x, y) in o.data.iter_mut().zip(&m.data) {
                    *x = f.add(*x, f.mul(c, *y));
                }
            }
        }
        out
    }

    fn search_space(&self, dim: usize, cap: u64) -> Result<()> {
        match (self.field.p() as u64).checked_pow(dim as u32) {
            Some(n) if n <= cap => Ok(()),
            _ => Err(Error::Budget(format!(
                "exhaustive search over {}^{dim} morphisms exceeds {cap}",
                self.field.p()
            ))),
        }
    }

    /// An idempotent endomorphism other than 0 and 1, searching coefficient
    /// vectors in counting order (or its reverse).
    pub fn nontrivial_idempotent(&self, cap: u64, reverse: bool) -> Result<Option<Morphism>> {
        let basis = self.end()?;
        if basis.is_empty() {
            return Ok(None);
        }
        self.search_space(basis.len(), cap)?;
        let f = self.field;
        let candidates: Box<dyn Iterator<Item = Vec<u32>>> = if reverse {
            let all: Vec<Vec<u32>> = all_vectors(f, basis.len()).collect();
            Box::new(all.into_iter().rev())
        } else {
            Box::new(all_vectors(f, basis.len()))
        };
        for c in candidates {
            let e = self.combine(&basis, &c);
            let zero = e.iter().all(Mat::is_zero);
            let one = e.iter().all(|m| *m == Mat::identity(m.rows));
            if zero || one {
                continue;
            }
            if e.iter().all(|m| m.mul(f, m) == *m) {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }

    /// Nonzero, and End has no idempotent besides 0 and 1.
    pub fn is_indecomposable(&self, cap: u64) -> Result<bool> {
        if self.total_dim() == 0 {
            return Ok(false);
        }
        Ok(self.nontrivial_idempotent(cap, false)?.is_none())
    }

    /// Some morphism `self → other` is invertible at every vertex.
    pub fn is_isomorphic(&self, other: &LinearRep, cap: u64) -> Result<bool> {
        if !self.same_shape(other) || self.dims != other.dims {
            return Ok(false);
        }
        let mut da: Vec<Vec<u8>> = self.degrees.clone();
        let mut db: Vec<Vec<u8>> = other.degrees.clone();
        da.iter_mut().for_each(|d| d.sort_unstable());
        db.iter_mut().for_each(|d| d.sort_unstable());
        if da != db {
            return Ok(false);
        }
        let basis = self.hom(other)?;
        if basis.len() != self.end()?.len() {
            return Ok(false);
        }
        if basis.is_empty() {
            return Ok(self.total_dim() == 0);
        }
        self.search_space(basis.len(), cap)?;
        let f = self.field;
        for c in all_vectors(f, basis.len()) {
            let m = self.combine(&basis, &c);
            if m.iter().all(|x| x.is_invertible(f)) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The subrepresentation on the images of the idempotent `e`.
    fn image(&self, e: &Morphism) -> LinearRep {
        let f = self.field;
        let mut bases = Vec::new();
        let mut out = LinearRep {
            field: f,
            dims: Vec::new(),
            degrees: Vec::new(),
            operators: Vec::new(),
            arrows: Vec::new(),
        };
        for (v, ev) in e.iter().enumerate() {
            let cols = ev.column_basis(f);
            let rows: Vec<usize> = (0..ev.rows).collect();
            let b = ev.submatrix(&rows, &cols);
            out.dims.push(cols.len());
            out.degrees.push(cols.iter().map(|&c| self.degrees[v][c]).collect());
            out.operators.push(
                self.operators[v]
                    .iter()
                    .map(|o| b.solve_left(f, &o.mul(f, &b)).expect("e commutes with the operator"))
                    .collect(),
            );
            bases.push(b);
        }
        for (s, t, a) in &self.arrows {
            let x = bases[*t]
                .solve_left(f, &a.mul(f, &bases[*s]))
                .expect("e is a morphism");
            out.arrows.push((*s, *t, x));
        }
        out
    }

    /// Indecomposable summands, splitting along the first (or last)
    /// idempotent found at each step.
    pub fn decompose(&self, cap: u64, reverse: bool) -> Result<Vec<LinearRep>> {
        if self.total_dim() == 0 {
            return Ok(Vec::new());
        }
        let Some(e) = self.nontrivial_idempotent(cap, reverse)? else {
            return Ok(vec![self.clone()]);
        };
        let f = self.field;
        let complement: Morphism = e.iter().map(|m| Mat::identity(m.rows).sub(f, m)).collect();
        let mut out = self.image(&e).decompose(cap, reverse)?;
        out.extend(self.image(&complement).decompose(cap, reverse)?);
        Ok(out)
    }
}

/// Whether two lists of indecomposables agree up to isomorphism and order.
pub fn same_summands(a: &[LinearRep], b: &[LinearRep], cap: u64) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut used = vec![false; b.len()];
    for x in a {
        let mut found = false;
        for (k, y) in b.iter().enumerate() {
            if !used[k] && x.is_isomorphic(y, cap)? {
                used[k] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Zp {
        Zp::new(2).unwrap()
    }

    fn a2(dims: [usize; 2], map: Mat) -> LinearRep {
        LinearRep {
            field: f2(),
            dims: dims.to_vec(),
            degrees: dims.iter().map(|&d| vec![0; d]).collect(),
            operators: vec![vec![], vec![]],
            arrows: vec![(0, 1, map)],
        }
    }

    #[test]
    fn indecomposability_examples() {
        let simple = a2([1, 0], Mat::zeros(0, 1));
        assert!(simple.is_indecomposable(1 << 20).unwrap());
        let sum = a2([1, 1], Mat::zeros(1, 1));
        assert!(!sum.is_indecomposable(1 << 20).unwrap());
        let full = a2([1, 1], Mat::identity(1));
        assert!(full.is_indecomposable(1 << 20).unwrap());
        assert_eq!(full.end().unwrap().len(), 1);
    }

    #[test]
    fn decomposition_and_isomorphism() {
        let m = Mat::from_rows(&[vec![1, 0], vec![0, 0]]);
        let rep = a2([2, 2], m);
        let fwd = rep.decompose(1 << 20, false).unwrap();
        let back = rep.decompose(1 << 20, true).unwrap();
        assert_eq!(fwd.len(), 3);
        assert!(same_summands(&fwd, &back, 1 << 20).unwrap());
        let other = a2([2, 2], Mat::from_rows(&[vec![0, 0], vec![0, 1]]));
        assert!(rep.is_isomorphic(&other, 1 << 20).unwrap());
        assert!(!rep.is_isomorphic(&a2([2, 2], Mat::identity(2)), 1 << 20).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let big = a2([4, 0], Mat::zeros(0, 4));
        assert!(matches!(big.is_indecomposable(1 << 10), Err(Error::Budget(_))));
    }
}
