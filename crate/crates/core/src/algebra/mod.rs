//! Finite-dimensional ℤ₂-graded algebras given by structure constants.

mod radical;
mod species_of;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Scalar, Subspace};
pub use crate::report::ValidationReport;
use crate::superquiver::{Color, Style, Superquiver};

pub use radical::{IdempotentSearch, DEFAULT_SEARCH_BUDGET};
pub use species_of::graded_species_of;

/// A homogeneous-basis graded algebra: `b_i · b_j = Σ_k c[i][j][k] b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    field: Field,
    labels: Vec<String>,
    degrees: Vec<u8>,
    /// `table[i * n + j]` lists the nonzero `(k, c[i][j][k])`, sorted by `k`.
    table: Vec<Vec<(usize, Scalar)>>,
    identity: Option<Vec<Scalar>>,
}

/// Basis of an ideal, as coordinate vectors in the parent's basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdeal {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

impl GradedIdeal {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn subspace(&self) -> Subspace {
        Subspace::span(self.field, self.ambient, &self.basis)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct AlgebraFile {
    basis: Vec<String>,
    degrees: Vec<u8>,
    table: Vec<Vec<Vec<String>>>,
    field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    identity: Option<Vec<String>>,
}

impl GradedAlgebra {
    /// Builds from sparse entries `(i, j, k, c)`; repeated entries add up. The
    /// identity is solved for from the table.
    pub fn from_entries(
        field: Field,
        labels: Vec<String>,
        degrees: Vec<u8>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<GradedAlgebra> {
        let mut a = Self::from_entries_with_identity(field, labels, degrees, entries, None)?;
        a.identity = a.solve_identity();
        Ok(a)
    }

    /// As [`GradedAlgebra::from_entries`] with a known identity (not checked
    /// here; `validate` checks it).
    pub fn from_entries_with_identity(
        field: Field,
        labels: Vec<String>,
        degrees: Vec<u8>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        identity: Option<Vec<Scalar>>,
    ) -> Result<GradedAlgebra> {
        let n = labels.len();
        if degrees.len() != n {
            return Err(Error::dim(format!("{} labels but {} degrees", n, degrees.len())));
        }
        let mut dense: Vec<std::collections::BTreeMap<usize, Scalar>> = vec![Default::default(); n * n];
        for (i, j, k, c) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::dim(format!("structure constant index ({i},{j},{k}) out of range")));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
            let slot = dense[i * n + j].entry(k).or_insert_with(|| field.zero());
            *slot = &*slot + &c;
        }
        let table = dense
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        if let Some(u) = &identity {
            if u.len() != n {
                return Err(Error::dim("identity vector length"));
            }
        }
        Ok(GradedAlgebra {
            field,
            labels,
            degrees,
            table,
            identity,
        })
    }

    /// The ground field K, trivially graded.
    pub fn ground(field: Field) -> GradedAlgebra {
        Self::from_entries_with_identity(
            field,
            vec!["1".into()],
            vec![0],
            [(0, 0, 0, field.one())],
            Some(vec![field.one()]),
        )
        .expect("well-formed")
    }

    /// D = K ⊕ Kε with deg ε = 1 and ε² = 1.
    pub fn d_algebra(field: Field) -> GradedAlgebra {
        let one = field.one();
        Self::from_entries_with_identity(
            field,
            vec!["1".into(), "eps".into()],
            vec![0, 1],
            [
                (0, 0, 0, one.clone()),
                (0, 1, 1, one.clone()),
                (1, 0, 1, one.clone()),
                (1, 1, 0, one.clone()),
            ],
            Some(vec![one, field.zero()]),
        )
        .expect("well-formed")
    }

    pub fn from_json(text: &str) -> Result<GradedAlgebra> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        let field = Field::parse(&file.field)?;
        let n = file.basis.len();
        if file.table.len() != n {
            return Err(Error::dim(format!("table has {} rows for {} basis elements", file.table.len(), n)));
        }
        let mut entries = Vec::new();
        for (i, row) in file.table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::dim(format!("table row {i} has {} entries", row.len())));
            }
            for (j, cell) in row.iter().enumerate() {
                if cell.len() != n {
                    return Err(Error::dim(format!("table cell ({i},{j}) has {} coordinates", cell.len())));
                }
                for (k, s) in cell.iter().enumerate() {
                    let c = field.parse_scalar(s)?;
                    if !c.is_zero() {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        match file.identity {
            Some(u) => {
                let u = u.iter().map(|s| field.parse_scalar(s)).collect::<Result<Vec<_>>>()?;
                Self::from_entries_with_identity(field, file.basis, file.degrees, entries, Some(u))
            }
            None => Self::from_entries(field, file.basis, file.degrees, entries),
        }
    }

    pub fn to_json(&self) -> String {
        let n = self.dim();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut cell = vec!["0".to_string(); n];
                        for (k, c) in &self.table[i * n + j] {
                            cell[*k] = c.to_string();
                        }
                        cell
                    })
                    .collect()
            })
            .collect();
        let file = AlgebraFile {
            basis: self.labels.clone(),
            degrees: self.degrees.clone(),
            table,
            field: self.field.to_string(),
            identity: self.identity.as_ref().map(|u| u.iter().map(ToString::to_string).collect()),
        };
        serde_json::to_string_pretty(&file).expect("serializable")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degrees(&self) -> &[u8] {
        &self.degrees
    }

    pub fn identity(&self) -> Option<&[Scalar]> {
        self.identity.as_deref()
    }

    /// (dim A₀, dim A₁).
    pub fn graded_dims(&self) -> (usize, usize) {
        let odd = self.degrees.iter().filter(|d| **d % 2 == 1).count();
        (self.dim() - odd, odd)
    }

    /// Nonzero structure constants of `b_i · b_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn one(&self) -> Result<Vec<Scalar>> {
        self.identity
            .clone()
            .ok_or_else(|| Error::invalid("algebra has no two-sided identity"))
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::dim(format!(
                "vectors of length {} and {} in a {n}-dimensional algebra",
                x.len(),
                y.len()
            )));
        }
        if let Some(s) = x.iter().chain(y).find(|s| s.field() != self.field) {
            return Err(Error::FieldMismatch(self.field, s.field()));
        }
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                for (k, c) in &self.table[i * n + j] {
                    out[*k] = &out[*k] + &(&s * c);
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|j| self.mul_unchecked(x, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|j| self.mul_unchecked(&self.basis_vector(j), x))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Degree of a nonzero homogeneous vector, `None` if mixed or zero.
    pub fn degree_of(&self, v: &[Scalar]) -> Option<u8> {
        let mut deg = None;
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match deg {
                None => deg = Some(self.degrees[k] % 2),
                Some(d) if d != self.degrees[k] % 2 => return None,
                _ => {}
            }
        }
        deg
    }

    /// Splits `v` into its degree-0 and degree-1 parts.
    pub fn homogeneous_parts(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut even = self.zero_vector();
        let mut odd = self.zero_vector();
        for (k, x) in v.iter().enumerate() {
            if self.degrees[k] % 2 == 0 {
                even[k] = x.clone();
            } else {
                odd[k] = x.clone();
            }
        }
        (even, odd)
    }

    fn solve_identity(&self) -> Option<Vec<Scalar>> {
        let n = self.dim();
        if n == 0 {
            return None;
        }
        // Unknown u = Σ u_i b_i with u·b_j = b_j and b_j·u = b_j for all j.
        let mut m = Matrix::zeros(self.field, 2 * n * n, n);
        let mut rhs = vec![self.field.zero(); 2 * n * n];
        for j in 0..n {
            for k in 0..n {
                let row_l = j * n + k;
                let row_r = n * n + j * n + k;
                if j == k {
                    rhs[row_l] = self.field.one();
                    rhs[row_r] = self.field.one();
                }
            }
            for i in 0..n {
                for (k, c) in &self.table[i * n + j] {
                    m.set(j * n + k, i, c.clone());
                }
                for (k, c) in &self.table[j * n + i] {
                    m.set(n * n + j * n + k, i, c.clone());
                }
            }
        }
        m.solve(&rhs).ok().flatten()
    }

    /// Every violated invariant: degrees, grading, associativity, identity.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut v = Vec::new();
        for (i, d) in self.degrees.iter().enumerate() {
            if *d > 1 {
                v.push(format!("degree of {} is {d}, expected 0 or 1", self.labels[i]));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for (k, _) in &self.table[i * n + j] {
                    if (self.degrees[i] + self.degrees[j]) % 2 != self.degrees[*k] % 2 {
                        v.push(format!(
                            "grading: {}·{} has a component along {} of degree {}",
                            self.labels[i], self.labels[j], self.labels[*k], self.degrees[*k]
                        ));
                    }
                }
            }
        }
        'assoc: for i in 0..n {
            let bi = self.basis_vector(i);
            for j in 0..n {
                let bij = self.mul_unchecked(&bi, &self.basis_vector(j));
                for l in 0..n {
                    let bl = self.basis_vector(l);
                    let left = self.mul_unchecked(&bij, &bl);
                    let bjl = self.mul_unchecked(&self.basis_vector(j), &bl);
                    let right = self.mul_unchecked(&bi, &bjl);
                    if left != right {
                        v.push(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[l]
                        ));
                        break 'assoc;
                    }
                }
            }
        }
        match &self.identity {
            None => v.push("no two-sided identity".into()),
            Some(u) => {
                for j in 0..n {
                    let bj = self.basis_vector(j);
                    if self.mul_unchecked(u, &bj) != bj || self.mul_unchecked(&bj, u) != bj {
                        v.push(format!("identity is not two-sided on {}", self.labels[j]));
                        break;
                    }
                }
                if u.iter().zip(&self.degrees).any(|(x, d)| !x.is_zero() && d % 2 == 1) {
                    v.push("identity has a degree-1 component".into());
                }
            }
        }
        ValidationReport { violations: v }
    }

    /// The degree-0 subalgebra, trivially graded.
    pub fn even_part(&self) -> GradedAlgebra {
        let idx: Vec<usize> = (0..self.dim()).filter(|&i| self.degrees[i] % 2 == 0).collect();
        self.restrict(&idx)
    }

    /// Subalgebra on a subset of basis elements closed under products.
    fn restrict(&self, idx: &[usize]) -> GradedAlgebra {
        let n = self.dim();
        let mut pos = vec![usize::MAX; n];
        for (a, &i) in idx.iter().enumerate() {
            pos[i] = a;
        }
        let mut entries = Vec::new();
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                for (k, c) in &self.table[i * n + j] {
                    debug_assert!(pos[*k] != usize::MAX, "not a subalgebra");
                    entries.push((a, b, pos[*k], c.clone()));
                }
            }
        }
        let identity = self
            .identity
            .as_ref()
            .map(|u| idx.iter().map(|&i| u[i].clone()).collect());
        GradedAlgebra::from_entries_with_identity(
            self.field,
            idx.iter().map(|&i| self.labels[i].clone()).collect(),
            idx.iter().map(|&i| self.degrees[i]).collect(),
            entries,
            identity,
        )
        .expect("restriction of a well-formed table")
    }

    /// A/I for an ideal with a homogeneous basis. The quotient basis is the set
    /// of original basis elements that are not echelon pivots of I.
    pub fn quotient(&self, ideal: &GradedIdeal) -> GradedAlgebra {
        let n = self.dim();
        let sub = ideal.subspace();
        let units: Vec<Vec<Scalar>> = (0..n).map(|i| self.basis_vector(i)).collect();
        let keep = sub.complement_indices(&units);
        let mut entries = Vec::new();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                let mut prod = self.zero_vector();
                for (k, c) in &self.table[i * n + j] {
                    prod[*k] = c.clone();
                }
                let coords = coordinates_mod(&sub, &keep, &prod);
                for (t, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((a, b, t, c));
                    }
                }
            }
        }
        let identity = self.identity.as_ref().map(|u| coordinates_mod(&sub, &keep, u));
        GradedAlgebra::from_entries_with_identity(
            self.field,
            keep.iter().map(|&i| self.labels[i].clone()).collect(),
            keep.iter().map(|&i| self.degrees[i]).collect(),
            entries,
            identity,
        )
        .expect("quotient of a well-formed table")
    }

    /// Ordinary tensor product A ⊗ B (no Koszul signs), graded by the sum of
    /// degrees; basis `(i, j)` at index `i·dim B + j`.
    pub fn tensor(&self, other: &GradedAlgebra) -> Result<GradedAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let (n, m) = (self.dim(), other.dim());
        let mut labels = Vec::with_capacity(n * m);
        let mut degrees = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                labels.push(format!("{}(x){}", self.labels[i], other.labels[j]));
                degrees.push((self.degrees[i] + other.degrees[j]) % 2);
            }
        }
        let mut entries = Vec::new();
        for i in 0..n {
            for i2 in 0..n {
                for (k, c) in &self.table[i * n + i2] {
                    for j in 0..m {
                        for j2 in 0..m {
                            for (k2, c2) in &other.table[j * m + j2] {
                                entries.push((i * m + j, i2 * m + j2, k * m + k2, c * c2));
                            }
                        }
                    }
                }
            }
        }
        let identity = match (&self.identity, &other.identity) {
            (Some(u), Some(w)) => Some(
                (0..n)
                    .flat_map(|i| (0..m).map(move |j| (i, j)))
                    .map(|(i, j)| &u[i] * &w[j])
                    .collect(),
            ),
            _ => None,
        };
        GradedAlgebra::from_entries_with_identity(self.field, labels, degrees, entries, identity)
    }

    /// Direct product A × B with the basis of A first.
    pub fn direct_product(&self, other: &GradedAlgebra) -> Result<GradedAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let (n, m) = (self.dim(), other.dim());
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("({l},0)")).collect();
        labels.extend(other.labels.iter().map(|l| format!("(0,{l})")));
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.table[i * n + j] {
                    entries.push((i, j, *k, c.clone()));
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for (k, c) in &other.table[i * m + j] {
                    entries.push((n + i, n + j, n + k, c.clone()));
                }
            }
        }
        let identity = match (&self.identity, &other.identity) {
            (Some(u), Some(w)) => Some(u.iter().chain(w).cloned().collect()),
            _ => None,
        };
        GradedAlgebra::from_entries_with_identity(self.field, labels, degrees, entries, identity)
    }

    /// A # Kℤ₂*: basis `b_i # p_g` at index `g·n + i`, product
    /// `(a # p_g)(b # p_h) = a·b_{g−h} # p_h`, trivially graded.
    pub fn smash_product(&self) -> GradedAlgebra {
        let n = self.dim();
        let mut labels = Vec::with_capacity(2 * n);
        for g in 0..2 {
            for l in &self.labels {
                labels.push(format!("{l}#p{g}"));
            }
        }
        let mut entries = Vec::new();
        for g in 0..2u8 {
            for h in 0..2u8 {
                for i in 0..n {
                    for j in 0..n {
                        if self.degrees[j] % 2 != (g + h) % 2 {
                            continue;
                        }
                        for (k, c) in &self.table[i * n + j] {
                            entries.push((g as usize * n + i, h as usize * n + j, h as usize * n + k, c.clone()));
                        }
                    }
                }
            }
        }
        let identity = self
            .identity
            .as_ref()
            .map(|u| u.iter().chain(u.iter()).cloned().collect());
        GradedAlgebra::from_entries_with_identity(self.field, labels, vec![0; 2 * n], entries, identity)
            .expect("smash table is well-formed")
    }

    /// Linear map given by `map` (columns = images of basis vectors) is an
    /// algebra homomorphism preserving identity and degree.
    pub fn is_graded_homomorphism(&self, target: &GradedAlgebra, map: &Matrix) -> bool {
        let n = self.dim();
        if map.cols() != n || map.rows() != target.dim() {
            return false;
        }
        let image = |v: &[Scalar]| map.mul_vec(v).expect("shape checked");
        for i in 0..n {
            let fi = image(&self.basis_vector(i));
            if !fi.iter().all(Scalar::is_zero) && target.degree_of(&fi) != Some(self.degrees[i] % 2) {
                return false;
            }
            for j in 0..n {
                let lhs = image(&self.mul_unchecked(&self.basis_vector(i), &self.basis_vector(j)));
                let rhs = target.mul_unchecked(&fi, &image(&self.basis_vector(j)));
                if lhs != rhs {
                    return false;
                }
            }
        }
        match (&self.identity, &target.identity) {
            (Some(u), Some(w)) => &image(u) == w,
            _ => false,
        }
    }

    /// Path superalgebra of an acyclic superquiver with only white vertices.
    /// Paths compose left to right: `p·q` is `p` followed by `q`.
    pub fn path_superalgebra(q: &Superquiver, field: Field) -> Result<GradedAlgebra> {
        if q.vertices().iter().any(|v| v.color == Color::Black) {
            return Err(Error::invalid("path superalgebra needs an elementary (all-white) superquiver"));
        }
        if !q.underlying_quiver().is_acyclic() {
            return Err(Error::Cyclic("superquiver has an oriented cycle".into()));
        }
        // (source, target, arrow sequence)
        let mut paths: Vec<(usize, usize, Vec<usize>)> =
            (0..q.vertices().len()).map(|v| (v, v, Vec::new())).collect();
        let mut frontier: Vec<usize> = Vec::new();
        for (a, arrow) in q.arrows().iter().enumerate() {
            paths.push((arrow.source, arrow.target, vec![a]));
            frontier.push(paths.len() - 1);
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in frontier {
                let (s, t, seq) = paths[p].clone();
                for (a, arrow) in q.arrows().iter().enumerate() {
                    if arrow.source == t {
                        let mut s2 = seq.clone();
                        s2.push(a);
                        paths.push((s, arrow.target, s2));
                        next.push(paths.len() - 1);
                    }
                }
            }
            frontier = next;
        }
        let index: std::collections::HashMap<Vec<usize>, usize> = paths
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.2.is_empty())
            .map(|(i, p)| (p.2.clone(), i))
            .collect();
        let nv = q.vertices().len();
        let degree = |seq: &[usize]| -> u8 {
            (seq.iter().filter(|&&a| q.arrows()[a].style == Style::Dotted).count() % 2) as u8
        };
        let labels = paths
            .iter()
            .map(|(s, _, seq)| {
                if seq.is_empty() {
                    format!("e{}", q.vertices()[*s].id)
                } else {
                    seq.iter().map(|&a| q.arrows()[a].id.to_string()).collect::<Vec<_>>().join("*")
                }
            })
            .collect();
        let degrees = paths.iter().map(|p| degree(&p.2)).collect();
        let one = field.one();
        let mut entries = Vec::new();
        for (x, (_, t1, p1)) in paths.iter().enumerate() {
            for (y, (s2, _, p2)) in paths.iter().enumerate() {
                if t1 != s2 {
                    continue;
                }
                let k = if p1.is_empty() {
                    y
                } else if p2.is_empty() {
                    x
                } else {
                    let mut cat = p1.clone();
                    cat.extend_from_slice(p2);
                    index[&cat]
                };
                entries.push((x, y, k, one.clone()));
            }
        }
        let mut identity = vec![field.zero(); paths.len()];
        for v in identity.iter_mut().take(nv) {
            *v = one.clone();
        }
        GradedAlgebra::from_entries_with_identity(field, labels, degrees, entries, Some(identity))
    }
}

/// Coordinates of `v` modulo `sub` along the unit vectors `keep`.
fn coordinates_mod(sub: &Subspace, keep: &[usize], v: &[Scalar]) -> Vec<Scalar> {
    let r = sub.reduce(v);
    keep.iter().map(|&i| r[i].clone()).collect()
}

impl fmt::Display for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (e, o) = self.graded_dims();
        write!(f, "graded algebra over {} of dimension {} ({e}|{o})", self.field, self.dim())
    }
}

/// D ⊗ D, D ⊕ D and the splitting map 1⊗1 ↦ (1,1), 1⊗ε ↦ (ε,ε),
/// ε⊗1 ↦ (ε,−ε), ε⊗ε ↦ (1,−1).
pub fn d_tensor_d_splitting(field: Field) -> (GradedAlgebra, GradedAlgebra, Matrix) {
    let d = GradedAlgebra::d_algebra(field);
    let dd = d.tensor(&d).expect("same field");
    let dsum = d.direct_product(&d).expect("same field");
    // dd basis: 0=1⊗1, 1=1⊗ε, 2=ε⊗1, 3=ε⊗ε; dsum basis: 0=(1,0), 1=(ε,0), 2=(0,1), 3=(0,ε).
    let map = Matrix::from_i64(
        field,
        &[&[1, 0, 0, 1], &[0, 1, 1, 0], &[1, 0, 0, -1], &[0, 1, -1, 0]],
    );
    (dd, dsum, map)
}
