//! The graded species of an algebra with respect to a complete set of
//! orthogonal degree-0 idempotents.

use super::GradedAlgebra;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar, Subspace};
use crate::species::{Bimodule, Label, Superspecies};

fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Reads `e_i (J/J²) e_j` as the bimodule on `i → j` (products compose left
/// to right, so left multiplication by `e_i` selects the source).
pub fn graded_species_of(a: &GradedAlgebra, idems: &[Vec<Scalar>]) -> Result<Superspecies> {
    let field = a.field();
    let n = a.dim();
    if idems.iter().any(|e| e.len() != n) {
        return Err(Error::dim("idempotent vector length"));
    }
    for (i, e) in idems.iter().enumerate() {
        if a.degree_of(e) != Some(0) && !is_zero(e) {
            return Err(Error::invalid(format!("idempotent {i} is not of degree 0")));
        }
        for (j, f) in idems.iter().enumerate() {
            let p = a.multiply(e, f)?;
            let want: &[Scalar] = if i == j { e } else { &a.zero_vector() };
            if p != want {
                return Err(Error::invalid(format!("idempotents {i} and {j} are not orthogonal idempotents")));
            }
        }
    }
    let mut total = a.zero_vector();
    for e in idems {
        total = total.iter().zip(e).map(|(x, y)| x + y).collect();
    }
    if total != a.one()? {
        return Err(Error::invalid("idempotents do not sum to 1"));
    }

    let j = a.graded_radical()?;
    let jsub = j.subspace();
    let jbasis = j.basis().to_vec();
    let mut squares = Vec::new();
    for x in &jbasis {
        for y in &jbasis {
            let p = a.mul_unchecked(x, y);
            if !is_zero(&p) {
                squares.push(p);
            }
        }
    }
    let j2 = Subspace::span(field, n, &squares);
    let sandwich = |e: &[Scalar], x: &[Scalar], f: &[Scalar]| a.mul_unchecked(&a.mul_unchecked(e, x), f);

    // vertex labels and normalized odd units
    let mut labels = Vec::new();
    let mut units: Vec<Option<Vec<Scalar>>> = Vec::new();
    for (i, e) in idems.iter().enumerate() {
        let corner: Vec<Vec<Scalar>> = (0..n).map(|b| sandwich(e, &a.basis_vector(b), e)).collect();
        let top = jsub.sum(&Subspace::span(field, n, &corner)).dim() - jsub.dim();
        match top {
            1 => {
                labels.push(Label::K);
                units.push(None);
            }
            2 => {
                let u = (0..n)
                    .filter(|&b| a.degrees()[b] == 1)
                    .map(|b| corner[b].clone())
                    .find(|v| !jsub.contains(v))
                    .ok_or_else(|| Error::invalid(format!("corner {i} has no odd unit; not gr-division")))?;
                // u² ≡ c·e modulo J
                let u2 = a.mul_unchecked(&u, &u);
                let c = scalar_multiple_mod(&jsub, e, &u2)
                    .ok_or_else(|| Error::invalid(format!("corner {i} is not gr-division")))?;
                if c.is_zero() {
                    return Err(Error::invalid(format!("odd element of corner {i} is nilpotent; not gr-division")));
                }
                let s = field.sqrt(&c).ok_or_else(|| Error::UnsupportedField {
                    field: field.to_string(),
                    reason: format!("ε² = {c} at vertex {i} is not a square"),
                })?;
                let s_inv = s.inv().expect("nonzero");
                labels.push(Label::D);
                units.push(Some(u.iter().map(|x| x * &s_inv).collect()));
            }
            d => {
                return Err(Error::invalid(format!(
                    "corner {i} modulo the radical has dimension {d}; expected 1 or 2"
                )))
            }
        }
    }

    let mut s = Superspecies::new(labels.clone());
    for (i, ei) in idems.iter().enumerate() {
        for (k, ek) in idems.iter().enumerate() {
            let corner: Vec<Vec<Scalar>> = jbasis.iter().map(|x| sandwich(ei, x, ek)).collect();
            let mut degree_dims = [0usize; 2];
            for (deg, slot) in degree_dims.iter_mut().enumerate() {
                let part: Vec<Vec<Scalar>> = corner
                    .iter()
                    .filter(|v| !is_zero(v) && a.degree_of(v) == Some(deg as u8))
                    .cloned()
                    .collect();
                *slot = j2.sum(&Subspace::span(field, n, &part)).dim() - j2.dim();
            }
            let [d0, d1] = degree_dims;
            if d0 + d1 == 0 {
                continue;
            }
            let b = match (labels[i], labels[k]) {
                (Label::K, Label::K) => Bimodule::KK { d0, d1 },
                (Label::K, Label::D) | (Label::D, Label::K) => {
                    if d0 != d1 {
                        return Err(Error::Internal(format!("bimodule {i}->{k} is not free over D")));
                    }
                    if labels[i] == Label::K {
                        Bimodule::KtoD { rank: d0 }
                    } else {
                        Bimodule::DtoK { rank: d0 }
                    }
                }
                (Label::D, Label::D) => {
                    let ui = units[i].as_ref().expect("D vertex");
                    let uk = units[k].as_ref().expect("D vertex");
                    let (plus, minus) = dd_split(a, &j2, &corner, ui, uk)?;
                    Bimodule::DD { plus, minus }
                }
            };
            s.set_bimodule(i, k, b);
        }
    }
    Ok(s)
}

/// `c` with `v − c·e ∈ sub`, if any.
fn scalar_multiple_mod(sub: &Subspace, e: &[Scalar], v: &[Scalar]) -> Option<Scalar> {
    let rv = sub.reduce(v);
    let re = sub.reduce(e);
    let p = re.iter().position(|x| !x.is_zero())?;
    let c = &rv[p] * &re[p].inv().expect("nonzero");
    let rest: Vec<Scalar> = rv.iter().zip(&re).map(|(x, y)| x - &(&c * y)).collect();
    is_zero(&rest).then_some(c)
}

/// Multiplicities of the ±1 eigenspaces of `m ↦ u_i m u_k` on the corner of
/// J/J², halved (each block is free of rank one over D).
fn dd_split(
    a: &GradedAlgebra,
    j2: &Subspace,
    corner: &[Vec<Scalar>],
    ui: &[Scalar],
    uk: &[Scalar],
) -> Result<(usize, usize)> {
    let field = a.field();
    let n = a.dim();
    let pick = j2.complement_indices(corner);
    let basis: Vec<Vec<Scalar>> = pick.iter().map(|&p| corner[p].clone()).collect();
    let d = basis.len();
    // columns: chosen basis, then J² basis; solve for coordinates mod J²
    let mut cols = basis.clone();
    cols.extend(j2.basis().iter().cloned());
    let system = Matrix::from_columns(field, n, &cols);
    let mut t = Matrix::zeros(field, d, d);
    for (c, v) in basis.iter().enumerate() {
        let w = a.mul_unchecked(&a.mul_unchecked(ui, v), uk);
        let coords = system
            .solve(&w)?
            .ok_or_else(|| Error::Internal("ε-conjugate left the corner".into()))?;
        for r in 0..d {
            t.set(r, c, coords[r].clone());
        }
    }
    let id = Matrix::identity(field, d);
    let plus = t.sub(&id)?.kernel_basis().len();
    let minus = t.add(&id)?.kernel_basis().len();
    if plus + minus != d || plus % 2 != 0 || minus % 2 != 0 {
        return Err(Error::Internal(format!(
            "ε-conjugation has eigenspaces {plus}+{minus} on a corner of dimension {d}"
        )));
    }
    Ok((plus / 2, minus / 2))
}
