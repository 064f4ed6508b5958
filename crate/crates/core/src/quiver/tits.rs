//! The Tits form q(x) = Σ xᵢ² − Σ_edges xᵢxⱼ, its definiteness, and roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{classify_diagram, Diagram};
use crate::error::{Error, Result};
use crate::exact::{Field, Matrix};

/// Coordinates of enumerated roots range over 0..=ROOT_BOX.
pub const ROOT_BOX: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Definiteness {
    PositiveDefinite,
    SemidefiniteCorank1,
    Indefinite,
}

/// Symmetric matrix B with q(x) = ½ xᵀBx: B = 2I − (edge multiplicities),
/// a loop contributing −2 on the diagonal.
pub fn tits_matrix(d: &Diagram) -> Vec<Vec<i64>> {
    let n = d.vertex_count();
    let mut b = vec![vec![0i64; n]; n];
    for (i, row) in b.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(x, y) in d.edges() {
        if x == y {
            b[x][x] -= 2;
        } else {
            b[x][y] -= 1;
            b[y][x] -= 1;
        }
    }
    b
}

fn q_value(b: &[Vec<i64>], x: &[u32]) -> i64 {
    let mut acc = 0i64;
    for (i, row) in b.iter().enumerate() {
        if x[i] == 0 {
            continue;
        }
        for (j, bij) in row.iter().enumerate() {
            acc += bij * x[i] as i64 * x[j] as i64;
        }
    }
    acc / 2
}

/// Definiteness of the Tits form of a connected diagram. Loops give
/// `Indefinite`.
pub fn tits_definiteness(d: &Diagram) -> Result<Definiteness> {
    if !d.is_connected() {
        return Err(Error::invalid("Tits definiteness is defined here for connected diagrams"));
    }
    if d.has_loop() {
        return Ok(Definiteness::Indefinite);
    }
    let n = d.vertex_count();
    let mut m: Vec<Vec<BigRational>> = tits_matrix(d)
        .into_iter()
        .map(|r| r.into_iter().map(|v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect();
    // Symmetric elimination in index order: a PSD matrix never produces a
    // negative pivot, and a zero pivot forces a zero row.
    let mut rank = 0;
    for k in 0..n {
        let p = m[k][k].clone();
        if p.is_negative() {
            return Ok(Definiteness::Indefinite);
        }
        if p.is_zero() {
            if (k + 1..n).any(|j| !m[k][j].is_zero()) {
                return Ok(Definiteness::Indefinite);
            }
            continue;
        }
        rank += 1;
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &p;
            for j in k..n {
                let t = &f * &m[k][j];
                m[i][j] -= t;
            }
        }
    }
    Ok(match n - rank {
        0 => Definiteness::PositiveDefinite,
        1 => Definiteness::SemidefiniteCorank1,
        _ => Definiteness::Indefinite,
    })
}

/// Kernel of B as primitive integer vectors (first nonzero coordinate positive).
pub fn tits_radical(d: &Diagram) -> Vec<Vec<i64>> {
    let b = tits_matrix(d);
    let rows: Vec<&[i64]> = b.iter().map(Vec::as_slice).collect();
    let m = Matrix::from_i64(Field::Rational, &rows);
    m.kernel_basis()
        .into_iter()
        .map(|v| {
            let qs: Vec<BigRational> = v.iter().map(|s| s.as_rational().expect("rational").clone()).collect();
            let lcm = qs.iter().fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
            let ints: Vec<BigInt> = qs.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect();
            let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            let sign = ints.iter().find(|x| !x.is_zero()).map_or(1, |x| if x.is_negative() { -1 } else { 1 });
            ints.iter()
                .map(|x| (x / &g).to_i64().expect("small") * sign)
                .collect()
        })
        .collect()
}

/// Nonzero vectors with q(x) = 1 and coordinates in 0..=bound, supported on
/// a single connected component; sorted.
pub fn positive_roots_in_box(d: &Diagram, bound: u32) -> Vec<Vec<u32>> {
    let n = d.vertex_count();
    let mut out = Vec::new();
    for comp in d.components() {
        let sub = d.induced(&comp);
        let b = tits_matrix(&sub);
        let k = comp.len();
        let mut x = vec![0u32; k];
        loop {
            // odometer over 0..=bound
            let mut i = 0;
            while i < k {
                if x[i] < bound {
                    x[i] += 1;
                    break;
                }
                x[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
            if q_value(&b, &x) == 1 {
                let mut full = vec![0u32; n];
                for (t, &v) in comp.iter().enumerate() {
                    full[v] = x[t];
                }
                out.push(full);
            }
        }
    }
    out.sort();
    out
}

/// Positive roots of a diagram whose components are all Dynkin.
pub fn positive_roots(d: &Diagram) -> Result<Vec<Vec<u32>>> {
    let class = classify_diagram(d);
    if let Some(c) = class.components.iter().find(|c| !c.kind.is_dynkin()) {
        return Err(Error::invalid(format!("component of type {} is not Dynkin", c.kind)));
    }
    Ok(positive_roots_in_box(d, ROOT_BOX))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn definiteness_examples() {
        assert_eq!(tits_definiteness(&Diagram::path(4)).unwrap(), Definiteness::PositiveDefinite);
        assert_eq!(tits_definiteness(&Diagram::cycle(5)).unwrap(), Definiteness::SemidefiniteCorank1);
        assert_eq!(tits_radical(&Diagram::cycle(5)), vec![vec![1; 5]]);
        let k3 = Diagram::from_edges(2, &[(0, 1), (0, 1), (0, 1)]);
        assert_eq!(tits_definiteness(&k3).unwrap(), Definiteness::Indefinite);
        assert_eq!(q_value(&tits_matrix(&k3), &[1, 1]), -1);
        assert_eq!(tits_definiteness(&Diagram::from_edges(1, &[(0, 0)])).unwrap(), Definiteness::Indefinite);
        assert!(tits_definiteness(&Diagram::new(2)).is_err());
    }

    #[test]
    fn affine_radicals_are_the_null_roots() {
        assert_eq!(tits_radical(&Diagram::by_name("~D4").unwrap()), vec![vec![2, 1, 1, 1, 1]]);
        assert_eq!(tits_radical(&Diagram::by_name("~E6").unwrap()), vec![vec![3, 2, 1, 2, 1, 2, 1]]);
    }

    #[test]
    fn small_root_sets() {
        let a2 = positive_roots(&Diagram::path(2)).unwrap();
        assert_eq!(a2, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(positive_roots(&Diagram::path(3)).unwrap().len(), 6);
        assert_eq!(positive_roots(&Diagram::new(2)).unwrap().len(), 2);
        assert!(positive_roots(&Diagram::cycle(3)).is_err());
    }
}
