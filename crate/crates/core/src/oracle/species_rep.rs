//! Representations of a superspecies: graded D_i-modules with canonical
//! homogeneous bases and degree-0, balanced, D_j-linear structure maps
//! `φ: M ⊗ V_i → V_j`, plus the functor to representations of Q_S.

use std::collections::BTreeMap;

use serde::Serialize;

use super::linear::LinearRep;
use super::modp::{all_vectors, Mat, Zp};
use super::quiver_rep::QuiverRep;
use crate::error::{Error, Result};
use crate::species::{Bimodule, Label, SpeciesQuiver, Superspecies};

/// The graded module at a vertex. K: `d0` even then `d1` odd basis vectors.
/// D: free of rank `rank`, basis `v_s` (index s) then `εv_s` (index s + rank).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "type")]
pub enum VertexSpace {
    K { d0: usize, d1: usize },
    D { rank: usize },
}

impl VertexSpace {
    pub fn kdim(self) -> usize {
        match self {
            VertexSpace::K { d0, d1 } => d0 + d1,
            VertexSpace::D { rank } => 2 * rank,
        }
    }

    fn degrees(self) -> Vec<u8> {
        match self {
            VertexSpace::K { d0, d1 } => [vec![0; d0], vec![1; d1]].concat(),
            VertexSpace::D { rank } => [vec![0; rank], vec![1; rank]].concat(),
        }
    }

    /// The ε action, for D vertices.
    fn epsilon(self) -> Option<Mat> {
        match self {
            VertexSpace::K { .. } => None,
            VertexSpace::D { rank } => Some(swap(rank)),
        }
    }

    /// Basis indices of the degree-`z` part of the generating set seen by Q_S:
    /// the degree-`z` vectors at K vertices, the `v_s` at D vertices.
    fn quiver_part(self, z: u8) -> Vec<usize> {
        match self {
            VertexSpace::K { d0, .. } if z == 0 => (0..d0).collect(),
            VertexSpace::K { d0, d1 } => (d0..d0 + d1).collect(),
            VertexSpace::D { rank } => (0..rank).collect(),
        }
    }
}

/// The involution exchanging index k and k + n.
fn swap(n: usize) -> Mat {
    let mut m = Mat::zeros(2 * n, 2 * n);
    for k in 0..n {
        m.set(k + n, k, 1);
        m.set(k, k + n, 1);
    }
    m
}

/// K-basis of a bimodule with degrees and the ε actions as matrices on
/// coordinate columns: `left` is m ↦ εm, `right` is m ↦ mε. The first
/// `left_basis_len` basis vectors are the left basis.
struct BimoduleBasis {
    degrees: Vec<u8>,
    left: Option<Mat>,
    right: Option<Mat>,
}

fn bimodule_basis(b: Bimodule, f: Zp) -> BimoduleBasis {
    match b {
        Bimodule::KK { .. } => BimoduleBasis {
            degrees: b.left_basis_degrees(),
            left: None,
            right: None,
        },
        Bimodule::KtoD { rank } => BimoduleBasis {
            degrees: [vec![0; rank], vec![1; rank]].concat(),
            left: Some(swap(rank)),
            right: None,
        },
        Bimodule::DtoK { rank } => BimoduleBasis {
            degrees: [vec![0; rank], vec![1; rank]].concat(),
            left: None,
            right: Some(swap(rank)),
        },
        Bimodule::DD { plus, minus } => {
            let n = plus + minus;
            let mut right = Mat::zeros(2 * n, 2 * n);
            for l in 0..n {
                let s = f.from_i64(b.dd_sign(l));
                // m_l ε = s εm_l and (εm_l) ε = s m_l
                right.set(l + n, l, s);
                right.set(l, l + n, s);
            }
            BimoduleBasis {
                degrees: [vec![0; n], vec![1; n]].concat(),
                left: Some(swap(n)),
                right: Some(right),
            }
        }
    }
}

/// A representation: a space per vertex and, per nonzero bimodule, the
/// matrix of `φ` with columns indexed by `m · dim V_i + v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpeciesRep {
    pub field: Zp,
    pub spaces: Vec<VertexSpace>,
    pub phi: BTreeMap<(usize, usize), Mat>,
}

/// Linear constraints on the entries of `φ` for one pair: degree 0, balanced
/// over D_i, linear over D_j. Returns a basis of the solutions.
fn structure_map_space(f: Zp, b: Bimodule, vi: VertexSpace, vj: VertexSpace) -> Vec<Vec<u32>> {
    let mb = bimodule_basis(b, f);
    let dm = mb.degrees.len();
    let (ni, nj) = (vi.kdim(), vj.kdim());
    let (di, dj) = (vi.degrees(), vj.degrees());
    let cols = dm * ni;
    let unknowns = nj * cols;
    let var = |t: usize, m: usize, v: usize| t * cols + m * ni + v;
    let mut eqs: Vec<Vec<u32>> = Vec::new();
    for t in 0..nj {
        for m in 0..dm {
            for v in 0..ni {
                if dj[t] != (mb.degrees[m] + di[v]) % 2 {
                    let mut e = vec![0u32; unknowns];
                    e[var(t, m, v)] = 1;
                    eqs.push(e);
                }
            }
        }
    }
    if let (Some(r), Some(ei)) = (&mb.right, vi.epsilon()) {
        // φ(mε ⊗ v) = φ(m ⊗ εv)
        for t in 0..nj {
            for m in 0..dm {
                for v in 0..ni {
                    let mut e = vec![0u32; unknowns];
                    for k in 0..dm {
                        let x = var(t, k, v);
                        e[x] = f.add(e[x], r.get(k, m));
                    }
                    for u in 0..ni {
                        let x = var(t, m, u);
                        e[x] = f.sub(e[x], ei.get(u, v));
                    }
                    eqs.push(e);
                }
            }
        }
    }
    if let (Some(l), Some(ej)) = (&mb.left, vj.epsilon()) {
        // φ(εm ⊗ v) = ε φ(m ⊗ v)
        for t in 0..nj {
            for m in 0..dm {
                for v in 0..ni {
                    let mut e = vec![0u32; unknowns];
                    for k in 0..dm {
                        let x = var(t, k, v);
                        e[x] = f.add(e[x], l.get(k, m));
                    }
                    for u in 0..nj {
                        let x = var(u, m, v);
                        e[x] = f.sub(e[x], ej.get(t, u));
                    }
                    eqs.push(e);
                }
            }
        }
    }
    if unknowns == 0 {
        return Vec::new();
    }
    if eqs.is_empty() {
        return (0..unknowns)
            .map(|i| {
                let mut v = vec![0; unknowns];
                v[i] = 1;
                v
            })
            .collect();
    }
    Mat::from_rows(&eqs).kernel(f)
}

fn check_fits(s: &Superspecies, spaces: &[VertexSpace]) -> Result<()> {
    if spaces.len() != s.len() {
        return Err(Error::dim("one vertex space per species vertex"));
    }
    for (i, (sp, l)) in spaces.iter().zip(s.labels()).enumerate() {
        let ok = matches!((sp, l), (VertexSpace::K { .. }, Label::K) | (VertexSpace::D { .. }, Label::D));
        if !ok {
            return Err(Error::invalid(format!("vertex {i}: space does not match label {l:?}")));
        }
    }
    Ok(())
}

impl SpeciesRep {
    pub fn zero(s: &Superspecies, field: Zp) -> SpeciesRep {
        let spaces: Vec<VertexSpace> = s
            .labels()
            .iter()
            .map(|l| match l {
                Label::K => VertexSpace::K { d0: 0, d1: 0 },
                Label::D => VertexSpace::D { rank: 0 },
            })
            .collect();
        let phi = s.bimodules().map(|(k, _)| (k, Mat::zeros(0, 0))).collect();
        SpeciesRep { field, spaces, phi }
    }

    /// Dimension vector of the corresponding Q_S representation.
    pub fn quiver_dims(&self, layout: &SpeciesQuiver) -> Vec<usize> {
        quiver_dims_of(&self.spaces, layout)
    }

    /// Every structure map satisfies the degree, balance and linearity rules.
    pub fn validate(&self, s: &Superspecies) -> Result<()> {
        check_fits(s, &self.spaces)?;
        let f = self.field;
        for ((i, j), b) in s.bimodules() {
            let phi = self.phi.get(&(i, j)).ok_or_else(|| Error::dim("missing structure map"))?;
            let space = structure_map_space(f, b, self.spaces[i], self.spaces[j]);
            let (vi, vj) = (self.spaces[i], self.spaces[j]);
            let cols = bimodule_basis(b, f).degrees.len() * vi.kdim();
            if phi.rows != vj.kdim() || phi.cols != cols {
                return Err(Error::dim(format!("structure map {i}->{j} has the wrong shape")));
            }
            let sub = if space.is_empty() {
                Mat::zeros(0, phi.data.len())
            } else {
                Mat::from_rows(&space)
            };
            let mut stacked = sub.data.clone();
            stacked.extend_from_slice(&phi.data);
            let rank_with = Mat {
                rows: sub.rows + 1,
                cols: phi.data.len(),
                data: stacked,
            }
            .rank(f);
            if rank_with != sub.rank(f) {
                return Err(Error::invalid(format!("structure map {i}->{j} violates the module rules")));
            }
        }
        Ok(())
    }

    /// The representation as vertex spaces with the ε action as a vertex
    /// operator and one map `φ(m ⊗ -)` per bimodule basis vector m.
    pub fn to_linear(&self, s: &Superspecies) -> LinearRep {
        let mut arrows = Vec::new();
        for ((i, j), b) in s.bimodules() {
            let phi = &self.phi[&(i, j)];
            let ni = self.spaces[i].kdim();
            let dm = bimodule_basis(b, self.field).degrees.len();
            let rows: Vec<usize> = (0..phi.rows).collect();
            for m in 0..dm {
                let cols: Vec<usize> = (m * ni..(m + 1) * ni).collect();
                arrows.push((i, j, phi.submatrix(&rows, &cols)));
            }
        }
        LinearRep {
            field: self.field,
            dims: self.spaces.iter().map(|s| s.kdim()).collect(),
            degrees: self.spaces.iter().map(|s| s.degrees()).collect(),
            operators: self.spaces.iter().map(|s| s.epsilon().into_iter().collect()).collect(),
            arrows,
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let phi: Vec<serde_json::Value> = self
            .phi
            .iter()
            .map(|(&(i, j), m)| {
                let rows: Vec<Vec<u32>> = (0..m.rows).map(|r| (0..m.cols).map(|c| m.get(r, c)).collect()).collect();
                serde_json::json!({"source": i, "target": j, "matrix": rows})
            })
            .collect();
        serde_json::json!({
            "field": format!("Fp:{}", self.field.p()),
            "spaces": self.spaces,
            "phi": phi,
        })
    }
}

pub(crate) fn quiver_dims_of(spaces: &[VertexSpace], layout: &SpeciesQuiver) -> Vec<usize> {
    let mut dims = vec![0; layout.quiver.vertex_count()];
    for (i, sp) in spaces.iter().enumerate() {
        for z in 0..2u8 {
            if let Some(v) = layout.vertex[i][z as usize] {
                dims[v] = sp.quiver_part(z).len();
            }
        }
    }
    dims
}

/// All vertex-space assignments whose Q_S dimension vector has entries at
/// most `vertex` and total between 1 and `total`.
pub(crate) fn all_space_choices(s: &Superspecies, vertex: usize, total: usize) -> Vec<Vec<VertexSpace>> {
    let mut out = vec![(Vec::new(), 0usize)];
    for l in s.labels() {
        let options: Vec<(VertexSpace, usize)> = match l {
            Label::K => (0..=vertex)
                .flat_map(|d0| (0..=vertex).map(move |d1| (VertexSpace::K { d0, d1 }, d0 + d1)))
                .collect(),
            Label::D => (0..=vertex).map(|rank| (VertexSpace::D { rank }, rank)).collect(),
        };
        out = out
            .into_iter()
            .flat_map(|(prefix, used)| {
                options.iter().filter(move |(_, d)| used + d <= total).map(move |&(sp, d)| {
                    let mut p = prefix.clone();
                    p.push(sp);
                    (p, used + d)
                })
            })
            .collect();
    }
    out.into_iter().filter(|(_, used)| *used >= 1).map(|(p, _)| p).collect()
}

/// Solution-space bases per pair, in bimodule order.
pub(crate) fn structure_spaces(s: &Superspecies, f: Zp, spaces: &[VertexSpace]) -> Vec<((usize, usize), Vec<Vec<u32>>)> {
    s.bimodules()
        .map(|((i, j), b)| ((i, j), structure_map_space(f, b, spaces[i], spaces[j])))
        .collect()
}

/// Every representation on the given vertex spaces, enumerated from the
/// solution spaces of the structure-map constraints.
pub fn all_species_reps<'a>(
    s: &'a Superspecies,
    f: Zp,
    spaces: &'a [VertexSpace],
) -> impl Iterator<Item = SpeciesRep> + 'a {
    let bases = structure_spaces(s, f, spaces);
    let shapes: Vec<(usize, usize)> = s
        .bimodules()
        .map(|((i, j), b)| (spaces[j].kdim(), bimodule_basis(b, f).degrees.len() * spaces[i].kdim()))
        .collect();
    let n: usize = bases.iter().map(|(_, b)| b.len()).sum();
    all_vectors(f, n).map(move |coeffs| {
        let mut k = 0;
        let mut phi = BTreeMap::new();
        for ((key, basis), &(rows, cols)) in bases.iter().zip(&shapes) {
            let mut data = vec![0u32; rows * cols];
            for b in basis {
                let c = coeffs[k];
                k += 1;
                if c == 0 {
                    continue;
                }
                for (x, y) in data.iter_mut().zip(b) {
                    *x = f.add(*x, f.mul(c, *y));
                }
            }
            phi.insert(*key, Mat { rows, cols, data });
        }
        SpeciesRep {
            field: f,
            spaces: spaces.to_vec(),
            phi,
        }
    })
}

/// Number of representations on the given spaces, `None` on overflow.
pub(crate) fn species_rep_count(s: &Superspecies, f: Zp, spaces: &[VertexSpace]) -> Option<u64> {
    let n: usize = structure_spaces(s, f, spaces).iter().map(|(_, b)| b.len()).sum();
    (f.p() as u64).checked_pow(n as u32)
}

/// The functor to representations of Q_S: vertex (i, z) gets the degree-z
/// generators of V_i, and the arrow for left-basis vector m_l and source
/// parity z carries the coefficients of `φ(m_l ⊗ -)` on them.
pub fn functor_h(rep: &SpeciesRep, s: &Superspecies) -> Result<QuiverRep> {
    rep.validate(s)?;
    let layout = s.quiver_layout();
    let dims = rep.quiver_dims(&layout);
    let mut maps = Vec::new();
    for o in &layout.origin {
        let (vi, vj) = (rep.spaces[o.source], rep.spaces[o.target]);
        let b = s.bimodule(o.source, o.target).expect("arrow comes from a bimodule");
        let zl = b.left_basis_degrees()[o.l];
        let zt = (o.z + zl) % 2;
        let domain = vi.quiver_part(o.z);
        let rows: Vec<usize> = match vj {
            VertexSpace::K { .. } => vj.quiver_part(zt),
            VertexSpace::D { rank } => (0..rank).map(|t| t + zt as usize * rank).collect(),
        };
        let ni = vi.kdim();
        let cols: Vec<usize> = domain.iter().map(|&v| o.l * ni + v).collect();
        maps.push(rep.phi[&(o.source, o.target)].submatrix(&rows, &cols));
    }
    QuiverRep::new(&layout.quiver, rep.field, dims, maps)
}

/// The quasi-inverse: V_i is rebuilt from the spaces at (i, 0) and (i, 1),
/// and `φ` from the arrow blocks, extended by D_j-linearity and then by the
/// balance rule.
pub fn functor_h_inverse(r: &QuiverRep, s: &Superspecies) -> Result<SpeciesRep> {
    s.check()?;
    let layout = s.quiver_layout();
    let expected: Vec<(usize, usize)> = layout.quiver.arrows().iter().map(|a| (a.source, a.target)).collect();
    if r.dims.len() != layout.quiver.vertex_count() || r.ends != expected {
        return Err(Error::dim("representation is not on the quiver of this species"));
    }
    let f = r.field;
    let spaces: Vec<VertexSpace> = s
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let d = |z: usize| layout.vertex[i][z].map_or(0, |v| r.dims[v]);
            match l {
                Label::K => VertexSpace::K { d0: d(0), d1: d(1) },
                Label::D => VertexSpace::D { rank: d(0) },
            }
        })
        .collect();
    let mut phi: BTreeMap<(usize, usize), Mat> = BTreeMap::new();
    for ((i, j), b) in s.bimodules() {
        let dm = bimodule_basis(b, f).degrees.len();
        phi.insert((i, j), Mat::zeros(spaces[j].kdim(), dm * spaces[i].kdim()));
    }
    for (o, m) in layout.origin.iter().zip(&r.maps) {
        let (vi, vj) = (spaces[o.source], spaces[o.target]);
        let b = s.bimodule(o.source, o.target).expect("arrow comes from a bimodule");
        let zt = (o.z + b.left_basis_degrees()[o.l]) % 2;
        let domain = vi.quiver_part(o.z);
        let rows: Vec<usize> = match vj {
            VertexSpace::K { .. } => vj.quiver_part(zt),
            VertexSpace::D { rank } => (0..rank).map(|t| t + zt as usize * rank).collect(),
        };
        let ni = vi.kdim();
        let target = phi.get_mut(&(o.source, o.target)).expect("allocated");
        for (c, &v) in domain.iter().enumerate() {
            for (rr, &t) in rows.iter().enumerate() {
                target.set(t, o.l * ni + v, m.get(rr, c));
            }
        }
    }
    for ((i, j), b) in s.bimodules() {
        let mb = bimodule_basis(b, f);
        let (vi, vj) = (spaces[i], spaces[j]);
        let ni = vi.kdim();
        let nl = b.left_basis_len();
        let dm = mb.degrees.len();
        let p = phi.get_mut(&(i, j)).expect("allocated");
        let column = |p: &Mat, c: usize| -> Vec<u32> { (0..p.rows).map(|t| p.get(t, c)).collect() };
        let generators: Vec<usize> = match vi {
            VertexSpace::K { .. } => (0..ni).collect(),
            VertexSpace::D { rank } => (0..rank).collect(),
        };
        if let (Some(l), Some(ej)) = (&mb.left, vj.epsilon()) {
            // φ(εm_l ⊗ v) = ε φ(m_l ⊗ v)
            for ml in 0..nl {
                let (k, c) = (0..dm)
                    .find_map(|k| (l.get(k, ml) != 0).then(|| (k, l.get(k, ml))))
                    .expect("ε maps the left basis to basis vectors");
                let cinv = f.inv(c);
                for &v in &generators {
                    let x = column(p, ml * ni + v);
                    for t in 0..p.rows {
                        let mut acc = 0;
                        for (u, &xu) in x.iter().enumerate() {
                            acc = f.add(acc, f.mul(ej.get(t, u), xu));
                        }
                        p.set(t, k * ni + v, f.mul(cinv, acc));
                    }
                }
            }
        }
        if let (Some(rm), VertexSpace::D { rank }) = (&mb.right, vi) {
            // φ(m ⊗ εv) = φ(mε ⊗ v)
            for m in 0..dm {
                for s_ in 0..rank {
                    for t in 0..p.rows {
                        let mut acc = 0;
                        for k in 0..dm {
                            let c = rm.get(k, m);
                            if c != 0 {
                                acc = f.add(acc, f.mul(c, p.get(t, k * ni + s_)));
                            }
                        }
                        p.set(t, m * ni + s_ + rank, acc);
                    }
                }
            }
        }
    }
    let rep = SpeciesRep { field: f, spaces, phi };
    rep.validate(s)?;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Zp {
        Zp::new(2).unwrap()
    }

    #[test]
    fn functor_dimensions() {
        let kk = Superspecies::new(vec![Label::K, Label::K]).with(0, 1, Bimodule::KK { d0: 1, d1: 0 });
        let spaces = [VertexSpace::K { d0: 2, d1: 1 }, VertexSpace::K { d0: 0, d1: 0 }];
        let rep = all_species_reps(&kk, f2(), &spaces).next().unwrap();
        let h = functor_h(&rep, &kk).unwrap();
        assert_eq!(h.dims, vec![2, 1, 0, 0]);

        let dk = Superspecies::new(vec![Label::D, Label::K]).with(0, 1, Bimodule::DtoK { rank: 1 });
        let spaces = [VertexSpace::D { rank: 3 }, VertexSpace::K { d0: 0, d1: 0 }];
        let rep = all_species_reps(&dk, f2(), &spaces).next().unwrap();
        assert_eq!(functor_h(&rep, &dk).unwrap().dims, vec![3, 0, 0]);

        let zero = SpeciesRep::zero(&dk, f2());
        assert_eq!(functor_h(&zero, &dk).unwrap().total_dim(), 0);
    }

    #[test]
    fn inverse_on_a3() {
        let kd = Superspecies::new(vec![Label::K, Label::D]).with(0, 1, Bimodule::KtoD { rank: 1 });
        let layout = kd.quiver_layout();
        let q = &layout.quiver;
        let r = QuiverRep::new(q, f2(), vec![1, 1, 1], vec![Mat::identity(1), Mat::identity(1)]).unwrap();
        let back = functor_h_inverse(&r, &kd).unwrap();
        assert_eq!(back.spaces, vec![VertexSpace::K { d0: 1, d1: 1 }, VertexSpace::D { rank: 1 }]);
        assert_eq!(functor_h(&back, &kd).unwrap(), r);
    }

    #[test]
    fn inverse_then_functor_is_the_identity() {
        let f3 = Zp::new(3).unwrap();
        let cases = [
            Superspecies::new(vec![Label::D, Label::K]).with(0, 1, Bimodule::DtoK { rank: 1 }),
            Superspecies::new(vec![Label::D, Label::D]).with(0, 1, Bimodule::DD { plus: 1, minus: 1 }),
            Superspecies::new(vec![Label::K, Label::K]).with(0, 1, Bimodule::KK { d0: 1, d1: 1 }),
        ];
        for s in &cases {
            let layout = s.quiver_layout();
            for dims in [vec![1; layout.quiver.vertex_count()], {
                let mut d = vec![1; layout.quiver.vertex_count()];
                d[0] = 2;
                d
            }] {
                for r in super::super::quiver_rep::all_quiver_reps(&layout.quiver, f3, &dims).take(200) {
                    let back = functor_h_inverse(&r, s).unwrap();
                    assert_eq!(functor_h(&back, s).unwrap(), r, "{s}");
                }
            }
        }
    }

    #[test]
    fn solution_space_sizes_match_the_quiver() {
        // free parameters of φ equal the matrix entries on the Q_S side
        let f = Zp::new(3).unwrap();
        let dd = Superspecies::new(vec![Label::D, Label::D]).with(0, 1, Bimodule::DD { plus: 1, minus: 1 });
        let spaces = [VertexSpace::D { rank: 2 }, VertexSpace::D { rank: 1 }];
        assert_eq!(structure_spaces(&dd, f, &spaces)[0].1.len(), 2 * 2);
        let dk = Superspecies::new(vec![Label::D, Label::K]).with(0, 1, Bimodule::DtoK { rank: 1 });
        let spaces = [VertexSpace::D { rank: 1 }, VertexSpace::K { d0: 2, d1: 1 }];
        assert_eq!(structure_spaces(&dk, f, &spaces)[0].1.len(), 3);
    }
}
