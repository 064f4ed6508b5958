use serde::Serialize;

use super::linear::LinearRep;
use super::modp::{all_vectors, Mat, Zp};
use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// A representation of a quiver: a space per vertex, a matrix per arrow
/// (`target dim × source dim`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiverRep {
    pub field: Zp,
    pub dims: Vec<usize>,
    pub ends: Vec<(usize, usize)>,
    pub maps: Vec<Mat>,
}

#[derive(Serialize)]
struct QuiverRepJson<'a> {
    field: String,
    dims: &'a [usize],
    maps: Vec<Vec<Vec<u32>>>,
}

impl QuiverRep {
    pub fn new(q: &Quiver, field: Zp, dims: Vec<usize>, maps: Vec<Mat>) -> Result<QuiverRep> {
        if dims.len() != q.vertex_count() || maps.len() != q.arrows().len() {
            return Err(Error::dim("representation does not fit the quiver"));
        }
        let ends: Vec<(usize, usize)> = q.arrows().iter().map(|a| (a.source, a.target)).collect();
        for (m, &(s, t)) in maps.iter().zip(&ends) {
            if m.rows != dims[t] || m.cols != dims[s] || m.data.iter().any(|&x| x >= field.p()) {
                return Err(Error::dim(format!("arrow {s}->{t}: matrix shape or entries")));
            }
        }
        Ok(QuiverRep { field, dims, ends, maps })
    }

    pub fn zero(q: &Quiver, field: Zp) -> QuiverRep {
        let dims = vec![0; q.vertex_count()];
        let maps = q.arrows().iter().map(|_| Mat::zeros(0, 0)).collect();
        QuiverRep::new(q, field, dims, maps).expect("zero fits")
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn to_linear(&self) -> LinearRep {
        LinearRep {
            field: self.field,
            dims: self.dims.clone(),
            degrees: self.dims.iter().map(|&d| vec![0; d]).collect(),
            operators: vec![Vec::new(); self.dims.len()],
            arrows: self.ends.iter().zip(&self.maps).map(|(&(s, t), m)| (s, t, m.clone())).collect(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let maps = self
            .maps
            .iter()
            .map(|m| (0..m.rows).map(|r| (0..m.cols).map(|c| m.get(r, c)).collect()).collect())
            .collect();
        serde_json::to_value(QuiverRepJson {
            field: format!("Fp:{}", self.field.p()),
            dims: &self.dims,
            maps,
        })
        .expect("serializable")
    }
}

/// Number of matrix entries of a representation with dimension vector `dims`.
pub(crate) fn entry_count(q: &Quiver, dims: &[usize]) -> usize {
    q.arrows().iter().map(|a| dims[a.source] * dims[a.target]).sum()
}

/// Every representation with dimension vector `dims`.
pub fn all_quiver_reps<'a>(q: &'a Quiver, field: Zp, dims: &'a [usize]) -> impl Iterator<Item = QuiverRep> + 'a {
    let n = entry_count(q, dims);
    let ends: Vec<(usize, usize)> = q.arrows().iter().map(|a| (a.source, a.target)).collect();
    all_vectors(field, n).map(move |x| {
        let mut k = 0;
        let maps = ends
            .iter()
            .map(|&(s, t)| {
                let len = dims[s] * dims[t];
                let m = Mat {
                    rows: dims[t],
                    cols: dims[s],
                    data: x[k..k + len].to_vec(),
                };
                k += len;
                m
            })
            .collect();
        QuiverRep {
            field,
            dims: dims.to_vec(),
            ends: ends.clone(),
            maps,
        }
    })
}
