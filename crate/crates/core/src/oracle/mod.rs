//! Brute-force representation oracle over small prime fields: enumerate
//! representations per dimension vector, test indecomposability through the
//! endomorphism algebra, bucket into isomorphism classes, and cross-check the
//! functor between species and quiver representations.

mod linear;
mod modp;
mod quiver_rep;
mod species_rep;

use std::collections::BTreeMap;

use serde::Serialize;

pub use linear::{same_summands, LinearRep, Morphism};
pub use modp::{all_vectors, Mat, Zp};
pub use quiver_rep::{all_quiver_reps, QuiverRep};
pub use species_rep::{all_species_reps, functor_h, functor_h_inverse, SpeciesRep, VertexSpace};

use crate::error::{Error, Result};
use crate::quiver::{positive_roots, Quiver};
use crate::species::Superspecies;

pub const BUDGET_ENV: &str = "SUPERREP_BUDGET";

/// Enumeration caps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Largest total dimension (on the quiver side).
    pub total: usize,
    /// Largest dimension at a single quiver vertex.
    pub vertex: usize,
    /// Largest number of representations enumerated.
    pub tuples: u64,
    /// Largest exhaustive search inside an endomorphism or Hom space.
    pub search: u64,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            total: 4,
            vertex: 2,
            tuples: 10_000_000,
            search: 1 << 20,
        }
    }
}

impl Budget {
    /// `"7"` sets the total; otherwise `key=value` pairs separated by commas
    /// with keys `total`, `vertex`, `tuples`, `search`.
    pub fn parse(text: &str) -> Result<Budget> {
        let mut b = Budget::default();
        let text = text.trim();
        if let Ok(n) = text.parse::<usize>() {
            b.total = n;
            return Ok(b);
        }
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("budget entry {part:?} is not key=value")))?;
            let n: u64 = v
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("budget value {v:?} is not a number")))?;
            match k.trim() {
                "total" => b.total = n as usize,
                "vertex" => b.vertex = n as usize,
                "tuples" => b.tuples = n,
                "search" => b.search = n,
                other => return Err(Error::invalid(format!("unknown budget key {other:?}"))),
            }
        }
        Ok(b)
    }

    /// The default, overridden by `SUPERREP_BUDGET` when set.
    pub fn from_env() -> Result<Budget> {
        match std::env::var(BUDGET_ENV) {
            Ok(v) => Budget::parse(&v),
            Err(_) => Ok(Budget::default()),
        }
    }
}

/// Indecomposable count for one dimension vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimCount {
    pub dims: Vec<usize>,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub field: String,
    pub budget: Budget,
    pub total: usize,
    pub enumerated: u64,
    /// Only dimension vectors with at least one indecomposable.
    pub per_dim: Vec<DimCount>,
}

impl CountReport {
    pub fn dimension_vectors(&self) -> Vec<Vec<usize>> {
        self.per_dim.iter().map(|d| d.dims.clone()).collect()
    }
}

/// Dimension vectors of length `n`, entries ≤ `vertex`, total in 1..=`total`.
pub fn dimension_vectors(n: usize, vertex: usize, total: usize) -> Vec<Vec<usize>> {
    let mut out = vec![(Vec::new(), 0usize)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|(prefix, used)| {
                (0..=vertex).filter(move |d| used + d <= total).map(move |d| {
                    let mut p: Vec<usize> = prefix.clone();
                    p.push(d);
                    (p, used + d)
                })
            })
            .collect();
    }
    out.into_iter().filter(|(_, u)| *u >= 1).map(|(p, _)| p).collect()
}

fn pow_count(p: u32, n: usize) -> Option<u64> {
    (p as u64).checked_pow(u32::try_from(n).ok()?)
}

fn spend(used: &mut u64, add: Option<u64>, budget: &Budget) -> Result<()> {
    match add.and_then(|a| used.checked_add(a)) {
        Some(n) if n <= budget.tuples => {
            *used = n;
            Ok(())
        }
        _ => Err(Error::Budget(format!(
            "enumeration exceeds {} representations; raise with {BUDGET_ENV}=tuples=<n>",
            budget.tuples
        ))),
    }
}

/// Representatives of the isomorphism classes of indecomposables.
fn indecomposable_classes(reps: impl Iterator<Item = LinearRep>, cap: u64) -> Result<Vec<LinearRep>> {
    let mut classes: Vec<LinearRep> = Vec::new();
    for r in reps {
        if !r.is_indecomposable(cap)? {
            continue;
        }
        let mut seen = false;
        for c in &classes {
            if c.is_isomorphic(&r, cap)? {
                seen = true;
                break;
            }
        }
        if !seen {
            classes.push(r);
        }
    }
    Ok(classes)
}

fn field_name(f: Zp) -> String {
    format!("Fp:{}", f.p())
}

/// Isomorphism classes of indecomposable representations of `q` within budget.
pub fn count_quiver_indecomposables(q: &Quiver, field: Zp, budget: &Budget) -> Result<CountReport> {
    let dims_list = dimension_vectors(q.vertex_count(), budget.vertex, budget.total);
    let mut used = 0u64;
    for d in &dims_list {
        spend(&mut used, pow_count(field.p(), quiver_rep::entry_count(q, d)), budget)?;
    }
    let mut per_dim = Vec::new();
    for d in dims_list {
        let classes = indecomposable_classes(all_quiver_reps(q, field, &d).map(|r| r.to_linear()), budget.search)?;
        if !classes.is_empty() {
            per_dim.push(DimCount { dims: d, count: classes.len() });
        }
    }
    Ok(CountReport {
        field: field_name(field),
        budget: *budget,
        total: per_dim.iter().map(|d| d.count).sum(),
        enumerated: used,
        per_dim,
    })
}

/// Species-side enumeration grouped by the dimension vector on Q_S.
fn species_space_groups(s: &Superspecies, budget: &Budget) -> BTreeMap<Vec<usize>, Vec<VertexSpace>> {
    let layout = s.quiver_layout();
    species_rep::all_space_choices(s, budget.vertex, budget.total)
        .into_iter()
        .map(|spaces| (species_rep::quiver_dims_of(&spaces, &layout), spaces))
        .collect()
}

/// Isomorphism classes of graded-indecomposable representations of `s`,
/// enumerated directly on the species side, keyed by their Q_S dimension
/// vector.
pub fn count_species_indecomposables(s: &Superspecies, field: Zp, budget: &Budget) -> Result<CountReport> {
    s.check_acyclic()?;
    let groups = species_space_groups(s, budget);
    let mut used = 0u64;
    for spaces in groups.values() {
        spend(&mut used, species_rep::species_rep_count(s, field, spaces), budget)?;
    }
    let mut per_dim = Vec::new();
    for (d, spaces) in groups {
        let reps = all_species_reps(s, field, &spaces).map(|r| r.to_linear(s));
        let classes = indecomposable_classes(reps, budget.search)?;
        if !classes.is_empty() {
            per_dim.push(DimCount { dims: d, count: classes.len() });
        }
    }
    Ok(CountReport {
        field: field_name(field),
        budget: *budget,
        total: per_dim.iter().map(|d| d.count).sum(),
        enumerated: used,
        per_dim,
    })
}

/// Positive roots of Q_S that lie inside the budget box, as dimension vectors.
pub fn roots_within_budget(s: &Superspecies, budget: &Budget) -> Result<(Vec<Vec<usize>>, Vec<Vec<usize>>)> {
    let roots = positive_roots(&s.quiver_of().underlying_diagram())?;
    let (inside, outside): (Vec<Vec<usize>>, Vec<Vec<usize>>) = roots
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as usize).collect::<Vec<usize>>())
        .partition(|r| r.iter().all(|&x| x <= budget.vertex) && r.iter().sum::<usize>() <= budget.total);
    Ok((inside, outside))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceCounts {
    pub dims: Vec<usize>,
    pub species: usize,
    pub quiver: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceChecks {
    /// A species rep is indecomposable iff its image is.
    pub indecomposability_preserved: bool,
    /// Two indecomposables are isomorphic iff their images are.
    pub iso_classes_preserved: bool,
    /// Equal indecomposable counts per Q_S dimension vector.
    pub counts_agree: bool,
    /// H after H⁻¹ is the identity on every enumerated quiver rep.
    pub inverse_round_trip: bool,
    /// Forward and reverse splitting give the same summands.
    pub krull_schmidt: bool,
    /// A rep and its image have the same number of summands.
    pub summands_preserved: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub field: String,
    pub budget: Budget,
    pub passed: bool,
    pub checks: EquivalenceChecks,
    pub species_reps: u64,
    pub quiver_reps: u64,
    pub species_total: usize,
    pub quiver_total: usize,
    pub per_dim: Vec<EquivalenceCounts>,
    /// First few failures, for diagnosis.
    pub failures: Vec<String>,
}

const MAX_FAILURES: usize = 20;

/// Runs every representation of `s` in the budget through the functor to
/// Q_S and compares with direct enumeration on the quiver side.
pub fn verify_equivalence(s: &Superspecies, field: Zp, budget: &Budget) -> Result<EquivalenceReport> {
    s.check_acyclic()?;
    let layout = s.quiver_layout();
    let q = &layout.quiver;
    let groups = species_space_groups(s, budget);
    let mut species_used = 0u64;
    let mut quiver_used = 0u64;
    for (d, spaces) in &groups {
        spend(&mut species_used, species_rep::species_rep_count(s, field, spaces), budget)?;
        spend(&mut quiver_used, pow_count(field.p(), quiver_rep::entry_count(q, d)), budget)?;
    }
    let cap = budget.search;
    let mut checks = EquivalenceChecks {
        indecomposability_preserved: true,
        iso_classes_preserved: true,
        counts_agree: true,
        inverse_round_trip: true,
        krull_schmidt: true,
        summands_preserved: true,
    };
    let mut failures = Vec::new();
    let fail = |msg: String, failures: &mut Vec<String>| {
        if failures.len() < MAX_FAILURES {
            failures.push(msg);
        }
    };
    let mut per_dim = Vec::new();
    for (d, spaces) in groups {
        // species side, with images
        let mut classes: Vec<(LinearRep, LinearRep)> = Vec::new();
        for rep in all_species_reps(s, field, &spaces) {
            let image = functor_h(&rep, s)?;
            if image.dims != d {
                return Err(Error::Internal("functor image has the wrong dimension vector".into()));
            }
            let (x, y) = (rep.to_linear(s), image.to_linear());
            let fwd = x.decompose(cap, false)?;
            let back = x.decompose(cap, true)?;
            if !same_summands(&fwd, &back, cap)? {
                checks.krull_schmidt = false;
                fail(format!("{d:?}: summands depend on the splitting order"), &mut failures);
            }
            let image_summands = y.decompose(cap, false)?;
            if image_summands.len() != fwd.len() {
                checks.summands_preserved = false;
                fail(
                    format!("{d:?}: {} summands map to {}", fwd.len(), image_summands.len()),
                    &mut failures,
                );
            }
            let indec = fwd.len() == 1;
            if indec != (image_summands.len() == 1) {
                checks.indecomposability_preserved = false;
                fail(format!("{d:?}: indecomposability changes under the functor"), &mut failures);
            }
            if !indec {
                continue;
            }
            let mut matched = false;
            for (cx, cy) in &classes {
                let iso_s = cx.is_isomorphic(&x, cap)?;
                let iso_q = cy.is_isomorphic(&y, cap)?;
                if iso_s != iso_q {
                    checks.iso_classes_preserved = false;
                    fail(format!("{d:?}: isomorphism not preserved or reflected"), &mut failures);
                }
                if iso_s {
                    matched = true;
                    break;
                }
            }
            if !matched {
                classes.push((x, y));
            }
        }
        // quiver side, directly
        let mut direct = 0usize;
        let mut quiver_classes: Vec<LinearRep> = Vec::new();
        for r in all_quiver_reps(q, field, &d) {
            let back = functor_h(&functor_h_inverse(&r, s)?, s)?;
            if back != r {
                checks.inverse_round_trip = false;
                fail(format!("{d:?}: H(H⁻¹(r)) differs from r"), &mut failures);
            }
            let lin = r.to_linear();
            if !lin.is_indecomposable(cap)? {
                continue;
            }
            let mut seen = false;
            for c in &quiver_classes {
                if c.is_isomorphic(&lin, cap)? {
                    seen = true;
                    break;
                }
            }
            if !seen {
                quiver_classes.push(lin);
                direct += 1;
            }
        }
        if classes.len() != direct {
            checks.counts_agree = false;
            fail(
                format!("{d:?}: {} species indecomposables vs {direct} quiver", classes.len()),
                &mut failures,
            );
        }
        if !classes.is_empty() || direct > 0 {
            per_dim.push(EquivalenceCounts {
                dims: d,
                species: classes.len(),
                quiver: direct,
            });
        }
    }
    let passed = checks.indecomposability_preserved
        && checks.iso_classes_preserved
        && checks.counts_agree
        && checks.inverse_round_trip
        && checks.krull_schmidt
        && checks.summands_preserved;
    Ok(EquivalenceReport {
        field: field_name(field),
        budget: *budget,
        passed,
        checks,
        species_reps: species_used,
        quiver_reps: quiver_used,
        species_total: per_dim.iter().map(|c| c.species).sum(),
        quiver_total: per_dim.iter().map(|c| c.quiver).sum(),
        per_dim,
        failures,
    })
}
