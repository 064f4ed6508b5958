//! Superspecies: K/D vertex labels plus one graded bimodule per ordered pair,
//! stored by the isomorphism-class parameters of the four cases.

mod tensor;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{index_ids, lookup, Id, Quiver};
use crate::report::ValidationReport;
use crate::superquiver::{Color, Style, Superquiver};

pub use tensor::TensorDim;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    K,
    D,
}

impl Label {
    /// K-dimension of the division algebra.
    pub fn dim(self) -> usize {
        match self {
            Label::K => 1,
            Label::D => 2,
        }
    }

    /// Parities present at the vertex in the quiver Q_S.
    pub fn parities(self) -> &'static [u8] {
        match self {
            Label::K => &[0, 1],
            Label::D => &[0],
        }
    }
}

/// A graded D_j-D_i-bimodule for the pair i → j.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum Bimodule {
    /// K-K: a super vector space with `d0` even and `d1` odd basis elements.
    KK {
        #[serde(default)]
        d0: usize,
        #[serde(default)]
        d1: usize,
    },
    /// K-to-D: left free D-module of rank `rank`, even basis.
    KtoD { rank: usize },
    /// D-to-K: right free D-module of rank `rank`; left K-basis
    /// `m_1..m_r, m_1ε..m_rε`.
    DtoK { rank: usize },
    /// D-to-D: `plus` basis elements with mε = εm, then `minus` with mε = −εm.
    DD {
        #[serde(default)]
        plus: usize,
        #[serde(default)]
        minus: usize,
    },
}

/// Per-degree dimensions of a super vector space.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedDims {
    pub even: usize,
    pub odd: usize,
}

impl GradedDims {
    pub fn total(self) -> usize {
        self.even + self.odd
    }
}

impl Bimodule {
    /// Labels (source, target) this case requires.
    pub fn endpoints(self) -> (Label, Label) {
        match self {
            Bimodule::KK { .. } => (Label::K, Label::K),
            Bimodule::KtoD { .. } => (Label::K, Label::D),
            Bimodule::DtoK { .. } => (Label::D, Label::K),
            Bimodule::DD { .. } => (Label::D, Label::D),
        }
    }

    pub fn is_zero(self) -> bool {
        self.left_basis_len() == 0
    }

    /// Degrees of the canonical left basis: even elements first.
    pub fn left_basis_degrees(self) -> Vec<u8> {
        match self {
            Bimodule::KK { d0, d1 } => [vec![0; d0], vec![1; d1]].concat(),
            Bimodule::KtoD { rank } => vec![0; rank],
            Bimodule::DtoK { rank } => [vec![0; rank], vec![1; rank]].concat(),
            Bimodule::DD { plus, minus } => vec![0; plus + minus],
        }
    }

    pub fn left_basis_len(self) -> usize {
        match self {
            Bimodule::KK { d0, d1 } => d0 + d1,
            Bimodule::KtoD { rank } => rank,
            Bimodule::DtoK { rank } => 2 * rank,
            Bimodule::DD { plus, minus } => plus + minus,
        }
    }

    /// Graded K-dimensions.
    pub fn kdim(self) -> GradedDims {
        match self {
            Bimodule::KK { d0, d1 } => GradedDims { even: d0, odd: d1 },
            Bimodule::KtoD { rank } | Bimodule::DtoK { rank } => GradedDims { even: rank, odd: rank },
            Bimodule::DD { plus, minus } => GradedDims {
                even: plus + minus,
                odd: plus + minus,
            },
        }
    }

    /// Sign of the right ε action on left basis element `l` of a DD bimodule.
    pub fn dd_sign(self, l: usize) -> i64 {
        match self {
            Bimodule::DD { plus, .. } if l < plus => 1,
            Bimodule::DD { .. } => -1,
            _ => panic!("dd_sign on a non-DD bimodule"),
        }
    }

    /// Case for the given endpoint labels from solid/dotted counts; DD uses
    /// the plus block only.
    pub fn from_counts(source: Label, target: Label, solid: usize, dotted: usize) -> Bimodule {
        match (source, target) {
            (Label::K, Label::K) => Bimodule::KK { d0: solid, d1: dotted },
            (Label::K, Label::D) => Bimodule::KtoD { rank: solid },
            (Label::D, Label::K) => Bimodule::DtoK { rank: solid },
            (Label::D, Label::D) => Bimodule::DD { plus: solid, minus: 0 },
        }
    }
}

impl fmt::Display for Bimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bimodule::KK { d0, d1 } => write!(f, "KK({d0},{d1})"),
            Bimodule::KtoD { rank } => write!(f, "KtoD({rank})"),
            Bimodule::DtoK { rank } => write!(f, "DtoK({rank})"),
            Bimodule::DD { plus, minus } => write!(f, "DD({plus},{minus})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Superspecies {
    ids: Vec<Id>,
    labels: Vec<Label>,
    bimodules: BTreeMap<(usize, usize), Bimodule>,
}

#[derive(Serialize, Deserialize)]
struct SpeciesFile {
    vertices: Vec<VertexEntry>,
    #[serde(default)]
    bimodules: Vec<BimoduleEntry>,
}

#[derive(Serialize, Deserialize)]
struct VertexEntry {
    id: Id,
    #[serde(rename = "type")]
    label: Label,
}

#[derive(Serialize, Deserialize)]
struct BimoduleEntry {
    source: Id,
    target: Id,
    #[serde(flatten)]
    bimodule: Bimodule,
}

/// Where an arrow of Q_S comes from: pair, left-basis index, source parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ArrowOrigin {
    pub source: usize,
    pub target: usize,
    pub l: usize,
    pub z: u8,
}

/// Q_S together with the bookkeeping that relates it to the species.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpeciesQuiver {
    pub quiver: Quiver,
    /// `vertex[i][z]` is the Q_S vertex (i, z), absent for z = 1 at D vertices.
    pub vertex: Vec<[Option<usize>; 2]>,
    pub origin: Vec<ArrowOrigin>,
}

impl Superspecies {
    /// Vertices labelled 1..=n, no bimodules.
    pub fn new(labels: Vec<Label>) -> Superspecies {
        Superspecies {
            ids: (1..=labels.len()).map(Id::from).collect(),
            labels,
            bimodules: BTreeMap::new(),
        }
    }

    /// Replaces the vertex ids.
    pub fn with_ids(mut self, ids: Vec<Id>) -> Superspecies {
        assert_eq!(ids.len(), self.labels.len(), "one id per vertex");
        self.ids = ids;
        self
    }

    /// Builder form of [`Superspecies::set_bimodule`].
    pub fn with(mut self, source: usize, target: usize, b: Bimodule) -> Superspecies {
        self.set_bimodule(source, target, b);
        self
    }

    /// Sets the bimodule on `source → target` (0-based); a zero bimodule
    /// removes the pair.
    pub fn set_bimodule(&mut self, source: usize, target: usize, b: Bimodule) {
        assert!(source < self.labels.len() && target < self.labels.len(), "vertex out of range");
        if b.is_zero() {
            self.bimodules.remove(&(source, target));
        } else {
            self.bimodules.insert((source, target), b);
        }
    }

    pub fn ids(&self) -> &[Id] {
        &self.ids
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn bimodule(&self, source: usize, target: usize) -> Option<Bimodule> {
        self.bimodules.get(&(source, target)).copied()
    }

    /// Nonzero bimodules in (source, target) order.
    pub fn bimodules(&self) -> impl Iterator<Item = ((usize, usize), Bimodule)> + '_ {
        self.bimodules.iter().map(|(k, v)| (*k, *v))
    }

    pub fn from_json(text: &str) -> Result<Superspecies> {
        let file: SpeciesFile = serde_json::from_str(text)?;
        let ids: Vec<Id> = file.vertices.iter().map(|v| v.id.clone()).collect();
        let map = index_ids(&ids)?;
        let mut s = Superspecies {
            ids,
            labels: file.vertices.iter().map(|v| v.label).collect(),
            bimodules: BTreeMap::new(),
        };
        for e in file.bimodules {
            let i = lookup(&map, &e.source)?;
            let j = lookup(&map, &e.target)?;
            if s.bimodules.contains_key(&(i, j)) {
                return Err(Error::invalid(format!("two bimodules on {} -> {}", e.source, e.target)));
            }
            if !e.bimodule.is_zero() {
                s.bimodules.insert((i, j), e.bimodule);
            }
        }
        Ok(s)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let file = SpeciesFile {
            vertices: self
                .ids
                .iter()
                .zip(&self.labels)
                .map(|(id, l)| VertexEntry { id: id.clone(), label: *l })
                .collect(),
            bimodules: self
                .bimodules
                .iter()
                .map(|(&(i, j), b)| BimoduleEntry {
                    source: self.ids[i].clone(),
                    target: self.ids[j].clone(),
                    bimodule: *b,
                })
                .collect(),
        };
        serde_json::to_value(file).expect("serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }

    /// Case/label consistency.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        for (&(i, j), b) in &self.bimodules {
            let (ls, lt) = b.endpoints();
            if (self.labels[i], self.labels[j]) != (ls, lt) {
                r.push(format!(
                    "bimodule {b} on {} -> {} needs labels {:?} -> {:?}, found {:?} -> {:?}",
                    self.ids[i], self.ids[j], ls, lt, self.labels[i], self.labels[j]
                ));
            }
        }
        r
    }

    pub(crate) fn check(&self) -> Result<()> {
        let r = self.validate();
        if r.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid(r.violations.join("; ")))
        }
    }

    pub(crate) fn check_acyclic(&self) -> Result<()> {
        self.check()?;
        if self.is_acyclic() {
            Ok(())
        } else {
            Err(Error::Cyclic("the bimodule graph has an oriented cycle".into()))
        }
    }

    /// The graph with an edge i → j for every nonzero bimodule has no oriented
    /// cycle (loops included).
    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    pub(crate) fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut indeg = vec![0usize; n];
        for &(_, j) in self.bimodules.keys() {
            indeg[j] += 1;
        }
        let mut stack: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = stack.pop() {
            order.push(v);
            for (&(i, j), _) in self.bimodules.range((v, 0)..(v + 1, 0)) {
                debug_assert_eq!(i, v);
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    stack.push(j);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Connected components of the underlying undirected graph.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut d = crate::quiver::Diagram::new(self.len());
        for &(i, j) in self.bimodules.keys() {
            d.add_edge(i, j);
        }
        d.components()
    }

    /// The species restricted to `vs` (in the given order).
    pub fn restrict(&self, vs: &[usize]) -> Superspecies {
        let mut pos = vec![usize::MAX; self.len()];
        for (k, &v) in vs.iter().enumerate() {
            pos[v] = k;
        }
        let mut s = Superspecies {
            ids: vs.iter().map(|&v| self.ids[v].clone()).collect(),
            labels: vs.iter().map(|&v| self.labels[v]).collect(),
            bimodules: BTreeMap::new(),
        };
        for (&(i, j), b) in &self.bimodules {
            if pos[i] != usize::MAX && pos[j] != usize::MAX {
                s.bimodules.insert((pos[i], pos[j]), *b);
            }
        }
        s
    }

    /// Q_S with arrows ordered by (pair, left-basis index, source parity).
    pub fn quiver_layout(&self) -> SpeciesQuiver {
        let mut ids = Vec::new();
        let mut vertex = vec![[None, None]; self.len()];
        for (i, label) in self.labels.iter().enumerate() {
            for &z in label.parities() {
                vertex[i][z as usize] = Some(ids.len());
                ids.push(Id::Name(format!("({},{z})", self.ids[i])));
            }
        }
        let mut quiver = Quiver::new(ids);
        let mut origin = Vec::new();
        for (&(i, j), b) in &self.bimodules {
            for (l, zl) in b.left_basis_degrees().into_iter().enumerate() {
                for &z in self.labels[i].parities() {
                    let tz = match self.labels[j] {
                        Label::K => (z + zl) % 2,
                        Label::D => 0,
                    };
                    let (Some(s), Some(t)) = (vertex[i][z as usize], vertex[j][tz as usize]) else {
                        unreachable!("parities exist by construction")
                    };
                    let k = origin.len() + 1;
                    quiver.add_arrow(format!("a{k}"), s, t);
                    origin.push(ArrowOrigin { source: i, target: j, l, z });
                }
            }
        }
        SpeciesQuiver { quiver, vertex, origin }
    }

    pub fn quiver_of(&self) -> Quiver {
        self.quiver_layout().quiver
    }

    /// Q(S): white for K, black for D; one arrow per left-basis element,
    /// dotted iff odd.
    pub fn superquiver_of(&self) -> Superquiver {
        let mut q = Superquiver::new(
            self.ids
                .iter()
                .zip(&self.labels)
                .map(|(id, l)| {
                    (
                        id.clone(),
                        match l {
                            Label::K => Color::White,
                            Label::D => Color::Black,
                        },
                    )
                })
                .collect(),
        );
        for (&(i, j), b) in &self.bimodules {
            for zl in b.left_basis_degrees() {
                q.push_arrow(i, j, if zl == 0 { Style::Solid } else { Style::Dotted });
            }
        }
        q
    }
}

impl fmt::Display for Superspecies {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(|l| format!("{l:?}")).collect();
        let pairs: Vec<String> = self
            .bimodules
            .iter()
            .map(|(&(i, j), b)| format!("{}->{}:{b}", self.ids[i], self.ids[j]))
            .collect();
        write!(f, "({}; {})", labels.join(","), pairs.join(", "))
    }
}
