//! Recognition of Dynkin and extended Dynkin diagrams by shape.

use std::fmt;

use serde::{Serialize, Serializer};

use super::Diagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagramKind {
    Dynkin(Family, usize),
    Extended(Family, usize),
    Other,
}

impl DiagramKind {
    pub fn is_dynkin(self) -> bool {
        matches!(self, DiagramKind::Dynkin(..))
    }

    pub fn is_extended(self) -> bool {
        matches!(self, DiagramKind::Extended(..))
    }
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramKind::Dynkin(fam, n) => write!(f, "{fam:?}{n}"),
            DiagramKind::Extended(fam, n) => write!(f, "~{fam:?}{n}"),
            DiagramKind::Other => write!(f, "other"),
        }
    }
}

impl Serialize for DiagramKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentClass {
    pub vertices: Vec<usize>,
    pub kind: DiagramKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramClass {
    pub components: Vec<ComponentClass>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepType {
    Finite,
    Tame,
    Wild,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepType::Finite => "finite",
            RepType::Tame => "tame",
            RepType::Wild => "wild",
        })
    }
}

impl RepType {
    /// Combines per-component types: all finite → finite; all finite or tame
    /// → tame; otherwise wild.
    pub fn combine(parts: impl IntoIterator<Item = RepType>) -> RepType {
        parts.into_iter().max().unwrap_or(RepType::Finite)
    }
}

impl DiagramClass {
    pub fn rep_type(&self) -> RepType {
        RepType::combine(self.components.iter().map(|c| match c.kind {
            DiagramKind::Dynkin(..) => RepType::Finite,
            DiagramKind::Extended(..) => RepType::Tame,
            DiagramKind::Other => RepType::Wild,
        }))
    }

    /// Component names joined by `+`, e.g. `A2+A2`.
    pub fn name(&self) -> String {
        self.components
            .iter()
            .map(|c| c.kind.to_string())
            .collect::<Vec<_>>()
            .join("+")
    }
}

pub fn classify_diagram(d: &Diagram) -> DiagramClass {
    DiagramClass {
        components: d
            .components()
            .into_iter()
            .map(|vs| {
                let kind = classify_connected(&d.induced(&vs));
                ComponentClass { vertices: vs, kind }
            })
            .collect(),
    }
}

fn classify_connected(d: &Diagram) -> DiagramKind {
    let m = d.vertex_count();
    let e = d.edges().len();
    if d.has_loop() {
        return DiagramKind::Other;
    }
    let adj = d.adjacency();
    let max_mult = adj.iter().flatten().copied().max().unwrap_or(0);
    if max_mult >= 3 {
        return DiagramKind::Other;
    }
    if max_mult == 2 {
        return if m == 2 && e == 2 {
            DiagramKind::Extended(Family::A, 1)
        } else {
            DiagramKind::Other
        };
    }
    let nbrs: Vec<Vec<usize>> = (0..m)
        .map(|v| (0..m).filter(|&w| adj[v][w] > 0).collect())
        .collect();
    let deg: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    if e == m {
        return if deg.iter().all(|&x| x == 2) {
            DiagramKind::Extended(Family::A, m - 1)
        } else {
            DiagramKind::Other
        };
    }
    if e > m {
        return DiagramKind::Other;
    }
    // tree
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    if max_deg <= 2 {
        return DiagramKind::Dynkin(Family::A, m);
    }
    if max_deg >= 5 {
        return DiagramKind::Other;
    }
    if max_deg == 4 {
        return if m == 5 {
            DiagramKind::Extended(Family::D, 4)
        } else {
            DiagramKind::Other
        };
    }
    let branches: Vec<usize> = (0..m).filter(|&v| deg[v] == 3).collect();
    // length of the arm starting at `start` coming from `from`, or None if it
    // reaches another branch point
    let arm = |from: usize, start: usize| -> Option<usize> {
        let (mut prev, mut cur, mut len) = (from, start, 1);
        loop {
            match deg[cur] {
                1 => return Some(len),
                2 => {
                    let next = if nbrs[cur][0] == prev { nbrs[cur][1] } else { nbrs[cur][0] };
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                _ => return None,
            }
        }
    };
    match branches.len() {
        1 => {
            let c = branches[0];
            let mut arms: Vec<usize> = nbrs[c].iter().map(|&w| arm(c, w).expect("single branch point")).collect();
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, r) => DiagramKind::Dynkin(Family::D, r + 3),
                (1, 2, r @ 2..=4) => DiagramKind::Dynkin(Family::E, r + 4),
                (2, 2, 2) => DiagramKind::Extended(Family::E, 6),
                (1, 3, 3) => DiagramKind::Extended(Family::E, 7),
                (1, 2, 5) => DiagramKind::Extended(Family::E, 8),
                _ => DiagramKind::Other,
            }
        }
        2 => {
            let leafy = |c: usize| nbrs[c].iter().filter(|&&w| deg[w] == 1).count() == 2;
            if leafy(branches[0]) && leafy(branches[1]) {
                DiagramKind::Extended(Family::D, m - 1)
            } else {
                DiagramKind::Other
            }
        }
        _ => DiagramKind::Other,
    }
}
