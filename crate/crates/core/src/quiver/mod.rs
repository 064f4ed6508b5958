//! Plain quivers, underlying diagrams, ADE recognition, the Tits form and
//! positive roots.

mod classify;
mod dynkin;
mod tits;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use classify::{classify_via_quiver, predicted_indec_count};
pub use dynkin::{classify_diagram, ComponentClass, DiagramClass, DiagramKind, Family, RepType};
pub use tits::{positive_roots, positive_roots_in_box, tits_definiteness, tits_matrix, tits_radical, Definiteness, ROOT_BOX};

/// Vertex or arrow identifier as written in input files.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Id {
    Num(i64),
    Name(String),
}

impl fmt::Display for Id {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Id::Num(n) => write!(f, "{n}"),
            Id::Name(s) => write!(f, "{s}"),
        }
    }
}

impl From<usize> for Id {
    fn from(n: usize) -> Id {
        Id::Num(n as i64)
    }
}

impl From<&str> for Id {
    fn from(s: &str) -> Id {
        Id::Name(s.to_string())
    }
}

impl From<String> for Id {
    fn from(s: String) -> Id {
        Id::Name(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: Id,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<Id>,
    arrows: Vec<Arrow>,
}

#[derive(Serialize, Deserialize)]
struct QuiverFile {
    vertices: Vec<Id>,
    #[serde(default)]
    arrows: Vec<ArrowEntry>,
}

#[derive(Serialize, Deserialize)]
struct ArrowEntry {
    id: Id,
    source: Id,
    target: Id,
}

/// Index of every id, rejecting duplicates.
pub(crate) fn index_ids<'a>(ids: impl IntoIterator<Item = &'a Id>) -> Result<HashMap<Id, usize>> {
    let mut map = HashMap::new();
    for (i, id) in ids.into_iter().enumerate() {
        if map.insert(id.clone(), i).is_some() {
            return Err(Error::invalid(format!("duplicate vertex id {id}")));
        }
    }
    Ok(map)
}

pub(crate) fn lookup(map: &HashMap<Id, usize>, id: &Id) -> Result<usize> {
    map.get(id)
        .copied()
        .ok_or_else(|| Error::invalid(format!("unknown vertex id {id}")))
}

pub(crate) fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

impl Quiver {
    pub fn new(vertices: Vec<Id>) -> Quiver {
        Quiver {
            vertices,
            arrows: Vec::new(),
        }
    }

    /// Vertices labelled 1..=n.
    pub fn with_vertices(n: usize) -> Quiver {
        Quiver::new((1..=n).map(Id::from).collect())
    }

    pub fn add_arrow(&mut self, id: impl Into<Id>, source: usize, target: usize) {
        assert!(source < self.vertices.len() && target < self.vertices.len(), "arrow endpoint out of range");
        self.arrows.push(Arrow {
            id: id.into(),
            source,
            target,
        });
    }

    /// Appends an arrow named `a<k>` with `k` its position.
    pub fn arrow(mut self, source: usize, target: usize) -> Quiver {
        let k = self.arrows.len() + 1;
        self.add_arrow(format!("a{k}"), source, target);
        self
    }

    pub fn vertices(&self) -> &[Id] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn from_json(text: &str) -> Result<Quiver> {
        let file: QuiverFile = serde_json::from_str(text)?;
        let map = index_ids(&file.vertices)?;
        let mut q = Quiver::new(file.vertices.clone());
        for a in file.arrows {
            let s = lookup(&map, &a.source)?;
            let t = lookup(&map, &a.target)?;
            q.add_arrow(a.id, s, t);
        }
        Ok(q)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let file = QuiverFile {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowEntry {
                    id: a.id.clone(),
                    source: self.vertices[a.source].clone(),
                    target: self.vertices[a.target].clone(),
                })
                .collect(),
        };
        serde_json::to_value(file).expect("serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }

    /// Forget orientation, keep multiplicities and loops.
    pub fn underlying_diagram(&self) -> Diagram {
        let mut d = Diagram::new(self.vertices.len());
        for a in &self.arrows {
            d.add_edge(a.source, a.target);
        }
        d
    }

    /// No oriented cycle (loops included).
    pub fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for a in &self.arrows {
            indeg[a.target] += 1;
            out[a.source].push(a.target);
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        seen == n
    }

    pub fn dot(&self) -> String {
        if self.vertices.is_empty() && self.arrows.is_empty() {
            return "digraph { }".into();
        }
        let mut out = String::from("digraph {\n");
        for v in &self.vertices {
            out.push_str(&format!("  {};\n", dot_quote(&v.to_string())));
        }
        for a in &self.arrows {
            out.push_str(&format!(
                "  {} -> {} [label={}];\n",
                dot_quote(&self.vertices[a.source].to_string()),
                dot_quote(&self.vertices[a.target].to_string()),
                dot_quote(&a.id.to_string())
            ));
        }
        out.push('}');
        out
    }
}

/// Undirected multigraph; edges stored as `(min, max)` pairs, loops as `(v, v)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Diagram {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Diagram {
    pub fn new(n: usize) -> Diagram {
        Diagram { n, edges: Vec::new() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Diagram {
        let mut d = Diagram::new(n);
        for &(a, b) in edges {
            d.add_edge(a, b);
        }
        d
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a < self.n && b < self.n, "edge endpoint out of range");
        self.edges.push((a.min(b), a.max(b)));
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|(a, b)| a == b)
    }

    /// Symmetric edge-multiplicity matrix; a loop adds 1 on the diagonal.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; self.n]; self.n];
        for &(a, b) in &self.edges {
            m[a][b] += 1;
            if a != b {
                m[b][a] += 1;
            }
        }
        m
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 0..self.n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subdiagram on `vs` (renumbered in the given order).
    pub fn induced(&self, vs: &[usize]) -> Diagram {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            pos[v] = i;
        }
        let mut d = Diagram::new(vs.len());
        for &(a, b) in &self.edges {
            if pos[a] != usize::MAX && pos[b] != usize::MAX {
                d.add_edge(pos[a], pos[b]);
            }
        }
        d
    }

    /// Disjoint union, `other` renumbered after `self`.
    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let mut d = self.clone();
        d.n += other.n;
        for &(a, b) in &other.edges {
            d.add_edge(a + self.n, b + self.n);
        }
        d
    }

    pub fn path(n: usize) -> Diagram {
        let mut d = Diagram::new(n);
        for i in 1..n {
            d.add_edge(i - 1, i);
        }
        d
    }

    pub fn cycle(n: usize) -> Diagram {
        let mut d = Diagram::path(n);
        if n == 2 {
            d.add_edge(0, 1);
        } else if n > 2 {
            d.add_edge(n - 1, 0);
        }
        d
    }

    /// Vertex 0 with arms of the given lengths.
    pub fn star(arms: &[usize]) -> Diagram {
        let n = 1 + arms.iter().sum::<usize>();
        let mut d = Diagram::new(n);
        let mut next = 1;
        for &len in arms {
            let mut prev = 0;
            for _ in 0..len {
                d.add_edge(prev, next);
                prev = next;
                next += 1;
            }
        }
        d
    }

    /// Standard diagrams by name: `A5`, `D4`, `E6`, and extended ones `~A3`,
    /// `~D5`, `~E8` (a leading `Ã`, `D̃`, `Ẽ` is also accepted).
    pub fn by_name(name: &str) -> Result<Diagram> {
        let t = name.trim();
        let (extended, rest) = if let Some(r) = t.strip_prefix('~') {
            (true, r.to_string())
        } else {
            let mapped = t.replace("Ã", "A").replace("D̃", "D").replace("Ẽ", "E");
            (mapped != t, mapped)
        };
        let bad = || Error::invalid(format!("unknown diagram `{name}`"));
        let mut chars = rest.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let d = match (letter.to_ascii_uppercase(), extended) {
            ('A', false) if n >= 1 => Diagram::path(n),
            ('D', false) if n >= 4 => Diagram::star(&[1, 1, n - 3]),
            ('E', false) if (6..=8).contains(&n) => Diagram::star(&[1, 2, n - 4]),
            ('A', true) if n >= 1 => Diagram::cycle(n + 1),
            ('D', true) if n == 4 => Diagram::star(&[1, 1, 1, 1]),
            ('D', true) if n > 4 => {
                // path 0..=n-2 with extra leaves on vertices 1 and n-3
                let mut d = Diagram::path(n - 1);
                d.n += 2;
                d.add_edge(1, n - 1);
                d.add_edge(n - 3, n);
                d
            }
            ('E', true) if n == 6 => Diagram::star(&[2, 2, 2]),
            ('E', true) if n == 7 => Diagram::star(&[1, 3, 3]),
            ('E', true) if n == 8 => Diagram::star(&[1, 2, 5]),
            _ => return Err(bad()),
        };
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn underlying_diagram_examples() {
        let q = Quiver::with_vertices(3).arrow(0, 1).arrow(2, 1);
        assert_eq!(q.underlying_diagram(), Diagram::path(3));
        let double = Quiver::with_vertices(2).arrow(0, 1).arrow(0, 1);
        assert_eq!(double.underlying_diagram().edges(), &[(0, 1), (0, 1)]);
        let lp = Quiver::with_vertices(1).arrow(0, 0);
        assert!(lp.underlying_diagram().has_loop());
    }

    #[test]
    fn acyclicity() {
        assert!(Quiver::with_vertices(3).arrow(0, 1).arrow(1, 2).is_acyclic());
        assert!(!Quiver::with_vertices(3).arrow(0, 1).arrow(1, 2).arrow(2, 0).is_acyclic());
        assert!(!Quiver::with_vertices(1).arrow(0, 0).is_acyclic());
    }

    #[test]
    fn json_round_trip_with_string_ids() {
        let text = r#"{"vertices":["x",2],"arrows":[{"id":"a1","source":"x","target":2}]}"#;
        let q = Quiver::from_json(text).unwrap();
        assert_eq!(q.arrows()[0].source, 0);
        assert_eq!(Quiver::from_json(&q.to_json()).unwrap(), q);
        assert!(Quiver::from_json(r#"{"vertices":[1],"arrows":[{"id":"a","source":1,"target":3}]}"#).is_err());
    }

    #[test]
    fn dot_output() {
        assert_eq!(Quiver::default().dot(), "digraph { }");
        let q = Quiver::with_vertices(2).arrow(0, 1);
        let dot = q.dot();
        assert_eq!(dot.matches("->").count(), 1);
        assert!(dot.contains("\"1\" -> \"2\""));
    }

    #[test]
    fn named_diagrams() {
        assert_eq!(Diagram::by_name("A3").unwrap(), Diagram::path(3));
        assert_eq!(Diagram::by_name("D5").unwrap().vertex_count(), 5);
        assert_eq!(Diagram::by_name("~A1").unwrap().edges().len(), 2);
        assert_eq!(Diagram::by_name("~D6").unwrap().vertex_count(), 7);
        assert_eq!(Diagram::by_name("Ẽ8").unwrap().vertex_count(), 9);
        assert!(Diagram::by_name("E9").is_err());
        assert!(Diagram::by_name("D3").is_err());
    }

    #[test]
    fn components_are_ordered() {
        let d = Diagram::from_edges(5, &[(3, 4), (0, 2)]);
        assert_eq!(d.components(), vec![vec![0, 2], vec![1], vec![3, 4]]);
    }
}
