//! Superquivers: white (K) and black (D) vertices, solid (even) and dotted
//! (odd) arrows.

mod families;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{dot_quote, index_ids, lookup, Diagram, Id, Quiver};
use crate::species::{Bimodule, Label, Superspecies};

pub use families::{classify_via_table, match_components, match_family, FamilyMatch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Black,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Style {
    Solid,
    Dotted,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperVertex {
    pub id: Id,
    pub color: Color,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperArrow {
    pub id: Id,
    pub source: usize,
    pub target: usize,
    pub style: Style,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Superquiver {
    vertices: Vec<SuperVertex>,
    arrows: Vec<SuperArrow>,
}

#[derive(Serialize, Deserialize)]
struct SuperquiverFile {
    vertices: Vec<SuperVertex>,
    #[serde(default)]
    arrows: Vec<ArrowEntry>,
}

#[derive(Serialize, Deserialize)]
struct ArrowEntry {
    id: Id,
    source: Id,
    target: Id,
    #[serde(default = "solid")]
    style: Style,
}

fn solid() -> Style {
    Style::Solid
}

/// Vertices numbered 1, 2, … in insertion order; arrows named `a1`, `a2`, ….
#[derive(Clone, Debug, Default)]
pub struct SuperquiverBuilder {
    q: Superquiver,
}

impl SuperquiverBuilder {
    pub fn vertex(mut self, color: Color) -> Self {
        let id = Id::from(self.q.vertices.len() + 1);
        self.q.vertices.push(SuperVertex { id, color });
        self
    }

    pub fn arrow(mut self, source: usize, target: usize, style: Style) -> Self {
        self.q.push_arrow(source, target, style);
        self
    }

    pub fn build(self) -> Superquiver {
        self.q
    }
}

impl Superquiver {
    pub fn new(vertices: Vec<(Id, Color)>) -> Superquiver {
        Superquiver {
            vertices: vertices.into_iter().map(|(id, color)| SuperVertex { id, color }).collect(),
            arrows: Vec::new(),
        }
    }

    pub fn add_arrow(&mut self, id: impl Into<Id>, source: usize, target: usize, style: Style) {
        assert!(
            source < self.vertices.len() && target < self.vertices.len(),
            "arrow endpoint out of range"
        );
        self.arrows.push(SuperArrow {
            id: id.into(),
            source,
            target,
            style,
        });
    }

    /// Appends an arrow named `a<k>` with `k` its position.
    pub fn push_arrow(&mut self, source: usize, target: usize, style: Style) {
        let k = self.arrows.len() + 1;
        self.add_arrow(format!("a{k}"), source, target, style);
    }

    pub fn vertices(&self) -> &[SuperVertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[SuperArrow] {
        &self.arrows
    }

    pub fn colors(&self) -> Vec<Color> {
        self.vertices.iter().map(|v| v.color).collect()
    }

    pub fn from_json(text: &str) -> Result<Superquiver> {
        let file: SuperquiverFile = serde_json::from_str(text)?;
        let map = index_ids(file.vertices.iter().map(|v| &v.id))?;
        let mut q = Superquiver {
            vertices: file.vertices,
            arrows: Vec::new(),
        };
        for a in file.arrows {
            let s = lookup(&map, &a.source)?;
            let t = lookup(&map, &a.target)?;
            q.add_arrow(a.id, s, t, a.style);
        }
        Ok(q)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let file = SuperquiverFile {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowEntry {
                    id: a.id.clone(),
                    source: self.vertices[a.source].id.clone(),
                    target: self.vertices[a.target].id.clone(),
                    style: a.style,
                })
                .collect(),
        };
        serde_json::to_value(file).expect("serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }

    /// Solid and dotted arrow counts on the ordered pair `source → target`.
    pub fn counts(&self, source: usize, target: usize) -> (usize, usize) {
        self.arrows
            .iter()
            .filter(|a| a.source == source && a.target == target)
            .fold((0, 0), |(s, d), a| match a.style {
                Style::Solid => (s + 1, d),
                Style::Dotted => (s, d + 1),
            })
    }

    /// Every dotted arrow ends at a white vertex, and on every black → white
    /// pair solid and dotted arrows are equinumerous.
    pub fn is_realizable(&self) -> bool {
        self.realizability_violations().is_empty()
    }

    pub fn realizability_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for a in &self.arrows {
            if a.style == Style::Dotted && self.vertices[a.target].color == Color::Black {
                out.push(format!("dotted arrow {} ends at a black vertex", a.id));
            }
        }
        let n = self.vertices.len();
        for i in 0..n {
            for j in 0..n {
                if self.vertices[i].color == Color::Black && self.vertices[j].color == Color::White {
                    let (s, d) = self.counts(i, j);
                    if s != d {
                        out.push(format!(
                            "{} solid but {} dotted arrows from black {} to white {}",
                            s, d, self.vertices[i].id, self.vertices[j].id
                        ));
                    }
                }
            }
        }
        out
    }

    /// Forget colors and styles.
    pub fn underlying_quiver(&self) -> Quiver {
        let mut q = Quiver::new(self.vertices.iter().map(|v| v.id.clone()).collect());
        for a in &self.arrows {
            q.add_arrow(a.id.clone(), a.source, a.target);
        }
        q
    }

    pub fn underlying_diagram(&self) -> Diagram {
        self.underlying_quiver().underlying_diagram()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.underlying_diagram().components()
    }

    /// The sub-superquiver on `vs` (in the given order).
    pub fn restrict(&self, vs: &[usize]) -> Superquiver {
        let mut pos = vec![usize::MAX; self.vertices.len()];
        for (k, &v) in vs.iter().enumerate() {
            pos[v] = k;
        }
        Superquiver {
            vertices: vs.iter().map(|&v| self.vertices[v].clone()).collect(),
            arrows: self
                .arrows
                .iter()
                .filter(|a| pos[a.source] != usize::MAX && pos[a.target] != usize::MAX)
                .map(|a| SuperArrow {
                    id: a.id.clone(),
                    source: pos[a.source],
                    target: pos[a.target],
                    style: a.style,
                })
                .collect(),
        }
    }

    /// A species with this superquiver; DD pairs put every arrow in the plus
    /// block.
    pub fn species_from(&self) -> Result<Superspecies> {
        let violations = self.realizability_violations();
        if !violations.is_empty() {
            return Err(Error::Invalid(format!("not realizable: {}", violations.join("; "))));
        }
        let labels: Vec<Label> = self
            .vertices
            .iter()
            .map(|v| match v.color {
                Color::White => Label::K,
                Color::Black => Label::D,
            })
            .collect();
        let mut s = Superspecies::new(labels.clone());
        let n = labels.len();
        for i in 0..n {
            for j in 0..n {
                let (solid, dotted) = self.counts(i, j);
                if solid + dotted > 0 {
                    s.set_bimodule(i, j, Bimodule::from_counts(labels[i], labels[j], solid, dotted));
                }
            }
        }
        Ok(s.with_ids(self.vertices.iter().map(|v| v.id.clone()).collect()))
    }

    /// Same colors and, for every ordered pair, the same solid/dotted counts,
    /// up to a relabelling of vertices (brute force over color-preserving
    /// bijections; intended for small inputs).
    pub fn is_isomorphic(&self, other: &Superquiver) -> bool {
        let n = self.vertices.len();
        if n != other.vertices.len() || self.arrows.len() != other.arrows.len() {
            return false;
        }
        let mut a = self.colors();
        let mut b = other.colors();
        a.sort();
        b.sort();
        if a != b {
            return false;
        }
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_iso(other, 0, &mut perm, &mut used)
    }

    fn extend_iso(&self, other: &Superquiver, k: usize, perm: &mut [usize], used: &mut [bool]) -> bool {
        let n = perm.len();
        if k == n {
            return true;
        }
        for c in 0..n {
            if used[c] || other.vertices[c].color != self.vertices[k].color {
                continue;
            }
            perm[k] = c;
            let ok = (0..=k).all(|x| {
                self.counts(x, k) == other.counts(perm[x], c) && self.counts(k, x) == other.counts(c, perm[x])
            });
            if ok {
                used[c] = true;
                if self.extend_iso(other, k + 1, perm, used) {
                    return true;
                }
                used[c] = false;
            }
        }
        false
    }

    /// DOT text: black vertices filled, dotted arrows dashed.
    pub fn dot(&self) -> String {
        if self.vertices.is_empty() && self.arrows.is_empty() {
            return "digraph { }".into();
        }
        let mut out = String::from("digraph {\n");
        for v in &self.vertices {
            let attrs = match v.color {
                Color::White => "shape=circle",
                Color::Black => "shape=circle, style=filled, fillcolor=black, fontcolor=white",
            };
            out.push_str(&format!("  {} [{attrs}];\n", dot_quote(&v.id.to_string())));
        }
        for a in &self.arrows {
            let style = match a.style {
                Style::Solid => "",
                Style::Dotted => ", style=dashed",
            };
            out.push_str(&format!(
                "  {} -> {} [label={}{style}];\n",
                dot_quote(&self.vertices[a.source].id.to_string()),
                dot_quote(&self.vertices[a.target].id.to_string()),
                dot_quote(&a.id.to_string())
            ));
        }
        out.push('}');
        out
    }
}

impl fmt::Display for Superquiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self
            .vertices
            .iter()
            .map(|v| {
                let c = if v.color == Color::White { "o" } else { "*" };
                format!("{}{c}", v.id)
            })
            .collect();
        let arrows: Vec<String> = self
            .arrows
            .iter()
            .map(|a| {
                let s = if a.style == Style::Solid { "->" } else { "~>" };
                format!("{}{s}{}", self.vertices[a.source].id, self.vertices[a.target].id)
            })
            .collect();
        write!(f, "[{}] {}", vs.join(" "), arrows.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> SuperquiverBuilder {
        SuperquiverBuilder::default()
    }

    #[test]
    fn realizability_examples() {
        let bw = b().vertex(Color::Black).vertex(Color::White).arrow(0, 1, Style::Solid).build();
        assert!(!bw.is_realizable());
        let pair = b()
            .vertex(Color::Black)
            .vertex(Color::White)
            .arrow(0, 1, Style::Solid)
            .arrow(0, 1, Style::Dotted)
            .build();
        assert!(pair.is_realizable());
        let wb = b().vertex(Color::White).vertex(Color::Black).arrow(0, 1, Style::Dotted).build();
        assert!(!wb.is_realizable());
    }

    #[test]
    fn underlying_quiver_examples() {
        let pair = b()
            .vertex(Color::Black)
            .vertex(Color::White)
            .arrow(0, 1, Style::Solid)
            .arrow(0, 1, Style::Dotted)
            .build();
        let q = pair.underlying_quiver();
        assert_eq!(q.arrows().len(), 2);
        assert_eq!(q.underlying_diagram().edges(), &[(0, 1), (0, 1)]);
        let ww = b().vertex(Color::White).vertex(Color::White).arrow(0, 1, Style::Dotted).build();
        let plain = ww.underlying_quiver();
        assert_eq!(plain.to_json(), Quiver::with_vertices(2).arrow(0, 1).to_json());
    }

    #[test]
    fn species_round_trip() {
        let q = b()
            .vertex(Color::White)
            .vertex(Color::Black)
            .vertex(Color::Black)
            .vertex(Color::White)
            .arrow(0, 1, Style::Solid)
            .arrow(1, 2, Style::Solid)
            .arrow(2, 3, Style::Solid)
            .arrow(2, 3, Style::Dotted)
            .build();
        let s = q.species_from().unwrap();
        assert_eq!(s.bimodule(1, 2), Some(Bimodule::DD { plus: 1, minus: 0 }));
        assert_eq!(s.bimodule(2, 3), Some(Bimodule::DtoK { rank: 1 }));
        assert!(s.superquiver_of().is_isomorphic(&q));
    }

    #[test]
    fn json_and_dot() {
        let text = r#"{"vertices":[{"id":1,"color":"white"},{"id":2,"color":"white"}],
            "arrows":[{"id":"x","source":1,"target":2,"style":"dotted"}]}"#;
        let q = Superquiver::from_json(text).unwrap();
        assert_eq!(Superquiver::from_json(&q.to_json()).unwrap(), q);
        assert!(q.dot().contains("style=dashed"));
        assert_eq!(Superquiver::default().dot(), "digraph { }");
    }

    #[test]
    fn isomorphism_respects_colors_and_styles() {
        let a = b().vertex(Color::White).vertex(Color::White).arrow(0, 1, Style::Solid).build();
        let c = b().vertex(Color::White).vertex(Color::White).arrow(1, 0, Style::Solid).build();
        let d = b().vertex(Color::White).vertex(Color::White).arrow(1, 0, Style::Dotted).build();
        assert!(a.is_isomorphic(&c));
        assert!(!a.is_isomorphic(&d));
    }
}
