//! The finite and tame two-color families, matched by shape, plus the
//! one-color rule through the underlying diagram.

use std::fmt;

use serde::{Serialize, Serializer};

use super::{Color, Style, Superquiver, SuperquiverBuilder};
use crate::error::Result;
use crate::quiver::{classify_diagram, RepType};
use crate::species::Superspecies;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyMatch {
    OneColorDynkin,
    OneColorAffine,
    /// A(n,1): n whites then a solid arrow into one black.
    An1(usize),
    /// A(1,n): a white with a solid arrow into the first of n blacks.
    A1n(usize),
    A22,
    B1n(usize),
    Cn1(usize),
    F22,
    A1n1(usize),
    APrime1n1(usize),
    A32,
    A23,
    B1n1(usize),
    BPrime1n1(usize),
    C1n1(usize),
    CPrime1n1(usize),
    F32,
    F23,
    Dn1(usize),
    DPrimen1(usize),
    D1n(usize),
    DPrime1n(usize),
}

impl FamilyMatch {
    pub fn rep_type(self) -> RepType {
        use FamilyMatch::*;
        match self {
            OneColorDynkin | An1(_) | A1n(_) | A22 | B1n(_) | Cn1(_) | F22 => RepType::Finite,
            _ => RepType::Tame,
        }
    }

    /// Every two-color family with parameter at most `max_n`.
    pub fn two_color(max_n: usize) -> Vec<FamilyMatch> {
        use FamilyMatch::*;
        let mut out = vec![A22, F22, A32, A23, F32, F23];
        for n in 1..=max_n {
            out.extend([An1(n), B1n(n), A1n1(n), APrime1n1(n), B1n1(n), BPrime1n1(n), C1n1(n), CPrime1n1(n)]);
            if n >= 2 {
                out.extend([A1n(n), Cn1(n)]);
            }
            if n >= 3 {
                out.extend([Dn1(n), DPrimen1(n), D1n(n), DPrime1n(n)]);
            }
        }
        out
    }

    /// The family's superquiver with every unoriented link drawn as a solid
    /// arrow pointing away from the first-listed vertex. `None` for the
    /// one-color classes.
    pub fn template(self) -> Option<Superquiver> {
        use FamilyMatch::*;
        use Link::*;
        let w = Color::White;
        let b = Color::Black;
        let row = |whites: usize, blacks: usize, link: Link| {
            let mut colors = vec![w; whites];
            colors.extend(vec![b; blacks]);
            let mut links = vec![Line; whites + blacks - 1];
            links[whites - 1] = link;
            path(&colors, &links)
        };
        let q = match self {
            OneColorDynkin | OneColorAffine => return None,
            An1(n) => row(n, 1, S),
            A1n(n) => row(1, n, S),
            A22 => row(2, 2, S),
            B1n(n) => row(1, n, P),
            Cn1(n) => row(n, 1, P),
            F22 => row(2, 2, P),
            A32 => row(3, 2, S),
            A23 => row(2, 3, S),
            F32 => row(3, 2, P),
            F23 => row(2, 3, P),
            A1n1(n) | C1n1(n) | CPrime1n1(n) => {
                let (l, r) = match self {
                    A1n1(_) => (S, S),
                    C1n1(_) => (S, P),
                    _ => (P, P),
                };
                let mut colors = vec![b];
                colors.extend(vec![w; n]);
                colors.push(b);
                let mut links = vec![l];
                links.extend(vec![Line; n - 1]);
                links.push(r);
                path(&colors, &links)
            }
            APrime1n1(n) | B1n1(n) | BPrime1n1(n) => {
                let (l, r) = match self {
                    APrime1n1(_) => (S, S),
                    B1n1(_) => (P, S),
                    _ => (P, P),
                };
                let mut colors = vec![w];
                colors.extend(vec![b; n]);
                colors.push(w);
                let mut links = vec![l];
                links.extend(vec![Line; n - 1]);
                links.push(r);
                path(&colors, &links)
            }
            Dn1(n) => fork(w, n, S),
            DPrimen1(n) => fork(w, n, P),
            D1n(n) => fork(b, n, S),
            DPrime1n(n) => fork(b, n, P),
        };
        Some(q)
    }
}

impl fmt::Display for FamilyMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyMatch::*;
        match self {
            OneColorDynkin => write!(f, "1-color Dynkin"),
            OneColorAffine => write!(f, "1-color extended Dynkin"),
            An1(n) => write!(f, "A({n},1)"),
            A1n(n) => write!(f, "A(1,{n})"),
            A22 => write!(f, "A(2,2)"),
            B1n(n) => write!(f, "B(1,{n})"),
            Cn1(n) => write!(f, "C({n},1)"),
            F22 => write!(f, "F(2,2)"),
            A1n1(n) => write!(f, "A(1,{n},1)"),
            APrime1n1(n) => write!(f, "A'(1,{n},1)"),
            A32 => write!(f, "A(3,2)"),
            A23 => write!(f, "A(2,3)"),
            B1n1(n) => write!(f, "B(1,{n},1)"),
            BPrime1n1(n) => write!(f, "B'(1,{n},1)"),
            C1n1(n) => write!(f, "C(1,{n},1)"),
            CPrime1n1(n) => write!(f, "C'(1,{n},1)"),
            F32 => write!(f, "F(3,2)"),
            F23 => write!(f, "F(2,3)"),
            Dn1(n) => write!(f, "D({n},1)"),
            DPrimen1(n) => write!(f, "D'({n},1)"),
            D1n(n) => write!(f, "D(1,{n})"),
            DPrime1n(n) => write!(f, "D'(1,{n})"),
        }
    }
}

impl Serialize for FamilyMatch {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// How two adjacent vertices are joined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Link {
    /// One arrow between same-colored vertices (solid if both black).
    Line,
    /// One solid arrow white → black.
    S,
    /// One solid and one dotted arrow black → white.
    P,
}

fn path(colors: &[Color], links: &[Link]) -> Superquiver {
    let mut q = colors.iter().fold(SuperquiverBuilder::default(), |b, &c| b.vertex(c)).build();
    for (i, &l) in links.iter().enumerate() {
        add_link(&mut q, i, i + 1, l);
    }
    q
}

/// Branch vertex 0 of color `c` with leaves 1 and 2, then a chain of `c`
/// vertices ending in one vertex of the other color; `n` vertices of color `c`.
fn fork(c: Color, n: usize, end: Link) -> Superquiver {
    let other = if c == Color::White { Color::Black } else { Color::White };
    let mut colors = vec![c; n];
    colors.push(other);
    let mut q = colors.iter().fold(SuperquiverBuilder::default(), |b, &c| b.vertex(c)).build();
    add_link(&mut q, 0, 1, Link::Line);
    add_link(&mut q, 0, 2, Link::Line);
    let mut prev = 0;
    for v in 3..n {
        add_link(&mut q, prev, v, Link::Line);
        prev = v;
    }
    add_link(&mut q, prev, n, end);
    q
}

fn add_link(q: &mut Superquiver, u: usize, v: usize, link: Link) {
    let (white, black) = if q.vertices()[u].color == Color::White { (u, v) } else { (v, u) };
    match link {
        Link::Line => q.push_arrow(u, v, Style::Solid),
        Link::S => q.push_arrow(white, black, Style::Solid),
        Link::P => {
            q.push_arrow(black, white, Style::Solid);
            q.push_arrow(black, white, Style::Dotted);
        }
    }
}

/// The link between `u` and `v`, `Ok(None)` when they are not adjacent and
/// `Err(())` when the arrows between them fit no link.
fn link_between(q: &Superquiver, u: usize, v: usize) -> std::result::Result<Option<Link>, ()> {
    let (uv, vu) = (q.counts(u, v), q.counts(v, u));
    let total = uv.0 + uv.1 + vu.0 + vu.1;
    if total == 0 {
        return Ok(None);
    }
    let (cu, cv) = (q.vertices()[u].color, q.vertices()[v].color);
    match (cu, cv) {
        (Color::White, Color::White) if total == 1 => Ok(Some(Link::Line)),
        (Color::Black, Color::Black) if total == 1 && uv.1 + vu.1 == 0 => Ok(Some(Link::Line)),
        (Color::White, Color::Black) | (Color::Black, Color::White) => {
            let (wb, bw) = if cu == Color::White { (uv, vu) } else { (vu, uv) };
            match (wb, bw) {
                ((1, 0), (0, 0)) => Ok(Some(Link::S)),
                ((0, 0), (1, 1)) => Ok(Some(Link::P)),
                _ => Err(()),
            }
        }
        _ => Err(()),
    }
}

/// The family of a connected superquiver, if any.
pub fn match_family(q: &Superquiver) -> Option<FamilyMatch> {
    let n = q.vertices().len();
    if n == 0 {
        return None;
    }
    let colors = q.colors();
    if colors.iter().all(|&c| c == colors[0]) {
        let class = classify_diagram(&q.underlying_diagram());
        return match class.components.as_slice() {
            [c] if c.kind.is_dynkin() => Some(FamilyMatch::OneColorDynkin),
            [c] if c.kind.is_extended() => Some(FamilyMatch::OneColorAffine),
            _ => None,
        };
    }
    if q.arrows().iter().any(|a| a.source == a.target) {
        return None;
    }
    let mut nbrs: Vec<Vec<(usize, Link)>> = vec![Vec::new(); n];
    let mut edges = 0;
    for u in 0..n {
        for v in u + 1..n {
            match link_between(q, u, v) {
                Err(()) => return None,
                Ok(None) => {}
                Ok(Some(l)) => {
                    nbrs[u].push((v, l));
                    nbrs[v].push((u, l));
                    edges += 1;
                }
            }
        }
    }
    if edges + 1 != n || !q.underlying_diagram().is_connected() {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| nbrs[v].len() >= 3).collect();
    match branch.as_slice() {
        [] => match_path(&colors, &nbrs),
        [c] if nbrs[*c].len() == 3 => match_fork(&colors, &nbrs, *c),
        _ => None,
    }
}

fn walk(nbrs: &[Vec<(usize, Link)>], from: usize, start: usize) -> Vec<(usize, Link)> {
    // vertices after `from` along a branchless route, with the link used to reach each
    let link = nbrs[from].iter().find(|(v, _)| *v == start).expect("adjacent").1;
    let mut out = vec![(start, link)];
    let (mut prev, mut cur) = (from, start);
    while nbrs[cur].len() == 2 {
        let &(next, l) = nbrs[cur].iter().find(|(v, _)| *v != prev).expect("degree 2");
        out.push((next, l));
        prev = cur;
        cur = next;
    }
    out
}

fn match_path(colors: &[Color], nbrs: &[Vec<(usize, Link)>]) -> Option<FamilyMatch> {
    use FamilyMatch::*;
    use Link::*;
    let end = (0..colors.len()).find(|&v| nbrs[v].len() == 1)?;
    let rest = walk(nbrs, end, nbrs[end][0].0);
    let mut seq: Vec<Color> = vec![colors[end]];
    let mut links = Vec::new();
    for (v, l) in rest {
        seq.push(colors[v]);
        links.push(l);
    }
    let changes: Vec<usize> = (0..links.len()).filter(|&i| seq[i] != seq[i + 1]).collect();
    match changes.as_slice() {
        [i] => {
            // read white part first
            let (whites, blacks) = if seq[0] == Color::White {
                (i + 1, seq.len() - i - 1)
            } else {
                (seq.len() - i - 1, i + 1)
            };
            match (whites, blacks, links[*i]) {
                (w, 1, S) => Some(An1(w)),
                (1, 1, P) => Some(B1n(1)),
                (w, 1, P) => Some(Cn1(w)),
                (1, b, S) => Some(A1n(b)),
                (1, b, P) => Some(B1n(b)),
                (2, 2, S) => Some(A22),
                (2, 2, P) => Some(F22),
                (3, 2, S) => Some(A32),
                (3, 2, P) => Some(F32),
                (2, 3, S) => Some(A23),
                (2, 3, P) => Some(F23),
                _ => None,
            }
        }
        [i, j] if *i == 0 && *j == links.len() - 1 => {
            let middle = seq.len() - 2;
            let pair = (links[*i], links[*j]);
            let mixed = pair.0 != pair.1;
            match seq[0] {
                Color::Black => Some(if mixed {
                    C1n1(middle)
                } else if pair.0 == S {
                    A1n1(middle)
                } else {
                    CPrime1n1(middle)
                }),
                Color::White => Some(if mixed {
                    B1n1(middle)
                } else if pair.0 == S {
                    APrime1n1(middle)
                } else {
                    BPrime1n1(middle)
                }),
            }
        }
        _ => None,
    }
}

fn match_fork(colors: &[Color], nbrs: &[Vec<(usize, Link)>], center: usize) -> Option<FamilyMatch> {
    let c = colors[center];
    let mut arms: Vec<Vec<(usize, Link)>> = nbrs[center].iter().map(|&(v, _)| walk(nbrs, center, v)).collect();
    arms.sort_by_key(Vec::len);
    if arms[0].len() != 1 || arms[1].len() != 1 {
        return None;
    }
    // exactly one vertex of the other color, at the end of an arm of maximal length
    let odd: Vec<(usize, usize)> = arms
        .iter()
        .enumerate()
        .flat_map(|(a, arm)| arm.iter().enumerate().map(move |(k, &(v, _))| (a, k, v)))
        .filter(|&(_, _, v)| colors[v] != c)
        .map(|(a, k, _)| (a, k))
        .collect();
    let [(a, k)] = odd.as_slice() else {
        return None;
    };
    if arms[*a].len() != arms[2].len() || *k + 1 != arms[*a].len() {
        return None;
    }
    let link = arms[*a][*k].1;
    // the center plus the arms, less the odd vertex
    let n = arms.iter().map(Vec::len).sum::<usize>();
    Some(match (c, link) {
        (Color::White, Link::S) => FamilyMatch::Dn1(n),
        (Color::White, _) => FamilyMatch::DPrimen1(n),
        (Color::Black, Link::S) => FamilyMatch::D1n(n),
        (Color::Black, _) => FamilyMatch::DPrime1n(n),
    })
}

/// Per connected component of `q`: its vertices, the matched family (if any)
/// and the resulting type.
pub fn match_components(q: &Superquiver) -> Vec<(Vec<usize>, Option<FamilyMatch>, RepType)> {
    q.components()
        .into_iter()
        .map(|vs| {
            let m = match_family(&q.restrict(&vs));
            let t = m.map_or(RepType::Wild, FamilyMatch::rep_type);
            (vs, m, t)
        })
        .collect()
}

/// Representation type from the family table applied to the superquiver.
pub fn classify_via_table(s: &Superspecies) -> Result<RepType> {
    s.check_acyclic()?;
    Ok(RepType::combine(
        match_components(&s.superquiver_of()).into_iter().map(|(_, _, t)| t),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::classify_diagram;
    use crate::species::{Bimodule, Label};

    #[test]
    fn templates_match_themselves_only() {
        for f in FamilyMatch::two_color(7) {
            let q = f.template().unwrap();
            assert!(q.is_realizable(), "{f}");
            assert_eq!(match_family(&q), Some(f), "{f}: {q}");
        }
    }

    #[test]
    fn examples() {
        let a21 = SuperquiverBuilder::default()
            .vertex(Color::White)
            .vertex(Color::White)
            .vertex(Color::Black)
            .arrow(0, 1, Style::Solid)
            .arrow(1, 2, Style::Solid)
            .build();
        assert_eq!(match_family(&a21), Some(FamilyMatch::An1(2)));
        // ●←○—○→●
        let a121 = SuperquiverBuilder::default()
            .vertex(Color::Black)
            .vertex(Color::White)
            .vertex(Color::White)
            .vertex(Color::Black)
            .arrow(1, 0, Style::Solid)
            .arrow(2, 1, Style::Dotted)
            .arrow(2, 3, Style::Solid)
            .build();
        assert_eq!(match_family(&a121), Some(FamilyMatch::A1n1(2)));
        let double = SuperquiverBuilder::default()
            .vertex(Color::White)
            .vertex(Color::White)
            .arrow(0, 1, Style::Solid)
            .arrow(0, 1, Style::Solid)
            .build();
        assert_eq!(match_family(&double), Some(FamilyMatch::OneColorAffine));
    }

    fn shape(f: FamilyMatch) -> String {
        let s = f.template().unwrap().species_from().unwrap();
        classify_diagram(&s.quiver_of().underlying_diagram()).name()
    }

    #[test]
    fn quiver_shapes_of_the_families() {
        use FamilyMatch::*;
        for n in 1..=4 {
            assert_eq!(shape(An1(n)), format!("A{}", 2 * n + 1));
            assert_eq!(shape(Cn1(n.max(2))), format!("A{}", 2 * n.max(2) + 1));
            assert_eq!(shape(B1n(n)), if n == 1 { "A3".to_string() } else { format!("D{}", n + 2) });
            assert_eq!(shape(A1n1(n)), format!("~A{}", 2 * n + 1));
            assert_eq!(shape(C1n1(n)), format!("~A{}", 2 * n + 1));
            assert_eq!(shape(CPrime1n1(n)), format!("~A{}", 2 * n + 1));
            assert_eq!(shape(APrime1n1(n)), format!("~D{}", n + 3));
            assert_eq!(shape(B1n1(n)), format!("~D{}", n + 3));
            assert_eq!(shape(BPrime1n1(n)), format!("~D{}", n + 3));
        }
        for n in 2..=4 {
            assert_eq!(shape(A1n(n)), format!("D{}", n + 2));
        }
        assert_eq!(shape(A22), "E6");
        assert_eq!(shape(F22), "E6");
        assert_eq!(shape(A32), "~E7");
        assert_eq!(shape(F32), "~E7");
        assert_eq!(shape(A23), "~E6");
        assert_eq!(shape(F23), "~E6");
        for n in 3..=5 {
            for f in [Dn1(n), DPrimen1(n), D1n(n), DPrime1n(n)] {
                assert!(shape(f).starts_with('~'), "{f}: {}", shape(f));
            }
        }
    }

    #[test]
    fn table_examples() {
        let a22 = FamilyMatch::A22.template().unwrap().species_from().unwrap();
        assert_eq!(classify_via_table(&a22).unwrap(), RepType::Finite);
        let d13 = FamilyMatch::D1n(3).template().unwrap().species_from().unwrap();
        assert_eq!(classify_via_table(&d13).unwrap(), RepType::Tame);
        let mut grown = a22.clone();
        let labels: Vec<Label> = grown.labels().iter().copied().chain([Label::D]).collect();
        let mut bigger = Superspecies::new(labels);
        for ((i, j), b) in grown.bimodules() {
            bigger.set_bimodule(i, j, b);
        }
        // a black hung off the far end gives A(2,3), which is tame; off the
        // first black it is wild
        let mut end = bigger.clone();
        end.set_bimodule(3, 4, Bimodule::DD { plus: 1, minus: 0 });
        assert_eq!(classify_via_table(&end).unwrap(), RepType::Tame);
        bigger.set_bimodule(2, 4, Bimodule::DD { plus: 1, minus: 0 });
        grown = bigger;
        assert_eq!(classify_via_table(&grown).unwrap(), RepType::Wild);
        let k3 = Superspecies::new(vec![Label::K, Label::K]).with(0, 1, Bimodule::KK { d0: 3, d1: 0 });
        assert_eq!(classify_via_table(&k3).unwrap(), RepType::Wild);
    }
}
