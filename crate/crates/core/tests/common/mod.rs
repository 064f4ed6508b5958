//! Shared builders for the integration tests.
#![allow(dead_code)]

use superrep::superquiver::SuperquiverBuilder;
use superrep::{Bimodule, Color, Label, Style, Superquiver, Superspecies};

/// Superquiver from a color string (`w`/`b`) and links `(u, v, kind)`:
/// `-` one solid arrow u→v, `.` one dotted arrow u→v, `s` a solid arrow from
/// the white end to the black end, `p` a solid and a dotted arrow from the
/// black end to the white end.
pub fn superquiver(colors: &str, links: &[(usize, usize, char)]) -> Superquiver {
    let mut b = SuperquiverBuilder::default();
    let cs: Vec<Color> = colors
        .chars()
        .map(|c| match c {
            'w' => Color::White,
            'b' => Color::Black,
            _ => panic!("bad color {c}"),
        })
        .collect();
    for &c in &cs {
        b = b.vertex(c);
    }
    for &(u, v, kind) in links {
        let (white, black) = if cs[u] == Color::White { (u, v) } else { (v, u) };
        b = match kind {
            '-' => b.arrow(u, v, Style::Solid),
            '.' => b.arrow(u, v, Style::Dotted),
            's' => b.arrow(white, black, Style::Solid),
            'p' => b.arrow(black, white, Style::Solid).arrow(black, white, Style::Dotted),
            _ => panic!("bad link {kind}"),
        };
    }
    b.build()
}

/// A path: `links[i]` joins vertex i and i + 1.
pub fn chain(colors: &str, links: &str) -> Superquiver {
    let l: Vec<(usize, usize, char)> = links.chars().enumerate().map(|(i, c)| (i, i + 1, c)).collect();
    superquiver(colors, &l)
}

pub fn repeat(c: char, n: usize) -> String {
    std::iter::repeat(c).take(n).collect()
}

/// Branch vertex 0 with leaves 1 and 2 and a chain 0-3-…-(n-1), all of
/// color `c`, then a vertex of the other color attached to the chain's end
/// by `end`.
pub fn fork(c: char, n: usize, end: char) -> Superquiver {
    let other = if c == 'w' { 'b' } else { 'w' };
    let colors = format!("{}{}", repeat(c, n), other);
    let mut links = vec![(0, 1, '-'), (0, 2, '-')];
    let mut prev = 0;
    for v in 3..n {
        links.push((prev, v, '-'));
        prev = v;
    }
    links.push((prev, n, end));
    superquiver(&colors, &links)
}

pub fn kk(d0: usize, d1: usize) -> Superspecies {
    Superspecies::new(vec![Label::K, Label::K]).with(0, 1, Bimodule::KK { d0, d1 })
}

pub fn k_to_d(rank: usize) -> Superspecies {
    Superspecies::new(vec![Label::K, Label::D]).with(0, 1, Bimodule::KtoD { rank })
}

pub fn d_to_k(rank: usize) -> Superspecies {
    Superspecies::new(vec![Label::D, Label::K]).with(0, 1, Bimodule::DtoK { rank })
}

/// A(2,1): two whites, then a solid arrow into a black.
pub fn a21() -> Superspecies {
    chain("wwb", "-s").species_from().unwrap()
}

/// Small deterministic generator (64-bit LCG) for reproducible samples.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn below(&mut self, n: usize) -> usize {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((self.0 >> 33) % n as u64) as usize
    }
}

/// A random acyclic species on `n` vertices with edges only from lower to
/// higher index and bimodule parameters ≤ `max`.
pub fn random_species(rng: &mut Lcg, n: usize, max: usize, density: usize) -> Superspecies {
    let labels: Vec<Label> = (0..n).map(|_| if rng.below(2) == 0 { Label::K } else { Label::D }).collect();
    let mut s = Superspecies::new(labels.clone());
    for i in 0..n {
        for j in i + 1..n {
            if rng.below(density) != 0 {
                continue;
            }
            let mut p = || rng.below(max + 1);
            let b = match (labels[i], labels[j]) {
                (Label::K, Label::K) => Bimodule::KK { d0: p(), d1: p() },
                (Label::K, Label::D) => Bimodule::KtoD { rank: p() },
                (Label::D, Label::K) => Bimodule::DtoK { rank: p() },
                (Label::D, Label::D) => Bimodule::DD { plus: p(), minus: p() },
            };
            s.set_bimodule(i, j, b);
        }
    }
    s
}
