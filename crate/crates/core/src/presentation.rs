//! Finite presentations of fundamental groups of cube complexes.
//!
//! Generators are the 1-cubes outside a BFS spanning tree of the 1-skeleton;
//! each square contributes its boundary word. Words are sequences of nonzero
//! letters: `+(i+1)` is generator `i`, `-(i+1)` its inverse.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{bit, Cube, CubeComplex};
use crate::homology::{invariant_factors, IntegerMatrix};

pub type Letter = i32;
pub type Word = Vec<Letter>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("complex is disconnected ({0} components); pick a component first")]
    Disconnected(usize),
    #[error("complex has no vertices")]
    Empty,
    #[error("basepoint {0} is not a vertex of the complex")]
    BadBasepoint(usize),
    #[error("squares are needed but the complex was built only up to dimension {0}")]
    Capped(usize),
    #[error("malformed word token {0:?}")]
    BadToken(String),
    #[error("generator index {0} out of range")]
    GeneratorOutOfRange(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

/// `H_1` of a presented group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

fn gen_of(l: Letter) -> usize {
    (l.unsigned_abs() - 1) as usize
}

fn letter(g: usize, inverse: bool) -> Letter {
    let l = g as Letter + 1;
    if inverse {
        -l
    } else {
        l
    }
}

pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction followed by cancellation around the cyclic seam.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let w = free_reduce(w);
    let (mut i, mut j) = (0, w.len());
    while j - i >= 2 && w[i] == -w[j - 1] {
        i += 1;
        j -= 1;
    }
    w[i..j].to_vec()
}

pub fn invert(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| -l).collect()
}

/// Presentation of `pi_1(cc, basepoint)`; the basepoint defaults to the first
/// 0-cube.
pub fn pi1_presentation(cc: &CubeComplex, basepoint: Option<usize>) -> Result<Presentation, PresentationError> {
    let nv = cc.cube_count(0);
    if nv == 0 {
        return Err(PresentationError::Empty);
    }
    if cc.dim() < 2 && !cc.is_complete() {
        return Err(PresentationError::Capped(cc.dim()));
    }
    let root = basepoint.unwrap_or(0);
    if root >= nv {
        return Err(PresentationError::BadBasepoint(root));
    }
    let (_, comps) = cc.vertex_component_labels();
    if comps != 1 {
        return Err(PresentationError::Disconnected(comps));
    }
    let ne = cc.cube_count(1);
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
    for i in 0..ne {
        let (a, b) = cc.edge_endpoints(i);
        adj[a].push((i, b));
        adj[b].push((i, a));
    }
    let mut in_tree = vec![false; ne];
    let mut seen = vec![false; nv];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &(e, w) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                in_tree[e] = true;
                queue.push_back(w);
            }
        }
    }
    let mut gen_index = vec![usize::MAX; ne];
    let mut generators = Vec::new();
    for e in (0..ne).filter(|&e| !in_tree[e]) {
        gen_index[e] = generators.len();
        generators.push(format!("e{e}"));
    }
    let g = cc.graph();
    let step = |c: Cube, inverse: bool, out: &mut Word| {
        let e = cc.index_of(&c).expect("square edges are present");
        if !in_tree[e] {
            out.push(letter(gen_index[e], inverse));
        }
    };
    let mut relators = Vec::new();
    if cc.dim() >= 2 {
        for sq in cc.cubes(2) {
            let mut labels = crate::complex::bits(sq.moving);
            let (e, f) = (labels.next().unwrap(), labels.next().unwrap());
            let [e0, e1] = g.edge(e);
            let [f0, f1] = g.edge(f);
            let b = sq.base;
            // 00 -> 10 -> 11 -> 01 -> 00, coordinates (e, f).
            let mut w = Word::with_capacity(4);
            step(Cube { base: b | bit(f0), moving: bit(e) }, false, &mut w);
            step(Cube { base: b | bit(e1), moving: bit(f) }, false, &mut w);
            step(Cube { base: b | bit(f1), moving: bit(e) }, true, &mut w);
            step(Cube { base: b | bit(e0), moving: bit(f) }, true, &mut w);
            let w = cyclic_reduce(&w);
            if !w.is_empty() {
                relators.push(w);
            }
        }
    }
    Ok(Presentation { generators, relators })
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        for w in &relators {
            for &l in w {
                if l == 0 || gen_of(l) >= generators.len() {
                    return Err(PresentationError::GeneratorOutOfRange(l.unsigned_abs() as usize));
                }
            }
        }
        Ok(Self { generators, relators: relators.iter().map(|w| free_reduce(w)).collect() })
    }

    /// Rank of the free group when there are no relators.
    pub fn free_rank(&self) -> Option<usize> {
        self.relators.is_empty().then_some(self.generators.len())
    }

    pub fn abelianization(&self) -> Abelianization {
        let cols: Vec<Vec<(usize, i64)>> = {
            // Transposed relation matrix: one column per relator.
            self.relators.iter().map(|w| w.iter().map(|&l| (gen_of(l), l.signum() as i64)).collect()).collect()
        };
        let m = IntegerMatrix::from_columns(self.generators.len(), cols);
        let factors = invariant_factors(&m);
        Abelianization {
            free_rank: self.generators.len() - factors.len(),
            torsion: factors.into_iter().filter(|f| !f.is_one()).collect(),
        }
    }

    pub fn word_to_string(w: &[Letter]) -> String {
        w.iter()
            .map(|&l| if l > 0 { format!("g{}", gen_of(l)) } else { format!("G{}", gen_of(l)) })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse_word(s: &str) -> Result<Word, PresentationError> {
        s.split_whitespace()
            .map(|t| {
                let bad = || PresentationError::BadToken(t.to_string());
                let (inv, rest) = match t.as_bytes().first() {
                    Some(b'g') => (false, &t[1..]),
                    Some(b'G') => (true, &t[1..]),
                    _ => return Err(bad()),
                };
                let i: usize = rest.parse().map_err(|_| bad())?;
                Ok(letter(i, inv))
            })
            .collect()
    }

    pub fn to_serial(&self) -> SerialPresentation {
        SerialPresentation {
            generators: self.generators.clone(),
            relators: self.relators.iter().map(|w| Self::word_to_string(w)).collect(),
        }
    }

    pub fn from_serial(s: &SerialPresentation) -> Result<Self, PresentationError> {
        let relators = s.relators.iter().map(|w| Self::parse_word(w)).collect::<Result<_, _>>()?;
        Self::new(s.generators.clone(), relators)
    }
}

/// Wire form: relators as space-separated `g<i>` / `G<i>` tokens.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerialPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<String>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |w: &Word| {
            if w.is_empty() {
                return "1".to_string();
            }
            w.iter()
                .map(|&l| {
                    let name = &self.generators[gen_of(l)];
                    if l > 0 {
                        name.clone()
                    } else {
                        format!("{name}^-1")
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "⟨{}", self.generators.join(", "))?;
        if !self.relators.is_empty() {
            write!(f, " | {}", self.relators.iter().map(word).collect::<Vec<_>>().join(", "))?;
        } else {
            write!(f, " |")?;
        }
        write!(f, "⟩")
    }
}

/// Tietze simplification to a fixed point: cyclic reduction, removal of
/// trivial and repeated relators, and elimination of any generator occurring
/// exactly once in some relator (shortest relators first, highest-numbered
/// generator first, so earlier names survive).
pub fn tietze_simplify(p: &Presentation) -> Presentation {
    let ng = p.generators.len();
    let mut rels: Vec<Option<Word>> = p.relators.iter().map(|w| Some(cyclic_reduce(w))).collect();
    let mut occurs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ng];
    let mut queue: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (r, w) in rels.iter_mut().enumerate() {
        if w.as_ref().is_none_or(Vec::is_empty) {
            *w = None;
            continue;
        }
        let w = w.as_ref().unwrap();
        for &l in w {
            occurs[gen_of(l)].insert(r);
        }
        queue.insert((w.len(), r));
    }
    let mut alive = vec![true; ng];

    while let Some((_, r)) = queue.pop_first() {
        let Some(w) = rels[r].clone() else { continue };
        let mut counts = std::collections::BTreeMap::<usize, usize>::new();
        for &l in &w {
            *counts.entry(gen_of(l)).or_default() += 1;
        }
        let Some(x) = counts.iter().rev().find(|(_, &c)| c == 1).map(|(&g, _)| g) else { continue };
        // Rotate so the unique occurrence leads: x^s u = 1, so x = u^{-s}.
        let pos = w.iter().position(|&l| gen_of(l) == x).unwrap();
        let s = w[pos];
        let u: Word = w[pos + 1..].iter().chain(&w[..pos]).copied().collect();
        let image = if s > 0 { invert(&u) } else { u };
        rels[r] = None;
        for &l in &w {
            occurs[gen_of(l)].remove(&r);
        }
        alive[x] = false;
        for q in std::mem::take(&mut occurs[x]) {
            let Some(old) = rels[q].take() else { continue };
            queue.remove(&(old.len(), q));
            let mut sub = Word::with_capacity(old.len() + image.len());
            for &l in &old {
                if gen_of(l) == x {
                    if l > 0 {
                        sub.extend_from_slice(&image);
                    } else {
                        sub.extend(invert(&image));
                    }
                } else {
                    sub.push(l);
                }
            }
            let sub = cyclic_reduce(&sub);
            for &l in &old {
                occurs[gen_of(l)].remove(&q);
            }
            if sub.is_empty() {
                continue;
            }
            for &l in &sub {
                occurs[gen_of(l)].insert(q);
            }
            queue.insert((sub.len(), q));
            rels[q] = Some(sub);
        }
    }

    let mut renumber = vec![usize::MAX; ng];
    let mut generators = Vec::new();
    for g in 0..ng {
        if alive[g] {
            renumber[g] = generators.len();
            generators.push(p.generators[g].clone());
        }
    }
    let mut relators: Vec<Word> =
        rels.into_iter().flatten().map(|w| w.iter().map(|&l| letter(renumber[gen_of(l)], l < 0)).collect()).collect();
    relators.sort();
    relators.dedup();
    Presentation { generators, relators }
}
