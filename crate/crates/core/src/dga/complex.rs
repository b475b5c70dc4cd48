use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::diagram::{ChordKind, Dir, Event, LagrangianDiagram, ReebChord};
use crate::error::{Error, Result};

pub const DEFAULT_DISK_BUDGET: usize = 10_000_000;

/// A letter of a word in the DGA: a Reeb chord or a base-point generator
/// raised to ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Letter {
    Chord(usize),
    T { index: usize, inverse: bool },
}

pub type Word = Vec<Letter>;

/// A base point of the diagram with the event index it sits at.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasePoint {
    pub event: usize,
    pub label: String,
}

/// The Chekanov–Eliashberg algebra over ℤ/2 of a resolved front.
#[derive(Debug, Clone, Serialize)]
pub struct Dga {
    pub chords: Vec<ReebChord>,
    pub base_points: Vec<BasePoint>,
    /// `∂` of every chord as a sum of distinct words (coefficients in ℤ/2).
    pub differential: Vec<Vec<Word>>,
}

impl Dga {
    pub fn rb(&self) -> usize {
        self.chords.len()
    }

    pub fn ell(&self) -> usize {
        self.base_points.len()
    }

    pub fn name(&self, l: Letter) -> String {
        match l {
            Letter::Chord(i) => {
                let c = self.chords[i];
                let kind = match c.kind {
                    ChordKind::A => "a",
                    ChordKind::C => "c",
                };
                let ordinal = self.chords[..i].iter().filter(|d| d.kind == c.kind).count() + 1;
                format!("{kind}{ordinal}")
            }
            Letter::T { index, inverse } => {
                let base = if self.base_points.len() == 1 {
                    "t".to_string()
                } else {
                    format!("t{}", index + 1)
                };
                if inverse {
                    format!("{base}^-1")
                } else {
                    base
                }
            }
        }
    }

    pub fn render_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// `∂` of chord `i` in text form, e.g. `1 + t`.
    pub fn render_differential(&self, i: usize) -> String {
        if self.differential[i].is_empty() {
            return "0".to_string();
        }
        self.differential[i]
            .iter()
            .map(|w| self.render_word(w))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// `∂²` of every chord, computed with the Leibniz rule over ℤ/2 with
    /// `∂t = 0`. Empty vectors everywhere mean `∂² = 0`.
    pub fn d_squared(&self) -> Vec<Vec<Word>> {
        (0..self.rb())
            .map(|i| {
                let mut acc = BTreeMap::new();
                for w in &self.differential[i] {
                    for (k, &l) in w.iter().enumerate() {
                        let Letter::Chord(j) = l else { continue };
                        for d in &self.differential[j] {
                            let mut nw: Word = w[..k].to_vec();
                            nw.extend_from_slice(d);
                            nw.extend_from_slice(&w[k + 1..]);
                            toggle(&mut acc, reduce_word(nw));
                        }
                    }
                }
                acc.into_keys().collect()
            })
            .collect()
    }

    pub fn d_squared_is_zero(&self) -> bool {
        self.d_squared().iter().all(|v| v.is_empty())
    }
}

impl fmt::Display for Dga {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rb() {
            writeln!(
                f,
                "d {} = {}",
                self.name(Letter::Chord(i)),
                self.render_differential(i)
            )?;
        }
        Ok(())
    }
}

fn toggle(acc: &mut BTreeMap<Word, ()>, w: Word) {
    if acc.remove(&w).is_none() {
        acc.insert(w, ());
    }
}

/// Cancels adjacent `t t⁻¹` pairs.
fn reduce_word(w: Word) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for l in w {
        if let (
            Some(&Letter::T {
                index: i,
                inverse: a,
            }),
            Letter::T {
                index: j,
                inverse: b,
            },
        ) = (out.last(), l)
        {
            if i == j && a != b {
                out.pop();
                continue;
            }
        }
        out.push(l);
    }
    out
}

pub fn build_dga(d: &LagrangianDiagram) -> Result<Dga> {
    build_dga_with(d, DEFAULT_DISK_BUDGET)
}

/// Differential by enumerating admissible disks of the resolved front.
///
/// A disk starts at a left cusp as a pair of boundary paths `u < l` and runs
/// rightwards. The upper path may turn at a crossing when it is the lower
/// strand there (the disk occupies the bottom quadrant), the lower path
/// likewise when it is the upper strand. The disk ends with its positive
/// corner where the two paths meet at a crossing or a right cusp. Every
/// right cusp also bounds the small loop disk, which contributes the word 1.
pub fn build_dga_with(d: &LagrangianDiagram, budget: usize) -> Result<Dga> {
    let front = &d.front;
    let events = front.events();
    let g = front.graph();
    let base_points: Vec<BasePoint> = events
        .iter()
        .enumerate()
        .filter_map(|(e, ev)| match ev {
            Event::BasePoint(_, label) => Some(BasePoint {
                event: e,
                label: label.clone(),
            }),
            _ => None,
        })
        .collect();
    let bp_index = |e: usize| base_points.iter().position(|b| b.event == e).unwrap();
    let bp_dir = |e: usize| d.orientation[g.seg(e, events[e].pos())];

    let mut acc: Vec<BTreeMap<Word, ()>> = vec![BTreeMap::new(); d.chords.len()];
    for (i, c) in d.chords.iter().enumerate() {
        if c.kind == ChordKind::C {
            toggle(&mut acc[i], Vec::new());
        }
    }
    let mut nodes = 0usize;
    for (start, ev) in events.iter().enumerate() {
        let Event::LeftCusp(q) = *ev else { continue };
        let mut stack = vec![Partial {
            next: start + 1,
            u: q,
            l: q + 1,
            upper: Vec::new(),
            lower: Vec::new(),
        }];
        while let Some(p) = stack.pop() {
            nodes += 1;
            if nodes > budget {
                return Err(Error::DiskSearchOverflow(budget));
            }
            let Some(ev) = events.get(p.next) else {
                continue;
            };
            let e = p.next;
            match *ev {
                Event::LeftCusp(q) => {
                    let sh = |x: usize| if x >= q { x + 2 } else { x };
                    stack.push(Partial {
                        next: e + 1,
                        u: sh(p.u),
                        l: sh(p.l),
                        ..p
                    });
                }
                Event::RightCusp(q) => {
                    if p.u == q && p.l == q + 1 {
                        let chord = d.chord_at(e).expect("right cusp chord");
                        toggle(&mut acc[chord], disk_word(p.upper, p.lower));
                    } else if [q, q + 1].contains(&p.u) || [q, q + 1].contains(&p.l) {
                        // One boundary path runs into the cusp: no disk.
                    } else {
                        let sh = |x: usize| if x > q + 1 { x - 2 } else { x };
                        stack.push(Partial {
                            next: e + 1,
                            u: sh(p.u),
                            l: sh(p.l),
                            ..p
                        });
                    }
                }
                Event::Crossing(q) => {
                    let chord = d.chord_at(e).expect("crossing chord");
                    if p.u == q && p.l == q + 1 {
                        toggle(&mut acc[chord], disk_word(p.upper, p.lower));
                        continue;
                    }
                    let swap = |x: usize| {
                        if x == q {
                            q + 1
                        } else if x == q + 1 {
                            q
                        } else {
                            x
                        }
                    };
                    let mut us = vec![(swap(p.u), false)];
                    if p.u == q + 1 {
                        us.push((q + 1, true));
                    }
                    let mut ls = vec![(swap(p.l), false)];
                    if p.l == q {
                        ls.push((q, true));
                    }
                    for &(u, cu) in &us {
                        for &(l, cl) in &ls {
                            if u >= l {
                                continue;
                            }
                            let mut upper = p.upper.clone();
                            let mut lower = p.lower.clone();
                            if cu {
                                upper.push(Letter::Chord(chord));
                            }
                            if cl {
                                lower.push(Letter::Chord(chord));
                            }
                            stack.push(Partial {
                                next: e + 1,
                                u,
                                l,
                                upper,
                                lower,
                            });
                        }
                    }
                }
                Event::BasePoint(pos, _) => {
                    let mut p = p;
                    let k = bp_index(e);
                    let right = bp_dir(e) == Dir::Right;
                    // The boundary runs leftwards along the upper path and
                    // rightwards along the lower one.
                    if p.u == pos {
                        p.upper.push(Letter::T {
                            index: k,
                            inverse: right,
                        });
                    }
                    if p.l == pos {
                        p.lower.push(Letter::T {
                            index: k,
                            inverse: !right,
                        });
                    }
                    stack.push(Partial { next: e + 1, ..p });
                }
            }
        }
    }
    Ok(Dga {
        chords: d.chords.clone(),
        base_points,
        differential: acc.into_iter().map(|m| m.into_keys().collect()).collect(),
    })
}

struct Partial {
    next: usize,
    u: usize,
    l: usize,
    upper: Word,
    lower: Word,
}

/// Counterclockwise from the positive corner: back along the upper path,
/// then forward along the lower path.
fn disk_word(upper: Word, lower: Word) -> Word {
    let mut w: Word = upper.into_iter().rev().collect();
    w.extend(lower);
    reduce_word(w)
}
