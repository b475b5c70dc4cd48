use std::fmt;

use serde::Serialize;

use super::front::{parse_events, render_events, trace_counts, Event};
use super::graph::{Shape, StrandGraph};
use crate::error::{Error, Result};

/// A Legendrian n-tangle: an event list with `n` endpoints on each side.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LegendrianTangle {
    arity: usize,
    events: Vec<TEvent>,
}

/// Tangle events carry no base-point labels, which keeps them hashable and
/// ordered for collecting like terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TEvent {
    L(usize),
    R(usize),
    X(usize),
}

impl TEvent {
    pub fn to_event(self) -> Event {
        match self {
            TEvent::L(q) => Event::LeftCusp(q),
            TEvent::R(q) => Event::RightCusp(q),
            TEvent::X(q) => Event::Crossing(q),
        }
    }

    pub fn shape(self) -> Shape {
        match self {
            TEvent::L(q) => Shape::Open(q),
            TEvent::R(q) => Shape::Close(q),
            TEvent::X(q) => Shape::Swap(q),
        }
    }
}

impl LegendrianTangle {
    pub fn new(arity: usize, events: Vec<TEvent>) -> Result<Self> {
        let evs: Vec<Event> = events.iter().map(|e| e.to_event()).collect();
        let counts = trace_counts(&evs, arity)?;
        if *counts.last().unwrap() != arity {
            return Err(Error::Validation(format!(
                "tangle ends with {} strands, expected {arity}",
                counts.last().unwrap()
            )));
        }
        Ok(LegendrianTangle { arity, events })
    }

    pub fn parse(text: &str, arity: usize) -> Result<Self> {
        let events = parse_events(text)?
            .into_iter()
            .filter_map(|e| match e {
                Event::LeftCusp(q) => Some(TEvent::L(q)),
                Event::RightCusp(q) => Some(TEvent::R(q)),
                Event::Crossing(q) => Some(TEvent::X(q)),
                Event::BasePoint(..) => None,
            })
            .collect();
        Self::new(arity, events)
    }

    pub fn identity(n: usize) -> Self {
        LegendrianTangle {
            arity: n,
            events: Vec::new(),
        }
    }

    /// The crossing σ_i (1-based `i`) in arity `n`.
    pub fn sigma(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::BadIndices(format!("sigma_{i} in arity {n}")));
        }
        Self::new(n, vec![TEvent::X(i - 1)])
    }

    /// The hook e_i (1-based `i`): a right cusp joining left endpoints i,
    /// i+1 followed by a left cusp joining right endpoints i, i+1.
    pub fn hook(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::BadIndices(format!("e_{i} in arity {n}")));
        }
        Self::new(n, vec![TEvent::R(i - 1), TEvent::L(i - 1)])
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn events(&self) -> &[TEvent] {
        &self.events
    }

    pub fn crossings(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e, TEvent::X(_)))
            .count()
    }

    pub fn right_cusps(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e, TEvent::R(_)))
            .count()
    }

    /// `self · other`: `other` is stacked to the left of `self`.
    pub fn multiply(&self, other: &LegendrianTangle) -> Result<Self> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        let mut events = other.events.clone();
        events.extend_from_slice(&self.events);
        Ok(LegendrianTangle {
            arity: self.arity,
            events,
        })
    }

    /// Adds `k` straight strands below.
    pub fn extend_below(&self, k: usize) -> Self {
        LegendrianTangle {
            arity: self.arity + k,
            events: self.events.clone(),
        }
    }

    /// True if some crossing sits directly against a cusp on the same pair
    /// of positions, the local picture of σ_i e_i or e_i σ_i.
    pub fn has_fishtail(&self) -> bool {
        self.events.windows(2).any(|w| {
            matches!((w[0], w[1]),
                (TEvent::L(a), TEvent::X(b)) | (TEvent::X(a), TEvent::R(b)) if a == b)
        })
    }

    pub fn graph(&self) -> StrandGraph {
        let shapes: Vec<Shape> = self.events.iter().map(|e| e.shape()).collect();
        StrandGraph::new(&shapes, self.arity)
    }

    pub fn render(&self) -> String {
        let evs: Vec<Event> = self.events.iter().map(|e| e.to_event()).collect();
        render_events(&evs)
    }
}

impl fmt::Display for LegendrianTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.events.is_empty() {
            write!(f, "id{}", self.arity)
        } else {
            f.write_str(&self.render())
        }
    }
}

/// A positive permutation braid with its canonical reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PermutationBraid {
    /// `perm[i]` is the right endpoint (0-based) of the strand starting at
    /// left endpoint `i`.
    perm: Vec<usize>,
    /// Crossing positions, left to right.
    word: Vec<usize>,
}

impl PermutationBraid {
    /// Builds the braid of a 0-based permutation. The word is produced by
    /// repeatedly swapping the topmost adjacent pair that is out of order,
    /// so every inversion is crossed exactly once.
    pub fn new(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::BadIndices(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        let mut cur: Vec<usize> = (0..n).collect();
        let mut word = Vec::new();
        while let Some(i) = (0..n.saturating_sub(1)).find(|&i| perm[cur[i]] > perm[cur[i + 1]]) {
            cur.swap(i, i + 1);
            word.push(i);
        }
        Ok(PermutationBraid {
            perm: perm.to_vec(),
            word,
        })
    }

    /// Parses a 1-based one-line permutation such as `21` or `2,3,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let digits: Vec<usize> = if t.contains(',') || t.contains(' ') {
            t.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::BadIndices(format!("bad permutation '{text}'")))?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::BadIndices(format!("bad permutation '{text}'")))?
        };
        if digits.contains(&0) {
            return Err(Error::BadIndices("permutations are 1-based".to_string()));
        }
        Self::new(&digits.iter().map(|d| d - 1).collect::<Vec<_>>())
    }

    pub fn identity(n: usize) -> Self {
        PermutationBraid {
            perm: (0..n).collect(),
            word: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// λ(β), the number of inversions.
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn to_tangle(&self) -> LegendrianTangle {
        LegendrianTangle {
            arity: self.n(),
            events: self.word.iter().map(|&q| TEvent::X(q)).collect(),
        }
    }

    /// All permutation braids of S_n in lexicographic order of permutations.
    pub fn all(n: usize) -> Vec<PermutationBraid> {
        use itertools::Itertools;
        (0..n)
            .permutations(n)
            .map(|p| PermutationBraid::new(&p).expect("valid permutation"))
            .collect()
    }

    /// 1-based one-line notation.
    pub fn render(&self) -> String {
        self.perm
            .iter()
            .map(|p| (p + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}
