use std::fmt;

use serde::Serialize;

use super::front::{Event, FrontDiagram};
use super::graph::{Shape, StrandGraph};
use super::tangle::{LegendrianTangle, TEvent};
use crate::error::{Error, Result};

/// Crossing types of a Morse word.
///
/// `Pos` is the crossing a front crossing becomes: the strand entering at
/// the upper left (lesser slope) passes over. `Neg` is its mirror. These are
/// unoriented types; the oriented sign of a crossing also depends on the
/// directions of its strands (see [`FramedDiagram::writhe`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Cross {
    Pos,
    Neg,
}

impl Cross {
    pub fn flip(self) -> Cross {
        match self {
            Cross::Pos => Cross::Neg,
            Cross::Neg => Cross::Pos,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FEvent {
    Cup(usize),
    Cap(usize),
    Cross(usize, Cross),
}

impl FEvent {
    pub fn shape(self) -> Shape {
        match self {
            FEvent::Cup(q) => Shape::Open(q),
            FEvent::Cap(q) => Shape::Close(q),
            FEvent::Cross(q, _) => Shape::Swap(q),
        }
    }
}

/// A blackboard-framed diagram as a Morse word with `arity` endpoints on
/// each side (0 for closed diagrams).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FramedDiagram {
    arity: usize,
    events: Vec<FEvent>,
}

impl FramedDiagram {
    pub fn new(arity: usize, events: Vec<FEvent>) -> Result<Self> {
        let mut c = arity;
        for (i, e) in events.iter().enumerate() {
            let ok = match *e {
                FEvent::Cup(q) => q <= c,
                FEvent::Cap(q) | FEvent::Cross(q, _) => q + 1 < c,
            };
            if !ok {
                return Err(Error::Validation(format!(
                    "Morse event {} ({e:?}) out of range with {c} strands",
                    i + 1
                )));
            }
            c = match e {
                FEvent::Cup(_) => c + 2,
                FEvent::Cap(_) => c - 2,
                FEvent::Cross(..) => c,
            };
        }
        if c != arity {
            return Err(Error::Validation(format!(
                "Morse word ends with {c} strands, expected {arity}"
            )));
        }
        Ok(FramedDiagram { arity, events })
    }

    pub fn closed(events: Vec<FEvent>) -> Result<Self> {
        Self::new(0, events)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn events(&self) -> &[FEvent] {
        &self.events
    }

    pub fn into_events(self) -> Vec<FEvent> {
        self.events
    }

    pub fn crossings(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e, FEvent::Cross(..)))
            .count()
    }

    pub fn graph(&self) -> StrandGraph {
        let shapes: Vec<Shape> = self.events.iter().map(|e| e.shape()).collect();
        StrandGraph::new(&shapes, self.arity)
    }

    /// Oriented writhe under the default orientation of the strand graph.
    pub fn writhe(&self) -> i64 {
        let g = self.graph();
        let dirs = g.orientation(&[]);
        self.events
            .iter()
            .enumerate()
            .filter_map(|(e, ev)| match ev {
                FEvent::Cross(q, k) => {
                    let same = dirs[g.seg(e, *q)] == dirs[g.seg(e, q + 1)];
                    let s = if same { 1 } else { -1 };
                    Some(if *k == Cross::Pos { s } else { -s })
                }
                _ => None,
            })
            .sum()
    }
}

impl fmt::Display for FramedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .events
            .iter()
            .map(|e| match e {
                FEvent::Cup(q) => format!("cup{}", q + 1),
                FEvent::Cap(q) => format!("cap{}", q + 1),
                FEvent::Cross(q, Cross::Pos) => format!("p{}", q + 1),
                FEvent::Cross(q, Cross::Neg) => format!("n{}", q + 1),
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn fr_event(ev: &Event, out: &mut Vec<FEvent>) {
    match *ev {
        Event::LeftCusp(q) => out.push(FEvent::Cup(q)),
        Event::RightCusp(q) => {
            out.push(FEvent::Cross(q, Cross::Pos));
            out.push(FEvent::Cap(q));
        }
        Event::Crossing(q) => out.push(FEvent::Cross(q, Cross::Pos)),
        Event::BasePoint(..) => {}
    }
}

/// `fr`: smooth left cusps, keep crossings, and put a kink at each right cusp.
pub fn framed_from_front(front: &FrontDiagram) -> FramedDiagram {
    let mut out = Vec::new();
    for ev in front.events() {
        fr_event(ev, &mut out);
    }
    FramedDiagram {
        arity: 0,
        events: out,
    }
}

pub fn framed_from_tangle(t: &LegendrianTangle) -> FramedDiagram {
    let mut out = Vec::new();
    for ev in t.events() {
        fr_event(&TEvent::to_event(*ev), &mut out);
    }
    FramedDiagram {
        arity: t.arity(),
        events: out,
    }
}
