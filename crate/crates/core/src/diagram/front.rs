use std::fmt;

use serde::Serialize;

use super::graph::{Dir, Shape, StrandGraph};
use crate::error::{Error, Result};

/// One event of a front, read left to right. Positions are 0-based from the
/// top; the text grammar uses 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum Event {
    LeftCusp(usize),
    RightCusp(usize),
    Crossing(usize),
    BasePoint(usize, String),
}

impl Event {
    pub fn shape(&self) -> Shape {
        match *self {
            Event::LeftCusp(q) => Shape::Open(q),
            Event::RightCusp(q) => Shape::Close(q),
            Event::Crossing(q) => Shape::Swap(q),
            Event::BasePoint(..) => Shape::Pass,
        }
    }

    pub fn pos(&self) -> usize {
        match *self {
            Event::LeftCusp(q)
            | Event::RightCusp(q)
            | Event::Crossing(q)
            | Event::BasePoint(q, _) => q,
        }
    }

    pub fn with_offset(&self, off: usize) -> Event {
        match self {
            Event::LeftCusp(q) => Event::LeftCusp(q + off),
            Event::RightCusp(q) => Event::RightCusp(q + off),
            Event::Crossing(q) => Event::Crossing(q + off),
            Event::BasePoint(q, l) => Event::BasePoint(q + off, l.clone()),
        }
    }

    fn render(&self) -> String {
        match self {
            Event::LeftCusp(q) => format!("L{}", q + 1),
            Event::RightCusp(q) => format!("R{}", q + 1),
            Event::Crossing(q) => format!("X{}", q + 1),
            Event::BasePoint(q, l) => format!("B{} {}", q + 1, l),
        }
    }
}

/// Strand counts at every slice, validating each event against the count
/// before it.
pub(crate) fn trace_counts(events: &[Event], start: usize) -> Result<Vec<usize>> {
    let mut counts = vec![start];
    let mut c = start;
    for (i, e) in events.iter().enumerate() {
        let bad = |what: &str| {
            Error::Validation(format!(
                "event {} ({}): {what} with {c} strands",
                i + 1,
                e.render()
            ))
        };
        c = match *e {
            Event::LeftCusp(q) if q <= c => c + 2,
            Event::LeftCusp(_) => return Err(bad("left cusp position out of range")),
            Event::RightCusp(q) if q + 1 < c => c - 2,
            Event::RightCusp(_) => return Err(bad("right cusp position out of range")),
            Event::Crossing(q) if q + 1 < c => c,
            Event::Crossing(_) => return Err(bad("crossing position out of range")),
            Event::BasePoint(q, _) if q < c => c,
            Event::BasePoint(..) => return Err(bad("base point position out of range")),
        };
        counts.push(c);
    }
    Ok(counts)
}

/// A closed front diagram as an event list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FrontDiagram {
    events: Vec<Event>,
    #[serde(skip)]
    counts: Vec<usize>,
}

impl FrontDiagram {
    pub fn new(events: Vec<Event>) -> Result<Self> {
        let counts = trace_counts(&events, 0)?;
        if *counts.last().unwrap() != 0 {
            return Err(Error::Validation(format!(
                "front is not closed: {} strands remain at the right end",
                counts.last().unwrap()
            )));
        }
        Ok(FrontDiagram { events, counts })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_events(text)?)
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    /// Strand count at each slice; slice `t` precedes event `t`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn shapes(&self) -> Vec<Shape> {
        self.events.iter().map(Event::shape).collect()
    }

    pub fn graph(&self) -> StrandGraph {
        StrandGraph::new(&self.shapes(), 0)
    }

    pub fn crossings(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e, Event::Crossing(_)))
            .count()
    }

    pub fn right_cusps(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e, Event::RightCusp(_)))
            .count()
    }

    pub fn left_cusps(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e, Event::LeftCusp(_)))
            .count()
    }

    /// Reeb chords of the Ng resolution: one per crossing and right cusp.
    pub fn rb(&self) -> usize {
        self.crossings() + self.right_cusps()
    }

    pub fn base_points(&self) -> Vec<usize> {
        self.events
            .iter()
            .enumerate()
            .filter(|(_, e)| matches!(e, Event::BasePoint(..)))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn components(&self) -> usize {
        self.graph().components().len()
    }

    /// Left cusps first, then crossings and base points, then right cusps.
    pub fn is_plat(&self) -> bool {
        let phase = |e: &Event| match e {
            Event::LeftCusp(_) => 0,
            Event::Crossing(_) | Event::BasePoint(..) => 1,
            Event::RightCusp(_) => 2,
        };
        self.events.windows(2).all(|w| phase(&w[0]) <= phase(&w[1]))
    }

    /// Default orientation: every component is oriented so that the upper
    /// branch at its leftmost cusp runs left to right.
    pub fn orientation(&self) -> Vec<Dir> {
        self.graph().orientation(&[])
    }

    /// Writhe of the blackboard resolution under the default orientation.
    pub fn writhe(&self) -> i64 {
        let g = self.graph();
        let dirs = g.orientation(&[]);
        self.events
            .iter()
            .enumerate()
            .filter_map(|(e, ev)| match ev {
                Event::Crossing(q) => {
                    let same = dirs[g.seg(e, *q)] == dirs[g.seg(e, q + 1)];
                    Some(if same { 1 } else { -1 })
                }
                _ => None,
            })
            .sum()
    }

    /// Thurston–Bennequin number: writhe minus the number of right cusps.
    pub fn tb(&self) -> i64 {
        self.writhe() - self.right_cusps() as i64
    }

    /// Direction of the strand carrying the base point at event `e`.
    pub fn base_point_dir(&self, e: usize) -> Option<Dir> {
        match &self.events.get(e)? {
            Event::BasePoint(q, _) => {
                let g = self.graph();
                Some(g.orientation(&[])[g.seg(e, *q)])
            }
            _ => None,
        }
    }

    /// A copy with one base point added to every component that has none,
    /// placed just right of the component's leftmost cusp on the upper branch.
    pub fn with_base_point_per_component(&self) -> FrontDiagram {
        let g = self.graph();
        let comps = g.components();
        let mut covered = vec![false; comps.len()];
        let comp_of = |seg: usize| comps.iter().position(|c| c.iter().any(|w| w.seg == seg));
        for e in self.base_points() {
            if let Some(c) = comp_of(g.seg(e, self.events[e].pos())) {
                covered[c] = true;
            }
        }
        let mut inserts: Vec<(usize, usize)> = Vec::new();
        for (c, comp) in comps.iter().enumerate() {
            if !covered[c] {
                let (t, p) = g.locate(comp[0].seg);
                inserts.push((t, p));
            }
        }
        let mut events = Vec::new();
        let mut label = 0;
        for (t, ev) in self.events.iter().enumerate() {
            for &(_, p) in inserts.iter().filter(|(s, _)| *s == t) {
                label += 1;
                events.push(Event::BasePoint(p, format!("auto{label}")));
            }
            events.push(ev.clone());
        }
        FrontDiagram::new(events).expect("base points keep validity")
    }

    pub fn render(&self) -> String {
        render_events(&self.events)
    }
}

impl fmt::Display for FrontDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub(crate) fn render_events(events: &[Event]) -> String {
    events
        .iter()
        .map(Event::render)
        .collect::<Vec<_>>()
        .join("; ")
}

/// Parses the statement grammar `L p`, `X p`, `R p`, `B p label`, separated
/// by `;` or newlines; `#` starts a comment.
pub fn parse_events(text: &str) -> Result<Vec<Event>> {
    let mut events = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let mut col = 0;
        for stmt in line.split(';') {
            let start = col + stmt.len() - stmt.trim_start().len() + 1;
            col += stmt.len() + 1;
            let stmt = stmt.trim();
            if stmt.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: lineno + 1,
                column: start,
                message,
            };
            let mut chars = stmt.chars();
            let kind = chars.next().unwrap().to_ascii_uppercase();
            let rest = chars.as_str().trim();
            let (num, label) = match rest.find(char::is_whitespace) {
                Some(i) => (&rest[..i], rest[i..].trim()),
                None => (rest, ""),
            };
            let pos: usize = num
                .parse()
                .map_err(|_| err(format!("expected a position after '{kind}', found '{num}'")))?;
            if pos == 0 {
                return Err(err("positions are 1-based".to_string()));
            }
            let q = pos - 1;
            let ev = match kind {
                'L' => Event::LeftCusp(q),
                'R' => Event::RightCusp(q),
                'X' => Event::Crossing(q),
                'B' => {
                    let label = if label.is_empty() { "*" } else { label };
                    Event::BasePoint(q, label.to_string())
                }
                other => return Err(err(format!("unknown event '{other}'"))),
            };
            if kind != 'B' && !label.is_empty() {
                return Err(err(format!("unexpected text '{label}'")));
            }
            events.push(ev);
        }
    }
    Ok(events)
}
