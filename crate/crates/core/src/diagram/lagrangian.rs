use serde::Serialize;

use super::front::{Event, FrontDiagram};
use super::graph::{Dir, StrandGraph, Walk};

/// Reeb chord types of the Ng resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ChordKind {
    /// A front crossing.
    A,
    /// The loop added at a right cusp.
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ReebChord {
    pub kind: ChordKind,
    /// Index of the front event the chord comes from.
    pub event: usize,
}

/// Counts of the 4-valent planar map traced from the front picture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlanarMap {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    /// Connected components of the map.
    pub components: usize,
}

impl PlanarMap {
    /// V − E + F = 2 per connected component of a planar map.
    pub fn euler_consistent(&self) -> bool {
        self.vertices as i64 - self.edges as i64 + self.faces as i64 == 2 * self.components as i64
    }
}

/// The resolved (xy) diagram of a closed front.
#[derive(Debug, Clone, Serialize)]
pub struct LagrangianDiagram {
    pub front: FrontDiagram,
    pub chords: Vec<ReebChord>,
    /// Orientation of every front segment.
    #[serde(skip)]
    pub orientation: Vec<Dir>,
    pub map: PlanarMap,
}

impl LagrangianDiagram {
    pub fn rb(&self) -> usize {
        self.chords.len()
    }

    pub fn graph(&self) -> StrandGraph {
        self.front.graph()
    }

    pub fn chord_at(&self, event: usize) -> Option<usize> {
        self.chords.iter().position(|c| c.event == event)
    }
}

/// Resolves a front: one chord per crossing (lesser slope over) and one per
/// right cusp loop. Chords are listed in event order.
pub fn ng_resolution(front: &FrontDiagram) -> LagrangianDiagram {
    let chords = front
        .events()
        .iter()
        .enumerate()
        .filter_map(|(e, ev)| match ev {
            Event::Crossing(_) => Some(ReebChord {
                kind: ChordKind::A,
                event: e,
            }),
            Event::RightCusp(_) => Some(ReebChord {
                kind: ChordKind::C,
                event: e,
            }),
            _ => None,
        })
        .collect::<Vec<_>>();
    let graph = front.graph();
    let orientation = graph.orientation(&[]);
    let map = planar_map(front, &graph, &chords);
    LagrangianDiagram {
        front: front.clone(),
        chords,
        orientation,
        map,
    }
}

/// Half-edge slots in counterclockwise order: 0 = NE, 1 = NW, 2 = SW, 3 = SE.
fn planar_map(front: &FrontDiagram, g: &StrandGraph, chords: &[ReebChord]) -> PlanarMap {
    let v = chords.len();
    let vertex_of_event = |e: usize| chords.iter().position(|c| c.event == e);
    let mut twin = vec![usize::MAX; 4 * v];
    // Slot reached when a walk arrives at a vertex event.
    let arrive = |w: Walk| -> Option<usize> {
        let (t, p) = g.locate(w.seg);
        match w.dir {
            Dir::Right => {
                let ev = front.events().get(t)?;
                let vx = vertex_of_event(t)?;
                let q = ev.pos();
                (p == q || p == q + 1).then(|| 4 * vx + if p == q { 1 } else { 2 })
            }
            Dir::Left => {
                let e = t.checked_sub(1)?;
                let ev = &front.events()[e];
                if !matches!(ev, Event::Crossing(_)) {
                    return None;
                }
                let vx = vertex_of_event(e)?;
                let q = ev.pos();
                (p == q || p == q + 1).then(|| 4 * vx + if p == q { 0 } else { 3 })
            }
        }
    };
    for (vx, c) in chords.iter().enumerate() {
        let e = c.event;
        let q = front.events()[e].pos();
        let mut starts = vec![(
            4 * vx + 1,
            Walk {
                seg: g.seg(e, q),
                dir: Dir::Left,
            },
        )];
        starts.push((
            4 * vx + 2,
            Walk {
                seg: g.seg(e, q + 1),
                dir: Dir::Left,
            },
        ));
        match c.kind {
            ChordKind::A => {
                starts.push((
                    4 * vx,
                    Walk {
                        seg: g.seg(e + 1, q),
                        dir: Dir::Right,
                    },
                ));
                starts.push((
                    4 * vx + 3,
                    Walk {
                        seg: g.seg(e + 1, q + 1),
                        dir: Dir::Right,
                    },
                ));
            }
            ChordKind::C => {
                twin[4 * vx] = 4 * vx + 3;
                twin[4 * vx + 3] = 4 * vx;
            }
        }
        for (slot, mut w) in starts {
            loop {
                if let Some(h) = arrive(w) {
                    twin[slot] = h;
                    break;
                }
                w = g.step(w).expect("closed front has no boundary");
            }
        }
    }
    debug_assert!(twin.iter().all(|&t| t != usize::MAX));
    // Faces are orbits of h ↦ rot(twin(h)).
    let mut seen = vec![false; 4 * v];
    let mut faces = 0;
    for h in 0..4 * v {
        if seen[h] {
            continue;
        }
        faces += 1;
        let mut x = h;
        while !seen[x] {
            seen[x] = true;
            let t = twin[x];
            x = 4 * (t / 4) + (t % 4 + 1) % 4;
        }
    }
    // Connected components by union-find over edges.
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for h in 0..4 * v {
        let (a, b) = (find(&mut parent, h / 4), find(&mut parent, twin[h] / 4));
        parent[a] = b;
    }
    let components = (0..v).filter(|&x| find(&mut parent, x) == x).count();
    PlanarMap {
        vertices: v,
        edges: 2 * v,
        faces,
        components,
    }
}
