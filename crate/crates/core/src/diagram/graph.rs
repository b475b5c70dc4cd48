use serde::Serialize;

/// How an event acts on the strands of a slice, independent of what kind of
/// diagram it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// Two new strands born at `q, q+1` (left cusp, cup).
    Open(usize),
    /// Strands `q, q+1` joined and removed (right cusp, cap).
    Close(usize),
    /// Strands `q, q+1` exchange positions (crossing).
    Swap(usize),
    /// Nothing happens to the strands (base point).
    Pass,
}

/// Horizontal direction of travel along a strand segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Dir {
    Right,
    Left,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Right => Dir::Left,
            Dir::Left => Dir::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Link {
    /// Continues into the given segment on the other side of the event.
    Through(usize),
    /// Turns back along the given segment on the same side (cusp).
    Turn(usize),
    /// Reaches the boundary of a tangle.
    Boundary,
}

/// Segments are the pieces of strand at a slice between two events; slice
/// `t` lies between events `t-1` and `t`.
#[derive(Debug, Clone)]
pub struct StrandGraph {
    counts: Vec<usize>,
    offsets: Vec<usize>,
    left: Vec<Link>,
    right: Vec<Link>,
}

/// A walker on the strand graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Walk {
    pub seg: usize,
    pub dir: Dir,
}

impl StrandGraph {
    pub fn new(shapes: &[Shape], start: usize) -> Self {
        let mut counts = vec![start];
        for s in shapes {
            let c = *counts.last().unwrap();
            counts.push(match s {
                Shape::Open(_) => c + 2,
                Shape::Close(_) => c - 2,
                _ => c,
            });
        }
        let mut offsets = Vec::with_capacity(counts.len() + 1);
        let mut acc = 0;
        for c in &counts {
            offsets.push(acc);
            acc += c;
        }
        offsets.push(acc);
        let mut left = vec![Link::Boundary; acc];
        let mut right = vec![Link::Boundary; acc];
        for (e, s) in shapes.iter().enumerate() {
            let id = |t: usize, p: usize| offsets[t] + p;
            let before = counts[e];
            let join = |p: usize, p2: usize, right: &mut Vec<Link>, left: &mut Vec<Link>| {
                right[id(e, p)] = Link::Through(id(e + 1, p2));
                left[id(e + 1, p2)] = Link::Through(id(e, p));
            };
            match *s {
                Shape::Open(q) => {
                    for p in 0..before {
                        join(p, if p < q { p } else { p + 2 }, &mut right, &mut left);
                    }
                    left[id(e + 1, q)] = Link::Turn(id(e + 1, q + 1));
                    left[id(e + 1, q + 1)] = Link::Turn(id(e + 1, q));
                }
                Shape::Close(q) => {
                    for p in 0..before {
                        if p < q {
                            join(p, p, &mut right, &mut left);
                        } else if p > q + 1 {
                            join(p, p - 2, &mut right, &mut left);
                        }
                    }
                    right[id(e, q)] = Link::Turn(id(e, q + 1));
                    right[id(e, q + 1)] = Link::Turn(id(e, q));
                }
                Shape::Swap(q) => {
                    for p in 0..before {
                        let p2 = if p == q {
                            q + 1
                        } else if p == q + 1 {
                            q
                        } else {
                            p
                        };
                        join(p, p2, &mut right, &mut left);
                    }
                }
                Shape::Pass => {
                    for p in 0..before {
                        join(p, p, &mut right, &mut left);
                    }
                }
            }
        }
        StrandGraph {
            counts,
            offsets,
            left,
            right,
        }
    }

    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn seg(&self, slice: usize, pos: usize) -> usize {
        debug_assert!(pos < self.counts[slice]);
        self.offsets[slice] + pos
    }

    /// `(slice, position)` of a segment.
    pub fn locate(&self, seg: usize) -> (usize, usize) {
        let t = self.offsets.partition_point(|&o| o <= seg) - 1;
        (t, seg - self.offsets[t])
    }

    /// One step: moves to the next segment, or `None` at a tangle boundary.
    pub fn step(&self, w: Walk) -> Option<Walk> {
        let link = match w.dir {
            Dir::Right => self.right[w.seg],
            Dir::Left => self.left[w.seg],
        };
        match link {
            Link::Through(s) => Some(Walk { seg: s, dir: w.dir }),
            Link::Turn(s) => Some(Walk {
                seg: s,
                dir: w.dir.flip(),
            }),
            Link::Boundary => None,
        }
    }

    pub fn at_boundary(&self, w: Walk) -> bool {
        self.step(w).is_none()
    }

    /// Components as walks: each component is listed once from its first
    /// segment in (slice, position) order. Closed components start heading
    /// right; arcs start at their first boundary end heading inward.
    pub fn components(&self) -> Vec<Vec<Walk>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut start = Walk {
                seg: s,
                dir: Dir::Right,
            };
            // Find an arc end if this component is not closed.
            let mut probe = Walk {
                seg: s,
                dir: Dir::Left,
            };
            let mut closed = true;
            let mut guard = 0;
            loop {
                match self.step(probe) {
                    None => {
                        closed = false;
                        break;
                    }
                    Some(n) => {
                        probe = n;
                        if n.seg == s {
                            break;
                        }
                    }
                }
                guard += 1;
                assert!(
                    guard <= 2 * self.len() + 2,
                    "strand graph walk did not terminate"
                );
            }
            if !closed {
                start = Walk {
                    seg: probe.seg,
                    dir: probe.dir.flip(),
                };
            }
            let mut comp = vec![start];
            seen[start.seg] = true;
            let mut w = start;
            while let Some(n) = self.step(w) {
                if n.seg == start.seg {
                    break;
                }
                seen[n.seg] = true;
                comp.push(n);
                w = n;
            }
            out.push(comp);
        }
        out
    }

    /// Direction of travel on every segment when each component is walked as
    /// in [`components`], except that components containing a hinted segment
    /// are oriented to agree with the hint.
    pub fn orientation(&self, hints: &[(usize, Dir)]) -> Vec<Dir> {
        let mut dirs = vec![Dir::Right; self.len()];
        for comp in self.components() {
            let flip = hints
                .iter()
                .find_map(|(seg, d)| comp.iter().find(|w| w.seg == *seg).map(|w| w.dir != *d));
            for w in &comp {
                dirs[w.seg] = if flip == Some(true) {
                    w.dir.flip()
                } else {
                    w.dir
                };
            }
        }
        dirs
    }
}
