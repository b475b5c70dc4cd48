use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::algebra::LaurentAZ;
use crate::diagram::{Cross, Dir, FEvent, FramedDiagram, Shape, StrandGraph, Walk};
use crate::error::{Error, Result};
use crate::exec::Exec;

/// `δ = (a − a⁻¹)/z + 1`.
pub fn delta() -> LaurentAZ {
    &(&LaurentAZ::mono(1, -1, 1) - &LaurentAZ::mono(-1, -1, 1)) + &LaurentAZ::one()
}

pub const DEFAULT_NODE_BUDGET: usize = 2_000_000;

/// Settings for a Kauffman evaluation.
#[derive(Debug, Clone, Copy)]
pub struct SkeinConfig {
    pub node_budget: usize,
    pub exec: Exec,
    /// Recursion depth down to which the two skein branches run in parallel.
    pub parallel_depth: usize,
}

impl Default for SkeinConfig {
    fn default() -> Self {
        SkeinConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            exec: Exec::default(),
            parallel_depth: 6,
        }
    }
}

/// Dubrovnik polynomial of a closed framed diagram.
pub fn kauffman(d: &FramedDiagram) -> Result<LaurentAZ> {
    kauffman_with(d, SkeinConfig::default())
}

pub fn kauffman_with(d: &FramedDiagram, cfg: SkeinConfig) -> Result<LaurentAZ> {
    if d.arity() != 0 {
        return Err(Error::Validation(
            "Kauffman polynomial needs a closed diagram".to_string(),
        ));
    }
    let engine = Engine {
        cfg,
        memo: Mutex::new(HashMap::new()),
        nodes: AtomicUsize::new(0),
    };
    engine.eval(d.events().to_vec(), true, 0)
}

struct Engine {
    cfg: SkeinConfig,
    memo: Mutex<HashMap<Vec<FEvent>, LaurentAZ>>,
    nodes: AtomicUsize,
}

/// Monomial-and-δ factor pulled out by simplification: `a^a · δ^circles`.
#[derive(Debug, Default, Clone, Copy)]
struct Factor {
    a: i32,
    circles: u32,
}

impl Factor {
    fn apply(self, v: &LaurentAZ) -> LaurentAZ {
        let mut out = v.shift(crate::algebra::AzExp { a: self.a, z: 0 });
        let d = delta();
        for _ in 0..self.circles {
            out = &out * &d;
        }
        out
    }
}

impl Engine {
    fn eval(&self, word: Vec<FEvent>, reshape: bool, depth: usize) -> Result<LaurentAZ> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed);
        if n >= self.cfg.node_budget {
            return Err(Error::ResourceLimit(format!(
                "skein recursion exceeded {} nodes",
                self.cfg.node_budget
            )));
        }
        let before = count_crossings(&word);
        let (factor, word) = simplify(word, reshape);
        // A crossing-preserving reshape could reorder the traversal, so the
        // flipped branch only reshapes once some crossing has disappeared.
        let (factor, word) = if !reshape && count_crossings(&word) < before {
            let (f2, w) = simplify(word, true);
            (
                Factor {
                    a: factor.a + f2.a,
                    circles: factor.circles + f2.circles,
                },
                w,
            )
        } else {
            (factor, word)
        };
        if word.is_empty() {
            return Ok(factor.apply(&LaurentAZ::one()));
        }
        if let Some(v) = self.memo.lock().unwrap().get(&word) {
            return Ok(factor.apply(v));
        }
        let value = match analyze(&word) {
            Analysis::Descending { components, writhe } => {
                let mut v = LaurentAZ::mono(writhe, 0, 1);
                let d = delta();
                for _ in 0..components {
                    v = &v * &d;
                }
                v
            }
            Analysis::Bad(i) => {
                let FEvent::Cross(q, k) = word[i] else {
                    unreachable!()
                };
                let mut flipped = word.clone();
                flipped[i] = FEvent::Cross(q, k.flip());
                let mut h = word.clone();
                h.remove(i);
                let mut v = word.clone();
                v.splice(i..=i, [FEvent::Cap(q), FEvent::Cup(q)]);
                let par = depth < self.cfg.parallel_depth;
                let exec = if par { self.cfg.exec } else { Exec::Sequential };
                let (f, (fh, fv)) = exec.join(
                    || self.eval(flipped, false, depth + 1),
                    || {
                        exec.join(
                            || self.eval(h, true, depth + 1),
                            || self.eval(v, true, depth + 1),
                        )
                    },
                );
                let smooth = &LaurentAZ::z() * &(&fh? - &fv?);
                match k {
                    Cross::Pos => &f? + &smooth,
                    Cross::Neg => &f? - &smooth,
                }
            }
        };
        self.memo.lock().unwrap().insert(word, value.clone());
        Ok(factor.apply(&value))
    }
}

fn count_crossings(w: &[FEvent]) -> usize {
    w.iter().filter(|e| matches!(e, FEvent::Cross(..))).count()
}

/// Footprint of an event on the slice between it and a neighbour, in
/// doubled coordinates: position p occupies [2p, 2p+2), a gap at q is the
/// point 2q.
fn footprint_after(e: FEvent) -> (i64, i64) {
    match e {
        FEvent::Cup(q) | FEvent::Cross(q, _) => (2 * q as i64, 2 * q as i64 + 4),
        FEvent::Cap(q) => (2 * q as i64, 2 * q as i64),
    }
}

fn footprint_before(e: FEvent) -> (i64, i64) {
    match e {
        FEvent::Cap(q) | FEvent::Cross(q, _) => (2 * q as i64, 2 * q as i64 + 4),
        FEvent::Cup(q) => (2 * q as i64, 2 * q as i64),
    }
}

fn delta_strands(e: FEvent) -> i64 {
    match e {
        FEvent::Cup(_) => 2,
        FEvent::Cap(_) => -2,
        FEvent::Cross(..) => 0,
    }
}

fn shifted(e: FEvent, by: i64) -> FEvent {
    let f = |q: usize| (q as i64 + by) as usize;
    match e {
        FEvent::Cup(q) => FEvent::Cup(f(q)),
        FEvent::Cap(q) => FEvent::Cap(f(q)),
        FEvent::Cross(q, k) => FEvent::Cross(f(q), k),
    }
}

/// If `e1 e2` commute, the equivalent pair `e2' e1'`.
fn commute(e1: FEvent, e2: FEvent) -> Option<(FEvent, FEvent)> {
    let (lo1, hi1) = footprint_after(e1);
    let (lo2, hi2) = footprint_before(e2);
    let points = lo1 == hi1 && lo2 == hi2;
    let above = hi2 < lo1 || (hi2 == lo1 && !points);
    let below = lo2 > hi1 || (lo2 == hi1 && !points);
    if above {
        Some((e2, shifted(e1, delta_strands(e2))))
    } else if below {
        Some((shifted(e2, -delta_strands(e1)), e1))
    } else {
        None
    }
}

/// Local reduction of an adjacent pair: (a-exponent, circles, replacement).
fn reduce_pair(e1: FEvent, e2: FEvent) -> Option<(i32, u32, Vec<FEvent>)> {
    let kink = |k: Cross| if k == Cross::Pos { -1 } else { 1 };
    match (e1, e2) {
        (FEvent::Cross(q, k), FEvent::Cap(p)) if p == q => Some((kink(k), 0, vec![FEvent::Cap(q)])),
        (FEvent::Cup(p), FEvent::Cross(q, k)) if p == q => Some((kink(k), 0, vec![FEvent::Cup(q)])),
        (FEvent::Cross(p, k1), FEvent::Cross(q, k2)) if p == q && k1 != k2 => Some((0, 0, vec![])),
        (FEvent::Cup(p), FEvent::Cap(q)) if p == q => Some((0, 1, vec![])),
        (FEvent::Cup(p), FEvent::Cap(q)) if p == q + 1 || q == p + 1 => Some((0, 0, vec![])),
        _ => None,
    }
}

/// Applies kink, R2, circle and zigzag reductions until none applies. With
/// `reshape`, events may also be commuted leftwards to meet a partner.
fn simplify(mut w: Vec<FEvent>, reshape: bool) -> (Factor, Vec<FEvent>) {
    let mut f = Factor::default();
    'outer: loop {
        for j in 1..w.len() {
            // Try the plain neighbour first, then (if allowed) slide w[j] left.
            let mut cur = w[j];
            let mut i = j;
            let mut moved: Vec<FEvent> = Vec::new();
            loop {
                let prev = w[i - 1];
                if let Some((da, dc, rep)) = reduce_pair(prev, cur) {
                    f.a += da;
                    f.circles += dc;
                    let mut out = Vec::with_capacity(w.len());
                    out.extend_from_slice(&w[..i - 1]);
                    out.extend(rep);
                    out.extend(moved.iter().copied());
                    out.extend_from_slice(&w[j + 1..]);
                    w = out;
                    continue 'outer;
                }
                if !reshape || i == 1 {
                    break;
                }
                match commute(prev, cur) {
                    Some((c2, p2)) => {
                        moved.insert(0, p2);
                        cur = c2;
                        i -= 1;
                    }
                    None => break,
                }
            }
        }
        return (f, w);
    }
}

enum Analysis {
    Descending {
        components: u32,
        writhe: i32,
    },
    /// Index of the first crossing met from below in the traversal.
    Bad(usize),
}

fn analyze(word: &[FEvent]) -> Analysis {
    let shapes: Vec<Shape> = word.iter().map(|e| e.shape()).collect();
    let g = StrandGraph::new(&shapes, 0);
    let comps = g.components();
    // Per crossing: (component, direction, descending-strand?) of first pass.
    let mut first: Vec<Option<(usize, Dir, bool)>> = vec![None; word.len()];
    let mut writhe = 0i32;
    for (ci, comp) in comps.iter().enumerate() {
        let n = comp.len();
        for idx in 0..n {
            let w = comp[idx];
            let next = comp[(idx + 1) % n];
            let Some((e, descending)) = crossing_between(word, &g, w, next) else {
                continue;
            };
            let FEvent::Cross(_, k) = word[e] else {
                unreachable!()
            };
            let over = descending == (k == Cross::Pos);
            match first[e] {
                None => {
                    if !over {
                        return Analysis::Bad(e);
                    }
                    first[e] = Some((ci, w.dir, descending));
                }
                Some((c0, d0, _)) => {
                    if c0 == ci {
                        let same = d0 == w.dir;
                        let s = if same { 1 } else { -1 };
                        writhe += if k == Cross::Pos { s } else { -s };
                    }
                }
            }
        }
    }
    Analysis::Descending {
        components: comps.len() as u32,
        writhe,
    }
}

/// The crossing event passed when stepping from `w` to `next`, and whether
/// the strand used is the one running from upper left to lower right.
fn crossing_between(
    word: &[FEvent],
    g: &StrandGraph,
    w: Walk,
    next: Walk,
) -> Option<(usize, bool)> {
    if w.dir != next.dir {
        return None;
    }
    let (t, p) = g.locate(w.seg);
    let (t2, p2) = g.locate(next.seg);
    let (e, left_pos, right_pos) = match w.dir {
        Dir::Right => (t, p, p2),
        Dir::Left => (t2, p2, p),
    };
    match word.get(e) {
        Some(FEvent::Cross(q, _))
            if left_pos.min(right_pos) == *q && left_pos.max(right_pos) == q + 1 =>
        {
            Some((e, left_pos < right_pos))
        }
        _ => None,
    }
}
