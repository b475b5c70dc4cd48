use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{LaurentZ, ZExp};
use crate::diagram::{Event, FrontDiagram, SatelliteMarkup};
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Fixed-point-free involution on the strand positions of a slice:
/// `state[p]` is the position paired with `p`.
pub type Pairing = Vec<u8>;

/// What a crossing may do to a pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum CrossingMoves {
    /// The two strands are companions; a crossing between them is impossible.
    Dead,
    /// Only the pass is allowed.
    Pass(Pairing),
    /// Pass, or a normal switch (pairing unchanged).
    PassOrSwitch(Pairing),
}

fn insert_pair(st: &[u8], q: usize) -> Pairing {
    let shift = |x: u8| if (x as usize) >= q { x + 2 } else { x };
    let mut out = Vec::with_capacity(st.len() + 2);
    out.extend(st[..q].iter().map(|&x| shift(x)));
    out.push(q as u8 + 1);
    out.push(q as u8);
    out.extend(st[q..].iter().map(|&x| shift(x)));
    out
}

fn remove_pair(st: &[u8], q: usize) -> Option<Pairing> {
    if st[q] as usize != q + 1 {
        return None;
    }
    let shift = |x: u8| if (x as usize) > q + 1 { x - 2 } else { x };
    let mut out = Vec::with_capacity(st.len() - 2);
    out.extend(st[..q].iter().map(|&x| shift(x)));
    out.extend(st[q + 2..].iter().map(|&x| shift(x)));
    Some(out)
}

pub(crate) fn crossing_moves(st: &[u8], q: usize) -> CrossingMoves {
    let (a, b) = (st[q] as usize, st[q + 1] as usize);
    if a == q + 1 {
        return CrossingMoves::Dead;
    }
    let tau = |x: usize| {
        if x == q {
            q + 1
        } else if x == q + 1 {
            q
        } else {
            x
        }
    };
    let mut passed = vec![0u8; st.len()];
    for (p, &c) in st.iter().enumerate() {
        passed[tau(p)] = tau(c as usize) as u8;
    }
    // Intervals spanned by the two disks meeting at the crossing.
    let (lo1, hi1) = (q.min(a), q.max(a));
    let (lo2, hi2) = ((q + 1).min(b), (q + 1).max(b));
    let nested = (lo1 < lo2 && hi2 < hi1) || (lo2 < lo1 && hi1 < hi2);
    let disjoint = hi1 < lo2 || hi2 < lo1;
    if nested || disjoint {
        CrossingMoves::PassOrSwitch(passed)
    } else {
        CrossingMoves::Pass(passed)
    }
}

/// A normal ruling: its switches and the pairing at every slice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalRuling {
    /// Event indices of the switched crossings.
    pub switches: Vec<usize>,
    /// Pairing at slices `0..=events`.
    pub trace: Vec<Pairing>,
    /// `#switches − #right cusps`.
    pub j: i32,
}

impl NormalRuling {
    pub fn pairing_at(&self, slice: usize) -> &Pairing {
        &self.trace[slice]
    }
}

/// All normal rulings by depth-first sweep.
pub fn enumerate_rulings(front: &FrontDiagram) -> Vec<NormalRuling> {
    let mut out = Vec::new();
    let mut trace = vec![Vec::new()];
    let mut switches = Vec::new();
    dfs(front, 0, &mut trace, &mut switches, &mut out);
    out
}

fn dfs(
    front: &FrontDiagram,
    e: usize,
    trace: &mut Vec<Pairing>,
    switches: &mut Vec<usize>,
    out: &mut Vec<NormalRuling>,
) {
    let Some(ev) = front.events().get(e) else {
        out.push(NormalRuling {
            switches: switches.clone(),
            trace: trace.clone(),
            j: switches.len() as i32 - front.right_cusps() as i32,
        });
        return;
    };
    let st = trace.last().unwrap().clone();
    let mut go =
        |next: Pairing, switched: bool, trace: &mut Vec<Pairing>, switches: &mut Vec<usize>| {
            trace.push(next);
            if switched {
                switches.push(e);
            }
            dfs(front, e + 1, trace, switches, out);
            if switched {
                switches.pop();
            }
            trace.pop();
        };
    match ev {
        Event::LeftCusp(q) => go(insert_pair(&st, *q), false, trace, switches),
        Event::RightCusp(q) => {
            if let Some(next) = remove_pair(&st, *q) {
                go(next, false, trace, switches);
            }
        }
        Event::Crossing(q) => match crossing_moves(&st, *q) {
            CrossingMoves::Dead => {}
            CrossingMoves::Pass(p) => go(p, false, trace, switches),
            CrossingMoves::PassOrSwitch(p) => {
                go(p, false, trace, switches);
                go(st, true, trace, switches);
            }
        },
        Event::BasePoint(..) => go(st, false, trace, switches),
    }
}

/// Keeps only pairings at a slice that never pair two strands of one cluster.
#[derive(Debug, Clone, Copy)]
pub struct ClusterFilter<'a> {
    pub slice: usize,
    pub clusters: &'a [usize],
}

impl ClusterFilter<'_> {
    pub fn allows(&self, st: &[u8]) -> bool {
        st.iter()
            .enumerate()
            .all(|(p, &c)| self.clusters[p] != self.clusters[c as usize])
    }
}

/// Counts of rulings by number of switches, as a dense vector.
type Counts = Vec<i128>;

fn add_into(acc: &mut Counts, x: &Counts, shift: usize) {
    if acc.len() < x.len() + shift {
        acc.resize(x.len() + shift, 0);
    }
    for (i, v) in x.iter().enumerate() {
        acc[i + shift] = acc[i + shift]
            .checked_add(*v)
            .expect("ruling count overflow");
    }
}

/// Ruling polynomial by a forward sweep that merges equal pairings.
pub fn ruling_polynomial(front: &FrontDiagram) -> LaurentZ {
    ruling_polynomial_with(front, None, Exec::default())
}

pub fn ruling_polynomial_with(
    front: &FrontDiagram,
    filter: Option<ClusterFilter<'_>>,
    exec: Exec,
) -> LaurentZ {
    let mut states: HashMap<Pairing, Counts> = HashMap::new();
    states.insert(Vec::new(), vec![1]);
    for (e, ev) in front.events().iter().enumerate() {
        if let Some(f) = filter {
            if f.slice == e {
                states.retain(|st, _| f.allows(st));
            }
        }
        if matches!(ev, Event::BasePoint(..)) {
            continue;
        }
        let items: Vec<(Pairing, Counts)> = states.drain().collect();
        let step = |(st, w): &(Pairing, Counts)| -> Vec<(Pairing, Counts, usize)> {
            match ev {
                Event::LeftCusp(q) => vec![(insert_pair(st, *q), w.clone(), 0)],
                Event::RightCusp(q) => remove_pair(st, *q)
                    .map(|n| vec![(n, w.clone(), 0)])
                    .unwrap_or_default(),
                Event::Crossing(q) => match crossing_moves(st, *q) {
                    CrossingMoves::Dead => vec![],
                    CrossingMoves::Pass(p) => vec![(p, w.clone(), 0)],
                    CrossingMoves::PassOrSwitch(p) => {
                        vec![(p, w.clone(), 0), (st.clone(), w.clone(), 1)]
                    }
                },
                Event::BasePoint(..) => unreachable!(),
            }
        };
        let produced = if items.len() >= 64 {
            exec.map(&items, step)
        } else {
            items.iter().map(step).collect()
        };
        for batch in produced {
            for (st, w, shift) in batch {
                add_into(states.entry(st).or_default(), &w, shift);
            }
        }
    }
    if let Some(f) = filter {
        if f.slice == front.events().len() {
            states.retain(|st, _| f.allows(st));
        }
    }
    let mut out = LaurentZ::zero();
    if let Some(w) = states.get(&Vec::new()) {
        let rc = front.right_cusps() as i32;
        for (k, c) in w.iter().enumerate() {
            out.add_term(ZExp(k as i32 - rc), *c);
        }
    }
    out
}

/// Ruling polynomial as a plain sum over [`enumerate_rulings`].
pub fn ruling_polynomial_by_enumeration(front: &FrontDiagram) -> LaurentZ {
    let mut out = LaurentZ::zero();
    for r in enumerate_rulings(front) {
        out.add_term(ZExp(r.j), 1);
    }
    out
}

/// Reducedness at the slice just left of the pattern.
pub fn is_reduced(ruling: &NormalRuling, markup: Option<&SatelliteMarkup>) -> Result<bool> {
    let m = markup.ok_or(Error::MissingMarkup)?;
    is_reduced_at(ruling, m, m.insertion_slice)
}

/// Reducedness tested at any clean slice of the satellite.
pub fn is_reduced_at(
    ruling: &NormalRuling,
    markup: &SatelliteMarkup,
    slice: usize,
) -> Result<bool> {
    let clean = markup.clean_slice(slice).ok_or(Error::MissingMarkup)?;
    Ok(ClusterFilter {
        slice,
        clusters: &clean.clusters,
    }
    .allows(ruling.pairing_at(slice)))
}
