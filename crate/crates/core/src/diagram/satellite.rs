use serde::Serialize;

use super::front::{Event, FrontDiagram};
use super::graph::Dir;
use super::tangle::LegendrianTangle;
use crate::error::{Error, Result};

/// A slice of the satellite where every strand belongs to a cluster of `n`
/// parallel copies of one companion strand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CleanSlice {
    pub slice: usize,
    /// Cluster (companion strand position) of each satellite position.
    pub clusters: Vec<usize>,
}

/// Bookkeeping attached to a satellite front.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SatelliteMarkup {
    pub n: usize,
    /// Satellite slice just left of the spliced pattern.
    pub insertion_slice: usize,
    /// First satellite position of the cluster receiving the pattern.
    pub cluster_start: usize,
    /// Slices outside the pattern region and the cusp/crossing blocks.
    pub clean_slices: Vec<CleanSlice>,
}

impl SatelliteMarkup {
    pub fn clean_slice(&self, slice: usize) -> Option<&CleanSlice> {
        self.clean_slices.iter().find(|c| c.slice == slice)
    }

    pub fn insertion(&self) -> &CleanSlice {
        self.clean_slice(self.insertion_slice)
            .expect("insertion slice is recorded as clean")
    }
}

#[derive(Debug, Clone)]
pub struct Satellite {
    pub front: FrontDiagram,
    pub markup: SatelliteMarkup,
}

/// Emits the crossings of a bubble sort taking `cur` to the order given by
/// `rank`, always swapping the topmost out-of-order pair.
fn bubble<T: Copy>(cur: &mut [T], rank: impl Fn(T) -> usize, offset: usize, out: &mut Vec<Event>) {
    while let Some(i) = (0..cur.len().saturating_sub(1)).find(|&i| rank(cur[i]) > rank(cur[i + 1]))
    {
        cur.swap(i, i + 1);
        out.push(Event::Crossing(offset + i));
    }
}

/// The first base point of `k`, checked to sit on a strand oriented left to
/// right.
pub fn insertion_point(k: &FrontDiagram) -> Result<usize> {
    let e = *k
        .base_points()
        .first()
        .ok_or_else(|| Error::NoInsertionPoint("front has no base point".to_string()))?;
    match k.base_point_dir(e) {
        Some(Dir::Right) => Ok(e),
        _ => Err(Error::NoInsertionPoint(
            "base point strand is oriented right to left".to_string(),
        )),
    }
}

/// The n-copy of a plat front with `pattern` spliced in at its base point.
///
/// Copies are downward translates, so a left cusp becomes `n` side-by-side
/// cusps followed by an unshuffle, a right cusp becomes the mirror shuffle
/// followed by `n` cusps, and a crossing becomes a full block transposition.
/// Other base points of `k` are dropped; those of the pattern are kept.
pub fn satellite(k: &FrontDiagram, pattern: &LegendrianTangle) -> Result<Satellite> {
    satellite_with_base_points(k, pattern, &[])
}

/// Like [`satellite`], additionally placing labelled base points on the
/// pattern cluster just before the pattern, top copy first.
pub fn satellite_with_base_points(
    k: &FrontDiagram,
    pattern: &LegendrianTangle,
    cluster_base_points: &[String],
) -> Result<Satellite> {
    if !k.is_plat() {
        return Err(Error::NotPlat);
    }
    let ins = insertion_point(k)?;
    let n = pattern.arity();
    if n == 0 {
        return Err(Error::BadIndices("pattern of arity 0".to_string()));
    }
    let mut out: Vec<Event> = Vec::new();
    let mut clean = vec![CleanSlice {
        slice: 0,
        clusters: Vec::new(),
    }];
    let mut insertion_slice = 0;
    let mut cluster_start = 0;
    let mut kcount = 0usize;
    for (e, ev) in k.events().iter().enumerate() {
        match ev {
            Event::LeftCusp(p) => {
                let q = n * p;
                for i in 0..n {
                    out.push(Event::LeftCusp(q + 2 * i));
                }
                // Labels: copy i upper = 2i, lower = 2i + 1.
                let mut cur: Vec<usize> = (0..2 * n).collect();
                bubble(
                    &mut cur,
                    |l| if l % 2 == 0 { l / 2 } else { n + l / 2 },
                    q,
                    &mut out,
                );
                kcount += 2;
            }
            Event::RightCusp(p) => {
                let q = n * p;
                let mut cur: Vec<usize> = (0..2 * n).collect();
                bubble(
                    &mut cur,
                    |l| if l < n { 2 * l } else { 2 * (l - n) + 1 },
                    q,
                    &mut out,
                );
                for _ in 0..n {
                    out.push(Event::RightCusp(q));
                }
                kcount -= 2;
            }
            Event::Crossing(p) => {
                let q = n * p;
                let mut cur: Vec<usize> = (0..2 * n).collect();
                bubble(&mut cur, |l| if l < n { l + n } else { l - n }, q, &mut out);
            }
            Event::BasePoint(p, _) => {
                if e == ins {
                    let q = n * p;
                    for label in cluster_base_points {
                        out.push(Event::BasePoint(q, label.clone()));
                    }
                    insertion_slice = out.len();
                    cluster_start = q;
                    clean.push(CleanSlice {
                        slice: out.len(),
                        clusters: (0..kcount * n).map(|x| x / n).collect(),
                    });
                    out.extend(pattern.events().iter().map(|t| t.to_event().with_offset(q)));
                }
            }
        }
        clean.push(CleanSlice {
            slice: out.len(),
            clusters: (0..kcount * n).map(|x| x / n).collect(),
        });
    }
    clean.dedup_by(|a, b| a.slice == b.slice);
    let front = FrontDiagram::new(out)?;
    Ok(Satellite {
        front,
        markup: SatelliteMarkup {
            n,
            insertion_slice,
            cluster_start,
            clean_slices: clean,
        },
    })
}
