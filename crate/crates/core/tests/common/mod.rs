//! Independent reference implementations used as test oracles.
#![allow(dead_code)]

use legendrian_core::algebra::{LaurentAZ, LaurentZ};
use legendrian_core::dga::{Dga, Letter};
use legendrian_core::diagram::{Cross, Event, FEvent, FrontDiagram};

/// Endpoints of a slice are addressed as (slice, position); slice t lies
/// before event t.
type End = (usize, usize);

fn counts(w: &[FEvent]) -> Vec<usize> {
    let mut c = vec![0usize];
    for e in w {
        let x = *c.last().unwrap();
        c.push(match e {
            FEvent::Cup(_) => x + 2,
            FEvent::Cap(_) => x - 2,
            FEvent::Cross(..) => x,
        });
    }
    c
}

/// Where a strand at (t, p), moving right through event t, arrives; or the
/// partner it turns back to.
fn go_right(w: &[FEvent], t: usize, p: usize) -> (End, bool) {
    match w[t] {
        FEvent::Cup(q) => ((t + 1, if p < q { p } else { p + 2 }), true),
        FEvent::Cap(q) => {
            if p == q {
                ((t, q + 1), false)
            } else if p == q + 1 {
                ((t, q), false)
            } else {
                ((t + 1, if p < q { p } else { p - 2 }), true)
            }
        }
        FEvent::Cross(q, _) => (
            (
                t + 1,
                if p == q {
                    q + 1
                } else if p == q + 1 {
                    q
                } else {
                    p
                },
            ),
            true,
        ),
    }
}

fn go_left(w: &[FEvent], t: usize, p: usize) -> (End, bool) {
    // t is the slice; the event on the left is t-1.
    let e = t - 1;
    match w[e] {
        FEvent::Cap(q) => ((e, if p < q { p } else { p + 2 }), true),
        FEvent::Cup(q) => {
            if p == q {
                ((t, q + 1), false)
            } else if p == q + 1 {
                ((t, q), false)
            } else {
                ((e, if p < q { p } else { p - 2 }), true)
            }
        }
        FEvent::Cross(q, _) => (
            (
                e,
                if p == q {
                    q + 1
                } else if p == q + 1 {
                    q
                } else {
                    p
                },
            ),
            true,
        ),
    }
}

/// Traverses every component, starting each new one at the highest-indexed
/// unvisited slice going left. Calls `visit(event, came_from_pos, went_to_pos,
/// component, moving_right)` at each crossing passage.
fn traverse(
    w: &[FEvent],
    mut visit: impl FnMut(usize, usize, usize, usize, bool) -> bool,
) -> usize {
    let c = counts(w);
    let mut seen: Vec<Vec<bool>> = c.iter().map(|&k| vec![false; k]).collect();
    let mut comp = 0;
    for t0 in (0..c.len()).rev() {
        for p0 in 0..c[t0] {
            if seen[t0][p0] {
                continue;
            }
            let (mut t, mut p, mut right) = (t0, p0, false);
            loop {
                seen[t][p] = true;
                let (next, through) = if right {
                    go_right(w, t, p)
                } else {
                    go_left(w, t, p)
                };
                if through {
                    let e = if right { t } else { t - 1 };
                    if matches!(w[e], FEvent::Cross(q, _) if p == q || p == q + 1)
                        && !visit(e, p, next.1, comp, right)
                    {
                        return usize::MAX;
                    }
                    t = next.0;
                    p = next.1;
                } else {
                    p = next.1;
                    right = !right;
                }
                if t == t0 && p == p0 && !right {
                    break;
                }
            }
            comp += 1;
        }
    }
    comp
}

/// Kauffman polynomial by plain skein recursion: no simplification, no memo.
pub fn naive_kauffman(w: &[FEvent]) -> LaurentAZ {
    let delta = &(&LaurentAZ::mono(1, -1, 1) - &LaurentAZ::mono(-1, -1, 1)) + &LaurentAZ::one();
    let mut first: Vec<Option<(usize, bool)>> = vec![None; w.len()];
    let mut bad = None;
    let mut writhe = 0i32;
    let comps = traverse(w, |e, from, to, comp, right| {
        let FEvent::Cross(_, k) = w[e] else {
            unreachable!()
        };
        // Left-to-right coordinates of the strand used.
        let (l, r) = if right { (from, to) } else { (to, from) };
        let descending = l < r;
        let over = descending == (k == Cross::Pos);
        match first[e] {
            None => {
                if !over {
                    bad = Some(e);
                    return false;
                }
                first[e] = Some((comp, right));
            }
            Some((c0, r0)) => {
                if c0 == comp {
                    let s = if r0 == right { 1 } else { -1 };
                    writhe += if k == Cross::Pos { s } else { -s };
                }
            }
        }
        true
    });
    if let Some(e) = bad {
        let FEvent::Cross(q, k) = w[e] else {
            unreachable!()
        };
        let mut f = w.to_vec();
        f[e] = FEvent::Cross(
            q,
            if k == Cross::Pos {
                Cross::Neg
            } else {
                Cross::Pos
            },
        );
        let mut h = w.to_vec();
        h.remove(e);
        let mut v = w.to_vec();
        v.splice(e..=e, [FEvent::Cap(q), FEvent::Cup(q)]);
        let smooth = &LaurentAZ::z() * &(&naive_kauffman(&h) - &naive_kauffman(&v));
        let fl = naive_kauffman(&f);
        return if k == Cross::Pos {
            &fl + &smooth
        } else {
            &fl - &smooth
        };
    }
    let mut v = LaurentAZ::mono(writhe, 0, 1);
    for _ in 0..comps {
        v = &v * &delta;
    }
    v
}

/// Ruling polynomial by brute force over switch subsets: a subset of
/// crossings is a normal ruling when resolving it yields disks bounded by
/// pairs of paths that satisfy the normality condition at every switch.
pub fn brute_ruling_polynomial(front: &FrontDiagram) -> LaurentZ {
    let events: Vec<Event> = front
        .events()
        .iter()
        .filter(|e| !matches!(e, Event::BasePoint(..)))
        .cloned()
        .collect();
    let xs: Vec<usize> = (0..events.len())
        .filter(|&i| matches!(events[i], Event::Crossing(_)))
        .collect();
    let right_cusps = events
        .iter()
        .filter(|e| matches!(e, Event::RightCusp(_)))
        .count() as i32;
    let mut total = LaurentZ::zero();
    for mask in 0u64..(1u64 << xs.len()) {
        let switched: Vec<bool> = {
            let mut v = vec![false; events.len()];
            for (b, &i) in xs.iter().enumerate() {
                v[i] = mask >> b & 1 == 1;
            }
            v
        };
        if ruling_ok(&events, &switched) {
            let j = mask.count_ones() as i32 - right_cusps;
            total = &total + &LaurentZ::z_pow(j);
        }
    }
    total
}

/// Tracks, for the resolved front, which strand pairs bound each disk.
/// Disks are born at left cusps; at a switch the two strands stay on their
/// levels; elsewhere strands follow the crossing.
fn ruling_ok(events: &[Event], switched: &[bool]) -> bool {
    // disk id per position
    let mut disk: Vec<usize> = Vec::new();
    let mut next_id = 0usize;
    for (i, e) in events.iter().enumerate() {
        match *e {
            Event::LeftCusp(q) => {
                disk.splice(q..q, [next_id, next_id]);
                next_id += 1;
            }
            Event::RightCusp(q) => {
                if disk[q] != disk[q + 1] {
                    return false;
                }
                disk.drain(q..q + 2);
            }
            Event::Crossing(q) => {
                if disk[q] == disk[q + 1] {
                    return false;
                }
                if switched[i] {
                    // Normality: positions of the companions of q and q+1.
                    let pa = (0..disk.len())
                        .find(|&p| p != q && disk[p] == disk[q])
                        .unwrap();
                    let pb = (0..disk.len())
                        .find(|&p| p != q + 1 && disk[p] == disk[q + 1])
                        .unwrap();
                    let ok =
                        (pa < q && pb > q + 1) || (pa < q && pb < pa) || (pb > q + 1 && pa > pb);
                    if !ok {
                        return false;
                    }
                } else {
                    disk.swap(q, q + 1);
                }
            }
            Event::BasePoint(..) => {}
        }
    }
    true
}

/// Multiplication in GF(q), q = 2^k ≤ 16, by carry-less product reduced
/// modulo a fixed irreducible polynomial.
pub fn gf_mul(q: u64, x: u8, y: u8) -> u8 {
    let (k, modulus): (u32, u16) = match q {
        2 => (1, 0b11),
        4 => (2, 0b111),
        8 => (3, 0b1011),
        16 => (4, 0b10011),
        _ => panic!("unsupported q"),
    };
    let mut acc: u16 = 0;
    for b in 0..k {
        if y >> b & 1 == 1 {
            acc ^= (x as u16) << b;
        }
    }
    for b in (k..2 * k).rev() {
        if acc >> b & 1 == 1 {
            acc ^= modulus << (b - k);
        }
    }
    acc as u8
}

pub type M = Vec<Vec<u8>>;

pub fn m_mul(q: u64, x: &M, y: &M) -> M {
    let n = x.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(0, |a, k| a ^ gf_mul(q, x[i][k], y[k][j])))
                .collect()
        })
        .collect()
}

pub fn m_id(n: usize) -> M {
    (0..n)
        .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
        .collect()
}

/// Every n×n matrix over GF(q).
pub fn all_m(n: usize, q: u64) -> Vec<M> {
    let cells = n * n;
    let total = (q as usize).pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let mut m = vec![vec![0u8; n]; n];
            for c in 0..cells {
                m[c / n][c % n] = (code % q as usize) as u8;
                code /= q as usize;
            }
            m
        })
        .collect()
}

/// Invertible matrices paired with their inverses, found by search.
pub fn gl_pairs(n: usize, q: u64) -> Vec<(M, M)> {
    let all = all_m(n, q);
    let id = m_id(n);
    all.iter()
        .filter_map(|a| {
            all.iter()
                .find(|b| m_mul(q, a, b) == id)
                .map(|b| (a.clone(), b.clone()))
        })
        .collect()
}

/// Number of representations by exhaustive enumeration, with an optional
/// predicate on the ordered product of the base point matrices.
pub fn brute_count_representations(
    dga: &Dga,
    n: usize,
    q: u64,
    cell: Option<&dyn Fn(&M) -> bool>,
) -> u64 {
    let mats = all_m(n, q);
    let gl = gl_pairs(n, q);
    let rb = dga.rb();
    let ell = dga.ell();
    let mut count = 0;
    let mut idx = vec![0usize; rb + ell];
    let radix: Vec<usize> = (0..rb)
        .map(|_| mats.len())
        .chain((0..ell).map(|_| gl.len()))
        .collect();
    loop {
        let value = |l: &Letter| match *l {
            Letter::Chord(j) => mats[idx[j]].clone(),
            Letter::T { index, inverse } => {
                let (a, b) = &gl[idx[rb + index]];
                if inverse {
                    b.clone()
                } else {
                    a.clone()
                }
            }
        };
        let ok = (0..rb).all(|i| {
            let mut sum = vec![vec![0u8; n]; n];
            for w in &dga.differential[i] {
                let p = w.iter().fold(m_id(n), |acc, l| m_mul(q, &acc, &value(l)));
                for r in 0..n {
                    for c in 0..n {
                        sum[r][c] ^= p[r][c];
                    }
                }
            }
            sum.iter().all(|row| row.iter().all(|&x| x == 0))
        });
        if ok {
            let prod = (0..ell).fold(m_id(n), |acc, k| m_mul(q, &acc, &gl[idx[rb + k]].0));
            if cell.map(|f| f(&prod)).unwrap_or(true) {
                count += 1;
            }
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return count;
            }
            idx[pos] += 1;
            if idx[pos] < radix[pos] {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Upper triangular invertible matrices.
pub fn borel(n: usize, q: u64) -> Vec<M> {
    gl_pairs(n, q)
        .into_iter()
        .map(|(a, _)| a)
        .filter(|a| (0..n).all(|i| (0..i).all(|j| a[i][j] == 0)))
        .collect()
}

/// The double coset B·P_w·B, with P_w having ones at (w[j], j).
pub fn double_coset(n: usize, q: u64, w: &[usize]) -> Vec<M> {
    let b = borel(n, q);
    let mut p = vec![vec![0u8; n]; n];
    for (j, &i) in w.iter().enumerate() {
        p[i][j] = 1;
    }
    let mut out: Vec<M> = Vec::new();
    for x in &b {
        let xp = m_mul(q, x, &p);
        for y in &b {
            out.push(m_mul(q, &xp, y));
        }
    }
    out.sort();
    out.dedup();
    out
}
