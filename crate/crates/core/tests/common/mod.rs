//! Independent reference implementation used as a test oracle.
//!
//! Works on plain strings and fixed-length symbol vectors: sequences are
//! expanded to `LEN` symbols, compared by the parity rule directly, and
//! periodic orbits are brute-forced as necklaces. Nothing here calls the
//! library's sequence, order or enumeration code.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeSet;

pub const LEN: usize = 200;

/// Expands `pre(per)` text to `LEN` symbols.
pub fn expand(text: &str) -> Vec<u8> {
    let open = text.find('(').expect("missing '('");
    let close = text.rfind(')').expect("missing ')'");
    let bits = |s: &str| s.bytes().map(|b| b - b'0').collect::<Vec<u8>>();
    let pre = bits(&text[..open]);
    let per = bits(&text[open + 1..close]);
    assert!(!per.is_empty());
    let mut out = pre;
    while out.len() < LEN {
        out.extend_from_slice(&per);
    }
    out.truncate(LEN);
    out
}

pub fn repeat(word: &[u8]) -> Vec<u8> {
    word.iter().copied().cycle().take(LEN).collect()
}

/// Order of two truncated sequences: at the first difference the larger
/// symbol wins after an even number of ones, the smaller one after an odd
/// number.
pub fn compare(a: &[u8], b: &[u8]) -> Ordering {
    let mut ones = 0;
    for (x, y) in a.iter().zip(b) {
        if x != y {
            let natural = x.cmp(y);
            return if ones % 2 == 0 {
                natural
            } else {
                natural.reverse()
            };
        }
        ones += usize::from(*x);
    }
    Ordering::Equal
}

pub fn less(a: &[u8], b: &[u8]) -> bool {
    compare(a, b) == Ordering::Less
}

#[derive(Debug, Clone)]
pub struct Rect {
    pub x_min: Vec<u8>,
    pub x_max: Vec<u8>,
    pub y_min: Vec<u8>,
    pub y_max: Vec<u8>,
}

/// Reads rectangles from the region JSON (a list of objects with string
/// corners).
pub fn rects_from_json(json: &str) -> Vec<Rect> {
    let value: serde_json::Value = serde_json::from_str(json).expect("region json");
    value
        .as_array()
        .expect("region is a list")
        .iter()
        .map(|r| {
            let field = |k: &str| expand(r[k].as_str().expect("corner string"));
            Rect {
                x_min: field("x_min"),
                x_max: field("x_max"),
                y_min: field("y_min"),
                y_max: field("y_max"),
            }
        })
        .collect()
}

pub fn inside(r: &Rect, x: &[u8], y: &[u8]) -> bool {
    less(&r.x_min, x) && less(x, &r.x_max) && less(&r.y_min, y) && less(y, &r.y_max)
}

pub fn word_text(w: &[u8]) -> String {
    w.iter().map(|b| char::from(b'0' + b)).collect()
}

pub fn parse_word(s: &str) -> Vec<u8> {
    s.bytes().map(|b| b - b'0').collect()
}

fn rotation(w: &[u8], k: usize) -> Vec<u8> {
    w[k..].iter().chain(&w[..k]).copied().collect()
}

pub fn is_primitive(w: &[u8]) -> bool {
    let n = w.len();
    (1..n).filter(|d| n.is_multiple_of(*d)).all(|d| rotation(w, d) != w)
}

/// Smallest rotation in the plain lexicographic order: a representative
/// of the necklace that does not depend on the unimodal order.
pub fn necklace(w: &[u8]) -> Vec<u8> {
    (0..w.len())
        .map(|k| rotation(w, k))
        .min()
        .expect("non-empty")
}

/// Every primitive necklace of length `1..=max`, brute force.
pub fn necklaces(max: usize) -> BTreeSet<Vec<u8>> {
    let mut out = BTreeSet::new();
    for n in 1..=max {
        for bits in 0u32..(1 << n) {
            let w: Vec<u8> = (0..n).map(|i| ((bits >> (n - 1 - i)) & 1) as u8).collect();
            if is_primitive(&w) {
                out.insert(necklace(&w));
            }
        }
    }
    out
}

/// All points of the periodic orbit of `w`: for each rotation, forward is
/// the rotation repeated and backward reads the symbols before it leftwards.
pub fn orbit_points(w: &[u8]) -> Vec<(Vec<u8>, Vec<u8>)> {
    let n = w.len();
    (0..n)
        .map(|k| {
            let forward = repeat(&rotation(w, k));
            let back: Vec<u8> = (1..=n).map(|j| w[(k + n - j) % n]).collect();
            (forward, repeat(&back))
        })
        .collect()
}

/// Necklaces of period `<= max` none of whose points lies in any rectangle.
pub fn forced_set(rects: &[Rect], max: usize) -> BTreeSet<Vec<u8>> {
    necklaces(max)
        .into_iter()
        .filter(|w| {
            orbit_points(w)
                .iter()
                .all(|(x, y)| rects.iter().all(|r| !inside(r, x, y)))
        })
        .collect()
}

/// NBT code straight from the crossing description, with plain integers.
pub fn nbt(m: u64, n: u64) -> Vec<u8> {
    (0..=n)
        .map(|i| {
            let hit = (0..=m).any(|k| {
                let x = k * n;
                m * i < x + m && x < m * (i + 1)
            });
            u8::from(hit)
        })
        .collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Reduced fractions `m/n` in `(0, 1/2)` with `n <= max_den`.
pub fn fractions(max_den: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for n in 3..=max_den {
        for m in 1..n {
            if 2 * m < n && gcd(m, n) == 1 {
                out.push((m, n));
            }
        }
    }
    out
}

/// Runs of equal symbols, as `(symbol, length)`.
pub fn runs(w: &[u8]) -> Vec<(u8, usize)> {
    let mut out: Vec<(u8, usize)> = Vec::new();
    for &b in w {
        match out.last_mut() {
            Some((s, len)) if *s == b => *len += 1,
            _ => out.push((b, 1)),
        }
    }
    out
}

/// `1 0^{μ₁} 11 0^{μ₂} 11 ⋯ 11 0^{μ_m} 1` with `μ₁, μ_m >= 1`; an empty
/// interior block merges two neighbouring `11` into a run of four.
pub fn has_nbt_shape(w: &[u8], m: usize) -> bool {
    let r = runs(w);
    let n = r.len();
    if n < 3 || r[0] != (1, 1) || r[n - 1] != (1, 1) {
        return false;
    }
    let inner_ones: usize = r[1..n - 1].iter().filter(|r| r.0 == 1).map(|r| r.1).sum();
    let interior_ok = r[1..n - 1].iter().all(|&(s, len)| s == 0 || len % 2 == 0);
    interior_ok && inner_ones == 2 * (m - 1)
}

/// Points `σ^k` of the bi-infinite sequence `rev(backward).forward` for
/// `|k| <= reach`, both coordinates truncated to `LEN`. Meant for
/// homoclinic points, whose coordinates end in `0^∞`: symbols shifted in
/// from beyond the truncation are filled with zeros.
pub fn shifted_points(forward: &str, backward: &str, reach: usize) -> Vec<(Vec<u8>, Vec<u8>)> {
    let f = expand(forward);
    let b = expand(backward);
    let mut line: Vec<u8> = b.iter().rev().copied().collect();
    let origin = line.len();
    line.extend_from_slice(&f);
    (origin - reach..=origin + reach)
        .map(|c| {
            let mut x: Vec<u8> = line[c..].to_vec();
            x.resize(LEN, 0);
            let mut y: Vec<u8> = line[..c].iter().rev().copied().collect();
            y.resize(LEN, 0);
            x.truncate(LEN);
            y.truncate(LEN);
            (x, y)
        })
        .collect()
}
