//! Binary words, eventually periodic one-sided sequences and the unimodal
//! order on them.
//!
//! Every [`TailSeq`] is kept in canonical form (primitive period, minimal
//! preperiod), so two values describe the same infinite sequence exactly when
//! they are structurally equal. The [`Ord`] impl on `TailSeq` is the unimodal
//! order, not the lexicographic one.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Parity of the number of ones in a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_ones(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A finite word over `{0,1}`. Symbols are stored as `0u8` / `1u8`.
///
/// The derived `Ord` is plain lexicographic order on the symbols, which is
/// what the CLI uses to sort codes of equal length.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s > 1) {
            return Err(Error::InvalidSymbol(char::from(b'0' + bad.min(9))));
        }
        Ok(Word(symbols))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&s| s == 1).count()
    }

    pub fn parity(&self) -> Parity {
        Parity::of_ones(self.ones())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, symbol: u8) {
        debug_assert!(symbol <= 1);
        self.0.push(symbol);
    }

    pub fn extend(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    /// Rotation moving the first `k` symbols to the back.
    pub fn rotated(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let k = k % v.len();
            v.rotate_left(k);
        }
        Word(v)
    }

    /// Length of the shortest word `r` with `self = r^k`.
    pub fn primitive_root_len(&self) -> usize {
        primitive_root_len(&self.0)
    }

    pub fn primitive_root(&self) -> Word {
        Word(self.0[..self.primitive_root_len()].to_vec())
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_empty() && self.primitive_root_len() == self.len()
    }
}

fn primitive_root_len(s: &[u8]) -> usize {
    let n = s.len();
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .find(|&d| (d..n).all(|i| s[i] == s[i - d]))
        .unwrap_or(n)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            f.write_str(if s == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidSymbol(other)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An eventually periodic one-sided sequence `pre per per per ...`.
///
/// Invariants: `per` is non-empty and primitive, and the last symbol of `pre`
/// (if any) differs from the last symbol of `per`. Under these two conditions
/// the representation of a sequence is unique.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TailSeq {
    pre: Vec<u8>,
    per: Vec<u8>,
}

impl TailSeq {
    pub fn new(pre: &Word, per: &Word) -> Result<Self> {
        if per.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Self::canonical(pre.0.clone(), per.0.clone()))
    }

    /// The purely periodic sequence `w w w ...`.
    pub fn periodic(w: &Word) -> Result<Self> {
        Self::new(&Word::empty(), w)
    }

    /// `w` followed by `tail`.
    pub fn with_prefix(w: &Word, tail: &TailSeq) -> Self {
        let mut pre = w.0.clone();
        pre.extend_from_slice(&tail.pre);
        Self::canonical(pre, tail.per.clone())
    }

    /// `0^∞`, the minimum of the unimodal order.
    pub fn zeros() -> Self {
        TailSeq {
            pre: vec![],
            per: vec![0],
        }
    }

    /// `10^∞`, the maximum of the unimodal order.
    pub fn fold() -> Self {
        TailSeq {
            pre: vec![1],
            per: vec![0],
        }
    }

    fn canonical(mut pre: Vec<u8>, per: Vec<u8>) -> Self {
        let root = primitive_root_len(&per);
        let mut per = per[..root].to_vec();
        while let (Some(&a), Some(&b)) = (pre.last(), per.last()) {
            if a != b {
                break;
            }
            pre.pop();
            per.rotate_right(1);
        }
        TailSeq { pre, per }
    }

    pub fn preperiod(&self) -> Word {
        Word(self.pre.clone())
    }

    pub fn period(&self) -> Word {
        Word(self.per.clone())
    }

    pub fn preperiod_len(&self) -> usize {
        self.pre.len()
    }

    pub fn period_len(&self) -> usize {
        self.per.len()
    }

    /// Size of the `pre(per)` description.
    pub fn description_len(&self) -> usize {
        self.pre.len() + self.per.len()
    }

    pub fn symbol(&self, i: usize) -> u8 {
        if i < self.pre.len() {
            self.pre[i]
        } else {
            self.per[(i - self.pre.len()) % self.per.len()]
        }
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word((0..n).map(|i| self.symbol(i)).collect())
    }

    /// `σ^n`: drop the first `n` symbols.
    pub fn shift(&self, n: usize) -> TailSeq {
        if n <= self.pre.len() {
            return TailSeq {
                pre: self.pre[n..].to_vec(),
                per: self.per.clone(),
            };
        }
        let mut per = self.per.clone();
        let k = (n - self.pre.len()) % per.len();
        per.rotate_left(k);
        TailSeq { pre: vec![], per }
    }

    pub fn cons(&self, symbol: u8) -> TailSeq {
        let mut pre = Vec::with_capacity(self.pre.len() + 1);
        pre.push(symbol);
        pre.extend_from_slice(&self.pre);
        Self::canonical(pre, self.per.clone())
    }

    /// True when the sequence is `0^∞` after its preperiod.
    pub fn is_eventually_zero(&self) -> bool {
        self.per == [0]
    }

    /// Number of leading zeros, `None` for `0^∞`.
    pub fn leading_zeros(&self) -> Option<usize> {
        if self.pre.is_empty() && self.per == [0] {
            return None;
        }
        (0..).find(|&i| self.symbol(i) == 1)
    }
}

/// Index of the first symbol where `a` and `b` differ, `None` if equal.
///
/// Past `max(|pre_a|, |pre_b|)` both sequences are periodic with periods
/// `p = |per_a|` and `q = |per_b|`; if they agree on a further window of
/// `lcm(p, q)` symbols they agree forever. So the scan below is exhaustive
/// and never reads more than `|pre_a| + |pre_b| + lcm(p, q)` symbols.
pub fn first_difference(a: &TailSeq, b: &TailSeq) -> Option<usize> {
    if a == b {
        return None;
    }
    let limit = a.pre.len().max(b.pre.len()) + a.per.len().lcm(&b.per.len());
    let found = (0..limit).find(|&i| a.symbol(i) != b.symbol(i));
    debug_assert!(found.is_some(), "distinct canonical forms must differ");
    found
}

/// The unimodal order: at the first difference, an even number of ones in
/// the common prefix means the larger symbol wins, an odd number means the
/// smaller symbol wins.
pub fn cmp_unimodal(a: &TailSeq, b: &TailSeq) -> Ordering {
    let Some(k) = first_difference(a, b) else {
        return Ordering::Equal;
    };
    let ones = (0..k).filter(|&i| a.symbol(i) == 1).count();
    let o = a.symbol(k).cmp(&b.symbol(k));
    if ones % 2 == 0 {
        o
    } else {
        o.reverse()
    }
}

impl Ord for TailSeq {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_unimodal(self, other)
    }
}

impl PartialOrd for TailSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TailSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", Word(self.pre.clone()), Word(self.per.clone()))
    }
}

impl FromStr for TailSeq {
    type Err = Error;

    /// Parses `pre(per)`, e.g. `01(10)` or `(0)`.
    fn from_str(s: &str) -> Result<Self> {
        let syntax = |reason| Error::SequenceSyntax {
            input: s.to_string(),
            reason,
        };
        let open = s.find('(').ok_or_else(|| syntax("missing '('"))?;
        let body = s[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| syntax("missing trailing ')'"))?;
        if body.contains(['(', ')']) {
            return Err(syntax("nested parentheses"));
        }
        let pre: Word = s[..open].parse()?;
        let per: Word = body.parse()?;
        if per.is_empty() {
            return Err(syntax("empty period"));
        }
        TailSeq::new(&pre, &per)
    }
}

impl Serialize for TailSeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TailSeq {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parity of the number of ones in `w`.
pub fn word_parity(w: &Word) -> Parity {
    w.parity()
}

pub fn word_reverse(w: &Word) -> Word {
    w.reversed()
}

/// Smallest shift `i` in `1..|w|` with `σ^i(w^∞) >₁ w^∞`, if any.
pub fn first_larger_shift(w: &Word) -> Result<Option<usize>> {
    let base = TailSeq::periodic(w)?;
    Ok((1..w.len()).find(|&i| base.shift(i) > base))
}

/// True iff every rotation `r` of `w` satisfies `r^∞ ≤₁ w^∞`.
pub fn is_shift_maximal(w: &Word) -> Result<bool> {
    Ok(first_larger_shift(w)?.is_none())
}

/// First of `w` and its anchor word that is not shift-maximal, with its
/// larger shift. The anchor word is `w1` for even `w` and `w0` for odd `w`.
/// `None` means `w` is a maximal decoration.
pub fn maximal_decoration_defect(w: &Word) -> Result<Option<(Word, usize)>> {
    let anchor = w.concat(&Word(vec![u8::from(!w.parity().is_odd())]));
    let candidates = [w.clone(), anchor];
    for candidate in candidates {
        if let Some(shift) = first_larger_shift(&candidate)? {
            return Ok(Some((candidate, shift)));
        }
    }
    Ok(None)
}

/// `w` and its anchor word are both shift-maximal.
pub fn is_maximal_decoration(w: &Word) -> Result<bool> {
    Ok(maximal_decoration_defect(w)?.is_none())
}

/// A point of the symbol plane, `... s₋₂ s₋₁ . s₀ s₁ ...`.
///
/// `backward` is stored in reading order `s₋₁ s₋₂ ...` and is compared with
/// the same unimodal order as `forward`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlanePoint {
    pub forward: TailSeq,
    pub backward: TailSeq,
}

impl PlanePoint {
    pub fn new(forward: TailSeq, backward: TailSeq) -> Self {
        PlanePoint { forward, backward }
    }

    /// `σ^k` for signed `k`; positive `k` moves the binary point right.
    pub fn shift(&self, k: i64) -> PlanePoint {
        let n = k.unsigned_abs() as usize;
        if k >= 0 {
            let moved = self.forward.prefix(n).reversed();
            PlanePoint {
                forward: self.forward.shift(n),
                backward: TailSeq::with_prefix(&moved, &self.backward),
            }
        } else {
            let moved = self.backward.prefix(n).reversed();
            PlanePoint {
                forward: TailSeq::with_prefix(&moved, &self.forward),
                backward: self.backward.shift(n),
            }
        }
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.forward, self.backward)
    }
}

pub fn shift_point(p: &PlanePoint, k: i64) -> PlanePoint {
    p.shift(k)
}

/// A dyadic rational `num / 2^depth`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dyadic {
    pub num: u128,
    pub depth: u32,
}

impl Dyadic {
    pub fn to_f64(self) -> f64 {
        self.num as f64 / 2f64.powi(self.depth as i32)
    }
}

pub const MAX_EMBED_DEPTH: u32 = 127;

/// Plotting coordinate in `[0, 1]`: `Σ_{i<depth} ε_i 2^{-(i+1)}` with
/// `ε_i = s₀ ⊕ … ⊕ s_i`. Strictly order preserving once `depth` exceeds the
/// first index at which two sequences differ.
///
/// Panics if `depth` is zero or larger than [`MAX_EMBED_DEPTH`].
pub fn embed_coordinate(s: &TailSeq, depth: u32) -> Dyadic {
    assert!(
        (1..=MAX_EMBED_DEPTH).contains(&depth),
        "embedding depth {depth} outside 1..={MAX_EMBED_DEPTH}"
    );
    let mut acc = 0u8;
    let mut num = 0u128;
    for i in 0..depth as usize {
        acc ^= s.symbol(i);
        num = (num << 1) | acc as u128;
    }
    Dyadic { num, depth }
}

/// Some sequence `t` with `a <₁ t <₁ b`, searching candidates that branch
/// off `a` or `b` within the first `horizon` symbols. `None` if `a ≥₁ b` or
/// nothing was found (e.g. `a`, `b` adjacent in the order).
pub fn strictly_between(a: &TailSeq, b: &TailSeq, horizon: usize) -> Option<TailSeq> {
    if a >= b {
        return None;
    }
    let d = first_difference(a, b)?;
    let tails = [
        TailSeq::zeros(),
        TailSeq::periodic(&Word(vec![1])).ok()?,
        TailSeq::fold(),
    ];
    for i in d + 1..=d + horizon {
        for base in [a, b] {
            let mut head = base.prefix(i + 1);
            head.0[i] ^= 1;
            for tail in &tails {
                let t = TailSeq::with_prefix(&head, tail);
                if a < &t && &t < b {
                    return Some(t);
                }
            }
        }
    }
    None
}
