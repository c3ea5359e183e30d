//! Limiting points, successors and P-lists for concatenations of NBT codes.
//!
//! For a list `q_1, …, q_n` the points `C_i = (c_{q_i}, 0c_{q_{i-1}})` are the
//! coordinates of the anchors `S_i = ∞010c_{q_1}0⋯0c_{q_{i-1}}0.c_{q_i}0⋯c_{q_n}010∞`
//! of the homoclinic orbit, with the sentinel `C_{n+1} = (10^∞, 0c_{q_n})`.
//! Indices in this module are 1-based to match that numbering.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{check_list, PruningRegion, Rectangle};
use crate::error::{Error, Result};
use crate::nbt::{nbt_code, NbtCode, Rational};
use crate::symbolic::{TailSeq, Word};

/// How the finite words in `C_i` are completed to infinite sequences
/// before they are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Completion {
    /// `x_i` is the forward tail of `S_i` and `y_i` its backward tail.
    #[default]
    Context,
    /// `x_i = (c_{q_i}0)^∞` and `y_i = 0(c_{q_{i-1}}0)^∞`.
    Periodic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PList {
    pub qs: Vec<Rational>,
    pub codes: Vec<NbtCode>,
    /// Indices `i ∈ 1..=n` of limiting points; the sentinel `n+1` is
    /// implicitly limiting and not listed.
    pub limiting: BTreeSet<usize>,
    /// Successor of each limiting point; the value may be the sentinel `n+1`.
    pub successor: BTreeMap<usize, usize>,
    pub is_plist: bool,
    /// `(i, j, k)`: limiting `C_i` with successor `C_j` and limiting `C_k`
    /// strictly between them.
    #[serde(skip)]
    pub violation: Option<(usize, usize, usize)>,
    #[serde(skip)]
    points: Vec<(TailSeq, TailSeq)>,
}

impl PList {
    pub fn len(&self) -> usize {
        self.qs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.qs.is_empty()
    }

    /// Coordinates `(x_i, y_i)` of `C_i` for `i ∈ 1..=n+1`.
    pub fn point(&self, i: usize) -> &(TailSeq, TailSeq) {
        &self.points[i - 1]
    }

    pub fn sentinel(&self) -> usize {
        self.qs.len() + 1
    }
}

fn seq(w: &Word) -> TailSeq {
    TailSeq::with_prefix(w, &TailSeq::zeros())
}

/// `c_{q_i} 0 ⋯ 0 c_{q_j}` for `1 ≤ i ≤ j ≤ n` (1-based, inclusive).
fn join(codes: &[NbtCode], i: usize, j: usize) -> Word {
    let mut w = Word::empty();
    for k in i..=j {
        if k > i {
            w.push(0);
        }
        w.extend(&codes[k - 1].word);
    }
    w
}

fn anchor_points(codes: &[NbtCode], completion: Completion) -> Vec<(TailSeq, TailSeq)> {
    let n = codes.len();
    let tail: Word = "01".parse().expect("binary");
    let top = seq(&tail);
    (1..=n + 1)
        .map(|i| {
            let x = if i == n + 1 {
                TailSeq::fold()
            } else {
                match completion {
                    Completion::Context => seq(&join(codes, i, n).concat(&tail)),
                    Completion::Periodic => {
                        let mut block = codes[i - 1].word.clone();
                        block.push(0);
                        TailSeq::periodic(&block).expect("non-empty")
                    }
                }
            };
            let y = if i == 1 {
                top.clone()
            } else {
                match completion {
                    Completion::Context => {
                        let mut back = Word::new(vec![0]).expect("binary");
                        back.extend(&join(codes, 1, i - 1).reversed());
                        back.extend(&"01".parse().expect("binary"));
                        seq(&back)
                    }
                    Completion::Periodic => {
                        let mut block = codes[i - 2].word.reversed();
                        block.push(0);
                        TailSeq::periodic(&block).expect("non-empty").cons(0)
                    }
                }
            };
            (x, y)
        })
        .collect()
}

/// Limiting points and successors under the default completion.
pub fn limiting_structure(qs: &[Rational]) -> Result<PList> {
    limiting_structure_with(qs, Completion::Context)
}

/// `C_i` is limiting when some `C_j`, `i < j ≤ n+1`, lies weakly to its
/// right and strictly below it, and the region
/// `{x_i <₁ x <₁ 10^∞, y_j <₁ y ≤₁ 010^∞}` holds no other anchor. The top
/// edge is closed so that `C_1`, which sits on it, blocks later points.
/// Among several such `j` the successor is the highest one, i.e. the first
/// unstable level met when sliding down from `C_i`.
pub fn limiting_structure_with(qs: &[Rational], completion: Completion) -> Result<PList> {
    check_list(qs)?;
    let codes: Vec<NbtCode> = qs.iter().map(|&q| nbt_code(q)).collect::<Result<_>>()?;
    let points = anchor_points(&codes, completion);
    let n = qs.len();
    let top = points[0].1.clone();
    let fold = TailSeq::fold();
    let at = |i: usize| &points[i - 1];

    let mut limiting = BTreeSet::new();
    let mut successor = BTreeMap::new();
    for i in 1..=n {
        let (xi, yi) = at(i);
        let best = (i + 1..=n + 1)
            .filter(|&j| {
                let (xj, yj) = at(j);
                if xj < xi || yj >= yi {
                    return false;
                }
                (1..=n + 1).filter(|&k| k != i && k != j).all(|k| {
                    let (xk, yk) = at(k);
                    !(xi < xk && xk < &fold && yj < yk && yk <= &top)
                })
            })
            .max_by(|&a, &b| at(a).1.cmp(&at(b).1));
        if let Some(j) = best {
            limiting.insert(i);
            successor.insert(i, j);
        }
    }

    let violation = successor.iter().find_map(|(&i, &j)| {
        (i + 1..j.min(n + 1))
            .find(|k| limiting.contains(k))
            .map(|k| (i, j, k))
    });
    Ok(PList {
        qs: qs.to_vec(),
        codes,
        is_plist: violation.is_none(),
        limiting,
        successor,
        violation,
        points,
    })
}

/// One rectangle per limiting point `C_i` with successor `C_j`: left edge at
/// `x_i`, unstable levels through `(u1)^∞` with `u = c_{q_i}0⋯0c_{q_{j-1}}`.
pub fn region_plist(qs: &[Rational]) -> Result<PruningRegion> {
    let plist = limiting_structure(qs)?;
    if let Some((limiting, successor, intruder)) = plist.violation {
        return Err(Error::NotAPList {
            limiting,
            successor,
            intruder,
        });
    }
    let labels: Vec<String> = qs.iter().map(Rational::to_string).collect();
    let rects = plist
        .successor
        .iter()
        .map(|(&i, &j)| {
            let u = join(&plist.codes, i, j - 1);
            let (a, b) = super::unstable_levels(&u, 1, 0);
            let x_min = plist.point(i).0.clone();
            Rectangle::to_fold(
                x_min,
                a,
                b,
                format!("plist:{}:C{i}->C{j}", labels.join(",")),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    PruningRegion::new(rects)
}

/// `(u1)^∞` for the rectangle anchored at `C_i` with successor `C_j`.
pub fn unstable_anchor(plist: &PList, i: usize) -> Option<TailSeq> {
    let j = *plist.successor.get(&i)?;
    let mut u = join(&plist.codes, i, j - 1);
    u.push(1);
    TailSeq::periodic(&u).ok()
}
