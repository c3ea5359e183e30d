//! Exact check of the pruning-domain boundary conditions for a rectangle.
//!
//! The stable boundary is the left edge `{x_min} × [y_min, y_max]`; the
//! unstable boundary is the pair of horizontal edges at `y_min` and `y_max`,
//! joined at the fold. The n-th image of the left edge sits at
//! `x = σⁿ(x_min)` and covers the y-interval `p·[y_min, y_max]` where `p` is
//! the first `n` symbols of `x_min` reversed; the n-th preimage of a
//! horizontal edge at level `Y` sits at `σⁿ(Y)` and covers
//! `p·[x_min, x_max]` with `p` taken from `Y`.
//!
//! Every quantity involved is eventually periodic in `n`. Writing a corner as
//! `A B^∞`, once `n - |A|` exceeds the first index where `rev(B')rev(B)^∞`
//! can differ from any level `L`, each comparison depends only on
//! `(n - |A|) mod 2|B|`. So checking `n` up to that point plus one full
//! cycle decides the condition for all `n ≥ 1`.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::{PruningRegion, Rectangle};
use crate::symbolic::{strictly_between, PlanePoint, TailSeq};

pub const DEFAULT_BOUND: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Stable,
    Unstable,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Stable => "stable",
            Side::Unstable => "unstable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    /// All iterates up to `checked` avoid the interior, and the outcome
    /// sequence has entered its cycle of length `cycle`.
    Verified {
        checked: usize,
        cycle: usize,
        /// Iterates that meet the interior only where no surviving point
        /// could be found (only with an excluded region).
        unwitnessed: Vec<(usize, Side)>,
    },
    Violated {
        n: usize,
        side: Side,
        witness: PlanePoint,
    },
    Inconclusive {
        bound: usize,
    },
}

impl Verdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified { .. })
    }
}

/// Number of iterates after which each side's outcomes are periodic, and
/// that period.
fn horizon(anchor: &TailSeq, levels: [&TailSeq; 2]) -> (usize, usize) {
    let a = anchor.preperiod_len();
    let b = anchor.period_len();
    let reach = levels
        .iter()
        .map(|l| l.preperiod_len() + b.lcm(&l.period_len()))
        .max()
        .unwrap_or(0);
    let settle = a + b + reach + 1;
    (settle, 2 * b)
}

fn ordered(a: TailSeq, b: TailSeq) -> (TailSeq, TailSeq) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Points of `[lo, hi]` strictly inside `(min, max)`, most natural first.
fn candidates(
    lo: &TailSeq,
    hi: &TailSeq,
    min: &TailSeq,
    max: &TailSeq,
    search: usize,
) -> Vec<TailSeq> {
    let mut out = Vec::new();
    if !(lo < max && hi > min) {
        return out;
    }
    let inner_lo = if lo > min { lo } else { min };
    let inner_hi = if hi < max { hi } else { max };
    for end in [lo, hi] {
        if min < end && end < max {
            out.push(end.clone());
        }
    }
    if let Some(t) = strictly_between(inner_lo, inner_hi, search) {
        out.push(t);
    }
    // extra interior points for surviving-witness searches
    let mut left = inner_lo.clone();
    for _ in 0..search {
        match strictly_between(&left, inner_hi, search) {
            Some(t) => {
                out.push(t.clone());
                left = t;
            }
            None => break,
        }
    }
    out.dedup();
    out
}

fn survives(p: &PlanePoint, excluded: &PruningRegion, window: usize) -> bool {
    let w = window as i64;
    (-w..=w).all(|k| excluded.locate(&p.shift(k)).is_none())
}

enum Step {
    Clear,
    Hit(PlanePoint),
    Unwitnessed,
}

struct Checker<'a> {
    rect: &'a Rectangle,
    excluded: Option<&'a PruningRegion>,
    search: usize,
}

impl Checker<'_> {
    fn pick(&self, points: Vec<PlanePoint>) -> Step {
        if points.is_empty() {
            return Step::Clear;
        }
        match self.excluded {
            None => Step::Hit(points[0].clone()),
            Some(region) => points
                .into_iter()
                .find(|p| survives(p, region, self.search))
                .map_or(Step::Unwitnessed, Step::Hit),
        }
    }

    fn stable(&self, n: usize) -> Step {
        let r = self.rect;
        let x = r.x_min.shift(n);
        if !r.contains_x(&x) {
            return Step::Clear;
        }
        let p = r.x_min.prefix(n).reversed();
        let (lo, hi) = ordered(
            TailSeq::with_prefix(&p, &r.y_min),
            TailSeq::with_prefix(&p, &r.y_max),
        );
        let ys = candidates(&lo, &hi, &r.y_min, &r.y_max, self.search);
        self.pick(
            ys.into_iter()
                .map(|y| PlanePoint::new(x.clone(), y))
                .collect(),
        )
    }

    fn unstable(&self, n: usize, level: &TailSeq) -> Step {
        let r = self.rect;
        let y = level.shift(n);
        if !r.contains_y(&y) {
            return Step::Clear;
        }
        let p = level.prefix(n).reversed();
        let (lo, hi) = ordered(
            TailSeq::with_prefix(&p, &r.x_min),
            TailSeq::with_prefix(&p, &r.x_max),
        );
        let xs = candidates(&lo, &hi, &r.x_min, &r.x_max, self.search);
        self.pick(
            xs.into_iter()
                .map(|x| PlanePoint::new(x, y.clone()))
                .collect(),
        )
    }
}

/// Decides whether `r` is a pruning domain: no forward iterate of its stable
/// edge and no backward iterate of its unstable edges meets its interior.
///
/// With `excluded`, an intersection only counts when a witness point whose
/// orbit (within a finite window) avoids `excluded` is found; this
/// approximates checking the domain for the already pruned map.
pub fn verify_pruning_domain(
    r: &Rectangle,
    excluded: Option<&PruningRegion>,
    bound: usize,
) -> Verdict {
    let longest = [&r.x_min, &r.x_max, &r.y_min, &r.y_max]
        .iter()
        .map(|s| s.description_len())
        .max()
        .unwrap_or(1);
    let checker = Checker {
        rect: r,
        excluded,
        search: 3 * longest,
    };

    let (s_settle, s_cycle) = horizon(&r.x_min, [&r.y_min, &r.y_max]);
    let mut settle = s_settle;
    let mut cycle = s_cycle;
    for level in [&r.y_min, &r.y_max] {
        let (u_settle, u_cycle) = horizon(level, [&r.x_min, &r.x_max]);
        settle = settle.max(u_settle);
        cycle = cycle.lcm(&u_cycle);
    }
    let needed = settle + cycle;
    let last = needed.min(bound);

    let mut unwitnessed = Vec::new();
    for n in 1..=last {
        let steps = [
            (Side::Stable, checker.stable(n)),
            (Side::Unstable, checker.unstable(n, &r.y_min)),
            (Side::Unstable, checker.unstable(n, &r.y_max)),
        ];
        for (side, step) in steps {
            match step {
                Step::Clear => {}
                Step::Hit(witness) => return Verdict::Violated { n, side, witness },
                Step::Unwitnessed => unwitnessed.push((n, side)),
            }
        }
    }
    if needed > bound {
        return Verdict::Inconclusive { bound };
    }
    unwitnessed.dedup();
    Verdict::Verified {
        checked: needed,
        cycle,
        unwitnessed,
    }
}
