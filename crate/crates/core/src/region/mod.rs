//! Open rectangles of the symbol plane and the pruning regions of the three
//! supported homoclinic families.

mod plist;
mod verify;

pub use plist::{
    limiting_structure, limiting_structure_with, region_plist, unstable_anchor, Completion, PList,
};
pub use verify::{verify_pruning_domain, Side, Verdict, DEFAULT_BOUND};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::nbt::{nbt_code, Rational};
use crate::orbit::Generator;
use crate::symbolic::{maximal_decoration_defect, PlanePoint, TailSeq, Word};

/// An open rectangle `(x_min, x_max) × (y_min, y_max)` in the unimodal
/// order; every edge is excluded.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Rectangle {
    pub x_min: TailSeq,
    pub x_max: TailSeq,
    pub y_min: TailSeq,
    pub y_max: TailSeq,
    pub provenance: String,
}

impl Rectangle {
    pub fn new(
        x_min: TailSeq,
        x_max: TailSeq,
        y_min: TailSeq,
        y_max: TailSeq,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        if x_min >= x_max {
            return Err(Error::InvalidRectangle(format!(
                "x_min {x_min} is not below x_max {x_max}"
            )));
        }
        if y_min >= y_max {
            return Err(Error::InvalidRectangle(format!(
                "y_min {y_min} is not below y_max {y_max}"
            )));
        }
        Ok(Rectangle {
            x_min,
            x_max,
            y_min,
            y_max,
            provenance: provenance.into(),
        })
    }

    /// Rectangle `(x_min, 10^∞)` whose two y-levels are given in either
    /// order.
    fn to_fold(x_min: TailSeq, a: TailSeq, b: TailSeq, provenance: String) -> Result<Self> {
        let (y_min, y_max) = if a < b { (a, b) } else { (b, a) };
        Rectangle::new(x_min, TailSeq::fold(), y_min, y_max, provenance)
    }

    pub fn contains(&self, p: &PlanePoint) -> bool {
        self.x_min < p.forward
            && p.forward < self.x_max
            && self.y_min < p.backward
            && p.backward < self.y_max
    }

    pub fn contains_x(&self, x: &TailSeq) -> bool {
        &self.x_min < x && x < &self.x_max
    }

    pub fn contains_y(&self, y: &TailSeq) -> bool {
        &self.y_min < y && y < &self.y_max
    }

    /// Every point of `self` is a point of `other`.
    pub fn is_inside(&self, other: &Rectangle) -> bool {
        other.x_min <= self.x_min
            && self.x_max <= other.x_max
            && other.y_min <= self.y_min
            && self.y_max <= other.y_max
    }
}

pub fn rect_contains(r: &Rectangle, p: &PlanePoint) -> bool {
    r.contains(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PruningRegion {
    pub rectangles: Vec<Rectangle>,
}

impl PruningRegion {
    pub fn new(rectangles: Vec<Rectangle>) -> Result<Self> {
        if rectangles.is_empty() {
            return Err(Error::InvalidRectangle(
                "a pruning region needs at least one rectangle".into(),
            ));
        }
        Ok(PruningRegion { rectangles })
    }

    /// Index of the first rectangle containing `p`.
    pub fn locate(&self, p: &PlanePoint) -> Option<usize> {
        self.rectangles.iter().position(|r| r.contains(p))
    }
}

/// `(1 ŵ)^∞` and `0 ŵ (1 ŵ)^∞`: the two branches of the unstable leaf
/// through the periodic point `(u1)^∞` where they cross the left edge.
fn unstable_levels(u: &Word, closing: u8, opening: u8) -> (TailSeq, TailSeq) {
    let mut block = Word::new(vec![closing]).expect("binary");
    block.extend(&u.reversed());
    let periodic = TailSeq::periodic(&block).expect("non-empty block");
    let mut head = Word::new(vec![opening]).expect("binary");
    head.extend(&u.reversed());
    (periodic.clone(), TailSeq::with_prefix(&head, &periodic))
}

fn then_zeros(w: &Word) -> TailSeq {
    TailSeq::with_prefix(w, &TailSeq::zeros())
}

/// `Ok` when `w` is a maximal decoration.
pub fn require_maximal(w: &Word) -> Result<()> {
    match maximal_decoration_defect(w)? {
        None => Ok(()),
        Some((periodic, shift)) => Err(Error::NotMaximal {
            word: w.clone(),
            periodic,
            shift,
        }),
    }
}

/// Pruning region of `∞010wb.10∞` (`b` the parity of `w`) for a maximal
/// decoration `w`.
///
/// Even `w`: left edge at `w010^∞`, levels `(1ŵ)^∞` and `0ŵ(1ŵ)^∞`.
/// Odd `w`: left edge at `w110^∞`, levels `(0ŵ)^∞` and `1ŵ(0ŵ)^∞`.
pub fn region_maximal(w: &Word) -> Result<PruningRegion> {
    require_maximal(w)?;
    let provenance = format!("maximal:w={w}");
    let rect = if w.parity().is_odd() {
        let x_min = then_zeros(&w.concat(&"11".parse()?));
        let (a, b) = unstable_levels(w, 0, 1);
        Rectangle::to_fold(x_min, a, b, provenance)?
    } else {
        let x_min = then_zeros(&w.concat(&"01".parse()?));
        let (a, b) = unstable_levels(w, 1, 0);
        Rectangle::to_fold(x_min, a, b, provenance)?
    };
    PruningRegion::new(vec![rect])
}

/// The domain bounded by the stable leaf of `∞010.w010∞` and the unstable
/// leaf of the generating orbit itself, before it is cut down to a pruning
/// domain. Kept for checking that this larger domain fails the boundary
/// conditions.
pub fn unshrunk_maximal_domain(w: &Word) -> Result<Rectangle> {
    require_maximal(w)?;
    let tail = "01".parse::<Word>()?;
    let x_min = then_zeros(&w.concat(&tail));
    let beta = then_zeros(&w.reversed().concat(&tail));
    Rectangle::to_fold(x_min, beta.cons(0), beta.cons(1), format!("unshrunk:w={w}"))
}

/// Pruning domain of the star orbit `∞0.c_q0∞`: left edge at
/// `σ²(c_q 0^∞)`, levels `01^∞` and `1^∞`.
pub fn region_star(q: Rational) -> Result<PruningRegion> {
    let c = nbt_code(q)?.word;
    let x_min = then_zeros(&c).shift(2);
    let ones = TailSeq::periodic(&"1".parse()?)?;
    let rect = Rectangle::to_fold(x_min, ones.cons(0), ones, format!("star:q={q}"))?;
    PruningRegion::new(vec![rect])
}

/// Non-empty, pairwise distinct.
pub fn check_list(qs: &[Rational]) -> Result<()> {
    if qs.is_empty() {
        return Err(Error::EmptyList);
    }
    for (i, q) in qs.iter().enumerate() {
        if qs[..i].contains(q) {
            return Err(Error::DuplicateRational(q.to_string()));
        }
    }
    Ok(())
}

/// The pruning region attached to a generator, if its family has one.
pub fn region_for(generator: &Generator) -> Result<PruningRegion> {
    match generator {
        Generator::Decoration(w) => region_maximal(w),
        Generator::Star(q) => region_star(*q),
        Generator::PList(qs) => region_plist(qs),
    }
}
