//! Periodic and homoclinic horseshoe orbits and their symbolic codes.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::nbt::{nbt_code, Rational};
use crate::symbolic::{PlanePoint, TailSeq, Word};

/// Largest period [`enumerate_periodic`] accepts.
pub const HARD_PERIOD_CAP: usize = 24;

/// A periodic orbit identified by the code of its rightmost point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicOrbit {
    pub code: Word,
}

impl Serialize for PeriodicOrbit {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut record = serializer.serialize_struct("PeriodicOrbit", 2)?;
        record.serialize_field("period", &self.period())?;
        record.serialize_field("code", &self.code)?;
        record.end()
    }
}

impl PeriodicOrbit {
    pub fn period(&self) -> usize {
        self.code.len()
    }

    /// The point `code^∞` read from the binary point in both directions.
    pub fn base_point(&self) -> PlanePoint {
        let forward = TailSeq::periodic(&self.code).expect("orbit codes are non-empty");
        let backward = TailSeq::periodic(&self.code.reversed()).expect("orbit codes are non-empty");
        PlanePoint::new(forward, backward)
    }

    pub fn points(&self) -> Vec<PlanePoint> {
        let base = self.base_point();
        (0..self.period() as i64).map(|k| base.shift(k)).collect()
    }
}

impl fmt::Display for PeriodicOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.code.fmt(f)
    }
}

/// The rotation `r` of a primitive word maximising `r^∞` in the unimodal
/// order.
pub fn canonical_code(w: &Word) -> Result<PeriodicOrbit> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !w.is_primitive() {
        return Err(Error::NotPrimitive {
            word: w.clone(),
            root: w.primitive_root(),
        });
    }
    let base = TailSeq::periodic(w)?;
    let best = (1..w.len()).fold(0, |best, i| {
        if base.shift(i) > base.shift(best) {
            i
        } else {
            best
        }
    });
    Ok(PeriodicOrbit {
        code: w.rotated(best),
    })
}

/// Lyndon words of length exactly `n` over `{0,1}` (Duval's generation).
fn lyndon_words(n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut w: Vec<u8> = vec![0];
    while !w.is_empty() {
        if w.len() == n {
            out.push(Word::new(w.clone()).expect("binary"));
        }
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&1) {
            w.pop();
        }
        if let Some(last) = w.last_mut() {
            *last = 1;
        }
    }
    out
}

/// Every periodic orbit of the full 2-shift with period `≤ max_period`,
/// sorted by period and then by code.
pub fn enumerate_periodic(max_period: usize) -> Result<Vec<PeriodicOrbit>> {
    if max_period == 0 || max_period > HARD_PERIOD_CAP {
        return Err(Error::PeriodCap {
            requested: max_period,
            cap: HARD_PERIOD_CAP,
        });
    }
    let mut all = Vec::new();
    for n in 1..=max_period {
        let mut orbits: Vec<PeriodicOrbit> = lyndon_words(n)
            .par_iter()
            .map(|w| canonical_code(w).expect("Lyndon words are primitive"))
            .collect();
        orbits.sort();
        all.extend(orbits);
    }
    Ok(all)
}

/// Which family a homoclinic orbit belongs to. Only these three have
/// pruning regions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// `∞010wb.10∞`, `b` the parity of `w`, for a maximal decoration `w`.
    #[serde(rename = "decoration")]
    MaximalDecoration { w: Word },
    /// Decoration `c_{q_1}0c_{q_2}0⋯0c_{q_n}`.
    #[serde(rename = "plist")]
    PListConcatenation { qs: Vec<Rational> },
    /// `∞0.c_q0∞`.
    Star { q: Rational },
    /// `∞010wb.10∞` for a decoration outside the supported families.
    #[serde(rename = "decoration")]
    Unclassified { w: Word },
}

/// What a user asks for on the command line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    Decoration(Word),
    PList(Vec<Rational>),
    Star(Rational),
}

impl Generator {
    /// Parses `maximal:<w>`, `decoration:<w>`, `star:<m/n>` or
    /// `plist:<q1,q2,...>`.
    pub fn parse_tagged(s: &str) -> Result<Self> {
        let (tag, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Mismatch(format!("generator {s:?} needs a family prefix")))?;
        match tag {
            "maximal" | "decoration" | "w" => Ok(Generator::Decoration(body.parse()?)),
            "star" => Ok(Generator::Star(body.parse()?)),
            "plist" => Ok(Generator::PList(crate::nbt::parse_rational_list(body)?)),
            "code" => Ok(Generator::Decoration(parse_homoclinic_code(body)?)),
            other => Err(Error::Mismatch(format!(
                "unknown generator family {other:?}"
            ))),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Decoration(w) => write!(f, "maximal:w={w}"),
            Generator::Star(q) => write!(f, "star:q={q}"),
            Generator::PList(qs) => {
                let list: Vec<String> = qs.iter().map(Rational::to_string).collect();
                write!(f, "plist:{}", list.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HomoclinicOrbit {
    pub decoration: Word,
    #[serde(flatten)]
    pub family: Family,
    #[serde(skip)]
    pub base: PlanePoint,
}

/// Says which shifts of a homoclinic base point can matter.
///
/// For `k > last_one` the forward coordinate is `0^∞`, for `k ≤ first_one`
/// the backward coordinate is `0^∞`; either way the point lies on the
/// minimal edge of the symbol plane and is outside every open rectangle.
/// `complete` records whether the returned window covers
/// `first_one + 1 ..= last_one`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TailCertificate {
    pub first_one: i64,
    pub last_one: i64,
    pub window: usize,
    pub complete: bool,
}

impl HomoclinicOrbit {
    /// Position relative to the binary point of the outermost ones.
    pub fn support(&self) -> (i64, i64) {
        let f = &self.base.forward;
        let b = &self.base.backward;
        debug_assert!(f.is_eventually_zero() && b.is_eventually_zero());
        let last_fwd = (0..f.preperiod_len()).rev().find(|&i| f.symbol(i) == 1);
        let last_bwd = (0..b.preperiod_len()).rev().find(|&i| b.symbol(i) == 1);
        let first_fwd = (0..f.preperiod_len()).find(|&i| f.symbol(i) == 1);
        let first_bwd = (0..b.preperiod_len()).find(|&i| b.symbol(i) == 1);
        let lo = match (last_bwd, first_fwd) {
            (Some(j), _) => -(j as i64) - 1,
            (None, Some(i)) => i as i64,
            (None, None) => 0,
        };
        let hi = match (last_fwd, first_bwd) {
            (Some(i), _) => i as i64,
            (None, Some(j)) => -(j as i64) - 1,
            (None, None) => 0,
        };
        (lo, hi)
    }

    /// Smallest window whose shifts cover every point that can lie inside
    /// an open rectangle.
    pub fn required_window(&self) -> usize {
        let (lo, hi) = self.support();
        (lo + 1).unsigned_abs().max(hi.unsigned_abs()) as usize
    }

    pub fn default_window(&self) -> usize {
        self.decoration.len() + 8
    }

    pub fn points(&self, window: usize) -> (Vec<(i64, PlanePoint)>, TailCertificate) {
        let w = window as i64;
        let points = (-w..=w).map(|k| (k, self.base.shift(k))).collect();
        let (lo, hi) = self.support();
        let cert = TailCertificate {
            first_one: lo,
            last_one: hi,
            window,
            complete: window >= self.required_window(),
        };
        (points, cert)
    }

    pub fn is_supported(&self) -> bool {
        !matches!(self.family, Family::Unclassified { .. })
    }
}

impl fmt::Display for HomoclinicOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::Star { q } => write!(f, "star q={q} ({})", self.base.forward),
            Family::PListConcatenation { qs } => {
                let list: Vec<String> = qs.iter().map(Rational::to_string).collect();
                write!(f, "plist {} (w={})", list.join(","), self.decoration)
            }
            Family::MaximalDecoration { w } | Family::Unclassified { w } => {
                write!(f, "decoration w={w}")
            }
        }
    }
}

/// `c_{q_1} 0 c_{q_2} 0 ⋯ 0 c_{q_n}`.
pub fn concatenate_codes(qs: &[Rational]) -> Result<Word> {
    let mut w = Word::empty();
    for (i, &q) in qs.iter().enumerate() {
        if i > 0 {
            w.push(0);
        }
        w.extend(&nbt_code(q)?.word);
    }
    Ok(w)
}

/// The base point `∞010wb.10∞` with `b` the parity of `w`: forward `10^∞`,
/// backward `bŵ010^∞`.
pub fn decoration_base(w: &Word) -> PlanePoint {
    let mut back = Word::new(vec![u8::from(w.parity().is_odd())]).expect("binary");
    back.extend(&w.reversed());
    back.extend(&"01".parse().expect("binary"));
    PlanePoint::new(
        TailSeq::fold(),
        TailSeq::with_prefix(&back, &TailSeq::zeros()),
    )
}

pub fn build_homoclinic(generator: &Generator) -> Result<HomoclinicOrbit> {
    match generator {
        Generator::Decoration(w) => {
            if w.is_empty() {
                return Err(Error::EmptyWord);
            }
            let family = if crate::symbolic::is_maximal_decoration(w)? {
                Family::MaximalDecoration { w: w.clone() }
            } else {
                Family::Unclassified { w: w.clone() }
            };
            Ok(HomoclinicOrbit {
                decoration: w.clone(),
                family,
                base: decoration_base(w),
            })
        }
        Generator::PList(qs) => {
            crate::region::check_list(qs)?;
            let w = concatenate_codes(qs)?;
            Ok(HomoclinicOrbit {
                base: decoration_base(&w),
                decoration: w,
                family: Family::PListConcatenation { qs: qs.clone() },
            })
        }
        Generator::Star(q) => {
            let c = nbt_code(*q)?.word;
            Ok(HomoclinicOrbit {
                base: PlanePoint::new(
                    TailSeq::with_prefix(&c, &TailSeq::zeros()),
                    TailSeq::zeros(),
                ),
                decoration: c,
                family: Family::Star { q: *q },
            })
        }
    }
}

/// Parses a homoclinic code written `01a<w>.b10` with `a, b ∈ {0,1}`,
/// i.e. `∞01a w.b10∞`, and returns the decoration. Only `a = 0` with `b`
/// equal to the parity of `w` is supported; the other variants are
/// rejected.
pub fn parse_homoclinic_code(s: &str) -> Result<Word> {
    let syntax = |reason| Error::SequenceSyntax {
        input: s.to_string(),
        reason,
    };
    let (left, right) = s.split_once('.').ok_or_else(|| syntax("missing '.'"))?;
    let left = left
        .strip_prefix("01")
        .ok_or_else(|| syntax("left side must start with 01"))?;
    let right = right
        .strip_suffix("10")
        .ok_or_else(|| syntax("right side must end with 10"))?;
    if right.len() != 1 || left.is_empty() {
        return Err(syntax("expected 01a<w>.b10"));
    }
    let (a, w) = left.split_at(1);
    let w: Word = w.parse()?;
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let b = if w.parity().is_odd() { "1" } else { "0" };
    if a != "0" || right != b {
        return Err(Error::UnsupportedVariant(s.to_string()));
    }
    Ok(w)
}

/// Points of an orbit.
#[derive(Debug, Clone)]
pub enum OrbitRef<'a> {
    Periodic(&'a PeriodicOrbit),
    Homoclinic(&'a HomoclinicOrbit),
}

/// Shifted points of an orbit: all of them for a periodic orbit (window is
/// ignored), the shifts `|k| ≤ window` plus a tail certificate otherwise.
pub fn orbit_points(o: OrbitRef<'_>, window: usize) -> (Vec<PlanePoint>, Option<TailCertificate>) {
    match o {
        OrbitRef::Periodic(p) => (p.points(), None),
        OrbitRef::Homoclinic(h) => {
            let (pts, cert) = h.points(window);
            (pts.into_iter().map(|(_, p)| p).collect(), Some(cert))
        }
    }
}
