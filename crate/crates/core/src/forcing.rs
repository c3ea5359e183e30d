//! Forced orbits: an orbit survives the pruning when none of its points lies
//! in the open pruning region of the generator.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::nbt::Rational;
use crate::orbit::{
    build_homoclinic, enumerate_periodic, Generator, HomoclinicOrbit, PeriodicOrbit,
};
use crate::region::{limiting_structure, region_for, PruningRegion};
use crate::symbolic::{PlanePoint, TailSeq, Word};

/// Either kind of orbit, for the pairwise queries.
#[derive(Debug, Clone)]
pub enum AnyOrbit {
    Periodic(PeriodicOrbit),
    Homoclinic(HomoclinicOrbit),
}

/// A point of the orbit found inside rectangle `rect`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Meeting {
    pub witness: PlanePoint,
    pub rect: usize,
}

/// `Ok(())` when the orbit avoids the region, the first meeting point
/// otherwise.
pub fn orbit_avoids(region: &PruningRegion, orbit: &AnyOrbit) -> std::result::Result<(), Meeting> {
    let hit = |p: PlanePoint| region.locate(&p).map(|rect| Meeting { witness: p, rect });
    match orbit {
        AnyOrbit::Periodic(o) => periodic_meeting(region, o).map_or(Ok(()), Err),
        AnyOrbit::Homoclinic(h) => {
            // outside the required window one coordinate is 0^∞
            let (points, cert) = h.points(h.required_window());
            debug_assert!(cert.complete);
            points
                .into_iter()
                .find_map(|(_, p)| hit(p))
                .map_or(Ok(()), Err)
        }
    }
}

fn periodic_meeting(region: &PruningRegion, o: &PeriodicOrbit) -> Option<Meeting> {
    o.points()
        .into_iter()
        .find_map(|p| region.locate(&p).map(|rect| Meeting { witness: p, rect }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Excluded {
    #[serde(flatten)]
    pub orbit: PeriodicOrbit,
    pub witness: PlanePoint,
    #[serde(rename = "rect_index")]
    pub rect: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcingReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<HomoclinicOrbit>,
    pub region: PruningRegion,
    #[serde(rename = "maxPeriod")]
    pub max_period: usize,
    pub forced: Vec<PeriodicOrbit>,
    pub excluded: Vec<Excluded>,
}

/// Splits every orbit of period `≤ max_period` into survivors and orbits
/// meeting the region, keeping the enumeration order.
pub fn forced_periodic(region: &PruningRegion, max_period: usize) -> Result<ForcingReport> {
    let all = enumerate_periodic(max_period)?;
    let verdicts: Vec<Option<Meeting>> = all
        .par_iter()
        .map(|o| periodic_meeting(region, o))
        .collect();
    let mut forced = Vec::new();
    let mut excluded = Vec::new();
    for (orbit, verdict) in all.into_iter().zip(verdicts) {
        match verdict {
            None => forced.push(orbit),
            Some(Meeting { witness, rect }) => excluded.push(Excluded {
                orbit,
                witness,
                rect,
            }),
        }
    }
    Ok(ForcingReport {
        generator: None,
        region: region.clone(),
        max_period,
        forced,
        excluded,
    })
}

/// [`forced_periodic`] for the region of `generator`, recording it.
pub fn forcing_report(generator: &Generator, max_period: usize) -> Result<ForcingReport> {
    let orbit = build_homoclinic(generator)?;
    let region = supported_region(generator, &orbit)?;
    let mut report = forced_periodic(&region, max_period)?;
    report.generator = Some(orbit);
    Ok(report)
}

fn supported_region(generator: &Generator, orbit: &HomoclinicOrbit) -> Result<PruningRegion> {
    if !orbit.is_supported() {
        return Err(Error::UnsupportedFamily(orbit.to_string()));
    }
    region_for(generator)
}

/// Whether the region of `a` leaves the orbit `b` untouched, so that `a`
/// forces `b`. A `false` answer only means `b` meets the region.
pub fn forces_pair(a: &Generator, b: &AnyOrbit) -> Result<bool> {
    let orbit = build_homoclinic(a)?;
    let region = supported_region(a, &orbit)?;
    Ok(orbit_avoids(&region, b).is_ok())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderQuery {
    MaximalPair(Word, Word),
    StarPair(Rational, Rational),
    PListCombinatorics(Vec<Rational>, Vec<Rational>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sufficient {
    Forces,
    Unknown,
}

fn completed(w: &Word) -> TailSeq {
    TailSeq::with_prefix(&w.concat(&"01".parse().expect("binary")), &TailSeq::zeros())
}

/// The sufficient conditions for `lhs` forcing `rhs` within one family.
/// `Unknown` is not a proof of non-forcing.
pub fn sufficient_order_check(query: &OrderQuery) -> Result<Sufficient> {
    let holds = match query {
        OrderQuery::MaximalPair(w, v) => {
            for word in [w, v] {
                crate::region::require_maximal(word)?;
            }
            completed(w) >= completed(v) && completed(&w.reversed()) >= completed(&v.reversed())
        }
        OrderQuery::StarPair(q, r) => q >= r,
        OrderQuery::PListCombinatorics(qs, rs) => {
            if qs.len() != rs.len() {
                return Err(Error::Mismatch(format!(
                    "P-lists of lengths {} and {}",
                    qs.len(),
                    rs.len()
                )));
            }
            for list in [qs, rs] {
                let p = limiting_structure(list)?;
                if let Some((limiting, successor, intruder)) = p.violation {
                    return Err(Error::NotAPList {
                        limiting,
                        successor,
                        intruder,
                    });
                }
            }
            let n = qs.len();
            let same = (0..n).all(|i| (0..n).all(|j| (qs[i] < qs[j]) == (rs[i] < rs[j])));
            same && qs.iter().zip(rs).all(|(q, r)| q < r)
        }
    };
    Ok(if holds {
        Sufficient::Forces
    } else {
        Sufficient::Unknown
    })
}

/// One direction of a comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Direction {
    /// The other orbit avoids this generator's region.
    Forces,
    /// The other orbit meets the region at `witness`.
    Meets {
        witness: PlanePoint,
        rect_index: usize,
    },
    /// This generator has no pruning region.
    Unsupported,
}

/// Both directions of forcing between two homoclinic orbits, plus the
/// sufficient check when both belong to the same family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub a: HomoclinicOrbit,
    pub b: HomoclinicOrbit,
    pub a_forces_b: Direction,
    pub b_forces_a: Direction,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sufficient_a_b: Option<Sufficient>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sufficient_b_a: Option<Sufficient>,
}

fn direction(
    a: &Generator,
    orbit_a: &HomoclinicOrbit,
    orbit_b: &HomoclinicOrbit,
) -> Result<Direction> {
    if !orbit_a.is_supported() {
        return Ok(Direction::Unsupported);
    }
    let region = region_for(a)?;
    Ok(
        match orbit_avoids(&region, &AnyOrbit::Homoclinic(orbit_b.clone())) {
            Ok(()) => Direction::Forces,
            Err(Meeting { witness, rect }) => Direction::Meets {
                witness,
                rect_index: rect,
            },
        },
    )
}

fn same_family_query(a: &Generator, b: &Generator) -> Option<OrderQuery> {
    match (a, b) {
        (Generator::Decoration(w), Generator::Decoration(v)) => {
            Some(OrderQuery::MaximalPair(w.clone(), v.clone()))
        }
        (Generator::Star(q), Generator::Star(r)) => Some(OrderQuery::StarPair(*q, *r)),
        (Generator::PList(qs), Generator::PList(rs)) if qs.len() == rs.len() => {
            Some(OrderQuery::PListCombinatorics(qs.clone(), rs.clone()))
        }
        _ => None,
    }
}

pub fn compare(a: &Generator, b: &Generator) -> Result<Comparison> {
    let orbit_a = build_homoclinic(a)?;
    let orbit_b = build_homoclinic(b)?;
    let sufficient = |x: &Generator, y: &Generator| {
        same_family_query(x, y).and_then(|query| sufficient_order_check(&query).ok())
    };
    Ok(Comparison {
        a_forces_b: direction(a, &orbit_a, &orbit_b)?,
        b_forces_a: direction(b, &orbit_b, &orbit_a)?,
        sufficient_a_b: sufficient(a, b),
        sufficient_b_a: sufficient(b, a),
        a: orbit_a,
        b: orbit_b,
    })
}
