//! Text, CSV and JSON tables and SVG plots of the library results.
//!
//! Every renderer is a pure function of its inputs, so equal inputs give
//! byte-identical output.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::ForcingReport;
use crate::nbt::NbtCode;
use crate::orbit::PeriodicOrbit;
use crate::region::{PruningRegion, Rectangle, Verdict};
use crate::symbolic::{embed_coordinate, Dyadic, PlanePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Mismatch(format!(
                "unknown format {other:?} (expected text, csv or json)"
            ))),
        }
    }
}

/// Pretty JSON followed by a newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Invariant(format!("serialization: {e}")))?;
    s.push('\n');
    Ok(s)
}

pub fn render_nbt(code: &NbtCode, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(format!("{}\n", code.word)),
        Format::Csv => Ok(format!("q,code\n{},{}\n", code.q, code.word)),
        Format::Json => to_json(code),
    }
}

const RECT_HEADER: &str = "rect_index,x_min,x_max,y_min,y_max,provenance";

fn rect_row(i: usize, r: &Rectangle) -> String {
    format!(
        "{i},{},{},{},{},{}",
        r.x_min, r.x_max, r.y_min, r.y_max, r.provenance
    )
}

pub fn render_region(region: &PruningRegion, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(region),
        Format::Csv => {
            let mut out = format!("{RECT_HEADER}\n");
            for (i, r) in region.rectangles.iter().enumerate() {
                writeln!(out, "{}", rect_row(i, r)).expect("string write");
            }
            Ok(out)
        }
        Format::Text => {
            let mut out = String::new();
            for (i, r) in region.rectangles.iter().enumerate() {
                writeln!(
                    out,
                    "[{i}] {}: x in ({}, {}), y in ({}, {})",
                    r.provenance, r.x_min, r.x_max, r.y_min, r.y_max
                )
                .expect("string write");
            }
            Ok(out)
        }
    }
}

/// CSV: the forced orbits as `period,code`, then a `# excluded` line and
/// the excluded orbits with their witness and rectangle.
pub fn render_forcing(report: &ForcingReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(report),
        Format::Csv => {
            let mut out = String::from("period,code\n");
            for o in &report.forced {
                writeln!(out, "{},{}", o.period(), o.code).expect("string write");
            }
            out.push_str("# excluded\nperiod,code,witness_forward,witness_backward,rect_index\n");
            for e in &report.excluded {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    e.orbit.period(),
                    e.orbit.code,
                    e.witness.forward,
                    e.witness.backward,
                    e.rect
                )
                .expect("string write");
            }
            Ok(out)
        }
        Format::Text => {
            let mut out = String::new();
            if let Some(g) = &report.generator {
                writeln!(out, "generator: {g}").expect("string write");
            }
            writeln!(out, "max period: {}", report.max_period).expect("string write");
            writeln!(out, "forced ({}):", report.forced.len()).expect("string write");
            for o in &report.forced {
                writeln!(out, "  {:>2} {}", o.period(), o.code).expect("string write");
            }
            writeln!(out, "excluded ({}):", report.excluded.len()).expect("string write");
            for e in &report.excluded {
                writeln!(
                    out,
                    "  {:>2} {} meets [{}] at {}",
                    e.orbit.period(),
                    e.orbit.code,
                    e.rect,
                    e.witness
                )
                .expect("string write");
            }
            Ok(out)
        }
    }
}

/// Verdict of one rectangle of a region.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RectVerdict {
    pub rect_index: usize,
    pub rectangle: Rectangle,
    pub verdict: Verdict,
}

pub fn render_verdicts(verdicts: &[RectVerdict], format: Format) -> Result<String> {
    let describe = |v: &Verdict| match v {
        Verdict::Verified {
            checked,
            cycle,
            unwitnessed,
        } => {
            let mut s = format!("verified (checked n <= {checked}, cycle {cycle})");
            if !unwitnessed.is_empty() {
                write!(
                    s,
                    ", {} iterates without a surviving witness",
                    unwitnessed.len()
                )
                .expect("string write");
            }
            s
        }
        Verdict::Violated { n, side, witness } => {
            format!("violated at n = {n} ({side} side), witness {witness}")
        }
        Verdict::Inconclusive { bound } => format!("inconclusive within bound {bound}"),
    };
    match format {
        Format::Json => to_json(verdicts),
        Format::Csv => {
            let mut out =
                String::from("rect_index,status,n,side,witness_forward,witness_backward\n");
            for v in verdicts {
                let row = match &v.verdict {
                    Verdict::Verified { checked, .. } => format!("verified,{checked},,,"),
                    Verdict::Violated { n, side, witness } => {
                        format!(
                            "violated,{n},{side},{},{}",
                            witness.forward, witness.backward
                        )
                    }
                    Verdict::Inconclusive { bound } => format!("inconclusive,{bound},,,"),
                };
                writeln!(out, "{},{row}", v.rect_index).expect("string write");
            }
            Ok(out)
        }
        Format::Text => {
            let mut out = String::new();
            for v in verdicts {
                writeln!(
                    out,
                    "[{}] {}: {}",
                    v.rect_index,
                    v.rectangle.provenance,
                    describe(&v.verdict)
                )
                .expect("string write");
            }
            Ok(out)
        }
    }
}

/// Plot settings. `depth` is the number of symbols used to place each
/// coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlotConfig {
    pub size: u32,
    pub depth: u32,
}

pub const MIN_PLOT_DEPTH: u32 = 8;
pub const MAX_PLOT_DEPTH: u32 = 64;

impl Default for PlotConfig {
    fn default() -> Self {
        PlotConfig {
            size: 512,
            depth: 16,
        }
    }
}

impl PlotConfig {
    pub fn new(size: u32, depth: u32) -> Result<Self> {
        if !(MIN_PLOT_DEPTH..=MAX_PLOT_DEPTH).contains(&depth) {
            return Err(Error::Mismatch(format!(
                "plot depth {depth} outside {MIN_PLOT_DEPTH}..={MAX_PLOT_DEPTH}"
            )));
        }
        if size == 0 {
            return Err(Error::Mismatch("plot size must be positive".into()));
        }
        Ok(PlotConfig { size, depth })
    }
}

/// Orbits drawn on top of the region, styled by whether they survive.
#[derive(Debug, Clone, Default)]
pub struct PlotOrbits {
    pub forced: Vec<PeriodicOrbit>,
    pub excluded: Vec<PeriodicOrbit>,
}

fn exact(d: Dyadic) -> String {
    format!("{}/2^{}", d.num, d.depth)
}

fn pixels(d: Dyadic, size: u32) -> f64 {
    d.to_f64() * f64::from(size)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn dot(out: &mut String, class: &str, id: &str, p: &PlanePoint, cfg: PlotConfig) {
    let x = embed_coordinate(&p.forward, cfg.depth);
    let y = embed_coordinate(&p.backward, cfg.depth);
    let size = f64::from(cfg.size);
    writeln!(
        out,
        r#"  <circle class="{class}" id="{id}" cx="{:.4}" cy="{:.4}" r="2" data-x="{}" data-y="{}"/>"#,
        pixels(x, cfg.size),
        size - pixels(y, cfg.size),
        exact(x),
        exact(y)
    )
    .expect("string write");
}

/// The symbol plane as an SVG square: the forward coordinate runs left to
/// right and the backward coordinate bottom to top, both placed by
/// [`embed_coordinate`] at `cfg.depth`. Rectangles are shaded boxes and
/// orbit points are dots.
pub fn emit_svg(
    region: &PruningRegion,
    orbits: &PlotOrbits,
    title: &str,
    cfg: PlotConfig,
) -> String {
    let size = cfg.size;
    let side = f64::from(size);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}" data-depth="{}">"#,
        cfg.depth
    )
    .expect("string write");
    writeln!(out, "  <title>{}</title>", escape(title)).expect("string write");
    writeln!(
        out,
        r#"  <metadata>{{"depth":{},"size":{},"rectangles":{},"forced":{},"excluded":{}}}</metadata>"#,
        cfg.depth,
        size,
        region.rectangles.len(),
        orbits.forced.len(),
        orbits.excluded.len()
    )
    .expect("string write");
    out.push_str(
        "  <style>.domain{fill:#4a7ab5;fill-opacity:0.35;stroke:#1d3f6e;stroke-width:1}\
         .forced{fill:#111111}.excluded{fill:none;stroke:#c0392b;stroke-width:1}</style>\n",
    );
    writeln!(
        out,
        r##"  <rect class="frame" x="0" y="0" width="{size}" height="{size}" fill="none" stroke="#000000"/>"##
    )
    .expect("string write");
    for (i, r) in region.rectangles.iter().enumerate() {
        let x0 = embed_coordinate(&r.x_min, cfg.depth);
        let x1 = embed_coordinate(&r.x_max, cfg.depth);
        let y0 = embed_coordinate(&r.y_min, cfg.depth);
        let y1 = embed_coordinate(&r.y_max, cfg.depth);
        let (px0, px1) = (pixels(x0, size), pixels(x1, size));
        let (py0, py1) = (side - pixels(y1, size), side - pixels(y0, size));
        writeln!(
            out,
            r#"  <rect class="domain" id="rect-{i}" x="{:.4}" y="{:.4}" width="{:.4}" height="{:.4}" data-x-min="{}" data-x-max="{}" data-y-min="{}" data-y-max="{}" data-provenance="{}"/>"#,
            px0,
            py0,
            px1 - px0,
            py1 - py0,
            exact(x0),
            exact(x1),
            exact(y0),
            exact(y1),
            escape(&r.provenance)
        )
        .expect("string write");
    }
    for (class, list) in [("forced", &orbits.forced), ("excluded", &orbits.excluded)] {
        for o in list {
            for (k, p) in o.points().iter().enumerate() {
                dot(&mut out, class, &format!("{class}-{}-{k}", o.code), p, cfg);
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
