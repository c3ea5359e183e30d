//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::forcing::{compare, forcing_report, Direction, Sufficient};
use crate::nbt::{nbt_code, parse_rational_list, Rational};
use crate::orbit::{build_homoclinic, Generator, HARD_PERIOD_CAP};
use crate::region::{
    region_for, unshrunk_maximal_domain, verify_pruning_domain, PruningRegion, DEFAULT_BOUND,
};
use crate::report::{
    emit_svg, render_forcing, render_nbt, render_region, render_verdicts, to_json, Format,
    PlotConfig, PlotOrbits, RectVerdict,
};
use crate::symbolic::{first_larger_shift, maximal_decoration_defect, Word};

/// Name of the environment variable that can lower the period cap.
pub const CAP_ENV: &str = "HSFORCE_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hsforce",
    version,
    about = "Pruning regions and forced orbits of horseshoe homoclinic orbits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GeneratorArgs {
    /// Maximal decoration w of the orbit 010wb.10 (b the parity of w)
    #[arg(long, value_name = "W")]
    maximal: Option<String>,
    /// Star orbit 0.c_q0 for a rational m/n in (0, 1/2)
    #[arg(long, value_name = "M/N")]
    star: Option<String>,
    /// Comma-separated rationals whose codes are concatenated
    #[arg(long, value_name = "LIST")]
    plist: Option<String>,
    /// Tagged generator: maximal:<w>, star:<m/n>, plist:<list> or code:01a<w>.b10
    #[arg(value_name = "GENERATOR")]
    tagged: Option<String>,
}

impl GeneratorArgs {
    fn generator(&self) -> Result<Generator> {
        if let Some(w) = &self.maximal {
            return Ok(Generator::Decoration(w.parse()?));
        }
        if let Some(q) = &self.star {
            return Ok(Generator::Star(q.parse()?));
        }
        if let Some(list) = &self.plist {
            return Ok(Generator::PList(parse_rational_list(list)?));
        }
        let tagged = self.tagged.as_deref().expect("clap requires one generator");
        Generator::parse_tagged(tagged)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the NBT code of a rational m/n in (0, 1/2)
    Nbt {
        #[arg(value_name = "M/N")]
        q: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Check whether w and its anchor word (w1 if w is even, w0 if odd) are shift-maximal
    MaximalCheck {
        #[arg(value_name = "W")]
        w: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Print the pruning region of a generator
    Region {
        #[command(flatten)]
        generator: GeneratorArgs,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// List the periodic orbits forced by a generator
    Forced {
        #[command(flatten)]
        generator: GeneratorArgs,
        #[arg(long, default_value_t = 12)]
        max_period: usize,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Decide forcing in both directions between two generators
    Compare {
        #[arg(value_name = "GEN_A")]
        a: String,
        #[arg(value_name = "GEN_B")]
        b: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Check that each rectangle of a region is a pruning domain
    Verify {
        #[command(flatten)]
        generator: GeneratorArgs,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
        /// Check the larger domain bounded by the generating orbit itself
        /// (decorations only)
        #[arg(long)]
        unshrunk: bool,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Draw the region and optionally the periodic orbits as SVG
    Plot {
        #[command(flatten)]
        generator: GeneratorArgs,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
        #[arg(long, default_value_t = PlotConfig::default().depth)]
        depth: u32,
        #[arg(long, default_value_t = PlotConfig::default().size)]
        size: u32,
        #[arg(long)]
        max_period: Option<usize>,
    },
}

/// Exit status for a library error: precondition failures are usage errors,
/// broken invariants are internal.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invariant(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

/// The period cap after applying the value of [`CAP_ENV`], which can only
/// lower it.
pub fn effective_cap(env: Option<&str>) -> Result<usize> {
    match env {
        None => Ok(HARD_PERIOD_CAP),
        Some(raw) => {
            let value: usize = raw.trim().parse().map_err(|_| {
                Error::Mismatch(format!("{CAP_ENV}={raw:?} is not a non-negative integer"))
            })?;
            Ok(value.min(HARD_PERIOD_CAP))
        }
    }
}

fn check_cap(requested: usize, cap: usize) -> Result<()> {
    if requested == 0 || requested > cap {
        return Err(Error::PeriodCap { requested, cap });
    }
    Ok(())
}

fn supported_region(generator: &Generator) -> Result<PruningRegion> {
    let orbit = build_homoclinic(generator)?;
    if !orbit.is_supported() {
        if let Generator::Decoration(w) = generator {
            crate::region::require_maximal(w)?;
        }
        return Err(Error::UnsupportedFamily(orbit.to_string()));
    }
    region_for(generator)
}

fn maximal_check(w: &Word, format: Format) -> Result<String> {
    let shift = first_larger_shift(w)?;
    let defect = maximal_decoration_defect(w)?;
    let parity = if w.parity().is_odd() { "odd" } else { "even" };
    Ok(match format {
        Format::Json => to_json(&serde_json::json!({
            "w": w,
            "shift_maximal": shift.is_none(),
            "maximal_decoration": defect.is_none(),
            "parity": parity,
            "defect": defect.as_ref().map(|(word, shift)| serde_json::json!({"word": word, "shift": shift})),
        }))?,
        Format::Csv => format!(
            "w,shift_maximal,maximal_decoration,parity,defect_word,defect_shift\n{w},{},{},{parity},{},{}\n",
            shift.is_none(),
            defect.is_none(),
            defect.as_ref().map(|(word, _)| word.to_string()).unwrap_or_default(),
            defect.as_ref().map(|(_, s)| s.to_string()).unwrap_or_default()
        ),
        Format::Text => match defect {
            None => format!("{w} is a maximal decoration ({parity})\n"),
            Some((word, s)) => format!(
                "{w} is not a maximal decoration: the shift by {s} of ({word})^∞ is larger{}\n",
                if shift.is_none() { " (w itself is shift-maximal)" } else { "" }
            ),
        },
    })
}

fn render_direction(d: &Direction) -> String {
    match d {
        Direction::Forces => "yes (orbit avoids the region)".into(),
        Direction::Meets {
            witness,
            rect_index,
        } => {
            format!("not shown (orbit meets rectangle {rect_index} at {witness})")
        }
        Direction::Unsupported => "unsupported (no pruning region)".into(),
    }
}

fn render_sufficient(s: Option<Sufficient>) -> &'static str {
    match s {
        Some(Sufficient::Forces) => "holds",
        Some(Sufficient::Unknown) => "does not hold",
        None => "not applicable",
    }
}

fn execute(cli: Cli, cap_env: Option<&str>, out: &mut dyn Write) -> Result<()> {
    let text = match cli.command {
        Command::Nbt { q, format } => {
            render_nbt(&nbt_code(q.parse::<Rational>()?)?, format.parse()?)?
        }
        Command::MaximalCheck { w, format } => maximal_check(&w.parse()?, format.parse()?)?,
        Command::Region { generator, format } => {
            let format: Format = format.parse()?;
            render_region(&supported_region(&generator.generator()?)?, format)?
        }
        Command::Forced {
            generator,
            max_period,
            format,
        } => {
            let format: Format = format.parse()?;
            check_cap(max_period, effective_cap(cap_env)?)?;
            let generator = generator.generator()?;
            supported_region(&generator)?;
            render_forcing(&forcing_report(&generator, max_period)?, format)?
        }
        Command::Compare { a, b, format } => {
            let format: Format = format.parse()?;
            let c = compare(&Generator::parse_tagged(&a)?, &Generator::parse_tagged(&b)?)?;
            match format {
                Format::Json => to_json(&c)?,
                Format::Csv => format!(
                    "direction,result\nA>=B,{}\nB>=A,{}\n",
                    matches!(c.a_forces_b, Direction::Forces),
                    matches!(c.b_forces_a, Direction::Forces)
                ),
                Format::Text => format!(
                    "A: {}\nB: {}\nA forces B: {}\nB forces A: {}\nsufficient condition A over B: {}\nsufficient condition B over A: {}\n",
                    c.a,
                    c.b,
                    render_direction(&c.a_forces_b),
                    render_direction(&c.b_forces_a),
                    render_sufficient(c.sufficient_a_b),
                    render_sufficient(c.sufficient_b_a)
                ),
            }
        }
        Command::Verify {
            generator,
            bound,
            unshrunk,
            format,
        } => {
            let format: Format = format.parse()?;
            if bound == 0 {
                return Err(Error::Mismatch("--bound must be at least 1".into()));
            }
            let generator = generator.generator()?;
            let verdicts = if unshrunk {
                let Generator::Decoration(w) = &generator else {
                    return Err(Error::UnsupportedFamily(
                        "--unshrunk needs --maximal".into(),
                    ));
                };
                let r = unshrunk_maximal_domain(w)?;
                vec![RectVerdict {
                    rect_index: 0,
                    verdict: verify_pruning_domain(&r, None, bound),
                    rectangle: r,
                }]
            } else {
                let region = supported_region(&generator)?;
                region
                    .rectangles
                    .iter()
                    .enumerate()
                    .map(|(i, r)| {
                        // later rectangles are checked for the map already pruned by the earlier ones
                        let earlier = (i > 0).then(|| PruningRegion {
                            rectangles: region.rectangles[..i].to_vec(),
                        });
                        RectVerdict {
                            rect_index: i,
                            verdict: verify_pruning_domain(r, earlier.as_ref(), bound),
                            rectangle: r.clone(),
                        }
                    })
                    .collect()
            };
            render_verdicts(&verdicts, format)?
        }
        Command::Plot {
            generator,
            out: path,
            depth,
            size,
            max_period,
        } => {
            let cfg = PlotConfig::new(size, depth)?;
            let generator = generator.generator()?;
            let region = supported_region(&generator)?;
            let mut orbits = PlotOrbits::default();
            if let Some(n) = max_period {
                check_cap(n, effective_cap(cap_env)?)?;
                let report = forcing_report(&generator, n)?;
                orbits.forced = report.forced;
                orbits.excluded = report.excluded.into_iter().map(|e| e.orbit).collect();
            }
            let svg = emit_svg(&region, &orbits, &generator.to_string(), cfg);
            std::fs::write(&path, svg).map_err(|e| Error::Output {
                path: path.display().to_string(),
                reason: e.to_string(),
            })?;
            format!("wrote {}\n", path.display())
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Invariant(format!("writing output: {e}")))
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the exit status. `cap_env` is the raw value of [`CAP_ENV`].
pub fn run<I, T>(args: I, cap_env: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(cli, cap_env, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
