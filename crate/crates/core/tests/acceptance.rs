//! Acceptance gate: runs every criterion with its tolerance and time limit
//! and prints one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hsforce::forcing::AnyOrbit;
use hsforce::nbt::parse_rational_list;
use hsforce::orbit::PeriodicOrbit;
use hsforce::region::{
    limiting_structure, unshrunk_maximal_domain, unstable_anchor, Side, DEFAULT_BOUND,
};
use hsforce::report::{render_region, Format};
use hsforce::{
    build_homoclinic, cmp_unimodal, forced_periodic, forces_pair, nbt_code, region_maximal,
    region_plist, region_star, verify_pruning_domain, Generator, PruningRegion, Rational, TailSeq,
    Verdict, Word,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(
        elapsed < limit,
        format!(
            "{what} took {:.3}s, limit {:.3}s",
            elapsed.as_secs_f64(),
            limit.as_secs_f64()
        ),
    )
}

fn q(s: &str) -> Rational {
    s.parse().expect("rational")
}

fn ts(s: &str) -> TailSeq {
    s.parse().expect("sequence")
}

fn forced_codes(region: &PruningRegion, max: usize) -> BTreeSet<Vec<u8>> {
    forced_periodic(region, max)
        .expect("within cap")
        .forced
        .iter()
        .map(|o| common::necklace(o.code.symbols()))
        .collect()
}

fn nbt_golden() -> Outcome {
    for (input, expected) in [("2/7", "10011001"), ("1/3", "1001"), ("2/5", "101101")] {
        let start = Instant::now();
        let code = nbt_code(q(input)).map_err(|e| e.to_string())?;
        within(
            start.elapsed(),
            Duration::from_millis(1),
            &format!("nbt_code({input})"),
        )?;
        ensure(
            code.word.to_string() == expected,
            format!("nbt_code({input}) = {}, expected {expected}", code.word),
        )?;
    }
    Ok("3 golden codes".into())
}

fn nbt_invariants() -> Outcome {
    let start = Instant::now();
    let fractions = common::fractions(200);
    for &(m, n) in &fractions {
        let code =
            nbt_code(Rational::new(m, n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let w = code.word.symbols();
        let label = format!("{m}/{n}");
        ensure(
            w.len() as u64 == n + 1,
            format!("{label}: length {}", w.len()),
        )?;
        ensure(
            w.iter().eq(w.iter().rev()),
            format!("{label}: not a palindrome"),
        )?;
        ensure(
            w.iter().filter(|&&b| b == 1).count() as u64 == 2 * m,
            format!("{label}: wrong number of ones"),
        )?;
        ensure(
            common::has_nbt_shape(w, m as usize),
            format!("{label}: bad shape {}", code.word),
        )?;
        ensure(
            w == common::nbt(m, n).as_slice(),
            format!("{label}: differs from reference"),
        )?;
    }
    within(start.elapsed(), Duration::from_secs(5), "sweep")?;
    Ok(format!("{} rationals", fractions.len()))
}

fn hall_order() -> Outcome {
    let fractions = common::fractions(30);
    let mut blocks = Vec::new();
    for &(m, n) in &fractions {
        let mut w = nbt_code(Rational::new(m, n).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?
            .word;
        w.push(0);
        blocks.push(((m, n), TailSeq::periodic(&w).map_err(|e| e.to_string())?));
    }
    let mut pairs = 0;
    let mut violations = Vec::new();
    for (a, sa) in &blocks {
        for (b, sb) in &blocks {
            // a < b as fractions
            if a.0 * b.1 < b.0 * a.1 {
                pairs += 1;
                let lib = cmp_unimodal(sa, sb);
                let reference = common::compare(
                    &common::expand(&sa.to_string()),
                    &common::expand(&sb.to_string()),
                );
                if lib != std::cmp::Ordering::Greater || reference != std::cmp::Ordering::Greater {
                    violations.push(format!("{}/{} vs {}/{}", a.0, a.1, b.0, b.1));
                }
            }
        }
    }
    ensure(
        violations.is_empty(),
        format!(
            "{} violations, first {:?}",
            violations.len(),
            violations.first()
        ),
    )?;
    Ok(format!("{pairs} pairs"))
}

fn plist_example() -> Outcome {
    let qs = parse_rational_list("2/5,2/7,1/3").map_err(|e| e.to_string())?;
    let start = Instant::now();
    let p = limiting_structure(&qs).map_err(|e| e.to_string())?;
    let region = region_plist(&qs).map_err(|e| e.to_string())?;
    let anchors = [unstable_anchor(&p, 1), unstable_anchor(&p, 3)];
    let elapsed = start.elapsed();
    ensure(
        p.limiting.iter().copied().eq([1, 3]),
        format!("limiting {:?}", p.limiting),
    )?;
    ensure(
        p.successor
            .iter()
            .map(|(&i, &j)| (i, j))
            .eq([(1, 3), (3, 4)]),
        format!("successors {:?}", p.successor),
    )?;
    ensure(p.is_plist, "not a P-list")?;
    ensure(region.rectangles.len() == 2, "expected two rectangles")?;
    let texts: Vec<String> = anchors
        .iter()
        .map(|a| a.as_ref().map(ToString::to_string).unwrap_or_default())
        .collect();
    ensure(
        texts == ["(1011010100110011)", "(10011)"],
        format!("unstable anchors {texts:?}"),
    )?;
    within(elapsed, Duration::from_millis(10), "P-list analysis")?;
    Ok("limiting {C1, C3}, anchors verbatim".into())
}

fn star_anchor_and_monotonicity() -> Outcome {
    let start = Instant::now();
    let r27 = region_star(q("2/7")).map_err(|e| e.to_string())?;
    ensure(
        r27.rectangles[0].x_min == ts("0110010(0)"),
        format!("x_min {}", r27.rectangles[0].x_min),
    )?;
    let qs = Rational::farey(11);
    let rects: Vec<_> = qs
        .iter()
        .map(|&x| region_star(x).map(|r| r.rectangles[0].clone()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let forced: Vec<_> = rects
        .iter()
        .map(|r| {
            forced_codes(
                &PruningRegion {
                    rectangles: vec![r.clone()],
                },
                12,
            )
        })
        .collect();
    let mut violations = Vec::new();
    for i in 0..qs.len() {
        for j in 0..qs.len() {
            let ge = qs[i] >= qs[j];
            let nested = rects[i].is_inside(&rects[j]);
            let superset = forced[i].is_superset(&forced[j]);
            if ge != nested || ge != superset {
                violations.push(format!(
                    "{} vs {}: ge={ge} nested={nested} superset={superset}",
                    qs[i], qs[j]
                ));
            }
        }
    }
    ensure(
        violations.is_empty(),
        format!(
            "{} violations, first {:?}",
            violations.len(),
            violations.first()
        ),
    )?;
    within(start.elapsed(), Duration::from_secs(30), "star sweep")?;
    Ok(format!(
        "{} rationals, {} ordered pairs",
        qs.len(),
        qs.len() * qs.len()
    ))
}

fn verifier() -> Outcome {
    let plist = region_plist(&parse_rational_list("2/5,2/7,1/3").map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let cases = [
        (
            "star 2/7",
            region_star(q("2/7")).map_err(|e| e.to_string())?.rectangles[0].clone(),
        ),
        (
            "maximal 11",
            region_maximal(&"11".parse().map_err(|e: hsforce::Error| e.to_string())?)
                .map_err(|e| e.to_string())?
                .rectangles[0]
                .clone(),
        ),
        ("plist first rectangle", plist.rectangles[0].clone()),
    ];
    for (name, rect) in &cases {
        let start = Instant::now();
        let verdict = verify_pruning_domain(rect, None, DEFAULT_BOUND);
        within(start.elapsed(), Duration::from_secs(1), name)?;
        ensure(verdict.is_verified(), format!("{name}: {verdict:?}"))?;
    }
    let w: Word = "11".parse().map_err(|e: hsforce::Error| e.to_string())?;
    let big = unshrunk_maximal_domain(&w).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let verdict = verify_pruning_domain(&big, None, DEFAULT_BOUND);
    within(start.elapsed(), Duration::from_secs(1), "unshrunk domain")?;
    let Verdict::Violated { n, side, witness } = verdict else {
        return Err(format!("unshrunk domain: {verdict:?}"));
    };
    ensure(big.contains(&witness), "witness is not inside the domain")?;
    // replay the witness with the reference comparison
    let x = common::expand(&witness.forward.to_string());
    let y = common::expand(&witness.backward.to_string());
    let reference = common::Rect {
        x_min: common::expand(&big.x_min.to_string()),
        x_max: common::expand(&big.x_max.to_string()),
        y_min: common::expand(&big.y_min.to_string()),
        y_max: common::expand(&big.y_max.to_string()),
    };
    ensure(
        common::inside(&reference, &x, &y),
        "reference check puts the witness outside",
    )?;
    let image = match side {
        Side::Stable => big.x_min.shift(n) == witness.forward,
        Side::Unstable => {
            big.y_min.shift(n) == witness.backward || big.y_max.shift(n) == witness.backward
        }
    };
    ensure(image, "witness is not on the offending iterate")?;
    let again = verify_pruning_domain(&big, None, DEFAULT_BOUND);
    ensure(
        again
            == Verdict::Violated {
                n,
                side,
                witness: witness.clone(),
            },
        "witness not reproducible",
    )?;
    Ok(format!(
        "3 verified; unshrunk violated at n = {n} ({side}) by {witness}"
    ))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let generators = [
        Generator::Star(q("2/7")),
        Generator::Decoration("11".parse().map_err(|e: hsforce::Error| e.to_string())?),
        Generator::PList(parse_rational_list("2/5,2/7,1/3").map_err(|e| e.to_string())?),
    ];
    let mut sizes = Vec::new();
    for g in &generators {
        let region = hsforce::region::region_for(g).map_err(|e| e.to_string())?;
        let json = render_region(&region, Format::Json).map_err(|e| e.to_string())?;
        let expected = common::forced_set(&common::rects_from_json(&json), 12);
        let got = forced_codes(&region, 12);
        ensure(
            got == expected,
            format!(
                "{g}: library {} orbits, reference {}; symmetric difference {:?}",
                got.len(),
                expected.len(),
                got.symmetric_difference(&expected)
                    .map(|w| common::word_text(w))
                    .take(5)
                    .collect::<Vec<_>>()
            ),
        )?;
        sizes.push(got.len());
    }
    within(
        start.elapsed(),
        Duration::from_secs(60),
        "oracle comparison",
    )?;
    Ok(format!("forced set sizes {sizes:?}"))
}

fn self_forcing_and_boundary() -> Outcome {
    let mut generators: Vec<Generator> = Rational::farey(11)
        .into_iter()
        .map(Generator::Star)
        .collect();
    for len in 1..=10usize {
        for bits in 0u32..(1 << len) {
            let w = Word::new((0..len).map(|i| ((bits >> i) & 1) as u8).collect())
                .map_err(|e| e.to_string())?;
            if hsforce::is_maximal_decoration(&w).map_err(|e| e.to_string())? {
                generators.push(Generator::Decoration(w));
            }
        }
    }
    let small = Rational::farey(7);
    for a in &small {
        for b in small.iter().filter(|&b| b != a) {
            generators.push(Generator::PList(vec![*a, *b]));
            for c in small.iter().filter(|&c| c != a && c != b) {
                generators.push(Generator::PList(vec![*a, *b, *c]));
            }
        }
    }
    for g in &generators {
        let own = AnyOrbit::Homoclinic(build_homoclinic(g).map_err(|e| e.to_string())?);
        ensure(
            forces_pair(g, &own).map_err(|e| e.to_string())?,
            format!("{g} meets its own region"),
        )?;
    }
    let fixed = AnyOrbit::Periodic(PeriodicOrbit {
        code: "1".parse().map_err(|e: hsforce::Error| e.to_string())?,
    });
    let stars = Rational::farey(30);
    for &s in &stars {
        ensure(
            forces_pair(&Generator::Star(s), &fixed).map_err(|e| e.to_string())?,
            format!("1^∞ not forced by star {s}"),
        )?;
    }

    // a compact run of the order and region properties
    let mut runner = TestRunner::new(Config {
        cases: 256,
        ..Config::default()
    });
    let seq = (
        proptest::collection::vec(0u8..2, 0..8),
        proptest::collection::vec(0u8..2, 1..8),
    );
    runner
        .run(
            &(seq.clone(), seq.clone(), seq),
            |((pa, qa), (pb, qb), (pc, qc))| {
                let mk = |p: Vec<u8>, q: Vec<u8>| {
                    TailSeq::new(&Word::new(p).unwrap(), &Word::new(q).unwrap()).unwrap()
                };
                let (a, b, c) = (mk(pa, qa), mk(pb, qb), mk(pc, qc));
                prop_assert_eq!(cmp_unimodal(&a, &b), cmp_unimodal(&b, &a).reverse());
                if a <= b && b <= c {
                    prop_assert!(a <= c);
                }
                prop_assert!(a <= TailSeq::fold());
                let reference = common::compare(
                    &common::expand(&a.to_string()),
                    &common::expand(&b.to_string()),
                );
                prop_assert_eq!(cmp_unimodal(&a, &b), reference);
                Ok(())
            },
        )
        .map_err(|e| format!("order properties: {e}"))?;
    Ok(format!(
        "{} generators avoid their own regions; 1^∞ forced by {} stars; property run green",
        generators.len(),
        stars.len()
    ))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_hsforce");
    let args = [
        "forced",
        "--star",
        "2/7",
        "--max-period",
        "16",
        "--format",
        "csv",
    ];
    let mut outputs = Vec::new();
    for _ in 0..2 {
        let start = Instant::now();
        let out = Command::new(bin)
            .args(args)
            .env("RAYON_NUM_THREADS", "1")
            .env_remove("HSFORCE_CAP")
            .output()
            .map_err(|e| e.to_string())?;
        within(
            start.elapsed(),
            Duration::from_secs(5),
            "single-threaded run",
        )?;
        ensure(
            out.status.success(),
            format!("exit status {:?}", out.status.code()),
        )?;
        outputs.push(out.stdout);
    }
    ensure(outputs[0] == outputs[1], "outputs differ")?;
    ensure(!outputs[0].is_empty(), "empty output")?;
    Ok(format!("{} identical bytes", outputs[0].len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("NBT golden values", nbt_golden),
        ("NBT invariants for n <= 200", nbt_invariants),
        ("Hall order for denominators <= 30", hall_order),
        ("P-list worked example", plist_example),
        (
            "star anchor, nesting and monotonicity",
            star_anchor_and_monotonicity,
        ),
        ("pruning-domain verifier", verifier),
        ("oracle equivalence at period 12", oracle_equivalence),
        (
            "self-forcing and boundary semantics",
            self_forcing_and_boundary,
        ),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {} {name} ({secs:.3}s): {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.3}s): {reason}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
