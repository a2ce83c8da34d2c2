//! `antipodal`: solve, classify, transform, verify, and draw extremal
//! antipodal polygons, plus the d-dimensional constructions.

use antipodal_cli::{music, setfile, svg};

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use antipodal::{
    brute_extremes, build_counterexample_d, build_even_counterexample, gale_set,
    hemisphere_min_count, hull_volume, is_thick, is_thin, polygon_area, solve_k, solve_max_area,
    solve_min_area, thick_threshold, thicken, AngleUnit, AntipodalSet, Objective, Selection,
};
use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use nalgebra::DVector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Copy, Clone, ValueEnum)]
enum UnitArg {
    Deg,
    Rad,
}

impl From<UnitArg> for AngleUnit {
    fn from(u: UnitArg) -> AngleUnit {
        match u {
            UnitArg::Deg => AngleUnit::Degrees,
            UnitArg::Rad => AngleUnit::Radians,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum ObjectiveArg {
    Min,
    Max,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Objective {
        match o {
            ObjectiveArg::Min => Objective::Min,
            ObjectiveArg::Max => Objective::Max,
        }
    }
}

#[derive(Parser)]
#[command(name = "antipodal", version, about = "Extremal antipodal polygons and polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find the minimum- or maximum-area antipodal polygon on a set
    Solve {
        /// Set file: one angle per line, '#' comments
        set: PathBuf,
        #[arg(long, value_enum)]
        objective: ObjectiveArg,
        /// Solve the (2n, k) variant over polygons with k vertices
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = UnitArg::Deg)]
        unit: UnitArg,
    },
    /// Report thin/thick flags and the area of one selection
    Classify {
        set: PathBuf,
        /// Selection bitstring, pair 1 first, '1' = antipode
        #[arg(long)]
        selection: String,
        #[arg(long, value_enum, default_value_t = UnitArg::Deg)]
        unit: UnitArg,
    },
    /// Run the exhaustive oracle suites on seeded random sets
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Thicken a selection by area-increasing flips, printing each step
    Flips {
        set: PathBuf,
        #[arg(long)]
        selection: String,
        #[arg(long, value_enum, default_value_t = UnitArg::Deg)]
        unit: UnitArg,
    },
    /// Build the even-n set where a non-thick polygon beats a thick one
    Counterexample {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 0.01)]
        eta: f64,
        /// Also render P and Q to an SVG file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the d-dimensional pair of hulls with volume ratio near 2^(d-2)
    Polytope {
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 0.01)]
        eps: f64,
    },
    /// Sample the moment curve so every open hemisphere holds at least k points
    Gale {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
    },
    /// Maximally even tritone-free scale on the 12-tone pitch clock
    Scales,
    /// Render a set with up to four overlaid selections as SVG
    Plot {
        set: PathBuf,
        /// Selection bitstring; repeat for overlays (default: min and max)
        #[arg(long = "selection")]
        selections: Vec<String>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = UnitArg::Deg)]
        unit: UnitArg,
    },
    /// Time the linear solvers on large seeded sets
    Bench {
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Solve { set, objective, k, unit } => {
            cmd_solve(&set, objective.into(), k, unit.into())
        }
        Command::Classify { set, selection, unit } => cmd_classify(&set, &selection, unit.into()),
        Command::Verify { max_n, seed } => cmd_verify(max_n, seed),
        Command::Flips { set, selection, unit } => cmd_flips(&set, &selection, unit.into()),
        Command::Counterexample { n, eta, out } => cmd_counterexample(n, eta, out.as_deref()),
        Command::Polytope { d, eps } => cmd_polytope(d, eps),
        Command::Gale { d, k } => cmd_gale(d, k),
        Command::Scales => cmd_scales(),
        Command::Plot { set, selections, out, unit } => {
            cmd_plot(&set, &selections, &out, unit.into())
        }
        Command::Bench { seed } => cmd_bench(seed),
    }
}

fn parse_selection(set: &AntipodalSet, text: &str) -> Result<Selection> {
    let sel = Selection::from_str(text).context("invalid selection bitstring")?;
    sel.check_against(set)?;
    Ok(sel)
}

fn classification(set: &AntipodalSet, sel: &Selection) -> &'static str {
    if is_thin(set, sel) {
        "thin"
    } else if is_thick(set, sel) {
        "thick"
    } else {
        "neither"
    }
}

fn fmt_vector(v: &DVector<f64>) -> String {
    let coords: Vec<String> = v.iter().map(|c| format!("{c:.12}")).collect();
    format!("({})", coords.join(", "))
}

fn fmt_pairs_one_based(pairs: &[usize]) -> String {
    let parts: Vec<String> = pairs.iter().map(|p| (p + 1).to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn cmd_solve(
    path: &Path,
    objective: Objective,
    k: Option<usize>,
    unit: AngleUnit,
) -> Result<ExitCode> {
    let set = setfile::parse_set_file(path, unit)?;
    println!("n = {}", set.n());
    println!(
        "objective = {}",
        match objective {
            Objective::Min => "min",
            Objective::Max => "max",
        }
    );
    match k {
        None => {
            let result = match objective {
                Objective::Min => solve_min_area(&set),
                Objective::Max => solve_max_area(&set),
            };
            println!("selection = {}", result.selection);
            println!("area = {:.6}", result.area);
            println!("classification = {}", classification(&set, &result.selection));
            println!("optima = {}", result.optima_count);
        }
        Some(k) => {
            let result = solve_k(&set, k, objective)?;
            let kept: Vec<f64> = set
                .angles()
                .iter()
                .enumerate()
                .filter(|(i, _)| !result.excluded_pairs.contains(i))
                .map(|(_, &a)| a)
                .collect();
            let subset = AntipodalSet::new(&kept, AngleUnit::Radians, set.tolerance())?;
            println!("k = {k}");
            println!("excluded_pairs = {}", fmt_pairs_one_based(&result.excluded_pairs));
            println!("selection = {}", result.selection);
            println!("area = {:.6}", result.area);
            println!("classification = {}", classification(&subset, &result.selection));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(path: &Path, selection: &str, unit: AngleUnit) -> Result<ExitCode> {
    let set = setfile::parse_set_file(path, unit)?;
    let sel = parse_selection(&set, selection)?;
    println!("n = {}", set.n());
    println!("selection = {sel}");
    println!("area = {:.6}", polygon_area(&set, &sel));
    println!("thin = {}", is_thin(&set, &sel));
    println!("thick = {}", is_thick(&set, &sel));
    println!("min_open_half_plane = {}", antipodal::min_side_count(&set, &sel));
    println!("threshold = {}", thick_threshold(set.n()));
    println!("classification = {}", classification(&set, &sel));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(max_n: usize, seed: u64) -> Result<ExitCode> {
    if !(3..=12).contains(&max_n) {
        bail!("--max-n must be between 3 and 12 (exhaustive suites)");
    }
    const SETS_PER_N: usize = 25;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all_passed = true;
    for n in 3..=max_n {
        let mut thin_checked = 0usize;
        let mut thin_violations = 0usize;
        let mut thick_checked = 0usize;
        let mut thick_violations = 0usize;
        let mut agreement_violations = 0usize;
        for _ in 0..SETS_PER_N {
            let set = AntipodalSet::random(n, &mut rng)?;
            let thin = antipodal::verify_thin_theorem(&set)?;
            thin_checked += thin.instances_tested;
            thin_violations += thin.violations.len();
            let thick = antipodal::verify_thick_claims(&set)?;
            thick_checked += thick.instances_tested;
            thick_violations += thick.violations.len();

            let (bmin, bmax) = brute_extremes(&set)?;
            let smin = solve_min_area(&set);
            let smax = solve_max_area(&set);
            let min_ok = (bmin.area - smin.area).abs() <= 1e-9 * bmin.area.max(1.0)
                && is_thin(&set, &smin.selection);
            let max_ok = (bmax.area - smax.area).abs() <= 1e-9 * bmax.area.max(1.0)
                && is_thick(&set, &smax.selection);
            if !min_ok || !max_ok {
                agreement_violations += 1;
            }
        }
        let report = |property: &str, checked: usize, violations: usize| {
            println!(
                "report: property = \"{property}\" n = {n} sets = {SETS_PER_N} checked = {checked} violations = {violations} status = {}",
                if violations == 0 { "passed" } else { "FAILED" }
            );
            violations == 0
        };
        all_passed &= report("thin minimum beats every non-thin", thin_checked, thin_violations);
        all_passed &= report("thick maximum claims", thick_checked, thick_violations);
        all_passed &=
            report("linear solvers match enumeration", 2 * SETS_PER_N, agreement_violations);
    }
    println!("verify = {}", if all_passed { "passed" } else { "failed" });
    Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_flips(path: &Path, selection: &str, unit: AngleUnit) -> Result<ExitCode> {
    let set = setfile::parse_set_file(path, unit)?;
    let sel = parse_selection(&set, selection)?;
    println!("start = {sel}");
    println!("area_start = {:.6}", polygon_area(&set, &sel));
    let (result, log) = thicken(&set, &sel);
    if log.steps.is_empty() {
        println!("steps = 0 (no flip applies)");
    } else {
        print!("{log}");
        println!("steps = {}", log.steps.len());
    }
    println!("result = {result}");
    println!("area = {:.6}", polygon_area(&set, &result));
    println!("thick = {}", is_thick(&set, &result));
    Ok(ExitCode::SUCCESS)
}

fn cmd_counterexample(n: usize, eta: f64, out: Option<&Path>) -> Result<ExitCode> {
    let (set, p, q) = build_even_counterexample(n, eta)?;
    let area_p = polygon_area(&set, &p);
    let area_q = polygon_area(&set, &q);
    println!("n = {n}");
    println!("eta = {eta}");
    for (i, &a) in set.angles().iter().enumerate() {
        println!("angle[{}] = {a:.12}", i + 1);
    }
    println!("P = {p}");
    println!("Q = {q}");
    println!("area_P = {area_p:.6}");
    println!("area_Q = {area_q:.6}");
    println!("thick_P = {}", is_thick(&set, &p));
    println!("thick_Q = {}", is_thick(&set, &q));
    println!("note = Q non-thick beats P thick");
    if let Some(path) = out {
        let mut file = std::fs::File::create(path)
            .with_context(|| format!("cannot write {}", path.display()))?;
        let bytes = svg::emit_svg(&set, &[p, q], &mut file)?;
        println!("out = {}", path.display());
        println!("svg_bytes = {bytes}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_polytope(d: usize, eps: f64) -> Result<ExitCode> {
    let (t1, t2) = build_counterexample_d(d, eps)?;
    let h1 = hull_volume(&t1)?;
    let h2 = hull_volume(&t2)?;
    println!("d = {d}");
    println!("eps = {eps}");
    for (i, v) in t1.iter().enumerate() {
        println!("T1[{i}] = {}", fmt_vector(v));
    }
    for (i, v) in t2.iter().enumerate() {
        println!("T2[{i}] = {}", fmt_vector(v));
    }
    println!("volume_T1 = {:.6}", h1.volume);
    println!("volume_T2 = {:.6}", h2.volume);
    println!("origin_inside_T1 = {}", h1.origin_inside);
    println!("origin_inside_T2 = {}", h2.origin_inside);
    println!("ratio = {:.6}", h1.volume / h2.volume);
    println!("limit = {}", 1u32 << (d - 2));
    Ok(ExitCode::SUCCESS)
}

fn cmd_gale(d: usize, k: usize) -> Result<ExitCode> {
    let points = gale_set(d, k)?;
    println!("d = {d}");
    println!("k = {k}");
    println!("points = {}", points.len());
    for (i, v) in points.iter().enumerate() {
        println!("x[{i}] = {}", fmt_vector(v));
    }
    let (count, witness) = hemisphere_min_count(&points)?;
    println!("min_open_hemisphere = {count}");
    println!("witness = {}", fmt_vector(&witness));
    println!("bound = {k}");
    let met = count >= k;
    println!("bound_met = {met}");
    Ok(if met { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_scales() -> Result<ExitCode> {
    let set = music::music_clock_set();
    println!("pitch_classes = {}", music::PITCH_CLASSES.join(" "));
    println!("pairs = {}", set.n());
    let best = solve_max_area(&set);
    let notes: Vec<&str> =
        best.selection.selected_positions().map(|j| music::PITCH_CLASSES[j]).collect();
    println!("objective = max");
    println!("selection = {}", best.selection);
    println!("area = {:.6}", best.area);
    println!("optima = {}", best.optima_count);
    println!("scale = {}", notes.join(" "));
    println!("tritone_free = true");
    Ok(ExitCode::SUCCESS)
}

fn cmd_plot(path: &Path, selections: &[String], out: &Path, unit: AngleUnit) -> Result<ExitCode> {
    let set = setfile::parse_set_file(path, unit)?;
    let sels: Vec<Selection> = if selections.is_empty() {
        vec![solve_min_area(&set).selection, solve_max_area(&set).selection]
    } else {
        selections.iter().map(|s| parse_selection(&set, s)).collect::<Result<_>>()?
    };
    if sels.len() > svg::MAX_OVERLAYS {
        eprintln!("error: at most {} selections can be overlaid", svg::MAX_OVERLAYS);
        return Ok(ExitCode::from(2));
    }
    let mut file =
        std::fs::File::create(out).with_context(|| format!("cannot write {}", out.display()))?;
    let bytes = svg::emit_svg(&set, &sels, &mut file)?;
    println!("out = {}", out.display());
    println!("selections = {}", sels.len());
    println!("svg_bytes = {bytes}");
    Ok(ExitCode::SUCCESS)
}

fn median_seconds(mut work: impl FnMut()) -> f64 {
    work();
    let mut times: Vec<f64> = (0..5)
        .map(|_| {
            let start = Instant::now();
            work();
            start.elapsed().as_secs_f64()
        })
        .collect();
    times.sort_by(|a, b| a.total_cmp(b));
    times[2]
}

fn cmd_bench(seed: u64) -> Result<ExitCode> {
    println!("seed = {seed}");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut previous: Option<(f64, f64)> = None;
    for power in 17..=20u32 {
        let n = 1usize << power;
        let set = AntipodalSet::random(n, &mut rng)?;
        let t_min = median_seconds(|| {
            std::hint::black_box(solve_min_area(std::hint::black_box(&set)));
        });
        let t_max = median_seconds(|| {
            std::hint::black_box(solve_max_area(std::hint::black_box(&set)));
        });
        print!("n = {n} solve_min_s = {t_min:.6} solve_max_s = {t_max:.6}");
        if let Some((pm, px)) = previous {
            print!(" growth_min = {:.3} growth_max = {:.3}", t_min / pm, t_max / px);
        }
        println!();
        previous = Some((t_min, t_max));
    }
    let set = AntipodalSet::random(1_000_000, &mut rng)?;
    let t_min = median_seconds(|| {
        std::hint::black_box(solve_min_area(std::hint::black_box(&set)));
    });
    let t_max = median_seconds(|| {
        std::hint::black_box(solve_max_area(std::hint::black_box(&set)));
    });
    println!("n = 1000000 solve_min_s = {t_min:.6} solve_max_s = {t_max:.6}");
    Ok(ExitCode::SUCCESS)
}
