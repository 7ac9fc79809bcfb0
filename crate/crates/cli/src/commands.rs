use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, Context};
use hypermajority::genlab::{brute_force, generate, verify, GenSpec};
use hypermajority::linear::colour_linear;
use hypermajority::lll::{default_max_rounds, inequality_values, resample_colour, threshold, ResampleRun};
use hypermajority::partition::colour_partition;
use hypermajority::rounder::round_weights;
use hypermajority::{io, Colouring, ExactField, Hypergraph, Rational};
use rayon::prelude::*;
use serde_json::Value;

use crate::output::{seconds_value, write_artifact, write_atomic, Failure, Reporter, Sink};
use crate::{Algorithm, Cli, ColourArgs, Command, GenerateArgs, OracleArgs, RoundArgs, ThresholdArgs, VerifyArgs};

type Outcome = Result<(), Failure>;

pub fn dispatch(cli: &Cli, reporter: Reporter) -> Outcome {
    match &cli.command {
        Command::Colour(args) => colour(cli, args, reporter),
        Command::Verify(args) => verify_cmd(args, reporter),
        Command::Round(args) => round(cli, args, reporter),
        Command::Threshold(args) => threshold_cmd(args, reporter),
        Command::Generate(args) => generate_cmd(cli, args, reporter),
        Command::Oracle(args) => oracle(args, reporter),
    }
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_hypergraph(path: &Path) -> anyhow::Result<Hypergraph> {
    io::parse_hypergraph(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn report_sink(output: Option<&PathBuf>) -> Sink {
    if output.is_some() {
        Sink::Stdout
    } else {
        Sink::Stderr
    }
}

fn write_trace(target: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match target {
        Some(path) => write_atomic(path, text),
        None => {
            eprint!("{text}");
            Ok(())
        }
    }
}

fn colour(cli: &Cli, args: &ColourArgs, reporter: Reporter) -> Outcome {
    let k = args.k as usize;
    if args.trace.is_some() && args.algorithm != Algorithm::Partition {
        return Err(Failure::Input(anyhow!("--trace is only available for --algorithm partition")));
    }
    if args.emit_split.is_some() && args.algorithm != Algorithm::Linear {
        return Err(Failure::Input(anyhow!("--emit-split is only available for --algorithm linear")));
    }
    if args.algorithm != Algorithm::RandomLll && (args.trials > 1 || args.max_rounds.is_some()) {
        return Err(Failure::Input(anyhow!(
            "--trials and --max-rounds are only available for --algorithm random-lll"
        )));
    }
    let h = read_hypergraph(&args.input)?;
    let reporter = reporter.to(report_sink(args.output.as_ref()));
    if args.algorithm == Algorithm::RandomLll && args.trials > 1 {
        return lll_trials(cli, args, &h, reporter);
    }

    let start = Instant::now();
    let colouring = match args.algorithm {
        Algorithm::Partition => {
            let out = colour_partition::<Rational>(&h, k)?;
            if let Some(target) = &args.trace {
                write_trace(target, &out.to_string())?;
            }
            out.colouring
        }
        Algorithm::Linear => {
            let out = colour_linear(&h, k)?;
            if let Some(path) = &args.emit_split {
                write_atomic(path, &out.split.to_string())?;
            }
            reporter.emit(&[
                ("split_max_degree", out.split_max_degree.into()),
                ("line_max_degree", out.line_max_degree.into()),
                ("colours_used", out.colours_used.into()),
            ]);
            out.colouring
        }
        Algorithm::RandomLll => {
            let max_rounds = args.max_rounds.unwrap_or_else(|| default_max_rounds(&h));
            let run = resample_colour(&h, k, cli.seed, max_rounds)?;
            emit_run(reporter, &run);
            if !run.succeeded() {
                reporter.summary(args.algorithm.name(), k, k + 1, false, start.elapsed().as_secs_f64());
                return Err(Failure::Invalid);
            }
            run.colouring().clone()
        }
    };
    let seconds = start.elapsed().as_secs_f64();
    if !cli.no_verify {
        self_verify(&h, k, &colouring)?;
    }
    write_artifact(args.output.as_deref(), &io::write_colouring(&colouring))?;
    reporter.summary(args.algorithm.name(), k, colouring.palette(), true, seconds);
    Ok(())
}

fn emit_run(reporter: Reporter, run: &ResampleRun) {
    reporter.emit(&[
        ("seed", run.seed.into()),
        ("rounds_used", run.rounds_used.into()),
        ("max_rounds", run.max_rounds.into()),
        ("outcome", if run.succeeded() { "success" } else { "exhausted" }.into()),
    ]);
}

fn self_verify(h: &Hypergraph, k: usize, colouring: &Colouring) -> Outcome {
    let report = verify(h, k, colouring)?;
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(Failure::Internal(anyhow!(
            "self-verification failed: vertex {} sees colour {} {} times, bound {} ({} violations)",
            v.vertex + 1,
            v.colour,
            v.count,
            v.bound,
            report.violations.len()
        ))),
    }
}

/// Seeded trials in a thread pool; results are reported in seed order.
fn lll_trials(cli: &Cli, args: &ColourArgs, h: &Hypergraph, reporter: Reporter) -> Outcome {
    let k = args.k as usize;
    let max_rounds = args.max_rounds.unwrap_or_else(|| default_max_rounds(h));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs as usize)
        .build()
        .map_err(|e| Failure::Internal(e.into()))?;
    let start = Instant::now();
    let seeds: Vec<u64> = (0..args.trials).map(|i| cli.seed.wrapping_add(i)).collect();
    let runs: Vec<ResampleRun> = pool.install(|| {
        seeds
            .par_iter()
            .map(|&seed| resample_colour(h, k, seed, max_rounds))
            .collect::<hypermajority::Result<_>>()
    })?;
    let seconds = start.elapsed().as_secs_f64();

    for run in &runs {
        emit_run(reporter, run);
    }
    let successes: Vec<&ResampleRun> = runs.iter().filter(|r| r.succeeded()).collect();
    if !cli.no_verify {
        for run in &successes {
            self_verify(h, k, run.colouring())?;
        }
    }
    reporter.emit(&[
        ("trials", runs.len().into()),
        ("successes", successes.len().into()),
        ("total_rounds", runs.iter().map(|r| r.rounds_used).sum::<usize>().into()),
    ]);
    let valid = !successes.is_empty();
    if let Some(first) = successes.first() {
        write_artifact(args.output.as_deref(), &io::write_colouring(first.colouring()))?;
    }
    reporter.summary(args.algorithm.name(), k, k + 1, valid, seconds);
    if valid {
        Ok(())
    } else {
        Err(Failure::Invalid)
    }
}

fn verify_cmd(args: &VerifyArgs, reporter: Reporter) -> Outcome {
    let h = read_hypergraph(&args.hypergraph)?;
    let colouring = io::parse_colouring(&read_text(&args.colouring)?)
        .with_context(|| format!("parsing {}", args.colouring.display()))?;
    let report = verify(&h, args.k as usize, &colouring)?;
    let errors = reporter.to(Sink::Stderr);
    for v in &report.violations {
        errors.emit(&[
            ("vertex", (v.vertex + 1).into()),
            ("colour", v.colour.into()),
            ("count", v.count.into()),
            ("bound", v.bound.into()),
        ]);
    }
    reporter.emit(&[
        ("valid", report.valid.into()),
        ("violations", report.violations.len().into()),
    ]);
    if report.valid {
        Ok(())
    } else {
        Err(Failure::Invalid)
    }
}

fn round(cli: &Cli, args: &RoundArgs, reporter: Reporter) -> Outcome {
    let h = read_hypergraph(&args.hypergraph)?;
    let z = io::parse_weights(&read_text(&args.weights)?)
        .with_context(|| format!("parsing {}", args.weights.display()))?;
    let reporter = reporter.to(report_sink(args.output.as_ref()));
    let start = Instant::now();
    let (x, trace) = round_weights(&h, &z)?;
    let seconds = start.elapsed().as_secs_f64();

    // Largest |sum x - sum z| over vertices, against the strict rank bound.
    let rank = Rational::from_nat(h.rank());
    let discrepancy = x
        .vertex_sums(&h)
        .into_iter()
        .zip(z.vertex_sums(&h))
        .map(|(a, b)| if a >= b { a - b } else { b - a })
        .max()
        .unwrap_or_else(|| Rational::from_nat(0));
    let valid = h.n_vertices() == 0 || h.n_edges() == 0 || discrepancy < rank;
    if !cli.no_verify && !(valid && x.is_integral()) {
        return Err(Failure::Internal(anyhow!(
            "self-verification failed: discrepancy {discrepancy} is not below rank {rank}"
        )));
    }
    if let Some(target) = &args.trace {
        write_trace(target, &trace.to_string())?;
    }
    write_artifact(args.output.as_deref(), &io::write_weights(x.as_slice()))?;
    reporter.emit(&[
        ("edges", h.n_edges().into()),
        ("rank", h.rank().into()),
        ("iterations", trace.iterations.len().into()),
        ("max_discrepancy", discrepancy.to_string().into()),
        ("valid", valid.into()),
        ("seconds", seconds_value(seconds)),
    ]);
    Ok(())
}

fn threshold_cmd(args: &ThresholdArgs, reporter: Reporter) -> Outcome {
    let delta = threshold(args.k, args.r)?;
    let values = inequality_values(args.k, args.r, delta);
    let number = |x: f64| serde_json::Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null);
    reporter.emit(&[
        ("k", args.k.into()),
        ("r", args.r.into()),
        ("delta", delta.into()),
        ("first", number(values.first_f64())),
        ("second", number(values.second_f64())),
    ]);
    Ok(())
}

fn generate_cmd(cli: &Cli, args: &GenerateArgs, reporter: Reporter) -> Outcome {
    let spec = GenSpec {
        model: args.model,
        n: args.n,
        r: args.r,
        min_degree: args.min_degree,
        seed: cli.seed,
    };
    let h = generate(&spec)?;
    write_artifact(args.output.as_deref(), &io::write_hypergraph(&h))?;
    let min_degree = h.min_degree().unwrap_or(0);
    reporter.to(report_sink(args.output.as_ref())).emit(&[
        ("model", args.model.to_string().into()),
        ("seed", cli.seed.into()),
        ("vertices", h.n_vertices().into()),
        ("edges", h.n_edges().into()),
        ("rank", h.rank().into()),
        ("min_degree", min_degree.into()),
        ("max_degree", h.max_degree().into()),
    ]);
    Ok(())
}

fn oracle(args: &OracleArgs, reporter: Reporter) -> Outcome {
    let h = read_hypergraph(&args.hypergraph)?;
    let reporter = reporter.to(report_sink(args.output.as_ref()));
    let start = Instant::now();
    let found = brute_force(&h, args.k as usize, args.palette as usize)?;
    let seconds = start.elapsed().as_secs_f64();
    if let Some(c) = &found {
        write_artifact(args.output.as_deref(), &io::write_colouring(c))?;
    }
    reporter.emit(&[
        ("k", args.k.into()),
        ("palette", args.palette.into()),
        ("found", found.is_some().into()),
        ("seconds", seconds_value(seconds)),
    ]);
    if found.is_some() {
        Ok(())
    } else {
        Err(Failure::Invalid)
    }
}
