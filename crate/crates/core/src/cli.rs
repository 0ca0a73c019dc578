//! Command-line front end.
//!
//! Exit status: 0 when everything checked out, 1 when the verifier found
//! violations, 2 for usage or input errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::constructions::{
    all_maximal_dense_fip, dense_fip_maximal, ideal_ia, ideal_ia_max, ideal_ia_prime, ideal_id,
    DenseFamily,
};
use crate::enumeration::{topologies, EnumerationBudget, MAX_ENUMERATION_POINTS};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealSpace};
use crate::json::{AssignmentDesc, FamilyDesc, IdealDesc, Labels, SpaceDesc};
use crate::pointset::PointSet;
use crate::topology::Topology;
use crate::verifier::{self, Counterexample, SuiteConfig, SuiteReport, WitnessDesc};

/// Largest space `dense-expand --all-max` will search.
pub const MAX_ALL_MAX_POINTS: usize = 6;

/// Checker flipped by `--self-test-mutation` when none is named.
pub const DEFAULT_MUTATION: &str = "check_A_open";

#[derive(Parser, Debug)]
#[command(
    name = "idealtop",
    version,
    about = "Finite ideal topological spaces and exhaustive checks of their expansion theorems"
)]
pub struct Cli {
    /// Machine-readable JSON on standard output.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write every topology on n points as JSON lines.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Write the lines here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the theorem and invariant checkers.
    Verify(VerifyArgs),
    /// Expand a space by I_A, I'_A or I_A^max and describe the result.
    Expand {
        /// Space JSON file.
        space: PathBuf,
        /// The set A, as comma-separated points or labels, e.g. `a,c`.
        #[arg(long = "set")]
        set: Option<String>,
        /// Assignment JSON file giving U_x for each x in A \ Int(A).
        #[arg(long, conflicts_with_all = ["prime", "max"])]
        assignment: Option<PathBuf>,
        /// Minimal neighbourhoods (the default).
        #[arg(long, conflicts_with = "max")]
        prime: bool,
        /// Every U_x = Int(Cl(A)); needs A preopen.
        #[arg(long)]
        max: bool,
    },
    /// Expand a space by I_D for a dense-FIP family.
    DenseExpand {
        space: PathBuf,
        /// Family JSON file; with --greedy-max it seeds the completion.
        #[arg(long)]
        family: Option<PathBuf>,
        /// Complete greedily to a maximal family (the default without --family).
        #[arg(long)]
        greedy_max: bool,
        /// List every maximal family and its expansion.
        #[arg(long)]
        all_max: bool,
    },
    /// Describe a space: opens, neighbourhoods, special sets, verdicts.
    Info { space: PathBuf },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Check every topology on 1..=n points.
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    /// Additional random topologies.
    #[arg(long, default_value_t = 0)]
    pub sample: usize,
    /// Size of the random topologies.
    #[arg(long, default_value_t = 6)]
    pub sample_n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Restrict to one statement id (or a prefix ending before a `.`).
    #[arg(long)]
    pub only: Option<String>,
    /// Also search for instances where a hypothesis and its conclusion both fail.
    #[arg(long)]
    pub negative_controls: bool,
    /// Flip one checker's conclusion and replay the witnesses it produces.
    #[arg(long, value_name = "ID", num_args = 0..=1, default_missing_value = DEFAULT_MUTATION)]
    pub self_test_mutation: Option<String>,
    /// Every assignment is checked up to this size, a sample above it.
    #[arg(long, default_value_t = 3)]
    pub full_assignments_up_to: usize,
    /// Random assignments per set above the exhaustive size.
    #[arg(long, default_value_t = 4)]
    pub assignment_samples: usize,
    /// Re-check a witness file instead of running the suite.
    #[arg(long, conflicts_with_all = ["only", "self_test_mutation"])]
    pub replay: Option<PathBuf>,
    /// List the statement ids and exit.
    #[arg(long)]
    pub list: bool,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// What a command concluded, before it becomes an exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Violations,
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violations) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    match &cli.command {
        Command::Enumerate { n, out: path } => enumerate(*n, path.as_deref(), out),
        Command::Verify(args) => verify(args, cli.json, out),
        Command::Expand {
            space,
            set,
            assignment,
            prime: _,
            max,
        } => expand(
            space,
            set.as_deref(),
            assignment.as_deref(),
            *max,
            cli.json,
            out,
        ),
        Command::DenseExpand {
            space,
            family,
            greedy_max,
            all_max,
        } => dense_expand(
            space,
            family.as_deref(),
            *greedy_max,
            *all_max,
            cli.json,
            out,
        ),
        Command::Info { space } => info(space, cli.json, out),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn load_space(path: &Path) -> Result<(Topology, Labels)> {
    read_json::<SpaceDesc>(path)?.to_topology()
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn family_str(labels: &Labels, sets: &[PointSet]) -> String {
    let inner: Vec<String> = sets.iter().map(|&s| labels.format(s)).collect();
    format!("{{{}}}", inner.join(", "))
}

fn enumerate(n: usize, path: Option<&Path>, out: &mut dyn Write) -> Result<Outcome> {
    if n > MAX_ENUMERATION_POINTS {
        return Err(Error::GroundSetTooLarge(n));
    }
    let mut file;
    let sink: &mut dyn Write = match path {
        Some(p) => {
            file = io::BufWriter::new(fs::File::create(p)?);
            &mut file
        }
        None => out,
    };
    let mut count = 0usize;
    for t in topologies(n) {
        serde_json::to_writer(&mut *sink, &SpaceDesc::from_topology(&t))?;
        writeln!(sink)?;
        count += 1;
    }
    sink.flush()?;
    eprintln!("{count} topologies on {n} points");
    Ok(Outcome::Ok)
}

fn verify(args: &VerifyArgs, json: bool, out: &mut dyn Write) -> Result<Outcome> {
    if args.list {
        for c in verifier::all_checkers() {
            writeln!(out, "{:<44} {}", c.id(), c.claim())?;
        }
        return Ok(Outcome::Ok);
    }
    if let Some(path) = &args.replay {
        return replay_file(path, json, out);
    }
    let config = SuiteConfig {
        budget: EnumerationBudget {
            n_max_exhaustive: args.n,
            sample_count: args.sample,
            sample_n: args.sample_n,
            rng_seed: args.seed,
        },
        full_assignment_max_n: args.full_assignments_up_to,
        assignment_samples: args.assignment_samples,
        negative_controls: args.negative_controls,
        only: args.only.clone(),
        mutate: args.self_test_mutation.clone(),
        ..Default::default()
    };
    let report = verifier::run_suite(&config)?;
    if let Some(path) = &args.out {
        fs::write(path, serde_json::to_string_pretty(&report.to_json())?)?;
    }
    if json {
        print_json(out, &report.to_json())?;
    } else {
        print_suite(&report, out)?;
    }
    if let Some(id) = &config.mutate {
        let r = report.report(id).expect("mutated checker is selected");
        let replayed = r
            .violations
            .iter()
            .map(verifier::replay)
            .collect::<Result<Vec<bool>>>()?;
        let reproduced = replayed.iter().filter(|&&b| b).count();
        if !json {
            writeln!(
                out,
                "self-test: {id} flipped, {} violations, {reproduced}/{} witnesses replay",
                r.violation_count,
                replayed.len()
            )?;
        }
    }
    Ok(if report.passed() {
        Outcome::Ok
    } else {
        Outcome::Violations
    })
}

fn print_suite(report: &SuiteReport, out: &mut dyn Write) -> Result<()> {
    writeln!(
        out,
        "topologies on 1..={} points, {} samples, seed {}",
        report.n_max, report.sample_count, report.seed
    )?;
    for r in &report.reports {
        let status = match (r.passed(), r.exploratory) {
            (true, _) => "PASS",
            (false, true) => "DIFF",
            (false, false) => "FAIL",
        };
        writeln!(
            out,
            "{status} {:<44} instances={:<8} hypothesis={:<8} violations={:<6} {}ms",
            r.statement_id,
            r.instances_checked,
            r.hypothesis_held,
            r.violation_count,
            r.elapsed.as_millis()
        )?;
        for w in r.violations.iter().take(3) {
            writeln!(
                out,
                "     witness: {}",
                serde_json::to_string(&w.to_json())?
            )?;
        }
    }
    for c in &report.controls {
        writeln!(
            out,
            "CONTROL {:<41} instances={:<8} witnesses={:<6} {}",
            c.statement_id,
            c.instances_checked,
            c.witnesses_found,
            c.note()
        )?;
        if let Some(w) = &c.witness {
            writeln!(
                out,
                "     witness: {}",
                serde_json::to_string(&w.to_json())?
            )?;
        }
    }
    writeln!(
        out,
        "{}",
        if report.passed() {
            "all checks passed"
        } else {
            "violations found"
        }
    )?;
    Ok(())
}

/// Accepts a single witness, a list of witnesses, or a whole report.
fn load_witnesses(path: &Path) -> Result<Vec<WitnessDesc>> {
    let value: serde_json::Value = read_json(path)?;
    if value.get("reports").is_some() {
        let suite: verifier::SuiteDesc = serde_json::from_value(value)?;
        let mut all: Vec<WitnessDesc> = suite
            .reports
            .into_iter()
            .flat_map(|r| r.violations)
            .collect();
        all.extend(
            suite
                .negative_controls
                .into_iter()
                .filter_map(|c| c.witness),
        );
        return Ok(all);
    }
    if value.is_array() {
        return Ok(serde_json::from_value(value)?);
    }
    Ok(vec![serde_json::from_value(value)?])
}

fn replay_file(path: &Path, json: bool, out: &mut dyn Write) -> Result<Outcome> {
    #[derive(Serialize)]
    struct Replayed {
        statement_id: String,
        kind: verifier::WitnessKind,
        reproduced: bool,
    }
    let mut results = Vec::new();
    for w in load_witnesses(path)? {
        let cex = Counterexample::from_json(&w)?;
        results.push(Replayed {
            statement_id: cex.statement_id.clone(),
            kind: cex.kind,
            reproduced: verifier::replay(&cex)?,
        });
    }
    if json {
        print_json(out, &results)?;
    } else {
        for r in &results {
            let verdict = if r.reproduced {
                "reproduced"
            } else {
                "did not reproduce"
            };
            writeln!(out, "{} ({:?}): {verdict}", r.statement_id, r.kind)?;
        }
    }
    // a violation that still reproduces is still a violation
    let live_violation = results
        .iter()
        .any(|r| r.reproduced && r.kind == verifier::WitnessKind::Violation);
    Ok(if live_violation {
        Outcome::Violations
    } else {
        Outcome::Ok
    })
}

#[derive(Serialize)]
struct ExpandDesc {
    construction: &'static str,
    #[serde(rename = "A")]
    set_a: Vec<usize>,
    ideal: IdealDesc,
    star_topology: SpaceDesc,
    a_open_in_star: bool,
    connected: bool,
    star_connected: bool,
    a_preopen: bool,
    trace_trivial: bool,
    semiregularization_preserved: bool,
    compatible: bool,
}

fn expand(
    space_path: &Path,
    set: Option<&str>,
    assignment: Option<&Path>,
    max: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<Outcome> {
    let (t, labels) = load_space(space_path)?;
    let n = t.n();
    let given_a = set.map(|s| labels.parse_list(s, n)).transpose()?;
    let (construction, a, ideal) = if let Some(path) = assignment {
        let asg = read_json::<AssignmentDesc>(path)?.to_assignment(&t, &labels)?;
        if given_a.is_some_and(|a| a != asg.set_a()) {
            return Err(Error::InvalidAssignment(format!(
                "--set names {} but the assignment is for {}",
                labels.format(given_a.unwrap_or_default()),
                labels.format(asg.set_a())
            )));
        }
        ("I_A", asg.set_a(), ideal_ia(&t, asg.set_a(), &asg)?)
    } else {
        let a = given_a
            .ok_or_else(|| Error::Malformed("--set is required without --assignment".into()))?;
        if max {
            ("I_A^max", a, ideal_ia_max(&t, a)?)
        } else {
            ("I'_A", a, ideal_ia_prime(&t, a))
        }
    };
    let sp = IdealSpace::new(t.clone(), ideal)?;
    let star = sp.star_topology();
    let desc = ExpandDesc {
        construction,
        set_a: a.to_vec(),
        ideal: IdealDesc::from_ideal(&ideal),
        star_topology: SpaceDesc::from_topology(&star),
        a_open_in_star: star.is_open(a),
        connected: t.is_connected(),
        star_connected: star.is_connected(),
        a_preopen: t.is_preopen(a),
        trace_trivial: sp.trace_is_trivial(),
        semiregularization_preserved: t.semiregularization() == star.semiregularization(),
        compatible: sp.is_compatible(),
    };
    if json {
        print_json(out, &desc)?;
        return Ok(Outcome::Ok);
    }
    writeln!(out, "A = {}", labels.format(a))?;
    writeln!(
        out,
        "{construction}: maximal {}",
        family_str(&labels, &ideal.maximal())
    )?;
    writeln!(out, "tau* = {}", family_str(&labels, star.opens()))?;
    writeln!(out, "A open in tau*: {}", desc.a_open_in_star)?;
    writeln!(out, "tau connected: {}", desc.connected)?;
    writeln!(out, "tau* connected: {}", desc.star_connected)?;
    writeln!(out, "A preopen: {}", desc.a_preopen)?;
    writeln!(out, "trace trivial: {}", desc.trace_trivial)?;
    writeln!(
        out,
        "tau_s = (tau*)_s: {}",
        desc.semiregularization_preserved
    )?;
    writeln!(out, "compatible: {}", desc.compatible)?;
    Ok(Outcome::Ok)
}

#[derive(Serialize)]
struct DenseExpandDesc {
    family: FamilyDesc,
    ideal: IdealDesc,
    star_topology: SpaceDesc,
    submaximal: bool,
    submaximal_by_dense: bool,
    semiregularization_preserved: bool,
}

fn describe_family(
    t: &Topology,
    family: &DenseFamily,
) -> Result<(Ideal, Topology, DenseExpandDesc)> {
    let ideal = ideal_id(t, family);
    let star = IdealSpace::new(t.clone(), ideal)?.star_topology();
    let desc = DenseExpandDesc {
        family: FamilyDesc::from_sets(family.members()),
        ideal: IdealDesc::from_ideal(&ideal),
        star_topology: SpaceDesc::from_topology(&star),
        submaximal: star.is_submaximal(),
        submaximal_by_dense: star.is_submaximal_by_dense(),
        semiregularization_preserved: t.semiregularization() == star.semiregularization(),
    };
    Ok((ideal, star, desc))
}

fn dense_expand(
    space_path: &Path,
    family: Option<&Path>,
    greedy_max: bool,
    all_max: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<Outcome> {
    let (t, labels) = load_space(space_path)?;
    let seed = family
        .map(|p| read_json::<FamilyDesc>(p)?.to_sets(t.n(), &labels))
        .transpose()?;
    let mut families = Vec::new();
    if all_max {
        if t.n() > MAX_ALL_MAX_POINTS {
            return Err(Error::GroundSetTooLarge(t.n()));
        }
        families.extend(all_maximal_dense_fip(&t));
    }
    if !all_max || family.is_some() || greedy_max {
        let f = match (&seed, greedy_max || seed.is_none()) {
            (Some(s), false) => DenseFamily::new(&t, s.iter().copied())?,
            (s, _) => dense_fip_maximal(&t, s.as_deref().unwrap_or(&[]))?,
        };
        if !families.contains(&f) {
            families.push(f);
        }
    }
    let mut descs = Vec::new();
    for f in &families {
        let (ideal, star, desc) = describe_family(&t, f)?;
        if !json {
            writeln!(out, "D' = {}", family_str(&labels, f.members()))?;
            writeln!(
                out,
                "  I_D: maximal {}",
                family_str(&labels, &ideal.maximal())
            )?;
            writeln!(out, "  tau* = {}", family_str(&labels, star.opens()))?;
            writeln!(
                out,
                "  submaximal: {} (preopen => open), {} (dense => open)",
                desc.submaximal, desc.submaximal_by_dense
            )?;
            writeln!(
                out,
                "  tau_s = (tau*)_s: {}",
                desc.semiregularization_preserved
            )?;
        }
        descs.push(desc);
    }
    if json {
        print_json(out, &descs)?;
    } else if all_max {
        writeln!(out, "{} maximal families", all_maximal_dense_fip(&t).len())?;
    }
    Ok(Outcome::Ok)
}

#[derive(Serialize)]
struct InfoDesc {
    space: SpaceDesc,
    min_nbhd: Vec<Vec<usize>>,
    dense: Vec<Vec<usize>>,
    preopen: Vec<Vec<usize>>,
    regular_open: Vec<Vec<usize>>,
    semiregularization: SpaceDesc,
    connected: bool,
    submaximal: bool,
    resolvable: bool,
    t1: bool,
}

fn info(space_path: &Path, json: bool, out: &mut dyn Write) -> Result<Outcome> {
    let (t, labels) = load_space(space_path)?;
    let lists = |v: Vec<PointSet>| v.into_iter().map(PointSet::to_vec).collect::<Vec<_>>();
    let semireg = t.semiregularization();
    if json {
        let mut space = SpaceDesc::from_topology(&t);
        space.labels = labels.names().map(<[String]>::to_vec);
        print_json(
            out,
            &InfoDesc {
                space,
                min_nbhd: lists(t.min_nbhds().to_vec()),
                dense: lists(t.dense_sets()),
                preopen: lists(t.preopen_sets()),
                regular_open: lists(t.regular_open_sets()),
                semiregularization: SpaceDesc::from_topology(&semireg),
                connected: t.is_connected(),
                submaximal: t.is_submaximal(),
                resolvable: t.is_resolvable(),
                t1: t.is_t1(),
            },
        )?;
        return Ok(Outcome::Ok);
    }
    writeln!(out, "points: {}", t.n())?;
    writeln!(out, "opens: {}", family_str(&labels, t.opens()))?;
    for x in 0..t.n() {
        writeln!(
            out,
            "  N({}) = {}",
            labels.name(x),
            labels.format(t.min_nbhd(x))
        )?;
    }
    writeln!(out, "dense: {}", family_str(&labels, &t.dense_sets()))?;
    writeln!(out, "preopen: {}", family_str(&labels, &t.preopen_sets()))?;
    writeln!(
        out,
        "regular open: {}",
        family_str(&labels, &t.regular_open_sets())
    )?;
    writeln!(out, "tau_s: {}", family_str(&labels, semireg.opens()))?;
    writeln!(out, "connected: {}", t.is_connected())?;
    writeln!(out, "submaximal: {}", t.is_submaximal())?;
    writeln!(out, "resolvable: {}", t.is_resolvable())?;
    writeln!(out, "T1: {}", t.is_t1())?;
    Ok(Outcome::Ok)
}
