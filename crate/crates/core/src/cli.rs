//! Command-line front end.
//!
//! One executable, `ptsemi`, exposing every workflow: checking condition
//! batteries on algebra files, computing f-closures and the derived
//! quasi-order `χ₀`, enumerating transformation-semigroup corpora,
//! extracting abstract systems from generators, searching for concrete
//! representations, and running the full corpus property sweep.
//!
//! Results go to standard output; diagnostics go to standard error.  The
//! exit status is `0` when every reported record passes, `1` when some
//! record fails, and `2` on usage or input errors.

use std::fmt::Write as _;
use std::io::Read as _;

use clap::{Parser, Subcommand};

use crate::algebra::{
    self, check_delta_chi_link, check_ldist, check_meet_absorption, check_rdist,
    check_rect_absorption, check_semigroup, check_semilattice, check_theorem3, check_theorem4,
    check_theorem5, check_theorem7, AbstractSystem, CheckReport,
};
use crate::closure::{self, ElementSet};
use crate::pfun::PartialMap;
use crate::repsearch::{find_representation, verify_representation, SearchOutcome};
use crate::tsemi;
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "ptsemi",
    version,
    about = "Meet-closed semigroups of partial transformations: condition \
             batteries, closure operators, corpora, and representation search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a condition battery on an algebra file.
    Check {
        /// Algebra file path, or `-` for standard input.
        file: String,
        /// Battery: 1 (structure + the two base identities), 3, 4, 5, or 7.
        /// Default: 1.
        #[arg(long)]
        theorem: Option<u8>,
        /// Invertible variants: adds the right-distributivity and rectangle
        /// identities to battery 1, upgrades battery 3 to 4, and adds
        /// right-distributivity to batteries 5 and 7.
        #[arg(long)]
        invertible: bool,
    },
    /// Compute the f-closure of a set of elements.
    Closure {
        /// Algebra file path, or `-` for standard input.
        file: String,
        /// Seed element indices, comma-separated; `-` for the empty set.
        #[arg(long)]
        set: String,
    },
    /// Compute the derived quasi-order χ₀ (one 0/1 row per element).
    Chi0 {
        /// Algebra file path, or `-` for standard input.
        file: String,
        /// Also certify χ₀ minimality by exhaustive relation enumeration
        /// (systems of size ≤ 4 only).
        #[arg(long)]
        minimality: bool,
    },
    /// List every transformation semigroup on a small base.
    Enumerate {
        /// Base size (1, 2, or 3).
        #[arg(long)]
        base: usize,
        /// Only meet-closed map sets.
        #[arg(long)]
        with_meet: bool,
        /// Only invertible maps.
        #[arg(long)]
        invertible: bool,
    },
    /// Generate a semigroup from map literals and print its algebra file.
    Extract {
        /// Base size the generators act on.
        #[arg(long)]
        base: usize,
        /// Semicolon-separated map literals, e.g. "1,-;0,0".
        #[arg(long)]
        gens: String,
        /// Close under meet as well (required for extraction).
        #[arg(long)]
        with_meet: bool,
    },
    /// Search for a concrete representation of an abstract system.
    FindRep {
        /// Algebra file path, or `-` for standard input.
        file: String,
        /// Largest base size to search (at most 4).
        #[arg(long)]
        max_base: usize,
        /// Restrict to invertible maps (gates on right-distributivity).
        #[arg(long)]
        invertible: bool,
    },
    /// Run the full corpus property sweep and print pass counts.
    Sweep {
        /// Base size of the corpus (1, 2, or 3).
        #[arg(long)]
        base: usize,
    },
}

/// Parses the process arguments, runs one subcommand, and returns the exit
/// status: 0 all-pass, 1 some record failed, 2 usage or input error.
pub fn run() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders its own message (help and version go to standard
            // output and are not errors).
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn execute(command: Command) -> Result<bool> {
    let output = match command {
        Command::Check {
            file,
            theorem,
            invertible,
        } => check(&load(&file)?, theorem, invertible)?,
        Command::Closure { file, set } => closure_of(&load(&file)?, &set)?,
        Command::Chi0 { file, minimality } => chi0(&load(&file)?, minimality)?,
        Command::Enumerate {
            base,
            with_meet,
            invertible,
        } => enumerate(base, with_meet, invertible)?,
        Command::Extract {
            base,
            gens,
            with_meet,
        } => extract(base, &gens, with_meet)?,
        Command::FindRep {
            file,
            max_base,
            invertible,
        } => find_rep(&load(&file)?, max_base, invertible)?,
        Command::Sweep { base } => sweep(base)?,
    };
    print!("{}", output.text);
    Ok(output.all_pass)
}

/// Rendered subcommand result: the stdout text and the pass verdict.
struct Output {
    text: String,
    all_pass: bool,
}

impl Output {
    fn passing(text: String) -> Output {
        Output {
            text,
            all_pass: true,
        }
    }

    fn report(text: String, report: &CheckReport) -> Output {
        Output {
            text,
            all_pass: report.all_pass(),
        }
    }
}

fn load(path: &str) -> Result<AbstractSystem> {
    let text = if path == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| Error::Io(format!("cannot read standard input: {e}")))?;
        buffer
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("cannot read {path}: {e}")))?
    };
    algebra::parse(&text)
}

fn check(sys: &AbstractSystem, theorem: Option<u8>, invertible: bool) -> Result<Output> {
    let report = match theorem.unwrap_or(1) {
        1 => {
            // Structure first; the identity checks presuppose it.
            let mut report = check_semigroup(sys);
            report.extend(check_semilattice(sys));
            if report.all_pass() {
                report.extend(check_ldist(sys)?);
                report.extend(check_meet_absorption(sys)?);
                if invertible {
                    report.extend(check_rdist(sys)?);
                    report.extend(check_rect_absorption(sys)?);
                }
            }
            report
        }
        3 if invertible => check_theorem4(sys)?,
        3 => check_theorem3(sys)?,
        4 => check_theorem4(sys)?,
        5 => {
            let mut report = check_theorem5(sys)?;
            if invertible {
                report.extend(check_rdist(sys)?);
            }
            report
        }
        7 => check_theorem7(sys, invertible)?,
        other => {
            return Err(Error::Precondition(format!(
                "--theorem must be one of 1, 3, 4, 5, 7 (got {other})"
            )))
        }
    };
    Ok(Output::report(report.to_string(), &report))
}

fn closure_of(sys: &AbstractSystem, set: &str) -> Result<Output> {
    let seed = parse_element_set(set, sys.size())?;
    let (closed, iterations) = closure::f_closure_with_iterations(sys, seed)?;
    let mut text = format!("closed-set {}\n", render_element_set(closed));
    let _ = writeln!(text, "iterations {iterations}");
    Ok(Output::passing(text))
}

fn chi0(sys: &AbstractSystem, minimality: bool) -> Result<Output> {
    let chi0 = closure::chi0(sys)?;
    let mut text = String::from("chi0\n");
    for x in 0..chi0.size() {
        for y in 0..chi0.size() {
            text.push(if chi0.contains(x, y) { '1' } else { '0' });
        }
        text.push('\n');
    }
    if minimality {
        let report = closure::check_chi0_minimality(sys)?;
        let _ = write!(text, "{report}");
        return Ok(Output::report(text, &report));
    }
    Ok(Output::passing(text))
}

fn enumerate(base: usize, with_meet: bool, invertible: bool) -> Result<Output> {
    let mut text = String::new();
    for semigroup in tsemi::enumerate_all(base, with_meet, invertible)? {
        text.push_str("begin\n");
        for map in semigroup.elements() {
            let _ = writeln!(text, "{map}");
        }
        text.push_str("end\n");
    }
    Ok(Output::passing(text))
}

fn extract(base: usize, gens: &str, with_meet: bool) -> Result<Output> {
    let generators = parse_generators(gens)?;
    let semigroup = tsemi::generate(base, &generators, with_meet)?;
    let sys = semigroup.extract_abstract()?;
    Ok(Output::passing(algebra::serialize(&sys)))
}

fn find_rep(sys: &AbstractSystem, max_base: usize, invertible: bool) -> Result<Output> {
    match find_representation(sys, max_base, invertible)? {
        SearchOutcome::Found(rep) => {
            let mut text = format!("FOUND base={}\n", rep.base_size());
            for map in rep.assignment() {
                let _ = writeln!(text, "{map}");
            }
            Ok(Output::passing(text))
        }
        SearchOutcome::NotFoundUpToBound => Ok(Output::passing(format!(
            "NOT-FOUND-UP-TO base={max_base} (inconclusive)\n"
        ))),
        SearchOutcome::ConditionsFail(report) => Ok(Output {
            text: format!("CONDITIONS-FAIL\n{report}"),
            all_pass: false,
        }),
    }
}

/// One sweep row: a condition name with pass and attempt counts.
struct Tally {
    condition: &'static str,
    passed: usize,
    total: usize,
}

impl Tally {
    fn new(condition: &'static str) -> Tally {
        Tally {
            condition,
            passed: 0,
            total: 0,
        }
    }

    fn count(&mut self, pass: bool) {
        self.total += 1;
        if pass {
            self.passed += 1;
        }
    }
}

/// Runs every corpus-wide property over the enumerated base-`n` corpus and
/// prints one `condition passed/total` row per property.
///
/// The χ rows use the extracted domain-inclusion relation; the χ₀ rows use
/// the synthesized quasi-order.  The domain-intersection row covers the
/// systems with at most 5 elements, and the representation row covers the
/// systems small enough for the bounded search; both totals say how many
/// systems were in range.  Invertible rows run over the invertible
/// sub-corpus.
fn sweep(base: usize) -> Result<Output> {
    let corpus = tsemi::enumerate_all(base, true, false)?;
    let invertible_corpus = tsemi::enumerate_all(base, true, true)?;

    let mut ldist = Tally::new("ldist");
    let mut meet_absorption = Tally::new("meet-absorption");
    let mut chi_rows = [
        Tally::new("chi-quasi-order"),
        Tally::new("chi-left-regular"),
        Tally::new("chi-right-negative"),
        Tally::new("zeta-in-chi"),
        Tally::new("chi-meet-collapse"),
        Tally::new("meet-translate-le"),
        Tally::new("chi-meet-extend"),
    ];
    let mut delta_chi_link = Tally::new("delta-chi-link");
    let mut chi0_rows = [
        Tally::new("delta-left-ideal"),
        Tally::new("chi0-meet-collapse"),
        Tally::new("chi0-product-delta"),
    ];
    let mut domain_intersection = Tally::new("domain-intersection");
    let mut representation_found = Tally::new("representation-found");
    let mut rdist = Tally::new("rdist");
    let mut rect_absorption = Tally::new("rect-absorption");

    for phi in &corpus {
        let sys = phi.extract_abstract()?;
        ldist.count(check_ldist(&sys)?.all_pass());
        meet_absorption.count(check_meet_absorption(&sys)?.all_pass());

        let theorem3 = check_theorem3(&sys)?;
        for row in &mut chi_rows {
            row.count(record_passed(&theorem3, row.condition));
        }
        delta_chi_link.count(check_delta_chi_link(&sys)?.all_pass());

        let theorem7 = check_theorem7(&sys, false)?;
        for row in &mut chi0_rows {
            row.count(record_passed(&theorem7, row.condition));
        }

        if phi.len() <= 5 {
            domain_intersection.count(tsemi::domain_intersection_violation(phi)?.is_none());
        }
        if base * sys.size() <= crate::repsearch::MAX_SEARCH_AREA {
            let outcome = find_representation(&sys, base, false)?;
            let found = match outcome {
                SearchOutcome::Found(rep) => verify_representation(&sys, &rep)?.all_pass(),
                _ => false,
            };
            representation_found.count(found);
        }
    }

    for phi in &invertible_corpus {
        let sys = phi.extract_abstract()?;
        rdist.count(check_rdist(&sys)?.all_pass());
        rect_absorption.count(check_rect_absorption(&sys)?.all_pass());
    }

    let mut text = format!(
        "sweep base={base} systems={} invertible-systems={}\n",
        corpus.len(),
        invertible_corpus.len()
    );
    let mut all_pass = true;
    let [c1, c2, c3, c4, c5, c6, c7] = chi_rows;
    let [d1, d2, d3] = chi0_rows;
    for row in [
        ldist,
        meet_absorption,
        c1,
        c2,
        c3,
        c4,
        c5,
        c6,
        c7,
        delta_chi_link,
        d1,
        d2,
        d3,
        domain_intersection,
        representation_found,
        rdist,
        rect_absorption,
    ] {
        let _ = writeln!(text, "{} {}/{}", row.condition, row.passed, row.total);
        all_pass &= row.passed == row.total;
    }
    Ok(Output { text, all_pass })
}

fn record_passed(report: &CheckReport, condition: &str) -> bool {
    report
        .record(condition)
        .map(|r| r.passed())
        .unwrap_or(false)
}

fn parse_element_set(text: &str, size: usize) -> Result<ElementSet> {
    if text.trim() == "-" {
        return Ok(ElementSet::EMPTY);
    }
    let mut set = ElementSet::EMPTY;
    for part in text.split(',') {
        let index: usize = part.trim().parse().map_err(|_| {
            Error::Precondition(format!("--set expects element indices, got `{part}`"))
        })?;
        if index >= size {
            return Err(Error::ElementOutOfRange { index, size });
        }
        set.insert(index);
    }
    Ok(set)
}

fn render_element_set(set: ElementSet) -> String {
    if set.is_empty() {
        return "-".to_string();
    }
    let parts: Vec<String> = set.indices().iter().map(usize::to_string).collect();
    parts.join(",")
}

fn parse_generators(text: &str) -> Result<Vec<PartialMap>> {
    text.split(';').map(str::parse).collect()
}
