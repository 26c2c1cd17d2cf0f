//! Command-line front end.
//!
//! Exit codes: 0 when everything checked holds, 1 for a mathematical
//! failure (a broken axiom, a failed cross-check, an exhausted eigenvalue
//! search), 2 for usage, IO and parse errors.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abelian::FinAbGroup;
use crate::cyclofield::ZetaKind;
use crate::error::Error;
use crate::examples::{
    build_example, characters_of_example, grouplike_basis_tables, pretty_label, BasisChange, BuiltExample,
    ExampleCharacters, ExampleSpec, ProductTables, Which,
};
use crate::grouplike::{enumerate_grouplikes_with, ConjectureScan, CoreReport, GroupLikeContext, DEFAULT_GRID_BOUND};
use crate::ydcore::YDAlgebra;

#[derive(Debug, Parser)]
#[command(name = "ydforge", version, about = "Build, verify and analyze Yetter-Drinfel'd Hopf algebras exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one of the two 8-dimensional examples.
    Build {
        #[command(flatten)]
        select: Selector,
        #[command(flatten)]
        output: Output,
    },
    /// Check every axiom of an algebra given as JSON (a bare algebra or a
    /// `build` bundle).
    Verify {
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Compute the core of one group-like element.
    Core {
        #[command(flatten)]
        select: Selector,
        /// Label of the group-like, e.g. `eta1` or `omega2`.
        #[arg(long)]
        eta: String,
        #[command(flatten)]
        grid: Grid,
        #[command(flatten)]
        output: Output,
    },
    /// Compute the cores of all group-likes of one example.
    Scan {
        #[command(flatten)]
        select: Selector,
        #[command(flatten)]
        grid: Grid,
        #[command(flatten)]
        output: Output,
    },
    /// Verify, enumerate and scan all eight instantiations.
    Sweep {
        #[command(flatten)]
        grid: Grid,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Args)]
pub struct Selector {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub example: u8,
    /// One of 1, -1, i, -i.
    #[arg(long, allow_hyphen_values = true)]
    pub zeta: ZetaKind,
}

impl Selector {
    pub fn spec(&self) -> ExampleSpec {
        let which = if self.example == 1 { Which::One } else { Which::Two };
        ExampleSpec::new(which, self.zeta)
    }
}

#[derive(Debug, Args)]
pub struct Grid {
    /// Coefficient bound of the eigenvalue search grid.
    #[arg(long, env = "YDFORGE_GRID_BOUND", default_value_t = DEFAULT_GRID_BOUND)]
    pub grid_bound: u32,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(
                Error::UnknownLabel(_) | Error::Parse(_) | Error::Malformed(_) | Error::DimensionMismatch { .. },
            )
            | CliError::Io(_)
            | CliError::Json(_) => 2,
            CliError::Lib(_) => 1,
        }
    }
}

/// What a command produced: the rendered text and whether every check held.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub success: bool,
}

/// The `build` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bundle {
    pub example: ExampleSpec,
    pub algebra: YDAlgebra,
    pub grouplike_basis: BasisChange,
    pub tables: ProductTables,
    pub characters: ExampleCharacters,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub grid_bound: u32,
    pub found: usize,
    /// The enumerated set is the example's basis up to reordering.
    pub matches_basis: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanOutput {
    pub example: ExampleSpec,
    pub enumeration: Enumeration,
    pub scan: ConjectureScan,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub example: ExampleSpec,
    pub axioms_pass: bool,
    pub enumeration: Enumeration,
    pub all_cores_trivial: bool,
    pub core_checks_pass: bool,
    /// Ordered pairs on which the three corollary conditions agree.
    pub corollary_consistent: usize,
    pub product_spans_consistent: usize,
    pub pairs: usize,
}

impl SweepEntry {
    pub fn passes(&self) -> bool {
        self.axioms_pass
            && self.enumeration.matches_basis
            && self.all_cores_trivial
            && self.core_checks_pass
            && self.corollary_consistent == self.pairs
            && self.product_spans_consistent == self.pairs
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let (outcome, output) = match &cli.command {
        Command::Build { select, output } => (build(select.spec(), output.format)?, output),
        Command::Verify { input, output } => (verify(input, output.format)?, output),
        Command::Core { select, eta, grid, output } => {
            (core(select.spec(), eta, grid.grid_bound, output.format)?, output)
        }
        Command::Scan { select, grid, output } => (scan(select.spec(), grid.grid_bound, output.format)?, output),
        Command::Sweep { grid, output } => (sweep(grid.grid_bound, output.format)?, output),
    };
    if let Some(path) = &output.out {
        std::fs::write(path, &outcome.text)?;
        return Ok(Outcome { text: String::new(), success: outcome.success });
    }
    Ok(outcome)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn make_bundle(spec: ExampleSpec) -> Result<Bundle, CliError> {
    let built = build_example(spec);
    let tables = grouplike_basis_tables(&built.algebra, &built.basis_change)?;
    Ok(Bundle {
        example: spec,
        algebra: built.algebra,
        grouplike_basis: built.basis_change,
        tables,
        characters: characters_of_example(spec),
    })
}

fn build(spec: ExampleSpec, format: Format) -> Result<Outcome, CliError> {
    let bundle = make_bundle(spec)?;
    let text = match format {
        Format::Json => to_json(&bundle)?,
        Format::Md => {
            let mut s = format!("## {spec}\n\n");
            s.push_str(&bundle.tables.to_markdown());
            s.push_str(&characters_markdown(&bundle.characters));
            s
        }
    };
    Ok(Outcome { text, success: true })
}

/// Reads an algebra from a `build` bundle or a bare algebra document.
pub fn read_algebra(text: &str) -> Result<YDAlgebra, CliError> {
    let mut value: serde_json::Value = serde_json::from_str(text)?;
    if let Some(inner) = value.get_mut("algebra") {
        value = inner.take();
    }
    Ok(serde_json::from_value(value)?)
}

fn verify(input: &PathBuf, format: Format) -> Result<Outcome, CliError> {
    let algebra = read_algebra(&std::fs::read_to_string(input)?)?;
    let report = algebra.verify_axioms();
    let text = match format {
        Format::Json => to_json(&report)?,
        Format::Md => format!("{report}\n"),
    };
    Ok(Outcome { success: report.all_pass(), text })
}

fn enumerate(built: &BuiltExample, bound: u32) -> Result<Enumeration, CliError> {
    let set = enumerate_grouplikes_with(&built.algebra, bound)?;
    let expected = built.basis_change.elements();
    let matches_basis = set.elements.len() == expected.len() && expected.iter().all(|e| set.elements.contains(e));
    Ok(Enumeration { grid_bound: bound, found: set.elements.len(), matches_basis })
}

/// Builds the example and checks the preconditions of the core commands.
/// `Err` carries the rendered failure when the algebra does not verify.
fn prepare(spec: ExampleSpec, format: Format) -> Result<Result<(BuiltExample, GroupLikeContext), Outcome>, CliError> {
    let built = build_example(spec);
    let report = built.algebra.verify_axioms();
    if !report.all_pass() {
        let text = match format {
            Format::Json => to_json(&report)?,
            Format::Md => format!("{report}\n"),
        };
        return Ok(Err(Outcome { text, success: false }));
    }
    let ctx = GroupLikeContext::new(&built.algebra, built.basis_change.clone())?;
    Ok(Ok((built, ctx)))
}

fn core(spec: ExampleSpec, eta: &str, bound: u32, format: Format) -> Result<Outcome, CliError> {
    let (built, ctx) = match prepare(spec, format)? {
        Ok(p) => p,
        Err(failure) => return Ok(failure),
    };
    let e = ctx.label_index(eta)?;
    let enumeration = enumerate(&built, bound)?;
    let report = ctx.compute_core(e)?;
    let text = match format {
        Format::Json => to_json(&report)?,
        Format::Md => format!("## {spec}\n\n{}", core_markdown(&report)),
    };
    Ok(Outcome { success: enumeration.matches_basis && report.all_checks_pass(), text })
}

fn scan(spec: ExampleSpec, bound: u32, format: Format) -> Result<Outcome, CliError> {
    let (built, ctx) = match prepare(spec, format)? {
        Ok(p) => p,
        Err(failure) => return Ok(failure),
    };
    let enumeration = enumerate(&built, bound)?;
    let scan = ctx.conjecture_scan()?;
    let success = enumeration.matches_basis && scan.all_cores_trivial && scan.all_checks_pass;
    let out = ScanOutput { example: spec, enumeration, scan };
    let text = match format {
        Format::Json => to_json(&out)?,
        Format::Md => scan_markdown(&out),
    };
    Ok(Outcome { text, success })
}

pub fn sweep_entry(spec: ExampleSpec, bound: u32) -> Result<SweepEntry, CliError> {
    let built = build_example(spec);
    let axioms_pass = built.algebra.verify_axioms().all_pass();
    let enumeration = enumerate(&built, bound)?;
    let ctx = GroupLikeContext::new(&built.algebra, built.basis_change.clone())?;
    let scan = ctx.conjecture_scan()?;
    let n = ctx.len();
    let mut corollary_consistent = 0;
    let mut product_spans_consistent = 0;
    for e in 0..n {
        for f in 0..n {
            corollary_consistent += usize::from(ctx.corollary_equivalence(e, f)?.consistent);
            product_spans_consistent += usize::from(ctx.product_span(e, f)?.consistent());
        }
    }
    Ok(SweepEntry {
        example: spec,
        axioms_pass,
        enumeration,
        all_cores_trivial: scan.all_cores_trivial,
        core_checks_pass: scan.all_checks_pass,
        corollary_consistent,
        product_spans_consistent,
        pairs: n * n,
    })
}

fn sweep(bound: u32, format: Format) -> Result<Outcome, CliError> {
    let entries = ExampleSpec::all().into_par_iter().map(|s| sweep_entry(s, bound)).collect::<Result<Vec<_>, _>>()?;
    let success = entries.iter().all(SweepEntry::passes);
    let text = match format {
        Format::Json => to_json(&entries)?,
        Format::Md => {
            let mut s = String::from(
                "| instantiation | axioms | group-likes | cores trivial | core checks | corollary | product spans |\n\
                 |---|---|---|---|---|---|---|\n",
            );
            for e in &entries {
                let _ = writeln!(
                    s,
                    "| {} | {} | {}{} | {} | {} | {}/{} | {}/{} |",
                    e.example,
                    yes_no(e.axioms_pass),
                    e.enumeration.found,
                    if e.enumeration.matches_basis { "" } else { " (mismatch)" },
                    yes_no(e.all_cores_trivial),
                    yes_no(e.core_checks_pass),
                    e.corollary_consistent,
                    e.pairs,
                    e.product_spans_consistent,
                    e.pairs
                );
            }
            s
        }
    };
    Ok(Outcome { text, success })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn group_name(g: &FinAbGroup) -> String {
    if g.order() == 1 {
        "trivial".to_string()
    } else {
        g.factors().iter().map(|n| format!("Z{n}")).collect::<Vec<_>>().join(" × ")
    }
}

fn listing<T: std::fmt::Display>(items: &[T]) -> String {
    format!("{{{}}}", items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn pretty_list(labels: &[String]) -> String {
    labels.iter().map(|l| pretty_label(l)).collect::<Vec<_>>().join(", ")
}

pub fn characters_markdown(chars: &ExampleCharacters) -> String {
    let mut s = String::from("### characters\n\n| | x | y |\n|---|---|---|\n");
    for c in &chars.characters {
        let _ = writeln!(s, "| {} | {} | {} |", c.name, c.x, c.y);
    }
    if let Some(rep) = &chars.two_dim {
        let m = |a: &crate::linalg::Matrix| {
            (0..2)
                .map(|i| (0..2).map(|j| a.get(i, j).to_string()).collect::<Vec<_>>().join(", "))
                .collect::<Vec<_>>()
                .join("; ")
        };
        let _ = writeln!(s, "\n2-dimensional representation: X = ({}), Y = ({})", m(&rep.x), m(&rep.y));
    }
    s.push('\n');
    s
}

pub fn core_markdown(r: &CoreReport) -> String {
    let st = &r.stabilizers;
    let mut s = format!("### core of {}\n\n", pretty_label(&r.eta));
    let _ = writeln!(s, "- T_η = {}", listing(&st.t_eta));
    let _ = writeln!(s, "- Q_η = {}", listing(&st.q_eta));
    let _ = writeln!(s, "- Q_η^⊥ = {}", listing(&st.q_perp));
    let _ = writeln!(s, "- T_η^⊥ = {}", listing(&st.t_perp));
    let _ = writeln!(
        s,
        "- G_η ≅ {}, index {} (character side {})",
        group_name(&st.index_group),
        st.index,
        st.symmetric_index
    );
    let _ = writeln!(s, "- O_η = {{{}}}", pretty_list(&st.orbit));
    let _ = writeln!(
        s,
        "- η' = {} (candidates {}; core independent of the choice: {})",
        pretty_label(&r.eta_prime),
        pretty_list(&r.eta_prime_candidates),
        yes_no(r.eta_prime_independent)
    );
    let _ = writeln!(s, "- core = Span({})", pretty_list(&r.omega_basis));
    let _ = writeln!(s, "- trivial: {}, completely trivial: {}", yes_no(r.trivial), yes_no(r.completely_trivial));
    if let Some(w) = &r.action_witness {
        let _ = writeln!(s, "- action witness: {}", w.rendered);
    }
    if let Some(w) = &r.coaction_witness {
        let _ = writeln!(s, "- coaction witness: {}", w.rendered);
    }
    s.push_str("\n| check | holds | witness |\n|---|---|---|\n");
    for c in &r.cross_checks {
        let _ = writeln!(s, "| {} | {} | {} |", c.name, yes_no(c.holds), c.witness.as_deref().unwrap_or(""));
    }
    let _ = write!(s, "\ncore axioms over K[G_η]:\n\n{}\n", r.core_axioms);
    s
}

fn scan_markdown(out: &ScanOutput) -> String {
    let mut s = format!(
        "## {}\n\ngroup-likes found: {} (grid bound {}, matches basis: {})\n\n",
        out.example,
        out.enumeration.found,
        out.enumeration.grid_bound,
        yes_no(out.enumeration.matches_basis)
    );
    s.push_str("| η | index | core | trivial | completely trivial | checks |\n|---|---|---|---|---|---|\n");
    for r in &out.scan.per_eta {
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} |",
            pretty_label(&r.eta),
            r.stabilizers.index,
            pretty_list(&r.omega_basis),
            yes_no(r.trivial),
            yes_no(r.completely_trivial),
            yes_no(r.all_checks_pass())
        );
    }
    let _ = writeln!(s, "\nall cores trivial: {}", yes_no(out.scan.all_cores_trivial));
    s
}
