use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hyperloci::classify::{self, count_formulas, enumerate_loci_with, markdown_table, rh_verify, row_for, ClassifyError, Options};
use hyperloci::equations::{build_family, expand, specialize, verify_family, EquationError, EXPAND_CAP};
use hyperloci::grouptheory::DEFAULT_BUDGET;
use hyperloci::lattice::{build_lattice, LatticeError, LATTICE_GENUS_CAP};
use hyperloci::moebius::{cover_data, fixed_field_generator, is_moebius_equivalent, quotient_map, standard_embedding, ReducedGroup};
use hyperloci::text::parse_constant;

#[derive(Parser)]
#[command(name = "hyperloci", version, about = "Automorphism-group loci of hyperelliptic curves")]
struct Cli {
    /// Node budget for isomorphism and embedding searches.
    #[arg(long, global = true, env = "HYPERLOCI_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Also require n even in case 4.
    #[arg(long, global = true)]
    strict_parity: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
    Dot,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List all loci of a genus.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        genus: u32,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Print the parametric equation of one case.
    Equation {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        genus: u32,
        #[arg(long)]
        case: u32,
        #[arg(long)]
        n: Option<u32>,
        /// Multiply out all factors.
        #[arg(long)]
        expand: bool,
        /// Comma-separated parameter values, e.g. `7,-3,1/2`.
        #[arg(long, allow_hyphen_values = true)]
        specialize: Option<String>,
        /// Check invariance on this many random specializations.
        #[arg(long)]
        verify: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Inclusion lattice of the automorphism groups of a genus.
    Lattice {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=i64::from(LATTICE_GENUS_CAP)))]
        genus: u32,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        /// Exit with status 4 if any embedding is undetermined.
        #[arg(long)]
        strict: bool,
    },
    /// Fixed-field generator and branch data of a reduced group.
    Fixedfield {
        #[arg(long)]
        group: ReducedGroup,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Counting formulas next to the enumerated counts.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        genus: u32,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Inadmissible(String),
    Undetermined(String),
    Other(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Other(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Inadmissible(_) => 3,
            Failure::Undetermined(_) => 4,
        }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Failure {
        match e {
            ClassifyError::Inadmissible { .. } => Failure::Inadmissible(e.to_string()),
            ClassifyError::Undetermined(..) => Failure::Undetermined(e.to_string()),
            ClassifyError::Genus(_) | ClassifyError::UnknownCase(_) => Failure::Usage(e.to_string()),
            other => Failure::Other(other.to_string()),
        }
    }
}

impl From<EquationError> for Failure {
    fn from(e: EquationError) -> Failure {
        match e {
            EquationError::Classify(c) => c.into(),
            EquationError::ParameterCount { .. } => Failure::Usage(e.to_string()),
            other => Failure::Other(other.to_string()),
        }
    }
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Failure {
        match e {
            LatticeError::Classify(c) => c.into(),
            LatticeError::GenusCap(_) => Failure::Usage(e.to_string()),
            LatticeError::Undetermined(..) => Failure::Undetermined(e.to_string()),
            other => Failure::Other(other.to_string()),
        }
    }
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v).map_err(|e| Failure::Other(e.to_string()))
}

fn run(cli: Cli) -> Result<String, Failure> {
    let opts = Options { strict_parity: cli.strict_parity, budget: cli.budget };
    match cli.command {
        Command::Classify { genus, format } => {
            let rows = enumerate_loci_with(genus, &opts)?;
            for row in &rows {
                rh_verify(row)?;
            }
            match format {
                Format::Json => json(&rows),
                Format::Markdown => Ok(markdown_table(&rows)),
                _ => Err(Failure::Usage("classify supports --format json or markdown".into())),
            }
        }
        Command::Equation { genus, case, n, expand: full, specialize: values, verify, seed } => {
            let row = if case == 0 { classify::root_row(genus)? } else { row_for(case, n, genus, &opts)? };
            let fam = build_family(&row)?;
            let mut out = format!("# {} (case {}), genus {}, delta {}\n", row.group_display(), row.case, genus, row.delta);
            if let Some(roots) = fam.render_roots_form() {
                out.push_str(&roots);
                out.push('\n');
            }
            out.push_str(&fam.render());
            out.push('\n');
            if full {
                out.push_str(&expand(&fam, EXPAND_CAP)?.render());
                out.push('\n');
            }
            if let Some(text) = values {
                let vals = text
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| parse_constant(s.trim()).map_err(Failure::Usage))
                    .collect::<Result<Vec<_>, _>>()?;
                let f = specialize(&fam, &vals)?;
                out.push_str(&format!("y^2 = {}\n", f.render("x")));
            }
            if let Some(trials) = verify {
                let report = verify_family(&fam, trials, seed)?;
                out.push_str(&format!(
                    "verified: {} trials, {} generators, {} redraws, seed {}\n",
                    report.trials, report.generators, report.redraws, seed
                ));
            }
            Ok(out)
        }
        Command::Lattice { genus, format, strict } => {
            let lat = build_lattice(genus, &opts)?;
            let undetermined = lat.undetermined();
            if strict && !undetermined.is_empty() {
                return Err(Failure::Undetermined(format!("{} embedding tests undetermined", undetermined.len())));
            }
            match format {
                Format::Dot => Ok(lat.to_dot()),
                Format::Csv => Ok(lat.to_csv()),
                Format::Json => json(&lat),
                Format::Markdown => Err(Failure::Usage("lattice supports --format dot, csv or json".into())),
            }
        }
        Command::Fixedfield { group, n } => {
            let err = |e: hyperloci::moebius::MoebiusError| Failure::Usage(e.to_string());
            let h = standard_embedding(group, n).map_err(err)?;
            let generator = fixed_field_generator(&h).map_err(err)?;
            let normalized = quotient_map(group, n).map_err(err)?;
            let equivalent = is_moebius_equivalent(&generator, &normalized).is_some();
            let cover = cover_data(group, n).map_err(err)?;
            let mut out = format!("group: {} (order {})\n", group.display(n), h.order());
            out.push_str(&format!("generator: z = {}\n", generator.render("x")));
            out.push_str(&format!("normalized: z = {}\n", normalized.render("x")));
            out.push_str(&format!("moebius-equivalent: {}\n", if equivalent { "yes" } else { "no" }));
            let points: Vec<String> = cover.branch_points.iter().map(ToString::to_string).collect();
            out.push_str(&format!("branch points: {}\n", points.join(", ")));
            for (q, f) in cover.branch_points.iter().zip(&cover.fibers) {
                let inf = if f.contains_infinity { " and infinity" } else { "" };
                out.push_str(&format!("  over {q}: index {}, fiber {}{inf}\n", f.index, f.poly.render("x")));
            }
            Ok(out)
        }
        Command::Count { genus, format } => {
            let report = count_formulas(genus)?;
            match format {
                Format::Json => json(&report),
                Format::Markdown => {
                    let mut out = String::from("| reduced | formula | enumerated |\n|---|---|---|\n");
                    let formula = |label: &str| match label {
                        "Z" => report.n1_formula.to_string(),
                        "D" => report.n2_formula.to_string(),
                        "A4" => report.n3_formula.map_or("-".into(), |v| v.to_string()),
                        _ => "0 or 1".into(),
                    };
                    for (label, count) in &report.enumerated {
                        out.push_str(&format!("| {label} | {} | {count} |\n", formula(label)));
                    }
                    out.push_str("\nFormulas and enumerated row counts are reported side by side; they are not expected to agree.\n");
                    Ok(out)
                }
                _ => Err(Failure::Usage("count supports --format json or markdown".into())),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(mut text) => {
            if !text.ends_with('\n') {
                text.push('\n');
            }
            // a closed pipe downstream is not an error
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            let msg = match &f {
                Failure::Usage(m) | Failure::Inadmissible(m) | Failure::Undetermined(m) | Failure::Other(m) => m,
            };
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
