use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use fitting::group::{center, read_cayley_table, read_permutations, FiniteGroup};
use fitting::logic::{
    self, definable_set, evaluate, nilpotent_closure_formula, soluble_closure_formula,
};
use fitting::radicals::{engel_classify, fitting_subgroup, soluble_radical};
use fitting::series::{derived_length, nilpotency_class};
use fitting::Subgroup;
use fitting_harness::{
    corpus_from_dir, default_corpus, family, run_check, run_suite, CheckId, CheckStatus, Config,
};

/// Finite-group computations: radicals, series, and definability checks.
#[derive(Parser)]
#[command(name = "fitting", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print order, center, classes, Fitting subgroup and soluble radical.
    Info {
        /// Group file (.tbl or .perm) or family descriptor (e.g. symmetric-4).
        group: String,
    },
    /// Evaluate a formula on a group, with optional parameter elements.
    Eval {
        group: String,
        /// Formula text, e.g. `A x1. A x2. [x1,x2]=1`.
        formula: String,
        /// Values for the parameter slots p0, p1, ... as element indices.
        params: Vec<usize>,
    },
    /// Print the subset a membership formula defines.
    Define {
        group: String,
        #[command(flatten)]
        which: DefineWhich,
    },
    /// Run one verification check against one group.
    Verify {
        /// One of: lemma1 lemma2 lemma3 thm1-fitting thm1-radical thm2
        /// thm3-profile engel identities product-example.
        check_id: String,
        group: String,
    },
    /// Run every check over a corpus and write a JSON report.
    Suite {
        /// Directory of .tbl/.perm files; the built-in corpus when absent.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Configuration file (key = value lines).
        #[arg(long)]
        config: Option<PathBuf>,
        /// Report destination; overrides report_path from the config file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct DefineWhich {
    /// Weight of the nilpotent-closure membership formula.
    #[arg(long)]
    phi: Option<usize>,
    /// Depth of the soluble-closure membership formula.
    #[arg(long)]
    psi: Option<usize>,
}

fn load_group(spec: &str) -> Result<FiniteGroup> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        return match path.extension().and_then(|e| e.to_str()) {
            Some("tbl") => {
                read_cayley_table(&text).with_context(|| format!("parsing {}", path.display()))
            }
            Some("perm") => {
                read_permutations(&text).with_context(|| format!("parsing {}", path.display()))
            }
            _ => bail!("unrecognized group file extension (expected .tbl or .perm): {spec}"),
        };
    }
    family(spec).map_err(|e| anyhow!("'{spec}' is neither a file nor a family: {e}"))
}

fn subgroup_line(g: &FiniteGroup, sub: &Subgroup<'_>) -> String {
    if sub.order() <= 16 {
        let labels: Vec<String> = sub.members().iter().map(|&m| g.label(m)).collect();
        format!("order {} = {{{}}}", sub.order(), labels.join(", "))
    } else {
        format!("order {}", sub.order())
    }
}

fn cmd_info(spec: &str) -> Result<()> {
    let g = load_group(spec)?;
    println!("group: {spec}");
    println!("order: {}", g.order());
    println!("abelian: {}", g.is_abelian());
    println!("conjugacy classes: {}", g.conjugacy_classes().len());
    println!("center: {}", subgroup_line(&g, &center(&g)));
    let whole = Subgroup::whole(&g);
    match nilpotency_class(&g, &whole).expect("whole group is normal") {
        Some(c) => println!("nilpotency class: {c}"),
        None => println!("nilpotency class: not nilpotent"),
    }
    match derived_length(&g, &whole).expect("whole group is normal") {
        Some(d) => println!("derived length: {d}"),
        None => println!("derived length: not soluble"),
    }
    match engel_classify(&g, 5) {
        Some(n) => println!("engel depth: {n}"),
        None => println!("engel depth: none up to 5"),
    }
    let f = fitting_subgroup(&g);
    println!("fitting subgroup: {}", subgroup_line(&g, &f.subgroup));
    let r = soluble_radical(&g);
    println!("soluble radical: {}", subgroup_line(&g, &r.subgroup));
    Ok(())
}

fn cmd_eval(spec: &str, formula_text: &str, params: &[usize]) -> Result<bool> {
    let g = load_group(spec)?;
    let formula = logic::parse(formula_text).map_err(|e| anyhow!("{e}"))?;
    let free = formula.free_vars();
    if let Some(v) = free.iter().next() {
        bail!("unbound variable x{v}: assign it with a quantifier or use a parameter slot");
    }
    if formula.param_count() > params.len() {
        bail!(
            "formula uses {} parameter slot(s) but {} value(s) were given",
            formula.param_count(),
            params.len()
        );
    }
    for &p in params {
        if p >= g.order() {
            bail!("parameter {p} out of range for order {}", g.order());
        }
    }
    let result = evaluate(&g, &formula, params, &BTreeMap::new()).map_err(|e| anyhow!("{e}"))?;
    println!("{}", if result.truth { "true" } else { "false" });
    if let Some(witness) = &result.witness {
        let parts: Vec<String> = witness
            .iter()
            .map(|(v, e)| format!("x{v} = {} ({})", e, g.label(*e)))
            .collect();
        println!("witness: {}", parts.join(", "));
    }
    println!("tuples examined: {}", result.tuples_examined);
    Ok(result.truth)
}

fn cmd_define(spec: &str, which: &DefineWhich) -> Result<()> {
    let g = load_group(spec)?;
    let formula = match (which.phi, which.psi) {
        (Some(n), None) => nilpotent_closure_formula(n).map_err(|e| anyhow!("{e}"))?,
        (None, Some(n)) => soluble_closure_formula(n).map_err(|e| anyhow!("{e}"))?,
        _ => unreachable!("clap enforces exactly one"),
    };
    println!("formula: {formula}");
    let set = definable_set(&g, &formula).map_err(|e| anyhow!("{e}"))?;
    println!("defined set: {} of {} elements", set.len(), g.order());
    for &a in &set {
        println!("  {a}\t{}", g.label(a));
    }
    Ok(())
}

fn cmd_verify(check_id: &str, spec: &str) -> Result<bool> {
    let check: CheckId = check_id.parse().map_err(|e: String| anyhow!(e))?;
    let entry = fitting_harness::CorpusEntry::new(
        spec.to_string(),
        group_source_for(spec)?,
        Vec::new(),
    );
    let report = run_check(&entry, check, &Config::default());
    println!(
        "{}  {}  {}",
        report.status.as_str(),
        report.group,
        report.check
    );
    println!("{}", serde_json::to_string_pretty(&report.to_json())?);
    Ok(report.status != CheckStatus::Fail)
}

fn group_source_for(spec: &str) -> Result<fitting_harness::GroupSource> {
    let path = Path::new(spec);
    if path.is_file() {
        return match path.extension().and_then(|e| e.to_str()) {
            Some("tbl") => Ok(fitting_harness::GroupSource::CayleyTableFile(path.to_path_buf())),
            Some("perm") => Ok(fitting_harness::GroupSource::PermutationFile(path.to_path_buf())),
            _ => bail!("unrecognized group file extension (expected .tbl or .perm): {spec}"),
        };
    }
    let family_spec = fitting_harness::FamilySpec::parse(spec)
        .map_err(|e| anyhow!("'{spec}' is neither a file nor a family: {e}"))?;
    Ok(fitting_harness::GroupSource::Family(family_spec))
}

fn cmd_suite(corpus: Option<&Path>, config: Option<&Path>, out: Option<&Path>) -> Result<bool> {
    let config = match config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            Config::parse(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?
        }
        None => Config::default(),
    };
    let corpus = match corpus {
        Some(dir) => corpus_from_dir(dir).with_context(|| format!("reading {}", dir.display()))?,
        None => default_corpus(),
    };
    let report = run_suite(&corpus, &config);
    for entry in &report.entries {
        if let Some(error) = &entry.error {
            println!("error     {:10} {}", entry.group, error);
            continue;
        }
        for check in &entry.checks {
            println!("{:9} {:10} {}", check.status.as_str(), entry.group, check.check);
        }
    }
    let s = report.summary;
    println!(
        "summary: {} pass, {} fail, {} skipped, {} construction errors ({} checks)",
        s.pass, s.fail, s.skipped, s.construction_errors, s.total
    );
    let out_path = out
        .map(Path::to_path_buf)
        .or_else(|| report.config.report_path.clone())
        .unwrap_or_else(|| PathBuf::from("report.json"));
    let json = serde_json::to_string_pretty(&report.to_json())?;
    std::fs::write(&out_path, json).with_context(|| format!("writing {}", out_path.display()))?;
    println!("report written to {}", out_path.display());
    Ok(!report.any_failure())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Info { group } => cmd_info(group).map(|()| true),
        Command::Eval { group, formula, params } => cmd_eval(group, formula, params),
        Command::Define { group, which } => cmd_define(group, which).map(|()| true),
        Command::Verify { check_id, group } => cmd_verify(check_id, group),
        Command::Suite { corpus, config, out } => {
            cmd_suite(corpus.as_deref(), config.as_deref(), out.as_deref())
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
