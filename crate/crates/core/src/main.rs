//! Command-line interface: Jack character tables, symbolic
//! eigenfunction expansions, spectra, verification suites, and
//! human-readable eigenfunction tables, with on-disk caching.

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use nslax::eigenanalysis::{
    check_integrality, check_principal, check_symmetry, integrality_ledger, symbolic_psi_table,
    top_coefficient_formula, PsiExpansion, PsiTable,
};
use nslax::exactalg::{format_rational, parse_rational, Rational};
use nslax::fock::BasisIndex;
use nslax::jack::{compute_jacks_from_base, default_u0, jack_characters, test_rationals};
use nslax::partitions::{corners, enumerate_partitions, transition_weights_at, Cell, Partition};
use nslax::spectral::{
    build_cyclic_from, decompose, eigenfunctions, superposition_check, verify_appendix,
};
use num::Zero;
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "nslax",
    about = "Exact spectral computations for a Lax operator on graded Fock components"
)]
struct Cli {
    /// Directory for cached artifacts (env: NSLAX_CACHE_DIR)
    #[arg(long, global = true, env = "NSLAX_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Write primary JSON output to this path instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for independent jobs (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct EpsArgs {
    /// Specialization as two rationals num/den, e.g. --eps 2/1 -3/1
    #[arg(long, num_args = 2, value_names = ["E1", "E2"], allow_hyphen_values = true)]
    eps: Vec<String>,
}

impl EpsArgs {
    fn parse(&self) -> anyhow::Result<(Rational, Rational)> {
        if self.eps.len() != 2 {
            bail!("--eps requires exactly two rational values, e.g. --eps 2/1 -3/1");
        }
        let e1 = parse_rational(&self.eps[0]).context("invalid first parameter")?;
        let e2 = parse_rational(&self.eps[1]).context("invalid second parameter")?;
        Ok((e1, e2))
    }

    fn parse_positive_pair(&self) -> anyhow::Result<(Rational, Rational)> {
        let (e1, e2) = self.parse()?;
        if !(e1 > Rational::zero() && e2 < Rational::zero()) {
            bail!(
                "this command requires e1 > 0 > e2 (got e1 = {}, e2 = {}); \
                 pass e.g. --eps 2/1 -3/1",
                e1,
                e2
            );
        }
        Ok((e1, e2))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit the symbolic Jack character table of one degree as JSON
    Jack {
        #[arg(long)]
        n: u32,
    },
    /// Emit one symbolic eigenfunction expansion as JSON
    Psi {
        /// Partition as comma-separated parts, e.g. 2,1 (empty string for the empty partition)
        #[arg(long)]
        lambda: String,
        /// Addable corner as column,row, e.g. 1,1
        #[arg(long)]
        cell: String,
        /// Reconstruct coefficients as polynomials in the parameters
        #[arg(long, default_value_t = true)]
        symbolic: bool,
    },
    /// Print the spectrum of every cyclic space of one degree
    Spectrum {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        eps: EpsArgs,
        /// Override the spectral sample point u0 (rational num/den)
        #[arg(long, allow_hyphen_values = true)]
        u0: Option<String>,
        /// Also print the Lax matrix of the degree
        #[arg(long)]
        dump_matrix: bool,
    },
    /// Run a named verification suite; exit 0 iff everything passes
    Verify {
        /// decomposition | appendix | superposition | principal | symmetry | integrality | all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        #[command(flatten)]
        eps: EpsArgs,
        #[arg(long, allow_hyphen_values = true)]
        u0: Option<String>,
    },
    /// Print the eigenfunction formulas of one degree as aligned text
    Table {
        #[arg(long)]
        n: u32,
    },
}

fn parse_partition(s: &str) -> anyhow::Result<Partition> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(Partition::empty());
    }
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().context("invalid partition part"))
        .collect::<anyhow::Result<_>>()?;
    let mut sorted = parts.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted != parts {
        bail!("partition parts must be weakly decreasing, e.g. --lambda 2,1");
    }
    Ok(Partition::new(parts))
}

fn parse_cell(s: &str) -> anyhow::Result<Cell> {
    let pieces: Vec<&str> = s.split(',').collect();
    if pieces.len() != 2 {
        bail!("cell must be column,row, e.g. --cell 1,1");
    }
    Ok(Cell::new(
        pieces[0].trim().parse().context("invalid cell column")?,
        pieces[1].trim().parse().context("invalid cell row")?,
    ))
}

/// Writes a file atomically: temp file in the same directory, then rename.
fn atomic_write(path: &Path, contents: &str) -> anyhow::Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path)?;
    Ok(())
}

fn read_cached(cache_dir: &Option<PathBuf>, name: &str) -> Option<Value> {
    let path = cache_dir.as_ref()?.join(name);
    let text = std::fs::read_to_string(path).ok()?;
    let value: Value = serde_json::from_str(&text).ok()?;
    if value["format_version"].as_i64() == Some(1) {
        Some(value)
    } else {
        None
    }
}

fn write_cache(cache_dir: &Option<PathBuf>, name: &str, value: &Value) {
    if let Some(dir) = cache_dir {
        let _ = atomic_write(&dir.join(name), &serde_json::to_string_pretty(value).unwrap());
    }
}

fn emit(output: &Option<PathBuf>, value: &Value) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match output {
        Some(path) => atomic_write(path, &text)?,
        None => println!("{}", text),
    }
    Ok(())
}

fn monomial_label(idx: &BasisIndex) -> String {
    let mut pieces = Vec::new();
    for (k, d) in idx.mu.multiplicities() {
        if d == 1 {
            pieces.push(format!("V{}", k));
        } else {
            pieces.push(format!("V{}^{}", k, d));
        }
    }
    if idx.l == 1 {
        pieces.push("w".into());
    } else if idx.l > 1 {
        pieces.push(format!("w^{}", idx.l));
    }
    if pieces.is_empty() {
        "1".into()
    } else {
        pieces.join(" ")
    }
}

fn format_expansion(p: &PsiExpansion) -> String {
    let mut terms = Vec::new();
    for ((mu, l), chi) in p.iter() {
        let idx = BasisIndex::new(mu.clone(), *l);
        let label = monomial_label(&idx);
        let coeff = format!("{}", chi);
        let piece = if coeff == "1" {
            label.clone()
        } else if coeff.contains(" + ") || coeff.contains(" - ") {
            format!("({}) {}", coeff, label)
        } else {
            format!("{} {}", coeff, label)
        };
        terms.push(if label == "1" { coeff } else { piece });
    }
    terms.join(" + ")
}

fn cell_label(s: &Cell) -> String {
    format!("({},{})", s.c, s.r)
}

fn partition_label(p: &Partition) -> String {
    if p.is_empty() {
        "0".into()
    } else {
        p.parts()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn get_psi_table(cache_dir: &Option<PathBuf>, n: u32) -> anyhow::Result<PsiTable> {
    // cached expansions are stored one file per degree
    let name = format!("psi_sym_n{}.json", n);
    if let Some(v) = read_cached(cache_dir, &name) {
        if let Some(rows) = v["expansions"].as_array() {
            let mut ok = true;
            let mut list = Vec::new();
            for row in rows {
                match PsiExpansion::from_json(row) {
                    Ok(p) => list.push(p),
                    Err(_) => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                if let Ok(table) = PsiTable::from_expansions(n, list) {
                    return Ok(table);
                }
            }
        }
    }
    let table = symbolic_psi_table(n)?;
    let rows: Vec<Value> = table.iter().map(|(_, p)| p.to_json()).collect();
    write_cache(
        cache_dir,
        &name,
        &json!({"format_version": 1, "n": n, "expansions": rows}),
    );
    Ok(table)
}

fn run_verify(
    suite: &str,
    max_degree: u32,
    eps: &EpsArgs,
    u0: Option<String>,
    cache_dir: &Option<PathBuf>,
) -> anyhow::Result<bool> {
    let symbolic_only = matches!(suite, "principal" | "symmetry" | "integrality");
    let needs_eps = !symbolic_only || suite == "all";
    let (e1, e2) = if needs_eps && !eps.eps.is_empty() {
        eps.parse_positive_pair()?
    } else if needs_eps {
        bail!("this suite requires --eps with e1 > 0 > e2, e.g. --eps 2/1 -3/1");
    } else {
        (Rational::from_integer(2.into()), Rational::from_integer((-3).into()))
    };
    let u0 = match u0 {
        Some(s) => parse_rational(&s).context("invalid --u0")?,
        None => default_u0(),
    };

    let mut all_pass = true;
    let mut check = |name: String, pass: bool| {
        println!("{} {}", if pass { "PASS" } else { "FAIL" }, name);
        all_pass &= pass;
    };

    for n in 0..=max_degree {
        let run_decomposition = matches!(suite, "decomposition" | "all");
        let run_appendix = matches!(suite, "appendix" | "all");
        let run_superposition = matches!(suite, "superposition" | "all");
        let run_principal = matches!(suite, "principal" | "all");
        let run_symmetry = matches!(suite, "symmetry" | "all");
        let run_integrality = matches!(suite, "integrality" | "all");
        if !(run_decomposition
            || run_appendix
            || run_superposition
            || run_principal
            || run_symmetry
            || run_integrality)
        {
            bail!(
                "unknown suite '{}'; expected decomposition, appendix, superposition, \
                 principal, symmetry, integrality, or all",
                suite
            );
        }

        if run_decomposition {
            let rep = decompose(n, &e1, &e2)?;
            for f in &rep.failures {
                eprintln!("  {}", f);
            }
            check(format!("decomposition n={}", n), rep.passed());
        }

        if run_appendix || run_superposition {
            let table = compute_jacks_from_base(n, &e1, &e2, &u0)?;
            for lam in enumerate_partitions(n) {
                let z = build_cyclic_from(&lam, table.get(&lam).unwrap(), &e1, &e2)?;
                let es = eigenfunctions(&z)?;
                if run_superposition {
                    let ok = superposition_check(&z, &es)?;
                    let weights = transition_weights_at(&lam, &e1, &e2)?;
                    let positive = weights.values().all(|w| w > &Rational::zero());
                    check(
                        format!("superposition lambda={}", partition_label(&lam)),
                        ok && positive,
                    );
                }
                if run_appendix {
                    let failures = verify_appendix(&z, &es);
                    for f in &failures {
                        eprintln!("  {}", f);
                    }
                    check(
                        format!("appendix lambda={}", partition_label(&lam)),
                        failures.is_empty(),
                    );
                }
            }
        }

        if run_principal || run_symmetry || run_integrality {
            let table = get_psi_table(cache_dir, n)?;
            if run_principal {
                let zs = test_rationals(n as u64 + 5, 5);
                for ((lam, s), p) in table.iter() {
                    let ok = check_principal(p, &e1, &e2, &zs)
                        && p.coeff(&Partition::empty(), n)
                            == top_coefficient_formula(lam, s);
                    check(
                        format!(
                            "principal lambda={} s={}",
                            partition_label(lam),
                            cell_label(s)
                        ),
                        ok,
                    );
                }
            }
            if run_symmetry {
                for ((lam, s), p) in table.iter() {
                    let pc = table
                        .get(&lam.conjugate(), &s.reflect())
                        .expect("conjugate expansion present");
                    check(
                        format!(
                            "symmetry lambda={} s={}",
                            partition_label(lam),
                            cell_label(s)
                        ),
                        check_symmetry(p, pc),
                    );
                }
            }
            if run_integrality {
                let ledger = integrality_ledger(&table);
                write_cache(cache_dir, &format!("integrality_ledger_n{}.json", n), &ledger);
                for ((lam, s), p) in table.iter() {
                    check(
                        format!(
                            "integrality lambda={} s={}",
                            partition_label(lam),
                            cell_label(s)
                        ),
                        check_integrality(p),
                    );
                }
            }
        }
    }
    Ok(all_pass)
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }

    match &cli.command {
        Command::Jack { n } => {
            let name = format!("jack_n{}.json", n);
            let value = match read_cached(&cli.cache_dir, &name) {
                Some(v) => v,
                None => {
                    let table = jack_characters(*n)?;
                    let v = table.to_json();
                    write_cache(&cli.cache_dir, &name, &v);
                    v
                }
            };
            emit(&cli.output, &value)?;
        }
        Command::Psi {
            lambda,
            cell,
            symbolic,
        } => {
            if !symbolic {
                bail!("only symbolic expansions are emitted; pass --symbolic");
            }
            let lam = parse_partition(lambda)?;
            let s = parse_cell(cell)?;
            if !corners(&lam).addable.contains(&s) {
                bail!("{} is not an addable corner of [{}]", s, partition_label(&lam));
            }
            let table = get_psi_table(&cli.cache_dir, lam.size())?;
            let p = table.get(&lam, &s).expect("expansion present");
            emit(&cli.output, &p.to_json())?;
        }
        Command::Spectrum {
            n,
            eps,
            u0,
            dump_matrix,
        } => {
            let (e1, e2) = eps.parse_positive_pair()?;
            let u0 = match u0 {
                Some(s) => parse_rational(s).context("invalid --u0")?,
                None => default_u0(),
            };
            let table = compute_jacks_from_base(*n, &e1, &e2, &u0)?;
            let mut rows = Vec::new();
            for lam in enumerate_partitions(*n) {
                for s in &corners(&lam).addable {
                    let sigma = s.content_at(&e1, &e2);
                    println!(
                        "lambda=[{}] cell={} eigenvalue={}",
                        partition_label(&lam),
                        cell_label(s),
                        sigma
                    );
                    rows.push(json!({
                        "lambda": lam.to_json(),
                        "cell": s.to_json(),
                        "eigenvalue": format_rational(&sigma),
                    }));
                }
            }
            if *dump_matrix {
                let m = nslax::lax::lax_matrix_at(*n, &e1, &e2);
                for i in 0..m.nrows() {
                    let row: Vec<String> =
                        (0..m.ncols()).map(|j| format_rational(m.get(i, j))).collect();
                    println!("[{}]", row.join(", "));
                }
            }
            if cli.output.is_some() {
                emit(
                    &cli.output,
                    &json!({"format_version": 1, "n": n, "spectrum": rows}),
                )?;
            }
            let _ = table;
        }
        Command::Verify {
            suite,
            max_degree,
            eps,
            u0,
        } => {
            let pass = run_verify(suite, *max_degree, eps, u0.clone(), &cli.cache_dir)?;
            if !pass {
                std::process::exit(1);
            }
        }
        Command::Table { n } => {
            let table = get_psi_table(&cli.cache_dir, *n)?;
            let mut lines = Vec::new();
            for ((lam, s), p) in table.iter() {
                lines.push((
                    format!("psi[{}]^{}", partition_label(lam), cell_label(s)),
                    format_expansion(p),
                ));
            }
            let width = lines.iter().map(|(h, _)| h.len()).max().unwrap_or(0);
            for (head, body) in lines {
                println!("{:width$} = {}", head, body, width = width);
            }
        }
    }
    Ok(())
}
