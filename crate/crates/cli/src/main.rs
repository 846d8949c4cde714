use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use diagcoinv::characters::{
    eps_chi_bound, multiplicity_linear, scenario_report, BoundReport, LinearChar, Scenario,
};
use diagcoinv::oracle::{epsilon_from, quotient_hilbert, GradedReport, DEFAULT_MAX_DEGREE};
use diagcoinv::params::{hook_k, Params};
use diagcoinv::shapes::{Bipartition, Partition, SkewPair, SkewTableau};
use diagcoinv::tableaux::{count_linear_extensions, LowestWeight, QFilling, MAX_DAG_VERTICES};
use diagcoinv::Error;

#[derive(Parser, Debug)]
#[command(name = "diagcoinv", version, about = "Lower bounds and small-rank ground truth for type B diagonal coinvariants")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The Gordon module ((n), ∅) at c = d = (2n+1)/2n.
    Gordon {
        #[arg(long)]
        n: usize,
        /// Largest rank for which dim L_Q is computed.
        #[arg(long, default_value_t = MAX_DAG_VERTICES)]
        max_vertices: usize,
    },
    /// A rectangular lowest weight with generic c.
    Rect {
        /// Row lengths, e.g. `2,2`.
        #[arg(long, value_delimiter = ',', required = true)]
        shape: Vec<u32>,
        /// Odd integer 2(d + ct(b) c) at the removable box.
        #[arg(long)]
        target: u32,
    },
    /// A hook lowest weight (k, 1^(n-k)) at c = k/n.
    Hook {
        #[arg(long)]
        n: usize,
        /// Arm length; defaults to the value used for the bound.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Computed ε_χ lower bounds against the stated ones.
    Bounds {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Count only generic fillings.
        #[arg(long)]
        conservative: bool,
    },
    /// Exact graded dimensions of the coinvariant ring for rank ≤ 3.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Reconstruct the skew diagram of one filling.
    Diagram {
        /// Row lengths of λ0.
        #[arg(long, value_delimiter = ',', required = true)]
        shape: Vec<u32>,
        /// Row lengths of λ1.
        #[arg(long, value_delimiter = ',')]
        shape1: Vec<u32>,
        /// Filling: rows separated by `;`, components by `|`, e.g. `1,3,7;1;1`.
        #[arg(long)]
        q: String,
        /// Parameter assignment, repeated: `--param c=3/5 --param d=27/10`.
        #[arg(long = "param", required = true)]
        params: Vec<String>,
        /// Also reconstruct from every compatible P and check they agree.
        #[arg(long)]
        all_p: bool,
    },
}

/// An internal check failed: exit code 1.
#[derive(Debug)]
struct CheckFailed(String);

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CheckFailed {}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.is::<CheckFailed>() {
        return 1;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::InvalidParams(_) | Error::InvalidShape(_) | Error::Parse { .. }) => 2,
        Some(Error::UnsupportedCharacter(_)) => 2,
        Some(Error::TooLarge { .. } | Error::Unbounded(_)) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<String> {
    match &cli.command {
        Command::Gordon { n, max_vertices } => cmd_gordon(*n, *max_vertices, cli.format),
        Command::Rect { shape, target } => {
            let shape = Partition::new(shape.clone())?;
            let n = shape.size();
            cmd_scenario(n, Scenario::Rectangle { shape, target: *target }, cli.format)
        }
        Command::Hook { n, k } => cmd_scenario(*n, Scenario::Hook { k: k.unwrap_or_else(|| hook_k(*n)) }, cli.format),
        Command::Bounds { from, to, conservative } => cmd_bounds(*from, *to, *conservative, cli.format),
        Command::Oracle { n, max_degree } => cmd_oracle(*n, *max_degree, cli.format),
        Command::Diagram {
            shape,
            shape1,
            q,
            params,
            all_p,
        } => cmd_diagram(shape, shape1, q, params, *all_p, cli.format),
    }
}

fn to_json<T: Serialize>(v: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

#[derive(Serialize)]
struct GordonReport {
    n: usize,
    tab: usize,
    dim: u128,
    det: usize,
    chi: usize,
}

fn cmd_gordon(n: usize, max_vertices: usize, format: Format) -> anyhow::Result<String> {
    let limit = max_vertices.min(MAX_DAG_VERTICES);
    if n > limit {
        return Err(Error::TooLarge {
            what: "Gordon rank",
            size: n,
            limit,
        }
        .into());
    }
    let lw = Scenario::Gordon.lowest_weight(n)?;
    let tab = lw.enumerate_tab()?;
    let dim = tab
        .par_iter()
        .map(|q| count_linear_extensions(&lw.p_dag(q)?))
        .collect::<Result<Vec<u128>, Error>>()?
        .into_iter()
        .sum();
    let report = GordonReport {
        n,
        tab: tab.len(),
        dim,
        det: multiplicity_linear(&lw, LinearChar::Det)?.total_count(),
        chi: multiplicity_linear(&lw, LinearChar::Chi)?.total_count(),
    };
    let out = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => format!("n,tab,dim,det,chi\n{},{},{},{},{}\n", n, report.tab, dim, report.det, report.chi),
        Format::Text => format!(
            "Gordon module, n = {n}\n  |Tab|          {}\n  sum dim L_Q    {}\n  (2n+1)^n       {}\n  det            {}\n  chi            {}\n",
            report.tab,
            dim,
            (2 * n as u128 + 1).pow(n as u32),
            report.det,
            report.chi
        ),
    };
    if report.det != 1 {
        bail!(CheckFailed(format!("{out}det multiplicity is {}, not 1", report.det)));
    }
    Ok(out)
}

#[derive(Serialize)]
struct ScenarioOutput {
    #[serde(flatten)]
    report: BoundReport,
    params: Params,
    det_fillings: Vec<[Vec<Vec<u32>>; 2]>,
    chi_fillings: Vec<[Vec<Vec<u32>>; 2]>,
}

fn render_filling(lambda: &Bipartition, q: &QFilling) -> String {
    let [c0, c1] = q.to_nested(lambda);
    let rows = |c: &[Vec<u32>]| {
        c.iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" / ")
    };
    if c1.is_empty() {
        rows(&c0)
    } else {
        format!("{} | {}", rows(&c0), rows(&c1))
    }
}

fn cmd_scenario(n: usize, scenario: Scenario, format: Format) -> anyhow::Result<String> {
    let lw = scenario.lowest_weight(n)?;
    let report = scenario_report(n, scenario, false)?;
    let det = multiplicity_linear(&lw, LinearChar::Det)?.fillings();
    let chi = multiplicity_linear(&lw, LinearChar::Chi)?.fillings();
    let out = match format {
        Format::Json => to_json(&ScenarioOutput {
            report: report.clone(),
            params: lw.params().clone(),
            det_fillings: det.iter().map(|q| q.to_nested(lw.lambda())).collect(),
            chi_fillings: chi.iter().map(|q| q.to_nested(lw.lambda())).collect(),
        })?,
        Format::Csv => format!("{}{}", bounds_csv_header(), bounds_csv_row(&report)),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "{} at {}", report.scenario, lw.params())?;
            writeln!(s, "  lowest weight  {}", lw.lambda())?;
            writeln!(s, "  det            {}", report.det_mult)?;
            for q in &det {
                writeln!(s, "    {}", render_filling(lw.lambda(), q))?;
            }
            writeln!(s, "  chi generic    {}", report.chi_generic)?;
            writeln!(s, "  chi total      {}", report.chi_total)?;
            for q in &chi {
                writeln!(s, "    {}", render_filling(lw.lambda(), q))?;
            }
            writeln!(s, "  eps_chi >=     {}", report.eps_chi_lower)?;
            s
        }
    };
    if !report.coinvariant_type {
        bail!(CheckFailed(format!("{out}not of coinvariant type (det multiplicity {})", report.det_mult)));
    }
    Ok(out)
}

fn bounds_csv_header() -> &'static str {
    "n,scenario,det_mult,chi_generic,chi_total,eps_chi_lower,theorem_bound\n"
}

fn bounds_csv_row(r: &BoundReport) -> String {
    format!(
        "{},{},{},{},{},{},{}\n",
        r.n, r.scenario, r.det_mult, r.chi_generic, r.chi_total, r.eps_chi_lower, r.theorem_bound
    )
}

fn cmd_bounds(from: usize, to: usize, conservative: bool, format: Format) -> anyhow::Result<String> {
    if from == 0 || from > to {
        return Err(Error::InvalidParams(format!("empty or invalid range {from}..={to}")).into());
    }
    let mut reports: Vec<BoundReport> = (from..=to)
        .into_par_iter()
        .map(|n| eps_chi_bound(n, conservative))
        .collect::<Result<_, Error>>()?;
    reports.sort_by_key(|r| r.n);
    let failing: Vec<usize> = reports
        .iter()
        .filter(|r| r.eps_chi_lower < r.theorem_bound)
        .map(|r| r.n)
        .collect();
    let out = match format {
        Format::Json => to_json(&reports)?,
        Format::Csv => {
            let mut s = bounds_csv_header().to_string();
            reports.iter().for_each(|r| s.push_str(&bounds_csv_row(r)));
            s
        }
        Format::Text => {
            let mut s = format!(
                "{:>3}  {:<22} {:>3} {:>11} {:>9} {:>9} {:>7}\n",
                "n", "scenario", "det", "chi_generic", "chi_total", "computed", "stated"
            );
            for r in &reports {
                writeln!(
                    s,
                    "{:>3}  {:<22} {:>3} {:>11} {:>9} {:>9} {:>7}",
                    r.n,
                    r.scenario.to_string(),
                    r.det_mult,
                    r.chi_generic,
                    r.chi_total,
                    r.eps_chi_lower,
                    r.theorem_bound
                )?;
            }
            s
        }
    };
    if !failing.is_empty() {
        bail!(CheckFailed(format!("{out}computed bound below the stated one for n in {failing:?}")));
    }
    Ok(out)
}

#[derive(Serialize)]
struct OracleOutput<'a> {
    #[serde(flatten)]
    report: &'a GradedReport,
    principal: usize,
    epsilon: i64,
    chi_prime_dim: usize,
}

fn cmd_oracle(n: usize, max_degree: usize, format: Format) -> anyhow::Result<String> {
    let report = quotient_hilbert(n, max_degree)?;
    let eps = epsilon_from(&report);
    let (principal, epsilon, chi_prime_dim) = match &eps {
        Ok(e) => (e.principal, e.epsilon, e.chi_prime_dim),
        Err(_) => {
            let p = (2 * n + 1).pow(n as u32);
            (p, report.total as i64 - p as i64, report.isotypic_total(LinearChar::ChiPrime))
        }
    };
    let out = match format {
        Format::Json => to_json(&OracleOutput {
            report: &report,
            principal,
            epsilon,
            chi_prime_dim,
        })?,
        Format::Csv => report.to_csv(),
        Format::Text => {
            let mut s = format!("diagonal coinvariants, rank {n}\n");
            writeln!(s, "{:>6} {:>6} {:>6} {:>6} {:>6} {:>9}", "degree", "dim", "triv", "det", "chi", "chi_prime")?;
            for d in &report.per_degree {
                writeln!(
                    s,
                    "{:>6} {:>6} {:>6} {:>6} {:>6} {:>9}",
                    d.degree,
                    d.quotient_dim,
                    d.isotypic[&LinearChar::Triv],
                    d.isotypic[&LinearChar::Det],
                    d.isotypic[&LinearChar::Chi],
                    d.isotypic[&LinearChar::ChiPrime]
                )?;
            }
            writeln!(s, "  total        {}", report.total)?;
            writeln!(s, "  (2n+1)^n     {principal}")?;
            writeln!(s, "  epsilon      {epsilon}")?;
            writeln!(s, "  chi' total   {chi_prime_dim}")?;
            let chi_euler: Vec<String> = report
                .isotypic_by_euler_degree(LinearChar::ChiPrime)
                .into_iter()
                .filter(|e| e.1 > 0)
                .map(|(k, v)| format!("{k}:{v}"))
                .collect();
            writeln!(s, "  chi' by Euler degree  {}", chi_euler.join(" "))?;
            if !report.complete {
                writeln!(s, "  PARTIAL: degree cap {max_degree} reached before a zero piece")?;
            }
            s
        }
    };
    if let Err(e) = eps {
        bail!(CheckFailed(format!("{out}{e}")));
    }
    if !report.complete {
        return Err(anyhow!(Error::TooLarge {
            what: "degree sweep",
            size: max_degree + 1,
            limit: max_degree,
        }))
        .context(out);
    }
    Ok(out)
}

fn parse_rows(s: &str) -> anyhow::Result<Vec<Vec<u32>>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|v| v.trim().parse::<u32>().with_context(|| format!("bad entry `{v}` in `{s}`")))
                .collect()
        })
        .collect()
}

fn render_diagram(d: &SkewPair, t: &SkewTableau) -> String {
    let mut s = String::new();
    for which in 0..2u8 {
        for (comp, labels) in d.list(which).iter().zip(&t.labels[which as usize]) {
            let _ = writeln!(s, "  D{which} component, base content {}", comp.base_content);
            let min_c = comp.cells.iter().map(|c| c.1).min().unwrap_or(0);
            let max_r = comp.cells.iter().map(|c| c.0).max().unwrap_or(0);
            for r in 0..=max_r {
                let mut line = String::from("    ");
                let max_c = comp.cells.iter().filter(|c| c.0 == r).map(|c| c.1).max();
                for c in min_c..=max_c.unwrap_or(min_c - 1) {
                    match comp.cells.iter().position(|&cell| cell == (r, c)) {
                        Some(i) => line.push_str(&format!("{:>4}", labels[i])),
                        None => line.push_str("   ."),
                    }
                }
                s.push_str(line.trim_end());
                s.push('\n');
            }
        }
    }
    s
}

#[derive(Serialize)]
struct DiagramOutput {
    lambda: Bipartition,
    params: Params,
    q: [Vec<Vec<u32>>; 2],
    generic: bool,
    dim_lq: u128,
    p: Vec<usize>,
    weight: diagcoinv::tableaux::WeightSeq,
    diagram: SkewPair,
    tableau: SkewTableau,
    det_vertical_strip: bool,
    chi_vertical_strip: bool,
}

fn cmd_diagram(
    shape: &[u32],
    shape1: &[u32],
    q: &str,
    params: &[String],
    all_p: bool,
    format: Format,
) -> anyhow::Result<String> {
    let lambda = Bipartition::new(Partition::new(shape.to_vec())?, Partition::new(shape1.to_vec())?);
    let assignments: Vec<&str> = params.iter().map(String::as_str).collect();
    let p = Params::parse(&assignments, lambda.size())?;
    let (q0, q1) = q.split_once('|').unwrap_or((q, ""));
    let nested = [parse_rows(q0)?, parse_rows(q1)?];
    let q = QFilling::from_nested(&lambda, &nested)?;
    let lw = LowestWeight::new(lambda.clone(), p.clone())?;
    if !lw.contains(&q) {
        return Err(Error::InvalidShape(format!("{q} violates the admissibility bounds")).into());
    }
    let dag = lw.p_dag(&q)?;
    let pf = dag.minimal_linear_extension();
    let weight = lw.weight_sequence(&pf, &q);
    let (diagram, tableau) = lw.diagram_with_tableau(&q)?;
    if all_p {
        lw.diagram_of_q_exhaustive(&q)?;
    }
    let output = DiagramOutput {
        lambda,
        params: p,
        q: nested,
        generic: lw.is_generic(&q),
        dim_lq: count_linear_extensions(&dag)?,
        p: pf.values().to_vec(),
        weight,
        det_vertical_strip: diagcoinv::shapes::is_vertical_strip(&diagram, 1),
        chi_vertical_strip: diagcoinv::shapes::is_vertical_strip(&diagram, 0),
        diagram,
        tableau,
    };
    Ok(match format {
        Format::Json => to_json(&output)?,
        Format::Csv => {
            let mut s = String::from("label,a,b\n");
            for (i, e) in output.weight.entries.iter().enumerate() {
                writeln!(s, "{},{},{}", i + 1, e.a, e.b)?;
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "Q = {} on {} at {}", render_filling(&output.lambda, &q), output.lambda, output.params)?;
            writeln!(s, "  generic        {}", output.generic)?;
            writeln!(s, "  dim L_Q        {}", output.dim_lq)?;
            writeln!(s, "  minimal P      {:?}", output.p)?;
            let w: Vec<String> = output.weight.entries.iter().map(|e| format!("({}, {})", e.a, e.b)).collect();
            writeln!(s, "  weight         {}", w.join(" "))?;
            s.push_str(&render_diagram(&output.diagram, &output.tableau));
            writeln!(s, "  D1 vertical strip  {}", output.det_vertical_strip)?;
            writeln!(s, "  D0 vertical strip  {}", output.chi_vertical_strip)?;
            if all_p {
                writeln!(s, "  same diagram for every compatible P")?;
            }
            s
        }
    })
}
