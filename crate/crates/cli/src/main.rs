use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tvsplit::harness::{
    convergence_study, efficiency_study, parse_snapshots, run_simulation, threads_from_env,
    write_efficiency_csv, write_table_csv, ConvergenceRow, RunOptions,
};
use tvsplit::problems::{make_problem, ProblemId};
use tvsplit::{configure_threads, FluxFamily, Order, SchemeConfig, SolverError};

#[derive(Parser)]
#[command(name = "tvsplit", version, about = "Toro-Vazquez flux splitting solvers for the Euler equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one simulation and write CSV snapshots.
    Run(Common),
    /// Convergence table against the exact solution, one CSV per order.
    Converge {
        #[command(flatten)]
        common: Common,
        /// Meshes (cells per axis), increasing.
        #[arg(long, value_delimiter = ',', default_values_t = [100usize, 200, 400, 800])]
        meshes: Vec<usize>,
    },
    /// Wall time needed per order to reach target L2 errors.
    Bench {
        #[command(flatten)]
        common: Common,
        /// Meshes for every order; by default each order gets its own ladder.
        #[arg(long, value_delimiter = ',')]
        meshes: Vec<usize>,
        /// Target L2 density errors.
        #[arg(long, value_delimiter = ',', default_values_t = [1e-7])]
        target: Vec<f64>,
    },
}

#[derive(Args)]
struct Common {
    /// Problem id (ex1..ex11) or alias.
    #[arg(value_name = "PROBLEM")]
    positional: Option<String>,
    #[arg(long)]
    problem: Option<String>,
    /// Scheme order; `converge` and `bench` accept a list.
    #[arg(long, value_delimiter = ',')]
    order: Vec<u8>,
    /// tv, cu or hllc.
    #[arg(long)]
    flux: Option<String>,
    #[arg(long)]
    nx: Option<usize>,
    #[arg(long)]
    ny: Option<usize>,
    #[arg(long)]
    cfl: Option<f64>,
    /// Minmod parameter of the second-order scheme.
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long)]
    t_final: Option<f64>,
    /// Shrink the time step so that time error stays below fifth order.
    #[arg(long)]
    accuracy_mode: bool,
    /// Cell size at which the accuracy-mode step equals the plain CFL step
    /// (default 1; `converge` uses the coarsest mesh).
    #[arg(long)]
    accuracy_length: Option<f64>,
    /// Output file for `run` and `bench`, directory for `converge`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Extra snapshot times, comma separated.
    #[arg(long)]
    snapshots: Option<String>,
    /// `key = value` file with the same keys as the flags; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Solver(SolverError),
}

impl From<SolverError> for Failure {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::InvalidConfig(_)
            | SolverError::UnknownProblem(_)
            | SolverError::UnsupportedOrder(_)
            | SolverError::NoExactSolution(_) => Failure::Usage(e.to_string()),
            other => Failure::Solver(other),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

impl Common {
    /// Config file, then flags. The order list is returned separately since
    /// the studies accept several.
    fn options(&self) -> Outcome<(RunOptions, Vec<Order>)> {
        let base = match &self.config {
            Some(path) => RunOptions::from_config_file(path)?,
            None => RunOptions::default(),
        };
        let problem = match (&self.positional, &self.problem) {
            (Some(a), Some(b)) if a != b => {
                return Err(Failure::Usage(format!("problem given twice: {a} and {b}")))
            }
            (Some(p), _) | (None, Some(p)) => Some(p.parse::<ProblemId>()?),
            (None, None) => None,
        };
        let orders = self
            .order
            .iter()
            .map(|&o| Order::from_u8(o))
            .collect::<tvsplit::Result<Vec<_>>>()?;
        let flags = RunOptions {
            problem,
            order: orders.first().copied(),
            flux: self.flux.as_deref().map(str::parse::<FluxFamily>).transpose()?,
            nx: self.nx,
            ny: self.ny,
            cfl: self.cfl,
            theta: self.theta,
            t_final: self.t_final,
            accuracy_mode: self.accuracy_mode.then_some(true),
            accuracy_length: self.accuracy_length,
            out: self.out.clone(),
            snapshots: self.snapshots.as_deref().map(parse_snapshots).transpose()?,
        };
        let opts = base.overlay(flags);
        let orders = if orders.is_empty() {
            opts.order.into_iter().collect()
        } else {
            orders
        };
        Ok((opts, orders))
    }
}

fn problem_of(opts: &RunOptions) -> Outcome<ProblemId> {
    opts.problem
        .ok_or_else(|| Failure::Usage("no problem given (use --problem or a positional id)".into()))
}

fn scheme_for(opts: &RunOptions, order: Order) -> Outcome<SchemeConfig> {
    let opts = RunOptions {
        order: Some(order),
        ..opts.clone()
    };
    Ok(opts.scheme()?)
}

fn run(common: &Common) -> Outcome<()> {
    let (opts, orders) = common.options()?;
    if orders.len() > 1 {
        return Err(Failure::Usage("`run` takes a single --order".into()));
    }
    problem_of(&opts)?;
    let cfg = opts.run_config()?;
    let res = run_simulation(&cfg)?;
    let spec = cfg.spec();
    let g = res.solution.grid();
    println!(
        "{} order {} flux {}: {}x{} cells, t = {}, {} steps, {:.3} s",
        cfg.problem,
        cfg.scheme.order,
        cfg.scheme.flux,
        g.nx,
        g.ny,
        res.solution.time(),
        res.steps,
        res.wall_time
    );
    if spec.has_exact {
        let e = res.solution.errors(&spec)?;
        println!("density errors: L1 {:e}  L2 {:e}  Linf {:e}", e.l1, e.l2, e.linf);
    }
    for f in &res.files {
        println!("wrote {}", f.display());
    }
    Ok(())
}

fn print_table(order: Order, rows: &[ConvergenceRow]) {
    println!("order {order}");
    println!("{:>6} {:>12} {:>7} {:>12} {:>7} {:>9}", "mesh", "L1", "rate", "Linf", "rate", "time[s]");
    let r = |v: Option<f64>| v.map(|x| format!("{x:.3}")).unwrap_or_default();
    for row in rows {
        println!(
            "{:>6} {:>12.3e} {:>7} {:>12.3e} {:>7} {:>9.3}",
            row.mesh,
            row.error_l1,
            r(row.rate_l1),
            row.error_linf,
            r(row.rate_linf),
            row.wall_time
        );
    }
}

fn converge(common: &Common, meshes: &[usize]) -> Outcome<()> {
    let (opts, mut orders) = common.options()?;
    let problem = problem_of(&opts)?;
    if orders.is_empty() {
        orders = Order::ALL.to_vec();
    }
    for order in orders {
        let scheme = scheme_for(&opts, order)?;
        let rows = convergence_study(problem, scheme, meshes, opts.t_final, Default::default())?;
        print_table(order, &rows);
        if let Some(dir) = &opts.out {
            let path = dir.join(format!("{problem}_{}_order{order}.csv", scheme.flux));
            write_table_csv(&rows, &path)?;
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}

/// Mesh ladders that bracket an L2 error of about 1e-7 on the smooth
/// advection problem.
fn default_ladder(order: Order) -> Vec<usize> {
    match order {
        Order::First => vec![800, 1600, 3200, 6400],
        Order::Second => vec![800, 1600, 3200, 6400],
        Order::Third => vec![400, 800, 1600, 3200],
        Order::Fifth => vec![100, 200, 400, 800],
    }
}

fn bench(common: &Common, meshes: &[usize], targets: &[f64]) -> Outcome<()> {
    let (mut opts, mut orders) = common.options()?;
    let problem = opts.problem.unwrap_or(ProblemId::Ex2);
    opts.problem = Some(problem);
    if !make_problem(problem).has_exact {
        return Err(SolverError::NoExactSolution(problem.to_string()).into());
    }
    if orders.is_empty() {
        orders = vec![Order::Second, Order::Third, Order::Fifth];
    }
    let plan = orders
        .iter()
        .map(|&o| {
            let ladder = if meshes.is_empty() {
                default_ladder(o)
            } else {
                meshes.to_vec()
            };
            scheme_for(&opts, o).map(|s| (s, ladder))
        })
        .collect::<Outcome<Vec<_>>>()?;
    let (points, rows) = efficiency_study(problem, &plan, targets, Default::default())?;
    for p in &points {
        println!(
            "order {} mesh {:>5}: L2 {:.3e} in {:.3} s",
            p.order, p.mesh, p.error_l2, p.wall_time
        );
    }
    for r in &rows {
        println!(
            "order {} reaches L2 {:e} in {:.3} s{}",
            r.order,
            r.target,
            r.wall_time,
            if r.bracketed { "" } else { " (extrapolated)" }
        );
    }
    if let Some(path) = &opts.out {
        write_efficiency_csv(&rows, Path::new(path))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = threads_from_env()
        .map_err(Failure::from)
        .map(configure_threads)
        .and_then(|()| match &cli.command {
            Command::Run(c) => run(c),
            Command::Converge { common, meshes } => converge(common, meshes),
            Command::Bench {
                common,
                meshes,
                target,
            } => bench(common, meshes, target),
        });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Solver(e)) => {
            eprintln!("solver error: {e}");
            ExitCode::from(1)
        }
    }
}
