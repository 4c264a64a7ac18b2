use std::fmt::Write as _;
use std::io::{Read, Write as _};
use std::process::ExitCode;

use bisplit::campaign::Campaign;
use bisplit::configurations::Diagram;
use bisplit::input::Input;
use bisplit::oracle::{default_box, point_set_box, IdealModel, Locus, DEFAULT_PRIME};
use bisplit::resolutions::betti_table;
use bisplit::splittings::{self, enumerate_bipartitions, oracle_split_tables, SplitPartition, SplitReport};
use bisplit::{Arrangement, Bidegree, GridPointSet, PrimeOracle};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "bisplit", version, about = "Ideals of points and lines in P1 x P1: generators, Betti tables, splittings")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Prime for the oracle field; must exceed every label.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u64,

    /// Oracle box `A,B`; defaults to one past the ambient.
    #[arg(long = "box", global = true, value_parser = parse_pair)]
    bound: Option<(usize, usize)>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// Path, `-` for stdin, or inline JSON.
    #[arg(long)]
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// α, β, α⋆, ACM verdict and Ferrers diagram.
    Analyze(InputArgs),
    /// Minimal generators in standard order.
    Gens(InputArgs),
    /// Bigraded Betti table.
    Betti {
        #[command(flatten)]
        input: InputArgs,
        /// Recompute with the oracle and compare.
        #[arg(long)]
        oracle_check: bool,
    },
    /// Classify bipartitions of the minimal generators.
    Splits {
        #[command(flatten)]
        input: InputArgs,
        /// 1-based positions of side A; all bipartitions when omitted.
        #[arg(long, value_delimiter = ',')]
        side_a: Option<Vec<usize>>,
        /// Check Betti additivity numerically for each partition.
        #[arg(long)]
        oracle_check: bool,
    },
    /// Randomized checks of the structural results.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Largest ruling counts `H,V` of random instances.
        #[arg(long, value_parser = parse_pair, default_value = "6,6")]
        size: (usize, usize),
    },
    /// Split off the minimal generators that are products of rulings
    /// (open question; nothing is asserted).
    Experiment(InputArgs),
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<bisplit::Error> for Failure {
    fn from(e: bisplit::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(String, Value), Failure>;

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected A,B")?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

fn read_input(spec: &str) -> Result<Input, Failure> {
    let text = if spec == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| Failure::Usage(e.to_string()))?;
        buf
    } else if spec.trim_start().starts_with('{') {
        spec.to_string()
    } else {
        std::fs::read_to_string(spec).map_err(|e| Failure::Usage(format!("{spec}: {e}")))?
    };
    Ok(Input::parse(&text)?)
}

fn max_label(input: &Input) -> u64 {
    match input {
        Input::Acm(c) => c.h_labels().iter().chain(c.v_labels()).copied().max().unwrap_or(0),
        Input::Points(x) => x.max_label(),
        Input::Arrangement(w) => w.frame().max_label(),
        Input::Generators(s) => s.frame().max_label(),
    }
}

struct Ctx {
    format: Format,
    oracle: PrimeOracle,
    bound: Option<Bidegree>,
}

impl Ctx {
    fn load(&self, spec: &str) -> Result<Input, Failure> {
        let input = read_input(spec)?;
        let p = self.oracle.field().modulus();
        if max_label(&input) >= p {
            return Err(Failure::Usage(format!("labels must be below the prime {p}")));
        }
        Ok(input)
    }

    fn bound_for(&self, fallback: Bidegree) -> Bidegree {
        self.bound.unwrap_or(fallback)
    }
}

fn arrangement_of(input: &Input, what: &str) -> Result<Arrangement, Failure> {
    input.to_arrangement()?.ok_or_else(|| {
        Failure::Usage(format!(
            "{what} needs an ACM configuration or an arrangement; this point set is not ACM \
             (use `bisplit betti` for oracle generator degrees or `bisplit experiment`)"
        ))
    })
}

fn analyze(ctx: &Ctx, spec: &str) -> Outcome {
    let input = ctx.load(spec)?;
    let (points, lines, diagram) = match &input {
        Input::Points(x) => (x.clone(), None, x.render_ferrers()),
        Input::Acm(c) => (c.to_point_set(), None, c.render_ferrers()),
        _ => {
            let w = arrangement_of(&input, "analyze")?;
            (w.points().to_point_set(), Some(w.line_degree()), w.render_ferrers())
        }
    };
    let (alpha, beta) = points.alpha_beta();
    let star = alpha.conjugate();
    let acm = points.is_acm();
    let mut text = format!("kind: {}\n", input.kind());
    if let Some(l) = lines {
        writeln!(text, "lines: {l}").unwrap();
    }
    writeln!(text, "points: {}", points.len()).unwrap();
    writeln!(text, "alpha: {alpha}\nbeta: {beta}\nalpha_star: {star}\nacm: {acm}").unwrap();
    text.push_str(&diagram);
    let mut value = json!({
        "kind": input.kind(),
        "points": points.len(),
        "alpha": alpha,
        "beta": beta,
        "alpha_star": star,
        "acm": acm,
        "diagram": diagram,
    });
    if let Some(l) = lines {
        value["lines"] = json!(l);
    }
    Ok((text, value))
}

fn gens(ctx: &Ctx, spec: &str) -> Outcome {
    let w = arrangement_of(&ctx.load(spec)?, "gens")?;
    let g = w.generators();
    let mut text = String::new();
    let mut list = Vec::new();
    for (i, &d) in g.standard_order().iter().enumerate() {
        let product = g.describe(d);
        writeln!(text, "tau{} {d} {product}", i + 1).unwrap();
        list.push(json!({"position": i + 1, "bidegree": d, "product": product}));
    }
    Ok((text, json!({"arrangement": w, "gens": list})))
}

fn betti(ctx: &Ctx, spec: &str, check: bool) -> Outcome {
    let input = ctx.load(spec)?;
    let o = &ctx.oracle;
    if let Input::Points(x) = &input {
        if !x.is_acm() {
            return oracle_generators(ctx, x);
        }
    }
    let w = arrangement_of(&input, "betti")?;
    let table = betti_table(&w);
    let mut text = table.render();
    let mut value = json!({"table": table});
    if check {
        let bound = ctx.bound_for(default_box(w.frame()));
        let numeric = o.koszul_table(&o.arrangement_ideal(&w)?, bound)?;
        if numeric != table {
            return Err(Failure::Check(format!(
                "oracle table differs\nclosed form:\n{}oracle:\n{}",
                table.render(),
                numeric.render()
            )));
        }
        text.push_str("oracle check: pass\n");
        value["oracle_check"] = json!("pass");
    }
    Ok((text, value))
}

/// Generator degrees of a non-ACM point ideal, from the oracle alone.
fn oracle_generators(ctx: &Ctx, x: &GridPointSet) -> Outcome {
    let bound = ctx.bound_for(point_set_box(x));
    let o = &ctx.oracle;
    let grid = o.piece_grid(&IdealModel::Vanishing(Locus::of_points(x)), bound)?;
    let beta0 = o.beta0_box(&grid)?;
    let mut text = String::from("not ACM; oracle generator degrees\nbeta_0:");
    for (d, n) in &beta0 {
        for _ in 0..*n {
            write!(text, " {d}").unwrap();
        }
    }
    text.push('\n');
    let list: Vec<Value> = beta0.iter().map(|(d, n)| json!({"a": d.a, "b": d.b, "mult": n})).collect();
    Ok((text, json!({"acm": false, "beta0": list})))
}

fn splits(ctx: &Ctx, spec: &str, side_a: Option<Vec<usize>>, check: bool) -> Outcome {
    let w = arrangement_of(&ctx.load(spec)?, "splits")?;
    let g = w.generators();
    if g.len() < 2 {
        return Err(Failure::Usage(bisplit::Error::NotSplittable(g.len()).to_string()));
    }
    let partitions: Vec<SplitPartition> = match side_a {
        Some(positions) => {
            if positions.contains(&0) {
                return Err(Failure::Usage("positions are 1-based".into()));
            }
            let zero_based: Vec<usize> = positions.iter().map(|p| p - 1).collect();
            vec![SplitPartition::from_side_a(g.clone(), &zero_based)?]
        }
        None => enumerate_bipartitions(&g)?.collect(),
    };
    let bound = ctx.bound_for(default_box(w.frame()));
    let mut text = String::new();
    let mut rows = Vec::new();
    let (mut one_cut, mut betti, mut point) = (0, 0, 0);
    for s in &partitions {
        let r = SplitReport::new(s)?;
        one_cut += usize::from(r.cut == 1);
        betti += usize::from(r.betti_splitting);
        point += usize::from(r.point_splitting);
        let set = |v: &[usize]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        write!(
            text,
            "A={{{}}} B={{{}}} cut={} point={} betti={} JcapK_gens={}",
            set(&r.side_a),
            set(&r.side_b),
            r.cut,
            r.point_splitting,
            r.betti_splitting,
            r.jk_gens
        )
        .unwrap();
        let mut row = serde_json::to_value(&r).expect("report serializes");
        if check {
            let additive = oracle_split_tables(&ctx.oracle, s, bound)?.additive();
            if additive != r.betti_splitting {
                return Err(Failure::Check(format!(
                    "A={:?}: structural betti={} but oracle additivity={additive}",
                    r.side_a, r.betti_splitting
                )));
            }
            text.push_str(" oracle=pass");
            row["oracle_additive"] = json!(additive);
        }
        text.push('\n');
        rows.push(row);
    }
    writeln!(
        text,
        "total={} one_cut={one_cut} betti={betti} point={point}",
        partitions.len()
    )
    .unwrap();
    let summary = json!({"total": partitions.len(), "one_cut": one_cut, "betti": betti, "point": point});
    Ok((text, json!({"partitions": rows, "summary": summary})))
}

fn verify(ctx: &Ctx, seed: u64, trials: usize, size: (usize, usize)) -> Outcome {
    if trials == 0 {
        return Err(Failure::Usage("--trials must be at least 1".into()));
    }
    if size.0 == 0 || size.1 == 0 {
        return Err(Failure::Usage("--size must be positive".into()));
    }
    let mut campaign = Campaign::new(seed, trials);
    campaign.bound = size;
    campaign.prime = ctx.oracle.field().modulus();
    let report = campaign.run()?;
    let value = serde_json::to_value(&report).expect("report serializes");
    let mut text = String::new();
    for s in &report.suites {
        writeln!(text, "{}: {}/{} passed", s.suite, s.passed, trials).unwrap();
        for f in &s.failures {
            writeln!(text, "  counterexample: {}", f.detail).unwrap();
        }
    }
    if report.all_passed() {
        Ok((text, value))
    } else {
        let body = match ctx.format {
            Format::Text => text,
            Format::Json => serde_json::to_string_pretty(&value).expect("json"),
        };
        Err(Failure::Check(body))
    }
}

fn experiment(ctx: &Ctx, spec: &str) -> Outcome {
    let x = match ctx.load(spec)? {
        Input::Points(x) => x,
        Input::Acm(c) => c.to_point_set(),
        _ => return Err(Failure::Usage("experiment needs a point set".into())),
    };
    if x.is_empty() {
        return Err(Failure::Usage("experiment needs a nonempty point set".into()));
    }
    let e = splittings::ruling_product_experiment(&ctx.oracle, &x, ctx.bound_for(point_set_box(&x)))?;
    let list = |v: &[Bidegree]| {
        if v.is_empty() {
            "none".to_string()
        } else {
            v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
        }
    };
    let mut text = format!(
        "generators: {}\nproducts of rulings: {}\nothers: {}\n",
        list(&e.generator_degrees),
        list(&e.product_degrees),
        list(&e.other_degrees)
    );
    for c in &e.candidates {
        writeln!(
            text,
            "A' = {{{}}}: zero set {} points, point ideal {}",
            c.a_prime.join(" "),
            c.zero_set.len(),
            c.point_ideal
        )
        .unwrap();
    }
    let found = e.candidates.iter().filter(|c| c.point_ideal).count();
    writeln!(text, "point sides found: {found} of {}", e.candidates.len()).unwrap();
    Ok((text, serde_json::to_value(&e).expect("experiment serializes")))
}

fn run(cli: Cli) -> Outcome {
    let oracle = PrimeOracle::with_prime(cli.prime)?;
    let ctx = Ctx { format: cli.format, oracle, bound: cli.bound.map(Bidegree::from) };
    match cli.command {
        Command::Analyze(i) => analyze(&ctx, &i.input),
        Command::Gens(i) => gens(&ctx, &i.input),
        Command::Betti { input, oracle_check } => betti(&ctx, &input.input, oracle_check),
        Command::Splits { input, side_a, oracle_check } => splits(&ctx, &input.input, side_a, oracle_check),
        Command::Verify { seed, trials, size } => verify(&ctx, seed, trials, size),
        Command::Experiment(i) => experiment(&ctx, &i.input),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok((text, value)) => {
            let out = match format {
                Format::Text => text,
                Format::Json => serde_json::to_string_pretty(&value).expect("json") + "\n",
            };
            // A closed pipe (e.g. `| head`) is not an error for a report.
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("cross-check failed:\n{msg}");
            ExitCode::from(2)
        }
    }
}
