use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use legendrian_core::algebra::{gl_order, QSqrt, RationalAS};
use legendrian_core::builtins::resolve_front;
use legendrian_core::dga::{
    build_dga_with, count_representations, normalize_count, total_rep_number_with, RepQuery,
    DEFAULT_DISK_BUDGET, DEFAULT_REP_BUDGET,
};
use legendrian_core::diagram::{
    framed_from_front, ng_resolution, satellite, FrontDiagram, LegendrianTangle, PermutationBraid,
};
use legendrian_core::kauffman::{
    colored_kauffman, kauffman_with, SkeinConfig, DEFAULT_NODE_BUDGET,
};
use legendrian_core::ruling::{
    colored_ruling_polynomial, enumerate_rulings, is_reduced, reduced_ruling_polynomial,
    ruling_polynomial,
};
use legendrian_core::verify::{
    run_suite, suite_lemma_count, suite_theorem_rulings_kauffman, Suite, VerifyConfig,
};
use legendrian_core::{Error, Exec};

/// Invariants of Legendrian knots given as front diagrams.
///
/// A front argument is a built-in name (`unknot`, `unknot-stab`,
/// `trefoil-rh`), a path to a `.front` file, or inline front text such as
/// `"L1; B1 *; R1"`.
#[derive(Parser, Debug)]
#[command(name = "legendrian", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Emit a JSON record instead of text.
    #[arg(long, global = true, env = "LEGENDRIAN_JSON")]
    json: bool,
    /// Worker threads; 1 runs every kernel sequentially.
    #[arg(long, global = true, env = "LEGENDRIAN_WORKERS")]
    workers: Option<usize>,
    /// Node budget for skein recursion and representation search.
    #[arg(long, global = true, env = "LEGENDRIAN_BUDGET_NODES")]
    budget_nodes: Option<u64>,
    /// Seed for the randomized verification suites.
    #[arg(long, global = true, env = "LEGENDRIAN_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ruling polynomial of a front or of one of its satellites.
    Rulings {
        front: String,
        /// Count only rulings reduced at the pattern (needs --satellite).
        #[arg(long)]
        reduced: bool,
        /// Satellite with this permutation braid, 1-based, e.g. `21`.
        #[arg(long)]
        satellite: Option<String>,
        /// Satellite with the identity pattern on this many copies.
        #[arg(long)]
        copies: Option<usize>,
        /// List the switches of every ruling.
        #[arg(long)]
        list: bool,
    },
    /// Kauffman polynomial of the blackboard-framed front.
    Kauffman {
        front: String,
        /// Colored Kauffman polynomial with this many colors.
        #[arg(long)]
        colored: Option<usize>,
        /// Print the a^-1 = 0 specialization.
        #[arg(long)]
        specialize: bool,
    },
    /// Chekanov-Eliashberg DGA of the Ng resolution.
    Dga {
        front: String,
        #[arg(long)]
        print_differential: bool,
    },
    /// Representation counts over a finite field.
    Reps {
        front: String,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[arg(short = 'q', default_value_t = 2)]
        q: u64,
        /// Split the count by Bruhat cell of the base point product.
        #[arg(long)]
        by_cell: bool,
    },
    /// Colored ruling polynomial next to the specialized colored Kauffman
    /// polynomial, and the representation number when -q is given.
    Colored {
        front: String,
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
        #[arg(short = 'q')]
        q: Option<u64>,
    },
    /// Run a verification suite (or `all`).
    Verify {
        suite: String,
        /// Restrict to this front instead of the built-in and random ones.
        front: Option<String>,
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(short = 'q')]
        q: Option<u64>,
        /// Number of random fronts in the randomized suites.
        #[arg(long, default_value_t = 20)]
        random: usize,
    },
}

/// Failure modes, mapped onto exit codes.
enum Failure {
    Verification,
    Core(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    global: Global,
    exec: Exec,
}

impl Ctx {
    fn skein(&self) -> SkeinConfig {
        SkeinConfig {
            node_budget: self
                .global
                .budget_nodes
                .map(|b| b as usize)
                .unwrap_or(DEFAULT_NODE_BUDGET),
            exec: self.exec,
            ..SkeinConfig::default()
        }
    }

    fn rep_budget(&self) -> u64 {
        self.global.budget_nodes.unwrap_or(DEFAULT_REP_BUDGET)
    }

    fn disk_budget(&self) -> usize {
        self.global
            .budget_nodes
            .map(|b| b as usize)
            .unwrap_or(DEFAULT_DISK_BUDGET)
    }

    fn query(&self, n: usize, q: u64) -> RepQuery {
        RepQuery {
            budget: self.rep_budget(),
            ..RepQuery::new(n, q).with_exec(self.exec)
        }
    }

    /// Prints `record` (with the schema tag) in JSON mode, `text` otherwise.
    fn emit(&self, command: &str, record: Value, text: &str) {
        if self.global.json {
            let mut obj = serde_json::Map::new();
            obj.insert("schema".into(), json!(1));
            obj.insert("command".into(), json!(command));
            if let Value::Object(m) = record {
                obj.extend(m);
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable")
            );
        } else {
            print!("{text}");
        }
    }
}

fn qsqrt_json(v: &QSqrt) -> Value {
    json!({ "rational": v.rational().to_string(), "sqrtq_coeff": v.sqrt_coeff().to_string(), "text": v.render() })
}

fn front_arg(s: &str) -> Result<FrontDiagram, Failure> {
    Ok(resolve_front(s)?)
}

fn rulings(
    ctx: &Ctx,
    front: &str,
    reduced: bool,
    sat: Option<String>,
    copies: Option<usize>,
    list: bool,
) -> Outcome {
    let k = front_arg(front)?;
    let pattern: Option<LegendrianTangle> = match (&sat, copies) {
        (Some(_), Some(_)) => {
            return Err(Failure::Usage(
                "--satellite and --copies are exclusive".into(),
            ))
        }
        (Some(p), None) => Some(PermutationBraid::parse(p)?.to_tangle()),
        (None, Some(n)) => Some(LegendrianTangle::identity(n)),
        (None, None) => None,
    };
    if reduced && pattern.is_none() {
        return Err(Failure::Usage(
            "--reduced needs --satellite or --copies".into(),
        ));
    }
    let (target, markup) = match &pattern {
        Some(p) => {
            let s = satellite(&k, p)?;
            (s.front, Some(s.markup))
        }
        None => (k.clone(), None),
    };
    let poly = match (&pattern, reduced) {
        (Some(p), true) => reduced_ruling_polynomial(&k, p, ctx.exec)?,
        _ => ruling_polynomial(&target),
    };
    let mut text = format!("{}\n", poly.render());
    let mut listed = Vec::new();
    if list {
        for r in enumerate_rulings(&target) {
            if reduced && !is_reduced(&r, markup.as_ref())? {
                continue;
            }
            let sw: Vec<usize> = r.switches.iter().map(|e| e + 1).collect();
            text.push_str(&format!("j = {}: switches {:?}\n", r.j, sw));
            listed.push(json!({ "j": r.j, "switches": sw }));
        }
    }
    let mut rec = json!({ "input": k.render(), "polynomial": poly.render() });
    if let Some(p) = &pattern {
        rec["pattern"] = json!(p.render());
        rec["reduced"] = json!(reduced);
    }
    if list {
        rec["rulings"] = json!(listed);
    }
    ctx.emit("rulings", rec, &text);
    Ok(())
}

fn kauffman(ctx: &Ctx, front: &str, colored: Option<usize>, specialize: bool) -> Outcome {
    let k = front_arg(front)?;
    let fr = framed_from_front(&k);
    // Uncolored values are Laurent in a and z and print that way.
    let (value, az) = match colored {
        Some(n) => (colored_kauffman(&k, n, ctx.skein())?, None),
        None => {
            let f = kauffman_with(&fr, ctx.skein())?;
            (RationalAS::from_laurent_az(&f), Some(f))
        }
    };
    let specialized = value.specialize_a_inv_zero().map(|s| match &az {
        Some(f) => f.a_coeff(0).render(),
        None => s.to_string(),
    });
    let spec_text = specialized.as_ref().ok().cloned();
    let poly_text = az
        .as_ref()
        .map_or_else(|| value.to_string(), |f| f.render());
    let text = if specialize {
        format!("{}\n", specialized?)
    } else {
        format!("{poly_text}\n")
    };
    let rec = json!({
        "input": k.render(),
        "colors": colored.unwrap_or(1),
        "writhe": fr.writhe(),
        "degree_a": value.deg_a().to_string(),
        "polynomial": poly_text,
        "specialized": spec_text,
    });
    ctx.emit("kauffman", rec, &text);
    Ok(())
}

fn dga(ctx: &Ctx, front: &str, print_differential: bool) -> Outcome {
    let k = front_arg(front)?.with_base_point_per_component();
    let d = build_dga_with(&ng_resolution(&k), ctx.disk_budget())?;
    let gens: Vec<String> = (0..d.rb())
        .map(|i| d.name(legendrian_core::dga::Letter::Chord(i)))
        .collect();
    let diff: BTreeMap<String, String> = (0..d.rb())
        .map(|i| (gens[i].clone(), d.render_differential(i)))
        .collect();
    let zero = d.d_squared_is_zero();
    let mut text = format!("rb = {}, ell = {}, d^2 = 0: {}\n", d.rb(), d.ell(), zero);
    if print_differential {
        text.push_str(&d.to_string());
    }
    let rec = json!({
        "input": k.render(),
        "rb": d.rb(),
        "ell": d.ell(),
        "generators": gens,
        "differential": diff,
        "d_squared_zero": zero,
    });
    ctx.emit("dga", rec, &text);
    if zero {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn reps(ctx: &Ctx, front: &str, n: usize, q: u64, by_cell: bool) -> Outcome {
    let k = front_arg(front)?.with_base_point_per_component();
    let d = build_dga_with(&ng_resolution(&k), ctx.disk_budget())?;
    let mut counts: BTreeMap<String, u128> = BTreeMap::new();
    let total = if by_cell {
        let mut sum = 0;
        for b in PermutationBraid::all(n) {
            let c = count_representations(&d, &ctx.query(n, q).with_cell(b.perm().to_vec()))?;
            counts.insert(b.render(), c);
            sum += c;
        }
        sum
    } else {
        let c = count_representations(&d, &ctx.query(n, q))?;
        counts.insert("all".into(), c);
        c
    };
    let normalized = normalize_count(total, n, q, d.rb(), d.ell());
    let mut text = String::new();
    for (cell, c) in &counts {
        text.push_str(&format!("{cell}: {c}\n"));
    }
    text.push_str(&format!("normalized: {}\n", normalized.render()));
    let rec = json!({
        "input": k.render(),
        "n": n,
        "q": q,
        "rb": d.rb(),
        "ell": d.ell(),
        "gl_order": gl_order(n as u32, q).to_string(),
        "counts": counts,
        "normalized": qsqrt_json(&normalized),
    });
    ctx.emit("reps", rec, &text);
    Ok(())
}

fn colored(ctx: &Ctx, front: &str, n: usize, q: Option<u64>) -> Outcome {
    let k = front_arg(front)?;
    let ruling = colored_ruling_polynomial(&k, n, ctx.exec)?;
    let kauff = colored_kauffman(&k, n, ctx.skein())?;
    let spec = kauff.specialize_a_inv_zero()?;
    let agree = spec == ruling;
    let mut text = format!(
        "colored rulings: {ruling}\nspecialized colored Kauffman: {spec}\nequal: {agree}\n"
    );
    let mut rec = json!({
        "input": k.render(),
        "n": n,
        "colored_ruling": ruling.to_string(),
        "colored_kauffman": kauff.to_string(),
        "specialized": spec.to_string(),
        "equal": agree,
    });
    let mut ok = agree;
    if let Some(q) = q {
        let rep = total_rep_number_with(&k, &ctx.query(n, q))?;
        let at = ruling.eval_sqrt_q(q)?;
        ok &= rep == at;
        text.push_str(&format!(
            "at s = sqrt({q}): rulings {}, representations {}\n",
            at.render(),
            rep.render()
        ));
        rec["q"] = json!(q);
        rec["ruling_at_q"] = qsqrt_json(&at);
        rec["representation_number"] = qsqrt_json(&rep);
    }
    ctx.emit("colored", rec, &text);
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct VerifyRecord {
    suites: Vec<legendrian_core::verify::SuiteReport>,
    passed: bool,
}

fn verify(
    ctx: &Ctx,
    suite: &str,
    front: Option<String>,
    n: Option<usize>,
    q: Option<u64>,
    random: usize,
) -> Outcome {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::parse(suite)?]
    };
    let mut cfg = VerifyConfig {
        exec: ctx.exec,
        skein: ctx.skein(),
        rep_budget: ctx.rep_budget(),
        seed: ctx.global.seed,
        random_fronts: random,
        ..VerifyConfig::default()
    };
    if let Some(f) = &front {
        cfg.fronts = vec![(f.clone(), front_arg(f)?)];
    }
    if n.is_some() || q.is_some() {
        cfg.grid = vec![(n.unwrap_or(1), q.unwrap_or(2))];
    }
    let mut reports = Vec::new();
    for s in suites {
        let r = match s {
            Suite::LemmaCount => suite_lemma_count(&cfg, n.unwrap_or(2), q.unwrap_or(2))?,
            Suite::TheoremRulingsKauffman if n.is_some() => {
                suite_theorem_rulings_kauffman(&cfg, &(1..=n.unwrap()).collect::<Vec<_>>())?
            }
            _ => run_suite(s, &cfg)?,
        };
        reports.push(r);
    }
    let passed = reports.iter().all(|r| r.passed);
    let mut text = String::new();
    for r in &reports {
        for c in &r.checks {
            text.push_str(&format!(
                "{} {}: {}\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            ));
        }
        let failed = r.failures().count();
        text.push_str(&format!(
            "{} {}: {} checks, {} failed\n",
            if r.passed { "PASS" } else { "FAIL" },
            r.suite,
            r.checks.len(),
            failed
        ));
    }
    let rec = serde_json::to_value(VerifyRecord {
        suites: reports,
        passed,
    })
    .expect("serializable");
    ctx.emit("verify", rec, &text);
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Outcome {
    let workers = cli.global.workers;
    if workers == Some(0) {
        return Err(Failure::Usage("--workers must be positive".into()));
    }
    if cli.global.budget_nodes == Some(0) {
        return Err(Failure::Usage("--budget-nodes must be positive".into()));
    }
    if let Some(w) = workers {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global();
    }
    let exec = if workers == Some(1) {
        Exec::Sequential
    } else {
        Exec::Parallel
    };
    let ctx = Ctx {
        global: cli.global,
        exec,
    };
    match cli.command {
        Command::Rulings {
            front,
            reduced,
            satellite,
            copies,
            list,
        } => rulings(&ctx, &front, reduced, satellite, copies, list),
        Command::Kauffman {
            front,
            colored,
            specialize,
        } => kauffman(&ctx, &front, colored, specialize),
        Command::Dga {
            front,
            print_differential,
        } => dga(&ctx, &front, print_differential),
        Command::Reps {
            front,
            n,
            q,
            by_cell,
        } => reps(&ctx, &front, n, q, by_cell),
        Command::Colored { front, n, q } => colored(&ctx, &front, n, q),
        Command::Verify {
            suite,
            front,
            n,
            q,
            random,
        } => verify(&ctx, &suite, front, n, q, random),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_budget() { 3 } else { 2 })
        }
    }
}
