use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use monolab::betti::{alexander_dual_ideal, betti_table, suppreg, Characteristic};
use monolab::classes::{
    is_i_stable, is_sequentially_pure, is_variable_decomposable, is_weakly_polymatroidal,
    wp_profile, StabilityVariant,
};
use monolab::complex::{
    co_stable_check, dual_ideal, is_shellable, is_vertex_decomposable, is_weakly_co_polymatroidal,
    SimplicialComplex,
};
use monolab::harness::{self, GeneratorSpec};
use monolab::io::{parse_complex, parse_ideal, serialize_complex, serialize_ideal, ParsedIdeal};
use monolab::quotient::{
    componentwise_lq, constrained_lq_report, is_admissible_order, is_popescu_order,
    pack_compatibility, ComponentMode, GeneratorOrder, OrderConstraint, DEFAULT_GENERATOR_CAP,
    MAX_GENERATOR_CAP,
};
use monolab::{Error, ExponentVector, IrreducibleIdeal, PropertyReport, Verdict};

/// Combinatorial properties of monomial ideals and simplicial complexes.
#[derive(Parser)]
#[command(name = "monolab", version)]
struct Cli {
    /// Emit JSON instead of the text summary.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a property of the ideal in FILE.
    Check(CheckArgs),
    /// Operate on the complex in FILE.
    Complex(ComplexArgs),
    /// Multigraded Betti numbers.
    Betti {
        file: PathBuf,
        /// Field characteristic, 0 or a prime.
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
    /// Support-regularity.
    Suppreg { file: PathBuf },
    /// Alexander dual with respect to the exponent vector G.
    DualIdeal {
        #[arg(long, value_parser = parse_vector)]
        g: ExponentVector,
        file: PathBuf,
    },
    /// Audit a law on random instances.
    Audit(AuditArgs),
    /// Search for an ideal with componentwise linear quotients but none overall.
    Mine(MineArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Lq,
    LqSdi,
    LqDi,
    Popescu,
    CptLq,
    Pack,
    Wp,
    CptWp,
    ScptWp,
    Stable,
    Vd,
    Svd,
    Seqpure,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Is,
    Wis,
    Sis,
}

impl From<VariantArg> for StabilityVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Is => StabilityVariant::Stable,
            VariantArg::Wis => StabilityVariant::Weak,
            VariantArg::Sis => StabilityVariant::Strong,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Degree,
    Support,
    SupportAtLeast,
}

impl From<ModeArg> for ComponentMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Degree => ComponentMode::Degree,
            ModeArg::Support => ComponentMode::Support,
            ModeArg::SupportAtLeast => ComponentMode::SupportAtLeast,
        }
    }
}

#[derive(Args)]
struct CheckArgs {
    property: Property,
    file: PathBuf,
    /// Check the generators in file order instead of searching (lq, popescu).
    #[arg(long)]
    as_listed: bool,
    /// Stability variant.
    #[arg(long, value_enum, default_value = "wis")]
    variant: VariantArg,
    /// Parameter exponents such as `2,2,0`; 0 marks an absent variable. Defaults to all 2.
    #[arg(long, value_parser = parse_vector)]
    param: Option<ExponentVector>,
    /// Popescu split index (1-based).
    #[arg(long, default_value_t = 1)]
    s: usize,
    /// Check only condition (b) of the Popescu order.
    #[arg(long)]
    weak: bool,
    /// Components examined by cpt-lq.
    #[arg(long, value_enum, default_value = "degree")]
    mode: ModeArg,
    /// Generator cap for order searches.
    #[arg(long, default_value_t = DEFAULT_GENERATOR_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexOp {
    Shellable,
    Vd,
    Wcp,
    Costable,
    Skeleton,
    FacetSkeleton,
    Dual,
}

#[derive(Args)]
struct ComplexArgs {
    op: ComplexOp,
    file: PathBuf,
    #[arg(long, default_value_t = 0)]
    r: usize,
    #[arg(long, default_value_t = 0)]
    s: usize,
    #[arg(long, default_value_t = 1)]
    i: usize,
    /// Search all vertex relabelings (wcp).
    #[arg(long)]
    essential: bool,
    #[arg(long, value_enum, default_value = "wis")]
    variant: VariantArg,
    #[arg(long, default_value_t = DEFAULT_GENERATOR_CAP)]
    cap: usize,
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    maxdeg: u32,
    #[arg(long, default_value_t = 3)]
    maxexp: u32,
    #[arg(long, default_value_t = 1)]
    min_gens: usize,
    #[arg(long, default_value_t = 5)]
    max_gens: usize,
    #[arg(long)]
    squarefree: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SpecArgs {
    fn spec(&self) -> GeneratorSpec {
        GeneratorSpec {
            n: self.n,
            max_exponent: self.maxexp,
            max_degree: self.maxdeg,
            min_gens: self.min_gens,
            max_gens: self.max_gens,
            squarefree: self.squarefree,
            seed: self.seed,
        }
    }
}

#[derive(Args)]
struct AuditArgs {
    /// Law name, or `all`; `=>` may stand for the arrow.
    #[arg(long, required_unless_present = "list")]
    law: Option<String>,
    #[arg(long, default_value_t = 200)]
    count: u64,
    /// List the registered laws.
    #[arg(long)]
    list: bool,
    #[command(flatten)]
    spec: SpecArgs,
}

#[derive(Args)]
struct MineArgs {
    #[arg(long, default_value_t = 1000)]
    budget: u64,
    /// Enumerate every generating set within the bounds instead of sampling.
    #[arg(long)]
    exhaustive: bool,
    #[command(flatten)]
    spec: SpecArgs,
}

fn parse_vector(s: &str) -> Result<ExponentVector, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid entry `{t}`"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(ExponentVector::new)
}

/// Command result: JSON payload, text view and exit status.
struct Output {
    json: Value,
    text: String,
    status: u8,
}

fn verdict_status(v: Verdict) -> u8 {
    match v {
        Verdict::Holds => 0,
        Verdict::Fails => 1,
        Verdict::Unknown => 3,
    }
}

fn to_json(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("values serialize")
}

fn report(r: PropertyReport) -> Output {
    let mut text = format!(
        "{}: {}",
        r.property,
        to_json(&r.verdict).as_str().unwrap_or("?")
    );
    if let Some(w) = &r.witness {
        text.push('\n');
        text.push_str(&serde_json::to_string(w).expect("witness serializes"));
    }
    Output {
        status: verdict_status(r.verdict),
        json: to_json(&r),
        text,
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_ideal(path: &Path) -> anyhow::Result<ParsedIdeal> {
    let parsed = parse_ideal(&read(path)?)?;
    for w in &parsed.warnings {
        eprintln!("warning: {w}");
    }
    Ok(parsed)
}

fn load_complex(path: &Path) -> anyhow::Result<SimplicialComplex> {
    Ok(parse_complex(&read(path)?)?)
}

fn listed_order(p: &ParsedIdeal) -> anyhow::Result<GeneratorOrder> {
    Ok(GeneratorOrder::from_monomials(
        p.ideal.n(),
        p.listed.clone(),
    )?)
}

fn check(a: &CheckArgs) -> anyhow::Result<Output> {
    let parsed = load_ideal(&a.file)?;
    let i = &parsed.ideal;
    let cap = a.cap.min(MAX_GENERATOR_CAP);
    let out = match a.property {
        Property::Lq if a.as_listed => report(is_admissible_order(&listed_order(&parsed)?)),
        Property::Lq => report(constrained_lq_report(i, OrderConstraint::None, cap)),
        Property::LqSdi => report(constrained_lq_report(
            i,
            OrderConstraint::SupportDegreeIncreasing,
            cap,
        )),
        Property::LqDi => report(constrained_lq_report(
            i,
            OrderConstraint::DegreeIncreasing,
            cap,
        )),
        Property::Popescu => {
            let order = if a.as_listed {
                listed_order(&parsed)?
            } else {
                match monolab::quotient::find_admissible_order(i, OrderConstraint::None, cap)? {
                    Some(o) => o,
                    None => bail!(
                        "no admissible order exists; pass --as-listed to check the file order"
                    ),
                }
            };
            report(is_popescu_order(&order, a.s, a.weak)?)
        }
        Property::CptLq => {
            let per = componentwise_lq(i, a.mode.into(), cap);
            let agg = monolab::quotient::componentwise_lq_report(i, a.mode.into(), cap);
            let mut o = report(agg);
            o.json = json!({ "report": o.json, "components": to_json(&per) });
            o
        }
        Property::Pack => report(pack_compatibility(i, cap)?),
        Property::Wp => report(is_weakly_polymatroidal(i)),
        Property::CptWp | Property::ScptWp => {
            let p = wp_profile(i)?;
            let (name, ok) = match a.property {
                Property::CptWp => ("componentwise-wp", p.cpt_wp),
                _ => ("support-componentwise-wp", p.scpt_wp),
            };
            let verdict = if ok { Verdict::Holds } else { Verdict::Fails };
            Output {
                json: json!({ "property": name, "verdict": verdict, "profile": to_json(&p) }),
                text: format!(
                    "{name}: {}\n{}",
                    to_json(&verdict).as_str().unwrap_or("?"),
                    to_json(&p)
                ),
                status: verdict_status(verdict),
            }
        }
        Property::Stable => {
            let p = a
                .param
                .clone()
                .map(IrreducibleIdeal::new)
                .unwrap_or_else(|| IrreducibleIdeal::squares(i.n()));
            report(is_i_stable(i, &p, a.variant.into())?)
        }
        Property::Vd => report(is_variable_decomposable(i, false)),
        Property::Svd => report(is_variable_decomposable(i, true)),
        Property::Seqpure => report(is_sequentially_pure(i)),
    };
    Ok(out)
}

fn complex_value(d: &SimplicialComplex) -> Output {
    Output {
        json: to_json(d),
        text: serialize_complex(d).trim_end().to_string(),
        status: 0,
    }
}

fn ideal_value(i: &monolab::MonomialIdeal) -> Output {
    Output {
        json: to_json(i),
        text: serialize_ideal(i).trim_end().to_string(),
        status: 0,
    }
}

fn complex(a: &ComplexArgs) -> anyhow::Result<Output> {
    let d = load_complex(&a.file)?;
    Ok(match a.op {
        ComplexOp::Shellable => report(is_shellable(&d, a.cap.min(MAX_GENERATOR_CAP))),
        ComplexOp::Vd => report(is_vertex_decomposable(&d)),
        ComplexOp::Wcp => report(is_weakly_co_polymatroidal(&d, a.essential)?),
        ComplexOp::Costable => report(co_stable_check(&d, a.variant.into())),
        ComplexOp::Skeleton => complex_value(&d.skeleton(a.r, a.s)?),
        ComplexOp::FacetSkeleton => complex_value(&d.facet_skeleton(a.i)?),
        ComplexOp::Dual => ideal_value(&dual_ideal(&d)),
    })
}

fn audit(a: &AuditArgs) -> anyhow::Result<Output> {
    if a.list {
        let laws: Vec<Value> = harness::laws()
            .iter()
            .map(|l| json!({ "name": l.name, "domain": l.domain, "statement": l.statement }))
            .collect();
        let text = harness::laws()
            .iter()
            .map(|l| format!("{:40} {}", l.name, l.statement))
            .collect::<Vec<_>>()
            .join("\n");
        return Ok(Output {
            json: Value::Array(laws),
            text,
            status: 0,
        });
    }
    let spec = a.spec.spec();
    let name = a.law.as_deref().unwrap_or("all");
    let names: Vec<&str> = if name == "all" {
        harness::laws().iter().map(|l| l.name).collect()
    } else {
        vec![name]
    };
    let mut results = Vec::new();
    for n in names {
        results.push(harness::audit(n, &spec, a.count)?);
    }
    let text = results
        .iter()
        .map(|r| {
            format!(
                "{} {}: {} instances, {} applicable, {} skipped, {} violations",
                if r.passed() { "PASS" } else { "FAIL" },
                r.law,
                r.count,
                r.applicable,
                r.skipped,
                r.violations.len()
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    let status = u8::from(results.iter().any(|r| !r.passed()));
    let json = if results.len() == 1 {
        to_json(&results[0])
    } else {
        to_json(&results)
    };
    Ok(Output { json, text, status })
}

fn mine(a: &MineArgs) -> anyhow::Result<Output> {
    let spec = a.spec.spec();
    let r = if a.exhaustive {
        harness::mine_exhaustive(&spec, a.budget)?
    } else {
        harness::mine_open_question(&spec, a.budget)?
    };
    let mut text = format!(
        "tried {} ideals ({}), {} with componentwise linear quotients, {} skipped, {} counterexamples",
        r.tried,
        if r.exhaustive { "exhaustive" } else { "random" },
        r.componentwise,
        r.skipped,
        r.hits.len()
    );
    for h in &r.hits {
        text.push_str(&format!("\ncounterexample: {}", h.ideal));
    }
    Ok(Output {
        status: u8::from(!r.hits.is_empty()),
        json: to_json(&r),
        text,
    })
}

fn run(cli: &Cli) -> anyhow::Result<Output> {
    match &cli.command {
        Command::Check(a) => check(a),
        Command::Complex(a) => complex(a),
        Command::Betti {
            file,
            characteristic,
        } => {
            let i = load_ideal(file)?.ideal;
            let t = betti_table(&i, Characteristic::new(*characteristic)?)?;
            let text = t
                .entries
                .iter()
                .map(|((k, b), r)| format!("{k} {:?} {r}", b.as_slice()))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output {
                json: to_json(&t),
                text,
                status: 0,
            })
        }
        Command::Suppreg { file } => {
            let r = suppreg(&load_ideal(file)?.ideal)?;
            Ok(Output {
                json: json!({ "suppreg": r }),
                text: r.to_string(),
                status: 0,
            })
        }
        Command::DualIdeal { g, file } => Ok(ideal_value(&alexander_dual_ideal(
            &load_ideal(file)?.ideal,
            g,
        )?)),
        Command::Audit(a) => audit(a),
        Command::Mine(a) => mine(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("json renders")
            } else {
                out.text
            };
            let _ = writeln!(std::io::stdout(), "{body}");
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let capped = matches!(e.downcast_ref::<Error>(), Some(Error::CapExceeded { .. }));
            ExitCode::from(if capped { 3 } else { 2 })
        }
    }
}
