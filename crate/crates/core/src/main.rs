use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use updown::alternant::{self, WeightKind};
use updown::basis::{self, ConstructMethod, ValueRoute};
use updown::kernel::Integer;
use updown::oracle::{self, PositionMask};
use updown::signature::{self, Signature};
use updown::{lab, output, series, triangle, verify, Error};

#[derive(Parser)]
#[command(
    name = "updown",
    version,
    about = "Count permutations by up-down signature"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count permutations with a signature, or with index k of order n.
    Count(CountArgs),
    /// Print the basis polynomial {n\k}.
    Poly(PolyArgs),
    /// Print the basis polynomials for k = 0..=k-max.
    Table(TableArgs),
    /// Print the formal values {a\k} for k = 0..len.
    Row(RowArgs),
    /// Print the coefficients of the row polynomial P_n(x).
    Series(SeriesArgs),
    /// Euler, tangent and Bernoulli numbers from determinants.
    Numbers(NumbersArgs),
    /// Print a permutation with index k.
    Witness(WitnessArgs),
    /// Run the self-check suites.
    Verify(VerifyArgs),
    /// Explore open questions numerically.
    #[command(subcommand)]
    Conjecture(ConjectureCommand),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Bfile,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Oracle,
    Triangle,
    Alternant,
    #[value(alias = "niven1")]
    Niven,
    #[value(alias = "det14")]
    Places,
    #[value(alias = "det40")]
    Exponents,
    #[value(alias = "lambda66")]
    Lambda,
    Poly,
}

impl From<RouteArg> for ValueRoute {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::Oracle => ValueRoute::Oracle,
            RouteArg::Triangle => ValueRoute::Triangle,
            RouteArg::Alternant => ValueRoute::Alternant,
            RouteArg::Niven => ValueRoute::Niven,
            RouteArg::Places => ValueRoute::Places,
            RouteArg::Exponents => ValueRoute::Exponents,
            RouteArg::Lambda => ValueRoute::Lambda,
            RouteArg::Poly => ValueRoute::Poly,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    #[value(alias = "explicit15")]
    Permanent,
    #[value(alias = "symmetric30")]
    Symmetric,
    #[value(alias = "recursion37")]
    Recursion,
    #[value(alias = "system46")]
    System,
    #[value(alias = "step47")]
    Step,
}

impl From<MethodArg> for ConstructMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Permanent => ConstructMethod::Permanent,
            MethodArg::Symmetric => ConstructMethod::Symmetric,
            MethodArg::Recursion => ConstructMethod::Recursion,
            MethodArg::System => ConstructMethod::System,
            MethodArg::Step => ConstructMethod::Step,
        }
    }
}

#[derive(Args)]
struct CountArgs {
    /// Comma-separated steps, e.g. -1,1,1,-1,1.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["n", "k"])]
    signature: Option<String>,
    #[arg(long, requires = "k")]
    n: Option<u32>,
    #[arg(long, requires = "n")]
    k: Option<u64>,
    /// ones, no-fixed, or endpoint:l,m (first value l, last value m).
    #[arg(long)]
    mask: Option<String>,
    #[arg(long, value_enum, default_value = "oracle")]
    method: RouteArg,
    /// Largest order accepted by the enumerating routes.
    #[arg(long, default_value_t = oracle::SEARCH_LIMIT)]
    max_n: u32,
    /// Also print the triangle (triangle method only).
    #[arg(long)]
    show_triangle: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long)]
    k: u64,
    #[arg(long, value_enum, default_value = "recursion")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = 31)]
    k_max: u64,
    #[arg(long, value_enum, default_value = "recursion")]
    method: MethodArg,
    #[arg(long, default_value_t = 4096)]
    budget: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct RowArgs {
    #[arg(long)]
    a: u32,
    #[arg(long)]
    len: usize,
    #[arg(long, default_value_t = 1 << 16)]
    budget: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum NumberKind {
    Euler,
    Tangent,
    Bernoulli,
}

#[derive(Args)]
struct NumbersArgs {
    #[arg(value_enum)]
    kind: NumberKind,
    #[arg(long)]
    m_max: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Core,
    Identities,
    Roots,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    #[arg(long, default_value_t = 8)]
    n_max: u32,
    /// Replace the stored table by one in `table` layout.
    #[arg(long, hide = true)]
    table_file: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum ConjectureCommand {
    /// Real-root profiles of {n\k}.
    RealRoots {
        #[arg(long, default_value_t = 32)]
        k_max: u64,
        /// Print only the indices whose roots are all real.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Indices k with {-1\k} = 0.
    MinusOne {
        #[arg(long, default_value_t = 64)]
        k_max: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Alternating derangements over alternating permutations.
    Derangement {
        #[arg(long, default_value_t = 12)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Alternating permutations by number of cycles.
    Stirling {
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        #[arg(long, default_value_t = 3)]
        l_max: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Budget(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

fn unsupported(format: Format) -> Failure {
    let name = format
        .to_possible_value()
        .map(|v| v.get_name().to_owned())
        .unwrap_or_default();
    Failure::Usage(format!("format {name} is not available for this command"))
}

fn joined<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn sequence(values: &[Integer], offset: u64, format: Format) -> Outcome {
    match format {
        Format::Text => Ok(joined(values)),
        Format::Json => Ok(output::integers_to_json(values)),
        Format::Bfile => Ok(output::bfile(offset, values).trim_end().to_owned()),
        Format::Csv => Err(unsupported(format)),
    }
}

fn parse_mask(spec: &str, n: u32) -> std::result::Result<PositionMask, Failure> {
    match spec {
        "ones" => Ok(PositionMask::ones(n)),
        "no-fixed" => Ok(PositionMask::no_fixed(n)),
        other => {
            let bad = || Failure::Usage(format!("bad mask {other:?}"));
            let (l, m) = other
                .strip_prefix("endpoint:")
                .and_then(|r| r.split_once(','))
                .ok_or_else(bad)?;
            let l = l.trim().parse().map_err(|_| bad())?;
            let m = m.trim().parse().map_err(|_| bad())?;
            Ok(PositionMask::endpoints(n, l, m)?)
        }
    }
}

fn weight_of(spec: &str) -> std::result::Result<WeightKind, Failure> {
    match spec {
        "ones" => Ok(WeightKind::Ones),
        "no-fixed" => Ok(WeightKind::OnesMinusIdentity),
        other => {
            let bad = || Failure::Usage(format!("bad mask {other:?}"));
            let (l, m) = other
                .strip_prefix("endpoint:")
                .and_then(|r| r.split_once(','))
                .ok_or_else(bad)?;
            Ok(WeightKind::Endpoint {
                l: l.trim().parse().map_err(|_| bad())?,
                m: m.trim().parse().map_err(|_| bad())?,
            })
        }
    }
}

fn count(args: CountArgs) -> Outcome {
    let sig = match (&args.signature, args.n, args.k) {
        (Some(s), _, _) => s.parse::<Signature>()?,
        (None, Some(n), Some(k)) => {
            let route = ValueRoute::from(args.method);
            if args.mask.is_none() && !route.combinatorial_only() {
                let v = basis::value(n, k, route)?;
                return count_output(n, k, route, &v, args.format);
            }
            signature::decode_index(n, k)?
        }
        _ => {
            return Err(Failure::Usage(
                "give --signature or both --n and --k".into(),
            ))
        }
    };
    let n = sig.order();
    let k = signature::encode_index(&sig)?.value();
    let route = ValueRoute::from(args.method);
    let enumerates = matches!(route, ValueRoute::Oracle | ValueRoute::Alternant);
    if enumerates && n > args.max_n {
        return Err(Error::Budget {
            what: "count order",
            value: n as u64,
            limit: args.max_n as u64,
        }
        .into());
    }
    let value = match (&args.mask, route) {
        (None, _) => basis::value(n, k, route)?,
        (Some(m), ValueRoute::Oracle) => oracle::count_signature(&sig, Some(&parse_mask(m, n)?))?,
        (Some(m), ValueRoute::Alternant) => {
            let a = alternant::build_weight(weight_of(m)?, n)?;
            alternant::alt_memo(&a, &sig)?
        }
        (Some(_), _) => {
            return Err(Failure::Usage(
                "--mask needs --method oracle or alternant".into(),
            ))
        }
    };
    let mut text = count_output(n, k, route, &value, args.format)?;
    if args.show_triangle {
        if !matches!(route, ValueRoute::Triangle) || args.format != Format::Text {
            return Err(Failure::Usage(
                "--show-triangle needs --method triangle in text format".into(),
            ));
        }
        text = format!("{}{text}", triangle::triangle_rows(&sig));
    }
    Ok(text)
}

fn count_output(n: u32, k: u64, route: ValueRoute, v: &Integer, format: Format) -> Outcome {
    match format {
        Format::Text => Ok(v.to_string()),
        Format::Json => {
            Ok(json!({"n": n, "k": k, "method": route.name(), "count": v.to_string()}).to_string())
        }
        _ => Err(unsupported(format)),
    }
}

fn poly(args: PolyArgs) -> Outcome {
    let p = basis::construct(args.k, args.method.into());
    match args.format {
        Format::Text => Ok(p.to_string()),
        Format::Json => Ok(output::poly_to_json(&p)),
        f => Err(unsupported(f)),
    }
}

fn table(args: TableArgs) -> Outcome {
    if args.k_max > args.budget {
        return Err(Error::Budget {
            what: "table k-max",
            value: args.k_max,
            limit: args.budget,
        }
        .into());
    }
    let polys: Vec<_> = (0..=args.k_max)
        .map(|k| basis::construct(k, args.method.into()))
        .collect();
    match args.format {
        Format::Text => Ok(output::table_layout(&polys).trim_end().to_owned()),
        Format::Json => {
            let records: Vec<output::PolyRecord> = polys.iter().map(Into::into).collect();
            Ok(serde_json::to_string(&records).expect("records serialize"))
        }
        f => Err(unsupported(f)),
    }
}

fn row(args: RowArgs) -> Outcome {
    if args.len > args.budget {
        return Err(Error::Budget {
            what: "row length",
            value: args.len as u64,
            limit: args.budget as u64,
        }
        .into());
    }
    sequence(&basis::row_sequence(args.a, args.len), 0, args.format)
}

fn series_cmd(args: SeriesArgs) -> Outcome {
    let p = series::pn_polynomial(args.n)?;
    sequence(p.coeffs(), 0, args.format)
}

fn numbers(args: NumbersArgs) -> Outcome {
    let values: Vec<String> = match args.kind {
        NumberKind::Euler => (1..=args.m_max)
            .map(|m| series::euler_determinant(m).map(|v| v.to_string()))
            .collect::<updown::Result<_>>()?,
        NumberKind::Tangent => (2..=args.m_max)
            .map(|m| series::tangent_determinant(m).map(|v| v.to_string()))
            .collect::<updown::Result<_>>()?,
        NumberKind::Bernoulli => (2..=args.m_max)
            .map(|m| series::bernoulli_recover(m).map(|v| v.to_string()))
            .collect::<updown::Result<_>>()?,
    };
    match args.format {
        Format::Text => Ok(values.join(" ")),
        Format::Json => Ok(serde_json::to_string(&values).expect("strings serialize")),
        f => Err(unsupported(f)),
    }
}

fn witness(args: WitnessArgs) -> Outcome {
    let w = oracle::witness_permutation(args.n, args.k)?;
    match args.format {
        Format::Text => Ok(joined(w.values())),
        Format::Json => {
            Ok(json!({"n": args.n, "k": args.k, "permutation": w.values()}).to_string())
        }
        f => Err(unsupported(f)),
    }
}

fn verify_cmd(args: VerifyArgs) -> Outcome {
    let suite = match args.suite {
        SuiteArg::All => verify::Suite::All,
        SuiteArg::Core => verify::Suite::Core,
        SuiteArg::Identities => verify::Suite::Identities,
        SuiteArg::Roots => verify::Suite::Roots,
    };
    let table = match &args.table_file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            output::parse_table_layout(&text)?
        }
        None => verify::default_table(),
    };
    let report = verify::run(suite, args.n_max, &table)?;
    let text = format!("suite {}\n{report}", suite.name());
    if report.is_ok() {
        Ok(text)
    } else {
        Err(Failure::Verify(text))
    }
}

fn conjecture(cmd: ConjectureCommand) -> Outcome {
    match cmd {
        ConjectureCommand::RealRoots {
            k_max,
            list,
            format,
        } => {
            let profiles = lab::root_profiles(k_max)?;
            if list {
                let ks: Vec<u64> = profiles
                    .iter()
                    .filter(|p| p.all_real)
                    .map(|p| p.k)
                    .collect();
                return match format {
                    Format::Text => Ok(joined(&ks)),
                    Format::Json => Ok(serde_json::to_string(&ks).expect("list serializes")),
                    f => Err(unsupported(f)),
                };
            }
            match format {
                Format::Csv => Ok(output::profiles_to_csv(&profiles)?.trim_end().to_owned()),
                Format::Json => Ok(serde_json::to_string(&profiles).expect("profiles serialize")),
                Format::Text => Ok(profiles
                    .iter()
                    .map(|p| {
                        let roots: Vec<String> =
                            p.rational_roots.iter().map(ToString::to_string).collect();
                        format!(
                            "k={} degree={} real={} all_real={} zero_bits={} rational_roots=[{}]",
                            p.k,
                            p.degree,
                            p.real_with_multiplicity,
                            p.all_real,
                            p.zero_bits,
                            roots.join(", ")
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")),
                f => Err(unsupported(f)),
            }
        }
        ConjectureCommand::MinusOne { k_max, format } => {
            let ks = lab::minus_one_root_scan(k_max)?;
            match format {
                Format::Text => Ok(joined(&ks)),
                Format::Json => Ok(serde_json::to_string(&ks).expect("list serializes")),
                f => Err(unsupported(f)),
            }
        }
        ConjectureCommand::Derangement { n_max, format } => {
            let reports = (1..=n_max)
                .map(lab::derangement_ratio)
                .collect::<updown::Result<Vec<_>>>()?;
            match format {
                Format::Json => Ok(serde_json::to_string(&reports).expect("reports serialize")),
                Format::Text => {
                    let mut lines = vec![format!("1/e = {:.6}", (-1f64).exp())];
                    for r in &reports {
                        let approx = num_traits::ToPrimitive::to_f64(&r.ratio).unwrap_or(f64::NAN);
                        lines.push(format!(
                            "n={} D={} a={} ratio={} ~ {approx:.6}",
                            r.n, r.derangements, r.alternating, r.ratio
                        ));
                    }
                    Ok(lines.join("\n"))
                }
                f => Err(unsupported(f)),
            }
        }
        ConjectureCommand::Stirling {
            n_max,
            l_max,
            format,
        } => {
            let mut reports = Vec::new();
            for n in 1..=n_max {
                let row = lab::stirling_reports(n)?;
                reports.extend(row.into_iter().filter(|r| r.l <= l_max));
            }
            match format {
                Format::Json => Ok(serde_json::to_string(&reports).expect("reports serialize")),
                Format::Text => Ok(reports
                    .iter()
                    .map(|r| {
                        format!(
                            "n={} l={} S={} a={} ratio~{:.6}",
                            r.n, r.l, r.count, r.alternating, r.ratio
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")),
                f => Err(unsupported(f)),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Count(a) => count(a),
        Command::Poly(a) => poly(a),
        Command::Table(a) => table(a),
        Command::Row(a) => row(a),
        Command::Series(a) => series_cmd(a),
        Command::Numbers(a) => numbers(a),
        Command::Witness(a) => witness(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Conjecture(c) => conjecture(c),
    };
    match outcome {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verify(text)) => {
            println!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
