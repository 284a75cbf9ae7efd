use clap::{Args, Parser, Subcommand, ValueEnum};
use richardson::classify::{classify, cross_validate, enumerate_richardson_partitions};
use richardson::diagram::assemble;
use richardson::verify::{full_report, RichardsonReport};
use richardson::{DimensionVector, Kind, LineDiagram, Partition};
use serde_json::{json, Value};
use std::process::ExitCode;

const SCHEMA: u32 = 1;

/// Richardson elements for parabolic subgroups of orthogonal and symplectic groups.
#[derive(Parser)]
#[command(name = "richardson", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the diagram and element for a dimension vector and report on it.
    Construct {
        #[command(flatten)]
        input: DimvecArgs,
        /// Print only the diagram, in the given format.
        #[arg(long, value_enum)]
        render: Option<Format>,
        #[arg(long)]
        json: bool,
    },
    /// Run every check on the constructed element; exit 1 if one fails.
    Verify {
        #[command(flatten)]
        input: DimvecArgs,
        #[arg(long)]
        json: bool,
    },
    /// List the proper dimension vectors of a given total and their Jordan types,
    /// or run the full check over all totals with `--check all`.
    Enumerate {
        #[arg(long)]
        kind: Option<KindArg>,
        #[arg(long = "N")]
        total: Option<usize>,
        #[arg(long, value_enum)]
        check: Option<CheckScope>,
        #[arg(long = "max-N", default_value_t = 12)]
        max_total: usize,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a partition is the Jordan type of a Richardson orbit.
    Classify {
        #[arg(long)]
        kind: KindArg,
        /// Comma-separated parts, e.g. 5,5,3,3.
        #[arg(long, value_delimiter = ',', required = true)]
        partition: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Compare the constructed Jordan types with the classifier.
    Crossvalidate {
        #[arg(long)]
        kind: KindArg,
        #[arg(long = "N")]
        total: usize,
        #[arg(long)]
        json: bool,
    },
    /// Draw the diagram of a dimension vector.
    Render {
        #[command(flatten)]
        input: DimvecArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct DimvecArgs {
    #[arg(long)]
    kind: KindArg,
    /// Full vector d_-s,...,d_s.
    #[arg(long, value_delimiter = ',', conflicts_with = "half")]
    dimvec: Option<Vec<usize>>,
    /// Entries d_1,...,d_s; the centre is filled in from --N.
    #[arg(long, value_delimiter = ',', requires = "total")]
    half: Option<Vec<usize>>,
    #[arg(long = "N")]
    total: Option<usize>,
    /// Use the vector as given instead of its proper form.
    #[arg(long)]
    no_normalize: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Orth,
    Symp,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Orth => Kind::Orthogonal,
            KindArg::Symp => Kind::Symplectic,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckScope {
    All,
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<richardson::Error> for Failure {
    fn from(e: richardson::Error) -> Self {
        match e {
            richardson::Error::InvalidInput(_) | richardson::Error::Precondition(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Verification(other.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

impl DimvecArgs {
    fn resolve(&self) -> Result<DimensionVector, Failure> {
        let kind = self.kind.into();
        let d = match (&self.dimvec, &self.half, self.total) {
            (Some(v), None, total) => {
                let d = DimensionVector::new(kind, v.clone())?;
                if total.is_some_and(|n| n != d.total()) {
                    return Err(Failure::Usage(format!("{d} does not have total {}", total.unwrap())));
                }
                d
            }
            (None, Some(h), Some(total)) => DimensionVector::from_half(kind, h, total)?,
            _ => return Err(Failure::Usage("give --dimvec, or --half together with --N".into())),
        };
        Ok(if self.no_normalize { d } else { d.normalize() })
    }
}

fn with_schema(mut value: Value) -> Value {
    if let Value::Object(map) = &mut value {
        map.insert("schema".into(), json!(SCHEMA));
    }
    value
}

fn print_json(value: Value) {
    println!("{}", serde_json::to_string_pretty(&with_schema(value)).expect("serializable"));
}

fn render(dg: &LineDiagram, format: Format) {
    match format {
        Format::Text => print!("{}", dg.render_text()),
        Format::Dot => print!("{}", dg.render_dot()),
        Format::Json => print_json(serde_json::to_value(dg).expect("serializable")),
    }
}

fn summary(r: &RichardsonReport) -> String {
    [
        format!("dimension vector:   {}", r.dimvec),
        format!("element terms:      {}", r.x.terms().count()),
        format!("partition:          {}", r.jordan_partition),
        format!("expected partition: {}", r.expected_partition),
        format!("in g:               {}", r.in_g),
        format!("in u:               {}", r.in_u),
        format!("nilpotent:          {}", r.nilpotent),
        format!("partition matches:  {}", r.partition_matches),
        format!("dense:              {} (dim u = {})", r.dense, r.dim_u),
        format!("centralizer:        {} (Levi {})", r.centralizer_dim, r.dim_levi),
        format!("support:            {} (formula {})", r.gamma_size, r.gamma_formula),
        format!("type:               {}", r.type_label),
        format!("nice:               {}", r.nice),
        format!("all verified:       {}", r.all_verified()),
    ]
    .join("\n")
}

fn report_json(r: &RichardsonReport) -> Value {
    let mut v = serde_json::to_value(r).expect("serializable");
    v["all_verified"] = json!(r.all_verified());
    v
}

fn construct(input: &DimvecArgs, render_as: Option<Format>, as_json: bool) -> Outcome {
    let d = input.resolve()?;
    if let Some(format) = render_as {
        render(&assemble(&d)?, format);
        return Ok(true);
    }
    let r = full_report(&d)?;
    if as_json {
        print_json(report_json(&r));
    } else {
        println!("{}", summary(&r));
    }
    Ok(true)
}

fn verify(input: &DimvecArgs, as_json: bool) -> Outcome {
    let d = input.resolve()?;
    let r = full_report(&d)?;
    if as_json {
        print_json(report_json(&r));
    } else {
        println!("{}", summary(&r));
    }
    Ok(r.all_verified())
}

fn sweep(max_total: usize, as_json: bool) -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for kind in [Kind::Orthogonal, Kind::Symplectic] {
        let totals: Vec<usize> = match kind {
            Kind::Orthogonal => (3..=max_total).collect(),
            Kind::Symplectic => (2..=max_total).step_by(2).collect(),
        };
        for total in totals {
            for d in DimensionVector::all_proper(kind, total) {
                checked += 1;
                match full_report(&d) {
                    Ok(r) if r.all_verified() => {}
                    Ok(_) => failures.push(format!("{d}: verification failed")),
                    Err(e) => failures.push(format!("{d}: {e}")),
                }
            }
            let cv = cross_validate(kind, total)?;
            if !cv.is_equal() {
                failures.push(format!("{kind} N={total}: classifier disagrees with the construction"));
            }
        }
    }
    if as_json {
        print_json(json!({ "checked": checked, "max_N": max_total, "failures": failures }));
    } else {
        for f in &failures {
            println!("FAIL {f}");
        }
        println!("checked {checked} dimension vectors up to N = {max_total}: {} failures", failures.len());
    }
    Ok(failures.is_empty())
}

fn enumerate(kind: Option<KindArg>, total: Option<usize>, as_json: bool) -> Outcome {
    let (Some(kind), Some(total)) = (kind, total) else {
        return Err(Failure::Usage("enumerate needs --kind and --N, or --check all".into()));
    };
    let kind: Kind = kind.into();
    let mut rows = Vec::new();
    for d in DimensionVector::all_proper(kind, total) {
        let r = full_report(&d)?;
        let ok = r.all_verified();
        rows.push((d, r.jordan_partition, ok));
    }
    let partitions = enumerate_richardson_partitions(kind, total)?;
    if as_json {
        let vectors: Vec<Value> = rows
            .iter()
            .map(|(d, p, ok)| json!({ "dimvec": d.entries(), "partition": p, "verified": ok }))
            .collect();
        print_json(json!({ "kind": kind, "N": total, "vectors": vectors, "partitions": partitions }));
    } else {
        for (d, p, ok) in &rows {
            println!("{d}  {p}{}", if *ok { "" } else { "  FAILED" });
        }
        println!("{} dimension vectors, {} distinct partitions", rows.len(), partitions.len());
    }
    Ok(rows.iter().all(|r| r.2))
}

fn classify_cmd(kind: KindArg, parts: &[usize], as_json: bool) -> Outcome {
    let kind: Kind = kind.into();
    let p = Partition::from_unsorted(parts.iter().copied());
    if parts.contains(&0) {
        return Err(Failure::Usage("partition parts must be positive".into()));
    }
    let witness = classify(kind, &p)?;
    if as_json {
        print_json(json!({
            "kind": kind,
            "partition": p,
            "polarizable": witness.is_some(),
            "witness": witness.as_ref().map(|w| &w.segments),
        }));
    } else {
        println!("partition: {p}");
        println!("polarizable: {}", witness.is_some());
        if let Some(w) = witness {
            for s in &w.segments {
                let parts: Vec<String> = s.parts.iter().map(ToString::to_string).collect();
                println!("  {:?}: ({})", s.tag, parts.join(","));
            }
        }
    }
    Ok(true)
}

fn crossvalidate(kind: KindArg, total: usize, as_json: bool) -> Outcome {
    let kind: Kind = kind.into();
    let valid = match kind {
        Kind::Orthogonal => total >= 3,
        Kind::Symplectic => total >= 2 && total.is_multiple_of(2),
    };
    if !valid {
        return Err(Failure::Usage(format!("no {kind} sweep for N = {total}")));
    }
    let cv = cross_validate(kind, total)?;
    if as_json {
        let mut v = serde_json::to_value(&cv).expect("serializable");
        v["equal"] = json!(cv.is_equal());
        print_json(v);
    } else if cv.is_equal() {
        println!("OK: {} partitions matched", cv.matched);
    } else {
        println!("MISMATCH: {} matched", cv.matched);
        for p in &cv.only_enumerated {
            println!("  constructed but rejected: {p}");
        }
        for p in &cv.only_classified {
            println!("  accepted but never constructed: {p}");
        }
    }
    Ok(cv.is_equal())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Construct { input, render, json } => construct(&input, render, json),
        Command::Verify { input, json } => verify(&input, json),
        Command::Enumerate { check: Some(CheckScope::All), max_total, json, .. } => sweep(max_total, json),
        Command::Enumerate { kind, total, json, .. } => enumerate(kind, total, json),
        Command::Classify { kind, partition, json } => classify_cmd(kind, &partition, json),
        Command::Crossvalidate { kind, total, json } => crossvalidate(kind, total, json),
        Command::Render { input, format } => {
            render(&assemble(&input.resolve()?)?, format);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
