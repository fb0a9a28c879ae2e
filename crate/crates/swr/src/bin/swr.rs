//! Command-line front end: build families, analyze digraphs, decide strong
//! l-walk-regularity, run the census claims.
//!
//! Machine output is JSON on stdout (schema-versioned, byte-deterministic:
//! object keys are sorted); human summaries go to stderr. Exit codes:
//! 0 success/affirmative, 1 negative verdict, 2 usage or input error.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use swr::algebra::{Int, IntPoly, Rat};
use swr::census::{self, ClaimParams, ClaimReport, EnumFilter};
use swr::digraph::Digraph;
use swr::engine::{self, ExponentSet, SwrCertificate};
use swr::families::FamilySpec;
use swr::spectral::{self, SpectralProfile};

const SCHEMA: &str = "swr/1";

#[derive(Parser)]
#[command(name = "swr", about = "Exact toolkit for strongly walk-regular digraphs", version)]
struct Cli {
    /// Worker threads for the census scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named family instance and write it in the graph text format.
    Construct {
        /// Family spec, e.g. cycle:g=6, lvl-odd:m=3,k=2, mate:1,
        /// blowup-complement:base=mate:1,q=3
        spec: String,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Graph text format to write.
        #[arg(long, default_value = "edges", value_parser = ["matrix", "edges"])]
        format: String,
    },
    /// Full spectral profile of a digraph as JSON.
    Analyze {
        /// Graph file ('-' for stdin), matrix or edge-list format.
        input: String,
    },
    /// Decide strong l-walk-regularity; exit 0 with a certificate, or 1.
    Check {
        input: String,
        /// The walk length l (> 1).
        #[arg(short = 'l', long = "exponent")]
        l: usize,
    },
    /// All certified l up to a bound, with any infinite-family certificate.
    Exponents {
        input: String,
        #[arg(long, default_value_t = 12)]
        lmax: usize,
    },
    /// Census of regular digraphs as newline-delimited JSON records.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Keep only strongly connected digraphs.
        #[arg(long)]
        strongly_connected: bool,
        #[arg(long, default_value_t = 10)]
        lmax: usize,
        /// Allow n up to the hard census limit.
        #[arg(long)]
        override_limit: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a registered claim scan; exit 0 only if it passes.
    Verify {
        /// Claim id (see --list).
        claim: Option<String>,
        /// List registered claim ids and exit.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        lmax: Option<usize>,
    },
}

fn int_json(i: &Int) -> Value {
    // arbitrary-precision JSON number
    serde_json::from_str(&i.to_string()).expect("integer is a valid JSON number")
}

fn poly_json(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(int_json).collect())
}

fn rat_json(r: &Rat) -> Value {
    Value::String(r.to_string())
}

fn obj(fields: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in fields {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

fn profile_json(p: &SpectralProfile, g: &Digraph) -> Value {
    let mut fields = vec![
        ("schema", json!(SCHEMA)),
        ("n", json!(p.n)),
        ("degree", p.degree.map(|k| json!(k)).unwrap_or(Value::Null)),
        ("strongly_connected", json!(p.strongly_connected)),
        ("charpoly", poly_json(&p.charpoly)),
        ("minpoly", poly_json(&p.minpoly)),
        ("diag_class", json!(p.diag_class.as_string())),
        ("distinct_eigenvalues", json!(p.distinct_eigenvalues)),
    ];
    match &p.hoffman {
        Some(h) => fields.push((
            "hoffman",
            obj(vec![("monic", poly_json(&h.monic)), ("scale", rat_json(&h.scale))]),
        )),
        None => {
            fields.push(("hoffman", Value::Null));
            let reason = if p.degree.is_none() {
                "not regular"
            } else {
                "not strongly connected"
            };
            fields.push(("hoffman_reason", json!(reason)));
        }
    }
    fields.push(("walk_regular", {
        match spectral::is_walk_regular(g, 2) {
            Ok(b) => json!(b),
            Err(_) => Value::Null,
        }
    }));
    match spectral::is_srd(g) {
        Some(s) => fields.push((
            "srd",
            obj(vec![
                ("n", json!(s.n)),
                ("k", json!(s.k)),
                ("t", int_json(&s.t)),
                ("lambda", int_json(&s.lambda)),
                ("mu", int_json(&s.mu)),
                ("nonexceptional", json!(s.is_nonexceptional())),
            ]),
        )),
        None => fields.push(("srd", Value::Null)),
    }
    obj(fields)
}

fn certificate_json(c: &SwrCertificate) -> Value {
    obj(vec![
        ("l", json!(c.l)),
        ("lambda", int_json(&c.lambda)),
        ("mu", int_json(&c.mu)),
        ("nu", int_json(&c.nu)),
        (
            "method",
            json!(match c.method {
                engine::Method::Direct => "direct",
                engine::Method::HoffmanDivisibility => "hoffman-divisibility",
            }),
        ),
    ])
}

fn exponent_set_json(es: &ExponentSet) -> Value {
    let periodic = match &es.periodic {
        Some(p) => {
            let (m, rs) = p.residues();
            obj(vec![("modulus", json!(m)), ("residues", json!(rs))])
        }
        None => Value::Null,
    };
    obj(vec![
        ("schema", json!(SCHEMA)),
        ("lmax", json!(es.lmax)),
        ("explicit", json!(es.values())),
        (
            "certificates",
            Value::Array(es.certificates.iter().map(certificate_json).collect()),
        ),
        ("periodic", periodic),
    ])
}

fn claim_json(r: &ClaimReport) -> Value {
    let mut counts = Map::new();
    for (k, v) in &r.counts {
        counts.insert(k.clone(), json!(v));
    }
    obj(vec![
        ("schema", json!(SCHEMA)),
        ("claim", json!(r.name)),
        ("pass", json!(r.pass)),
        ("counts", Value::Object(counts)),
        ("violations", json!(r.violations)),
        ("discrepancies", json!(r.discrepancies)),
        ("notes", json!(r.notes)),
    ])
}

fn read_digraph(path: &str) -> swr::Result<Digraph> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(swr::Error::Io)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(swr::Error::Io)?
    };
    Digraph::parse_matrix(&text).or_else(|matrix_err| {
        Digraph::parse_edge_list(&text).map_err(|_| matrix_err)
    })
}

fn write_output(out: &Option<PathBuf>, content: &str) -> swr::Result<()> {
    match out {
        Some(p) => std::fs::write(p, content).map_err(swr::Error::Io),
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
            Ok(())
        }
    }
}

fn run(cli: Cli) -> swr::Result<ExitCode> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| swr::Error::InvalidParameter(e.to_string()))?;
    }
    match cli.command {
        Command::Construct { spec, out, format } => {
            let fam = FamilySpec::from_str(&spec)?;
            let g = fam.build()?;
            let text = if format == "matrix" {
                g.to_matrix_string()
            } else {
                g.to_edge_list_string()
            };
            write_output(&out, &text)?;
            let facts = fam.expected_facts()?;
            eprintln!("{spec}: n = {}, expected facts: {facts:?}", g.n());
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { input } => {
            let g = read_digraph(&input)?;
            let p = spectral::profile(&g)?;
            println!("{}", profile_json(&p, &g));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { input, l } => {
            let g = read_digraph(&input)?;
            match engine::check_direct(&g, l)? {
                Some(cert) => {
                    // cross-check by divisibility where applicable
                    let p = spectral::profile(&g)?;
                    if p.hoffman.is_some() {
                        let w = engine::check_divisibility(&p, l)?.ok_or_else(|| {
                            swr::Error::InvariantViolation(
                                "direct method found a certificate but divisibility did not".into(),
                            )
                        })?;
                        let wc = w.certificate();
                        if (&wc.lambda, &wc.mu, &wc.nu) != (&cert.lambda, &cert.mu, &cert.nu) {
                            return Err(swr::Error::InvariantViolation(format!(
                                "method disagreement: {cert:?} vs {wc:?}"
                            )));
                        }
                    }
                    let mut v = certificate_json(&cert);
                    v.as_object_mut()
                        .unwrap()
                        .insert("schema".into(), json!(SCHEMA));
                    v.as_object_mut().unwrap().insert("swr".into(), json!(true));
                    println!("{v}");
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!(
                        "{}",
                        obj(vec![
                            ("schema", json!(SCHEMA)),
                            ("swr", json!(false)),
                            ("l", json!(l)),
                        ])
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Exponents { input, lmax } => {
            let g = read_digraph(&input)?;
            let es = engine::exponent_set(&g, lmax)?;
            println!("{}", exponent_set_json(&es));
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, k, strongly_connected, lmax, override_limit, out } => {
            let filter = EnumFilter {
                n,
                k,
                require_strongly_connected: strongly_connected,
                charpoly: None,
                diag_class: None,
                override_limit,
            };
            let records = census::enumerate(&filter, lmax)?;
            let mut lines = String::new();
            for r in &records {
                let srd = match &r.srd {
                    Some(s) => obj(vec![
                        ("t", int_json(&s.t)),
                        ("lambda", int_json(&s.lambda)),
                        ("mu", int_json(&s.mu)),
                    ]),
                    None => Value::Null,
                };
                let rec = obj(vec![
                    ("schema", json!(SCHEMA)),
                    ("digraph", json!(r.digraph.to_edge_list_string())),
                    ("charpoly", poly_json(&r.profile.charpoly)),
                    ("minpoly", poly_json(&r.profile.minpoly)),
                    ("diag_class", json!(r.profile.diag_class.as_string())),
                    ("exponents", json!(r.exponents.values())),
                    ("walk_regular", json!(r.walk_regular)),
                    ("srd", srd),
                ]);
                lines.push_str(&rec.to_string());
                lines.push('\n');
            }
            write_output(&out, &lines)?;
            eprintln!("{} isomorphism classes (n = {n}, k = {k})", records.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { claim, list, n_max, lmax } => {
            if list {
                for name in census::CLAIM_NAMES {
                    println!("{name}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let claim = claim.ok_or_else(|| {
                swr::Error::InvalidParameter("missing claim id (try --list)".into())
            })?;
            let report = census::verify_claim(&claim, ClaimParams { n_max, lmax })?;
            println!("{}", claim_json(&report));
            if report.pass {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
