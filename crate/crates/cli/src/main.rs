//! `normord`: normal ordering, rook numbers, Stirling/Bell numbers and graph
//! EGFs from the command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 verification failure.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::{json, Value};

use normord::egf::{graph_egf, WeightSpec};
use normord::graphs::{enumerate_weighted, ENUMERATE_MAX_N};
use normord::numbers::{
    bell, bell_rs, is_unimodal, q_word_polynomial, stirling, stirling_q, stirling_q_row,
    stirling_row, stirling_rs, stirling_rs_row,
};
use normord::verify;
use normord::{
    board_from_word, coherent_expectation, normal_order_rewrite, normal_order_rook, parse_word,
    rook_numbers, FerrersBoard, NormalPolynomial, QPoly,
};

const MAX_VERIFY_LEN: usize = 12;
const RANDOM_WEIGHT_PAIRS: usize = 20;
const RANDOM_WEIGHT_SEED: u64 = 0x5eed;

#[derive(Parser, Debug)]
#[command(
    name = "normord",
    version,
    about = "Exact boson normal ordering and its combinatorics"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Rewrite,
    Rook,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal-order a word such as "d^2 a d a d^4 a" (d = creation, a = annihilation)
    Order {
        word: String,
        #[arg(long, value_enum, default_value_t = Method::Rewrite)]
        method: Method,
        /// Use the q-deformed relation a d - q d a = 1 (rewrite only)
        #[arg(long)]
        q: bool,
    },
    /// Ferrers board and rook numbers of a word, or of an explicit partition
    Board {
        word: Option<String>,
        /// Comma-separated row lengths, e.g. 5,4
        #[arg(long, conflicts_with = "word", value_delimiter = ',')]
        partition: Option<Vec<usize>>,
    },
    /// Stirling numbers of the second kind S(n,k); the whole row if k is omitted
    Stirling {
        n: usize,
        #[arg(allow_negative_numbers = true)]
        k: Option<i64>,
        /// q-deformed numbers S_q(n,k)
        #[arg(long)]
        q: bool,
    },
    /// Bell number B(n)
    Bell { n: usize },
    /// Generalized Stirling numbers S_{r,s}(n,k), r >= s
    StirlingRs {
        r: usize,
        s: usize,
        n: usize,
        #[arg(allow_negative_numbers = true)]
        k: Option<i64>,
    },
    /// Generalized Bell number B_{r,s}(n), r >= s
    BellRs { r: usize, s: usize, n: usize },
    /// Polynomial in q obtained from the q-normal form by setting both operators to 1
    Qpoly { word: String },
    /// Graph EGF coefficients g(0..N) as a JSON array
    Egf {
        /// Vertex strengths: ones | factorial | delta:m | comma-separated rationals
        #[arg(long = "V", default_value = "ones")]
        v: String,
        /// Origin multipliers, same syntax as --V
        #[arg(long = "L", default_value = "delta:1")]
        l: String,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Brute-force weighted count of graphs with n lines
    Graphs {
        #[arg(long)]
        n: usize,
        #[arg(long = "V", default_value = "ones")]
        v: String,
        #[arg(long = "L", default_value = "delta:1")]
        l: String,
    },
    /// Coherent-state expectation value of a word's normal form
    Coherent {
        word: String,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        im: f64,
    },
    /// Run the cross-checks between all computation routes
    Verify {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = 6)]
        egf_order: usize,
    },
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: impl Into<String>) -> Self {
        Output {
            text: text.into(),
            code: 0,
        }
    }
}

type CmdResult = Result<Output, String>;

fn pretty(v: &Value) -> String {
    serde_json::to_string(v).expect("json values always serialize")
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

fn qpoly_json(p: &QPoly) -> Value {
    json!(strings(p.coeffs()))
}

fn weight(text: &str) -> Result<WeightSpec, String> {
    text.parse().map_err(|e: normord::Error| e.to_string())
}

fn run(cli: Cli) -> CmdResult {
    let json = cli.json;
    match cli.command {
        Command::Order { word, method, q } => cmd_order(&word, method, q, json),
        Command::Board { word, partition } => cmd_board(word.as_deref(), partition, json),
        Command::Stirling { n, k, q } => cmd_stirling(n, k, q, json),
        Command::Bell { n } => {
            let b = bell(n).map_err(|e| e.to_string())?;
            Ok(Output::ok(if json {
                pretty(&json!(b.to_string()))
            } else {
                b.to_string()
            }))
        }
        Command::StirlingRs { r, s, n, k } => cmd_stirling_rs(r, s, n, k, json),
        Command::BellRs { r, s, n } => {
            let b = bell_rs(r, s, n).map_err(|e| e.to_string())?;
            Ok(Output::ok(if json {
                pretty(&json!(b.to_string()))
            } else {
                b.to_string()
            }))
        }
        Command::Qpoly { word } => cmd_qpoly(&word, json),
        Command::Egf { v, l, order } => cmd_egf(&v, &l, order),
        Command::Graphs { n, v, l } => cmd_graphs(n, &v, &l, json),
        Command::Coherent { word, re, im } => cmd_coherent(&word, re, im, json),
        Command::Verify { max_len, egf_order } => cmd_verify(max_len, egf_order, json),
    }
}

fn cmd_order(text: &str, method: Method, q: bool, json: bool) -> CmdResult {
    if q && method != Method::Rewrite {
        return Err("--q is only available with --method rewrite".into());
    }
    let word = parse_word(text).map_err(|e| e.to_string())?;
    let render = |p: &NormalPolynomial| {
        if json {
            p.to_json()
        } else {
            json!(p.to_string())
        }
    };
    match method {
        Method::Rewrite | Method::Rook => {
            let nf = if method == Method::Rook {
                normal_order_rook(&word)
            } else {
                normal_order_rewrite(&word, q)
            };
            Ok(Output::ok(if json {
                pretty(&nf.to_json())
            } else {
                nf.to_string()
            }))
        }
        Method::Both => {
            let by_rewrite = normal_order_rewrite(&word, false);
            let by_rook = normal_order_rook(&word);
            let agree = by_rewrite == by_rook;
            let text = if json {
                pretty(&json!({
                    "rewrite": render(&by_rewrite),
                    "rook": render(&by_rook),
                    "agree": agree,
                }))
            } else {
                let mut s = format!("rewrite: {by_rewrite}\nrook: {by_rook}");
                if !agree {
                    s.push_str("\nMISMATCH");
                }
                s
            };
            Ok(Output {
                text,
                code: if agree { 0 } else { 2 },
            })
        }
    }
}

fn cmd_board(word: Option<&str>, partition: Option<Vec<usize>>, json: bool) -> CmdResult {
    let board = match (word, partition) {
        (_, Some(parts)) => FerrersBoard::from_parts(parts),
        (Some(text), None) => board_from_word(&parse_word(text).map_err(|e| e.to_string())?),
        (None, None) => return Err("board needs a word or --partition".into()),
    };
    let rooks = rook_numbers(&board);
    if json {
        return Ok(Output::ok(pretty(&json!({
            "partition": board.parts(),
            "rooks": strings(rooks.as_slice()),
        }))));
    }
    let mut s = format!("partition: {board}\nrooks: {rooks}");
    if !board.is_empty() {
        write!(s, "\n{}", board.diagram()).unwrap();
    }
    Ok(Output::ok(s))
}

fn cmd_stirling(n: usize, k: Option<i64>, q: bool, json: bool) -> CmdResult {
    let err = |e: normord::Error| e.to_string();
    let text = match (k, q) {
        (Some(k), false) => {
            let v = stirling(n, k).map_err(err)?;
            if json {
                pretty(&json!(v.to_string()))
            } else {
                v.to_string()
            }
        }
        (None, false) => {
            let row = stirling_row(n).map_err(err)?;
            if json {
                pretty(&json!(strings(&row)))
            } else {
                strings(&row).join(" ")
            }
        }
        (Some(k), true) => {
            let p = stirling_q(n, k).map_err(err)?;
            if json {
                pretty(&qpoly_json(&p))
            } else {
                p.to_string()
            }
        }
        (None, true) => {
            let row = stirling_q_row(n).map_err(err)?;
            if json {
                pretty(&Value::Array(row.iter().map(qpoly_json).collect()))
            } else {
                strings(&row).join("\n")
            }
        }
    };
    Ok(Output::ok(text))
}

fn cmd_stirling_rs(r: usize, s: usize, n: usize, k: Option<i64>, json: bool) -> CmdResult {
    let text = match k {
        Some(k) => {
            let v = stirling_rs(r, s, n, k).map_err(|e| e.to_string())?;
            if json {
                pretty(&json!(v.to_string()))
            } else {
                v.to_string()
            }
        }
        None => {
            let row: Vec<BigInt> = stirling_rs_row(r, s, n)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|(_, v)| v)
                .collect();
            if json {
                pretty(&json!(strings(&row)))
            } else {
                strings(&row).join(" ")
            }
        }
    };
    Ok(Output::ok(text))
}

fn cmd_qpoly(text: &str, json: bool) -> CmdResult {
    let word = parse_word(text).map_err(|e| e.to_string())?;
    let p = q_word_polynomial(&word);
    let unimodal = is_unimodal(p.coeffs());
    Ok(Output::ok(if json {
        pretty(&json!({"coeffs": qpoly_json(&p), "unimodal": unimodal}))
    } else {
        format!(
            "{p}\ncoefficients: [{}]\nunimodal: {unimodal}",
            strings(p.coeffs()).join(",")
        )
    }))
}

fn cmd_egf(v: &str, l: &str, order: usize) -> CmdResult {
    let (v, l) = (weight(v)?, weight(l)?);
    let values: Vec<BigRational> = graph_egf(&v, &l, order).egf_values();
    Ok(Output::ok(pretty(&json!(strings(&values)))))
}

fn cmd_graphs(n: usize, v: &str, l: &str, json: bool) -> CmdResult {
    if n > ENUMERATE_MAX_N {
        return Err(format!(
            "--n {n} exceeds the enumeration cap {ENUMERATE_MAX_N}"
        ));
    }
    let count = enumerate_weighted(n, &weight(v)?, &weight(l)?).map_err(|e| e.to_string())?;
    Ok(Output::ok(if json {
        pretty(&json!({"n": n, "count": count.to_string()}))
    } else {
        count.to_string()
    }))
}

fn cmd_coherent(text: &str, re: f64, im: f64, json: bool) -> CmdResult {
    let word = parse_word(text).map_err(|e| e.to_string())?;
    let nf = normal_order_rewrite(&word, false);
    let z = coherent_expectation(&nf, Complex64::new(re, im)).map_err(|e| e.to_string())?;
    Ok(Output::ok(if json {
        pretty(&json!({"re": z.re, "im": z.im}))
    } else {
        format!("{} {}", z.re, z.im)
    }))
}

fn cmd_verify(max_len: usize, egf_order: usize, json: bool) -> CmdResult {
    if max_len > MAX_VERIFY_LEN {
        return Err(format!("--max-len {max_len} exceeds {MAX_VERIFY_LEN}"));
    }
    if egf_order > ENUMERATE_MAX_N {
        return Err(format!("--egf-order {egf_order} exceeds {ENUMERATE_MAX_N}"));
    }
    let mut pairs = verify::preset_weight_pairs();
    pairs.extend(verify::random_weight_pairs(
        RANDOM_WEIGHT_PAIRS,
        egf_order.max(1),
        RANDOM_WEIGHT_SEED,
    ));
    let suites = [
        verify::rook_vs_rewrite(max_len),
        verify::q_one_reduction(max_len),
        verify::rook_bruteforce(max_len),
        verify::egf_vs_enumerator(egf_order, &pairs),
    ];
    let unimodal = verify::unimodality_scan(max_len);
    let all_passed = suites.iter().all(verify::SuiteReport::passed);

    let text = if json {
        pretty(&json!({
            "suites": suites.iter().map(|s| json!({
                "name": s.name,
                "checked": s.checked,
                "failed": s.failed,
                "passed": s.passed(),
                "failures": s.failures,
            })).collect::<Vec<_>>(),
            "unimodality": {
                "experimental": true,
                "checked": unimodal.checked,
                "counterexamples": unimodal.counterexamples.iter()
                    .map(|(w, p)| json!({"word": w.to_string(), "coeffs": qpoly_json(p)}))
                    .collect::<Vec<_>>(),
            },
            "passed": all_passed,
        }))
    } else {
        let mut s = String::new();
        for suite in &suites {
            writeln!(s, "{suite}").unwrap();
        }
        if unimodal.all_unimodal() {
            write!(
                s,
                "NOTE unimodality (experimental observation): {} words, all unimodal",
                unimodal.checked
            )
            .unwrap();
        } else {
            write!(
                s,
                "NOTE unimodality (experimental observation): {} of {} words not unimodal",
                unimodal.counterexamples.len(),
                unimodal.checked
            )
            .unwrap();
            for (w, p) in unimodal.counterexamples.iter().take(10) {
                write!(s, "\n    \"{w}\": {p}").unwrap();
            }
        }
        s
    };
    Ok(Output {
        text,
        code: if all_passed { 0 } else { 2 },
    })
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
    match run(cli) {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
