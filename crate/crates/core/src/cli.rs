//! Command-line front end. Every failure (bad flags, unparsable scheme,
//! parameters out of range) exits with status 2; verdicts are reported in the
//! output, never in the exit status.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::cg::cg_sigma_eta;
use crate::curve::Curve;
use crate::exact::{format_rational, link_data, linking_matrix, RatMatrix, Rational};
use crate::graph::{build_gamma, build_gamma_hat, build_gamma_plus, plumbing_matrix, PlumbingTree};
use crate::prohibit::{family, mt_check, FamilyName, ProhibitionReport, Verdict};
use crate::scheme::parse_scheme;
use crate::{ComplexScheme, Error};

#[derive(Debug, Parser)]
#[command(
    name = "plumbsig",
    version,
    about = "Signature and nullity invariants of complex schemes of real plane curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// sig_{b/p} and eta_p of a scheme.
    Invariants {
        scheme: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        json: bool,
    },
    /// The step-function profile of sig over (0, 1/2).
    Profile {
        scheme: String,
        #[arg(long)]
        json: bool,
    },
    /// Rohlin–Mishachev and the signature bound in degree M.
    Check {
        scheme: String,
        #[arg(long)]
        degree: u64,
        #[arg(long)]
        json: bool,
    },
    /// A member of one of the infinite families (odd_nest, double_nest).
    Family {
        name: String,
        #[arg(long)]
        k: u64,
        /// Also run the degree-(2k+1) check.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// The plumbing tree of a scheme with its matrix and characteristic data.
    Graph {
        scheme: String,
        /// Arrows turned into arrowhead vertices.
        #[arg(long, conflicts_with = "hat")]
        plus: bool,
        /// Extra arrows at every region vertex.
        #[arg(long)]
        hat: bool,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Casson–Gordon invariants of a weighted tree read from a JSON file.
    Cg {
        #[arg(long)]
        tree: PathBuf,
        /// Overrides the file's "p".
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Fiber linking numbers -A⁻¹ of the plumbing tree of a scheme.
    Linking {
        scheme: String,
        #[arg(long)]
        json: bool,
    },
}

/// Input of the `cg` subcommand.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CgInput {
    pub weights: Vec<i64>,
    #[serde(default)]
    pub edges: Vec<(usize, usize)>,
    pub charvec: Vec<i64>,
    #[serde(default)]
    pub p: Option<u64>,
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Domain(e) => write!(f, "{e}"),
            Failure::Other(s) => f.write_str(s),
        }
    }
}

type Out = std::result::Result<String, Failure>;

/// Parses `args` (including the program name) and runs the command, writing
/// to `out` and `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = write!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn scheme(text: &str) -> Result<ComplexScheme, Failure> {
    Ok(parse_scheme(text)?)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn execute(cmd: Command) -> Out {
    match cmd {
        Command::Invariants { scheme: text, p, b, json } => {
            let s = scheme(&text)?;
            let v = Curve::new(&s)?.sig_eta(p, b)?;
            Ok(if json {
                to_json(&json!({ "scheme": s.to_string(), "p": p, "b": b, "sig": v.sig, "eta": v.eta }))
            } else {
                format!("sig = {}, eta = {}\n", v.sig, v.eta)
            })
        }
        Command::Profile { scheme: text, json } => {
            let prof = Curve::new(&scheme(&text)?)?.profile()?;
            Ok(if json { to_json(&prof) } else { prof.to_text() })
        }
        Command::Check { scheme: text, degree, json } => {
            let report = mt_check(&scheme(&text)?, degree)?;
            Ok(if json { to_json(&report) } else { report_text(&report) })
        }
        Command::Family { name, k, check, json } => {
            let name: FamilyName = name.parse()?;
            let s = family(name, k)?;
            let m = 2 * k + 1;
            let report = if check { Some(mt_check(&s, m)?) } else { None };
            Ok(if json {
                to_json(
                    &json!({ "family": name.to_string(), "k": k, "m": m, "scheme": s.to_string(), "report": report }),
                )
            } else {
                let mut t = format!("{s}\n");
                if let Some(r) = report {
                    t.push_str(&report_text(&r));
                }
                t
            })
        }
        Command::Graph { scheme: text, plus, hat, dot, json } => graph_command(&scheme(&text)?, plus, hat, dot, json),
        Command::Cg { tree, p, json } => {
            let raw = std::fs::read_to_string(&tree).map_err(|e| Failure::Other(format!("{}: {e}", tree.display())))?;
            let input: CgInput =
                serde_json::from_str(&raw).map_err(|e| Failure::Other(format!("{}: {e}", tree.display())))?;
            let p = p.or(input.p).ok_or_else(|| Failure::Other("no prime given (--p or \"p\" in the file)".into()))?;
            let g = PlumbingTree::new(&input.weights, &input.edges, &[])?;
            let inv = cg_sigma_eta(&g, &input.charvec, p)?;
            Ok(if json {
                to_json(&json!({ "p": p, "sigma": format_rational(&inv.sigma), "eta": inv.eta }))
            } else {
                format!("sigma = {}, eta = {}\n", format_rational(&inv.sigma), inv.eta)
            })
        }
        Command::Linking { scheme: text, json } => {
            let g = build_gamma(&scheme(&text)?);
            let m = linking_matrix(&g)?;
            let labels: Vec<String> = g.vertices().iter().map(|v| v.role.label()).collect();
            Ok(if json {
                to_json(&json!({ "labels": labels, "matrix": rational_rows(&m) }))
            } else {
                matrix_text(&labels, &rational_rows(&m))
            })
        }
    }
}

fn rational_rows(m: &RatMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(format_rational).collect()).collect()
}

fn matrix_text(labels: &[String], rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().chain(labels).map(|s| s.chars().count()).max().unwrap_or(1);
    let mut t = String::new();
    t.push_str(&format!("{:>w$}", "", w = width));
    for l in labels {
        t.push_str(&format!(" {l:>width$}"));
    }
    t.push('\n');
    for (l, row) in labels.iter().zip(rows) {
        t.push_str(&format!("{l:>width$}"));
        for x in row {
            t.push_str(&format!(" {x:>width$}"));
        }
        t.push('\n');
    }
    t
}

fn graph_command(s: &ComplexScheme, plus: bool, hat: bool, dot: bool, json: bool) -> Out {
    let gamma = build_gamma(s);
    let tree = if plus {
        build_gamma_plus(&gamma)
    } else if hat {
        build_gamma_hat(s)
    } else {
        gamma.clone()
    };
    if dot {
        return Ok(tree.to_dot());
    }

    // Characteristic data is taken from the tree that still carries arrows.
    let source = if hat { &tree } else { &gamma };
    let ld = link_data(source)?;
    let two = Rational::from_integer(2.into());
    let c: Vec<String> = ld.u.iter().map(|u| format_rational(&(u * &two))).collect();
    let delta = format_rational(&(&ld.delta * &two));
    let a = plumbing_matrix(&tree).rows();
    let c_plus = if plus { Some(Curve::new(s)?.c_plus().to_vec()) } else { None };

    if json {
        return Ok(to_json(&json!({
            "tree": tree.to_json(),
            "matrix": a,
            "s": ld.s,
            "delta": delta,
            "c": c,
            "c_plus": c_plus,
        })));
    }
    let mut t = String::new();
    for v in tree.vertices() {
        t.push_str(&format!("vertex {} {} weight {}\n", v.id, v.role.label(), v.weight));
    }
    for (x, y) in tree.edges() {
        t.push_str(&format!("edge {x} {y}\n"));
    }
    for ar in tree.arrows() {
        let sign = if ar.sign > 0 { "+" } else { "-" };
        match ar.head {
            Some(h) => t.push_str(&format!("arrow {} {sign} head {h}\n", ar.tail)),
            None => t.push_str(&format!("arrow {} {sign}\n", ar.tail)),
        }
    }
    t.push_str("A =\n");
    for row in &a {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
        t.push_str(&format!("  [{}]\n", cells.join(" ")));
    }
    t.push_str(&format!("s = {:?}\n", ld.s));
    t.push_str(&format!("delta = {delta}\n"));
    t.push_str(&format!("c = [{}]\n", c.join(", ")));
    if let Some(cp) = c_plus {
        t.push_str(&format!("c+ = {cp:?}\n"));
    }
    Ok(t)
}

fn report_text(r: &ProhibitionReport) -> String {
    let verdict = match r.verdict {
        Verdict::NotProhibited => "not prohibited",
        Verdict::Prohibited => "prohibited",
        Verdict::ParityMismatch => "parity mismatch (type does not match degree)",
    };
    let mut t = format!(
        "scheme: {}\ndegree: {}\nrohlin-mishachev: {}\nverdict: {verdict}\n",
        r.scheme,
        r.m,
        if r.rm_pass { "pass" } else { "fail" }
    );
    if let Some(w) = r.witness {
        t.push_str(&format!(
            "witness: p = {}, b = {}, sig = {}, eta = {}, |sig| + eta = {} > {}\n",
            w.p,
            w.b,
            w.sig,
            w.eta,
            w.sig.abs() + w.eta,
            w.bound
        ));
    }
    t
}
