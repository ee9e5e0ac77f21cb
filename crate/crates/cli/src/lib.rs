//! The `seesaw` command-line front-end.
//!
//! [`run`] parses arguments, dispatches to one library call and writes text
//! or JSON. Exit codes: 0 success, 1 usage error, 2 domain error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use seesaw_core::characters::{self, render_series};
use seesaw_core::glhat::{tensor_labels, Category, CategoryLabel};
use seesaw_core::lr::{rational_multiplicity, restrict};
use seesaw_core::winfinity::{canonicalize, exponents, is_isomorphic, tensor_w, PrimitiveWModule};
use seesaw_core::{EnumerationBox, Error, GeneralizedPartition, Partition, Sign};

pub mod schema;

use schema::*;

pub const DEFAULT_BOX: u32 = 3;
pub const DEFAULT_ORDER: usize = 12;
pub const DEFAULT_WINDOW: u32 = 2;

#[derive(Parser, Debug)]
#[command(name = "seesaw", version, about = "Tensor products of gl-infinity and W(1+infinity) modules")]
pub struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// TOML file with defaults for `box`, `order` and `window`.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct BoxArg {
    /// Symmetric enumeration window `[-B, B]` for output labels.
    #[arg(long = "box")]
    pub bx: Option<u32>,
}

#[derive(Args, Debug)]
pub struct OrderArg {
    /// Truncation degree in q.
    #[arg(long)]
    pub order: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Littlewood-Richardson coefficient C^lam_{mu,nu}.
    Lr {
        #[arg(long)]
        lam: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Restriction from GL(M+N) to GL(M) x GL(N).
    Restrict {
        #[arg(long)]
        lam: GeneralizedPartition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Tensor product in the category +, - or f.
    TensorGl {
        #[arg(long, allow_hyphen_values = true)]
        sign: Category,
        #[arg(long)]
        mu: GeneralizedPartition,
        #[arg(long)]
        nu: GeneralizedPartition,
        #[command(flatten)]
        bx: BoxArg,
    },
    /// Tensor product of primitive W(1+infinity) modules.
    TensorW {
        #[arg(long)]
        a: PrimitiveWModule,
        #[arg(long)]
        b: PrimitiveWModule,
        #[command(flatten)]
        bx: BoxArg,
    },
    /// Exponents and multiplicities of a primitive module.
    Exponents {
        #[arg(long)]
        m: PrimitiveWModule,
    },
    /// Taylor coefficients xi_0 .. xi_K of the highest weight.
    Xi {
        #[arg(long)]
        m: PrimitiveWModule,
        #[arg(long, default_value_t = 10)]
        upto: usize,
    },
    /// Whether two module literals describe isomorphic modules.
    Iso {
        #[arg(long)]
        a: PrimitiveWModule,
        #[arg(long)]
        b: PrimitiveWModule,
    },
    /// Branching function of lam in the Fock space of its width.
    Char {
        #[arg(long)]
        lam: GeneralizedPartition,
        #[arg(long, allow_hyphen_values = true)]
        sign: Sign,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Graded duality check of one Fock space.
    FockVerify {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        sign: Sign,
        #[command(flatten)]
        order: OrderArg,
        /// Bound on the total charge of the sectors checked.
        #[arg(long)]
        window: Option<u32>,
    },
    /// Character check of a tensor product of two labels.
    TensorChar {
        #[arg(long)]
        mu: GeneralizedPartition,
        #[arg(long)]
        nu: GeneralizedPartition,
        #[arg(long, allow_hyphen_values = true)]
        sign: Sign,
        #[command(flatten)]
        order: OrderArg,
        /// Largest box tried before giving up.
        #[arg(long, default_value_t = 24)]
        cap: u32,
    },
}

/// Optional defaults read from `--config`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(rename = "box")]
    pub bx: Option<u32>,
    pub order: Option<usize>,
    pub window: Option<u32>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(&'static str, String),
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        let e = e.into();
        Failure::Domain(e.name(), e.to_string())
    }
}

/// Runs one invocation, writing the payload to `out` and diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Domain(name, msg)) => {
            let _ = writeln!(err, "{name}: {msg}");
            2
        }
    }
}

fn load_config(cli: &Cli) -> Result<Config, Failure> {
    let Some(path) = &cli.config else {
        return Ok(Config::default());
    };
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("payload serializes");
    s.push('\n');
    s
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn parse_label(s: &str) -> Result<GeneralizedPartition, Failure> {
    Ok(s.parse::<GeneralizedPartition>()?)
}

fn dispatch(cli: &Cli) -> Result<String, Failure> {
    let config = load_config(cli)?;
    let bx_of = |b: &BoxArg| EnumerationBox::symmetric(b.bx.or(config.bx).unwrap_or(DEFAULT_BOX));
    let order_of = |o: &OrderArg| o.order.or(config.order).unwrap_or(DEFAULT_ORDER);

    match &cli.command {
        Command::Lr { lam, mu, nu } => {
            // plain partitions are padded to the needed width
            let (l, m, n) = if [lam, mu, nu].iter().any(|s| s.contains(':')) {
                (parse_label(lam)?, parse_label(mu)?, parse_label(nu)?)
            } else {
                let (pl, pm, pn) = (lam.parse::<Partition>()?, mu.parse::<Partition>()?, nu.parse::<Partition>()?);
                let (wm, wn) = (pm.len(), pn.len());
                (pl.to_generalized(pl.len().max(wm + wn))?, pm.to_generalized(wm)?, pn.to_generalized(pl.len().max(wm + wn) - wm)?)
            };
            let c = rational_multiplicity(&l, &m, &n)?;
            if cli.json {
                Ok(json(&LrJson { lam: l.parts().to_vec(), mu: m.parts().to_vec(), nu: n.parts().to_vec(), coefficient: c }))
            } else {
                Ok(format!("{c}\n"))
            }
        }
        Command::Restrict { lam, m, n } => {
            let terms = restrict(lam, *m, *n)?;
            if cli.json {
                Ok(json(&RestrictJson {
                    lam: lam.parts().to_vec(),
                    m: *m,
                    n: *n,
                    terms: terms
                        .iter()
                        .map(|t| RestrictTermJson { mu: t.mu.parts().to_vec(), nu: t.nu.parts().to_vec(), mult: t.mult })
                        .collect(),
                }))
            } else {
                Ok(lines(terms.iter().map(|t| format!("{} * {} x{}", t.mu.tuple(), t.nu.tuple(), t.mult))))
            }
        }
        Command::TensorGl { sign, mu, nu, bx } => {
            let a = CategoryLabel { category: *sign, lam: mu.clone() };
            let b = CategoryLabel { category: *sign, lam: nu.clone() };
            let d = tensor_labels(&a, &b, bx_of(bx))?;
            if cli.json {
                Ok(json(&d.to_json()))
            } else {
                Ok(lines(d.terms.iter().map(|(lam, m)| format!("{} x{m}", lam.tuple()))))
            }
        }
        Command::TensorW { a, b, bx } => {
            let d = tensor_w(&canonicalize(a)?, &canonicalize(b)?, bx_of(bx))?;
            if cli.json {
                Ok(json(&d.to_json()))
            } else {
                Ok(lines(d.terms.iter().map(|(m, k)| format!("{m} x{k}"))))
            }
        }
        Command::Exponents { m } => {
            let e = exponents(&canonicalize(m)?);
            if cli.json {
                Ok(json(&ExponentsJson {
                    charge: e.charge(),
                    exponents: e.entries().iter().map(|(r, &mult)| ExponentJson { r: r.to_string(), mult }).collect(),
                }))
            } else {
                let mut out = vec![format!("c = {}", e.charge())];
                out.extend(e.entries().iter().map(|(r, m)| format!("{r} x{m}")));
                Ok(lines(out))
            }
        }
        Command::Xi { m, upto } => {
            let e = exponents(&canonicalize(m)?);
            let xi = e.delta().xi(*upto);
            if cli.json {
                Ok(json(&XiJson { charge: e.charge(), xi: xi.iter().map(ToString::to_string).collect() }))
            } else {
                Ok(lines(xi.iter().enumerate().map(|(n, x)| format!("xi_{n} = {x}"))))
            }
        }
        Command::Iso { a, b } => {
            let iso = is_isomorphic(a, b)?;
            if cli.json {
                Ok(json(&IsoJson { a: canonicalize(a)?.to_string(), b: canonicalize(b)?.to_string(), isomorphic: iso }))
            } else {
                Ok(format!("{iso}\n"))
            }
        }
        Command::Char { lam, sign, order } => {
            let b = characters::branching_function(lam, *sign, order_of(order))?;
            if cli.json {
                Ok(json(&CharJson { sign: *sign, order: order_of(order), lam: lam.parts().to_vec(), series: b.series }))
            } else {
                Ok(format!("{}\n", b.render()))
            }
        }
        Command::FockVerify { n, sign, order, window } => {
            let window = window.or(config.window).unwrap_or(DEFAULT_WINDOW);
            let r = characters::verify_duality(*n, *sign, order_of(order), window)?;
            let text = if cli.json {
                json(&FockJson {
                    n: r.n,
                    sign: r.sign,
                    order: r.order,
                    window: r.window,
                    residual_terms: r.residual_terms.clone(),
                    passed: r.passed(),
                    labels: r
                        .branching
                        .iter()
                        .map(|(lam, s)| SeriesJson { lam: lam.parts().to_vec(), series: s.clone() })
                        .collect(),
                })
            } else {
                let mut out: Vec<String> =
                    r.branching.iter().map(|(lam, s)| format!("{}: {}", lam.tuple(), render_series(s))).collect();
                let nonzero: usize = r.residual_terms.iter().sum();
                out.push(format!("residual = {nonzero}"));
                lines(out)
            };
            if r.passed() {
                Ok(text)
            } else {
                Err(Failure::Domain("DualityFailed", format!("mismatches {:?}", r.mismatches)))
            }
        }
        Command::TensorChar { mu, nu, sign, order, cap } => {
            let order = order_of(order);
            let r = characters::verify_tensor_characters(mu, nu, *sign, order, 0, *cap)?;
            let text = if cli.json {
                json(&TensorCharJson {
                    mu: mu.parts().to_vec(),
                    nu: nu.parts().to_vec(),
                    sign: *sign,
                    order,
                    bx: r.bx,
                    lhs: r.lhs.clone(),
                    terms: r
                        .terms
                        .iter()
                        .map(|t| TensorCharTermJson { lam: t.lam.parts().to_vec(), mult: t.mult, series: t.series.clone() })
                        .collect(),
                    residual: r.residual.clone(),
                })
            } else {
                let mut out = vec![format!("box = [{}, {}]", r.bx.lo, r.bx.hi), format!("lhs = {}", render_series(&r.lhs))];
                out.extend(r.terms.iter().map(|t| format!("{} x{}: {}", t.lam.tuple(), t.mult, render_series(&t.series))));
                out.push(format!("residual = {}", render_series(&r.residual)));
                lines(out)
            };
            if r.passed() {
                Ok(text)
            } else {
                Err(Failure::Domain("ResidualNonzero", render_series(&r.residual)))
            }
        }
    }
}
